//! The partial action `θ` of each group on its space, evaluated exactly on
//! clopen sets.
//!
//! `θ_t` is a homeomorphism from `X_{t⁻¹}` onto `X_t`. [`PartialSystem::domain`]
//! returns `X_{t⁻¹}`, [`PartialSystem::range`] returns `X_t`.
//!
//! * Path space: the unique semisaturated action of `Fₙ` with
//!   `θ_{g_i}(μ) = g_i μ` on `{μ : A(i, μ₁) = 1}`. A reduced word `μν⁻¹`
//!   acts by `νρ ↦ μρ`; words of any other shape have empty domain.
//! * n-adic: `θ_{(r,k)}(x) = x/nᵏ + r`, restricted to where both sides lie in
//!   `[0, 1]`. The map preserves orientation, so `±` sides are preserved.
//! * Residue: `θ_{(u,w)}(x) = u + w x` on the profinite completion of `ℤ`.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{g_inv, n_pow, nadic_exponent, Group, GroupElem};
use crate::space::{AdjacencyMatrix, Cell, ClopenSet, ResidueCell, Space, SpaceKind, Word};
use crate::Q;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSystem {
    space: Space,
    group: Group,
}

impl PartialSystem {
    pub fn path_space(matrix: AdjacencyMatrix) -> Self {
        let rank = matrix.size() as u32;
        PartialSystem { space: Space::path_space(matrix), group: Group::Free { rank } }
    }

    pub fn nadic(n: u32) -> Result<Self> {
        Ok(PartialSystem { space: Space::nadic(n)?, group: Group::NAdic { n } })
    }

    pub fn residue(positive_only: bool) -> Self {
        PartialSystem { space: Space::residue(), group: Group::Affine { positive_only } }
    }

    pub fn with_max_cells(mut self, max_cells: usize) -> Self {
        self.space = self.space.with_max_cells(max_cells);
        self
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn identity(&self) -> GroupElem {
        self.group.identity()
    }

    /// `X_{t⁻¹}`, the domain of `θ_t`.
    pub fn domain(&self, t: &GroupElem) -> Result<ClopenSet> {
        self.group.check(t)?;
        if t.is_identity() {
            return Ok(self.space.whole());
        }
        match (self.space.kind(), t) {
            (SpaceKind::PathSpace(a), GroupElem::Free(w)) => {
                let Some((mu, nu)) = w.split() else {
                    return Ok(self.space.empty());
                };
                path_domain(&self.space, a, &mu, &nu)
            }
            (SpaceKind::NAdic { n }, GroupElem::NAdic(e)) => {
                // x ∈ [0,1] and x/nᵏ + r ∈ [0,1]
                let scale = n_pow(*n, e.k());
                let lo = (-e.r() * scale).max(Q::zero());
                let hi = ((Q::from_integer(1) - e.r()) * scale).min(Q::from_integer(1));
                nadic_interval(&self.space, *n, lo, hi)
            }
            (SpaceKind::Residue, GroupElem::Affine(e)) => {
                let cell = residue_domain(e.u(), e.w());
                self.space.canonicalize(cell.map(Cell::Residue))
            }
            _ => Err(Error::GroupMismatch(format!("{t} does not act on {}", self.space.model()))),
        }
    }

    /// `X_t`, the range of `θ_t`.
    pub fn range(&self, t: &GroupElem) -> Result<ClopenSet> {
        self.domain(&g_inv(t))
    }

    /// The image `θ_t(S)`; `S` must lie inside the domain of `θ_t`.
    pub fn apply(&self, t: &GroupElem, s: &ClopenSet) -> Result<ClopenSet> {
        let dom = self.domain(t)?;
        if !self.space.is_subset(s, &dom)? {
            let outside = self.space.difference(s, &dom)?;
            return Err(Error::Precondition(format!(
                "set is not inside the domain of θ_{{{t}}}; first cell outside: {}",
                outside.cells()[0]
            )));
        }
        if t.is_identity() || s.is_empty() {
            return Ok(s.clone());
        }
        let mut image = Vec::new();
        match (self.space.kind(), t) {
            (SpaceKind::PathSpace(_), GroupElem::Free(w)) => {
                let (mu, nu) = w.split().expect("nonempty domain implies μν⁻¹ shape");
                let depth = nu.len() + 1;
                for cell in s.cells() {
                    for c in self.at_least(cell, depth as u64)? {
                        let Cell::Path(x) = c else { unreachable!() };
                        debug_assert!(x.starts_with(&nu));
                        let mut y = mu.clone();
                        y.extend_from_slice(&x[nu.len()..]);
                        image.push(Cell::Path(y));
                    }
                }
            }
            (SpaceKind::NAdic { n }, GroupElem::NAdic(e)) => {
                let j = nadic_exponent(*e.r().denom(), *n).expect("validated n-adic element") as i64;
                let need = (-e.k()).max(j - e.k()).max(0);
                for cell in s.cells() {
                    for c in self.at_least(cell, need as u64)? {
                        let (p, level) = self.space.nadic_coords(&c)?;
                        let new_level = level as i64 + e.k();
                        let shift = e.r() * n_pow(*n, new_level);
                        debug_assert!(shift.is_integer());
                        let p2 = p as i128 + shift.to_integer();
                        let p2 = u128::try_from(p2).map_err(|_| Error::Internal("n-adic image left [0,1]".into()))?;
                        image.push(self.space.nadic_cell(p2, new_level as u32)?);
                    }
                }
            }
            (SpaceKind::Residue, GroupElem::Affine(e)) => {
                let b = *e.w().denom();
                let a = e.w().numer().abs();
                for cell in s.cells() {
                    let Cell::Residue(rc) = cell else { unreachable!() };
                    let m = rc.modulus() as i128;
                    let m2 = m.lcm(&b);
                    let sub = self.space.refine(&self.space.cell_set(cell.clone())?, m2 as u64)?;
                    for c in sub {
                        let Cell::Residue(rc) = c else { unreachable!() };
                        let target = e.u() + e.w() * Q::from_integer(rc.residue() as i128);
                        if !target.is_integer() {
                            return Err(Error::Internal("residue image is not integral".into()));
                        }
                        let modulus = a * (m2 / b);
                        let r = target.to_integer().rem_euclid(modulus);
                        image.push(Cell::Residue(ResidueCell::new(modulus as u64, r as u64)?));
                    }
                }
            }
            _ => unreachable!("domain() already checked the pairing"),
        }
        self.space.budget(image.len())?;
        self.space.canonicalize(image)
    }

    /// The cells of `{cell}` refined to at least `level` (word depth).
    fn at_least(&self, cell: &Cell, level: u64) -> Result<Vec<Cell>> {
        let depth = cell.word().map_or(0, |w| w.len() as u64);
        if depth >= level {
            Ok(vec![cell.clone()])
        } else {
            self.space.refine(&self.space.cell_set(cell.clone())?, level)
        }
    }

    /// A cell `c ⊆ K` witnessing that `θ_t` moves part of `K`: either
    /// `c ⊆ X_{t⁻¹}` with `θ_t(c) ∩ c = ∅`, or `c` disjoint from `X_{t⁻¹}`.
    ///
    /// Cells are searched level by level (word depth `0..=depth` for the prefix
    /// models, modulus `1..=depth` for the residue model) in canonical order;
    /// the first hit is returned.
    pub fn separating_cell(&self, t: &GroupElem, k: &ClopenSet, depth: u64) -> Result<Option<Cell>> {
        self.group.check(t)?;
        if t.is_identity() {
            return Err(Error::Precondition("separating_cell needs t ≠ e".into()));
        }
        if k.is_empty() {
            return Err(Error::EmptySet);
        }
        let dom = self.domain(t)?;
        let levels: Vec<u64> = match self.space.model() {
            crate::space::Model::Residue => (1..=depth.max(1)).collect(),
            _ => (0..=depth).collect(),
        };
        for level in levels {
            for cell in self.space.cells_at_level(level)? {
                let c = self.space.cell_set(cell.clone())?;
                if !self.space.is_subset(&c, k)? {
                    continue;
                }
                if self.space.is_disjoint(&c, &dom)? {
                    return Ok(Some(cell));
                }
                if self.space.is_subset(&c, &dom)? {
                    let img = self.apply(t, &c)?;
                    if self.space.is_disjoint(&img, &c)? {
                        return Ok(Some(cell));
                    }
                }
            }
        }
        Ok(None)
    }
}

fn path_domain(space: &Space, a: &AdjacencyMatrix, mu: &Word, nu: &Word) -> Result<ClopenSet> {
    if !a.is_admissible(mu) || !a.is_admissible(nu) {
        return Ok(space.empty());
    }
    let Some(&last_mu) = mu.last() else {
        return space.canonicalize([Cell::Path(nu.clone())]);
    };
    let mut cells = Vec::new();
    for j in a.successors(last_mu as usize) {
        let mut w = nu.clone();
        w.push(j as u32);
        if a.is_admissible(&w) {
            cells.push(Cell::Path(w));
        }
    }
    space.canonicalize(cells)
}

/// `[lo⁺, hi⁻]` as a union of n-adic cells; empty when `lo ≥ hi`.
fn nadic_interval(space: &Space, n: u32, lo: Q, hi: Q) -> Result<ClopenSet> {
    if lo >= hi {
        return Ok(space.empty());
    }
    let exp = |x: &Q| nadic_exponent(*x.denom(), n).expect("n-adic endpoint");
    let level = exp(&lo).max(exp(&hi));
    let scale = n_pow(n, level as i64);
    let mut a = (lo * scale).to_integer();
    let b = (hi * scale).to_integer();
    let n = n as i128;
    let mut cells = Vec::new();
    while a < b {
        // Largest aligned block starting at `a` that fits.
        let mut j = 0u32;
        while j < level && a % n.pow(j + 1) == 0 && a + n.pow(j + 1) <= b {
            j += 1;
        }
        cells.push(space.nadic_cell((a / n.pow(j)) as u128, level - j)?);
        a += n.pow(j);
        space.budget(cells.len())?;
    }
    space.canonicalize(cells)
}

/// `X_{(u,w)⁻¹}`: the class `x ≡ x₀ (mod b)` for `w = ±a/b`, provided `u b ∈ ℤ`.
fn residue_domain(u: Q, w: Q) -> Option<ResidueCell> {
    let b = *w.denom();
    let ub = u * Q::from_integer(b);
    if !ub.is_integer() {
        return None;
    }
    let signed_a = *w.numer();
    let inv = crate::space::mod_inverse(signed_a, b)?;
    let x0 = (-ub.to_integer() * inv).rem_euclid(b);
    ResidueCell::new(b as u64, x0 as u64).ok()
}
