//! Residue classes of the profinite completion of ℤ.
//!
//! For `w = a/b` in lowest terms, `(ℤ + (w))/(w) = (1/b)ℤ / (a/b)ℤ ≅ ℤ/aℤ`
//! through multiplication by `b`, and the coordinate at `w` is a bijective
//! function of the coordinate at the integer `a`. Every cell is therefore
//! stored with an integer modulus.

use num_integer::Integer;

use super::Space;
use crate::error::{Error, Result};

/// `{x : x ≡ residue (mod modulus)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueCell {
    modulus: u64,
    residue: u64,
}

impl ResidueCell {
    pub const WHOLE: ResidueCell = ResidueCell { modulus: 1, residue: 0 };

    pub fn new(modulus: u64, residue: u64) -> Result<Self> {
        if modulus == 0 || residue >= modulus {
            return Err(Error::InvalidCell(format!("C({modulus},{residue})")));
        }
        Ok(ResidueCell { modulus, residue })
    }

    /// `{x : x_w ≡ c/b mod (w)}` with `w = a/b`.
    pub fn from_rational_modulus(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidCell(format!("modulus {a}/{b} is not positive")));
        }
        if a.gcd(&b) != 1 {
            return Err(Error::InvalidCell(format!("modulus {a}/{b} is not in lowest terms")));
        }
        if c >= a {
            return Err(Error::InvalidCell(format!("residue {c} is not below {a}")));
        }
        let b_inv = mod_inverse(b as i128 % a as i128, a as i128)
            .ok_or_else(|| Error::Internal("coprime modulus has no inverse".into()))?;
        let r = (c as i128 * b_inv).rem_euclid(a as i128) as u64;
        Self::new(a, r)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn contains(&self, x: i128) -> bool {
        x.rem_euclid(self.modulus as i128) == self.residue as i128
    }
}

pub(crate) fn mod_inverse(x: i128, m: i128) -> Option<i128> {
    if m == 1 {
        return Some(0);
    }
    let e = x.rem_euclid(m).extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

/// Membership table of a union of cells over a common modulus.
struct Table {
    modulus: u64,
    bits: Vec<bool>,
}

impl Table {
    fn new(space: &Space, modulus: u64) -> Result<Self> {
        space.budget(modulus as usize)?;
        Ok(Table { modulus, bits: vec![false; modulus as usize] })
    }

    fn fill(space: &Space, cells: &[ResidueCell], modulus: u64) -> Result<Self> {
        let mut t = Table::new(space, modulus)?;
        for c in cells {
            debug_assert_eq!(modulus % c.modulus, 0);
            let mut x = c.residue;
            while x < modulus {
                t.bits[x as usize] = true;
                x += c.modulus;
            }
        }
        Ok(t)
    }

    fn cells(&self) -> Vec<ResidueCell> {
        canonical(self.modulus, &self.bits)
    }
}

fn lcm_of<'a>(cells: impl IntoIterator<Item = &'a ResidueCell>) -> Result<u64> {
    let mut l: u64 = 1;
    for c in cells {
        let g = l.gcd(&c.modulus);
        l = (l / g).checked_mul(c.modulus).ok_or(Error::CellLimit { count: usize::MAX, limit: usize::MAX })?;
    }
    Ok(l)
}

pub(super) fn normalize(space: &Space, cells: &[ResidueCell]) -> Result<Vec<ResidueCell>> {
    if cells.is_empty() {
        return Ok(Vec::new());
    }
    let m = lcm_of(cells)?;
    Ok(Table::fill(space, cells, m)?.cells())
}

pub(super) fn intersect(space: &Space, a: &[ResidueCell], b: &[ResidueCell]) -> Result<Vec<ResidueCell>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let m = lcm_of(a.iter().chain(b))?;
    let ta = Table::fill(space, a, m)?;
    let tb = Table::fill(space, b, m)?;
    let bits = ta.bits.iter().zip(&tb.bits).map(|(x, y)| *x && *y).collect();
    Ok(Table { modulus: m, bits }.cells())
}

pub(super) fn complement(space: &Space, a: &[ResidueCell]) -> Result<Vec<ResidueCell>> {
    if a.is_empty() {
        return Ok(vec![ResidueCell::WHOLE]);
    }
    let m = lcm_of(a)?;
    let mut t = Table::fill(space, a, m)?;
    t.bits.iter_mut().for_each(|b| *b = !*b);
    Ok(t.cells())
}

pub(super) fn refine(space: &Space, cells: &[ResidueCell], modulus: u64) -> Result<Vec<ResidueCell>> {
    if modulus == 0 {
        return Err(Error::InvalidLevel("modulus 0".into()));
    }
    let mut out = Vec::new();
    for c in cells {
        if !modulus.is_multiple_of(c.modulus) {
            return Err(Error::InvalidLevel(format!("modulus {modulus} is not a multiple of {}", c.modulus)));
        }
        let mut x = c.residue;
        while x < modulus {
            out.push(ResidueCell { modulus, residue: x });
            space.budget(out.len())?;
            x += c.modulus;
        }
    }
    out.sort();
    Ok(out)
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        while m.is_multiple_of(p) {
            out.push(p);
            m /= p;
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Canonical cell decomposition of the set `{x : bits[x mod m]}`.
///
/// The set is first reduced to its least period `M`. Cells are then chosen
/// greedily over the divisors `d` of `M` in increasing order and residues in
/// increasing order, taking `C(d, r)` whenever it lies inside what is not yet
/// covered. A family of chosen cells can never be the complete split of a
/// coarser cell, because that coarser cell would have been taken first.
fn canonical(m: u64, bits: &[bool]) -> Vec<ResidueCell> {
    if !bits.iter().any(|&b| b) {
        return Vec::new();
    }
    let mut period = m;
    for p in prime_factors(m) {
        let q = period / p;
        if period.is_multiple_of(p) && (0..period).all(|x| bits[x as usize] == bits[(x % q) as usize]) {
            period = q;
        }
    }
    let mut left: Vec<bool> = bits[..period as usize].to_vec();
    let mut out = Vec::new();
    let divisors = (1..=period).filter(|d| period.is_multiple_of(*d));
    for d in divisors {
        for r in 0..d {
            let members = (r..period).step_by(d as usize);
            if members.clone().all(|x| left[x as usize]) {
                members.for_each(|x| left[x as usize] = false);
                out.push(ResidueCell { modulus: d, residue: r });
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(m: u64, rs: &[u64]) -> Vec<ResidueCell> {
        let mut bits = vec![false; m as usize];
        for &r in rs {
            bits[r as usize] = true;
        }
        canonical(m, &bits)
    }

    #[test]
    fn least_period_is_found() {
        assert_eq!(cells(12, &[0, 2, 4, 6, 8, 10]), vec![ResidueCell::new(2, 0).unwrap()]);
        assert_eq!(cells(12, &(0..12).collect::<Vec<_>>()), vec![ResidueCell::WHOLE]);
    }

    #[test]
    fn mixed_periods_pick_coarse_cells_first() {
        // {x ≡ 0 mod 2} ∪ {x ≡ 0 mod 3}
        let got = cells(6, &[0, 2, 3, 4]);
        assert_eq!(got, vec![ResidueCell::new(2, 0).unwrap(), ResidueCell::new(6, 3).unwrap()]);
    }

    #[test]
    fn inverse_mod() {
        assert_eq!(mod_inverse(3, 4), Some(3));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(mod_inverse(5, 1), Some(0));
    }
}
