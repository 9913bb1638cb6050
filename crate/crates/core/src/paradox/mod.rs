//! Paradoxical decompositions of clopen sets and their lift to properly
//! infinite projections.
//!
//! A witness for a nonempty clopen `V` is a list of pairs `(V_i, t_i)`,
//! `i = 1, …, n+m`, such that the first `n` and the last `m` sets each cover
//! `V`, `V_i ⊆ X_{t_i⁻¹}`, `θ_{t_i}(V_i) ⊆ V`, and the images are pairwise
//! disjoint.

mod lift;
mod search;

pub use lift::{verify_proper_infinite, witness_to_isometries, InfiniteVerdict, Isometries};
pub use search::{concatenate, conjugate, find_witness};

use crate::action::PartialSystem;
use crate::error::{Error, Result};
use crate::group::GroupElem;
use crate::space::{Cell, ClopenSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub set: ClopenSet,
    pub n: usize,
    pub m: usize,
    pub parts: Vec<(ClopenSet, GroupElem)>,
}

/// Which condition a witness violates, where, and the first offending cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub condition: &'static str,
    /// Zero-based index of the offending part, if the failure is local to one.
    pub part: Option<usize>,
    pub cell: Cell,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessVerdict {
    pub pass: bool,
    pub first_cover: bool,
    pub second_cover: bool,
    pub domains: bool,
    pub images_inside: bool,
    pub images_disjoint: bool,
    pub failure: Option<Failure>,
}

pub fn verify_witness(sys: &PartialSystem, w: &Witness) -> Result<WitnessVerdict> {
    let space = sys.space();
    if w.set.is_empty() {
        return Err(Error::EmptySet);
    }
    if w.n == 0 || w.m == 0 || w.parts.len() != w.n + w.m {
        return Err(Error::Precondition(format!(
            "witness has {} parts, expected n + m with n = {} and m = {} both positive",
            w.parts.len(),
            w.n,
            w.m
        )));
    }
    let mut failures: Vec<Failure> = Vec::new();
    let mut note = |condition, part, cell: &Cell| {
        failures.push(Failure { condition, part, cell: cell.clone() });
    };

    let mut covers = [true, true];
    for (half, range) in [(0, 0..w.n), (1, w.n..w.n + w.m)] {
        let union = w.parts[range].iter().try_fold(space.empty(), |acc, (s, _)| space.union(&acc, s))?;
        if union != w.set {
            covers[half] = false;
            let extra = space.difference(&union, &w.set)?;
            let missing = space.difference(&w.set, &union)?;
            let cell = extra.cells().first().or(missing.cells().first()).expect("sets differ");
            note(if half == 0 { "first_cover" } else { "second_cover" }, None, cell);
        }
    }

    let mut domains = true;
    let mut images_inside = true;
    let mut images: Vec<Option<ClopenSet>> = Vec::with_capacity(w.parts.len());
    for (i, (s, t)) in w.parts.iter().enumerate() {
        let dom = sys.domain(t)?;
        let outside = space.difference(s, &dom)?;
        if let Some(cell) = outside.cells().first() {
            domains = false;
            note("domains", Some(i), cell);
            images.push(None);
            continue;
        }
        let img = sys.apply(t, s)?;
        let escaped = space.difference(&img, &w.set)?;
        if let Some(cell) = escaped.cells().first() {
            images_inside = false;
            note("images_inside", Some(i), cell);
        }
        images.push(Some(img));
    }

    let mut images_disjoint = true;
    for k in 0..images.len() {
        for l in k + 1..images.len() {
            let (Some(a), Some(b)) = (&images[k], &images[l]) else { continue };
            let both = space.intersect(a, b)?;
            if let Some(cell) = both.cells().first() {
                images_disjoint = false;
                note("images_disjoint", Some(l), cell);
            }
        }
    }

    let pass = covers[0] && covers[1] && domains && images_inside && images_disjoint;
    Ok(WitnessVerdict {
        pass,
        first_cover: covers[0],
        second_cover: covers[1],
        domains,
        images_inside,
        images_disjoint,
        failure: failures.into_iter().next(),
    })
}
