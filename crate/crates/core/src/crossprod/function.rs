//! Rational-valued locally constant functions on a space.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::space::{Cell, ClopenSet, Space};
use crate::Q;

/// A locally constant function with finitely many nonzero values, stored as
/// its level sets. Level sets are canonical and pairwise disjoint, so equal
/// functions have equal representations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LCFunction {
    levels: BTreeMap<Q, ClopenSet>,
}

impl LCFunction {
    pub fn zero() -> Self {
        LCFunction::default()
    }

    pub fn indicator(set: &ClopenSet) -> Self {
        LCFunction::constant_on(set, Q::from_integer(1))
    }

    pub fn constant_on(set: &ClopenSet, v: Q) -> Self {
        let mut levels = BTreeMap::new();
        if !set.is_empty() && !v.is_zero() {
            levels.insert(v, set.clone());
        }
        LCFunction { levels }
    }

    /// Builds a function from `(cell, value)` pieces, which must be pairwise
    /// disjoint.
    pub fn from_pieces(space: &Space, pieces: impl IntoIterator<Item = (Cell, Q)>) -> Result<Self> {
        let mut by_value: BTreeMap<Q, Vec<Cell>> = BTreeMap::new();
        let mut seen = space.empty();
        for (cell, v) in pieces {
            let c = space.cell_set(cell.clone())?;
            if !space.is_disjoint(&seen, &c)? {
                return Err(Error::Precondition(format!("function pieces overlap at {cell}")));
            }
            seen = space.union(&seen, &c)?;
            if !v.is_zero() {
                by_value.entry(v).or_default().push(cell);
            }
        }
        Self::collect(space, by_value)
    }

    fn collect(space: &Space, by_value: BTreeMap<Q, Vec<Cell>>) -> Result<Self> {
        let mut levels = BTreeMap::new();
        for (v, cells) in by_value {
            if v.is_zero() {
                continue;
            }
            let set = space.canonicalize(cells)?;
            if !set.is_empty() {
                levels.insert(v, set);
            }
        }
        Ok(LCFunction { levels })
    }

    pub fn is_zero(&self) -> bool {
        self.levels.is_empty()
    }

    /// Nonzero values with their level sets, in increasing value order.
    pub fn levels(&self) -> impl Iterator<Item = (&Q, &ClopenSet)> {
        self.levels.iter()
    }

    /// `(cell, value)` pieces sorted by cell.
    pub fn pieces(&self) -> Vec<(Cell, Q)> {
        let mut out: Vec<(Cell, Q)> =
            self.levels.iter().flat_map(|(v, s)| s.cells().iter().map(move |c| (c.clone(), *v))).collect();
        out.sort();
        out
    }

    pub fn support(&self, space: &Space) -> Result<ClopenSet> {
        self.levels.values().try_fold(space.empty(), |acc, s| space.union(&acc, s))
    }

    pub fn sup_norm(&self) -> Q {
        self.levels.keys().map(Q::abs).max().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, q: Q) -> Self {
        if q.is_zero() {
            return LCFunction::zero();
        }
        LCFunction { levels: self.levels.iter().map(|(v, s)| (v * q, s.clone())).collect() }
    }

    /// Applies a set map to every level set; `map` must preserve disjointness.
    pub(crate) fn map_levels(&self, mut map: impl FnMut(&ClopenSet) -> Result<ClopenSet>) -> Result<Self> {
        let mut levels = BTreeMap::new();
        for (v, s) in &self.levels {
            let img = map(s)?;
            if !img.is_empty() {
                levels.insert(*v, img);
            }
        }
        Ok(LCFunction { levels })
    }

    pub fn add(&self, space: &Space, other: &LCFunction) -> Result<Self> {
        self.combine(space, other, true)
    }

    pub fn mul(&self, space: &Space, other: &LCFunction) -> Result<Self> {
        self.combine(space, other, false)
    }

    pub fn restrict(&self, space: &Space, set: &ClopenSet) -> Result<Self> {
        self.map_levels(|s| space.intersect(s, set))
    }

    fn combine(&self, space: &Space, other: &LCFunction, add: bool) -> Result<Self> {
        if other.is_zero() {
            return Ok(if add { self.clone() } else { LCFunction::zero() });
        }
        if self.is_zero() {
            return Ok(if add { other.clone() } else { LCFunction::zero() });
        }
        let mut by_value: BTreeMap<Q, Vec<Cell>> = BTreeMap::new();
        for (a, sa) in &self.levels {
            for (b, sb) in &other.levels {
                let both = space.intersect(sa, sb)?;
                let v = if add { a + b } else { a * b };
                by_value.entry(v).or_default().extend(both.cells().iter().cloned());
            }
        }
        if add {
            let sup_self = self.support(space)?;
            let sup_other = other.support(space)?;
            for (a, sa) in &self.levels {
                let only = space.difference(sa, &sup_other)?;
                by_value.entry(*a).or_default().extend(only.cells().iter().cloned());
            }
            for (b, sb) in &other.levels {
                let only = space.difference(sb, &sup_self)?;
                by_value.entry(*b).or_default().extend(only.cells().iter().cloned());
            }
        }
        Self::collect(space, by_value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::AdjacencyMatrix;

    #[test]
    fn sums_merge_level_sets() {
        let s = Space::path_space(AdjacencyMatrix::full(2).unwrap());
        let z1 = s.cell_set(Cell::Path(vec![0])).unwrap();
        let z2 = s.cell_set(Cell::Path(vec![1])).unwrap();
        let f = LCFunction::indicator(&z1).add(&s, &LCFunction::indicator(&z2)).unwrap();
        assert_eq!(f, LCFunction::indicator(&s.whole()));
        let g = f.add(&s, &LCFunction::constant_on(&z1, Q::from_integer(-1))).unwrap();
        assert_eq!(g, LCFunction::indicator(&z2));
        assert!(g.mul(&s, &LCFunction::indicator(&z1)).unwrap().is_zero());
    }

    #[test]
    fn overlapping_pieces_are_rejected() {
        let s = Space::nadic(2).unwrap();
        let one = Q::from_integer(1);
        let pieces = [(s.nadic_cell(0, 1).unwrap(), one), (s.nadic_cell(2, 2).unwrap(), one)];
        assert!(LCFunction::from_pieces(&s, pieces).is_ok());
        let pieces = [(s.nadic_cell(0, 1).unwrap(), one), (s.nadic_cell(0, 2).unwrap(), one)];
        assert!(LCFunction::from_pieces(&s, pieces).is_err());
    }
}
