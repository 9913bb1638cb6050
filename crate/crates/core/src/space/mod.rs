//! Clopen subsets of the three compact, totally disconnected spaces the
//! library knows about.
//!
//! * **Path space** of a `{0,1}` adjacency matrix `A`: infinite admissible
//!   sequences of vertices. Basic cells are cylinders `Z(μ)`.
//! * **n-adic Cantor set**: `[0,1]` with every interior n-adic rational
//!   doubled into `r⁻ < r⁺`. Basic cells are `[(p/nᵏ)⁺, ((p+1)/nᵏ)⁻]`, which
//!   are stored as the base-`n` digit word of `p` of length `k`.
//! * **Residue space** for `R = ℤ`: compatible families of residues, which is
//!   the profinite completion of `ℤ`. Basic cells are residue classes
//!   `{x : x ≡ r mod M}`.
//!
//! Every [`ClopenSet`] is kept in a canonical form (pairwise disjoint,
//! maximally merged, sorted), so two sets are equal exactly when their
//! representations are identical.

mod prefix;
mod residue;

use std::fmt;

use crate::error::{Error, Result};

pub(crate) use residue::mod_inverse;
pub use residue::ResidueCell;

/// A finite word of vertices (path space) or base-`n` digits (n-adic model).
/// Letters are zero based; they print one based for path words.
pub type Word = Vec<u32>;

/// Default cap on the number of cells an intermediate computation may create.
pub const DEFAULT_MAX_CELLS: usize = 100_000;

/// Square `{0,1}` matrix with no zero rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdjacencyMatrix {
    n: usize,
    entries: Vec<bool>,
}

impl AdjacencyMatrix {
    pub fn new<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("matrix has no rows".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            for &a in row {
                match a {
                    0 => entries.push(false),
                    1 => entries.push(true),
                    _ => return Err(Error::InvalidMatrix(format!("entry {a} is not 0 or 1"))),
                }
            }
            if row.iter().all(|&a| a == 0) {
                return Err(Error::InvalidMatrix(format!("row {} is zero", i + 1)));
            }
        }
        Ok(AdjacencyMatrix { n, entries })
    }

    /// The all-ones matrix, whose path space is the full shift on `n` letters.
    pub fn full(n: usize) -> Result<Self> {
        Self::new(&vec![vec![1u8; n]; n])
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.n + j]
    }

    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.get(i, j))
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.successors(i).count()
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) as u8).collect()).collect()
    }

    pub fn is_admissible(&self, word: &[u32]) -> bool {
        word.iter().all(|&v| (v as usize) < self.n) && word.windows(2).all(|p| self.get(p[0] as usize, p[1] as usize))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    PathSpace,
    NAdic,
    Residue,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::PathSpace => "pathspace",
            Model::NAdic => "nadic",
            Model::Residue => "residue",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A basic compact-open set of one of the three models.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    /// Cylinder `Z(μ)`; the empty word is the whole space.
    Path(Word),
    /// `[(p/nᵏ)⁺, ((p+1)/nᵏ)⁻]`, stored as the `k` base-`n` digits of `p`.
    NAdic(Word),
    Residue(ResidueCell),
}

impl Cell {
    pub fn model(&self) -> Model {
        match self {
            Cell::Path(_) => Model::PathSpace,
            Cell::NAdic(_) => Model::NAdic,
            Cell::Residue(_) => Model::Residue,
        }
    }

    pub(crate) fn word(&self) -> Option<&Word> {
        match self {
            Cell::Path(w) | Cell::NAdic(w) => Some(w),
            Cell::Residue(_) => None,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Path(w) => write!(f, "Z({})", path_word_string(w)),
            Cell::NAdic(w) => {
                write!(f, "[{}]", w.iter().map(u32::to_string).collect::<Vec<_>>().join(""))
            }
            Cell::Residue(c) => write!(f, "C({},{})", c.modulus(), c.residue()),
        }
    }
}

/// One-based, dot separated rendering of a path word (`""` for the empty word).
pub fn path_word_string(w: &[u32]) -> String {
    w.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(".")
}

/// A canonical finite disjoint union of cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClopenSet {
    model: Model,
    cells: Vec<Cell>,
}

impl ClopenSet {
    pub fn model(&self) -> Model {
        self.model
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }
}

impl fmt::Display for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.cells.iter().map(Cell::to_string).collect();
        f.write_str(&parts.join(" ⊔ "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceKind {
    PathSpace(AdjacencyMatrix),
    NAdic { n: u32 },
    Residue,
}

/// A space model together with the cap on intermediate cell counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Space {
    kind: SpaceKind,
    max_cells: usize,
}

impl Space {
    pub fn path_space(matrix: AdjacencyMatrix) -> Self {
        Space { kind: SpaceKind::PathSpace(matrix), max_cells: DEFAULT_MAX_CELLS }
    }

    pub fn nadic(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("n-adic model needs n >= 2, got {n}")));
        }
        Ok(Space { kind: SpaceKind::NAdic { n }, max_cells: DEFAULT_MAX_CELLS })
    }

    pub fn residue() -> Self {
        Space { kind: SpaceKind::Residue, max_cells: DEFAULT_MAX_CELLS }
    }

    pub fn with_max_cells(mut self, max_cells: usize) -> Self {
        self.max_cells = max_cells;
        self
    }

    pub fn max_cells(&self) -> usize {
        self.max_cells
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.kind
    }

    pub fn model(&self) -> Model {
        match self.kind {
            SpaceKind::PathSpace(_) => Model::PathSpace,
            SpaceKind::NAdic { .. } => Model::NAdic,
            SpaceKind::Residue => Model::Residue,
        }
    }

    pub fn matrix(&self) -> Option<&AdjacencyMatrix> {
        match &self.kind {
            SpaceKind::PathSpace(a) => Some(a),
            _ => None,
        }
    }

    pub(crate) fn budget(&self, count: usize) -> Result<()> {
        if count > self.max_cells {
            Err(Error::CellLimit { count, limit: self.max_cells })
        } else {
            Ok(())
        }
    }

    // ---- cells -----------------------------------------------------------

    /// Cylinder `Z(μ)` for a zero-based word.
    pub fn path_cell(&self, word: Word) -> Result<Cell> {
        let cell = Cell::Path(word);
        self.validate_cell(&cell)?;
        Ok(cell)
    }

    /// The n-adic cell `[(p/nᵏ)⁺, ((p+1)/nᵏ)⁻]`.
    pub fn nadic_cell(&self, p: u128, k: u32) -> Result<Cell> {
        let SpaceKind::NAdic { n } = self.kind else {
            return Err(Error::MixedModel(Model::NAdic.name(), self.model().name()));
        };
        let scale =
            (n as u128).checked_pow(k).ok_or_else(|| Error::InvalidCell(format!("n^k overflows for k = {k}")))?;
        if p >= scale {
            return Err(Error::InvalidCell(format!("p = {p} is not below n^k = {scale}")));
        }
        Ok(Cell::NAdic(digits(p, k, n)))
    }

    /// The residue cell `{x : x_w ≡ c/b mod (w)}` for `w = a/b` in lowest
    /// terms. It is stored with an integer modulus.
    pub fn residue_cell(&self, a: u64, b: u64, c: u64) -> Result<Cell> {
        if self.model() != Model::Residue {
            return Err(Error::MixedModel(Model::Residue.name(), self.model().name()));
        }
        Ok(Cell::Residue(ResidueCell::from_rational_modulus(a, b, c)?))
    }

    pub fn validate_cell(&self, cell: &Cell) -> Result<()> {
        if cell.model() != self.model() {
            return Err(Error::MixedModel(cell.model().name(), self.model().name()));
        }
        match (&self.kind, cell) {
            (SpaceKind::PathSpace(a), Cell::Path(w)) => {
                if let Some(&v) = w.iter().find(|&&v| v as usize >= a.size()) {
                    return Err(Error::InvalidCell(format!("vertex {} out of range", v + 1)));
                }
                if !a.is_admissible(w) {
                    return Err(Error::Inadmissible(path_word_string(w)));
                }
            }
            (SpaceKind::NAdic { n }, Cell::NAdic(w)) => {
                if w.iter().any(|&d| d >= *n) {
                    return Err(Error::InvalidCell(format!("digit out of range for n = {n}")));
                }
            }
            (SpaceKind::Residue, Cell::Residue(c)) => {
                if c.modulus() == 0 || c.residue() >= c.modulus() {
                    return Err(Error::InvalidCell(format!("{cell}")));
                }
            }
            _ => unreachable!("model tags already compared"),
        }
        Ok(())
    }

    /// `(p, k)` coordinates of an n-adic cell.
    pub fn nadic_coords(&self, cell: &Cell) -> Result<(u128, u32)> {
        match (&self.kind, cell) {
            (SpaceKind::NAdic { n }, Cell::NAdic(w)) => Ok((word_value(w, *n), w.len() as u32)),
            _ => Err(Error::MixedModel(cell.model().name(), self.model().name())),
        }
    }

    /// Letters that may follow `node` in the prefix tree.
    pub(crate) fn children(&self, node: &[u32]) -> Vec<u32> {
        match &self.kind {
            SpaceKind::PathSpace(a) => match node.last() {
                None => (0..a.size() as u32).collect(),
                Some(&v) => a.successors(v as usize).map(|j| j as u32).collect(),
            },
            SpaceKind::NAdic { n } => (0..*n).collect(),
            SpaceKind::Residue => unreachable!("residue cells do not form a prefix tree"),
        }
    }

    fn wrap(&self, w: Word) -> Cell {
        match self.kind {
            SpaceKind::PathSpace(_) => Cell::Path(w),
            SpaceKind::NAdic { .. } => Cell::NAdic(w),
            SpaceKind::Residue => unreachable!(),
        }
    }

    fn words<'a>(&self, set: &'a ClopenSet) -> Result<Vec<&'a Word>> {
        self.check(set)?;
        Ok(set.cells.iter().filter_map(Cell::word).collect())
    }

    fn residues(&self, set: &ClopenSet) -> Result<Vec<ResidueCell>> {
        self.check(set)?;
        Ok(set
            .cells
            .iter()
            .map(|c| match c {
                Cell::Residue(r) => *r,
                _ => unreachable!(),
            })
            .collect())
    }

    fn check(&self, set: &ClopenSet) -> Result<()> {
        if set.model != self.model() {
            return Err(Error::MixedModel(set.model.name(), self.model().name()));
        }
        Ok(())
    }

    fn assemble(&self, cells: Vec<Cell>) -> ClopenSet {
        ClopenSet { model: self.model(), cells }
    }

    // ---- Boolean algebra -----------------------------------------------

    pub fn empty(&self) -> ClopenSet {
        self.assemble(Vec::new())
    }

    pub fn whole(&self) -> ClopenSet {
        let cell = match self.kind {
            SpaceKind::Residue => Cell::Residue(ResidueCell::WHOLE),
            _ => self.wrap(Vec::new()),
        };
        self.assemble(vec![cell])
    }

    /// The canonical form of the union of `cells`.
    pub fn canonicalize<I: IntoIterator<Item = Cell>>(&self, cells: I) -> Result<ClopenSet> {
        let cells: Vec<Cell> = cells.into_iter().collect();
        for c in &cells {
            self.validate_cell(c)?;
        }
        self.budget(cells.len())?;
        let out = match self.kind {
            SpaceKind::Residue => {
                let rs: Vec<ResidueCell> = cells
                    .into_iter()
                    .map(|c| match c {
                        Cell::Residue(r) => r,
                        _ => unreachable!(),
                    })
                    .collect();
                residue::normalize(self, &rs)?.into_iter().map(Cell::Residue).collect()
            }
            _ => {
                let words = cells
                    .into_iter()
                    .map(|c| match c {
                        Cell::Path(w) | Cell::NAdic(w) => w,
                        Cell::Residue(_) => unreachable!(),
                    })
                    .collect();
                prefix::normalize(self, words).into_iter().map(|w| self.wrap(w)).collect()
            }
        };
        Ok(self.assemble(out))
    }

    pub fn cell_set(&self, cell: Cell) -> Result<ClopenSet> {
        self.canonicalize([cell])
    }

    pub fn union(&self, a: &ClopenSet, b: &ClopenSet) -> Result<ClopenSet> {
        self.check(a)?;
        self.check(b)?;
        self.canonicalize(a.cells.iter().chain(&b.cells).cloned())
    }

    pub fn intersect(&self, a: &ClopenSet, b: &ClopenSet) -> Result<ClopenSet> {
        match self.kind {
            SpaceKind::Residue => {
                let out = residue::intersect(self, &self.residues(a)?, &self.residues(b)?)?;
                Ok(self.assemble(out.into_iter().map(Cell::Residue).collect()))
            }
            _ => {
                let out = prefix::intersect(self, &self.words(a)?, &self.words(b)?);
                Ok(self.assemble(out.into_iter().map(|w| self.wrap(w)).collect()))
            }
        }
    }

    pub fn complement(&self, a: &ClopenSet) -> Result<ClopenSet> {
        match self.kind {
            SpaceKind::Residue => {
                let out = residue::complement(self, &self.residues(a)?)?;
                Ok(self.assemble(out.into_iter().map(Cell::Residue).collect()))
            }
            _ => {
                let words: Vec<Word> = self.words(a)?.into_iter().cloned().collect();
                let out = prefix::complement(self, &words)?;
                Ok(self.assemble(out.into_iter().map(|w| self.wrap(w)).collect()))
            }
        }
    }

    /// `a \ b`.
    pub fn difference(&self, a: &ClopenSet, b: &ClopenSet) -> Result<ClopenSet> {
        if a.is_empty() || b.is_empty() {
            self.check(a)?;
            self.check(b)?;
            return Ok(a.clone());
        }
        let nb = self.complement(b)?;
        self.intersect(a, &nb)
    }

    pub fn is_subset(&self, a: &ClopenSet, b: &ClopenSet) -> Result<bool> {
        Ok(self.intersect(a, b)? == *a)
    }

    pub fn is_disjoint(&self, a: &ClopenSet, b: &ClopenSet) -> Result<bool> {
        Ok(self.intersect(a, b)?.is_empty())
    }

    pub fn equals(&self, a: &ClopenSet, b: &ClopenSet) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(a == b)
    }

    /// Splits `a` into pairwise disjoint cells that all sit at `level`.
    ///
    /// For the prefix models `level` is a word depth and must be at least the
    /// depth of every cell of `a`. For the residue model it is a modulus that
    /// every cell modulus of `a` must divide.
    pub fn refine(&self, a: &ClopenSet, level: u64) -> Result<Vec<Cell>> {
        match self.kind {
            SpaceKind::Residue => {
                Ok(residue::refine(self, &self.residues(a)?, level)?.into_iter().map(Cell::Residue).collect())
            }
            _ => {
                let depth =
                    usize::try_from(level).map_err(|_| Error::InvalidLevel(format!("depth {level} too large")))?;
                let words: Vec<Word> = self.words(a)?.into_iter().cloned().collect();
                Ok(prefix::refine(self, &words, depth)?.into_iter().map(|w| self.wrap(w)).collect())
            }
        }
    }

    /// Every basic cell at `level`, in canonical order.
    pub fn cells_at_level(&self, level: u64) -> Result<Vec<Cell>> {
        self.refine(&self.whole(), level)
    }

    /// Whether a point of the residue space given by an integer lies in `a`.
    pub fn contains_integer(&self, a: &ClopenSet, x: i128) -> Result<bool> {
        Ok(self.residues(a)?.iter().any(|c| c.contains(x)))
    }

    /// Whether the infinite sequence `letter(0), letter(1), …` lies in `a`.
    /// Works for both prefix models.
    pub fn contains_sequence(&self, a: &ClopenSet, letter: impl Fn(usize) -> u32) -> Result<bool> {
        Ok(self.words(a)?.iter().any(|w| w.iter().enumerate().all(|(i, &d)| letter(i) == d)))
    }
}

/// `k` base-`n` digits of `p`, most significant first.
pub(crate) fn digits(mut p: u128, k: u32, n: u32) -> Word {
    let mut out = vec![0u32; k as usize];
    for slot in out.iter_mut().rev() {
        *slot = (p % n as u128) as u32;
        p /= n as u128;
    }
    out
}

pub(crate) fn word_value(w: &[u32], n: u32) -> u128 {
    w.iter().fold(0u128, |acc, &d| acc * n as u128 + d as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> Space {
        Space::path_space(AdjacencyMatrix::new(&[[1, 1], [1, 0]]).unwrap())
    }

    fn full2() -> Space {
        Space::path_space(AdjacencyMatrix::full(2).unwrap())
    }

    fn z(space: &Space, w: &[u32]) -> ClopenSet {
        space.cell_set(space.path_cell(w.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn matrix_rejects_zero_rows() {
        assert!(AdjacencyMatrix::new(&[[1, 1], [0, 0]]).is_err());
        assert!(AdjacencyMatrix::new(&[[1, 2], [1, 0]]).is_err());
        assert!(AdjacencyMatrix::new(&[vec![1u8, 1], vec![1]]).is_err());
    }

    #[test]
    fn canonicalize_depth_one_cylinders() {
        let s = golden();
        let set = s.canonicalize([s.path_cell(vec![0]).unwrap(), s.path_cell(vec![1]).unwrap()]).unwrap();
        assert_eq!(set, s.whole());
    }

    #[test]
    fn canonicalize_dyadic_halves() {
        let s = Space::nadic(2).unwrap();
        let set = s.canonicalize([s.nadic_cell(0, 1).unwrap(), s.nadic_cell(1, 1).unwrap()]).unwrap();
        assert_eq!(set, s.whole());
    }

    #[test]
    fn canonicalize_residues_mod_two() {
        let s = Space::residue();
        let set = s.canonicalize([s.residue_cell(2, 1, 0).unwrap(), s.residue_cell(2, 1, 1).unwrap()]).unwrap();
        assert_eq!(set, s.whole());
    }

    #[test]
    fn canonicalize_rejects_bad_input() {
        let s = golden();
        assert!(matches!(s.path_cell(vec![1, 1]), Err(Error::Inadmissible(_))));
        let n = Space::nadic(2).unwrap();
        let c = n.nadic_cell(0, 1).unwrap();
        assert!(matches!(s.canonicalize([c]), Err(Error::MixedModel(..))));
    }

    #[test]
    fn out_degree_one_cylinder_merges_upward() {
        let s = golden();
        assert_eq!(z(&s, &[1, 0]), z(&s, &[1]));
    }

    #[test]
    fn prefix_intersection() {
        let s = full2();
        assert_eq!(s.intersect(&z(&s, &[0]), &z(&s, &[0, 1])).unwrap(), z(&s, &[0, 1]));
        assert!(s.intersect(&z(&s, &[0]), &z(&s, &[1])).unwrap().is_empty());
    }

    #[test]
    fn complement_of_depth_two_cylinder() {
        let s = full2();
        let c = s.complement(&z(&s, &[0, 0])).unwrap();
        let expected = s.canonicalize([s.path_cell(vec![0, 1]).unwrap(), s.path_cell(vec![1]).unwrap()]).unwrap();
        assert_eq!(c, expected);
        assert_eq!(c.cells(), expected.cells());
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn residue_intersection_is_crt() {
        let s = Space::residue();
        let a = s.cell_set(s.residue_cell(2, 1, 0).unwrap()).unwrap();
        let b = s.cell_set(s.residue_cell(3, 1, 0).unwrap()).unwrap();
        let c = s.intersect(&a, &b).unwrap();
        assert_eq!(c, s.cell_set(s.residue_cell(6, 1, 0).unwrap()).unwrap());
    }

    #[test]
    fn rational_modulus_cells_normalise() {
        let s = Space::residue();
        // w = 4/3, residue 1/3: x ≡ 1·3⁻¹ ≡ 3 (mod 4)
        let c = s.residue_cell(4, 3, 1).unwrap();
        assert_eq!(c, Cell::Residue(ResidueCell::new(4, 3).unwrap()));
        // w = 1/2: the whole space
        assert_eq!(s.residue_cell(1, 2, 0).unwrap(), Cell::Residue(ResidueCell::WHOLE));
    }

    #[test]
    fn refine_examples() {
        let n = Space::nadic(2).unwrap();
        let half = n.cell_set(n.nadic_cell(0, 1).unwrap()).unwrap();
        assert_eq!(n.refine(&half, 2).unwrap(), vec![n.nadic_cell(0, 2).unwrap(), n.nadic_cell(1, 2).unwrap()]);

        let g = golden();
        assert_eq!(g.refine(&z(&g, &[1]), 2).unwrap(), vec![Cell::Path(vec![1, 0])]);

        let r = Space::residue();
        let got = r.refine(&r.whole(), 3).unwrap();
        let want: Vec<Cell> = (0..3).map(|c| Cell::Residue(ResidueCell::new(3, c).unwrap())).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn refine_rejects_coarser_levels() {
        let n = Space::nadic(2).unwrap();
        let q = n.cell_set(n.nadic_cell(1, 2).unwrap()).unwrap();
        assert!(matches!(n.refine(&q, 1), Err(Error::InvalidLevel(_))));
        let r = Space::residue();
        let c = r.cell_set(r.residue_cell(2, 1, 1).unwrap()).unwrap();
        assert!(matches!(r.refine(&c, 3), Err(Error::InvalidLevel(_))));
    }

    #[test]
    fn nadic_coordinates_round_trip() {
        let n = Space::nadic(3).unwrap();
        for k in 0..4 {
            for p in 0..3u128.pow(k) {
                let c = n.nadic_cell(p, k).unwrap();
                assert_eq!(n.nadic_coords(&c).unwrap(), (p, k));
            }
        }
        assert!(n.nadic_cell(9, 2).is_err());
    }

    #[test]
    fn cell_budget_is_enforced() {
        let n = Space::nadic(2).unwrap().with_max_cells(10);
        assert!(matches!(n.cells_at_level(4), Err(Error::CellLimit { .. })));
        let r = Space::residue().with_max_cells(10);
        assert!(matches!(r.cells_at_level(11), Err(Error::CellLimit { .. })));
    }
}
