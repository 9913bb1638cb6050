//! Random systems, sets, group elements and algebra elements for the
//! property tests. Everything is driven by a seeded RNG.

#![allow(dead_code)]

pub mod oracle;

use pcx::action::PartialSystem;
use pcx::crossprod::{self, AlgElem, LCFunction};
use pcx::group::{FreeWord, GroupElem, Letter};
use pcx::space::{AdjacencyMatrix, Cell, ClopenSet, ResidueCell, SpaceKind};
use pcx::Q;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn matrix(rows: &[&[u8]]) -> AdjacencyMatrix {
    AdjacencyMatrix::new(rows).unwrap()
}

pub fn path_systems() -> Vec<PartialSystem> {
    [
        matrix(&[&[1, 1], &[1, 0]]),
        AdjacencyMatrix::full(2).unwrap(),
        AdjacencyMatrix::full(3).unwrap(),
        matrix(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
        matrix(&[&[1, 1], &[0, 1]]),
    ]
    .into_iter()
    .map(PartialSystem::path_space)
    .collect()
}

pub fn all_systems() -> Vec<PartialSystem> {
    let mut out = path_systems();
    out.push(PartialSystem::nadic(2).unwrap());
    out.push(PartialSystem::nadic(3).unwrap());
    out.push(PartialSystem::residue(false));
    out.push(PartialSystem::residue(true));
    out
}

/// A random zero-row-free `{0,1}` matrix of size `n`.
pub fn random_matrix(r: &mut StdRng, n: usize) -> AdjacencyMatrix {
    loop {
        let rows: Vec<Vec<u8>> = (0..n).map(|_| (0..n).map(|_| r.gen_range(0..2)).collect()).collect();
        if let Ok(a) = AdjacencyMatrix::new(&rows) {
            return a;
        }
    }
}

pub fn random_cell(r: &mut StdRng, sys: &PartialSystem, max_depth: usize) -> Cell {
    match sys.space().kind() {
        SpaceKind::PathSpace(a) => {
            let depth = r.gen_range(0..=max_depth);
            let mut w: Vec<u32> = Vec::new();
            for _ in 0..depth {
                let choices: Vec<usize> = match w.last() {
                    None => (0..a.size()).collect(),
                    Some(&v) => a.successors(v as usize).collect(),
                };
                w.push(choices[r.gen_range(0..choices.len())] as u32);
            }
            Cell::Path(w)
        }
        SpaceKind::NAdic { n } => {
            let k = r.gen_range(0..=max_depth as u32);
            let p = r.gen_range(0..(*n as u128).pow(k));
            sys.space().nadic_cell(p, k).unwrap()
        }
        SpaceKind::Residue => {
            let m = r.gen_range(1..=8u64);
            Cell::Residue(ResidueCell::new(m, r.gen_range(0..m)).unwrap())
        }
    }
}

/// A union of up to three random cells, sometimes empty.
pub fn random_set(r: &mut StdRng, sys: &PartialSystem) -> ClopenSet {
    let k = r.gen_range(0..=3);
    let cells: Vec<Cell> = (0..k).map(|_| random_cell(r, sys, 3)).collect();
    sys.space().canonicalize(cells).unwrap()
}

fn small_rational(r: &mut StdRng, max_num: i128, dens: &[i128]) -> Q {
    let d = dens[r.gen_range(0..dens.len())];
    Q::new(r.gen_range(-max_num..=max_num), d)
}

/// A random group element: free words of length at most 4, n-adic and
/// affine entries bounded by 8.
pub fn random_elem(r: &mut StdRng, sys: &PartialSystem) -> GroupElem {
    let g = sys.group();
    match sys.space().kind() {
        SpaceKind::PathSpace(a) => {
            let len = r.gen_range(0..=4);
            let letters = (0..len).map(|_| Letter::new(r.gen_range(0..a.size() as u32), r.gen_bool(0.5)));
            GroupElem::Free(FreeWord::reduce(letters))
        }
        SpaceKind::NAdic { n } => {
            let n = *n as i128;
            let dens = [1, n, n * n];
            let rr = small_rational(r, 8, &dens);
            g.nadic(rr, r.gen_range(-3..=3)).unwrap()
        }
        SpaceKind::Residue => {
            let u = small_rational(r, 8, &[1, 1, 2, 3, 4, 8]);
            let positive = matches!(g, pcx::group::Group::Affine { positive_only: true });
            let mut w = Q::new(r.gen_range(1..=8), r.gen_range(1..=8));
            if !positive && r.gen_bool(0.5) {
                w = -w;
            }
            g.affine(u, w).unwrap()
        }
    }
}

pub fn random_function(r: &mut StdRng, sys: &PartialSystem, inside: &ClopenSet) -> LCFunction {
    let space = sys.space();
    let mut f = LCFunction::zero();
    for _ in 0..r.gen_range(1..=2) {
        let s = space.intersect(&random_set(r, sys), inside).unwrap();
        let v = Q::from_integer(r.gen_range(-3..=3));
        f = f.add(space, &LCFunction::constant_on(&s, v)).unwrap();
    }
    f
}

/// Up to four terms; biased towards elements with nonempty ranges.
pub fn random_alg(r: &mut StdRng, sys: &PartialSystem) -> AlgElem {
    let mut x = AlgElem::zero();
    for _ in 0..r.gen_range(0..=4) {
        let mut t = random_elem(r, sys);
        for _ in 0..5 {
            if !sys.range(&t).unwrap().is_empty() {
                break;
            }
            t = random_elem(r, sys);
        }
        let range = sys.range(&t).unwrap();
        let f = random_function(r, sys, &range);
        let term = AlgElem::term(sys, t, f).unwrap();
        x = crossprod::add(sys, &x, &term).unwrap();
    }
    x
}

pub fn random_diagonal(r: &mut StdRng, sys: &PartialSystem) -> AlgElem {
    let whole = sys.space().whole();
    AlgElem::diagonal(sys, random_function(r, sys, &whole))
}
