//! Witness construction.
//!
//! Path space: first a direct search for `n = m = 1` witnesses `(V, t_1),
//! (V, t_2)` over reduced words of length at most [`DIRECT_WORD_LEN`], in
//! (length, lexicographic) order with `g1 < g1⁻¹ < g2 < …`; the first pair
//! `i < j` with disjoint images wins. Otherwise each cell of `V` is refined
//! until its last vertex lies on a loop, and the two shortest first-return
//! loops `β′, β″` there give the elements `(αβ′)α⁻¹` and `(αβ″)α⁻¹`.
//!
//! n-adic: each cell `[p/nᵏ, (p+1)/nᵏ]` is carried onto `X` by `(−p, −k)`,
//! where `(0, 1), (1/n, 1)` is a witness; the witness is conjugated back.
//!
//! Residue: the class `r mod M` is split into `r mod 2M` and `r + M mod 2M`
//! by `(−r, 2)` and `(M − r, 2)`.
//!
//! Per-cell witnesses are concatenated: all first halves, then all second
//! halves. Cells are processed in parallel; the result does not depend on
//! scheduling.

use rayon::prelude::*;

use super::{verify_witness, Witness};
use crate::action::PartialSystem;
use crate::error::{Error, Result};
use crate::graph::{condition_k, first_return_loops};
use crate::group::{g_inv, g_mul, FreeWord, GroupElem, Letter};
use crate::space::{AdjacencyMatrix, Cell, ClopenSet, SpaceKind};
use crate::Q;

/// Longest word tried by the direct path-space search.
pub const DIRECT_WORD_LEN: usize = 3;

type Parts = Vec<(ClopenSet, GroupElem)>;

pub fn find_witness(sys: &PartialSystem, v: &ClopenSet) -> Result<Witness> {
    if v.is_empty() {
        return Err(Error::EmptySet);
    }
    let space = sys.space();
    let v = space.canonicalize(v.cells().iter().cloned())?;
    if let SpaceKind::PathSpace(a) = space.kind() {
        if !condition_k(a).holds {
            return Err(Error::HypothesisFailed("the graph does not satisfy condition (K)".into()));
        }
        if let Some(w) = direct_search(sys, a, &v)? {
            return certified(sys, w);
        }
    }
    let halves: Vec<(Parts, Parts)> = v.cells().par_iter().map(|c| cell_witness(sys, c)).collect::<Result<_>>()?;
    let (mut first, mut second) = (Vec::new(), Vec::new());
    for (f, s) in halves {
        first.extend(f);
        second.extend(s);
    }
    let n = first.len();
    let m = second.len();
    first.extend(second);
    certified(sys, Witness { set: v, n, m, parts: first })
}

fn certified(sys: &PartialSystem, w: Witness) -> Result<Witness> {
    let verdict = verify_witness(sys, &w)?;
    if !verdict.pass {
        return Err(Error::Internal(format!("constructed witness fails: {:?}", verdict.failure)));
    }
    Ok(w)
}

fn reduced_words(rank: u32, max_len: usize) -> Vec<FreeWord> {
    let letters: Vec<Letter> = (0..rank).flat_map(|g| [Letter::new(g, false), Letter::new(g, true)]).collect();
    let mut out = Vec::new();
    let mut layer = vec![FreeWord::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                let x = w.mul(&FreeWord::from_reduced(vec![l]).expect("single letter"));
                if x.len() == w.len() + 1 {
                    next.push(x);
                }
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn direct_search(sys: &PartialSystem, a: &AdjacencyMatrix, v: &ClopenSet) -> Result<Option<Witness>> {
    let space = sys.space();
    let mut usable: Vec<(GroupElem, ClopenSet)> = Vec::new();
    for w in reduced_words(a.size() as u32, DIRECT_WORD_LEN) {
        let t = GroupElem::Free(w);
        if !space.is_subset(v, &sys.domain(&t)?)? {
            continue;
        }
        let img = sys.apply(&t, v)?;
        if space.is_subset(&img, v)? {
            usable.push((t, img));
        }
    }
    for i in 0..usable.len() {
        for j in i + 1..usable.len() {
            if space.is_disjoint(&usable[i].1, &usable[j].1)? {
                let parts = vec![(v.clone(), usable[i].0.clone()), (v.clone(), usable[j].0.clone())];
                return Ok(Some(Witness { set: v.clone(), n: 1, m: 1, parts }));
            }
        }
    }
    Ok(None)
}

fn cell_witness(sys: &PartialSystem, cell: &Cell) -> Result<(Parts, Parts)> {
    let space = sys.space();
    match (space.kind(), cell) {
        (SpaceKind::PathSpace(a), Cell::Path(w)) => {
            let mut first = Vec::new();
            let mut second = Vec::new();
            path_cells(sys, a, w.clone(), &mut first, &mut second)?;
            Ok((first, second))
        }
        (SpaceKind::NAdic { n }, Cell::NAdic(_)) => {
            let (p, k) = space.nadic_coords(cell)?;
            let whole = space.whole();
            let base = Witness {
                set: whole.clone(),
                n: 1,
                m: 1,
                parts: vec![
                    (whole.clone(), sys.group().nadic(Q::from_integer(0), 1)?),
                    (whole, sys.group().nadic(Q::new(1, *n as i128), 1)?),
                ],
            };
            let s = sys.group().nadic(Q::from_integer(-(p as i128)), -(k as i64))?;
            let w = conjugate(sys, &base, &g_inv(&s))?;
            Ok((vec![w.parts[0].clone()], vec![w.parts[1].clone()]))
        }
        (SpaceKind::Residue, Cell::Residue(c)) => {
            let set = space.cell_set(cell.clone())?;
            let r = c.residue() as i128;
            let m = c.modulus() as i128;
            let two = Q::from_integer(2);
            let t1 = sys.group().affine(Q::from_integer(-r), two)?;
            let t2 = sys.group().affine(Q::from_integer(m - r), two)?;
            Ok((vec![(set.clone(), t1)], vec![(set, t2)]))
        }
        _ => Err(Error::MixedModel(cell.model().name(), space.model().name())),
    }
}

fn path_cells(
    sys: &PartialSystem,
    a: &AdjacencyMatrix,
    alpha: Vec<u32>,
    first: &mut Parts,
    second: &mut Parts,
) -> Result<()> {
    let Some(&v) = alpha.last() else {
        for j in 0..a.size() as u32 {
            path_cells(sys, a, vec![j], first, second)?;
        }
        return Ok(());
    };
    let bound = 3 * a.size();
    let loops = first_return_loops(a, v, bound, 2);
    match loops.len() {
        0 => {
            for j in a.successors(v as usize) {
                let mut next = alpha.clone();
                next.push(j as u32);
                path_cells(sys, a, next, first, second)?;
            }
            Ok(())
        }
        1 => Err(Error::SearchExhausted { bound }),
        _ => {
            let set = sys.space().cell_set(Cell::Path(alpha.clone()))?;
            for (beta, half) in loops.iter().zip([first, second]) {
                let mut mu = alpha.clone();
                mu.extend_from_slice(beta);
                half.push((set.clone(), GroupElem::Free(FreeWord::from_split(&mu, &alpha))));
            }
            Ok(())
        }
    }
}

/// Transports a witness for `V ⊆ X_{s⁻¹}` to one for `θ_s(V)`, with parts
/// `(θ_s(V_i), s t_i s⁻¹)`.
pub fn conjugate(sys: &PartialSystem, w: &Witness, s: &GroupElem) -> Result<Witness> {
    let space = sys.space();
    if !space.is_subset(&w.set, &sys.domain(s)?)? {
        return Err(Error::Precondition(format!("the witnessed set is not inside the domain of θ_{{{s}}}")));
    }
    let s_inv = g_inv(s);
    let parts =
        w.parts.iter().map(|(v, t)| Ok((sys.apply(s, v)?, g_mul(&g_mul(s, t)?, &s_inv)?))).collect::<Result<_>>()?;
    Ok(Witness { set: sys.apply(s, &w.set)?, n: w.n, m: w.m, parts })
}

/// Combines witnesses for pairwise disjoint sets into one for their union.
pub fn concatenate(sys: &PartialSystem, ws: &[Witness]) -> Result<Witness> {
    let space = sys.space();
    let mut set = space.empty();
    let (mut first, mut second) = (Vec::new(), Vec::new());
    for w in ws {
        if !space.is_disjoint(&set, &w.set)? {
            return Err(Error::Precondition("witnessed sets overlap".into()));
        }
        set = space.union(&set, &w.set)?;
        first.extend_from_slice(&w.parts[..w.n]);
        second.extend_from_slice(&w.parts[w.n..]);
    }
    let (n, m) = (first.len(), second.len());
    first.extend(second);
    Ok(Witness { set, n, m, parts: first })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_order() {
        let words: Vec<String> = reduced_words(2, 1).iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["g1", "g1^-1", "g2", "g2^-1"]);
        assert_eq!(reduced_words(2, 2).len(), 4 + 12);
    }

    #[test]
    fn documented_examples() {
        let full = PartialSystem::path_space(AdjacencyMatrix::full(2).unwrap());
        let w = find_witness(&full, &full.space().whole()).unwrap();
        let ts: Vec<String> = w.parts.iter().map(|p| p.1.to_string()).collect();
        assert_eq!(ts, ["g1", "g2"]);
        assert_eq!((w.n, w.m), (1, 1));

        let res = PartialSystem::residue(false);
        let w = find_witness(&res, &res.space().whole()).unwrap();
        let g = res.group();
        let two = Q::from_integer(2);
        assert_eq!(w.parts[0].1, g.affine(Q::from_integer(0), two).unwrap());
        assert_eq!(w.parts[1].1, g.affine(Q::from_integer(1), two).unwrap());

        let nad = PartialSystem::nadic(2).unwrap();
        let w = find_witness(&nad, &nad.space().whole()).unwrap();
        assert_eq!(w.parts[0].1, nad.group().nadic(Q::from_integer(0), 1).unwrap());
        assert_eq!(w.parts[1].1, nad.group().nadic(Q::new(1, 2), 1).unwrap());
    }

    #[test]
    fn errors() {
        let full = PartialSystem::path_space(AdjacencyMatrix::full(2).unwrap());
        assert_eq!(find_witness(&full, &full.space().empty()), Err(Error::EmptySet));
        let swap = PartialSystem::path_space(AdjacencyMatrix::new(&[[0, 1], [1, 0]]).unwrap());
        assert!(matches!(find_witness(&swap, &swap.space().whole()), Err(Error::HypothesisFailed(_))));
    }
}
