//! Graph checks for path-space systems.
//!
//! Vertices are zero based here and one based in every rendered word.

use std::collections::BTreeSet;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::action::PartialSystem;
use crate::error::{Error, Result};
use crate::group::{FreeWord, GroupElem};
use crate::space::{AdjacencyMatrix, Cell, ClopenSet, SpaceKind, Word};

/// Largest vertex count for the subset brute force.
pub const MAX_SUBSET_VERTICES: usize = 20;
/// Largest cylinder depth for [`invariant_clopen_sets`].
pub const MAX_INVARIANT_DEPTH: usize = 6;
/// Cap on the number of invariant sets enumerated.
pub const MAX_INVARIANT_SETS: usize = 4096;

/// Why a vertex does or does not satisfy condition (K).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KEvidence {
    /// Two first-return loops at `vertex`. Each loop lists the vertices after
    /// `vertex`, ending at `vertex`.
    TwoLoops { vertex: u32, first: Word, second: Word },
    /// `vertex` lies on exactly one first-return loop.
    SingleLoop { vertex: u32, cycle: Word },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KReport {
    pub holds: bool,
    /// One entry per vertex lying on a loop, in vertex order.
    pub evidence: Vec<KEvidence>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExitReport {
    pub holds: bool,
    /// A cycle of out-degree-one vertices, when there is one.
    pub culprit: Option<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopFreeReport {
    pub holds: bool,
    /// A nontrivial element and a cylinder it fixes pointwise.
    pub culprit: Option<(GroupElem, Cell)>,
}

fn digraph(a: &AdjacencyMatrix) -> DiGraph<(), ()> {
    let mut g = DiGraph::new();
    let nodes: Vec<_> = (0..a.size()).map(|_| g.add_node(())).collect();
    for i in 0..a.size() {
        for j in a.successors(i) {
            g.add_edge(nodes[i], nodes[j], ());
        }
    }
    g
}

/// For each vertex, whether it lies on a cycle and whether its strongly
/// connected component is a single simple cycle.
fn cycle_structure(a: &AdjacencyMatrix) -> Vec<(bool, bool)> {
    let mut out = vec![(false, false); a.size()];
    for comp in tarjan_scc(&digraph(a)) {
        let members: BTreeSet<usize> = comp.iter().map(|v| v.index()).collect();
        let edges: usize = members.iter().map(|&v| a.successors(v).filter(|w| members.contains(w)).count()).sum();
        let on_cycle = edges > 0;
        let simple = on_cycle && edges == members.len();
        for &v in &members {
            out[v] = (on_cycle, simple);
        }
    }
    out
}

/// First-return loops at `v` of length at most `max_len`, shortest first and
/// lexicographic within a length. At most `limit` loops are returned.
pub fn first_return_loops(a: &AdjacencyMatrix, v: u32, max_len: usize, limit: usize) -> Vec<Word> {
    let mut found = Vec::new();
    // Breadth first over paths that avoid `v` until their last step.
    let mut frontier: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for path in &frontier {
            let last = path.last().copied().unwrap_or(v);
            for w in a.successors(last as usize) {
                let mut p = path.clone();
                p.push(w as u32);
                if w as u32 == v {
                    found.push(p);
                    if found.len() == limit {
                        return found;
                    }
                } else {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    found
}

/// Condition (K): every vertex on a loop has two distinct first-return loops.
/// Decided from the strongly connected components.
pub fn condition_k(a: &AdjacencyMatrix) -> KReport {
    let n = a.size();
    let mut evidence = Vec::new();
    let mut holds = true;
    for (v, (on_cycle, simple)) in cycle_structure(a).into_iter().enumerate() {
        if !on_cycle {
            continue;
        }
        let loops = first_return_loops(a, v as u32, 2 * n, 2);
        if simple {
            holds = false;
            evidence.push(KEvidence::SingleLoop { vertex: v as u32, cycle: loops[0].clone() });
        } else {
            let [first, second]: [Word; 2] = loops.try_into().expect("two loops within 2n steps");
            evidence.push(KEvidence::TwoLoops { vertex: v as u32, first, second });
        }
    }
    KReport { holds, evidence }
}

/// Condition (K) by enumerating first-return loops of length at most `2n`.
pub fn condition_k_bruteforce(a: &AdjacencyMatrix) -> bool {
    let n = a.size();
    (0..n as u32).all(|v| {
        let k = first_return_loops(a, v, 2 * n, 2).len();
        k != 1
    })
}

/// Whether every cycle has a vertex of out-degree at least two.
pub fn every_cycle_has_exit(a: &AdjacencyMatrix) -> ExitReport {
    // Out-degree-one vertices form a functional graph; look for a cycle in it.
    let n = a.size();
    let next: Vec<Option<usize>> =
        (0..n).map(|v| (a.out_degree(v) == 1).then(|| a.successors(v).next().unwrap())).collect();
    for start in 0..n {
        let mut path = vec![start];
        let mut cur = start;
        while let Some(w) = next[cur] {
            if let Some(pos) = path.iter().position(|&x| x == w) {
                let cycle: Word = path[pos..].iter().map(|&x| x as u32).collect();
                let k = cycle.iter().position(|&x| x == *cycle.iter().min().unwrap()).unwrap();
                let mut rotated = cycle[k..].to_vec();
                rotated.extend_from_slice(&cycle[..k]);
                return ExitReport { holds: false, culprit: Some(rotated) };
            }
            if path.len() > n {
                break;
            }
            path.push(w);
            cur = w;
        }
    }
    ExitReport { holds: true, culprit: None }
}

/// The point determined by `w` when the continuation after `w` is forced, as
/// a prefix and a repeating block.
fn singleton_point(a: &AdjacencyMatrix, w: &[u32]) -> Option<(Word, Word)> {
    let mut seq = w.to_vec();
    let mut seen: Vec<(u32, usize)> = Vec::new();
    let mut cur = *seq.last()?;
    loop {
        if let Some(&(_, pos)) = seen.iter().find(|(v, _)| *v == cur) {
            let cycle = seq[pos..].to_vec();
            seq.truncate(pos);
            return Some((seq, cycle));
        }
        seen.push((cur, seq.len()));
        if a.out_degree(cur as usize) != 1 {
            return None;
        }
        cur = a.successors(cur as usize).next().unwrap() as u32;
        seq.push(cur);
    }
}

/// Letter `i` of the eventually periodic sequence `pre · cyc^∞`.
fn letter((pre, cyc): &(Word, Word), i: usize) -> u32 {
    if i < pre.len() {
        pre[i]
    } else {
        cyc[(i - pre.len()) % cyc.len()]
    }
}

fn admissible_words(a: &AdjacencyMatrix, depth: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &layer {
            let succ: Vec<usize> = match w.last() {
                None => (0..a.size()).collect(),
                Some(&v) => a.successors(v as usize).collect(),
            };
            for j in succ {
                let mut x = w.clone();
                x.push(j as u32);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Searches for a reduced word `t ≠ e` with `|t| ≤ max_word_len` and a cylinder
/// of depth at most `depth` on which `θ_t` is the identity.
///
/// Such a set is a single point `x`, and then `t = x[..i] x[..j]⁻¹` with
/// `x[i..] = x[j..]`; every fixing element has that form.
pub fn topfree_bruteforce(sys: &PartialSystem, max_word_len: usize, depth: usize) -> Result<TopFreeReport> {
    let SpaceKind::PathSpace(a) = sys.space().kind() else {
        return Err(Error::Unsupported("topological freeness check needs a path-space system".into()));
    };
    if max_word_len == 0 {
        return Ok(TopFreeReport { holds: true, culprit: None });
    }
    let mut words = admissible_words(a, depth);
    words.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    for w in words {
        // The whole space is a point only for a single forced loop.
        let point = if w.is_empty() {
            (0..a.size() as u32).find_map(|v| (a.size() == 1).then(|| singleton_point(a, &[v])).flatten())
        } else {
            singleton_point(a, &w)
        };
        let Some(point) = point else { continue };
        let horizon = point.0.len() + point.1.len();
        for total in 1..=max_word_len {
            for i in (0..=total).rev() {
                let j = total - i;
                if i == j || !(0..horizon).all(|m| letter(&point, i + m) == letter(&point, j + m)) {
                    continue;
                }
                let mu: Word = (0..i).map(|k| letter(&point, k)).collect();
                let nu: Word = (0..j).map(|k| letter(&point, k)).collect();
                let t = GroupElem::Free(FreeWord::from_split(&mu, &nu));
                let cell = sys.space().path_cell(w.clone())?;
                let set = sys.space().cell_set(cell.clone())?;
                let dom = sys.domain(&t)?;
                if sys.space().is_subset(&set, &dom)? && sys.apply(&t, &set)? == set {
                    return Ok(TopFreeReport { holds: false, culprit: Some((t, cell)) });
                }
                return Err(Error::Internal(format!("{t} should fix {}", cell)));
            }
        }
    }
    Ok(TopFreeReport { holds: true, culprit: None })
}

/// All hereditary saturated vertex sets, in increasing bitmask order (vertex
/// `i` is bit `i`).
pub fn hereditary_saturated_sets(a: &AdjacencyMatrix) -> Result<Vec<BTreeSet<u32>>> {
    let n = a.size();
    if n > MAX_SUBSET_VERTICES {
        return Err(Error::Precondition(format!(
            "subset enumeration is limited to {MAX_SUBSET_VERTICES} vertices, got {n}"
        )));
    }
    let succ: Vec<u32> = (0..n).map(|v| a.successors(v).fold(0u32, |m, w| m | 1 << w)).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let hereditary = (0..n).all(|v| mask & (1 << v) == 0 || succ[v] & !mask == 0);
        let saturated = (0..n).all(|v| succ[v] & !mask != 0 || mask & (1 << v) != 0);
        if hereditary && saturated {
            out.push((0..n as u32).filter(|&v| mask & (1 << v) != 0).collect());
        }
    }
    Ok(out)
}

/// Unions of depth-`depth` cylinders `S` with `θ_g(S ∩ X_{g⁻¹}) ⊆ S` for every
/// generator and inverse `g`. Sorted by the number of cylinders, then by
/// cylinder order.
pub fn invariant_clopen_sets(sys: &PartialSystem, depth: usize) -> Result<Vec<ClopenSet>> {
    let SpaceKind::PathSpace(a) = sys.space().kind() else {
        return Err(Error::Unsupported("invariant sets are computed for path-space systems".into()));
    };
    if depth > MAX_INVARIANT_DEPTH {
        return Err(Error::Precondition(format!("depth {depth} exceeds the limit {MAX_INVARIANT_DEPTH}")));
    }
    let space = sys.space();
    let cyl: Vec<Cell> = space.cells_at_level(depth as u64)?;
    let sets: Vec<ClopenSet> = cyl.iter().map(|c| space.cell_set(c.clone())).collect::<Result<_>>()?;
    let gens: Vec<GroupElem> = (0..a.size() as u32)
        .flat_map(|i| {
            let g = FreeWord::generator(i);
            [GroupElem::Free(g.clone()), GroupElem::Free(g.inverse())]
        })
        .collect();

    // succ[c] = cylinders met by some θ_g(Z(c) ∩ X_{g⁻¹})
    let mut succ = vec![BTreeSet::new(); cyl.len()];
    for g in &gens {
        let dom = sys.domain(g)?;
        for (ci, c) in sets.iter().enumerate() {
            let part = space.intersect(c, &dom)?;
            if part.is_empty() {
                continue;
            }
            let img = sys.apply(g, &part)?;
            for (di, d) in sets.iter().enumerate() {
                if !space.is_disjoint(&img, d)? {
                    succ[ci].insert(di);
                }
            }
        }
    }
    let closure = |start: usize| -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &succ[x] {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen
    };
    let closures: Vec<BTreeSet<usize>> = (0..cyl.len()).map(closure).collect();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::from([Vec::new()]);
    for cl in &closures {
        let mut added = Vec::new();
        for s in &found {
            let u: BTreeSet<usize> = s.iter().copied().chain(cl.iter().copied()).collect();
            let u: Vec<usize> = u.into_iter().collect();
            if !found.contains(&u) {
                added.push(u);
            }
        }
        found.extend(added);
        if found.len() > MAX_INVARIANT_SETS {
            return Err(Error::Precondition(format!("more than {MAX_INVARIANT_SETS} invariant sets at depth {depth}")));
        }
    }
    let mut found: Vec<Vec<usize>> = found.into_iter().collect();
    found.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    found.into_iter().map(|idx| space.canonicalize(idx.into_iter().map(|i| cyl[i].clone()))).collect()
}
