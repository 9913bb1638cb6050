//! Brute-force graph oracles that share no code with the library.

use pcx::space::AdjacencyMatrix;

/// Number of first-return loops at `v` of each length up to `max_len`:
/// `A[v,·] B^{L−2} A[·,v]` with `B` the matrix without vertex `v`.
fn first_return_counts(a: &AdjacencyMatrix, v: usize, max_len: usize) -> Vec<u64> {
    let n = a.size();
    let e = |i: usize, j: usize| u64::from(a.get(i, j));
    let mut out = vec![e(v, v)];
    // row[j] = number of paths v → … → j avoiding v after the start.
    let mut row: Vec<u64> = (0..n).map(|j| if j == v { 0 } else { e(v, j) }).collect();
    for _ in 2..=max_len {
        out.push((0..n).map(|j| row[j] * e(j, v)).sum());
        row = (0..n).map(|k| if k == v { 0 } else { (0..n).map(|j| row[j] * e(j, k)).sum() }).collect();
    }
    out
}

pub fn k_oracle(a: &AdjacencyMatrix) -> bool {
    let n = a.size();
    (0..n).all(|v| {
        let total: u64 = first_return_counts(a, v, 3 * n).iter().sum();
        total != 1
    })
}

/// Every simple cycle, found by trying every vertex sequence without repeats,
/// contains a vertex of out-degree at least two.
pub fn exit_oracle(a: &AdjacencyMatrix) -> bool {
    fn extend(a: &AdjacencyMatrix, path: &mut Vec<usize>) -> bool {
        let last = *path.last().unwrap();
        if a.get(last, path[0]) && path.iter().all(|&v| a.out_degree(v) == 1) {
            return false;
        }
        for w in 0..a.size() {
            if w > path[0] && !path.contains(&w) && a.get(last, w) {
                path.push(w);
                let ok = extend(a, path);
                path.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    (0..a.size()).all(|v| extend(a, &mut vec![v]))
}
