//! From a witness to isometries `x`, `y` and a projection `p` in the dense
//! algebra with `x*x = y*y = p` and `y*x = 0`.

use super::{verify_witness, Witness};
use crate::action::PartialSystem;
use crate::crossprod::{self, AlgElem, LCFunction};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isometries {
    pub x: AlgElem,
    pub y: AlgElem,
    pub p: AlgElem,
}

/// Outcome of the five identities, in the order
/// `x*x = p`, `y*y = p`, `y*x = 0`, `px = x`, `py = y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteVerdict {
    pub pass: bool,
    /// `p = 0`, so every identity holds for trivial reasons.
    pub trivial: bool,
    pub checks: Vec<(&'static str, bool)>,
}

/// `x = Σ_{i≤n} 1_{θ_{t_i}(W_i)} δ_{t_i}` for the disjointified cover
/// `W_1 = V_1`, `W_i = V_i \ (V_1 ∪ … ∪ V_{i-1})`; likewise `y` for the second
/// half, and `p = 1_V δ_e`.
pub fn witness_to_isometries(sys: &PartialSystem, w: &Witness) -> Result<Isometries> {
    let verdict = verify_witness(sys, w)?;
    if !verdict.pass {
        let f = verdict.failure.expect("failing verdict has a failure");
        return Err(Error::Precondition(format!("witness fails {} at {}", f.condition, f.cell)));
    }
    let half = |parts: &[(crate::space::ClopenSet, crate::group::GroupElem)]| -> Result<AlgElem> {
        let space = sys.space();
        let mut covered = space.empty();
        let mut out = AlgElem::zero();
        for (v, t) in parts {
            let fresh = space.difference(v, &covered)?;
            covered = space.union(&covered, v)?;
            let a = sys.alpha(t, &LCFunction::indicator(&fresh))?;
            out = crossprod::add(sys, &out, &AlgElem::term(sys, t.clone(), a)?)?;
        }
        Ok(out)
    };
    Ok(Isometries {
        x: half(&w.parts[..w.n])?,
        y: half(&w.parts[w.n..])?,
        p: AlgElem::diagonal(sys, LCFunction::indicator(&w.set)),
    })
}

pub fn verify_proper_infinite(sys: &PartialSystem, x: &AlgElem, y: &AlgElem, p: &AlgElem) -> Result<InfiniteVerdict> {
    let xs = crossprod::star(sys, x)?;
    let ys = crossprod::star(sys, y)?;
    let checks = vec![
        ("x*x = p", crossprod::mul(sys, &xs, x)? == *p),
        ("y*y = p", crossprod::mul(sys, &ys, y)? == *p),
        ("y*x = 0", crossprod::mul(sys, &ys, x)?.is_zero()),
        ("px = x", crossprod::mul(sys, p, x)? == *x),
        ("py = y", crossprod::mul(sys, p, y)? == *y),
    ];
    Ok(InfiniteVerdict { pass: checks.iter().all(|c| c.1), trivial: p.is_zero(), checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossprod::standard_generators;
    use crate::space::AdjacencyMatrix;

    #[test]
    fn cuntz_pair_is_properly_infinite() {
        let sys = PartialSystem::path_space(AdjacencyMatrix::full(2).unwrap());
        let gens = standard_generators(&sys, &[], &[]).unwrap();
        let (s1, s2) = (&gens[0].1, &gens[1].1);
        let one = AlgElem::one(&sys);
        assert!(verify_proper_infinite(&sys, s1, s2, &one).unwrap().pass);
        let v = verify_proper_infinite(&sys, s1, s1, &one).unwrap();
        assert!(!v.pass);
        assert_eq!(v.checks[2], ("y*x = 0", false));
        let z = AlgElem::zero();
        let v = verify_proper_infinite(&sys, &z, &z, &z).unwrap();
        assert!(v.pass && v.trivial);
    }
}
