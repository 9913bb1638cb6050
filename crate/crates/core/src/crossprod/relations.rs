//! Generator families and their defining relations.

use num_traits::Zero;

use super::{add, mul, star, sub, AlgElem};
use crate::action::PartialSystem;
use crate::error::{Error, Result};
use crate::group::{FreeWord, GroupElem};
use crate::space::SpaceKind;
use crate::Q;

/// Outcome of one relation check. `counterexample` names the first term of
/// `lhs − rhs` when the relation fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
    pub counterexample: Option<String>,
}

fn path_generator(sys: &PartialSystem, i: u32) -> Result<AlgElem> {
    let t = GroupElem::Free(FreeWord::generator(i));
    let range = sys.range(&t)?;
    AlgElem::indicator_term(sys, t, &range)
}

/// `uⁿ = 1_X δ_{(n,1)}`.
pub fn residue_u(sys: &PartialSystem, n: i128) -> Result<AlgElem> {
    let t = sys.group().affine(Q::from_integer(n), Q::from_integer(1))?;
    AlgElem::indicator_term(sys, t, &sys.space().whole())
}

/// `s_m = 1_{X_{(0,m)}} δ_{(0,m)}`.
pub fn residue_s(sys: &PartialSystem, m: i128) -> Result<AlgElem> {
    if m < 1 {
        return Err(Error::Precondition(format!("s_m needs m >= 1, got {m}")));
    }
    let t = sys.group().affine(Q::zero(), Q::from_integer(m))?;
    let range = sys.range(&t)?;
    AlgElem::indicator_term(sys, t, &range)
}

/// The named generators: `s_1, …, s_n` for a path space, `uⁿ` and `s_m` for
/// the residue space.
pub fn standard_generators(
    sys: &PartialSystem,
    m_values: &[i128],
    n_values: &[i128],
) -> Result<Vec<(String, AlgElem)>> {
    match sys.space().kind() {
        SpaceKind::PathSpace(a) => {
            (0..a.size() as u32).map(|i| Ok((format!("s{}", i + 1), path_generator(sys, i)?))).collect()
        }
        SpaceKind::Residue => {
            let mut out = Vec::new();
            for &n in n_values {
                out.push((format!("u^{n}"), residue_u(sys, n)?));
            }
            for &m in m_values {
                out.push((format!("s_{m}"), residue_s(sys, m)?));
            }
            Ok(out)
        }
        SpaceKind::NAdic { .. } => {
            Err(Error::Unsupported("the n-adic system has no finite standard generator list".into()))
        }
    }
}

fn check(sys: &PartialSystem, name: String, lhs: &AlgElem, rhs: &AlgElem) -> Result<RelationCheck> {
    let diff = sub(sys, lhs, rhs)?;
    let counterexample = diff.terms().next().map(|(t, f)| {
        let (cell, v) = f.pieces().into_iter().next().expect("nonzero coefficient");
        format!("δ_{{{t}}} at {cell}: {v}")
    });
    Ok(RelationCheck { name, pass: diff.is_zero(), counterexample })
}

fn sum(sys: &PartialSystem, xs: impl IntoIterator<Item = Result<AlgElem>>) -> Result<AlgElem> {
    xs.into_iter().try_fold(AlgElem::zero(), |acc, x| add(sys, &acc, &x?))
}

/// Checks the defining relations of the generators.
///
/// Path space: `Σ_j s_j s_j* = 1` and `Σ_j a_ij s_j s_j* = s_i* s_i` for each
/// `i`. Residue space: `s_m s_m' = s_{mm'}`, `uⁿ u^{n'} = u^{n+n'}`,
/// `s_m uⁿ = u^{mn} s_m` and `Σ_{l<m} uˡ s_m s_m* u⁻ˡ = 1` over the given
/// ranges.
pub fn verify_relations(sys: &PartialSystem, m_values: &[i128], n_values: &[i128]) -> Result<Vec<RelationCheck>> {
    let one = AlgElem::one(sys);
    let mut out = Vec::new();
    match sys.space().kind() {
        SpaceKind::PathSpace(a) => {
            let s: Vec<AlgElem> = (0..a.size() as u32).map(|i| path_generator(sys, i)).collect::<Result<_>>()?;
            let ranges: Vec<AlgElem> = s.iter().map(|x| mul(sys, x, &star(sys, x)?)).collect::<Result<_>>()?;
            let total = sum(sys, ranges.iter().cloned().map(Ok))?;
            out.push(check(sys, "sum_j s_j s_j^* = 1".into(), &total, &one)?);
            for (i, si) in s.iter().enumerate() {
                let lhs = sum(sys, a.successors(i).map(|j| Ok(ranges[j].clone())))?;
                let rhs = mul(sys, &star(sys, si)?, si)?;
                let name = format!("sum_j a_{{{},j}} s_j s_j^* = s_{}^* s_{}", i + 1, i + 1, i + 1);
                out.push(check(sys, name, &lhs, &rhs)?);
            }
        }
        SpaceKind::Residue => {
            for &m in m_values {
                for &m2 in m_values {
                    let lhs = mul(sys, &residue_s(sys, m)?, &residue_s(sys, m2)?)?;
                    let rhs = residue_s(sys, m * m2)?;
                    out.push(check(sys, format!("s_{m} s_{m2} = s_{}", m * m2), &lhs, &rhs)?);
                }
            }
            for &n in n_values {
                for &n2 in n_values {
                    let lhs = mul(sys, &residue_u(sys, n)?, &residue_u(sys, n2)?)?;
                    let rhs = residue_u(sys, n + n2)?;
                    out.push(check(sys, format!("u^{n} u^{n2} = u^{}", n + n2), &lhs, &rhs)?);
                }
            }
            for &m in m_values {
                for &n in n_values {
                    let sm = residue_s(sys, m)?;
                    let lhs = mul(sys, &sm, &residue_u(sys, n)?)?;
                    let rhs = mul(sys, &residue_u(sys, m * n)?, &sm)?;
                    out.push(check(sys, format!("s_{m} u^{n} = u^{} s_{m}", m * n), &lhs, &rhs)?);
                }
            }
            for &m in m_values {
                let sm = residue_s(sys, m)?;
                let proj = mul(sys, &sm, &star(sys, &sm)?)?;
                let total = sum(
                    sys,
                    (0..m).map(|l| {
                        let left = mul(sys, &residue_u(sys, l)?, &proj)?;
                        mul(sys, &left, &residue_u(sys, -l)?)
                    }),
                )?;
                let name = format!("sum_{{l<{m}}} u^l s_{m} s_{m}^* u^-l = 1");
                out.push(check(sys, name, &total, &one)?);
            }
        }
        SpaceKind::NAdic { .. } => {
            return Err(Error::Unsupported("relation checks are defined for the path-space and residue systems".into()))
        }
    }
    Ok(out)
}
