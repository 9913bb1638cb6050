//! The dense `*`-algebra of finite sums `Σ f_t δ_t`, with `f_t` a locally
//! constant function supported in `X_t`.
//!
//! ```text
//! (a δ_t)(b δ_s) = α_t(α_{t⁻¹}(a) b) δ_{ts}
//! (a δ_t)*       = α_{t⁻¹}(a) δ_{t⁻¹}
//! ```

mod function;
mod relations;

use std::collections::BTreeMap;

use num_traits::Zero;

pub use function::LCFunction;
pub use relations::{residue_s, residue_u, standard_generators, verify_relations, RelationCheck};

use crate::action::PartialSystem;
use crate::error::{Error, Result};
use crate::group::{g_inv, g_mul, GroupElem};
use crate::space::ClopenSet;
use crate::Q;

impl PartialSystem {
    /// `α_t(f) = f ∘ θ_{t⁻¹}`; the support of `f` must lie in the domain of `θ_t`.
    pub fn alpha(&self, t: &GroupElem, f: &LCFunction) -> Result<LCFunction> {
        if t.is_identity() {
            self.group().check(t)?;
            return Ok(f.clone());
        }
        f.map_levels(|s| self.apply(t, s))
    }
}

/// An element of the dense algebra. Coefficients are nonzero and supported in
/// `X_t`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgElem {
    terms: BTreeMap<GroupElem, LCFunction>,
}

impl AlgElem {
    pub fn zero() -> Self {
        AlgElem::default()
    }

    /// `1_X δ_e`.
    pub fn one(sys: &PartialSystem) -> Self {
        AlgElem::diagonal(sys, LCFunction::indicator(&sys.space().whole()))
    }

    /// `f δ_e`.
    pub fn diagonal(sys: &PartialSystem, f: LCFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(sys.identity(), f);
        }
        AlgElem { terms }
    }

    /// `f δ_t`, checking that `f` is supported in `X_t`.
    pub fn term(sys: &PartialSystem, t: GroupElem, f: LCFunction) -> Result<Self> {
        sys.group().check(&t)?;
        let range = sys.range(&t)?;
        let support = f.support(sys.space())?;
        if !sys.space().is_subset(&support, &range)? {
            let outside = sys.space().difference(&support, &range)?;
            return Err(Error::Precondition(format!(
                "coefficient of δ_{{{t}}} is not supported in its range; first cell outside: {}",
                outside.cells()[0]
            )));
        }
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(t, f);
        }
        Ok(AlgElem { terms })
    }

    /// `1_S δ_t`.
    pub fn indicator_term(sys: &PartialSystem, t: GroupElem, s: &ClopenSet) -> Result<Self> {
        AlgElem::term(sys, t, LCFunction::indicator(s))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElem, &LCFunction)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &GroupElem) -> Option<&LCFunction> {
        self.terms.get(t)
    }

    fn insert_add(&mut self, sys: &PartialSystem, t: GroupElem, f: LCFunction) -> Result<()> {
        if f.is_zero() {
            return Ok(());
        }
        let sum = match self.terms.remove(&t) {
            Some(g) => g.add(sys.space(), &f)?,
            None => f,
        };
        if !sum.is_zero() {
            self.terms.insert(t, sum);
        }
        Ok(())
    }
}

pub fn add(sys: &PartialSystem, x: &AlgElem, y: &AlgElem) -> Result<AlgElem> {
    let mut out = x.clone();
    for (t, f) in &y.terms {
        sys.group().check(t)?;
        out.insert_add(sys, t.clone(), f.clone())?;
    }
    Ok(out)
}

pub fn scale(q: Q, x: &AlgElem) -> AlgElem {
    if q.is_zero() {
        return AlgElem::zero();
    }
    AlgElem { terms: x.terms.iter().map(|(t, f)| (t.clone(), f.scale(q))).collect() }
}

pub fn sub(sys: &PartialSystem, x: &AlgElem, y: &AlgElem) -> Result<AlgElem> {
    add(sys, x, &scale(Q::from_integer(-1), y))
}

pub fn mul(sys: &PartialSystem, x: &AlgElem, y: &AlgElem) -> Result<AlgElem> {
    let space = sys.space();
    let mut out = AlgElem::zero();
    for (t, a) in &x.terms {
        let t_inv = g_inv(t);
        let pulled = sys.alpha(&t_inv, a)?;
        for (s, b) in &y.terms {
            let prod = pulled.mul(space, b)?;
            if prod.is_zero() {
                continue;
            }
            let coeff = sys.alpha(t, &prod)?;
            let ts = g_mul(t, s)?;
            let range = sys.range(&ts)?;
            if !space.is_subset(&coeff.support(space)?, &range)? {
                return Err(Error::Internal(format!("product coefficient at δ_{{{ts}}} leaves its range")));
            }
            out.insert_add(sys, ts, coeff)?;
        }
    }
    Ok(out)
}

pub fn star(sys: &PartialSystem, x: &AlgElem) -> Result<AlgElem> {
    let mut out = AlgElem::zero();
    for (t, a) in &x.terms {
        let t_inv = g_inv(t);
        let coeff = sys.alpha(&t_inv, a)?;
        out.insert_add(sys, t_inv, coeff)?;
    }
    Ok(out)
}

/// The coefficient at the identity.
pub fn expectation(sys: &PartialSystem, x: &AlgElem) -> LCFunction {
    x.coefficient(&sys.identity()).cloned().unwrap_or_default()
}

pub fn l1_norm(x: &AlgElem) -> Q {
    x.terms.values().map(LCFunction::sup_norm).fold(Q::zero(), |a, b| a + b)
}

pub fn is_projection(sys: &PartialSystem, x: &AlgElem) -> Result<bool> {
    Ok(mul(sys, x, x)? == *x && star(sys, x)? == *x)
}
