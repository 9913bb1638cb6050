//! *-algebra laws of the dense crossed product, and a pointwise check of the
//! product against the action on integer points of the residue space.

mod common;

use std::collections::BTreeMap;

use common::{all_systems, random_alg, random_diagonal, rng};
use num_traits::Zero;
use pcx::action::PartialSystem;
use pcx::crossprod::{self, expectation, l1_norm, mul, star, AlgElem};
use pcx::group::GroupElem;
use pcx::space::Cell;
use pcx::Q;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn star_algebra_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        for sys in all_systems() {
            let (x, y, z) = (random_alg(&mut r, &sys), random_alg(&mut r, &sys), random_alg(&mut r, &sys));
            let xy = mul(&sys, &x, &y).unwrap();
            prop_assert_eq!(mul(&sys, &xy, &z).unwrap(), mul(&sys, &x, &mul(&sys, &y, &z).unwrap()).unwrap());
            let yz = crossprod::add(&sys, &y, &z).unwrap();
            let split = crossprod::add(&sys, &xy, &mul(&sys, &x, &z).unwrap()).unwrap();
            prop_assert_eq!(mul(&sys, &x, &yz).unwrap(), split);
            let sx = star(&sys, &x).unwrap();
            prop_assert_eq!(star(&sys, &sx).unwrap(), x.clone());
            let rev = mul(&sys, &star(&sys, &y).unwrap(), &sx).unwrap();
            prop_assert_eq!(star(&sys, &xy).unwrap(), rev);
            prop_assert!(l1_norm(&xy) <= l1_norm(&x) * l1_norm(&y));
            let one = AlgElem::one(&sys);
            prop_assert_eq!(mul(&sys, &one, &x).unwrap(), x.clone());
            prop_assert_eq!(mul(&sys, &x, &one).unwrap(), x.clone());
        }
    }

    #[test]
    fn expectation_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        for sys in all_systems() {
            let space = sys.space();
            let x = random_alg(&mut r, &sys);
            let (a, b) = (random_diagonal(&mut r, &sys), random_diagonal(&mut r, &sys));
            let axb = mul(&sys, &mul(&sys, &a, &x).unwrap(), &b).unwrap();
            let ea = expectation(&sys, &a);
            let eb = expectation(&sys, &b);
            let want = ea.mul(space, &expectation(&sys, &x)).unwrap().mul(space, &eb).unwrap();
            prop_assert_eq!(expectation(&sys, &axb), want);
            let xsx = mul(&sys, &star(&sys, &x).unwrap(), &x).unwrap();
            let e = expectation(&sys, &xsx);
            prop_assert_eq!(e.is_zero(), x.is_zero());
            // E(x*x) = Σ_t α_{t⁻¹}(|a_t|²), so it is nonnegative everywhere.
            prop_assert!(e.levels().all(|(v, _)| *v > Q::zero()));
        }
    }
}

/// The image of a basis vector `δ_y` under the regular representation of
/// `x`: `aδ_t` sends `δ_y` to `a(θ_t(y)) δ_{θ_t(y)}`, where `θ_t(y) = u + w y`
/// is defined on integers exactly when the result is an integer.
fn represent(sys: &PartialSystem, x: &AlgElem, y: i128) -> BTreeMap<i128, Q> {
    let space = sys.space();
    let mut out = BTreeMap::new();
    for (t, f) in x.terms() {
        let GroupElem::Affine(e) = t else { unreachable!() };
        let image = e.u() + e.w() * Q::from_integer(y);
        if !image.is_integer() {
            continue;
        }
        let image = image.to_integer();
        for (v, s) in f.levels() {
            if space.contains_integer(s, image).unwrap() {
                *out.entry(image).or_insert_with(Q::zero) += *v;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn compose(sys: &PartialSystem, x: &AlgElem, v: &BTreeMap<i128, Q>) -> BTreeMap<i128, Q> {
    let mut out: BTreeMap<i128, Q> = BTreeMap::new();
    for (y, c) in v {
        for (z, d) in represent(sys, x, *y) {
            *out.entry(z).or_insert_with(Q::zero) += *c * d;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[test]
fn residue_product_matches_the_regular_representation() {
    let mut r = rng(21);
    for positive in [false, true] {
        let sys = PartialSystem::residue(positive);
        for _ in 0..150 {
            let x = random_alg(&mut r, &sys);
            let y = random_alg(&mut r, &sys);
            let xy = mul(&sys, &x, &y).unwrap();
            let xs = star(&sys, &x).unwrap();
            for p in -40..40 {
                let two_step = compose(&sys, &x, &represent(&sys, &y, p));
                assert_eq!(represent(&sys, &xy, p), two_step, "x = {x:?}, y = {y:?} at {p}");
                // ⟨π(x*) δ_p, δ_q⟩ = ⟨δ_p, π(x) δ_q⟩.
                for (q, c) in represent(&sys, &xs, p) {
                    let back = compose(&sys, &x, &BTreeMap::from([(q, Q::from_integer(1))]));
                    assert_eq!(back.get(&p).copied().unwrap_or_default(), c);
                }
            }
        }
    }
}

#[test]
fn terms_outside_the_range_are_rejected() {
    let sys = PartialSystem::path_space(pcx::space::AdjacencyMatrix::full(2).unwrap());
    let t = sys.group().word("g1").unwrap();
    let z2 = sys.space().cell_set(Cell::Path(vec![1])).unwrap();
    let err = AlgElem::indicator_term(&sys, t, &z2).unwrap_err();
    assert_eq!(err.code(), "PRECONDITION_VIOLATION");
}
