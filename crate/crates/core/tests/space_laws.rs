//! Boolean-algebra operations checked against pointwise membership.

mod common;

use common::{all_systems, random_set, rng};
use pcx::action::PartialSystem;
use pcx::space::{Cell, ClopenSet, SpaceKind};
use proptest::prelude::*;

/// Membership of every sample point. Sample points separate all sets built
/// from cells of depth at most 6 (prefix models) or modulus dividing 840.
fn profile(sys: &PartialSystem, s: &ClopenSet) -> Vec<bool> {
    let space = sys.space();
    match space.kind() {
        SpaceKind::Residue => (0..840).map(|x| space.contains_integer(s, x).unwrap()).collect(),
        _ => space
            .cells_at_level(6)
            .unwrap()
            .iter()
            .map(|c| {
                let w = match c {
                    Cell::Path(w) | Cell::NAdic(w) => w.clone(),
                    Cell::Residue(_) => unreachable!(),
                };
                s.cells().iter().any(|cell| match cell {
                    Cell::Path(p) | Cell::NAdic(p) => w.starts_with(p),
                    Cell::Residue(_) => unreachable!(),
                })
            })
            .collect(),
    }
}

fn zip(a: &[bool], b: &[bool], f: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    a.iter().zip(b).map(|(x, y)| f(*x, *y)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn operations_match_membership(seed in any::<u64>()) {
        let mut r = rng(seed);
        for sys in all_systems() {
            let space = sys.space();
            let a = random_set(&mut r, &sys);
            let b = random_set(&mut r, &sys);
            let (pa, pb) = (profile(&sys, &a), profile(&sys, &b));
            prop_assert_eq!(profile(&sys, &space.union(&a, &b).unwrap()), zip(&pa, &pb, |x, y| x || y));
            prop_assert_eq!(profile(&sys, &space.intersect(&a, &b).unwrap()), zip(&pa, &pb, |x, y| x && y));
            prop_assert_eq!(profile(&sys, &space.difference(&a, &b).unwrap()), zip(&pa, &pb, |x, y| x && !y));
            let c = space.complement(&a).unwrap();
            prop_assert_eq!(profile(&sys, &c), pa.iter().map(|x| !x).collect::<Vec<_>>());
            prop_assert_eq!(space.is_subset(&a, &b).unwrap(), pa.iter().zip(&pb).all(|(x, y)| !x || *y));
        }
    }

    #[test]
    fn equal_sets_have_equal_representations(seed in any::<u64>()) {
        let mut r = rng(seed);
        for sys in all_systems() {
            let space = sys.space();
            let a = random_set(&mut r, &sys);
            let b = random_set(&mut r, &sys);
            let same = profile(&sys, &a) == profile(&sys, &b);
            prop_assert_eq!(same, a == b);
            // Rebuilding from a refinement gives the same canonical form.
            let level = match space.kind() { SpaceKind::Residue => 840, _ => 4 };
            let rebuilt = space.canonicalize(space.refine(&a, level).unwrap()).unwrap();
            prop_assert_eq!(&rebuilt, &a);
            prop_assert_eq!(space.complement(&space.complement(&a).unwrap()).unwrap(), a);
        }
    }
}
