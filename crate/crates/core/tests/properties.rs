use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use icelab_core::catalog::Catalog;
use icelab_core::ice::IceSeq;
use icelab_core::lattice::{TorfLattice, DEFAULT_ORACLE_CAP};
use icelab_core::module::{direct_sum, hom_dim};
use icelab_core::set::SubcatSet;
use icelab_core::subcat::{closure, is_class, perp, ClassKind, Closure, PerpSide};
use icelab_core::{Algebra, Gf2, Gf7, Limits, Matrix};

const A3: &str = "vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\n";

fn a3() -> &'static (Catalog<Gf2>, TorfLattice) {
    static CELL: OnceLock<(Catalog<Gf2>, TorfLattice)> = OnceLock::new();
    CELL.get_or_init(|| {
        let cat = Catalog::build_auto(Arc::new(Algebra::from_text(A3).unwrap()), 6, Limits::default()).unwrap();
        let l = TorfLattice::build(&cat, DEFAULT_ORACLE_CAP).unwrap();
        (cat, l)
    })
}

fn kinds() -> impl Strategy<Value = Closure> {
    prop_oneof![
        Just(Closure::Cogen),
        Just(Closure::Gen),
        Just(Closure::Ext),
        Just(Closure::Torf),
        Just(Closure::Tors),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(rows in 1usize..6, cols in 1usize..6, seed in prop::collection::vec(0u32..7, 36)) {
        let data: Vec<Gf7> = seed.iter().take(rows * cols).map(|&v| Gf7::new(v)).collect();
        let m = Matrix::from_vec(rows, cols, data);
        prop_assert_eq!(m.rank() + m.nullspace().cols(), cols);
    }

    #[test]
    fn hom_is_additive(mult in prop::collection::vec(0usize..3, 6), target in 0usize..6) {
        let (cat, _) = a3();
        let y = cat.sum_of(&mult);
        let expected: usize = mult.iter().enumerate().map(|(i, &k)| k * cat.hom(i, target)).sum();
        prop_assert_eq!(hom_dim(&y, cat.module(target)), expected);
        let into: usize = mult.iter().enumerate().map(|(i, &k)| k * cat.hom(target, i)).sum();
        prop_assert_eq!(hom_dim(cat.module(target), &y), into);
    }

    #[test]
    fn decompose_inverts_direct_sum(mult in prop::collection::vec(0usize..3, 6)) {
        let (cat, _) = a3();
        let parts: Vec<_> = mult.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(cat.module(i).clone(), k)).collect();
        let m = direct_sum(cat.algebra(), &parts).unwrap();
        prop_assert_eq!(cat.decompose(&m).unwrap(), mult);
    }

    #[test]
    fn closures_are_closure_operators(mask in 0u128..64, extra in 0u128..64, kind in kinds()) {
        let (cat, _) = a3();
        let s = SubcatSet(mask);
        let t = SubcatSet(mask | extra);
        let cs = closure(cat, s, kind).unwrap();
        prop_assert!(s.is_subset(cs));
        prop_assert_eq!(closure(cat, cs, kind).unwrap(), cs);
        prop_assert!(cs.is_subset(closure(cat, t, kind).unwrap()));
    }

    #[test]
    fn torf_closure_is_a_lattice_member(mask in 0u128..64) {
        let (cat, l) = a3();
        let f = closure(cat, SubcatSet(mask), Closure::Torf).unwrap();
        prop_assert!(l.contains(f));
        let t = perp(cat, f, PerpSide::Left);
        prop_assert!(is_class(cat, t, ClassKind::Tors).unwrap());
        prop_assert_eq!(perp(cat, t, PerpSide::Right), f);
    }

    #[test]
    fn join_and_meet_bound_their_arguments(a in 0usize..14, b in 0usize..14) {
        let (_, l) = a3();
        let (f, g) = (l.members()[a], l.members()[b]);
        let j = l.join(f, g).unwrap();
        let m = l.meet(f, g).unwrap();
        prop_assert!(f.is_subset(j) && g.is_subset(j));
        prop_assert!(m.is_subset(f) && m.is_subset(g));
        prop_assert!(l.members().iter().filter(|h| f.union(g).is_subset(**h)).all(|h| j.is_subset(*h)));
    }

    #[test]
    fn padding_with_everything_keeps_sequences_equal(window in prop::collection::vec(0u128..64, 0..4), pad in 0usize..3) {
        let full = SubcatSet::full(6);
        let w: Vec<SubcatSet> = window.into_iter().map(SubcatSet).collect();
        let mut longer = w.clone();
        longer.extend(std::iter::repeat_n(full, pad));
        prop_assert_eq!(IceSeq::new(w, full), IceSeq::new(longer, full));
    }
}
