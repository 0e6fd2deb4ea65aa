//! Frozen values for the small fixtures.

use std::sync::Arc;

use icelab_core::catalog::Catalog;
use icelab_core::ice::{enumerate_cogen_preordered, enumerate_ice, enumerate_maxjoin};
use icelab_core::lattice::{torf_oracle, TorfLattice, DEFAULT_ORACLE_CAP};
use icelab_core::set::SubcatSet;
use icelab_core::subcat::{closure, wl_operator, Closure};
use icelab_core::tilting::{complete_to_torf, enumerate_tau_inv_rigid, injectives_of_torf, jperp, InjectiveKind};
use icelab_core::{Algebra, FiniteField, Gf2, Gf3, Gf5, Limits};

fn catalog<F: FiniteField + Send + Sync>(name: &str) -> Catalog<F> {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let mut spec = icelab_core::parse_algebra(&std::fs::read_to_string(path).unwrap()).unwrap();
    spec.characteristic = F::CHARACTERISTIC;
    Catalog::build_auto(Arc::new(Algebra::new(spec).unwrap()), 8, Limits::default()).unwrap()
}

fn set(ix: &[usize]) -> SubcatSet {
    SubcatSet::from_indices(ix.iter().copied())
}

fn table(cat: &Catalog<impl FiniteField>, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..cat.len()).map(|i| (0..cat.len()).map(|j| f(i, j)).collect()).collect()
}

#[test]
fn a2_tables() {
    let cat = catalog::<Gf2>("a2.alg");
    assert_eq!(cat.labels(), ["S1", "S2", "P1"]);
    assert_eq!(table(&cat, |i, j| cat.hom(i, j)), [[1, 0, 0], [0, 1, 1], [1, 0, 1]]);
    assert_eq!(table(&cat, |i, j| cat.ext(i, j)), [[0, 1, 0], [0, 0, 0], [0, 0, 0]]);
    assert_eq!((0..3).map(|i| cat.tau(i)).collect::<Vec<_>>(), [Some(1), None, None]);
    assert_eq!((0..3).map(|i| cat.tau_inv(i)).collect::<Vec<_>>(), [None, Some(0), None]);
}

#[test]
fn a2_classes() {
    let cat = catalog::<Gf2>("a2.alg");
    let (s1, s2, p) = (0, 1, 2);
    assert_eq!(closure(&cat, set(&[s1, s2]), Closure::Ext).unwrap(), cat.full());
    assert_eq!(closure(&cat, set(&[p]), Closure::Torf).unwrap(), set(&[s2, p]));
    assert_eq!(closure(&cat, set(&[p]), Closure::Tors).unwrap(), set(&[s1, p]));
    assert_eq!(wl_operator(&cat, set(&[s1, p])).unwrap(), set(&[p]));
    assert_eq!(injectives_of_torf(&cat, set(&[s2, p]), InjectiveKind::Split).unwrap(), set(&[p]));
    assert_eq!(injectives_of_torf(&cat, cat.full(), InjectiveKind::Split).unwrap(), set(&[s1, p]));
    assert_eq!(jperp(&cat, set(&[p])).unwrap(), set(&[s1]));
    assert_eq!(jperp(&cat, set(&[s1, p])).unwrap(), SubcatSet::EMPTY);
    assert_eq!(complete_to_torf(&cat, set(&[s1]), cat.full()).unwrap(), set(&[s1, p]));
    assert_eq!(complete_to_torf(&cat, SubcatSet::EMPTY, set(&[s2, p])).unwrap(), set(&[p]));
}

#[test]
fn census_by_fixture() {
    // (file, catalog size, rigid, torf)
    let cases = [
        ("a2.alg", 3, 6, 5),
        ("semisimple2.alg", 2, 4, 4),
        ("a3.alg", 6, 22, 14),
        ("a3_rel.alg", 5, 16, 12),
    ];
    for (name, size, rigid, torf) in cases {
        let cat = catalog::<Gf2>(name);
        assert_eq!(cat.len(), size, "{name}");
        assert_eq!(enumerate_tau_inv_rigid(&cat).len(), rigid, "{name}");
        assert_eq!(TorfLattice::build(&cat, DEFAULT_ORACLE_CAP).unwrap().len(), torf, "{name}");
    }
}

#[test]
fn a4_has_forty_two() {
    let cat = catalog::<Gf2>("a4.alg");
    assert_eq!(cat.len(), 10);
    assert_eq!(torf_oracle(&cat, DEFAULT_ORACLE_CAP).unwrap().len(), 42);
}

#[test]
fn counts_do_not_depend_on_the_prime() {
    fn counts<F: FiniteField + Send + Sync>() -> Vec<usize> {
        let cat = catalog::<F>("a3.alg");
        let l = TorfLattice::build(&cat, DEFAULT_ORACLE_CAP).unwrap();
        vec![
            cat.len(),
            l.len(),
            enumerate_cogen_preordered(&cat, 2).unwrap().len(),
            enumerate_maxjoin(&l, 2).unwrap().len(),
            enumerate_ice(&cat, 2).unwrap().len(),
        ]
    }
    let two = counts::<Gf2>();
    assert_eq!(two, [6, 14, 55, 55, 55]);
    assert_eq!(counts::<Gf3>(), two);
    let a2 = catalog::<Gf5>("a2.alg");
    assert_eq!(TorfLattice::build(&a2, DEFAULT_ORACLE_CAP).unwrap().len(), 5);
    assert_eq!(enumerate_cogen_preordered(&a2, 2).unwrap().len(), 12);
}

#[test]
fn a2_sequence_counts() {
    let cat = catalog::<Gf2>("a2.alg");
    let l = TorfLattice::build(&cat, DEFAULT_ORACLE_CAP).unwrap();
    let got: Vec<[usize; 3]> = (0..=3)
        .map(|m| {
            [
                enumerate_cogen_preordered(&cat, m).unwrap().len(),
                enumerate_maxjoin(&l, m).unwrap().len(),
                enumerate_ice(&cat, m).unwrap().len(),
            ]
        })
        .collect();
    assert_eq!(got, [[1, 1, 1], [5, 5, 5], [12, 12, 12], [22, 22, 22]]);
}
