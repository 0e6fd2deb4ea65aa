//! τ⁻¹-rigid modules, split injectives of torsion-free classes and reduction
//! to τ⁻¹-perpendicular categories.
//!
//! Basic modules are identified with their sets of indecomposable summands.

use crate::catalog::{support, Catalog};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::Matrix;
use crate::module::{hom_basis, Morphism};
use crate::set::SubcatSet;
use crate::subcat::{cogen, in_cogen, is_class, perp, trace, ClassKind, PerpSide};

/// A basic τ⁻¹-rigid module with its two torsion-free classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RigidModule {
    pub members: SubcatSet,
    /// `Cogen X`
    pub cogen: SubcatSet,
    /// `(τ⁻¹X)^⊥`
    pub tau_perp: SubcatSet,
}

impl RigidModule {
    pub fn new<F: FiniteField>(cat: &Catalog<F>, x: SubcatSet) -> Result<Self> {
        if !is_tau_inv_rigid(cat, x) {
            return Err(Error::Precondition(format!("{x:?} is not τ⁻¹-rigid")));
        }
        Ok(RigidModule { members: x, cogen: cogen(cat, x), tau_perp: tau_perp(cat, x) })
    }
}

/// `Hom(τ⁻¹X, X) = 0`, read off the catalog tables.
pub fn is_tau_inv_rigid<F: FiniteField>(cat: &Catalog<F>, x: SubcatSet) -> bool {
    x.iter().all(|i| match cat.tau_inv(i) {
        None => true,
        Some(t) => x.iter().all(|j| cat.hom(t, j) == 0),
    })
}

fn compatible<F: FiniteField>(cat: &Catalog<F>, i: usize, j: usize) -> bool {
    let ok = |a: usize, b: usize| cat.tau_inv(a).is_none_or(|t| cat.hom(t, b) == 0);
    ok(i, j) && ok(j, i)
}

/// All basic τ⁻¹-rigid modules, by size and then by mask.
pub fn enumerate_tau_inv_rigid<F: FiniteField>(cat: &Catalog<F>) -> Vec<SubcatSet> {
    let n = cat.len();
    let usable: Vec<usize> = (0..n).filter(|&i| compatible(cat, i, i)).collect();
    let mut out = Vec::new();
    fn rec<F: FiniteField>(cat: &Catalog<F>, usable: &[usize], from: usize, cur: SubcatSet, out: &mut Vec<SubcatSet>) {
        out.push(cur);
        for k in from..usable.len() {
            let i = usable[k];
            if cur.iter().all(|j| compatible(cat, i, j)) {
                rec(cat, usable, k + 1, cur.with(i), out);
            }
        }
    }
    rec(cat, &usable, 0, SubcatSet::EMPTY, &mut out);
    out.sort_by_key(|s| (s.len(), *s));
    out
}

/// No summand is cogenerated by the others.
pub fn is_cogen_minimal<F: FiniteField>(cat: &Catalog<F>, x: SubcatSet) -> bool {
    x.iter().all(|i| !in_cogen(cat, x.without(i), i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InjectiveKind {
    Split,
    Ext,
}

/// Split or Ext-injective members of a torsion-free class.
pub fn injectives_of_torf<F: FiniteField>(cat: &Catalog<F>, f: SubcatSet, kind: InjectiveKind) -> Result<SubcatSet> {
    if !is_class(cat, f, ClassKind::Torf)? {
        return Err(Error::Precondition(format!("{f:?} is not torsion-free")));
    }
    Ok(match kind {
        InjectiveKind::Split => split_injectives(cat, f),
        InjectiveKind::Ext => f.iter().filter(|&x| f.iter().all(|y| cat.ext(y, x) == 0)).collect(),
    })
}

/// Members of `f` not cogenerated by the other members.
pub fn split_injectives<F: FiniteField>(cat: &Catalog<F>, f: SubcatSet) -> SubcatSet {
    f.iter().filter(|&x| !in_cogen(cat, f.without(x), x)).collect()
}

/// Definitional test: every monomorphism from `x` into a sum of members of
/// `f` (multiplicities at most `bound`) splits.
pub fn is_split_injective_bounded<F: FiniteField>(cat: &Catalog<F>, x: usize, f: SubcatSet, bound: usize) -> Result<bool> {
    let members: Vec<usize> = f.iter().collect();
    let mut mult = vec![0usize; members.len()];
    let xm = cat.module(x);
    loop {
        let mut k = 0;
        loop {
            if k == mult.len() {
                return Ok(true);
            }
            mult[k] += 1;
            if mult[k] <= bound {
                break;
            }
            mult[k] = 0;
            k += 1;
        }
        let mut full = vec![0usize; cat.len()];
        for (&i, &m) in members.iter().zip(&mult) {
            full[i] = m;
        }
        let y = cat.sum_of(&full);
        let to = hom_basis(xm, &y)?;
        let back = hom_basis(&y, xm)?;
        let composites: Vec<_> = (0..back.dim()).map(|k| back.morphism(k)).collect();
        let id_end = hom_basis(xm, xm)?;
        for f in to.all(cat.limits())? {
            if !f.is_injective() {
                continue;
            }
            let maps: Vec<_> = composites.iter().map(|g| f.then(g)).collect();
            let comps: Vec<&[_]> = maps.iter().map(|m| m.comps.as_slice()).collect();
            let id = Morphism::identity(xm);
            let splits = if comps.is_empty() {
                false
            } else {
                let a = id_end.coordinates_many(&comps).expect("endomorphisms");
                let b = id_end.coordinates(&id).expect("identity");
                a.solve(&Matrix::from_columns(b.len(), &[b])).is_some()
            };
            if !splits {
                return Ok(false);
            }
        }
    }
}

/// `(τ⁻¹X)^⊥`
pub fn tau_perp<F: FiniteField>(cat: &Catalog<F>, x: SubcatSet) -> SubcatSet {
    perp(cat, cat.tau_inv_set(x), PerpSide::Right)
}

/// The τ⁻¹-perpendicular category `(τ⁻¹X)^⊥ ∩ ⊥X`.
pub fn jperp<F: FiniteField>(cat: &Catalog<F>, x: SubcatSet) -> Result<SubcatSet> {
    if !is_tau_inv_rigid(cat, x) {
        return Err(Error::Precondition(format!("{x:?} is not τ⁻¹-rigid")));
    }
    Ok(tau_perp(cat, x).intersect(perp(cat, x, PerpSide::Left)))
}

/// `(Y, X)` is weakly cogen-preordered: `Y ⊕ X` is τ⁻¹-rigid and no summand of `Y` lies in `Cogen X`.
pub fn is_weakly_cogen_preordered_pair<F: FiniteField>(cat: &Catalog<F>, y: SubcatSet, x: SubcatSet) -> bool {
    y.is_disjoint(x) && is_tau_inv_rigid(cat, y.union(x)) && y.iter().all(|i| !in_cogen(cat, x, i))
}

/// `t_X Y`, the torsion part of `Y` for the torsion pair `(⊥X, Cogen X)`.
pub fn reduce_pair<F: FiniteField>(cat: &Catalog<F>, y: SubcatSet, x: SubcatSet) -> Result<SubcatSet> {
    if !is_weakly_cogen_preordered_pair(cat, y, x) {
        return Err(Error::Precondition(format!("({y:?}, {x:?}) is not weakly cogen-preordered")));
    }
    let torsion = perp(cat, x, PerpSide::Left);
    let mut mult = vec![0usize; cat.len()];
    for i in y.iter() {
        let m = cat.module(i);
        let t = trace(cat, torsion, m)?.to_module(m).0;
        for (acc, k) in mult.iter_mut().zip(cat.decompose_unchecked(&t)?) {
            *acc += k;
        }
    }
    if mult.iter().any(|&k| k > 1) {
        return Err(Error::Verification(format!("t_X Y is not basic for ({y:?}, {x:?})")));
    }
    Ok(support(&mult))
}

/// The unique `Y` with `(Y, X)` weakly cogen-preordered and `t_X Y = Z`.
pub fn lift_through_reduction<F: FiniteField>(cat: &Catalog<F>, z: SubcatSet, x: SubcatSet) -> Result<SubcatSet> {
    let w = jperp(cat, x)?;
    if !z.is_subset(w) || !is_rel_rigid(cat, z, w)? {
        return Err(Error::Precondition(format!("{z:?} is not τ⁻¹-rigid inside J({x:?})")));
    }
    let candidates: Vec<usize> = (0..cat.len())
        .filter(|&c| !x.contains(c) && !in_cogen(cat, x, c) && is_tau_inv_rigid(cat, x.with(c)))
        .collect();
    let mut found = Vec::new();
    let mut stack = vec![(0usize, SubcatSet::EMPTY)];
    while let Some((from, cur)) = stack.pop() {
        if reduce_pair(cat, cur, x)? == z {
            found.push(cur);
        }
        for (k, &c) in candidates.iter().enumerate().skip(from) {
            let next = cur.with(c);
            if is_tau_inv_rigid(cat, next.union(x)) {
                stack.push((k + 1, next));
            }
        }
    }
    match found.as_slice() {
        [y] => Ok(*y),
        [] => Err(Error::Verification(format!("no preimage of {z:?} under t_{x:?}"))),
        _ => Err(Error::Verification(format!("{} preimages of {z:?} under t_{x:?}", found.len()))),
    }
}

/// `X ⊕ (I_s(F) / add X)`, for `Cogen X ⊆ F ⊆ (τ⁻¹X)^⊥`.
pub fn complete_to_torf<F: FiniteField>(cat: &Catalog<F>, x: SubcatSet, f: SubcatSet) -> Result<SubcatSet> {
    let r = RigidModule::new(cat, x)?;
    if !r.cogen.is_subset(f) || !f.is_subset(r.tau_perp) || !is_class(cat, f, ClassKind::Torf)? {
        return Err(Error::Precondition("need Cogen X ⊆ F ⊆ (τ⁻¹X)^⊥ with F torsion-free".into()));
    }
    let out = x.union(split_injectives(cat, f));
    if !is_tau_inv_rigid(cat, out) || cogen(cat, out) != f {
        return Err(Error::Verification(format!("completion of {x:?} in {f:?} failed")));
    }
    Ok(out)
}

/// τ⁻¹-rigidity relative to a wide subcategory `w`: `Ext¹(Cogen(Z) ∩ W, Z) = 0`.
pub fn is_rel_rigid<F: FiniteField>(cat: &Catalog<F>, z: SubcatSet, w: SubcatSet) -> Result<bool> {
    let c = cogen(cat, z).intersect(w);
    Ok(c.iter().all(|n| z.iter().all(|y| cat.ext(n, y) == 0)))
}

/// `(τ_W⁻¹ V)^⊥ ∩ W = {N ∈ W : Ext¹(Cogen(N) ∩ W, V) = 0}`.
pub fn rel_tau_perp<F: FiniteField>(cat: &Catalog<F>, v: SubcatSet, w: SubcatSet) -> SubcatSet {
    w.iter()
        .filter(|&n| {
            let c = cogen(cat, SubcatSet::singleton(n)).intersect(w);
            c.iter().all(|a| v.iter().all(|y| cat.ext(a, y) == 0))
        })
        .collect()
}

/// Default multiplicity bound for the definitional split-injectivity check.
pub fn default_split_bound<F: FiniteField>(cat: &Catalog<F>, x: usize) -> usize {
    cat.module(x).total_dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::Fp;
    use crate::module::Limits;
    use std::sync::Arc;

    fn a2() -> Catalog<Fp<2>> {
        let alg = Arc::new(Algebra::from_text("vertex 1\nvertex 2\narrow a 1 2\n").unwrap());
        Catalog::build(alg, 2, Limits::default()).unwrap()
    }

    const S1: usize = 0;
    const S2: usize = 1;
    const P: usize = 2;

    fn set(ix: &[usize]) -> SubcatSet {
        SubcatSet::from_indices(ix.iter().copied())
    }

    #[test]
    fn rigidity() {
        let cat = a2();
        assert!(is_tau_inv_rigid(&cat, set(&[S2, P])));
        assert!(!is_tau_inv_rigid(&cat, set(&[S1, S2])));
        assert!(is_tau_inv_rigid(&cat, SubcatSet::EMPTY));
        let all = enumerate_tau_inv_rigid(&cat);
        assert_eq!(all, vec![set(&[]), set(&[S1]), set(&[S2]), set(&[P]), set(&[S1, P]), set(&[S2, P])]);
    }

    #[test]
    fn minimality_and_injectives() {
        let cat = a2();
        assert!(!is_cogen_minimal(&cat, set(&[S2, P])));
        assert!(is_cogen_minimal(&cat, set(&[S1, P])));
        assert!(is_cogen_minimal(&cat, SubcatSet::EMPTY));
        assert_eq!(injectives_of_torf(&cat, set(&[S2, P]), InjectiveKind::Split).unwrap(), set(&[P]));
        assert_eq!(injectives_of_torf(&cat, cat.full(), InjectiveKind::Split).unwrap(), set(&[S1, P]));
        for k in [InjectiveKind::Split, InjectiveKind::Ext] {
            assert_eq!(injectives_of_torf(&cat, SubcatSet::EMPTY, k).unwrap(), SubcatSet::EMPTY);
        }
        assert!(injectives_of_torf(&cat, set(&[S1, S2]), InjectiveKind::Ext).is_err());
        assert!(is_split_injective_bounded(&cat, P, set(&[S2, P]), 2).unwrap());
        assert!(!is_split_injective_bounded(&cat, S2, set(&[S2, P]), 1).unwrap());
    }

    #[test]
    fn perpendicular_categories() {
        let cat = a2();
        assert_eq!(jperp(&cat, set(&[P])).unwrap(), set(&[S1]));
        assert_eq!(jperp(&cat, SubcatSet::EMPTY).unwrap(), cat.full());
        assert_eq!(jperp(&cat, set(&[S1, P])).unwrap(), SubcatSet::EMPTY);
        assert!(jperp(&cat, set(&[S1, S2])).is_err());
    }

    #[test]
    fn reduction_and_lifting() {
        let cat = a2();
        assert_eq!(reduce_pair(&cat, set(&[S1]), set(&[P])).unwrap(), set(&[S1]));
        assert_eq!(reduce_pair(&cat, set(&[S2]), SubcatSet::EMPTY).unwrap(), set(&[S2]));
        assert_eq!(lift_through_reduction(&cat, set(&[S1]), set(&[P])).unwrap(), set(&[S1]));
        assert_eq!(lift_through_reduction(&cat, SubcatSet::EMPTY, set(&[P])).unwrap(), SubcatSet::EMPTY);
        assert_eq!(lift_through_reduction(&cat, set(&[S2]), SubcatSet::EMPTY).unwrap(), set(&[S2]));
        let w = jperp(&cat, set(&[P])).unwrap();
        assert_eq!(cogen(&cat, set(&[P, S1])).intersect(w), cogen(&cat, set(&[S1])).intersect(w));
        assert_eq!(cogen(&cat, set(&[S1])).intersect(w), set(&[S1]));
    }

    #[test]
    fn completions() {
        let cat = a2();
        assert_eq!(complete_to_torf(&cat, set(&[S1]), cat.full()).unwrap(), set(&[S1, P]));
        assert_eq!(complete_to_torf(&cat, SubcatSet::EMPTY, set(&[S2, P])).unwrap(), set(&[P]));
        assert_eq!(complete_to_torf(&cat, set(&[P]), set(&[S2, P])).unwrap(), set(&[P]));
    }
}
