//! Subcategories of a certified catalog: closure operators, perpendicular
//! categories, the exact `W_L` operator and the ICE test.

use std::collections::HashSet;

use crate::catalog::{support, Catalog};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::Matrix;
use crate::module::{direct_sum, hom_basis, kernel, Module, Morphism, Submodule};
use crate::set::SubcatSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Closure {
    Cogen,
    Gen,
    Ext,
    Torf,
    Tors,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Torf,
    Tors,
    ExtClosed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerpSide {
    /// `S^⊥`: no nonzero maps from `S`
    Right,
    /// `⊥S`: no nonzero maps into `S`
    Left,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceSide {
    Trace,
    Reject,
}

/// Sum of the images of all maps from members of `s` into `m`.
pub fn trace<F: FiniteField>(cat: &Catalog<F>, s: SubcatSet, m: &Module<F>) -> Result<Submodule<F>> {
    let mut acc = Submodule::zero(m);
    for i in s.iter() {
        let h = hom_basis(cat.module(i), m)?;
        for k in 0..h.dim() {
            acc = acc.sum(&Submodule::image_of(&h.morphism(k)));
        }
    }
    Ok(acc)
}

/// Intersection of the kernels of all maps from `m` to members of `s`.
pub fn reject<F: FiniteField>(cat: &Catalog<F>, s: SubcatSet, m: &Module<F>) -> Result<Submodule<F>> {
    let basis = (0..m.dims().len())
        .map(|v| {
            let mut stacked = Matrix::zeros(0, m.dims()[v]);
            for i in s.iter() {
                let h = hom_basis(m, cat.module(i))?;
                for e in &h.elements {
                    stacked = stacked.vstack(&e[v]);
                }
            }
            Ok(stacked.nullspace())
        })
        .collect::<Result<_>>()?;
    Ok(Submodule { basis })
}

pub fn trace_or_reject<F: FiniteField>(
    cat: &Catalog<F>,
    s: SubcatSet,
    m: &Module<F>,
    side: TraceSide,
) -> Result<(Module<F>, Morphism<F>)> {
    let sub = match side {
        TraceSide::Trace => trace(cat, s, m)?,
        TraceSide::Reject => reject(cat, s, m)?,
    };
    Ok(sub.to_module(m))
}

/// Is the entry `i` cogenerated by `s`?
pub fn in_cogen(cat: &Catalog<impl FiniteField>, s: SubcatSet, i: usize) -> bool {
    let m = cat.module(i);
    (0..m.dims().len()).all(|v| {
        let d = m.dims()[v];
        if d == 0 {
            return true;
        }
        let mut stacked = Matrix::zeros(0, d);
        for j in s.iter() {
            for e in &cat.hom_basis(i, j).elements {
                stacked = stacked.vstack(&e[v]);
            }
        }
        stacked.rank() == d
    })
}

/// Is the entry `i` generated by `s`?
pub fn in_gen(cat: &Catalog<impl FiniteField>, s: SubcatSet, i: usize) -> bool {
    let m = cat.module(i);
    (0..m.dims().len()).all(|v| {
        let d = m.dims()[v];
        if d == 0 {
            return true;
        }
        let mut stacked = Matrix::zeros(d, 0);
        for j in s.iter() {
            for e in &cat.hom_basis(j, i).elements {
                stacked = stacked.hstack(&e[v]);
            }
        }
        stacked.rank() == d
    })
}

pub fn cogen<F: FiniteField>(cat: &Catalog<F>, s: SubcatSet) -> SubcatSet {
    (0..cat.len()).filter(|&i| s.contains(i) || in_cogen(cat, s, i)).collect()
}

pub fn gen<F: FiniteField>(cat: &Catalog<F>, s: SubcatSet) -> SubcatSet {
    (0..cat.len()).filter(|&i| s.contains(i) || in_gen(cat, s, i)).collect()
}

fn ext_step<F: FiniteField>(cat: &Catalog<F>, s: SubcatSet) -> Result<SubcatSet> {
    let mut out = s;
    for z in s.iter() {
        for x in s.iter() {
            out = out.union(cat.ext_middles(z, x));
        }
    }
    for i in 0..cat.len() {
        if !out.contains(i) && cat.filt_member(cat.module(i), s)? {
            out = out.with(i);
        }
    }
    Ok(out)
}

fn memo_key(kind: Closure) -> u8 {
    kind as u8
}

pub fn closure<F: FiniteField>(cat: &Catalog<F>, s: SubcatSet, kind: Closure) -> Result<SubcatSet> {
    if s.is_empty() {
        return Ok(s);
    }
    let key = (memo_key(kind), s);
    if let Some(&r) = cat.closure_memo.lock().get(&key) {
        return Ok(r);
    }
    let result = match kind {
        Closure::Cogen => cogen(cat, s),
        Closure::Gen => gen(cat, s),
        Closure::Ext | Closure::Torf | Closure::Tors => {
            let mut cur = s;
            loop {
                let next = match kind {
                    Closure::Ext => ext_step(cat, cur)?,
                    Closure::Torf => ext_step(cat, cogen(cat, cur))?,
                    _ => ext_step(cat, gen(cat, cur))?,
                };
                if next == cur {
                    break cur;
                }
                cur = next;
            }
        }
    };
    cat.closure_memo.lock().insert(key, result);
    Ok(result)
}

pub fn is_class<F: FiniteField>(cat: &Catalog<F>, s: SubcatSet, kind: ClassKind) -> Result<bool> {
    match kind {
        ClassKind::Torf => Ok(cogen(cat, s) == s && closure(cat, s, Closure::Ext)? == s),
        ClassKind::Tors => Ok(gen(cat, s) == s && closure(cat, s, Closure::Ext)? == s),
        ClassKind::ExtClosed => Ok(closure(cat, s, Closure::Ext)? == s),
    }
}

pub fn perp<F: FiniteField>(cat: &Catalog<F>, s: SubcatSet, side: PerpSide) -> SubcatSet {
    (0..cat.len())
        .filter(|&n| {
            s.iter().all(|x| match side {
                PerpSide::Right => cat.hom(x, n) == 0,
                PerpSide::Left => cat.hom(n, x) == 0,
            })
        })
        .collect()
}

/// The canonical sequence `0 -> tM -> M -> fM -> 0` for a torsion class `t`.
pub fn torsion_decompose<F: FiniteField>(cat: &Catalog<F>, t: SubcatSet, m: &Module<F>) -> Result<(Module<F>, Module<F>)> {
    if !is_class(cat, t, ClassKind::Tors)? {
        return Err(Error::Precondition("not a torsion class".into()));
    }
    let sub = trace(cat, t, m)?;
    Ok((sub.to_module(m).0, sub.quotient(m).0))
}

/// Members of the catalog appearing in `m`, erroring if `m` has repeated summands.
pub fn basic_support<F: FiniteField>(cat: &Catalog<F>, m: &Module<F>) -> Result<SubcatSet> {
    let mult = cat.decompose_unchecked(m)?;
    if mult.iter().any(|&k| k > 1) {
        return Err(Error::Verification("module is not basic".into()));
    }
    Ok(support(&mult))
}

/// Coefficient vectors spanning each line of `F^h` once (first nonzero entry one).
fn projective_points<F: FiniteField>(h: usize) -> impl Iterator<Item = Vec<F>> {
    crate::module::points::<F>(h).filter(|c| c.iter().find(|x| !x.is_zero()).is_some_and(|x| *x == F::one()))
}

/// Every submodule of `m` that is a sum of images of maps from members of `gens`.
pub fn generated_submodules<F: FiniteField>(cat: &Catalog<F>, gens: SubcatSet, m: &Module<F>) -> Result<Vec<Submodule<F>>> {
    let mut singles: Vec<Submodule<F>> = Vec::new();
    let mut seen = HashSet::new();
    let zero = Submodule::zero(m);
    seen.insert(zero.key());
    for z in gens.iter() {
        let h = hom_basis(cat.module(z), m)?;
        if h.dim() == 0 {
            continue;
        }
        cat.limits().check_points::<F>(h.dim())?;
        for c in projective_points::<F>(h.dim()) {
            let img = Submodule::image_of(&h.combine(&c));
            if seen.insert(img.key()) {
                singles.push(img);
            }
        }
    }
    let mut all = vec![zero];
    all.extend(singles.iter().cloned());
    let mut frontier = singles.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &singles {
                let s = a.sum(b);
                if seen.insert(s.key()) {
                    next.push(s);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(all)
}

/// `X * Y`: entries `M` with a submodule in `add x` whose quotient lies in `add y`.
pub fn star<F: FiniteField>(cat: &Catalog<F>, x: SubcatSet, y: SubcatSet) -> Result<SubcatSet> {
    let mut out = x.union(y);
    for i in 0..cat.len() {
        if out.contains(i) {
            continue;
        }
        let m = cat.module(i);
        for b in generated_submodules(cat, x, m)? {
            if b.total_dim() == 0 {
                continue;
            }
            let (bm, _) = b.to_module(m);
            if !cat.in_add(&bm, x)? {
                continue;
            }
            let (q, _) = b.quotient(m);
            if cat.in_add(&q, y)? {
                out = out.with(i);
                break;
            }
        }
    }
    Ok(out)
}

/// Bases (as rows) of all subspaces of `F^h`, in reduced echelon form.
pub fn subspaces<F: FiniteField>(h: usize) -> Vec<Matrix<F>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << h) {
        let pivots: Vec<usize> = (0..h).filter(|&j| mask >> j & 1 == 1).collect();
        let k = pivots.len();
        // free positions: (row r, column j) with j > pivot r and j not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| ((pivots[r] + 1)..h).filter(|j| !pivots.contains(j)).map(move |j| (r, j)))
            .collect();
        for vals in crate::module::points::<F>(free.len()) {
            let mut m = Matrix::zeros(k, h);
            for (r, &p) in pivots.iter().enumerate() {
                m[(r, p)] = F::one();
            }
            for (&(r, j), v) in free.iter().zip(vals) {
                m[(r, j)] = v;
            }
            out.push(m);
        }
    }
    out
}

/// `W_L(C)`: members `X` such that every map from `add C` to `X` has its kernel in `C`.
///
/// A map `⊕ Z^{m_Z} -> X` can be brought by column operations to one whose
/// components from each `Z` form a basis of a subspace of `Hom(Z, X)`, plus
/// zero maps. So it suffices to range over tuples of subspaces, which makes
/// the test exact.
pub fn wl_operator<F: FiniteField>(cat: &Catalog<F>, c: SubcatSet) -> Result<SubcatSet> {
    let mut out = SubcatSet::EMPTY;
    for x in c.iter() {
        if wl_member(cat, c, x)? {
            out = out.with(x);
        }
    }
    Ok(out)
}

fn wl_member<F: FiniteField>(cat: &Catalog<F>, c: SubcatSet, x: usize) -> Result<bool> {
    let sources: Vec<usize> = c.iter().filter(|&z| cat.hom(z, x) > 0).collect();
    let choices: Vec<Vec<Matrix<F>>> = sources.iter().map(|&z| subspaces::<F>(cat.hom(z, x))).collect();
    let total: u128 = choices.iter().map(|v| v.len() as u128).product();
    if total > cat.limits().enumeration_cap {
        return Err(Error::CapExceeded { needed: total, cap: cat.limits().enumeration_cap });
    }
    let xm = cat.module(x);
    let mut idx = vec![0usize; sources.len()];
    loop {
        let mut parts = Vec::new();
        let mut comps: Vec<Matrix<F>> = xm.dims().iter().map(|&d| Matrix::zeros(d, 0)).collect();
        for (s, &z) in sources.iter().enumerate() {
            let basis = &choices[s][idx[s]];
            let h = cat.hom_basis(z, x);
            for r in 0..basis.rows() {
                let f = h.combine(basis.row(r));
                for (acc, fc) in comps.iter_mut().zip(&f.comps) {
                    *acc = acc.hstack(fc);
                }
                parts.push(cat.module(z).clone());
            }
        }
        if !parts.is_empty() {
            let y = direct_sum(cat.algebra(), &parts)?;
            let f = Morphism::new_unchecked(y, xm.clone(), comps);
            if !cat.in_add(&kernel(&f).0, c)? {
                return Ok(false);
            }
        }
        // next tuple
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(true);
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Multiplicity vectors over `s` with entries at most `bound`, excluding zero.
fn bounded_sums(s: SubcatSet, bound: usize) -> Vec<Vec<(usize, usize)>> {
    let members: Vec<usize> = s.iter().collect();
    let mut out = Vec::new();
    let mut cur = vec![0usize; members.len()];
    loop {
        let mut k = 0;
        loop {
            if k == cur.len() {
                out.sort_by_key(|v: &Vec<(usize, usize)>| v.iter().map(|p| p.1).sum::<usize>());
                return out;
            }
            cur[k] += 1;
            if cur[k] <= bound {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
        out.push(members.iter().zip(&cur).filter(|(_, &m)| m > 0).map(|(&i, &m)| (i, m)).collect());
    }
}

/// Closure under images, cokernels and extensions.
///
/// Extension closure is tested exactly and torsion classes are accepted
/// directly. Otherwise images and cokernels of all maps into sums of members
/// with multiplicity at most `bound` are checked.
pub fn is_ice_bounded<F: FiniteField>(cat: &Catalog<F>, s: SubcatSet, bound: usize) -> Result<bool> {
    if !is_class(cat, s, ClassKind::ExtClosed)? {
        return Ok(false);
    }
    if gen(cat, s) == s {
        return Ok(true);
    }
    for target in bounded_sums(s, bound) {
        let mut mult = vec![0; cat.len()];
        for &(i, m) in &target {
            mult[i] = m;
        }
        let y = cat.sum_of(&mult);
        for u in generated_submodules(cat, s, &y)? {
            if !cat.in_add(&u.to_module(&y).0, s)? || !cat.in_add(&u.quotient(&y).0, s)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Torsion classes of a wide subcategory `w`: extension-closed subsets `t`
/// with `Gen(t) ∩ w ⊆ t`.
pub fn torsion_classes_in<F: FiniteField>(cat: &Catalog<F>, w: SubcatSet) -> Result<Vec<SubcatSet>> {
    let mut out = Vec::new();
    for t in w.subsets() {
        if gen(cat, t).intersect(w) == t && is_class(cat, t, ClassKind::ExtClosed)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// Direct check that `w` is closed under kernels and cokernels of maps
/// between sums of members with multiplicity at most `bound`, and under extensions.
pub fn is_wide_bounded<F: FiniteField>(cat: &Catalog<F>, w: SubcatSet, bound: usize) -> Result<bool> {
    if !is_class(cat, w, ClassKind::ExtClosed)? {
        return Ok(false);
    }
    let sums = bounded_sums(w, bound);
    for a in &sums {
        for b in &sums {
            let mut ma = vec![0; cat.len()];
            let mut mb = vec![0; cat.len()];
            for &(i, m) in a {
                ma[i] = m;
            }
            for &(i, m) in b {
                mb[i] = m;
            }
            let (x, y) = (cat.sum_of(&ma), cat.sum_of(&mb));
            let h = hom_basis(&x, &y)?;
            for f in h.all(cat.limits())? {
                let sq = crate::module::subquotients(&f);
                if !cat.in_add(&sq.kernel.0, w)? || !cat.in_add(&sq.cokernel.0, w)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::Fp;
    use crate::module::{is_isomorphic, Limits};
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
    fn trace_and_reject() {
        let cat = a2();
        let lim = Limits::default();
        let p = cat.module(P);
        assert!(trace_or_reject(&cat, set(&[S1]), p, TraceSide::Trace).unwrap().0.is_zero());
        let r = trace_or_reject(&cat, set(&[S1]), p, TraceSide::Reject).unwrap().0;
        assert!(is_isomorphic(&r, cat.module(S2), &lim).unwrap());
        let t = trace_or_reject(&cat, cat.full(), p, TraceSide::Trace).unwrap().0;
        assert_eq!(t.dims(), p.dims());
    }

    #[test]
    fn closures() {
        let cat = a2();
        assert_eq!(closure(&cat, set(&[P]), Closure::Cogen).unwrap(), set(&[S2, P]));
        assert_eq!(closure(&cat, set(&[S1, S2]), Closure::Ext).unwrap(), cat.full());
        for k in [Closure::Cogen, Closure::Gen, Closure::Ext, Closure::Torf, Closure::Tors] {
            assert_eq!(closure(&cat, SubcatSet::EMPTY, k).unwrap(), SubcatSet::EMPTY);
        }
        assert_eq!(closure(&cat, set(&[P]), Closure::Gen).unwrap(), set(&[S1, P]));
        assert_eq!(closure(&cat, set(&[S1]), Closure::Torf).unwrap(), set(&[S1]));
    }

    #[test]
    fn classes_and_perps() {
        let cat = a2();
        assert!(is_class(&cat, set(&[S2, P]), ClassKind::Torf).unwrap());
        assert!(!is_class(&cat, set(&[S1, S2]), ClassKind::Torf).unwrap());
        for k in [ClassKind::Torf, ClassKind::Tors, ClassKind::ExtClosed] {
            assert!(is_class(&cat, cat.full(), k).unwrap());
        }
        assert_eq!(perp(&cat, set(&[S1]), PerpSide::Right), set(&[S2, P]));
        assert_eq!(perp(&cat, set(&[P]), PerpSide::Left), set(&[S1]));
        assert_eq!(perp(&cat, SubcatSet::EMPTY, PerpSide::Left), cat.full());
    }

    #[test]
    fn torsion_parts() {
        let cat = a2();
        let (t, f) = torsion_decompose(&cat, set(&[S1]), cat.module(P)).unwrap();
        assert!(t.is_zero() && f.dims() == [1, 1]);
        let (t, f) = torsion_decompose(&cat, set(&[S1, P]), cat.module(S2)).unwrap();
        assert!(t.is_zero() && f.dims() == [0, 1]);
        let (t, f) = torsion_decompose(&cat, set(&[S1, P]), cat.module(P)).unwrap();
        assert!(f.is_zero() && t.dims() == [1, 1]);
        assert!(torsion_decompose(&cat, set(&[S2]), cat.module(P)).is_ok());
        assert!(torsion_decompose(&cat, set(&[P]), cat.module(P)).is_err());
    }

    #[test]
    fn wl_examples() {
        let cat = a2();
        assert_eq!(wl_operator(&cat, set(&[S1, P])).unwrap(), set(&[P]));
        assert_eq!(wl_operator(&cat, cat.full()).unwrap(), cat.full());
        assert_eq!(wl_operator(&cat, set(&[S1])).unwrap(), set(&[S1]));
    }

    #[test]
    fn ice_census_on_a2() {
        let cat = a2();
        assert!(is_ice_bounded(&cat, set(&[S1, P]), 2).unwrap());
        assert!(!is_ice_bounded(&cat, set(&[S2, P]), 2).unwrap());
        assert!(is_ice_bounded(&cat, cat.full(), 2).unwrap());
        let census: Vec<SubcatSet> =
            cat.full().subsets().filter(|&s| is_ice_bounded(&cat, s, 2).unwrap()).collect();
        assert_eq!(census, vec![set(&[]), set(&[S1]), set(&[S2]), set(&[P]), set(&[S1, P]), cat.full()]);
    }

    #[test]
    fn subspace_counts() {
        assert_eq!(subspaces::<Fp<2>>(0).len(), 1);
        assert_eq!(subspaces::<Fp<2>>(2).len(), 5);
        assert_eq!(subspaces::<Fp<2>>(3).len(), 16);
        assert_eq!(subspaces::<Fp<3>>(2).len(), 6);
    }

    #[test]
    fn star_on_a2() {
        let cat = a2();
        assert_eq!(star(&cat, set(&[S2]), set(&[S1])).unwrap(), cat.full());
        assert_eq!(star(&cat, set(&[S1]), set(&[S2])).unwrap(), set(&[S1, S2]));
        assert_eq!(star(&cat, set(&[P]), SubcatSet::EMPTY).unwrap(), set(&[P]));
    }
}
