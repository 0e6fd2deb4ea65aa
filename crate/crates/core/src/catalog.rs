//! The certified list of indecomposable modules and its tables.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use parking_lot::Mutex;
use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::ar::{ar_sequence, ext1, middle_term, tau_forward, tau_inverse};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::Matrix;
use crate::module::{
    direct_sum, find_isomorphism, hom_basis, hom_dim, is_indecomposable, kernel, points, HomBasis, Limits, Module,
};
use crate::set::{SubcatSet, MAX_CATALOG};

/// Outcome of the closure checks performed while building a catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub complete: bool,
    pub transcript: Vec<String>,
}

pub struct Catalog<F> {
    algebra: Arc<Algebra<F>>,
    entries: Vec<Module<F>>,
    labels: Vec<String>,
    hom: Vec<Vec<usize>>,
    ext: Vec<Vec<usize>>,
    tau: Vec<Option<usize>>,
    tau_inv: Vec<Option<usize>>,
    projective: Vec<bool>,
    injective: Vec<bool>,
    /// multiplicities of the middle term of the almost split sequence starting at each entry
    ar_middle: Vec<Option<Vec<usize>>>,
    /// `[z][x]`: every summand of every middle term of an extension of `z` by `x`
    ext_middles: Vec<Vec<SubcatSet>>,
    hom_inverse: Matrix<BigRational>,
    certificate: Certificate,
    limits: Limits,
    dim_bound: usize,
    filt_memo: Mutex<HashMap<(SubcatSet, Vec<usize>), bool>>,
    hom_cache: Vec<OnceLock<HomBasis<F>>>,
    pub(crate) closure_memo: Mutex<HashMap<(u8, SubcatSet), SubcatSet>>,
}

impl<F: FiniteField> std::fmt::Debug for Catalog<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Catalog").field("labels", &self.labels).field("dim_bound", &self.dim_bound).finish()
    }
}

fn connected_support<F: FiniteField>(alg: &Algebra<F>, dims: &[usize], use_arrow: impl Fn(usize) -> bool) -> bool {
    let support: Vec<usize> = (0..dims.len()).filter(|&v| dims[v] > 0).collect();
    let Some(&start) = support.first() else { return false };
    let mut seen = vec![false; dims.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for (a, arrow) in alg.arrows().iter().enumerate() {
            if !use_arrow(a) || dims[arrow.source] == 0 || dims[arrow.target] == 0 {
                continue;
            }
            for (x, y) in [(arrow.source, arrow.target), (arrow.target, arrow.source)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    support.iter().all(|&v| seen[v])
}

/// Nonzero dimension vectors of total at most `bound` with connected support,
/// by total dimension and then lexicographically descending.
pub fn dimension_vectors<F: FiniteField>(alg: &Algebra<F>, bound: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in 0..=left {
            cur.push(d);
            rec(n, left - d, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    rec(alg.num_vertices(), bound, &mut Vec::new(), &mut all);
    let mut out: Vec<Vec<usize>> = all.into_iter().filter(|d| connected_support(alg, d, |_| true)).collect();
    out.sort_by(|a, b| {
        let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
        sa.cmp(&sb).then_with(|| b.cmp(a))
    });
    out
}

/// Cheap isomorphism invariant used to bucket candidates.
fn invariant<F: FiniteField>(m: &Module<F>) -> Vec<usize> {
    let mut k: Vec<usize> = m.maps().iter().map(Matrix::rank).collect();
    k.push(hom_dim(m, m));
    for i in 0..m.dims().len() {
        for j in 0..m.dims().len() {
            for p in m.algebra().basis(i, j) {
                if p.len() >= 2 {
                    k.push(m.path_matrix(p).rank());
                }
            }
        }
    }
    k
}

/// Indecomposables of dimension vector `dims`, one per isomorphism class.
pub fn indecomposables_of_dimension<F: FiniteField>(
    alg: &Arc<Algebra<F>>,
    dims: &[usize],
    limits: &Limits,
) -> Result<Vec<Module<F>>> {
    let shapes: Vec<(usize, usize)> = alg.arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect();
    let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
    limits.check_points::<F>(entries)?;
    let mut found: Vec<(Vec<usize>, Module<F>)> = Vec::new();
    for digits in points::<F>(entries) {
        let mut at = 0;
        let maps: Vec<Matrix<F>> = shapes
            .iter()
            .map(|&(r, c)| {
                let m = Matrix::from_vec(r, c, digits[at..at + r * c].to_vec());
                at += r * c;
                m
            })
            .collect();
        if !connected_support(alg, dims, |a| !maps[a].is_zero()) {
            continue;
        }
        let m = Module::new_unchecked(alg.clone(), dims.to_vec(), maps);
        if !m.satisfies_relations() || !is_indecomposable(&m, limits)? {
            continue;
        }
        let key = invariant(&m);
        let mut new = true;
        for (k, other) in &found {
            if *k == key && find_isomorphism(&m, other, limits)?.is_some() {
                new = false;
                break;
            }
        }
        if new {
            found.push((key, m));
        }
    }
    Ok(found.into_iter().map(|(_, m)| m).collect())
}

fn to_rational(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn label_entries<F: FiniteField>(alg: &Algebra<F>, entries: &[Module<F>], proj: &[Option<usize>], inj: &[Option<usize>]) -> Vec<String> {
    let names = &alg.spec().vertices;
    let mut labels: Vec<String> = entries
        .iter()
        .enumerate()
        .map(|(i, m)| {
            if m.total_dim() == 1 {
                let v = m.dims().iter().position(|&d| d == 1).unwrap();
                format!("S{}", names[v])
            } else if let Some(v) = proj[i] {
                format!("P{}", names[v])
            } else if let Some(v) = inj[i] {
                format!("I{}", names[v])
            } else {
                let d: Vec<String> = m.dims().iter().map(usize::to_string).collect();
                format!("M({})", d.join(","))
            }
        })
        .collect();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for l in labels.iter_mut() {
        let c = seen.entry(l.clone()).or_insert(0);
        *c += 1;
        if *c > 1 {
            l.push_str(&format!("#{c}"));
        }
    }
    labels
}

impl<F: FiniteField> Catalog<F> {
    /// Enumerate indecomposables up to `dim_bound` and certify the result.
    pub fn build(algebra: Arc<Algebra<F>>, dim_bound: usize, limits: Limits) -> Result<Self> {
        let dvecs = dimension_vectors(&algebra, dim_bound);
        let per_dim: Vec<Vec<Module<F>>> = dvecs
            .par_iter()
            .map(|d| indecomposables_of_dimension(&algebra, d, &limits))
            .collect::<Result<_>>()?;
        let entries: Vec<Module<F>> = per_dim.into_iter().flatten().collect();
        Self::from_entries(algebra, entries, dim_bound, limits)
    }

    /// Smallest bound from the largest projective or injective up to `max_bound` that certifies.
    pub fn build_auto(algebra: Arc<Algebra<F>>, max_bound: usize, limits: Limits) -> Result<Self> {
        let start = min_dim_bound(&algebra);
        let mut last = Error::Certificate(format!("no bound in {start}..={max_bound} tried"));
        for bound in start..=max_bound.max(start) {
            match Self::build(algebra.clone(), bound, limits) {
                Ok(c) => return Ok(c),
                Err(e @ Error::Certificate(_)) => last = e,
                Err(e) => return Err(e),
            }
        }
        Err(last)
    }

    /// Fill tables and run the completeness checks on a given list of indecomposables.
    pub fn from_entries(algebra: Arc<Algebra<F>>, entries: Vec<Module<F>>, dim_bound: usize, limits: Limits) -> Result<Self> {
        let n = entries.len();
        if n > MAX_CATALOG {
            return Err(Error::CatalogTooLarge(n));
        }
        if n == 0 {
            return Err(Error::Certificate("no indecomposables found".into()));
        }
        let hom: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|i| (0..n).map(|j| hom_dim(&entries[i], &entries[j])).collect())
            .collect();
        let hmat = Matrix::from_rows(&hom.iter().map(|r| r.iter().map(|&x| to_rational(x)).collect()).collect::<Vec<_>>());
        let hom_inverse = hmat
            .inverse()
            .ok_or_else(|| Error::Certificate("Hom table is singular (duplicate entries)".into()))?;
        let ext: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|i| (0..n).map(|j| ext1(&entries[i], &entries[j]).map(|e| e.dim())).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;

        let mut cat = Catalog {
            algebra: algebra.clone(),
            labels: Vec::new(),
            entries,
            hom,
            ext,
            tau: vec![None; n],
            tau_inv: vec![None; n],
            projective: vec![false; n],
            injective: vec![false; n],
            ar_middle: vec![None; n],
            ext_middles: vec![vec![SubcatSet::EMPTY; n]; n],
            hom_inverse,
            certificate: Certificate { complete: false, transcript: Vec::new() },
            limits,
            dim_bound,
            filt_memo: Mutex::new(HashMap::new()),
            hom_cache: (0..n * n).map(|_| OnceLock::new()).collect(),
            closure_memo: Mutex::new(HashMap::new()),
        };
        let mut transcript = Vec::new();
        let fail = |msg: String| Err(Error::Certificate(msg));

        let mut proj_vertex = vec![None; n];
        let mut inj_vertex = vec![None; n];
        for v in 0..algebra.num_vertices() {
            let name = &algebra.spec().vertices[v];
            for (side, module, flags) in [
                ("projective", Module::projective(&algebra, v), &mut proj_vertex),
                ("injective", Module::injective(&algebra, v), &mut inj_vertex),
            ] {
                match cat.index_of(&module) {
                    Some(i) => {
                        flags[i] = Some(v);
                        transcript.push(format!("{side} at vertex {name}: entry {i}"));
                    }
                    None => return fail(format!("{side} at vertex {name} (dimension vector {:?}) missing", module.dims())),
                }
            }
        }
        cat.projective = proj_vertex.iter().map(Option::is_some).collect();
        cat.injective = inj_vertex.iter().map(Option::is_some).collect();
        cat.labels = label_entries(&algebra, &cat.entries, &proj_vertex, &inj_vertex);

        let translates: Vec<(Module<F>, Module<F>)> =
            cat.entries.par_iter().map(|m| (tau_forward(m), tau_inverse(m))).collect();
        for (i, (t, ti)) in translates.iter().enumerate() {
            if !t.is_zero() {
                match cat.index_of(t) {
                    Some(j) => cat.tau[i] = Some(j),
                    None => return fail(format!("τ of entry {i} (dimension vector {:?}) missing", t.dims())),
                }
            } else if !cat.projective[i] {
                return fail(format!("τ of non-projective entry {i} vanished"));
            }
            if !ti.is_zero() {
                match cat.index_of(ti) {
                    Some(j) => cat.tau_inv[i] = Some(j),
                    None => return fail(format!("τ⁻¹ of entry {i} (dimension vector {:?}) missing", ti.dims())),
                }
            } else if !cat.injective[i] {
                return fail(format!("τ⁻¹ of non-injective entry {i} vanished"));
            }
        }
        transcript.push("closed under τ and τ⁻¹".to_string());

        let middles: Vec<Option<Result<Module<F>>>> = (0..n)
            .into_par_iter()
            .map(|i| (!cat.injective[i]).then(|| ar_sequence(&cat.entries[i], &limits).map(|s| s.middle().clone())))
            .collect();
        for (i, m) in middles.into_iter().enumerate() {
            let Some(m) = m else { continue };
            let m = m?;
            match cat.decompose_unchecked(&m) {
                Ok(mult) => {
                    let parts: Vec<String> = mult
                        .iter()
                        .enumerate()
                        .filter(|(_, &k)| k > 0)
                        .map(|(j, &k)| if k == 1 { cat.labels[j].clone() } else { format!("{}^{k}", cat.labels[j]) })
                        .collect();
                    transcript.push(format!("almost split sequence at {}: middle {}", cat.labels[i], parts.join(" + ")));
                    cat.ar_middle[i] = Some(mult);
                }
                Err(_) => return fail(format!("middle term of the almost split sequence at entry {i} does not decompose")),
            }
        }

        for z in 0..n {
            for x in 0..n {
                if cat.ext[z][x] > 0 {
                    cat.ext_middles[z][x] = cat.compute_ext_middles(z, x)?;
                }
            }
        }
        transcript.push(format!("complete with {n} indecomposables at dimension bound {dim_bound}"));
        cat.certificate = Certificate { complete: true, transcript };
        Ok(cat)
    }

    fn compute_ext_middles(&self, z: usize, x: usize) -> Result<SubcatSet> {
        let e = ext1(&self.entries[z], &self.entries[x])?;
        self.limits.check_points::<F>(e.dim())?;
        let mut out = SubcatSet::EMPTY;
        for c in points::<F>(e.dim()) {
            let mid = middle_term(&e, &c);
            out = out.union(support(&self.decompose_unchecked(mid.middle())?));
        }
        Ok(out)
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn full(&self) -> SubcatSet {
        SubcatSet::full(self.len())
    }

    pub fn entries(&self) -> &[Module<F>] {
        &self.entries
    }

    pub fn module(&self, i: usize) -> &Module<F> {
        &self.entries[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `dim Hom(M_i, M_j)`
    pub fn hom(&self, i: usize, j: usize) -> usize {
        self.hom[i][j]
    }

    /// A basis of `Hom(M_i, M_j)`, computed once.
    pub fn hom_basis(&self, i: usize, j: usize) -> &HomBasis<F> {
        self.hom_cache[i * self.len() + j]
            .get_or_init(|| hom_basis(&self.entries[i], &self.entries[j]).expect("same algebra"))
    }

    /// `dim Ext¹(M_i, M_j)`
    pub fn ext(&self, i: usize, j: usize) -> usize {
        self.ext[i][j]
    }

    pub fn tau(&self, i: usize) -> Option<usize> {
        self.tau[i]
    }

    pub fn tau_inv(&self, i: usize) -> Option<usize> {
        self.tau_inv[i]
    }

    pub fn is_projective(&self, i: usize) -> bool {
        self.projective[i]
    }

    pub fn is_injective(&self, i: usize) -> bool {
        self.injective[i]
    }

    pub fn ar_middle(&self, i: usize) -> Option<&[usize]> {
        self.ar_middle[i].as_deref()
    }

    /// Summands of all middle terms of extensions `0 -> M_x -> E -> M_z -> 0`.
    pub fn ext_middles(&self, z: usize, x: usize) -> SubcatSet {
        self.ext_middles[z][x]
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn dim_bound(&self) -> usize {
        self.dim_bound
    }

    /// `τ⁻¹` applied to every member, injectives contributing nothing.
    pub fn tau_inv_set(&self, s: SubcatSet) -> SubcatSet {
        s.iter().filter_map(|i| self.tau_inv[i]).collect()
    }

    pub fn tau_set(&self, s: SubcatSet) -> SubcatSet {
        s.iter().filter_map(|i| self.tau[i]).collect()
    }

    /// `dim Hom(M_i, ⊕ mult)` summed with multiplicities.
    pub fn hom_from_sum(&self, mult: &[usize], j: usize) -> usize {
        mult.iter().enumerate().map(|(i, &k)| k * self.hom[i][j]).sum()
    }

    pub fn hom_to_sum(&self, i: usize, mult: &[usize]) -> usize {
        mult.iter().enumerate().map(|(j, &k)| k * self.hom[i][j]).sum()
    }

    /// Catalog index of an indecomposable module.
    pub fn index_of(&self, m: &Module<F>) -> Option<usize> {
        let mult = self.decompose_unchecked(m).ok()?;
        let mut nz = mult.iter().enumerate().filter(|(_, &k)| k > 0);
        match (nz.next(), nz.next()) {
            (Some((i, 1)), None) => Some(i),
            _ => None,
        }
    }

    /// Multiplicities of catalog entries from Hom dimensions, checked on dimension vectors.
    pub fn decompose_unchecked(&self, m: &Module<F>) -> Result<Vec<usize>> {
        if !m.same_algebra(&self.entries[0]) {
            return Err(Error::MismatchedAlgebras);
        }
        let n = self.len();
        let h: Vec<BigRational> = (0..n).map(|x| to_rational(hom_dim(&self.entries[x], m))).collect();
        let sol = self.hom_inverse.mul(&Matrix::from_columns(n, &[h]));
        let mut mult = Vec::with_capacity(n);
        for i in 0..n {
            let x = &sol[(i, 0)];
            if !x.is_integer() || x.is_negative() {
                return Err(Error::Decomposition(format!("no nonnegative integer solution (entry {i}: {x})")));
            }
            let k: usize = x
                .to_integer()
                .try_into()
                .map_err(|_| Error::Decomposition("multiplicity overflow".into()))?;
            mult.push(k);
        }
        let mut dims = vec![0usize; m.dims().len()];
        for (i, &k) in mult.iter().enumerate() {
            for (d, e) in dims.iter_mut().zip(self.entries[i].dims()) {
                *d += k * e;
            }
        }
        if dims != m.dims() {
            return Err(Error::Decomposition("dimension vectors disagree (incomplete catalog)".into()));
        }
        Ok(mult)
    }

    /// Krull-Schmidt multiplicities, confirmed by an explicit isomorphism when
    /// the Hom space is small enough to search.
    pub fn decompose(&self, m: &Module<F>) -> Result<Vec<usize>> {
        let mult = self.decompose_unchecked(m)?;
        let sum = self.sum_of(&mult);
        match find_isomorphism(&sum, m, &self.limits) {
            Ok(Some(_)) => Ok(mult),
            Ok(None) => Err(Error::Verification("decomposition is not an isomorphism".into())),
            Err(Error::CapExceeded { .. }) => Ok(mult),
            Err(e) => Err(e),
        }
    }

    pub fn sum_of(&self, mult: &[usize]) -> Module<F> {
        let parts: Vec<Module<F>> = mult
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(self.entries[i].clone(), k))
            .collect();
        direct_sum(&self.algebra, &parts).expect("same algebra")
    }

    pub fn sum_of_set(&self, s: SubcatSet) -> Module<F> {
        let mut mult = vec![0; self.len()];
        for i in s.iter() {
            mult[i] = 1;
        }
        self.sum_of(&mult)
    }

    /// Membership of an arbitrary module in the additive closure of `s`.
    pub fn in_add(&self, m: &Module<F>, s: SubcatSet) -> Result<bool> {
        Ok(support(&self.decompose_unchecked(m)?).is_subset(s))
    }

    /// Does `m` admit a finite filtration with subquotients in `add s`?
    pub fn filt_member(&self, m: &Module<F>, s: SubcatSet) -> Result<bool> {
        let mult = self.decompose_unchecked(m)?;
        self.filt_mult(&mult, s)
    }

    fn filt_mult(&self, mult: &[usize], s: SubcatSet) -> Result<bool> {
        if support(mult).is_subset(s) {
            return Ok(true);
        }
        let key = (s, mult.to_vec());
        if let Some(&b) = self.filt_memo.lock().get(&key) {
            return Ok(b);
        }
        let m = self.sum_of(mult);
        let mut result = false;
        let mut tried: BTreeSet<Vec<usize>> = BTreeSet::new();
        'targets: for t in s.iter() {
            let tm = &self.entries[t];
            if self.hom_from_sum(mult, t) == 0 || tm.dims().iter().zip(m.dims()).any(|(a, b)| a > b) {
                continue;
            }
            let hom = hom_basis(&m, tm)?;
            for f in hom.all(&self.limits)? {
                if !f.is_surjective() {
                    continue;
                }
                let k = self.decompose_unchecked(&kernel(&f).0)?;
                if !tried.insert(k.clone()) {
                    continue;
                }
                if self.filt_mult(&k, s)? {
                    result = true;
                    break 'targets;
                }
            }
        }
        self.filt_memo.lock().insert(key, result);
        Ok(result)
    }
}

/// Indices with nonzero multiplicity.
pub fn support(mult: &[usize]) -> SubcatSet {
    mult.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i).collect()
}

/// Largest total dimension of an indecomposable projective or injective.
pub fn min_dim_bound<F: FiniteField>(alg: &Algebra<F>) -> usize {
    (0..alg.num_vertices())
        .flat_map(|v| {
            let p: usize = (0..alg.num_vertices()).map(|w| alg.basis(v, w).len()).sum();
            let i: usize = (0..alg.num_vertices()).map(|w| alg.basis(w, v).len()).sum();
            [p, i]
        })
        .max()
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    type F2 = Fp<2>;

    fn alg(text: &str) -> Arc<Algebra<F2>> {
        Arc::new(Algebra::from_text(text).unwrap())
    }

    #[test]
    fn a2_catalog() {
        let cat = Catalog::build(alg("vertex 1\nvertex 2\narrow a 1 2\n"), 2, Limits::default()).unwrap();
        assert_eq!(cat.len(), 3);
        assert_eq!(cat.labels(), &["S1", "S2", "P1"]);
        assert_eq!(cat.module(2).dims(), &[1, 1]);
        assert!(cat.certificate().complete);
        assert_eq!((cat.tau(0), cat.tau_inv(1), cat.tau_inv(0), cat.tau_inv(2)), (Some(1), Some(0), None, None));
        assert_eq!(cat.ext(0, 1), 1);
        assert_eq!(cat.ar_middle(1), Some(&[0, 0, 1][..]));
        assert_eq!(cat.ext_middles(0, 1), SubcatSet::from_indices([0, 1, 2]));
    }

    #[test]
    fn bound_below_projective_fails() {
        let err = Catalog::build(alg("vertex 1\nvertex 2\narrow a 1 2\n"), 1, Limits::default()).unwrap_err();
        assert!(matches!(err, Error::Certificate(_)));
    }

    #[test]
    fn a3_catalog_and_decomposition() {
        let cat = Catalog::build(alg("vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\n"), 3, Limits::default()).unwrap();
        assert_eq!(cat.len(), 6);
        let m = cat.sum_of(&[1, 0, 2, 0, 1, 0]);
        assert_eq!(cat.decompose(&m).unwrap(), vec![1, 0, 2, 0, 1, 0]);
        assert_eq!(cat.decompose(&Module::zero(cat.algebra())).unwrap(), vec![0; 6]);
    }

    #[test]
    fn filtrations_on_a2() {
        let cat = Catalog::build(alg("vertex 1\nvertex 2\narrow a 1 2\n"), 2, Limits::default()).unwrap();
        let p = cat.module(2).clone();
        assert!(cat.filt_member(&p, SubcatSet::from_indices([0, 1])).unwrap());
        assert!(!cat.filt_member(&p, SubcatSet::from_indices([0])).unwrap());
        assert!(cat.filt_member(&Module::zero(cat.algebra()), SubcatSet::EMPTY).unwrap());
    }
}
