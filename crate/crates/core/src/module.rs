//! Finite-dimensional representations, morphisms and Hom spaces.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Path};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::Matrix;

/// Default bound on the number of points visited by exhaustive Hom searches.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 20;

/// Enumeration limits shared by every exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `p^h` that may be enumerated point by point.
    pub enumeration_cap: u128,
    /// Seeded random trials tried before (or instead of) exhaustive search.
    pub random_trials: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { enumeration_cap: DEFAULT_ENUMERATION_CAP, random_trials: 64 }
    }
}

impl Limits {
    /// Number of points of `F^dim`, or `CapExceeded`.
    pub fn check_points<F: FiniteField>(&self, dim: usize) -> Result<u128> {
        let needed = (F::CHARACTERISTIC as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
        if needed > self.enumeration_cap {
            Err(Error::CapExceeded { needed, cap: self.enumeration_cap })
        } else {
            Ok(needed)
        }
    }
}

/// Iterate over all coefficient vectors in `F^dim`, in lexicographic order.
pub fn points<F: FiniteField>(dim: usize) -> impl Iterator<Item = Vec<F>> {
    let p = F::CHARACTERISTIC;
    let mut current: Option<Vec<u32>> = Some(vec![0; dim]);
    std::iter::from_fn(move || {
        let out = current.as_ref()?.iter().map(|&i| F::from_index(i)).collect();
        let c = current.as_mut().unwrap();
        let mut k = 0;
        loop {
            if k == c.len() {
                current = None;
                break;
            }
            c[k] += 1;
            if c[k] < p {
                break;
            }
            c[k] = 0;
            k += 1;
        }
        Some(out)
    })
}

/// A representation: one vector space per vertex, one matrix per arrow
/// (shape `dim target x dim source`).
#[derive(Clone)]
pub struct Module<F> {
    algebra: Arc<Algebra<F>>,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

impl<F: std::fmt::Debug> std::fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Module").field("dims", &self.dims).field("maps", &self.maps).finish()
    }
}

impl<F: PartialEq> PartialEq for Module<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

impl<F: Eq> Eq for Module<F> {}

impl<F: FiniteField> Module<F> {
    pub fn new(algebra: Arc<Algebra<F>>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        if dims.len() != algebra.num_vertices() {
            return Err(Error::InvalidModule("dimension vector has wrong length".into()));
        }
        if maps.len() != algebra.arrows().len() {
            return Err(Error::InvalidModule("wrong number of arrow matrices".into()));
        }
        for (m, a) in maps.iter().zip(algebra.arrows()) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidModule(format!("matrix for arrow {} has wrong shape", a.label)));
            }
        }
        let module = Module { algebra, dims, maps };
        if !module.satisfies_relations() {
            return Err(Error::InvalidModule("relations do not vanish".into()));
        }
        Ok(module)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra<F>>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        Module { algebra, dims, maps }
    }

    pub fn zero(algebra: &Arc<Algebra<F>>) -> Self {
        let dims = vec![0; algebra.num_vertices()];
        let maps = algebra.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Module { algebra: algebra.clone(), dims, maps }
    }

    pub fn simple(algebra: &Arc<Algebra<F>>, v: usize) -> Self {
        let mut dims = vec![0; algebra.num_vertices()];
        dims[v] = 1;
        let maps = algebra
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Module { algebra: algebra.clone(), dims, maps }
    }

    /// The indecomposable projective `e_i A`: paths starting at `i`.
    pub fn projective(algebra: &Arc<Algebra<F>>, i: usize) -> Self {
        let n = algebra.num_vertices();
        let dims: Vec<usize> = (0..n).map(|v| algebra.basis(i, v).len()).collect();
        let maps = algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let mut m = Matrix::zeros(dims[arrow.target], dims[arrow.source]);
                for (col, q) in algebra.basis(i, arrow.source).iter().enumerate() {
                    let mut path = q.arrows.clone();
                    path.push(a);
                    let (_, nf) = algebra.normal_form(i, &path).expect("composable");
                    for (row, x) in nf.into_iter().enumerate() {
                        m[(row, col)] = x;
                    }
                }
                m
            })
            .collect();
        Module { algebra: algebra.clone(), dims, maps }
    }

    /// The indecomposable injective `D(A e_i)`: duals of paths ending at `i`.
    pub fn injective(algebra: &Arc<Algebra<F>>, i: usize) -> Self {
        let n = algebra.num_vertices();
        let dims: Vec<usize> = (0..n).map(|v| algebra.basis(v, i).len()).collect();
        let maps = algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (v, w) = (arrow.source, arrow.target);
                let mut m = Matrix::zeros(dims[w], dims[v]);
                // (phi . a)(q') = phi(a q') for q' a path w -> i
                for (row, q2) in algebra.basis(w, i).iter().enumerate() {
                    let mut path = vec![a];
                    path.extend_from_slice(&q2.arrows);
                    let (_, nf) = algebra.normal_form(v, &path).expect("composable");
                    for (col, x) in nf.into_iter().enumerate() {
                        m[(row, col)] = x;
                    }
                }
                m
            })
            .collect();
        Module { algebra: algebra.clone(), dims, maps }
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
    }

    pub fn path_matrix(&self, path: &Path) -> Matrix<F> {
        self.algebra.path_matrix(&self.maps, &self.dims, path)
    }

    pub fn satisfies_relations(&self) -> bool {
        let spec = self.algebra.spec();
        spec.relations.iter().all(|rel| {
            let (s, t) = spec.path_endpoints(&rel.terms[0].path).expect("validated");
            let mut acc = Matrix::zeros(self.dims[t], self.dims[s]);
            for term in &rel.terms {
                let m = self.path_matrix(&Path { source: s, arrows: term.path.clone() });
                acc = acc.add(&m.scale(&F::from_i64(term.coeff)));
            }
            acc.is_zero()
        })
    }

    /// Radical `sum_a im(M_a)` at each vertex, as column bases.
    pub fn radical(&self) -> Vec<Matrix<F>> {
        (0..self.dims.len())
            .map(|v| {
                let mut gens = Matrix::zeros(self.dims[v], 0);
                for (a, arrow) in self.algebra.arrows().iter().enumerate() {
                    if arrow.target == v {
                        gens = gens.hstack(&self.maps[a]);
                    }
                }
                gens.column_basis()
            })
            .collect()
    }

    /// Socle `cap_a ker(M_a)` at each vertex, as column bases.
    pub fn socle(&self) -> Vec<Matrix<F>> {
        (0..self.dims.len())
            .map(|v| {
                let mut stacked = Matrix::zeros(0, self.dims[v]);
                for (a, arrow) in self.algebra.arrows().iter().enumerate() {
                    if arrow.source == v {
                        stacked = stacked.vstack(&self.maps[a]);
                    }
                }
                stacked.nullspace()
            })
            .collect()
    }

    /// Byte key identifying this exact representation (not its iso class).
    pub fn key(&self) -> Vec<u32> {
        let mut k: Vec<u32> = self.dims.iter().map(|&d| d as u32).collect();
        for m in &self.maps {
            k.extend(m.data().iter().map(|x| x.index()));
        }
        k
    }
}

/// A module homomorphism, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism<F> {
    pub source: Module<F>,
    pub target: Module<F>,
    pub comps: Vec<Matrix<F>>,
}

impl<F: FiniteField> Morphism<F> {
    pub fn new(source: Module<F>, target: Module<F>, comps: Vec<Matrix<F>>) -> Result<Self> {
        if !source.same_algebra(&target) {
            return Err(Error::MismatchedAlgebras);
        }
        let f = Morphism { source, target, comps };
        if !f.is_valid() {
            return Err(Error::InvalidMorphism("components do not intertwine".into()));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Module<F>, target: Module<F>, comps: Vec<Matrix<F>>) -> Self {
        Morphism { source, target, comps }
    }

    pub fn identity(m: &Module<F>) -> Self {
        let comps = m.dims.iter().map(|&d| Matrix::identity(d)).collect();
        Morphism { source: m.clone(), target: m.clone(), comps }
    }

    pub fn zero(source: &Module<F>, target: &Module<F>) -> Self {
        let comps = source
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&s, &t)| Matrix::zeros(t, s))
            .collect();
        Morphism { source: source.clone(), target: target.clone(), comps }
    }

    pub fn is_valid(&self) -> bool {
        let (m, n) = (&self.source, &self.target);
        if self.comps.len() != m.dims.len() {
            return false;
        }
        for (v, c) in self.comps.iter().enumerate() {
            if c.shape() != (n.dims[v], m.dims[v]) {
                return false;
            }
        }
        m.algebra.arrows().iter().enumerate().all(|(a, arrow)| {
            self.comps[arrow.target].mul(&m.maps[a]) == n.maps[a].mul(&self.comps[arrow.source])
        })
    }

    /// `other ∘ self`
    pub fn then(&self, other: &Morphism<F>) -> Morphism<F> {
        let comps = self.comps.iter().zip(&other.comps).map(|(f, g)| g.mul(f)).collect();
        Morphism { source: self.source.clone(), target: other.target.clone(), comps }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.comps.iter().all(Matrix::is_invertible)
    }

    /// Nilpotent endomorphism test (`f^n = 0` with `n` the total dimension).
    pub fn is_nilpotent(&self) -> bool {
        let n = self.source.total_dim().max(1);
        self.comps.iter().all(|c| {
            let mut p = c.clone();
            for _ in 1..n {
                if p.is_zero() {
                    return true;
                }
                p = p.mul(c);
            }
            p.is_zero()
        })
    }

    pub fn rank(&self) -> usize {
        self.comps.iter().map(Matrix::rank).sum()
    }
}

/// A basis of `Hom(source, target)`; each element is a list of per-vertex matrices.
#[derive(Clone, Debug)]
pub struct HomBasis<F> {
    pub source: Module<F>,
    pub target: Module<F>,
    pub elements: Vec<Vec<Matrix<F>>>,
}

impl<F: FiniteField> HomBasis<F> {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn morphism(&self, k: usize) -> Morphism<F> {
        Morphism::new_unchecked(self.source.clone(), self.target.clone(), self.elements[k].clone())
    }

    /// The morphism with the given coordinates in this basis.
    pub fn combine(&self, coeffs: &[F]) -> Morphism<F> {
        assert_eq!(coeffs.len(), self.elements.len());
        let mut comps: Vec<Matrix<F>> = self
            .source
            .dims
            .iter()
            .zip(&self.target.dims)
            .map(|(&s, &t)| Matrix::zeros(t, s))
            .collect();
        for (c, e) in coeffs.iter().zip(&self.elements) {
            if c.is_zero() {
                continue;
            }
            for (acc, m) in comps.iter_mut().zip(e) {
                *acc = acc.add(&m.scale(c));
            }
        }
        Morphism::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    /// Basis elements flattened into the columns of one matrix.
    fn flat(&self) -> Matrix<F> {
        let cols: Vec<Vec<F>> = self.elements.iter().map(|e| flatten(e)).collect();
        let len = self.source.dims.iter().zip(&self.target.dims).map(|(a, b)| a * b).sum();
        Matrix::from_columns(len, &cols)
    }

    /// Coordinates of each given morphism (as columns), `None` if one is not in the span.
    pub fn coordinates_many(&self, fs: &[&[Matrix<F>]]) -> Option<Matrix<F>> {
        let len = self.source.dims.iter().zip(&self.target.dims).map(|(a, b)| a * b).sum();
        let rhs: Vec<Vec<F>> = fs.iter().map(|f| flatten(f)).collect();
        self.flat().solve(&Matrix::from_columns(len, &rhs))
    }

    pub fn coordinates(&self, f: &Morphism<F>) -> Option<Vec<F>> {
        self.coordinates_many(&[&f.comps]).map(|m| m.column(0))
    }

    /// Every morphism in the Hom space, or `CapExceeded`.
    pub fn all(&self, limits: &Limits) -> Result<impl Iterator<Item = Morphism<F>> + '_> {
        limits.check_points::<F>(self.dim())?;
        Ok(points::<F>(self.dim()).map(move |c| self.combine(&c)))
    }
}

/// Concatenate row-major component data.
pub fn flatten<F: FiniteField>(comps: &[Matrix<F>]) -> Vec<F> {
    comps.iter().flat_map(|m| m.data().iter().copied()).collect()
}

/// Unknown layout: `f_v` is `dim N_v x dim M_v`, flattened row-major, vertex by vertex.
fn hom_offsets(m: &[usize], n: &[usize]) -> Vec<usize> {
    let mut offs = Vec::with_capacity(m.len() + 1);
    let mut acc = 0;
    for v in 0..m.len() {
        offs.push(acc);
        acc += m[v] * n[v];
    }
    offs.push(acc);
    offs
}

fn hom_system<F: FiniteField>(m: &Module<F>, n: &Module<F>) -> (Matrix<F>, Vec<usize>) {
    let offs = hom_offsets(&m.dims, &n.dims);
    let unknowns = *offs.last().unwrap();
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (a, arrow) in m.algebra.arrows().iter().enumerate() {
        let (v, w) = (arrow.source, arrow.target);
        let (ma, na) = (&m.maps[a], &n.maps[a]);
        // (f_w M_a - N_a f_v)[r, c] = 0
        for r in 0..n.dims[w] {
            for c in 0..m.dims[v] {
                let mut row = vec![F::zero(); unknowns];
                for k in 0..m.dims[w] {
                    let x = ma[(k, c)];
                    if !x.is_zero() {
                        let idx = offs[w] + r * m.dims[w] + k;
                        row[idx] = row[idx] + x;
                    }
                }
                for k in 0..n.dims[v] {
                    let x = na[(r, k)];
                    if !x.is_zero() {
                        let idx = offs[v] + k * m.dims[v] + c;
                        row[idx] = row[idx] - x;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = if rows.is_empty() { Matrix::zeros(0, unknowns) } else { Matrix::from_rows(&rows) };
    (sys, offs)
}

/// Basis of `Hom(M, N)`, in echelon order of the intertwining system.
pub fn hom_basis<F: FiniteField>(m: &Module<F>, n: &Module<F>) -> Result<HomBasis<F>> {
    if !m.same_algebra(n) {
        return Err(Error::MismatchedAlgebras);
    }
    let (sys, offs) = hom_system(m, n);
    let null = sys.nullspace();
    let elements = (0..null.cols())
        .map(|k| {
            (0..m.dims.len())
                .map(|v| {
                    let mut c = Matrix::zeros(n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for s in 0..m.dims[v] {
                            c[(r, s)] = null[(offs[v] + r * m.dims[v] + s, k)];
                        }
                    }
                    c
                })
                .collect()
        })
        .collect();
    Ok(HomBasis { source: m.clone(), target: n.clone(), elements })
}

/// `dim Hom(M, N)` without materializing a basis.
pub fn hom_dim<F: FiniteField>(m: &Module<F>, n: &Module<F>) -> usize {
    let (sys, offs) = hom_system(m, n);
    *offs.last().unwrap() - sys.rank()
}

/// A submodule, given by column bases of its subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule<F> {
    pub basis: Vec<Matrix<F>>,
}

impl<F: FiniteField> Submodule<F> {
    pub fn zero(m: &Module<F>) -> Self {
        Submodule { basis: m.dims.iter().map(|&d| Matrix::zeros(d, 0)).collect() }
    }

    pub fn whole(m: &Module<F>) -> Self {
        Submodule { basis: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    /// Image of a morphism into the ambient module.
    pub fn image_of(f: &Morphism<F>) -> Self {
        Submodule { basis: f.comps.iter().map(Matrix::column_basis).collect() }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Matrix::cols).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.basis.iter().map(Matrix::cols).sum()
    }

    pub fn sum(&self, other: &Self) -> Self {
        Submodule {
            basis: self.basis.iter().zip(&other.basis).map(|(a, b)| a.hstack(b).column_basis()).collect(),
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        Submodule {
            basis: self
                .basis
                .iter()
                .zip(&other.basis)
                .map(|(a, b)| {
                    // a x = b y  <=>  [a | -b] (x; y) = 0
                    let null = a.hstack(&b.scale(&-F::one())).nullspace();
                    a.mul(&null.block(0, 0, a.cols(), null.cols())).column_basis()
                })
                .collect(),
        }
    }

    /// Canonical representation of the subspaces (row-reduced).
    pub fn key(&self) -> Vec<Matrix<F>> {
        self.basis.iter().map(|b| b.transpose().row_space_key()).collect()
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.basis
            .iter()
            .zip(&other.basis)
            .all(|(a, b)| a.hstack(b).rank() == a.cols())
    }

    /// The submodule as a module together with its inclusion.
    pub fn to_module(&self, ambient: &Module<F>) -> (Module<F>, Morphism<F>) {
        let dims = self.dims();
        let maps = ambient
            .algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let img = ambient.maps[a].mul(&self.basis[arrow.source]);
                self.basis[arrow.target].solve(&img).expect("submodule is closed under arrows")
            })
            .collect();
        let sub = Module::new_unchecked(ambient.algebra.clone(), dims, maps);
        let inc = Morphism::new_unchecked(sub.clone(), ambient.clone(), self.basis.clone());
        (sub, inc)
    }

    /// The quotient `ambient / self` together with the projection.
    pub fn quotient(&self, ambient: &Module<F>) -> (Module<F>, Morphism<F>) {
        let q: Vec<Matrix<F>> = self.basis.iter().map(Matrix::left_nullspace).collect();
        let r: Vec<Matrix<F>> = q.iter().map(|m| m.right_inverse().expect("full row rank")).collect();
        let dims: Vec<usize> = q.iter().map(Matrix::rows).collect();
        let maps = ambient
            .algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| q[arrow.target].mul(&ambient.maps[a]).mul(&r[arrow.source]))
            .collect();
        let quot = Module::new_unchecked(ambient.algebra.clone(), dims, maps);
        let proj = Morphism::new_unchecked(ambient.clone(), quot.clone(), q);
        (quot, proj)
    }
}

/// Kernel, image and cokernel of a morphism, each with its structure map.
#[derive(Clone, Debug)]
pub struct Subquotients<F> {
    /// kernel and its inclusion into the source
    pub kernel: (Module<F>, Morphism<F>),
    /// image and its inclusion into the target
    pub image: (Module<F>, Morphism<F>),
    /// cokernel and the projection from the target
    pub cokernel: (Module<F>, Morphism<F>),
}

pub fn subquotients<F: FiniteField>(f: &Morphism<F>) -> Subquotients<F> {
    let ker = Submodule { basis: f.comps.iter().map(Matrix::nullspace).collect() };
    let img = Submodule::image_of(f);
    Subquotients {
        kernel: ker.to_module(&f.source),
        image: img.to_module(&f.target),
        cokernel: img.quotient(&f.target),
    }
}

pub fn kernel<F: FiniteField>(f: &Morphism<F>) -> (Module<F>, Morphism<F>) {
    Submodule { basis: f.comps.iter().map(Matrix::nullspace).collect() }.to_module(&f.source)
}

pub fn cokernel<F: FiniteField>(f: &Morphism<F>) -> (Module<F>, Morphism<F>) {
    Submodule::image_of(f).quotient(&f.target)
}

/// Block-diagonal direct sum; the empty sum is the zero module.
pub fn direct_sum<F: FiniteField>(algebra: &Arc<Algebra<F>>, parts: &[Module<F>]) -> Result<Module<F>> {
    if parts.iter().any(|p| !Arc::ptr_eq(p.algebra(), algebra)) {
        return Err(Error::MismatchedAlgebras);
    }
    let n = algebra.num_vertices();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let maps = (0..algebra.arrows().len())
        .map(|a| {
            let blocks: Vec<&Matrix<F>> = parts.iter().map(|p| &p.maps[a]).collect();
            Matrix::block_diag(&blocks)
        })
        .collect();
    Ok(Module::new_unchecked(algebra.clone(), dims, maps))
}

/// Canonical injections `parts[k] -> ⊕ parts` and projections `⊕ parts -> parts[k]`.
pub fn sum_structure_maps<F: FiniteField>(
    sum: &Module<F>,
    parts: &[Module<F>],
) -> (Vec<Morphism<F>>, Vec<Morphism<F>>) {
    let n = sum.dims.len();
    let mut offset = vec![0usize; n];
    let mut inj = Vec::new();
    let mut proj = Vec::new();
    for p in parts {
        let mut ic = Vec::with_capacity(n);
        let mut pc = Vec::with_capacity(n);
        for v in 0..n {
            let mut i = Matrix::zeros(sum.dims[v], p.dims[v]);
            i.set_block(offset[v], 0, &Matrix::identity(p.dims[v]));
            pc.push(i.transpose());
            ic.push(i);
            offset[v] += p.dims[v];
        }
        inj.push(Morphism::new_unchecked(p.clone(), sum.clone(), ic));
        proj.push(Morphism::new_unchecked(sum.clone(), p.clone(), pc));
    }
    (inj, proj)
}

/// Search for an isomorphism `M -> N`.
///
/// Seeded random combinations of the Hom basis are tried first. If none is
/// invertible the search is exhaustive when `p^dim Hom` is within the cap and
/// fails with `CapExceeded` otherwise.
pub fn find_isomorphism<F: FiniteField>(
    m: &Module<F>,
    n: &Module<F>,
    limits: &Limits,
) -> Result<Option<Morphism<F>>> {
    if !m.same_algebra(n) {
        return Err(Error::MismatchedAlgebras);
    }
    if m.dims != n.dims {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(Morphism::identity(m)));
    }
    let hom = hom_basis(m, n)?;
    if hom.dim() == 0 {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1ce1ab);
    for _ in 0..limits.random_trials {
        let coeffs: Vec<F> = (0..hom.dim())
            .map(|_| F::from_index(rng.gen_range(0..F::CHARACTERISTIC)))
            .collect();
        let f = hom.combine(&coeffs);
        if f.is_isomorphism() {
            return Ok(Some(f));
        }
    }
    for f in hom.all(limits)? {
        if f.is_isomorphism() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

pub fn is_isomorphic<F: FiniteField>(m: &Module<F>, n: &Module<F>, limits: &Limits) -> Result<bool> {
    Ok(find_isomorphism(m, n, limits)?.is_some())
}

/// Local endomorphism ring test: every endomorphism is nilpotent or invertible.
pub fn is_indecomposable<F: FiniteField>(m: &Module<F>, limits: &Limits) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let end = hom_basis(m, m)?;
    if end.dim() == 1 {
        return Ok(true);
    }
    for f in end.all(limits)? {
        if !f.is_nilpotent() && !f.is_isomorphism() {
            return Ok(false);
        }
    }
    Ok(true)
}
