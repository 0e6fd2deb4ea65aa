//! Bound quiver algebras `kQ/I` over a prime field.
//!
//! Paths compose left to right: `a*b` is `a` followed by `b`. The quotient is
//! realized by a normal-form table: for every ordered pair of vertices a basis
//! of `e_i A e_v` made of paths, and the coordinates of every surviving path in
//! that basis.

mod parse;

use std::collections::HashMap;
use std::fmt;

pub use parse::{parse_algebra, Arrow, QuiverSpec, Relation, Term};

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::Matrix;

/// Longest path length probed before declaring the algebra infinite-dimensional.
pub const MAX_PATH_LENGTH: usize = 48;
/// Upper bound on enumerated paths while probing.
pub const MAX_PATHS: usize = 200_000;

/// A path: source vertex plus the arrows traversed (empty for the trivial path).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

pub struct Algebra<F> {
    spec: QuiverSpec,
    /// `basis[i][v]`: paths from `i` to `v` spanning `e_i A e_v`.
    basis: Vec<Vec<Vec<Path>>>,
    /// Normal forms of all paths of length `<= max_len`, keyed by path.
    normal: HashMap<Path, (usize, Vec<F>)>,
    max_len: usize,
}

impl<F: FiniteField> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("p", &self.spec.characteristic)
            .field("vertices", &self.spec.vertices)
            .field("arrows", &self.spec.arrows.len())
            .field("relations", &self.spec.relations.len())
            .field("dim", &self.dimension())
            .finish()
    }
}

impl<F: FiniteField> Algebra<F> {
    pub fn from_text(text: &str) -> Result<Self> {
        Self::new(parse_algebra(text)?)
    }

    pub fn new(spec: QuiverSpec) -> Result<Self> {
        if spec.characteristic != F::CHARACTERISTIC {
            return Err(Error::CharacteristicMismatch {
                expected: F::CHARACTERISTIC,
                found: spec.characteristic,
            });
        }
        let relations: Vec<Vec<(F, Vec<usize>)>> = spec
            .relations
            .iter()
            .map(|r| r.terms.iter().map(|t| (F::from_i64(t.coeff), t.path.clone())).collect())
            .collect();

        let mut previous: Option<(usize, Truncation<F>)> = None;
        for n in 0..=MAX_PATH_LENGTH {
            let t = Truncation::compute(&spec, &relations, n)?;
            let dim = t.dimension();
            if let Some((prev_dim, prev)) = previous.take() {
                if prev_dim == dim {
                    return Ok(Algebra {
                        basis: prev.basis,
                        normal: prev.normal,
                        max_len: n - 1,
                        spec,
                    });
                }
            }
            previous = Some((dim, t));
        }
        Err(Error::InfiniteDimensional(MAX_PATH_LENGTH))
    }

    pub fn spec(&self) -> &QuiverSpec {
        &self.spec
    }

    pub fn num_vertices(&self) -> usize {
        self.spec.vertices.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.spec.arrows
    }

    pub fn relations(&self) -> &[Relation] {
        &self.spec.relations
    }

    /// Length of the longest nonzero path.
    pub fn loewy_bound(&self) -> usize {
        self.max_len
    }

    pub fn dimension(&self) -> usize {
        self.basis.iter().flatten().map(Vec::len).sum()
    }

    /// Paths from `i` to `v` forming a basis of `e_i A e_v`.
    pub fn basis(&self, i: usize, v: usize) -> &[Path] {
        &self.basis[i][v]
    }

    /// Target vertex and coordinates (in `basis(source, target)`) of a path.
    /// `None` for non-composable arrow sequences.
    pub fn normal_form(&self, source: usize, arrows: &[usize]) -> Option<(usize, Vec<F>)> {
        let target = match arrows.first() {
            None => source,
            Some(&a) => {
                if self.spec.arrows[a].source != source {
                    return None;
                }
                self.spec.path_endpoints(arrows)?.1
            }
        };
        if arrows.len() > self.max_len {
            return Some((target, vec![F::zero(); self.basis[source][target].len()]));
        }
        let key = Path { source, arrows: arrows.to_vec() };
        self.normal.get(&key).cloned()
    }

    /// Coordinates of `w * q` where `w` is an element of `e_i A e_k` given in
    /// `basis(i, k)` coordinates and `q` is a path starting at `k`.
    pub fn right_multiply(&self, i: usize, k: usize, w: &[F], q: &[usize]) -> (usize, Vec<F>) {
        let v = if q.is_empty() { k } else { self.spec.path_endpoints(q).expect("composable").1 };
        let mut out = vec![F::zero(); self.basis[i][v].len()];
        for (c, b) in w.iter().zip(&self.basis[i][k]) {
            if c.is_zero() {
                continue;
            }
            let mut arrows = b.arrows.clone();
            arrows.extend_from_slice(q);
            let (_, nf) = self.normal_form(i, &arrows).expect("composable");
            for (o, x) in out.iter_mut().zip(nf) {
                *o = *o + *c * x;
            }
        }
        (v, out)
    }

    /// Coordinates of `q * w` where `q` is a path from `j` to `i` and `w` lies
    /// in `e_i A e_v` (given in `basis(i, v)` coordinates).
    pub fn left_multiply(&self, j: usize, q: &[usize], i: usize, v: usize, w: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.basis[j][v].len()];
        for (c, b) in w.iter().zip(&self.basis[i][v]) {
            if c.is_zero() {
                continue;
            }
            let mut arrows = q.to_vec();
            arrows.extend_from_slice(&b.arrows);
            let (_, nf) = self.normal_form(j, &arrows).expect("composable");
            for (o, x) in out.iter_mut().zip(nf) {
                *o = *o + *c * x;
            }
        }
        out
    }

    /// Matrix of the linear map `M_p` for a path in a representation with the
    /// given arrow matrices (identity for a trivial path).
    pub fn path_matrix(&self, maps: &[Matrix<F>], dims: &[usize], path: &Path) -> Matrix<F> {
        let mut m = Matrix::identity(dims[path.source]);
        for &a in &path.arrows {
            m = maps[a].mul(&m);
        }
        m
    }
}

/// The quotient `kQ / (I + R^{n+1})`, computed on paths of length `<= n`.
struct Truncation<F> {
    basis: Vec<Vec<Vec<Path>>>,
    normal: HashMap<Path, (usize, Vec<F>)>,
}

impl<F: FiniteField> Truncation<F> {
    fn dimension(&self) -> usize {
        self.basis.iter().flatten().map(Vec::len).sum()
    }

    fn compute(spec: &QuiverSpec, relations: &[Vec<(F, Vec<usize>)>], n: usize) -> Result<Self> {
        let nv = spec.vertices.len();
        // all paths of length <= n, by source
        let mut by_source: Vec<Vec<Path>> = vec![Vec::new(); nv];
        let mut total = 0usize;
        for (i, paths) in by_source.iter_mut().enumerate() {
            let mut frontier = vec![Path::trivial(i)];
            paths.push(Path::trivial(i));
            for _ in 0..n {
                let mut next = Vec::new();
                for p in &frontier {
                    let end = path_target(spec, p);
                    for (a, arrow) in spec.arrows.iter().enumerate() {
                        if arrow.source == end {
                            let mut q = p.clone();
                            q.arrows.push(a);
                            next.push(q);
                        }
                    }
                }
                total += next.len();
                if total > MAX_PATHS {
                    return Err(Error::InfiniteDimensional(n));
                }
                paths.extend(next.iter().cloned());
                frontier = next;
            }
        }

        let mut basis = vec![vec![Vec::new(); nv]; nv];
        let mut normal = HashMap::new();
        for i in 0..nv {
            for v in 0..nv {
                // longest first so that pivots eliminate long paths
                let mut cols: Vec<Path> =
                    by_source[i].iter().filter(|p| path_target(spec, p) == v).cloned().collect();
                cols.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.arrows.cmp(&b.arrows)));
                let index: HashMap<&Path, usize> = cols.iter().enumerate().map(|(k, p)| (p, k)).collect();

                let mut rows: Vec<Vec<F>> = Vec::new();
                for rel in relations {
                    let (s, t) = spec.path_endpoints(&rel[0].1).expect("validated");
                    let min_len = rel.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
                    for p in by_source[i].iter().filter(|p| path_target(spec, p) == s) {
                        if p.len() + min_len > n {
                            continue;
                        }
                        for q in by_source[t].iter().filter(|q| path_target(spec, q) == v) {
                            if p.len() + min_len + q.len() > n {
                                continue;
                            }
                            let mut row = vec![F::zero(); cols.len()];
                            for (c, term) in rel {
                                let mut arrows = p.arrows.clone();
                                arrows.extend_from_slice(term);
                                arrows.extend_from_slice(&q.arrows);
                                if arrows.len() <= n {
                                    let k = index[&Path { source: i, arrows }];
                                    row[k] = row[k] + *c;
                                }
                            }
                            if row.iter().any(|x| !x.is_zero()) {
                                rows.push(row);
                            }
                        }
                    }
                }
                let (rref, pivots) = if rows.is_empty() {
                    (Matrix::zeros(0, cols.len()), Vec::new())
                } else {
                    Matrix::from_rows(&rows).rref()
                };
                let free: Vec<usize> = (0..cols.len()).filter(|c| !pivots.contains(c)).collect();
                // basis in increasing (length, arrows) order
                let mut free_sorted = free.clone();
                free_sorted.sort_by(|&a, &b| {
                    cols[a].len().cmp(&cols[b].len()).then_with(|| cols[a].arrows.cmp(&cols[b].arrows))
                });
                let coord: HashMap<usize, usize> =
                    free_sorted.iter().enumerate().map(|(k, &c)| (c, k)).collect();
                for (k, path) in cols.iter().enumerate() {
                    let mut nf = vec![F::zero(); free_sorted.len()];
                    if let Some(&pos) = coord.get(&k) {
                        nf[pos] = F::one();
                    } else {
                        let row = pivots.iter().position(|&p| p == k).expect("pivot");
                        for &f in &free {
                            nf[coord[&f]] = -rref[(row, f)];
                        }
                    }
                    normal.insert(path.clone(), (v, nf));
                }
                basis[i][v] = free_sorted.iter().map(|&c| cols[c].clone()).collect();
            }
        }
        Ok(Truncation { basis, normal })
    }
}

fn path_target(spec: &QuiverSpec, p: &Path) -> usize {
    p.arrows.last().map_or(p.source, |&a| spec.arrows[a].target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    #[test]
    fn a3_path_algebra_dimension() {
        let alg = Algebra::<F2>::from_text("vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\n").unwrap();
        assert_eq!(alg.dimension(), 6);
        assert_eq!(alg.basis(0, 2).len(), 1);
        assert_eq!(alg.loewy_bound(), 2);
    }

    #[test]
    fn monomial_relation_kills_path() {
        let alg = Algebra::<F2>::from_text(
            "vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\nrelation a*b\n",
        )
        .unwrap();
        assert_eq!(alg.dimension(), 5);
        assert!(alg.basis(0, 2).is_empty());
        let (t, nf) = alg.normal_form(0, &[0, 1]).unwrap();
        assert_eq!(t, 2);
        assert!(nf.is_empty());
    }

    #[test]
    fn commutative_square() {
        let text = "field 3\nvertex 1\nvertex 2\nvertex 3\nvertex 4\n\
                    arrow a 1 2\narrow b 2 4\narrow c 1 3\narrow d 3 4\nrelation a*b + -1*c*d\n";
        let alg = Algebra::<F3>::from_text(text).unwrap();
        // 4 trivial + 4 arrows + 1 long path
        assert_eq!(alg.dimension(), 9);
        let (_, ab) = alg.normal_form(0, &[0, 1]).unwrap();
        let (_, cd) = alg.normal_form(0, &[2, 3]).unwrap();
        assert_eq!(ab, cd);
    }

    #[test]
    fn dual_numbers() {
        let alg = Algebra::<F2>::from_text("vertex 1\narrow x 1 1\nrelation x*x\n").unwrap();
        assert_eq!(alg.dimension(), 2);
    }

    #[test]
    fn oriented_cycle_without_relations_is_rejected() {
        let err = Algebra::<F2>::from_text("vertex 1\narrow x 1 1\n").unwrap_err();
        assert!(matches!(err, Error::InfiniteDimensional(_)));
    }

    #[test]
    fn characteristic_must_match() {
        let err = Algebra::<F3>::from_text("vertex 1\n").unwrap_err();
        assert_eq!(err, Error::CharacteristicMismatch { expected: 3, found: 2 });
    }
}
