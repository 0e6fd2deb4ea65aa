//! Cogen-preordered sequences, decreasing maximal-join interval sequences and
//! ICE-sequences, with the bijections between them.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::lattice::{extend_by_closure, heart, Interval, PopSide, TorfLattice};
use crate::set::SubcatSet;
use crate::subcat::{cogen, in_cogen, perp, torsion_classes_in, wl_operator, PerpSide};
use crate::tilting::{enumerate_tau_inv_rigid, is_tau_inv_rigid, split_injectives, tau_perp};

/// Ordered blocks `(X_1, …, X_m)` of a basic module; empty blocks allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PreorderedSeq {
    pub blocks: Vec<SubcatSet>,
}

impl PreorderedSeq {
    pub fn new(blocks: Vec<SubcatSet>) -> Self {
        PreorderedSeq { blocks }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn total(&self) -> SubcatSet {
        self.suffix(0)
    }

    /// `Δ_{≥k}` with 0-based `k`.
    pub fn suffix(&self, k: usize) -> SubcatSet {
        self.blocks.iter().skip(k).fold(SubcatSet::EMPTY, |a, &b| a.union(b))
    }

    /// Block holding catalog index `i`.
    pub fn block_of(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(i))
    }

    fn check_disjoint(&self) -> Result<()> {
        let mut seen = SubcatSet::EMPTY;
        for b in &self.blocks {
            if !seen.is_disjoint(*b) {
                return Err(Error::Precondition(format!("blocks overlap in {:?}", seen.intersect(*b))));
            }
            seen = seen.union(*b);
        }
        Ok(())
    }

    pub fn display(&self, labels: &[String]) -> String {
        let parts: Vec<String> = self.blocks.iter().map(|b| show_set(*b, labels)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Strongest property of a sequence; later variants imply earlier ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SeqClass {
    NotRigid,
    Preordered,
    WeaklyCogen,
    CogenPreordered,
    CogenOrdered,
}

impl fmt::Display for SeqClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqClass::NotRigid => "not_rigid",
            SeqClass::Preordered => "preordered",
            SeqClass::WeaklyCogen => "weakly_cogen",
            SeqClass::CogenPreordered => "cogen_preordered",
            SeqClass::CogenOrdered => "cogen_ordered",
        })
    }
}

pub fn validate_sequence<F: FiniteField>(cat: &Catalog<F>, d: &PreorderedSeq) -> Result<SeqClass> {
    d.check_disjoint()?;
    if !is_tau_inv_rigid(cat, d.total()) {
        return Ok(SeqClass::NotRigid);
    }
    let weak = (0..d.len()).all(|k| {
        let rest = d.suffix(k + 1);
        d.blocks[k].iter().all(|y| !in_cogen(cat, rest, y))
    });
    if !weak {
        return Ok(SeqClass::Preordered);
    }
    let strong = (0..d.len()).all(|k| {
        let from = d.suffix(k);
        d.blocks[k].iter().all(|y| !in_cogen(cat, from.without(y), y))
    });
    if !strong {
        return Ok(SeqClass::WeaklyCogen);
    }
    if d.blocks.iter().all(|b| b.len() == 1) {
        Ok(SeqClass::CogenOrdered)
    } else {
        Ok(SeqClass::CogenPreordered)
    }
}

/// Refinements into singleton blocks keeping the block order.
pub fn orderings(d: &PreorderedSeq) -> Vec<PreorderedSeq> {
    let mut out = vec![Vec::new()];
    for b in &d.blocks {
        let perms = permutations(&b.iter().collect::<Vec<_>>());
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                perms.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend(p);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|v| PreorderedSeq::new(v.into_iter().map(SubcatSet::singleton).collect()))
        .collect()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (k, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

/// Each block is the set of new split injectives: `X_k = I_s(Cogen Δ_{≥k}) / Cogen Δ_{>k}`.
pub fn characterization_check<F: FiniteField>(cat: &Catalog<F>, d: &PreorderedSeq) -> bool {
    (0..d.len()).all(|k| {
        let here = cogen(cat, d.suffix(k));
        let below = cogen(cat, d.suffix(k + 1));
        d.blocks[k] == split_injectives(cat, here).minus(below)
    })
}

fn require_cogen_preordered<F: FiniteField>(cat: &Catalog<F>, d: &PreorderedSeq) -> Result<()> {
    let class = validate_sequence(cat, d)?;
    if class < SeqClass::CogenPreordered {
        return Err(Error::Precondition(format!("sequence is only {class}")));
    }
    Ok(())
}

/// `φ(Δ)_j = [Cogen Δ_{≥j}, (τ⁻¹Δ_{≥j})^⊥]`.
pub fn phi<F: FiniteField>(cat: &Catalog<F>, lattice: &TorfLattice, d: &PreorderedSeq) -> Result<Vec<Interval>> {
    require_cogen_preordered(cat, d)?;
    let out: Vec<Interval> = (0..d.len())
        .map(|j| {
            let s = d.suffix(j);
            Interval::new(cogen(cat, s), tau_perp(cat, s))
        })
        .collect();
    if !is_decreasing_maxjoin(lattice, &out) {
        return Err(Error::Verification(format!("φ{:?} is not a decreasing maximal-join sequence", d.blocks)));
    }
    Ok(out)
}

/// `ψ(J)_k = I_s(I_k^-) / I_{k+1}^-`.
pub fn psi<F: FiniteField>(cat: &Catalog<F>, lattice: &TorfLattice, j: &[Interval]) -> Result<PreorderedSeq> {
    if !is_decreasing_maxjoin(lattice, j) {
        return Err(Error::Precondition("not a decreasing maximal-join sequence".into()));
    }
    let m = j.len();
    let blocks = (0..m)
        .map(|k| {
            let next = if k + 1 < m { j[k + 1].min } else { SubcatSet::EMPTY };
            split_injectives(cat, j[k].min).minus(next)
        })
        .collect();
    let d = PreorderedSeq::new(blocks);
    require_cogen_preordered(cat, &d).map_err(|e| Error::Verification(format!("ψ output: {e}")))?;
    for (k, i) in j.iter().enumerate() {
        let s = d.suffix(k);
        if i.min != cogen(cat, s) || i.max != tau_perp(cat, s) {
            return Err(Error::Verification(format!("ψ does not recover interval {k}")));
        }
    }
    Ok(d)
}

/// Every `I_k` is a maximal-join interval in `I_{k+1}`, with `I_{m+1} = [0, full]`.
pub fn is_decreasing_maxjoin(lattice: &TorfLattice, j: &[Interval]) -> bool {
    let top = Interval::new(lattice.bottom(), lattice.top());
    (0..j.len()).all(|k| {
        let outer = j.get(k + 1).copied().unwrap_or(top);
        outer.contains_interval(&j[k]) && lattice.is_maximal_join_in(&j[k], &outer).unwrap_or(false)
    })
}

/// An ICE-sequence of length `len`, stored as `window[j] = C(-j)` for
/// `0 ≤ j < len`; `C(k) = 0` for `k > 0` and `C(k)` is everything for `k ≤ -len`.
#[derive(Debug, Clone)]
pub struct IceSeq {
    pub len: usize,
    pub window: Vec<SubcatSet>,
    full: SubcatSet,
}

impl IceSeq {
    pub fn new(window: Vec<SubcatSet>, full: SubcatSet) -> Self {
        IceSeq { len: window.len(), window, full }
    }

    pub fn trivial(full: SubcatSet) -> Self {
        IceSeq::new(Vec::new(), full)
    }

    /// `C(k)` for any integer `k`.
    pub fn at(&self, k: i64) -> SubcatSet {
        if k > 0 {
            SubcatSet::EMPTY
        } else if (-k) as usize >= self.len {
            self.full
        } else {
            self.window[(-k) as usize]
        }
    }

    /// Window with trailing entries equal to everything dropped.
    pub fn normalized(&self) -> &[SubcatSet] {
        let mut n = self.window.len();
        while n > 0 && self.window[n - 1] == self.full {
            n -= 1;
        }
        &self.window[..n]
    }

    pub fn display(&self, labels: &[String]) -> String {
        let parts: Vec<String> = self.window.iter().map(|s| show_set(*s, labels)).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl PartialEq for IceSeq {
    fn eq(&self, other: &Self) -> bool {
        self.full == other.full && self.normalized() == other.normalized()
    }
}

impl Eq for IceSeq {}

impl std::hash::Hash for IceSeq {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.normalized().hash(state);
    }
}

/// `C(k) = H_{[I_{1-k}^-, I_{2-k}^+]}` for `-m < k ≤ 0`.
pub fn nu<F: FiniteField>(cat: &Catalog<F>, lattice: &TorfLattice, j: &[Interval]) -> Result<IceSeq> {
    if !is_decreasing_maxjoin(lattice, j) {
        return Err(Error::Precondition("not a decreasing maximal-join sequence".into()));
    }
    let m = j.len();
    let window = (0..m)
        .map(|k| {
            let ceiling = if k + 1 < m { j[k + 1].max } else { lattice.top() };
            heart(cat, &Interval::new(j[k].min, ceiling))
        })
        .collect();
    Ok(IceSeq::new(window, lattice.top()))
}

/// Minima `F_1, …, F_{m+1}` of the interval sequence an ICE-sequence came from,
/// together with the maxima `I_1^+, …, I_{m+1}^+`.
fn ice_extrema<F: FiniteField>(
    cat: &Catalog<F>,
    lattice: &TorfLattice,
    s: &IceSeq,
) -> Result<(Vec<SubcatSet>, Vec<SubcatSet>)> {
    let m = s.len;
    if s.window.len() != m {
        return Err(Error::Precondition("window length differs from declared length".into()));
    }
    let mut mins = vec![SubcatSet::EMPTY; m + 1];
    let mut maxs = vec![lattice.top(); m + 1];
    for k in (0..m).rev() {
        let outer = Interval::new(mins[k + 1], maxs[k + 1]);
        let w = heart(cat, &outer);
        let g = perp(cat, s.window[k], PerpSide::Right).intersect(w);
        let f = extend_by_closure(cat, &outer, g)?;
        if !lattice.contains(f) || !outer.contains(f) {
            return Err(Error::Precondition(format!("minimum {} is not a torsion-free class in range", k + 1)));
        }
        mins[k] = f;
        maxs[k] = lattice.pop(&Interval::new(f, outer.max), PopSide::Up)?;
    }
    Ok((mins, maxs))
}

/// `F_k = (C(1-k)^⊥ ∩ W_L(C(-k))) * F_{k+1}` with `F_{m+1} = 0`.
pub fn ice_minima<F: FiniteField>(cat: &Catalog<F>, lattice: &TorfLattice, s: &IceSeq) -> Result<Vec<SubcatSet>> {
    Ok(ice_extrema(cat, lattice, s)?.0)
}

pub fn nu_inverse<F: FiniteField>(cat: &Catalog<F>, lattice: &TorfLattice, s: &IceSeq) -> Result<Vec<Interval>> {
    let (mins, maxs) = ice_extrema(cat, lattice, s)?;
    let j: Vec<Interval> = (0..s.len).map(|k| Interval::new(mins[k], maxs[k])).collect();
    if nu(cat, lattice, &j)? != *s {
        return Err(Error::Precondition("sequence is not in the image of ν".into()));
    }
    Ok(j)
}

/// `C(k) = (τ⁻¹Δ_{>1-k})^⊥ ∩ ⊥Δ_{≥1-k}`.
pub fn tf_to_ice<F: FiniteField>(cat: &Catalog<F>, d: &PreorderedSeq) -> Result<IceSeq> {
    require_cogen_preordered(cat, d)?;
    let window = (0..d.len())
        .map(|j| tau_perp(cat, d.suffix(j + 1)).intersect(perp(cat, d.suffix(j), PerpSide::Left)))
        .collect();
    Ok(IceSeq::new(window, cat.full()))
}

/// Blocks `I_s(F_k) / F_{k+1}` from the minima.
pub fn ice_to_tf<F: FiniteField>(cat: &Catalog<F>, lattice: &TorfLattice, s: &IceSeq) -> Result<PreorderedSeq> {
    let mins = ice_minima(cat, lattice, s)?;
    let d = PreorderedSeq::new((0..s.len).map(|k| split_injectives(cat, mins[k]).minus(mins[k + 1])).collect());
    if validate_sequence(cat, &d)? < SeqClass::CogenPreordered || tf_to_ice(cat, &d)? != *s {
        return Err(Error::Precondition("sequence is not in the image of the composite".into()));
    }
    Ok(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqKind {
    CogenPreordered,
    MaxjoinSeqs,
    IceSeqs,
}

impl std::str::FromStr for SeqKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cogen_preordered" => Ok(SeqKind::CogenPreordered),
            "maxjoin_seqs" => Ok(SeqKind::MaxjoinSeqs),
            "ice_seqs" => Ok(SeqKind::IceSeqs),
            _ => Err(Error::Precondition(format!("unknown kind {s:?}"))),
        }
    }
}

/// All cogen-preordered sequences with `m` blocks.
pub fn enumerate_cogen_preordered<F: FiniteField>(cat: &Catalog<F>, m: usize) -> Result<Vec<PreorderedSeq>> {
    let rigid = enumerate_tau_inv_rigid(cat);
    let per: Vec<Result<Vec<PreorderedSeq>>> = rigid
        .par_iter()
        .map(|&r| {
            let members: Vec<usize> = r.iter().collect();
            let mut out = Vec::new();
            if m == 0 {
                if r.is_empty() {
                    out.push(PreorderedSeq::new(Vec::new()));
                }
                return Ok(out);
            }
            let total = (m as u128).checked_pow(members.len() as u32).unwrap_or(u128::MAX);
            if total > cat.limits().enumeration_cap {
                return Err(Error::CapExceeded { needed: total, cap: cat.limits().enumeration_cap });
            }
            let mut assign = vec![0usize; members.len()];
            loop {
                let mut blocks = vec![SubcatSet::EMPTY; m];
                for (&i, &b) in members.iter().zip(&assign) {
                    blocks[b] = blocks[b].with(i);
                }
                let d = PreorderedSeq::new(blocks);
                if validate_sequence(cat, &d)? >= SeqClass::CogenPreordered {
                    out.push(d);
                }
                let mut k = 0;
                while k < assign.len() && assign[k] + 1 == m {
                    assign[k] = 0;
                    k += 1;
                }
                if k == assign.len() {
                    break;
                }
                assign[k] += 1;
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in per {
        all.extend(r?);
    }
    all.sort();
    Ok(all)
}

/// All decreasing maximal-join sequences `(I_1, …, I_m)`.
pub fn enumerate_maxjoin(lattice: &TorfLattice, m: usize) -> Result<Vec<Vec<Interval>>> {
    fn rec(l: &TorfLattice, outer: Interval, left: usize, tail: &mut Vec<Interval>, out: &mut Vec<Vec<Interval>>) -> Result<()> {
        if left == 0 {
            out.push(tail.iter().rev().copied().collect());
            return Ok(());
        }
        for &lo in l.members() {
            if !outer.contains(lo) {
                continue;
            }
            let inner = Interval::new(lo, l.pop(&Interval::new(lo, outer.max), PopSide::Up)?);
            tail.push(inner);
            rec(l, inner, left - 1, tail, out)?;
            tail.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    rec(lattice, Interval::new(lattice.bottom(), lattice.top()), m, &mut Vec::new(), &mut out)?;
    out.sort();
    Ok(out)
}

/// ICE-sequences with `C(k)` everything for `k ≤ -m`: chains with
/// `C(k+1)` a torsion class of `W_L(C(k))`.
pub fn enumerate_ice<F: FiniteField>(cat: &Catalog<F>, m: usize) -> Result<Vec<IceSeq>> {
    let full = cat.full();
    let mut wl: HashMap<SubcatSet, SubcatSet> = HashMap::new();
    let mut tors: HashMap<SubcatSet, Vec<SubcatSet>> = HashMap::new();
    let mut chains: Vec<Vec<SubcatSet>> = vec![Vec::new()];
    for _ in 0..m {
        let mut next = Vec::new();
        for chain in chains {
            let above = chain.last().copied().unwrap_or(full);
            let w = match wl.get(&above) {
                Some(w) => *w,
                None => {
                    let w = wl_operator(cat, above)?;
                    wl.insert(above, w);
                    w
                }
            };
            if let std::collections::hash_map::Entry::Vacant(e) = tors.entry(w) {
                e.insert(torsion_classes_in(cat, w)?);
            }
            for &t in &tors[&w] {
                let mut c = chain.clone();
                c.push(t);
                next.push(c);
            }
        }
        chains = next;
    }
    let mut out: Vec<IceSeq> = chains
        .into_iter()
        .map(|mut c| {
            c.reverse();
            IceSeq::new(c, full)
        })
        .collect();
    out.sort_by(|a, b| a.window.cmp(&b.window));
    Ok(out)
}

/// Number of objects of the given kind and length.
pub fn enumerate_count<F: FiniteField>(cat: &Catalog<F>, lattice: &TorfLattice, kind: SeqKind, m: usize) -> Result<usize> {
    Ok(match kind {
        SeqKind::CogenPreordered => enumerate_cogen_preordered(cat, m)?.len(),
        SeqKind::MaxjoinSeqs => enumerate_maxjoin(lattice, m)?.len(),
        SeqKind::IceSeqs => enumerate_ice(cat, m)?.len(),
    })
}

pub fn show_set(s: SubcatSet, labels: &[String]) -> String {
    let names: Vec<&str> = s.iter().map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

pub fn show_intervals(j: &[Interval], labels: &[String]) -> String {
    let parts: Vec<String> =
        j.iter().map(|i| format!("[{}, {}]", show_set(i.min, labels), show_set(i.max, labels))).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::Fp;
    use crate::lattice::DEFAULT_ORACLE_CAP;
    use crate::module::Limits;
    use std::sync::Arc;

    const S1: usize = 0;
    const S2: usize = 1;
    const P: usize = 2;

    fn a2() -> (Catalog<Fp<2>>, TorfLattice) {
        let alg = Arc::new(Algebra::from_text("vertex 1\nvertex 2\narrow a 1 2\n").unwrap());
        let cat = Catalog::build(alg, 2, Limits::default()).unwrap();
        let l = TorfLattice::build(&cat, DEFAULT_ORACLE_CAP).unwrap();
        (cat, l)
    }

    fn set(ix: &[usize]) -> SubcatSet {
        SubcatSet::from_indices(ix.iter().copied())
    }

    fn seq(blocks: &[&[usize]]) -> PreorderedSeq {
        PreorderedSeq::new(blocks.iter().map(|b| set(b)).collect())
    }

    #[test]
    fn classification() {
        let (c, _) = a2();
        assert_eq!(validate_sequence(&c, &seq(&[&[P], &[S1]])).unwrap(), SeqClass::CogenOrdered);
        assert_eq!(validate_sequence(&c, &seq(&[&[S2], &[P]])).unwrap(), SeqClass::Preordered);
        assert_eq!(validate_sequence(&c, &seq(&[])).unwrap(), SeqClass::CogenOrdered);
        assert_eq!(validate_sequence(&c, &seq(&[&[S1, S2]])).unwrap(), SeqClass::NotRigid);
        assert_eq!(validate_sequence(&c, &seq(&[&[S1, P]])).unwrap(), SeqClass::CogenPreordered);
        assert!(validate_sequence(&c, &seq(&[&[P], &[P]])).is_err());
    }

    #[test]
    fn orderings_and_characterization() {
        let (c, _) = a2();
        let o = orderings(&seq(&[&[S1, P]]));
        assert_eq!(o, vec![seq(&[&[S1], &[P]]), seq(&[&[P], &[S1]])]);
        assert!(o.iter().all(|d| validate_sequence(&c, d).unwrap() == SeqClass::CogenOrdered));
        assert_eq!(orderings(&seq(&[&[P], &[S1]])), vec![seq(&[&[P], &[S1]])]);
        assert!(characterization_check(&c, &seq(&[&[P], &[S1]])));
        assert!(!characterization_check(&c, &seq(&[&[S2], &[P]])));
        assert!(characterization_check(&c, &seq(&[])));
    }

    #[test]
    fn phi_and_psi() {
        let (c, l) = a2();
        let d = seq(&[&[P], &[S1]]);
        let j = phi(&c, &l, &d).unwrap();
        assert_eq!(j, vec![Interval::new(c.full(), c.full()), Interval::new(set(&[S1]), c.full())]);
        assert_eq!(psi(&c, &l, &j).unwrap(), d);
        assert_eq!(phi(&c, &l, &seq(&[&[P]])).unwrap(), vec![Interval::new(set(&[S2, P]), c.full())]);
        assert_eq!(psi(&c, &l, &[Interval::new(set(&[S2, P]), c.full())]).unwrap(), seq(&[&[P]]));
        assert!(phi(&c, &l, &seq(&[])).unwrap().is_empty());
        assert!(is_decreasing_maxjoin(&l, &j));
        assert!(!is_decreasing_maxjoin(&l, &[Interval::point(set(&[S2]))]));
        assert!(is_decreasing_maxjoin(&l, &[]));
    }

    #[test]
    fn ice_maps() {
        let (c, l) = a2();
        let d = seq(&[&[P], &[S1]]);
        let j = phi(&c, &l, &d).unwrap();
        let s = nu(&c, &l, &j).unwrap();
        assert_eq!(s.window, vec![SubcatSet::EMPTY, set(&[S2])]);
        assert_eq!(tf_to_ice(&c, &d).unwrap(), s);
        assert_eq!(ice_minima(&c, &l, &s).unwrap(), vec![c.full(), set(&[S1]), SubcatSet::EMPTY]);
        assert_eq!(nu_inverse(&c, &l, &s).unwrap(), j);
        assert_eq!(ice_to_tf(&c, &l, &s).unwrap(), d);

        let one = nu(&c, &l, &[Interval::new(set(&[S2, P]), c.full())]).unwrap();
        assert_eq!(one.window, vec![set(&[S1])]);
        assert_eq!(tf_to_ice(&c, &seq(&[&[P]])).unwrap(), one);
        assert_eq!(ice_minima(&c, &l, &one).unwrap()[0], set(&[S2, P]));
        assert_eq!(ice_to_tf(&c, &l, &one).unwrap(), seq(&[&[P]]));

        let gen_p = IceSeq::new(vec![set(&[S1, P])], c.full());
        assert_eq!(nu_inverse(&c, &l, &gen_p).unwrap(), vec![Interval::new(set(&[S2]), set(&[S2, P]))]);

        let t = IceSeq::trivial(c.full());
        assert_eq!(nu(&c, &l, &[]).unwrap(), t);
        assert_eq!(ice_minima(&c, &l, &t).unwrap(), vec![SubcatSet::EMPTY]);
        assert!(nu_inverse(&c, &l, &t).unwrap().is_empty());
        assert!(ice_to_tf(&c, &l, &t).unwrap().is_empty());
    }

    #[test]
    fn padding_does_not_change_equality() {
        let full = SubcatSet::full(3);
        let a = IceSeq::new(vec![set(&[S1])], full);
        let b = IceSeq::new(vec![set(&[S1]), full], full);
        assert_eq!(a, b);
        assert_eq!(b.at(-1), full);
        assert_eq!(b.at(1), SubcatSet::EMPTY);
    }

    #[test]
    fn counts() {
        let (c, l) = a2();
        for (m, n) in [(0, 1), (1, 5), (2, 12)] {
            assert_eq!(enumerate_cogen_preordered(&c, m).unwrap().len(), n, "m = {m}");
            assert_eq!(enumerate_maxjoin(&l, m).unwrap().len(), n, "m = {m}");
            assert_eq!(enumerate_ice(&c, m).unwrap().len(), n, "m = {m}");
        }
    }
}
