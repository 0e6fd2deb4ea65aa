//! The lattice of torsion-free classes, its intervals, pop operators and hearts.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::set::SubcatSet;
use crate::subcat::{closure, cogen, is_class, perp, ClassKind, Closure, PerpSide};
use crate::tilting::{enumerate_tau_inv_rigid, is_cogen_minimal};

/// Default largest subset lattice scanned by the fixpoint oracle.
pub const DEFAULT_ORACLE_CAP: u128 = 1 << 16;

/// A closed interval `[min, max]` of torsion-free classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub min: SubcatSet,
    pub max: SubcatSet,
}

impl Interval {
    pub fn new(min: SubcatSet, max: SubcatSet) -> Self {
        Interval { min, max }
    }

    pub fn point(f: SubcatSet) -> Self {
        Interval { min: f, max: f }
    }

    /// `other ⊆ self` as intervals.
    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.min.is_subset(other.min) && other.min.is_subset(other.max) && other.max.is_subset(self.max)
    }

    pub fn contains(&self, f: SubcatSet) -> bool {
        self.min.is_subset(f) && f.is_subset(self.max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PopSide {
    Up,
    Down,
}

#[derive(Debug, Clone)]
pub struct TorfLattice {
    members: Vec<SubcatSet>,
    index: HashMap<SubcatSet, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    full: SubcatSet,
}

/// Torsion-free classes as `Cogen X` for the cogen-minimal τ⁻¹-rigid `X`.
pub fn torf_from_rigid<F: FiniteField>(cat: &Catalog<F>) -> Vec<SubcatSet> {
    let set: BTreeSet<(usize, SubcatSet)> = enumerate_tau_inv_rigid(cat)
        .into_iter()
        .filter(|&x| is_cogen_minimal(cat, x))
        .map(|x| {
            let c = cogen(cat, x);
            (c.len(), c)
        })
        .collect();
    set.into_iter().map(|(_, c)| c).collect()
}

/// Every subset equal to its own torsion-free closure.
pub fn torf_oracle<F: FiniteField>(cat: &Catalog<F>, cap: u128) -> Result<Vec<SubcatSet>> {
    let needed = 1u128.checked_shl(cat.len() as u32).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    let mut out = Vec::new();
    for s in cat.full().subsets() {
        if cogen(cat, s) == s && is_class(cat, s, ClassKind::Torf)? {
            out.push(s);
        }
    }
    out.sort_by_key(|s| (s.len(), *s));
    Ok(out)
}

impl TorfLattice {
    /// Build from the rigid-module parametrization, cross-checked against the
    /// subset fixpoint oracle when the catalog is small enough.
    pub fn build<F: FiniteField>(cat: &Catalog<F>, oracle_cap: u128) -> Result<Self> {
        let members = torf_from_rigid(cat);
        match torf_oracle(cat, oracle_cap) {
            Ok(oracle) if oracle != members => {
                return Err(Error::Verification(format!(
                    "torsion-free classes: {} from rigid modules, {} from the fixpoint oracle",
                    members.len(),
                    oracle.len()
                )))
            }
            Ok(_) | Err(Error::CapExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
        Ok(Self::from_members(members, cat.full()))
    }

    /// Members must be sorted by size; covers come from containment.
    pub fn from_members(members: Vec<SubcatSet>, full: SubcatSet) -> Self {
        let n = members.len();
        let index: HashMap<SubcatSet, usize> = members.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for a in 0..n {
            let above: Vec<usize> =
                (0..n).filter(|&b| b != a && members[a].is_subset(members[b])).collect();
            for &b in &above {
                let covered = above
                    .iter()
                    .all(|&c| c == b || !(members[c].is_subset(members[b])));
                if covered {
                    up[a].push(b);
                    down[b].push(a);
                }
            }
        }
        TorfLattice { members, index, up, down, full }
    }

    pub fn members(&self) -> &[SubcatSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn bottom(&self) -> SubcatSet {
        SubcatSet::EMPTY
    }

    pub fn top(&self) -> SubcatSet {
        self.full
    }

    pub fn contains(&self, f: SubcatSet) -> bool {
        self.index.contains_key(&f)
    }

    fn idx(&self, f: SubcatSet) -> Result<usize> {
        self.index.get(&f).copied().ok_or_else(|| Error::Precondition(format!("{f:?} is not torsion-free")))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> =
            self.up.iter().enumerate().flat_map(|(a, bs)| bs.iter().map(move |&b| (a, b))).collect();
        e.sort();
        e
    }

    pub fn meet(&self, f: SubcatSet, g: SubcatSet) -> Result<SubcatSet> {
        self.idx(f)?;
        self.idx(g)?;
        let m = f.intersect(g);
        self.idx(m)?;
        Ok(m)
    }

    /// Smallest member containing both.
    pub fn join(&self, f: SubcatSet, g: SubcatSet) -> Result<SubcatSet> {
        self.idx(f)?;
        self.idx(g)?;
        let u = f.union(g);
        Ok(*self.members.iter().find(|m| u.is_subset(**m)).expect("top contains everything"))
    }

    pub fn covers_up(&self, f: SubcatSet) -> Result<Vec<SubcatSet>> {
        Ok(self.up[self.idx(f)?].iter().map(|&i| self.members[i]).collect())
    }

    pub fn covers_down(&self, f: SubcatSet) -> Result<Vec<SubcatSet>> {
        Ok(self.down[self.idx(f)?].iter().map(|&i| self.members[i]).collect())
    }

    fn check(&self, i: &Interval) -> Result<()> {
        self.idx(i.min)?;
        self.idx(i.max)?;
        if !i.min.is_subset(i.max) {
            return Err(Error::Precondition(format!("{:?} ⊄ {:?}", i.min, i.max)));
        }
        Ok(())
    }

    pub fn pop(&self, i: &Interval, side: PopSide) -> Result<SubcatSet> {
        self.check(i)?;
        match side {
            PopSide::Up => {
                let mut acc = i.min;
                for c in self.covers_up(i.min)? {
                    if c.is_subset(i.max) {
                        acc = self.join(acc, c)?;
                    }
                }
                Ok(acc)
            }
            PopSide::Down => {
                let mut acc = i.max;
                for c in self.covers_down(i.max)? {
                    if i.min.is_subset(c) {
                        acc = self.meet(acc, c)?;
                    }
                }
                Ok(acc)
            }
        }
    }

    pub fn is_wide_interval(&self, i: &Interval) -> Result<bool> {
        Ok(self.pop(i, PopSide::Up)? == i.max)
    }

    /// `J^+ = pop^{I^+}(J^-)`, for `J ⊆ I`.
    pub fn is_maximal_join_in(&self, j: &Interval, i: &Interval) -> Result<bool> {
        self.check(j)?;
        self.check(i)?;
        if !i.contains_interval(j) {
            return Err(Error::Precondition("inner interval is not contained in the outer one".into()));
        }
        Ok(j.max == self.pop(&Interval::new(j.min, i.max), PopSide::Up)?)
    }

    /// Graphviz rendering: one node per class labeled with its members, one edge per cover.
    pub fn to_dot(&self, labels: &[String]) -> String {
        let mut out = String::from("digraph torf {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, m) in self.members.iter().enumerate() {
            let names: Vec<&str> = m.iter().map(|k| labels[k].as_str()).collect();
            let _ = writeln!(out, "  n{i} [label=\"{{{}}}\"];", names.join(", "));
        }
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

/// `H_I = I^+ ∩ ⊥(I^-)`
pub fn heart<F: FiniteField>(cat: &Catalog<F>, i: &Interval) -> SubcatSet {
    i.max.intersect(perp(cat, i.min, PerpSide::Left))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApDirection {
    Restrict,
    Extend,
}

/// The bijection between `[I^-, I^+]` and torsion-free classes of the heart:
/// restriction `F ↦ F ∩ H_I`, extension `G ↦ G * I^-`. The extension is
/// computed as a torsion-free closure; [`crate::subcat::star`] gives the same answer.
pub fn ap_maps<F: FiniteField>(
    cat: &Catalog<F>,
    lattice: &TorfLattice,
    i: &Interval,
    input: SubcatSet,
    direction: ApDirection,
) -> Result<SubcatSet> {
    if !lattice.is_wide_interval(i)? {
        return Err(Error::Precondition("interval is not wide".into()));
    }
    let h = heart(cat, i);
    match direction {
        ApDirection::Restrict => {
            if !lattice.contains(input) || !i.contains(input) {
                return Err(Error::Precondition(format!("{input:?} is not in the interval")));
            }
            Ok(input.intersect(h))
        }
        ApDirection::Extend => {
            if !is_torf_in(cat, input, h)? {
                return Err(Error::Precondition(format!("{input:?} is not torsion-free in the heart")));
            }
            extend_by_closure(cat, i, input)
        }
    }
}

/// Torsion-free classes of a wide subcategory `w`: extension-closed `g ⊆ w` with `Cogen(g) ∩ w ⊆ g`.
pub fn is_torf_in<F: FiniteField>(cat: &Catalog<F>, g: SubcatSet, w: SubcatSet) -> Result<bool> {
    Ok(g.is_subset(w) && cogen(cat, g).intersect(w) == g && is_class(cat, g, ClassKind::ExtClosed)?)
}

pub fn torf_classes_in<F: FiniteField>(cat: &Catalog<F>, w: SubcatSet) -> Result<Vec<SubcatSet>> {
    let mut out = Vec::new();
    for g in w.subsets() {
        if is_torf_in(cat, g, w)? {
            out.push(g);
        }
    }
    Ok(out)
}

/// Extension computed through closures instead of the star product.
pub fn extend_by_closure<F: FiniteField>(cat: &Catalog<F>, i: &Interval, g: SubcatSet) -> Result<SubcatSet> {
    Ok(closure(cat, g.union(i.min), Closure::Torf)?.intersect(i.max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::Fp;
    use crate::module::Limits;
    use crate::subcat::star;
    use std::sync::Arc;

    fn cat(text: &str, bound: usize) -> Catalog<Fp<2>> {
        Catalog::build(Arc::new(Algebra::from_text(text).unwrap()), bound, Limits::default()).unwrap()
    }

    const S1: usize = 0;
    const S2: usize = 1;
    const P: usize = 2;

    fn set(ix: &[usize]) -> SubcatSet {
        SubcatSet::from_indices(ix.iter().copied())
    }

    #[test]
    fn a2_lattice() {
        let c = cat("vertex 1\nvertex 2\narrow a 1 2\n", 2);
        let l = TorfLattice::build(&c, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(l.members(), &[set(&[]), set(&[S1]), set(&[S2]), set(&[S2, P]), c.full()]);
        assert_eq!(l.join(set(&[S1]), set(&[S2])).unwrap(), c.full());
        assert_eq!(l.covers_up(SubcatSet::EMPTY).unwrap(), vec![set(&[S1]), set(&[S2])]);
        assert_eq!(l.meet(set(&[S2, P]), c.full()).unwrap(), set(&[S2, P]));
        assert_eq!(l.edges().len(), 5);
        let full = Interval::new(SubcatSet::EMPTY, c.full());
        assert_eq!(l.pop(&full, PopSide::Up).unwrap(), c.full());
        assert_eq!(l.pop(&Interval::new(set(&[S2]), c.full()), PopSide::Up).unwrap(), set(&[S2, P]));
        assert_eq!(l.pop(&Interval::point(set(&[S1])), PopSide::Up).unwrap(), set(&[S1]));
    }

    #[test]
    fn hearts_and_wideness() {
        let c = cat("vertex 1\nvertex 2\narrow a 1 2\n", 2);
        let l = TorfLattice::build(&c, DEFAULT_ORACLE_CAP).unwrap();
        let i = Interval::new(set(&[S2]), set(&[S2, P]));
        assert_eq!(heart(&c, &i), set(&[P]));
        assert_eq!(heart(&c, &Interval::new(SubcatSet::EMPTY, c.full())), c.full());
        for &f in l.members() {
            assert_eq!(heart(&c, &Interval::point(f)), SubcatSet::EMPTY);
            assert!(l.is_wide_interval(&Interval::point(f)).unwrap());
        }
        assert!(l.is_wide_interval(&i).unwrap());
        assert!(!l.is_wide_interval(&Interval::new(SubcatSet::EMPTY, set(&[S2, P]))).unwrap());
        let top = Interval::new(SubcatSet::EMPTY, c.full());
        assert!(l.is_maximal_join_in(&i, &top).unwrap());
        assert!(!l.is_maximal_join_in(&Interval::point(set(&[S2])), &top).unwrap());
    }

    #[test]
    fn ap_maps_on_a2() {
        let c = cat("vertex 1\nvertex 2\narrow a 1 2\n", 2);
        let l = TorfLattice::build(&c, DEFAULT_ORACLE_CAP).unwrap();
        let i = Interval::new(set(&[S2]), set(&[S2, P]));
        assert_eq!(ap_maps(&c, &l, &i, set(&[S2, P]), ApDirection::Restrict).unwrap(), set(&[P]));
        assert_eq!(ap_maps(&c, &l, &i, set(&[P]), ApDirection::Extend).unwrap(), set(&[S2, P]));
        assert_eq!(ap_maps(&c, &l, &i, set(&[S2]), ApDirection::Restrict).unwrap(), SubcatSet::EMPTY);
        assert_eq!(ap_maps(&c, &l, &i, SubcatSet::EMPTY, ApDirection::Extend).unwrap(), set(&[S2]));
        assert_eq!(star(&c, set(&[P]), set(&[S2])).unwrap(), set(&[S2, P]));
    }

    #[test]
    fn dot_export() {
        let c = cat("vertex 1\nvertex 2\n", 1);
        let l = TorfLattice::build(&c, DEFAULT_ORACLE_CAP).unwrap();
        let dot = l.to_dot(c.labels());
        assert_eq!(dot.matches("[label=").count(), 4);
        assert_eq!(dot.matches("->").count(), 4);
        assert_eq!(dot, l.to_dot(c.labels()));
    }

    #[test]
    fn a3_has_fourteen() {
        let c = cat("vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\n", 3);
        let l = TorfLattice::build(&c, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(l.len(), 14);
    }
}
