//! Exhaustive verification of the bijections and of the structural properties
//! they rest on, as a line-oriented report.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::ar::{ext1, stable_hom_injective, stable_hom_projective, tau_forward, tau_inverse};
use crate::catalog::Catalog;
use crate::error::Result;
use crate::field::FiniteField;
use crate::ice::{
    characterization_check, enumerate_cogen_preordered, enumerate_ice, enumerate_maxjoin, ice_minima, ice_to_tf,
    nu, nu_inverse, orderings, phi, psi, show_intervals, show_set, tf_to_ice,
    validate_sequence, IceSeq, PreorderedSeq, SeqClass,
};
use crate::lattice::{ap_maps, extend_by_closure, heart, torf_classes_in, ApDirection, Interval, PopSide, TorfLattice};
use crate::module::is_isomorphic;
use crate::set::SubcatSet;
use crate::subcat::{cogen, is_class, is_ice_bounded, perp, star, wl_operator, ClassKind, PerpSide};
use crate::tilting::{
    enumerate_tau_inv_rigid, is_cogen_minimal, is_rel_rigid, is_weakly_cogen_preordered_pair, jperp,
    lift_through_reduction, reduce_pair, rel_tau_perp, tau_perp,
};

/// Multiplicity bound used for the bounded ICE test on sequence windows.
pub const DEFAULT_ICE_BOUND: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    /// Record a check that passes iff `failures` is empty; the first failure is the witness.
    pub fn record(&mut self, name: &str, failures: Vec<String>) {
        let witness = match failures.len() {
            0 => None,
            1 => Some(failures[0].clone()),
            n => Some(format!("{} ({n} failures)", failures[0])),
        };
        self.checks.push(Check { name: name.to_string(), pass: failures.is_empty(), witness });
    }

    pub fn note(&mut self, name: &str, pass: bool, witness: String) {
        self.checks.push(Check { name: name.to_string(), pass, witness: Some(witness) });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "CHECK {} {}", c.name, if c.pass { "PASS" } else { "FAIL" })?;
            if let Some(w) = &c.witness {
                write!(f, " {w}")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "SUMMARY {}/{}", self.passed(), self.checks.len())
    }
}

/// A catalog together with its torsion-free lattice.
pub struct Context<F: FiniteField> {
    pub catalog: Catalog<F>,
    pub lattice: TorfLattice,
    /// Multiplicity bound for the bounded ICE test.
    pub ice_bound: usize,
}

impl<F: FiniteField> Context<F> {
    pub fn new(catalog: Catalog<F>, oracle_cap: u128) -> Result<Self> {
        let lattice = TorfLattice::build(&catalog, oracle_cap)?;
        Ok(Context { catalog, lattice, ice_bound: DEFAULT_ICE_BOUND })
    }

    fn labels(&self) -> &[String] {
        self.catalog.labels()
    }
}

/// Every sequence of `m` blocks whose union is τ⁻¹-rigid.
fn rigid_candidates<F: FiniteField>(cat: &Catalog<F>, m: usize) -> Vec<PreorderedSeq> {
    let mut out = Vec::new();
    for r in enumerate_tau_inv_rigid(cat) {
        let members: Vec<usize> = r.iter().collect();
        if m == 0 {
            if r.is_empty() {
                out.push(PreorderedSeq::new(Vec::new()));
            }
            continue;
        }
        let total = m.pow(members.len() as u32);
        for mut code in 0..total {
            let mut blocks = vec![SubcatSet::EMPTY; m];
            for &i in &members {
                blocks[code % m] = blocks[code % m].with(i);
                code /= m;
            }
            out.push(PreorderedSeq::new(blocks));
        }
    }
    out
}

/// Checks that the sequence maps are mutually inverse bijections for `m` blocks.
pub fn verify_bijections<F: FiniteField>(ctx: &Context<F>, m: usize) -> Result<Report> {
    let (cat, l, lab) = (&ctx.catalog, &ctx.lattice, ctx.labels());
    let mut r = Report::default();
    let seqs = enumerate_cogen_preordered(cat, m)?;
    let maxjoins = enumerate_maxjoin(l, m)?;

    let mut images = Vec::new();
    let mut fails = Vec::new();
    for d in &seqs {
        match phi(cat, l, d) {
            Ok(j) => images.push((d, j)),
            Err(e) => fails.push(format!("{}: {e}", d.display(lab))),
        }
    }
    r.record("phi_lands_in_maxjoin_sequences", fails);

    let fails = images
        .iter()
        .filter(|(d, j)| psi(cat, l, j).ok().as_ref() != Some(*d))
        .map(|(d, _)| d.display(lab))
        .collect();
    r.record("psi_after_phi_is_identity", fails);

    let fails = maxjoins
        .iter()
        .filter(|j| psi(cat, l, j).and_then(|d| phi(cat, l, &d)).ok().as_ref() != Some(*j))
        .map(|j| show_intervals(j, lab))
        .collect();
    r.record("phi_after_psi_is_identity", fails);

    let counts = format!("cogen_preordered={} maxjoin_seqs={}", seqs.len(), maxjoins.len());
    r.note("counts_agree", seqs.len() == maxjoins.len(), counts);

    let mut fails = Vec::new();
    let mut ices = Vec::new();
    for (d, j) in &images {
        let via_nu = nu(cat, l, j)?;
        if tf_to_ice(cat, d)? != via_nu {
            fails.push(d.display(lab));
        }
        ices.push((*d, j, via_nu));
    }
    r.record("tf_to_ice_equals_nu_after_phi", fails);

    let fails = ices
        .iter()
        .filter(|(d, _, s)| ice_to_tf(cat, l, s).ok().as_ref() != Some(*d))
        .map(|(d, _, _)| d.display(lab))
        .collect();
    r.record("ice_to_tf_after_tf_to_ice_is_identity", fails);

    let mut seen: HashMap<&IceSeq, &Vec<Interval>> = HashMap::new();
    let mut fails = Vec::new();
    for (_, j, s) in &ices {
        if let Some(prev) = seen.insert(s, j) {
            fails.push(format!("{} and {}", show_intervals(prev, lab), show_intervals(j, lab)));
        }
    }
    r.record("nu_is_injective", fails);

    let fails = ices
        .iter()
        .filter(|(_, j, s)| nu_inverse(cat, l, s).ok().as_ref() != Some(*j))
        .map(|(_, j, _)| show_intervals(j, lab))
        .collect();
    r.record("nu_inverse_after_nu_is_identity", fails);

    let fails = ices
        .iter()
        .filter(|(_, j, s)| match ice_minima(cat, l, s) {
            Ok(f) => (0..j.len()).any(|k| f[k] != j[k].min),
            Err(_) => true,
        })
        .map(|(_, j, _)| show_intervals(j, lab))
        .collect();
    r.record("minima_recursion_recovers_lower_ends", fails);

    let mut wl_memo: HashMap<SubcatSet, SubcatSet> = HashMap::new();
    let mut ice_memo: HashMap<SubcatSet, bool> = HashMap::new();
    let mut wl_fails = Vec::new();
    let mut ice_fails = Vec::new();
    for (_, j, s) in &ices {
        for (k, &c) in s.window.iter().enumerate() {
            let wl = match wl_memo.get(&c) {
                Some(w) => *w,
                None => *wl_memo.entry(c).or_insert(wl_operator(cat, c)?),
            };
            if wl != heart(cat, &j[k]) {
                wl_fails.push(format!("{} at C(-{k})", show_intervals(j, lab)));
            }
            let ok = match ice_memo.get(&c) {
                Some(b) => *b,
                None => *ice_memo.entry(c).or_insert(is_ice_bounded(cat, c, ctx.ice_bound)?),
            };
            if !ok {
                ice_fails.push(format!("{} at C(-{k})", show_set(c, lab)));
            }
        }
    }
    r.record("wl_of_window_equals_heart", wl_fails);
    r.record("window_entries_are_ice_closed", ice_fails);

    let image: HashSet<&IceSeq> = ices.iter().map(|(_, _, s)| s).collect();
    let chains = enumerate_ice(cat, m)?;
    let chain_set: HashSet<&IceSeq> = chains.iter().collect();
    let longer = enumerate_ice(cat, m + 1)?.len();
    let mut fails: Vec<String> =
        chains.iter().filter(|s| !image.contains(s)).map(|s| format!("missed {}", s.display(lab))).collect();
    fails.extend(image.iter().filter(|s| !chain_set.contains(*s)).map(|s| format!("extra {}", s.display(lab))));
    let info = format!("ice_seqs={} ice_seqs_next_window={}", chains.len(), longer);
    let pass = fails.is_empty();
    r.note("nu_image_equals_ice_sequences", pass, if pass { info } else { format!("{} {info}", fails[0]) });

    let mut char_fails = Vec::new();
    let mut order_fails = Vec::new();
    for d in rigid_candidates(cat, m) {
        let strong = validate_sequence(cat, &d)? >= SeqClass::CogenPreordered;
        if strong != characterization_check(cat, &d) {
            char_fails.push(d.display(lab));
        }
        let mut all_ordered = true;
        for o in orderings(&d) {
            all_ordered &= validate_sequence(cat, &o)? == SeqClass::CogenOrdered;
        }
        if strong != all_ordered {
            order_fails.push(d.display(lab));
        }
    }
    r.record("block_characterization_matches_classification", char_fails);
    r.record("orderings_match_classification", order_fails);

    let fails = images
        .iter()
        .filter(|(d, j)| {
            (0..d.len()).any(|k| {
                let tail = PreorderedSeq::new(d.blocks[k..].to_vec());
                phi(cat, l, &tail).ok().as_deref() != Some(&j[k..])
            })
        })
        .map(|(d, _)| d.display(lab))
        .collect();
    r.record("phi_commutes_with_suffixes", fails);
    Ok(r)
}

/// Interval, heart and torsion-pair properties over every interval of the lattice.
pub fn lattice_properties<F: FiniteField>(ctx: &Context<F>) -> Result<Report> {
    let (cat, l, lab) = (&ctx.catalog, &ctx.lattice, ctx.labels());
    let mut r = Report::default();
    let intervals: Vec<Interval> = l
        .members()
        .iter()
        .flat_map(|&a| l.members().iter().filter(move |&&b| a.is_subset(b)).map(move |&b| Interval::new(a, b)))
        .collect();
    let show = |i: &Interval| format!("[{}, {}]", show_set(i.min, lab), show_set(i.max, lab));

    let mut fails = Vec::new();
    for i in &intervals {
        if (l.pop(i, PopSide::Up)? == i.max) != (l.pop(i, PopSide::Down)? == i.min) {
            fails.push(show(i));
        }
    }
    r.record("pop_up_and_pop_down_agree_on_wideness", fails);

    let mut round = Vec::new();
    let mut lemma = Vec::new();
    let mut star_fails = Vec::new();
    let mut wide_fails = Vec::new();
    let mut stars: HashMap<(SubcatSet, SubcatSet), SubcatSet> = HashMap::new();
    let mut star_of = |g: SubcatSet, f: SubcatSet| -> Result<SubcatSet> {
        if let Some(s) = stars.get(&(g, f)) {
            return Ok(*s);
        }
        let s = star(cat, g, f)?;
        stars.insert((g, f), s);
        Ok(s)
    };
    for i in &intervals {
        if !l.is_wide_interval(i)? {
            continue;
        }
        let h = heart(cat, i);
        if !is_class(cat, h, ClassKind::ExtClosed)? {
            wide_fails.push(show(i));
        }
        for &f in l.members().iter().filter(|&&f| i.contains(f)) {
            let g = ap_maps(cat, l, i, f, ApDirection::Restrict)?;
            if ap_maps(cat, l, i, g, ApDirection::Extend)? != f {
                round.push(format!("{} in {}", show_set(f, lab), show(i)));
            }
            let upper = heart(cat, &Interval::new(f, i.max));
            let g2 = perp(cat, upper, PerpSide::Right).intersect(h);
            if star_of(g2, i.min)? != f {
                lemma.push(format!("{} in {}", show_set(f, lab), show(i)));
            }
        }
        for g in torf_classes_in(cat, h)? {
            let f = ap_maps(cat, l, i, g, ApDirection::Extend)?;
            if ap_maps(cat, l, i, f, ApDirection::Restrict)? != g {
                round.push(format!("{} in heart of {}", show_set(g, lab), show(i)));
            }
            if star_of(g, i.min)? != extend_by_closure(cat, i, g)? {
                star_fails.push(format!("{} in {}", show_set(g, lab), show(i)));
            }
        }
    }
    r.record("hearts_of_wide_intervals_are_extension_closed", wide_fails);
    r.record("restrict_and_extend_are_inverse", round);
    r.record("class_recovered_from_upper_heart", lemma);
    r.record("star_equals_closure_extension", star_fails);

    let mut fails = Vec::new();
    for x in enumerate_tau_inv_rigid(cat) {
        let i = Interval::new(cogen(cat, x), tau_perp(cat, x));
        if !l.is_wide_interval(&i)? || heart(cat, &i) != jperp(cat, x)? {
            fails.push(show_set(x, lab));
        }
    }
    r.record("rigid_interval_heart_equals_jperp", fails);

    let mut pair_fails = Vec::new();
    let mut order_fails = Vec::new();
    for &f in l.members() {
        let t = perp(cat, f, PerpSide::Left);
        if !is_class(cat, t, ClassKind::Tors)? || perp(cat, t, PerpSide::Right) != f {
            pair_fails.push(show_set(f, lab));
        }
        for &g in l.members() {
            if f.is_subset(g) != perp(cat, g, PerpSide::Left).is_subset(t) {
                order_fails.push(format!("{} vs {}", show_set(f, lab), show_set(g, lab)));
            }
        }
    }
    r.record("torsion_pair_round_trip", pair_fails);
    r.record("perp_reverses_order", order_fails);
    Ok(r)
}

/// Reduction to τ⁻¹-perpendicular categories over all weakly cogen-preordered pairs.
pub fn reduction_properties<F: FiniteField>(ctx: &Context<F>) -> Result<Report> {
    let (cat, lab) = (&ctx.catalog, ctx.labels());
    let mut r = Report::default();
    let mut pairs = Vec::new();
    for rig in enumerate_tau_inv_rigid(cat) {
        for y in rig.subsets() {
            let x = rig.minus(y);
            if is_weakly_cogen_preordered_pair(cat, y, x) {
                pairs.push((y, x));
            }
        }
    }
    let show = |y: SubcatSet, x: SubcatSet| format!("({}, {})", show_set(y, lab), show_set(x, lab));

    let mut cogen_fails = Vec::new();
    let mut perp_fails = Vec::new();
    let mut lift_fails = Vec::new();
    for &(y, x) in &pairs {
        let w = jperp(cat, x)?;
        let t = reduce_pair(cat, y, x)?;
        if cogen(cat, x.union(y)).intersect(w) != cogen(cat, t).intersect(w) {
            cogen_fails.push(show(y, x));
        }
        if tau_perp(cat, x.union(y)).intersect(w) != rel_tau_perp(cat, t, w) {
            perp_fails.push(show(y, x));
        }
        if lift_through_reduction(cat, t, x).ok() != Some(y) {
            lift_fails.push(show(y, x));
        }
    }
    r.record("reduction_preserves_cogen_in_jperp", cogen_fails);
    r.record("reduction_preserves_tau_perp_in_jperp", perp_fails);
    r.record("lift_after_reduce_is_identity", lift_fails);

    let mut fails = Vec::new();
    for x in enumerate_tau_inv_rigid(cat) {
        let w = jperp(cat, x)?;
        for z in w.subsets() {
            if !is_rel_rigid(cat, z, w)? {
                continue;
            }
            match lift_through_reduction(cat, z, x).and_then(|y| reduce_pair(cat, y, x)) {
                Ok(back) if back == z => {}
                Ok(_) => fails.push(format!("{} over {}", show_set(z, lab), show_set(x, lab))),
                Err(e) => fails.push(format!("{} over {}: {e}", show_set(z, lab), show_set(x, lab))),
            }
        }
    }
    r.record("reduce_after_lift_is_identity", fails);

    let mut heads = BTreeSet::new();
    for m in 1..=3 {
        for d in enumerate_cogen_preordered(cat, m)? {
            heads.insert((d.blocks[0], d.suffix(1)));
        }
    }
    let mut fails = Vec::new();
    for (y, x) in heads {
        if !is_cogen_minimal(cat, reduce_pair(cat, y, x)?) {
            fails.push(show(y, x));
        }
    }
    r.record("reduced_head_is_cogen_minimal", fails);
    Ok(r)
}

/// Ext¹ by syzygies against both stable-Hom formulas, and the translate round trip.
pub fn numeric_properties<F: FiniteField>(cat: &Catalog<F>) -> Result<Report> {
    let lab = cat.labels();
    let mut r = Report::default();
    let n = cat.len();
    let mut table = Vec::new();
    let mut proj = Vec::new();
    let mut inj = Vec::new();
    for z in 0..n {
        for x in 0..n {
            let (mz, mx) = (cat.module(z), cat.module(x));
            let e = ext1(mz, mx)?.dim();
            let w = format!("Ext1({}, {})", lab[z], lab[x]);
            if e != cat.ext(z, x) {
                table.push(w.clone());
            }
            if e != stable_hom_projective(mx, mz)? {
                proj.push(w.clone());
            }
            if e != stable_hom_injective(mx, mz)? {
                inj.push(w);
            }
        }
    }
    r.record("ext_table_matches_syzygy_computation", table);
    r.record("ext_equals_stable_hom_modulo_projectives", proj);
    r.record("ext_equals_stable_hom_modulo_injectives", inj);

    let mut fails = Vec::new();
    for i in (0..n).filter(|&i| !cat.is_injective(i)) {
        let m = cat.module(i);
        let back = tau_forward(&tau_inverse(m));
        let table_ok = cat.tau_inv(i).and_then(|t| cat.tau(t)) == Some(i);
        if !table_ok || !is_isomorphic(&back, m, cat.limits())? {
            fails.push(lab[i].clone());
        }
    }
    r.record("tau_after_tau_inverse_is_identity", fails);
    Ok(r)
}

/// Every suite: bijections for `m`, then lattice, reduction and numerical properties.
pub fn verify_all<F: FiniteField>(ctx: &Context<F>, m: usize) -> Result<Report> {
    let mut r = verify_bijections(ctx, m)?;
    r.extend(lattice_properties(ctx)?);
    r.extend(reduction_properties(ctx)?);
    r.extend(numeric_properties(&ctx.catalog)?);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::Fp;
    use crate::lattice::DEFAULT_ORACLE_CAP;
    use crate::module::Limits;
    use std::sync::Arc;

    fn ctx(text: &str, bound: usize) -> Context<Fp<2>> {
        let alg = Arc::new(Algebra::from_text(text).unwrap());
        Context::new(Catalog::build(alg, bound, Limits::default()).unwrap(), DEFAULT_ORACLE_CAP).unwrap()
    }

    #[test]
    fn a2_everything_passes() {
        let c = ctx("vertex 1\nvertex 2\narrow a 1 2\n", 2);
        for m in 0..=3 {
            let r = verify_all(&c, m).unwrap();
            assert!(r.all_passed(), "m = {m}\n{r}");
        }
        let r = verify_bijections(&c, 2).unwrap();
        assert_eq!(r.get("counts_agree").unwrap().witness.as_deref(), Some("cogen_preordered=12 maxjoin_seqs=12"));
        let text = r.to_string();
        assert!(text.ends_with(&format!("SUMMARY {}/{}\n", r.checks.len(), r.checks.len())));
    }

    #[test]
    fn failing_check_carries_witness() {
        let mut r = Report::default();
        r.record("x", vec!["a".into(), "b".into()]);
        r.record("y", vec![]);
        assert_eq!(r.to_string(), "CHECK x FAIL a (2 failures)\nCHECK y PASS\nSUMMARY 1/2\n");
    }
}
