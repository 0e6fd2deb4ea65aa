//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::sync::Arc;
use std::time::{Duration, Instant};

use icelab_core::catalog::Catalog;
use icelab_core::lattice::{torf_oracle, DEFAULT_ORACLE_CAP};
use icelab_core::subcat::{cogen, is_ice_bounded};
use icelab_core::tilting::{enumerate_tau_inv_rigid, is_cogen_minimal, split_injectives};
use icelab_core::verify::{
    lattice_properties, numeric_properties, reduction_properties, verify_all, verify_bijections, Context, Report,
    DEFAULT_ICE_BOUND,
};
use icelab_core::{Algebra, Gf2, Limits, Result};

const A2: &str = include_str!("../../../fixtures/a2.alg");
const A3: &str = include_str!("../../../fixtures/a3.alg");
const A4: &str = include_str!("../../../fixtures/a4.alg");

fn context(text: &str) -> Result<Context<Gf2>> {
    let alg = Arc::new(Algebra::from_text(text)?);
    Context::new(Catalog::build_auto(alg, 8, Limits::default())?, DEFAULT_ORACLE_CAP)
}

struct Outcome {
    problems: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { problems: Vec::new() }
    }

    fn expect<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.problems.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn report(&mut self, what: &str, r: &Report) {
        for c in r.checks.iter().filter(|c| !c.pass) {
            self.problems.push(format!("{what} {} {}", c.name, c.witness.clone().unwrap_or_default()));
        }
    }

    fn within(&mut self, start: Instant, limit: Duration) {
        if start.elapsed() > limit {
            self.problems.push(format!("took {:.1?}, limit {limit:?}", start.elapsed()));
        }
    }
}

fn census_a2() -> Result<Outcome> {
    let start = Instant::now();
    let mut o = Outcome::new();
    let ctx = context(A2)?;
    let cat = &ctx.catalog;
    let mut dims: Vec<Vec<usize>> = cat.entries().iter().map(|m| m.dims().to_vec()).collect();
    dims.sort();
    o.expect("catalog", dims, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    o.expect("torf", ctx.lattice.len(), 5);
    let rigid = enumerate_tau_inv_rigid(cat);
    o.expect("rigid", rigid.len(), 6);
    o.expect("cogen-minimal", rigid.iter().filter(|&&x| is_cogen_minimal(cat, x)).count(), 5);
    let mut ice = 0;
    for s in cat.full().subsets() {
        ice += is_ice_bounded(cat, s, DEFAULT_ICE_BOUND)? as usize;
    }
    o.expect("ice census", ice, 6);
    o.within(start, Duration::from_secs(10));
    Ok(o)
}

fn bijections_a2() -> Result<Outcome> {
    let mut o = Outcome::new();
    let ctx = context(A2)?;
    for m in 0..=3 {
        let r = verify_bijections(&ctx, m)?;
        o.report(&format!("m={m}"), &r);
        if m == 2 {
            let counts = r.get("counts_agree").and_then(|c| c.witness.clone());
            o.expect("m=2 counts", counts.as_deref(), Some("cogen_preordered=12 maxjoin_seqs=12"));
        }
    }
    Ok(o)
}

fn a3() -> Result<Outcome> {
    let start = Instant::now();
    let mut o = Outcome::new();
    let ctx = context(A3)?;
    let cat = &ctx.catalog;
    o.expect("catalog", cat.len(), 6);
    o.expect("torf oracle", torf_oracle(cat, DEFAULT_ORACLE_CAP)?.len(), 14);
    o.expect("torf", ctx.lattice.len(), 14);
    let minimal: Vec<_> = enumerate_tau_inv_rigid(cat).into_iter().filter(|&x| is_cogen_minimal(cat, x)).collect();
    let mut images: Vec<_> = minimal.iter().map(|&x| cogen(cat, x)).collect();
    images.sort();
    images.dedup();
    o.expect("minimal rigid", minimal.len(), 14);
    o.expect("distinct Cogen", images.len(), 14);
    for &x in &minimal {
        o.expect("split injectives of Cogen", split_injectives(cat, cogen(cat, x)), x);
    }
    for m in 1..=2 {
        o.report(&format!("m={m}"), &verify_bijections(&ctx, m)?);
    }
    o.within(start, Duration::from_secs(120));
    Ok(o)
}

fn a4() -> Result<Outcome> {
    let start = Instant::now();
    let mut o = Outcome::new();
    let ctx = context(A4)?;
    o.expect("torf oracle", torf_oracle(&ctx.catalog, DEFAULT_ORACLE_CAP)?.len(), 42);
    o.expect("torf", ctx.lattice.len(), 42);
    o.report("m=1", &verify_all(&ctx, 1)?);
    o.within(start, Duration::from_secs(600));
    Ok(o)
}

fn on_a2_and_a3(f: impl Fn(&Context<Gf2>) -> Result<Report>) -> Result<Outcome> {
    let mut o = Outcome::new();
    for (name, text) in [("A2", A2), ("A3", A3)] {
        o.report(name, &f(&context(text)?)?);
    }
    Ok(o)
}

fn ice_pipeline() -> Result<Outcome> {
    const CHECKS: [&str; 6] = [
        "tf_to_ice_equals_nu_after_phi",
        "nu_is_injective",
        "nu_inverse_after_nu_is_identity",
        "ice_to_tf_after_tf_to_ice_is_identity",
        "minima_recursion_recovers_lower_ends",
        "nu_image_equals_ice_sequences",
    ];
    let mut o = Outcome::new();
    for (name, text) in [("A2", A2), ("A3", A3)] {
        let ctx = context(text)?;
        for m in 0..=2 {
            let r = verify_bijections(&ctx, m)?;
            let picked = Report { checks: r.checks.into_iter().filter(|c| CHECKS.contains(&c.name.as_str())).collect() };
            o.expect("checks present", picked.checks.len(), CHECKS.len());
            o.report(&format!("{name} m={m}"), &picked);
        }
    }
    Ok(o)
}

type Criterion = (&'static str, Box<dyn Fn() -> Result<Outcome>>);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1 A2 census", Box::new(census_a2)),
        ("2 A2 sequence bijections m<=3", Box::new(bijections_a2)),
        ("3 A3 lattice and bijections", Box::new(a3)),
        ("4 A4 lattice and verify m=1", Box::new(a4)),
        ("5 interval and heart properties", Box::new(|| on_a2_and_a3(lattice_properties))),
        ("6 reduction properties", Box::new(|| on_a2_and_a3(reduction_properties))),
        ("7 ICE pipeline", Box::new(ice_pipeline)),
        ("8 Ext and translate cross-checks", Box::new(|| on_a2_and_a3(|c| numeric_properties(&c.catalog)))),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let (ok, detail) = match run() {
            Ok(o) if o.problems.is_empty() => (true, String::new()),
            Ok(o) => (false, o.problems.join("; ")),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += !ok as usize;
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {name} ({:.2}s){}", start.elapsed().as_secs_f64(), if ok { String::new() } else { format!(": {detail}") });
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
