//! `icelab`: catalogs, torsion-free lattices, sequence enumeration and
//! verification for representation-finite bound quiver algebras over F_p.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use icelab_core::cache::load_or_build;
use icelab_core::catalog::Catalog;
use icelab_core::ice::{
    enumerate_cogen_preordered, enumerate_ice, enumerate_maxjoin, show_intervals, show_set, SeqKind,
};
use icelab_core::set::SubcatSet;
use icelab_core::tilting::jperp;
use icelab_core::verify::{verify_all, Context, DEFAULT_ICE_BOUND};
use icelab_core::lattice::DEFAULT_ORACLE_CAP;
use icelab_core::{parse_algebra, Algebra, Error, FiniteField, Gf11, Gf13, Gf2, Gf3, Gf5, Gf7, Limits, QuiverSpec};

#[derive(Parser, Debug)]
#[command(name = "icelab", version, about = "Torsion-free classes, ICE-sequences and their bijections")]
struct Cli {
    /// Worker threads (defaults to all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Algebra description file
    algebra: PathBuf,

    /// Override the field characteristic declared in the file
    #[arg(long)]
    field: Option<u32>,

    /// Largest total dimension searched for indecomposables
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    max_bound: u64,

    /// Largest number of matrices or morphisms enumerated in one search
    #[arg(long, default_value_t = 1 << 20)]
    cap: u128,

    /// Largest subset lattice scanned by the torsion-free fixpoint oracle
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: u128,

    /// Summand multiplicity bound for the bounded ICE test
    #[arg(long, default_value_t = DEFAULT_ICE_BOUND, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    ice_bound: usize,

    /// Catalog cache directory (ICELAB_CACHE_DIR also sets it)
    #[arg(long)]
    cache_dir: Option<PathBuf>,

    /// Do not read or write the catalog cache
    #[arg(long)]
    no_cache: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the catalog and print the Hom, Ext and translate tables
    Catalog(Common),
    /// Print the lattice of torsion-free classes
    Torf {
        #[command(flatten)]
        common: Common,
        /// Write the Hasse diagram as Graphviz DOT (`-` for stdout)
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List and count sequences of one kind
    Enumerate {
        #[command(flatten)]
        common: Common,
        /// cogen_preordered, maxjoin_seqs or ice_seqs
        #[arg(long)]
        kind: String,
        #[arg(long)]
        m: usize,
    },
    /// Check the bijections and structural properties
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        m: usize,
    },
    /// Print the τ⁻¹-perpendicular category of a rigid module
    Jperp {
        #[command(flatten)]
        common: Common,
        /// Comma-separated catalog indices or labels
        #[arg(long)]
        module: String,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Catalog(c) => c,
            Command::Torf { common, .. }
            | Command::Enumerate { common, .. }
            | Command::Verify { common, .. }
            | Command::Jperp { common, .. } => common,
        }
    }
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Verification(_) => 1,
            Error::CapExceeded { .. } | Error::CatalogTooLarge(_) => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn cache_dir(common: &Common) -> Option<PathBuf> {
    if common.no_cache {
        return None;
    }
    if let Some(d) = &common.cache_dir {
        return Some(d.clone());
    }
    if let Some(d) = std::env::var_os("ICELAB_CACHE_DIR") {
        return Some(PathBuf::from(d));
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))?;
    Some(base.join("icelab"))
}

fn load_spec(common: &Common) -> Result<QuiverSpec, Failure> {
    let text = std::fs::read_to_string(&common.algebra)
        .map_err(|e| input(format!("{}: {e}", common.algebra.display())))?;
    let mut spec = parse_algebra(&text)?;
    if let Some(p) = common.field {
        spec.characteristic = p;
    }
    Ok(spec)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = load_spec(cli.command.common()).and_then(|spec| match spec.characteristic {
        2 => run::<Gf2>(spec, &cli.command),
        3 => run::<Gf3>(spec, &cli.command),
        5 => run::<Gf5>(spec, &cli.command),
        7 => run::<Gf7>(spec, &cli.command),
        11 => run::<Gf11>(spec, &cli.command),
        13 => run::<Gf13>(spec, &cli.command),
        p => Err(input(format!("characteristic {p} is not built in (supported: 2, 3, 5, 7, 11, 13)"))),
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Returns whether every check passed.
fn run<F: FiniteField + Send + Sync>(spec: QuiverSpec, command: &Command) -> Result<bool, Failure> {
    let common = command.common();
    let algebra = Arc::new(Algebra::<F>::new(spec)?);
    let limits = Limits { enumeration_cap: common.cap, ..Limits::default() };
    let dir = cache_dir(common);
    let (catalog, cached) = load_or_build(algebra, dir.as_deref(), common.max_bound as usize, limits)?;
    eprintln!("catalog: {} indecomposables ({})", catalog.len(), if cached { "cached" } else { "built" });
    let mut out = String::new();
    let ok = match command {
        Command::Catalog(_) => {
            print_catalog(&catalog, &mut out);
            true
        }
        Command::Torf { common, dot } => {
            let ctx = context(catalog, common)?;
            let lab = ctx.catalog.labels();
            out.push_str(&format!("torf {}\n", ctx.lattice.len()));
            for (i, f) in ctx.lattice.members().iter().enumerate() {
                out.push_str(&format!("{i} {}\n", show_set(*f, lab)));
            }
            for (a, b) in ctx.lattice.edges() {
                out.push_str(&format!("cover {a} {b}\n"));
            }
            if let Some(path) = dot {
                let text = ctx.lattice.to_dot(lab);
                if path.as_os_str() == "-" {
                    out.push_str(&text);
                } else {
                    std::fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))?;
                }
            }
            true
        }
        Command::Enumerate { common, kind, m } => {
            let kind: SeqKind = kind.parse()?;
            let ctx = context(catalog, common)?;
            let lab = ctx.catalog.labels();
            let lines: Vec<String> = match kind {
                SeqKind::CogenPreordered => {
                    enumerate_cogen_preordered(&ctx.catalog, *m)?.iter().map(|d| d.display(lab)).collect()
                }
                SeqKind::MaxjoinSeqs => {
                    enumerate_maxjoin(&ctx.lattice, *m)?.iter().map(|j| show_intervals(j, lab)).collect()
                }
                SeqKind::IceSeqs => enumerate_ice(&ctx.catalog, *m)?.iter().map(|s| s.display(lab)).collect(),
            };
            for l in &lines {
                out.push_str(l);
                out.push('\n');
            }
            out.push_str(&format!("count {}\n", lines.len()));
            true
        }
        Command::Verify { common, m } => {
            let ctx = context(catalog, common)?;
            let report = verify_all(&ctx, *m)?;
            out.push_str(&report.to_string());
            report.all_passed()
        }
        Command::Jperp { module, .. } => {
            let x = parse_module(&catalog, module)?;
            let w = jperp(&catalog, x)?;
            out.push_str(&format!("{}\n", show_set(w, catalog.labels())));
            true
        }
    };
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(out.as_bytes()).map_err(|e| input(e.to_string()))?;
    Ok(ok)
}

fn context<F: FiniteField + Send + Sync>(catalog: Catalog<F>, common: &Common) -> Result<Context<F>, Failure> {
    let mut ctx = Context::new(catalog, common.oracle_cap)?;
    ctx.ice_bound = common.ice_bound;
    Ok(ctx)
}

fn parse_module<F: FiniteField>(catalog: &Catalog<F>, text: &str) -> Result<SubcatSet, Failure> {
    let mut s = SubcatSet::EMPTY;
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i = match part.parse::<usize>() {
            Ok(i) if i < catalog.len() => i,
            Ok(i) => return Err(input(format!("index {i} out of range (catalog has {})", catalog.len()))),
            Err(_) => catalog
                .labels()
                .iter()
                .position(|l| l == part)
                .ok_or_else(|| input(format!("no catalog entry labelled `{part}`")))?,
        };
        s = s.with(i);
    }
    Ok(s)
}

fn print_catalog<F: FiniteField>(cat: &Catalog<F>, out: &mut String) {
    let n = cat.len();
    let lab = cat.labels();
    out.push_str(&format!("entries {n} dim_bound {}\n", cat.dim_bound()));
    for i in 0..n {
        let dims: Vec<String> = cat.module(i).dims().iter().map(|d| d.to_string()).collect();
        let mut tags = Vec::new();
        if cat.is_projective(i) {
            tags.push("projective");
        }
        if cat.is_injective(i) {
            tags.push("injective");
        }
        out.push_str(format!("{i} {} ({}) {}\n", lab[i], dims.join(","), tags.join(" ")).trim_end());
        out.push('\n');
    }
    for (name, f) in [("hom", Catalog::<F>::hom as fn(&Catalog<F>, usize, usize) -> usize), ("ext", Catalog::<F>::ext)] {
        out.push_str(&format!("{name}\n"));
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| f(cat, i, j).to_string()).collect();
            out.push_str(&format!("  {:>8} {}\n", lab[i], row.join(" ")));
        }
    }
    out.push_str("tau\n");
    for i in 0..n {
        let t = cat.tau(i).map_or("0", |t| lab[t].as_str());
        let ti = cat.tau_inv(i).map_or("0", |t| lab[t].as_str());
        out.push_str(&format!("  {:>8} tau {t} tau_inv {ti}\n", lab[i]));
    }
}
