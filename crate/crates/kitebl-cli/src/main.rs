//! `kitebl`: build and analyze kite algebras over finite pseudo hoops from
//! the command line.
//!
//! Exit codes: 0 on success, 1 on a semantic failure (axiom violation,
//! rejected input algebra), 2 on parse or usage errors, 3 when an
//! enumeration bound refuses the request.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kitebl_core::format::{self, kite_spec_to_json};
use kitebl_core::{
    build_kite, build_kite_unchecked, catalog, check_basic, check_commutative,
    check_pseudo_bl_with, check_pseudo_hoop_with, check_wajsberg, classify_finite,
    connected_components, enumerate_normal_filters, find_noncommutative_witness, is_good,
    is_maximal_filter, is_pseudo_mv, is_subdirectly_irreducible, quotient_hoop, si_criterion,
    subdirect_representation, Algebra, AxiomReport, Error, FiniteBl, FiniteHoop, KiteSpec,
    DEFAULT_ENUM_BOUND,
};

#[derive(Parser)]
#[command(
    name = "kitebl",
    about = "Build and analyze kite algebras over finite pseudo hoops",
    version
)]
struct Cli {
    /// Suppress reports; exit codes still reflect the outcome.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a hoop or BL file.
    Verify {
        /// Path to a hoop or bl document.
        path: PathBuf,
        /// Object kind; inferred from the file when omitted.
        #[arg(long, value_parser = ["hoop", "bl"])]
        kind: Option<String>,
        /// Report every witness instead of the first one per axiom.
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Build a kite from a hoop file and index maps.
    Kite {
        /// Path to the hoop file (omit when --spec is given).
        hoop: Option<PathBuf>,
        #[command(flatten)]
        maps: MapArgs,
        /// Read hoop and maps from a kite spec file instead.
        #[arg(long, conflicts_with_all = ["hoop", "i_size", "j_size", "lambda", "rho"])]
        spec: Option<PathBuf>,
        /// Write the resulting algebra to this path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Build even if the hoop fails the basicness check.
        #[arg(long)]
        force: bool,
    },
    /// Analyze a BL file: filters, monolith, witnesses.
    Analyze {
        path: PathBuf,
        /// List all normal filters.
        #[arg(long)]
        filters: bool,
        /// Report the least non-trivial normal filter, if any.
        #[arg(long)]
        monolith: bool,
        /// Print a concrete witness: `good` or `comm`.
        #[arg(long, value_parser = ["good", "comm"])]
        witness: Option<String>,
        /// Write the order diagram in DOT format to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Subdirectly decompose the kite over a hoop file and index maps.
    Decompose {
        /// Path to the hoop file.
        hoop: PathBuf,
        #[command(flatten)]
        maps: MapArgs,
        /// Directory for the factor spec files (default: current directory).
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// List catalog hoops or emit one as a file.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Args)]
struct MapArgs {
    /// Size of the index set I.
    #[arg(long = "I", id = "i_size")]
    i_size: Option<usize>,
    /// Size of the index set J.
    #[arg(long = "J", id = "j_size")]
    j_size: Option<usize>,
    /// lambda as comma-separated I-indices, one per element of J.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    lambda: Vec<usize>,
    /// rho as comma-separated I-indices, one per element of J.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    rho: Vec<usize>,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print the known catalog names with their sizes.
    List,
    /// Emit the named hoop (e.g. `godel:3`, `product:(godel:2,godel:2)`).
    Emit {
        name: String,
        /// Write to this path instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Outcome carrying the process exit code.
enum Outcome {
    Pass,
    SemanticFail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let quiet = cli.quiet;
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::from(0),
        Ok(Outcome::SemanticFail) => ExitCode::from(1),
        Err(err) => {
            if !quiet {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::EnumBoundExceeded { .. }) => 3,
        Some(Error::Parse(_)) | Some(Error::Structural(_)) | Some(Error::InvalidSize(_)) => 2,
        Some(_) => 1,
        // io failures and missing arguments sit at the usage level
        None => 2,
    }
}

fn enum_bound() -> anyhow::Result<usize> {
    match std::env::var("KITEBL_ENUM_BOUND") {
        Ok(text) => text.parse().map_err(|_| {
            anyhow::anyhow!(Error::Parse(format!(
                "KITEBL_ENUM_BOUND must be an integer, got {text:?}"
            )))
        }),
        Err(_) => Ok(DEFAULT_ENUM_BOUND),
    }
}

fn read_file(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!(Error::Parse(format!("{}: {e}", path.display()))))
}

fn load_hoop(path: &Path) -> anyhow::Result<FiniteHoop> {
    Ok(format::hoop_from_json(&read_file(path)?)?)
}

fn load_bl(path: &Path) -> anyhow::Result<FiniteBl> {
    Ok(format::bl_from_json(&read_file(path)?)?)
}

fn spec_from_args(maps: &MapArgs) -> anyhow::Result<KiteSpec> {
    let i = maps
        .i_size
        .ok_or_else(|| anyhow::anyhow!(Error::Parse("--I is required".into())))?;
    let j = maps
        .j_size
        .ok_or_else(|| anyhow::anyhow!(Error::Parse("--J is required".into())))?;
    Ok(KiteSpec::new(i, j, maps.lambda.clone(), maps.rho.clone())?)
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let quiet = cli.quiet;
    let say = move |line: String| {
        if !quiet {
            println!("{line}");
        }
    };
    match cli.command {
        Command::Verify {
            path,
            kind,
            all_witnesses,
        } => cmd_verify(&path, kind.as_deref(), all_witnesses, &say),
        Command::Kite {
            hoop,
            maps,
            spec,
            out,
            force,
        } => cmd_kite(
            hoop.as_deref(),
            &maps,
            spec.as_deref(),
            out.as_deref(),
            force,
            &say,
        ),
        Command::Analyze {
            path,
            filters,
            monolith,
            witness,
            dot,
        } => cmd_analyze(
            &path,
            filters,
            monolith,
            witness.as_deref(),
            dot.as_deref(),
            &say,
        ),
        Command::Decompose {
            hoop,
            maps,
            out_dir,
        } => cmd_decompose(&hoop, &maps, out_dir.as_deref(), &say),
        Command::Catalog { action } => cmd_catalog(action, &say),
    }
}

fn print_report(report: &AxiomReport, say: &dyn Fn(String)) {
    for v in &report.violations {
        say(format!("  {}: witness {:?}", v.axiom, v.witness));
    }
}

fn cmd_verify(
    path: &Path,
    kind: Option<&str>,
    all_witnesses: bool,
    say: &dyn Fn(String),
) -> anyhow::Result<Outcome> {
    let text = read_file(path)?;
    let kind = match kind {
        Some(k) => k.to_owned(),
        None => sniff_kind(&text)?,
    };
    let limit = if all_witnesses { 0 } else { 1 };
    match kind.as_str() {
        "hoop" => {
            let hoop = format::hoop_from_json(&text)?;
            say(format!("kind: hoop, size {}", hoop.size()));
            let report = check_pseudo_hoop_with(&hoop, limit)?;
            if !report.passed() {
                say("pseudo hoop: FAIL".into());
                print_report(&report, say);
                return Ok(Outcome::SemanticFail);
            }
            say("pseudo hoop: PASS".into());
            let yesno = |b: bool| if b { "yes" } else { "no" };
            say(format!("basic: {}", yesno(check_basic(&hoop))));
            say(format!("wajsberg: {}", yesno(check_wajsberg(&hoop))));
            say(format!("commutative: {}", yesno(check_commutative(&hoop))));
            Ok(Outcome::Pass)
        }
        "bl" => {
            let bl = format::bl_from_json(&text)?;
            say(format!("kind: bl, size {}", bl.size()));
            let report = check_pseudo_bl_with(&bl, limit)?;
            if report.passed() {
                say("pseudo BL-algebra: PASS".into());
                Ok(Outcome::Pass)
            } else {
                say("pseudo BL-algebra: FAIL".into());
                print_report(&report, say);
                Ok(Outcome::SemanticFail)
            }
        }
        other => Err(anyhow::anyhow!(Error::Parse(format!(
            "cannot verify objects of kind {other:?}"
        )))),
    }
}

fn sniff_kind(text: &str) -> anyhow::Result<String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| anyhow::anyhow!(Error::Parse(e.to_string())))?;
    value
        .get("kind")
        .and_then(|k| k.as_str())
        .map(str::to_owned)
        .ok_or_else(|| anyhow::anyhow!(Error::Parse("document has no \"kind\" field".into())))
}

fn cmd_kite(
    hoop_path: Option<&Path>,
    maps: &MapArgs,
    spec_path: Option<&Path>,
    out: Option<&Path>,
    force: bool,
    say: &dyn Fn(String),
) -> anyhow::Result<Outcome> {
    let (hoop, spec) = match spec_path {
        Some(path) => {
            let doc = format::kite_spec_from_json(&read_file(path)?)?;
            let hoop = match format::hoop_from_ref(&doc.hoop)? {
                Some(h) => h,
                None => {
                    let format::HoopRef::Path(rel) = &doc.hoop else {
                        unreachable!("inline refs resolve to a hoop");
                    };
                    let base = path.parent().unwrap_or(Path::new("."));
                    load_hoop(&base.join(rel))?
                }
            };
            (hoop, doc.spec)
        }
        None => {
            let hoop_path = hoop_path.ok_or_else(|| {
                anyhow::anyhow!(Error::Parse("a hoop file or --spec is required".into()))
            })?;
            (load_hoop(hoop_path)?, spec_from_args(maps)?)
        }
    };

    let kite = if force {
        let built = build_kite_unchecked(&hoop, &spec)?;
        say("warning: hoop checks skipped; the result is unverified".into());
        built
    } else {
        build_kite(&hoop, &spec)?
    };

    let yesno = |b: bool| if b { "yes" } else { "no" };
    say(format!("size: {}", kite.size()));
    say(format!("good: {}", yesno(is_good(&kite).0)));
    say(format!("MV: {}", yesno(is_pseudo_mv(&kite).0)));
    say(format!(
        "components: {}",
        connected_components(&spec).count()
    ));
    say(format!("class: {}", classify_finite(&spec)));
    if hoop.is_trivial() {
        say("si-predicate: yes (degenerate two-element algebra)".into());
    } else {
        let predicate = si_criterion(&hoop, &spec, enum_bound()?)?;
        say(format!("si-predicate: {}", yesno(predicate)));
    }

    if let Some(out) = out {
        std::fs::write(out, format::bl_to_json(&kite))?;
        say(format!("wrote {}", out.display()));
    }
    Ok(Outcome::Pass)
}

fn cmd_analyze(
    path: &Path,
    filters: bool,
    monolith: bool,
    witness: Option<&str>,
    dot: Option<&Path>,
    say: &dyn Fn(String),
) -> anyhow::Result<Outcome> {
    let bl = load_bl(path)?;
    say(format!(
        "algebra: {} ({} elements)",
        bl.name.as_deref().unwrap_or("unnamed"),
        bl.size()
    ));
    let bound = enum_bound()?;
    let upper: Option<BTreeSet<usize>> = bl.upper_block().map(|v| v.into_iter().collect());
    let is_upper_block = |members: &[usize]| {
        matches!(&upper, Some(u) if members.iter().copied().collect::<BTreeSet<_>>() == *u)
    };

    if filters {
        let found = enumerate_normal_filters(&bl, bound)?;
        say(format!("normal filters: {}", found.len()));
        for f in &found {
            let members = f.to_vec();
            let tag = if is_upper_block(&members) { " (A^I)" } else { "" };
            let maximal = f.len() < bl.size() && is_maximal_filter(&bl, f)?;
            say(format!(
                "  {:?} ({} elements){}{}",
                members,
                f.len(),
                tag,
                if maximal { " maximal" } else { "" }
            ));
        }
    }

    if monolith {
        match is_subdirectly_irreducible(&bl, bound)? {
            (true, Some(m)) => {
                let members = m.to_vec();
                let label = if is_upper_block(&members) {
                    "A^I".to_owned()
                } else {
                    format!("{members:?}")
                };
                say(format!("monolith: {label} ({} elements)", m.len()));
            }
            _ => say("monolith: none (not subdirectly irreducible)".into()),
        }
    }

    match witness {
        Some("good") => match is_good(&bl) {
            (true, _) => say("good: yes (no witness)".into()),
            (false, Some(x)) => {
                let (neg, til) = kitebl_core::negations(&bl, x);
                say(format!(
                    "goodness witness: {} ({} vs {})",
                    bl.element_label(x),
                    bl.element_label(bl.ldiv.get(neg, bl.zero)),
                    bl.element_label(bl.rdiv.get(bl.zero, til)),
                ));
            }
            (false, None) => unreachable!("failing goodness always yields a witness"),
        },
        Some("comm") => match find_noncommutative_witness(&bl) {
            None => say("commutative: yes (no witness)".into()),
            Some((x, y)) => say(format!(
                "commutativity witness: ({}, {})",
                bl.element_label(x),
                bl.element_label(y)
            )),
        },
        _ => {}
    }

    if let Some(dot) = dot {
        std::fs::write(dot, order_diagram_dot(&bl))?;
        say(format!("wrote {}", dot.display()));
    }
    Ok(Outcome::Pass)
}

/// Hasse diagram of the lattice order in DOT format.
fn order_diagram_dot(bl: &FiniteBl) -> String {
    let n = bl.size();
    let leq = |a: usize, b: usize| bl.meet.get(a, b) == a;
    let mut out = String::from("digraph order {\n  rankdir=BT;\n");
    for x in 0..n {
        out.push_str(&format!("  n{x} [label=\"{}\"];\n", bl.element_label(x)));
    }
    for a in 0..n {
        for b in 0..n {
            if a == b || !leq(a, b) {
                continue;
            }
            let covered = (0..n).any(|c| c != a && c != b && leq(a, c) && leq(c, b));
            if !covered {
                out.push_str(&format!("  n{a} -> n{b};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

fn cmd_decompose(
    hoop_path: &Path,
    maps: &MapArgs,
    out_dir: Option<&Path>,
    say: &dyn Fn(String),
) -> anyhow::Result<Outcome> {
    let hoop = load_hoop(hoop_path)?;
    let spec = spec_from_args(maps)?;
    let bound = enum_bound()?;
    let factors = subdirect_representation(&hoop, &spec, bound)?;

    let hoop_filters: BTreeSet<Vec<usize>> = factors
        .iter()
        .map(|f| f.hoop_filter.to_vec())
        .collect();
    say(format!(
        "hoop-level factors: {} (filters {:?})",
        hoop_filters.len(),
        hoop_filters
    ));
    say(format!("factors: {}", factors.len()));

    let dir = out_dir.unwrap_or(Path::new("."));
    std::fs::create_dir_all(dir)?;
    let stem = hoop_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "kite".into());
    for (idx, factor) in factors.iter().enumerate() {
        let factor_hoop = quotient_hoop(&hoop, &factor.hoop_filter)?;
        let file = dir.join(format!("{stem}.factor{idx}.json"));
        std::fs::write(&file, kite_spec_to_json(&factor_hoop, &factor.spec))?;
        let si = factor_hoop.is_trivial() || si_criterion(&factor_hoop, &factor.spec, bound)?;
        say(format!(
            "factor {idx}: component {:?}, class {}, si: {}, file {}",
            factor.component,
            classify_finite(&factor.spec),
            if si { "yes" } else { "no" },
            file.display()
        ));
    }
    say("joint map injective: yes".into());
    if factors.len() == 1 && !hoop.is_trivial() && si_criterion(&hoop, &spec, bound)? {
        say("already subdirectly irreducible".into());
    }
    Ok(Outcome::Pass)
}

fn cmd_catalog(action: CatalogAction, say: &dyn Fn(String)) -> anyhow::Result<Outcome> {
    match action {
        CatalogAction::List => {
            for (name, size) in catalog::list() {
                say(format!("{name:<20} {size}"));
            }
            Ok(Outcome::Pass)
        }
        CatalogAction::Emit { name, out } => {
            let hoop = catalog::emit(&name)?;
            let text = format::hoop_to_json(&hoop);
            match out {
                Some(path) => {
                    std::fs::write(&path, text)?;
                    say(format!("wrote {}", path.display()));
                }
                None => print!("{text}"),
            }
            Ok(Outcome::Pass)
        }
    }
}
