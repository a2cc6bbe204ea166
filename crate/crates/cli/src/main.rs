//! `orbit-atlas` command-line front end.
//!
//! Exit codes: 0 on success or a passing check, 1 when a check finds a
//! counterexample, 2 on invalid input.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbit_atlas::export::{
    dot_label, export_dot, export_json, grassmannian_poset, nilpotent_poset, Metadata, Setting,
};
use orbit_atlas::linalg::parse_rational;
use orbit_atlas::realize::slice_generators_symbolic;
use orbit_atlas::realize::slice_matrix_symbolic;
use orbit_atlas::render::{render_ascii, render_svg};
use orbit_atlas::verify::{self, Check};
use orbit_atlas::*;
use serde_json::json;

const ENUMERATION_LIMIT: usize = 10;
const VERIFY_LIMIT: usize = 6;
const COMPARE_LIMIT: usize = 6;

#[derive(Parser)]
#[command(name = "orbit-atlas", version, about = "Borel orbits on square-zero matrices and pairs of Grassmannians")]
struct Cli {
    /// Lift the default size limits.
    #[arg(long, global = true)]
    unsafe_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the involutions of {1..n} with orbit dimension and arc count.
    Involutions {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Table)]
        format: ListFormat,
    },
    /// Emit the Hasse diagram of an orbit poset.
    Poset {
        #[arg(long, value_enum)]
        setting: SettingArg,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = PosetFormat::Dot)]
        out: PosetFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run an exhaustive or randomized verification suite.
    Verify {
        #[arg(long, value_enum)]
        check: CheckArg,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, env = "ORBIT_ATLAS_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Points of the slice attached to (lambda, mu) and their orbits.
    Slice {
        #[command(flatten)]
        shape: Shape,
        /// Consistent involution as arcs, e.g. "1-7,5-9".
        #[arg(long)]
        w: Option<String>,
        /// zero, all-zero, generic, random, or an assignment "1-3=2,1-6=-1/2".
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
        #[arg(long, env = "ORBIT_ATLAS_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        emit: Emit,
    },
    /// Draw an arc diagram.
    Render {
        /// Arcs, e.g. "1-7,2-3,5-8"; empty for the identity.
        #[arg(long, default_value = "")]
        w: String,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = DrawFormat::Ascii)]
        format: DrawFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare the closure order on involutions with the Bruhat order.
    CompareOrders {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

#[derive(Args)]
struct Shape {
    #[arg(long)]
    n: usize,
    /// Parts of lambda, e.g. "5,4,2,1".
    #[arg(long)]
    lambda: Option<String>,
    /// Parts of mu.
    #[arg(long)]
    mu: Option<String>,
    /// Number of rows of lambda; defaults to the number of listed parts.
    #[arg(long)]
    k: Option<usize>,
    /// Number of rows of mu; defaults to the number of listed parts.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SettingArg {
    Nilpotent,
    Grassmannian,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    MainTheorem,
    RankOracle,
    Slice,
    Covers,
    OrderAxioms,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Subspaces,
    Matrix,
    Identify,
}

#[derive(Clone, Copy, ValueEnum)]
enum DrawFormat {
    Ascii,
    Svg,
}

enum Outcome {
    Ok(String),
    Counterexample(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Counterexample(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn within(n: usize, limit: usize, unsafe_large: bool) -> Result<()> {
    if n > limit && !unsafe_large {
        return Err(Error::Capacity {
            requested: n,
            limit,
        });
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome> {
    let big = cli.unsafe_large;
    match cli.command {
        Command::Involutions { n, format } => {
            within(n, ENUMERATION_LIMIT, big)?;
            involutions(n, format).map(Outcome::Ok)
        }
        Command::Poset {
            setting,
            shape,
            out,
            output,
        } => {
            within(shape.n, ENUMERATION_LIMIT, big)?;
            let text = poset(setting, &shape, out)?;
            write_or_return(text, output)
        }
        Command::Verify {
            check,
            max_n,
            seed,
            trials,
        } => {
            within(max_n, VERIFY_LIMIT, big)?;
            let report = verify::run(check.into(), max_n, seed, trials)?;
            let text = report.to_string();
            Ok(if report.passed() {
                Outcome::Ok(text)
            } else {
                Outcome::Counterexample(text)
            })
        }
        Command::Slice {
            shape,
            w,
            params,
            seed,
            emit,
        } => {
            within(shape.n, ENUMERATION_LIMIT, big)?;
            slice(&shape, w.as_deref(), params.as_deref(), seed, emit).map(Outcome::Ok)
        }
        Command::Render {
            w,
            shape,
            format,
            output,
        } => {
            let w = parse_involution(&w, shape.n)?;
            let coloring = match shape.partitions()? {
                Some((l, m)) => Some(Coloring::from_partitions(&l, &m)?),
                None => None,
            };
            if let Some(c) = &coloring {
                ConsistentInvolution::new(w.clone(), c.clone())?;
            }
            let text = match format {
                DrawFormat::Ascii => render_ascii(&w, coloring.as_ref())?,
                DrawFormat::Svg => render_svg(&w, coloring.as_ref())?,
            };
            write_or_return(text, output)
        }
        Command::CompareOrders { max_n } => {
            within(max_n, COMPARE_LIMIT, big)?;
            compare(max_n).map(Outcome::Ok)
        }
    }
}

fn write_or_return(text: String, output: Option<PathBuf>) -> Result<Outcome> {
    match output {
        None => Ok(Outcome::Ok(text)),
        Some(path) => {
            std::fs::write(&path, text)
                .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome::Ok(String::new()))
        }
    }
}

impl From<CheckArg> for Check {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::MainTheorem => Check::MainTheorem,
            CheckArg::RankOracle => Check::RankOracle,
            CheckArg::Slice => Check::Slice,
            CheckArg::Covers => Check::Covers,
            CheckArg::OrderAxioms => Check::OrderAxioms,
        }
    }
}

/// Parses "i-j,k-l" into an involution of {1..n}; the empty string is Id.
fn parse_involution(spec: &str, n: usize) -> Result<Involution> {
    let mut arcs = Vec::new();
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        arcs.push(parse_pair(tok)?);
    }
    for &(i, j) in &arcs {
        if i >= j {
            return Err(Error::Input(format!("arc {i}-{j} must have left < right")));
        }
    }
    Involution::from_arcs(n, &arcs)
}

fn parse_pair(tok: &str) -> Result<(usize, usize)> {
    let bad = || Error::Input(format!("expected i-j, got {tok:?}"));
    let (a, b) = tok.split_once('-').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn parse_parts(spec: &str) -> Result<Vec<usize>> {
    spec.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Input(format!("bad partition part {t:?}")))
        })
        .collect()
}

impl Shape {
    fn partitions(&self) -> Result<Option<(Partition, Partition)>> {
        match (&self.lambda, &self.mu) {
            (None, None) => Ok(None),
            (Some(l), Some(m)) => {
                let lp = parse_parts(l)?;
                let mp = parse_parts(m)?;
                let lambda = Partition::new(&lp, self.k.unwrap_or(lp.len()), self.n)?;
                let mu = Partition::new(&mp, self.m.unwrap_or(mp.len()), self.n)?;
                Ok(Some((lambda, mu)))
            }
            _ => Err(Error::Input("--lambda and --mu must be given together".into())),
        }
    }

    fn require_partitions(&self) -> Result<(Partition, Partition)> {
        self.partitions()?
            .ok_or_else(|| Error::Input("--lambda and --mu are required".into()))
    }
}

fn involutions(n: usize, format: ListFormat) -> Result<String> {
    let all = enumerate_involutions(n)?;
    Ok(match format {
        ListFormat::Table => {
            let width = all
                .iter()
                .map(|w| w.to_string().len())
                .max()
                .unwrap_or(1)
                .max(1);
            let mut out = format!("{:<width$}  arcs  dim\n", "w");
            for w in &all {
                out.push_str(&format!(
                    "{:<width$}  {:>4}  {:>3}\n",
                    w.to_string(),
                    w.arc_count(),
                    orbit_dimension(w)
                ));
            }
            out
        }
        ListFormat::Json => {
            let rows: Vec<_> = all
                .iter()
                .map(|w| {
                    json!({
                        "w": w.to_string(),
                        "pairs": w.arcs().iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
                        "arcs": w.arc_count(),
                        "dim": orbit_dimension(w),
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&json!({ "n": n, "involutions": rows }))
                .expect("listing serializes");
            s.push('\n');
            s
        }
    })
}

fn poset(setting: SettingArg, shape: &Shape, out: PosetFormat) -> Result<String> {
    Ok(match setting {
        SettingArg::Nilpotent => {
            if shape.lambda.is_some() || shape.mu.is_some() {
                return Err(Error::Input(
                    "--lambda/--mu belong to the grassmannian setting".into(),
                ));
            }
            let p = nilpotent_poset(shape.n)?;
            match out {
                PosetFormat::Dot => export_dot(&p, |w| dot_label(w, Setting::Nilpotent)),
                PosetFormat::Json => export_json(&p, &Metadata::nilpotent(shape.n)),
            }
        }
        SettingArg::Grassmannian => {
            let (lambda, mu) = shape.require_partitions()?;
            let p = grassmannian_poset(&lambda, &mu)?;
            match out {
                PosetFormat::Dot => export_dot(&p, |w| dot_label(w, Setting::Grassmannian)),
                PosetFormat::Json => export_json(&p, &Metadata::grassmannian(&lambda, &mu)),
            }
        }
    })
}

fn parse_params(spec: &str, coloring: &Coloring, seed: u64) -> Result<SlicePoint> {
    match spec.trim() {
        "zero" | "all-zero" => Ok(SlicePoint::zero(coloring)),
        "generic" => Ok(SlicePoint::generic(coloring)),
        "random" => Ok(SlicePoint::random(coloring, seed)),
        assignment => {
            let mut given = BTreeMap::new();
            for tok in assignment.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let (pair, value) = tok
                    .split_once('=')
                    .ok_or_else(|| Error::Input(format!("expected i-j=value, got {tok:?}")))?;
                if given.insert(parse_pair(pair)?, parse_rational(value.trim())?).is_some() {
                    return Err(Error::Input(format!("parameter {pair} given twice")));
                }
            }
            SlicePoint::with_defaults(coloring.clone(), &given)
        }
    }
}

fn subspace_block(name: &str, s: &Subspace) -> String {
    format!(
        "{name} = {}\n{name} basis (columns):\n{}",
        s.describe(),
        s.basis().to_text()
    )
}

fn slice(
    shape: &Shape,
    w: Option<&str>,
    params: Option<&str>,
    seed: u64,
    emit: Emit,
) -> Result<String> {
    let (lambda, mu) = shape.require_partitions()?;
    let coloring = Coloring::from_partitions(&lambda, &mu)?;
    let cw = match w {
        Some(spec) => Some(ConsistentInvolution::new(
            parse_involution(spec, shape.n)?,
            coloring.clone(),
        )?),
        None => None,
    };
    if cw.is_some() && params.is_some() {
        return Err(Error::Input("--w and --params are mutually exclusive".into()));
    }
    let point = match (&cw, params) {
        (Some(cw), _) => Some(SlicePoint::arc_indicator(cw)),
        (None, Some(spec)) => Some(parse_params(spec, &coloring, seed)?),
        (None, None) => None,
    };
    Ok(match emit {
        Emit::Subspaces => match (&cw, &point) {
            (Some(cw), _) => {
                let (u, wsp) = canonical_pair(cw, &lambda, &mu)?;
                subspace_block("U", &u) + &subspace_block("W", &wsp)
            }
            (None, Some(p)) => {
                let (u, wsp) = slice_subspaces(p, &lambda, &mu)?;
                subspace_block("U", &u) + &subspace_block("W", &wsp)
            }
            (None, None) => {
                let gens = slice_generators_symbolic(&lambda, &mu)?;
                let wsp = Subspace::coordinate(shape.n, &mu.vertical_steps())?;
                format!("U(t) = <{}>\n{}", gens.join(", "), subspace_block("W", &wsp))
            }
        },
        Emit::Matrix => match &point {
            Some(p) => slice_embed(p).to_text(),
            None => slice_matrix_symbolic(&coloring),
        },
        Emit::Identify => {
            let p = point.unwrap_or_else(|| SlicePoint::generic(&coloring));
            let v = identify_orbit(&slice_embed(&p))?;
            let cv = ConsistentInvolution::new(v.clone(), coloring)?;
            format!("{v}\ncodim {}\n", codimension_d(&cv))
        }
    })
}

fn compare(max_n: usize) -> Result<String> {
    let mut out = String::new();
    for n in 1..=max_n {
        let c = compare_orders(n)?;
        if c.coincide() {
            out.push_str(&format!("n={n}: coincide\n"));
            continue;
        }
        out.push_str(&format!(
            "n={n}: differ ({} Bruhat-only, {} closure-only)\n",
            c.bruhat_only.len(),
            c.melnikov_only.len()
        ));
        for (v, w) in &c.bruhat_only {
            out.push_str(&format!("  bruhat-only: {v} <= {w}\n"));
        }
        for (v, w) in &c.melnikov_only {
            out.push_str(&format!("  closure-only: {v} <= {w}\n"));
        }
    }
    Ok(out)
}
