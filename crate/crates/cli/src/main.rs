//! Batch front-end: instance generation, condition checking, Monte Carlo
//! cover runs, overlap laws, vertex chains and regime scans.
//!
//! Every run embeds its resolved configuration and seed, so identical
//! invocations produce byte-identical output. The `check` subcommand maps
//! its verdict to the exit code: 0 pass, 1 fail, 2 inconclusive; operational
//! failures exit 3.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hypercover::cliques::{self, CliqueParams};
use hypercover::conditions::{self, ConditionReport, InstanceScale, OverlapLaw, Verdict};
use hypercover::cover::{self, CoverParams};
use hypercover::model::parse_rational;
use hypercover::Instance;

const SCHEMA: &str = "v1";

#[derive(Parser)]
#[command(
    name = "hypercover",
    about = "Randomized covers of hypergraph upsets: instances, condition checks, Monte Carlo runs and regime scans",
    long_about = None,
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build or canonicalize an instance file.
    Instance(InstanceArgs),
    /// Evaluate a sufficient condition and exit 0/1/2 for pass/fail/inconclusive.
    Check(CheckArgs),
    /// Monte Carlo coverage and expected-weight report.
    Cover(CoverArgs),
    /// Single-draw construction report (s = 1).
    S1(S1Args),
    /// Exact pairwise overlap law.
    Pairs(PairsArgs),
    /// Exact vertex-union chain of a clique hypergraph.
    Chain(ChainArgs),
    /// Scan the admissible r range across ground scales.
    Regimes(RegimesArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Clique parameters: n_tilde k_tilde ell.
    #[arg(long, num_args = 3, value_names = ["NT", "KT", "ELL"], conflicts_with = "edges")]
    clique: Option<Vec<u64>>,
    /// Weight denominator r, as "num/den" or an integer.
    #[arg(long, requires = "clique")]
    r: Option<String>,
    /// Canonicalize an existing instance file instead.
    #[arg(long)]
    edges: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Theorem {
    One,
    Two,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum LawMode {
    Auto,
    Exact,
    Empirical,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, value_enum)]
    thm: Theorem,
    /// Cover slack constant; accepts floats or products like "2*e", "2^12*e^16".
    #[arg(long = "L", value_parser = parse_l)]
    l: f64,
    /// Sets per union (theorem one).
    #[arg(long, default_value_t = 2)]
    s: u32,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Law estimation mode; auto picks exact enumeration when feasible.
    #[arg(long, value_enum, default_value_t = LawMode::Auto)]
    mode: LawMode,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CoverArgs {
    #[arg(long)]
    instance: PathBuf,
    /// Sets per union; defaults to ceil(ln(n)/k).
    #[arg(long)]
    s: Option<u32>,
    /// Unions per sample; defaults to ceil(p^(-s k) n).
    #[arg(long)]
    t: Option<u64>,
    #[arg(long = "L", value_parser = parse_l)]
    l: f64,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Stream per-trial traces as JSON lines to this file.
    #[arg(long)]
    traces: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct S1Args {
    #[arg(long)]
    instance: PathBuf,
    /// The base c of the hypothesis; defaults to e.
    #[arg(long, value_parser = parse_l)]
    c: Option<f64>,
    #[arg(long = "L", value_parser = parse_l)]
    l: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Bound the minimal-element count by C(d, ceil(r)) instead of
    /// enumerating it.
    #[arg(long)]
    bound_m: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PairsArgs {
    #[arg(long, conflicts_with = "clique")]
    instance: Option<PathBuf>,
    /// Closed-form law for a clique hypergraph: n_tilde k_tilde ell.
    #[arg(long, num_args = 3, value_names = ["NT", "KT", "ELL"])]
    clique: Option<Vec<u64>>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ChainArgs {
    /// Clique parameters: n_tilde k_tilde ell.
    #[arg(long, num_args = 3, value_names = ["NT", "KT", "ELL"], required = true)]
    clique: Vec<u64>,
    #[arg(long)]
    s: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RegimesArgs {
    /// Ground-scale grid "lo:hi[:points]" (log-spaced) or a single value.
    #[arg(long)]
    n_grid: String,
    #[arg(long)]
    kt: u32,
    /// Uniformity of the base hypergraph.
    #[arg(long)]
    l: u32,
    #[arg(long = "L", value_parser = parse_l)]
    big_l: f64,
    #[arg(long, default_value_t = 64)]
    r_points: usize,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
    /// Emit an (r, margin) series for external plotting.
    #[arg(long)]
    emit_plot_data: Option<PathBuf>,
}

/// Parse floats or products of factors `x`, `x^k`, `e`, `e^k`, joined
/// by `*`; "2*e" is 2e, "2^12*e^16" the widest scanner preset.
fn parse_l(text: &str) -> std::result::Result<f64, String> {
    if let Ok(v) = text.parse::<f64>() {
        return Ok(v);
    }
    let mut value = 1.0f64;
    for factor in text.split('*') {
        let factor = factor.trim();
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => {
                let exp: f64 = e
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad exponent in {factor:?}"))?;
                (b.trim(), exp)
            }
            None => (factor, 1.0),
        };
        let base = if base == "e" {
            std::f64::consts::E
        } else {
            base.parse::<f64>()
                .map_err(|_| format!("bad factor {factor:?}"))?
        };
        value *= base.powf(exp);
    }
    Ok(value)
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

fn load_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Instance::from_json_str(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn clique_params(triple: &[u64]) -> Result<CliqueParams> {
    if triple.len() != 3 {
        bail!("--clique needs exactly three values");
    }
    Ok(CliqueParams::new(
        triple[0],
        u32::try_from(triple[1]).context("k_tilde")?,
        u32::try_from(triple[2]).context("ell")?,
    )?)
}

fn cmd_instance(args: &InstanceArgs) -> Result<()> {
    let inst = match (&args.clique, &args.edges) {
        (Some(triple), None) => {
            let params = clique_params(triple)?;
            let r = parse_rational(
                args.r
                    .as_deref()
                    .ok_or_else(|| anyhow!("--clique requires --r"))?,
            )?;
            params.build_instance(r)?
        }
        (None, Some(path)) => load_instance(path)?,
        _ => bail!("provide either --clique NT KT ELL --r R or --edges FILE"),
    };
    write_output(&args.out, &inst.to_json_string())
}

fn law_for_check(inst: &Instance, args: &CheckArgs, s: u32) -> Result<(OverlapLaw, &'static str)> {
    let exact_feasible = s <= 2 && inst.d() <= conditions::PAIR_ENUMERATION_LIMIT;
    let mode = match args.mode {
        LawMode::Auto => {
            if exact_feasible {
                LawMode::Exact
            } else {
                LawMode::Empirical
            }
        }
        m => m,
    };
    match mode {
        LawMode::Exact => {
            if !exact_feasible {
                bail!(
                    "exact law needs s <= 2 and d <= {}",
                    conditions::PAIR_ENUMERATION_LIMIT
                );
            }
            if s == 1 {
                Ok((conditions::sum_overlap_law(inst, 1, 0, 0)?, "exact"))
            } else {
                Ok((conditions::pair_overlap_law(inst)?, "exact"))
            }
        }
        LawMode::Empirical => Ok((
            conditions::sum_overlap_law(inst, s, args.trials, args.seed)?,
            "empirical",
        )),
        LawMode::Auto => unreachable!(),
    }
}

fn cmd_check(args: &CheckArgs) -> Result<Verdict> {
    let inst = load_instance(&args.instance)?;
    let scale = InstanceScale::from_instance(&inst);
    let (report, config): (ConditionReport, Value) = match args.thm {
        Theorem::One => {
            let (law, mode) = law_for_check(&inst, args, args.s)?;
            let report = conditions::check_sum_overlap_condition(&scale, &law, args.s, args.l);
            let config = json!({
                "instance": args.instance.display().to_string(),
                "thm": "one",
                "L": args.l,
                "s": args.s,
                "mode": mode,
                "trials": if mode == "empirical" { Some(args.trials) } else { None },
                "seed": if mode == "empirical" { Some(args.seed) } else { None },
            });
            (report, config)
        }
        Theorem::Two => {
            // The pairwise condition reads the law of Y_2, which is the
            // summed law at s = 2.
            let (law, mode) = law_for_check(&inst, args, 2)?;
            let report = conditions::check_pair_overlap_condition(&scale, &law, args.l);
            let config = json!({
                "instance": args.instance.display().to_string(),
                "thm": "two",
                "L": args.l,
                "mode": mode,
                "trials": if mode == "empirical" { Some(args.trials) } else { None },
                "seed": if mode == "empirical" { Some(args.seed) } else { None },
            });
            (report, config)
        }
    };

    // For the pairwise condition on small instances, attach the explicit
    // two-part cover weights it certifies.
    let explicit = if args.thm == Theorem::Two && inst.r().is_integer() {
        conditions::explicit_cover_weights(&inst, args.l)
            .ok()
            .map(|w| to_value(&w))
    } else {
        None
    };

    let verdict = report.overall;
    let record = json!({
        "v": SCHEMA,
        "command": "check",
        "config": config,
        "report": to_value(&report),
        "explicit_cover": explicit,
    });
    write_output(&args.out, &render(&record))?;
    Ok(verdict)
}

fn cmd_cover(args: &CoverArgs) -> Result<()> {
    let inst = load_instance(&args.instance)?;
    let s = args.s.unwrap_or_else(|| CoverParams::default_s(&inst));
    let t = match args.t {
        Some(t) => t,
        None => CoverParams::default_t(&inst, s)?,
    };
    let params = CoverParams::new(s, t, args.l, args.seed)?;

    let weight = cover::expected_cover_weight(&inst, &params, args.trials)?;
    let coverage = match cover::coverage_probability(&inst, &params, args.trials) {
        Ok(report) => Some(to_value(&report)),
        Err(hypercover::Error::TooLarge { .. }) => None,
        Err(e) => return Err(e.into()),
    };

    if let Some(path) = &args.traces {
        let minimal = if inst.n() <= hypercover::model::ENUMERATION_LIMIT {
            Some(inst.minimal_elements()?.minimal)
        } else {
            None
        };
        let mut lines = String::new();
        for trial in 0..args.trials {
            let sample = cover::sample_cover_at_trial(&inst, &params, trial)?;
            let covered = minimal.as_ref().map(|m| {
                m.sets()
                    .iter()
                    .all(|s| sample.unions.sets().iter().any(|e| e.is_subset_of(s)))
            });
            let line = json!({
                "trial": trial,
                "covered": covered,
                "sizes": sample.sizes,
                "y_sums": sample
                    .y_traces
                    .iter()
                    .map(|t| t.iter().sum::<u32>())
                    .collect::<Vec<_>>(),
            });
            lines.push_str(&serde_json::to_string(&line)?);
            lines.push('\n');
        }
        fs::write(path, lines).with_context(|| format!("writing {}", path.display()))?;
    }

    let record = json!({
        "v": SCHEMA,
        "command": "cover",
        "config": {
            "instance": args.instance.display().to_string(),
            "s": s,
            "t": t,
            "L": args.l,
            "trials": args.trials,
            "seed": args.seed,
        },
        "weight": to_value(&weight),
        "coverage": coverage,
    });
    write_output(&args.out, &render(&record))
}

fn cmd_s1(args: &S1Args) -> Result<()> {
    let inst = load_instance(&args.instance)?;
    let c = args.c.unwrap_or(std::f64::consts::E);
    let exact_m = !args.bound_m && inst.n() <= hypercover::model::ENUMERATION_LIMIT;
    let (report, sample) = cover::single_draw_construction(&inst, c, args.l, args.seed, exact_m)?;
    let sample_summary = sample.map(|s| {
        json!({
            "unions": s.unions.len(),
            "sizes": s.sizes,
        })
    });
    let record = json!({
        "v": SCHEMA,
        "command": "s1",
        "config": {
            "instance": args.instance.display().to_string(),
            "c": c,
            "L": args.l,
            "seed": args.seed,
            "exact_m": exact_m,
        },
        "report": to_value(&report),
        "sample": sample_summary,
    });
    write_output(&args.out, &render(&record))
}

fn cmd_pairs(args: &PairsArgs) -> Result<()> {
    let (law, config) = match (&args.instance, &args.clique) {
        (Some(path), None) => {
            let inst = load_instance(path)?;
            (
                conditions::pair_overlap_law(&inst)?,
                json!({ "instance": path.display().to_string(), "method": "enumeration" }),
            )
        }
        (None, Some(triple)) => {
            let params = clique_params(triple)?;
            (
                cliques::exact_pair_law(&params)?,
                json!({ "clique": triple, "method": "closed-form" }),
            )
        }
        _ => bail!("provide either --instance FILE or --clique NT KT ELL"),
    };
    let record = json!({
        "v": SCHEMA,
        "command": "pairs",
        "config": config,
        "law": to_value(&law),
    });
    write_output(&args.out, &render(&record))
}

fn cmd_chain(args: &ChainArgs) -> Result<()> {
    let params = clique_params(&args.clique)?;
    let chain = cliques::vertex_union_chain(&params, args.s)?;
    let record = json!({
        "v": SCHEMA,
        "command": "chain",
        "config": { "clique": args.clique, "s": args.s },
        "states": to_value(&chain.states),
        "ytilde_laws": to_value(&chain.ytilde_laws),
        "warnings": params.advisory_warnings(),
    });
    write_output(&args.out, &render(&record))
}

/// Log-spaced integer grid from "lo:hi[:points]".
fn parse_grid(text: &str) -> Result<Vec<u64>> {
    let parts: Vec<&str> = text.split(':').collect();
    let parse_val = |s: &str| -> Result<f64> {
        s.parse::<f64>()
            .map_err(|_| anyhow!("bad grid value {s:?}"))
    };
    match parts.as_slice() {
        [single] => Ok(vec![parse_val(single)?.round() as u64]),
        [lo, hi] | [lo, hi, _] => {
            let lo = parse_val(lo)?;
            let hi = parse_val(hi)?;
            if !(lo >= 1.0 && hi >= lo) {
                bail!("grid needs 1 <= lo <= hi");
            }
            let points: usize = if parts.len() == 3 {
                parts[2]
                    .parse()
                    .map_err(|_| anyhow!("bad grid point count"))?
            } else {
                16
            };
            let points = points.max(2);
            let mut grid: Vec<u64> = (0..points)
                .map(|i| {
                    let f = i as f64 / (points - 1) as f64;
                    (lo.ln() + f * (hi.ln() - lo.ln())).exp().round() as u64
                })
                .collect();
            grid.dedup();
            Ok(grid)
        }
        _ => bail!("grid must be LO:HI[:POINTS] or a single value"),
    }
}

fn cmd_regimes(args: &RegimesArgs) -> Result<()> {
    let grid = parse_grid(&args.n_grid)?;
    let scan = cliques::regime_coverage_scan(args.kt, args.l, args.big_l, &grid, args.r_points)?;

    if let Some(path) = &args.csv {
        let mut csv = String::from("n_tilde,r,lemma52_case1,lemma52_case2,lemma53,covered\n");
        for row in &scan.rows {
            for point in &row.grid {
                csv.push_str(&format!(
                    "{},{:.6e},{},{},{},{}\n",
                    row.n_tilde,
                    point.ln_r.exp(),
                    point.lemma52_case1,
                    point.lemma52_case2,
                    point.lemma53,
                    point.covered
                ));
            }
        }
        fs::write(path, csv).with_context(|| format!("writing {}", path.display()))?;
    }

    if let Some(path) = &args.emit_plot_data {
        let mut csv = String::from("n_tilde,r,margin\n");
        for row in &scan.rows {
            for point in &row.grid {
                let mut margin = f64::NEG_INFINITY;
                if row.general_applicable {
                    margin = margin.max(point.ln_r - row.ln_threshold_general);
                }
                if let (true, Some(t)) = (row.succinct_applicable, row.ln_threshold_succinct) {
                    margin = margin.max(point.ln_r - t);
                }
                if row.small_applicable {
                    margin = margin.max(row.ln_bound_small - point.ln_r);
                }
                csv.push_str(&format!(
                    "{},{:.6e},{:.6}\n",
                    row.n_tilde,
                    point.ln_r.exp(),
                    margin
                ));
            }
        }
        fs::write(path, csv).with_context(|| format!("writing {}", path.display()))?;
    }

    let vacuous = scan.rows.iter().all(|r| r.interval_empty);
    let summary = json!({
        "v": SCHEMA,
        "command": "regimes",
        "config": {
            "n_grid": args.n_grid,
            "kt": args.kt,
            "l": args.l,
            "L": args.big_l,
            "r_points": args.r_points,
        },
        "vacuous": vacuous,
        "first_gap_free_n": scan.first_gap_free_n,
        "first_meet_n": scan.first_meet_n,
        "rows": scan
            .rows
            .iter()
            .map(|r| {
                json!({
                    "n_tilde": r.n_tilde,
                    "interval_empty": r.interval_empty,
                    "gap": r.gap,
                    "first_gap_ln_r": r.first_gap_ln_r,
                    "regimes_meet": r.regimes_meet,
                    "ln_r_lo": r.ln_r_lo,
                    "ln_r_hi": r.ln_r_hi,
                    "ln_threshold_general": r.ln_threshold_general,
                    "general_applicable": r.general_applicable,
                    "ln_threshold_succinct": r.ln_threshold_succinct,
                    "succinct_applicable": r.succinct_applicable,
                    "ln_bound_small": r.ln_bound_small,
                    "small_applicable": r.small_applicable,
                    "branch_general_holds": r.branch_general_holds,
                    "branch_succinct_holds": r.branch_succinct_holds,
                })
            })
            .collect::<Vec<_>>(),
    });
    write_output(&args.json, &render(&summary))
}

fn run(cli: &Cli) -> Result<Verdict> {
    match &cli.command {
        Command::Instance(args) => cmd_instance(args).map(|()| Verdict::Pass),
        Command::Check(args) => cmd_check(args),
        Command::Cover(args) => cmd_cover(args).map(|()| Verdict::Pass),
        Command::S1(args) => cmd_s1(args).map(|()| Verdict::Pass),
        Command::Pairs(args) => cmd_pairs(args).map(|()| Verdict::Pass),
        Command::Chain(args) => cmd_chain(args).map(|()| Verdict::Pass),
        Command::Regimes(args) => cmd_regimes(args).map(|()| Verdict::Pass),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Verdict::Pass) => ExitCode::from(0),
        Ok(Verdict::Fail) => ExitCode::from(1),
        Ok(Verdict::Inconclusive) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
