use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use digraph_adjoints::chromatic::{chromatic_number, ChromaticOutcome};
use digraph_adjoints::constructions::{
    arc_graph_iter, b_graph, categorical_product, circular_complete, complete, interleaved_adjoint,
    inverse_interleaved_adjoint, path, path_family, tournament, tree_dual, OrientedPath,
    DEFAULT_PRODUCT_THRESHOLD,
};
use digraph_adjoints::hom::{hom_exists, HomOutcome, DEFAULT_BUDGET};
use digraph_adjoints::lab::generate::all_digraphs_up_to;
use digraph_adjoints::lab::suite::{self, Profile, CRITERIA};
use digraph_adjoints::lab::{self, LabConfig, Verdict, VerifyReport, WitnessKind, DEFAULT_SEED};
use digraph_adjoints::{Digraph, Error};

/// `println!` that ends the process quietly once stdout is closed.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

const EXIT_FAIL: u8 = 1;
const EXIT_INDETERMINATE: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "adjoints",
    version,
    about = "Digraph adjoints, homomorphisms and claim verifiers"
)]
struct Cli {
    /// Machine-readable JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a digraph (or a path family) and print it.
    Construct(ConstructArgs),
    /// Decide whether a homomorphism exists.
    Hom {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exact chromatic number.
    Chi {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 16)]
        limit: usize,
    },
    /// Check one claim on given or generated instances.
    Verify(VerifyArgs),
    /// Search for a path of given algebraic length that maps into every
    /// digraph of chromatic number at least 4.
    FindSteepPath {
        #[arg(long)]
        ell: usize,
    },
    /// Minimum chromatic number of the duals of a path family.
    HFunction {
        #[arg(long)]
        k: usize,
    },
    /// Run the acceptance suite.
    VerifyAll {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        threads: Option<usize>,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        criteria: Vec<u8>,
        /// Keep wall-clock times in JSON output (makes it run-dependent).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum Family {
    Tournament,
    Path,
    Complete,
    Circular,
    BGraph,
    Iota,
    IotaStar,
    ArcGraph,
    Dual,
    Product,
    PathFamily,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    input: Option<PathBuf>,
    /// Oriented path as a `+`/`-` string, for `dual`.
    #[arg(long)]
    path: Option<String>,
    #[arg(long, num_args = 1..)]
    factors: Vec<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_PRODUCT_THRESHOLD)]
    threshold: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// In DOT output, draw symmetric arc pairs as one undirected edge.
    #[arg(long)]
    collapse_symmetric: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    Gencol,
    GencolLowerTight,
    Adjunction,
    Finobs,
    Minty,
    DualityTree,
    Inadprod,
    Mulpath,
    Hompath,
    YzBothWays,
    Chick,
    Chi3k,
    SteepPath,
    SteepConsequence,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    claim: Claim,
    /// The digraph `G` (for `gencol-lower-tight`, the digraph `H`).
    #[arg(long)]
    input: Option<PathBuf>,
    /// The second digraph `H` of `adjunction`.
    #[arg(long)]
    target: Option<PathBuf>,
    /// Tree for `duality-tree`, as a file.
    #[arg(long)]
    tree: Option<PathBuf>,
    /// Oriented path as a `+`/`-` string: the tree of `duality-tree` or the
    /// path of `steep-consequence`.
    #[arg(long)]
    path: Option<String>,
    #[arg(long, num_args = 1..)]
    factors: Vec<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    /// Random instances to generate when no input is given.
    #[arg(long)]
    samples: Option<usize>,
    /// Use every digraph with at most three vertices as the sample.
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Keep wall-clock times in JSON output (makes it run-dependent).
    #[arg(long)]
    timing: bool,
}

/// Errors split by exit code.
enum Failure {
    Usage(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_guard() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("indeterminate: {msg}");
            ExitCode::from(EXIT_INDETERMINATE)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Construct(args) => construct(args),
        Command::Hom {
            source,
            target,
            budget,
        } => {
            let (g, h) = (read_graph(&source)?, read_graph(&target)?);
            let outcome = hom_exists(&g, &h, budget);
            if json {
                say!("{}", outcome.to_json(Some(&h)));
            } else {
                match &outcome {
                    HomOutcome::Found(w) => say!("{}", join(&w.map)),
                    HomOutcome::NotFound => say!("NONE"),
                    HomOutcome::BudgetExceeded => say!("BUDGET EXCEEDED"),
                }
            }
            Ok(match outcome {
                HomOutcome::BudgetExceeded => EXIT_INDETERMINATE,
                _ => 0,
            })
        }
        Command::Chi { input, limit } => {
            let g = read_graph(&input)?;
            match chromatic_number(&g, limit)? {
                ChromaticOutcome::Exact(r) => {
                    if json {
                        say!("{}", serde_json::to_string(&r).expect("serializable"));
                    } else {
                        say!("{}", r.chi);
                    }
                    Ok(0)
                }
                ChromaticOutcome::ExceedsLimit { lower } => {
                    if json {
                        say!("{}", json!({ "exceeds_limit": limit, "lower": lower }));
                    } else {
                        say!("> {limit}");
                    }
                    Ok(EXIT_INDETERMINATE)
                }
            }
        }
        Command::Verify(args) => verify(args, json),
        Command::FindSteepPath { ell } => {
            let cfg = LabConfig::default();
            let (mut report, found) = lab::verify_steep_path(ell, &cfg)?;
            if json {
                report.clear_timing();
                let steep =
                    found.map(|q| serde_json::from_str::<Value>(&q.to_json()).expect("json"));
                say!("{}", json!({ "steep": steep, "report": report }));
            } else {
                if let Some(q) = &found {
                    say!("{} ({} arcs)", q.path, q.path.arc_count());
                }
                print_report(&report);
            }
            Ok(verdict_code(report.verdict))
        }
        Command::HFunction { k } => {
            let table = lab::h_function(k, &LabConfig::default())?;
            if json {
                say!("{}", serde_json::to_string(&table).expect("serializable"));
            } else {
                say!("{:<14} {:>6} {:>4}  certified", "path", "|D(P)|", "chi");
                for r in &table.rows {
                    let cert = r.maps_to_k_chi && r.refused_below;
                    say!(
                        "{:<14} {:>6} {:>4}  {}",
                        r.path,
                        r.dual_vertices,
                        r.chi,
                        cert
                    );
                }
                say!("h({k}) = {} at {}", table.value, table.argmin);
            }
            let certified = table
                .rows
                .iter()
                .all(|r| r.maps_to_k_chi && r.refused_below);
            Ok(if certified { 0 } else { EXIT_FAIL })
        }
        Command::VerifyAll {
            profile,
            seed,
            threads,
            criteria,
            timing,
        } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            let ids: Vec<u8> = if criteria.is_empty() {
                CRITERIA.iter().map(|c| c.id).collect()
            } else {
                criteria
            };
            let cfg = LabConfig::default();
            let threads = threads
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let mut outcomes = suite::run_suite_with_threads(&ids, profile, seed, &cfg, threads)?;
            if json {
                if !timing {
                    outcomes.iter_mut().for_each(|o| o.clear_timing());
                }
                say!(
                    "{}",
                    serde_json::to_string(&outcomes).expect("serializable")
                );
            } else {
                for o in &outcomes {
                    say!("{}", o.line());
                }
                let passed = outcomes
                    .iter()
                    .filter(|o| o.verdict == Verdict::Pass)
                    .count();
                say!("{passed}/{} criteria passed", outcomes.len());
            }
            let worst = outcomes
                .iter()
                .map(|o| o.verdict)
                .fold(Verdict::Pass, Verdict::and);
            Ok(verdict_code(worst))
        }
    }
}

fn verdict_code(v: Verdict) -> u8 {
    v.exit_code() as u8
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn read_graph(p: &Path) -> Result<Digraph, Failure> {
    let text = fs::read_to_string(p)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?;
    Ok(Digraph::from_json(&text)?)
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing required flag --{flag}")))
}

fn parse_path(s: &str) -> Result<OrientedPath, Failure> {
    Ok(s.parse::<OrientedPath>()?)
}

fn construct(a: ConstructArgs) -> Outcome {
    let graph = match a.family {
        Family::Tournament => tournament(need(a.n, "n")?),
        Family::Path => path(need(a.n, "n")?),
        Family::Complete => complete(need(a.n, "n")?),
        Family::Circular => circular_complete(need(a.n, "n")?, need(a.k, "k")?)?,
        Family::BGraph => b_graph(need(a.n, "n")?, need(a.k, "k")?)?,
        Family::Iota => {
            interleaved_adjoint(&read_graph(&need(a.input, "input")?)?, need(a.k, "k")?)?
        }
        Family::IotaStar => {
            inverse_interleaved_adjoint(&read_graph(&need(a.input, "input")?)?, need(a.k, "k")?)?
        }
        Family::ArcGraph => {
            arc_graph_iter(&read_graph(&need(a.input, "input")?)?, a.k.unwrap_or(1))?
        }
        Family::Dual => {
            let t = match (&a.input, &a.path) {
                (Some(f), None) => read_graph(f)?,
                (None, Some(p)) => parse_path(p)?.as_digraph(),
                _ => {
                    return Err(Failure::Usage(
                        "dual needs exactly one of --input, --path".into(),
                    ))
                }
            };
            tree_dual(&t)?
        }
        Family::Product => {
            if a.factors.is_empty() {
                return Err(Failure::Usage("product needs --factors".into()));
            }
            let factors = a
                .factors
                .iter()
                .map(|f| read_graph(f))
                .collect::<Result<Vec<_>, _>>()?;
            categorical_product(factors, a.threshold)?
                .explicit()?
                .clone()
        }
        Family::PathFamily => {
            let fam = path_family(need(a.n, "n")?, need(a.k, "k")?)?;
            let strings: Vec<String> = fam.members.iter().map(ToString::to_string).collect();
            let text = if matches!(a.format, Format::Json) {
                serde_json::to_string(&strings).expect("serializable")
            } else {
                strings.join("\n")
            };
            emit(&text, a.output.as_deref())?;
            return Ok(0);
        }
    };
    let text = match a.format {
        Format::Json => graph.to_json(),
        Format::Dot => graph.to_dot(a.collapse_symmetric),
    };
    emit(text.trim_end(), a.output.as_deref())?;
    Ok(0)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, format!("{text}\n"))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            say!("{text}");
            Ok(())
        }
    }
}

fn verify(a: VerifyArgs, json: bool) -> Outcome {
    let cfg = LabConfig {
        hom_budget: a.budget,
        ..LabConfig::default()
    };
    let input = a.input.as_deref().map(read_graph).transpose()?;
    let seed = a.seed;
    let samples = |default: usize| a.samples.unwrap_or(default);
    let mut report = match a.claim {
        Claim::Gencol => match &input {
            Some(g) => lab::verify_gencol(g, need(a.k, "k")?, &cfg)?,
            None => suite::sweep_gencol(samples(100), a.k.unwrap_or(2), seed, &cfg)?,
        },
        Claim::GencolLowerTight => {
            let h = input.unwrap_or_else(|| complete(4));
            lab::verify_gencol_lower_tight(&h, a.k.unwrap_or(2), &cfg)?
        }
        Claim::Adjunction => match (&input, &a.target) {
            (Some(g), Some(t)) => {
                lab::verify_adjunction(g, &read_graph(t)?, need(a.k, "k")?, &cfg)?
            }
            (None, None) => suite::sweep_adjunction(samples(200), seed, &cfg)?,
            _ => {
                return Err(Failure::Usage(
                    "adjunction needs both --input and --target, or neither".into(),
                ))
            }
        },
        Claim::Finobs => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            match &input {
                Some(g) => lab::verify_finobs(g, n, k, &cfg)?,
                None if a.exhaustive => suite::exhaustive_finobs(3, n, k, &cfg)?,
                None => suite::sweep_finobs(samples(100), n, k, seed, &cfg)?,
            }
        }
        Claim::Minty => {
            let g = need(input, "input")?;
            lab::verify_minty(&g, need(a.c, "c")?, need(a.k, "k")?, &cfg)?
        }
        Claim::DualityTree => {
            let t = match (&a.tree, &a.path) {
                (Some(f), None) => read_graph(f)?,
                (None, Some(p)) => parse_path(p)?.as_digraph(),
                _ => {
                    return Err(Failure::Usage(
                        "duality-tree needs exactly one of --tree, --path".into(),
                    ))
                }
            };
            match input {
                Some(g) => lab::verify_duality_tree(&t, &[g], &cfg)?,
                None if a.exhaustive => {
                    let all: Vec<Digraph> = all_digraphs_up_to(3, true).collect();
                    lab::verify_duality_tree(&t, &all, &cfg)?
                }
                None => suite::sweep_duality_tree(&t, samples(50), seed, &cfg)?,
            }
        }
        Claim::Inadprod => lab::verify_inadprod(need(a.n, "n")?, need(a.k, "k")?, &cfg)?,
        Claim::Mulpath => {
            if a.factors.is_empty() {
                suite::sweep_mulpath(samples(50), seed, &cfg)?
            } else {
                let factors = a
                    .factors
                    .iter()
                    .map(|f| read_graph(f))
                    .collect::<Result<Vec<_>, _>>()?;
                lab::verify_mulpath(&factors, need(a.n, "n")?, &cfg)?
            }
        }
        Claim::Hompath => match &input {
            Some(g) => lab::verify_hompath(g, need(a.n, "n")?, &cfg)?,
            None => suite::sweep_hompath(samples(50), seed, &cfg)?,
        },
        Claim::YzBothWays => lab::verify_yz(need(a.n, "n")?, need(a.k, "k")?, &cfg)?,
        Claim::Chick => lab::verify_chick(need(a.n, "n")?, need(a.k, "k")?, &cfg)?,
        Claim::Chi3k => lab::verify_chi3k(need(a.k, "k")?, &cfg)?,
        Claim::SteepPath => lab::verify_steep_path(need(a.ell, "ell")?, &cfg)?.0,
        Claim::SteepConsequence => {
            let q = parse_path(&need(a.path, "path")?)?;
            let graphs = match input {
                Some(g) => vec![g],
                None => suite::random_four_chromatic(samples(20), seed, &cfg),
            };
            lab::verify_steep_consequence(&q, &graphs, &cfg)?
        }
    };
    if json {
        if !a.timing {
            report.clear_timing();
        }
        say!("{}", report.to_json());
    } else {
        print_report(&report);
    }
    Ok(verdict_code(report.verdict))
}

fn print_report(r: &VerifyReport) {
    say!("{}: {} ({} ms)", r.claim, r.verdict, r.timing_ms);
    for (k, v) in &r.params {
        say!("  param {k} = {v}");
    }
    for w in &r.witnesses {
        let body = match &w.kind {
            WitnessKind::Fact { value } => value.to_string(),
            WitnessKind::Note { text } => text.clone(),
            WitnessKind::Path { path } => path.clone(),
            WitnessKind::Hom { map, .. } => format!("map {}", join(map)),
            WitnessKind::Colouring { colours, .. } => format!("colours {}", join(colours)),
            WitnessKind::Digraph { graph } => graph.to_string(),
            WitnessKind::Report { report } => {
                format!("{} instance: {}", report.claim, report.verdict)
            }
        };
        say!("  {}: {}", w.label, body);
    }
}
