//! `expander-ledger`: certificates for graph expansion and code bounds.
//!
//! Every command prints one JSON report (`"schema": "expander-ledger/1"`),
//! re-validates the certificates it embeds and exits nonzero when any check
//! fails. Exit code 2 marks unreadable input.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use expander_ledger::codes::alist::{read_alist, write_alist};
use expander_ledger::codes::ldpc::random_regular_ldpc;
use expander_ledger::codes::{classical_params, css_params, CodeParams, CssCode, ParityCheckMatrix};
use expander_ledger::constructions::{bpt_embed, immerse, lift_immersion};
use expander_ledger::cuts::{build_separator, concentrate, partition_no_expander, partition_theorem, SeparatorOutcome};
use expander_ledger::graph::io::{read_graph, write_edge_list};
use expander_ledger::graph::{h_small_scale, induced_subgraph, is_epsilon_expander_exact};
use expander_ledger::{bounds, generators, json, rational, Error, Graph, Mode, Rational, RunConfig, VertexSet};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "expander-ledger",
    version,
    about = "Expansion certificates, code bounds and local code constructions"
)]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// exact, heuristic or auto.
    #[arg(long, global = true, default_value = "auto", value_parser = parse_mode)]
    mode: Mode,
    /// Largest vertex count handled by exhaustive enumeration.
    #[arg(long, global = true, default_value_t = 22)]
    exact_threshold: usize,
    /// Largest dimension whose codewords are enumerated exactly.
    #[arg(long, global = true, default_value_t = 24)]
    k_max: usize,
    /// Immersion attempts before giving up.
    #[arg(long, global = true, default_value_t = 20)]
    retry_limit: usize,
    /// Report file (JSON commands), output directory (construct-*) or
    /// output file (gen-*). Defaults to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Length, dimension and distance of a code.
    Params(CodeInput),
    /// Low-cost partition of a graph without large expanders.
    Partition {
        graph: PathBuf,
        #[command(flatten)]
        scale: Scale,
        /// Run at scale 3m/2 with the log-scaled level, so that blocks stay
        /// below 3m and any obstruction is concentrated into an expander.
        #[arg(long)]
        theorem: bool,
    },
    /// Concentrate small-scale expansion into an induced expander.
    Concentrate {
        graph: PathBuf,
        #[command(flatten)]
        scale: Scale,
    },
    /// Balanced edge separator or an expander witness.
    Separator {
        graph: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        eps: Rational,
    },
    /// Extract induced expanders from a code's connectivity graph.
    Extract(CodeInput),
    /// Partition a code's connectivity graph and evaluate both bounds.
    Dichotomy {
        #[command(flatten)]
        code: CodeInput,
        #[command(flatten)]
        scale: Scale,
    },
    /// Embed a code into Z^D by braiding repetition-code tracks.
    ConstructBpt {
        code: PathBuf,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Lift a code through an immersion of its Tanner graph into a host.
    ConstructImmersion { code: PathBuf, host: PathBuf },
    /// Random regular LDPC code in alist format.
    GenLdpc {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        col_weight: usize,
        #[arg(long, default_value_t = 6)]
        row_weight: usize,
    },
    /// Graph from a named family as an edge list.
    GenGraph {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Args)]
struct CodeInput {
    /// Classical code, or the X checks of a CSS code with --hz.
    code: PathBuf,
    /// Z checks; makes the input a CSS code.
    #[arg(long)]
    hz: Option<PathBuf>,
    /// Treat the input as a CSS code. Without --hz the same matrix
    /// supplies both the X and the Z checks.
    #[arg(long)]
    quantum: bool,
}

impl CodeInput {
    fn is_quantum(&self) -> bool {
        self.quantum || self.hz.is_some()
    }
}

#[derive(Args)]
struct Scale {
    #[arg(long)]
    m: usize,
    /// Expansion level as p/q.
    #[arg(long, value_parser = parse_rational)]
    eps: Rational,
}

#[derive(Subcommand)]
enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Grid { rows: usize, cols: usize },
    Dumbbell { a: usize, b: usize },
    Gnp { n: usize, p: f64 },
    Regular { n: usize, d: usize },
    Tree { n: usize },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).ok_or_else(|| format!("`{s}` is not a rational p/q"))
}

/// Outcome of a command: the report was produced and every embedded
/// certificate re-validated, or some check failed.
enum Outcome {
    Valid,
    Invalid(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("EXPANDER_LEDGER_THREADS")
        .ok()
        .and_then(|t| t.parse().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(&cli) {
        Ok(Outcome::Valid) => ExitCode::SUCCESS,
        Ok(Outcome::Invalid(why)) => {
            eprintln!("expander-ledger: certificate check failed: {why}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("expander-ledger: {e}");
            match e {
                Error::Parse { .. } | Error::Io(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn config(cli: &Cli) -> expander_ledger::Result<RunConfig> {
    let cfg = RunConfig {
        seed: cli.seed,
        exact_threshold: cli.exact_threshold,
        k_max: cli.k_max,
        retry_limit: cli.retry_limit,
        mode: cli.mode,
        ..RunConfig::default()
    };
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: &Cli) -> expander_ledger::Result<Outcome> {
    let cfg = config(cli)?;
    match &cli.command {
        Command::Params(input) => {
            let (params, _) = load_code(input, &cfg)?;
            emit(cli, "code-params", &params)?;
            Ok(Outcome::Valid)
        }
        Command::Partition { graph, scale, theorem } => {
            let g = read_graph(graph)?;
            let result = if *theorem {
                partition_theorem(&g, scale.m, scale.eps, &cfg)
            } else {
                partition_no_expander(&g, scale.m, scale.eps, &cfg)
            };
            match result {
                Ok(cert) => {
                    emit(cli, "partition-certificate", &cert)?;
                    Ok(checked(cert.validate(&g)))
                }
                Err(Error::ExpanderObstruction { witness, certified }) => {
                    report_obstruction(cli, &g, witness, certified, scale, !*theorem, &cfg)
                }
                Err(e) => Err(e),
            }
        }
        Command::Concentrate { graph, scale } => {
            let g = read_graph(graph)?;
            let (_, trace) = concentrate(&g, scale.m, scale.eps, &cfg)?;
            emit(cli, "concentration-trace", &trace)?;
            Ok(checked(trace.validate(&g, &cfg)))
        }
        Command::Separator { graph, eps } => {
            let g = read_graph(graph)?;
            let outcome = build_separator(&g, *eps, &cfg)?;
            emit(cli, "separator", &outcome)?;
            Ok(checked(match &outcome {
                SeparatorOutcome::Separator(cert) => cert.validate(&g),
                SeparatorOutcome::Expander(w) => w.validate(&g, &cfg),
            }))
        }
        Command::Extract(input) => {
            let (params, g) = load_code(input, &cfg)?;
            let result = bounds::extract_expanders(params, &g, input.is_quantum(), &cfg)?;
            emit(cli, "extraction", &result)?;
            Ok(checked(result.validate(&g, &cfg)))
        }
        Command::Dichotomy { code, scale } => {
            let (params, g) = load_code(code, &cfg)?;
            let report = match bounds::dichotomy(params, &g, scale.m, scale.eps, code.is_quantum(), &cfg) {
                Err(Error::ExpanderObstruction { witness, certified }) => {
                    return report_obstruction(cli, &g, witness, certified, scale, false, &cfg);
                }
                other => other?,
            };
            emit(cli, "dichotomy", &report)?;
            let holds = report
                .theorem
                .as_ref()
                .is_some_and(|t| t.distance_holds || t.rate_holds);
            Ok(if report.verdict == bounds::Verdict::Violation || !holds {
                Outcome::Invalid("neither branch of the bound holds".into())
            } else {
                checked(report.partition.validate(&g).map_err(|e| e.to_string()))
            })
        }
        Command::ConstructBpt { code, dim } => {
            let src = read_alist(code)?;
            let embedding = bpt_embed(&src, *dim, &cfg)?;
            let source = classical_params(&src, &cfg)?;
            let verification = embedding.lifted.verify(&src, source.d * embedding.delta, &cfg)?;
            if let Some(dir) = &cli.out {
                std::fs::create_dir_all(dir)?;
                std::fs::write(dir.join("lifted.alist"), write_alist(&embedding.lifted.code))?;
                std::fs::write(dir.join("coords.csv"), embedding.lifted.coordinates_csv())?;
            }
            let report = report::BptReport::new(&embedding, verification);
            print_json("bpt-construction", &report)?;
            Ok(verdict(report.verification.ok))
        }
        Command::ConstructImmersion { code, host } => {
            let src = read_alist(code)?;
            let host = read_graph(host)?;
            let tanner = src.tanner_graph();
            let imm = immerse(&host, &tanner.graph, &cfg)?;
            let lifted = lift_immersion(&imm, &src, &host)?;
            let source = classical_params(&src, &cfg)?;
            let verification = lifted.verify(&src, source.d, &cfg)?;
            if let Some(dir) = &cli.out {
                std::fs::create_dir_all(dir)?;
                std::fs::write(dir.join("lifted.alist"), write_alist(&lifted.code))?;
                std::fs::write(dir.join("host_map.csv"), lifted.coordinates_csv())?;
                std::fs::write(dir.join("immersion.json"), render("immersion", &imm)?)?;
            }
            let report = report::ImmersionReport::new(&imm, &lifted, verification);
            print_json("immersion-construction", &report)?;
            Ok(verdict(report.verification.ok))
        }
        Command::GenLdpc {
            n,
            col_weight,
            row_weight,
        } => {
            let h = random_regular_ldpc(*n, *col_weight, *row_weight, cli.seed)?;
            write_text(cli.out.as_deref(), &write_alist(&h))?;
            Ok(Outcome::Valid)
        }
        Command::GenGraph { family } => {
            let g = generate(family, cli.seed)?;
            write_text(cli.out.as_deref(), &write_edge_list(&g))?;
            Ok(Outcome::Valid)
        }
    }
}

/// Parameters and connectivity graph of a classical or CSS code.
fn load_code(input: &CodeInput, cfg: &RunConfig) -> expander_ledger::Result<(CodeParams, Graph)> {
    let h = read_alist(&input.code)?;
    if !input.is_quantum() {
        return Ok((classical_params(&h, cfg)?, h.connectivity_graph()));
    }
    let hz: ParityCheckMatrix = match &input.hz {
        Some(path) => read_alist(path)?,
        None => h.clone(),
    };
    let code = CssCode::new(h, hz)?;
    Ok((css_params(&code, cfg)?, code.connectivity_graph()))
}

#[derive(Serialize)]
struct ObstructionReport {
    witness: VertexSet,
    certified: bool,
    /// `direct`: no set of at most m vertices has φ ≤ eps inside the witness.
    /// Otherwise the witness induces an eps-expander on at least m vertices.
    claim: &'static str,
    #[serde(with = "rational::serde_ratio_opt")]
    measured: Option<Rational>,
    verified: Option<bool>,
}

fn report_obstruction(
    cli: &Cli,
    g: &Graph,
    witness: Vec<usize>,
    certified: bool,
    scale: &Scale,
    direct: bool,
    cfg: &RunConfig,
) -> expander_ledger::Result<Outcome> {
    let report = obstruction(g, witness, certified, scale, direct, cfg)?;
    emit(cli, "expander-obstruction", &report)?;
    Ok(if report.verified != Some(false) {
        Outcome::Valid
    } else {
        Outcome::Invalid("obstruction does not re-verify".into())
    })
}

fn obstruction(
    g: &Graph,
    witness: Vec<usize>,
    certified: bool,
    scale: &Scale,
    direct: bool,
    cfg: &RunConfig,
) -> expander_ledger::Result<ObstructionReport> {
    let set = VertexSet::from_ids(g.n(), witness)?;
    let sub = induced_subgraph(g, &set)?;
    let feasible = sub.graph.n() <= cfg.exact_threshold && cfg.mode != Mode::Heuristic;
    let (claim, measured, verified) = if direct {
        let m = scale.m.min(sub.graph.n());
        if feasible && m > 0 {
            let h = h_small_scale(&sub.graph, m, cfg)?.value;
            (
                "no-sparse-small-set",
                Some(h),
                Some(h > scale.eps && set.len() > scale.m),
            )
        } else {
            ("no-sparse-small-set", None, None)
        }
    } else if feasible {
        let check = is_epsilon_expander_exact(&sub.graph, scale.eps, cfg)?;
        (
            "induced-expander",
            check.h_half,
            Some(check.is_expander && set.len() >= scale.m),
        )
    } else {
        ("induced-expander", None, None)
    };
    Ok(ObstructionReport {
        witness: set,
        certified,
        claim,
        measured,
        verified,
    })
}

fn generate(family: &Family, seed: u64) -> expander_ledger::Result<Graph> {
    Ok(match *family {
        Family::Path { n } => generators::path(n),
        Family::Cycle { n } => generators::cycle(n),
        Family::Complete { n } => generators::complete(n),
        Family::Grid { rows, cols } => generators::grid(rows, cols),
        Family::Dumbbell { a, b } => generators::dumbbell(a, b),
        Family::Gnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidConfig(format!("edge probability {p} outside [0, 1]")));
            }
            generators::gnp(n, p, seed)
        }
        Family::Regular { n, d } => generators::random_regular(n, d, seed)?,
        Family::Tree { n } => generators::random_tree(n, seed),
    })
}

fn checked(result: Result<(), String>) -> Outcome {
    match result {
        Ok(()) => Outcome::Valid,
        Err(why) => Outcome::Invalid(why),
    }
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Valid
    } else {
        Outcome::Invalid("lifted code failed verification".into())
    }
}

fn render<T: Serialize>(kind: &str, body: &T) -> expander_ledger::Result<String> {
    json::render(kind, body).map_err(|e| Error::InvalidConfig(format!("cannot encode report: {e}")))
}

fn print_json<T: Serialize>(kind: &str, body: &T) -> expander_ledger::Result<()> {
    print!("{}", render(kind, body)?);
    Ok(())
}

/// Report to `--out` when given, else stdout.
fn emit<T: Serialize>(cli: &Cli, kind: &str, body: &T) -> expander_ledger::Result<()> {
    write_text(cli.out.as_deref(), &render(kind, body)?)
}

fn write_text(path: Option<&Path>, text: &str) -> expander_ledger::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
