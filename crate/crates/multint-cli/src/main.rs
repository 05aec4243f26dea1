//! `multint`: construct, verify, solve, benchmark and convert multiple-interval instances.
//!
//! Exit codes: 0 success, 1 verification found mismatches, 2 usage or input
//! error, 3 input graph without edges, 4 instance above the oracle limit.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use multint::approx::{approx_clique_t, exact_clique_2track, stab_weight_scan};
use multint::constructions::{
    k5_unit_2circular_track, rep_co_subd2_2circulartrack_with_circumference, Constructor,
};
use multint::corpus::{random_graph, random_representation, random_weights, rng};
use multint::gadgets::{build_q, rep_co_q_unit2interval, rep_co_q_unit3track, QParams};
use multint::graph::{complement, Graph, Weights};
use multint::io::{
    graph_from_edge_list, graph_from_json, graph_to_dot, graph_to_edge_list, graph_to_json,
    rep_from_json, rep_to_json, weights_from_json,
};
use multint::representation::{intersection_graph, verify_representation, RepKind, Representation};
use multint::solvers::{max_weight_clique_bruteforce, CliqueResult, OracleLimit};
use multint::Error;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "multint",
    version,
    about = "Maximum cliques in multiple-interval graphs"
)]
struct Cli {
    /// Largest vertex count handed to the exact oracle (default: $MULTINT_ORACLE_LIMIT or 30).
    #[arg(long, global = true)]
    oracle_limit: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a representation: co-subd4-2i, co-subd2-u3i, co-subd2-3t, co-subd2-u4t,
    /// co-subd2-u2ci, co-subd2-2ct (need GRAPH), q-u2i, q-u3t (use --w/--l), k5-u2ct.
    Construct {
        id: String,
        /// Input graph (JSON or edge list).
        graph: Option<PathBuf>,
        /// Gadget column count.
        #[arg(long, default_value_t = 1)]
        w: usize,
        /// Gadget layer count.
        #[arg(long, default_value_t = 1)]
        l: usize,
        /// Gadget spacing constant N.
        #[arg(long)]
        spacing: Option<i64>,
        /// Circle length for co-subd2-2ct.
        #[arg(long)]
        circumference: Option<i64>,
        /// Also write the graph the representation realizes.
        #[arg(long)]
        target_out: Option<PathBuf>,
        /// Output file (default: stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare a representation with a graph and print a JSON report.
    Verify {
        rep: PathBuf,
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Maximum-weight clique of a graph or representation.
    Clique {
        /// Graph or representation file.
        input: PathBuf,
        /// Weights JSON (default: all ones).
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Algo::Exact)]
        algo: Algo,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Approximation ratios on seeded random t-interval instances, as CSV.
    Bench {
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert a graph between formats.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Seeded random graph on x1..xn, as JSON.
    RandomGraph {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Seeded random representation on x1..xn, as JSON.
    RandomRep {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Exact,
    Scan,
    TApprox,
    #[value(name = "2track-exact")]
    TwoTrackExact,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Exact => "exact",
            Algo::Scan => "scan",
            Algo::TApprox => "t-approx",
            Algo::TwoTrackExact => "2track-exact",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Interval,
    Track,
    CircularInterval,
    CircularTrack,
}

impl From<Kind> for RepKind {
    fn from(k: Kind) -> RepKind {
        match k {
            Kind::Interval => RepKind::Interval,
            Kind::Track => RepKind::Track,
            Kind::CircularInterval => RepKind::CircularInterval,
            Kind::CircularTrack => RepKind::CircularTrack,
        }
    }
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::EmptyEdgeSet => 3,
            Error::OracleSizeExceeded { .. } => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Outcome = std::result::Result<u8, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> std::result::Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// A parsed input file: a graph or a representation.
enum Input {
    Graph(Graph),
    Rep(Representation),
}

fn load(path: &Path) -> std::result::Result<Input, Failure> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let value: Value =
            serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        if value.get("kind").is_some() {
            return Ok(Input::Rep(rep_from_json(&text)?));
        }
        return Ok(Input::Graph(graph_from_json(&text)?));
    }
    Ok(Input::Graph(graph_from_edge_list(&text)?))
}

fn load_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    match load(path)? {
        Input::Graph(g) => Ok(g),
        Input::Rep(_) => Err(usage(format!(
            "{} holds a representation, expected a graph",
            path.display()
        ))),
    }
}

fn construct(
    id: &str,
    graph: Option<&Path>,
    params: QParams,
    circumference: Option<i64>,
) -> std::result::Result<(Representation, Graph), Failure> {
    match id {
        "q-u2i" | "q-u3t" => {
            let rep = if id == "q-u2i" {
                rep_co_q_unit2interval(&params)?
            } else {
                rep_co_q_unit3track(&params)?
            };
            Ok((rep, complement(&build_q(&params)?)))
        }
        "k5-u2ct" => {
            let rep = k5_unit_2circular_track();
            let target = intersection_graph(&rep);
            Ok((rep, target))
        }
        _ => {
            let c = Constructor::from_id(id)
                .ok_or_else(|| usage(format!("unknown constructor {id:?}")))?;
            let path = graph.ok_or_else(|| usage(format!("{id} needs an input graph")))?;
            let g = load_graph(path)?;
            let rep = match (c, circumference) {
                (Constructor::CoSubd2TwoCircularTrack, Some(l)) => {
                    rep_co_subd2_2circulartrack_with_circumference(&g, l)?
                }
                (_, Some(_)) => return Err(usage("--circumference only applies to co-subd2-2ct")),
                (_, None) => c.build(&g)?,
            };
            Ok((rep, c.target(&g)?))
        }
    }
}

fn ratio(opt: u64, got: u64) -> f64 {
    if got == 0 {
        if opt == 0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        opt as f64 / got as f64
    }
}

fn clique(
    input: &Path,
    weights: Option<&Path>,
    algo: Algo,
    limit: OracleLimit,
) -> std::result::Result<Value, Failure> {
    let input = load(input)?;
    let (graph, rep) = match input {
        Input::Graph(g) => (g, None),
        Input::Rep(r) => (intersection_graph(&r), Some(r)),
    };
    let w = match weights {
        Some(p) => weights_from_json(&read(p)?)?,
        None => Weights::uniform(&graph),
    };
    let oracle = || max_weight_clique_bruteforce(&graph, &w, limit);
    let need_rep = || {
        rep.as_ref()
            .ok_or_else(|| usage(format!("--algo {} needs a representation", algo.name())))
    };
    let mut point = None;
    let result: CliqueResult = match algo {
        Algo::Exact => oracle()?,
        Algo::Scan => {
            let s = stab_weight_scan(need_rep()?, &w)?;
            point = s.point;
            s.clique
        }
        Algo::TApprox => approx_clique_t(need_rep()?, &w)?,
        Algo::TwoTrackExact => exact_clique_2track(need_rep()?, &w)?,
    };
    let mut out = json!({
        "members": result.members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "weight": result.weight,
        "algo": algo.name(),
    });
    if let Some(p) = point {
        out["point"] = json!({ "site": p.site, "coord": p.coord });
    }
    if graph.n() <= limit.get() {
        let opt = if algo == Algo::Exact {
            result.weight
        } else {
            oracle()?.weight
        };
        out["ratio"] = json!(ratio(opt, result.weight));
    }
    Ok(out)
}

fn bench(
    t: usize,
    n: usize,
    instances: usize,
    seed: u64,
    limit: OracleLimit,
) -> std::result::Result<String, Failure> {
    if t == 0 {
        return Err(usage("--t must be at least 1"));
    }
    if n > limit.get() {
        return Err(Error::OracleSizeExceeded {
            n,
            limit: limit.get(),
        }
        .into());
    }
    let mut r = rng(seed);
    let mut csv = String::from("instance,opt,scan,t_approx,scan_ratio,t_ratio\n");
    for i in 0..instances {
        let rep = random_representation(&mut r, RepKind::Interval, t, n);
        let w = random_weights(&mut r, rep.labels(), 10);
        let opt = max_weight_clique_bruteforce(&intersection_graph(&rep), &w, limit)?.weight;
        let scan = stab_weight_scan(&rep, &w)?.clique.weight;
        let approx = approx_clique_t(&rep, &w)?.weight;
        let _ = writeln!(
            csv,
            "{i},{opt},{scan},{approx},{:.6},{:.6}",
            ratio(opt, scan),
            ratio(opt, approx)
        );
    }
    Ok(csv)
}

fn run(cli: Cli) -> Outcome {
    let limit = cli
        .oracle_limit
        .map(OracleLimit::new)
        .unwrap_or_else(OracleLimit::from_env);
    match cli.command {
        Command::Construct {
            id,
            graph,
            w,
            l,
            spacing,
            circumference,
            target_out,
            output,
        } => {
            let params = match spacing {
                Some(s) => QParams::new(w, l).with_spacing(s),
                None => QParams::new(w, l),
            };
            let (rep, target) = construct(&id, graph.as_deref(), params, circumference)?;
            if let Some(p) = target_out {
                write(Some(&p), &graph_to_json(&target))?;
            }
            write(output.as_deref(), &rep_to_json(&rep))?;
            Ok(0)
        }
        Command::Verify { rep, graph, output } => {
            let rep = match load(&rep)? {
                Input::Rep(r) => r,
                Input::Graph(_) => return Err(usage("first argument must be a representation")),
            };
            let report = verify_representation(&rep, &load_graph(&graph)?)?;
            let text = serde_json::to_string_pretty(&report).expect("reports always serialize");
            write(output.as_deref(), &text)?;
            Ok(if report.ok { 0 } else { 1 })
        }
        Command::Clique {
            input,
            weights,
            algo,
            output,
        } => {
            let value = clique(&input, weights.as_deref(), algo, limit)?;
            write(
                output.as_deref(),
                &serde_json::to_string_pretty(&value).expect("values always serialize"),
            )?;
            Ok(0)
        }
        Command::Bench {
            t,
            n,
            instances,
            seed,
            output,
        } => {
            write(output.as_deref(), &bench(t, n, instances, seed, limit)?)?;
            Ok(0)
        }
        Command::Convert { input, to, output } => {
            let g = load_graph(&input)?;
            let text = match to {
                Format::Json => graph_to_json(&g),
                Format::Edgelist => graph_to_edge_list(&g),
                Format::Dot => graph_to_dot(&g),
            };
            write(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::RandomGraph { n, p, seed, output } => {
            write(
                output.as_deref(),
                &graph_to_json(&random_graph(&mut rng(seed), n, p)),
            )?;
            Ok(0)
        }
        Command::RandomRep {
            kind,
            t,
            n,
            seed,
            output,
        } => {
            if t == 0 {
                return Err(usage("--t must be at least 1"));
            }
            write(
                output.as_deref(),
                &rep_to_json(&random_representation(&mut rng(seed), kind.into(), t, n)),
            )?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
