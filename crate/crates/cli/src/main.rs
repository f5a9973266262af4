//! `hbound`: command-line access to the hereditary edge-bound toolkit.
//!
//! Every subcommand prints one JSON document on stdout. Exit codes: 0 on
//! success, 1 when a checked property fails, 2 on usage or input errors,
//! 3 when a size, iteration or overflow limit is hit.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use hbound_core::hereditary::{check_property_with_cap, DEFAULT_EXHAUSTIVE_CAP};
use hbound_core::spectral::{DEFAULT_MAX_ITER, DEFAULT_TOL};
use hbound_core::{
    bound_t0, bound_t2, build_extremal, degree_power_sum, derive_constants, exhaustive_search, parse_graph,
    plan_extremal, spectral_radius, verify_plan, walk_counts, Error, Graph, GraphFormat, GraphText, Params, Rational,
};

#[derive(Parser)]
#[command(name = "hbound", version, about = "Hereditarily bounded graphs: certify, construct, measure")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct ParamArgs {
    /// Density t, as a fraction ("3/2") or decimal ("1.5").
    #[arg(long, allow_hyphen_values = true)]
    t: Rational,
    /// Offset r, as a fraction or decimal.
    #[arg(long, allow_hyphen_values = true)]
    r: Rational,
}

impl ParamArgs {
    fn params(&self) -> Result<Params> {
        Ok(Params::new(self.t, self.r)?)
    }
}

#[derive(clap::Args)]
struct InputArg {
    /// Graph file in graph6 or edge-list form; "-" reads stdin.
    #[arg(long, default_value = "-")]
    input: PathBuf,
}

impl InputArg {
    fn graph(&self) -> Result<Graph> {
        let bytes = if self.input.as_os_str() == "-" {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).context("reading stdin")?;
            buf
        } else {
            std::fs::read(&self.input).with_context(|| format!("reading {}", self.input.display()))?
        };
        Ok(parse_graph(&bytes)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Which {
    T0,
    T2,
}

#[derive(Subcommand)]
enum Command {
    /// Derived constants for (t, r).
    Constants {
        #[command(flatten)]
        p: ParamArgs,
    },
    /// Plan and build the extremal graph of order n.
    Construct {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long)]
        n: usize,
        /// Output format; graph6 when the order allows it, else edgelist.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Decide the edge bound for a graph (exit 1 when violated).
    Check {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        input: InputArg,
        /// Largest order handed to subset enumeration.
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        cap: usize,
    },
    /// Spectral radius and Perron vector.
    Rho {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
        max_iter: usize,
    },
    /// Exact walk totals W_1 .. W_lmax.
    Walks {
        #[arg(long)]
        lmax: usize,
        #[command(flatten)]
        input: InputArg,
    },
    /// Sum of p-th powers of the degrees.
    Fp {
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        input: InputArg,
    },
    /// Spectral radius upper bound at order n.
    Bound {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Exhaustive search over all graphs of order n (n <= 8).
    Search {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Build the extremal graph and check it (exit 1 when a check fails).
    Verify {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long)]
        n: usize,
    },
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Constants { p } => emit(&derive_constants(&p.params()?)?)?,
        Command::Construct { p, n, format } => {
            let plan = plan_extremal(n, &p.params()?)?;
            let g = build_extremal(&plan);
            let format = match format {
                Some(Format::Graph6) => GraphFormat::Graph6,
                Some(Format::Edgelist) => GraphFormat::Edgelist,
                None if n <= hbound_core::graph::DENSE_LIMIT => GraphFormat::Graph6,
                None => GraphFormat::Edgelist,
            };
            let text = GraphText::encode(&g, format)?;
            let data = String::from_utf8(text.payload).expect("graph text is ASCII");
            emit(&json!({
                "plan": plan,
                "order": g.order(),
                "edges": g.edge_count(),
                "graph": { "format": format, "data": data },
            }))?;
        }
        Command::Check { p, input, cap } => {
            let verdict = check_property_with_cap(&input.graph()?, &p.params()?, cap)?;
            emit(&verdict)?;
            if !verdict.holds() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Rho { input, tol, max_iter } => emit(&spectral_radius(&input.graph()?, tol, max_iter)?)?,
        Command::Walks { lmax, input } => emit(&json!({ "walks": walk_counts(&input.graph()?, lmax)? }))?,
        Command::Fp { p, input } => emit(&json!({ "p": p, "value": degree_power_sum(&input.graph()?, p)? }))?,
        Command::Bound { p, n, which } => {
            let params = p.params()?;
            let value = match which {
                Which::T0 => bound_t0(n, &params)?,
                Which::T2 => bound_t2(n, &params)?,
            };
            emit(&json!({ "which": which, "n": n, "value": value }))?;
        }
        Command::Search { p, n, jobs } => emit(&exhaustive_search(n, &p.params()?, jobs)?)?,
        Command::Verify { p, n } => {
            let report = verify_plan(&plan_extremal(n, &p.params()?)?);
            emit(&report)?;
            if !report.all_passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Limit { .. } | Error::Overflow { .. } | Error::Convergence { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("hbound: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
