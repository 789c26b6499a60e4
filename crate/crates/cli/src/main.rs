use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use lincolor_core::io::{parse_graph, write_graph, Format};
use lincolor_core::patterns::{
    gen_complete, gen_cycle, gen_path, gen_random, gen_star, gen_strongly_chordal, gen_threshold,
    incomplete_k_sun, k_sun,
};
use lincolor_core::report::{analyze, AnalysisReport, AnalyzeOptions};
use lincolor_core::verify::{parse_suites, run_suite, VerifyConfig};
use lincolor_core::{linear_color, Graph, NeighborhoodDag};

#[derive(Parser)]
#[command(name = "lincolor", version, about = "Linear colorings and related graph classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// Graph file; `-` or omitted reads stdin.
    file: Option<PathBuf>,
    #[arg(long, default_value = "edgelist")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print χ, ω, α, λ, λ(Ḡ), class memberships and colorings as JSON.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Also run the exponential co-linear / linear membership tests.
        #[arg(long)]
        deep: bool,
        /// Also compute λ by exhaustive partition search.
        #[arg(long)]
        brute_lambda: bool,
        /// Ignore the size guards.
        #[arg(long)]
        force: bool,
        /// Human-readable summary instead of JSON.
        #[arg(long)]
        pretty: bool,
        /// Identifier recorded in the report (defaults to the file name).
        #[arg(long)]
        id: Option<String>,
    },
    /// Print an optimal linear coloring.
    Lincolor {
        #[command(flatten)]
        input: Input,
    },
    /// Print the neighborhood-inclusion DAG in DOT.
    Dag {
        #[command(flatten)]
        input: Input,
    },
    /// Run a named verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Generate a graph.
    Gen {
        kind: Kind,
        /// Vertex count (`k` for the sun kinds).
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "edgelist")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cycle,
    Path,
    Complete,
    Star,
    Ksun,
    IncompleteKsun,
    Threshold,
    StronglyChordal,
    Random,
}

fn read_graph(input: &Input) -> Result<(Graph, String)> {
    let (text, id) = match &input.file {
        Some(p) if p.as_os_str() != "-" => (
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
            p.file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.display().to_string()),
        ),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            (s, "stdin".to_string())
        }
    };
    let g = parse_graph(&text, input.format).context("parsing graph")?;
    Ok((g, id))
}

fn pretty(r: &AnalysisReport) -> String {
    let x = &r.numbers;
    let c = &r.classes;
    let mut out = format!(
        "graph {}  n={} m={}\n\
         chi={} omega={} alpha={} lambda={} lambda(complement)={}\n\
         chordal={} co_chordal={} split={} threshold={} quasi_threshold={} strongly_chordal={} p6_free={}\n",
        r.id, r.n, r.m, x.chi, x.omega, x.alpha, x.lambda, x.lambda_complement,
        c.chordal, c.co_chordal, c.split, c.threshold, c.quasi_threshold, c.strongly_chordal, c.p6_free,
    );
    if let Some(b) = x.lambda_brute {
        out += &format!("lambda(partition search)={b}\n");
    }
    if let Some(m) = &r.colinear {
        out += &format!("colinear={} witness={:?}\n", m.holds, m.witness);
    }
    if let Some(m) = &r.linear {
        out += &format!("linear={} witness={:?}\n", m.holds, m.witness);
    }
    out += &format!("linear coloring: {:?}\n", r.coloring.linear);
    out += &format!("complement linear coloring: {:?}\n", r.coloring.complement_linear);
    out
}

fn generate(kind: Kind, n: usize, seed: u64) -> Result<Graph> {
    Ok(match kind {
        Kind::Cycle => gen_cycle(n),
        Kind::Path => gen_path(n),
        Kind::Complete => gen_complete(n),
        Kind::Star => gen_star(n),
        Kind::Ksun => k_sun(n)?,
        Kind::IncompleteKsun => incomplete_k_sun(n)?,
        Kind::Threshold => {
            if n == 0 {
                bail!("threshold graphs need n >= 1");
            }
            gen_threshold(n, seed)
        }
        Kind::StronglyChordal => gen_strongly_chordal(n, seed),
        Kind::Random => gen_random(n, 0.5, seed),
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { input, deep, brute_lambda, force, pretty: human, id } => {
            let (g, file_id) = read_graph(&input)?;
            let report = analyze(&g, id.as_deref().unwrap_or(&file_id), AnalyzeOptions { deep, brute_lambda, force })?;
            if human {
                print!("{}", pretty(&report));
            } else {
                println!("{}", serde_json::to_string_pretty(&report)?);
            }
        }
        Command::Lincolor { input } => {
            let (g, _) = read_graph(&input)?;
            let c = linear_color(&g);
            println!("k {}", c.k());
            for (v, color) in c.colors().iter().enumerate() {
                println!("{v} {color}");
            }
        }
        Command::Dag { input } => {
            let (g, _) = read_graph(&input)?;
            print!("{}", NeighborhoodDag::build(&g).to_dot());
        }
        Command::Verify { suite, max_n, seed, samples } => {
            let suites = match parse_suites(&suite) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let cfg = VerifyConfig { max_n, seed, samples };
            let mut all_ok = true;
            for s in suites {
                let report = run_suite(s, &cfg)?;
                print!("{report}");
                all_ok &= report.ok();
            }
            if !all_ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Gen { kind, n, seed, format } => {
            print!("{}", write_graph(&generate(kind, n, seed)?, format));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
