use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cuttree::construct::{
    build_laminar_family, build_tree_classical, build_tree_paper, GomoryHuTree,
};
use cuttree::counterexample::{analyze_chain, generate_truncation};
use cuttree::oracle::{check_properties, CheckMode, PairsOracle, TableOracle};
use cuttree::rational::{format_decimal, format_rational, Rational};
use cuttree::verify::{lambda_spectrum, verify_gh_tree, DEFAULT_ENUM_CAP, HARD_ENUM_CAP};
use cuttree::{Error, MaxFlowEngine, WeightedGraph};

/// Gomory-Hu trees and laminar families of optimal cuts, exactly.
#[derive(Parser)]
#[command(name = "cuttree", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Paper,
    Classical,
}

#[derive(Subcommand)]
enum Command {
    /// Build a Gomory-Hu tree and print its edges as `u v lambda`
    Tree {
        graph: String,
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long, value_enum, default_value = "paper")]
        method: Method,
        /// Handle disconnected input by emitting one tree per component
        #[arg(long)]
        per_component: bool,
        /// Render numbers with this many decimal places instead of exactly
        #[arg(long)]
        decimal: Option<usize>,
    },
    /// Print lambda and the smallest and largest optimal u-v cuts
    Mincut {
        graph: String,
        u: usize,
        v: usize,
        #[arg(long)]
        decimal: Option<usize>,
    },
    /// Build a laminar family separating all pairs optimally
    Laminar {
        graph: String,
        #[arg(long)]
        decimal: Option<usize>,
    },
    /// Check a tree file against the graph; exit 1 on any failure
    Verify {
        graph: String,
        tree: String,
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Also check every vertex pair via tree-path minima
        #[arg(long)]
        all_pairs: bool,
    },
    /// Check the submodular-oracle properties of `graph:<file>`,
    /// `pairs:<n>` or `table:<file>`
    CheckProperties {
        oracle_spec: String,
        /// Sample this many random triples instead of exhausting all subsets
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the truncated counterexample graph and its optimal-cut chain
    Counterexample { n: usize },
    /// Print the distinct lambda values of the graph, one per line
    Spectrum {
        graph: String,
        #[arg(long)]
        decimal: Option<usize>,
    },
}

fn fmt(r: &Rational, decimal: Option<usize>) -> String {
    match decimal {
        Some(places) => format_decimal(r, places),
        None => format_rational(r),
    }
}

fn read_file(path: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::input(format!("cannot read `{path}`: {e}")))
}

fn load_graph(path: &str) -> Result<WeightedGraph, Error> {
    WeightedGraph::from_text(&read_file(path)?)
}

fn load_connected_graph(path: &str) -> Result<WeightedGraph, Error> {
    let g = load_graph(path)?;
    if !g.is_connected() {
        return Err(Error::input(format!(
            "graph `{path}` is disconnected; this command needs a connected graph"
        )));
    }
    Ok(g)
}

fn enum_cap() -> Result<usize, Error> {
    match std::env::var("CUTTREE_MAX_ENUM") {
        Ok(s) => {
            let cap: usize = s
                .parse()
                .map_err(|_| Error::input(format!("bad CUTTREE_MAX_ENUM value `{s}`")))?;
            if cap > HARD_ENUM_CAP {
                return Err(Error::input(format!(
                    "CUTTREE_MAX_ENUM={cap} exceeds the hard limit of {HARD_ENUM_CAP}"
                )));
            }
            Ok(cap)
        }
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn build_one_tree(g: &WeightedGraph, root: usize, method: Method) -> Result<GomoryHuTree, Error> {
    match method {
        Method::Paper => {
            let engine = MaxFlowEngine::new(g);
            build_tree_paper(&engine, root)
        }
        Method::Classical => build_tree_classical(g, root),
    }
}

/// Ok(true) → exit 0, Ok(false) → verification failure, exit 1.
fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Tree {
            graph,
            root,
            method,
            per_component,
            decimal,
        } => {
            let g = load_graph(&graph)?;
            if g.is_connected() {
                if root >= g.n() {
                    return Err(Error::input(format!("root {root} out of range")));
                }
                let tree = build_one_tree(&g, root, method)?;
                for (u, v, lam) in tree.edges() {
                    println!("{u} {v} {}", fmt(lam, decimal));
                }
            } else if per_component {
                for (verts, sub) in g.components() {
                    let local_root = verts.iter().position(|&v| v == root).unwrap_or(0);
                    let tree = build_one_tree(&sub, local_root, method)?;
                    for (u, v, lam) in tree.edges() {
                        println!("{} {} {}", verts[*u], verts[*v], fmt(lam, decimal));
                    }
                }
            } else {
                return Err(Error::input(format!(
                    "graph `{graph}` is disconnected; pass --per-component to get a forest"
                )));
            }
            Ok(true)
        }
        Command::Mincut { graph, u, v, decimal } => {
            let g = load_connected_graph(&graph)?;
            let r = cuttree::maxflow::cut_pair(&g, u, v)?;
            println!("lambda {}", fmt(&r.lambda, decimal));
            println!("smallest {}", r.smallest);
            println!("largest {}", r.largest);
            Ok(true)
        }
        Command::Laminar { graph, decimal } => {
            let g = load_connected_graph(&graph)?;
            let engine = MaxFlowEngine::new(&g);
            let family = build_laminar_family(&engine, None)?;
            for c in family.cuts() {
                println!(
                    "{} {} {} {}",
                    fmt(&c.value, decimal),
                    c.witness.0,
                    c.witness.1,
                    c.cut
                );
            }
            Ok(true)
        }
        Command::Verify {
            graph,
            tree,
            root,
            all_pairs,
        } => {
            let g = load_connected_graph(&graph)?;
            let tree = GomoryHuTree::from_text(&read_file(&tree)?, g.n(), root)?;
            let engine = MaxFlowEngine::new(&g);
            let report = verify_gh_tree(&engine, &tree, all_pairs)?;
            print!("{report}");
            Ok(report.passed())
        }
        Command::CheckProperties {
            oracle_spec,
            samples,
            seed,
        } => {
            let cap = enum_cap()?;
            let mode = match samples {
                Some(samples) => CheckMode::Sampled { samples, seed },
                None => CheckMode::Exhaustive,
            };
            let report = match oracle_spec.split_once(':') {
                Some(("graph", path)) => {
                    let g = load_graph(path)?;
                    let b = cuttree::oracle::graph_cut_oracle(&g);
                    check_properties(&b, mode, cap)?
                }
                Some(("pairs", n)) => {
                    let n: usize = n
                        .parse()
                        .map_err(|_| Error::input(format!("bad ground size `{n}`")))?;
                    check_properties(&PairsOracle { n }, mode, cap)?
                }
                Some(("table", path)) => {
                    let b = TableOracle::from_text(&read_file(path)?)?;
                    check_properties(&b, mode, cap)?
                }
                _ => {
                    return Err(Error::input(format!(
                        "unknown oracle spec `{oracle_spec}`; use graph:<file>, \
                         pairs:<n> or table:<file>"
                    )))
                }
            };
            print!("{report}");
            Ok(report.passed())
        }
        Command::Counterexample { n } => {
            let g = generate_truncation(n)?;
            print!("{}", g.to_text());
            println!("# vertex {} is the hub {}", g.n() - 1, g.label(g.n() - 1));
            if n <= 10 {
                print!("{}", analyze_chain(n)?);
            } else {
                println!("# pair analysis skipped for N > 10");
            }
            Ok(true)
        }
        Command::Spectrum { graph, decimal } => {
            let g = load_connected_graph(&graph)?;
            let engine = MaxFlowEngine::new(&g);
            for lam in lambda_spectrum(&engine)? {
                println!("{}", fmt(&lam, decimal));
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ (Error::Input(_) | Error::EnumerationCap { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
