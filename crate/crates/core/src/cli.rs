//! Command-line front end. Exit codes: 0 success, 1 other failure, 2 parse
//! or usage error, 3 infeasible or trivial-no outcome, 4 internal assertion.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use crate::clique_kernel::{lift_clique, reduce_clique, CliqueKernelConfig};
use crate::gen::{generate, Family};
use crate::graph::{EdgeSet, Graph};
use crate::hardness::{
    build_split_gadget, chordal_solution_to_set_cover, extract_colorful_edges,
    extract_dense_subgraph, set_cover_to_chordal, HardnessError,
};
use crate::io::{
    parse_colored_graph, parse_edge_set, parse_gadget_spec, parse_graph, parse_setcover, read_file,
    read_kernel_dir, serialize_edge_set, serialize_gadget_spec, serialize_graph, write_file,
    write_kernel_dir, GadgetSpec, IoError, KernelArtifact, ParseError,
};
use crate::kernel::{KernelError, KernelKind};
use crate::objective::{objective, Objective, TargetClass};
use crate::oracles::brute_force_contraction;
use crate::split_kernel::{lift_split, reduce_split, SplitKernelConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_ASSERTION: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "contraction",
    version,
    about = "Lossy kernels and reductions for graph contraction problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Problem {
    Clique,
    Split,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Class {
    Clique,
    Split,
    Chordal,
}

impl From<Class> for TargetClass {
    fn from(c: Class) -> Self {
        match c {
            Class::Clique => TargetClass::Complete,
            Class::Split => TargetClass::Split,
            Class::Chordal => TargetClass::Chordal,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Source {
    Setcover,
    Dks,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Random,
    PerturbedClique,
    PerturbedSplit,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce a graph to a lossy kernel and write it to a directory.
    Kernelize {
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        epsilon: f64,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        /// Run marking even when the graph is already below the size bound.
        #[arg(long)]
        no_size_guard: bool,
    },
    /// Lift a kernel solution back to the original graph.
    Lift {
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        kernel_dir: PathBuf,
        #[arg(long)]
        sol: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Find a contraction set. Exact search is always used for chordal.
    Solve {
        #[arg(long, value_enum)]
        problem: Class,
        #[arg(long)]
        k: usize,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        exact: bool,
        /// Accuracy of the kernel used without `--exact`.
        #[arg(long, default_value_t = 1.0)]
        epsilon: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a contraction set.
    Check {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        sol: PathBuf,
        /// Budget; defaults to the size of the solution.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Build a hardness instance.
    Reduce {
        #[arg(long, value_enum)]
        from: Source,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        delta: Option<f64>,
        /// Where to write the gadget description (default: OUT.spec).
        #[arg(long)]
        spec_out: Option<PathBuf>,
    },
    /// Recover a dense colorful subgraph from a gadget solution.
    Extract {
        #[arg(long)]
        gadget: PathBuf,
        #[arg(long)]
        sol: PathBuf,
        /// Skip the solution-size precondition (output bounds still apply).
        #[arg(long)]
        no_budget_check: bool,
    },
    /// Generate a seeded instance.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map a chordal-contraction solution back to a set cover.
    Cover {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        sol: PathBuf,
    },
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> i32 {
    for cause in e.chain() {
        if cause.is::<ParseError>() {
            return EXIT_PARSE;
        }
        if let Some(io) = cause.downcast_ref::<IoError>() {
            match io {
                IoError::Parse(_) | IoError::Instance(_) => return EXIT_PARSE,
                IoError::Kernel(_) | IoError::File { .. } => return EXIT_OTHER,
            }
        }
        if let Some(h) = cause.downcast_ref::<HardnessError>() {
            return match h {
                HardnessError::BoundViolated(_) => EXIT_ASSERTION,
                HardnessError::NotASolution | HardnessError::BudgetExceeded { .. } => {
                    EXIT_INFEASIBLE
                }
                _ => EXIT_OTHER,
            };
        }
        if let Some(KernelError::LiftingFailed(_)) = cause.downcast_ref::<KernelError>() {
            return EXIT_ASSERTION;
        }
    }
    EXIT_OTHER
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = read_file(path)?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_edges(path: &Path) -> Result<EdgeSet> {
    let text = read_file(path)?;
    parse_edge_set(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_edges(f: &EdgeSet) {
    let list: Vec<String> = f.iter().map(|e| e.to_string()).collect();
    println!("edges {}", list.join(" "));
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Kernelize {
            problem,
            k,
            epsilon,
            input,
            out_dir,
            no_size_guard,
        } => {
            let g = load_graph(&input)?;
            let art = match problem {
                Problem::Clique => {
                    let cfg = CliqueKernelConfig::new(k, epsilon)?.with_size_guard(!no_size_guard);
                    let r = reduce_clique(&g, &cfg);
                    KernelArtifact::Clique(cfg, r)
                }
                Problem::Split => {
                    let cfg = SplitKernelConfig::new(k, epsilon)?.with_size_guard(!no_size_guard);
                    let r = reduce_split(&g, &cfg);
                    KernelArtifact::Split(cfg, r)
                }
            };
            write_kernel_dir(&out_dir, &art, g.n())?;
            println!("kind {}", art.kind());
            println!("kernel_n {}", art.graph().n());
            println!("kernel_m {}", art.graph().m());
            println!("k_out {}", art.k_out());
            Ok(match art.kind() {
                KernelKind::TrivialNo | KernelKind::Infeasible => EXIT_INFEASIBLE,
                _ => EXIT_OK,
            })
        }
        Command::Lift {
            problem,
            input,
            kernel_dir,
            sol,
            out,
        } => {
            let g = load_graph(&input)?;
            let (art, original_n) = read_kernel_dir(&kernel_dir)?;
            if original_n != g.n() {
                bail!(
                    "kernel was built for a graph on {original_n} vertices, input has {}",
                    g.n()
                );
            }
            let f_prime = load_edges(&sol)?;
            let (f, cls, k) = match (problem, &art) {
                (Problem::Clique, KernelArtifact::Clique(cfg, r)) => (
                    lift_clique(&g, cfg, r, &f_prime)?,
                    TargetClass::Complete,
                    cfg.k,
                ),
                (Problem::Split, KernelArtifact::Split(cfg, r)) => {
                    (lift_split(&g, cfg, r, &f_prime)?, TargetClass::Split, cfg.k)
                }
                _ => bail!("kernel directory holds a different problem"),
            };
            write_file(&out, &serialize_edge_set(&f))?;
            let value = objective(&g, k, &f, cls)?;
            println!("size {}", f.len());
            println!("value {value}");
            Ok(if value.is_finite() {
                EXIT_OK
            } else {
                EXIT_INFEASIBLE
            })
        }
        Command::Solve {
            problem,
            k,
            input,
            exact,
            epsilon,
            out,
        } => {
            let g = load_graph(&input)?;
            let cls: TargetClass = problem.into();
            let found = if exact || cls == TargetClass::Chordal {
                brute_force_contraction(&g, k, cls)?.map(|(f, _)| f)
            } else {
                Some(solve_via_kernel(&g, k, epsilon, cls)?)
            };
            match found {
                Some(f) => {
                    let value = objective(&g, k, &f, cls)?;
                    println!("value {value}");
                    print_edges(&f);
                    if let Some(path) = out {
                        write_file(&path, &serialize_edge_set(&f))?;
                    }
                    Ok(if value.finite().is_some_and(|v| v <= k) {
                        EXIT_OK
                    } else {
                        EXIT_INFEASIBLE
                    })
                }
                None => {
                    println!("value {}", k + 1);
                    println!("no solution with at most {k} edges");
                    Ok(EXIT_INFEASIBLE)
                }
            }
        }
        Command::Check {
            class,
            input,
            sol,
            k,
        } => {
            let g = load_graph(&input)?;
            let f = load_edges(&sol)?;
            let k = k.unwrap_or(f.len());
            let value = objective(&g, k, &f, class.into())?;
            println!("value {value}");
            Ok(match value {
                Objective::Finite(_) => EXIT_OK,
                Objective::Infinite => EXIT_INFEASIBLE,
            })
        }
        Command::Reduce {
            from,
            input,
            out,
            k,
            delta,
            spec_out,
        } => match from {
            Source::Setcover => {
                let sc = parse_setcover(&read_file(&input)?)?;
                let ci = set_cover_to_chordal(&sc)?;
                let text = format!(
                    "# chordal contraction instance, budget {}\n{}",
                    ci.k,
                    serialize_graph(&ci.graph)
                );
                write_file(&out, &text)?;
                println!("n {}", ci.graph.n());
                println!("m {}", ci.graph.m());
                println!("k {}", ci.k);
                Ok(EXIT_OK)
            }
            Source::Dks => {
                let k = k.context("--k is required with --from dks")?;
                let delta = delta.context("--delta is required with --from dks")?;
                let host = parse_colored_graph(&read_file(&input)?)?;
                let gi = build_split_gadget(&host, k, delta)?;
                let spec = GadgetSpec { host, k, delta };
                let spec_path = spec_out.unwrap_or_else(|| {
                    let mut p = out.clone().into_os_string();
                    p.push(".spec");
                    p.into()
                });
                write_file(&out, &serialize_graph(&gi.graph))?;
                write_file(&spec_path, &serialize_gadget_spec(&spec))?;
                println!("n {}", gi.graph.n());
                println!("m {}", gi.graph.m());
                println!("k_prime {}", gi.k_prime);
                println!("rho {}", gi.params.rho);
                println!("k_circ {}", gi.params.k_circ);
                println!("spec {}", spec_path.display());
                Ok(EXIT_OK)
            }
        },
        Command::Extract {
            gadget,
            sol,
            no_budget_check,
        } => {
            let spec = parse_gadget_spec(&read_file(&gadget)?)?;
            let gi = build_split_gadget(&spec.host, spec.k, spec.delta)?;
            let f = load_edges(&sol)?;
            let x = if no_budget_check {
                extract_colorful_edges(&gi, &f)?
            } else {
                extract_dense_subgraph(&gi, &f)?
            };
            let verts: Vec<String> = x.vertices.iter().map(|v| v.to_string()).collect();
            println!("vertices {}", verts.join(" "));
            print_edges(&x.edges.iter().copied().collect());
            Ok(EXIT_OK)
        }
        Command::Gen {
            family,
            n,
            seed,
            out,
        } => {
            let family = match family {
                FamilyArg::Random => Family::Random,
                FamilyArg::PerturbedClique => Family::PerturbedClique,
                FamilyArg::PerturbedSplit => Family::PerturbedSplit,
            };
            let text = serialize_graph(&generate(family, n, seed));
            match out {
                Some(path) => write_file(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(EXIT_OK)
        }
        Command::Cover { input, sol } => {
            let sc = parse_setcover(&read_file(&input)?)?;
            let ci = set_cover_to_chordal(&sc)?;
            let f = load_edges(&sol)?;
            let chosen = chordal_solution_to_set_cover(&ci, &f);
            let list: Vec<String> = chosen.iter().map(|j| j.to_string()).collect();
            println!("sets {}", list.join(" "));
            Ok(if sc.covers(&chosen) {
                EXIT_OK
            } else {
                EXIT_INFEASIBLE
            })
        }
    }
}

/// Kernelize, solve the kernel exactly, and lift.
fn solve_via_kernel(g: &Graph, k: usize, epsilon: f64, cls: TargetClass) -> Result<EdgeSet> {
    Ok(match cls {
        TargetClass::Complete => {
            let cfg = CliqueKernelConfig::new(k, epsilon)?;
            let r = reduce_clique(g, &cfg);
            let f = brute_force_contraction(&r.graph, r.k_out, cls)?
                .map_or_else(EdgeSet::new, |(f, _)| f);
            lift_clique(g, &cfg, &r, &f)?
        }
        TargetClass::Split => {
            let cfg = SplitKernelConfig::new(k, epsilon)?;
            let r = reduce_split(g, &cfg);
            let f = brute_force_contraction(&r.graph, r.k_out, cls)?
                .map_or_else(EdgeSet::new, |(f, _)| f);
            lift_split(g, &cfg, &r, &f)?
        }
        TargetClass::Chordal => unreachable!("chordal is always solved exactly"),
    })
}
