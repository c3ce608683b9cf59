//! `parity`: command-line front end for parity compilation.
//!
//! Exit codes: 0 success, 1 negative decision, 2 input error, 3 resource
//! guard or unsupported instance.

mod problem;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use parity_core::compile::{bases, default_basis};
use parity_core::{
    compile, compiled_set, constraint_space_basis, cycle_basis, is_isomorphic, par_equal, preimage,
    rect_compile, Error, Gf2Basis, Graph, Hypergraph, SearchOptions,
};
use serde::{Deserialize, Serialize};

use problem::{load, Input};

#[derive(Parser)]
#[command(name = "parity", version, about = "Parity compilation of optimization problems")]
struct Cli {
    /// Worker threads for parallel stages (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fundamental cycle basis of a graph.
    Cycles { input: PathBuf },
    /// Constraint-space basis of a hypergraph.
    Constraints { input: PathBuf },
    /// Compile with one basis of the constraint space.
    Compile {
        input: PathBuf,
        /// `auto` for the default basis, or an index into the basis enumeration.
        #[arg(long, default_value = "auto")]
        basis: BasisChoice,
    },
    /// Isomorphism classes of compiled hypergraphs over all bases.
    CompiledSet {
        input: PathBuf,
        /// Largest number of bases to compile.
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Whether two graphs have the same compiled set.
    ParEqual {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Graphs that compile to a layout, up to isomorphism.
    Preimage {
        layout: PathBuf,
        #[arg(long, default_value_t = 64)]
        max_labels: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_labelings: usize,
    },
    /// Compile a complete bipartite problem onto a rectangular layout.
    RectCompile {
        problem: PathBuf,
        /// Draw the plaquette grid instead of printing JSON.
        #[arg(long)]
        ascii: bool,
    },
    /// Whether two hypergraphs are isomorphic.
    Iso { a: PathBuf, b: PathBuf },
}

#[derive(Clone, Copy, Debug)]
enum BasisChoice {
    Auto,
    Index(usize),
}

impl std::str::FromStr for BasisChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(BasisChoice::Auto);
        }
        s.parse()
            .map(BasisChoice::Index)
            .map_err(|_| format!("expected `auto` or a basis index, found `{s}`"))
    }
}

/// Output of `cycles` and `constraints`.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisOutput {
    pub dim: usize,
    pub basis: Gf2Basis,
}

/// Output of `compiled-set`: one canonical representative per class.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct CompiledSetOutput {
    pub classes: Vec<Hypergraph>,
    pub exhaustive: bool,
    pub bases_examined: usize,
}

/// Output of `preimage`: one canonical representative per graph class.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct PreimageOutput {
    pub graphs: Vec<Graph>,
    pub labelings_examined: usize,
    pub exhaustive: bool,
}

enum Failure {
    Negative,
    Input(String),
    Guard(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Negative => 1,
            Failure::Input(_) => 2,
            Failure::Guard(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) => Failure::Input(e.to_string()),
            Error::TooLarge { .. } | Error::Unsupported(_) => Failure::Guard(e.to_string()),
        }
    }
}

impl From<problem::LoadError> for Failure {
    fn from(e: problem::LoadError) -> Self {
        Failure::Input(e.0)
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<Input, Failure> {
    let input = load(path)?;
    if let Some(p) = &input.problem {
        for n in &p.notices {
            eprintln!("{}: {n}", path.display());
        }
    }
    Ok(input)
}

fn read_graph(path: &Path) -> Result<(Graph, Input), Failure> {
    let input = read(path)?;
    let g = Graph::try_from(input.hypergraph.clone())
        .map_err(|_| Failure::Input(format!("{}: expected a graph (all edges of size 2)", path.display())))?;
    Ok((g, input))
}

fn emit<T: Serialize>(value: &T) -> Outcome {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Input(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn decision(yes: bool, positive: &str, negative: &str) -> Outcome {
    if yes {
        println!("{positive}");
        Ok(())
    } else {
        println!("{negative}");
        Err(Failure::Negative)
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Cycles { input } => {
            let (g, _) = read_graph(&input)?;
            let basis = cycle_basis(&g);
            emit(&BasisOutput {
                dim: basis.dim(),
                basis,
            })
        }
        Command::Constraints { input } => {
            let h = read(&input)?.hypergraph;
            let basis = constraint_space_basis(&h);
            emit(&BasisOutput {
                dim: basis.dim(),
                basis,
            })
        }
        Command::Compile { input, basis } => {
            let h = read(&input)?.hypergraph;
            let space = default_basis(&h);
            let chosen = match basis {
                BasisChoice::Auto => space,
                BasisChoice::Index(i) => bases(&space)?.nth(i).ok_or_else(|| {
                    Failure::Input(format!("basis index {i} is out of range"))
                })?,
            };
            emit(&compile(&h, &chosen)?)
        }
        Command::CompiledSet { input, cap } => {
            let h = read(&input)?.hypergraph;
            let set = compiled_set(&h, cap)?;
            if !set.exhaustive {
                eprintln!("warning: not every basis was compiled; the class list may be incomplete");
            }
            emit(&CompiledSetOutput {
                classes: set.forms.iter().map(|f| f.to_hypergraph()).collect(),
                exhaustive: set.exhaustive,
                bases_examined: set.bases_examined,
            })
        }
        Command::ParEqual { a, b, cap } => {
            let (ga, _) = read_graph(&a)?;
            let (gb, _) = read_graph(&b)?;
            decision(par_equal(&ga, &gb, cap)?, "equal", "not equal")
        }
        Command::Preimage {
            layout,
            max_labels,
            max_labelings,
        } => {
            let h = read(&layout)?.hypergraph;
            let opts = SearchOptions {
                max_labels,
                max_labelings,
            };
            let result = preimage(&h, &opts)?;
            if !result.exhaustive {
                eprintln!("warning: labeling limit reached; the graph list may be incomplete");
            }
            let graphs = result
                .graphs
                .iter()
                .map(|f| Graph::try_from(f.to_hypergraph()))
                .collect::<Result<Vec<_>, _>>()?;
            let empty = graphs.is_empty();
            emit(&PreimageOutput {
                graphs,
                labelings_examined: result.labelings_examined,
                exhaustive: result.exhaustive,
            })?;
            if empty {
                eprintln!("no graph compiles to this layout");
                return Err(Failure::Negative);
            }
            Ok(())
        }
        Command::RectCompile { problem, ascii } => {
            let (g, input) = read_graph(&problem)?;
            let Some(rc) = rect_compile(&g)? else {
                println!("not complete bipartite");
                return Err(Failure::Negative);
            };
            let json = rc.to_json();
            if ascii {
                let names = input.problem;
                print!(
                    "{}",
                    render::ascii_grid(&json, |v| match names.as_ref().and_then(|p| p.name(v)) {
                        Some(n) => n.to_string(),
                        None => v.to_string(),
                    })
                );
                Ok(())
            } else {
                emit(&json)
            }
        }
        Command::Iso { a, b } => {
            let ha = read(&a)?.hypergraph;
            let hb = read(&b)?.hypergraph;
            decision(is_isomorphic(&ha, &hb)?, "isomorphic", "not isomorphic")
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Negative => {}
                Failure::Input(m) | Failure::Guard(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
