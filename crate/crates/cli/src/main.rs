//! `clonal`: axiom checking, element arithmetic, normal forms and
//! Stein-Farley cube enumeration for cloning systems, from the shell.
//!
//! Every subcommand is a thin wrapper over `clonal-core`; no arithmetic
//! lives here. Exit codes: 0 ok/pass, 1 axiom failure or inequality,
//! 2 parse error, 3 internal invariant breach. Identical invocations with
//! identical seeds produce byte-identical output.

mod expr;
mod selector;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use clonal_core::harness::{check_all, Budget, ModePolicy};
use clonal_core::stein::{cubes_from, vertex_from_json, vertex_to_json};
use clonal_core::system::{CloningSystem, ElemCodec};
use clonal_core::thompson::{
    element_to_json, element_to_text, normal_form, project_to_v, triple_from_json,
};
use selector::{with_instance, Selector};

#[derive(Parser)]
#[command(name = "clonal", version, about = "Cloning systems, Thompson-like groups, and their axioms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputMode {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckPolicy {
    /// Exhaustive where the budget allows, sampled otherwise.
    Auto,
    /// Enumerate every rank; rejected for non-enumerable instances.
    Exhaustive,
    /// Sample every rank.
    Sampled,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full axiom harness on one instance
    CheckAxioms {
        #[arg(long, value_parser = Selector::parse)]
        instance: Selector,
        /// Largest rank to check
        #[arg(long = "max-n", default_value_t = 4)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = CheckPolicy::Auto)]
        mode: CheckPolicy,
        /// Total sampled cases per check when not exhaustive
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        /// Iteration-count threshold for exhaustive ranks
        #[arg(long = "max-exhaustive", default_value_t = 1_000_000)]
        max_exhaustive: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputMode::Human)]
        output: OutputMode,
    },
    /// Evaluate an element expression: JSON triples with `*`, `inv`, and
    /// an optional top-level `=` comparison
    Eval {
        #[arg(long, value_parser = Selector::parse)]
        instance: Selector,
        expr: String,
        #[arg(long, value_enum, default_value_t = OutputMode::Human)]
        output: OutputMode,
    },
    /// Evaluate an expression and project the result to Thompson's group V
    Project {
        #[arg(long, value_parser = Selector::parse)]
        instance: Selector,
        expr: String,
        #[arg(long, value_enum, default_value_t = OutputMode::Human)]
        output: OutputMode,
    },
    /// Reduce a raw triple to its canonical representative
    NormalForm {
        #[arg(long, value_parser = Selector::parse)]
        instance: Selector,
        triple: String,
        #[arg(long, value_enum, default_value_t = OutputMode::Human)]
        output: OutputMode,
    },
    /// Enumerate the k-cubes hanging below a vertex
    SteinCubes {
        #[arg(long, value_parser = Selector::parse)]
        instance: Selector,
        vertex: String,
        #[arg(long, default_value_t = 1)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = OutputMode::Human)]
        output: OutputMode,
    },
    /// Print the grammar and format reference
    Formats,
}

/// Mapped to the documented exit codes in `main`.
enum Failure {
    /// Malformed input of any kind: exit 2.
    Parse(String),
    /// Checks ran and something is false: exit 1.
    Unequal,
}

impl From<clonal_core::InvalidValue> for Failure {
    fn from(e: clonal_core::InvalidValue) -> Failure {
        Failure::Parse(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // a panic below is a breached library invariant, not a user error
    let outcome = std::panic::catch_unwind(|| run(cli.command));
    match outcome {
        Ok(Ok(code)) => code,
        Ok(Err(Failure::Parse(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Unequal)) => ExitCode::from(1),
        Err(_) => {
            eprintln!("error: internal invariant breach");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::CheckAxioms { instance, max_n, mode, samples, max_exhaustive, seed, output } => {
            check_axioms(instance, max_n, mode, samples, max_exhaustive, seed, output)
        }
        Command::Eval { instance, expr, output } => eval(instance, &expr, output, false),
        Command::Project { instance, expr, output } => eval(instance, &expr, output, true),
        Command::NormalForm { instance, triple, output } => normal_form_cmd(instance, &triple, output),
        Command::SteinCubes { instance, vertex, dim, output } => {
            stein_cubes(instance, &vertex, dim, output)
        }
        Command::Formats => {
            print!("{}", FORMATS);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn check_axioms(
    instance: Selector,
    max_n: usize,
    mode: CheckPolicy,
    samples: u64,
    max_exhaustive: u64,
    seed: u64,
    output: OutputMode,
) -> Result<ExitCode, Failure> {
    if max_n < 2 {
        return Err(Failure::Parse("--max-n must be at least 2".into()));
    }
    let policy = match mode {
        CheckPolicy::Auto => ModePolicy::Auto,
        CheckPolicy::Exhaustive => ModePolicy::ForceExhaustive,
        CheckPolicy::Sampled => ModePolicy::ForceSampled,
    };
    let budget = Budget { max_exhaustive, samples, seed, policy };
    with_instance!(instance, sys => {
        if policy == ModePolicy::ForceExhaustive && sys.order(2).is_none() {
            return Err(Failure::Parse(format!(
                "--mode exhaustive needs an enumerable instance; {} is infinite",
                sys.name()
            )));
        }
        let reports = check_all(&sys, max_n, &budget);
        match output {
            OutputMode::Human => {
                for report in &reports {
                    println!("{}", report.render_line());
                }
            }
            OutputMode::Json => {
                println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
            }
        }
        if reports.iter().all(|r| r.pass) {
            Ok(ExitCode::SUCCESS)
        } else {
            Err(Failure::Unequal)
        }
    })
}

fn eval(
    instance: Selector,
    input: &str,
    output: OutputMode,
    project: bool,
) -> Result<ExitCode, Failure> {
    with_instance!(instance, sys => {
        match expr::eval(&sys, input).map_err(Failure::Parse)? {
            expr::Outcome::Element(x) => {
                if project {
                    let image = project_to_v(&sys, &x);
                    print_element(&clonal_core::instances::SymmetricSystem, &image, output);
                } else {
                    print_element(&sys, &x, output);
                }
                Ok(ExitCode::SUCCESS)
            }
            expr::Outcome::Comparison(equal) => {
                println!("{equal}");
                if equal { Ok(ExitCode::SUCCESS) } else { Err(Failure::Unequal) }
            }
        }
    })
}

fn print_element<S: ElemCodec>(
    sys: &S,
    x: &clonal_core::thompson::ThompsonElement<S::Elem>,
    output: OutputMode,
) {
    match output {
        OutputMode::Human => println!("{}", element_to_text(sys, x)),
        OutputMode::Json => {
            println!("{}", serde_json::to_string_pretty(&element_to_json(sys, x)).unwrap())
        }
    }
}

fn normal_form_cmd(instance: Selector, input: &str, output: OutputMode) -> Result<ExitCode, Failure> {
    let value: serde_json::Value =
        serde_json::from_str(input).map_err(|e| Failure::Parse(format!("invalid JSON: {e}")))?;
    with_instance!(instance, sys => {
        let triple = triple_from_json(&sys, &value)?;
        print_element(&sys, &normal_form(&sys, triple), output);
        Ok(ExitCode::SUCCESS)
    })
}

fn stein_cubes(
    instance: Selector,
    input: &str,
    dim: usize,
    output: OutputMode,
) -> Result<ExitCode, Failure> {
    if dim < 1 {
        return Err(Failure::Parse("--dim must be at least 1".into()));
    }
    let value: serde_json::Value =
        serde_json::from_str(input).map_err(|e| Failure::Parse(format!("invalid JSON: {e}")))?;
    with_instance!(instance, sys => {
        let vertex = vertex_from_json(&sys, &value)?;
        let cubes = cubes_from(&vertex, dim);
        match output {
            OutputMode::Human => {
                println!("vertex: {}", serde_json::to_string(&vertex_to_json(&sys, &vertex)).unwrap());
                println!("feet: {}", vertex.feet());
                println!("{}-cubes: {}", dim, cubes.len());
                for cube in &cubes {
                    let parts: Vec<String> = cube.iter().map(|j| format!("{j}")).collect();
                    println!("  [{}]", parts.join(","));
                }
            }
            OutputMode::Json => {
                println!("{}", serde_json::to_string(&cubes).unwrap());
            }
        }
        Ok(ExitCode::SUCCESS)
    })
}

const FORMATS: &str = r#"Text formats
============

Trees        T ::= "L" | "(" T T ")"          e.g. (L(LL))
             Leaves are numbered 1..n left to right.
Forests      trees joined by "|"              e.g. L|(LL)|L
Permutation  image list, 1-based              e.g. [3,1,2]
Signed perm  signed image list                e.g. [1,-3,-2]
Matrix       rows of exact rationals          e.g. [[1,2,3],[0,4,5],[0,0,6]] or [[1/2,-2],[0,2]]
Tuple        entries in base-group syntax     e.g. (2,3,0) over z6, ([2,1,3],[1,2,3]) over s3
Trivial      the string "1"

Instances
=========

trivial | symmetric | signed | matrix | power:<base>[:twist]
  <base>  = z<m> (cyclic of order m) | s3
  <twist> = x<u> (cyclic only: second clone entry multiplied by the unit u)

Elements and vertices
=====================

Group element of the Thompson-like group (eval, project, normal-form):
  object form   {"instance": "...", "tminus": "<tree>", "g": <value>, "tplus": "<tree>"}
  compact form  ["<tree>", <value>, "<tree>"]
  The middle value is instance-specific JSON, or the one-line text form
  quoted as a string.

Expressions (eval, project):
  expr  := factor ("*" factor)*      products, right factor acting first
  factor:= "inv" factor | "(" expr ")" | <element JSON>
  A top-level "expr = expr" compares the two sides: prints true/false and
  exits 0/1.

Stein-Farley vertex (stein-cubes):
  object form   {"instance": "...", "t": "<tree>", "g": <value>, "e": "<forest>"}
  compact form  ["<tree>", <value>, "<forest>"]
  Cubes are reported as sorted lists of merge positions; position j is the
  caret over adjacent roots j, j+1.

Exit codes
==========

0 ok / all checks pass      1 axiom failure or inequality
2 parse error               3 internal invariant breach
"#;
