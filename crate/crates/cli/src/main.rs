use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gsym::report::{self, Failure, Outcome};
use gsym::spec::{cyclic_spec, emit_spec, order_four_spec, parse_spec};
use gsym::{load, LoadError};
use gsym_core::twocat::Instance;
use gsym_core::twocat::{cyclic_example, section7_example};

#[derive(Parser)]
#[command(name = "gsym", version, about = "Exact computations with G-symmetric projective bimodules")]
struct Cli {
    /// Print reports as JSON with sorted keys.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Run {
    Check,
    Catalogue,
    Table,
    Cells,
    Adjunctions,
    Fiat,
    Classify,
    /// The order-four toolkit and realization check.
    Toolkit,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cyclic,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify every invariant on an instance file.
    Check { file: PathBuf },
    /// List the indecomposable 1-morphisms.
    Catalogue { file: PathBuf },
    /// Multiplication table of the indecomposables.
    Table { file: PathBuf },
    /// Left, right and two-sided cells.
    Cells { file: PathBuf },
    /// Right adjoints with verified zig-zags.
    Adjunctions { file: PathBuf },
    /// Weak fiatness and the duality.
    Fiat { file: PathBuf },
    /// Count simple transitive 2-representations of the cell of the group.
    Classify { file: PathBuf },
    /// Order-four toolkit on the group generator of a file.
    Toolkit { file: PathBuf },
    /// Re-print a file in canonical form.
    Emit { file: PathBuf },
    /// Non-negative integer solutions of the H-cell equations.
    HcellSolve {
        #[arg(long)]
        max: u64,
    },
    /// Run a command on a built-in family.
    Example {
        family: Family,
        #[arg(long)]
        n: usize,
        /// Print the instance file instead of running a command.
        #[arg(long)]
        emit: bool,
        #[arg(value_enum, default_value = "check")]
        run: Run,
    },
    /// The two-vertex order-four example: toolkit and realization, or another command.
    Section7Demo {
        #[arg(long)]
        emit: bool,
        #[arg(value_enum, default_value = "toolkit")]
        run: Run,
    },
}

enum Exit {
    Usage(String),
    Failed(Failure),
}

fn run_on(inst: &Instance, run: Run) -> Outcome {
    match run {
        Run::Check => report::check_report(inst),
        Run::Catalogue => report::catalogue_report(inst),
        Run::Table => report::table_report(inst),
        Run::Cells => report::cells_report(inst),
        Run::Adjunctions => report::adjunctions_report(inst),
        Run::Fiat => report::fiat_report_value(inst),
        Run::Classify => Ok(report::classify_report(&inst.s.act.group)),
        Run::Toolkit => report::section7_report(inst),
    }
}

fn read(file: &PathBuf) -> Result<String, Exit> {
    std::fs::read_to_string(file).map_err(|e| Exit::Usage(format!("cannot read {}: {e}", file.display())))
}

fn from_file(file: &PathBuf, run: Run) -> Result<Value, Exit> {
    let inst = load(&read(file)?).map_err(|e| Exit::Usage(load_msg(file, e)))?;
    run_on(&inst, run).map_err(Exit::Failed)
}

fn load_msg(file: &Path, e: LoadError) -> String {
    format!("{}: {e}", file.display())
}

fn builtin(
    r: Result<(gsym_core::algebra::Algebra, gsym_core::algebra::GroupAction), gsym_core::Error>,
) -> Result<Instance, Exit> {
    let (a, act) = r.map_err(|e| Exit::Usage(format!("{}: {e}", e.name())))?;
    Ok(Instance::new(a, act))
}

/// `Ok(None)` means the output was already printed as plain text.
fn dispatch(cmd: &Cmd) -> Result<Option<Value>, Exit> {
    let v = match cmd {
        Cmd::Check { file } => from_file(file, Run::Check)?,
        Cmd::Catalogue { file } => from_file(file, Run::Catalogue)?,
        Cmd::Table { file } => from_file(file, Run::Table)?,
        Cmd::Cells { file } => from_file(file, Run::Cells)?,
        Cmd::Adjunctions { file } => from_file(file, Run::Adjunctions)?,
        Cmd::Fiat { file } => from_file(file, Run::Fiat)?,
        Cmd::Classify { file } => from_file(file, Run::Classify)?,
        Cmd::Toolkit { file } => from_file(file, Run::Toolkit)?,
        Cmd::Emit { file } => {
            let spec = parse_spec(&read(file)?).map_err(|e| Exit::Usage(load_msg(file, LoadError::Parse(e))))?;
            print!("{}", emit_spec(&spec));
            return Ok(None);
        }
        Cmd::HcellSolve { max } => report::hcell_report(*max),
        Cmd::Example { family: Family::Cyclic, n, emit, run } => {
            if *n == 0 {
                return Err(Exit::Usage("--n must be positive".into()));
            }
            if *emit {
                print!("{}", emit_spec(&cyclic_spec(*n)));
                return Ok(None);
            }
            run_on(&builtin(cyclic_example(*n))?, *run).map_err(Exit::Failed)?
        }
        Cmd::Section7Demo { emit, run } => {
            if *emit {
                print!("{}", emit_spec(&order_four_spec()));
                return Ok(None);
            }
            run_on(&builtin(section7_example(4))?, *run).map_err(Exit::Failed)?
        }
    };
    Ok(Some(v))
}

fn print_value(v: &Value, as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_string_pretty(v).expect("reports serialize"));
    } else {
        print!("{}", report::render_text(v));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.cmd) {
        Ok(Some(v)) => {
            print_value(&v, cli.json);
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(Exit::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Exit::Failed(f)) => {
            if cli.json {
                let name = match &f {
                    Failure::Invariant(n, _) => n.clone(),
                    Failure::Core(e) => e.name().to_string(),
                };
                print_value(&json!({ "ok": false, "failed": name, "detail": f.to_string() }), true);
            }
            eprintln!("verification failed: {f}");
            ExitCode::from(1)
        }
    }
}
