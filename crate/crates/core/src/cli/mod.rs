//! Command-line front end. Every subcommand prints a text report, or a JSON
//! document tagged with its schema id under `--json`.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;

use crate::decompose::decompose;
use crate::expr::{module, ExprError};
use crate::filtration::{bifiltered_ds_x_plus_y, filtered_ds_infty, semisimplify};
use crate::homspace::{hom_space, Equivariance, MapParity};
use crate::pages::{ds, page_sequence, Direction, Order};
use crate::qn::{arc_diagram, ds_multiplicity, lr_coefficient, weight_diagram, HalfIntWeight, Partition};
use crate::supermod::SuperModule;
use crate::verify::{criterion_of, run_criteria, DEFAULT_SEED, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "gl11", version, about = "Spectral sequences, decompositions and semisimplification for gl(1|1)-modules")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Xy,
    Yx,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Order {
        match o {
            OrderArg::Xy => Order::Xy,
            OrderArg::Yx => Order::Yx,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EqArg {
    Sl,
    Gl,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pages E_r with dimensions and ranks of d_r.
    Pages {
        expr: String,
        #[arg(long, value_enum)]
        order: OrderArg,
        #[arg(long)]
        max_page: Option<usize>,
    },
    /// Duflo-Serganova cohomology ker u / im u.
    Ds {
        expr: String,
        #[arg(long, value_parser = parse_direction)]
        direction: Direction,
    },
    /// Krull-Schmidt decomposition into indecomposables.
    Decompose { expr: String },
    /// Semisimplification: the associated graded of the filtered limit page.
    Ss {
        expr: String,
        #[arg(long, value_enum)]
        order: OrderArg,
    },
    /// The filtration on the limit page by images of the W(n).
    Filtration {
        expr: String,
        #[arg(long, value_enum)]
        order: OrderArg,
    },
    /// The Z x Q filtration on DS_{x+y} and its C_v summands.
    Bifilt { expr: String },
    /// A basis of equivariant maps between two modules.
    Homs {
        source: String,
        target: String,
        #[arg(long, value_enum, default_value = "sl")]
        equivariance: EqArg,
        #[arg(long, value_enum, default_value = "both")]
        parity: ParityArg,
    },
    /// Weight and arc diagram of a q(n) weight, e.g. 15/2,13/2,-1/2.
    Arc {
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Multiplicity of L(mu) in the k-th page for x, y on L(lambda).
    Qmult {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
        k: usize,
    },
    /// Littlewood-Richardson coefficient c^G_{L M}.
    Lr { l: String, m: String, g: String },
    /// Run the acceptance suites.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    s.parse()
}

/// Error type carrying the exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure { code: EXIT_USAGE, message: message.to_string() }
}

fn failed(message: impl ToString) -> Failure {
    Failure { code: EXIT_FAILED, message: message.to_string() }
}

fn load(expr: &str) -> Result<SuperModule, Failure> {
    module(expr).map_err(|e| match e {
        ExprError::Parse(p) => usage(format!("{expr:?}: {p}")),
        ExprError::Module(m) => usage(format!("{expr:?}: {m}")),
    })
}

fn weight(s: &str) -> Result<HalfIntWeight, Failure> {
    HalfIntWeight::parse(s).map_err(|e| usage(format!("{s:?}: {e}")))
}

fn partition(s: &str) -> Result<Partition, Failure> {
    Partition::parse(s).ok_or_else(|| usage(format!("{s:?} is not a partition")))
}

/// Output of one subcommand: the JSON document, the text rendering, and whether
/// the run counts as a verification failure.
struct Output {
    json: serde_json::Value,
    text: String,
    ok: bool,
}

fn execute(cmd: Command) -> Result<Output, Failure> {
    let out = match cmd {
        Command::Pages { expr, order, max_page } => {
            let m = load(&expr)?;
            report::pages(&expr, &page_sequence(&m, order.into()), max_page)
        }
        Command::Ds { expr, direction } => report::ds(&expr, &ds(&load(&expr)?, direction)),
        Command::Decompose { expr } => {
            let rep = decompose(&load(&expr)?).map_err(failed)?;
            report::decomposition(&expr, &rep)
        }
        Command::Ss { expr, order } => report::ss(&expr, order.into(), &semisimplify(&load(&expr)?, order.into())),
        Command::Filtration { expr, order } => {
            report::filtration(&expr, order.into(), &filtered_ds_infty(&load(&expr)?, order.into()))
        }
        Command::Bifilt { expr } => report::bifilt(&expr, &bifiltered_ds_x_plus_y(&load(&expr)?)),
        Command::Homs { source, target, equivariance, parity } => {
            let eq = match equivariance {
                EqArg::Sl => Equivariance::Sl,
                EqArg::Gl => Equivariance::Gl,
            };
            let par = match parity {
                ParityArg::Even => MapParity::Even,
                ParityArg::Odd => MapParity::Odd,
                ParityArg::Both => MapParity::Both,
            };
            let h = hom_space(&load(&source)?, &load(&target)?, eq, par);
            report::homs(&source, &target, &h)
        }
        Command::Arc { weight: w } => {
            let lambda = weight(&w)?;
            report::arc(&lambda, &arc_diagram(&weight_diagram(&lambda)))
        }
        Command::Qmult { lambda, mu, k } => {
            let (l, m) = (weight(&lambda)?, weight(&mu)?);
            let mult = ds_multiplicity(&l, &m, k).map_err(usage)?;
            report::qmult(&l, &m, k, mult)
        }
        Command::Lr { l, m, g } => {
            let (l, m, g) = (partition(&l)?, partition(&m)?, partition(&g)?);
            report::lr(&l, &m, &g, lr_coefficient(&l, &m, &g))
        }
        Command::Verify { suite, seed } => {
            let criteria: Vec<u8> = match suite {
                Some(s) => vec![criterion_of(&s).ok_or_else(|| usage(format!("unknown suite {s}")))?],
                None => (1..=9).collect(),
            };
            report::verify(seed, &run_criteria(&criteria, seed))
        }
    };
    Ok(out)
}

/// Runs the command line `argv` (program name first), writing to `out` and `err`.
pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let printed = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("reports serialize"))
            } else {
                write!(out, "{}", o.text)
            };
            if printed.is_err() {
                return EXIT_FAILED;
            }
            if o.ok {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn run(argv: &[String]) -> i32 {
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
