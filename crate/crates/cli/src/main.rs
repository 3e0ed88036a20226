//! `lsa-forge`: exact checks, builders and normal forms for left-symmetric
//! and para-Kähler structures, one job per invocation.
//!
//! Exit status is 0 when every certificate passes, 1 when a mathematical
//! predicate fails (the report is still printed) and 2 on malformed input or
//! usage errors.

mod commands;
mod input;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use input::Inputs;
use output::{Header, Outcome};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Internal(String),
}

impl From<lsa_forge::Error> for Failure {
    fn from(e: lsa_forge::Error) -> Self {
        match e {
            lsa_forge::Error::Internal(m) => Failure::Internal(m),
            e => Failure::Usage(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "lsa-forge", version, about = "Exact algebra for left-symmetric and para-Kähler structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
pub struct Common {
    /// Bind a placeholder in the input files, e.g. `--param a=-3/2`.
    #[arg(long = "param", value_name = "K=V", global = true)]
    params: Vec<String>,
    /// Seed for any random draw the job makes.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Write the resulting structure file here.
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate predicates on a structure file.
    Check(CheckArgs),
    /// Run one of the constructions and certify its output.
    #[command(subcommand)]
    Build(Build),
    /// Put a structure into normal form.
    #[command(subcommand)]
    Normalize(Normalize),
    /// Classify a pair of structures.
    #[command(subcommand)]
    Classify(Classify),
    /// The shipped families.
    #[command(subcommand)]
    Catalog(Catalog),
    /// Lie triple systems.
    #[command(subcommand)]
    Lts(Lts),
}

#[derive(Args)]
pub struct CheckArgs {
    /// Comma-separated predicate names; `all` runs the algebra predicates.
    #[arg(long, value_delimiter = ',', required = true)]
    pub pred: Vec<String>,
    pub file: PathBuf,
    /// Form used by form predicates.
    #[arg(long, default_value = "omega")]
    pub form: String,
    /// Second product for `compatible`; defaults to the file's `L_circ_*`.
    #[arg(long)]
    pub circ: Option<PathBuf>,
    /// Dual product for `extendible` and `cocycle`.
    #[arg(long)]
    pub dual: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum Build {
    /// Extended product on U + U* from products on U and U*.
    Phase {
        #[arg(long)]
        u: PathBuf,
        /// A structure file, or `zero`.
        #[arg(long)]
        dual: String,
    },
    /// Twisted para-Kähler structure of a quasi S-matrix.
    Twist {
        #[arg(long)]
        u: PathBuf,
        /// Tensor holding r; searched with `--seed` when the file has none.
        #[arg(long, default_value = "r")]
        tensor: String,
    },
    /// Hyper-para-Kähler double of two compatible symplectic products.
    Hyper {
        file: PathBuf,
        #[arg(long)]
        circ: Option<PathBuf>,
        #[arg(long, default_value = "omega")]
        form: String,
    },
    /// Double of a symplectic Lie algebra along an endomorphism.
    Tsymp {
        file: PathBuf,
        #[arg(long, default_value = "omega")]
        form: String,
        #[arg(long, default_value = "A")]
        endo: String,
    },
    /// Double of a left-symmetric algebra with an invariant isomorphism.
    Ttheta {
        file: PathBuf,
        #[arg(long, default_value = "theta")]
        form: String,
        #[arg(long, default_value = "A")]
        endo: String,
    },
    /// Symplectic quadratic algebra over a truncated tensor product.
    Quadratic {
        file: PathBuf,
        #[arg(long)]
        order: usize,
    },
    /// Para-Kähler double of a flat metric Lie algebra.
    Flatdouble {
        file: PathBuf,
        #[arg(long, default_value = "metric")]
        form: String,
    },
    /// Para-Kähler double from a solution of the classical Yang-Baxter equation.
    Cybe {
        file: PathBuf,
        #[arg(long, default_value = "b")]
        tensor: String,
        #[arg(long, default_value = "r")]
        form: String,
    },
}

#[derive(Subcommand)]
pub enum Normalize {
    /// Two-dimensional symplectic left-symmetric algebras.
    Dim2 {
        file: PathBuf,
        #[arg(long, default_value = "omega")]
        form: String,
    },
    /// Associative symplectic algebras.
    Assoc {
        file: PathBuf,
        #[arg(long, default_value = "omega")]
        form: String,
    },
}

#[derive(Subcommand)]
pub enum Classify {
    /// Pairs of symplectic left-symmetric products on a plane.
    Compat2 {
        file: PathBuf,
        #[arg(long)]
        circ: Option<PathBuf>,
        #[arg(long, default_value = "omega")]
        form: String,
    },
}

#[derive(Subcommand)]
pub enum Catalog {
    List,
    /// Instantiate a family; parameters not given are drawn from `--seed`.
    Emit { family: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LtsSource {
    /// `[YB(A)(X,Y), Z]` on a Lie algebra.
    Yb,
    /// `O(A)(X,Y).Z` on a left-symmetric algebra.
    O,
    /// The triple of a quasi S-matrix on the dual space.
    Twist,
}

#[derive(Subcommand)]
pub enum Lts {
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        from: LtsSource,
        #[arg(long, default_value = "A")]
        endo: String,
        #[arg(long, default_value = "r")]
        tensor: String,
    },
}

impl Command {
    fn name(&self) -> String {
        match self {
            Command::Check(a) => format!("check --pred {}", a.pred.join(",")),
            Command::Build(b) => {
                let s = match b {
                    Build::Phase { .. } => "phase",
                    Build::Twist { .. } => "twist",
                    Build::Hyper { .. } => "hyper",
                    Build::Tsymp { .. } => "tsymp",
                    Build::Ttheta { .. } => "ttheta",
                    Build::Quadratic { .. } => "quadratic",
                    Build::Flatdouble { .. } => "flatdouble",
                    Build::Cybe { .. } => "cybe",
                };
                format!("build {s}")
            }
            Command::Normalize(Normalize::Dim2 { .. }) => "normalize dim2".into(),
            Command::Normalize(Normalize::Assoc { .. }) => "normalize assoc".into(),
            Command::Classify(Classify::Compat2 { .. }) => "classify compat2".into(),
            Command::Catalog(Catalog::List) => "catalog list".into(),
            Command::Catalog(Catalog::Emit { family }) => format!("catalog emit {family}"),
            Command::Lts(Lts::Verify { .. }) => "lts verify".into(),
        }
    }

    fn inputs(&self) -> Vec<&Path> {
        let mut v: Vec<&Path> = match self {
            Command::Check(a) => vec![&a.file],
            Command::Build(Build::Phase { u, dual }) => {
                let mut v = vec![u.as_path()];
                if dual != "zero" {
                    v.push(Path::new(dual));
                }
                v
            }
            Command::Build(Build::Twist { u, .. }) => vec![u],
            Command::Build(Build::Hyper { file, .. })
            | Command::Build(Build::Tsymp { file, .. })
            | Command::Build(Build::Ttheta { file, .. })
            | Command::Build(Build::Quadratic { file, .. })
            | Command::Build(Build::Flatdouble { file, .. })
            | Command::Build(Build::Cybe { file, .. })
            | Command::Normalize(Normalize::Dim2 { file, .. })
            | Command::Normalize(Normalize::Assoc { file, .. })
            | Command::Classify(Classify::Compat2 { file, .. })
            | Command::Lts(Lts::Verify { file, .. }) => vec![file],
            Command::Catalog(_) => vec![],
        };
        match self {
            Command::Check(CheckArgs { circ, dual, .. }) => v.extend(circ.iter().chain(dual).map(PathBuf::as_path)),
            Command::Build(Build::Hyper { circ, .. }) | Command::Classify(Classify::Compat2 { circ, .. }) => {
                v.extend(circ.iter().map(PathBuf::as_path))
            }
            _ => {}
        }
        v
    }
}

fn run(cli: &Cli) -> Result<(Header, Outcome), Failure> {
    let params = input::parse_params(&cli.common.params)?;
    let paths = cli.command.inputs();
    let header = Header {
        command: cli.command.name(),
        inputs: paths.iter().map(|p| p.display().to_string()).collect(),
        params: params.clone(),
        seed: cli.common.seed,
    };
    // Catalog parameters bind the family file, not an input.
    let inputs = match &cli.command {
        Command::Catalog(_) => Inputs::load(&[], Default::default())?,
        _ => Inputs::load(&paths, params.clone())?,
    };
    let outcome = match &cli.command {
        Command::Check(a) => commands::check(&inputs, a)?,
        Command::Build(b) => commands::build(&inputs, b, cli.common.seed)?,
        Command::Normalize(n) => commands::normalize(&inputs, n)?,
        Command::Classify(c) => commands::classify(&inputs, c)?,
        Command::Catalog(c) => commands::catalog(c, &params, cli.common.seed)?,
        Command::Lts(l) => commands::lts(&inputs, l)?,
    };
    Ok((header, outcome))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((header, outcome)) => {
            if let (Some(path), Some(s)) = (&cli.common.out, &outcome.structure) {
                if outcome.passed() {
                    if let Err(Failure::Usage(m) | Failure::Internal(m)) = output::write_structure(path, s) {
                        eprintln!("error: {m}");
                        return ExitCode::from(2);
                    }
                }
            }
            let body = match cli.common.format {
                Format::Text => output::text(&header, &outcome),
                Format::Json => output::json(&header, &outcome),
            };
            // `catalog emit` without `--out` prints the structure instead.
            match (&cli.command, &cli.common.out, &outcome.structure) {
                (Command::Catalog(Catalog::Emit { .. }), None, Some(s)) => print!("{}", lsa_forge::io::to_json(s)),
                _ => print!("{body}"),
            }
            ExitCode::from(if outcome.passed() { 0 } else { 1 })
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(2)
        }
    }
}
