use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use invar_core::group::DEFAULT_CAP;

mod commands;
mod report;

use report::{exit_code, Failure, RunReport};

#[derive(Parser, Debug)]
#[command(name = "invar", version, about = "Invariant rings, separating sets and Derksen ideals")]
struct Cli {
    /// Print a single JSON document instead of the human summary.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the parallel kernels.
    #[arg(long, global = true, env = "INVAR_THREADS")]
    threads: Option<usize>,

    /// Upper bound on the number of elements when closing a finite group.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    King,
    Derksen,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Noether,
    Reduce,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
    Gradedlex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generators of the invariant ring.
    Generators {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "king")]
        algorithm: Algorithm,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
        /// Scale every generator to leading coefficient 1.
        #[arg(long)]
        monic: bool,
        /// Check the output against the degree bound and the Hilbert ideal.
        #[arg(long)]
        verify: bool,
    },
    /// A separating set of invariants for a finite group.
    Separating {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "noether")]
        method: Method,
        /// Number of random point pairs to test (0 skips the check).
        #[arg(long, default_value_t = 0)]
        verify_samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coordinates of sample points are drawn from [-bound, bound].
        #[arg(long, default_value_t = 10)]
        bound: i64,
    },
    /// Facts about a finite group.
    Analyze {
        #[command(subcommand)]
        what: Analyze,
    },
    /// Generators of the invariant field of an algebraic group.
    Field { spec: PathBuf },
    /// Reduced basis of the Derksen ideal.
    DerksenIdeal { spec: PathBuf },
    /// Ideal of the separating variety.
    SeparatingVariety { spec: PathBuf },
    /// Groebner basis of an ideal given on the command line.
    Groebner {
        /// Comma separated variable names, largest first.
        #[arg(long)]
        vars: String,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
        /// Work over GF(p) instead of the rationals.
        #[arg(long)]
        prime: Option<u64>,
        #[arg(required = true)]
        polynomials: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum Analyze {
    /// Coefficients of the Molien series up to a degree.
    Molien {
        spec: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Element classification and generation verdicts.
    Classify { spec: PathBuf },
    /// Primary invariants from orbit products of linear forms.
    Primary {
        spec: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Degree bounds for secondary invariants and generators.
    Bounds {
        spec: PathBuf,
        /// Degrees of primary invariants; computed by `primary` when omitted.
        #[arg(long, value_delimiter = ',')]
        primary_degrees: Option<Vec<u32>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: &Cli) -> Result<RunReport, Failure> {
    use commands as c;
    let cap = cli.cap;
    match &cli.command {
        Command::Generators { spec, algorithm, order, monic, verify } => {
            c::generators(spec, cap, *algorithm, *order, *monic, *verify)
        }
        Command::Separating { spec, method, verify_samples, seed, bound } => {
            c::separating(spec, cap, *method, *verify_samples, *seed, *bound)
        }
        Command::Analyze { what } => match what {
            Analyze::Molien { spec, degree } => c::molien(spec, cap, *degree),
            Analyze::Classify { spec } => c::classify(spec, cap),
            Analyze::Primary { spec, seed } => c::primary(spec, cap, *seed),
            Analyze::Bounds { spec, primary_degrees, seed } => c::bounds(spec, cap, primary_degrees.as_deref(), *seed),
        },
        Command::Field { spec } => c::field(spec, cap),
        Command::DerksenIdeal { spec } => c::derksen_ideal(spec, cap),
        Command::SeparatingVariety { spec } => c::separating_variety(spec, cap),
        Command::Groebner { vars, order, prime, polynomials } => c::groebner(vars, *order, *prime, polynomials),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            log::warn!("could not configure the thread pool: {e}");
        }
    }
    let start = std::time::Instant::now();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.human());
                println!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let code = exit_code(&failure.error);
            if cli.json {
                println!("{}", failure.to_json(code));
            }
            eprintln!("error [{}]: {}", failure.error.name(), failure.error);
            ExitCode::from(code)
        }
    }
}
