use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use qthpower::cli::{run_char0, run_charq, ProblemFile};
use qthpower::closure::DEFAULT_MAX_ITER;
use qthpower::lifting::{LiftConfig, PrimeSchedule};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Char0,
    Charq,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

/// Integral closure of y^d + ... over F[x] by the Qth-power algorithm.
#[derive(Debug, Parser)]
#[command(name = "qthpower", version)]
struct Args {
    /// Problem file (`-` for standard input).
    problem: PathBuf,

    #[arg(long, value_enum, default_value = "char0")]
    mode: Mode,

    /// The prime for `--mode charq`; defaults to the file's characteristic.
    #[arg(long)]
    prime: Option<u64>,

    /// Explicit primes for `--mode char0`, e.g. `5,11,13`.
    #[arg(long, value_delimiter = ',', conflicts_with = "start_prime")]
    primes: Option<Vec<u64>>,

    #[arg(long, default_value_t = 5)]
    start_prime: u64,

    #[arg(long, default_value_t = 25)]
    max_primes: usize,

    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,

    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Write the audit log here.
    #[arg(long)]
    log: Option<PathBuf>,
}

fn run(args: &Args) -> Result<bool, String> {
    let text = if args.problem.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| format!("reading standard input: {e}"))?
    } else {
        std::fs::read_to_string(&args.problem).map_err(|e| format!("{}: {e}", args.problem.display()))?
    };
    let problem = ProblemFile::parse(&text).map_err(|e| format!("{}: {e}", args.problem.display()))?;
    if args.max_primes == 0 {
        return Err("--max-primes must be at least 1".into());
    }
    let (report, log) = match args.mode {
        Mode::Char0 => {
            let config = LiftConfig {
                primes: match &args.primes {
                    Some(list) => PrimeSchedule::Explicit(list.clone()),
                    None => PrimeSchedule::Ascending { start: args.start_prime },
                },
                max_primes: args.max_primes,
                max_iter: args.max_iter,
            };
            run_char0(&problem, &config)
        }
        Mode::Charq => {
            let q = args
                .prime
                .or(problem.characteristic)
                .ok_or("--mode charq needs --prime or a `characteristic:` line")?;
            run_charq(&problem, q, args.max_iter)
        }
    }
    .map_err(|e| e.to_string())?;
    if let Some(path) = &args.log {
        let mut body = log.join("\n");
        body.push('\n');
        std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    match args.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Structured => println!("{}", report.to_json()),
    }
    if let Some(m) = &report.message {
        eprintln!("qthpower: {m}");
    }
    Ok(report.accepted)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("qthpower: {e}");
            ExitCode::from(2)
        }
    }
}
