use std::fs::File;
use std::io::{self, BufReader, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ideal_aut::cli::{run_batch, run_to_record, Command, Options, OutputFormat, Request};
use ideal_aut::error::Error;
use ideal_aut::factor_fp::DEFAULT_SEED;
use ideal_aut::oracle::OracleBounds;
use ideal_aut::ring::Ring;

#[derive(Parser)]
#[command(name = "ideal-aut", version, about = "Affine automorphisms of principal ideals (f) in R[t]")]
struct Cli {
    /// Coefficient ring: Z, Q or F<p>
    #[arg(long, global = true, default_value = "Q")]
    ring: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized factorization over F_p
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// List every isomorphism witness, not just the first
    #[arg(long, global = true)]
    all_witnesses: bool,
    #[arg(long, global = true, default_value_t = OracleBounds::default().max_p)]
    max_p: u32,
    #[arg(long, global = true, default_value_t = OracleBounds::default().max_deg)]
    max_deg: usize,
    /// JSON-lines request file ("-" for stdin); same as the batch subcommand
    #[arg(long, value_name = "FILE")]
    batch: Option<String>,
    #[command(subcommand)]
    command: Option<Sub>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Sub {
    /// Automorphism group of (f)
    Aut { f: String },
    /// Decide whether (f) and (g) are isomorphic
    Iso { f: String, g: String },
    /// Factor f over F_p
    Factors { f: String },
    /// Check whether t -> alpha*t + beta preserves (f); pair as "alpha,beta"
    Verify { f: String, pair: String },
    /// Compare the computed group with brute-force enumeration over F_p
    OracleCompare { f: String },
    /// Process JSON-lines requests ("-" for stdin)
    Batch { file: String },
}

fn read_arg(arg: &str) -> io::Result<String> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut buf = String::new();
    io::stdin().read_to_string(&mut buf)?;
    Ok(buf.trim().to_string())
}

fn fail(err: &Error, format: Format) -> ExitCode {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::json!({"error": {"code": err.code(), "exit_code": err.exit_code(), "message": err.to_string()}})
        ),
        Format::Text => eprintln!("error [{}]: {err}", err.code()),
    }
    ExitCode::from(err.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let options = Options {
        format: match cli.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        seed: cli.seed,
        all_witnesses: cli.all_witnesses,
        bounds: OracleBounds {
            max_p: cli.max_p,
            max_deg: cli.max_deg,
        },
    };

    let batch = match (&cli.command, &cli.batch) {
        (Some(Sub::Batch { file }), _) | (None, Some(file)) => Some(file.clone()),
        (None, None) => {
            eprintln!("error: no command given (try --help)");
            return ExitCode::from(2);
        }
        _ => None,
    };
    if let Some(file) = batch {
        let input: Box<dyn io::BufRead> = if file == "-" {
            Box::new(io::stdin().lock())
        } else {
            match File::open(&file) {
                Ok(f) => Box::new(BufReader::new(f)),
                Err(e) => return fail(&Error::from(e), cli.format),
            }
        };
        return match run_batch(input, io::stdout().lock(), &options) {
            Ok(code) => ExitCode::from(code as u8),
            Err(e) => fail(&e, cli.format),
        };
    }

    let ring: Ring = match cli.ring.parse() {
        Ok(r) => r,
        Err(e) => return fail(&e, cli.format),
    };
    let (command, args) = match cli.command.expect("checked above") {
        Sub::Aut { f } => (Command::Aut, vec![f]),
        Sub::Iso { f, g } => (Command::Iso, vec![f, g]),
        Sub::Factors { f } => (Command::Factors, vec![f]),
        Sub::Verify { f, pair } => (Command::Verify, vec![f, pair]),
        Sub::OracleCompare { f } => (Command::OracleCompare, vec![f]),
        Sub::Batch { .. } => unreachable!(),
    };
    let inputs = match args.iter().map(|a| read_arg(a)).collect::<io::Result<Vec<_>>>() {
        Ok(v) => v,
        Err(e) => return fail(&Error::from(e), cli.format),
    };
    let request = Request {
        command,
        ring,
        inputs,
        options,
    };
    let (record, code) = run_to_record(&request);
    match cli.format {
        Format::Json => println!("{}", record.to_json()),
        Format::Text if record.error.is_some() => eprintln!("{record}"),
        Format::Text => print!("{record}"),
    }
    ExitCode::from(code as u8)
}
