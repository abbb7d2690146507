use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lipschitz_codes::selfcheck::{power_table, run_suite, SUITES};
use lipschitz_codes::text::{format_word, parse_quaternion, parse_residue_word};
use lipschitz_codes::{Code, DecCode, Error, Modulus, OmecCode};

const EXIT_UNCORRECTABLE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "lqcodes",
    version,
    about = "Error-correcting codes over Lipschitz integers"
)]
struct Cli {
    /// Also write the report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print gen^s modulo pi for s = 0..count-1.
    Tables {
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
        #[arg(long, allow_hyphen_values = true)]
        gen: String,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Encode a message word.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(allow_hyphen_values = true)]
        message: String,
    },
    /// Decode a received word.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(allow_hyphen_values = true)]
        received: String,
    },
    /// Run a reproduction suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Omec,
    Dec,
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, allow_hyphen_values = true)]
    pi: String,
    /// Generator of the single-error code.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "beta")]
    alpha: Option<String>,
    /// Generator of the double-error code.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, default_value_t = 1)]
    t: usize,
}

enum Failure {
    Usage(String),
    Uncorrectable,
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

enum AnyCode {
    Omec(OmecCode),
    Dec(DecCode),
}

impl AnyCode {
    fn as_code(&self) -> &dyn Code {
        match self {
            AnyCode::Omec(c) => c,
            AnyCode::Dec(c) => c,
        }
    }

    /// How the length contract reads in diagnostics.
    fn message_label(&self) -> &'static str {
        match self {
            AnyCode::Omec(_) => "n-1",
            AnyCode::Dec(_) => "n-2",
        }
    }
}

fn build(args: &CodeArgs) -> Result<AnyCode, Failure> {
    let m = Modulus::new(parse_quaternion(&args.pi)?)?;
    let gen = match (&args.alpha, &args.beta) {
        (Some(g), None) | (None, Some(g)) => m.reduce(parse_quaternion(g)?)?,
        _ => {
            return Err(Failure::Usage(
                "a generator is required: pass --alpha or --beta".into(),
            ))
        }
    };
    Ok(match args.family {
        Family::Omec => {
            if args.t != 1 {
                return Err(Failure::Usage(format!(
                    "omec codes correct one error; --t {} is invalid",
                    args.t
                )));
            }
            AnyCode::Omec(OmecCode::new(m, gen)?)
        }
        Family::Dec => AnyCode::Dec(DecCode::new(m, gen, args.t)?),
    })
}

fn check_len(got: usize, expected: usize, label: &str) -> Result<(), Failure> {
    if got == expected {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "expected {label} = {expected} symbols, got {got}"
        )))
    }
}

fn run(command: &Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Tables { pi, gen, count } => {
            let m = Modulus::new(parse_quaternion(pi)?)?;
            let g = m.reduce(parse_quaternion(gen)?)?;
            for (s, row) in power_table(&g, *count).iter().enumerate() {
                let _ = writeln!(out, "{s}\t{row}");
            }
        }
        Command::Encode { code, message } => {
            let any = build(code)?;
            let code = any.as_code();
            let msg = parse_residue_word(message, code.modulus())?;
            check_len(msg.len(), code.message_length(), any.message_label())?;
            let _ = writeln!(out, "{}", format_word(&code.encode(&msg)?));
        }
        Command::Decode { code, received } => {
            let any = build(code)?;
            let code = any.as_code();
            let r = parse_residue_word(received, code.modulus())?;
            check_len(r.len(), code.length(), "n")?;
            let report = code.decode(&r)?;
            let _ = writeln!(out, "{report}");
            if !report.is_correctable() {
                return Err(Failure::Uncorrectable);
            }
        }
        Command::Verify { suite } => {
            let checks = run_suite(suite)
                .ok_or_else(|| Failure::Usage(format!("unknown suite {suite:?}")))??;
            let passed = checks.iter().filter(|c| c.passed).count();
            for c in &checks {
                let _ = writeln!(out, "{c}");
            }
            let _ = writeln!(out, "{suite}: {passed}/{} checks passed", checks.len());
            if passed != checks.len() {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli.command, &mut out);
    print!("{out}");
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, &out) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Uncorrectable) | Err(Failure::Checks) => ExitCode::from(EXIT_UNCORRECTABLE),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
