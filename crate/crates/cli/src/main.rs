use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use hypercenter::UcsOptions;
use hypercenter_cli::run::{run, Operation, Request};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Op {
    Validate,
    Center,
    Ucs,
    Zomega,
    Hypercenter,
    Fitting,
    Rads,
    CenterS,
    Nilclass,
    Verify,
    OracleCompare,
}

impl From<Op> for Operation {
    fn from(op: Op) -> Self {
        match op {
            Op::Validate => Operation::Validate,
            Op::Center => Operation::Center,
            Op::Ucs => Operation::Ucs,
            Op::Zomega => Operation::Zomega,
            Op::Hypercenter => Operation::Hypercenter,
            Op::Fitting => Operation::Fitting,
            Op::Rads => Operation::Rads,
            Op::CenterS => Operation::CenterS,
            Op::Nilclass => Operation::Nilclass,
            Op::Verify => Operation::Verify,
            Op::OracleCompare => Operation::OracleCompare,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Upper central series, hypercenters and Fitting subgroups of group models.
#[derive(Debug, Parser)]
#[command(name = "hypercenter", version)]
struct Args {
    /// Instance file (TOML, or JSON when the extension is .json).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    op: Op,
    #[arg(long, default_value_t = 64)]
    max_finite_steps: usize,
    #[arg(long, default_value_t = 8)]
    max_limit_stages: usize,
    #[arg(long, default_value_t = 32)]
    chain_depth: usize,
    /// Suite for --op verify.
    #[arg(long, default_value = "fixtures")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let req = Request {
        op: args.op.into(),
        input: args.input,
        opts: UcsOptions {
            max_finite_steps: args.max_finite_steps,
            max_limit_stages: args.max_limit_stages,
            chain_depth: args.chain_depth,
            cancel: None,
        },
        suite: args.suite,
        seed: args.seed,
        count: args.count,
    };
    match run(&req) {
        Ok(outcome) => {
            let text = match args.format {
                Format::Json => serde_json::to_string_pretty(&outcome.report).expect("reports serialize"),
                Format::Text => outcome.report.to_string(),
            };
            // A closed stdout (for example `| head`) is not an error.
            let _ = writeln!(std::io::stdout(), "{text}");
            if let Some(d) = outcome.diagnostic {
                eprintln!("error: {d}");
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
