//! `ears`: batch front end for ears-core.
//!
//! Exit codes: 0 success, 1 domain error or failed check, 2 usage error.

mod cmd_ears;
mod cmd_realize;
mod cmd_twist;
mod input;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ears", version, about = "Extended affine root systems: checks, subsystems, twisted affinization data, realizations")]
pub struct Cli {
    #[command(subcommand)]
    pub group: Group,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Box bound B for truncated checks
    #[arg(long = "box", global = true, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
    pub bx: i64,
    /// Seed for randomized choices
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Group {
    /// Root-datum operations
    Ears {
        #[command(subcommand)]
        cmd: cmd_ears::EarsCmd,
    },
    /// Diagram-automorphism and affinization data
    Twist {
        #[command(subcommand)]
        cmd: cmd_twist::TwistCmd,
    },
    /// Explicit Lie algebra realizations
    Realize {
        #[command(subcommand)]
        cmd: cmd_realize::RealizeCmd,
    },
}

/// What a subcommand produced: the rendered text and whether every check passed.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

fn init_threads() {
    if let Some(n) = std::env::var("EARS_KIT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    init_threads();
    let res = match &cli.group {
        Group::Ears { cmd } => cmd_ears::run(cmd, &cli),
        Group::Twist { cmd } => cmd_twist::run(cmd, &cli),
        Group::Realize { cmd } => cmd_realize::run(cmd, &cli),
    };
    match res {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let kind = if e.downcast_ref::<ears_core::Error>().is_some() {
                "domain"
            } else if e.downcast_ref::<serde_json::Error>().is_some() {
                "json"
            } else {
                "input"
            };
            let body = serde_json::json!({ "error": kind, "message": format!("{e:#}") });
            eprintln!("{body}");
            ExitCode::from(1)
        }
    }
}
