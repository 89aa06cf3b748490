use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use finalg::cli::{self, RunReport};

/// Spectra, polynomial calculus and star structures of finite-dimensional algebras.
#[derive(Parser)]
#[command(name = "alg", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check associativity and find the identity.
    Check { file: PathBuf },
    /// Spectrum of an element.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        element: PathBuf,
    },
    /// Compare p(spectrum(x)) with spectrum(p(x)).
    Polymap {
        file: PathBuf,
        #[arg(long)]
        element: PathBuf,
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, default_value_t = cli::DEFAULT_POLYMAP_TOL)]
        tol: f64,
    },
    /// Classify a star structure and check its consequences.
    Star {
        file: PathBuf,
        #[arg(long)]
        star: PathBuf,
        #[arg(long, default_value_t = cli::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { cli::EXIT_INPUT_ERROR as u8 } else { 0 });
        }
    };
    let report: RunReport = match &args.command {
        Command::Check { file } => cli::cmd_check(file),
        Command::Spectrum { file, element } => cli::cmd_spectrum(file, element),
        Command::Polymap { file, element, poly, tol } => cli::cmd_polymap(file, element, poly, *tol),
        Command::Star { file, star, samples, seed } => cli::cmd_star(file, star, *samples, *seed),
    };
    print!("{}", report.to_json());
    eprint!("{}", report.summary());
    ExitCode::from(report.exit_code as u8)
}
