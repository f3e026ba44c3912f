use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use enriques_core::report::{self, ExportKind, RunOptions, Suite};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    All,
    Plane,
    Lattice,
    Gamma,
    Vinberg,
    Char2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportArg {
    GammaDot,
    GammaJson,
    LatticeJson,
}

/// Runs the exact verification suites and prints a JSON report.
#[derive(Parser, Debug)]
#[command(name = "enriqueslab", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    /// Which of the 168 contraction configurations to use.
    #[arg(long, default_value_t = 0)]
    config_index: usize,
    /// Write an export instead of running the suite.
    #[arg(long, value_enum)]
    export: Option<ExportArg>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the random specializations.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

const NUM_CONFIGS: usize = 168;

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), enriques_core::Error> {
    match out {
        Some(p) => report::write_file(p, text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if cli.config_index >= NUM_CONFIGS {
        eprintln!("error: --config-index must be below {NUM_CONFIGS}");
        return ExitCode::from(2);
    }
    if let Some(kind) = cli.export {
        let kind = match kind {
            ExportArg::GammaDot => ExportKind::GammaDot,
            ExportArg::GammaJson => ExportKind::GammaJson,
            ExportArg::LatticeJson => ExportKind::LatticeJson,
        };
        let res = report::export_string(kind, cli.config_index).and_then(|s| emit(&cli.out, &s));
        return match res {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        };
    }
    let suite = match cli.suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Plane => Suite::Plane,
        SuiteArg::Lattice => Suite::Lattice,
        SuiteArg::Gamma => Suite::Gamma,
        SuiteArg::Vinberg => Suite::Vinberg,
        SuiteArg::Char2 => Suite::Char2,
    };
    let r = report::run(&RunOptions { suite, config_index: cli.config_index, seed: cli.seed });
    for c in &r.checks {
        eprintln!("{:?} {} ({} ms)", c.status, c.check_id, c.elapsed_ms);
    }
    let text = match r.to_json() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&cli.out, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if r.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
