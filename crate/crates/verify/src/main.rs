use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use verify::data::{DataSource, HOME_VAR};
use verify::report::MultiReport;
use verify::{run_scenario, ModeSpec, RunOptions};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Scenario {
    X40,
    Y48,
    All,
}

/// Replays the nodal surface verification scenarios.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Cli {
    #[arg(long, value_enum)]
    scenario: Scenario,
    /// Exact arithmetic over the number field tower.
    #[arg(long, conflicts_with = "modp")]
    exact: bool,
    /// Arithmetic modulo the given primes.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    modp: Option<Vec<u64>>,
    /// Write the JSON report here instead of stdout. Relative paths resolve
    /// against $NODALCOV_HOME when it is set.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Run only this check (repeatable).
    #[arg(long = "check")]
    checks: Vec<String>,
    /// Enumerate every branch assignment in X8.
    #[arg(long)]
    all_partitions: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mode = match (&cli.modp, cli.exact) {
        (Some(ps), _) => ModeSpec::ModP(ps.clone()),
        (None, true) => ModeSpec::Exact,
        (None, false) => ModeSpec::Default,
    };
    let names: &[&str] = match cli.scenario {
        Scenario::X40 => &["x40"],
        Scenario::Y48 => &["y48"],
        Scenario::All => &["x40", "y48"],
    };
    let source = DataSource::from_env();
    let mut reports = Vec::new();
    for name in names {
        let opts = RunOptions {
            mode: mode.clone(),
            checks: cli
                .checks
                .iter()
                .filter(|c| c.to_ascii_uppercase().starts_with(&name[..1].to_ascii_uppercase()))
                .cloned()
                .collect(),
            all_partitions: cli.all_partitions,
        };
        if !cli.checks.is_empty() && opts.checks.is_empty() {
            continue;
        }
        match run_scenario(name, &opts, &source) {
            Ok(r) => {
                for line in r.summary_lines() {
                    eprintln!("{line}");
                }
                reports.push(r);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }
    if reports.is_empty() {
        eprintln!("error: no check matches {:?}", cli.checks);
        return ExitCode::from(2);
    }
    let multi = MultiReport {
        pass: reports.iter().all(|r| r.pass),
        reports,
    };
    let text = serde_json::to_string_pretty(&multi).expect("report serializes");
    match &cli.report {
        Some(path) => {
            let path = match std::env::var_os(HOME_VAR) {
                Some(home) if path.is_relative() => PathBuf::from(home).join(path),
                _ => path.clone(),
            };
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{text}"),
    }
    if multi.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
