//! Scenario runner replaying the x40 and y48 verification scripts.

pub mod check;
pub mod data;
pub mod report;
pub mod x40;
pub mod y48;

use std::time::Instant;

use serde_json::json;
use thiserror::Error;

use nodalcov::arith::{FieldTower, PrimeReduction};
use nodalcov::poly::parse_tower;

use check::{combine_primes, Exact, Outcome};
use data::{DataError, DataSource, ScenarioConfig};
use report::{CheckResult, ModeInfo, Report};
use x40::X40Input;
use y48::Y48Input;

pub const AUTO_PRIME_FLOOR: u64 = 1 << 30;
pub const AUTO_PRIME_COUNT: usize = 3;

/// Errors that stop a run before any check executes. The CLI maps them to
/// exit status 2.
#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Data(#[from] DataError),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum ModeSpec {
    /// Exact for x40; mod-p over auto-selected primes plus exact Y1 for y48.
    #[default]
    Default,
    Exact,
    ModP(Vec<u64>),
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub mode: ModeSpec,
    /// Empty means every check of the scenario.
    pub checks: Vec<String>,
    pub all_partitions: bool,
}

pub(crate) fn tower_of(cfg: &ScenarioConfig) -> Result<FieldTower, RunError> {
    let steps: Vec<(&str, &str)> = cfg.tower.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    parse_tower(&steps).map_err(|e| RunError::Config(format!("{}: tower: {e}", cfg.name)))
}

pub fn run_scenario(name: &str, opts: &RunOptions, source: &DataSource) -> Result<Report, RunError> {
    let data = data::load(name, source)?;
    match name {
        "x40" => run_x40(&X40Input::from_data(&data)?, opts),
        _ => run_y48(&Y48Input::from_data(&data)?, opts),
    }
}

fn select<'a>(catalog: &'a [(&'a str, &'a str)], wanted: &[String]) -> Result<Vec<(&'a str, &'a str)>, RunError> {
    if wanted.is_empty() {
        return Ok(catalog.to_vec());
    }
    for w in wanted {
        if !catalog.iter().any(|(id, _)| id.eq_ignore_ascii_case(w)) {
            return Err(RunError::UnknownCheck(w.clone()));
        }
    }
    Ok(catalog
        .iter()
        .copied()
        .filter(|(id, _)| wanted.iter().any(|w| id.eq_ignore_ascii_case(w)))
        .collect())
}

fn reductions(tower: &FieldTower, primes: &[u64]) -> Result<Vec<PrimeReduction>, RunError> {
    if primes.is_empty() {
        return Err(RunError::Config("mod-p mode needs at least one prime".into()));
    }
    primes
        .iter()
        .map(|&p| PrimeReduction::new(tower, p).map_err(|e| RunError::Config(format!("prime {p} is invalid for the tower: {e}"))))
        .collect()
}

fn auto_reductions(tower: &FieldTower) -> Result<Vec<PrimeReduction>, RunError> {
    PrimeReduction::select(tower, AUTO_PRIME_FLOOR, AUTO_PRIME_COUNT).map_err(|e| RunError::Config(e.to_string()))
}

fn timed(f: impl FnOnce() -> Outcome) -> (Outcome, u64) {
    let t0 = Instant::now();
    let o = f();
    (o, t0.elapsed().as_millis() as u64)
}

fn guarded<C>(ctx: &Result<C, String>, id: &str, run: impl Fn(&C, &str) -> Outcome) -> Outcome {
    match ctx {
        Ok(c) => run(c, id),
        Err(e) => Outcome::error(json!(null), format!("setup failed: {e}")),
    }
}

fn result(id: &str, desc: &str, mode: &str, outcome: Outcome, wall_ms: u64) -> CheckResult {
    CheckResult {
        id: id.into(),
        description: desc.into(),
        mode: mode.into(),
        probabilistic: mode != "exact",
        expected: outcome.expected,
        observed: outcome.observed,
        pass: outcome.pass,
        wall_ms,
    }
}

fn finish(scenario: &str, kind: &str, primes: Vec<u64>, warnings: Vec<String>, checks: Vec<CheckResult>) -> Report {
    Report {
        scenario: scenario.into(),
        mode: ModeInfo {
            kind: kind.into(),
            primes,
        },
        pass: checks.iter().all(|c| c.pass),
        warnings,
        checks,
    }
}

/// Runs every selected check over each context, combining per-prime
/// outcomes.
fn run_mod_p<C>(
    contexts: &[(u64, Result<C, String>)],
    checks: &[(&str, &str)],
    run: impl Fn(&C, &str) -> Outcome,
) -> Vec<CheckResult> {
    checks
        .iter()
        .map(|&(id, desc)| {
            let mut wall = 0;
            let mut per = Vec::new();
            for (p, ctx) in contexts {
                let (o, ms) = timed(|| guarded(ctx, id, &run));
                wall += ms;
                per.push((*p, o));
            }
            result(id, desc, "mod-p", combine_primes(per), wall)
        })
        .collect()
}

pub fn run_x40(input: &X40Input, opts: &RunOptions) -> Result<Report, RunError> {
    let checks = select(&x40::CHECKS, &opts.checks)?;
    let parsed = x40::Parsed::new(input)?;
    match &opts.mode {
        ModeSpec::Default | ModeSpec::Exact => {
            let ctx = x40::Context::new(&parsed, &Exact(input.tower.clone()), opts.all_partitions);
            let results = checks
                .iter()
                .map(|&(id, desc)| {
                    let (o, ms) = timed(|| guarded(&ctx, id, |c, id| c.run(id)));
                    result(id, desc, "exact", o, ms)
                })
                .collect();
            Ok(finish("x40", "exact", Vec::new(), Vec::new(), results))
        }
        ModeSpec::ModP(primes) => {
            let reds = reductions(&input.tower, primes)?;
            let contexts: Vec<_> = reds
                .iter()
                .map(|r| (r.prime(), x40::Context::new(&parsed, r, opts.all_partitions)))
                .collect();
            let results = run_mod_p(&contexts, &checks, |c, id| c.run(id));
            Ok(finish("x40", "mod-p", primes.clone(), Vec::new(), results))
        }
    }
}

pub fn run_y48(input: &Y48Input, opts: &RunOptions) -> Result<Report, RunError> {
    let checks = select(&y48::CHECKS, &opts.checks)?;
    let parsed = y48::Parsed::new(input)?;
    let exact_ctx = || y48::Context::new(&parsed, &Exact(input.tower.clone()));
    match &opts.mode {
        ModeSpec::Exact => {
            let warning = "exact mode over the degree-8 tower: Y2-Y4 compute a Groebner basis in 7 variables over this field and are slow".to_string();
            eprintln!("warning: {warning}");
            let ctx = exact_ctx();
            let results = checks
                .iter()
                .map(|&(id, desc)| {
                    let (o, ms) = timed(|| guarded(&ctx, id, |c, id| c.run(id)));
                    result(id, desc, "exact", o, ms)
                })
                .collect();
            Ok(finish("y48", "exact", Vec::new(), vec![warning], results))
        }
        ModeSpec::ModP(primes) => {
            let reds = reductions(&input.tower, primes)?;
            let contexts: Vec<_> = reds.iter().map(|r| (r.prime(), y48::Context::new(&parsed, r))).collect();
            let results = run_mod_p(&contexts, &checks, |c, id| c.run(id));
            Ok(finish("y48", "mod-p", primes.clone(), Vec::new(), results))
        }
        ModeSpec::Default => {
            let reds = auto_reductions(&input.tower)?;
            let primes: Vec<u64> = reds.iter().map(|r| r.prime()).collect();
            let contexts: Vec<_> = reds.iter().map(|r| (r.prime(), y48::Context::new(&parsed, r))).collect();
            let mut results = run_mod_p(&contexts, &checks, |c, id| c.run(id));
            if let Some(y1) = results.iter_mut().find(|r| r.id == "Y1") {
                let ctx = exact_ctx();
                let (exact, ms) = timed(|| guarded(&ctx, "Y1", |c, id| c.run(id)));
                y1.observed = json!({ "exact": exact.observed, "mod_p": y1.observed });
                y1.pass &= exact.pass;
                y1.mode = "exact+mod-p".into();
                y1.probabilistic = false;
                y1.wall_ms += ms;
            }
            Ok(finish("y48", "mod-p", primes, Vec::new(), results))
        }
    }
}
