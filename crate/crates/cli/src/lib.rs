//! Suite selection, concurrent check runner and report serialization.

use std::time::Instant;

use dwork::check::{all_checks, Check, Params};
use dwork::exactfield::Rat;
use dwork::plot::{plot_curves, PlotError, PlotGrid};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub const SCHEMA: u32 = 1;
pub const PRECISION_ENV: &str = "DWORKLINES_PRECISION";
pub const SUITES: [&str; 5] = ["dwork", "dp5", "pluecker", "picard", "fiber"];

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown suite '{0}': no check-id matches")]
    UnknownSuite(String),
    #[error("bad value for {what}: '{value}'")]
    BadArgument { what: &'static str, value: String },
    #[error(transparent)]
    Plot(#[from] PlotError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    #[serde(rename = "check-id")]
    pub check_id: String,
    pub status: Status,
    pub details: String,
    /// Milliseconds.
    pub elapsed: f64,
    pub provenance: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub seed: u64,
    pub results: Vec<CheckResult>,
}

impl RunReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!("{tag} {} ({:.0} ms) [{}]\n", r.check_id, r.elapsed, r.provenance));
            if !r.details.is_empty() {
                out.push_str(&format!("     {}\n", r.details));
            }
        }
        let pass = self.results.iter().filter(|r| r.status == Status::Pass).count();
        out.push_str(&format!("{pass}/{} passed, seed {}\n", self.results.len(), self.seed));
        out
    }
}

/// Checks selected by a suite name or a glob on check-ids, in registry order.
pub fn select(suite: &str) -> Result<Vec<Check>, CliError> {
    let checks = all_checks();
    let picked: Vec<Check> = if suite == "all" {
        checks
    } else if SUITES.contains(&suite) {
        let prefix = format!("{suite}.");
        checks.into_iter().filter(|c| c.id.starts_with(&prefix)).collect()
    } else {
        let pat = glob::Pattern::new(suite).map_err(|_| CliError::UnknownSuite(suite.to_string()))?;
        checks.into_iter().filter(|c| pat.matches(c.id)).collect()
    };
    if picked.is_empty() {
        return Err(CliError::UnknownSuite(suite.to_string()));
    }
    Ok(picked)
}

/// Sampled checks are skipped when zero samples are requested.
fn is_sampled(id: &str) -> bool {
    id.contains(".numeric")
}

fn run_one(c: &Check, params: &Params) -> CheckResult {
    let start = Instant::now();
    let (status, details) = if params.samples == 0 && is_sampled(c.id) {
        (Status::Skipped, "zero samples requested".to_string())
    } else {
        match (c.run)(params) {
            Ok(rep) => (Status::Pass, rep.text()),
            Err(e) => (Status::Fail, e.to_string()),
        }
    };
    CheckResult {
        check_id: c.id.to_string(),
        status,
        details,
        elapsed: start.elapsed().as_secs_f64() * 1e3,
        provenance: c.provenance.to_string(),
    }
}

/// Runs the selected checks concurrently; results keep registry order.
pub fn run(suite: &str, params: &Params) -> Result<RunReport, CliError> {
    let checks = select(suite)?;
    let results = checks.par_iter().map(|c| run_one(c, params)).collect();
    Ok(RunReport { schema: SCHEMA, seed: params.seed, results })
}

/// Precision from the flag, else the environment, else the library default.
pub fn resolve_precision(flag: Option<u32>) -> Result<u32, CliError> {
    if let Some(p) = flag {
        return Ok(p);
    }
    match std::env::var(PRECISION_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::BadArgument { what: PRECISION_ENV, value: v }),
        Err(_) => Ok(Params::default().precision),
    }
}

pub fn parse_rat(s: &str) -> Result<Rat, CliError> {
    s.trim().parse::<Rat>().map_err(|_| CliError::BadArgument { what: "psi5", value: s.to_string() })
}

pub fn plot(psi5: &str, grid: usize, window: f64) -> Result<PlotGrid, CliError> {
    Ok(plot_curves(&parse_rat(psi5)?, grid, window)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!(select("picard").unwrap().len(), 11);
        assert_eq!(select("dp5.*").unwrap().len(), 8);
        assert_eq!(select("all").unwrap().len(), all_checks().len());
        assert!(matches!(select("nosuch.*"), Err(CliError::UnknownSuite(_))));
        assert!(matches!(select("dwork.["), Err(CliError::UnknownSuite(_))));
    }

    #[test]
    fn json_shape() {
        let rep = RunReport {
            schema: SCHEMA,
            seed: 7,
            results: vec![CheckResult {
                check_id: "x.y".into(),
                status: Status::Skipped,
                details: String::new(),
                elapsed: 1.5,
                provenance: "p".into(),
            }],
        };
        let v: serde_json::Value = serde_json::from_str(&rep.to_json().unwrap()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["seed"], 7);
        assert_eq!(v["results"][0]["check-id"], "x.y");
        assert_eq!(v["results"][0]["status"], "skipped");
        assert_eq!(rep.exit_code(), 1);
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rat("1/4").unwrap(), Rat::new(1.into(), 4.into()));
        assert_eq!(parse_rat("1").unwrap(), Rat::from_integer(1.into()));
        assert!(parse_rat("x").is_err());
    }
}
