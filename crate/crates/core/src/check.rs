//! Check registry: every verification is a named, pure function of the run
//! parameters returning a report or a typed failure.

use crate::exactfield::Rat;
use crate::multipoly::PolyError;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("identity failed: {what}: {residual}")]
    IdentityFailed { what: String, residual: String },
    #[error("group order {got}, expected {expected}")]
    GroupOrderMismatch { expected: usize, got: usize },
    #[error("point {0} failed")]
    PointFailed(usize),
    #[error("no convergence for row {0}")]
    NoConvergence(String),
    #[error("parameters not on F+ = 0 or F- = 0")]
    NotOnCurve,
    #[error("degenerate parameters")]
    DegenerateParameters,
    #[error("point outside the chart of the open-set formula")]
    OutsideChart,
    #[error("dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("relation failed: {0}")]
    RelationFailed(String),
    #[error("character mismatch on class {0}")]
    CharacterMismatch(String),
    #[error("curve {0} failed")]
    CurveFailed(String),
    #[error("minor {0} does not collapse to a monomial")]
    CollapseFailed(String),
    #[error("{0} not divisible")]
    NotDivisible(String),
    #[error("factorization failed for {0}")]
    FactorizationFailed(String),
    #[error("divisor mismatch for {0}")]
    DivisorMismatch(String),
    #[error("decomposition failed for {0}")]
    DecompositionFailed(String),
    #[error("class mismatch: {0}")]
    ClassMismatch(String),
    #[error("Gram matrix mismatch")]
    GramMismatch,
    #[error("chain step failed: {0}")]
    ChainFailed(String),
    #[error("rank {got}, expected {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("count of {what}: {got}, expected {expected}")]
    CountMismatch { what: String, expected: i64, got: i64 },
    #[error("restriction mismatch: {0}")]
    RestrictionMismatch(String),
    #[error("node check failed at {0}")]
    NodeFailed(String),
    #[error("{0} is not a fifth power")]
    NotAFifthPower(String),
    #[error("arithmetic mismatch: {0}")]
    ArithmeticMismatch(String),
    #[error("numeric tolerance exceeded: {0}")]
    Tolerance(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type VResult<T> = Result<T, VerifyError>;

/// Free-form lines describing what a check established.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub lines: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn text(&self) -> String {
        self.lines.join("; ")
    }
}

#[derive(Clone, Debug)]
pub struct Params {
    pub psi5: Rat,
    pub seed: u64,
    pub samples: usize,
    pub precision: u32,
}

impl Default for Params {
    fn default() -> Self {
        Params { psi5: Rat::one() / Rat::from_integer(2.into()), seed: 0, samples: 25, precision: 128 }
    }
}

pub struct Check {
    pub id: &'static str,
    pub provenance: &'static str,
    pub run: fn(&Params) -> VResult<Report>,
}

pub fn ensure(cond: bool, err: impl FnOnce() -> VerifyError) -> VResult<()> {
    if cond {
        Ok(())
    } else {
        Err(err())
    }
}

pub fn identity(what: &str, residual: &crate::multipoly::MPoly) -> VResult<()> {
    ensure(residual.is_zero(), || {
        let mut s = residual.to_string();
        if s.len() > 400 {
            s.truncate(400);
            s.push_str(" ...");
        }
        VerifyError::IdentityFailed { what: what.to_string(), residual: s }
    })
}

/// Every registered check, in a stable order.
pub fn all_checks() -> Vec<Check> {
    let mut v = Vec::new();
    v.extend(crate::dworklines::checks());
    v.extend(crate::delpezzo::checks());
    v.extend(crate::plueckerdiv::checks());
    v.extend(crate::picard::checks());
    v.extend(crate::fibers::checks());
    v
}
