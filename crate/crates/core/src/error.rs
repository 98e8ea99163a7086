use thiserror::Error;

/// Errors raised by state construction, the closed-form solver and the numerical oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter `{name}` = {value} is outside its admissible range")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("non-finite value in `{0}`")]
    NonFinite(&'static str),

    #[error("matrix trace {0} differs from 1")]
    NonUnitTrace(f64),

    #[error("Bloch radius {0} exceeds 1 (not a physical state)")]
    NonPhysicalRadius(f64),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("weights do not form a probability vector: {0}")]
    NotOnSimplex(String),

    #[error("state set member {index} has norm {norm}, expected a pure state")]
    NotPureState { index: usize, norm: f64 },

    #[error("state set is empty")]
    EmptySet,

    #[error("state is not exactly decomposable: a - u - v = {0} < 0")]
    NotExactRegion(f64),

    #[error("family parameters t1 = {t1}, t2 = {t2} exceed the admissible budget {budget}")]
    FamilyOutOfRange { t1: f64, t2: f64, budget: f64 },

    #[error("degenerate parameters: {0}")]
    DegenerateParameter(&'static str),

    #[error("coherence k = {k} is outside the reference window ({lower}, {upper}]")]
    OutOfWindow { k: f64, lower: f64, upper: f64 },

    #[error("point with l1 norm {0} lies outside the cross-polytope")]
    OutOfPolytope(f64),

    #[error("grid search supports at most {max} states, got {found}")]
    SetTooLarge { max: usize, found: usize },

    #[error("solver did not converge after {iterations} iterations (gap {gap:e})")]
    NotConverged { iterations: usize, gap: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
