//! Error type shared by every module of the crate.

/// Failure modes of the numerical operations.
///
/// The variants split into three groups that front ends map to distinct
/// exit codes: input validation (`InvalidInput`, `IndexOutOfRange`,
/// `DegenerateCurve`, `StepRejected`, `StepTooLarge`), numerical failure
/// (`NoConvergence`, `DegenerateJacobian`, `SingularApproach`,
/// `EmptyFeasibleSet`) and domain violations (`SingularLocus`,
/// `DomainViolation`, `NonpositiveEntropy`, `EmptyDomainIntersection`).
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The dual frame and the metric blow up on the hyperplane P = 0,
    /// which is treated as a hard domain error rather than a limit.
    #[error("operation undefined on the singular locus P = 0")]
    SingularLocus,

    /// A curve needs at least two samples to be integrated.
    #[error("degenerate curve: fewer than two samples")]
    DegenerateCurve,

    /// A finite-difference step incompatible with the distance to the
    /// singular locus.
    #[error("finite-difference step {h} too large at |P| = {p}")]
    StepTooLarge { h: f64, p: f64 },

    /// Geodesic integration ran into the singular locus.
    #[error("trajectory approached the singular locus at t = {t} (P = {p})")]
    SingularApproach { t: f64, p: f64 },

    /// Invalid integration step (dt must be positive and no larger than
    /// the integration horizon).
    #[error("rejected integration step")]
    StepRejected,

    /// Newton iteration did not reach the residual target.
    #[error("no convergence after {iterations} iterations (residual norm {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    /// The Newton system could not be solved.
    #[error("degenerate Jacobian")]
    DegenerateJacobian,

    /// The brute-force search box contained no feasible candidate.
    #[error("empty feasible set in the supplied search box")]
    EmptyFeasibleSet,

    /// A horizon state violates the model inequality (M >= |Q|,
    /// M >= sqrt(|J|) or M >= |J| depending on the family).
    #[error("state outside the model domain (margin {margin})")]
    DomainViolation { margin: f64 },

    /// The horizon surfaces are parametrized by entropy S > 0.
    #[error("entropy must be positive")]
    NonpositiveEntropy,

    /// No cell of the requested grid lies inside the model domain.
    #[error("no grid cell intersects the model domain")]
    EmptyDomainIntersection,

    /// A frame, form or basis index outside its valid range.
    #[error("index {index} out of range for {what}")]
    IndexOutOfRange { what: &'static str, index: usize },

    /// Any other precondition violation on user-supplied data.
    #[error("{0}")]
    InvalidInput(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
