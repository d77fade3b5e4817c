//! Numerical models of a Roegenian economy: an economy structured
//! isomorphically to thermodynamics.
//!
//! The state space is R^5 with coordinates (G, I, E, P, Q) and admissible
//! evolutions annihilate the Gibbs-Pfaff form `dG - I dE + P dQ`. On top
//! of this structure the crate provides:
//!
//! * [`contact`] - the Pfaff form, horizontal frame and dual coframe,
//!   normality checks, and line integrals of growth and wealth;
//! * [`group`] - the commutative and Carnot-style composition laws, the
//!   step-2 nilpotent Lie algebra and nilpotency/associativity audits;
//! * [`subriemannian`] - the induced metric on (G, I, E, P), closed-form
//!   and finite-difference connection coefficients, RK4 geodesics and
//!   the horizontal reconstruction of Q;
//! * [`equilibrium`] - two-phase equilibrium (Newton solver plus a
//!   brute-force entropy-maximization check), weighted union balance
//!   certificates and the entropy-law audits;
//! * [`horizon`] - the RN, Kerr and BTZ horizon surfaces with forward
//!   and inverse closed forms, domain inequalities and marginal partials.
//!
//! All operations are pure functions on immutable values and safe for
//! concurrent use.

pub mod contact;
pub mod equilibrium;
pub mod error;
pub mod group;
pub mod horizon;
pub mod subriemannian;

pub use contact::{Curve, StatePoint, TangentVector};
pub use equilibrium::{PhaseModel, PhaseSplit, Totals, TwoPhaseSolution, UnionConfig, UnionSystem};
pub use error::{Error, Result};
pub use group::{AlgebraVector, GroupElement};
pub use horizon::{ChargeSet, HorizonFamily, HorizonKind, Labeling};
pub use subriemannian::{ChristoffelTable, GeodesicState, MetricTensor, ReducedPoint, Trajectory};
