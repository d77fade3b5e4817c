//! The five-dimensional economic state space and its contact structure.
//!
//! States carry coordinates (G, I, E, P, Q): growth potential, internal
//! politics stability, entropy, price level and volume/structure/quality.
//! Admissible evolutions are constrained by the Gibbs-Pfaff form
//!
//! ```text
//! eta = dG - I dE + P dQ,
//! ```
//!
//! whose kernel is spanned by the frame fields
//!
//! ```text
//! X1 = d/dI,   X2 = I d/dG + d/dE,   X3 = d/dP,   X4 = d/dQ - P d/dG,
//! ```
//!
//! with dual coframe `w1 = dI`, `w2 = dE`, `w3 = dP`,
//! `w4 = -(1/P) dG + (I/P) dE` away from the singular locus P = 0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point (G, I, E, P, Q) of the economic state space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct StatePoint {
    /// Growth potential.
    pub g: f64,
    /// Internal politics stability.
    pub i: f64,
    /// Entropy.
    pub e: f64,
    /// Price level (inflation).
    pub p: f64,
    /// Volume, structure, quality.
    pub q: f64,
}

impl StatePoint {
    pub fn new(g: f64, i: f64, e: f64, p: f64, q: f64) -> Self {
        Self { g, i, e, p, q }
    }

    pub fn is_finite(&self) -> bool {
        self.g.is_finite()
            && self.i.is_finite()
            && self.e.is_finite()
            && self.p.is_finite()
            && self.q.is_finite()
    }
}

/// A displacement (vG, vI, vE, vP, vQ) at a state point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct TangentVector {
    pub g: f64,
    pub i: f64,
    pub e: f64,
    pub p: f64,
    pub q: f64,
}

impl TangentVector {
    pub fn new(g: f64, i: f64, e: f64, p: f64, q: f64) -> Self {
        Self { g, i, e, p, q }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0, 0.0)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(s * self.g, s * self.i, s * self.e, s * self.p, s * self.q)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.g + other.g,
            self.i + other.i,
            self.e + other.e,
            self.p + other.p,
            self.q + other.q,
        )
    }

    /// Euclidean inner product of the raw components.
    pub fn dot(&self, other: &Self) -> f64 {
        self.g * other.g + self.i * other.i + self.e * other.e + self.p * other.p + self.q * other.q
    }
}

/// A sampled curve t -> (G, I, E, P, Q)(t) with strictly increasing
/// parameter values and at least two samples.
#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    samples: Vec<(f64, StatePoint)>,
}

impl Curve {
    /// Validates the sample list: at least two samples
    /// ([`Error::DegenerateCurve`]) and strictly increasing parameter.
    pub fn new(samples: Vec<(f64, StatePoint)>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::DegenerateCurve);
        }
        for pair in samples.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(Error::InvalidInput(
                    "curve parameter values must be strictly increasing".into(),
                ));
            }
        }
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[(f64, StatePoint)] {
        &self.samples
    }

    pub fn first(&self) -> &(f64, StatePoint) {
        &self.samples[0]
    }

    pub fn last(&self) -> &(f64, StatePoint) {
        &self.samples[self.samples.len() - 1]
    }
}

/// Evaluates the Gibbs-Pfaff form: `eta(v) = vG - I vE + P vQ`.
pub fn pfaff_eval(p: &StatePoint, v: &TangentVector) -> f64 {
    v.g - p.i * v.e + p.p * v.q
}

/// True when `v` annihilates the Gibbs-Pfaff form within `tol`.
///
/// Horizontal displacements are the admissible economic evolutions.
/// Requires `tol > 0`.
pub fn is_horizontal(p: &StatePoint, v: &TangentVector, tol: f64) -> bool {
    pfaff_eval(p, v).abs() <= tol
}

/// The a-th frame field of the constraint distribution, a in 1..=4.
///
/// In (vG, vI, vE, vP, vQ) order: X1 = (0,1,0,0,0), X2 = (I,0,1,0,0),
/// X3 = (0,0,0,1,0), X4 = (-P,0,0,0,1).
pub fn frame_vector(a: usize, p: &StatePoint) -> Result<TangentVector> {
    match a {
        1 => Ok(TangentVector::new(0.0, 1.0, 0.0, 0.0, 0.0)),
        2 => Ok(TangentVector::new(p.i, 0.0, 1.0, 0.0, 0.0)),
        3 => Ok(TangentVector::new(0.0, 0.0, 0.0, 1.0, 0.0)),
        4 => Ok(TangentVector::new(-p.p, 0.0, 0.0, 0.0, 1.0)),
        _ => Err(Error::IndexOutOfRange {
            what: "frame field (1..=4)",
            index: a,
        }),
    }
}

/// Evaluates the a-th dual coframe form on `v`, a in 1..=4.
///
/// `w1 = dI`, `w2 = dE`, `w3 = dP` and `w4 = -(1/P) dG + (I/P) dE`;
/// they satisfy `w^a(X_b) = delta^a_b`. The fourth form requires P != 0.
pub fn dual_form_eval(a: usize, p: &StatePoint, v: &TangentVector) -> Result<f64> {
    match a {
        1 => Ok(v.i),
        2 => Ok(v.e),
        3 => Ok(v.p),
        4 => {
            if p.p == 0.0 {
                return Err(Error::SingularLocus);
            }
            Ok(-v.g / p.p + p.i * v.e / p.p)
        }
        _ => Err(Error::IndexOutOfRange {
            what: "dual frame form (1..=4)",
            index: a,
        }),
    }
}

/// The euclidean normal of the constraint distribution: N = (1, 0, -I, 0, P).
pub fn normal_vector(p: &StatePoint) -> TangentVector {
    TangentVector::new(1.0, 0.0, -p.i, 0.0, p.p)
}

/// Integrates `I dE - P dQ` along the curve with the midpoint rule on
/// consecutive samples (second order).
///
/// For a horizontal curve this approximates the total change of the
/// growth potential G.
pub fn growth_line_integral(c: &Curve) -> f64 {
    let mut total = 0.0;
    for pair in c.samples().windows(2) {
        let (_, a) = pair[0];
        let (_, b) = pair[1];
        let i_mid = 0.5 * (a.i + b.i);
        let p_mid = 0.5 * (a.p + b.p);
        total += i_mid * (b.e - a.e) - p_mid * (b.q - a.q);
    }
    total
}

/// Integrates the elementary wealth `P dQ` along the curve (midpoint rule).
pub fn wealth_line_integral(c: &Curve) -> f64 {
    let mut total = 0.0;
    for pair in c.samples().windows(2) {
        let (_, a) = pair[0];
        let (_, b) = pair[1];
        total += 0.5 * (a.p + b.p) * (b.q - a.q);
    }
    total
}

/// Largest Gibbs-Pfaff residual along the curve, using finite-difference
/// velocities at segment midpoints. Zero (up to discretization error) on
/// horizontal curves.
pub fn horizontality_defect(c: &Curve) -> f64 {
    let mut worst: f64 = 0.0;
    for pair in c.samples().windows(2) {
        let (ta, a) = pair[0];
        let (tb, b) = pair[1];
        let dt = tb - ta;
        let mid = StatePoint::new(
            0.5 * (a.g + b.g),
            0.5 * (a.i + b.i),
            0.5 * (a.e + b.e),
            0.5 * (a.p + b.p),
            0.5 * (a.q + b.q),
        );
        let v = TangentVector::new(
            (b.g - a.g) / dt,
            (b.i - a.i) / dt,
            (b.e - a.e) / dt,
            (b.p - a.p) / dt,
            (b.q - a.q) / dt,
        );
        worst = worst.max(pfaff_eval(&mid, &v).abs());
    }
    worst
}
