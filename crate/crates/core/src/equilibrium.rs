//! Phase equilibrium of an isolated two-phase economy and balance
//! certification for unions of independent economies.
//!
//! A phase is described per economic mole by a molar potential g(e, q)
//! with stability `I = dg/de` and price `P = -dg/dq`. An isolated system
//! conserves total growth G, total production Q and the mole count m;
//! at equilibrium both phases share I, P and the Gibbs-type potential
//! `mu = g + P q - I e`, and total entropy `m1 e1 + m2 e2` is maximal.
//!
//! The union analysis certifies the weighted balance conditions: with
//! weight families (alpha, beta, gamma), the ratios `(alpha_i/beta_i) I_i`
//! and `(alpha_i/gamma_i) P_i` must be constant across member systems.
//! The Lagrange multipliers of the underlying constrained problem are
//! `lambda^i = -alpha^i` plus one multiplier per conserved aggregate.

use nalgebra::{SMatrix, SVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Residual norm below which the Newton iteration is considered converged.
const NEWTON_TOL: f64 = 1e-12;
const NEWTON_MAX_ITER: usize = 100;
const NEWTON_MAX_HALVINGS: usize = 20;

/// Tolerance on weight-family sums and on the balance deviations.
pub const BALANCE_TOL: f64 = 1e-9;

/// Entropy samples may not decrease by more than this between steps.
pub const ENTROPY_DECREASE_TOL: f64 = 1e-12;
/// Stability below this threshold must force entropy below
/// [`THIRD_LAW_ENTROPY_TOL`].
pub const THIRD_LAW_STABILITY_TOL: f64 = 1e-9;
pub const THIRD_LAW_ENTROPY_TOL: f64 = 1e-6;

/// Quadratic molar potential
/// `g(e, q) = a/2 (e - e0)^2 + b/2 (q - q0)^2 + g0` with `a, b > 0`.
///
/// Stability and price follow as `I = a (e - e0)` and `P = -b (q - q0)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseModel {
    pub a: f64,
    pub b: f64,
    pub e0: f64,
    pub q0: f64,
    pub g0: f64,
}

impl PhaseModel {
    pub fn new(a: f64, b: f64, e0: f64, q0: f64, g0: f64) -> Result<Self> {
        let model = Self { a, b, e0, q0, g0 };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.a, self.b, self.e0, self.q0, self.g0]
            .iter()
            .all(|v| v.is_finite());
        if !finite || self.a <= 0.0 || self.b <= 0.0 {
            return Err(Error::InvalidInput(
                "phase model requires finite parameters with a > 0 and b > 0".into(),
            ));
        }
        Ok(())
    }

    /// Molar potential g(e, q).
    pub fn potential(&self, e: f64, q: f64) -> f64 {
        0.5 * self.a * (e - self.e0) * (e - self.e0)
            + 0.5 * self.b * (q - self.q0) * (q - self.q0)
            + self.g0
    }

    /// Internal politics stability `I = dg/de`.
    pub fn stability(&self, e: f64, _q: f64) -> f64 {
        self.a * (e - self.e0)
    }

    /// Price level `P = -dg/dq`.
    pub fn price(&self, _e: f64, q: f64) -> f64 {
        -self.b * (q - self.q0)
    }

    /// Gibbs-type economic potential `mu = g + P q - I e`, shared by both
    /// phases at equilibrium.
    pub fn gibbs_mu(&self, e: f64, q: f64) -> f64 {
        self.potential(e, q) + self.price(e, q) * q - self.stability(e, q) * e
    }
}

/// Mole counts and molar coordinates of a two-phase candidate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseSplit {
    pub m1: f64,
    pub e1: f64,
    pub q1: f64,
    pub m2: f64,
    pub e2: f64,
    pub q2: f64,
}

impl PhaseSplit {
    pub fn new(m1: f64, e1: f64, q1: f64, m2: f64, e2: f64, q2: f64) -> Self {
        Self {
            m1,
            e1,
            q1,
            m2,
            e2,
            q2,
        }
    }

    /// Total entropy `m1 e1 + m2 e2`, the quantity equilibrium maximizes.
    pub fn total_entropy(&self) -> f64 {
        self.m1 * self.e1 + self.m2 * self.e2
    }
}

/// Conserved totals of the isolated system.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Totals {
    pub g_tot: f64,
    pub q_tot: f64,
    pub m_tot: f64,
}

impl Totals {
    pub fn new(g_tot: f64, q_tot: f64, m_tot: f64) -> Result<Self> {
        if !(g_tot.is_finite() && q_tot.is_finite() && m_tot.is_finite()) || m_tot <= 0.0 {
            return Err(Error::InvalidInput(
                "totals must be finite with m_tot > 0".into(),
            ));
        }
        Ok(Self {
            g_tot,
            q_tot,
            m_tot,
        })
    }
}

/// The six equilibrium residuals: three conservation equations followed
/// by equality of stability, price and Gibbs potential across phases.
pub fn two_phase_residual(
    models: (&PhaseModel, &PhaseModel),
    s: &PhaseSplit,
    t: &Totals,
) -> [f64; 6] {
    let (m1, m2) = models;
    [
        s.m1 + s.m2 - t.m_tot,
        s.m1 * m1.potential(s.e1, s.q1) + s.m2 * m2.potential(s.e2, s.q2) - t.g_tot,
        s.m1 * s.q1 + s.m2 * s.q2 - t.q_tot,
        m1.stability(s.e1, s.q1) - m2.stability(s.e2, s.q2),
        m1.price(s.e1, s.q1) - m2.price(s.e2, s.q2),
        m1.gibbs_mu(s.e1, s.q1) - m2.gibbs_mu(s.e2, s.q2),
    ]
}

fn residual_norm(r: &[f64; 6]) -> f64 {
    r.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Converged equilibrium with solver diagnostics.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TwoPhaseSolution {
    pub split: PhaseSplit,
    pub residual: [f64; 6],
    pub residual_norm: f64,
    pub iterations: usize,
    /// Set when the two models are identical, in which case the mole
    /// split is indeterminate and gets pinned at m1 = m2 = m_tot/2.
    pub degenerate: bool,
    pub entropy: f64,
}

fn jacobian(models: (&PhaseModel, &PhaseModel), s: &PhaseSplit) -> SMatrix<f64, 6, 6> {
    let (m1, m2) = models;
    let i1 = m1.stability(s.e1, s.q1);
    let i2 = m2.stability(s.e2, s.q2);
    let p1 = m1.price(s.e1, s.q1);
    let p2 = m2.price(s.e2, s.q2);
    let g1 = m1.potential(s.e1, s.q1);
    let g2 = m2.potential(s.e2, s.q2);

    // Column order: m1, e1, q1, m2, e2, q2.
    SMatrix::<f64, 6, 6>::from_rows(&[
        [1.0, 0.0, 0.0, 1.0, 0.0, 0.0].into(),
        [g1, s.m1 * i1, -s.m1 * p1, g2, s.m2 * i2, -s.m2 * p2].into(),
        [s.q1, 0.0, s.m1, s.q2, 0.0, s.m2].into(),
        [0.0, m1.a, 0.0, 0.0, -m2.a, 0.0].into(),
        [0.0, 0.0, -m1.b, 0.0, 0.0, m2.b].into(),
        [
            0.0,
            -m1.a * s.e1,
            -m1.b * s.q1,
            0.0,
            m2.a * s.e2,
            m2.b * s.q2,
        ]
        .into(),
    ])
}

/// Solves the identical-model case in closed form: the mole split is
/// pinned at m_tot/2 per phase and the molar state follows from the
/// conserved averages, picking the entropy-maximizing root.
fn solve_degenerate(model: &PhaseModel, t: &Totals) -> Result<TwoPhaseSolution> {
    let m_half = 0.5 * t.m_tot;
    let q_bar = t.q_tot / t.m_tot;
    let g_bar = t.g_tot / t.m_tot;
    let radicand = 2.0
        * (g_bar - model.g0 - 0.5 * model.b * (q_bar - model.q0) * (q_bar - model.q0))
        / model.a;
    if radicand < 0.0 {
        return Err(Error::NoConvergence {
            iterations: 0,
            residual: f64::INFINITY,
        });
    }
    let e = model.e0 + radicand.sqrt();
    let split = PhaseSplit::new(m_half, e, q_bar, m_half, e, q_bar);
    let residual = two_phase_residual((model, model), &split, t);
    Ok(TwoPhaseSolution {
        split,
        residual_norm: residual_norm(&residual),
        residual,
        iterations: 0,
        degenerate: true,
        entropy: split.total_entropy(),
    })
}

/// Damped Newton iteration on [`two_phase_residual`].
///
/// The step is halved (up to 20 times) until the residual norm decreases
/// and both mole counts stay positive. Identical models route through
/// the pinned symmetric solution.
pub fn two_phase_solve(
    models: (&PhaseModel, &PhaseModel),
    t: &Totals,
    guess: &PhaseSplit,
) -> Result<TwoPhaseSolution> {
    models.0.validate()?;
    models.1.validate()?;
    if guess.m1 <= 0.0 || guess.m2 <= 0.0 {
        return Err(Error::InvalidInput(
            "initial guess needs positive mole counts".into(),
        ));
    }
    if models.0 == models.1 {
        return solve_degenerate(models.0, t);
    }

    let mut x = SVector::<f64, 6>::from_column_slice(&[
        guess.m1, guess.e1, guess.q1, guess.m2, guess.e2, guess.q2,
    ]);
    let to_split = |x: &SVector<f64, 6>| PhaseSplit::new(x[0], x[1], x[2], x[3], x[4], x[5]);

    let mut split = to_split(&x);
    let mut residual = two_phase_residual(models, &split, t);
    let mut norm = residual_norm(&residual);

    for iter in 0..NEWTON_MAX_ITER {
        if norm <= NEWTON_TOL {
            return Ok(TwoPhaseSolution {
                split,
                residual,
                residual_norm: norm,
                iterations: iter,
                degenerate: false,
                entropy: split.total_entropy(),
            });
        }

        let jac = jacobian(models, &split);
        let rhs = -SVector::<f64, 6>::from_column_slice(&residual);
        let dx = jac.lu().solve(&rhs).ok_or(Error::DegenerateJacobian)?;

        let mut alpha = 1.0;
        let mut accepted = false;
        for _ in 0..=NEWTON_MAX_HALVINGS {
            let candidate = x + alpha * dx;
            let cand_split = to_split(&candidate);
            if cand_split.m1 > 0.0 && cand_split.m2 > 0.0 {
                let cand_residual = two_phase_residual(models, &cand_split, t);
                let cand_norm = residual_norm(&cand_residual);
                if cand_norm < norm {
                    x = candidate;
                    split = cand_split;
                    residual = cand_residual;
                    norm = cand_norm;
                    accepted = true;
                    break;
                }
            }
            alpha *= 0.5;
        }
        if !accepted {
            return Err(Error::NoConvergence {
                iterations: iter,
                residual: norm,
            });
        }
    }

    if norm <= NEWTON_TOL {
        return Ok(TwoPhaseSolution {
            split,
            residual,
            residual_norm: norm,
            iterations: NEWTON_MAX_ITER,
            degenerate: false,
            entropy: split.total_entropy(),
        });
    }
    Err(Error::NoConvergence {
        iterations: NEWTON_MAX_ITER,
        residual: norm,
    })
}

/// Rectangular search region for the brute-force oracle, over the free
/// variables (m1, e1, q1, e2); m2 and q2 are eliminated through the mole
/// and production conservation equations.
#[derive(Clone, Copy, Debug)]
pub struct SearchBox {
    pub m1: (f64, f64),
    pub e1: (f64, f64),
    pub q1: (f64, f64),
    pub e2: (f64, f64),
}

impl SearchBox {
    /// Box centered on a split, sized for local optimality checks.
    pub fn around(split: &PhaseSplit, m_tot: f64, radius: f64) -> Self {
        let margin = 1e-3 * m_tot;
        Self {
            m1: (
                (split.m1 - radius).max(margin),
                (split.m1 + radius).min(m_tot - margin),
            ),
            e1: (split.e1 - radius, split.e1 + radius),
            q1: (split.q1 - radius, split.q1 + radius),
            e2: (split.e2 - radius, split.e2 + radius),
        }
    }
}

/// Resolution of the refining grid search.
#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    /// Grid points per axis and refinement level (>= 3).
    pub points_per_axis: usize,
    /// Refinement stops once every axis step falls below this.
    pub target_step: f64,
    /// Weight of the squared growth-conservation violation.
    pub penalty_weight: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            points_per_axis: 9,
            target_step: 1e-3,
            penalty_weight: 1e6,
        }
    }
}

/// Outcome of the brute-force entropy maximization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropyMaxResult {
    pub split: PhaseSplit,
    /// Total entropy at the best grid point.
    pub entropy: f64,
    /// Residual of the growth conservation equation at the best point.
    pub growth_violation: f64,
    /// Set when the maximizer sits on the boundary of the supplied box,
    /// which signals a single-phase-dominant configuration.
    pub on_boundary: bool,
}

/// Maximizes `m1 e1 + m2 e2` by penalized grid search with successive
/// refinement; serves as an independent check on [`two_phase_solve`].
///
/// Mole and production conservation are eliminated exactly; the growth
/// equation enters as a quadratic penalty.
pub fn brute_force_entropy_max(
    models: (&PhaseModel, &PhaseModel),
    t: &Totals,
    bbox: &SearchBox,
    grid: &GridSpec,
) -> Result<EntropyMaxResult> {
    if grid.points_per_axis < 3 || grid.target_step <= 0.0 || grid.penalty_weight <= 0.0 {
        return Err(Error::InvalidInput(
            "grid spec needs >= 3 points per axis, positive target step and penalty".into(),
        ));
    }
    let margin = 1e-9 * t.m_tot;
    let outer_m1 = (bbox.m1.0.max(margin), bbox.m1.1.min(t.m_tot - margin));
    let outer = [outer_m1, bbox.e1, bbox.q1, bbox.e2];
    if outer
        .iter()
        .any(|(lo, hi)| !lo.is_finite() || !hi.is_finite() || lo >= hi)
    {
        return Err(Error::EmptyFeasibleSet);
    }

    let n = grid.points_per_axis;
    let mut boxes = outer;
    let mut best: Option<([f64; 4], f64)> = None; // (point, penalized objective)

    for _level in 0..60 {
        let steps: Vec<f64> = boxes
            .iter()
            .map(|(lo, hi)| (hi - lo) / (n - 1) as f64)
            .collect();
        let mut level_best: Option<([f64; 4], f64)> = None;
        for i0 in 0..n {
            let m1 = boxes[0].0 + steps[0] * i0 as f64;
            let m2 = t.m_tot - m1;
            if m2 <= 0.0 || m1 <= 0.0 {
                continue;
            }
            for i1 in 0..n {
                let e1 = boxes[1].0 + steps[1] * i1 as f64;
                for i2 in 0..n {
                    let q1 = boxes[2].0 + steps[2] * i2 as f64;
                    let q2 = (t.q_tot - m1 * q1) / m2;
                    for i3 in 0..n {
                        let e2 = boxes[3].0 + steps[3] * i3 as f64;
                        let violation = m1 * models.0.potential(e1, q1)
                            + m2 * models.1.potential(e2, q2)
                            - t.g_tot;
                        let objective =
                            m1 * e1 + m2 * e2 - grid.penalty_weight * violation * violation;
                        if objective.is_finite() && level_best.is_none_or(|(_, f)| objective > f) {
                            level_best = Some(([m1, e1, q1, e2], objective));
                        }
                    }
                }
            }
        }

        let (center, objective) = level_best.ok_or(Error::EmptyFeasibleSet)?;
        if best.is_none_or(|(_, f)| objective > f) {
            best = Some((center, objective));
        }

        let max_step = steps.iter().cloned().fold(0.0_f64, f64::max);
        if max_step <= grid.target_step {
            break;
        }
        // Shrink each axis to two steps around the current best, clamped
        // to the outer box.
        for (axis, b) in boxes.iter_mut().enumerate() {
            let half = 2.0 * steps[axis].max(grid.target_step / 4.0);
            let lo = (center[axis] - half).max(outer[axis].0);
            let hi = (center[axis] + half).min(outer[axis].1);
            *b = (lo, hi);
        }
    }

    let ([m1, e1, q1, e2], _) = best.ok_or(Error::EmptyFeasibleSet)?;
    let m2 = t.m_tot - m1;
    let q2 = (t.q_tot - m1 * q1) / m2;
    let split = PhaseSplit::new(m1, e1, q1, m2, e2, q2);
    let violation = m1 * models.0.potential(e1, q1) + m2 * models.1.potential(e2, q2) - t.g_tot;

    let final_step = grid.target_step.max(1e-12);
    let coords = [m1, e1, q1, e2];
    let on_boundary = coords
        .iter()
        .zip(outer.iter())
        .any(|(c, (lo, hi))| (c - lo).abs() <= final_step || (hi - c).abs() <= final_step);

    Ok(EntropyMaxResult {
        split,
        entropy: split.total_entropy(),
        growth_violation: violation,
        on_boundary,
    })
}

/// One member economy of a union: its stability and price level.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnionSystem {
    pub stability: f64,
    pub price: f64,
}

/// N member systems with positive weight families (alpha, beta, gamma),
/// each summing to one.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnionConfig {
    systems: Vec<UnionSystem>,
    alpha: Vec<f64>,
    beta: Vec<f64>,
    gamma: Vec<f64>,
}

impl UnionConfig {
    pub fn new(
        systems: Vec<UnionSystem>,
        alpha: Vec<f64>,
        beta: Vec<f64>,
        gamma: Vec<f64>,
    ) -> Result<Self> {
        let n = systems.len();
        if n == 0 {
            return Err(Error::InvalidInput(
                "a union needs at least one system".into(),
            ));
        }
        for (name, w) in [("alpha", &alpha), ("beta", &beta), ("gamma", &gamma)] {
            if w.len() != n {
                return Err(Error::InvalidInput(format!(
                    "{name} weights must have one entry per system"
                )));
            }
            if w.iter().any(|v| !v.is_finite() || *v <= 0.0) {
                return Err(Error::InvalidInput(format!(
                    "{name} weights must be positive"
                )));
            }
            let sum: f64 = w.iter().sum();
            if (sum - 1.0).abs() > BALANCE_TOL {
                return Err(Error::InvalidInput(format!(
                    "{name} weights sum to {sum}, expected 1"
                )));
            }
        }
        if systems
            .iter()
            .any(|s| !s.stability.is_finite() || !s.price.is_finite())
        {
            return Err(Error::InvalidInput("system states must be finite".into()));
        }
        Ok(Self {
            systems,
            alpha,
            beta,
            gamma,
        })
    }

    /// Uniform weights 1/N on every family.
    pub fn uniform(systems: Vec<UnionSystem>) -> Result<Self> {
        let n = systems.len();
        if n == 0 {
            return Err(Error::InvalidInput(
                "a union needs at least one system".into(),
            ));
        }
        let w = vec![1.0 / n as f64; n];
        Self::new(systems, w.clone(), w.clone(), w)
    }

    pub fn len(&self) -> usize {
        self.systems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.systems.is_empty()
    }

    pub fn systems(&self) -> &[UnionSystem] {
        &self.systems
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[f64] {
        &self.beta
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }
}

/// Mean computed relative to the first element, so families of identical
/// values keep an exact mean (and exact zero deviations).
fn centered_mean(values: &[f64]) -> f64 {
    let first = values[0];
    let sum: f64 = values.iter().map(|v| v - first).sum();
    first + sum / values.len() as f64
}

/// Balance report for a union configuration.
///
/// The common ratio is reported with the sign of the multiplier relation
/// (`-alpha_i I_i / beta_i` constant), which is negative for positive
/// weights and states, and alongside its absolute value.
#[derive(Clone, Debug, Serialize)]
pub struct UnionBalanceReport {
    /// `(alpha_i / beta_i) I_i` per system.
    pub stability_ratios: Vec<f64>,
    /// `(alpha_i / gamma_i) P_i` per system.
    pub price_ratios: Vec<f64>,
    pub stability_deviation: f64,
    pub price_deviation: f64,
    pub balanced: bool,
    pub common_stability: Option<f64>,
    pub common_stability_abs: Option<f64>,
    pub common_price: Option<f64>,
    pub common_price_abs: Option<f64>,
}

/// Evaluates the weighted balance conditions: both ratio families must be
/// constant. Uniform weights reduce them to equal stabilities and equal
/// prices across all members.
pub fn union_residual(cfg: &UnionConfig) -> UnionBalanceReport {
    let u: Vec<f64> = cfg
        .systems
        .iter()
        .zip(cfg.alpha.iter().zip(cfg.beta.iter()))
        .map(|(s, (a, b))| (a * s.stability) / b)
        .collect();
    let v: Vec<f64> = cfg
        .systems
        .iter()
        .zip(cfg.alpha.iter().zip(cfg.gamma.iter()))
        .map(|(s, (a, g))| (a * s.price) / g)
        .collect();

    let u_mean = centered_mean(&u);
    let v_mean = centered_mean(&v);
    let u_dev = u.iter().map(|x| (x - u_mean).abs()).fold(0.0, f64::max);
    let v_dev = v.iter().map(|x| (x - v_mean).abs()).fold(0.0, f64::max);
    let balanced = u_dev <= BALANCE_TOL && v_dev <= BALANCE_TOL;

    UnionBalanceReport {
        stability_ratios: u,
        price_ratios: v,
        stability_deviation: u_dev,
        price_deviation: v_dev,
        balanced,
        common_stability: balanced.then_some(-u_mean),
        common_stability_abs: balanced.then_some(u_mean.abs()),
        common_price: balanced.then_some(-v_mean),
        common_price_abs: balanced.then_some(v_mean.abs()),
    }
}

/// Multipliers and stationarity residuals of the weighted balance
/// problem.
#[derive(Clone, Debug, Serialize)]
pub struct LagrangeCertificate {
    /// `lambda^i = -alpha^i`.
    pub lambda: Vec<f64>,
    /// Multiplier of the weighted entropy constraint.
    pub lambda_entropy: f64,
    /// Multiplier of the weighted production constraint.
    pub lambda_production: f64,
    /// Per-system residuals of the three stationarity equations.
    pub stationarity: Vec<[f64; 3]>,
    pub max_residual: f64,
}

/// Builds the multiplier certificate: `lambda^i = -alpha^i`, the
/// aggregate multipliers from the ratio means, and the stationarity
/// residuals
/// `(lambda^i + alpha^i, -lambda^i I_i + lambda28 beta^i, lambda^i P_i + lambda29 gamma^i)`,
/// which vanish exactly at balanced configurations.
pub fn lagrange_certificate(cfg: &UnionConfig) -> LagrangeCertificate {
    let lambda: Vec<f64> = cfg.alpha.iter().map(|a| -a).collect();
    let u: Vec<f64> = cfg
        .systems
        .iter()
        .zip(cfg.alpha.iter().zip(cfg.beta.iter()))
        .map(|(s, (a, b))| (a * s.stability) / b)
        .collect();
    let v: Vec<f64> = cfg
        .systems
        .iter()
        .zip(cfg.alpha.iter().zip(cfg.gamma.iter()))
        .map(|(s, (a, g))| (a * s.price) / g)
        .collect();
    let lambda_entropy = -centered_mean(&u);
    let lambda_production = centered_mean(&v);

    let mut stationarity = Vec::with_capacity(cfg.len());
    let mut max_residual: f64 = 0.0;
    for (idx, s) in cfg.systems.iter().enumerate() {
        let eq1 = lambda[idx] + cfg.alpha[idx];
        let eq2 = -lambda[idx] * s.stability + lambda_entropy * cfg.beta[idx];
        let eq3 = lambda[idx] * s.price + lambda_production * cfg.gamma[idx];
        for r in [eq1, eq2, eq3] {
            max_residual = max_residual.max(r.abs());
        }
        stationarity.push([eq1, eq2, eq3]);
    }

    LagrangeCertificate {
        lambda,
        lambda_entropy,
        lambda_production,
        stationarity,
        max_residual,
    }
}

/// Indices where an entropy series decreases by more than
/// [`ENTROPY_DECREASE_TOL`]; empty on any admissible evolution of an
/// isolated system.
pub fn entropy_law_audit(entropy: &[f64]) -> Vec<usize> {
    entropy
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] < w[0] - ENTROPY_DECREASE_TOL)
        .map(|(k, _)| k + 1)
        .collect()
}

/// Indices of (stability, entropy) pairs where stability has collapsed
/// (`I <= 1e-9`) while entropy remains above threshold; vanishing
/// stability must force vanishing entropy.
pub fn third_law_audit(samples: &[(f64, f64)]) -> Vec<usize> {
    samples
        .iter()
        .enumerate()
        .filter(|(_, (stability, entropy))| {
            *stability <= THIRD_LAW_STABILITY_TOL && *entropy > THIRD_LAW_ENTROPY_TOL
        })
        .map(|(k, _)| k)
        .collect()
}
