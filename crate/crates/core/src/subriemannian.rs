//! Riemannian extension of the contact structure on coordinates (G, I, E, P).
//!
//! Declaring the frame fields orthonormal induces the arc element
//!
//! ```text
//! ds^2 = (1/P^2) dG^2 + dI^2 + (1 + I^2/P^2) dE^2 - (2I/P^2) dG dE + dP^2
//! ```
//!
//! on the open set P != 0. Coordinates are indexed 1 = G, 2 = I, 3 = E,
//! 4 = P throughout; the Q coordinate is recovered afterwards by the
//! horizontal lift `Qdot = (I Edot - Gdot) / P`.
//!
//! The connection coefficients are available in closed form
//! ([`christoffel_closed`]) and through an independent finite-difference
//! assembly of `G^k_ij = g^kl (d_i g_lj + d_j g_li - d_l g_ij) / 2`
//! ([`christoffel_fd`]); the two agree to the order of the difference
//! scheme, which pins every closed-form entry to the metric.

// Index contractions read better as explicit loops over tensor indices.
#![allow(clippy::needless_range_loop)]

use serde::{Deserialize, Serialize};

use crate::contact::{Curve, StatePoint};
use crate::error::{Error, Result};

/// Geodesic integration aborts when |P| drops below this guard: the
/// metric components diverge like 1/P^3 on the singular locus.
pub const SINGULAR_P_GUARD: f64 = 1e-6;

/// A point (G, I, E, P) of the reduced state space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct ReducedPoint {
    pub g: f64,
    pub i: f64,
    pub e: f64,
    pub p: f64,
}

impl ReducedPoint {
    pub fn new(g: f64, i: f64, e: f64, p: f64) -> Self {
        Self { g, i, e, p }
    }

    fn coords(&self) -> [f64; 4] {
        [self.g, self.i, self.e, self.p]
    }

    fn from_coords(x: [f64; 4]) -> Self {
        Self::new(x[0], x[1], x[2], x[3])
    }
}

/// Symmetric 4x4 metric (or cometric) components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricTensor(pub [[f64; 4]; 4]);

impl MetricTensor {
    /// Quadratic form g(v, v).
    pub fn quadratic_form(&self, v: &[f64; 4]) -> f64 {
        let mut s = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                s += self.0[i][j] * v[i] * v[j];
            }
        }
        s
    }

    /// Matrix product with another tensor (used by the identity checks).
    pub fn mul(&self, other: &MetricTensor) -> [[f64; 4]; 4] {
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    out[i][j] += self.0[i][k] * other.0[k][j];
                }
            }
        }
        out
    }
}

/// Connection coefficients `G^k_ij`, indexed `[k][i][j]` and symmetric in
/// the lower pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChristoffelTable(pub [[[f64; 4]; 4]; 4]);

impl ChristoffelTable {
    /// Largest absolute entry difference against another table.
    pub fn max_abs_diff(&self, other: &ChristoffelTable) -> f64 {
        let mut worst: f64 = 0.0;
        for k in 0..4 {
            for i in 0..4 {
                for j in 0..4 {
                    worst = worst.max((self.0[k][i][j] - other.0[k][i][j]).abs());
                }
            }
        }
        worst
    }
}

/// Position and velocity of a geodesic in the reduced coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeodesicState {
    pub position: ReducedPoint,
    /// Components (Gdot, Idot, Edot, Pdot).
    pub velocity: [f64; 4],
}

impl GeodesicState {
    pub fn new(position: ReducedPoint, velocity: [f64; 4]) -> Self {
        Self { position, velocity }
    }
}

/// A geodesic trajectory: strictly increasing sample times with the full
/// state (position and velocity) at each sample.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    samples: Vec<(f64, GeodesicState)>,
}

impl Trajectory {
    pub fn new(samples: Vec<(f64, GeodesicState)>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::DegenerateCurve);
        }
        for pair in samples.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(Error::InvalidInput(
                    "trajectory times must be strictly increasing".into(),
                ));
            }
        }
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[(f64, GeodesicState)] {
        &self.samples
    }

    pub fn first(&self) -> &(f64, GeodesicState) {
        &self.samples[0]
    }

    pub fn last(&self) -> &(f64, GeodesicState) {
        &self.samples[self.samples.len() - 1]
    }
}

fn require_regular(p: &ReducedPoint) -> Result<()> {
    if p.p == 0.0 {
        return Err(Error::SingularLocus);
    }
    Ok(())
}

/// Metric components at a point:
/// `g11 = 1/P^2`, `g22 = 1`, `g33 = 1 + I^2/P^2`, `g44 = 1`,
/// `g13 = g31 = -I/P^2`, everything else zero.
pub fn metric_at(p: &ReducedPoint) -> Result<MetricTensor> {
    require_regular(p)?;
    let p2 = p.p * p.p;
    let mut g = [[0.0; 4]; 4];
    g[0][0] = 1.0 / p2;
    g[1][1] = 1.0;
    g[2][2] = 1.0 + p.i * p.i / p2;
    g[3][3] = 1.0;
    g[0][2] = -p.i / p2;
    g[2][0] = g[0][2];
    Ok(MetricTensor(g))
}

/// Inverse metric: `g^11 = P^2 + I^2`, `g^13 = g^31 = I`, `g^33 = 1`,
/// `g^22 = g^44 = 1`. The (G, E) block has determinant 1/P^2, so the
/// inverse stays polynomial.
pub fn cometric_at(p: &ReducedPoint) -> Result<MetricTensor> {
    require_regular(p)?;
    let mut g = [[0.0; 4]; 4];
    g[0][0] = p.p * p.p + p.i * p.i;
    g[1][1] = 1.0;
    g[2][2] = 1.0;
    g[3][3] = 1.0;
    g[0][2] = p.i;
    g[2][0] = p.i;
    Ok(MetricTensor(g))
}

/// Closed-form connection coefficients of the metric.
///
/// The nonzero entries, with lower-index symmetrization, are
///
/// ```text
/// G1_12 = -I/(2P^2)   G1_14 = -1/P            G1_23 = -(P^2 - I^2)/(2P^2)
/// G1_34 = I/P         G2_13 = 1/(2P^2)        G2_33 = -I/P^2
/// G3_12 = -1/(2P^2)   G3_23 = I/(2P^2)        G4_11 = 1/P^3
/// G4_13 = -I/P^3      G4_33 = I^2/P^3
/// ```
pub fn christoffel_closed(p: &ReducedPoint) -> Result<ChristoffelTable> {
    require_regular(p)?;
    let i = p.i;
    let pp = p.p;
    let p2 = pp * pp;
    let p3 = p2 * pp;
    let mut t = [[[0.0; 4]; 4]; 4];
    let mut set = |k: usize, a: usize, b: usize, value: f64| {
        t[k - 1][a - 1][b - 1] = value;
        t[k - 1][b - 1][a - 1] = value;
    };
    set(1, 1, 2, -i / (2.0 * p2));
    set(1, 1, 4, -1.0 / pp);
    set(1, 2, 3, -(p2 - i * i) / (2.0 * p2));
    set(1, 3, 4, i / pp);
    set(2, 1, 3, 1.0 / (2.0 * p2));
    set(2, 3, 3, -i / p2);
    set(3, 1, 2, -1.0 / (2.0 * p2));
    set(3, 2, 3, i / (2.0 * p2));
    set(4, 1, 1, 1.0 / p3);
    set(4, 1, 3, -i / p3);
    set(4, 3, 3, i * i / p3);
    Ok(ChristoffelTable(t))
}

/// Finite-difference oracle for the connection: assembles
/// `G^k_ij = g^kl (d_i g_lj + d_j g_li - d_l g_ij) / 2` with central
/// differences of [`metric_at`] at step `h`.
///
/// Requires `0 < h < |P|/10` so the stencil stays away from the singular
/// locus; agreement with [`christoffel_closed`] is O(h^2).
pub fn christoffel_fd(p: &ReducedPoint, h: f64) -> Result<ChristoffelTable> {
    require_regular(p)?;
    if h <= 0.0 || h >= p.p.abs() / 10.0 {
        return Err(Error::StepTooLarge { h, p: p.p.abs() });
    }

    // d g_ab / d x_l by central differences.
    let mut dg = [[[0.0; 4]; 4]; 4]; // [l][a][b]
    for l in 0..4 {
        let mut plus = p.coords();
        let mut minus = p.coords();
        plus[l] += h;
        minus[l] -= h;
        let gp = metric_at(&ReducedPoint::from_coords(plus))?;
        let gm = metric_at(&ReducedPoint::from_coords(minus))?;
        for a in 0..4 {
            for b in 0..4 {
                dg[l][a][b] = (gp.0[a][b] - gm.0[a][b]) / (2.0 * h);
            }
        }
    }

    let inv = cometric_at(p)?;
    let mut t = [[[0.0; 4]; 4]; 4];
    for k in 0..4 {
        for i in 0..4 {
            for j in 0..4 {
                let mut s = 0.0;
                for l in 0..4 {
                    s += inv.0[k][l] * (dg[i][l][j] + dg[j][l][i] - dg[l][i][j]);
                }
                t[k][i][j] = 0.5 * s;
            }
        }
    }
    Ok(ChristoffelTable(t))
}

/// Geodesic acceleration `xddot^k = -G^k_ij xdot^i xdot^j`.
pub fn geodesic_accel(s: &GeodesicState) -> Result<[f64; 4]> {
    let gamma = christoffel_closed(&s.position)?;
    let v = s.velocity;
    let mut a = [0.0; 4];
    for k in 0..4 {
        let mut sum = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                sum += gamma.0[k][i][j] * v[i] * v[j];
            }
        }
        a[k] = -sum;
    }
    Ok(a)
}

/// Squared speed `g_ij xdot^i xdot^j` of a geodesic state; conserved
/// along exact geodesics.
pub fn speed_squared(s: &GeodesicState) -> Result<f64> {
    Ok(metric_at(&s.position)?.quadratic_form(&s.velocity))
}

#[derive(Clone, Copy)]
struct PhaseVector {
    x: [f64; 4],
    v: [f64; 4],
}

impl PhaseVector {
    fn axpy(&self, scale: f64, d: &PhaseVector) -> PhaseVector {
        let mut out = *self;
        for k in 0..4 {
            out.x[k] += scale * d.x[k];
            out.v[k] += scale * d.v[k];
        }
        out
    }
}

fn phase_derivative(y: &PhaseVector) -> Result<PhaseVector> {
    let state = GeodesicState::new(ReducedPoint::from_coords(y.x), y.v);
    Ok(PhaseVector {
        x: y.v,
        v: geodesic_accel(&state)?,
    })
}

/// Integrates the geodesic system with classical fixed-step RK4.
///
/// The horizon `t_end` is covered by `round(t_end/dt)` equal steps.
/// Aborts with [`Error::SingularApproach`] as soon as |P| falls below
/// [`SINGULAR_P_GUARD`] or the state stops being finite.
pub fn integrate_geodesic(init: &GeodesicState, t_end: f64, dt: f64) -> Result<Trajectory> {
    if dt <= 0.0 || !dt.is_finite() || !t_end.is_finite() || t_end < dt {
        return Err(Error::StepRejected);
    }
    if init.position.p.abs() < SINGULAR_P_GUARD {
        return Err(Error::SingularApproach {
            t: 0.0,
            p: init.position.p,
        });
    }

    let n = (t_end / dt).round().max(1.0) as usize;
    let h = t_end / n as f64;
    let mut samples = Vec::with_capacity(n + 1);
    let mut y = PhaseVector {
        x: init.position.coords(),
        v: init.velocity,
    };
    samples.push((0.0, *init));

    for step in 1..=n {
        let k1 = phase_derivative(&y)?;
        let k2 = phase_derivative(&y.axpy(0.5 * h, &k1))?;
        let k3 = phase_derivative(&y.axpy(0.5 * h, &k2))?;
        let k4 = phase_derivative(&y.axpy(h, &k3))?;
        for c in 0..4 {
            y.x[c] += h / 6.0 * (k1.x[c] + 2.0 * k2.x[c] + 2.0 * k3.x[c] + k4.x[c]);
            y.v[c] += h / 6.0 * (k1.v[c] + 2.0 * k2.v[c] + 2.0 * k3.v[c] + k4.v[c]);
        }
        let t = step as f64 * h;
        let finite = y.x.iter().chain(y.v.iter()).all(|c| c.is_finite());
        if !finite || y.x[3].abs() < SINGULAR_P_GUARD {
            return Err(Error::SingularApproach { t, p: y.x[3] });
        }
        samples.push((t, GeodesicState::new(ReducedPoint::from_coords(y.x), y.v)));
    }

    Trajectory::new(samples)
}

/// Reconstructs the Q coordinate of a trajectory from the contact
/// constraint `Qdot = (I Edot - Gdot) / P`, integrated with the midpoint
/// rule, and returns the resulting five-dimensional curve.
pub fn horizontal_lift_q(traj: &Trajectory, q0: f64) -> Result<Curve> {
    let qdot = |s: &GeodesicState| -> Result<f64> {
        require_regular(&s.position)?;
        Ok((s.position.i * s.velocity[2] - s.velocity[0]) / s.position.p)
    };

    let samples = traj.samples();
    let mut curve = Vec::with_capacity(samples.len());
    let mut q = q0;
    let mut prev: Option<(f64, f64)> = None; // (t, qdot)
    for (t, state) in samples {
        let rate = qdot(state)?;
        if let Some((t_prev, rate_prev)) = prev {
            q += 0.5 * (rate_prev + rate) * (t - t_prev);
        }
        let pos = state.position;
        curve.push((*t, StatePoint::new(pos.g, pos.i, pos.e, pos.p, q)));
        prev = Some((*t, rate));
    }
    Curve::new(curve)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact;
    use rand::prelude::*;

    fn point(g: f64, i: f64, e: f64, p: f64) -> ReducedPoint {
        ReducedPoint::new(g, i, e, p)
    }

    fn random_regular_point(rng: &mut StdRng) -> ReducedPoint {
        let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
        point(
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            sign * rng.random_range(0.5..3.0),
        )
    }

    #[test]
    fn metric_values() {
        let g = metric_at(&point(0.0, 0.0, 0.0, 1.0)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert_eq!(g.0[i][j], want);
            }
        }
        let g = metric_at(&point(0.0, 1.0, 0.0, 1.0)).unwrap();
        assert_eq!(g.0[0][0], 1.0);
        assert_eq!(g.0[2][2], 2.0);
        assert_eq!(g.0[0][2], -1.0);
        assert_eq!(g.0[1][1], 1.0);
        assert_eq!(g.0[3][3], 1.0);
        assert_eq!(
            metric_at(&point(0.0, 1.0, 0.0, 0.0)),
            Err(Error::SingularLocus)
        );
    }

    #[test]
    fn cometric_values_and_inverse_identity() {
        let inv = cometric_at(&point(0.0, 1.0, 0.0, 1.0)).unwrap();
        assert_eq!(inv.0[0][0], 2.0);
        assert_eq!(inv.0[0][2], 1.0);
        assert_eq!(inv.0[2][2], 1.0);

        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..1000 {
            let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
            let p = point(
                rng.random_range(-5.0..5.0),
                rng.random_range(-2.0..2.0),
                rng.random_range(-5.0..5.0),
                sign * rng.random_range(0.1..10.0),
            );
            let prod = metric_at(&p).unwrap().mul(&cometric_at(&p).unwrap());
            // The product cancels terms of size I^2/P^2, so the rounding
            // floor scales with that magnitude.
            let tol = 1e-14 * (p.i * p.i / (p.p * p.p)).max(1.0);
            for i in 0..4 {
                for j in 0..4 {
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (prod[i][j] - want).abs() <= tol,
                        "metric * cometric at {p:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn arc_element_matches_dual_frame_sum() {
        // sum_a w^a(v)^2 equals the metric quadratic form.
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..1000 {
            let p = random_regular_point(&mut rng);
            let state = StatePoint::new(p.g, p.i, p.e, p.p, rng.random_range(-2.0..2.0));
            let v4 = [
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
            ];
            // The coframe never involves dQ, so vQ is irrelevant.
            let v5 = contact::TangentVector::new(
                v4[0],
                v4[1],
                v4[2],
                v4[3],
                rng.random_range(-2.0..2.0),
            );
            let mut sum = 0.0;
            for a in 1..=4 {
                let w = contact::dual_form_eval(a, &state, &v5).unwrap();
                sum += w * w;
            }
            let quad = metric_at(&p).unwrap().quadratic_form(&v4);
            assert!((sum - quad).abs() <= 1e-12, "at {p:?}");
        }
    }

    #[test]
    fn christoffel_closed_values() {
        let t = christoffel_closed(&point(0.0, 1.0, 0.0, 1.0)).unwrap();
        assert_eq!(t.0[0][1][2], 0.0); // G1_23 vanishes when I^2 = P^2
        assert_eq!(t.0[0][0][3], -1.0); // G1_14
        assert_eq!(t.0[3][0][0], 1.0); // G4_11
        assert_eq!(t.0[1][0][2], 0.5); // G2_13

        let t = christoffel_closed(&point(0.0, 0.0, 0.0, 1.0)).unwrap();
        assert_eq!(t.0[0][1][2], -0.5); // G1_23
        assert_eq!(t.0[2][0][1], -0.5); // G3_12
        assert_eq!(t.0[3][0][0], 1.0); // G4_11
        assert_eq!(t.0[0][0][1], 0.0); // G1_12 vanishes at I = 0
    }

    #[test]
    fn christoffel_lower_symmetry() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..200 {
            let t = christoffel_closed(&random_regular_point(&mut rng)).unwrap();
            for k in 0..4 {
                for i in 0..4 {
                    for j in 0..4 {
                        assert_eq!(t.0[k][i][j], t.0[k][j][i]);
                    }
                }
            }
        }
    }

    #[test]
    fn christoffel_fd_matches_closed() {
        let cases = [point(0.0, 1.0, 0.0, 1.0), point(0.0, 0.3, 0.0, 2.5)];
        for p in cases {
            let closed = christoffel_closed(&p).unwrap();
            let fd = christoffel_fd(&p, 1e-5).unwrap();
            assert!(closed.max_abs_diff(&fd) <= 1e-6, "at {p:?}");
        }
        // Flat directions stay flat: G2_44 = 0.
        let fd = christoffel_fd(&point(0.0, 1.0, 0.0, 1.0), 1e-5).unwrap();
        assert!(fd.0[1][3][3].abs() <= 1e-10);
    }

    #[test]
    fn christoffel_fd_step_validation() {
        let p = point(0.0, 1.0, 0.0, 1.0);
        assert!(matches!(
            christoffel_fd(&p, 0.2),
            Err(Error::StepTooLarge { .. })
        ));
        assert!(matches!(
            christoffel_fd(&p, 0.0),
            Err(Error::StepTooLarge { .. })
        ));
    }

    #[test]
    fn accel_flat_directions() {
        // No G^k_22 or G^k_44 entries exist.
        let s = GeodesicState::new(point(0.3, 1.0, -0.4, 1.7), [0.0, 1.0, 0.0, 0.0]);
        assert_eq!(geodesic_accel(&s).unwrap(), [0.0; 4]);
        let s = GeodesicState::new(point(0.3, 1.0, -0.4, 1.7), [0.0, 0.0, 0.0, 1.0]);
        assert_eq!(geodesic_accel(&s).unwrap(), [0.0; 4]);
    }

    #[test]
    fn accel_pure_g_velocity() {
        // Only G4_11 fires: acceleration (0, 0, 0, -1) at I = P = 1.
        let s = GeodesicState::new(point(0.0, 1.0, 0.0, 1.0), [1.0, 0.0, 0.0, 0.0]);
        assert_eq!(geodesic_accel(&s).unwrap(), [0.0, 0.0, 0.0, -1.0]);
    }

    #[test]
    fn speed_squared_values() {
        let s = GeodesicState::new(point(0.4, -1.9, 2.2, 0.8), [0.0, 1.0, 0.0, 0.0]);
        assert_eq!(speed_squared(&s).unwrap(), 1.0);
        let s = GeodesicState::new(point(0.0, 1.0, 0.0, 1.0), [1.0, 0.0, 1.0, 0.0]);
        assert!((speed_squared(&s).unwrap() - 1.0).abs() <= 1e-15);
        let s = GeodesicState::new(point(0.0, 1.0, 0.0, 1.0), [0.0; 4]);
        assert_eq!(speed_squared(&s).unwrap(), 0.0);
    }

    #[test]
    fn straight_line_geodesics() {
        let init = GeodesicState::new(point(0.0, 0.0, 0.0, 1.0), [0.0, 1.0, 0.0, 0.0]);
        let traj = integrate_geodesic(&init, 1.0, 1e-3).unwrap();
        for (t, s) in traj.samples() {
            assert!((s.position.i - t).abs() <= 1e-10);
            assert!(s.position.g.abs() <= 1e-10);
            assert!(s.position.e.abs() <= 1e-10);
            assert!((s.position.p - 1.0).abs() <= 1e-10);
        }

        let init = GeodesicState::new(point(0.0, 0.0, 0.0, 1.0), [0.0, 0.0, 0.0, 1.0]);
        let traj = integrate_geodesic(&init, 1.0, 1e-3).unwrap();
        for (t, s) in traj.samples() {
            assert!((s.position.p - (1.0 + t)).abs() <= 1e-10);
        }

        let still = GeodesicState::new(point(0.2, 0.4, -0.1, 0.9), [0.0; 4]);
        let traj = integrate_geodesic(&still, 1.0, 1e-3).unwrap();
        assert_eq!(traj.last().1, still);
    }

    #[test]
    fn integration_rejects_bad_steps_and_singular_starts() {
        let init = GeodesicState::new(point(0.0, 0.0, 0.0, 1.0), [0.0, 1.0, 0.0, 0.0]);
        assert_eq!(
            integrate_geodesic(&init, 1.0, 0.0),
            Err(Error::StepRejected)
        );
        assert_eq!(
            integrate_geodesic(&init, 1.0, -0.1),
            Err(Error::StepRejected)
        );
        assert_eq!(
            integrate_geodesic(&init, 0.5, 1.0),
            Err(Error::StepRejected)
        );
        let singular = GeodesicState::new(point(0.0, 0.0, 0.0, 1e-9), [0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(
            integrate_geodesic(&singular, 1.0, 1e-3),
            Err(Error::SingularApproach { .. })
        ));
    }

    #[test]
    fn integration_aborts_near_singular_locus() {
        // The pure-P line P(t) = 1/2 - t runs straight into P = 0.
        let init = GeodesicState::new(point(0.0, 0.0, 0.0, 0.5), [0.0, 0.0, 0.0, -1.0]);
        let err = integrate_geodesic(&init, 1.0, 1e-3).unwrap_err();
        match err {
            Error::SingularApproach { t, .. } => assert!(t > 0.4 && t < 0.6),
            other => panic!("expected singular approach, got {other:?}"),
        }
    }

    #[test]
    fn energy_is_conserved_on_a_generic_geodesic() {
        let init = GeodesicState::new(point(0.1, 0.5, -0.2, 1.4), [0.3, -0.4, 0.5, 0.2]);
        let traj = integrate_geodesic(&init, 1.0, 1e-3).unwrap();
        let e0 = speed_squared(&init).unwrap();
        for (_, s) in traj.samples() {
            assert!((speed_squared(s).unwrap() - e0).abs() <= 1e-10);
        }
    }

    #[test]
    fn lift_examples() {
        // Pure-I geodesic: Q stays at zero.
        let init = GeodesicState::new(point(0.0, 0.0, 0.0, 1.0), [0.0, 1.0, 0.0, 0.0]);
        let traj = integrate_geodesic(&init, 1.0, 1e-3).unwrap();
        let curve = horizontal_lift_q(&traj, 0.0).unwrap();
        for (_, s) in curve.samples() {
            assert_eq!(s.q, 0.0);
        }

        // Gdot = I Edot pointwise: Q pinned at its seed.
        let samples: Vec<_> = (0..=100)
            .map(|k| {
                let t = k as f64 / 100.0;
                // I = 2, E = t, G = 2t: numerator of Qdot vanishes.
                let s = GeodesicState::new(point(2.0 * t, 2.0, t, 1.0), [2.0, 0.0, 1.0, 0.0]);
                (t, s)
            })
            .collect();
        let traj = Trajectory::new(samples).unwrap();
        let curve = horizontal_lift_q(&traj, 0.7).unwrap();
        for (_, s) in curve.samples() {
            assert_eq!(s.q, 0.7);
        }

        // E(t) = t, G = 0, I = 2, P = 1: Q(1) = 2.
        let samples: Vec<_> = (0..=1000)
            .map(|k| {
                let t = k as f64 / 1000.0;
                let s = GeodesicState::new(point(0.0, 2.0, t, 1.0), [0.0, 0.0, 1.0, 0.0]);
                (t, s)
            })
            .collect();
        let traj = Trajectory::new(samples).unwrap();
        let curve = horizontal_lift_q(&traj, 0.0).unwrap();
        assert!((curve.last().1.q - 2.0).abs() <= 1e-6);
    }

    #[test]
    fn lifted_geodesics_are_horizontal() {
        let init = GeodesicState::new(point(0.0, 0.5, 0.0, 1.2), [0.3, 0.1, 0.4, -0.2]);
        let traj = integrate_geodesic(&init, 1.0, 1e-3).unwrap();
        let curve = horizontal_lift_q(&traj, 0.0).unwrap();
        assert!(contact::horizontality_defect(&curve) <= 1e-6);
        let dg = curve.last().1.g - curve.first().1.g;
        assert!((contact::growth_line_integral(&curve) - dg).abs() <= 1e-6);
    }
}
