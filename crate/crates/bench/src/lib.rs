//! Deterministic fixture builders shared by the benchmark targets.

use rand::prelude::*;

use roegen_core::equilibrium::{PhaseModel, PhaseSplit, Totals};
use roegen_core::subriemannian::{GeodesicState, ReducedPoint};
use roegen_core::ChargeSet;

/// Geodesic initial states that stay clear of the singular locus over a
/// unit horizon.
pub fn geodesic_states(n: usize, seed: u64) -> Vec<GeodesicState> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            GeodesicState::new(
                ReducedPoint::new(
                    rng.random_range(-0.5..0.5),
                    rng.random_range(-0.5..0.5),
                    rng.random_range(-0.5..0.5),
                    rng.random_range(1.0..2.0),
                ),
                [
                    rng.random_range(-0.4..0.4),
                    rng.random_range(-0.4..0.4),
                    rng.random_range(-0.4..0.4),
                    rng.random_range(-0.4..0.4),
                ],
            )
        })
        .collect()
}

/// Regular points for metric and connection kernels.
pub fn metric_points(n: usize, seed: u64) -> Vec<ReducedPoint> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
            ReducedPoint::new(
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
                sign * rng.random_range(0.5..3.0),
            )
        })
        .collect()
}

/// In-domain charge sets per horizon family index (0 = RN, 1 = Kerr,
/// 2 = BTZ).
pub fn charge_sets(n: usize, family: usize, seed: u64) -> Vec<ChargeSet> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let m = rng.random_range(0.2..3.0);
            let u = rng.random_range(-1.0..1.0);
            let secondary = match family {
                0 => u * m,
                1 => u * m * m,
                _ => u * m,
            };
            ChargeSet::new(m, secondary)
        })
        .collect()
}

/// A fixed well-conditioned two-phase instance with a perturbed guess.
pub fn two_phase_instance() -> (PhaseModel, PhaseModel, Totals, PhaseSplit) {
    let m1 = PhaseModel::new(1.0, 1.0, 0.0, 0.0, 0.0).expect("valid model");
    let m2 = PhaseModel::new(2.0, 0.5, 0.3, -0.2, 0.1).expect("valid model");
    let totals = Totals::new(6.624391011212796, -4.3, 2.5).expect("valid totals");
    let guess = PhaseSplit::new(1.1, 2.4, -1.1, 1.4, 1.3, -2.1);
    (m1, m2, totals, guess)
}
