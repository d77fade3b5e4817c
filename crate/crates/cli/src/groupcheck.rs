//! Randomized audit of the composition laws, exposed through the
//! `group-check` subcommand. Deterministic for a fixed seed.

use rand::prelude::*;
use serde::Serialize;

use roegen_core::group::{
    associativity_defect_ac, associativity_defect_ac_closed, carnot_compose_ac, carnot_compose_bch,
    commutative_compose, commutative_inverse, nilpotency_check, GroupElement,
};

const LAW_TOL: f64 = 1e-12;

#[derive(Debug, Serialize)]
pub struct LawDeviations {
    pub commutativity: Option<f64>,
    pub associativity: f64,
    pub identity: f64,
    pub inverse: f64,
}

#[derive(Debug, Serialize)]
pub struct GroupCheckReport {
    pub samples: u32,
    pub seed: u64,
    pub commutative: LawDeviations,
    pub bch: LawDeviations,
    /// Largest gap between the direct associativity defect of the AC law
    /// and its closed form, plus the fraction of triples on which the
    /// defect is nonzero (the law is genuinely non-associative).
    pub ac_defect_closed_form_gap: f64,
    pub ac_nonzero_defect_fraction: f64,
    pub nilpotency_violations: usize,
    pub pass: bool,
}

fn rel_gap(a: &GroupElement, b: &GroupElement) -> f64 {
    let mut worst: f64 = 0.0;
    for (u, v) in [(a.g, b.g), (a.i, b.i), (a.e, b.e), (a.p, b.p), (a.q, b.q)] {
        worst = worst.max((u - v).abs() / 1.0_f64.max(u.abs()).max(v.abs()));
    }
    worst
}

fn random_element(rng: &mut StdRng) -> GroupElement {
    GroupElement::new(
        rng.random_range(-3.0..3.0),
        rng.random_range(-3.0..3.0),
        rng.random_range(-3.0..3.0),
        rng.random_range(-3.0..3.0),
        rng.random_range(-3.0..3.0),
    )
}

pub fn run(samples: u32, seed: u64) -> GroupCheckReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let identity = GroupElement::identity();

    let mut comm = LawDeviations {
        commutativity: Some(0.0),
        associativity: 0.0,
        identity: 0.0,
        inverse: 0.0,
    };
    let mut bch = LawDeviations {
        commutativity: None,
        associativity: 0.0,
        identity: 0.0,
        inverse: 0.0,
    };
    let mut ac_gap: f64 = 0.0;
    let mut ac_nonzero = 0usize;

    for _ in 0..samples {
        let x = random_element(&mut rng);
        let y = random_element(&mut rng);
        let z = random_element(&mut rng);

        comm.commutativity = comm.commutativity.map(|worst| {
            worst.max(rel_gap(
                &commutative_compose(&x, &y),
                &commutative_compose(&y, &x),
            ))
        });
        comm.associativity = comm.associativity.max(rel_gap(
            &commutative_compose(&commutative_compose(&x, &y), &z),
            &commutative_compose(&x, &commutative_compose(&y, &z)),
        ));
        comm.identity = comm
            .identity
            .max(rel_gap(&commutative_compose(&x, &identity), &x));
        comm.inverse = comm.inverse.max(rel_gap(
            &commutative_compose(&x, &commutative_inverse(&x)),
            &identity,
        ));

        bch.associativity = bch.associativity.max(rel_gap(
            &carnot_compose_bch(&carnot_compose_bch(&x, &y), &z),
            &carnot_compose_bch(&x, &carnot_compose_bch(&y, &z)),
        ));
        bch.identity = bch
            .identity
            .max(rel_gap(&carnot_compose_bch(&x, &identity), &x));
        bch.inverse = bch
            .inverse
            .max(rel_gap(&carnot_compose_bch(&x, &x.neg()), &identity));

        let direct = associativity_defect_ac(&x, &y, &z);
        let closed = associativity_defect_ac_closed(&x, &y, &z);
        ac_gap = ac_gap.max((direct - closed).abs() / 1.0_f64.max(direct.abs()));
        if direct.abs() > 1e-9 {
            ac_nonzero += 1;
        }

        // The AC law still has the zero identity element.
        debug_assert_eq!(carnot_compose_ac(&x, &identity), x);
    }

    let nilpotency_violations = nilpotency_check().len();
    let pass = comm.commutativity.unwrap_or(0.0) <= LAW_TOL
        && comm.associativity <= LAW_TOL
        && comm.identity <= LAW_TOL
        && comm.inverse <= LAW_TOL
        && bch.associativity <= LAW_TOL
        && bch.identity <= LAW_TOL
        && bch.inverse <= LAW_TOL
        && ac_gap <= LAW_TOL
        && ac_nonzero > 0
        && nilpotency_violations == 0;

    GroupCheckReport {
        samples,
        seed,
        commutative: comm,
        bch,
        ac_defect_closed_form_gap: ac_gap,
        ac_nonzero_defect_fraction: ac_nonzero as f64 / samples.max(1) as f64,
        nilpotency_violations,
        pass,
    }
}
