//! Subcommand implementations. Each handler consumes a scenario payload,
//! runs the corresponding library operation and emits CSV or JSON.

use std::path::Path;

use serde_json::json;

use roegen_core::equilibrium::{
    lagrange_certificate, two_phase_solve, union_residual, UnionConfig,
};
use roegen_core::horizon::{self, GridRanges, HorizonFamily, HorizonKind};
use roegen_core::subriemannian::{
    horizontal_lift_q, integrate_geodesic, speed_squared, GeodesicState, ReducedPoint,
};

use crate::error::CliError;
use crate::groupcheck;
use crate::log::Logger;
use crate::output::{emit, fmt_f64};
use crate::scenario::{
    BlackholeScenario, GeodesicScenario, GroupCheckScenario, Scenario, TwoPhaseScenario,
    UnionScenario,
};

pub fn load_scenario(path: &Path) -> Result<Scenario, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    Scenario::from_json(&text)
}

fn expect_payload<T>(payload: Option<T>, subcommand: &str) -> Result<T, CliError> {
    payload.ok_or_else(|| {
        CliError::Validation(format!("scenario does not carry a '{subcommand}' payload"))
    })
}

pub fn geodesic_payload(sc: Scenario) -> Result<GeodesicScenario, CliError> {
    expect_payload(
        match sc {
            Scenario::Geodesic(g) => Some(g),
            _ => None,
        },
        "geodesic",
    )
}

pub fn two_phase_payload(sc: Scenario) -> Result<TwoPhaseScenario, CliError> {
    expect_payload(
        match sc {
            Scenario::TwoPhase(t) => Some(t),
            _ => None,
        },
        "two-phase",
    )
}

pub fn union_payload(sc: Scenario) -> Result<UnionScenario, CliError> {
    expect_payload(
        match sc {
            Scenario::Union(u) => Some(u),
            _ => None,
        },
        "union",
    )
}

pub fn blackhole_payload(sc: Scenario) -> Result<BlackholeScenario, CliError> {
    expect_payload(
        match sc {
            Scenario::Blackhole(b) => Some(b),
            _ => None,
        },
        "blackhole",
    )
}

pub fn group_check_payload(sc: Scenario) -> Result<GroupCheckScenario, CliError> {
    expect_payload(
        match sc {
            Scenario::GroupCheck(g) => Some(g),
            _ => None,
        },
        "group-check",
    )
}

/// Integrates the geodesic, reconstructs Q by the horizontal lift and
/// writes the trajectory as CSV (t, G, I, E, P, Q, speed2).
pub fn run_geodesic(
    sc: &GeodesicScenario,
    out: Option<&Path>,
    log: &Logger,
) -> Result<(), CliError> {
    let init = GeodesicState::new(
        ReducedPoint::new(sc.initial.g, sc.initial.i, sc.initial.e, sc.initial.p),
        sc.velocity,
    );
    let traj = integrate_geodesic(&init, sc.t_end, sc.dt)?;
    let curve = horizontal_lift_q(&traj, sc.initial.q)?;

    let mut csv = String::from("t,G,I,E,P,Q,speed2\n");
    for ((t, state), (_, point)) in traj.samples().iter().zip(curve.samples()) {
        let speed2 = speed_squared(state)?;
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            fmt_f64(*t),
            fmt_f64(point.g),
            fmt_f64(point.i),
            fmt_f64(point.e),
            fmt_f64(point.p),
            fmt_f64(point.q),
            fmt_f64(speed2),
        ));
    }
    emit(out, &csv)?;
    log.info(format!(
        "geodesic: {} samples over t in [0, {}]",
        traj.samples().len(),
        sc.t_end
    ));
    Ok(())
}

/// Solves the two-phase equilibrium and writes the solution record.
pub fn run_two_phase(
    sc: &TwoPhaseScenario,
    out: Option<&Path>,
    log: &Logger,
) -> Result<(), CliError> {
    let solution = two_phase_solve((&sc.phase1, &sc.phase2), &sc.totals, &sc.guess)?;
    log.debug(format!(
        "newton iterations: {}, residual norm {:e}",
        solution.iterations, solution.residual_norm
    ));
    let mut text =
        serde_json::to_string_pretty(&solution).map_err(|e| CliError::Validation(e.to_string()))?;
    text.push('\n');
    emit(out, &text)?;
    log.info(format!(
        "two-phase: converged (degenerate: {}), entropy {}",
        solution.degenerate, solution.entropy
    ));
    Ok(())
}

/// Certifies union balance and writes balance report plus multiplier
/// certificate.
pub fn run_union(sc: &UnionScenario, out: Option<&Path>, log: &Logger) -> Result<(), CliError> {
    let n = sc.states.len();
    let uniform = || vec![1.0 / n.max(1) as f64; n];
    let cfg = UnionConfig::new(
        sc.states.iter().map(|s| s.as_system()).collect(),
        sc.alpha.clone().unwrap_or_else(uniform),
        sc.beta.clone().unwrap_or_else(uniform),
        sc.gamma.clone().unwrap_or_else(uniform),
    )?;
    let balance = union_residual(&cfg);
    let certificate = lagrange_certificate(&cfg);
    log.debug(format!(
        "deviations: stability {:e}, price {:e}",
        balance.stability_deviation, balance.price_deviation
    ));
    let report = json!({
        "systems": n,
        "balance": balance,
        "certificate": certificate,
    });
    let mut text =
        serde_json::to_string_pretty(&report).map_err(|e| CliError::Validation(e.to_string()))?;
    text.push('\n');
    emit(out, &text)?;
    log.info(format!(
        "union: {} systems, balanced: {}",
        n, report["balance"]["balanced"]
    ));
    Ok(())
}

/// Evaluates a horizon surface at a single state (JSON report) or over a
/// grid (CSV table).
pub fn run_blackhole(
    sc: &BlackholeScenario,
    out: Option<&Path>,
    log: &Logger,
) -> Result<(), CliError> {
    let kind = HorizonKind::new(sc.kind, sc.labeling);
    match (&sc.charges, &sc.grid) {
        (Some(charges), None) => {
            let entropy = horizon::entropy_from_state(&kind, charges)?;
            let margin = horizon::domain_margin(&kind, charges);
            let gap = horizon::roundtrip_gap(&kind, charges)?;
            let (d_entropy, d_secondary) =
                horizon::marginal_inclinations(&kind, entropy, charges.secondary)?;
            let mut report = json!({
                "kind": kind.family.name(),
                "labeling": kind.labeling.name(),
                "symbols": {
                    "primary": kind.primary_symbol(),
                    "secondary": kind.secondary_symbol(),
                    "entropy": kind.entropy_symbol(),
                },
                "mass": charges.mass,
                "secondary": charges.secondary,
                "entropy": entropy,
                "domain_margin": margin,
                "roundtrip_gap": gap,
                "marginal_inclinations": {
                    "entropy": d_entropy,
                    "secondary": d_secondary,
                },
            });
            if sc.kind == HorizonFamily::Kerr {
                report["extremality"] = json!(horizon::kerr_extremality(charges));
            }
            let mut text = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            text.push('\n');
            emit(out, &text)?;
            log.info(format!(
                "blackhole: {} point, entropy {}",
                kind.family.name(),
                entropy
            ));
            Ok(())
        }
        (None, Some(grid)) => {
            let rows = horizon::horizon_grid(
                &kind,
                &GridRanges {
                    mass: grid.mass,
                    secondary: grid.secondary,
                },
                grid.resolution,
            )?;
            let mut csv = String::from("kind,labeling,M,secondary,S,in_domain\n");
            for row in &rows {
                csv.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    kind.family.name(),
                    kind.labeling.name(),
                    fmt_f64(row.mass),
                    fmt_f64(row.secondary),
                    row.entropy.map(fmt_f64).unwrap_or_default(),
                    row.in_domain,
                ));
            }
            emit(out, &csv)?;
            log.info(format!(
                "blackhole: {} grid, {} rows ({} in domain)",
                kind.family.name(),
                rows.len(),
                rows.iter().filter(|r| r.in_domain).count()
            ));
            Ok(())
        }
        (Some(_), Some(_)) => Err(CliError::Validation(
            "blackhole scenario carries both 'charges' and 'grid'; pick one".into(),
        )),
        (None, None) => Err(CliError::Validation(
            "blackhole scenario needs either 'charges' or 'grid'".into(),
        )),
    }
}

/// Runs the randomized composition-law audit and writes the JSON report.
pub fn run_group_check(
    sc: &GroupCheckScenario,
    out: Option<&Path>,
    log: &Logger,
) -> Result<(), CliError> {
    let report = groupcheck::run(sc.samples, sc.seed);
    let mut text =
        serde_json::to_string_pretty(&report).map_err(|e| CliError::Validation(e.to_string()))?;
    text.push('\n');
    emit(out, &text)?;
    log.info(format!(
        "group-check: {} samples, seed {}, pass: {}",
        report.samples, report.seed, report.pass
    ));
    if !report.pass {
        return Err(CliError::Numerical(
            "group-check audit found law violations".into(),
        ));
    }
    Ok(())
}
