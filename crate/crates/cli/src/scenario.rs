//! Scenario documents: one JSON object per run, externally tagged by the
//! subcommand payload it carries.
//!
//! ```json
//! { "geodesic": { "initial": {"G":0,"I":0,"E":0,"P":1,"Q":0},
//!                 "velocity": [0,1,0,0], "t_end": 1.0, "dt": 0.001 } }
//! ```
//!
//! The other payloads are `two-phase`, `union`, `blackhole` and
//! `group-check`; see the shipped files under `scenarios/`.

use serde::{Deserialize, Serialize};

use roegen_core::equilibrium::{PhaseModel, PhaseSplit, Totals, UnionSystem};
use roegen_core::horizon::{ChargeSet, HorizonFamily, Labeling};
use roegen_core::StatePoint;

use crate::error::CliError;

/// A parsed scenario document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    Geodesic(GeodesicScenario),
    TwoPhase(TwoPhaseScenario),
    Union(UnionScenario),
    Blackhole(BlackholeScenario),
    GroupCheck(GroupCheckScenario),
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Validation(format!("invalid scenario: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serialization cannot fail")
    }
}

/// Initial state (the Q component seeds the horizontal lift), initial
/// velocity over (G, I, E, P), horizon and step.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeodesicScenario {
    pub initial: StatePoint,
    pub velocity: [f64; 4],
    pub t_end: f64,
    pub dt: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoPhaseScenario {
    pub phase1: PhaseModel,
    pub phase2: PhaseModel,
    pub totals: Totals,
    pub guess: PhaseSplit,
}

/// Member states plus optional weight families; omitted families default
/// to uniform weights.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnionScenario {
    pub states: Vec<UnionStateSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<f64>>,
}

/// A member economy given either as its (stability, price) pair or as a
/// full state point, of which only I and P enter the balance conditions.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UnionStateSpec {
    Pair(UnionSystem),
    Full(StatePoint),
}

impl UnionStateSpec {
    pub fn as_system(&self) -> UnionSystem {
        match self {
            UnionStateSpec::Pair(s) => *s,
            UnionStateSpec::Full(p) => UnionSystem {
                stability: p.i,
                price: p.p,
            },
        }
    }
}

/// Either a single state (`charges`) or a sampling `grid`; exactly one
/// must be present.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlackholeScenario {
    pub kind: HorizonFamily,
    #[serde(default)]
    pub labeling: Labeling,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub charges: Option<ChargeSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridScenario>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridScenario {
    pub mass: (f64, f64),
    pub secondary: (f64, f64),
    pub resolution: (usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupCheckScenario {
    #[serde(default = "default_samples")]
    pub samples: u32,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

fn default_samples() -> u32 {
    10_000
}

fn default_seed() -> u64 {
    42
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_identity() {
        let text = r#"{ "geodesic": {
            "initial": {"G": 0.0, "I": 0.0, "E": 0.0, "P": 1.0, "Q": 0.0},
            "velocity": [0.0, 1.0, 0.0, 0.0],
            "t_end": 1.0,
            "dt": 0.001
        }}"#;
        let parsed = Scenario::from_json(text).unwrap();
        let reparsed = Scenario::from_json(&parsed.to_json()).unwrap();
        assert_eq!(parsed, reparsed);
    }

    #[test]
    fn defaults_apply() {
        let parsed = Scenario::from_json(r#"{ "group-check": {} }"#).unwrap();
        match parsed {
            Scenario::GroupCheck(gc) => {
                assert_eq!(gc.samples, 10_000);
                assert_eq!(gc.seed, 42);
            }
            other => panic!("unexpected {other:?}"),
        }
        let parsed = Scenario::from_json(
            r#"{ "blackhole": {"kind": "rn", "charges": {"mass": 1.0, "secondary": 0.0}} }"#,
        )
        .unwrap();
        match parsed {
            Scenario::Blackhole(b) => {
                assert_eq!(b.kind, HorizonFamily::ReissnerNordstrom);
                assert_eq!(b.labeling, Labeling::Thermodynamic);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn union_states_accept_pairs_and_full_points() {
        let text = r#"{ "union": { "states": [
            { "stability": 0.5, "price": 1.2 },
            { "G": 0.0, "I": 0.5, "E": 0.0, "P": 1.2, "Q": 0.0 }
        ] } }"#;
        let parsed = Scenario::from_json(text).unwrap();
        let Scenario::Union(u) = &parsed else {
            panic!("unexpected {parsed:?}")
        };
        let systems: Vec<_> = u.states.iter().map(|s| s.as_system()).collect();
        assert_eq!(systems[0], systems[1]);
        let reparsed = Scenario::from_json(&parsed.to_json()).unwrap();
        assert_eq!(parsed, reparsed);
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(Scenario::from_json("{}").is_err());
        assert!(Scenario::from_json(r#"{ "geodesic": {"t_end": 1.0} }"#).is_err());
        // JSON has no literal for non-finite numbers, so finiteness comes
        // with the format.
        assert!(Scenario::from_json(r#"{ "group-check": {"samples": NaN} }"#).is_err());
    }
}
