//! The thermodynamics-economics dictionary: eighteen paired entries
//! covering the state variables, the horizon state functions and their
//! marginal partials, the three structural constants, the process
//! variables and the fundamental equation itself.

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DictionaryEntry {
    pub thermo_term: &'static str,
    pub thermo_symbol: &'static str,
    pub econ_term: &'static str,
    pub econ_symbol: &'static str,
    pub note: Option<&'static str>,
}

impl DictionaryEntry {
    /// Rendering used by the `dict` subcommand:
    /// `entropy ↔ entropy (S ↔ E)`.
    pub fn display_row(&self) -> String {
        format!(
            "{} \u{2194} {} ({} \u{2194} {})",
            self.thermo_term, self.econ_term, self.thermo_symbol, self.econ_symbol
        )
    }
}

/// Translation direction of [`translate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    ThermoToEcon,
    EconToThermo,
}

pub const DICTIONARY: [DictionaryEntry; 18] = [
    DictionaryEntry {
        thermo_term: "internal energy",
        thermo_symbol: "U",
        econ_term: "growth potential",
        econ_symbol: "G",
        note: None,
    },
    DictionaryEntry {
        thermo_term: "temperature",
        thermo_symbol: "T",
        econ_term: "internal politics stability",
        econ_symbol: "I",
        note: None,
    },
    DictionaryEntry {
        thermo_term: "entropy",
        thermo_symbol: "S",
        econ_term: "entropy",
        econ_symbol: "E",
        note: None,
    },
    DictionaryEntry {
        thermo_term: "pressure",
        thermo_symbol: "P",
        econ_term: "price level (inflation)",
        econ_symbol: "P",
        note: None,
    },
    DictionaryEntry {
        thermo_term: "volume",
        thermo_symbol: "V",
        econ_term: "volume, structure, quality",
        econ_symbol: "Q",
        note: None,
    },
    DictionaryEntry {
        thermo_term: "total energy (mass)",
        thermo_symbol: "M",
        econ_term: "national income (income)",
        econ_symbol: "Y",
        note: None,
    },
    DictionaryEntry {
        thermo_term: "electric charge",
        thermo_symbol: "Q",
        econ_term: "total investment",
        econ_symbol: "\u{2110}",
        note: None,
    },
    DictionaryEntry {
        thermo_term: "angular momentum (spin)",
        thermo_symbol: "J",
        econ_term: "economic angular momentum (economic spin)",
        econ_symbol: "J",
        note: None,
    },
    DictionaryEntry {
        thermo_term: "M = M(S, Q, J)",
        thermo_symbol: "M(S,Q,J)",
        econ_term: "Y = Y(E, \u{2110}, J)",
        econ_symbol: "Y(E,\u{2110},J)",
        note: Some("near-horizon state function"),
    },
    DictionaryEntry {
        thermo_term: "angular speed",
        thermo_symbol: "\u{3a9} = \u{2202}M/\u{2202}J",
        econ_term: "marginal inclination to rotate",
        econ_symbol: "\u{2202}Y/\u{2202}J",
        note: None,
    },
    DictionaryEntry {
        thermo_term: "electric potential",
        thermo_symbol: "\u{3a6} = \u{2202}M/\u{2202}Q",
        econ_term: "marginal inclination to investment",
        econ_symbol: "\u{2202}Y/\u{2202}\u{2110}",
        note: None,
    },
    DictionaryEntry {
        thermo_term: "Hawking temperature",
        thermo_symbol: "T_H = \u{2202}M/\u{2202}S",
        econ_term: "marginal inclination to entropy",
        econ_symbol: "\u{2202}Y/\u{2202}E",
        note: None,
    },
    DictionaryEntry {
        thermo_term: "Newton constant",
        thermo_symbol: "G",
        econ_term: "universal economic constant",
        econ_symbol: "\u{1d4a2}",
        note: Some("dictionary entry only; carries no numeric value"),
    },
    DictionaryEntry {
        thermo_term: "light velocity",
        thermo_symbol: "c",
        econ_term: "maximum universal exchange speed",
        econ_symbol: "c",
        note: Some("dictionary entry only; carries no numeric value"),
    },
    DictionaryEntry {
        thermo_term: "normalized Planck constant",
        thermo_symbol: "\u{127}",
        econ_term: "normalized economic quantum",
        econ_symbol: "\u{127}",
        note: Some("dictionary entry only; carries no numeric value"),
    },
    DictionaryEntry {
        thermo_term: "mechanical work",
        thermo_symbol: "dW = P dV",
        econ_term: "wealth of the system",
        econ_symbol: "dW = P dq",
        note: None,
    },
    DictionaryEntry {
        thermo_term: "heat",
        thermo_symbol: "dQ = T dS",
        econ_term: "production of goods",
        econ_symbol: "dq = I dE",
        note: Some("reversible; irreversible processes have dq < I dE"),
    },
    DictionaryEntry {
        thermo_term: "Gibbs-Pfaff fundamental equation",
        thermo_symbol: "dU - T dS + P dV + \u{3a3} \u{3bc}_k dN_k = 0",
        econ_term: "Gibbs-Pfaff fundamental equation of economy",
        econ_symbol: "dG - I dE + P dQ + \u{3a3} \u{3bd}_k d\u{1d4a9}_k = 0",
        note: None,
    },
];

/// Lowercased term with any trailing parenthetical stripped, so
/// "national income" finds "national income (income)".
fn normalize(term: &str) -> String {
    let trimmed = term.trim().to_lowercase();
    match trimmed.find(" (") {
        Some(idx) => trimmed[..idx].to_string(),
        None => trimmed,
    }
}

fn matches(stored: &str, query: &str) -> bool {
    let stored_norm = normalize(stored);
    let query_norm = normalize(query);
    stored_norm == query_norm || stored.trim().to_lowercase() == query_norm
}

/// Looks a term up on the side selected by `direction` (case-insensitive,
/// parentheticals optional) and returns the paired entry.
pub fn translate(term: &str, direction: Direction) -> Result<&'static DictionaryEntry, CliError> {
    let found = DICTIONARY.iter().find(|entry| match direction {
        Direction::ThermoToEcon => matches(entry.thermo_term, term),
        Direction::EconToThermo => matches(entry.econ_term, term),
    });
    found.ok_or_else(|| CliError::Validation(format!("unknown dictionary term: '{term}'")))
}

/// Searches both sides, thermodynamic first.
pub fn lookup(term: &str) -> Result<&'static DictionaryEntry, CliError> {
    translate(term, Direction::ThermoToEcon).or_else(|_| translate(term, Direction::EconToThermo))
}
