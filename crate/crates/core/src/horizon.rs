//! Horizon surface models: state surfaces S(M, secondary) and their
//! posynomial inverses M(S, secondary) for three families, in geometrized
//! units (gravitational constant and exchange speed set to 1).
//!
//! The same formulas serve two labelings. Thermodynamic: mass M,
//! electric charge Q or spin J, horizon entropy S. Economic: national
//! income Y, total investment or economic spin, entropy E. The labeling
//! is presentation only and never enters a formula.
//!
//! Families and closed forms:
//!
//! * `ReissnerNordstrom`: `S = 2M^2 - Q^2 + 2M^2 sqrt(1 - Q^2/M^2)`,
//!   inverse `M = sqrt(S)/2 + Q^2/(2 sqrt(S))`; domain `M >= |Q|`.
//! * `Kerr`: `S = 2M^2 + 2M^2 sqrt(1 - J^2/M^4)`, inverse
//!   `M = sqrt((4J^2 + S^2)/S)/2`; domain `M^2 >= |J|`, extremal at
//!   `|J| = M^2`.
//! * `Btz`: canonical posynomial `M = S^2 + J^2/(4S^2)` inverted with
//!   the outer root `S = sqrt((M + sqrt(M^2 - J^2))/2)`; domain
//!   `M >= |J|`. The alternative square-root form
//!   `S = 2 sqrt(M/(4 + J^2))` disagrees with the canonical inverse for
//!   J != 0; [`btz_discrepancy`] measures the gap.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Horizon surface family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HorizonFamily {
    #[serde(rename = "RN", alias = "rn")]
    ReissnerNordstrom,
    #[serde(alias = "kerr")]
    Kerr,
    #[serde(rename = "BTZ", alias = "btz")]
    Btz,
}

impl HorizonFamily {
    pub fn name(&self) -> &'static str {
        match self {
            HorizonFamily::ReissnerNordstrom => "RN",
            HorizonFamily::Kerr => "Kerr",
            HorizonFamily::Btz => "BTZ",
        }
    }

    /// Parses the short family name (case-insensitive).
    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "rn" | "reissner-nordstrom" => Ok(HorizonFamily::ReissnerNordstrom),
            "kerr" | "k" => Ok(HorizonFamily::Kerr),
            "btz" => Ok(HorizonFamily::Btz),
            _ => Err(Error::InvalidInput(format!(
                "unknown horizon family '{name}' (expected RN, Kerr or BTZ)"
            ))),
        }
    }
}

/// Variable naming convention; never affects numerics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Labeling {
    #[default]
    Thermodynamic,
    Economic,
}

impl Labeling {
    pub fn name(&self) -> &'static str {
        match self {
            Labeling::Thermodynamic => "thermodynamic",
            Labeling::Economic => "economic",
        }
    }
}

/// A model selector: family plus labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HorizonKind {
    pub family: HorizonFamily,
    pub labeling: Labeling,
}

impl HorizonKind {
    pub fn new(family: HorizonFamily, labeling: Labeling) -> Self {
        Self { family, labeling }
    }

    /// Symbol of the primary state variable (M or Y).
    pub fn primary_symbol(&self) -> &'static str {
        match self.labeling {
            Labeling::Thermodynamic => "M",
            Labeling::Economic => "Y",
        }
    }

    /// Symbol of the secondary state variable (Q/J or investment/spin).
    pub fn secondary_symbol(&self) -> &'static str {
        match (self.family, self.labeling) {
            (HorizonFamily::ReissnerNordstrom, Labeling::Thermodynamic) => "Q",
            (HorizonFamily::ReissnerNordstrom, Labeling::Economic) => "\u{2110}",
            (_, _) => "J",
        }
    }

    /// Symbol of the entropy variable (S or E).
    pub fn entropy_symbol(&self) -> &'static str {
        match self.labeling {
            Labeling::Thermodynamic => "S",
            Labeling::Economic => "E",
        }
    }
}

/// Primary and secondary state variables of a horizon model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChargeSet {
    /// Mass M (national income Y).
    pub mass: f64,
    /// Electric charge Q / total investment for the RN family; spin J
    /// for Kerr and BTZ.
    pub secondary: f64,
}

impl ChargeSet {
    pub fn new(mass: f64, secondary: f64) -> Self {
        Self { mass, secondary }
    }
}

/// Signed distance to the domain boundary: `M - |Q|` (RN),
/// `M - sqrt(|J|)` (Kerr), `M - |J|` (BTZ). Negative outside the model
/// domain.
pub fn domain_margin(kind: &HorizonKind, c: &ChargeSet) -> f64 {
    match kind.family {
        HorizonFamily::ReissnerNordstrom => c.mass - c.secondary.abs(),
        HorizonFamily::Kerr => c.mass - c.secondary.abs().sqrt(),
        HorizonFamily::Btz => c.mass - c.secondary.abs(),
    }
}

fn require_in_domain(kind: &HorizonKind, c: &ChargeSet) -> Result<()> {
    let margin = domain_margin(kind, c);
    // A NaN anywhere in the state surfaces as a NaN margin.
    if !margin.is_finite() || c.mass <= 0.0 || margin < 0.0 {
        return Err(Error::DomainViolation { margin });
    }
    Ok(())
}

/// Horizon entropy from the state variables, taking the outer root.
pub fn entropy_from_state(kind: &HorizonKind, c: &ChargeSet) -> Result<f64> {
    require_in_domain(kind, c)?;
    let m = c.mass;
    let s = c.secondary;
    let value = match kind.family {
        HorizonFamily::ReissnerNordstrom => {
            // The domain check guarantees |Q| <= M, so the radicand can
            // only dip below zero by rounding.
            let radicand = (1.0 - (s / m) * (s / m)).max(0.0);
            2.0 * m * m - s * s + 2.0 * m * m * radicand.sqrt()
        }
        HorizonFamily::Kerr => {
            let ratio = s / (m * m);
            let radicand = (1.0 - ratio * ratio).max(0.0);
            2.0 * m * m + 2.0 * m * m * radicand.sqrt()
        }
        HorizonFamily::Btz => {
            let radicand = (m * m - s * s).max(0.0);
            ((m + radicand.sqrt()) / 2.0).sqrt()
        }
    };
    Ok(value)
}

/// Mass (national income) from entropy and the secondary variable.
///
/// RN: `M = sqrt(S)/2 + Q^2/(2 sqrt(S))`;
/// Kerr: `M = sqrt((4J^2 + S^2)/S)/2`;
/// BTZ: `M = S^2 + J^2/(4S^2)`.
pub fn mass_from_entropy(kind: &HorizonKind, s: f64, secondary: f64) -> Result<f64> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::NonpositiveEntropy);
    }
    let j = secondary;
    let value = match kind.family {
        HorizonFamily::ReissnerNordstrom => 0.5 * s.sqrt() + j * j / (2.0 * s.sqrt()),
        HorizonFamily::Kerr => 0.5 * ((4.0 * j * j + s * s) / s).sqrt(),
        HorizonFamily::Btz => s * s + j * j / (4.0 * s * s),
    };
    Ok(value)
}

/// `|mass_from_entropy(entropy_from_state(c)) - M|`: the two closed forms
/// are mutual inverses, so this vanishes up to rounding.
pub fn roundtrip_gap(kind: &HorizonKind, c: &ChargeSet) -> Result<f64> {
    let s = entropy_from_state(kind, c)?;
    let m = mass_from_entropy(kind, s, c.secondary)?;
    Ok((m - c.mass).abs())
}

/// Kerr extremality indicator `J / M^2`; +-1 on the extremal boundary.
pub fn kerr_extremality(c: &ChargeSet) -> f64 {
    c.secondary / (c.mass * c.mass)
}

/// Analytic partials `(dM/dS, dM/dsecondary)` of [`mass_from_entropy`].
///
/// `dM/dS` is the Hawking-temperature analogue (marginal inclination to
/// entropy); the secondary partial is the electric-potential or
/// angular-speed analogue.
pub fn marginal_inclinations(kind: &HorizonKind, s: f64, secondary: f64) -> Result<(f64, f64)> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::NonpositiveEntropy);
    }
    let j = secondary;
    let pair = match kind.family {
        HorizonFamily::ReissnerNordstrom => {
            let sqrt_s = s.sqrt();
            (0.25 / sqrt_s - j * j / (4.0 * s * sqrt_s), j / sqrt_s)
        }
        HorizonFamily::Kerr => {
            let f = (4.0 * j * j + s * s) / s;
            let sqrt_f = f.sqrt();
            (
                0.25 * (1.0 - 4.0 * j * j / (s * s)) / sqrt_f,
                2.0 * j / (s * sqrt_f),
            )
        }
        HorizonFamily::Btz => (2.0 * s - j * j / (2.0 * s * s * s), j / (2.0 * s * s)),
    };
    Ok(pair)
}

/// Gap between the square-root form `S = 2 sqrt(M/(4 + J^2))` and the
/// canonical inverse of the posynomial form; the two agree only at J = 0.
pub fn btz_discrepancy(m: f64, j: f64) -> Result<f64> {
    let kind = HorizonKind::new(HorizonFamily::Btz, Labeling::Thermodynamic);
    let c = ChargeSet::new(m, j);
    require_in_domain(&kind, &c)?;
    let form_a = 2.0 * (m / (4.0 + j * j)).sqrt();
    let form_b = entropy_from_state(&kind, &c)?;
    Ok((form_a - form_b).abs())
}

/// One cell of a horizon surface sample grid.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridRow {
    pub mass: f64,
    pub secondary: f64,
    /// Present only for in-domain cells.
    pub entropy: Option<f64>,
    pub in_domain: bool,
}

/// Rectangular parameter ranges for [`horizon_grid`].
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct GridRanges {
    pub mass: (f64, f64),
    pub secondary: (f64, f64),
}

/// Samples the surface over a rectangular grid; out-of-domain cells stay
/// in the table but are marked and carry no entropy value.
///
/// Needs at least two points per axis and at least one in-domain cell.
pub fn horizon_grid(
    kind: &HorizonKind,
    ranges: &GridRanges,
    resolution: (usize, usize),
) -> Result<Vec<GridRow>> {
    let (nm, ns) = resolution;
    if nm < 2 || ns < 2 {
        return Err(Error::InvalidInput(
            "grid resolution must be at least 2 per axis".into(),
        ));
    }
    let degenerate_range = |lo: f64, hi: f64| !lo.is_finite() || !hi.is_finite() || lo >= hi;
    if degenerate_range(ranges.mass.0, ranges.mass.1)
        || degenerate_range(ranges.secondary.0, ranges.secondary.1)
    {
        return Err(Error::InvalidInput(
            "grid ranges must be nonempty intervals".into(),
        ));
    }

    let mut rows = Vec::with_capacity(nm * ns);
    let mut any_in_domain = false;
    for im in 0..nm {
        let mass = ranges.mass.0 + (ranges.mass.1 - ranges.mass.0) * im as f64 / (nm - 1) as f64;
        for is in 0..ns {
            let secondary = ranges.secondary.0
                + (ranges.secondary.1 - ranges.secondary.0) * is as f64 / (ns - 1) as f64;
            let c = ChargeSet::new(mass, secondary);
            let in_domain = mass > 0.0 && domain_margin(kind, &c) >= 0.0;
            let entropy = if in_domain {
                Some(entropy_from_state(kind, &c)?)
            } else {
                None
            };
            any_in_domain |= in_domain;
            rows.push(GridRow {
                mass,
                secondary,
                entropy,
                in_domain,
            });
        }
    }
    if !any_in_domain {
        return Err(Error::EmptyDomainIntersection);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;

    fn kind(family: HorizonFamily) -> HorizonKind {
        HorizonKind::new(family, Labeling::Thermodynamic)
    }

    #[test]
    fn rn_entropy_values() {
        let k = kind(HorizonFamily::ReissnerNordstrom);
        assert_eq!(
            entropy_from_state(&k, &ChargeSet::new(1.0, 0.0)).unwrap(),
            4.0
        );
        assert_eq!(
            entropy_from_state(&k, &ChargeSet::new(1.0, 1.0)).unwrap(),
            1.0
        );
        assert!(matches!(
            entropy_from_state(&k, &ChargeSet::new(1.0, 1.5)),
            Err(Error::DomainViolation { .. })
        ));
        assert!(matches!(
            entropy_from_state(&k, &ChargeSet::new(-1.0, 0.0)),
            Err(Error::DomainViolation { .. })
        ));
    }

    #[test]
    fn kerr_entropy_values() {
        let k = kind(HorizonFamily::Kerr);
        // Extremal Kerr: the root term vanishes.
        assert_eq!(
            entropy_from_state(&k, &ChargeSet::new(1.0, 1.0)).unwrap(),
            2.0
        );
        assert_eq!(
            entropy_from_state(&k, &ChargeSet::new(1.0, 0.0)).unwrap(),
            4.0
        );
    }

    #[test]
    fn mass_from_entropy_values() {
        assert_eq!(
            mass_from_entropy(&kind(HorizonFamily::ReissnerNordstrom), 4.0, 0.0).unwrap(),
            1.0
        );
        assert_eq!(
            mass_from_entropy(&kind(HorizonFamily::Btz), 1.0, 0.0).unwrap(),
            1.0
        );
        assert_eq!(
            mass_from_entropy(&kind(HorizonFamily::Kerr), 2.0, 1.0).unwrap(),
            1.0
        );
        assert_eq!(
            mass_from_entropy(&kind(HorizonFamily::Kerr), 0.0, 1.0),
            Err(Error::NonpositiveEntropy)
        );
        assert_eq!(
            mass_from_entropy(&kind(HorizonFamily::Kerr), -2.0, 1.0),
            Err(Error::NonpositiveEntropy)
        );
    }

    #[test]
    fn roundtrips_are_exact_inverses() {
        let mut rng = StdRng::seed_from_u64(29);
        for _ in 0..2000 {
            let m = rng.random_range(0.2..3.0);
            // RN: |Q| <= M.
            let q = rng.random_range(-1.0..1.0) * m;
            let gap = roundtrip_gap(
                &kind(HorizonFamily::ReissnerNordstrom),
                &ChargeSet::new(m, q),
            )
            .unwrap();
            assert!(gap <= 1e-12, "RN gap {gap} at M={m}, Q={q}");

            // Kerr: |J| <= M^2.
            let j = rng.random_range(-1.0..1.0) * m * m;
            let gap = roundtrip_gap(&kind(HorizonFamily::Kerr), &ChargeSet::new(m, j)).unwrap();
            assert!(gap <= 1e-12, "Kerr gap {gap} at M={m}, J={j}");

            // BTZ: |J| <= M.
            let j = rng.random_range(-1.0..1.0) * m;
            let gap = roundtrip_gap(&kind(HorizonFamily::Btz), &ChargeSet::new(m, j)).unwrap();
            assert!(gap <= 1e-12, "BTZ gap {gap} at M={m}, J={j}");
        }
    }

    #[test]
    fn domain_margins() {
        assert_eq!(
            domain_margin(
                &kind(HorizonFamily::ReissnerNordstrom),
                &ChargeSet::new(1.0, 1.0)
            ),
            0.0
        );
        assert_eq!(
            domain_margin(&kind(HorizonFamily::Kerr), &ChargeSet::new(1.0, 0.25)),
            0.5
        );
        assert_eq!(
            domain_margin(&kind(HorizonFamily::Btz), &ChargeSet::new(1.0, 1.5)),
            -0.5
        );
    }

    #[test]
    fn extremality_indicator() {
        assert_eq!(kerr_extremality(&ChargeSet::new(1.0, 1.0)), 1.0);
        assert_eq!(kerr_extremality(&ChargeSet::new(2.0, 0.0)), 0.0);
        assert_eq!(kerr_extremality(&ChargeSet::new(1.0, -1.0)), -1.0);
    }

    #[test]
    fn marginal_values() {
        let (ds, dq) =
            marginal_inclinations(&kind(HorizonFamily::ReissnerNordstrom), 4.0, 0.0).unwrap();
        assert_eq!(ds, 0.125);
        assert_eq!(dq, 0.0);

        // Extremal RN: temperature analogue vanishes at S = Q^2.
        let q = 0.7;
        let (ds, _) =
            marginal_inclinations(&kind(HorizonFamily::ReissnerNordstrom), q * q, q).unwrap();
        assert!(ds.abs() <= 1e-15);

        let (ds, dj) = marginal_inclinations(&kind(HorizonFamily::Btz), 1.0, 0.0).unwrap();
        assert_eq!(ds, 2.0);
        assert_eq!(dj, 0.0);
    }

    #[test]
    fn marginals_match_central_differences() {
        let mut rng = StdRng::seed_from_u64(31);
        let h = 1e-6;
        for _ in 0..500 {
            for family in [
                HorizonFamily::ReissnerNordstrom,
                HorizonFamily::Kerr,
                HorizonFamily::Btz,
            ] {
                let k = kind(family);
                let s = rng.random_range(0.5..5.0);
                let sec = rng.random_range(-1.5..1.5);
                let (ds, dsec) = marginal_inclinations(&k, s, sec).unwrap();
                let fd_s = (mass_from_entropy(&k, s + h, sec).unwrap()
                    - mass_from_entropy(&k, s - h, sec).unwrap())
                    / (2.0 * h);
                let fd_sec = (mass_from_entropy(&k, s, sec + h).unwrap()
                    - mass_from_entropy(&k, s, sec - h).unwrap())
                    / (2.0 * h);
                let scale_s = 1.0_f64.max(ds.abs());
                let scale_sec = 1.0_f64.max(dsec.abs());
                assert!(
                    (ds - fd_s).abs() <= 1e-6 * scale_s,
                    "{family:?} dS at S={s}, sec={sec}"
                );
                assert!(
                    (dsec - fd_sec).abs() <= 1e-6 * scale_sec,
                    "{family:?} dsec at S={s}, sec={sec}"
                );
            }
        }
    }

    #[test]
    fn rn_temperature_positive_inside_domain() {
        let k = kind(HorizonFamily::ReissnerNordstrom);
        let mut rng = StdRng::seed_from_u64(37);
        for _ in 0..1000 {
            let q: f64 = rng.random_range(-1.5..1.5);
            // Strictly inside the domain: S > Q^2.
            let s = q * q + rng.random_range(0.01..4.0);
            let (ds, _) = marginal_inclinations(&k, s, q).unwrap();
            assert!(ds > 0.0, "dM/dS = {ds} at S={s}, Q={q}");
        }
    }

    #[test]
    fn btz_discrepancy_values() {
        assert_eq!(btz_discrepancy(1.0, 0.0).unwrap(), 0.0);
        assert_eq!(btz_discrepancy(4.0, 0.0).unwrap(), 0.0);
        let gap = btz_discrepancy(1.0, 1.0).unwrap();
        assert!((gap - 0.187320).abs() <= 1e-5, "gap {gap}");
        assert!(matches!(
            btz_discrepancy(1.0, 1.5),
            Err(Error::DomainViolation { .. })
        ));
        // Strictly positive off J = 0.
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..200 {
            let m = rng.random_range(0.3..3.0);
            let j = rng.random_range(0.05..1.0) * m;
            assert!(btz_discrepancy(m, j).unwrap() > 0.0);
        }
    }

    #[test]
    fn labeling_never_changes_results() {
        let mut rng = StdRng::seed_from_u64(43);
        for _ in 0..500 {
            for family in [
                HorizonFamily::ReissnerNordstrom,
                HorizonFamily::Kerr,
                HorizonFamily::Btz,
            ] {
                let thermo = HorizonKind::new(family, Labeling::Thermodynamic);
                let econ = HorizonKind::new(family, Labeling::Economic);
                let m = rng.random_range(0.5..2.0);
                let sec = rng.random_range(-0.4..0.4) * m;
                let c = ChargeSet::new(m, sec);
                let s_t = entropy_from_state(&thermo, &c).unwrap();
                let s_e = entropy_from_state(&econ, &c).unwrap();
                assert_eq!(s_t.to_bits(), s_e.to_bits());
                let m_t = mass_from_entropy(&thermo, s_t, sec).unwrap();
                let m_e = mass_from_entropy(&econ, s_e, sec).unwrap();
                assert_eq!(m_t.to_bits(), m_e.to_bits());
            }
        }
    }

    #[test]
    fn grid_sampling() {
        let k = kind(HorizonFamily::ReissnerNordstrom);
        let rows = horizon_grid(
            &k,
            &GridRanges {
                mass: (1.0, 2.0),
                secondary: (0.0, 1.0),
            },
            (3, 3),
        )
        .unwrap();
        assert_eq!(rows.len(), 9);
        assert!(rows.iter().all(|r| r.in_domain && r.entropy.is_some()));

        let k = kind(HorizonFamily::Kerr);
        let rows = horizon_grid(
            &k,
            &GridRanges {
                mass: (0.5, 1.0),
                secondary: (0.0, 2.0),
            },
            (3, 5),
        )
        .unwrap();
        let marked: Vec<_> = rows.iter().filter(|r| !r.in_domain).collect();
        assert!(!marked.is_empty());
        assert!(marked.iter().all(|r| r.entropy.is_none()));
        for r in &rows {
            let expect =
                r.mass > 0.0 && domain_margin(&k, &ChargeSet::new(r.mass, r.secondary)) >= 0.0;
            assert_eq!(r.in_domain, expect);
        }

        assert!(matches!(
            horizon_grid(
                &k,
                &GridRanges {
                    mass: (1.0, 1.0),
                    secondary: (0.0, 1.0)
                },
                (3, 3)
            ),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            horizon_grid(
                &k,
                &GridRanges {
                    mass: (1.0, 2.0),
                    secondary: (0.0, 1.0)
                },
                (1, 3)
            ),
            Err(Error::InvalidInput(_))
        ));
        // A box entirely outside the domain.
        assert_eq!(
            horizon_grid(
                &kind(HorizonFamily::Btz),
                &GridRanges {
                    mass: (0.1, 0.2),
                    secondary: (1.0, 2.0)
                },
                (3, 3)
            ),
            Err(Error::EmptyDomainIntersection)
        );
    }
}
