//! Composition laws on the state space R^5 and the underlying Lie algebra.
//!
//! Two products ship side by side. `commutative_compose` is an abelian
//! group law whose G-component couples the (I, E) and (P, Q) pairs
//! symmetrically. `carnot_compose_bch` is the step-2 nilpotent product
//! obtained from the bracket table
//!
//! ```text
//! [X1, X2] = X5,   [X3, X4] = -X5,   all other brackets zero,
//! ```
//!
//! via the truncated Baker-Campbell-Hausdorff formula `x y = x + y + [x,y]/2`;
//! it is associative and is the law downstream code should use.
//!
//! A third product, `carnot_compose_ac`, adds half of the antisymmetric
//! coupling `AC = (I1 E2 - I2 E1) + (P1 Q2 - P2 Q1) + (E1 G2 - E2 G1)`.
//! The E-G term makes that operation non-associative (the defect is
//! computed by [`associativity_defect_ac`]); it is kept as a diagnostic
//! variant, not as a group law.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A group element in exponential coordinates (G, I, E, P, Q).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct GroupElement {
    pub g: f64,
    pub i: f64,
    pub e: f64,
    pub p: f64,
    pub q: f64,
}

impl GroupElement {
    pub fn new(g: f64, i: f64, e: f64, p: f64, q: f64) -> Self {
        Self { g, i, e, p, q }
    }

    pub fn identity() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0, 0.0)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.g, -self.i, -self.e, -self.p, -self.q)
    }
}

/// Coefficients (c1..c5) over the algebra basis X1..X5.
///
/// The horizontal directions X1..X4 pair with the coordinates
/// (I, E, P, Q); the center X5 = d/dG pairs with G.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlgebraVector(pub [f64; 5]);

impl AlgebraVector {
    pub fn zero() -> Self {
        Self([0.0; 5])
    }

    pub fn basis(a: usize) -> Result<Self> {
        if !(1..=5).contains(&a) {
            return Err(Error::IndexOutOfRange {
                what: "algebra basis (1..=5)",
                index: a,
            });
        }
        let mut c = [0.0; 5];
        c[a - 1] = 1.0;
        Ok(Self(c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0.0)
    }

    /// Coefficients read out of a group element in exponential
    /// coordinates: (I, E, P, Q; G).
    pub fn from_group(x: &GroupElement) -> Self {
        Self([x.i, x.e, x.p, x.q, x.g])
    }
}

/// The commutative product: coordinates add, while the G-component picks
/// up the symmetric coupling `-I1 E2 + P1 Q2 - I2 E1 + P2 Q1`.
pub fn commutative_compose(x: &GroupElement, y: &GroupElement) -> GroupElement {
    GroupElement::new(
        x.g + y.g - x.i * y.e + x.p * y.q - y.i * x.e + y.p * x.q,
        x.i + y.i,
        x.e + y.e,
        x.p + y.p,
        x.q + y.q,
    )
}

/// Inverse for [`commutative_compose`]: `(-G - 2IE + 2PQ, -I, -E, -P, -Q)`.
pub fn commutative_inverse(x: &GroupElement) -> GroupElement {
    GroupElement::new(
        -x.g - 2.0 * x.i * x.e + 2.0 * x.p * x.q,
        -x.i,
        -x.e,
        -x.p,
        -x.q,
    )
}

/// The antisymmetric coupling used by [`carnot_compose_ac`]:
/// `(I1 E2 - I2 E1) + (P1 Q2 - P2 Q1) + (E1 G2 - E2 G1)`.
pub fn antisymmetric_coupling(x: &GroupElement, y: &GroupElement) -> f64 {
    (x.i * y.e - y.i * x.e) + (x.p * y.q - y.p * x.q) + (x.e * y.g - y.e * x.g)
}

/// Carnot-style product `x y = x + y` with `G += AC/2`, where AC is the
/// coupling of [`antisymmetric_coupling`].
///
/// Because AC couples E with the G-component itself, the operation fails
/// associativity; see [`associativity_defect_ac`] for the exact defect.
pub fn carnot_compose_ac(x: &GroupElement, y: &GroupElement) -> GroupElement {
    GroupElement::new(
        x.g + y.g + 0.5 * antisymmetric_coupling(x, y),
        x.i + y.i,
        x.e + y.e,
        x.p + y.p,
        x.q + y.q,
    )
}

/// The step-2 nilpotent (Baker-Campbell-Hausdorff) product of the algebra:
/// coordinates add and
/// `G += [(I1 E2 - I2 E1) - (P1 Q2 - P2 Q1)] / 2`,
/// the cocycle signs coming from `[X1, X2] = X5` and `[X3, X4] = -X5`.
///
/// This product is associative, with identity 0 and inverse `-x`.
pub fn carnot_compose_bch(x: &GroupElement, y: &GroupElement) -> GroupElement {
    GroupElement::new(
        x.g + y.g + 0.5 * ((x.i * y.e - y.i * x.e) - (x.p * y.q - y.p * x.q)),
        x.i + y.i,
        x.e + y.e,
        x.p + y.p,
        x.q + y.q,
    )
}

/// Bracket of two basis fields, expanded over X1..X5.
///
/// Only `[X1, X2] = X5` and `[X3, X4] = -X5` (with antisymmetry) are
/// nonzero; X5 is central.
pub fn lie_bracket_structure(a: usize, b: usize) -> Result<AlgebraVector> {
    for idx in [a, b] {
        if !(1..=5).contains(&idx) {
            return Err(Error::IndexOutOfRange {
                what: "algebra basis (1..=5)",
                index: idx,
            });
        }
    }
    let mut c = [0.0; 5];
    match (a, b) {
        (1, 2) => c[4] = 1.0,
        (2, 1) => c[4] = -1.0,
        (3, 4) => c[4] = -1.0,
        (4, 3) => c[4] = 1.0,
        _ => {}
    }
    Ok(AlgebraVector(c))
}

/// Bilinear extension of the bracket table to arbitrary algebra vectors.
pub fn bracket(x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
    // Only the X5 component can be produced.
    let c5 = (x.0[0] * y.0[1] - x.0[1] * y.0[0]) - (x.0[2] * y.0[3] - x.0[3] * y.0[2]);
    AlgebraVector([0.0, 0.0, 0.0, 0.0, c5])
}

/// Scans every nested bracket `[X_a, [X_b, X_c]]` and returns the triples
/// that fail to vanish. An empty list certifies step-2 nilpotency.
pub fn nilpotency_check() -> Vec<[usize; 3]> {
    let mut violations = Vec::new();
    for a in 1..=5 {
        for b in 1..=5 {
            for c in 1..=5 {
                let inner = lie_bracket_structure(b, c).expect("indices in range");
                let outer = bracket(&AlgebraVector::basis(a).expect("index in range"), &inner);
                if !outer.is_zero() {
                    violations.push([a, b, c]);
                }
            }
        }
    }
    violations
}

/// G-component gap of `(x y) w` against `x (y w)` under
/// [`carnot_compose_ac`], computed by direct triple composition.
pub fn associativity_defect_ac(x: &GroupElement, y: &GroupElement, w: &GroupElement) -> f64 {
    let left = carnot_compose_ac(&carnot_compose_ac(x, y), w);
    let right = carnot_compose_ac(x, &carnot_compose_ac(y, w));
    left.g - right.g
}

/// Closed form of the same defect:
/// `-1/4 (E_w AC(x, y) + E_x AC(y, w))`.
///
/// Expanding the triple products, every term of the coupling cancels
/// except the feedback of AC into the E-G term, which leaves exactly this
/// expression.
pub fn associativity_defect_ac_closed(x: &GroupElement, y: &GroupElement, w: &GroupElement) -> f64 {
    -0.25 * (w.e * antisymmetric_coupling(x, y) + x.e * antisymmetric_coupling(y, w))
}
