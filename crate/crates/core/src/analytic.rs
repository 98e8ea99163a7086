//! Closed-form optimal approximation by mixtures of the six Pauli eigenstates.
//!
//! Every state is first reduced to the canonical octant (x, y, z ≥ 0) by sign
//! flips, which permute the six eigenstates pairwise. In that octant the state
//! is described by
//!
//! ```text
//!     a = (1 - z)/2,   u = x/2,   v = y/2
//! ```
//!
//! and falls into one of five regions, each with its own closed form:
//!
//! | region | condition                                            | support        |
//! |--------|------------------------------------------------------|----------------|
//! | Exact  | a ≥ u + v                                            | p0, p1, p2, p4 |
//! | I      | a < u+v ≤ (3−4a)/2, a−v+2u ≥ 0, a−u+2v ≥ 0           | p0, p2, p4     |
//! | II     | a < u+v ≤ (3−4a)/2, a−v+2u ≥ 0, a−u+2v < 0           | p0, p2         |
//! | III    | a < u+v ≤ (3−4a)/2, a−v+2u < 0, a−u+2v ≥ 0           | p0, p4         |
//! | IV     | u+v > (3−4a)/2                                       | p2, p4         |
//!
//! The older single-formula reference solution is available as
//! [`sacchi_reference`]; it evaluates the case-I expressions over a wider
//! window and can produce negative weights there.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use crate::error::{Error, Result};
use crate::qubit::{bloch_from_akphi, AkPhiParams, BlochVector, WeightVector, INPUT_TOL};

/// Canonical-octant coordinates of a state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UvParams {
    pub a: f64,
    pub u: f64,
    pub v: f64,
}

impl UvParams {
    pub fn new(a: f64, u: f64, v: f64) -> Result<Self> {
        for (name, value) in [("a", a), ("u", u), ("v", v)] {
            if !value.is_finite() {
                return Err(Error::NonFinite(name));
            }
        }
        if !(-INPUT_TOL..=0.5 + INPUT_TOL).contains(&a) {
            return Err(Error::InvalidParameter { name: "a", value: a });
        }
        if u < -INPUT_TOL {
            return Err(Error::InvalidParameter { name: "u", value: u });
        }
        if v < -INPUT_TOL {
            return Err(Error::InvalidParameter { name: "v", value: v });
        }
        let p = Self { a: a.clamp(0.0, 0.5), u: u.max(0.0), v: v.max(0.0) };
        p.bloch().check_physical()?;
        Ok(p)
    }

    /// Bloch vector (2u, 2v, 1 − 2a).
    pub fn bloch(&self) -> BlochVector {
        BlochVector::new(2.0 * self.u, 2.0 * self.v, 1.0 - 2.0 * self.a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    Exact,
    CaseI,
    CaseII,
    CaseIII,
    CaseIV,
}

impl Region {
    pub const ALL: [Region; 5] = [Region::Exact, Region::CaseI, Region::CaseII, Region::CaseIII, Region::CaseIV];

    pub fn as_str(&self) -> &'static str {
        match self {
            Region::Exact => "Exact",
            Region::CaseI => "CaseI",
            Region::CaseII => "CaseII",
            Region::CaseIII => "CaseIII",
            Region::CaseIV => "CaseIV",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sign flips taking a Bloch vector into the canonical octant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CanonicalMap {
    pub sign_x: i8,
    pub sign_y: i8,
    pub sign_z: i8,
}

impl CanonicalMap {
    pub const IDENTITY: CanonicalMap = CanonicalMap { sign_x: 1, sign_y: 1, sign_z: 1 };

    /// Multiplies each component by its sign. The map is an involution, so this
    /// both canonicalizes and restores.
    pub fn apply(&self, r: &BlochVector) -> BlochVector {
        BlochVector::new(f64::from(self.sign_x) * r.x, f64::from(self.sign_y) * r.y, f64::from(self.sign_z) * r.z)
    }

    /// Swaps the weight pairs (p0,p1), (p2,p3), (p4,p5) whose axis is flipped.
    /// Also an involution.
    pub fn apply_to_weights(&self, w: &WeightVector) -> WeightVector {
        let mut p = w.as_slice().to_vec();
        assert_eq!(p.len(), 6, "Pauli-eigenstate weights must have length 6");
        if self.sign_z < 0 {
            p.swap(0, 1);
        }
        if self.sign_x < 0 {
            p.swap(2, 3);
        }
        if self.sign_y < 0 {
            p.swap(4, 5);
        }
        WeightVector::from_raw(p)
    }
}

/// Result of an approximation: optimal distance, weights, and the region that produced it.
///
/// `region` is `None` for numerical solvers and for the reference formula.
/// `valid` is false only when the weights leave the probability simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub distance: f64,
    pub weights: WeightVector,
    pub region: Option<Region>,
    pub valid: bool,
}

/// Free parameters of the exact decomposition family.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ExactFamilyParams {
    pub t1: f64,
    pub t2: f64,
}

pub fn compute_uv(params: &AkPhiParams) -> (f64, f64) {
    let c = params.coherence();
    (c * params.phi().cos(), c * params.phi().sin())
}

pub fn canonicalize(r: &BlochVector) -> Result<(UvParams, CanonicalMap)> {
    r.check_physical()?;
    let sign = |c: f64| if c.is_sign_negative() && c != 0.0 { -1 } else { 1 };
    let map = CanonicalMap { sign_x: sign(r.x), sign_y: sign(r.y), sign_z: sign(r.z) };
    let canon = UvParams { a: 0.5 * (1.0 - r.z.abs()), u: 0.5 * r.x.abs(), v: 0.5 * r.y.abs() };
    Ok((canon, map))
}

pub fn classify(p: &UvParams) -> Region {
    let UvParams { a, u, v } = *p;
    if a - u - v >= 0.0 {
        Region::Exact
    } else if u + v > 0.5 * (3.0 - 4.0 * a) {
        Region::CaseIV
    } else if a - v + 2.0 * u >= 0.0 {
        if a - u + 2.0 * v >= 0.0 {
            Region::CaseI
        } else {
            Region::CaseII
        }
    } else {
        // a − v + 2u < 0 forces a − u + 2v > 0 for non-negative a, u, v
        Region::CaseIII
    }
}

pub fn solve_exact_family(p: &UvParams, t: &ExactFamilyParams) -> Result<WeightVector> {
    let UvParams { a, u, v } = *p;
    let budget = a - u - v;
    if budget < 0.0 {
        return Err(Error::NotExactRegion(budget));
    }
    let ExactFamilyParams { t1, t2 } = *t;
    if !(t1.is_finite() && t2.is_finite()) {
        return Err(Error::NonFinite("ExactFamilyParams"));
    }
    if t1 < -INPUT_TOL || t2 < -INPUT_TOL || t1 + t2 > budget + INPUT_TOL {
        return Err(Error::FamilyOutOfRange { t1, t2, budget });
    }
    let (t1, t2) = (t1.max(0.0), t2.max(0.0));
    WeightVector::new(vec![1.0 - a - u - v - t1 - t2, a - u - v - t1 - t2, 2.0 * u + t1, t1, 2.0 * v + t2, t2])
}

/// Closed-form weights and distance for a canonical point already classified into `region`.
fn canonical_solution(p: &UvParams, region: Region) -> (f64, [f64; 6]) {
    let UvParams { a, u, v } = *p;
    match region {
        Region::Exact => (0.0, [1.0 - a - u - v, a - u - v, 2.0 * u, 0.0, 2.0 * v, 0.0]),
        Region::CaseI => (
            2.0 * (u + v - a) / 3f64.sqrt(),
            [
                1.0 - 4.0 * a / 3.0 - 2.0 * u / 3.0 - 2.0 * v / 3.0,
                0.0,
                2.0 * a / 3.0 - 2.0 * v / 3.0 + 4.0 * u / 3.0,
                0.0,
                2.0 * a / 3.0 - 2.0 * u / 3.0 + 4.0 * v / 3.0,
                0.0,
            ],
        ),
        Region::CaseII => ((4.0 * v * v + 2.0 * (u - a) * (u - a)).sqrt(), [1.0 - a - u, 0.0, a + u, 0.0, 0.0, 0.0]),
        Region::CaseIII => ((4.0 * u * u + 2.0 * (v - a) * (v - a)).sqrt(), [1.0 - a - v, 0.0, 0.0, 0.0, a + v, 0.0]),
        Region::CaseIV => {
            let z = 1.0 - 2.0 * a;
            let edge = u + v - 0.5;
            ((z * z + 2.0 * edge * edge).sqrt(), [0.0, 0.0, 0.5 + u - v, 0.0, 0.5 - u + v, 0.0])
        }
    }
}

/// Optimal convex approximation of the state `r` by the six Pauli eigenstates.
pub fn solve(r: &BlochVector) -> Result<Solution> {
    let (canon, map) = canonicalize(r)?;
    let region = classify(&canon);
    let (distance, weights) = canonical_solution(&canon, region);
    let weights = map.apply_to_weights(&WeightVector::new(weights.to_vec())?);
    Ok(Solution { distance, weights, region: Some(region), valid: true })
}

pub fn solve_akphi(params: &AkPhiParams) -> Result<Solution> {
    solve(&bloch_from_akphi(params))
}

/// Coherence threshold above which the reference case-I window opens.
pub fn sacchi_threshold(a: f64, phi: f64) -> Result<f64> {
    if !(a.is_finite() && phi.is_finite()) {
        return Err(Error::NonFinite("sacchi_threshold"));
    }
    let spread = a * (1.0 - a);
    if spread <= 0.0 {
        return Err(Error::DegenerateParameter("a(1 - a) must be positive"));
    }
    let trig = phi.cos() + phi.sin();
    if trig <= 0.0 {
        return Err(Error::DegenerateParameter("cos(phi) + sin(phi) must be positive"));
    }
    Ok(a / (spread.sqrt() * trig))
}

/// Reference case-I solution evaluated without re-checking the region.
///
/// Applies for canonical parameters (a ≤ ½, φ ∈ [0, π/2]) with
/// `k_th < k ≤ a/√(a(1−a))`. Weights may be negative; `valid` reports whether
/// they are a probability vector.
pub fn sacchi_reference(params: &AkPhiParams) -> Result<Solution> {
    let (a, k, phi) = (params.a(), params.k(), params.phi());
    if a > 0.5 + INPUT_TOL {
        return Err(Error::InvalidParameter { name: "a", value: a });
    }
    if phi > FRAC_PI_2 + INPUT_TOL {
        return Err(Error::InvalidParameter { name: "phi", value: phi });
    }
    let lower = sacchi_threshold(a, phi)?;
    let upper = a / (a * (1.0 - a)).sqrt();
    if k <= lower || k > upper + INPUT_TOL {
        return Err(Error::OutOfWindow { k, lower, upper });
    }
    let (u, v) = compute_uv(params);
    let (distance, weights) = canonical_solution(&UvParams { a, u, v }, Region::CaseI);
    let weights = WeightVector::from_raw(weights.to_vec());
    let valid = weights.min() >= -INPUT_TOL;
    Ok(Solution { distance, weights, region: None, valid })
}
