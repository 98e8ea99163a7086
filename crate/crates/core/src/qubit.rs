//! Qubit states as 2×2 Hermitian matrices and Bloch vectors.
//!
//! The approximation problem lives entirely in Bloch space: the difference of
//! two density matrices is traceless, so its trace norm is the Euclidean
//! distance between the two Bloch vectors. Matrices are kept as a boundary
//! representation and for cross-checking that identity.

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Slack tolerated on range checks before an input is rejected.
pub const INPUT_TOL: f64 = 1e-12;

pub type ComplexScalar = Complex64;

/// Clamp `value` into `[lo, hi]` if it overshoots by at most [`INPUT_TOL`].
fn clamp_checked(name: &'static str, value: f64, lo: f64, hi: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::NonFinite(name));
    }
    if value < lo - INPUT_TOL || value > hi + INPUT_TOL {
        return Err(Error::InvalidParameter { name, value });
    }
    Ok(value.clamp(lo, hi))
}

/// Hermitian 2×2 matrix stored as its diagonal and upper off-diagonal entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMatrix2 {
    pub d0: f64,
    pub d1: f64,
    pub off: ComplexScalar,
}

impl HermitianMatrix2 {
    pub fn new(d0: f64, d1: f64, off: ComplexScalar) -> Result<Self> {
        if !(d0.is_finite() && d1.is_finite() && off.re.is_finite() && off.im.is_finite()) {
            return Err(Error::NonFinite("HermitianMatrix2"));
        }
        Ok(Self { d0, d1, off })
    }

    pub fn zero() -> Self {
        Self { d0: 0.0, d1: 0.0, off: Complex64::new(0.0, 0.0) }
    }

    pub fn pauli_x() -> Self {
        Self { d0: 0.0, d1: 0.0, off: Complex64::new(1.0, 0.0) }
    }

    pub fn pauli_y() -> Self {
        Self { d0: 0.0, d1: 0.0, off: Complex64::new(0.0, -1.0) }
    }

    pub fn pauli_z() -> Self {
        Self { d0: 1.0, d1: -1.0, off: Complex64::new(0.0, 0.0) }
    }

    pub fn trace(&self) -> f64 {
        self.d0 + self.d1
    }

    pub fn det(&self) -> f64 {
        self.d0 * self.d1 - self.off.norm_sqr()
    }

    /// Entry `(row, col)`; `(1, 0)` is the conjugate of the stored off-diagonal.
    pub fn entry(&self, row: usize, col: usize) -> ComplexScalar {
        match (row, col) {
            (0, 0) => Complex64::new(self.d0, 0.0),
            (1, 1) => Complex64::new(self.d1, 0.0),
            (0, 1) => self.off,
            (1, 0) => self.off.conj(),
            _ => panic!("index ({row}, {col}) out of range for a 2x2 matrix"),
        }
    }

    /// Real trace of the product with another Hermitian matrix.
    pub fn trace_product(&self, other: &Self) -> f64 {
        // Tr(AB) = a00 b00 + a11 b11 + 2 Re(a01 conj(b01))
        self.d0 * other.d0 + self.d1 * other.d1 + 2.0 * (self.off * other.off.conj()).re
    }

    /// Eigenvalues in ascending order, from the closed-form quadratic.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let mean = 0.5 * (self.d0 + self.d1);
        let half_gap = 0.5 * (self.d0 - self.d1);
        let radius = half_gap.hypot(self.off.norm());
        (mean - radius, mean + radius)
    }
}

impl Add for HermitianMatrix2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { d0: self.d0 + rhs.d0, d1: self.d1 + rhs.d1, off: self.off + rhs.off }
    }
}

impl Sub for HermitianMatrix2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { d0: self.d0 - rhs.d0, d1: self.d1 - rhs.d1, off: self.off - rhs.off }
    }
}

impl Mul<HermitianMatrix2> for f64 {
    type Output = HermitianMatrix2;
    fn mul(self, rhs: HermitianMatrix2) -> HermitianMatrix2 {
        HermitianMatrix2 { d0: self * rhs.d0, d1: self * rhs.d1, off: rhs.off * self }
    }
}

/// Target-state parameters: population `a` of |1⟩, coherence factor `k` and phase `phi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AkPhiParams {
    a: f64,
    k: f64,
    phi: f64,
}

impl AkPhiParams {
    /// Validates ranges, clamping violations below [`INPUT_TOL`]. A phase at
    /// 2π (within tolerance) wraps to 0.
    pub fn new(a: f64, k: f64, phi: f64) -> Result<Self> {
        let a = clamp_checked("a", a, 0.0, 1.0)?;
        let k = clamp_checked("k", k, 0.0, 1.0)?;
        let mut phi = clamp_checked("phi", phi, 0.0, TAU)?;
        if phi >= TAU {
            phi = 0.0;
        }
        Ok(Self { a, k, phi })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Modulus of the off-diagonal entry, k·√(a(1−a)).
    pub fn coherence(&self) -> f64 {
        self.k * (self.a * (1.0 - self.a)).sqrt()
    }
}

/// Expectation values (⟨σx⟩, ⟨σy⟩, ⟨σz⟩) of a qubit state.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn l1_norm(&self) -> f64 {
        self.x.abs() + self.y.abs() + self.z.abs()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).norm()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_array(c: [f64; 3]) -> Self {
        Self::new(c[0], c[1], c[2])
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Checks that the vector represents a physical state (radius ≤ 1 up to tolerance).
    pub fn check_physical(&self) -> Result<()> {
        if !self.is_finite() {
            return Err(Error::NonFinite("BlochVector"));
        }
        let r = self.norm();
        if r > 1.0 + INPUT_TOL {
            return Err(Error::NonPhysicalRadius(r));
        }
        Ok(())
    }
}

impl Add for BlochVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for BlochVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for BlochVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<BlochVector> for f64 {
    type Output = BlochVector;
    fn mul(self, rhs: BlochVector) -> BlochVector {
        BlochVector::new(self * rhs.x, self * rhs.y, self * rhs.z)
    }
}

/// An ordered set of pure states available for mixing.
#[derive(Debug, Clone, PartialEq)]
pub struct StateSet {
    states: Vec<BlochVector>,
    labels: Vec<String>,
}

impl StateSet {
    pub fn new(states: Vec<BlochVector>, labels: Vec<String>) -> Result<Self> {
        if states.is_empty() {
            return Err(Error::EmptySet);
        }
        if labels.len() != states.len() {
            return Err(Error::LengthMismatch { expected: states.len(), found: labels.len() });
        }
        for (index, s) in states.iter().enumerate() {
            if !s.is_finite() {
                return Err(Error::NonFinite("StateSet"));
            }
            let norm = s.norm();
            if (norm - 1.0).abs() > INPUT_TOL {
                return Err(Error::NotPureState { index, norm });
            }
        }
        Ok(Self { states, labels })
    }

    /// The six Pauli eigenstates |0⟩, |1⟩, |+⟩, |−⟩, |+i⟩, |−i⟩ in that order.
    pub fn b3() -> Self {
        let states = vec![
            BlochVector::new(0.0, 0.0, 1.0),
            BlochVector::new(0.0, 0.0, -1.0),
            BlochVector::new(1.0, 0.0, 0.0),
            BlochVector::new(-1.0, 0.0, 0.0),
            BlochVector::new(0.0, 1.0, 0.0),
            BlochVector::new(0.0, -1.0, 0.0),
        ];
        let labels = ["|0>", "|1>", "|+>", "|->", "|+i>", "|-i>"];
        Self { states, labels: labels.iter().map(|s| s.to_string()).collect() }
    }

    pub fn states(&self) -> &[BlochVector] {
        &self.states
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Subset of the members at `indices`, in the given order.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        let states = indices.iter().map(|&i| self.states[i]).collect();
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        Self::new(states, labels)
    }
}

/// Probability weights over the members of a [`StateSet`].
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    p: Vec<f64>,
}

impl WeightVector {
    /// Validated constructor: entries ≥ −1e-12 (negatives clamped to 0), sum 1 ± 1e-12.
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::NotOnSimplex("empty weight vector".into()));
        }
        if p.iter().any(|w| !w.is_finite()) {
            return Err(Error::NonFinite("WeightVector"));
        }
        if let Some(w) = p.iter().find(|&&w| w < -INPUT_TOL) {
            return Err(Error::NotOnSimplex(format!("negative weight {w}")));
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > INPUT_TOL {
            return Err(Error::NotOnSimplex(format!("weights sum to {sum}")));
        }
        Ok(Self { p: p.into_iter().map(|w| w.max(0.0)).collect() })
    }

    /// Wraps raw values without any checks. Used for reference formulas that
    /// can produce negative weights.
    pub fn from_raw(p: Vec<f64>) -> Self {
        Self { p }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.p
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.p
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn is_on_simplex(&self, tol: f64) -> bool {
        self.p.iter().all(|&w| w >= -tol) && (self.p.iter().sum::<f64>() - 1.0).abs() <= tol
    }

    pub fn min(&self) -> f64 {
        self.p.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

impl std::ops::Index<usize> for WeightVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.p[i]
    }
}

pub fn density_from_akphi(params: &AkPhiParams) -> HermitianMatrix2 {
    let c = params.coherence();
    HermitianMatrix2 {
        d0: 1.0 - params.a,
        d1: params.a,
        off: Complex64::new(c * params.phi.cos(), -c * params.phi.sin()),
    }
}

pub fn bloch_from_akphi(params: &AkPhiParams) -> BlochVector {
    let c = params.coherence();
    BlochVector::new(2.0 * c * params.phi.cos(), 2.0 * c * params.phi.sin(), 1.0 - 2.0 * params.a)
}

/// ρ = (I + xσx + yσy + zσz)/2.
pub fn bloch_to_matrix(r: &BlochVector) -> Result<HermitianMatrix2> {
    r.check_physical()?;
    Ok(HermitianMatrix2 { d0: 0.5 * (1.0 + r.z), d1: 0.5 * (1.0 - r.z), off: Complex64::new(0.5 * r.x, -0.5 * r.y) })
}

pub fn matrix_to_bloch(m: &HermitianMatrix2) -> Result<BlochVector> {
    let trace = m.trace();
    if !trace.is_finite() {
        return Err(Error::NonFinite("HermitianMatrix2"));
    }
    if (trace - 1.0).abs() > INPUT_TOL {
        return Err(Error::NonUnitTrace(trace));
    }
    Ok(BlochVector::new(2.0 * m.off.re, -2.0 * m.off.im, m.d0 - m.d1))
}

/// Sum of absolute eigenvalues (equal to the sum of singular values for Hermitian input).
pub fn trace_norm(m: &HermitianMatrix2) -> f64 {
    let (lo, hi) = m.eigenvalues();
    lo.abs() + hi.abs()
}

/// Bloch vector of Σ p_i ρ_i.
pub fn mixture(set: &StateSet, w: &WeightVector) -> Result<BlochVector> {
    if set.len() != w.len() {
        return Err(Error::LengthMismatch { expected: set.len(), found: w.len() });
    }
    Ok(set.states().iter().zip(w.as_slice()).fold(BlochVector::default(), |acc, (s, &p)| acc + p * *s))
}
