//! Report and CSV generation behind the `pauli-approx` command-line tool.
//!
//! Everything here is deterministic: parallel evaluation is collected by
//! index, and aggregates are order-independent (maxima and counts).

use std::f64::consts::{FRAC_PI_3, FRAC_PI_4};
use std::fmt::{self, Write as _};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::analytic::{canonicalize, compute_uv, sacchi_reference, solve, solve_akphi, Solution};
use crate::error::Error;
use crate::oracle::{kkt_check, project_cross_polytope};
use crate::qubit::{bloch_to_matrix, mixture, trace_norm, AkPhiParams, BlochVector, StateSet, WeightVector};

#[derive(Debug, Error)]
pub enum FrontendError {
    #[error(transparent)]
    Solver(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("sweep self-check failed at a = {a}, k = {k}: {reason}")]
    SelfCheck { a: f64, k: f64, reason: String },
}

/// Input of the `solve` command.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateInput {
    AkPhi(AkPhiParams),
    Bloch(BlochVector),
}

impl StateInput {
    pub fn bloch(&self) -> BlochVector {
        match self {
            StateInput::AkPhi(p) => crate::qubit::bloch_from_akphi(p),
            StateInput::Bloch(r) => *r,
        }
    }
}

/// Parses `x,y,z`.
pub fn parse_bloch(text: &str) -> Result<BlochVector, FrontendError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(FrontendError::Argument(format!("expected x,y,z, got `{text}`")));
    }
    let mut c = [0.0; 3];
    for (slot, part) in c.iter_mut().zip(&parts) {
        *slot = part.parse().map_err(|_| FrontendError::Argument(format!("`{part}` is not a number")))?;
    }
    Ok(BlochVector::from_array(c))
}

/// Solves one state and renders distance, region, weights and the KKT flag.
pub fn run_solve(input: &StateInput) -> Result<String, FrontendError> {
    let r = input.bloch();
    let solution = solve(&r)?;
    let (canon, map) = canonicalize(&r)?;
    let kkt = kkt_check(&canon, &map.apply_to_weights(&solution.weights), 1e-9);

    let mut out = String::new();
    writeln!(out, "bloch = ({:.6}, {:.6}, {:.6})", r.x, r.y, r.z).unwrap();
    writeln!(out, "region = {}", solution.region.map_or("", |g| g.as_str())).unwrap();
    writeln!(out, "D = {:.6}", solution.distance).unwrap();
    for (i, p) in solution.weights.as_slice().iter().enumerate() {
        writeln!(out, "p{i} = {p:.6}").unwrap();
    }
    writeln!(out, "kkt = {}", if kkt.pass { "pass" } else { "fail" }).unwrap();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Closed-form solution at every grid point.
    Comment,
    /// Reference case-I formula inside its window.
    Sacchi,
    /// Closed-form minus reference distance.
    Diff,
}

impl FromStr for SweepMode {
    type Err = FrontendError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "comment" => Ok(SweepMode::Comment),
            "sacchi" => Ok(SweepMode::Sacchi),
            "diff" => Ok(SweepMode::Diff),
            other => Err(FrontendError::Argument(format!("unknown sweep mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub phi: f64,
    /// Points per axis on a ∈ [0, 1] and k ∈ [0, 1], endpoints included.
    pub grid: usize,
    pub mode: SweepMode,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self { phi: FRAC_PI_3, grid: 201, mode: SweepMode::Comment }
    }
}

impl SweepSpec {
    pub fn header(&self) -> &'static str {
        match self.mode {
            SweepMode::Comment => "a,k,phi,u,v,region,D,p0,p1,p2,p3,p4,p5",
            SweepMode::Sacchi => "a,k,phi,u,v,region,D,p0,p1,p2,p3,p4,p5,valid",
            SweepMode::Diff => "a,k,phi,D_comment,D_sacchi,diff",
        }
    }

    fn axis(&self, i: usize) -> f64 {
        i as f64 / (self.grid - 1) as f64
    }
}

/// Shortest decimal that round-trips to the same `f64`, never in exponent form.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        // folds -0 into 0
        return "0".to_string();
    }
    format!("{x}")
}

fn push_fields(line: &mut String, values: &[f64]) {
    for v in values {
        line.push(',');
        line.push_str(&format_number(*v));
    }
}

/// Checks that `solution` is on the simplex and reproduces its distance as a trace norm.
fn self_check(r: &BlochVector, solution: &Solution) -> Result<(), String> {
    if !solution.weights.is_on_simplex(1e-12) {
        return Err(format!("weights {:?} leave the simplex", solution.weights.as_slice()));
    }
    let reconstructed = reconstruction_distance(r, &solution.weights).map_err(|e| e.to_string())?;
    if (reconstructed - solution.distance).abs() > 1e-9 {
        return Err(format!("trace norm {reconstructed} != distance {}", solution.distance));
    }
    Ok(())
}

/// ‖ρ − Σ p_i ρ_i‖₁ evaluated through 2×2 matrices.
pub fn reconstruction_distance(r: &BlochVector, w: &WeightVector) -> Result<f64, Error> {
    let mixed = mixture(&StateSet::b3(), w)?;
    let rho = bloch_to_matrix(r)?;
    let sigma = bloch_to_matrix(&mixed)?;
    Ok(trace_norm(&(rho - sigma)))
}

fn sweep_row(spec: &SweepSpec, index: usize) -> Result<String, FrontendError> {
    let a = spec.axis(index / spec.grid);
    let k = spec.axis(index % spec.grid);
    let params = AkPhiParams::new(a, k, spec.phi)?;
    let (u, v) = compute_uv(&params);
    let mut line = String::new();
    line.push_str(&format_number(a));
    push_fields(&mut line, &[k, params.phi()]);

    let comment = solve_akphi(&params)?;
    if index.is_multiple_of(100) {
        let r = crate::qubit::bloch_from_akphi(&params);
        self_check(&r, &comment).map_err(|reason| FrontendError::SelfCheck { a, k, reason })?;
    }
    let reference = sacchi_reference(&params).ok();

    match spec.mode {
        SweepMode::Comment => {
            push_fields(&mut line, &[u, v]);
            line.push(',');
            line.push_str(comment.region.map_or("", |g| g.as_str()));
            push_fields(&mut line, &[comment.distance]);
            push_fields(&mut line, comment.weights.as_slice());
        }
        SweepMode::Sacchi => {
            push_fields(&mut line, &[u, v]);
            line.push(',');
            match reference {
                Some(s) => {
                    push_fields(&mut line, &[s.distance]);
                    push_fields(&mut line, s.weights.as_slice());
                    line.push(',');
                    line.push_str(if s.valid { "true" } else { "false" });
                }
                None => line.push_str(",,,,,,,,"),
            }
        }
        SweepMode::Diff => {
            push_fields(&mut line, &[comment.distance]);
            match reference {
                Some(s) => push_fields(&mut line, &[s.distance, comment.distance - s.distance]),
                None => line.push_str(",,"),
            }
        }
    }
    Ok(line)
}

/// All CSV rows (without header), a-major then k.
pub fn sweep_rows(spec: &SweepSpec) -> Result<Vec<String>, FrontendError> {
    if spec.grid < 2 {
        return Err(FrontendError::Argument(format!("grid must be at least 2, got {}", spec.grid)));
    }
    (0..spec.grid * spec.grid).into_par_iter().map(|i| sweep_row(spec, i)).collect()
}

pub fn write_sweep<W: Write>(spec: &SweepSpec, mut out: W) -> Result<usize, FrontendError> {
    let rows = sweep_rows(spec)?;
    writeln!(out, "{}", spec.header())?;
    for row in &rows {
        out.write_all(row.as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(rows.len())
}

/// Writes the sweep CSV to `path` and returns the number of data rows.
pub fn run_sweep(spec: &SweepSpec, path: &Path) -> Result<usize, FrontendError> {
    let file = File::create(path)?;
    write_sweep(spec, BufWriter::new(file))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifySpec {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// Extra samples placed next to each of the four region boundaries.
    pub boundary_samples: usize,
}

impl Default for VerifySpec {
    fn default() -> Self {
        Self { samples: 100_000, seed: 0, tol: 1e-9, boundary_samples: 10_000 }
    }
}

/// Uniform sample from the closed unit ball.
pub fn sample_ball<R: Rng>(rng: &mut R) -> BlochVector {
    loop {
        let r = BlochVector::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
        if r.norm() <= 1.0 {
            return r;
        }
    }
}

/// Region boundaries in canonical Bloch coordinates (X, Y, Z) = (2u, 2v, 1 − 2a),
/// each solved for one coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// a = u + v, i.e. X + Y + Z = 1.
    ExactFace,
    /// u + v = (3 − 4a)/2, i.e. X + Y − 1 = 2Z.
    CaseIvEdge,
    /// a − u + 2v = 0, i.e. X = 1 − Z + 2Y.
    CaseIiEdge,
    /// a − v + 2u = 0, i.e. Y = 1 − Z + 2X.
    CaseIiiEdge,
}

impl Boundary {
    pub const ALL: [Boundary; 4] =
        [Boundary::ExactFace, Boundary::CaseIvEdge, Boundary::CaseIiEdge, Boundary::CaseIiiEdge];

    fn complete(&self, s: f64, t: f64) -> [f64; 3] {
        match self {
            Boundary::ExactFace => [s, t, 1.0 - s - t],
            Boundary::CaseIvEdge => [s, t, 0.5 * (s + t - 1.0)],
            Boundary::CaseIiEdge => [1.0 - s + 2.0 * t, t, s],
            Boundary::CaseIiiEdge => [t, 1.0 - s + 2.0 * t, s],
        }
    }
}

/// Physical point within ~1e-9 of `boundary`, with random axis signs.
pub fn sample_near_boundary<R: Rng>(rng: &mut R, boundary: Boundary) -> BlochVector {
    loop {
        let c = boundary.complete(rng.gen_range(0.0..=1.0), rng.gen_range(0.0..=1.0));
        if c.iter().any(|&x| x < 0.0) {
            continue;
        }
        let mut r = BlochVector::from_array(c);
        let jitter = 1e-9;
        r = r + BlochVector::new(
            rng.gen_range(-jitter..=jitter),
            rng.gen_range(-jitter..=jitter),
            rng.gen_range(-jitter..=jitter),
        );
        if r.norm() > 1.0 {
            continue;
        }
        let flip = |c: f64, rng: &mut R| if rng.gen_bool(0.5) { -c } else { c };
        return BlochVector::new(flip(r.x, rng), flip(r.y, rng), flip(r.z, rng));
    }
}

/// Deterministic sample stream: `samples` uniform points, then the boundary booster.
pub fn verification_points(spec: &VerifySpec) -> Vec<BlochVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut points: Vec<BlochVector> = (0..spec.samples).map(|_| sample_ball(&mut rng)).collect();
    for boundary in Boundary::ALL {
        for _ in 0..spec.boundary_samples {
            points.push(sample_near_boundary(&mut rng, boundary));
        }
    }
    points
}

/// The 48 signed permutations of the coordinate axes.
pub fn signed_axis_permutations() -> Vec<([usize; 3], [f64; 3])> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::with_capacity(48);
    for perm in PERMS {
        for bits in 0..8u8 {
            let signs = [0, 1, 2].map(|i| if bits >> i & 1 == 1 { -1.0 } else { 1.0 });
            out.push((perm, signs));
        }
    }
    out
}

pub fn apply_signed_permutation(r: &BlochVector, perm: [usize; 3], signs: [f64; 3]) -> BlochVector {
    let c = r.to_array();
    BlochVector::new(signs[0] * c[perm[0]], signs[1] * c[perm[1]], signs[2] * c[perm[2]])
}

/// Canonical weights moved 5% toward each vertex outside their support.
pub fn perturbations(w: &WeightVector, support_tol: f64) -> Vec<WeightVector> {
    let p = w.as_slice();
    (0..p.len())
        .filter(|&j| p[j] <= support_tol)
        .map(|j| {
            let mut q: Vec<f64> = p.iter().map(|x| 0.95 * x).collect();
            q[j] += 0.05;
            WeightVector::from_raw(q)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct VerifyReport {
    pub samples: usize,
    pub boundary_samples: usize,
    pub tol: f64,
    pub max_oracle_gap: f64,
    pub max_simplex_violation: f64,
    pub max_reconstruction_error: f64,
    pub max_symmetry_gap: f64,
    pub kkt_passed: usize,
    pub kkt_total: usize,
    pub perturbed_failed: usize,
    pub perturbed_total: usize,
}

impl VerifyReport {
    pub fn perturbed_fail_rate(&self) -> f64 {
        if self.perturbed_total == 0 {
            1.0
        } else {
            self.perturbed_failed as f64 / self.perturbed_total as f64
        }
    }

    pub fn passed(&self) -> bool {
        self.max_oracle_gap <= self.tol
            && self.max_simplex_violation <= self.tol
            && self.max_reconstruction_error <= self.tol
            && self.max_symmetry_gap <= self.tol
            && self.kkt_passed == self.kkt_total
            && self.perturbed_fail_rate() >= 0.99
    }

    fn merge(mut self, other: Self) -> Self {
        self.max_oracle_gap = self.max_oracle_gap.max(other.max_oracle_gap);
        self.max_simplex_violation = self.max_simplex_violation.max(other.max_simplex_violation);
        self.max_reconstruction_error = self.max_reconstruction_error.max(other.max_reconstruction_error);
        self.max_symmetry_gap = self.max_symmetry_gap.max(other.max_symmetry_gap);
        self.kkt_passed += other.kkt_passed;
        self.kkt_total += other.kkt_total;
        self.perturbed_failed += other.perturbed_failed;
        self.perturbed_total += other.perturbed_total;
        self
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "samples={} boundary_samples={} tol={:e} oracle_max={:e} simplex_max={:e} \
             reconstruction_max={:e} symmetry_max={:e} kkt_pass={}/{} perturbed_fail={}/{} status={}",
            self.samples,
            self.boundary_samples,
            self.tol,
            self.max_oracle_gap,
            self.max_simplex_violation,
            self.max_reconstruction_error,
            self.max_symmetry_gap,
            self.kkt_passed,
            self.kkt_total,
            self.perturbed_failed,
            self.perturbed_total,
            if self.passed() { "PASS" } else { "FAIL" },
        )
    }
}

fn verify_point(r: &BlochVector, tol: f64, symmetries: &[([usize; 3], [f64; 3])]) -> Result<VerifyReport, Error> {
    let solution = solve(r)?;
    let (_, projected) = project_cross_polytope(r);
    let w = &solution.weights;
    let sum: f64 = w.as_slice().iter().sum();
    let simplex = (-w.min()).max(0.0).max((sum - 1.0).abs());
    let reconstruction = (reconstruction_distance(r, w)? - solution.distance).abs();

    let mut symmetry: f64 = 0.0;
    for &(perm, signs) in symmetries {
        let image = solve(&apply_signed_permutation(r, perm, signs))?;
        symmetry = symmetry.max((image.distance - solution.distance).abs());
    }

    let (canon, map) = canonicalize(r)?;
    let canonical_weights = map.apply_to_weights(w);
    let kkt = kkt_check(&canon, &canonical_weights, tol);
    let perturbed = perturbations(&canonical_weights, tol);
    let perturbed_failed = perturbed.iter().filter(|q| !kkt_check(&canon, q, tol).pass).count();

    Ok(VerifyReport {
        max_oracle_gap: (solution.distance - projected).abs(),
        max_simplex_violation: simplex,
        max_reconstruction_error: reconstruction,
        max_symmetry_gap: symmetry,
        kkt_passed: usize::from(kkt.pass),
        kkt_total: 1,
        perturbed_failed,
        perturbed_total: perturbed.len(),
        ..VerifyReport::default()
    })
}

/// Checks the closed form against the projection oracle, the trace-norm
/// reconstruction, axis symmetries and the KKT system on a seeded sample.
pub fn run_verify(spec: &VerifySpec) -> Result<VerifyReport, FrontendError> {
    let points = verification_points(spec);
    let symmetries = signed_axis_permutations();
    let partials: Vec<VerifyReport> =
        points.par_iter().map(|r| verify_point(r, spec.tol, &symmetries)).collect::<Result<_, _>>()?;
    let totals = partials.into_iter().fold(VerifyReport::default(), VerifyReport::merge);
    Ok(VerifyReport {
        samples: spec.samples,
        boundary_samples: spec.boundary_samples * Boundary::ALL.len(),
        tol: spec.tol,
        ..totals
    })
}

/// The two worked counterexamples: reference formula against the corrected solution.
pub fn run_counterexamples() -> Result<String, FrontendError> {
    let mut out = String::new();
    for (label, phi) in [("pi/4", FRAC_PI_4), ("pi/3", FRAC_PI_3)] {
        let params = AkPhiParams::new(0.5, 1.0, phi)?;
        let reference = sacchi_reference(&params)?;
        let corrected = solve_akphi(&params)?;
        let status = if reference.valid { "valid" } else { "INVALID" };
        writeln!(out, "a = 0.5, k = 1, phi = {label}").unwrap();
        writeln!(
            out,
            "  reference case-I formula: D = {:.6}, p0 = {:.6} ({status})",
            reference.distance, reference.weights[0]
        )
        .unwrap();
        let w = corrected.weights.as_slice();
        writeln!(
            out,
            "  corrected: region = {}, D = {:.6}, p2 = {:.6}, p4 = {:.6}",
            corrected.region.map_or("", |g| g.as_str()),
            corrected.distance,
            w[2],
            w[4]
        )
        .unwrap();
        writeln!(out, "  corrected weights: {}", format_weights(w)).unwrap();
    }
    Ok(out)
}

fn format_weights(w: &[f64]) -> String {
    let parts: Vec<String> = w.iter().map(|p| format!("{p:.6}")).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(0.5), "0.5");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(1e-20), "0.00000000000000000001");
        let x = FRAC_PI_3;
        assert_eq!(format_number(x).parse::<f64>().unwrap(), x);
    }

    #[test]
    fn bloch_argument_parsing() {
        assert_eq!(parse_bloch("0,0,1").unwrap(), BlochVector::new(0.0, 0.0, 1.0));
        assert_eq!(parse_bloch(" 0.1, -0.2 ,0.3").unwrap(), BlochVector::new(0.1, -0.2, 0.3));
        assert!(parse_bloch("0,0").is_err());
        assert!(parse_bloch("a,b,c").is_err());
    }

    #[test]
    fn sweep_mode_parsing() {
        assert_eq!("diff".parse::<SweepMode>().unwrap(), SweepMode::Diff);
        assert!("figure".parse::<SweepMode>().is_err());
    }

    #[test]
    fn forty_eight_distinct_symmetries() {
        let r = BlochVector::new(0.1, 0.2, 0.3);
        let images: Vec<[u64; 3]> = signed_axis_permutations()
            .into_iter()
            .map(|(p, s)| apply_signed_permutation(&r, p, s).to_array().map(f64::to_bits))
            .collect();
        let mut unique = images.clone();
        unique.sort();
        unique.dedup();
        assert_eq!(unique.len(), 48);
    }

    #[test]
    fn boundary_samples_sit_on_their_boundary() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for boundary in Boundary::ALL {
            for _ in 0..200 {
                let r = sample_near_boundary(&mut rng, boundary);
                assert!(r.norm() <= 1.0);
                let (x, y, z) = (r.x.abs(), r.y.abs(), r.z.abs());
                let (a, u, v) = ((1.0 - z) / 2.0, x / 2.0, y / 2.0);
                let residual = match boundary {
                    Boundary::ExactFace => a - u - v,
                    Boundary::CaseIvEdge => u + v - (3.0 - 4.0 * a) / 2.0,
                    Boundary::CaseIiEdge => a - u + 2.0 * v,
                    Boundary::CaseIiiEdge => a - v + 2.0 * u,
                };
                assert!(residual.abs() < 1e-8, "{boundary:?}: {residual}");
            }
        }
    }

    #[test]
    fn perturbation_moves_mass_to_each_empty_vertex() {
        let w = WeightVector::new(vec![0.5, 0.0, 0.5, 0.0, 0.0, 0.0]).unwrap();
        let moved = perturbations(&w, 1e-9);
        assert_eq!(moved.len(), 4);
        for q in &moved {
            assert!(q.is_on_simplex(1e-15));
        }
        assert_eq!(moved[0].as_slice(), &[0.475, 0.05, 0.475, 0.0, 0.0, 0.0]);
    }
}
