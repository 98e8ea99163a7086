use std::f64::consts::{FRAC_PI_2, TAU};

use approx::assert_abs_diff_eq;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pauli_approx::analytic::{
    canonicalize, classify, compute_uv, sacchi_reference, solve, solve_akphi, Region, UvParams,
};
use pauli_approx::frontend::{apply_signed_permutation, sample_ball, signed_axis_permutations};
use pauli_approx::oracle::{
    frank_wolfe_solve, kkt_check, project_cross_polytope, weights_from_polytope_point, SolverConfig,
};
use pauli_approx::qubit::{
    bloch_from_akphi, bloch_to_matrix, density_from_akphi, matrix_to_bloch, mixture, trace_norm,
};
use pauli_approx::{AkPhiParams, BlochVector, StateSet, WeightVector};

fn akphi() -> impl Strategy<Value = AkPhiParams> {
    (0.0..=1.0f64, 0.0..=1.0f64, 0.0..TAU).prop_map(|(a, k, phi)| AkPhiParams::new(a, k, phi).unwrap())
}

fn ball_point() -> impl Strategy<Value = BlochVector> {
    (-1.0..=1.0f64, -1.0..=1.0f64, -1.0..=1.0f64)
        .prop_map(|(x, y, z)| BlochVector::new(x, y, z))
        .prop_filter("inside the unit ball", |r| r.norm() <= 1.0)
}

fn weights(n: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(0.0..1.0f64, n).prop_filter_map("non-zero mass", |raw| {
        let total: f64 = raw.iter().sum();
        (total > 1e-6).then(|| WeightVector::new(raw.iter().map(|x| x / total).collect()).unwrap())
    })
}

/// The five region predicates exactly as stated, without the if-else chain.
fn region_predicates(p: &UvParams) -> [bool; 5] {
    let UvParams { a, u, v } = *p;
    let band = a < u + v && u + v <= (3.0 - 4.0 * a) / 2.0;
    [
        a - u - v >= 0.0,
        band && a - v + 2.0 * u >= 0.0 && a - u + 2.0 * v >= 0.0,
        band && a - v + 2.0 * u >= 0.0 && a - u + 2.0 * v < 0.0,
        band && a - v + 2.0 * u < 0.0 && a - u + 2.0 * v >= 0.0,
        u + v > (3.0 - 4.0 * a) / 2.0,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn density_has_unit_trace_and_expected_determinant(p in akphi()) {
        let m = density_from_akphi(&p);
        prop_assert_eq!(m.trace(), 1.0);
        let det = p.a() * (1.0 - p.a()) * (1.0 - p.k() * p.k());
        prop_assert!((m.det() - det).abs() <= 1e-15);
        prop_assert!(m.det() >= -1e-15);
    }

    #[test]
    fn bloch_routes_agree(p in akphi()) {
        let direct = bloch_from_akphi(&p);
        let via_matrix = matrix_to_bloch(&density_from_akphi(&p)).unwrap();
        prop_assert!(direct.distance(&via_matrix) <= 1e-13);
    }

    #[test]
    fn trace_distance_is_bloch_distance(r in ball_point(), s in ball_point()) {
        let diff = bloch_to_matrix(&r).unwrap() - bloch_to_matrix(&s).unwrap();
        prop_assert!((trace_norm(&diff) - r.distance(&s)).abs() <= 1e-12);
        prop_assert!((trace_norm(&diff) - 2.0 * diff.det().abs().sqrt()).abs() <= 1e-12);
    }

    #[test]
    fn matrix_round_trip(r in ball_point()) {
        let back = matrix_to_bloch(&bloch_to_matrix(&r).unwrap()).unwrap();
        prop_assert!((back.x - r.x).abs() <= 1e-14);
        prop_assert!((back.y - r.y).abs() <= 1e-14);
        prop_assert!((back.z - r.z).abs() <= 1e-14);
    }

    #[test]
    fn mixture_is_linear(w1 in weights(6), w2 in weights(6), alpha in 0.0..=1.0f64) {
        let b3 = StateSet::b3();
        let blend: Vec<f64> = w1.as_slice().iter().zip(w2.as_slice())
            .map(|(x, y)| alpha * x + (1.0 - alpha) * y).collect();
        let lhs = mixture(&b3, &WeightVector::from_raw(blend)).unwrap();
        let rhs = alpha * mixture(&b3, &w1).unwrap() + (1.0 - alpha) * mixture(&b3, &w2).unwrap();
        prop_assert!(lhs.distance(&rhs) <= 1e-14);
        let p = w1.as_slice();
        let expected = BlochVector::new(p[2] - p[3], p[4] - p[5], p[0] - p[1]);
        prop_assert!(mixture(&b3, &w1).unwrap().distance(&expected) <= 1e-15);
    }

    #[test]
    fn solution_reconstructs_its_distance(r in ball_point()) {
        let s = solve(&r).unwrap();
        prop_assert!(s.valid);
        prop_assert!(s.weights.is_on_simplex(1e-12));
        let m = mixture(&StateSet::b3(), &s.weights).unwrap();
        let diff = bloch_to_matrix(&r).unwrap() - bloch_to_matrix(&m).unwrap();
        prop_assert!((trace_norm(&diff) - s.distance).abs() <= 1e-12);
    }

    #[test]
    fn canonical_map_round_trips(r in ball_point()) {
        let (canon, map) = canonicalize(&r).unwrap();
        prop_assert!(map.apply(&canon.bloch()).distance(&r) <= 1e-15);
        let w = solve(&r).unwrap().weights;
        prop_assert_eq!(map.apply_to_weights(&map.apply_to_weights(&w)), w);
    }

    #[test]
    fn weights_permute_with_the_state(r in ball_point(), which in 0usize..48) {
        let (perm, signs) = signed_axis_permutations()[which];
        let s = solve(&r).unwrap();
        let image = solve(&apply_signed_permutation(&r, perm, signs)).unwrap();
        prop_assert!((image.distance - s.distance).abs() <= 1e-12);
        // the nearest point is unique, so the mixtures must map onto each other
        let b3 = StateSet::b3();
        let m = mixture(&b3, &s.weights).unwrap();
        let m_image = mixture(&b3, &image.weights).unwrap();
        prop_assert!(apply_signed_permutation(&m, perm, signs).distance(&m_image) <= 1e-12);
    }

    #[test]
    fn projection_satisfies_variational_inequality(r in ball_point()) {
        let (nearest, d) = project_cross_polytope(&r);
        prop_assert!(nearest.l1_norm() <= 1.0 + 1e-12);
        prop_assert!((r.distance(&nearest) - d).abs() <= 1e-15);
        for q in StateSet::b3().states() {
            prop_assert!((r - nearest).dot(&(*q - nearest)) <= 1e-9);
        }
        let w = weights_from_polytope_point(&nearest).unwrap();
        prop_assert!(mixture(&StateSet::b3(), &w).unwrap().distance(&nearest) <= 1e-13);
    }

    #[test]
    fn valid_solutions_pass_kkt(r in ball_point()) {
        let (canon, map) = canonicalize(&r).unwrap();
        let w = map.apply_to_weights(&solve(&r).unwrap().weights);
        let report = kkt_check(&canon, &w, 1e-9);
        prop_assert!(report.pass, "{:?}", report);
        prop_assert!(report.lambda_i.iter().all(|&l| l >= -1e-9));
        prop_assert!(report.stationarity_residual <= 1e-9);
    }

    #[test]
    fn reference_never_exceeds_the_true_distance(p in akphi()) {
        let canonical = AkPhiParams::new(p.a().min(0.5), p.k(), p.phi() % FRAC_PI_2).unwrap();
        if let Ok(reference) = sacchi_reference(&canonical) {
            let truth = solve_akphi(&canonical).unwrap();
            prop_assert!(reference.distance <= truth.distance + 1e-12);
            if !reference.valid {
                prop_assert!(reference.distance < truth.distance);
            }
        }
    }

    #[test]
    fn distance_grows_along_coherence_rays(a in 0.0..=0.5f64, phi in 0.0..=FRAC_PI_2) {
        let mut previous = 0.0;
        for i in 0..=200 {
            let k = i as f64 / 200.0;
            let d = solve_akphi(&AkPhiParams::new(a, k, phi).unwrap()).unwrap().distance;
            prop_assert!(d >= previous - 1e-15, "k = {}: {} < {}", k, d, previous);
            previous = d;
        }
    }
}

#[test]
fn regions_partition_the_canonical_octant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut counts = [0usize; 5];
    for _ in 0..1_000_000 {
        let r = sample_ball(&mut rng);
        let (canon, _) = canonicalize(&r).unwrap();
        let hits = region_predicates(&canon);
        assert_eq!(hits.iter().filter(|&&h| h).count(), 1, "{canon:?}");
        let region = classify(&canon);
        let index = Region::ALL.iter().position(|&g| g == region).unwrap();
        assert!(hits[index]);
        counts[index] += 1;
    }
    // every region is actually reached by uniform sampling
    assert!(counts.iter().all(|&c| c > 0), "{counts:?}");
}

#[test]
fn regions_partition_a_boundary_grid() {
    // dyadic grid: the boundary equalities hold exactly in floating point
    let n = 64;
    for i in 0..=n / 2 {
        for j in 0..=n {
            for l in 0..=n {
                let (a, u, v) = (i as f64 / n as f64, j as f64 / n as f64 / 2.0, l as f64 / n as f64 / 2.0);
                let Ok(p) = UvParams::new(a, u, v) else { continue };
                let hits = region_predicates(&p);
                assert_eq!(hits.iter().filter(|&&h| h).count(), 1, "{p:?}");
                let index = Region::ALL.iter().position(|&g| g == classify(&p)).unwrap();
                assert!(hits[index], "{p:?}");
            }
        }
    }
}

#[test]
fn case_iv_multiplier_sign_tracks_the_boundary() {
    // λ0 = a + u/2 + v/2 − 3/4 for the case IV weights
    let n = 64;
    for i in 0..=n / 2 {
        for j in 0..=n {
            let a = i as f64 / n as f64;
            let s = j as f64 / n as f64;
            for split in [0.5, 0.25, 0.75] {
                let Ok(p) = UvParams::new(a, split * s, (1.0 - split) * s) else { continue };
                if p.u + p.v <= p.a {
                    continue;
                }
                let w = WeightVector::from_raw(vec![0.0, 0.0, 0.5 + p.u - p.v, 0.0, 0.5 - p.u + p.v, 0.0]);
                if !w.is_on_simplex(1e-12) {
                    continue;
                }
                let report = kkt_check(&p, &w, 1e-9);
                let on_or_beyond = p.u + p.v >= (3.0 - 4.0 * p.a) / 2.0;
                assert_eq!(report.lambda_i[0] >= 0.0, on_or_beyond, "{p:?}: {report:?}");
            }
        }
    }
}

#[test]
fn frank_wolfe_agrees_with_projection() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let cfg = SolverConfig::default();
    for _ in 0..1000 {
        let r = sample_ball(&mut rng);
        let fw = frank_wolfe_solve(&StateSet::b3(), &r, &cfg).unwrap();
        assert!(fw.solution.weights.is_on_simplex(1e-12));
        assert_abs_diff_eq!(fw.solution.distance, project_cross_polytope(&r).1, epsilon = 1e-6);
    }
}

#[test]
fn uv_matches_half_the_bloch_vector() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..10_000 {
        let p = AkPhiParams::new(
            rand::Rng::gen_range(&mut rng, 0.0..=1.0),
            rand::Rng::gen_range(&mut rng, 0.0..=1.0),
            rand::Rng::gen_range(&mut rng, 0.0..TAU),
        )
        .unwrap();
        let (u, v) = compute_uv(&p);
        let r = bloch_from_akphi(&p);
        assert_abs_diff_eq!(2.0 * u, r.x, epsilon = 1e-15);
        assert_abs_diff_eq!(2.0 * v, r.y, epsilon = 1e-15);
    }
}
