use hqarch::physics::PLANCK_EV_S;
use hqarch::{chain_length, sweep_t_total, t_swap, t_total, ChainGeometry, PhysicsError, PhysicsParams};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn geom(d_dq_um: f64, d_id_nm: f64) -> ChainGeometry {
    ChainGeometry::from_um(d_dq_um, d_id_nm).unwrap()
}

/// Least-squares fit of `y = a + b·x`; returns `(a, b, max |residual|)`.
fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let b = sxy / sxx;
    let a = my - b * mx;
    let worst = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - (a + b * x)).abs())
        .fold(0.0, f64::max);
    (a, b, worst)
}

#[test]
fn calibration_point_is_bit_exact() {
    let p = PhysicsParams::default();
    assert_eq!(t_swap(&p, 40.0), 6.47);
    let shifted = PhysicsParams::new(55.0, 3.25, 7.0).unwrap();
    assert_eq!(t_swap(&shifted, 55.0), 3.25);
}

#[test]
fn exponential_law_at_fixed_hop_count() {
    let p = PhysicsParams::default();
    // d_dq scaled with d_id keeps the chain at 12 qubits.
    let xs: Vec<f64> = (0..20).map(|i| 30.0 + 2.0 * f64::from(i)).collect();
    let ys: Vec<f64> = xs
        .iter()
        .map(|&d| {
            let g = ChainGeometry::new(d, 24.0 * d).unwrap();
            assert_eq!(chain_length(&g).unwrap(), 12);
            t_total(&p, &g).unwrap().ln()
        })
        .collect();
    let (_, slope, worst) = linear_fit(&xs, &ys);
    assert!((slope - 2.0 / p.lambda_nm).abs() < 1e-9, "slope {slope}");
    assert!(worst < 1e-9, "residual {worst}");
}

#[test]
fn transfer_time_identity_on_random_geometries() {
    let p = PhysicsParams::default();
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for _ in 0..100 {
        let d_id = rng.random_range(10.0..120.0);
        let d_dq = rng.random_range(2.0 * d_id..30_000.0);
        let g = ChainGeometry::new(d_id, d_dq).unwrap();
        let n2 = chain_length(&g).unwrap();
        assert_eq!(n2 % 2, 0);
        let expected = f64::from(n2 - 1) * t_swap(&p, d_id);
        assert_eq!(t_total(&p, &g).unwrap(), expected);
    }
}

#[test]
fn table_distances_map_to_chain_lengths() {
    // Half-integers round to the nearest even count.
    assert_eq!(chain_length(&geom(1.0, 40.0)).unwrap(), 12);
    assert_eq!(chain_length(&geom(11.0, 40.0)).unwrap(), 138);
    assert_eq!(chain_length(&geom(15.4, 40.0)).unwrap(), 192);
    // The tabulated 311 is odd; the even model gives 312, one hop away.
    assert_eq!(chain_length(&geom(24.9, 40.0)).unwrap(), 312);
    assert_eq!(chain_length(&ChainGeometry::new(40.0, 80.0).unwrap()).unwrap(), 2);
}

#[test]
fn tabulated_times_within_one_hop() {
    let p = PhysicsParams::default();
    let ts = t_swap(&p, 40.0);
    for (d_dq_um, tabulated_ns) in [(1.0, 71.2), (11.0, 886.4), (15.4, 1235.8), (24.9, 2005.7)] {
        let t = t_total(&p, &geom(d_dq_um, 40.0)).unwrap();
        assert!((t - tabulated_ns).abs() <= ts + 0.05, "{d_dq_um}: {t}");
    }
}

#[test]
fn geometry_errors() {
    assert!(matches!(
        ChainGeometry::new(40.0, 79.0),
        Err(PhysicsError::ChainTooShort { .. })
    ));
    assert!(matches!(ChainGeometry::new(0.0, 1000.0), Err(PhysicsError::NonPositive { .. })));
    assert!(ChainGeometry::new(f64::NAN, 1000.0).is_err());
    assert!(PhysicsParams::new(40.0, 6.47, 0.0).is_err());
}

#[test]
fn sweep_matches_direct_evaluation() {
    let p = PhysicsParams::default();
    let pts = sweep_t_total(&p, 1000.0, &[40.0, 50.0, 600.0]);
    assert_eq!(pts.len(), 3);
    let direct40 = t_total(&p, &ChainGeometry::new(40.0, 1000.0).unwrap()).unwrap();
    let direct50 = t_total(&p, &ChainGeometry::new(50.0, 1000.0).unwrap()).unwrap();
    let s40 = pts[0].t_total_ns.clone().unwrap();
    let s50 = pts[1].t_total_ns.clone().unwrap();
    assert!(((s50 / s40) / (direct50 / direct40) - 1.0).abs() < 1e-12);
    assert!((s40 - 71.17).abs() < 1e-9);
    assert!(pts[2].t_total_ns.is_err());
}

#[test]
fn sequence_calibration() {
    // t_seq·h/J with J = t_r²/ΔE in µeV.
    let (t_seq, t_r, de) = (3.0, 2.0, 40.0);
    let p = PhysicsParams::from_sequence(t_seq, t_r, de, 40.0, 10.0).unwrap();
    let j_ev = t_r * t_r / de * 1e-6;
    let expected_ns = t_seq * PLANCK_EV_S / j_ev * 1e9;
    assert!((p.t_swap_ref_ns / expected_ns - 1.0).abs() < 1e-12);
    assert_eq!(t_swap(&p, 40.0), p.t_swap_ref_ns);
}

proptest! {
    #[test]
    fn hop_normalised_time_is_constant(d_id in 20.0f64..80.0, d_dq in 5_000.0f64..25_000.0) {
        // t_total · exp(−2d/λ) / (qubits − 1) depends only on the calibration.
        let p = PhysicsParams::default();
        let g = ChainGeometry::new(d_id, d_dq).unwrap();
        let n2 = f64::from(chain_length(&g).unwrap());
        let k = t_total(&p, &g).unwrap() * (-2.0 * d_id / p.lambda_nm).exp() / (n2 - 1.0);
        let k0 = p.t_swap_ref_ns * (-2.0 * p.d_ref_nm / p.lambda_nm).exp();
        prop_assert!((k / k0 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn chain_length_is_nearest_even(d_id in 10.0f64..100.0, ratio in 2.0f64..400.0) {
        let g = ChainGeometry::new(d_id, ratio * 2.0 * d_id).unwrap();
        let n2 = f64::from(chain_length(&g).unwrap());
        let exact = g.d_dq_nm() / g.l_cq_nm();
        prop_assert_eq!(n2 % 2.0, 0.0);
        prop_assert!((n2 - exact).abs() <= 1.0 + 1e-9);
    }

    #[test]
    fn t_swap_increases_with_distance(a in 10.0f64..100.0, b in 10.0f64..100.0) {
        let p = PhysicsParams::default();
        prop_assume!(a < b);
        prop_assert!(t_swap(&p, a) < t_swap(&p, b));
    }
}
