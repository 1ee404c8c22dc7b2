//! The two load-bearing identities of the unforgeability argument,
//! checked bit-for-bit on toy-64.

use vdas_algebra::{
    pairing, point_add, point_mul, point_neg, random_nonzero_scalar, seeded_rng, toy_64, G1Point,
    Scalar,
};
use vdas_core::{
    session_point, setup, setup_with_master_scalar, sign, verify_equation, Identity, StateInfo,
};
use vdas_security_lab::{
    forking_extract, run_tamper_suite, simulate_sign, simulate_sign_with_nonce, AttackKind,
    CdhInstance, SecurityLabError, SimulatedOracleState, TamperConfig,
};

#[test]
fn simulated_signatures_verify_under_programmed_u() {
    let (sys, _) = setup(&toy_64(), b"sim-valid");
    let group = sys.group.clone();
    let mut rng = seeded_rng("sim-valid-trials", b"x");
    for i in 0..100u64 {
        let lambda = random_nonzero_scalar(&mut rng, &group);
        let q = point_mul(&random_nonzero_scalar(&mut rng, &group), &group.generator, &group, None);
        let ppub = point_mul(&random_nonzero_scalar(&mut rng, &group), &group.generator, &group, None);
        let h = random_nonzero_scalar(&mut rng, &group);
        let g = random_nonzero_scalar(&mut rng, &group);
        let state = SimulatedOracleState::new(lambda, &sys, q.clone());
        let sig = simulate_sign(&state, &sys, &q, &ppub, &h, &g, &i.to_be_bytes());
        assert!(
            verify_equation(&sys, &q, &ppub, &h, &g, &state.u_sim, &sig, None),
            "trial {i}"
        );
    }
}

#[test]
fn degenerate_u_sim_still_verifies() {
    // rig lambda = s so that lambda*P = P0 and U_sim is the identity;
    // the r-terms annihilate and V collapses to lambda*g*Q
    let group = toy_64();
    let lambda = Scalar::from_u64(4242, &group.q);
    let (sys, _) = setup_with_master_scalar(&group, lambda.clone());
    let mut rng = seeded_rng("degenerate-u", b"x");
    let q = point_mul(&random_nonzero_scalar(&mut rng, &group), &group.generator, &group, None);
    let ppub = point_mul(&random_nonzero_scalar(&mut rng, &group), &group.generator, &group, None);
    let h = random_nonzero_scalar(&mut rng, &group);
    let g = random_nonzero_scalar(&mut rng, &group);
    let state = SimulatedOracleState::new(lambda.clone(), &sys, q.clone());
    assert!(state.u_sim.is_identity());
    let sig = simulate_sign(&state, &sys, &q, &ppub, &h, &g, b"seed");
    let expected_v = point_mul(&lambda.mul(&g, &group.q), &q, &group, None);
    assert_eq!(sig.v, expected_v);
    assert!(verify_equation(&sys, &q, &ppub, &h, &g, &state.u_sim, &sig, None));
}

#[test]
fn simulation_matches_middle_line_of_the_proof_chain() {
    // e(V, P) must equal e(lambda*r*P + lambda*g*Q, P) * e(r*P, -P0)
    let (sys, _) = setup(&toy_64(), b"middle-line");
    let group = sys.group.clone();
    let mut rng = seeded_rng("middle-line-trials", b"x");
    let lambda = random_nonzero_scalar(&mut rng, &group);
    let q = point_mul(&random_nonzero_scalar(&mut rng, &group), &group.generator, &group, None);
    let ppub = point_mul(&random_nonzero_scalar(&mut rng, &group), &group.generator, &group, None);
    let h = random_nonzero_scalar(&mut rng, &group);
    let g = random_nonzero_scalar(&mut rng, &group);
    let r = random_nonzero_scalar(&mut rng, &group);
    let state = SimulatedOracleState::new(lambda.clone(), &sys, q.clone());
    let sig = simulate_sign_with_nonce(&state, &sys, &q, &ppub, &h, &g, &r);

    let p = &group.generator;
    let lhs = pairing(&sig.v, p, &group, None);
    let lambda_r_p = point_mul(&lambda.mul(&r, &group.q), p, &group, None);
    let lambda_g_q = point_mul(&lambda.mul(&g, &group.q), &q, &group, None);
    let first = pairing(&point_add(&lambda_r_p, &lambda_g_q, &group, None), p, &group, None);
    let r_p = point_mul(&r, p, &group, None);
    let second = pairing(&r_p, &point_neg(&sys.p0, &group), &group, None);
    assert_eq!(lhs, first.mul(&second, &group));
}

#[test]
fn extraction_recovers_partial_key_from_honest_forks() {
    let group = toy_64();
    let mut rng = seeded_rng("fork-honest", b"x");
    for i in 0..100 {
        // honest-signer construction: same (r, h, x, D, U), forked g
        let d = point_mul(&random_nonzero_scalar(&mut rng, &group), &group.generator, &group, None);
        let u = point_mul(&random_nonzero_scalar(&mut rng, &group), &group.generator, &group, None);
        let x = random_nonzero_scalar(&mut rng, &group);
        let h = random_nonzero_scalar(&mut rng, &group);
        let r = random_nonzero_scalar(&mut rng, &group);
        let g = random_nonzero_scalar(&mut rng, &group);
        let g_prime = loop {
            let c = random_nonzero_scalar(&mut rng, &group);
            if c != g {
                break c;
            }
        };
        let xh_r = x.mul(&h, &group.q).add(&r, &group.q);
        let tail = point_mul(&xh_r, &u, &group, None);
        let v = point_add(&point_mul(&g, &d, &group, None), &tail, &group, None);
        let v_prime = point_add(&point_mul(&g_prime, &d, &group, None), &tail, &group, None);
        let extracted = forking_extract(&v, &v_prime, &g, &g_prime, &group).unwrap();
        assert_eq!(extracted, d, "trial {i}");
    }
}

#[test]
fn extraction_solves_rigged_cdh_instances() {
    let group = toy_64();
    let mut rng = seeded_rng("fork-cdh", b"x");
    for i in 0..100 {
        let a = random_nonzero_scalar(&mut rng, &group);
        let b = random_nonzero_scalar(&mut rng, &group);
        let instance = CdhInstance::rigged(&group, a.clone(), b.clone());
        // P0 = aP, Q = bP, so D = aQ = abP; build the honest fork around it
        let d = point_mul(&a, &instance.b_point, &group, None);
        let u = point_mul(&random_nonzero_scalar(&mut rng, &group), &group.generator, &group, None);
        let xh_r = random_nonzero_scalar(&mut rng, &group);
        let tail = point_mul(&xh_r, &u, &group, None);
        let g = random_nonzero_scalar(&mut rng, &group);
        let g_prime = loop {
            let c = random_nonzero_scalar(&mut rng, &group);
            if c != g {
                break c;
            }
        };
        let v = point_add(&point_mul(&g, &d, &group, None), &tail, &group, None);
        let v_prime = point_add(&point_mul(&g_prime, &d, &group, None), &tail, &group, None);
        let extracted = forking_extract(&v, &v_prime, &g, &g_prime, &group).unwrap();
        assert!(instance.is_solution(&extracted, &group), "trial {i}");
        let ab = a.mul(&b, &group.q);
        assert_eq!(extracted, point_mul(&ab, &group.generator, &group, None));
    }
}

#[test]
fn equal_fork_scalars_are_rejected() {
    let group = toy_64();
    let g = Scalar::from_u64(7, &group.q);
    let v = group.generator.clone();
    assert_eq!(
        forking_extract(&v, &v, &g, &g, &group),
        Err(SecurityLabError::NonInvertibleFork)
    );
}

#[test]
fn extraction_shift_is_linear_in_the_added_point() {
    let group = toy_64();
    let mut rng = seeded_rng("fork-linear", b"x");
    for i in 0..20 {
        let g = random_nonzero_scalar(&mut rng, &group);
        let g_prime = loop {
            let c = random_nonzero_scalar(&mut rng, &group);
            if c != g {
                break c;
            }
        };
        let v = point_mul(&random_nonzero_scalar(&mut rng, &group), &group.generator, &group, None);
        let v_prime = point_mul(&random_nonzero_scalar(&mut rng, &group), &group.generator, &group, None);
        let base = forking_extract(&v, &v_prime, &g, &g_prime, &group).unwrap();

        // W = identity leaves the output unchanged
        let same = forking_extract(&v, &v_prime, &g, &g_prime, &group).unwrap();
        assert_eq!(base, same);

        // W != identity shifts the output by (g - g')^{-1} W
        let w = point_mul(&random_nonzero_scalar(&mut rng, &group), &group.generator, &group, None);
        let v_w = point_add(&v, &w, &group, None);
        let shifted = forking_extract(&v_w, &v_prime, &g, &g_prime, &group).unwrap();
        let coeff = g.sub(&g_prime, &group.q).inv(&group.q).unwrap();
        let expected = point_add(&base, &point_mul(&coeff, &w, &group, None), &group, None);
        assert_eq!(shifted, expected, "trial {i}");
        assert_ne!(shifted, base);
    }
}

#[test]
fn tamper_suite_records_zero_false_accepts() {
    let (sys, msk) = setup(&toy_64(), b"tamper");
    let config = TamperConfig {
        attacks: AttackKind::ALL.to_vec(),
        trials_per_attack: 100,
        seed: b"tamper-seed".to_vec(),
    };
    let report = run_tamper_suite(&sys, &msk, &config);
    assert_eq!(report.total(), 400);
    assert_eq!(report.false_accepts(), 0);
    let text = report.to_text();
    assert!(text.ends_with("false_accepts=0/400\n"));
    assert!(text.contains("replace-pubkey trial=0 verdict=reject"));
}

#[test]
fn empty_attack_config_yields_empty_report() {
    let (sys, msk) = setup(&toy_64(), b"tamper-empty");
    let config = TamperConfig {
        attacks: vec![],
        trials_per_attack: 100,
        seed: b"s".to_vec(),
    };
    let report = run_tamper_suite(&sys, &msk, &config);
    assert_eq!(report.total(), 0);
    assert_eq!(report.to_text(), "false_accepts=0/0\n");
}

#[test]
fn honest_signatures_still_pass_inside_the_suite_environment() {
    // sanity: the suite's rejections come from the attacks, not from a
    // broken environment
    let (sys, msk) = setup(&toy_64(), b"tamper-sanity");
    let id = Identity::new(b"sanity".to_vec()).unwrap();
    let (keys, record) = vdas_core::register(&msk, &sys, id, b"seed");
    let delta = StateInfo::new(b"d".to_vec()).unwrap();
    let sig = sign(&sys, &keys, &delta, b"data", b"seed", None);
    assert!(vdas_core::verify_individual(&sys, &record, &delta, b"data", &sig, None));
    let _ = session_point(&sys, &delta, None);
    let _ = G1Point::Identity;
}
