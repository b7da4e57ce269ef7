//! End-to-end acceptance checks, one test per criterion; each prints a
//! single PASS line (visible with --nocapture) once its assertions hold.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use coding_maps::catalog;
use coding_maps::channel::{depolarizing, DiagonalChannel, QubitChannel};
use coding_maps::code::correctable_polynomial;
use coding_maps::coding_map::{diagonal_poly_map, effective_channel_general};
use coding_maps::dynamics::{
    fixed_points_1d, iterate_map, leading_order_threshold, storage_threshold, Stability,
};
use coding_maps::dyadic::Dyadic;
use coding_maps::oracle::{dense_effective_channel, kraus_from_diagonal};
use coding_maps::polymap::{compose_maps, Poly, PolyMap};
use coding_maps::StabilizerCode;

fn poly(terms: &[([u8; 3], i128, u32)]) -> Poly {
    let mut p = Poly::zero();
    for &(e, num, log2den) in terms {
        p.add_term(e, Dyadic::new(num, log2den));
    }
    p
}

fn map_of(name: &str) -> PolyMap {
    diagonal_poly_map(&catalog::builtin(name).unwrap())
}

fn stack_map(name: &str) -> PolyMap {
    let mut map = PolyMap::identity();
    for code in catalog::resolve(name).unwrap().iter().rev() {
        map = compose_maps(&diagonal_poly_map(code), &map).unwrap();
    }
    map
}

fn random_physical(rng: &mut StdRng) -> DiagonalChannel {
    loop {
        let (px, py, pz) = (rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>());
        if px + py + pz <= 1.0 {
            return coding_maps::PauliProbs::new(px, py, pz).unwrap().to_diagonal();
        }
    }
}

#[test]
fn criterion_1_polynomial_map_exactness() {
    let m = map_of("bitflip");
    assert_eq!(m.x, poly(&[([3, 0, 0], 1, 0)]));
    assert_eq!(m.y, poly(&[([2, 1, 0], 3, 1), ([0, 3, 0], -1, 1)]));
    assert_eq!(m.z, poly(&[([0, 0, 1], 3, 1), ([0, 0, 3], -1, 1)]));

    let m = map_of("phaseflip");
    assert_eq!(m.x, poly(&[([1, 0, 0], 3, 1), ([3, 0, 0], -1, 1)]));
    assert_eq!(m.y, poly(&[([0, 1, 2], 3, 1), ([0, 3, 0], -1, 1)]));
    assert_eq!(m.z, poly(&[([0, 0, 3], 1, 0)]));

    // seven-qubit code: [S(x), T(x,y,z), S(z)]
    let m = map_of("steane");
    assert_eq!(m.x, poly(&[([3, 0, 0], 7, 2), ([7, 0, 0], -3, 2)]));
    assert_eq!(m.z, poly(&[([0, 0, 3], 7, 2), ([0, 0, 7], -3, 2)]));
    assert_eq!(
        m.y,
        poly(&[
            ([0, 3, 0], 7, 4),
            ([0, 7, 0], 9, 4),
            ([4, 3, 0], -21, 4),
            ([0, 3, 4], -21, 4),
            ([2, 1, 2], 21, 3),
        ])
    );

    // five-qubit code: [U(x,y,z), U(y,z,x), U(z,x,y)] with
    // U(a,b,c) = 5/4 a (b^2 + c^2) - 5/4 a b^2 c^2 - 1/4 a^5
    let m = map_of("five_bit");
    assert_eq!(
        m.x,
        poly(&[([1, 2, 0], 5, 2), ([1, 0, 2], 5, 2), ([1, 2, 2], -5, 2), ([5, 0, 0], -1, 2)])
    );
    assert_eq!(
        m.y,
        poly(&[([0, 1, 2], 5, 2), ([2, 1, 0], 5, 2), ([2, 1, 2], -5, 2), ([0, 5, 0], -1, 2)])
    );
    assert_eq!(
        m.z,
        poly(&[([2, 0, 1], 5, 2), ([0, 2, 1], 5, 2), ([2, 2, 1], -5, 2), ([0, 0, 5], -1, 2)])
    );

    // composed nine-qubit map [P(x), Q(x,y,z), R(z)], with Q built here by
    // independent polynomial arithmetic from the closed form
    // 3/2 g^2 h - 1/2 h^3, g = 3/2 z - 1/2 z^3, h = 3/2 x^2 y - 1/2 y^3
    let shor = compose_maps(&map_of("phaseflip"), &map_of("bitflip")).unwrap();
    assert_eq!(shor.x, poly(&[([3, 0, 0], 3, 1), ([9, 0, 0], -1, 1)]));
    assert_eq!(
        shor.z,
        poly(&[([0, 0, 3], 27, 3), ([0, 0, 5], -27, 3), ([0, 0, 7], 9, 3), ([0, 0, 9], -1, 3)])
    );
    let cap = 1000;
    let g = poly(&[([0, 0, 1], 3, 1), ([0, 0, 3], -1, 1)]);
    let h = poly(&[([2, 1, 0], 3, 1), ([0, 3, 0], -1, 1)]);
    let q = g
        .checked_mul(&g, cap)
        .unwrap()
        .checked_mul(&h, cap)
        .unwrap()
        .checked_mul(&poly(&[([0, 0, 0], 3, 1)]), cap)
        .unwrap()
        .checked_add(
            &h.checked_pow(3, cap).unwrap().checked_mul(&poly(&[([0, 0, 0], -1, 1)]), cap).unwrap(),
            cap,
        )
        .unwrap();
    assert_eq!(shor.y, q);

    println!("PASS criterion 1: polynomial coding maps are coefficient-exact");
}

#[test]
fn criterion_2_threshold_table() {
    let cases = [
        ("shor", Some(0.1050), Some(0.3151), 0.0748),
        ("shor_prime", Some(0.1618), Some(0.2150), 0.1121),
        ("steane", Some(0.1383), Some(0.1383), 0.0969),
        ("five_bit", Some(0.2027), Some(0.2027), 0.1376),
    ];
    for (name, t_x, t_z, p_th) in cases {
        let report = storage_threshold(&stack_map(name)).unwrap();
        if let Some(t) = t_x {
            assert!((report.t_star.x - t).abs() <= 1e-4, "{name} t*_X = {}", report.t_star.x);
        }
        if let Some(t) = t_z {
            assert!((report.t_star.z - t).abs() <= 1e-4, "{name} t*_Z = {}", report.t_star.z);
        }
        assert!(
            (report.t_star.y - report.t_star.x.min(report.t_star.z)).abs() <= 1e-12,
            "{name} t*_Y"
        );
        assert!((report.p_th - p_th).abs() <= 1e-4, "{name} p_th = {}", report.p_th);
    }
    println!("PASS criterion 2: all threshold-table entries reproduced within 1e-4");
}

#[test]
fn criterion_3_fixed_point_values() {
    let shor = stack_map("shor");
    let interior = |coeffs: &[f64]| -> f64 {
        fixed_points_1d(coeffs)
            .into_iter()
            .filter(|p| {
                p.value > 1e-9 && p.value < 1.0 - 1e-9 && p.stability == Stability::Repelling
            })
            .map(|p| p.value)
            .next()
            .expect("one interior repelling point")
    };
    let z_star = interior(&shor.z.univariate_in(2).unwrap());
    let x_star = interior(&shor.x.univariate_in(0).unwrap());
    assert!((z_star - 0.7297).abs() <= 1e-4, "z* = {z_star}");
    assert!((x_star - 0.9003).abs() <= 1e-4, "x* = {x_star}");

    let five = stack_map("five_bit");
    let v_star = interior(&five.x.diagonal_univariate());
    assert!((v_star - (2.0f64 / 3.0).sqrt()).abs() <= 1e-10, "five-bit v* = {v_star}");
    println!("PASS criterion 3: interior repelling fixed points match reference values");
}

#[test]
fn criterion_4_oracle_equivalence() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for name in ["bitflip", "phaseflip", "phaseflip_prime", "five_bit"] {
        let code = catalog::builtin(name).unwrap();
        for trial in 0..25 {
            let d = random_physical(&mut rng);
            let symbolic =
                effective_channel_general(&code, &QubitChannel::from_diagonal(&d)).unwrap().channel;
            let dense = dense_effective_channel(&code, &kraus_from_diagonal(&d).unwrap()).unwrap();
            for r in 0..4 {
                for c in 0..4 {
                    let dev = (dense[r][c] - symbolic.entry(r, c)).abs();
                    assert!(dev <= 1e-10, "{name} trial {trial} entry ({r},{c}) off by {dev}");
                    if r != c {
                        assert!(
                            symbolic.entry(r, c).abs() <= 1e-12,
                            "{name} trial {trial} off-diagonal ({r},{c})"
                        );
                    }
                }
            }
        }
    }
    println!("PASS criterion 4: dense oracle matches the symbolic path on 100 random channels");
}

#[test]
fn criterion_5_leading_order_estimates() {
    let estimate = |name: &str| -> f64 {
        let stack = catalog::resolve(name).unwrap();
        let refs: Vec<&StabilizerCode> = stack.iter().collect();
        leading_order_threshold(&correctable_polynomial(&refs).unwrap()).unwrap().estimate
    };
    let cases = [
        ("five_bit", 0.1000, 0.27),
        ("steane", 0.0612, 0.37),
        ("shor", 0.0625, 0.16),
        ("shor_prime", 0.0625, 0.44),
    ];
    for (name, expected, undershoot) in cases {
        let est = estimate(name);
        assert!((est - expected).abs() <= 1e-4, "{name} estimate = {est}");
        let p_th = storage_threshold(&stack_map(name)).unwrap().p_th;
        let ratio = 1.0 - est / p_th;
        assert!(
            (ratio - undershoot).abs() <= 0.01,
            "{name} undershoots by {:.1}%, expected {:.0}%",
            100.0 * ratio,
            100.0 * undershoot
        );
    }
    println!("PASS criterion 5: leading-order estimates and undershoot ratios reproduced");
}

#[test]
fn criterion_6_curve_properties() {
    let shor = stack_map("shor");
    let steane = stack_map("steane");
    let five = stack_map("five_bit");
    for i in 1..=50 {
        let t = i as f64 / 50.0;
        let dep = depolarizing(t).unwrap();
        let s = shor.eval(&dep);
        let st = steane.eval(&dep);
        let fv = five.eval(&dep);
        assert!(s.z > fv.z && fv.z > st.z && st.z > s.x, "ordering fails at t = {t}");
        assert!(
            s.z > st.z && (st.z - st.x).abs() < 1e-14 && st.x > s.x && s.x > st.y && st.y > s.y,
            "second ordering fails at t = {t}"
        );
    }
    // level curves all cross near (t, z) = (0.3151, 0.7297)
    let dep = depolarizing(0.3151).unwrap();
    for levels in 1..=4 {
        let z = iterate_map(&shor, &dep, levels).z;
        assert!((z - 0.7297).abs() <= 1e-3, "level {levels} z = {z}");
    }
    println!("PASS criterion 6: curve orderings and common crossing point hold");
}

#[test]
fn criterion_7_randomized_invariants() {
    let mut rng = StdRng::seed_from_u64(0xacce97);
    let codes: Vec<StabilizerCode> = ["bitflip", "phaseflip", "phaseflip_prime", "five_bit"]
        .iter()
        .map(|n| catalog::builtin(n).unwrap())
        .collect();
    for trial in 0..200 {
        let code = &codes[rng.gen_range(0..codes.len())];
        let d = random_physical(&mut rng);
        let result =
            effective_channel_general(code, &QubitChannel::from_diagonal(&d)).unwrap().channel;

        // trace-preservation row is exact
        assert_eq!(result.matrix()[0], [1.0, 0.0, 0.0, 0.0], "trial {trial}");

        // CP closure: physical in, physical out
        let out = result.as_diagonal(1e-9).unwrap();
        assert!(
            DiagonalChannel::new_physical(out.x, out.y, out.z).is_ok(),
            "trial {trial}: output {out:?} not CP"
        );

        // composition soundness: symbolic compose == iterate numerically
        let m = diagonal_poly_map(code);
        let composed = compose_maps(&m, &m).unwrap();
        let direct = m.eval(&m.eval(&d));
        let via_composed = composed.eval(&d);
        for (a, b) in [
            (direct.x, via_composed.x),
            (direct.y, via_composed.y),
            (direct.z, via_composed.z),
        ] {
            assert!((a - b).abs() <= 1e-12, "trial {trial}: {a} vs {b}");
        }
    }

    // dense-path structure checks: syndrome projectors resolve the
    // identity and correction is an isometry on each syndrome subspace
    for code in &codes {
        use coding_maps::oracle::{syndrome_subspace_projector, CMat};
        let dim = 1usize << code.n();
        let mut sum = CMat::zeros(dim);
        for s in 0..code.recovery_table().len() {
            let p_j = syndrome_subspace_projector(code, s).unwrap();
            assert!(p_j.mul(&p_j).max_abs_diff(&p_j) < 1e-12, "{} P_{s}", code.name());
            sum.add_scaled(num_complex::Complex64::ONE, &p_j);
        }
        assert!(sum.max_abs_diff(&CMat::identity(dim)) < 1e-12, "{}", code.name());
    }

    println!("PASS criterion 7: 200 randomized invariant trials clean");
}
