use kpz_core::airy::airy;
use kpz_core::fredholm::{k1, k2, scalar_kernel_det, FredholmSolver, KernelCut, ProcessKind};
use kpz_core::quadrature::GaussLegendre;

// Tracy-Widom moments, 10-digit references
const F2_MEAN: f64 = -1.771_086_807_4;
const F2_VAR: f64 = 0.813_194_792_8;
const F1_MEAN: f64 = -1.206_533_574_6;
const F1_VAR: f64 = 1.607_781_034_6;

fn solver() -> FredholmSolver<f64> {
    FredholmSolver::default()
}

#[test]
fn airy_kernel_diagonal_identity() {
    let mut worst = 0.0f64;
    let mut x = -4.0;
    while x <= 4.0 + 1e-12 {
        let v = airy::<f64>(x).unwrap();
        let want = v.ai_prime * v.ai_prime - x * v.ai * v.ai;
        worst = worst.max((k2(0.0, x, 0.0, x) - want).abs());
        x += 0.25;
    }
    assert!(worst <= 1e-8, "worst {worst:e}");
}

#[test]
fn rank_one_gaussian_kernel() {
    // det(I - c φ⊗φ) = 1 - c ∫φ² with φ(x) = exp(-x²/2)
    let c = 0.3;
    let (nodes, weights) = GaussLegendre::<f64>::new(60).mapped(-9.0, 9.0);
    let got = scalar_kernel_det(|x, y| c * (-(x * x + y * y) / 2.0).exp(), &nodes, &weights);
    let want = 1.0 - c * std::f64::consts::PI.sqrt();
    assert!((got - want).abs() <= 1e-10, "{got} vs {want}");
}

#[test]
fn rank_two_kernel_matches_two_by_two_determinant() {
    // k = a φ₀⊗φ₀ + b φ₁⊗φ₁ with orthogonal Hermite functions
    let (a, b) = (0.4, 0.7);
    let (nodes, weights) = GaussLegendre::<f64>::new(60).mapped(-9.0, 9.0);
    let kernel = |x: f64, y: f64| (-(x * x + y * y) / 2.0).exp() * (a + b * x * y);
    let got = scalar_kernel_det(kernel, &nodes, &weights);
    let root_pi = std::f64::consts::PI.sqrt();
    let want = (1.0 - a * root_pi) * (1.0 - b * root_pi / 2.0);
    assert!((got - want).abs() <= 1e-10, "{got} vs {want}");
}

#[test]
fn tracy_widom_moments() {
    let s = solver();
    let (m2, v2) = s.f2_moments().unwrap();
    let (m1, v1) = s.f1_moments().unwrap();
    assert!((m2 - F2_MEAN).abs() < 1e-8 && (v2 - F2_VAR).abs() < 1e-8, "{m2} {v2}");
    assert!((m1 - F1_MEAN).abs() < 1e-8 && (v1 - F1_VAR).abs() < 1e-8, "{m1} {v1}");
}

#[test]
fn grid_refinement_converges() {
    let coarse = FredholmSolver::<f64>::new(80, 16.0).unwrap();
    let fine = FredholmSolver::<f64>::new(160, 16.0).unwrap();
    for i in 0..=16 {
        let s = -6.0 + 0.5 * i as f64;
        let d2 = (coarse.f2(s).unwrap() - fine.f2(s).unwrap()).abs();
        let d1 = (coarse.f1(s).unwrap() - fine.f1(s).unwrap()).abs();
        assert!(d2 < 1e-8 && d1 < 1e-8, "s = {s}: {d2:e} {d1:e}");
    }
}

#[test]
fn known_distribution_values() {
    let s = solver();
    assert!((s.f2(-2.0).unwrap() - 0.413_224_142_505_124).abs() < 1e-10);
    assert!((s.f1(-2.0).unwrap() - 0.274_320_197_909_232).abs() < 1e-10);
}

#[test]
fn cdfs_monotone_and_saturate() {
    let s = FredholmSolver::<f64>::new(40, 14.0).unwrap();
    let mut prev = (0.0, 0.0);
    for i in 0..200 {
        let x = -10.0 + 16.0 * i as f64 / 199.0;
        let f2 = s.f2(x).unwrap();
        let f1 = s.f1(x).unwrap();
        assert!(f2 > 0.0 && f2 <= 1.0 && f1 > 0.0 && f1 <= 1.0, "s = {x}");
        assert!(f2 >= prev.0 - 1e-14 && f1 >= prev.1 - 1e-14, "s = {x}");
        prev = (f2, f1);
    }
    assert!(s.f2(6.0).unwrap() >= 1.0 - 1e-8);
    // the F₁ upper tail decays only like exp(-(2/3)s^{3/2}): 1.94e-6 at s = 6
    let tail1 = 1.0 - s.f1(6.0).unwrap();
    assert!(tail1 > 1e-6 && tail1 < 3e-6, "{tail1:e}");
}

#[test]
fn out_of_domain_rejected() {
    let s = solver();
    assert!(s.f2(-10.5).is_err());
    assert!(s.f1(6.5).is_err());
    assert!(s.covariance(ProcessKind::Airy2, -1.0).is_err());
}

#[test]
fn joint_law_properties() {
    let s = FredholmSolver::<f64>::new(50, 14.0).unwrap();
    for kind in [ProcessKind::Airy1, ProcessKind::Airy2] {
        for &(s1, s2) in &[(-1.0, -2.0), (0.5, -0.5), (-3.0, 1.0)] {
            let joint = s.joint_cdf(kind, (0.0, s1), (0.7, s2)).unwrap();
            let (m1, m2) = (s.one_point(kind, s1).unwrap(), s.one_point(kind, s2).unwrap());
            assert!(joint <= m1.min(m2) + 1e-12, "{kind:?} ({s1}, {s2})");
            assert!(joint >= m1 + m2 - 1.0 - 1e-12, "{kind:?} ({s1}, {s2})");
            // positive association
            assert!(joint >= m1 * m2, "{kind:?} ({s1}, {s2})");

            let shifted = s.joint_cdf(kind, (2.5, s1), (3.2, s2)).unwrap();
            assert!((joint - shifted).abs() < 1e-8, "{kind:?} shift");
        }
        // a cutoff far out drops out
        let lone = s.joint_cdf(kind, (0.0, -1.0), (1.0, 8.0)).unwrap();
        assert!((lone - s.one_point(kind, -1.0).unwrap()).abs() < 1e-8, "{kind:?}");
        // nonincreasing as a cutoff is lowered
        let hi = s.joint_cdf(kind, (0.0, -0.5), (1.0, 0.0)).unwrap();
        let lo = s.joint_cdf(kind, (0.0, -1.0), (1.0, 0.0)).unwrap();
        assert!(lo <= hi, "{kind:?}");
    }
}

#[test]
fn equal_times_reduce_to_one_point() {
    let s = FredholmSolver::<f64>::new(50, 14.0).unwrap();
    let joint = s.joint_cdf(ProcessKind::Airy2, (1.0, -1.0), (1.0, 0.5)).unwrap();
    assert!((joint - s.f2(-1.0).unwrap()).abs() < 1e-12);
}

#[test]
fn distant_times_decorrelate() {
    let s = FredholmSolver::<f64>::new(50, 14.0).unwrap();
    for kind in [ProcessKind::Airy1, ProcessKind::Airy2] {
        for &(s1, s2) in &[(-1.5, -1.0), (0.0, -2.0)] {
            let joint = s.joint_cdf(kind, (0.0, s1), (50.0, s2)).unwrap();
            let product = s.one_point(kind, s1).unwrap() * s.one_point(kind, s2).unwrap();
            assert!((joint - product).abs() < 1e-3, "{kind:?}: {joint} vs {product}");
        }
    }
}

#[test]
fn three_cut_determinant_bounded_by_two_cut() {
    // three cuts are supported structurally; the value must be a probability
    let s = FredholmSolver::<f64>::new(40, 14.0).unwrap();
    let cuts = KernelCut::new(vec![(0.0, -1.0), (0.5, -0.5), (1.5, 0.0)]).unwrap();
    let d = s.determinant(ProcessKind::Airy2, &cuts).unwrap();
    let pair = s.joint_cdf(ProcessKind::Airy2, (0.0, -1.0), (0.5, -0.5)).unwrap();
    assert!(d > 0.0 && d <= pair + 1e-12, "{d} vs {pair}");
}

#[test]
fn covariance_at_zero_is_variance() {
    let s = solver();
    let g2 = s.covariance(ProcessKind::Airy2, 0.0).unwrap();
    let g1 = s.covariance(ProcessKind::Airy1, 0.0).unwrap();
    assert!((g2 - F2_VAR).abs() < 1e-8);
    assert!((g1 - F1_VAR / 4.0).abs() < 1e-8);
}

#[test]
fn covariance_continuous_at_small_lag_and_box_stable() {
    let s = FredholmSolver::<f64>::new(40, 12.0).unwrap();
    let near = s.covariance(ProcessKind::Airy2, 0.05).unwrap();
    // locally Brownian with diffusion 2: g(u) ≈ g(0) - u
    assert!((near - (F2_VAR - 0.05)).abs() < 0.01, "{near}");

    let wide = s.clone().with_process_box(-12.0, 8.0).unwrap().with_covariance_rule(10, 6);
    let a = s.covariance(ProcessKind::Airy2, 1.0).unwrap();
    let b = wide.covariance(ProcessKind::Airy2, 1.0).unwrap();
    assert!((a - b).abs() < 1e-6, "{a} vs {b}");
}

#[test]
fn kernels_are_finite_over_kernel_ranges() {
    for &(u, s, u2, s2) in &[(0.0f64, -8.0, 3.0, 10.0), (3.0, 10.0, 0.0, -8.0), (0.0, 5.0, 0.1, 5.0)] {
        assert!(k1(u, s, u2, s2).is_finite());
        assert!(k2(u, s, u2, s2).is_finite());
    }
}

#[test]
fn airy1_covariance_decays_without_cancellation_noise() {
    let s = FredholmSolver::<f64>::new(40, 16.0).unwrap();
    let g = |u: f64| s.covariance(ProcessKind::Airy1, u).unwrap();
    let (a, b, c) = (g(2.0), g(2.5), g(3.0));
    assert!((a - 3.3189e-7).abs() < 1e-10, "{a:e}");
    assert!(b > 0.0 && b < a * 1e-3, "{b:e}");
    assert!(c.abs() < 1e-14, "{c:e}");
    let narrow = s.clone().with_process_box(-5.0, 6.0).unwrap();
    assert!((narrow.covariance(ProcessKind::Airy1, 2.5).unwrap() - b).abs() < 1e-14);
}
