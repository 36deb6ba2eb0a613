use kpz_core::rng::replica_rng;
use kpz_core::tasep::*;
use proptest::prelude::*;
use rand::Rng;

fn mean_and_stderr(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let m = xs.iter().sum::<f64>() / n;
    let v = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1.0);
    (m, (v / n).sqrt())
}

#[test]
fn invariants_hold_over_a_million_events() {
    let mut events = 0u64;
    let mut replica = 0;
    while events < 1_000_000 {
        let mut rng = replica_rng(2024, replica);
        let ic = match replica % 3 {
            0 => InitialCondition::Step,
            1 => InitialCondition::Flat,
            _ => InitialCondition::Stationary(rng.random_range(0.05..0.95)),
        };
        let lo = -rng.random_range(1..30);
        let hi = rng.random_range(1..30);
        let mut sys = ParticleSystem::new(ic, Window::new(lo, hi).unwrap(), &mut rng).unwrap();
        let particles = sys.particle_count();
        let mut last = (sys.time(), sys.passages());
        for _ in 0..20_000 {
            match sys.gillespie_step(&mut rng) {
                Ok(()) => {}
                Err(kpz_core::Error::Jammed) => break,
                Err(e) => panic!("{e}"),
            }
            events += 1;
            sys.check_invariants().unwrap();
            assert!(sys.time() >= last.0 && sys.passages() >= last.1);
            last = (sys.time(), sys.passages());
        }
        assert_eq!(sys.particle_count(), particles);
        replica += 1;
    }
}

#[test]
fn stationary_density() {
    let w = Window::new(-500_000, 499_999).unwrap();
    let sys = ParticleSystem::new(InitialCondition::Stationary(0.5), w, &mut replica_rng(9, 0)).unwrap();
    let density = sys.particle_count() as f64 / w.len() as f64;
    assert!((density - 0.5).abs() < 3e-3, "{density}");
}

#[test]
fn lone_particle_is_poisson() {
    // a single particle jumps at rate 1: displacement ~ Poisson(10)
    let runs = 4000;
    let mut shifts = Vec::with_capacity(runs);
    for r in 0..runs as u64 {
        let mut rng = replica_rng(77, r);
        let text = "tasep-snapshot 1\nic step\nlo -100\ntime 0.0\npassages 0\nruns 0:100 1:1 0:100\n";
        let mut sys = ParticleSystem::from_snapshot(text).unwrap();
        sys.evolve(10.0, &mut rng).unwrap();
        let site = (-100..=100).find(|&x| sys.occupation(x).unwrap()).unwrap();
        shifts.push(site as f64);
    }
    let (m, se) = mean_and_stderr(&shifts);
    assert!((m - 10.0).abs() < 3.0 * se, "{m} ± {se}");
    let var = shifts.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (runs as f64 - 1.0);
    assert!((var - 10.0).abs() < 1.0, "{var}");
}

#[test]
fn step_current_matches_limit_shape() {
    // h(0, t)/t → h_ma(0) = 1/2; at finite t the mean sits higher by
    // |E χ₂| (t/2)^{1/3}/t, with E χ₂ = -1.7711 the F₂ mean.
    let t = 1000.0;
    let values: Vec<f64> = (0..1000)
        .map(|r| {
            let mut rng = replica_rng(5, r);
            let mut sys = ParticleSystem::new(InitialCondition::Step, Window::for_run(t, 0), &mut rng).unwrap();
            sys.evolve(t, &mut rng).unwrap();
            2.0 * sys.passages() as f64 / t
        })
        .collect();
    let (m, se) = mean_and_stderr(&values);
    let scale = (t / 2.0).cbrt() / t;
    let predicted = limit_shape_step(0.0) + 1.7711 * scale;
    assert!((m - predicted).abs() <= 3.0 * se + 0.2 * scale, "{m} ± {se} vs {predicted}");
    assert!((m - 0.5).abs() < 0.02);
}

#[test]
fn passages_monotone_along_a_path() {
    let mut rng = replica_rng(3, 3);
    let mut sys = ParticleSystem::new(InitialCondition::Step, Window::for_run(200.0, 0), &mut rng).unwrap();
    let mut prev = 0;
    for k in 1..=200 {
        sys.evolve(k as f64, &mut rng).unwrap();
        assert!(sys.passages() >= prev);
        prev = sys.passages();
    }
    sys.check_invariants().unwrap();
}

#[test]
fn deterministic_given_seed() {
    let run = || {
        let mut rng = replica_rng(123, 4);
        let mut sys =
            ParticleSystem::new(InitialCondition::Stationary(0.3), Window::new(-300, 300).unwrap(), &mut rng).unwrap();
        sys.evolve(50.0, &mut rng).unwrap();
        sys.to_snapshot()
    };
    assert_eq!(run(), run());
}

#[test]
fn density_profile_of_step_front() {
    let t = 400.0;
    let mut rng = replica_rng(8, 0);
    let mut sys = ParticleSystem::new(InitialCondition::Step, Window::for_run(t, 0), &mut rng).unwrap();
    sys.evolve(t, &mut rng).unwrap();
    let bins = sys.density_profile(t, 0.1).unwrap();
    for b in &bins {
        if b.xi < -1.1 {
            assert_eq!(b.density, 1.0, "xi {}", b.xi);
        } else if b.xi > 1.1 {
            assert_eq!(b.density, 0.0, "xi {}", b.xi);
        } else if b.xi.abs() < 0.8 {
            assert!((b.density - density_step(b.xi)).abs() < 0.15, "xi {}", b.xi);
        }
    }
    assert!(sys.density_profile(0.0, 0.1).is_err());
}

#[test]
fn rescalings_reject_sites_outside_window() {
    let sys = ParticleSystem::new(InitialCondition::Flat, Window::new(-10, 10).unwrap(), &mut replica_rng(0, 0)).unwrap();
    assert!(rescale_flat(&sys, 1000.0, 1.0).is_err());
    assert!(rescale_step(&sys, 1000.0, 1.0).is_err());
    assert!(rescale_stationary(&sys, 1000.0, 0.0, 0.2).is_err());
    assert_eq!(rescale_flat(&sys, 1.0, 0.0).unwrap(), flat_rescaled(0.0, 1.0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_event_sequences_keep_invariants(
        seed in any::<u64>(),
        lo in -40i64..-1,
        hi in 1i64..40,
        rho in 0.05f64..0.95,
        t in 0.0f64..30.0,
    ) {
        let mut rng = replica_rng(seed, 0);
        let mut sys = ParticleSystem::new(InitialCondition::Stationary(rho), Window::new(lo, hi).unwrap(), &mut rng).unwrap();
        let before = sys.particle_count();
        sys.evolve(t, &mut rng).unwrap();
        prop_assert!(sys.check_invariants().is_ok());
        prop_assert_eq!(sys.particle_count(), before);
        prop_assert_eq!(sys.time(), t);
        let back = ParticleSystem::from_snapshot(&sys.to_snapshot()).unwrap();
        prop_assert_eq!(back.occupations(), sys.occupations());
    }

    #[test]
    fn height_formula_matches_profile(seed in any::<u64>(), t in 0.0f64..20.0) {
        let mut rng = replica_rng(seed, 1);
        let mut sys = ParticleSystem::new(InitialCondition::Flat, Window::new(-25, 25).unwrap(), &mut rng).unwrap();
        sys.evolve(t, &mut rng).unwrap();
        let profile = sys.height_profile();
        for x in -25..=25 {
            prop_assert_eq!(Some(sys.height(x).unwrap()), profile.at(x));
        }
        prop_assert_eq!(sys.height(0).unwrap(), 2 * sys.passages() as i64);
    }
}
