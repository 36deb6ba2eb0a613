//! The experiment families. Each returns a [`Table`]; the building blocks
//! are public so the acceptance suite drives the same code paths.

use std::collections::HashMap;

use kpz_core::fredholm::{FredholmSolver, ProcessKind};
use kpz_core::rmt::{dbm_path, EnsembleKind};
use kpz_core::rng::run_replicas;
use kpz_core::stats::{path_covariance, CovarianceEstimate, EmpiricalDistribution, MIN_BATCHES};
use kpz_core::tasep::{
    density_step, rescale_flat, rescale_stationary, rescale_step, InitialCondition, ParticleSystem, Window,
};
use kpz_core::Result;

use crate::config::{Experiment, ExperimentConfig, Ic};
use crate::output::Table;

/// Batches used for covariance error bars.
pub const COVARIANCE_BATCHES: usize = 10;

pub fn run(cfg: &ExperimentConfig) -> Result<Table> {
    match cfg.experiment {
        Experiment::TwTable => tw_table(cfg),
        Experiment::AiryCov => airy_cov(cfg),
        Experiment::TasepOnepoint => tasep_onepoint(cfg),
        Experiment::TasepShape => tasep_shape(cfg),
        Experiment::DbmCov => dbm_cov(cfg),
        Experiment::Compare => compare(cfg),
    }
}

fn solver(cfg: &ExperimentConfig) -> Result<FredholmSolver<f64>> {
    FredholmSolver::new(cfg.n_quad, cfg.margin)
}

pub fn tw_table(cfg: &ExperimentConfig) -> Result<Table> {
    let solver = solver(cfg)?;
    let mut table = Table::new(vec!["s", "F1", "F2"]);
    for s in cfg.s_grid() {
        table.rows.push(vec![s, solver.f1(s)?, solver.f2(s)?]);
    }
    let (m2, v2) = solver.f2_moments()?;
    let (m1, v1) = solver.f1_moments()?;
    table.results = vec![
        ("f1_mean".into(), m1),
        ("f1_variance".into(), v1),
        ("f2_mean".into(), m2),
        ("f2_variance".into(), v2),
    ];
    Ok(table)
}

/// `g(u)` for every `u` of `grid`.
pub fn theory_covariances(solver: &FredholmSolver<f64>, kind: ProcessKind, grid: &[f64]) -> Result<Vec<f64>> {
    grid.iter().map(|&u| solver.covariance(kind, u)).collect()
}

pub fn airy_cov(cfg: &ExperimentConfig) -> Result<Table> {
    let solver = solver(cfg)?;
    let grid = cfg.u_grid();
    let g1 = theory_covariances(&solver, ProcessKind::Airy1, &grid)?;
    let g2 = theory_covariances(&solver, ProcessKind::Airy2, &grid)?;
    let mut table = Table::new(vec!["u", "g1", "g2"]);
    table.rows = grid.iter().zip(g1.iter().zip(&g2)).map(|(&u, (&a, &b))| vec![u, a, b]).collect();
    Ok(table)
}

pub fn initial_condition(ic: Ic, rho: f64) -> InitialCondition {
    match ic {
        Ic::Step => InitialCondition::Step,
        Ic::Flat => InitialCondition::Flat,
        Ic::Stat => InitialCondition::Stationary(rho),
    }
}

/// Rescaled height at the origin (`u = 0`) after time `t`, one value per
/// replica, in replica order.
pub fn tasep_samples(ic: InitialCondition, t: f64, runs: usize, seed: u64) -> Result<Vec<f64>> {
    run_replicas(seed, runs, |_, rng| {
        let mut sys = ParticleSystem::new(ic, Window::for_run(t, 0), rng)?;
        sys.evolve(t, rng)?;
        match ic {
            InitialCondition::Step => rescale_step(&sys, t, 0.0),
            InitialCondition::Flat => rescale_flat(&sys, t, 0.0),
            InitialCondition::Stationary(rho) => rescale_stationary(&sys, t, 0.0, rho),
        }
    })
    .into_iter()
    .collect()
}

/// Limit law of the rescaled one-point value: `F₂` for step, `s ↦ F₁(2s)`
/// for flat; the stationary limit law is not available.
pub fn limit_cdf(solver: &FredholmSolver<f64>, ic: InitialCondition, s: f64) -> Result<f64> {
    let clamp = |x: f64| x.clamp(-10.0, 6.0);
    match ic {
        InitialCondition::Step => solver.f2(clamp(s)),
        InitialCondition::Flat => solver.f1(clamp(2.0 * s)),
        InitialCondition::Stationary(_) => Ok(f64::NAN),
    }
}

/// Kolmogorov-Smirnov distance between a sample and a CDF, evaluating the
/// CDF once per distinct sample value (TASEP heights are lattice valued).
pub fn ks_distance<F: FnMut(f64) -> Result<f64>>(dist: &EmpiricalDistribution, mut cdf: F) -> Result<f64> {
    let mut cache: HashMap<u64, f64> = HashMap::new();
    for &x in dist.values() {
        if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(x.to_bits()) {
            e.insert(cdf(x)?);
        }
    }
    Ok(dist.ks_distance(|x| cache[&x.to_bits()]))
}

pub fn tasep_onepoint(cfg: &ExperimentConfig) -> Result<Table> {
    let ic = initial_condition(cfg.ic, cfg.rho);
    let samples = tasep_samples(ic, cfg.t, cfg.runs, cfg.seed)?;
    let dist = EmpiricalDistribution::new(samples)?;
    let solver = solver(cfg)?;
    let mut table = Table::new(vec!["s", "ecdf", "theory"]);
    for s in cfg.s_grid() {
        table.rows.push(vec![s, dist.ecdf(s), limit_cdf(&solver, ic, s)?]);
    }
    if cfg.runs >= 2 {
        let m = dist.moments()?;
        table.results.push(("mean".into(), m.mean));
        table.results.push(("variance".into(), m.variance));
    }
    if !matches!(ic, InitialCondition::Stationary(_)) {
        table.results.push(("ks".into(), ks_distance(&dist, |x| limit_cdf(&solver, ic, x))?));
    }
    Ok(table)
}

/// Step-IC occupation per `ξ` bin, averaged over replicas. Only bins with
/// `|ξ| <= 1.5` are kept.
pub fn tasep_density(t: f64, runs: usize, bin: f64, seed: u64) -> Result<Vec<(f64, f64)>> {
    let profiles: Vec<Vec<(f64, f64)>> = run_replicas(seed, runs, |_, rng| {
        let mut sys = ParticleSystem::new(InitialCondition::Step, Window::for_run(t, 0), rng)?;
        sys.evolve(t, rng)?;
        Ok(sys.density_profile(t, bin)?.into_iter().map(|b| (b.xi, b.density)).collect())
    })
    .into_iter()
    .collect::<Result<_>>()?;
    let mut mean: Vec<(f64, f64)> = profiles[0].iter().map(|&(xi, _)| (xi, 0.0)).collect();
    for p in &profiles {
        for (acc, &(_, d)) in mean.iter_mut().zip(p) {
            acc.1 += d / runs as f64;
        }
    }
    Ok(mean.into_iter().filter(|(xi, _)| xi.abs() <= 1.5).collect())
}

pub fn tasep_shape(cfg: &ExperimentConfig) -> Result<Table> {
    let mut table = Table::new(vec!["xi", "density", "theory"]);
    table.rows = tasep_density(cfg.t, cfg.runs, cfg.bin, cfg.seed)?
        .into_iter()
        .map(|(xi, d)| vec![xi, d, density_step(xi)])
        .collect();
    Ok(table)
}

/// Rescaled DBM paths on `grid`, one per replica, in replica order.
pub fn dbm_paths(kind: EnsembleKind, n: usize, grid: &[f64], runs: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    run_replicas(seed, runs, |_, rng| dbm_path(kind, n, grid, rng)).into_iter().collect()
}

pub fn dbm_covariances(kind: EnsembleKind, n: usize, grid: &[f64], runs: usize, seed: u64) -> Result<Vec<CovarianceEstimate>> {
    let paths = dbm_paths(kind, n, grid, runs, seed)?;
    (0..grid.len()).map(|k| path_covariance(&paths, grid, k, COVARIANCE_BATCHES.max(MIN_BATCHES))).collect()
}

pub fn process_of(kind: EnsembleKind) -> ProcessKind {
    match kind {
        EnsembleKind::Gue => ProcessKind::Airy2,
        EnsembleKind::Goe => ProcessKind::Airy1,
    }
}

pub fn dbm_cov(cfg: &ExperimentConfig) -> Result<Table> {
    let grid = cfg.u_grid();
    let estimates = dbm_covariances(cfg.ensemble, cfg.n, &grid, cfg.runs, cfg.seed)?;
    let theory = theory_covariances(&solver(cfg)?, process_of(cfg.ensemble), &grid)?;
    let mut table = Table::new(vec!["u", "f_hat", "stderr", "theory"]);
    table.rows = estimates.iter().zip(&theory).map(|(e, &g)| vec![e.u, e.value, e.stderr, g]).collect();
    Ok(table)
}

pub fn compare(cfg: &ExperimentConfig) -> Result<Table> {
    let grid = cfg.u_grid();
    let solver = solver(cfg)?;
    let gue = dbm_covariances(EnsembleKind::Gue, cfg.n, &grid, cfg.runs, cfg.seed)?;
    let goe = dbm_covariances(EnsembleKind::Goe, cfg.n, &grid, cfg.runs, cfg.seed)?;
    let g2 = theory_covariances(&solver, ProcessKind::Airy2, &grid)?;
    let g1 = theory_covariances(&solver, ProcessKind::Airy1, &grid)?;
    let mut table = Table::new(vec!["u", "f_gue", "stderr_gue", "g2", "f_goe", "stderr_goe", "g1", "goe_excess_sigmas"]);
    for k in 0..grid.len() {
        let excess = (goe[k].value - g1[k]) / goe[k].stderr;
        table.rows.push(vec![grid[k], gue[k].value, gue[k].stderr, g2[k], goe[k].value, goe[k].stderr, g1[k], excess]);
    }
    Ok(table)
}
