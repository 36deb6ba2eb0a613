//! Continuous-time TASEP on a finite window.
//!
//! Particles jump one site to the right at rate 1 when the target is empty.
//! The simulation is event driven: the set of mobile particles (occupied
//! site, empty right neighbour) is kept in an array with a position map, so
//! that insertion, removal and uniform sampling are `O(1)`. The window has
//! closed ends: no particle enters at `lo` and the particle at `hi` never
//! moves.
//!
//! The height function is `h(x) = 2N_t + Σ_{y=1}^{x} (1 - 2η_y)` (with the
//! obvious reading for `x ≤ 0`), where `N_t` counts jumps across the bond
//! `0 → 1`.
//!
//! # Snapshots
//!
//! [`ParticleSystem::to_snapshot`] writes a line-oriented text record:
//!
//! ```text
//! tasep-snapshot 1
//! ic stationary 0.5
//! lo -3
//! time 12.75
//! passages 4
//! runs 1:2 0:1 1:1 0:3
//! ```
//!
//! `ic` is `step`, `flat` or `stationary <rho>`; `runs` lists
//! `occupation:length` pairs covering the window from `lo` upward. Times are
//! written in Rust's shortest round-trip form, so a snapshot restores the
//! state bit for bit.

use rand::Rng;
use rand_distr::Exp1;

use crate::error::{Error, Result};

const ABSENT: u32 = u32::MAX;

/// Sites `lo..=hi`, with `lo < 0 < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    lo: i64,
    hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo >= 0 || hi <= 0 {
            return Err(Error::DegenerateWindow { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    /// Symmetric window for a run up to time `t` observed at sites
    /// `|x| <= max_site`. Information travels by single jumps at rate at
    /// most 1, so its reach in time `t` is dominated by a Poisson(`t`)
    /// variable; the margin `t + 8√t + 64` puts the boundary far beyond it.
    pub fn for_run(t: f64, max_site: u64) -> Self {
        let reach = (t.max(0.0) + 8.0 * t.max(0.0).sqrt()).ceil() as i64 + 64;
        let radius = max_site as i64 + reach;
        Self { lo: -radius, hi: radius }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    /// Number of sites.
    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: i64) -> bool {
        (self.lo..=self.hi).contains(&x)
    }

    fn check(&self, x: i64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::SiteOutsideWindow { site: x, lo: self.lo, hi: self.hi })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialCondition {
    /// `η_x = 1` for `x <= 0`.
    Step,
    /// `η_x = 1` for even `x`.
    Flat,
    /// Bernoulli product measure with density `ρ ∈ (0, 1)`.
    Stationary(f64),
}

impl InitialCondition {
    pub fn validate(&self) -> Result<()> {
        match *self {
            InitialCondition::Stationary(rho) if !(rho > 0.0 && rho < 1.0) => Err(Error::InvalidDensity(rho)),
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            InitialCondition::Step => "step",
            InitialCondition::Flat => "flat",
            InitialCondition::Stationary(_) => "stationary",
        }
    }
}

/// Heights on a contiguous range of sites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightProfile {
    pub lo: i64,
    pub h: Vec<i64>,
}

impl HeightProfile {
    pub fn at(&self, x: i64) -> Option<i64> {
        usize::try_from(x - self.lo).ok().and_then(|i| self.h.get(i).copied())
    }
}

/// Occupation averaged over a bin of `ξ = x/t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityBin {
    pub xi: f64,
    pub density: f64,
    pub sites: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParticleSystem {
    window: Window,
    ic: InitialCondition,
    occupied: Vec<bool>,
    time: f64,
    passages: u64,
    events: u64,
    // indices (site - lo) of mobile particles, and each index's slot in it
    mobile: Vec<u32>,
    slot: Vec<u32>,
}

impl ParticleSystem {
    /// The initial condition restricted to `window`; the random draw is used
    /// only by the stationary condition.
    pub fn new<R: Rng + ?Sized>(ic: InitialCondition, window: Window, rng: &mut R) -> Result<Self> {
        ic.validate()?;
        let occupied = (window.lo..=window.hi)
            .map(|x| match ic {
                InitialCondition::Step => x <= 0,
                InitialCondition::Flat => x.rem_euclid(2) == 0,
                InitialCondition::Stationary(rho) => rng.random_bool(rho),
            })
            .collect();
        Ok(Self::from_parts(window, ic, occupied, 0.0, 0))
    }

    fn from_parts(window: Window, ic: InitialCondition, occupied: Vec<bool>, time: f64, passages: u64) -> Self {
        let n = occupied.len();
        let mut sys = Self {
            window,
            ic,
            occupied,
            time,
            passages,
            events: 0,
            mobile: Vec::new(),
            slot: vec![ABSENT; n],
        };
        for i in 0..n.saturating_sub(1) {
            if sys.is_mobile(i) {
                sys.insert(i);
            }
        }
        sys
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn initial_condition(&self) -> InitialCondition {
        self.ic
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    /// `N_t`: jumps across the bond `0 → 1`.
    pub fn passages(&self) -> u64 {
        self.passages
    }

    /// Events applied since construction.
    pub fn events(&self) -> u64 {
        self.events
    }

    pub fn mobile_count(&self) -> usize {
        self.mobile.len()
    }

    /// Sites of the mobile particles, in internal order.
    pub fn mobile_sites(&self) -> impl Iterator<Item = i64> + '_ {
        self.mobile.iter().map(|&i| i as i64 + self.window.lo)
    }

    pub fn occupation(&self, x: i64) -> Result<bool> {
        self.window.check(x)?;
        Ok(self.occupied[(x - self.window.lo) as usize])
    }

    pub fn occupations(&self) -> &[bool] {
        &self.occupied
    }

    pub fn particle_count(&self) -> usize {
        self.occupied.iter().filter(|&&o| o).count()
    }

    #[inline]
    fn is_mobile(&self, i: usize) -> bool {
        i + 1 < self.occupied.len() && self.occupied[i] && !self.occupied[i + 1]
    }

    #[inline]
    fn insert(&mut self, i: usize) {
        debug_assert_eq!(self.slot[i], ABSENT);
        self.slot[i] = self.mobile.len() as u32;
        self.mobile.push(i as u32);
    }

    #[inline]
    fn remove(&mut self, i: usize) {
        let k = self.slot[i] as usize;
        let last = self.mobile.pop().expect("mobile set non-empty");
        if last as usize != i {
            self.mobile[k] = last;
            self.slot[last as usize] = k as u32;
        }
        self.slot[i] = ABSENT;
    }

    /// Moves the particle at index `i` one site right and repairs the mobile
    /// set around it.
    #[inline]
    fn jump(&mut self, i: usize) {
        self.occupied[i] = false;
        self.occupied[i + 1] = true;
        self.remove(i);
        if i > 0 && self.occupied[i - 1] {
            self.insert(i - 1);
        }
        if self.is_mobile(i + 1) {
            self.insert(i + 1);
        }
        if i as i64 + self.window.lo == 0 {
            self.passages += 1;
        }
        self.events += 1;
        debug_assert!(self.locally_consistent(i));
    }

    fn locally_consistent(&self, i: usize) -> bool {
        let lo = i.saturating_sub(1);
        let hi = (i + 2).min(self.occupied.len() - 1);
        (lo..=hi).all(|j| self.is_mobile(j) == (self.slot[j] != ABSENT))
    }

    /// One Gillespie event: advance the clock by an exponential time of rate
    /// `|mobile|`, then move a uniformly chosen mobile particle.
    pub fn gillespie_step<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Result<()> {
        let m = self.mobile.len();
        if m == 0 {
            return Err(Error::Jammed);
        }
        let wait: f64 = rng.sample(Exp1);
        self.time += wait / m as f64;
        let i = self.mobile[rng.random_range(0..m)] as usize;
        self.jump(i);
        Ok(())
    }

    /// Runs the dynamics up to `t_end`. The event that would overshoot
    /// `t_end` is discarded and the clock set to `t_end`, which by the
    /// memoryless property leaves the law of the state at `t_end` exact. A
    /// jammed window is absorbing and simply waits.
    pub fn evolve<R: Rng + ?Sized>(&mut self, t_end: f64, rng: &mut R) -> Result<()> {
        if !(t_end >= self.time) {
            return Err(Error::TimeReversed { now: self.time, target: t_end });
        }
        loop {
            let m = self.mobile.len();
            if m == 0 {
                break;
            }
            let wait: f64 = rng.sample(Exp1);
            let next = self.time + wait / m as f64;
            if next > t_end {
                break;
            }
            self.time = next;
            let i = self.mobile[rng.random_range(0..m)] as usize;
            self.jump(i);
        }
        self.time = t_end;
        Ok(())
    }

    /// `h(x, t)`.
    pub fn height(&self, x: i64) -> Result<i64> {
        self.window.check(x)?;
        let base = 2 * self.passages as i64;
        let lo = self.window.lo;
        let grad = |y: i64| if self.occupied[(y - lo) as usize] { -1 } else { 1 };
        Ok(if x >= 0 {
            base + (1..=x).map(grad).sum::<i64>()
        } else {
            base - (x + 1..=0).map(grad).sum::<i64>()
        })
    }

    pub fn height_profile(&self) -> HeightProfile {
        let lo = self.window.lo;
        let mut h = vec![0i64; self.occupied.len()];
        let origin = (-lo) as usize;
        h[origin] = 2 * self.passages as i64;
        for i in origin + 1..h.len() {
            h[i] = h[i - 1] + if self.occupied[i] { -1 } else { 1 };
        }
        for i in (0..origin).rev() {
            h[i] = h[i + 1] - if self.occupied[i + 1] { -1 } else { 1 };
        }
        HeightProfile { lo, h }
    }

    /// Full consistency check: the incremental mobile set equals the one
    /// recomputed from the occupations, and the height profile has `±1`
    /// gradients with `h(0) = 2N_t`. Returns a description of the first
    /// violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.occupied.len();
        if self.slot.len() != n {
            return Err("position map has wrong length".into());
        }
        let mut seen = 0;
        for i in 0..n {
            let want = self.is_mobile(i);
            let slot = self.slot[i];
            if want != (slot != ABSENT) {
                return Err(format!("site {} mobile = {want} but map disagrees", i as i64 + self.window.lo));
            }
            if want {
                seen += 1;
                if self.mobile.get(slot as usize) != Some(&(i as u32)) {
                    return Err(format!("slot of site {} is stale", i as i64 + self.window.lo));
                }
            }
        }
        if seen != self.mobile.len() {
            return Err(format!("mobile array has {} entries, expected {seen}", self.mobile.len()));
        }
        let profile = self.height_profile();
        if profile.h.windows(2).any(|w| (w[1] - w[0]).abs() != 1) {
            return Err("height gradient not ±1".into());
        }
        if profile.at(0) != Some(2 * self.passages as i64) {
            return Err("h(0) != 2 N_t".into());
        }
        Ok(())
    }

    /// Occupation averaged over bins `[kδ, (k+1)δ)` of `ξ = x/t`, for bins
    /// that contain at least one site of the window.
    pub fn density_profile(&self, t: f64, bin_width: f64) -> Result<Vec<DensityBin>> {
        if !(t > 0.0) || !(bin_width > 0.0) {
            return Err(Error::OutOfRange { what: "density profile t, bin width", value: t.min(bin_width), lo: 0.0, hi: f64::INFINITY });
        }
        let bin_of = |x: i64| (x as f64 / t / bin_width).floor() as i64;
        let first = bin_of(self.window.lo);
        let count = (bin_of(self.window.hi) - first + 1) as usize;
        let mut sums = vec![(0usize, 0usize); count];
        for (i, &o) in self.occupied.iter().enumerate() {
            let b = (bin_of(i as i64 + self.window.lo) - first) as usize;
            sums[b].0 += o as usize;
            sums[b].1 += 1;
        }
        Ok(sums
            .into_iter()
            .enumerate()
            .filter(|(_, (_, sites))| *sites > 0)
            .map(|(k, (occ, sites))| DensityBin {
                xi: ((first + k as i64) as f64 + 0.5) * bin_width,
                density: occ as f64 / sites as f64,
                sites,
            })
            .collect())
    }

    pub fn to_snapshot(&self) -> String {
        let ic = match self.ic {
            InitialCondition::Stationary(rho) => format!("stationary {rho:?}"),
            other => other.name().to_string(),
        };
        let mut runs = Vec::new();
        let mut iter = self.occupied.iter().peekable();
        while let Some(&o) = iter.next() {
            let mut len = 1;
            while iter.next_if(|&&next| next == o).is_some() {
                len += 1;
            }
            runs.push(format!("{}:{len}", o as u8));
        }
        format!(
            "tasep-snapshot 1\nic {ic}\nlo {}\ntime {:?}\npassages {}\nruns {}\n",
            self.window.lo,
            self.time,
            self.passages,
            runs.join(" ")
        )
    }

    pub fn from_snapshot(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Snapshot(msg.to_string());
        let mut lines = text.lines();
        if lines.next() != Some("tasep-snapshot 1") {
            return Err(bad("missing header"));
        }
        let mut field = |key: &str| -> Result<String> {
            let line = lines.next().ok_or_else(|| bad("truncated"))?;
            line.strip_prefix(key)
                .and_then(|rest| rest.strip_prefix(' '))
                .map(str::to_string)
                .ok_or_else(|| Error::Snapshot(format!("expected `{key}`")))
        };
        let ic = match field("ic")?.as_str() {
            "step" => InitialCondition::Step,
            "flat" => InitialCondition::Flat,
            other => {
                let rho = other
                    .strip_prefix("stationary ")
                    .and_then(|r| r.parse().ok())
                    .ok_or_else(|| bad("bad initial condition"))?;
                InitialCondition::Stationary(rho)
            }
        };
        ic.validate()?;
        let lo: i64 = field("lo")?.parse().map_err(|_| bad("bad lo"))?;
        let time: f64 = field("time")?.parse().map_err(|_| bad("bad time"))?;
        if !(time >= 0.0) || !time.is_finite() {
            return Err(bad("bad time"));
        }
        let passages: u64 = field("passages")?.parse().map_err(|_| bad("bad passages"))?;
        let mut occupied = Vec::new();
        for run in field("runs")?.split_whitespace() {
            let (o, len) = run.split_once(':').ok_or_else(|| bad("bad run"))?;
            let o = match o {
                "0" => false,
                "1" => true,
                _ => return Err(bad("bad run")),
            };
            let len: usize = len.parse().map_err(|_| bad("bad run"))?;
            occupied.extend(std::iter::repeat_n(o, len));
        }
        let window = Window::new(lo, lo + occupied.len() as i64 - 1)?;
        Ok(Self::from_parts(window, ic, occupied, time, passages))
    }
}

/// Macroscopic step-IC height `½(1 + ξ²)` for `|ξ| <= 1`, `|ξ|` outside.
pub fn limit_shape_step(xi: f64) -> f64 {
    if xi.abs() <= 1.0 {
        0.5 * (1.0 + xi * xi)
    } else {
        xi.abs()
    }
}

/// Step-IC macroscopic density `(1 - ξ)/2` clamped to `[0, 1]`.
pub fn density_step(xi: f64) -> f64 {
    ((1.0 - xi) / 2.0).clamp(0.0, 1.0)
}

/// Growth velocity `v(u) = (1 - u²)/2` as a function of the slope.
pub fn growth_velocity(u: f64) -> f64 {
    (1.0 - u * u) / 2.0
}

/// Speed `1 - 2ρ` of characteristics at density `ρ`.
pub fn characteristic_speed(rho: f64) -> f64 {
    1.0 - 2.0 * rho
}

/// Nearest lattice site to `x` (ties away from zero).
pub fn nearest_site(x: f64) -> i64 {
    x.round() as i64
}

/// Observation site `2u(t/2)^{2/3}` for the step rescaling.
pub fn step_site(t: f64, u: f64) -> i64 {
    nearest_site(2.0 * u * (t / 2.0).cbrt().powi(2))
}

/// `[h - (t/2 + u²(t/2)^{1/3})] / (-(t/2)^{1/3})`.
pub fn step_rescaled(h: f64, t: f64, u: f64) -> f64 {
    let scale = (t / 2.0).cbrt();
    (h - (t / 2.0 + u * u * scale)) / -scale
}

/// Observation site `2ut^{2/3}` for the flat rescaling.
pub fn flat_site(t: f64, u: f64) -> i64 {
    nearest_site(2.0 * u * t.cbrt().powi(2))
}

/// `[h - t/2] / (-t^{1/3})`.
pub fn flat_rescaled(h: f64, t: f64) -> f64 {
    (h - t / 2.0) / -t.cbrt()
}

/// Observation site `(1 - 2ρ)t + ut^{2/3}` in the characteristic frame.
pub fn stationary_site(t: f64, u: f64, rho: f64) -> i64 {
    nearest_site(characteristic_speed(rho) * t + u * t.cbrt().powi(2))
}

/// `[h - (1 - 2ρ(1 - ρ))t] / t^{1/3}`.
pub fn stationary_rescaled(h: f64, t: f64, rho: f64) -> f64 {
    (h - (1.0 - 2.0 * rho * (1.0 - rho)) * t) / t.cbrt()
}

/// Step rescaling of the height of `sys` (evolved to `t`) at `u`.
pub fn rescale_step(sys: &ParticleSystem, t: f64, u: f64) -> Result<f64> {
    Ok(step_rescaled(sys.height(step_site(t, u))? as f64, t, u))
}

pub fn rescale_flat(sys: &ParticleSystem, t: f64, u: f64) -> Result<f64> {
    Ok(flat_rescaled(sys.height(flat_site(t, u))? as f64, t))
}

pub fn rescale_stationary(sys: &ParticleSystem, t: f64, u: f64, rho: f64) -> Result<f64> {
    Ok(stationary_rescaled(sys.height(stationary_site(t, u, rho))? as f64, t, rho))
}
