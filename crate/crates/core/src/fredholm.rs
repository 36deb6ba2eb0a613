//! Fredholm determinants of the extended Airy kernels.
//!
//! Finite-dimensional distributions of the Airy₁ and Airy₂ processes are
//! `det(I - χ_s K χ_s)` on `L²({u_1..u_m} × ℝ)`, with `χ_s(u_k, x) = 1(x > s_k)`.
//! Each cut `(u_k, s_k)` is discretized by an `n`-point Gauss-Legendre rule on
//! `[s_k, M]` and the determinant of the symmetrized Nyström matrix
//! `δ - √w_i K(u_a, x_i; u_b, y_j) √w_j` is taken by LU.
//!
//! Kernels:
//!
//! * `K₁(u,s;u',s') = -(4π(u'-u))^{-1/2} exp(-(s'-s)²/(4(u'-u))) 1(u<u')
//!   + Ai(s+s'+(u'-u)²) exp((u'-u)(s+s') + (2/3)(u'-u)³)`;
//! * `K₂(u,s;u',s') = ∫_0^∞ e^{(u'-u)λ} Ai(s+λ)Ai(s'+λ) dλ` for `u ≥ u'` and
//!   `-∫_{-∞}^0 e^{(u'-u)λ} Ai(s+λ)Ai(s'+λ) dλ` for `u < u'`.
//!
//! The one-point law of Airy₂ is `F₂`; that of Airy₁ is `s ↦ F₁(2s)`.
//! [`FredholmSolver::f1`] evaluates `F₁` itself by cutting the Airy₁
//! determinant at `s/2`; the kernel is never rescaled.

use crate::airy::{airy_scaled_unchecked, airy_unchecked, zeta};
use crate::error::{Error, Result};
use crate::linalg::determinant_in_place;
use crate::quadrature::{adaptive, GaussLegendre};
use crate::scalar::Real;

/// Smallest node count accepted per cut.
pub const MIN_NODES: usize = 40;
/// Smallest accepted distance between the largest cutoff and `M`.
pub const MIN_MARGIN: f64 = 12.0;
/// Default node count per cut.
pub const DEFAULT_NODES: usize = 80;
/// Default `M - s_max`.
pub const DEFAULT_MARGIN: f64 = 16.0;

/// Domain accepted by [`FredholmSolver::f1`] and [`FredholmSolver::f2`].
pub const TW_DOMAIN: (f64, f64) = (-10.0, 6.0);
/// Integration box (per axis) for moments and covariances of the Airy₂
/// process.
pub const PROCESS_BOX: (f64, f64) = (-10.0, 6.0);
/// Integration box for the Airy₁ process. Its one-point law `F₁(2s)` is
/// below `e^{-70}` at `s = -6`, and the `Δu < 0` blocks of `K₁` grow like
/// `e^{|Δu||s + s'|}`, so a lower end of `-10` costs all precision once
/// `u >= 2.5`.
pub const PROCESS_BOX_AIRY1: (f64, f64) = (-6.0, 6.0);

/// `-ln` of the size below which kernel integrands are dropped.
const DECAY_CUTOFF: f64 = 39.0;
/// Below this time gap the `u < u'` Airy₂ kernel is evaluated as
/// `∫_0^∞ e^{Δλ}AiAi - (Gaussian)`; above it, as the direct integral over
/// `λ < 0`. The first form cancels like `e^{Δ³/12}`, the second needs `Ai`
/// out to `s - 39/Δ`.
const DIRECT_BRANCH_GAP: f64 = 2.0;
/// Gauss-Legendre nodes per unit length of `λ` in kernel integrals.
const LAMBDA_NODES_PER_UNIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProcessKind {
    Airy1,
    Airy2,
}

impl ProcessKind {
    pub fn name(self) -> &'static str {
        match self {
            ProcessKind::Airy1 => "airy1",
            ProcessKind::Airy2 => "airy2",
        }
    }
}

/// Cutoffs `{(u_k, s_k)}` with strictly increasing times.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelCut<T> {
    points: Vec<(T, T)>,
}

impl<T: Real> KernelCut<T> {
    pub fn new(points: Vec<(T, T)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidCut("no cut points".into()));
        }
        for &(u, s) in &points {
            if !u.is_finite() || !s.is_finite() {
                return Err(Error::InvalidCut(format!(
                    "non-finite point ({}, {})",
                    u.to_f64_lossy(),
                    s.to_f64_lossy()
                )));
            }
        }
        if points.windows(2).any(|p| p[0].0 >= p[1].0) {
            return Err(Error::InvalidCut("times must be strictly increasing".into()));
        }
        Ok(Self { points })
    }

    pub fn single(s: T) -> Self {
        Self { points: vec![(T::zero(), s)] }
    }

    pub fn points(&self) -> &[(T, T)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn s_max(&self) -> T {
        self.points.iter().map(|p| p.1).fold(T::neg_infinity(), T::max)
    }
}

/// Gauss-Legendre nodes and weights on `[s_k, M]` for every cut.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid<T> {
    pub n: usize,
    pub truncation: T,
    pub nodes: Vec<Vec<T>>,
    pub weights: Vec<Vec<T>>,
}

impl<T: Real> QuadratureGrid<T> {
    pub fn new(cuts: &KernelCut<T>, rule: &GaussLegendre<T>, truncation: T) -> Result<Self> {
        let n = rule.len();
        if n < MIN_NODES {
            return Err(Error::GridInadequate(format!("{n} nodes per cut, need at least {MIN_NODES}")));
        }
        let s_max = cuts.s_max();
        if !(truncation >= s_max + T::lit(MIN_MARGIN)) {
            return Err(Error::GridInadequate(format!(
                "truncation M = {} too close to s_max = {} (need margin {MIN_MARGIN})",
                truncation.to_f64_lossy(),
                s_max.to_f64_lossy()
            )));
        }
        let (nodes, weights) = cuts.points().iter().map(|&(_, s)| rule.mapped(s, truncation)).unzip();
        Ok(Self { n, truncation, nodes, weights })
    }
}

/// `K₁(u, s; u', s')`.
pub fn k1<T: Real>(u: T, s: T, u2: T, s2: T) -> T {
    let d = u2 - u;
    let mut value = airy1_term(d, s + s2);
    if u < u2 {
        value -= heat(d, s2 - s);
    }
    value
}

/// `(4πd)^{-1/2} exp(-x²/(4d))`.
fn heat<T: Real>(d: T, x: T) -> T {
    (-(x * x) / (T::lit(4.0) * d)).exp() / (T::lit(4.0) * T::PI() * d).sqrt()
}

/// `Ai(σ + d²) exp(dσ + (2/3)d³)`, evaluated in log space when the Airy
/// argument is positive so that large `d` neither overflows nor underflows.
fn airy1_term<T: Real>(d: T, sigma: T) -> T {
    let z = sigma + d * d;
    let expo = d * sigma + T::lit(2.0 / 3.0) * d * d * d;
    if z > T::zero() {
        let (scaled, _) = airy_scaled_unchecked(z);
        scaled * (expo - zeta(z)).exp()
    } else {
        airy_unchecked(z).0 * expo.exp()
    }
}

/// `K₂(u, s; u', s')` by adaptive Gauss-Legendre quadrature of the defining
/// integral, truncated where the integrand falls below `e^{-39}`.
pub fn k2<T: Real>(u: T, s: T, u2: T, s2: T) -> T {
    let rule = GaussLegendre::<T>::new(10);
    let tol = T::lit(1e-14);
    let d = u2 - u;
    let mut f = |lambda: T| (d * lambda).exp() * airy_unchecked(s + lambda).0 * airy_unchecked(s2 + lambda).0;
    let mut total = T::zero();
    if d <= T::zero() {
        let upper = decay_length(s.min(s2), d);
        let mut a = T::zero();
        while a < upper {
            total += adaptive(&rule, a, a + T::one(), tol, 30, &mut f);
            a += T::one();
        }
        total
    } else {
        let lower = -T::lit(DECAY_CUTOFF) / d;
        let mut b = T::zero();
        while b > lower {
            let a = (b - T::one()).max(lower);
            total += adaptive(&rule, a, b, tol, 30, &mut f);
            b = a;
        }
        -total
    }
}

/// Smallest `L >= 1` (on a half-unit lattice) with
/// `2 ζ(s_min + λ) - d λ >= DECAY_CUTOFF` for all `λ >= L`, i.e. beyond which
/// `e^{dλ} Ai(x+λ) Ai(y+λ)` is negligible for `x, y >= s_min`.
fn decay_length<T: Real>(s_min: T, d: T) -> T {
    let cutoff = T::lit(DECAY_CUTOFF);
    let mut lambda = T::one();
    loop {
        let z = s_min + lambda;
        if z > T::zero() && T::lit(2.0) * zeta(z) - d * lambda >= cutoff {
            // the exponent is increasing from here on as long as sqrt(z) > d / 2
            if z.sqrt() * T::lit(2.0) > d {
                return lambda;
            }
        }
        lambda += T::lit(0.5);
    }
}

/// Composite Gauss-Legendre rule on `[a, b]` with unit-length panels.
fn panel_rule<T: Real>(unit: &GaussLegendre<T>, a: T, b: T) -> (Vec<T>, Vec<T>) {
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    let mut lo = a;
    while lo < b {
        let hi = (lo + T::one()).min(b);
        let (x, w) = unit.mapped(lo, hi);
        nodes.extend(x);
        weights.extend(w);
        lo = hi;
    }
    (nodes, weights)
}

/// `Ai(x_i + λ_l)` as a row-major `nodes × lambdas` table.
fn airy_table<T: Real>(xs: &[T], lambdas: &[T]) -> Vec<T> {
    let mut table = Vec::with_capacity(xs.len() * lambdas.len());
    for &x in xs {
        table.extend(lambdas.iter().map(|&l| airy_unchecked(x + l).0));
    }
    table
}

/// `Σ_l c_l A[i][l] B[j][l]`.
fn weighted_product<T: Real>(a: &[T], rows: usize, b: &[T], cols: usize, c: &[T]) -> Vec<T> {
    let len = c.len();
    let mut out = vec![T::zero(); rows * cols];
    let mut scaled = vec![T::zero(); len];
    for i in 0..rows {
        let ai = &a[i * len..(i + 1) * len];
        for ((dst, &x), &w) in scaled.iter_mut().zip(ai).zip(c) {
            *dst = x * w;
        }
        for j in 0..cols {
            let bj = &b[j * len..(j + 1) * len];
            out[i * cols + j] = scaled.iter().zip(bj).map(|(&p, &q)| p * q).sum();
        }
    }
    out
}

/// Per-cut data reused across kernel blocks: nodes, weights and Airy
/// tables on the shared nonnegative `λ` rule.
struct CutBasis<T> {
    nodes: Vec<T>,
    sqrt_weights: Vec<T>,
    plus: Option<Vec<T>>,
    minus: Option<Vec<T>>,
}

/// Shared `λ` rules for one determinant evaluation (or a family of them).
/// The rule on `λ < 0` is tied to one time gap `minus_gap`.
struct LambdaRules<T> {
    plus_nodes: Vec<T>,
    plus_weights: Vec<T>,
    minus_gap: Option<T>,
    minus_nodes: Vec<T>,
    minus_weights: Vec<T>,
}

impl<T: Real> LambdaRules<T> {
    fn new(unit: &GaussLegendre<T>, s_min: T, gap: Option<T>) -> Self {
        // growth e^{dλ} with d < DIRECT_BRANCH_GAP is the worst case on λ > 0
        let upper = decay_length(s_min, T::lit(DIRECT_BRANCH_GAP));
        let (plus_nodes, plus_weights) = panel_rule(unit, T::zero(), upper);
        let minus_gap = gap.filter(|&d| d >= T::lit(DIRECT_BRANCH_GAP));
        let (minus_nodes, minus_weights) = match minus_gap {
            Some(d) => minus_rule(unit, d),
            None => (Vec::new(), Vec::new()),
        };
        Self { plus_nodes, plus_weights, minus_gap, minus_nodes, minus_weights }
    }
}

fn minus_rule<T: Real>(unit: &GaussLegendre<T>, gap: T) -> (Vec<T>, Vec<T>) {
    panel_rule(unit, -T::lit(DECAY_CUTOFF) / gap, T::zero())
}

/// Nyström evaluation of the Airy-process Fredholm determinants.
#[derive(Debug, Clone)]
pub struct FredholmSolver<T> {
    rule: GaussLegendre<T>,
    margin: T,
    lambda_unit: GaussLegendre<T>,
    covariance_panels: usize,
    covariance_nodes_per_panel: usize,
    process_box: Option<(T, T)>,
}

impl<T: Real> Default for FredholmSolver<T> {
    fn default() -> Self {
        Self::new(DEFAULT_NODES, T::lit(DEFAULT_MARGIN)).expect("default grid is adequate")
    }
}

impl<T: Real> FredholmSolver<T> {
    /// `n` nodes per cut on `[s_k, s_max + margin]`.
    pub fn new(n: usize, margin: T) -> Result<Self> {
        if n < MIN_NODES {
            return Err(Error::GridInadequate(format!("{n} nodes per cut, need at least {MIN_NODES}")));
        }
        if !(margin >= T::lit(MIN_MARGIN)) {
            return Err(Error::GridInadequate(format!(
                "margin {} below {MIN_MARGIN}",
                margin.to_f64_lossy()
            )));
        }
        Ok(Self {
            rule: GaussLegendre::new(n),
            margin,
            lambda_unit: GaussLegendre::new(LAMBDA_NODES_PER_UNIT),
            covariance_panels: 8,
            covariance_nodes_per_panel: 6,
            process_box: None,
        })
    }

    /// Sets the tensor rule used for covariances: `panels` equal panels per
    /// axis of the integration box, each with `nodes` Gauss-Legendre points.
    pub fn with_covariance_rule(mut self, panels: usize, nodes: usize) -> Self {
        assert!(panels >= 1 && nodes >= 1);
        self.covariance_panels = panels;
        self.covariance_nodes_per_panel = nodes;
        self
    }

    /// Replaces [`PROCESS_BOX`] and [`PROCESS_BOX_AIRY1`] for moments and
    /// covariances of both processes. The ends must be integers with
    /// `lo < 0 < hi`.
    pub fn with_process_box(mut self, lo: T, hi: T) -> Result<Self> {
        if !(lo < T::zero() && hi > T::zero() && lo.fract() == T::zero() && hi.fract() == T::zero()) {
            return Err(Error::InvalidGrid(format!(
                "process box [{}, {}] needs integer ends around 0",
                lo.to_f64_lossy(),
                hi.to_f64_lossy()
            )));
        }
        self.process_box = Some((lo, hi));
        Ok(self)
    }

    /// Integration box used for moments and covariances of `kind`.
    pub fn process_box(&self, kind: ProcessKind) -> (T, T) {
        self.process_box.unwrap_or_else(|| {
            let (lo, hi) = match kind {
                ProcessKind::Airy2 => PROCESS_BOX,
                ProcessKind::Airy1 => PROCESS_BOX_AIRY1,
            };
            (T::lit(lo), T::lit(hi))
        })
    }

    pub fn nodes_per_cut(&self) -> usize {
        self.rule.len()
    }

    pub fn margin(&self) -> T {
        self.margin
    }

    pub fn grid(&self, cuts: &KernelCut<T>) -> Result<QuadratureGrid<T>> {
        QuadratureGrid::new(cuts, &self.rule, cuts.s_max() + self.margin)
    }

    /// `det(I - χ_s K χ_s)` for the given cuts on this solver's grid.
    pub fn determinant(&self, kind: ProcessKind, cuts: &KernelCut<T>) -> Result<T> {
        let grid = self.grid(cuts)?;
        self.determinant_on(kind, cuts, &grid)
    }

    fn determinant_on(&self, kind: ProcessKind, cuts: &KernelCut<T>, grid: &QuadratureGrid<T>) -> Result<T> {
        let s_min = cuts.points().iter().map(|p| p.1).fold(T::infinity(), T::min);
        let gap = match cuts.points() {
            [(u1, _), (u2, _)] => Some(*u2 - *u1),
            _ => None,
        };
        let rules = LambdaRules::new(&self.lambda_unit, s_min, gap);
        let bases: Vec<CutBasis<T>> = (0..cuts.len())
            .map(|k| self.basis(kind, &grid.nodes[k], &grid.weights[k], &rules))
            .collect();
        let times: Vec<T> = cuts.points().iter().map(|p| p.0).collect();
        self.assemble_and_solve(kind, &times, &bases.iter().collect::<Vec<_>>(), &rules, &mut BlockCache::none())
    }

    fn basis(&self, kind: ProcessKind, nodes: &[T], weights: &[T], rules: &LambdaRules<T>) -> CutBasis<T> {
        let (plus, minus) = match kind {
            ProcessKind::Airy2 => (
                Some(airy_table(nodes, &rules.plus_nodes)),
                rules.minus_gap.map(|_| airy_table(nodes, &rules.minus_nodes)),
            ),
            ProcessKind::Airy1 => (None, None),
        };
        CutBasis {
            nodes: nodes.to_vec(),
            sqrt_weights: weights.iter().map(|w| w.sqrt()).collect(),
            plus,
            minus,
        }
    }

    fn basis_at(&self, kind: ProcessKind, s: T, truncation: T, rules: &LambdaRules<T>) -> CutBasis<T> {
        let (nodes, weights) = self.rule.mapped(s, truncation);
        self.basis(kind, &nodes, &weights, rules)
    }

    /// Kernel block `K(u_a, x_i; u_b, y_j)` between two cuts.
    fn block(&self, kind: ProcessKind, ua: T, a: &CutBasis<T>, ub: T, b: &CutBasis<T>, rules: &LambdaRules<T>) -> Vec<T> {
        let (rows, cols) = (a.nodes.len(), b.nodes.len());
        match kind {
            ProcessKind::Airy1 => {
                let mut out = Vec::with_capacity(rows * cols);
                for &x in &a.nodes {
                    out.extend(b.nodes.iter().map(|&y| k1(ua, x, ub, y)));
                }
                out
            }
            ProcessKind::Airy2 => {
                let d = ub - ua;
                let (pa, pb) = (a.plus.as_ref().expect("Airy table"), b.plus.as_ref().expect("Airy table"));
                if d <= T::zero() {
                    let c: Vec<T> = rules
                        .plus_nodes
                        .iter()
                        .zip(&rules.plus_weights)
                        .map(|(&l, &w)| w * (d * l).exp())
                        .collect();
                    weighted_product(pa, rows, pb, cols, &c)
                } else if d < T::lit(DIRECT_BRANCH_GAP) {
                    let c: Vec<T> = rules
                        .plus_nodes
                        .iter()
                        .zip(&rules.plus_weights)
                        .map(|(&l, &w)| w * (d * l).exp())
                        .collect();
                    let mut out = weighted_product(pa, rows, pb, cols, &c);
                    let shift = d * d * d / T::lit(12.0);
                    for (i, &x) in a.nodes.iter().enumerate() {
                        for (j, &y) in b.nodes.iter().enumerate() {
                            out[i * cols + j] -= heat(d, x - y) * (shift - d * (x + y) / T::lit(2.0)).exp();
                        }
                    }
                    out
                } else if rules.minus_gap == Some(d) {
                    let c: Vec<T> = rules
                        .minus_nodes
                        .iter()
                        .zip(&rules.minus_weights)
                        .map(|(&l, &w)| -w * (d * l).exp())
                        .collect();
                    let (ma, mb) = (a.minus.as_ref().expect("Airy table"), b.minus.as_ref().expect("Airy table"));
                    weighted_product(ma, rows, mb, cols, &c)
                } else {
                    let (ln, lw) = minus_rule(&self.lambda_unit, d);
                    let c: Vec<T> = ln.iter().zip(&lw).map(|(&l, &w)| -w * (d * l).exp()).collect();
                    let ta = airy_table(&a.nodes, &ln);
                    let tb = airy_table(&b.nodes, &ln);
                    weighted_product(&ta, rows, &tb, cols, &c)
                }
            }
        }
    }

    fn assemble_and_solve(
        &self,
        kind: ProcessKind,
        times: &[T],
        bases: &[&CutBasis<T>],
        rules: &LambdaRules<T>,
        cache: &mut BlockCache<'_, T>,
    ) -> Result<T> {
        let sizes: Vec<usize> = bases.iter().map(|b| b.nodes.len()).collect();
        let offsets: Vec<usize> = sizes.iter().scan(0, |acc, &n| {
            let o = *acc;
            *acc += n;
            Some(o)
        }).collect();
        let dim: usize = sizes.iter().sum();
        let mut m = vec![T::zero(); dim * dim];
        for a in 0..bases.len() {
            for b in 0..bases.len() {
                let owned;
                let block: &[T] = match cache.lookup(a, b) {
                    Some(cached) => cached,
                    None => {
                        owned = self.block(kind, times[a], bases[a], times[b], bases[b], rules);
                        &owned
                    }
                };
                let (ra, cb) = (sizes[a], sizes[b]);
                for i in 0..ra {
                    let wi = bases[a].sqrt_weights[i];
                    let row = (offsets[a] + i) * dim + offsets[b];
                    for j in 0..cb {
                        let v = block[i * cb + j] * wi * bases[b].sqrt_weights[j];
                        m[row + j] = -v;
                    }
                }
            }
        }
        for i in 0..dim {
            m[i * dim + i] += T::one();
        }
        if let Some(pos) = m.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!(
                "{} Nyström matrix entry ({}, {}) at times {:?}",
                kind.name(),
                pos / dim,
                pos % dim,
                times.iter().map(|t| t.to_f64_lossy()).collect::<Vec<_>>()
            )));
        }
        Ok(determinant_in_place(&mut m, dim))
    }

    /// GUE Tracy-Widom distribution `F₂(s)`, `s ∈ [-10, 6]`.
    pub fn f2(&self, s: T) -> Result<T> {
        check_tw_domain(s)?;
        self.determinant(ProcessKind::Airy2, &KernelCut::single(s))
    }

    /// GOE Tracy-Widom distribution `F₁(s)`, `s ∈ [-10, 6]`, as the Airy₁
    /// one-point determinant cut at `s/2`.
    pub fn f1(&self, s: T) -> Result<T> {
        check_tw_domain(s)?;
        self.determinant(ProcessKind::Airy1, &KernelCut::single(s / T::lit(2.0)))
    }

    /// One-point CDF of the process: `F₂(s)` for Airy₂, `F₁(2s)` for Airy₁.
    pub fn one_point(&self, kind: ProcessKind, s: T) -> Result<T> {
        self.determinant(kind, &KernelCut::single(s))
    }

    /// `P(A(u₁) ≤ s₁, A(u₂) ≤ s₂)`. Equal times reduce to the one-point CDF
    /// at `min(s₁, s₂)`; the order of the two points is irrelevant.
    pub fn joint_cdf(&self, kind: ProcessKind, first: (T, T), second: (T, T)) -> Result<T> {
        let (p, q) = if first.0 <= second.0 { (first, second) } else { (second, first) };
        if p.0 == q.0 {
            return self.one_point(kind, p.1.min(q.1));
        }
        self.determinant(kind, &KernelCut::new(vec![p, q])?)
    }

    /// Mean and variance of the process one-point law by integrating the CDF
    /// by parts over the process box.
    pub fn process_moments(&self, kind: ProcessKind) -> Result<(T, T)> {
        let (lo, hi) = self.process_box(kind);
        let unit = GaussLegendre::<T>::new(10);
        let (xs, ws) = panel_rule(&unit, lo, hi);
        let mut mean = T::zero();
        let mut second = T::zero();
        for (&s, &w) in xs.iter().zip(&ws) {
            let f = self.one_point(kind, s)?;
            if s >= T::zero() {
                mean += w * (T::one() - f);
                second += w * T::lit(2.0) * s * (T::one() - f);
            } else {
                mean -= w * f;
                second -= w * T::lit(2.0) * s * f;
            }
        }
        // the panels straddle 0 only at a panel boundary since the box ends
        // are integers
        Ok((mean, second - mean * mean))
    }

    /// Mean and variance of `F₂`.
    pub fn f2_moments(&self) -> Result<(T, T)> {
        self.process_moments(ProcessKind::Airy2)
    }

    /// Mean and variance of `F₁` (twice / four times those of the Airy₁
    /// one-point law `F₁(2s)`).
    pub fn f1_moments(&self) -> Result<(T, T)> {
        let (m, v) = self.process_moments(ProcessKind::Airy1)?;
        Ok((T::lit(2.0) * m, T::lit(4.0) * v))
    }

    /// `g(u) = Cov(A(u), A(0))` by Hoeffding's identity
    /// `∬ [F(s₁, s₂) - F(s₁)F(s₂)] ds₁ ds₂` over the square of the process box with a tensor
    /// Gauss-Legendre rule. At `u = 0` the integrand has a kink on the
    /// diagonal, so the one-point variance is returned instead.
    pub fn covariance(&self, kind: ProcessKind, u: T) -> Result<T> {
        if !(u >= T::zero()) || !u.is_finite() {
            return Err(Error::OutOfRange {
                what: "covariance lag u",
                value: u.to_f64_lossy(),
                lo: 0.0,
                hi: f64::INFINITY,
            });
        }
        if u == T::zero() {
            return self.process_moments(kind).map(|(_, v)| v);
        }
        let (lo, hi) = self.process_box(kind);
        let panel = (hi - lo) / T::from_usize_exact(self.covariance_panels);
        let unit = GaussLegendre::<T>::new(self.covariance_nodes_per_panel);
        let mut xs = Vec::new();
        let mut ws = Vec::new();
        for p in 0..self.covariance_panels {
            let a = lo + panel * T::from_usize_exact(p);
            let (x, w) = unit.mapped(a, a + panel);
            xs.extend(x);
            ws.extend(w);
        }

        let truncation = hi + self.margin;
        let rules = LambdaRules::new(&self.lambda_unit, lo, Some(u));
        let bases: Vec<CutBasis<T>> = xs.iter().map(|&s| self.basis_at(kind, s, truncation, &rules)).collect();
        // equal-time blocks depend on one cut only
        let diagonal: Vec<Vec<T>> = bases.iter().map(|b| self.block(kind, T::zero(), b, T::zero(), b, &rules)).collect();
        let times = [T::zero(), u];
        let marginals: Vec<T> = (0..xs.len())
            .map(|k| self.assemble_and_solve(kind, &times[..1], &[&bases[k]], &rules, &mut BlockCache::single(&diagonal[k])))
            .collect::<Result<_>>()?;

        let mut total = T::zero();
        for (i, bi) in bases.iter().enumerate() {
            for (j, bj) in bases.iter().enumerate() {
                let mut cache = BlockCache::pair(&diagonal[i], &diagonal[j]);
                let joint = self.assemble_and_solve(kind, &times, &[bi, bj], &rules, &mut cache)?;
                total += ws[i] * ws[j] * (joint - marginals[i] * marginals[j]);
            }
        }
        Ok(total)
    }
}

/// Precomputed equal-time blocks keyed by cut index.
struct BlockCache<'a, T> {
    diagonal: [Option<&'a [T]>; 2],
}

impl<'a, T> BlockCache<'a, T> {
    fn none() -> Self {
        Self { diagonal: [None, None] }
    }

    fn single(d: &'a [T]) -> Self {
        Self { diagonal: [Some(d), None] }
    }

    fn pair(d0: &'a [T], d1: &'a [T]) -> Self {
        Self { diagonal: [Some(d0), Some(d1)] }
    }

    fn lookup(&self, a: usize, b: usize) -> Option<&'a [T]> {
        if a == b && a < 2 {
            self.diagonal[a]
        } else {
            None
        }
    }
}

fn check_tw_domain<T: Real>(s: T) -> Result<()> {
    let x = s.to_f64_lossy();
    if !(TW_DOMAIN.0..=TW_DOMAIN.1).contains(&x) {
        return Err(Error::OutOfRange {
            what: "Tracy-Widom argument",
            value: x,
            lo: TW_DOMAIN.0,
            hi: TW_DOMAIN.1,
        });
    }
    Ok(())
}

/// `det(I - χ_s K χ_s)` on an explicit grid.
pub fn fredholm_det<T: Real>(kind: ProcessKind, cuts: &KernelCut<T>, grid: &QuadratureGrid<T>) -> Result<T> {
    if grid.nodes.len() != cuts.len() {
        return Err(Error::GridInadequate(format!(
            "grid has {} cuts, kernel cut has {}",
            grid.nodes.len(),
            cuts.len()
        )));
    }
    let n = grid.n;
    if n < MIN_NODES {
        return Err(Error::GridInadequate(format!("{n} nodes per cut, need at least {MIN_NODES}")));
    }
    if !(grid.truncation >= cuts.s_max() + T::lit(MIN_MARGIN)) {
        return Err(Error::GridInadequate("truncation too close to s_max".into()));
    }
    let solver = FredholmSolver::<T>::new(n, grid.truncation - cuts.s_max())?;
    solver.determinant_on(kind, cuts, grid)
}

/// Determinant of `I - [√w_i k(x_i, x_j) √w_j]` for an arbitrary scalar
/// kernel on one interval, for checks against closed forms.
pub fn scalar_kernel_det<T: Real, K: Fn(T, T) -> T>(kernel: K, nodes: &[T], weights: &[T]) -> T {
    let n = nodes.len();
    let sw: Vec<T> = weights.iter().map(|w| w.sqrt()).collect();
    let mut m = vec![T::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let delta = if i == j { T::one() } else { T::zero() };
            m[i * n + j] = delta - sw[i] * kernel(nodes[i], nodes[j]) * sw[j];
        }
    }
    determinant_in_place(&mut m, n)
}
