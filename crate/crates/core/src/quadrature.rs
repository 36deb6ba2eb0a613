//! Gauss-Legendre rules, fixed and adaptive.

use crate::scalar::Real;

/// An `n`-point Gauss-Legendre rule on the reference interval `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> GaussLegendre<T> {
    /// Builds the rule by Newton iteration on `P_n` from the Chebyshev-like
    /// initial guesses. Nodes and weights are computed in `f64` and rounded.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![T::zero(); n];
        let mut weights = vec![T::zero(); n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // ascending order
            nodes[i] = T::lit(-x);
            nodes[n - 1 - i] = T::lit(x);
            weights[i] = T::lit(w);
            weights[n - 1 - i] = T::lit(w);
        }
        if n % 2 == 1 {
            nodes[n / 2] = T::zero();
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// Nodes and weights affinely mapped to `[a, b]`.
    pub fn mapped(&self, a: T, b: T) -> (Vec<T>, Vec<T>) {
        let half = (b - a) / T::lit(2.0);
        let mid = (a + b) / T::lit(2.0);
        let nodes = self.nodes.iter().map(|&x| mid + half * x).collect();
        let weights = self.weights.iter().map(|&w| half * w).collect();
        (nodes, weights)
    }

    pub fn integrate<F: FnMut(T) -> T>(&self, a: T, b: T, mut f: F) -> T {
        let half = (b - a) / T::lit(2.0);
        let mid = (a + b) / T::lit(2.0);
        let mut sum = T::zero();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        sum * half
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Adaptive integration by recursive bisection, comparing the rule on an
/// interval with the sum over its two halves. Stops a branch once the two
/// agree to `tol` (absolute, scaled by the branch's share of the interval)
/// or `max_depth` is reached.
pub fn adaptive<T, F>(rule: &GaussLegendre<T>, a: T, b: T, tol: T, max_depth: u32, f: &mut F) -> T
where
    T: Real,
    F: FnMut(T) -> T,
{
    let whole = rule.integrate(a, b, &mut *f);
    adaptive_step(rule, a, b, whole, tol, max_depth, f)
}

fn adaptive_step<T, F>(rule: &GaussLegendre<T>, a: T, b: T, whole: T, tol: T, depth: u32, f: &mut F) -> T
where
    T: Real,
    F: FnMut(T) -> T,
{
    let mid = (a + b) / T::lit(2.0);
    let left = rule.integrate(a, mid, &mut *f);
    let right = rule.integrate(mid, b, &mut *f);
    let refined = left + right;
    if depth == 0 || (refined - whole).abs() <= tol {
        return refined;
    }
    let half_tol = tol / T::lit(2.0);
    adaptive_step(rule, a, mid, left, half_tol, depth - 1, f)
        + adaptive_step(rule, mid, b, right, half_tol, depth - 1, f)
}
