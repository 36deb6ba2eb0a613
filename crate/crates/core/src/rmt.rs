//! Gaussian unitary and orthogonal ensembles and their Dyson Brownian motion.
//!
//! GUE has density `∝ exp(-Tr H²/(2N))`: diagonal entries of variance `N`,
//! off-diagonal real and imaginary parts of variance `N/2` each. GOE has
//! density `∝ exp(-Tr H²/(4N))`: diagonal variance `2N`, off-diagonal
//! variance `N`. In both cases the largest eigenvalue is `2N + O(N^{1/3})`.
//!
//! The stationary matrix Ornstein-Uhlenbeck processes
//! `dH = -γH dt + dB` with `γ = 1/(2N)` (GUE) or `1/(4N)` (GOE) are advanced
//! by their exact Gaussian transition, entry by entry.

use num_complex::Complex;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::tridiagonalize;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnsembleKind {
    Gue,
    Goe,
}

impl EnsembleKind {
    pub fn name(self) -> &'static str {
        match self {
            EnsembleKind::Gue => "gue",
            EnsembleKind::Goe => "goe",
        }
    }

    /// OU relaxation rate `γ`.
    pub fn relaxation_rate<T: Real>(self, n: usize) -> T {
        let nf = T::from_usize_exact(n);
        match self {
            EnsembleKind::Gue => T::one() / (T::lit(2.0) * nf),
            EnsembleKind::Goe => T::one() / (T::lit(4.0) * nf),
        }
    }

    /// Stationary variances `(diagonal, off-diagonal component)`.
    pub fn entry_variances<T: Real>(self, n: usize) -> (T, T) {
        let nf = T::from_usize_exact(n);
        match self {
            EnsembleKind::Gue => (nf, nf / T::lit(2.0)),
            EnsembleKind::Goe => (T::lit(2.0) * nf, nf),
        }
    }

    /// Physical time of the rescaled time `u` in the dynamical limit.
    pub fn dbm_time<T: Real>(self, n: usize, u: T) -> T {
        let factor = match self {
            EnsembleKind::Gue => T::lit(2.0),
            EnsembleKind::Goe => T::lit(8.0),
        };
        factor * u * T::from_usize_exact(n).cbrt().powi(2)
    }

    /// `(λ - 2N)/N^{1/3}` for GUE, `(λ - 2N)/(2N^{1/3})` for GOE.
    pub fn dbm_rescale<T: Real>(self, lambda: T, n: usize) -> T {
        let s = static_rescale(lambda, n);
        match self {
            EnsembleKind::Gue => s,
            EnsembleKind::Goe => s / T::lit(2.0),
        }
    }
}

/// `(λ - 2N)/N^{1/3}`.
pub fn static_rescale<T: Real>(lambda: T, n: usize) -> T {
    let nf = T::from_usize_exact(n);
    (lambda - T::lit(2.0) * nf) / nf.cbrt()
}

/// A GUE or GOE matrix, stored as its lower triangle (row-major packed,
/// `(i, j)` with `j <= i` at `i(i+1)/2 + j`) so that it is self-adjoint by
/// construction. `im` is empty for GOE; diagonal imaginary parts are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixState<T> {
    kind: EnsembleKind,
    n: usize,
    re: Vec<T>,
    im: Vec<T>,
    time: T,
}

fn packed(i: usize, j: usize) -> usize {
    i * (i + 1) / 2 + j
}

impl<T: Real> MatrixState<T>
where
    StandardNormal: Distribution<T>,
{
    /// A draw from the stationary law at time 0.
    pub fn sample_stationary<R: Rng + ?Sized>(kind: EnsembleKind, n: usize, rng: &mut R) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut state = Self {
            kind,
            n,
            re: vec![T::zero(); n * (n + 1) / 2],
            im: match kind {
                EnsembleKind::Gue => vec![T::zero(); n * (n + 1) / 2],
                EnsembleKind::Goe => Vec::new(),
            },
            time: T::zero(),
        };
        let (dv, ov) = kind.entry_variances::<T>(n);
        state.refresh(T::zero(), dv.sqrt(), ov.sqrt(), rng);
        Ok(state)
    }

    /// Exact OU transition over `dt`: every independent component becomes
    /// `e^{-γdt} x + N(0, σ²(1 - e^{-2γdt})/(2γ))`, with `σ² = 1` on the
    /// diagonal and `1/2` per off-diagonal component.
    pub fn ou_step<R: Rng + ?Sized>(&mut self, dt: T, rng: &mut R) -> Result<()> {
        if !(dt >= T::zero()) {
            return Err(Error::NegativeTimeStep(dt.to_f64_lossy()));
        }
        if dt == T::zero() {
            return Ok(());
        }
        let gamma: T = self.kind.relaxation_rate(self.n);
        let decay = (-gamma * dt).exp();
        let fresh = -(-T::lit(2.0) * gamma * dt).exp_m1() / (T::lit(2.0) * gamma);
        let diag_sd = fresh.sqrt();
        let off_sd = (fresh / T::lit(2.0)).sqrt();
        self.refresh(decay, diag_sd, off_sd, rng);
        self.time += dt;
        Ok(())
    }

    fn refresh<R: Rng + ?Sized>(&mut self, decay: T, diag_sd: T, off_sd: T, rng: &mut R) {
        let mut normal = || -> T { rng.sample(StandardNormal) };
        for i in 0..self.n {
            for j in 0..=i {
                let k = packed(i, j);
                if i == j {
                    self.re[k] = decay * self.re[k] + diag_sd * normal();
                } else {
                    self.re[k] = decay * self.re[k] + off_sd * normal();
                    if let Some(x) = self.im.get_mut(k) {
                        *x = decay * *x + off_sd * normal();
                    }
                }
            }
        }
    }
}

impl<T: Real> MatrixState<T> {
    pub fn kind(&self) -> EnsembleKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn time(&self) -> T {
        self.time
    }

    /// Entry `(i, j)` as `(re, im)`.
    pub fn entry(&self, i: usize, j: usize) -> (T, T) {
        let (a, b, sign) = if j <= i { (i, j, T::one()) } else { (j, i, -T::one()) };
        let k = packed(a, b);
        let im = self.im.get(k).map_or(T::zero(), |&x| if a == b { T::zero() } else { sign * x });
        (self.re[k], im)
    }

    /// Builds a state from a real symmetric matrix given by its lower
    /// triangle in packed order.
    pub fn from_symmetric(n: usize, lower: Vec<T>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        assert_eq!(lower.len(), n * (n + 1) / 2, "packed storage does not match dimension");
        Ok(Self { kind: EnsembleKind::Goe, n, re: lower, im: Vec::new(), time: T::zero() })
    }

    /// Largest eigenvalue: Householder reduction to a real symmetric
    /// tridiagonal matrix, then Sturm bisection.
    pub fn lambda_max(&self) -> Result<T> {
        if self.re.iter().chain(&self.im).any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("matrix entry".into()));
        }
        let n = self.n;
        let tri = if self.im.is_empty() {
            let mut a = vec![T::zero(); n * n];
            for i in 0..n {
                for j in 0..=i {
                    a[i * n + j] = self.re[packed(i, j)];
                }
            }
            tridiagonalize(&mut a, n)
        } else {
            let mut a = vec![Complex::new(T::zero(), T::zero()); n * n];
            for i in 0..n {
                for j in 0..=i {
                    let k = packed(i, j);
                    a[i * n + j] = Complex::new(self.re[k], if i == j { T::zero() } else { self.im[k] });
                }
            }
            tridiagonalize(&mut a, n)
        };
        Ok(tri.largest_eigenvalue())
    }
}

/// Rescaled largest eigenvalue of a stationary DBM at the rescaled times
/// `u_grid` (nonnegative, nondecreasing), starting from a fresh stationary
/// sample at physical time `dbm_time(u_grid[0])`.
pub fn dbm_path<T: Real, R: Rng + ?Sized>(kind: EnsembleKind, n: usize, u_grid: &[T], rng: &mut R) -> Result<Vec<T>>
where
    StandardNormal: Distribution<T>,
{
    if u_grid.is_empty() || u_grid.iter().any(|u| !(*u >= T::zero())) || u_grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidGrid("u grid must be nonempty, nonnegative and nondecreasing".into()));
    }
    let mut state = MatrixState::sample_stationary(kind, n, rng)?;
    let mut now = kind.dbm_time(n, u_grid[0]);
    let mut path = Vec::with_capacity(u_grid.len());
    for &u in u_grid {
        let t = kind.dbm_time(n, u);
        state.ou_step(t - now, rng)?;
        now = t;
        path.push(kind.dbm_rescale(state.lambda_max()?, n));
    }
    Ok(path)
}
