//! Dense determinants, Householder tridiagonalization of symmetric and
//! Hermitian matrices, and Sturm-sequence bisection for the largest
//! eigenvalue of a symmetric tridiagonal matrix.

use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::{Float, One, Zero};

use crate::scalar::Real;

/// Determinant of a dense row-major `n x n` matrix by LU factorization with
/// partial pivoting. The matrix is overwritten by its factors.
pub fn determinant_in_place<T: Real>(a: &mut [T], n: usize) -> T {
    assert_eq!(a.len(), n * n, "matrix storage does not match dimension");
    let mut det = T::one();
    for k in 0..n {
        let mut pivot = k;
        let mut best = a[k * n + k].abs();
        for i in k + 1..n {
            let v = a[i * n + k].abs();
            if v > best {
                best = v;
                pivot = i;
            }
        }
        if best == T::zero() {
            return T::zero();
        }
        if pivot != k {
            for j in 0..n {
                a.swap(k * n + j, pivot * n + j);
            }
            det = -det;
        }
        let akk = a[k * n + k];
        det *= akk;
        let (top, bottom) = a.split_at_mut((k + 1) * n);
        let row_k = &top[k * n..k * n + n];
        for row in bottom.chunks_exact_mut(n) {
            let factor = row[k] / akk;
            if factor == T::zero() {
                continue;
            }
            row[k] = factor;
            for (x, &r) in row[k + 1..].iter_mut().zip(&row_k[k + 1..]) {
                *x -= factor * r;
            }
        }
    }
    det
}

/// Entries of a self-adjoint matrix: real scalars or complex numbers over
/// them.
pub trait HermitianEntry:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + Send
    + Sync
{
    type Real: Real;
    fn zero_entry() -> Self;
    fn from_real(r: Self::Real) -> Self;
    fn conj(self) -> Self;
    fn re(self) -> Self::Real;
    fn abs_sqr(self) -> Self::Real;
    fn scale(self, r: Self::Real) -> Self;
    fn is_finite(self) -> bool;
}

impl<T: Real> HermitianEntry for T {
    type Real = T;
    fn zero_entry() -> Self {
        <T as Zero>::zero()
    }
    fn from_real(r: T) -> Self {
        r
    }
    fn conj(self) -> Self {
        self
    }
    fn re(self) -> T {
        self
    }
    fn abs_sqr(self) -> T {
        self * self
    }
    fn scale(self, r: T) -> Self {
        self * r
    }
    fn is_finite(self) -> bool {
        Float::is_finite(self)
    }
}

impl<T: Real> HermitianEntry for Complex<T> {
    type Real = T;
    fn zero_entry() -> Self {
        Complex::new(T::zero(), T::zero())
    }
    fn from_real(r: T) -> Self {
        Complex::new(r, T::zero())
    }
    fn conj(self) -> Self {
        Complex::conj(&self)
    }
    fn re(self) -> T {
        self.re
    }
    fn abs_sqr(self) -> T {
        self.norm_sqr()
    }
    fn scale(self, r: T) -> Self {
        Complex::new(self.re * r, self.im * r)
    }
    fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Real symmetric tridiagonal matrix: `diag` of length `n`, `off` of length
/// `n - 1` (sub- and superdiagonal coincide).
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal<T> {
    pub diag: Vec<T>,
    pub off: Vec<T>,
}

impl<T: Real> SymTridiagonal<T> {
    pub fn new(diag: Vec<T>, off: Vec<T>) -> Self {
        assert!(!diag.is_empty());
        assert_eq!(off.len() + 1, diag.len());
        Self { diag, off }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `lambda`, from the signs of the
    /// LDLᵀ pivots of `T - lambda I`.
    pub fn count_below(&self, lambda: T) -> usize {
        let tiny = T::min_positive_value().sqrt();
        let mut count = 0;
        let mut q = self.diag[0] - lambda;
        if q < T::zero() {
            count += 1;
        }
        for (&d, &e) in self.diag[1..].iter().zip(&self.off) {
            let guarded = if q.abs() < tiny { tiny.copysign(q) } else { q };
            q = (d - lambda) - e * e / guarded;
            if q < T::zero() {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin enclosure `[lo, hi]` of the spectrum.
    pub fn gershgorin(&self) -> (T, T) {
        let n = self.dim();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { T::zero() };
            let right = if i + 1 < n { self.off[i].abs() } else { T::zero() };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Largest eigenvalue by bisection on the Sturm count, to within a few
    /// ulps of the Gershgorin scale.
    pub fn largest_eigenvalue(&self) -> T {
        let n = self.dim();
        let (glo, ghi) = self.gershgorin();
        // the largest diagonal entry is a Rayleigh quotient, hence a lower bound
        let mut lo = self.diag.iter().copied().fold(glo, T::max);
        let mut hi = ghi;
        let scale = glo.abs().max(ghi.abs()).max(T::min_positive_value());
        let tol = T::lit(4.0) * T::epsilon() * scale;
        while hi - lo > tol {
            let mid = lo + (hi - lo) / T::lit(2.0);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) == n {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        lo + (hi - lo) / T::lit(2.0)
    }
}

/// Reduces a self-adjoint matrix to real symmetric tridiagonal form with the
/// same eigenvalues.
///
/// `a` is dense row-major `n x n`; only the lower triangle (`j <= i`) is read
/// and it is destroyed. Each Householder reflector maps the column below the
/// diagonal onto a multiple of the first unit vector whose modulus is the
/// column norm, so the moduli of the resulting (possibly complex)
/// subdiagonal are the column norms and a diagonal unitary similarity makes
/// them real.
pub fn tridiagonalize<S: HermitianEntry>(a: &mut [S], n: usize) -> SymTridiagonal<S::Real> {
    assert_eq!(a.len(), n * n, "matrix storage does not match dimension");
    let zero = <S::Real as Zero>::zero();
    let mut off = vec![zero; n.saturating_sub(1)];
    let mut v = vec![S::zero_entry(); n];
    let mut p = vec![S::zero_entry(); n];

    for k in 0..n.saturating_sub(1) {
        let m = n - k - 1;
        let base = k + 1;
        // v = column k below the diagonal
        let mut tail = zero;
        for i in 0..m {
            v[i] = a[(base + i) * n + k];
            if i > 0 {
                tail += v[i].abs_sqr();
            }
        }
        let alpha = v[0];
        let alpha_abs = alpha.abs_sqr().sqrt();
        let norm = (alpha.abs_sqr() + tail).sqrt();
        off[k] = norm;
        if tail == zero {
            // already reduced in this column; any phase of alpha is removed
            // by the final diagonal similarity
            continue;
        }
        // beta = -(alpha / |alpha|) * norm; v = x - beta e1
        let phase = if alpha_abs > zero {
            alpha.scale(<S::Real as One>::one() / alpha_abs)
        } else {
            S::from_real(<S::Real as One>::one())
        };
        v[0] = alpha + phase.scale(norm);
        let vnorm_sqr = S::Real::lit(2.0) * norm * (norm + alpha_abs);
        let tau = S::Real::lit(2.0) / vnorm_sqr;

        // p = tau * A22 v using the lower triangle of A22
        for x in p[..m].iter_mut() {
            *x = S::zero_entry();
        }
        for i in 0..m {
            let row = &a[(base + i) * n + base..(base + i) * n + base + i + 1];
            let vi = v[i];
            let mut acc = S::zero_entry();
            for j in 0..i {
                acc += row[j] * v[j];
                p[j] += row[j].conj() * vi;
            }
            acc += S::from_real(row[i].re()) * vi;
            p[i] += acc;
        }
        let mut vhp = S::zero_entry();
        for i in 0..m {
            p[i] = p[i].scale(tau);
            vhp += v[i].conj() * p[i];
        }
        // w = p - (tau/2)(v^H p) v
        let kfac = vhp.re() * tau / S::Real::lit(2.0);
        for i in 0..m {
            p[i] -= v[i].scale(kfac);
        }
        // A22 -= v w^H + w v^H (lower triangle)
        for i in 0..m {
            let vi = v[i];
            let wi = p[i];
            let row = &mut a[(base + i) * n + base..(base + i) * n + base + i + 1];
            for j in 0..=i {
                row[j] -= vi * p[j].conj() + wi * v[j].conj();
            }
        }
    }

    let diag = (0..n).map(|i| a[i * n + i].re()).collect();
    SymTridiagonal { diag, off }
}
