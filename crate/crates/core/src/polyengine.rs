//! Classical orthogonal polynomials with arbitrary real parameters.
//!
//! Associated Laguerre `L_n^α(x)` and Jacobi `P_N^{(ν,μ)}(y)` are evaluated
//! by their three-term recurrences in the degree. Derivatives of any order
//! reduce to the same families with shifted parameters, so jets of seeds are
//! exact. Real roots are located by a dense sign scan refined by bisection.

use crate::error::{Error, Result};
use crate::jet::{Jet, JET_LEN};

/// Generalized binomial coefficient C(z, k) for real `z`.
pub fn binomial(z: f64, k: usize) -> f64 {
    let mut c = 1.0;
    for i in 0..k {
        c *= (z - i as f64) / (i + 1) as f64;
    }
    c
}

/// `L_n^α` for real `α` (no restriction to α > -1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LaguerreSpec {
    pub n: usize,
    pub alpha: f64,
}

impl LaguerreSpec {
    pub fn new(n: usize, alpha: f64) -> Self {
        Self { n, alpha }
    }

    pub fn eval(&self, x: f64) -> f64 {
        laguerre_eval(*self, x)
    }

    pub fn deriv(&self, x: f64) -> f64 {
        laguerre_deriv(*self, x)
    }

    /// k-th derivative: (-1)^k L_{n-k}^{α+k}(x).
    pub fn deriv_k(&self, k: usize, x: f64) -> f64 {
        if k > self.n {
            return 0.0;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sign * laguerre_eval(LaguerreSpec::new(self.n - k, self.alpha + k as f64), x)
    }

    /// Jet of `L_n^α(t(x))` given the jet of the argument.
    pub fn compose(&self, t: Jet) -> Jet {
        let x = t.value();
        let mut h = [0.0; JET_LEN];
        for (k, slot) in h.iter_mut().enumerate() {
            *slot = self.deriv_k(k, x);
        }
        t.compose(h)
    }

    /// Monomial coefficients c_0..c_n with L = Σ c_k x^k.
    pub fn monomial(&self) -> MonomialPoly {
        let n = self.n;
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut fact = 1.0;
        for k in 0..=n {
            if k > 0 {
                fact *= k as f64;
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            coeffs.push(sign * binomial(n as f64 + self.alpha, n - k) / fact);
        }
        MonomialPoly::new(coeffs)
    }
}

/// Three-term recurrence `(k+1) L_{k+1} = (2k+1+α-x) L_k - (k+α) L_{k-1}`.
///
/// For α = −j with 1 ≤ j ≤ n the polynomial has a j-fold zero at the
/// origin; `L_n^{-j}(x) = (-x)^j (n-j)!/n! L_{n-j}^{j}(x)` keeps it exact.
pub fn laguerre_eval(spec: LaguerreSpec, x: f64) -> f64 {
    let a = spec.alpha;
    if spec.n == 0 {
        return 1.0;
    }
    if a <= -0.5 && a >= -(spec.n as f64) - 0.5 && (a - a.round()).abs() < 1e-9 {
        let j = (-a.round()) as usize;
        let ratio: f64 = ((spec.n - j + 1)..=spec.n).map(|i| 1.0 / i as f64).product();
        return (-x).powi(j as i32) * ratio * laguerre_eval(LaguerreSpec::new(spec.n - j, j as f64), x);
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + a - x;
    for k in 1..spec.n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - x) * cur - (kf + a) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `d/dx L_n^α(x) = -L_{n-1}^{α+1}(x)`.
pub fn laguerre_deriv(spec: LaguerreSpec, x: f64) -> f64 {
    if spec.n == 0 {
        0.0
    } else {
        -laguerre_eval(LaguerreSpec::new(spec.n - 1, spec.alpha + 1.0), x)
    }
}

/// `P_N^{(ν,μ)}` for real ν, μ; weight (1-y)^ν (1+y)^μ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiSpec {
    pub n: usize,
    pub nu: f64,
    pub mu: f64,
}

impl JacobiSpec {
    pub fn new(n: usize, nu: f64, mu: f64) -> Self {
        Self { n, nu, mu }
    }

    pub fn eval(&self, y: f64) -> f64 {
        jacobi_eval(*self, y)
    }

    pub fn deriv(&self, y: f64) -> f64 {
        jacobi_deriv(*self, y)
    }

    /// True when some recurrence denominator vanishes for 2 ≤ k ≤ N, or when
    /// ν or μ is an integer in [−N, −1] so the polynomial has a multiple zero
    /// at y = ±1 that the recurrence would resolve only to absolute accuracy.
    /// The explicit sum is used instead.
    pub fn needs_series(&self) -> bool {
        let s = self.nu + self.mu;
        let endpoint_zero = |p: f64| p <= -0.5 && p >= -(self.n as f64) - 0.5 && (p - p.round()).abs() < 1e-9;
        endpoint_zero(self.nu)
            || endpoint_zero(self.mu)
            || (2..=self.n).any(|k| {
                let k = k as f64;
                (k + s).abs() < 1e-9 || (2.0 * k + s - 2.0).abs() < 1e-9
            })
    }

    /// k-th derivative: Π_{j=1..k} (N+ν+μ+j)/2 · P_{N-k}^{(ν+k, μ+k)}(y).
    pub fn deriv_k(&self, k: usize, y: f64) -> f64 {
        if k > self.n {
            return 0.0;
        }
        let base = self.n as f64 + self.nu + self.mu;
        let factor: f64 = (1..=k).map(|j| (base + j as f64) / 2.0).product();
        let kf = k as f64;
        factor * jacobi_eval(JacobiSpec::new(self.n - k, self.nu + kf, self.mu + kf), y)
    }

    pub fn compose(&self, t: Jet) -> Jet {
        let y = t.value();
        let mut h = [0.0; JET_LEN];
        for (k, slot) in h.iter_mut().enumerate() {
            *slot = self.deriv_k(k, y);
        }
        t.compose(h)
    }
}

/// Jacobi recurrence (DLMF 18.9.2) with the explicit binomial sum as fallback
/// when a recurrence denominator `2k(k+ν+μ)(2k+ν+μ-2)` vanishes.
pub fn jacobi_eval(spec: JacobiSpec, y: f64) -> f64 {
    let (nu, mu) = (spec.nu, spec.mu);
    if spec.n == 0 {
        return 1.0;
    }
    let p1 = (nu + 1.0) + (nu + mu + 2.0) * (y - 1.0) / 2.0;
    if spec.n == 1 {
        return p1;
    }
    if spec.needs_series() {
        return jacobi_series(spec, y);
    }
    let s = nu + mu;
    let mut prev = 1.0;
    let mut cur = p1;
    for k in 2..=spec.n {
        let k = k as f64;
        let c = 2.0 * k + s;
        let a1 = 2.0 * k * (k + s) * (c - 2.0);
        let a2 = (c - 1.0) * (nu * nu - mu * mu);
        let a3 = (c - 2.0) * (c - 1.0) * c;
        let a4 = 2.0 * (k + nu - 1.0) * (k + mu - 1.0) * c;
        let next = ((a2 + a3 * y) * cur - a4 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}

/// Σ_s C(N+ν, N-s) C(N+μ, s) ((y-1)/2)^s ((y+1)/2)^{N-s}; valid for all real ν, μ.
fn jacobi_series(spec: JacobiSpec, y: f64) -> f64 {
    let n = spec.n;
    let nf = n as f64;
    let (m, p) = ((y - 1.0) / 2.0, (y + 1.0) / 2.0);
    (0..=n)
        .map(|s| {
            binomial(nf + spec.nu, n - s)
                * binomial(nf + spec.mu, s)
                * m.powi(s as i32)
                * p.powi((n - s) as i32)
        })
        .sum()
}

pub fn jacobi_deriv(spec: JacobiSpec, y: f64) -> f64 {
    spec.deriv_k(1, y)
}

/// Dense monomial representation; used for root bounds and for building
/// composite polynomials such as the exceptional ones in the variable y.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialPoly {
    pub coeffs: Vec<f64>,
}

impl MonomialPoly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| *c != 0.0)
            .unwrap_or(0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    /// p(-x) or, more generally, p(s x).
    pub fn scale_argument(&self, s: f64) -> Self {
        let mut f = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c * f;
                f *= s;
                v
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::new(vec![0.0]);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| k as f64 * c)
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add_scaled(&self, other: &Self, s: f64) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &Vec<f64>, i: usize| v.get(i).copied().unwrap_or(0.0);
        Self::new(
            (0..n)
                .map(|i| get(&self.coeffs, i) + s * get(&other.coeffs, i))
                .collect(),
        )
    }

    /// Fujiwara bound on the modulus of every root.
    pub fn root_bound(&self) -> f64 {
        let d = self.degree();
        if d == 0 {
            return 0.0;
        }
        let lead = self.coeffs[d];
        (1..=d)
            .map(|k| {
                let c = (self.coeffs[d - k] / lead).abs();
                let c = if k == d { c / 2.0 } else { c };
                c.powf(1.0 / k as f64)
            })
            .fold(0.0, f64::max)
            * 2.0
    }
}

/// Polynomials accepted by [`real_zeros`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Polynomial {
    Laguerre(LaguerreSpec),
    Jacobi(JacobiSpec),
}

impl Polynomial {
    pub fn degree(&self) -> usize {
        match self {
            Polynomial::Laguerre(s) => s.n,
            Polynomial::Jacobi(s) => s.n,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Polynomial::Laguerre(s) => s.eval(x),
            Polynomial::Jacobi(s) => s.eval(x),
        }
    }

    pub fn deriv(&self, x: f64) -> f64 {
        match self {
            Polynomial::Laguerre(s) => s.deriv(x),
            Polynomial::Jacobi(s) => s.deriv(x),
        }
    }
}

/// Sorted real roots in an open interval.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ZeroReport {
    pub zeros: Vec<f64>,
    /// Set when the root sat on (or within 1e-13 of) a scan sample, or was
    /// found through a derivative sign change without a bracketing sign change.
    pub multiplicity_flags: Vec<bool>,
}

impl ZeroReport {
    pub fn count(&self) -> usize {
        self.zeros.len()
    }

    pub fn any_flagged(&self) -> bool {
        self.multiplicity_flags.iter().any(|f| *f)
    }
}

/// Absolute bisection tolerance on roots.
pub const ROOT_TOL: f64 = 1e-12;
const SAMPLE_PROXIMITY: f64 = 1e-13;

/// All real roots of a Laguerre or Jacobi polynomial in `(lo, hi)`.
pub fn real_zeros(poly: &Polynomial, lo: f64, hi: f64) -> Result<ZeroReport> {
    let p = *poly;
    scan_zeros(
        move |x| p.eval(x),
        Some(&move |x| p.deriv(x)),
        lo,
        hi,
        default_samples(poly.degree()),
    )
}

/// Scan density used by default: at least 64 samples per degree+1.
pub fn default_samples(degree: usize) -> usize {
    (64 * (degree + 1)).max(1024)
}

/// Sign scan with bisection refinement for an arbitrary continuous function.
///
/// When `deriv` is given, interior extrema with a derivative sign change and
/// a near-vanishing value are reported as flagged (even-multiplicity) roots.
pub fn scan_zeros(
    f: impl Fn(f64) -> f64,
    deriv: Option<&dyn Fn(f64) -> f64>,
    lo: f64,
    hi: f64,
    samples: usize,
) -> Result<ZeroReport> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Config(format!("invalid interval ({lo}, {hi})")));
    }
    let samples = samples.max(2);
    let step = (hi - lo) / samples as f64;
    let xs: Vec<f64> = (0..=samples).map(|i| lo + step * i as f64).collect();
    let fs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    // Local magnitude over a few neighbouring samples; a global maximum would
    // let shallow extrema far from the peak pass as double roots.
    let local_scale = |i: usize| {
        let a = i.saturating_sub(16);
        let b = (i + 17).min(samples);
        fs[a..=b].iter().fold(0.0f64, |m, v| m.max(v.abs())).max(f64::MIN_POSITIVE)
    };

    let mut found: Vec<(f64, bool)> = Vec::new();
    for i in 0..samples {
        let (x0, x1) = (xs[i], xs[i + 1]);
        let (f0, f1) = (fs[i], fs[i + 1]);
        if f0 == 0.0 {
            if i > 0 {
                found.push((x0, true));
            }
            continue;
        }
        if f0 * f1 < 0.0 {
            let root = bisect(&f, x0, x1, f0);
            let flag = (root - x0).abs() < SAMPLE_PROXIMITY || (x1 - root).abs() < SAMPLE_PROXIMITY;
            found.push((root, flag));
        } else if let Some(df) = deriv {
            if f1 != 0.0 {
                let (d0, d1) = (df(x0), df(x1));
                if d0 * d1 < 0.0 {
                    let xm = bisect(df, x0, x1, d0);
                    if f(xm).abs() <= 1e-12 * local_scale(i) {
                        found.push((xm, true));
                    }
                }
            }
        }
    }
    found.sort_by(|a, b| a.0.total_cmp(&b.0));
    found.dedup_by(|a, b| (a.0 - b.0).abs() < ROOT_TOL);
    Ok(ZeroReport {
        zeros: found.iter().map(|z| z.0).collect(),
        multiplicity_flags: found.iter().map(|z| z.1).collect(),
    })
}

fn bisect(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if b - a <= ROOT_TOL || m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Σ_k C(n+α, n-k) (-x)^k / k!
    fn laguerre_series(n: usize, alpha: f64, x: f64) -> f64 {
        let mut fact = 1.0;
        let mut sum = 0.0;
        for k in 0..=n {
            if k > 0 {
                fact *= k as f64;
            }
            sum += binomial(n as f64 + alpha, n - k) * (-x).powi(k as i32) / fact;
        }
        sum
    }

    /// (ν+1)_N / N! · 2F1(-N, N+ν+μ+1; ν+1; (1-y)/2), an independent route.
    fn jacobi_hypergeometric(n: usize, nu: f64, mu: f64, y: f64) -> f64 {
        if y < 0.0 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            return sign * jacobi_hypergeometric(n, mu, nu, -y);
        }
        let z = (1.0 - y) / 2.0;
        let mut pref = 1.0;
        for j in 0..n {
            pref *= (nu + 1.0 + j as f64) / (j + 1) as f64;
        }
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 0..n {
            let kf = k as f64;
            term *= (-(n as f64) + kf) * (n as f64 + nu + mu + 1.0 + kf) / ((nu + 1.0 + kf) * (kf + 1.0)) * z;
            sum += term;
        }
        pref * sum
    }

    #[test]
    fn laguerre_low_degrees() {
        for &(a, x) in &[(0.5, -1.0), (-1.7, 3.0), (4.0, 0.25)] {
            assert_eq!(laguerre_eval(LaguerreSpec::new(0, a), x), 1.0);
            assert_eq!(laguerre_eval(LaguerreSpec::new(1, a), x), a + 1.0 - x);
            assert_eq!(laguerre_deriv(LaguerreSpec::new(0, a), x), 0.0);
            assert_eq!(laguerre_deriv(LaguerreSpec::new(1, a), x), -1.0);
        }
    }

    #[test]
    fn laguerre_matches_series_oracle() {
        // n=2, α=0.5, x=-1: series gives C(2.5,2) + C(2.5,1) + 1/2 = 1.875 + 2.5 + 0.5
        let v = laguerre_eval(LaguerreSpec::new(2, 0.5), -1.0);
        assert!((v - laguerre_series(2, 0.5, -1.0)).abs() < 1e-14);
        assert!((v - 4.875).abs() < 1e-14);
        for n in 0..12 {
            for &a in &[-3.3, -1.7, -0.5, 0.0, 2.5] {
                for &x in &[-4.0, -0.3, 0.0, 1.2, 7.5] {
                    let r = laguerre_eval(LaguerreSpec::new(n, a), x);
                    let s = laguerre_series(n, a, x);
                    assert!((r - s).abs() <= 1e-11 * s.abs().max(1.0), "n={n} a={a} x={x}");
                }
            }
        }
    }

    #[test]
    fn laguerre_derivative_matches_finite_difference() {
        let spec = LaguerreSpec::new(3, 1.5);
        let x = 2.0;
        let fd = |h: f64| (spec.eval(x + h) - spec.eval(x - h)) / (2.0 * h);
        // Richardson on the centered difference.
        let (d1, d2) = (fd(1e-3), fd(5e-4));
        let rich = (4.0 * d2 - d1) / 3.0;
        assert!((spec.deriv(x) - rich).abs() < 1e-10);
    }

    #[test]
    fn jacobi_low_degrees_and_series() {
        for &(nu, mu, y) in &[(0.5, -0.25, 0.3), (-2.5, 1.0, -0.7), (1.0, 2.0, 0.9)] {
            let s = JacobiSpec::new(1, nu, mu);
            assert_eq!(jacobi_eval(JacobiSpec::new(0, nu, mu), y), 1.0);
            let want = (nu + 1.0) + (nu + mu + 2.0) * (y - 1.0) / 2.0;
            assert!((s.eval(y) - want).abs() < 1e-15);
            assert!((s.deriv(y) - (nu + mu + 2.0) / 2.0).abs() < 1e-15);
            assert_eq!(jacobi_deriv(JacobiSpec::new(0, nu, mu), y), 0.0);
        }
        let v = jacobi_eval(JacobiSpec::new(2, 0.5, -0.25), 0.3);
        assert!((v - jacobi_hypergeometric(2, 0.5, -0.25, 0.3)).abs() < 1e-14);
    }

    #[test]
    fn jacobi_recurrence_agrees_with_hypergeometric_oracle() {
        for n in 0..10 {
            for &(nu, mu) in &[(0.5, -0.25), (1.0, 2.0), (-0.4, 3.3), (2.5, 0.5)] {
                for &y in &[-0.95, -0.2, 0.0, 0.6, 0.99] {
                    let a = jacobi_eval(JacobiSpec::new(n, nu, mu), y);
                    let b = jacobi_hypergeometric(n, nu, mu, y);
                    assert!((a - b).abs() <= 1e-11 * b.abs().max(1.0), "n={n} nu={nu} mu={mu} y={y} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn jacobi_degenerate_denominator_switches_to_series() {
        // ν+μ = -3 makes k+ν+μ vanish at k = 3.
        let spec = JacobiSpec::new(4, -1.25, -1.75);
        assert!(spec.needs_series());
        for &y in &[-0.8, 0.1, 0.7] {
            let a = spec.eval(y);
            let b = jacobi_hypergeometric(4, -1.25, -1.75, y);
            assert!((a - b).abs() <= 1e-11 * b.abs().max(1.0));
        }
        // And the same sum agrees with the recurrence away from degeneracy.
        let regular = JacobiSpec::new(5, 0.3, 1.1);
        assert!(!regular.needs_series());
        for &y in &[-0.5, 0.2] {
            assert!((jacobi_series(regular, y) - regular.eval(y)).abs() < 1e-12);
        }
    }

    #[test]
    fn jacobi_derivative_matches_finite_difference() {
        let spec = JacobiSpec::new(4, 1.0, 2.0);
        let y = 0.5;
        let fd = |h: f64| (spec.eval(y + h) - spec.eval(y - h)) / (2.0 * h);
        let rich = (4.0 * fd(5e-4) - fd(1e-3)) / 3.0;
        assert!((spec.deriv(y) - rich).abs() <= 1e-10 * spec.deriv(y).abs().max(1.0));
    }

    #[test]
    fn monomial_form_matches_recurrence() {
        let spec = LaguerreSpec::new(6, -2.3);
        let mono = spec.monomial();
        assert_eq!(mono.degree(), 6);
        for &x in &[-1.5, 0.4, 3.0] {
            assert!((mono.eval(x) - spec.eval(x)).abs() < 1e-11);
            assert!((mono.derivative().eval(x) - spec.deriv(x)).abs() < 1e-11);
        }
        let neg = mono.scale_argument(-1.0);
        assert!((neg.eval(0.8) - spec.eval(-0.8)).abs() < 1e-12);
    }

    #[test]
    fn zeros_of_degree_one() {
        let r = real_zeros(&Polynomial::Laguerre(LaguerreSpec::new(1, 0.5)), 0.0, 10.0).unwrap();
        assert_eq!(r.count(), 1);
        assert!((r.zeros[0] - 1.5).abs() < 1e-12);
        let r = real_zeros(&Polynomial::Laguerre(LaguerreSpec::new(1, -1.7)), -10.0, 0.0).unwrap();
        assert_eq!(r.count(), 1);
        assert!((r.zeros[0] + 0.7).abs() < 1e-12);
    }

    #[test]
    fn zero_scan_rejects_bad_interval() {
        assert!(real_zeros(&Polynomial::Laguerre(LaguerreSpec::new(2, 0.0)), 1.0, 1.0).is_err());
    }

    #[test]
    fn double_root_found_by_derivative_test() {
        let r = scan_zeros(|x| (x - 0.3) * (x - 0.3), Some(&|x| 2.0 * (x - 0.3)), -1.0, 1.0, 1001).unwrap();
        assert_eq!(r.count(), 1);
        assert!(r.multiplicity_flags[0]);
        assert!((r.zeros[0] - 0.3).abs() < 1e-9);
    }

    #[test]
    fn laguerre_negative_integer_parameter() {
        for &(n, j) in &[(2usize, 2usize), (3, 2), (5, 1), (4, 4)] {
            let spec = LaguerreSpec::new(n, -(j as f64));
            for &x in &[1e-4, 0.3, 2.5] {
                let want = spec.monomial().eval(x);
                assert!((spec.eval(x) - want).abs() <= 1e-13 * want.abs().max(1e-300), "n={n} j={j} x={x}");
            }
        }
    }

    #[test]
    fn classical_zero_counts() {
        for n in 0..=8 {
            for &a in &[-0.5, 0.0, 0.5, 2.0] {
                let spec = LaguerreSpec::new(n, a);
                let hi = spec.monomial().root_bound() + 1.0;
                let r = real_zeros(&Polynomial::Laguerre(spec), 0.0, hi).unwrap();
                assert_eq!(r.count(), n, "n={n} alpha={a}");
            }
        }
    }
}
