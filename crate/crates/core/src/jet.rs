//! Truncated Taylor jets: a value together with its first four derivatives.
//!
//! Every closed-form function in the crate (superpotentials, seeds, partner
//! potentials, eigenfunctions) is evaluated as a jet so that residual checks
//! see exact derivatives instead of finite differences. Slot `k` holds the
//! k-th derivative with respect to the independent variable.
//!
//! Differentiating a jet shifts its slots down and leaves the top slot
//! unknown; unknown slots are stored as NaN so that any result depending on
//! them is visibly non-finite rather than silently wrong.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Number of stored slots (value plus derivatives up to order four).
pub const JET_LEN: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet(pub [f64; JET_LEN]);

impl Jet {
    pub fn constant(c: f64) -> Self {
        Jet([c, 0.0, 0.0, 0.0, 0.0])
    }

    /// The independent variable itself, seeded at `x`.
    pub fn variable(x: f64) -> Self {
        Jet([x, 1.0, 0.0, 0.0, 0.0])
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.0[0]
    }

    /// The k-th derivative (k = 0 is the value).
    #[inline]
    pub fn d(&self, k: usize) -> f64 {
        self.0[k]
    }

    /// Jet of the derivative; the top slot becomes unknown.
    pub fn derivative(&self) -> Self {
        let d = self.0;
        Jet([d[1], d[2], d[3], d[4], f64::NAN])
    }

    /// Number of leading slots that are finite.
    pub fn valid_order(&self) -> usize {
        self.0.iter().take_while(|v| v.is_finite()).count()
    }

    /// Chain rule: `h` holds h(f), h'(f), ..., h''''(f) for an outer scalar
    /// function h evaluated at the value of `self`.
    pub fn compose(&self, h: [f64; JET_LEN]) -> Self {
        let [_, f1, f2, f3, f4] = self.0;
        let [h0, h1, h2, h3, h4] = h;
        Jet([
            h0,
            h1 * f1,
            h2 * f1 * f1 + h1 * f2,
            h3 * f1 * f1 * f1 + 3.0 * h2 * f1 * f2 + h1 * f3,
            h4 * f1.powi(4)
                + 6.0 * h3 * f1 * f1 * f2
                + h2 * (3.0 * f2 * f2 + 4.0 * f1 * f3)
                + h1 * f4,
        ])
    }

    pub fn recip(&self) -> Self {
        let v = self.value();
        let i = 1.0 / v;
        let i2 = i * i;
        self.compose([i, -i2, 2.0 * i2 * i, -6.0 * i2 * i2, 24.0 * i2 * i2 * i])
    }

    pub fn exp(&self) -> Self {
        let e = self.value().exp();
        self.compose([e; JET_LEN])
    }

    pub fn ln(&self) -> Self {
        let v = self.value();
        let i = 1.0 / v;
        self.compose([v.ln(), i, -i * i, 2.0 * i * i * i, -6.0 * i.powi(4)])
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.value().sin_cos();
        self.compose([s, c, -s, -c, s])
    }

    pub fn cos(&self) -> Self {
        let (s, c) = self.value().sin_cos();
        self.compose([c, -s, -c, s, c])
    }

    /// Real power x^p for positive base.
    pub fn powf(&self, p: f64) -> Self {
        let v = self.value();
        let mut h = [0.0; JET_LEN];
        let mut coef = 1.0;
        for (k, slot) in h.iter_mut().enumerate() {
            *slot = coef * v.powf(p - k as f64);
            coef *= p - k as f64;
        }
        self.compose(h)
    }

    pub fn powi(&self, n: i32) -> Self {
        let mut acc = Jet::constant(1.0);
        for _ in 0..n.unsigned_abs() {
            acc = acc * *self;
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    pub fn square(&self) -> Self {
        *self * *self
    }

    pub fn scale(&self, c: f64) -> Self {
        let mut d = self.0;
        for v in &mut d {
            *v *= c;
        }
        Jet(d)
    }
}

const BINOM: [[f64; JET_LEN]; JET_LEN] = [
    [1.0, 0.0, 0.0, 0.0, 0.0],
    [1.0, 1.0, 0.0, 0.0, 0.0],
    [1.0, 2.0, 1.0, 0.0, 0.0],
    [1.0, 3.0, 3.0, 1.0, 0.0],
    [1.0, 4.0, 6.0, 4.0, 1.0],
];

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        let mut out = [0.0; JET_LEN];
        for (k, slot) in out.iter_mut().enumerate() {
            let mut s = 0.0;
            for i in 0..=k {
                // Leibniz; skip exact-zero factors so unknown slots do not
                // poison lower orders through 0 * NaN.
                let (a, b) = (self.0[i], rhs.0[k - i]);
                if a != 0.0 && b != 0.0 {
                    s += BINOM[k][i] * a * b;
                }
            }
            *slot = s;
        }
        Jet(out)
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, rhs: Jet) -> Jet {
        self * rhs.recip()
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        let mut d = self.0;
        for (a, b) in d.iter_mut().zip(rhs.0) {
            *a += b;
        }
        Jet(d)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        let mut d = self.0;
        for (a, b) in d.iter_mut().zip(rhs.0) {
            *a -= b;
        }
        Jet(d)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(self, rhs: f64) -> Jet {
        let mut d = self.0;
        d[0] += rhs;
        Jet(d)
    }
}

impl Sub<f64> for Jet {
    type Output = Jet;
    fn sub(self, rhs: f64) -> Jet {
        self + (-rhs)
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        self.scale(rhs)
    }
}

impl Mul<Jet> for f64 {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        rhs.scale(self)
    }
}

impl Div<f64> for Jet {
    type Output = Jet;
    fn div(self, rhs: f64) -> Jet {
        self.scale(1.0 / rhs)
    }
}
