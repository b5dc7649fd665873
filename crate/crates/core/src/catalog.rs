//! The two undeformed families, their four superpotential branches, the
//! parameter maps τ and the shape-invariance pairing check.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::{Function1D, Interval};
use crate::jet::Jet;
use crate::polyengine::{JacobiSpec, LaguerreSpec};

/// Inset of the DPT domain from its singular endpoints.
pub const DPT_EPS: f64 = 1e-6;

/// V(r) = ¼ω²r² + ℓ(ℓ+1)/r² on r > 0.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RadialOscillator {
    pub omega: f64,
    pub ell: f64,
}

impl RadialOscillator {
    pub fn new(omega: f64, ell: f64) -> Result<Self> {
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::Config(format!("omega must be positive, got {omega}")));
        }
        if !(ell >= 0.0) || !ell.is_finite() {
            return Err(Error::Config(format!("ell must be non-negative, got {ell}")));
        }
        Ok(Self { omega, ell })
    }
}

/// V(x) = A(A+1)csc²x + B(B+1)sec²x on (0, π/2).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TrigDpt {
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
}

impl TrigDpt {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > -0.5 && b > -0.5) || !a.is_finite() || !b.is_finite() {
            return Err(Error::Config(format!("DPT needs A, B > -1/2, got A={a}, B={b}")));
        }
        Ok(Self { a, b })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    RadialOscillator(RadialOscillator),
    TrigDpt(TrigDpt),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SusyKind {
    Exact,
    Broken,
}

/// One superpotential solution. For the oscillator w = a/r + ½br, for DPT
/// w = a cot x − b tan x. `factorization_energy` is E in w² − w′ = V − E and
/// `v_minus_shift` is the constant V⁻ − V (always −E).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Branch {
    pub k: u8,
    pub a: f64,
    pub b: f64,
    pub factorization_energy: f64,
    pub v_minus_shift: f64,
    pub susy_kind: SusyKind,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::RadialOscillator(_) => "radial_oscillator",
            Family::TrigDpt(_) => "trig_dpt",
        }
    }

    pub fn is_oscillator(&self) -> bool {
        matches!(self, Family::RadialOscillator(_))
    }

    /// Physical domain with the singular endpoints inset.
    pub fn domain(&self) -> Interval {
        match self {
            Family::RadialOscillator(p) => Interval::new(1e-6 / p.omega.sqrt(), f64::INFINITY),
            Family::TrigDpt(_) => Interval::new(DPT_EPS, FRAC_PI_2 - DPT_EPS),
        }
    }

    /// Bounded interval used for pointwise identity checks.
    pub fn check_interval(&self) -> Interval {
        match self {
            Family::RadialOscillator(p) => {
                let s = p.omega.sqrt();
                Interval::new(0.01 / s, 10.0 / s)
            }
            Family::TrigDpt(_) => Interval::new(0.01, FRAC_PI_2 - 0.01),
        }
    }

    /// `n` check points, uniformly spaced, including both ends of the
    /// check interval.
    pub fn check_grid(&self, n: usize) -> Vec<f64> {
        let iv = self.check_interval();
        let h = (iv.hi - iv.lo) / (n.max(2) - 1) as f64;
        (0..n.max(2)).map(|i| iv.lo + h * i as f64).collect()
    }

    pub fn potential(&self) -> Function1D {
        match *self {
            Family::RadialOscillator(p) => ClassicalPotential::Oscillator {
                p: p.ell + 1.0,
                omega: p.omega,
                c: 0.0,
            }
            .function(self.domain()),
            Family::TrigDpt(p) => ClassicalPotential::Trig {
                p: p.a + 1.0,
                q: p.b + 1.0,
                c: 0.0,
            }
            .function(self.domain()),
        }
    }

    pub fn branch(&self, k: u8) -> Result<Branch> {
        if !(1..=4).contains(&k) {
            return Err(Error::Config(format!("branch must be in 1..=4, got {k}")));
        }
        let susy_kind = if k == 2 || k == 3 {
            SusyKind::Broken
        } else {
            SusyKind::Exact
        };
        let (a, b, e) = match *self {
            Family::RadialOscillator(p) => {
                let a = if k % 2 == 1 { -(p.ell + 1.0) } else { p.ell };
                let b = if k <= 2 { p.omega } else { -p.omega };
                (a, b, -(a * b - b / 2.0))
            }
            Family::TrigDpt(p) => {
                let a = if k == 1 || k == 3 { p.a } else { -p.a - 1.0 };
                let b = if k <= 2 { p.b } else { -p.b - 1.0 };
                (a, b, (a + b) * (a + b))
            }
        };
        Ok(Branch {
            k,
            a,
            b,
            factorization_energy: e,
            v_minus_shift: -e,
            susy_kind,
        })
    }

    pub fn branches(&self) -> Vec<Branch> {
        (1..=4).map(|k| self.branch(k).expect("valid branch index")).collect()
    }

    pub fn superpotential(&self, k: u8) -> Result<Function1D> {
        let br = self.branch(k)?;
        Ok(superpotential_ab(self, br.a, br.b))
    }

    /// Parameter map of the family's shape invariance.
    pub fn tau(&self) -> Family {
        match *self {
            Family::RadialOscillator(p) => Family::RadialOscillator(RadialOscillator {
                omega: p.omega,
                ell: p.ell + 1.0,
            }),
            Family::TrigDpt(p) => Family::TrigDpt(TrigDpt { a: p.a + 1.0, b: p.b + 1.0 }),
        }
    }

    /// Exactly solvable form of V⁻ or V⁺ for branch `k`.
    pub fn partner_form(&self, k: u8, plus: bool) -> Result<ClassicalPotential> {
        let br = self.branch(k)?;
        let c = br.v_minus_shift;
        Ok(match *self {
            Family::RadialOscillator(p) => {
                // V∓ = g(g+1)/r² + ¼ω²r² + ab ∓ b/2 with g = a or a − 1.
                let g = if plus { br.a - 1.0 } else { br.a };
                let shift = if plus { c + br.b } else { c };
                ClassicalPotential::Oscillator {
                    p: regular_exponent(g),
                    omega: p.omega,
                    c: shift,
                }
            }
            Family::TrigDpt(_) => {
                let (ga, gb) = if plus { (br.a - 1.0, br.b - 1.0) } else { (br.a, br.b) };
                ClassicalPotential::Trig {
                    p: regular_exponent(ga),
                    q: regular_exponent(gb),
                    c,
                }
            }
        })
    }
}

/// w for arbitrary (a, b) in the family's functional form.
pub fn superpotential_ab(family: &Family, a: f64, b: f64) -> Function1D {
    let dom = family.domain();
    match family {
        Family::RadialOscillator(_) => {
            Function1D::new(dom, move |r: Jet| r.recip() * a + r * (0.5 * b))
        }
        Family::TrigDpt(_) => Function1D::new(dom, move |x: Jet| {
            let (s, c) = (x.sin(), x.cos());
            (c / s) * a - (s / c) * b
        }),
    }
}

/// V∓ = w² ∓ w′.
pub fn partner_potentials(w: &Function1D) -> (Function1D, Function1D) {
    let vm = w.map(|j| j.square() - j.derivative());
    let vp = w.map(|j| j.square() + j.derivative());
    (vm, vp)
}

/// For g(g+1) the exponent of the solution regular at the singular end:
/// max(g + 1, −g).
fn regular_exponent(g: f64) -> f64 {
    (g + 1.0).max(-g)
}

/// Potentials with closed-form spectra:
/// `Oscillator`: p(p−1)/r² + ¼ω²r² + c,
/// `Trig`: p(p−1)csc²x + q(q−1)sec²x + c.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ClassicalPotential {
    Oscillator { p: f64, omega: f64, c: f64 },
    Trig { p: f64, q: f64, c: f64 },
}

impl ClassicalPotential {
    pub fn function(&self, domain: Interval) -> Function1D {
        match *self {
            ClassicalPotential::Oscillator { p, omega, c } => Function1D::new(domain, move |r: Jet| {
                r.powi(-2) * (p * (p - 1.0)) + r.square() * (0.25 * omega * omega) + c
            }),
            ClassicalPotential::Trig { p, q, c } => Function1D::new(domain, move |x: Jet| {
                x.sin().powi(-2) * (p * (p - 1.0)) + x.cos().powi(-2) * (q * (q - 1.0)) + c
            }),
        }
    }

    pub fn energy(&self, n: usize) -> f64 {
        let nf = n as f64;
        match *self {
            ClassicalPotential::Oscillator { p, omega, c } => omega * (2.0 * nf + p + 0.5) + c,
            ClassicalPotential::Trig { p, q, c } => (p + q + 2.0 * nf).powi(2) + c,
        }
    }

    /// Unnormalized n-th eigenfunction.
    pub fn eigenfunction(&self, n: usize, domain: Interval) -> Function1D {
        match *self {
            ClassicalPotential::Oscillator { p, omega, .. } => {
                let lag = LaguerreSpec::new(n, p - 0.5);
                Function1D::new(domain, move |r: Jet| {
                    let y = r.square() * (0.5 * omega);
                    r.powf(p) * (y * -0.5).exp() * lag.compose(y)
                })
            }
            ClassicalPotential::Trig { p, q, .. } => {
                let jac = JacobiSpec::new(n, p - 0.5, q - 0.5);
                Function1D::new(domain, move |x: Jet| {
                    let y = (x * 2.0).cos();
                    x.sin().powf(p) * x.cos().powf(q) * jac.compose(y)
                })
            }
        }
    }
}

/// Which τ realizes the pairing of branches (i, j). The oscillator and the
/// DPT (1,4) pair use the family map; DPT (2,3) uses {A−1, B+1}.
pub fn pairing_tau(family: &Family, i: u8, j: u8) -> Family {
    match *family {
        Family::TrigDpt(p) if (i.min(j), i.max(j)) == (2, 3) => {
            Family::TrigDpt(TrigDpt { a: p.a - 1.0, b: p.b + 1.0 })
        }
        _ => family.tau(),
    }
}

/// max over the grid of |w_i(x, λ) + w_j(x, τλ)|, taking the better of the
/// two orientations (i, j) and (j, i).
pub fn si_pair_check(family: &Family, i: u8, j: u8, grid: &[f64]) -> Result<f64> {
    let mapped = pairing_tau(family, i, j);
    let orient = |p: u8, q: u8| -> Result<f64> {
        let wp = family.superpotential(p)?;
        let wq = mapped.superpotential(q)?;
        Ok(grid
            .iter()
            .map(|&x| (wp.value(x) + wq.value(x)).abs())
            .fold(0.0, f64::max))
    };
    Ok(orient(i, j)?.min(orient(j, i)?))
}

/// The literal family-τ residual for a pair, orientation-agnostic.
pub fn si_pair_check_family_tau(family: &Family, i: u8, j: u8, grid: &[f64]) -> Result<f64> {
    let mapped = family.tau();
    let orient = |p: u8, q: u8| -> Result<f64> {
        let wp = family.superpotential(p)?;
        let wq = mapped.superpotential(q)?;
        Ok(grid
            .iter()
            .map(|&x| (wp.value(x) + wq.value(x)).abs())
            .fold(0.0, f64::max))
    };
    Ok(orient(i, j)?.min(orient(j, i)?))
}
