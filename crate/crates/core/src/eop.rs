//! Exceptional Laguerre polynomials of the oscillator extensions, their
//! weights, and eigenfunctions obtained by intertwining.
//!
//! With y = ½ωr²:
//! - L1 (branch 2, first process), α = ℓ − ½:
//!   P̃ = L_m^{α+1}(−y) L_n^α(y) − L_m^α(−y) ∂_y L_n^α(y),
//!   ψ = r^{ℓ+1} e^{−y/2} P̃ / L_m^α(−y), E = ω(2n + 2ℓ + 1) + 2mω.
//! - L2 (branch 2, second process):
//!   P̃ = [(ℓ−m+½) L_m^{−ℓ−3/2}(y) L_n^{ℓ+½}(y) + y L_m^{−ℓ−½}(y) ∂_y L_n^{ℓ+½}(y)] / (ℓ−m+½),
//!   ψ = r^ℓ e^{−y/2} P̃ / L_m^{−ℓ−½}(y), E = ω(2n + 2ℓ + 1 − 2m).
//! - L3 (branch 1, first process), α = −ℓ − 3/2:
//!   P̃ = ωr L_n^{−α+1}(y) L_m^α(−y) + (2/r)(m+α) L_m^{α−1}(−y) L_n^{−α}(y),
//!   ψ = r^{ℓ+2} e^{−y/2} P̃ / L_m^α(−y), E = 2ω(n + 1 + m).

use serde::Serialize;

use crate::catalog::{Family, RadialOscillator};
use crate::deform::{Deformation, Process, Seed};
use crate::error::{Error, Result};
use crate::function::{Function1D, Interval};
use crate::jet::Jet;
use crate::polyengine::{scan_zeros, LaguerreSpec, MonomialPoly};
use crate::quadrature::{integrate, integrate_panels};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Series {
    L1,
    L2,
    L3,
}

impl Series {
    /// Oscillator branch and deformation process generating the series.
    pub fn origin(&self) -> (u8, Process) {
        match self {
            Series::L1 => (2, Process::First),
            Series::L2 => (2, Process::Second),
            Series::L3 => (1, Process::First),
        }
    }

    pub fn deformation(&self, params: RadialOscillator, m: usize) -> Result<Deformation> {
        let (k, process) = self.origin();
        Deformation::with_process(Family::RadialOscillator(params), k, m, process)
    }

    /// Series of a default-process oscillator branch, if any.
    pub fn for_branch(k: u8) -> Option<Series> {
        match k {
            2 => Some(Series::L1),
            1 => Some(Series::L3),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EopSpec {
    pub series: Series,
    pub n: usize,
    pub m: usize,
    pub params: RadialOscillator,
}

impl EopSpec {
    pub fn new(series: Series, n: usize, m: usize, params: RadialOscillator) -> Self {
        Self { series, n, m, params }
    }

    fn check(&self) -> Result<()> {
        if self.series == Series::L2 && (self.params.ell - self.m as f64 + 0.5).abs() < 1e-12 {
            return Err(Error::DegenerateParameter(format!(
                "L2 needs m != ell + 1/2 (m = {}, ell = {})",
                self.m, self.params.ell
            )));
        }
        Ok(())
    }

    /// Eigen-energy of ψ̃_{n,m} in the extension.
    pub fn energy(&self) -> f64 {
        let (om, l) = (self.params.omega, self.params.ell);
        let (n, m) = (self.n as f64, self.m as f64);
        match self.series {
            Series::L1 => om * (2.0 * n + 2.0 * l + 1.0) + 2.0 * m * om,
            Series::L2 => om * (2.0 * n + 2.0 * l + 1.0 - 2.0 * m),
            Series::L3 => 2.0 * om * (n + 1.0 + m),
        }
    }
}

fn lag(n: usize, a: f64, t: Jet) -> Jet {
    LaguerreSpec::new(n, a).compose(t)
}

fn dlag(n: usize, a: f64, t: Jet) -> Jet {
    if n == 0 {
        Jet::constant(0.0)
    } else {
        -lag(n - 1, a + 1.0, t)
    }
}

/// Jet of P̃_{n,m}(r).
pub fn eop_jet(spec: &EopSpec, r: Jet) -> Jet {
    let (om, l) = (spec.params.omega, spec.params.ell);
    let (n, m) = (spec.n, spec.m);
    let y = r.square() * (0.5 * om);
    match spec.series {
        Series::L1 => {
            let a = l - 0.5;
            lag(m, a + 1.0, -y) * lag(n, a, y) - lag(m, a, -y) * dlag(n, a, y)
        }
        Series::L2 => {
            let c = l - m as f64 + 0.5;
            (lag(m, -l - 1.5, y) * lag(n, l + 0.5, y) * c + y * lag(m, -l - 0.5, y) * dlag(n, l + 0.5, y)) / c
        }
        Series::L3 => {
            let a = -l - 1.5;
            r * om * lag(n, -a + 1.0, y) * lag(m, a, -y)
                + r.recip() * (2.0 * (m as f64 + a)) * lag(m, a - 1.0, -y) * lag(n, -a, y)
        }
    }
}

/// P̃_{n,m}(r).
pub fn eop_eval(spec: &EopSpec, r: f64) -> Result<f64> {
    spec.check()?;
    Ok(eop_jet(spec, Jet::variable(r)).value())
}

/// Variant of the L3 polynomial with L_n^α(y) in the second term. Not an eigenfunction factor.
pub fn eop_eval_l3_variant(spec: &EopSpec, r: f64) -> f64 {
    let (om, l) = (spec.params.omega, spec.params.ell);
    let (n, m) = (spec.n, spec.m);
    let a = -l - 1.5;
    let y = 0.5 * om * r * r;
    let lv = |k: usize, al: f64, x: f64| LaguerreSpec::new(k, al).eval(x);
    om * r * lv(n, -a + 1.0, y) * lv(m, a, -y) + 2.0 / r * (m as f64 + a) * lv(m, a - 1.0, -y) * lv(n, a, y)
}

/// The m = 1 X₁ combination (ωr² + 2ℓ + 1) L_n^{ℓ+½}(y) + c L_n^{ℓ−½}(y).
/// `c = 2` gives a multiple of P̃_{n,1}; `c = 1` does not.
pub fn x1_combination(n: usize, params: RadialOscillator, r: f64, c: f64) -> f64 {
    let (om, l) = (params.omega, params.ell);
    let y = 0.5 * om * r * r;
    (om * r * r + 2.0 * l + 1.0) * LaguerreSpec::new(n, l + 0.5).eval(y) + c * LaguerreSpec::new(n, l - 0.5).eval(y)
}

/// Half-density weight 𝒲 with P̃ 𝒲 = ψ̃.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WeightSpec {
    pub series: Series,
    pub m: usize,
    pub params: RadialOscillator,
}

impl WeightSpec {
    pub fn new(series: Series, m: usize, params: RadialOscillator) -> Self {
        Self { series, m, params }
    }

    pub fn interval(&self) -> Interval {
        Family::RadialOscillator(self.params).domain()
    }

    fn prefactor_power(&self) -> f64 {
        let l = self.params.ell;
        match self.series {
            Series::L1 => l + 1.0,
            Series::L2 => l,
            Series::L3 => l + 2.0,
        }
    }

    /// Poles of the weight inside (0, ∞).
    pub fn singular_points(&self) -> Vec<f64> {
        let (om, l) = (self.params.omega, self.params.ell);
        let (alpha, scale) = match self.series {
            Series::L1 => (l - 0.5, -0.5 * om),
            Series::L2 => (-l - 0.5, 0.5 * om),
            Series::L3 => (-l - 1.5, -0.5 * om),
        };
        let seed = Seed::Laguerre { spec: LaguerreSpec::new(self.m, alpha), scale };
        seed.domain_zeros(&Family::RadialOscillator(self.params))
    }

    pub fn jet(&self, r: Jet) -> Jet {
        self.jet_with_power(r, self.prefactor_power())
    }

    fn jet_with_power(&self, r: Jet, power: f64) -> Jet {
        let (om, l, m) = (self.params.omega, self.params.ell, self.m);
        let y = r.square() * (0.5 * om);
        let den = match self.series {
            Series::L1 => lag(m, l - 0.5, -y),
            Series::L2 => lag(m, -l - 0.5, y),
            Series::L3 => lag(m, -l - 1.5, -y),
        };
        r.powf(power) * (y * -0.5).exp() / den
    }

    /// 𝒲(r); fails when the weight has a pole in the interval.
    pub fn eval(&self, r: f64) -> Result<f64> {
        let sing = self.singular_points();
        if !sing.is_empty() {
            return Err(Error::SingularExtension { points: sing });
        }
        Ok(self.jet(Jet::variable(r)).value())
    }

    /// The weight with an r^{ℓ/2} prefactor for L1 instead of the half-density one.
    pub fn eval_alt_prefactor(&self, r: f64) -> f64 {
        let p = match self.series {
            Series::L1 => self.params.ell / 2.0,
            _ => self.prefactor_power(),
        };
        self.jet_with_power(Jet::variable(r), p).value()
    }
}

/// exp(−∫_anchor^x w̃) by adaptive quadrature. Fails if w̃ has a recorded
/// singular point inside its domain.
pub fn weight_from_superpotential(w_tilde: &Function1D, anchor: f64) -> Result<Function1D> {
    if !w_tilde.singular_points().is_empty() {
        return Err(Error::SingularExtension {
            points: w_tilde.singular_points().to_vec(),
        });
    }
    let w = w_tilde.clone();
    Ok(Function1D::new(w_tilde.domain(), move |x: Jet| {
        let xv = x.value();
        let f = |t: f64| w.value(t);
        let q = integrate(&f, anchor, xv, 1e-13 * (1.0 + (xv - anchor).abs()), 40);
        let j = w.jet(xv);
        // Slots of −∫w̃ as a function of x, then composed with the inner jet.
        let log_w = x.compose([-q.value, -j.d(0), -j.d(1), -j.d(2), -j.d(3)]);
        log_w.exp()
    }))
}

/// (−d/dx + w̃) ψ.
pub fn intertwine(w_tilde: &Function1D, psi: &Function1D) -> Function1D {
    let dpsi = psi.derivative_fn();
    let wp = w_tilde.zip_with(psi, |w, p| w * p);
    wp.zip_with(&dpsi, |a, d| a - d)
}

/// (d/dx + w̃) ψ.
pub fn intertwine_adjoint(w_tilde: &Function1D, psi: &Function1D) -> Function1D {
    let dpsi = psi.derivative_fn();
    let wp = w_tilde.zip_with(psi, |w, p| w * p);
    wp.zip_with(&dpsi, |a, d| a + d)
}

/// ψ̃_{n,m} = P̃ 𝒲 as a function, together with its energy.
pub fn eigenfunction(spec: &EopSpec) -> Result<(Function1D, f64)> {
    spec.check()?;
    let s = *spec;
    let weight = WeightSpec::new(s.series, s.m, s.params);
    let sing = weight.singular_points();
    let f = Function1D::new(weight.interval(), move |r: Jet| eop_jet(&s, r) * weight.jet(r))
        .with_singular_points(sing);
    Ok((f, spec.energy()))
}

/// ψ̃_{n,m}(r); non-finite at poles of a singular weight.
pub fn eigenfunction_closed_form(spec: &EopSpec, r: f64) -> Result<f64> {
    Ok(eigenfunction(spec)?.0.value(r))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GramReport {
    pub matrix: Vec<Vec<f64>>,
    /// max_{i≠j} |G_ij| / √(G_ii G_jj)
    pub max_normalized_offdiag: f64,
    pub r_cut: f64,
    /// Crude bound on the neglected tail relative to the smallest diagonal.
    pub tail_bound: f64,
}

/// R_cut = max(10, 8/√ω)(1 + √(n_max + m)).
pub fn gram_cutoff(params: RadialOscillator, n_max: usize, m: usize) -> f64 {
    (10.0f64).max(8.0 / params.omega.sqrt()) * (1.0 + ((n_max + m) as f64).sqrt())
}

/// G_{nn′} = ∫ P̃_n P̃_{n′} 𝒲² dr on (0, R_cut).
pub fn gram_matrix(series: Series, m: usize, params: RadialOscillator, n_max: usize) -> Result<GramReport> {
    let weight = WeightSpec::new(series, m, params);
    let sing = weight.singular_points();
    if !sing.is_empty() {
        return Err(Error::SingularExtension { points: sing });
    }
    let psis: Vec<Function1D> = (0..=n_max)
        .map(|n| eigenfunction(&EopSpec::new(series, n, m, params)).map(|p| p.0))
        .collect::<Result<_>>()?;
    let r_cut = gram_cutoff(params, n_max, m);
    let panels = 64;
    let size = n_max + 1;
    let mut g = vec![vec![0.0; size]; size];
    for i in 0..size {
        let f = |r: f64| {
            let v = psis[i].value(r);
            v * v
        };
        let probe = integrate_panels(&f, 0.0, r_cut, panels, 1e-10);
        g[i][i] = integrate_panels(&f, 0.0, r_cut, panels, 1e-14 * probe.value.abs().max(f64::MIN_POSITIVE)).value;
        if !(g[i][i] > 0.0) {
            return Err(Error::Numerical(format!("non-positive Gram diagonal at n = {i}")));
        }
    }
    let mut worst: f64 = 0.0;
    for i in 0..size {
        for j in (i + 1)..size {
            let f = |r: f64| psis[i].value(r) * psis[j].value(r);
            let scale = (g[i][i] * g[j][j]).sqrt();
            let v = integrate_panels(&f, 0.0, r_cut, panels, 1e-13 * scale).value;
            g[i][j] = v;
            g[j][i] = v;
            worst = worst.max(v.abs() / scale);
        }
    }
    let dmin = (0..size).map(|i| g[i][i]).fold(f64::INFINITY, f64::min);
    let tail = psis
        .iter()
        .map(|p| {
            let v = p.value(r_cut);
            v * v / (params.omega * r_cut)
        })
        .fold(0.0, f64::max);
    Ok(GramReport {
        matrix: g,
        max_normalized_offdiag: worst,
        r_cut,
        tail_bound: tail / dmin,
    })
}

/// Explicit polynomial in y whose zeros are those of P̃ (for L3, r·P̃).
pub fn eop_polynomial_in_y(spec: &EopSpec) -> Result<MonomialPoly> {
    spec.check()?;
    let (l, n, m) = (spec.params.ell, spec.n, spec.m);
    let mono = |k: usize, a: f64| LaguerreSpec::new(k, a).monomial();
    let y = MonomialPoly::new(vec![0.0, 1.0]);
    Ok(match spec.series {
        Series::L1 => {
            let a = l - 0.5;
            let ln = mono(n, a);
            mono(m, a + 1.0)
                .scale_argument(-1.0)
                .mul(&ln)
                .add_scaled(&mono(m, a).scale_argument(-1.0).mul(&ln.derivative()), -1.0)
        }
        Series::L2 => {
            let c = l - m as f64 + 0.5;
            let ln = mono(n, l + 0.5);
            let first = mono(m, -l - 1.5).mul(&ln);
            let second = y.mul(&mono(m, -l - 0.5)).mul(&ln.derivative());
            first.add_scaled(&second, 1.0 / c)
        }
        Series::L3 => {
            let a = -l - 1.5;
            let first = y.mul(&mono(n, -a + 1.0)).mul(&mono(m, a).scale_argument(-1.0));
            let second = mono(m, a - 1.0).scale_argument(-1.0).mul(&mono(n, -a));
            first.add_scaled(&second, m as f64 + a).scaled(2.0)
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroCensus {
    pub degree: usize,
    /// Real zeros with y > 0, i.e. inside 0 < r < ∞.
    pub inside: usize,
    pub outside_real: usize,
    /// degree − inside − outside_real.
    pub outside_complex: usize,
    /// Set if a root was flagged by the scan or the complex remainder is odd.
    pub flagged: bool,
}

impl ZeroCensus {
    pub fn outside(&self) -> usize {
        self.outside_real + self.outside_complex
    }
}

pub fn zero_census(spec: &EopSpec) -> Result<ZeroCensus> {
    let poly = eop_polynomial_in_y(spec)?;
    let degree = poly.degree();
    if degree == 0 {
        return Ok(ZeroCensus { degree, inside: 0, outside_real: 0, outside_complex: 0, flagged: false });
    }
    let bound = poly.root_bound() * 1.01 + 1.0;
    let d = poly.derivative();
    let samples = (256 * (degree + 1)).max(4096);
    let p = |x: f64| poly.eval(x);
    let dp = |x: f64| d.eval(x);
    let inside = scan_zeros(p, Some(&dp), 0.0, bound, samples)?;
    let outside = scan_zeros(p, Some(&dp), -bound, 0.0, samples)?;
    let found = inside.count() + outside.count();
    let complex = degree.saturating_sub(found);
    Ok(ZeroCensus {
        degree,
        inside: inside.count(),
        outside_real: outside.count(),
        outside_complex: complex,
        flagged: inside.any_flagged() || outside.any_flagged() || complex % 2 == 1 || found > degree,
    })
}
