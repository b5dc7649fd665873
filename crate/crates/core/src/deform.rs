//! Isospectral shift deformation `w̃ = w₀ + φ`.
//!
//! First process: φ = u′/u with u″ + 2w₀u′ − Ru = 0, so that
//! φ² + 2w₀φ + φ′ = R and Ṽ⁺ = V⁺ + R; the new potential is Ṽ⁻.
//! Second process: χ = −v′/v with χ² + 2w₀χ − χ′ = R, so that
//! V̄⁻ = V⁻ + R; the new potential is V̄⁺.

mod general_r;

pub use general_r::{extend_general_r, GeneralRSolution};

use serde::Serialize;

use crate::catalog::{partner_potentials, Branch, ClassicalPotential, Family};
use crate::eop::{intertwine, intertwine_adjoint};
use crate::error::{Error, Result};
use crate::function::Function1D;
use crate::jet::Jet;
use crate::polyengine::{real_zeros, JacobiSpec, LaguerreSpec, Polynomial};

/// Tolerance of the partner-shift assertion in [`Deformation::extend`].
pub const PARTNER_SHIFT_TOL: f64 = 1e-10;
/// Points used by the partner-shift assertion.
pub const PARTNER_SHIFT_POINTS: usize = 400;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Process {
    First,
    Second,
}

/// Seed polynomial together with its argument map.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Seed {
    /// `L_m^α(t)` at `t = scale·r²`.
    Laguerre { spec: LaguerreSpec, scale: f64 },
    /// `P_N^{(ν,μ)}(cos 2x)`.
    Jacobi { spec: JacobiSpec },
}

impl Seed {
    pub fn degree(&self) -> usize {
        match self {
            Seed::Laguerre { spec, .. } => spec.n,
            Seed::Jacobi { spec } => spec.n,
        }
    }

    fn argument(&self, x: Jet) -> Jet {
        match self {
            Seed::Laguerre { scale, .. } => x.square() * *scale,
            Seed::Jacobi { .. } => (x * 2.0).cos(),
        }
    }

    /// Domain endpoint where a negative integer parameter in [−N, −1] forces
    /// a zero of the seed, if any.
    pub fn endpoint_zero(&self) -> Option<f64> {
        let n = self.degree() as f64;
        let hits = |p: f64| p <= -0.5 && p >= -n - 0.5 && (p - p.round()).abs() < 1e-9;
        match self {
            Seed::Laguerre { spec, .. } => hits(spec.alpha).then_some(0.0),
            Seed::Jacobi { spec } if hits(spec.nu) => Some(0.0),
            Seed::Jacobi { spec } if hits(spec.mu) => Some(std::f64::consts::FRAC_PI_2),
            Seed::Jacobi { .. } => None,
        }
    }

    pub fn value_jet(&self, x: Jet) -> Jet {
        let t = self.argument(x);
        match self {
            Seed::Laguerre { spec, .. } => spec.compose(t),
            Seed::Jacobi { spec } => spec.compose(t),
        }
    }

    /// Jet of d/dx seed(x), built from the shifted-parameter derivative
    /// formulas so all five slots stay exact.
    pub fn derivative_jet(&self, x: Jet) -> Jet {
        if self.degree() == 0 {
            return Jet::constant(0.0);
        }
        let t = self.argument(x);
        match self {
            Seed::Laguerre { spec, scale } => {
                let d = LaguerreSpec::new(spec.n - 1, spec.alpha + 1.0).compose(t);
                -(d * x) * (2.0 * scale)
            }
            Seed::Jacobi { spec } => {
                let f = (spec.n as f64 + spec.nu + spec.mu + 1.0) / 2.0;
                let d = JacobiSpec::new(spec.n - 1, spec.nu + 1.0, spec.mu + 1.0).compose(t);
                -(x * 2.0).sin() * d * (2.0 * f)
            }
        }
    }

    /// Logarithmic derivative u′/u.
    pub fn log_derivative(&self, x: Jet) -> Jet {
        if self.degree() == 0 {
            return Jet::constant(0.0);
        }
        self.derivative_jet(x) / self.value_jet(x)
    }

    /// Zeros of the seed inside the physical domain of `family`.
    pub fn domain_zeros(&self, family: &Family) -> Vec<f64> {
        if self.degree() == 0 {
            return Vec::new();
        }
        match self {
            Seed::Laguerre { spec, scale } => {
                let bound = spec.monomial().root_bound() + 1.0;
                let (lo, hi) = if *scale > 0.0 { (0.0, bound) } else { (-bound, 0.0) };
                let report = real_zeros(&Polynomial::Laguerre(*spec), lo, hi)
                    .expect("root bound interval is non-empty");
                report
                    .zeros
                    .iter()
                    .map(|t| (t / scale).sqrt())
                    .filter(|r| family.domain().contains(*r))
                    .collect()
            }
            Seed::Jacobi { spec } => {
                let report = real_zeros(&Polynomial::Jacobi(*spec), -1.0, 1.0)
                    .expect("fixed interval is non-empty");
                let mut xs: Vec<f64> = report
                    .zeros
                    .iter()
                    .map(|y| y.acos() / 2.0)
                    .filter(|x| family.domain().contains(*x))
                    .collect();
                xs.sort_by(f64::total_cmp);
                xs
            }
        }
    }
}

/// One step of the isospectral shift deformation.
#[derive(Clone, Debug)]
pub struct Deformation {
    pub family: Family,
    pub branch: Branch,
    pub m: usize,
    pub process: Process,
    pub seed: Seed,
    /// The deformation constant R (K for the trigonometric family).
    pub shift: f64,
    pub w0: Function1D,
    /// φ for the first process, χ for the second.
    pub phi: Function1D,
    pub w_tilde: Function1D,
}

/// The extended partner pair.
#[derive(Clone, Debug)]
pub struct ExtensionPair {
    pub process: Process,
    pub w_tilde: Function1D,
    pub v_tilde_minus: Function1D,
    pub v_tilde_plus: Function1D,
    pub shift: f64,
    pub singular_points: Vec<f64>,
}

impl ExtensionPair {
    /// The rational extension: Ṽ⁻ for the first process, V̄⁺ for the second.
    pub fn extension(&self) -> &Function1D {
        match self.process {
            Process::First => &self.v_tilde_minus,
            Process::Second => &self.v_tilde_plus,
        }
    }

    /// The partner that equals an undeformed potential plus the shift.
    pub fn shifted_partner(&self) -> &Function1D {
        match self.process {
            Process::First => &self.v_tilde_plus,
            Process::Second => &self.v_tilde_minus,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.singular_points.is_empty()
    }
}

/// Default process: the oscillator's branch 3 uses the second process.
pub fn default_process(family: &Family, k: u8) -> Process {
    if family.is_oscillator() && k == 3 {
        Process::Second
    } else {
        Process::First
    }
}

/// Seed and deformation constant for (family, branch, m, process).
///
/// The second process is the first one with (a, b) → (−a, −b).
pub fn seed_polynomial(family: &Family, branch: &Branch, m: usize, process: Process) -> (Seed, f64) {
    let sgn = match process {
        Process::First => 1.0,
        Process::Second => -1.0,
    };
    let (a, b) = (sgn * branch.a, sgn * branch.b);
    match family {
        Family::RadialOscillator(p) => {
            let s = b.signum();
            let spec = LaguerreSpec::new(m, a - 0.5);
            let seed = Seed::Laguerre { spec, scale: -s * 0.5 * p.omega };
            (seed, 2.0 * s * m as f64 * p.omega)
        }
        Family::TrigDpt(_) => {
            let spec = JacobiSpec::new(m, a - 0.5, b - 0.5);
            let nf = m as f64;
            (Seed::Jacobi { spec }, -4.0 * nf * (nf + a + b))
        }
    }
}

impl Deformation {
    /// Deformation with the branch's default process.
    pub fn new(family: Family, k: u8, m: usize) -> Result<Self> {
        Self::with_process(family, k, m, default_process(&family, k))
    }

    pub fn with_process(family: Family, k: u8, m: usize, process: Process) -> Result<Self> {
        let branch = family.branch(k)?;
        let w0 = family.superpotential(k)?;
        let (seed, shift) = seed_polynomial(&family, &branch, m, process);
        let singular = seed.domain_zeros(&family);
        let sign = match process {
            Process::First => 1.0,
            Process::Second => -1.0,
        };
        let phi = Function1D::new(family.domain(), move |x| seed.log_derivative(x) * sign)
            .with_singular_points(singular.clone());
        let w_tilde = w0.zip_with(&phi, |a, b| a + b);
        Ok(Self {
            family,
            branch,
            m,
            process,
            seed,
            shift,
            w0,
            phi,
            w_tilde,
        })
    }

    pub fn singular_points(&self) -> &[f64] {
        self.phi.singular_points()
    }

    /// Domain endpoint where the seed vanishes. φ then only changes the
    /// boundary exponent, the intertwiner annihilates a source state and the
    /// extension is not isospectral to the source.
    pub fn endpoint_zero(&self) -> Option<f64> {
        self.seed.endpoint_zero()
    }

    pub fn is_regular(&self) -> bool {
        self.singular_points().is_empty()
    }

    /// Check points away from the seed's zeros.
    pub fn check_points(&self, n: usize) -> Vec<f64> {
        let iv = self.family.check_interval();
        let guard = 1e-6 * (iv.hi - iv.lo);
        self.family
            .check_grid(n)
            .into_iter()
            .filter(|x| self.phi.distance_to_singularity(*x) > guard)
            .collect()
    }

    /// Max of |φ² + 2w₀φ ± φ′ − R| over `points`, each term scaled by the
    /// magnitude of the terms it cancels (1 + |R| + φ² + |2w₀φ| + |φ′|).
    pub fn riccati_residual(&self, points: &[f64]) -> f64 {
        let sign = match self.process {
            Process::First => 1.0,
            Process::Second => -1.0,
        };
        points
            .iter()
            .map(|&x| {
                let p = self.phi.jet(x);
                let w = self.w0.value(x);
                let (f, df) = (p.value(), p.d(1));
                let res = f * f + 2.0 * w * f + sign * df - self.shift;
                let scale = 1.0 + self.shift.abs() + f * f + (2.0 * w * f).abs() + df.abs();
                res.abs() / scale
            })
            .fold(0.0, f64::max)
    }

    /// Builds Ṽ∓ and asserts the partner-shift identity on 400 points.
    pub fn extend(&self) -> Result<ExtensionPair> {
        let pair = self.extension_unchecked();
        let points = self.check_points(PARTNER_SHIFT_POINTS);
        let dev = partner_shift_deviation(self, &pair, &points);
        if !(dev <= PARTNER_SHIFT_TOL) {
            return Err(Error::InternalInconsistency {
                check: "partner shift".into(),
                residual: dev,
                tolerance: PARTNER_SHIFT_TOL,
            });
        }
        Ok(pair)
    }

    fn extension_unchecked(&self) -> ExtensionPair {
        let (vm, vp) = partner_potentials(&self.w_tilde);
        ExtensionPair {
            process: self.process,
            w_tilde: self.w_tilde.clone(),
            v_tilde_minus: vm,
            v_tilde_plus: vp,
            shift: self.shift,
            singular_points: self.singular_points().to_vec(),
        }
    }

    /// Undeformed partner whose spectrum the extension inherits:
    /// V⁺ for the first process, V⁻ for the second.
    pub fn source_form(&self) -> ClassicalPotential {
        let plus = self.process == Process::First;
        self.family
            .partner_form(self.branch.k, plus)
            .expect("branch index validated at construction")
    }

    /// n-th intertwined eigenstate of the extension and its energy.
    pub fn eigenstate(&self, n: usize) -> (Function1D, f64) {
        let form = self.source_form();
        let psi = form.eigenfunction(n, self.family.domain());
        let e = form.energy(n) + self.shift;
        let out = match self.process {
            Process::First => intertwine(&self.w_tilde, &psi),
            Process::Second => intertwine_adjoint(&self.w_tilde, &psi),
        };
        (out, e)
    }

    /// Normalizable zero-energy state of the extension, if any.
    pub fn zero_mode(&self) -> Option<Function1D> {
        if !self.is_regular() {
            return None;
        }
        let (a, b) = (self.branch.a, self.branch.b);
        let (sa, sb) = match self.process {
            Process::First => (-a, -b),
            Process::Second => (a, b),
        };
        let ok = match self.family {
            Family::RadialOscillator(_) => sa >= 0.5 && sb < 0.0,
            Family::TrigDpt(_) => sa >= 0.5 && sb >= 0.5,
        };
        if !ok {
            return None;
        }
        let seed = self.seed;
        let f = match self.family {
            // exp(∓∫w₀) / seed
            Family::RadialOscillator(_) => Function1D::new(self.family.domain(), move |r: Jet| {
                r.powf(sa) * (r.square() * (0.25 * sb)).exp() / seed.value_jet(r)
            }),
            Family::TrigDpt(_) => Function1D::new(self.family.domain(), move |x: Jet| {
                x.sin().powf(sa) * x.cos().powf(sb) / seed.value_jet(x)
            }),
        };
        Some(f)
    }

    /// Lowest `k` levels of the extension predicted from the source spectrum
    /// plus the shift, merged with the zero mode when present.
    /// Finite endpoint at which the intertwiner pairs the extension's regular
    /// solution with the non-principal solution of the source partner.
    ///
    /// With w̃ ≈ c/x at the endpoint (sign taken so the extension carries
    /// c(c + 1)/x²), x^(c+1) maps to x^c, which is the regular source exponent
    /// only for c ≥ ½. For −½ < c < ½ both partners are in the limit-circle
    /// range and the spectra agree only under the non-principal boundary
    /// condition on the source side.
    pub fn non_principal_endpoint(&self) -> Option<f64> {
        let sign = match self.process {
            Process::First => 1.0,
            Process::Second => -1.0,
        };
        let ends: Vec<(f64, f64)> = match self.family {
            Family::RadialOscillator(_) => vec![(0.0, self.branch.a)],
            Family::TrigDpt(_) => vec![(0.0, self.branch.a), (std::f64::consts::FRAC_PI_2, self.branch.b)],
        };
        ends.into_iter()
            .find(|(_, c)| (sign * c).abs() < 0.5)
            .map(|(x, _)| x)
    }

    pub fn predicted_levels(&self, k: usize) -> Vec<f64> {
        let form = self.source_form();
        let mut levels: Vec<f64> = (0..k).map(|n| form.energy(n) + self.shift).collect();
        if self.zero_mode().is_some() {
            levels.push(0.0);
        }
        levels.sort_by(f64::total_cmp);
        levels.truncate(k);
        levels
    }
}

/// max |Ṽ_shifted − V_source − R| scaled by 1 + |R| + w̃² + |w̃′|.
pub fn partner_shift_deviation(d: &Deformation, pair: &ExtensionPair, points: &[f64]) -> f64 {
    let (vm0, vp0) = partner_potentials(&d.w0);
    let v0 = match d.process {
        Process::First => vp0,
        Process::Second => vm0,
    };
    let shifted = pair.shifted_partner();
    points
        .iter()
        .map(|&x| {
            let w = d.w_tilde.jet(x);
            let dev = shifted.value(x) - v0.value(x) - d.shift;
            let scale = 1.0 + d.shift.abs() + w.value() * w.value() + w.d(1).abs();
            dev.abs() / scale
        })
        .fold(0.0, f64::max)
}

/// W₀ = ½ωr − (ℓ+1)/r + ωr ∂_y log[L_m^α(−y) / L_m^{α+1}(−y)], α = ℓ − ½.
pub fn w0_explicit(family: &Family, m: usize) -> Result<Function1D> {
    let p = match family {
        Family::RadialOscillator(p) => *p,
        Family::TrigDpt(_) => {
            return Err(Error::Config("W0 is defined for the radial oscillator only".into()))
        }
    };
    let (om, l) = (p.omega, p.ell);
    let alpha = l - 0.5;
    let f = Function1D::new(family.domain(), move |r: Jet| {
        let y = r.square() * (0.5 * om);
        let base = r * (0.5 * om) - r.recip() * (l + 1.0);
        if m == 0 {
            return base;
        }
        // ∂_y log L_m^β(−y) = L_{m−1}^{β+1}(−y) / L_m^β(−y)
        let dlog = |beta: f64| {
            LaguerreSpec::new(m - 1, beta + 1.0).compose(-y) / LaguerreSpec::new(m, beta).compose(-y)
        };
        base + r * om * (dlog(alpha) - dlog(alpha + 1.0))
    });
    Ok(f)
}

/// The constant E₀ in W₀² − W₀′ = Ṽ⁻ − E₀: the ground level ω(2ℓ+1) + 2mω.
pub fn w0_constant(family: &Family, m: usize) -> f64 {
    match family {
        Family::RadialOscillator(p) => p.omega * (2.0 * p.ell + 1.0) + 2.0 * m as f64 * p.omega,
        Family::TrigDpt(_) => f64::NAN,
    }
}

/// W₀ = −ψ₀′/ψ₀ by analytic differentiation; fails on a sign change of ψ₀
/// over a 400-point scan of the check interval.
pub fn w0_from_ground_state(psi0: &Function1D, scan: &[f64]) -> Result<Function1D> {
    let mut prev: Option<f64> = None;
    for &x in scan {
        let v = psi0.value(x);
        if v == 0.0 || prev.is_some_and(|p| p * v < 0.0) {
            return Err(Error::SignChange { location: x });
        }
        prev = Some(v);
    }
    let d = psi0.derivative_fn();
    Ok(psi0.zip_with(&d, |p, dp| -(dp / p)))
}

/// Residuals of the W₀ identities on the check grid.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct W0Residuals {
    /// W₀² − W₀′ against Ṽ⁻ − E₀ (branch 2 extension).
    pub minus: f64,
    /// W₀² + W₀′ against V̄⁺ − E₀ (branch 3 second-process extension).
    pub plus: f64,
    /// W₀ against −d/dr log ψ̃₀.
    pub ground_state: f64,
    /// ξ = W₀ − w₁ against φ − d/dr log v.
    pub xi: f64,
    pub e0: f64,
}

impl W0Residuals {
    pub fn max(&self) -> f64 {
        self.minus.max(self.plus).max(self.ground_state).max(self.xi)
    }
}

pub fn w0_certification(family: &Family, m: usize, points: usize) -> Result<W0Residuals> {
    let p = match family {
        Family::RadialOscillator(p) => *p,
        Family::TrigDpt(_) => {
            return Err(Error::Config("W0 is defined for the radial oscillator only".into()))
        }
    };
    let w0 = w0_explicit(family, m)?;
    let e0 = w0_constant(family, m);
    let d2 = Deformation::with_process(*family, 2, m, Process::First)?;
    let d3 = Deformation::with_process(*family, 3, m, Process::Second)?;
    let vt = d2.extend()?.v_tilde_minus;
    let vb = d3.extend()?.v_tilde_plus;
    let psi0 = crate::eop::eigenfunction(&crate::eop::EopSpec::new(crate::eop::Series::L1, 0, m, p))?.0;
    let grid = d2.check_points(points);
    let from_psi = w0_from_ground_state(&psi0, &grid)?;
    let w1 = family.superpotential(1)?;
    let mut out = W0Residuals { minus: 0.0, plus: 0.0, ground_state: 0.0, xi: 0.0, e0 };
    for &r in &grid {
        let j = w0.jet(r);
        let (w, dw) = (j.value(), j.d(1));
        let scale = 1.0 + w * w + dw.abs();
        out.minus = out.minus.max((w * w - dw - (vt.value(r) - e0)).abs() / scale);
        out.plus = out.plus.max((w * w + dw - (vb.value(r) - e0)).abs() / scale);
        out.ground_state = out.ground_state.max((w - from_psi.value(r)).abs() / (1.0 + w.abs()));
        let xi = w - w1.value(r);
        let want = d2.phi.value(r) - d3.seed.log_derivative(Jet::variable(r)).value();
        out.xi = out.xi.max((xi - want).abs() / (1.0 + w.abs()));
    }
    Ok(out)
}
