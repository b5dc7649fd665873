//! Extension for an arbitrary deformation constant R (oscillator family).
//!
//! Solves r u″ + (2a + b r²) u′ − R r u = 0 for the solution regular at the
//! origin. Near r = 0 the even Frobenius series is summed directly; beyond
//! r_s = √(2/ω) the solution is continued by Taylor steps whose coefficients
//! follow from the ODE, with the step halved until the truncated tail is
//! below rounding.

use crate::catalog::{partner_potentials, Family};
use crate::error::{Error, Result};
use crate::function::{Function1D, Interval};
use crate::jet::Jet;

use super::{ExtensionPair, Process};

const TAYLOR_ORDER: usize = 32;
const SERIES_MAX_TERMS: usize = 400;

#[derive(Clone, Debug)]
struct Segment {
    r0: f64,
    h: f64,
    /// u(r0 + t) = Σ c_k t^k on 0 ≤ t ≤ h.
    coeffs: Vec<f64>,
}

#[derive(Clone, Debug)]
struct Solution {
    series: Vec<f64>,
    r_s: f64,
    segments: Vec<Segment>,
}

impl Solution {
    /// Jets of u and u′ at r.
    fn eval(&self, r: Jet) -> (Jet, Jet) {
        let x = r.value();
        if x <= self.r_s || self.segments.is_empty() {
            let r2 = r.square();
            let mut u = Jet::constant(0.0);
            let mut du = Jet::constant(0.0);
            for (i, d) in self.series.iter().enumerate().rev() {
                u = u * r2 + *d;
                if i > 0 {
                    du = du * r2 + 2.0 * i as f64 * d;
                }
            }
            return (u, du * r);
        }
        let idx = self
            .segments
            .partition_point(|s| s.r0 <= x)
            .saturating_sub(1);
        let seg = &self.segments[idx];
        let t = r - seg.r0;
        let mut u = Jet::constant(0.0);
        for c in seg.coeffs.iter().rev() {
            u = u * t + *c;
        }
        let mut du = Jet::constant(0.0);
        for (k, c) in seg.coeffs.iter().enumerate().skip(1).rev() {
            du = du * t + k as f64 * c;
        }
        (u, du)
    }
}

/// Extension for arbitrary R together with the pieces needed to certify it.
#[derive(Clone, Debug)]
pub struct GeneralRSolution {
    pub shift: f64,
    pub w0: Function1D,
    pub phi: Function1D,
    pub pair: ExtensionPair,
}

impl GeneralRSolution {
    /// Max of |φ² + 2w₀φ + φ′ − R| / (1 + |R| + φ² + |2w₀φ| + |φ′|).
    pub fn riccati_residual(&self, points: &[f64]) -> f64 {
        points
            .iter()
            .map(|&x| {
                let p = self.phi.jet(x);
                let w = self.w0.value(x);
                let (f, df) = (p.value(), p.d(1));
                let res = f * f + 2.0 * w * f + df - self.shift;
                res.abs() / (1.0 + self.shift.abs() + f * f + (2.0 * w * f).abs() + df.abs())
            })
            .fold(0.0, f64::max)
    }
}

/// First-process extension of oscillator branch `k` for arbitrary `r_const`
/// on (r_min, r_max). A zero of u inside the domain is reported as a
/// singular extension with its locations.
pub fn extend_general_r(family: &Family, k: u8, r_const: f64, r_max: f64) -> Result<GeneralRSolution> {
    let p = match family {
        Family::RadialOscillator(p) => *p,
        Family::TrigDpt(_) => {
            return Err(Error::Config("general-R extension is implemented for the radial oscillator".into()))
        }
    };
    if !r_const.is_finite() {
        return Err(Error::Config(format!("R must be finite, got {r_const}")));
    }
    let branch = family.branch(k)?;
    let (a, b) = (branch.a, branch.b);
    let r_min = family.domain().lo;
    if !(r_max > r_min) {
        return Err(Error::Config(format!("r_max must exceed {r_min}, got {r_max}")));
    }
    let r_s = (2.0 / p.omega).sqrt().min(r_max);

    // d_i = (R − b(2i−2)) d_{i−1} / (2i(2i−1+2a))
    let mut series = vec![1.0];
    let mut term_max: f64 = 1.0;
    for i in 1..SERIES_MAX_TERMS {
        let fi = i as f64;
        let den = 2.0 * fi * (2.0 * fi - 1.0 + 2.0 * a);
        if den.abs() < 1e-12 {
            return Err(Error::DegenerateParameter(format!(
                "Frobenius exponents differ by an even integer at a = {a}"
            )));
        }
        let d = (r_const - b * (2.0 * fi - 2.0)) * series[i - 1] / den;
        series.push(d);
        let mag = (d * r_s.powi(2 * i as i32)).abs();
        term_max = term_max.max(mag);
        if d == 0.0 || (mag < 1e-18 * term_max && i > 4) {
            break;
        }
    }

    let mut sol = Solution { series, r_s, segments: Vec::new() };
    let (u_s, du_s) = sol.eval(Jet::variable(r_s));
    let mut singular = sign_changes_in_series(&sol, r_min, r_s);

    let (mut r0, mut u, mut du) = (r_s, u_s.value(), du_s.value());
    while r0 < r_max * (1.0 - 1e-15) {
        let coeffs = taylor_coeffs(r0, u, du, a, b, r_const);
        let mut h = (0.5 * r0).min(r_max - r0);
        loop {
            let tail = coeffs[TAYLOR_ORDER].abs() * h.powi(TAYLOR_ORDER as i32)
                + coeffs[TAYLOR_ORDER - 1].abs() * h.powi(TAYLOR_ORDER as i32 - 1);
            let size: f64 = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.abs() * h.powi(k as i32))
                .sum();
            if tail <= 1e-16 * size || h < 1e-6 * r0 {
                break;
            }
            h *= 0.5;
        }
        let seg = Segment { r0, h, coeffs };
        let (u1, du1) = sol_eval_segment(&seg, h);
        if u * u1 < 0.0 {
            singular.push(bisect_segment(&seg));
        }
        // Keep magnitudes in range; φ is unaffected by the scale.
        let s = if u1.abs() > 1e100 { 1e-100 } else { 1.0 };
        let seg = if s != 1.0 {
            Segment {
                coeffs: seg.coeffs.iter().map(|c| c * s).collect(),
                ..seg
            }
        } else {
            seg
        };
        sol.segments.push(seg);
        r0 += h;
        u = u1 * s;
        du = du1 * s;
    }

    if !singular.is_empty() {
        return Err(Error::SingularExtension { points: singular });
    }

    let domain = Interval::new(r_min, r_max);
    let w0 = family.superpotential(k)?;
    let sol = std::sync::Arc::new(sol);
    let phi = Function1D::new(domain, move |r: Jet| {
        let (u, du) = sol.eval(r);
        du / u
    });
    let w_tilde = w0.zip_with(&phi, |a, b| a + b);
    let (vm, vp) = partner_potentials(&w_tilde);
    Ok(GeneralRSolution {
        shift: r_const,
        w0,
        phi,
        pair: ExtensionPair {
            process: Process::First,
            w_tilde,
            v_tilde_minus: vm,
            v_tilde_plus: vp,
            shift: r_const,
            singular_points: Vec::new(),
        },
    })
}

/// Taylor coefficients of u about r0 from
/// c_{k+2} = −[((k+1)k + (b r0² + 2a)(k+1)) c_{k+1} + (2b r0 k − R r0) c_k
///            + (b(k−1) − R) c_{k−1}] / (r0 (k+2)(k+1)).
fn taylor_coeffs(r0: f64, u: f64, du: f64, a: f64, b: f64, r_const: f64) -> Vec<f64> {
    let mut c = vec![0.0; TAYLOR_ORDER + 1];
    c[0] = u;
    c[1] = du;
    for k in 0..TAYLOR_ORDER - 1 {
        let kf = k as f64;
        let prev = if k > 0 { c[k - 1] } else { 0.0 };
        let num = ((kf + 1.0) * kf + (b * r0 * r0 + 2.0 * a) * (kf + 1.0)) * c[k + 1]
            + (2.0 * b * r0 * kf - r_const * r0) * c[k]
            + (b * (kf - 1.0) - r_const) * prev;
        c[k + 2] = -num / (r0 * (kf + 2.0) * (kf + 1.0));
    }
    c
}

fn sol_eval_segment(seg: &Segment, t: f64) -> (f64, f64) {
    let mut u = 0.0;
    let mut du = 0.0;
    for (k, c) in seg.coeffs.iter().enumerate().rev() {
        u = u * t + c;
        if k > 0 {
            du = du * t + k as f64 * c;
        }
    }
    (u, du)
}

fn bisect_segment(seg: &Segment) -> f64 {
    let (mut lo, mut hi) = (0.0, seg.h);
    let f0 = sol_eval_segment(seg, 0.0).0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < 1e-14 * seg.r0 {
            break;
        }
        if sol_eval_segment(seg, mid).0 * f0 > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    seg.r0 + 0.5 * (lo + hi)
}

fn sign_changes_in_series(sol: &Solution, lo: f64, hi: f64) -> Vec<f64> {
    let n = 256;
    let f = |r: f64| sol.eval(Jet::variable(r)).0.value();
    let report = crate::polyengine::scan_zeros(f, None, lo, hi, n).unwrap_or_default();
    report.zeros
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::RadialOscillator;
    use crate::deform::Deformation;

    fn ro(omega: f64, ell: f64) -> Family {
        Family::RadialOscillator(RadialOscillator::new(omega, ell).unwrap())
    }

    #[test]
    fn quantized_r_matches_polynomial_path() {
        let f = ro(1.0, 1.0);
        let g = extend_general_r(&f, 2, 2.0, 10.0).unwrap();
        let d = Deformation::new(f, 2, 1).unwrap();
        let pair = d.extend().unwrap();
        for r in f.check_grid(200) {
            let (a, b) = (g.pair.v_tilde_minus.value(r), pair.v_tilde_minus.value(r));
            assert!((a - b).abs() <= 1e-7 * (1.0 + b.abs()), "r={r} {a} {b}");
        }
    }

    #[test]
    fn zero_r_is_strictly_isospectral() {
        let f = ro(1.0, 1.0);
        let g = extend_general_r(&f, 2, 0.0, 10.0).unwrap();
        let (_, vp) = partner_potentials(&f.superpotential(2).unwrap());
        for r in f.check_grid(100) {
            assert_eq!(g.pair.v_tilde_plus.value(r), vp.value(r));
        }
    }

    #[test]
    fn non_quantized_r_residual() {
        let f = ro(1.0, 1.0);
        let g = extend_general_r(&f, 2, 3.0, 10.0).unwrap();
        assert!(g.riccati_residual(&f.check_grid(300)) < 1e-9);
        let (_, vp) = partner_potentials(&f.superpotential(2).unwrap());
        for r in f.check_grid(100) {
            let dev = g.pair.v_tilde_plus.value(r) - vp.value(r) - 3.0;
            assert!(dev.abs() <= 1e-7 * (1.0 + vp.value(r).abs()));
        }
    }

    #[test]
    fn dpt_is_rejected() {
        let f = Family::TrigDpt(crate::catalog::TrigDpt::new(1.0, 1.0).unwrap());
        assert!(matches!(extend_general_r(&f, 2, 1.0, 1.0), Err(Error::Config(_))));
    }
}
