//! Independent numerical certification: a finite-difference bound-state
//! solver, Schrödinger and QHJ residuals, isospectrality comparison and the
//! regularity classifier.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::catalog::{Family, DPT_EPS};
use crate::deform::{Deformation, Seed};
use crate::error::{Error, Result};
use crate::function::Function1D;
use crate::polyengine::{real_zeros, Polynomial};

/// Uniform grid of `n_points` interior nodes with Dirichlet ends at lo, hi.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub n_points: usize,
    /// True when `hi` is a singular wall of the potential rather than a
    /// truncation of an infinite domain.
    pub wall_at_hi: bool,
}

impl Grid {
    pub fn new(lo: f64, hi: f64, n_points: usize) -> Result<Self> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Config(format!("grid needs finite lo < hi, got ({lo}, {hi})")));
        }
        if n_points < 64 {
            return Err(Error::Config(format!("grid needs at least 64 points, got {n_points}")));
        }
        Ok(Self { lo, hi, n_points, wall_at_hi: false })
    }

    pub fn with_wall_at_hi(mut self) -> Self {
        self.wall_at_hi = true;
        self
    }

    pub fn spacing(&self) -> f64 {
        (self.hi - self.lo) / (self.n_points + 1) as f64
    }

    pub fn nodes(&self) -> Vec<f64> {
        let h = self.spacing();
        (1..=self.n_points).map(|i| self.lo + h * i as f64).collect()
    }

    /// The grid with exactly half the spacing.
    pub fn refined(&self) -> Self {
        Self { n_points: 2 * self.n_points + 1, ..*self }
    }

    /// Default solver grid for `k` states of an extension with index `m`.
    pub fn default_for(family: &Family, k: usize, m: usize, n_points: usize) -> Result<Self> {
        match family {
            Family::RadialOscillator(p) => {
                let s = p.omega.sqrt();
                let hi = 16.0 / s * (1.0 + ((k + m) as f64).sqrt());
                Grid::new(1e-8 / s, hi, n_points)
            }
            Family::TrigDpt(_) => Ok(Grid::new(DPT_EPS, FRAC_PI_2 - DPT_EPS, n_points)?.with_wall_at_hi()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralReport {
    /// Richardson-extrapolated eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    pub boundary_decay_ok: Vec<bool>,
    /// |E_extrapolated − E_fine| per state.
    pub grid_convergence: Vec<f64>,
    pub coarse: Vec<f64>,
    pub fine: Vec<f64>,
}

impl SpectralReport {
    pub fn all_converged(&self) -> bool {
        self.boundary_decay_ok.iter().all(|b| *b)
    }
}

fn sample_potential(v: &Function1D, grid: &Grid) -> Result<Vec<f64>> {
    grid.nodes()
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let val = v.value(x);
            if val.is_finite() {
                Ok(val)
            } else {
                Err(Error::SingularPotential { node: i, x })
            }
        })
        .collect()
}

/// Number of eigenvalues of the tridiagonal matrix below `lambda`.
fn sturm_count(diag: &[f64], off2: f64, lambda: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for (i, d) in diag.iter().enumerate() {
        q = d - lambda - if i == 0 { 0.0 } else { off2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (d.abs() + lambda.abs() + 1.0);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn bisect_eigenvalue(diag: &[f64], off2: f64, j: usize, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..300 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
            break;
        }
        if sturm_count(diag, off2, mid) > j {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Solves (T − λ) x = b for tridiagonal T with constant off-diagonal, using
/// Gaussian elimination with partial pivoting.
fn tridiagonal_solve(diag: &[f64], off: f64, lambda: f64, rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    // Rows hold (sub, main, sup, sup2) after pivoting.
    let mut main: Vec<f64> = diag.iter().map(|d| d - lambda).collect();
    let mut sup = vec![off; n];
    let mut sup2 = vec![0.0; n];
    let mut sub = vec![off; n];
    let mut b = rhs.to_vec();
    let tiny = f64::EPSILON * diag.iter().fold(1.0f64, |a, d| a.max(d.abs()));
    for i in 0..n.saturating_sub(1) {
        if sub[i + 1].abs() > main[i].abs() {
            // Swap rows i and i+1.
            let (m0, s0, t0) = (main[i], sup[i], sup2[i]);
            main[i] = sub[i + 1];
            sup[i] = main[i + 1];
            sup2[i] = if i + 1 < n - 1 { sup[i + 1] } else { 0.0 };
            sub[i + 1] = m0;
            main[i + 1] = s0;
            sup[i + 1] = t0;
            b.swap(i, i + 1);
        }
        if main[i].abs() < tiny {
            main[i] = tiny;
        }
        let f = sub[i + 1] / main[i];
        main[i + 1] -= f * sup[i];
        if i + 1 < n - 1 {
            sup[i + 1] -= f * sup2[i];
        }
        b[i + 1] -= f * b[i];
    }
    if main[n - 1].abs() < tiny {
        main[n - 1] = tiny;
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = b[i];
        if i + 1 < n {
            s -= sup[i] * x[i + 1];
        }
        if i + 2 < n {
            s -= sup2[i] * x[i + 2];
        }
        x[i] = s / main[i];
    }
    x
}

/// Lowest `k` eigenpairs of −d²/dx² + V on a single grid (no extrapolation).
pub fn solve_on_grid(v: &Function1D, grid: &Grid, k: usize) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let vals = sample_potential(v, grid)?;
    let h = grid.spacing();
    let inv = 1.0 / (h * h);
    let diag: Vec<f64> = vals.iter().map(|v| 2.0 * inv + v).collect();
    let off = -inv;
    let off2 = off * off;
    let lo = diag.iter().fold(f64::INFINITY, |a, d| a.min(*d)) - 2.0 * inv;
    let hi = diag.iter().fold(f64::NEG_INFINITY, |a, d| a.max(*d)) + 2.0 * inv;
    let k = k.min(diag.len());
    let mut evals = Vec::with_capacity(k);
    let mut evecs = Vec::with_capacity(k);
    for j in 0..k {
        let lam = bisect_eigenvalue(&diag, off2, j, lo, hi);
        let mut x = vec![1.0; diag.len()];
        let shift = lam + 1e-10 * (1.0 + lam.abs());
        for _ in 0..3 {
            x = tridiagonal_solve(&diag, off, shift, &x);
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            x.iter_mut().for_each(|v| *v /= norm);
        }
        let imax = x
            .iter()
            .enumerate()
            .fold((0, 0.0f64), |acc, (i, v)| if v.abs() > acc.1 { (i, v.abs()) } else { acc })
            .0;
        if x[imax] < 0.0 {
            x.iter_mut().for_each(|v| *v = -*v);
        }
        evals.push(lam);
        evecs.push(x);
    }
    Ok((evals, evecs))
}

/// Lowest `k` levels, Richardson-extrapolated from grids n and 2n+1.
pub fn solve_bound_states(v: &Function1D, grid: &Grid, k: usize) -> Result<SpectralReport> {
    let (coarse, _) = solve_on_grid(v, grid, k)?;
    let (fine, vecs) = solve_on_grid(v, &grid.refined(), k)?;
    let eigenvalues: Vec<f64> = coarse.iter().zip(&fine).map(|(c, f)| (4.0 * f - c) / 3.0).collect();
    let grid_convergence = eigenvalues.iter().zip(&fine).map(|(e, f)| (e - f).abs()).collect();
    let boundary_decay_ok = vecs
        .iter()
        .map(|x| {
            let max = x.iter().fold(0.0f64, |a, v| a.max(v.abs()));
            let last = x.last().copied().unwrap_or(0.0).abs();
            // At a singular wall ψ vanishes as a power of the distance, so
            // only a clear fall-off is required there.
            let tol = if grid.wall_at_hi { 1e-2 } else { 1e-8 };
            last <= tol * max
        })
        .collect();
    Ok(SpectralReport { eigenvalues, boundary_decay_ok, grid_convergence, coarse, fine })
}

/// (E_n − E_{2n+1}) / (E_{2n+1} − E_{4n+3}) for one state; ≈ 4 for O(h²).
pub fn richardson_ratio(v: &Function1D, grid: &Grid, state: usize) -> Result<f64> {
    let g2 = grid.refined();
    let g3 = g2.refined();
    let e1 = solve_on_grid(v, grid, state + 1)?.0[state];
    let e2 = solve_on_grid(v, &g2, state + 1)?.0[state];
    let e3 = solve_on_grid(v, &g3, state + 1)?.0[state];
    Ok((e1 - e2) / (e2 - e3))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsospectralityReport {
    pub shift_estimate: f64,
    pub max_deviation: f64,
    pub levels_a: Vec<f64>,
    pub levels_b: Vec<f64>,
}

/// Least-squares constant shift between the lowest `k` levels of V_a and V_b.
pub fn isospectrality_report(va: &Function1D, vb: &Function1D, grid: &Grid, k: usize) -> Result<IsospectralityReport> {
    let a = solve_bound_states(va, grid, k)?.eigenvalues;
    let b = solve_bound_states(vb, grid, k)?.eigenvalues;
    Ok(compare_levels(&a, &b))
}

pub fn compare_levels(a: &[f64], b: &[f64]) -> IsospectralityReport {
    let n = a.len().min(b.len());
    let diffs: Vec<f64> = (0..n).map(|i| a[i] - b[i]).collect();
    let shift = if n == 0 { 0.0 } else { diffs.iter().sum::<f64>() / n as f64 };
    let dev = diffs.iter().map(|d| (d - shift).abs()).fold(0.0, f64::max);
    IsospectralityReport {
        shift_estimate: shift,
        max_deviation: dev,
        levels_a: a[..n].to_vec(),
        levels_b: b[..n].to_vec(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ResidualReport {
    pub max_residual: f64,
    /// Samples skipped because ψ (or V) was not finite or ψ vanished.
    pub skipped: usize,
    /// ψ vanished at every sample.
    pub degenerate: bool,
}

/// ψ″ from 5-point differences of the analytic ψ′ with step refinement.
fn second_derivative(dpsi: &Function1D, x: f64) -> f64 {
    let dom = dpsi.domain();
    let mut h = 0.01 * (1.0 + x.abs());
    h = h.min((x - dom.lo) / 4.0);
    if dom.hi.is_finite() {
        h = h.min((dom.hi - x) / 4.0);
    }
    let est = |h: f64| {
        (dpsi.value(x - 2.0 * h) - 8.0 * dpsi.value(x - h) + 8.0 * dpsi.value(x + h) - dpsi.value(x + 2.0 * h))
            / (12.0 * h)
    };
    let mut prev = est(h);
    let mut best = prev;
    let mut best_change = f64::INFINITY;
    for _ in 0..8 {
        h *= 0.5;
        let cur = est(h);
        let change = (cur - prev).abs();
        if change < best_change {
            best_change = change;
            best = cur;
        }
        prev = cur;
    }
    best
}

/// max |−ψ″ + (V − E)ψ| / ((|E| + 1) max|ψ|) over the samples.
pub fn schrodinger_residual(psi: &Function1D, e: f64, v: &Function1D, samples: &[f64]) -> ResidualReport {
    let dpsi = psi.derivative_fn();
    let mut skipped = 0;
    let mut rows = Vec::with_capacity(samples.len());
    for &x in samples {
        let (p, vv) = (psi.value(x), v.value(x));
        let d2 = second_derivative(&dpsi, x);
        if !(p.is_finite() && vv.is_finite() && d2.is_finite()) {
            skipped += 1;
            continue;
        }
        rows.push((-d2 + (vv - e) * p, p));
    }
    let max_psi = rows.iter().fold(0.0f64, |a, r| a.max(r.1.abs()));
    if max_psi == 0.0 {
        return ResidualReport { max_residual: 0.0, skipped, degenerate: true };
    }
    let den = (e.abs() + 1.0) * max_psi;
    let max_residual = rows.iter().map(|r| r.0.abs() / den).fold(0.0, f64::max);
    ResidualReport { max_residual, skipped, degenerate: false }
}

/// max |Q² − Q′ − V + E| / (1 + |V − E| + Q²) with Q = −ψ′/ψ.
pub fn qhj_residual(psi: &Function1D, e: f64, v: &Function1D, samples: &[f64]) -> ResidualReport {
    let mut skipped = 0;
    let mut max_residual: f64 = 0.0;
    for &x in samples {
        let j = psi.jet(x);
        if j.value() == 0.0 || !j.value().is_finite() {
            skipped += 1;
            continue;
        }
        let q = -(j.derivative() / j);
        let (qv, dq) = (q.value(), q.d(1));
        let vv = v.value(x);
        let res = (qv * qv - dq - vv + e).abs() / (1.0 + (vv - e).abs() + qv * qv);
        if res.is_finite() {
            max_residual = max_residual.max(res);
        } else {
            skipped += 1;
        }
    }
    ResidualReport { max_residual, skipped, degenerate: skipped == samples.len() }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Regularity {
    Regular,
    Singular { points: Vec<f64> },
}

/// Comparison of the numeric negative-zero count of a seed L_m^α with the
/// statement "one negative zero iff m is odd and −m − ½ < α < −m".
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct KlhCheck {
    pub m: usize,
    pub alpha: f64,
    pub numeric_negative_zeros: usize,
    pub statement_predicts_negative_zero: bool,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegularityReport {
    pub regularity: Regularity,
    /// Present for oscillator seeds evaluated at −y.
    pub klh: Option<KlhCheck>,
}

impl RegularityReport {
    pub fn is_regular(&self) -> bool {
        self.regularity == Regularity::Regular
    }
}

pub fn klh_statement(m: usize, alpha: f64) -> bool {
    let mf = m as f64;
    m % 2 == 1 && -mf - 0.5 < alpha && alpha < -mf
}

/// Numeric-first regularity of the default extension of branch `k`.
pub fn classify_regularity(family: &Family, k: u8, m: usize) -> Result<RegularityReport> {
    let d = Deformation::new(*family, k, m)?;
    let pts = d.singular_points().to_vec();
    let regularity = if pts.is_empty() {
        Regularity::Regular
    } else {
        Regularity::Singular { points: pts }
    };
    let klh = match d.seed {
        Seed::Laguerre { spec, scale } if scale < 0.0 && m > 0 => {
            let bound = spec.monomial().root_bound() + 1.0;
            let neg = real_zeros(&Polynomial::Laguerre(spec), -bound, 0.0)?.count();
            let predicted = klh_statement(m, spec.alpha);
            Some(KlhCheck {
                m,
                alpha: spec.alpha,
                numeric_negative_zeros: neg,
                statement_predicts_negative_zero: predicted,
                agrees: predicted == (neg > 0),
            })
        }
        _ => None,
    };
    Ok(RegularityReport { regularity, klh })
}
