//! Acceptance suite: one line per criterion, findings indented below it.
//!
//! Runs as a plain binary (`harness = false`) so the criterion lines are
//! printed in order and survive output capture.

use std::process::ExitCode;

use nalgebra::DMatrix;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rayon::prelude::*;

use isoshift::catalog::{partner_potentials, si_pair_check, si_pair_check_family_tau};
use isoshift::deform::{extend_general_r, w0_certification, Process};
use isoshift::eop::{eigenfunction, eop_eval, gram_matrix, zero_census};
use isoshift::polyengine::{real_zeros, Polynomial};
use isoshift::spectral::{classify_regularity, compare_levels, schrodinger_residual, solve_bound_states, Regularity};
use isoshift::{
    Deformation, EopSpec, Family, Function1D, Grid, JacobiSpec, LaguerreSpec, RadialOscillator, Series, TrigDpt,
};

struct Outcome {
    pass: bool,
    summary: String,
    findings: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>) -> Self {
        Self { pass, summary: summary.into(), findings: Vec::new() }
    }

    fn finding(mut self, f: impl Into<String>) -> Self {
        self.findings.push(f.into());
        self
    }
}

fn ro(omega: f64, ell: f64) -> Family {
    Family::RadialOscillator(RadialOscillator::new(omega, ell).unwrap())
}

fn ro_params(omega: f64, ell: f64) -> RadialOscillator {
    RadialOscillator::new(omega, ell).unwrap()
}

fn dpt(a: f64, b: f64) -> Family {
    Family::TrigDpt(TrigDpt::new(a, b).unwrap())
}

const RO_SWEEP: [(f64, f64); 3] = [(1.0, 1.0), (2.0, 0.5), (0.5, 3.0)];

/// The undeformed partner that the shifted partner should reproduce.
fn source_partner(d: &Deformation) -> Function1D {
    let (vm, vp) = partner_potentials(&d.w0);
    match d.process {
        Process::First => vp,
        Process::Second => vm,
    }
}

/// Check points at least `gap` (fraction of the check interval) from a pole.
fn points_away_from_poles(d: &Deformation, n: usize, gap: f64) -> Vec<f64> {
    let iv = d.family.check_interval();
    let guard = gap * (iv.hi - iv.lo);
    d.check_points(n)
        .into_iter()
        .filter(|x| d.phi.distance_to_singularity(*x) > guard)
        .collect()
}

fn criterion_1() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut worst_near_pole: f64 = 0.0;
    let mut cells = 0;
    let mut r_ok = true;
    for (om, l) in RO_SWEEP {
        for k in 1..=3u8 {
            for m in 0..=4usize {
                let d = Deformation::new(ro(om, l), k, m).unwrap();
                let pair = match d.extend() {
                    Ok(p) => p,
                    Err(e) => return Outcome::new(false, format!("extend failed at ω={om} ℓ={l} k={k} m={m}: {e}")),
                };
                if k == 2 {
                    r_ok &= d.shift == 2.0 * m as f64 * om;
                }
                let src = source_partner(&d);
                let dev = |pts: &[f64]| {
                    pts.iter()
                        .map(|&x| (pair.shifted_partner().value(x) - src.value(x) - d.shift).abs())
                        .fold(0.0, f64::max)
                        / (1.0 + d.shift.abs())
                };
                worst = worst.max(dev(&points_away_from_poles(&d, 400, 1e-3)));
                worst_near_pole = worst_near_pole.max(crate_scaled_shift(&d, &pair));
                cells += 1;
            }
        }
    }
    let pass = worst <= 1e-10 && worst_near_pole <= 1e-10 && r_ok;
    Outcome::new(
        pass,
        format!(
            "partner shift over {cells} cells: max |Ṽ_shifted − V_source − R|/(1+|R|) = {worst:.2e}; \
             scaled near poles {worst_near_pole:.2e}; R = 2mω on branch 2: {r_ok}"
        ),
    )
}

fn crate_scaled_shift(d: &Deformation, pair: &isoshift::ExtensionPair) -> f64 {
    isoshift::deform::partner_shift_deviation(d, pair, &d.check_points(400))
}

fn criterion_2() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut worst_scaled: f64 = 0.0;
    for (om, l) in RO_SWEEP {
        for k in 1..=3u8 {
            for m in 0..=4usize {
                let d = Deformation::new(ro(om, l), k, m).unwrap();
                let sign = if d.process == Process::First { 1.0 } else { -1.0 };
                for x in points_away_from_poles(&d, 400, 1e-3) {
                    let p = d.phi.jet(x);
                    let w = d.w0.value(x);
                    let res = p.value() * p.value() + 2.0 * w * p.value() + sign * p.d(1) - d.shift;
                    worst = worst.max(res.abs() / (1.0 + d.shift.abs()));
                }
                worst_scaled = worst_scaled.max(d.riccati_residual(&d.check_points(400)));
            }
        }
    }
    Outcome::new(
        worst <= 1e-9 && worst_scaled <= 1e-9,
        format!("Riccati residual |φ² + 2w₀φ ± φ′ − R|/(1+|R|) = {worst:.2e}; scaled at all check points {worst_scaled:.2e}"),
    )
}

fn quesne_m1(om: f64, l: f64, r: f64) -> f64 {
    let q = om * r * r + 2.0 * l + 1.0;
    0.25 * om * om * r * r + l * (l + 1.0) / (r * r) + (2.0 * om * om * r * r + 4.0 * om * l - 2.0 * om) / q
        + 8.0 * om * om * r * r / (q * q)
        + (l - 0.5) * om
}

fn criterion_3() -> Outcome {
    let mut worst: f64 = 0.0;
    for (om, l) in RO_SWEEP {
        let f = ro(om, l);
        let pair = Deformation::new(f, 2, 1).unwrap().extend().unwrap();
        for r in f.check_grid(400) {
            let want = quesne_m1(om, l, r);
            worst = worst.max((pair.v_tilde_minus.value(r) - want).abs() / want.abs());
        }
    }
    Outcome::new(worst <= 1e-10, format!("branch 2, m = 1 against the known closed form: max relative deviation {worst:.2e}"))
}

fn criterion_4() -> Outcome {
    let f = ro(1.0, 1.0);
    let (vm0, _) = partner_potentials(&f.superpotential(2).unwrap());
    let mut worst: f64 = 0.0;
    let mut shifts = Vec::new();
    let mut shift_ok = true;
    for m in 1..=3usize {
        let d = Deformation::new(f, 2, m).unwrap();
        let pair = d.extend().unwrap();
        let grid = Grid::default_for(&f, 6, m, 8000).unwrap();
        let a = solve_bound_states(pair.extension(), &grid, 6).unwrap();
        let b = solve_bound_states(&vm0, &grid, 6).unwrap();
        let rep = compare_levels(&a.eigenvalues, &b.eigenvalues);
        worst = worst.max(rep.max_deviation);
        shift_ok &= (rep.shift_estimate - d.shift).abs() <= 1e-4;
        shifts.push(format!("{:.6}", rep.shift_estimate));
    }
    Outcome::new(
        worst <= 1e-4 && shift_ok,
        format!(
            "L1 m = 1..3 vs V⁻, 6 levels, 8000 + 16001 nodes: max deviation {worst:.2e}, shifts [{}] (R = 2mω)",
            shifts.join(", ")
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut worst_ro: f64 = 0.0;
    for (om, l) in RO_SWEEP {
        let f = ro(om, l);
        let (vm, _) = partner_potentials(&f.superpotential(1).unwrap());
        let grid = Grid::default_for(&f, 6, 0, 4000).unwrap();
        let levels = solve_bound_states(&vm, &grid, 6).unwrap().eigenvalues;
        for (n, e) in levels.iter().enumerate() {
            worst_ro = worst_ro.max((e - 2.0 * n as f64 * om).abs());
        }
    }
    let mut worst_dpt: f64 = 0.0;
    let mut literal_gap: f64 = 0.0;
    for (a, b) in [(1.0, 1.0), (1.5, 0.8), (2.0, 3.0)] {
        let f = dpt(a, b);
        let grid = Grid::default_for(&f, 6, 0, 4000).unwrap();
        for k in [1u8, 4] {
            let br = f.branch(k).unwrap();
            let (vm, _) = partner_potentials(&f.superpotential(k).unwrap());
            let levels = solve_bound_states(&vm, &grid, 6).unwrap().eigenvalues;
            for (n, e) in levels.iter().enumerate() {
                let want = (a + b + 2.0 + 2.0 * n as f64).powi(2) - br.factorization_energy;
                worst_dpt = worst_dpt.max((e - want).abs());
                if k == 1 {
                    let literal = (a + b + 2.0 * n as f64).powi(2) - br.factorization_energy;
                    literal_gap = literal_gap.max((e - literal).abs());
                }
            }
        }
    }
    Outcome::new(
        worst_ro <= 1e-4 && worst_dpt <= 1e-4,
        format!(
            "RO V⁻ = 2nω for n ≤ 5: max error {worst_ro:.2e}; DPT V⁻ on (A+B+2+2n)² − E_k ladders (k = 1, 4): max error {worst_dpt:.2e}"
        ),
    )
    .finding(format!(
        "the (A+B+2n)² − (A+B)² ladder misses the branch 1 spectrum by up to {literal_gap:.3}: it is the ladder with the τ shift A,B → A+1,B+1 omitted"
    ))
}

fn criterion_6() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    let mut skipped = Vec::new();
    for series in [Series::L1, Series::L3] {
        for m in 0..=2usize {
            let p = ro_params(1.0, 1.0);
            let d = series.deformation(p, m).unwrap();
            if !d.is_regular() {
                skipped.push(format!("{series:?} m = {m}"));
                continue;
            }
            let pair = d.extend().unwrap();
            let samples = d.check_points(50);
            for n in 0..=3 {
                let (psi, e) = eigenfunction(&EopSpec::new(series, n, m, p)).unwrap();
                let r = schrodinger_residual(&psi, e, pair.extension(), &samples);
                worst = worst.max(if r.degenerate { f64::INFINITY } else { r.max_residual });
                cases += 1;
            }
        }
    }
    let mut out = Outcome::new(
        worst <= 1e-6,
        format!("closed-form ψ̃ (L1, L3; n ≤ 3, m ≤ 2; {cases} regular cases): max relative residual {worst:.2e}"),
    );
    for s in skipped {
        out = out.finding(format!("{s} is singular and not tested"));
    }
    out
}

fn criterion_7() -> Outcome {
    let p = ro_params(1.0, 1.0);
    let mut worst: f64 = 0.0;
    let mut tails: f64 = 0.0;
    for (series, m) in [(Series::L1, 1usize), (Series::L1, 2), (Series::L3, 2)] {
        let g = gram_matrix(series, m, p, 8).unwrap();
        worst = worst.max(g.max_normalized_offdiag);
        tails = tails.max(g.tail_bound);
    }
    Outcome::new(
        worst <= 1e-8,
        format!("Gram matrices L1 m = 1, 2 and L3 m = 2, n ≤ 8: max normalized off-diagonal {worst:.2e} (tail bound {tails:.1e})"),
    )
}

fn criterion_8() -> Outcome {
    let p = ro_params(1.0, 1.0);
    let mut bad = Vec::new();
    let mut outside_ok = true;
    for m in 0..=2usize {
        for n in 0..=5usize {
            let c = zero_census(&EopSpec::new(Series::L1, n, m, p)).unwrap();
            if c.inside != n || c.flagged {
                bad.push(format!("n={n} m={m}: {} inside", c.inside));
            }
            outside_ok &= c.outside() == m;
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "L1 zero census n ≤ 5, m ≤ 2: interior count = n in every case: {}; m zeros outside: {outside_ok}",
            bad.is_empty()
        ),
    )
}

/// W₀ with both log-derivative terms sign-flipped.
fn w0_flipped(om: f64, l: f64, m: usize, r: f64) -> f64 {
    let a = l - 0.5;
    let y = 0.5 * om * r * r;
    let lag = |n: usize, al: f64| LaguerreSpec::new(n, al).eval(-y);
    let (r1, r2) = if m == 0 {
        (0.0, 0.0)
    } else {
        (lag(m - 1, a + 1.0) / lag(m, a), lag(m - 1, a + 2.0) / lag(m, a + 1.0))
    };
    0.5 * om * r - (l + 1.0) / r - om * r * (r1 - r2)
}

fn criterion_9() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut flipped: f64 = 0.0;
    for (om, l) in [(1.0, 1.0), (2.0, 0.5)] {
        let f = ro(om, l);
        for m in 0..=3usize {
            let res = match w0_certification(&f, m, 400) {
                Ok(r) => r,
                Err(e) => return Outcome::new(false, format!("W₀ certification failed at m = {m}: {e}")),
            };
            worst = worst.max(res.max());
            if m > 0 {
                let w0 = isoshift::deform::w0_explicit(&f, m).unwrap();
                for r in f.check_grid(100) {
                    flipped = flipped.max((w0_flipped(om, l, m, r) - w0.value(r)).abs());
                }
            }
        }
    }
    Outcome::new(
        worst <= 1e-9,
        format!("W₀² ∓ W₀′ identities, W₀ = −(log ψ̃₀)′ and ξ = φ − (log v)′ for m ≤ 3: max residual {worst:.2e}"),
    )
    .finding(format!(
        "the W₀ closed form with both log-derivative terms sign-flipped deviates by up to {flipped:.3}; the identities hold with E₀ = ω(2ℓ+1) + 2mω on the right-hand side"
    ))
}

fn criterion_10() -> Outcome {
    let mut bitwise = true;
    let mut cells = 0;
    let mut families: Vec<Family> = RO_SWEEP.iter().map(|&(o, l)| ro(o, l)).collect();
    families.extend([dpt(1.0, 1.0), dpt(1.5, 0.8)]);
    for f in families {
        let ks: Vec<u8> = if f.is_oscillator() { vec![1, 2, 3] } else { vec![1, 2, 3, 4] };
        for k in ks {
            let d = Deformation::new(f, k, 0).unwrap();
            let pair = d.extend().unwrap();
            let (vm, vp) = partner_potentials(&d.w0);
            for x in f.check_grid(400) {
                bitwise &= pair.v_tilde_minus.value(x).to_bits() == vm.value(x).to_bits();
                bitwise &= pair.v_tilde_plus.value(x).to_bits() == vp.value(x).to_bits();
            }
            cells += 1;
        }
    }
    let mut ratio_spread: f64 = 0.0;
    for (om, l) in RO_SWEEP {
        let p = ro_params(om, l);
        for n in 0..=5usize {
            let spec = EopSpec::new(Series::L1, n, 0, p);
            let lag = LaguerreSpec::new(n, l + 0.5);
            let ratios: Vec<f64> = ro(om, l)
                .check_grid(200)
                .into_iter()
                .filter_map(|r| {
                    let den = lag.eval(0.5 * om * r * r);
                    (den.abs() > 1e-3).then(|| eop_eval(&spec, r).unwrap() / den)
                })
                .collect();
            let r0 = ratios[0];
            for q in &ratios {
                ratio_spread = ratio_spread.max((q - r0).abs() / r0.abs());
            }
        }
    }
    Outcome::new(
        bitwise && ratio_spread <= 1e-10,
        format!("m = 0 over {cells} extensions: Ṽ∓ = V∓ bitwise: {bitwise}; P̃_{{n,0}}/L_n^(ℓ+½) spread {ratio_spread:.2e}"),
    )
}

fn criterion_11() -> Outcome {
    let mut pole_err: f64 = 0.0;
    let mut singular_ok = true;
    for om in [1.0, 2.0, 0.5] {
        let rep = classify_regularity(&ro(om, 0.2), 1, 1).unwrap();
        match rep.regularity {
            Regularity::Singular { points } if points.len() == 1 => {
                pole_err = pole_err.max((points[0] - (1.4f64 / om).sqrt()).abs());
            }
            _ => singular_ok = false,
        }
    }
    let mut l1_regular = true;
    for l in [0.0, 0.5, 1.0, 3.0] {
        for m in 0..=6usize {
            l1_regular &= classify_regularity(&ro(1.0, l), 2, m).unwrap().is_regular();
        }
    }
    let mut out = Outcome::new(
        singular_ok && pole_err <= 1e-8 && l1_regular,
        format!(
            "L3 m = 1, ℓ = 0.2 singular with pole at √(1.4/ω): {singular_ok}, error {pole_err:.1e}; L1 regular for m ≤ 6, ℓ ∈ {{0, 0.5, 1, 3}}: {l1_regular}"
        ),
    );
    for l in [0.2, 0.7, 1.2, 1.7, 2.2] {
        for m in 1..=6usize {
            let rep = classify_regularity(&ro(1.0, l), 1, m).unwrap();
            if let Some(k) = rep.klh {
                if !k.agrees {
                    out = out.finding(format!(
                        "KLH statement vs scan at m = {m}, α = {:.2}: statement predicts a negative zero: {}, scan finds {}",
                        k.alpha, k.statement_predicts_negative_zero, k.numeric_negative_zeros
                    ));
                }
            }
        }
    }
    out
}

fn criterion_12() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut literal: f64 = 0.0;
    for (om, l) in RO_SWEEP {
        let f = ro(om, l);
        worst = worst.max(si_pair_check(&f, 1, 4, &f.check_grid(400)).unwrap());
    }
    for (a, b) in [(1.0, 1.0), (1.5, 0.8), (2.0, 3.0)] {
        let f = dpt(a, b);
        let g = f.check_grid(400);
        worst = worst.max(si_pair_check(&f, 1, 4, &g).unwrap());
        worst = worst.max(si_pair_check(&f, 2, 3, &g).unwrap());
        literal = literal.max(si_pair_check_family_tau(&f, 2, 3, &g).unwrap());
    }
    Outcome::new(worst <= 1e-12, format!("SI pairing residual for RO (1,4), DPT (1,4), (2,3): {worst:.2e}")).finding(format!(
        "DPT (2,3) with the family map A,B → A+1,B+1 leaves a residual of {literal:.3}; the pairing holds with A,B → A−1,B+1"
    ))
}

fn criterion_13() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut wrong_sign: f64 = 0.0;
    let mut iso: f64 = 0.0;
    let mut iso_cases = 0;
    for (a, b) in [(1.0, 1.0), (1.5, 0.8)] {
        let f = dpt(a, b);
        for k in [2u8, 3] {
            let br = f.branch(k).unwrap();
            let (nu, mu) = (br.a - 0.5, br.b - 0.5);
            for n in 1..=2usize {
                let nf = n as f64;
                let kk = -4.0 * nf * (nf + nu + mu + 1.0);
                let d = Deformation::new(f, k, n).unwrap();
                let pair = d.extend().unwrap();
                let (_, vp) = partner_potentials(&d.w0);
                for x in points_away_from_poles(&d, 400, 1e-3) {
                    let dv = pair.v_tilde_plus.value(x) - vp.value(x);
                    worst = worst.max((dv - kk).abs());
                    wrong_sign = wrong_sign.max((dv + kk).abs());
                }
                if d.is_regular() && d.endpoint_zero().is_none() {
                    let grid = Grid::default_for(&f, 6, n, 4000).unwrap();
                    let (vm, _) = partner_potentials(&d.w0);
                    let ext = solve_bound_states(pair.extension(), &grid, 6).unwrap();
                    let src = solve_bound_states(&vm, &grid, 6).unwrap();
                    iso = iso.max(compare_levels(&ext.eigenvalues, &src.eigenvalues).max_deviation);
                    iso_cases += 1;
                }
            }
        }
    }
    Outcome::new(
        worst <= 1e-10 && iso <= 1e-4,
        format!(
            "DPT branches 2, 3, N ≤ 2: |Ṽ⁺ − V⁺ − K| with K = −4N(N+ν+μ+1): {worst:.2e}; isospectrality with V⁻ over {iso_cases} regular cases: {iso:.2e}"
        ),
    )
    .finding(format!(
        "with K = +4N(N+ν+μ+1) the shift identity fails by up to {wrong_sign:.3}; the Riccati residual fixes the sign"
    ))
}

fn criterion_14() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut exact = true;
    for (om, l) in RO_SWEEP {
        let f = ro(om, l);
        let iv = f.check_interval();
        let poly = Deformation::new(f, 2, 1).unwrap().extend().unwrap();
        let sol = extend_general_r(&f, 2, 2.0 * om, iv.hi).unwrap();
        for r in f.check_grid(400) {
            let want = poly.v_tilde_minus.value(r);
            worst = worst.max((sol.pair.v_tilde_minus.value(r) - want).abs() / (1.0 + want.abs()));
        }
        let zero = extend_general_r(&f, 2, 0.0, iv.hi).unwrap();
        let (_, vp) = partner_potentials(&f.superpotential(2).unwrap());
        for r in f.check_grid(400) {
            exact &= zero.pair.v_tilde_plus.value(r) == vp.value(r);
        }
    }
    Outcome::new(
        worst <= 1e-7 && exact,
        format!("general R: R = 2ω against the m = 1 polynomial path {worst:.2e}; R = 0 gives Ṽ⁺ = V⁺ exactly: {exact}"),
    )
}

fn criterion_15() -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 500, failure_persistence: None, ..Config::default() });
    let laguerre = runner.run(&(1usize..14, -0.95f64..6.0, 0.0f64..25.0), |(n, a, x)| {
        let l = |k: usize| LaguerreSpec::new(k, a).eval(x);
        let scale = 1.0 + (2.0 * n as f64 + 1.0 + a + x.abs()) * l(n).abs() + (n as f64 + a).abs() * l(n - 1).abs();
        let rec = (n as f64 + 1.0) * l(n + 1) - (2.0 * n as f64 + 1.0 + a - x) * l(n) + (n as f64 + a) * l(n - 1);
        prop_assert!(rec.abs() <= 1e-12 * scale, "recurrence n={} a={} x={}", n, a, x);
        let s = LaguerreSpec::new(n, a);
        let (u, du, d2u) = (s.eval(x), s.deriv_k(1, x), s.deriv_k(2, x));
        let ode = x * d2u + (a + 1.0 - x) * du + n as f64 * u;
        let scale = 1.0 + (x * d2u).abs() + ((a + 1.0 - x) * du).abs() + (n as f64 * u).abs();
        prop_assert!(ode.abs() <= 1e-11 * scale, "Laguerre ODE n={} a={} x={}", n, a, x);
        Ok(())
    });
    let mut runner = TestRunner::new(Config { cases: 500, failure_persistence: None, ..Config::default() });
    let jacobi = runner.run(&(1usize..12, -0.95f64..4.0, -0.95f64..4.0, -1.0f64..1.0), |(n, nu, mu, y)| {
        let s = JacobiSpec::new(n, nu, mu);
        let (u, du, d2u) = (s.eval(y), s.deriv_k(1, y), s.deriv_k(2, y));
        let nf = n as f64;
        let c = (mu - nu - (nu + mu + 2.0) * y) * du;
        let ode = (1.0 - y * y) * d2u + c + nf * (nf + nu + mu + 1.0) * u;
        let scale = 1.0 + ((1.0 - y * y) * d2u).abs() + c.abs() + (nf * (nf + nu + mu + 1.0) * u).abs();
        prop_assert!(ode.abs() <= 1e-11 * scale, "Jacobi ODE n={} nu={} mu={} y={}", n, nu, mu, y);
        Ok(())
    });
    let mut runner = TestRunner::new(Config { cases: 100, failure_persistence: None, ..Config::default() });
    let companion = runner.run(&(1usize..10, -0.9f64..4.0), |(n, a)| {
        let spec = LaguerreSpec::new(n, a);
        let coeffs = spec.monomial().coeffs;
        let lead = coeffs[n];
        let mut c = DMatrix::<f64>::zeros(n, n);
        for i in 1..n {
            c[(i, i - 1)] = 1.0;
        }
        for i in 0..n {
            c[(i, n - 1)] = -coeffs[i] / lead;
        }
        let mut want: Vec<f64> = c.complex_eigenvalues().iter().map(|z| z.re).collect();
        want.sort_by(f64::total_cmp);
        let hi = spec.monomial().root_bound() + 1.0;
        let got = real_zeros(&Polynomial::Laguerre(spec), 0.0, hi).unwrap().zeros;
        prop_assert_eq!(got.len(), n);
        for (g, w) in got.iter().zip(&want) {
            prop_assert!((g - w).abs() <= 1e-7 * (1.0 + w.abs()), "zero {} vs companion {} (n={}, a={})", g, w, n, a);
        }
        Ok(())
    });
    let errs: Vec<String> = [
        laguerre.err().map(|e| format!("Laguerre: {e}")),
        jacobi.err().map(|e| format!("Jacobi: {e}")),
        companion.err().map(|e| format!("companion: {e}")),
    ]
    .into_iter()
    .flatten()
    .collect();
    Outcome::new(
        errs.is_empty(),
        if errs.is_empty() {
            "500 draws each: Laguerre recurrence and ODE, Jacobi ODE; 100 companion-matrix zero checks".to_string()
        } else {
            errs.join("; ")
        },
    )
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("partner-shift identity", criterion_1),
        ("Riccati residual", criterion_2),
        ("m = 1 closed-form regression", criterion_3),
        ("isospectrality (L1)", criterion_4),
        ("classical spectrum anchor", criterion_5),
        ("eigenfunction residual", criterion_6),
        ("orthogonality", criterion_7),
        ("zero census", criterion_8),
        ("W0 certification", criterion_9),
        ("m = 0 reductions", criterion_10),
        ("regularity classifier", criterion_11),
        ("SI pairing", criterion_12),
        ("DPT extension", criterion_13),
        ("general-R interpolation", criterion_14),
        ("polynomial engine properties", criterion_15),
    ];
    let outcomes: Vec<Outcome> = criteria
        .par_iter()
        .map(|(_, f)| std::panic::catch_unwind(f).unwrap_or_else(|_| Outcome::new(false, "panicked")))
        .collect();
    let mut failed = 0;
    for (i, ((name, _), o)) in criteria.iter().zip(&outcomes).enumerate() {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag}  {name}: {}", i + 1, o.summary);
        for f in &o.findings {
            println!("              finding: {f}");
        }
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", outcomes.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
