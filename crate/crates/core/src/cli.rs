//! Command-line front end: `catalog`, `extend`, `certify`, `interpolate`.
//!
//! Exit codes: 0 success, 1 certification or numerical failure, 2 usage or
//! configuration error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{partner_potentials, Branch, Family, RadialOscillator, TrigDpt};
use crate::deform::{extend_general_r, w0_certification, Deformation, Process, W0Residuals};
use crate::eop::{eigenfunction, gram_matrix, zero_census, EopSpec, Series, ZeroCensus};
use crate::error::{Error, Result};
use crate::function::Function1D;
use crate::spectral::{
    compare_levels, schrodinger_residual, solve_bound_states, Grid, IsospectralityReport, RegularityReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "isoshift", version, about = "Rational extensions of shape-invariant potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the four superpotential branches of a family.
    Catalog {
        /// Family name (same as --family).
        #[arg(value_enum)]
        family_pos: Option<FamilyName>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Tabulate V⁻, Ṽ⁻, Ṽ⁺ and eigenfunctions of one extension.
    Extend {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the invariant suite for every (branch, m) cell.
    Certify {
        #[command(flatten)]
        common: CommonArgs,
        /// Omit wall-clock timings so the report is byte-reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Ṽ⁻ for arbitrary deformation constants R (radial oscillator).
    Interpolate {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated R values.
        #[arg(long = "R", value_delimiter = ',', allow_hyphen_values = true)]
        r_values: Vec<f64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum FamilyName {
    RadialOscillator,
    TrigDpt,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args, Debug, Clone, Default)]
pub struct CommonArgs {
    /// JSON file with any of the flag values; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// Branch index or comma-separated list.
    #[arg(long, value_delimiter = ',')]
    pub branch: Vec<u8>,
    /// Hierarchy index or comma-separated list.
    #[arg(long, value_delimiter = ',')]
    pub m: Vec<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub ell: Option<f64>,
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub nmax: Option<i64>,
    /// Output directory; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub grid_points: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub rmax: Option<f64>,
}

/// Contents of a `--config` file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub family: Option<FamilyName>,
    pub branch: Option<Vec<u8>>,
    pub m: Option<Vec<usize>>,
    pub omega: Option<f64>,
    pub ell: Option<f64>,
    #[serde(rename = "A")]
    pub a: Option<f64>,
    #[serde(rename = "B")]
    pub b: Option<f64>,
    pub nmax: Option<i64>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub grid_points: Option<usize>,
    pub rmax: Option<f64>,
    #[serde(rename = "R")]
    pub r_values: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub family: Family,
    pub branches: Vec<u8>,
    pub m_list: Vec<usize>,
    pub n_max: usize,
    pub grid_points: usize,
    pub r_max: Option<f64>,
    #[serde(skip)]
    pub output_dir: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn from_args(args: &CommonArgs, family_pos: Option<FamilyName>) -> Result<(Self, ConfigFile)> {
        let file = match &args.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                serde_json::from_str::<ConfigFile>(&text)
                    .map_err(|e| Error::Config(format!("bad config {}: {e}", path.display())))?
            }
            None => ConfigFile::default(),
        };
        let name = args
            .family
            .or(family_pos)
            .or(file.family)
            .ok_or_else(|| Error::Config("--family is required".into()))?;
        let family = match name {
            FamilyName::RadialOscillator => Family::RadialOscillator(RadialOscillator::new(
                args.omega.or(file.omega).unwrap_or(1.0),
                args.ell.or(file.ell).unwrap_or(1.0),
            )?),
            FamilyName::TrigDpt => Family::TrigDpt(TrigDpt::new(
                args.a.or(file.a).unwrap_or(1.0),
                args.b.or(file.b).unwrap_or(1.0),
            )?),
        };
        let branches = pick_list(&args.branch, &file.branch, || match name {
            FamilyName::RadialOscillator => vec![1, 2, 3],
            FamilyName::TrigDpt => vec![2, 3],
        });
        for k in &branches {
            family.branch(*k)?;
        }
        let m_list = pick_list(&args.m, &file.m, || vec![0, 1, 2, 3]);
        let n_max = args.nmax.or(file.nmax).unwrap_or(4);
        if n_max < 0 {
            return Err(Error::Config(format!("nmax must be >= 0, got {n_max}")));
        }
        let grid_points = args.grid_points.or(file.grid_points).unwrap_or(2000);
        if grid_points < 64 {
            return Err(Error::Config(format!("grid-points must be >= 64, got {grid_points}")));
        }
        let r_max = args.rmax.or(file.rmax);
        if let Some(r) = r_max {
            if !(r > 0.0) || !r.is_finite() {
                return Err(Error::Config(format!("rmax must be positive, got {r}")));
            }
        }
        let cfg = RunConfig {
            family,
            branches,
            m_list,
            n_max: n_max as usize,
            grid_points,
            r_max,
            output_dir: args.out.clone().or(file.out.clone()),
            format: args.format.or(file.format).unwrap_or_default(),
        };
        Ok((cfg, file))
    }

    /// Sample points of output tables.
    pub fn table_points(&self) -> Vec<f64> {
        let iv = self.family.check_interval();
        let hi = match (self.family, self.r_max) {
            (Family::RadialOscillator(_), Some(r)) => r,
            _ => iv.hi,
        };
        let n = self.grid_points;
        let h = (hi - iv.lo) / (n - 1) as f64;
        (0..n).map(|i| iv.lo + h * i as f64).collect()
    }
}

fn pick_list<T: Clone>(flag: &[T], file: &Option<Vec<T>>, default: impl Fn() -> Vec<T>) -> Vec<T> {
    if !flag.is_empty() {
        flag.to_vec()
    } else if let Some(v) = file.as_ref().filter(|v| !v.is_empty()) {
        v.clone()
    } else {
        default()
    }
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Config(_) | Error::DegenerateParameter(_) => EXIT_USAGE,
                _ => EXIT_FAILURE,
            }
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Catalog { family_pos, common } => {
            let (cfg, _) = RunConfig::from_args(&common, family_pos)?;
            cmd_catalog(&cfg)
        }
        Command::Extend { common } => {
            let (cfg, _) = RunConfig::from_args(&common, None)?;
            cmd_extend(&cfg)
        }
        Command::Certify { common, no_timing } => {
            let (cfg, _) = RunConfig::from_args(&common, None)?;
            let report = cmd_certify(&cfg, !no_timing);
            let text = to_json(&report)?;
            emit(&cfg, "certify.json", &text)?;
            match &report.first_failure {
                None => Ok(EXIT_OK),
                Some(f) => {
                    eprintln!("certification failed: {f}");
                    Ok(EXIT_FAILURE)
                }
            }
        }
        Command::Interpolate { common, r_values } => {
            let (cfg, file) = RunConfig::from_args(&common, None)?;
            let rs = if r_values.is_empty() { file.r_values.unwrap_or_default() } else { r_values };
            cmd_interpolate(&cfg, &rs)
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Numerical(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Writes to `<out>/<name>` or to standard output.
fn emit(cfg: &RunConfig, name: &str, text: &str) -> Result<()> {
    match &cfg.output_dir {
        Some(dir) => write_file(dir, name, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| Error::Numerical(format!("stdout: {e}")))
        }
    }
}

fn write_file(dir: &Path, name: &str, text: &str) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::Config(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, text).map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))
}

fn csv_text(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let err = |e: csv::Error| Error::Numerical(format!("csv: {e}"));
    w.write_record(header).map_err(err)?;
    for r in rows {
        w.write_record(r).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Numerical(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Numerical(e.to_string()))
}

fn fmt(x: f64) -> String {
    if x.is_finite() {
        format!("{x}")
    } else {
        String::new()
    }
}

#[derive(Serialize)]
struct CatalogListing {
    family: Family,
    branches: Vec<Branch>,
}

pub fn cmd_catalog(cfg: &RunConfig) -> Result<i32> {
    let listing = CatalogListing {
        family: cfg.family,
        branches: cfg.family.branches(),
    };
    let text = match cfg.format {
        Format::Json => to_json(&listing)?,
        Format::Csv => {
            let header = ["k", "a", "b", "factorization_energy", "v_minus_shift", "susy_kind"]
                .map(String::from)
                .to_vec();
            let rows: Vec<Vec<String>> = listing
                .branches
                .iter()
                .map(|b| {
                    vec![
                        b.k.to_string(),
                        fmt(b.a),
                        fmt(b.b),
                        fmt(b.factorization_energy),
                        fmt(b.v_minus_shift),
                        match b.susy_kind {
                            crate::catalog::SusyKind::Exact => "exact".into(),
                            crate::catalog::SusyKind::Broken => "broken".into(),
                        },
                    ]
                })
                .collect();
            csv_text(&header, &rows)?
        }
    };
    emit(cfg, &format!("catalog.{}", ext(cfg.format)), &text)?;
    Ok(EXIT_OK)
}

fn ext(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Csv => "csv",
    }
}

/// Closed-form series of a default-process cell, if any.
fn series_of(d: &Deformation) -> Option<Series> {
    match (d.family, d.branch.k, d.process) {
        (Family::RadialOscillator(_), 2, Process::First) => Some(Series::L1),
        (Family::RadialOscillator(_), 2, Process::Second) => Some(Series::L2),
        (Family::RadialOscillator(_), 1, Process::First) => Some(Series::L3),
        _ => None,
    }
}

/// ψ̃_n and its energy: the closed form when the cell has one, otherwise
/// the intertwined partner eigenstate.
fn eigenstate(d: &Deformation, n: usize) -> Result<(Function1D, f64)> {
    match (series_of(d), d.family) {
        (Some(s), Family::RadialOscillator(p)) => eigenfunction(&EopSpec::new(s, n, d.m, p)),
        _ => Ok(d.eigenstate(n)),
    }
}

#[derive(Serialize)]
struct ExtendMeta {
    family: Family,
    branch: u8,
    m: usize,
    process: Process,
    series: Option<Series>,
    shift: f64,
    singular_points: Vec<f64>,
    n_max: usize,
    energies: Vec<f64>,
    warning: Option<String>,
}

#[derive(Serialize)]
struct ExtendJson {
    meta: ExtendMeta,
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

pub fn cmd_extend(cfg: &RunConfig) -> Result<i32> {
    let k = cfg.branches[0];
    let m = cfg.m_list[0];
    let d = Deformation::new(cfg.family, k, m)?;
    let pair = d.extend()?;
    let (vm, _) = partner_potentials(&d.w0);
    let xs = cfg.table_points();
    let regular = pair.is_regular();
    let mut states = Vec::new();
    let mut energies = Vec::new();
    if regular {
        for n in 0..=cfg.n_max {
            let (psi, e) = eigenstate(&d, n)?;
            states.push(psi);
            energies.push(e);
        }
    }
    let mut columns = vec!["r".to_string(), "V_minus".into(), "V_tilde_minus".into(), "V_tilde_plus".into()];
    columns.extend((0..states.len()).map(|n| format!("psi_{n}")));
    let rows: Vec<Vec<f64>> = xs
        .iter()
        .map(|&x| {
            let mut row = vec![x, vm.value(x), pair.v_tilde_minus.value(x), pair.v_tilde_plus.value(x)];
            row.extend(states.iter().map(|s| s.value(x)));
            row
        })
        .collect();
    let meta = ExtendMeta {
        family: cfg.family,
        branch: k,
        m,
        process: d.process,
        series: series_of(&d),
        shift: d.shift,
        singular_points: pair.singular_points.clone(),
        n_max: cfg.n_max,
        energies,
        warning: (!regular).then(|| "singular extension: eigenfunction tables skipped".to_string()),
    };
    if let Some(w) = &meta.warning {
        eprintln!("warning: {w}");
    }
    let stem = format!("extend_{}_b{k}_m{m}", cfg.family.name());
    match cfg.format {
        Format::Csv => {
            let body: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|v| fmt(*v)).collect()).collect();
            let table = csv_text(&columns, &body)?;
            emit(cfg, &format!("{stem}.csv"), &table)?;
            if let Some(dir) = &cfg.output_dir {
                write_file(dir, &format!("{stem}.json"), &to_json(&meta)?)?;
            }
        }
        Format::Json => {
            let text = to_json(&ExtendJson { meta, columns, rows })?;
            emit(cfg, &format!("{stem}.json"), &text)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Check {
    Pass { value: f64, tolerance: f64 },
    Fail { value: f64, tolerance: f64, note: Option<String> },
    Skipped { reason: String },
}

impl Check {
    pub fn against(value: f64, tolerance: f64) -> Self {
        if value <= tolerance {
            Check::Pass { value, tolerance }
        } else {
            Check::Fail { value, tolerance, note: None }
        }
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Check::Skipped { reason: reason.into() }
    }

    fn error(e: Error, tolerance: f64) -> Self {
        Check::Fail { value: f64::INFINITY, tolerance, note: Some(e.to_string()) }
    }

    pub fn failed(&self) -> bool {
        matches!(self, Check::Fail { .. })
    }
}

pub const RICCATI_TOL: f64 = 1e-9;
pub const ISOSPECTRAL_TOL: f64 = 1e-4;
pub const GRAM_TOL: f64 = 1e-8;
pub const EIGEN_RESIDUAL_TOL: f64 = 1e-6;
pub const W0_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CellReport {
    pub branch: u8,
    pub m: usize,
    /// Set when the cell has no valid deformation; every check is skipped.
    pub degenerate: Option<String>,
    pub process: Option<Process>,
    pub series: Option<Series>,
    pub shift: Option<f64>,
    pub regularity: Option<RegularityReport>,
    pub riccati_residual: Check,
    pub partner_shift_deviation: Check,
    pub isospectrality: Option<IsospectralityReport>,
    pub isospectrality_check: Check,
    pub eigenfunction_residual: Check,
    pub gram_max_offdiag: Check,
    pub zero_census: Vec<ZeroCensus>,
    pub zero_census_check: Check,
    pub w0: Option<W0Residuals>,
    pub w0_check: Check,
    pub wall_time_s: Option<f64>,
}

impl CellReport {
    fn checks(&self) -> [(&'static str, &Check); 7] {
        [
            ("riccati_residual", &self.riccati_residual),
            ("partner_shift_deviation", &self.partner_shift_deviation),
            ("isospectrality", &self.isospectrality_check),
            ("eigenfunction_residual", &self.eigenfunction_residual),
            ("gram_max_offdiag", &self.gram_max_offdiag),
            ("zero_census", &self.zero_census_check),
            ("w0", &self.w0_check),
        ]
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks().iter().find(|c| c.1.failed()).map(|c| c.0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificationReport {
    pub config: RunConfig,
    pub cells: Vec<CellReport>,
    pub passed: bool,
    pub first_failure: Option<String>,
}

pub fn cmd_certify(cfg: &RunConfig, timing: bool) -> CertificationReport {
    let cells: Vec<(u8, usize)> = cfg
        .branches
        .iter()
        .flat_map(|k| cfg.m_list.iter().map(move |m| (*k, *m)))
        .collect();
    let reports: Vec<CellReport> = cells
        .par_iter()
        .map(|&(k, m)| certify_cell(cfg, k, m, timing))
        .collect();
    let first_failure = reports
        .iter()
        .find_map(|c| c.first_failure().map(|f| format!("branch {} m {}: {f}", c.branch, c.m)));
    CertificationReport {
        config: cfg.clone(),
        passed: first_failure.is_none(),
        first_failure,
        cells: reports,
    }
}

fn degenerate_cell(k: u8, m: usize, e: Error) -> CellReport {
    let skip = || Check::skipped("degenerate parameters");
    CellReport {
        branch: k,
        m,
        degenerate: Some(e.to_string()),
        process: None,
        series: None,
        shift: None,
        regularity: None,
        riccati_residual: skip(),
        partner_shift_deviation: skip(),
        isospectrality: None,
        isospectrality_check: skip(),
        eigenfunction_residual: skip(),
        gram_max_offdiag: skip(),
        zero_census: Vec::new(),
        zero_census_check: skip(),
        w0: None,
        w0_check: skip(),
        wall_time_s: None,
    }
}

pub fn certify_cell(cfg: &RunConfig, k: u8, m: usize, timing: bool) -> CellReport {
    let start = Instant::now();
    let d = match Deformation::new(cfg.family, k, m) {
        Ok(d) => d,
        Err(e) => return degenerate_cell(k, m, e),
    };
    let series = series_of(&d);
    let regularity = match crate::spectral::classify_regularity(&cfg.family, k, m) {
        Ok(r) => r,
        Err(e) => return degenerate_cell(k, m, e),
    };
    let points = d.check_points(400);
    let riccati_residual = Check::against(d.riccati_residual(&points), RICCATI_TOL);
    let pair = d.extend();
    let partner_shift_deviation = match &pair {
        Ok(p) => Check::against(
            crate::deform::partner_shift_deviation(&d, p, &points),
            crate::deform::PARTNER_SHIFT_TOL,
        ),
        Err(e) => Check::error(e.clone(), crate::deform::PARTNER_SHIFT_TOL),
    };
    let regular = d.is_regular();
    let levels = (cfg.n_max + 1).min(6);
    // Reason the spectral checks cannot apply to this cell, if any.
    let spectral_skip = match (&pair, d.endpoint_zero()) {
        _ if !regular => Some("singular extension".to_string()),
        (Err(_), _) => Some("extension failed".to_string()),
        (Ok(_), Some(x)) => Some(format!(
            "seed vanishes at the endpoint x = {x}; the intertwiner annihilates a source state"
        )),
        (Ok(_), None) => None,
    };
    let skip = |why: &String| Check::skipped(why.clone());

    let (isospectrality, isospectrality_check) = match (&pair, &spectral_skip, d.non_principal_endpoint()) {
        (_, Some(why), _) => (None, skip(why)),
        (_, None, Some(x)) => (
            None,
            Check::skipped(format!("source partner needs the non-principal boundary condition at x = {x}")),
        ),
        (Ok(p), None, None) => match isospectrality_cell(cfg, &d, p, levels) {
            Ok(rep) => {
                let off = (rep.shift_estimate - d.shift).abs();
                let c = Check::against(rep.max_deviation.max(off), ISOSPECTRAL_TOL);
                (Some(rep), c)
            }
            Err(e) => (None, Check::error(e, ISOSPECTRAL_TOL)),
        },
        (Err(_), None, None) => unreachable!("failed extensions are skipped"),
    };

    let eigenfunction_residual = match (&pair, &spectral_skip) {
        (_, Some(why)) => skip(why),
        (Ok(p), None) => {
            let samples = d.check_points(50);
            let mut worst: f64 = 0.0;
            let mut err = None;
            for n in 0..=cfg.n_max.min(3) {
                match eigenstate(&d, n) {
                    Ok((psi, e)) => {
                        let r = schrodinger_residual(&psi, e, p.extension(), &samples);
                        worst = worst.max(if r.degenerate { f64::INFINITY } else { r.max_residual });
                    }
                    Err(e) => err = Some(e),
                }
            }
            match err {
                Some(e) => Check::error(e, EIGEN_RESIDUAL_TOL),
                None => Check::against(worst, EIGEN_RESIDUAL_TOL),
            }
        }
        (Err(_), None) => unreachable!("failed extensions are skipped"),
    };

    let gram_max_offdiag = match (series, cfg.family, &spectral_skip) {
        (_, _, Some(why)) => skip(why),
        (Some(s), Family::RadialOscillator(p), None) => match gram_matrix(s, m, p, cfg.n_max) {
            Ok(g) => Check::against(g.max_normalized_offdiag, GRAM_TOL),
            Err(e) => Check::error(e, GRAM_TOL),
        },
        _ => Check::skipped("no closed-form polynomial family for this cell"),
    };

    let (zero_census, zero_census_check) = match (series, cfg.family) {
        (Some(s), Family::RadialOscillator(p)) => {
            let census: Vec<ZeroCensus> = (0..=cfg.n_max)
                .filter_map(|n| zero_census(&EopSpec::new(s, n, m, p)).ok())
                .collect();
            let check = match &spectral_skip {
                Some(why) => skip(why),
                None if s == Series::L1 => {
                    let bad = census.iter().enumerate().filter(|(n, c)| c.inside != *n).count();
                    Check::against(bad as f64, 0.0)
                }
                None => Check::skipped("interior zero count is pinned for L1 cells only"),
            };
            (census, check)
        }
        _ => (Vec::new(), Check::skipped("no closed-form polynomial family for this cell")),
    };

    let (w0, w0_check) = if cfg.family.is_oscillator() && k == 2 {
        match w0_certification(&cfg.family, m, 400) {
            Ok(r) => (Some(r), Check::against(r.max(), W0_TOL)),
            Err(e) => (None, Check::error(e, W0_TOL)),
        }
    } else {
        (None, Check::skipped("W0 is defined for oscillator branch 2 cells"))
    };

    CellReport {
        branch: k,
        m,
        degenerate: None,
        process: Some(d.process),
        series,
        shift: Some(d.shift),
        regularity: Some(regularity),
        riccati_residual,
        partner_shift_deviation,
        isospectrality,
        isospectrality_check,
        eigenfunction_residual,
        gram_max_offdiag,
        zero_census,
        zero_census_check,
        w0,
        w0_check,
        wall_time_s: timing.then(|| start.elapsed().as_secs_f64()),
    }
}

/// Numerical spectrum of the extension against the exact spectrum of the
/// source partner; the zero mode, if present, is removed first. A correct
/// extension gives shift_estimate = R and zero deviation.
fn isospectrality_cell(
    cfg: &RunConfig,
    d: &Deformation,
    pair: &crate::deform::ExtensionPair,
    levels: usize,
) -> Result<IsospectralityReport> {
    let grid = Grid::default_for(&cfg.family, levels, d.m, cfg.grid_points)?;
    let has_zero = d.zero_mode().is_some();
    let ext = solve_bound_states(pair.extension(), &grid, levels + usize::from(has_zero))?;
    let form = d.source_form();
    let exact: Vec<f64> = (0..levels).map(|n| form.energy(n)).collect();
    Ok(compare_levels(&ext.eigenvalues[usize::from(has_zero)..], &exact))
}

#[derive(Serialize)]
struct InterpolateMeta {
    family: Family,
    branch: u8,
    r_values: Vec<f64>,
    columns: Vec<InterpolateColumn>,
}

#[derive(Serialize)]
struct InterpolateColumn {
    name: String,
    r_const: f64,
    singular_points: Vec<f64>,
    note: Option<String>,
}

pub fn cmd_interpolate(cfg: &RunConfig, r_values: &[f64]) -> Result<i32> {
    if r_values.is_empty() {
        return Err(Error::Config("--R needs at least one value".into()));
    }
    if !cfg.family.is_oscillator() {
        return Err(Error::Config("interpolate supports the radial oscillator only".into()));
    }
    let k = cfg.branches[0];
    let xs = cfg.table_points();
    let r_max = xs.last().copied().unwrap_or(1.0) * (1.0 + 1e-9);
    let mut header = vec!["r".to_string()];
    let mut cols: Vec<Option<Function1D>> = Vec::new();
    let mut meta_cols = Vec::new();
    for &rc in r_values {
        let name = format!("V_tilde_minus[R={rc}]");
        header.push(name.clone());
        match extend_general_r(&cfg.family, k, rc, r_max) {
            Ok(sol) => {
                cols.push(Some(sol.pair.v_tilde_minus));
                meta_cols.push(InterpolateColumn { name, r_const: rc, singular_points: Vec::new(), note: None });
            }
            Err(Error::SingularExtension { points }) => {
                cols.push(None);
                meta_cols.push(InterpolateColumn {
                    name,
                    r_const: rc,
                    singular_points: points,
                    note: Some("singular".into()),
                });
            }
            Err(e) => {
                cols.push(None);
                meta_cols.push(InterpolateColumn {
                    name,
                    r_const: rc,
                    singular_points: Vec::new(),
                    note: Some(e.to_string()),
                });
            }
        }
    }
    let rows: Vec<Vec<String>> = xs
        .iter()
        .map(|&x| {
            let mut row = vec![fmt(x)];
            row.extend(cols.iter().map(|c| c.as_ref().map(|f| fmt(f.value(x))).unwrap_or_default()));
            row
        })
        .collect();
    let meta = InterpolateMeta {
        family: cfg.family,
        branch: k,
        r_values: r_values.to_vec(),
        columns: meta_cols,
    };
    let stem = format!("interpolate_b{k}");
    match cfg.format {
        Format::Csv => {
            emit(cfg, &format!("{stem}.csv"), &csv_text(&header, &rows)?)?;
            if let Some(dir) = &cfg.output_dir {
                write_file(dir, &format!("{stem}.json"), &to_json(&meta)?)?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                meta: &'a InterpolateMeta,
                columns: &'a [String],
                rows: Vec<Vec<Option<f64>>>,
            }
            let num_rows = xs
                .iter()
                .map(|&x| {
                    let mut row = vec![Some(x)];
                    row.extend(cols.iter().map(|c| c.as_ref().map(|f| f.value(x))));
                    row
                })
                .collect();
            let text = to_json(&Out { meta: &meta, columns: &header, rows: num_rows })?;
            emit(cfg, &format!("{stem}.json"), &text)?;
        }
    }
    Ok(EXIT_OK)
}
