//! Benchmark grid, per-cell runner and CSV output.
//!
//! A suite is a list of [`BenchmarkSpec`]s crossed with a list of
//! [`EngineConfig`]s. Each spec gets one Buchberger oracle run, verified
//! once; every cell is then compared with that oracle before its row is
//! emitted. Cells run in
//! parallel on the rayon pool and each one has its own deadline.

use std::io::{self, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use sigbasis_core::engines::verify_with_oracle;
use sigbasis_core::systems::{cyclic, eco, katsura};
use sigbasis_core::{
    compute_with_abort, homogenize, Algorithm, EngineConfig, FieldSpec, GrobnerResult, MonomialOrder,
    Polynomial, Ring, RunStats, SigOrderKind,
};

use crate::format::{self, homogenizing_name, ParseError};

pub const CSV_VERSION: u32 = 1;

/// First line of every CSV file written by [`write_csv`].
pub const CSV_COMMENT: &str = "# sigbasis bench csv v1";

pub const CSV_COLUMNS: [&str; 18] = [
    "benchmark",
    "n",
    "homogenized",
    "algorithm",
    "sig_order",
    "criteria",
    "reduction_steps",
    "higher_sig_detections",
    "ratio_pct",
    "spoly_reductions",
    "zero_reductions",
    "discarded_nonminimal_pair",
    "discarded_syzygy_criterion",
    "discarded_rewritable",
    "sig_redundant_skips",
    "basis_size_final",
    "verified",
    "elapsed_ms",
];

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(300);

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("unknown benchmark family `{0}`")]
    UnknownFamily(String),
    #[error("bad benchmark list `{0}`: {1}")]
    BadList(String, String),
    #[error("{family}-{n} needs n >= {min}")]
    SizeTooSmall { family: &'static str, n: usize, min: usize },
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Algebra(#[from] sigbasis_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    Katsura,
    Eco,
    /// A system in the text input format; `n` is informational.
    File(PathBuf),
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::Cyclic => "cyclic".into(),
            Family::Katsura => "katsura".into(),
            Family::Eco => "eco".into(),
            Family::File(p) => {
                p.file_stem().map_or_else(|| "file".into(), |s| s.to_string_lossy().into_owned())
            }
        }
    }

    fn min_size(&self) -> usize {
        match self {
            Family::Cyclic => 2,
            Family::Katsura => 1,
            Family::Eco => 3,
            Family::File(_) => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchmarkSpec {
    pub family: Family,
    pub n: usize,
    pub homogenized: bool,
    pub field: FieldSpec,
    pub order: MonomialOrder,
}

/// A loaded benchmark system, already homogenized when the spec asks for it.
#[derive(Clone, Debug)]
pub struct Problem {
    pub ring: Ring,
    pub vars: Vec<String>,
    pub polys: Vec<Polynomial>,
}

impl BenchmarkSpec {
    pub fn new(family: Family, n: usize, homogenized: bool) -> Self {
        BenchmarkSpec {
            family,
            n,
            homogenized,
            field: FieldSpec::new(32003).expect("32003 is prime"),
            order: MonomialOrder::Grevlex,
        }
    }

    /// Row label in the usual `Family-n` / `Family-n-h` style.
    pub fn label(&self) -> String {
        let mut s = format!("{}-{}", self.family.name(), self.n);
        if self.homogenized {
            s.push_str("-h");
        }
        s
    }

    pub fn load(&self) -> Result<Problem, BenchError> {
        let min = self.family.min_size();
        if self.n < min {
            let family = match self.family {
                Family::Cyclic => "cyclic",
                Family::Katsura => "katsura",
                _ => "eco",
            };
            return Err(BenchError::SizeTooSmall { family, n: self.n, min });
        }
        let (ring, vars, polys) = match &self.family {
            Family::Cyclic => split(cyclic(self.n, self.field, self.order)),
            Family::Katsura => split(katsura(self.n, self.field, self.order)),
            Family::Eco => split(eco(self.n, self.field, self.order)),
            Family::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|source| BenchError::Io { path: path.clone(), source })?;
                let input = format::parse_input(&text)
                    .map_err(|source| BenchError::Parse { path: path.clone(), source })?;
                (input.ring, input.vars, input.polys)
            }
        };
        if !self.homogenized {
            return Ok(Problem { ring, vars, polys });
        }
        let (ring, polys) = homogenize(&ring, &polys);
        let mut vars = vars;
        vars.push(homogenizing_name(&vars));
        Ok(Problem { ring, vars, polys })
    }
}

fn split(s: sigbasis_core::systems::System) -> (Ring, Vec<String>, Vec<Polynomial>) {
    (s.ring, s.vars, s.polys)
}

/// Parses `family:n[,n...]` lists, e.g. `cyclic:4,5,katsura:3-6`.
///
/// A bare number or range continues the most recent family. `file:<path>`
/// adds a single file system. The presets `desk` and `large` expand to the
/// plain families only; the caller decides on homogenization.
pub fn parse_bench_list(list: &str) -> Result<Vec<(Family, usize)>, BenchError> {
    let bad = |msg: &str| BenchError::BadList(list.to_string(), msg.to_string());
    match list.trim() {
        "desk" => return Ok(desk_sizes()),
        "large" => return Ok(large_sizes()),
        _ => {}
    }
    let mut out = Vec::new();
    let mut current: Option<Family> = None;
    for item in list.split(',').map(str::trim) {
        if item.is_empty() {
            return Err(bad("empty entry"));
        }
        let sizes = match item.split_once(':') {
            Some(("file", path)) => {
                out.push((Family::File(PathBuf::from(path)), 0));
                current = None;
                continue;
            }
            Some((name, sizes)) => {
                current = Some(match name.to_ascii_lowercase().as_str() {
                    "cyclic" => Family::Cyclic,
                    "katsura" => Family::Katsura,
                    "eco" => Family::Eco,
                    _ => return Err(BenchError::UnknownFamily(name.to_string())),
                });
                sizes
            }
            None => item,
        };
        let family = current.clone().ok_or_else(|| bad("size given before any family"))?;
        let (lo, hi) = match sizes.split_once('-') {
            Some((a, b)) => (a, b),
            None => (sizes, sizes),
        };
        let lo: usize = lo.parse().map_err(|_| bad("sizes must be integers"))?;
        let hi: usize = hi.parse().map_err(|_| bad("sizes must be integers"))?;
        if lo > hi {
            return Err(bad("empty range"));
        }
        out.extend((lo..=hi).map(|n| (family.clone(), n)));
    }
    Ok(out)
}

fn desk_sizes() -> Vec<(Family, usize)> {
    let mut v: Vec<(Family, usize)> = (4..=6).map(|n| (Family::Cyclic, n)).collect();
    v.extend((4..=8).map(|n| (Family::Katsura, n)));
    v.extend((5..=8).map(|n| (Family::Eco, n)));
    v
}

fn large_sizes() -> Vec<(Family, usize)> {
    let mut v: Vec<(Family, usize)> = (6..=8).map(|n| (Family::Cyclic, n)).collect();
    v.extend((9..=12).map(|n| (Family::Katsura, n)));
    v.extend((9..=11).map(|n| (Family::Eco, n)));
    v
}

/// Crosses sizes with plain and homogenized variants, plain first.
pub fn with_variants(sizes: &[(Family, usize)], plain: bool, homogenized: bool) -> Vec<BenchmarkSpec> {
    let mut out = Vec::new();
    for (family, n) in sizes {
        for h in [false, true] {
            if (h && homogenized) || (!h && plain) {
                out.push(BenchmarkSpec::new(family.clone(), *n, h));
            }
        }
    }
    out
}

/// The default desk-scale grid: Cyclic-4..6, Katsura-4..8, Eco-5..8, each
/// plain and homogenized.
pub fn desk_grid() -> Vec<BenchmarkSpec> {
    with_variants(&desk_sizes(), true, true)
}

/// The large grid (Cyclic-6..8, Katsura-9..12, Eco-9..11); expect hours.
pub fn large_grid() -> Vec<BenchmarkSpec> {
    with_variants(&large_sizes(), true, true)
}

/// The four signature variants with both criteria enabled.
pub fn signature_variants() -> Vec<EngineConfig> {
    let mut v = Vec::with_capacity(4);
    for alg in [Algorithm::Sba, Algorithm::F5Presort] {
        for order in [SigOrderKind::Pot, SigOrderKind::Schreyer] {
            v.push(EngineConfig::new(alg, order));
        }
    }
    v
}

/// Outcome of checking a cell against the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "true")]
    Verified,
    #[serde(rename = "false")]
    Mismatch,
    /// The engine (or the oracle) ran out of time.
    #[serde(rename = "TIMEOUT")]
    Timeout,
    /// No oracle was computed for this cell.
    #[serde(rename = "UNVERIFIED")]
    Unverified,
}

/// One CSV row; field order is the column order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub benchmark: String,
    pub n: usize,
    pub homogenized: bool,
    pub algorithm: String,
    pub sig_order: String,
    pub criteria: String,
    pub reduction_steps: u64,
    pub higher_sig_detections: u64,
    pub ratio_pct: f64,
    pub spoly_reductions: u64,
    pub zero_reductions: u64,
    pub discarded_nonminimal_pair: u64,
    pub discarded_syzygy_criterion: u64,
    pub discarded_rewritable: u64,
    pub sig_redundant_skips: u64,
    pub basis_size_final: u64,
    pub verified: Verdict,
    pub elapsed_ms: u64,
}

impl Row {
    /// Builds a row from a finished run. The ratio is derived from the
    /// row's own counters.
    pub fn from_result(
        benchmark: &str,
        n: usize,
        homogenized: bool,
        cfg: &EngineConfig,
        res: &GrobnerResult,
        verified: Verdict,
    ) -> Self {
        let s = &res.stats;
        let signature = cfg.algorithm != Algorithm::BuchbergerSugar;
        Row {
            benchmark: benchmark.to_string(),
            n,
            homogenized,
            algorithm: cfg.algorithm.name().to_string(),
            sig_order: if signature { cfg.sig_order.name() } else { "-" }.to_string(),
            criteria: if signature { cfg.criteria.name() } else { "-" }.to_string(),
            reduction_steps: s.reduction_steps,
            higher_sig_detections: s.higher_sig_detections,
            ratio_pct: s.ratio_pct(),
            spoly_reductions: s.spoly_reductions,
            zero_reductions: s.zero_reductions,
            discarded_nonminimal_pair: s.discarded_nonminimal_pair,
            discarded_syzygy_criterion: s.discarded_syzygy_criterion,
            discarded_rewritable: s.discarded_rewritable,
            sig_redundant_skips: s.sig_redundant_skips,
            basis_size_final: s.basis_size_final,
            verified,
            elapsed_ms: s.elapsed_ms,
        }
    }

    /// The row with `elapsed_ms` cleared, for determinism comparisons.
    pub fn without_timing(&self) -> Row {
        Row { elapsed_ms: 0, ..self.clone() }
    }
}

/// A cell's row together with the full engine output.
#[derive(Clone, Debug)]
pub struct Cell {
    pub row: Row,
    pub result: Option<GrobnerResult>,
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Per-cell wall-clock budget; the oracle run gets the same budget.
    pub timeout: Duration,
    /// Keep the engine results in the returned cells.
    pub keep_results: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { timeout: DEFAULT_TIMEOUT, keep_results: false }
    }
}

/// Runs `cfg` on `problem` with a deadline and returns the result stamped
/// with its elapsed time.
pub fn timed_run(
    problem: &Problem,
    cfg: &EngineConfig,
    timeout: Duration,
) -> Result<GrobnerResult, sigbasis_core::Error> {
    let start = Instant::now();
    let mut abort = |_: &RunStats| start.elapsed() > timeout;
    let mut res = compute_with_abort(&problem.ring, &problem.polys, cfg, &mut abort)?;
    res.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(res)
}

/// The reference basis of one benchmark system.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub basis: Vec<Polynomial>,
    /// The basis passed the Gröbner basis verifier.
    pub verified: bool,
}

impl Oracle {
    /// Computes the Buchberger basis within `timeout` and verifies it.
    /// `None` when the deadline passes first.
    pub fn compute(problem: &Problem, timeout: Duration) -> Result<Option<Oracle>, BenchError> {
        let cfg = EngineConfig::new(Algorithm::BuchbergerSugar, SigOrderKind::Pot);
        let res = timed_run(problem, &cfg, timeout)?;
        if res.aborted {
            return Ok(None);
        }
        let verified = verify_with_oracle(&problem.ring, &res.basis, &problem.polys, &res.basis);
        Ok(Some(Oracle { basis: res.basis, verified }))
    }

    /// A reduced Gröbner basis is unique, so a cell is correct exactly when
    /// its basis equals the verified oracle term for term.
    pub fn judge(&self, basis: &[Polynomial]) -> Verdict {
        if self.verified && basis == self.basis.as_slice() {
            Verdict::Verified
        } else {
            Verdict::Mismatch
        }
    }
}

/// Runs one cell and checks it against `oracle` when one is given.
pub fn run_cell(
    spec: &BenchmarkSpec,
    problem: &Problem,
    oracle: Option<&Oracle>,
    cfg: &EngineConfig,
    timeout: Duration,
) -> Result<Cell, BenchError> {
    let res = timed_run(problem, cfg, timeout)?;
    let verdict = match oracle {
        _ if res.aborted => Verdict::Timeout,
        None => Verdict::Unverified,
        Some(o) => o.judge(&res.basis),
    };
    let row = Row::from_result(&spec.family.name(), spec.n, spec.homogenized, cfg, &res, verdict);
    Ok(Cell { row, result: Some(res) })
}

/// Runs every (spec, engine) cell. Rows come back in spec-major order.
///
/// A spec whose oracle times out still gets its cells run; they are then
/// reported as [`Verdict::Unverified`] unless they time out themselves.
pub fn run_suite(
    specs: &[BenchmarkSpec],
    engines: &[EngineConfig],
    opts: &SuiteOptions,
) -> Result<Vec<Cell>, BenchError> {
    let prepared: Vec<(Problem, Option<Oracle>)> = specs
        .par_iter()
        .map(|spec| {
            let problem = spec.load()?;
            let oracle = Oracle::compute(&problem, opts.timeout)?;
            Ok((problem, oracle))
        })
        .collect::<Result<_, BenchError>>()?;

    let jobs: Vec<(usize, &EngineConfig)> =
        (0..specs.len()).flat_map(|s| engines.iter().map(move |e| (s, e))).collect();
    jobs.par_iter()
        .map(|&(s, cfg)| {
            let (problem, oracle) = &prepared[s];
            let mut cell = run_cell(&specs[s], problem, oracle.as_ref(), cfg, opts.timeout)?;
            if !opts.keep_results {
                cell.result = None;
            }
            Ok(cell)
        })
        .collect()
}

/// Writes rows as CSV. With `header`, the version comment and the column
/// names come first.
pub fn write_csv<W: Write>(out: W, rows: &[Row], header: bool) -> io::Result<()> {
    let mut out = out;
    if header {
        writeln!(out, "{CSV_COMMENT}")?;
    }
    let mut w = csv::WriterBuilder::new().has_headers(header).from_writer(out);
    for r in rows {
        w.serialize(r).map_err(io::Error::other)?;
    }
    w.flush()
}
