//! Command-line driver. `main` only parses arguments and calls [`run`].

use std::fs::OpenOptions;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, ValueEnum};
use sigbasis_core::engines::Warning;
use sigbasis_core::{
    dehomogenize_basis, homogenize, verify_groebner, Algorithm, Criteria, EngineConfig, Polynomial,
    RewriteFlavor, Ring, SigOrderKind,
};

use crate::bench::{self, BenchmarkSpec, Problem, Row, SuiteOptions, Verdict};
use crate::format::{self, homogenizing_name, Printer};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

const FORMATS_HELP: &str = "\
INPUT FORMAT (grammar v1)
  ring: p=<prime> vars=<v1,...,vn> [order=grevlex|lex]
  <polynomial>
  ...
  One polynomial per line; blank lines and text after `#` are ignored.
  A polynomial is a sum of terms joined by `+`/`-`; a term is an optional
  integer coefficient and `*`-joined powers `v^k` or `v`, e.g. `3*x^2*y - 1`.
  Coefficients are reduced mod p. Output uses the same grammar, so results
  can be fed back in.

OUTPUT
  The reduced Groebner basis, monic, one polynomial per line, ascending by
  leading monomial. Coefficients above p/2 print as subtractions unless
  --raw-coeffs is given.

CSV (schema v1)
  First line `# sigbasis bench csv v1`, then the columns
  benchmark,n,homogenized,algorithm,sig_order,criteria,reduction_steps,
  higher_sig_detections,ratio_pct,spoly_reductions,zero_reductions,
  discarded_nonminimal_pair,discarded_syzygy_criterion,discarded_rewritable,
  sig_redundant_skips,basis_size_final,verified,elapsed_ms
  ratio_pct = 100 * higher_sig_detections / reduction_steps.
  verified is true, false, TIMEOUT or UNVERIFIED.

EXIT STATUS
  0 success, 1 verification failure, 2 parse or usage error, 3 timeout.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgArg {
    Sba,
    F5,
    Buchberger,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SigOrderArg {
    Pot,
    Schreyer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CriteriaArg {
    None,
    Syz,
    Rewrite,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RewriteArg {
    Ap,
    F5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantsArg {
    Both,
    Plain,
    Homogenized,
}

/// Groebner bases over prime fields with signature-based and classical engines.
#[derive(Debug, Parser)]
#[command(name = "sigbasis", version, after_long_help = FORMATS_HELP)]
pub struct Args {
    /// Engine to run.
    #[arg(long, value_enum, default_value_t = AlgArg::Sba)]
    pub alg: AlgArg,
    /// Module ordering on signatures.
    #[arg(long, value_enum, default_value_t = SigOrderArg::Pot)]
    pub sig_order: SigOrderArg,
    /// Signature criteria to enable.
    #[arg(long, value_enum, default_value_t = CriteriaArg::All)]
    pub criteria: CriteriaArg,
    /// Flavor of the rewritable criterion.
    #[arg(long, value_enum, default_value_t = RewriteArg::Ap)]
    pub rewrite: RewriteArg,
    /// Homogenize the input, then map the basis back to the original ring.
    #[arg(long)]
    pub homogenize: bool,
    /// With --homogenize, print the homogeneous basis instead.
    #[arg(long, requires = "homogenize")]
    pub keep_h: bool,
    /// Append a CSV stats row (header written when the file is new).
    #[arg(long, value_name = "PATH")]
    pub stats: Option<PathBuf>,
    /// Verify the result against the Buchberger oracle; exit 1 on failure.
    #[arg(long)]
    pub check: bool,
    /// Run a benchmark suite: `family:n[,n...]` (e.g. `cyclic:4-6,eco:5`),
    /// `file:<path>`, `desk` or `large`. Writes CSV to stdout or --stats.
    #[arg(long, value_name = "LIST", conflicts_with = "input")]
    pub bench: Option<String>,
    /// Which system variants --bench runs.
    #[arg(long, value_enum, default_value_t = VariantsArg::Both, requires = "bench")]
    pub variants: VariantsArg,
    /// Wall-clock budget in seconds (per cell for --bench, default 300 there).
    #[arg(long, value_name = "SEC")]
    pub timeout: Option<f64>,
    /// Print coefficients as residues in [0, p).
    #[arg(long)]
    pub raw_coeffs: bool,
    /// Input file, or `-` for stdin.
    #[arg(required_unless_present = "bench")]
    pub input: Option<PathBuf>,
}

impl Args {
    pub fn engine(&self) -> EngineConfig {
        let algorithm = match self.alg {
            AlgArg::Sba => Algorithm::Sba,
            AlgArg::F5 => Algorithm::F5Presort,
            AlgArg::Buchberger => Algorithm::BuchbergerSugar,
        };
        let order = match self.sig_order {
            SigOrderArg::Pot => SigOrderKind::Pot,
            SigOrderArg::Schreyer => SigOrderKind::Schreyer,
        };
        EngineConfig::new(algorithm, order).with_criteria(self.criteria()).with_rewrite(match self.rewrite {
            RewriteArg::Ap => RewriteFlavor::ArriPerry,
            RewriteArg::F5 => RewriteFlavor::F5RuleList,
        })
    }

    fn criteria(&self) -> Criteria {
        match self.criteria {
            CriteriaArg::None => Criteria::NONE,
            CriteriaArg::Syz => Criteria::SYZYGY,
            CriteriaArg::Rewrite => Criteria::REWRITE,
            CriteriaArg::All => Criteria::ALL,
        }
    }

    fn timeout(&self) -> Result<Option<Duration>, String> {
        match self.timeout {
            None => Ok(None),
            Some(s) => Duration::try_from_secs_f64(s).map(Some).map_err(|_| format!("invalid timeout {s}")),
        }
    }
}

/// Executes one invocation and returns the process exit status.
pub fn run(args: &Args, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &args.bench {
        Some(list) => run_bench(args, list, out),
        None => run_single(args, stdin, out, err),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "sigbasis: {msg}");
            code
        }
    }
}

struct Failure(i32, String);

fn usage(msg: impl ToString) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

fn run_single(
    args: &Args,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let path = args.input.as_deref().expect("clap requires an input");
    let mut text = String::new();
    if path == Path::new("-") {
        stdin.read_to_string(&mut text).map_err(|e| usage(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    let input = format::parse_input(&text).map_err(usage)?;
    let timeout = args.timeout().map_err(usage)?.unwrap_or(Duration::MAX);

    let (ring, vars, polys) = if args.homogenize {
        let (ring, polys) = homogenize(&input.ring, &input.polys);
        let mut vars = input.vars.clone();
        vars.push(homogenizing_name(&vars));
        (ring, vars, polys)
    } else {
        (input.ring, input.vars.clone(), input.polys.clone())
    };
    let problem = Problem { ring, vars, polys };
    let cfg = args.engine();
    let res = bench::timed_run(&problem, &cfg, timeout).map_err(usage)?;
    for w in &res.warnings {
        let _ = match w {
            Warning::DroppedZeroInput(k) => {
                writeln!(err, "warning: input polynomial {} is zero, dropped", k + 1)
            }
            Warning::PresortWithoutDegreeOrder => {
                writeln!(err, "warning: degree presorting with a non-degree ordering")
            }
        };
    }
    if res.aborted {
        return Err(Failure(EXIT_TIMEOUT, format!("timed out after {} ms", res.stats.elapsed_ms)));
    }

    let (out_ring, out_vars, basis, check_input) = if args.homogenize && !args.keep_h {
        let d = dehomogenize_basis(&problem.ring, &res.basis).map_err(usage)?;
        (d.ring, input.vars.clone(), d.basis, input.polys.clone())
    } else {
        (problem.ring, problem.vars.clone(), res.basis.clone(), problem.polys.clone())
    };

    let verdict =
        if args.check { check_verdict(&out_ring, &basis, &check_input) } else { Verdict::Unverified };

    let printer = Printer { vars: &out_vars, field: out_ring.field, raw: args.raw_coeffs };
    let mut text = String::new();
    for f in &basis {
        text.push_str(&printer.polynomial(f));
        text.push('\n');
    }
    out.write_all(text.as_bytes()).map_err(|e| usage(format!("stdout: {e}")))?;

    if let Some(stats) = &args.stats {
        let name = if path == Path::new("-") {
            "stdin".to_string()
        } else {
            path.file_stem().map_or_else(|| "input".into(), |s| s.to_string_lossy().into_owned())
        };
        let row = Row::from_result(&name, input.ring.nvars, args.homogenize, &cfg, &res, verdict);
        append_rows(stats, &[row])?;
    }
    if verdict == Verdict::Mismatch {
        let _ = writeln!(err, "sigbasis: verification failed");
        return Ok(EXIT_VERIFY);
    }
    Ok(EXIT_OK)
}

/// `--check` semantics: the printed basis must be a Gröbner basis of the
/// ideal generated by `input` in `ring`.
pub fn check_verdict(ring: &Ring, basis: &[Polynomial], input: &[Polynomial]) -> Verdict {
    if verify_groebner(ring, basis, input) {
        Verdict::Verified
    } else {
        Verdict::Mismatch
    }
}

fn run_bench(args: &Args, list: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let sizes = bench::parse_bench_list(list).map_err(usage)?;
    let (plain, homog) = match args.variants {
        VariantsArg::Both => (true, true),
        VariantsArg::Plain => (true, false),
        VariantsArg::Homogenized => (false, true),
    };
    let specs: Vec<BenchmarkSpec> = bench::with_variants(&sizes, plain, homog);
    let engines: Vec<EngineConfig> = bench::signature_variants()
        .into_iter()
        .map(|e| e.with_criteria(args.criteria()).with_rewrite(args.engine().rewrite_flavor))
        .collect();
    let opts = SuiteOptions {
        timeout: args.timeout().map_err(usage)?.unwrap_or(bench::DEFAULT_TIMEOUT),
        keep_results: false,
    };
    let cells = bench::run_suite(&specs, &engines, &opts).map_err(usage)?;
    let rows: Vec<Row> = cells.into_iter().map(|c| c.row).collect();
    match &args.stats {
        Some(path) => append_rows(path, &rows)?,
        None => bench::write_csv(&mut *out, &rows, true).map_err(|e| usage(format!("stdout: {e}")))?,
    }
    let failed = rows.iter().any(|r| r.verified == Verdict::Mismatch);
    Ok(if failed { EXIT_VERIFY } else { EXIT_OK })
}

fn append_rows(path: &Path, rows: &[Row]) -> Result<(), Failure> {
    let io_err = |e: io::Error| usage(format!("{}: {e}", path.display()));
    let file = OpenOptions::new().create(true).append(true).open(path).map_err(io_err)?;
    let fresh = file.metadata().map_err(io_err)?.len() == 0;
    bench::write_csv(file, rows, fresh).map_err(io_err)
}
