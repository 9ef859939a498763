//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero when a criterion fails that is not listed in
//! `KNOWN_UNATTAINABLE`, or when a listed one fails outside its documented
//! scope.
//!
//! Environment knobs:
//! - `SIGBASIS_NONE_BUDGET_SECS`: per-cell budget for the criteria-off runs
//!   of criterion 6 (default 5). `0` means no budget.

#[path = "../../core/tests/props/mod.rs"]
mod props;

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use proptest::strategy::Strategy;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use sigbasis::bench::{self, BenchmarkSpec, Cell, Family, Problem, Row, SuiteOptions, Verdict};
use sigbasis::format::{self, Printer};
use sigbasis_core::*;

/// Criteria that cannot hold as stated; see the README.
const KNOWN_UNATTAINABLE: &[u32] = &[4];

struct Outcome {
    id: u32,
    pass: bool,
    /// For known-unattainable criteria: the attainable part held.
    scope_ok: bool,
    detail: String,
}

fn outcome(id: u32, pass: bool, detail: String) -> Outcome {
    Outcome { id, pass, scope_ok: pass, detail }
}

fn main() {
    let mut results = Vec::new();
    let specs = oracle_grid();
    let start = Instant::now();
    let cells = bench::run_suite(
        &specs,
        &bench::signature_variants(),
        &SuiteOptions { timeout: bench::DEFAULT_TIMEOUT, keep_results: true },
    )
    .expect("suite runs");
    let problems: Vec<Problem> = specs.iter().map(|s| s.load().unwrap()).collect();
    let suite_time = start.elapsed();

    results.push(oracle_equivalence(&specs, &problems, &cells, suite_time));
    results.push(signature_monotonicity(&problems, &cells));
    results.push(degree_equality(&specs, &cells));
    results.push(sugar_theorem(&specs, &cells));
    results.push(presort_equivalence(&specs, &cells));
    results.push(criteria_effect(&specs, &problems, &cells));
    results.push(schema(&cells));
    results.push(micro_oracles());
    results.push(property_suites());

    let mut bad = 0;
    for r in &results {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} {}", r.id, r.detail);
        let known = KNOWN_UNATTAINABLE.contains(&r.id);
        if !r.pass && !(known && r.scope_ok) {
            bad += 1;
        }
    }
    if bad > 0 {
        println!("{bad} criteria failed unexpectedly");
        std::process::exit(1);
    }
}

/// Cyclic-3..6, Katsura-3..7, Eco-4..8, each plain and homogenized.
fn oracle_grid() -> Vec<BenchmarkSpec> {
    let mut sizes: Vec<(Family, usize)> = (3..=6).map(|n| (Family::Cyclic, n)).collect();
    sizes.extend((3..=7).map(|n| (Family::Katsura, n)));
    sizes.extend((4..=8).map(|n| (Family::Eco, n)));
    bench::with_variants(&sizes, true, true)
}

fn cells_of(cells: &[Cell], s: usize) -> &[Cell] {
    let k = bench::signature_variants().len();
    &cells[s * k..(s + 1) * k]
}

fn result(c: &Cell) -> &GrobnerResult {
    c.result.as_ref().expect("results kept")
}

fn variant(c: &Cell) -> String {
    format!("{}/{}", c.row.algorithm, c.row.sig_order)
}

fn oracle_equivalence(specs: &[BenchmarkSpec], problems: &[Problem], cells: &[Cell], t: Duration) -> Outcome {
    let mut failures = Vec::new();
    for (s, spec) in specs.iter().enumerate() {
        let group = cells_of(cells, s);
        for c in group {
            if c.row.verified != Verdict::Verified {
                failures.push(format!("{} {} {:?}", spec.label(), variant(c), c.row.verified));
            }
        }
        // All four bases are compared against the oracle above; the full
        // verifier (which recomputes its own oracle) runs once per system.
        let p = &problems[s];
        if !verify_groebner(&p.ring, &result(&group[0]).basis, &p.polys) {
            failures.push(format!("{} verify_groebner", spec.label()));
        }
    }
    let in_time = t < Duration::from_secs(600);
    let detail = format!(
        "({} systems x 4 variants identical to the Buchberger oracle; suite {:.1} s, limit 600 s){}",
        specs.len(),
        t.as_secs_f64(),
        list(&failures)
    );
    outcome(1, failures.is_empty() && in_time, detail)
}

fn sig_spec(p: &Problem, kind: SigOrderKind) -> SigOrderSpec {
    let leads = p.polys.iter().filter(|f| !f.is_zero()).map(|f| f.lm().unwrap().clone()).collect();
    SigOrderSpec::for_generators(kind, p.ring.order, leads).unwrap()
}

fn signature_monotonicity(problems: &[Problem], cells: &[Cell]) -> Outcome {
    let (mut audited, mut rechecked, mut runs, mut pairs) = (0u64, 0u64, 0, 0);
    for (s, p) in problems.iter().enumerate() {
        for c in cells_of(cells, s).iter().filter(|c| c.row.algorithm == "sba") {
            let res = result(c);
            let kind = if c.row.sig_order == "pot" { SigOrderKind::Pot } else { SigOrderKind::Schreyer };
            let spec = sig_spec(p, kind);
            audited += res.audit.signature_order_violations;
            let sigs: Vec<&Signature> = res.trace.iter().map(|e| e.sig.as_ref().unwrap()).collect();
            rechecked += sigs.windows(2).filter(|w| spec.cmp(w[0], w[1]).is_gt()).count() as u64;
            runs += 1;
            pairs += sigs.len();
        }
    }
    let detail = format!(
        "({runs} sba runs, {pairs} processed pairs; audited violations {audited}, recomputed {rechecked})"
    );
    outcome(2, audited == 0 && rechecked == 0, detail)
}

fn degree_equality(specs: &[BenchmarkSpec], cells: &[Cell]) -> Outcome {
    let (mut eq_viol, mut rel_viol, mut checked) = (0, 0, 0);
    let mut eco7 = BTreeMap::new();
    for (s, spec) in specs.iter().enumerate() {
        for c in cells_of(cells, s) {
            let a = &result(c).audit;
            rel_viol += a.relation_violations;
            if spec.homogenized {
                eq_viol += a.degree_equality_violations;
                checked += a.spolys_checked;
            } else if spec.family == Family::Eco && spec.n == 7 {
                eco7.insert(variant(c), a.strict_relation);
            }
        }
    }
    let strict_seen = eco7.values().any(|&v| v > 0);
    let detail = format!(
        "(homogenized: {checked} s-polynomials, {eq_viol} equality violations; relation violations anywhere: \
         {rel_viol}; Eco-7 strict events per variant: {eco7:?})"
    );
    outcome(3, eq_viol == 0 && rel_viol == 0 && strict_seen, detail)
}

fn sugar_theorem(specs: &[BenchmarkSpec], cells: &[Cell]) -> Outcome {
    let mut by_scope: BTreeMap<(String, &str), u64> = BTreeMap::new();
    let mut offenders = Vec::new();
    let mut checked = 0;
    for (s, spec) in specs.iter().enumerate() {
        for c in cells_of(cells, s) {
            let a = &result(c).audit;
            checked += a.sugar_checked;
            let kind = if spec.homogenized { "homogenized" } else { "plain" };
            *by_scope.entry((c.row.sig_order.clone(), kind)).or_default() += a.sugar_violations;
            if a.sugar_violations > 0 {
                offenders.push(format!("{} {}: {}", spec.label(), variant(c), a.sugar_violations));
            }
        }
    }
    let total: u64 = by_scope.values().sum();
    // Where the signature degree orders the pair sides the same way as the
    // sugar maximum (Schreyer, or any homogeneous input) the equality holds.
    let provable_clean = by_scope
        .iter()
        .filter(|((order, kind), _)| order == "schreyer" || *kind == "homogenized")
        .all(|(_, &v)| v == 0);
    let detail = format!(
        "({checked} labeled polynomials, {total} violations; by scope {by_scope:?}; \
         Schreyer and homogenized scopes clean: {provable_clean}){}",
        list(&offenders)
    );
    Outcome { id: 4, pass: total == 0, scope_ok: provable_clean, detail }
}

fn presort_equivalence(specs: &[BenchmarkSpec], cells: &[Cell]) -> Outcome {
    let (mut compared, mut mismatches) = (0, Vec::new());
    for (s, spec) in specs.iter().enumerate().filter(|(_, s)| s.homogenized) {
        let group = cells_of(cells, s);
        for order in ["pot", "schreyer"] {
            let pick = |alg: &str| {
                let c = group.iter().find(|c| c.row.algorithm == alg && c.row.sig_order == order).unwrap();
                result(c).trace.iter().map(|e| e.sig.clone()).collect::<Vec<_>>()
            };
            compared += 1;
            if pick("sba") != pick("f5") {
                mismatches.push(format!("{} {order}", spec.label()));
            }
        }
    }
    let detail = format!("({compared} homogeneous sba/f5 trace pairs compared){}", list(&mismatches));
    outcome(5, mismatches.is_empty(), detail)
}

fn criteria_effect(specs: &[BenchmarkSpec], problems: &[Problem], cells: &[Cell]) -> Outcome {
    let budget = match std::env::var("SIGBASIS_NONE_BUDGET_SECS").ok().and_then(|v| v.parse::<f64>().ok()) {
        Some(s) if s <= 0.0 => Duration::MAX,
        Some(s) => Duration::from_secs_f64(s),
        None => Duration::from_secs(5),
    };
    let (mut complete, mut cut, mut failures) = (0, Vec::new(), Vec::new());
    let mut strict: BTreeMap<String, bool> = BTreeMap::new();
    for (s, spec) in specs.iter().enumerate() {
        for c in cells_of(cells, s) {
            let all = result(c);
            let cfg = engine_of(&c.row).with_criteria(Criteria::NONE);
            let start = Instant::now();
            let none = compute_with_abort(&problems[s].ring, &problems[s].polys, &cfg, &mut |_| {
                start.elapsed() > budget
            })
            .unwrap();
            let (a, n) = (all.stats.spoly_reductions, none.stats.spoly_reductions);
            let label = format!("{} {}", spec.label(), variant(c));
            if none.aborted {
                // Counters only grow, so a partial count already above the
                // criteria-on count settles the inequality.
                cut.push(label.clone());
                if n <= a {
                    failures.push(format!("{label}: unresolved at budget ({n} <= {a})"));
                }
            } else {
                complete += 1;
                if none.basis != all.basis {
                    failures.push(format!("{label}: basis changed"));
                }
                if a > n {
                    failures.push(format!("{label}: {a} > {n}"));
                }
            }
            if matches!((&spec.family, spec.n), (Family::Katsura, 6) | (Family::Cyclic, 5)) {
                let e = strict.entry(spec.label()).or_insert(true);
                *e &= n > a;
            }
        }
    }
    let strict_ok = strict.len() == 4 && strict.values().all(|&v| v);
    if !strict_ok {
        failures.push(format!("strict reduction per system: {strict:?}"));
    }
    let detail = format!(
        "({complete} cells run to completion with identical bases and fewer or equal s-polynomials; \
         {} cells stopped at the {:.0} s budget with the criteria-off count already larger, basis \
         identity not checked for those{}; strict on Katsura-6 and Cyclic-5: {strict_ok}){}",
        cut.len(),
        budget.as_secs_f64().min(1e9),
        list(&cut),
        list(&failures)
    );
    outcome(6, failures.is_empty(), detail)
}

fn engine_of(row: &Row) -> EngineConfig {
    let alg = if row.algorithm == "sba" { Algorithm::Sba } else { Algorithm::F5Presort };
    let order = if row.sig_order == "pot" { SigOrderKind::Pot } else { SigOrderKind::Schreyer };
    EngineConfig::new(alg, order)
}

fn schema(cells: &[Cell]) -> Outcome {
    let rows: Vec<Row> = cells.iter().map(|c| c.row.clone()).collect();
    let mut buf = Vec::new();
    bench::write_csv(&mut buf, &rows, true).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut problems = Vec::new();
    let mut lines = text.lines();
    if lines.next() != Some(bench::CSV_COMMENT) {
        problems.push("missing version comment".to_string());
    }
    let body: String = lines.collect::<Vec<_>>().join("\n");
    let mut rdr = csv::Reader::from_reader(body.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    if header != bench::CSV_COLUMNS {
        problems.push(format!("header {header:?}"));
    }
    let col = |name: &str| bench::CSV_COLUMNS.iter().position(|c| *c == name).unwrap();
    let mut grid: BTreeMap<(String, String), Vec<[String; 3]>> = BTreeMap::new();
    let mut nrows = 0;
    for rec in rdr.records() {
        let rec = rec.unwrap();
        nrows += 1;
        let steps: f64 = rec[col("reduction_steps")].parse().unwrap();
        let hsd: f64 = rec[col("higher_sig_detections")].parse().unwrap();
        let ratio: f64 = rec[col("ratio_pct")].parse().unwrap();
        let want = if steps == 0.0 {
            if hsd == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            100.0 * hsd / steps
        };
        if ratio != want {
            problems.push(format!("ratio {ratio} != {want}"));
        }
        let key = (rec[col("benchmark")].to_string(), rec[col("n")].to_string());
        let cell = ["algorithm", "sig_order", "homogenized"].map(|c| rec[col(c)].to_string());
        grid.entry(key).or_default().push(cell);
    }
    for (sys, mut v) in grid.clone() {
        v.sort();
        v.dedup();
        if v.len() != 8 {
            problems.push(format!("{sys:?} has {} of 8 variant cells", v.len()));
        }
    }
    // Determinism: rerun one cell per family and compare rows minus timing.
    for (s, spec) in oracle_grid().iter().enumerate().filter(|(_, s)| s.n == 4 && !s.homogenized) {
        let again = bench::run_suite(
            std::slice::from_ref(spec),
            &bench::signature_variants(),
            &SuiteOptions::default(),
        )
        .unwrap();
        for (x, y) in again.iter().zip(cells_of(cells, s)) {
            if x.row.without_timing() != y.row.without_timing() {
                problems.push(format!("{} {} not deterministic", spec.label(), variant(y)));
            }
        }
    }
    let detail = format!(
        "({nrows} rows, {} systems x 4 variants x plain/homogenized, ratio recomputed per row){}",
        grid.len(),
        list(&problems)
    );
    outcome(7, problems.is_empty(), detail)
}

fn all_engine_configs() -> Vec<EngineConfig> {
    let mut v = vec![EngineConfig::new(Algorithm::BuchbergerSugar, SigOrderKind::Pot)];
    for alg in [Algorithm::Sba, Algorithm::F5Presort] {
        for order in [SigOrderKind::Pot, SigOrderKind::Schreyer] {
            for criteria in [Criteria::NONE, Criteria::SYZYGY, Criteria::REWRITE, Criteria::ALL] {
                for flavor in [RewriteFlavor::ArriPerry, RewriteFlavor::F5RuleList] {
                    v.push(EngineConfig::new(alg, order).with_criteria(criteria).with_rewrite(flavor));
                }
            }
        }
    }
    v
}

fn micro_oracles() -> Outcome {
    let mut problems = Vec::new();
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data");
    let worked =
        format::parse_input(&std::fs::read_to_string(format!("{data}/worked.txt")).unwrap()).unwrap();
    let want: Vec<Polynomial> = ["y^2 - x", "x*y - 1", "x^2 - y"]
        .iter()
        .map(|s| format::parse_polynomial(s, 1, &worked.ring, &worked.vars).unwrap())
        .collect();
    let cyc = format::parse_input(&std::fs::read_to_string(format!("{data}/cyclic4.txt")).unwrap()).unwrap();
    let golden = std::fs::read_to_string(format!("{data}/cyclic4.golden")).unwrap();
    let configs = all_engine_configs();
    for cfg in &configs {
        let name = format!(
            "{}/{}/{}/{}",
            cfg.algorithm.name(),
            cfg.sig_order.name(),
            cfg.criteria.name(),
            cfg.rewrite_flavor.name()
        );
        if compute(&worked.ring, &worked.polys, cfg).unwrap().basis != want {
            problems.push(format!("worked example {name}"));
        }
        let basis = compute(&cyc.ring, &cyc.polys, cfg).unwrap().basis;
        let printer = Printer { vars: &cyc.vars, field: cyc.ring.field, raw: false };
        let text: String = basis.iter().map(|f| printer.polynomial(f) + "\n").collect();
        if basis.len() != 7 || text != golden {
            problems.push(format!("cyclic-4 {name}"));
        }
    }
    // The same through the binary.
    let bin = env!("CARGO_BIN_EXE_sigbasis");
    for alg in ["sba", "f5", "buchberger"] {
        for order in ["pot", "schreyer"] {
            for (file, expect) in
                [("worked.txt", "y^2 - x\nx*y - 1\nx^2 - y\n".to_string()), ("cyclic4.txt", golden.clone())]
            {
                let out = Command::new(bin)
                    .args(["--alg", alg, "--sig-order", order, "--check", &format!("{data}/{file}")])
                    .output()
                    .unwrap();
                if !out.status.success() || String::from_utf8_lossy(&out.stdout) != expect {
                    problems.push(format!("binary {alg}/{order} {file}"));
                }
            }
        }
    }
    let detail = format!(
        "({} engine configurations and the binary: worked example gives 3 elements, cyclic-4 matches the \
         7-line golden file){}",
        configs.len(),
        list(&problems)
    );
    outcome(8, problems.is_empty(), detail)
}

fn run_prop<S: Strategy>(
    cases: u32,
    strategy: S,
    check: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, check).map_err(|e| e.to_string())
}

fn property_suites() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let suites: Vec<(&str, u32, Result<(), String>)> = vec![
        ("field axioms", 10_000, run_prop(10_000, props::field_triple(), props::check_field_axioms)),
        ("ordering axioms", 1_000, run_prop(1_000, props::monomial_triple(), props::check_order_axioms)),
        (
            "homogenize round trip",
            1_000,
            run_prop(1_000, props::poly_system(), props::check_homogenize_round_trip),
        ),
        ("sig-safe step contract", 1_000, run_prop(1_000, props::sig_case(), props::check_sig_safe_contract)),
    ];
    let mut names = Vec::new();
    for (name, cases, r) in suites {
        names.push(format!("{name} {cases}"));
        if let Err(e) = r {
            problems.push(format!("{name}: {e}"));
        }
    }
    let t = start.elapsed();
    let detail = format!("({}; {:.1} s, limit 60 s){}", names.join(", "), t.as_secs_f64(), list(&problems));
    outcome(9, problems.is_empty() && t < Duration::from_secs(60), detail)
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        String::new()
    } else {
        let shown: Vec<&str> = items.iter().take(12).map(String::as_str).collect();
        let more = if items.len() > 12 { format!(" and {} more", items.len() - 12) } else { String::new() };
        format!(" [{}{more}]", shown.join("; "))
    }
}
