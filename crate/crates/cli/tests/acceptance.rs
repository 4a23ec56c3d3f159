//! Acceptance run: one PASS/FAIL line per criterion, details indented below.
//!
//! Exits 0 so the workspace test run stays green while reporting failures;
//! set `ACCEPTANCE_STRICT=1` to exit 1 when any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use cochar_cli::report::{FindingsReport, SectionFindings};
use cochar_cli::run_from;
use cochar_core::cocharacters::closed_forms::FormulaId;
use cochar_core::cocharacters::{
    proper_cocharacter, proper_hilbert_series, proper_series_e, proper_to_ordinary_interlace,
    proper_to_ordinary_series, series_e,
};
use cochar_core::{
    codimension, generate_partitions, lr_coefficient, oracle_product_check,
    partitions::partitions_up_to, restrict, verify_restriction_table, AlgebraId, Partition, Status,
};

/// Wall-clock budgets in seconds, per criterion.
const BUDGET_G_TABLES: f64 = 5.0;
const BUDGET_UT2E_TABLES: f64 = 5.0;
const BUDGET_SWEEP: f64 = 60.0;
const BUDGET_PROPER_E: f64 = 1.0;
const BUDGET_TRANSFORMS: f64 = 10.0;
const BUDGET_ORACLE: f64 = 60.0;
const BUDGET_TABLE: f64 = 30.0;
const BUDGET_PROPERTIES: f64 = 60.0;
/// Multiplicities are exact integers: zero tolerance everywhere.
const TOLERANCE: u64 = 0;

const G_TABLE: [&str; 6] = [
    "(1)",
    "(2)+(1^2)",
    "(3)+2(2,1)+(1^3)",
    "(4)+3(3,1)+2(2^2)+3(2,1^2)+(1^4)",
    "(5)+4(4,1)+4(3,2)+5(3,1^2)+4(2^2,1)+3(2,1^3)+(1^5)",
    "(6)+5(5,1)+6(4,2)+7(4,1^2)+8(3,2,1)+2(3^2)+5(3,1^3)+2(2^3)+4(2^2,1^2)+3(2,1^4)+(1^6)",
];

const UT2E_TABLE: [&str; 6] = [
    "(1)",
    "(2)+(1^2)",
    "(3)+2(2,1)+(1^3)",
    "(4)+3(3,1)+2(2^2)+3(2,1^2)+(1^4)",
    "(5)+4(4,1)+5(3,2)+6(3,1^2)+5(2^2,1)+4(2,1^3)+(1^5)",
    "(6)+5(5,1)+8(4,2)+9(4,1^2)+14(3,2,1)+4(3^2)+9(3,1^3)+(2^3)+8(2^2,1^2)+5(2,1^4)+(1^6)",
];

type Table = BTreeMap<Partition, u64>;

/// Parses `3(2,1^2)+(1)` style sums.
fn parse_table(s: &str) -> Table {
    let mut out = Table::new();
    for term in s.split('+') {
        let open = term.find('(').expect("term has a partition");
        let mult = if open == 0 {
            1
        } else {
            term[..open].parse().unwrap()
        };
        let inner = term[open + 1..].trim_end_matches(')');
        let mut parts = Vec::new();
        for item in inner.split(',') {
            match item.split_once('^') {
                Some((v, e)) => parts.extend(std::iter::repeat_n(
                    v.parse::<usize>().unwrap(),
                    e.parse().unwrap(),
                )),
                None => parts.push(item.parse().unwrap()),
            }
        }
        *out.entry(Partition::new(parts).unwrap()).or_insert(0) += mult;
    }
    out
}

fn cli(args: &[&str]) -> cochar_cli::Outcome {
    run_from(std::iter::once("cochar").chain(args.iter().copied()))
}

fn compute_json(algebra: &str, n: usize) -> Table {
    let out = cli(&[
        "compute",
        "--algebra",
        algebra,
        "--degree",
        &n.to_string(),
        "--format",
        "json",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let parts: Vec<usize> = serde_json::from_value(t["partition"].clone()).unwrap();
            (Partition::new(parts).unwrap(), t["mult"].as_u64().unwrap())
        })
        .collect()
}

/// Differences between two tables as `(partition, expected, got)`.
fn table_diff(expected: &Table, got: &Table) -> Vec<(Partition, u64, u64)> {
    let keys: std::collections::BTreeSet<_> = expected.keys().chain(got.keys()).cloned().collect();
    keys.into_iter()
        .filter_map(|k| {
            let e = expected.get(&k).copied().unwrap_or(0);
            let g = got.get(&k).copied().unwrap_or(0);
            (e.abs_diff(g) > TOLERANCE).then_some((k, e, g))
        })
        .collect()
}

struct Outcome {
    pass: bool,
    details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            pass: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl Into<String>) {
        if !ok {
            self.pass = false;
        }
        self.details.push(format!(
            "{} {}",
            if ok { "ok  " } else { "FAIL" },
            detail.into()
        ));
    }

    fn note(&mut self, detail: impl Into<String>) {
        self.details.push(format!("note {}", detail.into()));
    }
}

fn tables(algebra: &str, table: &[&str; 6]) -> Outcome {
    let mut o = Outcome::new();
    for (i, row) in table.iter().enumerate() {
        let n = i + 1;
        let diff = table_diff(&parse_table(row), &compute_json(algebra, n));
        if diff.is_empty() {
            o.check(true, format!("n={n}"));
        } else {
            let shown: Vec<_> = diff
                .iter()
                .map(|(p, e, g)| format!("{p}: table {e}, computed {g}"))
                .collect();
            o.check(false, format!("n={n}: {}", shown.join("; ")));
        }
    }
    o
}

fn ut2e_tables() -> Outcome {
    let mut o = tables("ut2e", &UT2E_TABLE);
    // independent routes for the (2^3) cell at n = 6
    let cell = Partition::new(vec![2, 2, 2]).unwrap();
    let closed = FormulaId::HilbertUT2E.evaluate(&cell).value();
    let slices: Vec<_> = (0..=6)
        .map(|n| proper_cocharacter(AlgebraId::UT2E, n).unwrap())
        .collect();
    let interlaced = proper_to_ordinary_interlace(&slices, 6)
        .unwrap()
        .multiplicity(&cell);
    let g = parse_table(G_TABLE[5])[&cell];
    o.note(format!(
        "(2^3) at n=6: closed form for H(UT2(E)) gives {closed:?}, interlacing gives {interlaced}, \
         the G table gives {g} and T(UT2(E)) is contained in T(G)"
    ));
    o
}

fn sweep() -> Outcome {
    let mut o = Outcome::new();
    let out = cli(&["verify", "--formula", "all", "--max-degree", "12"]);
    let report: FindingsReport = serde_json::from_str(&out.stdout).unwrap();
    o.check(out.code == 0, format!("exit code {}", out.code));
    let total = partitions_up_to(12).len();
    for s in &report.sections {
        let SectionFindings::Formula(findings) = &s.findings else {
            o.check(false, format!("{}: unexpected section kind", s.id));
            continue;
        };
        let silent = findings
            .iter()
            .filter(|f| f.status == Status::NotCovered && f.formula_value.is_some())
            .count();
        o.check(
            s.summary.mismatch == 0 && findings.len() == total && silent == 0,
            format!(
                "{}: {} of {total} classified, {} mismatch, {} not-covered",
                s.id,
                findings.len(),
                s.summary.mismatch,
                s.summary.not_covered
            ),
        );
    }
    for id in ["prop-5.4", "prop-6.2"] {
        o.check(
            report
                .sections
                .iter()
                .any(|s| s.id == id && s.summary.mismatch == 0),
            format!("{id} present with zero mismatches"),
        );
    }
    let notes = |id: &str| {
        report
            .sections
            .iter()
            .find(|s| s.id == id)
            .map(|s| s.resolution_notes.join(" | "))
            .unwrap_or_default()
    };
    o.check(
        notes("prop-6.1").contains("m >= 2"),
        "prop-6.1 resolution logged",
    );
    o.check(
        notes("prop-5.4").contains("overlapping"),
        "prop-5.4 resolution logged",
    );
    o
}

fn proper_e() -> Outcome {
    let mut o = Outcome::new();
    let lhs = proper_to_ordinary_series(&proper_series_e(8)).unwrap();
    o.check(
        lhs == series_e(8),
        "sum S_(k) * H^B(E) = H(E) through degree 8",
    );
    o
}

fn transforms() -> Outcome {
    let mut o = Outcome::new();
    let geom =
        proper_to_ordinary_series(&proper_hilbert_series(AlgebraId::UT2E, 8).unwrap()).unwrap();
    let slices: Vec<_> = (0..=8)
        .map(|n| proper_cocharacter(AlgebraId::UT2E, n).unwrap())
        .collect();
    for n in 0..=8 {
        let a = proper_to_ordinary_interlace(&slices, n).unwrap();
        let b = geom.degree_slice(n).unwrap();
        o.check(a == b, format!("n={n}"));
    }
    o
}

fn oracle() -> Outcome {
    let mut o = Outcome::new();
    let mut pairs = 0usize;
    let mut bad = Vec::new();
    for la in partitions_up_to(8) {
        for mu in partitions_up_to(8 - la.weight()) {
            pairs += 1;
            let vars = la.weight() + mu.weight();
            if !oracle_product_check(&la, &mu, vars) {
                bad.push(format!("{la} * {mu}"));
            }
        }
    }
    o.check(
        bad.is_empty(),
        format!("{pairs} pairs, {} disagreements {bad:?}", bad.len()),
    );
    o
}

/// `c = 2` exactly on this region, for `ν = (k1,k2,1)` and two-row `λ, μ`.
fn double_region(nu: &Partition, la: &Partition, mu: &Partition) -> bool {
    let d = nu.part(0) as i64 - la.part(0) as i64;
    mu.part(1) as i64 <= d && d < mu.part(0) as i64 && la.part(1) + mu.part(0) <= nu.part(0)
}

fn restriction_table() -> Outcome {
    let mut o = Outcome::new();
    let findings = verify_restriction_table(8).unwrap();
    let listed: Vec<_> = findings
        .iter()
        .filter(|f| f.status != Status::NotCovered)
        .collect();
    let mismatches: Vec<_> = listed
        .iter()
        .filter(|f| f.status == Status::Mismatch)
        .collect();
    let example = mismatches
        .first()
        .map(|f| {
            format!(
                ", e.g. nu={} lambda={} mu={} computed {}",
                f.nu, f.lambda, f.mu, f.engine
            )
        })
        .unwrap_or_default();
    o.check(
        mismatches.is_empty(),
        format!(
            "{} listed components, {} disagree with the stated multiplicity{example}",
            listed.len(),
            mismatches.len()
        ),
    );
    let rows_ok = findings
        .iter()
        .filter(|f| f.nu.len() <= 2)
        .all(|f| f.engine == 1 && f.status != Status::Mismatch);
    o.check(
        rows_ok,
        "(n) and (k1,k2): every component has multiplicity 1",
    );
    let two_rows = |p: &Partition| p.len() == 2;
    let b_line: Vec<_> = findings
        .iter()
        .filter(|f| f.nu.len() == 3 && two_rows(&f.lambda) && two_rows(&f.mu))
        .collect();
    o.note(format!(
        "(k1,k2,1) with two-row lambda, mu: multiplicity 2 implies m1 - 1 >= m2 in {} of {} cases with 2",
        b_line
            .iter()
            .filter(|f| f.engine == 2 && f.mu.part(0) > f.mu.part(1))
            .count(),
        b_line.iter().filter(|f| f.engine == 2).count()
    ));
    let region_ok = b_line
        .iter()
        .all(|f| (f.engine == 2) == double_region(&f.nu, &f.lambda, &f.mu));
    o.note(format!(
        "multiplicity 2 exactly when m2 <= k1 - l1 <= m1 - 1 and l2 + m1 <= k1: {}",
        if region_ok { "holds" } else { "violated" }
    ));
    let max = findings.iter().map(|f| f.engine).max().unwrap_or(0);
    o.check(max <= 2, format!("largest multiplicity {max}"));
    o
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn properties() -> Outcome {
    let mut o = Outcome::new();
    let mut symmetric = true;
    let mut dual = true;
    let mut triples = 0usize;
    for n in 0..=10 {
        for nu in generate_partitions(n) {
            let nu_c = nu.conjugate();
            for la in partitions_up_to(n).into_iter().filter(|la| nu.contains(la)) {
                for mu in generate_partitions(n - la.weight()) {
                    let c = lr_coefficient(&la, &mu, &nu);
                    triples += 1;
                    symmetric &= c == lr_coefficient(&mu, &la, &nu);
                    dual &= c == lr_coefficient(&la.conjugate(), &mu.conjugate(), &nu_c);
                }
            }
        }
    }
    o.check(
        symmetric,
        format!("c(la,mu,nu) = c(mu,la,nu) on {triples} triples, |nu| <= 10"),
    );
    o.check(dual, "c(la',mu',nu') = c(la,mu,nu), |nu| <= 10");
    let mut conserved = true;
    for nu in partitions_up_to(8) {
        for k in 0..=nu.weight() {
            conserved &=
                restrict(&nu, k).unwrap().dimension().unwrap() == nu.hook_dimension().unwrap();
        }
    }
    o.check(conserved, "restriction keeps dimension, |nu| <= 8");
    let codim = (1..=8).all(|n| codimension(AlgebraId::E, n).unwrap() == 1 << (n - 1));
    o.check(codim, "codimension(E, n) = 2^(n-1), n <= 8");
    let squares = (0..=8u64).all(|n| {
        generate_partitions(n as usize)
            .iter()
            .map(|la| la.hook_dimension().unwrap().pow(2))
            .sum::<u64>()
            == factorial(n)
    });
    o.check(squares, "sum of (f^la)^2 = n!, n <= 8");
    o
}

fn determinism() -> Outcome {
    let mut o = Outcome::new();
    let mut runs: Vec<Vec<String>> = Vec::new();
    let mut reports = Vec::new();
    for jobs in ["1", "8", "1", "8"] {
        let mut outputs = Vec::new();
        for algebra in ["e", "e0", "g", "ut2f", "ut2e"] {
            for format in ["json", "csv", "text"] {
                for proper in [false, true] {
                    let mut args = vec![
                        "--jobs",
                        jobs,
                        "compute",
                        "--algebra",
                        algebra,
                        "--degree",
                        "8",
                        "--format",
                        format,
                    ];
                    if proper {
                        args.push("--proper");
                    }
                    outputs.push(cli(&args).stdout);
                }
            }
        }
        for n in ["0", "3", "7"] {
            outputs.push(cli(&["--jobs", jobs, "graded", "--degree", n]).stdout);
        }
        let report = cli(&[
            "--jobs",
            jobs,
            "verify",
            "--formula",
            "prop-6.2",
            "--max-degree",
            "9",
        ])
        .stdout;
        reports.push(report.clone());
        // the config echo in the header records the worker count
        let mut v: serde_json::Value = serde_json::from_str(&report).unwrap();
        v.as_object_mut().unwrap().remove("config");
        outputs.push(v.to_string());
        runs.push(outputs);
    }
    let identical = runs.windows(2).all(|w| w[0] == w[1]);
    o.check(
        identical,
        format!(
            "{} outputs byte-identical across 4 runs (jobs 1, 8, 1, 8)",
            runs[0].len()
        ),
    );
    o.check(
        reports[0] == reports[2] && reports[1] == reports[3],
        "verify reports byte-identical including the header for equal configs",
    );
    o.check(runs[0].iter().all(|s| !s.is_empty()), "no empty output");
    o
}

/// Label, wall-clock budget in seconds, check.
type Criterion = (&'static str, f64, fn() -> Outcome);

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            "1 chi_n(G) matches the reference tables, n = 1..6",
            BUDGET_G_TABLES,
            || tables("g", &G_TABLE),
        ),
        (
            "2 chi_n(UT2(E)) matches the reference tables, n = 1..6",
            BUDGET_UT2E_TABLES,
            ut2e_tables,
        ),
        ("3 closed-form sweep to degree 12", BUDGET_SWEEP, sweep),
        (
            "4 proper series of E gives H(E) through degree 8",
            BUDGET_PROPER_E,
            proper_e,
        ),
        (
            "5 interlacing and geometric routes agree for UT2(E), n <= 8",
            BUDGET_TRANSFORMS,
            transforms,
        ),
        (
            "6 LR expansion equals the monomial oracle, |la|+|mu| <= 8",
            BUDGET_ORACLE,
            oracle,
        ),
        (
            "7 restriction table through |nu| = 8",
            BUDGET_TABLE,
            restriction_table,
        ),
        ("8 property suites", BUDGET_PROPERTIES, properties),
        (
            "9 byte-identical output with 1 and 8 workers",
            f64::INFINITY,
            determinism,
        ),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if budget.is_finite() {
            outcome.check(
                elapsed <= Duration::from_secs_f64(budget),
                format!("{:.2}s within {budget}s", elapsed.as_secs_f64()),
            );
        }
        if !outcome.pass {
            failed += 1;
        }
        println!(
            "{} {name} ({:.2}s)",
            if outcome.pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        for d in &outcome.details {
            println!("    {d}");
        }
    }
    println!("acceptance: {failed} of 9 criteria failed");
    if failed > 0 && std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
