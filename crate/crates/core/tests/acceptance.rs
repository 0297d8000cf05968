//! Acceptance suite: every release criterion at its stated bound, one
//! pass/fail line per criterion (visible with `--nocapture`).
//!
//! Run with: cargo test -p pdtrank --test acceptance -- --nocapture

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use pdtrank::checks::{find_check, CheckParams, CheckReport};
use pdtrank::designated::{enumerate_s1, pdt_count};
use pdtrank::partition::crank_distribution;
use pdtrank::ranks::{ndt_counts, nmdt_counts, nmdt_residue};
use pdtrank::series::{check_eq_3_2, check_eq_3_5, crank_gf, dissection_g, pdt_gf};
use pdtrank::tables::{golden_lines, table_tsv, GoldenTable};

fn run_check(name: &str, params: CheckParams) -> CheckReport {
    let def = find_check(name).unwrap_or_else(|| panic!("unknown check {name}"));
    let report = def.run(&params);
    assert!(report.passed(), "{}", report.render());
    report
}

fn finish(criterion: &str, budget: Option<Duration>, started: Instant) {
    let elapsed = started.elapsed();
    if let Some(limit) = budget {
        assert!(
            elapsed <= limit,
            "criterion {criterion} took {elapsed:?}, budget {limit:?}"
        );
    }
    println!("acceptance {criterion}: PASS ({elapsed:?})");
}

#[test]
fn criterion_01_pdt_of_5_is_24_both_routes() {
    let started = Instant::now();
    assert_eq!(enumerate_s1(5).len(), 24, "enumeration");
    assert_eq!(pdt_count(5), 24, "counting formula");
    assert_eq!(pdt_gf(5).coeff(5), &BigInt::from(24), "series coefficient");
    finish("1 (PD_t(5) = 24)", Some(Duration::from_secs(1)), started);
}

#[test]
fn criterion_02_table_2_1_reproduction() {
    let started = Instant::now();
    let rendered: Vec<String> = table_tsv(5).lines().map(str::to_string).collect();
    let golden: Vec<&str> = golden_lines(GoldenTable::Table21)
        .filter(|l| !l.is_empty())
        .collect();
    assert_eq!(rendered, golden, "row-for-row table match");
    assert_eq!(rendered.len(), 25, "header plus 24 rows");
    let x_rows = rendered.iter().filter(|l| l.contains("\tX\t")).count();
    assert_eq!(x_rows, 4, "four exceptional rows");
    run_check("table-2-1", CheckParams::default());
    finish(
        "2 (table 2.1 bit-exact)",
        Some(Duration::from_secs(1)),
        started,
    );
}

#[test]
fn criterion_03_signed_counts_at_5() {
    let started = Instant::now();
    let table = ndt_counts(5);
    assert_eq!(table.count(0), 4);
    assert_eq!(table.count(1), 4);
    assert_eq!(table.count(-1), 4);
    finish("3 (N_dt(0|1|-1, 5) = 4)", None, started);
}

#[test]
fn criterion_04_table_4_2_with_documented_deviation() {
    let started = Instant::now();
    let report = run_check("table-4-2", CheckParams::default());
    assert_eq!(report.notes.len(), 1, "exactly one documented deviation");
    assert!(report.notes[0].contains("2'+~1'+1+1"));
    assert!(report.notes[0].contains("-2"));
    let residues = nmdt_residue(5, 3);
    assert_eq!(residues, BTreeMap::from([(0, 8), (1, 8), (2, 8)]));
    finish(
        "4 (table 4.2 + 8/8/8)",
        Some(Duration::from_secs(1)),
        started,
    );
}

#[test]
fn criterion_05_equidistribution_at_3n_plus_2() {
    let started = Instant::now();
    run_check(
        "theorem-1-1",
        CheckParams {
            max_n: Some(32),
            terms: None,
        },
    );
    finish(
        "5 (three equal classes, n <= 32)",
        Some(Duration::from_secs(120)),
        started,
    );
}

#[test]
fn criterion_06_congruences_enumeration_and_series() {
    let started = Instant::now();
    run_check(
        "congruence-pd",
        CheckParams {
            max_n: Some(32),
            terms: Some(300),
        },
    );
    run_check(
        "congruence-pdt",
        CheckParams {
            max_n: Some(32),
            terms: Some(300),
        },
    );
    finish("6 (mod-3 congruences)", None, started);
}

#[test]
fn criterion_07_series_identities_to_300() {
    let started = Instant::now();
    assert!(check_eq_3_2(300), "doubled Lambert identity");
    assert!(check_eq_3_5(300), "theta identity");
    let g = dissection_g(300);
    let mut m = 2usize;
    while m <= 300 {
        assert!(g.coeff(m).is_zero(), "G at q^{m}");
        m += 3;
    }
    finish(
        "7 (series identities, 300 terms)",
        Some(Duration::from_secs(10)),
        started,
    );
}

#[test]
fn criterion_08_dissection_bridge() {
    let started = Instant::now();
    run_check(
        "bridge-G",
        CheckParams {
            max_n: Some(30),
            terms: None,
        },
    );
    finish("8 (enumeration matches eta/theta series)", None, started);
}

#[test]
fn criterion_09_bijection_suites() {
    let started = Instant::now();
    let params = CheckParams {
        max_n: Some(25),
        terms: None,
    };
    run_check("delta-roundtrip", params);
    run_check("phi-bijection", params);
    run_check("class-partition", params);
    run_check("a-implies-rank0", params);
    run_check("ndt-nmdt-equal", params);
    // the weight-2 degeneracy resolves as documented
    let modified = nmdt_counts(2);
    assert_eq!(modified, BTreeMap::from([(0, 1), (1, 1), (-1, 1)]));
    assert_eq!(&modified, ndt_counts(2).counts());
    finish("9 (bijections, n <= 25)", None, started);
}

#[test]
fn criterion_10_crank_generating_function() {
    let started = Instant::now();
    let gf = crank_gf(20);
    for n in 0..=20u32 {
        let expected: BTreeMap<i64, BigInt> = crank_distribution(n)
            .counts()
            .iter()
            .map(|(&m, &c)| (m, BigInt::from(c)))
            .collect();
        assert_eq!(gf.coeff(n as usize), &expected, "n={n}");
    }
    // the weight-1 anomaly in both representations
    assert_eq!(
        gf.coeff(1),
        &BTreeMap::from([
            (-1, BigInt::from(1)),
            (0, BigInt::from(-1)),
            (1, BigInt::from(1))
        ])
    );
    finish("10 (crank series vs counting, n <= 20)", None, started);
}
