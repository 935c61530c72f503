//! Acceptance gate: one test per published correctness criterion, each
//! printing a single `ACCEPTANCE n (name): PASS` / `FAIL` line.
//!
//! Every criterion is an exact polynomial identity (tolerance zero). The
//! sweeps are sized so the whole gate finishes in well under a minute on
//! one core: rank <= 3 types everywhere, rank 4 types (including the
//! 1152-element F4) where the criterion calls for them.

use std::process::Command;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;

use hecketrace_core::cartan::{WeylGroup, DEFAULT_MAX_ORDER};
use hecketrace_core::chars::{
    char_value, hecke_character_table, q1_characters_orthonormal, verify_2_6a,
    verify_a_chain_sum,
};
use hecketrace_core::counts::{
    check_5_4b, check_count_consistency, count_report, elliptic_quotients, CountValue,
};
use hecketrace_core::rings::QPoly;
use hecketrace_core::trace::{
    elliptic_monic_report, tau, tau_direct_oracle, verify_inversion_identity, RTable,
};
use hecketrace_core::verify::{run_suite, Suite, SuiteOptions};

/// Rank <= 2 types with a full character-table model.
const RANK2_TYPES: [&str; 5] = ["A1", "A1xA1", "A2", "B2", "G2"];
/// Rank <= 3 sweep plus the rank-4 pair used by the positivity criteria.
const POSITIVITY_TYPES: [&str; 10] = [
    "A1", "A1xA1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4",
];
/// Every type of rank <= 4 (plus the smallest reducible one).
const RANK4_TYPES: [&str; 13] = [
    "A1", "A1xA1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2",
];

fn group(spec: &str) -> Arc<WeylGroup> {
    WeylGroup::new(spec, DEFAULT_MAX_ORDER).expect("test type within budget")
}

/// Print the per-criterion verdict line, then fail the test on FAIL.
fn report(number: u32, name: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {number} ({name}): {verdict}");
    assert!(ok, "criterion {number} ({name}) failed: {detail}");
}

#[test]
fn acceptance_01_trace_oracle_equivalence() {
    let mut detail = String::new();
    let mut ok = true;
    for spec in ["A1", "A2", "A1xA1", "B2", "G2", "A3", "B3"] {
        let g = group(spec);
        for w in g.ids() {
            let by_structure = tau(&g, w).unwrap().tau_q;
            let by_oracle = tau_direct_oracle(&g, w).unwrap();
            if by_structure != by_oracle {
                ok = false;
                detail = format!("{spec} w={w}: {by_structure} != {by_oracle}");
            }
        }
    }
    report(1, "trace oracle equivalence", ok, &detail);
}

#[test]
fn acceptance_02_inversion_identity() {
    let mut detail = String::new();
    let mut ok = true;
    for spec in ["A2", "B2", "A3", "B3"] {
        let g = group(spec);
        let mut table = RTable::new(&g);
        for w in g.ids() {
            let (pass, witness) = verify_inversion_identity(&g, &mut table, w).unwrap();
            if !pass {
                ok = false;
                detail = format!("{spec} w={w}: {witness}");
            }
        }
    }
    report(2, "inversion identity", ok, &detail);
}

fn suite_all_pass(suite: Suite, types: &[&str]) -> (bool, String) {
    let options = SuiteOptions {
        types: types.iter().map(|t| t.to_string()).collect(),
        max_pairs: None,
        ..SuiteOptions::default()
    };
    let report = run_suite(suite, &options).unwrap();
    let ok = report.summary.fail == 0 && report.summary.skip == 0 && report.summary.pass > 0;
    let detail = format!(
        "suite {}: {} pass, {} fail, {} skip",
        report.suite, report.summary.pass, report.summary.fail, report.summary.skip
    );
    (ok, detail)
}

#[test]
fn acceptance_03_delta_positivity() {
    let (ok, detail) = suite_all_pass(Suite::Positivity, &POSITIVITY_TYPES);
    report(3, "delta positivity of normalized traces and R-tildes", ok, &detail);
}

#[test]
fn acceptance_04_bar_symmetry() {
    let (ok, detail) = suite_all_pass(Suite::Symmetry, &POSITIVITY_TYPES);
    report(4, "bar symmetry of normalized traces and R-tildes", ok, &detail);
}

#[test]
fn acceptance_05_elliptic_monicity() {
    let mut detail = String::new();
    let mut ok = true;
    for spec in RANK4_TYPES {
        let g = group(spec);
        for record in elliptic_monic_report(&g).unwrap() {
            if record.is_elliptic && !record.monic_ok {
                ok = false;
                detail = format!("{spec} class {:?}: {}", record.class_rep, record.witness);
            }
        }
    }
    // Hand-computed anchors.
    let a1 = group("A1");
    let expected = QPoly::q().sub(&QPoly::one());
    if tau(&a1, a1.word_id(&[1]).unwrap()).unwrap().tau_q != expected {
        ok = false;
        detail = "A1 generator trace is not q - 1".to_string();
    }
    let a2 = group("A2");
    let expected = QPoly::from_coeffs(vec![
        BigInt::from(1),
        BigInt::from(-2),
        BigInt::from(1),
    ]);
    if tau(&a2, a2.word_id(&[1, 2]).unwrap()).unwrap().tau_q != expected {
        ok = false;
        detail = "A2 Coxeter trace is not (q - 1)^2".to_string();
    }
    report(5, "elliptic minimal-length traces monic of degree |w|", ok, &detail);
}

#[test]
fn acceptance_06_divisibility_and_palindromy() {
    let mut detail = String::new();
    let mut ok = true;
    for spec in RANK4_TYPES {
        let g = group(spec);
        let mut table = RTable::new(&g);
        for class in g.conjugacy_classes() {
            if !class.is_elliptic {
                continue;
            }
            for &w in &class.minimal {
                match elliptic_quotients(&g, &mut table, w) {
                    Ok(eq) => {
                        let (pass, witness) = check_5_4b(&g, &eq);
                        if !pass {
                            ok = false;
                            detail = format!("{spec} w={w}: {witness}");
                        }
                    }
                    Err(err) => {
                        ok = false;
                        detail = format!("{spec} w={w}: {err}");
                    }
                }
            }
        }
    }
    report(6, "exact (q-1)^r divisibility and palindromic quotients", ok, &detail);
}

#[test]
fn acceptance_07_twisted_trace_identity() {
    let mut detail = String::new();
    let mut ok = true;
    let mut checks = 0usize;
    for spec in RANK2_TYPES {
        let g = group(spec);
        let table = hecke_character_table(&g).unwrap();
        let mut rtable = RTable::new(&g);
        for w in g.ids() {
            let (pass, lhs, rhs) = verify_2_6a(&g, &table, &mut rtable, w).unwrap();
            checks += 1;
            if !pass {
                ok = false;
                detail = format!("{spec} w={w}: {lhs} != {rhs}");
            }
        }
    }
    if checks != 32 {
        ok = false;
        detail = format!("expected 32 checks across the rank <= 2 sweep, ran {checks}");
    }
    report(7, "twisted-trace expansion of R_{1,w}", ok, &detail);
}

#[test]
fn acceptance_08_a_chain_sum() {
    let mut detail = String::new();
    let mut ok = true;
    for spec in RANK2_TYPES {
        let g = group(spec);
        let table = hecke_character_table(&g).unwrap();
        let mut rtable = RTable::new(&g);
        for w in g.ids() {
            let (pass, lhs, rhs) = verify_a_chain_sum(&g, &table, &mut rtable, w).unwrap();
            if !pass {
                ok = false;
                detail = format!("{spec} w={w}: {lhs} != {rhs}");
            }
        }
    }
    report(8, "a-coefficient chain sums to |W| q^nu R_{1,w}", ok, &detail);
}

#[test]
fn acceptance_09_character_table_sanity() {
    let mut detail = String::new();
    let mut ok = true;
    for spec in RANK2_TYPES {
        let g = group(spec);
        // Construction re-checks the quadratic and braid relations and the
        // sum-of-squares count; any violation surfaces as an error here.
        let table = match hecke_character_table(&g) {
            Ok(table) => table,
            Err(err) => {
                ok = false;
                detail = format!("{spec}: {err}");
                continue;
            }
        };
        match q1_characters_orthonormal(&g, &table) {
            Ok(true) => {}
            Ok(false) => {
                ok = false;
                detail = format!("{spec}: q -> 1 characters are not orthonormal");
            }
            Err(err) => {
                ok = false;
                detail = format!("{spec}: {err}");
            }
        }
    }
    // Frozen value: the two-dimensional A2 character on the Coxeter element.
    let a2 = group("A2");
    let table = hecke_character_table(&a2).unwrap();
    let rho = table.iter().find(|e| e.label == "rho_1").unwrap();
    let value = char_value(&a2, rho, a2.word_id(&[1, 2]).unwrap()).unwrap();
    if value != QPoly::q().neg() {
        ok = false;
        detail = format!("A2 rho_1 Coxeter value {value} != -q");
    }
    report(9, "character tables: relations, square count, orthonormality", ok, &detail);
}

#[test]
fn acceptance_10_count_report_consistency() {
    let mut detail = String::new();
    let mut ok = true;
    let q_values: Vec<BigInt> = [2u32, 3, 4, 5, 7, 8, 9].map(BigInt::from).to_vec();
    for spec in ["A1", "A1xA1", "A2", "B2", "G2", "A3", "B3", "C3"] {
        let g = group(spec);
        let mut table = RTable::new(&g);
        for w in g.ids() {
            for outcome in check_count_consistency(&g, &mut table, w).unwrap() {
                if !outcome.pass {
                    ok = false;
                    detail = format!("{spec} w={w} {}: {}", outcome.id, outcome.witness);
                }
            }
            for q in &q_values {
                // Numeric reports enforce that every unconditional entry is
                // a non-negative integer; a violation is an error here.
                match count_report(&g, &mut table, w, Some(q)) {
                    Ok(report) => {
                        for (id, entry) in &report.entries {
                            if entry.conditional {
                                continue;
                            }
                            if let CountValue::Integer(n) = &entry.value {
                                if n.is_negative() {
                                    ok = false;
                                    detail = format!("{spec} w={w} q={q} {id} = {n} < 0");
                                }
                            } else {
                                ok = false;
                                detail =
                                    format!("{spec} w={w} q={q} {id} is not an integer");
                            }
                        }
                    }
                    Err(err) => {
                        ok = false;
                        detail = format!("{spec} w={w} q={q}: {err}");
                    }
                }
            }
        }
    }
    // Hand-computed spot row.
    let a1 = group("A1");
    let mut table = RTable::new(&a1);
    let w = a1.word_id(&[1]).unwrap();
    let report10 = count_report(&a1, &mut table, w, Some(&BigInt::from(3))).unwrap();
    for (id, expected) in [("Y_gw", 2), ("tfB_w", 48), ("G_quot_fB", 3)] {
        match &report10.entries[id].value {
            CountValue::Integer(n) if *n == BigInt::from(expected) => {}
            other => {
                ok = false;
                detail = format!("A1 w=1 q=3 {id} = {other:?}, expected {expected}");
            }
        }
    }
    report(10, "count reports: integrality, cross-checks, spot row", ok, &detail);
}

#[test]
fn acceptance_11_cli_determinism() {
    let binary = env!("CARGO_BIN_EXE_hecketrace");
    let run = |json: bool| {
        let mut cmd = Command::new(binary);
        cmd.args(["--quiet", "verify", "--suite", "all", "--types", "A2,B2"]);
        if json {
            cmd.arg("--json");
        }
        cmd.output().expect("binary runs")
    };
    let mut ok = true;
    let mut detail = String::new();
    for json in [false, true] {
        let first = run(json);
        let second = run(json);
        if !first.status.success() || !second.status.success() {
            ok = false;
            detail = format!("exit codes {:?} / {:?}", first.status, second.status);
        }
        if first.stdout != second.stdout {
            ok = false;
            detail = format!("stdout differs between runs (json = {json})");
        }
        if first.stdout.is_empty() {
            ok = false;
            detail = "no output produced".to_string();
        }
    }
    report(11, "byte-identical verification reports across runs", ok, &detail);
}
