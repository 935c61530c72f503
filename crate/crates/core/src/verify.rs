//! Verification sweeps: every identity the library can check, packaged as
//! named suites producing sorted, reproducible check records.
//!
//! A record is one concrete check on one group element (or pair, or class):
//! `{check, type, w, z, status, witness}` with status `pass`, `fail` or
//! `skip`. Suites never abort on a theorem violation — they record it —
//! but genuine usage errors (unknown type strings, bad q) still surface as
//! errors. Types whose Weyl group exceeds the enumeration budget yield a
//! single skip record instead of failing the whole run.
//!
//! Determinism: records are sorted, pair subsampling uses a ChaCha8 stream
//! derived from the user seed plus the suite and type names, and nothing
//! here reads clocks or iterates hash maps, so a rerun with equal options
//! is byte-identical.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cartan::{word_string, WeylGroup};
use crate::chars::{
    char_value, hecke_character_table, q1_characters_orthonormal, tau_y, verify_2_6a,
    verify_a_chain_sum, verify_duality_char_identity, HeckeIrrep,
};
use crate::counts::{check_5_4b, check_count_consistency, count_report, elliptic_quotients};
use crate::error::{Error, Result};
use crate::rings::QPoly;
use crate::trace::{
    bar_symmetric, elliptic_monic_report, tau, tau_direct_oracle, verify_inversion_identity,
    RTable, ORACLE_MAX_ORDER,
};

use num_bigint::BigInt;
use num_traits::One;

/// The named verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Positivity,
    Symmetry,
    Inversion,
    EllipticMonic,
    Divisibility,
    Identity26a,
    Chars,
    CountsConsistency,
    OracleTau,
}

impl Suite {
    /// Every concrete suite, in canonical execution order.
    pub const ALL: [Suite; 9] = [
        Suite::Positivity,
        Suite::Symmetry,
        Suite::Inversion,
        Suite::EllipticMonic,
        Suite::Divisibility,
        Suite::Identity26a,
        Suite::Chars,
        Suite::CountsConsistency,
        Suite::OracleTau,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Positivity => "positivity",
            Suite::Symmetry => "symmetry",
            Suite::Inversion => "inversion",
            Suite::EllipticMonic => "elliptic-monic",
            Suite::Divisibility => "divisibility",
            Suite::Identity26a => "identity-2-6a",
            Suite::Chars => "chars",
            Suite::CountsConsistency => "counts-consistency",
            Suite::OracleTau => "oracle-tau",
        }
    }

    /// Parses a suite name; `"all"` expands to every suite.
    pub fn parse(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Suite::ALL
            .iter()
            .copied()
            .find(|s| s.name() == name)
            .map(|s| vec![s])
            .ok_or_else(|| Error::UnknownSuite {
                name: name.to_string(),
                expected: format!("all, {}", Suite::ALL.map(|s| s.name()).join(", ")),
            })
    }
}

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// One verification record.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check: String,
    #[serde(rename = "type")]
    pub type_spec: String,
    pub w: Option<String>,
    pub z: Option<String>,
    pub status: Status,
    pub witness: String,
}

/// Pass/fail/skip tallies for one suite.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

/// All records from one suite, sorted, plus the tallies.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }
}

/// Options shared by every suite run.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Cartan type specs to sweep.
    pub types: Vec<String>,
    /// Enumeration budget for each group.
    pub max_order: u128,
    /// Cap on the number of (z, w) pairs per type in pair sweeps; `None`
    /// checks all order^2 pairs.
    pub max_pairs: Option<usize>,
    /// Seed for the pair subsampler.
    pub seed: u64,
    /// q values for numeric count checks.
    pub q_values: Vec<u64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            types: vec!["A1".into(), "A2".into(), "B2".into()],
            max_order: crate::cartan::DEFAULT_MAX_ORDER,
            max_pairs: None,
            seed: 0,
            q_values: vec![2, 3, 4, 5, 7, 8, 9],
        }
    }
}

fn record(
    check: impl Into<String>,
    type_spec: &str,
    w: Option<String>,
    z: Option<String>,
    ok: bool,
    witness: impl Into<String>,
) -> CheckRecord {
    CheckRecord {
        check: check.into(),
        type_spec: type_spec.to_string(),
        w,
        z,
        status: if ok { Status::Pass } else { Status::Fail },
        witness: witness.into(),
    }
}

fn skip(
    check: impl Into<String>,
    type_spec: &str,
    witness: impl Into<String>,
) -> CheckRecord {
    CheckRecord {
        check: check.into(),
        type_spec: type_spec.to_string(),
        w: None,
        z: None,
        status: Status::Skip,
        witness: witness.into(),
    }
}

/// FNV-1a, used to fold suite and type names into the subsampler seed so
/// each (suite, type) pair draws an independent, platform-stable stream.
fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn pair_rng(seed: u64, suite: Suite, type_spec: &str) -> ChaCha8Rng {
    let tag = format!("{}/{}", suite.name(), type_spec);
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a(tag.as_bytes()))
}

/// The (z, w) pairs to sweep: all of them, or a sorted seeded sample.
fn sampled_pairs(rng: &mut ChaCha8Rng, order: usize, max_pairs: Option<usize>) -> Vec<(u32, u32)> {
    let total = order * order;
    let take = max_pairs.unwrap_or(total).min(total);
    let indices: Vec<usize> = if take == total {
        (0..total).collect()
    } else {
        let mut sample = rand::seq::index::sample(rng, total, take).into_vec();
        sample.sort_unstable();
        sample
    };
    indices
        .into_iter()
        .map(|i| ((i / order) as u32, (i % order) as u32))
        .collect()
}

/// Runs one suite (or, for `"all"`, the caller loops) over all requested
/// types. Budget refusals become skip records; bad type strings are errors.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut records = Vec::new();
    for type_spec in &opts.types {
        match WeylGroup::new(type_spec, opts.max_order) {
            Ok(group) => run_on_group(suite, &group, opts, &mut records)?,
            Err(e @ Error::BudgetExceeded { .. }) => {
                records.push(skip("enumerate", type_spec, e.to_string()));
            }
            Err(e) => return Err(e),
        }
    }
    records.sort_by(|a, b| {
        (&a.check, &a.type_spec, &a.w, &a.z, a.status, &a.witness)
            .cmp(&(&b.check, &b.type_spec, &b.w, &b.z, b.status, &b.witness))
    });
    let mut summary = Summary::default();
    for r in &records {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skip => summary.skip += 1,
        }
    }
    Ok(SuiteReport {
        suite: suite.name(),
        records,
        summary,
    })
}

fn run_on_group(
    suite: Suite,
    group: &Arc<WeylGroup>,
    opts: &SuiteOptions,
    records: &mut Vec<CheckRecord>,
) -> Result<()> {
    let ty = group.type_spec();
    let word = |id: u32| Some(word_string(&group.reduced_word(id)));
    match suite {
        Suite::Positivity => {
            for w in group.ids() {
                match tau(group, w) {
                    Ok(t) => records.push(record(
                        "tau-positivity",
                        ty,
                        word(w),
                        None,
                        true,
                        format!("delta coeffs {:?}", t.delta_coeffs),
                    )),
                    Err(e @ Error::TheoremViolation { .. }) => {
                        records.push(record("tau-positivity", ty, word(w), None, false, e.to_string()))
                    }
                    Err(e) => return Err(e),
                }
            }
            let mut rtable = RTable::new(group);
            let mut rng = pair_rng(opts.seed, suite, ty);
            for (z, w) in sampled_pairs(&mut rng, group.order(), opts.max_pairs) {
                match rtable.r_poly(z, w) {
                    Ok(r) => records.push(record(
                        "r-positivity",
                        ty,
                        word(w),
                        word(z),
                        true,
                        format!("delta coeffs {:?}", r.delta_coeffs),
                    )),
                    Err(e @ Error::TheoremViolation { .. }) => {
                        records.push(record("r-positivity", ty, word(w), word(z), false, e.to_string()))
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        Suite::Symmetry => {
            for w in group.ids() {
                let t = tau(group, w)?;
                let ok = bar_symmetric(&t.tau_tilde);
                records.push(record(
                    "tau-bar-symmetry",
                    ty,
                    word(w),
                    None,
                    ok,
                    format!("taut = {}", t.tau_tilde),
                ));
            }
            let mut rtable = RTable::new(group);
            let mut rng = pair_rng(opts.seed, suite, ty);
            for (z, w) in sampled_pairs(&mut rng, group.order(), opts.max_pairs) {
                let rt = rtable.r_tilde(z, w);
                let ok = bar_symmetric(&rt);
                records.push(record(
                    "r-bar-symmetry",
                    ty,
                    word(w),
                    word(z),
                    ok,
                    format!("Rt = {rt}"),
                ));
            }
        }
        Suite::Inversion => {
            let mut rtable = RTable::new(group);
            for w in group.ids() {
                let (ok, witness) = verify_inversion_identity(group, &mut rtable, w)?;
                records.push(record("inversion-identity", ty, word(w), None, ok, witness));
            }
        }
        Suite::EllipticMonic => {
            for r in elliptic_monic_report(group)? {
                let w = Some(word_string(&r.class_rep));
                if r.is_elliptic {
                    records.push(record(
                        "elliptic-monic",
                        ty,
                        w,
                        None,
                        r.monic_ok && r.tau_constant,
                        r.witness,
                    ));
                } else {
                    records.push(CheckRecord {
                        check: "elliptic-monic".into(),
                        type_spec: ty.to_string(),
                        w,
                        z: None,
                        status: Status::Skip,
                        witness: format!(
                            "class not elliptic ({} minimal members of length {})",
                            r.minimal_count, r.min_length
                        ),
                    });
                }
            }
        }
        Suite::Divisibility => {
            let mut rtable = RTable::new(group);
            for class in group.conjugacy_classes() {
                if !class.is_elliptic {
                    continue;
                }
                let w = class.representative;
                match elliptic_quotients(group, &mut rtable, w) {
                    Ok(eq) => {
                        records.push(record(
                            "divisibility",
                            ty,
                            word(w),
                            None,
                            true,
                            format!(
                                "underline tau = {}, underline R = {}",
                                eq.underline_tau, eq.underline_r1
                            ),
                        ));
                        let (ok, witness) = check_5_4b(group, &eq);
                        records.push(record("palindromy", ty, word(w), None, ok, witness));
                    }
                    Err(e @ Error::TheoremViolation { .. }) => {
                        records.push(record("divisibility", ty, word(w), None, false, e.to_string()))
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        Suite::Identity26a => {
            if group.rank() > 2 {
                records.push(skip(
                    "identity-2-6a",
                    ty,
                    "requires a rank <= 2 type (dihedral character model)",
                ));
                return Ok(());
            }
            let table = hecke_character_table(group)?;
            let mut rtable = RTable::new(group);
            for w in group.ids() {
                let (ok, lhs, rhs) = verify_2_6a(group, &table, &mut rtable, w)?;
                let witness = if ok {
                    format!("both sides {lhs}")
                } else {
                    format!("{lhs} != {rhs}")
                };
                records.push(record("identity-2-6a", ty, word(w), None, ok, witness));
            }
        }
        Suite::Chars => {
            if group.rank() > 2 {
                records.push(skip(
                    "char-table",
                    ty,
                    "requires a rank <= 2 type (dihedral character model)",
                ));
                return Ok(());
            }
            run_chars_suite(group, records)?;
        }
        Suite::CountsConsistency => {
            let mut rtable = RTable::new(group);
            for w in group.ids() {
                for outcome in check_count_consistency(group, &mut rtable, w)? {
                    records.push(record(outcome.id, ty, word(w), None, outcome.pass, outcome.witness));
                }
                for &q in &opts.q_values {
                    let q = BigInt::from(q);
                    match count_report(group, &mut rtable, w, Some(&q)) {
                        Ok(report) => records.push(record(
                            format!("integrality(q={q})"),
                            ty,
                            word(w),
                            None,
                            true,
                            format!("{} entries integral and non-negative", report.entries.len()),
                        )),
                        Err(e @ Error::TheoremViolation { .. }) => records.push(record(
                            format!("integrality(q={q})"),
                            ty,
                            word(w),
                            None,
                            false,
                            e.to_string(),
                        )),
                        Err(e) => return Err(e),
                    }
                }
            }
        }
        Suite::OracleTau => {
            if group.order() > ORACLE_MAX_ORDER {
                records.push(skip(
                    "oracle-tau",
                    ty,
                    format!(
                        "group order {} exceeds the oracle budget {ORACLE_MAX_ORDER}",
                        group.order()
                    ),
                ));
                return Ok(());
            }
            for w in group.ids() {
                let fast = tau(group, w)?.tau_q;
                let oracle = tau_direct_oracle(group, w)?;
                let ok = fast == oracle;
                let witness = if ok {
                    format!("tau = {fast}")
                } else {
                    format!("structure-constant tau {fast} != regular-representation tau {oracle}")
                };
                records.push(record("oracle-tau", ty, word(w), None, ok, witness));
            }
        }
    }
    Ok(())
}

/// The character-table battery for one rank <= 2 group: construction
/// invariants, orthonormality, class-function property, `tau_1 = tau`,
/// the duality identity per irreducible, the a-chain sum, and the frozen
/// A2 trace value.
fn run_chars_suite(group: &Arc<WeylGroup>, records: &mut Vec<CheckRecord>) -> Result<()> {
    let ty = group.type_spec();
    let word = |id: u32| Some(word_string(&group.reduced_word(id)));
    let table: Vec<HeckeIrrep> = match hecke_character_table(group) {
        Ok(table) => {
            let labels: Vec<&str> = table.iter().map(|e| e.label.as_str()).collect();
            records.push(record(
                "char-table",
                ty,
                None,
                None,
                true,
                format!(
                    "{} irreps ({}); defining relations and sum dim^2 = {} verified",
                    table.len(),
                    labels.join(", "),
                    group.order()
                ),
            ));
            table
        }
        Err(e @ Error::TheoremViolation { .. }) => {
            records.push(record("char-table", ty, None, None, false, e.to_string()));
            return Ok(());
        }
        Err(e) => return Err(e),
    };

    let ok = q1_characters_orthonormal(group, &table)?;
    records.push(record(
        "orthonormality",
        ty,
        None,
        None,
        ok,
        "q = 1 characters orthonormal under the class-weighted inner product",
    ));

    let mut class_fn_ok = true;
    let mut class_fn_witness = "character values constant on equal-length class members".to_string();
    'outer: for class in group.conjugacy_classes() {
        for irrep in &table {
            for pair in class.members.windows(2) {
                if group.length(pair[0]) == group.length(pair[1])
                    && char_value(group, irrep, pair[0])? != char_value(group, irrep, pair[1])?
                {
                    class_fn_ok = false;
                    class_fn_witness = format!(
                        "{} differs inside the class of {}",
                        irrep.label,
                        word_string(&group.reduced_word(class.representative))
                    );
                    break 'outer;
                }
            }
        }
    }
    records.push(record("class-function", ty, None, None, class_fn_ok, class_fn_witness));

    let mut rtable = RTable::new(group);
    for w in group.ids() {
        let twisted = tau_y(group, &table, w, 0)?;
        let plain = tau(group, w)?.tau_q;
        let ok = twisted == plain;
        records.push(record(
            "tau-1",
            ty,
            word(w),
            None,
            ok,
            if ok {
                format!("tau_1 = tau = {plain}")
            } else {
                format!("tau_1 = {twisted} != tau = {plain}")
            },
        ));

        let (ok, lhs, rhs) = verify_a_chain_sum(group, &table, &mut rtable, w)?;
        records.push(record(
            "a-chain",
            ty,
            word(w),
            None,
            ok,
            if ok {
                format!("sum a_wy = {lhs}")
            } else {
                format!("{lhs} != {rhs}")
            },
        ));
    }

    for (e, irrep) in table.iter().enumerate() {
        for w in group.ids() {
            let ok = verify_duality_char_identity(group, &table, &mut rtable, e, w)?;
            records.push(record(
                format!("duality:{}", irrep.label),
                ty,
                word(w),
                None,
                ok,
                if ok { "trace matches R-expansion" } else { "trace differs from R-expansion" },
            ));
        }
    }

    if ty == "A2" {
        let c = group.word_id(&[1, 2])?;
        let got = char_value(group, &table[2], c)?;
        let expected = QPoly::monomial(1, BigInt::one()).neg();
        let ok = got == expected;
        records.push(record(
            "frozen-rho1-trace",
            ty,
            word(c),
            None,
            ok,
            format!("tr(T_{{12}}, rho_1) = {got}"),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(types: &[&str]) -> SuiteOptions {
        SuiteOptions {
            types: types.iter().map(|s| s.to_string()).collect(),
            ..SuiteOptions::default()
        }
    }

    #[test]
    fn suite_parsing() {
        assert_eq!(Suite::parse("all").unwrap().len(), 9);
        assert_eq!(Suite::parse("positivity").unwrap(), vec![Suite::Positivity]);
        assert_eq!(
            Suite::parse("identity-2-6a").unwrap(),
            vec![Suite::Identity26a]
        );
        assert!(Suite::parse("nonsense").is_err());
    }

    #[test]
    fn default_types_all_suites_pass() {
        for suite in Suite::ALL {
            let report = run_suite(suite, &SuiteOptions::default()).unwrap();
            assert_eq!(report.summary.fail, 0, "{}", report.suite);
            assert!(report.summary.pass > 0, "{}", report.suite);
        }
    }

    #[test]
    fn identity_2_6a_record_count_matches_group_orders() {
        // One record per element: 2 + 6 + 8 + 12 = 28 over A1, A2, B2, G2.
        let report = run_suite(Suite::Identity26a, &opts(&["A1", "A2", "B2", "G2"])).unwrap();
        assert_eq!(report.records.len(), 28);
        assert_eq!(report.summary.pass, 28);
    }

    #[test]
    fn rank_3_types_skip_rank_2_suites() {
        let report = run_suite(Suite::Identity26a, &opts(&["A3"])).unwrap();
        assert_eq!(report.summary.skip, 1);
        assert_eq!(report.summary.pass + report.summary.fail, 0);
        let report = run_suite(Suite::Chars, &opts(&["A3"])).unwrap();
        assert_eq!(report.summary.skip, 1);
    }

    #[test]
    fn budget_exceeded_becomes_skip_record() {
        let options = SuiteOptions {
            types: vec!["A2".into(), "B4".into()],
            max_order: 100,
            ..SuiteOptions::default()
        };
        let report = run_suite(Suite::Inversion, &options).unwrap();
        assert_eq!(report.summary.skip, 1);
        let skip_record = report
            .records
            .iter()
            .find(|r| r.status == Status::Skip)
            .unwrap();
        assert_eq!(skip_record.check, "enumerate");
        assert_eq!(skip_record.type_spec, "B4");
        assert!(skip_record.witness.contains("budget"));
        // The small type still ran.
        assert_eq!(report.summary.pass, 6);
    }

    #[test]
    fn unknown_type_is_an_error() {
        assert!(run_suite(Suite::Inversion, &opts(&["Q5"])).is_err());
    }

    #[test]
    fn subsampling_is_deterministic_and_capped() {
        let options = SuiteOptions {
            types: vec!["B2".into()],
            max_pairs: Some(10),
            seed: 42,
            ..SuiteOptions::default()
        };
        let a = run_suite(Suite::Positivity, &options).unwrap();
        let b = run_suite(Suite::Positivity, &options).unwrap();
        let pairs = |r: &SuiteReport| {
            r.records
                .iter()
                .filter(|c| c.check == "r-positivity")
                .map(|c| (c.w.clone(), c.z.clone()))
                .collect::<Vec<_>>()
        };
        assert_eq!(pairs(&a), pairs(&b));
        assert_eq!(pairs(&a).len(), 10);
        // A different seed draws a different sample.
        let other = run_suite(
            Suite::Positivity,
            &SuiteOptions {
                seed: 43,
                ..options
            },
        )
        .unwrap();
        assert_ne!(pairs(&a), pairs(&other));
    }

    #[test]
    fn records_are_sorted() {
        let report = run_suite(Suite::Symmetry, &opts(&["A2", "A1"])).unwrap();
        let keys: Vec<_> = report
            .records
            .iter()
            .map(|r| (r.check.clone(), r.type_spec.clone(), r.w.clone(), r.z.clone()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn json_record_schema() {
        let report = run_suite(Suite::Inversion, &opts(&["A1"])).unwrap();
        let value = serde_json::to_value(&report).unwrap();
        assert_eq!(value["suite"], "inversion");
        let record = &value["records"][0];
        let keys: Vec<&String> = record.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["check", "status", "type", "w", "witness", "z"]);
        assert_eq!(record["status"], "pass");
        assert_eq!(record["type"], "A1");
        assert_eq!(value["summary"]["pass"], 2);
    }

    #[test]
    fn elliptic_monic_suite_mixes_pass_and_skip() {
        let report = run_suite(Suite::EllipticMonic, &opts(&["B2"])).unwrap();
        // Five classes: e, s1, s2 not elliptic (skip); s1s2 and w0 elliptic.
        assert_eq!(report.summary.pass, 2);
        assert_eq!(report.summary.skip, 3);
    }
}
