//! Acceptance criteria, one line each on stderr, at their stated point counts and
//! time limits. All criteria run sequentially in a single test so the
//! timings are not distorted by sibling tests.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use qpvi::lax::{verify_compatibility, verify_garnier, LaxCase};
use qpvi::painleve::{verify_qluc, verify_tau1_equivalence, verify_tilde};
use qpvi::report::SuiteReport;
use qpvi::translations::{relation_table, tau3_period, verify_qshift_tables, verify_tau3_closed_form, verify_translation_relations};
use qpvi::weylrep::{verify_b_lemmas, verify_fundamental_relations, verify_quiver_invariance, verify_s0_derivation};

const SEED: u64 = 0;

struct Verdict {
    id: u32,
    checks_pass: bool,
    in_time: bool,
}

fn criterion(id: u32, title: &str, limit_secs: u64, body: impl FnOnce() -> (bool, String)) -> Verdict {
    let start = Instant::now();
    let (checks_pass, detail) = body();
    let elapsed = start.elapsed();
    let in_time = elapsed <= Duration::from_secs(limit_secs);
    let verdict = if checks_pass && in_time { "PASS" } else { "FAIL" };
    // Written to stderr directly so the lines survive libtest's output capture.
    let line = format!("criterion {id:>2} {title}: {verdict} ({detail}; {:.1} s, limit {limit_secs} s)\n", elapsed.as_secs_f64());
    std::io::stderr().write_all(line.as_bytes()).expect("stderr is writable");
    Verdict { id, checks_pass, in_time }
}

/// Overall pass plus a summary naming any failed relation.
fn summarize(reports: &[SuiteReport]) -> (bool, String) {
    let failed: Vec<String> =
        reports.iter().flat_map(|r| r.failed().into_iter().map(move |f| format!("n={} {}: {f}", r.n, r.suite))).collect();
    let total: usize = reports.iter().map(|r| r.relations.len()).sum();
    if failed.is_empty() {
        (true, format!("{total} relations"))
    } else {
        (false, format!("{} of {total} relations failed: {}", failed.len(), failed.join("; ")))
    }
}

fn has_relation(r: &SuiteReport, needle: &str) -> bool {
    r.relations.iter().any(|x| x.relation.contains(needle) && x.pass)
}

fn note_says(r: &SuiteReport, prefix: &str) -> Option<bool> {
    r.notes.iter().find(|s| s.starts_with(prefix)).map(|s| !s.contains("does not hold"))
}

#[test]
fn acceptance() {
    let mut verdicts = Vec::new();

    verdicts.push(criterion(1, "quiver invariance, n = 1..3", 5, || {
        summarize(&(1..=3).map(verify_quiver_invariance).collect::<Vec<_>>())
    }));

    verdicts.push(criterion(2, "s_0 derivation replay, 20 points, n = 1, 2", 30, || {
        let reports: Vec<_> = [1, 2].map(|n| verify_s0_derivation(n, 20, SEED)).into();
        let (ok, detail) = summarize(&reports);
        let replay = reports.iter().all(|r| has_relation(r, "lambda^(1): exactly the listed entries change"));
        (ok && replay, detail)
    }));

    verdicts.push(criterion(3, "fundamental relations, 20 points n = 1, 2 and 5 points n = 3", 180, || {
        summarize(&[(1, 20), (2, 20), (3, 5)].map(|(n, t)| verify_fundamental_relations(n, t, SEED)))
    }));

    // The printed factored form of s'_1 s_1(phi_{2i+1}) does not hold; the
    // suite checks the form with the derived leading factor and records the
    // printed one as a note.
    let mut printed_action_3_fails = false;
    verdicts.push(criterion(4, "sum identities and s'_1 s_1 actions, 20 points, n = 1..3", 60, || {
        let reports: Vec<_> = (1..=3).map(|n| verify_b_lemmas(n, 20, SEED)).collect();
        let (ok, detail) = summarize(&reports);
        let printed: Vec<Option<bool>> =
            reports.iter().map(|r| note_says(r, "s'_1 s_1(phi_{2i+1}) factored form as printed")).collect();
        printed_action_3_fails = ok && printed.iter().all(|p| *p == Some(false));
        let printed_ok = printed.iter().all(|p| *p == Some(true));
        let detail = if printed_ok { detail } else { format!("{detail}; printed factored form of s'_1 s_1(phi_(2i+1)) does not hold") };
        (ok && printed_ok, detail)
    }));

    verdicts.push(criterion(5, "q-shift tables and translation relations, n = 1, 2", 180, || {
        let mut reports = Vec::new();
        let mut conjugations = 0;
        let mut extra = true;
        for (n, trials) in [(1, 20), (2, 10)] {
            let rel = verify_translation_relations(n, trials, SEED);
            let table = relation_table(n);
            let in_family = |fams: &[&str]| -> Vec<bool> {
                let names: Vec<&str> = table.iter().filter(|t| fams.contains(&t.family)).map(|t| t.name.as_str()).collect();
                rel.relations.iter().filter(|r| names.contains(&r.relation.as_str())).map(|r| r.pass).collect()
            };
            conjugations += in_family(&["calT", "calU", "calU'", "V", "V'"]).into_iter().filter(|&p| p).count();
            for fam in ["T-product", "tau3"] {
                let passes = in_family(&[fam]);
                extra &= !passes.is_empty() && passes.into_iter().all(|p| p);
            }
            let qshift = verify_qshift_tables(n, trials, SEED);
            extra &= has_relation(&qshift, &format!("tau3^{} is a pure q-shift", tau3_period(n)));
            reports.extend([qshift, rel, verify_tau3_closed_form(n, trials, SEED)]);
        }
        let (ok, detail) = summarize(&reports);
        (ok && extra && conjugations >= 12, format!("{detail}, {conjugations} conjugation relations"))
    }));

    verdicts.push(criterion(6, "tau1 = q-P step (20/10/5 points, n = 1/2/3) and tilde dictionary (10 points, n = 1, 2)", 180, || {
        let mut reports: Vec<_> = [(1, 20), (2, 10), (3, 5)].map(|(n, t)| verify_tau1_equivalence(n, t, SEED)).into();
        let tilde: Vec<_> = [1, 2].map(|n| verify_tilde(n, 10, SEED)).into();
        let dictionary = tilde.iter().all(|r| {
            (0..2 * r.n + 2).all(|j| has_relation(r, &format!("r~_{j} = r_{j} under the dictionary")))
                && has_relation(r, "pi~ = s'_1 pi under the dictionary")
        });
        reports.extend(tilde);
        let (ok, detail) = summarize(&reports);
        (ok && dictionary, detail)
    }));

    verdicts.push(criterion(7, "Lax compatibility for every r~_j and pi~^2, 10 points, n = 1, 2", 120, || {
        summarize(&[1, 2].map(|n| verify_compatibility(n, 10, SEED, &LaxCase::generators(n))))
    }));

    verdicts.push(criterion(8, "q-Garnier pair properties and tau2(A) B = T(B) A, 10/5 points, n = 1/2", 120, || {
        summarize(&[(1, 10), (2, 5)].map(|(n, t)| verify_garnier(n, t, SEED)))
    }));

    verdicts.push(criterion(9, "q-LUC equations, constraints and c-grid periodicity, 10/5 points, n = 1/2", 120, || {
        let reports = [(1, 10), (2, 5)].map(|(n, t)| verify_qluc(n, t, SEED));
        let periodic = reports.iter().all(|r| has_relation(r, "(c) = c"));
        let (ok, detail) = summarize(&reports);
        (ok && periodic, detail)
    }));

    verdicts.push(criterion(10, "verify --suite all --n 1 is byte-reproducible", 600, || {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_qpvi"))
                .args(["verify", "--suite", "all", "--n", "1", "--trials", "20", "--seed", "0"])
                .output()
                .expect("binary runs")
        };
        let (a, b) = (run(), run());
        let same = a.stdout == b.stdout && !a.stdout.is_empty();
        let ok = a.status.success() && b.status.success() && same;
        (ok, format!("{} bytes, identical: {same}, exit {:?}", a.stdout.len(), a.status.code()))
    }));

    for v in &verdicts {
        assert!(v.in_time, "criterion {} exceeded its time limit", v.id);
        if v.id == 4 {
            assert!(printed_action_3_fails, "criterion 4 should fail only through the printed factored form");
        } else {
            assert!(v.checks_pass, "criterion {} failed", v.id);
        }
    }
}
