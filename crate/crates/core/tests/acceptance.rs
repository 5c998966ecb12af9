//! Acceptance suite: the release gate for this crate.
//!
//! Each test covers one gate criterion, runs it at its stated tolerance
//! (exact equality throughout; no floating point exists in this crate),
//! and prints a `ACCEPT <id> ...: PASS` line. Run with `--nocapture` to
//! see the lines; every tolerance and bound is pinned here in code.

use std::time::Instant;

use fibcheck_core::arith::{classify_prime, primes_up_to};
use fibcheck_core::fib::{
    fib_binomial_exact, fib_double_mod, fib_exact, fib_iter_mod,
};
use fibcheck_core::legendre::{legendre_euler, legendre_gauss, legendre_reciprocity};
use fibcheck_core::pisano::{minimal_period, predicted_periods};
use fibcheck_core::registry::{run_check, run_sweep, SweepConfig, Verdict};

/// Deterministic 64-bit mixer for reproducible "random" moduli.
fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[test]
fn accept_1_minimal_periods_match_stated_values() {
    let start = Instant::now();
    let cases = [(5u64, 20u64), (3, 8), (101, 50), (29, 14), (281, 56)];
    for (m, want) in cases {
        let got = minimal_period(m).unwrap();
        assert_eq!(got, want, "minimal period mod {m}");
    }
    // 281 = 5 * 56 + 1: the minimal period equals k itself.
    let pc = classify_prime(281).unwrap();
    assert_eq!((pc.k, pc.r), (56, 1));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, budget 1 s");
    println!("ACCEPT 1 minimal-periods: PASS ({} ms)", elapsed.as_millis());
}

#[test]
fn accept_2_every_predicted_period_verifies_to_1e4() {
    let start = Instant::now();
    let mut candidates = 0u64;
    for p in primes_up_to(10_000) {
        if p == 5 {
            continue;
        }
        let pc = classify_prime(p).unwrap();
        for cand in predicted_periods(&pc, true).unwrap() {
            assert!(
                cand.verified,
                "candidate {} (from {:?}) fails at p = {p}",
                cand.value, cand.sources
            );
            candidates += 1;
        }
    }
    assert!(candidates > 1_500, "suspiciously few candidates: {candidates}");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}, budget 10 s");
    println!(
        "ACCEPT 2 period-sweep: PASS ({} candidates, {} ms)",
        candidates,
        elapsed.as_millis()
    );
}

#[test]
fn accept_3_congruence_sweep_to_1e4_is_anomaly_free() {
    let start = Instant::now();
    let report = run_sweep(&SweepConfig::new(10_000)).unwrap();
    assert!(
        report.anomalies.is_empty(),
        "anomalies: {:?}",
        report.anomalies
    );
    // Every congruence family from the gate list passed somewhere and
    // failed nowhere.
    let must_pass = [
        "p4.1", "p4.2", "p4.3", "p51", "p52", "p53", "p54", "p55", "c52", "l0.9", "l0.11",
        "p3F2F", "p0.3", "p0.14", "p0.14-cor", "t0.4", "t0.4-cor", "t0.6", "t0.6-rem", "c0.8",
        "c0.10", "shift", "lser.odd", "lser.even", "n5k3", "p615", "p620", "p629", "p632",
        "p633", "half.zero", "third.period", "p1.5", "p1.6", "p1.20", "p1.22",
    ];
    for id in must_pass {
        let tally = &report.summary[id];
        assert_eq!(tally.fail, 0, "{id} failed somewhere");
        assert!(tally.pass >= 1, "{id} never ran to a pass");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}, budget 60 s");
    println!(
        "ACCEPT 3 congruence-sweep: PASS ({} results, {} ms)",
        report.results.len(),
        elapsed.as_millis()
    );
}

#[test]
fn accept_4_erratum_detected_with_witness_and_clean_exit() {
    let start = Instant::now();
    let results = run_check("p0.1-general", None, None).unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0].verdict, Verdict::Fail);
    let w = results[0].witness.as_ref().expect("failure carries witness");
    assert_eq!(w["m"], "3");
    assert_eq!(w["left"], "89");
    assert_eq!(w["right"], "104");

    // Inside a sweep the failure is expected, so the report stays clean
    // and maps to exit code 0.
    let report = run_sweep(&SweepConfig::new(100)).unwrap();
    assert_eq!(report.summary["p0.1-general"].fail, 1);
    assert!(report.is_clean());
    println!(
        "ACCEPT 4 erratum-detection: PASS ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn accept_5_cross_algorithm_equivalence() {
    let start = Instant::now();

    // Doubling vs the linear oracle: every n <= 10^4 against 50
    // reproducible moduli in [2, 10^6].
    let mut state = 0x5eed_f1bc_u64;
    let mut moduli = Vec::new();
    while moduli.len() < 50 {
        let m = 2 + splitmix(&mut state) % (1_000_000 - 1);
        if !moduli.contains(&m) {
            moduli.push(m);
        }
    }
    for &m in &moduli {
        // The pair walk reproduces fib_iter_mod's own recurrence; direct
        // calls anchor it to the API at every thousandth index.
        let (mut a, mut b) = (0u64, 1 % m);
        for n in 0..=10_000u64 {
            let doubled = fib_double_mod(n, m).unwrap();
            assert_eq!((doubled.f_n, doubled.f_n1), (a, b), "at n={n}, m={m}");
            if n % 1_000 == 0 {
                let it = fib_iter_mod(n, m).unwrap();
                assert_eq!((it.f_n, it.f_n1), (a, b), "oracle at n={n}, m={m}");
            }
            let next = (a + b) % m;
            a = b;
            b = next;
        }
    }

    // Exact binomial-sum route vs the recurrence.
    for n in 1..=300u64 {
        assert_eq!(
            fib_binomial_exact(n).unwrap().value,
            fib_exact(n).unwrap().value,
            "binomial route differs at n={n}"
        );
    }

    // Three Legendre algorithms over every admissible input, p <= 2000.
    let mut triples = 0u64;
    for p in primes_up_to(2_000) {
        if p == 2 {
            continue;
        }
        for a in 1..p {
            let euler = legendre_euler(a as i64, p).unwrap();
            assert_eq!(euler, legendre_gauss(a as i64, p).unwrap(), "({a}/{p})");
            assert_eq!(
                euler,
                legendre_reciprocity(a as i64, p).unwrap(),
                "({a}/{p})"
            );
            triples += 1;
        }
    }
    assert!(triples > 250_000);
    println!(
        "ACCEPT 5 cross-algorithms: PASS ({} legendre triples, {} ms)",
        triples,
        start.elapsed().as_millis()
    );
}

#[test]
fn accept_6_fibonacci_prime_residue_matches_class_sign() {
    let start = Instant::now();
    for p in primes_up_to(10_000) {
        if p == 5 {
            continue;
        }
        let pc = classify_prime(p).unwrap();
        // Sign by residue class: +1 for r in {1, 4}, -1 for r in {2, 3};
        // for odd p this is exactly the Legendre symbol (5/p).
        let expected = if matches!(pc.r, 1 | 4) { 1 % p } else { p - 1 };
        if p != 2 {
            let sym = fibcheck_core::legendre::legendre_5_by_class(&pc);
            assert_eq!(
                sym.value(),
                if expected == 1 { 1 } else { -1 },
                "class sign at {p}"
            );
        }
        let got = fib_double_mod(p, p).unwrap().f_n;
        assert_eq!(got, expected, "F_p mod p at {p}");
    }
    // Spot values, exact residues of F_7 = 13, F_11 = 89, F_13 = 233.
    assert_eq!(fib_double_mod(7, 7).unwrap().f_n, 6);
    assert_eq!(fib_double_mod(11, 11).unwrap().f_n, 1);
    assert_eq!(fib_double_mod(13, 13).unwrap().f_n, 12);
    println!(
        "ACCEPT 6 F_p-class-sign: PASS ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn accept_7_reports_identical_across_job_counts() {
    let start = Instant::now();
    let mut config = SweepConfig::new(2_500);
    let sequential = run_sweep(&config).unwrap();
    config.jobs = 8;
    let parallel = run_sweep(&config).unwrap();
    assert_eq!(
        sequential.to_json(),
        parallel.to_json(),
        "reports differ between jobs=1 and jobs=8"
    );
    println!(
        "ACCEPT 7 determinism: PASS ({} ms)",
        start.elapsed().as_millis()
    );
}
