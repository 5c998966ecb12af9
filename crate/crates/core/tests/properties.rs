//! Property tests and bulk invariants across the public API.

use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

use fibcheck_core::arith::{
    classify_prime, ext_gcd, inv_mod, mul_mod, pow_mod, primes_up_to, split_congruence,
};
use fibcheck_core::binomial::{binom_mod, BinomQuery};
use fibcheck_core::fib::{fib_binomial_mod, fib_combine, fib_double_mod, fib_iter_mod};
use fibcheck_core::legendre::legendre_euler;
use fibcheck_core::pisano::{is_period, minimal_period, verify_period_tail};

const MAX_MODULUS: u64 = 1 << 62;

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[test]
fn mul_mod_matches_wide_oracle_on_many_samples() {
    // Dense deterministic sampling across the whole modulus range.
    let mut state = 0xfeed_beef_u64;
    for _ in 0..20_000 {
        let m = 2 + splitmix(&mut state) % (MAX_MODULUS - 1);
        let a = splitmix(&mut state) % m;
        let b = splitmix(&mut state) % m;
        let expected = ((a as u128 * b as u128) % m as u128) as u64;
        assert_eq!(mul_mod(a, b, m).unwrap(), expected, "a={a} b={b} m={m}");
    }
}

#[test]
fn fermat_exponent_identity_for_all_small_primes() {
    // n^(p-1) = 1 (mod p) for every prime p <= 10^4 and every 1 <= n < p.
    for p in primes_up_to(10_000) {
        for n in 1..p {
            assert_eq!(pow_mod(n, p - 1, p).unwrap(), 1, "n={n} p={p}");
        }
    }
}

#[test]
fn five_power_identity_for_class_two_primes() {
    // 5^((5k+1)/2) = 5k+1 (mod 5k+2) for odd primes 5k+2 <= 10^4.
    for pc in fibcheck_core::arith::primes_in_class(2, 10_000).unwrap() {
        if pc.p == 2 {
            continue;
        }
        assert_eq!(
            pow_mod(5, (5 * pc.k).div_ceil(2), pc.p).unwrap(),
            pc.p - 1,
            "p={}",
            pc.p
        );
    }
}

#[test]
fn classify_parity_forced_for_odd_primes() {
    for p in primes_up_to(50_000) {
        if p == 2 || p == 5 {
            continue;
        }
        let pc = classify_prime(p).unwrap();
        assert_eq!(pc.k % 2, (pc.r + 1) % 2, "parity at {p}");
    }
}

#[test]
fn binomial_mod_fib_agrees_with_iteration_everywhere() {
    // Binomial-sum route vs the recurrence for every odd modulus up to
    // 10^3 and every index up to 10^3.
    for m in (3..=1_000u64).step_by(2) {
        let mut a = 0u64;
        let mut b = 1 % m;
        for n in 0..=1_000u64 {
            assert_eq!(fib_binomial_mod(n, m).unwrap(), a, "n={n} m={m}");
            let next = (a + b) % m;
            a = b;
            b = next;
        }
    }
}

#[test]
fn period_tail_residues_for_all_small_moduli() {
    for m in 3..=1_000u64 {
        let ell = minimal_period(m).unwrap();
        let tail = verify_period_tail(m, ell).unwrap();
        assert!(tail.holds, "tail fails at m={m}, ell={ell}: {tail:?}");
    }
}

#[test]
fn minimal_period_divides_every_accepted_period() {
    for m in 2..=500u64 {
        let ell = minimal_period(m).unwrap();
        for cand in 1..=4 * ell {
            if is_period(m, cand).unwrap() {
                assert_eq!(cand % ell, 0, "m={m} cand={cand} ell={ell}");
            }
        }
    }
}

#[test]
fn reflections_hold_for_all_primes_to_5000() {
    for p in primes_up_to(5_000) {
        if matches!(p, 2 | 3 | 5) {
            continue;
        }
        let pc = classify_prime(p).unwrap();
        let out = fibcheck_core::pisano::reflection_check(&pc).unwrap();
        assert!(out.holds(), "reflection fails at {p}: {:?}", out.failure);
    }
}

#[test]
fn characteristic_zero_divisibility_for_class_two() {
    // F(n(5k+3)) = 0 (mod 5k+2) for n <= 30, and the rank of apparition
    // divides 5k+3.
    for pc in fibcheck_core::arith::primes_in_class(2, 10_000).unwrap() {
        if pc.p == 2 {
            continue;
        }
        let span = 5 * pc.k + 3;
        for n in 1..=30u64 {
            assert_eq!(
                fib_double_mod(n * span, pc.p).unwrap().f_n,
                0,
                "p={} n={n}",
                pc.p
            );
        }
        let rank = fibcheck_core::pisano::rank_of_apparition(pc.p).unwrap();
        assert_eq!(span % rank, 0, "rank at {}", pc.p);
    }
}

#[test]
fn multiple_period_family_for_class_one() {
    // F(5mk) = 0 and F(5mk+1) = 1 (mod 5k+1) for m <= 30.
    for pc in fibcheck_core::arith::primes_in_class(1, 10_000).unwrap() {
        for m in 0..=30u64 {
            assert_eq!(fib_double_mod(5 * m * pc.k, pc.p).unwrap().f_n, 0);
            assert_eq!(fib_double_mod(5 * m * pc.k + 1, pc.p).unwrap().f_n, 1);
        }
    }
}

#[test]
fn l_series_congruences_for_class_two() {
    // F(5k-(2l+1)) = F(2(l+2)) and F(5k-2l) = 5k - sum F(2(i+2)),
    // modulo 5k+2, for primes up to 2000.
    for pc in fibcheck_core::arith::primes_in_class(2, 2_000).unwrap() {
        if pc.p == 2 {
            continue;
        }
        let (p, k) = (pc.p, pc.k);
        let fibv: Vec<u64> = {
            let mut v = Vec::with_capacity((5 * k + 5) as usize);
            let (mut a, mut b) = (0u64, 1u64);
            for _ in 0..(5 * k + 5) {
                v.push(a);
                let next = (a + b) % p;
                a = b;
                b = next;
            }
            v
        };
        let mut acc = 0u64;
        for l in 1..=(5 * k - 1) / 2 {
            assert_eq!(
                fibv[(5 * k - (2 * l + 1)) as usize],
                fibv[(2 * (l + 2)) as usize],
                "odd series at p={p}, l={l}"
            );
            acc = (acc + fibv[(2 * (l + 1)) as usize]) % p;
            let rhs = (5 * k % p + p - acc) % p;
            assert_eq!(
                fibv[(5 * k - 2 * l) as usize],
                rhs,
                "even series at p={p}, l={l}"
            );
        }
    }
}

fn binom_big(n: u64, j: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..j {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

proptest! {
    #[test]
    fn prop_mul_mod_matches_big_oracle(a in any::<u64>(), b in any::<u64>(), m in 2u64..=MAX_MODULUS) {
        let expected = ((a as u128 % m as u128) * (b as u128 % m as u128) % m as u128) as u64;
        prop_assert_eq!(mul_mod(a, b, m).unwrap(), expected);
    }

    #[test]
    fn prop_pow_mod_matches_repeated_multiplication(b in 0u64..1_000, e in 0u64..64, m in 2u64..100_000) {
        let mut expected = 1u64 % m;
        for _ in 0..e {
            expected = mul_mod(expected, b, m).unwrap();
        }
        prop_assert_eq!(pow_mod(b, e, m).unwrap(), expected);
    }

    #[test]
    fn prop_ext_gcd_identity(m in -1_000_000_i64..1_000_000, n in -1_000_000_i64..1_000_000) {
        prop_assume!(m != 0 || n != 0);
        let w = ext_gcd(m, n).unwrap();
        prop_assert!(w.g > 0);
        prop_assert!(w.verifies(m, n));
        prop_assert_eq!(m.unsigned_abs() % w.g, 0);
        prop_assert_eq!(n.unsigned_abs() % w.g, 0);
    }

    #[test]
    fn prop_inv_mod_is_inverse(a in 1u64..100_000, m in 2u64..100_000) {
        match inv_mod(a, m) {
            Ok(x) => prop_assert_eq!(mul_mod(a, x, m).unwrap(), 1 % m),
            Err(_) => prop_assert!(ext_gcd((a % m) as i64, m as i64).unwrap().g != 1),
        }
    }

    #[test]
    fn prop_split_congruence_postconditions(
        m in 1i64..500,
        n in 1i64..500,
        c in 0u64..1_000,
        p in 2u64..1_000_000,
    ) {
        prop_assume!(ext_gcd(m, n).unwrap().g == 1);
        let a = (n as u64 % p) * (c % p) % p;
        let b = (m as u64 % p) * (c % p) % p;
        let got = split_congruence(a, b, m, n, p).unwrap();
        prop_assert_eq!((n as u128 * got as u128 % p as u128) as u64, a);
        prop_assert_eq!((m as u128 * got as u128 % p as u128) as u64, b);
    }

    #[test]
    fn prop_legendre_multiplicative(a in 1i64..5_000, b in 1i64..5_000, idx in 0usize..50) {
        let primes = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                      71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                      151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233];
        let p = primes[idx];
        prop_assume!(a % p as i64 != 0 && b % p as i64 != 0);
        let lhs = legendre_euler(a * b, p).unwrap().value();
        let rhs = legendre_euler(a, p).unwrap().value() * legendre_euler(b, p).unwrap().value();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn prop_combine_matches_direct_computation(k in 0u64..3_000, l in 0u64..3_000, m in 2u64..1_000_000) {
        let pair_k = fib_iter_mod(k, m).unwrap();
        let pair_l = fib_iter_mod(l, m).unwrap();
        let combined = fib_combine(&pair_k, &pair_l).unwrap();
        let direct = fib_double_mod(k + l, m).unwrap();
        prop_assert_eq!((combined.f_n, combined.f_n1), (direct.f_n, direct.f_n1));
    }

    #[test]
    fn prop_binom_mod_matches_big_oracle(n in 0u64..400, j_seed in 0u64..400, p_idx in 0usize..20) {
        let primes = [401u64, 409, 419, 421, 431, 433, 439, 443, 449, 457,
                      461, 463, 467, 479, 487, 491, 499, 503, 509, 521];
        let p = primes[p_idx];
        let j = j_seed.min(n);
        let q = BinomQuery::new(n, j, p).unwrap();
        let expected: u64 = (binom_big(n, j) % BigUint::from(p)).try_into().unwrap();
        prop_assert_eq!(binom_mod(&q).unwrap(), expected);
    }

    #[test]
    fn prop_doubling_matches_iteration(n in 0u64..50_000, m in 2u64..10_000_000) {
        let d = fib_double_mod(n, m).unwrap();
        let i = fib_iter_mod(n, m).unwrap();
        prop_assert_eq!((d.f_n, d.f_n1), (i.f_n, i.f_n1));
    }
}
