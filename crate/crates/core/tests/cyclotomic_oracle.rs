//! Cross-checks against independent constructions of `Φ_n`: a numeric root
//! expansion and an integer power series, plus the frozen worked examples.

use cyclotomy::arith::{self, gcd};
use cyclotomy::cyclo::{cyclotomic, cyclotomic_of_power, cyclotomic_poly, Algorithm};
use cyclotomy::intpoly::IntPoly;
use num_bigint::BigInt;

/// Expands `Π (x - e^{2πik/n})` over `k` coprime to `n` in floating point,
/// pairing conjugate roots into real quadratics, and rounds the coefficients.
fn phi_from_roots(n: u64) -> Vec<i64> {
    let mut c = vec![1.0f64];
    let mut mul = |f: &[f64]| {
        let mut next = vec![0.0; c.len() + f.len() - 1];
        for (i, a) in c.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        c = next;
    };
    for k in (1..=n / 2).filter(|&k| gcd(k, n) == 1) {
        let angle = std::f64::consts::TAU * k as f64 / n as f64;
        if 2 * k == n {
            mul(&[1.0, 1.0]);
        } else {
            mul(&[1.0, -2.0 * angle.cos(), 1.0]);
        }
    }
    if n == 1 {
        mul(&[-1.0, 1.0]);
    }
    c.iter()
        .map(|r| {
            let rounded = r.round();
            assert!((r - rounded).abs() < 1e-3, "non-integral {r}");
            rounded as i64
        })
        .collect()
}

/// `Π_{d | n} (1 - x^d)^{μ(n/d)}` as an integer power series truncated past
/// degree `φ(n)`, with `μ` from trial division. Sign-corrected for `n = 1`.
fn phi_from_series(n: u64) -> Vec<i64> {
    fn mu(mut k: u64) -> i64 {
        let mut sign = 1;
        let mut p = 2;
        while p * p <= k {
            if k.is_multiple_of(p) {
                k /= p;
                if k.is_multiple_of(p) {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        if k > 1 {
            sign = -sign;
        }
        sign
    }
    let phi = (1..=n).filter(|&k| gcd(k, n) == 1).count();
    let mut series = vec![0i128; phi + 1];
    series[0] = 1;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let d_us = d as usize;
        match mu(n / d) {
            // multiply by 1 - x^d
            1 => {
                for k in (d_us..=phi).rev() {
                    series[k] -= series[k - d_us];
                }
            }
            // multiply by 1 / (1 - x^d) = 1 + x^d + x^2d + ...
            -1 => {
                for k in d_us..=phi {
                    series[k] += series[k - d_us];
                }
            }
            _ => {}
        }
    }
    let sign = if n == 1 { -1 } else { 1 };
    series.into_iter().map(|c| (sign * c) as i64).collect()
}

#[test]
fn every_algorithm_matches_series_expansion() {
    for n in 1..=300 {
        let want = IntPoly::from_i64s(&phi_from_series(n));
        for alg in Algorithm::ALL {
            assert_eq!(cyclotomic_poly(n, alg).unwrap(), want, "n={n} {alg}");
        }
    }
}

#[test]
fn root_expansion_agrees_with_series() {
    for n in 1..=60 {
        assert_eq!(phi_from_roots(n), phi_from_series(n), "n={n}");
    }
}

#[test]
fn every_algorithm_matches_root_expansion() {
    for n in 1..=60 {
        let want = IntPoly::from_i64s(&phi_from_roots(n));
        for alg in Algorithm::ALL {
            assert_eq!(cyclotomic_poly(n, alg).unwrap(), want, "n={n} {alg}");
        }
    }
}

#[test]
fn phi_105_coefficients_from_series() {
    let roots = phi_from_series(105);
    assert_eq!(roots[7], -2);
    assert_eq!(roots[41], -2);
    let phi = cyclotomic_poly(105, Algorithm::NewtonRamanujan).unwrap();
    assert_eq!(phi, IntPoly::from_i64s(&roots));
}

#[test]
fn result_metadata() {
    let r = cyclotomic(12, Algorithm::NewtonRamanujan).unwrap();
    assert_eq!(r.n.get(), 12);
    assert_eq!(r.algorithm, Algorithm::NewtonRamanujan);
    assert_eq!(r.poly, IntPoly::from_i64s(&[1, 0, -1, 0, 1]));
    let one = cyclotomic(1, Algorithm::DualForm).unwrap();
    assert_eq!(one.poly.eval(&BigInt::from(0)), BigInt::from(-1));
}

#[test]
fn composition_matches_brute_expansion() {
    // (x^2 + 1)(x^4 - x^2 + 1) = x^6 + 1
    let brute = &IntPoly::from_i64s(&[1, 0, 1]) * &IntPoly::from_i64s(&[1, 0, -1, 0, 1]);
    assert_eq!(brute, IntPoly::from_i64s(&[1, 0, 0, 0, 0, 0, 1]));
    assert_eq!(cyclotomic_of_power(4, 3).unwrap(), brute);
    for n in 1..=30u64 {
        for m in (1..=30u64).filter(|&m| gcd(n, m) == 1) {
            let lhs = cyclotomic_poly(n, Algorithm::Recursive)
                .unwrap()
                .substitute_power(m as usize);
            assert_eq!(cyclotomic_of_power(n, m).unwrap(), lhs, "n={n} m={m}");
        }
    }
}

#[test]
fn fundamental_identity_up_to_300() {
    for n in 1..=300u64 {
        let prod: IntPoly = arith::divisors(n)
            .into_iter()
            .map(|d| cyclotomic_poly(d, Algorithm::MobiusProduct).unwrap())
            .product();
        assert_eq!(prod, IntPoly::x_pow_minus_one(n as usize), "n={n}");
    }
}

#[test]
fn cache_is_consistent_across_threads() {
    let handles: Vec<_> = (0..4)
        .map(|_| {
            std::thread::spawn(|| {
                (1..=400u64)
                    .map(|n| (*cyclotomy::cyclo::cached(n).unwrap()).clone())
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    for r in &results[1..] {
        assert_eq!(r, &results[0]);
    }
    for (i, p) in results[0].iter().enumerate() {
        let n = i as u64 + 1;
        assert_eq!(p, &cyclotomic_poly(n, Algorithm::Recursive).unwrap());
    }
}
