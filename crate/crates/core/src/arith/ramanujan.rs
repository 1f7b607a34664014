//! Ramanujan sums `c_n(q)`, the sum of the q-th powers of the primitive
//! n-th roots of unity.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::{assert_index, factorize, gcd, ArithError};
use crate::cyclo;

/// Largest accepted distance between the floating-point definition sum and
/// its nearest integer.
pub const DEFINITION_TOLERANCE: f64 = 1e-6;

/// Which formula evaluates `c_n(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodChoice {
    /// `Σ_{d | gcd(n,q)} d·μ(n/d)`.
    Kluyver,
    /// `μ(n/g)·φ(n)/φ(n/g)` with `g = gcd(n, q)`.
    Hoelder,
    /// Power sums of `Φ_n` through Newton's identities.
    Newton,
    /// Floating-point sum of `cos(2πkq/n)` over `k` coprime to `n`.
    Definition,
}

impl MethodChoice {
    pub const ALL: [MethodChoice; 4] = [
        MethodChoice::Kluyver,
        MethodChoice::Hoelder,
        MethodChoice::Newton,
        MethodChoice::Definition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodChoice::Kluyver => "kluyver",
            MethodChoice::Hoelder => "hoelder",
            MethodChoice::Newton => "newton",
            MethodChoice::Definition => "definition",
        }
    }
}

impl fmt::Display for MethodChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "kluyver" => Ok(MethodChoice::Kluyver),
            "hoelder" | "holder" | "hölder" => Ok(MethodChoice::Hoelder),
            "newton" => Ok(MethodChoice::Newton),
            "definition" => Ok(MethodChoice::Definition),
            other => Err(format!(
                "unknown method {other:?} (expected kluyver, hoelder, newton or definition)"
            )),
        }
    }
}

/// `c_n(q)` by the chosen method. `q = 0` is allowed and gives `φ(n)`.
pub fn ramanujan_sum(n: u64, q: u64, method: MethodChoice) -> Result<i64, ArithError> {
    assert_index(n);
    match method {
        MethodChoice::Kluyver => Ok(ramanujan_sum_kluyver(n, q)),
        MethodChoice::Hoelder => Ok(ramanujan_sum_hoelder(n, q)),
        MethodChoice::Definition => {
            let raw = ramanujan_sum_definition_raw(n, q);
            let rounded = raw.round();
            let residual = (raw - rounded).abs();
            if residual > DEFINITION_TOLERANCE {
                return Err(ArithError::DefinitionResidualTooLarge { n, q, residual });
            }
            Ok(rounded as i64)
        }
        MethodChoice::Newton => {
            let s = cyclo::cyclotomic_power_sum(n, q)?;
            s.to_i64().ok_or(ArithError::Overflow { n, q })
        }
    }
}

/// Kluyver's divisor sum. Divisors `d` of `g = gcd(n, q)` are enumerated as
/// exponent vectors over the primes of `n`, which also yields `n/d` in
/// factored form for the Möbius factor.
pub fn ramanujan_sum_kluyver(n: u64, q: u64) -> i64 {
    assert_index(n);
    let g = gcd(n, q);
    let fac = factorize(n);
    // (prime, exponent in n, exponent in g)
    let slots: Vec<(u64, u32, u32)> = fac
        .factors()
        .iter()
        .map(|&(p, e)| {
            let mut f = 0;
            let mut rest = g;
            while f < e && rest.is_multiple_of(p) {
                rest /= p;
                f += 1;
            }
            (p, e, f)
        })
        .collect();

    let mut total: i128 = 0;
    let mut exps = vec![0u32; slots.len()];
    loop {
        let mut d: u64 = 1;
        let mut mu: i128 = 1;
        for (&(p, e, _), &a) in slots.iter().zip(&exps) {
            d *= p.pow(a);
            match e - a {
                0 => {}
                1 => mu = -mu,
                _ => mu = 0,
            }
        }
        total += mu * i128::from(d);

        // next exponent vector, odometer style
        let mut i = 0;
        loop {
            if i == slots.len() {
                return i64::try_from(total).expect("|c_n(q)| <= φ(n) fits in i64");
            }
            if exps[i] < slots[i].2 {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// von Sterneck's function, which coincides with `c_n(q)`.
pub fn ramanujan_sum_hoelder(n: u64, q: u64) -> i64 {
    assert_index(n);
    let g = gcd(n, q);
    let reduced = factorize(n / g);
    let mu = reduced.mobius();
    if mu == 0 {
        return 0;
    }
    let phi_n = factorize(n).totient();
    let phi_r = reduced.totient();
    assert!(
        phi_n.is_multiple_of(phi_r),
        "φ({}) = {phi_r} does not divide φ({n}) = {phi_n}",
        n / g
    );
    i64::from(mu) * (phi_n / phi_r) as i64
}

/// The defining sum evaluated in floating point, before rounding.
pub fn ramanujan_sum_definition_raw(n: u64, q: u64) -> f64 {
    assert_index(n);
    let n128 = u128::from(n);
    let q_mod = u128::from(q) % n128;
    (1..=n)
        .filter(|&k| gcd(k, n) == 1)
        .map(|k| {
            let r = (u128::from(k) * q_mod) % n128;
            (TAU * r as f64 / n as f64).cos()
        })
        .sum()
}
