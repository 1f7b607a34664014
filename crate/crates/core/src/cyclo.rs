//! Cyclotomic polynomials `Φ_n`.
//!
//! Five independent constructions are provided (see [`Algorithm`]); they
//! share the polynomial kernels of [`crate::intpoly`] but no intermediate
//! results. None of them ever leaves `Z[X]`: wherever a construction has
//! factors with exponent `-1`, numerator and denominator are multiplied out
//! separately and joined by one exact division.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{self, factorize, gcd, Natural};
use crate::intpoly::{coeffs_from_power_sums, IntPoly, PolyError, PowerSums};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("n and m must be coprime (gcd({n}, {m}) = {gcd})")]
    NotCoprime { n: u64, m: u64, gcd: u64 },
    #[error("index {n} is too large for a dense polynomial")]
    TooLarge { n: u64 },
    #[error("identity violated while computing Φ_{n} ({algorithm}): {detail}")]
    InternalIdentityViolation {
        n: u64,
        algorithm: Algorithm,
        detail: String,
    },
}

/// How `Φ_n` is constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    /// `(X^n - 1) / Π_{d|n, d<n} Φ_d`, memoized over the divisors of `n`.
    Recursive,
    /// `Π_{d|n} (X^d - 1)^{μ(n/d)}`.
    MobiusProduct,
    /// `Φ_n(X) = Φ_rad(n)(X^{n/rad(n)})`, with the squarefree part built up
    /// one prime at a time through `Φ_{pk}(X) = Φ_k(X^p) / Φ_k(X)`.
    Radical,
    /// The dual product `Φ_{km}(X) = Π_{c|m} Φ_k(X^{m/c})^{μ(c)}`, peeling
    /// the largest prime of the radical, then lifted like `Radical`.
    DualForm,
    /// Coefficients from the Ramanujan sums `c_n(1..φ(n))` by the
    /// division-free Newton recursion.
    NewtonRamanujan,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Recursive,
        Algorithm::MobiusProduct,
        Algorithm::Radical,
        Algorithm::DualForm,
        Algorithm::NewtonRamanujan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Recursive => "recursive",
            Algorithm::MobiusProduct => "mobius_product",
            Algorithm::Radical => "radical",
            Algorithm::DualForm => "dual_form",
            Algorithm::NewtonRamanujan => "newton_ramanujan",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == key)
            .ok_or_else(|| {
                format!(
                    "unknown algorithm {s:?} (expected one of {})",
                    Algorithm::ALL.map(Algorithm::name).join(", ")
                )
            })
    }
}

/// `Φ_n` together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicResult {
    pub n: Natural,
    pub poly: IntPoly,
    pub algorithm: Algorithm,
}

// Dense coefficient vectors are indexed by usize; anything past this is far
// beyond what the schoolbook kernels can finish anyway.
const MAX_DENSE_INDEX: u64 = 1 << 32;

/// Computes `Φ_n` with the chosen algorithm.
///
/// The result is checked against the cheap invariants (monic, degree
/// `φ(n)`, constant term); a mismatch is reported as
/// [`CycloError::InternalIdentityViolation`].
pub fn cyclotomic(n: u64, algorithm: Algorithm) -> Result<CyclotomicResult, CycloError> {
    let index = Natural::new(n).map_err(|_| CycloError::TooLarge { n })?;
    if n > MAX_DENSE_INDEX {
        return Err(CycloError::TooLarge { n });
    }
    let poly = match n {
        1 => IntPoly::from_i64s(&[-1, 1]),
        2 => IntPoly::from_i64s(&[1, 1]),
        _ => match algorithm {
            Algorithm::Recursive => recursive(n),
            Algorithm::MobiusProduct => mobius_product(n),
            Algorithm::Radical => radical(n),
            Algorithm::DualForm => dual_form(n),
            Algorithm::NewtonRamanujan => newton_ramanujan(n),
        }
        .map_err(|e| violation(n, algorithm, e))?,
    };

    let phi = arith::totient(n) as usize;
    let expected_constant = if n == 1 { -1 } else { 1 };
    if poly.degree() != Some(phi) || !poly.is_monic() {
        return Err(violation(
            n,
            algorithm,
            "result is not monic of degree φ(n)",
        ));
    }
    if poly.coeff(0) != BigInt::from(expected_constant) {
        return Err(violation(n, algorithm, "unexpected constant term"));
    }
    Ok(CyclotomicResult {
        n: index,
        poly,
        algorithm,
    })
}

/// Shorthand for `cyclotomic(n, algorithm)?.poly`.
pub fn cyclotomic_poly(n: u64, algorithm: Algorithm) -> Result<IntPoly, CycloError> {
    cyclotomic(n, algorithm).map(|r| r.poly)
}

fn violation(n: u64, algorithm: Algorithm, detail: impl fmt::Display) -> CycloError {
    CycloError::InternalIdentityViolation {
        n,
        algorithm,
        detail: detail.to_string(),
    }
}

fn recursive(n: u64) -> Result<IntPoly, PolyError> {
    let divs = arith::divisors(n);
    let mut memo: HashMap<u64, IntPoly> = HashMap::with_capacity(divs.len());
    for &d in &divs {
        let phi_d = if d == 1 {
            IntPoly::from_i64s(&[-1, 1])
        } else {
            let below = divs
                .iter()
                .take_while(|&&e| e < d)
                .filter(|&&e| d % e == 0)
                .fold(IntPoly::one(), |acc, e| &acc * &memo[e]);
            IntPoly::x_pow_minus_one(d as usize).exact_div(&below)?
        };
        memo.insert(d, phi_d);
    }
    Ok(memo.remove(&n).expect("n divides itself"))
}

fn mobius_product(n: u64) -> Result<IntPoly, PolyError> {
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in arith::divisors(n) {
        match arith::mobius(n / d) {
            1 => num = num.mul_x_pow_minus_one(d as usize),
            -1 => den = den.mul_x_pow_minus_one(d as usize),
            _ => {}
        }
    }
    num.exact_div(&den)
}

fn radical(n: u64) -> Result<IntPoly, PolyError> {
    let fac = factorize(n);
    let mut phi = IntPoly::from_i64s(&[-1, 1]);
    // Φ_{pk}(X) = Φ_k(X^p) / Φ_k(X) for p not dividing k
    for p in fac.primes() {
        phi = phi.substitute_power(p as usize).exact_div(&phi)?;
    }
    // Φ_{p^j k}(X) = Φ_k(X^{p^j}) once p divides k
    for &(p, e) in fac.factors() {
        if e > 1 {
            phi = phi.substitute_power(p.pow(e - 1) as usize);
        }
    }
    Ok(phi)
}

fn dual_form(n: u64) -> Result<IntPoly, PolyError> {
    let (rad, lift) = radical_reduce(n);
    let primes: Vec<u64> = factorize(rad).primes().collect();
    let phi_rad = squarefree_by_peeling(&primes)?;
    Ok(phi_rad.substitute_power(lift as usize))
}

// Φ of the product of `primes`, removing the largest prime each step.
fn squarefree_by_peeling(primes: &[u64]) -> Result<IntPoly, PolyError> {
    match primes.split_last() {
        None => Ok(IntPoly::from_i64s(&[-1, 1])),
        Some((&p, rest)) => {
            let phi_rest = squarefree_by_peeling(rest)?;
            dual_form_product(&phi_rest, p)
        }
    }
}

/// `Π_{c|m} Φ_k(X^{m/c})^{μ(c)}` given `Φ_k`, which equals `Φ_{km}` when
/// `gcd(k, m) = 1`.
///
/// Factors with `μ(c) = 1` and `μ(c) = -1` are multiplied separately and
/// the two products are joined by a single exact division.
pub fn dual_form_product(phi_k: &IntPoly, m: u64) -> Result<IntPoly, PolyError> {
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for (c, mu) in factorize(m).squarefree_divisors() {
        let factor = phi_k.substitute_power((m / c) as usize);
        if mu > 0 {
            num = &num * &factor;
        } else {
            den = &den * &factor;
        }
    }
    num.exact_div(&den)
}

fn newton_ramanujan(n: u64) -> Result<IntPoly, PolyError> {
    let degree = arith::totient(n) as usize;
    let mut sums = Vec::with_capacity(degree + 1);
    sums.push(BigInt::from(degree));
    sums.extend((1..=degree as u64).map(|q| BigInt::from(arith::ramanujan_sum_kluyver(n, q))));
    coeffs_from_power_sums(&PowerSums::new(sums), degree)
}

/// `(rad(n), n / rad(n))`, so that `Φ_n(X) = Φ_rad(n)(X^{n/rad(n)})`.
pub fn radical_reduce(n: u64) -> (u64, u64) {
    let r = arith::radical(n);
    (r, n / r)
}

/// `Π_{d|m} Φ_{dn}(X)`, the product side of the composition identity
/// `Φ_n(X^m) = Π_{d|m} Φ_{dn}(X)`. Only defined for coprime `n, m`.
pub fn cyclotomic_of_power(n: u64, m: u64) -> Result<IntPoly, CycloError> {
    let g = gcd(n, m);
    if g != 1 {
        return Err(CycloError::NotCoprime { n, m, gcd: g });
    }
    divisor_product(n, m)
}

/// `Π_{d|m} Φ_{dn}` without the coprimality check.
pub(crate) fn divisor_product(n: u64, m: u64) -> Result<IntPoly, CycloError> {
    let nm = n
        .checked_mul(m)
        .ok_or(CycloError::TooLarge { n: u64::MAX })?;
    if nm > MAX_DENSE_INDEX {
        return Err(CycloError::TooLarge { n: nm });
    }
    let factors = arith::divisors(m)
        .into_iter()
        .map(|d| cached(d * n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(factors.iter().fold(IntPoly::one(), |acc, f| &acc * f))
}

// ---------------------------------------------------------------------------
// process-wide cache

/// Indices up to this bound are memoized by [`cached`].
pub const CACHE_LIMIT: u64 = 1 << 16;

type Cache<T> = OnceLock<RwLock<HashMap<u64, Arc<T>>>>;

static POLY_CACHE: Cache<IntPoly> = OnceLock::new();
static SUMS_CACHE: Cache<PowerSums> = OnceLock::new();

fn memoize<T>(
    cache: &'static Cache<T>,
    n: u64,
    compute: impl FnOnce() -> Result<T, CycloError>,
) -> Result<Arc<T>, CycloError> {
    if n > CACHE_LIMIT {
        return compute().map(Arc::new);
    }
    let lock = cache.get_or_init(Default::default);
    if let Some(hit) = lock.read().unwrap_or_else(|e| e.into_inner()).get(&n) {
        return Ok(Arc::clone(hit));
    }
    let value = Arc::new(compute()?);
    let mut map = lock.write().unwrap_or_else(|e| e.into_inner());
    Ok(Arc::clone(map.entry(n).or_insert(value)))
}

/// `Φ_n` from a process-wide memo table (by the `Radical` algorithm).
///
/// Values are immutable once inserted, so concurrent callers always see
/// the same polynomial regardless of who computed it first.
pub fn cached(n: u64) -> Result<Arc<IntPoly>, CycloError> {
    memoize(&POLY_CACHE, n, || cyclotomic_poly(n, Algorithm::Radical))
}

/// Power sums `S_0 .. S_{n-1}` of the roots of `Φ_n`, via Newton's
/// identities on its coefficients. The roots are n-th roots of unity, so
/// this table is one full period of `q ↦ S_q`.
pub fn cyclotomic_power_sums(n: u64) -> Result<Arc<PowerSums>, CycloError> {
    memoize(&SUMS_CACHE, n, || {
        let phi = cached(n)?;
        phi.power_sums((n - 1) as usize)
            .map_err(|e| violation(n, Algorithm::Radical, e))
    })
}

/// `c_n(q)` read off the power sums of `Φ_n`.
pub fn cyclotomic_power_sum(n: u64, q: u64) -> Result<BigInt, CycloError> {
    assert!(n >= 1, "index must be a positive integer");
    let table = cyclotomic_power_sums(n)?;
    Ok(table
        .get((q % n) as usize)
        .expect("table covers one period")
        .clone())
}
