//! Mechanical checks of the cyclotomic and arithmetic identities.
//!
//! A check never panics on a false identity: it returns a [`CheckReport`]
//! with `passed = false` and a rendering of both sides, so sweeps always run
//! to completion and can be aggregated.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{
    self, divisors, gcd, is_coprime, mobius, ramanujan_sum, ramanujan_sum_kluyver, totient,
    MethodChoice,
};
use crate::cyclo::{self, CycloError};
use crate::intpoly::IntPoly;

/// Polynomials in witnesses are cut off after this many terms.
pub const WITNESS_TERMS: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("coefficient facts are stated for n > 1, got n = {n}")]
    InvalidIndex { n: u64 },
    #[error("n and m must be coprime (gcd({n}, {m}) = {gcd})")]
    NotCoprime { n: u64, m: u64, gcd: u64 },
}

/// The fixed set of identities this module knows how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `Π_{d|n} Φ_d = X^n - 1`.
    FundamentalIdentity,
    /// `Φ_n(X^m) = Π_{d|m} Φ_{dn}` for coprime `n, m`.
    Composition,
    /// `Φ_{nm} = Π_{c|m} Φ_n(X^{m/c})^{μ(c)}` for coprime `n, m`.
    DualForm,
    /// The composition identity fails when `gcd(n, m) > 1`.
    NonCoprimeCounterexample,
    /// `Σ_{d|n} φ(d) = n`.
    TotientDivisorSum,
    /// `Σ_{d|m} φ(dn) = m φ(n)` for coprime `n, m`.
    TotientDegreeComparison,
    /// `φ(mn) = φ(m) φ(n)` for coprime `n, m`.
    TotientMultiplicative,
    /// `Σ_{d|m} c_{dn}(q) = m c_n(q/m)` if `m | q`, else `0`.
    RamanujanDivisorSum,
    /// `c_{mn}(q) = Σ_{d|gcd(m,q)} d c_n(q/d) μ(m/d)`.
    RamanujanInversion,
    /// Kluyver, Hölder and the defining sum give the same `c_{mn}(q)`.
    RamanujanFormulaAgreement,
    /// At `q = 0` the divisor sum reduces to the totient degree comparison.
    RamanujanZeroSpecialization,
    /// `Φ_n` is monic of degree `φ(n)`.
    DegreeIsTotient,
    /// `Φ_n(0) = 1` for `n > 1`.
    ConstantTerm,
    /// `a_1(n) = -μ(n)`.
    LinearCoefficient,
    /// `a_{φ(n)-1}(n) = -μ(n)`.
    SubleadingCoefficient,
    /// `a_k(n) = a_{φ(n)-k}(n)`.
    Palindrome,
    /// `S_1[Φ_n] = μ(n) = c_n(1)`.
    FirstPowerSum,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::FundamentalIdentity => "fundamental_identity",
            Identity::Composition => "composition",
            Identity::DualForm => "dual_form",
            Identity::NonCoprimeCounterexample => "non_coprime_counterexample",
            Identity::TotientDivisorSum => "totient_divisor_sum",
            Identity::TotientDegreeComparison => "totient_degree_comparison",
            Identity::TotientMultiplicative => "totient_multiplicative",
            Identity::RamanujanDivisorSum => "ramanujan_divisor_sum",
            Identity::RamanujanInversion => "ramanujan_inversion",
            Identity::RamanujanFormulaAgreement => "ramanujan_formula_agreement",
            Identity::RamanujanZeroSpecialization => "ramanujan_zero_specialization",
            Identity::DegreeIsTotient => "degree_is_totient",
            Identity::ConstantTerm => "constant_term",
            Identity::LinearCoefficient => "linear_coefficient",
            Identity::SubleadingCoefficient => "subleading_coefficient",
            Identity::Palindrome => "palindrome",
            Identity::FirstPowerSum => "first_power_sum",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one identity check at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    identity: Identity,
    params: Vec<(&'static str, u64)>,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

impl CheckReport {
    fn pass(identity: Identity, params: &[(&'static str, u64)]) -> Self {
        CheckReport {
            identity,
            params: params.to_vec(),
            passed: true,
            witness: None,
        }
    }

    fn fail(identity: Identity, params: &[(&'static str, u64)], witness: String) -> Self {
        CheckReport {
            identity,
            params: params.to_vec(),
            passed: false,
            witness: Some(witness),
        }
    }

    fn compare<T: PartialEq + fmt::Display>(
        identity: Identity,
        params: &[(&'static str, u64)],
        lhs: &T,
        rhs: &T,
    ) -> Self {
        if lhs == rhs {
            Self::pass(identity, params)
        } else {
            Self::fail(identity, params, format!("{lhs} != {rhs}"))
        }
    }

    fn compare_polys(
        identity: Identity,
        params: &[(&'static str, u64)],
        lhs: Result<IntPoly, CycloError>,
        rhs: Result<IntPoly, CycloError>,
    ) -> Self {
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l == r => Self::pass(identity, params),
            (Ok(l), Ok(r)) => Self::fail(
                identity,
                params,
                format!(
                    "{} != {}",
                    l.display_truncated(WITNESS_TERMS),
                    r.display_truncated(WITNESS_TERMS)
                ),
            ),
            (Err(e), _) | (_, Err(e)) => Self::fail(identity, params, e.to_string()),
        }
    }

    pub fn identity(&self) -> Identity {
        self.identity
    }

    pub fn params(&self) -> &[(&'static str, u64)] {
        &self.params
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    /// Always present when the check failed.
    pub fn witness(&self) -> Option<&str> {
        self.witness.as_deref()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {}", self.identity)?;
        for (i, (name, value)) in self.params.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{name}={value}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

fn phi(n: u64) -> Result<IntPoly, CycloError> {
    cyclo::cached(n).map(|p| (*p).clone())
}

// ---------------------------------------------------------------------------
// polynomial identities

pub fn check_fundamental_identity(n: u64) -> CheckReport {
    let product = divisors(n).into_iter().try_fold(IntPoly::one(), |acc, d| {
        cyclo::cached(d).map(|p| &acc * &*p)
    });
    CheckReport::compare_polys(
        Identity::FundamentalIdentity,
        &[("n", n)],
        product,
        Ok(IntPoly::x_pow_minus_one(n as usize)),
    )
}

/// Both sides of `Φ_n(X^m) = Π_{d|m} Φ_{dn}`, for any `n, m`.
pub fn composition_sides(n: u64, m: u64) -> Result<(IntPoly, IntPoly), CycloError> {
    let lhs = cyclo::cached(n)?.substitute_power(m as usize);
    let rhs = cyclo::divisor_product(n, m)?;
    Ok((lhs, rhs))
}

pub fn check_composition(n: u64, m: u64) -> CheckReport {
    let params = [("n", n), ("m", m)];
    if !is_coprime(n, m) {
        return CheckReport::fail(
            Identity::Composition,
            &params,
            format!("precondition gcd(n, m) = 1 violated (gcd = {})", gcd(n, m)),
        );
    }
    match composition_sides(n, m) {
        Ok((lhs, rhs)) => {
            CheckReport::compare_polys(Identity::Composition, &params, Ok(lhs), Ok(rhs))
        }
        Err(e) => CheckReport::fail(Identity::Composition, &params, e.to_string()),
    }
}

pub fn check_dual_form(n: u64, m: u64) -> CheckReport {
    let params = [("n", n), ("m", m)];
    if !is_coprime(n, m) {
        return CheckReport::fail(
            Identity::DualForm,
            &params,
            format!("precondition gcd(n, m) = 1 violated (gcd = {})", gcd(n, m)),
        );
    }
    let product = phi(n).and_then(|phi_n| {
        cyclo::dual_form_product(&phi_n, m).map_err(|e| CycloError::InternalIdentityViolation {
            n: n * m,
            algorithm: cyclo::Algorithm::DualForm,
            detail: e.to_string(),
        })
    });
    CheckReport::compare_polys(Identity::DualForm, &params, phi(n * m), product)
}

/// Passes when the two sides of the composition identity differ, which is
/// the expected behaviour for `gcd(n, m) > 1`.
pub fn check_noncoprime_counterexample(n: u64, m: u64) -> CheckReport {
    let params = [("n", n), ("m", m)];
    let id = Identity::NonCoprimeCounterexample;
    match composition_sides(n, m) {
        Ok((lhs, rhs)) if lhs != rhs => CheckReport::pass(id, &params),
        Ok((lhs, _)) => CheckReport::fail(
            id,
            &params,
            format!("both sides equal {}", lhs.display_truncated(WITNESS_TERMS)),
        ),
        Err(e) => CheckReport::fail(id, &params, e.to_string()),
    }
}

/// The fundamental identity at `n`, then either the composition and dual
/// form identities (coprime `n, m`) or the counterexample check.
pub fn check_polynomial_identities(n: u64, m: u64) -> Vec<CheckReport> {
    arith::assert_index(n);
    arith::assert_index(m);
    let mut out = vec![check_fundamental_identity(n)];
    out.extend(pair_polynomial_checks(n, m));
    out
}

fn pair_polynomial_checks(n: u64, m: u64) -> Vec<CheckReport> {
    if is_coprime(n, m) {
        vec![check_composition(n, m), check_dual_form(n, m)]
    } else {
        vec![check_noncoprime_counterexample(n, m)]
    }
}

// ---------------------------------------------------------------------------
// totient identities

/// `Σ_{d|n} φ(d) = n`, plus the two coprime-pair identities when
/// `gcd(n, m) = 1`.
pub fn check_totient_identities(n: u64, m: u64) -> Vec<CheckReport> {
    arith::assert_index(n);
    arith::assert_index(m);
    let divisor_sum: u64 = divisors(n).into_iter().map(totient).sum();
    let mut out = vec![CheckReport::compare(
        Identity::TotientDivisorSum,
        &[("n", n)],
        &divisor_sum,
        &n,
    )];
    if is_coprime(n, m) {
        let params = [("n", n), ("m", m)];
        let phi_n = totient(n);
        let lhs: u64 = divisors(m).into_iter().map(|d| totient(d * n)).sum();
        out.push(CheckReport::compare(
            Identity::TotientDegreeComparison,
            &params,
            &lhs,
            &(m * phi_n),
        ));
        out.push(CheckReport::compare(
            Identity::TotientMultiplicative,
            &params,
            &totient(m * n),
            &(totient(m) * phi_n),
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// Ramanujan sums

/// Ramanujan-sum identities for coprime `n, m` at `q`.
pub fn check_ramanujan_identities(n: u64, m: u64, q: u64) -> Result<Vec<CheckReport>, VerifyError> {
    arith::assert_index(n);
    arith::assert_index(m);
    let g = gcd(n, m);
    if g != 1 {
        return Err(VerifyError::NotCoprime { n, m, gcd: g });
    }
    let params = [("n", n), ("m", m), ("q", q)];
    let c = ramanujan_sum_kluyver;
    let divs_m = divisors(m);

    // q = 0 counts as divisible by every m
    let divisor_sum: i64 = divs_m.iter().map(|&d| c(d * n, q)).sum();
    let expected = if q.is_multiple_of(m) {
        m as i64 * c(n, q / m)
    } else {
        0
    };
    let mut out = vec![CheckReport::compare(
        Identity::RamanujanDivisorSum,
        &params,
        &divisor_sum,
        &expected,
    )];

    let inverted: i64 = divisors(gcd(m, q))
        .into_iter()
        .map(|d| d as i64 * c(n, q / d) * i64::from(mobius(m / d)))
        .sum();
    out.push(CheckReport::compare(
        Identity::RamanujanInversion,
        &params,
        &c(m * n, q),
        &inverted,
    ));

    out.push(formula_agreement(m * n, q, &params));

    let zero_sum: i64 = divs_m.iter().map(|&d| c(d * n, 0)).sum();
    let totient_sum: u64 = divs_m.iter().map(|&d| totient(d * n)).sum();
    let target = m * totient(n);
    out.push(CheckReport::compare_triple(
        Identity::RamanujanZeroSpecialization,
        &params,
        (zero_sum, c(n, 0), totient_sum),
        (target as i64, totient(n) as i64, target),
    ));
    Ok(out)
}

fn formula_agreement(n: u64, q: u64, params: &[(&'static str, u64)]) -> CheckReport {
    let id = Identity::RamanujanFormulaAgreement;
    let values: Result<Vec<i64>, _> = [
        MethodChoice::Kluyver,
        MethodChoice::Hoelder,
        MethodChoice::Definition,
    ]
    .into_iter()
    .map(|method| ramanujan_sum(n, q, method))
    .collect();
    match values {
        Ok(v) if v.windows(2).all(|w| w[0] == w[1]) => CheckReport::pass(id, params),
        Ok(v) => CheckReport::fail(
            id,
            params,
            format!("kluyver={} hoelder={} definition={}", v[0], v[1], v[2]),
        ),
        Err(e) => CheckReport::fail(id, params, e.to_string()),
    }
}

// Renders as `(a, b, c)` in witnesses.
struct Triple<A, B, C>(A, B, C);

impl<A: fmt::Display, B: fmt::Display, C: fmt::Display> fmt::Display for Triple<A, B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0, self.1, self.2)
    }
}

impl<A: PartialEq, B: PartialEq, C: PartialEq> PartialEq for Triple<A, B, C> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0 && self.1 == other.1 && self.2 == other.2
    }
}

impl CheckReport {
    fn compare_triple(
        identity: Identity,
        params: &[(&'static str, u64)],
        lhs: (i64, i64, u64),
        rhs: (i64, i64, u64),
    ) -> Self {
        Self::compare(
            identity,
            params,
            &Triple(lhs.0, lhs.1, lhs.2),
            &Triple(rhs.0, rhs.1, rhs.2),
        )
    }
}

// ---------------------------------------------------------------------------
// coefficient facts

/// Degree, constant term, `a_1 = a_{φ(n)-1} = -μ(n)`, palindrome symmetry
/// and `S_1 = μ(n) = c_n(1)` for `Φ_n`, `n ≥ 2`.
pub fn check_coefficient_facts(n: u64) -> Result<Vec<CheckReport>, VerifyError> {
    if n < 2 {
        return Err(VerifyError::InvalidIndex { n });
    }
    let params = [("n", n)];
    let poly = match phi(n) {
        Ok(p) => p,
        Err(e) => {
            return Ok(vec![CheckReport::fail(
                Identity::DegreeIsTotient,
                &params,
                e.to_string(),
            )])
        }
    };
    let phi_n = totient(n) as usize;
    let mu = i64::from(mobius(n));
    let coeff = |k: usize| poly.coeff(k);
    let neg_mu = num_bigint::BigInt::from(-mu);

    let mut out = Vec::with_capacity(6);
    out.push(if poly.is_monic() && poly.degree() == Some(phi_n) {
        CheckReport::pass(Identity::DegreeIsTotient, &params)
    } else {
        CheckReport::fail(
            Identity::DegreeIsTotient,
            &params,
            format!(
                "degree {:?}, leading {:?}, φ(n) = {phi_n}",
                poly.degree(),
                poly.leading().map(ToString::to_string)
            ),
        )
    });
    out.push(CheckReport::compare(
        Identity::ConstantTerm,
        &params,
        &coeff(0),
        &num_bigint::BigInt::from(1),
    ));
    out.push(CheckReport::compare(
        Identity::LinearCoefficient,
        &params,
        &coeff(1),
        &neg_mu,
    ));
    out.push(CheckReport::compare(
        Identity::SubleadingCoefficient,
        &params,
        &coeff(phi_n.saturating_sub(1)),
        &neg_mu,
    ));
    out.push(if poly.is_palindromic() {
        CheckReport::pass(Identity::Palindrome, &params)
    } else {
        let reversed = IntPoly::from_coeffs(poly.coeffs().iter().rev().cloned().collect());
        CheckReport::compare_polys(
            Identity::Palindrome,
            &params,
            Ok(poly.clone()),
            Ok(reversed),
        )
    });
    let first = match poly.power_sums(1) {
        Ok(s) => {
            let s1 = s.get(1).cloned().unwrap_or_default();
            let kluyver = ramanujan_sum_kluyver(n, 1);
            CheckReport::compare_triple(
                Identity::FirstPowerSum,
                &params,
                (i64::try_from(&s1).unwrap_or(i64::MAX), kluyver, 0),
                (mu, mu, 0),
            )
        }
        Err(e) => CheckReport::fail(Identity::FirstPowerSum, &params, e.to_string()),
    };
    out.push(first);
    Ok(out)
}

// ---------------------------------------------------------------------------
// sweeps

/// A family of checks run together by [`sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Poly,
    Totient,
    Ramanujan,
    Coeff,
    All,
}

impl Suite {
    pub const EACH: [Suite; 4] = [Suite::Poly, Suite::Totient, Suite::Ramanujan, Suite::Coeff];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Poly => "poly",
            Suite::Totient => "totient",
            Suite::Ramanujan => "ramanujan",
            Suite::Coeff => "coeff",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "poly" => Ok(Suite::Poly),
            "totient" => Ok(Suite::Totient),
            "ramanujan" => Ok(Suite::Ramanujan),
            "coeff" => Ok(Suite::Coeff),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite {other:?} (expected poly, totient, ramanujan, coeff or all)"
            )),
        }
    }
}

/// Sweep bounds.
///
/// Pair-based suites visit every `(n, m)` with `n·m ≤ max_n`; the
/// coefficient suite visits `2 ≤ n ≤ max_n`; the Ramanujan suite also runs
/// `0 ≤ q ≤ max_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: u64,
    pub max_q: u64,
}

/// Aggregated outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub checks: u64,
    pub failures: Vec<CheckReport>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: Vec<CheckReport>,
}

impl Tally {
    fn record(&mut self, reports: impl IntoIterator<Item = CheckReport>) {
        for r in reports {
            self.checks += 1;
            if !r.passed {
                self.failures.push(r);
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }
}

// Runs `per_n` for every n in 1..=max_n in parallel; failures come back in
// parameter order.
fn tally_over_n(lo: u64, max_n: u64, per_n: impl Fn(u64, &mut Tally) + Sync) -> Tally {
    (lo..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut t = Tally::default();
            per_n(n, &mut t);
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

/// The polynomial identities for every pair `n·m ≤ max_n`: composition and
/// dual form for coprime pairs, the counterexample check otherwise.
pub fn sweep_polynomial(max_n: u64) -> SuiteSummary {
    // fill the cache in index order before fanning out
    for k in 1..=max_n {
        let _ = cyclo::cached(k);
    }
    let t = tally_over_n(1, max_n, |n, t| {
        t.record([check_fundamental_identity(n)]);
        for m in 1..=max_n / n {
            t.record(pair_polynomial_checks(n, m));
        }
    });
    summary(Suite::Poly, t)
}

/// Only the composition identity, for every coprime pair `n·m ≤ max_n`.
pub fn sweep_composition(max_n: u64) -> SuiteSummary {
    for k in 1..=max_n {
        let _ = cyclo::cached(k);
    }
    let t = tally_over_n(1, max_n, |n, t| {
        for m in (1..=max_n / n).filter(|&m| is_coprime(n, m)) {
            t.record([check_composition(n, m)]);
        }
    });
    summary(Suite::Poly, t)
}

/// The counterexample check for every pair with `gcd(n, m) > 1` and
/// `n·m ≤ max_n`.
pub fn sweep_counterexamples(max_n: u64) -> SuiteSummary {
    let t = tally_over_n(1, max_n, |n, t| {
        for m in (1..=max_n / n).filter(|&m| !is_coprime(n, m)) {
            t.record([check_noncoprime_counterexample(n, m)]);
        }
    });
    summary(Suite::Poly, t)
}

pub fn sweep_totient(max_n: u64) -> SuiteSummary {
    let t = tally_over_n(1, max_n, |n, t| {
        // the divisor-sum check once per n, then the coprime pair checks
        t.record(check_totient_identities(n, 1));
        for m in (2..=max_n / n).filter(|&m| is_coprime(n, m)) {
            t.record(check_totient_identities(n, m).into_iter().skip(1));
        }
    });
    summary(Suite::Totient, t)
}

pub fn sweep_ramanujan(max_n: u64, max_q: u64) -> SuiteSummary {
    let t = tally_over_n(1, max_n, |n, t| {
        for m in (1..=max_n / n).filter(|&m| is_coprime(n, m)) {
            for q in 0..=max_q {
                t.record(check_ramanujan_identities(n, m, q).expect("coprime by construction"));
            }
        }
    });
    summary(Suite::Ramanujan, t)
}

pub fn sweep_coefficients(max_n: u64) -> SuiteSummary {
    let t = tally_over_n(2, max_n, |n, t| {
        t.record(check_coefficient_facts(n).expect("n >= 2"));
    });
    summary(Suite::Coeff, t)
}

fn summary(suite: Suite, t: Tally) -> SuiteSummary {
    SuiteSummary {
        suite,
        checks: t.checks,
        failures: t.failures,
    }
}

/// Runs one suite, or every suite for [`Suite::All`], in a fixed order.
pub fn sweep(suite: Suite, config: SweepConfig) -> Vec<SuiteSummary> {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        one => vec![one],
    };
    suites
        .into_iter()
        .map(|s| match s {
            Suite::Poly => sweep_polynomial(config.max_n),
            Suite::Totient => sweep_totient(config.max_n),
            Suite::Ramanujan => sweep_ramanujan(config.max_n, config.max_q),
            Suite::Coeff => sweep_coefficients(config.max_n),
            Suite::All => unreachable!(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(reports: &[CheckReport]) -> bool {
        reports.iter().all(CheckReport::passed)
    }

    #[test]
    fn polynomial_examples() {
        let r = check_polynomial_identities(4, 3);
        assert_eq!(r.len(), 3);
        assert!(all_pass(&r), "{r:?}");

        for m in 1..=12 {
            assert!(all_pass(&check_polynomial_identities(1, m)));
        }

        let r = check_polynomial_identities(4, 2);
        assert_eq!(r[1].identity(), Identity::NonCoprimeCounterexample);
        assert!(all_pass(&r));
        let (lhs, rhs) = composition_sides(4, 2).unwrap();
        assert_eq!(lhs, IntPoly::from_i64s(&[1, 0, 0, 0, 1]));
        assert_eq!(rhs, IntPoly::from_i64s(&[1, 0, 1, 0, 1, 0, 1]));
    }

    #[test]
    fn failed_reports_carry_witness() {
        let r = check_composition(4, 2);
        assert!(!r.passed());
        assert!(r.witness().is_some());
        let r = CheckReport::compare(Identity::TotientDivisorSum, &[("n", 3)], &1u64, &2u64);
        assert_eq!(r.witness(), Some("1 != 2"));
        assert_eq!(r.to_string(), "[FAIL] totient_divisor_sum n=3: 1 != 2");
    }

    #[test]
    fn witnesses_are_truncated() {
        let lhs = IntPoly::x_pow_minus_one(100).substitute_power(1);
        let rhs: IntPoly = IntPoly::from_coeffs(vec![1.into(); 100]);
        let r = CheckReport::compare_polys(Identity::Composition, &[], Ok(lhs), Ok(rhs));
        let w = r.witness().unwrap();
        assert!(w.contains("(60 more terms)"), "{w}");
    }

    #[test]
    fn totient_examples() {
        let r = check_totient_identities(12, 1);
        assert!(all_pass(&r));
        let r = check_totient_identities(4, 3);
        assert_eq!(r.len(), 3);
        assert!(all_pass(&r));
        assert!(all_pass(&check_totient_identities(1, 1)));
        // non-coprime pair only yields the divisor-sum check
        assert_eq!(check_totient_identities(4, 2).len(), 1);
    }

    #[test]
    fn ramanujan_examples() {
        for (n, m, q) in [(1, 4, 4), (1, 4, 2), (3, 4, 0), (5, 6, 0), (2, 9, 18)] {
            let r = check_ramanujan_identities(n, m, q).unwrap();
            assert_eq!(r.len(), 4);
            assert!(all_pass(&r), "{r:?}");
        }
        assert_eq!(
            check_ramanujan_identities(2, 4, 1),
            Err(VerifyError::NotCoprime { n: 2, m: 4, gcd: 2 })
        );
    }

    #[test]
    fn coefficient_examples() {
        for n in [6, 4, 105, 2, 3] {
            let r = check_coefficient_facts(n).unwrap();
            assert_eq!(r.len(), 6);
            assert!(all_pass(&r), "n={n} {r:?}");
        }
        assert_eq!(
            check_coefficient_facts(1),
            Err(VerifyError::InvalidIndex { n: 1 })
        );
    }

    #[test]
    fn small_sweep_is_clean_and_deterministic() {
        let cfg = SweepConfig {
            max_n: 60,
            max_q: 20,
        };
        let a = sweep(Suite::All, cfg);
        let b = sweep(Suite::All, cfg);
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
        for s in &a {
            assert!(s.passed(), "{:?}", s.failures);
            assert!(s.checks > 0);
        }
    }
}
