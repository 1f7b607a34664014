//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored in ascending order and kept canonical: no
//! trailing zeros, and the zero polynomial is the empty vector.
//!
//! The quadratic kernels (multiplication, exact division and the two Newton
//! recursions) first run on `i128` with checked arithmetic and fall back to
//! `BigInt` as soon as any intermediate overflows, so results are always
//! exact.

use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor does not divide the dividend exactly")]
    NotDivisible,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("power sums need a polynomial of degree at least 1")]
    Constant,
    #[error("Newton recursion produced a non-integer coefficient at X^{index}")]
    InexactDivision { index: usize },
    #[error("need power sums S_1..S_{needed}, only {available} values given")]
    InsufficientPowerSums { needed: usize, available: usize },
}

thread_local! {
    static EXACT_DIVISIONS: Cell<u64> = const { Cell::new(0) };
}

/// Number of polynomial exact divisions performed on the current thread.
///
/// Lets callers assert that a code path is division-free.
pub fn exact_division_count() -> u64 {
    EXACT_DIVISIONS.with(Cell::get)
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        IntPoly::from_i64s(&[0, 1])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn monomial(coeff: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff;
        IntPoly::from_coeffs(coeffs)
    }

    /// `X^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `X^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Largest absolute value among the coefficients.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default()
    }

    /// `a_k = a_{deg-k}` for every k.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn count_nonzero(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// `p(X^m)`.
    pub fn substitute_power(&self, m: usize) -> IntPoly {
        assert!(m >= 1, "substitution exponent must be positive");
        if m == 1 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * m + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * m] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `self · (X^d - 1)` in linear time.
    pub fn mul_x_pow_minus_one(&self, d: usize) -> IntPoly {
        assert!(d >= 1);
        if self.is_zero() {
            return IntPoly::zero();
        }
        let len = self.coeffs.len() + d;
        let mut coeffs = vec![BigInt::zero(); len];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j + d] += c;
            coeffs[j] -= c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Returns `r` with `self = divisor · r`, or [`PolyError::NotDivisible`]
    /// when the remainder is nonzero or a quotient coefficient is not an
    /// integer.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        EXACT_DIVISIONS.with(|c| c.set(c.get() + 1));
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(PolyError::NotDivisible);
        }
        let result = match exact_div_kernel(&narrow(&self.coeffs), &narrow(&divisor.coeffs)) {
            Err(KernelError::Overflow) => exact_div_kernel(&self.coeffs, &divisor.coeffs),
            small => small.map(widen),
        };
        match result {
            Ok(quotient) => Ok(IntPoly::from_coeffs(quotient)),
            Err(KernelError::Overflow) => unreachable!("BigInt does not overflow"),
            Err(_) => Err(PolyError::NotDivisible),
        }
    }

    /// Power sums `S_0 .. S_{q_max}` of the roots, from the coefficients
    /// alone via Newton's identities.
    pub fn power_sums(&self, q_max: usize) -> Result<PowerSums, PolyError> {
        if !self.is_monic() {
            return Err(PolyError::NotMonic);
        }
        if self.coeffs.len() < 2 {
            return Err(PolyError::Constant);
        }
        let values = match power_sums_kernel(&narrow(&self.coeffs), q_max) {
            Some(v) => widen(v),
            None => power_sums_kernel(&self.coeffs, q_max).expect("BigInt does not overflow"),
        };
        Ok(PowerSums { values })
    }

    /// Renders at most `max_terms` nonzero terms, highest degree first,
    /// followed by an elision marker when some were dropped.
    pub fn display_truncated(&self, max_terms: usize) -> String {
        let nonzero = self.count_nonzero();
        let shown = render_terms(self, max_terms);
        if nonzero > max_terms {
            format!("{shown} + ... ({} more terms)", nonzero - max_terms)
        } else {
            shown
        }
    }
}

/// Rebuilds the monic polynomial of degree `degree` whose roots have power
/// sums `sums[1..=degree]`. `sums[0]` is not consulted.
///
/// Runs `a_{N-l} = -(1/l) Σ_{j<l} a_{N-j} S_{l-j}` for `l = 1..=N`, so the
/// constant term is produced too; every division by `l` must be exact.
pub fn coeffs_from_power_sums(sums: &PowerSums, degree: usize) -> Result<IntPoly, PolyError> {
    if sums.values.len() < degree + 1 {
        return Err(PolyError::InsufficientPowerSums {
            needed: degree,
            available: sums.values.len().saturating_sub(1),
        });
    }
    let sums = &sums.values[..=degree];
    let result = match newton_inverse_kernel(&narrow(sums), degree) {
        Err(KernelError::Overflow) => newton_inverse_kernel(sums, degree),
        small => small.map(widen),
    };
    match result {
        Ok(coeffs) => Ok(IntPoly::from_coeffs(coeffs)),
        Err(KernelError::Inexact(index)) => Err(PolyError::InexactDivision { index }),
        Err(_) => unreachable!("BigInt does not overflow"),
    }
}

/// Power sums `S_q` of the roots of a monic polynomial, indexed from `q = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSums {
    values: Vec<BigInt>,
}

impl PowerSums {
    pub fn new(values: Vec<BigInt>) -> Self {
        PowerSums { values }
    }

    pub fn from_i64s(values: &[i64]) -> Self {
        PowerSums::new(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn get(&self, q: usize) -> Option<&BigInt> {
        self.values.get(q)
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

// ---------------------------------------------------------------------------
// kernels

enum KernelError {
    Overflow,
    NotDivisible,
    /// Newton recursion hit a non-integer coefficient of `X^index`.
    Inexact(usize),
}

/// Ring operations the kernels need; `None` means the machine type
/// overflowed and the caller should retry on `BigInt`.
trait Scalar: Clone {
    fn nil() -> Self;
    fn from_u64(v: u64) -> Self;
    fn is_nil(&self) -> bool;
    fn add(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// `(quotient, remainder)`, truncating.
    fn div_rem(&self, other: &Self) -> Option<(Self, Self)>;
}

impl Scalar for i128 {
    fn nil() -> Self {
        0
    }
    fn from_u64(v: u64) -> Self {
        v.into()
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_rem(&self, other: &Self) -> Option<(Self, Self)> {
        Some((self.checked_div(*other)?, self.checked_rem(*other)?))
    }
}

impl Scalar for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn from_u64(v: u64) -> Self {
        v.into()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_rem(&self, other: &Self) -> Option<(Self, Self)> {
        Some(Integer::div_rem(self, other))
    }
}

/// Small-integer copy of `coeffs`; values outside `i64` become a sentinel
/// that makes every kernel bail out with `Overflow`.
fn narrow(coeffs: &[BigInt]) -> Vec<i128> {
    coeffs
        .iter()
        .map(|c| c.to_i64().map_or(i128::MIN, i128::from))
        .collect()
}

fn widen(values: Vec<i128>) -> Vec<BigInt> {
    values.into_iter().map(BigInt::from).collect()
}

fn has_sentinel<T: Scalar + PartialEq>(values: &[T]) -> bool {
    // Only i128 inputs can carry the sentinel; checked ops on MIN overflow
    // quickly anyway, but testing up front avoids partial work.
    values.iter().any(|v| v.neg().is_none())
}

fn nonzero_terms<T: Scalar>(coeffs: &[T]) -> Vec<(usize, &T)> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_nil())
        .collect()
}

fn mul_kernel<T: Scalar + PartialEq>(a: &[T], b: &[T]) -> Option<Vec<T>> {
    if has_sentinel(a) || has_sentinel(b) {
        return None;
    }
    let (a, b) = if a.len() < b.len() { (b, a) } else { (a, b) };
    let b_terms = nonzero_terms(b);
    let mut out = vec![T::nil(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_nil() {
            continue;
        }
        for &(j, y) in &b_terms {
            let slot = &mut out[i + j];
            *slot = slot.add(&x.mul(y)?)?;
        }
    }
    Some(out)
}

fn exact_div_kernel<T: Scalar + PartialEq>(num: &[T], den: &[T]) -> Result<Vec<T>, KernelError> {
    if has_sentinel(num) || has_sentinel(den) {
        return Err(KernelError::Overflow);
    }
    let of = || KernelError::Overflow;
    let dq = den.len() - 1;
    let lead = &den[dq];
    let lower: Vec<(usize, &T)> = nonzero_terms(&den[..dq]);
    let mut rem = num.to_vec();
    let mut quot = vec![T::nil(); num.len() - dq];
    for k in (0..quot.len()).rev() {
        let top = std::mem::replace(&mut rem[k + dq], T::nil());
        if top.is_nil() {
            continue;
        }
        let (c, r) = top.div_rem(lead).ok_or_else(of)?;
        if !r.is_nil() {
            return Err(KernelError::NotDivisible);
        }
        for &(j, b) in &lower {
            let slot = &mut rem[k + j];
            *slot = slot.sub(&c.mul(b).ok_or_else(of)?).ok_or_else(of)?;
        }
        quot[k] = c;
    }
    if rem[..dq].iter().any(|r| !r.is_nil()) {
        return Err(KernelError::NotDivisible);
    }
    Ok(quot)
}

fn power_sums_kernel<T: Scalar + PartialEq>(coeffs: &[T], q_max: usize) -> Option<Vec<T>> {
    if has_sentinel(coeffs) {
        return None;
    }
    let n = coeffs.len() - 1;
    // below[j] = a_{N-j}
    let below: Vec<(usize, &T)> = (1..=n)
        .map(|j| (j, &coeffs[n - j]))
        .filter(|(_, c)| !c.is_nil())
        .collect();
    let mut sums = Vec::with_capacity(q_max + 1);
    sums.push(T::from_u64(n as u64));
    for q in 1..=q_max {
        let mut s = T::nil();
        if q <= n {
            s = s.sub(&T::from_u64(q as u64).mul(&coeffs[n - q])?)?;
        }
        for &(j, a) in &below {
            if j >= q {
                break;
            }
            s = s.sub(&a.mul(&sums[q - j])?)?;
        }
        sums.push(s);
    }
    Some(sums)
}

fn newton_inverse_kernel<T: Scalar + PartialEq>(
    sums: &[T],
    degree: usize,
) -> Result<Vec<T>, KernelError> {
    let of = || KernelError::Overflow;
    if has_sentinel(&sums[1..]) {
        return Err(KernelError::Overflow);
    }
    // Recursion runs in descending order: top[j] = a_{N-j}.
    let mut top: Vec<T> = Vec::with_capacity(degree + 1);
    top.push(T::from_u64(1));
    let s_terms: Vec<(usize, &T)> = nonzero_terms(sums)
        .into_iter()
        .filter(|&(i, _)| i > 0)
        .collect();
    for l in 1..=degree {
        let mut acc = T::nil();
        for &(i, s) in &s_terms {
            if i > l {
                break;
            }
            // j = l - i ranges over 0..l
            let a = &top[l - i];
            if !a.is_nil() {
                acc = acc.add(&a.mul(s).ok_or_else(of)?).ok_or_else(of)?;
            }
        }
        let (c, r) = acc.div_rem(&T::from_u64(l as u64)).ok_or_else(of)?;
        if !r.is_nil() {
            return Err(KernelError::Inexact(degree - l));
        }
        top.push(c.neg().ok_or_else(of)?);
    }
    top.reverse();
    Ok(top)
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &'a IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &'a IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &'a IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let coeffs = match mul_kernel(&narrow(&self.coeffs), &narrow(&rhs.coeffs)) {
            Some(c) => widen(c),
            None => mul_kernel(&self.coeffs, &rhs.coeffs).expect("BigInt does not overflow"),
        };
        IntPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &'a IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

fn render_terms(p: &IntPoly, max_terms: usize) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p
        .coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .take(max_terms)
    {
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = c.abs();
        if k == 0 || !abs.is_one() {
            out.push_str(&abs.to_string());
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => {
                out.push_str("x^");
                out.push_str(&k.to_string());
            }
        }
    }
    out
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self, usize::MAX))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
