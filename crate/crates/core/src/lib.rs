//! Exact cyclotomic polynomials and the arithmetic functions around them.
//!
//! The crate is split into four layers:
//!
//! - [`arith`]: factorization, divisors, the Möbius and totient functions and
//!   Ramanujan sums `c_n(q)` by several closed forms;
//! - [`intpoly`]: dense polynomials over arbitrary-precision integers, with
//!   Newton's identities between coefficients and power sums of roots;
//! - [`cyclo`]: `Φ_n` by five independent algorithms, and `Φ_n(X^m)` as a
//!   product of cyclotomic polynomials;
//! - [`verify`]: identity checks that return structured reports instead of
//!   panicking, plus parameter sweeps over them.
//!
//! ```
//! use cyclotomy::cyclo::{cyclotomic, Algorithm};
//!
//! let phi12 = cyclotomic(12, Algorithm::Recursive).unwrap();
//! assert_eq!(phi12.poly.to_string(), "x^4 - x^2 + 1");
//! ```

pub mod arith;
pub mod cyclo;
pub mod intpoly;
pub mod verify;

pub use arith::{MethodChoice, Natural};
pub use cyclo::{Algorithm, CyclotomicResult};
pub use intpoly::{IntPoly, PowerSums};
