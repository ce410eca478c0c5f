//! Binet-Fibonacci ("golden") q-calculus and the golden quantum oscillator.
//!
//! * [`golden`]: Fibonacci numbers, the ring Z[φ], and the complex extension F_z.
//! * [`fibonomial`]: Fibonacci factorials, Fibonomials, golden binomials and
//!   polynomials, the noncommutative binomial, the Jackson exponential.
//! * [`calculus`]: the golden derivative, exponentials, trigonometric
//!   functions, and the golden-Jackson antiderivative.
//! * [`oscillator`]: truncated Fock-space matrices of the golden oscillator.
//! * [`angular`]: deformed angular-momentum representations built from two
//!   golden bosons.
//! * [`record`]: the JSON and table output shapes used by front ends.
//! * [`verify`]: the identity verifier that drives every check above.

pub mod angular;
pub mod calculus;
pub mod error;
pub mod fibonomial;
pub mod golden;
pub mod hp;
pub mod matrix;
pub mod oscillator;
pub mod record;
pub mod verify;

pub use error::{GoldenError, Result};
pub use golden::{fib_exact, fib_extended, GoldenValue, ZPhi};
pub use hp::{HpComplex, HpReal, Precision, DEFAULT_PRECISION};
pub use record::{OutputRecord, Table};
pub use verify::{verify_all, Profile, Status, VerificationReport, VerifyOptions};
