//! Exact and analytic Binet-Fibonacci arithmetic.
//!
//! The integer path ([`fib_exact`], [`ZPhi`]) is exact and authoritative.
//! The analytic path ([`fib_extended`]) evaluates
//! F_z = (φ^z − e^{iπz} φ^{−z}) / √5 in multiprecision and agrees with the
//! integer path at integer arguments.

mod extended;
mod fib;
mod zphi;

pub use extended::{
    fib_extended, fib_extended_decimal, fib_extended_in, fib_higher_extended, neg_inv_phi_cpow,
    phi_cpow, GoldenValue, EXTENDED_ARG_LIMIT,
};
pub use fib::{
    fib_exact, fib_f64, fib_higher, fib_table, phi_value, ratio_sequence, FibInt, FIB_INDEX_LIMIT,
};
pub use zphi::{phi_pow, phi_power_exact, ZPhi};

/// φ as f64.
pub const PHI: f64 = 1.618_033_988_749_895;
/// √5 as f64.
pub const SQRT5: f64 = 2.236_067_977_499_79;
