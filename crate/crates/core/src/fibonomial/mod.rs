//! Fibonacci factorials, Fibonomials, golden binomials and polynomials, the
//! noncommutative binomial on the plane yx = φxy, and the Jackson exponential
//! with base −φ².

mod binomial;
mod factorial;
mod jackson;
mod noncomm;
mod poly;
mod polynomial;

pub use binomial::{
    binomial_coefficients, binomial_root, full_y_derivative, golden_binomial, triangular_sign,
    vanishes_at_ratio, BinomialForm, BINOMIAL_LIMIT,
};
pub use factorial::{fib_factorial, fibonomial, fibonomial_row, FACTORIAL_LIMIT, FIBONOMIAL_LIMIT};
pub use jackson::{
    golden_jackson_base, jackson_exp, q_numbers, remarkable_limit, remarkable_limit_lhs,
    LimitReport, JACKSON_TERM_LIMIT, LIMIT_INDEX_MAX,
};
pub use noncomm::{
    bridges_commutative, noncomm_closed_form, noncomm_expand, noncomm_expand_by_words,
    normal_order, Letter, NoncommWord, NONCOMM_LIMIT,
};
pub use poly::{BivarPoly, Coeff, UnivarPoly};
pub use polynomial::{
    factored_fibonacci_form, factored_root_form, golden_polynomial, golden_polynomial_numerator,
    printed_polynomials, PrintedPolynomial,
};
