//! The golden derivative D_F f(x) = (f(φx) − f(−x/φ)) / (√5 x) and the
//! functions built around it: golden exponentials and trigonometric
//! functions, F-oscillator solutions, and the golden-Jackson antiderivative.

mod exponential;
mod fnrepr;
mod integral;
mod leibnitz;
pub mod series;

pub use exponential::{
    f_oscillator_residual, f_oscillator_solution, fibonacci_exponential_closed,
    fibonacci_exponential_sum, golden_exp, golden_trig, ExpKind, OscKind, TrigKind,
};
pub use fnrepr::{
    dilations, golden_derivative, golden_derivative_at, golden_difference, golden_taylor,
    taylor_reconstruct, CoeffStream, Evaluator, FnRepr, TAYLOR_DEGREE_LIMIT,
};
pub use integral::{
    is_golden_periodic, jackson_antiderivative, jackson_antiderivative_fn, jackson_ratio,
    log_periodic_example, log_spaced_samples, PeriodicityReport,
};
pub use leibnitz::{product, product_rules, quotient_rules, ProductRules, QuotientRules};
pub use series::{SeriesValue, SERIES_CUTOFF, SERIES_TERM_LIMIT};
