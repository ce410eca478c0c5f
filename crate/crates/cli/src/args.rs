use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "binet", version, about = "Binet-Fibonacci calculus toolkit")]
pub struct Cli {
    /// Working precision in decimal digits.
    #[arg(long, global = true, default_value_t = binet_core::DEFAULT_PRECISION)]
    pub precision: u32,
    /// Tolerance override for verification and residual checks.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Seed for randomized verification samples.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExpArg {
    /// e_F^x
    #[value(name = "e")]
    Small,
    /// E_F^x
    #[value(name = "E")]
    Big,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TrigArg {
    Cos,
    Sin,
    Cosh,
    Sinh,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Product,
    Expansion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Standard,
    Symmetric,
    Tilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RatioKind {
    /// F_{n+1} / F_n
    Fibonacci,
    /// E_{n+1} / E_n
    Energy,
    /// Casimir eigenvalue ratios C_j / C_{j-1}
    Casimir,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Default,
    Strict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    Ladder,
    Fibonacci,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlotKind {
    Ratios,
    Spectrum,
    #[value(name = "casimir_ratios", alias = "casimir-ratios")]
    CasimirRatios,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fibonacci number F_n for an integer n (negative allowed).
    Fib {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Analytic Fibonacci F_z for a complex argument.
    Fibx {
        #[arg(allow_negative_numbers = true)]
        re: String,
        #[arg(long, default_value = "0", allow_negative_numbers = true)]
        im: String,
    },
    /// Fibonomial coefficient [n, k]_F.
    Fibonomial {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Golden binomial (x + y)_F^n.
    Binom {
        n: u32,
        #[arg(long, value_enum, default_value_t = FormArg::Expansion)]
        form: FormArg,
    },
    /// Golden polynomial P_n(x) = (x - a)_F^n / F_n!.
    Poly {
        n: u32,
        /// Expansion point, an integer or fraction such as -5/3.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        a: String,
    },
    /// Golden derivative of a polynomial given by ascending coefficients.
    Deriv {
        /// Comma-separated ascending coefficients, e.g. "1,-2,1/3".
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
        /// Evaluate the derivative at this point.
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
    },
    /// Golden exponential e_F^x or E_F^x.
    Exp {
        #[arg(allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        im: f64,
        #[arg(long, value_enum, default_value_t = ExpArg::Small)]
        kind: ExpArg,
        #[arg(long, default_value_t = 200)]
        terms: usize,
    },
    /// Golden trigonometric and hyperbolic functions.
    Trig {
        #[arg(allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        im: f64,
        #[arg(long, value_enum)]
        kind: TrigArg,
        #[arg(long, default_value_t = 200)]
        terms: usize,
    },
    /// Golden-Jackson antiderivative of a polynomial at x.
    Integrate {
        /// Comma-separated ascending coefficients, e.g. "1,-2,1/3".
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 200)]
        terms: usize,
    },
    /// Oscillator energy levels E_n = (hbar omega / 2) F_{n+2}.
    Spectrum {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 1.0)]
        hbar_omega: f64,
    },
    /// Convergent ratio sequences.
    Ratios {
        #[arg(long, value_enum, default_value_t = RatioKind::Fibonacci)]
        kind: RatioKind,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
    },
    /// Angular-momentum generators for one spin.
    Angmom {
        #[arg(long, value_enum, default_value_t = VariantArg::Standard)]
        variant: VariantArg,
        /// Spin label such as 2, 3/2 or 1.5.
        #[arg(long)]
        j: String,
    },
    /// Recover n from a Fibonacci number F_n.
    InvertN {
        value: String,
        #[arg(long, value_enum, default_value_t = ParityArg::Auto)]
        parity: ParityArg,
    },
    /// Compare (1 + y/phi^n)_F^n against the Jackson exponential.
    Limit {
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        #[arg(long, default_value_t = 80)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        terms: usize,
    },
    /// Run every identity suite.
    Verify {
        #[arg(long, value_enum, default_value_t = ProfileArg::Default)]
        profile: ProfileArg,
        /// Keep only suites whose id contains this text.
        #[arg(long)]
        only: Option<String>,
        /// Corrupt one input to check that the suites notice.
        #[arg(long, value_enum)]
        fault: Option<FaultArg>,
    },
    /// Write plot data as CSV.
    PlotData {
        #[arg(long, value_enum)]
        kind: PlotKind,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        out: PathBuf,
    },
}
