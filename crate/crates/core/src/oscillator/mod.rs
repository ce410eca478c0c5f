//! The golden oscillator on a truncated Fock space.
//!
//! b⁺b = [N]_F and bb⁺ = [N+1]_F, so the spectrum of
//! H = (ħω/2)(b⁺b + bb⁺) is (ħω/2) F_{n+2}.

mod inversion;
mod ladder;
mod spectrum;

pub use inversion::{invert_number, invert_number_minus_branch, Parity};
pub use ladder::{
    build_ladder, diagonal_identities_exact, nonlinear_map, number_operator_gap,
    verify_oscillator_algebra, IdentityResidual, LadderSet, NonlinearMap, OscillatorReport,
    LADDER_DIM_MAX,
};
pub use spectrum::{energy_ratios, spectrum, Level, SpectrumTable, SPECTRUM_N_MAX};
