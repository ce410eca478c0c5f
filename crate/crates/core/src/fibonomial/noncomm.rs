use num_traits::{One, Zero};

use crate::error::{GoldenError, Result};
use crate::fibonomial::binomial::triangular_sign;
use crate::fibonomial::factorial::fibonomial_row;
use crate::golden::{phi_pow, ZPhi};

pub const NONCOMM_LIMIT: u32 = 12;

/// A homogeneous element of the plane yx = φxy in normal order:
/// `coeffs[k]` multiplies x^{n−k} y^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoncommWord {
    pub n: u32,
    pub coeffs: Vec<ZPhi>,
}

/// A letter of a word in the noncommuting generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
}

/// Brings a single word to the form `c · x^a y^b` using yx = φxy.
pub fn normal_order(word: &[Letter]) -> (ZPhi, u32, u32) {
    // each y standing to the left of an x contributes one factor φ
    let mut ys_seen = 0i64;
    let mut swaps = 0i64;
    for letter in word {
        match letter {
            Letter::Y => ys_seen += 1,
            Letter::X => swaps += ys_seen,
        }
    }
    let xs = word.iter().filter(|&&l| l == Letter::X).count() as u32;
    (phi_pow(swaps), xs, word.len() as u32 - xs)
}

/// Expands (x + y)(x + q y)⋯(x + q^{n−1} y) with q = −1/φ, normal-ordering
/// after every factor.
pub fn noncomm_expand(n: u32) -> Result<NoncommWord> {
    if n > NONCOMM_LIMIT {
        return Err(GoldenError::TooLarge {
            what: "noncommutative degree",
            got: n as i64,
            maximum: NONCOMM_LIMIT as i64,
        });
    }
    let q = ZPhi::phi_conj();
    let mut coeffs = vec![ZPhi::one()];
    for j in 0..n {
        let qj = q.pow(j as i64).expect("non-negative power");
        let mut next = vec![ZPhi::zero(); coeffs.len() + 1];
        for (b, c) in coeffs.iter().enumerate() {
            // x^a y^b · x = φ^b x^{a+1} y^b
            next[b] += &(c * &phi_pow(b as i64));
            next[b + 1] += &(c * &qj);
        }
        coeffs = next;
    }
    Ok(NoncommWord { n, coeffs })
}

/// [n,k]_F (−1/φ)^{k(k−1)/2}, the closed form of each coefficient.
pub fn noncomm_closed_form(n: u32) -> Vec<ZPhi> {
    let q = ZPhi::phi_conj();
    fibonomial_row(n as usize)
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            let e = (k * k.saturating_sub(1) / 2) as i64;
            &ZPhi::from_int(c) * &q.pow(e).expect("non-negative power")
        })
        .collect()
}

/// Expands the same product by enumerating all 2^n words and normal-ordering
/// each one independently.
pub fn noncomm_expand_by_words(n: u32) -> NoncommWord {
    let q = ZPhi::phi_conj();
    let mut coeffs = vec![ZPhi::zero(); n as usize + 1];
    for mask in 0u32..(1 << n) {
        let mut word = Vec::with_capacity(n as usize);
        let mut scalar = ZPhi::one();
        for j in 0..n {
            if mask >> j & 1 == 1 {
                word.push(Letter::Y);
                scalar *= &q.pow(j as i64).expect("non-negative power");
            } else {
                word.push(Letter::X);
            }
        }
        let (c, _, b) = normal_order(&word);
        coeffs[b as usize] += &(&scalar * &c);
    }
    NoncommWord { n, coeffs }
}

/// Whether the coefficient of x^{n−k}y^k differs from the commutative
/// binomial coefficient only by the factor φ^{−k(k−1)/2}.
pub fn bridges_commutative(word: &NoncommWord) -> bool {
    let row = fibonomial_row(word.n as usize);
    word.coeffs.iter().enumerate().all(|(k, c)| {
        let e = (k * k.saturating_sub(1) / 2) as i64;
        let commutative = ZPhi::from_int(&row[k] * triangular_sign(k as u64));
        c == &(&commutative * &phi_pow(-e))
    })
}
