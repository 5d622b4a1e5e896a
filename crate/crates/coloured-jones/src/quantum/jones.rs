//! The two direct computations of the coloured Jones polynomial.
//!
//! For a braid `β` on `n` strands whose closure is a knot, both routes
//! compute
//!
//! ```text
//! J_N = [N]_q^{-1} · q^{-(N-1) w(β)} · bracket(β, N)
//! ```
//!
//! where the bracket is the scalar obtained by closing the braid through the
//! dualities. The divisibility of the bracket by `[N]_q` is a structural
//! guarantee: its failure is a hard error, never a silent rational output.

use super::duality::{coev_nested, coev_normalized, ev_nested, ev_normalized};
use super::rmatrix::braid_rep_action;
use crate::braid::BraidWord;
use crate::ring::{quantum_int, LaurentPoly, RingError, Var, QR};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum QuantumError {
    #[error("the closure of the braid is not a knot")]
    NotAKnot,
    #[error("bracket is not divisible by [N]_q — convention bug: {0}")]
    NonDivisible(RingError),
    #[error("colour must be at least 2")]
    BadColour,
}

fn prefactor(colour: u16, writhe: i64) -> LaurentPoly {
    LaurentPoly::var_pow(QR, Var::Q, -(colour as i64 - 1) * writhe)
}

fn finish(bracket: LaurentPoly, colour: u16, writhe: i64) -> Result<LaurentPoly, QuantumError> {
    let framed = bracket.mul(&prefactor(colour, writhe));
    framed
        .exact_div(&quantum_int(colour as i64))
        .map_err(QuantumError::NonDivisible)
}

/// Direct Reshetikhin-Turaev evaluation: close the braid through
/// `coev_left^{⊗n}` below and `ev_right^{⊗n}` above, the braid acting on the
/// first `n` (module) factors and the identity on the `n` dual factors.
pub fn jones_rt(b: &BraidWord, colour: u16) -> Result<LaurentPoly, QuantumError> {
    if colour < 2 {
        return Err(QuantumError::BadColour);
    }
    if !b.is_knot() {
        return Err(QuantumError::NotAKnot);
    }
    let n = b.strands();
    let start = coev_nested(n, colour);
    let acted = braid_rep_action(&b.embed_union_trivial(), colour, &start);
    let bracket = ev_nested(n, colour, &acted);
    finish(bracket, colour, b.writhe())
}

/// Highest-weight-space route: the normalized coevaluation lands in
/// `V_N^{⊗2n}`, the braid acts there, the normalized evaluation closes up.
pub fn jones_hw(b: &BraidWord, colour: u16) -> Result<LaurentPoly, QuantumError> {
    if colour < 2 {
        return Err(QuantumError::BadColour);
    }
    if !b.is_knot() {
        return Err(QuantumError::NotAKnot);
    }
    let n = b.strands();
    let start = coev_normalized(n, colour);
    let acted = braid_rep_action(&b.embed_union_trivial(), colour, &start);
    let bracket = ev_normalized(n, colour, &acted);
    finish(bracket, colour, b.writhe())
}
