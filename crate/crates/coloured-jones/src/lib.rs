//! Coloured Jones polynomials of knots, computed exactly along independent routes.
//!
//! A knot is presented as the closure of a braid word. For a colour `N >= 2`
//! the N-th coloured Jones polynomial `J_N` (normalized so the unknot maps
//! to 1) is computed over `Z[q^±1]` by four routes that must agree:
//!
//! * [`quantum::jones_rt`] — direct Reshetikhin-Turaev evaluation with the
//!   R-matrix on the N-dimensional module and its dual,
//! * [`quantum::jones_hw`] — the normalized evaluation/coevaluation route
//!   through the highest-weight space of `V_N^{⊗2n}`,
//! * [`homological::jones_homological`] — the Lawrence-representation route:
//!   multifork/barcode coordinate vectors paired by the graded intersection
//!   form, with the braid acting through exact `d_{2n,m} × d_{2n,m}` matrices,
//! * [`homological::jones_global`] — the two-variable lift of the previous
//!   route over `Q(s,q)`, specialized at `s = q^{N-1}` only at the very end.
//!
//! All arithmetic is exact: Laurent polynomials with arbitrary-precision
//! integer coefficients and reduced fractions thereof. No floating point.

pub mod braid;
pub mod cli;
pub mod homological;
pub mod hwspace;
pub mod oracle;
pub mod quantum;
pub mod ring;
