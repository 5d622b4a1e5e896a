//! The intersection-pairing model of the invariant.
//!
//! Multifork and barcode classes are coefficient vectors over the partition
//! set `E_{2n, m}` with `m = n(N-1)`. The graded intersection pairing is
//! diagonal in these bases with diagonal entries the pairing polynomials
//!
//! ```text
//! p_e = prod_i p_(e_i),     p_(c) = Σ_{σ ∈ S_c} d^{inv(σ)}   (the Gaussian factorial [c]_d!)
//! ```
//!
//! The winding exponent rule `inv(σ)` is a provisional choice validated two
//! ways: by the grid-winding oracle in [`crate::oracle`] (explicit loop
//! classes in the configuration-space model, parts up to 3) and by the
//! pairing-robustness property — replacing every `p_e` by an arbitrary
//! nonzero polynomial leaves the final invariant unchanged, because the dual
//! class divides by the same `p_e` the pairing later multiplies.
//!
//! The braid acts on the multifork side through the Lawrence matrices of
//! [`crate::hwspace`]; the first class is the multifork expression of the
//! normalized coevaluation, the second is the intersection dual of the
//! normalized evaluation. The pairing value, corrected by the framing
//! monomial and divided exactly by `[N]_q`, is the coloured Jones
//! polynomial. Everything runs over `Q(q)`; the two-variable route runs over
//! `Q(s,q)` and is specialized by `s -> q^{N-1}` only at the very end.

use crate::braid::BraidWord;
use crate::hwspace::{dim_highest_weight, hw_basis, lawrence_action, HwError, Partition};
use crate::quantum::{
    coev_normalized, coev_normalized_generic, ev_normalized, ev_normalized_generic, ModuleSpec,
};
use crate::ring::{
    apply_hom, apply_hom_rational, quantum_int, LaurentPoly, RationalFunc, RingError, RingHom,
    Var, DR,
};
use std::sync::Arc;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("the closure of the braid is not a knot")]
    NotAKnot,
    #[error("colour must be at least 2")]
    BadColour,
    #[error("pairing result does not clear to Z[q^±]")]
    NonIntegral,
    #[error("dimension {dim} exceeds the budget cap {cap}")]
    BudgetExceeded { dim: u128, cap: u64 },
    #[error("normalized coevaluation is not in the highest-weight span")]
    NotInSpan,
    #[error(transparent)]
    Hw(#[from] HwError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Which side of the pairing a class lives on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Multifork,
    Barcode,
}

/// A homology class: a coefficient vector over `E_{strands, weight}`.
#[derive(Clone, Debug)]
pub struct HomClass {
    pub side: Side,
    pub strands: usize,
    pub weight: u32,
    pub partitions: Arc<Vec<Partition>>,
    pub coeffs: Vec<RationalFunc>,
}

impl HomClass {
    pub fn coefficient(&self, e: &Partition) -> Option<&RationalFunc> {
        self.partitions
            .iter()
            .position(|p| p == e)
            .map(|i| &self.coeffs[i])
    }
}

/// `[c]_d! = prod_{k=1}^{c} (1 + d + ... + d^{k-1})`, the single-column
/// pairing polynomial: one term `d^{inv(σ)}` per grid permutation.
fn gauss_factorial(c: u16) -> LaurentPoly {
    let mut acc = LaurentPoly::one(DR);
    for k in 1..=c as i64 {
        let mut block = LaurentPoly::zero(DR);
        for e in 0..k {
            block = block.add(&LaurentPoly::var_pow(DR, Var::D, e));
        }
        acc = acc.mul(&block);
    }
    acc
}

/// The diagonal pairing polynomial `p_e` in the variable `d`.
pub fn pairing_polynomial(e: &Partition) -> LaurentPoly {
    let mut acc = LaurentPoly::one(DR);
    for &part in e.parts() {
        acc = acc.mul(&gauss_factorial(part));
    }
    acc
}

/// The diagonal matrix of the graded intersection pairing over a partition
/// set: `<F_e, D_f> = p_e δ_{e,f}`, with the generic entries in `d` and
/// their images under any specialisation.
#[derive(Clone, Debug)]
pub struct PairingMatrix {
    pub strands: usize,
    pub weight: u32,
    partitions: Arc<Vec<Partition>>,
    diagonal: Vec<LaurentPoly>,
}

impl PairingMatrix {
    pub fn new(strands: usize, weight: u32) -> Self {
        let partitions = Arc::new(crate::hwspace::enumerate_partitions(strands, weight));
        let diagonal = partitions.iter().map(pairing_polynomial).collect();
        PairingMatrix {
            strands,
            weight,
            partitions,
            diagonal,
        }
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn diagonal(&self, e: &Partition) -> Option<&LaurentPoly> {
        self.partitions
            .iter()
            .position(|p| p == e)
            .map(|i| &self.diagonal[i])
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.partitions.iter().zip(self.diagonal.iter())
    }

    /// All diagonal entries pushed through a specialisation.
    pub fn specialize(&self, hom: &RingHom) -> Result<Vec<LaurentPoly>, RingError> {
        self.diagonal.iter().map(|p| apply_hom(hom, p)).collect()
    }
}

/// The sesquilinear pairing `Σ_e F_e · bar(G_e) · spec(p_e)` (bar acts on
/// the barcode argument).
pub fn pair(f: &HomClass, g: &HomClass, spec: &RingHom) -> Result<RationalFunc, HomError> {
    assert_eq!(f.side, Side::Multifork);
    assert_eq!(g.side, Side::Barcode);
    assert_eq!(f.strands, g.strands);
    assert_eq!(f.weight, g.weight);
    let vars = spec.target_vars();
    let mut acc = RationalFunc::zero(vars);
    for ((e, fe), ge) in f.partitions.iter().zip(&f.coeffs).zip(&g.coeffs) {
        if fe.is_zero() || ge.is_zero() {
            continue;
        }
        let pe = apply_hom(spec, &pairing_polynomial(e))?;
        acc = acc.add(&fe.mul(&ge.bar()).mul_poly(&pe));
    }
    Ok(acc)
}

/// Dimension guard: the Lawrence representation at `(2n, n(N-1))` has rank
/// `binomial(2n + n(N-1) - 2, n(N-1))`, which grows quickly.
pub fn check_budget(strands: usize, weight: u32, cap: u64) -> Result<(), HomError> {
    let dim = dim_highest_weight(strands, weight);
    if dim > cap as u128 {
        return Err(HomError::BudgetExceeded { dim, cap });
    }
    Ok(())
}

/// The default dimension cap; the environment variable `JONES_BUDGET`
/// overrides it.
pub fn default_budget() -> u64 {
    std::env::var("JONES_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(3000)
}

fn knot_params(b: &BraidWord, colour: u16) -> Result<(usize, u32), HomError> {
    if colour < 2 {
        return Err(HomError::BadColour);
    }
    if !b.is_knot() {
        return Err(HomError::NotAKnot);
    }
    let n = b.strands();
    Ok((2 * n, n as u32 * (colour as u32 - 1)))
}

/// The multifork class of the normalized coevaluation: its coordinates in
/// the `φ`-basis of the highest-weight space at `(2n, n(N-1))`, over `Q(q)`.
pub fn class_f0(n: usize, colour: u16) -> Result<HomClass, HomError> {
    let strands = 2 * n;
    let weight = n as u32 * (colour as u32 - 1);
    let basis = hw_basis(strands, weight, ModuleSpec::Colour(colour));
    let v = coev_normalized(n, colour);
    let coords = basis.to_coords(&v).map_err(|_| HomError::NotInSpan)?;
    Ok(HomClass {
        side: Side::Multifork,
        strands,
        weight,
        partitions: Arc::new(basis.partitions.clone()),
        coeffs: coords.into_iter().map(RationalFunc::from_poly).collect(),
    })
}

/// The barcode class dual to the normalized evaluation: coordinate `e` is
/// `bar(Ev(φ_e) / spec_p(e))`, so that pairing any multifork class against
/// it reproduces the evaluation.
fn class_g_with(
    n: usize,
    colour: u16,
    spec_p: &dyn Fn(&Partition) -> LaurentPoly,
) -> Result<HomClass, HomError> {
    let strands = 2 * n;
    let weight = n as u32 * (colour as u32 - 1);
    let basis = hw_basis(strands, weight, ModuleSpec::Colour(colour));
    let mut coeffs = Vec::with_capacity(basis.dim());
    for (i, e) in basis.partitions.iter().enumerate() {
        let value = ev_normalized(n, colour, basis.vector(i));
        let pe = spec_p(e);
        assert!(
            !pe.is_zero(),
            "specialized pairing polynomial must be nonzero at {e}"
        );
        let coord = RationalFunc::from_poly(value).div_poly(&pe)?;
        coeffs.push(coord.bar());
    }
    Ok(HomClass {
        side: Side::Barcode,
        strands,
        weight,
        partitions: Arc::new(basis.partitions.clone()),
        coeffs,
    })
}

/// The barcode class with the true pairing polynomials specialized by
/// `α_{N-1}`.
pub fn class_g(n: usize, colour: u16) -> Result<HomClass, HomError> {
    let alpha = RingHom::AlphaLambda(colour as i64 - 1);
    class_g_with(n, colour, &|e| {
        apply_hom(&alpha, &pairing_polynomial(e)).expect("pairing polynomial lives in Z[d^±]")
    })
}

fn finish_rational(
    value: RationalFunc,
    colour: u16,
    writhe: i64,
) -> Result<LaurentPoly, HomError> {
    let prefactor = LaurentPoly::var_pow(&[Var::Q], Var::Q, -(colour as i64 - 1) * writhe);
    let framed = value.mul_poly(&prefactor);
    let bracket = framed.to_laurent().ok_or(HomError::NonIntegral)?;
    bracket
        .exact_div(&quantum_int(colour as i64))
        .map_err(|_| HomError::NonIntegral)
}

/// The homological route with an explicit pairing-polynomial specialisation
/// (the robustness tests feed random nonzero polynomials here).
pub fn jones_homological_with_pairing(
    b: &BraidWord,
    colour: u16,
    cap: u64,
    spec_p: &dyn Fn(&Partition) -> LaurentPoly,
) -> Result<LaurentPoly, HomError> {
    let (strands, weight) = knot_params(b, colour)?;
    check_budget(strands, weight, cap)?;
    let f0 = class_f0(b.strands(), colour)?;
    let g = class_g_with(b.strands(), colour, spec_p)?;
    // act on the multifork side with the Lawrence matrices of β ∪ I_n
    let coords: Vec<LaurentPoly> = f0
        .coeffs
        .iter()
        .map(|c| c.to_laurent().expect("multifork coordinates lie in Z[q^±]"))
        .collect();
    let acted = lawrence_action(
        &b.embed_union_trivial(),
        weight,
        ModuleSpec::Colour(colour),
        &coords,
    )?;
    let mut value = RationalFunc::zero(&[Var::Q]);
    for ((e, fe), ge) in f0.partitions.iter().zip(&acted).zip(&g.coeffs) {
        if fe.is_zero() || ge.is_zero() {
            continue;
        }
        let pe = spec_p(e);
        value = value.add(&ge.bar().mul_poly(&pe).mul_poly(fe));
    }
    finish_rational(value, colour, b.writhe())
}

/// The homological route: the graded intersection pairing of the braid-acted
/// multifork class against the dual barcode class.
pub fn jones_homological(b: &BraidWord, colour: u16) -> Result<LaurentPoly, HomError> {
    jones_homological_capped(b, colour, default_budget())
}

pub fn jones_homological_capped(
    b: &BraidWord,
    colour: u16,
    cap: u64,
) -> Result<LaurentPoly, HomError> {
    let alpha = RingHom::AlphaLambda(colour as i64 - 1);
    jones_homological_with_pairing(b, colour, cap, &|e| {
        apply_hom(&alpha, &pairing_polynomial(e)).expect("pairing polynomial lives in Z[d^±]")
    })
}

/// The two-variable lift of the multifork class over `Q(s,q)`.
pub fn class_f_global(n: usize, colour: u16) -> Result<HomClass, HomError> {
    let strands = 2 * n;
    let weight = n as u32 * (colour as u32 - 1);
    let basis = hw_basis(strands, weight, ModuleSpec::Generic);
    let v = coev_normalized_generic(n, colour);
    let coords = basis.to_coords(&v).map_err(|_| HomError::NotInSpan)?;
    Ok(HomClass {
        side: Side::Multifork,
        strands,
        weight,
        partitions: Arc::new(basis.partitions.clone()),
        coeffs: coords.into_iter().map(RationalFunc::from_poly).collect(),
    })
}

/// The two-variable lift of the barcode class over `Q(s,q)`; the pairing
/// polynomials are specialized by `γ` (which sends `d` to `-q^{-2}`).
pub fn class_g_global(n: usize, colour: u16) -> Result<HomClass, HomError> {
    let strands = 2 * n;
    let weight = n as u32 * (colour as u32 - 1);
    let basis = hw_basis(strands, weight, ModuleSpec::Generic);
    let mut coeffs = Vec::with_capacity(basis.dim());
    for (i, e) in basis.partitions.iter().enumerate() {
        let value = ev_normalized_generic(n, colour, basis.vector(i));
        let pe = apply_hom(&RingHom::Gamma, &pairing_polynomial(e))?;
        let coord = RationalFunc::from_poly(value).div_poly(&pe)?;
        coeffs.push(coord.bar());
    }
    Ok(HomClass {
        side: Side::Barcode,
        strands,
        weight,
        partitions: Arc::new(basis.partitions.clone()),
        coeffs,
    })
}

/// Specialize a two-variable class coordinate-wise with `δ_{N-1}`.
pub fn specialize_class(global: &HomClass, colour: u16) -> Result<HomClass, HomError> {
    let delta = RingHom::DeltaLambda(colour as i64 - 1);
    let coeffs = global
        .coeffs
        .iter()
        .map(|c| apply_hom_rational(&delta, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HomClass {
        side: global.side,
        strands: global.strands,
        weight: global.weight,
        partitions: global.partitions.clone(),
        coeffs,
    })
}

/// The globalised route: everything over `Q(s,q)` with the two-variable
/// classes and matrices, specialized by `δ_{N-1}` only after the pairing.
pub fn jones_global(b: &BraidWord, colour: u16) -> Result<LaurentPoly, HomError> {
    jones_global_capped(b, colour, default_budget())
}

pub fn jones_global_capped(b: &BraidWord, colour: u16, cap: u64) -> Result<LaurentPoly, HomError> {
    let (strands, weight) = knot_params(b, colour)?;
    check_budget(strands, weight, cap)?;
    let f = class_f_global(b.strands(), colour)?;
    let g = class_g_global(b.strands(), colour)?;
    let coords: Vec<LaurentPoly> = f
        .coeffs
        .iter()
        .map(|c| c.to_laurent().expect("lifted coordinates lie in Z[q^±,s^±]"))
        .collect();
    let acted = lawrence_action(&b.embed_union_trivial(), weight, ModuleSpec::Generic, &coords)?;
    let gamma = RingHom::Gamma;
    let mut value = RationalFunc::zero(gamma.target_vars());
    for ((e, fe), ge) in f.partitions.iter().zip(&acted).zip(&g.coeffs) {
        if fe.is_zero() || ge.is_zero() {
            continue;
        }
        let pe = apply_hom(&gamma, &pairing_polynomial(e))?;
        value = value.add(&ge.bar().mul_poly(&pe).mul_poly(fe));
    }
    let delta = RingHom::DeltaLambda(colour as i64 - 1);
    let specialized = apply_hom_rational(&delta, &value)?;
    finish_rational(specialized, colour, b.writhe())
}
