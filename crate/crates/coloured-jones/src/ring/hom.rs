//! Specialisation homomorphisms between the coefficient rings.
//!
//! With `λ = N - 1` the maps are:
//!
//! * `ψ_λ : Z[x^±,d^±] -> Z[q^±]`, `x -> q^{2λ}`, `d -> -q^{-2}`
//! * `η_λ : Z[q^±,s^±] -> Z[q^±]`, `s -> q^λ`
//! * `α_λ = incl ∘ ψ_λ` (same images, target viewed inside `Q(q)`)
//! * `ξ   : Z[x^±,d^±] -> Z[s^±,q^±]`, `x -> s^2`, `d -> -q^{-2}`
//! * `γ   = incl ∘ ξ` (target viewed inside `Q(s,q)`)
//! * `δ_λ : Q(s,q) -> Q(q)`, `s -> q^λ`
//!
//! They satisfy the commuting squares `δ_λ ∘ γ = α_λ` and `η_λ ∘ ξ = ψ_λ`,
//! which the test suite checks on random inputs. Numeric evaluation of a
//! one-variable polynomial at an integer point (exact rationals) is provided
//! separately by [`eval_q`].

use super::{LaurentPoly, RationalFunc, RingError, Var, QR, QS};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A named specialisation homomorphism (exact, variable-to-unit-monomial).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RingHom {
    /// `ψ_λ : x -> q^{2λ}, d -> -q^{-2}`.
    PsiLambda(i64),
    /// `η_λ : s -> q^λ` on `Z[q^±, s^±]`.
    EtaLambda(i64),
    /// `α_λ = inclusion ∘ ψ_λ` into `Q(q)`.
    AlphaLambda(i64),
    /// `ξ : x -> s^2, d -> -q^{-2}` into `Z[s^±, q^±]`.
    Xi,
    /// `γ = inclusion ∘ ξ` into `Q(s,q)`.
    Gamma,
    /// `δ_λ : s -> q^λ` on fractions over `Q(s,q)`.
    DeltaLambda(i64),
}

impl RingHom {
    pub fn name(&self) -> String {
        match self {
            RingHom::PsiLambda(l) => format!("psi_{l}"),
            RingHom::EtaLambda(l) => format!("eta_{l}"),
            RingHom::AlphaLambda(l) => format!("alpha_{l}"),
            RingHom::Xi => "xi".into(),
            RingHom::Gamma => "gamma".into(),
            RingHom::DeltaLambda(l) => format!("delta_{l}"),
        }
    }

    /// Variables accepted in the source ring.
    pub fn source_vars(&self) -> &'static [Var] {
        match self {
            RingHom::PsiLambda(_) | RingHom::AlphaLambda(_) | RingHom::Xi | RingHom::Gamma => {
                &[Var::X, Var::D]
            }
            RingHom::EtaLambda(_) | RingHom::DeltaLambda(_) => &[Var::Q, Var::S],
        }
    }

    /// Variables of the target ring.
    pub fn target_vars(&self) -> &'static [Var] {
        match self {
            RingHom::Xi | RingHom::Gamma => QS,
            _ => QR,
        }
    }

    /// Image of a source variable; all images are unit monomials, so
    /// negative exponents specialize exactly.
    pub fn image_of(&self, v: Var) -> Option<LaurentPoly> {
        let t = self.target_vars();
        match (self, v) {
            (RingHom::PsiLambda(l) | RingHom::AlphaLambda(l), Var::X) => {
                Some(LaurentPoly::var_pow(t, Var::Q, 2 * l))
            }
            (RingHom::PsiLambda(_) | RingHom::AlphaLambda(_), Var::D) => {
                Some(LaurentPoly::var_pow(t, Var::Q, -2).neg())
            }
            (RingHom::Xi | RingHom::Gamma, Var::X) => Some(LaurentPoly::var_pow(t, Var::S, 2)),
            (RingHom::Xi | RingHom::Gamma, Var::D) => {
                Some(LaurentPoly::var_pow(t, Var::Q, -2).neg())
            }
            (RingHom::EtaLambda(l) | RingHom::DeltaLambda(l), Var::S) => {
                Some(LaurentPoly::var_pow(t, Var::Q, *l))
            }
            (RingHom::EtaLambda(_) | RingHom::DeltaLambda(_), Var::Q) => {
                Some(LaurentPoly::variable(t, Var::Q))
            }
            _ => None,
        }
    }
}

/// Apply a specialisation to a Laurent polynomial. The input's variables must
/// all lie in the hom's source ring.
pub fn apply_hom(hom: &RingHom, p: &LaurentPoly) -> Result<LaurentPoly, RingError> {
    let images: Vec<LaurentPoly> = p
        .vars()
        .iter()
        .map(|&v| {
            hom.image_of(v).ok_or_else(|| {
                RingError::VariableMismatch(p.vars().to_vec(), hom.source_vars().to_vec())
            })
        })
        .collect::<Result<_, _>>()?;
    let target = hom.target_vars();
    let mut out = LaurentPoly::zero(target);
    for (exps, coeff) in p.terms() {
        let mut term = LaurentPoly::constant(target, coeff.clone());
        for (img, &e) in images.iter().zip(exps.iter()) {
            let factor = if e >= 0 {
                img.pow(e as u32)
            } else {
                img.invert_unit()
                    .expect("specialisation images are unit monomials")
                    .pow((-e) as u32)
            };
            term = term.mul(&factor);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Apply a specialisation to a fraction; errors if the denominator dies.
pub fn apply_hom_rational(hom: &RingHom, r: &RationalFunc) -> Result<RationalFunc, RingError> {
    let num = apply_hom(hom, r.num())?;
    let den = apply_hom(hom, r.den())?;
    if den.is_zero() {
        return Err(RingError::ZeroDenominator);
    }
    RationalFunc::new(num, den)
}

/// Exact numeric evaluation of a one-variable Laurent polynomial at a nonzero
/// integer point (the role the evaluation map `q -> 𝐪` plays, kept exact by
/// valuing in `Q` instead of `C`).
pub fn eval_q(p: &LaurentPoly, value: i64) -> Result<BigRational, RingError> {
    if value == 0 {
        return Err(RingError::DivisionByZero);
    }
    if p.vars().len() > 1 {
        return Err(RingError::OutOfRange(
            "numeric evaluation expects a one-variable polynomial".into(),
        ));
    }
    let v = BigRational::from(BigInt::from(value));
    let vinv = v.recip();
    let mut acc = BigRational::zero();
    for (exps, coeff) in p.terms() {
        let e = exps.first().copied().unwrap_or(0);
        let mut term = BigRational::from(coeff.clone());
        let base = if e >= 0 { &v } else { &vinv };
        for _ in 0..e.unsigned_abs() {
            term *= base;
        }
        acc += term;
    }
    let _ = BigRational::one();
    Ok(acc)
}
