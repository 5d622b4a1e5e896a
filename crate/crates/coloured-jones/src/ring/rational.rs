//! Reduced fractions of Laurent polynomials: the fields `Q(q)` and `Q(s,q)`.

use super::gcd::laurent_gcd;
use super::{LaurentPoly, RingError, Var};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use std::fmt;

/// A fraction of Laurent polynomials kept in canonical reduced form:
///
/// * numerator and denominator share no polynomial factor, no integer
///   content and no monomial factor;
/// * the denominator has componentwise minimal exponent 0, and when it is a
///   single term the monomial part is folded into the numerator (so a
///   denominator that is a single term is a positive integer constant);
/// * the denominator's lowest-order coefficient is positive.
///
/// Canonical form makes equality structural and hashing exact.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if num.vars() != den.vars() {
            return Err(RingError::VariableMismatch(
                num.vars().to_vec(),
                den.vars().to_vec(),
            ));
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.vars());
        RationalFunc { num: p, den }
    }

    pub fn zero(vars: &[Var]) -> Self {
        Self::from_poly(LaurentPoly::zero(vars))
    }

    pub fn one(vars: &[Var]) -> Self {
        Self::from_poly(LaurentPoly::one(vars))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn vars(&self) -> &[Var] {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The canonical representative of `num/den`.
    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        let vars = num.vars().to_vec();
        if num.is_zero() {
            return Self::zero(&vars);
        }
        // Strip monomial parts; remember the net shift for the numerator.
        let nmin = num.min_exponents().unwrap();
        let dmin = den.min_exponents().unwrap();
        let shift: Vec<i64> = nmin.iter().zip(dmin.iter()).map(|(a, b)| a - b).collect();
        let mut num = num.mul_monomial(&nmin.iter().map(|x| -x).collect::<Vec<_>>(), &BigInt::one());
        let mut den = den.mul_monomial(&dmin.iter().map(|x| -x).collect::<Vec<_>>(), &BigInt::one());
        // Integer content.
        let g = num.content().gcd(&den.content());
        if !g.is_one() {
            num = num.div_content(&g);
            den = den.div_content(&g);
        }
        // Polynomial gcd.
        let g = laurent_gcd(&num, &den);
        if !g.is_one() {
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
        }
        // Fold a unit-monomial denominator into the numerator.
        if den.term_count() == 1 {
            let dmin2 = den.min_exponents().unwrap();
            num = num.mul_monomial(&dmin2.iter().map(|x| -x).collect::<Vec<_>>(), &BigInt::one());
            den = den.mul_monomial(&dmin2.iter().map(|x| -x).collect::<Vec<_>>(), &BigInt::one());
        }
        // Sign normalization: lowest-order denominator coefficient positive.
        let lowest_negative = den
            .terms()
            .next()
            .map(|(_, c)| c < &BigInt::from(0))
            .unwrap_or(false);
        if lowest_negative {
            num = num.neg();
            den = den.neg();
        }
        num = num.mul_monomial(&shift, &BigInt::one());
        RationalFunc { num, den }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&other.num));
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::reduced(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.mul(p));
        }
        Self::reduced(self.num.mul(p), self.den.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, RingError> {
        if other.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::reduced(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn div_poly(&self, p: &LaurentPoly) -> Result<Self, RingError> {
        if p.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::reduced(self.num.clone(), self.den.mul(p)))
    }

    /// Sesquilinear conjugation `v -> v^{-1}` on every variable.
    pub fn bar(&self) -> Self {
        Self::reduced(self.num.bar(), self.den.bar())
    }

    /// The underlying Laurent polynomial when the fraction clears, i.e. the
    /// canonical denominator is exactly 1.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    /// Exact equality via cross-multiplication (used by tests as an oracle
    /// against the canonical-form structural equality).
    pub fn eq_cross(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
