//! Exact Laurent-polynomial and rational-function arithmetic.
//!
//! Everything downstream computes in one of four rings and their fraction
//! fields, all with arbitrary-precision integer coefficients:
//!
//! * `Z[q^±1]` — coloured Jones values and specialized representations,
//! * `Z[q^±1, s^±1]` — the generic Verma module side (`s` is the weight),
//! * `Z[x^±1, d^±1]` — the local-system side of the intersection pairing,
//! * `Z[d^±1]` — diagonal pairing polynomials.
//!
//! [`LaurentPoly`] stores a sparse exponent-tuple map; exponents may be
//! negative, coefficients are `BigInt`, zero coefficients are never kept.
//! [`RationalFunc`] keeps fractions in a canonical reduced form so equality
//! is structural. [`RingHom`] implements the specialisation homomorphisms
//! between the rings together with their commuting-square identities.

mod gcd;
mod hom;
mod qint;
mod rational;

pub use hom::{apply_hom, apply_hom_rational, eval_q, RingHom};
pub use qint::{quantum_binomial, quantum_factorial, quantum_int};
pub use rational::RationalFunc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Symbolic variable names available to [`LaurentPoly`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Q,
    S,
    X,
    D,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::S => "s",
            Var::X => "x",
            Var::D => "d",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

pub type VarSet = SmallVec<[Var; 2]>;
pub type Exponents = SmallVec<[i64; 2]>;

/// Errors raised by exact ring arithmetic.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    /// Exact division was requested but the divisor does not divide the
    /// dividend in the Laurent ring. Upstream this always signals a broken
    /// invariant (for instance a failed `[N]_q` divisibility).
    #[error("exact division failed: divisor does not divide dividend")]
    NonDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different Laurent rings: {0:?} vs {1:?}")]
    VariableMismatch(Vec<Var>, Vec<Var>),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("denominator specializes to zero")]
    ZeroDenominator,
}

/// Sparse Laurent polynomial over `Z` in an ordered set of named variables.
///
/// Invariants: the variable list is sorted and duplicate-free, every stored
/// coefficient is nonzero, and each exponent tuple has exactly one entry per
/// variable. Terms are kept in a `BTreeMap`, so iteration (and therefore
/// rendering) is deterministic: ascending lexicographic exponent order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<Exponents, BigInt>,
}

fn check_vars(vars: &[Var]) -> VarSet {
    let set: VarSet = vars.iter().copied().collect();
    assert!(
        set.windows(2).all(|w| w[0] < w[1]),
        "variable list must be sorted and distinct: {vars:?}"
    );
    set
}

impl LaurentPoly {
    pub fn zero(vars: &[Var]) -> Self {
        LaurentPoly {
            vars: check_vars(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &[Var]) -> Self {
        Self::int(vars, 1)
    }

    pub fn int(vars: &[Var], value: i64) -> Self {
        Self::constant(vars, BigInt::from(value))
    }

    pub fn constant(vars: &[Var], value: BigInt) -> Self {
        let mut p = Self::zero(vars);
        if !value.is_zero() {
            let exps: Exponents = vars.iter().map(|_| 0).collect();
            p.terms.insert(exps, value);
        }
        p
    }

    /// The monomial `coeff * prod v_i^{exps_i}`.
    pub fn monomial(vars: &[Var], exps: &[i64], coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        let coeff = coeff.into();
        assert_eq!(exps.len(), p.vars.len(), "one exponent per variable");
        if !coeff.is_zero() {
            p.terms.insert(exps.iter().copied().collect(), coeff);
        }
        p
    }

    /// The variable `v` as a polynomial (`v` must belong to the ring).
    pub fn variable(vars: &[Var], v: Var) -> Self {
        let set = check_vars(vars);
        let pos = set
            .iter()
            .position(|&w| w == v)
            .expect("variable not in ring");
        let exps: Vec<i64> = set
            .iter()
            .enumerate()
            .map(|(i, _)| if i == pos { 1 } else { 0 })
            .collect();
        Self::monomial(vars, &exps, 1)
    }

    /// `v^k` for `k` of either sign.
    pub fn var_pow(vars: &[Var], v: Var, k: i64) -> Self {
        let set = check_vars(vars);
        let pos = set
            .iter()
            .position(|&w| w == v)
            .expect("variable not in ring");
        let exps: Vec<i64> = set
            .iter()
            .enumerate()
            .map(|(i, _)| if i == pos { k } else { 0 })
            .collect();
        Self::monomial(vars, &exps, 1)
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i64]) -> BigInt {
        self.terms
            .get(exps as &[i64])
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn same_ring(&self, other: &Self) -> Result<(), RingError> {
        if self.vars != other.vars {
            return Err(RingError::VariableMismatch(
                self.vars.to_vec(),
                other.vars.to_vec(),
            ));
        }
        Ok(())
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_ring(other).expect("add: variable mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_ring(other).expect("sub: variable mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_ring(other).expect("mul: variable mismatch");
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Exponents = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn mul_int(&self, k: i64) -> Self {
        self.mul_bigint(&BigInt::from(k))
    }

    pub fn mul_bigint(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(&self.vars);
        if k.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c * k);
        }
        out
    }

    /// Multiply by the monomial `coeff * prod v^exps`.
    pub fn mul_monomial(&self, exps: &[i64], coeff: &BigInt) -> Self {
        let mut out = Self::zero(&self.vars);
        if coeff.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            let shifted: Exponents = e.iter().zip(exps.iter()).map(|(a, b)| a + b).collect();
            out.terms.insert(shifted, c * coeff);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The sesquilinear conjugation: every variable `v` is replaced by
    /// `v^{-1}`. An involutive ring automorphism.
    pub fn bar(&self) -> Self {
        self.scale_exponents(-1)
    }

    /// The ring endomorphism `v -> v^k` applied to every variable (`k != 0`).
    pub fn scale_exponents(&self, k: i64) -> Self {
        assert!(k != 0, "exponent scale must be nonzero");
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let exps: Exponents = e.iter().map(|x| x * k).collect();
            out.terms.insert(exps, c.clone());
        }
        out
    }

    /// Componentwise minimum exponent over all terms (`None` for zero).
    pub fn min_exponents(&self) -> Option<Exponents> {
        let mut it = self.terms.keys();
        let mut acc = it.next()?.clone();
        for e in it {
            for (a, b) in acc.iter_mut().zip(e.iter()) {
                if b < a {
                    *a = *b;
                }
            }
        }
        Some(acc)
    }

    /// Positive gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.terms.values() {
            acc = acc.gcd(c);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    /// Exact division by an integer known to divide every coefficient.
    pub(crate) fn div_content(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            debug_assert!(r.is_zero());
            out.terms.insert(e.clone(), q);
        }
        out
    }

    /// If the polynomial is a single term with coefficient `±1`, return the
    /// exponent tuple and the sign.
    pub fn as_unit_monomial(&self) -> Option<(Exponents, i8)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if c.is_one() {
            Some((e.clone(), 1))
        } else if (-c).is_one() {
            Some((e.clone(), -1))
        } else {
            None
        }
    }

    /// Multiplicative inverse, defined exactly for unit monomials `±v^e`.
    pub fn invert_unit(&self) -> Option<Self> {
        let (e, sign) = self.as_unit_monomial()?;
        let inv: Vec<i64> = e.iter().map(|x| -x).collect();
        Some(Self::monomial(&self.vars, &inv, sign as i64))
    }

    /// Exact division in the Laurent ring. `Err(NonDivisible)` when `divisor`
    /// does not divide `self`; division by zero is also an error.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, RingError> {
        self.same_ring(divisor)?;
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        // Shift both operands into the ordinary polynomial ring (monomials
        // are units down here), divide there, and shift the quotient back.
        let a_min = self.min_exponents().unwrap();
        let b_min = divisor.min_exponents().unwrap();
        let a = self.shift(&a_min, -1);
        let b = divisor.shift(&b_min, -1);
        let mut rem = a;
        let mut quot = Self::zero(&self.vars);
        let (lead_b, coef_b) = b.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        while !rem.is_zero() {
            let (lead_r, coef_r) = rem
                .terms
                .iter()
                .next_back()
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            let mut t: Exponents = Exponents::new();
            for (x, y) in lead_r.iter().zip(lead_b.iter()) {
                let d = x - y;
                if d < 0 {
                    return Err(RingError::NonDivisible);
                }
                t.push(d);
            }
            let (c, r) = coef_r.div_rem(&coef_b);
            if !r.is_zero() {
                return Err(RingError::NonDivisible);
            }
            quot.add_term(t.clone(), c.clone());
            rem = rem.sub(&b.mul_monomial(&t, &c));
        }
        let back: Vec<i64> = a_min.iter().zip(b_min.iter()).map(|(a, b)| a - b).collect();
        Ok(quot.mul_monomial(&back, &BigInt::one()))
    }

    /// Shift exponents by `direction * offsets` (componentwise).
    fn shift(&self, offsets: &[i64], direction: i64) -> Self {
        let exps: Vec<i64> = offsets.iter().map(|x| x * direction).collect();
        self.mul_monomial(&exps, &BigInt::one())
    }

    /// Reinterpret in a larger variable set (new variables get exponent 0).
    pub fn widen(&self, vars: &[Var]) -> Self {
        let target = check_vars(vars);
        let positions: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|w| w == v)
                    .expect("widen: target ring must contain all variables")
            })
            .collect();
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            let mut exps: Exponents = target.iter().map(|_| 0).collect();
            for (i, &p) in positions.iter().enumerate() {
                exps[p] = e[i];
            }
            out.terms.insert(exps, c.clone());
        }
        out
    }

    /// Render the JSON form: a list of `[exponent_tuple, coefficient_string]`
    /// pairs in ascending exponent order.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                serde_json::json!([e.iter().copied().collect::<Vec<i64>>(), c.to_string()])
            })
            .collect();
        serde_json::Value::Array(items)
    }

    pub(crate) fn from_terms(vars: VarSet, terms: BTreeMap<Exponents, BigInt>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        LaurentPoly { vars, terms }
    }
}

impl fmt::Display for LaurentPoly {
    /// Deterministic textual form, ascending exponent order, e.g.
    /// `-q^-2 + 1 + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exps, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            let abs = coeff.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut var_parts: Vec<String> = Vec::new();
            for (v, &e) in self.vars.iter().zip(exps.iter()) {
                if e == 1 {
                    var_parts.push(v.symbol().to_string());
                } else if e != 0 {
                    var_parts.push(format!("{}^{}", v.symbol(), e));
                }
            }
            if var_parts.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&var_parts.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, var_parts.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Ring constants used across the crate.
pub const QR: &[Var] = &[Var::Q];
pub const QS: &[Var] = &[Var::Q, Var::S];
pub const XD: &[Var] = &[Var::X, Var::D];
pub const DR: &[Var] = &[Var::D];

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> LaurentPoly {
        LaurentPoly::variable(QR, Var::Q)
    }

    fn qp(k: i64) -> LaurentPoly {
        LaurentPoly::var_pow(QR, Var::Q, k)
    }

    #[test]
    fn difference_of_squares() {
        let a = q().add(&LaurentPoly::one(QR));
        let b = q().sub(&LaurentPoly::one(QR));
        let expect = qp(2).sub(&LaurentPoly::one(QR));
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn exact_div_quantum_two() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let num = qp(2).sub(&qp(-2));
        let den = q().sub(&qp(-1));
        let quot = num.exact_div(&den).unwrap();
        assert_eq!(quot, q().add(&qp(-1)));
    }

    #[test]
    fn exact_div_reports_failure() {
        let num = q().add(&LaurentPoly::one(QR));
        let den = q().sub(&LaurentPoly::one(QR));
        assert_eq!(num.exact_div(&den), Err(RingError::NonDivisible));
    }

    #[test]
    fn exact_div_two_vars() {
        let qs = |eq: i64, es: i64, c: i64| LaurentPoly::monomial(QS, &[eq, es], c);
        // (q s^-1 + 1)(s - q^2) / (s - q^2)
        let f = qs(1, -1, 1).add(&LaurentPoly::one(QS));
        let g = qs(0, 1, 1).sub(&qs(2, 0, 1));
        let prod = f.mul(&g);
        assert_eq!(prod.exact_div(&g).unwrap(), f);
        assert_eq!(prod.exact_div(&f).unwrap(), g);
        assert!(LaurentPoly::one(QS).exact_div(&g).is_err());
    }

    #[test]
    fn bar_examples() {
        // q^2 + 3 q^-1  ->  q^-2 + 3 q
        let p = qp(2).add(&qp(-1).mul_int(3));
        let expect = qp(-2).add(&q().mul_int(3));
        assert_eq!(p.bar(), expect);
        assert_eq!(LaurentPoly::one(QR).bar(), LaurentPoly::one(QR));
        // x d^-1 -> x^-1 d
        let xd = LaurentPoly::monomial(XD, &[1, -1], 1);
        assert_eq!(xd.bar(), LaurentPoly::monomial(XD, &[-1, 1], 1));
    }

    #[test]
    fn display_is_deterministic_ascending() {
        let p = qp(2).sub(&qp(-2)).add(&LaurentPoly::one(QR));
        assert_eq!(p.to_string(), "-q^-2 + 1 + q^2");
        assert_eq!(LaurentPoly::zero(QR).to_string(), "0");
        let m = LaurentPoly::monomial(QS, &[2, -1], -3);
        assert_eq!(m.to_string(), "-3*q^2*s^-1");
    }

    #[test]
    fn json_form() {
        let p = qp(2).sub(&qp(-2));
        let v = p.to_json();
        assert_eq!(v, serde_json::json!([[[-2], "-1"], [[2], "1"]]));
    }

    prop_compose! {
        fn arb_poly(vars: &'static [Var])
                   (terms in prop::collection::vec(
                        (prop::collection::vec(-4i64..=4, vars.len()), -9i64..=9), 0..6))
                   -> LaurentPoly {
            let mut p = LaurentPoly::zero(vars);
            for (e, c) in terms {
                p.add_term(e.into_iter().collect(), BigInt::from(c));
            }
            p
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(QS), b in arb_poly(QS), c in arb_poly(QS)) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn bar_is_involutive_automorphism(a in arb_poly(XD), b in arb_poly(XD)) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!(a.mul(&b).bar(), a.bar().mul(&b.bar()));
        }

        #[test]
        fn exact_div_recovers_factor(a in arb_poly(QS), b in arb_poly(QS)) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b);
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }
    }
}
