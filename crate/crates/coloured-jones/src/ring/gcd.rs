//! Polynomial gcd over `Z` in any (small) number of variables.
//!
//! Used by [`super::RationalFunc`] to keep fractions reduced. The algorithm
//! is the classical primitive pseudo-remainder sequence, applied recursively:
//! a multivariate polynomial is a univariate polynomial in its last variable
//! whose coefficients are polynomials in the remaining ones.

use super::{Exponents, LaurentPoly, VarSet};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Dense recursive polynomial representation (nonnegative exponents only).
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) enum RPoly {
    Int(BigInt),
    /// Coefficients in ascending degree of the outermost variable; the last
    /// entry is nonzero unless the whole vector is empty (the zero poly).
    Poly(Vec<RPoly>),
}

impl RPoly {
    fn zero_like(&self) -> RPoly {
        match self {
            RPoly::Int(_) => RPoly::Int(BigInt::zero()),
            RPoly::Poly(_) => RPoly::Poly(Vec::new()),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            RPoly::Int(c) => c.is_zero(),
            RPoly::Poly(cs) => cs.is_empty(),
        }
    }

    fn trim(cs: &mut Vec<RPoly>) {
        while cs.last().is_some_and(RPoly::is_zero) {
            cs.pop();
        }
    }

    fn add(&self, other: &RPoly) -> RPoly {
        match (self, other) {
            (RPoly::Int(a), RPoly::Int(b)) => RPoly::Int(a + b),
            (RPoly::Poly(a), RPoly::Poly(b)) => {
                let mut out = a.clone();
                if b.len() > out.len() {
                    out.resize(b.len(), b[0].zero_like());
                }
                for (i, c) in b.iter().enumerate() {
                    out[i] = out[i].add(c);
                }
                Self::trim(&mut out);
                RPoly::Poly(out)
            }
            _ => panic!("mixed depth"),
        }
    }

    fn neg(&self) -> RPoly {
        match self {
            RPoly::Int(a) => RPoly::Int(-a),
            RPoly::Poly(a) => RPoly::Poly(a.iter().map(RPoly::neg).collect()),
        }
    }

    fn sub(&self, other: &RPoly) -> RPoly {
        self.add(&other.neg())
    }

    fn mul(&self, other: &RPoly) -> RPoly {
        match (self, other) {
            (RPoly::Int(a), RPoly::Int(b)) => RPoly::Int(a * b),
            (RPoly::Poly(a), RPoly::Poly(b)) => {
                if a.is_empty() || b.is_empty() {
                    return RPoly::Poly(Vec::new());
                }
                let zero = a[0].zero_like();
                let mut out = vec![zero; a.len() + b.len() - 1];
                for (i, ca) in a.iter().enumerate() {
                    for (j, cb) in b.iter().enumerate() {
                        out[i + j] = out[i + j].add(&ca.mul(cb));
                    }
                }
                Self::trim(&mut out);
                RPoly::Poly(out)
            }
            _ => panic!("mixed depth"),
        }
    }

    fn degree(&self) -> usize {
        match self {
            RPoly::Int(_) => 0,
            RPoly::Poly(cs) => cs.len().saturating_sub(1),
        }
    }

    fn leading(&self) -> RPoly {
        match self {
            RPoly::Int(_) => self.clone(),
            RPoly::Poly(cs) => cs.last().cloned().unwrap_or_else(|| RPoly::Poly(Vec::new())),
        }
    }

    /// Content: gcd of all coefficients one level down.
    fn content(&self) -> RPoly {
        match self {
            RPoly::Int(c) => RPoly::Int(c.abs()),
            RPoly::Poly(cs) => {
                let mut acc: Option<RPoly> = None;
                for c in cs {
                    acc = Some(match acc {
                        None => c.clone(),
                        Some(a) => gcd_rpoly(&a, c),
                    });
                }
                acc.unwrap_or(RPoly::Int(BigInt::zero()))
            }
        }
    }

    /// Exact division by a polynomial one level down (a "scalar").
    fn div_scalar(&self, s: &RPoly) -> RPoly {
        match self {
            RPoly::Int(_) => panic!("div_scalar at leaf"),
            RPoly::Poly(cs) => RPoly::Poly(cs.iter().map(|c| exact_div_rpoly(c, s)).collect()),
        }
    }

    /// Multiply every coefficient by a polynomial one level down.
    fn mul_scalar(&self, s: &RPoly) -> RPoly {
        match self {
            RPoly::Int(_) => panic!("mul_scalar at leaf"),
            RPoly::Poly(cs) => {
                let mut out: Vec<RPoly> = cs.iter().map(|c| c.mul(s)).collect();
                Self::trim(&mut out);
                RPoly::Poly(out)
            }
        }
    }

    /// Shift by `x^k` in the outermost variable.
    fn shift_up(&self, k: usize) -> RPoly {
        match self {
            RPoly::Int(_) => panic!("shift at leaf"),
            RPoly::Poly(cs) => {
                if cs.is_empty() {
                    return RPoly::Poly(Vec::new());
                }
                let zero = cs[0].zero_like();
                let mut out = vec![zero; k];
                out.extend(cs.iter().cloned());
                RPoly::Poly(out)
            }
        }
    }

    /// Sign of the iterated leading coefficient.
    fn lead_sign(&self) -> i8 {
        match self {
            RPoly::Int(c) => {
                if c.is_negative() {
                    -1
                } else if c.is_zero() {
                    0
                } else {
                    1
                }
            }
            RPoly::Poly(cs) => cs.last().map_or(0, RPoly::lead_sign),
        }
    }
}

/// Exact division, panicking on failure (callers guarantee divisibility).
fn exact_div_rpoly(a: &RPoly, b: &RPoly) -> RPoly {
    match (a, b) {
        (RPoly::Int(x), RPoly::Int(y)) => {
            let (q, r) = x.div_rem(y);
            assert!(r.is_zero(), "exact_div_rpoly: not divisible");
            RPoly::Int(q)
        }
        (RPoly::Poly(_), RPoly::Poly(_)) => {
            let mut rem = a.clone();
            let db = b.degree();
            let lb = b.leading();
            let mut quot_coeffs: BTreeMap<usize, RPoly> = BTreeMap::new();
            while !rem.is_zero() {
                let dr = rem.degree();
                assert!(dr >= db, "exact_div_rpoly: not divisible");
                let c = exact_div_rpoly(&rem.leading(), &lb);
                quot_coeffs.insert(dr - db, c.clone());
                let sub = b.mul_scalar(&c).shift_up(dr - db);
                rem = rem.sub(&sub);
                assert!(rem.degree() < dr || rem.is_zero(), "division must progress");
            }
            let deg = quot_coeffs.keys().next_back().copied().unwrap_or(0);
            let zero = match b {
                RPoly::Poly(cs) => cs[0].zero_like(),
                _ => unreachable!(),
            };
            let mut out = vec![zero; deg + 1];
            for (k, c) in quot_coeffs {
                out[k] = c;
            }
            RPoly::trim(&mut out);
            RPoly::Poly(out)
        }
        _ => panic!("mixed depth"),
    }
}

/// Content-stripped pseudo-remainder of `a` by `b` in the outermost
/// variable: the result is a unit multiple of the true pseudo-remainder,
/// which is all a primitive remainder sequence needs. Stripping the content
/// after every elimination step keeps the coefficients from compounding by
/// a factor of `lc(b)` per degree.
fn reduced_rem(a: &RPoly, b: &RPoly) -> RPoly {
    let db = b.degree();
    let lb = b.leading();
    let mut r = a.clone();
    while !r.is_zero() && r.degree() >= db {
        let dr = r.degree();
        let lr = r.leading();
        r = r.mul_scalar(&lb).sub(&b.mul_scalar(&lr).shift_up(dr - db));
        assert!(r.is_zero() || r.degree() < dr, "pseudo-division must progress");
        if !r.is_zero() {
            let c = r.content();
            r = r.div_scalar(&c);
        }
    }
    r
}

/// Gcd via primitive pseudo-remainder sequences, normalized so the iterated
/// leading coefficient is positive.
pub(crate) fn gcd_rpoly(a: &RPoly, b: &RPoly) -> RPoly {
    match (a, b) {
        (RPoly::Int(x), RPoly::Int(y)) => RPoly::Int(x.gcd(y)),
        (RPoly::Poly(_), RPoly::Poly(_)) => {
            if a.is_zero() {
                return positive(b.clone());
            }
            if b.is_zero() {
                return positive(a.clone());
            }
            let ca = a.content();
            let cb = b.content();
            let cg = gcd_rpoly(&ca, &cb);
            let mut f = a.div_scalar(&ca);
            let mut g = b.div_scalar(&cb);
            if f.degree() < g.degree() {
                std::mem::swap(&mut f, &mut g);
            }
            while !g.is_zero() {
                let r = reduced_rem(&f, &g);
                f = g;
                g = r;
            }
            positive(f.mul_scalar(&cg))
        }
        _ => panic!("mixed depth"),
    }
}

fn positive(p: RPoly) -> RPoly {
    if p.lead_sign() < 0 {
        p.neg()
    } else {
        p
    }
}

/// Convert a Laurent polynomial with nonnegative exponents into the recursive
/// dense form. Variable order: the last variable of `vars` is outermost.
fn to_rpoly(p: &LaurentPoly, depth: usize) -> RPoly {
    fn build(terms: &[(Exponents, BigInt)], depth: usize) -> RPoly {
        if depth == 0 {
            debug_assert!(terms.len() <= 1);
            return RPoly::Int(terms.first().map(|(_, c)| c.clone()).unwrap_or_else(BigInt::zero));
        }
        // Split terms by exponent of the outermost variable (index depth-1).
        let mut buckets: BTreeMap<usize, Vec<(Exponents, BigInt)>> = BTreeMap::new();
        for (e, c) in terms {
            buckets
                .entry(e[depth - 1] as usize)
                .or_default()
                .push((e.clone(), c.clone()));
        }
        let max_deg = buckets.keys().next_back().copied();
        let mut out: Vec<RPoly> = Vec::new();
        if let Some(max_deg) = max_deg {
            for k in 0..=max_deg {
                let sub = buckets.remove(&k).unwrap_or_default();
                out.push(build(&sub, depth - 1));
            }
        }
        RPoly::trim(&mut out);
        RPoly::Poly(out)
    }
    let terms: Vec<(Exponents, BigInt)> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    build(&terms, depth)
}

fn from_rpoly(p: &RPoly, vars: &VarSet) -> LaurentPoly {
    fn collect(p: &RPoly, prefix: &mut Vec<i64>, out: &mut BTreeMap<Exponents, BigInt>) {
        match p {
            RPoly::Int(c) => {
                if !c.is_zero() {
                    let mut exps: Exponents = Exponents::new();
                    // prefix holds exponents outermost-first; ring order is
                    // innermost-first, so reverse.
                    for &e in prefix.iter().rev() {
                        exps.push(e);
                    }
                    out.insert(exps, c.clone());
                }
            }
            RPoly::Poly(cs) => {
                for (k, c) in cs.iter().enumerate() {
                    prefix.push(k as i64);
                    *prefix.last_mut().unwrap() = k as i64;
                    collect(c, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut terms = BTreeMap::new();
    let mut prefix = Vec::new();
    collect(p, &mut prefix, &mut terms);
    LaurentPoly::from_terms(vars.clone(), terms)
}

/// Dense coefficient vector of `p` in variable `keep` after substituting the
/// integer `at` for the other variable (two-variable, nonnegative exponents).
fn eval_other_var(p: &LaurentPoly, keep: usize, at: &BigInt) -> Vec<BigInt> {
    let deg = p
        .terms()
        .map(|(e, _)| e[keep])
        .max()
        .unwrap_or(0) as usize;
    let mut out = vec![BigInt::zero(); deg + 1];
    for (e, c) in p.terms() {
        let other = e[1 - keep] as u32;
        out[e[keep] as usize] += c * at.pow(other);
    }
    while out.last().is_some_and(BigInt::is_zero) {
        out.pop();
    }
    out
}

fn univariate_gcd_degree(a: &[BigInt], b: &[BigInt]) -> usize {
    let wrap = |v: &[BigInt]| RPoly::Poly(v.iter().cloned().map(RPoly::Int).collect());
    gcd_rpoly(&wrap(a), &wrap(b)).degree()
}

/// Evaluation probe: substituting an integer for one variable (chosen so the
/// leading coefficients survive) can only raise the gcd degree in the other
/// variable. If both one-variable image gcds are constants, the bivariate
/// gcd is an integer, and the expensive remainder sequence is skipped.
fn probe_says_integer(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    'keep: for keep in 0..2usize {
        for c in [2i64, 3, 5, 7, 11] {
            let at = BigInt::from(c);
            let ia = eval_other_var(a, keep, &at);
            let ib = eval_other_var(b, keep, &at);
            let dega = a.terms().map(|(e, _)| e[keep]).max().unwrap_or(0) as usize;
            let degb = b.terms().map(|(e, _)| e[keep]).max().unwrap_or(0) as usize;
            // leading coefficients must not vanish under the substitution
            if ia.len() != dega + 1 || ib.len() != degb + 1 {
                continue;
            }
            if univariate_gcd_degree(&ia, &ib) == 0 {
                continue 'keep;
            }
            return false;
        }
        return false; // no usable evaluation point; stay conservative
    }
    true
}

/// Gcd of two Laurent polynomials, up to a unit: monomial factors are
/// stripped first, so the result is a true polynomial with nonzero trailing
/// terms and positive leading sign.
pub(crate) fn laurent_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let vars: VarSet = a.vars().iter().copied().collect();
    if a.is_zero() {
        return normalize_for_gcd(b);
    }
    if b.is_zero() {
        return normalize_for_gcd(a);
    }
    let a = normalize_for_gcd(a);
    let b = normalize_for_gcd(b);
    if vars.len() == 2 && probe_says_integer(&a, &b) {
        let g = a.content().gcd(&b.content());
        return LaurentPoly::constant(&vars, g);
    }
    let g = gcd_rpoly(&to_rpoly(&a, vars.len()), &to_rpoly(&b, vars.len()));
    from_rpoly(&g, &vars)
}

/// Strip the monomial factor (shift minimal exponents to zero).
fn normalize_for_gcd(p: &LaurentPoly) -> LaurentPoly {
    match p.min_exponents() {
        None => p.clone(),
        Some(min) => {
            let inv: Vec<i64> = min.iter().map(|x| -x).collect();
            p.mul_monomial(&inv, &BigInt::one())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Var, QR, QS};

    fn q() -> LaurentPoly {
        LaurentPoly::variable(QR, Var::Q)
    }

    #[test]
    fn univariate_gcd() {
        // gcd((q+1)(q-1), (q+1)^2) = q+1
        let one = LaurentPoly::one(QR);
        let a = q().add(&one).mul(&q().sub(&one));
        let b = q().add(&one).pow(2);
        assert_eq!(laurent_gcd(&a, &b), q().add(&one));
    }

    #[test]
    fn gcd_ignores_monomial_units() {
        let one = LaurentPoly::one(QR);
        let a = q().add(&one).mul_monomial(&[-3], &BigInt::from(2));
        let b = q().add(&one).mul_monomial(&[5], &BigInt::from(-4));
        assert_eq!(laurent_gcd(&a, &b), q().add(&one).mul_int(2));
    }

    #[test]
    fn bivariate_gcd() {
        // gcd((s - q)(s + q), (s - q) q^3) = s - q (up to unit)
        let s = LaurentPoly::variable(QS, Var::S);
        let qv = LaurentPoly::variable(QS, Var::Q);
        let a = s.sub(&qv).mul(&s.add(&qv));
        let b = s.sub(&qv).mul(&LaurentPoly::var_pow(QS, Var::Q, 3));
        let g = laurent_gcd(&a, &b);
        assert_eq!(g, s.sub(&qv));
    }

    #[test]
    fn coprime_gcd_is_constant() {
        let one = LaurentPoly::one(QR);
        let a = q().add(&one);
        let b = q().sub(&one);
        assert_eq!(laurent_gcd(&a, &b), one);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        prop_compose! {
            fn arb_qs()(terms in prop::collection::vec(
                (prop::collection::vec(-2i64..=2, 2), -6i64..=6), 1..4)) -> LaurentPoly {
                let mut p = LaurentPoly::zero(QS);
                for (e, c) in terms {
                    p.add_term(e.into_iter().collect(), BigInt::from(c));
                }
                p
            }
        }

        proptest! {
            #[test]
            fn gcd_divides_both_and_contains_common_factor(
                a in arb_qs(), b in arb_qs(), g in arb_qs()
            ) {
                prop_assume!(!a.is_zero() && !b.is_zero() && !g.is_zero());
                let ga = a.mul(&g);
                let gb = b.mul(&g);
                let d = laurent_gcd(&ga, &gb);
                prop_assert!(ga.exact_div(&d).is_ok());
                prop_assert!(gb.exact_div(&d).is_ok());
                prop_assert!(d.exact_div(&laurent_gcd(&g, &g)).is_ok(),
                             "gcd must contain the planted common factor");
            }
        }
    }
}
