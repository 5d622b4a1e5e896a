//! The quantum-group side: Verma-module actions, R-matrix braiding,
//! dualities, normalized (co)evaluations and the direct computations of the
//! coloured Jones polynomial.
//!
//! The module algebra is generated by `K^{±1}`, `E` and the divided powers
//! `F^{(n)}`, acting on the Verma basis `v_0, v_1, ...` by
//!
//! ```text
//! K v_i      = s q^{-2i} v_i
//! E v_i      = v_{i-1}                       (v_{-1} = 0)
//! F^(n) v_i  = [n+i, i]_q  prod_{k=0}^{n-1} (s q^{-k-i} - s^{-1} q^{k+i})  v_{i+n}
//! ```
//!
//! Two coefficient regimes are used throughout: the generic one over
//! `Z[q^±, s^±]`, and the colour-`N` specialisation `s = q^{N-1}` over
//! `Z[q^±]`, under which `v_0, ..., v_{N-1}` span the `N`-dimensional
//! submodule `V_N` (the divided-power coefficients vanish exactly when
//! `n >= N - i`).

pub mod duality;
pub mod jones;
pub mod rmatrix;

pub use duality::{
    coev_left, coev_nested, coev_normalized, coev_normalized_generic, coev_right, ev_left,
    ev_nested, ev_normalized, ev_normalized_generic, ev_right, DualNormalizer,
};
pub use jones::{jones_hw, jones_rt, QuantumError};
pub use rmatrix::{braid_rep_action, braiding_operator, verma_braiding, TwoStrandOperator};

use crate::ring::{quantum_binomial, LaurentPoly, Var, QR, QS};
use std::collections::BTreeMap;

/// Which coefficient ring and weight specialisation a computation runs in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ModuleSpec {
    /// Generic Verma module over `Z[q^±, s^±]`.
    Generic,
    /// Specialisation `s = q^{N-1}` over `Z[q^±]` for colour `N >= 2`.
    Colour(u16),
}

impl ModuleSpec {
    pub fn vars(&self) -> &'static [Var] {
        match self {
            ModuleSpec::Generic => QS,
            ModuleSpec::Colour(_) => QR,
        }
    }

    pub fn one(&self) -> LaurentPoly {
        LaurentPoly::one(self.vars())
    }

    pub fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(self.vars())
    }

    /// `s^a q^b` in this ring.
    pub fn sq(&self, a: i64, b: i64) -> LaurentPoly {
        match self {
            ModuleSpec::Generic => LaurentPoly::monomial(QS, &[b, a], 1),
            ModuleSpec::Colour(n) => {
                LaurentPoly::monomial(QR, &[a * (*n as i64 - 1) + b], 1)
            }
        }
    }

    /// Eigencoefficient of `K` on `v_i`: `s q^{-2i}`.
    pub fn k_coeff(&self, i: u16) -> LaurentPoly {
        self.sq(1, -2 * i as i64)
    }

    /// Eigencoefficient of `K^{-1}` on `v_i`.
    pub fn k_inv_coeff(&self, i: u16) -> LaurentPoly {
        self.sq(-1, 2 * i as i64)
    }

    /// `s q^{-k-i} - s^{-1} q^{k+i}`, the factors of the divided-power and
    /// R-matrix coefficients.
    pub fn weight_factor(&self, k: i64, i: i64) -> LaurentPoly {
        self.sq(1, -k - i).sub(&self.sq(-1, k + i))
    }

    /// Coefficient of `v_{i+n}` in `F^{(n)} v_i`.
    pub fn f_divided_coeff(&self, n: u16, i: u16) -> LaurentPoly {
        let binom = quantum_binomial((n + i) as u32, i as u32)
            .expect("binomial in range")
            .widen(self.vars());
        let mut prod = self.one();
        for k in 0..n as i64 {
            prod = prod.mul(&self.weight_factor(k, i as i64));
        }
        binom.mul(&prod)
    }
}

/// A single quantum-group generator to apply on one tensor factor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorAction {
    K,
    KInv,
    E,
    /// The divided power `F^{(n)}`.
    FDiv(u16),
}

/// Finitely-supported coefficient vector over basis index tuples of a tensor
/// power, with a per-factor flag marking dual factors. Zero coefficients are
/// never stored; the term map is ordered, so iteration is deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorVector {
    factors: usize,
    dual: Vec<bool>,
    vars: Vec<Var>,
    terms: BTreeMap<Vec<u16>, LaurentPoly>,
}

impl TensorVector {
    pub fn zero(spec: ModuleSpec, dual: Vec<bool>) -> Self {
        TensorVector {
            factors: dual.len(),
            vars: spec.vars().to_vec(),
            dual,
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_plain(spec: ModuleSpec, factors: usize) -> Self {
        Self::zero(spec, vec![false; factors])
    }

    /// A single basis tensor with coefficient 1.
    pub fn basis(spec: ModuleSpec, dual: Vec<bool>, indices: Vec<u16>) -> Self {
        let mut v = Self::zero(spec, dual);
        assert_eq!(v.factors, indices.len());
        v.terms.insert(indices, LaurentPoly::one(&v.vars));
        v
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn dual_mask(&self) -> &[bool] {
        &self.dual
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &[u16]) -> LaurentPoly {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(&self.vars))
    }

    pub fn add_term(&mut self, key: Vec<u16>, coeff: LaurentPoly) {
        debug_assert_eq!(key.len(), self.factors);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dual, other.dual);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&LaurentPoly::int(&self.vars, -1)))
    }

    pub fn scale(&self, by: &LaurentPoly) -> Self {
        let mut out = TensorVector {
            factors: self.factors,
            dual: self.dual.clone(),
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.mul(by));
        }
        out
    }

    /// True when every index of every term is `< bound`.
    pub fn supported_below(&self, bound: u16) -> bool {
        self.terms.keys().all(|k| k.iter().all(|&i| i < bound))
    }

    /// Total weight (sum of indices) when it is constant across terms.
    pub fn uniform_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let w: u32 = it.next()?.iter().map(|&i| i as u32).sum();
        it.all(|k| k.iter().map(|&i| i as u32).sum::<u32>() == w)
            .then_some(w)
    }
}

/// Apply a generator on one (non-dual) tensor factor, without coproduct.
pub fn apply_generator(
    spec: ModuleSpec,
    action: GeneratorAction,
    v: &TensorVector,
    factor: usize,
) -> TensorVector {
    assert!(factor < v.factors(), "factor index in range");
    assert!(!v.dual_mask()[factor], "generators act on module factors");
    let mut out = TensorVector::zero(spec, v.dual_mask().to_vec());
    for (key, coeff) in v.terms() {
        let i = key[factor];
        match action {
            GeneratorAction::K => {
                out.add_term(key.clone(), coeff.mul(&spec.k_coeff(i)));
            }
            GeneratorAction::KInv => {
                out.add_term(key.clone(), coeff.mul(&spec.k_inv_coeff(i)));
            }
            GeneratorAction::E => {
                if i > 0 {
                    let mut k = key.clone();
                    k[factor] = i - 1;
                    out.add_term(k, coeff.clone());
                }
            }
            GeneratorAction::FDiv(n) => {
                let c = spec.f_divided_coeff(n, i);
                if !c.is_zero() {
                    let mut k = key.clone();
                    k[factor] = i + n;
                    out.add_term(k, coeff.mul(&c));
                }
            }
        }
    }
    out
}

/// Iterated-coproduct action of `E` on a pure tensor power:
/// `Δ^{m-1}(E) = Σ_j 1^{j-1} ⊗ E ⊗ K^{m-j}`.
pub fn apply_coproduct_e(spec: ModuleSpec, v: &TensorVector) -> TensorVector {
    assert!(
        v.dual_mask().iter().all(|d| !d),
        "coproduct acts on module tensor powers"
    );
    let m = v.factors();
    let mut out = TensorVector::zero(spec, v.dual_mask().to_vec());
    for (key, coeff) in v.terms() {
        for j in 0..m {
            if key[j] == 0 {
                continue;
            }
            let mut k = key.clone();
            k[j] -= 1;
            let mut c = coeff.clone();
            for &later in &key[j + 1..] {
                c = c.mul(&spec.k_coeff(later));
            }
            out.add_term(k, c);
        }
    }
    out
}

/// Iterated-coproduct action of `K` (diagonal: product of eigencoefficients).
pub fn apply_coproduct_k(spec: ModuleSpec, v: &TensorVector) -> TensorVector {
    assert!(
        v.dual_mask().iter().all(|d| !d),
        "coproduct acts on module tensor powers"
    );
    let mut out = TensorVector::zero(spec, v.dual_mask().to_vec());
    for (key, coeff) in v.terms() {
        let mut c = coeff.clone();
        for &i in key {
            c = c.mul(&spec.k_coeff(i));
        }
        out.add_term(key.clone(), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis1(spec: ModuleSpec, i: u16) -> TensorVector {
        TensorVector::basis(spec, vec![false], vec![i])
    }

    #[test]
    fn k_acts_by_q_on_v0_at_colour_two() {
        let spec = ModuleSpec::Colour(2);
        let v = apply_generator(spec, GeneratorAction::K, &basis1(spec, 0), 0);
        assert_eq!(v.coefficient(&[0]), LaurentPoly::var_pow(QR, Var::Q, 1));
    }

    #[test]
    fn coproduct_e_kills_v0_v0() {
        let spec = ModuleSpec::Colour(2);
        let v = TensorVector::basis(spec, vec![false, false], vec![0, 0]);
        assert!(apply_coproduct_e(spec, &v).is_zero());
    }

    #[test]
    fn f_divided_on_v0_at_colour_two() {
        // F^(1) v_0 = [1]_q (q - q^-1) v_1 at s = q
        let spec = ModuleSpec::Colour(2);
        let v = apply_generator(spec, GeneratorAction::FDiv(1), &basis1(spec, 0), 0);
        let q = LaurentPoly::variable(QR, Var::Q);
        let expect = q.sub(&LaurentPoly::var_pow(QR, Var::Q, -1));
        assert_eq!(v.coefficient(&[1]), expect);
    }

    #[test]
    fn truncation_exactly_at_n_ge_colour_minus_i() {
        for n_colour in 2..=5u16 {
            let spec = ModuleSpec::Colour(n_colour);
            for i in 0..n_colour {
                for n in 1..=(n_colour + 2) {
                    let v = apply_generator(spec, GeneratorAction::FDiv(n), &basis1(spec, i), 0);
                    let vanishes = v.is_zero();
                    let should_vanish = n >= n_colour - i;
                    assert_eq!(
                        vanishes, should_vanish,
                        "F^({n}) v_{i} at colour {n_colour}"
                    );
                }
            }
        }
    }

    #[test]
    fn quantum_group_relations_on_basis_vectors() {
        // K(Ev) = q^2 E(Kv);   [E, F^(n+1)] v = F^(n)(q^{-n} K - q^{n} K^{-1}) v;
        // F^(n) F^(m) = [n+m, n]_q F^(n+m)  — all on v_i, colours up to 5.
        for colour in 2..=5u16 {
            let spec = ModuleSpec::Colour(colour);
            for i in 0..colour {
                let v = basis1(spec, i);
                let ke = apply_generator(spec, GeneratorAction::K,
                    &apply_generator(spec, GeneratorAction::E, &v, 0), 0);
                let ek = apply_generator(spec, GeneratorAction::E,
                    &apply_generator(spec, GeneratorAction::K, &v, 0), 0)
                    .scale(&LaurentPoly::var_pow(QR, Var::Q, 2));
                assert_eq!(ke, ek, "KE = q^2 EK on v_{i}, colour {colour}");

                for n in 0..3u16 {
                    let ef = apply_generator(spec, GeneratorAction::E,
                        &apply_generator(spec, GeneratorAction::FDiv(n + 1), &v, 0), 0);
                    let fe = apply_generator(spec, GeneratorAction::FDiv(n + 1),
                        &apply_generator(spec, GeneratorAction::E, &v, 0), 0);
                    let commutator = ef.sub(&fe);
                    let kv = apply_generator(spec, GeneratorAction::K, &v, 0)
                        .scale(&LaurentPoly::var_pow(QR, Var::Q, -(n as i64)));
                    let kinv = apply_generator(spec, GeneratorAction::KInv, &v, 0)
                        .scale(&LaurentPoly::var_pow(QR, Var::Q, n as i64));
                    let rhs = apply_generator(spec, GeneratorAction::FDiv(n), &kv.sub(&kinv), 0);
                    assert_eq!(commutator, rhs, "divided-power commutator, n={n}");
                }

                for n in 1..3u16 {
                    for m in 1..3u16 {
                        let fnm = apply_generator(spec, GeneratorAction::FDiv(n),
                            &apply_generator(spec, GeneratorAction::FDiv(m), &v, 0), 0);
                        let binom = quantum_binomial((n + m) as u32, n as u32).unwrap();
                        let rhs = apply_generator(spec, GeneratorAction::FDiv(n + m), &v, 0)
                            .scale(&binom);
                        assert_eq!(fnm, rhs, "F^({n})F^({m}) on v_{i}");
                    }
                }
            }
        }
    }

    #[test]
    fn generic_weight_factor_specializes() {
        // the generic F-coefficient at s = q^{N-1} matches direct computation
        let generic = ModuleSpec::Generic;
        let spec = ModuleSpec::Colour(3);
        let c_gen = generic.f_divided_coeff(2, 1);
        let c_spec = spec.f_divided_coeff(2, 1);
        let eta = crate::ring::RingHom::EtaLambda(2);
        assert_eq!(crate::ring::apply_hom(&eta, &c_gen).unwrap(), c_spec);
    }
}
