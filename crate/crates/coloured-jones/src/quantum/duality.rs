//! Dualities of the finite-dimensional module, the dual-to-module normalizer
//! and the normalized n-fold (co)evaluations.
//!
//! The four duality morphisms on `V_N` with dual basis `{v_j*}`:
//!
//! ```text
//! coev_left  : 1 -> Σ_j v_j ⊗ v_j*          ev_left  : f ⊗ w -> f(w)
//! coev_right : 1 -> Σ_j v_j* ⊗ K^{-1} v_j   ev_right : v ⊗ f -> f(K v)
//! ```
//!
//! The normalizer is the per-factor isomorphism `f(v_i*) = c_i v_{N-1-i}`
//! with `c_0 = 1`, `c_{i+1} = -q^{(N-1)-2(i+1)} c_i`; inserting it after the
//! n-fold coevaluation lands the image in the highest-weight space of
//! `V_N^{⊗2n}` at weight `n(N-1)`. Its two-variable lift depends on the
//! strand: for strand `k`, `c~_0 = 1` and
//! `c~_{i+1} = -s^{-(2k-1)} q^{2k(N-1)-2(i+1)} c~_i`.
//!
//! The n-fold evaluations pair factor `k` with factor `2n+1-k` (innermost
//! pair first when composing single-pair maps, so the coevaluation wraps
//! outward).

use super::{ModuleSpec, TensorVector};
use crate::ring::{LaurentPoly, Var, QR, QS};

/// `Σ_j v_j ⊗ v_j*` in `V_N ⊗ V_N*`.
pub fn coev_left(colour: u16) -> TensorVector {
    let spec = ModuleSpec::Colour(colour);
    let mut v = TensorVector::zero(spec, vec![false, true]);
    for j in 0..colour {
        v.add_term(vec![j, j], spec.one());
    }
    v
}

/// `Σ_j v_j* ⊗ K^{-1} v_j` in `V_N* ⊗ V_N`.
pub fn coev_right(colour: u16) -> TensorVector {
    let spec = ModuleSpec::Colour(colour);
    let mut v = TensorVector::zero(spec, vec![true, false]);
    for j in 0..colour {
        v.add_term(vec![j, j], spec.k_inv_coeff(j));
    }
    v
}

/// `f ⊗ w -> f(w)` on `V_N* ⊗ V_N`.
pub fn ev_left(colour: u16, v: &TensorVector) -> LaurentPoly {
    assert_eq!(v.dual_mask(), &[true, false], "ev_left expects V* ⊗ V");
    let spec = ModuleSpec::Colour(colour);
    let mut acc = spec.zero();
    for (key, coeff) in v.terms() {
        if key[0] == key[1] {
            acc = acc.add(coeff);
        }
    }
    acc
}

/// `v ⊗ f -> f(K v)` on `V_N ⊗ V_N*`.
pub fn ev_right(colour: u16, v: &TensorVector) -> LaurentPoly {
    assert_eq!(v.dual_mask(), &[false, true], "ev_right expects V ⊗ V*");
    let spec = ModuleSpec::Colour(colour);
    let mut acc = spec.zero();
    for (key, coeff) in v.terms() {
        if key[0] == key[1] {
            acc = acc.add(&coeff.mul(&spec.k_coeff(key[0])));
        }
    }
    acc
}

/// The n-fold left coevaluation of 1: `Σ v_{j_n} ⊗ ... ⊗ v_{j_1} ⊗ v_{j_1}*
/// ⊗ ... ⊗ v_{j_n}*` (factor `k` pairs with factor `2n+1-k`).
pub fn coev_nested(n: usize, colour: u16) -> TensorVector {
    let spec = ModuleSpec::Colour(colour);
    let mut dual = vec![false; n];
    dual.extend(std::iter::repeat_n(true, n));
    let mut v = TensorVector::zero(spec, dual);
    let mut tuple = vec![0u16; n];
    loop {
        let mut key = Vec::with_capacity(2 * n);
        key.extend(tuple.iter().rev());
        key.extend(tuple.iter());
        v.add_term(key, spec.one());
        // next tuple
        let mut carry = true;
        for slot in tuple.iter_mut() {
            if *slot + 1 < colour {
                *slot += 1;
                carry = false;
                break;
            }
            *slot = 0;
        }
        if carry {
            break;
        }
    }
    v
}

/// The n-fold right evaluation, contracting factor `p` against factor
/// `2n+1-p` by `v ⊗ f -> f(Kv)`, outermost pair first.
pub fn ev_nested(n: usize, colour: u16, v: &TensorVector) -> LaurentPoly {
    let spec = ModuleSpec::Colour(colour);
    assert_eq!(v.factors(), 2 * n, "evaluation needs 2n factors");
    assert!(
        v.dual_mask()[..n].iter().all(|d| !d) && v.dual_mask()[n..].iter().all(|d| *d),
        "evaluation expects V^n ⊗ (V*)^n"
    );
    let mut acc = spec.zero();
    'terms: for (key, coeff) in v.terms() {
        let mut c = coeff.clone();
        for p in 0..n {
            let a = key[p];
            let b = key[2 * n - 1 - p];
            if a != b {
                continue 'terms;
            }
            c = c.mul(&spec.k_coeff(a));
        }
        acc = acc.add(&c);
    }
    acc
}

/// The per-factor isomorphism between the dual module and the module, with
/// the coefficients that land n-fold coevaluations in highest-weight spaces.
#[derive(Clone, Debug)]
pub struct DualNormalizer {
    colour: u16,
    /// Specialized coefficients `c_i` (same for every strand).
    coeffs: Vec<LaurentPoly>,
    /// Two-variable lifts `c~_i` per strand (index `k-1`), over `Z[q^±,s^±]`.
    generic: Vec<Vec<LaurentPoly>>,
}

impl DualNormalizer {
    /// Build for `n` strands at colour `N`.
    pub fn new(n: usize, colour: u16) -> Self {
        assert!(n >= 1 && colour >= 2);
        let mut coeffs = vec![LaurentPoly::one(QR)];
        for i in 0..(colour - 1) as i64 {
            let step = LaurentPoly::var_pow(QR, Var::Q, (colour as i64 - 1) - 2 * (i + 1)).neg();
            coeffs.push(coeffs[i as usize].mul(&step));
        }
        let mut generic = Vec::with_capacity(n);
        for k in 1..=n as i64 {
            let mut lift = vec![LaurentPoly::one(QS)];
            for i in 0..(colour - 1) as i64 {
                let step = LaurentPoly::monomial(
                    QS,
                    &[2 * k * (colour as i64 - 1) - 2 * (i + 1), -(2 * k - 1)],
                    -1,
                );
                lift.push(lift[i as usize].mul(&step));
            }
            generic.push(lift);
        }
        DualNormalizer {
            colour,
            coeffs,
            generic,
        }
    }

    pub fn colour(&self) -> u16 {
        self.colour
    }

    /// `c_i` with `f(v_i*) = c_i v_{N-1-i}`.
    pub fn coeff(&self, i: u16) -> &LaurentPoly {
        &self.coeffs[i as usize]
    }

    /// Two-variable lift `c~_i` for strand `k` (1-based).
    pub fn coeff_generic(&self, strand: usize, i: u16) -> &LaurentPoly {
        &self.generic[strand - 1][i as usize]
    }

    /// Apply `f` on a dual factor: `v_i* -> c_i v_{N-1-i}` (mask flips).
    pub fn apply(&self, v: &TensorVector, factor: usize) -> TensorVector {
        assert!(v.dual_mask()[factor], "normalizer acts on a dual factor");
        let spec = ModuleSpec::Colour(self.colour);
        let mut dual = v.dual_mask().to_vec();
        dual[factor] = false;
        let mut out = TensorVector::zero(spec, dual);
        for (key, coeff) in v.terms() {
            let i = key[factor];
            assert!(i < self.colour);
            let mut k = key.clone();
            k[factor] = self.colour - 1 - i;
            out.add_term(k, coeff.mul(self.coeff(i)));
        }
        out
    }

    /// Apply `f^{-1}` on a module factor: `v_j -> c_{N-1-j}^{-1} v_{N-1-j}*`.
    /// Indices `j >= N` are annihilated (the extension of the evaluation to
    /// the Verma module is supported on the finite submodule).
    pub fn apply_inverse(&self, v: &TensorVector, factor: usize) -> TensorVector {
        assert!(!v.dual_mask()[factor], "inverse normalizer acts on a module factor");
        let spec = ModuleSpec::Colour(self.colour);
        let mut dual = v.dual_mask().to_vec();
        dual[factor] = true;
        let mut out = TensorVector::zero(spec, dual);
        for (key, coeff) in v.terms() {
            let j = key[factor];
            if j >= self.colour {
                continue;
            }
            let i = self.colour - 1 - j;
            let inv = self
                .coeffs[i as usize]
                .invert_unit()
                .expect("normalizer coefficients are unit monomials");
            let mut k = key.clone();
            k[factor] = i;
            out.add_term(k, coeff.mul(&inv));
        }
        out
    }
}

/// The normalized n-fold coevaluation of 1, landing in `V_N^{⊗2n}`:
/// `Σ  c_{i_1} ... c_{i_n}  v_{i_n} ⊗ ... ⊗ v_{i_1} ⊗ v_{N-1-i_1} ⊗ ... ⊗ v_{N-1-i_n}`.
pub fn coev_normalized(n: usize, colour: u16) -> TensorVector {
    let norm = DualNormalizer::new(n, colour);
    let mut v = coev_nested(n, colour);
    for factor in n..2 * n {
        v = norm.apply(&v, factor);
    }
    v
}

/// The normalized n-fold evaluation on `V_N^{⊗2n}` (and, by the zero
/// extension of `apply_inverse`, on Verma weight vectors supported anywhere).
pub fn ev_normalized(n: usize, colour: u16, v: &TensorVector) -> LaurentPoly {
    assert_eq!(v.factors(), 2 * n);
    assert!(v.dual_mask().iter().all(|d| !d), "all factors non-dual");
    let norm = DualNormalizer::new(n, colour);
    let mut w = v.clone();
    for factor in n..2 * n {
        w = norm.apply_inverse(&w, factor);
    }
    ev_nested(n, colour, &w)
}

/// Two-variable lift of the normalized coevaluation, with the strand-
/// dependent lifted coefficients, as a vector over `Z[q^±, s^±]`.
pub fn coev_normalized_generic(n: usize, colour: u16) -> TensorVector {
    let spec = ModuleSpec::Generic;
    let norm = DualNormalizer::new(n, colour);
    let mut v = TensorVector::zero(spec, vec![false; 2 * n]);
    let mut tuple = vec![0u16; n];
    loop {
        let mut key = Vec::with_capacity(2 * n);
        key.extend(tuple.iter().rev());
        key.extend(tuple.iter().map(|&i| colour - 1 - i));
        let mut coeff = spec.one();
        for (k, &i) in tuple.iter().enumerate() {
            coeff = coeff.mul(norm.coeff_generic(k + 1, i));
        }
        v.add_term(key, coeff);
        let mut carry = true;
        for slot in tuple.iter_mut() {
            if *slot + 1 < colour {
                *slot += 1;
                carry = false;
                break;
            }
            *slot = 0;
        }
        if carry {
            break;
        }
    }
    v
}

/// Two-variable lift of the normalized evaluation: dual factor `n + k` uses
/// strand `k`'s lifted coefficients, contraction pairs use `f(Kv)` with the
/// generic `K`-eigenvalue `s q^{-2a}`. Indices at or above the colour give 0.
pub fn ev_normalized_generic(n: usize, colour: u16, v: &TensorVector) -> LaurentPoly {
    let spec = ModuleSpec::Generic;
    assert_eq!(v.factors(), 2 * n);
    let norm = DualNormalizer::new(n, colour);
    let mut acc = spec.zero();
    'terms: for (key, coeff) in v.terms() {
        let mut c = coeff.clone();
        // apply the inverse normalizer on factors n..2n
        let mut dual_indices = vec![0u16; n];
        for k in 1..=n {
            let j = key[n + k - 1];
            if j >= colour {
                continue 'terms;
            }
            let i = colour - 1 - j;
            let inv = norm
                .coeff_generic(k, i)
                .invert_unit()
                .expect("lifted coefficients are unit monomials");
            c = c.mul(&inv);
            dual_indices[k - 1] = i;
        }
        // contract factor p with factor 2n+1-p: dual index position n+k,
        // k = n+1-p (1-based)
        for p in 1..=n {
            let a = key[p - 1];
            if a >= colour {
                continue 'terms;
            }
            let k = n + 1 - p;
            if a != dual_indices[k - 1] {
                continue 'terms;
            }
            c = c.mul(&spec.k_coeff(a));
        }
        acc = acc.add(&c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{apply_hom, quantum_int, RingHom};

    #[test]
    fn coev_has_n_unit_terms() {
        for colour in 2..=5u16 {
            let v = coev_left(colour);
            assert_eq!(v.term_count(), colour as usize);
            assert!(v.terms().all(|(_, c)| c.is_one()));
        }
    }

    #[test]
    fn ev_right_traces_k() {
        // ev_right(Σ_j v_j ⊗ v_j*) = Σ_j q^{N-1-2j} = [N]_q
        for colour in 2..=5u16 {
            assert_eq!(
                ev_right(colour, &coev_left(colour)),
                quantum_int(colour as i64)
            );
        }
    }

    #[test]
    fn right_coevaluation_traces_k_inverse() {
        // ev_left ∘ coev_right (1) = Σ_j q^{-(N-1-2j)} = [N]_q
        for colour in 2..=5u16 {
            assert_eq!(
                ev_left(colour, &coev_right(colour)),
                quantum_int(colour as i64)
            );
        }
    }

    #[test]
    fn ev_left_kills_mismatched_pairs() {
        let spec = ModuleSpec::Colour(2);
        let v = TensorVector::basis(spec, vec![true, false], vec![0, 1]);
        assert!(ev_left(2, &v).is_zero());
        let w = TensorVector::basis(spec, vec![true, false], vec![1, 1]);
        assert!(ev_left(2, &w).is_one());
    }

    #[test]
    fn normalizer_small_colours() {
        let n2 = DualNormalizer::new(1, 2);
        assert!(n2.coeff(0).is_one());
        assert_eq!(n2.coeff(1), &LaurentPoly::var_pow(QR, Var::Q, -1).neg());

        let n3 = DualNormalizer::new(1, 3);
        assert!(n3.coeff(0).is_one());
        assert_eq!(n3.coeff(1), &LaurentPoly::int(QR, -1));
        assert_eq!(n3.coeff(2), &LaurentPoly::var_pow(QR, Var::Q, -2));
    }

    #[test]
    fn normalizer_round_trips() {
        for colour in 2..=5u16 {
            let norm = DualNormalizer::new(1, colour);
            for i in 0..colour {
                let v = TensorVector::basis(ModuleSpec::Colour(colour), vec![true], vec![i]);
                let round = norm.apply_inverse(&norm.apply(&v, 0), 0);
                assert_eq!(round, v);
            }
        }
    }

    #[test]
    fn generic_normalizer_specializes() {
        // η_{N-1}(c~^i_k) = c^i for every strand k
        for colour in 2..=4u16 {
            let norm = DualNormalizer::new(3, colour);
            let eta = RingHom::EtaLambda(colour as i64 - 1);
            for k in 1..=3usize {
                for i in 0..colour {
                    assert_eq!(
                        &apply_hom(&eta, norm.coeff_generic(k, i)).unwrap(),
                        norm.coeff(i),
                        "strand {k}, i={i}, colour {colour}"
                    );
                }
            }
        }
    }

    #[test]
    fn normalized_coev_example_colour_two() {
        // Coev(1) = v_0 ⊗ v_1 - q^{-1} v_1 ⊗ v_0
        let v = coev_normalized(1, 2);
        assert_eq!(v.term_count(), 2);
        assert!(v.coefficient(&[0, 1]).is_one());
        assert_eq!(
            v.coefficient(&[1, 0]),
            LaurentPoly::var_pow(QR, Var::Q, -1).neg()
        );
    }

    #[test]
    fn normalized_ev_example_colour_two() {
        // Ev(v_0 ⊗ v_1) = q, Ev(v_1 ⊗ v_0) = -1, Ev(v_0 ⊗ v_0) = 0
        let spec = ModuleSpec::Colour(2);
        let mk = |a: u16, b: u16| TensorVector::basis(spec, vec![false, false], vec![a, b]);
        assert_eq!(ev_normalized(1, 2, &mk(0, 1)), LaurentPoly::variable(QR, Var::Q));
        assert_eq!(ev_normalized(1, 2, &mk(1, 0)), LaurentPoly::int(QR, -1));
        assert!(ev_normalized(1, 2, &mk(0, 0)).is_zero());
    }

    #[test]
    fn ev_of_coev_is_quantum_dimension_power() {
        for colour in 2..=3u16 {
            for n in 1..=2usize {
                let val = ev_normalized(n, colour, &coev_normalized(n, colour));
                let expect = quantum_int(colour as i64).pow(n as u32);
                assert_eq!(val, expect, "n={n}, colour={colour}");
            }
        }
    }

    #[test]
    fn coev_image_is_highest_weight() {
        // E · Coev(1) = 0 and K · Coev(1) = Coev(1)
        use crate::quantum::{apply_coproduct_e, apply_coproduct_k};
        for colour in 2..=3u16 {
            for n in 1..=2usize {
                let spec = ModuleSpec::Colour(colour);
                let v = coev_normalized(n, colour);
                assert!(apply_coproduct_e(spec, &v).is_zero());
                assert_eq!(apply_coproduct_k(spec, &v), v);
            }
        }
    }

    #[test]
    fn generic_coev_specializes_to_coloured() {
        use crate::quantum::ModuleSpec;
        for colour in 2..=3u16 {
            for n in 1..=2usize {
                let gen = coev_normalized_generic(n, colour);
                let spec = coev_normalized(n, colour);
                let eta = RingHom::EtaLambda(colour as i64 - 1);
                let mut mapped = TensorVector::zero(ModuleSpec::Colour(colour), vec![false; 2 * n]);
                for (k, c) in gen.terms() {
                    mapped.add_term(k.clone(), apply_hom(&eta, c).unwrap());
                }
                assert_eq!(mapped, spec);
            }
        }
    }

    #[test]
    fn generic_ev_specializes_on_basis_tensors() {
        let eta = RingHom::EtaLambda(1);
        for a in 0..2u16 {
            for b in 0..2u16 {
                let vg = TensorVector::basis(ModuleSpec::Generic, vec![false, false], vec![a, b]);
                let vc = TensorVector::basis(ModuleSpec::Colour(2), vec![false, false], vec![a, b]);
                assert_eq!(
                    apply_hom(&eta, &ev_normalized_generic(1, 2, &vg)).unwrap(),
                    ev_normalized(1, 2, &vc)
                );
            }
        }
    }
}
