//! The two-strand braiding operator and the braid group action it generates.
//!
//! On the standard basis the braiding acts by
//!
//! ```text
//! R(v_i ⊗ v_j) = s^{-(i+j)} Σ_{n=0}^{i}  q^{2(i-n)(j+n)} q^{n(n-1)/2} [n+j, j]_q
//!                 · prod_{k=0}^{n-1} (s q^{-k-j} - s^{-1} q^{k+j})  v_{j+n} ⊗ v_{i-n}
//! ```
//!
//! (position swap built in: the image of the `(i,j)` basis pair is supported
//! on pairs `(j+n, i-n)`). A braid generator `σ_p` acts as this operator on
//! factors `(p, p+1)` and the identity elsewhere. The specialisation
//! `s = q^{N-1}` makes the coefficient vanish exactly when `j + n >= N` and
//! `j <= N-1`, which is why `V_N ⊗ V_N` is preserved.
//!
//! The inverse operator is computed exactly: on each total-weight block the
//! forward matrix is triangular (after the index flip `k -> w - k`) with
//! unit-monomial diagonal `s^{-w} q^{2k(w-k)}`, so back substitution divides
//! only by unit monomials.

use super::{ModuleSpec, TensorVector};
use crate::braid::BraidWord;
use crate::ring::{quantum_binomial, LaurentPoly};
use once_cell::sync::Lazy;
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

/// Index domain of a two-strand operator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum StrandDomain {
    /// Pairs `(i, j)` with `i, j < N` — the finite module `V_N ⊗ V_N`.
    Finite(u16),
    /// Pairs `(i, j)` with `i + j <= max_weight` — Verma weight blocks.
    Verma(u16),
}

impl StrandDomain {
    fn weights(&self) -> std::ops::RangeInclusive<u16> {
        match self {
            StrandDomain::Finite(n) => 0..=(2 * (n - 1)),
            StrandDomain::Verma(m) => 0..=*m,
        }
    }

    /// Block index range at total weight `w`.
    fn block(&self, w: u16) -> std::ops::RangeInclusive<u16> {
        match self {
            StrandDomain::Finite(n) => w.saturating_sub(n - 1)..=w.min(n - 1),
            StrandDomain::Verma(_) => 0..=w,
        }
    }
}

/// Image pairs with coefficients, per basis pair.
type PairImages = BTreeMap<(u16, u16), Vec<(u16, u16, LaurentPoly)>>;

/// Exact sparse two-strand operator: for each basis pair `(i, j)` the list of
/// image pairs with coefficients.
#[derive(Clone, Debug)]
pub struct TwoStrandOperator {
    spec: ModuleSpec,
    domain: StrandDomain,
    inverse: bool,
    map: PairImages,
}

/// Coefficient of `v_{j+n} ⊗ v_{i-n}` in the braiding image of `v_i ⊗ v_j`.
fn r_coeff(spec: ModuleSpec, i: u16, j: u16, n: u16) -> LaurentPoly {
    let (i, j, n) = (i as i64, j as i64, n as i64);
    let binom = quantum_binomial((n + j) as u32, j as u32)
        .expect("binomial in range")
        .widen(spec.vars());
    let mut prod = spec.sq(-(i + j), 2 * (i - n) * (j + n) + n * (n - 1) / 2);
    prod = prod.mul(&binom);
    for k in 0..n {
        prod = prod.mul(&spec.weight_factor(k, j));
    }
    prod
}

impl TwoStrandOperator {
    /// The forward braiding on the given domain.
    fn build_forward(spec: ModuleSpec, domain: StrandDomain) -> Self {
        let mut map = PairImages::new();
        for w in domain.weights() {
            for i in domain.block(w) {
                let j = w - i;
                let mut images = Vec::new();
                for n in 0..=i {
                    let c = r_coeff(spec, i, j, n);
                    if c.is_zero() {
                        continue;
                    }
                    let (a, b) = (j + n, i - n);
                    if let StrandDomain::Finite(ncol) = domain {
                        // vanishing outside V_N is a theorem; enforce it
                        assert!(
                            a < ncol && b < ncol,
                            "braiding escaped V_N: ({i},{j}) -> ({a},{b})"
                        );
                    }
                    images.push((a, b, c));
                }
                map.insert((i, j), images);
            }
        }
        TwoStrandOperator {
            spec,
            domain,
            inverse: false,
            map,
        }
    }

    /// The inverse braiding, by exact blockwise back substitution.
    fn build_inverse(spec: ModuleSpec, domain: StrandDomain) -> Self {
        let forward = Self::build_forward(spec, domain);
        let mut map = PairImages::new();
        for w in domain.weights() {
            let range = domain.block(w);
            let lo = *range.start();
            let hi = *range.end();
            let dim = (hi - lo + 1) as usize;
            // dense block of the forward operator: bm[r][c] = coeff of
            // u_r = v_r ⊗ v_{w-r} in forward(u_c)
            let mut bm = vec![vec![spec.zero(); dim]; dim];
            for c in lo..=hi {
                for &(a, _b, ref coeff) in &forward.map[&(c, w - c)] {
                    bm[(a - lo) as usize][(c - lo) as usize] = coeff.clone();
                }
            }
            // Solve B x = e_t for each target column t. Row r only involves
            // unknowns x_c with c >= w - r, and the entry at c = w - r is a
            // unit monomial, so ascending rows determine x_{w-r} in turn.
            for t in lo..=hi {
                let mut x = vec![spec.zero(); dim];
                for r in lo..=hi {
                    let pivot_c = w - r;
                    if pivot_c < lo || pivot_c > hi {
                        continue;
                    }
                    let mut rhs = if r == t { spec.one() } else { spec.zero() };
                    for c in (pivot_c + 1)..=hi {
                        let e = &bm[(r - lo) as usize][(c - lo) as usize];
                        if !e.is_zero() {
                            rhs = rhs.sub(&e.mul(&x[(c - lo) as usize]));
                        }
                    }
                    let pivot = &bm[(r - lo) as usize][(pivot_c - lo) as usize];
                    x[(pivot_c - lo) as usize] = rhs
                        .exact_div(pivot)
                        .expect("diagonal of the braiding block is a unit monomial");
                }
                let images: Vec<(u16, u16, LaurentPoly)> = (lo..=hi)
                    .filter(|&c| !x[(c - lo) as usize].is_zero())
                    .map(|c| (c, w - c, x[(c - lo) as usize].clone()))
                    .collect();
                map.insert((t, w - t), images);
            }
        }
        TwoStrandOperator {
            spec,
            domain,
            inverse: true,
            map,
        }
    }

    pub fn spec(&self) -> ModuleSpec {
        self.spec
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    /// Image pairs of the basis pair `(i, j)`.
    pub fn image(&self, i: u16, j: u16) -> &[(u16, u16, LaurentPoly)] {
        self.map
            .get(&(i, j))
            .map(Vec::as_slice)
            .unwrap_or_else(|| panic!("pair ({i},{j}) outside domain {:?}", self.domain))
    }

    /// Apply on factors `(pos, pos+1)` of a tensor vector.
    pub fn apply(&self, v: &TensorVector, pos: usize) -> TensorVector {
        assert!(pos + 1 < v.factors(), "operator needs two factors");
        assert!(
            !v.dual_mask()[pos] && !v.dual_mask()[pos + 1],
            "braiding acts on module factors"
        );
        let mut out = TensorVector::zero(self.spec, v.dual_mask().to_vec());
        for (key, coeff) in v.terms() {
            let (i, j) = (key[pos], key[pos + 1]);
            for (a, b, c) in self.image(i, j) {
                let mut k = key.clone();
                k[pos] = *a;
                k[pos + 1] = *b;
                out.add_term(k, coeff.mul(c));
            }
        }
        out
    }
}

type OpKey = (ModuleSpec, StrandDomain, bool);
static OP_CACHE: Lazy<Mutex<BTreeMap<OpKey, Arc<TwoStrandOperator>>>> =
    Lazy::new(|| Mutex::new(BTreeMap::new()));

fn cached_operator(spec: ModuleSpec, domain: StrandDomain, inverse: bool) -> Arc<TwoStrandOperator> {
    let key = (spec, domain, inverse);
    if let Some(op) = OP_CACHE.lock().unwrap().get(&key) {
        return op.clone();
    }
    let op = Arc::new(if inverse {
        TwoStrandOperator::build_inverse(spec, domain)
    } else {
        TwoStrandOperator::build_forward(spec, domain)
    });
    OP_CACHE.lock().unwrap().insert(key, op.clone());
    op
}

/// The braiding operator on `V_N ⊗ V_N` (`sign = ±1`), exact and cached.
pub fn braiding_operator(colour: u16, sign: i8) -> Arc<TwoStrandOperator> {
    assert!(colour >= 2, "colour must be at least 2");
    assert!(sign == 1 || sign == -1);
    cached_operator(
        ModuleSpec::Colour(colour),
        StrandDomain::Finite(colour),
        sign < 0,
    )
}

/// The braiding operator on Verma weight blocks of total weight `<= max_weight`.
pub fn verma_braiding(spec: ModuleSpec, max_weight: u16, sign: i8) -> Arc<TwoStrandOperator> {
    assert!(sign == 1 || sign == -1);
    cached_operator(spec, StrandDomain::Verma(max_weight), sign < 0)
}

/// Image of a tensor vector under the braid representation: letters applied
/// in word order, `σ_p^{±1}` acting on factors `(p, p+1)`. The vector must
/// have exactly `b.strands()` factors, all non-dual at the touched positions.
pub fn braid_rep_action(b: &BraidWord, colour: u16, v: &TensorVector) -> TensorVector {
    assert_eq!(
        v.factors(),
        b.strands(),
        "vector must have one factor per strand"
    );
    let pos_op = braiding_operator(colour, 1);
    let neg_op = braiding_operator(colour, -1);
    let mut cur = v.clone();
    for &g in b.letters() {
        let pos = (g.unsigned_abs() as usize) - 1;
        let op = if g > 0 { &pos_op } else { &neg_op };
        cur = op.apply(&cur, pos);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Var, QR};

    #[test]
    fn braiding_fixes_v0_v0() {
        let op = braiding_operator(2, 1);
        let img = op.image(0, 0);
        assert_eq!(img.len(), 1);
        assert_eq!(img[0].0, 0);
        assert_eq!(img[0].1, 0);
        assert!(img[0].2.is_one());
    }

    #[test]
    fn braiding_on_v1_v0_at_colour_two() {
        // R(v_1 ⊗ v_0) = q^{-1} v_0 ⊗ v_1 + (1 - q^{-2}) v_1 ⊗ v_0
        let op = braiding_operator(2, 1);
        let v = TensorVector::basis(ModuleSpec::Colour(2), vec![false, false], vec![1, 0]);
        let img = op.apply(&v, 0);
        assert_eq!(img.coefficient(&[0, 1]), LaurentPoly::var_pow(QR, Var::Q, -1));
        let one = LaurentPoly::one(QR);
        assert_eq!(
            img.coefficient(&[1, 0]),
            one.sub(&LaurentPoly::var_pow(QR, Var::Q, -2))
        );
    }

    #[test]
    fn inverse_composes_to_identity() {
        for colour in 2..=4u16 {
            let fwd = braiding_operator(colour, 1);
            let inv = braiding_operator(colour, -1);
            let spec = ModuleSpec::Colour(colour);
            for i in 0..colour {
                for j in 0..colour {
                    let v = TensorVector::basis(spec, vec![false, false], vec![i, j]);
                    let round = inv.apply(&fwd.apply(&v, 0), 0);
                    assert_eq!(round, v, "B^-1 B = id on ({i},{j}), colour {colour}");
                    let round = fwd.apply(&inv.apply(&v, 0), 0);
                    assert_eq!(round, v, "B B^-1 = id on ({i},{j}), colour {colour}");
                }
            }
        }
    }

    #[test]
    fn verma_inverse_composes_to_identity() {
        for spec in [ModuleSpec::Generic, ModuleSpec::Colour(2)] {
            let fwd = verma_braiding(spec, 4, 1);
            let inv = verma_braiding(spec, 4, -1);
            for i in 0..=4u16 {
                for j in 0..=(4 - i) {
                    let v = TensorVector::basis(spec, vec![false, false], vec![i, j]);
                    assert_eq!(inv.apply(&fwd.apply(&v, 0), 0), v);
                }
            }
        }
    }

    #[test]
    fn braid_relation_on_three_factors() {
        for colour in 2..=4u16 {
            let spec = ModuleSpec::Colour(colour);
            let op = braiding_operator(colour, 1);
            for i in 0..colour {
                for j in 0..colour {
                    for k in 0..colour {
                        let v =
                            TensorVector::basis(spec, vec![false; 3], vec![i, j, k]);
                        let lhs = op.apply(&op.apply(&op.apply(&v, 0), 1), 0);
                        let rhs = op.apply(&op.apply(&op.apply(&v, 1), 0), 1);
                        assert_eq!(lhs, rhs, "braid relation at ({i},{j},{k}), N={colour}");
                    }
                }
            }
        }
    }

    #[test]
    fn far_commutation_on_four_factors() {
        for colour in 2..=4u16 {
            let spec = ModuleSpec::Colour(colour);
            let op = braiding_operator(colour, 1);
            for i in 0..colour {
                for j in 0..colour {
                    for k in 0..colour {
                        for l in 0..colour {
                            let v = TensorVector::basis(
                                spec,
                                vec![false; 4],
                                vec![i, j, k, l],
                            );
                            let lhs = op.apply(&op.apply(&v, 0), 2);
                            let rhs = op.apply(&op.apply(&v, 2), 0);
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn braid_word_action_examples() {
        use crate::braid::BraidWord;
        let spec = ModuleSpec::Colour(2);
        let v = TensorVector::basis(spec, vec![false; 3], vec![1, 0, 1]);

        let empty = BraidWord::parse("", 3).unwrap();
        assert_eq!(braid_rep_action(&empty, 2, &v), v);

        let cancel = BraidWord::parse("1 -1", 3).unwrap();
        assert_eq!(braid_rep_action(&cancel, 2, &v), v);

        let lhs_word = BraidWord::parse("1 2 1", 3).unwrap();
        let rhs_word = BraidWord::parse("2 1 2", 3).unwrap();
        for i in 0..2u16 {
            for j in 0..2u16 {
                for k in 0..2u16 {
                    let b = TensorVector::basis(spec, vec![false; 3], vec![i, j, k]);
                    assert_eq!(
                        braid_rep_action(&lhs_word, 2, &b),
                        braid_rep_action(&rhs_word, 2, &b)
                    );
                }
            }
        }
    }

    #[test]
    fn generic_braiding_specializes_to_coloured() {
        // the generic R-coefficients at s = q^{N-1} match the coloured ones
        let eta = crate::ring::RingHom::EtaLambda(2);
        for i in 0..=3u16 {
            for j in 0..=2u16 {
                for n in 0..=i {
                    let gen = r_coeff(ModuleSpec::Generic, i, j, n);
                    let spe = r_coeff(ModuleSpec::Colour(3), i, j, n);
                    assert_eq!(crate::ring::apply_hom(&eta, &gen).unwrap(), spe);
                }
            }
        }
    }
}
