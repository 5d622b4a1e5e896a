//! Independent reference computations used by the verification suites.
//!
//! Nothing in here is called by the production routes; these are oracles the
//! test suites compare against.
//!
//! * [`kauffman_jones`] — the Jones polynomial of a braid closure by the
//!   Kauffman bracket state sum (Temperley-Lieb resolution of every
//!   crossing, loop counting, writhe normalization). Completely independent
//!   of the quantum-group machinery.
//! * [`winding_pairing_polynomial`] — the diagonal pairing polynomial of a
//!   single-column grid, computed from explicit piecewise-linear loops in
//!   the configuration-space model: for each permutation of the grid the
//!   loop through the fork/barcode intersection points is traced with exact
//!   rational coordinates and its total pairwise half-winding is counted.

use crate::braid::BraidWord;
use crate::ring::{LaurentPoly, Var, DR, QR};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("the closure of the braid is not a knot")]
    NotAKnot,
    #[error("bracket exponents are not multiples of 4: not a knot diagram?")]
    BadExponents,
}

/// Number of circles in the closure of a Temperley-Lieb state diagram.
///
/// `resolutions[j]` is `None` for the identity tangle at letter `j`, or
/// `Some(i)` for the cup-cap tangle joining positions `i, i+1` (0-based).
fn closure_loops(strands: usize, resolutions: &[Option<usize>]) -> usize {
    let k = resolutions.len();
    if k == 0 {
        return strands;
    }
    // union-find over (slice, position), slices 0..k with wraparound
    let mut parent: Vec<usize> = (0..k * strands).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut [usize], a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    let node = |slice: usize, pos: usize| (slice % k) * strands + pos;
    for (j, res) in resolutions.iter().enumerate() {
        match res {
            None => {
                for p in 0..strands {
                    union(&mut parent, node(j, p), node(j + 1, p));
                }
            }
            Some(i) => {
                union(&mut parent, node(j, *i), node(j, *i + 1));
                union(&mut parent, node(j + 1, *i), node(j + 1, *i + 1));
                for p in 0..strands {
                    if p != *i && p != *i + 1 {
                        union(&mut parent, node(j, p), node(j + 1, p));
                    }
                }
            }
        }
    }
    let mut roots = std::collections::BTreeSet::new();
    for x in 0..k * strands {
        let r = find(&mut parent, x);
        roots.insert(r);
    }
    roots.len()
}

/// The Jones polynomial `V` of the closure of `b`, as a Laurent polynomial
/// in the classical variable `t` (rendered in the `q` slot).
///
/// Kauffman bracket state sum: a positive generator resolves as
/// `A · identity + A^{-1} · cupcap`, a negative one the other way around;
/// each state contributes `A^{±…} (-A^2 - A^{-2})^{loops - 1}`; the bracket
/// is normalized by `(-A^3)^{-writhe}` and converted by `t = A^{-4}`.
pub fn kauffman_jones(b: &BraidWord) -> Result<LaurentPoly, OracleError> {
    if !b.is_knot() {
        return Err(OracleError::NotAKnot);
    }
    let letters = b.letters();
    let k = letters.len();
    // bracket in the variable A (held in the q slot)
    let a_vars = QR;
    let delta = LaurentPoly::var_pow(a_vars, Var::Q, 2)
        .add(&LaurentPoly::var_pow(a_vars, Var::Q, -2))
        .neg();
    let mut bracket = LaurentPoly::zero(a_vars);
    for state in 0u64..(1u64 << k) {
        let mut a_exp: i64 = 0;
        let mut resolutions = Vec::with_capacity(k);
        for (j, &g) in letters.iter().enumerate() {
            let first = state >> j & 1 == 0;
            let i = g.unsigned_abs() as usize - 1;
            // positive crossing: A·identity + A^{-1}·cupcap
            let (weight, res) = if g > 0 {
                if first {
                    (1, None)
                } else {
                    (-1, Some(i))
                }
            } else if first {
                (-1, None)
            } else {
                (1, Some(i))
            };
            a_exp += weight;
            resolutions.push(res);
        }
        let loops = closure_loops(b.strands(), &resolutions);
        let term = LaurentPoly::var_pow(a_vars, Var::Q, a_exp).mul(&delta.pow(loops as u32 - 1));
        bracket = bracket.add(&term);
    }
    // writhe normalization: (-A^3)^{-w}
    let w = b.writhe();
    let mut norm = LaurentPoly::var_pow(a_vars, Var::Q, -3 * w);
    if w.rem_euclid(2) == 1 {
        norm = norm.neg();
    }
    let f = bracket.mul(&norm);
    // substitute t = A^{-4}
    let mut v = LaurentPoly::zero(QR);
    for (exps, coeff) in f.terms() {
        let e = exps[0];
        if e % 4 != 0 {
            return Err(OracleError::BadExponents);
        }
        v = v.add(&LaurentPoly::monomial(QR, &[-e / 4], coeff.clone()));
    }
    Ok(v)
}

/// The cyclotomic expansion of the figure-eight coloured Jones polynomial:
///
/// ```text
/// J_N(4_1) = Σ_{k=0}^{N-1} prod_{j=1}^{k} (q^{N-j} - q^{-(N-j)}) (q^{N+j} - q^{-(N+j)})
/// ```
///
/// a classical closed form, used as an any-colour reference value.
pub fn cyclotomic_figure_eight(colour: u16) -> LaurentPoly {
    let n = colour as i64;
    let qp = |k: i64| LaurentPoly::var_pow(QR, Var::Q, k);
    let mut total = LaurentPoly::zero(QR);
    for k in 0..n {
        let mut prod = LaurentPoly::one(QR);
        for j in 1..=k {
            let a = qp(n - j).sub(&qp(-(n - j)));
            let b = qp(n + j).sub(&qp(-(n + j)));
            prod = prod.mul(&a).mul(&b);
        }
        total = total.add(&prod);
    }
    total
}

type Pt = (BigRational, BigRational);

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn pt(x: BigRational, y: BigRational) -> Pt {
    (x, y)
}

/// Height of fork arc `a` (apex `(5, a)`, feet at the punctures `0` and
/// `10`) over abscissa `x`.
fn fork_y(a: i64, x: &BigRational) -> BigRational {
    let five = rat(5, 1);
    let a = BigRational::from(BigInt::from(a));
    if *x <= five {
        a * x / five
    } else {
        a * (rat(10, 1) - x) / five
    }
}

/// Signed crossings of the positive real ray by the closed polyline of
/// vectors `cycle` (the winding number around the origin).
fn winding_of_cycle(cycle: &[Pt]) -> i64 {
    let zero = BigRational::zero();
    let mut total = 0i64;
    for w in cycle.windows(2) {
        let (x0, y0) = &w[0];
        let (x1, y1) = &w[1];
        if y0 == &zero || y1 == &zero {
            assert!(
                (x0 == x1 && y0 == y1) || (y0 != &zero && y1 != &zero),
                "degenerate geometry: waypoint on the real axis"
            );
            continue;
        }
        if y0.is_positive() == y1.is_positive() {
            continue;
        }
        // crossing parameter and abscissa
        let t = y0 / (y0 - y1);
        let xc = x0 + &t * (x1 - x0);
        assert!(!xc.is_zero(), "degenerate geometry: segment through origin");
        if xc.is_positive() {
            total += if y1.is_positive() { 1 } else { -1 };
        }
    }
    total
}

/// All permutations of `0..c` with their inversion counts.
fn permutations(c: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..c).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(c, &mut cur, &mut out);
    out.sort();
    out
}

pub fn inversions(perm: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// The waypoint path of each of the `c` points for the loop attached to a
/// grid permutation σ (fork `a` meets barcode `σ(a)`), 0-based.
///
/// Phases: base point to barcode foot, up the barcode to the intersection,
/// along the fork to its tail, back to the base point. All points move
/// simultaneously; each phase is padded so every point has the same number
/// of linear sub-steps.
fn loop_paths(c: usize, sigma: &[usize]) -> Vec<Vec<Pt>> {
    let mut inverse = vec![0usize; c];
    for (a, &b) in sigma.iter().enumerate() {
        inverse[b] = a;
    }
    let base = |k: i64| pt(rat(6 + 5 * (k + 1), 1), rat(-20 - 3 * (k + 1), 1));
    let bar_x = |b: i64| rat(3 + (b + 1), 1);
    let bar_foot = |b: i64| pt(bar_x(b), rat(-10 - (b + 1), 10));
    let tail_x = |a: i64| rat(30, 100) + rat(a + 1, 100);
    let mut paths = Vec::with_capacity(c);
    for k in 0..c {
        // the point starting at base k runs up barcode k and comes back along
        // fork a = σ^{-1}(k), ending at base a
        let a = inverse[k];
        let xk = bar_x(k as i64);
        let cross = pt(xk.clone(), fork_y(a as i64 + 1, &xk));
        let apex = pt(rat(5, 1), rat(a as i64 + 1, 1));
        let tail = pt(tail_x(a as i64), fork_y(a as i64 + 1, &tail_x(a as i64)));
        let mut path = vec![base(k as i64), bar_foot(k as i64), cross.clone()];
        // along the fork: over the apex when the crossing sits on the right leg
        if xk > rat(5, 1) {
            path.push(apex);
        } else {
            path.push(cross);
        }
        path.push(tail);
        path.push(base(a as i64));
        paths.push(path);
    }
    paths
}

/// The total pairwise half-winding (the deck exponent of the swap generator)
/// of the loop attached to σ, and the total puncture winding (which must
/// vanish: the other local-system variable never appears).
fn loop_winding(c: usize, sigma: &[usize]) -> (i64, i64) {
    if c < 2 {
        return (0, 0);
    }
    let paths = loop_paths(c, sigma);
    let steps = paths[0].len();
    assert!(paths.iter().all(|p| p.len() == steps));
    let mut inverse = vec![0usize; c];
    for (a, &b) in sigma.iter().enumerate() {
        inverse[b] = a;
    }
    // pairwise windings: chain ordered pairs into closed vector cycles under
    // the base permutation k -> σ^{-1}(k)
    let mut pair_total = 0i64;
    let mut visited = std::collections::BTreeSet::new();
    for i in 0..c {
        for j in 0..c {
            if i == j || visited.contains(&(i, j)) {
                continue;
            }
            let mut cycle_vectors: Vec<Pt> = Vec::new();
            let (mut a, mut b) = (i, j);
            loop {
                visited.insert((a, b));
                for s in 0..steps {
                    let (xa, ya) = &paths[a][s];
                    let (xb, yb) = &paths[b][s];
                    cycle_vectors.push(pt(xa - xb, ya - yb));
                }
                a = inverse[a];
                b = inverse[b];
                if (a, b) == (i, j) {
                    break;
                }
                // drop the duplicate junction waypoint
                cycle_vectors.pop();
            }
            pair_total += winding_of_cycle(&cycle_vectors);
        }
    }
    // puncture windings: chain point paths into cycles, count around both
    // punctures (0,0) and (10,0)
    let mut punct_total = 0i64;
    for puncture_x in [0i64, 10] {
        let px = rat(puncture_x, 1);
        let mut visited = std::collections::BTreeSet::new();
        for i in 0..c {
            if visited.contains(&i) {
                continue;
            }
            let mut cycle: Vec<Pt> = Vec::new();
            let mut a = i;
            loop {
                visited.insert(a);
                for s in 0..steps {
                    let (x, y) = &paths[a][s];
                    cycle.push(pt(x - &px, y.clone()));
                }
                a = inverse[a];
                if a == i {
                    break;
                }
                cycle.pop();
            }
            punct_total += winding_of_cycle(&cycle);
        }
    }
    // the total angle swept by all ordered-pair vectors is 2π times the sum
    // of the cycle windings, and the deck exponent is exactly that sum
    (pair_total, punct_total)
}

/// The single-column pairing polynomial computed purely from loop windings
/// in the grid model: one term per permutation of a `c × c` grid.
///
/// The deck generator is oriented so that an elementary counterclockwise
/// swap counts `+1`; the opposite orientation is the conjugate polynomial,
/// and the production pipeline is insensitive to the choice (pairing
/// robustness).
pub fn winding_pairing_polynomial(c: usize) -> LaurentPoly {
    assert!(c <= 4, "grid oracle intended for small parts");
    let mut acc = LaurentPoly::zero(DR);
    for sigma in permutations(c) {
        let (w, punctures) = loop_winding(c, &sigma);
        assert_eq!(
            punctures, 0,
            "grid loops must not wind around punctures (σ = {sigma:?})"
        );
        acc = acc.add(&LaurentPoly::var_pow(DR, Var::D, w));
    }
    acc
}
