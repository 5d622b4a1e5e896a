//! Quantum integers, factorials and binomials in `Z[q^±1]`.
//!
//! `[n]_q = (q^n - q^{-n}) / (q - q^{-1})`, `[n]_q! = [1]_q ... [n]_q` and
//! `[n j]_q = [n]_q! / ([n-j]_q! [j]_q!)`, the balanced Gaussian binomial.

use super::{LaurentPoly, RingError, QR};

/// `[n]_q`, extended to negative arguments by `[-n]_q = -[n]_q`.
pub fn quantum_int(n: i64) -> LaurentPoly {
    if n < 0 {
        return quantum_int(-n).neg();
    }
    let mut p = LaurentPoly::zero(QR);
    let mut e = n - 1;
    while e >= -(n - 1) {
        p = p.add(&LaurentPoly::monomial(QR, &[e], 1));
        e -= 2;
    }
    p
}

/// `[n]_q!`.
pub fn quantum_factorial(n: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one(QR);
    for k in 1..=n {
        acc = acc.mul(&quantum_int(k as i64));
    }
    acc
}

/// The Gaussian binomial `[n j]_q`; requires `0 <= j <= n`. The division is
/// exact by construction and performed exactly.
pub fn quantum_binomial(n: u32, j: u32) -> Result<LaurentPoly, RingError> {
    if j > n {
        return Err(RingError::OutOfRange(format!(
            "quantum_binomial requires 0 <= j <= n, got n={n}, j={j}"
        )));
    }
    let num = quantum_factorial(n);
    let den = quantum_factorial(n - j).mul(&quantum_factorial(j));
    num.exact_div(&den)
}
