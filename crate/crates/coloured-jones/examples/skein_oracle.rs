//! At colour 2 the invariant is the classical Jones polynomial: compare the
//! quantum evaluation against an independent Kauffman-bracket state sum.
//!
//! Run with: `cargo run --release --example skein_oracle`

use coloured_jones::braid::{random_knot_braid, BraidWord};
use coloured_jones::oracle::kauffman_jones;
use coloured_jones::quantum::jones_rt;
use coloured_jones::ring::LaurentPoly;

/// Calibrate the variable identification once on the trefoil: find the sign
/// ε and unit monomial u with J_2 = u · V(q^{2ε}).
fn calibrate() -> (i64, LaurentPoly) {
    let trefoil = BraidWord::parse("1 1 1", 2).unwrap();
    let j = jones_rt(&trefoil, 2).unwrap();
    let v = kauffman_jones(&trefoil).unwrap();
    for eps in [1i64, -1] {
        if let Ok(unit) = j.exact_div(&v.scale_exponents(2 * eps)) {
            if unit.as_unit_monomial().is_some() {
                return (eps, unit);
            }
        }
    }
    unreachable!("trefoil must calibrate the substitution");
}

fn main() {
    let (eps, unit) = calibrate();
    println!("frozen substitution: t -> q^{}, unit {unit}\n", 2 * eps);
    let mut knots = vec![
        BraidWord::parse("1 1 1", 2).unwrap(),
        BraidWord::parse("1 -2 1 -2", 3).unwrap(),
    ];
    for seed in 0..4 {
        knots.push(random_knot_braid(3, 6, seed));
    }
    for b in &knots {
        let j = jones_rt(b, 2).unwrap();
        let v = kauffman_jones(b).unwrap();
        let image = v.scale_exponents(2 * eps).mul(&unit);
        println!("braid \"{b}\"");
        println!("  V(t)          = {v}");
        println!("  J_2(q)        = {j}");
        assert_eq!(j, image);
        println!("  substitution agrees");
    }
}
