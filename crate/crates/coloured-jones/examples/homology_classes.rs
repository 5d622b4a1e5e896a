//! The two homology classes behind the intersection-pairing model: the
//! multifork class carrying the coevaluation and the barcode class dual to
//! the evaluation.
//!
//! Run with: `cargo run --release --example homology_classes`

use coloured_jones::braid::BraidWord;
use coloured_jones::homological::{class_f0, class_g, jones_homological, pair};
use coloured_jones::ring::RingHom;

fn main() {
    for (n, colour) in [(1usize, 2u16), (1, 3), (2, 2)] {
        let f = class_f0(n, colour).unwrap();
        let g = class_g(n, colour).unwrap();
        println!(
            "n = {n}, colour = {colour}  (strands {}, weight {}, rank {})",
            f.strands,
            f.weight,
            f.coeffs.len()
        );
        for (e, c) in f.partitions.iter().zip(&f.coeffs) {
            if !c.is_zero() {
                println!("  multifork {e}: {c}");
            }
        }
        for (e, c) in g.partitions.iter().zip(&g.coeffs) {
            if !c.is_zero() {
                println!("  barcode   {e}: {c}");
            }
        }
        let alpha = RingHom::AlphaLambda(colour as i64 - 1);
        let value = pair(&f, &g, &alpha).unwrap();
        println!("  <F, G> = {value}");
        println!();
    }

    let trefoil = BraidWord::parse("1 1 1", 2).unwrap();
    println!(
        "homological route on the trefoil, colour 2: {}",
        jones_homological(&trefoil, 2).unwrap()
    );
}
