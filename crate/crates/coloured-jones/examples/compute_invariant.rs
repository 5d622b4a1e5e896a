//! Compute coloured Jones polynomials of some classic knots.
//!
//! Run with: `cargo run --release --example compute_invariant`

use coloured_jones::braid::BraidWord;
use coloured_jones::quantum::jones_rt;

fn main() {
    let knots = [
        ("unknot", BraidWord::parse("", 1).unwrap()),
        ("trefoil", BraidWord::parse("1 1 1", 2).unwrap()),
        ("mirror trefoil", BraidWord::parse("-1 -1 -1", 2).unwrap()),
        ("figure-eight", BraidWord::parse("1 -2 1 -2", 3).unwrap()),
        ("5_1 torus knot", BraidWord::parse("1 1 1 1 1", 2).unwrap()),
    ];
    for (name, braid) in &knots {
        println!("{name}  (closure of \"{braid}\" on {} strands)", braid.strands());
        for colour in 2..=4u16 {
            let j = jones_rt(braid, colour).unwrap();
            println!("  J_{colour} = {j}");
        }
        println!();
    }
}
