//! Markov moves change the braid word but not the closure, so the invariant
//! must not move either.
//!
//! Run with: `cargo run --release --example braid_moves`

use coloured_jones::braid::{random_knot_braid, BraidWord};
use coloured_jones::quantum::jones_rt;

fn main() {
    let trefoil = BraidWord::parse("1 1 1", 2).unwrap();
    let j = jones_rt(&trefoil, 2).unwrap();
    println!("trefoil \"{trefoil}\":            J_2 = {j}");

    let conj = trefoil.markov_conjugate(1).unwrap();
    println!("conjugated \"{conj}\":    J_2 = {}", jones_rt(&conj, 2).unwrap());

    let stab = trefoil.markov_stabilize(1);
    println!("stabilized \"{stab}\" (B_3): J_2 = {}", jones_rt(&stab, 2).unwrap());

    let destab = trefoil.markov_stabilize(-1);
    println!("neg. stab. \"{destab}\" (B_3): J_2 = {}", jones_rt(&destab, 2).unwrap());

    println!();
    println!("mirror images conjugate the variable:");
    for seed in 0..3u64 {
        let b = random_knot_braid(3, 5, seed);
        let j = jones_rt(&b, 2).unwrap();
        let m = jones_rt(&b.mirror(), 2).unwrap();
        println!("  \"{b}\"  ->  {j}");
        println!("  mirrored -> {m}");
        assert_eq!(m, j.bar());
    }
}
