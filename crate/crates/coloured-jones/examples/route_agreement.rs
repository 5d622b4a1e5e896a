//! The same invariant along four independent routes: direct
//! Reshetikhin-Turaev, the highest-weight-space evaluation, the homological
//! (Lawrence representation / intersection pairing) model, and its
//! two-variable lift.
//!
//! Run with: `cargo run --release --example route_agreement`

use coloured_jones::braid::BraidWord;
use coloured_jones::homological::{jones_global, jones_homological};
use coloured_jones::quantum::{jones_hw, jones_rt};

fn main() {
    let braid = BraidWord::parse("1 -2 1 -2", 3).unwrap();
    println!("figure-eight knot, closure of \"{braid}\" in B_3");
    for colour in 2..=3u16 {
        let rt = jones_rt(&braid, colour).unwrap();
        let hw = jones_hw(&braid, colour).unwrap();
        let hom = jones_homological(&braid, colour).unwrap();
        let glob = jones_global(&braid, colour).unwrap();
        println!("  colour {colour}:");
        println!("    reshetikhin-turaev : {rt}");
        println!("    highest-weight     : {hw}");
        println!("    homological        : {hom}");
        println!("    two-variable lift  : {glob}");
        assert_eq!(rt, hw);
        assert_eq!(rt, hom);
        assert_eq!(rt, glob);
        println!("    all four agree");
    }
}
