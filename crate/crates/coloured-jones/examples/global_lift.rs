//! The two-variable lift: the homology classes exist over Q(s,q), where the
//! colour only enters through the number of configuration points, and the
//! specialisation s -> q^{N-1} recovers the one-variable classes.
//!
//! Run with: `cargo run --release --example global_lift`

use coloured_jones::braid::BraidWord;
use coloured_jones::homological::{
    class_f0, class_f_global, class_g, class_g_global, jones_global, specialize_class,
};

fn main() {
    let (n, colour) = (1usize, 3u16);
    let f_global = class_f_global(n, colour).unwrap();
    let g_global = class_g_global(n, colour).unwrap();
    println!("two-variable classes at n = {n}, colour = {colour}:");
    for (e, c) in f_global.partitions.iter().zip(&f_global.coeffs) {
        println!("  multifork {e}: {c}");
    }
    for (e, c) in g_global.partitions.iter().zip(&g_global.coeffs) {
        println!("  barcode   {e}: {c}");
    }

    let f = class_f0(n, colour).unwrap();
    let g = class_g(n, colour).unwrap();
    let fs = specialize_class(&f_global, colour).unwrap();
    let gs = specialize_class(&g_global, colour).unwrap();
    assert_eq!(f.coeffs, fs.coeffs);
    assert_eq!(g.coeffs, gs.coeffs);
    println!("specialisation s -> q^{} reproduces the one-variable classes", colour - 1);

    let fig8 = BraidWord::parse("1 -2 1 -2", 3).unwrap();
    println!(
        "\ntwo-variable route on the figure-eight, colour 2: {}",
        jones_global(&fig8, 2).unwrap()
    );
}
