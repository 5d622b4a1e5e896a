//! The Lawrence representation matrices in the multifork basis, and the
//! diagonal polynomials of the graded intersection pairing.
//!
//! Run with: `cargo run --release --example lawrence_tables`

use coloured_jones::homological::pairing_polynomial;
use coloured_jones::hwspace::{enumerate_partitions, lawrence_matrix, lawrence_matrix_generic};

fn main() {
    let (strands, m, colour) = (3usize, 2u32, 2u16);
    let parts = enumerate_partitions(strands, m);
    println!("multifork basis of E_{{{strands},{m}}}: {:?}", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>());

    for letter in [1i32, 2] {
        let mat = lawrence_matrix(letter, strands, m, colour).unwrap();
        println!("\nσ_{letter} at colour {colour} (entries in Z[q^±]):");
        for row in mat.to_json().as_array().unwrap() {
            println!("  {row}");
        }
    }

    let gen = lawrence_matrix_generic(1, strands, m).unwrap();
    println!("\nσ_1 generic (entries in Z[q^±, s^±]):");
    for row in gen.to_json().as_array().unwrap() {
        println!("  {row}");
    }

    println!("\npairing polynomials over E_{{4,2}} (variable d):");
    for e in enumerate_partitions(4, 2) {
        println!("  p_{e} = {}", pairing_polynomial(&e));
    }
}
