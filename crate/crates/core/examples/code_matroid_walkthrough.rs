//! Builds the parity-check matroid of a [7,4] code over GF(5) from its matrix
//! and prints bases, circuits and a few ranks.
//!
//!     cargo run --example code_matroid_walkthrough

use matroid_gwp::{fixtures, GroundSubset};

fn main() {
    let h = fixtures::gf5_7_4_parity_check();
    print!("H over GF({}):\n{}", h.field().order(), h.to_text());

    let m = h.vector_matroid().expect("seven columns");
    println!(
        "rank {} on {} elements, {} bases",
        m.rank(),
        m.ground_size(),
        m.bases().len()
    );
    let bases: Vec<String> = m.bases().iter().map(|b| b.to_string()).collect();
    println!("bases: {}", bases.join(" "));

    let circuits: Vec<String> = m.circuits().iter().map(|c| c.to_string()).collect();
    println!("circuits: {}", circuits.join(" "));

    for labels in [&[5, 6][..], &[1, 3, 4], &[1, 2, 3, 4, 5]] {
        let s = GroundSubset::from_labels(7, labels.iter().copied()).unwrap();
        let p = m.profile(s).unwrap();
        println!("r({s}) = {}, n({s}) = {}", p.rank, p.nullity);
    }

    let dual = m.dual();
    println!("dual: rank {}, {} bases", dual.rank(), dual.bases().len());
    println!("reduced Euler characteristic: {}", m.euler_characteristic());
}
