//! Higher weight hierarchy from the nullity function, the GWP degrees and
//! the Betti tables, and how it moves under elongation.

use matroid_gwp::weight::{
    higher_weights_by_nullity, higher_weights_from_betti, higher_weights_from_gwp,
};
use matroid_gwp::{betti_tables, fixtures, gwp_direct};

fn main() {
    let m = fixtures::simplex_2_3_code().parity_matroid().unwrap();
    println!("nullity:    {}", higher_weights_by_nullity(&m));
    println!(
        "GWP degree: {}",
        higher_weights_from_gwp(&gwp_direct(&m)).unwrap()
    );
    println!(
        "Betti:      {}",
        higher_weights_from_betti(&betti_tables(&m)).unwrap()
    );

    let m = fixtures::gf5_7_4();
    for l in 0..=m.corank() {
        let e = m.elongate(l).unwrap();
        println!("d(M_{l}) = {}", higher_weights_by_nullity(&e));
    }
}
