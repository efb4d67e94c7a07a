//! Graded Betti tables of a matroid and all of its elongations, with the
//! chain-complex oracle as a spot check.

use matroid_gwp::betti::{betti_sigma, homology_dims_oracle};
use matroid_gwp::{betti_tables, fixtures, GroundSubset};

fn main() {
    let m = fixtures::gf5_7_4();
    for table in betti_tables(&m) {
        print!("{}", table.render());
    }

    // Hochster: β_{i-1,σ} = dim H̃_{|σ|-i-1}(M|σ).
    let sigma = GroundSubset::full(7);
    let h = homology_dims_oracle(&m.restrict(sigma).unwrap().matroid).unwrap();
    for (d, dim) in h.iter() {
        println!("dim H~_{d} = {dim}");
    }
    println!("β_3,E = {}", betti_sigma(&m, 3, sigma));
}
