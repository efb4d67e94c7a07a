//! Samples vector matroids of random matrices and runs the same cross-route
//! checks as the `verify` command.

use matroid_gwp::sample::random_small_matroid;
use matroid_gwp::{
    betti_tables, enumerator, gwp_complement_form, gwp_direct, gwp_from_betti, tutte,
    tutte_from_enumerator,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..10 {
        let m = random_small_matroid(&mut rng, 8);
        let direct = gwp_direct(&m);
        let routes = gwp_complement_form(&m) == direct
            && gwp_from_betti(&betti_tables(&m)).as_ref() == Ok(&direct);
        let tutte_ok = tutte_from_enumerator(&enumerator(&m), m.ground_size(), m.rank()).as_ref()
            == Ok(&tutte(&m));
        println!(
            "n={} r={} bases={:3}  routes agree: {routes}  tutte round-trip: {tutte_ok}",
            m.ground_size(),
            m.rank(),
            m.bases().len()
        );
    }
}
