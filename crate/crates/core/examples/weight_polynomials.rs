//! Generalized weight polynomials by every route the crate implements.

use matroid_gwp::weight::gwp_elongation_shift;
use matroid_gwp::{
    betti_tables, fixtures, gwp_complement_form, gwp_direct, gwp_from_betti, gwp_naive,
};

fn main() {
    let m = fixtures::gf5_7_4();
    let direct = gwp_direct(&m);
    for (j, p) in direct.iter().enumerate() {
        println!("P_{j}(Z) = {p}");
    }

    let naive = gwp_naive(&m).unwrap();
    let complement = gwp_complement_form(&m);
    let betti = gwp_from_betti(&betti_tables(&m)).unwrap();
    println!("naive agrees: {}", naive == direct);
    println!("complement form agrees: {}", complement == direct);
    println!("Betti route agrees: {}", betti == direct);

    // The GWPs of M_1 come from those of M by folding the constant term.
    let m1 = gwp_direct(&m.elongate(1).unwrap());
    for (j, (p, q)) in direct.iter().zip(&m1).enumerate().skip(4) {
        println!("P_{j}: {p}  ->  {}  (M_1 has {q})", gwp_elongation_shift(p));
    }
}
