//! Weight polynomials do not determine Betti numbers, and Betti numbers of
//! the matroid alone do not determine the weight polynomials.

use matroid_gwp::{fixtures, graded_betti_table, gwp_direct};

fn main() {
    let gf5_7_4 = fixtures::gf5_7_4();
    let n7 = fixtures::counterexample_n7();
    println!("same GWPs: {}", gwp_direct(&gf5_7_4) == gwp_direct(&n7));
    print!(
        "[7,4] over GF(5):\n{}",
        graded_betti_table(&gf5_7_4, 0).render()
    );
    print!("N:\n{}", graded_betti_table(&n7, 0).render());

    let (m, n) = fixtures::counterexample_pair_8();
    let (tm, tn) = (graded_betti_table(&m, 0), graded_betti_table(&n, 0));
    println!("same Betti table at level 0: {}", tm == tn);
    print!("{}", tm.render());
    let (pm, pn) = (gwp_direct(&m), gwp_direct(&n));
    for j in 0..pm.len() {
        if pm[j] != pn[j] {
            println!("P_{j}: {}  vs  {}", pm[j], pn[j]);
        }
    }
    // Elongations tell them apart.
    print!(
        "M_1:\n{}N_1:\n{}",
        graded_betti_table(&m, 1).render(),
        graded_betti_table(&n, 1).render()
    );
}
