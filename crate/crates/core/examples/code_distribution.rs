//! Weight distributions of a code over extension fields, counted word by
//! word and compared with the weight polynomials of its parity-check
//! matroid.
//!
//!     cargo run --release --example code_distribution

use matroid_gwp::fixtures;

fn main() {
    for (name, code) in [
        ("[7,4] over GF(5)", fixtures::gf5_7_4_code()),
        ("simplex [7,3] over GF(2)", fixtures::simplex_2_3_code()),
        ("[5,2] MDS over GF(4)", fixtures::rs_gf4_code()),
    ] {
        println!("{name}");
        let polys = code.extended_weight_polynomials().unwrap();
        let q = code.field().order() as i128;
        for m in 1..=3 {
            let Ok(dist) = code.brute_force_distribution(m) else {
                println!("  m={m}: over the enumeration budget");
                continue;
            };
            let big_q = q.pow(m);
            let agree = polys
                .iter()
                .zip(&dist.counts)
                .all(|(p, &c)| p.eval(big_q) == c as i128);
            println!("  m={m}: {:?}  polynomials agree: {agree}", dist.counts);
        }
    }
}
