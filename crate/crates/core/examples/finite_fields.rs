use matroid_gwp::FiniteField;

fn main() {
    for (p, m) in [(2, 2), (2, 3), (5, 2)] {
        let f = FiniteField::new(p, m).unwrap();
        println!(
            "GF({}) modulus coefficients (low to high): {:?}",
            f.order(),
            f.modulus()
        );
        let g = (2..f.order())
            .find(|&a| (1..f.order() - 1).all(|e| f.pow(a, e as u64) != 1))
            .unwrap();
        println!("  generator {} = {}", g, f.format_poly(g));
    }
    let small = FiniteField::new(2, 2).unwrap();
    let big = FiniteField::new(2, 4).unwrap();
    let embed = big.embedding_of(&small).unwrap();
    println!("GF(4) in GF(16): {embed:?}");
}
