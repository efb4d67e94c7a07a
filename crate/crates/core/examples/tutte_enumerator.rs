//! The enumerator W(X,Y,Z) and the Tutte polynomial determine each other.
//! Shown on the Vamos matroid, which no code realizes.

use matroid_gwp::{enumerator, enumerator_from_tutte, fixtures, tutte, tutte_from_enumerator};

fn main() {
    let m = fixtures::vamos();
    let (n, k) = (m.ground_size(), m.rank());

    let w = enumerator(&m);
    let t = tutte(&m);
    println!("W(X,Y,Z) = {w}");
    println!("t(X,Y)   = {t}");

    let t_back = tutte_from_enumerator(&w, n, k).unwrap();
    let w_back = enumerator_from_tutte(&t, n, k).unwrap();
    println!("t from W matches: {}", t_back == t);
    println!("W from t matches: {}", w_back == w);

    println!("t(1,1) = {} bases", t.eval([1, 1]));
    println!("t(2,1) = {} independent sets", t.eval([2, 1]));
    println!("t(2,2) = {} subsets", t.eval([2, 2]));
    println!(
        "dual has t(Y,X): {}",
        tutte(&m.dual()) == t.swap_variables()
    );
}
