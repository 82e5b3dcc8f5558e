//! The six tetrahedra `R^{(α)}_w` for one word, their sums, and the sign
//! classes they add up to.

use cyclenum::dump::pretty_tetrahedron;
use cyclenum::engine::{evolve_r, r_sign_class_sum};
use cyclenum::{Sign, SignWord};

fn main() {
    let word: SignWord = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "+++-".into())
        .parse()
        .unwrap();
    let polys = evolve_r(&word).expect("word of length at least 2");
    for (a, poly) in polys.iter().enumerate() {
        println!("alpha = {} (sum {})", a + 1, poly.sum());
        print!("{}", pretty_tetrahedron(poly));
    }
    let sums: [_; 6] = std::array::from_fn(|a| polys[a].sum());
    for (e1, e2) in [
        (Sign::Plus, Sign::Plus),
        (Sign::Plus, Sign::Minus),
        (Sign::Minus, Sign::Plus),
        (Sign::Minus, Sign::Minus),
    ] {
        println!(
            "R^{{{e1},{e2}}}_{word} = {}",
            r_sign_class_sum(&sums, e1, e2)
        );
    }
}
