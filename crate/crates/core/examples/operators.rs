//! The three evaluations of `Φ_{a,b,c}` on a small polynomial.

use cyclenum::phi::{phi, phi_index_form, phi_prefix};
use cyclenum::poly::HomoPoly;

fn main() {
    // 2*X1*X3 + X2^2 + 5*X3^2
    let p = HomoPoly::from_terms(
        3,
        2,
        [
            (vec![1, 0, 1], 2u32),
            (vec![0, 2, 0], 1),
            (vec![0, 0, 2], 5),
        ],
    )
    .unwrap();
    println!("P = {p:?}");
    for (a, b, c) in [(1, 1, 3), (2, 2, 1), (3, 1, 2), (2, 1, 3)] {
        let out = phi(a, b, c, &p).unwrap();
        assert_eq!(out, phi_index_form(a, b, c, &p).unwrap());
        assert_eq!(out, phi_prefix(a, b, c, &p).unwrap());
        println!("Φ({a},{b},{c}) P = {out:?}");
    }
}
