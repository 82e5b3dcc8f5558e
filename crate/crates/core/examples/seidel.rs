//! A Seidel triangle sequence driven by the Entringer triangle.

use cyclenum::classical::{entringer_triangle, seidel_sequence};
use cyclenum::dump::pretty_triangle;

fn main() {
    let h: Vec<Vec<_>> = entringer_triangle(6)
        .into_iter()
        .map(|r| r.values)
        .collect();
    for n in 1..=h.len() {
        let a = seidel_sequence(&h, n).unwrap();
        println!("A_{n} (sum {}):\n{}", a.sum(), pretty_triangle(&a));
    }
}
