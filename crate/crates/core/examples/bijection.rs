//! Cyclic orders on `[n+1]` to permutations of `[n]` and back, with the
//! pattern of each side.

use cyclenum::bijection::{forward_f, inverse_f};
use cyclenum::oracle::enumerate_cyclic_orders;
use cyclenum::CyclicOrder;

fn main() {
    let z: CyclicOrder = "1,5,3,4,2".parse().unwrap();
    let sigma = forward_f(&z);
    println!("F({z}) = {sigma}, back to {}", inverse_f(&sigma).unwrap());

    println!(
        "{:<12} {:<8} {:<10} {:<8}",
        "order", "pattern", "perm", "descents"
    );
    for z in enumerate_cyclic_orders(5).unwrap() {
        let sigma = forward_f(&z);
        println!(
            "{:<12} {:<8} {:<10} {:<8}",
            z.to_string(),
            z.cyclic_descent_pattern().to_string(),
            sigma.to_string(),
            sigma.descent_pattern().to_string()
        );
        assert_eq!(inverse_f(&sigma).unwrap(), z);
    }
}
