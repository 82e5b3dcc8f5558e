//! Exact densities of the chain classes for growing `n`, as fractions and
//! decimals.

use cyclenum::density::{densities, is_partition};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(12);
    for row in densities(max_n, 12) {
        assert!(is_partition(&row));
        println!("n = {:>3}  {}", row.n, row.decimals.join("  "));
        if row.n <= 5 {
            let exact: Vec<String> = row.p.iter().map(|r| r.to_string()).collect();
            println!("         {}", exact.join("  "));
        }
    }
}
