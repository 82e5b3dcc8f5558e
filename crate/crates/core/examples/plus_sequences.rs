//! The all-plus sequences: `#𝒫_{+^n}`, `#𝒬^+_{+^n}` and `#ℛ^{+,+}_{+^n}`,
//! next to the Euler numbers from the boustrophedon.
//!
//! ```text
//! cargo run --example plus_sequences -- 15
//! ```

use cyclenum::classical::euler_numbers;
use cyclenum::count::plus_rows;

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    let euler = euler_numbers(max_n + 1);
    println!(
        "{:>3} {:>24} {:>24} {:>24} {:>24}",
        "n", "P", "Q+", "R++", "E_(n+1)"
    );
    for row in plus_rows(max_n) {
        println!(
            "{:>3} {:>24} {:>24} {:>24} {:>24}",
            row.n, row.p, row.q_plus, row.r_plus_plus, euler[row.n]
        );
        assert_eq!(row.p, euler[row.n]);
    }
}
