//! Densities of the chain classes inside `𝒫_{+^n}` against their
//! conjectured limits.
//!
//! ```text
//! cargo run --release --example conjecture -- 50
//! ```

use cyclenum::density::conjecture_report;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(50);
    let start = std::time::Instant::now();
    match conjecture_report(n) {
        Some(report) => {
            print!("{report}");
            println!(
                "max deviation {:.3e} ({:.2?})",
                report.max_deviation(),
                start.elapsed()
            );
        }
        None => eprintln!("n must be at least 2"),
    }
}
