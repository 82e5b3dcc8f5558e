//! Brute force against the recurrences for every word of one length.
//!
//! ```text
//! cargo run --release --example oracle_check -- 6
//! ```

use cyclenum::count::{count_p, count_q, count_r_alpha};
use cyclenum::oracle::classify_all;
use cyclenum::Sign;

fn main() {
    let len: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let counts = classify_all(len + 2).expect("length within the oracle bound");
    let mut mismatches = 0;
    for (w, e) in &counts.words {
        let p = count_p(w).unwrap();
        let qp = count_q(w, Sign::Plus).unwrap();
        let ok = p == e.p
            && qp == e.q_plus
            && (len < 2 || (1..=6).all(|a| count_r_alpha(w, a).unwrap() == e.r[a - 1]));
        if !ok {
            mismatches += 1;
        }
        println!(
            "{w}  P {:>6}  Q+ {:>6}  R {:?}  {}",
            e.p,
            e.q_plus,
            e.r.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    println!(
        "{} words, {} orders, {mismatches} mismatches",
        counts.words.len(),
        counts.total()
    );
}
