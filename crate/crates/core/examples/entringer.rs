//! The Seidel-Entringer-Arnold triangle, and the same numbers counted as
//! cyclic orders by the content of one arc.

use cyclenum::bijection::entringer_by_content;
use cyclenum::classical::{entringer_triangle, viennot_counts};
use cyclenum::SignWord;

fn main() {
    let rows = entringer_triangle(8);
    for (t, row) in rows.iter().enumerate() {
        let line: Vec<String> = row.values.iter().map(|v| v.to_string()).collect();
        println!("{:>2}: {:<40} sum {}", t + 1, line.join(" "), row.sum());
    }

    // Row 6 again, this time from orders on [7].
    let by_content: Vec<String> = (1..=6)
        .map(|i| entringer_by_content(6, i).unwrap().to_string())
        .collect();
    println!("row 6 by content: {}", by_content.join(" "));

    // Any descent pattern runs through the same recurrence.
    for w in ["+-+-+", "++--+", "-+++-"] {
        let w: SignWord = w.parse().unwrap();
        println!("#S_{w} = {}", viennot_counts(&w));
    }
}
