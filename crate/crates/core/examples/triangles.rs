//! Evolution of the two triangles `T^+_w`, `T^-_w` letter by letter.
//!
//! ```text
//! cargo run --example triangles -- ++-+
//! ```

use cyclenum::dump::pretty_triangle;
use cyclenum::engine::QEvolution;
use cyclenum::phi::PhiKernel;
use cyclenum::SignWord;

fn main() {
    let word: SignWord = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "++++".into())
        .parse()
        .expect("a word over + and -");
    let signs = word.signs();
    let Some((&first, rest)) = signs.split_first() else {
        eprintln!("empty word");
        return;
    };
    let mut q = QEvolution::new(first, PhiKernel::Prefix);
    let show = |q: &QEvolution| {
        println!("w = {}", q.word());
        println!(
            "T+ (sum {}):\n{}",
            q.plus().sum(),
            pretty_triangle(q.plus())
        );
        println!(
            "T- (sum {}):\n{}",
            q.minus().sum(),
            pretty_triangle(q.minus())
        );
    };
    show(&q);
    for &s in rest {
        q.push(s);
        show(&q);
    }
}
