//! JSON dumps of refined arrays and reading them back.

use cyclenum::dump::ArrayDump;
use cyclenum::engine::{evolve_q, evolve_r};
use cyclenum::{Sign, SignWord};

fn main() {
    let w: SignWord = "++-+".parse().unwrap();
    let (plus, _) = evolve_q(&w).unwrap();
    let dump = ArrayDump::triangle(&w, Sign::Plus, &plus);
    let text = dump.to_json();
    println!("{text}");
    let back = ArrayDump::from_json(&text).unwrap();
    assert_eq!(back.to_poly().unwrap(), plus);
    assert_eq!(back.to_json(), text);

    let r = evolve_r(&w).unwrap();
    println!("{}", ArrayDump::tetrahedron(&w, 3, &r[2]).to_json());
}
