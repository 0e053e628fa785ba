//! The lattice set S and the affine maps preserving it.

use std::fmt::Write;

use dioph_reduce::lattice::{build_s, stabilizer_bruteforce};

pub fn run_example() -> String {
    let mut out = String::new();
    writeln!(out, "S for n = 3: {:?}", build_s(3).unwrap().points).unwrap();
    for bound in [1, 2] {
        let maps = stabilizer_bruteforce(3, bound).unwrap();
        writeln!(out, "entries in [-{bound}, {bound}]: {} maps stabilize S", maps.len()).unwrap();
    }
    let maps = stabilizer_bruteforce(3, 1).unwrap();
    for m in maps.iter().take(3) {
        let g = m.as_g_element().unwrap();
        writeln!(out, "  a = {:?}, eps = {:+}", g.a, g.eps).unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
