//! Both sides of the equivalence, searched within a box.

use std::fmt::Write;

use dioph_reduce::oracle::{check_equivalence, CheckConfig};
use dioph_reduce::poly::parse_with_inferred_registry;

pub fn run_example() -> String {
    let mut out = String::new();
    for text in ["t1 - 5", "t1^2 + 1", "t1^2 - 4"] {
        let f = parse_with_inferred_registry(text).unwrap();
        let report = check_equivalence(&f, 6, &CheckConfig::default()).unwrap();
        writeln!(out, "{text}: {}", report.verdict).unwrap();
        writeln!(out, "  zeros of f: {:?}", report.f_zeros).unwrap();
        for g in &report.sigma_witnesses {
            writeln!(out, "  sigma: a = {:?}, eps = {:+}", g.a, g.eps).unwrap();
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
