//! Searching for the least c making c(y^2 - y) + f^2 smooth.

use std::fmt::Write;

use dioph_reduce::oracle::univariate_smoothness_oracle;
use dioph_reduce::poly::parse_with_inferred_registry;
use dioph_reduce::smoothing::{smooth_lift, SmoothConfig};

pub fn run_example() -> String {
    let mut out = String::new();
    for text in ["t1 - 5", "2*x^2 + 2*x", "2*x^3 - 3*x^2", "t1*t2 - 6"] {
        let f = parse_with_inferred_registry(text).unwrap();
        let r = smooth_lift(&f, &SmoothConfig::default()).unwrap();
        let rejected: Vec<u64> = r.rejected.iter().map(|rc| rc.c).collect();
        writeln!(
            out,
            "f = {f}: c = {}, rejected {rejected:?}, F = {}, deg {} -> {}",
            r.c, r.smoothed, r.degree_in, r.degree_out
        )
        .unwrap();
    }

    let f = parse_with_inferred_registry("2*x^3 - 3*x^2").unwrap();
    let bad: Vec<u64> = (1..=10).filter(|&c| !univariate_smoothness_oracle(&f, c).unwrap()).collect();
    writeln!(out, "singular c in [1, 10] for {f}: {bad:?}").unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
