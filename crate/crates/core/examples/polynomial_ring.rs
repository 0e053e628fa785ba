//! Parsing, rendering, homogenization, derivatives and resultants.

use std::fmt::Write;

use dioph_reduce::poly::{parse_with_inferred_registry, resultant_univariate};

pub fn run_example() -> String {
    let mut out = String::new();
    let f = parse_with_inferred_registry("(x + 2*y)^2 - 3*x + 1/2").unwrap();
    writeln!(out, "f            = {f}").unwrap();
    writeln!(out, "deg f        = {}", f.total_degree().finite().unwrap()).unwrap();

    let h = f.homogenize("w").unwrap();
    writeln!(out, "homogenized  = {h}").unwrap();
    writeln!(out, "back         = {}", h.dehomogenize("w").unwrap()).unwrap();
    writeln!(out, "df/dy        = {}", f.partial_derivative("y").unwrap()).unwrap();

    let p = parse_with_inferred_registry("x^2 - 4").unwrap();
    let q = parse_with_inferred_registry("x - 5").unwrap();
    writeln!(out, "Res(x^2 - 4, x - 5) = {}", resultant_univariate(&p, &q, "x").unwrap()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
