//! Reduced Gröbner bases and the unit-ideal test.

use std::fmt::Write;

use dioph_reduce::groebner::{buchberger, is_unit_ideal, BuchbergerConfig, TermOrder};
use dioph_reduce::poly::{parse_poly, VarRegistry};

pub fn run_example() -> String {
    let mut out = String::new();
    let r = VarRegistry::new(["x", "y"]).unwrap();
    let gens = ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"].map(|s| parse_poly(s, &r).unwrap());

    for order in [TermOrder::Grevlex, TermOrder::Lex] {
        let basis = buchberger(&gens, &BuchbergerConfig { order, ..Default::default() }).unwrap();
        let rendered: Vec<String> = basis.generators().iter().map(ToString::to_string).collect();
        writeln!(out, "{:8} {{{}}}", order.name(), rendered.join(", ")).unwrap();
    }

    let circle_and_line = ["x^2 + y^2 - 1", "x - 2"].map(|s| parse_poly(s, &r).unwrap());
    let (unit, _) = is_unit_ideal(&circle_and_line, &BuchbergerConfig::default()).unwrap();
    writeln!(out, "x^2 + y^2 = 1, x = 2 has no complex point: {}", !unit).unwrap();

    let parallel = ["x + y", "x + y + 1"].map(|s| parse_poly(s, &r).unwrap());
    let (unit, _) = is_unit_ideal(&parallel, &BuchbergerConfig::default()).unwrap();
    writeln!(out, "x + y = 0, x + y = -1 is the unit ideal: {unit}").unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
