//! Multiples of P = (0, 0) on y^2 + y = x^3 - x.

use std::fmt::Write;

use dioph_reduce::elliptic::{infinite_order_sanity, multiples_table, Curve, EcPoint};

pub fn run_example() -> String {
    let mut out = String::new();
    let e = Curve::cremona_37a1();
    let p = EcPoint::from_ints(0, 0);
    writeln!(out, "discriminant = {}", e.discriminant()).unwrap();
    let table = multiples_table(&p, 6, &e).unwrap();
    for (i, q) in table.iter().enumerate() {
        writeln!(out, "{:>2}P = {q}", i as i64 - 6).unwrap();
    }
    writeln!(out, "infinite order: {}", infinite_order_sanity(&p, &e).unwrap()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
