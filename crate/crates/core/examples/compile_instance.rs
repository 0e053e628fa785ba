//! Compiling a Diophantine equation into an instance descriptor.

use std::fmt::Write;

use dioph_reduce::poly::parse_with_inferred_registry;
use dioph_reduce::reducer::{compile_default, four_squares_transform, CompileConfig, InstanceDescriptor, SolvabilityMode};

pub fn run_example() -> String {
    let mut out = String::new();
    let f = parse_with_inferred_registry("t1 - 5").unwrap();
    let desc = compile_default(&f, &CompileConfig::default()).unwrap();
    writeln!(out, "n = {}, c = {}", desc.n, desc.smoothing.c).unwrap();
    writeln!(out, "Z: {} = 0 over {:?}", desc.z_equation, desc.z_equation.registry().names()).unwrap();
    writeln!(out, "S = {:?}", desc.s.points).unwrap();
    writeln!(out, "x = {}", desc.base_point_x).unwrap();

    let json = desc.to_json();
    let back = InstanceDescriptor::from_json(&json).unwrap();
    writeln!(out, "JSON round trip: {} bytes, equal = {}", json.len(), back == desc).unwrap();

    let u = parse_with_inferred_registry("u - 3").unwrap();
    writeln!(out, "four squares of {u}: {}", four_squares_transform(&u).unwrap()).unwrap();
    let naturals = CompileConfig { mode: SolvabilityMode::Naturals, ..Default::default() };
    let desc = compile_default(&u, &naturals).unwrap();
    writeln!(out, "N-mode instance: n = {}, deg Z = {}", desc.n, desc.z_equation.total_degree().finite().unwrap())
        .unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
