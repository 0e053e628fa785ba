//! Acceptance criteria, one PASS/FAIL line each. Time limits are wall-clock
//! budgets for the whole criterion.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::Zero;

use dioph_reduce::elliptic::{infinite_order_sanity, on_curve, scalar_mul, Curve, EcPoint, MAZUR_TORSION_BOUND};
use dioph_reduce::groebner::BuchbergerConfig;
use dioph_reduce::lattice::{g_elements_in_box, stabilizer_bruteforce, GElement};
use dioph_reduce::oracle::{check_equivalence, search_integer_zeros, univariate_smoothness_oracle, CheckConfig};
use dioph_reduce::poly::{parse_with_inferred_registry, Polynomial};
use dioph_reduce::reducer::{four_squares_transform, CompileConfig, SolvabilityMode};
use dioph_reduce::smoothing::{build_candidate, is_smooth_affine_hypersurface, smooth_lift, SmoothConfig};

const LIMIT_1: Duration = Duration::from_secs(60);
const LIMIT_2: Duration = Duration::from_secs(300);
const LIMIT_3: Duration = Duration::from_secs(1);
const LIMIT_4: Duration = Duration::from_secs(300);
const LIMIT_5: Duration = Duration::from_secs(600);
const LIMIT_6: Duration = Duration::from_secs(1);
const LIMIT_7: Duration = Duration::from_secs(60);
const LIMIT_8: Duration = Duration::from_secs(60);

const TRANSFER_BOUND: i64 = 5;
const EQUIVALENCE_BOUND: i64 = 6;
const FOUR_SQUARES_BOUND: i64 = 10;

type Check = Result<String, String>;
type Criterion<'a> = (u32, &'static str, Duration, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(text: &str) -> Polynomial {
    parse_with_inferred_registry(text).expect("fixture parses")
}

fn degree(f: &Polynomial) -> u32 {
    f.total_degree().finite().expect("nonzero")
}

fn criterion_1(corpus: &[Polynomial]) -> Check {
    for f in corpus {
        let r = smooth_lift(f, &SmoothConfig::default()).map_err(|e| format!("{f}: {e}"))?;
        ensure(degree(&r.smoothed) == 2 * degree(f), || format!("{f}: deg F = {}", degree(&r.smoothed)))?;
    }
    Ok(format!("deg F = 2 deg f on {} polynomials", corpus.len()))
}

fn criterion_2(corpus: &[Polynomial]) -> Check {
    let mut univariate = 0;
    let mut comparisons = 0;
    for f in corpus {
        let r = smooth_lift(f, &SmoothConfig::default()).map_err(|e| format!("{f}: {e}"))?;
        let gens: Vec<String> = r.certificate.generators().iter().map(ToString::to_string).collect();
        ensure(gens == ["1"], || format!("{f}: certificate {gens:?}"))?;
        if f.registry().arity() != 1 {
            continue;
        }
        univariate += 1;
        for c in 1..=r.c.max(5) {
            let oracle = univariate_smoothness_oracle(f, c).map_err(|e| e.to_string())?;
            let candidate = build_candidate(f, c).map_err(|e| e.to_string())?;
            let groebner =
                is_smooth_affine_hypersurface(&candidate, &BuchbergerConfig::default())
                    .map_err(|e| e.to_string())?
                    .0;
            ensure(oracle == groebner, || format!("{f}, c = {c}: oracle {oracle}, Groebner {groebner}"))?;
            comparisons += 1;
        }
    }
    ensure(univariate > 0, || "corpus has no univariate member".into())?;
    Ok(format!("all certificates {{1}}; {comparisons} oracle comparisons on {univariate} univariate inputs agree"))
}

fn criterion_3() -> Check {
    let singular = p("4*(y^2 - y) + (2*x^3 - 3*x^2)^2");
    let (smooth, _) =
        is_smooth_affine_hypersurface(&singular, &BuchbergerConfig::default()).map_err(|e| e.to_string())?;
    ensure(!smooth, || "c = 4 candidate reported smooth".into())?;
    let f = p("2*x^3 - 3*x^2");
    let c = smooth_lift(&f, &SmoothConfig::default()).map_err(|e| e.to_string())?.c;
    ensure(c == 1, || format!("smooth_lift returned c = {c}"))?;
    let mut bad = Vec::new();
    for c in 1..=10 {
        if !univariate_smoothness_oracle(&f, c).map_err(|e| e.to_string())? {
            bad.push(c);
        }
    }
    ensure(bad == [4], || format!("bad set in [1, 10] is {bad:?}"))?;
    Ok("c = 4 singular, c = 1 returned, bad set {4}".into())
}

/// Integer zeros by direct evaluation over the box, independent of the
/// parallel scanner.
fn naive_zeros(f: &Polynomial, bound: i64) -> Vec<Vec<i64>> {
    let m = f.registry().arity();
    let mut out = Vec::new();
    let mut point = vec![-bound; m];
    loop {
        if f.evaluate_integers(&point).expect("arity").is_zero() {
            out.push(point.clone());
        }
        let Some(i) = (0..m).rev().find(|&i| point[i] < bound) else { break };
        point[i] += 1;
        for v in &mut point[i + 1..] {
            *v = -bound;
        }
    }
    out
}

fn criterion_4(corpus: &[Polynomial]) -> Check {
    let mut zeros_total = 0;
    for f in corpus {
        let r = smooth_lift(f, &SmoothConfig::default()).map_err(|e| format!("{f}: {e}"))?;
        let f_zeros = naive_zeros(f, TRANSFER_BOUND);
        let expected: BTreeSet<Vec<i64>> = f_zeros
            .iter()
            .flat_map(|a| [0, 1].map(|y| a.iter().copied().chain([y]).collect()))
            .collect();
        let found: BTreeSet<Vec<i64>> =
            search_integer_zeros(&r.smoothed, TRANSFER_BOUND).map_err(|e| e.to_string())?.into_iter().collect();
        ensure(found == expected, || format!("{f}: F zeros {found:?} vs expected {expected:?}"))?;
        zeros_total += f_zeros.len();
    }
    Ok(format!("{zeros_total} zeros of f, each matched by exactly (a, 0) and (a, 1); 0 mismatches"))
}

fn criterion_5() -> Check {
    let one = stabilizer_bruteforce(3, 1).map_err(|e| e.to_string())?;
    ensure(one.len() == 18, || format!("bound 1: {} maps", one.len()))?;
    for m in &one {
        ensure(m.as_g_element().is_some() && m.translation.iter().all(|&b| b == 0), || {
            format!("bound 1: map {m:?} is not of G-form with b = 0")
        })?;
    }
    let two = stabilizer_bruteforce(3, 2).map_err(|e| e.to_string())?;
    ensure(two.len() == 50, || format!("bound 2: {} maps", two.len()))?;
    let expected: BTreeSet<GElement> = (-2..=2)
        .flat_map(|a1| (-2..=2).flat_map(move |a2| [1i8, -1].map(|eps| GElement { a: vec![a1, a2], eps })))
        .collect();
    let found: BTreeSet<GElement> = two.iter().filter_map(|m| m.as_g_element()).collect();
    ensure(found == expected && found.len() == two.len(), || "bound 2: map set differs from G box".into())?;
    ensure(g_elements_in_box(3, 2) == two, || "bound 2: disagrees with g_elements_in_box".into())?;
    Ok("18 maps at bound 1 (b = 0), 50 G-maps at bound 2".into())
}

fn criterion_6() -> Check {
    let e = Curve::cremona_37a1();
    let pt = EcPoint::from_ints(0, 0);
    let mul = |k| scalar_mul(k, &pt, &e).map_err(|err| err.to_string());
    ensure(mul(2)? == EcPoint::from_ints(1, 0), || "2P != (1, 0)".into())?;
    ensure(mul(3)? == EcPoint::from_ints(-1, -1), || "3P != (-1, -1)".into())?;
    ensure(infinite_order_sanity(&pt, &e).map_err(|err| err.to_string())?, || "sanity check failed".into())?;
    let bound = MAZUR_TORSION_BOUND;
    for k in -bound..=bound {
        let q = mul(k)?;
        ensure(on_curve(&q, &e), || format!("{k}P = {q} is off the curve"))?;
    }
    Ok(format!("2P = (1, 0), 3P = (-1, -1), infinite order, kP on curve for |k| <= {bound}"))
}

fn criterion_7() -> Check {
    let mut witness_counts = Vec::new();
    for text in ["t1 - 5", "t1^2 + 1", "t1^2 - 4", "t1 + t2 - 3", "2*x^3 - 3*x^2"] {
        let r = check_equivalence(&p(text), EQUIVALENCE_BOUND, &CheckConfig::default())
            .map_err(|e| format!("{text}: {e}"))?;
        ensure(r.consistent, || format!("{text}: inconsistent"))?;
        witness_counts.push(format!("{text}: {}", r.sigma_witnesses.len()));
        if text == "t1 - 5" {
            ensure(r.sigma_witnesses.len() == 4, || format!("t1 - 5: {} witnesses", r.sigma_witnesses.len()))?;
        }
    }
    Ok(format!("consistent at B = {EQUIVALENCE_BOUND}; witnesses [{}]", witness_counts.join(", ")))
}

fn criterion_8(corpus: &[Polynomial]) -> Check {
    for f in corpus {
        let g = four_squares_transform(f).map_err(|e| e.to_string())?;
        let (m, d) = (f.registry().arity(), degree(f));
        ensure(g.registry().arity() == 4 * m && degree(&g) == 2 * d, || {
            format!("{f}: (m, d) = ({m}, {d}) became ({}, {})", g.registry().arity(), degree(&g))
        })?;
    }

    let naturals = CheckConfig { compile: CompileConfig { mode: SolvabilityMode::Naturals, ..Default::default() }, ..Default::default() };
    let r = check_equivalence(&p("u - 3"), 1, &naturals).map_err(|e| format!("u - 3: {e}"))?;
    ensure(r.f_zeros.contains(&vec![1, 1, 1, 0]), || "u - 3: (1, 1, 1, 0) is not a zero".into())?;
    let witness = GElement { a: vec![1, 1, 1, 0, 0], eps: 1 };
    ensure(r.sigma_witnesses.contains(&witness), || "u - 3: no witness over (1, 1, 1, 0)".into())?;

    let r = check_equivalence(&p("u + 1"), FOUR_SQUARES_BOUND, &naturals).map_err(|e| format!("u + 1: {e}"))?;
    ensure(r.f_zeros.is_empty() && r.sigma_witnesses.is_empty(), || "u + 1: zero found".into())?;
    Ok(format!(
        "(m, d) -> (4m, 2d) on {} polynomials; u - 3 has witness (1, 1, 1, 0); u + 1 has none at B = {FOUR_SQUARES_BOUND}",
        corpus.len()
    ))
}

fn criterion_9() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_dioph-reduce"))
            .args(["compile", "--f", "t1^2 - 2*t2 + 7"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || "compile failed".into())?;
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || "outputs differ".into())?;
    Ok(format!("two compile runs byte-identical ({} bytes)", a.stdout.len()))
}

fn main() {
    let corpus = common::corpus();
    let criteria: Vec<Criterion> = vec![
        (1, "degree law", LIMIT_1, Box::new(|| criterion_1(&corpus))),
        (2, "smoothing certificate", LIMIT_2, Box::new(|| criterion_2(&corpus))),
        (3, "known singular case", LIMIT_3, Box::new(criterion_3)),
        (4, "solution transfer", LIMIT_4, Box::new(|| criterion_4(&corpus))),
        (5, "lattice stabilizer", LIMIT_5, Box::new(criterion_5)),
        (6, "elliptic group law", LIMIT_6, Box::new(criterion_6)),
        (7, "end-to-end equivalence", LIMIT_7, Box::new(criterion_7)),
        (8, "four-squares transform", LIMIT_8, Box::new(|| criterion_8(&corpus))),
        (9, "determinism", Duration::MAX, Box::new(criterion_9)),
    ];
    let mut failures = 0;
    for (id, name, limit, check) in &criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *limit => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:.0?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {id} ({name}): PASS: {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failures += 1;
                println!("criterion {id} ({name}): FAIL: {why} [{elapsed:.2?}]");
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
