//! Bounded brute-force checks of the reduction.
//!
//! A bounded search can find zeros and automorphism witnesses but can never
//! certify that none exist; reports say "no witness within bound B".

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::GElement;
use crate::poly::{resultant_univariate, Polynomial, Rational};
use crate::reducer::{compile_default, sigma_image, CompileConfig, InstanceDescriptor, SolvabilityMode};
use crate::serial::SCHEMA_VERSION;

pub const DEFAULT_BOUND: i64 = 10;
pub const DEFAULT_EVAL_CAP: u64 = 100_000_000;

/// Evaluates an integer multiple of a polynomial at integer points, in
/// `i128` while it fits and in `BigInt` otherwise.
struct ZeroTester {
    terms: Vec<(Vec<u32>, BigInt, Option<i128>)>,
}

impl ZeroTester {
    fn new(p: &Polynomial) -> Self {
        let scale = Rational::from_integer(p.denominator_lcm());
        let terms = p
            .terms()
            .map(|(m, c)| {
                let c = (c * &scale).to_integer();
                let small = c.to_i128();
                (m.exponents().to_vec(), c, small)
            })
            .collect();
        ZeroTester { terms }
    }

    fn is_zero_at(&self, point: &[i64]) -> bool {
        match self.eval_small(point) {
            Some(v) => v == 0,
            None => self.eval_big(point).is_zero(),
        }
    }

    fn eval_small(&self, point: &[i64]) -> Option<i128> {
        let mut acc: i128 = 0;
        for (exps, _, coeff) in &self.terms {
            let mut term = (*coeff)?;
            for (&x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term = term.checked_mul((x as i128).checked_pow(e)?)?;
                }
            }
            acc = acc.checked_add(term)?;
        }
        Some(acc)
    }

    fn eval_big(&self, point: &[i64]) -> BigInt {
        self.terms
            .iter()
            .map(|(exps, c, _)| {
                exps.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, &x)| acc * num_traits::pow(BigInt::from(x), e as usize))
            })
            .sum()
    }
}

fn box_size(bound: i64, dim: usize) -> Option<u64> {
    let width = (2 * bound + 1) as u64;
    (0..dim).try_fold(1u64, |acc, _| acc.checked_mul(width))
}

/// All points of `[-bound, bound]^dim` satisfying `keep`, in lexicographic
/// order.
fn scan_box<F>(bound: i64, dim: usize, keep: F) -> Vec<Vec<i64>>
where
    F: Fn(&[i64]) -> bool + Sync,
{
    if dim == 0 {
        return if keep(&[]) { vec![Vec::new()] } else { Vec::new() };
    }
    (-bound..=bound)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut found = Vec::new();
            let mut point = vec![-bound; dim];
            point[0] = first;
            loop {
                if keep(&point) {
                    found.push(point.clone());
                }
                // odometer over coordinates 1..dim
                let mut i = dim - 1;
                loop {
                    if i == 0 {
                        return found;
                    }
                    if point[i] < bound {
                        point[i] += 1;
                        break;
                    }
                    point[i] = -bound;
                    i -= 1;
                }
            }
        })
        .collect()
}

pub fn search_integer_zeros(f: &Polynomial, bound: i64) -> Result<Vec<Vec<i64>>> {
    search_integer_zeros_capped(f, bound, DEFAULT_EVAL_CAP)
}

/// Integer zeros of `f` in `[-bound, bound]^m`, lexicographically ordered.
pub fn search_integer_zeros_capped(f: &Polynomial, bound: i64, cap: u64) -> Result<Vec<Vec<i64>>> {
    if bound < 0 {
        return Err(Error::InvalidArgument("bound must be nonnegative".into()));
    }
    let m = f.registry().arity();
    match box_size(bound, m) {
        Some(size) if size <= cap => {}
        _ => return Err(Error::cap(format!("zero search over [-{bound},{bound}]^{m}"), cap)),
    }
    let tester = ZeroTester::new(f);
    Ok(scan_box(bound, m, |pt| tester.is_zero_at(pt)))
}

pub fn search_automorphisms(desc: &InstanceDescriptor, bound: i64) -> Result<Vec<GElement>> {
    search_automorphisms_capped(desc, bound, DEFAULT_EVAL_CAP)
}

/// Every `g` in `G` with `|a_i| <= bound` and `σx ∈ Z`: first `eps = +1`,
/// then `eps = -1`, each in lexicographic order of `a`.
pub fn search_automorphisms_capped(desc: &InstanceDescriptor, bound: i64, cap: u64) -> Result<Vec<GElement>> {
    if bound < 0 {
        return Err(Error::InvalidArgument("bound must be nonnegative".into()));
    }
    let free = desc.n - 1;
    match box_size(bound, free).and_then(|s| s.checked_mul(2)) {
        Some(size) if size <= cap => {}
        _ => return Err(Error::cap(format!("automorphism search over [-{bound},{bound}]^{free} x {{±1}}"), cap)),
    }
    let tester = ZeroTester::new(&desc.z_equation);
    let mut out = Vec::new();
    for eps in [1i8, -1] {
        let hits = scan_box(bound, free, |a| {
            let mut pt = a.to_vec();
            pt.push(i64::from(eps));
            tester.is_zero_at(&pt)
        });
        out.extend(hits.into_iter().map(|a| GElement { a, eps }));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRef {
    pub f: String,
    pub smoothing_input: String,
    #[serde(rename = "Z_equation")]
    pub z_equation: String,
    pub n: usize,
    pub c: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema_version: u32,
    pub bound: i64,
    pub mode: SolvabilityMode,
    pub instance: InstanceRef,
    pub f_zeros: Vec<Vec<i64>>,
    pub sigma_witnesses: Vec<GElement>,
    pub consistent: bool,
    pub verdict: String,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn found_witness(&self) -> bool {
        !self.sigma_witnesses.is_empty()
    }
}

pub fn verdict_text(found: bool, bound: i64) -> String {
    if found {
        format!("witness found within bound {bound}")
    } else {
        format!("no witness within bound {bound}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub compile: CompileConfig,
    pub eval_cap: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { compile: CompileConfig::default(), eval_cap: DEFAULT_EVAL_CAP }
    }
}

/// Compiles `f` and checks the instance with [`check_instance`].
pub fn check_equivalence(f: &Polynomial, bound: i64, config: &CheckConfig) -> Result<SearchReport> {
    let desc = compile_default(f, &config.compile)?;
    check_instance(&desc, bound, config.eval_cap)
}

/// Searches both sides of the equivalence "f has an integer zero iff some
/// σ ∈ G maps x into Z" within the box and checks that they match exactly.
///
/// Each zero `a` of the smoothing input contributes the witnesses
/// `((a, 0), +1)` and `((a, 1), +1)` (the zeros of `y^2 - y`) and their
/// sign-flipped images `((-a, 0), -1)` and `((-a, -1), -1)`; the `y = ±1`
/// witnesses need `bound >= 1`. Any difference is an
/// [`Error::EquivalenceViolation`].
pub fn check_instance(desc: &InstanceDescriptor, bound: i64, eval_cap: u64) -> Result<SearchReport> {
    let target = &desc.provenance.smoothing_input;
    let zeros = search_integer_zeros_capped(target, bound, eval_cap)?;
    let witnesses = search_automorphisms_capped(desc, bound, eval_cap)?;

    for a in &zeros {
        if !target.evaluate_integers(a)?.is_zero() {
            return Err(Error::EquivalenceViolation(format!("reported zero {a:?} does not vanish")));
        }
    }
    for g in &witnesses {
        if !desc.point_in_z(&sigma_image(g))? {
            return Err(Error::EquivalenceViolation(format!("reported witness {g:?} is not in Z")));
        }
    }

    let mut expected: BTreeSet<GElement> = BTreeSet::new();
    for a in &zeros {
        let neg: Vec<i64> = a.iter().map(|v| -v).collect();
        let with = |base: &[i64], y: i64| {
            let mut v = base.to_vec();
            v.push(y);
            v
        };
        expected.insert(GElement { a: with(a, 0), eps: 1 });
        expected.insert(GElement { a: with(&neg, 0), eps: -1 });
        if bound >= 1 {
            expected.insert(GElement { a: with(a, 1), eps: 1 });
            expected.insert(GElement { a: with(&neg, -1), eps: -1 });
        }
    }
    let found: BTreeSet<GElement> = witnesses.iter().cloned().collect();
    if found != expected {
        let missing: Vec<_> = expected.difference(&found).collect();
        let extra: Vec<_> = found.difference(&expected).collect();
        return Err(Error::EquivalenceViolation(format!(
            "witness set mismatch: missing {missing:?}, unexpected {extra:?}"
        )));
    }
    Ok(SearchReport {
        schema_version: SCHEMA_VERSION,
        bound,
        mode: desc.mode,
        instance: InstanceRef {
            f: desc.provenance.original.to_string(),
            smoothing_input: target.to_string(),
            z_equation: desc.z_equation.to_string(),
            n: desc.n,
            c: desc.smoothing.c,
        },
        verdict: verdict_text(!witnesses.is_empty(), bound),
        f_zeros: zeros,
        sigma_witnesses: witnesses,
        consistent: true,
    })
}

/// Smoothness of `c(y^2 - y) + f^2` for univariate `f`, decided by a
/// resultant instead of a Gröbner basis.
///
/// Singular points need `2y - 1 = 0` and `2 f f' = 0`; on `y = 1/2` the
/// equation reads `f^2 = c/4`, which rules out `f = 0`. So the candidate is
/// singular iff `f'` and `4 f^2 - c` share a root over the algebraic
/// closure, i.e. iff `Res(f', 4 f^2 - c) = 0`. A nonzero constant `f'` never
/// vanishes.
pub fn univariate_smoothness_oracle(f: &Polynomial, c: u64) -> Result<bool> {
    let support = f.support();
    let var = match support.as_slice() {
        [] => return Err(Error::ConstantInput),
        [i] => f.registry().names()[*i].clone(),
        _ => return Err(Error::NotUnivariate(f.to_string())),
    };
    let derivative = f.partial_derivative(&var)?;
    if derivative.is_constant() {
        return Ok(true);
    }
    let four = Rational::from_integer(4.into());
    let c = Polynomial::constant(f.registry(), Rational::from_integer(c.into()));
    let shifted = &f.pow(2).scale(&four) - &c;
    Ok(!resultant_univariate(&derivative, &shifted, &var)?.is_zero())
}
