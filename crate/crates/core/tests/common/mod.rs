#![allow(dead_code)]

use dioph_reduce::poly::{Monomial, Polynomial, Rational, VarRegistry};
use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5eed_0037;
pub const CORPUS_SIZE: usize = 50;

/// Random nonconstant integer polynomial in `t1..tm`, `m` in 1..=3, total
/// degree at most 4, coefficients in [-9, 9].
pub fn random_poly(rng: &mut impl Rng) -> Polynomial {
    let m = rng.gen_range(1..=3usize);
    let registry = VarRegistry::new((1..=m).map(|i| format!("t{i}"))).unwrap();
    loop {
        let mut terms: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=4usize) {
            let mut exps = vec![0u32; m];
            for _ in 0..rng.gen_range(0..=4u32) {
                exps[rng.gen_range(0..m)] += 1;
            }
            let coeff = loop {
                let c = rng.gen_range(-9..=9i64);
                if c != 0 {
                    break c;
                }
            };
            terms.insert(exps, coeff);
        }
        let p = Polynomial::from_terms(
            &registry,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(e), Rational::from_integer(c.into()))),
        );
        if !p.is_constant() {
            return p;
        }
    }
}

pub fn corpus() -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..CORPUS_SIZE).map(|_| random_poly(&mut rng)).collect()
}

/// Proptest strategy for polynomials over `registry` with small rational
/// coefficients and per-variable exponents below `max_exp`.
pub fn arb_poly(
    registry: std::sync::Arc<VarRegistry>,
    max_terms: usize,
    max_exp: u32,
) -> impl proptest::strategy::Strategy<Value = Polynomial> {
    use proptest::prelude::*;
    let m = registry.arity();
    prop::collection::vec((prop::collection::vec(0..max_exp, m), -9i64..=9, 1i64..=3), 0..=max_terms).prop_map(
        move |terms| {
            Polynomial::from_terms(
                &registry,
                terms
                    .into_iter()
                    .map(|(e, n, d)| (Monomial::from_exponents(e), Rational::new(n.into(), d.into()))),
            )
        },
    )
}
