//! Resultants against a Sylvester determinant and a Euclidean gcd, both
//! computed here over dense rational coefficient vectors.

use dioph_reduce::poly::{resultant_univariate, Monomial, Polynomial, Rational, VarRegistry};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn poly_from_dense(coeffs: &[Rational]) -> Polynomial {
    let r = VarRegistry::new(["x"]).unwrap();
    Polynomial::from_terms(
        &r,
        coeffs.iter().enumerate().map(|(i, c)| (Monomial::from_exponents(vec![i as u32]), c.clone())),
    )
}

fn trimmed(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut result = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else { return Rational::zero() };
        if pivot != col {
            m.swap(pivot, col);
            result = -result;
        }
        result *= m[col][col].clone();
        for r in col + 1..n {
            let factor = &m[r][col] / &m[col][col];
            let pivot_row = m[col].clone();
            for (entry, p) in m[r].iter_mut().zip(&pivot_row).skip(col) {
                *entry -= &factor * p;
            }
        }
    }
    result
}

/// Sylvester matrix with rows of descending-degree coefficients.
fn sylvester_resultant(p: &[Rational], q: &[Rational]) -> Rational {
    let (dp, dq) = (p.len() - 1, q.len() - 1);
    let n = dp + dq;
    if n == 0 {
        return Rational::one();
    }
    let mut m = vec![vec![Rational::zero(); n]; n];
    for i in 0..dq {
        for (j, c) in p.iter().rev().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..dp {
        for (j, c) in q.iter().rev().enumerate() {
            m[dq + i][i + j] = c.clone();
        }
    }
    det(m)
}

fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut a = a.to_vec();
    let lead = b.last().unwrap().clone();
    while a.len() >= b.len() {
        let factor = a.last().unwrap() / &lead;
        let shift = a.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            let sub = &factor * c;
            a[shift + i] -= sub;
        }
        a.pop();
        a = trimmed(a);
    }
    a
}

fn gcd_degree(p: &[Rational], q: &[Rational]) -> usize {
    let (mut a, mut b) = (p.to_vec(), q.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a.len() - 1
}

fn arb_dense(max_deg: usize) -> impl Strategy<Value = Vec<Rational>> {
    (prop::collection::vec(-6i64..=6, 0..=max_deg), 1i64..=6)
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            c.into_iter().map(|v| Rational::from_integer(v.into())).collect()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn matches_sylvester_determinant(p in arb_dense(5), q in arb_dense(5)) {
        let res = resultant_univariate(&poly_from_dense(&p), &poly_from_dense(&q), "x").unwrap();
        prop_assert_eq!(res, sylvester_resultant(&p, &q));
    }

    #[test]
    fn vanishes_iff_common_factor(p in arb_dense(4), q in arb_dense(4), shared in arb_dense(2)) {
        let mul = |a: &[Rational], b: &[Rational]| {
            let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        };
        for (a, b) in [(p.clone(), q.clone()), (mul(&p, &shared), mul(&q, &shared))] {
            let res = resultant_univariate(&poly_from_dense(&a), &poly_from_dense(&b), "x").unwrap();
            prop_assert_eq!(res.is_zero(), gcd_degree(&a, &b) > 0);
        }
    }
}
