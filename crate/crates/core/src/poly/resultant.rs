//! Univariate resultants by the fraction-free subresultant PRS.
//!
//! The sign convention is the Sylvester determinant with the rows of the
//! first argument on top, so `Res(p, q) = (-1)^(deg p * deg q) Res(q, p)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Dense coefficients (constant term first) of a polynomial that only
/// involves `var`.
pub fn univariate_coefficients(p: &Polynomial, var: &str) -> Result<Vec<Rational>> {
    let index = p
        .registry()
        .index_of(var)
        .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
    let mut coeffs: Vec<Rational> = Vec::new();
    for (m, c) in p.terms() {
        let exps = m.exponents();
        if exps.iter().enumerate().any(|(i, &e)| i != index && e > 0) {
            return Err(Error::NotUnivariate(var.to_string()));
        }
        let e = exps[index] as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, Rational::zero());
        }
        coeffs[e] = c.clone();
    }
    Ok(coeffs)
}

pub fn resultant_univariate(p: &Polynomial, q: &Polynomial, var: &str) -> Result<Rational> {
    if !p.same_registry(q) {
        return Err(Error::RegistryMismatch);
    }
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (a, da) = to_integer_dense(&univariate_coefficients(p, var)?);
    let (b, db) = to_integer_dense(&univariate_coefficients(q, var)?);
    // p = a / da and q = b / db, so Res(p, q) = Res(a, b) / (da^deg q * db^deg p).
    let scale = num_traits::pow(da, degree(&b)) * num_traits::pow(db, degree(&a));
    Ok(Rational::new(subresultant(a, b), scale))
}

fn to_integer_dense(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    (ints, l)
}

fn degree(p: &[BigInt]) -> usize {
    p.len() - 1
}

fn trim(p: &mut Vec<BigInt>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn is_zero_poly(p: &[BigInt]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn exact_div(p: &[BigInt], d: &BigInt) -> Vec<BigInt> {
    p.iter()
        .map(|c| {
            let (q, r) = c.div_rem(d);
            debug_assert!(r.is_zero(), "inexact division in subresultant chain");
            q
        })
        .collect()
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = degree(b);
    let lb = b[db].clone();
    let mut r = a.to_vec();
    let mut e = degree(a) - db + 1;
    while !is_zero_poly(&r) && degree(&r) >= db {
        let dr = degree(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        r.pop();
        trim(&mut r);
        e -= 1;
    }
    let factor = num_traits::pow(lb, e);
    for c in r.iter_mut() {
        *c *= &factor;
    }
    r
}

/// Collins/Brown subresultant resultant of integer polynomials, both nonzero.
fn subresultant(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> BigInt {
    trim(&mut a);
    trim(&mut b);
    let mut sign = BigInt::one();
    if degree(&a) < degree(&b) {
        if degree(&a) % 2 == 1 && degree(&b) % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if degree(&b) == 0 {
        return sign * num_traits::pow(b[0].clone(), degree(&a));
    }
    let ca = content(&a);
    let cb = content(&b);
    let mut a = exact_div(&a, &ca);
    let mut b = exact_div(&b, &cb);
    let t = num_traits::pow(ca, degree(&b)) * num_traits::pow(cb, degree(&a));
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = degree(&a) - degree(&b);
        if degree(&a) % 2 == 1 && degree(&b) % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_remainder(&a, &b);
        a = b;
        if is_zero_poly(&r) {
            return BigInt::zero();
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        b = exact_div(&r, &divisor);
        g = a[degree(&a)].clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(g.clone(), delta);
            let den = num_traits::pow(h, delta - 1);
            let (q, rem) = num.div_rem(&den);
            debug_assert!(rem.is_zero());
            q
        };
        if degree(&b) == 0 {
            // h <- lc(b)^deg a / h^(deg a - 1)
            let da = degree(&a);
            let num = num_traits::pow(b[0].clone(), da);
            let den = num_traits::pow(h, da - 1);
            let (q, rem) = num.div_rem(&den);
            debug_assert!(rem.is_zero());
            return sign * t * q;
        }
    }
}
