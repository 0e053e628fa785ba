//! Exact rational points on long Weierstrass curves
//! `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
//!
//! The default curve is 37A1, `y^2 + y = x^3 - x`, with base point
//! `P = (0, 0)`. That `P` has infinite order is checked by
//! [`infinite_order_sanity`]: by Mazur's theorem a rational torsion point has
//! order at most 12, so twelve nonzero multiples suffice. 37A1 has no complex
//! multiplication, so its endomorphism ring is Z; that is a known fact about
//! the curve and is not checked here.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Rational;

/// Largest order of a rational torsion point on an elliptic curve over Q.
pub const MAZUR_TORSION_BOUND: i64 = 12;

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
    pub label: Option<String>,
}

impl Curve {
    pub fn new(a1: Rational, a2: Rational, a3: Rational, a4: Rational, a6: Rational, label: Option<String>) -> Result<Self> {
        let curve = Curve { a1, a2, a3, a4, a6, label };
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    /// Curve 37A1: `y^2 + y = x^3 - x`.
    pub fn cremona_37a1() -> Self {
        Curve::new(q(0), q(0), q(1), q(-1), q(0), Some("37a1".into())).expect("37a1 is nonsingular")
    }

    pub fn a_invariants(&self) -> [&Rational; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn discriminant(&self) -> Rational {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = a1 * a1 + q(4) * a2;
        let b4 = q(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + q(4) * a6;
        let b8 = a1 * a1 * a6 + q(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        -(&b2 * &b2 * &b8) - q(8) * &b4 * &b4 * &b4 - q(27) * &b6 * &b6 + q(9) * &b2 * &b4 * &b6
    }

    pub fn contains(&self, pt: &EcPoint) -> bool {
        on_curve(pt, self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EcPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl EcPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        EcPoint::Affine { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        EcPoint::Affine { x: q(x), y: q(y) }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, EcPoint::Infinity)
    }
}

impl fmt::Display for EcPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EcPoint::Infinity => f.write_str("O"),
            EcPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

pub fn on_curve(pt: &EcPoint, e: &Curve) -> bool {
    match pt {
        EcPoint::Infinity => true,
        EcPoint::Affine { x, y } => {
            let lhs = y * y + &e.a1 * x * y + &e.a3 * y;
            let rhs = x * x * x + &e.a2 * x * x + &e.a4 * x + &e.a6;
            lhs == rhs
        }
    }
}

fn require_on_curve(pt: &EcPoint, e: &Curve) -> Result<()> {
    if on_curve(pt, e) {
        Ok(())
    } else {
        Err(Error::PointNotOnCurve)
    }
}

pub fn neg(p: &EcPoint, e: &Curve) -> Result<EcPoint> {
    require_on_curve(p, e)?;
    Ok(neg_unchecked(p, e))
}

fn neg_unchecked(p: &EcPoint, e: &Curve) -> EcPoint {
    match p {
        EcPoint::Infinity => EcPoint::Infinity,
        EcPoint::Affine { x, y } => EcPoint::Affine { x: x.clone(), y: -y - &e.a1 * x - &e.a3 },
    }
}

/// Chord-tangent addition.
pub fn add(p: &EcPoint, r: &EcPoint, e: &Curve) -> Result<EcPoint> {
    require_on_curve(p, e)?;
    require_on_curve(r, e)?;
    Ok(add_unchecked(p, r, e))
}

fn add_unchecked(p: &EcPoint, r: &EcPoint, e: &Curve) -> EcPoint {
    let (x1, y1, x2, y2) = match (p, r) {
        (EcPoint::Infinity, _) => return r.clone(),
        (_, EcPoint::Infinity) => return p.clone(),
        (EcPoint::Affine { x: x1, y: y1 }, EcPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
    };
    let slope = if x1 != x2 {
        (y2 - y1) / (x2 - x1)
    } else {
        // same x: either r = -p or r = p
        let denom = q(2) * y1 + &e.a1 * x1 + &e.a3;
        if y1 != y2 || denom.is_zero() {
            return EcPoint::Infinity;
        }
        (q(3) * x1 * x1 + q(2) * &e.a2 * x1 + &e.a4 - &e.a1 * y1) / denom
    };
    let intercept = y1 - &slope * x1;
    let x3 = &slope * &slope + &e.a1 * &slope - &e.a2 - x1 - x2;
    let y3 = -(&slope + &e.a1) * &x3 - intercept - &e.a3;
    EcPoint::Affine { x: x3, y: y3 }
}

/// `k * P` by double-and-add; negative `k` multiplies `-P`.
pub fn scalar_mul(k: i64, p: &EcPoint, e: &Curve) -> Result<EcPoint> {
    require_on_curve(p, e)?;
    let mut base = if k < 0 { neg_unchecked(p, e) } else { p.clone() };
    let mut n = k.unsigned_abs();
    let mut acc = EcPoint::Infinity;
    while n > 0 {
        if n & 1 == 1 {
            acc = add_unchecked(&acc, &base, e);
        }
        n >>= 1;
        if n > 0 {
            base = add_unchecked(&base, &base, e);
        }
    }
    Ok(acc)
}

/// `k * P` for `k = -k_max..=k_max`, built by repeated addition; index
/// `k + k_max` holds `k * P`.
pub fn multiples_table(p: &EcPoint, k_max: i64, e: &Curve) -> Result<Vec<EcPoint>> {
    require_on_curve(p, e)?;
    if k_max < 1 {
        return Err(Error::InvalidArgument("k_max must be at least 1".into()));
    }
    let mut positive = vec![EcPoint::Infinity];
    for k in 1..=k_max as usize {
        positive.push(add_unchecked(&positive[k - 1], p, e));
    }
    let mut table: Vec<EcPoint> = positive[1..].iter().rev().map(|pt| neg_unchecked(pt, e)).collect();
    table.extend(positive);
    Ok(table)
}

/// True iff none of `P, 2P, ..., 12P` is the point at infinity.
pub fn infinite_order_sanity(p: &EcPoint, e: &Curve) -> Result<bool> {
    require_on_curve(p, e)?;
    if p.is_infinity() {
        return Err(Error::PointAtInfinity);
    }
    let mut acc = EcPoint::Infinity;
    for _ in 0..MAZUR_TORSION_BOUND {
        acc = add_unchecked(&acc, p, e);
        if acc.is_infinity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Renders a rational as `p/q`, always with an explicit denominator.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_from_str(s: &str) -> Result<Rational> {
    let bad = || Error::MalformedInstance(format!("bad rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl Default for Curve {
    fn default() -> Self {
        Curve::cremona_37a1()
    }
}

/// The default base point `(0, 0)` on 37A1.
pub fn default_base_point() -> EcPoint {
    EcPoint::Affine { x: Rational::zero(), y: Rational::zero() }
}
