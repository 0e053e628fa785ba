//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] is a finite map from [`Monomial`] exponent vectors to
//! nonzero [`Rational`] coefficients, tied to a shared [`VarRegistry`]. All
//! arithmetic is exact. Rendering (the `Display` impl) lists terms in
//! descending graded-reverse-lexicographic order, which makes the textual
//! form canonical.

mod parse;
mod resultant;

pub use parse::{parse_poly, scan_names};
pub use resultant::{resultant_univariate, univariate_coefficients};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Ordered list of variable names; the position of a name is its index in
/// every exponent vector built over this registry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarRegistry {
    names: Vec<String>,
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarRegistry {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if !is_valid_name(&name) {
                return Err(Error::InvalidVariableName(name));
            }
            if out.contains(&name) {
                return Err(Error::DuplicateVariable(name));
            }
            out.push(name);
        }
        Ok(Arc::new(VarRegistry { names: out }))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// A name not yet in the registry: `base` itself, else `base_1`, `base_2`, ...
    pub fn fresh_name(&self, base: &str) -> String {
        if !self.contains(base) {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}_{k}"))
            .find(|candidate| !self.contains(candidate))
            .expect("unbounded suffix search")
    }

    pub fn with_appended(&self, name: &str) -> Result<Arc<Self>> {
        if self.contains(name) {
            return Err(Error::VariableCollision(name.to_string()));
        }
        VarRegistry::new(self.names.iter().cloned().chain(std::iter::once(name.to_string())))
    }

    pub fn without_index(&self, index: usize) -> Arc<Self> {
        let mut names = self.names.clone();
        names.remove(index);
        Arc::new(VarRegistry { names })
    }
}

/// Builds a registry from the names appearing in `text`, ordered by their
/// alphabetic stem and then numerically by any trailing digits (`t2` before
/// `t10`), and parses `text` over it.
pub fn parse_with_inferred_registry(text: &str) -> Result<Polynomial> {
    let mut names = scan_names(text);
    names.sort_by_key(|a| natural_key(a));
    let registry = VarRegistry::new(names)?;
    parse_poly(text, &registry)
}

fn natural_key(name: &str) -> (String, Option<u64>, String) {
    let stem = name.trim_end_matches(|c: char| c.is_ascii_digit());
    let suffix = name[stem.len()..].parse().ok();
    (stem.to_string(), suffix, name.to_string())
}

/// Exponent vector aligned with a registry.
///
/// The derived `Ord` is plain lexicographic on the exponent tuple; term
/// orders used for rendering and Gröbner bases live in
/// [`crate::groebner::TermOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn variable(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Graded reverse lexicographic comparison.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0).rev() {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
    }
}

/// Total degree, with a distinguished value for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Polynomial {
    registry: Arc<VarRegistry>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_registry(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(registry: &Arc<VarRegistry>) -> Self {
        Polynomial { registry: registry.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(registry: &Arc<VarRegistry>, value: Rational) -> Self {
        let mut p = Polynomial::zero(registry);
        if !value.is_zero() {
            p.terms.insert(Monomial::one(registry.arity()), value);
        }
        p
    }

    pub fn from_int(registry: &Arc<VarRegistry>, value: i64) -> Self {
        Polynomial::constant(registry, Rational::from_integer(value.into()))
    }

    pub fn var(registry: &Arc<VarRegistry>, name: &str) -> Result<Self> {
        let index = registry
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::monomial(registry, Monomial::variable(registry.arity(), index), Rational::one()))
    }

    pub fn monomial(registry: &Arc<VarRegistry>, mono: Monomial, coeff: Rational) -> Self {
        assert_eq!(mono.arity(), registry.arity(), "monomial arity");
        let mut p = Polynomial::zero(registry);
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    /// Collects terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(registry: &Arc<VarRegistry>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(registry);
        for (m, c) in terms {
            assert_eq!(m.arity(), registry.arity(), "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    pub fn same_registry(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.registry, &other.registry) || self.registry == other.registry
    }

    fn check_registry(&self, other: &Polynomial) -> Result<()> {
        if self.same_registry(other) {
            Ok(())
        } else {
            Err(Error::RegistryMismatch)
        }
    }

    /// Terms in the storage order (lexicographic on exponents, ascending).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted by descending graded reverse lexicographic order.
    pub fn terms_grevlex(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_grevlex(a.0));
        v
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.registry.arity()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::total_degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Indices of variables that occur with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.registry.arity())
            .filter(|&i| self.terms.keys().any(|m| m.exponents()[i] > 0))
            .collect()
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_registry(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_registry(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_registry(other)?;
        let mut out = Polynomial::zero(&self.registry);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exponent: u32) -> Polynomial {
        let mut result = Polynomial::from_int(&self.registry, 1);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(&self.registry);
        }
        Polynomial {
            registry: self.registry.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect(),
        }
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial> {
        let index = self
            .registry
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        Ok(self.partial_derivative_index(index))
    }

    pub fn partial_derivative_index(&self, index: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[index];
            (e > 0).then(|| {
                let mut exps = m.exponents().to_vec();
                exps[index] -= 1;
                (Monomial(exps), c * Rational::from_integer(e.into()))
            })
        });
        Polynomial::from_terms(&self.registry, terms)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.registry.arity() {
            return Err(Error::ArityMismatch { expected: self.registry.arity(), got: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    term *= num_traits::pow::pow(x.clone(), e as usize);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Evaluation at an integer point.
    pub fn evaluate_integers(&self, point: &[i64]) -> Result<Rational> {
        let point: Vec<Rational> = point.iter().map(|&v| Rational::from_integer(v.into())).collect();
        self.evaluate(&point)
    }

    /// Re-expresses the polynomial over a registry that contains every
    /// variable of the current one (matched by name).
    pub fn embed_into(&self, target: &Arc<VarRegistry>) -> Result<Polynomial> {
        let mapping: Vec<usize> = self
            .registry
            .names()
            .iter()
            .map(|n| target.index_of(n).ok_or_else(|| Error::UnknownVariable(n.clone())))
            .collect::<Result<_>>()?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0; target.arity()];
            for (src, &dst) in mapping.iter().enumerate() {
                exps[dst] = m.exponents()[src];
            }
            (Monomial(exps), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Homogenizes with a new trailing variable `new_var`.
    pub fn homogenize(&self, new_var: &str) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let registry = self.registry.with_appended(new_var)?;
        let d = self.total_degree().finite().expect("nonzero");
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = m.exponents().to_vec();
            exps.push(d - m.total_degree());
            (Monomial(exps), c.clone())
        });
        Ok(Polynomial::from_terms(&registry, terms))
    }

    /// Sets `var` to 1 and drops it from the registry.
    pub fn dehomogenize(&self, var: &str) -> Result<Polynomial> {
        let index = self
            .registry
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let registry = self.registry.without_index(index);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = m.exponents().to_vec();
            exps.remove(index);
            (Monomial(exps), c.clone())
        });
        Ok(Polynomial::from_terms(&registry, terms))
    }

    /// Substitutes `replacement` (a polynomial over `target`) for each variable.
    pub fn substitute(&self, replacements: &[Polynomial], target: &Arc<VarRegistry>) -> Result<Polynomial> {
        if replacements.len() != self.registry.arity() {
            return Err(Error::ArityMismatch { expected: self.registry.arity(), got: replacements.len() });
        }
        if replacements.iter().any(|r| r.registry != *target) {
            return Err(Error::RegistryMismatch);
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (r, &e) in replacements.iter().zip(m.exponents()) {
                if e > 0 {
                    term = &term * &r.pow(e);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Least common denominator of the coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// The sign-normalized primitive integer multiple (positive leading
    /// coefficient in grevlex), for comparisons up to a rational scalar.
    pub fn primitive_integer_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.denominator_lcm();
        let ints: Vec<BigInt> = self.terms.values().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let lead_negative = self.terms_grevlex()[0].1.is_negative();
        let factor = Rational::new(if lead_negative { -l } else { l }, g);
        self.scale(&factor)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("registry mismatch in polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("registry mismatch in polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("registry mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            registry: self.registry.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

/// Renders a rational as `p` or `p/q`.
pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms_grevlex().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .zip(self.registry.names())
                .filter(|(&e, _)| e > 0)
                .map(|(&e, name)| if e == 1 { name.clone() } else { format!("{name}^{e}") })
                .collect();
            if factors.is_empty() {
                f.write_str(&fmt_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", fmt_rational(&abs))?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}
