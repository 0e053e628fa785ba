//! Buchberger's algorithm over the rationals.
//!
//! Internally every polynomial is kept as a primitive integer polynomial
//! with its terms sorted in descending term order; denominators only
//! reappear when the final reduced basis is made monic.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, VarRegistry};

pub const DEFAULT_MAX_PAIRS: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    #[default]
    Grevlex,
    Lex,
}

impl TermOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Grevlex => a.cmp_grevlex(b),
            TermOrder::Lex => a.exponents().cmp(b.exponents()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::Grevlex => "grevlex",
            TermOrder::Lex => "lex",
        }
    }
}

impl std::str::FromStr for TermOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(TermOrder::Grevlex),
            "lex" => Ok(TermOrder::Lex),
            other => Err(Error::InvalidArgument(format!("unknown term order `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuchbergerConfig {
    pub order: TermOrder,
    /// Maximum number of S-pairs taken off the queue.
    pub max_pairs: u64,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig { order: TermOrder::Grevlex, max_pairs: DEFAULT_MAX_PAIRS }
    }
}

/// A reduced Gröbner basis: monic generators sorted by descending leading
/// monomial, plus the generators it was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    order: TermOrder,
    source: Vec<Polynomial>,
    registry: Arc<VarRegistry>,
}

impl GroebnerBasis {
    /// Wraps an already-reduced basis, e.g. one read back from disk. The
    /// reduced-basis invariants are not re-checked.
    pub fn from_parts(
        registry: Arc<VarRegistry>,
        generators: Vec<Polynomial>,
        order: TermOrder,
        source: Vec<Polynomial>,
    ) -> Self {
        GroebnerBasis { generators, order, source, registry }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn source(&self) -> &[Polynomial] {
        &self.source
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    /// True iff the basis is exactly `{1}`.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        normal_form(p, self)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn leading_monomial(&self, p: &Polynomial) -> Option<Monomial> {
        leading(p, self.order).map(|(m, _)| m.clone())
    }
}

fn leading(p: &Polynomial, order: TermOrder) -> Option<(&Monomial, &Rational)> {
    p.terms().max_by(|a, b| order.cmp(a.0, b.0))
}

/// Multivariate division remainder of `p` by the basis.
pub fn normal_form(p: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    if !p.same_registry(&Polynomial::zero(&basis.registry)) {
        return Err(Error::RegistryMismatch);
    }
    Ok(reduce_rational(p, &basis.generators, basis.order))
}

fn reduce_rational(p: &Polynomial, divisors: &[Polynomial], order: TermOrder) -> Polynomial {
    let leads: Vec<(Monomial, Rational)> = divisors
        .iter()
        .map(|g| leading(g, order).map(|(m, c)| (m.clone(), c.clone())).expect("divisors are nonzero"))
        .collect();
    let mut rest = p.clone();
    let mut remainder = Polynomial::zero(p.registry());
    while let Some((m, c)) = leading(&rest, order).map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(i) => {
                let (lm, lc) = &leads[i];
                let factor = Polynomial::monomial(p.registry(), lm.quotient_of(&m), &c / lc);
                rest = &rest - &(&factor * &divisors[i]);
            }
            None => {
                let term = Polynomial::monomial(p.registry(), m, c);
                rest = &rest - &term;
                remainder = &remainder + &term;
            }
        }
    }
    remainder
}

/// Integer polynomial with terms in strictly descending term order.
#[derive(Debug, Clone, PartialEq, Eq)]
struct IntPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl IntPoly {
    fn from_polynomial(p: &Polynomial, order: TermOrder) -> IntPoly {
        let l = p.denominator_lcm();
        let lr = Rational::from_integer(l);
        let mut terms: Vec<(Monomial, BigInt)> =
            p.terms().map(|(m, c)| (m.clone(), (c * &lr).to_integer())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out = IntPoly { terms };
        out.make_primitive();
        out
    }

    fn to_monic(&self, registry: &Arc<VarRegistry>) -> Polynomial {
        let lc = Rational::from_integer(self.terms[0].1.clone());
        Polynomial::from_terms(
            registry,
            self.terms.iter().map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()) / &lc)),
        )
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    fn make_primitive(&mut self) {
        if self.is_zero() {
            return;
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c /= &g;
            }
        }
    }

    /// `a * self - b * shift * other`, merged in term order.
    fn scaled_sub(&self, a: &BigInt, b: &BigInt, shift: &Monomial, other: &IntPoly, order: TermOrder) -> IntPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |k: usize| other.terms[k].0.mul(shift);
        let mut next_other = (j < other.terms.len()).then(|| shifted(j));
        while i < self.terms.len() || next_other.is_some() {
            let ord = match (&next_other, self.terms.get(i)) {
                (None, _) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some(om), Some((sm, _))) => order.cmp(sm, om),
            };
            match ord {
                Ordering::Greater => {
                    let (m, c) = &self.terms[i];
                    out.push((m.clone(), a * c));
                    i += 1;
                }
                Ordering::Less => {
                    let m = next_other.take().expect("checked");
                    out.push((m, -(b * &other.terms[j].1)));
                    j += 1;
                    next_other = (j < other.terms.len()).then(|| shifted(j));
                }
                Ordering::Equal => {
                    let m = next_other.take().expect("checked");
                    let c = a * &self.terms[i].1 - b * &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((m, c));
                    }
                    i += 1;
                    j += 1;
                    next_other = (j < other.terms.len()).then(|| shifted(j));
                }
            }
        }
        IntPoly { terms: out }
    }

    fn s_polynomial(&self, other: &IntPoly, order: TermOrder) -> IntPoly {
        let lcm = self.lm().lcm(other.lm());
        let g = self.lc().gcd(other.lc());
        let a = other.lc() / &g;
        let b = self.lc() / &g;
        let left = self.lm().quotient_of(&lcm);
        let right = other.lm().quotient_of(&lcm);
        let lhs = IntPoly { terms: self.terms.iter().map(|(m, c)| (m.mul(&left), c.clone())).collect() };
        let mut s = lhs.scaled_sub(&a, &b, &right, other, order);
        s.make_primitive();
        s
    }

    /// Full reduction of every term against `basis`; the result is primitive.
    fn reduce(&self, basis: &[IntPoly], order: TermOrder) -> IntPoly {
        let mut rest = self.clone();
        let mut remainder: Vec<(Monomial, BigInt)> = Vec::new();
        let mut steps = 0usize;
        while !rest.is_zero() {
            let divisor = basis.iter().find(|g| g.lm().divides(rest.lm()));
            match divisor {
                Some(g) => {
                    let gcd = rest.lc().gcd(g.lc());
                    let a = g.lc() / &gcd;
                    let b = rest.lc() / &gcd;
                    let shift = g.lm().quotient_of(rest.lm());
                    if !a.is_one() {
                        for (_, c) in remainder.iter_mut() {
                            *c *= &a;
                        }
                    }
                    rest = rest.scaled_sub(&a, &b, &shift, g, order);
                    steps += 1;
                    if steps.is_multiple_of(8) {
                        shrink_jointly(&mut rest, &mut remainder);
                    }
                }
                None => {
                    let lead = rest.terms.remove(0);
                    remainder.push(lead);
                }
            }
        }
        let mut out = IntPoly { terms: remainder };
        out.make_primitive();
        out
    }
}

/// Divides the pair (pending part, finished remainder) by their common content.
fn shrink_jointly(rest: &mut IntPoly, remainder: &mut [(Monomial, BigInt)]) {
    let mut g = rest.content();
    for (_, c) in remainder.iter() {
        if g.is_one() {
            return;
        }
        g = g.gcd(c);
    }
    if g.is_one() || g.is_zero() {
        return;
    }
    for (_, c) in rest.terms.iter_mut().chain(remainder.iter_mut()) {
        *c /= &g;
    }
}

fn check_generators(generators: &[Polynomial]) -> Result<Arc<VarRegistry>> {
    let first = generators.first().ok_or(Error::EmptyInput)?;
    if generators.iter().any(|g| !g.same_registry(first)) {
        return Err(Error::RegistryMismatch);
    }
    if generators.iter().all(Polynomial::is_zero) {
        return Err(Error::EmptyInput);
    }
    Ok(first.registry().clone())
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
///
/// Pairs are selected by the normal strategy (smallest lcm in the term
/// order) and pruned with Buchberger's coprime and chain criteria. A
/// nonzero constant remainder ends the computation with the basis `{1}`.
pub fn buchberger(generators: &[Polynomial], config: &BuchbergerConfig) -> Result<GroebnerBasis> {
    let registry = check_generators(generators)?;
    let order = config.order;
    let source = generators.to_vec();
    let unit = || GroebnerBasis {
        generators: vec![Polynomial::from_int(&registry, 1)],
        order,
        source: source.clone(),
        registry: registry.clone(),
    };

    let mut basis: Vec<IntPoly> = Vec::new();
    for g in generators.iter().filter(|g| !g.is_zero()) {
        let p = IntPoly::from_polynomial(g, order);
        if p.is_constant() {
            return Ok(unit());
        }
        if !basis.contains(&p) {
            basis.push(p);
        }
    }

    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((i, j));
            pending_set.insert((i, j));
        }
    }

    let mut processed: u64 = 0;
    while !pending.is_empty() {
        let pick = (0..pending.len())
            .min_by(|&x, &y| {
                let (i1, j1) = pending[x];
                let (i2, j2) = pending[y];
                let l1 = basis[i1].lm().lcm(basis[j1].lm());
                let l2 = basis[i2].lm().lcm(basis[j2].lm());
                l1.total_degree()
                    .cmp(&l2.total_degree())
                    .then_with(|| order.cmp(&l1, &l2))
                    .then_with(|| (j1, i1).cmp(&(j2, i2)))
            })
            .expect("nonempty");
        let (i, j) = pending.swap_remove(pick);
        pending_set.remove(&(i, j));

        processed += 1;
        if processed > config.max_pairs {
            return Err(Error::cap("Buchberger S-pairs", config.max_pairs));
        }

        if basis[i].lm().is_coprime(basis[j].lm()) {
            continue;
        }
        let lcm = basis[i].lm().lcm(basis[j].lm());
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&lcm)
                && !pending_set.contains(&key(i, k))
                && !pending_set.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let s = basis[i].s_polynomial(&basis[j], order);
        let h = s.reduce(&basis, order);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit());
        }
        let new = basis.len();
        basis.push(h);
        for k in 0..new {
            pending.push((k, new));
            pending_set.insert((k, new));
        }
    }

    Ok(GroebnerBasis {
        generators: reduce_basis(basis, order, &registry),
        order,
        source,
        registry,
    })
}

/// Minimalizes and interreduces a Gröbner basis, returning monic elements
/// sorted by descending leading monomial.
fn reduce_basis(basis: Vec<IntPoly>, order: TermOrder, registry: &Arc<VarRegistry>) -> Vec<Polynomial> {
    let minimal: Vec<Polynomial> = basis
        .iter()
        .enumerate()
        .filter(|(idx, p)| {
            !basis.iter().enumerate().any(|(other, q)| {
                other != *idx && q.lm().divides(p.lm()) && (q.lm() != p.lm() || other < *idx)
            })
        })
        .map(|(_, p)| p.to_monic(registry))
        .collect();
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> =
                minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, q)| q.clone()).collect();
            reduce_rational(&minimal[i], &others, order)
        })
        .collect();
    reduced.sort_by(|a, b| {
        let la = leading(a, order).expect("nonzero").0;
        let lb = leading(b, order).expect("nonzero").0;
        order.cmp(lb, la)
    });
    reduced
}

/// Decides whether the generators span the unit ideal; the reduced basis
/// is returned as the certificate either way.
pub fn is_unit_ideal(generators: &[Polynomial], config: &BuchbergerConfig) -> Result<(bool, GroebnerBasis)> {
    let basis = buchberger(generators, config)?;
    Ok((basis.is_unit(), basis))
}
