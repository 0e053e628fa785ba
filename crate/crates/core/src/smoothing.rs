//! Smoothing a Diophantine equation `f = 0` by the substitution
//! `F_c = c(y^2 - y) + f^2`.
//!
//! Over the integers `y^2 - y >= 0` and `f^2 >= 0`, so `F_c` has exactly the
//! integer zeros `(a, 0)` and `(a, 1)` for each integer zero `a` of `f`. The
//! affine hypersurface `F_c = 0` is smooth over Q for all but finitely many
//! `c`; [`smooth_lift`] tries `c = 1, 2, ...` and certifies the first smooth
//! candidate by showing that the Jacobian ideal is the unit ideal.
//!
//! Smoothness together with `f` nonconstant also makes the hypersurface
//! geometrically integral: a factorization `(z + h)(z - h)` of the
//! equivalent form `z^2 - g` would force singular points where `z = h = 0`.
//! That property is recorded in [`SmoothingResult::geometrically_integral`],
//! not recomputed.

use crate::error::{Error, Result};
use crate::groebner::{is_unit_ideal, BuchbergerConfig, GroebnerBasis, TermOrder, DEFAULT_MAX_PAIRS};
use crate::poly::{Polynomial, Rational};

pub const DEFAULT_C_MAX: u64 = 1000;

/// Base name of the variable added by the smoothing step.
pub const SMOOTHING_VAR: &str = "y";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmoothConfig {
    pub c_max: u64,
    pub order: TermOrder,
    pub max_pairs: u64,
}

impl Default for SmoothConfig {
    fn default() -> Self {
        SmoothConfig { c_max: DEFAULT_C_MAX, order: TermOrder::Grevlex, max_pairs: DEFAULT_MAX_PAIRS }
    }
}

impl SmoothConfig {
    pub fn buchberger(&self) -> BuchbergerConfig {
        BuchbergerConfig { order: self.order, max_pairs: self.max_pairs }
    }
}

/// A value of `c` that was tried and rejected, with the non-unit reduced
/// basis of its Jacobian ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectedCandidate {
    pub c: u64,
    pub basis: GroebnerBasis,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothingResult {
    pub c: u64,
    /// The input polynomial `f`.
    pub input: Polynomial,
    /// `F = c(y^2 - y) + f^2` over the input registry extended by `y_var`.
    pub smoothed: Polynomial,
    pub y_var: String,
    /// Reduced basis `{1}` of the Jacobian ideal of `smoothed`.
    pub certificate: GroebnerBasis,
    pub rejected: Vec<RejectedCandidate>,
    pub degree_in: u32,
    pub degree_out: u32,
    pub geometrically_integral: bool,
}

fn check_nonconstant(f: &Polynomial) -> Result<u32> {
    match f.total_degree().finite() {
        Some(d) if d > 0 => Ok(d),
        _ => Err(Error::ConstantInput),
    }
}

/// `c(y^2 - y) + f^2`, with `y_var` appended to the registry.
pub fn build_candidate_with_var(f: &Polynomial, c: u64, y_var: &str) -> Result<Polynomial> {
    check_nonconstant(f)?;
    if c == 0 {
        return Err(Error::InvalidArgument("c must be positive".into()));
    }
    let registry = f.registry().with_appended(y_var)?;
    let f = f.embed_into(&registry)?;
    let y = Polynomial::var(&registry, y_var)?;
    let y2_minus_y = &y.pow(2) - &y;
    let c = Rational::from_integer(c.into());
    Ok(&y2_minus_y.scale(&c) + &f.pow(2))
}

/// As [`build_candidate_with_var`], choosing a fresh name based on `y`.
pub fn build_candidate(f: &Polynomial, c: u64) -> Result<Polynomial> {
    build_candidate_with_var(f, c, &f.registry().fresh_name(SMOOTHING_VAR))
}

/// `[F, dF/dv for every variable v]`.
pub fn jacobian_generators(big_f: &Polynomial) -> Result<Vec<Polynomial>> {
    if big_f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut gens = vec![big_f.clone()];
    gens.extend((0..big_f.registry().arity()).map(|i| big_f.partial_derivative_index(i)));
    Ok(gens)
}

pub fn is_smooth_affine_hypersurface(
    big_f: &Polynomial,
    config: &BuchbergerConfig,
) -> Result<(bool, GroebnerBasis)> {
    if big_f.is_constant() {
        return Err(Error::ConstantInput);
    }
    is_unit_ideal(&jacobian_generators(big_f)?, config)
}

/// Finds the least `c` in `1..=c_max` for which `c(y^2 - y) + f^2 = 0` is
/// smooth over Q.
pub fn smooth_lift(f: &Polynomial, config: &SmoothConfig) -> Result<SmoothingResult> {
    let degree_in = check_nonconstant(f)?;
    if !f.has_integer_coefficients() {
        return Err(Error::NonIntegerCoefficients);
    }
    let y_var = f.registry().fresh_name(SMOOTHING_VAR);
    let gb = config.buchberger();
    let mut rejected = Vec::new();
    for c in 1..=config.c_max {
        let candidate = build_candidate_with_var(f, c, &y_var)?;
        let (smooth, basis) = is_smooth_affine_hypersurface(&candidate, &gb)?;
        if smooth {
            let degree_out = candidate.total_degree().finite().expect("nonconstant");
            return Ok(SmoothingResult {
                c,
                input: f.clone(),
                smoothed: candidate,
                y_var,
                certificate: basis,
                rejected,
                degree_in,
                degree_out,
                geometrically_integral: true,
            });
        }
        rejected.push(RejectedCandidate { c, basis });
    }
    Err(Error::CSearchExhausted { c_max: config.c_max })
}
