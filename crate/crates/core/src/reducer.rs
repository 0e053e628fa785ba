//! The end-to-end reduction: Diophantine polynomial in, automorphism-problem
//! instance out.
//!
//! For `f` in `m` variables the compiled instance lives in dimension
//! `n = m + 2`: smoothing adds `y`, homogenization adds `t_h`. The variety
//! `X` is the blowup of `E^n` at `S' ⊂ (Z·P)^n`; it is carried
//! symbolically, since only the action of `Aut X ≅ G` on the exceptional
//! divisor `D ≅ P^{n-1}` over the origin matters. The element of `G` with last
//! column `(a_1, ..., a_{n-1}, ±1)` sends `x = (0 : ... : 0 : 1)` to
//! `(a_1 : ... : a_{n-1} : ±1)`, and `Z ⊂ D` is the zero locus of the
//! homogenized smoothed polynomial.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::elliptic::{infinite_order_sanity, on_curve, scalar_mul, Curve, EcPoint};
use crate::error::{Error, Result};
use crate::lattice::{build_s, GElement, LatticeSet};
use crate::poly::{Polynomial, Rational, VarRegistry};
use crate::smoothing::{smooth_lift, SmoothConfig, SmoothingResult};

/// Base name of the projective variable added by homogenization.
pub const HOMOGENIZING_VAR: &str = "t_h";

/// Symbolic description of the variety `X`.
pub const BLOWUP_MARKER: &str = "blowup of E^n at S'";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum SolvabilityMode {
    /// Zeros in `Z^m`.
    #[default]
    #[serde(rename = "Z")]
    Integers,
    /// Zeros in `N^m`; reduced to the integer case by the four-squares
    /// transform.
    #[serde(rename = "N")]
    Naturals,
}

impl FromStr for SolvabilityMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z" | "z" => Ok(SolvabilityMode::Integers),
            "N" | "n" => Ok(SolvabilityMode::Naturals),
            other => Err(Error::InvalidArgument(format!("unknown mode `{other}`; expected Z or N"))),
        }
    }
}

impl fmt::Display for SolvabilityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolvabilityMode::Integers => "Z",
            SolvabilityMode::Naturals => "N",
        })
    }
}

/// A point of projective space given by integer coordinates, not all zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(pub Vec<BigInt>);

impl ProjectivePoint {
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroProjectivePoint);
        }
        Ok(ProjectivePoint(coords))
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        ProjectivePoint::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Primitive representative whose last nonzero coordinate is positive.
    pub fn normalized(&self) -> ProjectivePoint {
        let g = self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let last = self.0.iter().rev().find(|c| !c.is_zero()).expect("nonzero point");
        let g = if last.is_negative() { -g } else { g };
        ProjectivePoint(self.0.iter().map(|c| c / &g).collect())
    }

    /// `(0 : ... : 0 : 1)`.
    pub fn base_point(n: usize) -> Self {
        let mut coords = vec![BigInt::zero(); n];
        coords[n - 1] = BigInt::from(1);
        ProjectivePoint(coords)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    /// The polynomial handed to the compiler.
    pub original: Polynomial,
    /// Four-squares transform of `original` (N-mode only).
    pub four_squares: Option<Polynomial>,
    /// The polynomial whose integer zeros the instance encodes.
    pub smoothing_input: Polynomial,
    pub smoothed: Polynomial,
    pub homogenizing_var: String,
    pub blowup: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceDescriptor {
    pub n: usize,
    pub curve: Curve,
    pub base_point: EcPoint,
    pub s: LatticeSet,
    /// `S'[i][j] = S[i][j] · P`.
    pub s_prime: Vec<Vec<EcPoint>>,
    pub base_point_x: ProjectivePoint,
    pub z_equation: Polynomial,
    pub smoothing: SmoothingResult,
    pub mode: SolvabilityMode,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CompileConfig {
    pub mode: SolvabilityMode,
    pub smoothing: SmoothConfig,
}

/// Replaces every variable `u` by `u_a^2 + u_b^2 + u_c^2 + u_d^2`.
///
/// By Lagrange's four-square theorem the result has an integer zero iff
/// `f` has a zero in the naturals. An `m`-variable input of degree `d`
/// becomes a `4m`-variable polynomial of degree `2d`.
pub fn four_squares_transform(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let source = f.registry();
    if source.arity() == 0 {
        return Err(Error::InvalidArgument("four-squares transform needs at least one variable".into()));
    }
    let names: Vec<String> = source
        .names()
        .iter()
        .flat_map(|u| ["a", "b", "c", "d"].map(|s| format!("{u}_{s}")))
        .collect();
    let target = VarRegistry::new(names.clone())?;
    let replacements: Vec<Polynomial> = names
        .chunks(4)
        .map(|four| {
            four.iter().fold(Polynomial::zero(&target), |acc, name| {
                &acc + &Polynomial::var(&target, name).expect("registered").pow(2)
            })
        })
        .collect();
    f.substitute(&replacements, &target)
}

/// Runs the full pipeline with an explicit curve and base point.
pub fn compile_instance(
    f: &Polynomial,
    config: &CompileConfig,
    curve: &Curve,
    base_point: &EcPoint,
) -> Result<InstanceDescriptor> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    if !infinite_order_sanity(base_point, curve)? {
        return Err(Error::InfiniteOrderSanityFailed);
    }
    let four_squares = match config.mode {
        SolvabilityMode::Integers => None,
        SolvabilityMode::Naturals => Some(four_squares_transform(f)?),
    };
    let smoothing_input = four_squares.clone().unwrap_or_else(|| f.clone());
    let smoothing = smooth_lift(&smoothing_input, &config.smoothing)?;
    let homogenizing_var = smoothing.smoothed.registry().fresh_name(HOMOGENIZING_VAR);
    let z_equation = smoothing.smoothed.homogenize(&homogenizing_var)?;
    let n = z_equation.registry().arity();
    let s = build_s(n)?;
    let s_prime = lift_lattice_set(&s, curve, base_point)?;

    Ok(InstanceDescriptor {
        n,
        curve: curve.clone(),
        base_point: base_point.clone(),
        s,
        s_prime,
        base_point_x: ProjectivePoint::base_point(n),
        z_equation,
        provenance: Provenance {
            original: f.clone(),
            four_squares,
            smoothing_input,
            smoothed: smoothing.smoothed.clone(),
            homogenizing_var,
            blowup: BLOWUP_MARKER.to_string(),
        },
        smoothing,
        mode: config.mode,
    })
}

/// [`compile_instance`] on 37A1 with `P = (0, 0)`.
pub fn compile_default(f: &Polynomial, config: &CompileConfig) -> Result<InstanceDescriptor> {
    compile_instance(f, config, &Curve::cremona_37a1(), &crate::elliptic::default_base_point())
}

/// Maps each lattice point `(s_1, ..., s_n)` to `(s_1 P, ..., s_n P)`.
pub fn lift_lattice_set(s: &LatticeSet, curve: &Curve, p: &EcPoint) -> Result<Vec<Vec<EcPoint>>> {
    s.points
        .iter()
        .map(|pt| pt.iter().map(|&k| scalar_mul(k, p, curve)).collect())
        .collect()
}

/// `σx = (a_1 : ... : a_{n-1} : eps)`.
pub fn sigma_image(g: &GElement) -> ProjectivePoint {
    let mut coords: Vec<BigInt> = g.a.iter().map(|&a| BigInt::from(a)).collect();
    coords.push(BigInt::from(g.eps));
    ProjectivePoint(coords)
}

/// True iff `pt` lies on `Z`.
pub fn point_in_z(desc: &InstanceDescriptor, pt: &ProjectivePoint) -> Result<bool> {
    if pt.dim() != desc.n {
        return Err(Error::DimensionMismatch { expected: desc.n, got: pt.dim() });
    }
    if pt.coords().iter().all(Zero::is_zero) {
        return Err(Error::ZeroProjectivePoint);
    }
    let point: Vec<Rational> = pt.coords().iter().map(|c| Rational::from_integer(c.clone())).collect();
    Ok(desc.z_equation.evaluate(&point)?.is_zero())
}

impl InstanceDescriptor {
    pub fn sigma_image(&self, g: &GElement) -> Result<ProjectivePoint> {
        if g.dim() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: g.dim() });
        }
        Ok(sigma_image(g))
    }

    pub fn point_in_z(&self, pt: &ProjectivePoint) -> Result<bool> {
        point_in_z(self, pt)
    }

    /// Re-checks the structural invariants, e.g. after reading an instance
    /// back from disk.
    pub fn check_coherence(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::MalformedInstance(msg.to_string()));
        if !self.z_equation.is_homogeneous() {
            return bad("Z equation is not homogeneous");
        }
        if self.z_equation.registry().arity() != self.n
            || self.smoothing.smoothed.registry().arity() + 1 != self.n
        {
            return bad("n does not match the variable counts");
        }
        if self.z_equation.dehomogenize(&self.provenance.homogenizing_var)? != self.smoothing.smoothed {
            return bad("Z equation does not dehomogenize to the smoothed polynomial");
        }
        if self.s != build_s(self.n)? {
            return bad("lattice set S does not match n");
        }
        if self.s_prime != lift_lattice_set(&self.s, &self.curve, &self.base_point)? {
            return bad("S' is not the image of S");
        }
        if !self.s_prime.iter().flatten().all(|pt| on_curve(pt, &self.curve)) {
            return bad("S' point off the curve");
        }
        if self.base_point_x != ProjectivePoint::base_point(self.n) {
            return bad("base point x is not (0 : ... : 0 : 1)");
        }
        if !self.smoothing.certificate.is_unit() {
            return bad("smoothing certificate is not {1}");
        }
        Ok(())
    }
}
