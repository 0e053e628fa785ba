//! JSON form of compiled instances.
//!
//! Polynomials are written as `{ "variables": [...], "expr": "..." }` with
//! `expr` in the polynomial grammar; rationals are `"p/q"` strings; points
//! are `{"kind": "infinity"}` or `{"kind": "affine", "x": ..., "y": ...}`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::elliptic::{rational_from_str, rational_to_string, Curve, EcPoint};
use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, TermOrder};
use crate::lattice::LatticeSet;
use crate::poly::{parse_poly, Polynomial, VarRegistry};
use crate::reducer::{InstanceDescriptor, ProjectivePoint, Provenance, SolvabilityMode};
use crate::smoothing::{jacobian_generators, RejectedCandidate, SmoothingResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDto {
    pub variables: Vec<String>,
    pub expr: String,
}

impl PolyDto {
    pub fn from_poly(p: &Polynomial) -> Self {
        PolyDto { variables: p.registry().names().to_vec(), expr: p.to_string() }
    }

    pub fn to_poly(&self) -> Result<Polynomial> {
        let registry = VarRegistry::new(self.variables.iter().cloned())?;
        parse_poly(&self.expr, &registry)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDto {
    pub a1: String,
    pub a2: String,
    pub a3: String,
    pub a4: String,
    pub a6: String,
    pub label: Option<String>,
}

impl CurveDto {
    pub fn from_curve(c: &Curve) -> Self {
        CurveDto {
            a1: rational_to_string(&c.a1),
            a2: rational_to_string(&c.a2),
            a3: rational_to_string(&c.a3),
            a4: rational_to_string(&c.a4),
            a6: rational_to_string(&c.a6),
            label: c.label.clone(),
        }
    }

    pub fn to_curve(&self) -> Result<Curve> {
        Curve::new(
            rational_from_str(&self.a1)?,
            rational_from_str(&self.a2)?,
            rational_from_str(&self.a3)?,
            rational_from_str(&self.a4)?,
            rational_from_str(&self.a6)?,
            self.label.clone(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PointDto {
    Infinity,
    Affine { x: String, y: String },
}

impl From<&EcPoint> for PointDto {
    fn from(p: &EcPoint) -> Self {
        match p {
            EcPoint::Infinity => PointDto::Infinity,
            EcPoint::Affine { x, y } => PointDto::Affine { x: rational_to_string(x), y: rational_to_string(y) },
        }
    }
}

impl PointDto {
    pub fn to_point(&self) -> Result<EcPoint> {
        Ok(match self {
            PointDto::Infinity => EcPoint::Infinity,
            PointDto::Affine { x, y } => EcPoint::Affine { x: rational_from_str(x)?, y: rational_from_str(y)? },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDto {
    pub order: TermOrder,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
}

impl BasisDto {
    pub fn from_basis(b: &GroebnerBasis) -> Self {
        BasisDto {
            order: b.order(),
            variables: b.registry().names().to_vec(),
            generators: b.generators().iter().map(ToString::to_string).collect(),
        }
    }

    fn to_basis(&self, source: Vec<Polynomial>) -> Result<GroebnerBasis> {
        let registry = VarRegistry::new(self.variables.iter().cloned())?;
        let generators = self.generators.iter().map(|g| parse_poly(g, &registry)).collect::<Result<_>>()?;
        Ok(GroebnerBasis::from_parts(registry, generators, self.order, source))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectedDto {
    pub c: u64,
    pub basis: BasisDto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothingDto {
    pub c: u64,
    pub input: PolyDto,
    #[serde(rename = "F")]
    pub smoothed: PolyDto,
    pub y_var: String,
    pub certificate: BasisDto,
    pub rejected: Vec<RejectedDto>,
    pub degree_in: u32,
    pub degree_out: u32,
    pub geometrically_integral: bool,
}

impl SmoothingDto {
    pub fn from_result(r: &SmoothingResult) -> Self {
        SmoothingDto {
            c: r.c,
            input: PolyDto::from_poly(&r.input),
            smoothed: PolyDto::from_poly(&r.smoothed),
            y_var: r.y_var.clone(),
            certificate: BasisDto::from_basis(&r.certificate),
            rejected: r
                .rejected
                .iter()
                .map(|rc| RejectedDto { c: rc.c, basis: BasisDto::from_basis(&rc.basis) })
                .collect(),
            degree_in: r.degree_in,
            degree_out: r.degree_out,
            geometrically_integral: r.geometrically_integral,
        }
    }

    pub fn to_result(&self) -> Result<SmoothingResult> {
        let input = self.input.to_poly()?;
        let smoothed = self.smoothed.to_poly()?;
        let rejected = self
            .rejected
            .iter()
            .map(|rd| {
                let candidate = crate::smoothing::build_candidate_with_var(&input, rd.c, &self.y_var)?;
                Ok(RejectedCandidate { c: rd.c, basis: rd.basis.to_basis(jacobian_generators(&candidate)?)? })
            })
            .collect::<Result<_>>()?;
        Ok(SmoothingResult {
            c: self.c,
            certificate: self.certificate.to_basis(jacobian_generators(&smoothed)?)?,
            input,
            smoothed,
            y_var: self.y_var.clone(),
            rejected,
            degree_in: self.degree_in,
            degree_out: self.degree_out,
            geometrically_integral: self.geometrically_integral,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceDto {
    pub original: PolyDto,
    pub four_squares: Option<PolyDto>,
    pub smoothing_input: PolyDto,
    pub smoothed: PolyDto,
    pub homogenizing_var: String,
    pub blowup: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDto {
    pub schema_version: u32,
    pub n: usize,
    pub curve: CurveDto,
    #[serde(rename = "P")]
    pub base_point: PointDto,
    #[serde(rename = "S")]
    pub s: Vec<Vec<i64>>,
    #[serde(rename = "S_prime")]
    pub s_prime: Vec<Vec<PointDto>>,
    pub base_point_x: Vec<String>,
    #[serde(rename = "Z_equation")]
    pub z_equation: PolyDto,
    pub smoothing: SmoothingDto,
    pub mode: SolvabilityMode,
    pub provenance: ProvenanceDto,
}

impl InstanceDto {
    pub fn from_descriptor(d: &InstanceDescriptor) -> Self {
        let p = &d.provenance;
        InstanceDto {
            schema_version: SCHEMA_VERSION,
            n: d.n,
            curve: CurveDto::from_curve(&d.curve),
            base_point: (&d.base_point).into(),
            s: d.s.points.clone(),
            s_prime: d.s_prime.iter().map(|row| row.iter().map(PointDto::from).collect()).collect(),
            base_point_x: d.base_point_x.normalized().coords().iter().map(ToString::to_string).collect(),
            z_equation: PolyDto::from_poly(&d.z_equation),
            smoothing: SmoothingDto::from_result(&d.smoothing),
            mode: d.mode,
            provenance: ProvenanceDto {
                original: PolyDto::from_poly(&p.original),
                four_squares: p.four_squares.as_ref().map(PolyDto::from_poly),
                smoothing_input: PolyDto::from_poly(&p.smoothing_input),
                smoothed: PolyDto::from_poly(&p.smoothed),
                homogenizing_var: p.homogenizing_var.clone(),
                blowup: p.blowup.clone(),
            },
        }
    }

    pub fn to_descriptor(&self) -> Result<InstanceDescriptor> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::MalformedInstance(format!("unsupported schema_version {}", self.schema_version)));
        }
        let curve = self.curve.to_curve()?;
        let coords = self
            .base_point_x
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|_| Error::MalformedInstance(format!("bad coordinate `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        let p = &self.provenance;
        let desc = InstanceDescriptor {
            n: self.n,
            curve,
            base_point: self.base_point.to_point()?,
            s: LatticeSet { n: self.n, points: self.s.clone() },
            s_prime: self
                .s_prime
                .iter()
                .map(|row| row.iter().map(PointDto::to_point).collect())
                .collect::<Result<_>>()?,
            base_point_x: ProjectivePoint::new(coords)?,
            z_equation: self.z_equation.to_poly()?,
            smoothing: self.smoothing.to_result()?,
            mode: self.mode,
            provenance: Provenance {
                original: p.original.to_poly()?,
                four_squares: p.four_squares.as_ref().map(PolyDto::to_poly).transpose()?,
                smoothing_input: p.smoothing_input.to_poly()?,
                smoothed: p.smoothed.to_poly()?,
                homogenizing_var: p.homogenizing_var.clone(),
                blowup: p.blowup.clone(),
            },
        };
        desc.check_coherence()?;
        Ok(desc)
    }
}

impl InstanceDescriptor {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&InstanceDto::from_descriptor(self)).expect("instance serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let dto: InstanceDto = serde_json::from_str(text).map_err(|e| Error::MalformedInstance(e.to_string()))?;
        dto.to_descriptor()
    }
}
