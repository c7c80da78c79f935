//! Versioned JSON reports. Field elements are written as coefficient vectors
//! over the prime field, lowest power of the generator first.

use serde::Serialize;

use crate::algebra::field::{Elem, FieldDesc};
use crate::classify::{
    delta_inner, delta_outer, DeltaDescription, Detection, InnerCertificate, OuterCertificate,
    ScanReport,
};
use crate::error::Error;
use crate::galois::{GaloisOptions, GaloisReport, GroupId, PointKind, SliceReport, Status};
use crate::geometry::{LinearSubspace, ProjPoint, ProjTransform};
use crate::oracle::{CrossCheck, PglSearch, TowerReport};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const SCHEMA: u32 = 1;

pub fn elem_coeffs(f: &FieldDesc, a: Elem) -> Vec<u64> {
    f.digits(a)
}

pub fn point_coeffs(p: &ProjPoint) -> Vec<Vec<u64>> {
    p.coords()
        .iter()
        .map(|&a| elem_coeffs(p.field(), a))
        .collect()
}

pub fn matrix_coeffs(m: &ProjTransform) -> Vec<Vec<Vec<u64>>> {
    m.matrix()
        .iter()
        .map(|row| row.iter().map(|&a| elem_coeffs(m.field(), a)).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub field: String,
    pub characteristic: u64,
    pub extension_degree: u32,
    /// Coefficients of the defining modulus, constant term first.
    pub modulus: Vec<u64>,
    pub m_max: u32,
    pub seed: u64,
    pub samples: Option<usize>,
    pub budget: Option<u64>,
    pub cross_check: bool,
}

impl Config {
    pub fn new(field: &FieldDesc, opts: &GaloisOptions) -> Self {
        Config {
            field: field.to_string(),
            characteristic: field.characteristic(),
            extension_degree: field.degree(),
            modulus: field.modulus().to_vec(),
            m_max: opts.m_max,
            seed: opts.seed,
            samples: None,
            budget: None,
            cross_check: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Input {
    pub text: String,
    pub polynomial: String,
    pub point: Option<Vec<Vec<u64>>>,
    pub point_text: Option<String>,
}

/// Common header followed by the command-specific body.
#[derive(Clone, Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema: u32,
    pub version: &'static str,
    pub command: String,
    /// Absent only when the input could not be resolved.
    pub config: Option<Config>,
    pub input: Input,
    #[serde(flatten)]
    pub body: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, config: Option<Config>, input: Input, body: T) -> Self {
        Envelope {
            schema: SCHEMA,
            version: VERSION,
            command: command.into(),
            config,
            input,
            body,
        }
    }

    pub fn to_json(&self, pretty: bool) -> String {
        let r = if pretty {
            serde_json::to_string_pretty(self)
        } else {
            serde_json::to_string(self)
        };
        r.expect("report serialization")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorInfo {
    pub code: String,
    pub message: String,
}

impl From<&Error> for ErrorInfo {
    fn from(e: &Error) -> Self {
        ErrorInfo {
            code: e.code().into(),
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorBody {
    pub status: &'static str,
    pub error: ErrorInfo,
}

impl ErrorBody {
    pub fn new(e: &Error) -> Self {
        ErrorBody {
            status: "error",
            error: e.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckBody {
    pub status: Status,
    pub kind: PointKind,
    pub degree: usize,
    pub roots_found: usize,
    pub group: Option<GroupId>,
    pub automorphisms: Vec<String>,
    /// Field of constants the automorphism images are written over.
    pub constants: Option<String>,
    pub m_used: u32,
    pub seed: u64,
    pub factor_degrees: Vec<usize>,
    pub reason: Option<String>,
    pub hypothesis_log: Vec<String>,
    pub cross_check: Option<CrossCheckJson>,
}

impl CheckBody {
    pub fn new(r: &GaloisReport, cc: Option<&CrossCheck>) -> Self {
        CheckBody {
            status: r.status,
            kind: r.kind,
            degree: r.degree,
            roots_found: r.roots_found,
            group: r.group.clone(),
            automorphisms: r.automorphisms.clone(),
            constants: r.data.as_ref().map(|d| d.field.base().to_string()),
            m_used: r.m_used,
            seed: r.seed,
            factor_degrees: r.factor_degrees.clone(),
            reason: r.reason.clone(),
            hypothesis_log: r.hypothesis_log.clone(),
            cross_check: cc.map(CrossCheckJson::new),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PglJson {
    pub field: String,
    pub found: usize,
    pub degree: usize,
    pub full_group: bool,
    pub searched: u64,
    pub matrices: Vec<Vec<Vec<Vec<u64>>>>,
}

impl PglJson {
    pub fn new(s: &PglSearch) -> Self {
        PglJson {
            field: s.field.to_string(),
            found: s.automorphisms.len(),
            degree: s.degree,
            full_group: s.full_group,
            searched: s.searched,
            matrices: s
                .automorphisms
                .iter()
                .map(|a| matrix_coeffs(&a.matrix))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome<T: Serialize> {
    pub result: Option<T>,
    pub error: Option<ErrorInfo>,
}

impl<T: Serialize> Outcome<T> {
    fn from<S>(r: &std::result::Result<S, Error>, f: impl Fn(&S) -> T) -> Self {
        match r {
            Ok(s) => Outcome {
                result: Some(f(s)),
                error: None,
            },
            Err(e) => Outcome {
                result: None,
                error: Some(e.into()),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckJson {
    pub tower_level: u32,
    pub linear_level: u32,
    pub agrees: bool,
    pub tower: Outcome<TowerReport>,
    pub linear: Outcome<PglJson>,
}

impl CrossCheckJson {
    pub fn new(c: &CrossCheck) -> Self {
        CrossCheckJson {
            tower_level: c.tower_level,
            linear_level: c.linear_level,
            agrees: c.agrees,
            tower: Outcome::from(&c.tower, Clone::clone),
            linear: Outcome::from(&c.pgl, PglJson::new),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubspaceJson {
    pub display: String,
    pub dim: isize,
    pub equations: Vec<Vec<Vec<u64>>>,
}

impl SubspaceJson {
    pub fn new(s: &LinearSubspace) -> Self {
        let f = s.field();
        SubspaceJson {
            display: s.to_string(),
            dim: s.dim(),
            equations: s
                .equations()
                .iter()
                .map(|r| r.iter().map(|&a| elem_coeffs(f, a)).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateJson {
    pub matrix: Vec<Vec<Vec<u64>>>,
    pub p: u64,
    pub e: u32,
    pub scalar: Option<Vec<u64>>,
    /// `alpha[i-1][j]` multiplies `X_i^(p^j)`.
    pub alpha: Option<Vec<Vec<Vec<u64>>>>,
    pub degree_below_four: Option<bool>,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaJson {
    pub excluded: Option<SubspaceJson>,
    pub h0: Option<SubspaceJson>,
    pub s: Option<SubspaceJson>,
    pub t: Option<SubspaceJson>,
}

impl DeltaJson {
    pub fn new(d: &DeltaDescription) -> Self {
        match d {
            DeltaDescription::Inner { excluded } => DeltaJson {
                excluded: Some(SubspaceJson::new(excluded)),
                h0: None,
                s: None,
                t: None,
            },
            DeltaDescription::Outer { h0, s, t } => DeltaJson {
                excluded: None,
                h0: Some(SubspaceJson::new(h0)),
                s: Some(SubspaceJson::new(s)),
                t: Some(SubspaceJson::new(t)),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DetectionJson {
    pub found: bool,
    pub reason: Option<&'static str>,
    pub detail: Option<String>,
    pub certificate: Option<CertificateJson>,
    pub delta: Option<DeltaJson>,
}

impl DetectionJson {
    fn not_found<C>(d: &Detection<C>) -> Self {
        let detail = match d {
            Detection::NotFound { detail, .. } => Some(detail.clone()),
            _ => None,
        };
        DetectionJson {
            found: false,
            reason: d.reason(),
            detail,
            certificate: None,
            delta: None,
        }
    }

    pub fn inner(d: &Detection<InnerCertificate>) -> Self {
        let Some(c) = d.found() else {
            return Self::not_found(d);
        };
        let f = c.matrix.field();
        DetectionJson {
            found: true,
            reason: None,
            detail: None,
            certificate: Some(CertificateJson {
                matrix: matrix_coeffs(&c.matrix),
                p: c.p,
                e: c.e,
                scalar: Some(elem_coeffs(f, c.scalar)),
                alpha: None,
                degree_below_four: Some(c.degree_below_four),
                residual: c.residual.to_string(),
            }),
            delta: Some(DeltaJson::new(&delta_inner(c))),
        }
    }

    pub fn outer(d: &Detection<OuterCertificate>) -> Self {
        let Some(c) = d.found() else {
            return Self::not_found(d);
        };
        let f = c.matrix.field();
        DetectionJson {
            found: true,
            reason: None,
            detail: None,
            certificate: Some(CertificateJson {
                matrix: matrix_coeffs(&c.matrix),
                p: c.p,
                e: c.e,
                scalar: None,
                alpha: Some(
                    c.alpha
                        .iter()
                        .map(|r| r.iter().map(|&a| elem_coeffs(f, a)).collect())
                        .collect(),
                ),
                degree_below_four: None,
                residual: c.residual.to_string(),
            }),
            delta: Some(DeltaJson::new(&delta_outer(c))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyBody {
    pub status: &'static str,
    pub inner: DetectionJson,
    pub outer: DetectionJson,
    pub scan: Option<ScanReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanBody {
    pub status: &'static str,
    #[serde(flatten)]
    pub scan: ScanReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct SliceBody {
    pub status: &'static str,
    #[serde(flatten)]
    pub slice: SliceReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupBody {
    pub status: &'static str,
    pub group: GroupId,
    pub automorphisms: Vec<String>,
    pub constants: String,
    /// `table[i][j]` is the index of `σ_i ∘ σ_j`.
    pub table: Vec<Vec<usize>>,
    pub m_used: u32,
}
