//! Canonical JSON file formats for polynomial maps, structures, and
//! verification reports.
//!
//! Polynomial terms are serialized in lexicographic exponent order with
//! canonical rational coefficient strings, so serialization is
//! deterministic: reading a canonical document and writing it back is
//! byte-identical. Coefficient and endpoint strings accept rationals
//! (`3/2`, `-1`) and plain decimals (`0.1`, which reads exactly as
//! `1/10`).

use crate::geom::{Chirality, Epsilon, EpsilonStructure, StructureReport};
use crate::map::PolyMap;
use crate::poly::Poly4;
use crate::sample::{BadDomain, BoxDomain};
use crate::scalar::{format_scalar, parse_scalar, ScalarParseError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Cap on serialized exponents; keeps derived quantities within `u32`.
pub const MAX_EXPONENT: u32 = 10_000;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid coefficient `{text}`: {source}")]
    Coefficient {
        text: String,
        source: ScalarParseError,
    },
    #[error("exponent {0} exceeds the supported maximum {MAX_EXPONENT}")]
    ExponentTooLarge(u32),
    #[error("invalid chirality `{0}` (expected `left` or `right`)")]
    Chirality(String),
    #[error("invalid epsilon {0} (expected -1 or 1)")]
    Epsilon(i64),
    #[error("invalid domain endpoint `{text}`: {source}")]
    DomainEndpoint {
        text: String,
        source: ScalarParseError,
    },
    #[error(transparent)]
    Domain(#[from] BadDomain),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coef: String,
    pub exp: [u32; 4],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub f0: Vec<TermDoc>,
    pub f1: Vec<TermDoc>,
    pub f2: Vec<TermDoc>,
    pub f3: Vec<TermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DomainDoc {
    pub lo: [String; 4],
    pub hi: [String; 4],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    pub chirality: String,
    pub epsilon: i64,
    pub domain: DomainDoc,
    pub f: MapDoc,
    pub h_sq: Vec<TermDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidualsDoc {
    pub j_squared: String,
    pub compatibility: String,
    pub omega_consistency: String,
    pub abc_relation: String,
    pub weyl: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDoc {
    pub pass: bool,
    pub symbolic_domega_zero: bool,
    pub regularity_ok: bool,
    pub samples_used: usize,
    pub seed: u64,
    pub tol: String,
    pub weyl_step: String,
    pub weyl_tol: String,
    pub residuals: ResidualsDoc,
}

fn poly_to_terms(poly: &Poly4) -> Vec<TermDoc> {
    poly.terms()
        .map(|(exp, coef)| TermDoc {
            coef: format_scalar(coef),
            exp: *exp,
        })
        .collect()
}

fn terms_to_poly(terms: &[TermDoc]) -> Result<Poly4, FormatError> {
    let mut poly = Poly4::zero();
    for term in terms {
        if let Some(&bad) = term.exp.iter().find(|&&e| e > MAX_EXPONENT) {
            return Err(FormatError::ExponentTooLarge(bad));
        }
        let coef = parse_scalar(&term.coef).map_err(|source| FormatError::Coefficient {
            text: term.coef.clone(),
            source,
        })?;
        poly.add_term(term.exp, coef);
    }
    Ok(poly)
}

fn map_to_doc(map: &PolyMap) -> MapDoc {
    MapDoc {
        f0: poly_to_terms(&map.f0),
        f1: poly_to_terms(&map.f1),
        f2: poly_to_terms(&map.f2),
        f3: poly_to_terms(&map.f3),
    }
}

fn doc_to_map(doc: &MapDoc) -> Result<PolyMap, FormatError> {
    Ok(PolyMap::new(
        terms_to_poly(&doc.f0)?,
        terms_to_poly(&doc.f1)?,
        terms_to_poly(&doc.f2)?,
        terms_to_poly(&doc.f3)?,
    ))
}

fn chirality_name(chirality: Chirality) -> &'static str {
    match chirality {
        Chirality::LeftJ => "left",
        Chirality::RightJ => "right",
    }
}

fn structure_to_doc(s: &EpsilonStructure) -> StructureDoc {
    StructureDoc {
        chirality: chirality_name(s.chirality).to_owned(),
        epsilon: s.epsilon.value(),
        domain: DomainDoc {
            lo: std::array::from_fn(|k| format_scalar(&s.domain.lo()[k])),
            hi: std::array::from_fn(|k| format_scalar(&s.domain.hi()[k])),
        },
        f: map_to_doc(&s.f),
        h_sq: poly_to_terms(&s.h_sq),
    }
}

fn doc_to_structure(doc: &StructureDoc) -> Result<EpsilonStructure, FormatError> {
    let chirality = match doc.chirality.as_str() {
        "left" => Chirality::LeftJ,
        "right" => Chirality::RightJ,
        other => return Err(FormatError::Chirality(other.to_owned())),
    };
    let epsilon = Epsilon::from_value(doc.epsilon).ok_or(FormatError::Epsilon(doc.epsilon))?;
    let endpoint = |text: &String| {
        parse_scalar(text).map_err(|source| FormatError::DomainEndpoint {
            text: text.clone(),
            source,
        })
    };
    let mut lo = std::array::from_fn(|_| crate::scalar::int(0));
    let mut hi = lo.clone();
    for k in 0..4 {
        lo[k] = endpoint(&doc.domain.lo[k])?;
        hi[k] = endpoint(&doc.domain.hi[k])?;
    }
    let domain = BoxDomain::new(lo, hi)?;
    Ok(EpsilonStructure {
        chirality,
        epsilon,
        f: doc_to_map(&doc.f)?,
        h_sq: terms_to_poly(&doc.h_sq)?,
        domain,
    })
}

fn report_to_doc(report: &StructureReport) -> ReportDoc {
    let dec = |v: f64| format!("{v:e}");
    ReportDoc {
        pass: report.pass,
        symbolic_domega_zero: report.symbolic_domega_zero,
        regularity_ok: report.regularity_ok,
        samples_used: report.samples_used,
        seed: report.seed,
        tol: dec(report.tol),
        weyl_step: dec(report.weyl_step),
        weyl_tol: dec(report.weyl_tol),
        residuals: ResidualsDoc {
            j_squared: dec(report.residuals.j_squared),
            compatibility: dec(report.residuals.compatibility),
            omega_consistency: dec(report.residuals.omega_consistency),
            abc_relation: dec(report.residuals.abc_relation),
            weyl: dec(report.residuals.weyl),
        },
    }
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("document serialization");
    text.push('\n');
    text
}

/// Canonical JSON form of a polynomial map.
pub fn map_to_json(map: &PolyMap) -> String {
    pretty(&map_to_doc(map))
}

pub fn map_from_json(text: &str) -> Result<PolyMap, FormatError> {
    let doc: MapDoc = serde_json::from_str(text)?;
    doc_to_map(&doc)
}

/// Canonical JSON form of a structure file.
pub fn structure_to_json(s: &EpsilonStructure) -> String {
    pretty(&structure_to_doc(s))
}

pub fn structure_from_json(text: &str) -> Result<EpsilonStructure, FormatError> {
    let doc: StructureDoc = serde_json::from_str(text)?;
    doc_to_structure(&doc)
}

/// JSON form of a verification report; residuals are decimal strings.
pub fn report_to_json(report: &StructureReport) -> String {
    pretty(&report_to_doc(report))
}
