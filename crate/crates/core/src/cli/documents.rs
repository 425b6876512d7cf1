//! JSON input documents.
//!
//! Rationals are strings (`"3/2"`, `"-4"`), jets are arrays of them with
//! index = power of `x`. Arrays are read as exact polynomials unless the
//! document sets `"series": true`.
//!
//! ```json
//! {"order": 2, "c0": ["0","0","0"], "c1": ["0","0","0"],
//!  "c2": ["0","1","0"], "c3": ["1","0","0"]}
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::cartan::PointXYU;
use crate::equation::{AbelEquation, ChartedEquation, PseudoGroupMap};
use crate::error::Error as MathError;
use crate::series::{format_rational, parse_rational, Jet, Rational};

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("{path}: field `{field}`: {message}")]
    Invalid { path: PathBuf, field: String, message: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquationDocument {
    pub order: usize,
    pub c0: Vec<String>,
    pub c1: Vec<String>,
    pub c2: Vec<String>,
    pub c3: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dvar: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub series: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub u: Vec<String>,
    pub nu: Vec<String>,
    pub mu: Vec<String>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub series: bool,
}

/// A single jet: a bare array, or `{"coeffs": [...], "series": bool}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SeriesDocument {
    Bare(Vec<String>),
    Tagged {
        coeffs: Vec<String>,
        #[serde(default)]
        series: bool,
    },
}

/// A point of `(x, y, u)` space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDocument {
    pub x: String,
    pub y: String,
    pub u: String,
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// Where a document came from, for error messages.
#[derive(Clone, Debug)]
pub struct Source {
    pub path: PathBuf,
    pub text: String,
}

impl Source {
    /// Reads `arg` as a file, or as inline JSON when it starts with `[` or `{`.
    pub fn load(arg: &str) -> Result<Self, DocumentError> {
        let trimmed = arg.trim_start();
        if trimmed.starts_with('[') || trimmed.starts_with('{') {
            return Ok(Self { path: PathBuf::from("<inline>"), text: arg.to_string() });
        }
        let path = Path::new(arg).to_path_buf();
        let text = fs::read_to_string(&path).map_err(|source| DocumentError::Io { path: path.clone(), source })?;
        Ok(Self { path, text })
    }

    pub fn parse<T: for<'de> Deserialize<'de>>(&self) -> Result<T, DocumentError> {
        serde_json::from_str(&self.text).map_err(|source| DocumentError::Parse { path: self.path.clone(), source })
    }

    fn invalid(&self, field: impl Into<String>, message: impl ToString) -> DocumentError {
        DocumentError::Invalid { path: self.path.clone(), field: field.into(), message: message.to_string() }
    }

    fn jet(&self, field: &str, text: &[String], series: bool) -> Result<Jet, DocumentError> {
        if text.is_empty() {
            return Err(self.invalid(field, "empty coefficient array"));
        }
        let coeffs = text
            .iter()
            .enumerate()
            .map(|(k, t)| parse_rational(t).map_err(|e| self.invalid(format!("{field}[{k}]"), e)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(if series { Jet::new(coeffs) } else { Jet::polynomial(coeffs) })
    }

    fn rational(&self, field: &str, text: &str) -> Result<Rational, DocumentError> {
        parse_rational(text).map_err(|e| self.invalid(field, e))
    }

    fn math(&self, field: &str, err: MathError) -> DocumentError {
        self.invalid(field, err)
    }
}

pub fn equation_from(src: &Source) -> Result<ChartedEquation, DocumentError> {
    let doc: EquationDocument = src.parse()?;
    let [c0, c1, c2, c3] = cubic_from(src, &doc)?;
    if c3.constant_term() == &Rational::from_integer(0.into()) {
        return Err(src.invalid("c3[0]", "leading coefficient must be nonzero at the origin"));
    }
    let eq = AbelEquation::new(c0, c1, c2, c3).map_err(|e| src.math("c3", e))?;
    match &doc.dvar {
        None => Ok(eq.into()),
        Some(d) => {
            check_len(src, "dvar", d, doc.order)?;
            let dvar = src.jet("dvar", d, doc.series)?;
            ChartedEquation::new(eq, dvar).map_err(|e| src.math("dvar", e))
        }
    }
}

/// The four coefficient arrays with no constraint on `c3`.
pub fn cubic_from(src: &Source, doc: &EquationDocument) -> Result<[Jet; 4], DocumentError> {
    let fields = [("c0", &doc.c0), ("c1", &doc.c1), ("c2", &doc.c2), ("c3", &doc.c3)];
    let mut out = Vec::with_capacity(4);
    for (name, text) in fields {
        check_len(src, name, text, doc.order)?;
        out.push(src.jet(name, text, doc.series)?);
    }
    Ok(out.try_into().expect("four coefficients"))
}

fn check_len(src: &Source, field: &str, text: &[String], order: usize) -> Result<(), DocumentError> {
    if text.len() != order + 1 {
        return Err(src.invalid(field, format!("expected {} coefficients, found {}", order + 1, text.len())));
    }
    Ok(())
}

pub fn parse_equation(path: &str) -> Result<ChartedEquation, DocumentError> {
    equation_from(&Source::load(path)?)
}

pub fn map_from(src: &Source) -> Result<PseudoGroupMap, DocumentError> {
    let doc: MapDocument = src.parse()?;
    let order = doc.u.len().saturating_sub(1);
    for (name, text) in [("nu", &doc.nu), ("mu", &doc.mu)] {
        check_len(src, name, text, order)?;
    }
    let u = src.jet("u", &doc.u, doc.series)?;
    let nu = src.jet("nu", &doc.nu, doc.series)?;
    let mu = src.jet("mu", &doc.mu, doc.series)?;
    PseudoGroupMap::new(u, nu, mu).map_err(|e| match e {
        MathError::ZeroLeading(field) => src.invalid(format!("{field}[0]"), "must be nonzero"),
        other => src.math("map", other),
    })
}

pub fn parse_map(path: &str) -> Result<PseudoGroupMap, DocumentError> {
    map_from(&Source::load(path)?)
}

pub fn series_from(src: &Source) -> Result<Jet, DocumentError> {
    match src.parse::<SeriesDocument>()? {
        SeriesDocument::Bare(c) => src.jet("coeffs", &c, false),
        SeriesDocument::Tagged { coeffs, series } => src.jet("coeffs", &coeffs, series),
    }
}

pub fn parse_series(path: &str) -> Result<Jet, DocumentError> {
    series_from(&Source::load(path)?)
}

pub fn points_from(src: &Source) -> Result<Vec<PointXYU>, DocumentError> {
    let docs: Vec<PointDocument> = src.parse()?;
    docs.iter()
        .enumerate()
        .map(|(i, p)| {
            let x = src.rational(&format!("[{i}].x"), &p.x)?;
            let y = src.rational(&format!("[{i}].y"), &p.y)?;
            let u = src.rational(&format!("[{i}].u"), &p.u)?;
            PointXYU::new(x, y, u).map_err(|e| src.invalid(format!("[{i}].u"), e))
        })
        .collect()
}

pub fn jet_strings(j: &Jet) -> Vec<String> {
    j.coeffs().iter().map(format_rational).collect()
}

impl EquationDocument {
    pub fn from_equation(eq: &ChartedEquation) -> Self {
        let [c0, c1, c2, c3] = eq.eq.coefficients();
        let polynomial = eq.eq.coefficients().iter().all(Jet::is_polynomial);
        Self {
            order: eq.order(),
            c0: jet_strings(c0),
            c1: jet_strings(c1),
            c2: jet_strings(c2),
            c3: jet_strings(c3),
            dvar: (!eq.is_original()).then(|| jet_strings(&eq.dvar)),
            series: !polynomial,
        }
    }
}

impl MapDocument {
    pub fn from_map(t: &PseudoGroupMap) -> Self {
        Self {
            u: jet_strings(&t.u),
            nu: jet_strings(&t.nu),
            mu: jet_strings(&t.mu),
            series: ![&t.u, &t.nu, &t.mu].iter().all(|j| j.is_polynomial()),
        }
    }
}
