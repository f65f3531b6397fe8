use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algengine::{sparsify, FinAlgebra};
use crate::exactfield::CycNumber;
use crate::hopfcore::{verify_hopf, HopfAlgebra, Tensor};
use crate::linalg::Mat;

use super::locate::line_of;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub cyclotomic_order: u32,
}

/// On-disk (H, R). `mult` entries [i, j, k, c] mean c·b_k in b_i·b_j; `comult` entries
/// [i, j, k, c] mean c·b_j⊗b_k in Δ(b_i); `antipode[i][j]` is the b_i-coordinate of
/// S(b_j); `R` entries [i, j, c] mean c·b_i⊗b_j.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFileV1 {
    pub schema_version: u32,
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<(usize, usize, usize, String)>,
    pub comult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
    #[serde(rename = "R")]
    pub r: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}{location}: {message}", line.map(|l| format!("line {l}, ")).unwrap_or_default())]
pub struct ParseError {
    pub line: Option<usize>,
    /// JSON path of the offending item, such as `mult[3]`.
    pub location: String,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("axiom {axiom} fails at basis indices {witness:?}")]
    Verify { axiom: String, witness: Vec<usize> },
}

fn coeff_text(c: &CycNumber) -> String {
    c.to_string()
}

/// The file form of (H, R); R is re-expressed over the field of H.
pub fn export(h: &HopfAlgebra, r: &Tensor) -> HopfFileV1 {
    let d = h.dim();
    let alg = h.algebra();
    let mut mult = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for (k, c) in alg.basis_product(i, j) {
                mult.push((i, j, *k, coeff_text(c)));
            }
        }
    }
    let comult = h
        .comult_table()
        .iter()
        .enumerate()
        .flat_map(|(i, terms)| terms.iter().map(move |(j, k, c)| (i, *j, *k, coeff_text(c))))
        .collect();
    let antipode = (0..d)
        .map(|i| h.antipode().row(i).iter().map(coeff_text).collect())
        .collect();
    HopfFileV1 {
        schema_version: SCHEMA_VERSION,
        field: FieldSpec {
            cyclotomic_order: h.order(),
        },
        dim: d,
        basis: h.names().to_vec(),
        mult,
        comult,
        unit: h.unit().iter().map(coeff_text).collect(),
        counit: h.counit().iter().map(coeff_text).collect(),
        antipode,
        r: r.nonzeros()
            .map(|(idx, c)| (idx[0], idx[1], coeff_text(&c.lift(h.order()))))
            .collect(),
    }
}

struct Ctx<'a> {
    text: &'a str,
    order: u32,
    dim: usize,
}

impl Ctx<'_> {
    fn error(&self, key: &str, index: Option<usize>, message: impl Into<String>) -> ParseError {
        let location = match index {
            Some(i) => format!("{key}[{i}]"),
            None => key.to_string(),
        };
        ParseError {
            line: line_of(self.text, key, index),
            location,
            message: message.into(),
        }
    }

    fn coeff(&self, key: &str, index: usize, text: &str) -> Result<CycNumber, ParseError> {
        CycNumber::parse(text, self.order).map_err(|e| self.error(key, Some(index), format!("coefficient {text:?}: {e}")))
    }

    fn indices(&self, key: &str, index: usize, idx: &[usize]) -> Result<(), ParseError> {
        match idx.iter().find(|&&i| i >= self.dim) {
            Some(bad) => Err(self.error(key, Some(index), format!("index {bad} out of range for dim {} in {idx:?}", self.dim))),
            None => Ok(()),
        }
    }

    fn vector(&self, key: &str, v: &[String]) -> Result<Vec<CycNumber>, ParseError> {
        if v.len() != self.dim {
            return Err(self.error(key, None, format!("expected {} entries, found {}", self.dim, v.len())));
        }
        v.iter().enumerate().map(|(i, t)| self.coeff(key, i, t)).collect()
    }
}

fn merge(order: u32, terms: BTreeMap<(usize, usize), CycNumber>) -> Vec<(usize, usize, CycNumber)> {
    terms
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((j, k), c)| (j, k, c.lift(order)))
        .collect()
}

/// Parses HopfFileV1 text into (H, R) without checking any axiom.
pub fn parse_str(text: &str) -> Result<(HopfAlgebra, Tensor), ParseError> {
    let file: HopfFileV1 = serde_json::from_str(text).map_err(|e| ParseError {
        line: Some(e.line()),
        location: format!("column {}", e.column()),
        message: e.to_string(),
    })?;
    let ctx = Ctx {
        text,
        order: file.field.cyclotomic_order,
        dim: file.dim,
    };
    if file.schema_version != SCHEMA_VERSION {
        return Err(ctx.error("schema_version", None, format!("unsupported version {}", file.schema_version)));
    }
    if ctx.order == 0 {
        return Err(ctx.error("field", None, "cyclotomic_order must be positive"));
    }
    let (order, d) = (ctx.order, ctx.dim);
    if file.basis.len() != d {
        return Err(ctx.error("basis", None, format!("expected {d} names, found {}", file.basis.len())));
    }

    let mut dense = vec![vec![CycNumber::zero(order); d]; d * d];
    for (n, (i, j, k, c)) in file.mult.iter().enumerate() {
        ctx.indices("mult", n, &[*i, *j, *k])?;
        dense[i * d + j][*k] += &ctx.coeff("mult", n, c)?;
    }
    let mult = dense.iter().map(|v| sparsify(v)).collect();
    let unit = ctx.vector("unit", &file.unit)?;
    let algebra = FinAlgebra::from_sparse(order, d, mult, unit);

    let mut comult = vec![BTreeMap::new(); d];
    for (n, (i, j, k, c)) in file.comult.iter().enumerate() {
        ctx.indices("comult", n, &[*i, *j, *k])?;
        let value = ctx.coeff("comult", n, c)?;
        *comult[*i].entry((*j, *k)).or_insert_with(|| CycNumber::zero(order)) += &value;
    }
    let comult = comult.into_iter().map(|t| merge(order, t)).collect();
    let counit = ctx.vector("counit", &file.counit)?;

    if file.antipode.len() != d {
        return Err(ctx.error("antipode", None, format!("expected {d} rows, found {}", file.antipode.len())));
    }
    let rows = file
        .antipode
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != d {
                return Err(ctx.error("antipode", Some(i), format!("expected {d} entries, found {}", row.len())));
            }
            row.iter().map(|t| ctx.coeff("antipode", i, t)).collect()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let antipode = Mat::from_rows(order, d, rows);

    let mut r = vec![CycNumber::zero(order); d * d];
    for (n, (i, j, c)) in file.r.iter().enumerate() {
        ctx.indices("R", n, &[*i, *j])?;
        r[i * d + j] += &ctx.coeff("R", n, c)?;
    }
    let hopf = HopfAlgebra::new(file.basis, algebra, comult, counit, antipode);
    Ok((hopf, Tensor::from_data(order, d, 2, r)))
}

/// Parses and, when `verify` is set, checks the Hopf algebra axioms.
pub fn load_str(text: &str, verify: bool) -> Result<(HopfAlgebra, Tensor), LoadError> {
    let (h, r) = parse_str(text)?;
    if verify {
        if let Some(check) = verify_hopf(&h).first_failure() {
            return Err(LoadError::Verify {
                axiom: check.axiom.to_string(),
                witness: check.witness.clone().unwrap_or_default(),
            });
        }
    }
    Ok((h, r))
}

pub fn load(path: &Path, verify: bool) -> Result<(HopfAlgebra, Tensor), LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_str(&text, verify)
}
