//! JSON file formats for algebras, ideals, pairs and crossed modules.
//!
//! Scalars are serialized as exact strings ("3", "-2/7"); indices are
//! 0-based; zero brackets and zero action entries are omitted.  Emission
//! is canonical (ascending index order, reduced scalar strings), so
//! emit -> parse -> emit is byte-identical.

use serde::{Deserialize, Serialize};

use crate::algebra::{LeibnizAlgebra, Pair};
use crate::cover::CrossedModule;
use crate::error::{Error, Result};
use crate::matrix::{vec_is_zero, zero_vec, Matrix, Vector};
use crate::scalar::{Field, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldRepr {
    Gf {
        #[serde(rename = "GF")]
        gf: u64,
    },
    Name(String),
}

impl FieldRepr {
    pub fn of(field: Field) -> FieldRepr {
        match field {
            Field::Q => FieldRepr::Name("Q".to_string()),
            Field::Gf(p) => FieldRepr::Gf { gf: p },
        }
    }

    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldRepr::Name(s) if s == "Q" => Ok(Field::Q),
            FieldRepr::Name(s) => Err(Error::Parse(format!("unknown field {s:?}"))),
            FieldRepr::Gf { gf } => {
                let f = Field::Gf(*gf);
                f.validate()?;
                Ok(f)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermRepr {
    pub basis: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketRepr {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<TermRepr>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldRepr,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketRepr>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealFile {
    pub span: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairFile {
    pub algebra: AlgebraFile,
    pub ideal: IdealFile,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionEntry {
    pub x: usize,
    pub m: usize,
    pub terms: Vec<TermRepr>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CrossedModuleFile {
    pub m: AlgebraFile,
    pub g: AlgebraFile,
    pub delta: Vec<Vec<String>>,
    pub left_action: Vec<ActionEntry>,
    pub right_action: Vec<ActionEntry>,
}

fn terms_of(v: &[(usize, Scalar)]) -> Vec<TermRepr> {
    v.iter()
        .map(|(k, c)| TermRepr {
            basis: *k,
            coeff: c.to_string(),
        })
        .collect()
}

fn terms_to_vec(field: Field, dim: usize, terms: &[TermRepr]) -> Result<Vector> {
    let mut out = zero_vec(field, dim);
    for t in terms {
        if t.basis >= dim {
            return Err(Error::Parse(format!(
                "basis index {} out of range for dimension {dim}",
                t.basis
            )));
        }
        let c = Scalar::parse(field, &t.coeff)?;
        out[t.basis] = &out[t.basis] + &c;
    }
    Ok(out)
}

pub fn algebra_to_file(a: &LeibnizAlgebra) -> AlgebraFile {
    let mut brackets = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let sc = a.structure_constant(i, j);
            if !sc.is_empty() {
                brackets.push(BracketRepr {
                    left: i,
                    right: j,
                    terms: terms_of(sc),
                });
            }
        }
    }
    AlgebraFile {
        field: FieldRepr::of(a.field()),
        basis: a.labels().to_vec(),
        brackets,
    }
}

pub fn algebra_from_file(f: &AlgebraFile) -> Result<LeibnizAlgebra> {
    let field = f.field.to_field()?;
    let dim = f.basis.len();
    let mut brackets = Vec::new();
    for b in &f.brackets {
        if b.left >= dim || b.right >= dim {
            return Err(Error::Parse(format!(
                "bracket ({}, {}) out of range for dimension {dim}",
                b.left, b.right
            )));
        }
        let mut terms = Vec::with_capacity(b.terms.len());
        for t in &b.terms {
            if t.basis >= dim {
                return Err(Error::Parse(format!(
                    "bracket target {} out of range for dimension {dim}",
                    t.basis
                )));
            }
            terms.push((t.basis, Scalar::parse(field, &t.coeff)?));
        }
        brackets.push((b.left, b.right, terms));
    }
    LeibnizAlgebra::new(field, f.basis.clone(), &brackets)
}

fn rows_to_strings(rows: &[Vector]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect()
}

fn rows_from_strings(field: Field, cols: usize, rows: &[Vec<String>]) -> Result<Vec<Vector>> {
    rows.iter()
        .map(|r| {
            if r.len() != cols {
                return Err(Error::Parse(format!(
                    "row has {} entries, expected {cols}",
                    r.len()
                )));
            }
            r.iter().map(|s| Scalar::parse(field, s)).collect()
        })
        .collect()
}

pub fn ideal_to_file(s: &Subspace) -> IdealFile {
    IdealFile {
        span: rows_to_strings(&s.basis_vectors()),
    }
}

pub fn ideal_from_file(field: Field, ambient: usize, f: &IdealFile) -> Result<Subspace> {
    let rows = rows_from_strings(field, ambient, &f.span)?;
    Ok(Subspace::from_span(field, ambient, rows))
}

pub fn pair_to_file(p: &Pair) -> PairFile {
    PairFile {
        algebra: algebra_to_file(&p.g),
        ideal: ideal_to_file(&p.n.space),
    }
}

pub fn pair_from_file(f: &PairFile) -> Result<Pair> {
    let g = algebra_from_file(&f.algebra)?;
    let n = ideal_from_file(g.field(), g.dim(), &f.ideal)?;
    Pair::new(g, n)
}

pub fn crossed_module_to_file(cm: &CrossedModule) -> CrossedModuleFile {
    let mut delta = Vec::with_capacity(cm.g.dim());
    for r in 0..cm.g.dim() {
        delta.push(
            (0..cm.m.dim())
                .map(|c| cm.delta.get(r, c).to_string())
                .collect(),
        );
    }
    let sparse_table = |table: &Vec<Vec<Vector>>| -> Vec<ActionEntry> {
        let mut out = Vec::new();
        for (i, row) in table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !vec_is_zero(v) {
                    let terms = v
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| TermRepr {
                            basis: k,
                            coeff: c.to_string(),
                        })
                        .collect();
                    out.push(ActionEntry { x: i, m: j, terms });
                }
            }
        }
        out
    };
    CrossedModuleFile {
        m: algebra_to_file(&cm.m),
        g: algebra_to_file(&cm.g),
        delta,
        left_action: sparse_table(&cm.left_action),
        right_action: sparse_table(&cm.right_action),
    }
}

pub fn crossed_module_from_file(f: &CrossedModuleFile) -> Result<CrossedModule> {
    let m = algebra_from_file(&f.m)?;
    let g = algebra_from_file(&f.g)?;
    let field = m.field();
    if f.delta.len() != g.dim() {
        return Err(Error::Parse(format!(
            "delta has {} rows, expected {}",
            f.delta.len(),
            g.dim()
        )));
    }
    let rows = rows_from_strings(field, m.dim(), &f.delta)?;
    let delta = Matrix::from_rows(field, rows, m.dim())?;
    let mut left = vec![vec![zero_vec(field, m.dim()); m.dim()]; g.dim()];
    let mut right = left.clone();
    for (table, entries) in [(&mut left, &f.left_action), (&mut right, &f.right_action)] {
        for e in entries.iter() {
            if e.x >= g.dim() || e.m >= m.dim() {
                return Err(Error::Parse(format!(
                    "action entry ({}, {}) out of range",
                    e.x, e.m
                )));
            }
            table[e.x][e.m] = terms_to_vec(field, m.dim(), &e.terms)?;
        }
    }
    CrossedModule::new(m, g, delta, left, right)
}

/// Canonical pretty JSON emission (field order fixed by the types).
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn from_json<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::cover;

    #[test]
    fn algebra_round_trip_is_byte_identical() {
        for g in [
            catalog::abelian(Field::Q, 3),
            catalog::j1(Field::Q),
            catalog::j2(Field::Q),
            catalog::h1(Field::Q),
            catalog::heisenberg(Field::Q, 2).unwrap(),
        ] {
            let first = to_json(&algebra_to_file(&g));
            let parsed: AlgebraFile = from_json(&first).unwrap();
            let again = to_json(&algebra_to_file(&algebra_from_file(&parsed).unwrap()));
            assert_eq!(first, again);
        }
    }

    #[test]
    fn gf_field_round_trip() {
        let g = catalog::j2(Field::Gf(7));
        let s = to_json(&algebra_to_file(&g));
        let parsed: AlgebraFile = from_json(&s).unwrap();
        let back = algebra_from_file(&parsed).unwrap();
        assert_eq!(back.field(), Field::Gf(7));
        assert!(back.validate().is_valid());
    }

    #[test]
    fn bad_coefficient_is_a_parse_error() {
        let s = r#"{"field":"Q","basis":["x"],"brackets":[{"left":0,"right":0,"terms":[{"basis":0,"coeff":"1/0"}]}]}"#;
        let parsed: AlgebraFile = from_json(s).unwrap();
        assert!(algebra_from_file(&parsed).is_err());
    }

    #[test]
    fn pair_round_trip() {
        let g = catalog::j2(Field::Q);
        let n = g.derived();
        let p = Pair::new(g, n).unwrap();
        let s = to_json(&pair_to_file(&p));
        let parsed: PairFile = from_json(&s).unwrap();
        let back = pair_from_file(&parsed).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn crossed_module_round_trip_still_validates() {
        let g = catalog::j1(Field::Q);
        let cm = cover::identity(&g);
        let s = to_json(&crossed_module_to_file(&cm));
        let parsed: CrossedModuleFile = from_json(&s).unwrap();
        let back = crossed_module_from_file(&parsed).unwrap();
        assert!(cover::validate_crossed_module(&back).is_valid());
        assert_eq!(s, to_json(&crossed_module_to_file(&back)));
    }
}
