//! Canonical JSON interchange for gradings. Keys are sorted, components are
//! listed in element order, and every rational is a string.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::cyclo::{CycNum, Mat, Subspace};
use crate::error::{Error, Result};
use crate::groups::{FinAbGroup, GroupElem};
use crate::invol::{Involution, InvolutionGrading, SignFunction, SymKind};
use crate::matalg::{Grading, GradingKind};

/// A grading file: the grading and, for the involution kind, its involution
/// and optional sign table.
#[derive(Clone, Debug)]
pub struct GradingFile {
    pub grading: Grading,
    pub involution: Option<Involution>,
    pub sign: Option<SignFunction>,
}

impl GradingFile {
    pub fn plain(grading: Grading) -> GradingFile {
        GradingFile {
            grading,
            involution: None,
            sign: None,
        }
    }

    pub fn from_involution(ig: InvolutionGrading) -> GradingFile {
        GradingFile {
            grading: ig.grading,
            involution: Some(ig.involution),
            sign: ig.sign,
        }
    }

    pub fn involution_grading(&self) -> Result<InvolutionGrading> {
        let involution = self
            .involution
            .clone()
            .ok_or_else(|| Error::KindMismatch("file carries no involution".into()))?;
        Ok(InvolutionGrading {
            grading: self.grading.clone(),
            involution,
            sign: self.sign.clone(),
        })
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn num_to_json(x: &CycNum) -> Value {
    Value::Array(x.coeffs().iter().map(|q| Value::String(q.to_string())).collect())
}

pub fn mat_to_json(m: &Mat) -> Value {
    let m = &m.reduced();
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| num_to_json(m.get(i, j))).collect()))
        .collect();
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "conductor": m.conductor(),
        "entries": rows,
    })
}

pub fn elem_to_json(g: &GroupElem) -> Value {
    json!({ "exponents": g.exponents() })
}

pub fn group_to_json(g: &FinAbGroup) -> Value {
    json!({ "factors": g.factors() })
}

pub fn grading_to_json(file: &GradingFile) -> Value {
    let g = &file.grading;
    let n = g.n();
    let comps: Vec<Value> = g
        .components()
        .iter()
        .map(|(e, v)| {
            json!({
                "element": elem_to_json(e),
                "basis": v.basis_mats(n).iter().map(mat_to_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("group".into(), group_to_json(g.group()));
    obj.insert("n".into(), json!(n));
    obj.insert("kind".into(), json!(g.kind().as_str()));
    obj.insert("components".into(), Value::Array(comps));
    if let Some(inv) = &file.involution {
        obj.insert(
            "involution".into(),
            json!({ "phi": mat_to_json(inv.phi()), "symkind": inv.symkind().as_str() }),
        );
    }
    if let Some(s) = &file.sign {
        let rows: Vec<Value> = s
            .values()
            .iter()
            .map(|(t, b)| json!({ "element": elem_to_json(t), "sign": b }))
            .collect();
        obj.insert("sign".into(), Value::Array(rows));
    }
    Value::Object(obj)
}

/// Compact canonical text with a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json values serialize");
    s.push('\n');
    s
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field {key:?}")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| parse_err(format!("{what} must be a nonnegative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| parse_err(format!("{what} must be an array")))
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| parse_err(format!("bad rational {s:?}")))
}

pub fn mat_from_json(v: &Value) -> Result<Mat> {
    let rows = as_u64(field(v, "rows")?, "rows")? as usize;
    let cols = as_u64(field(v, "cols")?, "cols")? as usize;
    let conductor = as_u64(field(v, "conductor")?, "conductor")?;
    let data = as_array(field(v, "entries")?, "entries")?;
    if data.len() != rows {
        return Err(parse_err(format!("expected {rows} rows, found {}", data.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for row in data {
        let row = as_array(row, "matrix row")?;
        if row.len() != cols {
            return Err(parse_err(format!("expected {cols} columns, found {}", row.len())));
        }
        for x in row {
            let coeffs = as_array(x, "matrix entry")?
                .iter()
                .map(|c| {
                    c.as_str()
                        .ok_or_else(|| parse_err("coefficients must be strings"))
                        .and_then(parse_rational)
                })
                .collect::<Result<Vec<_>>>()?;
            let num = CycNum::from_coeffs(conductor, coeffs).map_err(|e| parse_err(e.to_string()))?;
            entries.push(num);
        }
    }
    Mat::from_entries(rows, cols, entries)
}

pub fn group_from_json(v: &Value) -> Result<FinAbGroup> {
    let factors = as_array(field(v, "factors")?, "factors")?
        .iter()
        .map(|x| as_u64(x, "group factor"))
        .collect::<Result<Vec<_>>>()?;
    FinAbGroup::new(&factors).map_err(|e| parse_err(e.to_string()))
}

pub fn elem_from_json(group: &FinAbGroup, v: &Value) -> Result<GroupElem> {
    let exps = as_array(field(v, "exponents")?, "exponents")?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| parse_err("exponents must be integers")))
        .collect::<Result<Vec<_>>>()?;
    group.elem(&exps).map_err(|e| parse_err(e.to_string()))
}

pub fn grading_from_json(v: &Value) -> Result<GradingFile> {
    let group = group_from_json(field(v, "group")?)?;
    let n = as_u64(field(v, "n")?, "n")? as usize;
    let kind = field(v, "kind")?
        .as_str()
        .ok_or_else(|| parse_err("kind must be a string"))?;
    let kind = GradingKind::parse(kind)?;
    let mut comps = Vec::new();
    for c in as_array(field(v, "components")?, "components")? {
        let g = elem_from_json(&group, field(c, "element")?)?;
        let basis = as_array(field(c, "basis")?, "basis")?
            .iter()
            .map(mat_from_json)
            .collect::<Result<Vec<_>>>()?;
        if let Some(m) = basis.iter().find(|m| m.rows() != n || m.cols() != n) {
            return Err(parse_err(format!(
                "basis matrix of {g} is {}x{}, expected {n}x{n}",
                m.rows(),
                m.cols()
            )));
        }
        comps.push((g, Subspace::span_mats(n, basis.iter())?));
    }
    let grading = Grading::new(&group, n, kind, comps).map_err(|e| parse_err(e.to_string()))?;
    let involution = match v.get("involution") {
        None => None,
        Some(iv) => {
            let phi = mat_from_json(field(iv, "phi")?)?;
            let inv = Involution::new(&phi).map_err(|e| parse_err(e.to_string()))?;
            if let Some(sk) = iv.get("symkind") {
                let sk = SymKind::parse(sk.as_str().ok_or_else(|| parse_err("symkind must be a string"))?)?;
                if sk != inv.symkind() {
                    return Err(parse_err(format!(
                        "symkind says {} but the form is {}",
                        sk.as_str(),
                        inv.symkind().as_str()
                    )));
                }
            }
            Some(inv)
        }
    };
    if kind == GradingKind::Involution && involution.is_none() {
        return Err(parse_err("involution grading without an \"involution\" field"));
    }
    let sign = match v.get("sign") {
        None => None,
        Some(rows) => {
            let mut values = BTreeMap::new();
            for r in as_array(rows, "sign")? {
                let t = elem_from_json(&group, field(r, "element")?)?;
                let s = field(r, "sign")?
                    .as_i64()
                    .ok_or_else(|| parse_err("sign must be an integer"))?;
                values.insert(t, s as i8);
            }
            Some(SignFunction::new(&group, values).map_err(|e| parse_err(e.to_string()))?)
        }
    };
    Ok(GradingFile {
        grading,
        involution,
        sign,
    })
}

pub fn parse_grading_text(text: &str) -> Result<GradingFile> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    grading_from_json(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invol::canonical_l6;
    use crate::matalg::{elementary_grading, epsilon_grading};

    fn round_trip(file: &GradingFile) {
        let text = to_canonical_string(&grading_to_json(file));
        let back = parse_grading_text(&text).unwrap();
        assert!(back.grading == file.grading);
        assert_eq!(to_canonical_string(&grading_to_json(&back)), text);
    }

    #[test]
    fn round_trips() {
        round_trip(&GradingFile::plain(epsilon_grading(3).unwrap()));
        let g = FinAbGroup::cyclic(2).unwrap();
        let t = [g.identity(), g.identity(), g.elem(&[1]).unwrap()];
        round_trip(&GradingFile::plain(elementary_grading(&g, 3, &t).unwrap()));
        round_trip(&GradingFile::from_involution(canonical_l6(1).unwrap()));
    }

    #[test]
    fn keys_are_sorted() {
        let text = to_canonical_string(&grading_to_json(&GradingFile::plain(epsilon_grading(2).unwrap())));
        let c = text.find("\"components\"").unwrap();
        let g = text.find("\"group\"").unwrap();
        let k = text.find("\"kind\"").unwrap();
        assert!(c < g && g < k);
        assert!(text.contains("[\"-1\"]"));
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(parse_grading_text("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_grading_text("{\"n\": 2}"), Err(Error::Parse(_))));
        let text = to_canonical_string(&grading_to_json(&GradingFile::plain(epsilon_grading(2).unwrap())));
        let bad = text.replacen("\"kind\":\"associative\"", "\"kind\":\"involution\"", 1);
        assert!(matches!(parse_grading_text(&bad), Err(Error::Parse(_))));
    }
}
