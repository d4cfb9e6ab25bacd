//! JSON export of operators:
//! `{"terms":[{"da":a,"db":b,"coeff":[{"p":p,"q":q,"c":[{"el":i,"en":j,"ew":k,"r":"num/den"}]}]}]}`
//! with every array in the canonical (descending graded-lex) order.

use serde::{Deserialize, Serialize};

use super::poly2::Poly2;
use super::text::{sorted_op_terms, sorted_poly_terms};
use super::DiffOp;
use crate::error::Error;
use crate::exactcoeff::{parse_rational, PExp, ParamPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonOp {
    pub terms: Vec<JsonTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub da: u32,
    pub db: u32,
    pub coeff: Vec<JsonMono>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonMono {
    pub p: u32,
    pub q: u32,
    pub c: Vec<JsonParamTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonParamTerm {
    pub el: u16,
    pub en: u16,
    pub ew: u16,
    pub r: String,
}

pub fn param_terms(c: &ParamPoly) -> Vec<JsonParamTerm> {
    c.terms()
        .iter()
        .rev()
        .map(|(e, r)| JsonParamTerm {
            el: e.l,
            en: e.n,
            ew: e.w,
            r: format!("{}/{}", r.numer(), r.denom()),
        })
        .collect()
}

pub fn poly_json(p: &Poly2) -> Vec<JsonMono> {
    sorted_poly_terms(p)
        .into_iter()
        .map(|((p, q), c)| JsonMono { p, q, c: param_terms(c) })
        .collect()
}

pub fn to_json(d: &DiffOp) -> JsonOp {
    JsonOp {
        terms: sorted_op_terms(d)
            .into_iter()
            .map(|((da, db), c)| JsonTerm { da, db, coeff: poly_json(c) })
            .collect(),
    }
}

pub fn to_json_string(d: &DiffOp) -> String {
    serde_json::to_string(&to_json(d)).expect("operator JSON is always serializable")
}

pub fn from_json(j: &JsonOp) -> Result<DiffOp, Error> {
    let mut out = DiffOp::zero();
    for t in &j.terms {
        let mut poly = Poly2::zero();
        for m in &t.coeff {
            let mut terms = Vec::with_capacity(m.c.len());
            for pt in &m.c {
                terms.push((PExp::new(pt.el, pt.en, pt.ew), parse_rational(&pt.r)?));
            }
            poly.add_term((m.p, m.q), &ParamPoly::from_terms(terms));
        }
        out.add_term((t.da, t.db), &poly);
    }
    Ok(out)
}

pub fn from_json_str(s: &str) -> Result<DiffOp, Error> {
    let j: JsonOp = serde_json::from_str(s).map_err(|e| Error::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    from_json(&j)
}
