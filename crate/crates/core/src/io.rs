//! JSON encodings of the library's values.
//!
//! Rationals are strings (`"-3/7"`, `"5"`); JSON integers are accepted on
//! input. Every index that reaches text is 1-based: subset keys `"1,3"`,
//! leaves `"L1"`, internal vertices `"v1"`, simplex vertices, and point
//! labels. Objects use sorted keys, so equal values print identically.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::combin::{parse_subset_key, subset_key, Subset};
use crate::configurations::Configuration;
use crate::error::{Error, Result};
use crate::exact::rational::format_rational;
use crate::exact::{parse_rational, MultiPoly, Rational, RationalMatrix};
use crate::grassmann::{PluckerVector, Subspace};
use crate::hypersimplex::{MatroidDecomposition, MatroidPolytope};
use crate::schubert::{SchubertClass, YoungDiagram};
use crate::secondary::{CharFunction, PointConfig, Triangulation};
use crate::trees::{LabeledTree, Node};
use crate::veronese::HyperplaneArrangement;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))
}

pub fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field {key:?}")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("field {key:?} must be a nonnegative integer")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(|x| Rational::from_integer(x.into()))
            .ok_or_else(|| parse_err(format!("{n} is not an integer; write non-integers as strings"))),
        _ => Err(parse_err(format!("expected a rational, got {v}"))),
    }
}

pub fn rationals_from_json(v: &Value) -> Result<Vec<Rational>> {
    array(v, "vector")?.iter().map(rational_from_json).collect()
}

pub fn integer_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => Value::String(x.to_string()),
    }
}

pub fn matrix_to_json(m: &RationalMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(rational_to_json).collect()))
            .collect(),
    )
}

pub fn matrix_from_json(v: &Value) -> Result<RationalMatrix> {
    let rows: Vec<Vec<Rational>> = array(v, "matrix")?.iter().map(rationals_from_json).collect::<Result<_>>()?;
    let cols = rows.first().map_or(0, |r| r.len());
    RationalMatrix::from_rows(rows, cols)
}

/// A bare matrix, or an object with a `"rows"` field.
pub fn matrix_from_document(v: &Value) -> Result<RationalMatrix> {
    match v.get("rows") {
        Some(rows) => matrix_from_json(rows),
        None => matrix_from_json(v),
    }
}

pub fn subset_to_json(s: &[usize]) -> Value {
    Value::String(subset_key(s))
}

pub fn subspace_to_json(s: &Subspace) -> Value {
    json!({"k": s.k(), "n": s.n(), "rows": matrix_to_json(s.matrix())})
}

pub fn subspace_from_json(v: &Value) -> Result<Subspace> {
    let m = matrix_from_json(field(v, "rows")?)?;
    if let (Some(k), Some(n)) = (v.get("k").and_then(Value::as_u64), v.get("n").and_then(Value::as_u64)) {
        if (k as usize, n as usize) != (m.rows(), m.cols()) {
            return Err(Error::SizeMismatch(format!("declared {k}x{n}, rows are {}x{}", m.rows(), m.cols())));
        }
    }
    Subspace::new(m)
}

pub fn plucker_to_json(p: &PluckerVector) -> Value {
    let coords: Map<String, Value> = p
        .coords
        .iter()
        .map(|(s, v)| (subset_key(s), rational_to_json(v)))
        .collect();
    json!({"k": p.k, "n": p.n, "coords": coords})
}

pub fn polytope_to_json(p: &MatroidPolytope) -> Value {
    json!({
        "k": p.k,
        "n": p.n,
        "vertices": p.vertices.iter().map(|v| subset_to_json(v)).collect::<Vec<_>>(),
    })
}

pub fn polytope_from_json(v: &Value) -> Result<MatroidPolytope> {
    let (k, n) = (usize_field(v, "k")?, usize_field(v, "n")?);
    let vertices: BTreeSet<Subset> = array(field(v, "vertices")?, "vertices")?
        .iter()
        .map(|x| {
            x.as_str()
                .ok_or_else(|| parse_err("vertex keys are strings like \"1,2\""))
                .and_then(parse_subset_key)
        })
        .collect::<Result<_>>()?;
    MatroidPolytope::new(k, n, vertices)
}

/// A decomposition is the list of its pieces.
pub fn decomposition_to_json(d: &MatroidDecomposition) -> Value {
    Value::Array(d.pieces.iter().map(polytope_to_json).collect())
}

/// A list of polytopes, or `{"k", "n", "pieces": [...]}`.
pub fn decomposition_from_json(v: &Value) -> Result<MatroidDecomposition> {
    let (pieces_json, declared) = match v {
        Value::Array(a) => (a, None),
        _ => (array(field(v, "pieces")?, "pieces")?, Some((usize_field(v, "k")?, usize_field(v, "n")?))),
    };
    let pieces: Vec<MatroidPolytope> = pieces_json.iter().map(polytope_from_json).collect::<Result<_>>()?;
    let (k, n) = match (declared, pieces.first()) {
        (Some(kn), _) => kn,
        (None, Some(p)) => (p.k, p.n),
        (None, None) => return Err(parse_err("an empty list of pieces does not fix k and n")),
    };
    MatroidDecomposition::new(k, n, pieces)
}

fn node_name(t: &LabeledTree, v: usize) -> String {
    match t.node(v) {
        Node::Leaf(i) => format!("L{}", i + 1),
        Node::Internal(j) => format!("v{}", j + 1),
    }
}

fn parse_node(s: &str) -> Result<Node> {
    let bad = || parse_err(format!("bad tree vertex {s:?}; use L<i> or v<j>, 1-based"));
    let (kind, num) = s.split_at(1.min(s.len()));
    let idx: usize = num.parse().map_err(|_| bad())?;
    if idx == 0 {
        return Err(bad());
    }
    match kind {
        "L" => Ok(Node::Leaf(idx - 1)),
        "v" => Ok(Node::Internal(idx - 1)),
        _ => Err(bad()),
    }
}

pub fn tree_to_json(t: &LabeledTree) -> Value {
    let internal: Vec<String> = t.internal_vertices().map(|v| node_name(t, v)).collect();
    let edges: Vec<Value> = t
        .edges()
        .into_iter()
        .map(|(u, v)| json!([node_name(t, u), node_name(t, v)]))
        .collect();
    json!({"n": t.n(), "internal": internal, "edges": edges})
}

pub fn tree_from_json(v: &Value) -> Result<LabeledTree> {
    let n = usize_field(v, "n")?;
    let edges: Vec<(Node, Node)> = array(field(v, "edges")?, "edges")?
        .iter()
        .map(|e| {
            let pair = array(e, "edge")?;
            match pair.as_slice() {
                [a, b] => {
                    let name = |x: &Value| x.as_str().ok_or_else(|| parse_err("tree vertices are strings")).and_then(parse_node);
                    Ok((name(a)?, name(b)?))
                }
                _ => Err(parse_err("an edge has two endpoints")),
            }
        })
        .collect::<Result<_>>()?;
    LabeledTree::from_edges(n, &edges)
}

pub fn point_config_to_json(a: &PointConfig) -> Value {
    json!({"points": a.points()})
}

pub fn point_config_from_json(v: &Value) -> Result<PointConfig> {
    let points: Vec<Vec<i64>> = array(field(v, "points")?, "points")?
        .iter()
        .map(|p| {
            array(p, "point")?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| parse_err("point coordinates are integers")))
                .collect()
        })
        .collect::<Result<_>>()?;
    PointConfig::new(points)
}

pub fn triangulation_to_json(t: &Triangulation) -> Value {
    let simplices: Vec<Vec<usize>> = t
        .simplices()
        .iter()
        .map(|s| s.iter().map(|i| i + 1).collect())
        .collect();
    json!({"simplices": simplices})
}

pub fn triangulation_from_json(v: &Value) -> Result<Triangulation> {
    let simplices: Vec<Subset> = array(field(v, "simplices")?, "simplices")?
        .iter()
        .map(|s| {
            array(s, "simplex")?
                .iter()
                .map(|x| match x.as_u64() {
                    Some(i) if i >= 1 => Ok(i as usize - 1),
                    _ => Err(parse_err("simplex vertices are 1-based point indices")),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(Triangulation::new(simplices))
}

pub fn char_function_to_json(phi: &CharFunction) -> Value {
    json!({"values": phi.values.iter().map(integer_to_json).collect::<Vec<_>>()})
}

pub fn configuration_to_json(c: &Configuration) -> Value {
    let columns: Vec<Value> = c
        .points()
        .iter()
        .map(|p| Value::Array(p.iter().map(rational_to_json).collect()))
        .collect();
    json!({"k": c.k(), "n": c.n(), "columns": columns})
}

pub fn configuration_from_json(v: &Value) -> Result<Configuration> {
    let columns: Vec<Vec<Rational>> = array(field(v, "columns")?, "columns")?
        .iter()
        .map(rationals_from_json)
        .collect::<Result<_>>()?;
    let c = Configuration::from_points(&columns)?;
    if let (Some(k), Some(n)) = (v.get("k").and_then(Value::as_u64), v.get("n").and_then(Value::as_u64)) {
        if (k as usize, n as usize) != (c.k(), c.n()) {
            return Err(Error::SizeMismatch(format!("declared k={k}, n={n}; columns give k={}, n={}", c.k(), c.n())));
        }
    }
    Ok(c)
}

pub fn arrangement_to_json(a: &HyperplaneArrangement) -> Value {
    json!({"k": a.k(), "n": a.n(), "forms": matrix_to_json(a.forms())})
}

pub fn arrangement_from_json(v: &Value) -> Result<HyperplaneArrangement> {
    let forms = matrix_from_json(field(v, "forms")?)?;
    if let (Some(k), Some(n)) = (v.get("k").and_then(Value::as_u64), v.get("n").and_then(Value::as_u64)) {
        if (k as usize, n as usize) != (forms.cols(), forms.rows()) {
            return Err(Error::SizeMismatch(format!("declared k={k}, n={n}; forms are {}x{}", forms.rows(), forms.cols())));
        }
    }
    HyperplaneArrangement::new(forms)
}

pub fn poly_to_json(p: &MultiPoly) -> Value {
    Value::String(p.to_string())
}

/// `{"vars": m, "rows": [["x1 + x2", "3"], ...]}`.
pub fn poly_matrix_from_json(v: &Value) -> Result<Vec<Vec<MultiPoly>>> {
    let vars = usize_field(v, "vars")?;
    array(field(v, "rows")?, "rows")?
        .iter()
        .map(|row| {
            array(row, "row")?
                .iter()
                .map(|e| match e {
                    Value::String(s) => MultiPoly::parse(s, vars),
                    Value::Number(_) => Ok(MultiPoly::constant(vars, rational_from_json(e)?)),
                    _ => Err(parse_err("polynomial entries are strings")),
                })
                .collect()
        })
        .collect()
}

pub fn schubert_class_to_json(c: &SchubertClass) -> Value {
    let coeffs: BTreeMap<String, Value> = c
        .coefficients()
        .iter()
        .map(|(a, v)| (a.key(), Value::String(v.to_string())))
        .collect();
    json!({"p": c.p, "q": c.q, "coeffs": coeffs})
}

pub fn schubert_class_from_json(v: &Value) -> Result<SchubertClass> {
    let (p, q) = (usize_field(v, "p")?, usize_field(v, "q")?);
    let mut class = SchubertClass::zero(p, q);
    let coeffs = field(v, "coeffs")?
        .as_object()
        .ok_or_else(|| parse_err("coeffs must be an object"))?;
    for (key, value) in coeffs {
        let text = match value {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            _ => return Err(parse_err("coefficients are integers")),
        };
        let c: BigInt = text.parse().map_err(|_| parse_err(format!("bad coefficient {text:?}")))?;
        class.add(YoungDiagram::parse_key(key)?, c)?;
    }
    Ok(class)
}

/// `{"error": "<Tag>", "message": "..."}`.
pub fn error_to_json(e: &Error) -> Value {
    json!({"error": e.name(), "message": e.to_string()})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::schubert::{diagram, lie_complex_class};
    use crate::trees::enumerate_trees;

    #[test]
    fn rationals() {
        assert_eq!(rational_to_json(&ratio(-3, 7)), json!("-3/7"));
        assert_eq!(rational_to_json(&ratio(10, 2)), json!("5"));
        assert_eq!(rational_from_json(&json!("5")).unwrap(), ratio(5, 1));
        assert_eq!(rational_from_json(&json!(4)).unwrap(), ratio(4, 1));
        assert!(rational_from_json(&json!(0.5)).unwrap_err().is_parse());
    }

    #[test]
    fn subspace_roundtrip() {
        let s = Subspace::from_i64(&[&[1, 0, 2], &[0, 1, 3]]).unwrap();
        let v = subspace_to_json(&s);
        assert_eq!(v["rows"][1][2], json!("3"));
        assert_eq!(subspace_from_json(&v).unwrap(), s);
        let p = plucker_to_json(&s.plucker());
        assert_eq!(p["coords"]["1,2"], json!("1"));
    }

    #[test]
    fn tree_roundtrip() {
        for t in enumerate_trees(5).unwrap() {
            let v = tree_to_json(&t);
            assert_eq!(tree_from_json(&v).unwrap(), t);
        }
        let star = tree_to_json(&LabeledTree::star(3).unwrap());
        assert_eq!(star["edges"][0], json!(["L1", "v1"]));
        assert!(tree_from_json(&json!({"n": 3, "edges": [["L0", "v1"]]})).is_err());
    }

    #[test]
    fn decomposition_roundtrip() {
        let d = MatroidDecomposition::trivial(2, 4).unwrap();
        let v = decomposition_to_json(&d);
        assert_eq!(v[0]["vertices"][0], json!("1,2"));
        assert_eq!(decomposition_from_json(&v).unwrap(), d);
    }

    #[test]
    fn schubert_json() {
        let v = schubert_class_to_json(&lie_complex_class(2, 4).unwrap());
        assert_eq!(v, json!({"p": 2, "q": 4, "coeffs": {"2,1": "2"}}));
        let back = schubert_class_from_json(&v).unwrap();
        assert_eq!(back.coefficient(&diagram(&[2, 1])), BigInt::from(2));
    }

    #[test]
    fn triangulation_is_one_based() {
        let t = Triangulation::new(vec![vec![0, 1, 2]]);
        let v = triangulation_to_json(&t);
        assert_eq!(v, json!({"simplices": [[1, 2, 3]]}));
        assert_eq!(triangulation_from_json(&v).unwrap(), t);
    }

    #[test]
    fn configuration_and_arrangement() {
        let c = Configuration::from_i64(&[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        let v = configuration_to_json(&c);
        assert_eq!(v["columns"][2], json!(["1", "1"]));
        assert_eq!(configuration_from_json(&v).unwrap(), c);
        let a = HyperplaneArrangement::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(arrangement_from_json(&arrangement_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn errors_carry_tags() {
        assert_eq!(error_to_json(&Error::NotGeneric)["error"], json!("NotGeneric"));
        assert!(parse("{").unwrap_err().is_parse());
    }
}
