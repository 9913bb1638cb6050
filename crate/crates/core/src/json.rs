//! JSON encodings of systems, sets, group elements, algebra elements,
//! witnesses and reports.
//!
//! Everything is built as a [`serde_json::Value`], whose objects keep their
//! keys sorted, so rendered output is byte-stable. Rationals are `[num, den]`
//! in lowest terms with `den > 0`.

use std::collections::BTreeSet;

use serde_json::{json, Map, Value};

use crate::action::PartialSystem;
use crate::crossprod::{AlgElem, LCFunction, RelationCheck};
use crate::error::{Error, Result};
use crate::graph::{ExitReport, KEvidence, KReport, TopFreeReport};
use crate::group::{FreeWord, Group, GroupElem};
use crate::paradox::{InfiniteVerdict, Witness, WitnessVerdict};
use crate::space::{path_word_string, AdjacencyMatrix, Cell, ClopenSet, Space, SpaceKind};
use crate::Q;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field {key:?}")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| parse_err(format!("{what} must be a nonnegative integer")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| parse_err(format!("{what} must be a string")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))
}

/// Integers beyond 64 bits are written as strings.
fn int(x: i128) -> Value {
    i64::try_from(x).map(Value::from).unwrap_or_else(|_| Value::String(x.to_string()))
}

pub fn rational(q: &Q) -> Value {
    json!([int(*q.numer()), int(*q.denom())])
}

/// Accepts `[num, den]` or a bare integer.
pub fn parse_rational(v: &Value) -> Result<Q> {
    if let Some(i) = v.as_i64() {
        return Ok(Q::from_integer(i as i128));
    }
    let parts = as_array(v, "rational")?;
    let [num, den] = parts.as_slice() else {
        return Err(parse_err("rational must be [num, den]"));
    };
    let num = num.as_i64().ok_or_else(|| parse_err("numerator must be an integer"))?;
    let den = den.as_i64().ok_or_else(|| parse_err("denominator must be an integer"))?;
    if den == 0 {
        return Err(parse_err("zero denominator"));
    }
    Ok(Q::new(num as i128, den as i128))
}

// ---- systems ---------------------------------------------------------------

pub fn parse_system(v: &Value) -> Result<PartialSystem> {
    match as_str(field(v, "model")?, "model")? {
        "pathspace" => {
            let rows = as_array(field(v, "matrix")?, "matrix")?;
            let rows: Vec<Vec<u8>> = rows
                .iter()
                .map(|r| {
                    as_array(r, "matrix row")?
                        .iter()
                        .map(|e| {
                            let x = as_u64(e, "matrix entry")?;
                            u8::try_from(x).map_err(|_| Error::InvalidMatrix(format!("entry {x} is not 0 or 1")))
                        })
                        .collect()
                })
                .collect::<Result<_>>()?;
            Ok(PartialSystem::path_space(AdjacencyMatrix::new(&rows)?))
        }
        "nadic" => {
            let n = as_u64(field(v, "n")?, "n")?;
            let n = u32::try_from(n).map_err(|_| parse_err("n is too large"))?;
            PartialSystem::nadic(n)
        }
        "residue" => {
            let ring = v.get("ring").map(|r| as_str(r, "ring")).transpose()?.unwrap_or("Z");
            if ring != "Z" {
                return Err(Error::Unsupported(format!("ring {ring:?}; only \"Z\" is implemented")));
            }
            let positive_only = match v.get("positive_only") {
                None => false,
                Some(b) => b.as_bool().ok_or_else(|| parse_err("positive_only must be a boolean"))?,
            };
            Ok(PartialSystem::residue(positive_only))
        }
        other => Err(parse_err(format!("unknown model {other:?}"))),
    }
}

pub fn system(sys: &PartialSystem) -> Value {
    match (sys.space().kind(), sys.group()) {
        (SpaceKind::PathSpace(a), _) => json!({"model": "pathspace", "matrix": a.rows()}),
        (SpaceKind::NAdic { n }, _) => json!({"model": "nadic", "n": n}),
        (SpaceKind::Residue, Group::Affine { positive_only }) => {
            json!({"model": "residue", "ring": "Z", "positive_only": positive_only})
        }
        (SpaceKind::Residue, _) => unreachable!("residue systems carry the affine group"),
    }
}

// ---- cells and sets --------------------------------------------------------

pub fn cell(space: &Space, c: &Cell) -> Value {
    match c {
        Cell::Path(w) => json!({"w": path_word_string(w)}),
        Cell::NAdic(_) => {
            let (p, k) = space.nadic_coords(c).expect("cell of this space");
            let p = u64::try_from(p).map(Value::from).unwrap_or_else(|_| Value::String(p.to_string()));
            json!({"p": p, "k": k})
        }
        Cell::Residue(r) => json!({"a": r.modulus(), "b": 1, "c": r.residue()}),
    }
}

pub fn parse_cell(space: &Space, v: &Value) -> Result<Cell> {
    match space.kind() {
        SpaceKind::PathSpace(_) => {
            let s = as_str(field(v, "w")?, "w")?;
            let word = if s.is_empty() {
                Vec::new()
            } else {
                s.split('.')
                    .map(|t| match t.parse::<u32>() {
                        Ok(x) if x >= 1 => Ok(x - 1),
                        _ => Err(parse_err(format!("bad vertex {t:?} in word {s:?}"))),
                    })
                    .collect::<Result<_>>()?
            };
            space.path_cell(word)
        }
        SpaceKind::NAdic { .. } => {
            let p = as_u64(field(v, "p")?, "p")?;
            let k = as_u64(field(v, "k")?, "k")?;
            let k = u32::try_from(k).map_err(|_| parse_err("k is too large"))?;
            space.nadic_cell(p as u128, k)
        }
        SpaceKind::Residue => {
            let a = as_u64(field(v, "a")?, "a")?;
            let b = v.get("b").map(|b| as_u64(b, "b")).transpose()?.unwrap_or(1);
            let c = as_u64(field(v, "c")?, "c")?;
            space.residue_cell(a, b, c)
        }
    }
}

pub fn set(space: &Space, s: &ClopenSet) -> Value {
    json!({
        "model": s.model().name(),
        "cells": s.cells().iter().map(|c| cell(space, c)).collect::<Vec<_>>(),
    })
}

/// Any finite list of cells; the result is canonical.
pub fn parse_set(space: &Space, v: &Value) -> Result<ClopenSet> {
    if let Some(m) = v.get("model") {
        let m = as_str(m, "model")?;
        if m != space.model().name() {
            return Err(Error::MixedModel(
                match m {
                    "pathspace" => "pathspace",
                    "nadic" => "nadic",
                    "residue" => "residue",
                    _ => return Err(parse_err(format!("unknown model {m:?}"))),
                },
                space.model().name(),
            ));
        }
    }
    let cells =
        as_array(field(v, "cells")?, "cells")?.iter().map(|c| parse_cell(space, c)).collect::<Result<Vec<_>>>()?;
    space.canonicalize(cells)
}

// ---- group elements --------------------------------------------------------

pub fn group_elem(t: &GroupElem) -> Value {
    match t {
        GroupElem::Free(w) => json!({"t": w.to_string()}),
        GroupElem::NAdic(e) => json!({"r": rational(&e.r()), "k": e.k()}),
        GroupElem::Affine(e) => json!({"u": rational(&e.u()), "w": rational(&e.w())}),
    }
}

pub fn parse_group_elem(sys: &PartialSystem, v: &Value) -> Result<GroupElem> {
    let group = sys.group();
    match group {
        Group::Free { .. } => {
            let s = as_str(field(v, "t")?, "t")?;
            let s = if s.trim() == "e" { "" } else { s };
            let t = GroupElem::Free(s.parse::<FreeWord>()?);
            group.check(&t)?;
            Ok(t)
        }
        Group::NAdic { .. } => {
            let r = parse_rational(field(v, "r")?)?;
            let k = field(v, "k")?.as_i64().ok_or_else(|| parse_err("k must be an integer"))?;
            group.nadic(r, k)
        }
        Group::Affine { .. } => {
            let u = parse_rational(field(v, "u")?)?;
            let w = parse_rational(field(v, "w")?)?;
            group.affine(u, w)
        }
    }
}

// ---- functions and algebra elements ----------------------------------------

pub fn function(space: &Space, f: &LCFunction) -> Value {
    Value::Array(f.pieces().iter().map(|(c, v)| json!({"cell": cell(space, c), "v": rational(v)})).collect())
}

pub fn parse_function(space: &Space, v: &Value) -> Result<LCFunction> {
    let pieces = as_array(v, "function")?
        .iter()
        .map(|p| Ok((parse_cell(space, field(p, "cell")?)?, parse_rational(field(p, "v")?)?)))
        .collect::<Result<Vec<_>>>()?;
    LCFunction::from_pieces(space, pieces)
}

pub fn alg_elem(sys: &PartialSystem, x: &AlgElem) -> Value {
    let terms: Vec<Value> =
        x.terms().map(|(t, f)| json!({"t": group_elem(t), "f": function(sys.space(), f)})).collect();
    json!({"terms": terms})
}

pub fn parse_alg_elem(sys: &PartialSystem, v: &Value) -> Result<AlgElem> {
    let mut out = AlgElem::zero();
    for term in as_array(field(v, "terms")?, "terms")? {
        let t = parse_group_elem(sys, field(term, "t")?)?;
        let f = parse_function(sys.space(), field(term, "f")?)?;
        out = crate::crossprod::add(sys, &out, &AlgElem::term(sys, t, f)?)?;
    }
    Ok(out)
}

// ---- witnesses and verdicts ------------------------------------------------

pub fn witness(sys: &PartialSystem, w: &Witness) -> Value {
    let parts: Vec<Value> =
        w.parts.iter().map(|(s, t)| json!({"set": set(sys.space(), s), "t": group_elem(t)})).collect();
    json!({"V": set(sys.space(), &w.set), "n": w.n, "m": w.m, "parts": parts})
}

pub fn parse_witness(sys: &PartialSystem, v: &Value) -> Result<Witness> {
    let space = sys.space();
    let n = as_u64(field(v, "n")?, "n")? as usize;
    let m = as_u64(field(v, "m")?, "m")? as usize;
    let parts = as_array(field(v, "parts")?, "parts")?
        .iter()
        .map(|p| Ok((parse_set(space, field(p, "set")?)?, parse_group_elem(sys, field(p, "t")?)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Witness { set: parse_set(space, field(v, "V")?)?, n, m, parts })
}

pub fn witness_verdict(sys: &PartialSystem, v: &WitnessVerdict) -> Value {
    let counterexample = match &v.failure {
        None => Value::Null,
        Some(f) => json!({
            "condition": f.condition,
            "part": f.part.map(|i| i + 1),
            "cell": cell(sys.space(), &f.cell),
        }),
    };
    json!({
        "pass": v.pass,
        "conditions": {
            "first_cover": v.first_cover,
            "second_cover": v.second_cover,
            "domains": v.domains,
            "images_inside": v.images_inside,
            "images_disjoint": v.images_disjoint,
        },
        "counterexample": counterexample,
    })
}

pub fn infinite_verdict(v: &InfiniteVerdict) -> Value {
    let checks: Vec<Value> = v.checks.iter().map(|(name, pass)| json!({"name": name, "pass": pass})).collect();
    json!({"pass": v.pass, "trivial": v.trivial, "checks": checks})
}

pub fn relations(sys: &PartialSystem, checks: &[RelationCheck]) -> Value {
    let list: Vec<Value> = checks
        .iter()
        .map(|c| {
            let mut o = Map::new();
            o.insert("name".into(), json!(c.name));
            o.insert("pass".into(), json!(c.pass));
            if let Some(ce) = &c.counterexample {
                o.insert("counterexample".into(), json!(ce));
            }
            Value::Object(o)
        })
        .collect();
    json!({
        "system": system(sys),
        "pass": checks.iter().all(|c| c.pass),
        "relations": list,
    })
}

// ---- graph reports ---------------------------------------------------------

fn vertex_set(s: &BTreeSet<u32>) -> Value {
    Value::Array(s.iter().map(|v| json!(v + 1)).collect())
}

pub fn k_report(r: &KReport) -> Value {
    let evidence: Vec<Value> = r
        .evidence
        .iter()
        .map(|e| match e {
            KEvidence::TwoLoops { vertex, first, second } => json!({
                "vertex": vertex + 1,
                "loops": [path_word_string(first), path_word_string(second)],
            }),
            KEvidence::SingleLoop { vertex, cycle } => json!({
                "vertex": vertex + 1,
                "single_loop": path_word_string(cycle),
            }),
        })
        .collect();
    json!({"holds": r.holds, "evidence": evidence})
}

pub fn exit_report(r: &ExitReport) -> Value {
    json!({
        "holds": r.holds,
        "culprit": r.culprit.as_ref().map(|c| path_word_string(c)),
    })
}

pub fn graph_report(k: &KReport, exit: &ExitReport, hs: &[BTreeSet<u32>]) -> Value {
    json!({
        "zero_rows": false,
        "condition_K": k_report(k),
        "every_cycle_has_exit": exit_report(exit),
        "hereditary_saturated": hs.iter().map(vertex_set).collect::<Vec<_>>(),
    })
}

pub fn topfree_report(sys: &PartialSystem, r: &TopFreeReport, max_word_len: usize, depth: usize) -> Value {
    let culprit = match &r.culprit {
        None => Value::Null,
        Some((t, c)) => json!({"t": group_elem(t), "cell": cell(sys.space(), c)}),
    };
    json!({"holds": r.holds, "culprit": culprit, "max_word_len": max_word_len, "depth": depth})
}
