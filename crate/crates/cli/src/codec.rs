//! JSON documents for every payload the harness reads or writes.
//!
//! Top-level documents carry `"schema": "1"`, a `"kind"` tag and a `"field"`.
//! Algebras are `{"dim", "mult", "unit"}` with `mult[i][j]` the coordinates of
//! `e_i e_j`. Wherever an algebra is expected the string `"k"` denotes the
//! ground field.
//!
//! Coordinates of `A ⊗_R A` are the canonical quotient coordinates: the
//! lexicographic basis `e_i ⊗ e_j` of `A ⊗_k A` reduced modulo the balancing
//! relations, keeping the non-pivot basis vectors in increasing order. A
//! bialgebroid may instead give `"comul_plain"`, a `dim A² × dim A` matrix in
//! the lexicographic basis, which is projected on parsing.

use bimonad::algebra::{AlgebraMap, FDAlgebra};
use bimonad::bialgebroid::BialgebroidData;
use bimonad::bimod::{BaseRing, Module};
use bimonad::bimonad::{BimonadCtx, BimonadPresentation, FunctorKind, Morphism};
use bimonad::emcat::TAlgebra;
use bimonad::exactla::{Field, Matrix};
use bimonad::json::{
    check_schema, field_from_json, field_to_json, get, get_usize, matrix_from_json, matrix_to_json, vector_from_json,
    vector_to_json, SCHEMA,
};
use bimonad::setmonad::SetTAlgebra;
use bimonad::{Error, Result};
use serde_json::{json, Map, Value};

pub fn algebra_to_json(a: &FDAlgebra) -> Value {
    let mult: Vec<Value> =
        a.table().iter().map(|row| Value::Array(row.iter().map(|v| vector_to_json(v)).collect())).collect();
    json!({"dim": a.dim(), "mult": mult, "unit": vector_to_json(a.unit())})
}

pub fn algebra_from_json(field: Field, v: &Value) -> Result<FDAlgebra> {
    if v.as_str() == Some("k") {
        return Ok(FDAlgebra::ground(field));
    }
    let n = get_usize(v, "dim", "algebra")?;
    let mult = get(v, "mult", "algebra")?
        .as_array()
        .ok_or_else(|| Error::Schema("algebra: \"mult\" must be an array".into()))?;
    if mult.len() != n {
        return Err(Error::Schema(format!("algebra: \"mult\" must have {n} rows")));
    }
    let table = mult
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let row = row
                .as_array()
                .filter(|r| r.len() == n)
                .ok_or_else(|| Error::Schema(format!("algebra: mult[{i}] must have {n} entries")))?;
            row.iter().enumerate().map(|(j, p)| vector_from_json(field, p, n, &format!("mult[{i}][{j}]"))).collect()
        })
        .collect::<Result<Vec<Vec<_>>>>()?;
    let unit = vector_from_json(field, get(v, "unit", "algebra")?, n, "unit")?;
    FDAlgebra::new(field, table, unit)
}

fn field_of(v: &Value) -> Result<Field> {
    match v.get("field") {
        Some(f) => field_from_json(f),
        None => Ok(Field::Rationals),
    }
}

fn kind_is(v: &Value, kind: &str) -> Result<()> {
    match v.get("kind").and_then(Value::as_str) {
        Some(k) if k == kind => Ok(()),
        None => Ok(()),
        Some(k) => Err(Error::Schema(format!("expected a {kind} document, found kind \"{k}\""))),
    }
}

fn header(kind: &str, field: Field) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("kind".into(), json!(kind));
    m.insert("field".into(), field_to_json(field));
    m
}

fn matrices_to_json(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(matrix_to_json).collect())
}

fn matrices_from_json(field: Field, v: &Value, count: usize, n: usize, what: &str) -> Result<Vec<Matrix>> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == count)
        .ok_or_else(|| Error::Schema(format!("{what}: expected {count} matrices")))?;
    arr.iter().enumerate().map(|(i, m)| matrix_from_json(field, m, n, n, &format!("{what}[{i}]"))).collect()
}

/// A module whose base algebra is named by `base`.
pub fn module_to_json(m: &Module, base: &str) -> Value {
    json!({"base": base, "dim": m.dim(), "action": matrices_to_json(m.action())})
}

/// `bases` resolves named base algebras; an inline algebra is also accepted.
pub fn module_from_json(field: Field, v: &Value, bases: &[(&str, &FDAlgebra)]) -> Result<Module> {
    let b = get(v, "base", "module")?;
    let base = match b.as_str() {
        Some(name) => match bases.iter().find(|(n, _)| *n == name) {
            Some((_, a)) => (*a).clone(),
            None if name == "k" => FDAlgebra::ground(field),
            None => return Err(Error::Schema(format!("module: unknown base algebra \"{name}\""))),
        },
        None => algebra_from_json(field, b)?,
    };
    let n = get_usize(v, "dim", "module")?;
    let action = matrices_from_json(field, get(v, "action", "module")?, base.dim(), n, "action")?;
    Module::new(base, n, action)
}

pub fn bialgebroid_to_json(b: &BialgebroidData) -> Value {
    let mut m = header("bialgebroid", b.field());
    m.insert("R".into(), algebra_to_json(b.r()));
    m.insert("A".into(), algebra_to_json(&b.a));
    m.insert("s".into(), matrix_to_json(&b.s));
    m.insert("t".into(), matrix_to_json(&b.t));
    m.insert("comul".into(), matrix_to_json(&b.comul));
    m.insert("counit".into(), matrix_to_json(&b.counit));
    Value::Object(m)
}

pub fn bialgebroid_from_json(v: &Value) -> Result<BialgebroidData> {
    check_schema(v)?;
    kind_is(v, "bialgebroid")?;
    let field = field_of(v)?;
    let r = algebra_from_json(field, get(v, "R", "bialgebroid")?)?;
    let a = algebra_from_json(field, get(v, "A", "bialgebroid")?)?;
    let (na, nr) = (a.dim(), r.dim());
    let s = matrix_from_json(field, get(v, "s", "bialgebroid")?, na, nr, "s")?;
    let t = matrix_from_json(field, get(v, "t", "bialgebroid")?, na, nr, "t")?;
    let counit = matrix_from_json(field, get(v, "counit", "bialgebroid")?, nr, na, "counit")?;
    let base = BaseRing::new(r);
    match (v.get("comul"), v.get("comul_plain")) {
        (Some(c), None) => {
            let rows = c.as_array().map_or(0, Vec::len);
            let comul = matrix_from_json(field, c, rows, na, "comul")?;
            BialgebroidData::new(base, a, s, t, comul, counit)
        }
        (None, Some(c)) => {
            let comul = matrix_from_json(field, c, na * na, na, "comul_plain")?;
            BialgebroidData::from_plain_comul(base, a, s, t, comul, counit)
        }
        _ => Err(Error::Schema("bialgebroid: give exactly one of \"comul\" and \"comul_plain\"".into())),
    }
}

pub fn presentation_to_json(p: &BimonadPresentation) -> Value {
    let mut m = header("bimonad", p.field());
    m.insert("R".into(), algebra_to_json(&p.base.r));
    m.insert("A".into(), algebra_to_json(&p.a));
    m.insert("left".into(), matrices_to_json(&p.left));
    m.insert("right".into(), matrices_to_json(&p.right));
    m.insert("coprod".into(), matrix_to_json(&p.coprod));
    m.insert("counit".into(), matrix_to_json(&p.counit));
    Value::Object(m)
}

/// Reads a bimonad presentation, or a bialgebroid converted to one without
/// checking its axioms.
pub fn presentation_from_json(v: &Value) -> Result<BimonadPresentation> {
    check_schema(v)?;
    if v.get("kind").and_then(Value::as_str) == Some("bialgebroid") {
        return bimonad::bimonad::from_bialgebroid_unchecked(&bialgebroid_from_json(v)?);
    }
    kind_is(v, "bimonad")?;
    let field = field_of(v)?;
    let r = algebra_from_json(field, get(v, "R", "bimonad")?)?;
    let a = algebra_from_json(field, get(v, "A", "bimonad")?)?;
    let base = BaseRing::new(r);
    let (na, ne, nr) = (a.dim(), base.dim_e(), base.dim_r());
    let left = matrices_from_json(field, get(v, "left", "bimonad")?, ne, na, "left")?;
    let right = matrices_from_json(field, get(v, "right", "bimonad")?, ne, na, "right")?;
    let c = get(v, "coprod", "bimonad")?;
    let coprod = matrix_from_json(field, c, c.as_array().map_or(0, Vec::len), na, "coprod")?;
    let counit = matrix_from_json(field, get(v, "counit", "bimonad")?, nr, na, "counit")?;
    BimonadPresentation::new(base, a, left, right, coprod, counit)
}

pub fn morphism_to_json(m: &Morphism) -> Value {
    let mut out = header("morphism", m.source.field());
    let mut strip = |key: &str, p: &BimonadPresentation| {
        let mut v = presentation_to_json(p);
        if let Value::Object(o) = &mut v {
            o.remove("schema");
            o.remove("field");
        }
        out.insert(key.into(), v);
    };
    strip("source", &m.source);
    strip("target", &m.target);
    let functor = match &m.kind {
        FunctorKind::Restriction { omega } => json!({"kind": "restriction", "omega": matrix_to_json(&omega.matrix)}),
        FunctorKind::Kernel { g } => json!({"kind": "kernel", "G": algebra_to_json(g)}),
    };
    out.insert("functor".into(), functor);
    out.insert("phi".into(), matrix_to_json(&m.phi));
    Value::Object(out)
}

fn with_field(v: &Value, field: &Value) -> Value {
    let mut v = v.clone();
    if let Value::Object(o) = &mut v {
        o.entry("field").or_insert_with(|| field.clone());
    }
    v
}

/// Reads a `morphism` document, or a `bialgebroid-map` document
/// `{"from", "to", "omega", "phi"}` with `ω: R_from → R_to` and
/// `φ: A_from → A_to`, which yields the restriction morphism it induces.
pub fn morphism_from_json(v: &Value) -> Result<Morphism> {
    check_schema(v)?;
    let field = field_of(v)?;
    let fj = field_to_json(field);
    if v.get("kind").and_then(Value::as_str) == Some("bialgebroid-map") {
        let (b, a, omega, phi) = bialgebroid_map_from_json(v)?;
        return Morphism::from_bialgebroid_map(&b, &a, &omega, &phi);
    }
    kind_is(v, "morphism")?;
    let source = presentation_from_json(&with_field(get(v, "source", "morphism")?, &fj))?;
    let target = presentation_from_json(&with_field(get(v, "target", "morphism")?, &fj))?;
    let functor = get(v, "functor", "morphism")?;
    match functor.get("kind").and_then(Value::as_str) {
        Some("restriction") => {
            let (r, s) = (&source.base.r, &target.base.r);
            let w = matrix_from_json(field, get(functor, "omega", "functor")?, r.dim(), s.dim(), "omega")?;
            let omega = AlgebraMap::new(s.clone(), r.clone(), w)?;
            let phi = matrix_from_json(field, get(v, "phi", "morphism")?, source.a.dim(), target.a.dim(), "phi")?;
            Morphism::restriction(source, target, omega, phi)
        }
        Some("kernel") => {
            let g = algebra_from_json(field, get(functor, "G", "functor")?)?;
            let (na, nb, ng) = (source.a.dim(), target.a.dim(), g.dim());
            let phi = matrix_from_json(field, get(v, "phi", "morphism")?, ng * na, nb * ng, "phi")?;
            Morphism::kernel(source, target, g, phi)
        }
        other => Err(Error::Schema(format!("functor: unknown kind {other:?}"))),
    }
}

/// The parts of a `bialgebroid-map` document: source, target, ω, φ.
pub fn bialgebroid_map_from_json(v: &Value) -> Result<(BialgebroidData, BialgebroidData, AlgebraMap, AlgebraMap)> {
    check_schema(v)?;
    kind_is(v, "bialgebroid-map")?;
    let fj = field_to_json(field_of(v)?);
    let b = bialgebroid_from_json(&with_field(get(v, "from", "bialgebroid-map")?, &fj))?;
    let a = bialgebroid_from_json(&with_field(get(v, "to", "bialgebroid-map")?, &fj))?;
    let field = b.field();
    let w = matrix_from_json(field, get(v, "omega", "bialgebroid-map")?, a.r().dim(), b.r().dim(), "omega")?;
    let p = matrix_from_json(field, get(v, "phi", "bialgebroid-map")?, a.a.dim(), b.a.dim(), "phi")?;
    Ok((
        b.clone(),
        a.clone(),
        AlgebraMap::new(b.r().clone(), a.r().clone(), w)?,
        AlgebraMap::new(b.a.clone(), a.a.clone(), p)?,
    ))
}

pub fn bialgebroid_map_to_json(
    b: &BialgebroidData,
    a: &BialgebroidData,
    omega: &AlgebraMap,
    phi: &AlgebraMap,
) -> Value {
    let mut m = header("bialgebroid-map", b.field());
    let inner = |x: &BialgebroidData| {
        let mut v = bialgebroid_to_json(x);
        if let Value::Object(o) = &mut v {
            o.remove("schema");
            o.remove("field");
        }
        v
    };
    m.insert("from".into(), inner(b));
    m.insert("to".into(), inner(a));
    m.insert("omega".into(), matrix_to_json(&omega.matrix));
    m.insert("phi".into(), matrix_to_json(&phi.matrix));
    Value::Object(m)
}

/// A list of named modules over A, as `[{"name", "base", "dim", "action"}]`.
pub fn catalogue_to_json(modules: &[(String, Module)]) -> Value {
    Value::Array(
        modules
            .iter()
            .map(|(n, m)| {
                let mut v = module_to_json(m, "A");
                v.as_object_mut().expect("object").insert("name".into(), json!(n));
                v
            })
            .collect(),
    )
}

/// Accepts a bare array or `{"schema", "kind": "catalogue", "modules": [...]}`.
pub fn catalogue_from_json(field: Field, a: &FDAlgebra, v: &Value) -> Result<Vec<(String, Module)>> {
    let arr = match v {
        Value::Array(arr) => arr,
        _ => {
            check_schema(v)?;
            kind_is(v, "catalogue")?;
            get(v, "modules", "catalogue")?
                .as_array()
                .ok_or_else(|| Error::Schema("catalogue: \"modules\" must be an array".into()))?
        }
    };
    arr.iter()
        .enumerate()
        .map(|(i, m)| {
            let name = m.get("name").and_then(Value::as_str).map_or_else(|| format!("M{i}"), str::to_string);
            Ok((name, module_from_json(field, m, &[("A", a)])?))
        })
        .collect()
}

pub fn catalogue_document(field: Field, modules: &[(String, Module)]) -> Value {
    let mut m = header("catalogue", field);
    m.insert("modules".into(), catalogue_to_json(modules));
    Value::Object(m)
}

/// A T-algebra as its underlying E-module plus the action `T(X) → X`.
pub fn t_algebra_to_json(x: &Module, action: &Matrix) -> Value {
    json!({"module": module_to_json(x, "E"), "action": matrix_to_json(action)})
}

pub fn t_algebra_from_json(c: &mut BimonadCtx, v: &Value, label: &str) -> Result<TAlgebra> {
    let e = c.pres.base.e.clone();
    let m = module_from_json(c.field(), get(v, "module", "T-algebra")?, &[("E", &e)])?;
    let x = c.add(m, label)?;
    let t = c.t(x)?;
    let action = matrix_from_json(c.field(), get(v, "action", "T-algebra")?, c.cat.dim(x), c.cat.dim(t), "action")?;
    TAlgebra::new(c, x, action)
}

pub fn set_algebra_from_json(v: &Value) -> Result<SetTAlgebra> {
    check_schema(v)?;
    let c = get_usize(v, "C", "set algebra")?;
    let a = get_usize(v, "A", "set algebra")?;
    let table = get(v, "table", "set algebra")?
        .as_array()
        .ok_or_else(|| Error::Schema("set algebra: \"table\" must be an array".into()))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| Error::Schema("set algebra: table entries are integers".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    SetTAlgebra::new(c, a, table)
}
