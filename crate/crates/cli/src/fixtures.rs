//! The shipped fixture library and its manifest of expected outcomes.

use std::fs;
use std::path::Path;

use bimonad::algebra::{AlgebraMap, FDAlgebra};
use bimonad::bialgebroid::{group_bialgebra, trivial_bialgebroid, BialgebroidData};
use bimonad::bimod::Module;
use bimonad::exactla::{Field, Matrix};
use bimonad::setmonad::{free_set_algebra, SetTAlgebra};
use serde_json::{json, Value};

use crate::codec::{bialgebroid_map_to_json, bialgebroid_to_json, catalogue_document};
use crate::CliError;

fn q() -> Field {
    Field::Rationals
}

pub fn grp2() -> BialgebroidData {
    group_bialgebra(q(), 2).expect("group algebra")
}

pub fn triv_k() -> BialgebroidData {
    trivial_bialgebroid(&FDAlgebra::ground(q())).expect("ground field")
}

pub fn triv_kxk() -> BialgebroidData {
    trivial_bialgebroid(&FDAlgebra::product_of_fields(q(), 2)).expect("k x k")
}

pub fn triv_kz2() -> BialgebroidData {
    trivial_bialgebroid(&FDAlgebra::cyclic_group(q(), 2)).expect("k[Z2]")
}

/// The group bialgebra of Z₂ with counit `g ↦ −1`: still multiplicative, but
/// not a counit for the comultiplication.
pub fn broken_eps() -> BialgebroidData {
    let mut b = grp2();
    b.counit = Matrix::from_rows(q(), 2, vec![vec![q().one(), q().int(-1)]]).expect("1x2");
    b
}

/// The algebra map `k[Z₂] → k`, `g ↦ sign`, as a map of bialgebroids over k.
pub fn sign_map(sign: i64) -> (BialgebroidData, BialgebroidData, AlgebraMap, AlgebraMap) {
    let b = grp2();
    let a = triv_k();
    let omega = FDAlgebra::ground(q()).identity_map();
    let phi = Matrix::from_rows(q(), 2, vec![vec![q().one(), q().int(sign)]]).expect("1x2");
    let phi = AlgebraMap::new(b.a.clone(), a.a.clone(), phi).expect("shape");
    (b, a, omega, phi)
}

pub fn character(a: &FDAlgebra, values: &[i64]) -> Module {
    let action = values.iter().map(|&v| Matrix::from_rows(q(), 1, vec![vec![q().int(v)]]).expect("1x1")).collect();
    Module::new(a.clone(), 1, action).expect("character")
}

/// Trivial, sign and regular representations of Z₂.
pub fn grp2_catalogue() -> Vec<(String, Module)> {
    let a = grp2().a;
    vec![
        ("triv".into(), character(&a, &[1, 1])),
        ("sign".into(), character(&a, &[1, -1])),
        ("reg".into(), Module::regular(&a)),
    ]
}

pub const BIALGEBROIDS: [&str; 4] = ["grp2", "triv_k", "triv_kxk", "triv_kz2"];

pub fn bialgebroid(name: &str) -> Option<BialgebroidData> {
    Some(match name {
        "grp2" => grp2(),
        "triv_k" => triv_k(),
        "triv_kxk" => triv_kxk(),
        "triv_kz2" => triv_kz2(),
        "broken_eps" => broken_eps(),
        _ => return None,
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Writes `v` as pretty JSON followed by a newline, the format every command
/// uses for emitted documents.
pub fn write_json(path: &Path, v: &Value) -> Result<(), CliError> {
    fs::write(path, pretty(v)).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })
}

fn expect(args: &[&str], exit: i32, failing: &[&str]) -> Value {
    json!({"args": args, "exit": exit, "failing": failing})
}

/// `(file name, document)` for every shipped fixture.
pub fn documents() -> Vec<(String, Value)> {
    let mut out: Vec<(String, Value)> = Vec::new();
    for name in BIALGEBROIDS.iter().chain(["broken_eps"].iter()) {
        out.push((format!("{name}.json"), bialgebroid_to_json(&bialgebroid(name).expect("known"))));
    }
    for (file, sign) in [("sign_plus.json", 1), ("sign_minus.json", -1)] {
        let (b, a, w, p) = sign_map(sign);
        out.push((file.into(), bialgebroid_map_to_json(&b, &a, &w, &p)));
    }
    out.push(("grp2_modules.json".into(), catalogue_document(q(), &grp2_catalogue())));
    let ev = SetTAlgebra::evaluation(0, 2, 2).expect("evaluation");
    out.push(("set_evaluation_c2_a2.json".into(), ev.to_json()));
    out.push(("set_free_c2_a2.json".into(), free_set_algebra(2, 2).expect("free").to_json()));
    out
}

/// Expected outcome of each command on the shipped files, by file name.
pub fn manifest() -> Value {
    let mut entries = Vec::new();
    for name in BIALGEBROIDS {
        let f = format!("{name}.json");
        entries.push(json!({
            "name": name,
            "file": f,
            "expect": [
                expect(&["check-bialgebroid", &f], 0, &[]),
                expect(&["check-bimonad", &f], 0, &[]),
                expect(&["roundtrip", &f], 0, &[]),
            ],
        }));
    }
    entries.push(json!({
        "name": "broken_eps",
        "file": "broken_eps.json",
        "expect": [
            expect(&["check-bialgebroid", "broken_eps.json"], 1, &["comonoid-counit"]),
            expect(&["check-bimonad", "broken_eps.json"], 1, &["pi-counit-left", "pi-counit-right"]),
        ],
    }));
    entries.push(json!({
        "name": "sign_plus",
        "file": "sign_plus.json",
        "expect": [expect(&["check-morphism", "sign_plus.json"], 0, &[])],
    }));
    entries.push(json!({
        "name": "sign_minus",
        "file": "sign_minus.json",
        "expect": [expect(
            &["check-morphism", "sign_minus.json"],
            1,
            &["comul-compatible", "counit-compatible", "ambi-monoidal", "ambi-unit", "transport-monoidal"],
        )],
    }));
    entries.push(json!({
        "name": "grp2_modules",
        "file": "grp2_modules.json",
        "expect": [expect(&["em", "grp2.json", "grp2_modules.json"], 0, &[])],
    }));
    for f in ["set_evaluation_c2_a2.json", "set_free_c2_a2.json"] {
        entries.push(json!({
            "name": f.trim_end_matches(".json"),
            "file": f,
            "expect": [expect(&["check-set-algebra", f], 0, &[])],
        }));
    }
    json!({
        "schema": bimonad::json::SCHEMA,
        "kind": "manifest",
        "fixtures": entries,
        "set_presets": [
            {"C": 1, "A": 1, "count": 1},
            {"C": 1, "A": 2, "count": 1},
            {"C": 2, "A": 2, "count": 2},
        ],
    })
}

pub fn write_all(dir: &Path) -> Result<Vec<String>, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io { path: dir.display().to_string(), source: e })?;
    let mut names = Vec::new();
    for (file, doc) in documents() {
        write_json(&dir.join(&file), &doc)?;
        names.push(file);
    }
    write_json(&dir.join("manifest.json"), &manifest())?;
    names.push("manifest.json".into());
    Ok(names)
}
