//! One driver per subcommand. Drivers never print; they return a
//! [`RunReport`] whose JSON form is deterministic in the inputs.

use std::fs;
use std::path::Path;

use bimonad::bialgebroid::check_bgd;
use bimonad::bimod::ObjId;
use bimonad::bimonad::{
    check_ambimonoidal, check_bmd, check_entwining, check_monad_morphism, extract_bialgebroid,
    from_bialgebroid_unchecked, restriction_uniqueness, BimonadCtx, FunctorKind, MorphismCtx,
};
use bimonad::emcat::{
    check_coherence_lifts, check_comparison_catalogue, check_free_adjunction, check_t_algebra,
    check_transport_monoidal, comparison_functor, em_tensor, em_unit, find_isomorphism, free_algebra, TAlgebra,
};
use bimonad::report::{Check, Report};
use bimonad::setmonad::{check_set_bmd, enumerate_algebras, up_to_iso};
use bimonad::{tannaka, Error};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::codec::{
    bialgebroid_from_json, bialgebroid_map_from_json, bialgebroid_to_json, catalogue_from_json, module_from_json,
    morphism_from_json, presentation_from_json, presentation_to_json, set_algebra_from_json, t_algebra_to_json,
};
use crate::CliError;

/// Seed for the random specialization used in isomorphism searches.
const ISO_SEED: u64 = 1;

pub struct Input {
    pub path: String,
    pub digest: String,
    pub json: Value,
}

pub fn load(path: &Path) -> Result<Input, CliError> {
    let p = path.display().to_string();
    let bytes = fs::read(path).map_err(|e| CliError::Io { path: p.clone(), source: e })?;
    let json = serde_json::from_slice(&bytes).map_err(|e| CliError::Json {
        path: p.clone(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok(Input { path: p, digest: hex::encode(Sha256::digest(&bytes)), json })
}

fn input_err(input: &Input) -> impl Fn(Error) -> CliError + '_ {
    move |e| CliError::Input { path: input.path.clone(), source: e }
}

/// Result of one command: the checks, the inputs they were computed from, and
/// any emitted documents.
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub options: Map<String, Value>,
    /// JSON key naming each check (`"diagram"` for bimonad diagrams).
    pub key: &'static str,
    pub report: Report,
    pub payload: Map<String, Value>,
}

impl RunReport {
    fn new(command: &str, inputs: &[&Input]) -> Self {
        RunReport {
            command: command.into(),
            inputs: inputs.iter().map(|i| (i.path.clone(), i.digest.clone())).collect(),
            options: Map::new(),
            key: "check",
            report: Report::new(),
            payload: Map::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.report.passed()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), json!(bimonad::json::SCHEMA));
        m.insert("command".into(), json!(self.command));
        let inputs: Vec<Value> = self.inputs.iter().map(|(p, d)| json!({"path": p, "sha256": d})).collect();
        m.insert("inputs".into(), Value::Array(inputs));
        if !self.options.is_empty() {
            m.insert("options".into(), Value::Object(self.options.clone()));
        }
        m.insert("status".into(), json!(if self.passed() { "pass" } else { "fail" }));
        m.insert("checks".into(), self.report.to_json(self.key));
        for (k, v) in &self.payload {
            m.insert(k.clone(), v.clone());
        }
        Value::Object(m)
    }

    /// Per check name: pass count, and every failing instance with its detail.
    pub fn summary(&self) -> String {
        let mut names: Vec<&str> = Vec::new();
        for c in &self.report.checks {
            if !names.contains(&c.name.as_str()) {
                names.push(&c.name);
            }
        }
        let mut out = format!("{}\n", self.command);
        for n in names {
            let cs = self.report.get(n);
            let ok = cs.iter().filter(|c| c.passed()).count();
            let tag = if ok == cs.len() { "pass" } else { "FAIL" };
            out.push_str(&format!("  {tag}  {n} ({ok}/{})\n", cs.len()));
            for c in cs.iter().filter(|c| !c.passed()) {
                out.push_str(&format!("        [{}] {}\n", c.objects.join(", "), c.detail.as_deref().unwrap_or("")));
            }
        }
        let failed = self.report.failures().count();
        out.push_str(&match failed {
            0 => format!("all {} checks passed\n", self.report.checks.len()),
            n => format!("{n} of {} checks failed\n", self.report.checks.len()),
        });
        out
    }
}

/// Bialgebroid axioms.
pub fn check_bialgebroid(path: &Path) -> Result<RunReport, CliError> {
    let input = load(path)?;
    let b = bialgebroid_from_json(&input.json).map_err(input_err(&input))?;
    let mut run = RunReport::new("check-bialgebroid", &[&input]);
    run.report = check_bgd(&b);
    Ok(run)
}

/// Canonical names of the standard family; `k` is the ground field, i.e. R.
fn canonical_name(n: &str) -> Option<&'static str> {
    match n {
        "R" | "k" => Some("R"),
        "E" => Some("E"),
        "A" => Some("A"),
        "AA" | "A⊗A" | "AxA" => Some("AA"),
        _ => None,
    }
}

/// The standard family plus any test objects given as module files over E.
fn family(c: &mut BimonadCtx, tests: &[String], extra: &mut Vec<Input>) -> Result<Vec<(String, ObjId)>, CliError> {
    let mut fam = c.standard_family().map_err(|e| CliError::Usage(e.to_string()))?;
    for t in tests {
        if canonical_name(t).is_some() {
            continue;
        }
        let input = load(Path::new(t))?;
        let base = c.pres.base.clone();
        let m = module_from_json(c.field(), &input.json, &[("E", &base.e)]).map_err(input_err(&input))?;
        let id = c.add(m, t).map_err(input_err(&input))?;
        fam.push((t.clone(), id));
        extra.push(input);
    }
    Ok(fam)
}

/// The ten bimonad diagrams over the standard family and any extra tests.
/// A bialgebroid file is converted without checking its axioms.
pub fn check_bimonad(path: &Path, tests: &[String]) -> Result<RunReport, CliError> {
    let input = load(path)?;
    let p = presentation_from_json(&input.json).map_err(input_err(&input))?;
    let mut c = BimonadCtx::new(p).map_err(input_err(&input))?;
    let mut extra = Vec::new();
    let fam = family(&mut c, tests, &mut extra)?;
    let mut inputs = vec![&input];
    inputs.extend(extra.iter());
    let mut run = RunReport::new("check-bimonad", &inputs);
    run.key = "diagram";
    run.options.insert("family".into(), json!(fam.iter().map(|f| f.0.clone()).collect::<Vec<_>>()));
    run.report = check_bmd(&mut c, &fam);
    Ok(run)
}

fn selected_tests(tests: &[String]) -> Result<Option<Vec<String>>, CliError> {
    if tests.is_empty() {
        return Ok(None);
    }
    tests
        .iter()
        .map(|t| {
            canonical_name(t)
                .map(str::to_string)
                .ok_or_else(|| CliError::Usage(format!("unknown test object \"{t}\"; use R (or k), E, A, AA")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

/// Structure maps rebuilt from the module-category adjunction against the
/// kernel formulas.
pub fn roundtrip(path: &Path, tests: &[String]) -> Result<RunReport, CliError> {
    let input = load(path)?;
    let b = bialgebroid_from_json(&input.json).map_err(input_err(&input))?;
    let names = selected_tests(tests)?;
    let mut run = RunReport::new("roundtrip", &[&input]);
    if let Some(n) = &names {
        run.options.insert("tests".into(), json!(n));
    }
    match tannaka::roundtrip(&b, names.as_deref()) {
        Ok(rep) => run.report = rep,
        Err(Error::Precondition { equation, witness }) => {
            run.report.push(Check::fail("precondition", &[], format!("{equation}: {witness}")));
        }
        Err(e) => return Err(input_err(&input)(e)),
    }
    Ok(run)
}

/// Bimonad presentation of a bialgebroid, emitted as `"bimonad"`.
pub fn to_bimonad(path: &Path) -> Result<RunReport, CliError> {
    let input = load(path)?;
    let b = bialgebroid_from_json(&input.json).map_err(input_err(&input))?;
    let mut run = RunReport::new("to-bimonad", &[&input]);
    run.report = check_bgd(&b);
    let p = from_bialgebroid_unchecked(&b).map_err(input_err(&input))?;
    run.payload.insert("bimonad".into(), presentation_to_json(&p));
    Ok(run)
}

/// Bialgebroid of a bimonad presentation, emitted as `"bialgebroid"`.
pub fn extract(path: &Path) -> Result<RunReport, CliError> {
    let input = load(path)?;
    let p = presentation_from_json(&input.json).map_err(input_err(&input))?;
    let mut run = RunReport::new("extract", &[&input]);
    match extract_bialgebroid(&p) {
        Ok(b) => {
            run.report.push(Check::pass("extracted", &[]));
            run.payload.insert("bialgebroid".into(), bialgebroid_to_json(&b));
        }
        Err(Error::Precondition { equation, witness }) => {
            run.report.push(Check::fail(equation, &[], format!("violated at {witness}")).with_witness(json!(witness)));
        }
        Err(e) => return Err(input_err(&input)(e)),
    }
    Ok(run)
}

/// Monad-morphism squares, ambimonoidality, uniqueness (restrictions) or the
/// entwining conditions (kernel functors), and transport of the unit
/// T-algebra. A `bialgebroid-map` file also gets the bialgebroid-map checks.
pub fn check_morphism(path: &Path) -> Result<RunReport, CliError> {
    let input = load(path)?;
    let err = input_err(&input);
    let mut run = RunReport::new("check-morphism", &[&input]);
    if input.json.get("kind").and_then(Value::as_str) == Some("bialgebroid-map") {
        let (b, a, w, p) = bialgebroid_map_from_json(&input.json).map_err(&err)?;
        run.report.extend(bimonad::bialgebroid::check_bialgebroid_map(&b, &a, &w, &p).map_err(&err)?);
    }
    let m = morphism_from_json(&input.json).map_err(&err)?;
    let kernel = matches!(m.kind, FunctorKind::Kernel { .. });
    let mut mc = MorphismCtx::new(m.clone()).map_err(&err)?;
    let fam = mc.src.standard_family().map_err(&err)?;
    run.report.extend(check_monad_morphism(&mut mc, &fam));
    run.report.extend(check_ambimonoidal(&mut mc, &fam));
    if kernel {
        run.report.extend(check_entwining(&m).map_err(&err)?);
    } else {
        run.report
            .push(restriction_uniqueness(&mut mc).unwrap_or_else(|e| Check::fail("phi-unique", &[], e.to_string())));
    }
    match em_unit(&mut mc.src) {
        Ok(u) => run
            .report
            .push(Check { objects: vec!["I".into(), "I".into()], ..check_transport_monoidal(&mut mc, &u, &u) }),
        Err(e) => run.report.push(Check::fail("transport-monoidal", &[], e.to_string())),
    }
    Ok(run)
}

/// Eilenberg-Moore checks on the comparison images of a catalogue of
/// A-modules: T-algebra laws, tensor products, coherence lifts, free
/// algebras, and the comparison functor.
pub fn em(path: &Path, catalogue: &Path) -> Result<RunReport, CliError> {
    let input = load(path)?;
    let cat_in = load(catalogue)?;
    let p = presentation_from_json(&input.json).map_err(input_err(&input))?;
    let modules = catalogue_from_json(p.field(), &p.a, &cat_in.json).map_err(input_err(&cat_in))?;
    let mut c = BimonadCtx::new(p.clone()).map_err(input_err(&input))?;
    let mut run = RunReport::new("em", &[&input, &cat_in]);
    let mut algs: Vec<(String, TAlgebra)> = Vec::new();
    for (n, m) in &modules {
        match comparison_functor(&mut c, m, n) {
            Ok(a) => algs.push((n.clone(), a)),
            Err(e) => run.report.push(Check::fail("comparison-functor", std::slice::from_ref(n), e.to_string())),
        }
    }
    match em_unit(&mut c) {
        Ok(u) => algs.push(("I".into(), u)),
        Err(e) => run.report.push(Check::fail("em-unit", &[], e.to_string())),
    }
    let tag = |rep: Report, o: &[String]| Report {
        checks: rep.checks.into_iter().map(|ch| Check { objects: o.to_vec(), ..ch }).collect(),
    };
    for (n, a) in &algs {
        run.report.extend(tag(check_t_algebra(&mut c, a), std::slice::from_ref(n)));
    }
    for (n, a) in &algs {
        for (m, b) in &algs {
            let o = [n.clone(), m.clone()];
            match em_tensor(&mut c, a, b) {
                Ok(ab) => run.report.extend(tag(check_t_algebra(&mut c, &ab), &o)),
                Err(e) => run.report.push(Check::fail("em-tensor", &o, e.to_string())),
            }
        }
    }
    let first: Vec<&(String, TAlgebra)> = algs.iter().take(3).collect();
    for (n, a) in &first {
        for (m, b) in &first {
            for (l, d) in &first {
                let o = [n.clone(), m.clone(), l.clone()];
                run.report.extend(tag(check_coherence_lifts(&mut c, a, b, d), &o));
            }
        }
    }
    for (n, a) in &algs {
        run.report.extend(tag(check_free_adjunction(&mut c, a), std::slice::from_ref(n)));
    }
    run.report.extend(check_comparison_catalogue(&mut c, &modules, ISO_SEED));
    let reg = bimonad::bimod::Module::regular(&p.a);
    let free_check = (|| -> bimonad::Result<bool> {
        let e = c.e_obj();
        let free_e = free_algebra(&mut c, e)?;
        let k = comparison_functor(&mut c, &reg, "A")?;
        Ok(find_isomorphism(&mut c, &k, &free_e, ISO_SEED)?.is_some())
    })();
    run.report.push(match free_check {
        Ok(ok) => Check::from_bool(
            "comparison-free-regular",
            &["A".to_string()],
            ok,
            "K(A) is not isomorphic to the free T-algebra on E",
        ),
        Err(e) => Check::fail("comparison-free-regular", &["A".to_string()], e.to_string()),
    });
    let out: Vec<Value> = algs
        .iter()
        .map(|(n, a)| {
            let mut v = t_algebra_to_json(c.cat.module(a.x), &a.action);
            v.as_object_mut().expect("object").insert("name".into(), json!(n));
            v
        })
        .collect();
    run.payload.insert("t_algebras".into(), Value::Array(out));
    Ok(run)
}

pub fn enumerate_set_algebras(c: usize, a: usize, iso: bool) -> Result<RunReport, CliError> {
    let mut run = RunReport::new("enumerate-set-algebras", &[]);
    run.options.insert("C".into(), json!(c));
    run.options.insert("A".into(), json!(a));
    run.options.insert("up_to_iso".into(), json!(iso));
    let mut algs = enumerate_algebras(c, a).map_err(|e| CliError::Usage(e.to_string()))?;
    if iso {
        algs = up_to_iso(&algs);
    }
    for x in &algs {
        let v = x.violation();
        run.report.push(Check::from_bool("t-algebra", &[], v.is_none(), v.unwrap_or_default()));
    }
    run.payload.insert("count".into(), json!(algs.len()));
    run.payload.insert("algebras".into(), Value::Array(algs.iter().map(|x| json!(x.table)).collect()));
    Ok(run)
}

/// The ten diagrams for the set bimonad `(−)^C` on the given test sizes.
pub fn check_set_bimonad(c: usize, sizes: &[usize]) -> Result<RunReport, CliError> {
    let mut run = RunReport::new("check-set-bimonad", &[]);
    run.key = "diagram";
    run.options.insert("C".into(), json!(c));
    run.options.insert("sizes".into(), json!(sizes));
    run.report = check_set_bmd(c, sizes);
    Ok(run)
}

/// Validity of a set T-algebra table.
pub fn check_set_algebra(path: &Path) -> Result<RunReport, CliError> {
    let input = load(path)?;
    let mut run = RunReport::new("check-set-algebra", &[&input]);
    match set_algebra_from_json(&input.json) {
        Ok(_) => run.report.push(Check::pass("t-algebra", &[])),
        Err(Error::InvalidAlgebra(d)) => run.report.push(Check::fail("t-algebra", &[], d)),
        Err(e) => return Err(input_err(&input)(e)),
    }
    Ok(run)
}
