//! Acceptance suite: one line per criterion, exit status 1 if any fails.

use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bimonad::bimod::Module;
use bimonad::bimonad::{from_bialgebroid, BimonadCtx};
use bimonad::emcat::{comparison_functor, em_tensor, find_isomorphism};
use bimonad::exactla::Field;
use bimonad::setmonad::{check_set_bmd, enumerate_algebras, free_set_algebra, SetTAlgebra};
use bimonad::tannaka::{check_monoidal_adjunction, MonoidalAdjunction};
use bimonad_cli::fixtures::{self, character, BIALGEBROIDS};
use serde_json::Value;

struct Run {
    code: i32,
    report: Value,
    bytes: Vec<u8>,
    elapsed: Duration,
}

fn run(dir: &Path, args: &[&str]) -> Run {
    let out = dir.join("acceptance-report.json");
    let _ = fs::remove_file(&out);
    let start = Instant::now();
    let st = Command::new(env!("CARGO_BIN_EXE_bimonad"))
        .current_dir(dir)
        .args(args)
        .arg("--out")
        .arg(&out)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let bytes = fs::read(&out).unwrap_or_default();
    let report = serde_json::from_slice(&bytes).unwrap_or(Value::Null);
    Run { code: st.status.code().unwrap_or(-1), report, bytes, elapsed }
}

fn checks(r: &Value) -> Vec<(String, bool, &Value)> {
    r["checks"]
        .as_array()
        .map(|cs| {
            cs.iter()
                .map(|c| {
                    let name =
                        c.get("check").or_else(|| c.get("diagram")).and_then(Value::as_str).unwrap_or("").to_string();
                    (name, c["status"] == "pass", c)
                })
                .collect()
        })
        .unwrap_or_default()
}

fn failing(r: &Value) -> Vec<String> {
    let mut out: Vec<String> = checks(r).into_iter().filter(|c| !c.1).map(|c| c.0).collect();
    out.sort();
    out.dedup();
    out
}

fn all_pass(r: &Value, names: &[&str]) -> bool {
    let cs = checks(r);
    names.iter().all(|n| {
        let mine: Vec<_> = cs.iter().filter(|c| c.0 == *n).collect();
        !mine.is_empty() && mine.iter().all(|c| c.1)
    })
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn bialgebroid_axioms(d: &Path) -> Outcome {
    let mut slowest = Duration::ZERO;
    for f in BIALGEBROIDS {
        let r = run(d, &["check-bialgebroid", &format!("{f}.json")]);
        ensure(r.code == 0, format!("{f}: exit {}", r.code))?;
        slowest = slowest.max(r.elapsed);
    }
    let a = run(d, &["check-bialgebroid", "broken_eps.json"]);
    let b = run(d, &["check-bialgebroid", "broken_eps.json"]);
    ensure(a.code == 1, format!("broken counit: exit {}", a.code))?;
    ensure(failing(&a.report) == ["comonoid-counit"], format!("broken counit fails {:?}", failing(&a.report)))?;
    let w = checks(&a.report).into_iter().find(|c| !c.1).and_then(|c| c.2.get("witness").cloned());
    let w2 = checks(&b.report).into_iter().find(|c| !c.1).and_then(|c| c.2.get("witness").cloned());
    ensure(w.is_some() && w == w2, "witness missing or not reproducible")?;
    slowest = slowest.max(a.elapsed);
    ensure(slowest < Duration::from_secs(1), format!("slowest run {slowest:?}"))?;
    Ok(format!(
        "4 fixtures pass, broken counit fails comonoid-counit with witness {}, slowest {slowest:.2?}",
        w.unwrap()
    ))
}

fn bimonad_diagrams(d: &Path) -> Outcome {
    let mut slowest = Duration::ZERO;
    let names = bimonad::bimonad::DIAGRAMS;
    for f in BIALGEBROIDS {
        let r = run(d, &["check-bimonad", &format!("{f}.json")]);
        ensure(r.code == 0 && all_pass(&r.report, &names), format!("{f}: failing {:?}", failing(&r.report)))?;
        let fam = &r.report["options"]["family"];
        ensure(*fam == serde_json::json!(["R", "E", "A", "AA"]), format!("{f}: family {fam}"))?;
        slowest = slowest.max(r.elapsed);
    }
    let r = run(d, &["check-bimonad", "broken_eps.json"]);
    ensure(r.code == 1, "broken counit presentation passes")?;
    let f = failing(&r.report);
    ensure(f == ["pi-counit-left", "pi-counit-right"], format!("broken counit fails {f:?}"))?;
    ensure(slowest.max(r.elapsed) < Duration::from_secs(10), format!("slowest run {slowest:?}"))?;
    Ok(format!(
        "all 10 diagrams pass on 4 fixtures over R, E, A, A⊗A; broken counit fails only {f:?}; slowest {slowest:.2?}"
    ))
}

const MATCHES: [&str; 4] = ["gamma-match", "pi-match", "mu-match", "eta-match"];
const SIGMA: [&str; 4] = ["sigma-hexagon", "sigma-unit-left", "sigma-unit-right", "tau-recovered"];
const ADJ: [&str; 4] = ["adj-counit-monoidal", "adj-counit-unital", "adj-unit-monoidal", "adj-unit-unital"];

fn roundtrips(d: &Path) -> Vec<Value> {
    BIALGEBROIDS.iter().map(|f| run(d, &["roundtrip", &format!("{f}.json")]).report).collect()
}

fn structure_roundtrip(reports: &[Value]) -> Outcome {
    let mut n = 0;
    for (f, r) in BIALGEBROIDS.iter().zip(reports) {
        ensure(all_pass(r, &MATCHES), format!("{f}: failing {:?}", failing(r)))?;
        n += checks(r).iter().filter(|c| MATCHES.contains(&c.0.as_str())).count();
    }
    Ok(format!("{n} comparisons of γ, π, μ, η with the kernel formulas, all equal"))
}

fn extraction(d: &Path) -> Outcome {
    for f in BIALGEBROIDS {
        let p = format!("acc_p_{f}.json");
        let x = format!("acc_x_{f}.json");
        ensure(
            run(d, &["to-bimonad", &format!("{f}.json"), "--emit", &p]).code == 0,
            format!("{f}: to-bimonad failed"),
        )?;
        ensure(run(d, &["extract", &p, "--emit", &x]).code == 0, format!("{f}: extract failed"))?;
        let same = fs::read(d.join(format!("{f}.json"))).ok() == fs::read(d.join(&x)).ok();
        ensure(same, format!("{f}: extracted JSON differs from the fixture"))?;
    }
    Ok("extract ∘ to-bimonad reproduces all 4 fixture files byte for byte".into())
}

fn sigma_upsilon(reports: &[Value]) -> Outcome {
    for (f, r) in BIALGEBROIDS.iter().zip(reports) {
        ensure(all_pass(r, &SIGMA), format!("{f}: failing {:?}", failing(r)))?;
    }
    Ok("hexagon, both unit squares and τ recovery hold on all fixtures".into())
}

fn monoidal_adjunction(reports: &[Value]) -> Outcome {
    for (f, r) in BIALGEBROIDS.iter().zip(reports) {
        ensure(all_pass(r, &ADJ), format!("{f}: failing {:?}", failing(r)))?;
    }
    // unit of the group algebra perturbed from 1 to g
    let b = fixtures::grp2();
    let q = Field::Rationals;
    let mut adj = MonoidalAdjunction::new(&b).map_err(|e| e.to_string())?.with_unit(vec![q.zero(), q.one()]);
    let fam = adj.ctx.standard_family().map_err(|e| e.to_string())?;
    let rep = check_monoidal_adjunction(&mut adj, &fam, &[("A".to_string(), Module::regular(&b.a))]);
    ensure(!rep.all_passed("adj-unit-monoidal"), "perturbed unit passes adj-unit-monoidal")?;
    let w = rep.failures().find(|c| c.name == "adj-unit-monoidal").and_then(|c| c.witness.clone());
    ensure(w.is_some(), "perturbed unit failure has no witness")?;
    Ok(format!(
        "four adjunction equations hold on fixtures; unit 1 ↦ g fails adj-unit-monoidal ({})",
        rep.failed_names().join(", ")
    ))
}

fn eilenberg_moore(d: &Path) -> Outcome {
    let r = run(d, &["em", "grp2.json", "grp2_modules.json"]);
    ensure(r.code == 0, format!("em: failing {:?}", failing(&r.report)))?;
    ensure(
        all_pass(
            &r.report,
            &[
                "talg-assoc",
                "talg-unit",
                "lift-associator",
                "lift-left-unitor",
                "lift-right-unitor",
                "comparison-free-regular",
            ],
        ),
        "em report incomplete",
    )?;
    let p = from_bialgebroid(&fixtures::grp2()).map_err(|e| e.to_string())?;
    let mut c = BimonadCtx::new(p.clone()).map_err(|e| e.to_string())?;
    let iso = (|| {
        let triv = comparison_functor(&mut c, &character(&p.a, &[1, 1]), "triv")?;
        let sign = comparison_functor(&mut c, &character(&p.a, &[1, -1]), "sign")?;
        let ss = em_tensor(&mut c, &sign, &sign)?;
        Ok::<_, bimonad::Error>((
            find_isomorphism(&mut c, &ss, &triv, 1)?.is_some(),
            find_isomorphism(&mut c, &sign, &triv, 1)?.is_none(),
        ))
    })()
    .map_err(|e| e.to_string())?;
    ensure(iso == (true, true), "sign⊗sign is not isomorphic to trivial")?;
    let n = checks(&r.report).len();
    Ok(format!("{n} checks on ℚ[Z₂] catalogue pass; sign⊗sign ≅ trivial, sign ≇ trivial"))
}

fn morphisms(d: &Path) -> Outcome {
    let plus = run(d, &["check-morphism", "sign_plus.json"]);
    ensure(plus.code == 0, format!("g ↦ 1 fails {:?}", failing(&plus.report)))?;
    ensure(
        all_pass(
            &plus.report,
            &["mnd-mor-mult", "mnd-mor-unit", "ambi-monoidal", "ambi-unit", "transport-monoidal", "phi-unique"],
        ),
        "g ↦ 1 report incomplete",
    )?;
    let minus = run(d, &["check-morphism", "sign_minus.json"]);
    ensure(minus.code == 1, "g ↦ −1 passes")?;
    let f = failing(&minus.report);
    ensure(
        f.contains(&"ambi-monoidal".into())
            && f.contains(&"ambi-unit".into())
            && f.contains(&"transport-monoidal".into()),
        format!("g ↦ −1 fails {f:?}"),
    )?;
    ensure(all_pass(&minus.report, &["mnd-mor-mult", "mnd-mor-unit", "phi-unique"]), "g ↦ −1 is not a monad morphism")?;
    let witnessed =
        checks(&minus.report).iter().filter(|c| !c.1 && c.0.starts_with("ambi")).all(|c| c.2.get("witness").is_some());
    ensure(witnessed, "ambimonoidality failure without witness")?;
    Ok("g ↦ 1 passes all; g ↦ −1 is a monad morphism failing ambimonoidality and transport; φ unique in both".into())
}

fn set_bimonad() -> Outcome {
    let start = Instant::now();
    for c in 0..=3 {
        let rep = check_set_bmd(c, &[0, 1, 2, 3]);
        ensure(rep.passed(), format!("|C| = {c}: failing {:?}", rep.failed_names()))?;
    }
    let two = enumerate_algebras(2, 2).map_err(|e| e.to_string())?;
    let evs = [SetTAlgebra::evaluation(0, 2, 2), SetTAlgebra::evaluation(1, 2, 2)];
    ensure(
        two.len() == 2 && evs.iter().all(|e| e.as_ref().is_ok_and(|e| two.contains(e))),
        format!("|A| = |C| = 2 gives {} algebras", two.len()),
    )?;
    let f = free_set_algebra(2, 2).map_err(|e| e.to_string())?;
    // elements of A^C encoded as x0·2 + x1; input pair encoded as p0·4 + p1
    let diagonal = (0..16).all(|i| {
        let (p0, p1) = (i / 4, i % 4);
        f.apply(&[p0, p1]) == (p0 / 2) * 2 + p1 % 2
    });
    ensure(diagonal, "free algebra is not the diagonal")?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(30), format!("took {t:?}"))?;
    Ok(format!("10 diagrams pass for |C| ≤ 3 on sets of size ≤ 3; 2 algebras for |A| = |C| = 2; diagonal free algebra; {t:.2?}"))
}

fn determinism(d: &Path) -> Outcome {
    let commands: Vec<Vec<&str>> = vec![
        vec!["check-bialgebroid", "grp2.json"],
        vec!["check-bialgebroid", "broken_eps.json"],
        vec!["check-bimonad", "triv_kz2.json"],
        vec!["check-bimonad", "broken_eps.json"],
        vec!["roundtrip", "triv_kxk.json"],
        vec!["to-bimonad", "grp2.json"],
        vec!["check-morphism", "sign_plus.json"],
        vec!["check-morphism", "sign_minus.json"],
        vec!["em", "grp2.json", "grp2_modules.json"],
        vec!["enumerate-set-algebras", "--c", "2", "--a", "2"],
        vec!["check-set-bimonad", "--c", "2"],
        vec!["check-set-algebra", "set_free_c2_a2.json"],
    ];
    for args in &commands {
        let a = run(d, args);
        let b = run(d, args);
        ensure(
            !a.bytes.is_empty() && a.bytes == b.bytes && a.code == b.code,
            format!("{args:?} differs between runs"),
        )?;
    }
    Ok(format!("{} commands produce byte-identical reports on re-run", commands.len()))
}

fn main() -> ExitCode {
    let dir = tempfile::tempdir().expect("temp dir");
    let d = dir.path();
    let st = Command::new(env!("CARGO_BIN_EXE_bimonad")).args(["fixtures", "--dir"]).arg(d).output().expect("fixtures");
    assert!(st.status.success(), "writing fixtures failed");
    let rt = roundtrips(d);
    let results: Vec<(&str, Outcome)> = vec![
        ("bialgebroid axioms", bialgebroid_axioms(d)),
        ("bimonad diagrams", bimonad_diagrams(d)),
        ("structure roundtrip", structure_roundtrip(&rt)),
        ("extraction", extraction(d)),
        ("comonoidal structure of the forgetful functor", sigma_upsilon(&rt)),
        ("monoidal adjunction", monoidal_adjunction(&rt)),
        ("Eilenberg-Moore category", eilenberg_moore(d)),
        ("morphisms", morphisms(d)),
        ("set bimonad", set_bimonad()),
        ("determinism", determinism(d)),
    ];
    let mut ok = true;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(msg) => println!("criterion {:2} PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                ok = false;
                println!("criterion {:2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
