use bimonad::algebra::FDAlgebra;
use bimonad::bimod::Module;
use bimonad::bimonad::{from_bialgebroid, BimonadCtx, Morphism};
use bimonad::emcat::comparison_functor;
use bimonad::exactla::{Field, Matrix};
use bimonad::setmonad::free_set_algebra;
use bimonad::Error;
use bimonad_cli::codec::*;
use bimonad_cli::fixtures::{self, character, grp2_catalogue};
use serde_json::json;

fn q() -> Field {
    Field::Rationals
}

#[test]
fn algebras_roundtrip() {
    for a in [
        FDAlgebra::ground(q()),
        FDAlgebra::cyclic_group(q(), 3),
        FDAlgebra::upper_triangular(q()),
        FDAlgebra::product_of_fields(Field::prime(5).unwrap(), 2),
    ] {
        let v = algebra_to_json(&a);
        assert_eq!(algebra_from_json(a.field(), &v).unwrap(), a);
    }
    assert_eq!(algebra_from_json(q(), &json!("k")).unwrap(), FDAlgebra::ground(q()));
}

#[test]
fn non_associative_table_is_located() {
    // e1 e0 = e0 but e0 e0 = e1 breaks (e1 e0) e0 = e1 (e0 e0)
    let v = json!({"dim": 2, "mult": [[["0/1", "1/1"], ["0/1", "0/1"]], [["1/1", "0/1"], ["0/1", "0/1"]]], "unit": ["1/1", "0/1"]});
    assert!(algebra_from_json(q(), &v).is_err());
}

#[test]
fn bialgebroids_roundtrip() {
    for name in fixtures::BIALGEBROIDS.iter().chain(["broken_eps"].iter()) {
        let b = fixtures::bialgebroid(name).unwrap();
        let v = bialgebroid_to_json(&b);
        assert_eq!(v["schema"], json!("1"));
        let back = bialgebroid_from_json(&v).unwrap();
        assert_eq!(back, b, "{name}");
        assert_eq!(bialgebroid_to_json(&back), v);
    }
}

#[test]
fn plain_comultiplication_is_projected() {
    let b = fixtures::grp2();
    let mut v = bialgebroid_to_json(&b);
    let o = v.as_object_mut().unwrap();
    o.remove("comul");
    // g ↦ g⊗g, 1 ↦ 1⊗1 in the lexicographic basis of A⊗A
    o.insert("comul_plain".into(), json!([["1", "0"], ["0", "0"], ["0", "0"], ["0", "1"]]));
    assert_eq!(bialgebroid_from_json(&v).unwrap(), b);
}

#[test]
fn presentations_roundtrip() {
    for name in fixtures::BIALGEBROIDS {
        let p = from_bialgebroid(&fixtures::bialgebroid(name).unwrap()).unwrap();
        let v = presentation_to_json(&p);
        assert_eq!(presentation_from_json(&v).unwrap(), p, "{name}");
    }
}

#[test]
fn morphisms_roundtrip() {
    for sign in [1, -1] {
        let (b, a, w, p) = fixtures::sign_map(sign);
        let m = Morphism::from_bialgebroid_map(&b, &a, &w, &p).unwrap();
        let v = morphism_to_json(&m);
        assert_eq!(morphism_from_json(&v).unwrap(), m);
        let map_doc = bialgebroid_map_to_json(&b, &a, &w, &p);
        assert_eq!(morphism_from_json(&map_doc).unwrap(), m);
        let (b2, a2, w2, p2) = bialgebroid_map_from_json(&map_doc).unwrap();
        assert_eq!((b2, a2, w2, p2), (b, a, w, p));
    }
    let triv = from_bialgebroid(&fixtures::triv_k()).unwrap();
    let g = FDAlgebra::cyclic_group(q(), 2);
    let k = Morphism::kernel(triv.clone(), triv, g, Matrix::identity(q(), 2)).unwrap();
    assert_eq!(morphism_from_json(&morphism_to_json(&k)).unwrap(), k);
}

#[test]
fn modules_and_catalogues_roundtrip() {
    let a = fixtures::grp2().a;
    let cat = grp2_catalogue();
    let doc = catalogue_document(q(), &cat);
    assert_eq!(catalogue_from_json(q(), &a, &doc).unwrap(), cat);
    assert_eq!(catalogue_from_json(q(), &a, &catalogue_to_json(&cat)).unwrap(), cat);
    let m = character(&a, &[1, -1]);
    let inline = json!({"base": algebra_to_json(&a), "dim": 1, "action": [[["1/1"]], [["-1/1"]]]});
    assert_eq!(module_from_json(q(), &inline, &[]).unwrap(), m);
    assert_eq!(module_from_json(q(), &module_to_json(&m, "A"), &[("A", &a)]).unwrap(), m);
    assert!(module_from_json(q(), &module_to_json(&m, "B"), &[("A", &a)]).is_err());
    let bad = json!({"base": "A", "dim": 1, "action": [[["1/1"]], [["2/1"]]]});
    assert!(module_from_json(q(), &bad, &[("A", &a)]).is_err());
}

#[test]
fn t_algebras_roundtrip() {
    let p = from_bialgebroid(&fixtures::grp2()).unwrap();
    let mut c = BimonadCtx::new(p.clone()).unwrap();
    for (n, m) in grp2_catalogue() {
        let t = comparison_functor(&mut c, &m, &n).unwrap();
        let v = t_algebra_to_json(c.cat.module(t.x), &t.action);
        let back = t_algebra_from_json(&mut c, &v, &n).unwrap();
        assert_eq!(back, t);
    }
}

#[test]
fn set_algebras_roundtrip() {
    let f = free_set_algebra(2, 2).unwrap();
    assert_eq!(set_algebra_from_json(&f.to_json()).unwrap(), f);
    let bad = json!({"schema": "1", "C": 2, "A": 2, "table": [0, 0, 0, 1]});
    assert!(matches!(set_algebra_from_json(&bad), Err(Error::InvalidAlgebra(_))));
}

#[test]
fn wrong_schema_and_kind_are_rejected() {
    let mut v = bialgebroid_to_json(&fixtures::grp2());
    v["schema"] = json!("2");
    assert!(matches!(bialgebroid_from_json(&v), Err(Error::Schema(_))));
    let v = presentation_to_json(&from_bialgebroid(&fixtures::grp2()).unwrap());
    assert!(matches!(bialgebroid_from_json(&v), Err(Error::Schema(_))));
}

#[test]
fn prime_field_documents() {
    let f = Field::prime(3).unwrap();
    let b = bimonad::bialgebroid::group_bialgebra(f, 3).unwrap();
    let v = bialgebroid_to_json(&b);
    assert_eq!(v["field"], json!({"kind": "prime_field", "p": 3}));
    assert_eq!(bialgebroid_from_json(&v).unwrap(), b);
    let m = Module::regular(&b.a);
    assert_eq!(module_from_json(f, &module_to_json(&m, "A"), &[("A", &b.a)]).unwrap(), m);
}

mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn group_bialgebras_roundtrip(n in 1usize..5, p in prop::sample::select(vec![0u64, 2, 3, 7])) {
            let f = if p == 0 { q() } else { Field::prime(p).unwrap() };
            let b = bimonad::bialgebroid::group_bialgebra(f, n).unwrap();
            let v = bialgebroid_to_json(&b);
            prop_assert_eq!(bialgebroid_from_json(&v).unwrap(), b.clone());
            let m = Module::regular(&b.a);
            prop_assert_eq!(module_from_json(f, &module_to_json(&m, "A"), &[("A", &b.a)]).unwrap(), m);
        }

        #[test]
        fn scaled_characters_roundtrip(num in -20i64..20, den in 1i64..9) {
            let a = FDAlgebra::ground(q());
            let m = Module::new(a.clone(), 1, vec![Matrix::identity(q(), 1)]).unwrap();
            let v = module_to_json(&m, "k");
            prop_assert_eq!(module_from_json(q(), &v, &[]).unwrap(), m);
            let x = q().ratio(num, den);
            let s = bimonad::json::scalar_to_json(&x);
            prop_assert_eq!(bimonad::json::scalar_from_json(q(), &s).unwrap(), x);
        }
    }
}
