use bimonad::algebra::{AlgebraMap, FDAlgebra};
use bimonad::bialgebroid::{group_bialgebra, trivial_bialgebroid};
use bimonad::bimod::Module;
use bimonad::bimonad::{
    check_monad_morphism, from_bialgebroid, BimonadCtx, BimonadPresentation, Morphism, MorphismCtx,
};
use bimonad::emcat::{
    check_coherence_lifts, check_comparison_catalogue, check_free_adjunction, check_t_algebra,
    check_transport_monoidal, comparison_functor, em_tensor, em_unit, find_isomorphism, free_algebra, module_of,
    transport_module, TAlgebra,
};
use bimonad::exactla::{Field, Matrix};

fn q() -> Field {
    Field::Rationals
}

fn grp2() -> BimonadPresentation {
    from_bialgebroid(&group_bialgebra(q(), 2).unwrap()).unwrap()
}

fn character(a: &FDAlgebra, values: &[i64]) -> Module {
    let action = values.iter().map(|&v| Matrix::from_rows(q(), 1, vec![vec![q().int(v)]]).unwrap()).collect();
    Module::new(a.clone(), 1, action).unwrap()
}

fn direct_sum(m: &Module, n: &Module) -> Module {
    let (dm, dn) = (m.dim(), n.dim());
    let action = m
        .action()
        .iter()
        .zip(n.action())
        .map(|(x, y)| {
            Matrix::from_fn(q(), dm + dn, dm + dn, |i, j| match (i < dm, j < dm) {
                (true, true) => x.get(i, j),
                (false, false) => y.get(i - dm, j - dm),
                _ => q().zero(),
            })
        })
        .collect();
    Module::new(m.base().clone(), dm + dn, action).unwrap()
}

#[test]
fn sign_times_sign_is_trivial() {
    let p = grp2();
    let mut c = BimonadCtx::new(p.clone()).unwrap();
    let triv = comparison_functor(&mut c, &character(&p.a, &[1, 1]), "triv").unwrap();
    let sign = comparison_functor(&mut c, &character(&p.a, &[1, -1]), "sign").unwrap();
    let ss = em_tensor(&mut c, &sign, &sign).unwrap();
    assert!(check_t_algebra(&mut c, &ss).passed());
    assert_eq!(module_of(&mut c, &ss).unwrap(), character(&p.a, &[1, 1]));
    assert!(find_isomorphism(&mut c, &ss, &triv, 7).unwrap().is_some());
    assert!(find_isomorphism(&mut c, &sign, &triv, 7).unwrap().is_none());
    let tt = em_tensor(&mut c, &triv, &triv).unwrap();
    assert_eq!(module_of(&mut c, &tt).unwrap(), character(&p.a, &[1, 1]));
}

#[test]
fn sign_module_acts_by_minus_one() {
    let p = grp2();
    let mut c = BimonadCtx::new(p.clone()).unwrap();
    let sign = comparison_functor(&mut c, &character(&p.a, &[1, -1]), "sign").unwrap();
    // T(k) = A, the basis element g sits in column 1
    assert_eq!(sign.action, Matrix::from_rows(q(), 2, vec![vec![q().one(), q().int(-1)]]).unwrap());
}

#[test]
fn coherence_isomorphisms_lift() {
    let p = grp2();
    let mut c = BimonadCtx::new(p.clone()).unwrap();
    let sign = comparison_functor(&mut c, &character(&p.a, &[1, -1]), "sign").unwrap();
    let reg = comparison_functor(&mut c, &Module::regular(&p.a), "reg").unwrap();
    let triv = comparison_functor(&mut c, &character(&p.a, &[1, 1]), "triv").unwrap();
    let rep = check_coherence_lifts(&mut c, &sign, &reg, &triv);
    assert!(rep.passed(), "{}", rep.summary());
    let u = em_unit(&mut c).unwrap();
    let ua = em_tensor(&mut c, &u, &reg).unwrap();
    assert!(find_isomorphism(&mut c, &ua, &reg, 3).unwrap().is_some());
}

#[test]
fn coherence_lifts_over_noncentral_base() {
    let r = FDAlgebra::product_of_fields(q(), 2);
    let p = from_bialgebroid(&trivial_bialgebroid(&r).unwrap()).unwrap();
    let mut c = BimonadCtx::new(p.clone()).unwrap();
    let reg = comparison_functor(&mut c, &Module::regular(&p.a), "reg").unwrap();
    let u = em_unit(&mut c).unwrap();
    let rep = check_coherence_lifts(&mut c, &reg, &u, &reg);
    assert!(rep.passed(), "{}", rep.summary());
}

#[test]
fn free_algebras_and_comparison_of_regular_module() {
    let p = grp2();
    let mut c = BimonadCtx::new(p.clone()).unwrap();
    let r = c.unit();
    let free = free_algebra(&mut c, r).unwrap();
    assert_eq!(module_of(&mut c, &free).unwrap(), Module::regular(&p.a));
    for base in [FDAlgebra::ground(q()), FDAlgebra::product_of_fields(q(), 2), FDAlgebra::cyclic_group(q(), 2)] {
        let p = from_bialgebroid(&trivial_bialgebroid(&base).unwrap()).unwrap();
        let mut c = BimonadCtx::new(p.clone()).unwrap();
        let e = c.e_obj();
        let free_e = free_algebra(&mut c, e).unwrap();
        let k = comparison_functor(&mut c, &Module::regular(&p.a), "reg").unwrap();
        assert!(find_isomorphism(&mut c, &k, &free_e, 11).unwrap().is_some());
        let rep = check_free_adjunction(&mut c, &k);
        assert!(rep.passed(), "{}", rep.summary());
    }
}

#[test]
fn free_on_zero_module_is_zero() {
    let p = grp2();
    let mut c = BimonadCtx::new(p.clone()).unwrap();
    let z = c.add(Module::zero(&p.base.e), "0").unwrap();
    let f = free_algebra(&mut c, z).unwrap();
    assert_eq!(f.dim(), 0);
}

#[test]
fn comparison_reflects_isomorphism_on_catalogue() {
    let p = grp2();
    let mut c = BimonadCtx::new(p.clone()).unwrap();
    let triv = character(&p.a, &[1, 1]);
    let sign = character(&p.a, &[1, -1]);
    let cat = vec![
        ("triv".to_string(), triv.clone()),
        ("sign".to_string(), sign.clone()),
        ("reg".to_string(), Module::regular(&p.a)),
        ("triv+sign".to_string(), direct_sum(&triv, &sign)),
        ("triv+triv".to_string(), direct_sum(&triv, &triv)),
    ];
    let rep = check_comparison_catalogue(&mut c, &cat, 5);
    assert!(rep.passed(), "{}", rep.summary());
}

#[test]
fn invalid_action_is_rejected() {
    let p = grp2();
    let mut c = BimonadCtx::new(p).unwrap();
    let r = c.unit();
    let bad = Matrix::from_rows(q(), 2, vec![vec![q().int(2), q().zero()]]).unwrap();
    assert!(TAlgebra::new(&mut c, r, bad).is_err());
}

fn to_group_algebra(sign: i64) -> Morphism {
    let b = group_bialgebra(q(), 2).unwrap();
    let a = trivial_bialgebroid(&FDAlgebra::ground(q())).unwrap();
    let phi = Matrix::from_rows(q(), 2, vec![vec![q().one(), q().int(sign)]]).unwrap();
    let phi = AlgebraMap::new(b.a.clone(), a.a.clone(), phi).unwrap();
    Morphism::from_bialgebroid_map(&b, &a, &FDAlgebra::ground(q()).identity_map(), &phi).unwrap()
}

#[test]
fn transport_along_bialgebroid_maps() {
    for (sign, monoidal) in [(1, true), (-1, false)] {
        let mut mc = MorphismCtx::new(to_group_algebra(sign)).unwrap();
        let fam = mc.src.standard_family().unwrap();
        assert!(check_monad_morphism(&mut mc, &fam).passed());
        let k = FDAlgebra::ground(q());
        let triv_k = comparison_functor(&mut mc.src, &character(&k, &[1]), "k").unwrap();
        let moved = transport_module(&mut mc, &triv_k).unwrap();
        let a = mc.tgt.pres.a.clone();
        assert_eq!(module_of(&mut mc.tgt, &moved).unwrap(), character(&a, &[1, sign]));
        assert_eq!(check_transport_monoidal(&mut mc, &triv_k, &triv_k).passed(), monoidal, "sign {sign}");
    }
}

#[test]
fn identity_transport_is_identity() {
    let p = grp2();
    let mut mc = MorphismCtx::new(Morphism::identity(&p)).unwrap();
    let sign = comparison_functor(&mut mc.src, &character(&p.a, &[1, -1]), "sign").unwrap();
    let moved = transport_module(&mut mc, &sign).unwrap();
    assert_eq!(moved.action, sign.action);
    assert_eq!(module_of(&mut mc.tgt, &moved).unwrap(), module_of(&mut mc.src, &sign).unwrap());
    assert!(check_transport_monoidal(&mut mc, &sign, &sign).passed());
}

#[test]
fn transport_composes() {
    let m1 = to_group_algebra(-1);
    let m2 = Morphism::identity(&grp2());
    let comp = m1.then(&m2).unwrap();
    let k = FDAlgebra::ground(q());
    let mut c1 = MorphismCtx::new(m1).unwrap();
    let mut c2 = MorphismCtx::new(m2).unwrap();
    let mut cc = MorphismCtx::new(comp).unwrap();
    let a1 = comparison_functor(&mut c1.src, &character(&k, &[1]), "k").unwrap();
    let step = transport_module(&mut c1, &a1).unwrap();
    let step_m = module_of(&mut c1.tgt, &step).unwrap();
    let a2 = comparison_functor(&mut c2.src, &step_m, "mid").unwrap();
    let two = transport_module(&mut c2, &a2).unwrap();
    let ac = comparison_functor(&mut cc.src, &character(&k, &[1]), "k").unwrap();
    let one = transport_module(&mut cc, &ac).unwrap();
    assert_eq!(module_of(&mut c2.tgt, &two).unwrap(), module_of(&mut cc.tgt, &one).unwrap());
}
