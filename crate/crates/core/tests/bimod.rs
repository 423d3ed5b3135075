use bimonad::algebra::FDAlgebra;
use bimonad::bimod::{BaseRing, BimodCat, Module, ObjId};
use bimonad::exactla::{inverse, kernel, Field, Matrix};
use proptest::prelude::*;

fn q() -> Field {
    Field::Rationals
}

/// Base algebra, its characters, and whether E itself is cheap enough to tensor.
fn base(i: usize) -> (FDAlgebra, Vec<Vec<i64>>, bool) {
    match i {
        0 => (FDAlgebra::ground(q()), vec![vec![1]], true),
        1 => (FDAlgebra::product_of_fields(q(), 2), vec![vec![1, 0], vec![0, 1]], true),
        2 => (FDAlgebra::cyclic_group(q(), 2), vec![vec![1, 1], vec![1, -1]], true),
        _ => (FDAlgebra::upper_triangular(q()), vec![vec![1, 0, 0], vec![0, 0, 1]], false),
    }
}

/// k with `r ⊗ r'` acting by `χ(r) χ'(r')`.
fn character_bimodule(b: &BaseRing, left: &[i64], right: &[i64]) -> Module {
    let action = left
        .iter()
        .flat_map(|l| right.iter().map(move |r| Matrix::from_rows(q(), 1, vec![vec![q().int(l * r)]]).unwrap()))
        .collect();
    Module::new(b.e.clone(), 1, action).unwrap()
}

struct Pool {
    cat: BimodCat,
    objects: Vec<ObjId>,
}

fn pool(i: usize) -> Pool {
    let (r, chars, with_e) = base(i);
    let b = BaseRing::new(r);
    let mut cat = BimodCat::new(b.clone());
    let mut objects = vec![cat.unit()];
    if with_e {
        objects.push(cat.add(b.regular_e(), "E").unwrap());
    }
    for (n, l) in chars.iter().enumerate() {
        for (m, rt) in chars.iter().enumerate() {
            objects.push(cat.add(character_bimodule(&b, l, rt), &format!("k{n}{m}")).unwrap());
        }
    }
    Pool { cat, objects }
}

impl Pool {
    fn pick(&self, k: usize) -> ObjId {
        self.objects[k % self.objects.len()]
    }

    /// A bimodule map `x → y` built from the Hom kernel with integer weights.
    fn map(&self, x: ObjId, y: ObjId, weights: &[i64]) -> Matrix {
        let (mx, my) = (self.cat.module(x), self.cat.module(y));
        let (dx, dy) = (mx.dim(), my.dim());
        let blocks: Vec<Matrix> = mx
            .action()
            .iter()
            .zip(my.action())
            .map(|(rx, ry)| {
                ry.kron(&Matrix::identity(q(), dx)).sub(&Matrix::identity(q(), dy).kron(&rx.transpose())).unwrap()
            })
            .collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let hom = kernel(&Matrix::vstack(q(), dx * dy, &refs).unwrap());
        let basis = hom.basis();
        let mut v = vec![q().zero(); dx * dy];
        for k in 0..hom.dim() {
            let w = q().int(weights[k % weights.len()]);
            for (j, c) in basis.row(k) {
                v[*j] = &v[*j] + &(&w * c);
            }
        }
        let f = Matrix::from_vectorized(q(), dy, dx, &v).unwrap();
        assert!(self.cat.is_map(x, y, &f));
        f
    }
}

fn weights() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-2i64..=2, 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pentagon(b in 0usize..4, ix in proptest::collection::vec(0usize..8, 4)) {
        let mut p = pool(b);
        let [x, y, z, w] = [p.pick(ix[0]), p.pick(ix[1]), p.pick(ix[2]), p.pick(ix[3])];
        let c = &mut p.cat;
        let xy = c.tensor(x, y).unwrap();
        let yz = c.tensor(y, z).unwrap();
        let zw = c.tensor(z, w).unwrap();
        let top = c.assoc(xy, z, w).unwrap().mul(&c.assoc(x, y, zw).unwrap()).unwrap();
        let yz_w = c.tensor(yz, w).unwrap();
        let y_zw = c.tensor(y, zw).unwrap();
        let (ix_, iw) = (c.identity(x), c.identity(w));
        let xyz = c.tensor(x, yz).unwrap();
        let xy_z = c.tensor(xy, z).unwrap();
        let a_yzw = c.assoc(y, z, w).unwrap();
        let a_xyz = c.assoc(x, y, z).unwrap();
        let first = c.tensor_map((x, x, &ix_), (y_zw, yz_w, &a_yzw)).unwrap();
        let middle = c.assoc(x, yz, w).unwrap();
        let last = c.tensor_map((xyz, xy_z, &a_xyz), (w, w, &iw)).unwrap();
        let bottom = last.mul(&middle).unwrap().mul(&first).unwrap();
        prop_assert_eq!(top, bottom);
    }

    #[test]
    fn triangle(b in 0usize..4, ix in proptest::collection::vec(0usize..8, 2)) {
        let mut p = pool(b);
        let (x, y) = (p.pick(ix[0]), p.pick(ix[1]));
        let c = &mut p.cat;
        let r = c.unit();
        let (id_x, id_y) = (c.identity(x), c.identity(y));
        let xr = c.tensor(x, r).unwrap();
        let ry = c.tensor(r, y).unwrap();
        let rho = c.right_unitor(x).unwrap();
        let lam = c.left_unitor(y).unwrap();
        let lhs = c.tensor_map((xr, x, &rho), (y, y, &id_y)).unwrap().mul(&c.assoc(x, r, y).unwrap()).unwrap();
        let rhs = c.tensor_map((x, x, &id_x), (ry, y, &lam)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coherence_maps_are_invertible_module_maps(b in 0usize..4, ix in proptest::collection::vec(0usize..8, 3)) {
        let mut p = pool(b);
        let (x, y, z) = (p.pick(ix[0]), p.pick(ix[1]), p.pick(ix[2]));
        let c = &mut p.cat;
        let a = c.assoc(x, y, z).unwrap();
        let ai = c.assoc_inv(x, y, z).unwrap();
        prop_assert!(a.mul(&ai).unwrap().is_identity());
        prop_assert!(ai.mul(&a).unwrap().is_identity());
        let yz = c.tensor(y, z).unwrap();
        let xy = c.tensor(x, y).unwrap();
        let x_yz = c.tensor(x, yz).unwrap();
        let xy_z = c.tensor(xy, z).unwrap();
        prop_assert!(c.is_map(x_yz, xy_z, &a));
        let r = c.unit();
        let (rx, xr) = (c.tensor(r, x).unwrap(), c.tensor(x, r).unwrap());
        let (l, rr) = (c.left_unitor(x).unwrap(), c.right_unitor(x).unwrap());
        prop_assert!(c.is_map(rx, x, &l) && c.is_map(xr, x, &rr));
        prop_assert!(inverse(&l).is_ok() && inverse(&rr).is_ok());
    }

    #[test]
    fn associator_is_natural(
        b in 0usize..4,
        ix in proptest::collection::vec(0usize..8, 6),
        ws in proptest::collection::vec(weights(), 3),
    ) {
        let mut p = pool(b);
        let o: Vec<ObjId> = ix.iter().map(|&k| p.pick(k)).collect();
        let (x, y, z, x2, y2, z2) = (o[0], o[1], o[2], o[3], o[4], o[5]);
        let (f, g, h) = (p.map(x, x2, &ws[0]), p.map(y, y2, &ws[1]), p.map(z, z2, &ws[2]));
        let c = &mut p.cat;
        let yz = c.tensor(y, z).unwrap();
        let yz2 = c.tensor(y2, z2).unwrap();
        let gh = c.tensor_map((y, y2, &g), (z, z2, &h)).unwrap();
        let f_gh = c.tensor_map((x, x2, &f), (yz, yz2, &gh)).unwrap();
        let xy = c.tensor(x, y).unwrap();
        let xy2 = c.tensor(x2, y2).unwrap();
        let fg = c.tensor_map((x, x2, &f), (y, y2, &g)).unwrap();
        let fg_h = c.tensor_map((xy, xy2, &fg), (z, z2, &h)).unwrap();
        let lhs = c.assoc(x2, y2, z2).unwrap().mul(&f_gh).unwrap();
        let rhs = fg_h.mul(&c.assoc(x, y, z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unitors_are_natural(b in 0usize..4, ix in proptest::collection::vec(0usize..8, 2), ws in weights()) {
        let mut p = pool(b);
        let (x, y) = (p.pick(ix[0]), p.pick(ix[1]));
        let f = p.map(x, y, &ws);
        let c = &mut p.cat;
        let r = c.unit();
        let id_r = c.identity(r);
        let lf = c.tensor_map((r, r, &id_r), (x, y, &f)).unwrap();
        prop_assert_eq!(f.mul(&c.left_unitor(x).unwrap()).unwrap(), c.left_unitor(y).unwrap().mul(&lf).unwrap());
        let rf = c.tensor_map((x, y, &f), (r, r, &id_r)).unwrap();
        prop_assert_eq!(f.mul(&c.right_unitor(x).unwrap()).unwrap(), c.right_unitor(y).unwrap().mul(&rf).unwrap());
    }

    #[test]
    fn tensor_of_maps_is_functorial(
        b in 0usize..4,
        ix in proptest::collection::vec(0usize..8, 6),
        ws in proptest::collection::vec(weights(), 4),
    ) {
        let mut p = pool(b);
        let o: Vec<ObjId> = ix.iter().map(|&k| p.pick(k)).collect();
        let (x, x2, x3, y, y2, y3) = (o[0], o[1], o[2], o[3], o[4], o[5]);
        let (f, f2) = (p.map(x, x2, &ws[0]), p.map(x2, x3, &ws[1]));
        let (g, g2) = (p.map(y, y2, &ws[2]), p.map(y2, y3, &ws[3]));
        let c = &mut p.cat;
        let first = c.tensor_map((x, x2, &f), (y, y2, &g)).unwrap();
        let second = c.tensor_map((x2, x3, &f2), (y2, y3, &g2)).unwrap();
        let both = c.tensor_map((x, x3, &f2.mul(&f).unwrap()), (y, y3, &g2.mul(&g).unwrap())).unwrap();
        prop_assert_eq!(second.mul(&first).unwrap(), both);
        let (ix_, iy) = (c.identity(x), c.identity(y));
        prop_assert!(c.tensor_map((x, x, &ix_), (y, y, &iy)).unwrap().is_identity());
    }
}

#[test]
fn regular_bimodule_tensor_dimensions() {
    // E ⊗_R E = R ⊗ R ⊗ R as a vector space
    for i in 0..3 {
        let mut p = pool(i);
        let e = p.objects[1];
        let n = p.cat.base().dim_r();
        let ee = p.cat.tensor(e, e).unwrap();
        assert_eq!(p.cat.dim(ee), n * n * n);
        let r = p.cat.unit();
        let re = p.cat.tensor(r, e).unwrap();
        assert_eq!(p.cat.dim(re), n * n);
    }
}

#[test]
fn characters_tensor_through_the_middle() {
    // k_{χψ} ⊗ k_{χ'ψ'} is k if ψ = χ' and 0 otherwise
    for i in 1..4 {
        let (_, chars, _) = base(i);
        let p = pool(i);
        let mut cat = p.cat;
        let b = cat.base().clone();
        for (a, l) in chars.iter().enumerate() {
            for (m, mid) in chars.iter().enumerate() {
                for (n, mid2) in chars.iter().enumerate() {
                    let x = cat.add(character_bimodule(&b, l, mid), "x").unwrap();
                    let y = cat.add(character_bimodule(&b, mid2, l), "y").unwrap();
                    let xy = cat.tensor(x, y).unwrap();
                    assert_eq!(cat.dim(xy), usize::from(m == n), "base {i}: {a}{m} ⊗ {n}{a}");
                }
            }
        }
    }
}

#[test]
fn modules_over_the_wrong_base_are_rejected() {
    let mut p = pool(1);
    let g = FDAlgebra::cyclic_group(q(), 2);
    assert!(p.cat.add(Module::regular(&g), "g").is_err());
}
