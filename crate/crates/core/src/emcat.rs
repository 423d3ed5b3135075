//! The Eilenberg-Moore category of a presented bimonad: T-algebras `⟨x, α⟩`,
//! their monoidal product `⟨x⊗y, (α⊗β)∘γ⟩`, free algebras, the comparison
//! functor from A-modules, and transport along monad morphisms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bimod::{Module, ObjId};
use crate::bimonad::{BimonadCtx, MorphismCtx};
use crate::exactla::{inverse, kernel, unit_vector, Matrix, Subspace};
use crate::report::{Check, Report};
use crate::{Error, Result};

/// A T-algebra inside a [`BimonadCtx`]: `action: T(x) → x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TAlgebra {
    pub x: ObjId,
    pub action: Matrix,
}

impl TAlgebra {
    /// Validates that `action` is a bimodule map satisfying both T-algebra laws.
    pub fn new(c: &mut BimonadCtx, x: ObjId, action: Matrix) -> Result<Self> {
        let tx = c.t(x)?;
        if !c.cat.is_map(tx, x, &action) {
            return Err(Error::NotModuleMap(format!("action on {} is not a bimodule map", c.cat.label(x))));
        }
        let a = TAlgebra { x, action };
        let rep = check_t_algebra(c, &a);
        if !rep.passed() {
            return Err(Error::InvalidAlgebra(format!("T-algebra laws fail: {}", rep.failed_names().join(", "))));
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.action.rows()
    }
}

/// `α ∘ μ_x = α ∘ T(α)` and `α ∘ η_x = id`.
pub fn check_t_algebra(c: &mut BimonadCtx, a: &TAlgebra) -> Report {
    let o = vec![c.cat.label(a.x).to_string()];
    let mut rep = Report::new();
    let assoc = (|| {
        let tx = c.t(a.x)?;
        Ok((a.action.mul(&c.mu(a.x)?)?, a.action.mul(&c.t_map(tx, a.x, &a.action)?)?))
    })();
    rep.push(Check::from_result("talg-assoc", &o, assoc));
    let unit = (|| Ok((a.action.mul(&c.eta(a.x)?)?, c.cat.identity(a.x))))();
    rep.push(Check::from_result("talg-unit", &o, unit));
    rep
}

/// `f` is a bimodule map with `β ∘ T(f) = f ∘ α`.
pub fn check_t_algebra_map(c: &mut BimonadCtx, name: &str, a: &TAlgebra, b: &TAlgebra, f: &Matrix) -> Check {
    let o = vec![c.cat.label(a.x).to_string(), c.cat.label(b.x).to_string()];
    if !c.cat.is_map(a.x, b.x, f) {
        return Check::fail(name, &o, "not a bimodule map");
    }
    let sides = (|| Ok((b.action.mul(&c.t_map(a.x, b.x, f)?)?, f.mul(&a.action)?)))();
    Check::from_result(name, &o, sides)
}

/// `⟨x⊗y, (α⊗β) ∘ γ_{x,y}⟩`, re-verified.
pub fn em_tensor(c: &mut BimonadCtx, a: &TAlgebra, b: &TAlgebra) -> Result<TAlgebra> {
    let xy = c.tensor(a.x, b.x)?;
    let (tx, ty) = (c.t(a.x)?, c.t(b.x)?);
    let ab = c.cat.tensor_map((tx, a.x, &a.action), (ty, b.x, &b.action))?;
    let action = ab.mul(&c.gamma(a.x, b.x)?)?;
    TAlgebra::new(c, xy, action)
}

/// The monoidal unit `⟨R, π⟩`.
pub fn em_unit(c: &mut BimonadCtx) -> Result<TAlgebra> {
    let r = c.unit();
    let pi = c.pi()?;
    TAlgebra::new(c, r, pi)
}

/// `⟨Tx, μ_x⟩`.
pub fn free_algebra(c: &mut BimonadCtx, x: ObjId) -> Result<TAlgebra> {
    let tx = c.t(x)?;
    let mu = c.mu(x)?;
    TAlgebra::new(c, tx, mu)
}

/// Triangle identities of the free/forgetful adjunction at `a`: `α` is a
/// T-algebra map `⟨Tx, μ⟩ → ⟨x, α⟩`, `α ∘ η_x = id`, and `μ_x ∘ T(η_x) = id`.
pub fn check_free_adjunction(c: &mut BimonadCtx, a: &TAlgebra) -> Report {
    let o = vec![c.cat.label(a.x).to_string()];
    let mut rep = Report::new();
    match free_algebra(c, a.x) {
        Ok(f) => rep.push(check_t_algebra_map(c, "free-counit-map", &f, a, &a.action)),
        Err(e) => rep.push(Check::fail("free-counit-map", &o, e.to_string())),
    }
    let unit = (|| Ok((a.action.mul(&c.eta(a.x)?)?, c.cat.identity(a.x))))();
    rep.push(Check::from_result("free-triangle-forgetful", &o, unit));
    let free = (|| {
        let tx = c.t(a.x)?;
        let eta = c.eta(a.x)?;
        Ok((c.mu(a.x)?.mul(&c.t_map(a.x, tx, &eta)?)?, c.cat.identity(tx)))
    })();
    rep.push(Check::from_result("free-triangle-free", &o, free));
    rep
}

/// The underlying bimodule of an A-module, R acting through `s` and `t`.
pub fn underlying(c: &mut BimonadCtx, m: &Module, label: &str) -> Result<ObjId> {
    if m.base() != &c.pres.a {
        return Err(Error::BaseMismatch("module is not over the kernel algebra".into()));
    }
    let one = c.pres.a.unit().to_vec();
    let action = c.pres.left.iter().map(|l| Ok(m.act(&l.apply(&one)?))).collect::<Result<Vec<_>>>()?;
    let u = Module::new(c.pres.base.e.clone(), m.dim(), action)?;
    Ok(c.cat.intern(u, label))
}

/// `K(M) = ⟨UM, [a ⊗ m] ↦ a·m⟩`.
pub fn comparison_functor(c: &mut BimonadCtx, m: &Module, label: &str) -> Result<TAlgebra> {
    let x = underlying(c, m, label)?;
    let action = module_counit(c, m, x)?;
    TAlgebra::new(c, x, action)
}

/// `T(UM) → UM`, `[a ⊗ m] ↦ a·m`.
pub fn module_counit(c: &mut BimonadCtx, m: &Module, x: ObjId) -> Result<Matrix> {
    let tx = c.t_data(x)?;
    let (na, dm) = (c.dim_a(), m.dim());
    let mut cols = vec![Vec::new(); na * dm];
    for a in 0..na {
        for j in 0..dm {
            cols[a * dm + j] = m.action()[a].column(j);
        }
    }
    crate::bimod::induce(&Matrix::from_columns(c.field(), dm, &cols)?, &tx.quotient, "action of an A-module")
}

/// The inverse of K: `a·m = α([a ⊗ m])`.
pub fn module_of(c: &mut BimonadCtx, a: &TAlgebra) -> Result<Module> {
    let field = c.field();
    let tx = c.t_data(a.x)?;
    let (na, dx) = (c.dim_a(), c.cat.dim(a.x));
    let ix = Matrix::identity(field, dx);
    let action = (0..na)
        .map(|i| {
            let ei = Matrix::column_vector(&unit_vector(field, na, i), field);
            a.action.mul(tx.proj())?.mul(&ei.kron(&ix))
        })
        .collect::<Result<Vec<_>>>()?;
    Module::new(c.pres.a.clone(), dx, action)
}

/// Picks a random element of the solution space and keeps it if invertible.
fn invertible_in(space: &Subspace, rows: usize, cols: usize, seed: u64) -> Result<Option<Matrix>> {
    let field = space.field();
    if rows != cols {
        return Ok(None);
    }
    if rows == 0 {
        return Ok(Some(Matrix::zeros(field, 0, 0)));
    }
    if space.dim() == 0 {
        return Ok(None);
    }
    let basis = space.basis();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..16 {
        let mut v = vec![field.zero(); space.ambient_dim()];
        for i in 0..basis.rows() {
            let coef = field.int(rng.gen_range(-50..=50));
            for (j, x) in basis.row(i) {
                v[*j] = &v[*j] + &(&coef * x);
            }
        }
        let m = Matrix::from_vectorized(field, rows, cols, &v)?;
        if let Ok(inv) = inverse(&m) {
            debug_assert!(m.mul(&inv)?.is_identity());
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Solves for T-algebra maps `a → b` and returns an invertible one if a random
/// specialization of the general solution is invertible.
pub fn find_isomorphism(c: &mut BimonadCtx, a: &TAlgebra, b: &TAlgebra, seed: u64) -> Result<Option<Matrix>> {
    let (dx, dy) = (c.cat.dim(a.x), c.cat.dim(b.x));
    if dx != dy {
        return Ok(None);
    }
    let field = c.field();
    let (ix, iy) = (Matrix::identity(field, dx), Matrix::identity(field, dy));
    let mut blocks = Vec::new();
    for (rx, ry) in c.cat.module(a.x).action().iter().zip(c.cat.module(b.x).action()) {
        blocks.push(Matrix::sandwich(&iy, rx).sub(&Matrix::sandwich(ry, &ix))?);
    }
    blocks.push(c.t_map_coefficients(a.x, b.x, &b.action)?.sub(&Matrix::sandwich(&iy, &a.action))?);
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let system = Matrix::vstack(field, dy * dx, &refs)?;
    let found = invertible_in(&kernel(&system), dy, dx, seed)?;
    if let Some(f) = &found {
        if !check_t_algebra_map(c, "iso", a, b, f).passed() {
            return Err(Error::IllDefined { context: "intertwiner solution fails verification".into() });
        }
    }
    Ok(found)
}

/// Isomorphism of A-modules by the same method.
pub fn find_module_isomorphism(m: &Module, n: &Module, seed: u64) -> Result<Option<Matrix>> {
    if m.dim() != n.dim() || m.base() != n.base() {
        return Ok(None);
    }
    let field = m.field();
    let d = m.dim();
    let id = Matrix::identity(field, d);
    let blocks = m
        .action()
        .iter()
        .zip(n.action())
        .map(|(a, b)| Matrix::sandwich(&id, a).sub(&Matrix::sandwich(b, &id)))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let system = Matrix::vstack(field, d * d, &refs)?;
    let found = invertible_in(&kernel(&system), d, d, seed)?;
    if let Some(f) = &found {
        if !m.is_map_to(n, f) {
            return Err(Error::IllDefined { context: "module intertwiner fails verification".into() });
        }
    }
    Ok(found)
}

/// Associator and both unitors of the bimodule category are T-algebra maps
/// between the corresponding products.
pub fn check_coherence_lifts(c: &mut BimonadCtx, a: &TAlgebra, b: &TAlgebra, d: &TAlgebra) -> Report {
    let mut rep = Report::new();
    let assoc = (|| -> Result<Check> {
        let bd = em_tensor(c, b, d)?;
        let left = em_tensor(c, a, &bd)?;
        let ab = em_tensor(c, a, b)?;
        let right = em_tensor(c, &ab, d)?;
        let m = c.cat.assoc(a.x, b.x, d.x)?;
        Ok(check_t_algebra_map(c, "lift-associator", &left, &right, &m))
    })();
    rep.push(assoc.unwrap_or_else(|e| Check::fail("lift-associator", &[], e.to_string())));
    let left = (|| -> Result<Check> {
        let u = em_unit(c)?;
        let ua = em_tensor(c, &u, a)?;
        let l = c.cat.left_unitor(a.x)?;
        Ok(check_t_algebra_map(c, "lift-left-unitor", &ua, a, &l))
    })();
    rep.push(left.unwrap_or_else(|e| Check::fail("lift-left-unitor", &[], e.to_string())));
    let right = (|| -> Result<Check> {
        let u = em_unit(c)?;
        let au = em_tensor(c, a, &u)?;
        let r = c.cat.right_unitor(a.x)?;
        Ok(check_t_algebra_map(c, "lift-right-unitor", &au, a, &r))
    })();
    rep.push(right.unwrap_or_else(|e| Check::fail("lift-right-unitor", &[], e.to_string())));
    rep
}

/// For a catalogue of A-modules: `K⁻¹ K = id` on each, `K K⁻¹ = id` on the
/// images, and `M ≅ N` exactly when `K(M) ≅ K(N)`.
pub fn check_comparison_catalogue(c: &mut BimonadCtx, modules: &[(String, Module)], seed: u64) -> Report {
    let mut rep = Report::new();
    let mut images = Vec::new();
    for (name, m) in modules {
        let o = vec![name.clone()];
        match comparison_functor(c, m, name) {
            Ok(k) => {
                let back = module_of(c, &k);
                rep.push(Check::from_bool(
                    "comparison-roundtrip",
                    &o,
                    back.as_ref() == Ok(m),
                    "K⁻¹K(M) differs from M",
                ));
                images.push(Some(k));
            }
            Err(e) => {
                rep.push(Check::fail("comparison-roundtrip", &o, e.to_string()));
                images.push(None);
            }
        }
    }
    for i in 0..modules.len() {
        for j in i + 1..modules.len() {
            let o = vec![modules[i].0.clone(), modules[j].0.clone()];
            let (Some(ki), Some(kj)) = (&images[i], &images[j]) else { continue };
            let res = (|| -> Result<bool> {
                let mods = find_module_isomorphism(&modules[i].1, &modules[j].1, seed)?.is_some();
                let algs = find_isomorphism(c, ki, kj, seed)?.is_some();
                Ok(mods == algs)
            })();
            rep.push(match res {
                Ok(ok) => Check::from_bool("comparison-reflects-iso", &o, ok, "isomorphism classes differ"),
                Err(e) => Check::fail("comparison-reflects-iso", &o, e.to_string()),
            });
        }
    }
    rep
}

/// `⟨x, α⟩ ↦ ⟨Gx, Gα ∘ φ_x⟩` for a T_A-algebra over the source of the
/// morphism, giving a T_B-algebra.
pub fn transport_module(mc: &mut MorphismCtx, a: &TAlgebra) -> Result<TAlgebra> {
    let gx = mc.g_obj(a.x)?;
    let action = mc.g_map(&a.action).mul(&mc.phi_at(a.x)?)?;
    TAlgebra::new(&mut mc.tgt, gx, action)
}

/// `G_2: G^φ(a) ⊗ G^φ(b) → G^φ(a ⊗ b)` is a T_B-algebra map.
pub fn check_transport_monoidal(mc: &mut MorphismCtx, a: &TAlgebra, b: &TAlgebra) -> Check {
    let res = (|| -> Result<Check> {
        let ta = transport_module(mc, a)?;
        let tb = transport_module(mc, b)?;
        let lhs = em_tensor(&mut mc.tgt, &ta, &tb)?;
        let ab = em_tensor(&mut mc.src, a, b)?;
        let rhs = transport_module(mc, &ab)?;
        let g2 = mc.g2(a.x, b.x)?;
        Ok(check_t_algebra_map(&mut mc.tgt, "transport-monoidal", &lhs, &rhs, &g2))
    })();
    res.unwrap_or_else(|e| Check::fail("transport-monoidal", &[], e.to_string()))
}
