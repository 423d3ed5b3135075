//! Recovering a bialgebroid from a presented bimonad.
//!
//! With `ρ_A: T(E) → A`, `[a ⊗ e] ↦ a·e`, the comultiplication is
//! `(ρ_A ⊗ ρ_A) ∘ γ_{E,E} ∘ T(Δ_E) ∘ ρ_A⁻¹` and the counit is
//! `π ∘ T(ε_E) ∘ ρ_A⁻¹`, where `Δ_E`, `ε_E` belong to the trivial
//! bialgebroid. Source and target are `s(r) = 1·(r⊗1)`, `t(r) = 1·(1⊗r)`.

use super::{BimonadCtx, BimonadPresentation};
use crate::bialgebroid::{check_bgd, trivial_bialgebroid, BialgebroidData};
use crate::bimod::induce;
use crate::exactla::{inverse, Matrix, Scalar};
use crate::{Error, Result};

/// Which diagram a bialgebroid axiom is derived from when the data comes
/// from a bimonad.
fn source_diagram(axiom: &str) -> &'static str {
    match axiom {
        "comonoid-coassoc" => "gamma-coassoc",
        "comonoid-counit" => "pi-counit-left/right",
        "comul-multiplicative" => "mu-comonoidal",
        "comul-unital" => "eta-comonoidal",
        "counit-unital" => "eta-counit",
        "counit-compatible" => "mu-counit",
        "takeuchi-image" => "takeuchi-coproduct precondition",
        _ => "structure of the kernel",
    }
}

/// The two compatibilities the kernel maps must satisfy for γ and π to be
/// well defined: `a₁·t(r) ⊗ a₂ = a₁ ⊗ a₂·s(r)` and `ε(a·t(r)) = ε(a·s(r))`.
pub fn check_preconditions(p: &BimonadPresentation) -> Result<()> {
    let mut c = BimonadCtx::new(p.clone())?;
    let a = c.a_obj;
    let aa = c.cat.tensor_data(a, a)?;
    let field = p.field();
    let ia = Matrix::identity(field, p.a.dim());
    for i in 0..p.base.dim_r() {
        let rt = p.right_of(&p.base.t_e_basis(i));
        let rs = p.right_of(&p.base.s_e_basis(i));
        let lift = aa.proj().mul(&rt.kron(&ia).sub(&ia.kron(&rs))?)?;
        let op = induce(&lift, &aa.quotient, "right action on A⊗_R A")?;
        let img = op.mul(&p.coprod)?;
        if let Some(j) = (0..p.a.dim()).find(|&j| img.column(j).iter().any(|x| !x.is_zero())) {
            return Err(Error::Precondition {
                equation: "takeuchi-coproduct".into(),
                witness: format!("r = e{i}, a = e{j}"),
            });
        }
        let diff = p.counit.mul(&rt.sub(&rs)?)?;
        if let Some(j) = (0..p.a.dim()).find(|&j| diff.column(j).iter().any(|x| !x.is_zero())) {
            return Err(Error::Precondition {
                equation: "takeuchi-counit".into(),
                witness: format!("r = e{i}, a = e{j}"),
            });
        }
    }
    Ok(())
}

pub fn extract_bialgebroid(p: &BimonadPresentation) -> Result<BialgebroidData> {
    check_preconditions(p)?;
    let field = p.field();
    let mut c = BimonadCtx::new(p.clone())?;
    let (na, ne, nr) = (p.a.dim(), p.base.dim_e(), p.base.dim_r());
    let e = c.e_obj();
    let r = c.unit();
    let a = c.a_obj;
    let te = c.t_data(e)?;

    let mut cols = vec![Vec::new(); na * ne];
    for b in 0..ne {
        for x in 0..na {
            cols[x * ne + b] = p.right[b].column(x);
        }
    }
    let rho = induce(&Matrix::from_columns(field, na, &cols)?, &te.quotient, "ρ_A")?;
    let rho_inv = inverse(&rho)?;

    let triv = trivial_bialgebroid(&p.base.r)?;
    let ee = c.tensor(e, e)?;
    let t_delta = c.t_map(e, ee, &triv.comul)?;
    let gamma = c.gamma(e, e)?;
    let rho_rho = c.cat.tensor_map((te.object, a, &rho), (te.object, a, &rho))?;
    let comul = rho_rho.mul(&gamma)?.mul(&t_delta)?.mul(&rho_inv)?;
    let t_eps = c.t_map(e, r, &triv.counit)?;
    let counit = c.pi()?.mul(&t_eps)?.mul(&rho_inv)?;

    let one = p.a.unit();
    let col = |v: Vec<Scalar>| -> Result<Vec<Scalar>> { p.right_of(&v).apply(one) };
    let s_cols = (0..nr).map(|i| col(p.base.s_e_basis(i))).collect::<Result<Vec<_>>>()?;
    let t_cols = (0..nr).map(|i| col(p.base.t_e_basis(i))).collect::<Result<Vec<_>>>()?;
    let s = Matrix::from_columns(field, na, &s_cols)?;
    let t = Matrix::from_columns(field, na, &t_cols)?;

    let data = BialgebroidData::new(p.base.clone(), p.a.clone(), s, t, comul, counit)?;
    let rep = check_bgd(&data);
    if !rep.passed() {
        let detail: Vec<String> =
            rep.failed_names().iter().map(|n| format!("{n} (from {})", source_diagram(n))).collect();
        return Err(Error::Precondition {
            equation: "extracted bialgebroid axioms".into(),
            witness: detail.join(", "),
        });
    }
    Ok(data)
}
