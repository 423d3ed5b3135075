//! The ten bimonad diagrams, with associators and unitors inserted.

use super::BimonadCtx;
use crate::bimod::ObjId;
use crate::exactla::Matrix;
use crate::report::{Check, Report};
use crate::Result;

/// Diagram names in report order.
pub const DIAGRAMS: [&str; 10] = [
    "gamma-coassoc",
    "pi-counit-left",
    "pi-counit-right",
    "mu-comonoidal",
    "mu-counit",
    "eta-comonoidal",
    "eta-counit",
    "mu-assoc",
    "eta-unit-left",
    "eta-unit-right",
];

type Sides = Result<(Matrix, Matrix)>;

/// `a ∘ (Tx ⊗ γ_{y,z}) ∘ γ_{x,y⊗z} = (γ_{x,y} ⊗ Tz) ∘ γ_{x⊗y,z} ∘ T(a)`.
fn gamma_coassoc(c: &mut BimonadCtx, x: ObjId, y: ObjId, z: ObjId) -> Sides {
    let yz = c.tensor(y, z)?;
    let xy = c.tensor(x, y)?;
    let x_yz = c.tensor(x, yz)?;
    let xy_z = c.tensor(xy, z)?;
    let (tx, ty, tz) = (c.t(x)?, c.t(y)?, c.t(z)?);
    let t_yz = c.t(yz)?;
    let t_xy = c.t(xy)?;
    let tytz = c.tensor(ty, tz)?;
    let txty = c.tensor(tx, ty)?;
    let id_tx = c.cat.identity(tx);
    let id_tz = c.cat.identity(tz);
    let g_yz = c.gamma(y, z)?;
    let g_xy = c.gamma(x, y)?;
    let lhs = c
        .cat
        .assoc(tx, ty, tz)?
        .mul(&c.cat.tensor_map((tx, tx, &id_tx), (t_yz, tytz, &g_yz))?)?
        .mul(&c.gamma(x, yz)?)?;
    let assoc = c.cat.assoc(x, y, z)?;
    let rhs = c
        .cat
        .tensor_map((t_xy, txty, &g_xy), (tz, tz, &id_tz))?
        .mul(&c.gamma(xy, z)?)?
        .mul(&c.t_map(x_yz, xy_z, &assoc)?)?;
    Ok((lhs, rhs))
}

/// `l_{Tx} ∘ (π ⊗ Tx) ∘ γ_{R,x} = T(l_x)`.
fn pi_counit_left(c: &mut BimonadCtx, x: ObjId) -> Sides {
    let r = c.unit();
    let tr = c.t(r)?;
    let tx = c.t(x)?;
    let rx = c.tensor(r, x)?;
    let pi = c.pi()?;
    let id_tx = c.cat.identity(tx);
    let lhs = c.cat.left_unitor(tx)?.mul(&c.cat.tensor_map((tr, r, &pi), (tx, tx, &id_tx))?)?.mul(&c.gamma(r, x)?)?;
    let l = c.cat.left_unitor(x)?;
    let rhs = c.t_map(rx, x, &l)?;
    Ok((lhs, rhs))
}

/// `r_{Tx} ∘ (Tx ⊗ π) ∘ γ_{x,R} = T(r_x)`.
fn pi_counit_right(c: &mut BimonadCtx, x: ObjId) -> Sides {
    let r = c.unit();
    let tr = c.t(r)?;
    let tx = c.t(x)?;
    let xr = c.tensor(x, r)?;
    let pi = c.pi()?;
    let id_tx = c.cat.identity(tx);
    let lhs = c.cat.right_unitor(tx)?.mul(&c.cat.tensor_map((tx, tx, &id_tx), (tr, r, &pi))?)?.mul(&c.gamma(x, r)?)?;
    let ru = c.cat.right_unitor(x)?;
    let rhs = c.t_map(xr, x, &ru)?;
    Ok((lhs, rhs))
}

/// `γ_{x,y} ∘ μ_{x⊗y} = (μ_x ⊗ μ_y) ∘ γ_{Tx,Ty} ∘ T(γ_{x,y})`.
fn mu_comonoidal(c: &mut BimonadCtx, x: ObjId, y: ObjId) -> Sides {
    let xy = c.tensor(x, y)?;
    let (tx, ty) = (c.t(x)?, c.t(y)?);
    let (ttx, tty) = (c.t(tx)?, c.t(ty)?);
    let txy = c.t(xy)?;
    let txty = c.tensor(tx, ty)?;
    let g = c.gamma(x, y)?;
    let lhs = g.mul(&c.mu(xy)?)?;
    let mu_x = c.mu(x)?;
    let mu_y = c.mu(y)?;
    let rhs =
        c.cat.tensor_map((ttx, tx, &mu_x), (tty, ty, &mu_y))?.mul(&c.gamma(tx, ty)?)?.mul(&c.t_map(txy, txty, &g)?)?;
    Ok((lhs, rhs))
}

/// `π ∘ T(π) = π ∘ μ_R`.
fn mu_counit(c: &mut BimonadCtx) -> Sides {
    let r = c.unit();
    let tr = c.t(r)?;
    let pi = c.pi()?;
    let lhs = pi.mul(&c.t_map(tr, r, &pi)?)?;
    let rhs = pi.mul(&c.mu(r)?)?;
    Ok((lhs, rhs))
}

/// `γ_{x,y} ∘ η_{x⊗y} = η_x ⊗ η_y`.
fn eta_comonoidal(c: &mut BimonadCtx, x: ObjId, y: ObjId) -> Sides {
    let xy = c.tensor(x, y)?;
    let (tx, ty) = (c.t(x)?, c.t(y)?);
    let lhs = c.gamma(x, y)?.mul(&c.eta(xy)?)?;
    let ex = c.eta(x)?;
    let ey = c.eta(y)?;
    let rhs = c.cat.tensor_map((x, tx, &ex), (y, ty, &ey))?;
    Ok((lhs, rhs))
}

/// `π ∘ η_R = id_R`.
fn eta_counit(c: &mut BimonadCtx) -> Sides {
    let r = c.unit();
    Ok((c.pi()?.mul(&c.eta(r)?)?, c.cat.identity(r)))
}

/// `μ_x ∘ T(μ_x) = μ_x ∘ μ_{Tx}`.
fn mu_assoc(c: &mut BimonadCtx, x: ObjId) -> Sides {
    let tx = c.t(x)?;
    let ttx = c.t(tx)?;
    let mu = c.mu(x)?;
    let lhs = mu.mul(&c.t_map(ttx, tx, &mu)?)?;
    let rhs = mu.mul(&c.mu(tx)?)?;
    Ok((lhs, rhs))
}

/// `μ_x ∘ η_{Tx} = id`.
fn eta_unit_left(c: &mut BimonadCtx, x: ObjId) -> Sides {
    let tx = c.t(x)?;
    Ok((c.mu(x)?.mul(&c.eta(tx)?)?, c.cat.identity(tx)))
}

/// `μ_x ∘ T(η_x) = id`.
fn eta_unit_right(c: &mut BimonadCtx, x: ObjId) -> Sides {
    let tx = c.t(x)?;
    let eta = c.eta(x)?;
    Ok((c.mu(x)?.mul(&c.t_map(x, tx, &eta)?)?, c.cat.identity(tx)))
}

/// Evaluates all ten diagrams: triples for coassociativity, pairs for the
/// comonoidality of μ and η, single objects for the rest, and the two
/// unit-object diagrams once.
pub fn check_bmd(c: &mut BimonadCtx, tests: &[(String, ObjId)]) -> Report {
    let mut rep = Report::new();
    for (nx, x) in tests {
        for (ny, y) in tests {
            for (nz, z) in tests {
                let names = [nx.clone(), ny.clone(), nz.clone()];
                rep.push(Check::from_result(DIAGRAMS[0], &names, gamma_coassoc(c, *x, *y, *z)));
            }
        }
    }
    for (nx, x) in tests {
        let names = [nx.clone()];
        rep.push(Check::from_result(DIAGRAMS[1], &names, pi_counit_left(c, *x)));
        rep.push(Check::from_result(DIAGRAMS[2], &names, pi_counit_right(c, *x)));
    }
    for (nx, x) in tests {
        for (ny, y) in tests {
            let names = [nx.clone(), ny.clone()];
            rep.push(Check::from_result(DIAGRAMS[3], &names, mu_comonoidal(c, *x, *y)));
        }
    }
    rep.push(Check::from_result(DIAGRAMS[4], &["R".to_string()], mu_counit(c)));
    for (nx, x) in tests {
        for (ny, y) in tests {
            let names = [nx.clone(), ny.clone()];
            rep.push(Check::from_result(DIAGRAMS[5], &names, eta_comonoidal(c, *x, *y)));
        }
    }
    rep.push(Check::from_result(DIAGRAMS[6], &["R".to_string()], eta_counit(c)));
    for (nx, x) in tests {
        let names = [nx.clone()];
        rep.push(Check::from_result(DIAGRAMS[7], &names, mu_assoc(c, *x)));
        rep.push(Check::from_result(DIAGRAMS[8], &names, eta_unit_left(c, *x)));
        rep.push(Check::from_result(DIAGRAMS[9], &names, eta_unit_right(c, *x)));
    }
    rep
}
