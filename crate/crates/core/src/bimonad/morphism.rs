//! Monad morphisms `⟨G, φ⟩` between presented bimonads, with `φ: T_B G → G T_A`.
//!
//! Two presentations of the lax monoidal functor G are supported: restriction
//! of scalars along `ω: S → R`, and `G ⊗ −` for an algebra G when both base
//! rings are the ground field.

use std::collections::HashMap;

use super::{from_bialgebroid_unchecked, BimonadCtx, BimonadPresentation};
use crate::algebra::{check_algebra_map, AlgebraMap, FDAlgebra};
use crate::bialgebroid::BialgebroidData;
use crate::bimod::{induce, Module, ObjId};
use crate::exactla::{solve_affine, Matrix};
use crate::report::{Check, Report};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctorKind {
    /// `Φ^ω: _R M_R → _S M_S` for `ω: S → R`.
    Restriction { omega: AlgebraMap },
    /// `X ↦ G ⊗ X` over the ground field.
    Kernel { g: FDAlgebra },
}

/// `source` is the bimonad on the domain of G (kernel A over R), `target` the
/// one on its codomain (kernel B over S).
///
/// `phi` generates the transformation: for restriction it is `φ: B → A`, for a
/// kernel functor it is `φ: B ⊗ G → G ⊗ A`.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism {
    pub source: BimonadPresentation,
    pub target: BimonadPresentation,
    pub kind: FunctorKind,
    pub phi: Matrix,
}

impl Morphism {
    pub fn restriction(
        source: BimonadPresentation,
        target: BimonadPresentation,
        omega: AlgebraMap,
        phi: Matrix,
    ) -> Result<Self> {
        if omega.source != target.base.r || omega.target != source.base.r {
            return Err(Error::BaseMismatch("ω must go from the target base ring to the source base ring".into()));
        }
        let oc = check_algebra_map(&omega);
        if !oc.passed() {
            return Err(Error::NotAlgebraMap(format!("ω: {}", oc.detail.unwrap_or_default())));
        }
        if phi.rows() != source.a.dim() || phi.cols() != target.a.dim() {
            return Err(Error::DimensionMismatch(format!("φ must be {}x{}", source.a.dim(), target.a.dim())));
        }
        Ok(Morphism { source, target, kind: FunctorKind::Restriction { omega }, phi })
    }

    /// The morphism induced by a bialgebroid map `(ω, φ)` from `b` to `a`.
    pub fn from_bialgebroid_map(
        b: &BialgebroidData,
        a: &BialgebroidData,
        omega: &AlgebraMap,
        phi: &AlgebraMap,
    ) -> Result<Self> {
        Morphism::restriction(
            from_bialgebroid_unchecked(a)?,
            from_bialgebroid_unchecked(b)?,
            omega.clone(),
            phi.matrix.clone(),
        )
    }

    pub fn kernel(source: BimonadPresentation, target: BimonadPresentation, g: FDAlgebra, phi: Matrix) -> Result<Self> {
        if source.base.dim_r() != 1 || target.base.dim_r() != 1 {
            return Err(Error::Unsupported("kernel functors are supported over the ground field only".into()));
        }
        let (na, nb, ng) = (source.a.dim(), target.a.dim(), g.dim());
        if phi.rows() != ng * na || phi.cols() != nb * ng {
            return Err(Error::DimensionMismatch(format!("φ must be {}x{}", ng * na, nb * ng)));
        }
        Ok(Morphism { source, target, kind: FunctorKind::Kernel { g }, phi })
    }

    pub fn identity(p: &BimonadPresentation) -> Self {
        let n = p.a.dim();
        Morphism {
            source: p.clone(),
            target: p.clone(),
            kind: FunctorKind::Restriction { omega: p.base.r.identity_map() },
            phi: Matrix::identity(p.field(), n),
        }
    }

    /// `self` followed by `next` on the level of functors: `G_next ∘ G_self`,
    /// with `φ = φ_self ∘ φ_next`. Restrictions only.
    pub fn then(&self, next: &Morphism) -> Result<Morphism> {
        match (&self.kind, &next.kind) {
            (FunctorKind::Restriction { omega: w1 }, FunctorKind::Restriction { omega: w2 }) => {
                if self.target != next.source {
                    return Err(Error::BaseMismatch("morphisms do not compose".into()));
                }
                Morphism::restriction(
                    self.source.clone(),
                    next.target.clone(),
                    w1.compose(w2)?,
                    self.phi.mul(&next.phi)?,
                )
            }
            _ => Err(Error::Unsupported("composition of kernel functors".into())),
        }
    }
}

/// Evaluation context: both bimonads plus the memoized object map of G.
pub struct MorphismCtx {
    pub morphism: Morphism,
    pub src: BimonadCtx,
    pub tgt: BimonadCtx,
    g_cache: HashMap<ObjId, ObjId>,
}

impl MorphismCtx {
    pub fn new(m: Morphism) -> Result<Self> {
        let src = BimonadCtx::new(m.source.clone())?;
        let tgt = BimonadCtx::new(m.target.clone())?;
        Ok(MorphismCtx { morphism: m, src, tgt, g_cache: HashMap::new() })
    }

    /// `G` on objects of the source category.
    pub fn g_obj(&mut self, x: ObjId) -> Result<ObjId> {
        if let Some(&g) = self.g_cache.get(&x) {
            return Ok(g);
        }
        let field = self.src.field();
        let m = self.src.cat.module(x);
        let label = format!("G{}", self.src.cat.label(x));
        let e_s = self.tgt.pres.base.e.clone();
        let module = match &self.morphism.kind {
            FunctorKind::Restriction { omega } => m.restrict(&e_s, &omega.matrix.kron(&omega.matrix))?,
            FunctorKind::Kernel { g } => {
                let ig = Matrix::identity(field, g.dim());
                Module::new(e_s, g.dim() * m.dim(), m.action().iter().map(|a| ig.kron(a)).collect())?
            }
        };
        let id = self.tgt.cat.intern(module, &label);
        self.g_cache.insert(x, id);
        Ok(id)
    }

    /// `G(f)`.
    pub fn g_map(&self, f: &Matrix) -> Matrix {
        match &self.morphism.kind {
            FunctorKind::Restriction { .. } => f.clone(),
            FunctorKind::Kernel { g } => Matrix::identity(f.field(), g.dim()).kron(f),
        }
    }

    /// `G_2: Gx ⊗ Gy → G(x ⊗ y)`.
    pub fn g2(&mut self, x: ObjId, y: ObjId) -> Result<Matrix> {
        let (gx, gy) = (self.g_obj(x)?, self.g_obj(y)?);
        let xy = self.src.cat.tensor_data(x, y)?;
        let gxgy = self.tgt.cat.tensor_data(gx, gy)?;
        match &self.morphism.kind {
            FunctorKind::Restriction { .. } => induce(xy.proj(), &gxgy.quotient, "G_2 of a restriction"),
            FunctorKind::Kernel { g } => {
                let field = self.src.field();
                let (ng, dx, dy) = (g.dim(), self.src.cat.dim(x), self.src.cat.dim(y));
                let perm = Matrix::tensor_permutation(field, &[ng, dx, ng, dy], &[0, 2, 1, 3])?;
                let lift = Matrix::identity(field, ng)
                    .kron(xy.proj())
                    .mul(&g.mult_matrix().kron(&Matrix::identity(field, dx * dy)))?
                    .mul(&perm)?;
                induce(&lift, &gxgy.quotient, "G_2 of a kernel functor")
            }
        }
    }

    /// `G_0: S → G(R)`.
    pub fn g0(&self) -> Matrix {
        match &self.morphism.kind {
            FunctorKind::Restriction { omega } => omega.matrix.clone(),
            FunctorKind::Kernel { g } => g.unit_matrix(),
        }
    }

    /// `φ_x: T_B(Gx) → G(T_A x)`.
    pub fn phi_at(&mut self, x: ObjId) -> Result<Matrix> {
        let field = self.src.field();
        let gx = self.g_obj(x)?;
        let tbgx = self.tgt.t_data(gx)?;
        let tax = self.src.t_data(x)?;
        let ix = Matrix::identity(field, self.src.cat.dim(x));
        let lift = match &self.morphism.kind {
            FunctorKind::Restriction { .. } => tax.proj().mul(&self.morphism.phi.kron(&ix))?,
            FunctorKind::Kernel { g } => {
                Matrix::identity(field, g.dim()).kron(tax.proj()).mul(&self.morphism.phi.kron(&ix))?
            }
        };
        induce(&lift, &tbgx.quotient, "φ at an object")
    }

    /// `G(T_A x)` as an object of the target category.
    pub fn gt(&mut self, x: ObjId) -> Result<ObjId> {
        let tx = self.src.t(x)?;
        self.g_obj(tx)
    }
}

type Sides = Result<(Matrix, Matrix)>;

/// `Gμ^A_x ∘ φ_{T_A x} ∘ T_B φ_x = φ_x ∘ μ^B_{Gx}`.
fn mult_square(c: &mut MorphismCtx, x: ObjId) -> Sides {
    let gx = c.g_obj(x)?;
    let tbgx = c.tgt.t(gx)?;
    let gtx = c.gt(x)?;
    let tx = c.src.t(x)?;
    let phi_x = c.phi_at(x)?;
    let phi_tx = c.phi_at(tx)?;
    let mu_a = c.src.mu(x)?;
    let lhs = c.g_map(&mu_a).mul(&phi_tx)?.mul(&c.tgt.t_map(tbgx, gtx, &phi_x)?)?;
    let rhs = phi_x.mul(&c.tgt.mu(gx)?)?;
    Ok((lhs, rhs))
}

/// `φ_x ∘ η^B_{Gx} = Gη^A_x`.
fn unit_square(c: &mut MorphismCtx, x: ObjId) -> Sides {
    let gx = c.g_obj(x)?;
    let lhs = c.phi_at(x)?.mul(&c.tgt.eta(gx)?)?;
    let eta_a = c.src.eta(x)?;
    Ok((lhs, c.g_map(&eta_a)))
}

/// `G_2 ∘ (φ_x ⊗ φ_y) ∘ γ^B_{Gx,Gy} = Gγ^A_{x,y} ∘ φ_{x⊗y} ∘ T_B(G_2)`.
fn ambi_monoidal(c: &mut MorphismCtx, x: ObjId, y: ObjId) -> Sides {
    let (gx, gy) = (c.g_obj(x)?, c.g_obj(y)?);
    let (tbgx, tbgy) = (c.tgt.t(gx)?, c.tgt.t(gy)?);
    let (gtx, gty) = (c.gt(x)?, c.gt(y)?);
    let (tx, ty) = (c.src.t(x)?, c.src.t(y)?);
    let xy = c.src.tensor(x, y)?;
    let gxy = c.g_obj(xy)?;
    let gxgy = c.tgt.tensor(gx, gy)?;
    let phi_x = c.phi_at(x)?;
    let phi_y = c.phi_at(y)?;
    let lhs = c
        .g2(tx, ty)?
        .mul(&c.tgt.cat.tensor_map((tbgx, gtx, &phi_x), (tbgy, gty, &phi_y))?)?
        .mul(&c.tgt.gamma(gx, gy)?)?;
    let g2 = c.g2(x, y)?;
    let gamma_a = c.src.gamma(x, y)?;
    let rhs = c.g_map(&gamma_a).mul(&c.phi_at(xy)?)?.mul(&c.tgt.t_map(gxgy, gxy, &g2)?)?;
    Ok((lhs, rhs))
}

/// `Gπ^A ∘ φ_R ∘ T_B(G_0) = G_0 ∘ π^B`.
fn ambi_unit(c: &mut MorphismCtx) -> Sides {
    let r = c.src.unit();
    let s = c.tgt.unit();
    let gr = c.g_obj(r)?;
    let g0 = c.g0();
    let pi_a = c.src.pi()?;
    let lhs = c.g_map(&pi_a).mul(&c.phi_at(r)?)?.mul(&c.tgt.t_map(s, gr, &g0)?)?;
    let rhs = g0.mul(&c.tgt.pi()?)?;
    Ok((lhs, rhs))
}

/// Both monad-morphism squares at every test object (objects of the source
/// category).
pub fn check_monad_morphism(c: &mut MorphismCtx, tests: &[(String, ObjId)]) -> Report {
    let mut rep = Report::new();
    for (n, x) in tests {
        let o = [n.clone()];
        rep.push(Check::from_result("mnd-mor-mult", &o, mult_square(c, *x)));
        rep.push(Check::from_result("mnd-mor-unit", &o, unit_square(c, *x)));
    }
    rep
}

/// Both ambimonoidality diagrams: the monoidal one on all pairs, the unit one
/// once.
pub fn check_ambimonoidal(c: &mut MorphismCtx, tests: &[(String, ObjId)]) -> Report {
    let mut rep = Report::new();
    for (nx, x) in tests {
        for (ny, y) in tests {
            rep.push(Check::from_result("ambi-monoidal", &[nx.clone(), ny.clone()], ambi_monoidal(c, *x, *y)));
        }
    }
    rep.push(Check::from_result("ambi-unit", &["R".to_string()], ambi_unit(c)));
    rep
}

/// The four element-level conditions on `φ: B ⊗ G → G ⊗ A` for a kernel
/// functor over the ground field, evaluated directly on structure constants.
pub fn check_entwining(m: &Morphism) -> Result<Report> {
    let FunctorKind::Kernel { g } = &m.kind else {
        return Err(Error::Unsupported("entwining conditions need a kernel functor".into()));
    };
    let field = m.source.field();
    let (a, b) = (&m.source, &m.target);
    let (na, nb, ng) = (a.a.dim(), b.a.dim(), g.dim());
    let delta_a = BimonadCtx::new(a.clone())?.coprod_plain().clone();
    let delta_b = BimonadCtx::new(b.clone())?.coprod_plain().clone();
    let id = |n| Matrix::identity(field, n);
    let phi = &m.phi;
    let o = vec!["B".to_string(), "G".to_string(), "A".to_string()];
    let mut rep = Report::new();

    // φ ∘ (μ_B ⊗ G) = (G ⊗ μ_A) ∘ (φ ⊗ A) ∘ (B ⊗ φ)
    let mult = (|| {
        let lhs = phi.mul(&b.a.mult_matrix().kron(&id(ng)))?;
        let rhs = id(ng).kron(&a.a.mult_matrix()).mul(&phi.kron(&id(na)))?.mul(&id(nb).kron(phi))?;
        Ok((lhs, rhs))
    })();
    rep.push(Check::from_result("entwining-mult", &o, mult));

    // φ ∘ (η_B ⊗ G) = G ⊗ η_A
    let unit = (|| Ok((phi.mul(&b.a.unit_matrix().kron(&id(ng)))?, id(ng).kron(&a.a.unit_matrix()))))();
    rep.push(Check::from_result("entwining-unit", &o, unit));

    // g_φ g'_φ' ⊗ b₁^φ ⊗ b₂^φ' = (gg')_φ ⊗ (b^φ)₁ ⊗ (b^φ)₂
    let comul = (|| {
        let split = Matrix::tensor_permutation(field, &[nb, nb, ng, ng], &[0, 2, 1, 3])?;
        let gather = Matrix::tensor_permutation(field, &[ng, na, ng, na], &[0, 2, 1, 3])?;
        let lhs = g
            .mult_matrix()
            .kron(&id(na * na))
            .mul(&gather)?
            .mul(&phi.kron(phi))?
            .mul(&split)?
            .mul(&delta_b.kron(&id(ng * ng)))?;
        let rhs = id(ng).kron(&delta_a).mul(phi)?.mul(&id(nb).kron(&g.mult_matrix()))?;
        Ok((lhs, rhs))
    })();
    rep.push(Check::from_result("entwining-comul", &o, comul));

    // (1_G)_φ ε_A(b^φ) = 1_G ε_B(b)
    let counit = (|| {
        let lhs = id(ng).kron(&a.counit).mul(phi)?.mul(&id(nb).kron(&g.unit_matrix()))?;
        let rhs = g.unit_matrix().mul(&b.counit)?;
        Ok((lhs, rhs))
    })();
    rep.push(Check::from_result("entwining-counit", &o, counit));
    Ok(rep)
}

/// Solves for every map `Ψ: T_B(G E) → G(T_A E)` that is S^e-linear, natural
/// with respect to the right multiplications of E, and satisfies both
/// monad-morphism squares at E (with the given φ at `T_A E`). Passes when the
/// solution is unique and equals the given `φ_E`. Restrictions only.
pub fn restriction_uniqueness(c: &mut MorphismCtx) -> Result<Check> {
    if !matches!(c.morphism.kind, FunctorKind::Restriction { .. }) {
        return Err(Error::Unsupported("uniqueness is solved for restriction functors".into()));
    }
    let field = c.src.field();
    let e = c.src.e_obj();
    let ge = c.g_obj(e)?;
    let tbge = c.tgt.t_data(ge)?;
    let gte = c.gt(e)?;
    let te = c.src.t(e)?;
    let (m, n) = (c.tgt.cat.dim(gte), c.tgt.cat.dim(tbge.object));
    let (im, in_) = (Matrix::identity(field, m), Matrix::identity(field, n));
    let mut blocks: Vec<Matrix> = Vec::new();
    let mut rhs = Vec::new();
    let push_zero = |blocks: &mut Vec<Matrix>, rhs: &mut Vec<_>, coeff: Matrix| {
        rhs.extend(std::iter::repeat_n(field.zero(), coeff.rows()));
        blocks.push(coeff);
    };

    let (l1, l2) = (c.tgt.cat.module(tbge.object).action().to_vec(), c.tgt.cat.module(gte).action().to_vec());
    for (a1, a2) in l1.iter().zip(&l2) {
        push_zero(&mut blocks, &mut rhs, Matrix::sandwich(&im, a1).sub(&Matrix::sandwich(a2, &in_))?);
    }

    let er = c.src.pres.base.e.clone();
    for i in 0..er.dim() {
        let f = er.right_mult(&er.basis(i));
        let gf = c.g_map(&f);
        let tb = c.tgt.t_map(ge, ge, &gf)?;
        let ta = c.src.t_map(e, e, &f)?;
        let ga = c.g_map(&ta);
        push_zero(&mut blocks, &mut rhs, Matrix::sandwich(&im, &tb).sub(&Matrix::sandwich(&ga, &in_))?);
    }

    let eta_b = c.tgt.eta(ge)?;
    let eta_a = c.src.eta(e)?;
    blocks.push(Matrix::sandwich(&im, &eta_b));
    rhs.extend(Matrix::vectorize(&c.g_map(&eta_a)));

    let mu_a = c.src.mu(e)?;
    let front = c.g_map(&mu_a).mul(&c.phi_at(te)?)?;
    let mu_b = c.tgt.mu(ge)?;
    let coeff = c.tgt.t_map_coefficients(tbge.object, gte, &front)?.sub(&Matrix::sandwich(&im, &mu_b))?;
    push_zero(&mut blocks, &mut rhs, coeff);

    let refs: Vec<&Matrix> = blocks.iter().collect();
    let system = Matrix::vstack(field, m * n, &refs)?;
    let expected = c.phi_at(e)?;
    let o = ["E".to_string()];
    Ok(match solve_affine(&system, &rhs)? {
        None => Check::fail("phi-unique", &o, "no map satisfies the constraints"),
        Some((_, ker)) if ker.dim() > 0 => {
            Check::fail("phi-unique", &o, format!("solution space has dimension {}", ker.dim()))
        }
        Some((x, _)) if x != Matrix::vectorize(&expected) => {
            Check::fail("phi-unique", &o, "the unique solution differs from φ_E")
        }
        Some(_) => Check::pass("phi-unique", &o),
    })
}
