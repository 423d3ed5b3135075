//! The bimonad `T = Hom(C, −)` on finite sets with the Cartesian product:
//! `μ(f)(c) = f(c)(c)`, `η(a) = const a`, `γ(f) = (p₁∘f, p₂∘f)`, `π: T(1) → 1`.
//!
//! Diagrams are evaluated on a generic element (distinct variables at every
//! leaf); since every structure map only rearranges leaves, equality there
//! implies equality everywhere. Small domains are also enumerated exhaustively.

use itertools::Itertools;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bimonad::DIAGRAMS;
use crate::report::{Check, Report};
use crate::{Error, Result};

pub const DEFAULT_CAP: u128 = 1 << 25;
const EXHAUSTIVE_LIMIT: u128 = 1 << 14;

/// The enumeration cap, overridable through `BIALG_ENUM_CAP`.
pub fn enum_cap() -> u128 {
    std::env::var("BIALG_ENUM_CAP").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_CAP)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ty {
    Set(usize),
    One,
    Prod(Box<Ty>, Box<Ty>),
    T(Box<Ty>),
}

impl Ty {
    fn prod(a: &Ty, b: &Ty) -> Ty {
        Ty::Prod(Box::new(a.clone()), Box::new(b.clone()))
    }

    fn t(a: &Ty) -> Ty {
        Ty::T(Box::new(a.clone()))
    }

    /// Saturating cardinality for `|C| = n`.
    pub fn card(&self, n: usize) -> u128 {
        match self {
            Ty::Set(k) => *k as u128,
            Ty::One => 1,
            Ty::Prod(a, b) => a.card(n).saturating_mul(b.card(n)),
            Ty::T(a) => {
                let base = a.card(n);
                (0..n).fold(1u128, |acc, _| acc.saturating_mul(base))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Val {
    Atom(usize),
    Unit,
    Pair(Box<Val>, Box<Val>),
    Func(Vec<Val>),
}

impl Val {
    fn pair(a: Val, b: Val) -> Val {
        Val::Pair(Box::new(a), Box::new(b))
    }

    fn split(&self) -> (&Val, &Val) {
        match self {
            Val::Pair(a, b) => (a, b),
            _ => panic!("expected a pair"),
        }
    }

    fn func(&self) -> &[Val] {
        match self {
            Val::Func(v) => v,
            _ => panic!("expected a function"),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Val::Atom(a) => json!(a),
            Val::Unit => json!([]),
            Val::Pair(a, b) => json!({"pair": [a.to_json(), b.to_json()]}),
            Val::Func(v) => json!({"fun": v.iter().map(Val::to_json).collect::<Vec<_>>()}),
        }
    }
}

fn generic(ty: &Ty, n: usize, next: &mut usize) -> Val {
    match ty {
        Ty::Set(_) => {
            *next += 1;
            Val::Atom(*next - 1)
        }
        Ty::One => Val::Unit,
        Ty::Prod(a, b) => {
            let x = generic(a, n, next);
            Val::pair(x, generic(b, n, next))
        }
        Ty::T(a) => Val::Func((0..n).map(|_| generic(a, n, next)).collect()),
    }
}

fn all_values(ty: &Ty, n: usize) -> Vec<Val> {
    match ty {
        Ty::Set(k) => (0..*k).map(Val::Atom).collect(),
        Ty::One => vec![Val::Unit],
        Ty::Prod(a, b) => {
            let bs = all_values(b, n);
            all_values(a, n).into_iter().flat_map(|x| bs.iter().map(move |y| Val::pair(x.clone(), y.clone()))).collect()
        }
        Ty::T(_) if n == 0 => vec![Val::Func(Vec::new())],
        Ty::T(a) => {
            let xs = all_values(a, n);
            (0..n).map(|_| xs.iter().cloned()).multi_cartesian_product().map(Val::Func).collect()
        }
    }
}

/// `T = Hom(C, −)` for `|C| = n`.
#[derive(Clone, Copy, Debug)]
pub struct SetMonad {
    pub n: usize,
}

impl SetMonad {
    pub fn t_map(&self, f: impl Fn(&Val) -> Val, v: &Val) -> Val {
        Val::Func(v.func().iter().map(f).collect())
    }

    pub fn mu(&self, v: &Val) -> Val {
        Val::Func((0..self.n).map(|c| v.func()[c].func()[c].clone()).collect())
    }

    pub fn eta(&self, v: &Val) -> Val {
        Val::Func(vec![v.clone(); self.n])
    }

    pub fn gamma(&self, v: &Val) -> Val {
        let (a, b): (Vec<Val>, Vec<Val>) = v
            .func()
            .iter()
            .map(|p| {
                let (x, y) = p.split();
                (x.clone(), y.clone())
            })
            .unzip();
        Val::pair(Val::Func(a), Val::Func(b))
    }

    pub fn pi(&self, _: &Val) -> Val {
        Val::Unit
    }
}

fn assoc(v: &Val) -> Val {
    let (a, bc) = v.split();
    let (b, c) = bc.split();
    Val::pair(Val::pair(a.clone(), b.clone()), c.clone())
}

fn lunit(v: &Val) -> Val {
    v.split().1.clone()
}

fn runit(v: &Val) -> Val {
    v.split().0.clone()
}

fn both(f: impl Fn(&Val) -> Val, g: impl Fn(&Val) -> Val, v: &Val) -> Val {
    let (a, b) = v.split();
    Val::pair(f(a), g(b))
}

/// `μ_A(f)(c) = f(c)(c)` on functions given as tuples.
pub fn set_mu(f: &[Vec<usize>]) -> Vec<usize> {
    (0..f.len()).map(|c| f[c][c]).collect()
}

pub fn set_eta(n: usize, a: usize) -> Vec<usize> {
    vec![a; n]
}

pub fn set_gamma(f: &[(usize, usize)]) -> (Vec<usize>, Vec<usize>) {
    f.iter().copied().unzip()
}

pub fn set_pi(_: &[()]) {}

type Side = Box<dyn Fn(&Val) -> Val>;

struct Diagram {
    name: &'static str,
    objects: Vec<String>,
    domain: Ty,
    lhs: Side,
    rhs: Side,
}

fn diagrams(t: SetMonad, sizes: &[usize]) -> Vec<Diagram> {
    let one = Ty::One;
    let name = |k: &usize| k.to_string();
    let mut out = Vec::new();
    for &x in sizes {
        for &y in sizes {
            for &z in sizes {
                let (tx, ty, tz) = (Ty::Set(x), Ty::Set(y), Ty::Set(z));
                out.push(Diagram {
                    name: DIAGRAMS[0],
                    objects: vec![name(&x), name(&y), name(&z)],
                    domain: Ty::t(&Ty::prod(&tx, &Ty::prod(&ty, &tz))),
                    lhs: Box::new(move |v| assoc(&both(|a| a.clone(), |b| t.gamma(b), &t.gamma(v)))),
                    rhs: Box::new(move |v| both(|a| t.gamma(a), |b| b.clone(), &t.gamma(&t.t_map(assoc, v)))),
                });
            }
        }
    }
    for &x in sizes {
        let tx = Ty::Set(x);
        out.push(Diagram {
            name: DIAGRAMS[1],
            objects: vec![name(&x)],
            domain: Ty::t(&Ty::prod(&one, &tx)),
            lhs: Box::new(move |v| lunit(&both(|a| t.pi(a), |b| b.clone(), &t.gamma(v)))),
            rhs: Box::new(move |v| t.t_map(lunit, v)),
        });
        out.push(Diagram {
            name: DIAGRAMS[2],
            objects: vec![name(&x)],
            domain: Ty::t(&Ty::prod(&tx, &one)),
            lhs: Box::new(move |v| runit(&both(|a| a.clone(), |b| t.pi(b), &t.gamma(v)))),
            rhs: Box::new(move |v| t.t_map(runit, v)),
        });
    }
    for &x in sizes {
        for &y in sizes {
            let xy = Ty::prod(&Ty::Set(x), &Ty::Set(y));
            out.push(Diagram {
                name: DIAGRAMS[3],
                objects: vec![name(&x), name(&y)],
                domain: Ty::t(&Ty::t(&xy)),
                lhs: Box::new(move |v| t.gamma(&t.mu(v))),
                rhs: Box::new(move |v| both(|a| t.mu(a), |b| t.mu(b), &t.gamma(&t.t_map(|w| t.gamma(w), v)))),
            });
        }
    }
    out.push(Diagram {
        name: DIAGRAMS[4],
        objects: vec!["1".into()],
        domain: Ty::t(&Ty::t(&one)),
        lhs: Box::new(move |v| t.pi(&t.t_map(|w| t.pi(w), v))),
        rhs: Box::new(move |v| t.pi(&t.mu(v))),
    });
    for &x in sizes {
        for &y in sizes {
            out.push(Diagram {
                name: DIAGRAMS[5],
                objects: vec![name(&x), name(&y)],
                domain: Ty::prod(&Ty::Set(x), &Ty::Set(y)),
                lhs: Box::new(move |v| t.gamma(&t.eta(v))),
                rhs: Box::new(move |v| both(|a| t.eta(a), |b| t.eta(b), v)),
            });
        }
    }
    out.push(Diagram {
        name: DIAGRAMS[6],
        objects: vec!["1".into()],
        domain: one.clone(),
        lhs: Box::new(move |v| t.pi(&t.eta(v))),
        rhs: Box::new(|v| v.clone()),
    });
    for &x in sizes {
        let tx = Ty::Set(x);
        out.push(Diagram {
            name: DIAGRAMS[7],
            objects: vec![name(&x)],
            domain: Ty::t(&Ty::t(&Ty::t(&tx))),
            lhs: Box::new(move |v| t.mu(&t.t_map(|w| t.mu(w), v))),
            rhs: Box::new(move |v| t.mu(&t.mu(v))),
        });
        out.push(Diagram {
            name: DIAGRAMS[8],
            objects: vec![name(&x)],
            domain: Ty::t(&tx),
            lhs: Box::new(move |v| t.mu(&t.eta(v))),
            rhs: Box::new(|v| v.clone()),
        });
        out.push(Diagram {
            name: DIAGRAMS[9],
            objects: vec![name(&x)],
            domain: Ty::t(&tx),
            lhs: Box::new(move |v| t.mu(&t.t_map(|w| t.eta(w), v))),
            rhs: Box::new(|v| v.clone()),
        });
    }
    out
}

fn evaluate(d: &Diagram, n: usize) -> Check {
    if d.domain.card(n) == 0 {
        return Check::pass(d.name, &d.objects);
    }
    let g = generic(&d.domain, n, &mut 0);
    let (l, r) = ((d.lhs)(&g), (d.rhs)(&g));
    if l != r {
        return Check::fail(d.name, &d.objects, "sides differ on the generic element")
            .with_witness(json!({"input": g.to_json(), "lhs": l.to_json(), "rhs": r.to_json()}));
    }
    if d.domain.card(n) <= EXHAUSTIVE_LIMIT {
        for v in all_values(&d.domain, n) {
            let (l, r) = ((d.lhs)(&v), (d.rhs)(&v));
            if l != r {
                return Check::fail(d.name, &d.objects, "sides differ")
                    .with_witness(json!({"input": v.to_json(), "lhs": l.to_json(), "rhs": r.to_json()}));
            }
        }
    }
    Check::pass(d.name, &d.objects)
}

/// All ten bimonad diagrams for `Hom(C, −)`, objects given by their sizes.
pub fn check_set_bmd(c: usize, sizes: &[usize]) -> Report {
    let t = SetMonad { n: c };
    let mut rep = Report::new();
    for d in diagrams(t, sizes) {
        rep.push(evaluate(&d, c));
    }
    rep
}

/// A T-algebra `α: A^C → A`, functions encoded lexicographically with the
/// value at the first element of C most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetTAlgebra {
    pub c: usize,
    pub a: usize,
    pub table: Vec<usize>,
}

fn checked_pow(base: usize, exp: usize) -> Option<u128> {
    (0..exp).try_fold(1u128, |acc, _| acc.checked_mul(base as u128))
}

fn encode(f: &[usize], a: usize) -> usize {
    f.iter().fold(0, |acc, &x| acc * a + x)
}

fn decode(mut i: usize, n: usize, a: usize) -> Vec<usize> {
    let mut f = vec![0; n];
    for slot in f.iter_mut().rev() {
        *slot = i % a.max(1);
        i /= a.max(1);
    }
    f
}

impl SetTAlgebra {
    pub fn new(c: usize, a: usize, table: Vec<usize>) -> Result<Self> {
        let size = checked_pow(a, c).ok_or_else(|| Error::CapExceeded { size: format!("{a}^{c}"), cap: enum_cap() })?;
        if table.len() as u128 != size || table.iter().any(|&v| v >= a) {
            return Err(Error::DimensionMismatch(format!("table must have {size} entries below {a}")));
        }
        let alg = SetTAlgebra { c, a, table };
        if let Some(w) = alg.violation() {
            return Err(Error::InvalidAlgebra(w));
        }
        Ok(alg)
    }

    pub fn apply(&self, f: &[usize]) -> usize {
        self.table[encode(f, self.a)]
    }

    /// The first violated law, if any.
    pub fn violation(&self) -> Option<String> {
        let (n, a) = (self.c, self.a);
        for x in 0..a {
            if self.apply(&vec![x; n]) != x {
                return Some(format!("α(const {x}) != {x}"));
            }
        }
        let rows = checked_pow(a, n)? as usize;
        if n == 0 {
            return None;
        }
        // F: C → A^C as n row indices
        for fs in (0..n).map(|_| 0..rows).multi_cartesian_product() {
            let inner: Vec<usize> = fs.iter().map(|&r| self.table[r]).collect();
            let diag: Vec<usize> = (0..n).map(|c| decode(fs[c], n, a)[c]).collect();
            if self.apply(&inner) != self.apply(&diag) {
                return Some(format!("multiplication law fails at rows {fs:?}"));
            }
        }
        None
    }

    /// Evaluation at `c`.
    pub fn evaluation(c: usize, n: usize, a: usize) -> Result<Self> {
        let rows = checked_pow(a, n).unwrap_or(u128::MAX) as usize;
        SetTAlgebra::new(n, a, (0..rows).map(|i| decode(i, n, a)[c]).collect())
    }

    /// Relabelling by a bijection `p` of A.
    fn relabel(&self, p: &[usize]) -> Vec<usize> {
        let n = self.c;
        let mut inv = vec![0; self.a];
        for (i, &x) in p.iter().enumerate() {
            inv[x] = i;
        }
        (0..self.table.len())
            .map(|i| {
                let f: Vec<usize> = decode(i, n, self.a).into_iter().map(|x| inv[x]).collect();
                p[self.apply(&f)]
            })
            .collect()
    }

    pub fn canonical_form(&self) -> Vec<usize> {
        (0..self.a).permutations(self.a).map(|p| self.relabel(&p)).min().unwrap_or_else(|| self.table.clone())
    }

    pub fn to_json(&self) -> Value {
        json!({"schema": crate::json::SCHEMA, "C": self.c, "A": self.a, "table": self.table})
    }
}

/// Every T-algebra structure on an `a`-element set, ordered by table.
pub fn enumerate_algebras(c: usize, a: usize) -> Result<Vec<SetTAlgebra>> {
    let cap = enum_cap();
    let rows = checked_pow(a, c).filter(|&r| r <= cap);
    let total = rows.and_then(|r| checked_pow(a, r as usize)).filter(|&t| t <= cap);
    let (Some(rows), Some(_)) = (rows, total) else {
        return Err(Error::CapExceeded { size: format!("{a}^({a}^{c})"), cap });
    };
    let rows = rows as usize;
    // constant functions are pinned by the unit law when C is nonempty
    let fixed: Vec<Option<usize>> = (0..rows)
        .map(|i| {
            if c > 0 {
                let f = decode(i, c, a);
                f.iter().all(|&x| x == f[0]).then(|| f[0])
            } else {
                None
            }
        })
        .collect();
    let free: Vec<usize> = (0..rows).filter(|&i| fixed[i].is_none()).collect();
    if a == 0 {
        return Ok(SetTAlgebra::new(c, 0, vec![]).into_iter().collect());
    }
    let count = checked_pow(a, free.len()).unwrap_or(u128::MAX);
    let found: Vec<SetTAlgebra> = (0..count as u64)
        .into_par_iter()
        .filter_map(|k| {
            let mut table: Vec<usize> = fixed.iter().map(|v| v.unwrap_or(0)).collect();
            let mut k = k as usize;
            for &i in free.iter().rev() {
                table[i] = k % a;
                k /= a;
            }
            let alg = SetTAlgebra { c, a, table };
            alg.violation().is_none().then_some(alg)
        })
        .collect();
    Ok(found)
}

/// Keeps one representative per isomorphism class.
pub fn up_to_iso(algs: &[SetTAlgebra]) -> Vec<SetTAlgebra> {
    let mut seen = std::collections::HashSet::new();
    algs.iter().filter(|x| seen.insert(x.canonical_form())).cloned().collect()
}

/// `⟨A^C, μ_A⟩`: carrier indexed like the table rows, `α(F)(c) = F(c)(c)`.
pub fn free_set_algebra(c: usize, a: usize) -> Result<SetTAlgebra> {
    let cap = enum_cap();
    let carrier = checked_pow(a, c)
        .filter(|&s| s <= cap)
        .ok_or_else(|| Error::CapExceeded { size: format!("{a}^{c}"), cap })? as usize;
    let rows = checked_pow(carrier, c)
        .filter(|&s| s <= cap)
        .ok_or_else(|| Error::CapExceeded { size: format!("({a}^{c})^{c}"), cap })? as usize;
    let table = (0..rows)
        .map(|i| {
            let fs = decode(i, c, carrier);
            let diag: Vec<usize> = (0..c).map(|k| decode(fs[k], c, a)[k]).collect();
            encode(&diag, a)
        })
        .collect();
    SetTAlgebra::new(c, carrier, table)
}

/// The monoidal product: carrier `A × B` (pair `(x, y)` at `x·|B| + y`) with
/// `α(f) = (α_A(p₁∘f), α_B(p₂∘f))`.
pub fn em_product(x: &SetTAlgebra, y: &SetTAlgebra) -> Result<SetTAlgebra> {
    if x.c != y.c {
        return Err(Error::BaseMismatch("algebras over different exponents".into()));
    }
    let (n, a, b) = (x.c, x.a, y.a);
    let carrier = a * b;
    let rows = checked_pow(carrier, n)
        .ok_or_else(|| Error::CapExceeded { size: format!("{carrier}^{n}"), cap: enum_cap() })? as usize;
    let table = (0..rows)
        .map(|i| {
            let f = decode(i, n, carrier);
            let (p, q): (Vec<usize>, Vec<usize>) = f.iter().map(|&v| (v / b, v % b)).unzip();
            x.apply(&p) * b + y.apply(&q)
        })
        .collect();
    SetTAlgebra::new(n, carrier, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_takes_the_diagonal() {
        assert_eq!(set_mu(&[vec![0, 1], vec![1, 0]]), vec![0, 0]);
        assert_eq!(set_gamma(&[(0, 1), (1, 1)]), (vec![0, 1], vec![1, 1]));
        assert_eq!(set_eta(3, 2), vec![2, 2, 2]);
    }

    #[test]
    fn cardinalities() {
        let t = Ty::t(&Ty::t(&Ty::Set(2)));
        assert_eq!(t.card(2), 16);
        assert_eq!(all_values(&t, 2).len(), 16);
        assert_eq!(all_values(&Ty::t(&Ty::Set(0)), 0).len(), 1);
        assert_eq!(all_values(&Ty::t(&Ty::Set(0)), 1).len(), 0);
    }
}
