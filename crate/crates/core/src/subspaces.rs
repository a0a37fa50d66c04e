//! Named subspaces of 2-cochains on a Lie algebra and on a commutative algebra, and
//! the containments between them.
//!
//! Lie-side spaces live in `C²(L,M)` (alternating) or `S²(L,M)` (symmetric) coordinates,
//! algebra-side spaces in `C²(A,V)`, `S²(A,V)` or `Hom(A,V)` coordinates.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{AlgebraSpec, ModuleActionSpec};
use crate::cohomology::{big_d_space, ce_differential, cyclic_hc1, derivations, harrison_z2};
use crate::error::{Error, Result};
use crate::linalg::{frac, int, LinearSubspace, RatMatrix, Rational, SparseVec};
use crate::multilinear::{
    build_operator, common_kernel, op_act2, op_big_d, op_d_bracket, op_d_bullet, op_module_to_hom,
    op_pullback_product, op_wp, ActionIndex, CochainSpace, Symmetry,
};

/// One term of a trilinear expression in a 2-cochain `φ` and arguments `u_0, u_1, u_2`.
#[derive(Clone, Copy, Debug)]
pub enum Term {
    /// `c · φ(u_i u_j, u_k)`
    Prod(usize, usize, usize, i64),
    /// `c · φ(u_k, u_i u_j)`
    ProdRight(usize, usize, usize, i64),
    /// `c · u_i • φ(u_j, u_k)`
    Act(usize, usize, usize, i64),
}

/// Operator from 2-cochains of the given symmetry to `Hom(G^{⊗3}, M)` evaluating a sum of terms.
pub fn op_terms(g: &AlgebraSpec, m: &ModuleActionSpec, sym: Symmetry, terms: &[Term]) -> RatMatrix {
    let act = ActionIndex::new(m);
    let src = CochainSpace::new(2, g.dim(), m.dim(), sym);
    let dst = CochainSpace::new(3, g.dim(), m.dim(), Symmetry::None);
    build_operator(&src, &dst, |u, t, row| {
        for term in terms {
            match *term {
                Term::Prod(i, j, k, c) => {
                    for (r, x) in g.product(u[i], u[j]) {
                        row.add(&[*r, u[k]], t, &(x * int(c)));
                    }
                }
                Term::ProdRight(i, j, k, c) => {
                    for (r, x) in g.product(u[i], u[j]) {
                        row.add(&[u[k], *r], t, &(x * int(c)));
                    }
                }
                Term::Act(i, j, k, c) => {
                    for (p, x) in act.terms(u[i], t) {
                        row.add(&[u[j], u[k]], *p, &(x * int(c)));
                    }
                }
            }
        }
    })
}

/// Vectors `w` with `w · s = 0` for every `s` in `sub`.
fn annihilator(sub: &LinearSubspace) -> Vec<SparseVec> {
    crate::linalg::kernel_basis(&sub.basis_matrix())
}

/// 2-cochains (of the given arity and symmetry) whose values all lie in `sub`.
fn values_in(space: &CochainSpace, sub: &LinearSubspace) -> LinearSubspace {
    let ann = annihilator(sub);
    let td = space.target_dim;
    let rows: Vec<SparseVec> = (0..space.tuples().len())
        .flat_map(|k| ann.iter().map(move |w| w.iter().map(|(t, x)| (k * td + t, x.clone())).collect()))
        .collect();
    LinearSubspace::kernel(&RatMatrix::from_sparse_rows(space.dim(), rows))
}

fn cyclic_prod() -> [Term; 3] {
    [Term::Prod(0, 1, 2, 1), Term::Prod(1, 2, 0, 1), Term::Prod(2, 0, 1, 1)]
}

/// Lie-side data `(L, M)` with cached invariants.
pub struct LieSide<'a> {
    pub l: &'a AlgebraSpec,
    pub m: &'a ModuleActionSpec,
    pub ml: LinearSubspace,
    pub hom: CochainSpace,
    pub c2: CochainSpace,
    pub s2: CochainSpace,
}

impl<'a> LieSide<'a> {
    pub fn new(l: &'a AlgebraSpec, m: &'a ModuleActionSpec) -> Result<LieSide<'a>> {
        if !l.same_structure(&m.algebra) {
            return Err(Error::Precondition(format!("{} is not a module over {}", m.name, l.name)));
        }
        Ok(LieSide {
            l,
            m,
            ml: m.invariants(),
            hom: CochainSpace::new(1, l.dim(), m.dim(), Symmetry::None),
            c2: CochainSpace::new(2, l.dim(), m.dim(), Symmetry::Alternating),
            s2: CochainSpace::new(2, l.dim(), m.dim(), Symmetry::Symmetric),
        })
    }

    fn space(&self, sym: Symmetry) -> &CochainSpace {
        match sym {
            Symmetry::Alternating => &self.c2,
            _ => &self.s2,
        }
    }

    /// Solutions of all given term equations.
    pub fn solve(&self, sym: Symmetry, equations: &[&[Term]]) -> Result<LinearSubspace> {
        let ops: Vec<RatMatrix> = equations.iter().map(|t| op_terms(self.l, self.m, sym, t)).collect();
        let refs: Vec<&RatMatrix> = ops.iter().collect();
        common_kernel(self.space(sym).dim(), &refs)
    }

    pub fn z2(&self) -> Result<LinearSubspace> {
        Ok(LinearSubspace::kernel(&ce_differential(2, self.l, self.m)?))
    }

    pub fn b2(&self) -> Result<LinearSubspace> {
        Ok(LinearSubspace::image(&ce_differential(1, self.l, self.m)?))
    }

    /// 2-cochains with values in `M^L`.
    pub fn with_invariant_values(&self, sym: Symmetry) -> LinearSubspace {
        values_in(self.space(sym), &self.ml)
    }

    pub fn z2_invariant_values(&self) -> Result<LinearSubspace> {
        self.z2()?.intersect(&self.with_invariant_values(Symmetry::Alternating))
    }

    /// `{φ : z•φ(x,y) + φ([x,z],y) + φ(x,[y,z]) = 0}`.
    pub fn l_invariant(&self, sym: Symmetry) -> Result<LinearSubspace> {
        self.solve(sym, &[&[Term::Act(2, 0, 1, 1), Term::Prod(0, 2, 1, 1), Term::ProdRight(1, 2, 0, 1)]])
    }

    /// `ℬ = {φ : φ([x,y],z) + z•φ(x,y) = 0, Σ_cyc φ([x,y],z) = 0}`.
    pub fn b_script(&self) -> Result<LinearSubspace> {
        self.solve(Symmetry::Alternating, &[&[Term::Prod(0, 1, 2, 1), Term::Act(2, 0, 1, 1)], &cyclic_prod()])
    }

    /// `{dψ : x•ψ(y) = y•ψ(x)}`.
    pub fn q2(&self) -> Result<LinearSubspace> {
        let sym_hom = LinearSubspace::kernel(&op_act2(self.l, self.m, -1, Symmetry::Alternating)?);
        sym_hom.map(&ce_differential(1, self.l, self.m)?)
    }

    /// `(Z²(L,M^L) + Q²) / Q²`, as (numerator, denominator).
    pub fn hm2(&self) -> Result<(LinearSubspace, LinearSubspace)> {
        let q2 = self.q2()?;
        Ok((self.z2_invariant_values()?.sum(&q2)?, q2))
    }

    /// `𝒦 = {φ : Σ_cyc φ([x,y],z) = 2 x•φ(y,z)}`.
    pub fn k_script(&self) -> Result<LinearSubspace> {
        let mut t = cyclic_prod().to_vec();
        t.push(Term::Act(0, 1, 2, -2));
        self.solve(Symmetry::Alternating, &[&t])
    }

    /// `𝒥 = {ψ([x,y]) - ½x•ψ(y) + ½y•ψ(x)}`.
    pub fn j_script(&self) -> Result<LinearSubspace> {
        let br = op_pullback_product(self.l, self.m.dim(), Symmetry::Alternating);
        let act = op_act2(self.l, self.m, -1, Symmetry::Alternating)?;
        Ok(LinearSubspace::image(&br.sub(&act.scale(&frac(1, 2)))?))
    }

    /// `ℋ = (𝒦 + 𝒥) / 𝒥`, as (numerator, denominator).
    pub fn h_script(&self) -> Result<(LinearSubspace, LinearSubspace)> {
        let j = self.j_script()?;
        Ok((self.k_script()?.sum(&j)?, j))
    }

    /// `𝒳 = {φ : 2φ([x,y],z) = z•φ(x,y), φ([x,y],z) = φ([z,x],y)}`.
    pub fn x_script(&self) -> Result<LinearSubspace> {
        self.solve(
            Symmetry::Alternating,
            &[&[Term::Prod(0, 1, 2, 2), Term::Act(2, 0, 1, -1)], &[Term::Prod(0, 1, 2, 1), Term::Prod(2, 0, 1, -1)]],
        )
    }

    /// `𝒯 = {φ : 3φ([x,y],z) = 2z•φ(x,y), φ([x,y],z) = φ([z,x],y)}`.
    pub fn t_script(&self) -> Result<LinearSubspace> {
        self.solve(
            Symmetry::Alternating,
            &[&[Term::Prod(0, 1, 2, 3), Term::Act(2, 0, 1, -2)], &[Term::Prod(0, 1, 2, 1), Term::Prod(2, 0, 1, -1)]],
        )
    }

    /// `{φ with values in M^L : φ([L,L],L) = 0}` of the given symmetry.
    pub fn poor(&self, sym: Symmetry) -> Result<LinearSubspace> {
        self.with_invariant_values(sym).intersect(&self.solve(sym, &[&[Term::Prod(0, 1, 2, 1)]])?)
    }

    /// `Sym² = {φ ∈ S² : x•φ(y,z) = y•φ(x,z)}`.
    pub fn sym2(&self) -> Result<LinearSubspace> {
        self.solve(Symmetry::Symmetric, &[&[Term::Act(0, 1, 2, 1), Term::Act(1, 0, 2, -1)]])
    }

    /// `SB² = {x•ψ(y) + y•ψ(x)}`.
    pub fn sb2(&self) -> Result<LinearSubspace> {
        Ok(LinearSubspace::image(&op_act2(self.l, self.m, 1, Symmetry::Symmetric)?))
    }

    /// `SH² = (Sym² + SB²) / SB²`, as (numerator, denominator).
    pub fn sh2(&self) -> Result<(LinearSubspace, LinearSubspace)> {
        let sb = self.sb2()?;
        Ok((self.sym2()?.sum(&sb)?, sb))
    }

    /// `𝒮² = {φ ∈ S²(L,M)^L : Σ_cyc φ([x,y],z) = 0}`.
    pub fn s2_script(&self) -> Result<LinearSubspace> {
        self.l_invariant(Symmetry::Symmetric)?.intersect(&self.solve(Symmetry::Symmetric, &[&cyclic_prod()])?)
    }

    /// Kernel of `a d^[] + b d•` on alternating cochains.
    pub fn bracket_bullet_kernel(&self, a: i64, b: i64) -> Result<LinearSubspace> {
        let op = op_d_bracket(self.l, self.m, Symmetry::Alternating, Symmetry::None)?
            .scale(&int(a))
            .add(&op_d_bullet(self.l, self.m, Symmetry::Alternating, Symmetry::None)?.scale(&int(b)))?;
        Ok(LinearSubspace::kernel(&op))
    }

    /// `{φ : d^[]φ = 0, d•φ = 0}`.
    pub fn bracket_and_bullet_closed(&self) -> Result<LinearSubspace> {
        self.bracket_bullet_kernel(1, 0)?.intersect(&self.bracket_bullet_kernel(0, 1)?)
    }

    /// `Hom(L/[L,L], M^L)` inside `Hom(L, M)`.
    pub fn hom_abelianized_invariant(&self) -> LinearSubspace {
        let kills_derived = LinearSubspace::kernel(&op_pullback_product(self.l, self.m.dim(), Symmetry::Alternating));
        let values = values_in(&self.hom, &self.ml);
        kills_derived.intersect(&values).expect("same ambient")
    }

    /// `S²(L, M^L)^L`.
    pub fn s2_invariant_values_invariant(&self) -> Result<LinearSubspace> {
        self.with_invariant_values(Symmetry::Symmetric).intersect(&self.l_invariant(Symmetry::Symmetric)?)
    }

    /// `{φ ∈ Sym² : φ([L,L],L) = 0}`.
    pub fn sym2_killing_brackets(&self) -> Result<LinearSubspace> {
        self.sym2()?.intersect(&self.solve(Symmetry::Symmetric, &[&[Term::Prod(0, 1, 2, 1)]])?)
    }

    /// `{φ ∈ S² : 2φ([x,y],z) = x•φ(y,z) - y•φ(x,z)}`.
    pub fn s2_bracket_action(&self) -> Result<LinearSubspace> {
        self.solve(Symmetry::Symmetric, &[&[Term::Prod(0, 1, 2, 2), Term::Act(0, 1, 2, -1), Term::Act(1, 0, 2, 1)]])
    }

    /// `Ker d•` on symmetric cochains.
    pub fn bullet_kernel_symmetric(&self) -> Result<LinearSubspace> {
        Ok(LinearSubspace::kernel(&op_d_bullet(self.l, self.m, Symmetry::Symmetric, Symmetry::None)?))
    }
}

/// Algebra-side data `(A, V)`.
pub struct AssocSide<'a> {
    pub a: &'a AlgebraSpec,
    pub v: &'a ModuleActionSpec,
    pub hom: CochainSpace,
    pub c2: CochainSpace,
    pub s2: CochainSpace,
}

impl<'a> AssocSide<'a> {
    pub fn new(a: &'a AlgebraSpec, v: &'a ModuleActionSpec) -> Result<AssocSide<'a>> {
        if !a.same_structure(&v.algebra) || a.unit_index.is_none() {
            return Err(Error::Precondition(format!("{} is not a unital module over {}", v.name, a.name)));
        }
        Ok(AssocSide {
            a,
            v,
            hom: CochainSpace::new(1, a.dim(), v.dim(), Symmetry::None),
            c2: CochainSpace::new(2, a.dim(), v.dim(), Symmetry::Alternating),
            s2: CochainSpace::new(2, a.dim(), v.dim(), Symmetry::Symmetric),
        })
    }

    fn space(&self, sym: Symmetry) -> &CochainSpace {
        match sym {
            Symmetry::Alternating => &self.c2,
            _ => &self.s2,
        }
    }

    pub fn solve(&self, sym: Symmetry, equations: &[&[Term]]) -> Result<LinearSubspace> {
        let ops: Vec<RatMatrix> = equations.iter().map(|t| op_terms(self.a, self.v, sym, t)).collect();
        let refs: Vec<&RatMatrix> = ops.iter().collect();
        common_kernel(self.space(sym).dim(), &refs)
    }

    pub fn der(&self) -> Result<LinearSubspace> {
        derivations(self.a, self.v)
    }

    pub fn d_space(&self) -> Result<LinearSubspace> {
        big_d_space(self.a, self.v)
    }

    pub fn hc1(&self) -> Result<LinearSubspace> {
        cyclic_hc1(self.a, self.v)
    }

    pub fn harrison_z2(&self) -> Result<LinearSubspace> {
        harrison_z2(self.a, self.v)
    }

    /// Symmetric coboundaries `a•β(b) + b•β(a) - β(ab)`.
    pub fn harrison_b2(&self) -> Result<LinearSubspace> {
        Ok(LinearSubspace::image(&self.harrison_delta1()?))
    }

    /// `β ↦ a•β(b) + b•β(a) - β(ab)` from `Hom(A,V)` to `S²(A,V)`.
    pub fn harrison_delta1(&self) -> Result<RatMatrix> {
        op_act2(self.a, self.v, 1, Symmetry::Symmetric)?.sub(&self.pullback())
    }

    /// `𝒞² = {α : α(ac,b) - α(bc,a) + a•α(b,c) - b•α(a,c) + 2c•α(a,b) = 0}`.
    pub fn c2_script(&self) -> Result<LinearSubspace> {
        self.solve(
            Symmetry::Alternating,
            &[&[
                Term::Prod(0, 2, 1, 1),
                Term::Prod(1, 2, 0, -1),
                Term::Act(0, 1, 2, 1),
                Term::Act(1, 0, 2, -1),
                Term::Act(2, 0, 1, 2),
            ]],
        )
    }

    /// `{α : α(ab,c) = a•α(b,c) + b•α(a,c)}` of the given symmetry (`𝒫₋` or `𝒫₊`).
    pub fn p_space(&self, sym: Symmetry) -> Result<LinearSubspace> {
        self.solve(sym, &[&[Term::Prod(0, 1, 2, 1), Term::Act(0, 1, 2, -1), Term::Act(1, 0, 2, -1)]])
    }

    /// `𝒜 = {α ∈ S² : 2Dα = ℘α}`.
    pub fn a_script(&self) -> Result<LinearSubspace> {
        let op = op_big_d(self.a, self.v, Symmetry::Symmetric, Symmetry::None)?
            .scale(&int(2))
            .sub(&op_wp(self.a, self.v, Symmetry::Symmetric, Symmetry::None)?)?;
        Ok(LinearSubspace::kernel(&op))
    }

    /// `{a ↦ a•v}` inside `Hom(A, V)`.
    pub fn module_in_hom(&self) -> Result<LinearSubspace> {
        Ok(LinearSubspace::image(&op_module_to_hom(self.a, self.v)?))
    }

    /// `β ↦ β(ab)` from `Hom(A,V)` to `S²(A,V)`.
    pub fn pullback(&self) -> RatMatrix {
        op_pullback_product(self.a, self.v.dim(), Symmetry::Symmetric)
    }

    /// `{(a,b) ↦ ab•v}` inside `S²(A,V)`.
    pub fn module_in_s2(&self) -> Result<LinearSubspace> {
        self.module_in_hom()?.map(&self.pullback())
    }

    /// `{β(ab) : β ∈ Der(A,V)}` inside `S²(A,V)`.
    pub fn der_in_s2(&self) -> Result<LinearSubspace> {
        self.der()?.map(&self.pullback())
    }

    /// `{γ(ab) : γ ∈ Hom(A,V)}` inside `S²(A,V)`.
    pub fn hom_in_s2(&self) -> Result<LinearSubspace> {
        Ok(LinearSubspace::image(&self.pullback()))
    }

    /// `β ↦ 3a•β(b) + 3b•β(a) - 2β(ab)` from `Hom(A,V)` to `S²(A,V)`.
    pub fn d_map(&self) -> Result<RatMatrix> {
        op_act2(self.a, self.v, 1, Symmetry::Symmetric)?.scale(&int(3)).sub(&self.pullback().scale(&int(2)))
    }

    /// Image of `D(A,V)` under `d_map`.
    pub fn d_in_s2(&self) -> Result<LinearSubspace> {
        self.d_space()?.map(&self.d_map()?)
    }

    /// `{a•β(b) - b•β(a) : β ∈ Hom(A,V)}` inside `C²(A,V)`.
    pub fn antisym_image(&self) -> Result<LinearSubspace> {
        Ok(LinearSubspace::image(&op_act2(self.a, self.v, -1, Symmetry::Alternating)?))
    }

    /// `{a•β(b) - b•β(a) : β ∈ Der(A,V)}`.
    pub fn antisym_image_of_der(&self) -> Result<LinearSubspace> {
        self.der()?.map(&op_act2(self.a, self.v, -1, Symmetry::Alternating)?)
    }

    /// `{β ∈ Hom(A,V) : β(1) = 0}`.
    pub fn normalized_hom(&self) -> LinearSubspace {
        let u = self.a.unit_index.expect("unit checked in constructor");
        let dv = self.v.dim();
        let rows: Vec<SparseVec> = (0..dv).map(|s| vec![(u * dv + s, Rational::from_integer(1.into()))]).collect();
        LinearSubspace::kernel(&RatMatrix::from_sparse_rows(self.hom.dim(), rows))
    }

    /// 2-cochains of the given symmetry vanishing when an argument is the unit.
    pub fn normalized(&self, sym: Symmetry) -> LinearSubspace {
        let u = self.a.unit_index.expect("unit checked in constructor");
        let space = self.space(sym);
        let td = space.target_dim;
        let rows: Vec<SparseVec> = space
            .tuples()
            .iter()
            .enumerate()
            .filter(|(_, t)| t.contains(&u))
            .flat_map(|(k, _)| (0..td).map(move |s| vec![(k * td + s, Rational::from_integer(1.into()))]))
            .collect();
        LinearSubspace::kernel(&RatMatrix::from_sparse_rows(space.dim(), rows))
    }
}

/// A named space, possibly a quotient `numerator / denominator`.
#[derive(Clone, Debug)]
pub struct NamedSpace {
    pub name: String,
    pub ambient: String,
    pub space: LinearSubspace,
    pub denominator: Option<LinearSubspace>,
    pub dim: usize,
}

fn plain(name: &str, ambient: &str, space: LinearSubspace) -> NamedSpace {
    NamedSpace { name: name.into(), ambient: ambient.into(), dim: space.dim(), space, denominator: None }
}

fn quotient(name: &str, ambient: &str, (num, den): (LinearSubspace, LinearSubspace)) -> Result<NamedSpace> {
    let dim = num.quotient_dim(&den)?;
    Ok(NamedSpace { name: name.into(), ambient: ambient.into(), space: num, denominator: Some(den), dim })
}

pub const LIE_SPACES: &[&str] = &[
    "B_script", "Q2", "HM2", "K_script", "J_script", "H_script", "X_script", "T_script", "Poor_minus",
    "Poor_plus", "Sym2", "SB2", "SH2", "S2_script", "C2_invariants",
];

pub const ASSOC_SPACES: &[&str] = &["D_space", "HC1", "C2_script", "P_minus", "P_plus", "A_script"];

/// Looks up a named space on the Lie side `(L, M)`.
pub fn lie_named_space(name: &str, l: &AlgebraSpec, m: &ModuleActionSpec) -> Result<NamedSpace> {
    let s = LieSide::new(l, m)?;
    let (c2, s2) = ("C2(L,M)", "S2(L,M)");
    Ok(match name {
        "B_script" => plain(name, c2, s.b_script()?),
        "Q2" => plain(name, c2, s.q2()?),
        "HM2" => quotient(name, c2, s.hm2()?)?,
        "K_script" => plain(name, c2, s.k_script()?),
        "J_script" => plain(name, c2, s.j_script()?),
        "H_script" => quotient(name, c2, s.h_script()?)?,
        "X_script" => plain(name, c2, s.x_script()?),
        "T_script" => plain(name, c2, s.t_script()?),
        "Poor_minus" => plain(name, c2, s.poor(Symmetry::Alternating)?),
        "Poor_plus" => plain(name, s2, s.poor(Symmetry::Symmetric)?),
        "Sym2" => plain(name, s2, s.sym2()?),
        "SB2" => plain(name, s2, s.sb2()?),
        "SH2" => quotient(name, s2, s.sh2()?)?,
        "S2_script" => plain(name, s2, s.s2_script()?),
        "C2_invariants" => plain(name, c2, s.l_invariant(Symmetry::Alternating)?),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

/// Looks up a named space on the algebra side `(A, V)`.
pub fn assoc_named_space(name: &str, a: &AlgebraSpec, v: &ModuleActionSpec) -> Result<NamedSpace> {
    let s = AssocSide::new(a, v)?;
    Ok(match name {
        "D_space" => plain(name, "Hom(A,V)", s.d_space()?),
        "HC1" => plain(name, "C2(A,V)", s.hc1()?),
        "C2_script" => plain(name, "C2(A,V)", s.c2_script()?),
        "P_minus" => plain(name, "C2(A,V)", s.p_space(Symmetry::Alternating)?),
        "P_plus" => plain(name, "S2(A,V)", s.p_space(Symmetry::Symmetric)?),
        "A_script" => plain(name, "S2(A,V)", s.a_script()?),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Containment {
    pub relation: String,
    pub holds: bool,
}

/// The six structural relations among the named spaces.
pub fn containment_report(
    l: &AlgebraSpec,
    m: &ModuleActionSpec,
    a: &AlgebraSpec,
    v: &ModuleActionSpec,
) -> Result<Vec<Containment>> {
    let ls = LieSide::new(l, m)?;
    let as_ = AssocSide::new(a, v)?;
    let poor_m = ls.poor(Symmetry::Alternating)?;
    let b = ls.b_script()?;
    let z2 = ls.z2()?;
    let mut out = BTreeMap::new();
    out.insert(0, ("Poor_minus ⊆ B_script ⊆ Z2(L,M)", b.contains(&poor_m)? && z2.contains(&b)?));
    out.insert(1, ("B_script ∩ Z2(L,M^L) = Poor_minus", b.intersect(&ls.z2_invariant_values()?)? == poor_m));
    let s2_ml_inv = ls.with_invariant_values(Symmetry::Symmetric).intersect(&ls.l_invariant(Symmetry::Symmetric)?)?;
    out.insert(2, ("S2_script ∩ S2(L,M^L)^L = Poor_plus", ls.s2_script()?.intersect(&s2_ml_inv)? == ls.poor(Symmetry::Symmetric)?));
    out.insert(3, ("C2_script ∩ HC1 = P_minus", as_.c2_script()?.intersect(&as_.hc1()?)? == as_.p_space(Symmetry::Alternating)?));
    out.insert(4, ("Har_Z2 ∩ A_script = P_plus", as_.harrison_z2()?.intersect(&as_.a_script()?)? == as_.p_space(Symmetry::Symmetric)?));
    out.insert(5, ("Der(A,V) ⊆ D(A,V)", as_.d_space()?.contains(&as_.der()?)?));
    Ok(out.into_values().map(|(r, h)| Containment { relation: r.into(), holds: h }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{abelian, adjoint, heis3, regular, sl2, trivial, truncated_poly};
    use std::sync::Arc;

    #[test]
    fn ground_field_spaces_vanish() {
        let k = Arc::new(truncated_poly(1).unwrap());
        let v = regular(&k);
        let s = AssocSide::new(&k, &v).unwrap();
        assert_eq!(s.p_space(Symmetry::Symmetric).unwrap().dim(), 0);
        assert_eq!(s.a_script().unwrap().dim(), 0);
        assert_eq!(s.d_space().unwrap().dim(), 0);
        assert_eq!(s.harrison_z2().unwrap().dim(), 1);
        assert_eq!(s.harrison_b2().unwrap().dim(), 1);
    }

    #[test]
    fn abelian_trivial_spaces() {
        let l = Arc::new(abelian(2));
        let m = trivial(&l, 1);
        let s = LieSide::new(&l, &m).unwrap();
        assert_eq!(s.k_script().unwrap().dim(), 1);
        assert_eq!(s.j_script().unwrap().dim(), 0);
        assert_eq!(s.sym2().unwrap().dim(), 3);
        assert_eq!(s.sb2().unwrap().dim(), 0);
    }

    #[test]
    fn containments_hold_on_small_pairs() {
        let a = Arc::new(truncated_poly(2).unwrap());
        let v = regular(&a);
        for l in [sl2(), heis3(), abelian(2)] {
            let l = Arc::new(l);
            let m = adjoint(&l);
            for c in containment_report(&l, &m, &a, &v).unwrap() {
                assert!(c.holds, "{}: {}", l.name, c.relation);
            }
        }
    }

    #[test]
    fn unknown_names() {
        let l = Arc::new(sl2());
        assert!(matches!(lie_named_space("nope", &l, &adjoint(&l)), Err(Error::UnknownName(_))));
    }
}
