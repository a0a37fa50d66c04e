//! Coordinates for multilinear maps and the operators built from them.
//!
//! A cochain space of arity `n` from a `d`-dimensional source to a `t`-dimensional
//! target has one coordinate per (canonical tuple, target index), target index minor.
//! Canonical tuples are strictly increasing (alternating), weakly increasing
//! (symmetric) or arbitrary (no symmetry), enumerated in lexicographic order.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraKind, AlgebraSpec, ModuleActionSpec};
use crate::error::{Error, Result};
use crate::linalg::matrix::sparse_collect;
use crate::linalg::{frac, LinearSubspace, RatMatrix, Rational, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Alternating,
    Symmetric,
    None,
}

#[derive(Clone, Debug)]
pub struct CochainSpace {
    pub arity: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub symmetry: Symmetry,
    tuples: Vec<Vec<usize>>,
    lookup: Vec<Option<(usize, i8)>>,
}

fn raw_index(args: &[usize], d: usize) -> usize {
    args.iter().fold(0, |acc, a| acc * d + a)
}

/// Sorts a copy of `args`, returning the sorted tuple and the permutation sign.
pub fn sort_with_sign(args: &[usize]) -> (Vec<usize>, i8) {
    let mut v = args.to_vec();
    let mut sign = 1i8;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    (v, sign)
}

fn all_tuples(arity: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

impl CochainSpace {
    pub fn new(arity: usize, source_dim: usize, target_dim: usize, symmetry: Symmetry) -> CochainSpace {
        let raw = all_tuples(arity, source_dim);
        let canonical = |t: &Vec<usize>| match symmetry {
            Symmetry::Alternating => t.windows(2).all(|w| w[0] < w[1]),
            Symmetry::Symmetric => t.windows(2).all(|w| w[0] <= w[1]),
            Symmetry::None => true,
        };
        let tuples: Vec<Vec<usize>> = raw.iter().filter(|t| canonical(t)).cloned().collect();
        let index_of = |t: &[usize]| -> usize {
            tuples.binary_search_by(|probe| probe.as_slice().cmp(t)).expect("canonical tuple")
        };
        let lookup = raw
            .iter()
            .map(|t| match symmetry {
                Symmetry::None => Some((index_of(t), 1)),
                Symmetry::Symmetric => Some((index_of(&sort_with_sign(t).0), 1)),
                Symmetry::Alternating => {
                    let (s, sign) = sort_with_sign(t);
                    if s.windows(2).any(|w| w[0] == w[1]) {
                        None
                    } else {
                        Some((index_of(&s), sign))
                    }
                }
            })
            .collect();
        CochainSpace { arity, source_dim, target_dim, symmetry, tuples, lookup }
    }

    pub fn dim(&self) -> usize {
        self.tuples.len() * self.target_dim
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Canonical tuple index and sign for an argument tuple; `None` when the value is forced to zero.
    pub fn resolve(&self, args: &[usize]) -> Option<(usize, i8)> {
        self.lookup[raw_index(args, self.source_dim)]
    }

    /// Coordinate index and sign of the `target` component at `args`.
    pub fn locate(&self, args: &[usize], target: usize) -> Option<(usize, i8)> {
        self.resolve(args).map(|(k, s)| (k * self.target_dim + target, s))
    }

    /// Inclusion into full (no symmetry) coordinates.
    pub fn to_full(&self) -> RatMatrix {
        let full = CochainSpace::new(self.arity, self.source_dim, self.target_dim, Symmetry::None);
        build_operator(self, &full, |args, t, row| row.add(args, t, &Rational::one()))
    }

    /// Reads a full tensor at canonical positions; inverse of `to_full` on tensors of this symmetry.
    pub fn from_full(&self) -> RatMatrix {
        let full = CochainSpace::new(self.arity, self.source_dim, self.target_dim, Symmetry::None);
        build_operator(&full, self, |args, t, row| row.add(args, t, &Rational::one()))
    }
}

/// One output coordinate of an operator, accumulated as a combination of input coordinates.
pub struct Row<'a> {
    domain: &'a CochainSpace,
    terms: Vec<(usize, Rational)>,
}

impl Row<'_> {
    /// Adds `c * φ(args)_t`.
    pub fn add(&mut self, args: &[usize], t: usize, c: &Rational) {
        if let Some((k, s)) = self.domain.locate(args, t) {
            self.terms.push((k, if s < 0 { -c.clone() } else { c.clone() }));
        }
    }
}

/// Matrix of a linear operator given by its value at each canonical output coordinate.
pub fn build_operator(
    domain: &CochainSpace,
    codomain: &CochainSpace,
    f: impl Fn(&[usize], usize, &mut Row),
) -> RatMatrix {
    let mut rows = Vec::with_capacity(codomain.dim());
    for tuple in codomain.tuples() {
        for t in 0..codomain.target_dim {
            let mut row = Row { domain, terms: Vec::new() };
            f(tuple, t, &mut row);
            rows.push(sparse_collect(row.terms));
        }
    }
    RatMatrix::from_sparse_rows(domain.dim(), rows)
}

/// `by_target[x * dim + t]` lists `(p, c)` with `e_x • m_p = ... + c m_t + ...`.
pub struct ActionIndex {
    dim: usize,
    by_target: Vec<Vec<(usize, Rational)>>,
}

impl ActionIndex {
    pub fn new(m: &ModuleActionSpec) -> ActionIndex {
        let dim = m.dim();
        let mut by_target = vec![Vec::new(); m.algebra.dim() * dim];
        for (x, p, t, c) in m.entries() {
            by_target[x * dim + t].push((p, c));
        }
        ActionIndex { dim, by_target }
    }

    pub fn terms(&self, x: usize, t: usize) -> &[(usize, Rational)] {
        &self.by_target[x * self.dim + t]
    }
}

fn check_module(alg: &AlgebraSpec, m: &ModuleActionSpec) -> Result<()> {
    if !alg.same_structure(&m.algebra) {
        return Err(Error::Precondition(format!(
            "module {} is not a module over {}",
            m.name, alg.name
        )));
    }
    Ok(())
}

const CYCLES: [[usize; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];

/// `d^[] φ(x,y,z) = -(φ([x,y],z) + φ([y,z],x) + φ([z,x],y))`, the bracket part of the
/// degree-2 differential, so that `d = d^[] + d•` on alternating cochains.
pub fn op_d_bracket(l: &AlgebraSpec, m: &ModuleActionSpec, domain: Symmetry, codomain: Symmetry) -> Result<RatMatrix> {
    check_module(l, m)?;
    let src = CochainSpace::new(2, l.dim(), m.dim(), domain);
    let dst = CochainSpace::new(3, l.dim(), m.dim(), codomain);
    Ok(build_operator(&src, &dst, |args, t, row| {
        for c in CYCLES {
            let (u, v, w) = (args[c[0]], args[c[1]], args[c[2]]);
            for (r, x) in l.product(u, v) {
                row.add(&[*r, w], t, &-x.clone());
            }
        }
    }))
}

/// `d• φ(x,y,z) = x•φ(y,z) + y•φ(z,x) + z•φ(x,y)`.
pub fn op_d_bullet(l: &AlgebraSpec, m: &ModuleActionSpec, domain: Symmetry, codomain: Symmetry) -> Result<RatMatrix> {
    check_module(l, m)?;
    let act = ActionIndex::new(m);
    let src = CochainSpace::new(2, l.dim(), m.dim(), domain);
    let dst = CochainSpace::new(3, l.dim(), m.dim(), codomain);
    Ok(build_operator(&src, &dst, |args, t, row| {
        for c in CYCLES {
            let (u, v, w) = (args[c[0]], args[c[1]], args[c[2]]);
            for (p, x) in act.terms(u, t) {
                row.add(&[v, w], *p, x);
            }
        }
    }))
}

fn check_assoc(a: &AlgebraSpec) -> Result<()> {
    if a.kind != AlgebraKind::AssocCommUnital {
        return Err(Error::Precondition(format!("{} is not commutative associative", a.name)));
    }
    Ok(())
}

/// `℘α(a,b,c) = α(ab,c) + α(bc,a) + α(ca,b)`.
pub fn op_wp(a: &AlgebraSpec, v: &ModuleActionSpec, domain: Symmetry, codomain: Symmetry) -> Result<RatMatrix> {
    check_assoc(a)?;
    check_module(a, v)?;
    let src = CochainSpace::new(2, a.dim(), v.dim(), domain);
    let dst = CochainSpace::new(3, a.dim(), v.dim(), codomain);
    Ok(build_operator(&src, &dst, |args, t, row| {
        for c in CYCLES {
            let (x, y, z) = (args[c[0]], args[c[1]], args[c[2]]);
            for (r, k) in a.product(x, y) {
                row.add(&[*r, z], t, k);
            }
        }
    }))
}

/// `Dα(a,b,c) = a•α(b,c) + b•α(c,a) + c•α(a,b)`.
pub fn op_big_d(a: &AlgebraSpec, v: &ModuleActionSpec, domain: Symmetry, codomain: Symmetry) -> Result<RatMatrix> {
    check_assoc(a)?;
    check_module(a, v)?;
    let act = ActionIndex::new(v);
    let src = CochainSpace::new(2, a.dim(), v.dim(), domain);
    let dst = CochainSpace::new(3, a.dim(), v.dim(), codomain);
    Ok(build_operator(&src, &dst, |args, t, row| {
        for c in CYCLES {
            let (x, y, z) = (args[c[0]], args[c[1]], args[c[2]]);
            for (p, k) in act.terms(x, t) {
                row.add(&[y, z], *p, k);
            }
        }
    }))
}

/// Hochschild differential on symmetric 2-cochains:
/// `δα(a,b,c) = a•α(b,c) - α(ab,c) + α(a,bc) - c•α(a,b)`.
pub fn harrison_delta(a: &AlgebraSpec, v: &ModuleActionSpec) -> Result<RatMatrix> {
    check_assoc(a)?;
    check_module(a, v)?;
    let act = ActionIndex::new(v);
    let src = CochainSpace::new(2, a.dim(), v.dim(), Symmetry::Symmetric);
    let dst = CochainSpace::new(3, a.dim(), v.dim(), Symmetry::None);
    Ok(build_operator(&src, &dst, |args, t, row| {
        let (x, y, z) = (args[0], args[1], args[2]);
        for (p, k) in act.terms(x, t) {
            row.add(&[y, z], *p, k);
        }
        for (r, k) in a.product(x, y) {
            row.add(&[*r, z], t, &-k.clone());
        }
        for (r, k) in a.product(y, z) {
            row.add(&[x, *r], t, k);
        }
        for (p, k) in act.terms(z, t) {
            row.add(&[x, y], *p, &-k.clone());
        }
    }))
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(dL dA, 3)` and the three summands `C(dL,3)C(dA+2,3)`, `y(dL)y(dA)`, `C(dL+2,3)C(dA,3)`
/// with `y(d) = d(d-1)(d+1)/3`.
pub fn young_cauchy3_dims(dl: u64, da: u64) -> (u64, [u64; 3]) {
    let y = |d: u64| d * (d + 1) * d.saturating_sub(1) / 3;
    (
        binom(dl * da, 3),
        [binom(dl, 3) * binom(da + 2, 3), y(dl) * y(da), binom(dl + 2, 3) * binom(da, 3)],
    )
}

/// Embeds `Hom(L^n, M) ⊗ Hom(A^n, V)` coordinates into cochains on `L ⊗ A` with values in
/// `M ⊗ V`: `(φ ⊗ α)(x_1⊗a_1, ...) = φ(x_1, ...) ⊗ α(a_1, ...)`.
/// Tensor coordinates use index `i * dim(aspace) + j`.
pub fn tensor_embedding(lspace: &CochainSpace, aspace: &CochainSpace, current: &CochainSpace) -> Result<RatMatrix> {
    let n = lspace.arity;
    if aspace.arity != n
        || current.arity != n
        || current.source_dim != lspace.source_dim * aspace.source_dim
        || current.target_dim != lspace.target_dim * aspace.target_dim
    {
        return Err(Error::DimensionMismatch("tensor embedding spaces do not fit".into()));
    }
    let (da, dv, adim) = (aspace.source_dim, aspace.target_dim, aspace.dim());
    let mut rows = Vec::with_capacity(current.dim());
    for tuple in current.tuples() {
        let xs: Vec<usize> = tuple.iter().map(|x| x / da).collect();
        let as_: Vec<usize> = tuple.iter().map(|x| x % da).collect();
        let l = lspace.resolve(&xs);
        let a = aspace.resolve(&as_);
        for t in 0..current.target_dim {
            let (m, v) = (t / dv, t % dv);
            let row = match (l, a) {
                (Some((k1, s1)), Some((k2, s2))) => {
                    let col = (k1 * lspace.target_dim + m) * adim + k2 * dv + v;
                    vec![(col, Rational::from_integer((s1 * s2).into()))]
                }
                _ => Vec::new(),
            };
            rows.push(row);
        }
    }
    Ok(RatMatrix::from_sparse_rows(lspace.dim() * adim, rows))
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    all_tuples(n, n)
        .into_iter()
        .filter(|p| {
            let mut s = p.clone();
            s.sort();
            s.windows(2).all(|w| w[0] < w[1])
        })
        .map(|p| {
            let (_, sign) = sort_with_sign(&p);
            (p, sign)
        })
        .collect()
}

/// Component of an alternating cochain on `L ⊗ A` in `lspace ⊗ aspace`, obtained by
/// symmetrizing the `L` and `A` arguments separately (isotypic projection).
pub fn component_projection(lspace: &CochainSpace, aspace: &CochainSpace, current: &CochainSpace) -> Result<RatMatrix> {
    let n = lspace.arity;
    if current.symmetry != Symmetry::Alternating {
        return Err(Error::Precondition("projection expects alternating cochains on L ⊗ A".into()));
    }
    let (da, dv, adim) = (aspace.source_dim, aspace.target_dim, aspace.dim());
    let perms = permutations(n);
    let norm = frac(1, (perms.len() * perms.len()) as i64);
    let weight = |sym: Symmetry, s: i8| if sym == Symmetry::Alternating { s } else { 1 };
    let mut rows = Vec::with_capacity(lspace.dim() * adim);
    for xs in lspace.tuples() {
        for m in 0..lspace.target_dim {
            for as_ in aspace.tuples() {
                for v in 0..dv {
                    let mut terms = Vec::new();
                    for (sp, ss) in &perms {
                        for (rp, rs) in &perms {
                            let args: Vec<usize> = (0..n).map(|k| xs[sp[k]] * da + as_[rp[k]]).collect();
                            if let Some((col, s)) = current.locate(&args, m * dv + v) {
                                let w = weight(lspace.symmetry, *ss) * weight(aspace.symmetry, *rs) * s;
                                terms.push((col, &norm * Rational::from_integer(w.into())));
                            }
                        }
                    }
                    rows.push(sparse_collect(terms));
                }
            }
        }
    }
    Ok(RatMatrix::from_sparse_rows(current.dim(), rows))
}

/// `φ ↦ x_1•φ(x_2) + sign · x_2•φ(x_1)` from `Hom(G, M)` to 2-cochains.
pub fn op_act2(g: &AlgebraSpec, m: &ModuleActionSpec, sign: i64, codomain: Symmetry) -> Result<RatMatrix> {
    check_module(g, m)?;
    let act = ActionIndex::new(m);
    let src = CochainSpace::new(1, g.dim(), m.dim(), Symmetry::None);
    let dst = CochainSpace::new(2, g.dim(), m.dim(), codomain);
    let s = Rational::from_integer(sign.into());
    Ok(build_operator(&src, &dst, |args, t, row| {
        for (p, k) in act.terms(args[0], t) {
            row.add(&[args[1]], *p, k);
        }
        for (p, k) in act.terms(args[1], t) {
            row.add(&[args[0]], *p, &(k * &s));
        }
    }))
}

/// `φ ↦ φ(x_1 x_2)` (or `φ([x_1, x_2])`) from `Hom(G, M)` to 2-cochains.
pub fn op_pullback_product(g: &AlgebraSpec, target_dim: usize, codomain: Symmetry) -> RatMatrix {
    let src = CochainSpace::new(1, g.dim(), target_dim, Symmetry::None);
    let dst = CochainSpace::new(2, g.dim(), target_dim, codomain);
    build_operator(&src, &dst, |args, t, row| {
        for (r, k) in g.product(args[0], args[1]) {
            row.add(&[*r], t, k);
        }
    })
}

/// `v ↦ (a ↦ a•v)` from `V` to `Hom(A, V)`.
pub fn op_module_to_hom(a: &AlgebraSpec, v: &ModuleActionSpec) -> Result<RatMatrix> {
    check_module(a, v)?;
    let act = ActionIndex::new(v);
    let src = CochainSpace::new(0, a.dim(), v.dim(), Symmetry::None);
    let dst = CochainSpace::new(1, a.dim(), v.dim(), Symmetry::None);
    Ok(build_operator(&src, &dst, |args, t, row| {
        for (p, k) in act.terms(args[0], t) {
            row.add(&[], *p, k);
        }
    }))
}

/// A multilinear map stored in the coordinates of its cochain space.
#[derive(Clone, Debug)]
pub struct MultilinearMap {
    pub space: CochainSpace,
    pub coords: Vec<Rational>,
}

impl MultilinearMap {
    pub fn new(space: CochainSpace, coords: Vec<Rational>) -> Result<MultilinearMap> {
        if coords.len() != space.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a space of dimension {}",
                coords.len(),
                space.dim()
            )));
        }
        Ok(MultilinearMap { space, coords })
    }

    pub fn from_sparse(space: CochainSpace, v: &SparseVec) -> MultilinearMap {
        let coords = crate::linalg::matrix::sparse_to_dense(v, space.dim());
        MultilinearMap { space, coords }
    }

    /// Value at basis arguments, as target coordinates.
    pub fn evaluate(&self, args: &[usize]) -> Result<Vec<Rational>> {
        if args.len() != self.space.arity || args.iter().any(|a| *a >= self.space.source_dim) {
            return Err(Error::DimensionMismatch(format!("arguments {args:?} do not fit the map")));
        }
        let td = self.space.target_dim;
        Ok(match self.space.resolve(args) {
            None => vec![Rational::zero(); td],
            Some((k, s)) => self.coords[k * td..(k + 1) * td]
                .iter()
                .map(|x| if s < 0 { -x.clone() } else { x.clone() })
                .collect(),
        })
    }
}

/// `{v : m_i v = 0 for all i}` for operators sharing a domain.
pub fn common_kernel(domain_dim: usize, ops: &[&RatMatrix]) -> Result<LinearSubspace> {
    if ops.is_empty() {
        return Ok(LinearSubspace::full(domain_dim));
    }
    if ops.iter().any(|m| m.ncols() != domain_dim) {
        return Err(Error::DimensionMismatch("operators with different domains".into()));
    }
    Ok(LinearSubspace::kernel(&RatMatrix::vstack(ops)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{regular, truncated_poly};
    use crate::linalg::int;
    use std::sync::Arc;

    #[test]
    fn coordinate_counts() {
        assert_eq!(CochainSpace::new(2, 3, 2, Symmetry::Alternating).dim(), 6);
        assert_eq!(CochainSpace::new(2, 3, 2, Symmetry::Symmetric).dim(), 12);
        assert_eq!(CochainSpace::new(3, 3, 1, Symmetry::None).dim(), 27);
        assert_eq!(CochainSpace::new(0, 3, 2, Symmetry::Alternating).dim(), 2);
    }

    #[test]
    fn alternating_resolution() {
        let s = CochainSpace::new(3, 4, 1, Symmetry::Alternating);
        assert_eq!(s.resolve(&[0, 1, 2]), Some((0, 1)));
        assert_eq!(s.resolve(&[1, 0, 2]), Some((0, -1)));
        assert_eq!(s.resolve(&[1, 1, 2]), None);
    }

    #[test]
    fn wp_on_unit() {
        let a = Arc::new(truncated_poly(2).unwrap());
        let v = regular(&a);
        let wp = op_wp(&a, &v, Symmetry::Symmetric, Symmetry::None).unwrap();
        let full = CochainSpace::new(3, 2, 2, Symmetry::None);
        let src = CochainSpace::new(2, 2, 2, Symmetry::Symmetric);
        let (row, _) = full.locate(&[0, 0, 0], 0).unwrap();
        let (col, _) = src.locate(&[0, 0], 0).unwrap();
        assert_eq!(wp.get(row, col), int(3));
        let r = wp.row(row);
        assert_eq!(r, vec![(col, int(3))]);
    }

    #[test]
    fn cauchy_small() {
        assert_eq!(young_cauchy3_dims(2, 2), (4, [0, 4, 0]));
        let (lhs, p) = young_cauchy3_dims(3, 4);
        assert_eq!(lhs, p.iter().sum::<u64>());
    }

    #[test]
    fn evaluate_signs() {
        let s = CochainSpace::new(2, 2, 1, Symmetry::Alternating);
        let f = MultilinearMap::new(s, vec![int(5)]).unwrap();
        assert_eq!(f.evaluate(&[1, 0]).unwrap(), vec![int(-5)]);
        assert_eq!(f.evaluate(&[1, 1]).unwrap(), vec![int(0)]);
        assert!(f.evaluate(&[2, 0]).is_err());
    }
}
