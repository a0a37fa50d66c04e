//! Depth-one graded Lie algebras `𝔤 = ⊕_{i≥-1} 𝔤_i`: Cartan prolongation, Spencer
//! cohomology, the symmetric analogue `SH^{1,2}`, gradings of `A_n` from a simple root,
//! and structure functions of `𝔤₋₁ ⊗ A` with values in `𝔤 ⊗ A`.
//!
//! Elements of `𝔤_i`, `i ≥ 1`, are maps `𝔤₋₁ → 𝔤_{i-1}`, and `[X, v] = X(v)` for
//! `v ∈ 𝔤₋₁`; brackets of non-negative components follow from the Jacobi identity:
//! `[X,Y](v) = [X,[Y,v]] - [Y,[X,v]]`.

use std::collections::BTreeMap;
use std::ops::Range;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{abelian, current_lie_algebra, regular, tensor_module, AlgebraKind, AlgebraSpec, ModuleActionSpec};
use crate::cohomology::{ce_differential, cohomology, cochains};
use crate::error::{Error, Result};
use crate::linalg::matrix::{axpy, sparse_collect, sparse_to_dense};
use crate::linalg::{int, solve, LinearSubspace, RatMatrix, Rational, SparseVec};
use crate::multilinear::{CochainSpace, Symmetry};
use crate::subspaces::{AssocSide, LieSide};
use crate::verify::{Check, SCHEMA};

/// Graded Lie algebra of depth one, realized up to its top component.
#[derive(Clone, Debug)]
pub struct GradedLie {
    pub name: String,
    /// `dims[i]` is `dim 𝔤_{i-1}`.
    pub dims: Vec<usize>,
    /// Bracket on the realized components; basis ordered by degree. Brackets landing
    /// above the top component are dropped.
    pub algebra: AlgebraSpec,
    /// True when all components above the top one vanish.
    pub complete: bool,
    pub warnings: Vec<String>,
}

impl GradedLie {
    pub fn top(&self) -> i64 {
        self.dims.len() as i64 - 2
    }

    pub fn block(&self, deg: i64) -> Range<usize> {
        if deg < -1 || deg > self.top() {
            return 0..0;
        }
        let start: usize = self.dims[..(deg + 1) as usize].iter().sum();
        start..start + self.dims[(deg + 1) as usize]
    }

    /// `dim 𝔤_deg`; an error when the component is beyond the realized range.
    pub fn dim_of(&self, deg: i64) -> Result<usize> {
        if deg < -1 {
            Ok(0)
        } else if deg <= self.top() {
            Ok(self.dims[(deg + 1) as usize])
        } else if self.complete {
            Ok(0)
        } else {
            Err(Error::InsufficientDegrees(format!("{} is realized only through degree {}", self.name, self.top())))
        }
    }

    pub fn degree_of(&self, index: usize) -> i64 {
        let mut acc = 0;
        for (i, d) in self.dims.iter().enumerate() {
            acc += d;
            if index < acc {
                return i as i64 - 1;
            }
        }
        self.top() + 1
    }

    pub fn n(&self) -> usize {
        self.dims[0]
    }

    /// `𝔤₋₁` as an abelian Lie algebra.
    pub fn minus_one(&self) -> AlgebraSpec {
        let mut l = abelian(self.n());
        l.name = format!("{}_-1", self.name);
        l.basis_labels = self.algebra.basis_labels[self.block(-1)].to_vec();
        l
    }

    /// `𝔤` as a module over `𝔤₋₁` via the bracket.
    pub fn minus_one_module(&self) -> Result<ModuleActionSpec> {
        let l = Arc::new(self.minus_one());
        let mut entries = Vec::new();
        for i in self.block(-1) {
            for p in 0..self.algebra.dim() {
                for (q, x) in self.algebra.product(i, p) {
                    entries.push((i, p, *q, x.clone()));
                }
            }
        }
        ModuleActionSpec::new(self.name.clone(), l, self.algebra.basis_labels.clone(), entries)
    }

    /// Brackets map `𝔤_i × 𝔤_j` into `𝔤_{i+j}`.
    pub fn respects_grading(&self) -> bool {
        let n = self.algebra.dim();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let target = self.degree_of(a) + self.degree_of(b);
                self.algebra.product(a, b).iter().all(|(c, _)| self.degree_of(*c) == target)
            })
        })
    }

    /// Jacobi identity on every triple whose brackets all stay inside the realized range.
    pub fn jacobi_holds(&self) -> bool {
        let n = self.algebra.dim();
        let top = self.top();
        let deg: Vec<i64> = (0..n).map(|i| self.degree_of(i)).collect();
        let br = |u: &SparseVec, b: usize| -> SparseVec {
            let mut out = Vec::new();
            for (a, x) in u {
                out = axpy(&out, x, self.algebra.product(*a, b));
            }
            out
        };
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let (x, y, z) = (deg[a], deg[b], deg[c]);
                    if x + y > top || y + z > top || x + z > top || x + y + z > top {
                        continue;
                    }
                    let t1 = br(self.algebra.product(a, b), c);
                    let t2 = br(self.algebra.product(b, c), a);
                    let t3 = br(self.algebra.product(c, a), b);
                    let s = axpy(&axpy(&t1, &int(1), &t2), &int(1), &t3);
                    if !s.is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Column `c` of `m` as a sparse vector.
fn column(m: &RatMatrix, c: usize) -> SparseVec {
    sparse_collect((0..m.nrows()).map(|r| (r, m.get(r, c))))
}

/// Coordinates of a map `𝔤₋₁ → W` given by its columns, at index `p * dim W + q`.
fn flatten(cols: &[SparseVec], w: usize) -> SparseVec {
    cols.iter().enumerate().flat_map(|(p, c)| c.iter().map(move |(q, x)| (p * w + q, x.clone()))).collect()
}

fn shift(v: &[(usize, Rational)], by: usize) -> SparseVec {
    v.iter().map(|(i, x)| (i + by, x.clone())).collect()
}

/// Cartan prolongation of `(𝔤₋₁, 𝔤₀)`, where `pair` is the `𝔤₀`-module `𝔤₋₁`, through
/// degree `max_degree`. Stops early once a component vanishes.
pub fn cartan_prolong(pair: &ModuleActionSpec, max_degree: usize) -> Result<GradedLie> {
    let g0 = &pair.algebra;
    if g0.kind != AlgebraKind::Lie {
        return Err(Error::Precondition(format!("{} is not a Lie algebra", g0.name)));
    }
    if max_degree < 1 {
        return Err(Error::Precondition("max_degree must be at least 1".into()));
    }
    let n = pair.dim();
    let mut warnings = Vec::new();
    let flat0 = LinearSubspace::span(n * n, (0..g0.dim()).map(|i| {
        let m = pair.action_matrix(i);
        flatten(&(0..n).map(|c| column(&m, c)).collect::<Vec<_>>(), n)
    }));
    if flat0.dim() < g0.dim() {
        warnings.push(format!("{} does not act faithfully on {}", g0.name, pair.name));
    }

    // maps[j][a]: element a of 𝔤_j as a dim(𝔤_{j-1}) x n matrix, column v = [a, e_v].
    let mut maps: Vec<Vec<RatMatrix>> = vec![(0..g0.dim()).map(|i| pair.action_matrix(i)).collect()];
    let mut complete = false;
    for i in 1..=max_degree {
        let prev = &maps[i - 1];
        let d = prev.len();
        let below = if i == 1 { n } else { maps[i - 2].len() };
        let mut rows = Vec::new();
        for v in 0..n {
            for w in v + 1..n {
                for r in 0..below {
                    let mut row = Vec::new();
                    for (q, b) in prev.iter().enumerate() {
                        row.push((v * d + q, b.get(r, w)));
                        row.push((w * d + q, -b.get(r, v)));
                    }
                    rows.push(sparse_collect(row));
                }
            }
        }
        let ker = LinearSubspace::kernel(&RatMatrix::from_sparse_rows(n * d, rows));
        if ker.dim() == 0 {
            complete = true;
            break;
        }
        let comp = ker
            .basis()
            .iter()
            .map(|c| {
                let triplets = c.iter().map(|(k, x)| (k % d, k / d, x.clone()));
                RatMatrix::from_triplets(d, n, triplets)
            })
            .collect();
        maps.push(comp);
    }

    let mut dims = vec![n];
    dims.extend(maps.iter().map(|m| m.len()));
    let labels = prolong_labels(pair, &dims);
    let name = format!("prolong({})", g0.name);
    let algebra = assemble(&name, labels, g0, &maps, &dims)?;
    Ok(GradedLie { name, dims, algebra, complete, warnings })
}

fn prolong_labels(pair: &ModuleActionSpec, dims: &[usize]) -> Vec<String> {
    let mut labels: Vec<String> = pair.basis_labels.iter().map(|s| format!("v:{s}")).collect();
    labels.extend(pair.algebra.basis_labels.iter().cloned());
    for (j, d) in dims.iter().enumerate().skip(2) {
        labels.extend((0..*d).map(|k| format!("g{}_{}", j - 1, k)));
    }
    labels
}

/// Bracket table of the realized prolongation.
#[allow(clippy::needless_range_loop)]
fn assemble(name: &str, labels: Vec<String>, g0: &AlgebraSpec, maps: &[Vec<RatMatrix>], dims: &[usize]) -> Result<AlgebraSpec> {
    let n = dims[0];
    let total: usize = dims.iter().sum();
    let top = dims.len() as i64 - 2;
    let offset = |deg: i64| -> usize { dims[..(deg + 1) as usize].iter().sum() };
    let mut table: Vec<Vec<SparseVec>> = vec![vec![Vec::new(); total]; total];

    for (j, comp) in maps.iter().enumerate() {
        let j = j as i64;
        for (a, m) in comp.iter().enumerate() {
            let ga = offset(j) + a;
            for w in 0..n {
                let col = shift(&column(m, w), offset(j - 1));
                table[w][ga] = col.iter().map(|(i, x)| (*i, -x.clone())).collect();
                table[ga][w] = col;
            }
        }
    }
    for a in 0..g0.dim() {
        for b in 0..g0.dim() {
            table[offset(0) + a][offset(0) + b] = shift(g0.product(a, b), offset(0));
        }
    }

    let bracket = |table: &Vec<Vec<SparseVec>>, a: usize, u: &SparseVec| -> SparseVec {
        let mut out = Vec::new();
        for (b, x) in u {
            out = axpy(&out, x, &table[a][*b]);
        }
        out
    };
    for t in 1..=top {
        let d = dims[t as usize];
        let basis = RatMatrix::from_columns(
            n * d,
            maps[t as usize].iter().map(|m| flatten(&(0..n).map(|c| column(m, c)).collect::<Vec<_>>(), d)).collect(),
        );
        for i in 0..=t / 2 {
            let j = t - i;
            for a in 0..dims[(i + 1) as usize] {
                for b in 0..dims[(j + 1) as usize] {
                    let (ga, gb) = (offset(i) + a, offset(j) + b);
                    if i == j && b <= a {
                        continue;
                    }
                    let cols: Vec<SparseVec> = (0..n)
                        .map(|v| {
                            let x = bracket(&table, ga, &table[gb][v]);
                            let y = bracket(&table, gb, &table[ga][v]);
                            let z = axpy(&x, &int(-1), &y);
                            z.into_iter().map(|(k, c)| (k - offset(t - 1), c)).collect()
                        })
                        .collect();
                    let rhs = sparse_to_dense(&flatten(&cols, d), n * d);
                    let coords = solve(&basis, &rhs)?
                        .ok_or_else(|| Error::Invalid(format!("{name}: bracket of degrees {i}, {j} leaves 𝔤_{t}")))?;
                    let v: SparseVec =
                        sparse_collect(coords.into_iter().enumerate().map(|(k, c)| (offset(t) + k, c)));
                    table[gb][ga] = v.iter().map(|(k, c)| (*k, -c.clone())).collect();
                    table[ga][gb] = v;
                }
            }
        }
    }

    let mut entries = Vec::new();
    for (a, row) in table.into_iter().enumerate() {
        for (b, v) in row.into_iter().enumerate() {
            for (c, x) in v {
                entries.push((a, b, c, x));
            }
        }
    }
    AlgebraSpec::new(name, AlgebraKind::Lie, labels, entries, None)
}

/// `(𝔤₋₁, 𝔤₀) = (K^n, gl(n))` with the standard action.
pub fn gl_pair(n: usize) -> Result<ModuleActionSpec> {
    let g = Arc::new(crate::algebra::gl(n)?);
    let mats: Vec<RatMatrix> = (0..n).flat_map(|i| (0..n).map(move |j| crate::algebra::elementary(n, i, j))).collect();
    crate::algebra::module_from_matrices(&format!("K^{n}"), &g, (0..n).map(|i| format!("x{}", i + 1)).collect(), &mats)
}

/// Transitivity at degrees 0 and 1: no nonzero `x ∈ 𝔤_i` with `[x, 𝔤₋₁] = 0`.
/// Degrees above a complete algebra's top are vacuously transitive; unrealized ones are skipped.
pub fn check_transitivity(g: &GradedLie) -> Vec<(i64, bool)> {
    let mut out = Vec::new();
    for deg in 0..=1 {
        if deg > g.top() {
            if g.complete {
                out.push((deg, true));
            }
            continue;
        }
        let block = g.block(deg);
        let mut rows: Vec<SparseVec> = Vec::new();
        for v in g.block(-1) {
            for c in 0..g.algebra.dim() {
                rows.push(sparse_collect(block.clone().map(|a| (a - block.start, g.algebra.coeff(a, v, c)))));
            }
        }
        let ker = LinearSubspace::kernel(&RatMatrix::from_sparse_rows(block.len(), rows));
        out.push((deg, ker.dim() == 0));
    }
    out
}

/// Root datum of a classical root system: roots in simple-root coordinates, Cartan
/// integers `⟨α_k, α_m^∨⟩` and Chevalley constants `N_{α,α'}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatum {
    pub kind: String,
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    /// Indices into `roots` of the simple roots.
    pub simple: Vec<usize>,
    pub cartan: Vec<Vec<i64>>,
    /// `(α, α', N_{α,α'})` for every ordered pair with `α + α'` a root.
    pub structure: Vec<(usize, usize, i64)>,
}

impl RootDatum {
    /// Type `A_n`, i.e. `sl(n+1)`, with constants read off elementary matrices:
    /// `e_{ε_i - ε_j} = E_ij` and `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj`.
    pub fn a(n: usize) -> Result<RootDatum> {
        if n == 0 {
            return Err(Error::Invalid("A_n needs n >= 1".into()));
        }
        let mut pairs = Vec::new();
        for i in 0..=n {
            for j in i + 1..=n {
                pairs.push((i, j));
            }
        }
        let positive = pairs.len();
        for k in 0..positive {
            let (i, j) = pairs[k];
            pairs.push((j, i));
        }
        let coords = |(i, j): (usize, usize)| -> Vec<i64> {
            let (lo, hi, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
            (0..n).map(|k| if k >= lo && k < hi { s } else { 0 }).collect()
        };
        let roots: Vec<Vec<i64>> = pairs.iter().map(|p| coords(*p)).collect();
        let simple = (0..n).map(|k| pairs.iter().position(|p| *p == (k, k + 1)).expect("simple root")).collect();
        let cartan = (0..n)
            .map(|k| {
                (0..n)
                    .map(|m| match k.abs_diff(m) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        let mut structure = Vec::new();
        for (a, &(i, j)) in pairs.iter().enumerate() {
            for (b, &(k, l)) in pairs.iter().enumerate() {
                if j == k && i != l {
                    structure.push((a, b, 1));
                } else if l == i && k != j {
                    structure.push((a, b, -1));
                }
            }
        }
        Ok(RootDatum { kind: "A".into(), rank: n, roots, simple, cartan, structure })
    }

    /// Root datum by type letter and rank; only type `A` is generated.
    pub fn classical(kind: &str, rank: usize) -> Result<RootDatum> {
        match kind {
            "A" => RootDatum::a(rank),
            "B" | "C" | "D" => Err(Error::Unsupported(format!("root datum of type {kind}"))),
            _ => Err(Error::UnknownName(format!("root system type {kind}"))),
        }
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == coords)
    }

    /// `r(h_m) = ⟨r, α_m^∨⟩`.
    pub fn pairing(&self, r: usize, m: usize) -> i64 {
        self.roots[r].iter().enumerate().map(|(k, c)| c * self.cartan[k][m]).sum()
    }

    pub fn n_const(&self, a: usize, b: usize) -> i64 {
        self.structure.iter().find(|(x, y, _)| *x == a && *y == b).map(|t| t.2).unwrap_or(0)
    }

    fn sum_root(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.root_index(&s)
    }

    /// Replaces `N_{α,α'}` (and `N_{α',α} = -N_{α,α'}`).
    pub fn with_overrides(&self, overrides: &[(usize, usize, i64)]) -> Result<RootDatum> {
        let mut out = self.clone();
        for &(a, b, v) in overrides {
            if a >= self.roots.len() || b >= self.roots.len() || self.sum_root(a, b).is_none() {
                return Err(Error::Invalid(format!("N override ({a}, {b}): the sum is not a root")));
            }
            out.structure.retain(|(x, y, _)| !((*x == a && *y == b) || (*x == b && *y == a)));
            out.structure.push((a, b, v));
            out.structure.push((b, a, -v));
        }
        out.structure.sort();
        Ok(out)
    }

    pub fn root_label(&self, r: usize) -> String {
        let c: Vec<String> = self.roots[r].iter().map(|x| x.to_string()).collect();
        format!("e({})", c.join(","))
    }

    /// The Lie algebra in the basis `h_1..h_rank, e_r (r in root order)`. Errors if the
    /// constants violate the Jacobi identity.
    pub fn lie_algebra(&self) -> Result<AlgebraSpec> {
        let rk = self.rank;
        let mut entries = Vec::new();
        for m in 0..rk {
            for r in 0..self.roots.len() {
                let c = self.pairing(r, m);
                if c != 0 {
                    entries.push((m, rk + r, rk + r, int(c)));
                    entries.push((rk + r, m, rk + r, int(-c)));
                }
            }
        }
        for a in 0..self.roots.len() {
            let neg: Vec<i64> = self.roots[a].iter().map(|x| -x).collect();
            if let Some(b) = self.root_index(&neg) {
                // [e_α, e_{-α}] = h_α, whose simple-coroot coordinates equal α's in the simply-laced case.
                for (m, c) in self.roots[a].iter().enumerate() {
                    if *c != 0 {
                        entries.push((rk + a, rk + b, m, int(*c)));
                    }
                }
            }
        }
        for &(a, b, v) in &self.structure {
            if let Some(s) = self.sum_root(a, b) {
                entries.push((rk + a, rk + b, rk + s, int(v)));
            }
        }
        let mut labels: Vec<String> = (0..rk).map(|m| format!("h{}", m + 1)).collect();
        labels.extend((0..self.roots.len()).map(|r| self.root_label(r)));
        let g = AlgebraSpec::new(format!("{}{}", self.kind, rk), AlgebraKind::Lie, labels, entries, None)?;
        let bad = g.validate();
        if let Some(v) = bad.first() {
            return Err(Error::Invalid(format!("root datum constants are inconsistent: {v}")));
        }
        Ok(g)
    }
}

/// Length-one grading of a root datum's Lie algebra by the coefficient of a simple root.
#[derive(Clone, Debug)]
pub struct RootGrading {
    pub datum: RootDatum,
    /// Index into `datum.simple`.
    pub beta: usize,
    pub minus: Vec<usize>,
    pub zero: Vec<usize>,
    pub plus: Vec<usize>,
    /// Basis: `e_r (r ∈ R₋₁)`, then `h_1..h_rank, e_α (α ∈ R₀)`, then `e_r (r ∈ R₁)`.
    pub graded: GradedLie,
}

pub fn grading_from_root(rd: &RootDatum, beta: usize) -> Result<RootGrading> {
    if beta >= rd.rank {
        return Err(Error::Invalid(format!("simple root index {beta} outside rank {}", rd.rank)));
    }
    let (mut minus, mut zero, mut plus) = (Vec::new(), Vec::new(), Vec::new());
    for (r, c) in rd.roots.iter().enumerate() {
        match c[beta] {
            -1 => minus.push(r),
            0 => zero.push(r),
            1 => plus.push(r),
            _ => {
                return Err(Error::Precondition(format!(
                    "simple root {} enters {} with coefficient {}",
                    beta + 1,
                    rd.root_label(r),
                    c[beta]
                )))
            }
        }
    }
    let g = rd.lie_algebra()?;
    let rk = rd.rank;
    let mut order: Vec<usize> = minus.iter().map(|r| rk + r).collect();
    order.extend(0..rk);
    order.extend(zero.iter().map(|r| rk + r));
    order.extend(plus.iter().map(|r| rk + r));
    let mut pos = vec![0; order.len()];
    for (new, old) in order.iter().enumerate() {
        pos[*old] = new;
    }
    let entries = g.entries().into_iter().map(|(a, b, c, x)| (pos[a], pos[b], pos[c], x)).collect();
    let labels = order.iter().map(|o| g.basis_labels[*o].clone()).collect();
    let name = format!("{}{}/α{}", rd.kind, rk, beta + 1);
    let algebra = AlgebraSpec::new(name.clone(), AlgebraKind::Lie, labels, entries, None)?;
    let dims = vec![minus.len(), rk + zero.len(), plus.len()];
    let graded = GradedLie { name, dims, algebra, complete: true, warnings: Vec::new() };
    Ok(RootGrading { datum: rd.clone(), beta, minus, zero, plus, graded })
}

/// `H^{k,2}`: classes of cocycles in `C²(𝔤₋₁, 𝔤_{k-2})` modulo `d Hom(𝔤₋₁, 𝔤_{k-1})`,
/// in the coordinates of `C²(𝔤₋₁, 𝔤)`.
#[derive(Clone, Debug)]
pub struct SpencerComponent {
    pub k: usize,
    pub dim: usize,
    pub cocycles: LinearSubspace,
    pub coboundaries: LinearSubspace,
}

fn target_block(space: &CochainSpace, targets: Range<usize>) -> LinearSubspace {
    let td = space.target_dim;
    LinearSubspace::span(
        space.dim(),
        (0..space.tuples().len()).flat_map(|k| targets.clone().map(move |t| vec![(k * td + t, int(1))])),
    )
}

pub fn spencer_h2(g: &GradedLie, k: usize) -> Result<SpencerComponent> {
    if k == 0 {
        return Err(Error::Precondition("Spencer degree k must be at least 1".into()));
    }
    let k = k as i64;
    g.dim_of(k - 1)?;
    let l = g.minus_one();
    let m = g.minus_one_module()?;
    let c1 = cochains(1, &l, &m);
    let c2 = cochains(2, &l, &m);
    let chains = target_block(&c2, g.block(k - 2));
    let cocycles = chains.restricted_kernel(&ce_differential(2, &l, &m)?)?;
    let coboundaries = target_block(&c1, g.block(k - 1)).map(&ce_differential(1, &l, &m)?)?;
    let dim = cocycles.quotient_dim(&coboundaries)?;
    Ok(SpencerComponent { k: k as usize, dim, cocycles, coboundaries })
}

/// Degrees `k` with a possibly nonzero `H^{k,2}` on a complete algebra.
fn spencer_range(g: &GradedLie) -> Result<std::ops::RangeInclusive<usize>> {
    if !g.complete {
        return Err(Error::InsufficientDegrees(format!("{} is a truncation", g.name)));
    }
    Ok(1..=(g.top() + 2) as usize)
}

/// The operator `T: Hom(𝔤₋₁, 𝔤₀) → S²(𝔤₋₁, 𝔤₋₁)`, `(Tψ)(x,y) = [x,ψ(y)] + [y,ψ(x)]`.
/// Domain coordinates: `p * dim 𝔤₀ + q` for `ψ(e_p) = b_q`.
pub fn operator_t(g: &GradedLie) -> Result<RatMatrix> {
    let n = g.n();
    let d0 = g.dim_of(0)?;
    let z = g.block(0).start;
    let codomain = CochainSpace::new(2, n, n, Symmetry::Symmetric);
    let mut cols = Vec::with_capacity(n * d0);
    for p in 0..n {
        for q in 0..d0 {
            let mut terms = Vec::new();
            for x in 0..n {
                // ψ is supported on e_p, so (Tψ)(x,p) = [e_x, b_q] (doubled when x = p).
                for (t, c) in g.algebra.product(x, z + q) {
                    if let Some((idx, _)) = codomain.locate(&[x, p], *t) {
                        terms.push((idx, if x == p { c * int(2) } else { c.clone() }));
                    }
                }
            }
            cols.push(sparse_collect(terms));
        }
    }
    Ok(RatMatrix::from_columns(codomain.dim(), cols))
}

#[derive(Clone, Debug)]
pub struct SymSpencer {
    pub dim: usize,
    pub ker_t: LinearSubspace,
    pub image: LinearSubspace,
}

/// `SH^{1,2} = S²(𝔤₋₁, 𝔤₋₁) / Im T` together with `Ker T`.
pub fn sym_spencer_sh12(g: &GradedLie) -> Result<SymSpencer> {
    let t = operator_t(g)?;
    let image = LinearSubspace::image(&t);
    let dim = t.nrows() - image.dim();
    Ok(SymSpencer { dim, ker_t: LinearSubspace::kernel(&t), image })
}

/// Solution space of the three root relation families for `Ker T`, in the coordinates
/// of `operator_t` on the grading (`λ^r_α` at `h_α`, `μ^r_α` at `e_α`).
pub fn ker_t_root_relations(rd: &RootDatum, beta: usize) -> Result<LinearSubspace> {
    let gr = grading_from_root(rd, beta)?;
    let rk = rd.rank;
    let d0 = rk + gr.zero.len();
    let nvars = gr.minus.len() * d0;
    let lam = |p: usize, m: usize| p * d0 + m;
    let mu = |p: usize, a: usize| p * d0 + rk + a;
    let diff = |r: usize, s: usize| -> Vec<i64> { rd.roots[r].iter().zip(&rd.roots[s]).map(|(x, y)| x - y).collect() };
    let sum = |r: usize, a: usize| -> Vec<i64> { rd.roots[r].iter().zip(&rd.roots[a]).map(|(x, y)| x + y).collect() };
    let mut rows = Vec::new();
    for (pr, &r) in gr.minus.iter().enumerate() {
        for (ps, &s) in gr.minus.iter().enumerate() {
            let pairing_row = |out: &mut Vec<(usize, Rational)>| {
                for m in 0..rk {
                    out.push((lam(ps, m), int(rd.pairing(r, m))));
                }
            };
            let rs = diff(r, s);
            match rd.root_index(&rs) {
                Some(a) if gr.zero.contains(&a) => {
                    let ai = gr.zero.iter().position(|z| *z == a).expect("in R0");
                    let mut row = Vec::new();
                    pairing_row(&mut row);
                    row.push((mu(pr, ai), int(-rd.n_const(s, a))));
                    rows.push(sparse_collect(row));
                }
                Some(_) => {}
                None => {
                    let mut row = Vec::new();
                    pairing_row(&mut row);
                    rows.push(sparse_collect(row));
                }
            }
            for &t in gr.minus.iter().filter(|t| **t != r && **t != s) {
                let mut row = Vec::new();
                for (ai, &a) in gr.zero.iter().enumerate() {
                    if rd.root_index(&sum(r, a)) == Some(t) {
                        row.push((mu(ps, ai), int(rd.n_const(r, a))));
                    }
                    if rd.root_index(&sum(s, a)) == Some(t) {
                        row.push((mu(pr, ai), int(rd.n_const(s, a))));
                    }
                }
                if !row.is_empty() {
                    rows.push(sparse_collect(row));
                }
            }
        }
    }
    Ok(LinearSubspace::kernel(&RatMatrix::from_sparse_rows(nvars, rows)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDims {
    pub degree: i64,
    pub base: usize,
    pub tensor: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProlongTensorReport {
    pub schema: u32,
    pub pair: String,
    pub assoc: String,
    pub degrees: Vec<DegreeDims>,
    #[serde(rename = "match")]
    pub matched: bool,
}

/// Compares `cartan_prolong(𝔤₋₁⊗A, 𝔤₀⊗A)` with `cartan_prolong(𝔤₋₁, 𝔤₀) ⊗ A` degreewise.
pub fn verify_prolong_tensor(pair: &ModuleActionSpec, a: &AlgebraSpec, max_degree: usize) -> Result<ProlongTensorReport> {
    let base = cartan_prolong(pair, max_degree)?;
    let a = Arc::new(a.clone());
    let tpair = tensor_module(pair, &regular(&a))?;
    let tensor = cartan_prolong(&tpair, max_degree)?;
    let dim_at = |g: &GradedLie, deg: i64| if deg <= g.top() { g.dims[(deg + 1) as usize] } else { 0 };
    let degrees: Vec<DegreeDims> = (-1..=max_degree as i64)
        .map(|d| DegreeDims { degree: d, base: dim_at(&base, d), tensor: dim_at(&tensor, d) })
        .collect();
    let matched = degrees.iter().all(|d| d.tensor == d.base * a.dim());
    Ok(ProlongTensorReport { schema: SCHEMA, pair: pair.algebra.name.clone(), assoc: a.name.clone(), degrees, matched })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopSummand {
    pub label: String,
    /// `almost induced`, `induced`, or `order 1`.
    pub kind: String,
    pub left: usize,
    pub right: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopReport {
    pub schema: u32,
    pub grading: String,
    pub assoc: String,
    /// `(k, dim H^{k,2})`.
    pub spencer: Vec<(usize, usize)>,
    pub summands: Vec<LoopSummand>,
    pub formula_dim: usize,
    pub direct_dim: usize,
    pub checks: Vec<Check>,
    #[serde(rename = "match")]
    pub matched: bool,
}

fn loop_summand(label: &str, kind: &str, left: usize, right: usize) -> LoopSummand {
    LoopSummand { label: label.into(), kind: kind.into(), left, right, dim: left * right }
}

/// Five-summand decomposition of `H²(𝔤₋₁⊗A, 𝔤⊗A)` for a length-one grading, against
/// the cohomology of the current algebra.
pub fn loop_structure_functions(g: &GradedLie, a: &AlgebraSpec) -> Result<LoopReport> {
    if !g.complete || g.top() > 1 {
        return Err(Error::Unsupported(format!("{} is not a grading of length one", g.name)));
    }
    let mut checks = Vec::new();
    let check = |name: &str, holds: bool| Check { name: name.into(), holds, required: true };
    let l = g.minus_one();
    let m = g.minus_one_module()?;
    let n = g.n();

    let spencer: Vec<(usize, usize)> =
        spencer_range(g)?.map(|k| spencer_h2(g, k).map(|s| (k, s.dim))).collect::<Result<_>>()?;
    let h12 = spencer[0].1;
    let higher: usize = spencer[1..].iter().map(|s| s.1).sum();
    let b12 = spencer_h2(g, 1)?.coboundaries.dim();
    let sh12 = sym_spencer_sh12(g)?.dim;

    let inv = m.invariants();
    checks.push(check("invariants of g_-1 in g equal g_-1", inv == LinearSubspace::span(g.algebra.dim(), g.block(-1).map(|i| vec![(i, int(1))]))));
    let ls = LieSide::new(&l, &m)?;
    let (hn, hd) = ls.h_script()?;
    checks.push(check("H_script(g_-1, g) has dim H^{1,2}", hn.quotient_dim(&hd)? == h12));
    let (sn, sd) = ls.sh2()?;
    checks.push(check("SH2(g_-1, g) has dim SH^{1,2}", sn.quotient_dim(&sd)? == sh12));
    checks.push(check("H^{k,2} = 0 for k >= 4", spencer.iter().all(|(k, d)| *k < 4 || *d == 0)));
    let total_spencer: usize = spencer.iter().map(|s| s.1).sum();
    checks.push(check("sum of H^{k,2} equals H2(g_-1, g)", total_spencer == cohomology(2, &l, &m)?.dim));

    let a = Arc::new(a.clone());
    let reg = regular(&a);
    let as_ = AssocSide::new(&a, &reg)?;
    let s2a = as_.s2.dim();
    let q_s2 = LinearSubspace::full(s2a).quotient_dim(&as_.module_in_s2()?.sum(&as_.der_in_s2()?)?)?;
    let anti = as_.antisym_image()?;
    let q_c2 = LinearSubspace::full(as_.c2.dim()).quotient_dim(&anti)?;
    let s2g = n * (n + 1) / 2 * n;
    let summands = vec![
        loop_summand("H^{1,2}⊗S2(A,A)", "almost induced", h12, s2a),
        loop_summand("(⊕_{k>1} H^{k,2})⊗A", "induced", higher, a.dim()),
        loop_summand("B^{1,2}⊗S2(A,A)/(A+Der A)", "order 1", b12, q_s2),
        loop_summand("S2(g_-1,g_-1)⊗C2(A,A)/{aβ(b)-bβ(a)}", "order 1", s2g, q_c2),
        loop_summand("SH^{1,2}⊗{aβ(b)-bβ(a)}", "order 1", sh12, anti.dim()),
    ];
    let formula_dim = summands.iter().map(|s| s.dim).sum();

    let cur = current_lie_algebra(&l, &a)?;
    let mv = tensor_module(&m, &reg)?;
    let direct_dim = cohomology(2, &cur, &mv)?.dim;
    let matched = formula_dim == direct_dim && checks.iter().all(|c| c.holds || !c.required);
    Ok(LoopReport {
        schema: SCHEMA,
        grading: g.name.clone(),
        assoc: a.name.clone(),
        spencer,
        summands,
        formula_dim,
        direct_dim,
        checks,
        matched,
    })
}

/// Nonzero Chevalley constants as a map, for display.
pub fn structure_map(rd: &RootDatum) -> BTreeMap<(String, String), i64> {
    rd.structure.iter().map(|(a, b, v)| ((rd.root_label(*a), rd.root_label(*b)), *v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w1_components_are_one_dimensional() {
        let g = cartan_prolong(&gl_pair(1).unwrap(), 4).unwrap();
        assert_eq!(g.dims, vec![1, 1, 1, 1, 1, 1]);
        assert!(!g.complete);
        assert!(g.jacobi_holds());
        assert!(g.respects_grading());
    }

    #[test]
    fn w2_degree_one() {
        let g = cartan_prolong(&gl_pair(2).unwrap(), 2).unwrap();
        assert_eq!(g.dims, vec![2, 4, 6, 8]);
        assert!(g.jacobi_holds());
        assert_eq!(check_transitivity(&g), vec![(0, true), (1, true)]);
    }

    #[test]
    fn sl_gradings() {
        for (n, beta, dims) in [(1, 0, vec![1, 1, 1]), (2, 0, vec![2, 4, 2]), (3, 1, vec![4, 7, 4])] {
            let gr = grading_from_root(&RootDatum::a(n).unwrap(), beta).unwrap();
            assert_eq!(gr.graded.dims, dims);
            assert!(gr.graded.respects_grading());
            assert!(gr.graded.algebra.validate().is_empty());
        }
    }

    #[test]
    fn root_algebra_matches_sl() {
        let g = RootDatum::a(2).unwrap().lie_algebra().unwrap();
        assert_eq!(g.dim(), 8);
        assert_eq!(g.derived().dim(), 8);
    }

    #[test]
    fn bad_override_is_rejected() {
        let rd = RootDatum::a(2).unwrap();
        let (a, b, v) = rd.structure[0];
        let bad = rd.with_overrides(&[(a, b, 2 * v)]).unwrap();
        assert!(bad.lie_algebra().is_err());
    }

    #[test]
    fn non_faithful_pair_fails_transitivity() {
        // gl(1) ⊕ K acting on K^1, the second summand by zero.
        let g0 = Arc::new(abelian(2));
        let pair = crate::algebra::module_from_matrices(
            "K^1",
            &g0,
            vec!["x1".into()],
            &[RatMatrix::identity(1), RatMatrix::zeros(1, 1)],
        )
        .unwrap();
        let g = cartan_prolong(&pair, 1).unwrap();
        assert!(!g.warnings.is_empty());
        assert_eq!(check_transitivity(&g)[0], (0, false));
    }

    #[test]
    fn gl_serre_vanishing_at_k1() {
        for n in 2..=3 {
            let g = cartan_prolong(&gl_pair(n).unwrap(), 1).unwrap();
            assert_eq!(spencer_h2(&g, 1).unwrap().dim, 0);
        }
    }

    #[test]
    fn root_relations_cut_out_ker_t() {
        for (n, b) in [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)] {
            let rd = RootDatum::a(n).unwrap();
            let direct = sym_spencer_sh12(&grading_from_root(&rd, b).unwrap().graded).unwrap().ker_t;
            assert_eq!(ker_t_root_relations(&rd, b).unwrap(), direct, "A{n} beta {b}");
        }
    }
}
