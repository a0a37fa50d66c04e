//! Finite-dimensional Lie and commutative associative unital algebras given by
//! structure constants, their modules, current algebras and a small catalog.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::matrix::{axpy, sparse_collect, sparse_get};
use crate::linalg::{int, solve, LinearSubspace, RatMatrix, Rational, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    Lie,
    AssocCommUnital,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Lie => write!(f, "lie"),
            AlgebraKind::AssocCommUnital => write!(f, "assoc-comm-unital"),
        }
    }
}

/// Algebra with basis `e_0..e_{n-1}` and product `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    pub name: String,
    pub kind: AlgebraKind,
    pub basis_labels: Vec<String>,
    pub unit_index: Option<usize>,
    table: Vec<SparseVec>,
}

/// Module with `e_i • m_p = Σ_q a[i][p][q] m_q`.
#[derive(Clone, Debug)]
pub struct ModuleActionSpec {
    pub name: String,
    pub algebra: Arc<AlgebraSpec>,
    pub basis_labels: Vec<String>,
    table: Vec<SparseVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    IndexOutOfRange { what: String },
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
    Commutativity { i: usize, j: usize },
    Associativity { i: usize, j: usize, k: usize },
    MissingUnit,
    Unit { j: usize },
    ModuleBracket { i: usize, j: usize, p: usize },
    ModuleAssociativity { i: usize, j: usize, p: usize },
    ModuleUnit { p: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IndexOutOfRange { what } => write!(f, "index out of range: {what}"),
            Violation::Antisymmetry { i, j } => write!(f, "antisymmetry fails at ({i},{j})"),
            Violation::Jacobi { i, j, k } => write!(f, "Jacobi identity fails at ({i},{j},{k})"),
            Violation::Commutativity { i, j } => write!(f, "commutativity fails at ({i},{j})"),
            Violation::Associativity { i, j, k } => {
                write!(f, "associativity fails at ({i},{j},{k})")
            }
            Violation::MissingUnit => write!(f, "no unit index given"),
            Violation::Unit { j } => write!(f, "unit does not act as identity on e_{j}"),
            Violation::ModuleBracket { i, j, p } => {
                write!(f, "[e_{i},e_{j}] • m_{p} differs from the commutator of actions")
            }
            Violation::ModuleAssociativity { i, j, p } => {
                write!(f, "(e_{i} e_{j}) • m_{p} differs from e_{i} • (e_{j} • m_{p})")
            }
            Violation::ModuleUnit { p } => write!(f, "unit does not fix m_{p}"),
        }
    }
}

fn check_entries(dim_a: usize, dim_b: usize, dim_c: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<()> {
    for (i, j, k, _) in entries {
        if *i >= dim_a || *j >= dim_b || *k >= dim_c {
            return Err(Error::Invalid(format!(
                "entry ({i},{j},{k}) outside {dim_a}x{dim_b}x{dim_c}"
            )));
        }
    }
    Ok(())
}

fn build_table(rows: usize, cols: usize, entries: Vec<(usize, usize, usize, Rational)>) -> Vec<SparseVec> {
    let mut terms: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows * cols];
    for (i, j, k, x) in entries {
        terms[i * cols + j].push((k, x));
    }
    terms.into_iter().map(sparse_collect).collect()
}

impl AlgebraSpec {
    pub fn new(
        name: impl Into<String>,
        kind: AlgebraKind,
        basis_labels: Vec<String>,
        entries: Vec<(usize, usize, usize, Rational)>,
        unit_index: Option<usize>,
    ) -> Result<AlgebraSpec> {
        let n = basis_labels.len();
        check_entries(n, n, n, &entries)?;
        if let Some(u) = unit_index {
            if u >= n {
                return Err(Error::Invalid(format!("unit index {u} outside dimension {n}")));
            }
        }
        Ok(AlgebraSpec {
            name: name.into(),
            kind,
            basis_labels,
            unit_index,
            table: build_table(n, n, entries),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    /// `e_i e_j` (or `[e_i, e_j]`) as a sparse coordinate vector.
    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Rational {
        sparse_get(self.product(i, j), k)
    }

    /// Nonzero structure constants in `(i, j, k)` order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, x) in self.product(i, j) {
                    out.push((i, j, *k, x.clone()));
                }
            }
        }
        out
    }

    /// Equality of dimension, kind and structure constants; labels and names are ignored.
    pub fn same_structure(&self, other: &AlgebraSpec) -> bool {
        self.kind == other.kind && self.dim() == other.dim() && self.table == other.table
    }

    /// Bilinear product of coordinate vectors.
    pub fn mul(&self, u: &[(usize, Rational)], v: &[(usize, Rational)]) -> SparseVec {
        let mut acc = Vec::new();
        for (i, x) in u {
            for (j, y) in v {
                acc = axpy(&acc, &(x * y), self.product(*i, *j));
            }
        }
        acc
    }

    /// Matrix of left multiplication by `e_i` (column `j` is `e_i e_j`).
    pub fn left_mult(&self, i: usize) -> RatMatrix {
        RatMatrix::from_columns(self.dim(), (0..self.dim()).map(|j| self.product(i, j).clone()).collect())
    }

    /// Span of all products `e_i e_j`; for a Lie algebra this is `[L, L]`.
    pub fn derived(&self) -> LinearSubspace {
        LinearSubspace::span(self.dim(), self.table.iter().cloned())
    }

    /// `{x : x e_j = 0 for all j}`; for a Lie algebra this is the center.
    pub fn annihilator(&self) -> LinearSubspace {
        let n = self.dim();
        let rows: Vec<SparseVec> = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| sparse_collect((0..n).map(|i| (i, self.coeff(i, j, k)))))
            .collect();
        LinearSubspace::kernel(&RatMatrix::from_sparse_rows(n, rows))
    }

    pub fn validate(&self) -> Vec<Violation> {
        let n = self.dim();
        let mut out = Vec::new();
        match self.kind {
            AlgebraKind::Lie => {
                for i in 0..n {
                    for j in i..n {
                        let s = axpy(self.product(i, j), &Rational::one(), self.product(j, i));
                        if !s.is_empty() {
                            out.push(Violation::Antisymmetry { i, j });
                        }
                    }
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        for k in (j + 1)..n {
                            if !self.jacobiator(i, j, k).is_empty() {
                                out.push(Violation::Jacobi { i, j, k });
                            }
                        }
                    }
                }
            }
            AlgebraKind::AssocCommUnital => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        if self.product(i, j) != self.product(j, i) {
                            out.push(Violation::Commutativity { i, j });
                        }
                    }
                }
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            let left = self.mul(self.product(i, j), &[(k, Rational::one())]);
                            let right = self.mul(&[(i, Rational::one())], self.product(j, k));
                            if left != right {
                                out.push(Violation::Associativity { i, j, k });
                            }
                        }
                    }
                }
                match self.unit_index {
                    None => out.push(Violation::MissingUnit),
                    Some(u) => {
                        for j in 0..n {
                            if *self.product(u, j) != vec![(j, Rational::one())] {
                                out.push(Violation::Unit { j });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> SparseVec {
        let e = |x: usize| vec![(x, Rational::one())];
        let one = Rational::one();
        let a = self.mul(self.product(i, j), &e(k));
        let b = self.mul(self.product(j, k), &e(i));
        let c = self.mul(self.product(k, i), &e(j));
        axpy(&axpy(&a, &one, &b), &one, &c)
    }
}

impl ModuleActionSpec {
    pub fn new(
        name: impl Into<String>,
        algebra: Arc<AlgebraSpec>,
        basis_labels: Vec<String>,
        entries: Vec<(usize, usize, usize, Rational)>,
    ) -> Result<ModuleActionSpec> {
        let n = basis_labels.len();
        check_entries(algebra.dim(), n, n, &entries)?;
        let table = build_table(algebra.dim(), n, entries);
        Ok(ModuleActionSpec { name: name.into(), algebra, basis_labels, table })
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    /// `e_i • m_p` as a sparse coordinate vector.
    pub fn act(&self, i: usize, p: usize) -> &SparseVec {
        &self.table[i * self.dim() + p]
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.algebra.dim() {
            for p in 0..self.dim() {
                for (q, x) in self.act(i, p) {
                    out.push((i, p, *q, x.clone()));
                }
            }
        }
        out
    }

    /// Matrix of `e_i •` (column `p` is `e_i • m_p`).
    pub fn action_matrix(&self, i: usize) -> RatMatrix {
        RatMatrix::from_columns(self.dim(), (0..self.dim()).map(|p| self.act(i, p).clone()).collect())
    }

    /// Action of an algebra element on a module vector.
    pub fn act_vec(&self, x: &[(usize, Rational)], m: &[(usize, Rational)]) -> SparseVec {
        let mut acc = Vec::new();
        for (i, a) in x {
            for (p, b) in m {
                acc = axpy(&acc, &(a * b), self.act(*i, *p));
            }
        }
        acc
    }

    /// `M^L = {m : x • m = 0 for all x}`.
    pub fn invariants(&self) -> LinearSubspace {
        let mats: Vec<RatMatrix> = (0..self.algebra.dim()).map(|i| self.action_matrix(i)).collect();
        let refs: Vec<&RatMatrix> = mats.iter().collect();
        match RatMatrix::vstack(&refs) {
            Ok(m) if !refs.is_empty() => LinearSubspace::kernel(&m),
            _ => LinearSubspace::full(self.dim()),
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let g = &self.algebra;
        let n = self.dim();
        let mut out = Vec::new();
        let e = |x: usize| vec![(x, Rational::one())];
        match g.kind {
            AlgebraKind::Lie => {
                for i in 0..g.dim() {
                    for j in (i + 1)..g.dim() {
                        for p in 0..n {
                            let lhs = self.act_vec(g.product(i, j), &e(p));
                            let xy = self.act_vec(&e(i), self.act(j, p));
                            let yx = self.act_vec(&e(j), self.act(i, p));
                            if lhs != axpy(&xy, &-Rational::one(), &yx) {
                                out.push(Violation::ModuleBracket { i, j, p });
                            }
                        }
                    }
                }
            }
            AlgebraKind::AssocCommUnital => {
                for i in 0..g.dim() {
                    for j in 0..g.dim() {
                        for p in 0..n {
                            let lhs = self.act_vec(g.product(i, j), &e(p));
                            let rhs = self.act_vec(&e(i), self.act(j, p));
                            if lhs != rhs {
                                out.push(Violation::ModuleAssociativity { i, j, p });
                            }
                        }
                    }
                }
                if let Some(u) = g.unit_index {
                    for p in 0..n {
                        if *self.act(u, p) != e(p) {
                            out.push(Violation::ModuleUnit { p });
                        }
                    }
                }
            }
        }
        out
    }
}

/// `L ⊗ A` with `[x_i ⊗ a_j, x_k ⊗ a_l] = [x_i, x_k] ⊗ a_j a_l`; basis index `i * dim A + j`.
pub fn current_lie_algebra(l: &AlgebraSpec, a: &AlgebraSpec) -> Result<AlgebraSpec> {
    if l.kind != AlgebraKind::Lie || a.kind != AlgebraKind::AssocCommUnital {
        return Err(Error::Precondition(
            "current algebra needs a Lie algebra and a commutative associative unital algebra".into(),
        ));
    }
    let da = a.dim();
    let mut entries = Vec::new();
    for (i, k, r, x) in l.entries() {
        for (j, lj, s, y) in a.entries() {
            entries.push((i * da + j, k * da + lj, r * da + s, &x * &y));
        }
    }
    let labels = l
        .basis_labels
        .iter()
        .flat_map(|x| a.basis_labels.iter().map(move |b| format!("{x}⊗{b}")))
        .collect();
    AlgebraSpec::new(format!("{}⊗{}", l.name, a.name), AlgebraKind::Lie, labels, entries, None)
}

/// `M ⊗ V` over `L ⊗ A`; basis index `p * dim V + q`.
pub fn tensor_module(m: &ModuleActionSpec, v: &ModuleActionSpec) -> Result<ModuleActionSpec> {
    let g = Arc::new(current_lie_algebra(&m.algebra, &v.algebra)?);
    let (da, dv) = (v.algebra.dim(), v.dim());
    let mut entries = Vec::new();
    for (i, p, q, x) in m.entries() {
        for (j, s, t, y) in v.entries() {
            entries.push((i * da + j, p * dv + s, q * dv + t, &x * &y));
        }
    }
    let labels = m
        .basis_labels
        .iter()
        .flat_map(|x| v.basis_labels.iter().map(move |b| format!("{x}⊗{b}")))
        .collect();
    ModuleActionSpec::new(format!("{}⊗{}", m.name, v.name), g, labels, entries)
}

pub fn adjoint(g: &Arc<AlgebraSpec>) -> ModuleActionSpec {
    ModuleActionSpec::new("adjoint", g.clone(), g.basis_labels.clone(), g.entries())
        .expect("structure constants index the algebra itself")
}

pub fn regular(a: &Arc<AlgebraSpec>) -> ModuleActionSpec {
    ModuleActionSpec::new("regular", a.clone(), a.basis_labels.clone(), a.entries())
        .expect("structure constants index the algebra itself")
}

pub fn trivial(g: &Arc<AlgebraSpec>, n: usize) -> ModuleActionSpec {
    let labels = (0..n).map(|i| format!("m{i}")).collect();
    ModuleActionSpec::new(format!("trivial({n})"), g.clone(), labels, Vec::new())
        .expect("no entries")
}

/// Module given by matrices: column `p` of `mats[i]` is `e_i • m_p`.
pub fn module_from_matrices(
    name: &str,
    g: &Arc<AlgebraSpec>,
    labels: Vec<String>,
    mats: &[RatMatrix],
) -> Result<ModuleActionSpec> {
    let mut entries = Vec::new();
    for (i, m) in mats.iter().enumerate() {
        for q in 0..m.nrows() {
            for (p, x) in m.row(q) {
                entries.push((i, p, q, x));
            }
        }
    }
    ModuleActionSpec::new(name, g.clone(), labels, entries)
}

/// Lie algebra spanned by the given matrices under the commutator.
pub fn lie_from_matrices(name: &str, labels: Vec<String>, mats: &[RatMatrix]) -> Result<AlgebraSpec> {
    let flat = |m: &RatMatrix| -> SparseVec {
        let c = m.ncols();
        (0..m.nrows())
            .flat_map(|i| m.row(i).into_iter().map(move |(j, x)| (i * c + j, x)))
            .collect()
    };
    let size = mats.first().map(|m| m.nrows() * m.ncols()).unwrap_or(0);
    let basis = RatMatrix::from_columns(size, mats.iter().map(flat).collect());
    let mut entries = Vec::new();
    for (i, x) in mats.iter().enumerate() {
        for (j, y) in mats.iter().enumerate() {
            let c = x.mul(y)?.sub(&y.mul(x)?)?;
            let rhs = crate::linalg::matrix::sparse_to_dense(&flat(&c), size);
            let coords = solve(&basis, &rhs)?
                .ok_or_else(|| Error::Invalid(format!("{name}: matrices are not closed under the commutator")))?;
            for (k, v) in coords.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.push((i, j, k, v));
                }
            }
        }
    }
    AlgebraSpec::new(name, AlgebraKind::Lie, labels, entries, None)
}

/// Elementary matrix `E_{ij}` of size `n`.
pub fn elementary(n: usize, i: usize, j: usize) -> RatMatrix {
    RatMatrix::from_triplets(n, n, vec![(i, j, Rational::one())])
}

/// `sl(n)` in the basis: `E_ij` (i<j), `H_k = E_kk - E_{k+1,k+1}`, `E_ij` (i>j).
pub fn sl(n: usize) -> Result<AlgebraSpec> {
    if n < 2 {
        return Err(Error::Invalid("sl(n) needs n >= 2".into()));
    }
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            mats.push(elementary(n, i, j));
            labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    for k in 0..(n - 1) {
        mats.push(elementary(n, k, k).sub(&elementary(n, k + 1, k + 1))?);
        labels.push(format!("H{}", k + 1));
    }
    for i in 0..n {
        for j in 0..i {
            mats.push(elementary(n, i, j));
            labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    lie_from_matrices(&format!("sl{n}"), labels, &mats)
}

pub fn gl(n: usize) -> Result<AlgebraSpec> {
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mats.push(elementary(n, i, j));
            labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    lie_from_matrices(&format!("gl{n}"), labels, &mats)
}

pub fn sl2() -> AlgebraSpec {
    let mut g = sl(2).expect("sl2");
    g.basis_labels = vec!["e".into(), "h".into(), "f".into()];
    g
}

pub fn heis3() -> AlgebraSpec {
    AlgebraSpec::new(
        "heis3",
        AlgebraKind::Lie,
        vec!["x".into(), "y".into(), "z".into()],
        vec![(0, 1, 2, int(1)), (1, 0, 2, int(-1))],
        None,
    )
    .expect("heis3")
}

pub fn abelian(n: usize) -> AlgebraSpec {
    AlgebraSpec::new(format!("ab{n}"), AlgebraKind::Lie, (0..n).map(|i| format!("x{i}")).collect(), Vec::new(), None)
        .expect("abelian")
}

fn power_label(i: usize) -> String {
    match i {
        0 => "1".into(),
        1 => "t".into(),
        _ => format!("t^{i}"),
    }
}

/// `K[t]/(t^n)`; `tp(1)` is the ground field.
pub fn truncated_poly(n: usize) -> Result<AlgebraSpec> {
    if n == 0 {
        return Err(Error::Invalid("tp(n) needs n >= 1".into()));
    }
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                entries.push((i, j, i + j, int(1)));
            }
        }
    }
    let name = if n == 1 { "K".to_string() } else { format!("tp{n}") };
    AlgebraSpec::new(name, AlgebraKind::AssocCommUnital, (0..n).map(power_label).collect(), entries, Some(0))
}

/// `K[t]/(t^n - 1)`.
pub fn circulant(n: usize) -> Result<AlgebraSpec> {
    if n == 0 {
        return Err(Error::Invalid("circ(n) needs n >= 1".into()));
    }
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            entries.push((i, j, (i + j) % n, int(1)));
        }
    }
    AlgebraSpec::new(format!("circ{n}"), AlgebraKind::AssocCommUnital, (0..n).map(power_label).collect(), entries, Some(0))
}

/// Result of looking up a catalog name.
#[derive(Clone, Debug)]
pub enum CatalogItem {
    Algebra(AlgebraSpec),
    Module(ModuleActionSpec),
}

fn split_call(name: &str) -> (String, Vec<String>) {
    let name = name.trim();
    if let Some(open) = name.find('(') {
        if name.ends_with(')') {
            let head = name[..open].trim().to_string();
            let inner = &name[open + 1..name.len() - 1];
            let mut args = Vec::new();
            let (mut depth, mut start) = (0i32, 0usize);
            for (i, ch) in inner.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    ',' if depth == 0 => {
                        args.push(inner[start..i].trim().to_string());
                        start = i + 1;
                    }
                    _ => {}
                }
            }
            args.push(inner[start..].trim().to_string());
            return (head, args);
        }
    }
    let digits = name.trim_start_matches(|c: char| !c.is_ascii_digit());
    let head = &name[..name.len() - digits.len()];
    if !digits.is_empty() && !head.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) {
        return (head.to_string(), vec![digits.to_string()]);
    }
    (name.to_string(), Vec::new())
}

fn parse_count(s: &str, name: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::UnknownName(name.to_string()))
}

/// Algebra from its catalog name: `sl2`, `sl3`, `sl4`, `sl(n)`, `gl2`, `gl(n)`, `heis3`,
/// `ab(n)`, `tp(n)`, `circ(n)`, `K`.
pub fn catalog_algebra(name: &str) -> Result<AlgebraSpec> {
    if name.trim() == "K" {
        return truncated_poly(1);
    }
    if name.trim() == "heis3" {
        return Ok(heis3());
    }
    let (head, args) = split_call(name);
    let n = match args.as_slice() {
        [a] => parse_count(a, name)?,
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    match head.as_str() {
        "sl" if n == 2 => Ok(sl2()),
        "sl" => sl(n),
        "gl" => gl(n),
        "ab" => Ok(abelian(n)),
        "tp" => truncated_poly(n),
        "circ" => circulant(n),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// Module over `g` from its catalog name: `adjoint`, `regular`, `trivial`, `trivial(n)`.
pub fn catalog_module(name: &str, g: &Arc<AlgebraSpec>) -> Result<ModuleActionSpec> {
    let (head, args) = split_call(name);
    match (head.as_str(), args.as_slice()) {
        ("adjoint", []) if g.kind == AlgebraKind::Lie => Ok(adjoint(g)),
        ("regular", []) if g.kind == AlgebraKind::AssocCommUnital => Ok(regular(g)),
        ("trivial", []) if g.kind == AlgebraKind::Lie => Ok(trivial(g, 1)),
        ("trivial", [n]) if g.kind == AlgebraKind::Lie => Ok(trivial(g, parse_count(n, name)?)),
        ("adjoint" | "regular" | "trivial", _) => Err(Error::Precondition(format!(
            "module {name} does not apply to a {} algebra",
            g.kind
        ))),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// Any catalog entry, including `adjoint(g)`, `regular(A)` and `trivial(n, g)`.
pub fn catalog(name: &str) -> Result<CatalogItem> {
    let (head, args) = split_call(name);
    match (head.as_str(), args.as_slice()) {
        ("adjoint", [g]) => Ok(CatalogItem::Module(catalog_module("adjoint", &Arc::new(catalog_algebra(g)?))?)),
        ("regular", [a]) => Ok(CatalogItem::Module(catalog_module("regular", &Arc::new(catalog_algebra(a)?))?)),
        ("trivial", [n, g]) => Ok(CatalogItem::Module(catalog_module(
            &format!("trivial({n})"),
            &Arc::new(catalog_algebra(g)?),
        )?)),
        _ => Ok(CatalogItem::Algebra(catalog_algebra(name)?)),
    }
}

pub fn catalog_list() -> Vec<(&'static str, &'static str)> {
    vec![
        ("sl2", "sl(2) in the basis e, h, f"),
        ("sl3", "sl(3), elementary-matrix basis"),
        ("sl4", "sl(4), elementary-matrix basis"),
        ("gl2", "gl(2), elementary-matrix basis"),
        ("heis3", "Heisenberg algebra [x,y] = z"),
        ("ab(n)", "n-dimensional abelian Lie algebra"),
        ("tp(n)", "truncated polynomials K[t]/(t^n)"),
        ("circ(n)", "K[t]/(t^n - 1)"),
        ("K", "the ground field, tp(1)"),
        ("adjoint(g)", "adjoint module of a Lie algebra"),
        ("trivial(n, g)", "n-dimensional module with zero action"),
        ("regular(A)", "A as a module over itself"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_brackets() {
        let g = sl2();
        assert_eq!(g.product(1, 0), &vec![(0, int(2))]);
        assert_eq!(g.product(1, 2), &vec![(2, int(-2))]);
        assert_eq!(g.product(0, 2), &vec![(1, int(1))]);
        assert!(g.validate().is_empty());
    }

    #[test]
    fn flipped_sign_is_reported() {
        let g = sl2();
        let mut entries = g.entries();
        for e in entries.iter_mut() {
            if e.0 == 0 && e.1 == 1 {
                e.3 = -e.3.clone();
            }
        }
        let bad = AlgebraSpec::new("bad", AlgebraKind::Lie, g.basis_labels.clone(), entries, None).unwrap();
        assert!(bad.validate().contains(&Violation::Antisymmetry { i: 0, j: 1 }));
    }

    #[test]
    fn catalog_members_validate() {
        for name in ["sl2", "sl3", "sl4", "gl2", "heis3", "ab(3)", "tp(3)", "circ(3)", "K"] {
            let a = catalog_algebra(name).unwrap();
            assert!(a.validate().is_empty(), "{name}");
        }
        let g = Arc::new(sl2());
        assert!(adjoint(&g).validate().is_empty());
        let a = Arc::new(truncated_poly(3).unwrap());
        assert!(regular(&a).validate().is_empty());
    }

    #[test]
    fn dims() {
        assert_eq!(catalog_algebra("sl3").unwrap().dim(), 8);
        assert_eq!(catalog_algebra("sl4").unwrap().dim(), 15);
        assert_eq!(catalog_algebra("ab2").unwrap().dim(), 2);
        assert_eq!(catalog_algebra("tp2").unwrap().dim(), 2);
        assert_eq!(catalog_algebra("circ2").unwrap().dim(), 2);
    }

    #[test]
    fn current_with_ground_field_is_l() {
        let l = sl2();
        let c = current_lie_algebra(&l, &truncated_poly(1).unwrap()).unwrap();
        assert!(c.same_structure(&l));
    }

    #[test]
    fn heis_tp2() {
        let c = current_lie_algebra(&heis3(), &truncated_poly(2).unwrap()).unwrap();
        assert_eq!(c.dim(), 6);
        assert!(c.validate().is_empty());
        assert_eq!(c.product(0, 2), &vec![(4, int(1))]);
        assert_eq!(c.product(0, 3), &vec![(5, int(1))]);
        assert!(c.product(1, 3).is_empty());
    }

    #[test]
    fn derived_dims_double_for_circ2() {
        for l in [sl2(), heis3(), abelian(2)] {
            let c = current_lie_algebra(&l, &circulant(2).unwrap()).unwrap();
            assert_eq!(c.derived().dim(), 2 * l.derived().dim());
        }
    }

    #[test]
    fn tensor_module_validates() {
        let l = Arc::new(heis3());
        let a = Arc::new(truncated_poly(2).unwrap());
        let m = tensor_module(&adjoint(&l), &regular(&a)).unwrap();
        assert!(m.validate().is_empty());
        assert_eq!(m.dim(), 6);
    }

    #[test]
    fn catalog_names() {
        assert!(matches!(catalog("adjoint(sl2)").unwrap(), CatalogItem::Module(_)));
        assert!(matches!(catalog("trivial(2, heis3)").unwrap(), CatalogItem::Module(m) if m.dim() == 2));
        assert!(matches!(catalog("nope"), Err(Error::UnknownName(_))));
        let g = Arc::new(sl2());
        assert!(catalog_module("regular", &g).is_err());
    }
}
