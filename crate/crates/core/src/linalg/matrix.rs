use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::Error;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &[(usize, Rational)], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Builds a sparse vector from unordered `(index, value)` terms, summing duplicates.
pub fn sparse_collect(terms: impl IntoIterator<Item = (usize, Rational)>) -> SparseVec {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (i, x) in terms {
        if x.is_zero() {
            continue;
        }
        let e = acc.entry(i).or_insert_with(Rational::zero);
        *e += x;
    }
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// `x + a * y`.
pub fn axpy(x: &[(usize, Rational)], a: &Rational, y: &[(usize, Rational)]) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, a * &y[j].1));
            j += 1;
        } else {
            let v = &x[i].1 + a * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_scale(x: &[(usize, Rational)], a: &Rational) -> SparseVec {
    if a.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(i, v)| (*i, v * a)).collect()
}

pub fn sparse_dot(x: &[(usize, Rational)], y: &[(usize, Rational)]) -> Rational {
    let (mut i, mut j) = (0, 0);
    let mut acc = Rational::zero();
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &x[i].1 * &y[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

pub fn sparse_get(x: &[(usize, Rational)], i: usize) -> Rational {
    match x.binary_search_by_key(&i, |e| e.0) {
        Ok(p) => x[p].1.clone(),
        Err(_) => Rational::zero(),
    }
}

#[derive(Clone, Debug)]
enum Storage {
    Dense(Vec<Rational>),
    Sparse(Vec<SparseVec>),
}

/// Exact rational matrix. Storage is sparse below 25% density and dense otherwise;
/// the choice never affects results or equality.
#[derive(Clone, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    storage: Storage,
}

impl PartialEq for RatMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && (0..self.rows).all(|i| self.row(i) == other.row(i))
    }
}

impl Eq for RatMatrix {}

impl RatMatrix {
    pub fn from_sparse_rows(cols: usize, rows: Vec<SparseVec>) -> RatMatrix {
        let nnz: usize = rows.iter().map(|r| r.len()).sum();
        let n = rows.len();
        debug_assert!(rows.iter().all(|r| r.iter().all(|(j, _)| *j < cols)));
        if nnz * 4 < n * cols || n * cols == 0 {
            RatMatrix { rows: n, cols, storage: Storage::Sparse(rows) }
        } else {
            let mut data = vec![Rational::zero(); n * cols];
            for (i, r) in rows.into_iter().enumerate() {
                for (j, v) in r {
                    data[i * cols + j] = v;
                }
            }
            RatMatrix { rows: n, cols, storage: Storage::Dense(data) }
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> RatMatrix {
        RatMatrix::from_sparse_rows(rows, columns).transpose()
    }

    pub fn from_dense_rows(cols: usize, rows: &[Vec<Rational>]) -> Result<RatMatrix, Error> {
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {} columns",
                    r.len(),
                    cols
                )));
            }
            out.push(sparse_from_dense(r));
        }
        Ok(RatMatrix::from_sparse_rows(cols, out))
    }

    pub fn from_triplets(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> RatMatrix {
        let mut by_row: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (i, j, v) in entries {
            by_row[i].push((j, v));
        }
        RatMatrix::from_sparse_rows(cols, by_row.into_iter().map(sparse_collect).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix::from_sparse_rows(cols, vec![Vec::new(); rows])
    }

    pub fn identity(n: usize) -> RatMatrix {
        RatMatrix::from_sparse_rows(n, (0..n).map(|i| vec![(i, Rational::one())]).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Sparse(_))
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match &self.storage {
            Storage::Dense(d) => d[i * self.cols + j].clone(),
            Storage::Sparse(r) => sparse_get(&r[i], j),
        }
    }

    pub fn row(&self, i: usize) -> SparseVec {
        match &self.storage {
            Storage::Dense(d) => sparse_from_dense(&d[i * self.cols..(i + 1) * self.cols]),
            Storage::Sparse(r) => r[i].clone(),
        }
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        match &self.storage {
            Storage::Sparse(r) => r.clone(),
            Storage::Dense(_) => (0..self.rows).map(|i| self.row(i)).collect(),
        }
    }

    pub fn into_sparse_rows(self) -> Vec<SparseVec> {
        match self.storage {
            Storage::Sparse(r) => r,
            Storage::Dense(_) => (0..self.rows).map(|i| self.row(i)).collect(),
        }
    }

    pub fn dense_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| sparse_to_dense(&self.row(i), self.cols)).collect()
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().into_sparse_rows()
    }

    pub fn nnz(&self) -> usize {
        match &self.storage {
            Storage::Dense(d) => d.iter().filter(|x| !x.is_zero()).count(),
            Storage::Sparse(r) => r.iter().map(|x| x.len()).sum(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for (j, v) in self.row(i) {
                out[j].push((i, v));
            }
        }
        RatMatrix::from_sparse_rows(self.rows, out)
    }

    pub fn scale(&self, a: &Rational) -> RatMatrix {
        RatMatrix::from_sparse_rows(
            self.cols,
            (0..self.rows).map(|i| sparse_scale(&self.row(i), a)).collect(),
        )
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix, Error> {
        self.combine(other, &Rational::one())
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix, Error> {
        self.combine(other, &-Rational::one())
    }

    fn combine(&self, other: &RatMatrix, a: &Rational) -> Result<RatMatrix, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(RatMatrix::from_sparse_rows(
            self.cols,
            (0..self.rows).map(|i| axpy(&self.row(i), a, &other.row(i))).collect(),
        ))
    }

    /// Matrix applied to a sparse vector of length `ncols`.
    pub fn apply(&self, v: &[(usize, Rational)]) -> SparseVec {
        (0..self.rows)
            .filter_map(|i| {
                let x = sparse_dot(&self.row(i), v);
                (!x.is_zero()).then_some((i, x))
            })
            .collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let rhs = other.sparse_rows();
        let rows = (0..self.rows)
            .map(|i| {
                let mut acc: SparseVec = Vec::new();
                for (k, a) in self.row(i) {
                    acc = axpy(&acc, &a, &rhs[k]);
                }
                acc
            })
            .collect();
        Ok(RatMatrix::from_sparse_rows(other.cols, rows))
    }

    pub fn vstack(blocks: &[&RatMatrix]) -> Result<RatMatrix, Error> {
        let cols = blocks.first().map(|b| b.cols).unwrap_or(0);
        let mut rows = Vec::new();
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch(format!(
                    "vstack of {} and {} columns",
                    cols, b.cols
                )));
            }
            rows.extend(b.sparse_rows());
        }
        Ok(RatMatrix::from_sparse_rows(cols, rows))
    }

    pub fn hstack(blocks: &[&RatMatrix]) -> Result<RatMatrix, Error> {
        let t: Vec<RatMatrix> = blocks.iter().map(|b| b.transpose()).collect();
        let refs: Vec<&RatMatrix> = t.iter().collect();
        Ok(RatMatrix::vstack(&refs)?.transpose())
    }

    /// Kronecker product; row index `i * b.rows + k`, column index `j * b.cols + l`.
    pub fn kron(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        let brows = b.sparse_rows();
        let mut rows = Vec::with_capacity(a.rows * b.rows);
        for i in 0..a.rows {
            let ar = a.row(i);
            for br in &brows {
                let mut r = Vec::with_capacity(ar.len() * br.len());
                for (j, x) in &ar {
                    for (l, y) in br {
                        r.push((j * b.cols + l, x * y));
                    }
                }
                rows.push(r);
            }
        }
        RatMatrix::from_sparse_rows(a.cols * b.cols, rows)
    }
}

/// Incremental row echelon form used by every elimination routine.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(cols: usize) -> Echelon {
        Echelon { cols, rows: BTreeMap::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates every pivot column from `v`; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut idx = 0;
        while idx < v.len() {
            let (c, coeff) = (v[idx].0, v[idx].1.clone());
            match self.rows.get(&c) {
                Some(p) => v = axpy(&v, &-coeff, p),
                None => idx += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> bool {
        self.reduce(v.to_vec()).is_empty()
    }

    /// Returns true when `v` was independent of the rows already present.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        match r.first() {
            None => false,
            Some((c, lead)) => {
                let c = *c;
                let inv = lead.recip();
                self.rows.insert(c, sparse_scale(&r, &inv));
                true
            }
        }
    }

    /// Reduced row echelon rows sorted by pivot, plus the pivot columns.
    pub fn into_rref(self) -> (Vec<SparseVec>, Vec<usize>) {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (c, mut row) in self.rows.into_iter().rev() {
            let hits: Vec<(usize, Rational)> = row
                .iter()
                .filter(|(j, _)| *j != c && done.contains_key(j))
                .cloned()
                .collect();
            for (j, x) in hits {
                row = axpy(&row, &-x, &done[&j]);
            }
            done.insert(c, row);
        }
        let pivots: Vec<usize> = done.keys().copied().collect();
        (done.into_values().collect(), pivots)
    }
}

fn echelon_of(cols: usize, mut rows: Vec<SparseVec>) -> Echelon {
    rows.sort_by_key(|r| r.len());
    let mut e = Echelon::new(cols);
    for r in rows {
        if !r.is_empty() {
            e.insert(r);
        }
    }
    e
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let (rows, pivots) = echelon_of(m.ncols(), m.sparse_rows()).into_rref();
    (RatMatrix::from_sparse_rows(m.ncols(), rows), pivots)
}

pub fn rank(m: &RatMatrix) -> usize {
    echelon_of(m.ncols(), m.sparse_rows()).rank()
}

/// Basis of the null space `{v : m v = 0}` read off the reduced form, one vector per free column.
pub fn kernel_basis(m: &RatMatrix) -> Vec<SparseVec> {
    let (rows, pivots) = echelon_of(m.ncols(), m.sparse_rows()).into_rref();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut by_free: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
    for (r, p) in rows.iter().zip(&pivots) {
        for (j, x) in r {
            if *j != *p {
                by_free.entry(*j).or_default().push((*p, -x.clone()));
            }
        }
    }
    (0..m.ncols())
        .filter(|j| !pivot_set.contains(j))
        .map(|f| {
            let mut v = by_free.remove(&f).unwrap_or_default();
            v.push((f, Rational::one()));
            v.sort_by_key(|e| e.0);
            v
        })
        .collect()
}

/// One solution of `a x = b`, if any.
pub fn solve(a: &RatMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, Error> {
    if b.len() != a.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            a.nrows()
        )));
    }
    let n = a.ncols();
    let rows: Vec<SparseVec> = a
        .sparse_rows()
        .into_iter()
        .zip(b)
        .map(|(mut r, x)| {
            if !x.is_zero() {
                r.push((n, x.clone()));
            }
            r
        })
        .collect();
    let (rows, pivots) = echelon_of(n + 1, rows).into_rref();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (r, p) in rows.iter().zip(&pivots) {
        x[*p] = sparse_get(r, n);
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::super::rational::{frac, int};
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows[0].len();
        let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|x| int(*x)).collect()).collect();
        RatMatrix::from_dense_rows(cols, &dense).unwrap()
    }

    #[test]
    fn rref_small() {
        let (r, p) = rref(&m(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, m(&[&[1, 2]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_fractions() {
        let a = RatMatrix::from_dense_rows(
            2,
            &[vec![frac(1, 2), frac(1, 3)], vec![frac(1, 3), frac(2, 9)]],
        )
        .unwrap();
        let (r, p) = rref(&a);
        assert_eq!(r.dense_rows(), vec![vec![int(1), frac(2, 3)]]);
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_of_path() {
        let k = kernel_basis(&m(&[&[1, 1, 0], &[0, 1, 1]]));
        assert_eq!(k, vec![vec![(0, int(1)), (1, int(-1)), (2, int(1))]]);
    }

    #[test]
    fn storage_is_invisible() {
        let dense = m(&[&[1, 2], &[3, 4]]);
        assert!(!dense.is_sparse());
        let sparse = RatMatrix::from_triplets(2, 2, vec![(0, 0, int(1)), (0, 1, int(2)), (1, 0, int(3)), (1, 1, int(4))]);
        assert_eq!(dense, sparse);
        let big = RatMatrix::identity(10);
        assert!(big.is_sparse());
        assert_eq!(big.mul(&big).unwrap(), big);
    }

    #[test]
    fn multiply_and_kron() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[&[2, 1], &[1, 0]]));
        let k = RatMatrix::kron(&a, &b);
        assert_eq!(k.get(0, 3), int(2));
        assert_eq!(k.get(3, 2), int(1));
        assert_eq!(k.nrows(), 4);
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(solve(&a, &[int(2), int(0)]).unwrap(), Some(vec![int(1), int(1)]));
        let s = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&s, &[int(1), int(3)]).unwrap(), None);
    }
}
