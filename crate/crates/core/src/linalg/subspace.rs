use num_traits::Zero;

use super::matrix::{kernel_basis, sparse_get, Echelon, RatMatrix, SparseVec};
use super::rational::Rational;
use crate::error::Error;

/// Subspace of `Q^ambient`, stored as its reduced row echelon basis.
///
/// Two subspaces are equal exactly when their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubspace {
    ambient: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

/// Result of `U / W`: its dimension and basis rows of `U` spanning a complement of `W`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub dim: usize,
    pub complement: Vec<SparseVec>,
}

fn mismatch(a: usize, b: usize) -> Error {
    Error::DimensionMismatch(format!("subspaces of Q^{a} and Q^{b}"))
}

impl LinearSubspace {
    pub fn zero(ambient: usize) -> LinearSubspace {
        LinearSubspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> LinearSubspace {
        LinearSubspace::span(ambient, (0..ambient).map(|i| vec![(i, Rational::from_integer(1.into()))]))
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> LinearSubspace {
        let mut e = Echelon::new(ambient);
        let mut vs: Vec<SparseVec> = vectors.into_iter().filter(|v| !v.is_empty()).collect();
        vs.sort_by_key(|v| v.len());
        for v in vs {
            debug_assert!(v.iter().all(|(i, _)| *i < ambient));
            e.insert(v);
        }
        let (basis, pivots) = e.into_rref();
        LinearSubspace { ambient, basis, pivots }
    }

    /// Null space of `m`, inside `Q^{m.ncols()}`.
    pub fn kernel(m: &RatMatrix) -> LinearSubspace {
        LinearSubspace::span(m.ncols(), kernel_basis(m))
    }

    /// Column space of `m`, inside `Q^{m.nrows()}`.
    pub fn image(m: &RatMatrix) -> LinearSubspace {
        LinearSubspace::span(m.nrows(), m.columns())
    }

    /// Image of this subspace under `m`.
    pub fn map(&self, m: &RatMatrix) -> Result<LinearSubspace, Error> {
        if m.ncols() != self.ambient {
            return Err(mismatch(m.ncols(), self.ambient));
        }
        Ok(LinearSubspace::span(m.nrows(), self.basis.iter().map(|v| m.apply(v))))
    }

    /// `{v in self : m v = 0}`.
    pub fn restricted_kernel(&self, m: &RatMatrix) -> Result<LinearSubspace, Error> {
        if m.ncols() != self.ambient {
            return Err(mismatch(m.ncols(), self.ambient));
        }
        let images: Vec<SparseVec> = self.basis.iter().map(|v| m.apply(v)).collect();
        let coeffs = kernel_basis(&RatMatrix::from_columns(m.nrows(), images));
        Ok(LinearSubspace::span(self.ambient, coeffs.iter().map(|c| self.combine(c))))
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coeffs: &[(usize, Rational)]) -> SparseVec {
        let mut acc = Vec::new();
        for (i, c) in coeffs {
            acc = super::matrix::axpy(&acc, c, &self.basis[*i]);
        }
        acc
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> RatMatrix {
        RatMatrix::from_sparse_rows(self.ambient, self.basis.clone())
    }

    pub fn contains_vector(&self, v: &[(usize, Rational)]) -> bool {
        let mut r: SparseVec = v.to_vec();
        for (row, p) in self.basis.iter().zip(&self.pivots) {
            let c = sparse_get(&r, *p);
            if !c.is_zero() {
                r = super::matrix::axpy(&r, &-c, row);
            }
        }
        r.is_empty()
    }

    pub fn contains(&self, other: &LinearSubspace) -> Result<bool, Error> {
        if other.ambient != self.ambient {
            return Err(mismatch(self.ambient, other.ambient));
        }
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &LinearSubspace) -> Result<LinearSubspace, Error> {
        if other.ambient != self.ambient {
            return Err(mismatch(self.ambient, other.ambient));
        }
        Ok(LinearSubspace::span(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        ))
    }

    pub fn sum_all(ambient: usize, parts: &[&LinearSubspace]) -> Result<LinearSubspace, Error> {
        let mut out = LinearSubspace::zero(ambient);
        for p in parts {
            out = out.sum(p)?;
        }
        Ok(out)
    }

    /// Zassenhaus: reduce `[u | u]` and `[w | 0]`; rows vanishing on the left half span `U ∩ W`.
    pub fn intersect(&self, other: &LinearSubspace) -> Result<LinearSubspace, Error> {
        if other.ambient != self.ambient {
            return Err(mismatch(self.ambient, other.ambient));
        }
        let n = self.ambient;
        let mut e = Echelon::new(2 * n);
        for u in &self.basis {
            let mut row = u.clone();
            row.extend(u.iter().map(|(i, x)| (i + n, x.clone())));
            e.insert(row);
        }
        for w in &other.basis {
            e.insert(w.clone());
        }
        let (rows, pivots) = e.into_rref();
        let inter = rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= n)
            .map(|(r, _)| r.into_iter().map(|(i, x)| (i - n, x)).collect());
        Ok(LinearSubspace::span(n, inter))
    }

    /// `self / sub`; the complement extends `sub` by basis rows of `self` taken in order.
    pub fn quotient(&self, sub: &LinearSubspace) -> Result<Quotient, Error> {
        if !self.contains(sub)? {
            return Err(Error::NotContained(format!(
                "subspace of dim {} is not inside the subspace of dim {}",
                sub.dim(),
                self.dim()
            )));
        }
        let mut e = Echelon::new(self.ambient);
        for w in &sub.basis {
            e.insert(w.clone());
        }
        let mut complement = Vec::new();
        for u in &self.basis {
            if e.insert(u.clone()) {
                complement.push(u.clone());
            }
        }
        Ok(Quotient { dim: complement.len(), complement })
    }

    pub fn quotient_dim(&self, sub: &LinearSubspace) -> Result<usize, Error> {
        Ok(self.quotient(sub)?.dim)
    }

    /// True when the parts are independent and together span `whole`.
    pub fn is_direct_sum(parts: &[&LinearSubspace], whole: &LinearSubspace) -> Result<bool, Error> {
        let total: usize = parts.iter().map(|p| p.dim()).sum();
        if total != whole.dim() {
            return Ok(false);
        }
        Ok(LinearSubspace::sum_all(whole.ambient, parts)? == *whole)
    }

    /// `U ⊗ W` inside `Q^{p q}` with index `i * q + j`.
    pub fn tensor(u: &LinearSubspace, w: &LinearSubspace) -> LinearSubspace {
        let q = w.ambient;
        let mut vs = Vec::with_capacity(u.dim() * w.dim());
        for a in &u.basis {
            for b in &w.basis {
                let mut v = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (j, y) in b {
                        v.push((i * q + j, x * y));
                    }
                }
                vs.push(v);
            }
        }
        LinearSubspace::span(u.ambient * q, vs)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::int;
    use super::*;

    fn v(xs: &[i64]) -> SparseVec {
        super::super::matrix::sparse_from_dense(&xs.iter().map(|x| int(*x)).collect::<Vec<_>>())
    }

    #[test]
    fn intersection_in_q3() {
        let u = LinearSubspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 0, 1])]);
        let w = LinearSubspace::span(3, vec![v(&[0, 1, 1]), v(&[1, 0, 0])]);
        let i = u.intersect(&w).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains_vector(&v(&[1, 1, 1])));
    }

    #[test]
    fn ambient_mismatch_is_error() {
        let u = LinearSubspace::full(2);
        let w = LinearSubspace::full(3);
        assert!(matches!(u.intersect(&w), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn quotient_requires_containment() {
        let u = LinearSubspace::span(3, vec![v(&[1, 0, 0])]);
        let w = LinearSubspace::span(3, vec![v(&[0, 1, 0])]);
        assert!(matches!(u.quotient(&w), Err(Error::NotContained(_))));
        let full = LinearSubspace::full(3);
        let q = full.quotient(&u).unwrap();
        assert_eq!(q.dim, 2);
        assert_eq!(q.complement, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
    }

    #[test]
    fn direct_sums() {
        let a = LinearSubspace::span(2, vec![v(&[1, 0])]);
        let b = LinearSubspace::span(2, vec![v(&[1, 1])]);
        let full = LinearSubspace::full(2);
        assert!(LinearSubspace::is_direct_sum(&[&a, &b], &full).unwrap());
        assert!(!LinearSubspace::is_direct_sum(&[&a, &a], &full).unwrap());
    }

    #[test]
    fn restricted_kernel_and_map() {
        let m = RatMatrix::from_dense_rows(3, &[vec![int(1), int(1), int(0)]]).unwrap();
        let s = LinearSubspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let k = s.restricted_kernel(&m).unwrap();
        assert_eq!(k, LinearSubspace::span(3, vec![v(&[1, -1, 0])]));
        assert_eq!(s.map(&m).unwrap().dim(), 1);
    }
}
