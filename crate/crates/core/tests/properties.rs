use std::sync::Arc;

use proptest::prelude::*;

use curcoh::algebra::{adjoint, catalog_algebra, current_lie_algebra, regular, tensor_module, trivial};
use curcoh::cohomology::ce_differential;
use curcoh::linalg::{format_rational, frac, int, parse_rational, rref, LinearSubspace, RatMatrix, Rational};
use curcoh::multilinear::{young_cauchy3_dims, CochainSpace, Symmetry};

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> RatMatrix {
    let dense: Vec<Vec<Rational>> = (0..rows).map(|i| (0..cols).map(|j| int(entries[i * cols + j])).collect()).collect();
    RatMatrix::from_dense_rows(cols, &dense).unwrap()
}

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], r * c).prop_map(move |e| matrix(r, c, &e))
    })
}

/// `c rᵀ` with `c ∈ Z^rows`, `r ∈ Z^cols`.
fn rank_one(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    (prop::collection::vec(-2i64..=2, rows), prop::collection::vec(-2i64..=2, cols)).prop_map(move |(c, r)| {
        let e: Vec<i64> = c.iter().flat_map(|x| r.iter().map(move |y| x * y)).collect();
        matrix(rows, cols, &e)
    })
}

fn subspace(ambient: usize) -> impl Strategy<Value = LinearSubspace> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, ambient), 0..=ambient).prop_map(move |vs| {
        LinearSubspace::span(ambient, vs.into_iter().map(|v| v.into_iter().enumerate().filter(|(_, x)| *x != 0).map(|(i, x)| (i, int(x))).collect()))
    })
}

/// Operators on `U` and `W` sharing the domain dimensions `du`, `dw`.
fn quadruple(gen: fn(usize, usize) -> BoxedStrategy<RatMatrix>) -> impl Strategy<Value = (RatMatrix, RatMatrix, RatMatrix, RatMatrix)> {
    (1..=4usize, 1..=4usize, 1..=3usize, 1..=3usize).prop_flat_map(move |(du, dw, a, b)| (gen(a, du), gen(b, du), gen(a, dw), gen(b, dw)))
}

fn rank_one_boxed(rows: usize, cols: usize) -> BoxedStrategy<RatMatrix> {
    rank_one(rows, cols).boxed()
}

fn generic_boxed(rows: usize, cols: usize) -> BoxedStrategy<RatMatrix> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], rows * cols).prop_map(move |e| matrix(rows, cols, &e)).boxed()
}

fn two_kernels_match(s: &RatMatrix, s2: &RatMatrix, t: &RatMatrix, t2: &RatMatrix) {
    let (du, dw) = (s.ncols(), t.ncols());
    let direct = LinearSubspace::kernel(&RatMatrix::kron(s, t)).intersect(&LinearSubspace::kernel(&RatMatrix::kron(s2, t2))).unwrap();
    let (ks, ks2, kt, kt2) = (LinearSubspace::kernel(s), LinearSubspace::kernel(s2), LinearSubspace::kernel(t), LinearSubspace::kernel(t2));
    let parts = [
        LinearSubspace::tensor(&ks.intersect(&ks2).unwrap(), &LinearSubspace::full(dw)),
        LinearSubspace::tensor(&ks, &kt2),
        LinearSubspace::tensor(&ks2, &kt),
        LinearSubspace::tensor(&LinearSubspace::full(du), &kt.intersect(&kt2).unwrap()),
    ];
    let refs: Vec<&LinearSubspace> = parts.iter().collect();
    assert_eq!(direct, LinearSubspace::sum_all(du * dw, &refs).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn two_kernel_intersection_rank_one((s, s2, t, t2) in quadruple(rank_one_boxed)) {
        two_kernels_match(&s, &s2, &t, &t2);
    }

    #[test]
    fn two_kernel_intersection_general((s, s2, t, t2) in quadruple(generic_boxed)) {
        two_kernels_match(&s, &s2, &t, &t2);
    }

    #[test]
    fn rref_is_idempotent(m in small_matrix(5, 5)) {
        let (r, p) = rref(&m);
        let (r2, p2) = rref(&r);
        prop_assert_eq!(r.dense_rows(), r2.dense_rows());
        prop_assert_eq!(p, p2);
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in small_matrix(5, 6)) {
        let k = LinearSubspace::kernel(&m);
        prop_assert_eq!(k.dim() + LinearSubspace::image(&m.transpose()).dim(), m.ncols());
        for v in k.basis() {
            prop_assert!(m.apply(v).is_empty());
        }
    }

    #[test]
    fn grassmann_identity((u, w) in (1..=5usize).prop_flat_map(|n| (subspace(n), subspace(n)))) {
        let sum = u.sum(&w).unwrap();
        let cap = u.intersect(&w).unwrap();
        prop_assert_eq!(u.dim() + w.dim(), sum.dim() + cap.dim());
        prop_assert!(sum.contains(&u).unwrap() && u.contains(&cap).unwrap() && w.contains(&cap).unwrap());
    }

    #[test]
    fn quotient_complement_spans((u, w) in (1..=5usize).prop_flat_map(|n| (subspace(n), subspace(n)))) {
        let big = u.sum(&w).unwrap();
        let q = big.quotient(&w).unwrap();
        prop_assert_eq!(q.dim, big.dim() - w.dim());
        let comp = LinearSubspace::span(big.ambient_dim(), q.complement.clone());
        prop_assert!(LinearSubspace::is_direct_sum(&[&comp, &w], &big).unwrap());
    }

    #[test]
    fn rationals_print_and_parse(n in -10_000i64..10_000, d in 1i64..500) {
        let r = frac(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn cochain_space_dimensions(arity in 0usize..=3, d in 0usize..=6, m in 0usize..=3) {
        let binom = |n: usize, k: usize| -> usize {
            if k > n { return 0; }
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        };
        prop_assert_eq!(CochainSpace::new(arity, d, m, Symmetry::Alternating).dim(), binom(d, arity) * m);
        let sym = if arity == 0 { m } else { binom(d + arity - 1, arity) * m };
        prop_assert_eq!(CochainSpace::new(arity, d, m, Symmetry::Symmetric).dim(), sym);
        prop_assert_eq!(CochainSpace::new(arity, d, m, Symmetry::None).dim(), d.pow(arity as u32) * m);
    }
}

#[test]
fn cauchy_identity_on_the_grid() {
    for dl in 0..=8u64 {
        for da in 0..=8u64 {
            let (lhs, parts) = young_cauchy3_dims(dl, da);
            assert_eq!(lhs, parts.iter().sum::<u64>(), "dL={dl}, dA={da}");
        }
    }
    assert_eq!(young_cauchy3_dims(2, 2).0, 4);
    assert_eq!(young_cauchy3_dims(3, 2).0, 20);
}

#[test]
fn current_algebras_are_lie_and_complexes_close() {
    for l in ["sl2", "heis3", "ab1", "ab2"] {
        let la = Arc::new(catalog_algebra(l).unwrap());
        for a in ["tp2", "tp3", "circ2"] {
            let aa = Arc::new(catalog_algebra(a).unwrap());
            let g = current_lie_algebra(&la, &aa).unwrap();
            assert!(g.validate().is_empty(), "{l}⊗{a}");
            assert_eq!(g.dim(), la.dim() * aa.dim());
            for m in [adjoint(&la), trivial(&la, 1)] {
                let mv = tensor_module(&m, &regular(&aa)).unwrap();
                let d0 = ce_differential(0, &g, &mv).unwrap();
                let d1 = ce_differential(1, &g, &mv).unwrap();
                let d2 = ce_differential(2, &g, &mv).unwrap();
                assert!(d1.mul(&d0).unwrap().is_zero() && d2.mul(&d1).unwrap().is_zero(), "{l}/{}⊗{a}", m.name);
            }
        }
    }
}
