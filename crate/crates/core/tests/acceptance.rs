//! End-to-end acceptance checks, one line per criterion.

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use curcoh::bulk::{run_seed_matrix, BulkReport};
use curcoh::linalg::{int, LinearSubspace, RatMatrix, Rational};
use curcoh::verify::{verify, Instance, TheoremId};

/// Criteria whose closed-form side disagrees with the direct computation on some instances.
const KNOWN_FAILING: [u32; 3] = [5, 6, 14];

fn rank_one(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RatMatrix {
    let c: Vec<i64> = (0..rows).map(|_| rng.gen_range(-2..=2)).collect();
    let r: Vec<i64> = (0..cols).map(|_| rng.gen_range(-2..=2)).collect();
    let dense: Vec<Vec<Rational>> = c.iter().map(|x| r.iter().map(|y| int(x * y)).collect()).collect();
    RatMatrix::from_dense_rows(cols, &dense).unwrap()
}

fn two_kernels(s: &RatMatrix, s2: &RatMatrix, t: &RatMatrix, t2: &RatMatrix) -> bool {
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
    direct == LinearSubspace::sum_all(du * dw, &refs).unwrap()
}

fn criterion_10() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x11);
    let cases = 200;
    let mut ok = 0;
    for _ in 0..cases {
        let (du, dw) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (a, b) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (s, s2) = (rank_one(&mut rng, a, du), rank_one(&mut rng, b, du));
        let (t, t2) = (rank_one(&mut rng, a, dw), rank_one(&mut rng, b, dw));
        ok += usize::from(two_kernels(&s, &s2, &t, &t2));
    }
    (ok == cases, format!("{ok}/{cases} rank-one quadruples"))
}

fn summary(report: &BulkReport, c: u32) -> String {
    let rows: Vec<_> = report.rows.iter().filter(|r| r.criterion == c).collect();
    let bad: Vec<String> = rows.iter().filter(|r| !r.matched).map(|r| format!("{} {} ({} vs {})", r.check, r.instance, r.direct, r.formula)).collect();
    if bad.is_empty() {
        format!("{} rows", rows.len())
    } else {
        format!("{}/{} rows match; mismatches: {}", rows.len() - bad.len(), rows.len(), bad.join(", "))
    }
}

fn row(report: &BulkReport, c: u32, instance: &str) -> Option<(usize, usize)> {
    report.rows.iter().find(|r| r.criterion == c && r.instance == instance).map(|r| (r.direct, r.formula))
}

fn anchors(report: &BulkReport, c: u32) -> (bool, String) {
    match c {
        2 => {
            let ok = row(report, 2, "sl2/adjoint ⊗ tp2") == Some((1, 1)) && row(report, 2, "ab1/trivial(1) ⊗ tp2") == Some((4, 4));
            (ok, "anchors sl2/tp2 = 1, ab1/tp2 = 4".into())
        }
        3 => (row(report, 3, "sl2/adjoint ⊗ tp2") == Some((7, 7)), "anchor Der(sl2⊗tp2) = 7".into()),
        4 => {
            let inst = Instance::catalog("ab1", "trivial(1)", "tp2", "regular").unwrap();
            let r = verify(TheoremId::T3_7, &inst).unwrap();
            let carried = r.summand_dims.iter().all(|s| (s.dim == 0) != s.label.starts_with("SH2"));
            (r.direct_dim == 2 && r.formula_dim == 2 && carried, "anchor H² = 2 carried by SH²⊗Anti".into())
        }
        9 => {
            let a = curcoh::multilinear::young_cauchy3_dims(2, 2).0 == 4 && curcoh::multilinear::young_cauchy3_dims(3, 2).0 == 20;
            (a, "anchors (2,2)→4, (3,2)→20".into())
        }
        _ => (true, String::new()),
    }
}

fn binary_seed_matrix() -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_curcoh")).args(["--format", "json", "verify", "--seed-matrix"]).output().unwrap();
    out.stdout
}

fn main() {
    let report = run_seed_matrix().expect("seed matrix runs");
    let mut results: Vec<(u32, bool, String)> = Vec::new();
    for c in 1..=15u32 {
        let (pass, detail) = match c {
            10 => criterion_10(),
            15 => {
                let again = serde_json::to_string_pretty(&run_seed_matrix().unwrap()).unwrap();
                let first = serde_json::to_string_pretty(&report).unwrap();
                let (b1, b2) = (binary_seed_matrix(), binary_seed_matrix());
                (first == again && b1 == b2 && !b1.is_empty(), "library and binary reports byte-identical".into())
            }
            _ => {
                let (a, note) = anchors(&report, c);
                let rows = report.rows.iter().any(|r| r.criterion == c);
                let pass = rows && report.criterion_passed(c) && a;
                let detail = if note.is_empty() { summary(&report, c) } else { format!("{}; {note}", summary(&report, c)) };
                (pass, detail)
            }
        };
        println!("criterion {c:>2}: {} {detail}", if pass { "PASS" } else { "FAIL" });
        results.push((c, pass, detail));
    }
    let passed = results.iter().filter(|r| r.1).count();
    println!("acceptance: {passed}/15 criteria pass");
    let unexpected: Vec<u32> = results.iter().filter(|(c, pass, _)| *pass == KNOWN_FAILING.contains(c)).map(|r| r.0).collect();
    if !unexpected.is_empty() {
        eprintln!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
