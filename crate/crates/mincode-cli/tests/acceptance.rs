//! Acceptance gate: one test per criterion, each enforcing its stated
//! tolerance (exact equality everywhere) and runtime budget, and printing
//! a PASS line with the elapsed time. Criteria phrased as CLI pipelines
//! run the real binary; the rest drive the library directly.

use mincode::krawtchouk::{binomial, character_sum_oracle, krawtchouk, lloyd};
use mincode::minimality::{
    ashikhmin_barg, cover_by_weights, is_minimal_definitional, is_minimal_weight_criterion,
    Outcome, Sufficiency,
};
use mincode::ternary::{
    build_cf, distribution_from_walsh, distribution_gmk_closed, gmk_certificate, is_minimal_walsh,
    make_gmk, TernaryFunction,
};
use mincode::{FieldVector, LinearCode, PrimeField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mincode"))
}

fn run_ok(cmd: &mut Command) -> String {
    let output = cmd.output().expect("binary runs");
    assert!(
        output.status.success(),
        "command failed: {:?}\nstderr: {}",
        cmd,
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout).expect("utf-8 output")
}

fn work_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mincode-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    dir
}

fn json_weights(report: &serde_json::Value) -> BTreeMap<usize, u64> {
    report["weights"]
        .as_object()
        .expect("weights object")
        .iter()
        .map(|(k, v)| (k.parse().unwrap(), v.as_u64().unwrap()))
        .collect()
}

fn gmk52_expected() -> BTreeMap<usize, u64> {
    BTreeMap::from([(0, 1), (50, 2), (158, 320), (162, 242), (167, 144), (185, 20)])
}

fn gmk72_expected() -> BTreeMap<usize, u64> {
    BTreeMap::from([
        (0, 1),
        (98, 2),
        (1451, 1344),
        (1454, 1120),
        (1457, 896),
        (1458, 2186),
        (1466, 560),
        (1472, 256),
        (1487, 168),
        (1517, 28),
    ])
}

fn finish(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(elapsed < budget, "{name} took {elapsed:?}, budget {budget:?}");
    println!("PASS {name} in {elapsed:?} (budget {budget:?})");
}

#[test]
fn c01_gmk52_enumerator_exact_via_cli() {
    let started = Instant::now();
    let gen = work_dir().join("c52.gen");
    let out = run_ok(bin().args(["construct", "gmk", "--m", "5", "--k", "2", "--out"]).arg(&gen));
    assert!(out.contains("n 242") && out.contains("k 6") && out.contains("q 3"));
    let report: serde_json::Value =
        serde_json::from_str(&run_ok(bin().args(["weights", "--json", "--code"]).arg(&gen)))
            .unwrap();
    assert_eq!(report["q"], 3);
    assert_eq!(report["n"], 242);
    assert_eq!(report["k"], 6);
    assert_eq!(json_weights(&report), gmk52_expected());
    finish("c01 gmk(5,2) enumerator", started, Duration::from_secs(5));
}

#[test]
fn c02_gmk72_enumerator_exact_via_cli() {
    let started = Instant::now();
    let gen = work_dir().join("c72.gen");
    run_ok(bin().args(["construct", "gmk", "--m", "7", "--k", "2", "--out"]).arg(&gen));
    let header = std::fs::read_to_string(&gen).unwrap();
    assert!(header.starts_with("3 2186 8\n"));
    let report: serde_json::Value =
        serde_json::from_str(&run_ok(bin().args(["weights", "--json", "--code"]).arg(&gen)))
            .unwrap();
    assert_eq!(report["n"], 2186);
    assert_eq!(report["k"], 8);
    assert_eq!(report["wmin"], 98);
    let weights = json_weights(&report);
    assert_eq!(weights.len(), 10);
    assert_eq!(weights, gmk72_expected());
    finish("c02 gmk(7,2) enumerator", started, Duration::from_secs(60));
}

#[test]
fn c03_gmk52_minimal_by_three_checkers() {
    let started = Instant::now();
    let f = make_gmk(5, 2).unwrap();
    let code = build_cf(&f).unwrap();
    let definitional = is_minimal_definitional(&code);
    let weights = is_minimal_weight_criterion(&code);
    let walsh = is_minimal_walsh(&f).unwrap();
    assert_eq!(definitional.outcome, Outcome::Minimal);
    assert_eq!(weights.outcome, Outcome::Minimal);
    assert_eq!(walsh.outcome, Outcome::Minimal);
    finish("c03 gmk(5,2) minimal, three checkers agree", started, Duration::from_secs(60));
}

#[test]
fn c04_gmk72_minimal_by_walsh_scan() {
    let started = Instant::now();
    let verdict = is_minimal_walsh(&make_gmk(7, 2).unwrap()).unwrap();
    assert_eq!(verdict.outcome, Outcome::Minimal);
    finish("c04 gmk(7,2) minimal by spectral scan", started, Duration::from_secs(120));
}

#[test]
fn c05_ratio_screen_fails_where_criteria_certify() {
    let started = Instant::now();
    let field = PrimeField::new(3).unwrap();

    let f52 = make_gmk(5, 2).unwrap();
    let dist52 = distribution_from_walsh(&f52).unwrap();
    assert_eq!((dist52.w_min(), dist52.w_max()), (Some(50), Some(185)));
    assert!(3 * dist52.w_min().unwrap() <= 2 * dist52.w_max().unwrap());
    assert_eq!(ashikhmin_barg(&dist52, field).unwrap(), Sufficiency::Inconclusive);
    assert_eq!(is_minimal_walsh(&f52).unwrap().outcome, Outcome::Minimal);

    let f72 = make_gmk(7, 2).unwrap();
    let dist72 = distribution_from_walsh(&f72).unwrap();
    assert_eq!((dist72.w_min(), dist72.w_max()), (Some(98), Some(1517)));
    assert!(3 * dist72.w_min().unwrap() <= 2 * dist72.w_max().unwrap());
    assert_eq!(ashikhmin_barg(&dist72, field).unwrap(), Sufficiency::Inconclusive);
    assert_eq!(is_minimal_walsh(&f72).unwrap().outcome, Outcome::Minimal);

    // Exit-code contract: the screen is inconclusive (2), not a refutation.
    let gen = work_dir().join("c52-ab.gen");
    run_ok(bin().args(["construct", "gmk", "--m", "5", "--k", "2", "--out"]).arg(&gen));
    let output = bin()
        .args(["check-minimal", "--method", "ab", "--code"])
        .arg(&gen)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    finish("c05 ratio screen inconclusive on minimal codes", started, Duration::from_secs(120));
}

#[test]
fn c06_krawtchouk_identity_suite() {
    let started = Instant::now();
    for q in [2u64, 3, 4, 5] {
        let qm1 = q as i128 - 1;
        for m in 1u32..=12 {
            for t in 0..=m {
                let bound = qm1.pow(t) * binomial(m, t).unwrap();
                // endpoint and near-endpoint closed forms
                assert_eq!(krawtchouk(q, m, t, 0).unwrap(), bound);
                let second = if t == 0 { 0 } else { qm1.pow(t - 1) * binomial(m - 1, t - 1).unwrap() };
                assert_eq!(
                    krawtchouk(q, m, t, 1).unwrap(),
                    qm1.pow(t) * binomial(m - 1, t).unwrap() - second
                );
                assert_eq!(
                    krawtchouk(q, m, t, m).unwrap(),
                    (-1i128).pow(t) * binomial(m, t).unwrap()
                );
                for x in 0..=m {
                    let k_x = krawtchouk(q, m, t, x).unwrap();
                    // three-term recurrence, boundary terms killed by their
                    // coefficients
                    let up = if x == m { 0 } else { krawtchouk(q, m, t, x + 1).unwrap() };
                    let down = if x == 0 { 0 } else { krawtchouk(q, m, t, x - 1).unwrap() };
                    let mid = x as i128 + qm1 * (m - x) as i128 - q as i128 * t as i128;
                    assert_eq!(qm1 * (m - x) as i128 * up - mid * k_x + x as i128 * down, 0);
                    // degree/argument symmetry
                    assert_eq!(
                        qm1.pow(x) * binomial(m, x).unwrap() * k_x,
                        qm1.pow(t) * binomial(m, t).unwrap() * krawtchouk(q, m, x, t).unwrap()
                    );
                    // bounds
                    assert!(k_x <= krawtchouk(q, m, t, 0).unwrap());
                    assert!(k_x.abs() <= bound);
                }
            }
            // Lloyd: shift identity, bound, and tightness at x = 1.
            for k in 1..m {
                let lloyd_bound = qm1.pow(k) * binomial(m - 1, k).unwrap();
                for x in 1..=m {
                    let psi = lloyd(q, m, k, x).unwrap();
                    assert_eq!(psi, krawtchouk(q, m - 1, k, x - 1).unwrap());
                    assert!(psi.abs() <= lloyd_bound);
                }
                assert_eq!(lloyd(q, m, k, 1).unwrap(), lloyd_bound);
            }
        }
    }
    finish("c06 Krawtchouk/Lloyd identity suite", started, Duration::from_secs(30));
}

#[test]
fn c07_character_sum_oracle_matches_polynomial() {
    let started = Instant::now();
    let field = PrimeField::new(3).unwrap();
    // Exhaustive over GF(3)^m for m <= 4.
    for m in 1usize..=4 {
        let total = 3usize.pow(m as u32);
        for idx in 0..total {
            let u = unrank(field, m, idx);
            for t in 0..=m {
                assert_eq!(
                    character_sum_oracle(&u, t).unwrap(),
                    krawtchouk(3, m as u32, t as u32, u.weight() as u32).unwrap()
                );
            }
        }
    }
    // 1000 random draws with m <= 8.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0acc_0007);
    for _ in 0..1000 {
        let m = rng.random_range(1..=8usize);
        let entries: Vec<u16> = (0..m).map(|_| rng.random_range(0..3u16)).collect();
        let u = FieldVector::new(field, entries).unwrap();
        let t = rng.random_range(0..=m);
        assert_eq!(
            character_sum_oracle(&u, t).unwrap(),
            krawtchouk(3, m as u32, t as u32, u.weight() as u32).unwrap()
        );
    }
    finish("c07 character-sum oracle", started, Duration::from_secs(30));
}

#[test]
fn c08_cover_and_weight_identities() {
    let started = Instant::now();
    // Exhaustive pairs for q in {2, 3}, n <= 5.
    for q in [2u64, 3] {
        let field = PrimeField::new(q).unwrap();
        for n in 1usize..=5 {
            let total = (q as usize).pow(n as u32);
            for ai in 0..total {
                let a = unrank(field, n, ai);
                for bi in 0..total {
                    let b = unrank(field, n, bi);
                    check_pair_identities(field, &a, &b);
                }
            }
        }
    }
    // 10,000 random pairs for q in {3, 5, 7}, n <= 64.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0acc_0008);
    for _ in 0..10_000 {
        let q = [3u64, 5, 7][rng.random_range(0..3usize)];
        let field = PrimeField::new(q).unwrap();
        let n = rng.random_range(1..=64usize);
        let a = random_vector(&mut rng, field, n);
        let b = random_vector(&mut rng, field, n);
        check_pair_identities(field, &a, &b);
    }
    finish("c08 cover/weight identity suite", started, Duration::from_secs(60));
}

/// The three equivalent forms of covering, the weight-agreement identity,
/// and the weight-sum cover test, on one pair.
fn check_pair_identities(field: PrimeField, a: &FieldVector, b: &FieldVector) {
    let covers = a.covers(b).unwrap();
    let mut cap_vector_sum = FieldVector::zero(field, a.len());
    let mut cap_weight_sum = 0usize;
    let mut combo_weight_sum = 0usize;
    for c in field.nonzero_elements() {
        let cap = a.scale(c).cap(b).unwrap();
        cap_weight_sum += cap.weight();
        cap_vector_sum = cap_vector_sum.combine(1, &cap).unwrap();
        combo_weight_sum += a.combine(c, b).unwrap().weight();
    }
    assert_eq!(covers, &cap_vector_sum == b);
    assert_eq!(covers, cap_weight_sum == b.weight());
    let lhs = (field.q() as usize - 1) * (a.weight() + b.weight());
    assert_eq!(lhs, combo_weight_sum + field.q() as usize * cap_weight_sum);
    assert_eq!(cover_by_weights(a, b).unwrap(), covers);
}

#[test]
fn c09_checker_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0acc_0009);
    // 100 random [10, 3] codes over GF(3).
    let f3 = PrimeField::new(3).unwrap();
    for _ in 0..100 {
        let code = random_code(&mut rng, f3, 10, 3);
        assert_checkers_agree(&code);
    }
    // 100 random [12, 4] codes over GF(2).
    let f2 = PrimeField::new(2).unwrap();
    for _ in 0..100 {
        let code = random_code(&mut rng, f2, 12, 4);
        assert_checkers_agree(&code);
    }
    // 100 random ternary functions with m = 3: spectral scan versus the
    // weight criterion on the built code.
    for _ in 0..100 {
        let f = random_function(&mut rng, 3);
        let spectral = is_minimal_walsh(&f).unwrap();
        let generic = is_minimal_weight_criterion(&build_cf(&f).unwrap());
        assert_eq!(spectral.outcome, generic.outcome);
    }
    finish("c09 checker oracle equivalence", started, Duration::from_secs(120));
}

fn assert_checkers_agree(code: &LinearCode) {
    let d = is_minimal_definitional(code);
    let w = is_minimal_weight_criterion(code);
    assert_eq!(d.outcome, w.outcome);
    let dw = d.cover_witness();
    let ww = w.cover_witness();
    assert_eq!(
        dw.map(|x| (x.a_index, x.b_index)),
        ww.map(|x| (x.a_index, x.b_index))
    );
    if let Some(x) = dw {
        assert!(x.a.covers(&x.b).unwrap());
        assert!(cover_by_weights(&x.a, &x.b).unwrap());
    }
}

#[test]
fn c10_closed_form_distribution_matches_enumeration() {
    let started = Instant::now();
    for (m, k) in [(5usize, 2usize), (6, 2), (7, 2), (7, 3)] {
        let f = make_gmk(m, k).unwrap();
        let closed = distribution_gmk_closed(m, k).unwrap();
        let enumerated = build_cf(&f).unwrap().weight_distribution();
        assert_eq!(closed, enumerated, "m={m} k={k}");
        assert_eq!(distribution_from_walsh(&f).unwrap(), enumerated, "m={m} k={k}");
        assert_eq!(closed.total(), 3u128.pow(m as u32 + 1));
        // The closed-form extremes agree with the enumerated ones.
        let cert = gmk_certificate(m, k).unwrap();
        assert_eq!(enumerated.w_min(), Some(cert.w_min as usize));
        assert_eq!(enumerated.w_max(), Some(cert.w_max as usize));
    }
    finish("c10 closed-form distributions", started, Duration::from_secs(120));
}

#[test]
fn c11_ratio_flag_for_k2_family() {
    let started = Instant::now();
    for m in 5usize..=10 {
        let cert = gmk_certificate(m, 2).unwrap();
        assert!(cert.ratio_le_two_thirds, "m={m}");
        // The claim is strict for k = 2: w_min/w_max < 2/3.
        assert!(3 * cert.w_min < 2 * cert.w_max, "m={m}");
        assert!(!cert.ab_satisfied, "m={m}");
        assert!(cert.zero_triple_ok, "m={m}");
    }
    finish("c11 ratio flag for the k=2 family", started, Duration::from_secs(30));
}

// ---- helpers ----

fn unrank(field: PrimeField, n: usize, mut idx: usize) -> FieldVector {
    let q = field.q() as usize;
    let mut entries = vec![0u16; n];
    for e in entries.iter_mut().rev() {
        *e = (idx % q) as u16;
        idx /= q;
    }
    FieldVector::new(field, entries).unwrap()
}

fn random_vector(rng: &mut ChaCha8Rng, field: PrimeField, n: usize) -> FieldVector {
    let entries: Vec<u16> = (0..n).map(|_| rng.random_range(0..field.q())).collect();
    FieldVector::new(field, entries).unwrap()
}

/// Uniform generator matrices, redrawn until the rows are independent.
fn random_code(rng: &mut ChaCha8Rng, field: PrimeField, n: usize, k: usize) -> LinearCode {
    loop {
        let rows: Vec<FieldVector> = (0..k).map(|_| random_vector(rng, field, n)).collect();
        if let Ok(code) = LinearCode::new(rows) {
            return code;
        }
    }
}

/// Uniform value tables with f(0) = 0, redrawn until f avoids every linear
/// form.
fn random_function(rng: &mut ChaCha8Rng, m: usize) -> TernaryFunction {
    let size = 3usize.pow(m as u32);
    loop {
        let mut values = vec![0u8; size];
        for v in values.iter_mut().skip(1) {
            *v = rng.random_range(0..3u8);
        }
        let f = TernaryFunction::new(m, values).unwrap();
        if mincode::ternary::dimension_ok(&f) {
            return f;
        }
    }
}

