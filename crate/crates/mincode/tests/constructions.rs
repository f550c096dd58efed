//! Cross-module flows: function -> code -> distribution -> verdict, the
//! spectral routes against the enumeration routes, and format round-trips.

use mincode::code::WeightDistribution;
use mincode::format::{parse_generator, write_generator};
use mincode::minimality::{
    ashikhmin_barg, is_minimal_definitional, is_minimal_weight_criterion, two_weight_sufficient,
    Outcome, Sufficiency, WalshInequality, Witness,
};
use mincode::ternary::{
    build_cf, build_cf_general, distribution_from_walsh, distribution_gmk_closed, is_minimal_walsh,
    make_gmk, FieldFunction, TernaryFunction,
};
use mincode::{FieldVector, LinearCode, PrimeField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

fn gmk52_distribution() -> WeightDistribution {
    WeightDistribution::from_counts(BTreeMap::from([
        (0, 1),
        (50, 2),
        (158, 320),
        (162, 242),
        (167, 144),
        (185, 20),
    ]))
}

#[test]
fn gmk52_all_routes_agree_on_the_enumerator() {
    let f = make_gmk(5, 2).unwrap();
    let code = build_cf(&f).unwrap();
    assert_eq!((code.field().q(), code.n(), code.k()), (3, 242, 6));
    let expected = gmk52_distribution();
    assert_eq!(code.weight_distribution(), expected);
    assert_eq!(distribution_from_walsh(&f).unwrap(), expected);
    assert_eq!(distribution_gmk_closed(5, 2).unwrap(), expected);
}

#[test]
fn gmk52_is_minimal_but_fails_the_ratio_screen() {
    let f = make_gmk(5, 2).unwrap();
    let code = build_cf(&f).unwrap();
    assert_eq!(is_minimal_definitional(&code).outcome, Outcome::Minimal);
    let dist = gmk52_distribution();
    assert_eq!(ashikhmin_barg(&dist, code.field()).unwrap(), Sufficiency::Inconclusive);
}

#[test]
fn binary_weight_two_indicator_gives_a_minimal_63_7_code() {
    let field = PrimeField::new(2).unwrap();
    let mut values = vec![0u16; 64];
    for (idx, v) in values.iter_mut().enumerate().skip(1) {
        *v = u16::from((idx as u32).count_ones() <= 2);
    }
    let f = FieldFunction::new(field, 6, values).unwrap();
    let code = build_cf_general(&f).unwrap();
    assert_eq!((code.field().q(), code.n(), code.k()), (2, 63, 7));
    let d = is_minimal_definitional(&code);
    let w = is_minimal_weight_criterion(&code);
    assert_eq!(d.outcome, Outcome::Minimal);
    assert_eq!(w.outcome, Outcome::Minimal);
    let expected = WeightDistribution::from_counts(BTreeMap::from([
        (0, 1),
        (21, 1),
        (29, 35),
        (32, 63),
        (33, 21),
        (41, 7),
    ]));
    assert_eq!(code.weight_distribution(), expected);
}

#[test]
fn random_ternary_functions_spectral_equals_enumerated_distribution() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..25 {
        let f = random_function(&mut rng, 4);
        assert_eq!(
            distribution_from_walsh(&f).unwrap(),
            build_cf(&f).unwrap().weight_distribution()
        );
    }
}

#[test]
fn random_m4_functions_spectral_scan_equals_weight_criterion() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..10 {
        let f = random_function(&mut rng, 4);
        let spectral = is_minimal_walsh(&f).unwrap();
        let generic = is_minimal_weight_criterion(&build_cf(&f).unwrap());
        assert_eq!(spectral.outcome, generic.outcome);
    }
}

#[test]
fn generator_file_round_trips_through_the_code() {
    let code = build_cf(&make_gmk(4, 2).unwrap()).unwrap();
    let text = write_generator(&code);
    let reparsed = parse_generator(&text).unwrap();
    assert_eq!(reparsed, code);
    assert_eq!(write_generator(&reparsed), text);
}

#[test]
fn parallel_and_sequential_scans_report_the_same_witness() {
    // A non-minimal code with several violations: the full space GF(3)^3.
    let field = PrimeField::new(3).unwrap();
    let rows = vec![
        FieldVector::new(field, vec![1, 0, 0]).unwrap(),
        FieldVector::new(field, vec![0, 1, 0]).unwrap(),
        FieldVector::new(field, vec![0, 0, 1]).unwrap(),
    ];
    let code = LinearCode::new(rows).unwrap();
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let wide = rayon::ThreadPoolBuilder::new().num_threads(8).build().unwrap();
    let v1 = single.install(|| is_minimal_definitional(&code));
    let v8 = wide.install(|| is_minimal_definitional(&code));
    assert_eq!(v1, v8);
    let w1 = single.install(|| is_minimal_weight_criterion(&code));
    let w8 = wide.install(|| is_minimal_weight_criterion(&code));
    assert_eq!(w1, w8);
    assert_eq!(
        v1.cover_witness().map(|w| (w.a_index, w.b_index)),
        w1.cover_witness().map(|w| (w.a_index, w.b_index))
    );
}

#[test]
fn walsh_violations_are_thread_count_independent() {
    // g_(2,1) sits outside the certified parameter window and its code is
    // genuinely non-minimal: the spectrum hits the symmetric equality on
    // the triple (0, 4, 8). The least violating triple must come back
    // identical under any pool.
    let f = make_gmk(2, 1).unwrap();
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let wide = rayon::ThreadPoolBuilder::new().num_threads(8).build().unwrap();
    let v1 = single.install(|| is_minimal_walsh(&f).unwrap());
    let v8 = wide.install(|| is_minimal_walsh(&f).unwrap());
    assert_eq!(v1, v8);
    assert_eq!(v1.outcome, Outcome::NotMinimal);
    match &v1.witness {
        Some(Witness::Walsh(w)) => {
            assert_eq!((w.w1, w.w2, w.w3), (0, 4, 8));
            assert_eq!(w.inequality, WalshInequality::Symmetric);
        }
        other => panic!("expected a spectral witness, got {other:?}"),
    }
    // The generic checkers confirm the refutation.
    let code = build_cf(&f).unwrap();
    assert_eq!(is_minimal_definitional(&code).outcome, Outcome::NotMinimal);
    assert_eq!(is_minimal_weight_criterion(&code).outcome, Outcome::NotMinimal);
}

#[test]
fn sufficient_conditions_are_one_sided() {
    // Whenever the ratio screen or the two-weight shortcut certifies
    // minimality, the definitional scan agrees.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for q in [2u64, 3, 5] {
        let field = PrimeField::new(q).unwrap();
        for _ in 0..60 {
            let n = rng.random_range(3..=9usize);
            let k = rng.random_range(1..=3usize.min(n));
            let code = random_code(&mut rng, field, n, k);
            let dist = code.weight_distribution();
            let mut certified = ashikhmin_barg(&dist, field).unwrap() == Sufficiency::Minimal;
            if let Some((w1, w2)) = dist.two_weights() {
                certified |= two_weight_sufficient(field.q(), w1, w2).unwrap()
                    == Sufficiency::Minimal;
            }
            if certified {
                assert_eq!(is_minimal_definitional(&code).outcome, Outcome::Minimal);
            }
        }
    }
}

fn random_code(rng: &mut ChaCha8Rng, field: PrimeField, n: usize, k: usize) -> LinearCode {
    loop {
        let rows: Vec<FieldVector> = (0..k)
            .map(|_| {
                let entries = (0..n).map(|_| rng.random_range(0..field.q())).collect();
                FieldVector::new(field, entries).unwrap()
            })
            .collect();
        if let Ok(code) = LinearCode::new(rows) {
            return code;
        }
    }
}

fn random_function(rng: &mut ChaCha8Rng, m: usize) -> TernaryFunction {
    let size = 3usize.pow(m as u32);
    loop {
        let mut values = vec![0u8; size];
        for v in values.iter_mut().skip(1) {
            *v = rng.random_range(0..3u8);
        }
        if let Ok(f) = TernaryFunction::new(m, values) {
            if mincode::ternary::dimension_ok(&f) {
                return f;
            }
        }
    }
}
