use gcflab::exact::Mat2;
use gcflab::raney::{
    balanced_class, derive_table, emit, emit_matrix, enumerate_states, run, BalanceClass, Config,
    Lr, LrRuns,
};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn nonsingular(max: u64) -> impl Strategy<Value = Mat2> {
    (0..=max, 0..=max, 0..=max, 0..=max)
        .prop_map(|(a, b, c, d)| Mat2::new(a, b, c, d))
        .prop_filter("nonsingular", |m| !m.det().is_zero())
}

fn lr_word() -> impl Strategy<Value = LrRuns> {
    prop::collection::vec(any::<bool>(), 0..40).prop_map(|bits| {
        bits.into_iter()
            .map(|b| if b { Lr::R } else { Lr::L })
            .collect()
    })
}

fn state() -> impl Strategy<Value = Config> {
    (2u64..=6).prop_flat_map(|det| {
        let states = enumerate_states(det).unwrap();
        (0..states.len()).prop_map(move |i| states[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn greedy_factorization_is_exact_and_stuck(m in nonsingular(1_000_000)) {
        let (out, residual) = emit_matrix(&m).unwrap();
        prop_assert_eq!(&out.product() * &residual, m.clone());
        prop_assert!(residual.is_nonnegative());
        // Stuck: emitting again yields nothing.
        let (again, same) = emit_matrix(&residual).unwrap();
        prop_assert!(again.is_empty());
        prop_assert_eq!(same, residual.clone());
        prop_assert_eq!(emit_matrix(&m).unwrap(), (out, residual.clone()));
        // Stuck exactly when row balanced.
        prop_assert!(matches!(balanced_class(&residual), BalanceClass::Doubly | BalanceClass::RowOnly));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn run_identity_and_conservation(s in state(), w in lr_word()) {
        let (out, last) = run(&s, &w).unwrap();
        prop_assert_eq!(s.matrix() * &w.product(), &out.product() * last.matrix());
        prop_assert_eq!(last.det().abs(), s.det().abs());
    }

    #[test]
    fn streaming_matches_batch(s in state(), w in lr_word()) {
        let (streamed, last) = run(&s, &w).unwrap();
        let whole = Config::new(s.matrix() * &w.product()).unwrap();
        let (batch, residual) = emit(&whole).unwrap();
        prop_assert_eq!(streamed, batch);
        prop_assert_eq!(last, residual);
    }
}

#[test]
fn derived_tables_verify() {
    for det in 2..=8 {
        let table = derive_table(det, 24).unwrap();
        assert!(table.edges.iter().all(|e| e.verify()), "det {det}");
        for s in &table.states {
            assert_eq!(s.class(), BalanceClass::Doubly);
            assert!(table.edges_from(s).count() >= 2, "det {det}: {s}");
        }
    }
}
