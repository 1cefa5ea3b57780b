use gcflab::exact::Word;
use gcflab::rcf::{
    beta_word, confirmed_quotients, cross_check_with, encode, folding_normal_form, normalize,
    LetterEncoding, Normalizer,
};
use gcflab::substitution::folding_word;
use proptest::prelude::*;

fn ab_word() -> impl Strategy<Value = Word<char>> {
    prop::collection::vec(prop_oneof![Just('a'), Just('b')], 0..60).prop_map(Word::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normal_form_is_exact(w in ab_word()) {
        let enc = LetterEncoding::canonical();
        let nf = normalize(&w, &enc).unwrap();
        prop_assert!(nf.verify(&encode(&w, &enc).unwrap()));
        prop_assert_eq!(nf.parity as usize, w.len() % 2);
    }

    #[test]
    fn prefix_never_shrinks(w in ab_word()) {
        let mut n = Normalizer::new(LetterEncoding::canonical());
        let mut before = n.prefix().to_plain();
        for &c in &w {
            n.push(c).unwrap();
            let after = n.prefix().to_plain();
            prop_assert!(after.starts_with(&before));
            before = after;
        }
    }

    #[test]
    fn confirmed_quotients_survive_extension(w in ab_word(), tail in ab_word()) {
        let enc = LetterEncoding::canonical();
        let short = confirmed_quotients(&normalize(&w, &enc).unwrap());
        let long = confirmed_quotients(&normalize(&w.concat(&tail), &enc).unwrap());
        prop_assert!(long.confirmed.starts_with(&short.confirmed));
        if long.confirmed.len() > short.confirmed.len() {
            prop_assert!(long.confirmed[short.confirmed.len()] >= short.next_lower_bound);
        }
    }

    #[test]
    fn other_assignments_agree(v in 2u64..=9, g in 3usize..=7) {
        let values = format!("a=1,b={v}").parse().unwrap();
        let c = cross_check_with(g, 1 << (g + 1), &values).unwrap();
        prop_assert!(!c.discrepancy);
        prop_assert!(c.bounds_consistent);
    }
}

#[test]
fn generations_are_stable() {
    let enc = LetterEncoding::canonical();
    let reports: Vec<_> = (0..=10)
        .map(|g| confirmed_quotients(&folding_normal_form(g, &enc).unwrap()))
        .collect();
    for pair in reports.windows(2) {
        assert!(pair[1].confirmed.starts_with(&pair[0].confirmed));
    }
    assert!(reports[10].confirmed.len() > reports[3].confirmed.len());
}

#[test]
fn beta_words_experiment() {
    // Observed, not proved: generations 1 to 3 factor over β1, β2, L, R
    // without β3; from generation 4 on the search runs out of budget.
    let enc = LetterEncoding::canonical();
    let found: Vec<Option<String>> = (0..=5)
        .map(|g| {
            let nf = normalize(&folding_word(g), &enc).unwrap();
            beta_word(&nf, 100_000).map(|bw| {
                assert_eq!(bw.product(), nf.residual, "generation {g}");
                assert!(!bw.uses_beta3());
                bw.to_string()
            })
        })
        .collect();
    assert_eq!(found[0], None, "J alone has no nonnegative factorization");
    assert_eq!(found[1].as_deref(), Some("β2RJ"));
    assert_eq!(found[2].as_deref(), Some("β2^2RJ"));
    assert_eq!(found[3].as_deref(), Some("β1^2L^2β2^3RJ"));
    assert!(found[4..].iter().all(Option::is_none));
}
