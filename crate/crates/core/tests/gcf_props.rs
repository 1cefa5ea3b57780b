mod common;

use gcflab::exact::{ratio, Integer, Rational};
use gcflab::gcf::{
    self, diagnostics, enclosures, quadratic_approximant, rho, rhos, GcfInput, Recurrence,
};
use num_traits::{One, Signed};
use proptest::prelude::*;

fn input_strategy() -> impl Strategy<Value = GcfInput> {
    (any::<u64>(), any::<bool>()).prop_map(|(seed, explicit)| {
        let mut r = common::rng(seed);
        if explicit {
            common::explicit_input(&mut r, 200)
        } else {
            common::substitution_input(&mut r)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_equals_convergent(input in input_strategy()) {
        let sums = gcf::series_partials(&input, 150).unwrap();
        for pair in input.convergents(150).skip(1) {
            let pair = pair.unwrap();
            prop_assert_eq!(&sums[pair.n - 1], &pair.value());
        }
    }

    #[test]
    fn enclosures_nest_and_shrink(input in input_strategy()) {
        let all = enclosures(&input, 120).unwrap();
        let bound = {
            let (a, b) = (input.alpha().clone(), input.beta().clone());
            Rational::new(b.clone(), a + b)
        };
        for w in all.windows(2) {
            prop_assert!(w[1].is_within(&w[0]));
            let factor = w[1].width() / w[0].width();
            prop_assert!(factor < Rational::one());
            prop_assert!(factor < bound || w[0].depth < 2);
        }
    }

    #[test]
    fn growth_bounds(input in input_strategy()) {
        let beta = input.beta().clone();
        let step = Integer::from(4) * &beta * &beta * &beta;
        let mut rhs = Integer::one();
        let mut rec = Recurrence::new(&input).unwrap();
        for n in 1..150usize {
            rec.advance().unwrap();
            rhs *= &step;
            let q = rec.q();
            prop_assert!(q * q <= rhs, "q_n^(1/n) bound at n = {}", n);
            if n >= 2 {
                // q_n ≥ 2^{(n−2)/2}
                prop_assert!(q * q >= Integer::one() << (n - 2));
            }
        }
    }

    #[test]
    fn rho_is_negative_and_below_one(input in input_strategy()) {
        for r in rhos(&input, 100).unwrap() {
            prop_assert!(r.is_negative());
            prop_assert!(r.abs() < Rational::one());
        }
    }

    #[test]
    fn gcd_divides_product(input in input_strategy()) {
        for row in diagnostics(&input, 100).unwrap() {
            let row = row.unwrap();
            prop_assert!(row.d_divides_p());
        }
    }

    #[test]
    fn quadratic_root_is_bracketed(input in input_strategy(), k in 1usize..12) {
        let qa = quadratic_approximant(&input, k).unwrap();
        prop_assert!(qa.coefficients.brackets(&qa.root));
        let psi = input.periodic_continuation(k).unwrap();
        let last = psi.convergents(200 * k).last().unwrap().unwrap();
        prop_assert!(qa.root.contains(&last.value()));
    }
}

#[test]
fn upper_rho_bound_is_attained_when_q0_equals_q1() {
    // All ones: ρ_1 = −1/2 while (1 + α/β)^{−1} = 1/2.
    let ones = GcfInput::periodic(vec![1.into()], vec![1.into()]).unwrap();
    assert_eq!(rho(&ones, 1).unwrap().abs(), ratio(1, 2));
}

#[test]
fn lower_rho_bound_is_attained_at_k2() {
    // a_1 = 1 gives q_0 = q_1; with b_1 = a_2 = a_3 = β and b_2 = α the
    // estimate q_2 ≤ 2β q_1 is sharp.
    let ints = |v: &[i64]| v.iter().map(|&x| x.into()).collect::<Vec<Integer>>();
    let input = GcfInput::explicit(ints(&[1, 1, 3, 3, 1]), ints(&[1, 3, 1, 1])).unwrap();
    let (alpha, beta) = (input.alpha().clone(), input.beta().clone());
    let bound = Rational::new(alpha.clone(), alpha + Integer::from(2) * &beta * &beta);
    assert_eq!(rho(&input, 2).unwrap().abs(), bound);
}

#[test]
fn exhausted_explicit_input_is_reported() {
    let ints = |v: &[i64]| v.iter().map(|&x| x.into()).collect::<Vec<Integer>>();
    let input = GcfInput::explicit(ints(&[1, 2, 3]), ints(&[1, 1, 1])).unwrap();
    assert!(gcf::enclosure(&input, 5).is_err());
    assert!(gcf::series_partial(&input, 2).is_ok());
}
