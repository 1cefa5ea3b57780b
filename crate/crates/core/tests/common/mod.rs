//! Seeded random inputs shared by the integration suites.

#![allow(dead_code)]

use gcflab::exact::{Integer, Word};
use gcflab::gcf::GcfInput;
use gcflab::substitution::{NumericAssignment, Substitution};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// 2 to 4 distinct values in `[1, 9]`.
fn alphabet(rng: &mut ChaCha8Rng) -> Vec<u64> {
    let size = rng.gen_range(2..=4);
    let mut all: Vec<u64> = (1..=9).collect();
    all.shuffle(rng);
    all.truncate(size);
    all
}

/// Independent uniform draws of `a_0, …, a_{len}` and `b_0, …, b_{len}`.
pub fn explicit_input(rng: &mut ChaCha8Rng, len: usize) -> GcfInput {
    let values = alphabet(rng);
    let mut draw = |n: usize| -> Vec<Integer> {
        (0..n)
            .map(|_| Integer::from(*values.choose(rng).expect("nonempty")))
            .collect()
    };
    let a = draw(len + 1);
    let b = draw(len + 1);
    GcfInput::explicit(a, b).expect("valid explicit input")
}

/// A random primitive substitution on 2 or 3 letters whose fixed point from
/// `a` is infinite.
pub fn substitution(rng: &mut ChaCha8Rng) -> Substitution<char> {
    let letters: Vec<char> = "abc".chars().take(rng.gen_range(2..=3)).collect();
    loop {
        let rules = letters.iter().map(|&l| {
            let len = rng.gen_range(if l == 'a' { 2..=4 } else { 1..=4 });
            let mut image: Vec<char> = (0..len).map(|_| *letters.choose(rng).unwrap()).collect();
            if l == 'a' {
                image[0] = 'a';
            }
            (l, Word::new(image))
        });
        if let Ok(s) = Substitution::new(rules.collect::<Vec<_>>()) {
            if s.is_primitive() && s.fixed_point('a').is_ok() {
                return s;
            }
        }
    }
}

/// `a = b =` a substitution fixed point read through random values.
pub fn substitution_input(rng: &mut ChaCha8Rng) -> GcfInput {
    let s = substitution(rng);
    let values = alphabet(rng);
    let assign = NumericAssignment::new(
        s.alphabet()
            .copied()
            .zip(values.iter().cycle().map(|&v| Integer::from(v)))
            .collect::<Vec<_>>(),
    )
    .expect("values ≥ 1");
    GcfInput::from_substitution(s, 'a', assign).expect("valid substitution input")
}

/// Alternates between the two kinds so both are covered.
pub fn random_inputs(seed: u64, count: usize, len: usize) -> Vec<GcfInput> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            if i % 2 == 0 {
                explicit_input(&mut r, len)
            } else {
                substitution_input(&mut r)
            }
        })
        .collect()
}
