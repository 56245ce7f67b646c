#![allow(dead_code)]

use mazurkit_core::algebra::{Letter, Word};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

pub fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x6d_617a_7572), failure_persistence: None, ..Config::default() }
}

pub fn letters(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0..rank, any::<bool>()).prop_map(|(g, inv)| Letter::new(g, inv)), 0..=max_len)
}

pub fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    letters(rank, max_len).prop_map(move |ls| Word::from_letters(rank, ls).unwrap())
}
