#![allow(dead_code)]

use proptest::test_runner::{Config, RngSeed};

pub const SEED: u64 = 0x6d_617a_7572;

pub fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(SEED), failure_persistence: None, ..Config::default() }
}
