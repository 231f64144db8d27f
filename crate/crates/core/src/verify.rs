//! Exhaustive and randomized cross-checks.
//!
//! With the `parallel` feature (on by default) the work is spread over the
//! rayon pool; the `_sequential` entry points are always available. Both
//! return identical reports since results are merged in enumeration order.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::fast::grundy_fast;
use crate::fixture::{Component, Position};
use crate::oracle::{grundy_oracle, outcome_playout, PlayoutTable, TranspositionTable};
use crate::sum::{gsum_all, Outcome};
use crate::value::GrundyValue;

/// Largest enumeration length accepted by [`verify_range`].
pub const MAX_VERIFY_LEN: u32 = 30;

/// Number of components of length at most `max_len`.
pub fn component_count(max_len: u32) -> u64 {
    (1u64 << (max_len + 1)) - 1
}

/// The `index`-th component ordered by length, then by socket bit pattern.
pub fn nth_component(index: u64) -> Component {
    let len = 63 - (index + 1).leading_zeros();
    let bits = index + 1 - (1u64 << len);
    Component::from_bits(len as usize, bits)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub component: String,
    pub oracle: GrundyValue,
    pub fast: GrundyValue,
}

/// Count of components per value; serializes as `{"moon": c, "0": c0, ...}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Histogram {
    pub moon: u64,
    pub finite: BTreeMap<u64, u64>,
}

impl Histogram {
    pub fn record(&mut self, v: GrundyValue) {
        match v {
            GrundyValue::Moon => self.moon += 1,
            GrundyValue::Finite(n) => *self.finite.entry(n).or_default() += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.moon + self.finite.values().sum::<u64>()
    }
}

impl Serialize for Histogram {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.finite.len() + 1))?;
        map.serialize_entry("moon", &self.moon)?;
        for (n, count) in &self.finite {
            map.serialize_entry(&n.to_string(), count)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_len: u32,
    pub checked: u64,
    pub mismatches: Vec<Mismatch>,
    pub histogram: Histogram,
}

fn check_one(index: u64, memo: &TranspositionTable) -> (GrundyValue, Option<Mismatch>) {
    let c = nth_component(index);
    let oracle = grundy_oracle(&c, memo);
    let fast = grundy_fast(&c);
    let mismatch = (oracle != fast).then(|| Mismatch { component: c.to_string(), oracle, fast });
    (oracle, mismatch)
}

fn merge<I>(max_len: u32, results: I) -> VerifyReport
where
    I: IntoIterator<Item = (GrundyValue, Option<Mismatch>)>,
{
    let mut report = VerifyReport {
        max_len,
        checked: 0,
        mismatches: Vec::new(),
        histogram: Histogram::default(),
    };
    for (value, mismatch) in results {
        report.checked += 1;
        report.histogram.record(value);
        report.mismatches.extend(mismatch);
    }
    report
}

/// Compares oracle and fast solver on every component of length `<= max_len`.
pub fn verify_range_sequential(max_len: u32) -> VerifyReport {
    assert!(max_len <= MAX_VERIFY_LEN, "max_len {max_len} exceeds {MAX_VERIFY_LEN}");
    let memo = TranspositionTable::new();
    merge(max_len, (0..component_count(max_len)).map(|i| check_one(i, &memo)))
}

#[cfg(feature = "parallel")]
pub fn verify_range_parallel(max_len: u32) -> VerifyReport {
    assert!(max_len <= MAX_VERIFY_LEN, "max_len {max_len} exceeds {MAX_VERIFY_LEN}");
    let memo = TranspositionTable::new();
    let results: Vec<_> = (0..component_count(max_len))
        .into_par_iter()
        .map(|i| check_one(i, &memo))
        .collect();
    merge(max_len, results)
}

pub fn verify_range(max_len: u32) -> VerifyReport {
    #[cfg(feature = "parallel")]
    {
        verify_range_parallel(max_len)
    }
    #[cfg(not(feature = "parallel"))]
    {
        verify_range_sequential(max_len)
    }
}

/// Parameters of the random play-out cross-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlayoutConfig {
    pub max_pieces: usize,
    pub max_components: usize,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlayoutDisagreement {
    pub position: String,
    pub playout: Outcome,
    pub oracle_sum: GrundyValue,
    pub fast_sum: GrundyValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlayoutReport {
    #[serde(flatten)]
    pub config: PlayoutConfig,
    pub agreements: usize,
    pub disagreements: Vec<PlayoutDisagreement>,
}

impl PlayoutReport {
    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty() && self.agreements == self.config.samples
    }
}

/// Between 1 and `max_components` components holding at most `max_pieces`
/// pieces in total, each piece a fair coin.
pub fn random_position<R: Rng>(rng: &mut R, max_pieces: usize, max_components: usize) -> Position {
    let count = rng.gen_range(1..=max_components.max(1));
    let total = rng.gen_range(0..=max_pieces);
    let mut lens = vec![0usize; count];
    for _ in 0..total {
        lens[rng.gen_range(0..count)] += 1;
    }
    let components = lens
        .into_iter()
        .map(|len| Component::from_bits(len, rng.gen_range(0..1u64 << len)))
        .collect();
    Position::new(components)
}

pub fn sample_positions(config: &PlayoutConfig) -> Vec<Position> {
    assert!(config.max_pieces <= 63, "max_pieces must be below 64");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.samples)
        .map(|_| random_position(&mut rng, config.max_pieces, config.max_components))
        .collect()
}

fn check_playout(
    position: &Position,
    values: &TranspositionTable,
    wins: &PlayoutTable,
) -> Option<PlayoutDisagreement> {
    let playout = outcome_playout(position, wins);
    let oracle_sum = gsum_all(position.components().iter().map(|c| grundy_oracle(c, values)));
    let fast_sum = gsum_all(position.components().iter().map(grundy_fast));
    let agree = Outcome::of_value(oracle_sum) == playout && Outcome::of_value(fast_sum) == playout;
    (!agree).then(|| PlayoutDisagreement {
        position: position.to_string(),
        playout,
        oracle_sum,
        fast_sum,
    })
}

fn playout_report<I>(config: PlayoutConfig, results: I) -> PlayoutReport
where
    I: IntoIterator<Item = Option<PlayoutDisagreement>>,
{
    let mut report = PlayoutReport { config, agreements: 0, disagreements: Vec::new() };
    for r in results {
        match r {
            None => report.agreements += 1,
            Some(d) => report.disagreements.push(d),
        }
    }
    report
}

/// Play-out outcome versus the nim-sum rule on seeded random positions.
pub fn playout_check_sequential(config: PlayoutConfig) -> PlayoutReport {
    let values = TranspositionTable::new();
    let wins = PlayoutTable::new();
    let positions = sample_positions(&config);
    playout_report(config, positions.iter().map(|p| check_playout(p, &values, &wins)))
}

#[cfg(feature = "parallel")]
pub fn playout_check_parallel(config: PlayoutConfig) -> PlayoutReport {
    let values = TranspositionTable::new();
    let wins = PlayoutTable::new();
    let positions = sample_positions(&config);
    let results: Vec<_> = positions
        .par_iter()
        .map(|p| check_playout(p, &values, &wins))
        .collect();
    playout_report(config, results)
}

pub fn playout_check(config: PlayoutConfig) -> PlayoutReport {
    #[cfg(feature = "parallel")]
    {
        playout_check_parallel(config)
    }
    #[cfg(not(feature = "parallel"))]
    {
        playout_check_sequential(config)
    }
}
