//! Disjunctive sums: extended nim-sum and outcome classes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::fast::grundy_fast;
use crate::fixture::Position;
use crate::value::GrundyValue;

/// Normal-play outcome class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// Previous player wins.
    P,
    /// Next player wins.
    N,
}

impl Outcome {
    pub fn of_value(value: GrundyValue) -> Outcome {
        if value.is_zero() {
            Outcome::P
        } else {
            Outcome::N
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::P => "P",
            Outcome::N => "N",
        })
    }
}

pub fn gsum(a: GrundyValue, b: GrundyValue) -> GrundyValue {
    a ^ b
}

/// Folds `gsum` over a sequence of values.
pub fn gsum_all<I: IntoIterator<Item = GrundyValue>>(values: I) -> GrundyValue {
    values.into_iter().fold(GrundyValue::ZERO, gsum)
}

pub fn position_value(position: &Position) -> GrundyValue {
    let mut acc = GrundyValue::ZERO;
    for c in position.components() {
        acc = gsum(acc, grundy_fast(c));
        if acc.is_moon() {
            break;
        }
    }
    acc
}

pub fn outcome(position: &Position) -> Outcome {
    Outcome::of_value(position_value(position))
}
