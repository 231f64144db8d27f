use std::fmt;
use std::ops::BitXor;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Grundy value of an affine impartial game: a nimber `*n` or the moon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GrundyValue {
    Finite(u64),
    Moon,
}

impl GrundyValue {
    pub const ZERO: GrundyValue = GrundyValue::Finite(0);

    pub fn is_moon(self) -> bool {
        self == GrundyValue::Moon
    }

    pub fn is_zero(self) -> bool {
        self == GrundyValue::ZERO
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            GrundyValue::Finite(n) => Some(n),
            GrundyValue::Moon => None,
        }
    }

    /// `*n` notation (`0`, `*`, `*2`, ...) with the moon as `moon` or `☾`.
    pub fn star_notation(self, unicode: bool) -> String {
        match self {
            GrundyValue::Finite(0) => "0".to_string(),
            GrundyValue::Finite(1) => "*".to_string(),
            GrundyValue::Finite(n) => format!("*{n}"),
            GrundyValue::Moon => moon_symbol(unicode).to_string(),
        }
    }

    /// Decimal integer, or `moon` / `☾`.
    pub fn plain(self, unicode: bool) -> String {
        match self {
            GrundyValue::Finite(n) => n.to_string(),
            GrundyValue::Moon => moon_symbol(unicode).to_string(),
        }
    }
}

fn moon_symbol(unicode: bool) -> &'static str {
    if unicode {
        "☾"
    } else {
        "moon"
    }
}

impl fmt::Display for GrundyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.plain(false))
    }
}

impl FromStr for GrundyValue {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "moon" | "☾" => Ok(GrundyValue::Moon),
            _ => s.parse().map(GrundyValue::Finite),
        }
    }
}

impl From<u64> for GrundyValue {
    fn from(n: u64) -> Self {
        GrundyValue::Finite(n)
    }
}

/// Extended nim-sum; the moon absorbs.
impl BitXor for GrundyValue {
    type Output = GrundyValue;

    fn bitxor(self, rhs: GrundyValue) -> GrundyValue {
        match (self, rhs) {
            (GrundyValue::Finite(a), GrundyValue::Finite(b)) => GrundyValue::Finite(a ^ b),
            _ => GrundyValue::Moon,
        }
    }
}

// JSON carries values as strings: "14" or "moon".
impl Serialize for GrundyValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.plain(false))
    }
}

impl<'de> Deserialize<'de> for GrundyValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
