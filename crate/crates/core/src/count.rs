use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

/// A natural number or infinity. Addition saturates at infinity and the
/// minimum of an empty collection is infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedCount {
    Finite(u64),
    Infinite,
}

pub use ExtendedCount::{Finite, Infinite};

impl ExtendedCount {
    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Finite(x) => Some(x),
            Infinite => None,
        }
    }

    pub fn min_of<I: IntoIterator<Item = ExtendedCount>>(values: I) -> ExtendedCount {
        values.into_iter().min().unwrap_or(Infinite)
    }
}

impl From<u64> for ExtendedCount {
    fn from(x: u64) -> Self {
        Finite(x)
    }
}

impl From<usize> for ExtendedCount {
    fn from(x: usize) -> Self {
        Finite(x as u64)
    }
}

impl Add for ExtendedCount {
    type Output = ExtendedCount;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Finite(a), Finite(b)) => a.checked_add(b).map_or(Infinite, Finite),
            _ => Infinite,
        }
    }
}

impl fmt::Display for ExtendedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(x) => write!(f, "{x}"),
            Infinite => f.write_str("inf"),
        }
    }
}

/// Finite values serialize as numbers, infinity as the string `"inf"`.
impl Serialize for ExtendedCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Finite(x) => s.serialize_u64(*x),
            Infinite => s.serialize_str("inf"),
        }
    }
}
