//! Integer time model: instants, durations and closed intervals.
//!
//! All arithmetic is exact `i64` tick arithmetic. A tick is whatever unit the
//! input uses (seconds for contact traces).

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

/// An instant, in ticks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Timestamp(pub i64);

/// A non-negative length of time, in ticks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Duration(i64);

impl Duration {
    pub const ZERO: Duration = Duration(0);

    /// Returns `None` for negative tick counts.
    pub fn new(ticks: i64) -> Option<Self> {
        (ticks >= 0).then_some(Duration(ticks))
    }

    pub fn ticks(self) -> i64 {
        self.0
    }
}

impl fmt::Display for Duration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Timestamp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add<Duration> for Timestamp {
    type Output = Timestamp;
    fn add(self, rhs: Duration) -> Timestamp {
        Timestamp(self.0 + rhs.0)
    }
}

impl Sub<Duration> for Timestamp {
    type Output = Timestamp;
    fn sub(self, rhs: Duration) -> Timestamp {
        Timestamp(self.0 - rhs.0)
    }
}

/// Signed distance between two instants.
impl Sub for Timestamp {
    type Output = i64;
    fn sub(self, rhs: Timestamp) -> i64 {
        self.0 - rhs.0
    }
}

/// Closed interval `[b, e]` with `b <= e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TimeInterval {
    b: Timestamp,
    e: Timestamp,
}

impl TimeInterval {
    /// Returns `None` when `b > e`.
    pub fn new(b: Timestamp, e: Timestamp) -> Option<Self> {
        (b <= e).then_some(TimeInterval { b, e })
    }

    /// Panics when `b > e`; meant for literals in tests and examples.
    pub fn from_ticks(b: i64, e: i64) -> Self {
        Self::new(Timestamp(b), Timestamp(e)).expect("interval start after end")
    }

    pub fn point(t: Timestamp) -> Self {
        TimeInterval { b: t, e: t }
    }

    pub fn start(&self) -> Timestamp {
        self.b
    }

    pub fn end(&self) -> Timestamp {
        self.e
    }

    /// `e - b` in ticks.
    pub fn length(&self) -> i64 {
        self.e - self.b
    }

    pub fn contains_time(&self, t: Timestamp) -> bool {
        self.b <= t && t <= self.e
    }

    /// True iff `other` is a sub-interval of `self`.
    pub fn contains(&self, other: &TimeInterval) -> bool {
        self.b <= other.b && other.e <= self.e
    }

    pub fn with_start(&self, b: Timestamp) -> Option<Self> {
        Self::new(b, self.e)
    }

    pub fn with_end(&self, e: Timestamp) -> Option<Self> {
        Self::new(self.b, e)
    }
}

impl fmt::Display for TimeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.b, self.e)
    }
}
