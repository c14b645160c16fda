use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest integer an [`EntrySet`] can hold.
pub const MAX_ENTRY: u32 = 63;

/// A finite set of positive integers `≤ MAX_ENTRY`, stored as a bit mask.
/// Iteration is always in increasing order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EntrySet(u64);

impl EntrySet {
    pub const EMPTY: EntrySet = EntrySet(0);

    pub fn singleton(x: u32) -> Self {
        assert!((1..=MAX_ENTRY).contains(&x), "entry {} out of range", x);
        EntrySet(1 << x)
    }

    pub fn from_mask(mask: u64) -> Self {
        EntrySet(mask & !1)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn from_slice(xs: &[u32]) -> Result<Self> {
        let mut m = 0u64;
        for &x in xs {
            if x == 0 || x > MAX_ENTRY {
                return Err(Error::InvalidTableau(format!("entry {} outside 1..={}", x, MAX_ENTRY)));
            }
            m |= 1 << x;
        }
        Ok(EntrySet(m))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    pub fn contains(self, x: u32) -> bool {
        x <= MAX_ENTRY && self.0 & (1 << x) != 0
    }

    pub fn insert(&mut self, x: u32) {
        *self = self.with(x);
    }

    pub fn with(self, x: u32) -> Self {
        EntrySet(self.0 | Self::singleton(x).0)
    }

    pub fn union(self, other: Self) -> Self {
        EntrySet(self.0 | other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        EntrySet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements `< x`.
    pub fn below(self, x: u32) -> Self {
        if x > MAX_ENTRY {
            return self;
        }
        EntrySet(self.0 & ((1u64 << x) - 1))
    }

    /// Elements `≥ x`.
    pub fn at_least(self, x: u32) -> Self {
        self.difference(self.below(x))
    }

    /// Elements `≤ x`.
    pub fn at_most(self, x: u32) -> Self {
        self.below(x + 1)
    }

    /// Elements `> x`.
    pub fn above(self, x: u32) -> Self {
        self.at_least(x + 1)
    }

    /// Whether every element of `self` is smaller than every element of `other`.
    pub fn precedes(self, other: Self) -> bool {
        match (self.max(), other.min()) {
            (Some(a), Some(b)) => a < b,
            _ => true,
        }
    }

    pub fn iter(self) -> impl DoubleEndedIterator<Item = u32> {
        (1..=MAX_ENTRY).filter(move |&x| self.0 & (1 << x) != 0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All nonempty subsets of `{1..=n}`.
    pub fn all_nonempty(n: u32) -> impl Iterator<Item = EntrySet> {
        (1u64..(1 << n)).map(|m| EntrySet(m << 1))
    }
}

impl fmt::Display for EntrySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

impl fmt::Debug for EntrySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for EntrySet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        if inner.trim().is_empty() {
            return Ok(EntrySet::EMPTY);
        }
        let xs = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::InvalidTableau(format!("cannot parse set {:?}", s))))
            .collect::<Result<Vec<_>>>()?;
        EntrySet::from_slice(&xs)
    }
}
