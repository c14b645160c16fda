use std::fmt;
use std::str::FromStr;

use super::entry_set::EntrySet;
use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};

/// A word in the positive integers.
pub type Word = Vec<u32>;

/// Letter multiplicities `(c_1, c_2, …)` with trailing zeros removed.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Content(Vec<usize>);

impl Content {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Content(counts)
    }

    pub fn of_word(word: &[u32]) -> Self {
        let mut c = Vec::new();
        for &a in word {
            let a = a as usize;
            if c.len() < a {
                c.resize(a, 0);
            }
            c[a - 1] += 1;
        }
        Content::new(c)
    }

    /// The content of the letters of `λ` followed by those of `μ` shifted past `ℓ(λ)`.
    pub fn concat(parts: &[&Partition]) -> Self {
        Content::new(parts.iter().flat_map(|p| p.parts().iter().copied()).collect())
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Multiplicity of letter `a` (1-based).
    pub fn get(&self, a: u32) -> usize {
        self.0.get(a as usize - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }
}

impl fmt::Debug for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An inclusive range of letters on which the lattice condition is imposed.
/// `hi = u32::MAX` stands for an unbounded interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: u32,
    pub hi: u32,
}

impl Interval {
    pub fn new(lo: u32, hi: u32) -> Self {
        Interval { lo, hi }
    }

    pub fn unbounded() -> Self {
        Interval { lo: 1, hi: u32::MAX }
    }

    /// Whether the consecutive pair `(p, p+1)` lies in the interval.
    pub fn covers_pair(&self, p: u32) -> bool {
        p >= self.lo && p < self.hi
    }
}

/// Intervals `[1, n_1], [n_1+1, n_1+n_2], …` for the given block lengths.
/// Empty blocks contribute nothing.
pub fn stacked_intervals(lengths: &[usize]) -> Vec<Interval> {
    let mut out = Vec::new();
    let mut start = 1u32;
    for &n in lengths {
        if n > 0 {
            out.push(Interval::new(start, start + n as u32 - 1));
        }
        start += n as u32;
    }
    out
}

/// Whether every suffix of `word` has at least as many `p` as `p+1`, for every
/// pair `(p, p+1)` inside one of the intervals.
pub fn is_lattice(word: &[u32], intervals: &[Interval]) -> bool {
    let mut counts: Vec<i64> = vec![0; word.iter().copied().max().unwrap_or(0) as usize + 2];
    for &a in word.iter().rev() {
        counts[a as usize] += 1;
        // prepending `a` can only break the pair (a-1, a)
        if a >= 2 && intervals.iter().any(|iv| iv.covers_pair(a - 1)) && counts[a as usize - 1] < counts[a as usize] {
            return false;
        }
    }
    true
}

/// A set-valued tableau of skew shape. `rows[r]` lists the boxes of row `r`
/// from left to right.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetValuedTableau {
    shape: SkewShape,
    rows: Vec<Vec<EntrySet>>,
}

impl SetValuedTableau {
    /// Checks that the filling matches the shape and that every box is
    /// nonempty; the order conditions are checked by [`Self::validate`].
    pub fn new(shape: SkewShape, rows: Vec<Vec<EntrySet>>) -> Result<Self> {
        if rows.len() != shape.height() && !(shape.is_empty() && rows.iter().all(|r| r.is_empty())) {
            return Err(Error::InvalidTableau(format!("{} rows given for shape {:?}", rows.len(), shape)));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_range(r).len() {
                return Err(Error::InvalidTableau(format!("row {} has {} boxes, shape {:?}", r + 1, row.len(), shape)));
            }
            if row.iter().any(|b| b.is_empty()) {
                return Err(Error::InvalidTableau("empty box".into()));
            }
        }
        let rows = if shape.is_empty() { vec![Vec::new(); shape.height()] } else { rows };
        Ok(Self { shape, rows })
    }

    /// Like [`Self::new`] but also requires [`Self::validate`].
    pub fn new_valid(shape: SkewShape, rows: Vec<Vec<EntrySet>>) -> Result<Self> {
        let t = Self::new(shape, rows)?;
        if !t.validate() {
            return Err(Error::InvalidTableau(format!("order conditions fail for {}", t)));
        }
        Ok(t)
    }

    pub fn empty() -> Self {
        Self { shape: SkewShape::straight(Partition::empty()), rows: vec![] }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<EntrySet>] {
        &self.rows
    }

    /// The set in box `(r, c)` (0-based), if it is in the shape.
    pub fn get(&self, r: usize, c: usize) -> Option<EntrySet> {
        let range = self.shape.row_range(r);
        range.contains(&c).then(|| self.rows[r][c - range.start])
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn validate(&self) -> bool {
        for (r, c) in self.shape.boxes() {
            let b = self.get(r, c).unwrap();
            if b.is_empty() {
                return false;
            }
            if let Some(right) = self.get(r, c + 1) {
                if b.max() > right.min() {
                    return false;
                }
            }
            if let Some(below) = self.get(r + 1, c) {
                if !b.precedes(below) {
                    return false;
                }
            }
        }
        true
    }

    /// Columns left to right, each bottom to top, each box increasing.
    pub fn column_word(&self) -> Word {
        let mut w = Vec::new();
        for c in 0..self.shape.outer().first() {
            for r in (0..self.shape.height()).rev() {
                if let Some(b) = self.get(r, c) {
                    w.extend(b.iter());
                }
            }
        }
        w
    }

    /// Letter multiplicities and `|T|`.
    pub fn content(&self) -> (Content, usize) {
        let w = self.column_word();
        let n = w.len();
        (Content::of_word(&w), n)
    }

    /// Total number of entries.
    pub fn entry_count(&self) -> usize {
        self.rows.iter().flatten().map(|b| b.len()).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().filter_map(|b| b.max()).max().unwrap_or(0)
    }

    /// Columns (top to bottom) of a straight-shape tableau.
    pub fn columns(&self) -> Vec<Vec<EntrySet>> {
        debug_assert!(self.shape.is_straight());
        (0..self.shape.outer().first())
            .map(|c| self.shape.column_rows(c).map(|r| self.rows[r][c]).collect())
            .collect()
    }

    /// Straight-shape tableau from its columns (top to bottom); column
    /// lengths must weakly decrease.
    pub fn from_columns(cols: &[Vec<EntrySet>]) -> Result<Self> {
        let lens: Vec<usize> = cols.iter().map(|c| c.len()).collect();
        let shape = Partition::new(lens)
            .map_err(|_| Error::InvalidTableau("column lengths must weakly decrease".into()))?
            .conjugate();
        let rows = (0..shape.len())
            .map(|r| (0..shape.part(r)).map(|c| cols[c][r]).collect())
            .collect();
        Self::new(SkewShape::straight(shape), rows)
    }
}

/// The tableau of shape ν with every box of row `i` equal to `{i}`.
pub fn superstandard(nu: &Partition) -> SetValuedTableau {
    let rows = (0..nu.len())
        .map(|r| vec![EntrySet::singleton(r as u32 + 1); nu.part(r)])
        .collect();
    SetValuedTableau { shape: SkewShape::straight(nu.clone()), rows }
}

impl fmt::Display for SetValuedTableau {
    /// Rows top to bottom separated by " / "; boxes of the inner shape print as ".".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shape.is_empty() {
            return write!(f, "∅");
        }
        let rows: Vec<String> = (0..self.shape.height())
            .filter(|&r| !self.shape.row_range(r).is_empty())
            .map(|r| {
                let pad = ".".repeat(self.shape.row_range(r).start);
                let boxes: String = self.rows[r].iter().map(|b| b.to_string()).collect();
                format!("{}{}", pad, boxes)
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl fmt::Debug for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SetValuedTableau {
    type Err = Error;

    /// Parses the display form, e.g. `{1}{1,2} / {2,3}` or `.{1} / {2}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty());
        }
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for line in s.split('/') {
            let line = line.trim();
            let pad = line.chars().take_while(|&ch| ch == '.').count();
            let mut boxes = Vec::new();
            let mut rest = &line[pad..];
            while !rest.trim().is_empty() {
                let rest_t = rest.trim_start();
                let end = rest_t
                    .find('}')
                    .ok_or_else(|| Error::InvalidTableau(format!("unbalanced braces in {:?}", line)))?;
                if !rest_t.starts_with('{') {
                    return Err(Error::InvalidTableau(format!("expected '{{' in {:?}", line)));
                }
                boxes.push(rest_t[..=end].parse::<EntrySet>()?);
                rest = &rest_t[end + 1..];
            }
            inner.push(pad);
            outer.push(pad + boxes.len());
            rows.push(boxes);
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        Self::new(shape, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    /// The example tableau of shape (4,3,3)/(2,1).
    pub(crate) fn example() -> SetValuedTableau {
        "..{1}{2,3} / .{1,2}{2,3,4} / {2}{3,5}{7}".parse().unwrap()
    }

    #[test]
    fn word_and_content_of_example() {
        let t = example();
        assert!(t.validate());
        assert_eq!(t.shape(), &"4,3,3/2,1".parse::<SkewShape>().unwrap());
        assert_eq!(t.column_word(), vec![2, 3, 5, 1, 2, 7, 2, 3, 4, 1, 2, 3]);
        let (c, n) = t.content();
        assert_eq!(c.counts(), &[2, 4, 3, 1, 1, 0, 1]);
        assert_eq!(n, 12);
    }

    #[test]
    fn validate_examples() {
        let t: SetValuedTableau = "{1}{1,2} / {2,3}".parse().unwrap();
        assert!(t.validate());
        let t: SetValuedTableau = "{2}{1}".parse().unwrap();
        assert!(!t.validate());
        let t: SetValuedTableau = "{1} / {1}".parse().unwrap();
        assert!(!t.validate());
        assert_eq!(t.to_string(), "{1} / {1}");
        assert_eq!(example().to_string(), "..{1}{2,3} / .{1,2}{2,3,4} / {2}{3,5}{7}");
    }

    #[test]
    fn superstandard_words() {
        assert_eq!(superstandard(&part![2, 1]).column_word(), vec![2, 1, 1]);
        assert_eq!(superstandard(&part![3, 2]).column_word(), vec![2, 1, 2, 1, 1]);
        assert_eq!(superstandard(&part![]).column_word(), Vec::<u32>::new());
        let (c, n) = superstandard(&part![2, 1]).content();
        assert_eq!((c.counts(), n), (&[2usize, 1][..], 3));
        let one: SetValuedTableau = "{1,2}".parse().unwrap();
        assert_eq!(one.column_word(), vec![1, 2]);
        assert_eq!(one.content().0.counts(), &[1, 1]);
    }

    #[test]
    fn lattice_examples() {
        let full = [Interval::unbounded()];
        assert!(is_lattice(&[1, 2, 1], &full));
        assert!(!is_lattice(&[1, 2], &full));
        assert!(is_lattice(&[2, 1, 1, 4, 3, 3], &[Interval::new(1, 2), Interval::new(3, 4)]));
        assert!(!is_lattice(&[2, 1, 1, 4, 3, 3], &full));
        assert_eq!(stacked_intervals(&[2, 0, 3]), vec![Interval::new(1, 2), Interval::new(3, 5)]);
    }

    #[test]
    fn lattice_matches_partition_suffix_contents() {
        // reverse lattice ⇔ every suffix content is a partition, over all words of length ≤ 6 in {1,2,3}
        let full = [Interval::unbounded()];
        for len in 0..=6u32 {
            for code in 0..3u32.pow(len) {
                let w: Vec<u32> = (0..len).map(|i| code / 3u32.pow(i) % 3 + 1).collect();
                let brute = (0..=w.len()).all(|k| {
                    let c = Content::of_word(&w[k..]);
                    c.counts().windows(2).all(|p| p[0] >= p[1])
                });
                assert_eq!(is_lattice(&w, &full), brute, "{:?}", w);
                if is_lattice(&w, &full) {
                    for k in 0..w.len() {
                        assert!(is_lattice(&w[k..], &full));
                    }
                }
            }
        }
    }

    #[test]
    fn columns_round_trip() {
        let t: SetValuedTableau = "{1}{1,2}{3} / {2,3}{4}".parse().unwrap();
        let cols = t.columns();
        assert_eq!(cols.len(), 3);
        assert_eq!(SetValuedTableau::from_columns(&cols).unwrap(), t);
    }
}
