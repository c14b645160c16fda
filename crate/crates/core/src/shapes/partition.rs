use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition, stored without trailing zeros.
///
/// The `Ord` implementation is the canonical output order: weight
/// ascending, then lexicographically descending parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{:?} is not weakly decreasing",
                parts
            )));
        }
        Ok(Self { parts })
    }

    /// Callers guarantee the parts are weakly decreasing; trailing zeros are stripped.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: vec![] }
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Self { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.first();
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self { parts }
    }

    /// Componentwise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        col < self.part(row)
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Number of removable corners.
    pub fn inner_corners(&self) -> usize {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .count()
    }

    /// Drops the first `p` rows.
    pub fn drop_rows(&self, p: usize) -> Self {
        Self { parts: self.parts.iter().skip(p).copied().collect() }
    }

    /// Componentwise maximum.
    pub fn union(&self, other: &Partition) -> Self {
        let n = self.len().max(other.len());
        Self::from_sorted((0..n).map(|i| self.part(i).max(other.part(i))).collect())
    }

    /// Componentwise minimum.
    pub fn intersection(&self, other: &Partition) -> Self {
        let n = self.len().min(other.len());
        Self::from_sorted((0..n).map(|i| self.part(i).min(other.part(i))).collect())
    }

    /// Partition with every part multiplied by `k`.
    pub fn scale(&self, k: usize) -> Self {
        Self::from_sorted(self.parts.iter().map(|&p| p * k).collect())
    }

    /// Complement of `self` in the `rows × cols` rectangle, rotated by 180 degrees.
    pub fn rotate180_in_rect(&self, rows: usize, cols: usize) -> Result<Self> {
        if !Partition::rectangle(rows, cols).contains(self) {
            return Err(Error::Domain(format!("{} does not fit in a {}x{} rectangle", self, rows, cols)));
        }
        Ok(Self::from_sorted((0..rows).rev().map(|i| cols - self.part(i)).collect()))
    }

    /// Boxes `(row, col)`, 0-based, in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Concatenation `(self_1, …, self_k, other_1, …)`; fails unless weakly decreasing.
    pub fn concat(&self, other: &Partition) -> Result<Self> {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::new(parts)
    }

    /// `(q + σ_1, …, q + σ_p, τ_1, τ_2, …)`: σ to the right of the `p × q`
    /// rectangle and τ below it.
    pub fn rect_sum(p: usize, q: usize, sigma: &Partition, tau: &Partition) -> Result<Self> {
        if sigma.len() > p || tau.first() > q {
            return Err(Error::Domain(format!(
                "({}, {}) does not attach to a {}x{} rectangle",
                sigma, tau, p, q
            )));
        }
        let mut parts: Vec<usize> = (0..p).map(|i| q + sigma.part(i)).collect();
        parts.extend_from_slice(&tau.parts);
        Ok(Self::from_sorted(parts))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "()" {
            return Ok(Self::empty());
        }
        let s = s.trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse {:?}", s)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl From<&[usize]> for Partition {
    /// Sorts the given parts into decreasing order.
    fn from(parts: &[usize]) -> Self {
        let mut v = parts.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(v)
    }
}

/// Shorthand for literal partitions in tests and examples; panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::shapes::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::shapes::Partition::new(vec![$($x),+]).expect("literal partition")
    };
}

/// All partitions of `n`, in canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All partitions of weight at most `n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All partitions fitting in a `rows × cols` rectangle, in canonical order.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(row: usize, rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::from_sorted(cur.clone()));
        if row == rows {
            return;
        }
        for k in 1..=max {
            cur.push(k);
            rec(row + 1, rows, k, cur, out);
            cur.pop();
        }
    }
    rec(0, rows, cols, &mut cur, &mut out);
    out.sort();
    out
}

/// All σ ⊆ λ, in canonical order.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(lambda: &Partition, row: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::from_sorted(cur.clone()));
        if row == lambda.len() {
            return;
        }
        for k in 1..=max.min(lambda.part(row)) {
            cur.push(k);
            rec(lambda, row + 1, k, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 0, lambda.first(), &mut cur, &mut out);
    out.sort();
    out
}

/// All σ ⊇ λ with |σ| ≤ max_weight, in canonical order.
pub fn superpartitions(lambda: &Partition, max_weight: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if lambda.weight() > max_weight {
        return out;
    }
    let mut cur = Vec::new();
    fn rec(
        lambda: &Partition,
        row: usize,
        max: usize,
        budget: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row >= lambda.len() {
            out.push(Partition::from_sorted(cur.clone()));
        }
        let lo = lambda.part(row).max(1);
        for k in lo..=max.min(budget) {
            cur.push(k);
            rec(lambda, row + 1, k, budget - k, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 0, max_weight, max_weight, &mut cur, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(part![3, 1].conjugate(), part![2, 1, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part![4, 3, 2].conjugate(), part![3, 3, 2, 1]);
    }

    #[test]
    fn conjugate_is_involution() {
        for lam in partitions_up_to(10) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), part![3, 2, 1]);
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("1,0,1".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(part![2, 1].to_string(), "2,1");
        assert_eq!(Partition::empty().to_string(), "0");
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![part![1, 1], part![2, 1], part![2], part![1], Partition::empty()];
        v.sort();
        assert_eq!(v, vec![Partition::empty(), part![1], part![2], part![1, 1], part![2, 1]]);
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(Partition::empty().rotate180_in_rect(2, 2).unwrap(), part![2, 2]);
        assert_eq!(part![2, 2].rotate180_in_rect(2, 2).unwrap(), Partition::empty());
        assert_eq!(part![3, 2, 1].rotate180_in_rect(4, 5).unwrap(), part![5, 4, 3, 2]);
        assert!(part![3].rotate180_in_rect(2, 2).is_err());
    }

    #[test]
    fn rotate_is_involution() {
        for lam in partitions_in_box(3, 4) {
            let r = lam.rotate180_in_rect(3, 4).unwrap();
            assert_eq!(r.rotate180_in_rect(3, 4).unwrap(), lam);
            assert_eq!(r.weight() + lam.weight(), 12);
        }
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        // binom(5, 2) partitions in a 2x3 box
        assert_eq!(partitions_in_box(2, 3).len(), 10);
        assert_eq!(subpartitions(&part![2, 1]).len(), 5);
        let sup = superpartitions(&part![1], 3);
        assert_eq!(sup, vec![part![1], part![2], part![1, 1], part![3], part![2, 1], part![1, 1, 1]]);
        for lam in partitions_up_to(5) {
            for s in superpartitions(&lam, 7) {
                assert!(s.contains(&lam) && s.weight() <= 7);
            }
            let brute = partitions_up_to(7).into_iter().filter(|s| s.contains(&lam)).count();
            assert_eq!(superpartitions(&lam, 7).len(), brute);
        }
    }

    #[test]
    fn rect_sum_layout() {
        let p = Partition::rect_sum(2, 3, &part![2, 1], &part![2]).unwrap();
        assert_eq!(p, part![5, 4, 2]);
        assert!(Partition::rect_sum(1, 3, &part![1, 1], &Partition::empty()).is_err());
    }
}
