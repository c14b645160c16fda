use std::fmt;
use std::str::FromStr;

use super::partition::Partition;
use super::skew::SkewShape;
use crate::error::{Error, Result};

/// A permutation in one-line notation, canonicalized by stripping trailing
/// fixed points, so `w` and `w × 1` compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{:?} is not a permutation of 1..{}", images, n)));
            }
            seen[v] = true;
        }
        Ok(Self::canonical(images))
    }

    fn canonical(mut images: Vec<usize>) -> Self {
        while let Some(&last) = images.last() {
            if last == images.len() {
                images.pop();
            } else {
                break;
            }
        }
        Self { images }
    }

    pub fn identity() -> Self {
        Self { images: vec![] }
    }

    /// The simple transposition `s_i` (1-based).
    pub fn simple(i: usize) -> Self {
        let mut images: Vec<usize> = (1..=i + 1).collect();
        images.swap(i - 1, i);
        Self { images }
    }

    /// The longest element of `S_n`.
    pub fn longest(n: usize) -> Self {
        Self::canonical((1..=n).rev().collect())
    }

    /// Smallest `n` with `self ∈ S_n`.
    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        if i <= self.images.len() {
            self.images[i - 1]
        } else {
            i
        }
    }

    /// One-line notation padded to length `n`.
    pub fn one_line(&self, n: usize) -> Vec<usize> {
        (1..=n.max(self.rank())).map(|i| self.apply(i)).collect()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `w s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut v = self.one_line(i + 1);
        v.swap(i - 1, i);
        Self::canonical(v)
    }

    /// Whether `ℓ(w s_i) > ℓ(w)`.
    pub fn is_ascent(&self, i: usize) -> bool {
        self.apply(i) < self.apply(i + 1)
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let n = self.rank().max(other.rank());
        Self::canonical((1..=n).map(|i| self.apply(other.apply(i))).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.rank()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self::canonical(inv)
    }

    /// The product `s_{i_1} ⋯ s_{i_m}`.
    pub fn from_word(word: &[usize]) -> Self {
        word.iter().fold(Self::identity(), |w, &i| w.mul_simple(i))
    }

    /// A reduced word, chosen by repeatedly splitting off the leftmost descent
    /// on the right.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.rank()).find(|&i| !w.is_ascent(i)) {
            w = w.mul_simple(i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    pub fn is_321_avoiding(&self) -> bool {
        let w = &self.images;
        // For each middle index, look for a larger value before and a smaller after.
        (0..w.len()).all(|j| {
            let larger_before = w[..j].iter().any(|&a| a > w[j]);
            let smaller_after = w[j + 1..].iter().any(|&c| c < w[j]);
            !(larger_before && smaller_after)
        })
    }

    /// `1^m × w`: fixes `1..m` and shifts `w` up by `m`.
    pub fn shift(&self, m: usize) -> Self {
        let mut v: Vec<usize> = (1..=m).collect();
        v.extend(self.images.iter().map(|&x| x + m));
        Self::canonical(v)
    }

    /// `w_0 w w_0` in `S_n`.
    pub fn conjugate_by_longest(&self, n: usize) -> Result<Self> {
        if self.rank() > n {
            return Err(Error::InvalidPermutation(format!("{} is not in S_{}", self, n)));
        }
        Ok(Self::canonical((1..=n).map(|i| n + 1 - self.apply(n + 1 - i)).collect()))
    }

    /// Bruhat order `self ≤ other` by the tableau criterion.
    pub fn bruhat_le(&self, other: &Permutation) -> bool {
        let n = self.rank().max(other.rank());
        let a = self.one_line(n);
        let b = other.one_line(n);
        for k in 1..n {
            let mut x: Vec<usize> = a[..k].to_vec();
            let mut y: Vec<usize> = b[..k].to_vec();
            x.sort_unstable();
            y.sort_unstable();
            if x.iter().zip(&y).any(|(p, q)| p > q) {
                return false;
            }
        }
        true
    }

    /// Lehmer code `c_i = #{j > i : w(j) < w(i)}`, length `rank`.
    pub fn code(&self) -> Vec<usize> {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .collect()
    }

    /// Inverse of [`Permutation::code`].
    pub fn from_code(code: &[usize]) -> Result<Self> {
        let n = code.len();
        let mut avail: Vec<usize> = (1..=n).collect();
        let mut images = Vec::with_capacity(n);
        for (i, &c) in code.iter().enumerate() {
            if c >= avail.len() {
                return Err(Error::InvalidPermutation(format!("code entry {} at position {} too large", c, i + 1)));
            }
            images.push(avail.remove(c));
        }
        Ok(Self::canonical(images))
    }
}

/// All permutations of `S_n` in one-line lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation::canonical(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// The permutation of a skew shape: the product of simple reflections indexed
/// by diagonal numbers, reading rows right to left, bottom row first.
/// `diag_offset` is the diagonal number of the bottom-left box.
pub fn skew_to_permutation(s: &SkewShape, diag_offset: usize) -> Result<Permutation> {
    if diag_offset == 0 {
        return Err(Error::Domain("diagonal offset must be positive".into()));
    }
    let Some((r0, c0)) = s.bottom_left() else {
        return Ok(Permutation::identity());
    };
    // diagonal of (r, c) is c - r + k, with k fixed by the bottom-left box
    let k = diag_offset as isize - (c0 as isize - r0 as isize);
    let mut word = Vec::with_capacity(s.size());
    for r in (0..s.height()).rev() {
        for c in s.row_range(r).rev() {
            let d = c as isize - r as isize + k;
            if d < 1 {
                return Err(Error::Domain("diagonal number below 1".into()));
            }
            word.push(d as usize);
        }
    }
    Ok(Permutation::from_word(&word))
}

/// The permutation with the single descent at `p` attached to `λ`:
/// `w(i) = i + λ_{p+1-i}` for `i ≤ p`, remaining values increasing.
pub fn grassmannian_permutation(lambda: &Partition, p: usize) -> Result<Permutation> {
    if p < lambda.len() {
        return Err(Error::Domain(format!("descent position {} is shorter than {}", p, lambda)));
    }
    let head: Vec<usize> = (1..=p).map(|i| i + lambda.part(p - i)).collect();
    let n = p + lambda.first();
    let mut images = head.clone();
    images.extend((1..=n).filter(|v| !head.contains(v)));
    Permutation::new(images)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self.images.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.is_empty() {
            return Ok(Self::identity());
        }
        let images = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("cannot parse {:?}", s)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::shapes::{partitions_up_to, skew_shapes_in_box};

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn skew_example_from_diagonal_reading() {
        let s: SkewShape = "4,3,2/1".parse().unwrap();
        let w = skew_to_permutation(&s, 3).unwrap();
        assert_eq!(w, perm(&[1, 2, 5, 7, 3, 9, 4, 6, 8]));
        assert_eq!(Permutation::from_word(&[4, 3, 6, 5, 4, 8, 7, 6]), w);
        assert!(w.is_321_avoiding());
        let word = w.reduced_word();
        assert_eq!(word.len(), 8);
        assert_eq!(Permutation::from_word(&word), w);
    }

    #[test]
    fn small_examples() {
        assert_eq!(skew_to_permutation(&"0".parse().unwrap(), 1).unwrap(), Permutation::identity());
        assert_eq!(skew_to_permutation(&"1".parse().unwrap(), 1).unwrap(), perm(&[2, 1]));
        assert!(skew_to_permutation(&"1".parse().unwrap(), 0).is_err());
        assert_eq!(grassmannian_permutation(&part![2, 1], 2).unwrap(), perm(&[2, 4, 1, 3]));
        assert_eq!(grassmannian_permutation(&part![1], 1).unwrap(), perm(&[2, 1]));
        assert_eq!(grassmannian_permutation(&part![], 3).unwrap(), Permutation::identity());
        assert!(grassmannian_permutation(&part![1, 1], 1).is_err());
        assert!(!perm(&[3, 2, 1]).is_321_avoiding());
        assert!(Permutation::identity().is_321_avoiding());
        assert_eq!(Permutation::identity().reduced_word(), Vec::<usize>::new());
        assert_eq!(perm(&[2, 1]).reduced_word(), vec![1]);
        assert_eq!(perm(&[2, 1, 3]), perm(&[2, 1]));
    }

    #[test]
    fn skew_permutations_are_321_avoiding_and_reduced() {
        for s in skew_shapes_in_box(4, 4) {
            for offset in 1..=3 {
                let w = skew_to_permutation(&s, offset).unwrap();
                assert!(w.is_321_avoiding(), "{:?}", s);
                assert_eq!(w.length(), s.size(), "{:?}", s);
                // shifting the offset is the 1 × w embedding
                assert_eq!(skew_to_permutation(&s, offset + 1).unwrap(), w.shift(1));
            }
        }
    }

    #[test]
    fn grassmannian_matches_diagonal_reading() {
        for lam in partitions_up_to(6) {
            for p in lam.len().max(1)..=5 {
                let w = grassmannian_permutation(&lam, p).unwrap();
                if lam.is_empty() {
                    assert!(w.is_identity());
                    continue;
                }
                let s = SkewShape::straight(lam.clone());
                // upper-left box on diagonal p
                let offset = p + 1 - lam.len();
                assert_eq!(skew_to_permutation(&s, offset).unwrap(), w, "{:?} p={}", lam, p);
            }
        }
    }

    #[test]
    fn reduced_words_and_codes() {
        for n in 1..=5 {
            for w in all_permutations(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(&word), w);
                assert_eq!(Permutation::from_code(&w.code()).unwrap(), w);
                assert_eq!(w.compose(&w.inverse()), Permutation::identity());
                let c = w.conjugate_by_longest(n).unwrap();
                assert_eq!(c.conjugate_by_longest(n).unwrap(), w);
                assert_eq!(c.length(), w.length());
            }
        }
        assert_eq!(all_permutations(4).len(), 24);
    }

    #[test]
    fn bruhat_basics() {
        let w0 = Permutation::longest(4);
        for w in all_permutations(4) {
            assert!(Permutation::identity().bruhat_le(&w));
            assert!(w.bruhat_le(&w0));
        }
        assert!(!perm(&[2, 1]).bruhat_le(&perm(&[1, 3, 2])));
    }
}
