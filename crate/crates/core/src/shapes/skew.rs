use std::fmt;
use std::str::FromStr;

use super::partition::Partition;
use crate::error::{Error, Result};

/// The boxes of `outer` that are not in `inner`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// Which strip conditions a skew shape satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StripKind {
    pub rook: bool,
    pub vertical: bool,
    pub horizontal: bool,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidSkewShape(format!("{} is not contained in {}", inner, outer)));
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        Self { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Number of rows of the outer shape (rows of the box grid).
    pub fn height(&self) -> usize {
        self.outer.len()
    }

    /// Column range of row `r`: boxes are `(r, c)` for `c` in the range.
    pub fn row_range(&self, r: usize) -> std::ops::Range<usize> {
        self.inner.part(r)..self.outer.part(r)
    }

    pub fn contains_box(&self, r: usize, c: usize) -> bool {
        self.row_range(r).contains(&c)
    }

    /// Boxes `(row, col)`, 0-based, in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.height()).flat_map(move |r| self.row_range(r).map(move |c| (r, c)))
    }

    /// Rows of column `c` holding boxes, top to bottom.
    pub fn column_rows(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.height()).filter(move |&r| self.contains_box(r, c))
    }

    /// Number of nonempty columns.
    pub fn column_count(&self) -> usize {
        (0..self.outer.first())
            .filter(|&c| self.column_rows(c).next().is_some())
            .count()
    }

    /// Number of nonempty rows.
    pub fn row_count(&self) -> usize {
        (0..self.height()).filter(|&r| !self.row_range(r).is_empty()).count()
    }

    pub fn strip_kind(&self) -> StripKind {
        let vertical = (0..self.height()).all(|r| self.row_range(r).len() <= 1);
        let horizontal = (0..self.outer.first()).all(|c| self.column_rows(c).count() <= 1);
        StripKind { rook: vertical && horizontal, vertical, horizontal }
    }

    pub fn conjugate(&self) -> Self {
        Self { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// Position of the bottom-left box: leftmost box of the lowest nonempty row.
    pub fn bottom_left(&self) -> Option<(usize, usize)> {
        (0..self.height())
            .rev()
            .find(|&r| !self.row_range(r).is_empty())
            .map(|r| (r, self.inner.part(r)))
    }

    /// The columns `< c` (left part) and `≥ c` (right part) as skew shapes on
    /// the same row indices.
    pub fn split_at_column(&self, c: usize) -> (SkewShape, SkewShape) {
        let clip = |p: &Partition| Partition::from_sorted(p.parts().iter().map(|&x| x.min(c)).collect());
        let shift = |p: &Partition| Partition::from_sorted(p.parts().iter().map(|&x| x.saturating_sub(c)).collect());
        (
            SkewShape { outer: clip(&self.outer), inner: clip(&self.inner) },
            SkewShape { outer: shift(&self.outer), inner: shift(&self.inner) },
        )
    }
}

/// λ*μ: μ in the upper-right block, λ in the lower-left block, touching at a corner.
pub fn star(lambda: &Partition, mu: &Partition) -> SkewShape {
    let l1 = lambda.first();
    let mut outer: Vec<usize> = mu.parts().iter().map(|&m| l1 + m).collect();
    outer.extend_from_slice(lambda.parts());
    let inner = vec![l1; mu.len()];
    SkewShape {
        outer: Partition::from_sorted(outer),
        inner: Partition::from_sorted(inner),
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// All skew shapes ν/λ with ν inside the `rows × cols` box.
pub fn skew_shapes_in_box(rows: usize, cols: usize) -> Vec<SkewShape> {
    let ps = super::partition::partitions_in_box(rows, cols);
    let mut out = Vec::new();
    for outer in &ps {
        for inner in &ps {
            if outer.contains(inner) {
                out.push(SkewShape { outer: outer.clone(), inner: inner.clone() });
            }
        }
    }
    out
}

/// σ ⊆ λ with λ/σ a rook strip (including σ = λ).
pub fn rook_strip_removals(lambda: &Partition) -> Vec<Partition> {
    let n = lambda.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let parts: Vec<usize> = (0..n)
            .map(|i| lambda.part(i) - ((mask >> i) & 1) as usize)
            .collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        let sigma = Partition::from_sorted(parts);
        let s = SkewShape { outer: lambda.clone(), inner: sigma.clone() };
        if s.strip_kind().rook {
            out.push(sigma);
        }
    }
    out.sort();
    out
}

/// ν ⊇ λ with ν/λ a rook strip (including ν = λ).
pub fn rook_strip_additions(lambda: &Partition) -> Vec<Partition> {
    let n = lambda.len() + 1;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let parts: Vec<usize> = (0..n)
            .map(|i| lambda.part(i) + ((mask >> i) & 1) as usize)
            .collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        let nu = Partition::from_sorted(parts);
        let s = SkewShape { outer: nu.clone(), inner: lambda.clone() };
        if s.strip_kind().rook {
            out.push(nu);
        }
    }
    out.sort();
    out
}

/// ν ⊇ λ with ν/λ a nonempty vertical strip of at most `max_size` boxes.
pub fn vertical_strip_additions(lambda: &Partition, max_size: usize) -> Vec<Partition> {
    let n = lambda.len() + max_size;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(lambda: &Partition, i: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == n {
            let nu = Partition::from_sorted(cur.clone());
            if nu != *lambda {
                out.push(nu);
            }
            return;
        }
        let base = lambda.part(i);
        for add in 0..=1usize.min(left) {
            let v = base + add;
            if i > 0 && cur[i - 1] < v {
                continue;
            }
            cur.push(v);
            rec(lambda, i + 1, n, left - add, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 0, n, max_size, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}
