use std::fmt;

use crate::error::{Error, Result};
use crate::tableaux::EntrySet;

/// A column of boxes listed top to bottom.
pub type Column = Vec<EntrySet>;

/// Whether the boxes of a column are nonempty and strictly increase downward.
pub fn is_valid_column(col: &[EntrySet]) -> bool {
    col.iter().all(|b| !b.is_empty()) && col.windows(2).all(|w| w[0].precedes(w[1]))
}

/// The element inserted just before, or `Infinity` for the first one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Guard {
    Infinity,
    Value(u32),
}

impl Guard {
    /// A set guard stands for its minimum.
    pub fn from_set(s: EntrySet) -> Self {
        s.min().map_or(Guard::Infinity, Guard::Value)
    }

    fn in_set(self, s: EntrySet) -> bool {
        matches!(self, Guard::Value(v) if s.contains(v))
    }
}

/// The forward bumping rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BumpRule {
    /// No box has an element `≥ x`: new box `{x}` at the bottom.
    B1,
    /// The bottom box splits as `a < x ≤ b`: `a` stays, `{x}` goes below, `b` is bumped.
    B2,
    /// A box above the bottom splits as `a < x ≤ b`: `a` stays, `x` joins the box below, `b` is bumped.
    B3,
    /// `x ≤ b` for a whole box other than the top one, guard not in `b`: `b` is replaced by `{x}`.
    B4,
    /// As B4 for the top box.
    B5,
    /// `x ≤ b` for a whole box other than the top one, guard in `b`: `x` joins `b`.
    B6,
    /// As B6 for the top box.
    B7,
}

impl fmt::Display for BumpRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Result of inserting into a column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BumpOutcome {
    pub column: Column,
    /// Possibly empty.
    pub ejected: EntrySet,
    /// The rule applied for each inserted element, in processing order.
    pub rules: Vec<BumpRule>,
}

/// Inserts one integer `x` into `col` given the guard `x0`.
pub fn insert_single(x: u32, x0: Guard, col: &[EntrySet]) -> BumpOutcome {
    debug_assert!(is_valid_column(col));
    let mut column = col.to_vec();
    let last = column.len().saturating_sub(1);
    let Some(k) = column.iter().position(|b| b.max().unwrap() >= x) else {
        column.push(EntrySet::singleton(x));
        return BumpOutcome { column, ejected: EntrySet::EMPTY, rules: vec![BumpRule::B1] };
    };
    let cell = column[k];
    if cell.min().unwrap() < x {
        let (a, b) = (cell.below(x), cell.at_least(x));
        column[k] = a;
        let rule = if k == last {
            column.push(EntrySet::singleton(x));
            BumpRule::B2
        } else {
            column[k + 1] = column[k + 1].with(x);
            BumpRule::B3
        };
        return BumpOutcome { column, ejected: b, rules: vec![rule] };
    }
    if x0.in_set(cell) {
        column[k] = cell.with(x);
        let rule = if k == 0 { BumpRule::B7 } else { BumpRule::B6 };
        BumpOutcome { column, ejected: EntrySet::EMPTY, rules: vec![rule] }
    } else {
        column[k] = EntrySet::singleton(x);
        let rule = if k == 0 { BumpRule::B5 } else { BumpRule::B4 };
        BumpOutcome { column, ejected: cell, rules: vec![rule] }
    }
}

/// Inserts a nonempty set: elements largest first, each later element
/// guarded by the one inserted before it; ejected sets are united.
pub fn insert_set(x: EntrySet, x0: Guard, col: &[EntrySet]) -> BumpOutcome {
    assert!(!x.is_empty(), "inserting an empty set");
    let mut column = col.to_vec();
    let mut ejected = EntrySet::EMPTY;
    let mut rules = Vec::with_capacity(x.len());
    let mut guard = x0;
    for e in x.iter().rev() {
        let out = insert_single(e, guard, &column);
        column = out.column;
        ejected = ejected.union(out.ejected);
        rules.extend(out.rules);
        guard = Guard::Value(e);
    }
    BumpOutcome { column, ejected, rules }
}

/// The reverse bumping rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReverseRule {
    /// The lowest box with an element `≤ y` splits as `b ≤ y < c`: `b` is
    /// ejected, `c` stays, `y` joins the box above.
    R1,
    /// That whole box `a` lies `≤ y` and is not the bottom one, guard not in `a`:
    /// `a` is ejected and replaced by `{y}`.
    R2,
    /// As R2 for the bottom box.
    R3,
    /// That whole box `a` lies `≤ y`, not the bottom one, guard in `a`: `y` joins `a`.
    R4,
    /// As R4 for the bottom box.
    R5,
}

/// Reverse bumping of one integer `y` sitting to the right of the top box;
/// `y0 = 0` means no guard.
pub fn reverse_single(col: &[EntrySet], y: u32, y0: u32) -> Result<(EntrySet, Column, ReverseRule)> {
    let mut column = col.to_vec();
    let malformed = |why: &str| Error::MalformedReverse(format!("y = {} into {:?}: {}", y, col, why));
    if !is_valid_column(col) {
        return Err(malformed("invalid column"));
    }
    let k = column
        .iter()
        .rposition(|b| b.min().unwrap() <= y)
        .ok_or_else(|| malformed("every box exceeds y"))?;
    let last = column.len() - 1;
    let cell = column[k];
    let (b, c) = (cell.at_most(y), cell.above(y));
    if !c.is_empty() {
        if k == 0 {
            return Err(malformed("y is smaller than the top box"));
        }
        column[k] = c;
        column[k - 1] = column[k - 1].with(y);
        return Ok((b, column, ReverseRule::R1));
    }
    if y0 != 0 && cell.contains(y0) {
        if cell.contains(y) {
            return Err(malformed("y already present"));
        }
        column[k] = cell.with(y);
        let rule = if k == last { ReverseRule::R5 } else { ReverseRule::R4 };
        Ok((EntrySet::EMPTY, column, rule))
    } else {
        column[k] = EntrySet::singleton(y);
        let rule = if k == last { ReverseRule::R3 } else { ReverseRule::R2 };
        Ok((cell, column, rule))
    }
}

/// Reverse bumping of a set: elements in increasing order, each guarded by
/// the previous one; a set guard stands for its maximum.
pub fn reverse_set(col: &[EntrySet], y: EntrySet, y0: EntrySet) -> Result<(EntrySet, Column)> {
    if y.is_empty() {
        return Err(Error::MalformedReverse("reversing an empty set".into()));
    }
    let mut column = col.to_vec();
    let mut ejected = EntrySet::EMPTY;
    let mut guard = y0.max().unwrap_or(0);
    for e in y.iter() {
        let (out, c, _) = reverse_single(&column, e, guard)?;
        column = c;
        ejected = ejected.union(out);
        guard = e;
    }
    Ok((ejected, column))
}

/// Reverse bumping that also removes the bottom box: after [`reverse_set`],
/// the bottom box `b` is either added to the ejected set (`b ⊄ y`) or merged
/// back into the box above it (`b ⊆ y`).
pub fn reverse_star(col: &[EntrySet], y: EntrySet) -> Result<(EntrySet, Column)> {
    if col.len() < 2 {
        return Err(Error::MalformedReverse(format!("{:?} has fewer than two boxes", col)));
    }
    let (x, mut column) = reverse_set(col, y, EntrySet::EMPTY)?;
    let b = column.pop().unwrap();
    if !b.is_subset(y) {
        Ok((x.union(b), column))
    } else {
        let top = column.last_mut().unwrap();
        *top = top.union(b);
        Ok((x, column))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(s: &[&[u32]]) -> Column {
        s.iter().map(|b| EntrySet::from_slice(b).unwrap()).collect()
    }

    fn set(s: &[u32]) -> EntrySet {
        EntrySet::from_slice(s).unwrap()
    }

    #[test]
    fn single_rules() {
        let out = insert_single(1, Guard::Infinity, &[]);
        assert_eq!((out.column, out.ejected), (col(&[&[1]]), EntrySet::EMPTY));
        let out = insert_single(2, Guard::Infinity, &col(&[&[1, 3]]));
        assert_eq!((out.column, out.ejected, out.rules), (col(&[&[1], &[2]]), set(&[3]), vec![BumpRule::B2]));
        let out = insert_single(1, Guard::Infinity, &col(&[&[1]]));
        assert_eq!((out.column, out.ejected, out.rules), (col(&[&[1]]), set(&[1]), vec![BumpRule::B5]));
    }

    #[test]
    fn worked_set_example() {
        let out = insert_set(set(&[2, 3, 5]), Guard::Infinity, &col(&[&[1, 2], &[4, 5]]));
        assert_eq!(out.column, col(&[&[1], &[2, 3], &[5]]));
        assert_eq!(out.ejected, set(&[2, 4, 5]));
        assert_eq!(out.rules, vec![BumpRule::B2, BumpRule::B4, BumpRule::B3]);
    }

    #[test]
    fn malformed_reverse_is_rejected() {
        assert!(reverse_single(&col(&[&[1, 2]]), 1, 0).is_err());
        assert!(reverse_single(&col(&[&[3]]), 1, 0).is_err());
        assert!(reverse_star(&col(&[&[1]]), set(&[2])).is_err());
    }
}
