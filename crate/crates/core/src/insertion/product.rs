use std::collections::BTreeSet;

use super::bump::{insert_set, is_valid_column, reverse_set, reverse_star, Column, Guard};
use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::{EntrySet, SetValuedTableau};

fn straight_columns(t: &SetValuedTableau) -> Result<Vec<Column>> {
    if !t.shape().is_straight() {
        return Err(Error::InvalidTableau(format!("{} is not of straight shape", t)));
    }
    if !t.validate() {
        return Err(Error::InvalidTableau(format!("{} is not semistandard", t)));
    }
    Ok(t.columns())
}

/// `x · T`: inserts `x` into the first column, then each ejected set into
/// the next column, stopping at an empty ejection; a nonempty final
/// ejection becomes a new one-box column.
pub fn multiply_box(x: EntrySet, t: &SetValuedTableau) -> Result<SetValuedTableau> {
    if x.is_empty() {
        return Err(Error::Domain("cannot insert an empty set".into()));
    }
    let cols = straight_columns(t)?;
    Ok(bump_through(x, cols))
}

fn bump_through(x: EntrySet, mut cols: Vec<Column>) -> SetValuedTableau {
    let mut y = x;
    let mut i = 0;
    loop {
        if i == cols.len() {
            cols.push(vec![y]);
            break;
        }
        let out = insert_set(y, Guard::Infinity, &cols[i]);
        cols[i] = out.column;
        y = out.ejected;
        if y.is_empty() {
            break;
        }
        i += 1;
    }
    SetValuedTableau::from_columns(&cols).expect("insertion keeps straight shape")
}

/// A product `C · T` together with its marked columns (0-based): the
/// columns holding a box that is not the northernmost box of the strip
/// created by the same insertion step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedProduct {
    pub tableau: SetValuedTableau,
    pub marks: BTreeSet<usize>,
}

/// `C · T = x_ℓ · (⋯ (x_1 · T))` where `x_1` is the top box of `C`.
pub fn multiply_column(c: &[EntrySet], t: &SetValuedTableau) -> Result<MarkedProduct> {
    if c.is_empty() || !is_valid_column(c) {
        return Err(Error::InvalidTableau(format!("{:?} is not a nonempty column", c)));
    }
    let mut cols = straight_columns(t)?;
    let mut shape = t.shape().outer().clone();
    let mut marks = BTreeSet::new();
    let mut tab = t.clone();
    for &x in c {
        tab = bump_through(x, cols);
        cols = tab.columns();
        let next = tab.shape().outer().clone();
        let strip = SkewShape::new(next.clone(), shape)?;
        let mut boxes: Vec<(usize, usize)> = strip.boxes().collect();
        boxes.sort();
        marks.extend(boxes.iter().skip(1).map(|&(_, col)| col));
        shape = next;
    }
    Ok(MarkedProduct { tableau: tab, marks })
}

/// Undoes `x · T'` for a straight tableau `T'` of shape `lambda`, where
/// `sh(T)/lambda` is a nonempty rook strip. Returns `(x, T')`.
pub fn reverse_strip(t: &SetValuedTableau, lambda: &Partition) -> Result<(EntrySet, SetValuedTableau)> {
    let mut cols = straight_columns(t)?;
    let strip = SkewShape::new(t.shape().outer().clone(), lambda.clone())?;
    if strip.is_empty() || !strip.strip_kind().rook {
        return Err(Error::InvalidSkewShape(format!("{:?} is not a nonempty rook strip", strip)));
    }
    let strip_cols: BTreeSet<usize> = strip.boxes().map(|(_, c)| c).collect();
    let (_, j) = strip.boxes().min().unwrap();
    let mut x = cols[j].pop().unwrap();
    for i in (0..j).rev() {
        let (y, col) = if strip_cols.contains(&i) {
            reverse_star(&cols[i], x)?
        } else {
            reverse_set(&cols[i], x, EntrySet::EMPTY)?
        };
        cols[i] = col;
        x = y;
    }
    while cols.last().is_some_and(|c| c.is_empty()) {
        cols.pop();
    }
    let prev = SetValuedTableau::from_columns(&cols)?;
    if prev.shape().outer() != lambda || !prev.validate() {
        return Err(Error::MalformedReverse(format!("reversing {} to shape {} failed", t, lambda)));
    }
    Ok((x, prev))
}

/// Inverse of [`multiply_column`]: given `T = C · T'` with `sh(T') = lambda`
/// and the marked columns, recovers `(C, T')`.
pub fn factorize(
    t: &SetValuedTableau,
    lambda: &Partition,
    marks: &BTreeSet<usize>,
) -> Result<(Column, SetValuedTableau)> {
    let theta = SkewShape::new(t.shape().outer().clone(), lambda.clone())?;
    if theta.is_empty() || !theta.strip_kind().vertical {
        return Err(Error::InvalidSkewShape(format!("{:?} is not a nonempty vertical strip", theta)));
    }
    let mut boxes: Vec<(usize, usize)> = theta.boxes().collect();
    boxes.sort();
    let last_col = boxes.iter().map(|&(_, c)| c).max().unwrap();
    for &m in marks {
        if m == last_col || !boxes.iter().any(|&(_, c)| c == m) {
            return Err(Error::Domain(format!("column {} cannot be marked", m + 1)));
        }
    }
    // Split the strip north to south; an extra box extends the current piece.
    let mut pieces: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut seen_cols = BTreeSet::new();
    for &(r, c) in &boxes {
        let extra = marks.contains(&c) && seen_cols.insert(c);
        if extra {
            pieces.last_mut().unwrap().push((r, c));
        } else {
            seen_cols.insert(c);
            pieces.push(vec![(r, c)]);
        }
    }
    let mut shape = t.shape().outer().clone();
    let mut cur = t.clone();
    let mut column = Vec::with_capacity(pieces.len());
    for piece in pieces.iter().rev() {
        let mut parts = shape.parts().to_vec();
        for &(r, _) in piece {
            parts[r] -= 1;
        }
        let prev_shape = Partition::new(parts)?;
        let (x, prev) = reverse_strip(&cur, &prev_shape)?;
        column.push(x);
        cur = prev;
        shape = prev_shape;
    }
    column.reverse();
    if !is_valid_column(&column) {
        return Err(Error::MalformedReverse(format!("recovered {:?} is not a column", column)));
    }
    Ok((column, cur))
}
