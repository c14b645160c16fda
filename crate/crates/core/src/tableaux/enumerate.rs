use std::ops::ControlFlow;

use super::entry_set::{EntrySet, MAX_ENTRY};
use super::tableau::{is_lattice, Content, Interval, SetValuedTableau, Word};
use crate::error::{Error, Result};
use crate::shapes::SkewShape;

/// Optional restrictions on enumerated tableaux.
#[derive(Clone, Debug, Default)]
pub struct Constraints {
    /// Exact content of the tableau.
    pub target: Option<Content>,
    /// Lattice condition imposed on `column_word(T) ∘ suffix`.
    pub lattice: Vec<Interval>,
    pub suffix: Word,
    /// Upper bound on `|T|`.
    pub max_entries: Option<usize>,
}

impl Constraints {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with_content(mut self, c: Content) -> Self {
        self.target = Some(c);
        self
    }

    pub fn with_lattice(mut self, intervals: Vec<Interval>) -> Self {
        self.lattice = intervals;
        self
    }

    pub fn with_suffix(mut self, suffix: Word) -> Self {
        self.suffix = suffix;
        self
    }

    pub fn with_max_entries(mut self, n: usize) -> Self {
        self.max_entries = Some(n);
        self
    }
}

/// A completed filling handed to enumeration visitors.
pub struct Leaf<'a> {
    shape: &'a SkewShape,
    cells: &'a [(usize, usize)],
    fill: &'a [EntrySet],
    counts: &'a [i64],
    entries: usize,
}

impl Leaf<'_> {
    /// Number of boxes containing letter `a` (1-based).
    pub fn count(&self, a: u32) -> usize {
        self.counts.get(a as usize).copied().unwrap_or(0) as usize
    }

    /// Multiplicities of letters `1..=n`.
    pub fn counts(&self, n: u32) -> impl Iterator<Item = usize> + '_ {
        (1..=n).map(move |a| self.count(a))
    }

    /// `|T|`.
    pub fn entries(&self) -> usize {
        self.entries
    }

    pub fn to_tableau(&self) -> SetValuedTableau {
        let mut rows: Vec<Vec<EntrySet>> = (0..self.shape.height())
            .map(|r| vec![EntrySet::EMPTY; self.shape.row_range(r).len()])
            .collect();
        for (&(r, c), &b) in self.cells.iter().zip(self.fill) {
            rows[r][c - self.shape.row_range(r).start] = b;
        }
        SetValuedTableau::new(self.shape.clone(), rows).expect("enumerated filling matches its shape")
    }
}

struct Search<'a, F> {
    shape: &'a SkewShape,
    cells: Vec<(usize, usize)>,
    left: Vec<Option<usize>>,
    below: Vec<Option<usize>>,
    max_entry: u32,
    fill: Vec<EntrySet>,
    /// Letters placed so far, indexed by letter (index 0 unused).
    counts: Vec<i64>,
    entries: usize,
    /// Target content plus suffix content, when a target is given.
    total: Option<Vec<i64>>,
    target: Vec<i64>,
    target_size: i64,
    /// `pair[p]`: the lattice condition applies to `(p, p+1)`.
    pair: Vec<bool>,
    leaf_check: bool,
    constraints: &'a Constraints,
    visit: F,
}

/// Boxes in column-word order: columns left to right, each bottom to top.
fn column_word_cells(shape: &SkewShape) -> Vec<(usize, usize)> {
    let mut cells = Vec::with_capacity(shape.size());
    for c in 0..shape.outer().first() {
        let rows: Vec<usize> = shape.column_rows(c).collect();
        cells.extend(rows.into_iter().rev().map(|r| (r, c)));
    }
    cells
}

impl<'a, F: FnMut(&Leaf) -> ControlFlow<()>> Search<'a, F> {
    fn new(shape: &'a SkewShape, max_entry: u32, constraints: &'a Constraints, visit: F) -> Result<Option<Self>> {
        let mut max_entry = max_entry;
        if let Some(t) = &constraints.target {
            max_entry = max_entry.min(t.len() as u32);
        }
        if max_entry > MAX_ENTRY {
            return Err(Error::Domain(format!("entries above {} are not supported", MAX_ENTRY)));
        }
        let cells = column_word_cells(shape);
        let index = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c));
        let left = cells
            .iter()
            .map(|&(r, c)| if c > 0 && shape.contains_box(r, c - 1) { index(r, c - 1) } else { None })
            .collect();
        let below = cells
            .iter()
            .map(|&(r, c)| if shape.contains_box(r + 1, c) { index(r + 1, c) } else { None })
            .collect();
        let top = max_entry.max(constraints.suffix.iter().copied().max().unwrap_or(0)) as usize + 2;
        let mut pair = vec![false; top];
        for (p, slot) in pair.iter_mut().enumerate().skip(1) {
            *slot = constraints.lattice.iter().any(|iv| iv.covers_pair(p as u32));
        }
        let mut total = None;
        let mut target = Vec::new();
        let mut target_size = 0;
        let mut leaf_check = !constraints.lattice.is_empty();
        if let Some(t) = &constraints.target {
            // suffixes lying inside the fixed suffix word do not depend on T
            if !is_lattice(&constraints.suffix, &constraints.lattice) {
                return Ok(None);
            }
            let mut tot = vec![0i64; top];
            for (i, &c) in t.counts().iter().enumerate() {
                tot[i + 1] = c as i64;
            }
            target = tot.clone();
            target_size = t.total() as i64;
            for &a in &constraints.suffix {
                tot[a as usize] += 1;
            }
            // the whole word is one of the suffixes
            for p in 1..top - 1 {
                if pair[p] && tot[p] < tot[p + 1] {
                    return Ok(None);
                }
            }
            total = Some(tot);
            leaf_check = false;
        }
        Ok(Some(Self {
            shape,
            fill: vec![EntrySet::EMPTY; cells.len()],
            cells,
            left,
            below,
            max_entry,
            counts: vec![0; top],
            entries: 0,
            total,
            target,
            target_size,
            pair,
            leaf_check,
            constraints,
            visit,
        }))
    }

    fn run(&mut self) -> ControlFlow<()> {
        self.box_step(0)
    }

    fn box_step(&mut self, i: usize) -> ControlFlow<()> {
        if i == self.cells.len() {
            return self.leaf();
        }
        if self.total.is_some() && self.target_size - (self.entries as i64) < (self.cells.len() - i) as i64 {
            return ControlFlow::Continue(());
        }
        if self.constraints.max_entries.is_some_and(|m| self.entries + self.cells.len() - i > m) {
            return ControlFlow::Continue(());
        }
        let lo = self.left[i].map_or(1, |j| self.fill[j].max().unwrap());
        let hi = self.below[i].map_or(self.max_entry, |j| self.fill[j].min().unwrap() - 1);
        self.elem_step(i, lo, hi, EntrySet::EMPTY)
    }

    /// Extends the set in box `i` by an element in `from..=hi`; every prefix
    /// of the growing set is also offered as the box's final value.
    fn elem_step(&mut self, i: usize, from: u32, hi: u32, set: EntrySet) -> ControlFlow<()> {
        for e in from..=hi {
            if !self.place(e) {
                continue;
            }
            let s = set.with(e);
            self.fill[i] = s;
            let mut flow = self.box_step(i + 1);
            if flow.is_continue() {
                flow = self.elem_step(i, e + 1, hi, s);
            }
            self.unplace(e);
            flow?;
        }
        self.fill[i] = set;
        ControlFlow::Continue(())
    }

    fn place(&mut self, e: u32) -> bool {
        let a = e as usize;
        if self.constraints.max_entries.is_some_and(|m| self.entries >= m) {
            return false;
        }
        if let Some(tot) = &self.total {
            if self.counts[a] >= self.target[a] {
                return false;
            }
            // the suffix starting right after this letter
            if self.pair[a] && tot[a] - (self.counts[a] + 1) < tot[a + 1] - self.counts[a + 1] {
                return false;
            }
        }
        self.counts[a] += 1;
        self.entries += 1;
        true
    }

    fn unplace(&mut self, e: u32) {
        self.counts[e as usize] -= 1;
        self.entries -= 1;
    }

    fn leaf(&mut self) -> ControlFlow<()> {
        if self.total.is_some() {
            if self.entries as i64 != self.target_size {
                return ControlFlow::Continue(());
            }
            debug_assert!(self.target.iter().zip(&self.counts).all(|(t, c)| t == c));
        }
        if self.leaf_check {
            let mut w = self.word();
            w.extend_from_slice(&self.constraints.suffix);
            if !is_lattice(&w, &self.constraints.lattice) {
                return ControlFlow::Continue(());
            }
        }
        let leaf = Leaf {
            shape: self.shape,
            cells: &self.cells,
            fill: &self.fill,
            counts: &self.counts,
            entries: self.entries,
        };
        (self.visit)(&leaf)
    }

    fn word(&self) -> Word {
        self.fill.iter().flat_map(|b| b.iter()).collect()
    }
}

/// Visits every valid tableau of `shape` with entries `≤ max_entry` meeting
/// the constraints, in canonical order: boxes in column-word order, and at
/// each box candidate sets ordered by minimum, then lexicographically.
/// The visitor may stop the enumeration early.
pub fn visit_tableaux<F>(shape: &SkewShape, max_entry: u32, constraints: &Constraints, visit: F) -> Result<()>
where
    F: FnMut(&Leaf) -> ControlFlow<()>,
{
    if let Some(mut search) = Search::new(shape, max_entry, constraints, visit)? {
        let _ = search.run();
    }
    Ok(())
}

/// All tableaux visited by [`visit_tableaux`], collected in order.
pub fn enumerate(shape: &SkewShape, max_entry: u32, constraints: &Constraints) -> Result<Vec<SetValuedTableau>> {
    let mut out = Vec::new();
    visit_tableaux(shape, max_entry, constraints, |leaf| {
        out.push(leaf.to_tableau());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Number of tableaux visited by [`visit_tableaux`].
pub fn count(shape: &SkewShape, max_entry: u32, constraints: &Constraints) -> Result<u64> {
    let mut n: u64 = 0;
    let mut overflow = false;
    visit_tableaux(shape, max_entry, constraints, |_| match n.checked_add(1) {
        Some(m) => {
            n = m;
            ControlFlow::Continue(())
        }
        None => {
            overflow = true;
            ControlFlow::Break(())
        }
    })?;
    if overflow {
        return Err(Error::Overflow);
    }
    Ok(n)
}
