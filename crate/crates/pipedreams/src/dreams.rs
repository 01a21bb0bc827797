//! Pipe dreams in a bounded grid and the moves that rearrange them.
//!
//! A pipe dream is a finite set of crossed cells `(row, col)` inside an
//! `n × n` grid. Reading the antidiagonal indices `i + j - 1` of the crosses
//! right-to-left along rows, top row first, gives a word whose Demazure
//! product determines the set `P(w)` the dream belongs to. Enumeration of
//! `P(w)` scans all subsets of the staircase `{i + j ≤ n}` with a bitmask and
//! an O(1)-per-letter 0-Hecke fold; this brute-force scan is the reference
//! oracle behind every theorem check in the crate.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::perm::{demazure_product, plain_product, Permutation, Word};
use crate::polyring::Monomial;
use crate::Error;

/// Default ceiling for the enumeration domain; `2^(n(n-1)/2)` subsets are
/// scanned, so 7 (2^21) is the largest bound tolerable as a default.
pub const ENUMERATION_CEILING: u32 = 7;

/// A set of crossed cells in an `n × n` grid, rows and columns 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PipeDream {
    n: u32,
    crosses: BTreeSet<(u32, u32)>,
}

impl PipeDream {
    /// Builds a dream, validating that every cell fits the grid.
    pub fn new(n: u32, crosses: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidDream("grid bound must be positive".into()));
        }
        let mut set = BTreeSet::new();
        for (row, col) in crosses {
            if row == 0 || col == 0 || row > n || col > n {
                return Err(Error::CellOutOfGrid { row, col, n });
            }
            set.insert((row, col));
        }
        Ok(PipeDream { n, crosses: set })
    }

    pub fn empty(n: u32) -> Self {
        PipeDream::new(n, []).expect("empty dream")
    }

    /// The full staircase `{(i, j) : i + j ≤ n}`, the unique reduced dream of
    /// the order reversing permutation.
    pub fn staircase(n: u32) -> Self {
        let mut crosses = BTreeSet::new();
        for i in 1..n {
            for j in 1..=(n - i) {
                crosses.insert((i, j));
            }
        }
        PipeDream { n, crosses }
    }

    pub fn grid_bound(&self) -> u32 {
        self.n
    }

    /// Number of crosses, written `|D|`.
    pub fn size(&self) -> usize {
        self.crosses.len()
    }

    pub fn contains(&self, row: u32, col: u32) -> bool {
        self.crosses.contains(&(row, col))
    }

    /// Crosses in row-major order.
    pub fn crosses(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.crosses.iter().copied()
    }

    /// Columns crossed in one row, ascending.
    pub fn row_columns(&self, row: u32) -> impl Iterator<Item = u32> + '_ {
        self.crosses
            .range((row, 0)..(row + 1, 0))
            .map(|&(_, c)| c)
    }

    /// Copy with one more cross; the grid bound grows if the cell lies outside.
    pub(crate) fn with_cell(&self, row: u32, col: u32) -> PipeDream {
        let mut out = self.clone();
        out.crosses.insert((row, col));
        out.n = out.n.max(row).max(col);
        out
    }

    pub(crate) fn without_cell(&self, row: u32, col: u32) -> PipeDream {
        let mut out = self.clone();
        out.crosses.remove(&(row, col));
        out
    }

    pub(crate) fn replace_crosses(
        &self,
        crosses: BTreeSet<(u32, u32)>,
    ) -> PipeDream {
        let needed = crosses
            .iter()
            .map(|&(r, c)| r.max(c))
            .max()
            .unwrap_or(1);
        PipeDream {
            n: self.n.max(needed),
            crosses,
        }
    }

    pub(crate) fn crosses_set(&self) -> &BTreeSet<(u32, u32)> {
        &self.crosses
    }

    /// Antidiagonal indices `i + j - 1` of the crosses, read right to left
    /// along each row, rows top to bottom.
    pub fn reading_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.crosses.len());
        let mut row_cols: Vec<u32> = Vec::new();
        let mut current_row = 0;
        let flush = |row: u32, cols: &mut Vec<u32>, letters: &mut Vec<u32>| {
            for &c in cols.iter().rev() {
                letters.push(row + c - 1);
            }
            cols.clear();
        };
        for &(r, c) in &self.crosses {
            if r != current_row {
                flush(current_row, &mut row_cols, &mut letters);
                current_row = r;
            }
            row_cols.push(c);
        }
        flush(current_row, &mut row_cols, &mut letters);
        Word::new(letters)
    }

    /// The Demazure product of the reading word; membership in `P(w)` is the
    /// statement `demazure() == w`.
    pub fn demazure(&self) -> Permutation {
        demazure_product(&self.reading_word())
    }

    /// The plain product of the reading word, i.e. the permutation realized
    /// by the strand network. Agrees with [`PipeDream::demazure`] exactly on
    /// reduced dreams.
    pub fn wiring_permutation(&self) -> Permutation {
        plain_product(&self.reading_word())
    }

    /// A dream is reduced when each pair of strands crosses at most once,
    /// i.e. the cross count equals the length of its Demazure product.
    pub fn is_reduced(&self) -> bool {
        self.size() == self.demazure().length()
    }

    /// `|D| - l(demazure(D))`; zero exactly on reduced dreams.
    pub fn excess(&self) -> usize {
        self.size() - self.demazure().length()
    }

    /// The monomial `x_D`: one factor `x_i` per cross in row `i`.
    pub fn monomial(&self) -> Monomial {
        let mut exps = Vec::new();
        for &(r, _) in &self.crosses {
            if exps.len() < r as usize {
                exps.resize(r as usize, 0);
            }
            exps[r as usize - 1] += 1;
        }
        Monomial::from_exponents(exps)
    }

    /// Set union of crosses; the grid bounds must agree.
    pub fn union(&self, other: &PipeDream) -> Result<PipeDream, Error> {
        if self.n != other.n {
            return Err(Error::GridBoundMismatch(self.n, other.n));
        }
        let mut crosses = self.crosses.clone();
        crosses.extend(other.crosses.iter().copied());
        Ok(PipeDream { n: self.n, crosses })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("dream serialization")
    }

    pub fn from_json(text: &str) -> Result<PipeDream, Error> {
        serde_json::from_str(text).map_err(|e| Error::InvalidDream(e.to_string()))
    }

    /// Plain grid form: `n` lines of `+` and `.`.
    pub fn ascii_grid(&self) -> String {
        let mut out = String::new();
        for r in 1..=self.n {
            for c in 1..=self.n {
                out.push(if self.contains(r, c) { '+' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    /// Strand form: crossing tiles drawn as `┼`, elbow tiles as `╯`, rows
    /// trimmed to the staircase the way pipe dreams are usually drawn.
    pub fn ascii_strands(&self) -> String {
        let mut out = String::new();
        for r in 1..=self.n {
            let staircase_width = self.n + 1 - r;
            let width = self
                .row_columns(r)
                .last()
                .map_or(staircase_width, |c| c.max(staircase_width));
            for c in 1..=width {
                out.push(if self.contains(r, c) { '┼' } else { '╯' });
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for PipeDream {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PipeDream", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("crosses", &self.crosses)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for PipeDream {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: u32,
            crosses: Vec<(u32, u32)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        PipeDream::new(raw.n, raw.crosses).map_err(D::Error::custom)
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// Staircase cells of the `n`-grid in reading order: rows ascending, columns
/// descending within a row. Bit `k` of an enumeration mask refers to the
/// `k`-th cell of this list.
fn staircase_cells(n: u32) -> Vec<(u32, u32)> {
    let mut cells = Vec::new();
    for i in 1..n {
        for j in (1..=(n - i)).rev() {
            cells.push((i, j));
        }
    }
    cells
}

/// Visits every subset of the staircase together with the Demazure product of
/// its reading word. The fold works on two flat arrays (one-line form and its
/// inverse) so each letter costs O(1).
fn scan_staircase(n: u32, mut visit: impl FnMut(u64, &[u32])) {
    let cells = staircase_cells(n);
    // letters of the reading word, per cell, in reading order
    let letters: Vec<u32> = cells.iter().map(|&(i, j)| i + j - 1).collect();
    let bits = cells.len();
    let mut perm: Vec<u32> = (0..n).collect();
    let mut inv: Vec<u32> = (0..n).collect();
    for mask in 0u64..(1u64 << bits) {
        for v in 0..n {
            perm[v as usize] = v;
            inv[v as usize] = v;
        }
        for (k, &a) in letters.iter().enumerate() {
            if mask & (1 << k) != 0 {
                let a = a as usize - 1;
                let pa = inv[a] as usize;
                let pb = inv[a + 1] as usize;
                if pa < pb {
                    perm.swap(pa, pb);
                    inv.swap(a, a + 1);
                }
            }
        }
        visit(mask, &perm);
    }
}

fn window_from_flat(perm: &[u32]) -> Permutation {
    let one_line: Vec<u32> = perm.iter().map(|&v| v + 1).collect();
    Permutation::from_one_line(one_line).expect("fold output is a bijection")
}

fn dream_from_mask(n: u32, cells: &[(u32, u32)], mask: u64) -> PipeDream {
    let crosses = cells
        .iter()
        .enumerate()
        .filter(|(k, _)| mask & (1 << k) != 0)
        .map(|(_, &cell)| cell);
    PipeDream::new(n, crosses).expect("staircase cells fit the grid")
}

fn check_ceiling(n: u32, ceiling: u32) -> Result<(), Error> {
    if n > ceiling {
        return Err(Error::CeilingExceeded { n, ceiling });
    }
    Ok(())
}

/// Brute-force enumeration of `P(w)` (or `RP(w)` with `reduced_only`) over
/// all subsets of the staircase, with the default ceiling.
pub fn enumerate(w: &Permutation, n: u32, reduced_only: bool) -> Result<Vec<PipeDream>, Error> {
    enumerate_with_ceiling(w, n, reduced_only, ENUMERATION_CEILING)
}

/// Same as [`enumerate`], with an explicit ceiling on `n`.
pub fn enumerate_with_ceiling(
    w: &Permutation,
    n: u32,
    reduced_only: bool,
    ceiling: u32,
) -> Result<Vec<PipeDream>, Error> {
    check_ceiling(n, ceiling)?;
    if !w.fits_in(n) {
        return Err(Error::OutsideSymmetricGroup {
            w: w.to_string(),
            n,
        });
    }
    let cells = staircase_cells(n);
    let target_len = w.length();
    let mut hits = Vec::new();
    scan_staircase(n, |mask, perm| {
        if reduced_only && mask.count_ones() as usize != target_len {
            return;
        }
        let matches = (1..=n).all(|p| {
            let v = perm[p as usize - 1] + 1;
            v == w.value_at(p)
        });
        if matches {
            hits.push(mask);
        }
    });
    let mut dreams: Vec<PipeDream> = hits
        .into_iter()
        .map(|mask| dream_from_mask(n, &cells, mask))
        .collect();
    dreams.sort();
    Ok(dreams)
}

/// Every `P(w)` of one grid at once: a single staircase scan bucketed by
/// Demazure product. Theorem sweeps share one atlas instead of re-scanning
/// per permutation.
pub struct Atlas {
    n: u32,
    cells: Vec<(u32, u32)>,
    by_perm: BTreeMap<Permutation, Vec<u64>>,
}

impl Atlas {
    pub fn build(n: u32, ceiling: u32) -> Result<Atlas, Error> {
        check_ceiling(n, ceiling)?;
        let cells = staircase_cells(n);
        let mut by_perm: BTreeMap<Permutation, Vec<u64>> = BTreeMap::new();
        scan_staircase(n, |mask, perm| {
            by_perm
                .entry(window_from_flat(perm))
                .or_default()
                .push(mask);
        });
        Ok(Atlas { n, cells, by_perm })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `P(w)`, materialized in canonical order.
    pub fn dreams(&self, w: &Permutation) -> Vec<PipeDream> {
        let mut out: Vec<PipeDream> = self
            .by_perm
            .get(w)
            .map(|masks| {
                masks
                    .iter()
                    .map(|&m| dream_from_mask(self.n, &self.cells, m))
                    .collect()
            })
            .unwrap_or_default();
        out.sort();
        out
    }

    /// `RP(w)`: the members of `P(w)` with exactly `l(w)` crosses.
    pub fn reduced_dreams(&self, w: &Permutation) -> Vec<PipeDream> {
        let len = w.length();
        self.dreams(w)
            .into_iter()
            .filter(|d| d.size() == len)
            .collect()
    }
}

/// The three chute move kinds. Kind 1 slides a cross between the rectangle
/// corners, kinds 2 and 3 delete one of the two corner crosses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChuteKind {
    One,
    Two,
    Three,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChuteDirection {
    Forward,
    Inverse,
}

/// A `2 × L` chutable rectangle: rows `top_row, top_row + 1`, columns
/// `left_col ..= left_col + width - 1`, all interior columns doubly crossed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChuteRect {
    pub top_row: u32,
    pub left_col: u32,
    pub width: u32,
    pub kind: ChuteKind,
    pub direction: ChuteDirection,
}

impl ChuteRect {
    fn right_col(&self) -> u32 {
        self.left_col + self.width - 1
    }
}

/// Corner pattern required before a move, as (top-left, bottom-left,
/// top-right, bottom-right) occupancy.
fn required_corners(kind: ChuteKind, direction: ChuteDirection) -> (bool, bool, bool, bool) {
    use ChuteDirection::*;
    use ChuteKind::*;
    match (kind, direction) {
        (One, Forward) => (false, false, true, false),
        (One, Inverse) => (false, true, false, false),
        (Two, Forward) => (false, true, true, false),
        (Two, Inverse) => (false, true, false, false),
        (Three, Forward) => (false, true, true, false),
        (Three, Inverse) => (false, false, true, false),
    }
}

impl PipeDream {
    fn rect_applies(&self, rect: &ChuteRect) -> bool {
        let (i, j, l) = (rect.top_row, rect.left_col, rect.width);
        if i < 1 || j < 1 || l < 2 {
            return false;
        }
        if i + 1 > self.n || j + l - 1 > self.n {
            return false;
        }
        for c in (j + 1)..(j + l - 1) {
            if !self.contains(i, c) || !self.contains(i + 1, c) {
                return false;
            }
        }
        let (a, b, c, d) = required_corners(rect.kind, rect.direction);
        self.contains(i, j) == a
            && self.contains(i + 1, j) == b
            && self.contains(i, rect.right_col()) == c
            && self.contains(i + 1, rect.right_col()) == d
    }

    /// All applicable rectangles of one kind and direction, sorted by
    /// `(top_row, left_col, width)`.
    pub fn find_chutable(&self, kind: ChuteKind, direction: ChuteDirection) -> Vec<ChuteRect> {
        let mut out = Vec::new();
        for i in 1..self.n {
            for j in 1..=self.n.saturating_sub(1) {
                for width in 2..=(self.n - j + 1) {
                    let rect = ChuteRect {
                        top_row: i,
                        left_col: j,
                        width,
                        kind,
                        direction,
                    };
                    if self.rect_applies(&rect) {
                        out.push(rect);
                    }
                }
            }
        }
        out
    }

    /// Applies a chute move; the rectangle must be applicable.
    ///
    /// Forward effects: kind 1 deletes the top-right cross and adds the
    /// bottom-left one, kind 2 deletes the top-right cross, kind 3 deletes
    /// the bottom-left cross. Inverse moves undo exactly those effects.
    pub fn chute(&self, rect: &ChuteRect) -> Result<PipeDream, Error> {
        if !self.rect_applies(rect) {
            return Err(Error::ChuteNotApplicable(format!("{rect:?}")));
        }
        let (i, j) = (rect.top_row, rect.left_col);
        let r = rect.right_col();
        use ChuteDirection::*;
        use ChuteKind::*;
        let out = match (rect.kind, rect.direction) {
            (One, Forward) => self.without_cell(i, r).with_cell(i + 1, j),
            (One, Inverse) => self.without_cell(i + 1, j).with_cell(i, r),
            (Two, Forward) => self.without_cell(i, r),
            (Two, Inverse) => self.with_cell(i, r),
            (Three, Forward) => self.without_cell(i + 1, j),
            (Three, Inverse) => self.with_cell(i + 1, j),
        };
        Ok(out)
    }
}
