//! Introns and the row-swapping involution `tau_i` on `P(w)`.
//!
//! Fix two adjacent rows `i, i+1`. Every column shows one of four patterns:
//! both boxes crossed, top only, bottom only, or both empty. An intron is a
//! column range whose top-left and bottom-right boxes are empty and whose
//! non-doubly-crossed columns read, left to right, as bottom-only columns,
//! then empty columns, then top-only columns. The strip of the two rows past
//! `start_i` decomposes uniquely into containment-maximal introns and the
//! fully crossed rectangles between them.
//!
//! Mutating an intron exchanges its top-row and bottom-row cross counts while
//! fixing the doubly crossed columns and the Demazure product of the host
//! dream; `tau_i` does the same to the whole strip. Both are computed by a
//! canonical pairing: among all ways to refill the region that keep the
//! frozen cells, the Demazure product, the doubly crossed columns, and (for
//! a descent) the mitosis class, the fillings with cross counts `(a, b)` and
//! `(b, a)` are matched up in canonical order. The pairing is symmetric, so
//! the maps are involutions by construction, and every matched pair is
//! connected by chute moves inside the two rows.

use std::collections::BTreeSet;

use crate::dreams::PipeDream;
use crate::mitosis::{classify, start_col, DreamClass};
use crate::Error;

/// Occupancy pattern of the boxes `(i, c)` over `(i+1, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColumnType {
    /// `+` over `+`
    BothCrossed,
    /// `+` over `·`
    TopOnly,
    /// `·` over `+`
    BottomOnly,
    /// `·` over `·`
    BothEmpty,
}

fn type_in(set: &BTreeSet<(u32, u32)>, i: u32, c: u32) -> ColumnType {
    match (set.contains(&(i, c)), set.contains(&(i + 1, c))) {
        (true, true) => ColumnType::BothCrossed,
        (true, false) => ColumnType::TopOnly,
        (false, true) => ColumnType::BottomOnly,
        (false, false) => ColumnType::BothEmpty,
    }
}

/// Column pattern at `(i, c)` over `(i+1, c)`; boxes past the grid are empty.
pub fn column_type(d: &PipeDream, i: u32, c: u32) -> ColumnType {
    assert!(i >= 1 && c >= 1, "rows and columns are 1-based");
    type_in(d.crosses_set(), i, c)
}

/// A column range `[first_col, last_col]` in rows `top_row, top_row + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntronRange {
    pub top_row: u32,
    pub first_col: u32,
    pub last_col: u32,
}

impl IntronRange {
    pub fn new(top_row: u32, first_col: u32, last_col: u32) -> Self {
        assert!(top_row >= 1 && first_col >= 1 && first_col <= last_col);
        IntronRange {
            top_row,
            first_col,
            last_col,
        }
    }
}

fn is_intron_in(set: &BTreeSet<(u32, u32)>, i: u32, a: u32, b: u32) -> bool {
    // boundary boxes: top-left and bottom-right empty
    if set.contains(&(i, a)) || set.contains(&(i + 1, b)) {
        return false;
    }
    // ignoring doubly crossed columns: bottom-only, then empty, then top-only
    let mut phase = 0;
    for c in a..=b {
        match type_in(set, i, c) {
            ColumnType::BothCrossed => {}
            ColumnType::BottomOnly => {
                if phase > 0 {
                    return false;
                }
            }
            ColumnType::BothEmpty => {
                if phase > 1 {
                    return false;
                }
                phase = 1;
            }
            ColumnType::TopOnly => phase = 2,
        }
    }
    true
}

/// Whether the range satisfies both the boundary-box and the column-order
/// conditions of an intron.
pub fn is_intron(d: &PipeDream, range: &IntronRange) -> bool {
    is_intron_in(
        d.crosses_set(),
        range.top_row,
        range.first_col,
        range.last_col,
    )
}

/// One part of a two-row strip: a maximal intron or a run of doubly crossed
/// columns between introns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripPart {
    Intron(IntronRange),
    FullRect {
        top_row: u32,
        first_col: u32,
        last_col: u32,
    },
}

/// Splits the strip `rows i, i+1 × columns span.0 ..= span.1` into its
/// maximal introns and the fully crossed rectangles between them.
///
/// Maximality is by containment: an intron no strictly larger intron of the
/// span contains. The span's top-left and bottom-right boxes must be empty.
/// The parts are pairwise disjoint, cover every cross of the strip, and are
/// unique; a violation of either assertion signals a convention bug and is
/// reported as an error rather than silently accepted.
pub fn maximal_intron_decomposition(
    d: &PipeDream,
    i: u32,
    span: (u32, u32),
) -> Result<Vec<StripPart>, Error> {
    let (c0, c1) = span;
    if c0 < 1 || c0 > c1 {
        return Err(Error::DecompositionFault(format!(
            "invalid span {c0}..{c1}"
        )));
    }
    let set = d.crosses_set();
    if set.contains(&(i, c0)) || set.contains(&(i + 1, c1)) {
        return Err(Error::DecompositionFault(
            "span boundary boxes must be empty".into(),
        ));
    }

    // all intron ranges inside the span, then those not strictly contained
    // in a larger one
    let mut introns = Vec::new();
    for a in c0..=c1 {
        for b in a..=c1 {
            if is_intron_in(set, i, a, b) {
                introns.push((a, b));
            }
        }
    }
    let maximal: Vec<(u32, u32)> = introns
        .iter()
        .copied()
        .filter(|&(a, b)| {
            !introns
                .iter()
                .any(|&(a2, b2)| (a2, b2) != (a, b) && a2 <= a && b <= b2)
        })
        .collect();

    for pair in maximal.windows(2) {
        if pair[1].0 <= pair[0].1 {
            return Err(Error::DecompositionFault(format!(
                "maximal introns {:?} and {:?} overlap",
                pair[0], pair[1]
            )));
        }
    }

    let covered = |c: u32| maximal.iter().any(|&(a, b)| a <= c && c <= b);
    let mut parts = Vec::new();
    let mut rect_start = None;
    for c in c0..=c1 {
        if covered(c) {
            if let Some(start) = rect_start.take() {
                parts.push(StripPart::FullRect {
                    top_row: i,
                    first_col: start,
                    last_col: c - 1,
                });
            }
            if let Some(&(a, b)) = maximal.iter().find(|&&(a, _)| a == c) {
                parts.push(StripPart::Intron(IntronRange::new(i, a, b)));
            }
            continue;
        }
        match type_in(set, i, c) {
            ColumnType::BothCrossed => rect_start.get_or_insert(c),
            other => {
                return Err(Error::DecompositionFault(format!(
                    "column {c} of type {other:?} is not covered by any maximal intron"
                )));
            }
        };
    }
    if let Some(start) = rect_start {
        parts.push(StripPart::FullRect {
            top_row: i,
            first_col: start,
            last_col: c1,
        });
    }

    // maximality also reads off the neighbouring boxes: the nearest empty
    // box to the left of a maximal intron sits in row i+1, the nearest to
    // the right in row i
    debug_assert!(maximal.iter().all(|&(a, b)| {
        let left_ok = (c0..a).rev().find_map(|c| match type_in(set, i, c) {
            ColumnType::BothCrossed => None,
            ColumnType::TopOnly | ColumnType::BothEmpty => Some(true),
            ColumnType::BottomOnly => Some(false),
        });
        let right_ok = ((b + 1)..=c1).find_map(|c| match type_in(set, i, c) {
            ColumnType::BothCrossed => None,
            ColumnType::BottomOnly | ColumnType::BothEmpty => Some(true),
            ColumnType::TopOnly => Some(false),
        });
        left_ok.unwrap_or(true) && right_ok.unwrap_or(true)
    }));

    Ok(parts)
}

/// A two-row region to refill: the frozen remainder of the dream, the free
/// cells, and the invariants a refill must keep.
struct RegionPairing {
    top_row: u32,
    /// Free cells in a fixed order; subsets of these are enumerated.
    cells: Vec<(u32, u32)>,
    /// The dream minus the free cells.
    frozen: BTreeSet<(u32, u32)>,
}

impl RegionPairing {
    fn new(d: &PipeDream, i: u32, cols: impl Iterator<Item = u32>, forced_empty: &[(u32, u32)]) -> Self {
        let mut cells = Vec::new();
        for c in cols {
            for r in [i, i + 1] {
                if !forced_empty.contains(&(r, c)) {
                    cells.push((r, c));
                }
            }
        }
        let mut frozen = d.crosses_set().clone();
        for cell in &cells {
            frozen.remove(cell);
        }
        RegionPairing {
            top_row: i,
            cells,
            frozen,
        }
    }

    fn counts(&self, set: &BTreeSet<(u32, u32)>, cols: (u32, u32)) -> (usize, usize) {
        let count = |r: u32| {
            set.range((r, cols.0)..=(r, cols.1)).count()
        };
        (count(self.top_row), count(self.top_row + 1))
    }

    fn crossed_columns(&self, set: &BTreeSet<(u32, u32)>, cols: (u32, u32)) -> Vec<u32> {
        (cols.0..=cols.1)
            .filter(|&c| type_in(set, self.top_row, c) == ColumnType::BothCrossed)
            .collect()
    }
}

/// Pairs the region filling of `d` with the filling whose row counts are
/// exchanged, keeping the Demazure product, the doubly crossed columns, and
/// an optional extra key. Returns the partner, or `None` if the fillings
/// with swapped counts do not match up one to one — which would contradict
/// the existence of the row-swapping involution.
fn swap_partner(
    d: &PipeDream,
    region: &RegionPairing,
    cols: (u32, u32),
    extra_key: impl Fn(&PipeDream) -> Option<u8>,
) -> Option<PipeDream> {
    let own_counts = region.counts(d.crosses_set(), cols);
    if own_counts.0 == own_counts.1 {
        return Some(d.clone());
    }
    let target = d.demazure();
    let own_crossed = region.crossed_columns(d.crosses_set(), cols);
    let own_key = extra_key(d);

    let mut forward = Vec::new();
    let mut backward = Vec::new();
    for mask in 0u64..(1 << region.cells.len()) {
        let mut set = region.frozen.clone();
        for (k, &cell) in region.cells.iter().enumerate() {
            if mask & (1 << k) != 0 {
                set.insert(cell);
            }
        }
        let candidate = d.replace_crosses(set);
        let counts = region.counts(candidate.crosses_set(), cols);
        if counts != own_counts && counts != (own_counts.1, own_counts.0) {
            continue;
        }
        if region.crossed_columns(candidate.crosses_set(), cols) != own_crossed {
            continue;
        }
        if candidate.demazure() != target {
            continue;
        }
        if extra_key(&candidate) != own_key {
            continue;
        }
        if counts == own_counts {
            forward.push(candidate);
        } else {
            backward.push(candidate);
        }
    }
    if forward.len() != backward.len() {
        return None;
    }
    forward.sort();
    backward.sort();
    let index = forward.iter().position(|e| e == d)?;
    Some(backward[index].clone())
}

/// The intron mutation: the doubly crossed columns stay put, the bottom-only
/// and top-only cross counts trade places, and the Demazure product of the
/// host dream survives. Applying it twice returns the original dream.
///
/// Only the empty boundary boxes are required of the range: the mutation of
/// an intron need not be intron-patterned itself, and accepting such ranges
/// is what makes the double application land back on the original.
pub fn mutate_intron(d: &PipeDream, range: &IntronRange) -> Result<PipeDream, Error> {
    let set = d.crosses_set();
    if set.contains(&(range.top_row, range.first_col))
        || set.contains(&(range.top_row + 1, range.last_col))
    {
        return Err(Error::NotAnIntron(format!("{range:?}")));
    }
    let i = range.top_row;
    let cols = (range.first_col, range.last_col);
    let region = RegionPairing::new(
        d,
        i,
        cols.0..=cols.1,
        &[(i, range.first_col), (i + 1, range.last_col)],
    );
    swap_partner(d, &region, cols, |_| None)
        .ok_or_else(|| Error::DecompositionFault(format!("no mutation partner for {range:?}")))
}

/// The involution `tau_i`: exchanges the cross counts of rows `i, i+1` on
/// the strip at and past `start_i(D)`.
///
/// Rows other than `i, i+1` and columns left of `start_i(D)` are untouched,
/// `start_i` and the doubly crossed columns are preserved, the two row
/// counts past `start_i` trade places, the Demazure product survives, and —
/// when `i` is a left descent of the product — so does the mitosis class.
/// The grid bound grows by one column in the rare case where the partner
/// needs room just past it.
pub fn tau(d: &PipeDream, i: u32) -> PipeDream {
    let start = start_col(d, i);
    let n = d.grid_bound();
    let last_cross = d
        .row_columns(i)
        .chain(d.row_columns(i + 1))
        .filter(|&c| c >= start)
        .max();
    if last_cross.is_none() {
        return d.clone();
    }
    let w = d.demazure();
    let key = |candidate: &PipeDream| -> Option<u8> {
        if w.is_left_descent(i) {
            match classify(candidate, i, &w).expect("candidate stays in P(w)") {
                DreamClass::Transfer => Some(0),
                DreamClass::Internal => Some(1),
                DreamClass::Barren => Some(2),
            }
        } else {
            None
        }
    };
    for limit in [n, n + 1] {
        let cols = (start, limit);
        let region = RegionPairing::new(d, i, cols.0..=cols.1, &[(i, start)]);
        if let Some(partner) = swap_partner(d, &region, cols, key) {
            return partner;
        }
    }
    unreachable!("the row-swapping involution pairs every filling");
}
