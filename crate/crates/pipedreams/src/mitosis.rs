//! The mitosis operators and the three-way split of `P(w)` they induce.
//!
//! For a row `i`, `start_col` finds the first empty box of the row and
//! `candidate_columns` the columns left of it with an empty box below. Each
//! candidate `p` yields an offspring dream: the cross at `(i, p)` is deleted
//! and every candidate cross left of `p` drops one row. Classical mitosis
//! returns the offspring set; the primed variant interleaves the unions of
//! consecutive offspring, forming a chain of `2k - 1` dreams.
//!
//! When `i` is a left descent of `w`, the offspring of a dream in `P(w)`
//! all share one Demazure product, which is either `s_i·w` or `w` — so
//! `P(w)` splits into transfer, internal and barren classes. Left descents
//! are forced by the letter convention: the reading word of a dream folds by
//! left multiplication, so deleting the mitosis cross peels a letter off the
//! left of the product.

use crate::dreams::PipeDream;
use crate::perm::Permutation;
use crate::{dreams, Error};

/// `start_i(D)`: the first column whose box in row `i` is empty, with the
/// sentinel `n + 1` when the row is fully crossed.
pub fn start_col(d: &PipeDream, i: u32) -> u32 {
    assert!(i >= 1, "rows are 1-based");
    let n = d.grid_bound();
    (1..=n).find(|&j| !d.contains(i, j)).unwrap_or(n + 1)
}

/// The candidate set `J_i(D)`: columns strictly left of `start_i(D)` whose
/// box in row `i + 1` is empty. Strictly increasing.
pub fn candidate_columns(d: &PipeDream, i: u32) -> Vec<u32> {
    let start = start_col(d, i);
    (1..start).filter(|&j| !d.contains(i + 1, j)).collect()
}

/// The offspring `D_p`: delete `(i, p)`, then drop every candidate cross
/// strictly left of `p` into the empty box below it.
pub fn offspring(d: &PipeDream, i: u32, p: u32) -> Result<PipeDream, Error> {
    let candidates = candidate_columns(d, i);
    if !candidates.contains(&p) {
        return Err(Error::NotACandidate { row: i, col: p });
    }
    let mut out = d.without_cell(i, p);
    for &j in candidates.iter().filter(|&&j| j < p) {
        out = out.without_cell(i, j).with_cell(i + 1, j);
    }
    Ok(out)
}

/// `mitosis_i(D)`: one offspring per candidate column, in column order.
/// Empty exactly when `J_i(D)` is empty.
pub fn mitosis(d: &PipeDream, i: u32) -> Vec<PipeDream> {
    candidate_columns(d, i)
        .into_iter()
        .map(|p| offspring(d, i, p).expect("candidate column"))
        .collect()
}

/// Union that tolerates offspring whose grid bound grew; the chain of a
/// primed mitosis needs it when row `i + 1` was extended.
fn union_extending(a: &PipeDream, b: &PipeDream) -> PipeDream {
    let mut crosses = a.crosses_set().clone();
    crosses.extend(b.crosses_set().iter().copied());
    a.replace_crosses(crosses)
}

/// `mitosis'_i(D)`: with `J_i(D) = {j_1 < … < j_k}`, the chain
/// `D_{j_1}, D_{j_1} + D_{j_2}, D_{j_2}, …, D_{j_{k-1}} + D_{j_k}, D_{j_k}`
/// where the sums are unions — `2k - 1` dreams, or none when `k = 0`.
pub fn mitosis_prime(d: &PipeDream, i: u32) -> Vec<PipeDream> {
    let offspring = mitosis(d, i);
    let mut out = Vec::with_capacity(offspring.len() * 2);
    for (m, child) in offspring.iter().enumerate() {
        out.push(child.clone());
        if let Some(next) = offspring.get(m + 1) {
            out.push(union_extending(child, next));
        }
    }
    out
}

/// Where mitosis sends a dream of `P(w)`: into `P(s_i·w)`, back into `P(w)`,
/// or nowhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DreamClass {
    Transfer,
    Internal,
    Barren,
}

impl std::fmt::Display for DreamClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DreamClass::Transfer => write!(f, "Transfer"),
            DreamClass::Internal => write!(f, "Internal"),
            DreamClass::Barren => write!(f, "Barren"),
        }
    }
}

fn require_membership(d: &PipeDream, i: u32, w: &Permutation) -> Result<(), Error> {
    let actual = d.demazure();
    if actual != *w {
        return Err(Error::WrongPermutation {
            expected: w.to_string(),
            actual: actual.to_string(),
        });
    }
    if !w.is_left_descent(i) {
        return Err(Error::NotADescent {
            w: w.to_string(),
            i,
        });
    }
    Ok(())
}

/// Classifies a dream of `P(w)` for a left descent `i` of `w`.
///
/// Mitosis sends all offspring of one dream to a single Demazure product, so
/// inspecting the first offspring suffices; debug builds validate that all
/// offspring really do agree.
pub fn classify(d: &PipeDream, i: u32, w: &Permutation) -> Result<DreamClass, Error> {
    require_membership(d, i, w)?;
    let children = mitosis(d, i);
    let Some(first) = children.first() else {
        return Ok(DreamClass::Barren);
    };
    let product = first.demazure();
    debug_assert!(
        children.iter().all(|c| c.demazure() == product),
        "offspring of one dream must share a Demazure product"
    );
    if product == *w {
        Ok(DreamClass::Internal)
    } else if product == w.left_multiply(i) {
        Ok(DreamClass::Transfer)
    } else {
        unreachable!("offspring product must be w or s_i·w, got {product}")
    }
}

/// The transfer / internal / barren split of all of `P(w)`.
#[derive(Clone, Debug)]
pub struct MitosisPartition {
    pub w: Permutation,
    pub i: u32,
    pub transfer: Vec<PipeDream>,
    pub internal: Vec<PipeDream>,
    pub barren: Vec<PipeDream>,
}

impl MitosisPartition {
    pub fn total(&self) -> usize {
        self.transfer.len() + self.internal.len() + self.barren.len()
    }
}

/// Classifies every member of `P(w)`; `i` must be a left descent of `w`.
pub fn partition(w: &Permutation, i: u32, n: u32, ceiling: u32) -> Result<MitosisPartition, Error> {
    if !w.is_left_descent(i) {
        return Err(Error::NotADescent {
            w: w.to_string(),
            i,
        });
    }
    let mut out = MitosisPartition {
        w: w.clone(),
        i,
        transfer: Vec::new(),
        internal: Vec::new(),
        barren: Vec::new(),
    };
    for d in dreams::enumerate_with_ceiling(w, n, false, ceiling)? {
        match classify(&d, i, w)? {
            DreamClass::Transfer => out.transfer.push(d),
            DreamClass::Internal => out.internal.push(d),
            DreamClass::Barren => out.barren.push(d),
        }
    }
    Ok(out)
}

/// For a barren dream, constructs the internal dream whose primed mitosis
/// contains it.
///
/// The two adjacent rows of a barren dream read, left to right, as doubly
/// crossed columns and bottom-only columns up to the first column `q` that is
/// neither. Converting every bottom-only column left of `q` to top-only —
/// and, when `q` is fully empty, crossing `(i, q)` as well — rebuilds the
/// preimage. Exhaustive search over the internal class is the test oracle
/// for this construction.
pub fn mitosis_preimage(d: &PipeDream, i: u32, w: &Permutation) -> Result<PipeDream, Error> {
    let class = classify(d, i, w)?;
    if class != DreamClass::Barren {
        return Err(Error::NotBarren {
            w: w.to_string(),
            i,
        });
    }
    let n = d.grid_bound();
    let mut bottom_only = Vec::new();
    let mut stop = None;
    for c in 1..=(n + 1) {
        let top = d.contains(i, c);
        let bottom = d.contains(i + 1, c);
        match (top, bottom) {
            (true, true) => {}
            (false, true) => bottom_only.push(c),
            (true, false) | (false, false) => {
                stop = Some((c, top));
                break;
            }
        }
    }
    let (q, q_top_crossed) = stop.expect("a column beyond the crosses is empty");
    let mut out = d.clone();
    for &p in &bottom_only {
        out = out.without_cell(i + 1, p).with_cell(i, p);
    }
    if !q_top_crossed {
        out = out.with_cell(i, q);
    }
    Ok(out)
}
