//! Permutations of `S_∞` with finite support.
//!
//! A permutation is stored in one-line notation with trailing fixed points
//! trimmed, so the identity keeps an empty window and every element of `S_n`
//! embeds into `S_m` for `m ≥ n` without change of representation. Words in
//! the generators `s_i` multiply either plainly or under the Demazure
//! (0-Hecke) rule `s_i · s_i = s_i`, where a letter acts on the left by
//! exchanging the values `i` and `i+1`, letters consumed in sequence order.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A finite-support permutation of the positive integers, in one-line notation.
///
/// The stored window is a bijection onto `{1..m}`; everything past the window
/// is fixed. Trailing fixed points are always trimmed, so equality is
/// structural equality of canonical forms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    window: Vec<u32>,
}

impl Permutation {
    /// The identity permutation (empty window).
    pub fn identity() -> Self {
        Permutation { window: Vec::new() }
    }

    /// Builds a permutation from one-line notation, validating bijectivity.
    pub fn from_one_line(values: Vec<u32>) -> Result<Self, Error> {
        let m = values.len();
        let mut seen = vec![false; m];
        for &v in &values {
            if v == 0 || v as usize > m || seen[v as usize - 1] {
                return Err(Error::InvalidPermutation {
                    input: format!("{values:?}"),
                    reason: format!("values must form a bijection onto 1..={m}"),
                });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Self::from_window(values))
    }

    /// The order reversing permutation `[n, n-1, …, 1]`, the longest element of `S_n`.
    pub fn order_reversing(n: u32) -> Self {
        Self::from_window((1..=n).rev().collect())
    }

    fn from_window(mut window: Vec<u32>) -> Self {
        while let Some(&last) = window.last() {
            if last as usize == window.len() {
                window.pop();
            } else {
                break;
            }
        }
        Permutation { window }
    }

    /// One-line window with trailing fixed points trimmed.
    pub fn window(&self) -> &[u32] {
        &self.window
    }

    /// Size of the stored window; the permutation lies in `S_n` iff this is `≤ n`.
    pub fn window_size(&self) -> u32 {
        self.window.len() as u32
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    /// True iff the permutation lies in `S_n`.
    pub fn fits_in(&self, n: u32) -> bool {
        self.window_size() <= n
    }

    /// `w(pos)` for a 1-based position; positions past the window are fixed.
    pub fn value_at(&self, pos: u32) -> u32 {
        assert!(pos >= 1, "positions are 1-based");
        self.window.get(pos as usize - 1).copied().unwrap_or(pos)
    }

    /// 1-based position of a value; values past the window are fixed.
    pub fn position_of(&self, value: u32) -> u32 {
        assert!(value >= 1, "values are 1-based");
        self.window
            .iter()
            .position(|&v| v == value)
            .map(|p| p as u32 + 1)
            .unwrap_or(value)
    }

    /// The number of inversions, i.e. pairs `j < k` with `w(j) > w(k)`.
    ///
    /// This equals the minimal length of a factorization into adjacent
    /// transpositions.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut inv = 0;
        for j in 0..w.len() {
            for k in j + 1..w.len() {
                if w[j] > w[k] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// True iff `w(i) > w(i+1)`, equivalently `l(w s_i) = l(w) - 1`.
    pub fn is_right_descent(&self, i: u32) -> bool {
        assert!(i >= 1, "generator indices are 1-based");
        self.value_at(i) > self.value_at(i + 1)
    }

    /// True iff the value `i` occurs after the value `i+1`, equivalently
    /// `l(s_i w) = l(w) - 1`.
    pub fn is_left_descent(&self, i: u32) -> bool {
        assert!(i >= 1, "generator indices are 1-based");
        self.position_of(i) > self.position_of(i + 1)
    }

    /// `w · s_i`: the one-line entries at positions `i` and `i+1` exchanged.
    pub fn right_multiply(&self, i: u32) -> Self {
        assert!(i >= 1, "generator indices are 1-based");
        let mut window = self.window.clone();
        let need = (i + 1) as usize;
        while window.len() < need {
            window.push(window.len() as u32 + 1);
        }
        window.swap(i as usize - 1, i as usize);
        Self::from_window(window)
    }

    /// `s_i · w`: the values `i` and `i+1` exchanged.
    pub fn left_multiply(&self, i: u32) -> Self {
        assert!(i >= 1, "generator indices are 1-based");
        let mut window = self.window.clone();
        let need = (i + 1) as usize;
        while window.len() < need {
            window.push(window.len() as u32 + 1);
        }
        let pa = window.iter().position(|&v| v == i).unwrap();
        let pb = window.iter().position(|&v| v == i + 1).unwrap();
        window.swap(pa, pb);
        Self::from_window(window)
    }

    /// One Demazure step: `s_i · w` when that increases length, `w` otherwise.
    ///
    /// Length never decreases, mirroring the 0-Hecke rule `s_i · s_i = s_i`.
    pub fn demazure_extend(&self, i: u32) -> Self {
        assert!(i >= 1, "generator indices are 1-based");
        if self.position_of(i) < self.position_of(i + 1) {
            self.left_multiply(i)
        } else {
            self.clone()
        }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut window = vec![0u32; self.window.len()];
        for (j, &v) in self.window.iter().enumerate() {
            window[v as usize - 1] = j as u32 + 1;
        }
        Self::from_window(window)
    }

    /// Function composition `self ∘ other`: `other` applied first.
    pub fn compose(&self, other: &Self) -> Self {
        let m = self.window_size().max(other.window_size());
        let window = (1..=m).map(|j| self.value_at(other.value_at(j))).collect();
        Self::from_window(window)
    }

    /// All elements of `S_n` in lexicographic one-line order.
    pub fn all(n: u32) -> Vec<Permutation> {
        use itertools::Itertools;
        (1..=n)
            .permutations(n as usize)
            .map(Self::from_window)
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses comma-separated one-line notation, e.g. `"2,6,1,3,5,4"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut values = Vec::new();
        for part in s.split(',') {
            let v: u32 = part.trim().parse().map_err(|_| Error::InvalidPermutation {
                input: s.to_string(),
                reason: format!("{part:?} is not a positive integer"),
            })?;
            values.push(v);
        }
        Permutation::from_one_line(values).map_err(|_| Error::InvalidPermutation {
            input: s.to_string(),
            reason: "entries must form a bijection onto 1..=m".to_string(),
        })
    }
}

/// A finite sequence of generator indices, the letter `i` denoting `s_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    /// Builds a word; letters must be positive.
    pub fn new(letters: Vec<u32>) -> Self {
        assert!(letters.iter().all(|&a| a >= 1), "letters are 1-based");
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl FromIterator<u32> for Word {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        Word::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Folds a word into a permutation, one letter at a time.
///
/// Each letter `a` exchanges the values `a` and `a+1` on the left; when
/// `demazure` is set, exchanges that would decrease length are omitted.
/// The two arrays keep the one-line form and its inverse in lockstep so a
/// step costs O(1); enumeration over all subsets of a grid leans on this.
fn fold_letters(letters: &[u32], demazure: bool) -> Permutation {
    let max_letter = letters.iter().copied().max().unwrap_or(0);
    let m = max_letter as usize + 1;
    // perm[p] = value at position p+1; inv[v] = position of value v+1 (0-based).
    let mut perm: Vec<u32> = (0..m as u32).collect();
    let mut inv: Vec<u32> = (0..m as u32).collect();
    for &a in letters {
        let a = a as usize - 1;
        let pa = inv[a] as usize;
        let pb = inv[a + 1] as usize;
        if pa < pb || !demazure {
            perm.swap(pa, pb);
            inv.swap(a, a + 1);
        }
    }
    Permutation::from_window(perm.into_iter().map(|v| v + 1).collect())
}

/// The Demazure product of a word: letters that would decrease length are
/// omitted. The empty word yields the identity.
pub fn demazure_product(word: &Word) -> Permutation {
    fold_letters(word.letters(), true)
}

/// The plain group product of a word, with no length checks.
pub fn plain_product(word: &Word) -> Permutation {
    fold_letters(word.letters(), false)
}

/// A descending chain from the top of `S_n` to `w`.
///
/// Returns letters `(i_1, …, i_m)` such that starting from `u_0 = w_0(n)` and
/// setting `u_t = s_{i_t} · u_{t-1}`, the length drops by one at every step
/// and `u_m = w`. Letters act on the left, matching the convention by which
/// reading words of pipe dreams fold into permutations. Among the valid
/// choices the smallest index is taken, so the chain is deterministic;
/// `m = l(w_0(n)) - l(w)`.
pub fn ascent_chain_to_top(w: &Permutation, n: u32) -> Result<Word, Error> {
    if !w.fits_in(n) {
        return Err(Error::OutsideSymmetricGroup {
            w: w.to_string(),
            n,
        });
    }
    // Inverting everything turns the left chain of w into a right chain of
    // w^{-1}: v = w_0(n) ∘ w^{-1} is the quotient left to factor, and a
    // letter i is a valid next step exactly when it is a left descent of v.
    let mut v = Permutation::order_reversing(n).compose(&w.inverse());
    let mut letters = Vec::with_capacity(v.length());
    'outer: while !v.is_identity() {
        for i in 1..n {
            if v.is_left_descent(i) {
                letters.push(i);
                v = v.left_multiply(i);
                continue 'outer;
            }
        }
        unreachable!("a non-identity quotient always has a left descent");
    }
    Ok(Word::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(values: &[u32]) -> Permutation {
        Permutation::from_one_line(values.to_vec()).unwrap()
    }

    #[test]
    fn length_counts_inversions() {
        assert_eq!(Permutation::identity().length(), 0);
        assert_eq!(Permutation::order_reversing(4).length(), 6);
        assert_eq!(perm(&[2, 6, 1, 3, 5, 4]).length(), 6);
    }

    #[test]
    fn right_multiply_swaps_positions() {
        assert_eq!(perm(&[1, 2, 3]).right_multiply(1), perm(&[2, 1, 3]));
        assert_eq!(perm(&[2, 1]).right_multiply(1), Permutation::identity());
        assert_eq!(perm(&[3, 1, 2]).right_multiply(2), perm(&[3, 2, 1]));
    }

    #[test]
    fn right_descents() {
        assert!(Permutation::order_reversing(3).is_right_descent(1));
        assert!(Permutation::order_reversing(3).is_right_descent(2));
        assert!(!Permutation::identity().is_right_descent(1));
        assert!(perm(&[1, 3, 2]).is_right_descent(2));
    }

    #[test]
    fn demazure_extend_examples() {
        assert_eq!(Permutation::identity().demazure_extend(1), perm(&[2, 1]));
        // s_i^2 = s_i under the Demazure rule
        assert_eq!(perm(&[2, 1]).demazure_extend(1), perm(&[2, 1]));
        // s_2 · [1,3,2] would drop length, so the letter is omitted
        assert_eq!(perm(&[1, 3, 2]).demazure_extend(2), perm(&[1, 3, 2]));
    }

    #[test]
    fn demazure_product_examples() {
        assert_eq!(demazure_product(&Word::empty()), Permutation::identity());
        assert_eq!(demazure_product(&Word::new(vec![1, 1])), perm(&[2, 1]));
        // the reading word of a reduced dream reproduces its permutation
        assert_eq!(
            demazure_product(&Word::new(vec![5, 2, 1, 3, 4, 5])),
            perm(&[2, 6, 1, 3, 5, 4])
        );
    }

    #[test]
    fn nonreduced_word_products_differ() {
        // (2,3,2,3) folds to [1,4,3,2] under the Demazure rule but to
        // [1,3,4,2] as a plain product.
        let word = Word::new(vec![2, 3, 2, 3]);
        assert_eq!(demazure_product(&word), perm(&[1, 4, 3, 2]));
        assert_eq!(plain_product(&word), perm(&[1, 3, 4, 2]));
    }

    #[test]
    fn order_reversing_examples() {
        assert_eq!(Permutation::order_reversing(1), Permutation::identity());
        assert_eq!(Permutation::order_reversing(3), perm(&[3, 2, 1]));
        assert_eq!(Permutation::order_reversing(4), perm(&[4, 3, 2, 1]));
        assert_eq!(Permutation::order_reversing(4).length(), 6);
    }

    #[test]
    fn ascent_chain_examples() {
        assert_eq!(
            ascent_chain_to_top(&Permutation::order_reversing(3), 3).unwrap(),
            Word::empty()
        );
        assert_eq!(
            ascent_chain_to_top(&Permutation::identity(), 2).unwrap(),
            Word::new(vec![1])
        );
        let chain = ascent_chain_to_top(&perm(&[1, 3, 2]), 3).unwrap();
        assert_eq!(chain.len(), 2);
        let mut u = Permutation::order_reversing(3);
        let mut lengths = vec![u.length()];
        for &i in chain.letters() {
            u = u.left_multiply(i);
            lengths.push(u.length());
        }
        assert_eq!(u, perm(&[1, 3, 2]));
        assert_eq!(lengths, vec![3, 2, 1]);
    }

    #[test]
    fn ascent_chain_rejects_large_windows() {
        assert!(ascent_chain_to_top(&perm(&[2, 6, 1, 3, 5, 4]), 4).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let w: Permutation = "2,6,1,3,5,4".parse().unwrap();
        assert_eq!(w, perm(&[2, 6, 1, 3, 5, 4]));
        assert_eq!(w.to_string(), "2,6,1,3,5,4");
        assert_eq!("1".parse::<Permutation>().unwrap(), Permutation::identity());
        assert!("2,2,1".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("a,b".parse::<Permutation>().is_err());
    }

    #[test]
    fn trailing_fixed_points_are_trimmed() {
        assert_eq!(perm(&[2, 1, 3, 4]), perm(&[2, 1]));
        assert_eq!(perm(&[1, 2, 3]), Permutation::identity());
    }

    /// Generates every word that Demazure-folds to `w` with `l(w)` letters,
    /// by recursing over the left descent used as the final letter.
    fn reduced_words(w: &Permutation) -> Vec<Vec<u32>> {
        if w.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 1..w.window_size() {
            if w.is_left_descent(i) {
                for mut prefix in reduced_words(&w.left_multiply(i)) {
                    prefix.push(i);
                    out.push(prefix);
                }
            }
        }
        out
    }

    #[test]
    fn demazure_recovers_w_from_every_reduced_word() {
        for w in Permutation::all(4) {
            let words = reduced_words(&w);
            assert!(!words.is_empty());
            for letters in words {
                assert_eq!(letters.len(), w.length());
                assert_eq!(demazure_product(&Word::new(letters)), w);
            }
        }
    }

    #[test]
    fn ascent_chain_is_exhaustive_over_s4() {
        let n = 4;
        let top_len = Permutation::order_reversing(n).length();
        for w in Permutation::all(n) {
            let chain = ascent_chain_to_top(&w, n).unwrap();
            assert_eq!(chain.len(), top_len - w.length());
            let mut u = Permutation::order_reversing(n);
            for &i in chain.letters() {
                let next = u.left_multiply(i);
                assert_eq!(next.length(), u.length() - 1);
                assert!(next.fits_in(n));
                u = next;
            }
            assert_eq!(u, w);
        }
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (0..=max).prop_flat_map(|m| {
            Just((1..=m as u32).collect::<Vec<u32>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_one_line(v).unwrap())
        })
    }

    proptest! {
        /// Multiplying by s_i on the right changes length by exactly one.
        #[test]
        fn right_multiply_steps_length(w in arb_perm(6), i in 1u32..7) {
            let v = w.right_multiply(i);
            let (a, b) = (w.length() as i64, v.length() as i64);
            prop_assert_eq!((a - b).abs(), 1);
        }

        /// Demazure extension is idempotent per letter.
        #[test]
        fn demazure_extend_idempotent(w in arb_perm(6), i in 1u32..7) {
            let once = w.demazure_extend(i);
            prop_assert_eq!(once.demazure_extend(i), once);
        }

        /// Braid compatibility of Demazure folding.
        #[test]
        fn demazure_braid(w in arb_perm(6), i in 1u32..6) {
            let a = w.demazure_extend(i).demazure_extend(i + 1).demazure_extend(i);
            let b = w.demazure_extend(i + 1).demazure_extend(i).demazure_extend(i + 1);
            prop_assert_eq!(a, b);
        }

        /// Distant letters commute under Demazure folding.
        #[test]
        fn demazure_commutation(w in arb_perm(6), i in 1u32..7, gap in 2u32..5) {
            let j = i + gap;
            let a = w.demazure_extend(i).demazure_extend(j);
            let b = w.demazure_extend(j).demazure_extend(i);
            prop_assert_eq!(a, b);
        }

        /// Composition with the inverse is the identity.
        #[test]
        fn inverse_composes_to_identity(w in arb_perm(6)) {
            prop_assert!(w.compose(&w.inverse()).is_identity());
            prop_assert!(w.inverse().compose(&w).is_identity());
        }
    }
}
