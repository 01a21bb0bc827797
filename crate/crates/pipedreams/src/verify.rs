//! Exhaustive desk-scale verification of the structure theorems.
//!
//! Every check pits the brute-force enumeration oracle against the operator
//! side: polynomial identities are compared term-exactly, set identities by
//! canonical serialization. A failing report always carries a reproducible
//! counterexample. The suite walks all of `S_n` (and all relevant generator
//! indices), parallelized over the `(w, i)` jobs with deterministic merge
//! order.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::dreams::{Atlas, ChuteDirection, ChuteKind, ChuteRect, PipeDream};
use crate::introns::tau;
use crate::mitosis::{
    candidate_columns, classify, mitosis, mitosis_preimage, mitosis_prime, start_col, DreamClass,
};
use crate::perm::Permutation;
use crate::polyring::{grothendieck, schubert, Polynomial};
use crate::{dreams, Error};

/// Largest `n` the suite accepts by default; larger boards must be requested
/// explicitly.
pub const DEFAULT_CEILING: u32 = 6;

/// The statements the harness can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// Reduced-dream monomials sum to the Schubert polynomial.
    T11,
    /// Signed dream monomials sum to the Grothendieck polynomial.
    T12,
    /// Mitosis maps the reduced dreams of `w` bijectively onto those of `s_i·w`.
    T21,
    /// Chute moves preserve membership in `P(w)`.
    T22,
    /// All offspring of one dream share a Demazure product in `{w, s_i·w}`.
    T23,
    /// `tau_i` is an involution with its stated properties.
    T31,
    /// Primed mitosis carries transfer dreams onto `P(s_i·w)` and internal
    /// dreams onto the barren class, with the weight identities.
    T41,
    /// The lowest-degree part of the Grothendieck polynomial is the Schubert
    /// polynomial.
    TMin,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::T11,
        TheoremId::T12,
        TheoremId::T21,
        TheoremId::T22,
        TheoremId::T23,
        TheoremId::T31,
        TheoremId::T41,
        TheoremId::TMin,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            TheoremId::T11 => "t11",
            TheoremId::T12 => "t12",
            TheoremId::T21 => "t21",
            TheoremId::T22 => "t22",
            TheoremId::T23 => "t23",
            TheoremId::T31 => "t31",
            TheoremId::T41 => "t41",
            TheoremId::TMin => "tmin",
        }
    }

    pub fn parse(text: &str) -> Option<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.id() == text.to_ascii_lowercase())
    }

    /// Which generator indices a theorem wants per permutation: none, every
    /// left descent, or every index below `n`.
    fn index_mode(&self) -> IndexMode {
        match self {
            TheoremId::T11 | TheoremId::T12 | TheoremId::T22 | TheoremId::TMin => IndexMode::None,
            TheoremId::T21 | TheoremId::T23 | TheoremId::T41 => IndexMode::Descents,
            TheoremId::T31 => IndexMode::AllBelowN,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum IndexMode {
    None,
    Descents,
    AllBelowN,
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// Outcome of one check at fixed parameters.
#[derive(Clone, Debug)]
pub struct Report {
    pub theorem: TheoremId,
    pub w: Permutation,
    pub i: Option<u32>,
    pub n: u32,
    pub pass: bool,
    /// Reproducible payload describing the first failure, when failing.
    pub counterexample: Option<String>,
    pub elapsed: Duration,
}

impl Report {
    /// One line of human text; timing is optional so output can stay
    /// byte-deterministic.
    pub fn human_line(&self, with_timing: bool) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let mut line = format!("{verdict} {} n={} w={}", self.theorem, self.n, self.w);
        if let Some(i) = self.i {
            line.push_str(&format!(" i={i}"));
        }
        if with_timing {
            line.push_str(&format!(" ({:.2}ms)", self.elapsed.as_secs_f64() * 1e3));
        }
        if let Some(ce) = &self.counterexample {
            line.push_str(&format!(" — counterexample: {ce}"));
        }
        line
    }
}

/// Timing is deliberately left out of the serialized form so report arrays
/// are byte-deterministic.
impl Serialize for Report {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Report", 6)?;
        s.serialize_field("theorem", self.theorem.id())?;
        s.serialize_field("w", &self.w.to_string())?;
        s.serialize_field("i", &self.i)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("pass", &self.pass)?;
        s.serialize_field("counterexample", &self.counterexample)?;
        s.end()
    }
}

/// Serializes reports as a JSON array, one object per report.
pub fn reports_to_json(reports: &[Report]) -> String {
    serde_json::to_string(reports).expect("report serialization")
}

fn sign_for(size: usize, base_len: usize) -> BigInt {
    if (size + base_len).is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// `Σ (−1)^(|D| − base_len) x_D` over a list of dreams.
fn signed_monomial_sum<'a>(
    dreams: impl IntoIterator<Item = &'a PipeDream>,
    base_len: usize,
) -> Polynomial {
    let mut sum = Polynomial::zero();
    for d in dreams {
        sum = sum.add(&Polynomial::from_term(d.monomial(), sign_for(d.size(), base_len)));
    }
    sum
}

fn all_distinct(dreams: &mut Vec<PipeDream>) -> bool {
    let before = dreams.len();
    dreams.sort();
    dreams.dedup();
    dreams.len() == before
}

struct Checker<'a> {
    n: u32,
    atlas: &'a Atlas,
}

type Verdict = Result<(), String>;

impl Checker<'_> {
    fn run(&self, theorem: TheoremId, w: &Permutation, i: Option<u32>) -> Verdict {
        match theorem {
            TheoremId::T11 => self.schubert_sum(w),
            TheoremId::T12 => self.grothendieck_sum(w),
            TheoremId::T21 => self.reduced_mitosis(w, i.unwrap()),
            TheoremId::T22 => self.chute_closure(w),
            TheoremId::T23 => self.offspring_trichotomy(w, i.unwrap()),
            TheoremId::T31 => self.tau_involution(w, i.unwrap()),
            TheoremId::T41 => self.primed_mitosis(w, i.unwrap()),
            TheoremId::TMin => self.lowest_degree(w),
        }
    }

    fn schubert_sum(&self, w: &Permutation) -> Verdict {
        // every reduced dream has exactly l(w) crosses, so the signs are all +1
        let sum = signed_monomial_sum(&self.atlas.reduced_dreams(w), w.length());
        let poly = schubert(w, self.n).map_err(|e| e.to_string())?;
        if sum != poly {
            return Err(format!("enumeration gives {sum}, induction gives {poly}"));
        }
        if poly.terms().any(|(_, c)| c <= &BigInt::from(0)) {
            return Err(format!("non-positive coefficient in {poly}"));
        }
        Ok(())
    }

    fn grothendieck_sum(&self, w: &Permutation) -> Verdict {
        let sum = signed_monomial_sum(&self.atlas.dreams(w), w.length());
        let poly = grothendieck(w, self.n).map_err(|e| e.to_string())?;
        if sum != poly {
            return Err(format!("enumeration gives {sum}, induction gives {poly}"));
        }
        if poly.min_total_degree() != Some(w.length()) {
            return Err(format!("minimal degree of {poly} is not l(w) = {}", w.length()));
        }
        Ok(())
    }

    fn reduced_mitosis(&self, w: &Permutation, i: u32) -> Verdict {
        let mut images = Vec::new();
        for d in self.atlas.reduced_dreams(w) {
            images.extend(mitosis(&d, i));
        }
        if !all_distinct(&mut images) {
            return Err("mitosis images of reduced dreams are not disjoint".into());
        }
        let expected = self.atlas.reduced_dreams(&w.left_multiply(i));
        if images != expected {
            return Err(format!(
                "mitosis images differ from RP(s_i·w): got {} dreams, expected {}",
                images.len(),
                expected.len()
            ));
        }
        Ok(())
    }

    fn chute_closure(&self, w: &Permutation) -> Verdict {
        for d in self.atlas.dreams(w) {
            for kind in [ChuteKind::One, ChuteKind::Two, ChuteKind::Three] {
                for dir in [ChuteDirection::Forward, ChuteDirection::Inverse] {
                    for rect in d.find_chutable(kind, dir) {
                        let moved = d.chute(&rect).map_err(|e| e.to_string())?;
                        if moved.demazure() != *w {
                            return Err(format!(
                                "chute {rect:?} leaves P({w}): {d} -> {moved}"
                            ));
                        }
                    }
                }
            }
            // a kind-3 move equals kind-2 followed by the inverse kind-1 on
            // the same rectangle
            for rect in d.find_chutable(ChuteKind::Two, ChuteDirection::Forward) {
                let via_two = d.chute(&rect).map_err(|e| e.to_string())?;
                let back = ChuteRect {
                    kind: ChuteKind::One,
                    direction: ChuteDirection::Inverse,
                    ..rect
                };
                let composite = via_two.chute(&back).map_err(|e| {
                    format!("inverse kind-1 not applicable after kind-2 on {rect:?}: {e}")
                })?;
                let direct = d
                    .chute(&ChuteRect {
                        kind: ChuteKind::Three,
                        ..rect
                    })
                    .map_err(|e| e.to_string())?;
                if composite != direct {
                    return Err(format!(
                        "kind-3 differs from kind-2 then inverse kind-1 on {rect:?} of {d}"
                    ));
                }
            }
        }
        Ok(())
    }

    fn offspring_trichotomy(&self, w: &Permutation, i: u32) -> Verdict {
        let ws = w.left_multiply(i);
        for d in self.atlas.dreams(w) {
            let children = mitosis(&d, i);
            let mut products: Vec<Permutation> = children.iter().map(|c| c.demazure()).collect();
            products.dedup();
            match products.as_slice() {
                [] => {}
                [p] if *p == *w || *p == ws => {}
                _ => {
                    return Err(format!(
                        "offspring of {d} split across products {products:?}"
                    ));
                }
            }
        }
        Ok(())
    }

    fn tau_involution(&self, w: &Permutation, i: u32) -> Verdict {
        for d in self.atlas.dreams(w) {
            let t = tau(&d, i);
            if t.demazure() != *w {
                return Err(format!("tau leaves P({w}): {d} -> {t}"));
            }
            if tau(&t, i) != d {
                return Err(format!("tau is not an involution at {d}"));
            }
            let start = start_col(&d, i);
            if start_col(&t, i) != start {
                return Err(format!("tau moved start_{i} of {d}"));
            }
            let frozen = |x: &PipeDream| {
                x.crosses()
                    .filter(|&(r, c)| (r != i && r != i + 1) || c < start)
                    .collect::<Vec<_>>()
            };
            if frozen(&t) != frozen(&d) {
                return Err(format!(
                    "tau touched rows other than {i},{} or columns before start",
                    i + 1
                ));
            }
            let count = |x: &PipeDream, r: u32| x.row_columns(r).filter(|&c| c >= start).count();
            if count(&t, i) != count(&d, i + 1) || count(&t, i + 1) != count(&d, i) {
                return Err(format!("tau did not swap the row counts of {d}"));
            }
            if w.is_left_descent(i) {
                let before = classify(&d, i, w).map_err(|e| e.to_string())?;
                let after = classify(&t, i, w).map_err(|e| e.to_string())?;
                if before != after {
                    return Err(format!(
                        "tau moved {d} from class {before} to {after}"
                    ));
                }
            }
        }
        Ok(())
    }

    fn primed_mitosis(&self, w: &Permutation, i: u32) -> Verdict {
        let ws = w.left_multiply(i);
        let mut transfer = Vec::new();
        let mut internal = Vec::new();
        let mut barren = Vec::new();
        for d in self.atlas.dreams(w) {
            match classify(&d, i, w).map_err(|e| e.to_string())? {
                DreamClass::Transfer => transfer.push(d),
                DreamClass::Internal => internal.push(d),
                DreamClass::Barren => barren.push(d),
            }
        }

        let mut transfer_images = Vec::new();
        for d in &transfer {
            transfer_images.extend(mitosis_prime(d, i));
        }
        if !all_distinct(&mut transfer_images) {
            return Err("primed images of transfer dreams are not disjoint".into());
        }
        if transfer_images != self.atlas.dreams(&ws) {
            return Err(format!(
                "primed images of the transfer class differ from P({ws})"
            ));
        }

        let mut internal_images = Vec::new();
        for d in &internal {
            internal_images.extend(mitosis_prime(d, i));
        }
        if !all_distinct(&mut internal_images) {
            return Err("primed images of internal dreams are not disjoint".into());
        }
        let mut barren_sorted = barren.clone();
        barren_sorted.sort();
        if internal_images != barren_sorted {
            return Err("primed images of the internal class differ from the barren class".into());
        }

        // per-dream weight identity
        for d in transfer.iter().chain(&internal) {
            let js = candidate_columns(d, i);
            let chain = mitosis_prime(d, i);
            let lhs = signed_monomial_sum(&chain, ws.length());
            let stripped = js
                .iter()
                .fold(d.clone(), |acc, &j| acc.without_cell(i, j));
            let rhs = Polynomial::var(i)
                .pow(js.len() as u32)
                .isobaric_divided_difference(i)
                .multiply(&Polynomial::from_term(
                    stripped.monomial(),
                    sign_for(d.size(), w.length()),
                ));
            if lhs != rhs {
                return Err(format!(
                    "weight identity fails at {d}: chain sums to {lhs}, expected {rhs}"
                ));
            }
        }

        // the signed barren sum is fixed by the isobaric operator
        let barren_sum = signed_monomial_sum(&barren, w.length());
        if barren_sum.isobaric_divided_difference(i) != barren_sum {
            return Err(format!("barren sum {barren_sum} is not fixed by pi_{i}"));
        }

        // all three contributions assemble the next Grothendieck polynomial,
        // which is also the isobaric image of the current one
        let total = signed_monomial_sum(&transfer_images, ws.length())
            .add(&signed_monomial_sum(&internal_images, ws.length()))
            .add(&barren_sum);
        let expected = grothendieck(&ws, self.n).map_err(|e| e.to_string())?;
        if total != expected {
            return Err(format!(
                "assembled sum {total} differs from the Grothendieck polynomial {expected}"
            ));
        }
        let via_operator = grothendieck(w, self.n)
            .map_err(|e| e.to_string())?
            .isobaric_divided_difference(i);
        if total != via_operator {
            return Err(format!(
                "assembled sum {total} differs from the isobaric image {via_operator}"
            ));
        }

        // the constructive preimage is total on the barren class and agrees
        // with exhaustive search
        for d in &barren {
            let built = mitosis_preimage(d, i, w).map_err(|e| e.to_string())?;
            let found: Vec<&PipeDream> = internal
                .iter()
                .filter(|b| mitosis_prime(b, i).contains(d))
                .collect();
            if found.len() != 1 || *found[0] != built {
                return Err(format!(
                    "preimage of {d} disagrees with search: built {built}, search found {}",
                    found.len()
                ));
            }
        }
        Ok(())
    }

    fn lowest_degree(&self, w: &Permutation) -> Verdict {
        let g = grothendieck(w, self.n).map_err(|e| e.to_string())?;
        let s = schubert(w, self.n).map_err(|e| e.to_string())?;
        let low = g.lowest_degree_part().map_err(|e| e.to_string())?;
        if low != s {
            return Err(format!(
                "lowest-degree part of {g} is {low}, Schubert polynomial is {s}"
            ));
        }
        Ok(())
    }
}

fn indices_for(theorem: TheoremId, w: &Permutation, n: u32) -> Vec<Option<u32>> {
    match theorem.index_mode() {
        IndexMode::None => vec![None],
        IndexMode::Descents => (1..n).filter(|&i| w.is_left_descent(i)).map(Some).collect(),
        IndexMode::AllBelowN => (1..n).map(Some).collect(),
    }
}

/// Checks one statement at fixed parameters against the enumeration oracle.
///
/// Descent-indexed theorems require `i` to be a left descent of `w`; the
/// involution check accepts any `i < n`.
pub fn verify_identity(
    theorem: TheoremId,
    w: &Permutation,
    i: Option<u32>,
    n: u32,
) -> Result<Report, Error> {
    if !w.fits_in(n) {
        return Err(Error::OutsideSymmetricGroup {
            w: w.to_string(),
            n,
        });
    }
    match theorem.index_mode() {
        IndexMode::None => {}
        IndexMode::Descents => {
            let i = i.ok_or(Error::NotADescent {
                w: w.to_string(),
                i: 0,
            })?;
            if !w.is_left_descent(i) {
                return Err(Error::NotADescent {
                    w: w.to_string(),
                    i,
                });
            }
        }
        IndexMode::AllBelowN => {
            let i = i.ok_or(Error::NotADescent {
                w: w.to_string(),
                i: 0,
            })?;
            if i == 0 || i >= n {
                return Err(Error::NotADescent {
                    w: w.to_string(),
                    i,
                });
            }
        }
    }
    let atlas = Atlas::build(n, dreams::ENUMERATION_CEILING)?;
    let checker = Checker { n, atlas: &atlas };
    let started = Instant::now();
    let verdict = checker.run(theorem, w, i);
    Ok(Report {
        theorem,
        w: w.clone(),
        i,
        n,
        pass: verdict.is_ok(),
        counterexample: verdict.err(),
        elapsed: started.elapsed(),
    })
}

/// Runs the selected theorems over all of `S_n`, every relevant index,
/// sharing one enumeration atlas. Reports come back in parameter order
/// regardless of the parallel schedule.
pub fn run_suite(n: u32, theorems: &[TheoremId], ceiling: u32) -> Result<Vec<Report>, Error> {
    if n > ceiling {
        return Err(Error::CeilingExceeded { n, ceiling });
    }
    let atlas = Atlas::build(n, ceiling.max(dreams::ENUMERATION_CEILING))?;
    let permutations = Permutation::all(n);
    let mut jobs = Vec::new();
    for &theorem in TheoremId::ALL.iter().filter(|t| theorems.contains(t)) {
        for w in &permutations {
            for i in indices_for(theorem, w, n) {
                jobs.push((theorem, w.clone(), i));
            }
        }
    }
    let reports: Vec<Report> = jobs
        .into_par_iter()
        .map(|(theorem, w, i)| {
            let checker = Checker { n, atlas: &atlas };
            let started = Instant::now();
            let verdict = checker.run(theorem, &w, i);
            Report {
                theorem,
                w,
                i,
                n,
                pass: verdict.is_ok(),
                counterexample: verdict.err(),
                elapsed: started.elapsed(),
            }
        })
        .collect();
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(values: &[u32]) -> Permutation {
        Permutation::from_one_line(values.to_vec()).unwrap()
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(TheoremId::parse(t.id()), Some(t));
        }
        assert_eq!(TheoremId::parse("T41"), Some(TheoremId::T41));
        assert_eq!(TheoremId::parse("nope"), None);
    }

    #[test]
    fn single_identity_checks() {
        let r = verify_identity(TheoremId::T12, &perm(&[1, 3, 2]), None, 3).unwrap();
        assert!(r.pass, "{:?}", r.counterexample);
        let r = verify_identity(TheoremId::T41, &perm(&[1, 3, 2]), Some(2), 3).unwrap();
        assert!(r.pass, "{:?}", r.counterexample);
        let r = verify_identity(TheoremId::T11, &Permutation::order_reversing(4), None, 4).unwrap();
        assert!(r.pass, "{:?}", r.counterexample);
        assert!(verify_identity(TheoremId::T41, &perm(&[1, 3, 2]), Some(1), 3).is_err());
        assert!(verify_identity(TheoremId::T41, &perm(&[1, 3, 2]), None, 3).is_err());
    }

    #[test]
    fn suite_passes_at_small_rank() {
        for n in [2, 3] {
            let reports = run_suite(n, &TheoremId::ALL, DEFAULT_CEILING).unwrap();
            assert!(!reports.is_empty());
            for r in &reports {
                assert!(r.pass, "{}", r.human_line(false));
            }
        }
    }

    #[test]
    fn suite_respects_the_ceiling() {
        assert!(matches!(
            run_suite(7, &TheoremId::ALL, DEFAULT_CEILING),
            Err(Error::CeilingExceeded { .. })
        ));
    }

    #[test]
    fn suite_output_is_deterministic() {
        let a = run_suite(3, &[TheoremId::T12, TheoremId::T41], DEFAULT_CEILING).unwrap();
        let b = run_suite(3, &[TheoremId::T12, TheoremId::T41], DEFAULT_CEILING).unwrap();
        assert_eq!(reports_to_json(&a), reports_to_json(&b));
        let lines_a: Vec<String> = a.iter().map(|r| r.human_line(false)).collect();
        let lines_b: Vec<String> = b.iter().map(|r| r.human_line(false)).collect();
        assert_eq!(lines_a, lines_b);
    }

    #[test]
    fn report_serialization_shape() {
        let reports = run_suite(2, &[TheoremId::T11], DEFAULT_CEILING).unwrap();
        let json = reports_to_json(&reports);
        assert_eq!(
            json,
            r#"[{"theorem":"t11","w":"1","i":null,"n":2,"pass":true,"counterexample":null},{"theorem":"t11","w":"2,1","i":null,"n":2,"pass":true,"counterexample":null}]"#
        );
        assert_eq!(reports[0].human_line(false), "PASS t11 n=2 w=1");
    }

    #[test]
    fn failing_reports_carry_payloads() {
        let r = Report {
            theorem: TheoremId::T12,
            w: perm(&[1, 3, 2]),
            i: None,
            n: 3,
            pass: false,
            counterexample: Some("enumeration gives 0, induction gives x1".into()),
            elapsed: Duration::from_millis(1),
        };
        let line = r.human_line(false);
        assert!(line.starts_with("FAIL t12 n=3 w=1,3,2"));
        assert!(line.contains("counterexample"));
        assert!(reports_to_json(&[r]).contains("enumeration gives 0"));
    }
}
