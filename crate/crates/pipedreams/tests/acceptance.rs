//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Everything here is exact — set identities compare canonical
//! serializations, polynomial identities compare term maps — and the sweeps
//! run the brute-force enumeration oracle against the operator inductions.
//! Run with `--nocapture` to see the per-criterion lines; the `S_5` variant
//! of the primed-mitosis sweep is `#[ignore]`d and opts in via `-- --ignored`.

use std::time::{Duration, Instant};

use pipedreams::mitosis::{candidate_columns, mitosis, start_col};
use pipedreams::perm::Permutation;
use pipedreams::polyring::{grothendieck, Polynomial};
use pipedreams::verify::{run_suite, TheoremId};
use pipedreams::PipeDream;

fn dream(n: u32, cells: &[(u32, u32)]) -> PipeDream {
    PipeDream::new(n, cells.iter().copied()).unwrap()
}

fn perm(values: &[u32]) -> Permutation {
    Permutation::from_one_line(values.to_vec()).unwrap()
}

/// Runs one theorem over all of `S_n`, requiring every report to pass.
fn sweep(n: u32, theorem: TheoremId) -> (usize, Duration) {
    let started = Instant::now();
    let reports = run_suite(n, &[theorem], 6).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert!(r.pass, "{}", r.human_line(false));
    }
    (reports.len(), started.elapsed())
}

#[test]
fn criterion_01_worked_examples() {
    let started = Instant::now();

    // the six-cross strand diagram: reduced, with the expected product
    let strands = dream(6, &[(1, 1), (1, 2), (1, 5), (2, 2), (3, 2), (5, 1)]);
    assert_eq!(strands.demazure(), perm(&[2, 6, 1, 3, 5, 4]));
    assert!(strands.is_reduced());

    // the eight-grid mitosis showcase at row 3
    let showcase = dream(
        8,
        &[
            (1, 2),
            (1, 4),
            (1, 5),
            (2, 2),
            (2, 6),
            (3, 1),
            (3, 2),
            (3, 3),
            (3, 4),
            (4, 3),
            (5, 1),
            (6, 1),
            (6, 2),
            (7, 1),
        ],
    );
    assert_eq!(start_col(&showcase, 3), 5);
    assert_eq!(candidate_columns(&showcase, 3), vec![1, 2, 4]);
    let offspring_rows = |row3: &[u32], row4: &[u32]| {
        let mut cells: Vec<(u32, u32)> = vec![
            (1, 2),
            (1, 4),
            (1, 5),
            (2, 2),
            (2, 6),
            (5, 1),
            (6, 1),
            (6, 2),
            (7, 1),
        ];
        cells.extend(row3.iter().map(|&c| (3, c)));
        cells.extend(row4.iter().map(|&c| (4, c)));
        dream(8, &cells)
    };
    assert_eq!(
        mitosis(&showcase, 3),
        vec![
            offspring_rows(&[2, 3, 4], &[3]),
            offspring_rows(&[3, 4], &[1, 3]),
            offspring_rows(&[3], &[1, 2, 3]),
        ]
    );

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("PASS criterion 01: worked examples are exact ({elapsed:?})");
}

#[test]
fn criterion_02_reduced_sums_match_schubert() {
    for n in 2..=4 {
        sweep(n, TheoremId::T11);
    }
    let (count, elapsed) = sweep(5, TheoremId::T11);
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!(
        "PASS criterion 02: reduced dream sums equal Schubert polynomials, S_2..S_5 \
         ({count} checks at n=5 in {elapsed:?})"
    );
}

#[test]
fn criterion_03_signed_sums_match_grothendieck() {
    // the anchor value
    let g = grothendieck(&perm(&[1, 3, 2]), 3).unwrap();
    let x = Polynomial::var;
    assert_eq!(g, &(&x(1) + &x(2)) - &(&x(1) * &x(2)));
    assert_eq!(g.to_string(), "x1 + x2 \u{2212} x1*x2");

    for n in 2..=4 {
        sweep(n, TheoremId::T12);
    }
    let (count, elapsed) = sweep(5, TheoremId::T12);
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "PASS criterion 03: signed dream sums equal Grothendieck polynomials, S_2..S_5 \
         ({count} checks at n=5 in {elapsed:?})"
    );
}

#[test]
fn criterion_04_chute_closure() {
    let (count, _) = sweep(4, TheoremId::T22);
    println!(
        "PASS criterion 04: all applicable chute moves stay inside P(w) over S_4, \
         and kind 3 equals kind 2 followed by inverse kind 1 ({count} permutations)"
    );
}

#[test]
fn criterion_05_mitosis_bijection_on_reduced_dreams() {
    let (count, _) = sweep(5, TheoremId::T21);
    println!(
        "PASS criterion 05: mitosis maps RP(w) disjointly onto RP(s_i w) over S_5 \
         ({count} descent pairs)"
    );
}

#[test]
fn criterion_06_offspring_trichotomy() {
    let (count, _) = sweep(4, TheoremId::T23);
    println!(
        "PASS criterion 06: offspring share one product in {{w, s_i w}} over S_4 \
         ({count} descent pairs)"
    );
}

#[test]
fn criterion_07_involution_properties() {
    let (count4, _) = sweep(4, TheoremId::T31);
    let (count5, _) = sweep(5, TheoremId::T31);
    println!(
        "PASS criterion 07: tau_i is an involution with all stated properties over \
         S_4 ({count4} pairs) and preserves Demazure products over S_5 ({count5} pairs)"
    );
}

#[test]
fn criterion_08_primed_mitosis_partition() {
    let (count, _) = sweep(4, TheoremId::T41);
    println!(
        "PASS criterion 08: primed mitosis tiles P(s_i w) and the barren class over \
         S_4, with the weight identities and total preimages ({count} descent pairs)"
    );
}

#[test]
#[ignore = "larger sweep, opt in with -- --ignored"]
fn criterion_08_primed_mitosis_partition_s5() {
    let (count, _) = sweep(5, TheoremId::T41);
    println!(
        "PASS criterion 08 (S_5 extension): primed mitosis identities over S_5 \
         ({count} descent pairs)"
    );
}

#[test]
fn criterion_09_lowest_degree_part() {
    let (count, _) = sweep(5, TheoremId::TMin);
    println!(
        "PASS criterion 09: the lowest-degree part of every Grothendieck polynomial \
         over S_5 is the Schubert polynomial ({count} permutations)"
    );
}

#[test]
fn criterion_10_operator_algebra_on_random_polynomials() {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut corpus = Vec::new();
    while corpus.len() < 120 {
        let terms = rng.gen_range(1..=6);
        let mut p = Polynomial::zero();
        for _ in 0..terms {
            let exps: Vec<u32> = (0..4).map(|_| rng.gen_range(0..=2)).collect();
            if exps.iter().sum::<u32>() > 6 {
                continue;
            }
            let coeff = *[-9i64, -5, -3, -2, -1, 1, 2, 3, 5, 9]
                .choose(&mut rng)
                .unwrap();
            p = p.add(&Polynomial::from_term(
                pipedreams::Monomial::from_exponents(exps),
                coeff,
            ));
        }
        corpus.push(p);
    }
    assert!(corpus.len() >= 100);

    for f in &corpus {
        for i in 1..=3u32 {
            assert!(f.divided_difference(i).divided_difference(i).is_zero());
            let pi = f.isobaric_divided_difference(i);
            assert_eq!(pi.isobaric_divided_difference(i), pi);
            let symmetric = f.add(&f.swap_variables(i));
            assert!(symmetric.divided_difference(i).is_zero());
            assert_eq!(symmetric.isobaric_divided_difference(i), symmetric);
        }
        for i in 1..=2u32 {
            let d = |g: &Polynomial, k: u32| g.divided_difference(k);
            assert_eq!(
                d(&d(&d(f, i), i + 1), i),
                d(&d(&d(f, i + 1), i), i + 1),
                "divided difference braid"
            );
            let p = |g: &Polynomial, k: u32| g.isobaric_divided_difference(k);
            assert_eq!(
                p(&p(&p(f, i), i + 1), i),
                p(&p(&p(f, i + 1), i), i + 1),
                "isobaric braid"
            );
        }
        assert_eq!(
            f.divided_difference(1).divided_difference(3),
            f.divided_difference(3).divided_difference(1)
        );
        assert_eq!(
            f.isobaric_divided_difference(1).isobaric_divided_difference(3),
            f.isobaric_divided_difference(3).isobaric_divided_difference(1)
        );
    }
    println!(
        "PASS criterion 10: operator algebra holds exactly on {} random polynomials",
        corpus.len()
    );
}
