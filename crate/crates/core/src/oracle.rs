//! Brute-force census of the monoid by relation closure.
//!
//! Every defining relation preserves length, so the elements of length `k`
//! are exactly the equivalence classes of the `m^k` positive words of length
//! `k` under one-step rewriting. This module enumerates those classes
//! directly: scan the words in lexicographic order and, whenever an unseen
//! word appears, flood-fill its class. The scan order makes the first word of
//! each class its lexicographically least representative.
//!
//! This is exponential in `k` and exists as an independent check on the
//! counts produced elsewhere; the `budget` argument bounds the number of
//! words a call is allowed to touch.

use std::collections::VecDeque;

use num::BigUint;

use crate::error::Error;
use crate::words::{Generator, Presentation, PresentationKind, Word};
use crate::{build_presentation, rewrite_neighbors, Result};

/// Cap on `m^k`, the number of words a single scan may visit.
pub const DEFAULT_WORD_BUDGET: u64 = 100_000_000;

/// Element counts of one monoid up to a length bound: `counts[k]` is the
/// number of equivalence classes of words of length `k` (so `counts[0] = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthCensus {
    pub n: usize,
    pub kind: PresentationKind,
    pub counts: Vec<BigUint>,
}

/// Count the monoid elements of each length `0..=kmax` by relation closure.
///
/// Fails with `WordBudgetExceeded` when the longest length would require
/// visiting more than `budget` words.
pub fn count_by_length(
    n: usize,
    kind: PresentationKind,
    kmax: usize,
    budget: u64,
) -> Result<LengthCensus> {
    let p = build_presentation(n, kind)?;
    check_budget(p.alphabet_size(), kmax, budget)?;
    let mut counts = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let reps = canonical_reps(&p, k);
        counts.push(BigUint::from(reps.len()));
    }
    Ok(LengthCensus { n, kind, counts })
}

/// The lexicographically least representative of every class of length
/// exactly `k`, in increasing order.
pub fn enumerate_classes(
    n: usize,
    kind: PresentationKind,
    k: usize,
    budget: u64,
) -> Result<Vec<Word>> {
    let p = build_presentation(n, kind)?;
    check_budget(p.alphabet_size(), k, budget)?;
    Ok(canonical_reps(&p, k))
}

/// Do two words represent the same monoid element?  Breadth-first closure of
/// one class; relations preserve length, so unequal lengths settle it at once.
pub fn are_equivalent(u: &Word, v: &Word, p: &Presentation) -> bool {
    if u.len() != v.len() {
        return false;
    }
    if u == v {
        return true;
    }
    let m = p.alphabet_size() as u64;
    let mut seen = vec![false; pow_checked(m, u.len()).expect("class scan too large") as usize];
    let mut queue = VecDeque::new();
    seen[word_to_index(u, p) as usize] = true;
    queue.push_back(u.clone());
    let target = v;
    while let Some(w) = queue.pop_front() {
        for next in rewrite_neighbors(&w, p) {
            if next == *target {
                return true;
            }
            let idx = word_to_index(&next, p) as usize;
            if !seen[idx] {
                seen[idx] = true;
                queue.push_back(next);
            }
        }
    }
    false
}

fn check_budget(m: usize, kmax: usize, budget: u64) -> Result<()> {
    let required = pow_u128(m as u128, kmax);
    if required > budget as u128 {
        return Err(Error::WordBudgetExceeded { required, budget });
    }
    Ok(())
}

fn pow_u128(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

fn pow_checked(base: u64, exp: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

// Letters correspond to base-m digits in the canonical generator order
// s1 < ... < s(n-1) < x1 < ... < x(n-1); a word of length k is the big-endian
// digit string of its index, so numeric order on indices is lexicographic
// order on words.
fn digit_of(g: &Generator, n: usize) -> u64 {
    match g.kind {
        crate::words::GenKind::Sigma => (g.index - 1) as u64,
        crate::words::GenKind::X => (n - 1 + g.index - 1) as u64,
    }
}

fn generator_of(d: u64, n: usize) -> Generator {
    let d = d as usize;
    if d < n - 1 {
        Generator::sigma(d + 1)
    } else {
        Generator::x(d - (n - 1) + 1)
    }
}

fn word_to_index(w: &Word, p: &Presentation) -> u64 {
    let m = p.alphabet_size() as u64;
    let mut idx = 0u64;
    for g in w.letters() {
        idx = idx * m + digit_of(g, p.n());
    }
    idx
}

fn index_to_word(mut idx: u64, k: usize, p: &Presentation) -> Word {
    let m = p.alphabet_size() as u64;
    let mut digits = vec![0u64; k];
    for slot in digits.iter_mut().rev() {
        *slot = idx % m;
        idx /= m;
    }
    let letters = digits.into_iter().map(|d| generator_of(d, p.n())).collect();
    Word::new(p.n(), letters)
}

fn canonical_reps(p: &Presentation, k: usize) -> Vec<Word> {
    let total = pow_checked(p.alphabet_size() as u64, k).expect("budget check missed overflow");
    let mut seen = vec![false; total as usize];
    let mut reps = Vec::new();
    for idx in 0..total {
        if seen[idx as usize] {
            continue;
        }
        let rep = index_to_word(idx, k, p);
        reps.push(rep.clone());
        // Flood-fill the whole class so later members are skipped.
        seen[idx as usize] = true;
        let mut queue = VecDeque::new();
        queue.push_back(rep);
        while let Some(w) = queue.pop_front() {
            for next in rewrite_neighbors(&w, p) {
                let j = word_to_index(&next, p) as usize;
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts_u64(census: &LengthCensus) -> Vec<u64> {
        census.counts.iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn two_strand_singular_counts_are_linear() {
        // s1 and x1 commute, so length-k elements are s1^a x1^b with a+b=k.
        let census =
            count_by_length(2, PresentationKind::Singular, 8, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(counts_u64(&census), vec![1, 2, 3, 4, 5, 6, 7, 8, 9]);
    }

    #[test]
    fn three_strand_singular_counts() {
        let census =
            count_by_length(3, PresentationKind::Singular, 6, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(counts_u64(&census), vec![1, 4, 14, 45, 142, 444, 1385]);
    }

    #[test]
    fn three_strand_classical_counts() {
        let census =
            count_by_length(3, PresentationKind::Classical, 5, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(counts_u64(&census), vec![1, 2, 4, 7, 12, 20]);
    }

    #[test]
    fn budget_is_enforced() {
        let err = count_by_length(3, PresentationKind::Singular, 20, 1_000).unwrap_err();
        match err {
            Error::WordBudgetExceeded { required, budget } => {
                assert_eq!(budget, 1_000);
                assert_eq!(required, 4u128.pow(20));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn class_representatives_at_length_one_and_two() {
        let reps =
            enumerate_classes(3, PresentationKind::Singular, 1, DEFAULT_WORD_BUDGET).unwrap();
        let shown: Vec<String> = reps.iter().map(Word::to_string).collect();
        assert_eq!(shown, vec!["s1", "s2", "x1", "x2"]);

        let reps =
            enumerate_classes(3, PresentationKind::Singular, 2, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(reps.len(), 14);
        // x1s1 ~ s1x1 collapses into the representative s1x1.
        assert!(reps.iter().any(|w| w.to_string() == "s1x1"));
        assert!(!reps.iter().any(|w| w.to_string() == "x1s1"));
    }

    #[test]
    fn equivalence_spot_checks() {
        let p = build_presentation(3, PresentationKind::Singular).unwrap();
        let w = |s: &[(&str, usize)]| {
            Word::new(
                3,
                s.iter()
                    .map(|&(kind, i)| {
                        if kind == "s" {
                            Generator::sigma(i)
                        } else {
                            Generator::x(i)
                        }
                    })
                    .collect(),
            )
        };
        let braid_lhs = w(&[("s", 1), ("s", 2), ("s", 1)]);
        let braid_rhs = w(&[("s", 2), ("s", 1), ("s", 2)]);
        assert!(are_equivalent(&braid_lhs, &braid_rhs, &p));

        let slide_lhs = w(&[("s", 1), ("s", 2), ("x", 1)]);
        let slide_rhs = w(&[("x", 2), ("s", 1), ("s", 2)]);
        assert!(are_equivalent(&slide_lhs, &slide_rhs, &p));

        // Adjacent x and s do not commute.
        let a = w(&[("x", 1), ("s", 2)]);
        let b = w(&[("s", 2), ("x", 1)]);
        assert!(!are_equivalent(&a, &b, &p));

        assert!(!are_equivalent(&braid_lhs, &w(&[("s", 1)]), &p));
    }
}
