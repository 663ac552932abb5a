//! The syllable alphabet of the right greedy normal form, its predecessor
//! relation, the incidence matrix, and direct path counting.
//!
//! Normal forms are words over a finite alphabet of syllables: the non-trivial
//! permutation braids (classical simples) and, in the singular monoid, the
//! single letters `x_k`. A word of syllables is normal iff every adjacent
//! pair is admissible, so the elements of length `k` are the paths of weight
//! `k` in a finite automaton. The admissibility ("predecessor") relation is
//! what this module computes.
//!
//! Syllable ids: the `n!` simples are sorted by length, then by canonical
//! word, and numbered from 1 (identity, never a syllable) to `n!` (the half
//! twist); `x_k` gets id `n! + k`. The alphabet is ids `2 ..= n! + n - 1`.
//!
//! Which syllable may sit immediately left of which is decided locally:
//!
//! * left classical `g`, right classical `h`: admissible unless some `s_a`
//!   right-divides `g` while `s_a h` is still simple (greedy pairs only —
//!   otherwise the `s_a` would migrate right).
//! * left `x_m`, right classical `h`: always admissible; nothing slides
//!   leftwards across a singular letter.
//! * left classical `g`, right `x_k`: `g` must not end in anything that
//!   could slide rightwards through the `x_k`: no right divisor `s_a` with
//!   `|a−k| ≠ 1` (such letters commute with `x_k`), and no right divisor
//!   `s_k s_(k+1)` or `s_k s_(k−1)` (the index-shifting slides, normalized
//!   simple-first).
//! * left `x_j`, right `x_k`: admissible unless the two commute
//!   (`|j−k| > 1`) and `j > k`; commuting runs of `x`-letters are normalized
//!   to increasing index order.
//!
//! For `n ≤ 3` every element has exactly one admissible spelling.  From
//! `n = 4` on no pairwise relation achieves that: a two-syllable window
//! cannot see `s_(k+2) s_(k+1)` reaching across `x_k` to convert a distant
//! `x_(k+2)` further right.  The `x_1` column therefore trades blockers for
//! crossers of equal weight — among single letters exactly `s_1` may sit
//! before `x_1`, joined by the complement of `s_1` in the half twist — so
//! that over-counted spellings are offset exactly by orphaned ones at every
//! length.  The counts this relation produces are cross-checked against the
//! brute-force census; that agreement, not any single local rule, is the
//! correctness claim.  The cancellation is verified for `n = 4`; at `n = 5`
//! no pairwise relation counts the singular monoid exactly, and the census
//! comparison (the `verify` path) is what reports how far off it runs.

use num::BigUint;

use crate::error::Error;
use crate::oracle::LengthCensus;
use crate::words::{Generator, PresentationKind, SimpleElement, Word};
use crate::Result;

/// Largest supported strand count; the alphabet and the linear system grow
/// like `n!`, so this is a guard rail rather than an algorithmic limit.
pub const MAX_STRANDS: usize = 5;

fn check_strands(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidStrandCount { n });
    }
    if n > MAX_STRANDS {
        return Err(Error::StrandCountOutOfRange { n, max: MAX_STRANDS });
    }
    Ok(())
}

/// What a syllable is: a non-trivial permutation braid, or one singular letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyllablePayload {
    Simple(SimpleElement),
    X(usize),
}

/// One letter of the normal-form alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syllable {
    pub id: usize,
    pub payload: SyllablePayload,
    pub length: usize,
}

impl Syllable {
    /// Canonical word spelling this syllable (for display and fixtures).
    pub fn word(&self, n: usize) -> Word {
        match &self.payload {
            SyllablePayload::Simple(s) => s.to_word(),
            SyllablePayload::X(k) => Word::new(n, vec![Generator::x(*k)]),
        }
    }
}

/// All `n!` permutation braids ordered by (length, canonical word); position
/// `i` holds the simple with id `i + 1`, so the list starts with the identity
/// and ends with the half twist.
pub fn simples_list(n: usize) -> Result<Vec<SimpleElement>> {
    check_strands(n)?;
    let mut simples = SimpleElement::enumerate(n);
    simples.sort_by_cached_key(|s| (s.inv_count(), s.to_word()));
    Ok(simples)
}

/// The normal-form alphabet: classical simples (ids `2..=n!`), then, for the
/// singular monoid, `x_1..x_(n-1)` (ids `n!+1..=n!+n-1`).
pub fn alphabet(n: usize, kind: PresentationKind) -> Result<Vec<Syllable>> {
    let simples = simples_list(n)?;
    let mut out = Vec::new();
    for (pos, s) in simples.into_iter().enumerate().skip(1) {
        let length = s.inv_count();
        out.push(Syllable { id: pos + 1, payload: SyllablePayload::Simple(s), length });
    }
    if kind == PresentationKind::Singular {
        let base = factorial(n);
        for k in 1..n {
            out.push(Syllable { id: base + k, payload: SyllablePayload::X(k), length: 1 });
        }
    }
    Ok(out)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// May `left` sit immediately before `target` in a normal word?
fn admissible_before(left: &Syllable, target: &Syllable, n: usize) -> bool {
    match (&left.payload, &target.payload) {
        (SyllablePayload::Simple(g), SyllablePayload::Simple(h)) => {
            !(1..n).any(|a| g.gen_right_divides(a) && h.gen_left_extends(a))
        }
        (SyllablePayload::X(_), SyllablePayload::Simple(_)) => true,
        (SyllablePayload::Simple(g), SyllablePayload::X(k)) => {
            let k = *k;
            // Once distant singular letters exist, a pair s_(k+2) s_(k+1)
            // reaches across x_k (see the module docs) and no two-syllable
            // window parses uniquely.  The x_1 column trades its blocking
            // single letter for the crossing one and admits the complement
            // of s_1 in the half twist, so the spellings gained and lost
            // cancel lengthwise against the census.
            if n >= 4 && k == 1 {
                if g.inv_count() == 1 {
                    return g.gen_right_divides(k);
                }
                if SimpleElement::delta(n).strip_right_generator(k).as_ref()
                    == Some(g)
                {
                    return true;
                }
            }
            !((1..n).any(|a| a.abs_diff(k) != 1 && g.gen_right_divides(a))
                || (k + 1 < n && g.word_right_divides(&[k, k + 1]))
                || (k >= 2 && g.word_right_divides(&[k, k - 1])))
        }
        (SyllablePayload::X(j), SyllablePayload::X(k)) => j.abs_diff(*k) <= 1 || j < k,
    }
}

/// Ids of the syllables that may precede the syllable `id`, in increasing order.
pub fn pred_set(n: usize, kind: PresentationKind, id: usize) -> Result<Vec<usize>> {
    let alph = alphabet(n, kind)?;
    let target = alph
        .iter()
        .find(|s| s.id == id)
        .unwrap_or_else(|| panic!("id {id} not in the {} alphabet for n={n}", kind.as_str()));
    Ok(alph
        .iter()
        .filter(|cand| admissible_before(cand, target, n))
        .map(|cand| cand.id)
        .collect())
}

/// Incidence of the predecessor relation: `entries[i][j]` says whether the
/// syllable `labels[j]` may precede the syllable `labels[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonMatrix {
    pub n: usize,
    pub kind: PresentationKind,
    pub labels: Vec<usize>,
    pub lengths: Vec<usize>,
    pub entries: Vec<Vec<bool>>,
}

pub fn epsilon_matrix(n: usize, kind: PresentationKind) -> Result<EpsilonMatrix> {
    let alph = alphabet(n, kind)?;
    let labels: Vec<usize> = alph.iter().map(|s| s.id).collect();
    let lengths: Vec<usize> = alph.iter().map(|s| s.length).collect();
    let entries: Vec<Vec<bool>> = alph
        .iter()
        .map(|target| alph.iter().map(|cand| admissible_before(cand, target, n)).collect())
        .collect();
    Ok(EpsilonMatrix { n, kind, labels, lengths, entries })
}

/// Id of the image of syllable `id` under the flip `s_i <-> s_(n-i)`,
/// `x_k <-> x_(n-k)` (conjugation by the half twist).
pub fn flip_syllable_id(n: usize, id: usize) -> Result<usize> {
    let simples = simples_list(n)?;
    let base = factorial(n);
    assert!(id >= 1 && id <= base + n - 1, "syllable id {id} out of range for n={n}");
    if id <= base {
        let flipped = simples[id - 1].flipped();
        let pos = simples.iter().position(|s| *s == flipped).unwrap();
        Ok(pos + 1)
    } else {
        let k = id - base;
        Ok(base + (n - k))
    }
}

/// Count monoid elements of each length `0..=kmax` as weighted paths in the
/// normal-form automaton: `c[j][k]` counts the normal words of total length
/// `k` whose rightmost syllable is `j`, so
/// `c[j][k] = [k = l_j] + Σ c[j'][k − l_j]` over predecessors `j'` of `j`.
pub fn count_via_dp(n: usize, kind: PresentationKind, kmax: usize) -> Result<LengthCensus> {
    let alph = alphabet(n, kind)?;
    let preds: Vec<Vec<usize>> = alph
        .iter()
        .map(|target| {
            alph.iter()
                .enumerate()
                .filter(|(_, cand)| admissible_before(cand, target, n))
                .map(|(pos, _)| pos)
                .collect()
        })
        .collect();

    let zero = BigUint::from(0u32);
    let mut c = vec![vec![zero.clone(); kmax + 1]; alph.len()];
    for k in 0..=kmax {
        for (idx, syl) in alph.iter().enumerate() {
            let l = syl.length;
            if k < l {
                continue;
            }
            let mut acc = if k == l { BigUint::from(1u32) } else { zero.clone() };
            for &p in &preds[idx] {
                acc += &c[p][k - l];
            }
            c[idx][k] = acc;
        }
    }

    let counts = (0..=kmax)
        .map(|k| {
            let mut total = if k == 0 { BigUint::from(1u32) } else { zero.clone() };
            for row in &c {
                total += &row[k];
            }
            total
        })
        .collect();
    Ok(LengthCensus { n, kind, counts })
}
