//! Presentations of positive classical and singular braid monoids, words over
//! their generators, one-step rewriting, and permutation-braid primitives.
//!
//! Generators are `s1..s(n-1)` (classical crossings) and `x1..x(n-1)`
//! (singular crossings), all of length 1. Every defining relation preserves
//! word length, so the congruence classes are graded by length.
//!
//! Permutation convention: a word acts on strand positions left factor first,
//! so the word `sa sb` maps to `perm(sb) ∘ perm(sa)`. All divisibility tests
//! below are stated against this convention and checked against word-level
//! enumeration in the tests.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::Result;

/// Which family a generator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    /// Classical crossing `s_i`.
    Sigma,
    /// Singular crossing `x_i`.
    X,
}

/// A single generator, 1-based index in `[1, n-1]`.
///
/// The derived order is `s1 < s2 < ... < x1 < x2 < ...`, the canonical
/// generator order used everywhere for lexicographic comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub fn sigma(index: usize) -> Self {
        Generator { kind: GenKind::Sigma, index }
    }

    pub fn x(index: usize) -> Self {
        Generator { kind: GenKind::X, index }
    }

    /// Valid for a monoid on `n` strands?
    pub fn valid_for(&self, n: usize) -> bool {
        self.index >= 1 && self.index + 1 <= n
    }

    /// Image under the flip `s_i <-> s_(n-i)`, `x_i <-> x_(n-i)`.
    pub fn flipped(&self, n: usize) -> Self {
        Generator { kind: self.kind, index: n - self.index }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::Sigma => write!(f, "s{}", self.index),
            GenKind::X => write!(f, "x{}", self.index),
        }
    }
}

/// A positive word over the generators of a monoid on `n` strands.
///
/// Each generator has length 1, so `len()` is the monoid length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Generator>,
    n: usize,
}

impl Word {
    /// Panics if a letter is out of range for `n` strands.
    pub fn new(n: usize, letters: Vec<Generator>) -> Self {
        assert!(n >= 2, "need at least 2 strands");
        for g in &letters {
            assert!(g.valid_for(n), "generator {g} invalid for {n} strands");
        }
        Word { letters, n }
    }

    pub fn empty(n: usize) -> Self {
        Word::new(n, Vec::new())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(self.n, other.n);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters, n: self.n }
    }

    /// Letterwise image under `s_i <-> s_(n-i)`, `x_i <-> x_(n-i)`; an involution.
    pub fn flipped(&self) -> Word {
        let letters = self.letters.iter().map(|g| g.flipped(self.n)).collect();
        Word { letters, n: self.n }
    }

    /// The permutation of a word in the `s_i` alone; `None` if any `x` occurs.
    pub fn sigma_permutation(&self) -> Option<SimpleElement> {
        let mut perm: Vec<usize> = (0..self.n).collect();
        for g in &self.letters {
            match g.kind {
                GenKind::Sigma => swap_values(&mut perm, g.index - 1),
                GenKind::X => return None,
            }
        }
        Some(SimpleElement::from_perm(perm))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for g in &self.letters {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Classical keeps only the `ss`-relations; Singular has all five families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresentationKind {
    Classical,
    Singular,
}

impl PresentationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PresentationKind::Classical => "classical",
            PresentationKind::Singular => "singular",
        }
    }
}

/// A finite presentation of the positive braid monoid on `n` strands.
///
/// Relations are unordered pairs of equal-length words; rewriting applies
/// them in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    n: usize,
    kind: PresentationKind,
    relations: Vec<(Word, Word)>,
}

impl Presentation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> PresentationKind {
        self.kind
    }

    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    /// All generators in canonical order `s1 < ... < s(n-1) [< x1 < ... < x(n-1)]`.
    pub fn generators(&self) -> Vec<Generator> {
        let mut gens: Vec<Generator> = (1..self.n).map(Generator::sigma).collect();
        if self.kind == PresentationKind::Singular {
            gens.extend((1..self.n).map(Generator::x));
        }
        gens
    }

    pub fn alphabet_size(&self) -> usize {
        match self.kind {
            PresentationKind::Classical => self.n - 1,
            PresentationKind::Singular => 2 * (self.n - 1),
        }
    }
}

/// All instances of the defining relation families for `n` strands.
///
/// Singular families: `s_i s_j = s_j s_i` and `x_i x_j = x_j x_i` for
/// `|i-j| > 1`; `x_i s_j = s_j x_i` for `|i-j| != 1`; the braid relation
/// `s_i s_(i+1) s_i = s_(i+1) s_i s_(i+1)`; and the sliding relations
/// `s_i s_(i+1) x_i = x_(i+1) s_i s_(i+1)`, `s_(i+1) s_i x_(i+1) = x_i s_(i+1) s_i`.
pub fn build_presentation(n: usize, kind: PresentationKind) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::InvalidStrandCount { n });
    }
    let sigma = |i: usize| Generator::sigma(i);
    let x = |i: usize| Generator::x(i);
    let w = |letters: Vec<Generator>| Word::new(n, letters);
    let mut relations = Vec::new();

    // s_i s_j = s_j s_i, |i-j| > 1
    for i in 1..n {
        for j in i + 2..n {
            relations.push((w(vec![sigma(i), sigma(j)]), w(vec![sigma(j), sigma(i)])));
        }
    }
    // s_i s_(i+1) s_i = s_(i+1) s_i s_(i+1)
    for i in 1..n.saturating_sub(1) {
        relations.push((
            w(vec![sigma(i), sigma(i + 1), sigma(i)]),
            w(vec![sigma(i + 1), sigma(i), sigma(i + 1)]),
        ));
    }

    if kind == PresentationKind::Singular {
        // x_i x_j = x_j x_i, |i-j| > 1
        for i in 1..n {
            for j in i + 2..n {
                relations.push((w(vec![x(i), x(j)]), w(vec![x(j), x(i)])));
            }
        }
        // x_i s_j = s_j x_i, |i-j| != 1
        for i in 1..n {
            for j in 1..n {
                if i.abs_diff(j) != 1 {
                    relations.push((w(vec![x(i), sigma(j)]), w(vec![sigma(j), x(i)])));
                }
            }
        }
        // s_i s_(i+1) x_i = x_(i+1) s_i s_(i+1)
        for i in 1..n.saturating_sub(1) {
            relations.push((
                w(vec![sigma(i), sigma(i + 1), x(i)]),
                w(vec![x(i + 1), sigma(i), sigma(i + 1)]),
            ));
        }
        // s_(i+1) s_i x_(i+1) = x_i s_(i+1) s_i
        for i in 1..n.saturating_sub(1) {
            relations.push((
                w(vec![sigma(i + 1), sigma(i), x(i + 1)]),
                w(vec![x(i), sigma(i + 1), sigma(i)]),
            ));
        }
    }

    Ok(Presentation { n, kind, relations })
}

/// All words reachable from `w` by one application of one relation, in either
/// direction, at any position.
pub fn rewrite_neighbors(w: &Word, p: &Presentation) -> BTreeSet<Word> {
    assert_eq!(w.n(), p.n());
    let mut out = BTreeSet::new();
    for (lhs, rhs) in p.relations() {
        collect_replacements(w, lhs, rhs, &mut out);
        collect_replacements(w, rhs, lhs, &mut out);
    }
    out
}

fn collect_replacements(w: &Word, from: &Word, to: &Word, out: &mut BTreeSet<Word>) {
    let k = from.len();
    if k > w.len() {
        return;
    }
    for start in 0..=w.len() - k {
        if w.letters[start..start + k] == from.letters[..] {
            let mut letters = w.letters.clone();
            letters[start..start + k].copy_from_slice(&to.letters);
            out.insert(Word { letters, n: w.n });
        }
    }
}

/// Number of inverted pairs `i < j` with `perm[i] > perm[j]` (0-based images).
///
/// Equals the positive-word length of the permutation braid.
pub fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

// Left-compose with the transposition of values k0, k0+1 (word `w ·
// s_(k0+1)` under the left-factor-first convention).
fn swap_values(perm: &mut [usize], k0: usize) {
    let p1 = perm.iter().position(|&v| v == k0).unwrap();
    let p2 = perm.iter().position(|&v| v == k0 + 1).unwrap();
    perm.swap(p1, p2);
}

/// A divisor of the half twist, identified with a permutation of the strands.
///
/// Stored as the 0-based one-line image vector together with its cached
/// inversion count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleElement {
    perm: Vec<usize>,
    inv_count: usize,
}

impl SimpleElement {
    /// Panics unless `perm` is a bijection of `{0..n-1}`.
    pub fn from_perm(perm: Vec<usize>) -> Self {
        let n = perm.len();
        assert!(n >= 1);
        let mut seen = vec![false; n];
        for &v in &perm {
            assert!(v < n && !seen[v], "not a permutation: {perm:?}");
            seen[v] = true;
        }
        let inv_count = inversions(&perm);
        SimpleElement { perm, inv_count }
    }

    pub fn identity(n: usize) -> Self {
        SimpleElement::from_perm((0..n).collect())
    }

    /// The half twist: the order-reversing permutation, of length `n(n-1)/2`.
    pub fn delta(n: usize) -> Self {
        SimpleElement::from_perm((0..n).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn inv_count(&self) -> usize {
        self.inv_count
    }

    pub fn is_identity(&self) -> bool {
        self.inv_count == 0
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n();
        self.inv_count == n * (n - 1) / 2
    }

    /// The lexicographically smallest reduced word for this permutation braid,
    /// under `s1 < s2 < ...`; its length is the inversion count.
    pub fn to_word(&self) -> Word {
        let n = self.n();
        let mut perm = self.perm.clone();
        let mut letters = Vec::with_capacity(self.inv_count);
        loop {
            // Smallest descent position: the word s_(p+1)·(rest) stays reduced.
            match (0..n - 1).find(|&p| perm[p] > perm[p + 1]) {
                Some(p) => {
                    letters.push(Generator::sigma(p + 1));
                    perm.swap(p, p + 1);
                }
                None => break,
            }
        }
        Word::new(n, letters)
    }

    /// Is there a simple `s'` with `self = s' · s_k`?  Holds iff the values
    /// `k, k+1` appear out of order in the one-line vector.
    pub fn gen_right_divides(&self, k: usize) -> bool {
        assert!(k >= 1 && k < self.n());
        let p1 = self.perm.iter().position(|&v| v == k - 1).unwrap();
        let p2 = self.perm.iter().position(|&v| v == k).unwrap();
        p1 > p2
    }

    /// Is `s_k · self` still a simple element?  Holds iff position `k` is an
    /// ascent of the one-line vector.
    pub fn gen_left_extends(&self, k: usize) -> bool {
        assert!(k >= 1 && k < self.n());
        self.perm[k - 1] < self.perm[k]
    }

    /// Remove one `s_k` from the right: the simple `s'` with `self = s' · s_k`.
    pub fn strip_right_generator(&self, k: usize) -> Option<SimpleElement> {
        if !self.gen_right_divides(k) {
            return None;
        }
        let mut perm = self.perm.clone();
        swap_values(&mut perm, k - 1);
        let inv_count = self.inv_count - 1;
        Some(SimpleElement { perm, inv_count })
    }

    /// Does the positive word `s_(ks[0]) ... s_(ks[last])` right-divide `self`?
    pub fn word_right_divides(&self, ks: &[usize]) -> bool {
        let mut current = self.clone();
        for &k in ks.iter().rev() {
            match current.strip_right_generator(k) {
                Some(next) => current = next,
                None => return false,
            }
        }
        true
    }

    /// Does `s_k` left-divide `self`?  Holds iff position `k` is a descent of
    /// the one-line vector.
    pub fn gen_left_divides(&self, k: usize) -> bool {
        assert!(k >= 1 && k < self.n());
        self.perm[k - 1] > self.perm[k]
    }

    /// Remove one `s_k` from the left: the simple `s'` with `self = s_k · s'`.
    pub fn strip_left_generator(&self, k: usize) -> Option<SimpleElement> {
        if !self.gen_left_divides(k) {
            return None;
        }
        let mut perm = self.perm.clone();
        perm.swap(k - 1, k);
        let inv_count = self.inv_count - 1;
        Some(SimpleElement { perm, inv_count })
    }

    /// Does the positive word `s_(ks[0]) ... s_(ks[last])` left-divide `self`?
    pub fn word_left_divides(&self, ks: &[usize]) -> bool {
        let mut current = self.clone();
        for &k in ks.iter() {
            match current.strip_left_generator(k) {
                Some(next) => current = next,
                None => return false,
            }
        }
        true
    }

    /// Conjugation by the half twist; matches the letterwise flip on words.
    pub fn flipped(&self) -> SimpleElement {
        let n = self.n();
        let perm: Vec<usize> = (0..n).map(|i| n - 1 - self.perm[n - 1 - i]).collect();
        let inv_count = self.inv_count;
        SimpleElement { perm, inv_count }
    }

    /// All `n!` simple elements, in lexicographic order of the one-line vectors.
    pub fn enumerate(n: usize) -> Vec<SimpleElement> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            out.push(SimpleElement::from_perm(perm.clone()));
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
