//! Brute-force ground truth: pattern containment, enumeration of multiset
//! permutations and compositions, and the avoider counts built on them.
//!
//! Containment uses strict inequalities throughout. Positions carrying equal
//! letters never witness a pattern, so `[2, 2, 2]` avoids `123` and `[1, 1, 2]`
//! contains only patterns of length two.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::types::{CompositionQuery, Letter, MultisetSpec, Pattern, Word};

/// Number of pattern-avoiding objects; never negative.
pub type AvoidanceCount = BigUint;

/// Does `w` contain `p`?
///
/// Patterns of length three use a single linear scan, increasing patterns use
/// a longest-increasing-subsequence computation, anything else falls back to
/// [`contains_naive`].
pub fn contains(w: &[Letter], p: &Pattern) -> bool {
    match p.perm() {
        [1, 2, 3] => has_123(w.iter().map(|&l| i64::from(l))),
        [3, 2, 1] => has_123(w.iter().rev().map(|&l| i64::from(l))),
        [1, 3, 2] => has_132_scanning_back(w.iter().rev().map(|&l| i64::from(l))),
        [2, 3, 1] => has_132_scanning_back(w.iter().map(|&l| i64::from(l))),
        [3, 1, 2] => has_132_scanning_back(w.iter().rev().map(|&l| -i64::from(l))),
        [2, 1, 3] => has_132_scanning_back(w.iter().map(|&l| -i64::from(l))),
        _ if p.is_increasing() => longest_increasing_run(w) >= p.len(),
        _ => contains_naive(w, p),
    }
}

pub fn avoids(w: &[Letter], p: &Pattern) -> bool {
    !contains(w, p)
}

/// Reference containment test: tries every choice of `m` positions.
///
/// Exponential in the pattern length and kept as the oracle for the fast
/// paths in [`contains`].
pub fn contains_naive(w: &[Letter], p: &Pattern) -> bool {
    fn extend(w: &[Letter], perm: &[u32], start: usize, chosen: &mut Vec<Letter>) -> bool {
        let depth = chosen.len();
        if depth == perm.len() {
            return true;
        }
        for pos in start..w.len() {
            let v = w[pos];
            let consistent = chosen.iter().zip(perm).all(|(&c, &pc)| {
                let want = perm[depth];
                (pc < want && c < v) || (pc > want && c > v)
            });
            if consistent {
                chosen.push(v);
                if extend(w, perm, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    extend(w, p.perm(), 0, &mut Vec::with_capacity(p.len()))
}

fn has_123(values: impl Iterator<Item = i64>) -> bool {
    let mut low = i64::MAX;
    // smallest value seen so far that has a strictly smaller value before it
    let mut mid = i64::MAX;
    for v in values {
        if v > mid {
            return true;
        }
        if v > low {
            mid = mid.min(v);
        }
        low = low.min(v);
    }
    false
}

/// Looks for `a < c < b` at positions `i < j < k`, consuming the word from
/// the right (so `values` yields `w_L, w_{L-1}, ...`).
fn has_132_scanning_back(values: impl Iterator<Item = i64>) -> bool {
    let mut stack: Vec<i64> = Vec::new();
    // largest value with a strictly larger value to its left; candidate for the "2"
    let mut third: Option<i64> = None;
    for v in values {
        if third.is_some_and(|t| v < t) {
            return true;
        }
        while let Some(&top) = stack.last() {
            if top < v {
                third = Some(top);
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(v);
    }
    false
}

/// Length of the longest strictly increasing subsequence (patience sorting).
pub fn longest_increasing_run(w: &[Letter]) -> usize {
    let mut tails: Vec<Letter> = Vec::new();
    for &v in w {
        let idx = tails.partition_point(|&t| t < v);
        if idx == tails.len() {
            tails.push(v);
        } else {
            tails[idx] = v;
        }
    }
    tails.len()
}

pub fn reverse_word(w: &[Letter]) -> Word {
    w.iter().rev().copied().collect()
}

/// Maps letter `i` to `k + 1 - i`; every letter must lie in `1..=k`.
pub fn complement_word(w: &[Letter], k: Letter) -> Result<Word> {
    w.iter()
        .map(|&l| {
            if l == 0 || l > k {
                Err(Error::Domain(format!("letter {l} outside 1..={k}")))
            } else {
                Ok(k + 1 - l)
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(Word::new)
}

/// Rearranges `buf` into its lexicographic successor; returns `false` (and
/// leaves `buf` sorted ascending) once the last arrangement is passed.
pub(crate) fn next_permutation(buf: &mut [Letter]) -> bool {
    if buf.len() < 2 {
        return false;
    }
    let mut i = buf.len() - 1;
    while i > 0 && buf[i - 1] >= buf[i] {
        i -= 1;
    }
    if i == 0 {
        buf.reverse();
        return false;
    }
    let mut j = buf.len() - 1;
    while buf[j] <= buf[i - 1] {
        j -= 1;
    }
    buf.swap(i - 1, j);
    buf[i..].reverse();
    true
}

/// Distinct permutations of a multiset in lexicographic order.
///
/// Cloning the iterator gives an independent stream from the same point;
/// [`enumerate_multiset_permutations`] restarts from the beginning.
#[derive(Debug, Clone)]
pub struct MultisetPermutations {
    buf: Vec<Letter>,
    state: StreamState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum StreamState {
    Fresh,
    Running,
    Done,
}

impl MultisetPermutations {
    pub fn new(spec: &MultisetSpec) -> Self {
        MultisetPermutations {
            buf: spec.sorted_word().into_letters(),
            state: StreamState::Fresh,
        }
    }

    /// Advances the stream without allocating.
    pub fn next_slice(&mut self) -> Option<&[Letter]> {
        match self.state {
            StreamState::Fresh => self.state = StreamState::Running,
            StreamState::Running => {
                if !next_permutation(&mut self.buf) {
                    self.state = StreamState::Done;
                }
            }
            StreamState::Done => {}
        }
        (self.state == StreamState::Running).then_some(self.buf.as_slice())
    }
}

impl Iterator for MultisetPermutations {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        self.next_slice().map(Word::from)
    }
}

pub fn enumerate_multiset_permutations(spec: &MultisetSpec) -> MultisetPermutations {
    MultisetPermutations::new(spec)
}

/// Number of permutations of `spec` avoiding each pattern, from one pass over
/// the permutations. Work is split across threads by the first letter.
pub fn avoider_counts_multiset(spec: &MultisetSpec, patterns: &[Pattern]) -> Vec<AvoidanceCount> {
    let letters: Vec<usize> = (0..spec.k()).filter(|&i| spec.mult()[i] > 0).collect();
    if letters.is_empty() {
        // only the empty word, which avoids everything
        return vec![BigUint::from(1u32); patterns.len()];
    }
    let partials: Vec<Vec<u64>> = letters
        .par_iter()
        .map(|&first| {
            let mut rest = spec.mult().to_vec();
            rest[first] -= 1;
            let mut tail = MultisetPermutations::new(&MultisetSpec::new(rest));
            let mut word = Vec::with_capacity(spec.total());
            let mut counts = vec![0u64; patterns.len()];
            while let Some(t) = tail.next_slice() {
                word.clear();
                word.push(first as Letter + 1);
                word.extend_from_slice(t);
                for (c, p) in counts.iter_mut().zip(patterns) {
                    if !contains(&word, p) {
                        *c += 1;
                    }
                }
            }
            counts
        })
        .collect();
    sum_columns(&partials, patterns.len())
}

/// Number of permutations of the multiset `spec` that avoid `p`.
pub fn count_avoiders_multiset(spec: &MultisetSpec, p: &Pattern) -> AvoidanceCount {
    avoider_counts_multiset(spec, std::slice::from_ref(p))
        .pop()
        .expect("one pattern in, one count out")
}

fn sum_columns(partials: &[Vec<u64>], width: usize) -> Vec<AvoidanceCount> {
    (0..width)
        .map(|c| partials.iter().map(|row| BigUint::from(row[c])).sum())
        .collect()
}

/// Compositions matching a [`CompositionQuery`], in lexicographic order.
#[derive(Debug, Clone)]
pub struct Compositions {
    parts: Vec<u32>,
    lo: u32,
    hi: u32,
    slots: Option<usize>,
    state: StreamState,
}

impl Compositions {
    pub fn new(q: &CompositionQuery) -> Result<Self> {
        q.validate()?;
        Ok(Self::from_bounds(
            q.n,
            q.flavor.min_part(),
            q.part_cap(),
            q.parts,
        ))
    }

    fn from_bounds(n: u32, lo: u32, hi: u32, slots: Option<usize>) -> Self {
        let mut c = Compositions {
            parts: Vec::new(),
            lo,
            hi,
            slots,
            state: StreamState::Fresh,
        };
        if c.feasible(n, slots) {
            c.fill_min(n, slots);
        } else {
            c.state = StreamState::Done;
        }
        c
    }

    fn feasible(&self, r: u32, slots: Option<usize>) -> bool {
        match slots {
            // lo >= 1 here: any-k queries are positive
            None => r == 0 || self.hi >= 1,
            Some(s) => {
                let s = s as u64;
                s * u64::from(self.lo) <= u64::from(r) && u64::from(r) <= s * u64::from(self.hi)
            }
        }
    }

    /// Appends the lexicographically smallest feasible completion.
    fn fill_min(&mut self, mut r: u32, slots: Option<usize>) {
        match slots {
            None => self.parts.extend(std::iter::repeat_n(1, r as usize)),
            Some(s) => {
                for left in (0..s).rev() {
                    let room = u64::from(self.hi) * left as u64;
                    let v = u64::from(self.lo).max(u64::from(r).saturating_sub(room)) as u32;
                    self.parts.push(v);
                    r -= v;
                }
            }
        }
    }

    fn advance(&mut self) -> bool {
        let mut suffix: u32 = 0;
        for j in (0..self.parts.len()).rev() {
            let v = self.parts[j] + 1;
            if v <= self.hi && suffix >= 1 {
                let r = suffix - 1;
                let slots = self.slots.map(|k| k - j - 1);
                if self.feasible(r, slots) {
                    self.parts.truncate(j);
                    self.parts.push(v);
                    self.fill_min(r, slots);
                    return true;
                }
            }
            suffix += self.parts[j];
        }
        false
    }

    pub fn next_slice(&mut self) -> Option<&[u32]> {
        match self.state {
            StreamState::Fresh => self.state = StreamState::Running,
            StreamState::Running => {
                if !self.advance() {
                    self.state = StreamState::Done;
                }
            }
            StreamState::Done => {}
        }
        (self.state == StreamState::Running).then_some(self.parts.as_slice())
    }
}

impl Iterator for Compositions {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        self.next_slice().map(Word::from)
    }
}

pub fn enumerate_compositions(q: &CompositionQuery) -> Result<Compositions> {
    Compositions::new(q)
}

/// Avoider counts for several patterns from one pass over the compositions.
/// Work is split across threads by the value of the first part.
pub fn avoider_counts_compositions(
    q: &CompositionQuery,
    patterns: &[Pattern],
) -> Result<Vec<AvoidanceCount>> {
    q.validate()?;
    let lo = q.flavor.min_part();
    let hi = q.part_cap();
    let split = q.n > 0 && q.parts != Some(0);
    if !split {
        let mut all = Compositions::new(q)?;
        let mut counts = vec![0u64; patterns.len()];
        while let Some(w) = all.next_slice() {
            tally(w, patterns, &mut counts);
        }
        return Ok(sum_columns(&[counts], patterns.len()));
    }
    let partials: Vec<Vec<u64>> = (lo..=hi)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u64; patterns.len()];
            let mut tail = Compositions::from_bounds(q.n - first, lo, hi, q.parts.map(|k| k - 1));
            let mut word = Vec::new();
            while let Some(t) = tail.next_slice() {
                word.clear();
                word.push(first);
                word.extend_from_slice(t);
                tally(&word, patterns, &mut counts);
            }
            counts
        })
        .collect();
    Ok(sum_columns(&partials, patterns.len()))
}

fn tally(w: &[Letter], patterns: &[Pattern], counts: &mut [u64]) {
    for (c, p) in counts.iter_mut().zip(patterns) {
        if !contains(w, p) {
            *c += 1;
        }
    }
}

/// Number of compositions matching `q` that avoid `p`.
pub fn count_avoiding_compositions(q: &CompositionQuery, p: &Pattern) -> Result<AvoidanceCount> {
    Ok(avoider_counts_compositions(q, std::slice::from_ref(p))?
        .pop()
        .expect("one pattern in, one count out"))
}

/// Total number of compositions matching `q`, by enumeration.
pub fn count_compositions(q: &CompositionQuery) -> Result<u64> {
    let mut all = Compositions::new(q)?;
    let mut n = 0u64;
    while all.next_slice().is_some() {
        n += 1;
    }
    Ok(n)
}
