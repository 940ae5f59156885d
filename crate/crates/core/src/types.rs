//! Domain values shared by every module: words, multiplicity vectors,
//! patterns and composition queries.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single letter of a word. Zero is allowed so that compositions with
/// nonnegative parts can be stored as words.
pub type Letter = u32;

/// A finite sequence of letters: a multiset permutation or the part
/// sequence of a composition.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// Parses a run of decimal digits, one letter per digit, e.g. `"1132"`.
    pub fn from_digits(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Domain(format!("not a digit: {c:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// Renders the word without separators; only meaningful for letters < 10.
    pub fn to_digits(&self) -> String {
        self.0.iter().map(|l| l.to_string()).collect()
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Space separated, as in `7 5 6 6 4`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, l) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Multiplicity vector `a = (a_1, ..., a_k)`: the multiset holding `a_i`
/// copies of letter `i`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultisetSpec {
    mult: Vec<u32>,
}

impl MultisetSpec {
    pub fn new(mult: Vec<u32>) -> Self {
        MultisetSpec { mult }
    }

    /// Multiplicities of every letter in `w`, indexed `1..=max(w)`.
    ///
    /// Letter 0 is rejected since multiset letters start at 1.
    pub fn of_word(w: &[Letter]) -> Result<Self> {
        if w.contains(&0) {
            return Err(Error::Domain(
                "letter 0 cannot appear in a multiset permutation".into(),
            ));
        }
        let k = w.iter().copied().max().unwrap_or(0) as usize;
        let mut mult = vec![0u32; k];
        for &l in w {
            mult[l as usize - 1] += 1;
        }
        Ok(MultisetSpec { mult })
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    /// Number of letters `k`, counting letters with multiplicity zero.
    pub fn k(&self) -> usize {
        self.mult.len()
    }

    /// Length of every permutation of the multiset.
    pub fn total(&self) -> usize {
        self.mult.iter().map(|&a| a as usize).sum()
    }

    /// Drops zero multiplicities; the surviving letters are relabelled
    /// `1..=k'` in their original order.
    pub fn normalize(&self) -> Self {
        MultisetSpec {
            mult: self.mult.iter().copied().filter(|&a| a > 0).collect(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.mult.iter().all(|&a| a > 0)
    }

    /// The lexicographically smallest permutation `1^{a_1} 2^{a_2} ...`.
    pub fn sorted_word(&self) -> Word {
        self.mult
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i as Letter + 1, a as usize))
            .collect()
    }

    /// True when `self` is a rearrangement of `other` (zeros included).
    pub fn is_rearrangement_of(&self, other: &MultisetSpec) -> bool {
        let mut a = self.mult.clone();
        let mut b = other.mult.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    pub fn reversed(&self) -> Self {
        MultisetSpec {
            mult: self.mult.iter().rev().copied().collect(),
        }
    }

    /// Does `w` contain exactly `a_i` copies of each letter `i` and nothing else?
    pub fn is_permutation(&self, w: &[Letter]) -> bool {
        if w.len() != self.total() {
            return false;
        }
        let mut counts = vec![0u32; self.k()];
        for &l in w {
            if l == 0 || l as usize > self.k() {
                return false;
            }
            counts[l as usize - 1] += 1;
        }
        counts == self.mult
    }
}

impl From<Vec<u32>> for MultisetSpec {
    fn from(mult: Vec<u32>) -> Self {
        MultisetSpec::new(mult)
    }
}

impl fmt::Display for MultisetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, a) in self.mult.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Free-function form of [`MultisetSpec::normalize`].
pub fn normalize_spec(spec: &MultisetSpec) -> MultisetSpec {
    spec.normalize()
}

/// Free-function form of [`MultisetSpec::of_word`].
pub fn word_multiset(w: &[Letter]) -> Result<MultisetSpec> {
    MultisetSpec::of_word(w)
}

/// True iff `perm` is a rearrangement of `1..=m` with `m >= 2`.
pub fn validate_pattern(perm: &[u32]) -> bool {
    let m = perm.len();
    if m < 2 {
        return false;
    }
    let mut seen = vec![false; m];
    for &p in perm {
        if p == 0 || p as usize > m || seen[p as usize - 1] {
            return false;
        }
        seen[p as usize - 1] = true;
    }
    true
}

/// A classical pattern: a permutation of `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern {
    perm: Vec<u32>,
}

impl Pattern {
    pub fn new(perm: Vec<u32>) -> Result<Self> {
        if validate_pattern(&perm) {
            Ok(Pattern { perm })
        } else {
            Err(Error::InvalidPattern(perm))
        }
    }

    /// The increasing pattern `12...r`.
    pub fn increasing(r: u32) -> Result<Self> {
        Pattern::new((1..=r).collect())
    }

    /// The six patterns of length three, in lexicographic order.
    pub fn all_s3() -> [Pattern; 6] {
        [
            [1, 2, 3],
            [1, 3, 2],
            [2, 1, 3],
            [2, 3, 1],
            [3, 1, 2],
            [3, 2, 1],
        ]
        .map(|p| Pattern { perm: p.to_vec() })
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn is_increasing(&self) -> bool {
        self.perm.windows(2).all(|w| w[0] < w[1])
    }

    pub fn reversed(&self) -> Pattern {
        Pattern {
            perm: self.perm.iter().rev().copied().collect(),
        }
    }

    /// Letter `p` becomes `m + 1 - p`.
    pub fn complement(&self) -> Pattern {
        let m = self.perm.len() as u32;
        Pattern {
            perm: self.perm.iter().map(|&p| m + 1 - p).collect(),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts digit strings such as `"132"`.
    fn from_str(s: &str) -> Result<Self> {
        let perm = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Domain(format!("pattern must be digits, got {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Pattern::new(perm)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.perm.iter().all(|&p| p < 10) {
            for p in &self.perm {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.perm.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartsFlavor {
    /// Every part is at least 1.
    Positive,
    /// Parts may be 0; the part count must be fixed.
    Nonnegative,
}

impl PartsFlavor {
    pub fn min_part(self) -> u32 {
        match self {
            PartsFlavor::Positive => 1,
            PartsFlavor::Nonnegative => 0,
        }
    }
}

impl FromStr for PartsFlavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" => Ok(PartsFlavor::Positive),
            "nonnegative" => Ok(PartsFlavor::Nonnegative),
            other => Err(Error::Query(format!("unknown parts flavor {other:?}"))),
        }
    }
}

impl fmt::Display for PartsFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartsFlavor::Positive => "positive",
            PartsFlavor::Nonnegative => "nonnegative",
        })
    }
}

/// Which compositions of `n` to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompositionQuery {
    pub n: u32,
    pub flavor: PartsFlavor,
    /// Fixed number of parts; `None` means any number.
    pub parts: Option<usize>,
    pub max_part: Option<u32>,
}

impl CompositionQuery {
    /// Compositions of `n` into any number of positive parts.
    pub fn positive(n: u32) -> Self {
        CompositionQuery {
            n,
            flavor: PartsFlavor::Positive,
            parts: None,
            max_part: None,
        }
    }

    pub fn positive_with_parts(n: u32, k: usize) -> Self {
        CompositionQuery {
            parts: Some(k),
            ..Self::positive(n)
        }
    }

    pub fn nonnegative(n: u32, k: usize) -> Self {
        CompositionQuery {
            n,
            flavor: PartsFlavor::Nonnegative,
            parts: Some(k),
            max_part: None,
        }
    }

    pub fn with_max_part(self, max_part: u32) -> Self {
        CompositionQuery {
            max_part: Some(max_part),
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.flavor == PartsFlavor::Nonnegative && self.parts.is_none() {
            return Err(Error::Query(
                "nonnegative parts need a fixed part count".into(),
            ));
        }
        Ok(())
    }

    /// Effective upper bound on a part.
    pub fn part_cap(&self) -> u32 {
        self.max_part.map_or(self.n, |m| m.min(self.n))
    }
}
