//! Bijections between permutations of `M(a)` and `M(b)` for `b` a
//! rearrangement of `a`, built from symmetric chain matching.
//!
//! Fix a letter `i`. Reading the word left to right, each `i` is an opening
//! parenthesis and each `i + 1` a closing one; every other letter is ignored.
//! Stack matching leaves some closes unmatched on the left and some opens
//! unmatched on the right (never interleaved). [`tau`] turns the leftmost
//! unmatched `i` into `i + 1`, which does not disturb the matching, and
//! [`theta_adjacent`] applies it `a_i - a_{i+1}` times to exchange the two
//! multiplicities. Both preserve avoidance of every increasing pattern.

use std::fmt;

use crate::error::{Error, Result};
use crate::types::{Letter, MultisetSpec, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Open,
    Close,
    Other,
}

/// A word seen as a parenthesis string for one focus letter.
///
/// Positions are 0-based; [`ParenView::render_marked`] is the human-facing
/// form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParenView {
    word: Word,
    focus: Letter,
    roles: Vec<Role>,
    partner: Vec<Option<usize>>,
    unmatched_opens: Vec<usize>,
    unmatched_closes: Vec<usize>,
}

impl ParenView {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn focus(&self) -> Letter {
        self.focus
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    /// Matched partner of position `pos`, if any.
    pub fn partner(&self, pos: usize) -> Option<usize> {
        self.partner[pos]
    }

    /// Unmatched `i` positions, left to right.
    pub fn unmatched_opens(&self) -> &[usize] {
        &self.unmatched_opens
    }

    /// Unmatched `i + 1` positions, left to right.
    pub fn unmatched_closes(&self) -> &[usize] {
        &self.unmatched_closes
    }

    /// Matched pairs `(open, close)` ordered by the open position.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(p, _)| self.roles[p] == Role::Open)
            .filter_map(|(p, q)| q.map(|q| (p, q)))
            .collect()
    }

    /// Letters replaced by `(` and `)`, e.g. `7 ) 6 6 ( 6 6 ( ...`.
    pub fn render(&self) -> String {
        self.render_with(|_, role| match role {
            Role::Open => "(",
            _ => ")",
        })
    }

    /// Like [`render`](Self::render) but with unmatched opens shown as `U`.
    pub fn render_marked(&self) -> String {
        self.render_with(|matched, role| match (role, matched) {
            (Role::Open, true) => "(",
            (Role::Open, false) => "U",
            _ => ")",
        })
    }

    fn render_with(&self, glyph: impl Fn(bool, Role) -> &'static str) -> String {
        self.word
            .iter()
            .enumerate()
            .map(|(p, l)| match self.roles[p] {
                Role::Other => l.to_string(),
                role => glyph(self.partner[p].is_some(), role).to_string(),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Ordinal (1-based) positions of the unmatched opens.
    pub fn unmatched_open_ordinals(&self) -> Vec<usize> {
        self.unmatched_opens.iter().map(|p| p + 1).collect()
    }
}

impl fmt::Display for ParenView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_marked())
    }
}

/// Stack matching of `focus` (open) against `focus + 1` (close).
pub fn match_parens(w: &[Letter], focus: Letter) -> Result<ParenView> {
    if focus == 0 {
        return Err(Error::Domain("focus letter must be at least 1".into()));
    }
    let mut roles = Vec::with_capacity(w.len());
    let mut partner = vec![None; w.len()];
    let mut stack = Vec::new();
    let mut unmatched_closes = Vec::new();
    for (pos, &l) in w.iter().enumerate() {
        if l == focus {
            roles.push(Role::Open);
            stack.push(pos);
        } else if l == focus + 1 {
            roles.push(Role::Close);
            match stack.pop() {
                Some(open) => {
                    partner[open] = Some(pos);
                    partner[pos] = Some(open);
                }
                None => unmatched_closes.push(pos),
            }
        } else {
            roles.push(Role::Other);
        }
    }
    Ok(ParenView {
        word: Word::from(w),
        focus,
        roles,
        partner,
        unmatched_opens: stack,
        unmatched_closes,
    })
}

/// Changes the leftmost `count` unmatched `focus` letters to `focus + 1`.
/// Equal to `count` applications of [`tau`].
pub fn tau_power(w: &[Letter], focus: Letter, count: usize) -> Result<Word> {
    let view = match_parens(w, focus)?;
    if view.unmatched_opens.len() < count {
        return Err(Error::Precondition(format!(
            "need {count} unmatched {focus}'s, word has {}",
            view.unmatched_opens.len()
        )));
    }
    let mut out = w.to_vec();
    for &p in &view.unmatched_opens[..count] {
        out[p] = focus + 1;
    }
    Ok(Word::new(out))
}

/// Changes the rightmost `count` unmatched `focus + 1` letters to `focus`.
/// Inverse of [`tau_power`].
pub fn tau_inverse_power(w: &[Letter], focus: Letter, count: usize) -> Result<Word> {
    let view = match_parens(w, focus)?;
    let closes = &view.unmatched_closes;
    if closes.len() < count {
        return Err(Error::Precondition(format!(
            "need {count} unmatched {}'s, word has {}",
            focus + 1,
            closes.len()
        )));
    }
    let mut out = w.to_vec();
    for &p in &closes[closes.len() - count..] {
        out[p] = focus;
    }
    Ok(Word::new(out))
}

/// Leftmost unmatched `focus` becomes `focus + 1`.
pub fn tau(w: &[Letter], focus: Letter) -> Result<Word> {
    tau_power(w, focus, 1)
}

/// Rightmost unmatched `focus + 1` becomes `focus`.
pub fn tau_inverse(w: &[Letter], focus: Letter) -> Result<Word> {
    tau_inverse_power(w, focus, 1)
}

/// Exchanges the multiplicities of letters `i` and `i + 1`.
///
/// With `d = a_i - a_{i+1}` (counted in `w`): the identity when `d = 0`,
/// `tau^d` when `d > 0`, and the inverse map flipping the `|d|` rightmost
/// unmatched `i + 1`'s when `d < 0`. Applying it twice gives back `w`.
pub fn theta_adjacent(w: &[Letter], i: Letter) -> Result<Word> {
    if i == 0 {
        return Err(Error::Domain("letter index must be at least 1".into()));
    }
    let a_i = w.iter().filter(|&&l| l == i).count();
    let a_next = w.iter().filter(|&&l| l == i + 1).count();
    match a_i.cmp(&a_next) {
        std::cmp::Ordering::Equal => Ok(Word::from(w)),
        std::cmp::Ordering::Greater => tau_power(w, i, a_i - a_next),
        std::cmp::Ordering::Less => tau_inverse_power(w, i, a_next - a_i),
    }
}

/// Adjacent exchanges (1-based letter indices) turning `source` into
/// `target`.
///
/// Target positions are filled left to right; position `p` receives the
/// leftmost not-yet-placed entry equal to `target[p]`, bubbled down one
/// adjacent exchange at a time.
pub fn swap_schedule(source: &MultisetSpec, target: &MultisetSpec) -> Result<Vec<Letter>> {
    if !source.is_rearrangement_of(target) {
        return Err(Error::Domain(format!(
            "{target} is not a rearrangement of {source}"
        )));
    }
    let mut current = source.mult().to_vec();
    let mut schedule = Vec::new();
    for (p, &want) in target.mult().iter().enumerate() {
        let q = p + current[p..]
            .iter()
            .position(|&a| a == want)
            .expect("rearrangement guarantees a match");
        for s in (p..q).rev() {
            current.swap(s, s + 1);
            schedule.push(s as Letter + 1);
        }
    }
    debug_assert_eq!(current, target.mult());
    Ok(schedule)
}

/// Maps a permutation of `M(a)`, `a` read off `w`, to a permutation of
/// `M(target)` by composing [`theta_adjacent`] along [`swap_schedule`].
///
/// `target` may be longer than the largest letter of `w` (extra letters have
/// multiplicity zero).
pub fn theta(w: &[Letter], target: &MultisetSpec) -> Result<Word> {
    let mut source = MultisetSpec::of_word(w)?.mult().to_vec();
    if source.len() > target.k() {
        return Err(Error::Domain(format!(
            "word uses letter {} but target has only {} letters",
            source.len(),
            target.k()
        )));
    }
    source.resize(target.k(), 0);
    let schedule = swap_schedule(&MultisetSpec::new(source), target)?;
    let mut current = Word::from(w);
    for i in schedule {
        current = theta_adjacent(&current, i)?;
    }
    Ok(current)
}

/// Inverse of [`theta`]: sends a permutation of `M(target)` back to `M(source)`.
pub fn theta_inverse(w: &[Letter], source: &MultisetSpec) -> Result<Word> {
    let target = {
        let mut t = MultisetSpec::of_word(w)?.mult().to_vec();
        t.resize(source.k().max(t.len()), 0);
        MultisetSpec::new(t)
    };
    let mut schedule = swap_schedule(source, &target)?;
    schedule.reverse();
    let mut current = Word::from(w);
    for i in schedule {
        current = theta_adjacent(&current, i)?;
    }
    Ok(current)
}
