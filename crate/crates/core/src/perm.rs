//! Permutations in one-line notation, letter classes under the `π₀ = π_{n+1} = ∞`
//! convention, classical statistics, cycle notation and Foata's fundamental
//! transformation.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A letter of a permutation or word. Letters are positive.
pub type Letter = u32;

/// Anything that is a validated sequence of distinct positive letters.
pub trait Letters {
    fn letters(&self) -> &[Letter];

    fn len(&self) -> usize {
        self.letters().len()
    }

    fn is_empty(&self) -> bool {
        self.letters().is_empty()
    }
}

/// A permutation of `{1, …, n}` in one-line notation `π₁π₂⋯πₙ`.
///
/// Ordering is lexicographic on the one-line word, which is what orbit
/// canonical representatives are chosen by.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    letters: Vec<Letter>,
}

impl Permutation {
    /// Validates that `letters` is exactly `{1, …, n}` with every letter once.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &x in &letters {
            if x == 0 {
                return Err(Error::InvalidToken(x.to_string()));
            }
            let idx = x as usize;
            if idx > n {
                return Err(Error::OutOfRange {
                    token: x.to_string(),
                    n,
                });
            }
            if seen[idx] {
                return Err(Error::DuplicateLetter(x.to_string()));
            }
            seen[idx] = true;
        }
        Ok(Self { letters })
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(Self::new(letters.clone()).is_ok());
        Self { letters }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            letters: (1..=n as Letter).collect(),
        }
    }

    pub fn empty() -> Self {
        Self {
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `π(i)` for `1 ≤ i ≤ n`.
    pub fn image(&self, i: Letter) -> Letter {
        self.letters[i as usize - 1]
    }

    /// The inverse permutation: `σ[π[i]] = i`. In the rix algorithm, this is
    /// the position lookup table for each letter.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.letters.len()];
        for (i, &x) in self.letters.iter().enumerate() {
            inv[x as usize - 1] = i as Letter + 1;
        }
        Self { letters: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different sizes"
        );
        Self {
            letters: other.letters.iter().map(|&i| self.image(i)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letters
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == i + 1)
    }
}

/// Every permutation of `{1, …, n}` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    use itertools::Itertools;
    (1..=n as Letter)
        .permutations(n)
        .map(Permutation::from_vec_unchecked)
}

impl Letters for Permutation {
    fn letters(&self) -> &[Letter] {
        &self.letters
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_spaced(f, &self.letters)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_one_line(s)
    }
}

/// A word with distinct positive letters, not necessarily `{1, …, n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if sorted.first() == Some(&0) {
            return Err(Error::InvalidToken("0".into()));
        }
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLetter(w[0].to_string()));
        }
        Ok(Self(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Letter> {
        self.0
    }
}

impl Letters for Word {
    fn letters(&self) -> &[Letter] {
        &self.0
    }
}

impl From<&Permutation> for Word {
    fn from(p: &Permutation) -> Self {
        Self(p.letters.clone())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_compact(f, &self.0)
    }
}

pub(crate) fn write_spaced(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    for (i, x) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Concatenates letters without separators when every letter is a single
/// digit (`14278`), and falls back to spaces otherwise.
pub(crate) fn write_compact(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    if letters.iter().all(|&x| x < 10) {
        for x in letters {
            write!(f, "{x}")?;
        }
        Ok(())
    } else {
        write_spaced(f, letters)
    }
}

/// The four letter classes, comparing each letter with both neighbours and
/// treating the missing neighbours of the end letters as `∞`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum LetterClass {
    Peak,
    Valley,
    DoubleAscent,
    DoubleDescent,
}

impl LetterClass {
    pub fn is_double(self) -> bool {
        matches!(self, Self::DoubleAscent | Self::DoubleDescent)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Peak => "peak",
            Self::Valley => "valley",
            Self::DoubleAscent => "double ascent",
            Self::DoubleDescent => "double descent",
        }
    }
}

/// Class of the letter at `i` in a word of distinct letters (positions are
/// 0-based here).
pub(crate) fn class_at(w: &[Letter], i: usize) -> LetterClass {
    let x = w[i];
    let left_larger = i == 0 || w[i - 1] > x;
    let right_larger = i + 1 == w.len() || w[i + 1] > x;
    match (left_larger, right_larger) {
        (false, false) => LetterClass::Peak,
        (true, true) => LetterClass::Valley,
        (false, true) => LetterClass::DoubleAscent,
        (true, false) => LetterClass::DoubleDescent,
    }
}

/// A letter is a descent when it is larger than its right neighbour; the last
/// letter is always an ascent.
pub(crate) fn is_descent_at(w: &[Letter], i: usize) -> bool {
    i + 1 < w.len() && w[i] > w[i + 1]
}

pub fn classify(p: &Permutation) -> Vec<(Letter, LetterClass)> {
    (0..p.len())
        .map(|i| (p.letters[i], class_at(&p.letters, i)))
        .collect()
}

/// Descent letters in left-to-right order.
pub fn descents(p: &Permutation) -> Vec<Letter> {
    (0..p.len())
        .filter(|&i| is_descent_at(&p.letters, i))
        .map(|i| p.letters[i])
        .collect()
}

/// Descents with no larger descent anywhere to their right, sorted increasingly.
pub fn leading_descents(p: &Permutation) -> Vec<Letter> {
    let mut out = leading_descent_mask(&p.letters)
        .iter()
        .enumerate()
        .filter(|(_, &lead)| lead)
        .map(|(i, _)| p.letters[i])
        .collect::<Vec<_>>();
    out.sort_unstable();
    out
}

/// `mask[i]` is true when position `i` holds a leading descent.
pub(crate) fn leading_descent_mask(w: &[Letter]) -> Vec<bool> {
    let mut mask = vec![false; w.len()];
    let mut max_descent_right = 0;
    for i in (0..w.len()).rev() {
        if is_descent_at(w, i) && w[i] > max_descent_right {
            mask[i] = true;
            max_descent_right = w[i];
        }
    }
    mask
}

/// Classical statistics of a permutation.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct StatRecord {
    pub des: usize,
    pub exc: usize,
    pub fix: usize,
    #[serde(rename = "Fix")]
    pub fix_set: Vec<Letter>,
    pub maj: usize,
    pub pk: usize,
    pub dbl: usize,
}

pub fn stats(p: &Permutation) -> StatRecord {
    let w = &p.letters;
    let mut rec = StatRecord::default();
    for i in 0..w.len() {
        if is_descent_at(w, i) {
            rec.des += 1;
            rec.maj += i + 1;
        }
        match class_at(w, i) {
            LetterClass::Peak => rec.pk += 1,
            LetterClass::Valley => {}
            LetterClass::DoubleAscent | LetterClass::DoubleDescent => rec.dbl += 1,
        }
        let pos = i as Letter + 1;
        if w[i] == pos {
            rec.fix_set.push(pos);
        } else if w[i] > pos {
            rec.exc += 1;
        }
    }
    rec.fix = rec.fix_set.len();
    rec
}

pub fn fixed_points(p: &Permutation) -> Vec<Letter> {
    p.letters
        .iter()
        .enumerate()
        .filter(|(i, &x)| x as usize == i + 1)
        .map(|(_, &x)| x)
        .collect()
}

/// A sequence of cycles. The order of cycles is kept as given; `canonical`
/// records whether the form is already in canonical cycle representation
/// (largest letter first in each cycle, cycles sorted by that letter).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CycleForm {
    pub cycles: Vec<Vec<Letter>>,
    pub canonical: bool,
}

impl CycleForm {
    pub fn new(cycles: Vec<Vec<Letter>>) -> Self {
        let canonical = is_canonical(&cycles);
        Self { cycles, canonical }
    }

    /// Rotates each cycle to start at its maximum and sorts cycles by it.
    pub fn canonicalize(&self) -> Self {
        let mut cycles: Vec<Vec<Letter>> = self
            .cycles
            .iter()
            .map(|c| {
                let mut c = c.clone();
                if let Some((k, _)) = c.iter().enumerate().max_by_key(|(_, &x)| x) {
                    c.rotate_left(k);
                }
                c
            })
            .collect();
        cycles.sort_by_key(|c| c.first().copied());
        Self {
            cycles,
            canonical: true,
        }
    }

    /// The permutation sending each cycle entry to its successor.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let n: usize = self.cycles.iter().map(Vec::len).sum();
        let mut images = vec![0 as Letter; n];
        for c in &self.cycles {
            for (i, &x) in c.iter().enumerate() {
                if x == 0 || x as usize > n {
                    return Err(Error::OutOfRange {
                        token: x.to_string(),
                        n,
                    });
                }
                let slot = &mut images[x as usize - 1];
                if *slot != 0 {
                    return Err(Error::DuplicateLetter(x.to_string()));
                }
                *slot = c[(i + 1) % c.len()];
            }
        }
        Ok(Permutation::from_vec_unchecked(images))
    }

    /// Letters of all cycles read left to right with parentheses erased.
    pub fn flatten(&self) -> Vec<Letter> {
        self.cycles.iter().flatten().copied().collect()
    }
}

fn is_canonical(cycles: &[Vec<Letter>]) -> bool {
    let heads_are_max = cycles
        .iter()
        .all(|c| c.first().is_some_and(|h| c.iter().all(|x| x <= h)));
    heads_are_max && cycles.windows(2).all(|w| w[0][0] < w[1][0])
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn parse_letter(token: &str) -> Result<Letter> {
    match token.parse::<Letter>() {
        Ok(x) if x > 0 => Ok(x),
        _ => Err(Error::InvalidToken(token.to_string())),
    }
}

/// Parses whitespace- or comma-separated letters, e.g. `"1 4 2 7 8 5 3 6 9"`.
pub fn parse_one_line(text: &str) -> Result<Permutation> {
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    let n = tokens.len();
    let mut seen = vec![false; n + 1];
    let mut letters = Vec::with_capacity(n);
    for tok in tokens {
        let x = parse_letter(tok)?;
        if x as usize > n {
            return Err(Error::OutOfRange {
                token: tok.to_string(),
                n,
            });
        }
        if std::mem::replace(&mut seen[x as usize], true) {
            return Err(Error::DuplicateLetter(tok.to_string()));
        }
        letters.push(x);
    }
    Ok(Permutation::from_vec_unchecked(letters))
}

/// Parses cycle notation such as `"(5,2,3)(8)(9,7,6,4,1)"` or `"(5 2 3)(8)"`,
/// keeping the cycles in the order written.
pub fn parse_cycle_form(text: &str) -> Result<CycleForm> {
    let mut cycles = Vec::new();
    let mut rest = text;
    let mut offset = 0;
    loop {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        rest = trimmed;
        let Some(ch) = rest.chars().next() else { break };
        match ch {
            '(' => {
                let close = rest.find(')').ok_or(Error::UnbalancedParens(offset))?;
                let body = &rest[1..close];
                if let Some(at) = body.find('(') {
                    return Err(Error::UnbalancedParens(offset + 1 + at));
                }
                let cycle = body
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(parse_letter)
                    .collect::<Result<Vec<_>>>()?;
                if cycle.is_empty() {
                    return Err(Error::EmptyCycle(offset));
                }
                cycles.push(cycle);
                offset += close + 1;
                rest = &rest[close + 1..];
            }
            ')' => return Err(Error::UnbalancedParens(offset)),
            other => {
                return Err(Error::StrayText {
                    ch: other,
                    at: offset,
                })
            }
        }
    }
    let n = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut seen = vec![false; n + 1];
    for &x in cycles.iter().flatten() {
        if std::mem::replace(&mut seen[x as usize], true) {
            return Err(Error::DuplicateLetter(x.to_string()));
        }
    }
    if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
        return Err(Error::MissingLetter {
            letter: missing as Letter,
            n,
        });
    }
    Ok(CycleForm::new(cycles))
}

/// Parses cycle notation and returns the permutation it denotes.
pub fn parse_cycles(text: &str) -> Result<Permutation> {
    parse_cycle_form(text)?.to_permutation()
}

/// Accepts either notation: cycle form when the text starts with `(`,
/// one-line otherwise.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    if text.trim_start().starts_with('(') {
        parse_cycles(text)
    } else {
        parse_one_line(text)
    }
}

pub fn to_canonical_cycles(p: &Permutation) -> CycleForm {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    let mut cycles = Vec::new();
    // Scanning for unvisited letters from the top down finds each cycle at its
    // maximum, so cycles come out largest-first in decreasing order.
    for start in (1..=n as Letter).rev() {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start as usize] = true;
        let mut next = p.image(start);
        while next != start {
            seen[next as usize] = true;
            cycle.push(next);
            next = p.image(next);
        }
        cycles.push(cycle);
    }
    cycles.reverse();
    CycleForm {
        cycles,
        canonical: true,
    }
}

/// Foata's fundamental transformation: erase the parentheses of the canonical
/// cycle representation.
pub fn foata(p: &Permutation) -> Permutation {
    Permutation::from_vec_unchecked(to_canonical_cycles(p).flatten())
}

/// Inverse of [`foata`]: open a new cycle at every left-to-right maximum of
/// the one-line word.
pub fn foata_inverse(p: &Permutation) -> Permutation {
    let w = p.letters();
    let mut images = vec![0 as Letter; w.len()];
    let mut start = 0;
    while start < w.len() {
        let head = w[start];
        let mut end = start + 1;
        while end < w.len() && w[end] < head {
            end += 1;
        }
        let cycle = &w[start..end];
        for (i, &x) in cycle.iter().enumerate() {
            images[x as usize - 1] = cycle[(i + 1) % cycle.len()];
        }
        start = end;
    }
    Permutation::from_vec_unchecked(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn perm(s: &str) -> Permutation {
        parse_one_line(s).unwrap()
    }

    fn digits(s: &str) -> Permutation {
        Permutation::new(s.chars().map(|c| c.to_digit(10).unwrap()).collect()).unwrap()
    }

    fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as Letter)
            .permutations(n)
            .map(|v| Permutation::new(v).unwrap())
    }

    #[test]
    fn parses_one_line() {
        assert_eq!(perm("1 4 2 7 8 5 3 6 9"), digits("142785369"));
        assert_eq!(perm("1,3,2"), digits("132"));
        assert!(perm("").is_empty());
        assert_eq!(
            parse_one_line("1 1 2"),
            Err(Error::DuplicateLetter("1".into()))
        );
        assert_eq!(
            parse_one_line("1 x 2"),
            Err(Error::InvalidToken("x".into()))
        );
        assert_eq!(
            parse_one_line("1 4 2"),
            Err(Error::OutOfRange {
                token: "4".into(),
                n: 3
            })
        );
        assert_eq!(parse_one_line("0 1"), Err(Error::InvalidToken("0".into())));
    }

    #[test]
    fn parses_cycles() {
        // hand composition: 1→9, 2→3, 3→5, 4→1, 5→2, 6→4, 7→6, 8→8, 9→7
        assert_eq!(
            parse_cycles("(5,2,3)(8)(9,7,6,4,1)").unwrap(),
            digits("935124687")
        );
        assert_eq!(
            parse_cycles("(5 2 3)(8)(9 7 6 4 1)").unwrap(),
            digits("935124687")
        );
        assert_eq!(parse_cycles("(1)(2)(3)").unwrap(), Permutation::identity(3));
        assert_eq!(parse_cycles("(2,1)").unwrap(), digits("21"));
        assert_eq!(
            parse_cycles("(2,1").unwrap_err(),
            Error::UnbalancedParens(0)
        );
        assert!(matches!(
            parse_cycles("(2,1))"),
            Err(Error::UnbalancedParens(_))
        ));
        assert!(matches!(
            parse_cycles("(2,(1)"),
            Err(Error::UnbalancedParens(_))
        ));
        assert_eq!(
            parse_cycles("(3,1)").unwrap_err(),
            Error::MissingLetter { letter: 2, n: 3 }
        );
        assert_eq!(
            parse_cycles("(2,1)(1)").unwrap_err(),
            Error::DuplicateLetter("1".into())
        );
        assert!(matches!(parse_cycles("()"), Err(Error::EmptyCycle(_))));
    }

    #[test]
    fn cycle_form_keeps_order_and_flags_canonical() {
        let cf = parse_cycle_form("(9,6,7)(8,1)(4,3,2)(5)").unwrap();
        assert!(!cf.canonical);
        assert_eq!(cf.to_string(), "(9,6,7)(8,1)(4,3,2)(5)");
        let canon = cf.canonicalize();
        assert!(canon.canonical);
        assert_eq!(canon.to_string(), "(4,3,2)(5)(8,1)(9,6,7)");
        assert!(parse_cycle_form("(1)(4,3,2)(5)").unwrap().canonical);
    }

    #[test]
    fn inverse_examples() {
        assert!(Permutation::identity(5).inverse().is_identity());
        assert_eq!(digits("21").inverse(), digits("21"));
        let p = digits("142785369");
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn inverse_is_two_sided_and_involutive() {
        for n in 0..=8 {
            for p in all(n) {
                let q = p.inverse();
                assert!(p.compose(&q).is_identity());
                assert!(q.compose(&p).is_identity());
                assert_eq!(q.inverse(), p);
            }
        }
    }

    #[test]
    fn classify_example() {
        let p = digits("135987426");
        let of = |class| {
            let mut v: Vec<Letter> = classify(&p)
                .into_iter()
                .filter(|&(_, c)| c == class)
                .map(|(x, _)| x)
                .collect();
            v.sort();
            v
        };
        assert_eq!(of(LetterClass::Peak), vec![9]);
        assert_eq!(of(LetterClass::Valley), vec![1, 2]);
        assert_eq!(of(LetterClass::DoubleAscent), vec![3, 5, 6]);
        assert_eq!(of(LetterClass::DoubleDescent), vec![4, 7, 8]);
        assert_eq!(descents(&p), vec![9, 8, 7, 4]);
    }

    #[test]
    fn classify_boundaries() {
        assert_eq!(classify(&digits("1")), vec![(1, LetterClass::Valley)]);
        let id = classify(&Permutation::identity(5));
        assert_eq!(id[0], (1, LetterClass::Valley));
        assert!(id[1..].iter().all(|&(_, c)| c == LetterClass::DoubleAscent));
        assert!(classify(&Permutation::empty()).is_empty());
    }

    #[test]
    fn one_more_valley_than_peaks() {
        for n in 1..=7 {
            for p in all(n) {
                let cls = classify(&p);
                let peaks = cls.iter().filter(|c| c.1 == LetterClass::Peak).count();
                let valleys = cls.iter().filter(|c| c.1 == LetterClass::Valley).count();
                assert_eq!(valleys, peaks + 1, "{p}");
                let s = stats(&p);
                assert_eq!(s.pk + valleys + s.dbl, n);
            }
        }
    }

    #[test]
    fn leading_descent_examples() {
        assert_eq!(leading_descents(&digits("194376528")), vec![5, 6, 7, 9]);
        assert_eq!(leading_descents(&digits("135987426")), vec![4, 7, 8, 9]);
        assert!(leading_descents(&Permutation::identity(6)).is_empty());
    }

    #[test]
    fn leading_descents_by_rescan() {
        for n in 0..=7 {
            for p in all(n) {
                let ds = descents(&p);
                let w = p.letters();
                for y in leading_descents(&p) {
                    assert!(ds.contains(&y));
                    let pos = w.iter().position(|&x| x == y).unwrap();
                    assert!(ds.iter().all(|&d| {
                        let dp = w.iter().position(|&x| x == d).unwrap();
                        dp <= pos || d < y
                    }));
                }
                // every descent not listed has a larger descent to its right
                let lead = leading_descents(&p);
                for (i, &d) in w.iter().enumerate() {
                    if ds.contains(&d) && !lead.contains(&d) {
                        assert!((i + 1..w.len()).any(|j| ds.contains(&w[j]) && w[j] > d));
                    }
                }
            }
        }
    }

    #[test]
    fn stats_examples() {
        let s = stats(&digits("135987426"));
        assert_eq!((s.des, s.pk, s.dbl), (4, 1, 6));
        // descents at positions 4, 5, 6, 7
        assert_eq!(s.maj, 22);
        let s = stats(&digits("935124687"));
        assert_eq!((s.fix, s.exc), (1, 3));
        assert_eq!(s.fix_set, vec![8]);
        let s = stats(&Permutation::identity(4));
        assert_eq!((s.des, s.maj, s.exc, s.fix), (0, 0, 0, 4));
        assert_eq!(s.fix_set, vec![1, 2, 3, 4]);
        assert_eq!(stats(&Permutation::empty()), StatRecord::default());
    }

    #[test]
    fn stat_record_invariants() {
        for n in 1..=7 {
            for p in all(n) {
                let s = stats(&p);
                assert!(s.des < n);
                assert!(s.maj >= s.des);
                assert_eq!(s.fix_set.len(), s.fix);
                assert_eq!(s.fix_set, fixed_points(&p));
            }
        }
    }

    #[test]
    fn des_and_exc_are_equidistributed() {
        for n in 1..=8 {
            let mut by_des = vec![0u64; n];
            let mut by_exc = vec![0u64; n];
            for p in all(n) {
                let s = stats(&p);
                by_des[s.des] += 1;
                by_exc[s.exc] += 1;
            }
            assert_eq!(by_des, by_exc, "n = {n}");
        }
    }

    #[test]
    fn canonical_cycles_examples() {
        assert_eq!(
            to_canonical_cycles(&digits("935124687")).to_string(),
            "(5,2,3)(8)(9,7,6,4,1)"
        );
        assert_eq!(
            to_canonical_cycles(&Permutation::identity(3)).to_string(),
            "(1)(2)(3)"
        );
        assert_eq!(to_canonical_cycles(&digits("21")).to_string(), "(2,1)");
        assert!(to_canonical_cycles(&digits("935124687")).canonical);
    }

    #[test]
    fn foata_examples() {
        assert_eq!(foata(&digits("935124687")), digits("523897641"));
        assert!(foata(&Permutation::identity(5)).is_identity());
        assert_eq!(foata(&digits("21")), digits("21"));
        assert_eq!(foata_inverse(&digits("523897641")), digits("935124687"));
        assert!(foata_inverse(&Permutation::identity(4)).is_identity());
        assert_eq!(foata_inverse(&digits("21")), digits("21"));
    }

    #[test]
    fn foata_is_a_bijection() {
        for n in 0..=8 {
            for p in all(n) {
                assert_eq!(foata_inverse(&foata(&p)), p);
                assert_eq!(foata(&foata_inverse(&p)), p);
            }
        }
    }

    #[test]
    fn cycle_form_round_trip() {
        for n in 0..=6 {
            for p in all(n) {
                let cf = to_canonical_cycles(&p);
                assert_eq!(cf.to_permutation().unwrap(), p);
                assert_eq!(parse_cycles(&cf.to_string()).unwrap(), p);
            }
        }
    }

    #[test]
    fn word_validation() {
        assert!(Word::new(vec![5, 3, 10]).is_ok());
        assert!(Word::new(vec![]).is_ok());
        assert_eq!(
            Word::new(vec![2, 2]),
            Err(Error::DuplicateLetter("2".into()))
        );
        assert!(Word::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
    }
}
