//! Rixed points and the rix-factorization.
//!
//! Three independent routes to `Rix(π)` live here:
//!
//! * the recursion on the position of the largest letter ([`rix_recursive`],
//!   [`rix_set_recursive`]),
//! * the factorization obtained by repeatedly splitting at the largest descent
//!   ([`rix_factorize_recursive`]) and its linear-time iterative counterpart
//!   driven by a shrinking *valid factor* ([`rix_factorize_iterative`]),
//! * the characterization through the maximal descending ridge
//!   ([`rixed_points_by_characterization`]).
//!
//! Letters are treated as having `∞` on both sides, so the first letter is
//! never a peak and the last letter is always an ascent.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{
    class_at, is_descent_at, leading_descent_mask, write_compact, write_spaced, Letter,
    LetterClass, Letters, Permutation, Word,
};

/// `π = α₁⋯α_k β` together with the rixed points.
///
/// The factors are stored as one word plus boundaries, so a factorization
/// with many short factors costs two allocations rather than one per factor.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RixFactorization {
    letters: Vec<Letter>,
    /// Exclusive end of each `α_i` in `letters`.
    alpha_ends: Vec<usize>,
    /// Sorted increasingly; always a suffix of the one-line word.
    pub rix_set: Vec<Letter>,
    /// First letter of `β`; `None` only for the empty word.
    pub beta1: Option<Letter>,
}

impl RixFactorization {
    fn new(letters: &[Letter], alpha_ends: Vec<usize>, rix_set: Vec<Letter>) -> Self {
        let beta_start = alpha_ends.last().copied().unwrap_or(0);
        Self {
            beta1: letters.get(beta_start).copied(),
            letters: letters.to_vec(),
            alpha_ends,
            rix_set,
        }
    }

    pub fn rix(&self) -> usize {
        self.rix_set.len()
    }

    pub fn is_rixed(&self, x: Letter) -> bool {
        self.rix_set.binary_search(&x).is_ok()
    }

    pub fn num_alphas(&self) -> usize {
        self.alpha_ends.len()
    }

    pub fn alphas(&self) -> impl ExactSizeIterator<Item = &[Letter]> + '_ {
        (0..self.alpha_ends.len()).map(|i| {
            let lo = if i == 0 { 0 } else { self.alpha_ends[i - 1] };
            &self.letters[lo..self.alpha_ends[i]]
        })
    }

    pub fn beta(&self) -> &[Letter] {
        &self.letters[self.alpha_ends.last().copied().unwrap_or(0)..]
    }

    /// `α₁, …, α_k, β`.
    pub fn factors(&self) -> impl Iterator<Item = &[Letter]> + '_ {
        self.alphas().chain(std::iter::once(self.beta()))
    }

    /// The non-rixed part `δ` of `β`.
    pub fn delta(&self) -> &[Letter] {
        let b = self.beta();
        &b[..b.len() - self.rix_set.len()]
    }

    /// Concatenation of all factors; equals the factorized word.
    pub fn concat(&self) -> &[Letter] {
        &self.letters
    }
}

/// Structured form: `{alphas, beta, rix_set, beta1}`.
impl Serialize for RixFactorization {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RixFactorization", 4)?;
        st.serialize_field("alphas", &self.alphas().collect::<Vec<_>>())?;
        st.serialize_field("beta", self.beta())?;
        st.serialize_field("rix_set", &self.rix_set)?;
        st.serialize_field("beta1", &self.beta1)?;
        st.end()
    }
}

/// Factors joined by `|`, e.g. `238|16|457`.
impl fmt::Display for RixFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.letters.iter().all(|&x| x < 10);
        for (i, w) in self.factors().enumerate() {
            if i > 0 {
                f.write_str(if compact { "|" } else { " | " })?;
            }
            if compact {
                write_compact(f, w)?;
            } else {
                write_spaced(f, w)?;
            }
        }
        Ok(())
    }
}

/// `rix(w)` by recursion on the position of the largest letter.
pub fn rix_recursive<W: Letters + ?Sized>(w: &W) -> usize {
    rix_set_recursive(w).len()
}

/// `Rix(w)`: empty when the maximum leads a word of length ≥ 2, add the last
/// letter and drop it when the maximum is last, otherwise recurse on the part
/// right of the maximum.
pub fn rix_set_recursive<W: Letters + ?Sized>(w: &W) -> Vec<Letter> {
    let mut rest = w.letters();
    let mut out = Vec::new();
    while let Some((i, _)) = rest.iter().enumerate().max_by_key(|&(_, &x)| x) {
        let k = rest.len();
        if i == k - 1 {
            out.push(rest[i]);
            rest = &rest[..k - 1];
        } else if i == 0 {
            break;
        } else {
            rest = &rest[i + 1..];
        }
    }
    out.sort_unstable();
    out
}

/// The factorization by repeated splitting at the largest descent, with the
/// rixed points read off as the letters of the maximal increasing suffix that
/// are not smaller than `β₁`.
pub fn rix_factorize_recursive<W: Letters + ?Sized>(p: &W) -> RixFactorization {
    let full = p.letters();
    let mut w = full;
    let mut alpha_ends = Vec::new();
    loop {
        let largest = (0..w.len())
            .filter(|&i| is_descent_at(w, i))
            .max_by_key(|&i| w[i]);
        match largest {
            Some(i) if i > 0 => {
                alpha_ends.push(full.len() - w.len() + i + 1);
                w = &w[i + 1..];
            }
            _ => break,
        }
    }
    let rix_set = match w.first() {
        Some(&b) => increasing_suffix(full)
            .iter()
            .copied()
            .filter(|&x| x >= b)
            .collect(),
        None => Vec::new(),
    };
    RixFactorization::new(full, alpha_ends, rix_set)
}

fn increasing_suffix(w: &[Letter]) -> &[Letter] {
    if w.is_empty() {
        return w;
    }
    let mut j = w.len() - 1;
    while j > 0 && w[j - 1] < w[j] {
        j -= 1;
    }
    &w[j..]
}

/// The window `π_l ⋯ π_r` (0-based, inclusive) of the iterative algorithm.
/// Everything right of `r` is an ascending run.
struct ValidFactor {
    l: usize,
    r: usize,
}

/// Peak and ascent flags per position, two bits each, packed so the scan's
/// random lookups stay in cache for large inputs.
struct ClassBits {
    words: Vec<u64>,
}

impl ClassBits {
    const PEAK: u64 = 1;
    const ASCENT: u64 = 2;

    fn new(w: &[Letter]) -> Self {
        let n = w.len();
        let mut words = vec![0u64; n.div_ceil(32)];
        for i in 0..n {
            let ascent = i + 1 == n || w[i] < w[i + 1];
            let peak = i > 0 && i + 1 < n && w[i - 1] < w[i] && w[i + 1] < w[i];
            let bits = (u64::from(peak) * Self::PEAK) | (u64::from(ascent) * Self::ASCENT);
            words[i / 32] |= bits << (2 * (i % 32));
        }
        Self { words }
    }

    fn get(&self, i: usize, flag: u64) -> bool {
        self.words[i / 32] >> (2 * (i % 32)) & flag != 0
    }
}

/// Scans letters in decreasing order, given as `(letter, position in w)`.
fn valid_factor_scan(
    w: &[Letter],
    order: impl Iterator<Item = (Letter, usize)>,
) -> RixFactorization {
    let n = w.len();
    if n == 0 {
        return RixFactorization::default();
    }
    let bits = ClassBits::new(w);
    let mut vf = ValidFactor { l: 0, r: n - 1 };
    let mut alpha_ends = Vec::new();
    let mut rixed = Vec::new();
    for (x, i) in order {
        if i < vf.l || i > vf.r {
            continue;
        }
        if bits.get(i, ClassBits::PEAK) {
            alpha_ends.push(i + 1);
            vf.l = i + 1;
        } else if i == vf.l {
            if bits.get(i, ClassBits::ASCENT) {
                rixed.push(x);
            }
            rixed.reverse();
            return RixFactorization::new(w, alpha_ends, rixed);
        } else {
            rixed.push(x);
            vf.r = i - 1;
            // new right boundary is an ascent; the run after it was already one
            debug_assert!(
                w[vf.r] < w[vf.r + 1],
                "valid factor boundary is not an ascent"
            );
        }
    }
    unreachable!("valid factor scan ended without reaching its first letter")
}

/// Letters per block when ordering positions by letter.
const LETTER_BLOCK: usize = 4096;

/// `(x, position of x)` for `x = n, n−1, …, 1`: the inverse permutation, read
/// backwards.
///
/// Writing the inverse directly scatters one store per letter over the whole
/// table. Instead, pairs are first routed into blocks of consecutive letters
/// (a permutation fills each block exactly), then each block is resolved in a
/// buffer small enough to stay in cache.
fn positions_descending(w: &[Letter]) -> impl Iterator<Item = (Letter, usize)> + '_ {
    let n = w.len();
    let blocks = n.div_ceil(LETTER_BLOCK);
    let mut staged = vec![0u64; n];
    let mut fill: Vec<usize> = (0..blocks).map(|b| b * LETTER_BLOCK).collect();
    for (i, &x) in w.iter().enumerate() {
        let slot = &mut fill[(x as usize - 1) / LETTER_BLOCK];
        staged[*slot] = u64::from(x) << 32 | i as u64;
        *slot += 1;
    }
    (0..blocks).rev().flat_map(move |b| {
        let lo = b * LETTER_BLOCK;
        let hi = (lo + LETTER_BLOCK).min(n);
        let mut local = vec![0usize; hi - lo];
        for &pair in &staged[lo..hi] {
            local[(pair >> 32) as usize - 1 - lo] = pair as u32 as usize;
        }
        local
            .into_iter()
            .enumerate()
            .rev()
            .map(move |(k, i)| ((lo + k + 1) as Letter, i))
    })
}

/// The linear-time iterative algorithm on a permutation.
pub fn rix_factorize_iterative(p: &Permutation) -> RixFactorization {
    valid_factor_scan(p.letters(), positions_descending(p.letters()))
}

/// The iterative algorithm on an arbitrary word of distinct letters. Position
/// lookup goes through a sort, so this is `O(n log n)`.
pub fn rix_factorize_word<W: Letters + ?Sized>(w: &W) -> RixFactorization {
    let letters = w.letters();
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_unstable_by(|&a, &b| letters[b].cmp(&letters[a]));
    valid_factor_scan(letters, order.into_iter().map(|i| (letters[i], i)))
}

pub fn rix_set(p: &Permutation) -> Vec<Letter> {
    rix_factorize_iterative(p).rix_set
}

pub fn rix(p: &Permutation) -> usize {
    rix_factorize_iterative(p).rix()
}

pub fn beta1(p: &Permutation) -> Result<Letter> {
    rix_factorize_iterative(p)
        .beta1
        .ok_or(Error::EmptyPermutation)
}

/// The maximal descending ridge `∞π₁⋯π_i`. An empty prefix is the ridge `∞`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Ridge {
    pub prefix: Word,
}

impl Ridge {
    pub fn len(&self) -> usize {
        self.prefix.as_slice().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for Ridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("∞")?;
        if !self.prefix.as_slice().iter().all(|&x| x < 10) && !self.is_empty() {
            f.write_str(" ")?;
        }
        write_compact(f, self.prefix.as_slice())
    }
}

/// `∞` counts as a leading descent in front of `π₁`. The ridge ends at the
/// left member of the leftmost pair of adjacent leading descents, or at the
/// rightmost descent when there is no such pair.
pub fn maximal_descending_ridge(p: &Permutation) -> Ridge {
    let w = p.letters();
    let lead = leading_descent_mask(w);
    let end = if lead.first() == Some(&true) {
        0
    } else if let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| lead[i] && lead[i + 1]) {
        i + 1
    } else {
        (0..w.len())
            .rev()
            .find(|&i| is_descent_at(w, i))
            .map_or(0, |i| i + 1)
    };
    Ridge {
        prefix: Word::from_vec_unchecked(w[..end].to_vec()),
    }
}

/// Rixed points as the letters `y` that are either a double ascent, or the
/// rightmost valley sitting first or right after a peak, and for which no
/// larger letter follows the ridge or appears as a peak to the right of `y`.
pub fn rixed_points_by_characterization(p: &Permutation) -> Vec<Letter> {
    let w = p.letters();
    let n = w.len();
    let classes: Vec<LetterClass> = (0..n).map(|i| class_at(w, i)).collect();
    let rightmost_valley = (0..n).rev().find(|&i| classes[i] == LetterClass::Valley);
    let ridge = maximal_descending_ridge(p);
    let after_ridge = w.get(ridge.len()).copied();

    // largest peak strictly right of each position
    let mut peak_right = vec![0; n];
    let mut best = 0;
    for i in (0..n).rev() {
        peak_right[i] = best;
        if classes[i] == LetterClass::Peak {
            best = best.max(w[i]);
        }
    }

    let mut out: Vec<Letter> = (0..n)
        .filter(|&i| {
            let shape_ok = match classes[i] {
                LetterClass::DoubleAscent => true,
                LetterClass::Valley => {
                    Some(i) == rightmost_valley && (i == 0 || classes[i - 1] == LetterClass::Peak)
                }
                _ => false,
            };
            let y = w[i];
            shape_ok && after_ridge.is_none_or(|a| a <= y) && peak_right[i] < y
        })
        .map(|i| w[i])
        .collect();
    out.sort_unstable();
    out
}
