//! Valley-hopping and its cyclic and restricted variants.
//!
//! Each action is generated by commuting involutions, one per letter. A letter
//! that is a double ascent or double descent swaps the maximal runs of smaller
//! letters on its two sides; peaks and valleys stay put.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{class_at, fixed_points, foata, foata_inverse, Letter, Permutation};
use crate::rix::rix_factorize_iterative;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    /// valley-hopping `φ`
    Vh,
    /// cyclic valley-hopping `ψ = o⁻¹ ∘ φ ∘ o`
    Cvh,
    /// restricted valley-hopping, freezing rixed points and `β₁`
    Rvh,
    /// restricted cyclic valley-hopping, freezing fixed points and the first
    /// letter of `o(π)`
    Rcvh,
}

impl ActionKind {
    pub const ALL: [ActionKind; 4] = [Self::Vh, Self::Cvh, Self::Rvh, Self::Rcvh];

    pub fn name(self) -> &'static str {
        match self {
            Self::Vh => "vh",
            Self::Cvh => "cvh",
            Self::Rvh => "rvh",
            Self::Rcvh => "rcvh",
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ActionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "vh" => Ok(Self::Vh),
            "cvh" => Ok(Self::Cvh),
            "rvh" => Ok(Self::Rvh),
            "rcvh" => Ok(Self::Rcvh),
            other => Err(format!(
                "unknown action `{other}` (expected vh, cvh, rvh or rcvh)"
            )),
        }
    }
}

fn check_letter(p: &Permutation, x: Letter) -> Result<()> {
    if x == 0 || x as usize > p.len() {
        Err(Error::LetterOutOfRange {
            letter: x,
            n: p.len(),
        })
    } else {
        Ok(())
    }
}

/// `φ_x(π)`: writing `π = w₁ w₂ x w₄ w₅` with `w₂`, `w₄` the maximal runs of
/// letters smaller than `x` next to it, a double letter gives `w₁ w₄ x w₂ w₅`.
pub fn hop(p: &Permutation, x: Letter) -> Result<Permutation> {
    check_letter(p, x)?;
    Ok(hop_unchecked(p, x))
}

fn hop_unchecked(p: &Permutation, x: Letter) -> Permutation {
    let w = p.letters();
    let i = w.iter().position(|&y| y == x).expect("letter in range");
    if !class_at(w, i).is_double() {
        return p.clone();
    }
    let mut start = i;
    while start > 0 && w[start - 1] < x {
        start -= 1;
    }
    let mut end = i + 1;
    while end < w.len() && w[end] < x {
        end += 1;
    }
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[..start]);
    out.extend_from_slice(&w[i + 1..end]);
    out.push(x);
    out.extend_from_slice(&w[start..i]);
    out.extend_from_slice(&w[end..]);
    Permutation::from_vec_unchecked(out)
}

/// One generator of the chosen action. Restricted variants test membership
/// against the argument they are applied to.
fn generator(p: &Permutation, x: Letter, kind: ActionKind) -> Permutation {
    match kind {
        ActionKind::Vh => hop_unchecked(p, x),
        ActionKind::Cvh => cyclic_hop(p, x),
        ActionKind::Rvh => {
            let f = rix_factorize_iterative(p);
            if f.beta1 == Some(x) || f.is_rixed(x) {
                p.clone()
            } else {
                hop_unchecked(p, x)
            }
        }
        ActionKind::Rcvh => {
            let o = foata(p);
            if o.letters().first() == Some(&x) || p.image(x) == x {
                p.clone()
            } else {
                foata_inverse(&hop_unchecked(&o, x))
            }
        }
    }
}

fn cyclic_hop(p: &Permutation, x: Letter) -> Permutation {
    foata_inverse(&hop_unchecked(&foata(p), x))
}

/// Applies the single-letter involution of `kind` for `x`.
pub fn act(p: &Permutation, x: Letter, kind: ActionKind) -> Result<Permutation> {
    check_letter(p, x)?;
    Ok(generator(p, x, kind))
}

/// The product of the single-letter involutions for every letter of `set`.
/// They commute, so the order of `set` does not matter.
pub fn hop_set(p: &Permutation, set: &[Letter], kind: ActionKind) -> Result<Permutation> {
    for &x in set {
        check_letter(p, x)?;
    }
    Ok(set.iter().fold(p.clone(), |q, &x| generator(&q, x, kind)))
}

/// An orbit, stored sorted, so `elements[0]` is the lexicographically least
/// element and the canonical representative.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Orbit {
    pub kind: ActionKind,
    pub elements: Vec<Permutation>,
}

impl Orbit {
    fn from_set(kind: ActionKind, set: HashSet<Permutation>) -> Self {
        let mut elements: Vec<Permutation> = set.into_iter().collect();
        elements.sort_unstable();
        Self { kind, elements }
    }

    pub fn base(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Letters of `p` that are double ascents or double descents.
pub fn double_letters(p: &Permutation) -> Vec<Letter> {
    let w = p.letters();
    (0..w.len())
        .filter(|&i| class_at(w, i).is_double())
        .map(|i| w[i])
        .collect()
}

/// The orbit of `p`. Valley-hopping orbits are built directly as `φ_T(p)` over
/// all subsets `T` of the double letters; other actions by closure.
pub fn orbit(p: &Permutation, kind: ActionKind) -> Orbit {
    match kind {
        ActionKind::Vh => {
            let doubles = double_letters(p);
            let set = (0u64..1 << doubles.len())
                .map(|mask| {
                    doubles
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask >> b & 1 == 1)
                        .fold(p.clone(), |q, (_, &x)| hop_unchecked(&q, x))
                })
                .collect();
            Orbit::from_set(kind, set)
        }
        _ => orbit_by_closure(p, kind),
    }
}

/// Breadth-first closure of `{p}` under every single-letter generator.
pub fn orbit_by_closure(p: &Permutation, kind: ActionKind) -> Orbit {
    let mut seen = HashSet::from([p.clone()]);
    let mut queue = VecDeque::from([p.clone()]);
    while let Some(q) = queue.pop_front() {
        for x in 1..=q.len() as Letter {
            let r = generator(&q, x, kind);
            if !seen.contains(&r) {
                seen.insert(r.clone());
                queue.push_back(r);
            }
        }
    }
    Orbit::from_set(kind, seen)
}

/// Letters whose restricted generator is the identity at `p`: rixed points and
/// `β₁` for `Rvh`, fixed points and the first letter of `o(p)` for `Rcvh`.
pub fn frozen_letters(p: &Permutation, kind: ActionKind) -> Vec<Letter> {
    match kind {
        ActionKind::Vh | ActionKind::Cvh => Vec::new(),
        ActionKind::Rvh => {
            let f = rix_factorize_iterative(p);
            let mut v = f.rix_set.clone();
            v.extend(f.beta1.filter(|b| !f.is_rixed(*b)));
            v.sort_unstable();
            v
        }
        ActionKind::Rcvh => {
            let mut v = fixed_points(p);
            if let Some(&first) = foata(p).letters().first() {
                if !v.contains(&first) {
                    v.push(first);
                }
            }
            v.sort_unstable();
            v
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{classify, stats, LetterClass};
    use crate::rix::rix_factorize_iterative;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn digits(s: &str) -> Permutation {
        Permutation::new(s.chars().map(|c| c.to_digit(10).unwrap()).collect()).unwrap()
    }

    fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as Letter)
            .permutations(n)
            .map(|v| Permutation::new(v).unwrap())
    }

    #[test]
    fn hop_examples() {
        assert_eq!(hop(&digits("142785369"), 5).unwrap(), digits("142783569"));
        assert_eq!(hop(&digits("135987426"), 9).unwrap(), digits("135987426"));
        assert_eq!(
            hop(&digits("12"), 3),
            Err(Error::LetterOutOfRange { letter: 3, n: 2 })
        );
        assert!(hop(&digits("12"), 0).is_err());
    }

    #[test]
    fn hop_set_examples() {
        assert_eq!(
            hop_set(&digits("834279156"), &[6, 7, 8], ActionKind::Vh).unwrap(),
            digits("734289615")
        );
        assert_eq!(
            hop_set(&digits("935124687"), &[3, 7, 8], ActionKind::Cvh).unwrap(),
            digits("782134956")
        );
        for kind in ActionKind::ALL {
            assert_eq!(hop_set(&digits("3142"), &[], kind).unwrap(), digits("3142"));
        }
        assert!(hop_set(&digits("21"), &[1, 5], ActionKind::Vh).is_err());
    }

    #[test]
    fn cyclic_square_commutes() {
        // o(ψ_S(π)) = φ_S(o(π))
        let p = digits("935124687");
        let lhs = foata(&hop_set(&p, &[3, 7, 8], ActionKind::Cvh).unwrap());
        let rhs = hop_set(&foata(&p), &[3, 7, 8], ActionKind::Vh).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(rhs, digits("853296417"));
    }

    #[test]
    fn generators_are_commuting_involutions() {
        for n in 1..=6 {
            for p in all(n) {
                for kind in ActionKind::ALL {
                    for x in 1..=n as Letter {
                        let q = generator(&p, x, kind);
                        assert_eq!(generator(&q, x, kind), p, "{kind} {p} {x}");
                        for y in x + 1..=n as Letter {
                            let xy = generator(&q, y, kind);
                            let yx = generator(&generator(&p, y, kind), x, kind);
                            assert_eq!(xy, yx, "{kind} {p} {x} {y}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hopping_toggles_double_ascent_and_descent() {
        for n in 1..=6 {
            for p in all(n) {
                let before = classify(&p);
                let doubles = double_letters(&p);
                for mask in 0u32..1 << doubles.len() {
                    let set: Vec<Letter> = doubles
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &x)| x)
                        .collect();
                    let q = hop_set(&p, &set, ActionKind::Vh).unwrap();
                    let after = classify(&q);
                    let class_of =
                        |cls: &[(Letter, LetterClass)], x| cls.iter().find(|c| c.0 == x).unwrap().1;
                    for &x in &set {
                        let a = class_of(&before, x);
                        let b = class_of(&after, x);
                        assert_eq!(
                            a == LetterClass::DoubleAscent,
                            b == LetterClass::DoubleDescent
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let o = orbit(&digits("123"), ActionKind::Vh);
        assert_eq!(
            o.elements,
            vec![digits("123"), digits("213"), digits("312"), digits("321")]
        );
        assert_eq!(o.base(), &digits("123"));
        for kind in ActionKind::ALL {
            assert_eq!(orbit(&digits("1"), kind).elements, vec![digits("1")]);
            assert_eq!(orbit(&Permutation::empty(), kind).len(), 1);
        }
    }

    #[test]
    fn direct_and_closure_orbits_agree() {
        for n in 1..=6 {
            for p in all(n) {
                let direct = orbit(&p, ActionKind::Vh);
                assert_eq!(direct, orbit_by_closure(&p, ActionKind::Vh));
                assert_eq!(direct.len(), 1 << stats(&p).dbl);
            }
        }
    }

    #[test]
    fn vh_orbit_sizes_are_powers_of_two() {
        for n in 1..=7 {
            for p in all(n) {
                assert_eq!(orbit(&p, ActionKind::Vh).len(), 1 << stats(&p).dbl);
            }
        }
    }

    #[test]
    fn restricted_actions_keep_their_frozen_data() {
        for n in 1..=6 {
            for p in all(n) {
                let f = rix_factorize_iterative(&p);
                let fix = fixed_points(&p);
                for mask in 0u32..1 << n {
                    let set: Vec<Letter> = (1..=n as Letter)
                        .filter(|x| mask >> (x - 1) & 1 == 1)
                        .collect();
                    let q = hop_set(&p, &set, ActionKind::Rvh).unwrap();
                    let g = rix_factorize_iterative(&q);
                    assert_eq!((g.beta1, &g.rix_set), (f.beta1, &f.rix_set));
                    let q = hop_set(&p, &set, ActionKind::Rcvh).unwrap();
                    assert_eq!(fixed_points(&q), fix);
                }
            }
        }
    }

    // A non-rixed β₁ is a double descent and is frozen as well, which costs one
    // more factor of two than the rixed points alone.
    #[test]
    fn restricted_orbit_sizes() {
        for n in 1..=7 {
            for p in all(n) {
                let f = rix_factorize_iterative(&p);
                let dbl = stats(&p).dbl;
                let free = if f.is_rixed(f.beta1.unwrap()) {
                    dbl + 1 - f.rix()
                } else {
                    dbl - f.rix() - 1
                };
                assert_eq!(orbit(&p, ActionKind::Rvh).len(), 1 << free, "{p}");
                let frozen_doubles = frozen_letters(&p, ActionKind::Rvh)
                    .into_iter()
                    .filter(|x| double_letters(&p).contains(x))
                    .count();
                assert_eq!(free, dbl - frozen_doubles);
            }
        }
    }

    #[test]
    fn des_distribution_on_each_orbit() {
        for n in 1..=7 {
            let mut seen = HashSet::new();
            for p in all(n) {
                if seen.contains(&p) {
                    continue;
                }
                let o = orbit(&p, ActionKind::Vh);
                let mut dist = vec![0u64; n];
                for q in &o.elements {
                    dist[stats(q).des] += 1;
                    seen.insert(q.clone());
                }
                let k = dist.iter().position(|&c| c > 0).unwrap();
                let m = n - 1 - 2 * k;
                let mut expected = vec![0u64; n];
                for j in 0..=m {
                    expected[k + j] = binomial(m, j);
                }
                assert_eq!(dist, expected, "{p}");
            }
        }
    }

    fn binomial(m: usize, j: usize) -> u64 {
        (0..j).fold(1u64, |acc, i| acc * (m - i) as u64 / (i + 1) as u64)
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (1..=max)
            .prop_flat_map(|n| Just((1..=n as Letter).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn hop_set_is_order_independent(
            p in arb_perm(12),
            seed in prop::collection::vec(any::<u32>(), 0..12),
            kind in prop::sample::select(ActionKind::ALL.to_vec()),
        ) {
            let n = p.len() as Letter;
            let mut set: Vec<Letter> = seed.iter().map(|s| s % n + 1).collect();
            set.sort_unstable();
            set.dedup();
            let forward = hop_set(&p, &set, kind).unwrap();
            set.reverse();
            prop_assert_eq!(hop_set(&p, &set, kind).unwrap(), forward.clone());
            prop_assert_eq!(hop_set(&forward, &set, kind).unwrap(), p);
        }
    }
}
