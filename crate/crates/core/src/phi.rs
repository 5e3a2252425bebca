//! The Lin–Zeng bijection `Φ`, which carries descents to excedances and
//! rixed points to fixed points.
//!
//! With rix-factorization `π = α₁⋯α_k β` and `δ` the non-rixed part of `β`,
//! `Φ(π)` has cycles `α̃₁ ⋯ α̃_k δ̃ (r₁)⋯(r_m)`, where `α̃_i` is `α_i` read
//! backwards, `δ̃ = (d₁, d_l, …, d₂)`, and the `r_j` are the rixed points.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{to_canonical_cycles, CycleForm, Letter, Permutation};
use crate::rix::rix_factorize_iterative;

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct PhiCycleDecomposition {
    /// `α̃₁, …, α̃_k`, heads strictly decreasing.
    pub alpha_cycles: Vec<Vec<Letter>>,
    /// `δ̃`, absent when every letter of `β` is rixed.
    pub delta_cycle: Option<Vec<Letter>>,
    /// The rixed points, increasing; each is a 1-cycle.
    pub fixed_cycles: Vec<Letter>,
    /// `mu_blocks[i]` is `μ_i` for `0 ≤ i ≤ k`.
    pub mu_blocks: Vec<Vec<Letter>>,
}

impl PhiCycleDecomposition {
    /// Cycles in the order `α̃₁ ⋯ α̃_k δ̃ (r₁)⋯(r_m)`.
    pub fn lin_zeng_order(&self) -> CycleForm {
        let mut cycles = self.alpha_cycles.clone();
        cycles.extend(self.delta_cycle.clone());
        cycles.extend(self.fixed_cycles.iter().map(|&x| vec![x]));
        CycleForm::new(cycles)
    }

    /// Cycles in the order `δ̃ μ_k α̃_k μ_{k−1} ⋯ μ₁ α̃₁ μ₀`, which is the
    /// canonical cycle representation of `Φ(π)`.
    pub fn canonical_rearrangement(&self) -> CycleForm {
        let singletons = |block: &Vec<Letter>| block.iter().map(|&x| vec![x]).collect::<Vec<_>>();
        let k = self.alpha_cycles.len();
        let mut cycles: Vec<Vec<Letter>> = self.delta_cycle.iter().cloned().collect();
        for i in (1..=k).rev() {
            cycles.extend(singletons(&self.mu_blocks[i]));
            cycles.push(self.alpha_cycles[i - 1].clone());
        }
        cycles.extend(singletons(&self.mu_blocks[0]));
        CycleForm::new(cycles)
    }

    pub fn to_permutation(&self) -> Permutation {
        self.lin_zeng_order()
            .to_permutation()
            .expect("Φ cycles partition the letters")
    }
}

pub fn phi_cycles(p: &Permutation) -> PhiCycleDecomposition {
    let f = rix_factorize_iterative(p);
    let alpha_cycles: Vec<Vec<Letter>> = f
        .alphas()
        .map(|a| a.iter().rev().copied().collect())
        .collect();
    let delta = f.delta();
    let delta_cycle = (!delta.is_empty()).then(|| {
        let mut c = vec![delta[0]];
        c.extend(delta[1..].iter().rev());
        c
    });
    let fixed_cycles = f.rix_set.clone();
    let mu_blocks = mu_blocks(&alpha_cycles, delta_cycle.as_deref(), &fixed_cycles);
    PhiCycleDecomposition {
        alpha_cycles,
        delta_cycle,
        fixed_cycles,
        mu_blocks,
    }
}

/// Each fixed point goes to the block right before the first `α̃` whose head
/// exceeds it; `μ₀` takes the ones beyond `α̃₁`.
fn mu_blocks(
    alpha_cycles: &[Vec<Letter>],
    delta_cycle: Option<&[Letter]>,
    fixed: &[Letter],
) -> Vec<Vec<Letter>> {
    let k = alpha_cycles.len();
    let mut blocks = vec![Vec::new(); k + 1];
    for &x in fixed {
        debug_assert!(delta_cycle.is_none_or(|d| d[0] < x));
        let slot = (1..=k)
            .rev()
            .find(|&i| x < alpha_cycles[i - 1][0])
            .unwrap_or(0);
        blocks[slot].push(x);
    }
    blocks
}

pub fn phi(p: &Permutation) -> Permutation {
    phi_cycles(p).to_permutation()
}

/// Rebuilds `π` from `Φ(π)`.
///
/// Fixed points become the rixed suffix and the other cycles, by decreasing
/// head, become the `α` factors. The cycle with the smallest head may instead
/// be `δ̃`; both readings are built and the one that maps forward to `s` wins.
pub fn phi_inverse(s: &Permutation) -> Result<Permutation> {
    let canon = to_canonical_cycles(s);
    let (mut long, fixed): (Vec<Vec<Letter>>, Vec<Vec<Letter>>) =
        canon.cycles.into_iter().partition(|c| c.len() > 1);
    long.reverse();
    let fixed: Vec<Letter> = fixed.into_iter().map(|c| c[0]).collect();

    let alpha_of = |c: &Vec<Letter>| c.iter().rev().copied().collect::<Vec<_>>();
    let mut candidates = Vec::with_capacity(2);

    let mut without_delta: Vec<Letter> = long.iter().flat_map(alpha_of).collect();
    without_delta.extend(&fixed);
    candidates.push(without_delta);

    if let Some((delta, alphas)) = long.split_last() {
        let mut with_delta: Vec<Letter> = alphas.iter().flat_map(alpha_of).collect();
        with_delta.push(delta[0]);
        with_delta.extend(delta[1..].iter().rev());
        with_delta.extend(&fixed);
        candidates.push(with_delta);
    }

    candidates
        .into_iter()
        .map(Permutation::from_vec_unchecked)
        .find(|pi| phi(pi) == *s)
        .ok_or_else(|| Error::PhiReconstruction(s.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{
        all_permutations as all, classify, foata, parse_cycle_form, parse_cycles, stats,
        LetterClass,
    };
    use std::collections::HashSet;

    fn example() -> Permutation {
        Permutation::new(vec![7, 6, 9, 1, 8, 4, 2, 3, 5, 10, 11]).unwrap()
    }

    #[test]
    fn worked_example() {
        let d = phi_cycles(&example());
        assert_eq!(d.alpha_cycles, vec![vec![9, 6, 7], vec![8, 1]]);
        assert_eq!(d.delta_cycle, Some(vec![4, 3, 2]));
        assert_eq!(d.fixed_cycles, vec![5, 10, 11]);
        assert_eq!(
            d.lin_zeng_order().to_string(),
            "(9,6,7)(8,1)(4,3,2)(5)(10)(11)"
        );
        assert_eq!(
            d.canonical_rearrangement().to_string(),
            "(4,3,2)(5)(8,1)(9,6,7)(10)(11)"
        );
        assert_eq!(d.mu_blocks, vec![vec![10, 11], vec![], vec![5]]);
        let expected = parse_cycles("(9,6,7)(8,1)(4,3,2)(5)(10)(11)").unwrap();
        assert_eq!(phi(&example()), expected);
        assert_eq!(phi_inverse(&expected).unwrap(), example());
    }

    #[test]
    fn identity_maps_to_identity() {
        for n in 0..=6 {
            let id = Permutation::identity(n);
            let d = phi_cycles(&id);
            assert!(d.alpha_cycles.is_empty());
            assert!(d.delta_cycle.is_none());
            assert_eq!(d.fixed_cycles, (1..=n as Letter).collect::<Vec<_>>());
            assert!(phi(&id).is_identity());
            assert!(phi_inverse(&id).unwrap().is_identity());
        }
    }

    #[test]
    fn canonical_rearrangement_is_canonical() {
        for n in 0..=7 {
            for p in all(n) {
                let d = phi_cycles(&p);
                let canon = d.canonical_rearrangement();
                assert!(canon.canonical, "{p}: {canon}");
                assert_eq!(canon, to_canonical_cycles(&phi(&p)));
                assert_eq!(
                    d.mu_blocks.iter().map(Vec::len).sum::<usize>(),
                    d.fixed_cycles.len()
                );
            }
        }
    }

    #[test]
    fn decomposition_invariants() {
        for n in 1..=7 {
            for p in all(n) {
                let d = phi_cycles(&p);
                let f = rix_factorize_iterative(&p);
                let heads: Vec<Letter> = d.alpha_cycles.iter().map(|c| c[0]).collect();
                assert!(heads.windows(2).all(|w| w[0] > w[1]));
                for c in d.alpha_cycles.iter().chain(d.delta_cycle.iter()) {
                    assert!(c.iter().all(|&x| x <= c[0]));
                }
                match &d.delta_cycle {
                    Some(delta) => {
                        assert!(delta.len() >= 2, "{p}");
                        assert_eq!(Some(delta[0]), f.beta1);
                        assert!(heads.iter().all(|&h| h > delta[0]));
                    }
                    None => assert!(f.is_rixed(f.beta1.unwrap())),
                }
            }
        }
    }

    #[test]
    fn transports_des_to_exc_and_rix_to_fix() {
        for n in 0..=8 {
            let mut image = HashSet::new();
            for p in all(n) {
                let s = phi(&p);
                let st = stats(&s);
                let f = rix_factorize_iterative(&p);
                assert_eq!(stats(&p).des, st.exc, "{p}");
                assert_eq!(f.rix_set, st.fix_set, "{p}");
                image.insert(s);
            }
            assert_eq!(image.len(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn inverse_round_trips() {
        for n in 0..=8 {
            for p in all(n) {
                assert_eq!(phi_inverse(&phi(&p)).unwrap(), p);
            }
        }
    }

    #[test]
    fn preserves_letter_classes_under_foata() {
        for n in 1..=7 {
            for p in all(n) {
                let image = classify(&foata(&phi(&p)));
                for (x, c) in classify(&p) {
                    let d = image.iter().find(|e| e.0 == x).unwrap().1;
                    match c {
                        LetterClass::Peak | LetterClass::Valley => assert_eq!(c, d, "{p} {x}"),
                        _ => assert!(d.is_double(), "{p} {x}"),
                    }
                }
            }
        }
    }

    #[test]
    fn lin_zeng_order_is_not_canonical_in_general() {
        let cf = parse_cycle_form("(9,6,7)(8,1)(4,3,2)(5)(10)(11)").unwrap();
        assert_eq!(phi_cycles(&example()).lin_zeng_order(), cf);
        assert!(!cf.canonical);
    }
}
