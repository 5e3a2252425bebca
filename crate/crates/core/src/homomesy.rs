//! Orbit averages, homomesy checks, and the Eulerian-polynomial side of the
//! story. All averages are exact rationals.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hop::{hop, orbit, ActionKind, Orbit};
use crate::perm::{all_permutations, stats, Letter, Permutation};
use crate::phi::phi;
use crate::rix::rix_factorize_iterative;

pub type Rational = Ratio<i64>;

/// A named integer statistic on permutations.
#[derive(Clone, Copy)]
pub struct Statistic {
    name: &'static str,
    eval: fn(&Permutation) -> i64,
}

impl Statistic {
    pub const fn new(name: &'static str, eval: fn(&Permutation) -> i64) -> Self {
        Self { name, eval }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn eval(&self, p: &Permutation) -> i64 {
        (self.eval)(p)
    }
}

impl fmt::Debug for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Statistic").field(&self.name).finish()
    }
}

const BUILTINS: [Statistic; 7] = [
    Statistic::new("des", |p| stats(p).des as i64),
    Statistic::new("exc", |p| stats(p).exc as i64),
    Statistic::new("fix", |p| stats(p).fix as i64),
    Statistic::new("maj", |p| stats(p).maj as i64),
    Statistic::new("rix", |p| rix_factorize_iterative(p).rix() as i64),
    Statistic::new("pk", |p| stats(p).pk as i64),
    Statistic::new("dbl", |p| stats(p).dbl as i64),
];

pub fn builtin_statistics() -> &'static [Statistic] {
    &BUILTINS
}

pub fn statistic(name: &str) -> Option<Statistic> {
    BUILTINS.iter().find(|s| s.name == name).copied()
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub orbit: Orbit,
    /// Statistic values, aligned with `orbit.elements`.
    pub values: Vec<i64>,
    pub average: Rational,
}

pub fn orbit_report(orbit: Orbit, st: &Statistic) -> Result<OrbitReport> {
    if orbit.is_empty() {
        return Err(Error::EmptyOrbit);
    }
    let values: Vec<i64> = orbit.elements.iter().map(|p| st.eval(p)).collect();
    let average = Rational::new(values.iter().sum(), values.len() as i64);
    Ok(OrbitReport {
        orbit,
        values,
        average,
    })
}

pub fn orbit_average(orbit: &Orbit, st: &Statistic) -> Result<Rational> {
    if orbit.is_empty() {
        return Err(Error::EmptyOrbit);
    }
    let total: i64 = orbit.elements.iter().map(|p| st.eval(p)).sum();
    Ok(Rational::new(total, orbit.len() as i64))
}

/// All orbits of `kind` on `S_n`, ordered by their least element.
///
/// Each permutation computes its own orbit and keeps it only when it is the
/// least element, so workers need no shared visited set and the result does
/// not depend on how the scan is split.
pub fn orbit_partition(n: usize, kind: ActionKind) -> Vec<Orbit> {
    let perms: Vec<Permutation> = all_permutations(n).collect();
    perms
        .par_iter()
        .filter_map(|p| {
            let o = orbit(p, kind);
            (o.base() == p).then_some(o)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Homomesic {
        constant: Rational,
    },
    /// Two orbits, by canonical representative, with different averages.
    Counterexample {
        first: (Permutation, Rational),
        second: (Permutation, Rational),
    },
}

impl Verdict {
    pub fn is_homomesic(&self) -> bool {
        matches!(self, Self::Homomesic { .. })
    }
}

#[derive(Clone, Debug)]
pub struct HomomesyReport {
    pub action: ActionKind,
    pub statistic: &'static str,
    pub n: usize,
    pub orbits: Vec<OrbitReport>,
    pub verdict: Verdict,
}

pub fn verify_homomesy(n: usize, kind: ActionKind, st: &Statistic) -> HomomesyReport {
    let orbits: Vec<OrbitReport> = orbit_partition(n, kind)
        .into_iter()
        .map(|o| orbit_report(o, st).expect("orbits are nonempty"))
        .collect();
    let first = &orbits[0];
    let verdict = match orbits.iter().find(|r| r.average != first.average) {
        None => Verdict::Homomesic {
            constant: first.average,
        },
        Some(other) => Verdict::Counterexample {
            first: (first.orbit.base().clone(), first.average),
            second: (other.orbit.base().clone(), other.average),
        },
    };
    HomomesyReport {
        action: kind,
        statistic: st.name,
        n,
        orbits,
        verdict,
    }
}

/// `{(π, x) : π ∈ Π, x ∈ Rix(π)}` for a valley-hopping orbit `Π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RixPairSet {
    pub pairs: Vec<(Permutation, Letter)>,
}

pub fn rix_pair_set(o: &Orbit) -> RixPairSet {
    let pairs = o
        .elements
        .iter()
        .flat_map(|p| {
            rix_factorize_iterative(p)
                .rix_set
                .into_iter()
                .map(move |x| (p.clone(), x))
        })
        .collect();
    RixPairSet { pairs }
}

/// Checks that `(π, x) ↦ φ_x(π)` is a bijection from the rix pairs of `o` onto
/// `o`, and that `x` is recovered as `β₁` of the image.
pub fn verify_pair_bijection(o: &Orbit) -> bool {
    let pairs = rix_pair_set(o);
    if pairs.pairs.len() != o.len() {
        return false;
    }
    let mut images = HashSet::with_capacity(o.len());
    pairs.pairs.iter().all(|(p, x)| {
        let q = hop(p, *x).expect("rixed points are letters of p");
        let recovered = rix_factorize_iterative(&q).beta1 == Some(*x);
        recovered && o.contains(&q) && images.insert(q)
    })
}

/// The first orbit whose `Φ`-image is not an orbit of the cyclic counterpart,
/// as `(action, canonical representative)`.
pub fn phi_orbit_mismatch(n: usize) -> Option<(ActionKind, Permutation)> {
    [
        (ActionKind::Vh, ActionKind::Cvh),
        (ActionKind::Rvh, ActionKind::Rcvh),
    ]
    .into_iter()
    .find_map(|(src, dst)| {
        orbit_partition(n, src)
            .into_par_iter()
            .find_first(|o| {
                let mut image: Vec<Permutation> = o.elements.iter().map(phi).collect();
                image.sort_unstable();
                image != orbit(&phi(o.base()), dst).elements
            })
            .map(|o| (src, o.base().clone()))
    })
}

pub fn verify_phi_orbit_correspondence(n: usize) -> bool {
    phi_orbit_mismatch(n).is_none()
}

/// Univariate polynomial with exact integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct Polynomial {
    coeffs: Vec<i64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `t^k (1 + t)^m`.
    pub fn gamma_basis(k: usize, m: usize) -> Self {
        let mut coeffs = vec![0; k + m + 1];
        let mut binom = 1i64;
        for j in 0..=m {
            coeffs[k + j] = binom;
            binom = binom * (m - j) as i64 / (j + 1) as i64;
        }
        Self::new(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

fn distribution(n: usize, st: impl Fn(&Permutation) -> usize) -> Polynomial {
    let mut coeffs = vec![0i64; n.max(1)];
    for p in all_permutations(n) {
        coeffs[st(&p)] += 1;
    }
    Polynomial::new(coeffs)
}

/// `A_n(t)`, counted once by descents and once by excedances.
pub fn eulerian_polynomial(n: usize) -> Polynomial {
    let by_des = distribution(n, |p| stats(p).des);
    let by_exc = distribution(n, |p| stats(p).exc);
    assert_eq!(by_des, by_exc, "des and exc disagree on S_{n}");
    by_des
}

/// Coefficients `γ_k` with `p = Σ γ_k t^k (1+t)^{n−1−2k}`, peeled off from the
/// lowest degree upwards.
pub fn gamma_expansion(p: &Polynomial, n: usize) -> Result<Vec<i64>> {
    if n == 0 || p.degree().is_some_and(|d| d > n - 1) {
        return Err(Error::NotInGammaBasis { n });
    }
    let mut rest = p.coeffs.clone();
    rest.resize(n, 0);
    let mut gammas = Vec::with_capacity((n - 1) / 2 + 1);
    for k in 0..=(n - 1) / 2 {
        let g = rest[k];
        for (j, c) in Polynomial::gamma_basis(k, n - 1 - 2 * k)
            .coeffs
            .iter()
            .enumerate()
        {
            rest[j] -= g * c;
        }
        gammas.push(g);
    }
    if rest.iter().any(|&c| c != 0) {
        return Err(Error::NotInGammaBasis { n });
    }
    Ok(gammas)
}

/// Distribution of `des` over one orbit.
pub fn des_polynomial(o: &Orbit) -> Polynomial {
    let n = o.base().len();
    let mut coeffs = vec![0i64; n.max(1)];
    for p in &o.elements {
        coeffs[stats(p).des] += 1;
    }
    Polynomial::new(coeffs)
}

/// Counts valley-hopping orbits by `k = min des`, after checking that every
/// orbit's descent polynomial is exactly `t^k(1+t)^{n−1−2k}`. On failure the
/// offending orbit's representative is returned.
pub fn orbit_gamma_counts(n: usize) -> std::result::Result<Vec<i64>, Permutation> {
    let mut counts = vec![0i64; n.saturating_sub(1) / 2 + 1];
    for o in orbit_partition(n, ActionKind::Vh) {
        let poly = des_polynomial(&o);
        let k = poly.coeffs.iter().position(|&c| c != 0).unwrap_or(0);
        if 2 * k > n - 1 || poly != Polynomial::gamma_basis(k, n - 1 - 2 * k) {
            return Err(o.base().clone());
        }
        counts[k] += 1;
    }
    Ok(counts)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Monomial {
    pub t: u32,
    pub r: u32,
    pub q: u32,
}

/// Polynomial in `t`, `r`, `q` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TrivariatePolynomial {
    pub terms: BTreeMap<Monomial, i64>,
}

impl TrivariatePolynomial {
    /// Sets `r` and `q` to integers, leaving a polynomial in `t`.
    pub fn specialize(&self, r: i64, q: i64) -> Polynomial {
        let deg = self.terms.keys().map(|m| m.t as usize).max().unwrap_or(0);
        let mut coeffs = vec![0i64; deg + 1];
        for (m, &c) in &self.terms {
            coeffs[m.t as usize] += c * r.pow(m.r) * q.pow(m.q);
        }
        Polynomial::new(coeffs)
    }
}

impl fmt::Display for TrivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            for (var, e) in [("t", m.t), ("r", m.r), ("q", m.q)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            match (c, factors.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{}", factors.join(""))?,
                _ => write!(f, "{c}{}", factors.join(""))?,
            }
        }
        Ok(())
    }
}

/// `Σ t^exc r^fix q^(maj−exc)` over `S_n`.
pub fn basic_eulerian(n: usize) -> TrivariatePolynomial {
    let mut terms = BTreeMap::new();
    for p in all_permutations(n) {
        let s = stats(&p);
        let m = Monomial {
            t: s.exc as u32,
            r: s.fix as u32,
            q: (s.maj - s.exc) as u32,
        };
        *terms.entry(m).or_insert(0) += 1;
    }
    TrivariatePolynomial { terms }
}

/// Whether `(des, Rix)` and `(exc, Fix)` have the same joint distribution.
pub fn verify_equidistribution(n: usize) -> bool {
    let mut left: BTreeMap<(usize, Vec<Letter>), u64> = BTreeMap::new();
    let mut right: BTreeMap<(usize, Vec<Letter>), u64> = BTreeMap::new();
    for p in all_permutations(n) {
        let s = stats(&p);
        *left
            .entry((s.des, rix_factorize_iterative(&p).rix_set))
            .or_insert(0) += 1;
        *right.entry((s.exc, s.fix_set)).or_insert(0) += 1;
    }
    left == right
}
