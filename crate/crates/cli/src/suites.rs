//! Verification suites behind `rixperm verify`. Each suite checks every
//! `S_m` with `m` up to the bound.

use std::collections::HashSet;

use rixperm::homomesy::{
    eulerian_polynomial, gamma_expansion, orbit_gamma_counts, orbit_partition, phi_orbit_mismatch,
    statistic, verify_equidistribution, verify_homomesy, verify_pair_bijection, HomomesyReport,
    Rational, Verdict,
};
use rixperm::hop::double_letters;
use rixperm::rix::{rix_set_recursive, rixed_points_by_characterization};
use rixperm::*;

pub const SUITES: [&str; 9] = [
    "rix-oracles",
    "homomesy-vh-rix",
    "homomesy-cvh-fix",
    "phi-transport",
    "phi-orbits",
    "orbit-sizes",
    "gamma",
    "pair-bijection",
    "equidistribution",
];

pub struct Outcome {
    pub suite: &'static str,
    pub n: usize,
    pub passed: bool,
    pub detail: String,
    /// Full reports, kept for machine output of the homomesy suites.
    pub homomesy: Vec<HomomesyReport>,
}

impl Outcome {
    fn new(suite: &'static str, n: usize, failure: Option<String>, ok: String) -> Self {
        Self {
            suite,
            n,
            passed: failure.is_none(),
            detail: failure.unwrap_or(ok),
            homomesy: Vec::new(),
        }
    }
}

pub fn run(suite: &'static str, n: usize) -> Outcome {
    match suite {
        "rix-oracles" => rix_oracles(n),
        "homomesy-vh-rix" => homomesy(suite, n, ActionKind::Vh, "rix"),
        "homomesy-cvh-fix" => homomesy(suite, n, ActionKind::Cvh, "fix"),
        "phi-transport" => phi_transport(n),
        "phi-orbits" => phi_orbits(n),
        "orbit-sizes" => orbit_sizes(n),
        "gamma" => gamma(n),
        "pair-bijection" => pair_bijection(n),
        "equidistribution" => equidistribution(n),
        _ => unreachable!("suite names are validated by the parser"),
    }
}

fn rix_oracles(n: usize) -> Outcome {
    let mut count = 0usize;
    let failure = (0..=n).flat_map(all_permutations).find_map(|p| {
        count += 1;
        let it = rix_factorize_iterative(&p);
        let mut rec = rix_set_recursive(&p);
        rec.sort_unstable();
        let ok = it.rix_set == rec
            && it.rix_set == rixed_points_by_characterization(&p)
            && it == rix_factorize_recursive(&p);
        (!ok).then(|| format!("routes disagree on {p}"))
    });
    Outcome::new(
        "rix-oracles",
        n,
        failure,
        format!("{count} permutations agree on Rix and factorization"),
    )
}

fn homomesy(suite: &'static str, n: usize, kind: ActionKind, stat: &str) -> Outcome {
    let st = statistic(stat).expect("built-in statistic");
    let one = Rational::from_integer(1);
    let reports: Vec<HomomesyReport> = (1..=n).map(|m| verify_homomesy(m, kind, &st)).collect();
    let failure = reports.iter().find_map(|r| match &r.verdict {
        Verdict::Homomesic { constant } if *constant == one => None,
        Verdict::Homomesic { constant } => {
            Some(format!("n={}: every orbit averages {constant}, not 1", r.n))
        }
        Verdict::Counterexample { first, second } => Some(format!(
            "n={}: orbit of {} averages {}, orbit of {} averages {}",
            r.n, first.0, first.1, second.0, second.1
        )),
    });
    let orbits: usize = reports.iter().map(|r| r.orbits.len()).sum();
    let mut out = Outcome::new(
        suite,
        n,
        failure,
        format!("{orbits} {kind} orbits, each with {stat}-average 1"),
    );
    out.homomesy = reports;
    out
}

fn phi_transport(n: usize) -> Outcome {
    let mut failure = None;
    let mut count = 0usize;
    'outer: for m in 0..=n {
        let mut seen = HashSet::new();
        for p in all_permutations(m) {
            count += 1;
            let s = phi(&p);
            let st = stats(&s);
            if stats(&p).des != st.exc || rix_set(&p) != st.fix_set {
                failure = Some(format!("statistics not carried over at {p}"));
                break 'outer;
            }
            if phi_inverse(&s).as_ref() != Ok(&p) {
                failure = Some(format!("inverse fails at {p}"));
                break 'outer;
            }
            if !seen.insert(s) {
                failure = Some(format!("not injective at {p}"));
                break 'outer;
            }
        }
    }
    Outcome::new(
        "phi-transport",
        n,
        failure,
        format!("{count} permutations: des -> exc, Rix -> Fix, inverse round trip"),
    )
}

fn phi_orbits(n: usize) -> Outcome {
    let failure = (1..=n).find_map(|m| {
        phi_orbit_mismatch(m).map(|(k, p)| format!("{k} orbit of {p} is not carried to an orbit"))
    });
    Outcome::new(
        "phi-orbits",
        n,
        failure,
        "VH -> CVH and RVH -> RCVH orbits correspond".into(),
    )
}

/// Restricted orbits have `2^(dbl − rix + 1)` elements when `β₁` is rixed and
/// `2^(dbl − rix − 1)` otherwise: a non-rixed `β₁` is a double descent that
/// is frozen along with the rixed double ascents.
fn restricted_size(p: &Permutation) -> usize {
    let f = rix_factorize_iterative(p);
    let dbl = stats(p).dbl;
    if f.beta1.is_some_and(|b| f.is_rixed(b)) {
        1 << (dbl + 1 - f.rix())
    } else {
        1 << (dbl - f.rix() - 1)
    }
}

fn orbit_sizes(n: usize) -> Outcome {
    let failure = (1..=n).find_map(|m| {
        for o in orbit_partition(m, ActionKind::Vh) {
            if let Some(p) = o
                .elements
                .iter()
                .find(|p| o.len() != 1 << double_letters(p).len())
            {
                return Some(format!("VH orbit of {p} has size {}", o.len()));
            }
        }
        for o in orbit_partition(m, ActionKind::Rvh) {
            for p in &o.elements {
                if o.len() != restricted_size(p) {
                    return Some(format!("RVH orbit of {p} has size {}", o.len()));
                }
                if orbit(&phi(p), ActionKind::Rcvh).len() != o.len() {
                    return Some(format!("RCVH orbit of Φ({p}) differs in size"));
                }
            }
        }
        None
    });
    Outcome::new(
        "orbit-sizes",
        n,
        failure,
        "VH sizes 2^dbl, RVH sizes match and equal RCVH sizes".into(),
    )
}

fn gamma(n: usize) -> Outcome {
    let failure = (1..=n).find_map(|m| match gamma_expansion(&eulerian_polynomial(m), m) {
        Ok(g) if g.iter().any(|&c| c < 0) => Some(format!("n={m}: negative γ {g:?}")),
        Ok(g) => match orbit_gamma_counts(m) {
            Ok(counts) if counts == g => None,
            Ok(counts) => Some(format!("n={m}: orbit counts {counts:?} vs γ {g:?}")),
            Err(p) => Some(format!("n={m}: orbit of {p} has the wrong des polynomial")),
        },
        Err(e) => Some(format!("n={m}: {e}")),
    });
    Outcome::new(
        "gamma",
        n,
        failure,
        "A_n is γ-nonnegative and each VH orbit contributes one basis term".into(),
    )
}

fn pair_bijection(n: usize) -> Outcome {
    let failure = (1..=n).find_map(|m| {
        orbit_partition(m, ActionKind::Vh)
            .into_iter()
            .find(|o| !verify_pair_bijection(o))
            .map(|o| format!("fails on orbit of {}", o.base()))
    });
    Outcome::new(
        "pair-bijection",
        n,
        failure,
        "rix pairs of every VH orbit biject onto it".into(),
    )
}

fn equidistribution(n: usize) -> Outcome {
    let failure = (0..=n)
        .find(|&m| !verify_equidistribution(m))
        .map(|m| format!("(des, Rix) and (exc, Fix) differ on S_{m}"));
    Outcome::new(
        "equidistribution",
        n,
        failure,
        "(des, Rix) and (exc, Fix) are equidistributed".into(),
    )
}
