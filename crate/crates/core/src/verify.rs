//! Exhaustive desk-scale sweeps that cross-check the counting identities, the
//! generating functions and the bijection against brute force.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use crate::avoidance::{
    avoider_counts_compositions, avoider_counts_multiset, contains, count_avoiders_multiset,
    MultisetPermutations,
};
use crate::bijection::theta;
use crate::error::Error;
use crate::genfun::{composition_gf, f132_via_gf};
use crate::types::{CompositionQuery, Letter, MultisetSpec, Pattern};

/// Avoider counts of positive-part compositions of `n = 1..=13`, any pattern
/// of length three.
pub const COMPOSITION_SEQUENCE: [u64; 13] =
    [1, 2, 4, 8, 16, 31, 60, 114, 214, 398, 732, 1334, 2410];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Thm1,
    Thm2,
    Thm3,
    Symmetry,
    Bijection,
    GfCross,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Thm1,
        Suite::Thm2,
        Suite::Thm3,
        Suite::Symmetry,
        Suite::Bijection,
        Suite::GfCross,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Symmetry => "symmetry",
            Suite::Bijection => "bijection",
            Suite::GfCross => "gf-cross",
        }
    }

    pub fn run(self) -> SuiteReport {
        let outcome = match self {
            Suite::Thm1 => check_thm1(13),
            Suite::Thm2 => check_thm2(12),
            Suite::Thm3 => check_thm3(4, 10),
            Suite::Symmetry => check_symmetry(4, 10),
            Suite::Bijection => check_bijection(4, 9),
            Suite::GfCross => check_gf_cross(13, 3),
        };
        let (checks, failure) = match outcome {
            Ok(n) => (n, None),
            Err(f) => (f.checks, Some(f.detail)),
        };
        SuiteReport {
            suite: self,
            checks,
            failure,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    /// Individual comparisons performed before stopping.
    pub checks: u64,
    /// Counterexample description, if any check failed.
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// A failed sweep: how far it got and what broke.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub checks: u64,
    pub detail: String,
}

type Outcome = Result<u64, Failure>;

fn fail(checks: u64, detail: String) -> Failure {
    Failure { checks, detail }
}

/// Every vector of positive multiplicities with `1..=max_k` entries and
/// total `1..=max_total`.
pub fn multiplicity_vectors(max_k: usize, max_total: u32) -> Vec<MultisetSpec> {
    fn grow(prefix: &mut Vec<u32>, left: u32, max_k: usize, out: &mut Vec<MultisetSpec>) {
        if !prefix.is_empty() {
            out.push(MultisetSpec::new(prefix.clone()));
        }
        if prefix.len() == max_k {
            return;
        }
        for a in 1..=left {
            prefix.push(a);
            grow(prefix, left - a, max_k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), max_total, max_k, &mut out);
    out
}

/// Distinct rearrangements of a multiplicity vector, sorted.
pub fn rearrangements(spec: &MultisetSpec) -> Vec<MultisetSpec> {
    let mut v = spec.mult().to_vec();
    v.sort_unstable();
    let mut out = vec![MultisetSpec::new(v.clone())];
    while crate::avoidance::next_permutation(&mut v) {
        out.push(MultisetSpec::new(v.clone()));
    }
    out
}

fn all_equal(counts: &[BigUint]) -> bool {
    counts.windows(2).all(|w| w[0] == w[1])
}

pub fn check_thm1(n_max: u32) -> Outcome {
    let patterns = Pattern::all_s3();
    let mut checks = 0;
    for n in 1..=n_max {
        let counts = avoider_counts_compositions(&CompositionQuery::positive(n), &patterns)
            .map_err(|e| fail(checks, e.to_string()))?;
        for (p, c) in patterns.iter().zip(&counts) {
            checks += 1;
            if let Some(&want) = COMPOSITION_SEQUENCE.get(n as usize - 1) {
                if *c != BigUint::from(want) {
                    return Err(fail(checks, format!("n={n} pattern {p}: {c} != {want}")));
                }
            }
        }
        if !all_equal(&counts) {
            return Err(fail(checks, format!("n={n}: counts differ {counts:?}")));
        }
    }
    Ok(checks)
}

pub fn check_thm2(n_max: u32) -> Outcome {
    let patterns = Pattern::all_s3();
    let queries: Vec<CompositionQuery> = (1..=n_max)
        .flat_map(|n| {
            (1..=n as usize).flat_map(move |k| {
                [
                    CompositionQuery::positive_with_parts(n, k),
                    CompositionQuery::nonnegative(n, k),
                ]
            })
        })
        .collect();
    let mut checks = 0;
    for q in queries {
        let counts =
            avoider_counts_compositions(&q, &patterns).map_err(|e| fail(checks, e.to_string()))?;
        checks += 1;
        if !all_equal(&counts) {
            return Err(fail(
                checks,
                format!(
                    "n={} k={:?} {}: counts differ {counts:?}",
                    q.n, q.parts, q.flavor
                ),
            ));
        }
    }
    Ok(checks)
}

pub fn check_thm3(max_k: usize, max_total: u32) -> Outcome {
    let patterns = Pattern::all_s3();
    let specs = multiplicity_vectors(max_k, max_total);
    let bad = specs.par_iter().find_map_first(|spec| {
        let counts = avoider_counts_multiset(spec, &patterns);
        (!all_equal(&counts)).then(|| format!("{spec}: counts differ {counts:?}"))
    });
    match bad {
        Some(detail) => Err(fail(0, detail)),
        None => Ok(specs.len() as u64),
    }
}

pub fn check_symmetry(max_k: usize, max_total: u32) -> Outcome {
    let patterns = Pattern::all_s3();
    // one representative per multiset of multiplicities
    let reps: Vec<MultisetSpec> = multiplicity_vectors(max_k, max_total)
        .into_iter()
        .filter(|s| s.mult().windows(2).all(|w| w[0] <= w[1]))
        .collect();
    let results: Vec<Outcome> = reps
        .par_iter()
        .map(|rep| {
            let base = avoider_counts_multiset(rep, &patterns);
            let mut checks = 0;
            for other in rearrangements(rep) {
                let counts = avoider_counts_multiset(&other, &patterns);
                checks += 1;
                if counts != base {
                    return Err(fail(
                        checks,
                        format!("{rep} gives {base:?} but {other} gives {counts:?}"),
                    ));
                }
            }
            Ok(checks)
        })
        .collect();
    sum_outcomes(results)
}

fn sum_outcomes(results: Vec<Outcome>) -> Outcome {
    let mut total = 0;
    for r in results {
        total += r?;
    }
    Ok(total)
}

/// Checks that `theta` is a bijection from permutations of `source` onto
/// permutations of `target` preserving containment of each pattern.
/// Returns the number of words checked.
pub fn check_theta_pair(
    source: &MultisetSpec,
    target: &MultisetSpec,
    patterns: &[Pattern],
) -> Outcome {
    let mut images: HashSet<Vec<Letter>> = HashSet::new();
    let mut words = MultisetPermutations::new(source);
    let mut checks = 0;
    while let Some(w) = words.next_slice() {
        checks += 1;
        let image = theta(w, target).map_err(|e| fail(checks, format!("{w:?}: {e}")))?;
        if !target.is_permutation(&image) {
            return Err(fail(
                checks,
                format!(
                    "{source}->{target}: {w:?} maps to {image}, not a permutation of the target"
                ),
            ));
        }
        for p in patterns {
            if contains(w, p) != contains(&image, p) {
                return Err(fail(
                    checks,
                    format!("{source}->{target}: {w:?} -> {image} changes containment of {p}"),
                ));
            }
        }
        if !images.insert(image.into_letters()) {
            return Err(fail(
                checks,
                format!("{source}->{target}: {w:?} collides with an earlier image"),
            ));
        }
    }
    let onto = MultisetPermutations::new(target).count();
    if images.len() != onto {
        return Err(fail(
            checks,
            format!(
                "{source}->{target}: {} images but {onto} target permutations",
                images.len()
            ),
        ));
    }
    Ok(checks)
}

pub fn check_bijection(max_k: usize, max_total: u32) -> Outcome {
    let patterns = [
        Pattern::increasing(3).expect("valid"),
        Pattern::increasing(4).expect("valid"),
    ];
    let specs = multiplicity_vectors(max_k, max_total);
    let results: Vec<Outcome> = specs
        .par_iter()
        .map(|source| {
            let mut checks = 0;
            for target in rearrangements(source) {
                checks += check_theta_pair(source, &target, &patterns)?;
            }
            Ok(checks)
        })
        .collect();
    sum_outcomes(results)
}

/// Composition series against brute force for part bounds `{1, 2, 3, n}`,
/// then `g_k` coefficients against brute force for `k <= max_k`, entries
/// `0..=3`.
pub fn check_gf_cross(n_max: u32, max_k: usize) -> Outcome {
    let p132: Pattern = "132".parse().expect("valid");
    let mut checks = 0;
    for n in 1..=n_max {
        for bound in [1, 2, 3, n] {
            let gf = composition_gf(n, bound).map_err(|e| fail(checks, e.to_string()))?;
            let q = CompositionQuery::positive(n).with_max_part(bound);
            let brute = avoider_counts_compositions(&q, &Pattern::all_s3())
                .map_err(|e| fail(checks, e.to_string()))?;
            let series = gf.coeff(i64::from(n)).unwrap_or_default();
            for b in brute {
                checks += 1;
                if BigInt::from(b.clone()) != series {
                    return Err(fail(
                        checks,
                        format!("n={n} parts<={bound}: series {series} vs brute force {b}"),
                    ));
                }
            }
        }
    }
    for k in 1..=max_k {
        let mut exps = vec![0u32; k];
        loop {
            let spec = MultisetSpec::new(exps.clone());
            let via_gf = f132_via_gf(&spec).map_err(|e| fail(checks, e.to_string()))?;
            let brute = count_avoiders_multiset(&spec, &p132);
            checks += 1;
            if via_gf != brute {
                return Err(fail(
                    checks,
                    format!("{spec}: g_k gives {via_gf}, brute force {brute}"),
                ));
            }
            // odometer over 0..=3
            let Some(pos) = exps.iter().rposition(|&e| e < 3) else {
                break;
            };
            exps[pos] += 1;
            exps[pos + 1..].fill(0);
        }
    }
    Ok(checks)
}
