//! Acceptance runner. Each criterion is checked against an oracle written
//! here, independently of the library code it exercises, and reported on
//! one line. The process exits non-zero if any criterion fails.

#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::{HashMap, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use patavoid::asymptotics::{growth_check, k_infinity, k_of_k};
use patavoid::avoidance::{
    avoider_counts_compositions, avoider_counts_multiset, contains, contains_naive,
};
use patavoid::bijection::{match_parens, theta, theta_inverse};
use patavoid::genfun::{composition_gf, f132_via_gf, g_k_series};
use patavoid::{CompositionQuery, MultisetSpec, Pattern};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rayon::prelude::*;

const SEQUENCE: [u64; 13] = [1, 2, 4, 8, 16, 31, 60, 114, 214, 398, 732, 1334, 2410];

type Check = Result<String, String>;

/// Number, title, wall-clock budget in seconds, body.
type Criterion = (u32, &'static str, u64, fn() -> Check);

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

// ---- oracles -------------------------------------------------------------

/// Compositions of `n` into positive parts `<= max_part`, by recursion.
fn oracle_compositions(n: u32, max_part: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in 1..=left.min(max_part) {
            prefix.push(p);
            go(left - p, max_part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

/// Distinct arrangements of the multiset, by recursion on what is left.
fn oracle_arrangements(mult: &[u32]) -> Vec<Vec<u32>> {
    fn go(left: &mut [u32], prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left.iter().all(|&a| a == 0) {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                prefix.push(i as u32 + 1);
                go(left, prefix, out);
                prefix.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut mult.to_vec(), &mut Vec::new(), &mut out);
    out
}

fn naive_avoiders(words: &[Vec<u32>], p: &Pattern) -> u64 {
    words.iter().filter(|w| !contains_naive(w, p)).count() as u64
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Vectors of length `1..=max_k` with nonnegative entries summing to at
/// most `max_total`, excluding the all-zero vector.
fn vectors(max_k: usize, max_total: u32) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, left: u32, max_k: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.iter().any(|&a| a > 0) {
            out.push(prefix.clone());
        }
        if prefix.len() == max_k {
            return;
        }
        for a in 0..=left {
            prefix.push(a);
            go(prefix, left - a, max_k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), max_total, max_k, &mut out);
    out
}

fn distinct_orderings(v: &[u32]) -> Vec<Vec<u32>> {
    let set: HashSet<Vec<u32>> = oracle_arrangements(&vec![1; v.len()])
        .into_iter()
        .map(|perm| perm.iter().map(|&i| v[i as usize - 1]).collect())
        .collect();
    set.into_iter().collect()
}

// ---- criteria ------------------------------------------------------------

fn sequence_reproduction() -> Check {
    let patterns = Pattern::all_s3();
    let mut checks = 0;
    for n in 1..=13u32 {
        let want = SEQUENCE[n as usize - 1];
        let counts = avoider_counts_compositions(&CompositionQuery::positive(n), &patterns)
            .map_err(|e| e.to_string())?;
        let words = oracle_compositions(n, n);
        for (p, c) in patterns.iter().zip(&counts) {
            ensure(*c == BigUint::from(want), || {
                format!("n={n} {p}: library {c}, want {want}")
            })?;
            let brute = naive_avoiders(&words, p);
            ensure(brute == want, || {
                format!("n={n} {p}: oracle {brute}, want {want}")
            })?;
            checks += 1;
        }
    }
    Ok(format!("{checks} exact checks"))
}

fn gf_oracle_equivalence() -> Check {
    let patterns = Pattern::all_s3();
    let mut checks = 0;
    for n in 1..=13u32 {
        for bound in [1, 2, 3, n] {
            let gf = composition_gf(n, bound).map_err(|e| e.to_string())?;
            let coeff = gf.coeff(i64::from(n)).ok_or("coefficient not computed")?;
            let words = oracle_compositions(n, bound);
            for p in &patterns {
                let brute = BigInt::from(naive_avoiders(&words, p));
                ensure(coeff == brute, || {
                    format!("n={n} max_part={bound} {p}: series {coeff}, brute {brute}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} exact checks"))
}

fn part_count_coincidence() -> Check {
    let patterns = Pattern::all_s3();
    let queries: Vec<CompositionQuery> = (1..=12u32)
        .flat_map(|n| {
            (1..=n as usize).flat_map(move |k| {
                [
                    CompositionQuery::positive_with_parts(n, k),
                    CompositionQuery::nonnegative(n, k),
                ]
            })
        })
        .collect();
    let results: Vec<Result<(), String>> = queries
        .par_iter()
        .map(|q| {
            let counts = avoider_counts_compositions(q, &patterns).map_err(|e| e.to_string())?;
            ensure(counts.windows(2).all(|w| w[0] == w[1]), || {
                format!("n={} k={:?} {}: {counts:?}", q.n, q.parts, q.flavor)
            })?;
            // the counts can never exceed the number of compositions
            let n = u64::from(q.n);
            let k = q.parts.unwrap_or(0) as u64;
            let total = match q.flavor {
                patavoid::PartsFlavor::Positive => binomial(n - 1, k - 1),
                patavoid::PartsFlavor::Nonnegative => binomial(n + k - 1, k - 1),
            };
            ensure(counts[0] <= BigUint::from(total), || {
                format!("n={n} k={k}: {} avoiders out of {total}", counts[0])
            })
        })
        .collect();
    results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(format!("{} (n, k, flavor) cases", queries.len()))
}

fn multiset_symmetry() -> Check {
    let patterns = Pattern::all_s3();
    let all = vectors(4, 10);
    let counts: HashMap<Vec<u32>, Vec<BigUint>> = all
        .par_iter()
        .map(|v| {
            (
                v.clone(),
                avoider_counts_multiset(&MultisetSpec::new(v.clone()), &patterns),
            )
        })
        .collect();
    for v in &all {
        let c = &counts[v];
        ensure(c.windows(2).all(|w| w[0] == w[1]), || {
            format!("{v:?}: {c:?}")
        })?;
        for other in distinct_orderings(v) {
            ensure(&counts[&other] == c, || {
                format!("{v:?} gives {c:?}, {other:?} gives {:?}", counts[&other])
            })?;
        }
    }
    // spot-check the library counts against the recursion oracle
    let p123 = Pattern::increasing(3).map_err(|e| e.to_string())?;
    for v in all.iter().filter(|v| v.iter().sum::<u32>() <= 7) {
        let brute = naive_avoiders(&oracle_arrangements(v), &p123);
        ensure(counts[v][0] == BigUint::from(brute), || {
            format!("{v:?}: library {}, oracle {brute}", counts[v][0])
        })?;
    }
    Ok(format!("{} vectors", all.len()))
}

/// Coefficients of the displayed closed form of `g_3`, expanded by hand:
/// `1/(1 - x_p - x_q)` has coefficient `C(a + b, a)` on `x_p^a x_q^b`.
fn g3_closed_form(max_deg: usize) -> Vec<Vec<Vec<i64>>> {
    let d = max_deg + 1;
    let zero = || vec![vec![vec![0i64; d]; d]; d];
    let mut den = zero();
    den[0][0][0] = 1;
    for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
        let mut next = zero();
        for e in 0..d {
            for f in 0..d {
                for g in 0..d {
                    let cur = den[e][f][g];
                    if cur == 0 {
                        continue;
                    }
                    for a in 0..d {
                        for b in 0..d {
                            let mut idx = [e, f, g];
                            idx[p] += a;
                            idx[q] += b;
                            if idx.iter().sum::<usize>() > max_deg {
                                continue;
                            }
                            next[idx[0]][idx[1]][idx[2]] +=
                                cur * binomial((a + b) as u64, a as u64) as i64;
                        }
                    }
                }
            }
        }
        den = next;
    }
    // numerator 1 - x1 - x2 - x3 + x1x2 + x1x3 + x2x3
    let numerator: [([usize; 3], i64); 7] = [
        ([0, 0, 0], 1),
        ([1, 0, 0], -1),
        ([0, 1, 0], -1),
        ([0, 0, 1], -1),
        ([1, 1, 0], 1),
        ([1, 0, 1], 1),
        ([0, 1, 1], 1),
    ];
    let mut out = zero();
    for (shift, c) in numerator {
        for e in 0..d {
            for f in 0..d {
                for g in 0..d {
                    let idx = [e + shift[0], f + shift[1], g + shift[2]];
                    if idx.iter().sum::<usize>() <= max_deg {
                        out[idx[0]][idx[1]][idx[2]] += c * den[e][f][g];
                    }
                }
            }
        }
    }
    out
}

fn closed_forms() -> Check {
    const DEG: u32 = 6;
    let mut checks = 0;
    let g2 = g_k_series(2, &[DEG, DEG]).map_err(|e| e.to_string())?;
    for a in 0..=DEG {
        for b in 0..=DEG - a {
            let want = BigInt::from(binomial(u64::from(a + b), u64::from(a)));
            let got = g2.coeff(&[a, b]);
            ensure(got == want, || {
                format!("g_2 x1^{a} x2^{b}: {got}, want {want}")
            })?;
            checks += 1;
        }
    }
    let g3 = g_k_series(3, &[DEG; 3]).map_err(|e| e.to_string())?;
    let closed = g3_closed_form(DEG as usize);
    for a in 0..=DEG {
        for b in 0..=DEG - a {
            for c in 0..=DEG - a - b {
                let want = BigInt::from(closed[a as usize][b as usize][c as usize]);
                let got = g3.coeff(&[a, b, c]);
                ensure(got == want, || {
                    format!("g_3 x1^{a} x2^{b} x3^{c}: {got}, want {want}")
                })?;
                checks += 1;
            }
        }
    }
    let p132: Pattern = "132".parse().map_err(|e: patavoid::Error| e.to_string())?;
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                let mult = vec![a, b, c];
                let got =
                    f132_via_gf(&MultisetSpec::new(mult.clone())).map_err(|e| e.to_string())?;
                let brute = naive_avoiders(&oracle_arrangements(&mult), &p132);
                ensure(got == BigUint::from(brute), || {
                    format!("f({mult:?}, 132): series {got}, brute {brute}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} exact checks"))
}

fn worked_example() -> Result<(), String> {
    let x: Vec<u32> = [7, 5, 6, 6, 4, 6, 6, 4, 6, 6, 4, 6, 5, 3, 2, 4, 1, 1, 4].to_vec();
    let view = match_parens(&x, 4).map_err(|e| e.to_string())?;
    let steps = [
        (view.render(), "7 ) 6 6 ( 6 6 ( 6 6 ( 6 ) 3 2 ( 1 1 ("),
        (
            view.render_marked(),
            "7 ) 6 6 U 6 6 U 6 6 ( 6 ) 3 2 U 1 1 U",
        ),
    ];
    for (got, want) in steps {
        ensure(got == want, || format!("rendered {got:?}, want {want:?}"))?;
    }
    let target = MultisetSpec::new(vec![2, 1, 1, 2, 5, 7, 1]);
    let image = theta(&x, &target).map_err(|e| e.to_string())?;
    let after = match_parens(&image, 4).map_err(|e| e.to_string())?.render();
    ensure(after == "7 ) 6 6 ) 6 6 ) 6 6 ( 6 ) 3 2 ) 1 1 (", || {
        format!("flipped {after:?}")
    })?;
    let out = image.to_string();
    ensure(out == "7 5 6 6 5 6 6 5 6 6 4 6 5 3 2 5 1 1 4", || {
        format!("output {out:?}")
    })
}

fn theta_pair(source: &[u32], target: &[u32], patterns: &[Pattern]) -> Result<u64, String> {
    let t_spec = MultisetSpec::new(target.to_vec());
    let s_spec = MultisetSpec::new(source.to_vec());
    let words = oracle_arrangements(source);
    let mut images = HashSet::new();
    for w in &words {
        let y = theta(w, &t_spec).map_err(|e| format!("{w:?}: {e}"))?;
        let y = y.into_letters();
        let mut tally = vec![0u32; target.len()];
        for &letter in &y {
            if let Some(slot) = tally.get_mut(letter as usize - 1) {
                *slot += 1;
            }
        }
        ensure(tally == target && y.len() == w.len(), || {
            format!("{source:?}->{target:?}: {w:?} maps to {y:?}")
        })?;
        for p in patterns {
            ensure(contains(w, p) == contains(&y, p), || {
                format!("{source:?}->{target:?}: {w:?} -> {y:?} changes {p}")
            })?;
        }
        let back = theta_inverse(&y, &s_spec)
            .map_err(|e| e.to_string())?
            .into_letters();
        ensure(&back == w, || format!("{w:?} -> {y:?} -> {back:?}"))?;
        images.insert(y);
    }
    let onto = oracle_arrangements(target).len();
    ensure(images.len() == words.len() && images.len() == onto, || {
        format!(
            "{source:?}->{target:?}: {} words, {} images, {onto} targets",
            words.len(),
            images.len()
        )
    })?;
    Ok(words.len() as u64)
}

fn counterexample_sets() -> Result<(), String> {
    let p132: Pattern = "132".parse().map_err(|e: patavoid::Error| e.to_string())?;
    let containing = |mult: &[u32]| -> Vec<String> {
        let mut v: Vec<String> = oracle_arrangements(mult)
            .into_iter()
            .filter(|w| contains(w, &p132))
            .map(|w| w.iter().map(|d| d.to_string()).collect())
            .collect();
        v.sort();
        v
    };
    let first = containing(&[2, 1, 1]);
    let second = containing(&[1, 2, 1]);
    ensure(first == ["1132", "1312", "1321"], || {
        format!("first set {first:?}")
    })?;
    ensure(second == ["1232", "1322", "2132"], || {
        format!("second set {second:?}")
    })?;
    // no bijection between the sets changes a single 1 into a 2
    let one_step = |a: &str, b: &str| {
        let diffs: Vec<(char, char)> = a.chars().zip(b.chars()).filter(|(x, y)| x != y).collect();
        diffs == [('1', '2')]
    };
    let any_matching = oracle_arrangements(&[1, 1, 1]).into_iter().any(|perm| {
        first
            .iter()
            .zip(&perm)
            .all(|(a, &j)| one_step(a, &second[j as usize - 1]))
    });
    ensure(!any_matching, || "found a single-letter matching".into())
}

fn bijection() -> Check {
    worked_example()?;
    let patterns = [
        Pattern::increasing(3).map_err(|e| e.to_string())?,
        Pattern::increasing(4).map_err(|e| e.to_string())?,
    ];
    let sources = vectors(4, 9);
    let results: Vec<Result<u64, String>> = sources
        .par_iter()
        .map(|s| {
            let mut words = 0;
            for t in distinct_orderings(s) {
                words += theta_pair(s, &t, &patterns)?;
            }
            Ok(words)
        })
        .collect();
    let words: u64 = results.into_iter().sum::<Result<u64, String>>()?;
    counterexample_sets()?;
    Ok(format!(
        "worked example, {} sources, {words} words, counterexample sets",
        sources.len()
    ))
}

fn asymptotics() -> Check {
    for (k, printed) in [(5u32, "9.95025"), (10, "17.9099"), (20, "18.9314")] {
        let value: f64 = k_of_k(k).map_err(|e| e.to_string())?;
        let decimals = printed.len() - printed.find('.').unwrap_or(0) - 1;
        let shown = format!("{value:.decimals$}");
        ensure(shown == printed, || {
            format!("K({k}) = {value} prints as {shown}, want {printed}")
        })?;
    }
    let limit: f64 = k_infinity(1e-7).map_err(|e| e.to_string())?;
    ensure((limit - 18.9399867).abs() <= 1e-6, || {
        format!("K_inf = {limit}")
    })?;
    let ratio: f64 = growth_check(80, 5).map_err(|e| e.to_string())?;
    ensure((ratio - 1.0).abs() < 0.01, || {
        format!("c(80,5) / K r^80 = {ratio}")
    })?;
    Ok(format!("K_inf = {limit:.7}, ratio(80, 5) = {ratio:.5}"))
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Check {
    use common::*;
    run_property(
        "ring axioms",
        (series(), series(), series()),
        series_ring_axioms,
    )?;
    run_property("inversion", unit_series(), inversion_round_trip)?;
    run_property("exact division", (poly(3), poly(3)), exact_division)?;
    run_property("tau pair", (word(4, 14), 1u32..4), tau_inverse_pair)?;
    run_property(
        "matching stability",
        (word(4, 14), 1u32..4),
        matching_stability,
    )?;
    Ok("5 suites x 1000 cases".into())
}

// ---- runner --------------------------------------------------------------

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "sequence reproduction", 30, sequence_reproduction),
        (2, "series against brute force", 10, gf_oracle_equivalence),
        (3, "part-count coincidence", 60, part_count_coincidence),
        (
            4,
            "multiset coincidence and symmetry",
            120,
            multiset_symmetry,
        ),
        (5, "closed forms of g_2 and g_3", 30, closed_forms),
        (6, "bijection", 120, bijection),
        (7, "asymptotics", 10, asymptotics),
        (8, "property suites", 120, property_suites),
    ];
    let mut failed = 0;
    for (id, title, budget, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= Duration::from_secs(budget) {
                Ok(detail)
            } else {
                Err(format!("{detail}; took {elapsed:.1?}, budget {budget} s"))
            }
        });
        match result {
            Ok(detail) => println!("[PASS] criterion {id}: {title} ({detail}; {elapsed:.2?})"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {id}: {title}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
