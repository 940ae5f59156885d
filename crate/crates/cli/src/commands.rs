use std::collections::BTreeMap;

use patavoid::avoidance::{
    avoider_counts_compositions, avoids, count_avoiders_multiset, enumerate_compositions,
};
use patavoid::bijection::theta;
use patavoid::genfun::{composition_counts, f132_via_gf};
use patavoid::{CompositionQuery, MultisetSpec, Pattern, Word};

use crate::args::{
    BfileArgs, BijectionArgs, Command, CompositionsArgs, Engine, MultisetArgs, SeriesArgs,
    VerifyArgs,
};
use crate::output::{Outcome, PatternCount, Term};
use crate::CliError;

pub struct Computed {
    pub name: &'static str,
    pub parameters: BTreeMap<String, String>,
    pub result: Outcome,
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn joined(values: &[u32]) -> String {
    Word::new(values.to_vec()).to_string()
}

pub fn execute(command: &Command) -> Result<Computed, CliError> {
    match command {
        Command::Compositions(a) => compositions(a),
        Command::Multiset(a) => multiset(a),
        Command::Series(a) => series(a),
        Command::Bfile(a) => bfile(a),
        Command::Bijection(a) => bijection(a),
        Command::Verify(a) => verify(a),
    }
}

fn compositions(a: &CompositionsArgs) -> Result<Computed, CliError> {
    let query = CompositionQuery {
        n: a.n,
        flavor: a.flavor,
        parts: a.k,
        max_part: a.max_part,
    };
    query.validate()?;
    let patterns = match &a.pattern {
        Some(p) => vec![p.clone()],
        None => Pattern::all_s3().to_vec(),
    };
    let counts = avoider_counts_compositions(&query, &patterns)?;
    let listing = if a.list {
        let p = &patterns[0];
        Some(
            enumerate_compositions(&query)?
                .filter(|w| avoids(w, p))
                .map(|w| w.to_string())
                .collect(),
        )
    } else {
        None
    };
    let mut parameters = params([("n", a.n.to_string()), ("flavor", a.flavor.to_string())]);
    if let Some(k) = a.k {
        parameters.insert("k".into(), k.to_string());
    }
    if let Some(m) = a.max_part {
        parameters.insert("max_part".into(), m.to_string());
    }
    parameters.insert(
        "patterns".into(),
        patterns
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    Ok(Computed {
        name: "compositions",
        parameters,
        result: Outcome::Counts {
            counts: patterns
                .iter()
                .zip(counts)
                .map(|(p, c)| PatternCount {
                    pattern: p.to_string(),
                    count: c.to_string(),
                })
                .collect(),
            listing,
        },
    })
}

fn multiset(a: &MultisetArgs) -> Result<Computed, CliError> {
    let spec = MultisetSpec::new(a.mult.clone());
    let count = match a.engine {
        Engine::Brute => count_avoiders_multiset(&spec, &a.pattern),
        Engine::Gf => {
            if a.pattern.perm() != [1, 3, 2] {
                return Err(CliError::Usage(format!(
                    "the gf engine only counts 132-avoiders, not {}",
                    a.pattern
                )));
            }
            f132_via_gf(&spec)?
        }
    };
    let engine = match a.engine {
        Engine::Brute => "brute",
        Engine::Gf => "gf",
    };
    Ok(Computed {
        name: "multiset",
        parameters: params([
            ("mult", joined(&a.mult)),
            ("pattern", a.pattern.to_string()),
            ("engine", engine.to_string()),
        ]),
        result: Outcome::Counts {
            counts: vec![PatternCount {
                pattern: a.pattern.to_string(),
                count: count.to_string(),
            }],
            listing: None,
        },
    })
}

fn sequence(n_max: u32, max_part: u32) -> Result<Outcome, CliError> {
    let counts = composition_counts(n_max, max_part)?;
    Ok(Outcome::Sequence {
        terms: counts
            .into_iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| Term {
                n: n as u32,
                value: c.to_string(),
            })
            .collect(),
    })
}

fn series(a: &SeriesArgs) -> Result<Computed, CliError> {
    let max_part = a.max_part.unwrap_or(a.n_max);
    Ok(Computed {
        name: "series",
        parameters: params([
            ("n_max", a.n_max.to_string()),
            ("max_part", max_part.to_string()),
        ]),
        result: sequence(a.n_max, max_part)?,
    })
}

fn bfile(a: &BfileArgs) -> Result<Computed, CliError> {
    Ok(Computed {
        name: "bfile",
        parameters: params([("n_max", a.n_max.to_string())]),
        result: sequence(a.n_max, a.n_max)?,
    })
}

fn bijection(a: &BijectionArgs) -> Result<Computed, CliError> {
    let target = MultisetSpec::new(a.target.clone());
    let image = theta(&a.word, &target)?;
    Ok(Computed {
        name: "bijection",
        parameters: params([("word", joined(&a.word)), ("target", joined(&a.target))]),
        result: Outcome::Word {
            word: image.to_string(),
        },
    })
}

fn verify(a: &VerifyArgs) -> Result<Computed, CliError> {
    let report = a.suite.run();
    Ok(Computed {
        name: "verify",
        parameters: params([("suite", a.suite.to_string())]),
        result: Outcome::Verification {
            suite: report.suite.to_string(),
            passed: report.passed(),
            checks: report.checks,
            failure: report.failure,
        },
    })
}
