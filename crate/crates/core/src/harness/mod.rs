//! Theorem suites over graph corpora, with JSON-lines reports.

mod cases;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{encode_graph6, parse_graph6, Graph};
use crate::reduce::Certificate;
use crate::table::DegreeTable;

pub use cases::Case;

macro_rules! suites {
    ($($variant:ident => $name:literal, ceiling $ceiling:literal, default $default:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Suite {
            $($variant,)*
        }

        impl Suite {
            pub const ALL: &'static [Suite] = &[$(Suite::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Suite::$variant => $name,)*
                }
            }

            /// Largest graph order the suite accepts without an override.
            pub fn ceiling(self) -> usize {
                match self {
                    $(Suite::$variant => $ceiling,)*
                }
            }

            /// The corpus used when none is given.
            pub fn default_source(self) -> Source {
                match self {
                    $(Suite::$variant => $default.parse().expect("valid default source"),)*
                }
            }
        }

        impl FromStr for Suite {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(Suite::$variant),)*
                    _ => Err(Error::argument(format!("unknown suite `{s}`"))),
                }
            }
        }
    };
}

suites! {
    BrooksAlpha => "brooks-alpha", ceiling 16, default "enumerate:n8";
    MicBasics => "mic-basics", ceiling 20, default "enumerate:n7";
    MainLemmaD0 => "main-lemma-d0", ceiling 10, default "enumerate:n7";
    KernelGame => "kernel-game", ceiling 6, default "enumerate:n6";
    InOrientOracle => "in-orient-oracle", ceiling 5, default "enumerate:n5";
    AtClassify => "at-classify", ceiling 6, default "enumerate:n6";
    KpClassify => "kp-classify", ceiling 6, default "enumerate:n6";
    MicStrength => "mic-strength", ceiling 7, default "enumerate:n7";
    GallaiCount => "gallai-count", ceiling 62, default "random:1000";
    TriangleFreeMic => "triangle-free-mic", ceiling 20, default "enumerate:n9";
    Edges4Critical => "edges-4critical", ceiling 12, default "enumerate:n7";
    OrePrecursors => "ore-precursors", ceiling 7, default "enumerate:n7";
    CutLemma => "cut-lemma", ceiling 6, default "enumerate:n6";
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where graphs come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Every isomorphism class with `1..=max_n` vertices.
    Enumerate { max_n: usize },
    /// Seeded random instances (used by `gallai-count`).
    Random { count: usize },
    /// A graph6 file, one graph per line.
    File(PathBuf),
}

impl FromStr for Source {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("enumerate:") {
            let digits = rest
                .trim_start_matches('n')
                .trim_start_matches("<=")
                .trim_start_matches('≤');
            let max_n = digits
                .parse()
                .map_err(|_| Error::argument(format!("bad enumeration bound in `{s}`, expected enumerate:nK")))?;
            return Ok(Source::Enumerate { max_n });
        }
        if let Some(rest) = s.strip_prefix("random:") {
            let count = rest
                .parse()
                .map_err(|_| Error::argument(format!("bad sample count in `{s}`, expected random:N")))?;
            return Ok(Source::Random { count });
        }
        Ok(Source::File(PathBuf::from(s)))
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            Source::Enumerate { max_n } => write!(f, "enumerate:n{max_n}"),
            Source::Random { count } => write!(f, "random:{count}"),
            Source::File(p) => write!(f, "{}", p.display()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Limits {
    /// Graphs above this order are skipped.
    pub max_n: Option<usize>,
    /// Permit `max_n` (or an enumeration bound) above the suite ceiling.
    pub allow_oversize: bool,
    pub seed: u64,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Sampled instances for `cut-lemma`.
    pub samples: usize,
    /// Add wall-clock times to records (reports are then not reproducible).
    pub timings: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: None,
            allow_oversize: false,
            seed: 0,
            jobs: None,
            samples: 500,
            timings: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

pub(crate) enum Outcome {
    Pass(Value),
    Fail(Value),
    Skip(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub suite: &'static str,
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub graph6: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub suite: &'static str,
    pub source: String,
    pub seed: u64,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub skip_reasons: BTreeMap<String, usize>,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.summary.pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    /// One JSON object per record, then `{"summary": ...}`.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out.push_str(&serde_json::json!({ "summary": &self.summary }).to_string());
        out.push('\n');
        out
    }
}

/// Runs one suite. Graphs the suite cannot handle become skipped records;
/// only unusable arguments (unknown corpus, unreadable file, limits above the
/// ceiling without `allow_oversize`) are errors.
pub fn run_suite(suite: Suite, source: &Source, limits: &Limits) -> Result<SuiteReport> {
    let ceiling = suite.ceiling();
    if let Some(m) = limits.max_n {
        if m > ceiling && !limits.allow_oversize {
            return Err(Error::argument(format!(
                "--max-n {m} exceeds the {suite} ceiling of {ceiling}; pass the override flag to force it"
            )));
        }
    }
    if let Source::Enumerate { max_n } = source {
        if *max_n > ceiling && !limits.allow_oversize {
            return Err(Error::argument(format!(
                "enumeration bound {max_n} exceeds the {suite} ceiling of {ceiling}; pass the override flag to force it"
            )));
        }
    }
    let cases = cases::build(suite, source, limits)?;
    let cap = limits.max_n.unwrap_or(if limits.allow_oversize { usize::MAX } else { ceiling });

    let evaluate = |(index, case): (usize, &Case)| -> Record {
        let start = Instant::now();
        let outcome = if case.graph.n() > cap {
            Outcome::Skip(format!("order above the limit of {cap}"))
        } else {
            suites::evaluate(suite, case)
        };
        let (verdict, reason, payload) = match outcome {
            Outcome::Pass(p) => (Verdict::Pass, None, p),
            Outcome::Fail(p) => (Verdict::Fail, None, p),
            Outcome::Skip(r) => (Verdict::Skip, Some(r), Value::Null),
        };
        Record {
            suite: suite.name(),
            index,
            label: case.label.clone(),
            graph6: encode_graph6(&case.graph).unwrap_or_default(),
            verdict,
            reason,
            payload,
            elapsed_ms: limits.timings.then(|| start.elapsed().as_millis()),
        }
    };
    let run = || cases.par_iter().enumerate().map(evaluate).collect::<Vec<_>>();
    let records = match limits.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::argument(e.to_string()))?
            .install(run),
        None => run(),
    };

    let mut skip_reasons = BTreeMap::new();
    let (mut passed, mut failed, mut skipped) = (0, 0, 0);
    for r in &records {
        match r.verdict {
            Verdict::Pass => passed += 1,
            Verdict::Fail => failed += 1,
            Verdict::Skip => {
                skipped += 1;
                *skip_reasons.entry(r.reason.clone().unwrap_or_default()).or_insert(0) += 1;
            }
        }
    }
    let summary = Summary {
        suite: suite.name(),
        source: source.to_string(),
        seed: limits.seed,
        total: records.len(),
        passed,
        failed,
        skipped,
        skip_reasons,
        pass: failed == 0,
    };
    Ok(SuiteReport { records, summary })
}

/// A certificate together with the graph and list sizes it is about; the
/// on-disk format of `cert validate`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateBundle {
    pub graph6: String,
    pub f: DegreeTable,
    pub certificate: Certificate,
}

impl CertificateBundle {
    pub fn graph(&self) -> Result<Graph> {
        parse_graph6(&self.graph6)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateValidation {
    pub valid: bool,
    pub problems: Vec<String>,
}

/// Parses `cert` and rechecks every invariant for `(g, f)`, including
/// kernel-perfectness.
pub fn validate_certificate(cert: &str, g: &Graph, f: &DegreeTable) -> Result<CertificateValidation> {
    let c = Certificate::from_json(cert)?;
    let problems = c.problems(g, f)?;
    Ok(CertificateValidation {
        valid: problems.is_empty(),
        problems,
    })
}

/// Validates a serialized [`CertificateBundle`].
pub fn validate_bundle(json: &str) -> Result<CertificateValidation> {
    let b: CertificateBundle = serde_json::from_str(json).map_err(|e| Error::CertificateParse(e.to_string()))?;
    let g = b.graph()?;
    let problems = b.certificate.problems(&g, &b.f)?;
    Ok(CertificateValidation {
        valid: problems.is_empty(),
        problems,
    })
}
