use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::braid3::{is_d_positive, sigma_to_ab, Sigma};
use crate::cone::{decide_sign, klein_bottle_verdict, Verdict};
use crate::context::GroupContext;
use crate::error::Result;
use crate::hecke::{oracle_equal, oracle_is_identity};
use crate::orderings::{convexity_check, is_positive, OrderingSpec};
use crate::word::{enumerate_reduced, Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub word: String,
    pub check: String,
    pub detail: String,
}

impl Violation {
    fn new(word: impl ToString, check: &str, detail: impl Into<String>) -> Self {
        Violation {
            word: word.to_string(),
            check: check.to_string(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub kind: String,
    pub n: u32,
    pub max_len: usize,
    pub counts: BTreeMap<String, u64>,
    pub violations: Vec<Violation>,
    pub wall_time_secs: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    fn assemble(
        kind: &str,
        n: u32,
        max_len: usize,
        cells: Vec<(String, Vec<Violation>)>,
        start: Instant,
    ) -> Self {
        let mut counts = BTreeMap::new();
        let mut violations = Vec::new();
        for (key, v) in cells {
            *counts.entry(key).or_insert(0) += 1;
            violations.extend(v);
        }
        SuiteReport {
            kind: kind.to_string(),
            n,
            max_len,
            counts,
            violations,
            wall_time_secs: start.elapsed().as_secs_f64(),
        }
    }
}

/// Per-word checks of the trichotomy `P ⊔ P^-1 ⊔ {1}`.
fn trichotomy_cell(w: &Word, ctx: &GroupContext) -> (String, Vec<Violation>) {
    let mut v = Vec::new();
    let (r, ri) = match (decide_sign(w, ctx), decide_sign(&w.invert(), ctx)) {
        (Ok(r), Ok(ri)) => (r, ri),
        (Err(e), _) | (_, Err(e)) => {
            return (
                "error".into(),
                vec![Violation::new(w, "decide-sign", e.to_string())],
            )
        }
    };
    let is_id = oracle_is_identity(w, ctx);
    let pos = r.verdict == Verdict::Positive;
    let neg = ri.verdict == Verdict::Positive;
    if usize::from(pos) + usize::from(neg) + usize::from(is_id) != 1 {
        v.push(Violation::new(
            w,
            "exactly-one-verdict",
            format!("positive={} negative={} identity={}", pos, neg, is_id),
        ));
    }
    if ri.verdict != r.verdict.mirror() {
        v.push(Violation::new(
            w,
            "inverse-mirror",
            format!("{:?} vs inverse {:?}", r.verdict, ri.verdict),
        ));
    }
    if Verdict::of_one_signed(&r.witness) != Some(r.verdict) {
        v.push(Violation::new(
            w,
            "witness-one-signed",
            format!("witness {} for {:?}", r.witness, r.verdict),
        ));
    }
    if !oracle_equal(w, &r.witness, ctx) {
        v.push(Violation::new(
            w,
            "witness-equality",
            format!("witness {}", r.witness),
        ));
    }
    if (r.verdict == Verdict::Identity) != is_id {
        v.push(Violation::new(
            w,
            "identity-agreement",
            format!("{:?} but oracle identity={}", r.verdict, is_id),
        ));
    }
    if ctx.n() == 1 && klein_bottle_verdict(w) != r.verdict {
        v.push(Violation::new(
            w,
            "klein-closed-form",
            format!("{:?} vs {:?}", r.verdict, klein_bottle_verdict(w)),
        ));
    }
    (r.verdict.as_str().to_string(), v)
}

pub fn run_trichotomy_suite(ctx: &GroupContext, max_len: usize) -> SuiteReport {
    let start = Instant::now();
    let words: Vec<Word> = enumerate_reduced(max_len, true).collect();
    let cells = words.par_iter().map(|w| trichotomy_cell(w, ctx)).collect();
    SuiteReport::assemble("trichotomy", ctx.n(), max_len, cells, start)
}

/// Products of positive-verdict pairs with combined length `<= max_len` stay
/// positive.
pub fn run_closure_suite(ctx: &GroupContext, max_len: usize) -> SuiteReport {
    let start = Instant::now();
    let positives: Vec<Word> = enumerate_reduced::<Generator>(max_len.saturating_sub(1), true)
        .filter(|w| decide_sign(w, ctx).is_ok_and(|r| r.verdict == Verdict::Positive))
        .collect();
    let cells = positives
        .par_iter()
        .flat_map_iter(|u| {
            let room = max_len as u64 - u.len();
            positives
                .iter()
                .take_while(move |v| v.len() <= room)
                .map(move |v| {
                    let p = u.concat(v);
                    let label = format!("{} * {}", u, v);
                    match decide_sign(&p, ctx) {
                        Ok(r) if r.verdict == Verdict::Positive => {
                            ("positive-product".to_string(), vec![])
                        }
                        Ok(r) => (
                            "non-positive-product".to_string(),
                            vec![Violation::new(
                                label,
                                "closure",
                                format!("product verdict {:?}", r.verdict),
                            )],
                        ),
                        Err(e) => (
                            "error".to_string(),
                            vec![Violation::new(label, "decide-sign", e.to_string())],
                        ),
                    }
                })
        })
        .collect();
    SuiteReport::assemble("closure", ctx.n(), max_len, cells, start)
}

/// Handle-reduction positivity against the `(a, b)` Dehornoy-like cone on
/// every σ-word of length `<= max_len`.
pub fn run_dehornoy_suite(max_len: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let ctx = GroupContext::new(2)?;
    let words: Vec<_> = enumerate_reduced::<Sigma>(max_len, true).collect();
    let cells = words
        .par_iter()
        .map(|s| {
            let d = is_d_positive(s);
            let l = is_positive(&sigma_to_ab(s), &OrderingSpec::DehornoyLike, &ctx);
            match (d, l) {
                (Ok(true), Ok(true)) => ("positive".to_string(), vec![]),
                (Ok(false), Ok(false)) => ("non-positive".to_string(), vec![]),
                (Ok(d), Ok(l)) => (
                    "disagreement".to_string(),
                    vec![Violation::new(
                        s,
                        "dehornoy-equivalence",
                        format!("d-positive={} dehornoy-like={}", d, l),
                    )],
                ),
                (Err(e), _) | (_, Err(e)) => (
                    "error".to_string(),
                    vec![Violation::new(s, "dehornoy", e.to_string())],
                ),
            }
        })
        .collect();
    Ok(SuiteReport::assemble("dehornoy", 2, max_len, cells, start))
}

/// `<b>`-convexity scan wrapped as a suite report.
pub fn run_convexity_suite(ctx: &GroupContext, max_len: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let r = convexity_check(ctx, max_len)?;
    let mut counts = BTreeMap::new();
    counts.insert("sandwiched".to_string(), r.sandwiched as u64);
    counts.insert(
        "outside".to_string(),
        (r.elements_checked - r.sandwiched) as u64,
    );
    let violations = r
        .violations
        .iter()
        .map(|x| {
            Violation::new(
                &x.element,
                "convexity",
                format!("between b^{} and b^{}", x.lower, x.upper),
            )
        })
        .collect();
    Ok(SuiteReport {
        kind: "convexity".into(),
        n: ctx.n(),
        max_len,
        counts,
        violations,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}
