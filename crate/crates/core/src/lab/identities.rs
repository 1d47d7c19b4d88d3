use std::collections::BTreeMap;
use std::time::Instant;

use super::suite::{SuiteReport, Violation};
use crate::context::GroupContext;
use crate::hecke::oracle_equal;
use crate::word::{Generator, Word};

#[derive(Debug, Clone)]
pub struct NamedIdentity {
    pub name: String,
    pub lhs: Word,
    pub rhs: Word,
}

fn a(e: i64) -> Word {
    Word::power(Generator::A, e)
}

fn b(e: i64) -> Word {
    Word::power(Generator::B, e)
}

fn cat(parts: &[Word]) -> Word {
    parts.iter().fold(Word::empty(), |acc, p| acc.concat(p))
}

/// The identities checked by the identity suite for a given `n`.
pub fn identity_list(ctx: &GroupContext) -> Vec<NamedIdentity> {
    let n = ctx.n_i64();
    let delta = ctx.delta();
    let mut out = Vec::new();
    let mut add = |name: String, lhs: Word, rhs: Word| out.push(NamedIdentity { name, lhs, rhs });

    add("relator".into(), cat(&[b(1), a(n), b(1)]), a(1));
    add("central-a".into(), a(1).concat(&delta), delta.concat(&a(1)));
    add("central-b".into(), b(1).concat(&delta), delta.concat(&b(1)));
    for k in 1..=5 {
        let rhs = cat(&[a(-(n - 1)), b(-1)]).pow(k);
        add(format!("handle-k{}", k), cat(&[a(1), b(k), a(-1)]), rhs);
    }
    for r in 1..=5 {
        let rhs = cat(&[a(n - 1), b(1)]).pow(r);
        add(
            format!("conjugation-r{}", r),
            cat(&[a(-1), b(-r), a(1)]),
            rhs,
        );
    }
    add("non-conradian".into(), cat(&[a(-1), b(1), a(n)]), b(-1));
    if n >= 2 {
        let ab = cat(&[a(1), b(1)]);
        let lhs = cat(&[ab.pow(-2), a(1), b(2), ab.pow(4)]);
        let rhs = cat(&[
            b(-2),
            a(-(n - 2)),
            b(-1),
            a(-(n - 2)),
            b(-1),
            a(-(n - 2)),
            b(-1),
            a(-(n - 1)),
            b(1),
        ]);
        add("ab-expansion".into(), lhs, rhs);
    }
    out
}

pub fn run_identity_suite(ctx: &GroupContext) -> SuiteReport {
    let start = Instant::now();
    let mut counts = BTreeMap::new();
    let mut violations = Vec::new();
    for id in identity_list(ctx) {
        let ok = oracle_equal(&id.lhs, &id.rhs, ctx);
        *counts
            .entry(if ok { "holds" } else { "fails" }.to_string())
            .or_insert(0) += 1;
        if !ok {
            violations.push(Violation {
                word: format!("{} = {}", id.lhs, id.rhs),
                check: id.name.clone(),
                detail: "oracle reports lhs * rhs^-1 nontrivial".into(),
            });
        }
    }
    SuiteReport {
        kind: "identity".into(),
        n: ctx.n(),
        max_len: 0,
        counts,
        violations,
        wall_time_secs: start.elapsed().as_secs_f64(),
    }
}
