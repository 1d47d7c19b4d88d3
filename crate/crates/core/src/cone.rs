//! Sign decision: every element of `Γ_n` is in `<a,b>+`, in `<a^-1,b^-1>+`,
//! or is the identity.
//!
//! A normal form `u · Δ^ell` with `u` nonempty and `ell < 0` is turned into
//! a negative word by a cascade on the state `P | N | Δ^ell`, where `P` is a
//! positive word, `N` a negative word and `P·N·Δ^ell` stays equal to the input:
//!
//! * merge: `P` ends and `N` starts on the same generator; freely reduce.
//! * handle: `P = P' b^j` and `N = a^-1 N'`; use
//!   `b^j a^-1 = a^-1 (a b^j a^-1) = a^-1 (a^-(n-1) b^-1)^j`.
//! * feed: otherwise spend one central `Δ^-1 = a^-(n+1)` at the boundary.
//!
//! Termination: every merge and handle shortens `P`, and feeds happen at most
//! `|ell|` times. The first feed puts `a^-1` letters at the boundary; the
//! normal-form bounds on `a`-exponents (`m <= n - 1` between two `b`-blocks)
//! leave at least one `a^-1` after each merge, which feeds the next handle.

use std::cmp::Ordering;

use serde::Serialize;

use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::normal_form::to_normal_form;
use crate::word::{Generator, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Positive,
    Negative,
    Identity,
}

impl Verdict {
    pub fn mirror(self) -> Self {
        match self {
            Verdict::Positive => Verdict::Negative,
            Verdict::Negative => Verdict::Positive,
            Verdict::Identity => Verdict::Identity,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Positive => "positive",
            Verdict::Negative => "negative",
            Verdict::Identity => "identity",
        }
    }

    /// Verdict read off a one-signed (or empty) word.
    pub fn of_one_signed(w: &Word) -> Option<Self> {
        if w.is_empty() {
            Some(Verdict::Identity)
        } else if w.is_positive() {
            Some(Verdict::Positive)
        } else if w.is_negative() {
            Some(Verdict::Negative)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignResult {
    pub verdict: Verdict,
    /// One-signed word equal to the input (empty for the identity).
    pub witness: Word,
    /// Cascade moves used.
    pub steps: u64,
}

/// `(a^-(n-1) b^-1)^j`, which equals `a b^j a^-1`.
pub fn expand_handle(j: i64, ctx: &GroupContext) -> Word {
    assert!(j >= 1, "handle exponent must be positive");
    let mut w = Word::empty();
    for _ in 0..j {
        w.push(Generator::A, -(ctx.n_i64() - 1));
        w.push(Generator::B, -1);
    }
    w
}

/// Decides the sign of `w` and returns a one-signed witness.
pub fn decide_sign(w: &Word, ctx: &GroupContext) -> Result<SignResult> {
    let nf = to_normal_form(w, ctx)?;
    let q = ctx.q() as i64;
    if nf.prefix.is_empty() || nf.ell >= 0 {
        let witness = nf.prefix.concat(&ctx.delta_power(nf.ell));
        let verdict = Verdict::of_one_signed(&witness).expect("non-negative prefix times Δ^ell");
        return Ok(SignResult {
            verdict,
            witness,
            steps: 0,
        });
    }

    let mut pos = nf.prefix.clone();
    let mut neg = Word::empty();
    let mut ell = nf.ell;
    let mut steps = 0u64;
    let cap = 4 * (pos.len() + 1) * (ell.unsigned_abs() + 1) + 16;
    while let Some(p) = pos.last() {
        steps += 1;
        if steps > cap {
            return Err(Error::StepCap {
                what: "sign cascade",
                cap,
            });
        }
        match neg.first() {
            Some(nh) if nh.gen == p.gen => {
                // merge
                let t = pos.pop().unwrap();
                let cancel = t.exp.min(-nh.exp);
                pos.push(t.gen, t.exp - cancel);
                neg.push_front(nh.gen, cancel);
            }
            Some(nh) if nh.gen == Generator::A && p.gen == Generator::B => {
                // handle
                let j = pos.pop().unwrap().exp;
                neg.push_front(Generator::A, 1);
                let mut front = Word::power(Generator::A, -1);
                front = front.concat(&expand_handle(j, ctx));
                neg = front.concat(&neg);
            }
            _ if ell < 0 => {
                // feed
                neg.push_front(Generator::A, -q);
                ell += 1;
            }
            _ => {
                return Err(Error::ReductionStuck {
                    state: format!("{} | {} | Δ^{}", pos, neg, ell),
                });
            }
        }
        debug_assert!(
            neg.is_empty() || neg.is_negative(),
            "N lost its sign: {}",
            neg
        );
    }
    let witness = neg.concat(&ctx.delta_power(ell));
    let verdict = Verdict::of_one_signed(&witness).expect("cascade output is non-positive");
    debug_assert!(verdict != Verdict::Positive);
    Ok(SignResult {
        verdict,
        witness,
        steps,
    })
}

/// Compares in `≼_n`: `Less` iff `u^-1 v` is positive, i.e. `u ≺ v`.
pub fn cmp_dd(u: &Word, v: &Word, ctx: &GroupContext) -> Result<Ordering> {
    Ok(match decide_sign(&u.invert().concat(v), ctx)?.verdict {
        Verdict::Positive => Ordering::Less,
        Verdict::Negative => Ordering::Greater,
        Verdict::Identity => Ordering::Equal,
    })
}

/// Closed-form sign in the Klein bottle group `Γ_1`: rewrite `w` as `a^t b^s`
/// using `b a = a b^-1`; positive iff `t > 0`, or `t = 0` and `s > 0`.
pub fn klein_bottle_verdict(w: &Word) -> Verdict {
    let (t, s) = klein_bottle_coordinates(w);
    match (t.cmp(&0), s.cmp(&0)) {
        (Ordering::Greater, _) | (Ordering::Equal, Ordering::Greater) => Verdict::Positive,
        (Ordering::Equal, Ordering::Equal) => Verdict::Identity,
        _ => Verdict::Negative,
    }
}

/// `(t, s)` with `w = a^t b^s` in `Γ_1`.
pub fn klein_bottle_coordinates(w: &Word) -> (i64, i64) {
    let (mut t, mut s) = (0i64, 0i64);
    for syl in w.syllables() {
        match syl.gen {
            Generator::A => {
                t += syl.exp;
                if syl.exp % 2 != 0 {
                    s = -s;
                }
            }
            Generator::B => s += syl.exp,
        }
    }
    (t, s)
}
