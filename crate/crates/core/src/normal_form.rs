//! Positive-prefix normal forms `u · Δ^ell`.
//!
//! Negative letters are removed with `a^-1 = a^n Δ^-1` and
//! `b^-1 = Δ^-1 a^n b a^n`, pushing every `Δ` to the right since it is central.
//! The positive prefix is then rewritten, leftmost rule first, with
//!
//! * `r1`: `a^(n+1) -> Δ`
//! * `r2`: `b^s a^n b^t -> b^(s-1) a b^(t-1)` (`s, t >= 1`), i.e. `b a^n b = a`
//!
//! until neither applies. Both rules remove exactly `n + 1` letters from the
//! prefix, so the loop runs at most `|prefix| / (n + 1)` times.

use serde::Serialize;

use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::word::{Generator, Syllable, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    /// Non-negative word in the alternating shape `b^n0 a^m1 b^n1 … a^mk b^nk`.
    pub prefix: Word,
    /// Exponent of `Δ = a^(n+1)`.
    pub ell: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalFormJson {
    pub prefix: String,
    pub ell: i64,
}

impl NormalForm {
    pub fn to_json(&self) -> NormalFormJson {
        NormalFormJson {
            prefix: self.prefix.to_string(),
            ell: self.ell,
        }
    }

    /// Checks the shape constraints relative to `n`:
    /// the prefix is non-negative, every `a`-exponent is at most `n`, an
    /// `a`-syllable with `b`-syllables on both sides has exponent at most
    /// `n - 1`, and `b a^n b` never occurs.
    pub fn satisfies_shape(&self, ctx: &GroupContext) -> bool {
        let n = ctx.n_i64();
        let syl = self.prefix.syllables();
        if !self.prefix.is_empty() && !self.prefix.is_positive() {
            return false;
        }
        syl.iter().enumerate().all(|(i, s)| match s.gen {
            Generator::B => true,
            Generator::A => {
                let bordered = i > 0 && i + 1 < syl.len();
                let max = if bordered { n - 1 } else { n };
                s.exp >= 1 && s.exp <= max
            }
        })
    }
}

/// Rewrites `w` into a normal form `u · Δ^ell`.
pub fn to_normal_form(w: &Word, ctx: &GroupContext) -> Result<NormalForm> {
    let n = ctx.n_i64();
    let mut ell = 0i64;
    let mut prefix = Word::empty();
    for s in w.syllables() {
        match (s.gen, s.exp > 0) {
            (_, true) => prefix.push(s.gen, s.exp),
            (Generator::A, false) => {
                prefix.push(Generator::A, n * -s.exp);
                ell += s.exp;
            }
            (Generator::B, false) => {
                for _ in 0..-s.exp {
                    prefix.push(Generator::A, n);
                    prefix.push(Generator::B, 1);
                    prefix.push(Generator::A, n);
                }
                ell += s.exp;
            }
        }
    }

    let input_len = w.len();
    let cap = 10 * (input_len + 1) * (input_len + 1);
    let mut syl: Vec<Syllable<Generator>> = prefix.syllables().to_vec();
    let mut steps = 0u64;
    while let Some(rule) = find_rule(&syl, n) {
        steps += 1;
        if steps > cap {
            return Err(Error::StepCap {
                what: "normal form",
                cap,
            });
        }
        match rule {
            Rule::AbsorbDelta(i) => {
                syl[i].exp -= n + 1;
                ell += 1;
            }
            Rule::Relator(i) => {
                syl[i - 1].exp -= 1;
                syl[i].exp = 1;
                syl[i + 1].exp -= 1;
            }
        }
        syl = Word::from_pairs(syl.iter().map(|s| (s.gen, s.exp)))
            .syllables()
            .to_vec();
    }
    let prefix = Word::from_pairs(syl.into_iter().map(|s| (s.gen, s.exp)));
    let nf = NormalForm { prefix, ell };
    debug_assert!(nf.satisfies_shape(ctx), "bad shape {:?}", nf);
    Ok(nf)
}

enum Rule {
    AbsorbDelta(usize),
    Relator(usize),
}

fn find_rule(syl: &[Syllable<Generator>], n: i64) -> Option<Rule> {
    syl.iter().enumerate().find_map(|(i, s)| {
        if s.gen != Generator::A {
            return None;
        }
        if s.exp > n {
            Some(Rule::AbsorbDelta(i))
        } else if s.exp == n && i > 0 && i + 1 < syl.len() {
            Some(Rule::Relator(i))
        } else {
            None
        }
    })
}

/// Expands `u · Δ^ell` back into a word.
pub fn nf_to_word(nf: &NormalForm, ctx: &GroupContext) -> Word {
    nf.prefix.concat(&ctx.delta_power(nf.ell))
}
