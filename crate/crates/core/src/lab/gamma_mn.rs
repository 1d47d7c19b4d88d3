//! `Γ_{m,n} = <a, b : b a^n b = a^m>` and the substitution showing it is
//! `Γ_{m+n-1}`.

use crate::word::{Generator, Word};

const REWRITE_CAP: usize = 100;

/// Leftmost application of `b^-1 a^m b^-1 -> a^n` on syllables.
fn rewrite_once(w: &Word, m: i64, n: i64) -> Option<Word> {
    let syl = w.syllables();
    let i = (1..syl.len().saturating_sub(1)).find(|&i| {
        syl[i].gen == Generator::A
            && syl[i].exp == m
            && syl[i - 1].exp <= -1
            && syl[i + 1].exp <= -1
    })?;
    let mut pairs: Vec<(Generator, i64)> = syl[..i - 1].iter().map(|s| (s.gen, s.exp)).collect();
    pairs.extend([
        (Generator::B, syl[i - 1].exp + 1),
        (Generator::A, n),
        (Generator::B, syl[i + 1].exp + 1),
    ]);
    pairs.extend(syl[i + 2..].iter().map(|s| (s.gen, s.exp)));
    Some(Word::from_pairs(pairs))
}

/// The rewrite sequence starting at `(b a^(n-1))^-1 a^(m+n-1) (b a^(n-1))^-1`,
/// using only free reduction and `b^-1 a^m b^-1 -> a^n`.
pub fn gamma_mn_rewrite(m: u32, n: u32) -> Vec<Word> {
    let (m, n) = (m as i64, n as i64);
    let t = Word::from_pairs([(Generator::B, 1), (Generator::A, n - 1)]).invert();
    let mut w = t.concat(&Word::power(Generator::A, m + n - 1)).concat(&t);
    let mut trace = vec![w.clone()];
    for _ in 0..REWRITE_CAP {
        match rewrite_once(&w, m, n) {
            Some(next) => {
                w = next;
                trace.push(w.clone());
            }
            None => break,
        }
    }
    trace
}

/// True when the rewrite reaches the single letter `a`.
pub fn verify_gamma_mn_identity(m: u32, n: u32) -> bool {
    if m == 0 || n == 0 {
        return false;
    }
    gamma_mn_rewrite(m, n)
        .last()
        .is_some_and(|w| *w == Word::power(Generator::A, 1))
}
