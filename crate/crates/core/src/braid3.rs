//! The braid group `B_3 = Γ_2` in Artin generators.
//!
//! `σ1 = a b`, `σ2 = b^-1`; conversely `a = σ1 σ2`, `b = σ2^-1`.
//! The σ alphabet stays in this module; everything else speaks `(a, b)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{FreeWord, Generator, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sigma {
    S1,
    S2,
}

impl Letter for Sigma {
    const ALL: [Self; 2] = [Sigma::S1, Sigma::S2];

    fn symbol(self) -> &'static str {
        match self {
            Sigma::S1 => "s1",
            Sigma::S2 => "s2",
        }
    }

    fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "s1" => Some(Sigma::S1),
            "s2" => Some(Sigma::S2),
            _ => None,
        }
    }
}

pub type SigmaWord = FreeWord<Sigma>;

pub fn sigma_to_ab(sw: &SigmaWord) -> Word {
    let s1 = Word::from_pairs([(Generator::A, 1), (Generator::B, 1)]);
    let s2 = Word::power(Generator::B, -1);
    sw.syllables().iter().fold(Word::empty(), |acc, s| {
        let base = match s.gen {
            Sigma::S1 => &s1,
            Sigma::S2 => &s2,
        };
        acc.concat(&base.pow(s.exp))
    })
}

pub fn ab_to_sigma(w: &Word) -> SigmaWord {
    let a = SigmaWord::from_pairs([(Sigma::S1, 1), (Sigma::S2, 1)]);
    let b = SigmaWord::power(Sigma::S2, -1);
    w.syllables().iter().fold(SigmaWord::empty(), |acc, s| {
        let base = match s.gen {
            Generator::A => &a,
            Generator::B => &b,
        };
        acc.concat(&base.pow(s.exp))
    })
}

const HANDLE_STEP_CAP: u64 = 1_000_000;

/// Handle reduction: repeatedly replaces the leftmost `σ1`-handle
/// `σ1^e σ2^k σ1^-e` by `σ2^-e σ1^k σ2^e` until all `σ1` exponents share a sign.
pub fn dehornoy_reduce(sw: &SigmaWord) -> Result<SigmaWord> {
    let mut word = sw.clone();
    let mut steps = 0u64;
    loop {
        let syl = word.syllables();
        let handle = (0..syl.len().saturating_sub(2)).find(|&i| {
            syl[i].gen == Sigma::S1
                && syl[i + 2].gen == Sigma::S1
                && (syl[i].exp > 0) != (syl[i + 2].exp > 0)
        });
        let Some(i) = handle else { return Ok(word) };
        steps += 1;
        if steps > HANDLE_STEP_CAP {
            return Err(Error::StepCap {
                what: "handle reduction",
                cap: HANDLE_STEP_CAP,
            });
        }
        let e = syl[i].exp.signum();
        let k = syl[i + 1].exp;
        let mut pairs: Vec<(Sigma, i64)> = syl[..i].iter().map(|s| (s.gen, s.exp)).collect();
        pairs.extend([
            (Sigma::S1, syl[i].exp - e),
            (Sigma::S2, -e),
            (Sigma::S1, k),
            (Sigma::S2, e),
            (Sigma::S1, syl[i + 2].exp + e),
        ]);
        pairs.extend(syl[i + 3..].iter().map(|s| (s.gen, s.exp)));
        word = SigmaWord::from_pairs(pairs.into_iter().filter(|&(_, x)| x != 0));
    }
}

/// 1-positive (all `σ1` exponents positive) or 2-positive (`σ2^k`, `k > 0`).
pub fn is_d_positive(sw: &SigmaWord) -> Result<bool> {
    let red = dehornoy_reduce(sw)?;
    let s1: Vec<i64> = red
        .syllables()
        .iter()
        .filter(|s| s.gen == Sigma::S1)
        .map(|s| s.exp)
        .collect();
    Ok(if s1.is_empty() {
        red.exponent_sum(Sigma::S2) > 0
    } else {
        s1.iter().all(|&e| e > 0)
    })
}

/// Projective cones of `P^1(R)`: `U = {x > y > 0}`, `V = {0 < x < y}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConeRegion {
    U,
    V,
}

impl ConeRegion {
    /// Boundary rays spanning the cone.
    pub fn rays(self) -> [[i64; 2]; 2] {
        match self {
            ConeRegion::U => [[1, 0], [1, 1]],
            ConeRegion::V => [[1, 1], [0, 1]],
        }
    }

    fn contains_closed(self, v: [i64; 2]) -> bool {
        let [x, y] = v;
        match self {
            ConeRegion::U => x >= y && y >= 0,
            ConeRegion::V => y >= x && x >= 0,
        }
    }
}

impl fmt::Display for ConeRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConeRegion::U => "U",
            ConeRegion::V => "V",
        })
    }
}

pub type IntMatrix = [[i64; 2]; 2];

pub const A_BAR: IntMatrix = [[0, 1], [-1, 1]];
pub const B_BAR: IntMatrix = [[1, 0], [1, 1]];

pub fn mat_mul(x: &IntMatrix, y: &IntMatrix) -> IntMatrix {
    let mut r = [[0; 2]; 2];
    for (i, row) in r.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    r
}

fn mat_apply(m: &IntMatrix, v: [i64; 2]) -> [i64; 2] {
    [
        m[0][0] * v[0] + m[0][1] * v[1],
        m[1][0] * v[0] + m[1][1] * v[1],
    ]
}

/// Integer image of a word under `a -> ā`, `b -> b̄` (inverses are exact since
/// both matrices have determinant 1).
pub fn b3_matrix(w: &Word) -> IntMatrix {
    let inv = |m: &IntMatrix| [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]];
    w.letters().fold([[1, 0], [0, 1]], |acc, (g, e)| {
        let m = match g {
            Generator::A => A_BAR,
            Generator::B => B_BAR,
        };
        mat_mul(&acc, &if e > 0 { m } else { inv(&m) })
    })
}

pub fn is_proj_identity_int(m: &IntMatrix) -> bool {
    m[0][1] == 0 && m[1][0] == 0 && m[0][0] == m[1][1] && m[0][0].abs() == 1
}

/// `m` maps every cone in `from` into `to`: the images of the spanning rays
/// lie, up to one common sign per cone, in the closure of `to`. Since `m` is
/// invertible, open cones then land in open `to`.
pub fn cone_maps_into(m: &IntMatrix, from: &[ConeRegion], to: ConeRegion) -> bool {
    from.iter().all(|c| {
        let imgs = c.rays().map(|r| mat_apply(m, r));
        [1, -1].iter().any(|&s| {
            imgs.iter()
                .all(|v| to.contains_closed([s * v[0], s * v[1]]))
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeCertificate {
    /// Cyclic conjugate of the reduced word whose image maps `from` into `to`.
    pub conjugate: String,
    pub from: ConeRegion,
    pub to: ConeRegion,
}

/// Ping-pong certificate that a positive word is nontrivial in `PSL(2, Z)`.
///
/// The word is cyclically reduced using `ā^3 = id` and `b̄ ā^2 b̄ = ā`; then
/// the cyclic rotations are tried until one maps `U` into `V` or `V` into `U`.
/// Returns `None` for non-positive input, for powers of `Δ` (trivial image),
/// for conjugates of powers of `σ1 = a b` (parabolic, no ping-pong), and for
/// anything left without a certificate.
pub fn cone_certificate_b3(w: &Word) -> Option<ConeCertificate> {
    if !w.is_positive() {
        return None;
    }
    let cyc = cyclic_reduce(w.syllables().iter().map(|s| (s.gen, s.exp)).collect());
    if cyc.is_empty() || cyc.iter().all(|&(_, e)| e == 1) && cyc.len().is_multiple_of(2) {
        return None;
    }
    (0..cyc.len()).find_map(|r| {
        let rot = Word::from_pairs(cyc[r..].iter().chain(&cyc[..r]).copied());
        let m = b3_matrix(&rot);
        let cert = |from, to| ConeCertificate {
            conjugate: rot.to_string(),
            from,
            to,
        };
        if cone_maps_into(&m, &[ConeRegion::U], ConeRegion::V) {
            Some(cert(ConeRegion::U, ConeRegion::V))
        } else if cone_maps_into(&m, &[ConeRegion::V], ConeRegion::U) {
            Some(cert(ConeRegion::V, ConeRegion::U))
        } else {
            None
        }
    })
}

pub fn cone_certify_b3(w: &Word) -> Option<(ConeRegion, ConeRegion)> {
    cone_certificate_b3(w).map(|c| (c.from, c.to))
}

/// Cyclic syllable word with `a`-exponents reduced mod 3 and `b a^2 b -> a`
/// applied around the cycle.
fn cyclic_reduce(mut cyc: Vec<(Generator, i64)>) -> Vec<(Generator, i64)> {
    loop {
        // Merge neighbours (cyclically) and reduce a-exponents.
        let mut merged: Vec<(Generator, i64)> = Vec::new();
        for (g, e) in cyc {
            let e = if g == Generator::A {
                e.rem_euclid(3)
            } else {
                e
            };
            if e == 0 {
                continue;
            }
            match merged.last_mut() {
                Some(last) if last.0 == g => last.1 += e,
                _ => merged.push((g, e)),
            }
            if let Some(&(Generator::A, x)) = merged.last() {
                if x % 3 == 0 {
                    merged.pop();
                } else {
                    merged.last_mut().unwrap().1 = x % 3;
                }
            }
        }
        if merged.len() > 1 && merged[0].0 == merged[merged.len() - 1].0 {
            let (g, e) = merged.pop().unwrap();
            merged[0].1 += e;
            if g == Generator::A {
                merged[0].1 %= 3;
                if merged[0].1 == 0 {
                    merged.remove(0);
                }
            }
            cyc = merged;
            continue;
        }
        // b^s a^2 b^t -> b^(s-1) a b^(t-1) with three distinct syllables.
        let len = merged.len();
        let site = if len >= 4 {
            (0..len).find(|&i| merged[i] == (Generator::A, 2))
        } else {
            None
        };
        match site {
            Some(i) => {
                merged[(i + len - 1) % len].1 -= 1;
                merged[i].1 = 1;
                merged[(i + 1) % len].1 -= 1;
                cyc = merged;
            }
            None => return merged,
        }
    }
}
