//! Syllable words over a two-letter alphabet.
//!
//! A word is stored run-length encoded: a sequence of `(generator, exponent)`
//! syllables with nonzero exponents and no two adjacent syllables on the same
//! generator. Every constructor re-establishes that invariant, so a value of
//! type [`FreeWord`] is always freely reduced.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::Error;

/// A two-letter alphabet. `ALL` fixes the deterministic order used for
/// enumeration.
pub trait Letter: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    const ALL: [Self; 2];

    fn symbol(self) -> &'static str;

    fn from_symbol(s: &str) -> Option<Self>;
}

/// Generators `a`, `b` of the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
}

impl Letter for Generator {
    const ALL: [Self; 2] = [Generator::A, Generator::B];

    fn symbol(self) -> &'static str {
        match self {
            Generator::A => "a",
            Generator::B => "b",
        }
    }

    fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "a" => Some(Generator::A),
            "b" => Some(Generator::B),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable<G> {
    pub gen: G,
    pub exp: i64,
}

impl<G: Letter> Syllable<G> {
    pub fn new(gen: G, exp: i64) -> Self {
        assert!(exp != 0, "syllable exponent must be nonzero");
        Syllable { gen, exp }
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord<G> {
    syllables: Vec<Syllable<G>>,
}

/// Words over `{a, b}`.
pub type Word = FreeWord<Generator>;

impl<G: Letter> FreeWord<G> {
    pub fn empty() -> Self {
        FreeWord {
            syllables: Vec::new(),
        }
    }

    pub fn power(gen: G, exp: i64) -> Self {
        let mut w = Self::empty();
        w.push(gen, exp);
        w
    }

    /// Builds a word from `(generator, exponent)` pairs, merging and
    /// cancelling as needed. Zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (G, i64)>>(pairs: I) -> Self {
        let mut w = Self::empty();
        for (g, e) in pairs {
            w.push(g, e);
        }
        w
    }

    pub fn syllables(&self) -> &[Syllable<G>] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn num_syllables(&self) -> usize {
        self.syllables.len()
    }

    /// Letter length: the sum of `|exp|`.
    pub fn len(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    pub fn first(&self) -> Option<Syllable<G>> {
        self.syllables.first().copied()
    }

    pub fn last(&self) -> Option<Syllable<G>> {
        self.syllables.last().copied()
    }

    /// Right-multiplies by `gen^exp`, keeping the word freely reduced.
    pub fn push(&mut self, gen: G, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.gen == gen => {
                last.exp += exp;
                if last.exp == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable { gen, exp }),
        }
    }

    /// Left-multiplies by `gen^exp`.
    pub fn push_front(&mut self, gen: G, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.syllables.first_mut() {
            Some(first) if first.gen == gen => {
                first.exp += exp;
                if first.exp == 0 {
                    self.syllables.remove(0);
                }
            }
            _ => self.syllables.insert(0, Syllable { gen, exp }),
        }
    }

    /// Removes and returns the last syllable.
    pub fn pop(&mut self) -> Option<Syllable<G>> {
        self.syllables.pop()
    }

    /// Free-group product `self * other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for s in &other.syllables {
            out.push(s.gen, s.exp);
        }
        out
    }

    pub fn invert(&self) -> Self {
        FreeWord {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    gen: s.gen,
                    exp: -s.exp,
                })
                .collect(),
        }
    }

    /// `self^k` in the free group (negative `k` inverts).
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = Self::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.concat(self).concat(&g.invert())
    }

    /// All exponents strictly positive (false for the empty word).
    pub fn is_positive(&self) -> bool {
        !self.is_empty() && self.syllables.iter().all(|s| s.exp > 0)
    }

    /// All exponents strictly negative (false for the empty word).
    pub fn is_negative(&self) -> bool {
        !self.is_empty() && self.syllables.iter().all(|s| s.exp < 0)
    }

    /// Sum of exponents of `gen`.
    pub fn exponent_sum(&self, gen: G) -> i64 {
        self.syllables
            .iter()
            .filter(|s| s.gen == gen)
            .map(|s| s.exp)
            .sum()
    }

    /// Letters as signed unit steps, left to right.
    pub fn letters(&self) -> impl Iterator<Item = (G, i64)> + '_ {
        self.syllables.iter().flat_map(|s| {
            std::iter::repeat_n((s.gen, s.exp.signum()), s.exp.unsigned_abs() as usize)
        })
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.syllables.iter().all(|s| s.exp != 0)
            && self.syllables.windows(2).all(|w| w[0].gen != w[1].gen)
    }
}

impl<G: Letter> fmt::Display for FreeWord<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(s.gen.symbol())?;
            if s.exp != 1 {
                write!(f, "^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

impl<G: Letter> FromStr for FreeWord<G> {
    type Err = Error;

    /// Grammar: `word := "1" | term (SP term)*`, `term := gen ("^" int)?`.
    fn from_str(text: &str) -> Result<Self, Error> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(Error::Parse {
                offset: pos,
                message: "empty input".into(),
            });
        }
        let rest = text[pos..].trim_end();
        if rest == "1" {
            return Ok(Self::empty());
        }

        let mut word = Self::empty();
        while pos < bytes.len() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                pos += 1;
            }
            let sym = &text[start..pos];
            let gen = G::from_symbol(sym).ok_or_else(|| Error::Parse {
                offset: start,
                message: if sym.is_empty() {
                    format!("expected generator, found {:?}", &text[start..=start])
                } else {
                    format!("unknown generator {:?}", sym)
                },
            })?;
            let mut exp = 1i64;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let num_start = pos;
                if pos < bytes.len() && bytes[pos] == b'-' {
                    pos += 1;
                }
                let digits_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if digits_start == pos {
                    return Err(Error::Parse {
                        offset: pos,
                        message: "expected integer exponent".into(),
                    });
                }
                exp = text[num_start..pos].parse().map_err(|_| Error::Parse {
                    offset: num_start,
                    message: "exponent out of range".into(),
                })?;
                if exp == 0 {
                    return Err(Error::ZeroExponent { offset: num_start });
                }
            }
            word.push(gen, exp);
            let after = pos;
            skip_ws(&mut pos);
            if pos < bytes.len() && pos == after {
                return Err(Error::Parse {
                    offset: pos,
                    message: "expected whitespace between terms".into(),
                });
            }
        }
        Ok(word)
    }
}

/// Parses a word over `{a, b}`.
pub fn parse_word(text: &str) -> Result<Word, Error> {
    text.parse()
}

/// Canonical text form; `"1"` for the identity.
pub fn format_word<G: Letter>(w: &FreeWord<G>) -> String {
    w.to_string()
}

/// Every freely reduced word of letter length `<= max_len`, ordered by length
/// and then lexicographically with letter order `x < x^-1 < y < y^-1`.
/// With `signed == false` only positive letters are used.
pub fn enumerate_reduced<G: Letter>(
    max_len: usize,
    signed: bool,
) -> impl Iterator<Item = FreeWord<G>> {
    (0..=max_len).flat_map(move |len| words_of_length::<G>(len, signed))
}

/// Number of freely reduced words of letter length exactly `len` over the
/// symmetric alphabet.
pub fn reduced_count(len: usize) -> u64 {
    if len == 0 {
        1
    } else {
        4 * 3u64.pow(len as u32 - 1)
    }
}

fn words_of_length<G: Letter>(len: usize, signed: bool) -> Vec<FreeWord<G>> {
    let letters: Vec<(G, i64)> = if signed {
        G::ALL.iter().flat_map(|&g| [(g, 1), (g, -1)]).collect()
    } else {
        G::ALL.iter().map(|&g| (g, 1)).collect()
    };
    let mut out = Vec::new();
    let mut stack: Vec<(G, i64)> = Vec::with_capacity(len);
    fn rec<G: Letter>(
        len: usize,
        letters: &[(G, i64)],
        stack: &mut Vec<(G, i64)>,
        out: &mut Vec<FreeWord<G>>,
    ) {
        if stack.len() == len {
            out.push(FreeWord::from_pairs(stack.iter().copied()));
            return;
        }
        for &(g, e) in letters {
            if let Some(&(pg, pe)) = stack.last() {
                if pg == g && pe == -e {
                    continue;
                }
            }
            stack.push((g, e));
            rec(len, letters, stack, out);
            stack.pop();
        }
    }
    rec(len, &letters, &mut stack, &mut out);
    out
}
