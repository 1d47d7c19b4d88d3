//! Left-orderings of `Γ_n` built from the positive cone `<a,b>+`.
//!
//! * `Dd`: cone `<a,b>+`.
//! * `DdReversed`: cone `<a^-1,b^-1>+`.
//! * `DehornoyLike`: the reversed order on the convex subgroup `<b>`
//!   extended by `≼_n`, i.e. cone `{b^-k : k >= 1} ∪ (<a,b>+ \ <b>)`.
//! * `Conjugated(base, g)`: `x` is positive iff `g x g^-1` is `base`-positive,
//!   which is the order with cone `g^-1 P g`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::cone::{decide_sign, Verdict};
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::hecke::{b_power_of, oracle_equal};
use crate::word::{enumerate_reduced, Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderingSpec {
    Dd,
    DdReversed,
    DehornoyLike,
    Conjugated {
        base: Box<OrderingSpec>,
        conjugator: Word,
    },
}

impl OrderingSpec {
    /// Conjugates a non-conjugated base ordering.
    pub fn conjugated(base: OrderingSpec, conjugator: Word) -> Result<Self> {
        if matches!(base, OrderingSpec::Conjugated { .. }) {
            return Err(Error::InvalidOrdering(
                "conjugation nesting depth is limited to 1".into(),
            ));
        }
        Ok(OrderingSpec::Conjugated {
            base: Box::new(base),
            conjugator,
        })
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "dd" => Ok(OrderingSpec::Dd),
            "ddrev" => Ok(OrderingSpec::DdReversed),
            "dlike" => Ok(OrderingSpec::DehornoyLike),
            other => Err(Error::InvalidOrdering(format!(
                "unknown ordering {:?}",
                other
            ))),
        }
    }
}

pub fn is_positive(w: &Word, spec: &OrderingSpec, ctx: &GroupContext) -> Result<bool> {
    Ok(match spec {
        OrderingSpec::Dd => decide_sign(w, ctx)?.verdict == Verdict::Positive,
        OrderingSpec::DdReversed => decide_sign(w, ctx)?.verdict == Verdict::Negative,
        OrderingSpec::DehornoyLike => match b_power_of(w, ctx) {
            Some(k) => k <= -1,
            None => decide_sign(w, ctx)?.verdict == Verdict::Positive,
        },
        OrderingSpec::Conjugated { base, conjugator } => {
            is_positive(&w.conjugate_by(conjugator), base, ctx)?
        }
    })
}

/// `Less` iff `u ≺ v`, i.e. `u^-1 v` is positive.
pub fn cmp(u: &Word, v: &Word, spec: &OrderingSpec, ctx: &GroupContext) -> Result<Ordering> {
    let d = u.invert().concat(v);
    if is_positive(&d, spec, ctx)? {
        Ok(Ordering::Less)
    } else if is_positive(&d.invert(), spec, ctx)? {
        Ok(Ordering::Greater)
    } else {
        Ok(Ordering::Equal)
    }
}

/// Minimum, for `spec`, of the positive elements represented by words of
/// length `<= max_len`. Ties between equal elements keep the first word in
/// enumeration order.
pub fn smallest_positive_in_ball(
    spec: &OrderingSpec,
    ctx: &GroupContext,
    max_len: usize,
) -> Result<Word> {
    if max_len == 0 {
        return Err(Error::OutOfRange("max_len must be at least 1".into()));
    }
    let mut best: Option<Word> = None;
    for w in enumerate_reduced::<Generator>(max_len, true) {
        if !is_positive(&w, spec, ctx)? {
            continue;
        }
        best = match best {
            Some(b) if cmp(&w, &b, spec, ctx)? != Ordering::Less => Some(b),
            _ => Some(w),
        };
    }
    Ok(best.expect("some generator is positive"))
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvexityViolation {
    pub element: String,
    pub lower: i64,
    pub upper: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvexityReport {
    pub n: u32,
    pub max_len: usize,
    pub elements_checked: usize,
    pub sandwiched: usize,
    pub violations: Vec<ConvexityViolation>,
}

/// Searches for `c ∉ <b>` with `b^r ≺_n c ≺_n b^s`, `|r|, |s| <= max_len`,
/// over all words `c` of length `<= max_len`.
pub fn convexity_check(ctx: &GroupContext, max_len: usize) -> Result<ConvexityReport> {
    let bound = max_len as i64;
    let mut report = ConvexityReport {
        n: ctx.n(),
        max_len,
        elements_checked: 0,
        sandwiched: 0,
        violations: Vec::new(),
    };
    for c in enumerate_reduced::<Generator>(max_len, true) {
        report.elements_checked += 1;
        // b^k increases with k, so the extreme powers decide the sandwich.
        let below =
            crate::cone::cmp_dd(&Word::power(Generator::B, -bound), &c, ctx)? == Ordering::Less;
        let above =
            crate::cone::cmp_dd(&c, &Word::power(Generator::B, bound), ctx)? == Ordering::Less;
        if !(below && above) {
            continue;
        }
        report.sandwiched += 1;
        if b_power_of(&c, ctx).is_none() {
            let mut lower = -bound;
            while crate::cone::cmp_dd(&Word::power(Generator::B, lower + 1), &c, ctx)?
                == Ordering::Less
            {
                lower += 1;
            }
            report.violations.push(ConvexityViolation {
                element: c.to_string(),
                lower,
                upper: lower + 1,
            });
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceRow {
    pub element: String,
    /// `positive[k-1]` is the positivity of `(b^k a)^-1 c (b^k a)`.
    pub positive: Vec<bool>,
    /// First `k` from which the row is positive through `k_max`.
    pub stable_from: Option<u32>,
    /// Bound `n0 + 1` when `c = b^n0 a w` with no negative `a` in `w`.
    pub proof_bound: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    pub n: u32,
    pub k_max: u32,
    pub rows: Vec<ConvergenceRow>,
    /// Smallest positive (ball of radius 5) of the conjugate `(ba)(≼'_n)`.
    pub conjugated_minimum: String,
    /// Smallest positive (ball of radius 5) of the order with cone `(ba) P (ba)^-1`.
    pub row_ordering_minimum: String,
    pub minima_differ_from_b_inverse: bool,
    /// Rows that did not become positive within `k_max`.
    pub unstable: Vec<String>,
}

/// For `c` not in `<b>` written `b^n0 a w` with `w` free of negative
/// `a`-letters, returns `n0`; `<b>`-elements get `0`.
fn convergence_bound(c: &Word, ctx: &GroupContext) -> Option<u32> {
    if b_power_of(c, ctx).is_some() {
        return Some(1);
    }
    let syl = c.syllables();
    let (n0, rest) = match syl.first() {
        Some(s) if s.gen == Generator::B => (s.exp, &syl[1..]),
        _ => (0, syl),
    };
    let starts_with_a = rest
        .first()
        .is_some_and(|s| s.gen == Generator::A && s.exp >= 1);
    let no_neg_a = rest.iter().all(|s| s.gen != Generator::A || s.exp > 0);
    (starts_with_a && no_neg_a).then(|| (n0.max(0) + 1) as u32)
}

/// Positivity of each `c_i` under the conjugates by `b^k a`, `k = 1..=k_max`.
///
/// A row records `(b^k a)^-1 c (b^k a) ∈ P_{≼'}`, the computation showing
/// that conjugates of `≼'_n` accumulate on `≼'_n`; in `OrderingSpec` terms that
/// is `Conjugated(DehornoyLike, (b^k a)^-1)`.
pub fn convergence_experiment(
    ctx: &GroupContext,
    elements: &[Word],
    k_max: u32,
) -> Result<ConvergenceReport> {
    let mut rows = Vec::new();
    let mut unstable = Vec::new();
    for c in elements {
        let mut positive = Vec::new();
        for k in 1..=k_max {
            let g = Word::from_pairs([(Generator::B, k as i64), (Generator::A, 1)]);
            let spec = OrderingSpec::conjugated(OrderingSpec::DehornoyLike, g.invert())?;
            positive.push(is_positive(c, &spec, ctx)?);
        }
        let stable_from = match positive.iter().rposition(|p| !p) {
            None if !positive.is_empty() => Some(1),
            Some(i) if i + 1 < positive.len() => Some(i as u32 + 2),
            _ => None,
        };
        if stable_from.is_none() {
            unstable.push(c.to_string());
        }
        rows.push(ConvergenceRow {
            element: c.to_string(),
            positive,
            stable_from,
            proof_bound: convergence_bound(c, ctx),
        });
    }
    let ba: Word = Word::from_pairs([(Generator::B, 1), (Generator::A, 1)]);
    let conj = OrderingSpec::conjugated(OrderingSpec::DehornoyLike, ba.clone())?;
    let row_order = OrderingSpec::conjugated(OrderingSpec::DehornoyLike, ba.invert())?;
    let m1 = smallest_positive_in_ball(&conj, ctx, 5)?;
    let m2 = smallest_positive_in_ball(&row_order, ctx, 5)?;
    let b_inv = Word::power(Generator::B, -1);
    let differ = !oracle_equal(&m1, &b_inv, ctx) && !oracle_equal(&m2, &b_inv, ctx);
    Ok(ConvergenceReport {
        n: ctx.n(),
        k_max,
        rows,
        conjugated_minimum: m1.to_string(),
        row_ordering_minimum: m2.to_string(),
        minima_differ_from_b_inverse: differ,
        unstable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::oracle_is_identity;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn ctx(n: u32) -> GroupContext {
        GroupContext::new(n).unwrap()
    }

    #[test]
    fn dehornoy_like_examples() {
        let c = ctx(2);
        assert!(is_positive(&w("b^-1"), &OrderingSpec::DehornoyLike, &c).unwrap());
        assert!(!is_positive(&w("b"), &OrderingSpec::DehornoyLike, &c).unwrap());
        let spec = OrderingSpec::conjugated(OrderingSpec::DehornoyLike, w("b a")).unwrap();
        assert!(is_positive(&w("a^-1 b^-1 a"), &spec, &c).unwrap());
    }

    #[test]
    fn cmp_examples() {
        let c = ctx(2);
        assert_eq!(
            cmp(&Word::empty(), &w("b^-1"), &OrderingSpec::DehornoyLike, &c).unwrap(),
            Ordering::Less
        );
        for spec in [
            OrderingSpec::Dd,
            OrderingSpec::DdReversed,
            OrderingSpec::DehornoyLike,
        ] {
            assert_eq!(
                cmp(&w("a b^2"), &w("a b^2"), &spec, &c).unwrap(),
                Ordering::Equal
            );
        }
        assert_eq!(
            cmp(&Word::empty(), &w("a"), &OrderingSpec::DdReversed, &c).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn nesting_is_rejected() {
        let inner = OrderingSpec::conjugated(OrderingSpec::Dd, w("a")).unwrap();
        assert!(OrderingSpec::conjugated(inner, w("b")).is_err());
        assert!(OrderingSpec::parse("dlike").is_ok());
        assert!(OrderingSpec::parse("xyz").is_err());
    }

    #[test]
    fn smallest_positives() {
        let c = ctx(2);
        let m = smallest_positive_in_ball(&OrderingSpec::DehornoyLike, &c, 4).unwrap();
        assert!(oracle_equal(&m, &w("b^-1"), &c));
        let spec = OrderingSpec::conjugated(OrderingSpec::DehornoyLike, w("b a")).unwrap();
        let m = smallest_positive_in_ball(&spec, &c, 5).unwrap();
        assert!(oracle_equal(&m, &w("a^-1 b^-1 a"), &c), "got {}", m);
    }

    #[test]
    fn dd_minimum_in_radius_two_ball() {
        // Exhaustive oracle over the ball: the minimum is below every other
        // positive element.
        let c = ctx(2);
        let m = smallest_positive_in_ball(&OrderingSpec::Dd, &c, 2).unwrap();
        let positives: Vec<Word> = enumerate_reduced::<Generator>(2, true)
            .filter(|x| decide_sign(x, &c).unwrap().verdict == Verdict::Positive)
            .collect();
        for p in &positives {
            let d = decide_sign(&m.invert().concat(p), &c).unwrap().verdict;
            assert!(d != Verdict::Negative, "{} below minimum {}", p, m);
        }
        assert_eq!(m.to_string(), "b");
    }

    #[test]
    fn convexity_small() {
        for n in [2, 3] {
            let r = convexity_check(&ctx(n), 5).unwrap();
            assert!(r.violations.is_empty(), "{:?}", r.violations);
        }
    }

    #[test]
    fn convergence_rows() {
        let c = ctx(2);
        let elems = vec![w("b^-1"), w("a"), w("a b"), w("a b^2")];
        let r = convergence_experiment(&c, &elems, 5).unwrap();
        for row in &r.rows {
            assert!(row.positive.iter().all(|&p| p), "{:?}", row);
        }
        assert!(r.minima_differ_from_b_inverse);
        assert!(!oracle_is_identity(
            &w("a^-1 b^-1 a").concat(&w("b^-1").invert()),
            &c
        ));
    }
}
