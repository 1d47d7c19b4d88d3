//! Sampling probe for conjugates of the generators. Nothing is asserted: the
//! analogue of property S for these orderings is open.

use serde::Serialize;

use crate::context::GroupContext;
use crate::error::Result;
use crate::orderings::{is_positive, OrderingSpec};
use crate::word::{enumerate_reduced, Generator, Letter, Word};

#[derive(Debug, Clone, Serialize)]
pub struct PropertySProbe {
    pub n: u32,
    pub max_len: usize,
    pub ordering: String,
    pub conjugates_checked: u64,
    pub non_positive: u64,
    /// First few `(g, x)` with `g x g^-1` not positive.
    pub samples: Vec<(String, String)>,
}

/// Counts conjugates `g x g^-1`, `x ∈ {a, b}`, `|g| <= max_len`, that are not
/// positive for `spec`.
pub fn property_s_probe(
    ctx: &GroupContext,
    spec: &OrderingSpec,
    max_len: usize,
) -> Result<PropertySProbe> {
    let mut probe = PropertySProbe {
        n: ctx.n(),
        max_len,
        ordering: format!("{:?}", spec),
        conjugates_checked: 0,
        non_positive: 0,
        samples: Vec::new(),
    };
    for g in enumerate_reduced::<Generator>(max_len, true) {
        for x in [Generator::A, Generator::B] {
            let c = Word::power(x, 1).conjugate_by(&g);
            probe.conjugates_checked += 1;
            if !is_positive(&c, spec, ctx)? {
                probe.non_positive += 1;
                if probe.samples.len() < 8 {
                    probe.samples.push((g.to_string(), x.symbol().to_string()));
                }
            }
        }
    }
    Ok(probe)
}
