use std::collections::HashMap;
use std::fmt::Write;

use serde::Serialize;

use crate::cone::{decide_sign, Verdict};
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::hecke::element_key;
use crate::word::{enumerate_reduced, Generator, Letter, Word};

pub const MAX_RADIUS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CayleyFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct CayleyNode {
    pub id: usize,
    pub word: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct CayleyEdge {
    pub from: usize,
    pub to: usize,
    pub generator: String,
    pub direction: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CayleyBall {
    pub radius: usize,
    pub n: u32,
    pub nodes: Vec<CayleyNode>,
    pub edges: Vec<CayleyEdge>,
}

impl CayleyBall {
    /// The ball of the given radius, one node per group element; the first
    /// word in enumeration order represents it.
    pub fn build(ctx: &GroupContext, radius: usize) -> Result<Self> {
        if radius > MAX_RADIUS {
            return Err(Error::OutOfRange(format!(
                "radius {} exceeds {}",
                radius, MAX_RADIUS
            )));
        }
        let mut index = HashMap::new();
        let mut reps: Vec<Word> = Vec::new();
        for w in enumerate_reduced::<Generator>(radius, true) {
            index.entry(element_key(&w, ctx)).or_insert_with(|| {
                reps.push(w);
                reps.len() - 1
            });
        }
        let mut nodes = Vec::with_capacity(reps.len());
        let mut edges = Vec::new();
        for (id, w) in reps.iter().enumerate() {
            nodes.push(CayleyNode {
                id,
                word: w.to_string(),
                verdict: decide_sign(w, ctx)?.verdict,
            });
            for g in Generator::ALL {
                let next = w.concat(&Word::power(g, 1));
                if let Some(&to) = index.get(&element_key(&next, ctx)) {
                    edges.push(CayleyEdge {
                        from: id,
                        to,
                        generator: g.symbol().into(),
                        direction: "+".into(),
                    });
                }
            }
        }
        Ok(CayleyBall {
            radius,
            n: ctx.n(),
            nodes,
            edges,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        writeln!(s, "digraph cayley_ball {{").unwrap();
        writeln!(
            s,
            "  graph [label=\"n = {}, radius = {}\"];",
            self.n, self.radius
        )
        .unwrap();
        writeln!(s, "  node [shape=circle, fontsize=10];").unwrap();
        for node in &self.nodes {
            let style = match node.verdict {
                Verdict::Positive => ", style=filled, fillcolor=black, fontcolor=white",
                Verdict::Identity => ", shape=doublecircle",
                Verdict::Negative => "",
            };
            writeln!(s, "  n{} [label=\"{}\"{}];", node.id, node.word, style).unwrap();
        }
        for e in &self.edges {
            let color = if e.generator == "a" { "red" } else { "blue" };
            writeln!(
                s,
                "  n{} -> n{} [label=\"{}\", color={}];",
                e.from, e.to, e.generator, color
            )
            .unwrap();
        }
        s.push_str("}\n");
        s
    }
}

pub fn export_cayley_ball(
    ctx: &GroupContext,
    radius: usize,
    format: CayleyFormat,
) -> Result<String> {
    let ball = CayleyBall::build(ctx, radius)?;
    Ok(match format {
        CayleyFormat::Dot => ball.to_dot(),
        CayleyFormat::Json => serde_json::to_string_pretty(&ball).expect("serializable"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::oracle_equal;

    #[test]
    fn radius_one() {
        let c = GroupContext::new(2).unwrap();
        let ball = CayleyBall::build(&c, 1).unwrap();
        let words: Vec<_> = ball
            .nodes
            .iter()
            .map(|x| (x.word.as_str(), x.verdict))
            .collect();
        assert_eq!(
            words,
            vec![
                ("1", Verdict::Identity),
                ("a", Verdict::Positive),
                ("a^-1", Verdict::Negative),
                ("b", Verdict::Positive),
                ("b^-1", Verdict::Negative)
            ]
        );
        assert_eq!(ball.edges.len(), 4);
    }

    #[test]
    fn dedup_and_edges() {
        for n in [1, 2, 3] {
            let c = GroupContext::new(n).unwrap();
            let ball = CayleyBall::build(&c, 3).unwrap();
            let words: Vec<Word> = ball.nodes.iter().map(|x| x.word.parse().unwrap()).collect();
            for i in 0..words.len() {
                for j in i + 1..words.len() {
                    assert!(!oracle_equal(&words[i], &words[j], &c));
                }
            }
            for e in &ball.edges {
                let g: Word = e.generator.parse().unwrap();
                assert!(oracle_equal(&words[e.from].concat(&g), &words[e.to], &c));
            }
        }
        let c1 = GroupContext::new(1).unwrap();
        // K2 with b a b = a: the radius-2 ball loses the words equal in pairs
        // (a b = b^-1 a, a b^-1 = b a, ...).
        let ball = CayleyBall::build(&c1, 2).unwrap();
        assert!(ball.nodes.len() < 17);
    }

    #[test]
    fn dot_syntax() {
        let c = GroupContext::new(2).unwrap();
        let dot = export_cayley_ball(&c, 2, CayleyFormat::Dot).unwrap();
        assert!(dot.starts_with("digraph cayley_ball {"));
        assert!(dot.trim_end().ends_with('}'));
        assert_eq!(dot.matches('{').count(), dot.matches('}').count());
        let json: serde_json::Value =
            serde_json::from_str(&export_cayley_ball(&c, 2, CayleyFormat::Json).unwrap()).unwrap();
        assert_eq!(json["radius"], 2);
    }
}
