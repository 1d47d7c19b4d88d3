//! Exact word-problem oracle.
//!
//! `Γ_n / <Δ>` is the Hecke group `H(n+1) = Z/2 * Z/(n+1)`, realised in
//! `PSL(2, Z[λ])` by
//!
//! ```text
//! a -> [[λ, -1], [1, 0]]      (elliptic, order n+1 in PSL)
//! b -> [[1,  λ], [0, 1]]      (parabolic)
//! ```
//!
//! which is `f = T·S`, `h = b^-1 a = S` for `S = [[0,-1],[1,0]]`, `T = [[1,λ],[0,1]]`.
//! The kernel of this representation is exactly the centre `<Δ>`, and the
//! exponent functional `phi` is nonzero on every nontrivial power of `Δ`, so
//! `w = 1` in `Γ_n` iff `rho(w) = ±I` and `phi(w) = 0`. Every decision made
//! here is a ring equality; no real number is ever compared.
//!
//! For `n = 1` the formula degenerates (`λ = 0` sends `b` to the identity),
//! so the Klein bottle group uses the affine realisation of the infinite
//! dihedral group instead: `a -> [[-1, 0], [0, 1]]`, `b -> [[1, 1], [0, 1]]`.
//! Its `a`-image has determinant `-1`; projective equality is still `±`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::algint::{AlgInt, ZLambda};
use crate::context::GroupContext;
use crate::word::{Generator, Word};

/// A 2×2 matrix over `Z[λ]` with determinant `±1`, compared up to sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjMatrix {
    /// Row-major `[m00, m01, m10, m11]`.
    entries: [AlgInt; 4],
}

impl ProjMatrix {
    pub fn new(entries: [AlgInt; 4]) -> Self {
        ProjMatrix { entries }
    }

    pub fn from_ints(ring: &ZLambda, e: [[i64; 2]; 2]) -> Self {
        Self::new([
            ring.int(e[0][0]),
            ring.int(e[0][1]),
            ring.int(e[1][0]),
            ring.int(e[1][1]),
        ])
    }

    pub fn identity(ring: &ZLambda) -> Self {
        Self::from_ints(ring, [[1, 0], [0, 1]])
    }

    /// Images of `a` and `b`.
    pub fn generator_images(ring: &ZLambda) -> (Self, Self) {
        if ring.q() == 2 {
            let a = Self::from_ints(ring, [[-1, 0], [0, 1]]);
            let b = Self::from_ints(ring, [[1, 1], [0, 1]]);
            return (a, b);
        }
        let lam = ring.lambda();
        let a = Self::new([lam.clone(), ring.int(-1), ring.one(), ring.zero()]);
        let b = Self::new([ring.one(), lam, ring.zero(), ring.one()]);
        (a, b)
    }

    pub fn entries(&self) -> &[AlgInt; 4] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &AlgInt {
        &self.entries[2 * row + col]
    }

    pub fn mul(&self, other: &Self, ring: &ZLambda) -> Self {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &other.entries;
        Self::new([
            ring.add(&ring.mul(a, e), &ring.mul(b, g)),
            ring.add(&ring.mul(a, f), &ring.mul(b, h)),
            ring.add(&ring.mul(c, e), &ring.mul(d, g)),
            ring.add(&ring.mul(c, f), &ring.mul(d, h)),
        ])
    }

    pub fn det(&self, ring: &ZLambda) -> AlgInt {
        let [a, b, c, d] = &self.entries;
        ring.sub(&ring.mul(a, d), &ring.mul(b, c))
    }

    pub fn trace(&self, ring: &ZLambda) -> AlgInt {
        ring.add(&self.entries[0], &self.entries[3])
    }

    /// Inverse; requires determinant `±1`.
    pub fn inverse(&self, ring: &ZLambda) -> Self {
        let det = self.det(ring);
        let sign = match det.as_integer() {
            Some(k) if k == BigInt::from(1) => 1,
            Some(k) if k == BigInt::from(-1) => -1,
            _ => panic!("inverse of a matrix with non-unit determinant"),
        };
        let [a, b, c, d] = &self.entries;
        let adj = Self::new([d.clone(), ring.neg(b), ring.neg(c), a.clone()]);
        if sign == 1 {
            adj
        } else {
            adj.negate(ring)
        }
    }

    pub fn negate(&self, ring: &ZLambda) -> Self {
        let [a, b, c, d] = &self.entries;
        Self::new([ring.neg(a), ring.neg(b), ring.neg(c), ring.neg(d)])
    }

    pub fn pow(&self, k: u64, ring: &ZLambda) -> Self {
        let mut out = Self::identity(ring);
        for _ in 0..k {
            out = out.mul(self, ring);
        }
        out
    }

    /// Projective equality: `M = M'` or `M = -M'`.
    pub fn proj_eq(&self, other: &Self, ring: &ZLambda) -> bool {
        self == other || *self == other.negate(ring)
    }

    /// `M = ±I`.
    pub fn is_proj_identity(&self, ring: &ZLambda) -> bool {
        let [a, b, c, d] = &self.entries;
        b.is_zero() && c.is_zero() && a == d && (ring.is_one(a) || ring.is_one(&ring.neg(a)))
    }

    /// Representative of `±M` whose first nonzero entry has a positive
    /// leading coefficient.
    pub fn normalized(&self, ring: &ZLambda) -> Self {
        let sign = self
            .entries
            .iter()
            .map(AlgInt::leading_sign)
            .find(|&s| s != 0)
            .unwrap_or(1);
        if sign < 0 {
            self.negate(ring)
        } else {
            self.clone()
        }
    }
}

/// Representation `Γ_n -> PSL(2, Z[λ])`.
pub fn rho(w: &Word, ctx: &GroupContext) -> ProjMatrix {
    let ring = ctx.ring();
    let mut m = ProjMatrix::identity(ring);
    // a has order 2q in SL (order 2 for the n = 1 realisation), so its powers
    // are reduced modulo 2q; powers of the parabolic b are I + kN.
    let a_period = 2 * ctx.q() as i64;
    for s in w.syllables() {
        match s.gen {
            Generator::A => {
                let e = s.exp.rem_euclid(a_period);
                let step = ctx.image(Generator::A, 1);
                for _ in 0..e {
                    m = m.mul(step, ring);
                }
            }
            Generator::B => {
                m = m.mul(&b_power_matrix(s.exp, ctx), ring);
            }
        }
    }
    m
}

/// `rho(b)^k = I + kN`, `N = rho(b) - I`.
fn b_power_matrix(k: i64, ctx: &GroupContext) -> ProjMatrix {
    let ring = ctx.ring();
    let b = ctx.image(Generator::B, 1);
    let k = BigInt::from(k);
    ProjMatrix::new([
        ring.one(),
        ring.scale(b.entry(0, 1), &k),
        ring.zero(),
        ring.one(),
    ])
}

/// Exponent functional: `phi_a·(a-exponent sum) + phi_b·(b-exponent sum)`.
/// A homomorphism `Γ_n -> Z` that kills the relator and has `phi(Δ) ≠ 0`.
pub fn phi(w: &Word, ctx: &GroupContext) -> i64 {
    ctx.phi_a() * w.exponent_sum(Generator::A) + ctx.phi_b() * w.exponent_sum(Generator::B)
}

/// Decides `w = 1` in `Γ_n`.
pub fn oracle_is_identity(w: &Word, ctx: &GroupContext) -> bool {
    phi(w, ctx) == 0 && rho(w, ctx).is_proj_identity(ctx.ring())
}

/// Decides `u = v` in `Γ_n`.
pub fn oracle_equal(u: &Word, v: &Word, ctx: &GroupContext) -> bool {
    oracle_is_identity(&u.invert().concat(v), ctx)
}

/// `Some(k)` iff `w = b^k` in `Γ_n`.
pub fn b_power_of(w: &Word, ctx: &GroupContext) -> Option<i64> {
    let ring = ctx.ring();
    let m = rho(w, ctx);
    let nil = ctx.image(Generator::B, 1).entry(0, 1).clone();
    for cand in [m.clone(), m.negate(ring)] {
        let [p, x, r, s] = cand.entries();
        if !(ring.is_one(p) && ring.is_one(s) && r.is_zero()) {
            continue;
        }
        let Some(k) = ring.integer_quotient(x, &nil) else {
            continue;
        };
        let Ok(k) = i64::try_from(k) else { continue };
        if phi(w, ctx) == k * ctx.phi_b() {
            return Some(k);
        }
    }
    None
}

/// Hashable invariant of a group element: equal keys iff equal elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementKey {
    matrix: ProjMatrix,
    phi: i64,
}

pub fn element_key(w: &Word, ctx: &GroupContext) -> ElementKey {
    ElementKey {
        matrix: rho(w, ctx).normalized(ctx.ring()),
        phi: phi(w, ctx),
    }
}

/// Summary used by the `oracle` subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub identity: bool,
    pub rho_is_identity: bool,
    pub phi: i64,
}

pub fn oracle_report(w: &Word, ctx: &GroupContext) -> OracleReport {
    let rho_is_identity = rho(w, ctx).is_proj_identity(ctx.ring());
    let phi = phi(w, ctx);
    OracleReport {
        identity: rho_is_identity && phi == 0,
        rho_is_identity,
        phi,
    }
}
