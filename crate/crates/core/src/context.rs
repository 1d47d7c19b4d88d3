use num_integer::Integer;

use crate::algint::{ZLambda, MAX_Q};
use crate::error::{Error, Result};
use crate::hecke::ProjMatrix;
use crate::word::{Generator, Word};

/// The parameter `n` of `Γ_n = <a, b : b a^n b = a>` together with the data
/// derived from it.
#[derive(Debug, Clone)]
pub struct GroupContext {
    n: u32,
    ring: ZLambda,
    phi_a: i64,
    phi_b: i64,
    images: [ProjMatrix; 4],
}

impl GroupContext {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n + 1 > MAX_Q {
            return Err(Error::OutOfRange(format!(
                "n = {} must be in 1..={}",
                n,
                MAX_Q - 1
            )));
        }
        let ring = ZLambda::new(n + 1)?;
        let d = (n as i64 - 1).gcd(&2);
        let phi_a = 2 / d;
        let phi_b = -(n as i64 - 1) / d;
        debug_assert_eq!(2 * phi_b + n as i64 * phi_a, phi_a);
        let (a, b) = ProjMatrix::generator_images(&ring);
        let images = [a.inverse(&ring), a, b.inverse(&ring), b];
        Ok(GroupContext {
            n,
            ring,
            phi_a,
            phi_b,
            images,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.n + 1
    }

    pub fn n_i64(&self) -> i64 {
        self.n as i64
    }

    pub fn ring(&self) -> &ZLambda {
        &self.ring
    }

    /// Minimal polynomial of `λ`, coefficients low to high.
    pub fn min_poly(&self) -> &[i64] {
        self.ring.modulus()
    }

    pub fn phi_a(&self) -> i64 {
        self.phi_a
    }

    pub fn phi_b(&self) -> i64 {
        self.phi_b
    }

    /// Image of `gen^sign` (`sign = ±1`).
    pub(crate) fn image(&self, gen: Generator, sign: i64) -> &ProjMatrix {
        let idx = match gen {
            Generator::A => 0,
            Generator::B => 2,
        } + usize::from(sign > 0);
        &self.images[idx]
    }

    /// The central element `Δ = a^(n+1)`.
    pub fn delta(&self) -> Word {
        Word::power(Generator::A, self.q() as i64)
    }

    /// `Δ^ell` written out in `a`-letters.
    pub fn delta_power(&self, ell: i64) -> Word {
        Word::power(Generator::A, self.q() as i64 * ell)
    }
}
