//! Exact arithmetic in `Z[λ]`, `λ = 2cos(π/q)`.
//!
//! Elements are residues modulo the (monic, irreducible) minimal polynomial of
//! `λ`, stored as coefficient vectors of length `deg`. Reduction keeps the
//! representation canonical, so ring equality is coefficient equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest `q` accepted by [`min_poly_of_2cos_pi_over`].
pub const MAX_Q: u32 = 64;

/// Integer polynomial, coefficients low to high.
pub type IntPoly = Vec<i64>;

fn trim(p: &mut Vec<i128>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

/// Exact division by a monic polynomial; panics if the remainder is nonzero.
fn div_exact_monic(num: &[i128], den: &[i128]) -> Vec<i128> {
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        assert!(rem.iter().all(|&c| c == 0));
        return vec![0];
    }
    let mut quot = vec![0i128; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
    trim(&mut quot);
    quot
}

/// The cyclotomic polynomial `Φ_m`, by dividing `z^m - 1` by `Φ_d` for every
/// proper divisor `d` of `m`.
pub fn cyclotomic(m: u32) -> IntPoly {
    fn rec(m: u32) -> Vec<i128> {
        let mut p = vec![0i128; m as usize + 1];
        p[0] = -1;
        p[m as usize] = 1;
        for d in 1..m {
            if m.is_multiple_of(d) {
                p = div_exact_monic(&p, &rec(d));
            }
        }
        p
    }
    rec(m).into_iter().map(|c| c as i64).collect()
}

fn euler_phi(mut m: u32) -> u32 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Monic minimal polynomial of `2cos(π/q)` over the rationals.
///
/// `z = e^{iπ/q}` is a primitive `2q`-th root of unity and `Φ_{2q}` is
/// palindromic of degree `2D`, so `Φ_{2q}(z) = z^D Ψ(z + 1/z)`. `Ψ` is found by
/// peeling off `(z + 1/z)^j` from the top degree down.
pub fn min_poly_of_2cos_pi_over(q: u32) -> Result<IntPoly> {
    if !(2..=MAX_Q).contains(&q) {
        return Err(Error::OutOfRange(format!(
            "q = {} must be in 2..={}",
            q, MAX_Q
        )));
    }
    let phi = cyclotomic(2 * q);
    let two_d = phi.len() - 1;
    debug_assert_eq!(two_d as u32, euler_phi(2 * q));
    let d = two_d / 2;
    // Laurent coefficients: index i <-> z^(i - d).
    let mut rest: Vec<i128> = phi.iter().map(|&c| c as i128).collect();
    let mut psi = vec![0i128; d + 1];
    for j in (0..=d).rev() {
        let c = rest[d + j];
        psi[j] = c;
        if c == 0 {
            continue;
        }
        // (z + 1/z)^j = sum_i C(j, i) z^(j - 2i)
        let mut binom: i128 = 1;
        for i in 0..=j {
            let exp = j as i64 - 2 * i as i64;
            rest[(d as i64 + exp) as usize] -= c * binom;
            binom = binom * (j - i) as i128 / (i + 1) as i128;
        }
    }
    assert!(rest.iter().all(|&c| c == 0), "Φ_2q not palindromic");
    Ok(psi.into_iter().map(|c| c as i64).collect())
}

/// An element of `Z[λ]`: coefficients of `1, λ, …, λ^(deg-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgInt {
    coeffs: Vec<BigInt>,
}

impl AlgInt {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(k)` if this element is the rational integer `k`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Sign of the first nonzero coefficient (0 for zero).
    pub fn leading_sign(&self) -> i32 {
        self.coeffs
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| if c.is_positive() { 1 } else { -1 })
            .unwrap_or(0)
    }

    /// Largest absolute coefficient, as bit length.
    pub fn bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }
}

/// The ring `Z[x] / (min_poly)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZLambda {
    q: u32,
    modulus: IntPoly,
}

impl ZLambda {
    pub fn new(q: u32) -> Result<Self> {
        let modulus = min_poly_of_2cos_pi_over(q)?;
        Ok(ZLambda { q, modulus })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> AlgInt {
        AlgInt {
            coeffs: vec![BigInt::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> AlgInt {
        self.int(1)
    }

    pub fn int(&self, k: i64) -> AlgInt {
        let mut x = self.zero();
        x.coeffs[0] = BigInt::from(k);
        x
    }

    pub fn from_coeffs(&self, coeffs: &[i64]) -> AlgInt {
        let raw: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        self.reduce(raw)
    }

    /// `λ` itself (for `q = 2` this is `0`).
    pub fn lambda(&self) -> AlgInt {
        self.from_coeffs(&[0, 1])
    }

    fn reduce(&self, mut raw: Vec<BigInt>) -> AlgInt {
        let d = self.degree();
        while raw.len() > d {
            let c = raw.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let base = raw.len() - d;
            for (i, &m) in self.modulus[..d].iter().enumerate() {
                if m != 0 {
                    raw[base + i] -= &c * m;
                }
            }
        }
        raw.resize(d, BigInt::zero());
        AlgInt { coeffs: raw }
    }

    pub fn add(&self, x: &AlgInt, y: &AlgInt) -> AlgInt {
        AlgInt {
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, x: &AlgInt, y: &AlgInt) -> AlgInt {
        AlgInt {
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self, x: &AlgInt) -> AlgInt {
        AlgInt {
            coeffs: x.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, x: &AlgInt, y: &AlgInt) -> AlgInt {
        let d = self.degree();
        if d == 1 {
            return AlgInt {
                coeffs: vec![&x.coeffs[0] * &y.coeffs[0]],
            };
        }
        let mut raw = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        self.reduce(raw)
    }

    pub fn scale(&self, x: &AlgInt, k: &BigInt) -> AlgInt {
        AlgInt {
            coeffs: x.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    pub fn is_one(&self, x: &AlgInt) -> bool {
        x.coeffs[0].is_one() && x.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Solves `y = k * x` for a rational integer `k`, if possible.
    pub fn integer_quotient(&self, y: &AlgInt, x: &AlgInt) -> Option<BigInt> {
        let (idx, pivot) = x.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())?;
        let num = &y.coeffs[idx];
        if !(num % pivot).is_zero() {
            return None;
        }
        let k = num / pivot;
        (self.scale(x, &k) == *y).then_some(k)
    }

    /// Floating-point value of `x` at the real root `λ = 2cos(π/q)`.
    pub fn approx(&self, x: &AlgInt) -> f64 {
        let lam = 2.0 * (std::f64::consts::PI / self.q as f64).cos();
        let mut acc = 0.0;
        for c in x.coeffs.iter().rev() {
            acc = acc * lam + c.to_string().parse::<f64>().unwrap_or(f64::NAN);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_min_polys() {
        assert_eq!(min_poly_of_2cos_pi_over(2).unwrap(), vec![0, 1]);
        assert_eq!(min_poly_of_2cos_pi_over(3).unwrap(), vec![-1, 1]);
        assert_eq!(min_poly_of_2cos_pi_over(4).unwrap(), vec![-2, 0, 1]);
        assert_eq!(min_poly_of_2cos_pi_over(5).unwrap(), vec![-1, -1, 1]);
        assert_eq!(min_poly_of_2cos_pi_over(6).unwrap(), vec![-3, 0, 1]);
    }

    #[test]
    fn scope_bound() {
        assert!(min_poly_of_2cos_pi_over(1).is_err());
        assert!(min_poly_of_2cos_pi_over(65).is_err());
        assert!(min_poly_of_2cos_pi_over(64).is_ok());
    }

    #[test]
    fn cyclotomic_known_values() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(10), vec![1, -1, 1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    /// Independent route: multiply out `prod (x - 2cos(kπ/q))` over odd `k`
    /// coprime to `2q` in floating point and round.
    fn float_min_poly(q: u32) -> Vec<i64> {
        let mut poly = vec![1.0f64];
        for k in (1..q).step_by(2) {
            if num_integer::gcd(k, 2 * q) != 1 {
                continue;
            }
            let r = 2.0 * (k as f64 * std::f64::consts::PI / q as f64).cos();
            let mut next = vec![0.0; poly.len() + 1];
            for (i, &c) in poly.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= r * c;
            }
            poly = next;
        }
        poly.iter().map(|c| c.round() as i64).collect()
    }

    #[test]
    fn min_poly_agrees_with_float_product() {
        for q in 2..=24 {
            let exact = min_poly_of_2cos_pi_over(q).unwrap();
            assert_eq!(exact, float_min_poly(q), "q = {}", q);
            assert_eq!(exact.len() - 1, euler_phi(2 * q) as usize / 2);
        }
        for q in 2..=MAX_Q {
            let p = min_poly_of_2cos_pi_over(q).unwrap();
            let lam = 2.0 * (std::f64::consts::PI / q as f64).cos();
            let v: f64 = p.iter().rev().fold(0.0, |acc, &c| acc * lam + c as f64);
            let scale: f64 = p
                .iter()
                .rev()
                .fold(0.0, |acc, &c| acc * lam.abs() + (c as f64).abs());
            assert!(
                v.abs() < 1e-12 * scale.max(1.0),
                "q = {}: relative residual {}",
                q,
                v / scale
            );
            assert_eq!(*p.last().unwrap(), 1);
        }
    }

    #[test]
    fn lambda_satisfies_its_polynomial() {
        for q in 2..=12 {
            let r = ZLambda::new(q).unwrap();
            let lam = r.lambda();
            let mut acc = r.zero();
            let mut pow = r.one();
            for &c in r.modulus() {
                acc = r.add(&acc, &r.scale(&pow, &BigInt::from(c)));
                pow = r.mul(&pow, &lam);
            }
            assert!(acc.is_zero(), "q = {}", q);
        }
    }

    #[test]
    fn integer_quotient() {
        let r = ZLambda::new(5).unwrap();
        let lam = r.lambda();
        assert_eq!(
            r.integer_quotient(&r.scale(&lam, &BigInt::from(-7)), &lam),
            Some(BigInt::from(-7))
        );
        assert_eq!(r.integer_quotient(&r.one(), &lam), None);
    }

    fn ring_and_triple() -> impl Strategy<Value = (u32, Vec<i64>, Vec<i64>, Vec<i64>)> {
        (2u32..16).prop_flat_map(|q| {
            let d = min_poly_of_2cos_pi_over(q).unwrap().len() - 1;
            let v = || proptest::collection::vec(-50i64..50, d);
            (Just(q), v(), v(), v())
        })
    }

    proptest! {
        #[test]
        fn ring_laws((q, xs, ys, zs) in ring_and_triple()) {
            let r = ZLambda::new(q).unwrap();
            let (x, y, z) = (r.from_coeffs(&xs), r.from_coeffs(&ys), r.from_coeffs(&zs));
            prop_assert_eq!(r.mul(&r.mul(&x, &y), &z), r.mul(&x, &r.mul(&y, &z)));
            prop_assert_eq!(r.mul(&x, &r.add(&y, &z)), r.add(&r.mul(&x, &y), &r.mul(&x, &z)));
            prop_assert_eq!(r.mul(&x, &y), r.mul(&y, &x));
            prop_assert_eq!(r.mul(&x, &r.one()), x.clone());
            prop_assert_eq!(r.add(&x, &r.neg(&x)), r.zero());
            prop_assert_eq!(r.mul(&x, &y).coeffs().len(), r.degree());
            // Evaluation at the real root is a ring homomorphism.
            let lhs = r.approx(&r.mul(&x, &y));
            let rhs = r.approx(&x) * r.approx(&y);
            prop_assert!((lhs - rhs).abs() <= 1e-6 * (1.0 + rhs.abs()));
        }
    }
}
