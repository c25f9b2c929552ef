//! Cyclotomic polynomials and root-of-unity factors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LaurentPoly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::{IntPoly, Poly, Rational};

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Euler's totient; `totient(0)` is 0.
pub fn totient(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    prime_factors(n).into_iter().fold(n, |acc, p| acc / p * (p - 1))
}

/// Möbius function; `mobius(0)` is 0.
pub fn mobius(n: u64) -> i64 {
    if n == 0 {
        return 0;
    }
    let mut m = n;
    let mut sign = 1;
    for p in prime_factors(n) {
        m /= p;
        if m % p == 0 {
            return 0;
        }
        sign = -sign;
    }
    sign
}

/// Positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn mul_binomial<T: Scalar>(p: &[T], d: usize) -> Vec<T> {
    let mut out = vec![T::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i + d] = out[i + d].clone() + c.clone();
        out[i] = out[i].clone() - c.clone();
    }
    out
}

fn div_binomial<T: Scalar>(p: &[T], d: usize) -> Option<Vec<T>> {
    if p.len() <= d {
        return None;
    }
    let n = p.len() - d;
    let mut q: Vec<T> = Vec::with_capacity(n);
    for i in 0..n {
        let carry = if i >= d { q[i - d].clone() } else { T::zero() };
        q.push(carry - p[i].clone());
    }
    // the top d coefficients must agree with the shifted quotient
    for i in n..p.len() {
        let expect = if i >= d { q[i - d].clone() } else { T::zero() };
        if expect != p[i] {
            return None;
        }
    }
    Some(q)
}

/// `Π_d (t^d - 1)^{e_d}` for integer exponents `e_d`, or `None` when the
/// negative powers do not divide exactly.
pub fn binomial_product<T: Scalar>(exponents: &BTreeMap<u64, i64>) -> Option<LaurentPoly<T>> {
    let mut acc = vec![T::one()];
    for (&d, &e) in exponents.iter().filter(|(_, &e)| e > 0) {
        for _ in 0..e {
            acc = mul_binomial(&acc, d as usize);
        }
    }
    for (&d, &e) in exponents.iter().filter(|(_, &e)| e < 0) {
        for _ in 0..-e {
            acc = div_binomial(&acc, d as usize)?;
        }
    }
    Some(LaurentPoly::new(acc, 0).canonicalize())
}

/// The `q`-th cyclotomic polynomial, `Π_{d|q} (t^d - 1)^{μ(q/d)}`.
pub fn cyclotomic<T: Scalar>(q: u64) -> Result<LaurentPoly<T>> {
    if q == 0 {
        return Err(Error::ZeroCyclotomicIndex);
    }
    let exps: BTreeMap<u64, i64> =
        divisors(q).into_iter().map(|d| (d, mobius(q / d))).filter(|&(_, m)| m != 0).collect();
    Ok(binomial_product(&exps).expect("cyclotomic products are exact"))
}

/// Root-of-unity part of a nonzero rational Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    /// `q ↦ m_q`: the input is divisible by exactly `Φ_q^{m_q}`.
    pub factors: BTreeMap<u64, u32>,
    /// Canonical cofactor with no cyclotomic divisor; `1` when there is none.
    pub residual: Poly,
}

impl CyclotomicFactorization {
    /// `Π Φ_q^{m_q} · residual`, equal to the canonical form of the input.
    pub fn reconstruct(&self) -> Poly {
        let mut acc = self.residual.clone();
        for (&q, &m) in &self.factors {
            acc = &acc * &cyclotomic::<Rational>(q).expect("q > 0").pow(m);
        }
        acc
    }

    pub fn is_cyclotomic(&self) -> bool {
        self.residual.span() == 0
    }

    /// `Some(q)` when the input is exactly `Φ_q` up to a unit.
    pub fn single_index(&self) -> Option<u64> {
        match (self.is_cyclotomic(), self.factors.len()) {
            (true, 1) => self.factors.iter().find(|(_, &m)| m == 1).map(|(&q, _)| q),
            _ => None,
        }
    }
}

/// Largest `q` with `φ(q) ≤ degree`, from the Rosser–Schoenfeld bound
/// `φ(q) > q / (e^γ ln ln q + 3 / ln ln q)` for `q ≥ 3`.
fn totient_search_bound(degree: usize) -> u64 {
    let lower = |q: f64| {
        let ll = q.ln().ln();
        q / (1.781_072_4 * ll + 3.0 / ll)
    };
    let mut q = 30.0_f64;
    while lower(q) <= degree as f64 {
        q *= 1.25;
    }
    q.ceil() as u64
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A prime `ℓ ≡ 1 (mod q)` and an element of multiplicative order exactly `q`
/// modulo `ℓ`, i.e. a root of `Φ_q` in `F_ℓ`.
fn root_of_unity_mod_prime(q: u64) -> (u64, u64) {
    let mut k = (1u64 << 40) / q + 1;
    let ell = loop {
        let cand = k * q + 1;
        if is_prime_u64(cand) {
            break cand;
        }
        k += 1;
    };
    let factors = prime_factors(q);
    let mut g = 2;
    loop {
        let h = pow_mod(g, (ell - 1) / q, ell);
        if factors.iter().all(|&r| pow_mod(h, q / r, ell) != 1) {
            return (ell, h);
        }
        g += 1;
    }
}

/// Necessary condition for `Φ_q | p` on a primitive integer polynomial:
/// `p(ζ) ≡ 0 (mod ℓ)` for a primitive `q`-th root `ζ` modulo a prime `ℓ ≡ 1 (mod q)`.
fn may_have_root_of_order(p: &[BigInt], q: u64) -> bool {
    let (ell, zeta) = root_of_unity_mod_prime(q);
    let big_ell = BigInt::from(ell);
    let mut acc = 0u64;
    for c in p.iter().rev() {
        let r = c.mod_floor(&big_ell).to_u64().expect("reduced below ell");
        acc = (mul_mod(acc, zeta, ell) + r) % ell;
    }
    acc == 0
}

/// Peels every cyclotomic factor off a nonzero rational polynomial by trial
/// division with `Φ_q`, over all `q` with `φ(q)` at most the remaining degree.
pub fn factor_cyclotomic(p: &Poly) -> Result<CyclotomicFactorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("cyclotomic factorization"));
    }
    let canon = p.canonicalize();
    let denom_lcm = canon.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut int_coeffs: Vec<BigInt> =
        canon.coeffs().iter().map(|c| c.numer() * (&denom_lcm / c.denom())).collect();
    let mut factors = BTreeMap::new();
    let bound = totient_search_bound(canon.span());
    for q in 1..=bound {
        let deg = int_coeffs.len() - 1;
        if deg == 0 {
            break;
        }
        let phi = totient(q) as usize;
        if phi > deg || !may_have_root_of_order(&int_coeffs, q) {
            continue;
        }
        let phi_q: IntPoly = cyclotomic(q)?;
        let mut mult = 0;
        loop {
            let cur = IntPoly::new(int_coeffs.clone(), 0);
            let (quot, rem) = cur.div_rem_unit_leading(&phi_q).expect("cyclotomic polynomials are monic");
            if !rem.is_zero() {
                break;
            }
            mult += 1;
            int_coeffs = quot.coeffs().to_vec();
            if int_coeffs.len() - 1 < phi {
                break;
            }
        }
        if mult > 0 {
            factors.insert(q, mult);
        }
    }
    let scale = Rational::from_integer(denom_lcm);
    let residual = LaurentPoly::new(
        int_coeffs.into_iter().map(|c| Rational::from_integer(c) / scale.clone()).collect(),
        0,
    );
    debug_assert!(!residual.leading().is_some_and(|c| c.is_negative()));
    Ok(CyclotomicFactorization { factors, residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic::<BigInt>(1).unwrap(), IntPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic::<BigInt>(6).unwrap(), IntPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic::<BigInt>(12).unwrap(), IntPoly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic::<BigInt>(0), Err(Error::ZeroCyclotomicIndex));
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        for q in 1..=200u64 {
            let phi: IntPoly = cyclotomic(q).unwrap();
            assert_eq!(phi.span() as u64, totient(q), "q = {q}");
            assert!(phi.leading().unwrap().is_one());
        }
    }

    #[test]
    fn product_of_cyclotomics_over_divisors() {
        for n in 1..=60u64 {
            let prod: IntPoly = divisors(n).into_iter().map(|d| cyclotomic(d).unwrap()).product();
            assert_eq!(prod, IntPoly::t_pow_minus_one(n));
        }
    }

    #[test]
    fn arithmetic_functions() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(totient(36), 12);
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(3215031751));
    }

    #[test]
    fn inexact_binomial_quotient_is_detected() {
        let exps = BTreeMap::from([(2, 1), (3, -1)]);
        assert!(binomial_product::<BigInt>(&exps).is_none());
    }

    #[test]
    fn factor_examples() {
        let f = factor_cyclotomic(&Poly::from_ints(&[1, -1, 1])).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(6, 1)]));
        assert_eq!(f.residual, Poly::one());
        assert_eq!(f.single_index(), Some(6));

        let g = &Poly::from_ints(&[-1, 1]).pow(2) * &Poly::from_ints(&[1, 1, 1]);
        let f = factor_cyclotomic(&g).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(1, 2), (3, 1)]));
        assert_eq!(f.residual, Poly::one());

        let h = Poly::from_ints(&[-2, 0, 1]);
        let f = factor_cyclotomic(&h).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.residual, h);
        assert!(factor_cyclotomic(&Poly::zero()).is_err());
    }

    #[test]
    fn factor_keeps_rational_content() {
        // (1/2)t^2 - (1/2) = (1/2)(t-1)(t+1)
        let half = Rational::new(1.into(), 2.into());
        let p = Poly::new(vec![-half.clone(), Rational::zero(), half.clone()], -3);
        let f = factor_cyclotomic(&p).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(1, 1), (2, 1)]));
        assert_eq!(f.residual, Poly::constant(half));
        assert_eq!(f.reconstruct(), p.canonicalize());
    }
}
