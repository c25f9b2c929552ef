//! One-variable Laurent polynomials with exact coefficients.
//!
//! A [`LaurentPoly`] stores a dense coefficient vector, lowest exponent first,
//! together with the exponent of its lowest term. The units of the Laurent
//! ring over a field are `c·t^k`, so most algebraic questions are asked of the
//! *canonical* representative: lowest exponent 0 and positive leading
//! coefficient ([`LaurentPoly::canonicalize`]), or additionally monic over a
//! field ([`LaurentPoly::monic`]).

mod cyclotomic;
mod euclid;
mod text;

pub use cyclotomic::{
    binomial_product, cyclotomic, divisors, factor_cyclotomic, mobius, totient, CyclotomicFactorization,
};

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<T> {
    /// Lowest exponent first; never has zero at either end.
    coeffs: Vec<T>,
    /// Exponent of `coeffs[0]`. Always 0 for the zero polynomial.
    shift: i64,
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn new(coeffs: Vec<T>, shift: i64) -> Self {
        let mut p = LaurentPoly { coeffs, shift };
        p.trim();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(terms: I) -> Self {
        let terms: Vec<(i64, T)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap_or(lo);
        let mut coeffs = vec![T::zero(); (hi - lo) as usize + 1];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = slot.clone() + c;
        }
        Self::new(coeffs, lo)
    }

    /// Integer coefficients, lowest degree first, starting at `t^0`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_int(c)).collect(), 0)
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c], 0)
    }

    pub fn monomial(c: T, exp: i64) -> Self {
        Self::new(vec![c], exp)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `t^d - 1`.
    pub fn t_pow_minus_one(d: u64) -> Self {
        let mut coeffs = vec![T::zero(); d as usize + 1];
        coeffs[0] = -T::one();
        coeffs[d as usize] = coeffs[d as usize].clone() + T::one();
        Self::new(coeffs, 0)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.shift = 0;
        } else if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.shift += lead_zeros as i64;
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn low_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.shift)
    }

    pub fn high_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.shift + self.coeffs.len() as i64 - 1)
    }

    /// Difference between the highest and lowest exponents; the degree of the
    /// canonical form. Zero for constants and for the zero polynomial.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, exp: i64) -> T {
        let idx = exp - self.shift;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            T::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn trailing(&self) -> Option<&T> {
        self.coeffs.first()
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &T)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.shift + i as i64, c))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty() || (self.coeffs.len() == 1 && self.shift == 0)
    }

    /// A unit of the Laurent ring over a field: a single nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Representative of the orbit under the units `±t^k`: lowest exponent
    /// zero and positive leading coefficient. Content is kept.
    pub fn canonicalize(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        if self.leading().is_some_and(|c| c.is_negative()) {
            for c in coeffs.iter_mut() {
                *c = -c.clone();
            }
        }
        LaurentPoly { coeffs, shift: 0 }
    }

    pub fn is_canonical(&self) -> bool {
        self.shift == 0 && !self.leading().is_some_and(|c| c.is_negative())
    }

    /// Equality up to the units `±t^k`.
    pub fn same_orbit(&self, other: &Self) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// Multiplication by `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { coeffs: self.coeffs.clone(), shift: self.shift + k }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(), self.shift)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval_at_one(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, c| acc + c.clone())
    }

    /// Substitutes `t ↦ t^k` for `k ≥ 1`.
    pub fn compose_power(&self, k: u32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k as i64, c.clone())))
    }

    pub fn map_coeffs<U: Scalar, F: Fn(&T) -> U>(&self, f: F) -> LaurentPoly<U> {
        LaurentPoly::new(self.coeffs.iter().map(f).collect(), self.shift)
    }

    /// Polynomial long division by a divisor whose leading coefficient is
    /// `±1`, valid over any coefficient ring. Both operands are first moved to
    /// exponent 0; the quotient and remainder are ordinary polynomials.
    pub fn div_rem_unit_leading(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lead = divisor.leading()?.clone();
        if !(lead.is_one() || (-lead.clone()).is_one()) {
            return None;
        }
        let (q, r) = poly_div_rem(&self.coeffs, &divisor.coeffs, |c| c * lead.clone());
        Some((Self::new(q, 0), Self::new(r, 0)))
    }
}

/// Long division of dense coefficient vectors (lowest first). `div_lead`
/// divides a coefficient by the divisor's leading coefficient.
pub(crate) fn poly_div_rem<T: Scalar>(num: &[T], den: &[T], div_lead: impl Fn(T) -> T) -> (Vec<T>, Vec<T>) {
    let dn = den.len();
    if num.len() < dn {
        return (Vec::new(), num.to_vec());
    }
    let mut rem = num.to_vec();
    let mut quot = vec![T::zero(); num.len() - dn + 1];
    for i in (0..quot.len()).rev() {
        let top = rem[i + dn - 1].clone();
        if top.is_zero() {
            continue;
        }
        let q = div_lead(top);
        for (j, d) in den.iter().enumerate() {
            if !d.is_zero() {
                rem[i + j] = rem[i + j].clone() - q.clone() * d.clone();
            }
        }
        quot[i] = q;
    }
    rem.truncate(dn - 1);
    (quot, rem)
}

impl<T: Scalar> Zero for LaurentPoly<T> {
    fn zero() -> Self {
        LaurentPoly { coeffs: Vec::new(), shift: 0 }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for LaurentPoly<T> {
    fn one() -> Self {
        LaurentPoly { coeffs: vec![T::one()], shift: 0 }
    }
}

impl<T: Scalar> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(rhs.shift);
        let hi = self.high_exp().unwrap().max(rhs.high_exp().unwrap());
        let mut coeffs = vec![T::zero(); (hi - lo) as usize + 1];
        for p in [self, rhs] {
            let off = (p.shift - lo) as usize;
            for (i, c) in p.coeffs.iter().enumerate() {
                coeffs[off + i] = coeffs[off + i].clone() + c.clone();
            }
        }
        LaurentPoly::new(coeffs, lo)
    }
}

impl<T: Scalar> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(), shift: self.shift }
    }
}

impl<T: Scalar> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::new(T::convolve(&self.coeffs, &rhs.coeffs), self.shift + rhs.shift)
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $method:ident),*) => {$(
        impl<T: Scalar> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $method(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Scalar> $tr<&LaurentPoly<T>> for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $method(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl<T: Scalar> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn neg(self) -> LaurentPoly<T> {
        -&self
    }
}

impl<T: Scalar> std::iter::Product for LaurentPoly<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl<T: Scalar> std::iter::Sum for LaurentPoly<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}
