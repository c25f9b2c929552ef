//! Euclidean structure of the Laurent ring over a field.
//!
//! The Euclidean function is [`LaurentPoly::span`]: dividing `t^a·p` by
//! `t^b·d` reduces to ordinary division of `p` by `d` (both with nonzero
//! constant term), the monomial factors being units.

use num_traits::Zero;

use super::{poly_div_rem, LaurentPoly};
use crate::error::{Error, Result};
use crate::scalar::Field;

impl<T: Field> LaurentPoly<T> {
    /// Canonical form scaled to leading coefficient 1. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let inv = T::one() / lead.clone();
                Self::new(self.coeffs().iter().map(|c| c.clone() * inv.clone()).collect(), 0)
            }
        }
    }

    /// Equality up to a unit `c·t^k` of the Laurent ring.
    pub fn is_associate(&self, other: &Self) -> bool {
        self.monic() == other.monic()
    }

    /// `self = q·d + r` with `span(r) < span(d)`. The remainder keeps the
    /// lowest exponent of `self`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let lead = d.leading().ok_or(Error::ZeroPolynomial("division by zero"))?.clone();
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        let (q, r) = poly_div_rem(self.coeffs(), d.coeffs(), |c| c / lead.clone());
        Ok((Self::new(q, self.shift() - d.shift()), Self::new(r, self.shift())))
    }

    /// Monic canonical greatest common divisor. `gcd(0, p)` is `p.monic()`;
    /// `gcd(0, 0)` is rejected.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial("gcd of two zero polynomials"));
        }
        let mut a = self.canonicalize();
        let mut b = other.canonicalize();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.canonicalize();
        }
        Ok(a.monic())
    }

    /// Whether `self` divides `other` in the Laurent ring.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("divisibility by zero"));
        }
        let (_, r) = other.canonicalize().div_rem(&self.canonicalize())?;
        Ok(r.is_zero())
    }

    /// The quotient `self / divisor` when the division is exact.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Largest `v` with `p^v | self`. `p` must be a non-unit.
    pub fn multiplicity(&self, p: &Self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("multiplicity in the zero polynomial"));
        }
        if p.is_zero() || p.is_monomial() {
            return Err(Error::InvalidInput(format!("multiplicity of a unit or zero factor {p}")));
        }
        let mut v = 0;
        let mut cur = self.canonicalize();
        while let Some(q) = cur.exact_div(&p.canonicalize())? {
            v += 1;
            cur = q;
        }
        Ok(v)
    }

    /// Formal derivative of the canonical form.
    pub fn derivative(&self) -> Self {
        let c = self.canonicalize();
        Self::new(
            c.coeffs().iter().enumerate().skip(1).map(|(i, a)| a.clone() * T::from_int(i as i64)).collect(),
            0,
        )
    }

    /// Yun's square-free decomposition of the monic canonical form:
    /// `self ~ Π g_i^i` with the `g_i` square-free and pairwise coprime.
    /// Only nonconstant `g_i` are returned.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("square-free decomposition"));
        }
        let f = self.monic();
        let mut out = Vec::new();
        if f.span() == 0 {
            return Ok(out);
        }
        let df = f.derivative();
        let mut a = f.gcd(&df)?;
        let mut b = f.exact_div(&a)?.expect("gcd divides").monic();
        let mut c = df.exact_div(&a)?.expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.span() > 0 {
            a = b.gcd(&d)?;
            if a.span() > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a)?.expect("gcd divides").monic();
            c = d.exact_div(&a)?.expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use crate::Poly;
    use num_traits::{One, Zero};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        let phi6 = p(&[1, -1, 1]);
        assert_eq!(phi6.gcd(&Poly::t_pow_minus_one(6)).unwrap(), phi6);
        assert_eq!(phi6.gcd(&Poly::t_pow_minus_one(5)).unwrap(), Poly::one());
        assert!(Poly::zero().gcd(&Poly::zero()).is_err());
    }

    #[test]
    fn divides_examples() {
        assert!(p(&[-1, 1]).divides(&Poly::t_pow_minus_one(3)).unwrap());
        assert!(!p(&[1, 1]).divides(&Poly::t_pow_minus_one(3)).unwrap());
        // units divide everything
        assert!(Poly::t().shifted(-4).divides(&p(&[3, 0, 7])).unwrap());
        assert!(Poly::zero().divides(&p(&[1])).is_err());
    }

    #[test]
    fn division_is_laurent_aware() {
        let a = p(&[1, 0, 0, 0, 1]).shifted(-2);
        let d = p(&[1, 1]).shifted(3);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.span() < d.span() || r.is_zero());
    }

    #[test]
    fn multiplicity_counts_powers() {
        let f = &p(&[-1, 1]).pow(3) * &p(&[1, 1, 1]);
        assert_eq!(f.multiplicity(&p(&[-1, 1])).unwrap(), 3);
        assert_eq!(f.multiplicity(&p(&[1, 1])).unwrap(), 0);
    }

    #[test]
    fn squarefree_decomposition_recovers_powers() {
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[1, 1, 1])) * &p(&[1, 1]).pow(3);
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(p(&[1, 1, 1]), 1), (p(&[-1, 1]), 2), (p(&[1, 1]), 3)]);
    }
}
