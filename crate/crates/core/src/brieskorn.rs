//! Monodromy of Brieskorn–Pham singularities `x_1^{a_1} + … + x_r^{a_r}`.
//!
//! The monodromy eigenvalues are the products `ζ_1⋯ζ_r` with `ζ_i` running
//! over the nontrivial `a_i`-th roots of unity. Writing every root as a
//! residue in `Z/L`, `L = lcm(a_i)`, the eigenvalue multiset is the
//! convolution of the uniform measures on `{j·L/a_i : 0 < j < a_i}`, which is
//! computed exactly and regrouped by multiplicative order into cyclotomic
//! factors. The monodromy has finite order, so the module is semisimple.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cycmod::{self, CycModule};
use crate::error::{Error, Result};
use crate::laurent::{binomial_product, divisors, mobius, totient, LaurentPoly};
use crate::scalar::Scalar;
use crate::Poly;

/// Default bound on the Milnor number accepted by the eigenvalue computation.
pub const DEFAULT_MAX_MILNOR: u128 = 1_000_000;

fn validate_exponents(exponents: &[u64]) -> Result<()> {
    if exponents.is_empty() {
        return Err(Error::InvalidDescriptor("Brieskorn exponent list is empty".into()));
    }
    if let Some(a) = exponents.iter().find(|&&a| a < 2) {
        return Err(Error::InvalidDescriptor(format!("Brieskorn exponent {a} is below 2")));
    }
    Ok(())
}

/// `Π (a_i - 1)`, the dimension of the middle homology of the Milnor fibre.
pub fn milnor_number(exponents: &[u64]) -> Result<u128> {
    validate_exponents(exponents)?;
    exponents
        .iter()
        .try_fold(1u128, |acc, &a| acc.checked_mul(a as u128 - 1))
        .ok_or_else(|| Error::InvalidDescriptor("Milnor number overflows".into()))
}

/// Multiplicity of each `Φ_q` in the characteristic polynomial of the
/// monodromy, refusing Milnor numbers above `max_milnor`.
pub fn eigenvalue_orders(exponents: &[u64], max_milnor: u128) -> Result<BTreeMap<u64, usize>> {
    let milnor = milnor_number(exponents)?;
    if milnor > max_milnor {
        return Err(Error::MilnorCap { milnor, cap: max_milnor });
    }
    let l = exponents
        .iter()
        .try_fold(1u64, |acc, &a| {
            let g = acc.gcd(&a);
            (acc / g).checked_mul(a)
        })
        .ok_or_else(|| Error::InvalidDescriptor("lcm of exponents overflows".into()))?;
    let mut measure: BTreeMap<u64, u128> = BTreeMap::from([(0, 1)]);
    for &a in exponents {
        let step = l / a;
        let mut next = BTreeMap::new();
        for (&r, &c) in &measure {
            for j in 1..a {
                *next.entry((r + j * step) % l).or_insert(0) += c;
            }
        }
        measure = next;
    }
    let mut by_order: BTreeMap<u64, u128> = BTreeMap::new();
    for (r, c) in measure {
        *by_order.entry(l / r.gcd(&l)).or_insert(0) += c;
    }
    Ok(by_order
        .into_iter()
        .map(|(q, n)| {
            let phi = totient(q) as u128;
            debug_assert_eq!(n % phi, 0, "eigenvalue multiset is Galois stable");
            (q, (n / phi) as usize)
        })
        .collect())
}

/// `Π Φ_q^{m_q}` expanded through `Φ_q = Π_{d|q} (t^d - 1)^{μ(q/d)}`.
pub fn product_of_cyclotomics<T: Scalar>(copies: &BTreeMap<u64, usize>) -> LaurentPoly<T> {
    let mut exps: BTreeMap<u64, i64> = BTreeMap::new();
    for (&q, &m) in copies {
        for d in divisors(q) {
            let mu = mobius(q / d);
            if mu != 0 {
                *exps.entry(d).or_insert(0) += mu * m as i64;
            }
        }
    }
    exps.retain(|_, e| *e != 0);
    binomial_product(&exps).expect("a product of cyclotomic polynomials is a polynomial")
}

/// Characteristic polynomial of the monodromy of `Σ x_i^{a_i}`, with the
/// default Milnor-number cap.
pub fn charpoly_brieskorn<T: Scalar>(exponents: &[u64]) -> Result<LaurentPoly<T>> {
    charpoly_brieskorn_capped(exponents, DEFAULT_MAX_MILNOR)
}

pub fn charpoly_brieskorn_capped<T: Scalar>(exponents: &[u64], max_milnor: u128) -> Result<LaurentPoly<T>> {
    Ok(product_of_cyclotomics(&eigenvalue_orders(exponents, max_milnor)?))
}

/// Middle homology of the Milnor fibre with `t` acting as monodromy.
pub fn brieskorn_module(exponents: &[u64]) -> Result<CycModule> {
    brieskorn_module_capped(exponents, DEFAULT_MAX_MILNOR)
}

pub fn brieskorn_module_capped(exponents: &[u64], max_milnor: u128) -> Result<CycModule> {
    CycModule::from_cyclotomic_multiplicities(&eigenvalue_orders(exponents, max_milnor)?)
}

/// Local type of an isolated singular point (or, for `NodalCuspidal`, of a
/// set of points on a curve).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularityDescriptor {
    Brieskorn(Vec<u64>),
    #[serde(rename = "poly")]
    ExplicitPoly(Poly),
    /// Single Puiseux pair `(m, k)`, `k ≤ m`, coprime: a unibranch plane
    /// curve germ topologically `x^m = y^k`.
    CharPair(u64, u64),
    /// `delta` nodes `x² = y²` and `kappa` ordinary cusps `x² = y³`.
    NodalCuspidal { delta: u64, kappa: u64 },
}

impl SingularityDescriptor {
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Brieskorn(exps) => validate_exponents(exps),
            Self::ExplicitPoly(p) if p.is_zero() => {
                Err(Error::InvalidDescriptor("explicit local polynomial is zero".into()))
            }
            Self::ExplicitPoly(_) | Self::NodalCuspidal { .. } => Ok(()),
            Self::CharPair(m, k) => validate_char_pair(*m, *k),
        }
    }

    /// Individual singular points: a `NodalCuspidal` block expands to its
    /// nodes `(2,2)` and cusps `(2,3)`; other variants are one point.
    pub fn points(&self) -> Vec<SingularityDescriptor> {
        match self {
            Self::NodalCuspidal { delta, kappa } => {
                let nodes = (0..*delta).map(|_| Self::Brieskorn(vec![2, 2]));
                let cusps = (0..*kappa).map(|_| Self::Brieskorn(vec![2, 3]));
                nodes.chain(cusps).collect()
            }
            other => vec![other.clone()],
        }
    }

    /// Characteristic polynomial of the local monodromy, canonical; for
    /// `NodalCuspidal` the product over all its points.
    pub fn local_polynomial(&self) -> Result<Poly> {
        self.local_polynomial_capped(DEFAULT_MAX_MILNOR)
    }

    pub fn local_polynomial_capped(&self, max_milnor: u128) -> Result<Poly> {
        self.validate()?;
        match self {
            Self::Brieskorn(exps) => charpoly_brieskorn_capped(exps, max_milnor),
            Self::ExplicitPoly(p) => Ok(p.canonicalize()),
            Self::CharPair(_, 1) => Ok(Poly::from_ints(&[1])),
            Self::CharPair(m, k) => charpoly_brieskorn_capped(&[*m, *k], max_milnor),
            Self::NodalCuspidal { delta, kappa } => {
                let node: Poly = charpoly_brieskorn(&[2, 2])?;
                let cusp: Poly = charpoly_brieskorn(&[2, 3])?;
                Ok(&node.pow(*delta as u32) * &cusp.pow(*kappa as u32))
            }
        }
    }
}

pub(crate) fn validate_char_pair(m: u64, k: u64) -> Result<()> {
    if k == 0 || k > m {
        return Err(Error::InvalidDescriptor(format!("characteristic pair ({m}, {k}) needs 1 <= k <= m")));
    }
    if m.gcd(&k) != 1 {
        return Err(Error::InvalidDescriptor(format!(
            "characteristic pair ({m}, {k}) is not coprime, so the germ is not unibranch"
        )));
    }
    Ok(())
}

/// Hypersurface `g_{D/d_1}^{d_1} + … + g_{D/d_{n+1}}^{d_{n+1}} = 0` of degree
/// `D = Π d_i` in `CP^{n+1}` built from generic forms `g_k` of degree `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDescription {
    pub n: usize,
    pub exponents: Vec<u64>,
    pub degree: u64,
    /// `D^n` isolated singular points, each of the local type below. The count
    /// assumes the forms are generic; it is not verified.
    pub singular_count: u128,
    pub local_type: SingularityDescriptor,
    pub equation: String,
    /// Rational homotopy module of the complement of `V ∪ H` for a generic
    /// hyperplane `H`: the Milnor-fibre homology of the local type.
    #[serde(with = "cycmod::torsion_pairs")]
    pub module: CycModule,
}

pub fn brieskorn_family(exponents: &[u64]) -> Result<FamilyDescription> {
    brieskorn_family_capped(exponents, DEFAULT_MAX_MILNOR)
}

pub fn brieskorn_family_capped(exponents: &[u64], max_milnor: u128) -> Result<FamilyDescription> {
    if exponents.len() < 2 {
        return Err(Error::InvalidDescriptor(format!(
            "a family needs at least two exponents, got {}",
            exponents.len()
        )));
    }
    validate_exponents(exponents)?;
    let n = exponents.len() - 1;
    let overflow = || Error::InvalidDescriptor("family degree overflows".into());
    let degree = exponents.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d)).ok_or_else(overflow)?;
    let singular_count = (0..n).try_fold(1u128, |acc, _| acc.checked_mul(degree as u128)).ok_or_else(overflow)?;
    let equation = exponents
        .iter()
        .map(|&d| format!("g_{}^{}", degree / d, d))
        .collect::<Vec<_>>()
        .join(" + ")
        + " = 0";
    Ok(FamilyDescription {
        n,
        exponents: exponents.to_vec(),
        degree,
        singular_count,
        local_type: SingularityDescriptor::Brieskorn(exponents.to_vec()),
        equation,
        module: brieskorn_module_capped(exponents, max_milnor)?,
    })
}

/// Result of joining two hypersurfaces `f_1(x) + f_2(y) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinReport {
    pub module: CycModule,
    pub order: Poly,
    /// Order with every `t - 1` factor removed: what remains if the order is
    /// additionally known not to vanish at 1.
    pub order_without_one: Poly,
    pub warnings: Vec<String>,
}

/// Module of the join: the tensor product of the factors' modules over `Q`
/// with `t` acting diagonally. `degrees`, when known, should agree.
pub fn thom_sebastiani_join(a: &CycModule, b: &CycModule, degrees: Option<(u64, u64)>) -> Result<JoinReport> {
    let module = a.tensor_semisimple(b)?;
    let order = module.order()?;
    let one = Poly::from_ints(&[-1, 1]);
    let v = order.multiplicity(&one)?;
    let order_without_one = (0..v).fold(order.clone(), |acc, _| acc.exact_div(&one).unwrap().unwrap()).monic();
    let mut warnings = Vec::new();
    if let Some((d1, d2)) = degrees {
        if d1 != d2 {
            warnings.push(format!(
                "join of hypersurfaces of different degrees {d1} and {d2}; the tensor formula assumes a common degree"
            ));
        }
    }
    if v > 0 {
        warnings.push(format!(
            "the tensor formula yields {v} eigenvalue-1 summand(s); order {order}, or {order_without_one} if the order is known not to vanish at 1"
        ));
    }
    Ok(JoinReport { module, order, order_without_one, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycmod::Primary;
    use crate::{IntPoly, Rational};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn phi(q: u64) -> Primary {
        Primary::cyclotomic(q, 1).unwrap()
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(charpoly_brieskorn::<Rational>(&[2, 3]).unwrap(), p(&[1, -1, 1]));
        assert_eq!(charpoly_brieskorn::<Rational>(&[2, 2]).unwrap(), p(&[-1, 1]));
        assert_eq!(charpoly_brieskorn::<Rational>(&[2, 2, 2]).unwrap(), p(&[1, 1]));
        for d in 2..12 {
            let expect = IntPoly::from_ints(&vec![1; d as usize]);
            assert_eq!(charpoly_brieskorn::<crate::BigInt>(&[d]).unwrap(), expect);
        }
    }

    #[test]
    fn charpoly_errors() {
        assert!(charpoly_brieskorn::<Rational>(&[]).is_err());
        assert!(charpoly_brieskorn::<Rational>(&[2, 1]).is_err());
        assert_eq!(
            charpoly_brieskorn_capped::<Rational>(&[10, 10, 10], 100),
            Err(Error::MilnorCap { milnor: 729, cap: 100 })
        );
    }

    #[test]
    fn module_examples() {
        assert_eq!(brieskorn_module(&[2, 3]).unwrap(), CycModule::new(0, vec![phi(6)]));
        assert_eq!(brieskorn_module(&[2, 2]).unwrap(), CycModule::new(0, vec![phi(1)]));
        assert_eq!(brieskorn_module(&[3, 3]).unwrap(), CycModule::new(0, vec![phi(1), phi(1), phi(3)]));
    }

    #[test]
    fn local_polynomial_examples() {
        let cusp = SingularityDescriptor::CharPair(3, 2);
        assert_eq!(cusp.local_polynomial().unwrap(), p(&[1, -1, 1]));
        let explicit = SingularityDescriptor::ExplicitPoly(p(&[1, 0, -1, 0, 1]));
        assert_eq!(explicit.local_polynomial().unwrap(), p(&[1, 0, -1, 0, 1]));
        let node = SingularityDescriptor::NodalCuspidal { delta: 1, kappa: 0 };
        assert_eq!(node.local_polynomial().unwrap(), p(&[-1, 1]));
        let both = SingularityDescriptor::NodalCuspidal { delta: 2, kappa: 3 };
        assert_eq!(both.local_polynomial().unwrap(), &p(&[-1, 1]).pow(2) * &p(&[1, -1, 1]).pow(3));
        assert_eq!(both.points().len(), 5);
        assert_eq!(SingularityDescriptor::CharPair(7, 1).local_polynomial().unwrap(), p(&[1]));
        assert!(SingularityDescriptor::CharPair(4, 2).local_polynomial().is_err());
        assert!(SingularityDescriptor::CharPair(2, 3).local_polynomial().is_err());
        assert!(SingularityDescriptor::ExplicitPoly(Poly::from_ints(&[])).local_polynomial().is_err());
    }

    #[test]
    fn descriptor_json_shapes() {
        let cases = [
            (r#"{"brieskorn":[2,3]}"#, SingularityDescriptor::Brieskorn(vec![2, 3])),
            (r#"{"char_pair":[3,2]}"#, SingularityDescriptor::CharPair(3, 2)),
            (r#"{"poly":"t^2-t+1"}"#, SingularityDescriptor::ExplicitPoly(p(&[1, -1, 1]))),
            (
                r#"{"nodal_cuspidal":{"delta":0,"kappa":6}}"#,
                SingularityDescriptor::NodalCuspidal { delta: 0, kappa: 6 },
            ),
        ];
        for (text, value) in cases {
            assert_eq!(serde_json::from_str::<SingularityDescriptor>(text).unwrap(), value);
            assert_eq!(serde_json::to_string(&value).unwrap(), text);
        }
    }

    #[test]
    fn family_examples() {
        let f = brieskorn_family(&[2, 3]).unwrap();
        assert_eq!((f.n, f.degree, f.singular_count), (1, 6, 6));
        assert_eq!(f.module, CycModule::new(0, vec![phi(6)]));
        assert_eq!(f.equation, "g_3^2 + g_2^3 = 0");
        let f = brieskorn_family(&[2, 2]).unwrap();
        assert_eq!((f.degree, f.singular_count), (4, 4));
        assert_eq!(f.module, CycModule::new(0, vec![phi(1)]));
        let f = brieskorn_family(&[2, 3, 2, 3]).unwrap();
        assert_eq!((f.n, f.degree, f.singular_count), (3, 36, 36u128.pow(3)));
        assert_eq!(f.module, brieskorn_module(&[2, 3, 2, 3]).unwrap());
        assert!(brieskorn_family(&[5]).is_err());
    }

    #[test]
    fn join_examples() {
        let m6 = CycModule::new(0, vec![phi(6)]);
        let j = thom_sebastiani_join(&m6, &m6, Some((6, 6))).unwrap();
        assert_eq!(j.module, CycModule::new(0, vec![phi(1), phi(1), phi(3)]));
        assert_eq!(j.order_without_one, p(&[1, 1, 1]));
        assert_eq!(j.warnings.len(), 1);

        let nine_cusp = m6.direct_sum(&m6).direct_sum(&m6);
        let j3 = thom_sebastiani_join(&nine_cusp, &m6, None).unwrap();
        assert_eq!(j3.module, j.module.direct_sum(&j.module).direct_sum(&j.module));

        let j0 = thom_sebastiani_join(&m6, &CycModule::zero(), Some((6, 4))).unwrap();
        assert!(j0.module.is_zero());
        assert_eq!(j0.warnings.len(), 1);
    }
}
