//! Primary decomposition of a single cyclic module `Q[t,t^-1]/(f)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::{cyclotomic, divisors, factor_cyclotomic};
use crate::{Poly, Rational};

/// Coefficient magnitudes above this are not factored for rational-root search.
const ROOT_SEARCH_LIMIT: u64 = 1_000_000_000_000;

/// How irreducibility of a primary base polynomial is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Irreducibility {
    /// The base is the cyclotomic polynomial `Φ_q`.
    Cyclotomic(u64),
    /// Degree at most 3 with no rational root (or degree 1).
    Verified,
    /// Taken on trust from the caller or from a square-free piece that was
    /// too large to test.
    Asserted,
}

/// Rational roots of a nonzero polynomial with nonzero constant term, or
/// `None` when the extreme coefficients are too large to enumerate candidates.
fn rational_roots(p: &Poly) -> Option<Vec<Rational>> {
    let prim = p.primitive();
    let a0 = prim.trailing()?.numer().abs().to_u64()?;
    let an = prim.leading()?.numer().abs().to_u64()?;
    if a0 > ROOT_SEARCH_LIMIT || an > ROOT_SEARCH_LIMIT {
        return None;
    }
    let mut roots = Vec::new();
    for r in divisors(a0) {
        for s in divisors(an) {
            if r.gcd(&s) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = Rational::new(BigInt::from(sign) * BigInt::from(r), BigInt::from(s));
                if eval(&prim, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

fn eval(p: &Poly, x: &Rational) -> Rational {
    // p has shift 0 here
    p.coeffs().iter().rev().fold(Rational::zero(), |acc, c| acc * x.clone() + c.clone())
}

fn linear(root: &Rational) -> Poly {
    Poly::new(vec![-root.clone(), Rational::one()], 0)
}

/// Classifies a candidate primary base. Errors when the base is a unit or is
/// demonstrably reducible.
pub fn classify(base: &Poly) -> Result<Irreducibility> {
    if base.is_zero() || base.span() == 0 {
        return Err(Error::InvalidInput(format!("primary base {base} is zero or a unit")));
    }
    let cyc = factor_cyclotomic(base)?;
    if let Some(q) = cyc.single_index() {
        return Ok(Irreducibility::Cyclotomic(q));
    }
    if !cyc.factors.is_empty() {
        return Err(Error::InvalidInput(format!("primary base {base} has a cyclotomic factor")));
    }
    match base.span() {
        1 => Ok(Irreducibility::Verified),
        2 | 3 => match rational_roots(&base.canonicalize()) {
            Some(roots) if roots.is_empty() => Ok(Irreducibility::Verified),
            Some(_) => Err(Error::InvalidInput(format!("primary base {base} has a rational root"))),
            None => Ok(Irreducibility::Asserted),
        },
        _ => Ok(Irreducibility::Asserted),
    }
}

/// `Q[t,t^-1]/(f) ≅ ⊕ Q[t,t^-1]/(p^e)`: cyclotomic factors first, then
/// rational linear factors, then the square-free decomposition of what is
/// left. Returned bases are monic; a unit `f` gives an empty list.
pub fn primary_decomposition(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    let cyc = factor_cyclotomic(f)?;
    let mut out: Vec<(Poly, u32)> =
        cyc.factors.iter().map(|(&q, &m)| (cyclotomic::<Rational>(q).expect("q > 0"), m)).collect();
    let mut rest = cyc.residual.monic();
    if rest.span() == 0 {
        return Ok(out);
    }
    if let Some(roots) = rational_roots(&rest) {
        for root in roots {
            let lin = linear(&root);
            let v = rest.multiplicity(&lin)?;
            if v > 0 {
                rest = (0..v).fold(rest, |acc, _| acc.exact_div(&lin).unwrap().unwrap()).monic();
                out.push((lin, v));
            }
        }
    }
    if rest.span() > 0 {
        out.extend(rest.squarefree_decomposition()?);
    }
    Ok(out)
}
