//! Finitely generated modules over `Q[t, t^-1]`.
//!
//! The coefficient ring is a principal ideal domain, so every such module is
//! a free part plus a direct sum of cyclic primary modules `Q[t,t^-1]/(p^e)`.
//! [`CycModule`] stores exactly that data, sorted so that structural equality
//! is isomorphism.

mod decompose;
mod presentation;

pub use decompose::{classify, primary_decomposition, Irreducibility};
pub use presentation::{diagonalize, module_from_presentation};

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::{cyclotomic, totient};
use crate::{Poly, Rational};

/// A summand `Q[t,t^-1]/(base^power)` with `base` monic and irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Primary {
    base: Poly,
    power: u32,
    irreducibility: Irreducibility,
}

impl Primary {
    pub fn new(base: &Poly, power: u32) -> Result<Self> {
        if power == 0 {
            return Err(Error::InvalidInput("primary power must be positive".into()));
        }
        let base = base.monic();
        let irreducibility = classify(&base)?;
        Ok(Primary { base, power, irreducibility })
    }

    /// `Q[t,t^-1]/(Φ_q^power)`.
    pub fn cyclotomic(q: u64, power: u32) -> Result<Self> {
        if power == 0 {
            return Err(Error::InvalidInput("primary power must be positive".into()));
        }
        Ok(Primary { base: cyclotomic(q)?, power, irreducibility: Irreducibility::Cyclotomic(q) })
    }

    pub fn base(&self) -> &Poly {
        &self.base
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    pub fn cyclotomic_index(&self) -> Option<u64> {
        match self.irreducibility {
            Irreducibility::Cyclotomic(q) => Some(q),
            _ => None,
        }
    }

    /// `base^power`.
    pub fn annihilator(&self) -> Poly {
        self.base.pow(self.power)
    }

    /// Dimension over `Q`.
    pub fn dimension(&self) -> usize {
        self.base.span() * self.power as usize
    }

    fn sort_key(&self) -> (usize, &[Rational], u32) {
        (self.base.span(), self.base.coeffs(), self.power)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycModule {
    free_rank: usize,
    /// Sorted by (degree, coefficients, power).
    primaries: Vec<Primary>,
}

impl CycModule {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        CycModule { free_rank: rank, primaries: Vec::new() }
    }

    pub fn new(free_rank: usize, mut primaries: Vec<Primary>) -> Self {
        primaries.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        CycModule { free_rank, primaries }
    }

    /// The cyclic module `Q[t,t^-1]/(f)`, primary-decomposed. `f = 0` gives a
    /// free module of rank one and a unit gives the zero module.
    pub fn cyclic(f: &Poly) -> Result<Self> {
        if f.is_zero() {
            return Ok(Self::free(1));
        }
        let primaries = primary_decomposition(f)?
            .into_iter()
            .map(|(p, e)| Primary::new(&p, e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(0, primaries))
    }

    /// Semisimple module with `copies[q]` summands `Q[t,t^-1]/(Φ_q)`.
    pub fn from_cyclotomic_multiplicities(copies: &BTreeMap<u64, usize>) -> Result<Self> {
        let mut primaries = Vec::new();
        for (&q, &m) in copies {
            let prim = Primary::cyclotomic(q, 1)?;
            primaries.extend(std::iter::repeat_n(prim, m));
        }
        Ok(Self::new(0, primaries))
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn primaries(&self) -> &[Primary] {
        &self.primaries
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.primaries.is_empty()
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }

    /// Torsion with every primary power equal to one.
    pub fn is_semisimple(&self) -> bool {
        self.is_torsion() && self.primaries.iter().all(|p| p.power == 1)
    }

    pub fn is_cyclotomic(&self) -> bool {
        self.primaries.iter().all(|p| p.cyclotomic_index().is_some())
    }

    /// Whether some primary base was not verified irreducible.
    pub fn has_asserted_irreducibility(&self) -> bool {
        self.primaries.iter().any(|p| p.irreducibility == Irreducibility::Asserted)
    }

    /// Dimension over `Q` of a torsion module.
    pub fn dimension(&self) -> Option<usize> {
        self.is_torsion().then(|| self.primaries.iter().map(Primary::dimension).sum())
    }

    /// Product of the primary annihilators; `1` for the zero module.
    pub fn order(&self) -> Result<Poly> {
        if !self.is_torsion() {
            return Err(Error::NotTorsion { free_rank: self.free_rank });
        }
        Ok(self.primaries.iter().map(Primary::annihilator).product::<Poly>().monic())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut primaries = self.primaries.clone();
        primaries.extend(other.primaries.iter().cloned());
        Self::new(self.free_rank + other.free_rank, primaries)
    }

    /// `m / f·m`. A primary `(p, e)` becomes `(p, min(e, v))` with `v` the
    /// multiplicity of `p` in `f`; each free generator becomes `Q[t,t^-1]/(f)`.
    pub fn covariants_mod(&self, f: &Poly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial("covariants modulo zero"));
        }
        let mut primaries = Vec::new();
        for prim in &self.primaries {
            let v = f.multiplicity(&prim.base)?;
            let e = prim.power.min(v);
            if e > 0 {
                primaries.push(Primary { power: e, ..prim.clone() });
            }
        }
        let cyc = Self::cyclic(f)?;
        for _ in 0..self.free_rank {
            primaries.extend(cyc.primaries.iter().cloned());
        }
        Ok(Self::new(0, primaries))
    }

    /// Copies of each `Φ_q` in a semisimple cyclotomic module, the form in
    /// which its monodromy eigenvalues are stored.
    pub fn cyclotomic_multiplicities(&self) -> Option<BTreeMap<u64, usize>> {
        if !self.is_semisimple() {
            return None;
        }
        let mut out = BTreeMap::new();
        for p in &self.primaries {
            *out.entry(p.cyclotomic_index()?).or_insert(0) += 1;
        }
        Some(out)
    }

    /// Tensor product over `Q` with `t` acting diagonally, for semisimple
    /// modules whose primaries are all cyclotomic. The eigenvalues of the
    /// product are the pairwise products of eigenvalues.
    pub fn tensor_semisimple(&self, other: &Self) -> Result<Self> {
        let left = semisimple_spectrum(self)?;
        let right = semisimple_spectrum(other)?;
        let mut copies: BTreeMap<u64, usize> = BTreeMap::new();
        for (&a, &ma) in &left {
            for (&b, &mb) in &right {
                for (q, c) in cyclotomic_product_counts(a, b) {
                    *copies.entry(q).or_insert(0) += c * ma * mb;
                }
            }
        }
        Self::from_cyclotomic_multiplicities(&copies)
    }
}

fn semisimple_spectrum(m: &CycModule) -> Result<BTreeMap<u64, usize>> {
    if !m.is_torsion() {
        return Err(Error::NotTorsion { free_rank: m.free_rank });
    }
    m.cyclotomic_multiplicities().ok_or_else(|| {
        Error::Unsupported("tensor product requires semisimple modules with cyclotomic primaries".into())
    })
}

/// `Q[t]/Φ_a ⊗ Q[t]/Φ_b ≅ ⊕_q (Q[t]/Φ_q)^{c_q}`. Primitive roots are
/// `exp(2πi·k/n)`; the product of roots `i/a` and `j/b` is `x/L` with
/// `L = lcm(a, b)`, of order `L / gcd(x, L)`. Galois symmetry spreads each
/// order evenly over its `φ(q)` primitive roots.
pub(crate) fn cyclotomic_product_counts(a: u64, b: u64) -> BTreeMap<u64, usize> {
    let l = a.lcm(&b);
    let mut roots_of_order: BTreeMap<u64, u64> = BTreeMap::new();
    for i in (1..=a).filter(|i| i.gcd(&a) == 1) {
        for j in (1..=b).filter(|j| j.gcd(&b) == 1) {
            let x = (i * (l / a) + j * (l / b)) % l;
            *roots_of_order.entry(l / x.gcd(&l)).or_insert(0) += 1;
        }
    }
    roots_of_order
        .into_iter()
        .map(|(q, n)| {
            debug_assert_eq!(n % totient(q), 0);
            (q, (n / totient(q)) as usize)
        })
        .collect()
}

impl fmt::Display for CycModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Q[t,t^-1]".to_string()),
            r => parts.push(format!("Q[t,t^-1]^{r}")),
        }
        for p in &self.primaries {
            if p.power == 1 {
                parts.push(format!("Q[t,t^-1]/({})", p.base));
            } else {
                parts.push(format!("Q[t,t^-1]/({})^{}", p.base, p.power));
            }
        }
        f.write_str(&parts.join(" + "))
    }
}

/// `{ "free_rank": n, "primaries": [[poly-text, power], ...] }`
#[derive(Serialize, Deserialize)]
struct ModuleRepr {
    free_rank: usize,
    primaries: Vec<(Poly, u32)>,
}

impl CycModule {
    /// `[[poly-text, power], ...]`, the torsion part in exchange form.
    pub fn primary_pairs(&self) -> Vec<(Poly, u32)> {
        self.primaries.iter().map(|p| (p.base.clone(), p.power)).collect()
    }

    pub fn from_primary_pairs(free_rank: usize, pairs: &[(Poly, u32)]) -> Result<Self> {
        let prims = pairs.iter().map(|(p, e)| Primary::new(p, *e)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(free_rank, prims))
    }
}

impl Serialize for CycModule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ModuleRepr { free_rank: self.free_rank, primaries: self.primary_pairs() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycModule {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ModuleRepr::deserialize(d)?;
        Self::from_primary_pairs(repr.free_rank, &repr.primaries).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter writing a torsion module as its bare primary list.
pub mod torsion_pairs {
    use super::*;

    pub fn serialize<S: Serializer>(m: &CycModule, s: S) -> std::result::Result<S::Ok, S::Error> {
        m.primary_pairs().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<CycModule, D::Error> {
        let pairs = Vec::<(Poly, u32)>::deserialize(d)?;
        CycModule::from_primary_pairs(0, &pairs).map_err(serde::de::Error::custom)
    }
}
