//! Certificates bounding the rational homotopy module `π_n ⊗ Q` of the
//! complement of a hypersurface `V ∪ H` in `CP^{n+1}`, `H` the hyperplane at
//! infinity, from local data.

mod curves;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use curves::{char_pair_abelian, euclidean_chain, nodal_cuspidal_abelian, ChainStep, CriterionResult, ResolutionChain};

use crate::brieskorn::{FamilyDescription, SingularityDescriptor, DEFAULT_MAX_MILNOR};
use crate::cycmod::CycModule;
use crate::error::{Error, Result};
use crate::laurent::{cyclotomic, factor_cyclotomic};
use crate::{Poly, Rational};

/// A degree `d` hypersurface `V ⊂ CP^{n+1}` with isolated singularities,
/// together with the geometric hypotheses the caller vouches for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalHypersurface {
    pub n: usize,
    pub degree: u64,
    /// `V` meets the hyperplane at infinity transversally.
    #[serde(default)]
    pub transversal: bool,
    #[serde(default)]
    pub singularities: Vec<SingularityDescriptor>,
    /// Singular points of `V ∩ H`.
    #[serde(default)]
    pub infinity: Vec<SingularityDescriptor>,
    /// Asserted: after resolution, the proper transform is an ample divisor.
    #[serde(default)]
    pub assert_ample: bool,
    /// Asserted: `H^{n+1}(V, V ∩ H; Q) = 0`.
    #[serde(default)]
    pub assert_h_vanishing: bool,
    /// Order of the homology of the infinite cyclic cover of the link at
    /// infinity, when the caller knows it.
    #[serde(default)]
    pub p_infinity: Option<Poly>,
}

impl GlobalHypersurface {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidInput("hypersurface dimension n must be at least 1".into()));
        }
        if self.degree == 0 {
            return Err(Error::InvalidInput("hypersurface degree must be at least 1".into()));
        }
        if matches!(&self.p_infinity, Some(p) if p.is_zero()) {
            return Err(Error::InvalidInput("p_infinity is zero".into()));
        }
        self.all_singularities().try_for_each(SingularityDescriptor::validate)
    }

    /// Affine singular points followed by those at infinity.
    pub fn all_singularities(&self) -> impl Iterator<Item = &SingularityDescriptor> {
        self.singularities.iter().chain(&self.infinity)
    }
}

/// The exponent of the `(t - 1)` factor allowed on top of the local product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Slack {
    /// Some unknown `κ ≥ 0`.
    Unspecified,
    /// `κ = 0`.
    Stripped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityReport {
    /// `Π P_c` over every singular point; the order divides it times
    /// `(t - 1)^κ` where `κ` is described by `slack`.
    pub product_bound: Poly,
    pub slack: Slack,
    pub infinity_bound: Option<Poly>,
    /// Strongest bound: divides `product_bound`, and `infinity_bound` when given.
    pub combined_bound: Poly,
    pub semisimple_required: bool,
    pub roots_restricted_to_d: bool,
    pub one_not_root: bool,
    /// One line per constraint used, naming its hypothesis.
    pub notes: Vec<String>,
}

impl DivisibilityReport {
    /// `π_n ⊗ Q = 0` is certified: the combined bound is a unit and no slack
    /// remains.
    pub fn certifies_vanishing(&self) -> bool {
        self.combined_bound.span() == 0 && self.slack == Slack::Stripped
    }
}

impl fmt::Display for DivisibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "product bound: {}", self.product_bound)?;
        match self.slack {
            Slack::Unspecified => writeln!(f, "(t-1) slack: unspecified exponent")?,
            Slack::Stripped => writeln!(f, "(t-1) slack: none")?,
        }
        if let Some(p) = &self.infinity_bound {
            writeln!(f, "infinity bound: {p}")?;
        }
        if self.certifies_vanishing() {
            writeln!(f, "combined bound: {}; pi_n ⊗ Q = 0", self.combined_bound)?;
        } else {
            writeln!(f, "combined bound: {}", self.combined_bound)?;
        }
        writeln!(f, "semisimple: {}", self.semisimple_required)?;
        writeln!(f, "roots are d-th roots of unity: {}", self.roots_restricted_to_d)?;
        writeln!(f, "1 is not a root: {}", self.one_not_root)?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// Distinct local polynomials of the given points with their counts, in
/// order of first appearance.
fn local_polynomials<'a>(
    sings: impl Iterator<Item = &'a SingularityDescriptor>,
    max_milnor: u128,
) -> Result<Vec<(Poly, u32)>> {
    let mut seen: Vec<(&SingularityDescriptor, usize)> = Vec::new();
    let mut out: Vec<(Poly, u32)> = Vec::new();
    for s in sings {
        match seen.iter().find(|(d, _)| *d == s) {
            Some(&(_, slot)) => out[slot].1 += 1,
            None => {
                let p = s.local_polynomial_capped(max_milnor)?;
                match out.iter().position(|(q, _)| *q == p) {
                    Some(slot) => {
                        out[slot].1 += 1;
                        seen.push((s, slot));
                    }
                    None => {
                        seen.push((s, out.len()));
                        out.push((p, 1));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn strip_one(p: &Poly) -> Result<Poly> {
    let one = Poly::from_ints(&[-1, 1]);
    let v = p.multiplicity(&one)?;
    Ok((0..v).fold(p.clone(), |acc, _| acc.exact_div(&one).unwrap().expect("t - 1 divides")))
}

pub fn divisibility_report(h: &GlobalHypersurface) -> Result<DivisibilityReport> {
    divisibility_report_capped(h, DEFAULT_MAX_MILNOR)
}

pub fn divisibility_report_capped(h: &GlobalHypersurface, max_milnor: u128) -> Result<DivisibilityReport> {
    h.validate()?;
    let locals = local_polynomials(h.all_singularities(), max_milnor)?;
    let points: usize = h.all_singularities().map(|s| s.points().len()).sum();
    let product_bound = locals.iter().fold(Poly::from_ints(&[1]), |acc, (p, n)| &acc * &p.pow(*n)).monic();
    let mut notes = vec![format!(
        "the order divides the product of the local monodromy polynomials of all {points} singular point(s), affine and at infinity, times a power of (t-1)"
    )];

    let slack = if h.assert_h_vanishing || h.transversal {
        if h.assert_h_vanishing {
            notes.push("(t-1) slack dropped: H^{n+1}(V, V ∩ H; Q) = 0 is asserted".into());
        }
        if h.transversal {
            notes.push("(t-1) slack dropped: transversality at infinity makes the module semisimple".into());
        }
        Slack::Stripped
    } else {
        notes.push("(t-1) slack kept with unspecified exponent: neither H^{n+1} vanishing nor semisimplicity is known".into());
        Slack::Unspecified
    };

    let mut combined = product_bound.clone();
    if h.transversal {
        // factor each distinct local polynomial once
        let mut factors: BTreeMap<u64, u32> = BTreeMap::new();
        let mut residual = Poly::from_ints(&[1]);
        for (p, n) in &locals {
            let fac = factor_cyclotomic(p)?;
            for (q, m) in fac.factors {
                *factors.entry(q).or_insert(0) += m * n;
            }
            residual = &residual * &fac.residual.pow(*n);
        }
        let dropped: Vec<u64> = factors.keys().copied().filter(|q| h.degree % q != 0).collect();
        combined = factors
            .iter()
            .filter(|(q, _)| h.degree % **q == 0)
            .fold(Poly::from_ints(&[1]), |acc, (&q, &m)| &acc * &cyclotomic::<Rational>(q).expect("q > 0").pow(m));
        let mut note = format!(
            "transversal at infinity: the module is semisimple and every root of the order is a root of unity of order dividing d = {}",
            h.degree
        );
        if !dropped.is_empty() {
            let qs: Vec<String> = dropped.iter().map(u64::to_string).collect();
            note += &format!("; removed Phi_q for q in {{{}}}", qs.join(", "));
        }
        if residual.span() > 0 {
            note += &format!("; removed non-cyclotomic factor {}", residual.monic());
        }
        notes.push(note);
    }

    let infinity_bound = h.p_infinity.as_ref().map(Poly::monic);
    if let Some(pinf) = &infinity_bound {
        combined = combined.gcd(pinf)?;
        notes.push(format!("the order divides the order at infinity {pinf}; combined with gcd"));
    }

    let one_not_root = h.assert_h_vanishing;
    if one_not_root {
        combined = strip_one(&combined)?;
        notes.push("1 is not a root of the order: H^{n+1}(V, V ∩ H; Q) = 0 is asserted; all (t-1) factors removed".into());
    }

    Ok(DivisibilityReport {
        product_bound,
        slack,
        infinity_bound,
        combined_bound: combined.monic(),
        semisimple_required: h.transversal,
        roots_restricted_to_d: h.transversal,
        one_not_root,
        notes,
    })
}

/// Whether every listed singular point has monodromy polynomial nonzero at 1,
/// so that its link is a rational homology sphere.
pub fn q_manifold_check(sings: &[SingularityDescriptor]) -> Result<bool> {
    q_manifold_check_capped(sings, DEFAULT_MAX_MILNOR)
}

pub fn q_manifold_check_capped(sings: &[SingularityDescriptor], max_milnor: u128) -> Result<bool> {
    Ok(local_polynomials(sings.iter(), max_milnor)?.iter().all(|(p, _)| !p.eval_at_one().is_zero()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertStatus {
    Vanishes,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingCertificate {
    pub status: CertStatus,
    pub notes: Vec<String>,
}

/// `π_n ⊗ Q` vanishes when the ampleness of the resolved hypersurface is
/// asserted and either `H^{n+1}` vanishing is asserted or every singular
/// point (affine and at infinity) has a rational homology sphere link.
/// Never reports non-vanishing.
pub fn vanishing_certificate(h: &GlobalHypersurface) -> Result<VanishingCertificate> {
    vanishing_certificate_capped(h, DEFAULT_MAX_MILNOR)
}

pub fn vanishing_certificate_capped(h: &GlobalHypersurface, max_milnor: u128) -> Result<VanishingCertificate> {
    h.validate()?;
    let mut notes = Vec::new();
    if !h.assert_ample {
        notes.push("ampleness after resolution is not asserted; it is never inferred".into());
        return Ok(VanishingCertificate { status: CertStatus::Inconclusive, notes });
    }
    notes.push("ampleness after resolution is asserted".into());
    if h.assert_h_vanishing {
        notes.push("H^{n+1}(V, V ∩ H; Q) = 0 is asserted".into());
        return Ok(VanishingCertificate { status: CertStatus::Vanishes, notes });
    }
    let all: Vec<SingularityDescriptor> = h.all_singularities().cloned().collect();
    if q_manifold_check_capped(&all, max_milnor)? {
        notes.push("every local monodromy polynomial is nonzero at 1, so V and V ∩ H are rational homology manifolds".into());
        Ok(VanishingCertificate { status: CertStatus::Vanishes, notes })
    } else {
        notes.push("some local monodromy polynomial vanishes at 1 and H^{n+1} vanishing is not asserted".into());
        Ok(VanishingCertificate { status: CertStatus::Inconclusive, notes })
    }
}

/// Passage from `CP^{n+1} - (V ∪ H)` to `CP^{n+1} - V` for generic `H`: the
/// covariants `M / (t^d - 1) M`.
pub fn projective_from_affine(m: &CycModule, degree: u64) -> Result<CycModule> {
    if !m.is_torsion() {
        return Err(Error::NotTorsion { free_rank: m.free_rank() });
    }
    if degree == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    m.covariants_mod(&Poly::t_pow_minus_one(degree))
}

/// Global description of a weighted-homogeneous family hypersurface:
/// `D^n` singular points of the family's local type, transversal at infinity.
pub fn family_hypersurface(f: &FamilyDescription) -> Result<GlobalHypersurface> {
    const MAX_POINTS: u128 = 100_000;
    if f.singular_count > MAX_POINTS {
        return Err(Error::Unsupported(format!(
            "{} singular points exceed the limit of {MAX_POINTS} for an explicit point list",
            f.singular_count
        )));
    }
    Ok(GlobalHypersurface {
        n: f.n,
        degree: f.degree,
        transversal: true,
        singularities: vec![f.local_type.clone(); f.singular_count as usize],
        infinity: Vec::new(),
        assert_ample: false,
        assert_h_vanishing: false,
        p_infinity: None,
    })
}
