//! Serializable report types for each subcommand.

use std::fmt::Write;

use alexandria::brieskorn::SingularityDescriptor;
use alexandria::certify::{
    char_pair_abelian, divisibility_report_capped, nodal_cuspidal_abelian, vanishing_certificate_capped,
    CriterionResult, DivisibilityReport, GlobalHypersurface, VanishingCertificate,
};
use alexandria::cycmod::CycModule;
use alexandria::Poly;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharpolyReport {
    pub exponents: Vec<u64>,
    pub milnor_number: u128,
    pub charpoly: Poly,
    pub module: CycModule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilReport {
    pub module: CycModule,
    /// `None` when the order is undefined (positive free rank).
    pub order: Option<Poly>,
    /// Whether the braid words multiply to the full twist; absent for
    /// generic input.
    pub factorization_valid: Option<bool>,
}

impl PencilReport {
    pub fn new(module: CycModule, factorization_valid: Option<bool>) -> Self {
        let order = module.order().ok();
        PencilReport { module, order, factorization_valid }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("module: {}\n", self.module);
        match &self.order {
            Some(p) => writeln!(s, "order: {p}").unwrap(),
            None => writeln!(s, "order: undefined (free rank {})", self.module.free_rank()).unwrap(),
        }
        match self.factorization_valid {
            Some(true) => s.push_str("factorization: product equals the full twist\n"),
            Some(false) => s.push_str("factorization: product is not the full twist\n"),
            None => {}
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodalCuspidalCheck {
    pub degree: u64,
    pub nodes: u64,
    pub cusps: u64,
    pub abelian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPairCheck {
    pub m: u64,
    pub k: u64,
    pub result: CriterionResult,
}

/// Abelianity criteria for plane curves (`n = 1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveCriteria {
    /// Present when every affine singularity is a node or an ordinary cusp.
    pub nodal_cuspidal: Option<NodalCuspidalCheck>,
    pub char_pairs: Vec<CharPairCheck>,
}

impl CurveCriteria {
    fn new(h: &GlobalHypersurface) -> Result<Self, CliError> {
        let (mut nodes, mut cusps, mut only_simple) = (0u64, 0u64, true);
        let mut char_pairs = Vec::new();
        for s in h.singularities.iter().flat_map(SingularityDescriptor::points) {
            match &s {
                SingularityDescriptor::Brieskorn(e) if e == &[2, 2] => nodes += 1,
                SingularityDescriptor::Brieskorn(e) if e == &[2, 3] || e == &[3, 2] => cusps += 1,
                SingularityDescriptor::CharPair(m, k) => {
                    only_simple = false;
                    char_pairs.push(CharPairCheck { m: *m, k: *k, result: char_pair_abelian(h.degree, *m, *k)? });
                }
                _ => only_simple = false,
            }
        }
        let nodal_cuspidal = only_simple.then(|| NodalCuspidalCheck {
            degree: h.degree,
            nodes,
            cusps,
            abelian: nodal_cuspidal_abelian(h.degree, nodes, cusps),
        });
        Ok(CurveCriteria { nodal_cuspidal, char_pairs })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub input: GlobalHypersurface,
    pub divisibility: DivisibilityReport,
    pub vanishing: VanishingCertificate,
    pub curve_criteria: Option<CurveCriteria>,
}

impl CertifyReport {
    pub fn new(h: &GlobalHypersurface, cap: u128) -> Result<Self, CliError> {
        Ok(CertifyReport {
            input: h.clone(),
            divisibility: divisibility_report_capped(h, cap)?,
            vanishing: vanishing_certificate_capped(h, cap)?,
            curve_criteria: if h.n == 1 { Some(CurveCriteria::new(h)?) } else { None },
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = self.divisibility.to_string();
        let status = serde_json::to_value(self.vanishing.status).expect("status serializes");
        writeln!(s, "vanishing: {}", status.as_str().unwrap_or_default()).unwrap();
        for n in &self.vanishing.notes {
            writeln!(s, "note: {n}").unwrap();
        }
        if let Some(c) = &self.curve_criteria {
            if let Some(nc) = &c.nodal_cuspidal {
                writeln!(
                    s,
                    "nodal-cuspidal criterion (d={}, nodes={}, cusps={}): {}",
                    nc.degree,
                    nc.nodes,
                    nc.cusps,
                    if nc.abelian { "abelian" } else { "inconclusive" }
                )
                .unwrap();
            }
            for cp in &c.char_pairs {
                writeln!(
                    s,
                    "characteristic pair ({}, {}): d^2 = {}, drop = {}: {}",
                    cp.m, cp.k, cp.result.degree_squared, cp.result.total_drop, cp.result.conclusion
                )
                .unwrap();
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CovariantsReport {
    pub degree: u64,
    pub module: CycModule,
    pub covariants: CycModule,
    pub order: Poly,
}
