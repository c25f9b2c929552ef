//! Words in the Artin braid group.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the generators `σ_1, …, σ_{n-1}` of the `n`-strand braid group.
/// Letter `i` is `σ_i` and `-i` is its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWord")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

#[derive(Deserialize)]
struct RawWord {
    strands: usize,
    letters: Vec<i64>,
}

impl TryFrom<RawWord> for BraidWord {
    type Error = Error;

    fn try_from(raw: RawWord) -> Result<Self> {
        BraidWord::new(raw.strands, raw.letters)
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidBraid(format!("braids need at least 2 strands, got {strands}")));
        }
        if let Some(bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::InvalidBraid(format!(
                "letter {bad} is not a generator of the {strands}-strand braid group"
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses comma-separated signed generator indices, e.g. `"1,1,-2"`. The
    /// empty string is the identity.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let text = text.trim();
        let letters = if text.is_empty() {
            Vec::new()
        } else {
            text.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::InvalidBraid(format!("`{}` is not a signed generator index", s.trim())))
                })
                .collect::<Result<_>>()?
        };
        Self::new(strands, letters)
    }

    /// `Δ² = (σ_1 σ_2 ⋯ σ_{n-1})^n`, the generator of the centre.
    pub fn full_twist(strands: usize) -> Result<Self> {
        let sweep: Vec<i64> = (1..strands as i64).collect();
        Self::new(strands, sweep.repeat(strands))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.same_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate_by(&self, c: &Self) -> Result<Self> {
        c.concat(self)?.concat(&c.inverse())
    }

    /// Sum of the letter signs; the image in the abelianization `Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    /// Image in the symmetric group as the list `p` with strand `j` ending at
    /// position `p[j]`, letters applied left to right.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for pos in at.iter_mut() {
                if *pos == i {
                    *pos = i + 1;
                } else if *pos == i + 1 {
                    *pos = i;
                }
            }
        }
        at
    }

    pub(crate) fn same_strands(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::InvalidBraid(format!(
                "cannot combine braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        Ok(())
    }

    /// Splits the word as `c · σ_i^k · c⁻¹` with `k > 0`, taking the shortest
    /// such `c`. Returns `(c, i, k)`.
    pub fn as_conjugated_power(&self) -> Option<(BraidWord, usize, u32)> {
        let w = &self.letters;
        let n = w.len();
        (0..=n.saturating_sub(1) / 2).find_map(|c| {
            if (0..c).any(|j| w[n - 1 - j] != -w[j]) {
                return None;
            }
            let core = &w[c..n - c];
            let first = *core.first()?;
            if first < 0 || core.iter().any(|&l| l != first) {
                return None;
            }
            let conj = BraidWord { strands: self.strands, letters: w[..c].to_vec() };
            Some((conj, first as usize, core.len() as u32))
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}
