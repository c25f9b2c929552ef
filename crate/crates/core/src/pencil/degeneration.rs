//! Relations contributed by singular fibres of a pencil of plane curves.
//!
//! Near a singular fibre where strands `i` and `i+1` come together, the local
//! van Kampen relation is `x_i = x_{i+1}` (tangency), `[x_i, x_{i+1}] = 1`
//! (node) or `x_i x_{i+1} x_i = x_{i+1} x_i x_{i+1}` (cusp). Fox derivatives of
//! these relations, abelianized to `t` and written in the reduced Burau basis,
//! are multiples of the basis vector `e_i`: `1`, `1 - t` and `t² - t + 1`.

use serde::{Deserialize, Serialize};

use super::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::LaurentMatrix;
use crate::scalar::Scalar;
use crate::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalType {
    Tangency,
    Node,
    Cusp,
    /// Rows spanning the degeneration image, given directly.
    ExplicitBlock(Matrix),
}

impl LocalType {
    /// Exponent `k` of the local monodromy `σ_i^k` of the classical types.
    pub fn local_power(&self) -> Option<u32> {
        match self {
            LocalType::Tangency => Some(1),
            LocalType::Node => Some(2),
            LocalType::Cusp => Some(3),
            LocalType::ExplicitBlock(_) => None,
        }
    }

    /// Coefficient of `e_i` in the degeneration row of a classical type.
    pub fn local_coefficient<T: Scalar>(&self) -> Option<LaurentPoly<T>> {
        let c: &[i64] = match self {
            LocalType::Tangency => &[1],
            LocalType::Node => &[1, -1],
            LocalType::Cusp => &[1, -1, 1],
            LocalType::ExplicitBlock(_) => return None,
        };
        Some(LaurentPoly::from_ints(c))
    }

    pub fn name(&self) -> &'static str {
        match self {
            LocalType::Tangency => "tangency",
            LocalType::Node => "node",
            LocalType::Cusp => "cusp",
            LocalType::ExplicitBlock(_) => "explicit",
        }
    }
}

/// Degeneration rows for strands `position`, `position + 1` degenerating with
/// no conjugation, as a `1 × (strands - 1)` matrix; an explicit block is
/// returned unchanged after a column check.
pub fn degeneration_block(local_type: &LocalType, strands: usize, position: usize) -> Result<Matrix> {
    if strands < 2 || position == 0 || position >= strands {
        return Err(Error::InvalidBraid(format!("no adjacent strand pair {position} on {strands} strands")));
    }
    match local_type {
        LocalType::ExplicitBlock(m) => {
            if m.cols() != strands - 1 {
                return Err(Error::Dimension(format!(
                    "explicit block has {} columns, the fibre has rank {}",
                    m.cols(),
                    strands - 1
                )));
            }
            Ok(m.clone())
        }
        classical => {
            let mut row = LaurentMatrix::zeros(1, strands - 1);
            row.set(0, position - 1, classical.local_coefficient().expect("classical type"));
            Ok(row)
        }
    }
}

/// Degeneration rows of a singular fibre with monodromy `word`. A classical
/// type needs `word = c · σ_i^k · c⁻¹` with `k` matching the type; the local
/// row at `e_i` is transported by the Burau image of `c⁻¹`.
pub fn fibre_degeneration(local_type: &LocalType, word: &BraidWord) -> Result<Matrix> {
    let n = word.strands();
    let Some(k) = local_type.local_power() else {
        return degeneration_block(local_type, n, 1);
    };
    let (c, i, power) = word.as_conjugated_power().ok_or_else(|| {
        Error::InvalidBraid(format!("monodromy `{word}` of a {} fibre is not of the form c·σ_i^k·c⁻¹", local_type.name()))
    })?;
    if power != k {
        return Err(Error::InvalidBraid(format!(
            "a {} fibre has local monodromy σ_i^{k}, but `{word}` has power {power}",
            local_type.name()
        )));
    }
    let local = degeneration_block(local_type, n, i)?;
    Ok(&local * &super::burau_word(&c.inverse()))
}
