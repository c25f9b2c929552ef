//! Alexander-type modules of pencils: the fibre module modulo the images of
//! `Γ - I` for every monodromy `Γ` and of every degeneration operator.
//!
//! For plane curves the fibre module is free of rank `d - 1` (the reduced
//! Burau module of `d` strands) and monodromies are braid words. For higher
//! dimensional pencils the monodromy matrices are supplied directly.

mod braid;
mod burau;
mod degeneration;

use serde::{Deserialize, Serialize};

pub use braid::BraidWord;
pub use burau::{burau_generator, burau_generator_inverse, burau_word, validate_factorization};
pub use degeneration::{degeneration_block, fibre_degeneration, LocalType};

use crate::cycmod::CycModule;
use crate::error::{Error, Result};
use crate::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Monodromy {
    Braid(BraidWord),
    Matrix(Matrix),
}

/// One singular member of a pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilDatum {
    pub monodromy: Monodromy,
    pub local_type: Option<LocalType>,
    /// Strand pair of a classical degeneration, taken as given instead of
    /// being read off the monodromy word.
    pub position: Option<usize>,
}

impl PencilDatum {
    pub fn braid(word: BraidWord, local_type: Option<LocalType>) -> Self {
        PencilDatum { monodromy: Monodromy::Braid(word), local_type, position: None }
    }

    pub fn matrix(gamma: Matrix, local_type: Option<LocalType>) -> Self {
        PencilDatum { monodromy: Monodromy::Matrix(gamma), local_type, position: None }
    }

    fn gamma(&self) -> Matrix {
        match &self.monodromy {
            Monodromy::Braid(w) => burau_word(w),
            Monodromy::Matrix(m) => m.clone(),
        }
    }

    fn degeneration(&self) -> Result<Option<Matrix>> {
        let Some(lt) = &self.local_type else {
            return Ok(None);
        };
        let rows = match (&self.monodromy, self.position) {
            (Monodromy::Braid(w), Some(pos)) => degeneration_block(lt, w.strands(), pos)?,
            (Monodromy::Braid(w), None) => fibre_degeneration(lt, w)?,
            (Monodromy::Matrix(_), _) => match lt {
                LocalType::ExplicitBlock(m) => m.clone(),
                other => {
                    return Err(Error::InvalidInput(format!(
                        "a {} degeneration needs braid monodromy; give an explicit block instead",
                        other.name()
                    )))
                }
            },
        };
        Ok(Some(rows))
    }
}

fn check_square(gamma: &Matrix, fiber_rank: usize, what: &str) -> Result<()> {
    if gamma.rows() != fiber_rank || gamma.cols() != fiber_rank {
        return Err(Error::Dimension(format!(
            "{what} is {}x{}, the fibre has rank {fiber_rank}",
            gamma.rows(),
            gamma.cols()
        )));
    }
    Ok(())
}

fn stack_and_solve(rows: Vec<Matrix>, fiber_rank: usize) -> Result<CycModule> {
    let mut rel = Matrix::zeros(0, fiber_rank);
    for block in rows {
        if block.cols() != fiber_rank {
            return Err(Error::Dimension(format!(
                "relation block has {} columns, the fibre has rank {fiber_rank}",
                block.cols()
            )));
        }
        rel = rel.vstack(&block)?;
    }
    CycModule::from_presentation(&rel)
}

/// Cokernel of the stacked rows `Γ_j - I` and degeneration images. For braid
/// monodromy `fiber_rank` must be the number of strands minus one.
pub fn assemble(data: &[PencilDatum], fiber_rank: usize) -> Result<CycModule> {
    if fiber_rank == 0 {
        return Err(Error::Dimension("the fibre module has rank 0".into()));
    }
    let id = Matrix::identity(fiber_rank);
    let mut blocks = Vec::new();
    for (j, d) in data.iter().enumerate() {
        if let Monodromy::Braid(w) = &d.monodromy {
            if w.strands() - 1 != fiber_rank {
                return Err(Error::Dimension(format!(
                    "fibre {j} is a braid on {} strands, but the fibre rank is {fiber_rank}",
                    w.strands()
                )));
            }
        }
        let gamma = d.gamma();
        check_square(&gamma, fiber_rank, &format!("monodromy of fibre {j}"))?;
        blocks.push(&gamma - &id);
        blocks.extend(d.degeneration()?);
    }
    stack_and_solve(blocks, fiber_rank)
}

/// [`assemble`] for monodromy matrices and degeneration images given as
/// separate lists.
pub fn generic_assemble(gammas: &[Matrix], degenerations: &[Matrix], fiber_rank: usize) -> Result<CycModule> {
    if fiber_rank == 0 {
        return Err(Error::Dimension("the fibre module has rank 0".into()));
    }
    let id = Matrix::identity(fiber_rank);
    let mut blocks = Vec::new();
    for (j, g) in gammas.iter().enumerate() {
        check_square(g, fiber_rank, &format!("monodromy {j}"))?;
        blocks.push(g - &id);
    }
    blocks.extend(degenerations.iter().cloned());
    stack_and_solve(blocks, fiber_rank)
}

/// Plane-curve pencil in the exchange format
/// `{"strands": 3, "fibers": [{"word": "1,1,1", "type": "cusp"}, …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilInput {
    pub strands: usize,
    pub fibers: Vec<FibreInput>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibreInput {
    pub word: String,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub local_type: Option<FibreKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    /// Rows of an explicit degeneration block, for `"type": "explicit"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block: Option<Matrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FibreKind {
    Tangency,
    Node,
    Cusp,
    Explicit,
}

impl PencilInput {
    pub fn words(&self) -> Result<Vec<BraidWord>> {
        self.fibers.iter().map(|f| BraidWord::parse(&f.word, self.strands)).collect()
    }

    pub fn to_data(&self) -> Result<Vec<PencilDatum>> {
        self.fibers
            .iter()
            .map(|f| {
                let word = BraidWord::parse(&f.word, self.strands)?;
                let local_type = match (f.local_type, &f.block) {
                    (Some(FibreKind::Explicit), Some(b)) => Some(LocalType::ExplicitBlock(b.clone())),
                    (Some(FibreKind::Explicit), None) => {
                        return Err(Error::InvalidInput(format!("explicit fibre `{}` has no block", f.word)))
                    }
                    (_, Some(_)) => {
                        return Err(Error::InvalidInput(format!("fibre `{}` has a block but is not explicit", f.word)))
                    }
                    (Some(FibreKind::Tangency), None) => Some(LocalType::Tangency),
                    (Some(FibreKind::Node), None) => Some(LocalType::Node),
                    (Some(FibreKind::Cusp), None) => Some(LocalType::Cusp),
                    (None, None) => None,
                };
                Ok(PencilDatum { monodromy: Monodromy::Braid(word), local_type, position: f.position })
            })
            .collect()
    }

    pub fn assemble(&self) -> Result<CycModule> {
        if self.strands < 2 {
            return Err(Error::InvalidBraid(format!("braids need at least 2 strands, got {}", self.strands)));
        }
        assemble(&self.to_data()?, self.strands - 1)
    }
}

/// Higher-dimensional pencil: monodromy matrices and degeneration images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericPencilInput {
    pub fiber_rank: usize,
    pub gammas: Vec<Matrix>,
    #[serde(default)]
    pub degenerations: Vec<Matrix>,
}

impl GenericPencilInput {
    pub fn assemble(&self) -> Result<CycModule> {
        generic_assemble(&self.gammas, &self.degenerations, self.fiber_rank)
    }
}
