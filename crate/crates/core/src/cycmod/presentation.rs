//! Cokernels of relation matrices over `Q[t, t^-1]`.

use num_traits::Zero;

use super::CycModule;
use crate::error::{Error, Result};
use crate::{Matrix, Poly, Rational};

struct Work {
    a: Vec<Vec<Poly>>,
    rows: usize,
    cols: usize,
}

impl Work {
    /// Smallest-span nonzero entry among `cells`; ties keep the first seen.
    fn min_cell(&self, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, j) in cells {
            let e = &self.a[i][j];
            if e.is_zero() {
                continue;
            }
            if best.is_none_or(|(_, _, s)| e.span() < s) {
                best = Some((i, j, e.span()));
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn move_to(&mut self, (i, j): (usize, usize), t: usize) {
        self.a.swap(t, i);
        for row in self.a.iter_mut() {
            row.swap(t, j);
        }
        // scale the pivot row by a unit so the pivot is monic with shift 0
        let piv = &self.a[t][t];
        let lead = piv.leading().expect("pivot is nonzero").clone();
        let unit = Poly::monomial(Rational::from_integer(1.into()) / lead, -piv.shift());
        for x in self.a[t].iter_mut() {
            *x = &*x * &unit;
        }
    }

    /// Row operations clearing column `t` below the pivot, then column
    /// operations clearing row `t`. Returns whether a nonzero remainder was
    /// left behind.
    fn sweep(&mut self, t: usize) -> Result<bool> {
        let mut dirty = false;
        for i in t + 1..self.rows {
            if self.a[i][t].is_zero() {
                continue;
            }
            let (q, r) = self.a[i][t].div_rem(&self.a[t][t])?;
            for j in t..self.cols {
                let v = &self.a[i][j] - &(&q * &self.a[t][j]);
                self.a[i][j] = v;
            }
            dirty |= !r.is_zero();
        }
        for j in t + 1..self.cols {
            if self.a[t][j].is_zero() {
                continue;
            }
            let (q, r) = self.a[t][j].div_rem(&self.a[t][t])?;
            for i in t..self.rows {
                let v = &self.a[i][j] - &(&q * &self.a[i][t]);
                self.a[i][j] = v;
            }
            dirty |= !r.is_zero();
        }
        Ok(dirty)
    }
}

/// Diagonalizes `rel` by invertible row and column operations and returns the
/// nonzero diagonal entries, each monic. Pivots are the nonzero entries of
/// least span, ties broken by lowest row then lowest column.
pub fn diagonalize(rel: &Matrix) -> Result<Vec<Poly>> {
    let mut w = Work { a: rel.to_rows(), rows: rel.rows(), cols: rel.cols() };
    let mut diag = Vec::new();
    for t in 0..w.rows.min(w.cols) {
        let Some(cell) = w.min_cell((t..w.rows).flat_map(|i| (t..w.cols).map(move |j| (i, j)))) else {
            break;
        };
        w.move_to(cell, t);
        while w.sweep(t)? {
            let below = (t + 1..w.rows).map(|i| (i, t));
            let right = (t + 1..w.cols).map(|j| (t, j));
            let cell = w.min_cell(right.chain(below)).expect("a nonzero remainder exists");
            w.move_to(cell, t);
        }
        diag.push(w.a[t][t].monic());
    }
    Ok(diag)
}

/// Cokernel of the map `Q[t,t^-1]^rows → Q[t,t^-1]^cols` given by `rel`: the
/// free module on the columns modulo the row space.
pub fn module_from_presentation(rel: &Matrix) -> Result<CycModule> {
    if rel.cols() == 0 {
        return Err(Error::Dimension("a presentation needs at least one generator column".into()));
    }
    let diag = diagonalize(rel)?;
    let mut module = CycModule::free(rel.cols() - diag.len());
    for d in &diag {
        module = module.direct_sum(&CycModule::cyclic(d)?);
    }
    Ok(module)
}

impl CycModule {
    pub fn from_presentation(rel: &Matrix) -> Result<Self> {
        module_from_presentation(rel)
    }
}
