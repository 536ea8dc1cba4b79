//! Graded chain complexes with a degree −1 differential.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::gf2::BitMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex {
    pub differential: BitMatrix,
    pub gradings: Vec<i64>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("differential is {found:?}, gradings list {len} generators")]
    Shape { found: (usize, usize), len: usize },
    #[error("differential does not square to zero")]
    NotSquareZero,
    #[error("differential entry from generator {source_index} (gr {from}) to {target} (gr {to}) is not of degree -1")]
    NotHomogeneous { source_index: usize, target: usize, from: i64, to: i64 },
    #[error("map does not commute with the differentials")]
    NotAChainMap,
    #[error("map is {found:?}, expected {expected:?}")]
    MapShape { found: (usize, usize), expected: (usize, usize) },
    #[error("map entry from generator {source_index} to {target} is not of degree {degree}")]
    MapNotHomogeneous { source_index: usize, target: usize, degree: i64 },
}

impl GradedComplex {
    pub fn new(differential: BitMatrix, gradings: Vec<i64>) -> Result<Self, HomologyError> {
        let c = GradedComplex { differential, gradings };
        c.check()?;
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.gradings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gradings.is_empty()
    }

    fn check(&self) -> Result<(), HomologyError> {
        let n = self.gradings.len();
        if self.differential.shape() != (n, n) {
            return Err(HomologyError::Shape { found: self.differential.shape(), len: n });
        }
        for (r, c) in self.differential.entries() {
            if self.gradings[r] != self.gradings[c] - 1 {
                return Err(HomologyError::NotHomogeneous {
                    source_index: c,
                    target: r,
                    from: self.gradings[c],
                    to: self.gradings[r],
                });
            }
        }
        if !self.differential.mul(&self.differential).is_zero() {
            return Err(HomologyError::NotSquareZero);
        }
        Ok(())
    }

    fn indices_at(&self, g: i64) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.gradings[k] == g).collect()
    }

    /// Rank of the differential leaving grading `g`.
    fn rank_from(&self, g: i64) -> usize {
        let cols = self.indices_at(g);
        let rows = self.indices_at(g - 1);
        if cols.is_empty() || rows.is_empty() {
            return 0;
        }
        self.differential.select(&rows, &cols).rank()
    }

    /// Homology dimension in each grading of the inclusive window.
    pub fn homology(&self, window: (i64, i64)) -> Result<BTreeMap<i64, usize>, HomologyError> {
        self.check()?;
        Ok((window.0..=window.1)
            .map(|g| {
                let n = self.indices_at(g).len();
                (g, n - self.rank_from(g) - self.rank_from(g + 1))
            })
            .collect())
    }

    /// Homology dimension in every grading that carries generators.
    pub fn homology_all(&self) -> Result<BTreeMap<i64, usize>, HomologyError> {
        self.check()?;
        let grades: BTreeSet<i64> = self.gradings.iter().copied().collect();
        Ok(grades
            .into_iter()
            .map(|g| (g, self.indices_at(g).len() - self.rank_from(g) - self.rank_from(g + 1)))
            .collect())
    }

    pub fn total_homology(&self) -> Result<usize, HomologyError> {
        Ok(self.homology_all()?.values().sum())
    }

    /// Checks that `f: self → target` is a chain map of the given degree.
    pub fn check_chain_map(&self, target: &GradedComplex, f: &BitMatrix, degree: i64) -> Result<(), HomologyError> {
        let expected = (target.len(), self.len());
        if f.shape() != expected {
            return Err(HomologyError::MapShape { found: f.shape(), expected });
        }
        for (r, c) in f.entries() {
            if target.gradings[r] - self.gradings[c] != degree {
                return Err(HomologyError::MapNotHomogeneous { source_index: c, target: r, degree });
            }
        }
        if f.mul(&self.differential) != target.differential.mul(f) {
            return Err(HomologyError::NotAChainMap);
        }
        Ok(())
    }

    /// The cone of `f: self → target` with differential `(∂, 0; f, ∂)`.
    /// The target copy is shifted so the cone differential has degree −1.
    pub fn cone(&self, target: &GradedComplex, f: &BitMatrix, degree: i64) -> Result<GradedComplex, HomologyError> {
        self.check()?;
        target.check()?;
        self.check_chain_map(target, f, degree)?;
        let differential = BitMatrix::block2(
            &self.differential,
            &BitMatrix::zeros(self.len(), target.len()),
            f,
            &target.differential,
        );
        let shift = -1 - degree;
        let gradings = self.gradings.iter().copied().chain(target.gradings.iter().map(|g| g + shift)).collect();
        Ok(GradedComplex { differential, gradings })
    }

    /// Reorders the basis: generator `k` of the result is generator `order[k]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> GradedComplex {
        GradedComplex {
            differential: self.differential.select(order, order),
            gradings: order.iter().map(|&k| self.gradings[k]).collect(),
        }
    }
}

/// Homology of the cone of a self-map `f` of degree `degree`.
pub fn mapping_cone(
    complex: &GradedComplex,
    f: &BitMatrix,
    degree: i64,
) -> Result<BTreeMap<i64, usize>, HomologyError> {
    complex.cone(complex, f, degree)?.homology_all()
}
