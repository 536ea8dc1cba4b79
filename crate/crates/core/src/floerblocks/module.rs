//! Symbolic graded modules built from towers and finite summands.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::complex::{GradedComplex, HomologyError};
use crate::gf2::BitMatrix;

/// `υ` has degree −1 and `U` degree −2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    /// `F₂[υ]`, top generator at the offset.
    TowerDown,
    /// `F₂[υ⁻¹,υ]/F₂[υ]`, bottom generator at the offset.
    TowerUp,
    /// `F₂[υ⁻¹,υ]`, one generator in every grading.
    BiTower,
    /// `F₂[U]`, top generator at the offset.
    TowerDownU,
    /// `F₂[U⁻¹,U]/F₂[U]`, bottom generator at the offset.
    TowerUpU,
    /// `F₂[U⁻¹,U]`, one generator in every grading congruent to the offset mod 2.
    BiTowerU,
    /// A single `F₂` at the offset.
    Finite,
}

impl Shape {
    fn step(self) -> i64 {
        match self {
            Shape::TowerDownU | Shape::TowerUpU | Shape::BiTowerU => 2,
            _ => 1,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Shape::TowerDown => "F₂[υ]",
            Shape::TowerUp => "F₂[υ⁻¹,υ]/F₂[υ]",
            Shape::BiTower => "F₂[υ⁻¹,υ]",
            Shape::TowerDownU => "F₂[U]",
            Shape::TowerUpU => "F₂[U⁻¹,U]/F₂[U]",
            Shape::BiTowerU => "F₂[U⁻¹,U]",
            Shape::Finite => "F₂",
        }
    }

    fn contains(self, offset: i64, g: i64) -> bool {
        let on_lattice = (g - offset).rem_euclid(self.step()) == 0;
        on_lattice
            && match self {
                Shape::TowerDown | Shape::TowerDownU => g <= offset,
                Shape::TowerUp | Shape::TowerUpU => g >= offset,
                Shape::BiTower | Shape::BiTowerU => true,
                Shape::Finite => g == offset,
            }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Summand {
    pub shape: Shape,
    pub offset: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedModule {
    pub summands: Vec<Summand>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("υ does not act on a {0} summand")]
    UnsupportedShape(&'static str),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

impl GradedModule {
    pub fn zero() -> Self {
        GradedModule::default()
    }

    pub fn single(shape: Shape, offset: i64) -> Self {
        GradedModule { summands: vec![Summand { shape, offset }] }
    }

    pub fn repeated(shape: Shape, offset: i64, copies: usize) -> Self {
        GradedModule { summands: vec![Summand { shape, offset }; copies] }
    }

    pub fn direct_sum(mut self, other: &GradedModule) -> Self {
        self.summands.extend_from_slice(&other.summands);
        self
    }

    /// `Λ[x₁,…,x_m] ⊗ self` with each `x_i` of degree −1.
    pub fn exterior_tensor(&self, m: u32) -> Self {
        let mut summands = Vec::new();
        for weight in 0..=m as i64 {
            let copies = binomial(m as u64, weight as u64);
            for s in &self.summands {
                for _ in 0..copies {
                    summands.push(Summand { shape: s.shape, offset: s.offset - weight });
                }
            }
        }
        GradedModule { summands }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.summands.iter().all(|s| s.shape == Shape::Finite)
    }

    /// `Some(dimension)` for finite modules, `None` when a tower is present.
    pub fn total_rank(&self) -> Option<usize> {
        self.is_finite().then_some(self.summands.len())
    }

    pub fn dim_at(&self, g: i64) -> usize {
        self.summands.iter().filter(|s| s.shape.contains(s.offset, g)).count()
    }

    pub fn dims_in_window(&self, window: (i64, i64)) -> BTreeMap<i64, usize> {
        (window.0..=window.1).map(|g| (g, self.dim_at(g))).collect()
    }

    /// A zero-differential complex spanning the module inside `window`,
    /// with `υ` as a degree −1 map. `υ` leaving the window is truncated.
    pub fn upsilon_model(&self, window: (i64, i64)) -> Result<(GradedComplex, BitMatrix), ModelError> {
        let mut gradings = Vec::new();
        let mut owner = Vec::new();
        for (k, s) in self.summands.iter().enumerate() {
            if s.shape.step() != 1 {
                return Err(ModelError::UnsupportedShape(s.shape.symbol()));
            }
            for g in window.0..=window.1 {
                if s.shape.contains(s.offset, g) {
                    gradings.push(g);
                    owner.push(k);
                }
            }
        }
        let n = gradings.len();
        let mut entries = Vec::new();
        for c in 0..n {
            if self.summands[owner[c]].shape == Shape::Finite {
                continue;
            }
            if let Some(r) = (0..n).find(|&r| owner[r] == owner[c] && gradings[r] == gradings[c] - 1) {
                entries.push((r, c));
            }
        }
        let complex = GradedComplex::new(BitMatrix::zeros(n, n), gradings)?;
        Ok((complex, BitMatrix::from_entries(n, n, &entries)))
    }

    /// Homology of the cone of `υ`, reported per grading over `window`.
    /// The model is built on a padded window so truncation stays invisible.
    pub fn upsilon_cone(&self, window: (i64, i64)) -> Result<BTreeMap<i64, usize>, ModelError> {
        let padded = (window.0 - 3, window.1 + 3);
        let (c, upsilon) = self.upsilon_model(padded)?;
        let h = c.cone(&c, &upsilon, -1)?.homology(window)?;
        Ok(h)
    }

    /// Total rank of the `υ` cone over a window covering every offset.
    pub fn upsilon_cone_rank(&self) -> Result<usize, ModelError> {
        let lo = self.summands.iter().map(|s| s.offset).min().unwrap_or(0) - 4;
        let hi = self.summands.iter().map(|s| s.offset).max().unwrap_or(0) + 4;
        Ok(self.upsilon_cone((lo, hi))?.values().sum())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

impl fmt::Display for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let mut groups: Vec<(Summand, usize)> = Vec::new();
        for &s in &self.summands {
            match groups.last_mut() {
                Some((last, count)) if *last == s => *count += 1,
                _ => groups.push((s, 1)),
            }
        }
        let parts: Vec<String> = groups
            .iter()
            .map(|(s, count)| {
                let mut t = s.shape.symbol().to_string();
                if s.offset != 0 {
                    t.push_str(&format!("⟨{}⟩", s.offset.to_string().replace('-', "−")));
                }
                if *count > 1 {
                    t.push_str(&format!("^{{⊕{count}}}"));
                }
                t
            })
            .collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}
