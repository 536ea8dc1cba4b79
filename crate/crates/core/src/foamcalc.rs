//! Closed-form numerics for foams: moduli dimension, Dirac index, `b⁺`,
//! admissibility, adjunction degree, orbifold Picard membership and vortex moduli.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, int, q, Q};

/// Topological numbers feeding the dimension formula. Missing fields read as zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FoamIndexInput {
    #[serde(default)]
    pub b1_r: u64,
    #[serde(default, with = "rational")]
    pub self_int_r: Q,
    #[serde(default, with = "rational")]
    pub c1_sq: Q,
    #[serde(default, with = "rational")]
    pub sigma: Q,
    #[serde(default, with = "rational")]
    pub c1_dot_c: Q,
    #[serde(default, with = "rational")]
    pub c_self_int: Q,
}

/// `½b₁(Σʳ) − ¼[Σʳ]² + (c₁² − σ)/8 + ⅛⟨c₁, Σ̃ᶜ⟩ + 1/32 [Σ̃ᶜ]²`.
pub fn moduli_dimension(input: &FoamIndexInput) -> Q {
    b_plus(input.b1_r, input.self_int_r)
        + (input.c1_sq - input.sigma) / int(8)
        + input.c1_dot_c / int(8)
        + input.c_self_int / int(32)
}

/// `(c₁² − σ)/4 + ¼⟨c₁, Σ̃ᶜ⟩ + 1/16 [Σ̃ᶜ]²`; the invariant part is half of it.
pub fn dirac_index_bifold(c1_sq: Q, sigma: Q, c1_dot_c: Q, c_self_int: Q) -> Q {
    (c1_sq - sigma) / int(4) + c1_dot_c / int(4) + c_self_int / int(16)
}

/// `½b₁(Σʳ) − ¼[Σʳ]²`.
pub fn b_plus(b1_r: u64, self_int_r: Q) -> Q {
    q(b1_r as i64, 2) - self_int_r / int(4)
}

pub fn admissible_foam(b1_r: u64, self_int_r: Q) -> bool {
    b_plus(b1_r, self_int_r) > int(1)
}

/// Half the relative Euler number.
pub fn self_intersection(relative_euler: i64) -> Q {
    q(relative_euler, 2)
}

/// `2g − 2 + n/2`.
pub fn adjunction_degree(genus: u64, n_sing: u64) -> Q {
    int(2 * genus as i64 - 2) + q(n_sing as i64, 2)
}

/// A spin-c class survives the adjunction filter when its pairing equals the degree.
pub fn spinc_passes_filter(genus: u64, n_sing: u64, pairing: Q) -> bool {
    pairing == adjunction_degree(genus, n_sing)
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PicardError {
    #[error("c = {0} is not a half-integer")]
    NotHalfInteger(String),
    #[error("isotropy weight {0} is not 0 or 1")]
    BadWeight(u8),
}

/// `c ≡ Σβᵢ/2 mod ℤ`.
pub fn surface_picard_member(c: Q, betas: &[u8]) -> Result<bool, PicardError> {
    if !(c * int(2)).is_integer() {
        return Err(PicardError::NotHalfInteger(rational::to_text(&c)));
    }
    if let Some(&b) = betas.iter().find(|&&b| b > 1) {
        return Err(PicardError::BadWeight(b));
    }
    let sum: i64 = betas.iter().map(|&b| b as i64).sum();
    Ok((c - q(sum, 2)).is_integer())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VortexModuli {
    Empty,
    SymmetricProduct(u64),
    Borderline,
}

/// Empty above `deg K / 2`, the `e`-th symmetric product below, borderline at equality.
pub fn vortex_moduli(deg_l: Q, deg_k: Q, e: u64) -> VortexModuli {
    let half = deg_k / int(2);
    match deg_l.cmp(&half) {
        std::cmp::Ordering::Greater => VortexModuli::Empty,
        std::cmp::Ordering::Less => VortexModuli::SymmetricProduct(e),
        std::cmp::Ordering::Equal => VortexModuli::Borderline,
    }
}

/// Formula values with the caveats that apply to them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub dirac_index: Q,
    pub moduli_dimension: Q,
    pub warnings: Vec<String>,
}

pub fn index_report(input: &FoamIndexInput) -> IndexReport {
    let dirac_index = dirac_index_bifold(input.c1_sq, input.sigma, input.c1_dot_c, input.c_self_int);
    let moduli_dimension = moduli_dimension(input);
    let mut warnings = vec!["orientability of the lifted c-surface assumed".to_string()];
    if input.b1_r % 2 == 1 {
        warnings.push(format!("b1_r = {} is odd, so the real surface is nonorientable", input.b1_r));
    }
    if !moduli_dimension.is_integer() {
        warnings.push(format!("moduli dimension {} is not an integer", rational::to_text(&moduli_dimension)));
    }
    IndexReport { dirac_index, moduli_dimension, warnings }
}
