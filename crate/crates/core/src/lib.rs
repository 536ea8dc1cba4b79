//! Combinatorics and F₂ homological algebra for monopole Floer homology of webs.
//!
//! Webs and foams, 1-sets and their r-cycles, Tait colourings, the dot-operator
//! algebra, three-flavour block complexes, foam index formulas and a catalogue
//! of known Floer groups.

pub mod catalogue;
pub mod cli;
pub mod corpus;
pub mod dotalgebra;
pub mod floerblocks;
pub mod foamcalc;
pub mod gf2;
pub mod library;
pub mod onesets;
pub mod rational;
pub mod tait;
pub mod webmodel;
