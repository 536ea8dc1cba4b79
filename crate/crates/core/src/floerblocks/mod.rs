//! The three-flavour block package over the two-element field.
//!
//! Generators split into irreducibles `o`, boundary-stable `s` and
//! boundary-unstable `u` reducibles. Matrices act on column vectors, so a
//! block `d_xy: C^x → C^y` has shape `|C^y| × |C^x|`.
//!
//! Grading degrees of the blocks: every `d_*` and `bar_ss`, `bar_uu` lower
//! `gr` by one, `bar_su` preserves it and `bar_us` lowers it by two. The bar
//! complex uses `gr` on `C^s` and `gr − 1` on `C^u`.

mod cobordism;
mod complex;
mod module;
pub mod synth;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2::{self, BitMatrix};
use crate::rational::Q;

pub use cobordism::{
    build_cobordism_blocks, BlockFailure, ChainMapReport, CobordismBlocks, CobordismMaps,
    HatAssembly,
};
pub use complex::{mapping_cone, GradedComplex, HomologyError};
pub use module::{GradedModule, ModelError, Shape, Summand};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    O,
    S,
    U,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Block {
    DOo,
    DOs,
    DUo,
    DUs,
    BarSs,
    BarSu,
    BarUs,
    BarUu,
}

impl Block {
    pub const ALL: [Block; 8] = [
        Block::DOo,
        Block::DOs,
        Block::DUo,
        Block::DUs,
        Block::BarSs,
        Block::BarSu,
        Block::BarUs,
        Block::BarUu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Block::DOo => "d_oo",
            Block::DOs => "d_os",
            Block::DUo => "d_uo",
            Block::DUs => "d_us",
            Block::BarSs => "bar_ss",
            Block::BarSu => "bar_su",
            Block::BarUs => "bar_us",
            Block::BarUu => "bar_uu",
        }
    }

    pub fn source(self) -> GenKind {
        match self {
            Block::DOo | Block::DOs => GenKind::O,
            Block::DUo | Block::DUs | Block::BarUs | Block::BarUu => GenKind::U,
            Block::BarSs | Block::BarSu => GenKind::S,
        }
    }

    pub fn target(self) -> GenKind {
        match self {
            Block::DOo | Block::DUo => GenKind::O,
            Block::DOs | Block::DUs | Block::BarSs | Block::BarUs => GenKind::S,
            Block::BarSu | Block::BarUu => GenKind::U,
        }
    }

    /// Change in `gr` from source to target.
    pub fn degree(self) -> i64 {
        match self {
            Block::BarSu => 0,
            Block::BarUs => -2,
            _ => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Generator {
    pub id: String,
    pub gr: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockComplex {
    pub o: Vec<Generator>,
    pub s: Vec<Generator>,
    pub u: Vec<Generator>,
    blocks: [BitMatrix; 8],
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BlockError {
    #[error("{block}: expected shape {expected:?}, found {found:?}")]
    Dimension { block: String, expected: (usize, usize), found: (usize, usize) },
    #[error("{block}: entry ({row}, {col}) outside shape {shape:?}")]
    EntryOutOfRange { block: String, row: usize, col: usize, shape: (usize, usize) },
    #[error("block identities not validated: {0}")]
    NotValidated(String),
    #[error("malformed block complex document: {0}")]
    Malformed(String),
}

impl BlockComplex {
    /// A complex with all eight blocks zero.
    pub fn zero(o: Vec<Generator>, s: Vec<Generator>, u: Vec<Generator>) -> Self {
        let mut bc = BlockComplex { o, s, u, blocks: std::array::from_fn(|_| BitMatrix::zeros(0, 0)) };
        for b in Block::ALL {
            let (r, c) = bc.expected_shape(b);
            bc.blocks[b as usize] = BitMatrix::zeros(r, c);
        }
        bc
    }

    pub fn generators(&self, kind: GenKind) -> &[Generator] {
        match kind {
            GenKind::O => &self.o,
            GenKind::S => &self.s,
            GenKind::U => &self.u,
        }
    }

    pub fn len(&self) -> usize {
        self.o.len() + self.s.len() + self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn expected_shape(&self, b: Block) -> (usize, usize) {
        (self.generators(b.target()).len(), self.generators(b.source()).len())
    }

    pub fn block(&self, b: Block) -> &BitMatrix {
        &self.blocks[b as usize]
    }

    pub fn set_block(&mut self, b: Block, m: BitMatrix) -> Result<(), BlockError> {
        let expected = self.expected_shape(b);
        if m.shape() != expected {
            return Err(BlockError::Dimension { block: b.name().into(), expected, found: m.shape() });
        }
        self.blocks[b as usize] = m;
        Ok(())
    }

    pub fn with_block(mut self, b: Block, entries: &[(usize, usize)]) -> Result<Self, BlockError> {
        let (r, c) = self.expected_shape(b);
        if let Some(&(row, col)) = entries.iter().find(|(row, col)| *row >= r || *col >= c) {
            return Err(BlockError::EntryOutOfRange { block: b.name().into(), row, col, shape: (r, c) });
        }
        self.blocks[b as usize] = BitMatrix::from_entries(r, c, entries);
        Ok(self)
    }

    fn check_shapes(&self) -> Result<(), BlockError> {
        for b in Block::ALL {
            let expected = self.expected_shape(b);
            let found = self.block(b).shape();
            if found != expected {
                return Err(BlockError::Dimension { block: b.name().into(), expected, found });
            }
        }
        Ok(())
    }

    pub fn from_document(doc: &BlockComplexDocument) -> Result<Self, BlockError> {
        let mut bc = BlockComplex::zero(doc.o.clone(), doc.s.clone(), doc.u.clone());
        for (b, entries) in doc.entries() {
            bc = bc.with_block(b, entries)?;
        }
        Ok(bc)
    }

    pub fn to_document(&self) -> BlockComplexDocument {
        let e = |b: Block| self.block(b).entries();
        BlockComplexDocument {
            o: self.o.clone(),
            s: self.s.clone(),
            u: self.u.clone(),
            d_oo: e(Block::DOo),
            d_os: e(Block::DOs),
            d_uo: e(Block::DUo),
            d_us: e(Block::DUs),
            bar_ss: e(Block::BarSs),
            bar_su: e(Block::BarSu),
            bar_us: e(Block::BarUs),
            bar_uu: e(Block::BarUu),
        }
    }
}

/// JSON form: generator lists plus `(row, col)` unit entries per block.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockComplexDocument {
    #[serde(default)]
    pub o: Vec<Generator>,
    #[serde(default)]
    pub s: Vec<Generator>,
    #[serde(default)]
    pub u: Vec<Generator>,
    #[serde(default)]
    pub d_oo: Vec<(usize, usize)>,
    #[serde(default)]
    pub d_os: Vec<(usize, usize)>,
    #[serde(default)]
    pub d_uo: Vec<(usize, usize)>,
    #[serde(default)]
    pub d_us: Vec<(usize, usize)>,
    #[serde(default)]
    pub bar_ss: Vec<(usize, usize)>,
    #[serde(default)]
    pub bar_su: Vec<(usize, usize)>,
    #[serde(default)]
    pub bar_us: Vec<(usize, usize)>,
    #[serde(default)]
    pub bar_uu: Vec<(usize, usize)>,
}

impl BlockComplexDocument {
    fn entries(&self) -> [(Block, &[(usize, usize)]); 8] {
        [
            (Block::DOo, &self.d_oo),
            (Block::DOs, &self.d_os),
            (Block::DUo, &self.d_uo),
            (Block::DUs, &self.d_us),
            (Block::BarSs, &self.bar_ss),
            (Block::BarSu, &self.bar_su),
            (Block::BarUs, &self.bar_us),
            (Block::BarUu, &self.bar_uu),
        ]
    }
}

pub fn parse_block_complex(text: &str) -> Result<BlockComplex, BlockError> {
    let doc: BlockComplexDocument =
        serde_json::from_str(text).map_err(|e| BlockError::Malformed(e.to_string()))?;
    BlockComplex::from_document(&doc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    /// `(source, target)` generator ids of a nonzero entry when the identity fails.
    pub witness: Option<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingViolation {
    pub block: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identities: Vec<IdentityCheck>,
    pub grading_violations: Vec<GradingViolation>,
}

impl IdentityReport {
    pub fn ok(&self) -> bool {
        self.identities.iter().all(|c| c.holds) && self.grading_violations.is_empty()
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> =
            self.identities.iter().filter(|c| !c.holds).map(|c| format!("{} fails", c.name)).collect();
        out.extend(self.grading_violations.iter().map(|g| {
            format!("{} breaks the grading from {} to {}", g.block, g.source, g.target)
        }));
        out
    }
}

type Term = &'static [Block];

/// The eight identities equivalent to all three flavour differentials squaring
/// to zero. Each term is a composite written left to right as a matrix product.
const IDENTITIES: [(&str, GenKind, GenKind, &[Term]); 8] = {
    use Block::*;
    [
        ("identity 1", GenKind::O, GenKind::O, &[&[DOo, DOo], &[DUo, BarSu, DOs]]),
        ("identity 2", GenKind::O, GenKind::S, &[&[DOs, DOo], &[BarSs, DOs], &[DUs, BarSu, DOs]]),
        ("identity 3", GenKind::U, GenKind::O, &[&[DOo, DUo], &[DUo, BarUu], &[DUo, BarSu, DUs]]),
        (
            "identity 4",
            GenKind::U,
            GenKind::S,
            &[&[BarUs], &[DOs, DUo], &[BarSs, DUs], &[DUs, BarUu], &[DUs, BarSu, DUs]],
        ),
        ("bar identity 1", GenKind::S, GenKind::S, &[&[BarSs, BarSs], &[BarUs, BarSu]]),
        ("bar identity 2", GenKind::U, GenKind::S, &[&[BarSs, BarUs], &[BarUs, BarUu]]),
        ("bar identity 3", GenKind::S, GenKind::U, &[&[BarSu, BarSs], &[BarUu, BarSu]]),
        ("bar identity 4", GenKind::U, GenKind::U, &[&[BarSu, BarUs], &[BarUu, BarUu]]),
    ]
};

/// Evaluates the eight identities and the block grading degrees.
pub fn validate_identities(bc: &BlockComplex) -> Result<IdentityReport, BlockError> {
    bc.check_shapes()?;
    let mut identities = Vec::new();
    for (name, source, target, terms) in IDENTITIES {
        let (rows, cols) = (bc.generators(target).len(), bc.generators(source).len());
        let mut total = BitMatrix::zeros(rows, cols);
        for term in terms {
            let factors: Vec<&BitMatrix> = term.iter().map(|&b| bc.block(b)).collect();
            total.add_assign(&BitMatrix::chain(&factors));
        }
        let witness = total.first_nonzero().map(|(r, c)| {
            (bc.generators(source)[c].id.clone(), bc.generators(target)[r].id.clone())
        });
        identities.push(IdentityCheck { name: name.to_string(), holds: witness.is_none(), witness });
    }
    let mut grading_violations = Vec::new();
    for b in Block::ALL {
        let (src, tgt) = (bc.generators(b.source()), bc.generators(b.target()));
        for (r, c) in bc.block(b).entries() {
            if tgt[r].gr - src[c].gr != b.degree() {
                grading_violations.push(GradingViolation {
                    block: b.name().to_string(),
                    source: src[c].id.clone(),
                    target: tgt[r].id.clone(),
                });
            }
        }
    }
    Ok(IdentityReport { identities, grading_violations })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavour {
    Check,
    Hat,
    Bar,
}

impl Flavour {
    pub const ALL: [Flavour; 3] = [Flavour::Check, Flavour::Hat, Flavour::Bar];

    fn summands(self) -> (GenKind, GenKind) {
        match self {
            Flavour::Check => (GenKind::O, GenKind::S),
            Flavour::Hat => (GenKind::O, GenKind::U),
            Flavour::Bar => (GenKind::S, GenKind::U),
        }
    }
}

/// A flavour differential on a direct sum of two generator sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlavourComplex {
    pub flavour: Flavour,
    pub complex: GradedComplex,
    /// `kind:id` for each basis vector.
    pub labels: Vec<String>,
}

impl FlavourComplex {
    pub fn differential(&self) -> &BitMatrix {
        &self.complex.differential
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn kind_prefix(k: GenKind) -> &'static str {
    match k {
        GenKind::O => "o",
        GenKind::S => "s",
        GenKind::U => "u",
    }
}

fn require_valid(bc: &BlockComplex) -> Result<(), BlockError> {
    let report = validate_identities(bc)?;
    if report.ok() {
        Ok(())
    } else {
        Err(BlockError::NotValidated(report.failures().join("; ")))
    }
}

/// Assembles one flavour; the identities are checked first.
pub fn build_flavour(bc: &BlockComplex, flavour: Flavour) -> Result<FlavourComplex, BlockError> {
    require_valid(bc)?;
    Ok(assemble(bc, flavour))
}

fn assemble(bc: &BlockComplex, flavour: Flavour) -> FlavourComplex {
    use Block::*;
    let m = |b: Block| bc.block(b);
    let differential = match flavour {
        Flavour::Check => BitMatrix::block2(
            m(DOo),
            &m(DUo).mul(m(BarSu)),
            m(DOs),
            &m(BarSs).add(&m(DUs).mul(m(BarSu))),
        ),
        Flavour::Hat => BitMatrix::block2(
            m(DOo),
            m(DUo),
            &m(BarSu).mul(m(DOs)),
            &m(BarUu).add(&m(BarSu).mul(m(DUs))),
        ),
        Flavour::Bar => BitMatrix::block2(m(BarSs), m(BarUs), m(BarSu), m(BarUu)),
    };
    let (first, second) = flavour.summands();
    let shift = |k: GenKind| if flavour == Flavour::Bar && k == GenKind::U { -1 } else { 0 };
    let mut gradings = Vec::new();
    let mut labels = Vec::new();
    for k in [first, second] {
        for g in bc.generators(k) {
            gradings.push(g.gr + shift(k));
            labels.push(format!("{}:{}", kind_prefix(k), g.id));
        }
    }
    FlavourComplex { flavour, complex: GradedComplex { differential, gradings }, labels }
}

/// The maps `i: C̄ → Č`, `j: Č → Ĉ`, `p: Ĉ → C̄` with their complexes.
#[derive(Clone, Debug)]
pub struct Ijp {
    pub check: FlavourComplex,
    pub hat: FlavourComplex,
    pub bar: FlavourComplex,
    pub i: BitMatrix,
    pub j: BitMatrix,
    pub p: BitMatrix,
}

impl Ijp {
    /// Names of the maps failing to commute with the differentials.
    pub fn chain_map_failures(&self) -> Vec<&'static str> {
        let commutes = |f: &BitMatrix, src: &FlavourComplex, tgt: &FlavourComplex| {
            f.mul(src.differential()) == tgt.differential().mul(f)
        };
        let mut out = Vec::new();
        if !commutes(&self.i, &self.bar, &self.check) {
            out.push("i");
        }
        if !commutes(&self.j, &self.check, &self.hat) {
            out.push("j");
        }
        if !commutes(&self.p, &self.hat, &self.bar) {
            out.push("p");
        }
        out
    }

    /// Exactness of `Ȟ →j Ĥ →p H̄ →i Ȟ` at each of the three groups.
    pub fn exactness(&self) -> Exactness {
        let exact_at = |f: &BitMatrix, a: &FlavourComplex, g: &BitMatrix, b: &FlavourComplex, c: &FlavourComplex| {
            let (da, db, dc) = (a.differential(), b.differential(), c.differential());
            let rank_f = gf2::induced_rank(f, da, db);
            let rank_g = gf2::induced_rank(g, db, dc);
            let composite = gf2::induced_rank(&g.mul(f), da, dc);
            let kernel_g = gf2::homology_dim(db) - rank_g;
            composite == 0 && kernel_g == rank_f
        };
        Exactness {
            at_check: exact_at(&self.i, &self.bar, &self.j, &self.check, &self.hat),
            at_hat: exact_at(&self.j, &self.check, &self.p, &self.hat, &self.bar),
            at_bar: exact_at(&self.p, &self.hat, &self.i, &self.bar, &self.check),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Exactness {
    pub at_check: bool,
    pub at_hat: bool,
    pub at_bar: bool,
}

impl Exactness {
    pub fn all(&self) -> bool {
        self.at_check && self.at_hat && self.at_bar
    }
}

pub fn build_ijp(bc: &BlockComplex) -> Result<Ijp, BlockError> {
    use Block::*;
    require_valid(bc)?;
    let (no, ns, nu) = (bc.o.len(), bc.s.len(), bc.u.len());
    let z = BitMatrix::zeros;
    let i = BitMatrix::block2(&z(no, ns), bc.block(DUo), &BitMatrix::identity(ns), bc.block(DUs));
    let j = BitMatrix::block2(&BitMatrix::identity(no), &z(no, ns), &z(nu, no), bc.block(BarSu));
    let p = BitMatrix::block2(bc.block(DOs), bc.block(DUs), &z(nu, no), &BitMatrix::identity(nu));
    Ok(Ijp {
        check: assemble(bc, Flavour::Check),
        hat: assemble(bc, Flavour::Hat),
        bar: assemble(bc, Flavour::Bar),
        i,
        j,
        p,
    })
}

/// Grading shift `pairing / 2` of the loop attached to a class `u`.
pub fn grading_period(pairing: i64) -> Q {
    Q::new(pairing, 2)
}

/// An absolute mod-2 grading needs every period to be an integer.
pub fn admits_absolute_z2_grading(pairings: &[i64]) -> bool {
    pairings.iter().all(|&p| grading_period(p).is_integer())
}

/// Homology dimensions of every flavour over a window.
pub fn flavour_homologies(
    bc: &BlockComplex,
    window: (i64, i64),
) -> Result<BTreeMap<Flavour, BTreeMap<i64, usize>>, BlockError> {
    require_valid(bc)?;
    let mut out = BTreeMap::new();
    for f in Flavour::ALL {
        let dims = assemble(bc, f)
            .complex
            .homology(window)
            .map_err(|e| BlockError::NotValidated(e.to_string()))?;
        out.insert(f, dims);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn gens(prefix: &str, grs: &[i64]) -> Vec<Generator> {
        grs.iter().enumerate().map(|(k, &gr)| Generator { id: format!("{prefix}{k}"), gr }).collect()
    }

    #[test]
    fn zero_and_empty_complexes() {
        let bc = BlockComplex::zero(gens("x", &[0, 1]), gens("a", &[0]), gens("b", &[0]));
        assert!(validate_identities(&bc).unwrap().ok());
        let empty = BlockComplex::zero(vec![], vec![], vec![]);
        assert_eq!(build_flavour(&empty, Flavour::Check).unwrap().differential().shape(), (0, 0));
    }

    #[test]
    fn bar_identity_violation_is_named() {
        let bc = BlockComplex::zero(vec![], gens("a", &[2, 1, 0]), vec![])
            .with_block(Block::BarSs, &[(1, 0), (2, 1)])
            .unwrap();
        let report = validate_identities(&bc).unwrap();
        assert_eq!(report.failures(), vec!["bar identity 1 fails"]);
        let bad = &report.identities[4];
        assert_eq!(bad.witness, Some(("a0".into(), "a2".into())));
        assert!(matches!(build_flavour(&bc, Flavour::Bar), Err(BlockError::NotValidated(_))));
    }

    #[test]
    fn out_of_range_entries_and_bad_shapes() {
        let bc = BlockComplex::zero(gens("x", &[0]), vec![], vec![]);
        assert!(bc.clone().with_block(Block::DOo, &[(0, 1)]).is_err());
        let mut bc = bc;
        assert!(bc.set_block(Block::DOo, BitMatrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn grading_degrees_are_checked() {
        let bc = BlockComplex::zero(vec![], gens("a", &[0]), gens("b", &[-1]))
            .with_block(Block::BarSu, &[(0, 0)])
            .unwrap();
        let report = validate_identities(&bc).unwrap();
        assert_eq!(report.grading_violations.len(), 1);
    }

    #[test]
    fn boundary_obstructed_pair() {
        let bc = BlockComplex::zero(vec![], gens("a", &[0]), gens("b", &[0]))
            .with_block(Block::BarSu, &[(0, 0)])
            .unwrap();
        let ijp = build_ijp(&bc).unwrap();
        assert!(ijp.chain_map_failures().is_empty());
        assert!(ijp.exactness().all());
        let h = flavour_homologies(&bc, (-2, 2)).unwrap();
        assert_eq!(h[&Flavour::Check].values().sum::<usize>(), 1);
        assert_eq!(h[&Flavour::Hat].values().sum::<usize>(), 1);
        assert_eq!(h[&Flavour::Bar].values().sum::<usize>(), 0);
    }

    #[test]
    fn periods() {
        assert_eq!(grading_period(0), q(0, 1));
        assert_eq!(grading_period(4), q(2, 1));
        assert_eq!(grading_period(1), q(1, 2));
        assert!(!admits_absolute_z2_grading(&[4, 1]));
        assert!(admits_absolute_z2_grading(&[4, 0, -2]));
    }

    #[test]
    fn document_round_trip() {
        let bc = BlockComplex::zero(gens("x", &[1, 0]), gens("a", &[0]), vec![])
            .with_block(Block::DOo, &[(1, 0)])
            .unwrap();
        let text = serde_json::to_string(&bc.to_document()).unwrap();
        assert_eq!(parse_block_complex(&text).unwrap(), bc);
    }
}
