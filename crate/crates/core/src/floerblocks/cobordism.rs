//! Block maps induced by a cobordism from `Y₋` to `Y₊`.

use serde::Serialize;

use super::{assemble, BlockComplex, BlockError, Flavour, GenKind};
use crate::gf2::BitMatrix;

/// The eight m-blocks; `m_xy` maps `C^x(Y₋)` to `C^y(Y₊)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobordismBlocks {
    pub m_oo: BitMatrix,
    pub m_os: BitMatrix,
    pub m_uo: BitMatrix,
    pub m_us: BitMatrix,
    pub bar_m_ss: BitMatrix,
    pub bar_m_uu: BitMatrix,
    pub bar_m_su: BitMatrix,
    pub bar_m_us: BitMatrix,
}

fn dims(bc: &BlockComplex, k: GenKind) -> usize {
    bc.generators(k).len()
}

impl CobordismBlocks {
    pub fn zero(source: &BlockComplex, target: &BlockComplex) -> Self {
        use GenKind::*;
        let z = |from: GenKind, to: GenKind| BitMatrix::zeros(dims(target, to), dims(source, from));
        CobordismBlocks {
            m_oo: z(O, O),
            m_os: z(O, S),
            m_uo: z(U, O),
            m_us: z(U, S),
            bar_m_ss: z(S, S),
            bar_m_uu: z(U, U),
            bar_m_su: z(S, U),
            bar_m_us: z(U, S),
        }
    }

    /// Identity data on a single complex: `m_oo`, `bar_m_ss`, `bar_m_uu` are identities.
    pub fn identity(bc: &BlockComplex) -> Self {
        let mut m = CobordismBlocks::zero(bc, bc);
        m.m_oo = BitMatrix::identity(bc.o.len());
        m.bar_m_ss = BitMatrix::identity(bc.s.len());
        m.bar_m_uu = BitMatrix::identity(bc.u.len());
        m
    }

    fn named(&self) -> [(&'static str, &BitMatrix, GenKind, GenKind); 8] {
        use GenKind::*;
        [
            ("m_oo", &self.m_oo, O, O),
            ("m_os", &self.m_os, O, S),
            ("m_uo", &self.m_uo, U, O),
            ("m_us", &self.m_us, U, S),
            ("bar_m_ss", &self.bar_m_ss, S, S),
            ("bar_m_uu", &self.bar_m_uu, U, U),
            ("bar_m_su", &self.bar_m_su, S, U),
            ("bar_m_us", &self.bar_m_us, U, S),
        ]
    }

    fn check_shapes(&self, source: &BlockComplex, target: &BlockComplex) -> Result<(), BlockError> {
        for (name, m, from, to) in self.named() {
            let expected = (dims(target, to), dims(source, from));
            if m.shape() != expected {
                return Err(BlockError::Dimension { block: name.into(), expected, found: m.shape() });
            }
        }
        Ok(())
    }
}

/// How to assemble `m̂`. The hat display involves an undefined `σ`; the
/// `SigmaIdentity` reading takes `σ = 1` and `bar_m_uu` in the corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HatAssembly {
    Omitted,
    SigmaIdentity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobordismMaps {
    pub check: BitMatrix,
    pub hat: Option<BitMatrix>,
    pub bar: BitMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockFailure {
    pub name: String,
    /// `(source, target)` generator labels of a nonzero entry.
    pub witness: (String, String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainMapReport {
    /// `m_oo·d_oo + d_oo·m_oo + m_uo·bar_su·d_os + d_uo·bar_su·m_os` as displayed.
    pub sample_identity_holds: bool,
    pub check_chain_map: bool,
    pub hat_chain_map: Option<bool>,
    pub bar_chain_map: bool,
    pub failures: Vec<BlockFailure>,
}

impl ChainMapReport {
    pub fn ok(&self) -> bool {
        self.check_chain_map && self.bar_chain_map && self.hat_chain_map != Some(false)
    }
}

fn failure(name: &str, m: &BitMatrix, src: &[String], tgt: &[String]) -> Option<BlockFailure> {
    m.first_nonzero().map(|(r, c)| BlockFailure { name: name.into(), witness: (src[c].clone(), tgt[r].clone()) })
}

/// Assembles `m̌`, `m̂`, `m̄` and checks that they commute with the differentials.
pub fn build_cobordism_blocks(
    m: &CobordismBlocks,
    source: &BlockComplex,
    target: &BlockComplex,
    hat: HatAssembly,
) -> Result<(CobordismMaps, ChainMapReport), BlockError> {
    use super::Block::{self, *};
    m.check_shapes(source, target)?;
    let sm = |b: Block| source.block(b);
    let tm = |b: Block| target.block(b);
    let check = BitMatrix::block2(
        &m.m_oo,
        &m.m_uo.mul(sm(BarSu)).add(&tm(DUo).mul(&m.bar_m_su)),
        &m.m_os,
        &m.bar_m_ss.add(&m.m_us.mul(sm(BarSu))).add(&tm(DUs).mul(&m.bar_m_su)),
    );
    let bar = BitMatrix::block2(&m.bar_m_ss, &m.bar_m_us, &m.bar_m_su, &m.bar_m_uu);
    let hat_map = match hat {
        HatAssembly::Omitted => None,
        HatAssembly::SigmaIdentity => Some(BitMatrix::block2(
            &m.m_oo,
            &m.m_uo,
            &m.bar_m_su.mul(sm(DOs)).add(&tm(BarSu).mul(&m.m_os)),
            &m.bar_m_uu.add(&m.bar_m_su.mul(sm(DUs))).add(&tm(BarSu).mul(&m.m_us)),
        )),
    };

    let mut failures = Vec::new();
    let sample = m
        .m_oo
        .mul(sm(DOo))
        .add(&tm(DOo).mul(&m.m_oo))
        .add(&m.m_uo.mul(sm(BarSu)).mul(sm(DOs)))
        .add(&tm(DUo).mul(tm(BarSu)).mul(&m.m_os));
    let ids = |bc: &BlockComplex, k: GenKind| -> Vec<String> {
        bc.generators(k).iter().map(|g| g.id.clone()).collect()
    };
    if let Some(f) = failure("sample identity", &sample, &ids(source, GenKind::O), &ids(target, GenKind::O)) {
        failures.push(f);
    }
    let sample_identity_holds = sample.is_zero();

    let mut commutes = |name: &str, flavour: Flavour, f: &BitMatrix| {
        let (a, b) = (assemble(source, flavour), assemble(target, flavour));
        let defect = f.mul(a.differential()).add(&b.differential().mul(f));
        match failure(name, &defect, &a.labels, &b.labels) {
            Some(x) => {
                failures.push(x);
                false
            }
            None => true,
        }
    };
    let check_chain_map = commutes("check chain map", Flavour::Check, &check);
    let bar_chain_map = commutes("bar chain map", Flavour::Bar, &bar);
    let hat_chain_map = hat_map.as_ref().map(|h| commutes("hat chain map", Flavour::Hat, h));

    Ok((
        CobordismMaps { check, hat: hat_map, bar },
        ChainMapReport { sample_identity_holds, check_chain_map, hat_chain_map, bar_chain_map, failures },
    ))
}

#[cfg(test)]
mod tests {
    use super::super::{Block, Generator};
    use super::*;

    fn complex() -> BlockComplex {
        let g = |id: &str, gr| Generator { id: id.into(), gr };
        BlockComplex::zero(vec![g("x", 1), g("y", 0)], vec![g("a", 0)], vec![g("b", 0)])
            .with_block(Block::DOo, &[(1, 0)])
            .unwrap()
            .with_block(Block::BarSu, &[(0, 0)])
            .unwrap()
    }

    #[test]
    fn identity_data_gives_identity_maps() {
        let bc = complex();
        let (maps, report) =
            build_cobordism_blocks(&CobordismBlocks::identity(&bc), &bc, &bc, HatAssembly::SigmaIdentity).unwrap();
        assert_eq!(maps.check, BitMatrix::identity(3));
        assert_eq!(maps.bar, BitMatrix::identity(2));
        assert_eq!(maps.hat, Some(BitMatrix::identity(3)));
        assert!(report.ok() && report.sample_identity_holds);
    }

    #[test]
    fn zero_data() {
        let bc = complex();
        let (maps, report) =
            build_cobordism_blocks(&CobordismBlocks::zero(&bc, &bc), &bc, &bc, HatAssembly::Omitted).unwrap();
        assert!(maps.check.is_zero() && maps.hat.is_none());
        assert!(report.ok());
    }

    #[test]
    fn perturbed_block_is_reported() {
        let bc = complex();
        let mut m = CobordismBlocks::identity(&bc);
        m.m_oo.toggle(0, 0);
        let (_, report) = build_cobordism_blocks(&m, &bc, &bc, HatAssembly::Omitted).unwrap();
        assert!(!report.sample_identity_holds);
        assert!(!report.check_chain_map);
        assert_eq!(report.failures[0].name, "sample identity");
        assert_eq!(report.failures[0].witness, ("x".to_string(), "y".to_string()));
    }

    #[test]
    fn shape_errors() {
        let bc = complex();
        let mut m = CobordismBlocks::zero(&bc, &bc);
        m.m_os = BitMatrix::zeros(2, 2);
        assert!(build_cobordism_blocks(&m, &bc, &bc, HatAssembly::Omitted).is_err());
    }
}
