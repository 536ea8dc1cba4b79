//! Validated block complexes: the unknot pattern, hand seeds, rejection
//! sampled seeds, direct sums and basis changes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{validate_identities, Block, BlockComplex, FlavourComplex, GenKind, Generator};
use crate::gf2::BitMatrix;

const KINDS: [GenKind; 3] = [GenKind::O, GenKind::S, GenKind::U];

fn gens(ids: &[(&str, i64)]) -> Vec<Generator> {
    ids.iter().map(|&(id, gr)| Generator { id: id.into(), gr }).collect()
}

/// `C^o = ∅`, `a_i ∈ C^s` at `gr i` for `0 ≤ i ≤ hi`, `a_i ∈ C^u` at `gr i + 1`
/// for `lo ≤ i < 0`, every block zero.
pub fn unknot_pattern(lo: i64, hi: i64) -> BlockComplex {
    let s = (0.max(lo)..=hi).map(|i| Generator { id: format!("a{i}"), gr: i }).collect();
    let u = (lo..0.min(hi + 1)).map(|i| Generator { id: format!("a{i}"), gr: i + 1 }).collect();
    BlockComplex::zero(vec![], s, u)
}

/// `υ: a_i ↦ a_{i−1}` on a flavour of the unknot pattern, zero when
/// `a_{i−1}` is not in that flavour.
pub fn unknot_upsilon(fc: &FlavourComplex) -> BitMatrix {
    let index = |label: &str| -> i64 {
        let id = label.split_once(':').map(|(_, id)| id).unwrap_or(label);
        id.trim_start_matches('a').parse().expect("unknot pattern label")
    };
    let n = fc.labels.len();
    let idx: Vec<i64> = fc.labels.iter().map(|l| index(l)).collect();
    let entries: Vec<(usize, usize)> = (0..n)
        .filter_map(|c| (0..n).find(|&r| idx[r] == idx[c] - 1).map(|r| (r, c)))
        .collect();
    BitMatrix::from_entries(n, n, &entries)
}

/// Small complexes that satisfy the identities with nonzero blocks.
pub fn hand_seeds() -> Vec<BlockComplex> {
    let seed = |o: &[(&str, i64)], s: &[(&str, i64)], u: &[(&str, i64)], blocks: &[(Block, &[(usize, usize)])]| {
        let mut bc = BlockComplex::zero(gens(o), gens(s), gens(u));
        for &(b, e) in blocks {
            bc = bc.with_block(b, e).expect("seed entries in range");
        }
        bc
    };
    vec![
        seed(&[("x", 1), ("y", 0)], &[], &[], &[(Block::DOo, &[(1, 0)])]),
        seed(&[], &[("a", 1), ("b", 0)], &[], &[(Block::BarSs, &[(1, 0)])]),
        seed(&[], &[("a", 0)], &[("b", 0)], &[(Block::BarSu, &[(0, 0)])]),
        seed(&[("x", 1)], &[("a", 0)], &[], &[(Block::DOs, &[(0, 0)])]),
        seed(&[], &[], &[("b", 1), ("c", 0)], &[(Block::BarUu, &[(1, 0)])]),
        seed(&[("x", 0)], &[], &[("b", 1)], &[(Block::DUo, &[(0, 0)])]),
        seed(&[("x", 0)], &[("a", 1)], &[("b", 1)], &[(Block::BarSu, &[(0, 0)]), (Block::DUo, &[(0, 0)])]),
        seed(
            &[("x", 1)],
            &[("a", 0)],
            &[("b", 2)],
            &[(Block::DUo, &[(0, 0)]), (Block::DOs, &[(0, 0)]), (Block::BarUs, &[(0, 0)])],
        ),
        seed(&[("x", 3)], &[("a", 2)], &[("b", 3)], &[(Block::DUs, &[(0, 0)])]),
        seed(&[], &[("a", 0)], &[], &[]),
        seed(&[], &[], &[("b", 0)], &[]),
    ]
}

/// Random small complexes kept only when every identity and degree holds.
pub fn rejection_seed(rng: &mut ChaCha8Rng) -> BlockComplex {
    loop {
        let mut sizes = [0usize; 3];
        for s in &mut sizes {
            *s = rng.gen_range(0..=3);
        }
        let mk = |rng: &mut ChaCha8Rng, p: &str, n: usize| -> Vec<Generator> {
            (0..n).map(|k| Generator { id: format!("{p}{k}"), gr: rng.gen_range(-2..=2) }).collect()
        };
        let o = mk(rng, "x", sizes[0]);
        let s = mk(rng, "a", sizes[1]);
        let u = mk(rng, "b", sizes[2]);
        let mut bc = BlockComplex::zero(o, s, u);
        for b in Block::ALL {
            let (src, tgt) = (bc.generators(b.source()).to_vec(), bc.generators(b.target()).to_vec());
            let mut entries = Vec::new();
            for (c, g) in src.iter().enumerate() {
                for (r, h) in tgt.iter().enumerate() {
                    if h.gr - g.gr == b.degree() && rng.gen_bool(0.35) {
                        entries.push((r, c));
                    }
                }
            }
            bc = bc.with_block(b, &entries).expect("entries in range");
        }
        if validate_identities(&bc).map(|r| r.ok()).unwrap_or(false) {
            return bc;
        }
    }
}

/// Block-diagonal direct sum.
pub fn direct_sum(a: &BlockComplex, b: &BlockComplex) -> BlockComplex {
    let cat = |k: GenKind| {
        let mut v = a.generators(k).to_vec();
        v.extend_from_slice(b.generators(k));
        v
    };
    let mut out = BlockComplex::zero(cat(GenKind::O), cat(GenKind::S), cat(GenKind::U));
    for blk in Block::ALL {
        out.set_block(blk, a.block(blk).direct_sum(b.block(blk))).expect("block shapes add");
    }
    out
}

/// Renames generators `o0…`, `s0…`, `u0…` in order.
pub fn relabel(bc: &BlockComplex) -> BlockComplex {
    let mut out = bc.clone();
    for (v, p) in [(&mut out.o, "o"), (&mut out.s, "s"), (&mut out.u, "u")] {
        for (k, g) in v.iter_mut().enumerate() {
            g.id = format!("{p}{k}");
        }
    }
    out
}

/// Conjugates every block by the invertible change of basis `p_kind` on each summand:
/// a block `B: C^x → C^y` becomes `p_y · B · p_x⁻¹`.
fn change_basis(bc: &BlockComplex, p: &[BitMatrix; 3], p_inv: &[BitMatrix; 3]) -> BlockComplex {
    let mut out = bc.clone();
    for blk in Block::ALL {
        let m = p[blk.target() as usize].mul(bc.block(blk)).mul(&p_inv[blk.source() as usize]);
        out.set_block(blk, m).expect("conjugation keeps shapes");
    }
    out
}

/// Adds generator `from` to generator `to` inside summand `kind`; both share a grading.
pub fn transvection(bc: &BlockComplex, kind: GenKind, from: usize, to: usize) -> BlockComplex {
    let gens = bc.generators(kind);
    assert!(from != to && gens[from].gr == gens[to].gr, "transvection needs two generators of equal grading");
    let ids: [BitMatrix; 3] = KINDS.map(|k| BitMatrix::identity(bc.generators(k).len()));
    let mut p = ids.clone();
    p[kind as usize].toggle(to, from);
    // over F₂ a transvection is its own inverse
    change_basis(bc, &p, &p)
}

/// Reorders the generators of each summand; `orders[k][i]` is the old index of new generator `i`.
pub fn permute(bc: &BlockComplex, orders: &[Vec<usize>; 3]) -> BlockComplex {
    let mut out = bc.clone();
    out.o = orders[0].iter().map(|&i| bc.o[i].clone()).collect();
    out.s = orders[1].iter().map(|&i| bc.s[i].clone()).collect();
    out.u = orders[2].iter().map(|&i| bc.u[i].clone()).collect();
    for blk in Block::ALL {
        let m = bc.block(blk).select(&orders[blk.target() as usize], &orders[blk.source() as usize]);
        out.set_block(blk, m).expect("permutation keeps shapes");
    }
    out
}

/// `count` validated complexes with at most `max_gens` generators, reproducible from `seed`.
pub fn validated_complexes(seed: u64, count: usize, max_gens: usize) -> Vec<BlockComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hand = hand_seeds();
    (0..count)
        .map(|_| {
            let target = rng.gen_range(1..=max_gens.max(1));
            let mut bc = BlockComplex::zero(vec![], vec![], vec![]);
            let mut misses = 0;
            while bc.len() < target && misses < 8 {
                let piece = if rng.gen_bool(0.5) { hand.choose(&mut rng).unwrap().clone() } else { rejection_seed(&mut rng) };
                if bc.len() + piece.len() <= max_gens {
                    bc = direct_sum(&bc, &piece);
                } else {
                    misses += 1;
                }
            }
            for _ in 0..3 * bc.len() {
                let kind = *KINDS.choose(&mut rng).unwrap();
                let gens = bc.generators(kind);
                if gens.len() < 2 {
                    continue;
                }
                let from = rng.gen_range(0..gens.len());
                let to = rng.gen_range(0..gens.len());
                if from != to && gens[from].gr == gens[to].gr {
                    bc = transvection(&bc, kind, from, to);
                }
            }
            let orders = KINDS.map(|k| {
                let mut v: Vec<usize> = (0..bc.generators(k).len()).collect();
                v.shuffle(&mut rng);
                v
            });
            let bc = relabel(&permute(&bc, &orders));
            debug_assert!(validate_identities(&bc).unwrap().ok());
            bc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::{build_flavour, Flavour};
    use super::*;

    #[test]
    fn seeds_validate() {
        for bc in hand_seeds() {
            assert!(validate_identities(&bc).unwrap().ok(), "{:?}", bc.to_document());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            assert!(validate_identities(&rejection_seed(&mut rng)).unwrap().ok());
        }
    }

    #[test]
    fn closure_operations_validate() {
        for bc in validated_complexes(11, 30, 40) {
            assert!(bc.len() <= 40);
            assert!(validate_identities(&bc).unwrap().ok());
        }
    }

    #[test]
    fn reproducible() {
        let a: Vec<_> = validated_complexes(5, 5, 20).iter().map(|b| b.to_document()).collect();
        let b: Vec<_> = validated_complexes(5, 5, 20).iter().map(|b| b.to_document()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn unknot_pattern_shape() {
        let bc = unknot_pattern(-3, 2);
        assert_eq!(bc.s.iter().map(|g| g.gr).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(bc.u.iter().map(|g| g.gr).collect::<Vec<_>>(), vec![-2, -1, 0]);
        let check = build_flavour(&bc, Flavour::Check).unwrap();
        let v = unknot_upsilon(&check);
        assert_eq!(v.entries(), vec![(0, 1), (1, 2)]);
    }
}
