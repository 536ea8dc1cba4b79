//! Structural recognition of the named web families.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::library::braid_permutation;
use crate::onesets::{enumerate_onesets, r_cycles, OneSet, RCycle};
use crate::webmodel::{FamilyTag, WebGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Unknot,
    Unlink(usize),
    Theta,
    ThetaPlusUnknot,
    Tetrahedron,
    Prism(usize),
    Handcuff,
    TwistedHandcuff,
    HopfHandcuff,
    BraidClosure(usize),
    PetersenEmbedding,
    Unknown,
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Unknot => f.write_str("unknot"),
            FamilyId::Unlink(n) => write!(f, "unlink({n})"),
            FamilyId::Theta => f.write_str("theta"),
            FamilyId::ThetaPlusUnknot => f.write_str("theta_plus_unknot"),
            FamilyId::Tetrahedron => f.write_str("tetrahedron"),
            FamilyId::Prism(n) => write!(f, "prism({n})"),
            FamilyId::Handcuff => f.write_str("handcuff"),
            FamilyId::TwistedHandcuff => f.write_str("twisted_handcuff"),
            FamilyId::HopfHandcuff => f.write_str("hopf_handcuff"),
            FamilyId::BraidClosure(n) => write!(f, "braid_closure({n})"),
            FamilyId::PetersenEmbedding => f.write_str("petersen_embedding"),
            FamilyId::Unknown => f.write_str("unknown"),
        }
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("family tag {tag} contradicts the web: {reason}")]
pub struct RecognitionError {
    pub tag: String,
    pub reason: String,
}

/// Two r-cycles of length `n` joined by `n` c-edges, read off a 1-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    /// Rung edges in the order of their ends along the first cycle.
    pub rungs: Vec<usize>,
    /// Position on the second cycle of the rung leaving position `k` of the first.
    pub perm: Vec<usize>,
}

impl Ladder {
    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn oneset(&self, web: &WebGraph) -> OneSet {
        let mut mask = vec![false; web.edge_count()];
        for &e in &self.rungs {
            mask[e] = true;
        }
        OneSet::from_mask(web, mask).expect("ladder rungs form a 1-set")
    }

    /// `perm(k) = ±k + c` mod `n`: the rungs do not braid.
    pub fn is_dihedral(&self) -> bool {
        let n = self.n();
        n <= 2 || [1, n - 1].iter().any(|&a| affine(&self.perm, a))
    }

    /// `perm(k) = 2k + c` or `3k + c` mod 5: the Petersen graph.
    pub fn is_petersen(&self) -> bool {
        self.n() == 5 && [2, 3].iter().any(|&a| affine(&self.perm, a))
    }

    /// Whether some rotation or reflection of each cycle, possibly after
    /// exchanging the two cycles, turns `perm` into `target`.
    pub fn matches_permutation(&self, target: &[usize]) -> bool {
        let n = self.n();
        if target.len() != n {
            return false;
        }
        let mut inverse = vec![0; n];
        for (k, &p) in self.perm.iter().enumerate() {
            inverse[p] = k;
        }
        [&self.perm, &inverse].iter().any(|perm| dihedral_match(perm, target))
    }
}

fn dihedral_match(perm: &[usize], target: &[usize]) -> bool {
    let n = perm.len();
    {
        let dihedral = |k: usize, shift: usize, flip: bool| {
            if flip {
                (shift + n - k) % n
            } else {
                (shift + k) % n
            }
        };
        for s1 in 0..n {
            for f1 in [false, true] {
                for s2 in 0..n {
                    for f2 in [false, true] {
                        if (0..n).all(|k| dihedral(perm[dihedral(k, s1, f1)], s2, f2) == target[k]) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
}

fn affine(perm: &[usize], a: usize) -> bool {
    let n = perm.len();
    (0..n).all(|k| perm[k] == (a * k + perm[0]) % n)
}

/// Every way of reading the web as a ladder.
pub fn ladders(web: &WebGraph) -> Vec<Ladder> {
    let v = web.vertex_count();
    if v == 0 || v % 2 == 1 || web.circle_edges().next().is_some() {
        return Vec::new();
    }
    let n = v / 2;
    enumerate_onesets(web).iter().filter_map(|s| ladder_of(web, s, n)).collect()
}

pub(crate) fn ladder_of(web: &WebGraph, s: &OneSet, n: usize) -> Option<Ladder> {
    let d = r_cycles(web, s);
    let [RCycle::Path(a), RCycle::Path(b)] = d.cycles.as_slice() else { return None };
    if a.len() != n || b.len() != n {
        return None;
    }
    let mut pos_b = vec![usize::MAX; web.vertex_count()];
    for (k, step) in b.iter().enumerate() {
        pos_b[step.vertex] = k;
    }
    let mut rungs = Vec::with_capacity(n);
    let mut perm = Vec::with_capacity(n);
    for step in a {
        let c = web.slots(step.vertex).into_iter().find(|h| s.is_c(h.edge))?;
        let far = web.edge(c.edge).ends()?[1 - c.end as usize].vertex;
        let k = pos_b[far];
        if k == usize::MAX {
            return None;
        }
        rungs.push(c.edge);
        perm.push(k);
    }
    Some(Ladder { rungs, perm })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Structure {
    Circles(usize),
    Theta,
    ThetaPlusCircle,
    Tetrahedron,
    HandcuffShape,
    Other,
}

fn joins(web: &WebGraph, e: usize, a: usize, b: usize) -> bool {
    match web.edge(e).ends() {
        Some([x, y]) => (x.vertex, y.vertex) == (a, b) || (x.vertex, y.vertex) == (b, a),
        None => false,
    }
}

fn structure(web: &WebGraph) -> Structure {
    let circles = web.circle_edges().count();
    let segments: Vec<usize> = web.segment_edges().collect();
    match (web.vertex_count(), circles) {
        (0, n) => Structure::Circles(n),
        (2, c) if c <= 1 && segments.iter().all(|&e| joins(web, e, 0, 1)) => {
            if c == 0 {
                Structure::Theta
            } else {
                Structure::ThetaPlusCircle
            }
        }
        (2, 0) => {
            let loops = segments.iter().filter(|&&e| web.edge(e).is_loop()).count();
            let bridge = segments.iter().filter(|&&e| joins(web, e, 0, 1)).count();
            if loops == 2 && bridge == 1 {
                Structure::HandcuffShape
            } else {
                Structure::Other
            }
        }
        (4, 0) => {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let simple = pairs.iter().all(|&(a, b)| segments.iter().filter(|&&e| joins(web, e, a, b)).count() == 1);
            if simple {
                Structure::Tetrahedron
            } else {
                Structure::Other
            }
        }
        _ => Structure::Other,
    }
}

/// Recognition result with the rung 1-set of ladder-shaped families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    pub family: FamilyId,
    pub ladder: Option<Ladder>,
}

fn tag_name(tag: &FamilyTag) -> String {
    match tag {
        FamilyTag::Unknot => "unknot".into(),
        FamilyTag::Unlink(n) => format!("unlink({n})"),
        FamilyTag::Theta => "theta".into(),
        FamilyTag::Tetrahedron => "tetrahedron".into(),
        FamilyTag::Prism(n) => format!("prism({n})"),
        FamilyTag::Handcuff => "handcuff".into(),
        FamilyTag::TwistedHandcuff => "twisted_handcuff".into(),
        FamilyTag::HopfHandcuff => "hopf_handcuff".into(),
        FamilyTag::BraidClosure(b) => format!("braid_closure({})", b.strands),
    }
}

pub fn recognize(web: &WebGraph) -> Result<FamilyId, RecognitionError> {
    recognize_full(web).map(|r| r.family)
}

pub fn recognize_full(web: &WebGraph) -> Result<Recognition, RecognitionError> {
    let shape = structure(web);
    let plain = web.spatial().is_none_or(|t| t.planar);
    let found = |family| Ok(Recognition { family, ladder: None });
    let Some(tag) = web.family_tag() else {
        if !plain {
            return found(FamilyId::Unknown);
        }
        return match shape {
            Structure::Circles(0) | Structure::Other => {
                let ladder = ladders(web).into_iter().find(Ladder::is_dihedral);
                Ok(match ladder {
                    Some(l) => Recognition { family: FamilyId::Prism(l.n()), ladder: Some(l) },
                    None => Recognition { family: FamilyId::Unknown, ladder: None },
                })
            }
            Structure::Circles(1) => found(FamilyId::Unknot),
            Structure::Circles(n) => found(FamilyId::Unlink(n)),
            Structure::Theta => found(FamilyId::Theta),
            Structure::ThetaPlusCircle => found(FamilyId::ThetaPlusUnknot),
            Structure::Tetrahedron => found(FamilyId::Tetrahedron),
            Structure::HandcuffShape => handcuff(web, FamilyId::Handcuff),
        };
    };
    let fail = |reason: &str| Err(RecognitionError { tag: tag_name(tag), reason: reason.into() });
    let planar = web.is_planar();
    match tag {
        FamilyTag::Unknot => match shape {
            Structure::Circles(1) => found(FamilyId::Unknot),
            _ => fail("expected a single circle edge and no vertices"),
        },
        FamilyTag::Unlink(m) => match shape {
            Structure::Circles(n) if n == *m && n == 1 => found(FamilyId::Unknot),
            Structure::Circles(n) if n == *m => found(FamilyId::Unlink(n)),
            _ => fail(&format!("expected {m} circle edges and no vertices")),
        },
        FamilyTag::Theta => match shape {
            Structure::Theta => found(FamilyId::Theta),
            _ => fail("expected two vertices joined by three edges"),
        },
        FamilyTag::Tetrahedron => match shape {
            Structure::Tetrahedron => found(FamilyId::Tetrahedron),
            _ => fail("expected the complete graph on four vertices"),
        },
        FamilyTag::Prism(m) => {
            if !planar {
                return fail("prism webs are planar");
            }
            if *m == 1 {
                return match shape {
                    Structure::HandcuffShape => handcuff(web, FamilyId::Prism(1)),
                    _ => fail("expected two loops joined by an edge"),
                };
            }
            match ladders(web).into_iter().find(|l| l.n() == *m && l.is_dihedral()) {
                Some(l) => Ok(Recognition { family: FamilyId::Prism(*m), ladder: Some(l) }),
                None => fail(&format!("expected two {m}-cycles joined by {m} aligned rungs")),
            }
        }
        FamilyTag::Handcuff | FamilyTag::TwistedHandcuff | FamilyTag::HopfHandcuff => {
            if shape != Structure::HandcuffShape {
                return fail("expected two loops joined by an edge");
            }
            let (family, want_planar) = match tag {
                FamilyTag::Handcuff => (FamilyId::Handcuff, true),
                FamilyTag::TwistedHandcuff => (FamilyId::TwistedHandcuff, false),
                _ => (FamilyId::HopfHandcuff, false),
            };
            if planar != want_planar {
                return fail(if want_planar { "handcuff is planar" } else { "a spatial handcuff cannot be planar" });
            }
            handcuff(web, family)
        }
        FamilyTag::BraidClosure(bt) => {
            if bt.word.iter().any(|&g| g == 0 || g.unsigned_abs() as usize >= bt.strands) {
                return fail("braid word uses a generator outside the strand count");
            }
            let target = braid_permutation(&bt.word, bt.strands);
            let rung_set = match &bt.rungs {
                Some(ids) => {
                    let mut idx = Vec::new();
                    for id in ids {
                        match web.edge_index(id) {
                            Some(e) => idx.push(e),
                            None => return fail(&format!("rung {id} is not an edge")),
                        }
                    }
                    idx.sort_unstable();
                    Some(idx)
                }
                None => None,
            };
            let candidates = ladders(web).into_iter().filter(|l| {
                l.n() == bt.strands
                    && rung_set.as_ref().is_none_or(|r| {
                        let mut mine = l.rungs.clone();
                        mine.sort_unstable();
                        &mine == r
                    })
            });
            let mut matching = candidates.filter(|l| l.matches_permutation(&target));
            match matching.next() {
                Some(l) => {
                    let family = if l.is_petersen() { FamilyId::PetersenEmbedding } else { FamilyId::BraidClosure(l.n()) };
                    Ok(Recognition { family, ladder: Some(l) })
                }
                None => fail("no pair of cycles joined by the strands realises the braid permutation"),
            }
        }
    }
}

fn handcuff(web: &WebGraph, family: FamilyId) -> Result<Recognition, RecognitionError> {
    let ladder = ladders(web).into_iter().next();
    Ok(Recognition { family, ladder })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::webmodel::{SpatialTags, WebBuilder};

    #[test]
    fn named_families() {
        assert_eq!(recognize(&library::theta()), Ok(FamilyId::Theta));
        assert_eq!(recognize(&library::tetrahedron()), Ok(FamilyId::Tetrahedron));
        assert_eq!(recognize(&library::unknot()), Ok(FamilyId::Unknot));
        assert_eq!(recognize(&library::unlink(4)), Ok(FamilyId::Unlink(4)));
        assert_eq!(recognize(&library::theta_plus_unknot()), Ok(FamilyId::ThetaPlusUnknot));
        for n in 2..=7 {
            assert_eq!(recognize(&library::prism(n)), Ok(FamilyId::Prism(n)));
        }
        assert_eq!(recognize(&library::prism(1)), Ok(FamilyId::Prism(1)));
        assert_eq!(recognize(&library::handcuff()), Ok(FamilyId::Handcuff));
        assert_eq!(recognize(&library::twisted_handcuff()), Ok(FamilyId::TwistedHandcuff));
        assert_eq!(recognize(&library::hopf_handcuff()), Ok(FamilyId::HopfHandcuff));
        assert_eq!(recognize(&library::petersen()), Ok(FamilyId::PetersenEmbedding));
        assert_eq!(recognize(&library::braid_closure(&[1, 2, 3, 4, -2], 5)), Ok(FamilyId::BraidClosure(5)));
    }

    #[test]
    fn untagged_structures() {
        let planar = |w: WebGraph| {
            w.with_spatial(Some(SpatialTags { planar: true, family: None, linking_parity: None }))
        };
        assert_eq!(recognize(&planar(library::prism(5))), Ok(FamilyId::Prism(5)));
        assert_eq!(recognize(&library::theta().with_spatial(None)), Ok(FamilyId::Theta));
        assert_eq!(recognize(&library::petersen_abstract()), Ok(FamilyId::Unknown));
        let twisted_untagged = library::twisted_handcuff()
            .with_spatial(Some(SpatialTags { planar: false, family: None, linking_parity: None }));
        assert_eq!(recognize(&twisted_untagged), Ok(FamilyId::Unknown));
    }

    #[test]
    fn contradictions() {
        let t = library::theta();
        let wrong = t.clone().with_spatial(Some(SpatialTags {
            planar: true,
            family: Some(FamilyTag::Prism(5)),
            linking_parity: None,
        }));
        assert!(recognize(&wrong).is_err());
        let planar_twisted = library::handcuff().with_spatial(Some(SpatialTags {
            planar: true,
            family: Some(FamilyTag::TwistedHandcuff),
            linking_parity: None,
        }));
        assert!(recognize(&planar_twisted).is_err());
        let prism_as_petersen = library::prism(5).with_spatial(library::petersen().spatial().cloned());
        assert!(recognize(&prism_as_petersen).is_err());
        let b = WebBuilder::new().circle("c1").circle("c2").build().unwrap();
        let mislabelled = b.with_spatial(Some(SpatialTags {
            planar: true,
            family: Some(FamilyTag::Unlink(3)),
            linking_parity: None,
        }));
        assert!(recognize(&mislabelled).is_err());
    }

    #[test]
    fn ladder_alignment() {
        let l = ladders(&library::prism(5));
        assert!(l.iter().any(Ladder::is_dihedral));
        let p = ladders(&library::petersen());
        assert_eq!(p.len(), 6);
        assert!(p.iter().all(Ladder::is_petersen));
    }
}
