//! Constructors for the named webs and foams used throughout the crate.

use crate::webmodel::{
    BraidTag, FacetDoc, FamilyTag, FoamDocument, FoamSkeleton, SeamDoc, SpatialTags,
    TetraPointDoc, WebBuilder, WebGraph,
};

fn planar(family: Option<FamilyTag>) -> SpatialTags {
    SpatialTags { planar: true, family, linking_parity: None }
}

fn spatial(family: FamilyTag) -> SpatialTags {
    SpatialTags { planar: false, family: Some(family), linking_parity: None }
}

fn id(prefix: &str, k: usize) -> String {
    format!("{prefix}{k:02}")
}

fn built(b: WebBuilder) -> WebGraph {
    b.build().expect("library webs are valid")
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> WebGraph {
    built(
        WebBuilder::new()
            .vertices(["v1", "v2"])
            .edge("e1", "v1", "v2")
            .edge("e2", "v1", "v2")
            .edge("e3", "v1", "v2")
            .spatial(planar(Some(FamilyTag::Theta))),
    )
}

/// The complete graph on four vertices.
pub fn tetrahedron() -> WebGraph {
    let mut b = WebBuilder::new().vertices(["v1", "v2", "v3", "v4"]);
    for (a, c) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
        b = b.edge(format!("e{a}{c}"), &format!("v{a}"), &format!("v{c}"));
    }
    built(b.spatial(planar(Some(FamilyTag::Tetrahedron))))
}

/// `n` unlinked planar circles; `unlink(1)` carries the unknot tag.
pub fn unlink(n: usize) -> WebGraph {
    let mut b = WebBuilder::new();
    for k in 1..=n {
        b = b.circle(id("c", k));
    }
    let tag = if n == 1 { FamilyTag::Unknot } else { FamilyTag::Unlink(n) };
    built(b.spatial(planar(Some(tag))))
}

pub fn unknot() -> WebGraph {
    unlink(1)
}

/// A theta graph beside a split unknot `c1`.
pub fn theta_plus_unknot() -> WebGraph {
    built(
        WebBuilder::new()
            .vertices(["v1", "v2"])
            .edge("e1", "v1", "v2")
            .edge("e2", "v1", "v2")
            .edge("e3", "v1", "v2")
            .circle("c1")
            .spatial(planar(None)),
    )
}

fn ladder(n: usize, inner_step: usize, rung_target: impl Fn(usize) -> usize) -> WebBuilder {
    let mut b = WebBuilder::new();
    for k in 1..=n {
        b = b.vertex(id("o", k)).vertex(id("i", k));
    }
    let succ = |k: usize, step: usize| (k - 1 + step) % n + 1;
    for k in 1..=n {
        b = b.edge(id("a", k), &id("o", k), &id("o", succ(k, 1)));
    }
    for k in 1..=n {
        b = b.edge(id("b", k), &id("i", k), &id("i", succ(k, inner_step)));
    }
    for k in 1..=n {
        b = b.edge(id("r", k), &id("o", k), &id("i", rung_target(k)));
    }
    b
}

/// The rung edges `r01..rn` of a ladder-shaped web.
pub fn rung_ids(n: usize) -> Vec<String> {
    (1..=n).map(|k| id("r", k)).collect()
}

/// The planar prism `L_n`: outer and inner `n`-cycles joined by `n` rungs.
/// `L_1` is the handcuff graph.
pub fn prism(n: usize) -> WebGraph {
    assert!(n >= 1, "prism needs at least one rung");
    built(ladder(n, 1, |k| k).spatial(planar(Some(FamilyTag::Prism(n)))))
}

fn handcuff_shape(tags: SpatialTags) -> WebGraph {
    built(ladder(1, 1, |k| k).spatial(tags))
}

pub fn handcuff() -> WebGraph {
    handcuff_shape(planar(Some(FamilyTag::Handcuff)))
}

/// Two unknotted loops joined by an arc that passes through one of them.
pub fn twisted_handcuff() -> WebGraph {
    handcuff_shape(spatial(FamilyTag::TwistedHandcuff))
}

/// A Hopf link whose components are joined by an arc.
pub fn hopf_handcuff() -> WebGraph {
    handcuff_shape(spatial(FamilyTag::HopfHandcuff))
}

/// Final position of the strand starting at each position.
pub fn braid_permutation(word: &[i32], strands: usize) -> Vec<usize> {
    let mut at: Vec<usize> = (0..strands).collect();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        at.swap(i, i + 1);
    }
    let mut pos = vec![0; strands];
    for (p, &strand) in at.iter().enumerate() {
        pos[strand] = p;
    }
    pos
}

/// A positive braid word realising `perm` (strand `k` ends at `perm[k]`).
pub fn braid_word_for(perm: &[usize]) -> Vec<i32> {
    let n = perm.len();
    let mut target = vec![0; n];
    for (k, &p) in perm.iter().enumerate() {
        target[p] = k;
    }
    let mut at: Vec<usize> = (0..n).collect();
    let mut word = Vec::new();
    for (p, &t) in target.iter().enumerate() {
        let mut q = at.iter().position(|&s| s == t).expect("strand present");
        while q > p {
            at.swap(q - 1, q);
            word.push(q as i32);
            q -= 1;
        }
    }
    word
}

/// The closure web `K_γ`: two `n`-cycles, with strand `k` joining position `k`
/// of the first to position `π(k)` of the second.
pub fn braid_closure(word: &[i32], strands: usize) -> WebGraph {
    let perm = braid_permutation(word, strands);
    let tag = FamilyTag::BraidClosure(BraidTag {
        word: word.to_vec(),
        strands,
        rungs: Some(rung_ids(strands)),
    });
    built(ladder(strands, 1, |k| perm[k - 1] + 1).spatial(spatial(tag)))
}

/// Outer pentagon, inner pentagram, five rungs; embedded as a 5-strand braid closure.
pub fn petersen() -> WebGraph {
    let perm: Vec<usize> = (0..5).map(|i| 3 * i % 5).collect();
    let tag = FamilyTag::BraidClosure(BraidTag {
        word: braid_word_for(&perm),
        strands: 5,
        rungs: Some(rung_ids(5)),
    });
    built(ladder(5, 2, |k| k).spatial(spatial(tag)))
}

/// The abstract Petersen graph, with no spatial data.
pub fn petersen_abstract() -> WebGraph {
    petersen().with_spatial(None)
}

/// `S¹ × θ`: three facets around a single seam.
pub fn product_theta_foam() -> FoamSkeleton {
    let doc = FoamDocument {
        facets: ["f1", "f2", "f3"].iter().map(|f| FacetDoc { id: f.to_string() }).collect(),
        seams: vec![SeamDoc { id: "s1".into(), facets: vec!["f1".into(), "f2".into(), "f3".into()] }],
        tetra_points: Vec::new(),
    };
    FoamSkeleton::from_document(&doc).expect("valid foam")
}

/// The cone on the tetrahedral web: one seam per vertex, one facet per edge.
pub fn cone_foam() -> FoamSkeleton {
    let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let facet = |a: usize, b: usize| format!("f{a}{b}");
    let seams = (1..=4)
        .map(|v| SeamDoc {
            id: format!("s{v}"),
            facets: pairs
                .iter()
                .filter(|(a, b)| *a == v || *b == v)
                .map(|&(a, b)| facet(a, b))
                .collect(),
        })
        .collect();
    let doc = FoamDocument {
        facets: pairs.iter().map(|&(a, b)| FacetDoc { id: facet(a, b) }).collect(),
        seams,
        tetra_points: vec![TetraPointDoc {
            id: "t1".into(),
            seams: (1..=4).map(|v| format!("s{v}")).collect(),
            facets: pairs.iter().map(|&(a, b)| facet(a, b)).collect(),
        }],
    };
    FoamSkeleton::from_document(&doc).expect("valid foam")
}
