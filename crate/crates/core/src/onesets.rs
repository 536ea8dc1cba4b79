//! 1-sets: r/c colourings with exactly one c half-edge at every vertex.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::webmodel::{FoamSkeleton, WebGraph};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum OneSetError {
    #[error("unknown edge id {0}")]
    UnknownEdge(String),
    #[error("not a 1-set")]
    NotAOneSet,
    #[error("non-planar web has no linking data for circle {0}")]
    MissingLinking(String),
    #[error("linking data for circle {circle} names edge {edge}, which is not an edge")]
    UnknownLinkingEdge { circle: String, edge: String },
    #[error("linking data for circle {0} disagrees within one r-cycle")]
    InconsistentLinking(String),
}

/// A 1-set, stored as a c-mask over the edges of its web.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneSet {
    c: Vec<bool>,
}

impl OneSet {
    /// Checks the 1-set constraint for a c-mask indexed by edge.
    pub fn from_mask(web: &WebGraph, c: Vec<bool>) -> Result<Self, OneSetError> {
        if c.len() == web.edge_count() && satisfies(web, &c) {
            Ok(OneSet { c })
        } else {
            Err(OneSetError::NotAOneSet)
        }
    }

    pub fn from_ids(web: &WebGraph, ids: &[&str]) -> Result<Self, OneSetError> {
        Self::from_mask(web, mask_from_ids(web, ids)?)
    }

    pub fn is_c(&self, e: usize) -> bool {
        self.c[e]
    }

    pub fn mask(&self) -> &[bool] {
        &self.c
    }

    pub fn c_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.c.len()).filter(|&e| self.c[e])
    }

    pub fn c_edge_ids(&self, web: &WebGraph) -> Vec<String> {
        self.c_edges().map(|e| web.edge_id(e).to_string()).collect()
    }
}

impl Ord for OneSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.c_edges().cmp(other.c_edges())
    }
}

impl PartialOrd for OneSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn mask_from_ids(web: &WebGraph, ids: &[&str]) -> Result<Vec<bool>, OneSetError> {
    let mut mask = vec![false; web.edge_count()];
    for id in ids {
        let e = web.edge_index(id).ok_or_else(|| OneSetError::UnknownEdge(id.to_string()))?;
        mask[e] = true;
    }
    Ok(mask)
}

fn satisfies(web: &WebGraph, c: &[bool]) -> bool {
    (0..web.vertex_count()).all(|v| {
        let slots = web.slots(v);
        let c_slots = slots.iter().filter(|h| c[h.edge]).count();
        let c_loop = slots.iter().any(|h| c[h.edge] && web.edge(h.edge).is_loop());
        c_slots == 1 && !c_loop
    })
}

/// Whether the named edges form a 1-set.
pub fn is_oneset(web: &WebGraph, c_edges: &[&str]) -> Result<bool, OneSetError> {
    Ok(satisfies(web, &mask_from_ids(web, c_edges)?))
}

/// All labelled 1-sets in canonical order.
pub fn enumerate_onesets(web: &WebGraph) -> Vec<OneSet> {
    let segments: Vec<usize> = web.segment_edges().collect();
    let circles: Vec<usize> = web.circle_edges().collect();
    let mut c_count = vec![0u8; web.vertex_count()];
    let mut r_count = vec![0u8; web.vertex_count()];
    let mut mask = vec![false; web.edge_count()];
    let mut partial = Vec::new();
    search(web, &segments, 0, &mut c_count, &mut r_count, &mut mask, &mut partial);

    let mut out = Vec::with_capacity(partial.len() << circles.len());
    for base in partial {
        for bits in 0u64..(1u64 << circles.len()) {
            let mut c = base.clone();
            for (k, &e) in circles.iter().enumerate() {
                c[e] = bits >> k & 1 == 1;
            }
            out.push(OneSet { c });
        }
    }
    out.sort();
    out
}

fn search(
    web: &WebGraph,
    segments: &[usize],
    k: usize,
    c_count: &mut [u8],
    r_count: &mut [u8],
    mask: &mut [bool],
    out: &mut Vec<Vec<bool>>,
) {
    let Some(&e) = segments.get(k) else {
        out.push(mask.to_vec());
        return;
    };
    let [a, b] = web.edge(e).ends().expect("segment edge");
    let (a, b) = (a.vertex, b.vertex);
    if a != b && c_count[a] == 0 && c_count[b] == 0 {
        c_count[a] += 1;
        c_count[b] += 1;
        mask[e] = true;
        search(web, segments, k + 1, c_count, r_count, mask, out);
        mask[e] = false;
        c_count[a] -= 1;
        c_count[b] -= 1;
    }
    r_count[a] += 1;
    r_count[b] += 1;
    if r_count[a] <= 2 && r_count[b] <= 2 {
        search(web, segments, k + 1, c_count, r_count, mask, out);
    }
    r_count[a] -= 1;
    r_count[b] -= 1;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CycleStep {
    pub vertex: usize,
    pub edge: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RCycle {
    /// A lone r-coloured circle edge.
    Circle(usize),
    /// Leave each vertex along the listed r-edge; the last edge returns to the first vertex.
    Path(Vec<CycleStep>),
}

impl RCycle {
    pub fn edges(&self) -> Vec<usize> {
        match self {
            RCycle::Circle(e) => vec![*e],
            RCycle::Path(steps) => steps.iter().map(|s| s.edge).collect(),
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        match self {
            RCycle::Circle(_) => Vec::new(),
            RCycle::Path(steps) => steps.iter().map(|s| s.vertex).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RCycleDecomposition {
    pub cycles: Vec<RCycle>,
    pub c_endpoint_count: Vec<usize>,
    cycle_of_edge: Vec<Option<usize>>,
}

impl RCycleDecomposition {
    pub fn n(&self) -> usize {
        self.cycles.len()
    }

    /// Index of the r-cycle through an r-edge; `None` for c-edges.
    pub fn cycle_of_edge(&self, e: usize) -> Option<usize> {
        self.cycle_of_edge[e]
    }
}

/// Traces the r-locus into cycles, ordered by their smallest edge index.
pub fn r_cycles(web: &WebGraph, s: &OneSet) -> RCycleDecomposition {
    let mut cycle_of_edge = vec![None; web.edge_count()];
    let mut cycles = Vec::new();
    let mut counts = Vec::new();
    for e in 0..web.edge_count() {
        if s.is_c(e) || cycle_of_edge[e].is_some() {
            continue;
        }
        let idx = cycles.len();
        let Some(ends) = web.edge(e).ends() else {
            cycle_of_edge[e] = Some(idx);
            cycles.push(RCycle::Circle(e));
            counts.push(0);
            continue;
        };
        let mut steps = Vec::new();
        let (mut edge, mut end) = (e, 0u8);
        let mut vertex = ends[0].vertex;
        let mut c_ends = 0;
        loop {
            steps.push(CycleStep { vertex, edge });
            cycle_of_edge[edge] = Some(idx);
            c_ends += web.slots(vertex).iter().filter(|h| s.is_c(h.edge)).count();
            let far = web.edge(edge).ends().expect("r segment")[1 - end as usize];
            let arrive = (edge, 1 - end);
            let next = web
                .slots(far.vertex)
                .into_iter()
                .find(|h| !s.is_c(h.edge) && (h.edge, h.end) != arrive)
                .expect("two r half-edges at every vertex");
            vertex = far.vertex;
            edge = next.edge;
            end = next.end;
            if edge == e && end == 0 {
                break;
            }
        }
        cycles.push(RCycle::Path(steps));
        counts.push(c_ends);
    }
    RCycleDecomposition { cycles, c_endpoint_count: counts, cycle_of_edge }
}

/// Every r-cycle meets an even number of c-edge ends.
pub fn is_even(web: &WebGraph, s: &OneSet) -> bool {
    r_cycles(web, s).c_endpoint_count.iter().all(|c| c % 2 == 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CComponent {
    Arc { edge: usize, endpoints: (usize, usize) },
    Circle { edge: usize },
}

impl CComponent {
    pub fn edge(&self) -> usize {
        match self {
            CComponent::Arc { edge, .. } | CComponent::Circle { edge } => *edge,
        }
    }
}

pub fn c_components(web: &WebGraph, s: &OneSet) -> Vec<CComponent> {
    s.c_edges()
        .map(|e| match web.edge(e).ends() {
            Some([a, b]) => CComponent::Arc { edge: e, endpoints: (a.vertex, b.vertex) },
            None => CComponent::Circle { edge: e },
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftKind {
    InvariantCircle,
    SwappedPair,
    SingleWrappingCircle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftedComponent {
    pub edge: String,
    pub lift_kind: LiftKind,
}

/// Counting data for the real double cover branched along the r-locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverShadow {
    /// `n(s) − 1` for planar webs; unknown otherwise.
    pub b1: Option<usize>,
    pub lifted_c: Vec<LiftedComponent>,
    /// One free isotropy bit per lifted orbit.
    pub naive_spinc_count: u64,
    pub even: bool,
}

pub fn cover_shadow(web: &WebGraph, s: &OneSet) -> Result<CoverShadow, OneSetError> {
    let cycles = r_cycles(web, s);
    let planar = web.is_planar();
    let linking = web.spatial().and_then(|t| t.linking_parity.as_ref());
    let mut lifted_c = Vec::new();
    for comp in c_components(web, s) {
        let id = web.edge_id(comp.edge()).to_string();
        let lift_kind = match comp {
            CComponent::Arc { .. } => LiftKind::InvariantCircle,
            CComponent::Circle { .. } if planar => LiftKind::SwappedPair,
            CComponent::Circle { .. } => {
                let table = linking
                    .and_then(|l| l.get(&id))
                    .ok_or_else(|| OneSetError::MissingLinking(id.clone()))?;
                if linking_parity(web, &cycles, &id, table)? {
                    LiftKind::SingleWrappingCircle
                } else {
                    LiftKind::SwappedPair
                }
            }
        };
        lifted_c.push(LiftedComponent { edge: id, lift_kind });
    }
    Ok(CoverShadow {
        b1: planar.then(|| cycles.n().saturating_sub(1)),
        naive_spinc_count: 1u64 << lifted_c.len(),
        lifted_c,
        even: cycles.c_endpoint_count.iter().all(|c| c % 2 == 0),
    })
}

fn linking_parity(
    web: &WebGraph,
    cycles: &RCycleDecomposition,
    circle: &str,
    table: &BTreeMap<String, u8>,
) -> Result<bool, OneSetError> {
    let mut per_cycle: BTreeMap<usize, u8> = BTreeMap::new();
    for (edge, &parity) in table {
        let e = web.edge_index(edge).ok_or_else(|| OneSetError::UnknownLinkingEdge {
            circle: circle.to_string(),
            edge: edge.clone(),
        })?;
        let Some(c) = cycles.cycle_of_edge(e) else { continue };
        if *per_cycle.entry(c).or_insert(parity % 2) != parity % 2 {
            return Err(OneSetError::InconsistentLinking(circle.to_string()));
        }
    }
    Ok(per_cycle.values().sum::<u8>() % 2 == 1)
}

/// A facet colouring with exactly one c facet slot at every seam.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FoamOneSet {
    pub c_facets: Vec<usize>,
}

impl FoamOneSet {
    pub fn ids(&self, foam: &FoamSkeleton) -> Vec<String> {
        self.c_facets.iter().map(|&f| foam.facets[f].clone()).collect()
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("tetrahedral point {point}: c facets {c_facets:?} violate the two-disjoint-facets rule")]
pub struct TetraViolation {
    pub point: String,
    pub c_facets: Vec<String>,
}

pub fn enumerate_foam_onesets(foam: &FoamSkeleton) -> Result<Vec<FoamOneSet>, TetraViolation> {
    let n = foam.facets.len();
    let mut seams_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, seam) in foam.seams.iter().enumerate() {
        for &f in &seam.facets {
            seams_of[f].push(k);
        }
    }
    let mut c_slots = vec![0u8; foam.seams.len()];
    let mut r_slots = vec![0u8; foam.seams.len()];
    let mut mask = vec![false; n];
    let mut out = Vec::new();
    foam_search(&seams_of, 0, &mut c_slots, &mut r_slots, &mut mask, &mut out);
    let mut sets: Vec<FoamOneSet> = out
        .into_iter()
        .map(|m| FoamOneSet { c_facets: (0..n).filter(|&f| m[f]).collect() })
        .collect();
    sets.sort();
    for s in &sets {
        check_tetra_points(foam, s)?;
    }
    Ok(sets)
}

fn foam_search(
    seams_of: &[Vec<usize>],
    f: usize,
    c_slots: &mut [u8],
    r_slots: &mut [u8],
    mask: &mut [bool],
    out: &mut Vec<Vec<bool>>,
) {
    if f == seams_of.len() {
        if c_slots.iter().all(|&c| c == 1) {
            out.push(mask.to_vec());
        }
        return;
    }
    for c in [true, false] {
        let slots = if c { &mut *c_slots } else { &mut *r_slots };
        let cap = if c { 1 } else { 2 };
        for &s in &seams_of[f] {
            slots[s] += 1;
        }
        if seams_of[f].iter().all(|&s| slots[s] <= cap) {
            mask[f] = c;
            foam_search(seams_of, f + 1, c_slots, r_slots, mask, out);
            mask[f] = false;
        }
        let slots = if c { &mut *c_slots } else { &mut *r_slots };
        for &s in &seams_of[f] {
            slots[s] -= 1;
        }
    }
}

fn check_tetra_points(foam: &FoamSkeleton, s: &FoamOneSet) -> Result<(), TetraViolation> {
    for t in &foam.tetra_points {
        let c: Vec<usize> = t.facets.iter().copied().filter(|f| s.c_facets.contains(f)).collect();
        let disjoint = c.len() == 2
            && !t.seams.iter().any(|&k| {
                let fs = &foam.seams[k].facets;
                fs.contains(&c[0]) && fs.contains(&c[1])
            });
        if !disjoint {
            return Err(TetraViolation {
                point: t.id.clone(),
                c_facets: c.iter().map(|&f| foam.facets[f].clone()).collect(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn counts() {
        assert_eq!(enumerate_onesets(&library::theta()).len(), 3);
        assert_eq!(enumerate_onesets(&library::prism(2)).len(), 5);
        assert_eq!(enumerate_onesets(&library::tetrahedron()).len(), 3);
        for n in 1..=5 {
            assert_eq!(enumerate_onesets(&library::unlink(n)).len(), 1 << n);
        }
        assert_eq!(enumerate_onesets(&library::petersen()).len(), 6);
        assert_eq!(enumerate_onesets(&library::prism(1)).len(), 1);
    }

    #[test]
    fn membership() {
        let t = library::theta();
        assert!(is_oneset(&t, &["e1"]).unwrap());
        assert!(!is_oneset(&t, &["e1", "e2"]).unwrap());
        assert_eq!(is_oneset(&t, &["zz"]), Err(OneSetError::UnknownEdge("zz".into())));
        let h = library::handcuff();
        assert!(!is_oneset(&h, &["a01", "b01"]).unwrap());
    }

    #[test]
    fn cycles_of_examples() {
        let t = library::theta();
        for s in enumerate_onesets(&t) {
            let d = r_cycles(&t, &s);
            assert_eq!((d.n(), d.c_endpoint_count.clone()), (1, vec![2]));
            assert!(is_even(&t, &s));
        }
        let l2 = library::prism(2);
        let s2 = OneSet::from_ids(&l2, &["r01", "r02"]).unwrap();
        assert_eq!(r_cycles(&l2, &s2).c_endpoint_count, vec![2, 2]);
        let k4 = library::tetrahedron();
        for s in enumerate_onesets(&k4) {
            assert_eq!(r_cycles(&k4, &s).c_endpoint_count, vec![4]);
            assert_eq!(c_components(&k4, &s).len(), 2);
        }
        let l3 = library::prism(3);
        let s3 = OneSet::from_ids(&l3, &["r01", "r02", "r03"]).unwrap();
        assert!(!is_even(&l3, &s3));
    }

    #[test]
    fn loops_form_single_step_cycles() {
        let h = library::handcuff();
        let s = OneSet::from_ids(&h, &["r01"]).unwrap();
        let d = r_cycles(&h, &s);
        assert_eq!(d.n(), 2);
        assert_eq!(d.c_endpoint_count, vec![1, 1]);
    }

    #[test]
    fn shadows() {
        let u = library::unlink(4);
        for s in enumerate_onesets(&u) {
            let k = 4 - s.c_edges().count();
            let sh = cover_shadow(&u, &s).unwrap();
            assert_eq!(sh.b1, Some(k.saturating_sub(1)));
            assert_eq!(sh.naive_spinc_count, 1 << (4 - k));
            assert!(sh.lifted_c.iter().all(|l| l.lift_kind == LiftKind::SwappedPair));
        }
        let t = library::theta();
        let sh = cover_shadow(&t, &enumerate_onesets(&t)[0]).unwrap();
        assert_eq!((sh.b1, sh.naive_spinc_count), (Some(0), 2));
        let k4 = library::tetrahedron();
        let sh = cover_shadow(&k4, &enumerate_onesets(&k4)[0]).unwrap();
        assert_eq!((sh.b1, sh.naive_spinc_count), (Some(0), 4));
    }

    #[test]
    fn spatial_circles_need_linking_data() {
        use crate::webmodel::{SpatialTags, WebBuilder};
        let mut link = BTreeMap::new();
        link.insert("c1".to_string(), BTreeMap::from([("c2".to_string(), 1u8)]));
        let hopf = WebBuilder::new()
            .circle("c1")
            .circle("c2")
            .spatial(SpatialTags { planar: false, family: None, linking_parity: Some(link) })
            .build()
            .unwrap();
        let s = OneSet::from_ids(&hopf, &["c1"]).unwrap();
        let sh = cover_shadow(&hopf, &s).unwrap();
        assert_eq!(sh.lifted_c[0].lift_kind, LiftKind::SingleWrappingCircle);
        assert_eq!(sh.b1, None);
        let s = OneSet::from_ids(&hopf, &["c2"]).unwrap();
        assert_eq!(cover_shadow(&hopf, &s), Err(OneSetError::MissingLinking("c2".into())));
    }

    #[test]
    fn foam_onesets() {
        assert_eq!(enumerate_foam_onesets(&library::product_theta_foam()).unwrap().len(), 3);
        assert_eq!(enumerate_foam_onesets(&library::cone_foam()).unwrap().len(), 3);
        let stuck = crate::webmodel::parse_foam(
            r#"{"facets":[{"id":"f1"}],"seams":[{"id":"s1","facets":["f1","f1","f1"]}]}"#,
        )
        .unwrap();
        assert!(enumerate_foam_onesets(&stuck).unwrap().is_empty());
    }
}
