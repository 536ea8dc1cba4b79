//! Webs (trivalent graphs with circle edges) and foam skeletons.
//!
//! Every vertex owns three ordered half-edge slots. A segment edge binds two
//! slots, possibly at the same vertex; a circle edge binds none.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    Unknot,
    Unlink(usize),
    Theta,
    Tetrahedron,
    Prism(usize),
    Handcuff,
    TwistedHandcuff,
    HopfHandcuff,
    BraidClosure(BraidTag),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidTag {
    /// Artin generators: `k` or `-k` for the crossing of strands `k` and `k+1`.
    pub word: Vec<i32>,
    pub strands: usize,
    /// Ids of the strand edges joining the two closure circles.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rungs: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpatialTags {
    #[serde(default)]
    pub planar: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyTag>,
    /// `circle id -> (edge id -> parity)`: the mod-2 linking number of a circle
    /// edge with the r-cycle through the named edge.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linking_parity: Option<BTreeMap<String, BTreeMap<String, u8>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndPoint {
    pub vertex: usize,
    pub slot: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HalfEdge {
    pub edge: usize,
    pub end: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Segment([EndPoint; 2]),
    Circle,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn ends(&self) -> Option<[EndPoint; 2]> {
        match self.kind {
            EdgeKind::Segment(ends) => Some(ends),
            EdgeKind::Circle => None,
        }
    }

    pub fn is_circle(&self) -> bool {
        matches!(self.kind, EdgeKind::Circle)
    }

    pub fn is_loop(&self) -> bool {
        matches!(self.kind, EdgeKind::Segment([a, b]) if a.vertex == b.vertex)
    }
}

/// A validated web with vertices and edges in lexicographic id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    slots: Vec<[HalfEdge; 3]>,
    spatial: Option<SpatialTags>,
}

impl WebGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.edges[e].id
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_str().cmp(id)).ok()
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.binary_search_by(|e| e.id.as_str().cmp(id)).ok()
    }

    /// The three half-edges at a vertex, by slot.
    pub fn slots(&self, v: usize) -> [HalfEdge; 3] {
        self.slots[v]
    }

    pub fn spatial(&self) -> Option<&SpatialTags> {
        self.spatial.as_ref()
    }

    pub fn family_tag(&self) -> Option<&FamilyTag> {
        self.spatial.as_ref().and_then(|s| s.family.as_ref())
    }

    pub fn is_planar(&self) -> bool {
        self.spatial.as_ref().is_some_and(|s| s.planar)
    }

    pub fn with_spatial(mut self, spatial: Option<SpatialTags>) -> Self {
        self.spatial = spatial;
        self
    }

    pub fn circle_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&e| self.edges[e].is_circle())
    }

    pub fn segment_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&e| !self.edges[e].is_circle())
    }

    /// Vertices adjacent to `v` through segment edges, with multiplicity; a loop lists `v` twice.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.slots[v]
            .iter()
            .map(|h| {
                let ends = self.edges[h.edge].ends().expect("slot bound to a circle");
                ends[1 - h.end as usize].vertex
            })
            .collect()
    }

    pub fn to_document(&self) -> WebDocument {
        let vertices = self.vertices.iter().map(|id| VertexDoc { id: id.clone() }).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| EdgeDoc {
                id: e.id.clone(),
                kind: None,
                ends: match e.kind {
                    EdgeKind::Segment(ends) => ends
                        .iter()
                        .map(|p| (self.vertices[p.vertex].clone(), p.slot as i64))
                        .collect(),
                    EdgeKind::Circle => Vec::new(),
                },
            })
            .collect();
        WebDocument { vertices, edges, spatial: self.spatial.clone() }
    }

    /// Canonical JSON text.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("web documents always serialize")
    }

    fn from_valid_document(doc: &WebDocument) -> WebGraph {
        let mut vertices: Vec<String> = doc.vertices.iter().map(|v| v.id.clone()).collect();
        vertices.sort();
        let index: HashMap<&str, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut docs: Vec<&EdgeDoc> = doc.edges.iter().collect();
        docs.sort_by(|a, b| a.id.cmp(&b.id));
        let mut edges = Vec::with_capacity(docs.len());
        let mut slots = vec![[HalfEdge { edge: usize::MAX, end: 0 }; 3]; vertices.len()];
        for (e, d) in docs.iter().enumerate() {
            let kind = if d.ends.is_empty() {
                EdgeKind::Circle
            } else {
                let mut ends: Vec<EndPoint> = d
                    .ends
                    .iter()
                    .map(|(v, s)| EndPoint { vertex: index[v.as_str()], slot: *s as u8 })
                    .collect();
                ends.sort();
                for (k, p) in ends.iter().enumerate() {
                    slots[p.vertex][p.slot as usize] = HalfEdge { edge: e, end: k as u8 };
                }
                EdgeKind::Segment([ends[0], ends[1]])
            };
            edges.push(Edge { id: d.id.clone(), kind });
        }
        WebGraph { vertices, edges, slots, spatial: doc.spatial.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKindTag {
    Segment,
    Circle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: String,
    /// Inferred from the number of ends when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<EdgeKindTag>,
    pub ends: Vec<(String, i64)>,
}

/// The JSON form of a web, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WebDocument {
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spatial: Option<SpatialTags>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagnosticKind {
    DuplicateId,
    EdgeEnds,
    CircleAttachment,
    DanglingEnd,
    SlotRange,
    SlotConflict,
    VertexArity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    /// The offending vertex or edge id.
    pub id: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn diag(kind: DiagnosticKind, id: &str, message: String) -> Diagnostic {
    Diagnostic { kind, id: id.to_string(), message }
}

/// One diagnostic per violated web invariant; empty for a valid document.
///
/// Vertex arity is only checked once every edge has a sound shape, so a
/// missing end is reported once, at its edge. Slot problems come last.
pub fn validate(doc: &WebDocument) -> Vec<Diagnostic> {
    use DiagnosticKind::*;
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for v in &doc.vertices {
        if !seen.insert(v.id.as_str()) {
            out.push(diag(DuplicateId, &v.id, format!("duplicate vertex id {}", v.id)));
        }
    }
    let vertex_ids = seen;
    let mut seen = BTreeSet::new();
    for e in &doc.edges {
        if !seen.insert(e.id.as_str()) {
            out.push(diag(DuplicateId, &e.id, format!("duplicate edge id {}", e.id)));
        }
    }

    let mut shapes_sound = true;
    let mut slot_problems = Vec::new();
    let mut bound: BTreeMap<(&str, i64), &str> = BTreeMap::new();
    let mut arity: BTreeMap<&str, usize> = BTreeMap::new();
    for e in &doc.edges {
        let kind = e.kind.unwrap_or(if e.ends.is_empty() {
            EdgeKindTag::Circle
        } else {
            EdgeKindTag::Segment
        });
        match kind {
            EdgeKindTag::Circle if !e.ends.is_empty() => {
                shapes_sound = false;
                out.push(diag(CircleAttachment, &e.id, format!("circle {}: has attachment", e.id)));
            }
            EdgeKindTag::Segment if e.ends.len() != 2 => {
                shapes_sound = false;
                let n = e.ends.len();
                let noun = if n == 1 { "end" } else { "ends" };
                out.push(diag(EdgeEnds, &e.id, format!("edge {}: {n} {noun}", e.id)));
            }
            _ => {}
        }
        for (v, slot) in &e.ends {
            if !vertex_ids.contains(v.as_str()) {
                out.push(diag(DanglingEnd, &e.id, format!("edge {}: dangling end at {v}", e.id)));
                continue;
            }
            *arity.entry(v.as_str()).or_default() += 1;
            if !(0..3).contains(slot) {
                slot_problems.push(diag(
                    SlotRange,
                    &e.id,
                    format!("edge {}: slot {slot} out of range at {v}", e.id),
                ));
            } else if bound.insert((v.as_str(), *slot), e.id.as_str()).is_some() {
                slot_problems.push(diag(
                    SlotConflict,
                    v,
                    format!("vertex {v}: slot {slot} bound twice"),
                ));
            }
        }
    }
    if shapes_sound {
        for v in &vertex_ids {
            let n = arity.get(v).copied().unwrap_or(0);
            if n != 3 {
                out.push(diag(VertexArity, v, format!("vertex {v}: vertex arity {n}")));
            }
        }
    }
    out.extend(slot_problems);
    out
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed document at byte {offset}: {message}")]
    Malformed { message: String, offset: usize },
    #[error("{diagnostic} (byte {offset})")]
    Invalid { diagnostic: Diagnostic, offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Malformed { offset, .. } | ParseError::Invalid { offset, .. } => *offset,
        }
    }
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let start: usize = text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    (start + column.saturating_sub(1)).min(text.len())
}

fn malformed(text: &str, err: serde_json::Error) -> ParseError {
    ParseError::Malformed {
        message: err.to_string(),
        offset: byte_offset(text, err.line(), err.column()),
    }
}

/// Byte offsets of every `"id": "<id>"` definition in the text.
fn definition_offsets(text: &str, id: &str) -> Vec<usize> {
    let needle = serde_json::to_string(id).expect("string serializes");
    let bytes = text.as_bytes();
    let skip_ws_back = |mut i: usize| {
        while i > 0 && bytes[i - 1].is_ascii_whitespace() {
            i -= 1;
        }
        i
    };
    let mut out = Vec::new();
    for (pos, _) in text.match_indices(&needle) {
        let i = skip_ws_back(pos);
        if i == 0 || bytes[i - 1] != b':' {
            continue;
        }
        let j = skip_ws_back(i - 1);
        if text[..j].ends_with("\"id\"") {
            out.push(pos);
        }
    }
    out
}

fn locate(text: &str, d: &Diagnostic) -> usize {
    let defs = definition_offsets(text, &d.id);
    let nth = usize::from(d.kind == DiagnosticKind::DuplicateId);
    defs.get(nth)
        .or(defs.first())
        .copied()
        .or_else(|| text.find(&d.id))
        .unwrap_or(0)
}

pub fn parse_web_document(text: &str) -> Result<WebDocument, ParseError> {
    serde_json::from_str(text).map_err(|e| malformed(text, e))
}

pub fn parse_web(text: &str) -> Result<WebGraph, ParseError> {
    let doc = parse_web_document(text)?;
    if let Some(d) = validate(&doc).into_iter().next() {
        let offset = locate(text, &d);
        return Err(ParseError::Invalid { diagnostic: d, offset });
    }
    Ok(WebGraph::from_valid_document(&doc))
}

impl TryFrom<&WebDocument> for WebGraph {
    type Error = Vec<Diagnostic>;

    fn try_from(doc: &WebDocument) -> Result<Self, Self::Error> {
        let diags = validate(doc);
        if diags.is_empty() {
            Ok(WebGraph::from_valid_document(doc))
        } else {
            Err(diags)
        }
    }
}

/// Incremental construction with automatic slot assignment.
#[derive(Clone, Debug, Default)]
pub struct WebBuilder {
    vertices: Vec<String>,
    edges: Vec<EdgeDoc>,
    used: HashMap<String, i64>,
    spatial: Option<SpatialTags>,
}

impl WebBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, id: impl Into<String>) -> Self {
        self.vertices.push(id.into());
        self
    }

    pub fn vertices<I, S>(mut self, ids: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.vertices.extend(ids.into_iter().map(Into::into));
        self
    }

    /// A segment edge taking the next free slot at each endpoint.
    pub fn edge(mut self, id: impl Into<String>, a: &str, b: &str) -> Self {
        let mut next = |v: &str| {
            let slot = self.used.entry(v.to_string()).or_insert(0);
            *slot += 1;
            (v.to_string(), *slot - 1)
        };
        let ends = vec![next(a), next(b)];
        self.edges.push(EdgeDoc { id: id.into(), kind: None, ends });
        self
    }

    pub fn circle(mut self, id: impl Into<String>) -> Self {
        self.edges.push(EdgeDoc { id: id.into(), kind: None, ends: Vec::new() });
        self
    }

    pub fn spatial(mut self, spatial: SpatialTags) -> Self {
        self.spatial = Some(spatial);
        self
    }

    pub fn document(&self) -> WebDocument {
        WebDocument {
            vertices: self.vertices.iter().map(|id| VertexDoc { id: id.clone() }).collect(),
            edges: self.edges.clone(),
            spatial: self.spatial.clone(),
        }
    }

    pub fn build(self) -> Result<WebGraph, Vec<Diagnostic>> {
        WebGraph::try_from(&self.document())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetDoc {
    pub id: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeamDoc {
    pub id: String,
    pub facets: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TetraPointDoc {
    pub id: String,
    pub seams: Vec<String>,
    pub facets: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FoamDocument {
    pub facets: Vec<FacetDoc>,
    pub seams: Vec<SeamDoc>,
    #[serde(default)]
    pub tetra_points: Vec<TetraPointDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seam {
    pub id: String,
    pub facets: [usize; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TetraPoint {
    pub id: String,
    pub seams: [usize; 4],
    pub facets: [usize; 6],
}

/// Facets, seams and tetrahedral points of a closed foam, in id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoamSkeleton {
    pub facets: Vec<String>,
    pub seams: Vec<Seam>,
    pub tetra_points: Vec<TetraPoint>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FoamParseError {
    #[error("malformed foam document at byte {offset}: {message}")]
    Malformed { message: String, offset: usize },
    #[error("{message} (byte {offset})")]
    Invalid { id: String, message: String, offset: usize },
}

pub fn validate_foam(doc: &FoamDocument) -> Vec<(String, String)> {
    let mut out = Vec::new();
    let mut facets = BTreeSet::new();
    for f in &doc.facets {
        if !facets.insert(f.id.as_str()) {
            out.push((f.id.clone(), format!("duplicate facet id {}", f.id)));
        }
    }
    let mut seams = BTreeSet::new();
    for s in &doc.seams {
        if !seams.insert(s.id.as_str()) {
            out.push((s.id.clone(), format!("duplicate seam id {}", s.id)));
        }
        if s.facets.len() != 3 {
            out.push((s.id.clone(), format!("seam {}: {} facet slots", s.id, s.facets.len())));
        }
        for f in &s.facets {
            if !facets.contains(f.as_str()) {
                out.push((s.id.clone(), format!("seam {}: unknown facet {f}", s.id)));
            }
        }
    }
    let mut points = BTreeSet::new();
    for t in &doc.tetra_points {
        if !points.insert(t.id.as_str()) {
            out.push((t.id.clone(), format!("duplicate tetra point id {}", t.id)));
        }
        if t.seams.len() != 4 {
            out.push((t.id.clone(), format!("tetra point {}: {} seams", t.id, t.seams.len())));
        }
        if t.facets.len() != 6 {
            out.push((
                t.id.clone(),
                format!("tetra point {}: {} facet slots", t.id, t.facets.len()),
            ));
        }
        for s in &t.seams {
            if !seams.contains(s.as_str()) {
                out.push((t.id.clone(), format!("tetra point {}: unknown seam {s}", t.id)));
            }
        }
        for f in &t.facets {
            if !facets.contains(f.as_str()) {
                out.push((t.id.clone(), format!("tetra point {}: unknown facet {f}", t.id)));
            }
        }
    }
    out
}

impl FoamSkeleton {
    pub fn from_document(doc: &FoamDocument) -> Result<Self, Vec<(String, String)>> {
        let problems = validate_foam(doc);
        if !problems.is_empty() {
            return Err(problems);
        }
        let mut facets: Vec<String> = doc.facets.iter().map(|f| f.id.clone()).collect();
        facets.sort();
        let fi = |id: &String| facets.binary_search(id).expect("validated facet");
        let mut seam_docs: Vec<&SeamDoc> = doc.seams.iter().collect();
        seam_docs.sort_by(|a, b| a.id.cmp(&b.id));
        let seam_ids: Vec<&str> = seam_docs.iter().map(|s| s.id.as_str()).collect();
        let seams = seam_docs
            .iter()
            .map(|s| Seam { id: s.id.clone(), facets: [fi(&s.facets[0]), fi(&s.facets[1]), fi(&s.facets[2])] })
            .collect();
        let si = |id: &String| seam_ids.binary_search(&id.as_str()).expect("validated seam");
        let mut tetra_points: Vec<TetraPoint> = doc
            .tetra_points
            .iter()
            .map(|t| TetraPoint {
                id: t.id.clone(),
                seams: std::array::from_fn(|k| si(&t.seams[k])),
                facets: std::array::from_fn(|k| fi(&t.facets[k])),
            })
            .collect();
        tetra_points.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(FoamSkeleton { facets, seams, tetra_points })
    }

    pub fn to_document(&self) -> FoamDocument {
        FoamDocument {
            facets: self.facets.iter().map(|id| FacetDoc { id: id.clone() }).collect(),
            seams: self
                .seams
                .iter()
                .map(|s| SeamDoc {
                    id: s.id.clone(),
                    facets: s.facets.iter().map(|&f| self.facets[f].clone()).collect(),
                })
                .collect(),
            tetra_points: self
                .tetra_points
                .iter()
                .map(|t| TetraPointDoc {
                    id: t.id.clone(),
                    seams: t.seams.iter().map(|&s| self.seams[s].id.clone()).collect(),
                    facets: t.facets.iter().map(|&f| self.facets[f].clone()).collect(),
                })
                .collect(),
        }
    }
}

pub fn parse_foam(text: &str) -> Result<FoamSkeleton, FoamParseError> {
    let doc: FoamDocument = serde_json::from_str(text).map_err(|e| FoamParseError::Malformed {
        message: e.to_string(),
        offset: byte_offset(text, e.line(), e.column()),
    })?;
    FoamSkeleton::from_document(&doc).map_err(|problems| {
        let (id, message) = problems.into_iter().next().expect("nonempty");
        let offset = definition_offsets(text, &id).first().copied().unwrap_or(0);
        FoamParseError::Invalid { id, message, offset }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const THETA: &str = r#"{"vertices":[{"id":"v1"},{"id":"v2"}],
        "edges":[{"id":"e1","ends":[["v1",0],["v2",0]]},
                 {"id":"e2","ends":[["v1",1],["v2",1]]},
                 {"id":"e3","ends":[["v1",2],["v2",2]]}]}"#;

    #[test]
    fn theta_parses() {
        let w = parse_web(THETA).unwrap();
        assert_eq!((w.vertex_count(), w.edge_count()), (2, 3));
        assert_eq!(w.neighbours(0), vec![1, 1, 1]);
    }

    #[test]
    fn unlink_has_no_vertices() {
        let w = parse_web(r#"{"vertices":[],"edges":[{"id":"c1","ends":[]},{"id":"c2","ends":[]}]}"#)
            .unwrap();
        assert_eq!((w.vertex_count(), w.circle_edges().count()), (0, 2));
    }

    #[test]
    fn four_slot_vertex_is_an_arity_error() {
        let text = r#"{"vertices":[{"id":"v1"},{"id":"v2"}],
            "edges":[{"id":"e1","ends":[["v1",0],["v2",0]]},
                     {"id":"e2","ends":[["v1",1],["v2",1]]},
                     {"id":"e3","ends":[["v1",2],["v2",2]]},
                     {"id":"e4","ends":[["v1",2],["v1",1]]}]}"#;
        let err = parse_web(text).unwrap_err();
        assert!(err.to_string().starts_with("vertex v1: vertex arity 5"), "{err}");
        let text = r#"{"vertices":[{"id":"v1"},{"id":"v2"},{"id":"v3"}],
            "edges":[{"id":"e1","ends":[["v1",0],["v2",0]]},
                     {"id":"e2","ends":[["v1",1],["v2",1]]},
                     {"id":"e3","ends":[["v1",2],["v2",2]]},
                     {"id":"e4","ends":[["v3",0],["v3",1]]},
                     {"id":"e5","ends":[["v3",2],["v3",0]]}]}"#;
        match parse_web(text).unwrap_err() {
            ParseError::Invalid { diagnostic, offset } => {
                assert_eq!(diagnostic.kind, DiagnosticKind::VertexArity);
                assert_eq!(&text[offset..offset + 4], "\"v3\"");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn arity_error_names_vertex_and_offset() {
        let text = r#"{"vertices":[{"id":"v1"},{"id":"v2"},{"id":"v3"}],
            "edges":[{"id":"e1","ends":[["v1",0],["v2",0]]},
                     {"id":"e2","ends":[["v1",1],["v2",1]]},
                     {"id":"e3","ends":[["v1",2],["v2",2]]}]}"#;
        let err = parse_web(text).unwrap_err();
        assert!(err.to_string().contains("vertex arity"), "{err}");
        assert!(err.to_string().contains("v3"));
        assert_eq!(&text[err.offset()..err.offset() + 4], "\"v3\"");
    }

    #[test]
    fn validate_reports_single_end_and_attached_circle() {
        let doc = parse_web_document(
            r#"{"vertices":[{"id":"v1"},{"id":"v2"}],
            "edges":[{"id":"e1","ends":[["v1",0],["v2",0]]},
                     {"id":"e2","ends":[["v1",1],["v2",1]]},
                     {"id":"e3","ends":[["v1",2]]}]}"#,
        )
        .unwrap();
        let msgs: Vec<String> = validate(&doc).iter().map(|d| d.message.clone()).collect();
        assert_eq!(msgs, vec!["edge e3: 1 end"]);
        let doc = parse_web_document(
            r#"{"vertices":[{"id":"v1"},{"id":"v2"}],
            "edges":[{"id":"e1","kind":"circle","ends":[["v1",0]]},
                     {"id":"e2","ends":[["v1",1],["v2",1]]},
                     {"id":"e3","ends":[["v1",2],["v2",2]]},
                     {"id":"e4","ends":[["v2",0],["v1",0]]}]}"#,
        )
        .unwrap();
        let msgs: Vec<String> = validate(&doc).iter().map(|d| d.message.clone()).collect();
        assert_eq!(msgs, vec!["circle e1: has attachment", "vertex v1: slot 0 bound twice"]);
    }

    #[test]
    fn duplicate_and_dangling() {
        let doc = parse_web_document(
            r#"{"vertices":[{"id":"v1"},{"id":"v1"}],"edges":[{"id":"e1","ends":[["v1",0],["v9",0]]}]}"#,
        )
        .unwrap();
        let kinds: Vec<DiagnosticKind> = validate(&doc).iter().map(|d| d.kind).collect();
        assert!(kinds.contains(&DiagnosticKind::DuplicateId));
        assert!(kinds.contains(&DiagnosticKind::DanglingEnd));
    }

    #[test]
    fn malformed_reports_offset() {
        let err = parse_web("{\"vertices\": [}").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { offset: 14, .. }), "{err:?}");
    }

    #[test]
    fn canonical_round_trip() {
        let w = parse_web(THETA).unwrap();
        let text = w.to_json();
        let again = parse_web(&text).unwrap();
        assert_eq!(again, w);
        assert_eq!(again.to_json(), text);
    }

    #[test]
    fn foams() {
        let prod = r#"{"facets":[{"id":"f1"},{"id":"f2"},{"id":"f3"}],
            "seams":[{"id":"s1","facets":["f1","f2","f3"]}]}"#;
        assert_eq!(parse_foam(prod).unwrap().seams.len(), 1);
        let bad = r#"{"facets":[{"id":"f1"},{"id":"f2"}],"seams":[{"id":"s1","facets":["f1","f2"]}]}"#;
        let err = parse_foam(bad).unwrap_err();
        assert!(err.to_string().contains("seam s1: 2 facet slots"), "{err}");
    }
}
