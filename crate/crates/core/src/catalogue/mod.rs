//! Recognised example families, their stated Floer groups, framed ranks and
//! the vanishing and nonvanishing rules.

mod recognize;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::floerblocks::{GradedModule, ModelError, Shape};
use crate::onesets::{cover_shadow, enumerate_onesets, is_even, r_cycles, OneSet, RCycle};
use crate::webmodel::WebGraph;

pub use recognize::{ladders, recognize, recognize_full, FamilyId, Ladder, Recognition, RecognitionError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogueFlavour {
    Check,
    Hat,
    Bar,
    Tilde,
    Reduced,
}

impl CatalogueFlavour {
    pub const ALL: [CatalogueFlavour; 5] = [
        CatalogueFlavour::Check,
        CatalogueFlavour::Hat,
        CatalogueFlavour::Bar,
        CatalogueFlavour::Tilde,
        CatalogueFlavour::Reduced,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogueFlavour::Check => "check",
            CatalogueFlavour::Hat => "hat",
            CatalogueFlavour::Bar => "bar",
            CatalogueFlavour::Tilde => "tilde",
            CatalogueFlavour::Reduced => "reduced",
        }
    }
}

impl fmt::Display for CatalogueFlavour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogueFlavour {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CatalogueFlavour::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown flavour {s:?}; expected check, hat, bar, tilde or reduced"))
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CatalogueError {
    #[error(transparent)]
    Recognition(#[from] RecognitionError),
    #[error("web is not a catalogued family")]
    UnknownFamily,
    #[error("edge {0} does not exist")]
    UnknownEdge(String),
    #[error("no check group is catalogued for based 1-set {{{0}}}")]
    FramedUnknown(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AnswerStatus {
    Known,
    Unknown,
}

/// One spin-c class and its group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyEntry {
    pub spinc: String,
    pub group: String,
    pub module: GradedModule,
    pub provenance: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpinCount {
    /// Number of classes with a stated group.
    pub catalogued: Option<u64>,
    /// `2^(c-components)` from the cover shadow.
    pub naive: Option<u64>,
    pub discrepancy: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TotalRank {
    Finite(usize),
    InfiniteTower,
    Unknown,
}

impl Serialize for TotalRank {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            TotalRank::Finite(n) => s.serialize_u64(*n as u64),
            TotalRank::InfiniteTower => s.serialize_str("infinite (tower)"),
            TotalRank::Unknown => s.serialize_str("unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyAnswer {
    pub family: FamilyId,
    pub flavour: CatalogueFlavour,
    pub oneset: Vec<String>,
    pub oneset_type: String,
    pub status: AnswerStatus,
    pub entries: Vec<HomologyEntry>,
    pub spinc_count: SpinCount,
    pub total_rank: TotalRank,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl HomologyAnswer {
    pub fn is_zero(&self) -> bool {
        self.status == AnswerStatus::Known && self.entries.iter().all(|e| e.module.is_zero())
    }

    /// The direct sum of every entry.
    pub fn module(&self) -> GradedModule {
        self.entries.iter().fold(GradedModule::zero(), |m, e| m.direct_sum(&e.module))
    }
}

fn tower(shape: Shape) -> GradedModule {
    GradedModule::single(shape, 0)
}

fn ups_triple(flavour: CatalogueFlavour) -> Option<GradedModule> {
    match flavour {
        CatalogueFlavour::Check => Some(tower(Shape::TowerUp)),
        CatalogueFlavour::Hat => Some(tower(Shape::TowerDown)),
        CatalogueFlavour::Bar => Some(tower(Shape::BiTower)),
        _ => None,
    }
}

fn u_triple(flavour: CatalogueFlavour) -> Option<GradedModule> {
    match flavour {
        CatalogueFlavour::Check => Some(tower(Shape::TowerUpU)),
        CatalogueFlavour::Hat => Some(tower(Shape::TowerDownU)),
        CatalogueFlavour::Bar => Some(tower(Shape::BiTowerU)),
        _ => None,
    }
}

/// The two towers `F₂[υ] ⊕ F₂[υ]⟨−1⟩` of the flat-connection circle.
fn shifted_pair() -> GradedModule {
    tower(Shape::TowerDown).direct_sum(&GradedModule::single(Shape::TowerDown, -1))
}

/// Classes of a 1-set; `torsion` when unique.
fn per_class(module: GradedModule, count: usize, provenance: &str) -> Vec<HomologyEntry> {
    (1..=count)
        .map(|k| HomologyEntry {
            spinc: if count == 1 { "torsion".into() } else { format!("tau{k}") },
            group: module.to_string(),
            module: module.clone(),
            provenance: provenance.into(),
        })
        .collect()
}

fn single(label: &str, module: GradedModule, provenance: &str) -> Vec<HomologyEntry> {
    vec![HomologyEntry { spinc: label.into(), group: module.to_string(), module, provenance: provenance.into() }]
}

enum Lookup {
    Known(Vec<HomologyEntry>),
    Unknown(String),
}

fn unknown(note: &str) -> Lookup {
    Lookup::Unknown(note.into())
}

/// Ladder-shaped 1-set types of prisms and braid closures.
fn ladder_type(web: &WebGraph, s: &OneSet, n: usize) -> &'static str {
    let d = r_cycles(web, s);
    let lens: Vec<usize> = d
        .cycles
        .iter()
        .map(|c| match c {
            RCycle::Path(p) => p.len(),
            RCycle::Circle(_) => 0,
        })
        .collect();
    match lens.as_slice() {
        [a, b] if *a == n && *b == n => "rung",
        [a] if *a == 2 * n => "ring",
        _ => "other",
    }
}

fn is_distinguished(rec: &Recognition, s: &OneSet) -> bool {
    rec.ladder.as_ref().is_some_and(|l| {
        let mut a = l.rungs.clone();
        a.sort_unstable();
        a == s.c_edges().collect::<Vec<_>>()
    })
}

/// The catalogued 1-set type and answer for one of the three unreduced flavours or the reduced group.
fn lookup(rec: &Recognition, web: &WebGraph, s: &OneSet, flavour: CatalogueFlavour) -> (String, Lookup) {
    use CatalogueFlavour::*;
    let r_circles = d_cycle_count(web, s);
    match rec.family {
        FamilyId::Unknot => {
            if s.is_c(0) {
                let l = match u_triple(flavour) {
                    Some(m) => Lookup::Known(per_class(m, 2, "unknot example, c-coloured unknot, deg U = −2")),
                    None => unknown("only the check, hat and bar groups are stated for the c-coloured unknot"),
                };
                ("c-coloured".into(), l)
            } else {
                let l = match ups_triple(flavour) {
                    Some(m) => Lookup::Known(per_class(m, 1, "unknot example, r-coloured unknot, deg υ = −1")),
                    None => unknown("the reduced group of the unknot is not stated"),
                };
                ("r-coloured".into(), l)
            }
        }
        FamilyId::Unlink(n) => {
            let k = r_circles;
            let ty = format!("k={k}");
            if k == 0 {
                return (ty, unknown("no group is stated for the all-c 1-set of an unlink"));
            }
            let Some(m) = ups_triple(flavour) else {
                return (ty, unknown("the reduced group of an unlink is not stated"));
            };
            let prov = if flavour == Hat {
                "unlink example, Λ[x₁,…,x_{k−1}] ⊗ F₂[υ] per torsion class"
            } else {
                "unlink example, flavour analogous to the hat group"
            };
            (ty, Lookup::Known(per_class(m.exterior_tensor(k as u32 - 1), 1 << (n - k), prov)))
        }
        FamilyId::Theta => {
            let l = match ups_triple(flavour) {
                Some(m) => Lookup::Known(per_class(m, 2, "theta example, two bifold spin-c structures")),
                None => unknown("the reduced group of the theta web is not stated"),
            };
            ("edge".into(), l)
        }
        FamilyId::ThetaPlusUnknot => {
            let circle = web.circle_edges().next().expect("theta plus unknot has a circle");
            if s.is_c(circle) {
                return ("c-coloured circle".into(), unknown("only based 1-sets with an r-coloured circle are stated"));
            }
            let l = match flavour {
                Check => Lookup::Known(per_class(
                    tower(Shape::TowerUp).exterior_tensor(1),
                    2,
                    "theta plus based unknot example, F₂[x]/x² ⊗ F₂[υ⁻¹,υ]/F₂[υ]",
                )),
                _ => unknown("only the check group is stated for theta plus an unknot"),
            };
            ("r-coloured circle".into(), l)
        }
        FamilyId::Tetrahedron => {
            let l = match flavour {
                Hat => Lookup::Known(per_class(
                    tower(Shape::TowerDown),
                    2,
                    "tetrahedron example, one F₂[υ] tower per isotropy type",
                )),
                _ => unknown("only the hat group is stated for the tetrahedron"),
            };
            ("matching".into(), l)
        }
        FamilyId::Handcuff | FamilyId::TwistedHandcuff | FamilyId::Prism(1) => {
            let prov = match rec.family {
                FamilyId::TwistedHandcuff => "twisted handcuff example, three-point vanishing",
                FamilyId::Handcuff => "handcuff example, embedded bridge vanishing",
                _ => "prism L₁ example, embedded bridge vanishing",
            };
            ("bridge".into(), Lookup::Known(single("all", GradedModule::zero(), prov)))
        }
        FamilyId::HopfHandcuff => {
            let l = match flavour {
                Hat => Lookup::Known(per_class(
                    tower(Shape::TowerDown),
                    4,
                    "Hopf handcuff example, four torsion real bifold spin-c structures",
                )),
                _ => unknown("only the hat group is stated for the Hopf handcuff"),
            };
            ("bridge".into(), l)
        }
        FamilyId::Prism(n) => {
            let ty = ladder_type(web, s, n);
            let l = prism_lookup(rec, s, n, ty, flavour);
            (ty.into(), l)
        }
        FamilyId::BraidClosure(_) | FamilyId::PetersenEmbedding => {
            let n = match rec.family {
                FamilyId::BraidClosure(n) => n,
                _ => 5,
            };
            if is_distinguished(rec, s) {
                let l = if flavour == Reduced && n % 2 == 1 && n >= 5 {
                    let prov = if rec.family == FamilyId::PetersenEmbedding {
                        "Petersen example, W(P, s_γ) = F₂ ⊕ F₂"
                    } else {
                        "braid closure excision nonvanishing, as for L₅ and the Petersen web"
                    };
                    Lookup::Known(single("adjunction-top", GradedModule::repeated(Shape::Finite, 0, 2), prov))
                } else {
                    unknown("only the reduced group of s_γ is stated for braid closures with an odd number ≥ 5 of strands")
                };
                ("s_gamma".into(), l)
            } else {
                ("other".into(), unknown("no group is stated for this 1-set"))
            }
        }
        FamilyId::Unknown => ("unknown".into(), unknown("web is not a catalogued family")),
    }
}

fn prism_lookup(rec: &Recognition, s: &OneSet, n: usize, ty: &str, flavour: CatalogueFlavour) -> Lookup {
    use CatalogueFlavour::*;
    let distinguished = is_distinguished(rec, s);
    match (n, ty, flavour) {
        (2, "rung", Hat) => Lookup::Known(per_class(shifted_pair(), 1, "prism L₂ example, unique torsion class of s₂")),
        (2, "ring", Hat) => Lookup::Known(per_class(
            tower(Shape::TowerDown),
            2,
            "prism L₂ example, one tower per isotropy type of an unknot with two arcs",
        )),
        (3, "rung", Reduced) if distinguished => {
            Lookup::Known(single("all", GradedModule::zero(), "prism L₃ example, three-point vanishing for s₃"))
        }
        (3, "ring", Hat) => Lookup::Known(per_class(
            tower(Shape::TowerDown),
            2,
            "prism L₃ example, two towers for a real circle with three c-arcs",
        )),
        (4, "rung", Hat) => Lookup::Known(per_class(
            shifted_pair(),
            1,
            "prism L₄ example, borderline s₄ with a circle of flat connections",
        )),
        (4, "ring", Hat) => Lookup::Known(per_class(
            tower(Shape::TowerDown),
            2,
            "prism L₄ example, two towers for a real circle with four c-arcs",
        )),
        (n, "rung", Reduced) if distinguished && n % 2 == 1 && n >= 5 => {
            let prov = if n == 5 {
                "prism L₅ example, W(L₅, s₅) = F₂ ⊕ F₂ from two irreducible generators"
            } else {
                "braid closure excision nonvanishing for the trivial braid, as for L₅"
            };
            Lookup::Known(single("adjunction-top", GradedModule::repeated(Shape::Finite, 0, 2), prov))
        }
        _ => unknown("no group is stated for this 1-set and flavour"),
    }
}

fn d_cycle_count(web: &WebGraph, s: &OneSet) -> usize {
    r_cycles(web, s).n()
}

/// Tilde groups are the cone of `υ_p` on each check entry; they need an r-coloured basepoint.
fn tilde_lookup(rec: &Recognition, web: &WebGraph, s: &OneSet) -> (String, Result<Lookup, ModelError>) {
    let (ty, check) = lookup(rec, web, s, CatalogueFlavour::Check);
    let Lookup::Known(entries) = check else { return (ty, Ok(check)) };
    if !s.mask().iter().any(|c| !c) {
        return (ty, Ok(unknown("a 1-set with no r-edge is never based")));
    }
    let mut out = Vec::new();
    for e in entries {
        if e.module.summands.iter().any(|x| matches!(x.shape, Shape::TowerDownU | Shape::TowerUpU | Shape::BiTowerU)) {
            return (ty, Ok(unknown("υ_p does not act on a U-tower check group")));
        }
        let rank = match e.module.upsilon_cone_rank() {
            Ok(r) => r,
            Err(err) => return (ty, Err(err)),
        };
        let module = GradedModule::repeated(Shape::Finite, 0, rank);
        out.push(HomologyEntry {
            spinc: e.spinc,
            group: module.to_string(),
            module,
            provenance: format!("cone of υ_p on the check group; {}", e.provenance),
        });
    }
    (ty, Ok(Lookup::Known(out)))
}

fn total_rank(entries: &[HomologyEntry]) -> TotalRank {
    let mut sum = 0;
    for e in entries {
        match e.module.total_rank() {
            Some(r) => sum += r,
            None => return TotalRank::InfiniteTower,
        }
    }
    TotalRank::Finite(sum)
}

/// The stated group of `(web, s)` in one flavour.
pub fn homology(web: &WebGraph, s: &OneSet, flavour: CatalogueFlavour) -> Result<HomologyAnswer, CatalogueError> {
    let rec = recognize_full(web)?;
    if rec.family == FamilyId::Unknown {
        return Err(CatalogueError::UnknownFamily);
    }
    let (oneset_type, found) = if flavour == CatalogueFlavour::Tilde {
        let (ty, l) = tilde_lookup(&rec, web, s);
        (ty, l?)
    } else {
        lookup(&rec, web, s, flavour)
    };
    let naive = cover_shadow(web, s).ok().map(|c| c.naive_spinc_count);
    let base = |status, entries: Vec<HomologyEntry>, catalogued: Option<u64>, total, note| HomologyAnswer {
        family: rec.family,
        flavour,
        oneset: s.c_edge_ids(web),
        oneset_type: oneset_type.clone(),
        status,
        spinc_count: SpinCount {
            catalogued,
            naive,
            discrepancy: matches!((catalogued, naive), (Some(p), Some(q)) if p != q),
        },
        entries,
        total_rank: total,
        note,
    };
    Ok(match found {
        Lookup::Known(entries) => {
            let zero = entries.iter().all(|e| e.module.is_zero());
            let catalogued = (!zero && entries.iter().all(|e| e.spinc != "adjunction-top")).then_some(entries.len() as u64);
            let total = total_rank(&entries);
            base(AnswerStatus::Known, entries, catalogued, total, None)
        }
        Lookup::Unknown(note) => base(AnswerStatus::Unknown, Vec::new(), None, TotalRank::Unknown, Some(note)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FramedRank {
    pub rank: u64,
    pub based_onesets: usize,
    pub restricted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// `Σ` over based 1-sets of (class count) × (rank of the `υ` cone on the check group).
/// The class count is the naive cover-shadow count, or one when restricted.
pub fn framed_rank(web: &WebGraph, basepoint_edge: &str, restrict_spinc: bool) -> Result<FramedRank, CatalogueError> {
    let p = web.edge_index(basepoint_edge).ok_or_else(|| CatalogueError::UnknownEdge(basepoint_edge.into()))?;
    let based: Vec<OneSet> = enumerate_onesets(web).into_iter().filter(|s| !s.is_c(p)).collect();
    if based.is_empty() {
        return Ok(FramedRank {
            rank: 0,
            based_onesets: 0,
            restricted: restrict_spinc,
            note: Some(format!("no 1-set leaves {basepoint_edge} r-coloured")),
        });
    }
    let mut rank = 0u64;
    for s in &based {
        let answer = homology(web, s, CatalogueFlavour::Check)?;
        let Some(entry) = answer.entries.first().filter(|_| answer.status == AnswerStatus::Known) else {
            return Err(CatalogueError::FramedUnknown(s.c_edge_ids(web).join(",")));
        };
        let cone = entry.module.upsilon_cone_rank()? as u64;
        let classes = if restrict_spinc {
            1
        } else {
            cover_shadow(web, s)
                .map_err(|_| CatalogueError::FramedUnknown(s.c_edge_ids(web).join(",")))?
                .naive_spinc_count
        };
        rank += classes * cone;
    }
    Ok(FramedRank { rank, based_onesets: based.len(), restricted: restrict_spinc, note: None })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Zero,
    Nonzero,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Bridge,
    ThreePoint,
    PscOdd,
    Excision,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingVerdict {
    pub verdict: Verdict,
    pub rule: Rule,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_rank: Option<usize>,
}

/// Segment edges whose removal disconnects their endpoints.
pub fn cut_edges(web: &WebGraph) -> Vec<usize> {
    web.segment_edges()
        .filter(|&e| {
            let [a, b] = web.edge(e).ends().expect("segment");
            if a.vertex == b.vertex {
                return false;
            }
            let mut seen = vec![false; web.vertex_count()];
            let mut stack = vec![a.vertex];
            seen[a.vertex] = true;
            while let Some(v) = stack.pop() {
                for h in web.slots(v) {
                    if h.edge == e {
                        continue;
                    }
                    let w = web.edge(h.edge).ends().expect("segment")[1 - h.end as usize].vertex;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            !seen[b.vertex]
        })
        .collect()
}

fn psc_family(family: FamilyId, planar: bool) -> bool {
    match family {
        FamilyId::Unknot
        | FamilyId::Unlink(_)
        | FamilyId::Theta
        | FamilyId::ThetaPlusUnknot
        | FamilyId::Tetrahedron => true,
        FamilyId::Prism(n) => n <= 3,
        FamilyId::Handcuff => planar,
        _ => false,
    }
}

/// Applies the bridge, three-point, odd-PSC and excision rules in that order.
pub fn vanishing_check(web: &WebGraph, s: &OneSet) -> VanishingVerdict {
    let zero = |rule| VanishingVerdict { verdict: Verdict::Zero, rule, total_rank: Some(0) };
    if web.is_planar() && !cut_edges(web).is_empty() {
        return zero(Rule::Bridge);
    }
    let Ok(rec) = recognize_full(web) else {
        return VanishingVerdict { verdict: Verdict::Unknown, rule: Rule::None, total_rank: None };
    };
    let distinguished = is_distinguished(&rec, s);
    match rec.family {
        FamilyId::TwistedHandcuff => return zero(Rule::ThreePoint),
        FamilyId::Prism(3) if distinguished => return zero(Rule::ThreePoint),
        _ => {}
    }
    if psc_family(rec.family, web.is_planar()) && !is_even(web, s) {
        return zero(Rule::PscOdd);
    }
    let excision = match rec.family {
        FamilyId::Prism(n) | FamilyId::BraidClosure(n) => distinguished && n % 2 == 1 && n >= 5,
        FamilyId::PetersenEmbedding => distinguished,
        _ => false,
    };
    if excision {
        return VanishingVerdict { verdict: Verdict::Nonzero, rule: Rule::Excision, total_rank: Some(2) };
    }
    VanishingVerdict { verdict: Verdict::Unknown, rule: Rule::None, total_rank: None }
}

/// The distinguished rung 1-set of a ladder-shaped family.
pub fn distinguished_oneset(web: &WebGraph) -> Result<Option<OneSet>, CatalogueError> {
    Ok(recognize_full(web)?.ladder.map(|l| l.oneset(web)))
}
