//! The built-in golden suite: catalogued groups and every acceptance check.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalogue::{self, homology, recognize, CatalogueFlavour, FamilyId, HomologyAnswer};
use crate::dotalgebra::{multiply, verify_vertex_relations, DotAlgebra, Monomial};
use crate::floerblocks::synth::{unknot_pattern, unknot_upsilon, validated_complexes};
use crate::floerblocks::{build_flavour, build_ijp, Flavour, GradedModule, Shape};
use crate::foamcalc::{admissible_foam, b_plus, dirac_index_bifold};
use crate::library;
use crate::onesets::{enumerate_onesets, OneSet};
use crate::rational::{int, to_text};
use crate::tait::{count_tait, count_tait_brute_force, random_cubic_multigraphs, verify_identity};
use crate::webmodel::WebGraph;

type Check = Box<dyn Fn() -> Value + Send + Sync>;

pub struct CorpusEntry {
    pub name: String,
    /// Acceptance criterion number; 0 for catalogue golden data.
    pub criterion: u8,
    pub expected: Value,
    run: Check,
}

impl CorpusEntry {
    fn new(name: impl Into<String>, criterion: u8, expected: Value, run: impl Fn() -> Value + Send + Sync + 'static) -> Self {
        CorpusEntry { name: name.into(), criterion, expected, run: Box::new(run) }
    }

    pub fn run(&self) -> Value {
        (self.run)()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusRow {
    pub name: String,
    pub criterion: u8,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusTable {
    pub rows: Vec<CorpusRow>,
    pub passed: usize,
    pub failed: usize,
}

impl CorpusTable {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> Vec<&str> {
        self.rows.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect()
    }

    /// Rows of one acceptance criterion.
    pub fn criterion(&self, k: u8) -> impl Iterator<Item = &CorpusRow> {
        self.rows.iter().filter(move |r| r.criterion == k)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&format!("{} {}\n", if r.pass { "PASS" } else { "FAIL" }, r.name));
        }
        out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        out
    }
}

pub fn run_corpus() -> CorpusTable {
    run_corpus_with(&BTreeMap::new())
}

/// Runs the suite, replacing the computed value of each named entry by the override.
pub fn run_corpus_with(overrides: &BTreeMap<String, Value>) -> CorpusTable {
    let entries = entries();
    let rows: Vec<CorpusRow> = entries
        .par_iter()
        .map(|e| {
            let actual = overrides.get(&e.name).cloned().unwrap_or_else(|| e.run());
            let pass = actual == e.expected;
            CorpusRow {
                name: e.name.clone(),
                criterion: e.criterion,
                pass,
                actual: (!pass).then_some(actual),
                expected: (!pass).then(|| e.expected.clone()),
            }
        })
        .collect();
    let passed = rows.iter().filter(|r| r.pass).count();
    CorpusTable { failed: rows.len() - passed, passed, rows }
}

fn ids(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

fn answer(web: &WebGraph, c: &[&str], f: CatalogueFlavour) -> Value {
    let s = match OneSet::from_ids(web, c) {
        Ok(s) => s,
        Err(e) => return json!({ "error": e.to_string() }),
    };
    match homology(web, &s, f) {
        Ok(a) => summary(&a),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn summary(a: &HomologyAnswer) -> Value {
    json!({
        "family": a.family.to_string(),
        "groups": a.entries.iter().map(|e| e.group.clone()).collect::<Vec<_>>(),
        "total_rank": serde_json::to_value(a.total_rank).expect("rank serializes"),
    })
}

fn golden(name: &str, family: &str, web: fn() -> WebGraph, c: Vec<String>, f: CatalogueFlavour, groups: &[&str], total: Value) -> CorpusEntry {
    let expected = json!({ "family": family, "groups": groups, "total_rank": total });
    CorpusEntry::new(name, 0, expected, move || answer(&web(), &ids(&c), f))
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn golden_entries() -> Vec<CorpusEntry> {
    use CatalogueFlavour::*;
    let tower = json!("infinite (tower)");
    vec![
        golden("unknot/r/check", "unknot", library::unknot, vec![], Check, &["F₂[υ⁻¹,υ]/F₂[υ]"], tower.clone()),
        golden("unknot/r/hat", "unknot", library::unknot, vec![], Hat, &["F₂[υ]"], tower.clone()),
        golden("unknot/r/bar", "unknot", library::unknot, vec![], Bar, &["F₂[υ⁻¹,υ]"], tower.clone()),
        golden("unknot/r/tilde", "unknot", library::unknot, vec![], Tilde, &["F₂"], json!(1)),
        golden("unknot/c/hat", "unknot", library::unknot, strings(&["c01"]), Hat, &["F₂[U]", "F₂[U]"], tower.clone()),
        golden(
            "unlink3/k2/hat",
            "unlink(3)",
            || library::unlink(3),
            strings(&["c03"]),
            Hat,
            &["F₂[υ] ⊕ F₂[υ]⟨−1⟩", "F₂[υ] ⊕ F₂[υ]⟨−1⟩"],
            tower.clone(),
        ),
        golden("theta/hat", "theta", library::theta, strings(&["e1"]), Hat, &["F₂[υ]", "F₂[υ]"], tower.clone()),
        golden("theta/tilde", "theta", library::theta, strings(&["e2"]), Tilde, &["F₂", "F₂"], json!(2)),
        golden(
            "theta_plus_unknot/check",
            "theta_plus_unknot",
            library::theta_plus_unknot,
            strings(&["e1"]),
            Check,
            &["F₂[υ⁻¹,υ]/F₂[υ] ⊕ F₂[υ⁻¹,υ]/F₂[υ]⟨−1⟩"; 2],
            tower.clone(),
        ),
        golden("tetrahedron/hat", "tetrahedron", library::tetrahedron, strings(&["e12", "e34"]), Hat, &["F₂[υ]", "F₂[υ]"], tower.clone()),
        golden("prism1/hat", "prism(1)", || library::prism(1), strings(&["r01"]), Hat, &["0"], json!(0)),
        golden("prism2/s2/hat", "prism(2)", || library::prism(2), library::rung_ids(2), Hat, &["F₂[υ] ⊕ F₂[υ]⟨−1⟩"], tower.clone()),
        golden("prism2/ring/hat", "prism(2)", || library::prism(2), strings(&["a01", "b01"]), Hat, &["F₂[υ]", "F₂[υ]"], tower.clone()),
        golden("prism3/s3/reduced", "prism(3)", || library::prism(3), library::rung_ids(3), Reduced, &["0"], json!(0)),
        golden("prism4/s4/hat", "prism(4)", || library::prism(4), library::rung_ids(4), Hat, &["F₂[υ] ⊕ F₂[υ]⟨−1⟩"], tower.clone()),
        golden("prism5/s5/reduced", "prism(5)", || library::prism(5), library::rung_ids(5), Reduced, &["F₂^{⊕2}"], json!(2)),
        golden("handcuff/hat", "handcuff", library::handcuff, strings(&["r01"]), Hat, &["0"], json!(0)),
        golden("twisted_handcuff/hat", "twisted_handcuff", library::twisted_handcuff, strings(&["r01"]), Hat, &["0"], json!(0)),
        golden("hopf_handcuff/hat", "hopf_handcuff", library::hopf_handcuff, strings(&["r01"]), Hat, &["F₂[υ]"; 4], tower.clone()),
        golden("petersen/s_gamma/reduced", "petersen_embedding", library::petersen, library::rung_ids(5), Reduced, &["F₂^{⊕2}"], json!(2)),
        CorpusEntry::new("recognize/prism5-untagged", 0, json!("prism(5)"), || {
            let w = library::prism(5).with_spatial(None);
            json!(recognize(&w).map(|f| f.to_string()).unwrap_or_else(|e| e.to_string()))
        }),
        CorpusEntry::new("recognize/petersen", 0, json!("petersen_embedding"), || {
            json!(recognize(&library::petersen()).map(|f| f.to_string()).unwrap_or_else(|e| e.to_string()))
        }),
        CorpusEntry::new("spinc/tetrahedron-discrepancy", 0, json!({"catalogued": 2, "naive": 4, "discrepancy": true}), || {
            let w = library::tetrahedron();
            let s = OneSet::from_ids(&w, &["e12", "e34"]).expect("matching");
            let a = homology(&w, &s, CatalogueFlavour::Hat).expect("catalogued");
            serde_json::to_value(a.spinc_count).expect("serializes")
        }),
    ]
}

fn tait_entries() -> Vec<CorpusEntry> {
    let mut v = vec![
        CorpusEntry::new("tait/theta", 1, json!(6), || json!(count_tait(&library::theta()))),
        CorpusEntry::new("tait/l3", 1, json!(6), || json!(count_tait(&library::prism(3)))),
        CorpusEntry::new("tait/petersen", 1, json!(0), || json!(count_tait(&library::petersen()))),
    ];
    for n in 1..=6 {
        v.push(CorpusEntry::new(format!("tait/unlink{n}"), 1, json!(3u64.pow(n as u32)), move || {
            json!(count_tait(&library::unlink(n)))
        }));
    }
    v
}

fn identity_value(w: &WebGraph) -> Value {
    let r = verify_identity(w);
    json!({ "lhs": r.tait_count, "rhs": r.identity_rhs, "ok": r.ok })
}

fn identity_entries() -> Vec<CorpusEntry> {
    type Named = (&'static str, fn() -> WebGraph, u64);
    let named: Vec<Named> = vec![
        ("theta", library::theta, 6),
        ("k4", library::tetrahedron, 6),
        ("l2", || library::prism(2), 12),
        ("l3", || library::prism(3), 6),
        ("petersen", library::petersen, 0),
    ];
    let mut v: Vec<CorpusEntry> = named
        .into_iter()
        .map(|(name, web, count)| {
            CorpusEntry::new(format!("tait-identity/{name}"), 2, json!({"lhs": count, "rhs": count, "ok": true}), move || {
                identity_value(&web())
            })
        })
        .collect();
    for n in 1..=6 {
        let c = 3u64.pow(n as u32);
        v.push(CorpusEntry::new(format!("tait-identity/unlink{n}"), 2, json!({"lhs": c, "rhs": c, "ok": true}), move || {
            identity_value(&library::unlink(n))
        }));
    }
    v.push(CorpusEntry::new("tait-identity/random-200", 2, json!({"graphs": 200, "failures": 0}), || {
        let graphs = random_cubic_multigraphs(8, 2024, 200).expect("valid parameters");
        let failures = graphs
            .par_iter()
            .filter(|w| {
                let r = verify_identity(w);
                count_tait_brute_force(w) != Some(r.tait_count) || !r.ok
            })
            .count();
        json!({ "graphs": graphs.len(), "failures": failures })
    }));
    v
}

fn framed_entries() -> Vec<CorpusEntry> {
    let mut v = Vec::new();
    for n in 1..=6usize {
        for restrict in [false, true] {
            let base: u64 = if restrict { 3 } else { 4 };
            let name = format!("framed{}/unlink{n}", if restrict { "-restricted" } else { "" });
            v.push(CorpusEntry::new(name, 3, json!(base.pow(n as u32 - 1)), move || {
                match catalogue::framed_rank(&library::unlink(n), "c01", restrict) {
                    Ok(f) => json!(f.rank),
                    Err(e) => json!({ "error": e.to_string() }),
                }
            }));
        }
    }
    v.push(CorpusEntry::new("framed/theta_plus_unknot", 3, json!(12), || {
        match catalogue::framed_rank(&library::theta_plus_unknot(), "c1", false) {
            Ok(f) => json!(f.rank),
            Err(e) => json!({ "error": e.to_string() }),
        }
    }));
    v
}

fn verdict(web: &WebGraph, s: &OneSet) -> Value {
    serde_json::to_value(catalogue::vanishing_check(web, s)).expect("verdict serializes")
}

fn vanishing_entries() -> Vec<CorpusEntry> {
    let only = |w: &WebGraph| enumerate_onesets(w).remove(0);
    let rungs = |w: &WebGraph, n: usize| OneSet::from_ids(w, &ids(&library::rung_ids(n))).expect("rung 1-set");
    vec![
        CorpusEntry::new("vanishing/l1", 4, json!({"verdict": "zero", "rule": "bridge", "total_rank": 0}), move || {
            let w = library::prism(1);
            verdict(&w, &only(&w))
        }),
        CorpusEntry::new(
            "vanishing/twisted_handcuff",
            4,
            json!({"verdict": "zero", "rule": "three_point", "total_rank": 0}),
            move || {
                let w = library::twisted_handcuff();
                verdict(&w, &only(&w))
            },
        ),
        CorpusEntry::new("vanishing/l3-s3", 4, json!({"verdict": "zero", "rule": "three_point", "total_rank": 0}), move || {
            let w = library::prism(3);
            verdict(&w, &rungs(&w, 3))
        }),
        CorpusEntry::new("vanishing/l5-s5", 4, json!({"verdict": "nonzero", "rule": "excision", "total_rank": 2}), move || {
            let w = library::prism(5);
            verdict(&w, &rungs(&w, 5))
        }),
        CorpusEntry::new(
            "vanishing/petersen-s_gamma",
            4,
            json!({"verdict": "nonzero", "rule": "excision", "total_rank": 2}),
            move || {
                let w = library::petersen();
                verdict(&w, &rungs(&w, 5))
            },
        ),
    ]
}

fn foam_entries() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry::new("foam/cp2-degree2", 5, json!("2"), || {
            json!(to_text(&dirac_index_bifold(int(4), int(1), int(4), int(4))))
        }),
        CorpusEntry::new("foam/cp2-degree4", 5, json!("2"), || {
            json!(to_text(&dirac_index_bifold(int(1), int(1), int(4), int(16))))
        }),
        CorpusEntry::new("foam/b_plus-genus", 5, json!((0..=10).map(|g| g.to_string()).collect::<Vec<_>>()), || {
            json!((0..=10u64).map(|g| to_text(&b_plus(2 * g, int(0)))).collect::<Vec<_>>())
        }),
        CorpusEntry::new(
            "foam/admissible-threshold",
            5,
            json!({"b_plus_1": false, "b_plus_3_2": true, "b_plus_2": true, "b_plus_1_2": false}),
            || {
                json!({
                    "b_plus_1": admissible_foam(2, int(0)),
                    "b_plus_3_2": admissible_foam(3, int(0)),
                    "b_plus_2": admissible_foam(4, int(0)),
                    "b_plus_1_2": admissible_foam(1, int(0)),
                })
            },
        ),
    ]
}

/// Whether each flavour of the unknot pattern matches its tower over a width-20 window.
pub fn unknot_window_check() -> Value {
    let bc = unknot_pattern(-15, 15);
    let window = (-10, 9);
    let mut out = serde_json::Map::new();
    for (f, shape) in [(Flavour::Check, Shape::TowerUp), (Flavour::Hat, Shape::TowerDown), (Flavour::Bar, Shape::BiTower)] {
        let dims = build_flavour(&bc, f).and_then(|fc| {
            fc.complex.homology(window).map_err(|e| crate::floerblocks::BlockError::NotValidated(e.to_string()))
        });
        let expected = GradedModule::single(shape, 0).dims_in_window(window);
        out.insert(format!("{f:?}").to_lowercase(), json!(dims.map(|d| d == expected).unwrap_or(false)));
    }
    Value::Object(out)
}

/// Total homology of the cone of `υ` on the check complex of the unknot pattern, away from truncation.
pub fn unknot_cone_dimension() -> usize {
    let bc = unknot_pattern(-15, 15);
    let fc = build_flavour(&bc, Flavour::Check).expect("unknot pattern validates");
    let upsilon = unknot_upsilon(&fc);
    let cone = fc.complex.cone(&fc.complex, &upsilon, -1).expect("υ is a chain map");
    cone.homology((-10, 9)).expect("cone is a complex").values().sum()
}

/// Flavour differentials, chain maps and exactness on synthesized complexes.
pub fn synthesized_suite(seed: u64, count: usize, max_gens: usize) -> Value {
    let complexes = validated_complexes(seed, count, max_gens);
    let bad: Vec<usize> = complexes
        .par_iter()
        .enumerate()
        .filter_map(|(k, bc)| {
            let ok = build_ijp(bc).is_ok_and(|ijp| {
                let squares = [&ijp.check, &ijp.hat, &ijp.bar]
                    .iter()
                    .all(|fc| fc.differential().mul(fc.differential()).is_zero());
                squares && ijp.chain_map_failures().is_empty() && ijp.exactness().all()
            });
            (!ok).then_some(k)
        })
        .collect();
    json!({
        "complexes": complexes.len(),
        "within_limit": complexes.iter().all(|c| c.len() <= max_gens),
        "failures": bad,
    })
}

fn floer_entries() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry::new("floer/unknot-window", 6, json!({"check": true, "hat": true, "bar": true}), unknot_window_check),
        CorpusEntry::new("floer/unknot-upsilon-cone", 6, json!(1), || json!(unknot_cone_dimension())),
        CorpusEntry::new("floer/synthesized-50", 6, json!({"complexes": 50, "within_limit": true, "failures": []}), || {
            synthesized_suite(7, 50, 40)
        }),
    ]
}

/// Webs whose every 1-set enters the vertex-relation sweep.
pub fn corpus_webs() -> Vec<(&'static str, WebGraph)> {
    vec![
        ("unknot", library::unknot()),
        ("unlink3", library::unlink(3)),
        ("theta", library::theta()),
        ("theta_plus_unknot", library::theta_plus_unknot()),
        ("tetrahedron", library::tetrahedron()),
        ("prism1", library::prism(1)),
        ("prism2", library::prism(2)),
        ("prism3", library::prism(3)),
        ("prism4", library::prism(4)),
        ("prism5", library::prism(5)),
        ("twisted_handcuff", library::twisted_handcuff()),
        ("hopf_handcuff", library::hopf_handcuff()),
        ("petersen", library::petersen()),
        ("braid_closure5", library::braid_closure(&[1, 2, 3, 4, -2], 5)),
    ]
}

/// Product of two normal-form monomials by rewriting a word of letters:
/// sort adjacent letters, then replace `u_i u_i` by `U`.
fn rewrite_product(a: &Monomial, b: &Monomial) -> Monomial {
    let mut word: Vec<u32> = Vec::new();
    for m in [a, b] {
        word.extend(std::iter::repeat_n(0, m.u_power as usize));
        word.extend((0..64).filter(|i| m.cycles >> i & 1 == 1).map(|i| i + 1));
    }
    loop {
        let mut changed = false;
        for k in 0..word.len().saturating_sub(1) {
            if word[k] > word[k + 1] {
                word.swap(k, k + 1);
                changed = true;
            }
        }
        if let Some(k) = (0..word.len().saturating_sub(1)).find(|&k| word[k] != 0 && word[k] == word[k + 1]) {
            word.splice(k..k + 2, [0]);
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let u_power = word.iter().filter(|&&l| l == 0).count() as u32;
    let cycles = word.iter().filter(|&&l| l != 0).fold(0u64, |acc, &l| acc | 1 << (l - 1));
    Monomial { u_power, cycles }
}

/// Normal-form monomials in `n` generators of degree `−d` with `d ≤ max_d`.
pub fn normal_forms(n: usize, max_d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for cycles in 0..1u64 << n {
        let w = cycles.count_ones();
        let mut u_power = 0;
        while 2 * u_power + w <= max_d {
            out.push(Monomial { u_power, cycles });
            u_power += 1;
        }
    }
    out
}

fn algebra_entries() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry::new("algebra/vertex-relations", 7, json!({"failures": 0}), || {
            let failures: usize = corpus_webs()
                .par_iter()
                .map(|(_, w)| {
                    enumerate_onesets(w)
                        .iter()
                        .filter(|s| !verify_vertex_relations(w, s).is_ok_and(|r| r.ok()))
                        .count()
                })
                .sum();
            json!({ "failures": failures })
        }),
        CorpusEntry::new("algebra/rewriting", 7, json!({"mismatches": 0}), || {
            let mut mismatches = 0;
            for n in 0..=4 {
                let web = library::unlink(n.max(1));
                let s = OneSet::from_ids(&web, &[]).expect("all-r 1-set");
                let alg = DotAlgebra::new(&web, &s).expect("small algebra");
                let monos: Vec<Monomial> =
                    normal_forms(n, 6).into_iter().filter(|m| (m.cycles >> alg.generator_count()) == 0).collect();
                for a in &monos {
                    for b in &monos {
                        if a.degree() + b.degree() < -6 {
                            continue;
                        }
                        let product = multiply(&alg.monomial(*a), &alg.monomial(*b)).expect("same context");
                        if product != alg.monomial(rewrite_product(a, b)) {
                            mismatches += 1;
                        }
                    }
                }
            }
            json!({ "mismatches": mismatches })
        }),
    ]
}

pub fn entries() -> Vec<CorpusEntry> {
    let mut v = golden_entries();
    v.extend(tait_entries());
    v.extend(identity_entries());
    v.extend(framed_entries());
    v.extend(vanishing_entries());
    v.extend(foam_entries());
    v.extend(floer_entries());
    v.extend(algebra_entries());
    v
}

/// Cross-rule coherence: a zero answer never meets a nonzero verdict and conversely.
pub fn coherence_failures() -> Vec<String> {
    let mut out = Vec::new();
    for (name, w) in corpus_webs() {
        let Ok(family) = recognize(&w) else { continue };
        if family == FamilyId::Unknown {
            continue;
        }
        for s in enumerate_onesets(&w) {
            let v = catalogue::vanishing_check(&w, &s);
            for f in CatalogueFlavour::ALL {
                let Ok(a) = homology(&w, &s, f) else { continue };
                let zero = a.is_zero();
                let nonzero = a.status == catalogue::AnswerStatus::Known && !zero;
                let clash = (zero && v.verdict == catalogue::Verdict::Nonzero)
                    || (nonzero && f == CatalogueFlavour::Reduced && v.verdict == catalogue::Verdict::Zero);
                if clash {
                    out.push(format!("{name} {{{}}} {f}", s.c_edge_ids(&w).join(",")));
                }
            }
        }
    }
    out
}
