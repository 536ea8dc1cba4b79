//! The eight acceptance criteria, each checked against an oracle written here.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::io::Write;
use std::time::{Duration, Instant};

use webfloer::catalogue::{self, Rule, Verdict};
use webfloer::corpus::{corpus_webs, run_corpus};
use webfloer::dotalgebra::{multiply, verify_vertex_relations, DotAlgebra, Monomial};
use webfloer::floerblocks::synth::{unknot_pattern, unknot_upsilon, validated_complexes};
use webfloer::floerblocks::{build_flavour, build_ijp, Flavour, FlavourComplex};
use webfloer::foamcalc::{admissible_foam, b_plus, dirac_index_bifold};
use webfloer::gf2::BitMatrix;
use webfloer::library;
use webfloer::onesets::{enumerate_onesets, OneSet};
use webfloer::rational::{int, q};
use webfloer::tait::{count_tait, random_cubic_multigraphs, verify_identity};
use webfloer::webmodel::WebGraph;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, elapsed: Duration, limit: Duration) -> Outcome {
    let mut failures = failures;
    if elapsed > limit {
        failures.push(format!("took {elapsed:?}, limit {limit:?}"));
    }
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() { format!("{elapsed:.2?}") } else { failures.join("; ") },
    }
}

/// Proper 3-edge-colourings by exhaustive backtracking over edges in id order.
fn oracle_tait(w: &WebGraph) -> u64 {
    let mut segments = Vec::new();
    let mut circles = 0u32;
    for e in w.edges() {
        match e.ends() {
            None => circles += 1,
            Some([a, b]) if a.vertex == b.vertex => return 0,
            Some([a, b]) => segments.push((a.vertex, b.vertex)),
        }
    }
    fn go(segments: &[(usize, usize)], k: usize, used: &mut [[bool; 3]]) -> u64 {
        let Some(&(a, b)) = segments.get(k) else { return 1 };
        let mut total = 0;
        for c in 0..3 {
            if !used[a][c] && !used[b][c] {
                used[a][c] = true;
                used[b][c] = true;
                total += go(segments, k + 1, used);
                used[a][c] = false;
                used[b][c] = false;
            }
        }
        total
    }
    let mut used = vec![[false; 3]; w.vertex_count()];
    go(&segments, 0, &mut used) * 3u64.pow(circles)
}

/// `Σ 2^{n(s)}` over even 1-sets, from all `2^E` edge subsets and a union-find on r-edges.
fn oracle_identity_rhs(w: &WebGraph) -> u64 {
    let m = w.edge_count();
    let mut total = 0u64;
    for mask in 0u64..1 << m {
        let c = |e: usize| mask >> e & 1 == 1;
        let mut c_slots = vec![0u32; w.vertex_count()];
        for (e, edge) in w.edges().iter().enumerate() {
            if let (Some([a, b]), true) = (edge.ends(), c(e)) {
                c_slots[a.vertex] += 1;
                c_slots[b.vertex] += 1;
            }
        }
        if c_slots.iter().any(|&k| k != 1) {
            continue;
        }
        let mut parent: Vec<usize> = (0..w.vertex_count()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut circles = 0u32;
        for (e, edge) in w.edges().iter().enumerate() {
            match edge.ends() {
                None if !c(e) => circles += 1,
                Some([a, b]) if !c(e) => {
                    let (ra, rb) = (find(&mut parent, a.vertex), find(&mut parent, b.vertex));
                    parent[ra] = rb;
                }
                _ => {}
            }
        }
        let mut size = vec![0usize; w.vertex_count()];
        for v in 0..w.vertex_count() {
            let r = find(&mut parent, v);
            size[r] += 1;
        }
        let components: Vec<usize> = size.into_iter().filter(|&s| s > 0).collect();
        if components.iter().all(|s| s % 2 == 0) {
            total += 1 << (components.len() as u32 + circles);
        }
    }
    total
}

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    let mut cases: Vec<(String, WebGraph, u64)> = vec![
        ("theta".into(), library::theta(), 6),
        ("L3".into(), library::prism(3), 6),
        ("Petersen".into(), library::petersen(), 0),
    ];
    for n in 1..=6 {
        cases.push((format!("U{n}"), library::unlink(n), 3u64.pow(n as u32)));
    }
    for (name, w, expected) in cases {
        let t = Instant::now();
        let got = count_tait(&w);
        slowest = slowest.max(t.elapsed());
        if got != expected {
            failures.push(format!("{name}: {got} != {expected}"));
        }
    }
    outcome(failures, slowest, Duration::from_secs(1))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut webs: Vec<(String, WebGraph)> = vec![
        ("theta".into(), library::theta()),
        ("K4".into(), library::tetrahedron()),
        ("L2".into(), library::prism(2)),
        ("L3".into(), library::prism(3)),
        ("Petersen".into(), library::petersen()),
    ];
    webs.extend((1..=6).map(|n| (format!("U{n}"), library::unlink(n))));
    match random_cubic_multigraphs(8, 2024, 200) {
        Ok(graphs) => webs.extend(graphs.into_iter().enumerate().map(|(k, w)| (format!("random #{k}"), w))),
        Err(e) => failures.push(e.to_string()),
    }
    for (name, w) in &webs {
        let r = verify_identity(w);
        let (lhs, rhs) = (oracle_tait(w), oracle_identity_rhs(w));
        if !r.ok || r.tait_count != lhs || r.identity_rhs != rhs || lhs != rhs {
            failures.push(format!("{name}: report {}/{} ok={}, oracle {lhs}/{rhs}", r.tait_count, r.identity_rhs, r.ok));
        }
    }
    let l2 = verify_identity(&library::prism(2));
    if (l2.tait_count, l2.identity_rhs) != (12, 12) {
        failures.push(format!("L2: {} = {}", l2.tait_count, l2.identity_rhs));
    }
    outcome(failures, t.elapsed(), Duration::from_secs(60))
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=6u32 {
        let w = library::unlink(n as usize);
        for (restrict, base) in [(false, 4u64), (true, 3)] {
            match catalogue::framed_rank(&w, "c01", restrict) {
                Ok(f) if f.rank == base.pow(n - 1) => {}
                Ok(f) => failures.push(format!("U{n} restrict={restrict}: {} != {}", f.rank, base.pow(n - 1))),
                Err(e) => failures.push(format!("U{n}: {e}")),
            }
        }
    }
    outcome(failures, t.elapsed(), Duration::from_secs(5))
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let mut failures = Vec::new();
    let rungs = |w: &WebGraph, n: usize| {
        let ids = library::rung_ids(n);
        let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
        OneSet::from_ids(w, &ids).expect("rungs form a 1-set")
    };
    let l1 = library::prism(1);
    let twisted = library::twisted_handcuff();
    let l3 = library::prism(3);
    let l5 = library::prism(5);
    let petersen = library::petersen();
    let cases: Vec<(&str, &WebGraph, OneSet, Verdict, Rule, Option<usize>)> = vec![
        ("L1", &l1, enumerate_onesets(&l1).remove(0), Verdict::Zero, Rule::Bridge, Some(0)),
        ("twisted handcuff", &twisted, enumerate_onesets(&twisted).remove(0), Verdict::Zero, Rule::ThreePoint, Some(0)),
        ("L3 s3", &l3, rungs(&l3, 3), Verdict::Zero, Rule::ThreePoint, Some(0)),
        ("L5 s5", &l5, rungs(&l5, 5), Verdict::Nonzero, Rule::Excision, Some(2)),
        ("Petersen s_gamma", &petersen, rungs(&petersen, 5), Verdict::Nonzero, Rule::Excision, Some(2)),
    ];
    for (name, w, s, verdict, rule, total) in cases {
        let v = catalogue::vanishing_check(w, &s);
        if v.verdict != verdict || v.rule != rule || v.total_rank != total {
            failures.push(format!("{name}: {v:?}"));
        }
    }
    outcome(failures, t.elapsed(), Duration::from_secs(5))
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    let mut failures = Vec::new();
    if dirac_index_bifold(int(4), int(1), int(4), int(4)) != int(2) {
        failures.push("CP2 degree 2 row".into());
    }
    if dirac_index_bifold(int(1), int(1), int(4), int(16)) != int(2) {
        failures.push("CP2 degree 4 row".into());
    }
    for g in 0..=10 {
        if b_plus(2 * g, int(0)) != int(g as i64) {
            failures.push(format!("b_plus genus {g}"));
        }
    }
    for b1 in 0..=8u64 {
        for s in [-4i64, 0, 4] {
            let bp = q(b1 as i64, 2) - q(s, 4);
            if admissible_foam(b1, int(s)) != (bp > int(1)) {
                failures.push(format!("admissible b1={b1} s={s}"));
            }
        }
    }
    if admissible_foam(2, int(0)) || !admissible_foam(3, int(0)) {
        failures.push("threshold at b+ = 1".into());
    }
    outcome(failures, t.elapsed(), Duration::from_secs(1))
}

fn homology_dim(d: &BitMatrix) -> usize {
    d.cols() - 2 * d.rank()
}

/// `rank f_*` from `dim H(cone f) = dim H(A) + dim H(B) − 2 rank f_*`.
fn induced_rank_via_cone(f: &BitMatrix, da: &BitMatrix, db: &BitMatrix) -> usize {
    let cone = BitMatrix::block2(da, &BitMatrix::zeros(da.rows(), db.cols()), f, db);
    (homology_dim(da) + homology_dim(db) - homology_dim(&cone)) / 2
}

fn exact_at(f: &BitMatrix, a: &FlavourComplex, g: &BitMatrix, b: &FlavourComplex, c: &FlavourComplex) -> bool {
    let (da, db, dc) = (a.differential(), b.differential(), c.differential());
    let rf = induced_rank_via_cone(f, da, db);
    let rg = induced_rank_via_cone(g, db, dc);
    let composite = induced_rank_via_cone(&g.mul(f), da, dc);
    composite == 0 && rf + rg == homology_dim(db)
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let mut failures = Vec::new();
    let bc = unknot_pattern(-15, 15);
    let window = (-10i64, 9i64);
    let towers: [(Flavour, fn(i64) -> usize); 3] = [
        (Flavour::Check, |g| usize::from(g >= 0)),
        (Flavour::Hat, |g| usize::from(g <= 0)),
        (Flavour::Bar, |_| 1),
    ];
    for (f, pattern) in towers {
        match build_flavour(&bc, f).map(|fc| fc.complex.homology(window)) {
            Ok(Ok(dims)) => {
                for g in window.0..=window.1 {
                    let got = dims.get(&g).copied().unwrap_or(0);
                    if got != pattern(g) {
                        failures.push(format!("{f:?} at {g}: {got} != {}", pattern(g)));
                    }
                }
            }
            other => failures.push(format!("{f:?}: {other:?}")),
        }
    }
    match build_flavour(&bc, Flavour::Check) {
        Ok(fc) => {
            let upsilon = unknot_upsilon(&fc);
            let d = fc.differential();
            let cone = BitMatrix::block2(d, &BitMatrix::zeros(d.rows(), d.cols()), &upsilon, d);
            let gr: Vec<i64> = fc.complex.gradings.iter().chain(&fc.complex.gradings).copied().collect();
            let at = |h: i64| (0..gr.len()).filter(|&k| gr[k] == h).collect::<Vec<_>>();
            let mut dims = std::collections::BTreeMap::new();
            for g in window.0..=window.1 {
                let (here, up, down) = (at(g), at(g + 1), at(g - 1));
                let rank_out = cone.select(&down, &here).rank();
                let rank_in = cone.select(&here, &up).rank();
                dims.insert(g, here.len() - rank_out - rank_in);
            }
            let total: usize = dims.values().sum();
            if total != 1 {
                failures.push(format!("cone of upsilon has total dimension {total}"));
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    let complexes = validated_complexes(7, 50, 40);
    if complexes.len() != 50 || complexes.iter().any(|c| c.len() > 40) {
        failures.push("synthesized set is not 50 complexes of at most 40 generators".into());
    }
    for (k, bc) in complexes.iter().enumerate() {
        let ijp = match build_ijp(bc) {
            Ok(x) => x,
            Err(e) => {
                failures.push(format!("complex {k}: {e}"));
                continue;
            }
        };
        for fc in [&ijp.check, &ijp.hat, &ijp.bar] {
            if !fc.differential().mul(fc.differential()).is_zero() {
                failures.push(format!("complex {k}: {:?} differential squares to nonzero", fc.flavour));
            }
        }
        let chain = |f: &BitMatrix, a: &FlavourComplex, b: &FlavourComplex| f.mul(a.differential()) == b.differential().mul(f);
        if !chain(&ijp.i, &ijp.bar, &ijp.check) || !chain(&ijp.j, &ijp.check, &ijp.hat) || !chain(&ijp.p, &ijp.hat, &ijp.bar) {
            failures.push(format!("complex {k}: i/j/p not chain maps"));
        }
        let exact = exact_at(&ijp.i, &ijp.bar, &ijp.j, &ijp.check, &ijp.hat)
            && exact_at(&ijp.j, &ijp.check, &ijp.p, &ijp.hat, &ijp.bar)
            && exact_at(&ijp.p, &ijp.hat, &ijp.i, &ijp.bar, &ijp.check);
        if !exact {
            failures.push(format!("complex {k}: sequence not exact"));
        }
    }
    outcome(failures, t.elapsed(), Duration::from_secs(30))
}

/// Letters: 0 is `U`, `i ≥ 1` is `u_i`.
fn to_word(m: &Monomial) -> Vec<u8> {
    let mut w = vec![0u8; m.u_power as usize];
    w.extend((0..64u8).filter(|i| m.cycles >> i & 1 == 1).map(|i| i + 1));
    w
}

/// Every irreducible word reachable under `ba → ab` (b > a) and `u_i u_i → U`.
fn rewrite_all(start: Vec<u8>) -> BTreeSet<Vec<u8>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([start]);
    let mut normal = BTreeSet::new();
    while let Some(w) = queue.pop_front() {
        if !seen.insert(w.clone()) {
            continue;
        }
        let mut reducible = false;
        for k in 0..w.len().saturating_sub(1) {
            if w[k] > w[k + 1] {
                reducible = true;
                let mut x = w.clone();
                x.swap(k, k + 1);
                queue.push_back(x);
            }
            if w[k] != 0 && w[k] == w[k + 1] {
                reducible = true;
                let mut x = w.clone();
                x.splice(k..k + 2, [0]);
                queue.push_back(x);
            }
        }
        if !reducible {
            normal.insert(w);
        }
    }
    normal
}

fn criterion_7() -> Outcome {
    let t = Instant::now();
    let mut failures = Vec::new();
    for (name, w) in corpus_webs() {
        for (k, s) in enumerate_onesets(&w).iter().enumerate() {
            match verify_vertex_relations(&w, s) {
                Ok(r) if r.ok() => {}
                Ok(r) => failures.push(format!("{name} 1-set {k}: {:?}", r.failures)),
                Err(e) => failures.push(format!("{name} 1-set {k}: {e}")),
            }
        }
    }
    let mut pairs = 0usize;
    for n in 1..=4usize {
        let web = library::unlink(n);
        let s = OneSet::from_ids(&web, &[]).expect("all-r 1-set");
        let alg = DotAlgebra::new(&web, &s).expect("algebra");
        let mut monos = Vec::new();
        for cycles in 0u64..1 << n {
            for u_power in 0..=3u32 {
                let m = Monomial { u_power, cycles };
                if -m.degree() <= 6 {
                    monos.push(m);
                }
            }
        }
        for a in &monos {
            for b in &monos {
                if -(a.degree() + b.degree()) > 6 {
                    continue;
                }
                pairs += 1;
                let mut word = to_word(a);
                word.extend(to_word(b));
                let normal = rewrite_all(word);
                if normal.len() != 1 {
                    failures.push(format!("{a} * {b}: {} normal forms", normal.len()));
                    continue;
                }
                let nf = normal.into_iter().next().unwrap();
                let expected = Monomial {
                    u_power: nf.iter().filter(|&&l| l == 0).count() as u32,
                    cycles: nf.iter().filter(|&&l| l != 0).fold(0, |acc, &l| acc | 1 << (l - 1)),
                };
                let got = multiply(&alg.monomial(*a), &alg.monomial(*b)).expect("same algebra");
                if got != alg.monomial(expected) {
                    failures.push(format!("n={n}: {a} * {b}"));
                }
            }
        }
    }
    if pairs == 0 {
        failures.push("no pairs checked".into());
    }
    outcome(failures, t.elapsed(), Duration::from_secs(30))
}

fn criterion_8() -> Outcome {
    let t = Instant::now();
    let mut failures = Vec::new();
    let reference = serde_json::to_string(&run_corpus()).expect("corpus serializes");
    let once = t.elapsed();
    if !run_corpus().ok() {
        failures.push("corpus has failing rows".into());
    }
    for threads in [1, 2, 4] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
        let again = serde_json::to_string(&pool.install(run_corpus)).expect("corpus serializes");
        if again != reference {
            failures.push(format!("output differs with {threads} threads"));
        }
    }
    outcome(failures, once, Duration::from_secs(180))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 tait counts", criterion_1),
        ("2 tait identity", criterion_2),
        ("3 framed ranks", criterion_3),
        ("4 vanishing", criterion_4),
        ("5 foam index calibration", criterion_5),
        ("6 floer block suite", criterion_6),
        ("7 dot algebra", criterion_7),
        ("8 determinism and performance", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let o = run();
        let line = format!("{} criterion {name}: {}\n", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        std::io::stderr().write_all(line.as_bytes()).expect("stderr");
        if !o.pass {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
