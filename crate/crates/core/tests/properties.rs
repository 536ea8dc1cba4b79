use proptest::prelude::*;

use webfloer::catalogue::{self, CatalogueFlavour, Rule, Verdict};
use webfloer::corpus::{coherence_failures, corpus_webs};
use webfloer::dotalgebra::{multiply, DotAlgebra, Monomial};
use webfloer::floerblocks::synth::validated_complexes;
use webfloer::floerblocks::{build_ijp, FlavourComplex, GradedComplex};
use webfloer::foamcalc::{b_plus, dirac_index_bifold, moduli_dimension, FoamIndexInput};
use webfloer::gf2::{induced_rank, BitMatrix};
use webfloer::library;
use webfloer::onesets::{enumerate_foam_onesets, enumerate_onesets, is_even, is_oneset, r_cycles, OneSet};
use webfloer::rational::{int, q, Q};
use webfloer::tait::{count_tait, random_cubic_multigraphs, verify_identity};
use webfloer::webmodel::{parse_web, WebBuilder, WebGraph};

/// A seeded cubic multigraph with up to `max_v` vertices and `circles` extra circle edges.
fn web(seed: u64, max_v: usize, circles: usize) -> WebGraph {
    let g = random_cubic_multigraphs(max_v, seed, 1).unwrap().remove(0);
    let mut doc = g.to_document();
    let mut b = WebBuilder::new();
    for v in &doc.vertices {
        b = b.vertex(v.id.clone());
    }
    for e in doc.edges.drain(..) {
        b = b.edge(e.id, &e.ends[0].0, &e.ends[1].0);
    }
    for k in 0..circles {
        b = b.circle(format!("z{k}"));
    }
    b.build().unwrap()
}

fn complex(seed: u64) -> webfloer::floerblocks::BlockComplex {
    validated_complexes(seed, 1, 24).remove(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn web_json_round_trip(seed in any::<u64>(), circles in 0usize..3) {
        let w = web(seed, 8, circles);
        let text = w.to_json();
        let back = parse_web(&text).unwrap();
        prop_assert_eq!(&back, &w);
        prop_assert_eq!(back.to_json(), text);
        let ends: usize = w.edges().iter().map(|e| if e.ends().is_some() { 2 } else { 0 }).sum();
        prop_assert_eq!(ends, 3 * w.vertex_count());
    }

    #[test]
    fn onesets_match_subset_filter(seed in any::<u64>(), circles in 0usize..2) {
        let w = web(seed, 8, circles);
        prop_assume!(w.edge_count() <= 12);
        let sets = enumerate_onesets(&w);
        let mut brute = Vec::new();
        for mask in 0u32..1 << w.edge_count() {
            let ids: Vec<&str> = (0..w.edge_count()).filter(|&e| mask >> e & 1 == 1).map(|e| w.edge_id(e)).collect();
            if is_oneset(&w, &ids).unwrap() {
                brute.push(OneSet::from_ids(&w, &ids).unwrap());
            }
        }
        let mut listed = sets.clone();
        listed.sort_by(|a, b| a.mask().cmp(b.mask()));
        brute.sort_by(|a, b| a.mask().cmp(b.mask()));
        prop_assert_eq!(listed, brute);
        for s in &sets {
            let d = r_cycles(&w, s);
            let mut seen: Vec<usize> = d.cycles.iter().flat_map(|c| c.edges()).collect();
            seen.sort_unstable();
            let r_edges: Vec<usize> = (0..w.edge_count()).filter(|&e| !s.is_c(e)).collect();
            prop_assert_eq!(seen, r_edges);
            prop_assert_eq!(d.c_endpoint_count.iter().sum::<usize>() % 2, 0);
        }
    }

    #[test]
    fn tait_identity_and_colour_symmetry(seed in any::<u64>(), circles in 0usize..3) {
        let w = web(seed, 8, circles);
        let r = verify_identity(&w);
        prop_assert!(r.ok);
        let rhs: u64 = r.even_onesets.iter().map(|e| 1u64 << e.n).sum();
        prop_assert_eq!(rhs, r.identity_rhs);
        if r.tait_count > 0 && w.vertex_count() > 0 {
            prop_assert_eq!(r.tait_count % 6, 0);
        }
    }

    #[test]
    fn algebra_is_associative_and_commutative(
        terms in proptest::collection::vec(proptest::collection::vec((0u32..3, 0u64..16), 0..4), 3),
    ) {
        let w = library::unlink(4);
        let s = OneSet::from_ids(&w, &[]).unwrap();
        let alg = DotAlgebra::new(&w, &s).unwrap();
        let element = |ts: &[(u32, u64)]| {
            ts.iter().fold(alg.zero(), |acc, &(u_power, cycles)| {
                acc.add(&alg.monomial(Monomial { u_power, cycles })).unwrap()
            })
        };
        let (a, b, c) = (element(&terms[0]), element(&terms[1]), element(&terms[2]));
        let m = |x: &_, y: &_| multiply(x, y).unwrap();
        prop_assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
        prop_assert_eq!(m(&a, &b), m(&b, &a));
    }

    #[test]
    fn degree_is_additive(x in (0u32..4, 0u64..16), y in (0u32..4, 0u64..16)) {
        let w = library::unlink(4);
        let s = OneSet::from_ids(&w, &[]).unwrap();
        let alg = DotAlgebra::new(&w, &s).unwrap();
        let (a, b) = (Monomial { u_power: x.0, cycles: x.1 }, Monomial { u_power: y.0, cycles: y.1 });
        let p = multiply(&alg.monomial(a), &alg.monomial(b)).unwrap();
        prop_assert_eq!(p.degree(), Some(a.degree() + b.degree()));
    }

    #[test]
    fn flavour_suite_on_validated_complexes(seed in any::<u64>()) {
        let ijp = build_ijp(&complex(seed)).unwrap();
        for fc in [&ijp.check, &ijp.hat, &ijp.bar] {
            prop_assert!(fc.differential().mul(fc.differential()).is_zero());
        }
        prop_assert!(ijp.chain_map_failures().is_empty());
        prop_assert!(ijp.exactness().all());
    }

    #[test]
    fn cone_is_kernel_plus_cokernel(seed in any::<u64>()) {
        let ijp = build_ijp(&complex(seed)).unwrap();
        let maps: [(&BitMatrix, &FlavourComplex, &FlavourComplex); 3] =
            [(&ijp.i, &ijp.bar, &ijp.check), (&ijp.j, &ijp.check, &ijp.hat), (&ijp.p, &ijp.hat, &ijp.bar)];
        for (f, a, b) in maps {
            let degree = (-2..=2).find(|&d| a.complex.check_chain_map(&b.complex, f, d).is_ok());
            let Some(degree) = degree else {
                prop_assert!(f.is_zero());
                continue;
            };
            let cone = a.complex.cone(&b.complex, f, degree).unwrap();
            let ha = a.complex.total_homology().unwrap();
            let hb = b.complex.total_homology().unwrap();
            let r = induced_rank(f, a.differential(), b.differential());
            prop_assert_eq!(cone.total_homology().unwrap(), (ha - r) + (hb - r));
        }
    }

    #[test]
    fn homology_ignores_basis_order(seed in any::<u64>(), shuffle in any::<u64>()) {
        let ijp = build_ijp(&complex(seed)).unwrap();
        for fc in [&ijp.check, &ijp.hat, &ijp.bar] {
            let n = fc.complex.len();
            let mut order: Vec<usize> = (0..n).collect();
            let mut x = shuffle | 1;
            for k in (1..n).rev() {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                order.swap(k, (x % (k as u64 + 1)) as usize);
            }
            let p: GradedComplex = fc.complex.permuted(&order);
            prop_assert_eq!(p.homology_all().unwrap(), fc.complex.homology_all().unwrap());
        }
    }

    #[test]
    fn moduli_dimension_splits(
        b1 in 0u64..20,
        parts in proptest::collection::vec((-40i64..40, 1i64..5), 5),
    ) {
        let r = |k: usize| -> Q { q(parts[k].0, parts[k].1) };
        let input = FoamIndexInput { b1_r: b1, self_int_r: r(0), c1_sq: r(1), sigma: r(2), c1_dot_c: r(3), c_self_int: r(4) };
        let dirac = dirac_index_bifold(input.c1_sq, input.sigma, input.c1_dot_c, input.c_self_int);
        let dim = moduli_dimension(&input);
        prop_assert_eq!(dim, b_plus(b1, input.self_int_r) + dirac / int(2));
        let integral = FoamIndexInput { self_int_r: int(parts[0].0), c1_sq: int(parts[1].0), sigma: int(parts[2].0), c1_dot_c: int(parts[3].0), c_self_int: int(parts[4].0), b1_r: b1 };
        prop_assert_eq!(32 % *moduli_dimension(&integral).denom(), 0);
    }
}

#[test]
fn petersen_matchings_are_odd() {
    let w = library::petersen();
    let sets = enumerate_onesets(&w);
    assert_eq!(sets.len(), 6);
    assert_eq!(count_tait(&w), 0);
    for s in &sets {
        assert!(!is_even(&w, s));
        assert_eq!(r_cycles(&w, s).c_endpoint_count, vec![5, 5]);
    }
}

#[test]
fn foam_onesets_pass_tetra_rule() {
    let cone = library::cone_foam();
    let sets = enumerate_foam_onesets(&cone).unwrap();
    assert_eq!(sets.len(), 3);
    for s in &sets {
        for p in &cone.tetra_points {
            let c: Vec<usize> = p.facets.iter().copied().filter(|f| s.c_facets.contains(f)).collect();
            assert_eq!(c.len(), 2);
        }
    }
}

#[test]
fn catalogue_coherence_and_provenance() {
    assert!(coherence_failures().is_empty());
    for (name, w) in corpus_webs() {
        for s in enumerate_onesets(&w) {
            for f in CatalogueFlavour::ALL {
                let Ok(a) = catalogue::homology(&w, &s, f) else { continue };
                for e in &a.entries {
                    assert!(!e.provenance.trim().is_empty(), "{name} {f}");
                }
            }
            let v = catalogue::vanishing_check(&w, &s);
            if v.verdict == Verdict::Zero && v.rule == Rule::PscOdd {
                assert!(!is_even(&w, &s), "{name}");
            }
        }
    }
    let l3 = library::prism(3);
    let ids = library::rung_ids(3);
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    assert!(!is_even(&l3, &OneSet::from_ids(&l3, &ids).unwrap()));
}
