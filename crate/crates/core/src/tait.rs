//! Tait colourings and the even 1-set identity.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::onesets::{enumerate_onesets, r_cycles};
use crate::webmodel::{WebBuilder, WebGraph};

/// Number of proper 3-edge-colourings.
pub fn count_tait(web: &WebGraph) -> u64 {
    if web.edges().iter().any(|e| e.is_loop()) {
        return 0;
    }
    let circles = web.circle_edges().count() as u32;
    let order = edge_order(web);
    let mut used = vec![0u8; web.vertex_count()];
    colourings(web, &order, 0, &mut used) * 3u64.pow(circles)
}

/// Segment edges in breadth-first order, so each new edge touches coloured ones.
fn edge_order(web: &WebGraph) -> Vec<usize> {
    let mut seen_edge = vec![false; web.edge_count()];
    let mut seen_vertex = vec![false; web.vertex_count()];
    let mut order = Vec::new();
    for root in 0..web.vertex_count() {
        if seen_vertex[root] {
            continue;
        }
        seen_vertex[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for h in web.slots(v) {
                if !seen_edge[h.edge] {
                    seen_edge[h.edge] = true;
                    order.push(h.edge);
                }
                let ends = web.edge(h.edge).ends().expect("segment");
                let w = ends[1 - h.end as usize].vertex;
                if !seen_vertex[w] {
                    seen_vertex[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn colourings(web: &WebGraph, order: &[usize], k: usize, used: &mut [u8]) -> u64 {
    let Some(&e) = order.get(k) else { return 1 };
    let [a, b] = web.edge(e).ends().expect("segment");
    let (a, b) = (a.vertex, b.vertex);
    let mut total = 0;
    for colour in 0..3 {
        let bit = 1u8 << colour;
        if used[a] & bit != 0 || used[b] & bit != 0 {
            continue;
        }
        used[a] |= bit;
        used[b] |= bit;
        total += colourings(web, order, k + 1, used);
        used[a] &= !bit;
        used[b] &= !bit;
    }
    total
}

/// Plain enumeration of all `3^#edges` assignments. Refuses more than 20 edges.
pub fn count_tait_brute_force(web: &WebGraph) -> Option<u64> {
    let m = web.edge_count();
    if m > 20 {
        return None;
    }
    let mut colour = vec![0u8; m];
    let mut count = 0;
    loop {
        let proper = (0..web.vertex_count()).all(|v| {
            let [x, y, z] = web.slots(v).map(|h| colour[h.edge]);
            x != y && y != z && x != z
        });
        if proper {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == m {
                return Some(count);
            }
            colour[k] += 1;
            if colour[k] < 3 {
                break;
            }
            colour[k] = 0;
            k += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenOneSet {
    pub index: usize,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TaitReport {
    #[serde(rename = "lhs")]
    pub tait_count: u64,
    #[serde(rename = "rhs")]
    pub identity_rhs: u64,
    pub even_onesets: Vec<EvenOneSet>,
    pub ok: bool,
}

/// Compares the Tait count with the sum of `2^n(s)` over even 1-sets.
pub fn verify_identity(web: &WebGraph) -> TaitReport {
    let tait_count = count_tait(web);
    let even_onesets: Vec<EvenOneSet> = enumerate_onesets(web)
        .iter()
        .enumerate()
        .filter_map(|(index, s)| {
            let d = r_cycles(web, s);
            d.c_endpoint_count
                .iter()
                .all(|c| c % 2 == 0)
                .then_some(EvenOneSet { index, n: d.n() })
        })
        .collect();
    let identity_rhs = even_onesets.iter().map(|e| 1u64 << e.n).sum();
    TaitReport { tait_count, identity_rhs, even_onesets, ok: tait_count == identity_rhs }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("max_vertices must be even, got {0}")]
    Odd(usize),
    #[error("max_vertices must lie in 2..=12, got {0}")]
    OutOfRange(usize),
}

/// Seeded connected cubic multigraphs (loops and parallel edges allowed) with
/// an even number of vertices in `2..=max_vertices`.
pub fn random_cubic_multigraphs(
    max_vertices: usize,
    seed: u64,
    count: usize,
) -> Result<Vec<WebGraph>, GeneratorError> {
    if max_vertices % 2 == 1 {
        return Err(GeneratorError::Odd(max_vertices));
    }
    if !(2..=12).contains(&max_vertices) {
        return Err(GeneratorError::OutOfRange(max_vertices));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = 2 * rng.gen_range(1..=max_vertices / 2);
        let mut stubs: Vec<usize> = (0..3 * n).map(|k| k / 3).collect();
        stubs.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = stubs.chunks(2).map(|p| (p[0], p[1])).collect();
        if !connected(n, &pairs) {
            continue;
        }
        let mut b = WebBuilder::new().vertices((0..n).map(|v| format!("v{v:02}")));
        for (k, &(x, y)) in pairs.iter().enumerate() {
            b = b.edge(format!("e{k:02}"), &format!("v{x:02}"), &format!("v{y:02}"));
        }
        out.push(b.build().expect("configuration model yields cubic webs"));
    }
    Ok(out)
}

fn connected(n: usize, pairs: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in pairs {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        parent[ra] = rb;
    }
    let r = root(&mut parent, 0);
    (0..n).all(|v| root(&mut parent, v) == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn named_counts() {
        assert_eq!(count_tait(&library::theta()), 6);
        assert_eq!(count_tait(&library::prism(3)), 6);
        assert_eq!(count_tait(&library::petersen()), 0);
        assert_eq!(count_tait(&library::tetrahedron()), 6);
        for n in 0..=6u32 {
            assert_eq!(count_tait(&library::unlink(n as usize)), 3u64.pow(n));
        }
        assert_eq!(count_tait(&library::handcuff()), 0);
    }

    #[test]
    fn brute_force_agrees() {
        for w in [library::theta(), library::prism(2), library::prism(3), library::tetrahedron()] {
            assert_eq!(Some(count_tait(&w)), count_tait_brute_force(&w));
        }
        assert_eq!(count_tait_brute_force(&library::prism(7)), None);
    }

    #[test]
    fn identity_examples() {
        let r = verify_identity(&library::prism(2));
        assert_eq!((r.tait_count, r.identity_rhs, r.ok), (12, 12, true));
        let r = verify_identity(&library::theta());
        assert_eq!((r.tait_count, r.identity_rhs, r.even_onesets.len()), (6, 6, 3));
        let r = verify_identity(&library::petersen());
        assert!(r.ok && r.even_onesets.is_empty());
    }

    #[test]
    fn generator() {
        let gs = random_cubic_multigraphs(4, 1, 5).unwrap();
        assert_eq!(gs.len(), 5);
        assert!(gs.iter().all(|g| g.vertex_count() <= 4 && g.vertex_count() % 2 == 0));
        assert_eq!(random_cubic_multigraphs(8, 7, 100).unwrap().len(), 100);
        assert_eq!(random_cubic_multigraphs(3, 1, 1), Err(GeneratorError::Odd(3)));
        assert_eq!(random_cubic_multigraphs(14, 1, 1), Err(GeneratorError::OutOfRange(14)));
        let a: Vec<String> = random_cubic_multigraphs(8, 9, 10).unwrap().iter().map(|g| g.to_json()).collect();
        let b: Vec<String> = random_cubic_multigraphs(8, 9, 10).unwrap().iter().map(|g| g.to_json()).collect();
        assert_eq!(a, b);
    }
}
