//! The dot-operator algebra of a 1-set.
//!
//! Each r-cycle carries a generator `u_i` of degree −1 with `u_i² = U`, and
//! `U` has degree −2. Elements are sets of normal-form monomials
//! `U^a · u_S` with `S` squarefree, over the two-element field.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};

use serde::Serialize;
use thiserror::Error;

use crate::onesets::{r_cycles, OneSet, RCycleDecomposition};
use crate::webmodel::WebGraph;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown edge id {0}")]
    UnknownEdge(String),
    #[error("elements belong to different (web, 1-set) contexts")]
    ContextMismatch,
    #[error("{0} r-cycles exceed the 64 supported generators")]
    TooManyCycles(usize),
    #[error("cannot parse term {0:?}")]
    BadTerm(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    pub u_power: u32,
    /// Bit `i` set when `u_{i+1}` divides the monomial.
    pub cycles: u64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { u_power: 0, cycles: 0 };

    pub fn degree(&self) -> i64 {
        -(2 * self.u_power as i64 + self.cycles.count_ones() as i64)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            u_power: self.u_power + other.u_power + (self.cycles & other.cycles).count_ones(),
            cycles: self.cycles ^ other.cycles,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        match self.u_power {
            0 => {}
            1 => factors.push("U".to_string()),
            k => factors.push(format!("U^{k}")),
        }
        for i in 0..64 {
            if self.cycles >> i & 1 == 1 {
                factors.push(format!("u{}", i + 1));
            }
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    context: u64,
    terms: BTreeSet<Monomial>,
}

impl AlgebraElement {
    pub fn terms(&self) -> &BTreeSet<Monomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `None` for zero or inhomogeneous elements.
    pub fn degree(&self) -> Option<i64> {
        let mut degrees = self.terms.iter().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        if self.context != other.context {
            return Err(AlgebraError::ContextMismatch);
        }
        let terms = self.terms.symmetric_difference(&other.terms).copied().collect();
        Ok(AlgebraElement { context: self.context, terms })
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Distributes, applies `u_i² = U` and cancels pairs.
pub fn multiply(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
    if a.context != b.context {
        return Err(AlgebraError::ContextMismatch);
    }
    let mut terms = BTreeSet::new();
    for x in &a.terms {
        for y in &b.terms {
            let m = x.mul(y);
            if !terms.remove(&m) {
                terms.insert(m);
            }
        }
    }
    Ok(AlgebraElement { context: a.context, terms })
}

/// The algebra attached to a (web, 1-set) pair.
#[derive(Clone, Debug)]
pub struct DotAlgebra<'w> {
    web: &'w WebGraph,
    cycles: RCycleDecomposition,
    context: u64,
}

impl<'w> DotAlgebra<'w> {
    pub fn new(web: &'w WebGraph, s: &OneSet) -> Result<Self, AlgebraError> {
        let cycles = r_cycles(web, s);
        if cycles.n() > 64 {
            return Err(AlgebraError::TooManyCycles(cycles.n()));
        }
        let mut h = DefaultHasher::new();
        web.to_json().hash(&mut h);
        s.mask().hash(&mut h);
        Ok(DotAlgebra { web, cycles, context: h.finish() })
    }

    pub fn generator_count(&self) -> usize {
        self.cycles.n()
    }

    pub fn monomial(&self, m: Monomial) -> AlgebraElement {
        AlgebraElement { context: self.context, terms: BTreeSet::from([m]) }
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { context: self.context, terms: BTreeSet::new() }
    }

    pub fn one(&self) -> AlgebraElement {
        self.monomial(Monomial::ONE)
    }

    pub fn u(&self) -> AlgebraElement {
        self.monomial(Monomial { u_power: 1, cycles: 0 })
    }

    /// `u_i` for the r-cycle with index `i` (0-based).
    pub fn cycle_generator(&self, i: usize) -> AlgebraElement {
        self.monomial(Monomial { u_power: 0, cycles: 1 << i })
    }

    /// The dot on an edge: zero on c-edges, the cycle generator on r-edges.
    pub fn dot(&self, e: usize) -> AlgebraElement {
        match self.cycles.cycle_of_edge(e) {
            Some(i) => self.cycle_generator(i),
            None => self.zero(),
        }
    }

    pub fn dot_generator(&self, edge_id: &str) -> Result<AlgebraElement, AlgebraError> {
        let e = self
            .web
            .edge_index(edge_id)
            .ok_or_else(|| AlgebraError::UnknownEdge(edge_id.to_string()))?;
        Ok(self.dot(e))
    }

    /// Parses sums of products such as `e1*e1*e4 + U*e2 + 1` over edge ids.
    pub fn parse(&self, expr: &str) -> Result<AlgebraElement, AlgebraError> {
        let mut total = self.zero();
        for term in expr.split('+') {
            let mut product = self.one();
            for factor in term.split('*') {
                let factor = factor.trim();
                let value = match factor {
                    "" => return Err(AlgebraError::BadTerm(term.trim().to_string())),
                    "1" => self.one(),
                    "0" => self.zero(),
                    "U" => self.u(),
                    id => self.dot_generator(id)?,
                };
                product = multiply(&product, &value)?;
            }
            total = total.add(&product)?;
        }
        Ok(total)
    }

    pub fn vertex_relations(&self) -> VertexRelationReport {
        let web = self.web;
        let mut failures = Vec::new();
        for v in 0..web.vertex_count() {
            let [a, b, c] = web.slots(v).map(|h| self.dot(h.edge));
            let m = |x: &AlgebraElement, y: &AlgebraElement| multiply(x, y).expect("same context");
            let s = |x: &AlgebraElement, y: &AlgebraElement| x.add(y).expect("same context");
            let sum = s(&s(&a, &b), &c);
            let pairwise = s(&s(&m(&a, &b), &m(&b, &c)), &m(&c, &a));
            let product = m(&m(&a, &b), &c);
            let checks = [
                ("sum", sum.is_zero()),
                ("pairwise", pairwise == self.u()),
                ("product", product.is_zero()),
            ];
            for (relation, holds) in checks {
                if !holds {
                    failures.push(RelationFailure {
                        vertex: web.vertex_id(v).to_string(),
                        relation: relation.to_string(),
                    });
                }
            }
        }
        VertexRelationReport { vertices_checked: web.vertex_count(), failures }
    }

    /// Rank over `F₂[U]`, counted from normal forms in two consecutive degrees
    /// beyond the largest squarefree degree.
    pub fn rank_over_u(&self) -> u128 {
        let n = self.generator_count();
        count_normal_forms(n, n) + count_normal_forms(n, n + 1)
    }
}

/// Number of normal-form monomials of degree `−d` in `n` generators.
pub fn count_normal_forms(n: usize, d: usize) -> u128 {
    let mut binom = 1u128;
    let mut total = 0;
    for j in 0..=n.min(d) {
        if (d - j).is_multiple_of(2) {
            total += binom;
        }
        binom = binom * (n - j) as u128 / (j + 1) as u128;
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub vertex: String,
    pub relation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRelationReport {
    pub vertices_checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl VertexRelationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn dot_generator(web: &WebGraph, s: &OneSet, edge_id: &str) -> Result<AlgebraElement, AlgebraError> {
    DotAlgebra::new(web, s)?.dot_generator(edge_id)
}

pub fn verify_vertex_relations(web: &WebGraph, s: &OneSet) -> Result<VertexRelationReport, AlgebraError> {
    Ok(DotAlgebra::new(web, s)?.vertex_relations())
}

pub fn rank_over_u(web: &WebGraph, s: &OneSet) -> Result<u128, AlgebraError> {
    Ok(DotAlgebra::new(web, s)?.rank_over_u())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::onesets::enumerate_onesets;

    #[test]
    fn theta_dots() {
        let t = library::theta();
        let s = OneSet::from_ids(&t, &["e1"]).unwrap();
        let alg = DotAlgebra::new(&t, &s).unwrap();
        assert!(alg.dot_generator("e1").unwrap().is_zero());
        assert_eq!(alg.dot_generator("e2").unwrap(), alg.dot_generator("e3").unwrap());
        assert_eq!(alg.parse("e2*e3").unwrap(), alg.u());
        assert_eq!(alg.rank_over_u(), 2);
        assert!(alg.vertex_relations().ok());
        assert_eq!(alg.dot_generator("x"), Err(AlgebraError::UnknownEdge("x".into())));
    }

    #[test]
    fn products_in_two_generators() {
        let u = library::unlink(2);
        let s = OneSet::from_ids(&u, &[]).unwrap();
        let alg = DotAlgebra::new(&u, &s).unwrap();
        let (a, b) = (alg.cycle_generator(0), alg.cycle_generator(1));
        assert_eq!(multiply(&a, &a).unwrap(), alg.u());
        let ab = multiply(&a, &b).unwrap();
        assert!(ab.add(&multiply(&b, &a).unwrap()).unwrap().is_zero());
        let sum = a.add(&b).unwrap();
        assert!(multiply(&sum, &sum).unwrap().is_zero());
        assert_eq!(alg.parse("c01*c01*c02 + c02*U").unwrap().to_string(), "0");
        assert_eq!(ab.degree(), Some(-2));
        assert_eq!(alg.rank_over_u(), 4);
    }

    #[test]
    fn contexts_do_not_mix() {
        let t = library::theta();
        let sets = enumerate_onesets(&t);
        let a = DotAlgebra::new(&t, &sets[0]).unwrap().one();
        let b = DotAlgebra::new(&t, &sets[1]).unwrap().one();
        assert_eq!(multiply(&a, &b), Err(AlgebraError::ContextMismatch));
    }

    #[test]
    fn relations_on_named_webs() {
        for w in [library::tetrahedron(), library::prism(2), library::prism(1), library::petersen()] {
            for s in enumerate_onesets(&w) {
                assert!(verify_vertex_relations(&w, &s).unwrap().ok());
                let n = r_cycles(&w, &s).n();
                assert_eq!(rank_over_u(&w, &s).unwrap(), 1 << n);
            }
        }
    }
}
