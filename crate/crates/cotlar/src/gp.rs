//! Graph products of cyclic groups: one vertex group per vertex of a
//! simplicial graph, with vertex groups commuting across edges. Elements
//! are kept in a canonical syllable normal form: merge and cancel
//! syllables that can meet through commuting swaps, then order the
//! reduced syllable sequence greedily by smallest vertex index among the
//! frontable syllables.
//!
//! The associated right-angled Coxeter system (order 2 on edges, infinite
//! otherwise) is the type of the building these groups act on; see the
//! `building` module.

use std::collections::BTreeSet;

use crate::coxeter::{CoxeterOrder, CoxeterSystem};
use crate::error::{Error, Result};
use crate::group::Group;

/// Order of a vertex group: cyclic of finite order >= 2, or infinite
/// cyclic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexOrder {
    Finite(u32),
    Z,
}

/// A syllable: a nontrivial element of one vertex group. For finite
/// vertex groups the exponent is a residue in 1..order-1; for Z it is any
/// nonzero integer.
pub type Syllable = (usize, i64);

/// An element of the graph product in canonical syllable normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GPElement {
    syllables: Vec<Syllable>,
}

impl GPElement {
    pub fn identity() -> Self {
        GPElement {
            syllables: Vec::new(),
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }
}

/// A graph product descriptor: vertex names, vertex group orders and the
/// undirected edge set.
#[derive(Debug, Clone)]
pub struct GraphProduct {
    names: Vec<String>,
    orders: Vec<VertexOrder>,
    adjacency: Vec<Vec<bool>>,
    type_system: CoxeterSystem,
}

impl GraphProduct {
    pub fn new(
        names: Vec<String>,
        orders: Vec<VertexOrder>,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        let n = names.len();
        if orders.len() != n {
            return Err(Error::BadGraph(format!(
                "{} vertex orders for {} vertices",
                orders.len(),
                n
            )));
        }
        for order in &orders {
            if let VertexOrder::Finite(k) = order {
                if *k < 2 {
                    return Err(Error::BadGraph(format!(
                        "vertex group order {k} must be at least 2"
                    )));
                }
            }
        }
        let mut adjacency = vec![vec![false; n]; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::BadGraph(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::BadGraph(format!("loop at vertex {a}")));
            }
            adjacency[a][b] = true;
            adjacency[b][a] = true;
        }
        // type system: order 2 across edges, free otherwise
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            CoxeterOrder::Finite(1)
                        } else if adjacency[i][j] {
                            CoxeterOrder::Finite(2)
                        } else {
                            CoxeterOrder::Infinite
                        }
                    })
                    .collect()
            })
            .collect();
        let type_system = CoxeterSystem::new(names.clone(), matrix)?;
        Ok(GraphProduct {
            names,
            orders,
            adjacency,
            type_system,
        })
    }

    /// Adjusts the word cap of the underlying type system.
    pub fn with_max_word_len(mut self, cap: usize) -> Self {
        self.type_system = self.type_system.with_max_word_len(cap);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_owned()))
    }

    pub fn order(&self, v: usize) -> VertexOrder {
        self.orders[v]
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        a != b && self.adjacency[a][b]
    }

    /// The right-angled Coxeter system underlying the chamber system.
    pub fn type_system(&self) -> &CoxeterSystem {
        &self.type_system
    }

    fn normalize_exponent(&self, v: usize, e: i64) -> i64 {
        match self.orders[v] {
            VertexOrder::Finite(k) => e.rem_euclid(k as i64),
            VertexOrder::Z => e,
        }
    }

    /// Canonical normal form of an arbitrary syllable sequence.
    pub fn normalize(&self, raw: &[Syllable]) -> Result<GPElement> {
        let n = self.vertex_count();
        let mut reduced: Vec<Syllable> = Vec::with_capacity(raw.len());
        for &(v, e) in raw {
            if v >= n {
                return Err(Error::BadGeneratorIndex { index: v, rank: n });
            }
            self.push_syllable(&mut reduced, v, e);
        }
        Ok(GPElement {
            syllables: self.least_linearization(reduced),
        })
    }

    /// Appends one syllable to a reduced sequence, merging with the
    /// nearest same-vertex syllable reachable through commuting swaps.
    /// The sequence stays reduced: the scan only crosses syllables that
    /// commute with the new vertex, so a merge can never unblock a pair
    /// it was separating.
    fn push_syllable(&self, out: &mut Vec<Syllable>, v: usize, e: i64) {
        let e = self.normalize_exponent(v, e);
        if e == 0 {
            return;
        }
        for i in (0..out.len()).rev() {
            let (w, f) = out[i];
            if w == v {
                let merged = self.normalize_exponent(v, f + e);
                if merged == 0 {
                    out.remove(i);
                } else {
                    out[i] = (v, merged);
                }
                return;
            }
            if !self.commutes(w, v) {
                break;
            }
        }
        out.push((v, e));
    }

    /// Greedy smallest-vertex-first linearization of the reduced
    /// sequence's shuffle class.
    fn least_linearization(&self, mut rem: Vec<Syllable>) -> Vec<Syllable> {
        let mut out = Vec::with_capacity(rem.len());
        while !rem.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rem.len() {
                let frontable = (0..i).all(|j| self.commutes(rem[j].0, rem[i].0));
                if frontable && best.is_none_or(|b| rem[i] < rem[b]) {
                    best = Some(i);
                }
            }
            let i = best.expect("nonempty reduced sequence has a frontable syllable");
            out.push(rem.remove(i));
        }
        out
    }

    pub fn gp_identity(&self) -> GPElement {
        GPElement::identity()
    }

    /// The element with a single syllable.
    pub fn syllable_element(&self, v: usize, e: i64) -> Result<GPElement> {
        self.normalize(&[(v, e)])
    }

    pub fn gp_multiply(&self, a: &GPElement, b: &GPElement) -> Result<GPElement> {
        let mut raw = Vec::with_capacity(a.syllable_count() + b.syllable_count());
        raw.extend_from_slice(&a.syllables);
        raw.extend_from_slice(&b.syllables);
        self.normalize(&raw)
    }

    pub fn gp_invert(&self, a: &GPElement) -> GPElement {
        let raw: Vec<Syllable> = a.syllables.iter().rev().map(|&(v, e)| (v, -e)).collect();
        self.normalize(&raw).expect("inverse of a valid element")
    }

    /// All elements with at most `radius` syllables, sorted. For an
    /// infinite cyclic vertex group the syllable exponents are truncated
    /// to |e| <= radius, a finite window rather than a subgroup-closed
    /// ball.
    pub fn gp_ball(&self, radius: usize) -> Result<Vec<GPElement>> {
        let mut gens: Vec<GPElement> = Vec::new();
        for v in 0..self.vertex_count() {
            match self.orders[v] {
                VertexOrder::Finite(k) => {
                    for e in 1..k as i64 {
                        gens.push(self.syllable_element(v, e)?);
                    }
                }
                VertexOrder::Z => {
                    for e in 1..=radius as i64 {
                        gens.push(self.syllable_element(v, e)?);
                        gens.push(self.syllable_element(v, -e)?);
                    }
                }
            }
        }
        let mut ball: BTreeSet<GPElement> = BTreeSet::new();
        ball.insert(GPElement::identity());
        let mut frontier = vec![GPElement::identity()];
        for depth in 1..=radius {
            let mut next = Vec::new();
            for w in &frontier {
                for g in &gens {
                    let x = self.gp_multiply(w, g)?;
                    if x.syllable_count() == depth && ball.insert(x.clone()) {
                        next.push(x);
                    }
                }
            }
            frontier = next;
        }
        Ok(ball.into_iter().collect())
    }

    /// Parses dot-separated syllables like "a.b2.a" (the inverse of
    /// `format_element`).
    pub fn parse_element(&self, text: &str) -> Result<GPElement> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(GPElement::identity());
        }
        let mut raw = Vec::new();
        for token in text.split('.') {
            let split = token
                .char_indices()
                .find(|(_, c)| c.is_ascii_digit() || *c == '-')
                .map(|(i, _)| i)
                .unwrap_or(token.len());
            let (name, exp) = token.split_at(split);
            let v = self.index_of(name)?;
            let e: i64 = if exp.is_empty() {
                1
            } else {
                exp.parse()
                    .map_err(|_| Error::UnknownGenerator(token.to_owned()))?
            };
            raw.push((v, e));
        }
        self.normalize(&raw)
    }

    /// Renders an element like "a.b2.a" (exponents beyond 1 are suffixed).
    pub fn format_element(&self, g: &GPElement) -> String {
        if g.is_identity() {
            return "e".to_owned();
        }
        let parts: Vec<String> = g
            .syllables
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    self.names[v].clone()
                } else {
                    format!("{}{}", self.names[v], e)
                }
            })
            .collect();
        parts.join(".")
    }
}

impl Group for GraphProduct {
    type Elem = GPElement;

    fn identity(&self) -> GPElement {
        GPElement::identity()
    }
    fn multiply(&self, a: &GPElement, b: &GPElement) -> Result<GPElement> {
        self.gp_multiply(a, b)
    }
    fn invert(&self, a: &GPElement) -> GPElement {
        self.gp_invert(a)
    }
    fn ball(&self, radius: usize) -> Result<Vec<GPElement>> {
        self.gp_ball(radius)
    }
    fn render(&self, e: &GPElement) -> String {
        self.format_element(e)
    }
}

/// Common small descriptors used across the test and acceptance suites.
pub mod products {
    use super::*;

    /// Free product of a cyclic group of order 2 and one of order 3
    /// (vertices a, b; no edge).
    pub fn z2_star_z3() -> GraphProduct {
        GraphProduct::new(
            vec!["a".into(), "b".into()],
            vec![VertexOrder::Finite(2), VertexOrder::Finite(3)],
            &[],
        )
        .expect("valid descriptor")
    }

    /// Free product of two order-2 groups: the infinite dihedral group.
    pub fn z2_star_z2() -> GraphProduct {
        GraphProduct::new(
            vec!["a".into(), "b".into()],
            vec![VertexOrder::Finite(2), VertexOrder::Finite(2)],
            &[],
        )
        .expect("valid descriptor")
    }

    /// Direct product of two order-2 groups (one edge).
    pub fn z2_times_z2() -> GraphProduct {
        GraphProduct::new(
            vec!["a".into(), "b".into()],
            vec![VertexOrder::Finite(2), VertexOrder::Finite(2)],
            &[(0, 1)],
        )
        .expect("valid descriptor")
    }

    /// Path a - b - c with orders 2, 2, 3.
    pub fn path_z2_z2_z3() -> GraphProduct {
        GraphProduct::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                VertexOrder::Finite(2),
                VertexOrder::Finite(2),
                VertexOrder::Finite(3),
            ],
            &[(0, 1), (1, 2)],
        )
        .expect("valid descriptor")
    }

    /// Free product of an order-3 and an order-2 group (vertices u, b).
    pub fn z3_star_z2() -> GraphProduct {
        GraphProduct::new(
            vec!["u".into(), "b".into()],
            vec![VertexOrder::Finite(3), VertexOrder::Finite(2)],
            &[],
        )
        .expect("valid descriptor")
    }
}

#[cfg(test)]
mod tests {
    use super::products::*;
    use super::*;

    #[test]
    fn rejects_bad_descriptors() {
        assert!(GraphProduct::new(
            vec!["a".into()],
            vec![VertexOrder::Finite(1)],
            &[]
        )
        .is_err());
        assert!(GraphProduct::new(
            vec!["a".into()],
            vec![VertexOrder::Finite(2)],
            &[(0, 0)]
        )
        .is_err());
        assert!(GraphProduct::new(
            vec!["a".into(), "b".into()],
            vec![VertexOrder::Finite(2), VertexOrder::Finite(2)],
            &[(0, 2)]
        )
        .is_err());
    }

    #[test]
    fn normalize_examples() {
        let fp = z2_star_z3();
        // involution cancels
        assert!(fp.normalize(&[(0, 1), (0, 1)]).unwrap().is_identity());
        // within-vertex merge in Z3
        assert_eq!(
            fp.normalize(&[(1, 1), (1, 1)]).unwrap().syllables(),
            &[(1, 2)]
        );
        // commuting swap moves the smaller vertex forward
        let dp = z2_times_z2();
        assert_eq!(
            dp.normalize(&[(1, 1), (0, 1)]).unwrap().syllables(),
            &[(0, 1), (1, 1)]
        );
        // negative exponents normalize to residues
        assert_eq!(fp.normalize(&[(1, -1)]).unwrap().syllables(), &[(1, 2)]);
    }

    #[test]
    fn group_laws() {
        let fp = z2_star_z3();
        for g in fp.gp_ball(3).unwrap() {
            let ginv = fp.gp_invert(&g);
            assert!(fp.gp_multiply(&g, &ginv).unwrap().is_identity());
            for h in fp.gp_ball(2).unwrap() {
                for k in fp.gp_ball(1).unwrap() {
                    let left = fp
                        .gp_multiply(&fp.gp_multiply(&g, &h).unwrap(), &k)
                        .unwrap();
                    let right = fp
                        .gp_multiply(&g, &fp.gp_multiply(&h, &k).unwrap())
                        .unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn ball_sizes() {
        // free product of two involutions is infinite dihedral: 2k+1
        let d = z2_star_z2();
        for k in 0..=5 {
            assert_eq!(d.gp_ball(k).unwrap().len(), 2 * k + 1);
        }
        // direct product of two involutions has four elements
        let dp = z2_times_z2();
        assert_eq!(dp.gp_ball(2).unwrap().len(), 4);
        assert_eq!(dp.gp_ball(4).unwrap().len(), 4);
        // alternating syllable counts for Z2 * Z3
        let fp = z2_star_z3();
        assert_eq!(fp.gp_ball(1).unwrap().len(), 4);
        assert_eq!(fp.gp_ball(2).unwrap().len(), 8);
        assert_eq!(fp.gp_ball(3).unwrap().len(), 14);
    }

    #[test]
    fn z_vertex_groups_normalize() {
        let raag = GraphProduct::new(
            vec!["x".into(), "y".into()],
            vec![VertexOrder::Z, VertexOrder::Z],
            &[(0, 1)],
        )
        .unwrap();
        // free abelian: everything collapses to sorted syllables
        let g = raag.normalize(&[(1, 2), (0, 3), (1, -2), (0, -1)]).unwrap();
        assert_eq!(g.syllables(), &[(0, 2)]);
        let h = raag.normalize(&[(1, 5), (0, -1)]).unwrap();
        assert_eq!(h.syllables(), &[(0, -1), (1, 5)]);
    }

    #[test]
    fn normal_form_is_constant_on_shuffles_and_minimal() {
        // brute-force oracle: expand all raw sequences reachable from the
        // normal form by adjacent swaps of commuting syllables; every
        // member normalizes identically and shuffles preserve length
        let p = path_z2_z2_z3();
        for g in p.gp_ball(4).unwrap() {
            let mut seen = std::collections::HashSet::new();
            let mut queue = vec![g.syllables().to_vec()];
            seen.insert(g.syllables().to_vec());
            while let Some(w) = queue.pop() {
                assert_eq!(p.normalize(&w).unwrap(), g);
                assert_eq!(w.len(), g.syllable_count(), "shuffles preserve length");
                for i in 0..w.len().saturating_sub(1) {
                    if p.commutes(w[i].0, w[i + 1].0) {
                        let mut nb = w.clone();
                        nb.swap(i, i + 1);
                        if seen.insert(nb.clone()) {
                            queue.push(nb);
                        }
                    }
                }
            }
        }
    }
}
