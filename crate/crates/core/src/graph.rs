//! Simple undirected graphs on vertices `0..n` with a dense adjacency
//! matrix, plus the generators used throughout the crate.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::finitefield::{residue_set, PrimeModulus};

/// An undirected edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Orders the endpoints. Loops are rejected.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::Loop(a)),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter {
                what: "cycle length",
                requirement: "n >= 3",
                got: n as u64,
            });
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.link(u, (u + 1) % n);
        }
        Ok(g)
    }

    /// The path 0 - 1 - ... - (n-1).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.link(u - 1, u);
        }
        g
    }

    /// Builds a graph from endpoint pairs in either order.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange(a, b, n));
            }
            let e = Edge::new(a, b)?;
            if g.has_edge(e) {
                return Err(Error::DuplicateEdge(e.u, e.v));
            }
            g.link(e.u, e.v);
        }
        Ok(g)
    }

    /// Paley graph on GF(p): `u ~ v` iff `u - v` is a nonzero square.
    pub fn paley(m: PrimeModulus) -> Result<Self> {
        let p = m.get();
        if p < 5 {
            return Err(Error::ModulusTooSmall(p, 5));
        }
        if !m.minus_one_is_square() {
            return Err(Error::NotOneModFour(p));
        }
        let p = p as usize;
        let mut is_square = vec![false; p];
        for r in residue_set(m) {
            is_square[r as usize] = true;
        }
        let mut g = Graph::empty(p);
        for u in 0..p {
            for v in u + 1..p {
                if is_square[v - u] {
                    g.link(u, v);
                }
            }
        }
        Ok(g)
    }

    /// `q` copies of `K_q` with corresponding vertices of consecutive copies
    /// joined around a cycle. Vertex `j` of copy `i` (both 0-based) is
    /// `i * q + j`. The result is `(q + 1)`-regular on `q^2` vertices.
    pub fn ring_of_cliques(q: usize) -> Result<Self> {
        if q < 3 {
            return Err(Error::InvalidParameter {
                what: "ring of cliques",
                requirement: "q >= 3",
                got: q as u64,
            });
        }
        let mut g = Graph::empty(q * q);
        for copy in 0..q {
            let base = copy * q;
            for a in 0..q {
                for b in a + 1..q {
                    g.link(base + a, base + b);
                }
            }
            let next = (copy + 1) % q * q;
            for j in 0..q {
                g.link(base + j, next + j);
            }
        }
        Ok(g)
    }

    /// A uniformly random graph with exactly `m` edges.
    ///
    /// The generator is xoshiro256++ seeded through SplitMix64
    /// (`Xoshiro256PlusPlus::seed_from_u64`). Edges are drawn by a partial
    /// Fisher–Yates shuffle over the pairs `(u, v)`, `u < v`, listed in
    /// lexicographic order: step `i` swaps slot `i` with a slot drawn
    /// uniformly from `i..N` and keeps slot `i`.
    pub fn random(n: usize, m: usize, seed: u64) -> Result<Self> {
        let max = n * n.saturating_sub(1) / 2;
        if m > max {
            return Err(Error::TooManyEdges { n, m, max });
        }
        let mut pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
        for i in 0..m {
            let j = rng.gen_range(i..pairs.len());
            pairs.swap(i, j);
        }
        let mut g = Graph::empty(n);
        for &(u, v) in &pairs[..m] {
            g.link(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.adjacent(e.u, e.v)
    }

    /// Edges in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| self.adj[u * self.n + v])
                .map(move |v| Edge { u, v })
        })
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[u * self.n..(u + 1) * self.n];
        row.iter().enumerate().filter(|(_, &a)| a).map(|(v, _)| v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u * self.n..(u + 1) * self.n]
            .iter()
            .filter(|&&a| a)
            .count()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// The common degree if every vertex has it. The graph with no
    /// vertices has no degree.
    pub fn regularity(&self) -> Option<usize> {
        let degrees = self.degree_sequence();
        let k = *degrees.first()?;
        degrees.iter().all(|&d| d == k).then_some(k)
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Self> {
        if !self.has_edge(e) {
            return Err(Error::MissingEdge(e.u, e.v));
        }
        let mut g = self.clone();
        g.set(e.u, e.v, false);
        g.m -= 1;
        Ok(g)
    }

    pub fn add_edge(&self, e: Edge) -> Result<Self> {
        if e.v >= self.n {
            return Err(Error::VertexOutOfRange(e.u, e.v, self.n));
        }
        if self.has_edge(e) {
            return Err(Error::DuplicateEdge(e.u, e.v));
        }
        let mut g = self.clone();
        g.link(e.u, e.v);
        Ok(g)
    }

    /// Places `other` after `self`, shifting its vertices by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let mut g = Graph::empty(self.n + other.n);
        for e in self.edges() {
            g.link(e.u, e.v);
        }
        for e in other.edges() {
            g.link(self.n + e.u, self.n + e.v);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::NotAPermutation(self.n));
        }
        let mut seen = vec![false; self.n];
        for &t in perm {
            if t >= self.n || std::mem::replace(&mut seen[t], true) {
                return Err(Error::NotAPermutation(self.n));
            }
        }
        let mut g = Graph::empty(self.n);
        for e in self.edges() {
            g.link(perm[e.u], perm[e.v]);
        }
        Ok(g)
    }

    /// Row-major 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        self.adj.iter().map(|&a| if a { 1.0 } else { 0.0 }).collect()
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges().collect()
    }

    fn set(&mut self, u: usize, v: usize, value: bool) {
        self.adj[u * self.n + v] = value;
        self.adj[v * self.n + u] = value;
    }

    // callers guarantee u != v and that the edge is new
    fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.adjacent(u, v));
        self.set(u, v, true);
        self.m += 1;
    }
}
