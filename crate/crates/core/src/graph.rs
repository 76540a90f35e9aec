//! Small undirected graphs over a fixed universe of vertex slots.
//!
//! A [`Graph`] keeps full-width adjacency rows together with an active
//! mask. Localization, vertex deletion and edge localization only shrink the
//! active mask and re-mask the rows, so vertex labels survive every
//! operation and results of different operation orders can be compared
//! with `==`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    universe: usize,
    active: VertexSet,
    adj: [VertexSet; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph with `n` active vertices `0..n`.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::capacity(format!(
                "{n} vertices exceed the {MAX_VERTICES}-slot universe"
            )));
        }
        Ok(Graph {
            universe: n,
            active: VertexSet::prefix(n),
            adj: [VertexSet::EMPTY; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency masks over slots `0..n`.
    ///
    /// The rows must be symmetric and loop-free.
    pub fn from_rows(n: usize, rows: &[u64]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        if rows.len() != n {
            return Err(Error::invalid("row count does not match vertex count"));
        }
        let mask = VertexSet::prefix(n).bits();
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row >> u & 1 == 1 {
                return Err(Error::invalid(format!("row {u} is out of range or has a loop")));
            }
            g.adj[u] = VertexSet::from_bits(row);
        }
        for u in 0..n {
            for v in g.adj[u] {
                if !g.adj[v].contains(u) {
                    return Err(Error::invalid(format!("adjacency not symmetric at {u},{v}")));
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b {
            return Err(Error::invalid(format!("loop at vertex {a}")));
        }
        if !self.active.contains(a) || !self.active.contains(b) {
            return Err(Error::invalid(format!("edge {a}{b} uses an inactive vertex")));
        }
        self.adj[a] = self.adj[a].with(b);
        self.adj[b] = self.adj[b].with(a);
        Ok(())
    }

    #[inline]
    pub fn universe_size(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn active(&self) -> VertexSet {
        self.active
    }

    /// n(G), the number of active vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.active.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.active.is_empty()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.active.iter().map(|v| self.adj[v].len()).sum::<usize>() / 2
    }

    /// Adjacency row of `v`; empty for inactive slots.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        if v < MAX_VERTICES {
            self.adj[v]
        } else {
            VertexSet::EMPTY
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.neighbors(a).contains(b)
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.active.contains(v)
    }

    pub(crate) fn rows(&self) -> &[VertexSet; MAX_VERTICES] {
        &self.adj
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for a in self.active {
            for b in self.adj[a] {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.active.iter().map(|v| self.degree(v)).min()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.active.iter().filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.active.iter().any(|v| self.adj[v].is_empty())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.active.iter().all(|v| self.adj[v].len() + 1 == n)
    }

    pub(crate) fn check_subset(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.active) {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "vertex set {} contains inactive vertices {}",
                s,
                s - self.active
            )))
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if self.active.contains(v) {
            Ok(())
        } else {
            Err(Error::invalid(format!("vertex {v} is not active")))
        }
    }

    pub(crate) fn check_edge(&self, a: usize, b: usize) -> Result<()> {
        if self.has_edge(a, b) {
            Ok(())
        } else {
            Err(Error::invalid(format!("{a}{b} is not an edge")))
        }
    }

    #[inline]
    pub(crate) fn open_neighborhood_unchecked(&self, s: VertexSet) -> VertexSet {
        let mut acc = VertexSet::EMPTY;
        for u in s {
            acc = acc | self.adj[u];
        }
        acc - s
    }

    /// N(S): vertices outside `s` adjacent to some member of `s`.
    pub fn neighborhood(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_subset(s)?;
        Ok(self.open_neighborhood_unchecked(s))
    }

    /// N[S] = S ∪ N(S).
    pub fn closed_neighborhood(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_subset(s)?;
        Ok(s | self.open_neighborhood_unchecked(s))
    }

    /// Keeps only the vertices in `keep` (intersected with the active set).
    pub(crate) fn restrict(&self, keep: VertexSet) -> Graph {
        let active = self.active & keep;
        let mut adj = [VertexSet::EMPTY; MAX_VERTICES];
        for v in active {
            adj[v] = self.adj[v] & active;
        }
        Graph {
            universe: self.universe,
            active,
            adj,
        }
    }

    /// G_S = G − N[S].
    pub fn localize(&self, s: VertexSet) -> Result<Graph> {
        self.check_subset(s)?;
        Ok(self.localize_unchecked(s))
    }

    #[inline]
    pub(crate) fn localize_unchecked(&self, s: VertexSet) -> Graph {
        let closed = s | self.open_neighborhood_unchecked(s);
        self.restrict(self.active - closed)
    }

    /// Induced subgraph on the complement of `a`.
    pub fn delete_vertices(&self, a: VertexSet) -> Result<Graph> {
        self.check_subset(a)?;
        Ok(self.restrict(self.active - a))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.restrict(self.active.without(v)))
    }

    /// G − ab: same vertices, edge removed.
    pub fn delete_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_edge(a, b)?;
        let mut g = self.clone();
        g.adj[a] = g.adj[a].without(b);
        g.adj[b] = g.adj[b].without(a);
        Ok(g)
    }

    /// G_ab = G − (N(a) ∪ N(b)). Both endpoints disappear as well.
    pub fn edge_localize(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_edge(a, b)?;
        Ok(self.restrict(self.active - (self.adj[a] | self.adj[b])))
    }

    /// Connected components as masked subgraphs, ordered by smallest label.
    pub fn components(&self) -> Vec<Graph> {
        self.component_sets()
            .into_iter()
            .map(|c| self.restrict(c))
            .collect()
    }

    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut seen = VertexSet::EMPTY;
        for start in self.active {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u] - comp {
                    comp = comp.with(w);
                    queue.push_back(w);
                }
            }
            seen = seen | comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    /// Relabels the active vertices to `0..n` preserving their order.
    ///
    /// Returns the compacted graph and, for each new label, the old label.
    pub fn compact(&self) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = self.active.to_vec();
        let mut new_of = [usize::MAX; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut adj = [VertexSet::EMPTY; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            adj[i] = self.adj[v].iter().map(|w| new_of[w]).collect();
        }
        let g = Graph {
            universe: old.len(),
            active: VertexSet::prefix(old.len()),
            adj,
        };
        (g, old)
    }

    /// True when the active set is exactly `0..n` and the universe has no spare slots.
    pub fn is_compact(&self) -> bool {
        self.active == VertexSet::prefix(self.universe)
    }

    /// Applies `perm` (old label → new label) to a compact graph.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if !self.is_compact() || perm.len() != self.universe {
            return Err(Error::invalid("relabel needs a compact graph and a full permutation"));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.universe || seen.contains(p) {
                return Err(Error::invalid("relabel map is not a permutation"));
            }
            seen = seen.with(p);
        }
        let mut adj = [VertexSet::EMPTY; MAX_VERTICES];
        for u in 0..self.universe {
            adj[perm[u]] = self.adj[u].iter().map(|w| perm[w]).collect();
        }
        Ok(Graph {
            universe: self.universe,
            active: self.active,
            adj,
        })
    }

    // --- constructors -------------------------------------------------

    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::invalid("complete graph needs n >= 1"));
        }
        let mut g = Graph::empty(n)?;
        let all = VertexSet::prefix(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        Ok(g)
    }

    /// Cycle 0-1-…-(n−1)-0.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::invalid("cycle needs n >= 3"));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Path 0-1-…-(n−1).
    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::invalid("path needs n >= 1"));
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// K_{m,n} with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
        if m == 0 || n == 0 {
            return Err(Error::invalid("complete bipartite graph needs both parts nonempty"));
        }
        let mut g = Graph::empty(m + n)?;
        for a in 0..m {
            for b in m..m + n {
                g.add_edge(a, b)?;
            }
        }
        Ok(g)
    }

    /// G ∪ H on compacted labels; H's vertices follow G's.
    pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
        let (g, _) = g.compact();
        let (h, _) = h.compact();
        let (ng, nh) = (g.universe, h.universe);
        let mut out = Graph::empty(ng + nh)?;
        for u in 0..ng {
            out.adj[u] = g.adj[u];
        }
        for u in 0..nh {
            out.adj[ng + u] = VertexSet::from_bits(h.adj[u].bits() << ng);
        }
        Ok(out)
    }

    /// G + H: disjoint union plus every edge between the two sides.
    pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
        let ng = g.order();
        let mut out = Graph::disjoint_union(g, h)?;
        let left = VertexSet::prefix(ng);
        let right = out.active - left;
        for u in left {
            out.adj[u] = out.adj[u] | right;
        }
        for u in right {
            out.adj[u] = out.adj[u] | left;
        }
        Ok(out)
    }

    /// G ∘ K_p: every vertex of G receives a private K_p joined to it.
    ///
    /// G keeps labels `0..n`; the clique of vertex `i` occupies
    /// `n + i·p .. n + (i+1)·p`.
    pub fn corona_complete(g: &Graph, p: usize) -> Result<Graph> {
        if p == 0 {
            return Err(Error::invalid("corona needs p >= 1"));
        }
        let (g, _) = g.compact();
        let n = g.universe;
        let total = n
            .checked_mul(p + 1)
            .filter(|&t| t <= MAX_VERTICES)
            .ok_or_else(|| Error::capacity(format!("corona of {n} vertices with K_{p} is too large")))?;
        let mut out = Graph::empty(total)?;
        for u in 0..n {
            out.adj[u] = g.adj[u];
        }
        for i in 0..n {
            let base = n + i * p;
            for a in base..base + p {
                out.add_edge(i, a)?;
                for b in a + 1..base + p {
                    out.add_edge(a, b)?;
                }
            }
        }
        Ok(out)
    }

    /// Complement among the active vertices; labels are kept.
    pub fn complement(&self) -> Graph {
        let mut out = self.clone();
        for v in self.active {
            out.adj[v] = (self.active - self.adj[v]).without(v);
        }
        out
    }

    // --- triangles ------------------------------------------------------

    pub fn is_triangle_free(&self) -> bool {
        self.active.iter().all(|u| {
            self.adj[u]
                .iter()
                .filter(|&v| v > u)
                .all(|v| (self.adj[u] & self.adj[v]).is_empty())
        })
    }

    /// Every localization G_x is triangle-free.
    pub fn is_locally_triangle_free(&self) -> bool {
        self.active
            .iter()
            .all(|x| self.localize_unchecked(VertexSet::singleton(x)).is_triangle_free())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("universe", &self.universe)
            .field("active", &self.active)
            .field("edges", &self.edges())
            .finish()
    }
}
