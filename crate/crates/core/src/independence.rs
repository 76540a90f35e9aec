//! Independent sets: tests, enumeration, independence number, differential.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest active order accepted by [`all_independent_sets`].
pub const ENUMERATION_CAP: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    All,
    Maximal,
    Maximum,
}

/// A family of independent sets in ascending bitmask order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSetFamily {
    kind: FamilyKind,
    sets: Vec<VertexSet>,
}

impl IndependentSetFamily {
    fn new(kind: FamilyKind, mut sets: Vec<VertexSet>) -> Self {
        sets.sort_unstable();
        IndependentSetFamily { kind, sets }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.sets.iter()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    pub fn into_sets(self) -> Vec<VertexSet> {
        self.sets
    }
}

impl<'a> IntoIterator for &'a IndependentSetFamily {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

#[inline]
pub(crate) fn is_independent_unchecked(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|u| g.neighbors(u).is_disjoint(s))
}

pub fn is_independent(g: &Graph, s: VertexSet) -> Result<bool> {
    g.check_subset(s)?;
    Ok(is_independent_unchecked(g, s))
}

/// Independence number. The empty graph has α = 0.
pub fn alpha(g: &Graph) -> usize {
    alpha_within(g, g.active())
}

/// α of the subgraph induced on `cand` (which must lie inside the active set).
pub(crate) fn alpha_within(g: &Graph, cand: VertexSet) -> usize {
    let rows = g.rows();
    let mut best = 0;
    branch(rows, cand.bits(), 0, &mut best);
    best
}

fn branch(rows: &[VertexSet], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        if size > *best {
            *best = size;
        }
        return;
    }
    if size + clique_cover_bound(rows, cand) <= *best {
        return;
    }
    // vertex of maximum degree inside cand
    let mut pick = cand.trailing_zeros() as usize;
    let mut pick_deg = (rows[pick].bits() & cand).count_ones();
    let mut rest = cand & (cand - 1);
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (rows[v].bits() & cand).count_ones();
        if d > pick_deg {
            pick = v;
            pick_deg = d;
        }
    }
    if pick_deg == 0 {
        // only isolated vertices are left
        let total = size + cand.count_ones() as usize;
        if total > *best {
            *best = total;
        }
        return;
    }
    let without = cand & !(1u64 << pick);
    branch(rows, without & !rows[pick].bits(), size + 1, best);
    branch(rows, without, size, best);
}

/// Greedy clique cover size of `cand`; an upper bound on α of that subgraph.
fn clique_cover_bound(rows: &[VertexSet], cand: u64) -> usize {
    let mut rest = cand;
    let mut cliques = 0;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= !(1u64 << u);
        let mut common = rest & rows[u].bits();
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            rest &= !(1u64 << w);
            common &= rows[w].bits() & !(1u64 << w);
        }
        cliques += 1;
    }
    cliques
}

/// Inclusion-maximal independent sets, via pivoted Bron–Kerbosch on the complement.
pub fn maximal_independent_sets(g: &Graph) -> IndependentSetFamily {
    IndependentSetFamily::new(FamilyKind::Maximal, maximal_sets_raw(g))
}

pub(crate) fn maximal_sets_raw(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let active = g.active().bits();
    if active == 0 {
        out.push(VertexSet::EMPTY);
        return out;
    }
    let rows = g.rows();
    // non-neighbours among active vertices
    let mut free = [0u64; 64];
    for v in g.active() {
        free[v] = active & !rows[v].bits() & !(1u64 << v);
    }
    expand(&free, 0, active, 0, &mut out);
    out
}

fn expand(free: &[u64; 64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
    if p == 0 {
        if x == 0 {
            out.push(VertexSet::from_bits(r));
        }
        return;
    }
    let mut pivot = 0usize;
    let mut pivot_hits = -1i32;
    let mut px = p | x;
    while px != 0 {
        let u = px.trailing_zeros() as usize;
        px &= px - 1;
        let hits = (p & free[u]).count_ones() as i32;
        if hits > pivot_hits {
            pivot = u;
            pivot_hits = hits;
        }
    }
    let mut todo = p & !free[pivot];
    while todo != 0 {
        let v = todo.trailing_zeros() as usize;
        todo &= todo - 1;
        let bit = 1u64 << v;
        expand(free, r | bit, p & free[v], x & free[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// Maximal independent sets of size α(G).
pub fn maximum_independent_sets(g: &Graph) -> IndependentSetFamily {
    IndependentSetFamily::new(FamilyKind::Maximum, maximum_sets_raw(g))
}

pub(crate) fn maximum_sets_raw(g: &Graph) -> Vec<VertexSet> {
    let maximal = maximal_sets_raw(g);
    let a = maximal.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut out: Vec<VertexSet> = maximal.into_iter().filter(|s| s.len() == a).collect();
    out.sort_unstable();
    out
}

/// Every independent set, ∅ included. Fails above [`ENUMERATION_CAP`] active vertices.
pub fn all_independent_sets(g: &Graph) -> Result<IndependentSetFamily> {
    Ok(IndependentSetFamily::new(FamilyKind::All, all_sets_raw(g)?))
}

pub(crate) fn all_sets_raw(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.order();
    if n > ENUMERATION_CAP {
        return Err(Error::capacity(format!(
            "independent set enumeration limited to {ENUMERATION_CAP} vertices, graph has {n}"
        )));
    }
    let mut out = Vec::new();
    let verts = g.active().to_vec();
    grow(g, &verts, 0, VertexSet::EMPTY, VertexSet::EMPTY, &mut out);
    Ok(out)
}

fn grow(g: &Graph, verts: &[usize], i: usize, cur: VertexSet, blocked: VertexSet, out: &mut Vec<VertexSet>) {
    if i == verts.len() {
        out.push(cur);
        return;
    }
    let v = verts[i];
    grow(g, verts, i + 1, cur, blocked, out);
    if !blocked.contains(v) {
        grow(g, verts, i + 1, cur.with(v), blocked | g.neighbors(v), out);
    }
}

/// ∂(S) = |N(S) − S| − |S|.
pub fn differential(g: &Graph, s: VertexSet) -> Result<i64> {
    let n = g.neighborhood(s)?;
    Ok(n.len() as i64 - s.len() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn brute_alpha(g: &Graph) -> usize {
        let verts = g.active().to_vec();
        (0u64..1 << verts.len())
            .map(|m| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect::<VertexSet>()
            })
            .filter(|&s| is_independent_unchecked(g, s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn is_independent_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_independent(&c5, set(&[0, 2])).unwrap());
        assert!(is_independent(&c5, VertexSet::EMPTY).unwrap());
        assert!(!is_independent(&Graph::complete(3).unwrap(), set(&[0, 1])).unwrap());
        assert!(is_independent(&c5, set(&[9])).is_err());
    }

    #[test]
    fn alpha_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(alpha(&c5), brute_alpha(&c5));
        assert_eq!(alpha(&c5), 2);
        assert_eq!(alpha(&c7), 3);
        for n in 1..8 {
            assert_eq!(alpha(&Graph::complete(n).unwrap()), 1);
            assert_eq!(alpha(&Graph::complete_bipartite(n, n).unwrap()), n);
        }
        assert_eq!(alpha(&Graph::empty(0).unwrap()), 0);
        assert_eq!(alpha(&Graph::empty(6).unwrap()), 6);
    }

    #[test]
    fn maximal_examples() {
        let c5 = maximal_independent_sets(&Graph::cycle(5).unwrap());
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|s| s.len() == 2));

        let k4 = maximal_independent_sets(&Graph::complete(4).unwrap());
        assert_eq!(k4.sets(), &[set(&[0]), set(&[1]), set(&[2]), set(&[3])]);

        let c4 = maximal_independent_sets(&Graph::cycle(4).unwrap());
        assert_eq!(c4.sets(), &[set(&[0, 2]), set(&[1, 3])]);
        assert_eq!(c4.kind(), FamilyKind::Maximal);
    }

    #[test]
    fn maximum_examples() {
        let c7 = maximum_independent_sets(&Graph::cycle(7).unwrap());
        assert_eq!(c7.len(), 7);
        assert!(c7.iter().all(|s| s.len() == 3));

        let k22 = maximum_independent_sets(&Graph::complete_bipartite(2, 2).unwrap());
        assert_eq!(k22.sets(), &[set(&[0, 1]), set(&[2, 3])]);

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let fam = maximum_independent_sets(&two_k2);
        assert_eq!(fam.len(), 4);
        assert!(fam.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn all_sets_examples() {
        let k2 = all_independent_sets(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(k2.sets(), &[VertexSet::EMPTY, set(&[0]), set(&[1])]);
        assert_eq!(all_independent_sets(&Graph::empty(2).unwrap()).unwrap().len(), 4);
        assert_eq!(all_independent_sets(&Graph::cycle(5).unwrap()).unwrap().len(), 11);
        let big = Graph::empty(31).unwrap();
        assert!(matches!(all_independent_sets(&big), Err(Error::Capacity(_))));
    }

    #[test]
    fn differential_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(differential(&c5, VertexSet::EMPTY).unwrap(), 0);
        assert_eq!(differential(&c5, set(&[0])).unwrap(), 1);
        let star = Graph::complete_bipartite(1, 3).unwrap();
        assert_eq!(differential(&star, set(&[0])).unwrap(), 2);
        assert_eq!(differential(&star, set(&[1, 2, 3])).unwrap(), -2);
    }

    #[test]
    fn masked_graph_alpha() {
        let c7 = Graph::cycle(7).unwrap();
        let l = c7.localize(set(&[0])).unwrap();
        assert_eq!(alpha(&l), 2);
        assert_eq!(maximal_independent_sets(&l).sets(), &[set(&[2, 4]), set(&[2, 5]), set(&[3, 5])]);
    }
}
