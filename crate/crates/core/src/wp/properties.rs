//! Structural predicates around W_p membership: the five W_2 flags, vertex
//! deletion surplus, disjoint extensions of a non-maximum independent set,
//! and closure under localization.

use super::definitional::disjoint_choice;
use super::{member, well_covered_unchecked};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{alpha, all_sets_raw, is_independent_unchecked, maximum_sets_raw};
use crate::vertex_set::VertexSet;

/// Five characterizations of W_2 for a well-covered graph without isolated
/// vertices, each evaluated on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct W2Flags {
    /// G ∈ W_2 by the definition.
    pub in_w2: bool,
    /// ∂(A) ≤ ∂(B) whenever A ⊆ B are independent.
    pub differential_monotone: bool,
    /// Every vertex is a shedding vertex.
    pub all_shedding: bool,
    /// No independent S leaves an isolated vertex in G − N[S].
    pub no_isolating_set: bool,
    /// Every G_v is in W_2 with α(G_v) = α(G) − 1 (vacuous when α(G) = 1).
    pub localizations_in_w2: bool,
}

impl W2Flags {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.in_w2,
            self.differential_monotone,
            self.all_shedding,
            self.no_isolating_set,
            self.localizations_in_w2,
        ]
    }

    pub fn all_equal(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == a[0])
    }
}

pub fn w2_characterizations(g: &Graph) -> Result<W2Flags> {
    if g.is_empty() || g.has_isolated_vertex() {
        return Err(Error::invalid("needs a nonempty graph without isolated vertices"));
    }
    if !well_covered_unchecked(g) {
        return Err(Error::invalid("graph is not well-covered"));
    }
    let ind = all_sets_raw(g)?;
    let diff = |s: VertexSet| g.open_neighborhood_unchecked(s).len() as i64 - s.len() as i64;

    let in_w2 = member(g, 2)?;

    // single-vertex steps suffice: every A ⊆ B in Ind(G) is joined by a chain of them
    let differential_monotone = ind
        .iter()
        .all(|&b| b.iter().all(|v| diff(b.without(v)) <= diff(b)));

    let mut all_shedding = true;
    for v in g.active() {
        if !super::is_shedding(g, v)?.shedding {
            all_shedding = false;
            break;
        }
    }

    let no_isolating_set = ind
        .iter()
        .all(|&s| !g.localize_unchecked(s).has_isolated_vertex());

    let a = alpha(g);
    let mut localizations_in_w2 = true;
    if a >= 2 {
        for v in g.active() {
            let gv = g.localize_unchecked(VertexSet::singleton(v));
            if alpha(&gv) + 1 != a || !member(&gv, 2)? {
                localizations_in_w2 = false;
                break;
            }
        }
    }

    Ok(W2Flags {
        in_w2,
        differential_monotone,
        all_shedding,
        no_isolating_set,
        localizations_in_w2,
    })
}

/// Deletion of a vertex from a W_p graph, seen three ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeletionSurplus {
    /// G − v ∈ W_p, decided from the definition.
    pub in_wp: bool,
    /// min over independent S ⊆ V(G_v) of |N(v) − N(S)|.
    pub min_surplus: usize,
    /// No independent S ⊆ V(G_v) leaves v with at most p − 1 neighbours in G_S.
    pub no_small_local_degree: bool,
}

impl DeletionSurplus {
    pub fn consistent(&self, p: usize) -> bool {
        let surplus_ok = self.min_surplus >= p;
        self.in_wp == surplus_ok && surplus_ok == self.no_small_local_degree
    }
}

/// Meant for G ∈ W_p; that precondition is not re-checked here.
pub fn vertex_deletion_stays_wp(g: &Graph, v: usize, p: usize) -> Result<DeletionSurplus> {
    g.check_vertex(v)?;
    if p == 0 {
        return Err(Error::invalid("p must be at least 1"));
    }
    if g.degree(v) == 0 {
        return Err(Error::invalid(format!("vertex {v} is isolated")));
    }
    let nv = g.neighbors(v);
    let local = g.localize_unchecked(VertexSet::singleton(v));
    let sets = all_sets_raw(&local)?;

    let min_surplus = sets
        .iter()
        .map(|&s| (nv - g.open_neighborhood_unchecked(s)).len())
        .min()
        .expect("the empty set is always present");

    let no_small_local_degree = sets
        .iter()
        .all(|&s| g.localize_unchecked(s).degree(v) + 1 > p);

    let in_wp = member(&g.restrict(g.active().without(v)), p)?;

    Ok(DeletionSurplus {
        in_wp,
        min_surplus,
        no_small_local_degree,
    })
}

/// Which statement `extension_property` checks for part (a).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionReading {
    /// B_i ∩ A = ∅ and A ∪ B_i is a maximum independent set.
    UnionIsMaximum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionReport {
    pub reading: ExtensionReading,
    /// p pairwise disjoint B_i, each disjoint from A, with A ∪ B_i maximum.
    pub part_a: bool,
    /// p − 1 pairwise disjoint maximum independent sets avoiding A (true for p = 1).
    pub part_b: bool,
    pub b_sets: Option<Vec<VertexSet>>,
}

/// Meant for G ∈ W_p without isolated vertices and a non-maximum independent A.
pub fn extension_property(g: &Graph, a: VertexSet, p: usize) -> Result<ExtensionReport> {
    g.check_subset(a)?;
    if p == 0 {
        return Err(Error::invalid("p must be at least 1"));
    }
    if !is_independent_unchecked(g, a) {
        return Err(Error::invalid(format!("{a} is not independent")));
    }
    if a.len() >= alpha(g) {
        return Err(Error::invalid(format!("{a} is a maximum independent set")));
    }
    let max_sets = maximum_sets_raw(g);

    let extensions: Vec<u64> = max_sets
        .iter()
        .filter(|m| a.is_subset(**m))
        .map(|&m| (m - a).bits())
        .collect();
    let b_sets = disjoint_choice(&extensions, p)
        .map(|bs| bs.into_iter().map(VertexSet::from_bits).collect::<Vec<_>>());

    let part_b = if p >= 2 {
        let avoiding: Vec<u64> = max_sets
            .iter()
            .filter(|m| m.is_disjoint(a))
            .map(|m| m.bits())
            .collect();
        disjoint_choice(&avoiding, p - 1).is_some()
    } else {
        true
    };

    Ok(ExtensionReport {
        reading: ExtensionReading::UnionIsMaximum,
        part_a: b_sets.is_some(),
        part_b,
        b_sets,
    })
}

/// An independent S with |S| < α(G) whose localization leaves W_p, or (for
/// p > 1) contains an isolated vertex.
pub fn localization_closure_violation(g: &Graph, p: usize) -> Result<Option<VertexSet>> {
    let a = alpha(g);
    for s in all_sets_raw(g)? {
        if s.len() >= a {
            continue;
        }
        let gs = g.localize_unchecked(s);
        if !member(&gs, p)? || (p > 1 && gs.has_isolated_vertex()) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Meant for G ∈ W_p.
pub fn localization_closure_check(g: &Graph, p: usize) -> Result<bool> {
    localization_closure_violation(g, p).map(|v| v.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn two_k2() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn w2_flags_examples() {
        let c5 = w2_characterizations(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c5.as_array(), [true; 5]);
        assert_eq!(w2_characterizations(&two_k2()).unwrap().as_array(), [true; 5]);
        let c7 = w2_characterizations(&Graph::cycle(7).unwrap()).unwrap();
        assert_eq!(c7.as_array(), [false; 5]);
        assert!(w2_characterizations(&Graph::cycle(6).unwrap()).is_err());
        assert!(w2_characterizations(&Graph::complete(1).unwrap()).is_err());
    }

    #[test]
    fn deletion_surplus_examples() {
        // C_5 − v is P_4, which is not in W_2 (P_4 minus an end is P_3).
        let c5 = Graph::cycle(5).unwrap();
        let r = vertex_deletion_stays_wp(&c5, 0, 2).unwrap();
        assert_eq!(
            r,
            DeletionSurplus {
                in_wp: false,
                min_surplus: 1,
                no_small_local_degree: false
            }
        );
        for n in 2..=5 {
            let r = vertex_deletion_stays_wp(&Graph::complete(n).unwrap(), 0, n - 1).unwrap();
            assert!(r.in_wp);
            assert_eq!(r.min_surplus, n - 1);
            assert!(r.consistent(n - 1));
        }
        let r = vertex_deletion_stays_wp(&two_k2(), 0, 2).unwrap();
        assert!(!r.in_wp);
        assert_eq!(r.min_surplus, 1);
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(vertex_deletion_stays_wp(&g, 2, 1).is_err());
    }

    #[test]
    fn extension_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let r = extension_property(&c5, set(&[0]), 2).unwrap();
        assert!(r.part_a && r.part_b);
        assert_eq!(r.b_sets, Some(vec![set(&[2]), set(&[3])]));

        for p in 1..=4 {
            let r = extension_property(&Graph::complete(p).unwrap(), VertexSet::EMPTY, p).unwrap();
            assert!(r.part_a);
        }
        let r = extension_property(&two_k2(), set(&[0]), 2).unwrap();
        assert!(r.part_b);

        assert!(extension_property(&c5, set(&[0, 1]), 2).is_err());
        assert!(extension_property(&c5, set(&[0, 2]), 2).is_err());
    }

    #[test]
    fn closure_examples() {
        assert!(localization_closure_check(&Graph::cycle(5).unwrap(), 2).unwrap());
        for n in 1..=4 {
            for p in 1..=n {
                assert!(localization_closure_check(&Graph::complete(n).unwrap(), p).unwrap());
            }
        }
        let g = two_k2();
        assert!(localization_closure_check(&g, 2).unwrap());
        let gs = g.localize(set(&[0])).unwrap();
        assert!(member(&gs, 2).unwrap());
        // S = ∅ already fails: C_7 itself is not in W_2
        assert!(!localization_closure_check(&Graph::cycle(7).unwrap(), 2).unwrap());
    }
}
