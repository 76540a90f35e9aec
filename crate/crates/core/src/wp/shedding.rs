use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{all_sets_raw, is_independent_unchecked};
use crate::vertex_set::VertexSet;

/// Shedding status of one vertex, computed two ways.
///
/// `shedding` comes from neighbourhood surplus: no independent S of G_v
/// covers N(v) with N(S). `definitional` comes from extension: every
/// independent S of G_v stays independent after adding some neighbour of v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheddingReport {
    pub vertex: usize,
    pub shedding: bool,
    pub definitional: bool,
    /// Independent S ⊆ V(G_v) with N(v) ⊆ N(S); present iff not shedding.
    pub blocking_set: Option<VertexSet>,
}

impl SheddingReport {
    pub fn routes_agree(&self) -> bool {
        self.shedding == self.definitional
    }
}

pub fn is_shedding(g: &Graph, v: usize) -> Result<SheddingReport> {
    g.check_vertex(v)?;
    let nv = g.neighbors(v);
    let local = g.localize_unchecked(VertexSet::singleton(v));
    let sets = all_sets_raw(&local)?;

    let blocking_set = sets
        .iter()
        .copied()
        .find(|&s| (nv - g.open_neighborhood_unchecked(s)).is_empty());

    let definitional = sets
        .iter()
        .all(|&s| nv.iter().any(|u| is_independent_unchecked(g, s.with(u))));

    Ok(SheddingReport {
        vertex: v,
        shedding: blocking_set.is_none(),
        definitional,
        blocking_set,
    })
}

/// min over independent S ⊆ V(G_v) of |N(v) − N(S)|, with the minimizing S.
pub fn min_surplus(g: &Graph, v: usize) -> Result<(usize, VertexSet)> {
    g.check_vertex(v)?;
    let nv = g.neighbors(v);
    let local = g.localize_unchecked(VertexSet::singleton(v));
    let sets = all_sets_raw(&local)?;
    sets.iter()
        .map(|&s| ((nv - g.open_neighborhood_unchecked(s)).len(), s))
        .min_by_key(|&(k, s)| (k, s))
        .ok_or_else(|| Error::invalid("no independent sets"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universal_vertex_sheds() {
        let wheel = Graph::join(&Graph::complete(1).unwrap(), &Graph::cycle(5).unwrap()).unwrap();
        let r = is_shedding(&wheel, 0).unwrap();
        assert!(r.shedding && r.definitional);
        assert!(r.blocking_set.is_none());
    }

    #[test]
    fn four_cycle_blocks_with_opposite_vertex() {
        let c4 = Graph::cycle(4).unwrap();
        for v in 0..4 {
            let r = is_shedding(&c4, v).unwrap();
            assert!(!r.shedding);
            assert!(r.routes_agree());
            assert_eq!(r.blocking_set, Some(VertexSet::singleton((v + 2) % 4)));
        }
    }

    #[test]
    fn five_cycle_sheds_everywhere() {
        let c5 = Graph::cycle(5).unwrap();
        for v in 0..5 {
            let r = is_shedding(&c5, v).unwrap();
            assert!(r.shedding && r.definitional);
        }
        assert_eq!(min_surplus(&c5, 0).unwrap().0, 1);
    }

    #[test]
    fn isolated_vertex_never_sheds() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let r = is_shedding(&g, 2).unwrap();
        assert!(!r.shedding && !r.definitional);
        assert_eq!(r.blocking_set, Some(VertexSet::EMPTY));
        assert!(is_shedding(&g, 5).is_err());
    }
}
