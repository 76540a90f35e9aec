use serde::{Deserialize, Serialize};

use crate::corpus::graph6;
use crate::criticality::is_alpha_critical;
use crate::error::Result;
use crate::graph::Graph;
use crate::independence::alpha;
use crate::wp::{is_shedding, is_well_covered, wp_order};

/// Summary of one graph's place in the hierarchy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassProfile {
    pub graph6: String,
    pub n: usize,
    pub alpha: usize,
    pub well_covered: bool,
    pub wp_order: usize,
    pub shed_count: usize,
    pub alpha_critical: bool,
    pub triangle_free: bool,
    pub locally_triangle_free: bool,
}

pub fn profile(g: &Graph) -> Result<ClassProfile> {
    let well_covered = is_well_covered(g)?;
    let mut shed_count = 0;
    for v in g.active() {
        if is_shedding(g, v)?.shedding {
            shed_count += 1;
        }
    }
    Ok(ClassProfile {
        graph6: graph6::encode_compacted(g),
        n: g.order(),
        alpha: alpha(g),
        well_covered,
        wp_order: wp_order(g)?,
        shed_count,
        alpha_critical: is_alpha_critical(g).alpha_critical,
        triangle_free: g.is_triangle_free(),
        locally_triangle_free: g.is_locally_triangle_free(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_profiles() {
        let c5 = profile(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!((c5.wp_order, c5.alpha_critical, c5.shed_count), (2, true, 5));
        let c7 = profile(&Graph::cycle(7).unwrap()).unwrap();
        assert!(c7.well_covered);
        assert_eq!(c7.wp_order, 1);
        let c6 = profile(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(c6.wp_order, 0);
    }

    #[test]
    fn complete_profile() {
        let k3 = profile(&graph6::decode(b"Bw").unwrap()).unwrap();
        assert_eq!((k3.n, k3.alpha, k3.wp_order), (3, 1, 3));
        assert_eq!(k3.graph6, "Bw");
        assert!(!k3.triangle_free && k3.locally_triangle_free);
    }

    #[test]
    fn empty_graph_rejected() {
        assert!(profile(&Graph::empty(0).unwrap()).is_err());
    }
}
