//! α-critical graphs and their relation to edge localizations and W_p.
//!
//! An edge ab is critical when α(G − ab) > α(G); a graph is α-critical when
//! every edge is. Edgeless graphs are vacuously α-critical. Every check here
//! evaluates both sides of the statement it tests; neither side is derived
//! from the other.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::alpha;
use crate::wp::{member, well_covered_unchecked};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityReport {
    pub alpha: usize,
    pub alpha_critical: bool,
    /// Edges with α(G − ab) = α(G).
    pub non_critical_edges: Vec<(usize, usize)>,
    /// Edges with α(G_ab) ≠ α(G) − 1.
    pub gab_failures: Vec<(usize, usize)>,
}

impl CriticalityReport {
    /// Both edge lists are empty together.
    pub fn lists_agree(&self) -> bool {
        self.non_critical_edges.is_empty() == self.gab_failures.is_empty()
    }
}

/// Left- and right-hand sides of an equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Biconditional {
    pub lhs: bool,
    pub rhs: bool,
}

impl Biconditional {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Implication {
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl Implication {
    pub fn holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

pub fn is_critical_edge(g: &Graph, a: usize, b: usize) -> Result<bool> {
    let without = g.delete_edge(a, b)?;
    Ok(alpha(&without) > alpha(g))
}

pub fn is_alpha_critical(g: &Graph) -> CriticalityReport {
    let a = alpha(g);
    let mut non_critical_edges = Vec::new();
    let mut gab_failures = Vec::new();
    for (x, y) in g.edges() {
        let without = g.delete_edge(x, y).expect("edge from edge list");
        if alpha(&without) == a {
            non_critical_edges.push((x, y));
        }
        let local = g.edge_localize(x, y).expect("edge from edge list");
        if alpha(&local) + 1 != a {
            gab_failures.push((x, y));
        }
    }
    CriticalityReport {
        alpha: a,
        alpha_critical: non_critical_edges.is_empty(),
        non_critical_edges,
        gab_failures,
    }
}

/// α-critical ⇔ α(G_ab) = α(G) − 1 for every edge.
pub fn gab_equivalence(g: &Graph) -> Biconditional {
    let report = is_alpha_critical(g);
    Biconditional {
        lhs: report.alpha_critical,
        rhs: report.gab_failures.is_empty(),
    }
}

/// Every G_ab lies in W_{p−1} and has α(G_ab) = α(G) − 1.
pub fn gab_condition(g: &Graph, p: usize) -> Result<bool> {
    if p < 2 {
        return Err(Error::invalid("the edge localization condition needs p >= 2"));
    }
    let a = alpha(g);
    for (x, y) in g.edges() {
        let local = g.edge_localize(x, y)?;
        if alpha(&local) + 1 != a || !member(&local, p - 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_sufficient_pre(g: &Graph, p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::invalid("p must be at least 2"));
    }
    if alpha(g) <= 1 {
        return Err(Error::invalid("needs α(G) > 1"));
    }
    Ok(())
}

/// Edge localization condition ⇒ (G ∈ W_p and α-critical).
pub fn sufficient_condition(g: &Graph, p: usize) -> Result<Implication> {
    require_sufficient_pre(g, p)?;
    Ok(Implication {
        hypothesis: gab_condition(g, p)?,
        conclusion: member(g, p)? && is_alpha_critical(g).alpha_critical,
    })
}

/// On locally triangle-free graphs: edge localization condition ⇔ (G ∈ W_p and α-critical).
pub fn locally_tf_equivalence(g: &Graph, p: usize) -> Result<Biconditional> {
    require_sufficient_pre(g, p)?;
    if !g.is_locally_triangle_free() {
        return Err(Error::invalid("graph is not locally triangle-free"));
    }
    Ok(Biconditional {
        lhs: gab_condition(g, p)?,
        rhs: member(g, p)? && is_alpha_critical(g).alpha_critical,
    })
}

/// On triangle-free graphs: edge localization condition ⇔ G ∈ W_p.
pub fn triangle_free_equivalence(g: &Graph, p: usize) -> Result<Biconditional> {
    require_sufficient_pre(g, p)?;
    if !g.is_triangle_free() {
        return Err(Error::invalid("graph has a triangle"));
    }
    Ok(Biconditional {
        lhs: gab_condition(g, p)?,
        rhs: member(g, p)?,
    })
}

/// (every G_ab well-covered with α(G_ab) = α(G) − 1) ⇒ G well-covered.
///
/// An empty G_ab counts as well-covered.
pub fn gab_well_covered_check(g: &Graph) -> Result<Implication> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::invalid("graph has no edges"));
    }
    let a = alpha(g);
    let hypothesis = edges.iter().all(|&(x, y)| {
        let local = g.edge_localize(x, y).expect("edge from edge list");
        alpha(&local) + 1 == a && (local.is_empty() || well_covered_unchecked(&local))
    });
    Ok(Implication {
        hypothesis,
        conclusion: !g.is_empty() && well_covered_unchecked(g),
    })
}

/// α-critical ⇔ every connected component is α-critical.
pub fn component_criticality_check(g: &Graph) -> Biconditional {
    Biconditional {
        lhs: is_alpha_critical(g).alpha_critical,
        rhs: g
            .components()
            .iter()
            .all(|c| is_alpha_critical(c).alpha_critical),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn union(a: &Graph, b: &Graph) -> Graph {
        Graph::disjoint_union(a, b).unwrap()
    }

    #[test]
    fn critical_edge_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(k4.edges().iter().all(|&(a, b)| is_critical_edge(&k4, a, b).unwrap()));
        let c4 = Graph::cycle(4).unwrap();
        assert!(c4.edges().iter().all(|&(a, b)| !is_critical_edge(&c4, a, b).unwrap()));
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.edges().iter().all(|&(a, b)| is_critical_edge(&c5, a, b).unwrap()));
        assert!(is_critical_edge(&c5, 0, 2).is_err());
    }

    #[test]
    fn alpha_critical_examples() {
        assert!(is_alpha_critical(&Graph::cycle(7).unwrap()).alpha_critical);
        let c6 = is_alpha_critical(&Graph::cycle(6).unwrap());
        assert!(!c6.alpha_critical);
        assert_eq!(c6.non_critical_edges.len(), 6);
        assert!(c6.lists_agree());
        let corona = Graph::corona_complete(&Graph::path(2).unwrap(), 2).unwrap();
        assert!(!is_alpha_critical(&corona).alpha_critical);
        assert!(is_alpha_critical(&Graph::empty(3).unwrap()).alpha_critical);
    }

    #[test]
    fn gab_equivalence_examples() {
        let c5 = gab_equivalence(&Graph::cycle(5).unwrap());
        assert_eq!(c5, Biconditional { lhs: true, rhs: true });
        // α(C_4) = 2 but G_ab is empty (α 0), so both sides fail.
        let c4 = gab_equivalence(&Graph::cycle(4).unwrap());
        assert_eq!(c4, Biconditional { lhs: false, rhs: false });
        let k2 = gab_equivalence(&Graph::complete(2).unwrap());
        assert_eq!(k2, Biconditional { lhs: true, rhs: true });
    }

    #[test]
    fn sufficient_condition_examples() {
        let c5 = sufficient_condition(&Graph::cycle(5).unwrap(), 2).unwrap();
        assert_eq!(c5, Implication { hypothesis: true, conclusion: true });
        let c7 = sufficient_condition(&Graph::cycle(7).unwrap(), 2).unwrap();
        assert_eq!(c7, Implication { hypothesis: false, conclusion: false });
        for p in 2..=4 {
            assert!(sufficient_condition(&Graph::complete(p + 1).unwrap(), p).is_err());
        }
        assert!(sufficient_condition(&Graph::cycle(5).unwrap(), 1).is_err());
    }

    #[test]
    fn locally_tf_examples() {
        let c5 = locally_tf_equivalence(&Graph::cycle(5).unwrap(), 2).unwrap();
        assert_eq!(c5, Biconditional { lhs: true, rhs: true });
        let c7 = locally_tf_equivalence(&Graph::cycle(7).unwrap(), 2).unwrap();
        assert_eq!(c7, Biconditional { lhs: false, rhs: false });

        let k2 = Graph::complete(2).unwrap();
        let two_k2 = union(&k2, &k2);
        let g = Graph::join(&two_k2, &two_k2).unwrap();
        assert!(g.is_locally_triangle_free());
        let r = locally_tf_equivalence(&g, 2).unwrap();
        assert!(!r.rhs);
        assert!(member(&g, 2).unwrap());

        assert!(locally_tf_equivalence(&union(&Graph::complete(3).unwrap(), &Graph::complete(1).unwrap()), 2).is_err());
    }

    #[test]
    fn gab_well_covered_examples() {
        let c5 = gab_well_covered_check(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c5, Implication { hypothesis: true, conclusion: true });
        let c6 = gab_well_covered_check(&Graph::cycle(6).unwrap()).unwrap();
        assert!(!c6.hypothesis && c6.holds());
        let k4 = gab_well_covered_check(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(k4, Implication { hypothesis: true, conclusion: true });
        assert!(gab_well_covered_check(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn component_examples() {
        let c3 = Graph::cycle(3).unwrap();
        let r = component_criticality_check(&union(&c3, &Graph::cycle(5).unwrap()));
        assert_eq!(r, Biconditional { lhs: true, rhs: true });
        let r = component_criticality_check(&union(&c3, &Graph::cycle(4).unwrap()));
        assert_eq!(r, Biconditional { lhs: false, rhs: false });
        let r = component_criticality_check(&Graph::complete(2).unwrap());
        assert_eq!(r, Biconditional { lhs: true, rhs: true });
    }
}
