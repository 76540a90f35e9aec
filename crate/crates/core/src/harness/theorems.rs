//! Per-graph checks for each verified statement.
//!
//! A check returns [`Outcome::Ineligible`] when the graph (or p) falls outside
//! the statement's hypotheses, and otherwise evaluates both sides of the
//! statement independently. Failures carry a witness description; replaying
//! the same check on the same (graph, p) reproduces them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::canon::canonical_form;
use crate::criticality::{
    component_criticality_check, gab_equivalence, gab_well_covered_check, is_alpha_critical,
    locally_tf_equivalence, sufficient_condition, triangle_free_equivalence,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{alpha, all_sets_raw};
use crate::vertex_set::VertexSet;
use crate::wp::{
    extension_property, is_shedding, is_well_covered_recursive, is_wp_deletion, is_wp_recursive,
    localization_closure_violation, member, min_surplus, vertex_deletion_stays_wp, w2_characterizations,
    well_covered_unchecked,
};

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal, $uses_p:literal, $min_p:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }

            /// Whether the statement is parameterized by p.
            pub fn uses_p(self) -> bool {
                match self {
                    $(TheoremId::$variant => $uses_p,)*
                }
            }

            /// Smallest p the statement covers.
            pub fn min_p(self) -> usize {
                match self {
                    $(TheoremId::$variant => $min_p,)*
                }
            }
        }
    };
}

theorem_ids! {
    L2_1 => "L2.1", false, 1;
    L2_2 => "L2.2", false, 1;
    L2_3 => "L2.3", false, 1;
    T2_4 => "T2.4", false, 1;
    T2_5 => "T2.5", false, 1;
    T2_6a => "T2.6a", true, 2;
    T2_6b => "T2.6b", true, 2;
    L2_7a => "L2.7a", true, 2;
    L2_7b => "L2.7b", true, 2;
    T2_8 => "T2.8", true, 1;
    L2_9 => "L2.9", true, 1;
    L3_1 => "L3.1", true, 1;
    T3_2 => "T3.2", true, 1;
    T3_3 => "T3.3", true, 1;
    L4_1 => "L4.1", false, 1;
    L4_2 => "L4.2", false, 1;
    L4_3 => "L4.3", false, 1;
    T4_4 => "T4.4", true, 2;
    C4_5 => "C4.5", true, 2;
    C4_6 => "C4.6", true, 2;
    Chain => "chain", true, 2;
    StaplesTf => "staples_tf", false, 1;
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid(format!("unknown theorem id {s:?}")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated list of ids, or `all`.
pub fn parse_theorem_list(spec: &str) -> Result<Vec<TheoremId>> {
    if spec.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut ids: Vec<TheoremId> = spec
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Ineligible,
    Pass,
    Fail(String),
}

impl Outcome {
    fn from_violation(v: Option<String>) -> Outcome {
        match v {
            Some(w) => Outcome::Fail(w),
            None => Outcome::Pass,
        }
    }
}

/// Runs one statement on one graph. `p` is ignored by statements that do not
/// use it; for those that do it must be given, and values below the
/// statement's minimum are ineligible.
pub fn check(id: TheoremId, g: &Graph, p: Option<usize>) -> Result<Outcome> {
    let p = if id.uses_p() {
        let p = p.ok_or_else(|| Error::invalid(format!("{id} needs p")))?;
        if p < id.min_p() {
            return Ok(Outcome::Ineligible);
        }
        p
    } else {
        0
    };
    match id {
        TheoremId::L2_1 => l2_1(g),
        TheoremId::L2_2 => l2_2(g),
        TheoremId::L2_3 => l2_3(g),
        TheoremId::T2_4 => t2_4(g),
        TheoremId::T2_5 => t2_5(g),
        TheoremId::T2_6a => t2_6a(g, p),
        TheoremId::T2_6b => t2_6b(g, p),
        TheoremId::L2_7a => l2_7a(g, p),
        TheoremId::L2_7b => l2_7b(g, p),
        TheoremId::T2_8 => t2_8(g, p),
        TheoremId::L2_9 => l2_9(g, p),
        TheoremId::L3_1 => l3_1(g, p),
        TheoremId::T3_2 => t3_2(g, p),
        TheoremId::T3_3 => t3_3(g, p),
        TheoremId::L4_1 => l4_1(g),
        TheoremId::L4_2 => l4_2(g),
        TheoremId::L4_3 => l4_3(g),
        TheoremId::T4_4 => t4_4(g, p),
        TheoremId::C4_5 => c4_5(g, p),
        TheoremId::C4_6 => c4_6(g, p),
        TheoremId::Chain => chain(g, p),
        TheoremId::StaplesTf => staples_tf(g),
    }
}

fn singleton_localization(g: &Graph, v: usize) -> Graph {
    g.localize(VertexSet::singleton(v)).expect("active vertex")
}

// α > 1: well-covered ⇔ every G_v is well-covered with α(G_v) = α(G) − 1.
fn l2_1(g: &Graph) -> Result<Outcome> {
    let a = alpha(g);
    if a <= 1 {
        return Ok(Outcome::Ineligible);
    }
    let lhs = well_covered_unchecked(g);
    let bad = g.active().iter().find(|&v| {
        let gv = singleton_localization(g, v);
        alpha(&gv) + 1 != a || !well_covered_unchecked(&gv)
    });
    let rhs = bad.is_none();
    let recursive = is_well_covered_recursive(g)?;
    Ok(Outcome::from_violation((lhs != rhs || recursive != lhs).then(|| {
        format!("well-covered {lhs}, localization side {rhs} (first bad vertex {bad:?}), recursive decider {recursive}")
    })))
}

// Well-covered G, independent S with |S| < α: G_S well-covered and α(G) = α(G_S) + |S|.
fn l2_2(g: &Graph) -> Result<Outcome> {
    if g.is_empty() || !well_covered_unchecked(g) {
        return Ok(Outcome::Ineligible);
    }
    let a = alpha(g);
    for s in all_sets_raw(g)? {
        if s.len() >= a {
            continue;
        }
        let gs = g.localize(s)?;
        let ags = alpha(&gs);
        if ags + s.len() != a || !well_covered_unchecked(&gs) {
            return Ok(Outcome::Fail(format!(
                "S = {s}: α(G_S) = {ags}, α(G) = {a}, G_S well-covered {}",
                well_covered_unchecked(&gs)
            )));
        }
    }
    Ok(Outcome::Pass)
}

// N[S] ∩ T = ∅ and N[T] ∩ S = ∅ ⇒ (G_S)_T = G_{S∪T} = (G_T)_S.
fn l2_3(g: &Graph) -> Result<Outcome> {
    let subsets: Vec<VertexSet> = subsets_of(g.active());
    for (i, &s) in subsets.iter().enumerate() {
        let ns = g.closed_neighborhood(s)?;
        for &t in &subsets[i..] {
            if !ns.is_disjoint(t) || !g.closed_neighborhood(t)?.is_disjoint(s) {
                continue;
            }
            if let Some(w) = commutativity_violation(g, s, t)? {
                return Ok(Outcome::Fail(w));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// Compares the three localization orders for (S, T).
pub fn commutativity_violation(g: &Graph, s: VertexSet, t: VertexSet) -> Result<Option<String>> {
    let st = g.localize(s)?.localize(t)?;
    let union = g.localize(s | t)?;
    let ts = g.localize(t)?.localize(s)?;
    Ok((st != union || ts != union).then(|| format!("S = {s}, T = {t}: localization orders differ")))
}

fn subsets_of(set: VertexSet) -> Vec<VertexSet> {
    let verts = set.to_vec();
    (0u64..1 << verts.len())
        .map(|m| {
            verts
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

// Well-covered G, non-isolated v: G − v well-covered ⇔ v shedding (both
// routes) ⇔ min surplus ≥ 1 ⇔ no independent S of G_v isolates v in G_S.
fn t2_4(g: &Graph) -> Result<Outcome> {
    if g.is_empty() || !well_covered_unchecked(g) || g.size() == 0 {
        return Ok(Outcome::Ineligible);
    }
    for v in g.active() {
        if g.degree(v) == 0 {
            continue;
        }
        let a = well_covered_unchecked(&g.delete_vertex(v)?);
        let report = is_shedding(g, v)?;
        let (surplus, _) = min_surplus(g, v)?;
        let gv = singleton_localization(g, v);
        let c = all_sets_raw(&gv)?
            .iter()
            .all(|&s| g.localize_unchecked(s).degree(v) > 0);
        let flags = [a, report.shedding, report.definitional, surplus >= 1, c];
        if flags.iter().any(|&f| f != a) {
            return Ok(Outcome::Fail(format!(
                "vertex {v}: G−v well-covered {a}, shedding {}, shedding by extension {}, min surplus {surplus}, no isolating S {c}",
                report.shedding, report.definitional
            )));
        }
    }
    Ok(Outcome::Pass)
}

// Well-covered G without isolated vertices: the five W_2 conditions agree.
fn t2_5(g: &Graph) -> Result<Outcome> {
    if g.is_empty() || g.has_isolated_vertex() || !well_covered_unchecked(g) {
        return Ok(Outcome::Ineligible);
    }
    let flags = w2_characterizations(g)?;
    Ok(Outcome::from_violation(
        (!flags.all_equal()).then(|| format!("flags (a)..(e) = {:?}", flags.as_array())),
    ))
}

// G ∈ W_p ⇔ every G − v is in W_{p−1} with α(G − v) = α(G).
fn t2_6a(g: &Graph, p: usize) -> Result<Outcome> {
    let lhs = member(g, p)?;
    let a = alpha(g);
    let mut bad = None;
    for v in g.active() {
        let h = g.delete_vertex(v)?;
        if alpha(&h) != a || !member(&h, p - 1)? {
            bad = Some(v);
            break;
        }
    }
    let rhs = bad.is_none();
    Ok(Outcome::from_violation((lhs != rhs).then(|| {
        format!("G ∈ W_{p} {lhs}, deletion side {rhs} (first bad vertex {bad:?})")
    })))
}

// n ≥ p: G ∈ W_p ⇔ every G − A with |A| = p − 1 is well-covered with α(G − A) = α(G).
fn t2_6b(g: &Graph, p: usize) -> Result<Outcome> {
    if g.order() < p {
        return Ok(Outcome::Ineligible);
    }
    let lhs = member(g, p)?;
    let rhs = is_wp_deletion(g, p)?;
    Ok(Outcome::from_violation((lhs != rhs.member).then(|| {
        format!(
            "definition says {lhs}, deletion sets say {} (witness {})",
            rhs.member,
            rhs.witness.map_or("none".to_string(), |w| w.to_string())
        )
    })))
}

fn copies_of_clique(copies: usize, p: usize) -> Result<Graph> {
    let mut g = Graph::empty(0)?;
    for _ in 0..copies {
        g = Graph::disjoint_union(&g, &Graph::complete(p)?)?;
    }
    Ok(g)
}

// G ∈ W_p ⇒ n ≥ p·α, with equality exactly for α disjoint copies of K_p.
fn l2_7a(g: &Graph, p: usize) -> Result<Outcome> {
    if !member(g, p)? {
        return Ok(Outcome::Ineligible);
    }
    let (n, a) = (g.order(), alpha(g));
    if n < p * a {
        return Ok(Outcome::Fail(format!("n = {n} < p·α = {}", p * a)));
    }
    let equal = n == p * a;
    let is_copies = canonical_form(g)? == canonical_form(&copies_of_clique(a, p)?)?;
    Ok(Outcome::from_violation((equal != is_copies).then(|| {
        format!("n = p·α is {equal}, but G ≅ {a}·K_{p} is {is_copies}")
    })))
}

// G ∈ W_p connected and not complete ⇒ minimum degree ≥ p.
fn l2_7b(g: &Graph, p: usize) -> Result<Outcome> {
    if !member(g, p)? || !g.is_connected() || g.is_complete() {
        return Ok(Outcome::Ineligible);
    }
    let d = g.min_degree().unwrap_or(0);
    Ok(Outcome::from_violation((d < p).then(|| format!("minimum degree {d} < {p}"))))
}

// G ∈ W_p without isolated vertices, A independent and not maximum:
// p disjoint extensions of A exist, and (p ≥ 2) p − 1 disjoint maximum sets avoid A.
fn t2_8(g: &Graph, p: usize) -> Result<Outcome> {
    if g.is_empty() || g.has_isolated_vertex() || !member(g, p)? {
        return Ok(Outcome::Ineligible);
    }
    let a = alpha(g);
    for s in all_sets_raw(g)? {
        if s.len() >= a {
            continue;
        }
        let r = extension_property(g, s, p)?;
        if !r.part_a || (p >= 2 && !r.part_b) {
            return Ok(Outcome::Fail(format!(
                "A = {s}: part (a) {}, part (b) {} [{:?}]",
                r.part_a, r.part_b, r.reading
            )));
        }
    }
    Ok(Outcome::Pass)
}

// G ∈ W_p: every G_S with S independent, |S| < α, is in W_p (and has no
// isolated vertex when p > 1).
fn l2_9(g: &Graph, p: usize) -> Result<Outcome> {
    if !member(g, p)? {
        return Ok(Outcome::Ineligible);
    }
    Ok(Outcome::from_violation(
        localization_closure_violation(g, p)?.map(|s| format!("S = {s}: G_S leaves W_{p} or has an isolated vertex")),
    ))
}

// G ∈ W_p ⇔ every connected component is in W_p.
fn l3_1(g: &Graph, p: usize) -> Result<Outcome> {
    let lhs = member(g, p)?;
    let comps = g.components();
    let mut bad = None;
    for c in &comps {
        if !member(c, p)? {
            bad = Some(c.active());
            break;
        }
    }
    let rhs = bad.is_none();
    Ok(Outcome::from_violation((lhs != rhs).then(|| {
        format!("G ∈ W_{p} {lhs}, all components {rhs} (first failing component {bad:?})")
    })))
}

// α ≥ 2: G ∈ W_p ⇔ every G_x ∈ W_p with α(G_x) = α(G) − 1. The recursive
// decider is compared against the definition on every graph.
fn t3_2(g: &Graph, p: usize) -> Result<Outcome> {
    if g.is_empty() {
        return Ok(Outcome::Ineligible);
    }
    let lhs = member(g, p)?;
    let recursive = is_wp_recursive(g, p)?.member;
    if recursive != lhs {
        return Ok(Outcome::Fail(format!("definition says {lhs}, recursive decider says {recursive}")));
    }
    let a = alpha(g);
    if a < 2 {
        return Ok(Outcome::Pass);
    }
    let mut bad = None;
    for x in g.active() {
        let gx = singleton_localization(g, x);
        if alpha(&gx) + 1 != a || !member(&gx, p)? {
            bad = Some(x);
            break;
        }
    }
    let rhs = bad.is_none();
    Ok(Outcome::from_violation((lhs != rhs).then(|| {
        format!("G ∈ W_{p} {lhs}, localization side {rhs} (first bad vertex {bad:?})")
    })))
}

// G ∈ W_p, v non-isolated: G − v ∈ W_p ⇔ min surplus ≥ p ⇔ no S gives v at most p − 1 neighbours in G_S.
fn t3_3(g: &Graph, p: usize) -> Result<Outcome> {
    if !member(g, p)? || g.size() == 0 {
        return Ok(Outcome::Ineligible);
    }
    for v in g.active() {
        if g.degree(v) == 0 {
            continue;
        }
        let r = vertex_deletion_stays_wp(g, v, p)?;
        if !r.consistent(p) {
            return Ok(Outcome::Fail(format!("vertex {v}: {r:?}")));
        }
    }
    Ok(Outcome::Pass)
}

fn l4_1(g: &Graph) -> Result<Outcome> {
    let r = component_criticality_check(g);
    Ok(Outcome::from_violation(
        (!r.holds()).then(|| format!("α-critical {}, all components α-critical {}", r.lhs, r.rhs)),
    ))
}

fn l4_2(g: &Graph) -> Result<Outcome> {
    if g.size() == 0 {
        return Ok(Outcome::Ineligible);
    }
    let r = gab_well_covered_check(g)?;
    Ok(Outcome::from_violation(
        (!r.holds()).then(|| "every G_ab well-covered with α(G_ab) = α(G) − 1, but G is not well-covered".to_string()),
    ))
}

fn l4_3(g: &Graph) -> Result<Outcome> {
    let r = gab_equivalence(g);
    let report = is_alpha_critical(g);
    Ok(Outcome::from_violation((!r.holds() || !report.lists_agree()).then(|| {
        format!(
            "α-critical {}, G_ab side {} (non-critical edges {:?}, G_ab failures {:?})",
            r.lhs, r.rhs, report.non_critical_edges, report.gab_failures
        )
    })))
}

fn t4_4(g: &Graph, p: usize) -> Result<Outcome> {
    if alpha(g) <= 1 {
        return Ok(Outcome::Ineligible);
    }
    let r = sufficient_condition(g, p)?;
    Ok(Outcome::from_violation((!r.holds()).then(|| {
        format!(
            "every G_ab ∈ W_{} with α(G_ab) = α(G) − 1, but G ∈ W_{p} {} and α-critical {}",
            p - 1,
            member(g, p).unwrap_or(false),
            is_alpha_critical(g).alpha_critical
        )
    })))
}

fn c4_5(g: &Graph, p: usize) -> Result<Outcome> {
    if alpha(g) <= 1 || !g.is_locally_triangle_free() {
        return Ok(Outcome::Ineligible);
    }
    let r = locally_tf_equivalence(g, p)?;
    Ok(Outcome::from_violation(
        (!r.holds()).then(|| format!("G_ab condition {}, (G ∈ W_{p} and α-critical) {}", r.lhs, r.rhs)),
    ))
}

fn c4_6(g: &Graph, p: usize) -> Result<Outcome> {
    if alpha(g) <= 1 || !g.is_triangle_free() {
        return Ok(Outcome::Ineligible);
    }
    let r = triangle_free_equivalence(g, p)?;
    Ok(Outcome::from_violation(
        (!r.holds()).then(|| format!("G_ab condition {}, G ∈ W_{p} {}", r.lhs, r.rhs)),
    ))
}

fn chain(g: &Graph, p: usize) -> Result<Outcome> {
    if !member(g, p)? {
        return Ok(Outcome::Ineligible);
    }
    Ok(Outcome::from_violation(
        (!member(g, p - 1)?).then(|| format!("in W_{p} but not in W_{}", p - 1)),
    ))
}

fn staples_tf(g: &Graph) -> Result<Outcome> {
    if !g.is_triangle_free() || !member(g, 2)? {
        return Ok(Outcome::Ineligible);
    }
    let r = is_alpha_critical(g);
    Ok(Outcome::from_violation((!r.alpha_critical).then(|| {
        format!("triangle-free W_2 graph with non-critical edges {:?}", r.non_critical_edges)
    })))
}
