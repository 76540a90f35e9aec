//! Well-coveredness and membership in the W_p hierarchy.
//!
//! A graph G is in W_p when n(G) ≥ p and every family of p pairwise
//! disjoint independent sets A_1..A_p extends to p pairwise disjoint maximum
//! independent sets S_i ⊇ A_i. W_1 is the class of well-covered graphs.
//!
//! Three deciders are provided and are expected to agree:
//! * [`is_wp_definitional`] searches the definition directly,
//! * [`is_wp_deletion`] checks that G − A is well-covered with unchanged α
//!   for every (p−1)-set A,
//! * [`is_wp_recursive`] recurses on the localizations G_x.

mod definitional;
mod properties;
mod shedding;

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::canon::{canonical_form, CANON_CAP};
use crate::corpus::graph6;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{alpha, maximal_sets_raw};
use crate::vertex_set::VertexSet;

pub use definitional::{full_tuple_membership, is_wp_definitional, member};
pub use properties::{
    extension_property, localization_closure_check, localization_closure_violation,
    vertex_deletion_stays_wp, w2_characterizations, DeletionSurplus, ExtensionReading,
    ExtensionReport, W2Flags,
};
pub use shedding::{is_shedding, min_surplus, SheddingReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decider {
    Definitional,
    Deletion,
    Recursive,
}

impl fmt::Display for Decider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decider::Definitional => "definitional",
            Decider::Deletion => "deletion",
            Decider::Recursive => "recursive",
        })
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// n(G) < p.
    Order { n: usize, p: usize },
    /// Disjoint independent sets A_1..A_p with no disjoint maximum extension.
    Tuple(Vec<VertexSet>),
    /// Pairwise disjoint maximum independent sets (membership evidence).
    Packing(Vec<VertexSet>),
    /// G − A is not well-covered or has a smaller α.
    DeletionSet(VertexSet),
    /// G_x fails W_p or has α(G_x) ≠ α(G) − 1.
    Localization(usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, sets: &[VertexSet]| {
            for (i, s) in sets.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{s}")?;
            }
            Ok(())
        };
        match self {
            Witness::Order { n, p } => write!(f, "order n={n} < p={p}"),
            Witness::Tuple(sets) => {
                f.write_str("tuple ")?;
                list(f, sets)
            }
            Witness::Packing(sets) => {
                f.write_str("packing ")?;
                list(f, sets)
            }
            Witness::DeletionSet(a) => write!(f, "deletion set {a}"),
            Witness::Localization(x) => write!(f, "localization at {x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WpVerdict {
    pub graph_id: String,
    pub p: usize,
    pub member: bool,
    pub decider: Decider,
    pub witness: Option<Witness>,
}

/// Canonical form when the graph is small enough, compacted graph6 otherwise.
pub fn graph_id(g: &Graph) -> String {
    if g.order() <= CANON_CAP {
        canonical_form(g).map(|c| c.into_string()).unwrap_or_else(|_| graph6::encode_compacted(g))
    } else {
        graph6::encode_compacted(g)
    }
}

fn require_nonempty(g: &Graph) -> Result<()> {
    if g.is_empty() {
        Err(Error::invalid("graph has no vertices"))
    } else {
        Ok(())
    }
}

fn require_p(p: usize) -> Result<()> {
    if p == 0 {
        Err(Error::invalid("p must be at least 1"))
    } else {
        Ok(())
    }
}

// --- well-coveredness ----------------------------------------------------

/// Every maximal independent set has size α(G).
pub fn is_well_covered(g: &Graph) -> Result<bool> {
    require_nonempty(g)?;
    Ok(well_covered_unchecked(g))
}

pub(crate) fn well_covered_unchecked(g: &Graph) -> bool {
    let sets = maximal_sets_raw(g);
    let first = sets[0].len();
    sets.iter().all(|s| s.len() == first)
}

/// Two maximal independent sets of different sizes, if any.
pub fn well_covered_violation(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let sets = maximal_sets_raw(g);
    let small = *sets.iter().min_by_key(|s| s.len())?;
    let large = *sets.iter().max_by_key(|s| s.len())?;
    (small.len() != large.len()).then_some((small, large))
}

type Memo<K> = OnceLock<RwLock<HashMap<K, bool>>>;

static WC_MEMO: Memo<String> = OnceLock::new();
static WP_MEMO: Memo<(String, usize)> = OnceLock::new();

fn memo_get<K: std::hash::Hash + Eq>(memo: &'static Memo<K>, key: &K) -> Option<bool> {
    memo.get_or_init(Default::default)
        .read()
        .expect("memo lock poisoned")
        .get(key)
        .copied()
}

fn memo_put<K: std::hash::Hash + Eq>(memo: &'static Memo<K>, key: K, value: bool) {
    let mut table = memo.get_or_init(Default::default).write().expect("memo lock poisoned");
    let prev = table.insert(key, value);
    debug_assert!(prev.is_none_or(|p| p == value), "memo insert changed a stored verdict");
}

/// Well-coveredness through localizations: α = 1, or every G_v is
/// well-covered with α(G_v) = α(G) − 1.
pub fn is_well_covered_recursive(g: &Graph) -> Result<bool> {
    require_nonempty(g)?;
    Ok(wc_rec(g))
}

fn wc_rec(g: &Graph) -> bool {
    let key = graph_id(g);
    if let Some(v) = memo_get(&WC_MEMO, &key) {
        return v;
    }
    let a = alpha(g);
    let result = a == 1
        || g.active().iter().all(|v| {
            let gv = g.localize_unchecked(VertexSet::singleton(v));
            alpha(&gv) + 1 == a && wc_rec(&gv)
        });
    memo_put(&WC_MEMO, key, result);
    result
}

// --- deletion decider ----------------------------------------------------

/// Membership via deletion sets: every A with |A| = p − 1 leaves a
/// well-covered G − A with α(G − A) = α(G). For p = 1 this is plain
/// well-coveredness.
pub fn is_wp_deletion(g: &Graph, p: usize) -> Result<WpVerdict> {
    require_p(p)?;
    let n = g.order();
    let verdict = |member, witness| WpVerdict {
        graph_id: graph_id(g),
        p,
        member,
        decider: Decider::Deletion,
        witness,
    };
    if n < p {
        return Ok(verdict(false, Some(Witness::Order { n, p })));
    }
    let a = alpha(g);
    let verts = g.active().to_vec();
    let mut failing = None;
    for_each_subset_of_size(&verts, p - 1, &mut |del| {
        let h = g.restrict(g.active() - del);
        if !well_covered_unchecked(&h) || alpha(&h) != a {
            failing = Some(del);
            false
        } else {
            true
        }
    });
    Ok(match failing {
        Some(del) => verdict(false, Some(Witness::DeletionSet(del))),
        None => verdict(true, None),
    })
}

/// Calls `f` on every `k`-subset of `items` in lexicographic order until it returns false.
pub(crate) fn for_each_subset_of_size(items: &[usize], k: usize, f: &mut dyn FnMut(VertexSet) -> bool) {
    fn go(items: &[usize], start: usize, k: usize, cur: VertexSet, f: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        if k == 0 {
            return f(cur);
        }
        for i in start..=items.len().saturating_sub(k) {
            if !go(items, i + 1, k - 1, cur.with(items[i]), f) {
                return false;
            }
        }
        true
    }
    if k <= items.len() {
        go(items, 0, k, VertexSet::EMPTY, f);
    }
}

// --- recursive decider ---------------------------------------------------

/// Membership through localizations: for α(G) = 1 the graph is complete and
/// must have at least p vertices; otherwise every G_x must be in W_p with
/// α(G_x) = α(G) − 1. Memoized on (canonical form, p).
pub fn is_wp_recursive(g: &Graph, p: usize) -> Result<WpVerdict> {
    require_p(p)?;
    require_nonempty(g)?;
    let a = alpha(g);
    let n = g.order();
    let mut witness = None;
    let member = if a == 1 {
        if n < p {
            witness = Some(Witness::Order { n, p });
        }
        n >= p
    } else {
        let bad = g.active().iter().find(|&x| {
            let gx = g.localize_unchecked(VertexSet::singleton(x));
            alpha(&gx) + 1 != a || !wp_rec(&gx, p)
        });
        witness = bad.map(Witness::Localization);
        bad.is_none()
    };
    Ok(WpVerdict {
        graph_id: graph_id(g),
        p,
        member,
        decider: Decider::Recursive,
        witness,
    })
}

fn wp_rec(g: &Graph, p: usize) -> bool {
    let key = (graph_id(g), p);
    if let Some(v) = memo_get(&WP_MEMO, &key) {
        return v;
    }
    let a = alpha(g);
    let result = if a == 1 {
        g.order() >= p
    } else {
        g.active().iter().all(|x| {
            let gx = g.localize_unchecked(VertexSet::singleton(x));
            alpha(&gx) + 1 == a && wp_rec(&gx, p)
        })
    };
    memo_put(&WP_MEMO, key, result);
    result
}

/// Largest p with G ∈ W_p, or 0 when G is not well-covered.
///
/// Uses the recursive decider; the chain W_1 ⊇ W_2 ⊇ … makes a linear scan
/// valid, and p never exceeds n(G)/α(G).
pub fn wp_order(g: &Graph) -> Result<usize> {
    require_nonempty(g)?;
    if !wc_rec(g) {
        return Ok(0);
    }
    let bound = g.order() / alpha(g).max(1);
    let mut p = 1;
    while p < bound && wp_rec(g, p + 1) {
        p += 1;
    }
    Ok(p)
}
