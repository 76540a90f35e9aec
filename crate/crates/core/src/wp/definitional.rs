//! Direct search of the W_p definition.
//!
//! Extension is monotone: if a family A_1..A_p extends to disjoint maximum
//! sets, so does every family A'_i ⊆ A_i. A failing family therefore sits
//! below a failing inclusion-maximal family, and it is enough to test the
//! families in which no vertex can join any A_i. Extension does not depend
//! on the order of the A_i, so families are enumerated unordered (restricted
//! growth over vertex labels).

use super::{graph_id, require_p, Decider, Witness, WpVerdict};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{maximum_sets_raw, ENUMERATION_CAP};
use crate::vertex_set::VertexSet;

pub fn is_wp_definitional(g: &Graph, p: usize) -> Result<WpVerdict> {
    let (member, witness) = decide(g, p)?;
    Ok(WpVerdict {
        graph_id: graph_id(g),
        p,
        member,
        decider: Decider::Definitional,
        witness: Some(witness),
    })
}

/// Total membership test: false for graphs with fewer than p vertices
/// (including the empty graph).
pub fn member(g: &Graph, p: usize) -> Result<bool> {
    decide(g, p).map(|(m, _)| m)
}

fn decide(g: &Graph, p: usize) -> Result<(bool, Witness)> {
    require_p(p)?;
    let n = g.order();
    if n > ENUMERATION_CAP {
        return Err(Error::capacity(format!(
            "definitional decider limited to {ENUMERATION_CAP} vertices, graph has {n}"
        )));
    }
    if n < p {
        return Ok((false, Witness::Order { n, p }));
    }
    let max_sets: Vec<u64> = maximum_sets_raw(g).iter().map(|s| s.bits()).collect();
    let Some(packing) = extend_family(&max_sets, &vec![0; p]) else {
        return Ok((false, Witness::Tuple(vec![VertexSet::EMPTY; p])));
    };
    let mut failing = None;
    for_each_maximal_family(g, p, &mut |family| {
        if extend_family(&max_sets, family).is_none() {
            failing = Some(family.iter().map(|&b| VertexSet::from_bits(b)).collect());
            false
        } else {
            true
        }
    });
    Ok(match failing {
        Some(tuple) => (false, Witness::Tuple(tuple)),
        None => (true, Witness::Packing(to_sets(&packing))),
    })
}

/// The definition with every ordered tuple of disjoint independent sets
/// enumerated, without the maximal-family reduction. Exponential in n; meant
/// as a reference for small graphs.
pub fn full_tuple_membership(g: &Graph, p: usize) -> Result<bool> {
    require_p(p)?;
    let n = g.order();
    if n > 12 {
        return Err(Error::capacity("full tuple enumeration limited to 12 vertices"));
    }
    if n < p {
        return Ok(false);
    }
    let max_sets: Vec<u64> = maximum_sets_raw(g).iter().map(|s| s.bits()).collect();
    let verts = g.active().to_vec();
    let mut sets = vec![0u64; p];
    Ok(all_tuples(g, &verts, 0, &mut sets, &max_sets))
}

fn all_tuples(g: &Graph, verts: &[usize], i: usize, sets: &mut [u64], max_sets: &[u64]) -> bool {
    if i == verts.len() {
        return extend_family(max_sets, sets).is_some();
    }
    let v = verts[i];
    if !all_tuples(g, verts, i + 1, sets, max_sets) {
        return false;
    }
    let nb = g.neighbors(v).bits();
    for k in 0..sets.len() {
        if sets[k] & nb == 0 {
            sets[k] |= 1 << v;
            let ok = all_tuples(g, verts, i + 1, sets, max_sets);
            sets[k] &= !(1 << v);
            if !ok {
                return false;
            }
        }
    }
    true
}

fn to_sets(bits: &[u64]) -> Vec<VertexSet> {
    bits.iter().map(|&b| VertexSet::from_bits(b)).collect()
}

/// Pairwise disjoint maximum sets S_i ⊇ family[i], if they exist.
pub(crate) fn extend_family(max_sets: &[u64], family: &[u64]) -> Option<Vec<u64>> {
    let union = family.iter().fold(0, |acc, a| acc | a);
    let mut slots: Vec<(usize, Vec<u64>)> = Vec::with_capacity(family.len());
    for (i, &a) in family.iter().enumerate() {
        let others = union & !a;
        let cands: Vec<u64> = max_sets
            .iter()
            .copied()
            .filter(|&m| m & a == a && m & others == 0)
            .collect();
        if cands.is_empty() {
            return None;
        }
        slots.push((i, cands));
    }
    slots.sort_by_key(|(_, c)| c.len());
    let mut chosen = vec![0u64; family.len()];
    pack(&slots, 0, 0, &mut chosen).then_some(chosen)
}

fn pack(slots: &[(usize, Vec<u64>)], k: usize, used: u64, chosen: &mut [u64]) -> bool {
    let Some((i, cands)) = slots.get(k) else {
        return true;
    };
    for &m in cands {
        if m & used == 0 {
            chosen[*i] = m;
            if pack(slots, k + 1, used | m, chosen) {
                return true;
            }
        }
    }
    false
}

/// Some `k` pairwise disjoint members of `cands`.
pub(crate) fn disjoint_choice(cands: &[u64], k: usize) -> Option<Vec<u64>> {
    fn go(cands: &[u64], start: usize, k: usize, used: u64, out: &mut Vec<u64>) -> bool {
        if k == 0 {
            return true;
        }
        for i in start..cands.len() {
            if cands[i] & used == 0 {
                out.push(cands[i]);
                if go(cands, i + 1, k - 1, used | cands[i], out) {
                    return true;
                }
                out.pop();
            }
        }
        false
    }
    let mut out = Vec::with_capacity(k);
    go(cands, 0, k, 0, &mut out).then_some(out)
}

/// Visits every unordered family of p pairwise disjoint independent sets
/// that is inclusion-maximal. Unused slots are empty. Stops when `f`
/// returns false.
fn for_each_maximal_family(g: &Graph, p: usize, f: &mut dyn FnMut(&[u64]) -> bool) {
    let verts = g.active().to_vec();
    let nbrs: Vec<u64> = verts.iter().map(|&v| g.neighbors(v).bits()).collect();
    let mut state = FamilyState {
        verts: &verts,
        nbrs: &nbrs,
        sets: vec![0; p],
        used: 0,
        skipped: Vec::new(),
    };
    state.walk(0, f);
}

struct FamilyState<'a> {
    verts: &'a [usize],
    nbrs: &'a [u64],
    sets: Vec<u64>,
    used: usize,
    skipped: Vec<usize>,
}

impl FamilyState<'_> {
    fn walk(&mut self, i: usize, f: &mut dyn FnMut(&[u64]) -> bool) -> bool {
        if i == self.verts.len() {
            // maximal: each skipped vertex conflicts with every slot
            let maximal = self.skipped.iter().all(|&j| {
                self.used == self.sets.len() && self.sets.iter().all(|&s| s & self.nbrs[j] != 0)
            });
            return !maximal || f(&self.sets);
        }
        let v = self.verts[i];
        let bit = 1u64 << v;
        for k in 0..self.used {
            if self.sets[k] & self.nbrs[i] == 0 {
                self.sets[k] |= bit;
                let go_on = self.walk(i + 1, f);
                self.sets[k] &= !bit;
                if !go_on {
                    return false;
                }
            }
        }
        if self.used < self.sets.len() {
            let k = self.used;
            self.sets[k] = bit;
            self.used += 1;
            let go_on = self.walk(i + 1, f);
            self.used -= 1;
            self.sets[k] = 0;
            if !go_on {
                return false;
            }
        }
        self.skipped.push(i);
        let go_on = self.walk(i + 1, f);
        self.skipped.pop();
        go_on
    }
}
