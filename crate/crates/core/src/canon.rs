//! Canonical forms for small graphs.
//!
//! Vertices are first coloured by iterated degree refinement; colour classes
//! are ordered by their (isomorphism-invariant) signatures. The canonical
//! form is the lexicographically smallest graph6 string over all vertex
//! orders that list the colour classes in that order. The search places one
//! vertex per position and compares the adjacency bits of that position's
//! column against the best string so far, abandoning any prefix that is
//! already larger. Two unplaced vertices with the same neighbourhood
//! (ignoring each other) are interchangeable, so only one of them is tried
//! at each position.

use std::fmt;

use crate::corpus::graph6;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest order accepted by [`canonical_form`].
pub const CANON_CAP: usize = 10;

/// graph6 bytes of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({:?})", self.0)
    }
}

/// Canonical form plus the relabelled graph it encodes.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub form: CanonicalForm,
    /// `order[i]` is the original label placed at position `i`.
    pub order: Vec<usize>,
    pub graph: Graph,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_capped(g, CANON_CAP)
}

pub fn canonical_form_capped(g: &Graph, cap: usize) -> Result<CanonicalForm> {
    canonicalize_capped(g, cap).map(|c| c.form)
}

pub fn canonicalize(g: &Graph) -> Result<Canonical> {
    canonicalize_capped(g, CANON_CAP)
}

pub fn canonicalize_capped(g: &Graph, cap: usize) -> Result<Canonical> {
    let n = g.order();
    if n > cap {
        return Err(Error::capacity(format!(
            "canonical form limited to {cap} vertices, graph has {n}"
        )));
    }
    // 64-bit prefix packing below needs n(n-1)/2 <= 64.
    if n > 11 {
        return Err(Error::capacity("canonical form supports at most 11 vertices"));
    }
    let (compact, old_labels) = g.compact();
    let rows: Vec<u64> = (0..n).map(|v| compact.neighbors(v).bits()).collect();
    let colors = refine_colors(&rows);

    let mut slots: Vec<u32> = colors.clone();
    slots.sort_unstable();

    let mut search = Search {
        rows: &rows,
        colors: &colors,
        slots: &slots,
        n,
        total_bits: n * n.saturating_sub(1) / 2,
        best_bits: u64::MAX,
        best_order: Vec::new(),
        order: Vec::with_capacity(n),
    };
    search.run(0, 0);

    let mut perm = vec![0usize; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    let graph = compact.relabel(&perm)?;
    let form = CanonicalForm(graph6::encode(&graph)?);
    let order = search.best_order.iter().map(|&v| old_labels[v]).collect();
    Ok(Canonical { form, order, graph })
}

/// Iterated colour refinement starting from degrees. Colours are dense
/// indices ordered by signature, so they do not depend on vertex labels.
fn refine_colors(rows: &[u64]) -> Vec<u32> {
    let n = rows.len();
    let mut colors: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    let mut classes = count_distinct(&colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = bits(rows[v]).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present") as u32)
            .collect();
        let next_classes = distinct.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_distinct(xs: &[u32]) -> usize {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let v = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(v)
        }
    })
}

struct Search<'a> {
    rows: &'a [u64],
    colors: &'a [u32],
    slots: &'a [u32],
    n: usize,
    total_bits: usize,
    best_bits: u64,
    best_order: Vec<usize>,
    order: Vec<usize>,
}

impl Search<'_> {
    /// `prefix` holds the bits emitted so far, left aligned at `total_bits`.
    fn run(&mut self, placed: u64, prefix: u64) {
        let pos = self.order.len();
        if pos == self.n {
            if self.best_order.is_empty() || prefix < self.best_bits {
                self.best_bits = prefix;
                self.best_order = self.order.clone();
            }
            return;
        }
        let want = self.slots[pos];
        let end = pos * (pos + 1) / 2;
        let shift = self.total_bits - end;
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if placed >> v & 1 == 1 || self.colors[v] != want {
                continue;
            }
            // twins: swapping them is an automorphism fixing every placed vertex
            if tried
                .iter()
                .any(|&t| self.rows[t] & !(1 << v) == self.rows[v] & !(1 << t))
            {
                continue;
            }
            tried.push(v);

            let mut column = 0u64;
            for &u in &self.order {
                column = column << 1 | (self.rows[v] >> u & 1);
            }
            let next = prefix | column << shift;
            if !self.best_order.is_empty() && end > 0 && next >> shift > self.best_bits >> shift {
                continue;
            }
            self.order.push(v);
            self.run(placed | 1 << v, next);
            self.order.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_complementary_c5() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            canonical_form(&c5).unwrap(),
            canonical_form(&c5.complement()).unwrap()
        );
    }

    #[test]
    fn distinguishes_triangle_from_path() {
        let k3 = Graph::complete(3).unwrap();
        let p3 = Graph::path(3).unwrap();
        assert_ne!(canonical_form(&k3).unwrap(), canonical_form(&p3).unwrap());
    }

    #[test]
    fn masked_graphs_use_active_vertices_only() {
        let c5 = Graph::cycle(5).unwrap();
        let l = c5.localize(crate::VertexSet::singleton(0)).unwrap();
        assert_eq!(
            canonical_form(&l).unwrap(),
            canonical_form(&Graph::complete(2).unwrap()).unwrap()
        );
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::cycle(11).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::Capacity(_))));
        assert!(canonical_form_capped(&g, 11).is_ok());
        assert!(canonical_form(&Graph::cycle(10).unwrap()).is_ok());
    }

    #[test]
    fn canonical_graph_encodes_to_form() {
        let g = Graph::from_edges(6, &[(0, 5), (5, 2), (2, 3), (1, 4)]).unwrap();
        let c = canonicalize(&g).unwrap();
        assert_eq!(graph6::encode(&c.graph).unwrap(), c.form.as_str());
        assert_eq!(c.order.len(), 6);
    }
}
