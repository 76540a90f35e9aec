//! Isomorph-free enumeration of all graphs on n vertices.
//!
//! Every graph on n vertices arises from some (n−1)-vertex graph by adding a
//! vertex, so extending one representative per class by each of the 2^{n−1}
//! possible neighbourhoods and deduplicating by canonical form yields one
//! representative per class. Representatives are the canonical relabellings,
//! emitted in canonical-form order.

use std::collections::BTreeSet;

use crate::canon::{canonicalize, CanonicalForm};
use crate::corpus::graph6;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{self, Execution};

pub const MAX_GENERATED_ORDER: usize = 8;

fn check_order(n: usize) -> Result<()> {
    match n {
        0 => Err(Error::invalid("generation needs n >= 1")),
        n if n > MAX_GENERATED_ORDER => Err(Error::capacity(format!(
            "generation supports n <= {MAX_GENERATED_ORDER}, got {n}"
        ))),
        _ => Ok(()),
    }
}

fn extend_level(parents: &[Graph], exec: Execution, progress: &(dyn Fn(usize, usize) + Sync)) -> Vec<Graph> {
    let k = parents.first().map_or(1, |g| g.order() + 1);
    let done = std::sync::atomic::AtomicUsize::new(0);
    let per_parent: Vec<Vec<CanonicalForm>> = par::map(exec, parents, |parent| {
        let base: Vec<u64> = (0..k - 1).map(|v| parent.neighbors(v).bits()).collect();
        let mut forms = Vec::with_capacity(1 << (k - 1));
        let mut rows = vec![0u64; k];
        for mask in 0u64..1 << (k - 1) {
            for v in 0..k - 1 {
                rows[v] = base[v] | (mask >> v & 1) << (k - 1);
            }
            rows[k - 1] = mask;
            let g = Graph::from_rows(k, &rows).expect("rows are symmetric by construction");
            forms.push(canonicalize(&g).expect("order within canonical cap").form);
        }
        forms.sort_unstable();
        forms.dedup();
        let finished = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
        progress(finished, parents.len());
        forms
    });
    let merged: BTreeSet<CanonicalForm> = per_parent.into_iter().flatten().collect();
    merged
        .into_iter()
        .map(|f| graph6::decode(f.as_bytes()).expect("canonical forms are valid graph6"))
        .collect()
}

/// Class representatives for every order `1..=max_n`; entry `k − 1` holds order k.
pub fn levels(max_n: usize, exec: Execution) -> Result<Vec<Vec<Graph>>> {
    levels_with_progress(max_n, exec, &|_, _| {})
}

/// As [`levels`], reporting `(parents done, parents total)` for the last level.
pub fn levels_with_progress(
    max_n: usize,
    exec: Execution,
    progress: &(dyn Fn(usize, usize) + Sync),
) -> Result<Vec<Vec<Graph>>> {
    check_order(max_n)?;
    let mut out = vec![vec![Graph::complete(1)?]];
    for k in 2..=max_n {
        let quiet = |_: usize, _: usize| {};
        let report: &(dyn Fn(usize, usize) + Sync) = if k == max_n { progress } else { &quiet };
        let next = extend_level(&out[k - 2], exec, report);
        out.push(next);
    }
    Ok(out)
}

/// One representative per isomorphism class on exactly `n` vertices.
pub fn classes(n: usize, connected_only: bool, exec: Execution) -> Result<Vec<Graph>> {
    let mut all = levels(n, exec)?.pop().expect("at least one level");
    if connected_only {
        all.retain(Graph::is_connected);
    }
    Ok(all)
}

/// Every class with order in `lo..=hi`, ordered by order then canonical form.
pub fn classes_in_range(lo: usize, hi: usize, connected_only: bool, exec: Execution) -> Result<Vec<Graph>> {
    check_order(lo)?;
    check_order(hi)?;
    let mut out = Vec::new();
    for (i, level) in levels(hi, exec)?.into_iter().enumerate() {
        if i + 1 >= lo {
            out.extend(level.into_iter().filter(|g| !connected_only || g.is_connected()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = levels(5, Execution::Sequential)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| classes(n, true, Execution::Sequential).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(classes(0, false, Execution::Sequential), Err(Error::InvalidArgument(_))));
        assert!(matches!(classes(9, false, Execution::Sequential), Err(Error::Capacity(_))));
    }

    #[test]
    fn representatives_are_canonical_and_sorted() {
        let reps = classes(5, false, Execution::Parallel).unwrap();
        let forms: Vec<String> = reps.iter().map(|g| graph6::encode(g).unwrap()).collect();
        for (g, f) in reps.iter().zip(&forms) {
            assert_eq!(canonicalize(g).unwrap().form.as_str(), f);
        }
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
    }
}
