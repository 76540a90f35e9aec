//! Named graph families, written `family:params`.
//!
//! `complete:N`, `cycle:N`, `path:N`, `empty:N`, `bipartite:M,N`,
//! `join-cliques:A,B,C,D` for (K_A ∪ K_B) + (K_C ∪ K_D), and
//! `corona:P:BASE` for BASE ∘ K_P, e.g. `corona:2:cycle:3`.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn numbers(params: &str, family: &str) -> Result<Vec<usize>> {
    params
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("{family}: expected a number, got {t:?}")))
        })
        .collect()
}

fn exactly<const K: usize>(params: &str, family: &str) -> Result<[usize; K]> {
    let v = numbers(params, family)?;
    v.as_slice()
        .try_into()
        .map_err(|_| Error::invalid(format!("{family}: expected {K} parameter(s), got {}", v.len())))
}

/// (K_{s0} ∪ K_{s1}) + (K_{s2} ∪ K_{s3}).
pub fn join_cliques(sizes: &[usize]) -> Result<Graph> {
    let [a, b, c, d]: [usize; 4] = sizes
        .try_into()
        .map_err(|_| Error::invalid("join-cliques takes exactly four sizes"))?;
    let left = Graph::disjoint_union(&Graph::complete(a)?, &Graph::complete(b)?)?;
    let right = Graph::disjoint_union(&Graph::complete(c)?, &Graph::complete(d)?)?;
    Graph::join(&left, &right)
}

pub fn parse_family(spec: &str) -> Result<Graph> {
    let (name, params) = spec
        .split_once(':')
        .ok_or_else(|| Error::invalid(format!("expected family:params, got {spec:?}")))?;
    match name {
        "complete" => Graph::complete(exactly::<1>(params, name)?[0]),
        "cycle" => Graph::cycle(exactly::<1>(params, name)?[0]),
        "path" => Graph::path(exactly::<1>(params, name)?[0]),
        "empty" => Graph::empty(exactly::<1>(params, name)?[0]),
        "bipartite" => {
            let [m, n] = exactly::<2>(params, name)?;
            Graph::complete_bipartite(m, n)
        }
        "join-cliques" => join_cliques(&numbers(params, name)?),
        "corona" => {
            let (p, base) = params
                .split_once(':')
                .ok_or_else(|| Error::invalid("corona: expected corona:P:BASE"))?;
            let p = exactly::<1>(p, name)?[0];
            Graph::corona_complete(&parse_family(base)?, p)
        }
        other => Err(Error::invalid(format!("unknown family {other:?}"))),
    }
}
