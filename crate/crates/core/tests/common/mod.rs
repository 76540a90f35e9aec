//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls the search routines under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use wplab::{Graph, VertexSet};

/// Adjacency of a compact graph as a plain matrix.
pub fn matrix(g: &Graph) -> (usize, Vec<Vec<bool>>) {
    let (c, _) = g.compact();
    let n = c.order();
    let mut m = vec![vec![false; n]; n];
    for (a, b) in c.edges() {
        m[a][b] = true;
        m[b][a] = true;
    }
    (n, m)
}

fn independent(m: &[Vec<bool>], s: u64) -> bool {
    let n = m.len();
    (0..n).all(|i| s >> i & 1 == 0 || (i + 1..n).all(|j| s >> j & 1 == 0 || !m[i][j]))
}

/// Every independent set of a compact graph, as bitmasks over 0..n.
pub fn independent_sets(m: &[Vec<bool>]) -> Vec<u64> {
    (0u64..1 << m.len()).filter(|&s| independent(m, s)).collect()
}

pub fn brute_alpha(g: &Graph) -> usize {
    let (_, m) = matrix(g);
    independent_sets(&m).iter().map(|s| s.count_ones() as usize).max().unwrap_or(0)
}

pub fn brute_well_covered(g: &Graph) -> bool {
    let (n, m) = matrix(g);
    let sets = independent_sets(&m);
    let a = sets.iter().map(|s| s.count_ones()).max().unwrap_or(0);
    sets.iter().all(|&s| {
        let maximal = (0..n).all(|v| s >> v & 1 == 1 || !independent(&m, s | 1 << v));
        !maximal || s.count_ones() == a
    })
}

fn extends(maxs: &[u64], tuple: &[u64], used: u64) -> bool {
    match tuple.split_first() {
        None => true,
        Some((&a, rest)) => maxs
            .iter()
            .any(|&s| s & a == a && s & used == 0 && extends(maxs, rest, used | s)),
    }
}

fn tuples(sets: &[u64], p: usize, used: u64, cur: &mut Vec<u64>, f: &mut dyn FnMut(&[u64]) -> bool) -> bool {
    if cur.len() == p {
        return f(cur);
    }
    for &s in sets {
        if s & used == 0 {
            cur.push(s);
            let go_on = tuples(sets, p, used | s, cur, f);
            cur.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// The W_p definition over every ordered tuple, by exhaustive search.
pub fn brute_wp(g: &Graph, p: usize) -> bool {
    let (n, m) = matrix(g);
    if n < p {
        return false;
    }
    let sets = independent_sets(&m);
    let a = sets.iter().map(|s| s.count_ones()).max().unwrap_or(0);
    let maxs: Vec<u64> = sets.iter().copied().filter(|s| s.count_ones() == a).collect();
    tuples(&sets, p, 0, &mut Vec::new(), &mut |t| extends(&maxs, t, 0))
}

/// All permutations of 0..n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            cur.push(v);
            go(cur, left, out);
            cur.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Isomorphism invariant that separates classes: the smallest edge code over
/// all vertex permutations.
pub fn class_code(n: usize, edges: u64, perms: &[Vec<usize>]) -> u64 {
    let pairs = pair_index(n);
    let mut pos = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        pos[i][j] = k;
        pos[j][i] = k;
    }
    let present: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| edges >> k & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    perms
        .iter()
        .map(|perm| present.iter().fold(0u64, |acc, &(i, j)| acc | 1 << pos[perm[i]][perm[j]]))
        .min()
        .unwrap_or(0)
}

pub fn graph_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let (n, m) = matrix(g);
    let mut edges = 0u64;
    for (k, (i, j)) in pair_index(n).into_iter().enumerate() {
        if m[i][j] {
            edges |= 1 << k;
        }
    }
    class_code(n, edges, perms)
}

/// Classes on n vertices found by enumerating every labelled graph.
pub fn labelled_classes(n: usize) -> BTreeSet<u64> {
    let perms = permutations(n);
    let m = n * n.saturating_sub(1) / 2;
    let mut seen = BTreeSet::new();
    for edges in 0u64..1 << m {
        seen.insert(class_code(n, edges, &perms));
    }
    seen
}

/// Fisher–Yates shuffle of 0..n driven by `next`.
pub fn shuffled(n: usize, next: &mut dyn FnMut(usize) -> usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, next(i + 1));
    }
    p
}

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}
