//! Reference implementations shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use azi::enumerate::{canonical_form, CanonicalForm};
use azi::Graph;
use rayon::prelude::*;

/// Filter applied to labelled graphs, written without the library's own
/// structural helpers.
#[derive(Clone, Copy)]
pub struct Filter {
    pub edges: (usize, usize),
    pub max_degree: usize,
    pub connected: bool,
    pub complement_connected: bool,
}

fn connected(n: usize, adj: &[Vec<bool>], want: bool) -> bool {
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if w != v && adj[v][w] == want && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn labelled_classes(n: usize, f: Filter) -> BTreeSet<CanonicalForm> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let m = mask.count_ones() as usize;
            if m < f.edges.0 || m > f.edges.1 {
                return None;
            }
            let mut adj = vec![vec![false; n]; n];
            let mut edges = vec![];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    adj[i][j] = true;
                    adj[j][i] = true;
                    edges.push((i, j));
                }
            }
            if adj.iter().any(|row| row.iter().filter(|&&b| b).count() > f.max_degree) {
                return None;
            }
            if f.connected && !connected(n, &adj, true) {
                return None;
            }
            if f.complement_connected && !connected(n, &adj, false) {
                return None;
            }
            Some(canonical_form(&Graph::from_edges(n, &edges).unwrap()).unwrap())
        })
        .collect()
}


pub fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
}

/// Random spanning tree plus up to `extra` chords.
pub fn random_connected(rng: &mut impl rand::Rng, n: usize, extra: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        g = g.with_edge(rng.gen_range(0..v), v).unwrap();
    }
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && !g.has_edge(a, b) {
            g = g.with_edge(a, b).unwrap();
        }
    }
    g
}
