//! The augmentation tree. Every node is a canonically labelled graph.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::{canonical_graph, canonical_labeling};
use super::EnumSpec;
use crate::graph::{bit, BitIter, Graph};

/// Subtrees handed to workers; fixed so the split does not depend on the
/// pool size.
const FRONTIER: usize = 256;

pub(super) fn run(spec: &EnumSpec) -> Vec<Graph> {
    let mut out = vec![];
    let mut level = vec![canonical_graph(&Graph::empty(spec.n).expect("order checked"))];
    while !level.is_empty() && level.len() < FRONTIER {
        let mut next = vec![];
        for node in &level {
            if spec.accepts(node) {
                out.push(node.clone());
            }
            next.extend(children(spec, node));
        }
        level = next;
    }
    let rest: Vec<Graph> = level
        .into_par_iter()
        .flat_map_iter(|node| {
            let mut found = vec![];
            descend(spec, node, &mut found);
            found
        })
        .collect();
    out.extend(rest);
    out
}

fn descend(spec: &EnumSpec, node: Graph, out: &mut Vec<Graph>) {
    if spec.accepts(&node) {
        out.push(node.clone());
    }
    for child in children(spec, &node) {
        descend(spec, child, out);
    }
}

/// Isomorphism-invariant score of an edge; the canonical deletion edge
/// maximises it.
type EdgeScore = ((u32, u32), (u32, u32), u32);

fn edge_scores(g: &Graph) -> impl Fn(usize, usize) -> EdgeScore + '_ {
    let rows = g.rows();
    let deg: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    let nsum: Vec<u32> = rows.iter().map(|&r| BitIter(r).map(|x| deg[x]).sum()).collect();
    move |u, v| {
        let a = (deg[u], nsum[u]);
        let b = (deg[v], nsum[v]);
        (a.min(b), a.max(b), (rows[u] & rows[v]).count_ones())
    }
}

fn children(spec: &EnumSpec, parent: &Graph) -> Vec<Graph> {
    let m = parent.m();
    if m >= spec.max_edges {
        return vec![];
    }
    if spec.connected && parent.component_count() - 1 > spec.max_edges - m {
        return vec![];
    }
    let n = parent.n();
    let open: u64 = (0..n).filter(|&v| parent.degree(v) < spec.max_degree).fold(0, |acc, v| acc | bit(v));
    let mut seen = HashSet::new();
    let mut out = vec![];
    for u in BitIter(open) {
        let later = open & !parent.rows()[u] & !((bit(u) << 1).wrapping_sub(1));
        for v in BitIter(later) {
            let child = parent.with_edge(u, v).expect("non-edge between distinct vertices");
            if let Some(canon) = accept(parent, &child, u, v) {
                if seen.insert(canon.clone()) {
                    out.push(canon);
                }
            }
        }
    }
    out
}

/// The canonical form of `child` when `uv` is (up to isomorphism) its
/// canonical deletion edge back to `parent`.
fn accept(parent: &Graph, child: &Graph, u: usize, v: usize) -> Option<Graph> {
    let score = edge_scores(child);
    let added = score(u, v);
    let mut ties = vec![];
    for (a, b) in child.edges() {
        let s = score(a, b);
        if s > added {
            return None;
        }
        if s == added {
            ties.push((a, b));
        }
    }
    if ties.len() == 1 {
        return Some(canonical_graph(child));
    }
    let lab = canonical_labeling(child);
    let place = |(a, b): (usize, usize)| (lab.pos[a].max(lab.pos[b]), lab.pos[a].min(lab.pos[b]));
    let &(a, b) = ties.iter().max_by_key(|&&e| place(e)).expect("uv is tied with itself");
    if place((a, b)) == place((u, v)) {
        return Some(lab.graph);
    }
    let rest = child.without_edge(a, b).expect("tied edge exists");
    (canonical_graph(&rest) == *parent).then_some(lab.graph)
}
