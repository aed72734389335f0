//! Canonical labelling by degree refinement and backtracking.
//!
//! The ordered partition is refined to equitability, a vertex of the first
//! smallest non-singleton cell is individualised, and the search recurses.
//! Each leaf is a labelling; the lexicographically smallest row-major
//! adjacency string over all leaves is the canonical one. Subtrees are
//! skipped when an automorphism already found (or a twin transposition)
//! fixing the current path maps them onto an explored sibling.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bit, BitIter, Graph};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_ORDER: usize = 16;

/// Relabelling-invariant key of an isomorphism class.
///
/// Byte 0 is the order; the rest is the upper-triangle adjacency of the
/// canonically labelled graph in graph6 bit order, packed big-endian.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.0[1 + k / 8] & (0x80 >> (k % 8)) != 0 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                k += 1;
            }
        }
        Graph::from_rows(n, adj)
    }

    pub(crate) fn of_canonical_graph(g: &Graph) -> Self {
        let n = g.n();
        let pairs = n * n.saturating_sub(1) / 2;
        let mut bytes = vec![0u8; 1 + pairs.div_ceil(8)];
        bytes[0] = n as u8;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if g.has_edge(i, j) {
                    bytes[1 + k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        CanonicalForm(bytes)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({self})")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.n() > MAX_CANON_ORDER {
        return Err(Error::TooLarge { n: g.n(), max: MAX_CANON_ORDER });
    }
    Ok(CanonicalForm::of_canonical_graph(&canonical_graph(g)))
}

/// A canonical labelling: vertex `v` is placed at position `pos[v]`.
#[derive(Clone, Debug)]
pub(crate) struct Labeling {
    pub pos: Vec<usize>,
    pub graph: Graph,
}

pub(crate) fn canonical_graph(g: &Graph) -> Graph {
    canonical_labeling(g).graph
}

pub(crate) fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.n();
    if n == 0 {
        return Labeling { pos: vec![], graph: g.clone() };
    }
    let mut search = Search { adj: g.rows(), n, best: None, autos: twin_transpositions(g.rows()) };
    let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
    search.run(vec![all], &mut Vec::with_capacity(n));
    let (cert, order) = search.best.expect("search visits at least one leaf");
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let rows = cert.iter().map(|r| r.reverse_bits()).collect();
    Labeling { pos, graph: Graph::from_rows(n, rows) }
}

/// Transpositions `(a b)` of vertices with identical neighbourhoods
/// (ignoring each other); each is an automorphism.
fn twin_transpositions(adj: &[u64]) -> Vec<Vec<u8>> {
    let n = adj.len();
    let mut class_rep: Vec<Option<usize>> = vec![None; n];
    let mut out = Vec::new();
    for v in 0..n {
        if class_rep[v].is_some() {
            continue;
        }
        for w in v + 1..n {
            if class_rep[w].is_none() && adj[v] & !bit(w) == adj[w] & !bit(v) {
                class_rep[w] = Some(v);
                let mut p: Vec<u8> = (0..n as u8).collect();
                p.swap(v, w);
                out.push(p);
            }
        }
    }
    out
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Known automorphisms as vertex maps.
    autos: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn run(&mut self, mut cells: Vec<u64>, path: &mut Vec<usize>) {
        refine(self.adj, &mut cells, self.n);
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in BitIter(cell) {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, path) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            path.push(v);
            self.run(child, path);
            path.pop();
        }
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if path.iter().all(|&p| a[p] as usize == p) {
                any = true;
                for (x, &y) in a.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y as usize));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let cert: Vec<u64> = order
            .iter()
            .map(|&v| BitIter(self.adj[v]).fold(0u64, |r, w| r | (1u64 << (63 - pos[w]))))
            .collect();
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((best, best_order)) => match cert.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((cert, order)),
                std::cmp::Ordering::Equal => {
                    let mut a = vec![0u8; self.n];
                    for (i, &v) in best_order.iter().enumerate() {
                        a[v] = order[i] as u8;
                    }
                    if a.iter().enumerate().any(|(x, &y)| x != y as usize) {
                        self.autos.push(a);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

/// Refine an ordered partition (cells as vertex masks) to an equitable one.
/// Each cell is split by neighbour count into each other cell; sub-cells are
/// ordered by increasing count, so the result is labelling-equivariant.
fn refine(adj: &[u64], cells: &mut Vec<u64>, n: usize) {
    let mut scratch = Vec::with_capacity(n);
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            if cells.len() == n {
                return;
            }
            let splitter = cells[w];
            scratch.clear();
            for &x in cells.iter() {
                if x & (x - 1) == 0 {
                    scratch.push(x);
                    continue;
                }
                let mut by_count = [0u64; 65];
                let mut present: u128 = 0;
                for v in BitIter(x) {
                    let c = (adj[v] & splitter).count_ones() as usize;
                    by_count[c] |= bit(v);
                    present |= 1u128 << c;
                }
                if present & (present - 1) == 0 {
                    scratch.push(x);
                } else {
                    changed = true;
                    let mut p = present;
                    while p != 0 {
                        let c = p.trailing_zeros() as usize;
                        p &= p - 1;
                        scratch.push(by_count[c]);
                    }
                }
            }
            std::mem::swap(cells, &mut scratch);
            w += 1;
        }
        if !changed {
            break;
        }
    }
}
