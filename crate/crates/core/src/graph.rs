//! Undirected simple graphs and the degree statistics the index formulas consume.

use std::collections::BTreeMap;
use std::fmt;

use crate::enumerate::canon;
use crate::error::{Error, Result};

/// Largest supported order: one `u64` adjacency row per vertex.
pub const MAX_ORDER: usize = 64;

/// Simple undirected graph on vertices `0..n`, stored as bitset rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge { n, max: MAX_ORDER });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        Graph { n, adj }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        BitIter(self.adj[v])
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| BitIter(self.adj[u] & !((bit(u) << 1).wrapping_sub(1))).map(move |v| (u, v)))
    }

    /// Copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Copy with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    /// Copy with fresh isolated vertices appended.
    pub fn with_vertices(&self, extra: usize) -> Result<Graph> {
        let n = self.n + extra;
        if n > MAX_ORDER {
            return Err(Error::TooLarge { n, max: MAX_ORDER });
        }
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        Ok(Graph { n, adj })
    }

    /// Copy with vertex `v` deleted; later vertices shift down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let low = bit(v) - 1;
        let squeeze = |r: u64| (r & low) | ((r >> 1) & !low);
        let adj = (0..self.n).filter(|&u| u != v).map(|u| squeeze(self.adj[u])).collect();
        Ok(Graph { n: self.n - 1, adj })
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!("permutation has length {}, expected {}", perm.len(), self.n)));
        }
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= bit(perm[v]);
            adj[perm[v]] |= bit(perm[u]);
        }
        Ok(Graph { n: self.n, adj })
    }

    pub fn complement(&self) -> Graph {
        let full = if self.n == 64 { u64::MAX } else { bit(self.n) - 1 };
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        let all = if self.n == 64 { u64::MAX } else { bit(self.n) - 1 };
        let mut unseen = all;
        let mut count = 0;
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let comp = self.reach(start);
            unseen &= !comp;
            count += 1;
        }
        count
    }

    fn reach(&self, start: usize) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Every vertex reachable from vertex 0. The null graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.reach(0).count_ones() as usize == self.n
    }

    /// `m - n + 1` for connected graphs.
    pub fn cyclomatic(&self) -> Result<i64> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.m() as i64 - self.n as i64 + 1)
    }

    /// Connected with maximum degree at most 4.
    pub fn is_chemical(&self) -> bool {
        self.is_connected() && self.max_degree() <= 4
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    pub fn pendant_count(&self) -> usize {
        self.adj.iter().filter(|r| r.count_ones() == 1).count()
    }

    /// Minimum degree over vertices of degree at least 2.
    pub fn min_non_pendant_degree(&self) -> Option<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).filter(|&d| d >= 2).min()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }

    /// Degree-3 vertices with at least two neighbours of degree greater than 2.
    pub fn n3_prime(&self) -> usize {
        let deg = self.degrees();
        (0..self.n)
            .filter(|&v| deg[v] == 3 && self.neighbors(v).filter(|&w| deg[w] > 2).count() >= 2)
            .count()
    }

    pub fn isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.m() != other.m() {
            return false;
        }
        let mut da = self.degrees();
        let mut db = other.degrees();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        canon::canonical_graph(self) == canon::canonical_graph(other)
    }

    /// Induced subgraph on the vertices in `keep`, relabelled in increasing order.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        for &v in keep {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }
}

/// Iterator over set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Degree statistics: per-vertex degrees, extremes, pendant count,
/// vertex counts `n_i` by degree and edge counts `x_{i,j}` by degree pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    /// `None` when no vertex has degree >= 2.
    pub min_non_pendant_degree: Option<usize>,
    pub pendants: usize,
    /// `vertex_counts[i]` = number of vertices of degree `i`, for `i` in `0..=max_degree`.
    pub vertex_counts: Vec<usize>,
    /// Keyed by `(i, j)` with `i <= j`.
    pub edge_classes: BTreeMap<(usize, usize), usize>,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let degrees = g.degrees();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let mut vertex_counts = vec![0; max_degree + 1];
        for &d in &degrees {
            vertex_counts[d] += 1;
        }
        let mut edge_classes = BTreeMap::new();
        for (u, v) in g.edges() {
            let (a, b) = (degrees[u].min(degrees[v]), degrees[u].max(degrees[v]));
            *edge_classes.entry((a, b)).or_insert(0) += 1;
        }
        DegreeProfile {
            min_non_pendant_degree: degrees.iter().copied().filter(|&d| d >= 2).min(),
            pendants: vertex_counts.get(1).copied().unwrap_or(0),
            degrees,
            max_degree,
            min_degree,
            vertex_counts,
            edge_classes,
        }
    }

    /// `n_i`: vertices of degree `i`.
    pub fn n_i(&self, i: usize) -> usize {
        self.vertex_counts.get(i).copied().unwrap_or(0)
    }

    /// `x_{i,j}`: edges joining a degree-`i` and a degree-`j` vertex.
    pub fn x(&self, i: usize, j: usize) -> usize {
        self.edge_classes.get(&(i.min(j), i.max(j))).copied().unwrap_or(0)
    }

    pub fn order(&self) -> usize {
        self.degrees.len()
    }

    pub fn size(&self) -> usize {
        self.edge_classes.values().sum()
    }
}
