//! Extremal graph families and the transformations used to move between them.
//!
//! The upper-bound graphs B′ and U′ are built from a core of degree-4
//! vertices, each topped up to degree 4 with pendant paths of length two.
//! Only the core edges carry a weight other than 8, so any core with the
//! right vertex and edge counts gives the same index; the shapes fixed here
//! are one reproducible choice.

mod membership;
mod transform;

use std::fmt;
use std::str::FromStr;

pub use membership::{biregular, phi1_member, phi2_member, psi_member, psi_membership, PsiVerdict};
pub use transform::{attach_p2_path, attach_p2_path_f_delta, smooth_degree2, smooth_degree2_f_delta, subdivide_edge, subdivide_edge_f_delta};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cycle class for the Ψ constructor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CycleClass {
    Unicyclic,
    Bicyclic,
}

impl CycleClass {
    /// Edges minus vertices.
    pub fn excess(self) -> usize {
        match self {
            CycleClass::Unicyclic => 0,
            CycleClass::Bicyclic => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CycleClass::Unicyclic => "unicyclic",
            CycleClass::Bicyclic => "bicyclic",
        }
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CycleClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unicyclic" => Ok(CycleClass::Unicyclic),
            "bicyclic" => Ok(CycleClass::Bicyclic),
            _ => Err(Error::InvalidParameter(format!("unknown class {s:?} (expected unicyclic or bicyclic)"))),
        }
    }
}

/// Pendant-free chemical bicyclic shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lemma1Shape {
    /// Two branch vertices joined by three internally disjoint paths of
    /// the given lengths. The branch vertices are adjacent iff a length is 1.
    Theta { a: usize, b: usize, c: usize },
    /// Cycles `C_a` and `C_b` joined by a path of `bridge >= 1` edges.
    /// A one-edge bridge makes the two degree-3 vertices adjacent.
    TwoCyclesBridged { a: usize, b: usize, bridge: usize },
    /// Cycles `C_a` and `C_b` sharing one vertex of degree 4.
    TwoCyclesSharedVertex { a: usize, b: usize },
}

/// Parameters selecting one extremal construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    BPrime { k: i64 },
    UPrime { k: i64 },
    Psi { n: usize, class: CycleClass },
    Lemma1(Lemma1Shape),
}

impl FamilySpec {
    pub fn construct(&self) -> Result<Graph> {
        match *self {
            FamilySpec::BPrime { k } => construct_b_prime(k),
            FamilySpec::UPrime { k } => construct_u_prime(k),
            FamilySpec::Psi { n, class } => construct_psi(n, class),
            FamilySpec::Lemma1(shape) => construct_lemma1(shape),
        }
    }
}

/// Incremental edge-list builder.
#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Path of `len` edges from `from` to `to` through fresh vertices.
    fn path(&mut self, from: usize, to: usize, len: usize) {
        let mut prev = from;
        for _ in 1..len {
            let v = self.vertex();
            self.edge(prev, v);
            prev = v;
        }
        self.edge(prev, to);
    }

    fn cycle(&mut self, through: usize, len: usize) {
        let first = self.vertex();
        self.edge(through, first);
        self.path(first, through, len - 1);
    }

    fn pendant_p2(&mut self, at: usize) {
        let a = self.vertex();
        let b = self.vertex();
        self.edge(at, a);
        self.edge(a, b);
    }

    fn pendant(&mut self, at: usize) {
        let a = self.vertex();
        self.edge(at, a);
    }

    fn finish(self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }
}

fn nonnegative(k: i64) -> Result<usize> {
    usize::try_from(k).map_err(|_| Error::InvalidParameter(format!("k = {k} must be >= 0")))
}

/// Chemical bicyclic graph on `5k + 26` vertices attaining the upper bound.
///
/// Core: two triangles joined by a path of `k + 1` edges (`k + 6` vertices,
/// `k + 7` edges); every core vertex gets `4 - core degree` pendant P₂ paths.
pub fn construct_b_prime(k: i64) -> Result<Graph> {
    let k = nonnegative(k)?;
    let mut b = Builder::default();
    let left: Vec<usize> = (0..3).map(|_| b.vertex()).collect();
    let right: Vec<usize> = (0..3).map(|_| b.vertex()).collect();
    for t in [&left, &right] {
        b.edge(t[0], t[1]);
        b.edge(t[1], t[2]);
        b.edge(t[2], t[0]);
    }
    let mut core_degree = vec![2usize; 6];
    let mut prev = left[0];
    for _ in 0..k {
        let v = b.vertex();
        core_degree.push(2);
        b.edge(prev, v);
        prev = v;
    }
    b.edge(prev, right[0]);
    core_degree[left[0]] = 3;
    core_degree[right[0]] = 3;
    for (v, d) in core_degree.into_iter().enumerate() {
        for _ in d..4 {
            b.pendant_p2(v);
        }
    }
    b.finish()
}

/// Chemical unicyclic graph on `5k + 15` vertices attaining the upper bound:
/// a cycle `C_{k+3}` with two pendant P₂ paths on every cycle vertex.
pub fn construct_u_prime(k: i64) -> Result<Graph> {
    let k = nonnegative(k)?;
    let mut b = Builder::default();
    let core: Vec<usize> = (0..k + 3).map(|_| b.vertex()).collect();
    for i in 0..core.len() {
        b.edge(core[i], core[(i + 1) % core.len()]);
    }
    for &v in &core {
        b.pendant_p2(v);
        b.pendant_p2(v);
    }
    b.finish()
}

/// A member of Ψ with Δ = 4: every edge joins a degree-4 hub to a vertex of
/// degree 1 or 2.
///
/// Hubs form a chain linked by degree-2 connectors; the first link is
/// doubled (unicyclic) or tripled (bicyclic) to close the cycles, and hubs
/// are topped up to degree 4 with pendants. Requires `n ≡ 0 (mod 4)`,
/// `n >= 8` for unicyclic and `n ≡ 3 (mod 4)`, `n >= 7` for bicyclic.
pub fn construct_psi(n: usize, class: CycleClass) -> Result<Graph> {
    let (residue, min) = match class {
        CycleClass::Unicyclic => (0, 8),
        CycleClass::Bicyclic => (3, 7),
    };
    if n % 4 != residue || n < min {
        return Err(Error::InvalidParameter(format!("{class} Ψ graph needs n ≡ {residue} (mod 4) and n >= {min}, got {n}")));
    }
    let m = n + class.excess();
    let hubs_count = m / 4;
    let mut b = Builder::default();
    let hubs: Vec<usize> = (0..hubs_count).map(|_| b.vertex()).collect();
    let mut used = vec![0usize; hubs_count];
    let mut link = |b: &mut Builder, i: usize, j: usize| {
        let c = b.vertex();
        b.edge(hubs[i], c);
        b.edge(c, hubs[j]);
        used[i] += 1;
        used[j] += 1;
    };
    for i in 1..hubs_count {
        link(&mut b, i - 1, i);
    }
    for _ in 0..=class.excess() {
        link(&mut b, 0, 1);
    }
    for (i, &h) in hubs.iter().enumerate() {
        for _ in used[i]..4 {
            b.pendant(h);
        }
    }
    let g = b.finish()?;
    debug_assert_eq!((g.n(), g.m()), (n, m));
    Ok(g)
}

pub fn construct_lemma1(shape: Lemma1Shape) -> Result<Graph> {
    let bad = |msg: String| Err(Error::InvalidParameter(msg));
    let mut b = Builder::default();
    match shape {
        Lemma1Shape::Theta { a, b: bb, c } => {
            let mut lens = [a, bb, c];
            lens.sort_unstable_by(|x, y| y.cmp(x));
            if lens[2] < 1 || lens[1] < 2 {
                return bad(format!("theta path lengths {a},{bb},{c}: all must be >= 1 and at most one may be 1"));
            }
            let x = b.vertex();
            let y = b.vertex();
            for len in lens {
                b.path(x, y, len);
            }
        }
        Lemma1Shape::TwoCyclesBridged { a, b: bb, bridge } => {
            if a < 3 || bb < 3 || bridge < 1 {
                return bad(format!("bridged cycles need lengths >= 3 and bridge >= 1, got {a},{bb},{bridge}"));
            }
            let x = b.vertex();
            let y = b.vertex();
            b.cycle(x, a);
            b.cycle(y, bb);
            b.path(x, y, bridge);
        }
        Lemma1Shape::TwoCyclesSharedVertex { a, b: bb } => {
            if a < 3 || bb < 3 {
                return bad(format!("cycle lengths must be >= 3, got {a},{bb}"));
            }
            let hub = b.vertex();
            b.cycle(hub, a);
            b.cycle(hub, bb);
        }
    }
    b.finish()
}

/// Circulant graph on `0..n`: `i ~ i ± s (mod n)` for each offset `s`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for &s in offsets {
        if s == 0 || 2 * s > n {
            return Err(Error::InvalidParameter(format!("offset {s} must lie in 1..={}", n / 2)));
        }
        for i in 0..n {
            let j = (i + s) % n;
            if !g.has_edge(i, j) {
                g = g.with_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// Every pendant-free shape on exactly `n` vertices, one parameter set per
/// isomorphism class of shape.
pub fn lemma1_shapes(n: usize) -> Vec<Lemma1Shape> {
    let mut out = vec![];
    // theta: a + b + c = n + 1
    for c in 1..=n {
        for bb in c.max(2)..=n {
            let Some(a) = (n + 1).checked_sub(bb + c) else { continue };
            if a >= bb {
                out.push(Lemma1Shape::Theta { a, b: bb, c });
            }
        }
    }
    // bridged: a + b + bridge - 1 = n
    for a in 3..=n {
        for bb in 3..=a {
            if let Some(bridge) = (n + 1).checked_sub(a + bb) {
                if bridge >= 1 {
                    out.push(Lemma1Shape::TwoCyclesBridged { a, b: bb, bridge });
                }
            }
        }
    }
    // shared vertex: a + b - 1 = n
    for a in 3..=n {
        if let Some(bb) = (n + 1).checked_sub(a) {
            if (3..=a).contains(&bb) {
                out.push(Lemma1Shape::TwoCyclesSharedVertex { a, b: bb });
            }
        }
    }
    out
}
