//! Isomorph-free generation of graphs by order, size and degree cap.
//!
//! Graphs are grown one edge at a time from the empty graph. A child is
//! kept only when the edge just added is its canonical deletion edge (up to
//! isomorphism of the remainder), so every isomorphism class is reached from
//! exactly one parent class.

pub mod canon;
mod generate;
pub mod verify;

use std::fmt;

use rayon::prelude::*;

pub use canon::{canonical_form, CanonicalForm, MAX_CANON_ORDER};
pub use verify::{verify_class_bounds, verify_huang, verify_lemma1, verify_pendant_bound, verify_wang};

use crate::error::{Error, Result};
use crate::families::CycleClass;
use crate::graph::Graph;

/// Constraints selecting a class of graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    n: usize,
    min_edges: usize,
    max_edges: usize,
    max_degree: usize,
    connected: bool,
    complement_connected: bool,
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl EnumSpec {
    /// All graphs of order `n`.
    pub fn all(n: usize) -> Self {
        EnumSpec { n, min_edges: 0, max_edges: pairs(n), max_degree: n.saturating_sub(1), connected: false, complement_connected: false }
    }

    /// Connected graphs of order `n`.
    pub fn connected(n: usize) -> Self {
        EnumSpec { min_edges: n.saturating_sub(1), connected: true, ..Self::all(n) }
    }

    /// Connected graphs with `Δ <= 4` in the given cycle class.
    pub fn chemical(n: usize, class: CycleClass) -> Self {
        Self::connected(n).edges(n + class.excess()).max_degree(4)
    }

    pub fn edges(self, m: usize) -> Self {
        self.edge_range(m, m)
    }

    pub fn edge_range(mut self, min: usize, max: usize) -> Self {
        self.min_edges = min;
        self.max_edges = max;
        self
    }

    pub fn max_degree(mut self, cap: usize) -> Self {
        self.max_degree = cap;
        self
    }

    pub fn complement_connected(mut self, yes: bool) -> Self {
        self.complement_connected = yes;
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.n > MAX_CANON_ORDER {
            return Err(Error::TooLarge { n: self.n, max: MAX_CANON_ORDER });
        }
        if self.min_edges > self.max_edges {
            return bad(format!("empty edge range {}..={}", self.min_edges, self.max_edges));
        }
        if self.max_edges > pairs(self.n) {
            return bad(format!("{} edges exceed the {} pairs on {} vertices", self.max_edges, pairs(self.n), self.n));
        }
        if self.connected && self.min_edges + 1 < self.n {
            return bad(format!("connected graphs on {} vertices need at least {} edges", self.n, self.n - 1));
        }
        Ok(())
    }

    fn accepts(&self, g: &Graph) -> bool {
        (self.min_edges..=self.max_edges).contains(&g.m())
            && (!self.connected || g.is_connected())
            && (!self.complement_connected || g.complement().is_connected())
    }
}

impl fmt::Display for EnumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} m={}..={} max_degree={}", self.n, self.min_edges, self.max_edges, self.max_degree)?;
        if self.connected {
            f.write_str(" connected")?;
        }
        if self.complement_connected {
            f.write_str(" complement-connected")?;
        }
        Ok(())
    }
}

/// One isomorphism class: its key and canonically labelled representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub key: CanonicalForm,
    pub graph: Graph,
}

/// Every isomorphism class matching `spec`, sorted by canonical key.
/// Runs on the current rayon pool.
pub fn enumerate(spec: &EnumSpec) -> Result<Vec<Representative>> {
    spec.validate()?;
    let graphs = generate::run(spec);
    let mut out: Vec<Representative> = graphs
        .into_par_iter()
        .map(|graph| Representative { key: CanonicalForm::of_canonical_graph(&graph), graph })
        .collect();
    out.par_sort_unstable_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

/// [`enumerate`] on a dedicated pool of `workers` threads.
pub fn enumerate_with_workers(spec: &EnumSpec, workers: usize) -> Result<Vec<Representative>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start {workers} workers: {e}")))?;
    pool.install(|| enumerate(spec))
}
