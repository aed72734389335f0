//! Structural predicates for the equality cases of the bounds.

use crate::graph::Graph;

/// Ψ membership together with the maximum degree it was judged against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PsiVerdict {
    pub member: bool,
    pub max_degree: usize,
}

/// Connected, with every edge joining a vertex of maximum degree Δ to a
/// vertex of degree 1 or 2.
pub fn psi_member(g: &Graph) -> bool {
    psi_membership(g).member
}

/// [`psi_member`], also reporting Δ. At Δ = 2 every path and cycle
/// qualifies, so callers should look at the reported Δ.
pub fn psi_membership(g: &Graph) -> PsiVerdict {
    let max_degree = g.max_degree();
    let deg = g.degrees();
    let low = |d: usize| d == 1 || d == 2;
    let member = g.is_connected()
        && g.m() > 0
        && g.edges().all(|(u, v)| (deg[u] == max_degree && low(deg[v])) || (deg[v] == max_degree && low(deg[u])));
    PsiVerdict { member, max_degree }
}

/// Connected; every pendant edge hangs off a vertex of maximum degree and
/// every other edge has an end of degree 2.
pub fn phi1_member(g: &Graph) -> bool {
    if !g.is_connected() || g.m() == 0 {
        return false;
    }
    let max = g.max_degree();
    let deg = g.degrees();
    g.edges().all(|(u, v)| {
        let (a, b) = (deg[u].min(deg[v]), deg[u].max(deg[v]));
        if a == 1 {
            b == max
        } else {
            a == 2
        }
    })
}

/// Connected, pendant-free, and every edge has an end of degree 2.
pub fn phi2_member(g: &Graph) -> bool {
    if !g.is_connected() || g.m() == 0 || g.pendant_count() > 0 {
        return false;
    }
    let deg = g.degrees();
    g.edges().all(|(u, v)| deg[u] == 2 || deg[v] == 2)
}

/// `Some((δ, Δ))` when the degree set has exactly two values.
pub fn biregular(g: &Graph) -> Option<(usize, usize)> {
    let (lo, hi) = (g.min_degree(), g.max_degree());
    if lo == hi || g.degrees().iter().any(|&d| d != lo && d != hi) {
        return None;
    }
    Some((lo, hi))
}
