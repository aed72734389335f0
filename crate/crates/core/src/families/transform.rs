//! Local graph transformations and their exact effect on `F = Σ θ̃`.
//!
//! Each transform has a companion `*_f_delta` that predicts the change in
//! `F` from the degrees around the modified site alone. Since
//! `AZI = 8m - F`, the AZI change follows from the edge-count change:
//! +1 for subdivision, +2 for a pendant P₂ path, -1 for smoothing.

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::weights;

fn tilde(i: usize, j: usize, u: usize, v: usize) -> Result<Rational> {
    weights().theta_tilde(i, j).ok_or(Error::DegenerateEdge(u, v))
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

/// Replace the edge `uv` by a path `u w v`; `w` is the new last vertex.
pub fn subdivide_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let w = g.n();
    g.without_edge(u, v)?.with_vertices(1)?.with_edge(u, w)?.with_edge(w, v)
}

pub fn subdivide_edge_f_delta(g: &Graph, u: usize, v: usize) -> Result<Rational> {
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    let (du, dv) = (g.degree(u), g.degree(v));
    Ok(tilde(du, 2, u, v)? + tilde(2, dv, u, v)? - tilde(du, dv, u, v)?)
}

/// Hang a new path `u a b` off `u`; `a` and `b` are the new last two
/// vertices. With `chemical` set, refuses to push `u` past degree 4.
pub fn attach_p2_path(g: &Graph, u: usize, chemical: bool) -> Result<Graph> {
    check_vertex(g, u)?;
    if chemical && g.degree(u) >= 4 {
        return Err(Error::InvalidParameter(format!("vertex {u} already has degree {}", g.degree(u))));
    }
    let (a, b) = (g.n(), g.n() + 1);
    g.with_vertices(2)?.with_edge(u, a)?.with_edge(a, b)
}

pub fn attach_p2_path_f_delta(g: &Graph, u: usize) -> Result<Rational> {
    check_vertex(g, u)?;
    let du = g.degree(u);
    let mut delta = tilde(du + 1, 2, u, g.n())? + tilde(2, 1, g.n(), g.n() + 1)?;
    for x in g.neighbors(u) {
        let dx = g.degree(x);
        delta += tilde(du + 1, dx, u, x)? - tilde(du, dx, u, x)?;
    }
    Ok(delta)
}

fn smoothing_ends(g: &Graph, u: usize) -> Result<(usize, usize)> {
    check_vertex(g, u)?;
    let nb: Vec<usize> = g.neighbors(u).collect();
    let &[v, w] = nb.as_slice() else {
        return Err(Error::InvalidParameter(format!("vertex {u} has degree {}, expected 2", nb.len())));
    };
    if g.has_edge(v, w) {
        return Err(Error::InvalidParameter(format!("neighbours {v} and {w} of vertex {u} are already adjacent")));
    }
    Ok((v, w))
}

/// Remove the degree-2 vertex `u` and join its two neighbours. Vertices
/// after `u` shift down by one.
pub fn smooth_degree2(g: &Graph, u: usize) -> Result<Graph> {
    let (v, w) = smoothing_ends(g, u)?;
    let shift = |x: usize| if x > u { x - 1 } else { x };
    g.without_vertex(u)?.with_edge(shift(v), shift(w))
}

/// Zero whenever either neighbour of `u` has degree 2.
pub fn smooth_degree2_f_delta(g: &Graph, u: usize) -> Result<Rational> {
    let (v, w) = smoothing_ends(g, u)?;
    let (dv, dw) = (g.degree(v), g.degree(w));
    Ok(tilde(dv, dw, v, w)? - tilde(2, dv, u, v)? - tilde(2, dw, u, w)?)
}
