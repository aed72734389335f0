//! Degree-based indices and the closed-form bounds on them.
//!
//! Every AZI-related value is an exact [`Rational`]. ABC involves square
//! roots and is the only floating-point index here.
//!
//! The bound functions take scalar statistics rather than graphs so the same
//! code evaluates a formula directly and inside the enumeration verifier;
//! `*_for` wrappers derive the statistics from a [`Graph`].

use std::sync::OnceLock;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest degree covered by the memoised weight table.
pub const MAX_TABLE_DEGREE: usize = 64;

/// Per-edge AZI weights `θ(i,j) = (ij/(i+j-2))³` for `1 <= i, j <= 64`,
/// undefined for `(1, 1)`.
pub struct EdgeWeightTable {
    theta: Vec<Option<Rational>>,
}

impl EdgeWeightTable {
    fn build() -> Self {
        let side = MAX_TABLE_DEGREE + 1;
        let mut theta = vec![None; side * side];
        for i in 1..side {
            for j in 1..side {
                if i + j > 2 {
                    let base = Rational::new((i * j) as i64, (i + j - 2) as i64).expect("i + j > 2");
                    theta[i * side + j] = Some(base.cube());
                }
            }
        }
        EdgeWeightTable { theta }
    }

    pub fn theta(&self, i: usize, j: usize) -> Option<&Rational> {
        if i > MAX_TABLE_DEGREE || j > MAX_TABLE_DEGREE {
            return None;
        }
        self.theta[i * (MAX_TABLE_DEGREE + 1) + j].as_ref()
    }

    /// `θ̃(i,j) = 8 - θ(i,j)`, the deficiency of a `(i,j)` edge from 8.
    pub fn theta_tilde(&self, i: usize, j: usize) -> Option<Rational> {
        self.theta(i, j).map(|t| Rational::integer(8) - t)
    }
}

pub fn weights() -> &'static EdgeWeightTable {
    static TABLE: OnceLock<EdgeWeightTable> = OnceLock::new();
    TABLE.get_or_init(EdgeWeightTable::build)
}

/// `θ(i,j)`; panics on `(1,1)` or degrees outside the table.
pub fn theta(i: usize, j: usize) -> Rational {
    weights().theta(i, j).unwrap_or_else(|| panic!("θ({i},{j}) is undefined")).clone()
}

/// `θ̃(i,j)`; panics where [`theta`] does.
pub fn theta_tilde(i: usize, j: usize) -> Rational {
    Rational::integer(8) - theta(i, j)
}

fn edge_weight(deg: &[usize], u: usize, v: usize) -> Result<&'static Rational> {
    weights().theta(deg[u], deg[v]).ok_or(Error::DegenerateEdge(u, v))
}

/// Augmented Zagreb index, summed edge by edge.
pub fn azi(g: &Graph) -> Result<Rational> {
    if g.m() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let deg = g.degrees();
    let mut total = Rational::zero();
    for (u, v) in g.edges() {
        total += edge_weight(&deg, u, v)?;
    }
    Ok(total)
}

/// AZI from the edge-class counts: `Σ x_{i,j} θ(i,j)`.
pub fn azi_by_classes(g: &Graph) -> Result<Rational> {
    let profile = g.degree_profile();
    if profile.edge_classes.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    let mut total = Rational::zero();
    for (&(i, j), &count) in &profile.edge_classes {
        let w = weights().theta(i, j).ok_or_else(|| {
            let (u, v) = g.edges().find(|&(u, v)| profile.degrees[u] == 1 && profile.degrees[v] == 1).unwrap_or((0, 0));
            Error::DegenerateEdge(u, v)
        })?;
        total += w * count as i64;
    }
    Ok(total)
}

/// Atom-bond connectivity index. Floating point.
pub fn abc(g: &Graph) -> Result<f64> {
    if g.m() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let deg = g.degrees();
    Ok(g.edges()
        .map(|(u, v)| {
            let (a, b) = (deg[u] as f64, deg[v] as f64);
            ((a + b - 2.0) / (a * b)).sqrt()
        })
        .sum())
}

/// `Σ θ̃(d_u, d_v)` over all edges, i.e. `8m - AZI`.
pub fn f_functional(g: &Graph) -> Result<Rational> {
    if g.m() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let deg = g.degrees();
    let mut total = Rational::zero();
    for (u, v) in g.edges() {
        total += weights().theta_tilde(deg[u], deg[v]).ok_or(Error::DegenerateEdge(u, v))?;
    }
    Ok(total)
}

/// `F(B) = Σ θ̃ = 8(n+1) - AZI(B)` for a connected bicyclic graph.
pub fn f_bicyclic(g: &Graph) -> Result<Rational> {
    let c = g.cyclomatic()?;
    if c != 2 {
        return Err(Error::WrongCyclomatic { expected: 2, found: c });
    }
    let edge_sum = f_functional(g)?;
    debug_assert_eq!(edge_sum, Rational::integer(8 * (g.n() as i64 + 1)) - azi(g)?);
    Ok(edge_sum)
}

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q).expect("nonzero constant denominator")
}

/// `(Δ/(Δ-1))³ (2n - m - 2m/Δ) + 8 (2m - 2n + 2m/Δ)`, the general lower
/// bound for connected graphs of order `n >= 3`, size `m`, maximum degree Δ.
pub fn wang_lower_bound(n: usize, m: usize, max_degree: usize) -> Result<Rational> {
    if max_degree < 2 {
        return Err(Error::InvalidParameter(format!("maximum degree {max_degree} < 2")));
    }
    let (n, m, d) = (n as i64, m as i64, max_degree as i64);
    let ratio = r(d, d - 1).cube();
    let two_m_over_d = r(2 * m, d);
    let pendant_part = Rational::integer(2 * n - m) - &two_m_over_d;
    let rest = Rational::integer(2 * m - 2 * n) + two_m_over_d;
    Ok(ratio * pendant_part + rest * 8)
}

/// `m Δ⁶ / (8 (Δ-1)³)`, the upper bound for connected graphs with `m >= 2`.
pub fn huang_upper_bound(m: usize, max_degree: usize) -> Result<Rational> {
    if max_degree <= 1 {
        return Err(Error::InvalidParameter(format!("maximum degree {max_degree} <= 1")));
    }
    let d = max_degree as i64;
    Ok(r(m as i64 * d.pow(6), 8 * (d - 1).pow(3)))
}

/// `(δ₁²/(2δ₁-2))³`, the weight of an edge between two degree-δ₁ vertices.
fn regular_weight(d: usize) -> Rational {
    let d = d as i64;
    r(d * d, 2 * d - 2).cube()
}

/// `p (Δ/(Δ-1))³ + (m - p) (δ₁²/(2δ₁-2))³`, the pendant-aware lower bound.
///
/// Fails when δ₁ is undefined; see [`pendant_lower_bound_for`] for the
/// all-pendant (star) case.
pub fn wang_pendant_lower_bound(m: usize, p: usize, max_degree: usize, min_non_pendant: Option<usize>) -> Result<Rational> {
    let d1 = min_non_pendant.ok_or(Error::UndefinedMinNonPendantDegree)?;
    if d1 < 2 || max_degree < 2 || p > m {
        return Err(Error::InvalidParameter(format!("need m >= p, Δ >= 2, δ₁ >= 2 (m={m}, p={p}, Δ={max_degree}, δ₁={d1})")));
    }
    let d = max_degree as i64;
    Ok(r(d, d - 1).cube() * p as i64 + regular_weight(d1) * (m - p) as i64)
}

/// Pendant-aware lower bound evaluated on a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantBound {
    pub value: Rational,
    /// Every edge is pendant (a star); the `(m - p)` term vanishes.
    pub all_pendant: bool,
}

/// δ₁ is undefined only when no vertex has degree 2 or more (K₂, edgeless
/// graphs); those are rejected. A star has δ₁ = Δ and `m = p`.
pub fn pendant_lower_bound_for(g: &Graph) -> Result<PendantBound> {
    let p = g.pendant_count();
    let m = g.m();
    let value = wang_pendant_lower_bound(m, p, g.max_degree(), g.min_non_pendant_degree())?;
    Ok(PendantBound { value, all_pendant: m == p })
}

/// Statistics of a graph and its complement feeding the complement-sum bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NgInputs {
    pub n: usize,
    /// `min(δ₁(G), δ₁(Ḡ))`
    pub alpha: usize,
    /// `max(Δ(G), Δ(Ḡ))`
    pub beta: usize,
    pub p: usize,
    pub p_bar: usize,
}

impl NgInputs {
    pub fn of(g: &Graph) -> Result<NgInputs> {
        let h = g.complement();
        let d1 = g.min_non_pendant_degree().ok_or(Error::UndefinedMinNonPendantDegree)?;
        let d1_bar = h.min_non_pendant_degree().ok_or(Error::UndefinedMinNonPendantDegree)?;
        Ok(NgInputs {
            n: g.n(),
            alpha: d1.min(d1_bar),
            beta: g.max_degree().max(h.max_degree()),
            p: g.pendant_count(),
            p_bar: h.pendant_count(),
        })
    }
}

/// Lower and upper bounds on `AZI(G) + AZI(Ḡ)`:
///
/// `(p+p̄)((n-2)/(n-3))³(1-((n-2)/2)³) + C(n,2)(α²/(2α-2))³`
/// and `C(n,2)(β²/(2β-2))³`.
pub fn ng_bounds(inp: &NgInputs) -> Result<(Rational, Rational)> {
    if inp.n <= 3 {
        return Err(Error::InvalidParameter(format!("order {} <= 3", inp.n)));
    }
    if inp.alpha < 2 || inp.beta < 2 {
        return Err(Error::InvalidParameter(format!("α={} and β={} must be >= 2", inp.alpha, inp.beta)));
    }
    let n = inp.n as i64;
    let pairs = n * (n - 1) / 2;
    let pendant_factor = r(n - 2, n - 3).cube() * (Rational::one() - r(n - 2, 2).cube());
    let lower = pendant_factor * (inp.p + inp.p_bar) as i64 + regular_weight(inp.alpha) * pairs;
    let upper = regular_weight(inp.beta) * pairs;
    Ok((lower, upper))
}

/// Two-sided bound for chemical bicyclic graphs of order `n`:
/// `(4/27)(35n+111) <= AZI <= (1376/135)n + 416/15`.
///
/// The lower value is the smaller of the general lower bound at `m = n+1`
/// with Δ = 3 and Δ = 4.
pub fn bicyclic_bounds(n: usize) -> (Rational, Rational) {
    let lower = [3, 4]
        .iter()
        .map(|&d| wang_lower_bound(n, n + 1, d).expect("Δ >= 2"))
        .min()
        .expect("two candidates");
    (lower, bicyclic_upper(n))
}

pub fn bicyclic_upper(n: usize) -> Rational {
    r(1376 * n as i64, 135) + r(416, 15)
}

/// `(140/27)n <= AZI <= (1376/135)n` for chemical unicyclic graphs.
pub fn unicyclic_bounds(n: usize) -> (Rational, Rational) {
    let n = n as i64;
    (r(140 * n, 27), r(1376 * n, 135))
}
