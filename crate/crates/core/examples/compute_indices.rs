//! AZI and ABC of a few named graphs and of graph6 strings given as arguments.
//!
//!     cargo run --example compute_indices -- Dhc 'C~'

use azi::indices::{abc, azi, f_functional};
use azi::report::from_graph6;
use azi::Graph;

fn show(name: &str, g: &Graph) {
    match azi(g) {
        Ok(v) => println!("{name:>12}: AZI = {v} ≈ {}  ABC ≈ {:.6}  F = {}", v.to_decimal_string(), abc(g).unwrap(), f_functional(g).unwrap()),
        Err(e) => println!("{name:>12}: {e}"),
    }
}

fn main() -> azi::Result<()> {
    let cycle = |n: usize| Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>());
    show("C5", &cycle(5)?);
    show("P4", &Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])?);
    show("K4", &Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?);
    show("paw", &Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)])?);
    show("K2", &Graph::from_edges(2, &[(0, 1)])?);
    for s in std::env::args().skip(1) {
        show(&s, &from_graph6(&s)?);
    }
    Ok(())
}
