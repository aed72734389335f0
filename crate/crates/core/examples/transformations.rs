//! Local transformations and the predicted change of F = Σ θ̃ (= 8m - AZI).

use azi::families::{
    attach_p2_path, attach_p2_path_f_delta, smooth_degree2, smooth_degree2_f_delta, subdivide_edge, subdivide_edge_f_delta,
};
use azi::indices::f_functional;
use azi::Graph;

fn main() -> azi::Result<()> {
    // two triangles joined through vertex 6
    let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 6), (6, 3)])?;
    let f = f_functional(&g)?;
    println!("F(G) = {f}");

    let h = subdivide_edge(&g, 1, 2)?;
    println!("subdivide 1-2:   predicted {}  observed {}", subdivide_edge_f_delta(&g, 1, 2)?, f_functional(&h)? - &f);

    let h = attach_p2_path(&g, 1, true)?;
    println!("attach P2 at 1:  predicted {}  observed {}", attach_p2_path_f_delta(&g, 1)?, f_functional(&h)? - &f);

    let h = smooth_degree2(&g, 6)?;
    println!("smooth vertex 6: predicted {}  observed {}", smooth_degree2_f_delta(&g, 6)?, f_functional(&h)? - &f);

    // vertex 1 lies on a triangle: its neighbours are already adjacent
    println!("smooth vertex 1: {}", smooth_degree2(&g, 1).unwrap_err());
    Ok(())
}
