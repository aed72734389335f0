//! graph6 and edge-list round trips, and canonical keys.

use azi::enumerate::canonical_form;
use azi::families::construct_psi;
use azi::families::CycleClass;
use azi::report::{from_edge_list, from_graph6, to_edge_list, to_graph6};

fn main() -> azi::Result<()> {
    let g = construct_psi(7, CycleClass::Bicyclic)?;
    let g6 = to_graph6(&g)?;
    let text = to_edge_list(&g);
    println!("graph6: {g6}\nedge list:\n{text}");
    assert_eq!(from_graph6(&g6)?, g);
    assert_eq!(from_edge_list(&text)?, g);
    let relabelled = g.relabel(&[6, 5, 4, 3, 2, 1, 0])?;
    println!("canonical key {} (relabelled: {})", canonical_form(&g)?, canonical_form(&relabelled)?);
    match from_graph6("F@?") {
        Err(e) => println!("truncated input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
