//! The extremal constructions and the closed forms they attain.

use azi::families::{construct_b_prime, construct_lemma1, construct_psi, construct_u_prime, lemma1_shapes, psi_member, CycleClass};
use azi::indices::{azi, bicyclic_bounds, unicyclic_bounds};
use azi::report::to_graph6;

fn main() -> azi::Result<()> {
    println!("bicyclic maximisers B'(k), n = 5k + 26");
    for k in 0..4 {
        let g = construct_b_prime(k)?;
        let (_, upper) = bicyclic_bounds(g.n());
        println!("  k={k} n={} AZI={} bound={} equal={}", g.n(), azi(&g)?, upper, azi(&g)? == upper);
    }
    println!("unicyclic maximisers U'(k), n = 5k + 15");
    for k in 0..4 {
        let g = construct_u_prime(k)?;
        let (_, upper) = unicyclic_bounds(g.n());
        println!("  k={k} n={} AZI={} equal={}", g.n(), azi(&g)?, azi(&g)? == upper);
    }
    println!("Ψ minimisers");
    for (n, class) in [(7, CycleClass::Bicyclic), (8, CycleClass::Unicyclic), (11, CycleClass::Bicyclic), (12, CycleClass::Unicyclic)] {
        let g = construct_psi(n, class)?;
        let lower = match class {
            CycleClass::Unicyclic => unicyclic_bounds(n).0,
            CycleClass::Bicyclic => bicyclic_bounds(n).0,
        };
        println!("  {class} n={n} {} AZI={} lower={lower} Ψ={}", to_graph6(&g)?, azi(&g)?, psi_member(&g));
    }
    println!("pendant-free bicyclic shapes on 8 vertices");
    for shape in lemma1_shapes(8) {
        println!("  {shape:?}: AZI={}", azi(&construct_lemma1(shape)?)?);
    }
    Ok(())
}
