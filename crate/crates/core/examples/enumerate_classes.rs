//! Isomorph-free enumeration: class counts and a few representatives.

use azi::enumerate::{enumerate, EnumSpec};
use azi::families::CycleClass;
use azi::report::to_graph6;

fn main() -> azi::Result<()> {
    for n in 1..=8 {
        println!("connected graphs on {n} vertices: {}", enumerate(&EnumSpec::connected(n))?.len());
    }
    for n in 4..=10 {
        let uni = enumerate(&EnumSpec::chemical(n, CycleClass::Unicyclic))?.len();
        let bi = enumerate(&EnumSpec::chemical(n, CycleClass::Bicyclic))?.len();
        println!("chemical n={n}: {uni} unicyclic, {bi} bicyclic");
    }
    println!("unicyclic graphs on 4 vertices:");
    for r in enumerate(&EnumSpec::chemical(4, CycleClass::Unicyclic))? {
        println!("  {} key {}", to_graph6(&r.graph)?, r.key);
    }
    Ok(())
}
