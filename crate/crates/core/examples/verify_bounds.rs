//! Exhaustive certificate for one chemical class.
//!
//!     cargo run --release --example verify_bounds -- bicyclic 7

use azi::enumerate::verify_class_bounds;
use azi::families::CycleClass;
use azi::report::{emit_certificate, Format};

fn main() -> azi::Result<()> {
    let mut args = std::env::args().skip(1);
    let class: CycleClass = args.next().as_deref().unwrap_or("unicyclic").parse()?;
    let n = args.next().and_then(|s| s.parse().ok()).unwrap_or(8);
    let cert = verify_class_bounds(class, n)?;
    print!("{}", String::from_utf8_lossy(&emit_certificate(&cert, Format::Json)));
    eprintln!("{class} n={n}: {} graphs, {}", cert.class_size, if cert.passed(false) { "PASS" } else { "FAIL" });
    Ok(())
}
