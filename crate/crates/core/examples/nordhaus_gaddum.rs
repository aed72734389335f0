//! Complement-sum bounds over every graph whose complement is also connected.

use azi::families::circulant;
use azi::ng::{csv_summary, ng_record, ng_scan, EqualityClass};

fn main() -> azi::Result<()> {
    let mut all = vec![];
    for n in 4..=7 {
        let records = ng_scan(n)?;
        for r in records.iter().filter(|r| r.equality_class != EqualityClass::None) {
            println!("n={n} {} sum={} class={:?}", r.graph6, r.sum, r.equality_class);
        }
        all.extend(records);
    }
    print!("{}", String::from_utf8_lossy(&csv_summary(&all)));
    let c9 = ng_record(&circulant(9, &[1, 2])?)?;
    println!("C9(1,2): sum={} lower={:?} upper={:?}", c9.sum, c9.lower.map(|x| x.to_string()), c9.upper.map(|x| x.to_string()));
    Ok(())
}
