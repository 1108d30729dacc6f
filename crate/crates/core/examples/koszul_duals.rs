//! Duals of the Gᵢ-associative and 3-power associative operads, checked
//! against the hand-entered tables.

use operad_forge::catalog::{gi_ass, gi_p3ass, tabulated_dual};
use operad_forge::operad::{dual, operads_equal};

fn main() -> operad_forge::Result<()> {
    println!("{:<10} {:>5} {:>6} {:>6}  matches", "operad", "dim R", "dim R!", "rank!");
    for i in 1..=6 {
        for p in [gi_ass(i)?, gi_p3ass(i)?] {
            let d = dual(&p);
            let tabulated = tabulated_dual(p.name()).expect("table entry");
            println!(
                "{:<10} {:>5} {:>6} {:>6}  {}",
                p.name(),
                p.relations().dim(),
                d.relations().dim(),
                d.rank(),
                operads_equal(&d, &tabulated)
            );
        }
    }
    Ok(())
}
