//! Σ₃ orbit spans and isotypic profiles.
//!
//! ```bash
//! cargo run --example orbit_spans
//! ```

use operad_forge::dsl::{parse_group_vector, parse_relation};
use operad_forge::group::group_orbit_span;
use operad_forge::{RelationModule, SymmetryClass};

fn main() -> operad_forge::Result<()> {
    for text in ["Id", "Id - t12", "Id + t12 + t13 + t23 + c1 + c2", "2*Id - t12 - t13 - t23 + c1"] {
        let v = parse_group_vector(text)?;
        println!("K[S3]·({v}) has dimension {}", group_orbit_span(&v).dim());
    }

    let assoc = parse_relation("A(x,y,z)")?;
    let r = RelationModule::orbit_span(SymmetryClass::Regular, &[assoc])?;
    println!("\norbit of the associator: dim {}, isotypic {}, rank {}", r.dim(), r.isotypic(), r.rank());
    for b in r.basis_elements() {
        println!("  {b}");
    }
    Ok(())
}
