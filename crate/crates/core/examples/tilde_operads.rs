//! The tilde operad for a few presets, with the presentation it came from.

use operad_forge::{catalog, operad};

fn main() -> operad_forge::Result<()> {
    for name in ["ass", "g2ass", "lie", "leib", "poiss", "lieadm"] {
        let p = catalog::preset(name)?;
        let t = operad::tilde_detailed(&p, 0)?;
        let is_dual = t.operad.relations() == &operad::dual_module(p.relations());
        println!("{name}: dim R~ = {}, R~ = R! is {is_dual}", t.operad.relations().dim());
        for pp in &t.presentation {
            println!("  from {pp}");
        }
    }

    let leib = operad::tilde(&catalog::preset("leib")?)?;
    println!("\nrelations of the tilde of Leibniz:");
    for b in leib.relations().basis_elements() {
        println!("  {b}");
    }
    Ok(())
}
