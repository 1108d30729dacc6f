//! Symbolic closure checks: P ⊗ P̃ stays a P-algebra, Leibniz ⊗ Zinbiel
//! does not.

use operad_forge::closure::{closes_with_tilde, closure_holds, minimal_companion, MixedProduct};
use operad_forge::{catalog, operad};

fn main() -> operad_forge::Result<()> {
    for p in catalog::regular_presets() {
        let t = operad::tilde(&p)?;
        let comp = minimal_companion(&p)?;
        println!(
            "{:<16} closes: {:<5}  companion dim {:>2} inside R~: {}",
            p.name(),
            closes_with_tilde(&p, &t)?.holds,
            comp.dim(),
            t.relations().contains_module(&comp)?
        );
    }

    let leib = catalog::preset("leib")?;
    let zinb = catalog::preset("zinb")?;
    let out = closure_holds(
        leib.relations(),
        zinb.relations(),
        &MixedProduct::identity(),
        &[catalog::leibniz_relation()],
    )?;
    println!("\nLeibniz ⊗ Zinbiel closes: {}", out.holds);
    for cert in out.failing() {
        for c in cert.components.iter().filter(|c| c.residual != "0") {
            println!("  residual at {}: {}", c.a_monomial, c.residual);
        }
    }
    Ok(())
}
