//! Mixed products on Poisson ⊗ Poisson, each Poisson algebra written with
//! the single product x·y = x•y + {x,y}.
//!
//! The twist (3, -1, -1, 1) leaves a {,}⊗{,} term in the commutative part and
//! fails; flipping the signs of the three twisted terms gives the usual
//! Poisson structure on a tensor product.

use operad_forge::closure::{twisted_poisson_with, MixedProduct};
use operad_forge::instance::{example, tensor_instance};
use operad_forge::catalog;

fn main() -> operad_forge::Result<()> {
    let p5 = example("poisson_5d")?;
    let poiss = catalog::preset("poiss")?;
    for (name, m) in [
        ("twist (3,-1,-1,1)", MixedProduct::twisted_poisson()),
        ("poisson tensor", MixedProduct::poisson_tensor()),
    ] {
        let symbolic = twisted_poisson_with(&m)?;
        let t = tensor_instance(&p5, &p5, &m);
        let bad = t.check_relations(poiss.relations())?;
        println!("{name}: symbolic {}, {} violations on a {}-dim tensor", symbolic.holds, bad.len(), t.dim());
        if let Some(v) = bad.first() {
            println!("  e.g. {v}");
        }
    }
    Ok(())
}
