//! Fixture algebras, tensor products and relation checks.

use operad_forge::closure::MixedProduct;
use operad_forge::instance::{example, tensor_instance, AlgebraInstance, EXAMPLE_NAMES};
use operad_forge::{catalog, operad};

fn main() -> operad_forge::Result<()> {
    for n in EXAMPLE_NAMES {
        let a = example(n)?;
        println!("{n}: dim {}, commutative {}", a.dim(), a.is_commutative());
    }

    let a = example("leib_tilde_3d")?;
    print!("\n{a}");
    let leib_tilde = operad::tilde(&catalog::preset("leib")?)?;
    println!("satisfies the tilde of Leibniz: {}", a.satisfies(leib_tilde.relations()));
    if let Err(e) = a.check_relations(catalog::preset("com")?.relations()) {
        println!("as a Com-algebra: {e}");
    }

    let leib = example("leibniz_3d")?;
    let t = tensor_instance(&leib, &a, &MixedProduct::identity());
    let violations = t.check_relations(catalog::preset("leib")?.relations())?;
    println!("\n{} is Leibniz: {}", t.name(), violations.is_empty());

    let back = AlgebraInstance::from_json(&t.to_json())?;
    assert_eq!(back.entries(), t.entries());
    Ok(())
}
