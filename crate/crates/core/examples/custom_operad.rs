//! Defining an operad in text and running the usual computations on it.

use operad_forge::closure::closes_with_tilde;
use operad_forge::dsl::OperadDefinition;
use operad_forge::operad;

const DEFINITION: &str = "
# right-symmetric (pre-Lie with the arguments reversed)
name: rsym
symmetry: regular
relation: A(x,y,z) - A(x,z,y)
";

fn main() -> operad_forge::Result<()> {
    let def = OperadDefinition::from_text(DEFINITION)?;
    let p = def.build()?;
    println!("{}: dim {}, rank {}, isotypic {}", p.name(), p.relations().dim(), p.rank(), p.relations().isotypic());

    let d = operad::dual(&p);
    println!("dual: dim {}", d.relations().dim());
    for b in d.relations().basis_elements() {
        println!("  {b}");
    }

    let t = operad::tilde(&p)?;
    println!("tilde: dim {}, closure {}", t.relations().dim(), closes_with_tilde(&p, &t)?.holds);

    let json = serde_json::to_string_pretty(&def).expect("definition serializes");
    println!("\n{json}");
    Ok(())
}
