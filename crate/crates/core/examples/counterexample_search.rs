//! Seeded search for concrete algebras whose tensor product breaks a
//! relation.

use operad_forge::catalog;
use operad_forge::dsl::parse_relation;
use operad_forge::instance::{search_counterexample, SearchConfig};

fn main() -> operad_forge::Result<()> {
    let seed = std::env::var("OPERAD_FORGE_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let config = SearchConfig { max_dim: 3, seed, ..SearchConfig::default() };

    let leib = catalog::preset("leib")?;
    let zinb = catalog::preset("zinb")?;
    match search_counterexample(leib.relations(), zinb.relations(), &[catalog::leibniz_relation()], &config)? {
        Some(c) => println!("Leibniz ⊗ Zinbiel: {} ⊗ {} breaks {}", c.a.name(), c.b.name(), c.violation),
        None => println!("Leibniz ⊗ Zinbiel: nothing within budget"),
    }

    let ass = catalog::preset("ass")?;
    let found = search_counterexample(ass.relations(), ass.relations(), &[parse_relation("A(x,y,z)")?], &config)?;
    println!("Ass ⊗ Ass: {}", if found.is_some() { "witness found" } else { "nothing within budget" });
    Ok(())
}
