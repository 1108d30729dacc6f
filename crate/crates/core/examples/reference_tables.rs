//! Prints the full table report; pass `--json` for the JSON form.

fn main() -> operad_forge::Result<()> {
    let report = operad_forge::report::reference_tables(0)?;
    if std::env::args().any(|a| a == "--json") {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}
