//! Prints slices of the c(n,k), F^(r)_n and L^(r)_n tables in each output
//! format, and compares the full tables with the embedded reference copies.

use symident::cli::render::{render_table, Format};
use symident::sequences::{golden_check, known_typos, table, TableKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cnk = table(TableKind::Cnk, 0..=8, 0..=4)?;
    print!("{}", render_table(&cnk, Format::Md, &[])?);

    let fib = table(TableKind::Fib, 1..=4, 1..=8)?;
    print!("\n{}", render_table(&fib, Format::Csv, &[])?);

    let lucas = table(TableKind::Lucas, 2..=3, 0..=6)?;
    print!("\n{}", render_table(&lucas, Format::Json, &[])?);

    for kind in TableKind::ALL {
        println!("{}", golden_check(kind));
    }
    for t in known_typos() {
        println!(
            "table {} cell ({}, {}): printed {}, computed {}",
            t.kind, t.row, t.col, t.printed, t.computed
        );
    }
    Ok(())
}
