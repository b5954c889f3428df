//! Counts connected graphs with minimum degree 2 by order, labeled and up to
//! isomorphism.

use drdf::graph::{enumerate_small, EnumerateOptions};

fn main() -> Result<(), drdf::GraphError> {
    for n in 3..=7 {
        let count = |dedup| -> Result<usize, drdf::GraphError> {
            let opts = EnumerateOptions {
                connected_only: true,
                dedup,
                ..Default::default()
            };
            Ok(enumerate_small(n, 2, opts)?.count())
        };
        let labeled = if n <= 6 { count(false)?.to_string() } else { "-".into() };
        println!("n={n}: {} classes, {labeled} labeled", count(true)?);
    }
    Ok(())
}
