//! Validation, closed forms and removal of 1-labels.

use drdf::graph::{generate, FamilySpec};
use drdf::labeling::{closed_form_cycle, closed_form_path, eliminate_ones, validate, Labeling};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [3, 7, 10, 11] {
        let (wp, fp) = closed_form_path(n)?;
        let (wc, fc) = closed_form_cycle(n)?;
        println!("P_{n}: {wp} {:?}   C_{n}: {wc} {:?}", fp.values(), fc.values());
    }

    let g = generate(&FamilySpec::Path(5))?;
    let f = Labeling::new(vec![1, 2, 1, 3, 0])?;
    println!("\n{:?} violations on P_5: {:?}", f.values(), validate(&g, &f)?);
    let h = eliminate_ones(&g, &f)?;
    println!("without ones: {:?} (weight {} -> {})", h.values(), f.weight(), h.weight());

    let bad = Labeling::new(vec![0, 0, 2, 0, 0])?;
    println!("{:?} violations: {:?}", bad.values(), validate(&g, &bad)?);
    Ok(())
}
