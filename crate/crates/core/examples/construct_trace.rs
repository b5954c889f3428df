//! Runs the reduction engine and prints its trace step by step.

use drdf::construct::{check_bound, construct_drdf, ConstructOptions};
use drdf::graph::{generate, FamilySpec, Graph};

fn show(name: &str, g: &Graph) -> Result<(), Box<dyn std::error::Error>> {
    let (f, trace) = construct_drdf(g, &ConstructOptions::default());
    let report = check_bound(g, &f)?;
    println!(
        "{name}: n={} weight={} (12n/11 = {}/11) satisfied={} rules: {}",
        report.n,
        report.weight,
        report.threshold.0,
        report.satisfied,
        trace.summary()
    );
    for s in &trace.steps {
        println!(
            "  {:<10} removed={:<3} +{:<3} {}",
            s.rule.to_string(),
            s.removed,
            s.weight_added,
            s.note
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let star = generate(&FamilySpec::StarOfTadpoles {
        tadpoles: vec![(4, 3), (6, 2)],
        attached_cycles: vec![9, 4],
        identified_cycles: vec![6],
    })?;
    show("star of tadpoles", &star)?;
    show("G_H on P_2", &generate(&FamilySpec::GH(generate(&FamilySpec::Path(2))?))?)?;
    show("C_{4,40}", &generate(&FamilySpec::Tadpole { m: 4, k: 40 })?)?;
    Ok(())
}
