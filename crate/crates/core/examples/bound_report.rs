//! The 12n/11 report and class membership for a few graphs.

use drdf::construct::{check_bound, membership_e};
use drdf::graph::{generate, FamilySpec, Graph};
use drdf::solver::{gamma_dr, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("C_12", generate(&FamilySpec::Cycle(12))?),
        ("C_7", generate(&FamilySpec::Cycle(7))?),
        ("Q", generate(&FamilySpec::QGraph)?),
        ("G_Q on P_2", generate(&FamilySpec::GQ(generate(&FamilySpec::Path(2))?))?),
        ("K_5", generate(&FamilySpec::Complete(5))?),
        ("two triangles", Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])?),
    ];
    for (name, g) in &graphs {
        let f = gamma_dr(g, &SolveOptions::default())?.witness;
        let r = check_bound(g, &f)?;
        println!(
            "{name:<14} gamma={:<3} vs {}/11: {:<5} tags={:?} membership={:?}",
            r.weight,
            r.threshold.0,
            r.satisfied,
            r.tags,
            membership_e(g)
        );
    }
    Ok(())
}
