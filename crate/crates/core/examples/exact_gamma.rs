//! Exact γ_dR with witnesses for the extremal graphs of the 12n/11 bound.

use drdf::graph::{generate, FamilySpec, Graph};
use drdf::solver::{gamma_dr, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("C_11", FamilySpec::Cycle(11)),
        ("C_{5,6}", FamilySpec::Tadpole { m: 5, k: 6 }),
        ("G_H on K_1", FamilySpec::GH(Graph::empty(1))),
        ("C_5", FamilySpec::Cycle(5)),
        ("C_7", FamilySpec::Cycle(7)),
        ("Q", FamilySpec::QGraph),
    ];
    for (name, spec) in cases {
        let g = generate(&spec)?;
        let r = gamma_dr(&g, &SolveOptions::default())?;
        let n = g.order();
        println!(
            "{name:<11} n={n:<3} gamma={:<3} 12n/11={:.3} witness={:?} nodes={}",
            r.value,
            12.0 * n as f64 / 11.0,
            r.witness.values(),
            r.nodes_expanded
        );
    }
    Ok(())
}
