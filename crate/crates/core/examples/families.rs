//! Builds each graph family and prints its order, size and degree profile.

use drdf::graph::{generate, write_edge_list, FamilySpec, Graph};

fn main() -> Result<(), drdf::GraphError> {
    let specs = [
        ("cycle C_11", FamilySpec::Cycle(11)),
        ("path P_6", FamilySpec::Path(6)),
        ("complete K_5", FamilySpec::Complete(5)),
        ("tadpole C_{5,6}", FamilySpec::Tadpole { m: 5, k: 6 }),
        ("spider (2,3,1)", FamilySpec::Spider(vec![2, 3, 1])),
        ("Q", FamilySpec::QGraph),
        ("G_Q on two isolated vertices", FamilySpec::GQ(Graph::empty(2))),
        ("G_H on K_1", FamilySpec::GH(Graph::empty(1))),
        (
            "star of tadpoles",
            FamilySpec::StarOfTadpoles {
                tadpoles: vec![(4, 2)],
                attached_cycles: vec![3],
                identified_cycles: vec![5],
            },
        ),
    ];
    for (name, spec) in &specs {
        let g = generate(spec)?;
        println!(
            "{name}: n={} m={} min_deg={} max_deg={}",
            g.order(),
            g.edge_count(),
            g.min_degree(),
            g.max_degree()
        );
    }
    print!("\nC_{{5,6}} as an edge list:\n{}", write_edge_list(&generate(&specs[3].1)?));
    Ok(())
}
