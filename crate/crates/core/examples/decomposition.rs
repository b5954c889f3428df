//! Splits a graph into high-degree vertices, maximal paths, pendant paths
//! and floating cycles.

use drdf::graph::{decompose, generate, FamilySpec};

fn main() -> Result<(), drdf::GraphError> {
    let g = generate(&FamilySpec::StarOfTadpoles {
        tadpoles: vec![(4, 2)],
        attached_cycles: vec![5],
        identified_cycles: vec![6],
    })?
    .disjoint_union(&generate(&FamilySpec::Cycle(4))?);
    let d = decompose(&g);
    println!("high degree: {:?}", d.high_degree);
    for p in &d.maximal_paths {
        println!("maximal path {:?} attached to {:?}", p.vertices, p.attachments);
    }
    for p in &d.pendant_paths {
        println!("pendant path {:?} hanging from {:?}", p.vertices, p.attachment);
    }
    println!("floating cycles: {:?}", d.floating_cycles);
    println!("path counts by order: {:?}", d.path_counts);
    Ok(())
}
