//! Seeded random graphs from each model; the same seed and index always
//! give the same graph.

use drdf::construct::{construct_drdf, ConstructOptions};
use drdf::harness::{instance_rng, random_graph, RandomModel};

fn main() -> Result<(), drdf::harness::HarnessError> {
    let seed = 7;
    for model in [RandomModel::UniformMinDeg2, RandomModel::CycleUnion, RandomModel::Family] {
        for i in 0..3 {
            let g = random_graph(model, 40, &mut instance_rng(seed, i))?;
            let (f, trace) = construct_drdf(&g, &ConstructOptions::default());
            println!(
                "{model:?} #{i}: n={} m={} min_deg={} constructed weight={} ({})",
                g.order(),
                g.edge_count(),
                g.min_degree(),
                f.weight(),
                trace.summary()
            );
        }
    }
    Ok(())
}
