//! Seeded random graph models.
//!
//! Every instance draws from its own ChaCha8 stream: the run seed picks the
//! key and the instance index picks the stream, so instances can be
//! generated in any order or in parallel with identical results.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::graph::{generate, FamilySpec, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum RandomModel {
    /// G(n, p) conditioned on minimum degree ≥ 2, by rejection.
    #[value(name = "uniform-min-deg-2")]
    #[serde(rename = "uniform-min-deg-2")]
    UniformMinDeg2,
    /// A Hamiltonian cycle plus a few random cycles through vertex subsets.
    CycleUnion,
    /// A randomly parameterized member of one of the generator families.
    Family,
}

pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Edge probability of the `attempt`-th rejection round:
/// `min(1, (1.5 + 0.25·attempt) · ln n / n)`.
pub fn min_deg2_probability(n: usize, attempt: u32) -> f64 {
    let n = n as f64;
    ((1.5 + 0.25 * attempt as f64) * n.ln() / n).min(1.0)
}

fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("pairs are valid")
}

pub fn uniform_min_deg2(n: usize, rng: &mut impl Rng) -> Result<Graph, HarnessError> {
    if n < 3 {
        return Err(HarnessError::InvalidConfig(format!(
            "uniform-min-deg-2 needs n >= 3, got {n}"
        )));
    }
    let mut attempt = 0;
    loop {
        let g = gnp(n, min_deg2_probability(n, attempt), rng);
        if g.min_degree() >= 2 {
            return Ok(g);
        }
        attempt += 1;
    }
}

pub fn cycle_union(n: usize, rng: &mut impl Rng) -> Result<Graph, HarnessError> {
    if n < 3 {
        return Err(HarnessError::InvalidConfig(format!("cycle-union needs n >= 3, got {n}")));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (perm[i], perm[(i + 1) % n])).collect();
    let extra = rng.gen_range(0..=2 + n / 20);
    for _ in 0..extra {
        let len = rng.gen_range(3..=n);
        perm.shuffle(rng);
        edges.extend((0..len).map(|i| (perm[i], perm[(i + 1) % len])));
    }
    Ok(Graph::new(n, &edges).expect("pairs are valid"))
}

/// Leg lengths (each ≥ 1, at least 3 legs) of a spider on at most `max_n`
/// vertices.
pub fn random_spider_legs(max_n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let max_n = max_n.max(4);
    let n = rng.gen_range(4..=max_n);
    let budget = n - 1;
    let legs = rng.gen_range(3..=budget);
    let mut lens = vec![1; legs];
    for _ in legs..budget {
        let i = rng.gen_range(0..legs);
        lens[i] += 1;
    }
    lens
}

/// A family member of order close to `n` (exact for the single-parameter
/// families).
pub fn random_family(n: usize, rng: &mut impl Rng) -> Result<(FamilySpec, Graph), HarnessError> {
    let n = n.max(4);
    let spec = match rng.gen_range(0..7) {
        0 => FamilySpec::Cycle(n),
        1 => FamilySpec::Path(n),
        2 => {
            let m = rng.gen_range(3..n);
            FamilySpec::Tadpole { m, k: n - m }
        }
        3 => FamilySpec::Spider(random_spider_legs(n, rng)),
        4 => FamilySpec::GH(small_base(n / 11, rng)),
        5 => FamilySpec::GQ(small_base(n / 10, rng)),
        _ => {
            let pieces = rng.gen_range(2..=4);
            let mut tadpoles = Vec::new();
            let mut attached = Vec::new();
            let mut identified = Vec::new();
            for _ in 0..pieces {
                match rng.gen_range(0..3) {
                    0 => tadpoles.push((rng.gen_range(3..=8), rng.gen_range(1..=6))),
                    1 => attached.push(rng.gen_range(3..=9)),
                    _ => identified.push(rng.gen_range(3..=9)),
                }
            }
            FamilySpec::StarOfTadpoles {
                tadpoles,
                attached_cycles: attached,
                identified_cycles: identified,
            }
        }
    };
    let g = generate(&spec)?;
    Ok((spec, g))
}

fn small_base(size: usize, rng: &mut impl Rng) -> Graph {
    let size = size.max(1);
    if size >= 3 && rng.gen_bool(0.5) {
        generate(&FamilySpec::Cycle(size)).expect("valid")
    } else {
        generate(&FamilySpec::Path(size)).expect("valid")
    }
}

pub fn random_graph(model: RandomModel, n: usize, rng: &mut impl Rng) -> Result<Graph, HarnessError> {
    match model {
        RandomModel::UniformMinDeg2 => uniform_min_deg2(n, rng),
        RandomModel::CycleUnion => cycle_union(n, rng),
        RandomModel::Family => random_family(n, rng).map(|(_, g)| g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_streams() {
        let a = uniform_min_deg2(30, &mut instance_rng(7, 0)).unwrap();
        let b = uniform_min_deg2(30, &mut instance_rng(7, 0)).unwrap();
        let c = uniform_min_deg2(30, &mut instance_rng(7, 1)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.min_degree() >= 2);
    }

    #[test]
    fn small_n_rejected() {
        assert!(uniform_min_deg2(2, &mut instance_rng(0, 0)).is_err());
    }

    #[test]
    fn probability_schedule() {
        assert!((min_deg2_probability(100, 0) - 1.5 * 100f64.ln() / 100.0).abs() < 1e-12);
        assert_eq!(min_deg2_probability(3, 40), 1.0);
    }

    #[test]
    fn cycle_union_min_degree() {
        for i in 0..20 {
            let g = cycle_union(25, &mut instance_rng(3, i)).unwrap();
            assert!(g.min_degree() >= 2 && g.is_connected());
        }
    }

    #[test]
    fn spiders_are_spiders() {
        for i in 0..50 {
            let legs = random_spider_legs(14, &mut instance_rng(1, i));
            assert!(legs.len() >= 3 && legs.iter().all(|&l| l >= 1));
            assert!(legs.iter().sum::<usize>() < 14);
        }
    }
}
