//! Exhaustive enumeration of small graphs.
//!
//! The labeled sweep walks every subset of the `n(n-1)/2` vertex pairs. The
//! deduplicated sweep grows isomorphism-class representatives one vertex at
//! a time and keys them by [`canonical_code`].

use std::collections::BTreeMap;

use super::{Graph, GraphError};

pub const DEFAULT_ENUMERATION_CEILING: usize = 8;

#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    pub connected_only: bool,
    /// Emit one representative per isomorphism class instead of every
    /// labeled graph.
    pub dedup: bool,
    pub ceiling: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            connected_only: false,
            dedup: false,
            ceiling: DEFAULT_ENUMERATION_CEILING,
        }
    }
}

pub fn labeled_pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(labeled_pair_count(n));
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// The labeled graph whose edge set is the bitmask `index` over the pairs
/// `(0,1), (0,2), …, (n-2,n-1)` in lexicographic order. Lets parallel sweeps
/// split the index range.
pub fn from_labeled_index(n: usize, index: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| index >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::new(n, &edges).expect("pairs are in range")
}

/// Every graph on `n` vertices with minimum degree at least `min_degree`.
pub fn enumerate_small(
    n: usize,
    min_degree: usize,
    opts: EnumerateOptions,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>, GraphError> {
    if n > opts.ceiling {
        return Err(GraphError::AboveCeiling {
            n,
            ceiling: opts.ceiling,
        });
    }
    let keep = move |g: &Graph| {
        (n == 0 || g.min_degree() >= min_degree) && (!opts.connected_only || g.is_connected())
    };
    if opts.dedup {
        let reps: Vec<Graph> = class_representatives(n).into_iter().filter(keep).collect();
        return Ok(Box::new(reps.into_iter()));
    }
    let total: u64 = 1u64 << labeled_pair_count(n);
    Ok(Box::new(
        (0..total)
            .map(move |i| from_labeled_index(n, i))
            .filter(move |g| keep(g)),
    ))
}

/// One graph per isomorphism class on `n` vertices, each in canonical
/// labeling, ordered by canonical code.
fn class_representatives(n: usize) -> Vec<Graph> {
    let mut level: BTreeMap<u64, Graph> = BTreeMap::new();
    level.insert(0, Graph::empty(n.min(1)));
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            let old = size - 1;
            let base: Vec<(usize, usize)> = g.edges().collect();
            for subset in 0u32..(1 << old) {
                let mut edges = base.clone();
                edges.extend((0..old).filter(|v| subset >> v & 1 == 1).map(|v| (v, old)));
                let h = Graph::new(size, &edges).expect("valid");
                let code = canonical_code(&h);
                next.entry(code).or_insert_with(|| decode(size, code));
            }
        }
        level = next;
    }
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    level.into_values().collect()
}

fn decode(n: usize, code: u64) -> Graph {
    from_labeled_index(n, code)
}

/// Isomorphism-invariant code for graphs with at most 11 vertices: the
/// largest pair-bitmask over all vertex orderings that list vertices by
/// non-increasing (degree, sorted neighbor degrees) signature.
///
/// Two graphs receive the same code iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let deg = g.degrees();
    let sig: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| deg[w]).collect();
            nd.sort_unstable_by(|a, b| b.cmp(a));
            (deg[v], nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| sig[b].cmp(&sig[a]));
    // Cells of equal signature, in order.
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match cells.last_mut() {
            Some(c) if sig[c[0]] == sig[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let pair_bit = pair_bit_table(n);
    let mut best = 0u64;
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    search_code(g, &cells, 0, &mut placed, &mut vec![false; n], &pair_bit, 0, &mut best);
    best
}

fn pair_bit_table(n: usize) -> Vec<Vec<u32>> {
    let mut t = vec![vec![0; n]; n];
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            t[u][v] = i;
            t[v][u] = i;
            i += 1;
        }
    }
    t
}

#[allow(clippy::too_many_arguments)]
fn search_code(
    g: &Graph,
    cells: &[Vec<usize>],
    cell: usize,
    placed: &mut Vec<usize>,
    used: &mut Vec<bool>,
    pair_bit: &[Vec<u32>],
    code: u64,
    best: &mut u64,
) {
    if placed.len() == g.order() {
        *best = (*best).max(code);
        return;
    }
    let mut cell = cell;
    if cells[cell].iter().all(|&v| used[v]) {
        cell += 1;
    }
    let pos = placed.len();
    for &v in &cells[cell] {
        if used[v] {
            continue;
        }
        let mut add = code;
        for (p, &u) in placed.iter().enumerate() {
            if g.has_edge(u, v) {
                add |= 1 << pair_bit[p][pos];
            }
        }
        used[v] = true;
        placed.push(v);
        search_code(g, cells, cell, placed, used, pair_bit, add, best);
        placed.pop();
        used[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn labeled_counts() {
        for n in 0..=5 {
            let count = enumerate_small(n, 0, EnumerateOptions::default()).unwrap().count();
            assert_eq!(count, 1 << labeled_pair_count(n), "n={n}");
        }
    }

    #[test]
    fn triangle_only_on_three() {
        let opts = EnumerateOptions {
            dedup: true,
            ..Default::default()
        };
        let gs: Vec<_> = enumerate_small(3, 2, opts).unwrap().collect();
        assert_eq!(gs.len(), 1);
        assert!(gs[0].is_cycle());
    }

    #[test]
    fn four_vertex_min_degree_two() {
        let opts = EnumerateOptions {
            dedup: true,
            connected_only: true,
            ..Default::default()
        };
        let gs: Vec<_> = enumerate_small(4, 2, opts).unwrap().collect();
        let mut edge_counts: Vec<_> = gs.iter().map(Graph::edge_count).collect();
        edge_counts.sort_unstable();
        // C4, diamond, K4
        assert_eq!(edge_counts, vec![4, 5, 6]);
    }

    #[test]
    fn class_counts_match_known_sequence() {
        // Unlabeled graphs on n vertices: 1, 1, 2, 4, 11, 34, 156, 1044.
        let want = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(class_representatives(n).len(), w, "n={n}");
        }
    }

    #[test]
    fn canonical_code_is_invariant() {
        let g = generate(&FamilySpec::Tadpole { m: 4, k: 2 }).unwrap();
        // Relabel by reversing ids.
        let n = g.order();
        let edges: Vec<_> = g.edges().map(|(u, v)| (n - 1 - u, n - 1 - v)).collect();
        let h = Graph::new(n, &edges).unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&h));
        let p = generate(&FamilySpec::Path(6)).unwrap();
        assert_ne!(canonical_code(&g), canonical_code(&p));
    }

    #[test]
    fn above_ceiling() {
        assert!(matches!(
            enumerate_small(9, 0, EnumerateOptions::default()),
            Err(GraphError::AboveCeiling { n: 9, ceiling: 8 })
        ));
    }
}
