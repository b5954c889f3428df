//! Brute-force oracle shared by the integration tests. It only reads the
//! edge set of a graph and re-implements the DRDF conditions itself.

#![allow(dead_code)]

use drdf::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.order()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

pub fn oracle_vertex_ok(adj: &[Vec<usize>], f: &[u8], v: usize) -> bool {
    let threes = adj[v].iter().filter(|&&w| f[w] == 3).count();
    let twos = adj[v].iter().filter(|&&w| f[w] == 2).count();
    match f[v] {
        0 => threes >= 1 || twos >= 2,
        1 => threes + twos >= 1,
        2 | 3 => true,
        _ => false,
    }
}

pub fn oracle_valid(adj: &[Vec<usize>], f: &[u8]) -> bool {
    (0..adj.len()).all(|v| oracle_vertex_ok(adj, f, v))
}

/// Minimum weight over every labeling with values in {0,1,2,3} (or
/// {0,2,3}), enumerated as an odometer.
pub fn oracle_gamma(g: &Graph, allow_ones: bool) -> u64 {
    let n = g.order();
    assert!(n <= 12, "oracle is exponential");
    let adj = adjacency(g);
    let digits: &[u8] = if allow_ones { &[0, 1, 2, 3] } else { &[0, 2, 3] };
    let mut idx = vec![0usize; n];
    let mut f = vec![digits[0]; n];
    let mut best = u64::MAX;
    loop {
        let w: u64 = f.iter().map(|&x| x as u64).sum();
        if w < best && oracle_valid(&adj, &f) {
            best = w;
        }
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            idx[i] += 1;
            if idx[i] < digits.len() {
                f[i] = digits[idx[i]];
                break;
            }
            idx[i] = 0;
            f[i] = digits[0];
            i += 1;
        }
    }
}
