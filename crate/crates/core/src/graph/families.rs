//! Generators for the graph families used throughout the toolkit.
//!
//! Numbering is fixed per variant so callers can refer to specific vertices:
//!
//! | variant | numbering |
//! |---|---|
//! | `Cycle(n)` | `0..n` in cyclic order |
//! | `Path(n)` | `0..n` along the path |
//! | `Complete(n)` | `0..n` |
//! | `Tadpole{m,k}` | cycle `0..m`, tail `m..m+k`, edge `0–m`; vertex 0 is the attachment |
//! | `Spider(legs)` | center 0, then each leg outward from the center |
//! | `QGraph` | cycles `0..5` and `5..10`, joined by `0–5` |
//! | `GQ(base)` | base ids kept; copy `i` of Q has its vertex 0 identified with base vertex `i`, its vertices `1..10` at `b + 9i + (j-1)` |
//! | `GH(base)` | base ids kept; hub graph H is `w=0`, cycles `1..6` and `6..11`, edges `0–1`, `0–6`; copy `i` puts `w` on base vertex `i` and H-vertex `j ≥ 1` at `b + 10i + (j-1)` |
//! | `StarOfTadpoles` | hub 0, then each tadpole (cycle then tail, tail end joined to the hub), then each attached cycle (first vertex joined to the hub), then each identified cycle (hub plays its first vertex) |

use super::{Graph, GraphError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    /// Cycle C_m with a k-vertex tail attached by one edge.
    Tadpole { m: usize, k: usize },
    /// Leg lengths in vertices, excluding the center.
    Spider(Vec<usize>),
    /// Two 5-cycles joined by one edge.
    QGraph,
    GQ(Graph),
    GH(Graph),
    /// A hub carrying tadpoles (joined at their tail end), cycles joined by
    /// one edge, and cycles passing through the hub.
    StarOfTadpoles {
        tadpoles: Vec<(usize, usize)>,
        attached_cycles: Vec<usize>,
        identified_cycles: Vec<usize>,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidFamily(msg));
        match self {
            FamilySpec::Cycle(n) if *n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::Path(0) => bad("path needs n >= 1".into()),
            FamilySpec::Complete(0) => bad("complete graph needs n >= 1".into()),
            FamilySpec::Tadpole { m, k } => {
                if *m < 3 {
                    bad(format!("tadpole needs m >= 3, got {m}"))
                } else if *k < 1 {
                    bad("tadpole needs k >= 1".into())
                } else {
                    Ok(())
                }
            }
            FamilySpec::Spider(legs) => {
                if legs.len() < 3 {
                    bad(format!("spider needs at least 3 legs, got {}", legs.len()))
                } else if legs.contains(&0) {
                    bad("spider legs need length >= 1".into())
                } else {
                    Ok(())
                }
            }
            FamilySpec::GQ(base) | FamilySpec::GH(base) if base.is_empty() => {
                bad("base graph must be nonempty".into())
            }
            FamilySpec::StarOfTadpoles {
                tadpoles,
                attached_cycles,
                identified_cycles,
            } => {
                if tadpoles.len() + attached_cycles.len() + identified_cycles.len() < 2 {
                    bad("star of tadpoles needs at least 2 pieces".into())
                } else if tadpoles.iter().any(|&(m, k)| m < 3 || k < 1) {
                    bad("star tadpoles need m >= 3 and k >= 1".into())
                } else if attached_cycles.iter().chain(identified_cycles).any(|&c| c < 3) {
                    bad("star cycles need length >= 3".into())
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Order of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Cycle(n) | FamilySpec::Path(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::Tadpole { m, k } => m + k,
            FamilySpec::Spider(legs) => 1 + legs.iter().sum::<usize>(),
            FamilySpec::QGraph => 10,
            FamilySpec::GQ(base) => 10 * base.order(),
            FamilySpec::GH(base) => 11 * base.order(),
            FamilySpec::StarOfTadpoles {
                tadpoles,
                attached_cycles,
                identified_cycles,
            } => {
                1 + tadpoles.iter().map(|(m, k)| m + k).sum::<usize>()
                    + attached_cycles.iter().sum::<usize>()
                    + identified_cycles.iter().map(|c| c - 1).sum::<usize>()
            }
        }
    }
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Self {
            n: 0,
            edges: Vec::new(),
        }
    }

    fn fresh(&mut self, count: usize) -> std::ops::Range<usize> {
        let start = self.n;
        self.n += count;
        start..self.n
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn path(&mut self, vs: &[usize]) {
        for w in vs.windows(2) {
            self.edge(w[0], w[1]);
        }
    }

    fn cycle(&mut self, vs: &[usize]) {
        self.path(vs);
        if vs.len() >= 3 {
            self.edge(vs[vs.len() - 1], vs[0]);
        }
    }

    fn finish(self) -> Graph {
        Graph::new(self.n, &self.edges).expect("generator edges are valid")
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let mut b = Builder::new();
    match spec {
        FamilySpec::Cycle(n) => {
            let vs: Vec<_> = b.fresh(*n).collect();
            b.cycle(&vs);
        }
        FamilySpec::Path(n) => {
            let vs: Vec<_> = b.fresh(*n).collect();
            b.path(&vs);
        }
        FamilySpec::Complete(n) => {
            b.fresh(*n);
            for u in 0..*n {
                for v in u + 1..*n {
                    b.edge(u, v);
                }
            }
        }
        FamilySpec::Tadpole { m, k } => {
            let cyc: Vec<_> = b.fresh(*m).collect();
            let tail: Vec<_> = b.fresh(*k).collect();
            b.cycle(&cyc);
            b.path(&tail);
            b.edge(cyc[0], tail[0]);
        }
        FamilySpec::Spider(legs) => {
            let center = b.fresh(1).start;
            for &len in legs {
                let leg: Vec<_> = b.fresh(len).collect();
                b.edge(center, leg[0]);
                b.path(&leg);
            }
        }
        FamilySpec::QGraph => return Ok(q_graph()),
        FamilySpec::GQ(base) => return Ok(attach_copies(base, &q_graph(), 0)),
        FamilySpec::GH(base) => return Ok(attach_copies(base, &h_graph(), 0)),
        FamilySpec::StarOfTadpoles {
            tadpoles,
            attached_cycles,
            identified_cycles,
        } => {
            let hub = b.fresh(1).start;
            for &(m, k) in tadpoles {
                let cyc: Vec<_> = b.fresh(m).collect();
                let tail: Vec<_> = b.fresh(k).collect();
                b.cycle(&cyc);
                b.path(&tail);
                b.edge(cyc[0], tail[0]);
                b.edge(tail[k - 1], hub);
            }
            for &c in attached_cycles {
                let cyc: Vec<_> = b.fresh(c).collect();
                b.cycle(&cyc);
                b.edge(cyc[0], hub);
            }
            for &c in identified_cycles {
                let mut cyc = vec![hub];
                cyc.extend(b.fresh(c - 1));
                b.cycle(&cyc);
            }
        }
    }
    Ok(b.finish())
}

/// Two 5-cycles `0..5`, `5..10` joined by the edge `0–5`.
fn q_graph() -> Graph {
    let mut b = Builder::new();
    let c1: Vec<_> = b.fresh(5).collect();
    let c2: Vec<_> = b.fresh(5).collect();
    b.cycle(&c1);
    b.cycle(&c2);
    b.edge(0, 5);
    b.finish()
}

/// Hub `0` joined to one vertex of each of the 5-cycles `1..6` and `6..11`.
fn h_graph() -> Graph {
    let mut b = Builder::new();
    b.fresh(1);
    let c1: Vec<_> = b.fresh(5).collect();
    let c2: Vec<_> = b.fresh(5).collect();
    b.cycle(&c1);
    b.cycle(&c2);
    b.edge(0, 1);
    b.edge(0, 6);
    b.finish()
}

/// Glues one copy of `gadget` onto every base vertex, identifying gadget
/// vertex `root` with the base vertex.
fn attach_copies(base: &Graph, gadget: &Graph, root: usize) -> Graph {
    let b = base.order();
    let extra = gadget.order() - 1;
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    for i in 0..b {
        let id = |j: usize| -> usize {
            if j == root {
                i
            } else {
                let rank = if j < root { j } else { j - 1 };
                b + extra * i + rank
            }
        };
        edges.extend(gadget.edges().map(|(u, v)| (id(u), id(v))));
    }
    Graph::new(b * gadget.order(), &edges).expect("gadget edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn tadpole_3_1() {
        let g = generate(&FamilySpec::Tadpole { m: 3, k: 1 }).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.degrees(), vec![3, 2, 2, 1]);
    }

    #[test]
    fn tadpole_5_6() {
        let g = generate(&FamilySpec::Tadpole { m: 5, k: 6 }).unwrap();
        assert_eq!(sorted_degrees(&g), [vec![1], vec![2; 9], vec![3]].concat());
        assert_eq!(g.degree(0), 3);
        assert!(g.has_edge(0, 5));
    }

    #[test]
    fn q_graph_shape() {
        let g = generate(&FamilySpec::QGraph).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.edge_count(), 11);
        let hubs: Vec<_> = (0..10).filter(|&v| g.degree(v) == 3).collect();
        assert_eq!(hubs, vec![0, 5]);
    }

    #[test]
    fn gh_on_single_vertex() {
        let g = generate(&FamilySpec::GH(Graph::empty(1))).unwrap();
        assert_eq!(g.order(), 11);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.neighbors(0), &[1, 6]);
        assert_eq!(sorted_degrees(&g), [vec![2; 9], vec![3, 3]].concat());
    }

    #[test]
    fn gq_on_single_vertex_is_q() {
        let g = generate(&FamilySpec::GQ(Graph::empty(1))).unwrap();
        assert_eq!(g, generate(&FamilySpec::QGraph).unwrap());
    }

    #[test]
    fn gh_and_gq_orders() {
        let base = generate(&FamilySpec::Path(3)).unwrap();
        let gh = generate(&FamilySpec::GH(base.clone())).unwrap();
        let gq = generate(&FamilySpec::GQ(base.clone())).unwrap();
        assert_eq!(gh.order(), 33);
        assert_eq!(gq.order(), 30);
        assert_eq!(gh.edge_count(), 2 + 3 * 12);
        assert_eq!(gq.edge_count(), 2 + 3 * 11);
        // Base vertex 1 has two base neighbors plus its two H attachments.
        assert_eq!(gh.degree(1), 4);
        assert_eq!(gq.degree(1), 5);
    }

    #[test]
    fn spider_layout() {
        let g = generate(&FamilySpec::Spider(vec![1, 2, 3])).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.neighbors(0), &[1, 2, 4]);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn star_of_tadpoles_layout() {
        let spec = FamilySpec::StarOfTadpoles {
            tadpoles: vec![(3, 2)],
            attached_cycles: vec![5],
            identified_cycles: vec![4],
        };
        let g = generate(&spec).unwrap();
        assert_eq!(g.order(), spec.order());
        assert_eq!(g.order(), 1 + 5 + 5 + 3);
        // hub: tail end (5), attached cycle vertex (6), two identified-cycle vertices
        assert_eq!(g.neighbors(0), &[5, 6, 11, 13]);
        assert_eq!(g.min_degree(), 2);
    }

    #[test]
    fn invalid_specs() {
        for spec in [
            FamilySpec::Cycle(2),
            FamilySpec::Tadpole { m: 2, k: 1 },
            FamilySpec::Tadpole { m: 3, k: 0 },
            FamilySpec::Spider(vec![1, 1]),
            FamilySpec::Spider(vec![1, 0, 2]),
            FamilySpec::StarOfTadpoles {
                tadpoles: vec![(5, 1)],
                attached_cycles: vec![],
                identified_cycles: vec![],
            },
            FamilySpec::GH(Graph::empty(0)),
        ] {
            assert!(matches!(generate(&spec), Err(GraphError::InvalidFamily(_))), "{spec:?}");
        }
    }
}
