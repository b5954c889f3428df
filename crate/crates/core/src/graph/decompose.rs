//! Split of a graph into high-degree vertices and the paths/cycles between them.

use std::collections::BTreeMap;

use super::Graph;

/// A path of degree-2 vertices whose two end-vertices each have a neighbor of
/// degree at least 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalPath {
    pub vertices: Vec<usize>,
    /// High-degree vertices adjacent to an end-vertex (size 1 or 2).
    pub attachments: Vec<usize>,
}

impl MaximalPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The high-degree neighbor of `vertices[0]` (`first == true`) or of the
    /// last vertex.
    pub fn end_attachment(&self, g: &Graph, first: bool) -> usize {
        let (end, next) = if first {
            (self.vertices[0], self.vertices.get(1))
        } else {
            let l = self.vertices.len();
            (self.vertices[l - 1], l.checked_sub(2).map(|i| &self.vertices[i]))
        };
        let mut outside = g
            .neighbors(end)
            .iter()
            .copied()
            .filter(|&w| Some(&w) != next && g.degree(w) >= 3);
        if self.vertices.len() == 1 {
            let a: Vec<usize> = outside.collect();
            return if first { a[0] } else { a[a.len() - 1] };
        }
        outside.next().expect("maximal path ends have an attachment")
    }
}

/// A path of vertices of degree at most 2 containing a vertex of degree at
/// most 1, hanging from at most one high-degree vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantPath {
    pub vertices: Vec<usize>,
    pub attachment: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    /// Vertices of degree at least 3, ascending.
    pub high_degree: Vec<usize>,
    pub maximal_paths: Vec<MaximalPath>,
    pub pendant_paths: Vec<PendantPath>,
    /// Cycle components containing no high-degree vertex.
    pub floating_cycles: Vec<Vec<usize>>,
    /// Number of maximal paths per vertex count.
    pub path_counts: BTreeMap<usize, usize>,
}

impl Decomposition {
    /// For each vertex, the index of the maximal path containing it.
    pub fn path_index(&self, n: usize) -> Vec<Option<usize>> {
        let mut idx = vec![None; n];
        for (i, p) in self.maximal_paths.iter().enumerate() {
            for &v in &p.vertices {
                idx[v] = Some(i);
            }
        }
        idx
    }
}

/// Paths are reported with the lexicographically smaller end first.
pub fn decompose(g: &Graph) -> Decomposition {
    let n = g.order();
    let high: Vec<bool> = (0..n).map(|v| g.degree(v) >= 3).collect();
    let mut seen = high.clone();
    let mut out = Decomposition {
        high_degree: (0..n).filter(|&v| high[v]).collect(),
        ..Default::default()
    };

    for s in 0..n {
        if seen[s] {
            continue;
        }
        // Walk the low-degree component of s out to both ends.
        let low_nbrs = |v: usize| -> Vec<usize> {
            g.neighbors(v).iter().copied().filter(|&w| !high[w]).collect()
        };
        let mut seq = vec![s];
        seen[s] = true;
        let mut is_cycle = false;
        let start_nbrs = low_nbrs(s);
        for (side, &first) in start_nbrs.iter().enumerate() {
            let mut prev = s;
            let mut cur = first;
            let mut ext = Vec::new();
            loop {
                if cur == s {
                    is_cycle = true;
                    break;
                }
                if seen[cur] {
                    break;
                }
                seen[cur] = true;
                ext.push(cur);
                match low_nbrs(cur).into_iter().find(|&w| w != prev) {
                    Some(next) => {
                        prev = cur;
                        cur = next;
                    }
                    None => break,
                }
            }
            if side == 0 {
                ext.reverse();
                ext.extend(seq);
                seq = ext;
            } else {
                seq.extend(ext);
            }
            if is_cycle {
                break;
            }
        }
        if is_cycle {
            seq.sort_unstable();
            out.floating_cycles.push(seq);
            continue;
        }
        if seq.len() > 1 && seq[seq.len() - 1] < seq[0] {
            seq.reverse();
        }
        let mut attachments: Vec<usize> = Vec::new();
        for &end in [seq[0], seq[seq.len() - 1]].iter() {
            for &w in g.neighbors(end) {
                if high[w] && !attachments.contains(&w) {
                    attachments.push(w);
                }
            }
        }
        attachments.sort_unstable();
        let has_leaf = seq.iter().any(|&v| g.degree(v) <= 1);
        if has_leaf || attachments.is_empty() {
            out.pendant_paths.push(PendantPath {
                vertices: seq,
                attachment: attachments.first().copied(),
            });
        } else {
            *out.path_counts.entry(seq.len()).or_insert(0) += 1;
            out.maximal_paths.push(MaximalPath {
                vertices: seq,
                attachments,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn tadpole_3_2() {
        let g = generate(&FamilySpec::Tadpole { m: 3, k: 2 }).unwrap();
        let d = decompose(&g);
        assert_eq!(d.high_degree, vec![0]);
        assert_eq!(
            d.maximal_paths,
            vec![MaximalPath {
                vertices: vec![1, 2],
                attachments: vec![0]
            }]
        );
        assert_eq!(
            d.pendant_paths,
            vec![PendantPath {
                vertices: vec![3, 4],
                attachment: Some(0)
            }]
        );
        assert!(d.floating_cycles.is_empty());
    }

    #[test]
    fn q_graph() {
        let g = generate(&FamilySpec::QGraph).unwrap();
        let d = decompose(&g);
        assert_eq!(d.high_degree, vec![0, 5]);
        assert_eq!(d.maximal_paths.len(), 2);
        assert_eq!(d.maximal_paths[0].vertices, vec![1, 2, 3, 4]);
        assert_eq!(d.maximal_paths[0].attachments, vec![0]);
        assert_eq!(d.maximal_paths[1].vertices, vec![6, 7, 8, 9]);
        assert_eq!(d.maximal_paths[1].attachments, vec![5]);
        assert_eq!(d.path_counts.get(&4), Some(&2));
        assert!(d.pendant_paths.is_empty());
    }

    #[test]
    fn cycle_is_floating() {
        let g = generate(&FamilySpec::Cycle(6)).unwrap();
        let d = decompose(&g);
        assert!(d.high_degree.is_empty());
        assert_eq!(d.floating_cycles, vec![(0..6).collect::<Vec<_>>()]);
        assert!(d.maximal_paths.is_empty());
    }

    #[test]
    fn path_graph_is_unattached_pendant() {
        let g = generate(&FamilySpec::Path(4)).unwrap();
        let d = decompose(&g);
        assert_eq!(d.pendant_paths.len(), 1);
        assert_eq!(d.pendant_paths[0].vertices, vec![0, 1, 2, 3]);
        assert_eq!(d.pendant_paths[0].attachment, None);
    }

    #[test]
    fn single_vertex_path_between_hubs() {
        // K4 minus an edge, subdivided: 0 and 1 have degree 3, 4 sits between them.
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 4), (4, 1), (2, 3), (3, 1)]).unwrap();
        let d = decompose(&g);
        assert_eq!(d.high_degree, vec![0, 1, 2]);
        let p = d.maximal_paths.iter().find(|p| p.vertices == vec![4]).unwrap();
        assert_eq!(p.attachments, vec![0, 1]);
        assert_eq!(p.end_attachment(&g, true), 0);
        assert_eq!(p.end_attachment(&g, false), 1);
    }

    #[test]
    fn end_attachment_orientation() {
        // 0 and 5 are hubs (K_{2,3}-like core), path 1-2 runs from 0 to 5.
        let g = generate(&FamilySpec::QGraph).unwrap();
        let d = decompose(&g);
        let p = &d.maximal_paths[0];
        assert_eq!(p.end_attachment(&g, true), 0);
        assert_eq!(p.end_attachment(&g, false), 0);
    }
}
