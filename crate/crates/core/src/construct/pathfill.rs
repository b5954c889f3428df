//! Optimal relabeling of an induced path with everything else held fixed.

use crate::graph::Graph;

const VALUES: [u8; 3] = [0, 2, 3];
const NONE: usize = 3;

#[derive(Clone, Copy, Default)]
struct Support {
    twos: u32,
    three: bool,
}

impl Support {
    fn with(mut self, v: Option<u8>) -> Self {
        match v {
            Some(2) => self.twos += 1,
            Some(3) => self.three = true,
            _ => {}
        }
        self
    }

    fn covers(self, value: u8) -> bool {
        match value {
            0 => self.three || self.twos >= 2,
            1 => self.three || self.twos >= 1,
            _ => true,
        }
    }
}

/// Reassigns the vertices of `seg` (consecutive vertices of an induced path)
/// with values in {0,2,3} of minimum total weight such that every segment
/// vertex is satisfied and every outside neighbor touching the segment at a
/// single vertex ends up satisfied. Returns false, leaving `values`
/// untouched, when `seg` is not a path or no assignment exists.
pub(crate) fn fill_segment(g: &Graph, values: &mut [u8], seg: &[usize]) -> bool {
    let l = seg.len();
    if l == 0 {
        return true;
    }
    let n = g.order();
    let mut in_seg = vec![usize::MAX; 0];
    let pos = |v: usize, in_seg: &Vec<usize>| -> Option<usize> {
        in_seg.get(v).copied().filter(|&p| p != usize::MAX)
    };
    in_seg.resize(n, usize::MAX);
    for (i, &v) in seg.iter().enumerate() {
        if in_seg[v] != usize::MAX {
            return false;
        }
        in_seg[v] = i;
    }
    for i in 0..l {
        for &w in g.neighbors(seg[i]) {
            if let Some(j) = pos(w, &in_seg) {
                if j + 1 != i && i + 1 != j {
                    return false;
                }
            }
        }
        if i + 1 < l && !g.has_edge(seg[i], seg[i + 1]) {
            return false;
        }
    }

    let mut ext = vec![Support::default(); l];
    let mut lo = vec![0u8; l];
    for i in 0..l {
        for &w in g.neighbors(seg[i]) {
            if pos(w, &in_seg).is_some() {
                continue;
            }
            ext[i] = ext[i].with(Some(values[w]));
            let wv = values[w];
            if wv >= 2 {
                continue;
            }
            // Outside neighbor that may depend on the segment.
            let mut outside = Support::default();
            let mut seg_nbrs = 0;
            for &x in g.neighbors(w) {
                if pos(x, &in_seg).is_some() {
                    seg_nbrs += 1;
                } else {
                    outside = outside.with(Some(values[x]));
                }
            }
            if outside.covers(wv) || seg_nbrs != 1 {
                continue;
            }
            let need = if wv == 1 || outside.twos >= 1 { 2 } else { 3 };
            lo[i] = lo[i].max(need);
        }
    }

    // cost[a][b]: best weight of seg[..i] with seg[i-1] = VALUES[a] (or NONE)
    // and seg[i-2] = VALUES[b] (or NONE).
    let inf = u64::MAX;
    let mut cost = [[inf; 4]; 4];
    cost[NONE][NONE] = 0;
    let mut back: Vec<[[(usize, usize); 4]; 4]> = Vec::with_capacity(l);
    let val = |k: usize| if k == NONE { None } else { Some(VALUES[k]) };
    for i in 0..l {
        let mut next = [[inf; 4]; 4];
        let mut bp = [[(NONE, NONE); 4]; 4];
        for a in 0..4 {
            for b in 0..4 {
                let c = cost[a][b];
                if c == inf {
                    continue;
                }
                for (k, &x) in VALUES.iter().enumerate() {
                    if x < lo[i] {
                        continue;
                    }
                    if i >= 1 {
                        let prev = VALUES[a];
                        let sup = ext[i - 1].with(val(b)).with(Some(x));
                        if !sup.covers(prev) {
                            continue;
                        }
                    }
                    let nc = c + x as u64;
                    if nc < next[k][a] {
                        next[k][a] = nc;
                        bp[k][a] = (a, b);
                    }
                }
            }
        }
        back.push(bp);
        cost = next;
    }
    let mut best = (inf, NONE, NONE);
    for a in 0..3 {
        for b in 0..4 {
            let c = cost[a][b];
            if c == inf {
                continue;
            }
            let sup = ext[l - 1].with(val(b));
            if sup.covers(VALUES[a]) && c < best.0 {
                best = (c, a, b);
            }
        }
    }
    if best.0 == inf {
        return false;
    }
    let (mut a, mut b) = (best.1, best.2);
    for i in (0..l).rev() {
        values[seg[i]] = VALUES[a];
        let (pa, pb) = back[i][a][b];
        a = pa;
        b = pb;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::labeling::{is_drdf, Labeling};

    #[test]
    fn whole_path_matches_gamma() {
        for n in 1..15 {
            let g = generate(&FamilySpec::Path(n)).unwrap();
            let mut v = vec![0; n];
            let seg: Vec<usize> = (0..n).collect();
            assert!(fill_segment(&g, &mut v, &seg));
            let f = Labeling::new(v).unwrap();
            assert!(is_drdf(&g, &f));
            let want = if n % 3 == 0 { n } else { n + 1 } as u64;
            assert_eq!(f.weight(), want, "P{n}");
        }
    }

    #[test]
    fn supported_ends() {
        // Cycle 0..6 with 0 fixed at 3: the path 1..5 needs only one 3.
        let g = generate(&FamilySpec::Cycle(6)).unwrap();
        let mut v = vec![3, 0, 0, 0, 0, 0];
        assert!(fill_segment(&g, &mut v, &[1, 2, 3, 4, 5]));
        assert_eq!(v.iter().map(|&x| x as u64).sum::<u64>(), 6);
        assert!(is_drdf(&g, &Labeling::new(v).unwrap()));
    }

    #[test]
    fn outside_dependency_respected() {
        // Path 0-1-2, 0 fixed at 0 with no other help: vertex 1 must be 3.
        let g = generate(&FamilySpec::Path(3)).unwrap();
        let mut v = vec![0, 0, 0];
        assert!(fill_segment(&g, &mut v, &[1, 2]));
        assert_eq!(v, vec![0, 3, 0]);
    }

    #[test]
    fn rejects_non_path() {
        let g = generate(&FamilySpec::Cycle(3)).unwrap();
        let mut v = vec![0, 0, 0];
        assert!(!fill_segment(&g, &mut v, &[0, 1, 2]));
        assert_eq!(v, vec![0, 0, 0]);
    }
}
