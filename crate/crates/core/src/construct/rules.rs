//! Configuration matchers. Each returns an [`Action`] describing how to
//! shrink the current graph and how to extend a labeling of the result.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{decompose, Decomposition, Graph};
use crate::labeling::{closed_form_cycle, closed_form_path, vertex_ok};
use crate::solver::{gamma_dr, SolveOptions};

pub(crate) type Assign = Vec<(usize, u8)>;

/// Remove `removed`, delete and add edges, recurse, then extend.
#[derive(Clone, Debug, Default)]
pub(crate) struct Reduce {
    pub note: String,
    pub matched: Vec<usize>,
    pub removed: Vec<usize>,
    pub added: Vec<(usize, usize)>,
    pub deleted: Vec<(usize, usize)>,
    /// Complete extension patterns, tried in order; the lightest valid wins.
    pub candidates: Vec<Assign>,
    /// Values fixed before the optimal path refill of `segments`.
    pub fixed: Assign,
    pub segments: Vec<Vec<usize>>,
}

impl Reduce {
    /// A peel detaches a piece without touching the rest of the graph, so
    /// any self-contained labeling of the piece extends.
    pub fn is_peel(&self) -> bool {
        self.added.is_empty() && self.deleted.is_empty()
    }
}

pub(crate) enum Action {
    Leaf { note: String, values: Vec<u8> },
    Reduce(Reduce),
}

/// Search budget for relabeling a detached piece; the best labeling found
/// is used if the budget runs out.
pub(crate) const PIECE_NODE_LIMIT: u64 = 2_000_000;

pub(crate) fn exact_piece(g: &Graph, piece: &[usize]) -> Assign {
    let (sub, _) = g.induced_subgraph(piece).expect("piece ids are valid");
    let opts = SolveOptions {
        node_limit: Some(PIECE_NODE_LIMIT),
        ..Default::default()
    };
    let res = gamma_dr(&sub, &opts).expect("piece is non-empty");
    piece
        .iter()
        .zip(res.witness.values())
        .map(|(&v, &x)| (v, x))
        .collect()
}

fn zip_values(verts: &[usize], values: &[u8]) -> Assign {
    verts.iter().copied().zip(values.iter().copied()).collect()
}

/// Vertices of a cycle component in cyclic order.
fn cycle_order(g: &Graph, start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start)[0];
    while cur != start {
        out.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    out
}

fn path_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let start = (0..n).find(|&v| g.degree(v) <= 1).unwrap_or(0);
    let mut out = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = g.neighbors(cur).iter().copied().find(|&w| w != prev) {
        out.push(next);
        prev = cur;
        cur = next;
    }
    out
}

/// R1: closed forms for connected graphs of maximum degree at most 2.
pub(crate) fn r1(g: &Graph) -> Option<Action> {
    if g.max_degree() > 2 || !g.is_connected() {
        return None;
    }
    let n = g.order();
    let (order, lab, note) = if g.is_cycle() {
        let order = cycle_order(g, 0);
        (order, closed_form_cycle(n).ok()?.1, format!("cycle C{n}"))
    } else {
        (path_order(g), closed_form_path(n).ok()?.1, format!("path P{n}"))
    };
    let mut values = vec![0; n];
    for (&v, &x) in order.iter().zip(lab.values()) {
        values[v] = x;
    }
    Some(Action::Leaf { note, values })
}

/// A maximal path seen from one of its attachments.
#[derive(Clone, Debug)]
struct Incident {
    /// Starts at the vertex adjacent to the attachment.
    verts: Vec<usize>,
    far: usize,
}

#[derive(Clone, Debug)]
struct PendantCycle {
    a: usize,
    /// Cycle minus `a`; both ends are adjacent to `a`.
    path: Vec<usize>,
    stem: usize,
}

impl PendantCycle {
    fn m(&self) -> usize {
        self.path.len() + 1
    }

    fn vertices(&self) -> Vec<usize> {
        let mut v = vec![self.a];
        v.extend(&self.path);
        v
    }
}

pub(crate) struct Ctx<'a> {
    pub g: &'a Graph,
    pub d: Decomposition,
    path_of: Vec<Option<usize>>,
    pub piece_cap: usize,
}

fn tadpole_excluded(m: usize, k: usize) -> bool {
    (matches!(m, 5 | 7) && matches!(k, 2 | 3 | 5)) || (m == 7 && k == 3)
}

impl<'a> Ctx<'a> {
    pub fn new(g: &'a Graph, piece_cap: usize) -> Self {
        let d = decompose(g);
        let path_of = d.path_index(g.order());
        Self {
            g,
            d,
            path_of,
            piece_cap,
        }
    }

    fn deg(&self, v: usize) -> usize {
        self.g.degree(v)
    }

    fn incident(&self, u: usize) -> Vec<Incident> {
        let mut seen = Vec::new();
        let mut out = Vec::new();
        for &w in self.g.neighbors(u) {
            let Some(pi) = self.path_of[w] else { continue };
            if seen.contains(&pi) {
                continue;
            }
            seen.push(pi);
            let p = &self.d.maximal_paths[pi].vertices;
            let mut verts = p.clone();
            if verts[0] != w {
                verts.reverse();
            }
            let last = *verts.last().unwrap();
            let before = if verts.len() >= 2 { verts[verts.len() - 2] } else { u };
            let far = if verts.len() == 1 {
                self.g.neighbors(w).iter().copied().find(|&x| x != u).unwrap_or(u)
            } else {
                self.g
                    .neighbors(last)
                    .iter()
                    .copied()
                    .find(|&x| x != before)
                    .unwrap()
            };
            out.push(Incident { verts, far });
        }
        out
    }

    fn pendant_cycles(&self) -> Vec<PendantCycle> {
        let mut out = Vec::new();
        for p in &self.d.maximal_paths {
            if p.attachments.len() != 1 || p.len() < 2 {
                continue;
            }
            let a = p.attachments[0];
            if self.deg(a) != 3 {
                continue;
            }
            let ends = [p.vertices[0], p.vertices[p.len() - 1]];
            let stem = self
                .g
                .neighbors(a)
                .iter()
                .copied()
                .find(|w| !ends.contains(w))
                .unwrap();
            out.push(PendantCycle {
                a,
                path: p.vertices.clone(),
                stem,
            });
        }
        out.sort_by_key(|pc| pc.a);
        out
    }

    /// Maximal paths whose two ends attach to the same vertex of degree ≥ 4.
    fn identified_cycles(&self) -> Vec<(usize, Vec<usize>)> {
        self.d
            .maximal_paths
            .iter()
            .filter(|p| p.attachments.len() == 1 && p.len() >= 2 && self.deg(p.attachments[0]) >= 4)
            .map(|p| (p.attachments[0], p.vertices.clone()))
            .collect()
    }

    /// Walks degree-2 vertices starting at `start` (coming from `from`).
    /// Returns the walked vertices (including a final leaf) and the first
    /// vertex of degree ≥ 3 reached, if any.
    fn chain(&self, from: usize, start: usize) -> (Vec<usize>, Option<usize>) {
        let mut out = Vec::new();
        let (mut prev, mut cur) = (from, start);
        loop {
            let d = self.deg(cur);
            if d >= 3 {
                return (out, Some(cur));
            }
            out.push(cur);
            if d <= 1 {
                return (out, None);
            }
            let next = self.g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            if cur == start {
                return (out, None);
            }
        }
    }

    fn small(&self, piece: &[usize]) -> bool {
        piece.len() <= self.piece_cap
    }

    /// Every maximal path joins two distinct, non-adjacent high-degree
    /// vertices and has 1, 2, 4, 6, 8 or 10 vertices: the graph is a
    /// subdivided loopless multigraph with every path between two attachments.
    fn subdivided_multigraph(&self) -> bool {
        let d = &self.d;
        if !d.pendant_paths.is_empty() || !d.floating_cycles.is_empty() || d.high_degree.len() < 2 {
            return false;
        }
        if d
            .maximal_paths
            .iter()
            .any(|p| p.attachments.len() != 2 || !matches!(p.len(), 1 | 2 | 4 | 6 | 8 | 10))
        {
            return false;
        }
        d.high_degree
            .iter()
            .all(|&u| self.g.neighbors(u).iter().all(|&w| self.deg(w) <= 2))
    }

    fn high_by_degree(&self) -> Vec<usize> {
        let mut a = self.d.high_degree.clone();
        a.sort_by_key(|&v| (std::cmp::Reverse(self.deg(v)), v));
        a
    }
}

fn peel(note: String, piece: Vec<usize>, candidates: Vec<Assign>) -> Reduce {
    Reduce {
        note,
        matched: piece.clone(),
        removed: piece,
        candidates,
        ..Default::default()
    }
}

/// R2: pendant cycles of admissible length, then hub structures.
pub(crate) fn r2(ctx: &Ctx) -> Option<Action> {
    for pc in ctx.pendant_cycles() {
        let m = pc.m();
        if matches!(m, 5 | 7) || ctx.deg(pc.stem) < 3 {
            continue;
        }
        let cyc = pc.vertices();
        let cand = zip_values(&cyc, closed_form_cycle(m).ok()?.1.values());
        return Some(Action::Reduce(peel(format!("pendant C{m}"), cyc, vec![cand])));
    }
    hub(ctx).map(Action::Reduce)
}

struct Piece {
    verts: Vec<usize>,
    fixed: Assign,
    segment: Option<Vec<usize>>,
    bad: bool,
}

/// A vertex z carrying at least two pendant pieces (cycles hung by an edge,
/// tadpoles hung by their tail, cycles through z), one of which cannot be
/// detached on its own within the bound.
fn hub(ctx: &Ctx) -> Option<Reduce> {
    let mut pieces: BTreeMap<usize, Vec<Piece>> = BTreeMap::new();
    for pc in ctx.pendant_cycles() {
        let m = pc.m();
        if ctx.deg(pc.stem) >= 3 {
            let verts = pc.vertices();
            let fixed = zip_values(&verts, closed_form_cycle(m).ok()?.1.values());
            pieces.entry(pc.stem).or_default().push(Piece {
                verts,
                fixed,
                segment: None,
                bad: matches!(m, 5 | 7),
            });
        } else {
            let (chain, end) = ctx.chain(pc.a, pc.stem);
            let Some(z) = end else { continue };
            if z == pc.a {
                continue;
            }
            let k = chain.len();
            // Hamiltonian path x_2..x_m, x_1, y_1..y_k
            let mut ham = pc.path.clone();
            ham.push(pc.a);
            ham.extend(&chain);
            let fixed = zip_values(&ham, closed_form_path(ham.len()).ok()?.1.values());
            pieces.entry(z).or_default().push(Piece {
                verts: ham,
                fixed,
                segment: None,
                bad: tadpole_excluded(m, k),
            });
        }
    }
    for (z, path) in ctx.identified_cycles() {
        let m = path.len() + 1;
        pieces.entry(z).or_default().push(Piece {
            verts: path.clone(),
            fixed: Vec::new(),
            segment: Some(path),
            bad: matches!(m, 5 | 7),
        });
    }
    for (z, list) in pieces {
        if list.len() < 2 || !list.iter().any(|p| p.bad) {
            continue;
        }
        let mut piece = vec![z];
        let mut fixed = vec![(z, 3)];
        let mut segments = Vec::new();
        for p in &list {
            piece.extend(&p.verts);
            fixed.extend(&p.fixed);
            if let Some(s) = &p.segment {
                segments.push(s.clone());
            }
        }
        let candidates = if ctx.small(&piece) {
            vec![exact_piece(ctx.g, &piece)]
        } else {
            Vec::new()
        };
        return Some(Reduce {
            note: format!("hub with {} pieces", list.len()),
            matched: piece.clone(),
            removed: piece,
            candidates,
            fixed,
            segments,
            ..Default::default()
        });
    }
    None
}

/// R3: a pendant tadpole C_{m,k}, or the whole graph when it is a tadpole.
pub(crate) fn r3(ctx: &Ctx) -> Option<Action> {
    for pc in ctx.pendant_cycles() {
        if ctx.deg(pc.stem) != 2 {
            continue;
        }
        let m = pc.m();
        let (chain, end) = ctx.chain(pc.a, pc.stem);
        if end == Some(pc.a) {
            continue;
        }
        let k = chain.len();
        if end.is_some() && tadpole_excluded(m, k) {
            continue;
        }
        let mut ham = pc.path.clone();
        ham.push(pc.a);
        ham.extend(&chain);
        let mut candidates = Vec::new();
        if ctx.small(&ham) {
            candidates.push(exact_piece(ctx.g, &ham));
        }
        candidates.push(zip_values(&ham, closed_form_path(ham.len()).ok()?.1.values()));
        let cyc = pc.vertices();
        let fixed = zip_values(&cyc, closed_form_cycle(m).ok()?.1.values());
        let what = if end.is_some() { "pendant" } else { "whole graph" };
        return Some(Action::Reduce(Reduce {
            note: format!("{what} tadpole C{m},{k}"),
            matched: ham.clone(),
            removed: ham,
            candidates,
            fixed,
            segments: vec![chain],
            ..Default::default()
        }));
    }
    None
}

/// R4: a C_5 hung on the attachment vertex of a pendant C_{5,k}.
pub(crate) fn r4(ctx: &Ctx) -> Option<Action> {
    let identified = ctx.identified_cycles();
    for pc in ctx.pendant_cycles() {
        let b = pc.stem;
        if pc.m() != 5 || ctx.deg(b) != 4 {
            continue;
        }
        let Some((_, c5)) = identified.iter().find(|(z, p)| *z == b && p.len() == 4) else {
            continue;
        };
        let ends = [c5[0], c5[3], pc.a];
        let Some(y1) = ctx.g.neighbors(b).iter().copied().find(|w| !ends.contains(w)) else {
            continue;
        };
        if ctx.deg(y1) != 2 {
            continue;
        }
        let (chain, _end) = ctx.chain(b, y1);
        let mut q = pc.vertices();
        q.push(b);
        q.extend(c5);
        let fixed = exact_piece(ctx.g, &q);
        let mut piece = q;
        piece.extend(&chain);
        let candidates = if ctx.small(&piece) {
            vec![exact_piece(ctx.g, &piece)]
        } else {
            Vec::new()
        };
        return Some(Action::Reduce(Reduce {
            note: format!("C5 and C5,{}", chain.len()),
            matched: piece.clone(),
            removed: piece,
            candidates,
            fixed,
            segments: vec![chain],
            ..Default::default()
        }));
    }
    None
}

/// R5: contract an odd maximal path x_1..x_{2k+1} (k ≤ 4) to its middle
/// vertex, joined to both attachments.
pub(crate) fn r5(ctx: &Ctx) -> Option<Action> {
    for p in &ctx.d.maximal_paths {
        let l = p.len();
        if p.attachments.len() != 2 || !matches!(l, 3 | 5 | 7 | 9) {
            continue;
        }
        let a1 = p.end_attachment(ctx.g, true);
        let a2 = p.end_attachment(ctx.g, false);
        let mid = p.vertices[l / 2];
        let removed: Vec<usize> = p.vertices.iter().copied().filter(|&v| v != mid).collect();
        let cand: Assign = p
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, if i % 2 == 1 { 2 } else { 0 }))
            .collect();
        let mut matched = vec![a1];
        matched.extend(&p.vertices);
        matched.push(a2);
        return Some(Action::Reduce(Reduce {
            note: format!("odd path P{l}"),
            matched,
            removed,
            added: vec![(a1, mid), (a2, mid)],
            candidates: vec![cand],
            segments: vec![p.vertices.clone()],
            ..Default::default()
        }));
    }
    None
}

/// R6: two high-degree vertices, every maximal path joins them.
pub(crate) fn r6(ctx: &Ctx) -> Option<Action> {
    let d = &ctx.d;
    if d.high_degree.len() != 2 || !d.pendant_paths.is_empty() || !d.floating_cycles.is_empty() {
        return None;
    }
    if d.maximal_paths.iter().any(|p| p.attachments.len() != 2) {
        return None;
    }
    let g = ctx.g;
    let mut values = vec![0u8; g.order()];
    for &a in &d.high_degree {
        values[a] = 3;
    }
    let mut rest = Vec::new();
    for p in &d.maximal_paths {
        // 1-based positions of 3s (and one 2) along the path
        let (threes, two): (&[usize], Option<usize>) = match p.len() {
            1 | 2 => (&[], None),
            4 => (&[2], None),
            6 => (&[3], Some(5)),
            8 => (&[3, 6], None),
            10 => (&[3, 6, 9], None),
            _ => {
                rest.push(p.vertices.clone());
                continue;
            }
        };
        for &i in threes {
            values[p.vertices[i - 1]] = 3;
        }
        if let Some(i) = two {
            values[p.vertices[i - 1]] = 2;
        }
    }
    for seg in &rest {
        if !super::pathfill::fill_segment(g, &mut values, seg) {
            return None;
        }
    }
    if (0..g.order()).any(|v| !vertex_ok(g, &values, v)) {
        return None;
    }
    Some(Action::Leaf {
        note: format!("two high-degree vertices, {} paths", d.maximal_paths.len()),
        values,
    })
}

fn fan_edges(g: &Graph, u: usize, skip: &[usize], target: usize) -> Vec<(usize, usize)> {
    g.neighbors(u)
        .iter()
        .copied()
        .filter(|z| !skip.contains(z) && *z != target)
        .map(|z| (target, z))
        .collect()
}

/// R7: path rewrites around a high-degree vertex of maximum degree in a
/// subdivided multigraph, and the final direct pattern.
pub(crate) fn r7(ctx: &Ctx) -> Option<Action> {
    if !ctx.subdivided_multigraph() || ctx.d.high_degree.len() < 3 {
        return None;
    }
    let g = ctx.g;
    for u in ctx.high_by_degree() {
        let inc = ctx.incident(u);
        let of_len = |l: usize| inc.iter().filter(move |p| p.verts.len() == l);
        let p2: Vec<&Incident> = of_len(2).collect();
        let p4: Vec<&Incident> = of_len(4).collect();
        let matched = |ps: &[&Incident]| {
            let mut m = vec![u];
            for p in ps {
                m.extend(&p.verts);
            }
            m
        };
        // Case 1: a 2-path and a 4-path at u.
        if let (Some(x), Some(y)) = (p2.first(), p4.first()) {
            let (y1, y2, y3) = (y.verts[0], y.verts[1], y.verts[2]);
            return Some(Action::Reduce(Reduce {
                note: "case 1".into(),
                matched: matched(&[x, y]),
                removed: vec![u, y1, y2],
                added: fan_edges(g, u, &[y1], y3),
                candidates: vec![vec![(u, 3), (y1, 0), (y2, 0)]],
                fixed: vec![(u, 3)],
                segments: vec![vec![y1, y2]],
                ..Default::default()
            }));
        }
        // Case 2: two 2-paths at u.
        if p2.len() >= 2 {
            let (x, y) = (p2[0], p2[1]);
            let (x1, x2, y1, y2) = (x.verts[0], x.verts[1], y.verts[0], y.verts[1]);
            let (a, b) = (x.far, y.far);
            if a != b {
                let mut added = vec![(x2, y2)];
                for &z in g.neighbors(u) {
                    if z == x1 || z == y1 {
                        continue;
                    }
                    if z != a && !g.has_edge(z, a) {
                        added.push((z, a));
                    } else if z != b && !g.has_edge(z, b) {
                        added.push((z, b));
                    }
                }
                return Some(Action::Reduce(Reduce {
                    note: "case 2, distinct ends".into(),
                    matched: matched(&[x, y]),
                    removed: vec![x1, u, y1],
                    added,
                    candidates: vec![vec![(u, 3), (x1, 0), (y1, 0)]],
                    fixed: vec![(u, 3)],
                    segments: vec![vec![x1], vec![y1]],
                    ..Default::default()
                }));
            }
            return Some(Action::Reduce(Reduce {
                note: "case 2, common end".into(),
                matched: matched(&[x, y]),
                removed: vec![x2],
                added: vec![(x1, a)],
                candidates: vec![vec![(x2, 0)]],
                segments: vec![vec![x2]],
                ..Default::default()
            }));
        }
        // Case 3: a path on 6, 8 or 10 vertices.
        if let Some(p) = inc.iter().find(|p| matches!(p.verts.len(), 6 | 8 | 10)) {
            let l = p.verts.len();
            let (xa, xb, xc) = (p.verts[l - 3], p.verts[l - 2], p.verts[l - 1]);
            return Some(Action::Reduce(Reduce {
                note: format!("case 3, P{l}"),
                matched: matched(&[p]),
                removed: vec![xb, xc],
                added: vec![(xa, p.far)],
                candidates: vec![vec![(xb, 2), (xc, 0)]],
                segments: vec![vec![xb, xc]],
                ..Default::default()
            }));
        }
        // Case 4: two 4-paths, no 2-path.
        if p4.len() >= 2 && p2.is_empty() {
            let (x, y) = (p4[0], p4[1]);
            let (y1, y2, y3, y4) = (y.verts[0], y.verts[1], y.verts[2], y.verts[3]);
            let x3 = x.verts[2];
            let same_end = x.far == y.far;
            let added = if same_end && g.degree(u) == 3 {
                vec![(x3, u)]
            } else if !same_end && g.degree(u) >= 4 {
                vec![(x3, y4)]
            } else {
                Vec::new()
            };
            if !added.is_empty() {
                return Some(Action::Reduce(Reduce {
                    note: if same_end { "case 4.1" } else { "case 4.2" }.into(),
                    matched: matched(&[x, y]),
                    removed: vec![y1, y2, y3],
                    added,
                    candidates: vec![
                        vec![(y3, 3), (y1, 0), (y2, 0)],
                        vec![(y2, 3), (y1, 0), (y3, 0)],
                    ],
                    segments: vec![vec![y1, y2, y3]],
                    ..Default::default()
                }));
            }
        }
        // Case 5: one 4-path, every other neighbor on a 1-path.
        if p4.len() == 1 && inc.len() == g.degree(u) && inc.iter().all(|p| matches!(p.verts.len(), 1 | 4)) {
            let x = p4[0];
            let (x1, x2) = (x.verts[0], x.verts[1]);
            return Some(Action::Reduce(Reduce {
                note: "case 5".into(),
                matched: matched(&[x]),
                removed: vec![u, x1],
                added: fan_edges(g, u, &[x1], x2),
                candidates: vec![vec![(u, 2), (x1, 0)]],
                fixed: vec![(u, 2)],
                segments: vec![vec![x1]],
                ..Default::default()
            }));
        }
    }
    // Only 1- and 2-paths, each high-degree vertex on at most one 2-path.
    let d = &ctx.d;
    if d.maximal_paths.iter().any(|p| p.len() > 2) {
        return None;
    }
    let mut on_p2 = vec![0usize; g.order()];
    for p in d.maximal_paths.iter().filter(|p| p.len() == 2) {
        for &a in &p.attachments {
            on_p2[a] += 1;
        }
    }
    if d.high_degree.iter().any(|&a| on_p2[a] > 1) {
        return None;
    }
    let mut values = vec![0u8; g.order()];
    for &a in &d.high_degree {
        values[a] = if on_p2[a] == 1 { 3 } else { 2 };
    }
    if (0..g.order()).any(|v| !vertex_ok(g, &values, v)) {
        return None;
    }
    Some(Action::Leaf {
        note: "direct pattern on 1- and 2-paths".into(),
        values,
    })
}

/// R8: a degree-3 vertex with two 4-paths and either a third 4-path or a
/// 1-path.
pub(crate) fn r8(ctx: &Ctx) -> Option<Action> {
    if !ctx.subdivided_multigraph() {
        return None;
    }
    let g = ctx.g;
    for u in ctx.high_by_degree() {
        if g.degree(u) != 3 {
            continue;
        }
        let inc = ctx.incident(u);
        if inc.len() != 3 {
            continue;
        }
        let p4: Vec<&Incident> = inc.iter().filter(|p| p.verts.len() == 4).collect();
        if p4.len() < 2 {
            continue;
        }
        let (x, y) = (p4[0], p4[1]);
        if p4.len() == 3 {
            let z = p4[2];
            let mut piece = vec![u];
            let mut cand = vec![(u, 3)];
            for p in [x, y, z] {
                piece.extend(&p.verts);
                cand.extend(p.verts.iter().enumerate().map(|(i, &v)| (v, if i == 2 { 3 } else { 0 })));
            }
            return Some(Action::Reduce(peel("three 4-paths".into(), piece, vec![cand])));
        }
        let Some(zp) = inc.iter().find(|p| p.verts.len() == 1) else { continue };
        let (z, c) = (zp.verts[0], zp.far);
        if c != x.far && c != y.far {
            let mut piece = vec![u, z];
            let mut cand = vec![(u, 3), (z, 0)];
            for p in [x, y] {
                piece.extend(&p.verts);
                cand.extend(p.verts.iter().enumerate().map(|(i, &v)| (v, if i == 2 { 3 } else { 0 })));
            }
            return Some(Action::Reduce(peel("two 4-paths and a 1-path".into(), piece, vec![cand])));
        }
        // The 1-path ends on the far end of one of the 4-paths.
        let u2 = c;
        let other = ctx.incident(u2).into_iter().find(|p| {
            p.verts.len() == 4 && !x.verts.contains(&p.verts[0]) && !y.verts.contains(&p.verts[0])
        });
        let Some(other) = other else { continue };
        let mut piece = vec![u, u2, z];
        for p in [x, y, &other] {
            piece.extend(&p.verts);
        }
        let piece: Vec<usize> = piece.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if !ctx.small(&piece) {
            continue;
        }
        let cand = exact_piece(g, &piece);
        return Some(Action::Reduce(peel("two 4-paths, 1-path closing a 4-path".into(), piece, vec![cand])));
    }
    None
}

/// 1-based index pattern helpers for the pendant-C_5 cases.
fn along(p: &[usize], f: impl Fn(usize) -> u8) -> Assign {
    p.iter().enumerate().map(|(i, &v)| (v, f(i + 1))).collect()
}

/// R9: pendant C_5 and C_7 cases, cycles through a vertex of degree ≥ 4,
/// and deletion of edges between high-degree vertices.
pub(crate) fn r9(ctx: &Ctx) -> Option<Action> {
    if let Some(r) = redundant_edges(ctx) {
        return Some(Action::Reduce(r));
    }
    let g = ctx.g;
    for pc in ctx.pendant_cycles() {
        let (a, b) = (pc.a, pc.stem);
        let x = &pc.path;
        if x.len() == 6 {
            let (x1, x2, x3) = (x[0], x[1], x[2]);
            return Some(Action::Reduce(Reduce {
                note: "case 7, pendant C7".into(),
                matched: pc.vertices(),
                removed: vec![x1, x2],
                added: vec![(a, x3)],
                candidates: vec![vec![(x1, 0), (x2, 2)], vec![(x1, 2), (x2, 0)]],
                segments: vec![vec![x1, x2]],
                ..Default::default()
            }));
        }
        if x.len() != 4 {
            continue;
        }
        let (x1, x4) = (x[0], x[3]);
        if g.degree(b) >= 3 {
            let inc = ctx.incident(b);
            // Case 1: a path whose order is a multiple of 3.
            if let Some(p) = inc.iter().find(|p| p.verts.len() % 3 == 0) {
                let cand = zip_values(&p.verts, closed_form_path(p.verts.len()).ok()?.1.values());
                let mut r = peel(format!("case 1, P{}", p.verts.len()), p.verts.clone(), vec![cand]);
                r.segments = vec![p.verts.clone()];
                return Some(Action::Reduce(r));
            }
            // Case 2: two paths from b to a common vertex c.
            for i in 0..inc.len() {
                for j in i + 1..inc.len() {
                    let (p1, p2) = (&inc[i], &inc[j]);
                    if p1.far != p2.far || p1.far == b {
                        continue;
                    }
                    return Some(Action::Reduce(case2(g, &pc, p1, p2)));
                }
            }
            // Case 3: several paths at b, detached together with the C_5.
            if inc.len() >= 2 && inc.len() + 1 == g.degree(b) {
                let mut piece = pc.vertices();
                piece.push(b);
                for p in &inc {
                    piece.extend(&p.verts);
                }
                if piece.len() >= 11 && ctx.small(&piece) && piece.len() < g.order() {
                    let cand = exact_piece(g, &piece);
                    return Some(Action::Reduce(peel("case 3".into(), piece, vec![cand])));
                }
            }
            continue;
        }
        // b lies on a maximal path y_1..y_t with y_t = b.
        let Some(pi) = ctx.path_of[b] else { continue };
        let p = &ctx.d.maximal_paths[pi];
        if p.attachments.len() != 2 {
            continue;
        }
        let mut y = p.vertices.clone();
        if y[0] == b {
            y.reverse();
        }
        let t = y.len();
        let (removed, hinge, cands, note) = match t {
            2 => (
                vec![y[0], y[1], a],
                None,
                vec![
                    vec![(a, 3), (y[1], 0), (x1, 0), (y[0], 2)],
                    vec![(a, 3), (y[0], 0), (y[1], 0)],
                ],
                "case 4",
            ),
            3 => (
                vec![y[1], y[2], a],
                Some(y[0]),
                vec![
                    vec![(a, 3), (y[2], 0), (x1, 0), (y[1], 2)],
                    vec![(a, 3), (y[1], 0), (y[2], 0)],
                ],
                "case 5",
            ),
            5 => (
                vec![y[3], y[4], a],
                Some(y[2]),
                vec![
                    vec![(a, 3), (y[3], 2), (y[4], 0), (x1, 0)],
                    vec![(a, 3), (y[3], 0), (y[4], 0)],
                ],
                "case 6",
            ),
            _ => continue,
        };
        let hinge = hinge.unwrap_or_else(|| {
            // t = 2: the attachment u of y_1
            g.neighbors(y[0]).iter().copied().find(|&w| w != y[1]).unwrap()
        });
        let seg: Vec<usize> = removed.iter().copied().filter(|&v| v != a).collect();
        let mut matched = pc.vertices();
        matched.extend(&y);
        return Some(Action::Reduce(Reduce {
            note: note.into(),
            matched,
            removed,
            added: vec![(hinge, x1), (hinge, x4)],
            candidates: cands,
            fixed: vec![(a, 3)],
            segments: vec![seg],
            ..Default::default()
        }));
    }
    // Cycles sharing a vertex z of degree ≥ 4 with the rest.
    if let Some((z, path)) = ctx.identified_cycles().into_iter().next() {
        let r = path.len();
        let m = r + 1;
        let mut candidates = Vec::new();
        if matches!(m, 3 | 6 | 8 | 9 | 11) {
            let cand = if r % 2 == 0 {
                along(&path, |i| if i % 2 == 0 { 2 } else { 0 })
            } else {
                along(&path, |i| {
                    if i == r - 1 {
                        3
                    } else if i % 2 == 0 && i < r - 1 {
                        2
                    } else {
                        0
                    }
                })
            };
            candidates.push(cand);
        } else {
            candidates.push(zip_values(&path, closed_form_path(r).ok()?.1.values()));
        }
        let mut red = peel(format!("cycle C{m} through a vertex of degree {}", g.degree(z)), path.clone(), candidates);
        red.matched.insert(0, z);
        red.segments = vec![path];
        return Some(Action::Reduce(red));
    }
    None
}

fn case2(g: &Graph, pc: &PendantCycle, p1: &Incident, p2: &Incident) -> Reduce {
    let (a, b, c) = (pc.a, pc.stem, p1.far);
    let x = &pc.path;
    let k1 = p1.verts.len();
    let zs = |f: &dyn Fn(usize) -> u8| {
        let mut out = along(&p1.verts, f);
        out.extend(along(&p2.verts, f));
        out
    };
    let alt = |i: usize| if i % 2 == 0 { 2 } else { 0 };
    let by3 = |r: usize| move |i: usize| if i % 3 == r { 3 } else { 0 };
    // a, x_1, x_3 at 0, x_2 at 3, x_4 at 2
    let c5 = [(a, 0), (x[0], 0), (x[2], 0), (x[1], 3), (x[3], 2)];
    let c_alt = if matches!(k1 % 6, 2 | 4) { 0 } else { 2 };
    let mut cands = Vec::new();
    let mut c1 = zs(&alt);
    c1.extend(c5);
    c1.extend([(b, 2), (c, c_alt)]);
    cands.push(c1);
    let mut c2 = zs(&by3(0));
    c2.extend([(b, 3), (c, 3)]);
    cands.push(c2);
    let mut c3 = zs(&by3(2));
    c3.extend([(b, 0), (c, 3)]);
    cands.push(c3);
    let mut c4 = zs(&by3(2));
    c4.push((b, 3));
    cands.push(c4);
    let mut c5v = zs(&alt);
    c5v.extend(c5);
    c5v.extend([(b, 2), (c, 2)]);
    cands.push(c5v);
    let mut c6 = zs(&by3(0));
    c6.push((b, 3));
    cands.push(c6);

    let mut removed = vec![b];
    removed.extend(&p1.verts);
    removed.extend(&p2.verts);
    let skip = [p1.verts[0], p2.verts[0]];
    let added = g
        .neighbors(b)
        .iter()
        .copied()
        .filter(|z| !skip.contains(z) && *z != c && !g.has_edge(*z, c))
        .map(|z| (c, z))
        .collect();
    let mut matched = pc.vertices();
    matched.extend(&removed);
    matched.push(c);
    Reduce {
        note: format!("case 2, P{} and P{}", k1, p2.verts.len()),
        matched,
        removed,
        added,
        candidates: cands,
        fixed: vec![(b, 3)],
        segments: vec![p1.verts.clone(), p2.verts.clone()],
        ..Default::default()
    }
}

/// Deletes edges joining two vertices of degree ≥ 3 while both endpoints
/// keep degree ≥ 2, provided no component isomorphic to C_5 or C_7 appears.
/// A DRDF of the sparser graph is a DRDF of the original.
fn redundant_edges(ctx: &Ctx) -> Option<Reduce> {
    let g = ctx.g;
    let mut deg = g.degrees();
    let mut batch = Vec::new();
    for (u, v) in g.edges() {
        if deg[u] >= 3 && deg[v] >= 3 {
            deg[u] -= 1;
            deg[v] -= 1;
            batch.push((u, v));
        }
    }
    if batch.is_empty() {
        return None;
    }
    let ok = |edges: &[(usize, usize)]| {
        let h = g.edit_edges(&[], edges);
        !h.components().iter().any(|c| {
            matches!(c.len(), 5 | 7) && c.iter().all(|&v| h.degree(v) == 2)
        })
    };
    let chosen = if ok(&batch) {
        batch
    } else {
        vec![batch.into_iter().find(|&e| ok(&[e]))?]
    };
    let mut matched: Vec<usize> = chosen.iter().flat_map(|&(u, v)| [u, v]).collect();
    matched.sort_unstable();
    matched.dedup();
    Some(Reduce {
        note: format!("deleted {} redundant edges", chosen.len()),
        matched,
        deleted: chosen,
        ..Default::default()
    })
}
