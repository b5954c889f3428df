//! Exact double Roman domination number by depth-first branch and bound.
//!
//! Vertices are branched in order of descending degree (ties by id) with
//! values tried in the order 3, 2, 0 (and 1 last when ones are allowed).
//! A branch is cut when its partial weight plus an admissible estimate of
//! the remaining cost reaches the incumbent.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{vertex_ok, Labeling};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("naive enumeration is capped at {cap} vertices, got {n}")]
    TooLarge { n: usize, cap: usize },
}

pub const NAIVE_CAP: usize = 12;

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// Search over {0,1,2,3} instead of {0,2,3}.
    pub allow_ones: bool,
    pub timeout: Option<Duration>,
    /// Stop after this many search nodes per component. Unlike the timeout
    /// this cutoff is deterministic. Hitting it reports a timeout status.
    pub node_limit: Option<u64>,
    /// A weight known to be achievable; only labelings of at most this
    /// weight are searched for.
    pub initial_upper: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SolveStatus {
    Optimal,
    TimeoutWithBounds { lower: u64, upper: u64 },
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    /// γ_dR when optimal, otherwise the best weight found.
    pub value: u64,
    pub witness: Labeling,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
    pub status: SolveStatus,
}

impl SolveResult {
    pub fn is_optimal(&self) -> bool {
        self.status == SolveStatus::Optimal
    }

    pub fn record(&self, g: &Graph) -> SolveRecord {
        SolveRecord {
            n: g.order(),
            m: g.edge_count(),
            gamma_dr: self.value,
            witness: self.witness.values().to_vec(),
            nodes: self.nodes_expanded,
            millis: self.elapsed.as_millis() as u64,
            status: self.status.clone(),
        }
    }
}

/// One-line serialized form of a solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveRecord {
    pub n: usize,
    pub m: usize,
    pub gamma_dr: u64,
    pub witness: Vec<u8>,
    pub nodes: u64,
    pub millis: u64,
    pub status: SolveStatus,
}

const UNSET: u8 = u8::MAX;

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    domain: &'static [u8],
    value: Vec<u8>,
    twos: Vec<u32>,
    threes: Vec<u32>,
    free: Vec<u32>,
    partial: u64,
    best: u64,
    best_values: Option<Vec<u8>>,
    nodes: u64,
    deadline: Option<Instant>,
    node_limit: u64,
    timed_out: bool,
    // scratch for the bound
    needy: Vec<bool>,
    needy_count: Vec<u32>,
}

impl<'a> Search<'a> {
    fn satisfied(&self, v: usize) -> bool {
        match self.value[v] {
            // an unassigned vertex is settled once it could take 0 for free
            0 | UNSET => self.threes[v] > 0 || self.twos[v] >= 2,
            1 => self.threes[v] + self.twos[v] > 0,
            _ => true,
        }
    }

    fn assign(&mut self, v: usize, x: u8) {
        self.value[v] = x;
        self.partial += x as u64;
        for &w in self.g.neighbors(v) {
            self.free[w] -= 1;
            match x {
                2 => self.twos[w] += 1,
                3 => self.threes[w] += 1,
                _ => {}
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let x = self.value[v];
        self.value[v] = UNSET;
        self.partial -= x as u64;
        for &w in self.g.neighbors(v) {
            self.free[w] += 1;
            match x {
                2 => self.twos[w] -= 1,
                3 => self.threes[w] -= 1,
                _ => {}
            }
        }
    }

    /// A 0/1-vertex whose neighbors are all assigned must already be satisfied.
    fn dead_after(&self, v: usize) -> bool {
        let check = |w: usize| {
            let x = self.value[w];
            (x == 0 || x == 1) && self.free[w] == 0 && !self.satisfied(w)
        };
        check(v) || self.g.neighbors(v).iter().any(|&w| check(w))
    }

    /// Lower bound on the weight still to be placed.
    ///
    /// Every unsatisfied vertex x needs help from some unassigned vertex h in
    /// N[x] that ends with value ≥ 2. Charge x a share 2 / M_x, where M_x is
    /// the largest number of unsatisfied vertices any such h can reach. A
    /// helper with value 2 or 3 absorbs at most 2 in charges, so the charge
    /// total never exceeds the remaining weight. The global form
    /// 2·⌈U / M_max⌉ is admissible for the same reason; the larger of the two
    /// is used.
    fn bound(&mut self) -> Option<u64> {
        let n = self.g.order();
        let mut unsat = 0u32;
        for v in 0..n {
            self.needy[v] = !self.satisfied(v);
            unsat += self.needy[v] as u32;
        }
        if unsat == 0 {
            return Some(0);
        }
        let mut m_max = 0;
        for h in 0..n {
            if self.value[h] != UNSET {
                continue;
            }
            let mut c = self.needy[h] as u32;
            for &w in self.g.neighbors(h) {
                c += self.needy[w] as u32;
            }
            self.needy_count[h] = c;
            m_max = m_max.max(c);
        }
        let mut share = 0f64;
        for x in 0..n {
            if !self.needy[x] {
                continue;
            }
            let mut mx = if self.value[x] == UNSET {
                self.needy_count[x]
            } else {
                0
            };
            for &h in self.g.neighbors(x) {
                if self.value[h] == UNSET {
                    mx = mx.max(self.needy_count[h]);
                }
            }
            if mx == 0 {
                return None;
            }
            share += 2.0 / mx as f64;
        }
        let local = (share - 1e-9).ceil() as u64;
        let global = 2 * unsat.div_ceil(m_max) as u64;
        Some(local.max(global))
    }

    fn run(&mut self, depth: usize) {
        self.nodes += 1;
        if self.nodes >= self.node_limit {
            self.timed_out = true;
        }
        if self.nodes & 1023 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return;
        }
        let Some(lb) = self.bound() else { return };
        if self.partial + lb >= self.best {
            return;
        }
        if depth == self.order.len() {
            // bound() returned 0, so every vertex is satisfied.
            self.best = self.partial;
            self.best_values = Some(self.value.clone());
            return;
        }
        let v = self.order[depth];
        for &x in self.domain {
            if self.partial + x as u64 >= self.best {
                continue;
            }
            self.assign(v, x);
            if !self.dead_after(v) {
                self.run(depth + 1);
            }
            self.unassign(v);
            if self.timed_out {
                return;
            }
        }
    }
}

/// Greedy DRDF: repeatedly put 3 on the vertex reaching the most unsatisfied
/// vertices, then lower each 3 to 2 or 0 where the result stays valid.
pub fn greedy_drdf(g: &Graph) -> Labeling {
    let n = g.order();
    let mut values = vec![0u8; n];
    let mut covered = vec![false; n];
    let mut remaining = n;
    while remaining > 0 {
        let mut best = (0usize, usize::MAX);
        for v in 0..n {
            if values[v] == 3 {
                continue;
            }
            let gain = !covered[v] as usize
                + g.neighbors(v).iter().filter(|&&w| !covered[w]).count();
            if gain > best.0 {
                best = (gain, v);
            }
        }
        let v = best.1;
        values[v] = 3;
        for w in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if !covered[w] {
                covered[w] = true;
                remaining -= 1;
            }
        }
    }
    for v in 0..n {
        if values[v] != 3 {
            continue;
        }
        for lower in [0u8, 2] {
            values[v] = lower;
            if vertex_ok(g, &values, v) && g.neighbors(v).iter().all(|&w| vertex_ok(g, &values, w))
            {
                break;
            }
            values[v] = 3;
        }
    }
    Labeling::new(values).expect("values are in range")
}

fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    order
}

fn solve_connected(
    g: &Graph,
    opts: &SolveOptions,
    deadline: Option<Instant>,
    nodes: &mut u64,
) -> (u64, Vec<u8>, Option<u64>) {
    let n = g.order();
    let seed = greedy_drdf(g);
    let domain: &'static [u8] = if opts.allow_ones {
        &[3, 2, 1, 0]
    } else {
        &[3, 2, 0]
    };
    let mut s = Search {
        g,
        order: branching_order(g),
        domain,
        value: vec![UNSET; n],
        twos: vec![0; n],
        threes: vec![0; n],
        free: g.degrees().into_iter().map(|d| d as u32).collect(),
        partial: 0,
        best: seed.weight(),
        best_values: Some(seed.values().to_vec()),
        nodes: 0,
        deadline,
        node_limit: opts.node_limit.unwrap_or(u64::MAX),
        timed_out: false,
        needy: vec![false; n],
        needy_count: vec![0; n],
    };
    if let Some(u) = opts.initial_upper {
        if u < s.best {
            s.best = u + 1;
            s.best_values = None;
        }
    }
    let root_lb = s.bound().unwrap_or(0);
    s.run(0);
    *nodes += s.nodes;
    let timed_out = s.timed_out;
    let values = match s.best_values {
        Some(v) => v,
        // initial_upper was below the optimum and nothing was found
        None if !timed_out => {
            let retry = SolveOptions {
                initial_upper: None,
                ..opts.clone()
            };
            return solve_connected(g, &retry, deadline, nodes);
        }
        None => seed.into_values(),
    };
    let weight = values.iter().map(|&x| x as u64).sum();
    let lower = if timed_out { Some(root_lb.min(weight)) } else { None };
    (weight, values, lower)
}

/// γ_dR(G) with a witness. Components are solved independently.
pub fn gamma_dr(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolverError> {
    if g.is_empty() {
        return Err(SolverError::EmptyGraph);
    }
    let start = Instant::now();
    let deadline = opts.timeout.map(|t| start + t);
    let mut values = vec![0u8; g.order()];
    let mut nodes = 0;
    let mut total = 0;
    let mut lower_total = 0;
    let mut timed_out = false;
    let components = g.components();
    let single = components.len() == 1;
    for comp in components {
        let (sub, map) = if single {
            (g.clone(), (0..g.order()).map(Some).collect())
        } else {
            g.induced_subgraph(&comp).expect("component ids are valid")
        };
        let per_comp = SolveOptions {
            initial_upper: if single { opts.initial_upper } else { None },
            ..opts.clone()
        };
        let (w, vals, lower) = solve_connected(&sub, &per_comp, deadline, &mut nodes);
        total += w;
        match lower {
            Some(l) => {
                timed_out = true;
                lower_total += l;
            }
            None => lower_total += w,
        }
        for &old in &comp {
            values[old] = vals[map[old].unwrap()];
        }
    }
    let status = if timed_out {
        SolveStatus::TimeoutWithBounds {
            lower: lower_total,
            upper: total,
        }
    } else {
        SolveStatus::Optimal
    };
    Ok(SolveResult {
        value: total,
        witness: Labeling::new(values).expect("values are in range"),
        nodes_expanded: nodes,
        elapsed: start.elapsed(),
        status,
    })
}

/// Value sets for [`gamma_dr_naive`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Full,
    NoOnes,
}

/// Minimum DRDF weight by enumerating every labeling over `domain`.
/// Independent of the branch-and-bound search; capped at 12 vertices.
pub fn gamma_dr_naive(g: &Graph, domain: Domain) -> Result<u64, SolverError> {
    let n = g.order();
    if n > NAIVE_CAP {
        return Err(SolverError::TooLarge { n, cap: NAIVE_CAP });
    }
    if n == 0 {
        return Err(SolverError::EmptyGraph);
    }
    let digits: &[u8] = match domain {
        Domain::Full => &[0, 1, 2, 3],
        Domain::NoOnes => &[0, 2, 3],
    };
    let base = digits.len() as u64;
    let total = base.pow(n as u32);
    let mut values = vec![0u8; n];
    let mut best = u64::MAX;
    for code in 0..total {
        let mut c = code;
        let mut w = 0u64;
        for slot in values.iter_mut() {
            *slot = digits[(c % base) as usize];
            w += *slot as u64;
            c /= base;
        }
        if w >= best {
            continue;
        }
        let ok = (0..n).all(|v| {
            let nb = g.neighbors(v);
            match values[v] {
                0 => {
                    nb.iter().any(|&u| values[u] == 3)
                        || nb.iter().filter(|&&u| values[u] == 2).count() >= 2
                }
                1 => nb.iter().any(|&u| values[u] >= 2),
                _ => true,
            }
        });
        if ok {
            best = w;
        }
    }
    Ok(best)
}
