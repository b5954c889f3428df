//! The 12n/11 threshold, exclusion tags and membership in the hypothesis
//! class of the main bound.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::graph::{generate, FamilySpec, Graph};
use crate::labeling::{validate, Labeling, LabelingError};

/// Induced-Q search is only attempted up to this order.
pub const INDUCED_Q_CAP: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExclusionTag {
    C5Component,
    C7Component,
    InducedQ,
    QUndetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub weight: u64,
    /// The threshold 12n/11 as the exact pair (12n, 11).
    pub threshold: (u64, u64),
    pub satisfied: bool,
    pub tags: Vec<ExclusionTag>,
}

impl BoundReport {
    /// Compares the weight against `num / den` exactly.
    pub fn compare(&self, num: u64, den: u64) -> Ordering {
        (self.weight * den).cmp(&num)
    }
}

/// Compares `weight` with 12n/11 and tags the graph's exclusions.
pub fn check_bound(g: &Graph, f: &Labeling) -> Result<BoundReport, LabelingError> {
    let violations = validate(g, f)?;
    if !violations.is_empty() {
        return Err(LabelingError::Invalid(violations));
    }
    let n = g.order();
    let weight = f.weight();
    let num = 12 * n as u64;
    Ok(BoundReport {
        n,
        weight,
        threshold: (num, 11),
        satisfied: 11 * weight <= num,
        tags: exclusion_tags(g),
    })
}

pub fn exclusion_tags(g: &Graph) -> Vec<ExclusionTag> {
    let mut tags = Vec::new();
    let lens = cycle_component_orders(g);
    if lens.contains(&5) {
        tags.push(ExclusionTag::C5Component);
    }
    if lens.contains(&7) {
        tags.push(ExclusionTag::C7Component);
    }
    match contains_induced_q(g) {
        Some(true) => tags.push(ExclusionTag::InducedQ),
        Some(false) => {}
        None => tags.push(ExclusionTag::QUndetermined),
    }
    tags
}

/// Orders of the components that are cycles.
fn cycle_component_orders(g: &Graph) -> Vec<usize> {
    g.components()
        .into_iter()
        .filter(|c| c.len() >= 3 && c.iter().all(|&v| g.degree(v) == 2))
        .map(|c| c.len())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExclusionReason {
    OrderBelowFive,
    MinDegreeBelowTwo,
    C5Component,
    C7Component,
    /// The graph is Q itself.
    IsQ,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    InE,
    Excluded(ExclusionReason),
    Unknown(String),
}

/// Decides membership in the hypothesis class of the 12n/11 bound where
/// possible. Graphs containing an induced Q (other than Q itself) may still
/// belong through the residual clauses, so they are reported as unknown.
pub fn membership_e(g: &Graph) -> Membership {
    let n = g.order();
    if n < 5 {
        return Membership::Excluded(ExclusionReason::OrderBelowFive);
    }
    if g.min_degree() < 2 {
        return Membership::Excluded(ExclusionReason::MinDegreeBelowTwo);
    }
    let lens = cycle_component_orders(g);
    if lens.contains(&5) {
        return Membership::Excluded(ExclusionReason::C5Component);
    }
    if lens.contains(&7) {
        return Membership::Excluded(ExclusionReason::C7Component);
    }
    match contains_induced_q(g) {
        Some(false) => Membership::InE,
        Some(true) if n == 10 && g.edge_count() == 11 => Membership::Excluded(ExclusionReason::IsQ),
        Some(true) => Membership::Unknown("induced Q present".into()),
        None => Membership::Unknown(format!("induced-Q search skipped above {INDUCED_Q_CAP} vertices")),
    }
}

/// Whether `g` has an induced subgraph isomorphic to Q (two C_5 joined by an
/// edge). `None` above [`INDUCED_Q_CAP`] vertices.
pub fn contains_induced_q(g: &Graph) -> Option<bool> {
    if g.order() > INDUCED_Q_CAP {
        return None;
    }
    if g.order() < 10 || g.max_degree() < 3 {
        return Some(false);
    }
    let q = generate(&FamilySpec::QGraph).expect("fixed family");
    // Pattern vertices in BFS order so each has an earlier neighbor.
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in q.neighbors(v) {
            if !order.contains(&w) {
                order.push(w);
                parent.push(v);
            }
        }
        i += 1;
    }
    let mut image = vec![usize::MAX; q.order()];
    let mut used = vec![false; g.order()];
    Some(extend_q(g, &q, &order, &parent, 0, &mut image, &mut used))
}

fn extend_q(
    g: &Graph,
    q: &Graph,
    order: &[usize],
    parent: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let pool: Vec<usize> = if depth == 0 {
        (0..g.order()).collect()
    } else {
        g.neighbors(image[parent[depth]]).to_vec()
    };
    for v in pool {
        if used[v] || g.degree(v) < q.degree(p) {
            continue;
        }
        let fits = order[..depth]
            .iter()
            .all(|&r| q.has_edge(p, r) == g.has_edge(v, image[r]));
        if !fits {
            continue;
        }
        image[p] = v;
        used[v] = true;
        if extend_q(g, q, order, parent, depth + 1, image, used) {
            return true;
        }
        used[v] = false;
    }
    image[p] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::closed_form_cycle;
    use crate::solver::{gamma_dr, SolveOptions};

    #[test]
    fn c11_meets_threshold() {
        let g = generate(&FamilySpec::Cycle(11)).unwrap();
        let (w, f) = closed_form_cycle(11).unwrap();
        assert_eq!(w, 12);
        let r = check_bound(&g, &f).unwrap();
        assert!(r.satisfied);
        assert_eq!(r.threshold, (132, 11));
        assert_eq!(r.compare(132, 11), Ordering::Equal);
    }

    #[test]
    fn c5_violates_with_tag() {
        let g = generate(&FamilySpec::Cycle(5)).unwrap();
        let f = gamma_dr(&g, &SolveOptions::default()).unwrap().witness;
        let r = check_bound(&g, &f).unwrap();
        assert_eq!(r.weight, 6);
        assert!(!r.satisfied);
        assert_eq!(r.tags, vec![ExclusionTag::C5Component]);
    }

    #[test]
    fn q_report() {
        let g = generate(&FamilySpec::QGraph).unwrap();
        let f = gamma_dr(&g, &SolveOptions::default()).unwrap().witness;
        let r = check_bound(&g, &f).unwrap();
        assert_eq!(r.weight, 11);
        assert!(r.tags.contains(&ExclusionTag::InducedQ));
        assert_eq!(r.compare(120, 11), Ordering::Greater);
        assert_eq!(r.compare(110, 10), Ordering::Equal);
    }

    #[test]
    fn membership_examples() {
        let c7 = generate(&FamilySpec::Cycle(7)).unwrap();
        assert_eq!(membership_e(&c7), Membership::Excluded(ExclusionReason::C7Component));
        let c12 = generate(&FamilySpec::Cycle(12)).unwrap();
        assert_eq!(membership_e(&c12), Membership::InE);
        let q = generate(&FamilySpec::GQ(Graph::empty(1))).unwrap();
        assert_eq!(membership_e(&q), Membership::Excluded(ExclusionReason::IsQ));
        let p = generate(&FamilySpec::Path(6)).unwrap();
        assert_eq!(membership_e(&p), Membership::Excluded(ExclusionReason::MinDegreeBelowTwo));
    }

    #[test]
    fn induced_q_in_gq() {
        let base = generate(&FamilySpec::Path(2)).unwrap();
        let g = generate(&FamilySpec::GQ(base)).unwrap();
        assert_eq!(contains_induced_q(&g), Some(true));
        assert!(matches!(membership_e(&g), Membership::Unknown(_)));
        // A chord inside one C_5 destroys that induced copy.
        let g = generate(&FamilySpec::QGraph).unwrap().add_edge(1, 3).unwrap();
        assert_eq!(contains_induced_q(&g), Some(false));
        let big = generate(&FamilySpec::Cycle(61)).unwrap();
        assert_eq!(contains_induced_q(&big), None);
    }
}
