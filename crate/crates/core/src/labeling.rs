//! Vertex labelings with values in {0,1,2,3} and the double Roman conditions.
//!
//! A labeling `f` is a double Roman dominating function (DRDF) when every
//! vertex labeled 0 has a neighbor labeled 3 or two neighbors labeled 2, and
//! every vertex labeled 1 has a neighbor labeled 2 or 3.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("value {value} at vertex {vertex} is outside 0..=3")]
    BadValue { vertex: usize, value: u8 },
    #[error("labeling has {got} entries but the graph has {want} vertices")]
    LengthMismatch { got: usize, want: usize },
    #[error("labeling is not a DRDF: {} violation(s), first at vertex {}", .0.len(), .0[0].vertex)]
    Invalid(Vec<Violation>),
    #[error("{0}")]
    Embedding(String),
    #[error("order {0} out of range for the closed form")]
    OrderOutOfRange(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labeling(Vec<u8>);

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Self, LabelingError> {
        if let Some((vertex, &value)) = values.iter().enumerate().find(|(_, &v)| v > 3) {
            return Err(LabelingError::BadValue { vertex, value });
        }
        Ok(Self(values))
    }

    pub fn constant(n: usize, value: u8) -> Self {
        assert!(value <= 3);
        Self(vec![value; n])
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, value: u8) {
        assert!(value <= 3);
        self.0[v] = value;
    }

    /// w_f, the sum of all values.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&v| v as u64).sum()
    }

    /// The partition (V_0, V_1, V_2, V_3).
    pub fn partition(&self) -> [Vec<usize>; 4] {
        let mut parts: [Vec<usize>; 4] = Default::default();
        for (v, &x) in self.0.iter().enumerate() {
            parts[x as usize].push(v);
        }
        parts
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ViolationKind {
    /// A 0-vertex with no 3-neighbor and fewer than two 2-neighbors.
    ZeroUncovered,
    /// A 1-vertex with no neighbor valued 2 or 3.
    OneUncovered,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: usize,
    pub kind: ViolationKind,
}

/// Whether vertex `v` satisfies its condition under `values`.
pub(crate) fn vertex_ok(g: &Graph, values: &[u8], v: usize) -> bool {
    match values[v] {
        0 => {
            let mut twos = 0;
            for &w in g.neighbors(v) {
                match values[w] {
                    3 => return true,
                    2 => twos += 1,
                    _ => {}
                }
            }
            twos >= 2
        }
        1 => g.neighbors(v).iter().any(|&w| values[w] >= 2),
        _ => true,
    }
}

/// Every violating vertex, in ascending order. Empty iff `f` is a DRDF of `g`.
pub fn validate(g: &Graph, f: &Labeling) -> Result<Vec<Violation>, LabelingError> {
    if f.len() != g.order() {
        return Err(LabelingError::LengthMismatch {
            got: f.len(),
            want: g.order(),
        });
    }
    Ok((0..g.order())
        .filter(|&v| !vertex_ok(g, &f.0, v))
        .map(|vertex| Violation {
            vertex,
            kind: if f.0[vertex] == 0 {
                ViolationKind::ZeroUncovered
            } else {
                ViolationKind::OneUncovered
            },
        })
        .collect())
}

pub fn is_drdf(g: &Graph, f: &Labeling) -> bool {
    f.len() == g.order() && (0..g.order()).all(|v| vertex_ok(g, &f.0, v))
}

pub fn weight(f: &Labeling) -> u64 {
    f.weight()
}

/// Rewrites a DRDF so that no vertex carries 1, without raising the weight.
///
/// 1-vertices are processed in ascending id. A 1-vertex with a 3-neighbor
/// drops to 0; otherwise its smallest-id 2-neighbor is raised to 3 and the
/// vertex drops to 0.
pub fn eliminate_ones(g: &Graph, f: &Labeling) -> Result<Labeling, LabelingError> {
    let violations = validate(g, f)?;
    if !violations.is_empty() {
        return Err(LabelingError::Invalid(violations));
    }
    let mut out = f.0.clone();
    for v in 0..out.len() {
        if out[v] != 1 {
            continue;
        }
        if !g.neighbors(v).iter().any(|&w| out[w] == 3) {
            let w = *g
                .neighbors(v)
                .iter()
                .find(|&&w| out[w] == 2)
                .expect("a valid 1-vertex has a neighbor valued 2 or 3");
            out[w] = 3;
        }
        out[v] = 0;
    }
    Ok(Labeling(out))
}

/// Assembles piece labelings into a labeling of `assembled`.
///
/// `embeddings[i][j]` is the assembled id of vertex `j` of piece `i`. The
/// images must partition the assembled vertex set and every piece edge must
/// survive in `assembled`, which makes the result a DRDF whenever every piece
/// labeling is one.
pub fn union_labeling(
    pieces: &[(&Graph, &Labeling)],
    assembled: &Graph,
    embeddings: &[Vec<usize>],
) -> Result<Labeling, LabelingError> {
    if pieces.len() != embeddings.len() {
        return Err(LabelingError::Embedding(format!(
            "{} pieces but {} embeddings",
            pieces.len(),
            embeddings.len()
        )));
    }
    let n = assembled.order();
    let mut out: Vec<Option<u8>> = vec![None; n];
    for (i, ((piece, lab), emb)) in pieces.iter().zip(embeddings).enumerate() {
        if lab.len() != piece.order() || emb.len() != piece.order() {
            return Err(LabelingError::Embedding(format!(
                "piece {i}: graph, labeling and embedding sizes differ"
            )));
        }
        for (j, &target) in emb.iter().enumerate() {
            if target >= n {
                return Err(LabelingError::Embedding(format!(
                    "piece {i}: vertex {j} maps outside the assembled graph"
                )));
            }
            if out[target].is_some() {
                return Err(LabelingError::Embedding(format!(
                    "assembled vertex {target} is covered by more than one piece"
                )));
            }
            out[target] = Some(lab.get(j));
        }
        if let Some((u, v)) = piece.edges().find(|&(u, v)| !assembled.has_edge(emb[u], emb[v])) {
            return Err(LabelingError::Embedding(format!(
                "piece {i}: edge {u}-{v} is missing from the assembled graph"
            )));
        }
    }
    let values = out
        .into_iter()
        .enumerate()
        .map(|(v, x)| {
            x.ok_or_else(|| {
                LabelingError::Embedding(format!("assembled vertex {v} is not covered"))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Labeling(values))
}

/// Canonical DRDF of the path P_n: 3 on every vertex with index ≡ 1 (mod 3),
/// and a 2 on the last vertex when n ≡ 1 (mod 3). Weight n when 3 | n,
/// otherwise n + 1.
pub fn closed_form_path(n: usize) -> Result<(u64, Labeling), LabelingError> {
    if n == 0 {
        return Err(LabelingError::OrderOutOfRange(n));
    }
    let mut values: Vec<u8> = (0..n).map(|i| if i % 3 == 1 { 3 } else { 0 }).collect();
    if n % 3 == 1 {
        values[n - 1] = 2;
    }
    let lab = Labeling(values);
    Ok((lab.weight(), lab))
}

/// Canonical DRDF of the cycle C_n (vertices in cyclic order).
///
/// * n ≡ 0 (mod 3): 3 on indices ≡ 0 (mod 3), weight n.
/// * n even otherwise: alternating 2, 0, weight n.
/// * n ≡ 5 (mod 6): 3 on indices ≡ 0 (mod 3), weight n + 1.
/// * n ≡ 1 (mod 6): 3 on indices ≡ 0 (mod 3) up to n − 4, then 0, 2, 0;
///   weight n + 1.
pub fn closed_form_cycle(n: usize) -> Result<(u64, Labeling), LabelingError> {
    if n < 3 {
        return Err(LabelingError::OrderOutOfRange(n));
    }
    let threes = |limit: usize| -> Vec<u8> {
        (0..n)
            .map(|i| if i % 3 == 0 && i <= limit { 3 } else { 0 })
            .collect()
    };
    let values = match (n % 3, n % 2) {
        (0, _) | (2, 1) => threes(n),
        (_, 0) => (0..n).map(|i| if i % 2 == 0 { 2 } else { 0 }).collect(),
        _ => {
            let mut v = threes(n - 4);
            v[n - 2] = 2;
            v
        }
    };
    let lab = Labeling(values);
    Ok((lab.weight(), lab))
}

pub fn parse_labeling(text: &str) -> Result<Labeling, LabelingError> {
    let err = |line: usize, message: String| LabelingError::Parse { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing order line".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| err(hl, format!("expected the order, found {header:?}")))?;
    let mut values = Vec::with_capacity(n);
    let mut last = hl;
    for (line, l) in lines {
        for tok in l.split_whitespace() {
            let v: u8 = tok
                .parse()
                .ok()
                .filter(|&v| v <= 3)
                .ok_or_else(|| err(line, format!("expected a value in 0..=3, found {tok:?}")))?;
            values.push(v);
        }
        last = line;
    }
    if values.len() != n {
        return Err(err(last, format!("expected {n} values, found {}", values.len())));
    }
    Ok(Labeling(values))
}

pub fn write_labeling(f: &Labeling) -> String {
    let mut out = String::new();
    writeln!(out, "{}", f.len()).unwrap();
    let body: Vec<String> = f.0.iter().map(u8::to_string).collect();
    writeln!(out, "{}", body.join(" ")).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn lab(v: &[u8]) -> Labeling {
        Labeling::new(v.to_vec()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        generate(&FamilySpec::Cycle(n)).unwrap()
    }

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::Path(n)).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&cycle(3), &lab(&[3, 0, 0])).unwrap().is_empty());
        assert!(validate(&cycle(4), &lab(&[2, 0, 2, 0])).unwrap().is_empty());
        let v = validate(&path(3), &lab(&[0, 2, 0])).unwrap();
        assert_eq!(
            v,
            vec![
                Violation {
                    vertex: 0,
                    kind: ViolationKind::ZeroUncovered
                },
                Violation {
                    vertex: 2,
                    kind: ViolationKind::ZeroUncovered
                }
            ]
        );
        let v = validate(&path(2), &lab(&[1, 1])).unwrap();
        assert_eq!(v.len(), 2);
        assert!(v.iter().all(|x| x.kind == ViolationKind::OneUncovered));
        assert_eq!(
            validate(&path(2), &lab(&[3])),
            Err(LabelingError::LengthMismatch { got: 1, want: 2 })
        );
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&lab(&[3, 0, 0])), 3);
        assert_eq!(weight(&Labeling::constant(11, 3)), 33);
        assert_eq!(weight(&lab(&[2, 0, 2, 0])), 4);
    }

    #[test]
    fn bad_value_rejected() {
        assert_eq!(
            Labeling::new(vec![0, 4]),
            Err(LabelingError::BadValue {
                vertex: 1,
                value: 4
            })
        );
    }

    #[test]
    fn eliminate_ones_examples() {
        let out = eliminate_ones(&path(3), &lab(&[1, 2, 1])).unwrap();
        assert_eq!(out, lab(&[0, 3, 0]));
        let out = eliminate_ones(&cycle(3), &lab(&[1, 3, 0])).unwrap();
        assert_eq!(out, lab(&[0, 3, 0]));
        let fixed = lab(&[2, 0, 2, 0]);
        assert_eq!(eliminate_ones(&cycle(4), &fixed).unwrap(), fixed);
        assert!(matches!(
            eliminate_ones(&path(3), &lab(&[0, 2, 0])),
            Err(LabelingError::Invalid(_))
        ));
    }

    #[test]
    fn union_into_gh() {
        let gh = generate(&FamilySpec::GH(Graph::empty(1))).unwrap();
        let c5 = cycle(5);
        let piece = lab(&[3, 0, 0, 3, 0]);
        // Hub 0 on its own carries 0.
        let hub = Graph::empty(1);
        let hub_lab = lab(&[0]);
        let f = union_labeling(
            &[(&hub, &hub_lab), (&c5, &piece), (&c5, &piece)],
            &gh,
            &[vec![0], vec![1, 2, 3, 4, 5], vec![6, 7, 8, 9, 10]],
        )
        .unwrap();
        assert_eq!(f.weight(), 12);
        assert!(is_drdf(&gh, &f));
    }

    #[test]
    fn union_identity_and_errors() {
        let g = cycle(3);
        let f = lab(&[3, 0, 0]);
        assert_eq!(union_labeling(&[(&g, &f)], &g, &[vec![0, 1, 2]]).unwrap(), f);
        let p = path(2);
        let pf = lab(&[3, 0]);
        assert!(matches!(
            union_labeling(&[(&p, &pf), (&p, &pf)], &cycle(3), &[vec![0, 1], vec![1, 2]]),
            Err(LabelingError::Embedding(_))
        ));
        assert!(matches!(
            union_labeling(&[(&p, &pf)], &g, &[vec![0, 1]]),
            Err(LabelingError::Embedding(_))
        ));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_path(3).unwrap(), (3, lab(&[0, 3, 0])));
        assert_eq!(closed_form_path(4).unwrap(), (5, lab(&[0, 3, 0, 2])));
        assert_eq!(closed_form_path(1).unwrap(), (2, lab(&[2])));
        assert_eq!(closed_form_cycle(11).unwrap().0, 12);
        assert_eq!(closed_form_cycle(6).unwrap(), (6, lab(&[3, 0, 0, 3, 0, 0])));
        assert_eq!(closed_form_cycle(5).unwrap(), (6, lab(&[3, 0, 0, 3, 0])));
        assert!(closed_form_cycle(2).is_err());
        assert!(closed_form_path(0).is_err());
    }

    #[test]
    fn closed_forms_validate() {
        for n in 1..200 {
            let (w, f) = closed_form_path(n).unwrap();
            assert!(is_drdf(&path(n), &f), "path {n}");
            assert_eq!(w, if n % 3 == 0 { n as u64 } else { n as u64 + 1 });
        }
        for n in 3..200 {
            let (w, f) = closed_form_cycle(n).unwrap();
            assert!(is_drdf(&cycle(n), &f), "cycle {n}");
            let extra = matches!(n % 6, 1 | 5) as u64;
            assert_eq!(w, n as u64 + extra, "cycle {n}");
        }
    }

    #[test]
    fn labeling_text_round_trip() {
        let f = lab(&[2, 0, 2, 0]);
        let text = write_labeling(&f);
        assert_eq!(text, "4\n2 0 2 0\n");
        assert_eq!(parse_labeling(&text).unwrap(), f);
        assert!(matches!(parse_labeling("3\n0 5 0\n"), Err(LabelingError::Parse { line: 2, .. })));
        assert!(matches!(parse_labeling("3\n0 0\n"), Err(LabelingError::Parse { .. })));
    }
}
