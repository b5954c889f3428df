//! Constructive DRDFs by local reduction.
//!
//! [`construct_drdf`] repeatedly matches a local configuration, recurses on a
//! smaller graph and extends the returned labeling back. Rules fire in a
//! fixed priority order:
//!
//! | id | configuration |
//! |----|---------------|
//! | R0 | disconnected graph: solve components separately |
//! | R1 | connected, Δ ≤ 2: path or cycle closed form |
//! | terminal | order ≤ `fallback_n`: exact solve |
//! | R2 | pendant cycle C_m (m ∉ {5,7}) on a vertex of degree 3; hub with several pendant pieces |
//! | R3 | pendant tadpole C_{m,k} outside the excluded pairs |
//! | R4 | C_5 joined to a C_{5,k} hanging from the rest of the graph |
//! | R5 | maximal path on 3, 5, 7 or 9 vertices between two high-degree vertices |
//! | R6 | exactly two high-degree vertices, all paths between them |
//! | R7 | subdivided-multigraph path rewrites around a maximum-degree vertex |
//! | R8 | degree-3 vertex carrying two or three 4-vertex paths |
//! | R9 | pendant C_5 / C_7 cases, identified cycles, redundant edges |
//! | R∞-bailout | nothing matched: greedy labeling of the residual graph |
//!
//! Every extension is checked locally against the parent graph; if a
//! pattern does not fit the child labeling, the engine tries the next
//! pattern, then an optimal refill of the removed paths, then raises the
//! offending vertices to 2. The result always validates.

mod bound;
mod engine;
mod pathfill;
mod rules;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use bound::{
    check_bound, contains_induced_q, exclusion_tags, membership_e, BoundReport, ExclusionReason,
    ExclusionTag, Membership, INDUCED_Q_CAP,
};
pub use engine::construct_drdf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RuleId {
    #[serde(rename = "R0")]
    R0,
    #[serde(rename = "R1")]
    R1,
    #[serde(rename = "R2")]
    R2,
    #[serde(rename = "R3")]
    R3,
    #[serde(rename = "R4")]
    R4,
    #[serde(rename = "R5")]
    R5,
    #[serde(rename = "R6")]
    R6,
    #[serde(rename = "R7")]
    R7,
    #[serde(rename = "R8")]
    R8,
    #[serde(rename = "R9")]
    R9,
    #[serde(rename = "terminal")]
    Terminal,
    #[serde(rename = "R∞-bailout")]
    Bailout,
}

impl RuleId {
    pub const ALL: [RuleId; 12] = [
        RuleId::R0,
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7,
        RuleId::R8,
        RuleId::R9,
        RuleId::Terminal,
        RuleId::Bailout,
    ];

    fn bit(self) -> u16 {
        1 << RuleId::ALL.iter().position(|&r| r == self).unwrap()
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleId::R0 => "R0",
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R5 => "R5",
            RuleId::R6 => "R6",
            RuleId::R7 => "R7",
            RuleId::R8 => "R8",
            RuleId::R9 => "R9",
            RuleId::Terminal => "terminal",
            RuleId::Bailout => "R∞-bailout",
        };
        f.write_str(s)
    }
}

/// Set of enabled rules. The bailout cannot be disabled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleMask(u16);

impl RuleMask {
    pub fn all() -> Self {
        RuleMask(u16::MAX)
    }

    pub fn without(self, rule: RuleId) -> Self {
        if rule == RuleId::Bailout {
            return self;
        }
        RuleMask(self.0 & !rule.bit())
    }

    pub fn only(rules: &[RuleId]) -> Self {
        let mut m = RuleId::Bailout.bit();
        for r in rules {
            m |= r.bit();
        }
        RuleMask(m)
    }

    pub fn contains(self, rule: RuleId) -> bool {
        self.0 & rule.bit() != 0
    }
}

impl Default for RuleMask {
    fn default() -> Self {
        Self::all()
    }
}

#[derive(Clone, Debug)]
pub struct ConstructOptions {
    /// Subproblems of at most this order are solved exactly.
    pub fallback_n: usize,
    /// Detached pieces of at most this order are labeled by an exact solve.
    pub piece_cap: usize,
    pub rules: RuleMask,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        Self {
            fallback_n: 12,
            piece_cap: 20,
            rules: RuleMask::all(),
        }
    }
}

/// One rule application. `vertices` are ids of the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: RuleId,
    pub vertices: Vec<usize>,
    /// Vertices removed from the subproblem; for a terminal step, its order.
    pub removed: usize,
    /// Final weight minus the weight of the labeling returned by the
    /// recursion (for a terminal step, the weight of its labeling).
    pub weight_added: i64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub terminal: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
    pub fallback_used: bool,
    /// Terminal subproblems, in the order they were solved.
    pub final_base: String,
}

impl ReductionTrace {
    pub fn removed_total(&self) -> usize {
        self.steps.iter().map(|s| s.removed).sum()
    }

    pub fn weight_total(&self) -> i64 {
        self.steps.iter().map(|s| s.weight_added).sum()
    }

    /// Number of applications per rule.
    pub fn rule_counts(&self) -> Vec<(RuleId, usize)> {
        let mut out: Vec<(RuleId, usize)> = Vec::new();
        for s in &self.steps {
            match out.iter_mut().find(|(r, _)| *r == s.rule) {
                Some((_, c)) => *c += 1,
                None => out.push((s.rule, 1)),
            }
        }
        out.sort();
        out
    }

    /// Compact form such as `R0x1 R2x3 terminalx2`.
    pub fn summary(&self) -> String {
        self.rule_counts()
            .iter()
            .map(|(r, c)| format!("{r}x{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}
