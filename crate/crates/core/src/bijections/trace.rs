use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::Partition;

/// Label of one rule application in a trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Staircase split of an even-mex partition; always the first step.
    Split,
    RuleI,
    RuleIi,
    /// Insertion of the extra part 1 into a `G_1` partition.
    Insert,
    FpToOnes,
    OnesToPart,
    CrankNegToPos,
    CrankPosToNeg,
}

impl Rule {
    pub fn label(self) -> &'static str {
        match self {
            Rule::Split => "split",
            Rule::RuleI => "rule-i",
            Rule::RuleIi => "rule-ii",
            Rule::Insert => "insert",
            Rule::FpToOnes => "fp-to-ones",
            Rule::OnesToPart => "ones-to-part",
            Rule::CrankNegToPos => "crank-neg-to-pos",
            Rule::CrankPosToNeg => "crank-pos-to-neg",
        }
    }

    /// Short annotation used in table arrows, e.g. `(ii)`.
    pub fn arrow_label(self) -> &'static str {
        match self {
            Rule::RuleI => "(i)",
            Rule::RuleIi => "(ii)",
            other => other.label(),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A state in a trace: either a staircase split `(2j+1, ..., 1) ∪ κ` or a
/// plain partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceState {
    Split {
        j: u32,
        /// nonincreasing, possibly empty
        kappa: Vec<u32>,
    },
    Whole(Partition),
}

impl TraceState {
    /// Total size of the state (staircase included).
    pub fn size(&self) -> u64 {
        match self {
            TraceState::Split { j, kappa } => {
                let top = 2 * *j as u64 + 1;
                top * (top + 1) / 2 + kappa.iter().map(|&p| p as u64).sum::<u64>()
            }
            TraceState::Whole(p) => p.n() as u64,
        }
    }

    /// Number of parts greater than one, staircase included.
    pub fn beta(&self) -> usize {
        match self {
            TraceState::Split { j, kappa } => {
                2 * *j as usize + kappa.iter().filter(|&&p| p > 1).count()
            }
            TraceState::Whole(p) => p.beta(),
        }
    }

    pub fn as_partition(&self) -> Option<&Partition> {
        match self {
            TraceState::Whole(p) => Some(p),
            TraceState::Split { .. } => None,
        }
    }
}

fn kappa_string(kappa: &[u32]) -> String {
    match Partition::from_multiset(kappa.to_vec()) {
        Ok(p) => p.to_exponent_string(),
        Err(_) => "∅".to_string(),
    }
}

impl fmt::Display for TraceState {
    /// Split states print as `(3 2 1, 1^2)`; whole partitions in exponent form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceState::Split { j, kappa } => {
                let stair: Vec<String> = (1..=2 * j + 1).rev().map(|p| p.to_string()).collect();
                write!(f, "({}, {})", stair.join(" "), kappa_string(kappa))
            }
            TraceState::Whole(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: Rule,
    pub state: TraceState,
}

/// Ordered rule applications, each paired with the state it produced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BijectionTrace {
    pub steps: Vec<TraceStep>,
}

impl BijectionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn push(&mut self, rule: Rule, state: TraceState) {
        self.steps.push(TraceStep { rule, state });
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn last_state(&self) -> Option<&TraceState> {
        self.steps.last().map(|s| &s.state)
    }

    /// Rules in order, excluding the initial split.
    pub fn rules(&self) -> Vec<Rule> {
        self.steps
            .iter()
            .map(|s| s.rule)
            .filter(|&r| r != Rule::Split)
            .collect()
    }

    /// The staircase-phase steps, `split` plus any `(i)`/`(ii)` applications.
    pub fn konan_steps(&self) -> &[TraceStep] {
        let end = self
            .steps
            .iter()
            .position(|s| !matches!(s.rule, Rule::Split | Rule::RuleI | Rule::RuleIi))
            .unwrap_or(self.steps.len());
        &self.steps[..end]
    }

    /// Renders the staircase phase as in the tables:
    /// `(3 2 1, 1^2) →(ii)→ (1, 3 2 1^2)`.
    pub fn render_konan(&self) -> String {
        let mut out = String::new();
        for step in self.konan_steps() {
            if step.rule != Rule::Split {
                out.push_str(&format!(" →{}→ ", step.rule.arrow_label()));
            }
            out.push_str(&step.state.to_string());
        }
        out
    }
}

impl fmt::Display for BijectionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{:>2}. {:<16} {}", i + 1, step.rule.label(), step.state)?;
        }
        Ok(())
    }
}
