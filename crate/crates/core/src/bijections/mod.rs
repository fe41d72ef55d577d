//! The three bijections behind `x_e(n,k) = f*(n,k+1) = m_<0(n,k) = m_>0(n,k+1)`,
//! their inverses, and step traces.

mod crank;
mod konan;
mod trace;

use serde::{Deserialize, Serialize};

pub use crank::{
    fixed_star_to_negcrank, fixed_to_negcrank, neg_to_pos_crank, negcrank_to_fixed,
    pos_to_neg_crank,
};
pub use konan::{
    even_mex_to_fixed_point, fixed_point_to_fixed_point_inverse, g1_insert, konan_reduce,
    EvenMexInverse,
};
pub use trace::{BijectionTrace, Rule, TraceState, TraceStep};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// One row of the four-way correspondence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub even_mex: Partition,
    pub fixed_point: Partition,
    pub neg_crank: Partition,
    pub pos_crank: Partition,
    pub trace: BijectionTrace,
}

/// Runs an even-mex partition of `n >= 2` through all three maps.
pub fn trace_chain(lambda: &Partition) -> Result<Chain> {
    let (fixed_point, mut trace) = even_mex_to_fixed_point(lambda)?;
    let neg_crank = fixed_star_to_negcrank(&fixed_point)?;
    trace.push(Rule::FpToOnes, TraceState::Whole(neg_crank.clone()));
    let pos_crank = neg_to_pos_crank(&neg_crank)?;
    trace.push(Rule::CrankNegToPos, TraceState::Whole(pos_crank.clone()));
    Ok(Chain {
        even_mex: lambda.clone(),
        fixed_point,
        neg_crank,
        pos_crank,
        trace,
    })
}

/// The individual maps, by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapName {
    EvenMexToFp,
    FpToEvenMex,
    FpToNeg,
    NegToFp,
    NegToPos,
    PosToNeg,
}

impl MapName {
    pub const ALL: [MapName; 6] = [
        MapName::EvenMexToFp,
        MapName::FpToEvenMex,
        MapName::FpToNeg,
        MapName::NegToFp,
        MapName::NegToPos,
        MapName::PosToNeg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapName::EvenMexToFp => "even-mex-to-fp",
            MapName::FpToEvenMex => "fp-to-even-mex",
            MapName::FpToNeg => "fp-to-neg",
            MapName::NegToFp => "neg-to-fp",
            MapName::NegToPos => "neg-to-pos",
            MapName::PosToNeg => "pos-to-neg",
        }
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MapName::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// Applies one map and records its steps.
///
/// The `F*`/`M_<0` maps use the `1^n ↦ 1^n` convention.
pub fn apply_map(map: MapName, lambda: &Partition) -> Result<(Partition, BijectionTrace)> {
    let single = |rule: Rule, out: Partition| {
        let mut trace = BijectionTrace::new();
        trace.push(rule, TraceState::Whole(out.clone()));
        (out, trace)
    };
    Ok(match map {
        MapName::EvenMexToFp => even_mex_to_fixed_point(lambda)?,
        MapName::FpToEvenMex => {
            let pre = fixed_point_to_fixed_point_inverse(lambda)?;
            // the trace shown is the forward one, from the preimage to `lambda`
            let (_, trace) = even_mex_to_fixed_point(&pre)?;
            (pre, trace)
        }
        MapName::FpToNeg => single(Rule::FpToOnes, fixed_star_to_negcrank(lambda)?),
        MapName::NegToFp => single(Rule::OnesToPart, negcrank_to_fixed(lambda)?),
        MapName::NegToPos => single(Rule::CrankNegToPos, neg_to_pos_crank(lambda)?),
        MapName::PosToNeg => single(Rule::CrankPosToNeg, pos_to_neg_crank(lambda)?),
    })
}
