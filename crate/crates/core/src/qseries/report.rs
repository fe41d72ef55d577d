use serde::{Deserialize, Serialize};

use super::bivariate::BivariateSeries;
use super::gf::{gf_even_mex_direct, gf_fixed_point_direct, gf_neg_crank_direct, gf_pos_crank_direct};
use crate::classes::{count_classes, ClassTag, PartitionClassId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Comparison of a generating function with enumerated counts.
///
/// Serialized as `{check, window, status, mismatches, known_anomalies}` where
/// each mismatch is `[n, k, expected, got]`; `expected` is the enumerated
/// count and `got` the series coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GfReport {
    pub check: String,
    pub window: (usize, usize),
    pub status: Status,
    pub mismatches: Vec<(usize, usize, i64, i64)>,
    /// Mismatches at `n = 1` for the positive-crank series, which counts `(1)`
    /// at `z^1` although its crank is `-1`.
    pub known_anomalies: Vec<(usize, usize, i64, i64)>,
}

/// The direct generating function for `tag`, if one exists.
pub fn class_series(tag: ClassTag, qmax: usize, zmax: usize) -> Result<BivariateSeries> {
    match tag {
        ClassTag::Xe => gf_even_mex_direct(qmax, zmax),
        ClassTag::Fstar => gf_fixed_point_direct(qmax, zmax),
        ClassTag::MNeg => gf_neg_crank_direct(qmax, zmax),
        ClassTag::MPos => gf_pos_crank_direct(qmax, zmax),
        other => Err(Error::OutOfRange(format!(
            "no generating function for class {other}"
        ))),
    }
}

/// Compares every coefficient `q^n z^k` with `1 <= n <= qmax`, `k <= zmax`
/// against exhaustive counts.
pub fn gf_vs_enumeration(tag: ClassTag, qmax: usize, zmax: usize) -> Result<GfReport> {
    let series = class_series(tag, qmax, zmax)?;
    let mut mismatches = Vec::new();
    let mut known_anomalies = Vec::new();
    for n in 1..=qmax {
        let counts = count_classes(n as i64, &[PartitionClassId::new(tag)])?;
        for k in 0..=zmax {
            let expected = i64::try_from(counts.get(tag, k)).map_err(|_| Error::Overflow("count"))?;
            let got = series.get(n, k);
            if expected != got {
                if tag == ClassTag::MPos && n == 1 {
                    known_anomalies.push((n, k, expected, got));
                } else {
                    mismatches.push((n, k, expected, got));
                }
            }
        }
    }
    Ok(GfReport {
        check: format!("gf_vs_enumeration[{}]", tag.name()),
        window: (qmax, zmax),
        status: Status::from_bool(mismatches.is_empty()),
        mismatches,
        known_anomalies,
    })
}
