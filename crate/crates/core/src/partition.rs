//! Integer partitions and the statistics used throughout the crate.
//!
//! A [`Partition`] is always canonical: a nonempty, nonincreasing list of
//! positive parts. Every constructor re-sorts its input, so two partitions
//! are equal exactly when they are equal as multisets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of a positive integer `n`, parts stored in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds the canonical partition with the given parts in any order.
    pub fn new<I>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let mut out = Vec::new();
        for p in parts {
            if p < 1 || p > u32::MAX as i64 {
                return Err(Error::InvalidPart(p));
            }
            out.push(p as u32);
        }
        if out.is_empty() {
            return Err(Error::EmptyPartition);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts: out })
    }

    /// Canonicalizes a multiset of parts, dropping zeros.
    ///
    /// Used by the bijection rules, whose displayed images are not sorted and
    /// may momentarily contain empty rows.
    pub(crate) fn from_multiset(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Wraps parts already known to be nonincreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.is_empty());
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_some_and(|&p| p >= 1));
        Partition { parts }
    }

    /// The partition `1^n`.
    pub fn ones(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidN(0));
        }
        Ok(Partition {
            parts: vec![1; n as usize],
        })
    }

    /// The one-part partition `(n)`.
    pub fn single(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidN(0));
        }
        Ok(Partition { parts: vec![n] })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false; the empty partition cannot be constructed.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// 1-based part access, `None` past the last part.
    pub fn part(&self, i: usize) -> Option<u32> {
        if i == 0 {
            None
        } else {
            self.parts.get(i - 1).copied()
        }
    }

    pub fn is_all_ones(&self) -> bool {
        self.parts[0] == 1
    }

    /// Number of parts equal to 1.
    pub fn omega(&self) -> usize {
        self.parts.iter().rev().take_while(|&&p| p == 1).count()
    }

    /// Number of parts strictly greater than [`omega`](Self::omega).
    pub fn mu(&self) -> usize {
        let w = self.omega() as u32;
        self.parts.iter().take_while(|&&p| p > w).count()
    }

    /// The Andrews–Garvan crank: the largest part when there are no 1s,
    /// otherwise `mu - omega`.
    pub fn crank(&self) -> i64 {
        match self.omega() {
            0 => self.parts[0] as i64,
            w => self.mu() as i64 - w as i64,
        }
    }

    /// Smallest positive integer that is not a part.
    pub fn mex(&self) -> u32 {
        let mut m = 1;
        for &p in self.parts.iter().rev() {
            if p == m {
                m += 1;
            } else if p > m {
                break;
            }
        }
        m
    }

    /// Number of parts greater than one.
    pub fn beta(&self) -> usize {
        self.len() - self.omega()
    }

    /// `d_j`: the greatest 1-based index `i` with `parts[i] >= i + j`, or 0.
    ///
    /// `durfee(0)` is the side of the Durfee square.
    pub fn durfee(&self, j: u32) -> usize {
        durfee_of(&self.parts, j)
    }

    /// Index `i` with `parts[i] == i + j`, if any. There is at most one.
    pub fn j_fixed_point(&self, j: u32) -> Option<usize> {
        j_fixed_point_of(&self.parts, j)
    }

    pub fn has_j_fixed_point(&self, j: u32) -> bool {
        self.j_fixed_point(j).is_some()
    }

    /// The unique index `i` with `parts[i] == i`, if any.
    pub fn fixed_point(&self) -> Option<usize> {
        self.j_fixed_point(0)
    }

    /// Multiplicity of part `p`.
    pub fn multiplicity(&self, p: u32) -> usize {
        self.parts.iter().filter(|&&x| x == p).count()
    }

    /// Renders in the compact exponent form used in the tables, e.g. `2^2 1^4`.
    pub fn to_exponent_string(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&x| x == p).count();
            if !out.is_empty() {
                out.push(' ');
            }
            if run == 1 {
                out.push_str(&p.to_string());
            } else {
                out.push_str(&format!("{p}^{run}"));
            }
            i += run;
        }
        out
    }
}

/// [`Partition::durfee`] on a raw nonincreasing slice, which may be empty.
pub(crate) fn durfee_of(parts: &[u32], j: u32) -> usize {
    parts
        .iter()
        .enumerate()
        .take_while(|&(idx, &p)| p as usize >= idx + 1 + j as usize)
        .count()
}

/// [`Partition::j_fixed_point`] on a raw nonincreasing slice.
pub(crate) fn j_fixed_point_of(parts: &[u32], j: u32) -> Option<usize> {
    parts
        .iter()
        .enumerate()
        .find(|&(idx, &p)| p as usize == idx + 1 + j as usize)
        .map(|(idx, _)| idx + 1)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exponent_string())
    }
}

/// Accepts space- or comma-separated parts, each optionally carrying an
/// exponent: `"5 1 1"`, `"5,1,1"` and `"5 1^2"` all denote the same partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, Some(e)),
                None => (tok, None),
            };
            let base: i64 = base.parse().map_err(|_| Error::Parse(s.to_string()))?;
            let exp: i64 = match exp {
                Some(e) => e.parse().map_err(|_| Error::Parse(s.to_string()))?,
                None => 1,
            };
            if exp < 0 {
                return Err(Error::Parse(s.to_string()));
            }
            parts.extend(std::iter::repeat_n(base, exp as usize));
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn make_partition_sorts() {
        assert_eq!(Partition::new([2, 3, 1, 2]).unwrap().parts(), &[3, 2, 2, 1]);
        assert_eq!(Partition::new([8]).unwrap().parts(), &[8]);
        assert_eq!(Partition::new([1; 8]).unwrap(), Partition::ones(8).unwrap());
        assert_eq!(Partition::new([2, 3, 1, 2]).unwrap().n(), 8);
    }

    #[test]
    fn make_partition_errors() {
        assert_eq!(Partition::new(Vec::<i64>::new()), Err(Error::EmptyPartition));
        assert_eq!(Partition::new([3, 0, 1]), Err(Error::InvalidPart(0)));
        assert_eq!(Partition::new([-2]), Err(Error::InvalidPart(-2)));
        assert_eq!(Error::EmptyPartition.to_string(), "empty partition rejected");
    }

    #[test]
    fn parse_both_notations() {
        assert_eq!(p("2^2 1^4"), p("2 2 1 1 1 1"));
        assert_eq!(p("5,1,1"), p("1 5 1"));
        assert!("2^x".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("3 0".parse::<Partition>().is_err());
    }

    #[test]
    fn exponent_rendering() {
        assert_eq!(p("2 2 1 1 1 1").to_string(), "2^2 1^4");
        assert_eq!(p("4 3 1").to_string(), "4 3 1");
        assert_eq!(Partition::ones(8).unwrap().to_string(), "1^8");
        assert_eq!(p("10 10 1").to_string(), "10^2 1");
    }

    #[test]
    fn omega_mu_beta() {
        assert_eq!(p("5 1 1").omega(), 2);
        assert_eq!(p("8").omega(), 0);
        assert_eq!(p("1^8").omega(), 8);
        assert_eq!(p("5 1 1").mu(), 1);
        assert_eq!(p("8").mu(), 1);
        assert_eq!(p("1^8").mu(), 0);
        assert_eq!(p("3 2 1 1").beta(), 2);
        assert_eq!(p("5 1 1").beta(), 1);
        assert_eq!(p("1^8").beta(), 0);
    }

    #[test]
    fn crank_values() {
        assert_eq!(p("5 1 1").crank(), -1);
        assert_eq!(p("3 2 1 1").crank(), -1);
        assert_eq!(p("4 2 1").crank(), 1);
        assert_eq!(p("3 3 1").crank(), 1);
        assert_eq!(p("8").crank(), 8);
        assert_eq!(p("1^8").crank(), -8);
        assert_eq!(p("1").crank(), -1);
        assert_eq!(p("5 1 1 1").crank(), -2);
        assert_eq!(p("4 1").crank(), 0);
    }

    #[test]
    fn mex_values() {
        assert_eq!(p("3 3 2 1").mex(), 4);
        assert_eq!(p("8").mex(), 1);
        assert_eq!(p("1^8").mex(), 2);
        assert_eq!(p("3 2 2 1").mex(), 4);
        assert_eq!(p("4 2 1").mex(), 3);
    }

    #[test]
    fn durfee_and_fixed_points() {
        assert_eq!(p("3 3 2 1").durfee(0), 2);
        assert_eq!(p("5 2").durfee(1), 1);
        assert_eq!(p("1^8").durfee(1), 0);
        assert_eq!(p("4 4").durfee(1), 2);

        assert_eq!(p("4 2 2").fixed_point(), Some(2));
        assert_eq!(p("6 1 1").fixed_point(), None);
        assert_eq!(p("1^8").fixed_point(), Some(1));

        assert!(p("4 3").has_j_fixed_point(1));
        assert!(!p("5 2").has_j_fixed_point(1));
        assert!(!p("3 3 2 1").has_j_fixed_point(0));
        assert_eq!(p("3 3 2").j_fixed_point(1), Some(2));
    }

    #[test]
    fn try_from_vec_canonicalizes() {
        let q = Partition::try_from(vec![1, 3, 2]).unwrap();
        assert_eq!(q.parts(), &[3, 2, 1]);
        assert!(Partition::try_from(vec![]).is_err());
    }
}
