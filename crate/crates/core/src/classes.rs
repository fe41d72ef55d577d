//! Predicate-defined partition classes and exhaustive counting.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumerate::partitions;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// The partition families appearing in the crank–mex results.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassTag {
    /// even mex
    Xe,
    /// odd mex
    Xo,
    /// has a fixed point
    F,
    /// `F` with `1^n` moved from `beta = 0` to `beta = 1`
    Fstar,
    /// no fixed point
    G,
    /// no 1-fixed point
    G1,
    MNeg,
    MPos,
    MNonneg,
    MNonpos,
    MZero,
    /// every partition
    P,
}

impl ClassTag {
    pub const ALL: [ClassTag; 12] = [
        ClassTag::Xe,
        ClassTag::Xo,
        ClassTag::F,
        ClassTag::Fstar,
        ClassTag::G,
        ClassTag::G1,
        ClassTag::MNeg,
        ClassTag::MPos,
        ClassTag::MNonneg,
        ClassTag::MNonpos,
        ClassTag::MZero,
        ClassTag::P,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Xe => "X_e",
            ClassTag::Xo => "X_o",
            ClassTag::F => "F",
            ClassTag::Fstar => "F*",
            ClassTag::G => "G",
            ClassTag::G1 => "G_1",
            ClassTag::MNeg => "M_<0",
            ClassTag::MPos => "M_>0",
            ClassTag::MNonneg => "M_>=0",
            ClassTag::MNonpos => "M_<=0",
            ClassTag::MZero => "M_0",
            ClassTag::P => "P",
        }
    }

    /// Class predicate ignoring any `beta` refinement.
    pub fn contains(self, lambda: &Partition) -> bool {
        match self {
            ClassTag::Xe => lambda.mex().is_multiple_of(2),
            ClassTag::Xo => lambda.mex() % 2 == 1,
            ClassTag::F | ClassTag::Fstar => lambda.fixed_point().is_some(),
            ClassTag::G => lambda.fixed_point().is_none(),
            ClassTag::G1 => !lambda.has_j_fixed_point(1),
            ClassTag::MNeg => lambda.crank() < 0,
            ClassTag::MPos => lambda.crank() > 0,
            ClassTag::MNonneg => lambda.crank() >= 0,
            ClassTag::MNonpos => lambda.crank() <= 0,
            ClassTag::MZero => lambda.crank() == 0,
            ClassTag::P => true,
        }
    }

    /// The `beta` value under which `lambda` is filed in this class.
    ///
    /// This is `beta(lambda)` except for `F*`, where `1^n` is filed at 1.
    pub fn refined_beta(self, lambda: &Partition) -> usize {
        match self {
            ClassTag::Fstar if lambda.is_all_ones() => 1,
            _ => lambda.beta(),
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '_' | '-' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        let tag = match key.as_str() {
            "xe" => ClassTag::Xe,
            "xo" => ClassTag::Xo,
            "f" => ClassTag::F,
            "fstar" | "f*" => ClassTag::Fstar,
            "g" => ClassTag::G,
            "g1" => ClassTag::G1,
            "mneg" | "m<0" => ClassTag::MNeg,
            "mpos" | "m>0" => ClassTag::MPos,
            "mnonneg" | "m>=0" => ClassTag::MNonneg,
            "mnonpos" | "m<=0" => ClassTag::MNonpos,
            "mzero" | "m0" => ClassTag::MZero,
            "p" => ClassTag::P,
            _ => return Err(Error::Parse(s.to_string())),
        };
        Ok(tag)
    }
}

/// A class, optionally refined to a single number of parts greater than one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionClassId {
    pub tag: ClassTag,
    pub beta_filter: Option<usize>,
}

impl PartitionClassId {
    pub fn new(tag: ClassTag) -> Self {
        PartitionClassId {
            tag,
            beta_filter: None,
        }
    }

    pub fn with_beta(tag: ClassTag, k: usize) -> Self {
        PartitionClassId {
            tag,
            beta_filter: Some(k),
        }
    }
}

impl fmt::Display for PartitionClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.beta_filter {
            Some(k) => write!(f, "{}(k={k})", self.tag),
            None => write!(f, "{}", self.tag),
        }
    }
}

/// Class membership, including the refinement by `beta`.
pub fn member(lambda: &Partition, class: PartitionClassId) -> bool {
    class.tag.contains(lambda)
        && class
            .beta_filter
            .is_none_or(|k| class.tag.refined_beta(lambda) == k)
}

/// Exact class sizes for one `n`, keyed by `(tag, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub n: u32,
    rows: BTreeMap<(ClassTag, usize), u64>,
}

impl CountTable {
    /// Count for `(tag, k)`; zero when no member exists.
    pub fn get(&self, tag: ClassTag, k: usize) -> u64 {
        self.rows.get(&(tag, k)).copied().unwrap_or(0)
    }

    /// Total over all `k`.
    pub fn total(&self, tag: ClassTag) -> u64 {
        self.rows
            .range((tag, 0)..=(tag, usize::MAX))
            .map(|(_, &c)| c)
            .sum()
    }

    /// Nonzero rows in key order.
    pub fn rows(&self) -> impl Iterator<Item = ((ClassTag, usize), u64)> + '_ {
        self.rows.iter().map(|(&key, &c)| (key, c))
    }
}

/// Counts every requested class in one pass over the partitions of `n`.
///
/// A class with a `beta_filter` contributes only its own `k`; an unfiltered
/// class is tallied at every `k`.
pub fn count_classes(n: i64, classes: &[PartitionClassId]) -> Result<CountTable> {
    let mut rows: BTreeMap<(ClassTag, usize), u64> = BTreeMap::new();
    for lambda in partitions(n)? {
        for class in classes {
            if !class.tag.contains(&lambda) {
                continue;
            }
            let k = class.tag.refined_beta(&lambda);
            if class.beta_filter.is_some_and(|f| f != k) {
                continue;
            }
            let slot = rows.entry((class.tag, k)).or_insert(0);
            *slot = slot.checked_add(1).ok_or(Error::Overflow("count_classes"))?;
        }
    }
    Ok(CountTable { n: n as u32, rows })
}

/// Members of `class` among the partitions of `n`, in enumeration order.
pub fn members(n: i64, class: PartitionClassId) -> Result<Vec<Partition>> {
    Ok(partitions(n)?.filter(|l| member(l, class)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn all_tags() -> Vec<PartitionClassId> {
        ClassTag::ALL.iter().map(|&t| PartitionClassId::new(t)).collect()
    }

    #[test]
    fn membership_examples() {
        assert!(member(&p("2^4"), PartitionClassId::with_beta(ClassTag::F, 4)));
        assert!(member(&p("2^4"), PartitionClassId::with_beta(ClassTag::Fstar, 4)));
        assert!(member(&p("6 1 1"), PartitionClassId::with_beta(ClassTag::MNeg, 1)));
        assert!(member(&p("1^8"), PartitionClassId::with_beta(ClassTag::Fstar, 1)));
        assert!(!member(&p("1^8"), PartitionClassId::with_beta(ClassTag::Fstar, 0)));
        assert!(member(&p("1^8"), PartitionClassId::with_beta(ClassTag::F, 0)));
        assert!(member(&p("4 2 1"), PartitionClassId::new(ClassTag::Xo)));
        assert!(member(&p("5 2"), PartitionClassId::new(ClassTag::G1)));
        assert!(!member(&p("4 3"), PartitionClassId::new(ClassTag::G1)));
        assert!(member(&p("4 1"), PartitionClassId::new(ClassTag::MZero)));
    }

    #[test]
    fn fstar_at_one_is_exactly_all_ones() {
        for n in 1..=12 {
            let fs = members(n, PartitionClassId::with_beta(ClassTag::Fstar, 1)).unwrap();
            assert_eq!(fs, vec![Partition::ones(n as u32).unwrap()]);
            for k in 2..=n as usize {
                assert_eq!(
                    members(n, PartitionClassId::with_beta(ClassTag::Fstar, k)).unwrap(),
                    members(n, PartitionClassId::with_beta(ClassTag::F, k)).unwrap()
                );
            }
        }
    }

    #[test]
    fn even_mex_counts_n8_n9() {
        let t = count_classes(8, &all_tags()).unwrap();
        let xe: Vec<u64> = (0..4).map(|k| t.get(ClassTag::Xe, k)).collect();
        assert_eq!(xe, vec![1, 5, 3, 1]);
        let mpos: Vec<u64> = (0..4).map(|k| t.get(ClassTag::MPos, k + 1)).collect();
        assert_eq!(mpos, vec![1, 5, 3, 1]);
        assert_eq!(t.total(ClassTag::P), 22);

        let t9 = count_classes(9, &all_tags()).unwrap();
        let xe9: Vec<u64> = (0..4).map(|k| t9.get(ClassTag::Xe, k)).collect();
        assert_eq!(xe9, vec![1, 6, 5, 2]);
    }

    #[test]
    fn filtered_counts_agree_with_unfiltered() {
        let full = count_classes(10, &all_tags()).unwrap();
        for tag in ClassTag::ALL {
            for k in 0..=10 {
                let one = count_classes(10, &[PartitionClassId::with_beta(tag, k)]).unwrap();
                assert_eq!(one.get(tag, k), full.get(tag, k));
                assert_eq!(one.total(tag), full.get(tag, k));
            }
        }
    }

    #[test]
    fn complementary_classes_partition_p() {
        for n in 1..=16 {
            let t = count_classes(n, &all_tags()).unwrap();
            let pn = t.total(ClassTag::P);
            assert_eq!(t.total(ClassTag::Xe) + t.total(ClassTag::Xo), pn);
            assert_eq!(t.total(ClassTag::F) + t.total(ClassTag::G), pn);
            assert_eq!(t.total(ClassTag::MNeg) + t.total(ClassTag::MNonneg), pn);
            assert_eq!(t.total(ClassTag::MPos) + t.total(ClassTag::MNonpos), pn);
            assert_eq!(
                t.total(ClassTag::MNeg) + t.total(ClassTag::MZero) + t.total(ClassTag::MPos),
                pn
            );
            assert_eq!(t.total(ClassTag::F), t.total(ClassTag::Fstar));
        }
    }

    #[test]
    fn tag_parsing() {
        assert_eq!("X_e".parse::<ClassTag>().unwrap(), ClassTag::Xe);
        assert_eq!("Fstar".parse::<ClassTag>().unwrap(), ClassTag::Fstar);
        assert_eq!("M_neg".parse::<ClassTag>().unwrap(), ClassTag::MNeg);
        assert_eq!("m-pos".parse::<ClassTag>().unwrap(), ClassTag::MPos);
        assert!("Q".parse::<ClassTag>().is_err());
        for t in ClassTag::ALL {
            assert_eq!(t.name().parse::<ClassTag>().unwrap(), t);
        }
    }
}
