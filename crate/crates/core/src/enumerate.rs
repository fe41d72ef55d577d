//! Exhaustive enumeration of the partitions of `n`.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Iterator over every partition of `n`, in decreasing lexicographic order:
/// `(n)` first and `1^n` last.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition::from_sorted(current))
    }
}

fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    let k = parts.iter().rposition(|&p| p > 1)?;
    let mut next = parts[..=k].to_vec();
    // trailing ones plus the unit taken from parts[k]
    let mut rem = (parts.len() - k - 1) as u32 + 1;
    next[k] -= 1;
    let cap = next[k];
    while rem > 0 {
        let p = rem.min(cap);
        next.push(p);
        rem -= p;
    }
    Some(next)
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: i64) -> Result<Partitions> {
    if n < 1 || n > u32::MAX as i64 {
        return Err(Error::InvalidN(n));
    }
    Ok(Partitions {
        next: Some(vec![n as u32]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Euler's pentagonal recurrence, independent of the iterator.
    fn partition_numbers(max: usize) -> Vec<u64> {
        let mut p = vec![0i64; max + 1];
        p[0] = 1;
        for n in 1..=max {
            let mut acc = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[n - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    acc += sign * p[n - g2];
                }
            }
            p[n] = acc;
        }
        p.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        let p = partition_numbers(40);
        assert_eq!(p[40], 37338);
        for (n, &pn) in p.iter().enumerate().take(31).skip(1) {
            assert_eq!(partitions(n as i64).unwrap().count() as u64, pn, "n = {n}");
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(partitions(5).unwrap().count(), 7);
        let one: Vec<_> = partitions(1).unwrap().collect();
        assert_eq!(one, vec![Partition::single(1).unwrap()]);
        let target: Partition = "3 2 2 1".parse().unwrap();
        assert_eq!(partitions(8).unwrap().filter(|p| *p == target).count(), 1);
    }

    #[test]
    fn strictly_decreasing_lex_and_canonical() {
        let all: Vec<_> = partitions(12).unwrap().collect();
        for w in all.windows(2) {
            assert!(w[0] > w[1]);
        }
        assert!(all.iter().all(|p| p.n() == 12));
        assert_eq!(all.first().unwrap().parts(), &[12]);
        assert!(all.last().unwrap().is_all_ones());
    }

    #[test]
    fn rejects_nonpositive_n() {
        assert_eq!(partitions(0).unwrap_err(), Error::InvalidN(0));
        assert!(partitions(-3).is_err());
    }
}
