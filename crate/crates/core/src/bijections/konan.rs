//! Even mex to fixed point, through `(1) × G_1(n-1)`.
//!
//! An even-mex partition with mex `2j+2` is split as the staircase
//! `(2j+1, ..., 1)` plus a remainder `κ`. Two rules are applied until the
//! staircase is `(1)` and `κ` has no 1-fixed point:
//!
//! * (i) `κ_i = i+2j+1`: raise `κ_1..κ_{i-1}` by one and replace `κ_i` by `2j+2`.
//! * (ii) otherwise, with `d = d_{2j+1}(κ)`: lower `κ_1..κ_d` by one, add the
//!   parts `d+2j+1` and `2j`, and shrink the staircase to `(2j-1, ..., 1)`.
//!
//! The surviving `κ` is then sent into `F(n)` by [`g1_insert`].

use std::collections::HashMap;

use crate::classes::ClassTag;
use crate::enumerate::partitions;
use crate::error::{Error, Result};
use crate::partition::{durfee_of, j_fixed_point_of, Partition};

use super::trace::{BijectionTrace, Rule, TraceState};

fn sorted_desc(mut v: Vec<u32>) -> Vec<u32> {
    v.retain(|&p| p > 0);
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Removes one copy of each of `1..=2j+1` from `lambda`; `mex(lambda) = 2j+2`.
fn split_staircase(lambda: &Partition) -> (u32, Vec<u32>) {
    let mex = lambda.mex();
    let j = (mex - 2) / 2;
    let mut kappa = Vec::with_capacity(lambda.len());
    let mut next_skip = 2 * j + 1;
    for &p in lambda.parts() {
        if next_skip > 0 && p == next_skip {
            next_skip -= 1;
        } else {
            kappa.push(p);
        }
    }
    (j, kappa)
}

fn rule_i(kappa: &[u32], i: usize, j: u32) -> Vec<u32> {
    let mut out: Vec<u32> = kappa[..i - 1].iter().map(|&p| p + 1).collect();
    out.push(2 * j + 2);
    out.extend_from_slice(&kappa[i..]);
    sorted_desc(out)
}

fn rule_ii(kappa: &[u32], d: usize, j: u32) -> Vec<u32> {
    let mut out: Vec<u32> = kappa[..d].iter().map(|&p| p - 1).collect();
    out.push(d as u32 + 2 * j + 1);
    out.push(2 * j);
    out.extend_from_slice(&kappa[d..]);
    sorted_desc(out)
}

/// Reduces an even-mex partition of `n >= 2` to a partition of `n-1` without
/// 1-fixed point, preserving the number of parts greater than one.
pub fn konan_reduce(lambda: &Partition) -> Result<(Partition, BijectionTrace)> {
    if !lambda.mex().is_multiple_of(2) {
        return Err(Error::domain(lambda, "not in X_e: mex is odd"));
    }
    if lambda.n() < 2 {
        return Err(Error::Degenerate(
            lambda.to_string(),
            "the reduced partition of 0 is empty".into(),
        ));
    }
    let (mut j, mut kappa) = split_staircase(lambda);
    let mut trace = BijectionTrace::new();
    trace.push(
        Rule::Split,
        TraceState::Split {
            j,
            kappa: kappa.clone(),
        },
    );

    let cap = 2 * lambda.n() as usize;
    for _ in 0..=cap {
        if let Some(i) = j_fixed_point_of(&kappa, 2 * j + 1) {
            kappa = rule_i(&kappa, i, j);
            trace.push(
                Rule::RuleI,
                TraceState::Split {
                    j,
                    kappa: kappa.clone(),
                },
            );
        } else if j == 0 {
            let mu = Partition::from_multiset(kappa)
                .map_err(|_| Error::Internal(format!("empty remainder reducing {lambda}")))?;
            return Ok((mu, trace));
        } else {
            let d = durfee_of(&kappa, 2 * j + 1);
            kappa = rule_ii(&kappa, d, j);
            j -= 1;
            trace.push(
                Rule::RuleIi,
                TraceState::Split {
                    j,
                    kappa: kappa.clone(),
                },
            );
        }
    }
    Err(Error::Internal(format!(
        "reduction of {lambda} did not terminate within {cap} steps"
    )))
}

/// Sends `mu` without 1-fixed point to a partition of `|mu| + 1` with a fixed
/// point: with `d = d_1(mu)`, lower `mu_1..mu_d` by one and insert `d+1`.
pub fn g1_insert(mu: &Partition) -> Result<Partition> {
    if mu.has_j_fixed_point(1) {
        return Err(Error::domain(mu, "not in G_1: has a 1-fixed point"));
    }
    let d = mu.durfee(1);
    let parts = mu.parts();
    let mut out: Vec<u32> = parts[..d].iter().map(|&p| p - 1).collect();
    out.push(d as u32 + 1);
    out.extend_from_slice(&parts[d..]);
    Partition::from_multiset(out)
}

/// The composed map from `X_e(n,k)` onto `F*(n,k+1)`, with its trace.
pub fn even_mex_to_fixed_point(lambda: &Partition) -> Result<(Partition, BijectionTrace)> {
    if !lambda.mex().is_multiple_of(2) {
        return Err(Error::domain(lambda, "not in X_e: mex is odd"));
    }
    if lambda.n() == 1 {
        // (1) ∪ ∅ ↦ (1)
        let mut trace = BijectionTrace::new();
        trace.push(Rule::Split, TraceState::Split { j: 0, kappa: vec![] });
        trace.push(Rule::Insert, TraceState::Whole(lambda.clone()));
        return Ok((lambda.clone(), trace));
    }
    let (mu, mut trace) = konan_reduce(lambda)?;
    let image = g1_insert(&mu)?;
    trace.push(Rule::Insert, TraceState::Whole(image.clone()));
    Ok((image, trace))
}

/// Inverse of [`even_mex_to_fixed_point`] for one `n`, tabulated from the
/// forward images.
#[derive(Clone, Debug)]
pub struct EvenMexInverse {
    n: u32,
    preimage: HashMap<Partition, Partition>,
}

impl EvenMexInverse {
    /// Tabulates all forward images for partitions of `n`. Fails if two even-mex
    /// partitions share an image.
    pub fn new(n: i64) -> Result<Self> {
        let mut preimage = HashMap::new();
        for lambda in partitions(n)? {
            if !ClassTag::Xe.contains(&lambda) {
                continue;
            }
            let (image, _) = even_mex_to_fixed_point(&lambda)?;
            if let Some(prev) = preimage.insert(image.clone(), lambda.clone()) {
                return Err(Error::Internal(format!(
                    "{prev} and {lambda} both map to {image}"
                )));
            }
        }
        Ok(EvenMexInverse {
            n: n as u32,
            preimage,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn invert(&self, phi: &Partition) -> Result<Partition> {
        if phi.n() != self.n {
            return Err(Error::OutOfRange(format!(
                "{phi} is a partition of {}, table is for {}",
                phi.n(),
                self.n
            )));
        }
        if phi.fixed_point().is_none() {
            return Err(Error::domain(phi, "not in F*: no fixed point"));
        }
        self.preimage
            .get(phi)
            .cloned()
            .ok_or_else(|| Error::Internal(format!("{phi} has no even-mex preimage")))
    }
}

/// The unique even-mex partition sent to `phi` by [`even_mex_to_fixed_point`].
pub fn fixed_point_to_fixed_point_inverse(phi: &Partition) -> Result<Partition> {
    if phi.fixed_point().is_none() {
        return Err(Error::domain(phi, "not in F*: no fixed point"));
    }
    EvenMexInverse::new(phi.n() as i64)?.invert(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_two_iterations() {
        let (mu, trace) = konan_reduce(&p("3 3 2 1")).unwrap();
        assert_eq!(mu, p("4 2 2"));
        assert_eq!(trace.rules(), vec![Rule::RuleIi, Rule::RuleI]);
        assert_eq!(
            trace.steps[1].state,
            TraceState::Split {
                j: 0,
                kappa: vec![3, 3, 2]
            }
        );
    }

    #[test]
    fn single_rule_rows() {
        let (mu, trace) = konan_reduce(&p("4 3 1")).unwrap();
        assert_eq!(mu, p("5 2"));
        assert_eq!(trace.rules(), vec![Rule::RuleI]);

        let (mu, trace) = konan_reduce(&p("3 2 1^3")).unwrap();
        assert_eq!(mu, p("3 2 1 1"));
        assert_eq!(trace.rules(), vec![Rule::RuleIi]);
        assert_eq!(trace.render_konan(), "(3 2 1, 1^2) →(ii)→ (1, 3 2 1^2)");

        let (mu, trace) = konan_reduce(&p("1^8")).unwrap();
        assert_eq!(mu, p("1^7"));
        assert!(trace.rules().is_empty());
        assert_eq!(trace.render_konan(), "(1, 1^7)");
    }

    #[test]
    fn staircase_with_empty_remainder() {
        let (mu, trace) = konan_reduce(&p("3 2 1")).unwrap();
        assert_eq!(mu.n(), 5);
        assert_eq!(trace.steps[0].state, TraceState::Split { j: 1, kappa: vec![] });
        assert_eq!(trace.render_konan().split(" →").next(), Some("(3 2 1, ∅)"));
    }

    #[test]
    fn reduce_rejects_odd_mex() {
        let err = konan_reduce(&p("4 2 1")).unwrap_err();
        assert!(err.to_string().contains("not in X_e"));
        assert!(matches!(konan_reduce(&p("1")), Err(Error::Degenerate(..))));
    }

    #[test]
    fn insert_examples() {
        assert_eq!(g1_insert(&p("5 2")).unwrap(), p("4 2 2"));
        assert_eq!(g1_insert(&p("4 4")).unwrap(), p("3 3 3"));
        assert_eq!(g1_insert(&p("1^7")).unwrap(), p("1^8"));
        assert!(g1_insert(&p("4 3")).unwrap_err().to_string().contains("not in G_1"));
    }

    #[test]
    fn composed_examples() {
        let cases = [
            ("3 2 2 1", "2^4"),
            ("3 3 2 1", "3 2 2 2"),
            ("7 1", "6 2"),
            ("4 4 1", "3^3"),
            ("1^8", "1^8"),
            ("1", "1"),
        ];
        for (x, f) in cases {
            assert_eq!(even_mex_to_fixed_point(&p(x)).unwrap().0, p(f), "{x}");
        }
        let (_, trace) = even_mex_to_fixed_point(&p("3 3 2 1")).unwrap();
        assert_eq!(trace.rules(), vec![Rule::RuleIi, Rule::RuleI, Rule::Insert]);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(fixed_point_to_fixed_point_inverse(&p("6 2")).unwrap(), p("7 1"));
        assert_eq!(fixed_point_to_fixed_point_inverse(&p("3^3")).unwrap(), p("4 4 1"));
        assert_eq!(fixed_point_to_fixed_point_inverse(&p("1^8")).unwrap(), p("1^8"));
        let err = fixed_point_to_fixed_point_inverse(&p("6 1 1")).unwrap_err();
        assert!(err.to_string().contains("not in F*"));
    }

    #[test]
    fn trace_states_keep_size_and_beta() {
        for n in 2..=16 {
            for lambda in partitions(n).unwrap().filter(|l| l.mex() % 2 == 0) {
                let (_, trace) = konan_reduce(&lambda).unwrap();
                for step in &trace.steps {
                    assert_eq!(step.state.size(), n as u64, "{lambda}");
                    assert_eq!(step.state.beta(), lambda.beta(), "{lambda}");
                }
            }
        }
    }
}
