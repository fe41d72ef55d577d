//! Fixed point ↔ negative crank and negative ↔ positive crank.

use crate::error::{Error, Result};
use crate::partition::Partition;

fn not_neg(lambda: &Partition) -> Error {
    Error::domain(lambda, "not in M_<0: crank is nonnegative")
}

/// Replaces `count` parts equal to 1 by the single part `part`.
fn merge_ones(kappa: &Partition, count: usize, part: u32) -> Result<Partition> {
    let w = kappa.omega();
    if w < count {
        return Err(Error::Internal(format!(
            "{kappa} has {w} ones, needed {count}"
        )));
    }
    let mut out = kappa.parts()[..kappa.len() - count].to_vec();
    out.push(part);
    Partition::from_multiset(out)
}

/// `F(n,k+1) → M_<0(n,k)` for `k >= 1`: the fixed part `λ_i = i` is replaced
/// by `i` parts 1.
pub fn fixed_to_negcrank(lambda: &Partition) -> Result<Partition> {
    let Some(i) = lambda.fixed_point() else {
        return Err(Error::domain(lambda, "not in F: no fixed point"));
    };
    if lambda.beta() <= 1 {
        return Err(Error::Degenerate(
            lambda.to_string(),
            "degenerate class, use F* convention".into(),
        ));
    }
    let mut out = lambda.parts().to_vec();
    out.remove(i - 1);
    out.extend(std::iter::repeat_n(1, i));
    Partition::from_multiset(out)
}

/// [`fixed_to_negcrank`] extended to `F*`: `1^n` is sent to itself.
pub fn fixed_star_to_negcrank(lambda: &Partition) -> Result<Partition> {
    if lambda.is_all_ones() {
        Ok(lambda.clone())
    } else {
        fixed_to_negcrank(lambda)
    }
}

/// `M_<0(n,k) → F*(n,k+1)`, inverse of [`fixed_star_to_negcrank`].
///
/// With a fixed point `i`, `i` parts 1 merge into a part `i`; otherwise, with
/// Durfee side `d`, `d+1` parts 1 merge into a part `d+1`. `1^n` is fixed.
pub fn negcrank_to_fixed(kappa: &Partition) -> Result<Partition> {
    if kappa.crank() >= 0 {
        return Err(not_neg(kappa));
    }
    if kappa.is_all_ones() {
        return Ok(kappa.clone());
    }
    match kappa.fixed_point() {
        Some(i) => merge_ones(kappa, i, i as u32),
        None => {
            let d = kappa.durfee(0);
            merge_ones(kappa, d + 1, d as u32 + 1)
        }
    }
}

/// `M_<0(n,k) → M_>0(n,k+1)` for `n >= 2`.
///
/// With `w` ones and `m` parts exceeding `w`, the first `m` parts drop by
/// one, a part `w` is inserted, and the ones are replaced by `1^m`.
pub fn neg_to_pos_crank(lambda: &Partition) -> Result<Partition> {
    if lambda.crank() >= 0 {
        return Err(not_neg(lambda));
    }
    if lambda.n() < 2 {
        return Err(Error::Degenerate(
            lambda.to_string(),
            "crank maps need n >= 2".into(),
        ));
    }
    let w = lambda.omega();
    let m = lambda.mu();
    let k = lambda.beta();
    let parts = lambda.parts();
    let mut out: Vec<u32> = parts[..m].iter().map(|&p| p - 1).collect();
    out.push(w as u32);
    out.extend_from_slice(&parts[m..k]);
    out.extend(std::iter::repeat_n(1, m));
    Partition::from_multiset(out)
}

/// `M_>0(n,k+1) → M_<0(n,k)`, inverse of [`neg_to_pos_crank`].
///
/// With `v` ones and `ℓ = ρ_{v+1}`, the first `v` parts rise by one, `ℓ` is
/// removed, and the ones are replaced by `1^ℓ`.
pub fn pos_to_neg_crank(rho: &Partition) -> Result<Partition> {
    if rho.crank() <= 0 {
        return Err(Error::domain(rho, "not in M_>0: crank is nonpositive"));
    }
    let v = rho.omega();
    let k1 = rho.beta();
    if k1 == 0 || v >= k1 {
        return Err(Error::Internal(format!(
            "{rho} has positive crank but {v} ones and {k1} parts above one"
        )));
    }
    let parts = rho.parts();
    let ell = parts[v];
    let mut out: Vec<u32> = parts[..v].iter().map(|&p| p + 1).collect();
    out.extend_from_slice(&parts[v + 1..k1]);
    out.extend(std::iter::repeat_n(1, ell as usize));
    Partition::from_multiset(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn fixed_to_neg_examples() {
        assert_eq!(fixed_to_negcrank(&p("4 2 2")).unwrap(), p("4 2 1 1"));
        assert_eq!(fixed_to_negcrank(&p("2 2 2 1 1")).unwrap(), p("2 2 1^4"));
        assert_eq!(fixed_to_negcrank(&p("6 2")).unwrap(), p("6 1 1"));
        assert_eq!(fixed_to_negcrank(&p("2^4")).unwrap(), p("2^3 1^2"));
    }

    #[test]
    fn fixed_to_neg_errors() {
        let e = fixed_to_negcrank(&p("8")).unwrap_err();
        assert!(e.to_string().contains("no fixed point"), "{e}");
        let e = fixed_to_negcrank(&p("1^8")).unwrap_err();
        assert!(e.to_string().contains("F* convention"), "{e}");
        assert_eq!(fixed_star_to_negcrank(&p("1^8")).unwrap(), p("1^8"));
    }

    #[test]
    fn neg_to_fixed_examples() {
        assert_eq!(negcrank_to_fixed(&p("6 1 1")).unwrap(), p("6 2"));
        assert_eq!(negcrank_to_fixed(&p("2 2 1^4")).unwrap(), p("2 2 2 1 1"));
        assert_eq!(negcrank_to_fixed(&p("1^8")).unwrap(), p("1^8"));
        let e = negcrank_to_fixed(&p("4 2 1")).unwrap_err();
        assert!(e.to_string().contains("crank is nonnegative"), "{e}");
    }

    #[test]
    fn neg_to_pos_examples() {
        assert_eq!(neg_to_pos_crank(&p("6 1 1")).unwrap(), p("5 2 1"));
        assert_eq!(neg_to_pos_crank(&p("4 1^4")).unwrap(), p("4 4"));
        assert_eq!(neg_to_pos_crank(&p("1^8")).unwrap(), p("8"));
        assert_eq!(neg_to_pos_crank(&p("5 1^3")).unwrap(), p("4 3 1"));
        assert!(matches!(neg_to_pos_crank(&p("1")), Err(Error::Degenerate(..))));
        assert!(neg_to_pos_crank(&p("8")).is_err());
    }

    #[test]
    fn pos_to_neg_examples() {
        assert_eq!(pos_to_neg_crank(&p("5 2 1")).unwrap(), p("6 1 1"));
        assert_eq!(pos_to_neg_crank(&p("8")).unwrap(), p("1^8"));
        assert_eq!(pos_to_neg_crank(&p("2^4")).unwrap(), p("2^3 1^2"));
        let e = pos_to_neg_crank(&p("4 1")).unwrap_err();
        assert!(e.to_string().contains("crank is nonpositive"), "{e}");
    }

    #[test]
    fn crank_not_negated() {
        let lambda = p("5 1 1 1");
        assert_eq!(lambda.crank(), -2);
        let rho = neg_to_pos_crank(&lambda).unwrap();
        assert_eq!(rho, p("4 3 1"));
        assert_eq!(rho.crank(), 1);
    }
}
