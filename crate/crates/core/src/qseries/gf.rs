//! Generating functions in `q` (size) and `z` (parts greater than one) for
//! each refined class, built straight from their combinatorial sums, plus
//! the trivariate crank generating function.

use super::bivariate::{BivariateSeries, Count};
use super::trivariate::TrivariateCrankSeries;
use crate::error::Result;

fn tri(n: usize) -> usize {
    n * (n + 1) / 2
}

/// `Σ_{n≥1} (-1)^{n-1} z^{n-1} q^{C(n+1,2)}` on the window.
fn alternating_triangular(qmax: usize, zmax: usize) -> BivariateSeries {
    let mut s = BivariateSeries::zero(qmax, zmax);
    let mut n = 1;
    while tri(n) <= qmax && n - 1 <= zmax {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        s.set(tri(n), n - 1, sign);
        n += 1;
    }
    s
}

/// `E(z,q) = Σ_{n≥1} (-1)^{n-1} z^{n-1} q^{C(n+1,2)} / ((1-q)(zq^2;q)_∞)`.
///
/// The coefficient of `q^n z^k` is the number of even-mex partitions of `n`
/// with `k` parts greater than one.
pub fn e_series(qmax: usize, zmax: usize) -> Result<BivariateSeries> {
    let mut s = alternating_triangular(qmax, zmax);
    s.div_factor(1, 0)?;
    s.div_pochhammer(2, 1, Count::Infinite)?;
    Ok(s)
}

/// Even mex `2n`: one each of `1..2n-1`, then any parts except `2n`, with `z`
/// marking each part of size at least 2.
pub fn gf_even_mex_direct(qmax: usize, zmax: usize) -> Result<BivariateSeries> {
    let mut total = BivariateSeries::zero(qmax, zmax);
    for n in 1.. {
        let (a, b) = (n * (2 * n - 1), 2 * n - 2);
        if a > qmax {
            break;
        }
        if b > zmax {
            continue;
        }
        let mut term = BivariateSeries::monomial(qmax, zmax, a, b, 1);
        term.div_factor(1, 0)?;
        for j in (2..=qmax).filter(|&j| j != 2 * n) {
            term.div_factor(j, 1)?;
        }
        total.add_assign(&term)?;
    }
    Ok(total)
}

/// `Σ_{n≥1} z^n q^{n^2} / ((q;q)_{n-1} (1-q) (zq^2;q)_{n-1})`.
///
/// The `n = 1` term `zq/(1-q)` files `1^m` at `z^1`, matching `F*`.
pub fn gf_fixed_point_direct(qmax: usize, zmax: usize) -> Result<BivariateSeries> {
    let mut total = BivariateSeries::zero(qmax, zmax);
    let mut n = 1;
    while n * n <= qmax && n <= zmax {
        let mut term = BivariateSeries::monomial(qmax, zmax, n * n, n, 1);
        term.div_pochhammer(1, 0, Count::Finite(n as i64 - 1))?;
        term.div_factor(1, 0)?;
        term.div_pochhammer(2, 1, Count::Finite(n as i64 - 1))?;
        total.add_assign(&term)?;
        n += 1;
    }
    Ok(total)
}

/// `Σ_{m=lo}^{hi} z^m q^{m(n+1)} / (q;q)_m`, stopping at the window edge.
fn crank_inner_sum(
    n: usize,
    lo: usize,
    hi: Option<usize>,
    qmax: usize,
    zmax: usize,
) -> Result<BivariateSeries> {
    let mut inner = BivariateSeries::zero(qmax, zmax);
    let mut m = lo;
    while m * (n + 1) <= qmax && m <= zmax && hi.is_none_or(|h| m <= h) {
        let mut t = BivariateSeries::monomial(qmax, zmax, m * (n + 1), m, 1);
        t.div_pochhammer(1, 0, Count::Finite(m as i64))?;
        inner.add_assign(&t)?;
        m += 1;
    }
    Ok(inner)
}

/// Negative crank: `Σ_{n≥1} q^n/(zq^2;q)_{n-1} Σ_{m=0}^{n-1} z^m q^{m(n+1)}/(q;q)_m`.
pub fn gf_neg_crank_direct(qmax: usize, zmax: usize) -> Result<BivariateSeries> {
    let mut total = BivariateSeries::zero(qmax, zmax);
    for n in 1..=qmax {
        let mut term = crank_inner_sum(n, 0, Some(n - 1), qmax, zmax)?.shift(n, 0);
        term.div_pochhammer(2, 1, Count::Finite(n as i64 - 1))?;
        total.add_assign(&term)?;
    }
    Ok(total)
}

/// Positive crank:
/// `zq + Σ_{n≥2} zq^n/(zq^2;q)_{n-1}
///  + Σ_{n≥1} q^n/(zq^2;q)_{n-1} Σ_{m≥n+1} z^m q^{m(n+1)}/(q;q)_m`.
pub fn gf_pos_crank_direct(qmax: usize, zmax: usize) -> Result<BivariateSeries> {
    let mut total = BivariateSeries::monomial(qmax, zmax, 1, 1, 1);
    for n in 2..=qmax {
        let mut term = BivariateSeries::monomial(qmax, zmax, n, 1, 1);
        term.div_pochhammer(2, 1, Count::Finite(n as i64 - 1))?;
        total.add_assign(&term)?;
    }
    for n in 1..=qmax {
        let mut term = crank_inner_sum(n, n + 1, None, qmax, zmax)?.shift(n, 0);
        term.div_pochhammer(2, 1, Count::Finite(n as i64 - 1))?;
        total.add_assign(&term)?;
    }
    Ok(total)
}

/// `1/(q^2;q)_{n-1}` or `1/(q;q)_m` as a `q`-only series.
fn q_only_reciprocal(aq: i64, count: usize, qmax: usize) -> Result<BivariateSeries> {
    let mut s = BivariateSeries::one(qmax, 0);
    s.div_pochhammer(aq, 0, Count::Finite(count as i64))?;
    Ok(s)
}

/// The crank generating function
/// `(1-q) + Σ_{n≥1} q^n y^n/(q^2;q)_{n-1}
///  + Σ_{n≥1} q^n y^{-n}/(q^2;q)_{n-1} Σ_{m≥0} q^{m(n+1)} y^m/(q;q)_m`.
///
/// For `a >= 2` the coefficient of `q^a y^c` counts partitions of `a` with
/// crank `c`; at `q^1` it is `y^{-1} - 1 + y`.
pub fn gf_crank_trivariate(qmax: usize) -> Result<TrivariateCrankSeries> {
    let mut out = TrivariateCrankSeries::zero(qmax);
    out.add_term(0, 0, 1)?;
    out.add_term(1, 0, -1)?;

    let q_fact: Vec<BivariateSeries> = (0..=qmax)
        .map(|m| q_only_reciprocal(1, m, qmax))
        .collect::<Result<_>>()?;

    for n in 1..=qmax {
        let big = q_only_reciprocal(2, n - 1, qmax)?;
        for a in 0..=qmax - n {
            out.add_term(a + n, n as i64, big.get(a, 0))?;
        }
        let mut m = 0;
        while n + m * (n + 1) <= qmax {
            let shift = n + m * (n + 1);
            let series = big.mul(&q_fact[m])?;
            let c = m as i64 - n as i64;
            for a in 0..=qmax - shift {
                out.add_term(a + shift, c, series.get(a, 0))?;
            }
            m += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_series_coefficients() {
        let e = e_series(12, 4).unwrap();
        assert_eq!(e.get(8, 1), 5);
        assert_eq!(e.get(9, 2), 5);
        for n in 1..=12 {
            assert_eq!(e.get(n, 0), 1, "q^{n}");
        }
        assert_eq!(e.get(0, 0), 0);
    }

    #[test]
    fn direct_sums_small_coefficients() {
        let x = gf_even_mex_direct(10, 4).unwrap();
        assert_eq!(x.get(1, 0), 1);
        assert_eq!(x.get(8, 3), 1);
        let f = gf_fixed_point_direct(10, 4).unwrap();
        assert_eq!(f.get(8, 2), 5);
        for m in 1..=10 {
            assert_eq!(f.get(m, 1), 1);
        }
        let neg = gf_neg_crank_direct(10, 4).unwrap();
        assert_eq!(neg.get(8, 1), 5);
        assert_eq!(neg.get(1, 0), 1);
        let pos = gf_pos_crank_direct(10, 4).unwrap();
        assert_eq!(pos.get(8, 2), 5);
        for m in 1..=10 {
            assert_eq!(pos.get(m, 1), 1);
        }
    }

    #[test]
    fn crank_series_low_order() {
        let c = gf_crank_trivariate(8).unwrap();
        assert_eq!(c.get(0, 0), 1);
        let q1: Vec<(i64, i64)> = c.q_coefficient(1).into_iter().filter(|&(_, v)| v != 0).collect();
        assert_eq!(q1, vec![(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(c.get(7, -1), 2);
        assert_eq!(c.get(7, 1), 2);
        assert!(c.crank_bounded());
    }
}
