//! Exact checks of the finite and windowed identities that take the
//! positive-crank generating function to `z E(z,q)`.
//!
//! Each check is split into a `*_sides` builder returning both sides and a
//! boolean wrapper, so tests can corrupt one side and confirm the comparison
//! notices.

use super::bivariate::{BivariateSeries, Count};
use super::gf::e_series;
use super::laurent::{laurent_pochhammer, LaurentPoly};
use super::qbinom::qbinom;
use crate::error::{Error, Result};

fn tri(n: i64) -> i64 {
    n * (n + 1) / 2
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Left side of the auxiliary identity
/// `zq + Σ_{n≥2} zq^n/(zq^2;q)_{n-1} - (1-zq) Σ_{m≥1} z^m q^m/(q;q)_m`;
/// the right side is zero.
pub fn aux_zero_lhs(qmax: usize, zmax: usize) -> Result<BivariateSeries> {
    let mut lhs = BivariateSeries::monomial(qmax, zmax, 1, 1, 1);
    for n in 2..=qmax {
        let mut t = BivariateSeries::monomial(qmax, zmax, n, 1, 1);
        t.div_pochhammer(2, 1, Count::Finite(n as i64 - 1))?;
        lhs.add_assign(&t)?;
    }
    let mut euler = BivariateSeries::zero(qmax, zmax);
    for m in 1..=qmax.min(zmax) {
        let mut t = BivariateSeries::monomial(qmax, zmax, m, m, 1);
        t.div_pochhammer(1, 0, Count::Finite(m as i64))?;
        euler.add_assign(&t)?;
    }
    euler.mul_factor(1, 1)?;
    lhs.sub(&euler)
}

pub fn aux_zero_identity_check(qmax: usize, zmax: usize) -> Result<bool> {
    Ok(aux_zero_lhs(qmax, zmax)?.is_zero())
}

/// Which Pochhammer sits under the double sum in [`dgoal_sides`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DgoalVariant {
    /// `(zq;q)_n`, the true identity
    Exact,
    /// `(zq^2;q)_n`, a deliberate mutation
    ShiftedPochhammer,
}

/// Both sides of
/// `(1-zq) Σ_{n≥0} Σ_{m≥n+1} z^m q^{mn+m+n} / ((zq;q)_n (q;q)_m) = z E(z,q)`.
pub fn dgoal_sides(
    qmax: usize,
    zmax: usize,
    variant: DgoalVariant,
) -> Result<(BivariateSeries, BivariateSeries)> {
    let base = match variant {
        DgoalVariant::Exact => 1,
        DgoalVariant::ShiftedPochhammer => 2,
    };
    let mut lhs = BivariateSeries::zero(qmax, zmax);
    let mut n = 0;
    // smallest exponent in row n is at m = n+1
    while (n + 1) * n + (n + 1) + n <= qmax {
        let mut row = BivariateSeries::zero(qmax, zmax);
        let mut m = n + 1;
        while m * n + m + n <= qmax && m <= zmax {
            let mut t = BivariateSeries::monomial(qmax, zmax, m * n + m + n, m, 1);
            t.div_pochhammer(1, 0, Count::Finite(m as i64))?;
            row.add_assign(&t)?;
            m += 1;
        }
        row.div_pochhammer(base, 1, Count::Finite(n as i64))?;
        lhs.add_assign(&row)?;
        n += 1;
    }
    lhs.mul_factor(1, 1)?;
    let rhs = e_series(qmax, zmax)?.shift(0, 1);
    Ok((lhs, rhs))
}

pub fn dgoal_rewritten_check(qmax: usize, zmax: usize) -> Result<bool> {
    let (lhs, rhs) = dgoal_sides(qmax, zmax, DgoalVariant::Exact)?;
    Ok(lhs == rhs)
}

/// The `z^N` coefficient, as a `q`-series up to `qmax`, of
/// `Σ_{n≥0} Σ_{m≥n+1} z^m q^{mn+m+n}/(q;q)_m · (zq^{n+1};q)_∞` (left) and of
/// `(-1)^{N-1} q^{C(N+1,2)} / (1-q)` (right).
pub fn coeff_zn_sides(big_n: usize, qmax: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    if big_n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    let zmax = big_n;
    let mut total = BivariateSeries::zero(qmax, zmax);
    let mut n = 0;
    while (n + 1) * n + (n + 1) + n <= qmax {
        let mut row = BivariateSeries::zero(qmax, zmax);
        let mut m = n + 1;
        while m * n + m + n <= qmax && m <= zmax {
            let mut t = BivariateSeries::monomial(qmax, zmax, m * n + m + n, m, 1);
            t.div_pochhammer(1, 0, Count::Finite(m as i64))?;
            row.add_assign(&t)?;
            m += 1;
        }
        row.mul_pochhammer(n as i64 + 1, 1, Count::Infinite)?;
        total.add_assign(&row)?;
        n += 1;
    }
    let lhs = total.z_coefficient(big_n);

    let mut rhs = vec![0i64; qmax + 1];
    let start = tri(big_n as i64) as usize;
    let s = sign(big_n as i64 - 1);
    for c in rhs.iter_mut().skip(start) {
        *c = s;
    }
    Ok((lhs, rhs))
}

pub fn coeff_zn_identity_check(big_n: usize, qmax: usize) -> Result<bool> {
    let (lhs, rhs) = coeff_zn_sides(big_n, qmax)?;
    Ok(lhs == rhs)
}

/// Both sides of
/// `Σ_{m=0}^{M} [N m] (-1)^m q^{C(m,2)} = (-1)^M q^{C(M+1,2)} [N-1 M]`.
pub fn lemma3_sides(big_n: u32, big_m: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    if big_n == 0 || big_m < 0 || big_m > big_n as i64 - 1 {
        return Err(Error::OutOfRange(format!(
            "need N >= 1 and 0 <= M <= N-1, got N={big_n}, M={big_m}"
        )));
    }
    let mut lhs = LaurentPoly::zero();
    for m in 0..=big_m {
        let term = qbinom(big_n, m)?
            .value
            .shift(choose2(m))
            .scale(sign(m))?;
        lhs = lhs.add(&term)?;
    }
    let rhs = qbinom(big_n - 1, big_m)?
        .value
        .shift(tri(big_m))
        .scale(sign(big_m))?;
    Ok((lhs, rhs))
}

pub fn lemma3_check(big_n: u32, big_m: i64) -> Result<bool> {
    let (lhs, rhs) = lemma3_sides(big_n, big_m)?;
    Ok(lhs == rhs)
}

/// The two Laurent identities for `(q^{-N};q)_{N-1}`:
///
/// * `Σ_{n=0}^{N-1} (-1)^n q^{C(n,2) - nN} [N-1 n] = (q^{-N};q)_{N-1}`
/// * `(q^{-N};q)_{N-1} = (-1)^{N-1} q^{-N(N-1) + C(N-1,2)} (q^2;q)_{N-1}`
///
/// Returned as `[(sum, product), (product, closed form)]`.
pub fn qbt_sides(big_n: u32) -> Result<[(LaurentPoly, LaurentPoly); 2]> {
    if big_n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    let nn = big_n as i64;
    let mut sum = LaurentPoly::zero();
    for n in 0..nn {
        let term = qbinom(big_n - 1, n)?
            .value
            .shift(choose2(n) - n * nn)
            .scale(sign(n))?;
        sum = sum.add(&term)?;
    }
    let product = laurent_pochhammer(1, -nn, nn - 1)?;
    let closed = laurent_pochhammer(1, 2, nn - 1)?
        .shift(-nn * (nn - 1) + choose2(nn - 1))
        .scale(sign(nn - 1))?;
    Ok([(sum, product.clone()), (product, closed)])
}

pub fn qbt_check(big_n: u32) -> Result<bool> {
    Ok(qbt_sides(big_n)?.iter().all(|(l, r)| l == r))
}
