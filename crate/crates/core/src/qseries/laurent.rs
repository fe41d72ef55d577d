use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact polynomial in `q` and `q^{-1}` with integer coefficients.
///
/// No zero coefficient is ever stored, so structural equality is equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c · q^e`.
    pub fn monomial(e: i64, c: i64) -> Self {
        let mut p = Self::zero();
        if c != 0 {
            p.terms.insert(e, c);
        }
        p
    }

    /// `Σ coeffs[i] q^i`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(e, &c)| (e as i64, c))
            .collect();
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i64, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let cur = self.coeff(e);
        let v = cur.checked_add(c).ok_or(Error::Overflow("Laurent addition"))?;
        if v == 0 {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, v);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<Self> {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(e, c.checked_mul(k).ok_or(Error::Overflow("Laurent scaling"))?)?;
        }
        Ok(out)
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&x, &c)| (x + e, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let c = c1.checked_mul(c2).ok_or(Error::Overflow("Laurent product"))?;
                out.add_term(e1 + e2, c)?;
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`; fails when the remainder is nonzero or
    /// the divisor's top coefficient does not divide evenly.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (dlow, dtop) = match (divisor.min_degree(), divisor.max_degree()) {
            (Some(l), Some(t)) => (l, t),
            _ => return Err(Error::InexactDivision),
        };
        let lead = divisor.coeff(dtop);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_degree() {
            let low = rem.min_degree().unwrap_or(top);
            if top - dtop < low - dlow {
                return Err(Error::InexactDivision);
            }
            let c = rem.coeff(top);
            if c % lead != 0 {
                return Err(Error::InexactDivision);
            }
            let term = Self::monomial(top - dtop, c / lead);
            rem = rem.sub(&divisor.mul(&term)?)?;
            quot = quot.add(&term)?;
        }
        Ok(quot)
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Result<i64> {
        self.terms()
            .try_fold(0i64, |acc, (_, c)| acc.checked_add(c))
            .ok_or(Error::Overflow("Laurent evaluation"))
    }
}

/// `(c q^e; q)_n = Π_{i<n} (1 - c q^{e+i})` as an exact Laurent polynomial.
pub fn laurent_pochhammer(c: i64, e: i64, n: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::UndefinedPochhammer(n));
    }
    let mut out = LaurentPoly::one();
    for i in 0..n {
        let factor = LaurentPoly::one().sub(&LaurentPoly::monomial(e + i, c))?;
        out = out.mul(&factor)?;
    }
    Ok(out)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ if a == 1 => write!(f, "q^{e}")?,
                _ => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}
