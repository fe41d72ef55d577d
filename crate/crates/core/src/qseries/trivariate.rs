use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A series in `q` and `y^{±1}`, truncated at `q^qmax`, with `y`-exponents in
/// `-qmax..=qmax`. The `y`-exponent tracks the crank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivariateCrankSeries {
    qmax: usize,
    /// `coeff[a * (2 qmax + 1) + (c + qmax)]` is the coefficient of `q^a y^c`.
    coeff: Vec<i64>,
}

impl TrivariateCrankSeries {
    pub fn zero(qmax: usize) -> Self {
        TrivariateCrankSeries {
            qmax,
            coeff: vec![0; (qmax + 1) * (2 * qmax + 1)],
        }
    }

    pub fn qmax(&self) -> usize {
        self.qmax
    }

    fn idx(&self, a: usize, c: i64) -> Option<usize> {
        if a > self.qmax || c.unsigned_abs() as usize > self.qmax {
            return None;
        }
        Some(a * (2 * self.qmax + 1) + (c + self.qmax as i64) as usize)
    }

    /// Coefficient of `q^a y^c`; zero outside the window.
    pub fn get(&self, a: usize, c: i64) -> i64 {
        self.idx(a, c).map_or(0, |i| self.coeff[i])
    }

    /// Adds `v` to the coefficient of `q^a y^c`. Terms past `q^qmax` are
    /// dropped; a `y`-exponent beyond `±qmax` at `a <= qmax` is an error.
    pub fn add_term(&mut self, a: usize, c: i64, v: i64) -> Result<()> {
        if a > self.qmax {
            return Ok(());
        }
        let i = self
            .idx(a, c)
            .ok_or_else(|| Error::OutOfRange(format!("y^{c} at q^{a} exceeds window")))?;
        self.coeff[i] = self.coeff[i]
            .checked_add(v)
            .ok_or(Error::Overflow("crank series addition"))?;
        Ok(())
    }

    /// `(crank, coefficient)` pairs of `q^a`, crank ascending.
    pub fn q_coefficient(&self, a: usize) -> Vec<(i64, i64)> {
        let m = self.qmax as i64;
        (-m..=m).map(|c| (c, self.get(a, c))).collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.qmax != other.qmax {
            return Err(Error::WindowMismatch((self.qmax, 0), (other.qmax, 0)));
        }
        let coeff = self
            .coeff
            .iter()
            .zip(&other.coeff)
            .map(|(&x, &y)| x.checked_add(y).ok_or(Error::Overflow("crank series addition")))
            .collect::<Result<_>>()?;
        Ok(TrivariateCrankSeries {
            qmax: self.qmax,
            coeff,
        })
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let coeff = self
            .coeff
            .iter()
            .map(|&x| x.checked_mul(k).ok_or(Error::Overflow("crank series scaling")))
            .collect::<Result<_>>()?;
        Ok(TrivariateCrankSeries {
            qmax: self.qmax,
            coeff,
        })
    }

    /// Truncated product. Exact whenever both factors satisfy `|c| <= a`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.qmax != other.qmax {
            return Err(Error::WindowMismatch((self.qmax, 0), (other.qmax, 0)));
        }
        let m = self.qmax as i64;
        let mut out = Self::zero(self.qmax);
        for a1 in 0..=self.qmax {
            for c1 in -m..=m {
                let x = self.get(a1, c1);
                if x == 0 {
                    continue;
                }
                for a2 in 0..=self.qmax - a1 {
                    for c2 in -m..=m {
                        let y = other.get(a2, c2);
                        if y == 0 {
                            continue;
                        }
                        let v = x.checked_mul(y).ok_or(Error::Overflow("crank series product"))?;
                        out.add_term(a1 + a2, c1 + c2, v)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// True when no coefficient with `|c| > a` is nonzero.
    pub fn crank_bounded(&self) -> bool {
        let m = self.qmax as i64;
        (0..=self.qmax).all(|a| (-m..=m).all(|c| c.unsigned_abs() as usize <= a || self.get(a, c) == 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_monomials() {
        let mut a = TrivariateCrankSeries::zero(4);
        a.add_term(1, -1, 2).unwrap();
        let mut b = TrivariateCrankSeries::zero(4);
        b.add_term(2, 2, 3).unwrap();
        b.add_term(4, 0, 1).unwrap();
        let c = a.mul(&b).unwrap();
        assert_eq!(c.get(3, 1), 6);
        assert_eq!(c.get(5, -1), 0);
        assert!(c.crank_bounded());
    }

    #[test]
    fn out_of_window() {
        let mut a = TrivariateCrankSeries::zero(3);
        assert!(a.add_term(2, 4, 1).is_err());
        a.add_term(7, 0, 1).unwrap();
        assert_eq!(a, TrivariateCrankSeries::zero(3));
        a.add_term(1, 3, 1).unwrap();
        assert!(!a.crank_bounded());
        assert!(a.add(&TrivariateCrankSeries::zero(2)).is_err());
    }
}
