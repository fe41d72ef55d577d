use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of factors in a Pochhammer product `(a;q)_count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Finite(i64),
    Infinite,
}

/// A power series in `q` and `z` truncated to `q^0..=q^qmax`, `z^0..=z^zmax`.
///
/// Coefficients are exact `i64`; every operation checks for overflow.
/// Products keep only the window, which is exact because both gradings are
/// nonnegative.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct BivariateSeries {
    qmax: usize,
    zmax: usize,
    coeff: Vec<i64>,
}

/// Serialized layout: `coeffs[a * (zmax + 1) + b]` is the coefficient of `q^a z^b`.
#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    qmax: usize,
    zmax: usize,
    coeffs: Vec<i64>,
}

impl TryFrom<SeriesRepr> for BivariateSeries {
    type Error = Error;

    fn try_from(r: SeriesRepr) -> Result<Self> {
        if r.coeffs.len() != (r.qmax + 1) * (r.zmax + 1) {
            return Err(Error::OutOfRange(format!(
                "expected {} coefficients, found {}",
                (r.qmax + 1) * (r.zmax + 1),
                r.coeffs.len()
            )));
        }
        Ok(BivariateSeries {
            qmax: r.qmax,
            zmax: r.zmax,
            coeff: r.coeffs,
        })
    }
}

impl From<BivariateSeries> for SeriesRepr {
    fn from(s: BivariateSeries) -> Self {
        SeriesRepr {
            qmax: s.qmax,
            zmax: s.zmax,
            coeffs: s.coeff,
        }
    }
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("series addition"))
}

fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow("series subtraction"))
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("series multiplication"))
}

impl BivariateSeries {
    pub fn zero(qmax: usize, zmax: usize) -> Self {
        BivariateSeries {
            qmax,
            zmax,
            coeff: vec![0; (qmax + 1) * (zmax + 1)],
        }
    }

    pub fn one(qmax: usize, zmax: usize) -> Self {
        Self::monomial(qmax, zmax, 0, 0, 1)
    }

    /// `c · q^a z^b`, or zero when the monomial lies outside the window.
    pub fn monomial(qmax: usize, zmax: usize, a: usize, b: usize, c: i64) -> Self {
        let mut s = Self::zero(qmax, zmax);
        if a <= qmax && b <= zmax {
            s.coeff[a * (zmax + 1) + b] = c;
        }
        s
    }

    pub fn qmax(&self) -> usize {
        self.qmax
    }

    pub fn zmax(&self) -> usize {
        self.zmax
    }

    pub fn window(&self) -> (usize, usize) {
        (self.qmax, self.zmax)
    }

    #[inline]
    fn idx(&self, a: usize, b: usize) -> usize {
        a * (self.zmax + 1) + b
    }

    /// Coefficient of `q^a z^b`; zero outside the window.
    pub fn get(&self, a: usize, b: usize) -> i64 {
        if a <= self.qmax && b <= self.zmax {
            self.coeff[self.idx(a, b)]
        } else {
            0
        }
    }

    pub fn set(&mut self, a: usize, b: usize, c: i64) {
        assert!(a <= self.qmax && b <= self.zmax, "({a}, {b}) outside window");
        let i = self.idx(a, b);
        self.coeff[i] = c;
    }

    /// Adds `c` to the coefficient of `q^a z^b`; ignored outside the window.
    pub fn add_term(&mut self, a: usize, b: usize, c: i64) -> Result<()> {
        if a <= self.qmax && b <= self.zmax {
            let i = self.idx(a, b);
            self.coeff[i] = add(self.coeff[i], c)?;
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.iter().all(|&c| c == 0)
    }

    /// Row-major coefficients, `q` outer and `z` inner.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeff
    }

    /// The coefficient of `z^b` as a series in `q`, indexed by exponent.
    pub fn z_coefficient(&self, b: usize) -> Vec<i64> {
        (0..=self.qmax).map(|a| self.get(a, b)).collect()
    }

    fn check_window(&self, other: &Self) -> Result<()> {
        if self.window() != other.window() {
            return Err(Error::WindowMismatch(self.window(), other.window()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_window(other)?;
        let coeff = self
            .coeff
            .iter()
            .zip(&other.coeff)
            .map(|(&x, &y)| add(x, y))
            .collect::<Result<_>>()?;
        Ok(BivariateSeries { coeff, ..*self })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_window(other)?;
        let coeff = self
            .coeff
            .iter()
            .zip(&other.coeff)
            .map(|(&x, &y)| sub(x, y))
            .collect::<Result<_>>()?;
        Ok(BivariateSeries { coeff, ..*self })
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_window(other)?;
        for (x, &y) in self.coeff.iter_mut().zip(&other.coeff) {
            *x = add(*x, y)?;
        }
        Ok(())
    }

    pub fn scale(&self, c: i64) -> Result<Self> {
        let coeff = self.coeff.iter().map(|&x| mul(x, c)).collect::<Result<_>>()?;
        Ok(BivariateSeries { coeff, ..*self })
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_window(other)?;
        let mut out = Self::zero(self.qmax, self.zmax);
        for a1 in 0..=self.qmax {
            for b1 in 0..=self.zmax {
                let x = self.coeff[self.idx(a1, b1)];
                if x == 0 {
                    continue;
                }
                for a2 in 0..=self.qmax - a1 {
                    for b2 in 0..=self.zmax - b1 {
                        let y = other.coeff[other.idx(a2, b2)];
                        if y == 0 {
                            continue;
                        }
                        let i = out.idx(a1 + a2, b1 + b2);
                        out.coeff[i] = add(out.coeff[i], mul(x, y)?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by the monomial `q^a z^b`, dropping what leaves the window.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.qmax, self.zmax);
        for a1 in 0..=self.qmax.saturating_sub(a) {
            for b1 in 0..=self.zmax.saturating_sub(b) {
                if a1 + a <= self.qmax && b1 + b <= self.zmax {
                    let i = out.idx(a1 + a, b1 + b);
                    out.coeff[i] = self.coeff[self.idx(a1, b1)];
                }
            }
        }
        out
    }

    /// In place: `self *= 1 - z^bz q^bq`.
    pub fn mul_factor(&mut self, bq: usize, bz: usize) -> Result<()> {
        if bq == 0 && bz == 0 {
            self.coeff.iter_mut().for_each(|c| *c = 0);
            return Ok(());
        }
        // descending so each source is read before it is overwritten
        for a in (bq..=self.qmax).rev() {
            for b in (bz..=self.zmax).rev() {
                let src = self.coeff[self.idx(a - bq, b - bz)];
                let i = self.idx(a, b);
                self.coeff[i] = sub(self.coeff[i], src)?;
            }
        }
        Ok(())
    }

    /// In place: `self /= 1 - z^bz q^bq`, expanding the geometric series.
    pub fn div_factor(&mut self, bq: usize, bz: usize) -> Result<()> {
        if bq == 0 && bz == 0 {
            return Err(Error::NonInvertible { bq, bz });
        }
        for a in bq..=self.qmax {
            for b in bz..=self.zmax {
                let src = self.coeff[self.idx(a - bq, b - bz)];
                let i = self.idx(a, b);
                self.coeff[i] = add(self.coeff[i], src)?;
            }
        }
        Ok(())
    }

    /// In place: `self *= (z^az q^aq; q)_count`.
    pub fn mul_pochhammer(&mut self, aq: i64, az: usize, count: Count) -> Result<()> {
        for e in self.pochhammer_exponents(aq, az, count)? {
            self.mul_factor(e, az)?;
        }
        Ok(())
    }

    /// In place: `self /= (z^az q^aq; q)_count`.
    pub fn div_pochhammer(&mut self, aq: i64, az: usize, count: Count) -> Result<()> {
        for e in self.pochhammer_exponents(aq, az, count)? {
            self.div_factor(e, az)?;
        }
        Ok(())
    }

    /// q-exponents of the factors of `(z^az q^aq; q)_count` that can affect the window.
    fn pochhammer_exponents(&self, aq: i64, az: usize, count: Count) -> Result<Vec<usize>> {
        if az > 1 {
            return Err(Error::OutOfRange(format!("z exponent {az} in Pochhammer base")));
        }
        let n = match count {
            Count::Finite(n) if n < 0 => return Err(Error::UndefinedPochhammer(n)),
            Count::Finite(n) => n,
            Count::Infinite => (self.qmax as i64 - aq + 1).max(0),
        };
        if n > 0 && aq < 0 {
            return Err(Error::OutOfRange(format!(
                "negative q exponent {aq}; use LaurentPoly"
            )));
        }
        if az > self.zmax {
            return Ok(Vec::new());
        }
        Ok((0..n)
            .map(|i| aq + i)
            .filter(|&e| e as usize <= self.qmax)
            .map(|e| e as usize)
            .collect())
    }

    /// Coefficients that differ from `expected`, as `(a, b, expected, got)`.
    pub fn mismatches(&self, expected: &Self) -> Result<Vec<(usize, usize, i64, i64)>> {
        self.check_window(expected)?;
        let mut out = Vec::new();
        for a in 0..=self.qmax {
            for b in 0..=self.zmax {
                let (e, g) = (expected.get(a, b), self.get(a, b));
                if e != g {
                    out.push((a, b, e, g));
                }
            }
        }
        Ok(out)
    }
}

/// `1 / (1 - z^bz q^bq)` on the window.
pub fn geom_inverse(bq: usize, bz: usize, qmax: usize, zmax: usize) -> Result<BivariateSeries> {
    let mut s = BivariateSeries::one(qmax, zmax);
    s.div_factor(bq, bz)?;
    Ok(s)
}

/// `(z^az q^aq; q)_count` on the window; `count = 0` gives 1.
pub fn pochhammer(
    aq: i64,
    az: usize,
    count: Count,
    qmax: usize,
    zmax: usize,
) -> Result<BivariateSeries> {
    let mut s = BivariateSeries::one(qmax, zmax);
    s.mul_pochhammer(aq, az, count)?;
    Ok(s)
}

impl fmt::Debug for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariateSeries[q<={}, z<={}] ", self.qmax, self.zmax)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in 0..=self.qmax {
            for b in 0..=self.zmax {
                let c = self.get(a, b);
                if c == 0 {
                    continue;
                }
                if !first {
                    f.write_str(if c < 0 { " - " } else { " + " })?;
                } else if c < 0 {
                    f.write_str("-")?;
                }
                first = false;
                write!(f, "{}·q^{a}·z^{b}", c.abs())?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn one_plus_q_times_one_minus_q() {
        let mut a = BivariateSeries::one(4, 1);
        a.add_term(1, 0, 1).unwrap();
        let mut b = BivariateSeries::one(4, 1);
        b.add_term(1, 0, -1).unwrap();
        let c = a.mul(&b).unwrap();
        let mut want = BivariateSeries::one(4, 1);
        want.add_term(2, 0, -1).unwrap();
        assert_eq!(c, want);
        assert!(BivariateSeries::zero(4, 1).mul(&a).unwrap().is_zero());
    }

    #[test]
    fn window_mismatch_and_overflow() {
        let a = BivariateSeries::one(3, 1);
        let b = BivariateSeries::one(4, 1);
        assert_eq!(a.add(&b), Err(Error::WindowMismatch((3, 1), (4, 1))));
        let big = BivariateSeries::monomial(2, 0, 0, 0, i64::MAX);
        assert!(matches!(big.add(&big), Err(Error::Overflow(_))));
        assert!(matches!(big.scale(2), Err(Error::Overflow(_))));
    }

    #[test]
    fn geometric_inverses() {
        let g = geom_inverse(1, 0, 10, 2).unwrap();
        for a in 0..=10 {
            assert_eq!(g.get(a, 0), 1);
            assert_eq!(g.get(a, 1), 0);
        }
        let g = geom_inverse(2, 1, 10, 3).unwrap();
        for a in 0..=10 {
            for b in 0..=3 {
                assert_eq!(g.get(a, b), i64::from(a == 2 * b), "({a},{b})");
            }
        }
        assert_eq!(
            geom_inverse(0, 0, 5, 5).unwrap_err(),
            Error::NonInvertible { bq: 0, bz: 0 }
        );
        let g = geom_inverse(0, 1, 3, 4).unwrap();
        assert_eq!(g.z_coefficient(4), vec![1, 0, 0, 0]);
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(
            pochhammer(1, 0, Count::Finite(0), 10, 2).unwrap(),
            BivariateSeries::one(10, 2)
        );
        let zq2 = pochhammer(2, 1, Count::Infinite, 10, 2).unwrap();
        assert_eq!(zq2.get(2, 1), -1);
        assert_eq!(zq2.get(0, 0), 1);
        // (q^2;q)_2 = 1 - q^2 - q^3 + q^5
        let p = pochhammer(2, 0, Count::Finite(2), 10, 0).unwrap();
        assert_eq!(p.z_coefficient(0), vec![1, 0, -1, -1, 0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(
            pochhammer(1, 0, Count::Finite(-1), 10, 0).unwrap_err(),
            Error::UndefinedPochhammer(-1)
        );
    }

    #[test]
    fn euler_pentagonal_product() {
        let p = pochhammer(1, 0, Count::Infinite, 30, 0).unwrap();
        let mut want = vec![0i64; 31];
        for k in -5i64..=5 {
            let e = k * (3 * k - 1) / 2;
            if (0..=30).contains(&e) {
                want[e as usize] = if k % 2 == 0 { 1 } else { -1 };
            }
        }
        assert_eq!(p.z_coefficient(0), want);
    }

    #[test]
    fn json_layout() {
        let s = BivariateSeries::monomial(1, 1, 1, 0, 7);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"qmax":1,"zmax":1,"coeffs":[0,0,7,0]}"#);
        let back: BivariateSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<BivariateSeries>(r#"{"qmax":1,"zmax":1,"coeffs":[0]}"#).is_err());
    }

    fn arb_series(qmax: usize, zmax: usize) -> impl Strategy<Value = BivariateSeries> {
        prop::collection::vec(-50i64..50, (qmax + 1) * (zmax + 1)).prop_map(move |coeffs| {
            BivariateSeries::try_from(SeriesRepr { qmax, zmax, coeffs }).unwrap()
        })
    }

    proptest! {
        #[test]
        fn product_matches_brute_force_convolution(a in arb_series(6, 3), b in arb_series(6, 3)) {
            let c = a.mul(&b).unwrap();
            for qa in 0..=6 {
                for zb in 0..=3 {
                    let mut want = 0i64;
                    for i in 0..=qa {
                        for j in 0..=zb {
                            want += a.get(i, j) * b.get(qa - i, zb - j);
                        }
                    }
                    prop_assert_eq!(c.get(qa, zb), want);
                }
            }
        }

        #[test]
        fn division_undoes_factor(a in arb_series(8, 3), bq in 0usize..4, bz in 0usize..2) {
            prop_assume!(bq + bz > 0);
            let mut s = a.clone();
            s.mul_factor(bq, bz).unwrap();
            s.div_factor(bq, bz).unwrap();
            prop_assert_eq!(s, a);
        }
    }
}
