use serde::{Deserialize, Serialize};

use super::laurent::{laurent_pochhammer, LaurentPoly};
use crate::error::Result;

/// The Gaussian binomial coefficient `[a choose b]_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QBinomial {
    pub a: u32,
    pub b: i64,
    pub value: LaurentPoly,
}

/// `(q;q)_n` as a polynomial.
pub fn q_factorial(n: u32) -> Result<LaurentPoly> {
    laurent_pochhammer(1, 1, n as i64)
}

/// `(q;q)_a / ((q;q)_b (q;q)_{a-b})` by exact division, zero unless `0 <= b <= a`.
pub fn qbinom(a: u32, b: i64) -> Result<QBinomial> {
    let value = if b < 0 || b > a as i64 {
        LaurentPoly::zero()
    } else {
        let b = b as u32;
        let den = q_factorial(b)?.mul(&q_factorial(a - b)?)?;
        q_factorial(a)?.div_exact(&den)?
    };
    Ok(QBinomial { a, b, value })
}
