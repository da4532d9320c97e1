//! Exact lower-bound formulas, in arbitrary precision.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaTag {
    /// `2^{n-3}` for 2-edge-connected graphs.
    TwoConnected,
    /// `(n-2)!` for `K_n`.
    Complete,
    /// `(n-2)!(n-3)!` for `K_2 x K_{n-1}`.
    Prism,
    /// `sf(k-1)` for order three.
    OrderThree,
    /// `(n-2)! 2^{C(n-1,2)}` for 3-edge-connected graphs.
    ThreeConnected,
    /// The closed product for `n, k >= 4`.
    ClosedForm,
    /// The superfactorial weakening for `n > k >= 5`.
    Corollary,
    /// `sf(k-1) sf(k-2)` for Catalan minors.
    Catalan,
    /// `((n-r-1)!(r-1)!)^{min(n-r-1, r-1)}`.
    Uniform,
    /// `3 (n-r-1)(r-1)` good cycles per edge.
    UniformGoodCycles,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundValue {
    pub value: BigUint,
    pub formula_tag: FormulaTag,
}

impl BoundValue {
    fn new(value: BigUint, formula_tag: FormulaTag) -> Self {
        BoundValue { value, formula_tag }
    }

    /// `value` as a `u64` when it fits.
    pub fn as_u64(&self) -> Option<u64> {
        u64::try_from(&self.value).ok()
    }

    pub fn to_json(&self, params: &[usize]) -> serde_json::Value {
        serde_json::json!({
            "params": params,
            "formula_tag": self.formula_tag,
            "value": self.value.to_string(),
        })
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub fn factorial(x: usize) -> BigUint {
    (1..=x).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `x! (x-1)! ... 0!`.
pub fn superfactorial(x: usize) -> BigUint {
    (0..=x).fold(BigUint::one(), |acc, i| acc * factorial(i))
}

/// Binomial coefficient, zero when `b < 0` or `b > a` or `a < 0`.
pub fn binomial(a: i64, b: i64) -> u64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1))
}

fn pow(base: BigUint, exp: u64) -> BigUint {
    num_traits::pow(base, exp as usize)
}

fn big(x: usize) -> BigUint {
    BigUint::from(x)
}

pub fn bound_2conn(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::BadParams("2^{n-3} needs n >= 3".into()));
    }
    Ok(pow(big(2), (n - 3) as u64))
}

pub fn bound_complete(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::BadParams("(n-2)! needs n >= 3".into()));
    }
    Ok(factorial(n - 2))
}

pub fn bound_prism(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::BadParams("(n-2)!(n-3)! needs n >= 3".into()));
    }
    Ok(factorial(n - 2) * factorial(n - 3))
}

/// The closed product for `n, k >= 4`.
pub fn hc_closed_form(n: usize, k: usize) -> Result<BigUint> {
    if n < 4 || k < 4 {
        return Err(Error::BadParams(format!("closed form needs n, k >= 4, got ({n}, {k})")));
    }
    let (ni, ki) = (n as i64, k as i64);
    let mut num = pow(big(2), binomial(ni + ki - 4, ni - 3)) * pow(big(3), binomial(ni + ki - 7, ki - 3));
    for r in 4..=k {
        let e = binomial(ni + ki - 4 - r as i64, ni - 4);
        num *= pow(big(r) * superfactorial(r - 1), e);
    }
    for s in 4..=n {
        let e = binomial(ni + ki - 4 - s as i64, ki - 4);
        num *= pow(factorial(s - 1), e);
    }
    let den = big((n - 1) * k);
    if !(num.clone() % den.clone()).is_zero() {
        return Err(Error::BadParams(format!("closed form at ({n}, {k}) is not an integer")));
    }
    Ok(num / den)
}

/// Unrolls `R(n,k) = (n-2)(k-1) R(n-1,k) R(n,k-1)` down to the rows `n = 3`
/// and `k = 3`.
pub fn hc_recurrence(n: usize, k: usize) -> Result<BigUint> {
    if n < 3 || k < 3 {
        return Err(Error::BadParams(format!("recurrence needs n, k >= 3, got ({n}, {k})")));
    }
    let mut table = vec![vec![BigUint::zero(); k + 1]; n + 1];
    for i in 3..=n {
        for j in 3..=k {
            table[i][j] = if i == 3 {
                superfactorial(j - 1)
            } else if j == 3 {
                factorial(i - 2) * pow(big(2), binomial(i as i64 - 1, 2))
            } else {
                big((i - 2) * (j - 1)) * &table[i - 1][j] * &table[i][j - 1]
            };
        }
    }
    Ok(table[n][k].clone())
}

/// Lower bound on `HC*` over `k`-edge-connected graphs of order `n`.
pub fn hc_lower(n: usize, k: usize) -> Result<BoundValue> {
    if n < 3 || k < 2 {
        return Err(Error::BadParams(format!("hc(n,k) needs n >= 3, k >= 2, got ({n}, {k})")));
    }
    Ok(if k == 2 {
        BoundValue::new(bound_2conn(n)?, FormulaTag::TwoConnected)
    } else if n == 3 {
        BoundValue::new(superfactorial(k - 1), FormulaTag::OrderThree)
    } else if k == 3 {
        BoundValue::new(
            factorial(n - 2) * pow(big(2), binomial(n as i64 - 1, 2)),
            FormulaTag::ThreeConnected,
        )
    } else {
        BoundValue::new(hc_closed_form(n, k)?, FormulaTag::ClosedForm)
    })
}

/// The superfactorial product, valid for `n > k >= 5` only.
pub fn hc_lower_corollary(n: usize, k: usize) -> Result<BoundValue> {
    if !(n > k && k >= 5) {
        return Err(Error::BadParams(format!("corollary needs n > k >= 5, got ({n}, {k})")));
    }
    let (ni, ki) = (n as i64, k as i64);
    let mut v = BigUint::one();
    for r in 3..=n {
        let ri = r as i64;
        let e = binomial(ni + ki - 5 - ri, ni - 6) + binomial(ni + ki - 4 - ri, ni - 4) + binomial(ni + ki - 5 - ri, ki - 5);
        v *= pow(superfactorial(r - 1), e);
    }
    Ok(BoundValue::new(v, FormulaTag::Corollary))
}

/// `sf(k-1) sf(k-2)`.
pub fn catalan_lower(k: usize) -> Result<BoundValue> {
    if k < 2 {
        return Err(Error::BadParams("hcl(k) needs k >= 2".into()));
    }
    Ok(BoundValue::new(superfactorial(k - 1) * superfactorial(k - 2), FormulaTag::Catalan))
}

/// `L(2) = 1`, `L(k) = (k-1) L(k-1)^2`.
pub fn catalan_recurrence(k: usize) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::BadParams("hcl(k) needs k >= 2".into()));
    }
    let mut v = BigUint::one();
    for j in 3..=k {
        v = big(j - 1) * &v * &v;
    }
    Ok(v)
}

/// Whether one inductive step `(k-1) (sf(k-2) sf(k-3))^2 >= sf(k-1) sf(k-2)`
/// holds. It reduces to `sf(k-3)^2 >= (k-2)!`, which fails for `k = 4, 5`.
pub fn catalan_step_holds(k: usize) -> Result<bool> {
    if k < 3 {
        return Err(Error::BadParams("the inductive step needs k >= 3".into()));
    }
    let step = big(k - 1) * pow(superfactorial(k - 2) * superfactorial(k - 3), 2);
    Ok(step >= catalan_lower(k)?.value)
}

fn check_uniform(r: usize, n: usize) -> Result<()> {
    if !(n > r && r >= 1) {
        return Err(Error::BadParams(format!("U_{{r,n}} needs n > r >= 1, got r={r}, n={n}")));
    }
    Ok(())
}

pub fn uniform_lower(r: usize, n: usize) -> Result<BoundValue> {
    check_uniform(r, n)?;
    let base = factorial(n - r - 1) * factorial(r - 1);
    let e = (n - r - 1).min(r - 1) as u64;
    Ok(BoundValue::new(pow(base, e), FormulaTag::Uniform))
}

pub fn uniform_good_lower(r: usize, n: usize) -> Result<BoundValue> {
    check_uniform(r, n)?;
    Ok(BoundValue::new(big(3 * (n - r - 1) * (r - 1)), FormulaTag::UniformGoodCycles))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn superfactorials() {
        assert_eq!(superfactorial(0), u(1));
        assert_eq!(superfactorial(3), u(12));
        assert_eq!(superfactorial(5), u(34560));
    }

    #[test]
    fn simple_bounds() {
        assert_eq!(bound_2conn(3).unwrap(), u(1));
        assert_eq!(bound_2conn(5).unwrap(), u(4));
        assert_eq!(bound_2conn(8).unwrap(), u(32));
        assert_eq!(bound_complete(5).unwrap(), u(6));
        assert_eq!(bound_prism(3).unwrap(), u(1));
        assert_eq!(bound_prism(4).unwrap(), u(2));
        assert!(bound_2conn(2).is_err());
    }

    #[test]
    fn hc_values() {
        assert_eq!(hc_lower(3, 3).unwrap().value, u(2));
        assert_eq!(hc_lower(4, 3).unwrap().value, u(16));
        assert_eq!(hc_lower(3, 4).unwrap().value, u(12));
        assert_eq!(hc_lower(4, 4).unwrap().value, u(1152));
        assert_eq!(hc_lower(4, 4).unwrap().formula_tag, FormulaTag::ClosedForm);
        assert_eq!(hc_lower(5, 2).unwrap().value, u(4));
        assert!(hc_lower(2, 3).is_err());
    }

    #[test]
    fn closed_form_is_recurrence() {
        for n in 4..=7 {
            for k in 4..=7 {
                assert_eq!(hc_closed_form(n, k).unwrap(), hc_recurrence(n, k).unwrap(), "({n},{k})");
            }
        }
    }

    #[test]
    fn corollary_weaker() {
        for (n, k) in [(6, 5), (7, 5), (7, 6)] {
            assert!(hc_lower_corollary(n, k).unwrap().value < hc_lower(n, k).unwrap().value);
        }
        assert!(hc_lower_corollary(5, 5).is_err());
        assert!(hc_lower_corollary(6, 4).is_err());
    }

    #[test]
    fn catalan_and_uniform() {
        assert_eq!(catalan_lower(2).unwrap().value, u(1));
        assert_eq!(catalan_lower(3).unwrap().value, u(2));
        assert_eq!(catalan_lower(4).unwrap().value, u(24));
        let steps: Vec<bool> = (3..=9).map(|k| catalan_step_holds(k).unwrap()).collect();
        assert_eq!(steps, vec![true, false, false, true, true, true, true]);
        assert_eq!(catalan_recurrence(4).unwrap(), u(12));
        assert_eq!(uniform_lower(2, 4).unwrap().value, u(1));
        assert_eq!(uniform_lower(2, 5).unwrap().value, u(2));
        assert_eq!(uniform_lower(3, 5).unwrap().value, u(2));
        assert_eq!(uniform_lower(3, 6).unwrap().value, u(16));
        assert_eq!(uniform_good_lower(2, 4).unwrap().value, u(3));
        assert!(uniform_lower(4, 4).is_err());
    }

    #[test]
    fn as_u64_roundtrip() {
        assert_eq!(hc_lower(4, 4).unwrap().as_u64(), Some(1152));
        assert_eq!(BoundValue::new(BigUint::zero(), FormulaTag::Uniform).as_u64(), Some(0));
        assert_eq!(BoundValue::new(pow(big(2), 70), FormulaTag::Uniform).as_u64(), None);
    }
}
