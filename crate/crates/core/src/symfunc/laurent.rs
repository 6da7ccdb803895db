use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An integer Laurent polynomial in `t^{1/2}`.
///
/// Exponents are counted in half-steps: key `k` stands for `t^{k/2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentT {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentT {
    pub fn zero() -> Self {
        LaurentT::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial_half(0, c)
    }

    /// `c · t^k` for an integer power `k`.
    pub fn monomial(k: i64, c: impl Into<BigInt>) -> Self {
        Self::monomial_half(2 * k, c)
    }

    /// `c · t^{k/2}`.
    pub fn monomial_half(half: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(half, c);
        }
        LaurentT { terms }
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(k, 1)
    }

    /// Build from integer-power coefficients `c_0 + c_1 t + c_2 t² + ⋯`.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut out = LaurentT::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            out.add_term(2 * k as i64, c.into());
        }
        out
    }

    /// Build from `(half-exponent, coefficient)` pairs, summing repeats.
    pub fn from_half_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut out = LaurentT::zero();
        for (h, c) in pairs {
            out.add_term(h, c);
        }
        out
    }

    pub fn add_term(&mut self, half: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(half).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&half);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterate `(half-exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t^{half/2}`.
    pub fn coeff_half(&self, half: i64) -> BigInt {
        self.terms.get(&half).cloned().unwrap_or_default()
    }

    pub fn min_half(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_half(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn only_integer_powers(&self) -> bool {
        self.terms.keys().all(|k| k % 2 == 0)
    }

    /// Multiply by `t^{half/2}`.
    pub fn shift_half(&self, half: i64) -> LaurentT {
        LaurentT {
            terms: self.terms.iter().map(|(k, c)| (k + half, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentT {
        if c.is_zero() {
            return LaurentT::zero();
        }
        LaurentT {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// `t^{center/2} · f(1/t) = f(t)`, i.e. `c_k = c_{center−k}`.
    pub fn is_palindromic(&self, center_half: i64) -> bool {
        self.terms
            .iter()
            .all(|(&k, c)| self.terms.get(&(center_half - k)) == Some(c))
    }
}

impl From<i64> for LaurentT {
    fn from(c: i64) -> Self {
        LaurentT::constant(c)
    }
}

impl From<BigInt> for LaurentT {
    fn from(c: BigInt) -> Self {
        LaurentT::constant(c)
    }
}

impl AddAssign<&LaurentT> for LaurentT {
    fn add_assign(&mut self, rhs: &LaurentT) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl SubAssign<&LaurentT> for LaurentT {
    fn sub_assign(&mut self, rhs: &LaurentT) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, -c);
        }
    }
}

impl Add for &LaurentT {
    type Output = LaurentT;

    fn add(self, rhs: &LaurentT) -> LaurentT {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentT {
    type Output = LaurentT;

    fn add(mut self, rhs: LaurentT) -> LaurentT {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentT {
    type Output = LaurentT;

    fn sub(self, rhs: &LaurentT) -> LaurentT {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentT {
    type Output = LaurentT;

    fn sub(mut self, rhs: LaurentT) -> LaurentT {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentT {
    type Output = LaurentT;

    fn neg(self) -> LaurentT {
        LaurentT {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for LaurentT {
    type Output = LaurentT;

    fn neg(self) -> LaurentT {
        -&self
    }
}

impl Mul for &LaurentT {
    type Output = LaurentT;

    fn mul(self, rhs: &LaurentT) -> LaurentT {
        let mut out = LaurentT::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentT {
    type Output = LaurentT;

    fn mul(self, rhs: LaurentT) -> LaurentT {
        &self * &rhs
    }
}

fn fmt_power(var: &str, half: i64) -> String {
    match half {
        0 => String::new(),
        2 => var.to_string(),
        h if h % 2 == 0 => format!("{var}^{}", h / 2),
        h => format!("{var}^({h}/2)"),
    }
}

impl LaurentT {
    /// Render with `var` as the indeterminate.
    pub fn format_in(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (&k, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                out.push('-');
            } else if idx > 0 {
                out.push('+');
            }
            let mag = c.abs();
            let power = fmt_power(var, k);
            if power.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}{power}"));
            }
        }
        out
    }
}

/// Renders like `1+2t+t^2`, `t^-1`, `t^(1/2)`, `-3t^2+1`.
impl fmt::Display for LaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_in("t"))
    }
}

/// `[n]_t = 1 + t + ⋯ + t^{n−1}`.
pub fn t_integer(n: usize) -> LaurentT {
    LaurentT::from_coeffs(std::iter::repeat_n(1, n))
}

/// `[n]_t! = [n]_t [n−1]_t ⋯ [1]_t`.
pub fn t_factorial(n: usize) -> LaurentT {
    (1..=n).fold(LaurentT::one(), |acc, k| &acc * &t_integer(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_examples() {
        assert_eq!(t_factorial(0), LaurentT::one());
        assert_eq!(t_factorial(2), LaurentT::from_coeffs([1, 1]));
        assert_eq!(t_factorial(3), LaurentT::from_coeffs([1, 2, 2, 1]));
        assert_eq!(t_factorial(4).eval_at_one(), BigInt::from(24));
    }

    #[test]
    fn factorial_palindromic() {
        for n in 0..=8 {
            let center = (n * (n.max(1) - 1) / 2) as i64;
            assert!(t_factorial(n).is_palindromic(2 * center), "n={n}");
        }
        assert!(!t_factorial(3).is_palindromic(4));
    }

    #[test]
    fn display() {
        assert_eq!(LaurentT::from_coeffs([1, 2, 1]).to_string(), "1+2t+t^2");
        assert_eq!(LaurentT::t_pow(1).to_string(), "t");
        assert_eq!(LaurentT::t_pow(-1).to_string(), "t^-1");
        assert_eq!(LaurentT::monomial_half(1, 3).to_string(), "3t^(1/2)");
        assert_eq!(LaurentT::from_coeffs([0, -1, 0]).to_string(), "-t");
        assert_eq!((LaurentT::one() - LaurentT::t_pow(1)).to_string(), "1-t");
        assert_eq!(LaurentT::zero().to_string(), "0");
        assert_eq!(LaurentT::from_coeffs([2, 0, -1]).format_in("q"), "2-q^2");
    }

    #[test]
    fn arithmetic() {
        let a = LaurentT::from_coeffs([1, 1]);
        let b = &a * &a;
        assert_eq!(b, LaurentT::from_coeffs([1, 2, 1]));
        assert!((&b - &b).is_zero());
        assert_eq!(a.shift_half(-2), LaurentT::t_pow(-1) + LaurentT::one());
        assert!(!LaurentT::from_coeffs([1, -1]).is_nonnegative());
        // t + 2t² + t³ is symmetric about t²
        assert!(LaurentT::from_coeffs([0, 1, 2, 1]).is_palindromic(8));
    }
}
