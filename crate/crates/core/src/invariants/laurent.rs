use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Integer Laurent polynomial in one variable `t`.
///
/// Stored as the exponent of the lowest term plus a dense coefficient list
/// with no zero at either end; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(0, vec![BigInt::from(c)])
    }

    /// `c · t^e`.
    pub fn monomial(c: i64, e: i64) -> Self {
        Self::new(e, vec![BigInt::from(c)])
    }

    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    /// Coefficients starting at `t^low`.
    pub fn from_i64(low: i64, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let idx = e - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Coefficients from the lowest term up.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn invert_variable(&self) -> Self {
        match self.high_exponent() {
            None => self.clone(),
            Some(high) => Self { low: -high, coeffs: self.coeffs.iter().rev().cloned().collect() },
        }
    }

    pub fn eval(&self, t: i64) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if t == 0 && self.low < 0 {
            return None;
        }
        let t = BigInt::from(t);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &t + c;
        }
        if self.low >= 0 {
            Some(acc * num_traits::pow(t, self.low as usize))
        } else {
            let d = num_traits::pow(t, (-self.low) as usize);
            (&acc % &d).is_zero().then(|| acc / d)
        }
    }

    /// Exact quotient `self / divisor`, or `None` if it does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead = divisor.coeffs.last().unwrap();
        let dlen = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return None;
        }
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let q = top / lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.low - divisor.low, quot))
    }

    /// Representative of `±t^k · self` with lowest exponent 0 and positive
    /// constant term. Zero stays zero.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        if coeffs[0].is_negative() {
            coeffs.iter_mut().for_each(|c| *c = -c.clone());
        }
        Self { low: 0, coeffs }
    }

    /// Equality up to units `±t^k`.
    pub fn associate(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exponent().unwrap().max(rhs.high_exponent().unwrap());
        let coeffs = (low..=high).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPolynomial::new(low, coeffs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: Self) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial::new(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;

            fn $m(self, rhs: Self) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPolynomial {
    /// Terms in increasing degree: `1 - 1*t + 1*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*t")?,
                _ => write!(f, "{mag}*t^{e}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("cannot read polynomial term `{0}`")]
pub struct PolynomialParseError(pub String);

impl FromStr for LaurentPolynomial {
    type Err = PolynomialParseError;

    /// Reads sums of terms `c`, `c*t`, `c*t^e`, `t`, `t^e`, with `+`/`-`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolynomialParseError(s.to_string()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            let after_caret = i > 0 && compact.as_bytes()[i - 1] == b'^';
            if (ch == '+' || ch == '-') && i > start && !after_caret {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = Self::zero();
        for term in terms {
            let bad = || PolynomialParseError(term.to_string());
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (coeff, exp) = match body.split_once('t') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some((c, rest)) => {
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let coeff = if c.is_empty() { BigInt::one() } else { c.parse::<BigInt>().map_err(|_| bad())? };
                    let exp = match rest {
                        "" => 1,
                        r => r.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?,
                    };
                    (coeff, exp)
                }
            };
            let coeff = if negative { -coeff } else { coeff };
            acc = &acc + &Self::new(exp, vec![coeff]);
        }
        Ok(acc)
    }
}
