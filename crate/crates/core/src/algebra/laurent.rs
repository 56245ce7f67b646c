use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Integer Laurent polynomial in one variable `t`.
///
/// Terms are kept in a sorted map with no zero coefficients, so equality is
/// term-exact and iteration is in ascending exponent order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(coefficient: impl Into<BigInt>, exponent: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coefficient.into());
        p
    }

    /// `coefficients[k]` is the coefficient of `t^(lowest + k)`.
    pub fn from_coefficients(lowest: i64, coefficients: &[i64]) -> Self {
        Self::from_terms(coefficients.iter().enumerate().map(|(k, &c)| (lowest + k as i64, BigInt::from(c))))
    }

    /// Sums `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// `p(t^-1)`.
    pub fn reflected(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reflected()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact second derivative at `t = 1`: the sum of `c_i * i * (i - 1)`.
    pub fn second_derivative_at_one(&self) -> BigInt {
        self.terms.iter().map(|(&e, c)| c * BigInt::from(e) * BigInt::from(e - 1)).sum()
    }

    /// The unit multiple with lowest exponent 0 whose value at 1 is
    /// nonnegative (lowest coefficient positive when the value is 0).
    pub fn normalized_polynomial(&self) -> Self {
        let Some(low) = self.min_exponent() else {
            return Self::zero();
        };
        let shifted = self.shifted(-low);
        let value = shifted.eval_at_one();
        let negate = value.is_negative() || (value.is_zero() && shifted.terms[&0].is_negative());
        if negate {
            -shifted
        } else {
            shifted
        }
    }

    /// Whether `self = ±t^k * other` for some `k`.
    pub fn associate_of(&self, other: &LaurentPoly) -> bool {
        match (self.min_exponent(), other.min_exponent()) {
            (None, None) => true,
            (Some(a), Some(b)) => {
                let s = self.shifted(-a);
                let o = other.shifted(-b);
                s == o || s == -o
            }
            _ => false,
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder or the divisor is zero.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (d_low, d_high) = (divisor.min_exponent()?, divisor.max_exponent()?);
        let lead = &divisor.terms[&d_high];
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero();
        while let Some(r_high) = rem.max_exponent() {
            if r_high - d_high < rem.min_exponent()? - d_low {
                return None;
            }
            let c = &rem.terms[&r_high];
            if !(c % lead).is_zero() {
                return None;
            }
            let step = LaurentPoly::monomial(c / lead, r_high - d_high);
            rem = &rem - &(&step * divisor);
            quotient = &quotient + &step;
        }
        Some(quotient)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

macro_rules! owned_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_binop!(Add add, Sub sub, Mul mul);

/// Ascending exponents: `t^-2 - 2t^-1 + 3 - 2t + t^2`. Zero prints as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            f.write_str("t")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
