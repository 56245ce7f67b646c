//! Alexander polynomials by Fox calculus, the `f(t) f(t^-1)` factorization
//! of ribbon knots, and the Casson surgery formula
//! `λ(M + 1/m·K) = λ(M) + (m/2) Δ''_K(1)`.
//!
//! Casson's third axiom (boundary links) has no counterpart here: nothing
//! in this crate performs surgery on two-component links.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{fox_derivative, Generator, LaurentPoly, Presentation, Word};
use crate::{Error, Result};

/// Alexander polynomial in its symmetric representative: `p(t) = p(t^-1)`
/// and `p(1) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalizedAlexander(LaurentPoly);

impl NormalizedAlexander {
    /// Picks the unit `±t^k` that makes `p` symmetric with `p(1) = 1`.
    pub fn new(p: &LaurentPoly) -> Result<Self> {
        let value = p.eval_at_one();
        let sign = if value.is_one() {
            BigInt::one()
        } else if value == -BigInt::one() {
            -BigInt::one()
        } else {
            return Err(Error::NotNormalizable(p.to_string()));
        };
        let (low, high) = (p.min_exponent().unwrap_or(0), p.max_exponent().unwrap_or(0));
        if (low + high).is_odd() {
            return Err(Error::NotSymmetric(p.to_string()));
        }
        let centered = &p.shifted(-(low + high) / 2) * &LaurentPoly::monomial(sign, 0);
        if !centered.is_symmetric() {
            return Err(Error::NotSymmetric(p.to_string()));
        }
        Ok(NormalizedAlexander(centered))
    }

    pub fn polynomial(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn second_derivative_at_one(&self) -> BigInt {
        self.0.second_derivative_at_one()
    }
}

impl fmt::Display for NormalizedAlexander {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CassonValue(pub BigInt);

impl fmt::Display for CassonValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Determinant of a square matrix of Laurent polynomials by expansion over
/// column subsets. Fine for the handful of generators seen in practice.
fn determinant(rows: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = rows.len();
    let mut dp = alloc::vec![LaurentPoly::zero(); 1 << n];
    dp[0] = LaurentPoly::one();
    for mask in 0usize..(1 << n) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for col in (0..n).filter(|c| mask & (1 << c) == 0) {
            let entry = &rows[row][col];
            if entry.is_zero() {
                continue;
            }
            let mut term = &dp[mask] * entry;
            if (mask >> (col + 1)).count_ones() % 2 == 1 {
                term = -term;
            }
            let next = mask | (1 << col);
            dp[next] = &dp[next] + &term;
        }
    }
    dp[(1 << n) - 1].clone()
}

/// `t^w - 1`.
fn t_power_minus_one(w: i64) -> LaurentPoly {
    &LaurentPoly::monomial(1, w) - &LaurentPoly::one()
}

/// Alexander polynomial of a deficiency-one presentation, where `weights`
/// sends generator `i` to `t^weights[i]`.
///
/// The Alexander matrix has entries `φ(∂r_i/∂x_j)`. Deleting column `j`
/// gives a minor `D_j` with `D_j (t^{w_k} - 1) = ± D_k (t^{w_j} - 1)`; every
/// such pair is checked. The result is `D_j (t - 1) / (t^{w_j} - 1)` for a
/// column with `|w_j| = 1` when there is one, reported with lowest
/// exponent 0 and nonnegative value at 1.
pub fn alexander_from_presentation(p: &Presentation, weights: &[i64]) -> Result<LaurentPoly> {
    let g = p.generator_count();
    if weights.len() != g {
        return Err(Error::WeightCount { expected: g, found: weights.len() });
    }
    if p.deficiency() != 1 {
        return Err(Error::Deficiency(p.deficiency()));
    }
    for (index, r) in p.relators().iter().enumerate() {
        let sum: i64 = r.exponent_sums().iter().zip(weights).map(|(s, w)| s * w).sum();
        if sum != 0 {
            return Err(Error::NonzeroWeightedSum { index, sum });
        }
    }
    let Some(chosen) = (0..g).find(|&j| weights[j].abs() == 1).or_else(|| (0..g).find(|&j| weights[j] != 0)) else {
        return Err(Error::DegenerateWeights);
    };

    let matrix = alexander_matrix(p.relators(), g, weights)?;
    let minor = |deleted: usize| -> LaurentPoly {
        let rows: Vec<Vec<LaurentPoly>> = matrix
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != deleted).map(|(_, e)| e.clone()).collect())
            .collect();
        determinant(&rows)
    };

    let base = minor(chosen);
    for other in (0..g).filter(|&k| k != chosen && weights[k] != 0) {
        let lhs = &base * &t_power_minus_one(weights[other]);
        let rhs = &minor(other) * &t_power_minus_one(weights[chosen]);
        if !lhs.associate_of(&rhs) {
            return Err(Error::ColumnChoice { first: chosen, second: other });
        }
    }
    let delta = (&base * &t_power_minus_one(1))
        .div_exact(&t_power_minus_one(weights[chosen]))
        .ok_or(Error::ColumnChoice { first: chosen, second: chosen })?;
    Ok(delta.normalized_polynomial())
}

/// Rows are relators, columns generators.
pub fn alexander_matrix(relators: &[Word], rank: usize, weights: &[i64]) -> Result<Vec<Vec<LaurentPoly>>> {
    relators
        .iter()
        .map(|r| (0..rank).map(|j| fox_derivative(r, Generator(j))?.abelianize(weights)).collect::<Result<Vec<_>>>())
        .collect()
}

/// `f(t) f(t^-1)`, normalized. `f` must satisfy `f(1) = ±1`.
pub fn fox_milnor_compose(f: &LaurentPoly) -> Result<NormalizedAlexander> {
    let value = f.eval_at_one();
    if !(value.is_one() || value == -BigInt::one()) {
        return Err(Error::NotSliceFactor(value.to_string()));
    }
    NormalizedAlexander::new(&(f * &f.reflected()))
}

/// `λ(M + 1/m·K) = λ(M) + m Δ''(1) / 2`.
pub fn casson_surgery(lambda_m: &BigInt, m: &BigInt, delta: &NormalizedAlexander) -> Result<CassonValue> {
    let second = delta.second_derivative_at_one();
    if second.is_odd() {
        return Err(Error::OddSecondDerivative(second.to_string()));
    }
    Ok(CassonValue(lambda_m + m * (second / 2)))
}

/// `<x, y | (xy)^n x (xy)^-n y^-1>`, the ribbon disk exterior group.
pub fn ribbon_presentation(n: u32) -> Presentation {
    let x = Word::generator(2, 0).expect("rank 2");
    let y = Word::generator(2, 1).expect("rank 2");
    let xy_n = (&x * &y).pow(i64::from(n));
    let relator = &(&(&xy_n * &x) * &xy_n.inverse()) * &y.inverse();
    Presentation::new(alloc::vec!["x".into(), "y".into()], alloc::vec![relator]).expect("rank 2")
}

/// `1 - t + t^2 - ... + t^{2n}`.
pub fn closed_form_ribbon_factor(n: u32) -> LaurentPoly {
    let coefficients: Vec<i64> = (0..=2 * i64::from(n)).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect();
    LaurentPoly::from_coefficients(0, &coefficients)
}

/// Coefficient of `t^i` is `(-1)^i (2n + 1 - |i|)` for `|i| <= 2n`.
pub fn closed_form_alexander(n: u32) -> LaurentPoly {
    let top = 2 * i64::from(n);
    LaurentPoly::from_terms((-top..=top).map(|i| {
        let magnitude = top + 1 - i.abs();
        (i, BigInt::from(if i % 2 == 0 { magnitude } else { -magnitude }))
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInvariants {
    pub n: u32,
    /// Alexander polynomial of the ribbon disk.
    pub f: LaurentPoly,
    /// Alexander polynomial of the knot `K_n`.
    pub delta: NormalizedAlexander,
    pub second_derivative: BigInt,
    /// Casson invariant of `+1` surgery on `K_n`, the boundary of `X_n`.
    pub casson: CassonValue,
}

/// Runs presentation → Fox calculus → `f(t) f(t^-1)` → surgery formula for
/// the `n`-th ribbon knot and checks every stage against its closed form:
/// `Δ''(1) = 2n(n+1)` and `λ = n(n+1)`.
pub fn family_invariants(n: u32) -> Result<FamilyInvariants> {
    let mismatch = |quantity| Error::ClosedFormMismatch { n, quantity };
    let f = alexander_from_presentation(&ribbon_presentation(n), &[1, 1])?;
    if f != closed_form_ribbon_factor(n) {
        return Err(mismatch("f(t)"));
    }
    let delta = fox_milnor_compose(&f)?;
    if *delta.polynomial() != closed_form_alexander(n) {
        return Err(mismatch("Δ(t)"));
    }
    let nn = BigInt::from(n);
    let expected_lambda = &nn * (&nn + 1);
    let second_derivative = delta.second_derivative_at_one();
    if second_derivative != BigInt::from(2) * &expected_lambda {
        return Err(mismatch("Δ''(1)"));
    }
    let casson = casson_surgery(&BigInt::zero(), &BigInt::one(), &delta)?;
    if casson.0 != expected_lambda {
        return Err(mismatch("λ"));
    }
    Ok(FamilyInvariants { n, f, delta, second_derivative, casson })
}
