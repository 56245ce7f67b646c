use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Generator, LaurentPoly, Word};
use crate::{Error, Result};

/// Finite integer combination of words in a free group: an element of the
/// integral group ring `Z[F]`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    rank: usize,
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElement {
    pub fn zero(rank: usize) -> Self {
        GroupRingElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::from_word(Word::identity(rank))
    }

    pub fn from_word(word: Word) -> Self {
        Self::term(BigInt::one(), word)
    }

    pub fn term(coefficient: impl Into<BigInt>, word: Word) -> Self {
        let mut e = Self::zero(word.rank());
        e.add_term(word, coefficient.into());
        e
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &Word) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, word: Word, coefficient: BigInt) {
        assert_eq!(word.rank(), self.rank, "group ring term of the wrong rank");
        if coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(word.clone()).or_insert_with(BigInt::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.remove(&word);
        }
    }

    /// Left multiplication by a single word.
    pub fn left_mul_word(&self, word: &Word) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(word * w, c.clone());
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a * b, ca * cb);
            }
        }
        Ok(out)
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    /// Ring homomorphism `Z[F] -> Z[t, t^-1]` sending `x_i` to `t^weights[i]`.
    pub fn abelianize(&self, weights: &[i64]) -> Result<LaurentPoly> {
        if weights.len() != self.rank {
            return Err(Error::WeightCount { expected: self.rank, found: weights.len() });
        }
        Ok(LaurentPoly::from_terms(self.terms.iter().map(|(w, c)| {
            let exponent = w.exponent_sums().iter().zip(weights).map(|(s, wt)| s * wt).sum();
            (exponent, c.clone())
        })))
    }
}

/// Fox free derivative `∂w/∂g`.
///
/// Built letter by letter from the product rule: a letter `g` at position
/// `i` contributes `+prefix_i`, a letter `g^-1` contributes
/// `-prefix_i g^-1`, where `prefix_i` is the reduced word before it.
pub fn fox_derivative(word: &Word, g: Generator) -> Result<GroupRingElement> {
    let rank = word.rank();
    if g.0 >= rank {
        return Err(Error::GeneratorOutOfRange { index: g.0, rank });
    }
    let mut out = GroupRingElement::zero(rank);
    let mut prefix = Word::identity(rank);
    for &letter in word.letters() {
        let single = Word::from_letters(rank, [letter])?;
        let next = &prefix * &single;
        if letter.generator == g {
            if letter.inverted {
                out.add_term(next.clone(), -BigInt::one());
            } else {
                out.add_term(prefix.clone(), BigInt::one());
            }
        }
        prefix = next;
    }
    Ok(out)
}

/// Panics on rank mismatch; see [`GroupRingElement::checked_add`].
impl Add for &GroupRingElement {
    type Output = GroupRingElement;

    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        self.checked_add(rhs).expect("adding group ring elements of different rank")
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;

    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self + &(-rhs)
    }
}

/// Panics on rank mismatch; see [`GroupRingElement::checked_mul`].
impl Mul for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        self.checked_mul(rhs).expect("multiplying group ring elements of different rank")
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;

    fn neg(self) -> GroupRingElement {
        GroupRingElement { rank: self.rank, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let magnitude = c.abs();
            match (magnitude.is_one(), w.is_identity()) {
                (true, _) => write!(f, "{w}")?,
                (false, true) => write!(f, "{magnitude}")?,
                (false, false) => write!(f, "{magnitude}*{w}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement({self})")
    }
}
