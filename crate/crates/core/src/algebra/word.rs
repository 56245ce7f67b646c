use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::{Error, Result};

/// Index of a free generator, dense in `0..rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(pub usize);

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverted: bool,
}

impl Letter {
    pub fn new(generator: usize, inverted: bool) -> Self {
        Letter { generator: Generator(generator), inverted }
    }

    pub fn inverse(self) -> Self {
        Letter { generator: self.generator, inverted: !self.inverted }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverted != other.inverted
    }

    /// `+1` for a generator, `-1` for an inverse.
    pub fn sign(self) -> i64 {
        if self.inverted {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word in the free group of a fixed rank.
///
/// Words are always stored reduced, so structural equality is equality in
/// the free group. The ordering is lexicographic on letters after comparing
/// rank, which gives group-ring elements a canonical term order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word { rank, letters: Vec::new() }
    }

    /// The single-letter word `x_index` (or its inverse).
    pub fn letter(rank: usize, index: usize, inverted: bool) -> Result<Self> {
        Self::from_letters(rank, [Letter::new(index, inverted)])
    }

    pub fn generator(rank: usize, index: usize) -> Result<Self> {
        Self::letter(rank, index, false)
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters(rank: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut stack: Vec<Letter> = Vec::new();
        for letter in letters {
            if letter.generator.0 >= rank {
                return Err(Error::GeneratorOutOfRange { index: letter.generator.0, rank });
            }
            push_reduced(&mut stack, letter);
        }
        Ok(Word { rank, letters: stack })
    }

    /// Builds `x_{i1}^{e1} x_{i2}^{e2} ...` from `(index, exponent)` pairs.
    pub fn from_powers(rank: usize, powers: &[(usize, i64)]) -> Result<Self> {
        let letters = powers.iter().flat_map(|&(index, exp)| {
            let letter = Letter::new(index, exp < 0);
            core::iter::repeat_n(letter, exp.unsigned_abs() as usize)
        });
        Self::from_letters(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Product `self * other`, freely reduced.
    pub fn multiply(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut letters = self.letters.clone();
        for &letter in &other.letters {
            push_reduced(&mut letters, letter);
        }
        Ok(Word { rank: self.rank, letters })
    }

    pub fn inverse(&self) -> Word {
        Word { rank: self.rank, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity(self.rank);
        for _ in 0..exponent.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `g * self * g^-1`.
    pub fn conjugated_by(&self, g: &Word) -> Word {
        &(g * self) * &g.inverse()
    }

    /// Signed exponent sum of each generator, i.e. the image in `Z^rank`.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = alloc::vec![0i64; self.rank];
        for letter in &self.letters {
            sums[letter.generator.0] += letter.sign();
        }
        sums
    }

    /// Number of occurrences of `g` or `g^-1`.
    pub fn occurrences(&self, g: Generator) -> usize {
        self.letters.iter().filter(|l| l.generator == g).count()
    }

    /// Removes matching letter pairs from both ends, returning the cyclic
    /// core of the conjugacy class.
    pub fn cyclically_reduced(&self) -> Word {
        let mut start = 0;
        let mut end = self.letters.len();
        while end - start >= 2 && self.letters[start].cancels(self.letters[end - 1]) {
            start += 1;
            end -= 1;
        }
        Word { rank: self.rank, letters: self.letters[start..end].to_vec() }
    }

    /// Cyclic rotation moving the first `k` letters to the end. The result
    /// is a conjugate of `self` and is reduced whenever `self` is cyclically
    /// reduced.
    pub fn rotated(&self, k: usize) -> Word {
        let n = self.letters.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let letters = self.letters[k..].iter().chain(&self.letters[..k]).copied();
        Word::from_letters(self.rank, letters).expect("rotation keeps generators in range")
    }

    /// Conjugacy test in the free group: cyclic cores agree up to rotation.
    pub fn is_conjugate_to(&self, other: &Word) -> bool {
        if self.rank != other.rank {
            return false;
        }
        let a = self.cyclically_reduced();
        let b = other.cyclically_reduced();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|k| a.letters[k..].iter().chain(&a.letters[..k]).eq(b.letters.iter()))
    }

    /// Replaces each generator `x_i` by `images[i]` and reduces. All images
    /// must share one rank, which becomes the rank of the result.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        if images.len() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: images.len() });
        }
        let target = match images.first() {
            Some(w) => w.rank,
            None => return Ok(self.clone()),
        };
        let mut letters = Vec::new();
        for letter in &self.letters {
            let image = &images[letter.generator.0];
            if image.rank != target {
                return Err(Error::RankMismatch { left: target, right: image.rank });
            }
            if letter.inverted {
                for &l in image.letters.iter().rev() {
                    push_reduced(&mut letters, l.inverse());
                }
            } else {
                for &l in &image.letters {
                    push_reduced(&mut letters, l);
                }
            }
        }
        Ok(Word { rank: target, letters })
    }

    /// Formats with caller-supplied generator names.
    pub fn display_with<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> impl fmt::Display + 'a {
        NamedWord { word: self, names }
    }
}

fn push_reduced(stack: &mut Vec<Letter>, letter: Letter) {
    match stack.last() {
        Some(&top) if top.cancels(letter) => {
            stack.pop();
        }
        _ => stack.push(letter),
    }
}

/// Panics if the ranks differ; use [`Word::multiply`] for a checked product.
impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs).expect("multiplying words of different rank")
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

struct NamedWord<'a, S> {
    word: &'a Word,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for NamedWord<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, self.word, |f, g| match self.names.get(g) {
            Some(name) => f.write_str(name.as_ref()),
            None => write!(f, "x{}", g + 1),
        })
    }
}

/// Runs of one letter are collapsed into powers: `x^2 y^-1`. The identity
/// prints as `1`.
fn write_word(
    f: &mut fmt::Formatter<'_>,
    word: &Word,
    mut name: impl FnMut(&mut fmt::Formatter<'_>, usize) -> fmt::Result,
) -> fmt::Result {
    if word.is_empty() {
        return f.write_str("1");
    }
    let letters = &word.letters;
    let mut i = 0;
    let mut first = true;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        name(f, letters[i].generator.0)?;
        let exp = (j - i) as i64 * letters[i].sign();
        if exp != 1 {
            write!(f, "^{exp}")?;
        }
        i = j;
    }
    Ok(())
}

/// Default names are `x1, x2, ...`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, self, |f, g| write!(f, "x{}", g + 1))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[{}]({})", self.rank, self)
    }
}

/// Names `x1..xn`, matching the default [`Word`] display.
pub(crate) fn default_names(rank: usize) -> Vec<String> {
    (1..=rank).map(|i| alloc::format!("x{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(powers: &[(usize, i64)]) -> Word {
        Word::from_powers(2, powers).unwrap()
    }

    // x = generator 0, y = generator 1
    #[test]
    fn multiply_cancels() {
        assert_eq!(&w(&[(0, 1), (1, 1)]) * &w(&[(1, -1)]), w(&[(0, 1)]));
    }

    #[test]
    fn identity_is_neutral() {
        let a = w(&[(0, 1), (1, -2)]);
        assert_eq!(&Word::identity(2) * &a, a);
        assert_eq!(&a * &Word::identity(2), a);
    }

    #[test]
    fn ribbon_relator_n1_assembles() {
        let xy = w(&[(0, 1), (1, 1)]);
        let left = &xy * &w(&[(0, 1)]);
        let right = &xy.inverse() * &w(&[(1, -1)]);
        let expected = w(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]);
        assert_eq!(&left * &right, expected);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w(&[(0, 1), (1, 1)]).inverse(), w(&[(1, -1), (0, -1)]));
        assert_eq!(Word::identity(2).inverse(), Word::identity(2));
        let r = w(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]);
        assert_eq!(r.inverse(), w(&[(1, 1), (0, 1), (1, 1), (0, -1), (1, -1), (0, -1)]));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = Word::generator(2, 0).unwrap();
        let b = Word::generator(3, 0).unwrap();
        assert_eq!(a.multiply(&b), Err(Error::RankMismatch { left: 2, right: 3 }));
        assert!(Word::generator(2, 2).is_err());
    }

    #[test]
    fn conjugacy() {
        let a = w(&[(0, 1), (1, 1), (0, -1)]);
        assert!(a.is_conjugate_to(&w(&[(1, 1)])));
        assert!(!a.is_conjugate_to(&w(&[(1, -1)])));
        assert!(w(&[(0, 1), (1, 1)]).is_conjugate_to(&w(&[(1, 1), (0, 1)])));
    }

    #[test]
    fn display_collapses_runs() {
        let a = w(&[(0, 2), (1, -1)]);
        assert_eq!(alloc::format!("{a}"), "x1^2 x2^-1");
        assert_eq!(alloc::format!("{}", a.display_with(&["x", "y"])), "x^2 y^-1");
        assert_eq!(alloc::format!("{}", Word::identity(2)), "1");
    }
}
