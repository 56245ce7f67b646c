use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::word::default_names;
use super::{Generator, IntMatrix, Word};
use crate::{Error, Result};

/// Finite group presentation `<generators | relators>`.
#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Every relator must live in the free group on `names`.
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let rank = names.len();
        if let Some(bad) = relators.iter().find(|r| r.rank() != rank) {
            return Err(Error::RankMismatch { left: rank, right: bad.rank() });
        }
        Ok(Presentation { names, relators })
    }

    /// Presentation on generators named `x1..xn`.
    pub fn with_default_names(rank: usize, relators: Vec<Word>) -> Result<Self> {
        Self::new(default_names(rank), relators)
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Generators minus relators.
    pub fn deficiency(&self) -> i64 {
        self.names.len() as i64 - self.relators.len() as i64
    }

    /// Exponent-sum matrix with one column per relator; its cokernel is the
    /// abelianization of the group.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let columns: Vec<Vec<i64>> = self.relators.iter().map(Word::exponent_sums).collect();
        IntMatrix::from_columns(self.names.len(), &columns)
    }

    /// Relators as a sorted multiset, for order-insensitive comparison.
    pub fn relator_multiset(&self) -> Vec<Word> {
        let mut rs = self.relators.clone();
        rs.sort();
        rs
    }
}

/// Canonical text form `gens | relators`, e.g. `x y | x y x^-1 y^-1`.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(" "))?;
        f.write_str(" |")?;
        for (i, r) in self.relators.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            write!(f, "{}", r.display_with(&self.names))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// The presentation was reduced to zero generators.
    Trivial,
    /// The budget ran out or no move applied; nothing is claimed.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplification {
    pub verdict: Verdict,
    pub presentation: Presentation,
    /// Eliminations and relator products performed.
    pub moves: usize,
}

/// Bounded Tietze simplification.
///
/// Only isomorphism-preserving moves are used: cyclic reduction and
/// rotation of relators (conjugation), deleting trivial or repeated
/// relators, replacing a relator by its product with a conjugate of
/// another relator or its inverse, and eliminating a generator that occurs
/// exactly once in some relator. Each pass first looks for an elimination,
/// then for the most length-reducing relator product; ties are broken by
/// relator order after sorting. `Trivial` is reported only when no
/// generators remain.
pub fn simplify_presentation(p: &Presentation, budget: usize) -> Simplification {
    let mut names = p.names.clone();
    let mut relators = p.relators.clone();
    let mut moves = 0;

    loop {
        tidy(&mut relators);
        if names.is_empty() || moves >= budget {
            break;
        }
        if let Some((ri, g)) = elimination_candidate(&relators) {
            relators = eliminate(&relators, ri, g);
            names.remove(g.0);
            moves += 1;
            continue;
        }
        if let Some((ri, product)) = shortening_product(&relators) {
            relators[ri] = product;
            moves += 1;
            continue;
        }
        break;
    }

    let verdict = if names.is_empty() { Verdict::Trivial } else { Verdict::Unknown };
    let presentation = Presentation { names, relators };
    Simplification { verdict, presentation, moves }
}

/// Cyclic reduction, removal of trivial and duplicate relators (a relator
/// equal to another or to its inverse), then a deterministic order.
fn tidy(relators: &mut Vec<Word>) {
    let mut out: Vec<Word> = Vec::new();
    for r in relators.drain(..) {
        let r = r.cyclically_reduced();
        if r.is_empty() {
            continue;
        }
        let inv = r.inverse();
        if out.iter().any(|s| s.is_conjugate_to(&r) || s.is_conjugate_to(&inv)) {
            continue;
        }
        out.push(r);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    *relators = out;
}

fn elimination_candidate(relators: &[Word]) -> Option<(usize, Generator)> {
    relators
        .iter()
        .enumerate()
        .find_map(|(ri, r)| (0..r.rank()).map(Generator).find(|&g| r.occurrences(g) == 1).map(|g| (ri, g)))
}

/// Rotates relator `ri` to the form `g^e v`, solves `g = v^-e`, substitutes
/// into the remaining relators, and drops `g` from the generating set.
fn eliminate(relators: &[Word], ri: usize, g: Generator) -> Vec<Word> {
    let r = &relators[ri];
    let rank = r.rank();
    let pos = r.letters().iter().position(|l| l.generator == g).expect("candidate occurs");
    let rotated = r.rotated(pos);
    let letter = rotated.letters()[0];
    let rest = Word::from_letters(rank, rotated.letters()[1..].iter().copied()).expect("same rank");
    let value = if letter.inverted { rest } else { rest.inverse() };

    // images in the free group of rank - 1, with generators above g shifted down
    let shift = |w: &Word| -> Word {
        let letters = w.letters().iter().map(|l| {
            let idx = if l.generator.0 > g.0 { l.generator.0 - 1 } else { l.generator.0 };
            super::Letter::new(idx, l.inverted)
        });
        Word::from_letters(rank - 1, letters).expect("shifted index in range")
    };
    let value = shift(&value);
    let images: Vec<Word> = (0..rank)
        .map(|i| {
            if i == g.0 {
                value.clone()
            } else {
                let j = if i > g.0 { i - 1 } else { i };
                Word::generator(rank - 1, j).expect("in range")
            }
        })
        .collect();

    relators
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != ri)
        .map(|(_, w)| w.substitute(&images).expect("images have a common rank"))
        .collect()
}

/// Finds `r_i * s` with `s` a cyclic rotation of `r_j` or `r_j^-1` whose
/// cyclic reduction is strictly shorter than `r_i`; returns the best one.
fn shortening_product(relators: &[Word]) -> Option<(usize, Word)> {
    let mut best: Option<(usize, Word)> = None;
    for (i, ri) in relators.iter().enumerate() {
        for (j, rj) in relators.iter().enumerate() {
            if i == j {
                continue;
            }
            for s in [rj.clone(), rj.inverse()] {
                for k in 0..s.len() {
                    let candidate = (ri * &s.rotated(k)).cyclically_reduced();
                    if candidate.len() >= ri.len() {
                        continue;
                    }
                    let gain = ri.len() - candidate.len();
                    let better = match &best {
                        None => true,
                        Some((bi, bw)) => {
                            let best_gain = relators[*bi].len() - bw.len();
                            gain > best_gain || (gain == best_gain && (i, &candidate) < (*bi, bw))
                        }
                    };
                    if better {
                        best = Some((i, candidate));
                    }
                }
            }
        }
    }
    best
}
