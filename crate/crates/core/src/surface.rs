//! The `r`-holed sphere and its mapping classes, acting on the free
//! fundamental group of the page.
//!
//! Conventions, fixed once for the whole crate:
//!
//! - Holes `1..r-1` sit in a row; hole `r` is the outer boundary and carries
//!   the basepoint. `x_i` (`i < r`) runs from the basepoint around hole `i`,
//!   and the outer boundary reads `δ = x_1 x_2 ... x_{r-1}`.
//! - A curve enclosing the consecutive holes `a..=b` has word
//!   `c = x_a ... x_b`; the positive twist about it sends each enclosed
//!   generator `x_k` to `c x_k c^-1` and fixes the others.
//! - Curves whose holes are not consecutive are moved into place by half
//!   twists: [`Side::Far`] passes a skipped hole on the side away from the
//!   basepoint, [`Side::Near`] on the basepoint side. Enclosing holes 1 and
//!   3 gives `x_1 x_2 x_3 x_2^-1` (far) or `x_1 x_3` (near).
//! - Composition is functional: `(φ ∘ ψ)(w) = φ(ψ(w))`, and
//!   `t_{φ(c)} = φ ∘ t_c ∘ φ^-1`.
//! - Twists about curves parallel to an inner hole act trivially on this
//!   model of `π_1`; the outer boundary twist is conjugation by `δ`.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::Word;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PlanarSurface {
    holes: u32,
}

impl PlanarSurface {
    pub fn new(holes: u32) -> Result<Self> {
        if holes == 0 {
            return Err(Error::NoHoles);
        }
        Ok(PlanarSurface { holes })
    }

    pub fn holes(&self) -> u32 {
        self.holes
    }

    /// Rank of the free fundamental group, `r - 1`.
    pub fn rank(&self) -> usize {
        self.holes as usize - 1
    }

    /// `x_i` for `1 <= i < r`.
    pub fn generator(&self, hole: u32) -> Result<Word> {
        if hole == 0 || hole >= self.holes {
            return Err(Error::HoleOutOfRange { hole, holes: self.holes });
        }
        Word::generator(self.rank(), hole as usize - 1)
    }

    /// `δ = x_1 ... x_{r-1}`, the outer boundary.
    pub fn boundary_word(&self) -> Word {
        consecutive_word(self.rank(), 0, self.rank())
    }
}

impl fmt::Display for PlanarSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S(0,{})", self.holes)
    }
}

/// Which side of a skipped hole a standard curve passes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Between the hole and the basepoint.
    Near,
    /// Away from the basepoint.
    Far,
}

#[derive(Clone, Debug)]
pub enum CurveOrigin {
    /// Built by [`standard_curve`].
    Standard { holes: Vec<u32>, sides: Vec<Side> },
    /// The image of `base` under `map`.
    Image { map: MappingClass, base: Box<Curve> },
    /// A bare word with no geometric position attached.
    Word,
}

/// A closed curve on the page, recorded by a representative word of its
/// free homotopy class.
///
/// Equality is conjugacy of the words; isotopy is not decided.
#[derive(Clone, Debug)]
pub struct Curve {
    surface: PlanarSurface,
    word: Word,
    origin: CurveOrigin,
}

impl Curve {
    /// A curve known only by its word. Such curves cannot be twisted along.
    pub fn from_word(surface: PlanarSurface, word: Word) -> Result<Self> {
        if word.rank() != surface.rank() {
            return Err(Error::RankMismatch { left: surface.rank(), right: word.rank() });
        }
        Ok(Curve { surface, word, origin: CurveOrigin::Word })
    }

    pub fn surface(&self) -> PlanarSurface {
        self.surface
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn origin(&self) -> &CurveOrigin {
        &self.origin
    }

    /// Homology class in `H_1 = Z^{r-1}`: the exponent sums of the word.
    pub fn class(&self) -> Vec<i64> {
        self.word.exponent_sums()
    }

    /// The positive Dehn twist about this curve, for standard curves and
    /// images of them.
    pub fn twist(&self) -> Result<MappingClass> {
        match &self.origin {
            CurveOrigin::Standard { .. } => dehn_twist(self),
            CurveOrigin::Image { map, base } => twist_of_image(map, base),
            CurveOrigin::Word => Err(Error::UnsupportedCurve),
        }
    }
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.surface == other.surface && self.word.is_conjugate_to(&other.word)
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

/// An automorphism of `π_1` of the page given by generator images, together
/// with the images under its inverse.
#[derive(Clone, Debug)]
pub struct MappingClass {
    surface: PlanarSurface,
    images: Vec<Word>,
    inverse_images: Vec<Word>,
}

impl MappingClass {
    pub fn identity(surface: PlanarSurface) -> Self {
        let gens: Vec<Word> =
            (0..surface.rank()).map(|i| Word::generator(surface.rank(), i).expect("in range")).collect();
        MappingClass { surface, images: gens.clone(), inverse_images: gens }
    }

    /// Checks that `inverse_images` really invert `images` and that the
    /// outer boundary goes to a conjugate of itself.
    pub fn from_images(surface: PlanarSurface, images: Vec<Word>, inverse_images: Vec<Word>) -> Result<Self> {
        let rank = surface.rank();
        for w in images.iter().chain(&inverse_images) {
            if w.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: w.rank() });
            }
        }
        if images.len() != rank || inverse_images.len() != rank {
            return Err(Error::RankMismatch { left: rank, right: images.len().min(inverse_images.len()) });
        }
        let phi = MappingClass { surface, images, inverse_images };
        if !phi.is_valid() {
            return Err(Error::UnsupportedCurve);
        }
        Ok(phi)
    }

    pub fn surface(&self) -> PlanarSurface {
        self.surface
    }

    /// `images[i]` is the image of `x_{i+1}`.
    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse(&self) -> MappingClass {
        MappingClass { surface: self.surface, images: self.inverse_images.clone(), inverse_images: self.images.clone() }
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.rank() != self.surface.rank() {
            return Err(Error::RankMismatch { left: self.surface.rank(), right: w.rank() });
        }
        if self.images.is_empty() {
            return Ok(w.clone());
        }
        w.substitute(&self.images)
    }

    /// The image curve; the result remembers how it was produced so that
    /// twisting along it goes through [`twist_of_image`].
    pub fn apply_curve(&self, c: &Curve) -> Result<Curve> {
        self.check_surface(c.surface)?;
        Ok(Curve {
            surface: self.surface,
            word: self.apply(&c.word)?,
            origin: CurveOrigin::Image { map: self.clone(), base: Box::new(c.clone()) },
        })
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MappingClass) -> Result<MappingClass> {
        self.check_surface(other.surface)?;
        let images = other.images.iter().map(|w| self.apply(w)).collect::<Result<Vec<_>>>()?;
        let inverse_images =
            self.inverse_images.iter().map(|w| other.inverse().apply(w)).collect::<Result<Vec<_>>>()?;
        Ok(MappingClass { surface: self.surface, images, inverse_images })
    }

    /// `self^n`; negative powers use the inverse.
    pub fn pow(&self, n: i64) -> MappingClass {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = MappingClass::identity(self.surface);
        for _ in 0..n.unsigned_abs() {
            out = out.compose(&base).expect("same surface");
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.len() == 1 && w.letters()[0].generator.0 == i && !w.letters()[0].inverted)
    }

    /// Inverse witness is exact on every generator (both orders) and the
    /// outer boundary word maps to a conjugate of itself.
    pub fn is_valid(&self) -> bool {
        let rank = self.surface.rank();
        let round_trip = |outer: &MappingClass, inner: &MappingClass| {
            (0..rank).all(|i| {
                let x = Word::generator(rank, i).expect("in range");
                inner.apply(&x).and_then(|y| outer.apply(&y)).is_ok_and(|y| y == x)
            })
        };
        let inv = self.inverse();
        let delta = self.surface.boundary_word();
        round_trip(self, &inv)
            && round_trip(&inv, self)
            && self.apply(&delta).is_ok_and(|d| d.is_conjugate_to(&delta))
    }

    fn check_surface(&self, other: PlanarSurface) -> Result<()> {
        if self.surface != other {
            return Err(Error::SurfaceMismatch { left: self.surface.holes, right: other.holes });
        }
        Ok(())
    }
}

/// Equality of automorphisms: generator images agree.
impl PartialEq for MappingClass {
    fn eq(&self, other: &Self) -> bool {
        self.surface == other.surface && self.images == other.images
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{} -> {}", i + 1, w)?;
        }
        Ok(())
    }
}

/// `x_{start+1} ... x_{start+len}` (zero-based `start`).
fn consecutive_word(rank: usize, start: usize, len: usize) -> Word {
    let powers: Vec<(usize, i64)> = (start..start + len).map(|i| (i, 1)).collect();
    Word::from_powers(rank, &powers).expect("indices in range")
}

/// Half twist exchanging the holes at zero-based positions `pos` and
/// `pos + 1`. `Far` is `x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i`; `Near` is
/// its inverse.
fn half_twist(surface: PlanarSurface, pos: usize, side: Side) -> MappingClass {
    let rank = surface.rank();
    let x = |i: usize| Word::generator(rank, i).expect("in range");
    let mut forward = MappingClass::identity(surface);
    forward.images[pos] = x(pos + 1).conjugated_by(&x(pos));
    forward.images[pos + 1] = x(pos);
    forward.inverse_images[pos] = x(pos + 1);
    forward.inverse_images[pos + 1] = x(pos).conjugated_by(&x(pos + 1).inverse());
    match side {
        Side::Far => forward,
        Side::Near => forward.inverse(),
    }
}

/// Twist about `x_{start+1} ... x_{start+len}`.
fn consecutive_twist(surface: PlanarSurface, start: usize, len: usize) -> MappingClass {
    let rank = surface.rank();
    let c = consecutive_word(rank, start, len);
    let c_inv = c.inverse();
    let mut t = MappingClass::identity(surface);
    for k in start..start + len {
        let x = Word::generator(rank, k).expect("in range");
        t.images[k] = x.conjugated_by(&c);
        t.inverse_images[k] = x.conjugated_by(&c_inv);
    }
    t
}

/// Standard position of a curve enclosing the inner holes `inner` (sorted,
/// all `< r`): an automorphism `σ` with the curve equal to
/// `σ(x_a ... x_{a+k-1})`, plus `a` and `k`.
fn placement(surface: PlanarSurface, inner: &[u32], sides: &[Side]) -> Result<(MappingClass, usize, usize)> {
    let first = inner[0] as usize - 1;
    let last = *inner.last().expect("nonempty") as usize - 1;
    let skipped: Vec<usize> = (first..=last).filter(|&p| !inner.contains(&(p as u32 + 1))).collect();
    if sides.len() != skipped.len() {
        return Err(Error::SideChoices { expected: skipped.len(), found: sides.len() });
    }
    let k = inner.len();
    // Start with the enclosed holes packed at the left of the interval and
    // slide each skipped hole leftwards into its slot.
    let mut sigma = MappingClass::identity(surface);
    for (idx, (&target, &side)) in skipped.iter().zip(sides).enumerate() {
        let from = first + k + idx;
        for pos in (target..from).rev() {
            sigma = half_twist(surface, pos, side).compose(&sigma)?;
        }
    }
    Ok((sigma, first, k))
}

/// Inner-hole description of a hole set: the set itself, or its complement
/// when it contains the outer hole (the same curve, reversed).
fn inner_holes(surface: PlanarSurface, holes: &[u32]) -> Result<(Vec<u32>, bool)> {
    let r = surface.holes;
    if holes.is_empty() {
        return Err(Error::EmptyHoleSet);
    }
    let mut sorted = holes.to_vec();
    sorted.sort_unstable();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::DuplicateHole(pair[0]));
        }
    }
    if let Some(&h) = sorted.iter().find(|&&h| h == 0 || h > r) {
        return Err(Error::HoleOutOfRange { hole: h, holes: r });
    }
    if sorted.len() == r as usize {
        return Err(Error::AllHolesEnclosed);
    }
    if sorted.last() == Some(&r) {
        let complement: Vec<u32> = (1..r).filter(|h| !sorted.contains(h)).collect();
        Ok((complement, true))
    } else {
        Ok((sorted, false))
    }
}

/// Curve enclosing `holes`, one side choice per hole skipped between the
/// first and last enclosed inner hole.
///
/// A set containing the outer hole `r` describes the same curve as its
/// complement; the side choices then refer to the holes skipped by the
/// complement, and the word is reversed so that the class is
/// `Σ e_k` with `e_r = -(e_1 + ... + e_{r-1})`.
pub fn standard_curve(surface: PlanarSurface, holes: &[u32], sides: &[Side]) -> Result<Curve> {
    let (inner, reversed) = inner_holes(surface, holes)?;
    let (sigma, start, len) = placement(surface, &inner, sides)?;
    let word = sigma.apply(&consecutive_word(surface.rank(), start, len))?;
    let word = if reversed { word.inverse() } else { word };
    let mut recorded = holes.to_vec();
    recorded.sort_unstable();
    Ok(Curve { surface, word, origin: CurveOrigin::Standard { holes: recorded, sides: sides.to_vec() } })
}

/// Positive Dehn twist about a curve built by [`standard_curve`].
pub fn dehn_twist(c: &Curve) -> Result<MappingClass> {
    let CurveOrigin::Standard { holes, sides } = &c.origin else {
        return Err(Error::UnsupportedCurve);
    };
    let (inner, _) = inner_holes(c.surface, holes)?;
    let (sigma, start, len) = placement(c.surface, &inner, sides)?;
    sigma.compose(&consecutive_twist(c.surface, start, len))?.compose(&sigma.inverse())
}

/// Twist about `φ(c)`, computed as `φ ∘ t_c ∘ φ^-1`.
pub fn twist_of_image(phi: &MappingClass, c: &Curve) -> Result<MappingClass> {
    phi.check_surface(c.surface)?;
    phi.compose(&c.twist()?)?.compose(&phi.inverse())
}
