//! Positive allowable Lefschetz fibrations over the disk with planar fiber.
//!
//! The total space is `D^2 × F` with one 2-handle per vanishing cycle, i.e.
//! one 0-handle, `r - 1` 1-handles and `m` 2-handles. Its cellular chain
//! complex is `Z^m --∂₂--> Z^{r-1} --0--> Z`, where column `i` of `∂₂` is the
//! homology class of the `i`-th vanishing cycle.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::{smith_normal_form, IntMatrix, Presentation};
use crate::surface::{standard_curve, Curve, MappingClass, PlanarSurface, Side};
use crate::{Error, Result};

/// Fiber plus ordered vanishing cycles (the monodromy factorization).
#[derive(Clone, Debug, PartialEq)]
pub struct PalfSpec {
    pub fiber: PlanarSurface,
    pub vanishing_cycles: Vec<Curve>,
}

impl PalfSpec {
    pub fn new(fiber: PlanarSurface, vanishing_cycles: Vec<Curve>) -> Result<Self> {
        if let Some(c) = vanishing_cycles.iter().find(|c| c.surface() != fiber) {
            return Err(Error::SurfaceMismatch { left: fiber.holes(), right: c.surface().holes() });
        }
        Ok(PalfSpec { fiber, vanishing_cycles })
    }

    pub fn two_handles(&self) -> usize {
        self.vanishing_cycles.len()
    }
}

/// Finitely generated abelian group `Z^free ⊕ Z/d_1 ⊕ ...`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AbelianGroup {
    pub free_rank: usize,
    /// Orders `>= 2`, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Cokernel of an integer matrix, read off its Smith normal form.
    pub fn cokernel(m: &IntMatrix) -> Self {
        let factors = smith_normal_form(m).invariant_factors();
        AbelianGroup {
            free_rank: m.rows() - factors.len(),
            torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }
}

/// `0`, `Z`, `Z^3`, `Z/2`, `Z^2+Z/3+Z/6`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub h0: AbelianGroup,
    pub h1: AbelianGroup,
    pub h2: AbelianGroup,
    pub euler_characteristic: i64,
}

impl HomologyResult {
    /// Homology of a point: `Z, 0, 0`.
    pub fn is_point(&self) -> bool {
        self.h0 == AbelianGroup::free(1) && self.h1.is_trivial() && self.h2.is_trivial()
    }

    /// Alternating sum of Betti numbers.
    pub fn betti_euler_characteristic(&self) -> i64 {
        self.h0.free_rank as i64 - self.h1.free_rank as i64 + self.h2.free_rank as i64
    }
}

/// `H0,H1,H2`, e.g. `Z,0,0`.
impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.h0, self.h1, self.h2)
    }
}

/// Returns `Err(i)` with the first vanishing cycle whose homology class is
/// zero.
pub fn allowable(p: &PalfSpec) -> core::result::Result<(), usize> {
    match p.vanishing_cycles.iter().position(|c| c.class().iter().all(|&v| v == 0)) {
        Some(i) => Err(i),
        None => Ok(()),
    }
}

/// `(r-1) × m` matrix whose columns are the vanishing-cycle classes.
pub fn boundary_matrix(p: &PalfSpec) -> IntMatrix {
    let columns: Vec<Vec<i64>> = p.vanishing_cycles.iter().map(Curve::class).collect();
    IntMatrix::from_columns(p.fiber.rank(), &columns)
}

pub fn homology(p: &PalfSpec) -> HomologyResult {
    let d2 = boundary_matrix(p);
    let rank = smith_normal_form(&d2).rank();
    let h1 = AbelianGroup::cokernel(&d2);
    let h2 = AbelianGroup::free(d2.cols() - rank);
    let euler_characteristic = 1 - p.fiber.rank() as i64 + p.two_handles() as i64;
    HomologyResult { h0: AbelianGroup::free(1), h1, h2, euler_characteristic }
}

/// The total space is a homology ball exactly when `∂₂` is square and
/// unimodular; its boundary is then a homology sphere.
pub fn boundary_is_homology_sphere(p: &PalfSpec) -> bool {
    let d2 = boundary_matrix(p);
    d2.cols() == p.fiber.rank() && d2.determinant().is_some_and(|d| d.abs().is_one())
}

/// `<x_1 .. x_{r-1} | vanishing-cycle words>`.
pub fn pi1_presentation(p: &PalfSpec) -> Presentation {
    let relators = p.vanishing_cycles.iter().map(|c| c.word().clone()).collect();
    Presentation::with_default_names(p.fiber.rank(), relators).expect("cycles live on the fiber")
}

/// `t_{c_1} ∘ t_{c_2} ∘ ... ∘ t_{c_m}`; the empty product is the identity.
pub fn total_monodromy(p: &PalfSpec) -> Result<MappingClass> {
    p.vanishing_cycles.iter().try_fold(MappingClass::identity(p.fiber), |acc, c| acc.compose(&c.twist()?))
}

/// Hole set and side choices of a standard curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub holes: Vec<u32>,
    pub sides: Vec<Side>,
}

impl CurveSpec {
    pub fn new(holes: &[u32], sides: &[Side]) -> Self {
        CurveSpec { holes: holes.to_vec(), sides: sides.to_vec() }
    }

    pub fn build(&self, surface: PlanarSurface) -> Result<Curve> {
        standard_curve(surface, &self.holes, &self.sides)
    }
}

/// `std{1,3|far}` style text, matching the monodromy grammar.
impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("std{")?;
        for (i, h) in self.holes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        if !self.sides.is_empty() {
            f.write_str("|")?;
            for (i, s) in self.sides.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                f.write_str(match s {
                    Side::Near => "near",
                    Side::Far => "far",
                })?;
            }
        }
        f.write_str("}")
    }
}

/// The three curves `α, β, γ` on the 4-holed sphere from which the family
/// `X_n` is built: monodromy `(t_α, t_β, t_{γ_n})` with
/// `γ_n = (t_γ ∘ t_β)^n (γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyFixture {
    pub alpha: CurveSpec,
    pub beta: CurveSpec,
    pub gamma: CurveSpec,
}

impl FamilyFixture {
    /// `α` encircles hole 1, `β` holes 2 and 3, `γ` holes 1 and 2. The
    /// classes `e1, e2+e3, e1+e2` form a basis of `H_1`, and `β`, `γ`
    /// intersect, so `γ_n` moves with `n`.
    pub fn calibrated() -> Self {
        FamilyFixture {
            alpha: CurveSpec::new(&[1], &[]),
            beta: CurveSpec::new(&[2, 3], &[]),
            gamma: CurveSpec::new(&[1, 2], &[]),
        }
    }

    pub fn surface() -> PlanarSurface {
        PlanarSurface::new(4).expect("four holes")
    }

    /// `t_γ ∘ t_β`.
    pub fn step(&self) -> Result<MappingClass> {
        let s = Self::surface();
        self.gamma.build(s)?.twist()?.compose(&self.beta.build(s)?.twist()?)
    }

    /// Monodromy `(t_α, t_β, t_{γ_n})`; `n = 0` gives `γ_0 = γ`.
    pub fn family(&self, n: u32) -> Result<PalfSpec> {
        let s = Self::surface();
        let gamma = self.gamma.build(s)?;
        let gamma_n = self.step()?.pow(i64::from(n)).apply_curve(&gamma)?;
        PalfSpec::new(s, alloc::vec![self.alpha.build(s)?, self.beta.build(s)?, gamma_n])
    }
}

/// `X_n` with the calibrated fixture curves.
pub fn paper_family(n: u32) -> Result<PalfSpec> {
    FamilyFixture::calibrated().family(n)
}
