use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("words live in free groups of different rank ({left} vs {right})")]
    RankMismatch { left: usize, right: usize },
    #[error("generator {index} is outside the free group of rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("expected {expected} weights, got {found}")]
    WeightCount { expected: usize, found: usize },

    #[error("a surface needs at least one hole")]
    NoHoles,
    #[error("a curve must enclose at least one hole")]
    EmptyHoleSet,
    #[error("hole {hole} does not exist on a sphere with {holes} holes")]
    HoleOutOfRange { hole: u32, holes: u32 },
    #[error("hole {0} listed twice")]
    DuplicateHole(u32),
    #[error("a curve enclosing every hole is null-homotopic")]
    AllHolesEnclosed,
    #[error("expected {expected} side choices (one per skipped hole), got {found}")]
    SideChoices { expected: usize, found: usize },
    #[error("curve is not in standard position; build its twist from an image instead")]
    UnsupportedCurve,
    #[error("mapping classes act on different surfaces ({left} vs {right} holes)")]
    SurfaceMismatch { left: u32, right: u32 },

    #[error("Alexander polynomial needs deficiency 1, presentation has deficiency {0}")]
    Deficiency(i64),
    #[error("relator {index} has weighted exponent sum {sum}, expected 0")]
    NonzeroWeightedSum { index: usize, sum: i64 },
    #[error("weights send every generator to 0")]
    DegenerateWeights,
    #[error("Alexander minors disagree across deleted columns {first} and {second}")]
    ColumnChoice { first: usize, second: usize },
    #[error("f(1) = {0}; a slice factor must evaluate to +1 or -1")]
    NotSliceFactor(String),
    #[error("polynomial {0} is not symmetric up to a unit")]
    NotSymmetric(String),
    #[error("polynomial {0} does not evaluate to +1 or -1 at t = 1")]
    NotNormalizable(String),
    #[error("second derivative at 1 is odd ({0}) for a symmetric polynomial")]
    OddSecondDerivative(String),
    #[error("n = {n}: {quantity} disagrees with its closed form")]
    ClosedFormMismatch { n: u32, quantity: &'static str },
}
