use crate::geom::{Point, Rect};
use crate::solver::CoverSolution;
use thiserror::Error;

/// Best solution found before a search hit its node limit.
#[derive(Debug, Clone, PartialEq)]
pub enum Incumbent {
    Cover(CoverSolution),
    Points(Vec<Point>),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polygon side is not axis-parallel")]
    NotOrthogonal,
    #[error("polygon boundary intersects itself")]
    SelfIntersecting,
    #[error("two consecutive polygon sides are parallel")]
    CollinearRedundantVertex,
    #[error("polygon needs at least 4 vertices")]
    TooFewVertices,
    #[error("coordinate {0} is out of range")]
    CoordinateOutOfRange(i64),
    #[error("degenerate rectangle [{0},{2}]x[{1},{3}]")]
    Degenerate(i64, i64, i64, i64),
    #[error("rectangle {0} is not contained in the polygon")]
    NotContained(Rect),
    #[error("family has an empty kernel")]
    EmptyKernel,
    #[error("family is not proper")]
    NotProper,
    #[error("center {0} is not in the kernel")]
    NotInKernel(usize),
    #[error("vertex {0} is not the DFS root")]
    NotRoot(usize),
    #[error("input graph is not a planar support: {0}")]
    InvalidInputSupport(String),
    #[error("rectangle {0} is not maximal in the polygon")]
    NotMaximalMember(Rect),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("generation failed for seed {seed}")]
    GenerationFailed { seed: u64 },
    #[error("cannot parse input: {0}")]
    Parse(String),
    #[error("node limit exceeded")]
    LimitExceeded(Box<Incumbent>),
}

pub type Result<T> = std::result::Result<T, Error>;
