use std::fmt;

use thiserror::Error;

use crate::point_set::PointSet;

/// One failed topology axiom in a candidate open-set family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `missing` is the empty set or the whole space.
    MissingEmptyOrFull { missing: PointSet },
    NotClosedUnderUnion(PointSet, PointSet),
    NotClosedUnderIntersection(PointSet, PointSet),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingEmptyOrFull { missing } => {
                write!(f, "family is missing {missing} (the empty set and the whole space must be open)")
            }
            Violation::NotClosedUnderUnion(a, b) => {
                write!(f, "not closed under union: {a} | {b} = {} is absent", a.union(b))
            }
            Violation::NotClosedUnderIntersection(a, b) => {
                write!(f, "not closed under intersection: {a} & {b} = {} is absent", a.intersection(b))
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TopologyError {
    #[error("{points} points exceeds the limit of 16")]
    TooManyPoints { points: usize },
    #[error("point {point} is outside the universe of {universe} points")]
    PointOutOfRange { point: usize, universe: usize },
    #[error("set lives in a universe of {found} points, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("invalid open-set family: {}", join(.0))]
    InvalidFamily(Vec<Violation>),
    #[error("preorder matrix must be {points}x{points}")]
    MatrixShape { points: usize },
    #[error("preorder is not reflexive at point {point}")]
    NotReflexive { point: usize },
    #[error("preorder is not transitive: {x}->{y} and {y}->{z} but not {x}->{z}")]
    NotTransitive { x: usize, y: usize, z: usize },
}

fn join(violations: &[Violation]) -> String {
    violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// Requested point count is beyond what an enumeration permits.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("n = {requested} exceeds the enumeration cap of {cap}{}", if *.cap < 7 { " (pass --extended for 6 and 7)" } else { "" })]
pub struct CapExceeded {
    pub requested: usize,
    pub cap: usize,
}
