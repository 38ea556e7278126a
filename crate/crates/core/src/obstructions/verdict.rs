use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::lattice::SquareMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Cubiquitous,
    NotCubiquitous,
    Obstructed,
    Inconclusive,
}

impl Status {
    /// Whether the status proves the lattice misses some unit cube.
    pub fn is_negative(self) -> bool {
        matches!(self, Status::NotCubiquitous | Status::Obstructed)
    }
}

/// An inequality `lhs > rhs` whose truth certifies an obstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    #[serde(serialize_with = "serialize_big")]
    pub lhs: BigInt,
    #[serde(serialize_with = "serialize_big")]
    pub rhs: BigInt,
}

impl Inequality {
    pub fn new(lhs: impl Into<BigInt>, rhs: impl Into<BigInt>) -> Self {
        Self { lhs: lhs.into(), rhs: rhs.into() }
    }

    pub fn holds(&self) -> bool {
        self.lhs > self.rhs
    }
}

/// Numbers are emitted as JSON integers when they fit in 128 bits, else as decimal strings.
fn serialize_big<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i128() {
        Some(x) => s.serialize_i128(x),
        None => s.serialize_str(&v.to_string()),
    }
}

/// Outcome of a cubiquity test with its certificate.
///
/// * `NotCubiquitous` carries a base point `x` when one is known: the cube
///   `x + {0,1}^n` contains no lattice point.
/// * `Obstructed` carries the violated inequality when the obstruction is numeric.
/// * `Cubiquitous` from the Hajós test carries the Hajós basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Vec<i64>>,
    pub inequality: Option<Inequality>,
    pub hajos_basis: Option<SquareMatrix<i64>>,
}

impl Verdict {
    pub fn cubiquitous() -> Self {
        Self::bare(Status::Cubiquitous)
    }

    pub fn inconclusive() -> Self {
        Self::bare(Status::Inconclusive)
    }

    pub fn not_cubiquitous(witness: Option<Vec<i64>>) -> Self {
        Self { witness, ..Self::bare(Status::NotCubiquitous) }
    }

    pub fn obstructed(inequality: Option<Inequality>) -> Self {
        Self { inequality, ..Self::bare(Status::Obstructed) }
    }

    fn bare(status: Status) -> Self {
        Self { status, witness: None, inequality: None, hajos_basis: None }
    }
}
