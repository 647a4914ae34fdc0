use std::fmt;
use std::ops::{Add, Neg};

use serde::{Deserialize, Serialize};

use num_traits::One;

use crate::exactlin::Scalar;

/// A linear form on the Cartan subalgebra, stored as its values on the chosen
/// Cartan basis. Used both for roots of `L` and weights of `A`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Functional(Vec<Scalar>);

impl Functional {
    pub fn new(values: Vec<Scalar>) -> Self {
        Functional(values)
    }

    pub fn zero(cartan_dim: usize) -> Self {
        Functional(vec![Scalar::zero(); cartan_dim])
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Functional(values.iter().map(|&n| Scalar::from_int(n)).collect())
    }

    pub fn values(&self) -> &[Scalar] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Value on the `a`-th Cartan basis vector.
    pub fn at(&self, a: usize) -> &Scalar {
        &self.0[a]
    }
}

impl Add for &Functional {
    type Output = Functional;
    fn add(self, rhs: &Functional) -> Functional {
        debug_assert_eq!(self.len(), rhs.len());
        Functional(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Neg for &Functional {
    type Output = Functional;
    fn neg(self) -> Functional {
        Functional(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if c.denom().is_one() {
                write!(f, "{}", c.numer())?;
            } else {
                write!(f, "{c}")?;
            }
        }
        write!(f, ")")
    }
}
