use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::{CoordVector, Scalar};

/// Sparse structure constants of a bilinear map `X × Y → Z` on fixed bases:
/// entry `(i, j, k, c)` means the product of basis elements `i` and `j` has
/// coefficient `c` on basis element `k`. Absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureTable {
    name: &'static str,
    left_dim: usize,
    right_dim: usize,
    out_dim: usize,
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl StructureTable {
    pub fn new(
        name: &'static str,
        (left_dim, right_dim, out_dim): (usize, usize, usize),
        raw: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, j, k, c) in raw {
            if i >= left_dim || j >= right_dim || k >= out_dim {
                return Err(Error::Structure(format!(
                    "{name} entry ({i}, {j}, {k}) out of range for dimensions ({left_dim}, {right_dim}, {out_dim})"
                )));
            }
            if c.is_zero() {
                return Err(Error::Structure(format!(
                    "{name} entry ({i}, {j}, {k}) has zero coefficient"
                )));
            }
            if entries.insert((i, j, k), c).is_some() {
                return Err(Error::DuplicateEntry {
                    table: name,
                    i,
                    j,
                    k,
                });
            }
        }
        Ok(StructureTable {
            name,
            left_dim,
            right_dim,
            out_dim,
            entries,
        })
    }

    /// Table whose basis products are given by `f`; zero coefficients are dropped.
    pub fn from_products(
        name: &'static str,
        dims: (usize, usize, usize),
        mut f: impl FnMut(usize, usize) -> CoordVector,
    ) -> Self {
        let mut raw = Vec::new();
        for i in 0..dims.0 {
            for j in 0..dims.1 {
                let v = f(i, j);
                debug_assert_eq!(v.dim(), dims.2);
                raw.extend(v.support().map(|(k, c)| (i, j, k, c.clone())));
            }
        }
        Self::new(name, dims, raw).expect("products are well formed by construction")
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left_dim, self.right_dim, self.out_dim)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in lexicographic `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Option<&Scalar> {
        self.entries.get(&(i, j, k))
    }

    /// Replaces (or removes, for zero) a single coefficient.
    pub fn with_entry(&self, i: usize, j: usize, k: usize, c: Scalar) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            out.entries.remove(&(i, j, k));
        } else {
            out.entries.insert((i, j, k), c);
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> CoordVector {
        let mut out = vec![Scalar::zero(); self.out_dim];
        for (&(_, _, k), c) in self.entries.range((i, j, 0)..=(i, j, usize::MAX)) {
            out[k] = c.clone();
        }
        CoordVector::new(out)
    }

    /// Bilinear extension to arbitrary coordinate vectors.
    pub fn apply(&self, x: &CoordVector, y: &CoordVector) -> Result<CoordVector> {
        if x.dim() != self.left_dim {
            return Err(Error::DimensionMismatch {
                expected: self.left_dim,
                found: x.dim(),
            });
        }
        if y.dim() != self.right_dim {
            return Err(Error::DimensionMismatch {
                expected: self.right_dim,
                found: y.dim(),
            });
        }
        let mut out = vec![Scalar::zero(); self.out_dim];
        for (i, xi) in x.support() {
            let lo = (i, 0, 0);
            let hi = (i, usize::MAX, usize::MAX);
            for (&(_, j, k), c) in self.entries.range(lo..=hi) {
                let yj = &y[j];
                if !yj.is_zero() {
                    out[k] += &(&(xi * yj) * c);
                }
            }
        }
        Ok(CoordVector::new(out))
    }
}
