use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::{Functional, GradedBasis, StructureTable};
use crate::error::{Error, Result};
use crate::exactlin::{CoordVector, Subspace};

/// A finite presentation of a split Lie-Rinehart algebra `(L, A)`.
///
/// The four tables carry, on graded bases:
/// * `bracket`: `L × L → L`, the Lie bracket;
/// * `assoc_mul`: `A × A → A`, the commutative product;
/// * `action`: `A × L → L`, the module structure `a·x`;
/// * `anchor`: `L × A → A`, the values `ρ(x)(a)`.
///
/// Construction only checks structure (dimensions, labels, index ranges).
/// Whether the axioms hold is decided by [`super::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    name: String,
    cartan_dim: usize,
    lie: GradedBasis,
    assoc: GradedBasis,
    bracket: StructureTable,
    assoc_mul: StructureTable,
    action: StructureTable,
    anchor: StructureTable,
}

/// Raw parts of an [`Instance`], in the order of the file format.
pub struct InstanceParts {
    pub name: String,
    pub cartan_dim: usize,
    pub lie: GradedBasis,
    pub assoc: GradedBasis,
    pub bracket: StructureTable,
    pub assoc_mul: StructureTable,
    pub action: StructureTable,
    pub anchor: StructureTable,
}

impl Instance {
    pub fn new(parts: InstanceParts) -> Result<Self> {
        let InstanceParts {
            name,
            cartan_dim,
            lie,
            assoc,
            bracket,
            assoc_mul,
            action,
            anchor,
        } = parts;
        if lie.zero_sector().dim != cartan_dim {
            return Err(Error::Structure(format!(
                "zero sector of L has dimension {}, but cartan_dim is {cartan_dim}",
                lie.zero_sector().dim
            )));
        }
        let (n, m) = (lie.total_dim(), assoc.total_dim());
        let expected = [
            (&bracket, (n, n, n)),
            (&assoc_mul, (m, m, m)),
            (&action, (m, n, n)),
            (&anchor, (n, m, m)),
        ];
        for (table, dims) in expected {
            if table.dims() != dims {
                return Err(Error::Structure(format!(
                    "{} table has dimensions {:?}, expected {:?}",
                    table.name(),
                    table.dims(),
                    dims
                )));
            }
        }
        Ok(Instance {
            name,
            cartan_dim,
            lie,
            assoc,
            bracket,
            assoc_mul,
            action,
            anchor,
        })
    }

    pub fn into_parts(self) -> InstanceParts {
        InstanceParts {
            name: self.name,
            cartan_dim: self.cartan_dim,
            lie: self.lie,
            assoc: self.assoc,
            bracket: self.bracket,
            assoc_mul: self.assoc_mul,
            action: self.action,
            anchor: self.anchor,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn cartan_dim(&self) -> usize {
        self.cartan_dim
    }

    pub fn lie_basis(&self) -> &GradedBasis {
        &self.lie
    }

    pub fn assoc_basis(&self) -> &GradedBasis {
        &self.assoc
    }

    pub fn lie_dim(&self) -> usize {
        self.lie.total_dim()
    }

    pub fn assoc_dim(&self) -> usize {
        self.assoc.total_dim()
    }

    pub fn bracket_table(&self) -> &StructureTable {
        &self.bracket
    }

    pub fn assoc_mul_table(&self) -> &StructureTable {
        &self.assoc_mul
    }

    pub fn action_table(&self) -> &StructureTable {
        &self.action
    }

    pub fn anchor_table(&self) -> &StructureTable {
        &self.anchor
    }

    /// The nonzero roots Γ, in presentation order.
    pub fn roots(&self) -> Vec<Functional> {
        self.lie.labels().cloned().collect()
    }

    /// The nonzero weights Λ, in presentation order.
    pub fn weights(&self) -> Vec<Functional> {
        self.assoc.labels().cloned().collect()
    }

    pub fn is_root(&self, f: &Functional) -> bool {
        !f.is_zero() && self.lie.has_label(f)
    }

    pub fn is_weight(&self, f: &Functional) -> bool {
        !f.is_zero() && self.assoc.has_label(f)
    }

    /// `H`, the zero sector of `L`.
    pub fn cartan(&self) -> Subspace {
        self.lie.zero_subspace()
    }

    /// `A_0`, the zero sector of `A`.
    pub fn assoc_zero(&self) -> Subspace {
        self.assoc.zero_subspace()
    }

    pub fn bracket(&self, x: &CoordVector, y: &CoordVector) -> Result<CoordVector> {
        self.bracket.apply(x, y)
    }

    pub fn mul(&self, a: &CoordVector, b: &CoordVector) -> Result<CoordVector> {
        self.assoc_mul.apply(a, b)
    }

    pub fn act(&self, a: &CoordVector, x: &CoordVector) -> Result<CoordVector> {
        self.action.apply(a, x)
    }

    /// `ρ(x)(a)`.
    pub fn anchor_apply(&self, x: &CoordVector, a: &CoordVector) -> Result<CoordVector> {
        self.anchor.apply(x, a)
    }

    /// A hash of the mathematical content (the name is excluded).
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.cartan_dim.hash(&mut h);
        self.lie.sectors().hash(&mut h);
        self.assoc.sectors().hash(&mut h);
        self.bracket.hash(&mut h);
        self.assoc_mul.hash(&mut h);
        self.action.hash(&mut h);
        self.anchor.hash(&mut h);
        h.finish()
    }
}
