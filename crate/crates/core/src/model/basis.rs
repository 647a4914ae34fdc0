use std::collections::HashMap;
use std::ops::Range;

use serde::Serialize;

use super::Functional;
use crate::error::{Error, Result};
use crate::exactlin::Subspace;

/// A block of consecutive basis indices sharing one root or weight label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Sector {
    pub label: Functional,
    pub start: usize,
    pub dim: usize,
}

impl Sector {
    pub fn range(&self) -> Range<usize> {
        self.start..self.start + self.dim
    }
}

/// A basis of `L` or `A` split into labelled sectors. The zero-labelled sector
/// (`H` resp. `A_0`) comes first and may be empty; every other sector is
/// nonempty and carries a distinct nonzero label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    sectors: Vec<Sector>,
    total_dim: usize,
    by_label: HashMap<Functional, usize>,
    sector_of_index: Vec<usize>,
}

impl GradedBasis {
    pub fn new(cartan_dim: usize, layout: Vec<(Functional, usize)>) -> Result<Self> {
        let Some((first, _)) = layout.first() else {
            return Err(Error::Structure("missing zero-label sector".into()));
        };
        if first.len() != cartan_dim || !first.is_zero() {
            return Err(Error::Structure(
                "the first sector must carry the zero label".into(),
            ));
        }
        let mut sectors = Vec::with_capacity(layout.len());
        let mut by_label = HashMap::new();
        let mut sector_of_index = Vec::new();
        let mut start = 0;
        for (pos, (label, dim)) in layout.into_iter().enumerate() {
            if label.len() != cartan_dim {
                return Err(Error::Structure(format!(
                    "sector {pos}: label has {} values, expected {cartan_dim}",
                    label.len()
                )));
            }
            if pos > 0 && label.is_zero() {
                return Err(Error::Structure(format!(
                    "sector {pos}: zero label appears more than once"
                )));
            }
            if pos > 0 && dim == 0 {
                return Err(Error::Structure(format!(
                    "sector {pos}: nonzero label {label} with empty sector"
                )));
            }
            if by_label.insert(label.clone(), pos).is_some() {
                return Err(Error::Structure(format!(
                    "sector {pos}: duplicate label {label}"
                )));
            }
            sector_of_index.extend(std::iter::repeat_n(pos, dim));
            sectors.push(Sector { label, start, dim });
            start += dim;
        }
        Ok(GradedBasis {
            sectors,
            total_dim: start,
            by_label,
            sector_of_index,
        })
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    pub fn zero_sector(&self) -> &Sector {
        &self.sectors[0]
    }

    /// Sectors with nonzero labels, in presentation order.
    pub fn graded_sectors(&self) -> &[Sector] {
        &self.sectors[1..]
    }

    /// The nonzero labels: Γ for `L`, Λ for `A`.
    pub fn labels(&self) -> impl Iterator<Item = &Functional> {
        self.graded_sectors().iter().map(|s| &s.label)
    }

    pub fn sector(&self, label: &Functional) -> Option<&Sector> {
        self.by_label.get(label).map(|&i| &self.sectors[i])
    }

    pub fn has_label(&self, label: &Functional) -> bool {
        self.by_label.contains_key(label)
    }

    pub fn sector_of(&self, index: usize) -> &Sector {
        &self.sectors[self.sector_of_index[index]]
    }

    pub fn label_of(&self, index: usize) -> &Functional {
        &self.sector_of(index).label
    }

    /// Basis indices of the sector labelled `label`; empty when absent.
    pub fn indices(&self, label: &Functional) -> Range<usize> {
        self.sector(label).map_or(0..0, Sector::range)
    }

    /// The sector subspace for `label`, or zero when the label is absent.
    pub fn subspace(&self, label: &Functional) -> Subspace {
        Subspace::coordinate(self.total_dim, self.indices(label))
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::coordinate(self.total_dim, self.zero_sector().range())
    }
}
