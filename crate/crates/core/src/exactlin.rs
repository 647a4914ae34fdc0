//! Exact rational linear algebra.
//!
//! Every subspace is stored in reduced row-echelon form, which is canonical:
//! two subspaces are equal exactly when their basis matrices are identical.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`; panics if `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Self {
        Scalar(self.0.recip())
    }
}

impl fmt::Display for Scalar {
    /// Canonical `p/q` form; the denominator is always written.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p` or `p/q` with optional sign on `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidScalar(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let numer: BigInt = p.parse().map_err(|_| bad())?;
        let denom: BigInt = q.parse().map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Scalar(BigRational::new(numer, denom)))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);
scalar_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

/// Coordinates of an element relative to a fixed ambient basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoordVector(Vec<Scalar>);

impl CoordVector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        CoordVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        CoordVector(vec![Scalar::zero(); dim])
    }

    /// The `i`-th standard basis vector of a `dim`-dimensional space.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        CoordVector(entries.iter().map(|&n| Scalar::from_int(n)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Indices and values of the nonzero entries.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        CoordVector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &CoordVector) {
        debug_assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            if !y.is_zero() {
                *x += &(c * y);
            }
        }
    }

    pub fn add(&self, other: &CoordVector) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &CoordVector) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        out
    }

    /// Concatenation, used to stack the images of several linear maps.
    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a CoordVector>) -> Self {
        CoordVector(
            parts
                .into_iter()
                .flat_map(|p| p.0.iter().cloned())
                .collect(),
        )
    }

    fn first_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }
}

impl Index<usize> for CoordVector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl fmt::Display for CoordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
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

fn check_dims(vectors: &[CoordVector], ambient_dim: usize) -> Result<()> {
    match vectors.iter().find(|v| v.dim() != ambient_dim) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: ambient_dim,
            found: v.dim(),
        }),
        None => Ok(()),
    }
}

/// Reduced row-echelon form. Returns the nonzero rows and their pivot columns.
fn rref(mut rows: Vec<CoordVector>, ncols: usize) -> (Vec<CoordVector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        if !inv.is_one() {
            rows[r] = rows[r].scaled(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let c = -row[col].clone();
                row.add_scaled(&c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// A subspace of `K^n` held by its reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<CoordVector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| CoordVector::unit(ambient_dim, i))
                .collect(),
        }
    }

    /// Span of a set of standard basis vectors.
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vectors: Vec<_> = indices
            .into_iter()
            .map(|i| CoordVector::unit(ambient_dim, i))
            .collect();
        Self::span_unchecked(vectors, ambient_dim)
    }

    pub fn span(vectors: &[CoordVector], ambient_dim: usize) -> Result<Self> {
        check_dims(vectors, ambient_dim)?;
        Ok(Self::span_unchecked(vectors.to_vec(), ambient_dim))
    }

    pub(crate) fn span_unchecked(vectors: Vec<CoordVector>, ambient_dim: usize) -> Self {
        let rows: Vec<_> = vectors.into_iter().filter(|v| !v.is_zero()).collect();
        let (basis, _) = rref(rows, ambient_dim);
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &[CoordVector] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.first_nonzero().expect("echelon rows are nonzero"))
            .collect()
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Residue of `v` after eliminating against the echelon basis.
    fn reduce(&self, v: &CoordVector) -> CoordVector {
        let mut r = v.clone();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                r.add_scaled(&c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &CoordVector) -> Result<bool> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.dim(),
            });
        }
        Ok(self.reduce(v).is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.basis.iter().all(|v| other.reduce(v).is_zero()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::span_unchecked(rows, self.ambient_dim))
    }

    /// Sum of several subspaces; `ambient_dim` fixes the result for an empty list.
    pub fn sum_all<'a>(
        parts: impl IntoIterator<Item = &'a Subspace>,
        ambient_dim: usize,
    ) -> Result<Subspace> {
        let mut rows = Vec::new();
        for p in parts {
            if p.ambient_dim != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: p.ambient_dim,
                });
            }
            rows.extend(p.basis.iter().cloned());
        }
        Ok(Self::span_unchecked(rows, ambient_dim))
    }

    /// Intersection, computed from the kernel of `(a, b) ↦ Σ aᵢsᵢ − Σ bⱼtⱼ`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let images: Vec<CoordVector> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(|t| t.scaled(&-Scalar::one())))
            .collect();
        let relations = kernel(&images, self.ambient_dim)?;
        let p = self.dim();
        let vectors = relations
            .basis()
            .iter()
            .map(|rel| self.combine(&rel.entries()[..p]))
            .collect();
        Ok(Self::span_unchecked(vectors, self.ambient_dim))
    }

    /// `Σ coeffs[i] * basis[i]`.
    pub fn combine(&self, coeffs: &[Scalar]) -> CoordVector {
        let mut out = CoordVector::zeros(self.ambient_dim);
        for (c, row) in coeffs.iter().zip(&self.basis) {
            out.add_scaled(c, row);
        }
        out
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &CoordVector) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(
            self.pivots().into_iter().map(|p| v[p].clone()).collect(),
        ))
    }

    /// A complement of `self` inside `within`.
    ///
    /// `self` is expressed in the echelon coordinates of `within` and reduced;
    /// the complement is spanned by the basis vectors of `within` sitting at the
    /// non-pivot coordinates. Deterministic and lowest-index first.
    pub fn complement_in(&self, within: &Subspace) -> Result<Subspace> {
        self.same_ambient(within)?;
        if !self.is_subspace_of(within)? {
            return Err(Error::NotContained);
        }
        let k = within.dim();
        let local: Vec<CoordVector> = self
            .basis
            .iter()
            .map(|v| CoordVector::new(within.coordinates(v).unwrap().expect("contained")))
            .collect();
        let (_, pivots) = rref(local, k);
        let vectors = (0..k)
            .filter(|j| !pivots.contains(j))
            .map(|j| within.basis[j].clone())
            .collect();
        Ok(Self::span_unchecked(vectors, self.ambient_dim))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Kernel of the linear map `K^m → K^n` sending the `i`-th standard basis
/// vector to `images[i]` (each of dimension `codomain_dim`).
pub fn kernel(images: &[CoordVector], codomain_dim: usize) -> Result<Subspace> {
    check_dims(images, codomain_dim)?;
    let m = images.len();
    let rows: Vec<CoordVector> = (0..codomain_dim)
        .map(|r| CoordVector::new(images.iter().map(|col| col[r].clone()).collect()))
        .filter(|row| !row.is_zero())
        .collect();
    let (reduced, pivots) = rref(rows, m);
    let vectors = (0..m)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = CoordVector::zeros(m);
            v.0[free] = Scalar::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v.0[p] = -row[free].clone();
            }
            v
        })
        .collect();
    Ok(Subspace::span_unchecked(vectors, m))
}

/// Vectors of `domain` annihilated by a linear map, given the images of the
/// echelon basis of `domain` (all of the same dimension).
pub fn kernel_on(domain: &Subspace, images: &[CoordVector]) -> Result<Subspace> {
    if images.len() != domain.dim() {
        return Err(Error::DimensionMismatch {
            expected: domain.dim(),
            found: images.len(),
        });
    }
    let codomain_dim = images.first().map_or(0, CoordVector::dim);
    let coeffs = kernel(images, codomain_dim)?;
    let vectors = coeffs
        .basis()
        .iter()
        .map(|c| domain.combine(c.entries()))
        .collect();
    Ok(Subspace::span_unchecked(vectors, domain.ambient_dim()))
}

/// Coordinates of `v` relative to an arbitrary linearly independent list.
pub fn solve_in_basis(basis: &[CoordVector], v: &CoordVector) -> Result<Option<Vec<Scalar>>> {
    let n = v.dim();
    check_dims(basis, n)?;
    let mut images = basis.to_vec();
    images.push(v.scaled(&-Scalar::one()));
    let ker = kernel(&images, n)?;
    let m = basis.len();
    // The kernel has a vector with last coordinate 1 iff v lies in the span.
    for k in ker.basis() {
        if !k[m].is_zero() {
            let inv = k[m].recip();
            return Ok(Some(k.entries()[..m].iter().map(|c| c * &inv).collect()));
        }
    }
    Ok(None)
}

/// Inverse of a square matrix given by rows, or `None` if singular.
pub fn invert(rows: &[CoordVector]) -> Option<Vec<CoordVector>> {
    let n = rows.len();
    if rows.iter().any(|r| r.dim() != n) {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let augmented: Vec<CoordVector> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| CoordVector::concat([r, &CoordVector::unit(n, i)]))
        .collect();
    let (reduced, pivots) = rref(augmented, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(
        reduced
            .into_iter()
            .map(|r| CoordVector::new(r.0[n..].to_vec()))
            .collect(),
    )
}

/// Row vector times matrix: `Σ v[i] * rows[i]`.
pub fn row_times(v: &CoordVector, rows: &[CoordVector], out_dim: usize) -> CoordVector {
    let mut out = CoordVector::zeros(out_dim);
    for (i, c) in v.support() {
        out.add_scaled(c, &rows[i]);
    }
    out
}
