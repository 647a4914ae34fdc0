//! Oracles for the integration tests.
//!
//! Dense linear algebra on `BigRational` and direct evaluation of the
//! structure tables. None of this goes through the library's `Subspace` or
//! product machinery, so agreement with the library is a real cross-check.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};

use splitlr::exactlin::{CoordVector, Scalar, Subspace};
use splitlr::model::{Functional, GradedBasis, Instance, StructureTable};

pub type Q = BigRational;
pub type Vector = Vec<Q>;

pub fn q(s: &Scalar) -> Q {
    Q::new(s.numer().clone(), s.denom().clone())
}

pub fn int(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn vector(v: &CoordVector) -> Vector {
    v.entries().iter().map(q).collect()
}

pub fn coord(v: &[Q]) -> CoordVector {
    CoordVector::new(
        v.iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()).parse().unwrap())
            .collect(),
    )
}

pub fn ints(v: &[i64]) -> Vector {
    v.iter().map(|&n| int(n)).collect()
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

pub fn units(n: usize) -> Vec<Vector> {
    (0..n).map(|i| unit(n, i)).collect()
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn basis_of(s: &Subspace) -> Vec<Vector> {
    s.basis().iter().map(vector).collect()
}

/// Row echelon form of the nonzero rows; the rows returned are independent.
pub fn echelon(vs: &[Vector]) -> Vec<Vector> {
    let mut rows: Vec<Vector> = vs.iter().filter(|v| !is_zero(v)).cloned().collect();
    let Some(width) = rows.first().map(Vec::len) else {
        return rows;
    };
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][col].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = &rows[i][col] / &pivot;
                let pivot_row = rows[r].clone();
                for (c, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *c -= &f * p;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

pub fn rank(vs: &[Vector]) -> usize {
    echelon(vs).len()
}

pub fn in_span(v: &[Q], vs: &[Vector]) -> bool {
    let mut all = vs.to_vec();
    all.push(v.to_vec());
    rank(&all) == rank(vs)
}

pub fn contained(a: &[Vector], b: &[Vector]) -> bool {
    a.iter().all(|v| in_span(v, b))
}

pub fn same_span(a: &[Vector], b: &[Vector]) -> bool {
    contained(a, b) && contained(b, a)
}

pub fn bilinear(t: &StructureTable, x: &[Q], y: &[Q]) -> Vector {
    let (l, r, out) = t.dims();
    assert_eq!((x.len(), y.len()), (l, r));
    let mut v = vec![Q::zero(); out];
    for (i, j, k, c) in t.entries() {
        if !x[i].is_zero() && !y[j].is_zero() {
            v[k] += &x[i] * &y[j] * q(c);
        }
    }
    v
}

pub fn products(t: &StructureTable, xs: &[Vector], ys: &[Vector]) -> Vec<Vector> {
    xs.iter()
        .flat_map(|x| ys.iter().map(move |y| bilinear(t, x, y)))
        .collect()
}

pub fn sector_units(b: &GradedBasis, label: &Functional) -> Vec<Vector> {
    match b.sector(label) {
        Some(s) => s.range().map(|i| unit(b.total_dim(), i)).collect(),
        None => Vec::new(),
    }
}

pub fn zero_units(b: &GradedBasis) -> Vec<Vector> {
    b.zero_sector()
        .range()
        .map(|i| unit(b.total_dim(), i))
        .collect()
}

/// The first failing part of the three-part ideal definition on `s ⊆ L`.
pub fn lie_ideal_failure(inst: &Instance, s: &[Vector]) -> Option<String> {
    let l = units(inst.lie_dim());
    let a = units(inst.assoc_dim());
    for x in s {
        for y in &l {
            if !in_span(&bilinear(inst.bracket_table(), x, y), s) {
                return Some(format!("[s, L] escapes at s = {x:?}"));
            }
        }
        for b in &a {
            if !in_span(&bilinear(inst.action_table(), b, x), s) {
                return Some(format!("A s escapes at s = {x:?}"));
            }
            let rho = bilinear(inst.anchor_table(), x, b);
            for y in &l {
                if !in_span(&bilinear(inst.action_table(), &rho, y), s) {
                    return Some(format!("rho(s)(A) L escapes at s = {x:?}"));
                }
            }
        }
    }
    None
}

pub fn is_assoc_ideal(inst: &Instance, s: &[Vector]) -> bool {
    let a = units(inst.assoc_dim());
    s.iter().all(|x| {
        a.iter()
            .all(|b| in_span(&bilinear(inst.assoc_mul_table(), b, x), s))
    })
}

/// Smallest ideal of L containing `s`, by naive saturation.
pub fn closure_l(inst: &Instance, s: &[Vector]) -> Vec<Vector> {
    let l = units(inst.lie_dim());
    let a = units(inst.assoc_dim());
    let mut cur = echelon(s);
    loop {
        let mut next = cur.clone();
        for x in &cur {
            for y in &l {
                next.push(bilinear(inst.bracket_table(), x, y));
            }
            for b in &a {
                next.push(bilinear(inst.action_table(), b, x));
                let rho = bilinear(inst.anchor_table(), x, b);
                for y in &l {
                    next.push(bilinear(inst.action_table(), &rho, y));
                }
            }
        }
        let next = echelon(&next);
        if next.len() == cur.len() {
            return cur;
        }
        cur = next;
    }
}

pub fn closure_a(inst: &Instance, s: &[Vector]) -> Vec<Vector> {
    let a = units(inst.assoc_dim());
    let mut cur = echelon(s);
    loop {
        let mut next = cur.clone();
        for x in &cur {
            for b in &a {
                next.push(bilinear(inst.assoc_mul_table(), b, x));
            }
        }
        let next = echelon(&next);
        if next.len() == cur.len() {
            return cur;
        }
        cur = next;
    }
}

/// `ker ρ` as the vectors `v` with `ρ(v)(a) = 0` for all `a`, by brute rank
/// test on the image of each basis element.
pub fn anchor_kernel(inst: &Instance) -> Vec<Vector> {
    let (n, m) = (inst.lie_dim(), inst.assoc_dim());
    // Kernel of the linear map whose i-th image is the concatenation of
    // ρ(e_i)(a_k) over k: transpose, then solve by elimination.
    let images: Vec<Vector> = (0..n)
        .map(|i| {
            let e = unit(n, i);
            (0..m)
                .flat_map(|k| bilinear(inst.anchor_table(), &e, &unit(m, k)))
                .collect()
        })
        .collect();
    nullspace(&images, n)
}

/// Vectors `c` with `Σ c_i images[i] = 0`.
pub fn nullspace(images: &[Vector], n: usize) -> Vec<Vector> {
    let width = images.first().map_or(0, Vec::len);
    // Augment each image with the identity row so elimination tracks combinations.
    let rows: Vec<Vector> = images
        .iter()
        .enumerate()
        .map(|(i, img)| {
            let mut r = img.clone();
            r.extend(unit(n, i));
            r
        })
        .collect();
    let mut rows = rows;
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][col].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = &rows[i][col] / &pivot;
                for c in 0..rows[i].len() {
                    let d = &f * &rows[r][c];
                    rows[i][c] -= d;
                }
            }
        }
        r += 1;
    }
    rows[r..].iter().map(|row| row[width..].to_vec()).collect()
}
