//! Exhaustive axiom checks over basis tuples.
//!
//! Every law involved is multilinear, so checking it on all tuples of basis
//! elements decides it for the whole algebra.

use std::fmt;

use serde::Serialize;

use super::Instance;
use crate::exactlin::{kernel, CoordVector, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CheckId {
    V1,
    V2,
    V3,
    V4,
    V5,
    V6,
    V7,
    V8,
    V9,
    V10,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::V1,
        CheckId::V2,
        CheckId::V3,
        CheckId::V4,
        CheckId::V5,
        CheckId::V6,
        CheckId::V7,
        CheckId::V8,
        CheckId::V9,
        CheckId::V10,
    ];

    pub fn description(self) -> &'static str {
        match self {
            CheckId::V1 => "bracket is antisymmetric and satisfies Jacobi",
            CheckId::V2 => "A is commutative and associative",
            CheckId::V3 => "module law (ab)x = a(bx)",
            CheckId::V4 => "anchor is a Lie homomorphism",
            CheckId::V5 => "anchor is A-linear",
            CheckId::V6 => "anchor values are derivations (Leibniz)",
            CheckId::V7 => "compatibility [x, ay] = a[x,y] + rho(x)(a)y",
            CheckId::V8 => "H is abelian and acts diagonally with the declared labels",
            CheckId::V9 => "products respect the grading",
            CheckId::V10 => "centralizer of H in L equals H",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// First failing tuple of a check, with both sides of the violated identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub law: String,
    pub indices: Vec<usize>,
    pub lhs: CoordVector,
    pub rhs: CoordVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: CheckId,
    pub description: &'static str,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub instance: String,
    pub valid: bool,
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.valid
    }

    pub fn check(&self, id: CheckId) -> &CheckResult {
        self.checks
            .iter()
            .find(|c| c.id == id)
            .expect("all checks are run")
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Dense cache of basis products, indexed `[left][right]`.
struct Dense {
    lie: Vec<Vec<CoordVector>>,
    mul: Vec<Vec<CoordVector>>,
    act: Vec<Vec<CoordVector>>,
    anc: Vec<Vec<CoordVector>>,
    n: usize,
    m: usize,
}

fn table_cache(t: &super::StructureTable) -> Vec<Vec<CoordVector>> {
    let (l, r, _) = t.dims();
    (0..l)
        .map(|i| (0..r).map(|j| t.basis_product(i, j)).collect())
        .collect()
}

/// `Σ v_k * rows[fixed][k]` or `Σ v_k * rows[k][fixed]`.
fn lin(v: &CoordVector, pick: impl Fn(usize) -> CoordVector, out_dim: usize) -> CoordVector {
    let mut out = CoordVector::zeros(out_dim);
    for (k, c) in v.support() {
        out.add_scaled(c, &pick(k));
    }
    out
}

impl Dense {
    fn new(inst: &Instance) -> Self {
        Dense {
            lie: table_cache(inst.bracket_table()),
            mul: table_cache(inst.assoc_mul_table()),
            act: table_cache(inst.action_table()),
            anc: table_cache(inst.anchor_table()),
            n: inst.lie_dim(),
            m: inst.assoc_dim(),
        }
    }

    /// `[e_i, v]`
    fn br_left(&self, i: usize, v: &CoordVector) -> CoordVector {
        lin(v, |k| self.lie[i][k].clone(), self.n)
    }

    /// `a_i · b` for `b ∈ A`
    fn mul_left(&self, i: usize, b: &CoordVector) -> CoordVector {
        lin(b, |k| self.mul[i][k].clone(), self.m)
    }

    /// `b · a_j` for `b ∈ A`
    fn mul_right(&self, b: &CoordVector, j: usize) -> CoordVector {
        lin(b, |k| self.mul[k][j].clone(), self.m)
    }

    /// `a_i · x` for `x ∈ L`
    fn act_left(&self, i: usize, x: &CoordVector) -> CoordVector {
        lin(x, |k| self.act[i][k].clone(), self.n)
    }

    /// `b · e_j` for `b ∈ A`
    fn act_by(&self, b: &CoordVector, j: usize) -> CoordVector {
        lin(b, |k| self.act[k][j].clone(), self.n)
    }

    /// `ρ(e_i)(b)`
    fn anc_left(&self, i: usize, b: &CoordVector) -> CoordVector {
        lin(b, |k| self.anc[i][k].clone(), self.m)
    }

    /// `ρ(x)(a_j)`
    fn anc_of(&self, x: &CoordVector, j: usize) -> CoordVector {
        lin(x, |k| self.anc[k][j].clone(), self.m)
    }
}

fn cx(
    law: &str,
    indices: Vec<usize>,
    lhs: CoordVector,
    rhs: CoordVector,
) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample {
        law: law.to_string(),
        indices,
        lhs,
        rhs,
    })
}

fn v1(d: &Dense) -> Option<Counterexample> {
    let n = d.n;
    for i in 0..n {
        for j in i..n {
            let lhs = d.lie[i][j].clone();
            let rhs = d.lie[j][i].scaled(&-Scalar::one());
            if let Some(c) = cx("[x,y] = -[y,x]", vec![i, j], lhs, rhs) {
                return Some(c);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut lhs = d.br_left(i, &d.lie[j][k]);
                lhs.add_scaled(&Scalar::one(), &d.br_left(j, &d.lie[k][i]));
                lhs.add_scaled(&Scalar::one(), &d.br_left(k, &d.lie[i][j]));
                let found = cx(
                    "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0",
                    vec![i, j, k],
                    lhs,
                    CoordVector::zeros(n),
                );
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

fn v2(d: &Dense) -> Option<Counterexample> {
    let m = d.m;
    for a in 0..m {
        for b in a..m {
            let found = cx(
                "ab = ba",
                vec![a, b],
                d.mul[a][b].clone(),
                d.mul[b][a].clone(),
            );
            if found.is_some() {
                return found;
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let lhs = d.mul_right(&d.mul[a][b], c);
                let rhs = d.mul_left(a, &d.mul[b][c]);
                let found = cx("(ab)c = a(bc)", vec![a, b, c], lhs, rhs);
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

fn v3(d: &Dense) -> Option<Counterexample> {
    for a in 0..d.m {
        for b in 0..d.m {
            for x in 0..d.n {
                let lhs = d.act_by(&d.mul[a][b], x);
                let rhs = d.act_left(a, &d.act[b][x]);
                let found = cx("(ab)x = a(bx)", vec![a, b, x], lhs, rhs);
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

fn v4(d: &Dense) -> Option<Counterexample> {
    for x in 0..d.n {
        for y in 0..d.n {
            for a in 0..d.m {
                let lhs = d.anc_of(&d.lie[x][y], a);
                let rhs = d
                    .anc_left(x, &d.anc[y][a])
                    .sub(&d.anc_left(y, &d.anc[x][a]));
                let found = cx(
                    "rho([x,y])(a) = rho(x)(rho(y)(a)) - rho(y)(rho(x)(a))",
                    vec![x, y, a],
                    lhs,
                    rhs,
                );
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

fn v5(d: &Dense) -> Option<Counterexample> {
    for a in 0..d.m {
        for x in 0..d.n {
            for b in 0..d.m {
                let lhs = d.anc_of(&d.act[a][x], b);
                let rhs = d.mul_left(a, &d.anc[x][b]);
                let found = cx("rho(ax)(b) = a rho(x)(b)", vec![a, x, b], lhs, rhs);
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

fn v6(d: &Dense) -> Option<Counterexample> {
    for x in 0..d.n {
        for a in 0..d.m {
            for b in 0..d.m {
                let lhs = d.anc_left(x, &d.mul[a][b]);
                let rhs = d
                    .mul_right(&d.anc[x][a], b)
                    .add(&d.mul_left(a, &d.anc[x][b]));
                let found = cx(
                    "rho(x)(ab) = rho(x)(a) b + a rho(x)(b)",
                    vec![x, a, b],
                    lhs,
                    rhs,
                );
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

fn v7(d: &Dense) -> Option<Counterexample> {
    for x in 0..d.n {
        for a in 0..d.m {
            for y in 0..d.n {
                let lhs = d.br_left(x, &d.act[a][y]);
                let rhs = d.act_left(a, &d.lie[x][y]).add(&d.act_by(&d.anc[x][a], y));
                let found = cx("[x, ay] = a[x,y] + rho(x)(a) y", vec![x, a, y], lhs, rhs);
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

fn v8(inst: &Instance, d: &Dense) -> Option<Counterexample> {
    let lie = inst.lie_basis();
    let assoc = inst.assoc_basis();
    for (pos, h) in lie.zero_sector().range().enumerate() {
        for i in 0..d.n {
            let expected = CoordVector::unit(d.n, i).scaled(lie.label_of(i).at(pos));
            let found = cx(
                "[h, x] = label(x)(h) x",
                vec![h, i],
                d.lie[h][i].clone(),
                expected,
            );
            if found.is_some() {
                return found;
            }
        }
        for j in 0..d.m {
            let expected = CoordVector::unit(d.m, j).scaled(assoc.label_of(j).at(pos));
            let found = cx(
                "rho(h)(a) = label(a)(h) a",
                vec![h, j],
                d.anc[h][j].clone(),
                expected,
            );
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

fn v9(inst: &Instance) -> Option<Counterexample> {
    let lie = inst.lie_basis();
    let assoc = inst.assoc_basis();
    let tables = [
        (inst.bracket_table(), lie, lie, lie),
        (inst.assoc_mul_table(), assoc, assoc, assoc),
        (inst.action_table(), assoc, lie, lie),
        (inst.anchor_table(), lie, assoc, assoc),
    ];
    for (table, left, right, out) in tables {
        for (i, j, k, _) in table.entries() {
            let target = left.label_of(i) + right.label_of(j);
            if out.label_of(k) != &target {
                let product = table.basis_product(i, j);
                let allowed = out.subspace(&target);
                let mut inside = CoordVector::zeros(product.dim());
                for (p, c) in product.support() {
                    if allowed
                        .contains(&CoordVector::unit(product.dim(), p))
                        .unwrap_or(false)
                    {
                        inside.add_scaled(c, &CoordVector::unit(product.dim(), p));
                    }
                }
                return Some(Counterexample {
                    law: format!("{} product lands in the sector {target}", table.name()),
                    indices: vec![i, j, k],
                    lhs: product,
                    rhs: inside,
                });
            }
        }
    }
    None
}

fn v10(inst: &Instance, d: &Dense) -> Option<Counterexample> {
    let h_range = inst.lie_basis().zero_sector().range();
    let images: Vec<CoordVector> = (0..d.n)
        .map(|x| CoordVector::concat(h_range.clone().map(|h| &d.lie[h][x])))
        .collect();
    let codomain = h_range.len() * d.n;
    let centralizer = if d.n == 0 {
        Subspace::zero(0)
    } else {
        kernel(&images, codomain).expect("images share one dimension")
    };
    let cartan = inst.cartan();
    if centralizer == cartan {
        return None;
    }
    let zero = CoordVector::zeros(d.n);
    if let Some(v) = centralizer
        .basis()
        .iter()
        .find(|v| !cartan.contains(v).unwrap_or(false))
    {
        return Some(Counterexample {
            law: "element outside H commutes with H".into(),
            indices: vec![],
            lhs: v.clone(),
            rhs: zero,
        });
    }
    let v = cartan
        .basis()
        .iter()
        .find(|v| !centralizer.contains(v).unwrap_or(false))
        .expect("subspaces differ");
    Some(Counterexample {
        law: "element of H does not commute with H".into(),
        indices: vec![],
        lhs: v.clone(),
        rhs: zero,
    })
}

/// Runs every check and reports the first counterexample of each.
pub fn validate(inst: &Instance) -> ValidationReport {
    let d = Dense::new(inst);
    let outcomes = [
        (CheckId::V1, v1(&d)),
        (CheckId::V2, v2(&d)),
        (CheckId::V3, v3(&d)),
        (CheckId::V4, v4(&d)),
        (CheckId::V5, v5(&d)),
        (CheckId::V6, v6(&d)),
        (CheckId::V7, v7(&d)),
        (CheckId::V8, v8(inst, &d)),
        (CheckId::V9, v9(inst)),
        (CheckId::V10, v10(inst, &d)),
    ];
    let checks: Vec<CheckResult> = outcomes
        .into_iter()
        .map(|(id, counterexample)| CheckResult {
            id,
            description: id.description(),
            passed: counterexample.is_none(),
            counterexample,
        })
        .collect();
    ValidationReport {
        instance: inst.name().to_string(),
        valid: checks.iter().all(|c| c.passed),
        checks,
    }
}

/// `Ker ρ`: elements of `L` whose anchor vanishes on every basis vector of `A`.
pub fn kernel_of_anchor(inst: &Instance) -> Subspace {
    let n = inst.lie_dim();
    let m = inst.assoc_dim();
    if m == 0 {
        return Subspace::full(n);
    }
    let t = inst.anchor_table();
    let images: Vec<CoordVector> = (0..n)
        .map(|x| {
            let parts: Vec<CoordVector> = (0..m).map(|a| t.basis_product(x, a)).collect();
            CoordVector::concat(&parts)
        })
        .collect();
    kernel(&images, m * m).expect("images share one dimension")
}
