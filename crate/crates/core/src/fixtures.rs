//! The shipped fixture library.
//!
//! `F_SL2` is a Lie algebra viewed over `A = ℚ`. `F_TRUNC3`, `F_TRUNC4` and
//! `F_GL2N` are derivation algebras `L = Der(A)` with `ρ = id`, built from
//! explicit derivation matrices so that every table follows from `A` alone.

use crate::combinators::direct_sum;
use crate::error::{Error, Result};
use crate::exactlin::{solve_in_basis, CoordVector, Scalar};
use crate::model::{Functional, GradedBasis, Instance, InstanceParts, StructureTable};

pub const NAMES: [&str; 5] = ["F_SL2", "F_SL2SL2", "F_TRUNC3", "F_TRUNC4", "F_GL2N"];

pub fn describe(name: &str) -> Option<&'static str> {
    Some(match name {
        "F_SL2" => "sl2 over A = Q with zero anchor; basis h, e, f",
        "F_SL2SL2" => "direct sum of two copies of F_SL2",
        "F_TRUNC3" => "Der(Q[x]/(x^3)) over Q[x]/(x^3), anchor = identity",
        "F_TRUNC4" => "Der(Q[x]/(x^4)) over Q[x]/(x^4), anchor = identity",
        "F_GL2N" => "gl2 = Der(A) for A = span{x, y} with zero product, anchor = identity",
        _ => return None,
    })
}

pub fn fixture(name: &str) -> Result<Instance> {
    match name {
        "F_SL2" => Ok(sl2()),
        "F_SL2SL2" => Ok(sl2_sl2()),
        "F_TRUNC3" => Ok(truncated(3)),
        "F_TRUNC4" => Ok(truncated(4)),
        "F_GL2N" => Ok(gl2n()),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

pub fn all() -> Vec<Instance> {
    NAMES
        .iter()
        .map(|n| fixture(n).expect("catalogued"))
        .collect()
}

fn entries(raw: &[(usize, usize, usize, i64)]) -> Vec<(usize, usize, usize, Scalar)> {
    raw.iter()
        .map(|&(i, j, k, c)| (i, j, k, Scalar::from_int(c)))
        .collect()
}

/// `sl2` with basis `h, e, f`, `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`,
/// over `A = span{1}` acting by scalars.
pub fn sl2() -> Instance {
    let lie = GradedBasis::new(
        1,
        vec![
            (Functional::from_ints(&[0]), 1),
            (Functional::from_ints(&[2]), 1),
            (Functional::from_ints(&[-2]), 1),
        ],
    )
    .expect("valid layout");
    let assoc = GradedBasis::new(1, vec![(Functional::from_ints(&[0]), 1)]).expect("valid layout");
    let bracket = entries(&[
        (0, 1, 1, 2),
        (1, 0, 1, -2),
        (0, 2, 2, -2),
        (2, 0, 2, 2),
        (1, 2, 0, 1),
        (2, 1, 0, -1),
    ]);
    Instance::new(InstanceParts {
        name: "F_SL2".into(),
        cartan_dim: 1,
        lie,
        assoc,
        bracket: StructureTable::new("bracket", (3, 3, 3), bracket).expect("valid"),
        assoc_mul: StructureTable::new("assoc_mul", (1, 1, 1), entries(&[(0, 0, 0, 1)]))
            .expect("valid"),
        action: StructureTable::new(
            "action",
            (1, 3, 3),
            entries(&[(0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1)]),
        )
        .expect("valid"),
        anchor: StructureTable::new("anchor", (3, 1, 1), []).expect("valid"),
    })
    .expect("well formed")
}

pub fn sl2_sl2() -> Instance {
    direct_sum(&sl2(), &sl2()).with_name("F_SL2SL2")
}

/// A derivation algebra `L ⊆ Der(A)` given by matrices.
///
/// `derivations[i][j]` is the image of the `j`-th basis vector of `A` under the
/// `i`-th basis derivation. The span must be closed under commutators and
/// under multiplication by `A`; bracket, action and anchor are then read off.
pub fn derivation_instance(
    name: &str,
    cartan_dim: usize,
    lie_layout: Vec<(Functional, usize)>,
    assoc_layout: Vec<(Functional, usize)>,
    assoc_mul: StructureTable,
    derivations: Vec<Vec<CoordVector>>,
) -> Result<Instance> {
    let lie = GradedBasis::new(cartan_dim, lie_layout)?;
    let assoc = GradedBasis::new(cartan_dim, assoc_layout)?;
    let (n, m) = (lie.total_dim(), assoc.total_dim());
    if derivations.len() != n || derivations.iter().any(|d| d.len() != m) {
        return Err(Error::Structure(
            "derivation matrices do not match the layouts".into(),
        ));
    }
    let flatten = |cols: &[CoordVector]| CoordVector::concat(cols);
    let flat: Vec<CoordVector> = derivations.iter().map(|d| flatten(d)).collect();
    let apply = |d: &[CoordVector], v: &CoordVector| {
        let mut out = CoordVector::zeros(m);
        for (k, c) in v.support() {
            out.add_scaled(c, &d[k]);
        }
        out
    };
    let coords = |cols: Vec<CoordVector>| -> Result<CoordVector> {
        let target = flatten(&cols);
        let c = solve_in_basis(&flat, &target)?
            .ok_or_else(|| Error::Structure("derivation span is not closed".into()))?;
        Ok(CoordVector::new(c))
    };

    let mut bracket = Vec::new();
    let mut action = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let comm: Vec<CoordVector> = (0..m)
                .map(|a| {
                    apply(&derivations[i], &derivations[j][a])
                        .sub(&apply(&derivations[j], &derivations[i][a]))
                })
                .collect();
            bracket.push((i, j, coords(comm)?));
        }
    }
    for a in 0..m {
        for (j, d) in derivations.iter().enumerate() {
            let scaled: Vec<CoordVector> = d
                .iter()
                .map(|col| assoc_mul.apply(&CoordVector::unit(m, a), col))
                .collect::<Result<_>>()?;
            action.push((a, j, coords(scaled)?));
        }
    }
    let spread = |items: Vec<(usize, usize, CoordVector)>| {
        items
            .into_iter()
            .flat_map(|(i, j, v)| {
                v.support()
                    .map(|(k, c)| (i, j, k, c.clone()))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    };
    let anchor =
        StructureTable::from_products("anchor", (n, m, m), |x, a| derivations[x][a].clone());
    Instance::new(InstanceParts {
        name: name.to_string(),
        cartan_dim,
        lie,
        assoc,
        bracket: StructureTable::new("bracket", (n, n, n), spread(bracket))?,
        assoc_mul,
        action: StructureTable::new("action", (m, n, n), spread(action))?,
        anchor,
    })
}

/// `Der(ℚ[x]/(xⁿ))` over `ℚ[x]/(xⁿ)`.
///
/// `A` has basis `x^j` (weight `j`); `L` has basis `x^k∂` for `k = 1..n-1`
/// (root `k-1`), with `H = span{x∂}`.
pub fn truncated(n: usize) -> Instance {
    assert!(n >= 2, "need at least x and 1");
    let assoc_layout = (0..n)
        .map(|j| (Functional::from_ints(&[j as i64]), 1))
        .collect();
    let lie_layout = (1..n)
        .map(|k| (Functional::from_ints(&[k as i64 - 1]), 1))
        .collect();
    let assoc_mul = StructureTable::from_products("assoc_mul", (n, n, n), |i, j| {
        if i + j < n {
            CoordVector::unit(n, i + j)
        } else {
            CoordVector::zeros(n)
        }
    });
    let derivations = (1..n)
        .map(|k| {
            (0..n)
                .map(|j| {
                    if j > 0 && j + k - 1 < n {
                        CoordVector::unit(n, j + k - 1).scaled(&Scalar::from_int(j as i64))
                    } else {
                        CoordVector::zeros(n)
                    }
                })
                .collect()
        })
        .collect();
    derivation_instance(
        &format!("F_TRUNC{n}"),
        1,
        lie_layout,
        assoc_layout,
        assoc_mul,
        derivations,
    )
    .expect("truncated derivations form a closed span")
}

/// `gl₂ = Der(A)` for `A = span{x, y}` with zero product.
///
/// `L` has basis `x∂x, y∂y, x∂y, y∂x`; `A_0 = 0`.
pub fn gl2n() -> Instance {
    let v = |a: i64, b: i64| CoordVector::from_ints(&[a, b]);
    // columns: image of x, image of y
    let derivations = vec![
        vec![v(1, 0), v(0, 0)], // x∂x
        vec![v(0, 0), v(0, 1)], // y∂y
        vec![v(0, 0), v(1, 0)], // x∂y
        vec![v(0, 1), v(0, 0)], // y∂x
    ];
    derivation_instance(
        "F_GL2N",
        2,
        vec![
            (Functional::from_ints(&[0, 0]), 2),
            (Functional::from_ints(&[1, -1]), 1),
            (Functional::from_ints(&[-1, 1]), 1),
        ],
        vec![
            (Functional::from_ints(&[0, 0]), 0),
            (Functional::from_ints(&[1, 0]), 1),
            (Functional::from_ints(&[0, 1]), 1),
        ],
        StructureTable::new("assoc_mul", (2, 2, 2), []).expect("empty"),
        derivations,
    )
    .expect("gl2 is closed")
}
