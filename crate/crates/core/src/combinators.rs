//! Instance constructions used as test oracles: block sums and graded base changes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{invert, row_times, CoordVector, Scalar};
use crate::model::{Functional, GradedBasis, Instance, InstanceParts, StructureTable};

/// The instance with `H = 0`, `L = 0`, `A = 0`; neutral for [`direct_sum`].
pub fn zero_instance() -> Instance {
    let empty = || GradedBasis::new(0, vec![(Functional::zero(0), 0)]).expect("valid layout");
    let table = |name| StructureTable::new(name, (0, 0, 0), []).expect("empty table");
    Instance::new(InstanceParts {
        name: "ZERO".into(),
        cartan_dim: 0,
        lie: empty(),
        assoc: empty(),
        bracket: table("bracket"),
        assoc_mul: table("assoc_mul"),
        action: table("action"),
        anchor: table("anchor"),
    })
    .expect("zero instance is well formed")
}

fn pad(f: &Functional, before: usize, after: usize) -> Functional {
    let mut v = vec![Scalar::zero(); before];
    v.extend(f.values().iter().cloned());
    v.extend(std::iter::repeat_n(Scalar::zero(), after));
    Functional::new(v)
}

/// Layout of the summed basis and the two index embeddings.
fn sum_basis(
    x: &GradedBasis,
    y: &GradedBasis,
    mx: usize,
    my: usize,
) -> (GradedBasis, Vec<usize>, Vec<usize>) {
    let (hx, hy) = (x.zero_sector().dim, y.zero_sector().dim);
    let nx = x.total_dim();
    let mut layout = vec![(Functional::zero(mx + my), hx + hy)];
    layout.extend(
        x.graded_sectors()
            .iter()
            .map(|s| (pad(&s.label, 0, my), s.dim)),
    );
    layout.extend(
        y.graded_sectors()
            .iter()
            .map(|s| (pad(&s.label, mx, 0), s.dim)),
    );
    let basis = GradedBasis::new(mx + my, layout).expect("padded labels stay distinct");
    let ex = (0..nx).map(|i| if i < hx { i } else { i + hy }).collect();
    let ey = (0..y.total_dim())
        .map(|i| if i < hy { hx + i } else { nx + i })
        .collect();
    (basis, ex, ey)
}

fn embed_table(
    name: &'static str,
    dims: (usize, usize, usize),
    parts: [(&StructureTable, &[usize], &[usize], &[usize]); 2],
) -> StructureTable {
    let raw = parts.into_iter().flat_map(|(t, l, r, o)| {
        t.entries()
            .map(move |(i, j, k, c)| (l[i], r[j], o[k], c.clone()))
    });
    StructureTable::new(name, dims, raw.collect::<Vec<_>>()).expect("embeddings are injective")
}

/// Block-diagonal sum: `H = H_x ⊕ H_y`, labels padded with zeros, no cross products.
pub fn direct_sum(x: &Instance, y: &Instance) -> Instance {
    let (mx, my) = (x.cartan_dim(), y.cartan_dim());
    let (lie, lx, ly) = sum_basis(x.lie_basis(), y.lie_basis(), mx, my);
    let (assoc, ax, ay) = sum_basis(x.assoc_basis(), y.assoc_basis(), mx, my);
    let (n, m) = (lie.total_dim(), assoc.total_dim());
    let bracket = embed_table(
        "bracket",
        (n, n, n),
        [
            (x.bracket_table(), &lx, &lx, &lx),
            (y.bracket_table(), &ly, &ly, &ly),
        ],
    );
    let assoc_mul = embed_table(
        "assoc_mul",
        (m, m, m),
        [
            (x.assoc_mul_table(), &ax, &ax, &ax),
            (y.assoc_mul_table(), &ay, &ay, &ay),
        ],
    );
    let action = embed_table(
        "action",
        (m, n, n),
        [
            (x.action_table(), &ax, &lx, &lx),
            (y.action_table(), &ay, &ly, &ly),
        ],
    );
    let anchor = embed_table(
        "anchor",
        (n, m, m),
        [
            (x.anchor_table(), &lx, &ax, &ax),
            (y.anchor_table(), &ly, &ay, &ay),
        ],
    );
    Instance::new(InstanceParts {
        name: format!("{}+{}", x.name(), y.name()),
        cartan_dim: mx + my,
        lie,
        assoc,
        bracket,
        assoc_mul,
        action,
        anchor,
    })
    .expect("block sum is well formed")
}

fn random_invertible(rng: &mut ChaCha8Rng, d: usize) -> Vec<CoordVector> {
    loop {
        let rows: Vec<CoordVector> = (0..d)
            .map(|_| {
                CoordVector::new(
                    (0..d)
                        .map(|_| Scalar::from_int(rng.gen_range(-2..=2)))
                        .collect(),
                )
            })
            .collect();
        if invert(&rows).is_some() {
            return rows;
        }
    }
}

/// New basis (rows, in old coordinates) and the new layout for one graded basis.
///
/// The zero sector stays first and uses `zero_block` when given; the other
/// sectors are shuffled and get fresh random blocks.
fn scramble_basis(
    rng: &mut ChaCha8Rng,
    basis: &GradedBasis,
    relabel: &dyn Fn(&Functional) -> Functional,
    zero_block: Option<&[CoordVector]>,
) -> (Vec<CoordVector>, Vec<(Functional, usize)>) {
    let n = basis.total_dim();
    let mut order: Vec<usize> = (1..basis.sectors().len()).collect();
    order.shuffle(rng);
    order.insert(0, 0);
    let mut rows = Vec::with_capacity(n);
    let mut layout = Vec::with_capacity(order.len());
    for s in order {
        let sector = &basis.sectors()[s];
        let block = match zero_block {
            Some(b) if s == 0 => b.to_vec(),
            _ => random_invertible(rng, sector.dim),
        };
        for r in &block {
            let mut v = CoordVector::zeros(n);
            for (q, c) in r.support() {
                v.add_scaled(c, &CoordVector::unit(n, sector.start + q));
            }
            rows.push(v);
        }
        layout.push((relabel(&sector.label), sector.dim));
    }
    (rows, layout)
}

fn transform(
    t: &StructureTable,
    left: &[CoordVector],
    right: &[CoordVector],
    out_inverse: &[CoordVector],
) -> StructureTable {
    let (l, r, o) = t.dims();
    StructureTable::from_products(t.name(), (l, r, o), |i, j| {
        let p = t.apply(&left[i], &right[j]).expect("dimensions agree");
        row_times(&p, out_inverse, o)
    })
}

/// Random invertible base change inside every sector, plus a random order of
/// the nonzero sectors. The Cartan basis changes too, so labels are rewritten
/// as `λ'(h'_a) = Σ_b P[a][b] λ(h_b)`.
pub fn scramble(inst: &Instance, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = inst.cartan_dim();
    let cartan_change = random_invertible(&mut rng, h);
    let relabel = |f: &Functional| {
        Functional::new(
            cartan_change
                .iter()
                .map(|row| {
                    row.support()
                        .fold(Scalar::zero(), |acc, (b, c)| acc + c * f.at(b))
                })
                .collect(),
        )
    };
    // The Cartan block of L is exactly the change that defines the new labels.
    let (lie_rows, lie_layout) =
        scramble_basis(&mut rng, inst.lie_basis(), &relabel, Some(&cartan_change));
    let (assoc_rows, assoc_layout) = scramble_basis(&mut rng, inst.assoc_basis(), &relabel, None);

    let lie_inv = invert(&lie_rows).expect("block base change is invertible");
    let assoc_inv = invert(&assoc_rows).expect("block base change is invertible");
    let lie = GradedBasis::new(h, lie_layout).expect("base change keeps labels distinct");
    let assoc = GradedBasis::new(h, assoc_layout).expect("base change keeps labels distinct");
    Instance::new(InstanceParts {
        name: inst.name().to_string(),
        cartan_dim: h,
        lie,
        assoc,
        bracket: transform(inst.bracket_table(), &lie_rows, &lie_rows, &lie_inv),
        assoc_mul: transform(inst.assoc_mul_table(), &assoc_rows, &assoc_rows, &assoc_inv),
        action: transform(inst.action_table(), &assoc_rows, &lie_rows, &lie_inv),
        anchor: transform(inst.anchor_table(), &lie_rows, &assoc_rows, &assoc_inv),
    })
    .expect("base change preserves dimensions")
}
