//! Hypotheses on root and weight systems, ideal closures and simplicity verdicts.
//!
//! Simplicity is only decided when every root and weight space is
//! one-dimensional and the relevant center vanishes. In that regime a nonzero
//! ideal that is not inside the zero sector contains a whole sector, so it
//! contains the ideal generated by that sector. The candidate ideals are the
//! sums of these single-sector closures; what can still hide in the zero
//! sector is handled separately.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::connect::{root_classes, weight_classes, ClassKind, ConnectionClass};
use crate::decomp::{
    decompose, is_assoc_ideal, is_lie_rinehart_ideal, product_span, subspace_product, Decomposition,
};
use crate::error::Result;
use crate::exactlin::{kernel_on, CoordVector, Subspace};
use crate::model::{kernel_of_anchor, Functional, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses5 {
    pub symmetric_roots: bool,
    pub symmetric_weights: bool,
    pub root_multiplicative: bool,
    pub maximal_length: bool,
    pub all_roots_connected: bool,
    pub all_weights_connected: bool,
}

fn symmetric(labels: &[Functional]) -> bool {
    let set: BTreeSet<&Functional> = labels.iter().collect();
    labels.iter().all(|f| set.contains(&-f))
}

/// The three product clauses, with `roots`/`weights` restricting which labels
/// take part (all of Γ and Λ for the whole algebra).
fn multiplicative(inst: &Instance, roots: &[Functional], weights: &[Functional]) -> bool {
    let lie = inst.lie_basis();
    let assoc = inst.assoc_basis();
    let root_set: BTreeSet<&Functional> = roots.iter().collect();
    let weight_set: BTreeSet<&Functional> = weights.iter().collect();
    for g in roots {
        for d in roots {
            if root_set.contains(&(g + d))
                && product_span(inst.bracket_table(), lie.indices(g), lie.indices(d)).is_zero()
            {
                return false;
            }
        }
        for a in weights {
            if root_set.contains(&(a + g))
                && product_span(inst.action_table(), assoc.indices(a), lie.indices(g)).is_zero()
            {
                return false;
            }
        }
    }
    for a in weights {
        for b in weights {
            if weight_set.contains(&(a + b))
                && product_span(inst.assoc_mul_table(), assoc.indices(a), assoc.indices(b))
                    .is_zero()
            {
                return false;
            }
        }
    }
    true
}

fn maximal_length(inst: &Instance) -> bool {
    inst.lie_basis()
        .graded_sectors()
        .iter()
        .chain(inst.assoc_basis().graded_sectors())
        .all(|s| s.dim == 1)
}

pub fn check_hypotheses(inst: &Instance) -> Result<Hypotheses5> {
    let roots = inst.roots();
    let weights = inst.weights();
    Ok(Hypotheses5 {
        symmetric_roots: symmetric(&roots),
        symmetric_weights: symmetric(&weights),
        root_multiplicative: multiplicative(inst, &roots, &weights),
        maximal_length: maximal_length(inst),
        all_roots_connected: root_classes(inst)?.len() <= 1,
        all_weights_connected: weight_classes(inst)?.len() <= 1,
    })
}

/// Least subspace containing `seed` and closed under `products`.
///
/// Only a spanning set needs to be pushed through the bilinear products, so
/// each vector that enlarges the span is processed exactly once.
fn close(seed: &Subspace, products: impl Fn(&CoordVector) -> Vec<CoordVector>) -> Subspace {
    let dim = seed.ambient_dim();
    let mut span = Subspace::zero(dim);
    let mut queue: VecDeque<CoordVector> = seed.basis().iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        if v.is_zero() || span.contains(&v).expect("same ambient space") {
            continue;
        }
        span = span
            .sum(&Subspace::span(std::slice::from_ref(&v), dim).expect("dimension checked"))
            .expect("same ambient space");
        queue.extend(products(&v));
    }
    span
}

/// Ideal closure inside an ideal `t` of `L`: stable under `[·, t]`, the
/// action of `A` and `ρ(·)(A)·t`.
pub fn ideal_closure_l_within(inst: &Instance, s: &Subspace, t: &Subspace) -> Subspace {
    let m = inst.assoc_dim();
    close(s, |v| {
        let mut out = Vec::new();
        for x in t.basis() {
            out.push(inst.bracket(v, x).expect("v ∈ L"));
        }
        for a in 0..m {
            let unit = CoordVector::unit(m, a);
            out.push(inst.act(&unit, v).expect("v ∈ L"));
            let r = inst.anchor_apply(v, &unit).expect("v ∈ L");
            if !r.is_zero() {
                for x in t.basis() {
                    out.push(inst.act(&r, x).expect("r ∈ A"));
                }
            }
        }
        out
    })
}

/// Ideal closure inside an ideal `j` of `A`: stable under multiplication by `j`.
pub fn ideal_closure_a_within(inst: &Instance, s: &Subspace, j: &Subspace) -> Subspace {
    close(s, |v| {
        j.basis()
            .iter()
            .map(|b| inst.mul(b, v).expect("v ∈ A"))
            .collect()
    })
}

pub fn ideal_closure_l(inst: &Instance, s: &Subspace) -> Subspace {
    ideal_closure_l_within(inst, s, &Subspace::full(inst.lie_dim()))
}

pub fn ideal_closure_a(inst: &Instance, s: &Subspace) -> Subspace {
    ideal_closure_a_within(inst, s, &Subspace::full(inst.assoc_dim()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Simple,
    NotSimple,
    Inconclusive,
}

/// A proper ideal with its support: the labels whose sectors it meets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProperIdeal {
    pub ideal: Subspace,
    pub support: Vec<Functional>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPair {
    pub first: Subspace,
    pub second: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityVerdict {
    pub verdict: Verdict,
    pub reason: String,
    pub witness: Option<ProperIdeal>,
    pub split_pair: Option<SplitPair>,
}

impl SimplicityVerdict {
    pub fn is_simple(&self) -> bool {
        self.verdict == Verdict::Simple
    }

    fn new(verdict: Verdict, reason: impl Into<String>) -> Self {
        SimplicityVerdict {
            verdict,
            reason: reason.into(),
            witness: None,
            split_pair: None,
        }
    }
}

/// An ideal `ambient` of `L` (or of `A`) with the labels graded inside it.
struct Scope<'a> {
    inst: &'a Instance,
    kind: ClassKind,
    ambient: Subspace,
    labels: Vec<Functional>,
}

impl Scope<'_> {
    fn sector(&self, f: &Functional) -> Subspace {
        match self.kind {
            ClassKind::Root => self.inst.lie_basis().subspace(f),
            ClassKind::Weight => self.inst.assoc_basis().subspace(f),
        }
    }

    fn zero_sector(&self) -> Subspace {
        let z = match self.kind {
            ClassKind::Root => self.inst.cartan(),
            ClassKind::Weight => self.inst.assoc_zero(),
        };
        z.intersect(&self.ambient).expect("same ambient space")
    }

    fn closure(&self, s: &Subspace) -> Subspace {
        match self.kind {
            ClassKind::Root => ideal_closure_l_within(self.inst, s, &self.ambient),
            ClassKind::Weight => ideal_closure_a_within(self.inst, s, &self.ambient),
        }
    }

    /// `Ker ρ ∩ ambient` on the L side; nothing is excluded on the A side.
    fn excluded(&self) -> Option<Subspace> {
        match self.kind {
            ClassKind::Root => Some(
                kernel_of_anchor(self.inst)
                    .intersect(&self.ambient)
                    .expect("same ambient space"),
            ),
            ClassKind::Weight => None,
        }
    }

    fn is_proper(&self, s: &Subspace) -> bool {
        !s.is_zero() && *s != self.ambient && self.excluded().as_ref() != Some(s)
    }

    fn center(&self) -> Subspace {
        let inst = self.inst;
        let images: Vec<CoordVector> = self
            .ambient
            .basis()
            .iter()
            .map(|v| {
                let parts: Vec<CoordVector> = match self.kind {
                    ClassKind::Root => self
                        .ambient
                        .basis()
                        .iter()
                        .map(|t| inst.bracket(v, t).expect("v ∈ L"))
                        .chain((0..inst.assoc_dim()).map(|a| {
                            inst.anchor_apply(v, &CoordVector::unit(inst.assoc_dim(), a))
                                .expect("v ∈ L")
                        }))
                        .collect(),
                    ClassKind::Weight => self
                        .ambient
                        .basis()
                        .iter()
                        .map(|b| inst.mul(v, b).expect("v ∈ A"))
                        .collect(),
                };
                CoordVector::concat(&parts)
            })
            .collect();
        kernel_on(&self.ambient, &images).expect("uniform image dimension")
    }

    /// Zero-sector elements that annihilate every graded piece of the scope.
    fn hidden(&self) -> Subspace {
        let inst = self.inst;
        let zero = self.zero_sector();
        let graded: Vec<CoordVector> = self
            .labels
            .iter()
            .flat_map(|f| self.sector(f).basis().to_vec())
            .collect();
        let images: Vec<CoordVector> = zero
            .basis()
            .iter()
            .map(|h| {
                let parts: Vec<CoordVector> = graded
                    .iter()
                    .map(|x| match self.kind {
                        ClassKind::Root => inst.bracket(h, x).expect("h ∈ L"),
                        ClassKind::Weight => inst.mul(h, x).expect("h ∈ A"),
                    })
                    .collect();
                CoordVector::concat(&parts)
            })
            .collect();
        kernel_on(&zero, &images).expect("uniform image dimension")
    }

    /// Products that must not all vanish for the scope to be simple.
    fn degeneracy(&self) -> Option<&'static str> {
        let inst = self.inst;
        let m = inst.assoc_dim();
        match self.kind {
            ClassKind::Root => {
                if subspace_product(inst.bracket_table(), &self.ambient, &self.ambient).is_zero() {
                    Some("[L, L] = 0")
                } else if product_span(inst.assoc_mul_table(), 0..m, 0..m).is_zero() {
                    Some("AA = 0")
                } else if subspace_product(inst.action_table(), &Subspace::full(m), &self.ambient)
                    .is_zero()
                {
                    Some("AL = 0")
                } else {
                    None
                }
            }
            ClassKind::Weight => {
                subspace_product(inst.assoc_mul_table(), &self.ambient, &self.ambient)
                    .is_zero()
                    .then_some("AA = 0")
            }
        }
    }

    fn support(&self, s: &Subspace) -> Vec<Functional> {
        self.labels
            .iter()
            .filter(|f| {
                !self
                    .sector(f)
                    .intersect(s)
                    .expect("same ambient space")
                    .is_zero()
            })
            .cloned()
            .collect()
    }

    fn is_ideal(&self, s: &Subspace) -> bool {
        self.closure(s) == *s
    }

    fn sub(&self, ambient: Subspace) -> Scope<'_> {
        let labels = self
            .labels
            .iter()
            .filter(|f| {
                self.sector(f)
                    .is_subspace_of(&ambient)
                    .expect("same ambient space")
            })
            .cloned()
            .collect();
        Scope {
            inst: self.inst,
            kind: self.kind,
            ambient,
            labels,
        }
    }

    fn analyze(&self) -> SimplicityVerdict {
        if !maximal_length(self.inst) {
            return SimplicityVerdict::new(
                Verdict::Inconclusive,
                "outside the decidable regime: some root or weight space has dimension > 1",
            );
        }
        if !self.center().is_zero() {
            return SimplicityVerdict::new(
                Verdict::Inconclusive,
                "outside the decidable regime: nonzero center",
            );
        }
        let atoms: Vec<Subspace> = self
            .labels
            .iter()
            .map(|f| self.closure(&self.sector(f)))
            .collect();
        let lattice = sum_lattice(&atoms);
        let smallest = lattice
            .iter()
            .filter(|s| self.is_proper(s))
            .min_by_key(|s| s.dim());
        if let Some(ideal) = smallest {
            let mut v =
                SimplicityVerdict::new(Verdict::NotSimple, "a sector generates a proper ideal");
            let witness = ProperIdeal {
                support: self.support(ideal),
                ideal: ideal.clone(),
            };
            v.split_pair = self.try_split(&witness);
            v.witness = Some(witness);
            return v;
        }
        if let Some(what) = self.degeneracy() {
            return SimplicityVerdict::new(Verdict::NotSimple, format!("degenerate: {what}"));
        }
        let hidden = self.hidden();
        match hidden.dim() {
            0 => SimplicityVerdict::new(
                Verdict::Simple,
                "every sector generates the whole space or Ker rho",
            ),
            1 => {
                let cl = self.closure(&hidden);
                if self.is_proper(&cl) {
                    let mut v = SimplicityVerdict::new(
                        Verdict::NotSimple,
                        "a zero-sector element generates a proper ideal",
                    );
                    v.witness = Some(ProperIdeal {
                        support: self.support(&cl),
                        ideal: cl,
                    });
                    v
                } else {
                    SimplicityVerdict::new(
                        Verdict::Simple,
                        "every sector and the invisible zero-sector line generate the whole space or Ker rho",
                    )
                }
            }
            d => SimplicityVerdict::new(
                Verdict::Inconclusive,
                format!("zero sector has a {d}-dimensional part invisible to the grading"),
            ),
        }
    }

    /// The complementary ideal from the dichotomy, built from the support of
    /// a proper ideal. Only returned when every required property checks out.
    fn try_split(&self, witness: &ProperIdeal) -> Option<SplitPair> {
        let inst = self.inst;
        let support: BTreeSet<&Functional> = witness.support.iter().collect();
        let all: BTreeSet<&Functional> = self.labels.iter().collect();
        let negated: BTreeSet<Functional> = witness.support.iter().map(|f| -f).collect();
        if negated.iter().any(|f| support.contains(f)) {
            return None;
        }
        let union: BTreeSet<&Functional> = support.iter().copied().chain(negated.iter()).collect();
        if union != all {
            return None;
        }
        let dim = self.ambient.ambient_dim();
        let mut parts = Vec::new();
        for g in &witness.support {
            let neg = -g;
            parts.push(self.sector(&neg));
            match self.kind {
                ClassKind::Root if inst.is_weight(g) => parts.push(product_span(
                    inst.action_table(),
                    inst.assoc_basis().indices(g),
                    inst.lie_basis().indices(&neg),
                )),
                ClassKind::Weight if inst.is_root(g) => parts.push(product_span(
                    inst.anchor_table(),
                    inst.lie_basis().indices(g),
                    inst.assoc_basis().indices(&neg),
                )),
                _ => {}
            }
        }
        let second = Subspace::sum_all(&parts, dim).expect("same ambient space");
        let first = witness.ideal.clone();
        let table = match self.kind {
            ClassKind::Root => inst.bracket_table(),
            ClassKind::Weight => inst.assoc_mul_table(),
        };
        let direct = first.intersect(&second).ok()?.is_zero();
        let covers = first.sum(&second).ok()? == self.ambient;
        let orthogonal = subspace_product(table, &first, &second).is_zero();
        let ideals = self.is_ideal(&first) && self.is_ideal(&second);
        if !(direct && covers && orthogonal && ideals) {
            return None;
        }
        let simple = |s: &Subspace| self.sub(s.clone()).analyze().verdict == Verdict::Simple;
        (simple(&first) && simple(&second)).then_some(SplitPair { first, second })
    }
}

/// All sums of nonempty subfamilies of `atoms`, in order of discovery.
fn sum_lattice(atoms: &[Subspace]) -> Vec<Subspace> {
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    let mut out: Vec<Subspace> = Vec::new();
    for a in atoms {
        let mut fresh = Vec::new();
        if seen.insert(a.clone()) {
            fresh.push(a.clone());
        }
        for s in &out {
            let t = s.sum(a).expect("same ambient space");
            if seen.insert(t.clone()) {
                fresh.push(t);
            }
        }
        out.extend(fresh);
    }
    out
}

fn lie_scope(inst: &Instance, ambient: Subspace, labels: Vec<Functional>) -> Scope<'_> {
    Scope {
        inst,
        kind: ClassKind::Root,
        ambient,
        labels,
    }
}

fn assoc_scope(inst: &Instance, ambient: Subspace, labels: Vec<Functional>) -> Scope<'_> {
    Scope {
        inst,
        kind: ClassKind::Weight,
        ambient,
        labels,
    }
}

pub fn is_simple_l(inst: &Instance) -> SimplicityVerdict {
    lie_scope(inst, Subspace::full(inst.lie_dim()), inst.roots()).analyze()
}

pub fn is_simple_a(inst: &Instance) -> SimplicityVerdict {
    assoc_scope(inst, Subspace::full(inst.assoc_dim()), inst.weights()).analyze()
}

/// Simplicity of the ideal `ambient` of `L`, graded by `roots`.
pub fn is_simple_l_within(
    inst: &Instance,
    ambient: &Subspace,
    roots: &[Functional],
) -> SimplicityVerdict {
    lie_scope(inst, ambient.clone(), roots.to_vec()).analyze()
}

/// Simplicity of the ideal `ambient` of `A`, graded by `weights`.
pub fn is_simple_a_within(
    inst: &Instance,
    ambient: &Subspace,
    weights: &[Functional],
) -> SimplicityVerdict {
    assoc_scope(inst, ambient.clone(), weights.to_vec()).analyze()
}

/// Whether the support of a proper ideal fits the dichotomy: any label present
/// together with its negative drags in its whole class.
pub fn support_fits_dichotomy(support: &[Functional], classes: &[ConnectionClass]) -> bool {
    let set: BTreeSet<&Functional> = support.iter().collect();
    support.iter().all(|f| {
        !set.contains(&-f)
            || classes
                .iter()
                .filter(|c| c.contains(f))
                .all(|c| c.members.iter().all(|g| set.contains(g)))
    })
}

/// Hypotheses restricted to one component's labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocalHypotheses {
    pub symmetric: bool,
    pub root_multiplicative: bool,
    pub maximal_length: bool,
    pub tight: bool,
}

impl LocalHypotheses {
    pub fn all(&self) -> bool {
        self.symmetric && self.root_multiplicative && self.maximal_length && self.tight
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentVerdict {
    pub component: usize,
    pub hypotheses: LocalHypotheses,
    pub verdict: SimplicityVerdict,
    /// Simple, or split into two simple ideals.
    pub dichotomy_confirmed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FineDecomposition {
    pub decomposition: Decomposition,
    pub hypotheses: Hypotheses5,
    pub lie_verdict: SimplicityVerdict,
    pub assoc_verdict: SimplicityVerdict,
    pub lie_components: Vec<ComponentVerdict>,
    pub assoc_components: Vec<ComponentVerdict>,
    /// `Some` when tight: whether every L-component pairs with exactly one A-component.
    pub pairing_unique: Option<bool>,
}

fn component_verdict(
    inst: &Instance,
    index: usize,
    scope: Scope<'_>,
    tight: bool,
) -> ComponentVerdict {
    let (roots, weights) = match scope.kind {
        ClassKind::Root => (scope.labels.clone(), inst.weights()),
        ClassKind::Weight => (Vec::new(), scope.labels.clone()),
    };
    let hypotheses = LocalHypotheses {
        symmetric: symmetric(&scope.labels),
        root_multiplicative: multiplicative(inst, &roots, &weights),
        maximal_length: maximal_length(inst),
        tight,
    };
    let verdict = scope.analyze();
    let dichotomy_confirmed = verdict.is_simple() || verdict.split_pair.is_some();
    ComponentVerdict {
        component: index,
        hypotheses,
        verdict,
        dichotomy_confirmed,
    }
}

/// The decompositions of `L` and `A` with a simplicity verdict per component.
pub fn fine_decomposition(inst: &Instance) -> Result<FineDecomposition> {
    let decomposition = decompose(inst)?;
    let tight = decomposition.tightness.overall;
    let lie_components = decomposition
        .lie
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let scope = lie_scope(inst, c.ideal.total.clone(), c.ideal.class.members.clone());
            component_verdict(inst, i, scope, tight)
        })
        .collect();
    let assoc_components = decomposition
        .assoc
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let scope = assoc_scope(inst, c.ideal.total.clone(), c.ideal.class.members.clone());
            component_verdict(inst, i, scope, tight)
        })
        .collect();
    let pairing_unique = tight.then_some(decomposition.pairing.uniqueness_violations.is_empty());
    Ok(FineDecomposition {
        hypotheses: check_hypotheses(inst)?,
        lie_verdict: is_simple_l(inst),
        assoc_verdict: is_simple_a(inst),
        decomposition,
        lie_components,
        assoc_components,
        pairing_unique,
    })
}

/// Independent re-check of a witness: it is an ideal, nonzero, not the
/// whole space and (on the L side) not `Ker ρ`.
pub fn witness_is_valid(inst: &Instance, kind: ClassKind, ideal: &Subspace) -> bool {
    match kind {
        ClassKind::Root => {
            is_lie_rinehart_ideal(inst, ideal)
                && !ideal.is_zero()
                && !ideal.is_full()
                && *ideal != kernel_of_anchor(inst)
        }
        ClassKind::Weight => is_assoc_ideal(inst, ideal) && !ideal.is_zero() && !ideal.is_full(),
    }
}
