//! Ideals attached to connection classes, centers, tightness and the
//! decomposition reports of `L` and `A`.

use std::ops::Range;

use serde::Serialize;

use crate::connect::{root_classes, weight_classes, ClassKind, ConnectionClass};
use crate::error::{Error, Result};
use crate::exactlin::{kernel, CoordVector, Subspace};
use crate::model::{Functional, Instance, StructureTable};

/// Span of all basis products `t(i, j)` for `i ∈ left`, `j ∈ right`.
pub(crate) fn product_span(
    t: &StructureTable,
    left: Range<usize>,
    right: Range<usize>,
) -> Subspace {
    let out = t.dims().2;
    let mut vs = Vec::new();
    for i in left {
        for j in right.clone() {
            let v = t.basis_product(i, j);
            if !v.is_zero() {
                vs.push(v);
            }
        }
    }
    Subspace::span_unchecked(vs, out)
}

/// Span of `t(x, y)` for `x` in the basis of `s`, `y` in the basis of `u`.
pub(crate) fn subspace_product(t: &StructureTable, s: &Subspace, u: &Subspace) -> Subspace {
    let mut vs = Vec::new();
    for x in s.basis() {
        for y in u.basis() {
            let v = t.apply(x, y).expect("ambient dimensions match the table");
            if !v.is_zero() {
                vs.push(v);
            }
        }
    }
    Subspace::span_unchecked(vs, t.dims().2)
}

/// `Σ_{−ξ∈Λ} A_{−ξ}L_ξ + Σ [L_{−ξ}, L_ξ]` over the given roots.
fn lie_zero_part<'a>(inst: &Instance, roots: impl IntoIterator<Item = &'a Functional>) -> Subspace {
    let lie = inst.lie_basis();
    let assoc = inst.assoc_basis();
    let parts: Vec<Subspace> = roots
        .into_iter()
        .flat_map(|xi| {
            let neg = -xi;
            [
                product_span(inst.action_table(), assoc.indices(&neg), lie.indices(xi)),
                product_span(inst.bracket_table(), lie.indices(&neg), lie.indices(xi)),
            ]
        })
        .collect();
    Subspace::sum_all(&parts, inst.lie_dim()).expect("all parts live in L")
}

/// `Σ_{−β∈Γ} ρ(L_{−β})(A_β) + Σ A_{−β}A_β` over the given weights.
fn assoc_zero_part<'a>(
    inst: &Instance,
    weights: impl IntoIterator<Item = &'a Functional>,
) -> Subspace {
    let lie = inst.lie_basis();
    let assoc = inst.assoc_basis();
    let parts: Vec<Subspace> = weights
        .into_iter()
        .flat_map(|beta| {
            let neg = -beta;
            [
                product_span(inst.anchor_table(), lie.indices(&neg), assoc.indices(beta)),
                product_span(
                    inst.assoc_mul_table(),
                    assoc.indices(&neg),
                    assoc.indices(beta),
                ),
            ]
        })
        .collect();
    Subspace::sum_all(&parts, inst.assoc_dim()).expect("all parts live in A")
}

/// `I_[γ] = L_{0,[γ]} ⊕ L_[γ]` or `𝒜_[α] = A_{0,[α]} ⊕ A_[α]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealCandidate {
    pub class: ConnectionClass,
    pub zero_part: Subspace,
    pub graded_part: Subspace,
    pub total: Subspace,
}

fn check_class(inst: &Instance, cls: &ConnectionClass, kind: ClassKind) -> Result<()> {
    let member = |f: &Functional| match kind {
        ClassKind::Root => inst.is_root(f),
        ClassKind::Weight => inst.is_weight(f),
    };
    if cls.kind != kind || cls.members.is_empty() || !cls.members.iter().all(member) {
        return Err(Error::ForeignClass);
    }
    Ok(())
}

fn candidate(
    cls: &ConnectionClass,
    zero_part: Subspace,
    sectors: Vec<Subspace>,
    dim: usize,
) -> IdealCandidate {
    let graded_part = Subspace::sum_all(&sectors, dim).expect("sectors live in one space");
    let total = zero_part.sum(&graded_part).expect("same ambient space");
    IdealCandidate {
        class: cls.clone(),
        zero_part,
        graded_part,
        total,
    }
}

pub fn build_root_ideal(inst: &Instance, cls: &ConnectionClass) -> Result<IdealCandidate> {
    check_class(inst, cls, ClassKind::Root)?;
    let zero = lie_zero_part(inst, &cls.members);
    let sectors = cls
        .members
        .iter()
        .map(|g| inst.lie_basis().subspace(g))
        .collect();
    Ok(candidate(cls, zero, sectors, inst.lie_dim()))
}

pub fn build_weight_ideal(inst: &Instance, cls: &ConnectionClass) -> Result<IdealCandidate> {
    check_class(inst, cls, ClassKind::Weight)?;
    let zero = assoc_zero_part(inst, &cls.members);
    let sectors = cls
        .members
        .iter()
        .map(|a| inst.assoc_basis().subspace(a))
        .collect();
    Ok(candidate(cls, zero, sectors, inst.assoc_dim()))
}

/// Which ideal condition failed, on which generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealViolation {
    pub condition: &'static str,
    pub generator: CoordVector,
    /// Basis indices of the other factors (`L` and/or `A`).
    pub partners: Vec<usize>,
    pub product: CoordVector,
}

fn outside(s: &Subspace, v: &CoordVector) -> bool {
    !v.is_zero() && !s.contains(v).expect("ambient dimensions match")
}

/// Checks `[S, L] ⊆ S`, `A·S ⊆ S` and `ρ(S)(A)·L ⊆ S` on the basis of `S`.
/// Returns the first violation found.
pub fn lie_rinehart_ideal_violation(inst: &Instance, s: &Subspace) -> Option<IdealViolation> {
    let (n, m) = (inst.lie_dim(), inst.assoc_dim());
    for g in s.basis() {
        for j in 0..n {
            let p = inst.bracket(g, &CoordVector::unit(n, j)).expect("g ∈ L");
            if outside(s, &p) {
                return Some(IdealViolation {
                    condition: "[I, L] ⊆ I",
                    generator: g.clone(),
                    partners: vec![j],
                    product: p,
                });
            }
        }
        for a in 0..m {
            let p = inst.act(&CoordVector::unit(m, a), g).expect("g ∈ L");
            if outside(s, &p) {
                return Some(IdealViolation {
                    condition: "A I ⊆ I",
                    generator: g.clone(),
                    partners: vec![a],
                    product: p,
                });
            }
        }
        for a in 0..m {
            let r = inst
                .anchor_apply(g, &CoordVector::unit(m, a))
                .expect("g ∈ L");
            if r.is_zero() {
                continue;
            }
            for j in 0..n {
                let p = inst.act(&r, &CoordVector::unit(n, j)).expect("r ∈ A");
                if outside(s, &p) {
                    return Some(IdealViolation {
                        condition: "rho(I)(A) L ⊆ I",
                        generator: g.clone(),
                        partners: vec![a, j],
                        product: p,
                    });
                }
            }
        }
    }
    None
}

pub fn is_lie_rinehart_ideal(inst: &Instance, s: &Subspace) -> bool {
    lie_rinehart_ideal_violation(inst, s).is_none()
}

pub fn assoc_ideal_violation(inst: &Instance, s: &Subspace) -> Option<IdealViolation> {
    let m = inst.assoc_dim();
    for g in s.basis() {
        for a in 0..m {
            let p = inst.mul(&CoordVector::unit(m, a), g).expect("g ∈ A");
            if outside(s, &p) {
                return Some(IdealViolation {
                    condition: "A I ⊆ I",
                    generator: g.clone(),
                    partners: vec![a],
                    product: p,
                });
            }
        }
    }
    None
}

pub fn is_assoc_ideal(inst: &Instance, s: &Subspace) -> bool {
    assoc_ideal_violation(inst, s).is_none()
}

/// `𝒵(L) = {v : [v, L] = 0, ρ(v) = 0}`.
pub fn center_l(inst: &Instance) -> Subspace {
    let (n, m) = (inst.lie_dim(), inst.assoc_dim());
    let images: Vec<CoordVector> = (0..n)
        .map(|x| {
            let parts: Vec<CoordVector> = (0..n)
                .map(|j| inst.bracket_table().basis_product(x, j))
                .chain((0..m).map(|a| inst.anchor_table().basis_product(x, a)))
                .collect();
            CoordVector::concat(&parts)
        })
        .collect();
    kernel(&images, n * n + m * m).expect("uniform image dimension")
}

/// `𝒵(A) = {a : aA = 0}`.
pub fn center_a(inst: &Instance) -> Subspace {
    let m = inst.assoc_dim();
    let images: Vec<CoordVector> = (0..m)
        .map(|a| {
            let parts: Vec<CoordVector> = (0..m)
                .map(|b| inst.assoc_mul_table().basis_product(a, b))
                .collect();
            CoordVector::concat(&parts)
        })
        .collect();
    kernel(&images, m * m).expect("uniform image dimension")
}

/// The conditions defining a tight instance, evaluated separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Tightness {
    pub center_l_zero: bool,
    pub center_a_zero: bool,
    pub aa_equals_a: bool,
    pub al_equals_l: bool,
    pub h_condition: bool,
    pub a0_condition: bool,
    pub overall: bool,
}

impl Tightness {
    /// `(name, value)` for each condition, in a fixed order.
    pub fn conditions(&self) -> [(&'static str, bool); 6] {
        [
            ("center_l_zero", self.center_l_zero),
            ("center_a_zero", self.center_a_zero),
            ("aa_equals_a", self.aa_equals_a),
            ("al_equals_l", self.al_equals_l),
            ("h_condition", self.h_condition),
            ("a0_condition", self.a0_condition),
        ]
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.conditions()
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| name)
            .collect()
    }
}

/// `H = Σ_{−γ∈Λ} A_{−γ}L_γ + Σ [L_{−γ}, L_γ]` over all of Γ.
pub fn h_spanning_part(inst: &Instance) -> Subspace {
    lie_zero_part(inst, &inst.roots())
}

/// `Σ_{−α∈Γ} ρ(L_{−α})(A_α) + Σ A_{−α}A_α` over all of Λ.
pub fn a0_spanning_part(inst: &Instance) -> Subspace {
    assoc_zero_part(inst, &inst.weights())
}

pub fn is_tight(inst: &Instance) -> Tightness {
    let (n, m) = (inst.lie_dim(), inst.assoc_dim());
    let center_l_zero = center_l(inst).is_zero();
    let center_a_zero = center_a(inst).is_zero();
    let aa_equals_a = product_span(inst.assoc_mul_table(), 0..m, 0..m).dim() == m;
    let al_equals_l = product_span(inst.action_table(), 0..m, 0..n).dim() == n;
    let h_condition = h_spanning_part(inst) == inst.cartan();
    let a0_condition = a0_spanning_part(inst) == inst.assoc_zero();
    Tightness {
        center_l_zero,
        center_a_zero,
        aa_equals_a,
        al_equals_l,
        h_condition,
        a0_condition,
        overall: center_l_zero
            && center_a_zero
            && aa_equals_a
            && al_equals_l
            && h_condition
            && a0_condition,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lie,
    Assoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    #[serde(flatten)]
    pub ideal: IdealCandidate,
    pub is_ideal: bool,
    pub ideal_violation: Option<IdealViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub side: Side,
    pub instance: String,
    pub fingerprint: u64,
    pub components: Vec<Component>,
    /// `U ⊆ H` resp. `V ⊆ A_0`.
    pub complement: Subspace,
    /// The components sum directly (dimension count).
    pub sum_is_direct: bool,
    /// `complement + Σ components` is the whole space.
    pub covers_whole: bool,
    /// Zero center together with the spanning condition on the zero sector.
    pub corollary_hypotheses: bool,
    /// Products between distinct components vanish.
    pub orthogonal: bool,
    /// Consistency failures against the theorems; empty on valid instances.
    pub violations: Vec<String>,
}

impl DecompositionReport {
    pub fn component_dims(&self) -> Vec<usize> {
        self.components
            .iter()
            .map(|c| c.ideal.total.dim())
            .collect()
    }
}

fn assemble(
    inst: &Instance,
    side: Side,
    ideals: Vec<IdealCandidate>,
    zero_sector: Subspace,
    corollary_hypotheses: bool,
) -> DecompositionReport {
    let dim = zero_sector.ambient_dim();
    let table = match side {
        Side::Lie => inst.bracket_table(),
        Side::Assoc => inst.assoc_mul_table(),
    };
    let mut violations = Vec::new();
    let components: Vec<Component> = ideals
        .into_iter()
        .map(|ideal| {
            let ideal_violation = match side {
                Side::Lie => lie_rinehart_ideal_violation(inst, &ideal.total),
                Side::Assoc => assoc_ideal_violation(inst, &ideal.total),
            };
            if let Some(v) = &ideal_violation {
                violations.push(format!(
                    "component {} is not an ideal: {} fails",
                    ideal.class.representative(),
                    v.condition
                ));
            }
            Component {
                is_ideal: ideal_violation.is_none(),
                ideal,
                ideal_violation,
            }
        })
        .collect();

    let zero_sum = Subspace::sum_all(
        &components
            .iter()
            .map(|c| c.ideal.zero_part.clone())
            .collect::<Vec<_>>(),
        dim,
    )
    .expect("zero parts share the ambient space");
    let complement = match zero_sum.complement_in(&zero_sector) {
        Ok(c) => c,
        Err(_) => {
            violations.push("zero parts are not contained in the zero sector".into());
            Subspace::zero(dim)
        }
    };
    let totals: Vec<Subspace> = components.iter().map(|c| c.ideal.total.clone()).collect();
    let sum = Subspace::sum_all(&totals, dim).expect("shared ambient space");
    let sum_is_direct = sum.dim() == totals.iter().map(Subspace::dim).sum::<usize>();
    let covers_whole = sum
        .sum(&complement)
        .expect("shared ambient space")
        .is_full();
    if !covers_whole {
        violations.push("complement plus components does not cover the space".into());
    }
    if corollary_hypotheses && !sum_is_direct {
        violations.push("corollary hypotheses hold but the sum is not direct".into());
    }
    let mut orthogonal = true;
    for i in 0..totals.len() {
        for j in 0..totals.len() {
            if i != j && !subspace_product(table, &totals[i], &totals[j]).is_zero() {
                orthogonal = false;
                violations.push(format!("components {i} and {j} have nonzero products"));
            }
        }
    }
    DecompositionReport {
        side,
        instance: inst.name().to_string(),
        fingerprint: inst.fingerprint(),
        components,
        complement,
        sum_is_direct,
        covers_whole,
        corollary_hypotheses,
        orthogonal,
        violations,
    }
}

pub fn decompose_l(inst: &Instance) -> Result<DecompositionReport> {
    let ideals = root_classes(inst)?
        .iter()
        .map(|c| build_root_ideal(inst, c))
        .collect::<Result<Vec<_>>>()?;
    let hyp = center_l(inst).is_zero() && h_spanning_part(inst) == inst.cartan();
    Ok(assemble(inst, Side::Lie, ideals, inst.cartan(), hyp))
}

pub fn decompose_a(inst: &Instance) -> Result<DecompositionReport> {
    let ideals = weight_classes(inst)?
        .iter()
        .map(|c| build_weight_ideal(inst, c))
        .collect::<Result<Vec<_>>>()?;
    let hyp = center_a(inst).is_zero() && a0_spanning_part(inst) == inst.assoc_zero();
    Ok(assemble(inst, Side::Assoc, ideals, inst.assoc_zero(), hyp))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairEntry {
    pub lie_component: usize,
    pub assoc_components: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pairing {
    pub entries: Vec<PairEntry>,
    pub tight: bool,
    /// L-components whose list does not have exactly one entry although the
    /// instance is tight.
    pub uniqueness_violations: Vec<usize>,
}

impl Pairing {
    /// All `(L-component, A-component)` pairs with `𝒜·I ≠ 0`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .flat_map(|e| {
                e.assoc_components
                    .iter()
                    .map(move |&a| (e.lie_component, a))
            })
            .collect()
    }
}

/// Lists, for every L-component `I`, the A-components `𝒜` with `𝒜·I ≠ 0`.
pub fn find_pairings(
    inst: &Instance,
    lrep: &DecompositionReport,
    arep: &DecompositionReport,
) -> Result<Pairing> {
    let fp = inst.fingerprint();
    if lrep.side != Side::Lie
        || arep.side != Side::Assoc
        || lrep.fingerprint != fp
        || arep.fingerprint != fp
    {
        return Err(Error::ProvenanceMismatch);
    }
    let entries: Vec<PairEntry> = lrep
        .components
        .iter()
        .enumerate()
        .map(|(i, lc)| PairEntry {
            lie_component: i,
            assoc_components: arep
                .components
                .iter()
                .enumerate()
                .filter(|(_, ac)| {
                    !subspace_product(inst.action_table(), &ac.ideal.total, &lc.ideal.total)
                        .is_zero()
                })
                .map(|(j, _)| j)
                .collect(),
        })
        .collect();
    let tight = is_tight(inst).overall;
    let uniqueness_violations = if tight {
        entries
            .iter()
            .filter(|e| e.assoc_components.len() != 1)
            .map(|e| e.lie_component)
            .collect()
    } else {
        Vec::new()
    };
    Ok(Pairing {
        entries,
        tight,
        uniqueness_violations,
    })
}

/// Both decompositions, their pairing and the tightness record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub instance: String,
    pub lie: DecompositionReport,
    pub assoc: DecompositionReport,
    pub pairing: Pairing,
    pub tightness: Tightness,
}

pub fn decompose(inst: &Instance) -> Result<Decomposition> {
    let lie = decompose_l(inst)?;
    let assoc = decompose_a(inst)?;
    let pairing = find_pairings(inst, &lie, &assoc)?;
    Ok(Decomposition {
        instance: inst.name().to_string(),
        tightness: is_tight(inst),
        lie,
        assoc,
        pairing,
    })
}
