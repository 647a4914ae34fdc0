//! Connection relations on roots (`∼` on Γ) and weights (`≈` on Λ).
//!
//! A connection from `γ` is a chain `{ζ₁ = γ, ζ₂, …, ζₙ}` of steps in
//! `±Λ ∪ ±Γ` whose proper partial sums stay inside an allowed state set:
//! `±Γ` for roots, `±Λ ∪ ±Γ` for weights. Reachability over that finite set is
//! computed by breadth-first search, keeping one chain per reached state.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Functional, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Root,
    Weight,
}

/// One class member with a chain connecting the representative to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub member: Functional,
    pub chain: Vec<Functional>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectionClass {
    pub kind: ClassKind,
    /// Sorted; the first member is the representative.
    pub members: Vec<Functional>,
    pub witnesses: Vec<Witness>,
}

impl ConnectionClass {
    pub fn representative(&self) -> &Functional {
        &self.members[0]
    }

    pub fn contains(&self, f: &Functional) -> bool {
        self.members.binary_search(f).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn chain_to(&self, f: &Functional) -> Option<&[Functional]> {
        self.witnesses
            .iter()
            .find(|w| &w.member == f)
            .map(|w| w.chain.as_slice())
    }
}

/// The states reachable from a start label, each with the chain that reaches it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachableSet {
    chains: BTreeMap<Functional, Vec<Functional>>,
}

impl ReachableSet {
    pub fn contains(&self, f: &Functional) -> bool {
        self.chains.contains_key(f)
    }

    pub fn chain(&self, f: &Functional) -> Option<&[Functional]> {
        self.chains.get(f).map(Vec::as_slice)
    }

    pub fn elements(&self) -> impl Iterator<Item = &Functional> {
        self.chains.keys()
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }
}

fn with_negatives<'a>(labels: impl IntoIterator<Item = &'a Functional>) -> BTreeSet<Functional> {
    labels.into_iter().flat_map(|f| [f.clone(), -f]).collect()
}

/// `±Λ ∪ ±Γ`, the step alphabet for both relations.
pub fn steps(inst: &Instance) -> BTreeSet<Functional> {
    let mut s = with_negatives(inst.lie_basis().labels());
    s.extend(with_negatives(inst.assoc_basis().labels()));
    s
}

/// The set that proper partial sums must stay in.
pub fn states(inst: &Instance, kind: ClassKind) -> BTreeSet<Functional> {
    match kind {
        ClassKind::Root => with_negatives(inst.lie_basis().labels()),
        ClassKind::Weight => steps(inst),
    }
}

fn members(inst: &Instance, kind: ClassKind) -> Vec<Functional> {
    let mut v = match kind {
        ClassKind::Root => inst.roots(),
        ClassKind::Weight => inst.weights(),
    };
    v.sort();
    v
}

fn check_member(inst: &Instance, kind: ClassKind, f: &Functional) -> Result<()> {
    match kind {
        ClassKind::Root if !inst.is_root(f) => Err(Error::NotARoot(f.to_string())),
        ClassKind::Weight if !inst.is_weight(f) => Err(Error::NotAWeight(f.to_string())),
        _ => Ok(()),
    }
}

fn reachable(inst: &Instance, kind: ClassKind, start: &Functional) -> ReachableSet {
    let allowed = states(inst, kind);
    let alphabet = steps(inst);
    let mut chains = BTreeMap::new();
    chains.insert(start.clone(), vec![start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(s) = queue.pop_front() {
        for z in &alphabet {
            let t = &s + z;
            if allowed.contains(&t) && !chains.contains_key(&t) {
                let mut chain = chains[&s].clone();
                chain.push(z.clone());
                chains.insert(t.clone(), chain);
                queue.push_back(t);
            }
        }
    }
    ReachableSet { chains }
}

/// Chain from `from` to `to`, or `None` when they are not connected.
fn connection(reach: &ReachableSet, from: &Functional, to: &Functional) -> Option<Vec<Functional>> {
    if to == from || to == &-from {
        return Some(vec![from.clone()]);
    }
    reach
        .chain(to)
        .or_else(|| reach.chain(&-to))
        .map(<[Functional]>::to_vec)
}

pub fn reachable_set(inst: &Instance, kind: ClassKind, start: &Functional) -> Result<ReachableSet> {
    check_member(inst, kind, start)?;
    Ok(reachable(inst, kind, start))
}

pub fn connected(
    inst: &Instance,
    kind: ClassKind,
    from: &Functional,
    to: &Functional,
) -> Result<Option<Vec<Functional>>> {
    check_member(inst, kind, from)?;
    check_member(inst, kind, to)?;
    Ok(connection(&reachable(inst, kind, from), from, to))
}

pub fn root_reachable_set(inst: &Instance, gamma: &Functional) -> Result<ReachableSet> {
    reachable_set(inst, ClassKind::Root, gamma)
}

pub fn roots_connected(
    inst: &Instance,
    gamma: &Functional,
    xi: &Functional,
) -> Result<Option<Vec<Functional>>> {
    connected(inst, ClassKind::Root, gamma, xi)
}

pub fn weight_reachable_set(inst: &Instance, alpha: &Functional) -> Result<ReachableSet> {
    reachable_set(inst, ClassKind::Weight, alpha)
}

pub fn weights_connected(
    inst: &Instance,
    alpha: &Functional,
    beta: &Functional,
) -> Result<Option<Vec<Functional>>> {
    connected(inst, ClassKind::Weight, alpha, beta)
}

/// Checks a chain against the definition: first step is `from`, every step
/// lies in `±Λ ∪ ±Γ`, proper partial sums stay in the allowed states, and the
/// total is `±to`. A one-element chain is the `ξ = ±γ` case.
pub fn replay_chain(
    inst: &Instance,
    kind: ClassKind,
    from: &Functional,
    to: &Functional,
    chain: &[Functional],
) -> bool {
    let Some(first) = chain.first() else {
        return false;
    };
    if first != from {
        return false;
    }
    let alphabet = steps(inst);
    let allowed = states(inst, kind);
    let mut sum = first.clone();
    for z in &chain[1..] {
        if !alphabet.contains(z) || !allowed.contains(&sum) {
            return false;
        }
        sum = &sum + z;
    }
    sum == *to || sum == -to
}

/// The quotient Γ/∼ or Λ/≈, sorted by representative.
///
/// The relation is computed for every pair and checked to be an equivalence
/// before the partition is returned.
pub fn classes(inst: &Instance, kind: ClassKind) -> Result<Vec<ConnectionClass>> {
    let labels = members(inst, kind);
    let reach: Vec<ReachableSet> = labels.iter().map(|f| reachable(inst, kind, f)).collect();
    let related = |i: usize, j: usize| connection(&reach[i], &labels[i], &labels[j]).is_some();
    let n = labels.len();
    for i in 0..n {
        if !related(i, i) {
            return Err(Error::Internal(format!(
                "{} not related to itself",
                labels[i]
            )));
        }
        for j in 0..n {
            if related(i, j) != related(j, i) {
                return Err(Error::Internal(format!(
                    "relation not symmetric on {}, {}",
                    labels[i], labels[j]
                )));
            }
            for k in 0..n {
                if related(i, j) && related(j, k) && !related(i, k) {
                    return Err(Error::Internal(format!(
                        "relation not transitive on {}, {}, {}",
                        labels[i], labels[j], labels[k]
                    )));
                }
            }
        }
    }
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        let mut class = ConnectionClass {
            kind,
            members: Vec::new(),
            witnesses: Vec::new(),
        };
        for j in i..n {
            if let Some(chain) = connection(&reach[i], &labels[i], &labels[j]) {
                assigned[j] = true;
                class.members.push(labels[j].clone());
                class.witnesses.push(Witness {
                    member: labels[j].clone(),
                    chain,
                });
            }
        }
        out.push(class);
    }
    Ok(out)
}

pub fn root_classes(inst: &Instance) -> Result<Vec<ConnectionClass>> {
    classes(inst, ClassKind::Root)
}

pub fn weight_classes(inst: &Instance) -> Result<Vec<ConnectionClass>> {
    classes(inst, ClassKind::Weight)
}
