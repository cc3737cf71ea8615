//! Idempotents, group H-classes and embedded subgroups of a finite semigroup.
//!
//! Every subgroup of a semigroup has an idempotent identity `e` and lies inside
//! the maximal subgroup at `e`, which is the group of units of the local monoid
//! `e·S·e`. Subgroup enumeration therefore runs one subgroup-lattice
//! computation per idempotent.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::subgroup_lattice;
use crate::semigroup::{ElementSet, FiniteSemigroup};

/// Default cap on the order of a maximal subgroup whose lattice is enumerated.
pub const DEFAULT_MAX_GROUP_ORDER: usize = 720;

/// A subset of a semigroup that is a group under the induced product.
#[derive(Clone)]
pub struct EmbeddedGroup<'a> {
    parent: &'a FiniteSemigroup,
    members: ElementSet,
    identity: usize,
    inverses: BTreeMap<usize, usize>,
}

impl std::fmt::Debug for EmbeddedGroup<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EmbeddedGroup")
            .field("parent", &self.parent.name())
            .field("members", &self.members)
            .field("identity", &self.identity)
            .finish()
    }
}

impl PartialEq for EmbeddedGroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}

impl Eq for EmbeddedGroup<'_> {}

impl<'a> EmbeddedGroup<'a> {
    pub fn parent(&self) -> &'a FiniteSemigroup {
        self.parent
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.inverses.get(&x).copied()
    }

    pub fn inverses(&self) -> &BTreeMap<usize, usize> {
        &self.inverses
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.parent.mul(a, b)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.members.iter()
    }

    /// The whole semigroup, when it is a group.
    pub fn whole(parent: &'a FiniteSemigroup) -> Option<Self> {
        subgroup_check(parent, &parent.all_elements())
    }

    /// A subset known to be a subgroup of `self` (same identity).
    pub(crate) fn restrict(&self, members: ElementSet) -> EmbeddedGroup<'a> {
        let inverses = members.iter().map(|&x| (x, self.inverses[&x])).collect();
        EmbeddedGroup { parent: self.parent, members, identity: self.identity, inverses }
    }

    /// Re-checks every group axiom against the parent table.
    pub fn verify(&self) -> bool {
        let s = self.parent;
        let e = self.identity;
        self.members.contains(e)
            && s.mul(e, e) == e
            && s.is_closed(&self.members)
            && self.members.iter().all(|&x| {
                s.mul(e, x) == x
                    && s.mul(x, e) == x
                    && self
                        .inverse(x)
                        .is_some_and(|y| self.members.contains(y) && s.mul(x, y) == e && s.mul(y, x) == e)
            })
    }

    pub fn render(&self) -> String {
        self.parent.render_set(&self.members)
    }
}

/// Which idempotents may serve as the identity of a reported subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityPolicy {
    /// Any idempotent of the semigroup.
    #[default]
    AnyIdempotent,
    /// Only the semigroup's own identity element.
    GlobalIdentityOnly,
}

impl IdentityPolicy {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityPolicy::AnyIdempotent => "any-idempotent",
            IdentityPolicy::GlobalIdentityOnly => "global-identity-only",
        }
    }
}

impl std::str::FromStr for IdentityPolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any-idempotent" => Ok(IdentityPolicy::AnyIdempotent),
            "global-identity-only" => Ok(IdentityPolicy::GlobalIdentityOnly),
            other => Err(Error::Precondition(format!("unknown identity policy {other:?}"))),
        }
    }
}

/// Knobs shared by every subgroup enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupOptions {
    pub policy: IdentityPolicy,
    pub min_size: usize,
    pub proper_only: bool,
    pub max_group_order: usize,
}

impl Default for SubgroupOptions {
    fn default() -> Self {
        SubgroupOptions {
            policy: IdentityPolicy::AnyIdempotent,
            min_size: 2,
            proper_only: true,
            max_group_order: DEFAULT_MAX_GROUP_ORDER,
        }
    }
}

impl SubgroupOptions {
    pub fn with_policy(policy: IdentityPolicy) -> Self {
        SubgroupOptions { policy, ..Self::default() }
    }

    /// Every group, including singletons and the whole semigroup.
    pub fn everything() -> Self {
        SubgroupOptions { min_size: 1, proper_only: false, ..Self::default() }
    }

    fn admits(&self, s: &FiniteSemigroup, members: &ElementSet) -> bool {
        members.len() >= self.min_size && !(self.proper_only && members.len() == s.size())
    }
}

pub fn idempotents(s: &FiniteSemigroup) -> ElementSet {
    s.elements().filter(|&e| s.is_idempotent(e)).collect()
}

/// The idempotents whose H-classes the policy admits.
fn policy_idempotents(s: &FiniteSemigroup, policy: IdentityPolicy) -> Result<Vec<usize>> {
    match policy {
        IdentityPolicy::AnyIdempotent => Ok(idempotents(s).iter().copied().collect()),
        IdentityPolicy::GlobalIdentityOnly => s.identity().map(|e| vec![e]).ok_or(Error::NoIdentity),
    }
}

/// The largest subgroup with identity `e`: the units of the local monoid `e·S·e`.
pub fn maximal_subgroup_at(s: &FiniteSemigroup, e: usize) -> Result<EmbeddedGroup<'_>> {
    if e >= s.size() || !s.is_idempotent(e) {
        return Err(Error::Precondition(format!("element {e} is not an idempotent")));
    }
    let local: ElementSet = s.elements().map(|x| s.mul(s.mul(e, x), e)).collect();
    let mut inverses = BTreeMap::new();
    for &x in local.iter() {
        if let Some(&y) = local.iter().find(|&&y| s.mul(x, y) == e && s.mul(y, x) == e) {
            inverses.insert(x, y);
        }
    }
    let members: ElementSet = inverses.keys().copied().collect();
    Ok(EmbeddedGroup { parent: s, members, identity: e, inverses })
}

/// Every admitted H-class, in idempotent order.
pub fn group_h_classes(s: &FiniteSemigroup, policy: IdentityPolicy) -> Result<Vec<EmbeddedGroup<'_>>> {
    policy_idempotents(s, policy)?.into_iter().map(|e| maximal_subgroup_at(s, e)).collect()
}

fn canonical_sort(groups: &mut [EmbeddedGroup<'_>]) {
    groups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
}

/// Every embedded subgroup admitted by `opts`, ordered by size then members.
pub fn all_subgroups<'a>(s: &'a FiniteSemigroup, opts: &SubgroupOptions) -> Result<Vec<EmbeddedGroup<'a>>> {
    let mut out = Vec::new();
    for h in group_h_classes(s, opts.policy)? {
        if h.order() < opts.min_size {
            continue;
        }
        if h.order() > opts.max_group_order {
            return Err(Error::EnumerationLimit {
                idempotent: h.identity(),
                order: h.order(),
                cap: opts.max_group_order,
            });
        }
        out.extend(subgroup_lattice(&h).into_iter().filter(|g| opts.admits(s, g.members())));
    }
    canonical_sort(&mut out);
    Ok(out)
}

/// Subgroups that are maximal under inclusion among those admitted by `opts`.
///
/// Apart from the case where `S` is itself a group and only proper subgroups
/// count, these are exactly the admitted H-classes.
pub fn maximal_subgroups<'a>(s: &'a FiniteSemigroup, opts: &SubgroupOptions) -> Result<Vec<EmbeddedGroup<'a>>> {
    let mut out = Vec::new();
    for h in group_h_classes(s, opts.policy)? {
        if opts.admits(s, h.members()) {
            out.push(h);
        } else if h.order() == s.size() && opts.proper_only {
            if h.order() > opts.max_group_order {
                return Err(Error::EnumerationLimit {
                    idempotent: h.identity(),
                    order: h.order(),
                    cap: opts.max_group_order,
                });
            }
            let proper: Vec<_> = subgroup_lattice(&h)
                .into_iter()
                .filter(|g| opts.admits(s, g.members()))
                .collect();
            for g in &proper {
                if !proper.iter().any(|k| k.order() > g.order() && g.members.is_subset(&k.members)) {
                    out.push(g.clone());
                }
            }
        }
    }
    canonical_sort(&mut out);
    Ok(out)
}

/// The subgroups of maximum order.
pub fn largest_subgroups<'a>(s: &'a FiniteSemigroup, opts: &SubgroupOptions) -> Result<Vec<EmbeddedGroup<'a>>> {
    let maximal = maximal_subgroups(s, opts)?;
    let top = maximal.iter().map(|g| g.order()).max().unwrap_or(0);
    Ok(maximal.into_iter().filter(|g| g.order() == top).collect())
}

/// The group structure of `subset`, if it has one.
pub fn subgroup_check<'a>(s: &'a FiniteSemigroup, subset: &ElementSet) -> Option<EmbeddedGroup<'a>> {
    if subset.is_empty() || !s.is_closed(subset) {
        return None;
    }
    let mut idem = subset.iter().copied().filter(|&x| s.is_idempotent(x));
    let e = idem.next()?;
    if idem.next().is_some() {
        return None;
    }
    if !subset.iter().all(|&x| s.mul(e, x) == x && s.mul(x, e) == x) {
        return None;
    }
    let mut inverses = BTreeMap::new();
    for &x in subset.iter() {
        let y = subset.iter().copied().find(|&y| s.mul(x, y) == e && s.mul(y, x) == e)?;
        inverses.insert(x, y);
    }
    Some(EmbeddedGroup { parent: s, members: subset.clone(), identity: e, inverses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{make_full_transformation, make_zn_mul};

    fn sets(groups: &[EmbeddedGroup<'_>]) -> Vec<Vec<usize>> {
        groups.iter().map(|g| g.members().as_slice().to_vec()).collect()
    }

    #[test]
    fn idempotent_scans() {
        assert_eq!(idempotents(&make_zn_mul(12).unwrap()), ElementSet::from([0, 1, 4, 9]));
        assert_eq!(idempotents(&make_full_transformation(3).unwrap()).len(), 10);
        let c5 = crate::semigroup::make_cyclic_group(5).unwrap();
        assert_eq!(idempotents(&c5), ElementSet::from([0]));
    }

    #[test]
    fn h_classes() {
        let z10 = make_zn_mul(10).unwrap();
        assert_eq!(maximal_subgroup_at(&z10, 6).unwrap().members(), &ElementSet::from([2, 4, 6, 8]));
        let z12 = make_zn_mul(12).unwrap();
        assert_eq!(maximal_subgroup_at(&z12, 1).unwrap().members(), &ElementSet::from([1, 5, 7, 11]));
        assert_eq!(maximal_subgroup_at(&z12, 0).unwrap().members(), &ElementSet::from([0]));
        assert!(matches!(maximal_subgroup_at(&z12, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn z12_census() {
        let z12 = make_zn_mul(12).unwrap();
        let all = all_subgroups(&z12, &SubgroupOptions::default()).unwrap();
        assert_eq!(
            sets(&all),
            vec![vec![1, 5], vec![1, 7], vec![1, 11], vec![3, 9], vec![4, 8], vec![1, 5, 7, 11]]
        );
        let ids: Vec<usize> = all.iter().map(|g| g.identity()).collect();
        assert_eq!(ids, vec![1, 1, 1, 9, 4, 1]);
        assert!(all.iter().all(|g| g.verify()));
    }

    #[test]
    fn z9_and_z4() {
        let z9 = make_zn_mul(9).unwrap();
        let all = all_subgroups(&z9, &SubgroupOptions::default()).unwrap();
        assert_eq!(sets(&all), vec![vec![1, 8], vec![1, 4, 7], vec![1, 2, 4, 5, 7, 8]]);
        let z4 = make_zn_mul(4).unwrap();
        assert_eq!(sets(&all_subgroups(&z4, &SubgroupOptions::default()).unwrap()), vec![vec![1, 3]]);
    }

    #[test]
    fn maximal_and_largest() {
        let opts = SubgroupOptions::default();
        let z12 = make_zn_mul(12).unwrap();
        assert_eq!(sets(&maximal_subgroups(&z12, &opts).unwrap()), vec![vec![3, 9], vec![4, 8], vec![1, 5, 7, 11]]);
        assert_eq!(sets(&largest_subgroups(&z12, &opts).unwrap()), vec![vec![1, 5, 7, 11]]);
        let z7 = make_zn_mul(7).unwrap();
        assert_eq!(sets(&maximal_subgroups(&z7, &opts).unwrap()), vec![vec![1, 2, 3, 4, 5, 6]]);
        let z11 = make_zn_mul(11).unwrap();
        assert_eq!(sets(&largest_subgroups(&z11, &opts).unwrap()), vec![(1..11).collect::<Vec<_>>()]);

        let t3 = make_full_transformation(3).unwrap();
        let book = SubgroupOptions::with_policy(IdentityPolicy::GlobalIdentityOnly);
        let max = maximal_subgroups(&t3, &book).unwrap();
        assert_eq!(max.len(), 1);
        assert_eq!(max[0].order(), 6);
    }

    #[test]
    fn a_group_has_only_proper_maximal_subgroups() {
        let c6 = crate::semigroup::make_cyclic_group(6).unwrap();
        let max = maximal_subgroups(&c6, &SubgroupOptions::default()).unwrap();
        assert_eq!(sets(&max), vec![vec![0, 3], vec![0, 2, 4]]);
    }

    #[test]
    fn global_policy_needs_identity() {
        let left_zero = FiniteSemigroup::from_table("LZ2", &[vec![0, 0], vec![1, 1]], None).unwrap();
        let book = SubgroupOptions::with_policy(IdentityPolicy::GlobalIdentityOnly);
        assert_eq!(all_subgroups(&left_zero, &book).unwrap_err(), Error::NoIdentity);
    }

    #[test]
    fn enumeration_cap() {
        let t3 = make_full_transformation(3).unwrap();
        let opts = SubgroupOptions { max_group_order: 5, ..Default::default() };
        assert!(matches!(all_subgroups(&t3, &opts), Err(Error::EnumerationLimit { order: 6, .. })));
    }

    #[test]
    fn subset_checks() {
        let z12 = make_zn_mul(12).unwrap();
        assert_eq!(subgroup_check(&z12, &ElementSet::from([3, 9])).unwrap().identity(), 9);
        assert!(subgroup_check(&z12, &ElementSet::from([2, 4])).is_none());
        let z10 = make_zn_mul(10).unwrap();
        assert_eq!(subgroup_check(&z10, &ElementSet::from([1, 9])).unwrap().identity(), 1);
    }
}
