//! Smarandache cosets, double cosets, S-normal subgroups and quotients.
//!
//! Unlike cosets in a group, the sets `xA` of a semigroup need not be
//! disjoint, need not cover, and need not have a common size; the reports
//! here record which of those properties hold.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{ElementSet, FiniteSemigroup};
use crate::subgroups::{all_subgroups, EmbeddedGroup, SubgroupOptions};

/// `Right` is `Ax = {a·x}`, `Left` is `xA = {x·a}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    #[default]
    Right,
}

pub fn s_coset(s: &FiniteSemigroup, a: &ElementSet, x: usize, side: Side) -> ElementSet {
    match side {
        Side::Right => a.iter().map(|&h| s.mul(h, x)).collect(),
        Side::Left => a.iter().map(|&h| s.mul(x, h)).collect(),
    }
}

/// A distinct coset value with every element that produces it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetClass {
    pub members: ElementSet,
    pub representatives: Vec<usize>,
}

/// Sorted by size, then members.
fn group_classes(s: &FiniteSemigroup, f: impl Fn(usize) -> ElementSet) -> Vec<CosetClass> {
    let mut by_value: BTreeMap<ElementSet, Vec<usize>> = BTreeMap::new();
    for x in s.elements() {
        by_value.entry(f(x)).or_default().push(x);
    }
    let mut classes: Vec<CosetClass> =
        by_value.into_iter().map(|(members, representatives)| CosetClass { members, representatives }).collect();
    classes.sort_by(|a, b| a.members.len().cmp(&b.members.len()).then_with(|| a.members.cmp(&b.members)));
    classes
}

fn pairwise_disjoint(classes: &[CosetClass]) -> bool {
    classes.iter().enumerate().all(|(i, a)| classes[i + 1..].iter().all(|b| a.members.is_disjoint(&b.members)))
}

fn covers(s: &FiniteSemigroup, classes: &[CosetClass]) -> bool {
    let mut hit = vec![false; s.size()];
    for c in classes {
        for &x in c.members.iter() {
            hit[x] = true;
        }
    }
    hit.into_iter().all(|h| h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetPartitionReport {
    pub subgroup: ElementSet,
    pub identity: usize,
    pub side: Side,
    pub classes: Vec<CosetClass>,
    pub is_disjoint: bool,
    pub covers: bool,
    pub uniform: bool,
    pub class_sizes: Vec<usize>,
}

impl CosetPartitionReport {
    pub fn class_sets(&self) -> Vec<ElementSet> {
        self.classes.iter().map(|c| c.members.clone()).collect()
    }
}

pub fn coset_partition_report(s: &FiniteSemigroup, a: &EmbeddedGroup<'_>, side: Side) -> CosetPartitionReport {
    let classes = group_classes(s, |x| s_coset(s, a.members(), x, side));
    let mut class_sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
    class_sizes.sort_unstable();
    CosetPartitionReport {
        subgroup: a.members().clone(),
        identity: a.identity(),
        side,
        is_disjoint: pairwise_disjoint(&classes),
        covers: covers(s, &classes),
        uniform: class_sizes.windows(2).all(|w| w[0] == w[1]),
        class_sizes,
        classes,
    }
}

pub fn double_coset(s: &FiniteSemigroup, a: &ElementSet, b: &ElementSet, x: usize) -> ElementSet {
    a.iter().flat_map(|&p| b.iter().map(move |&q| s.mul(s.mul(p, x), q))).collect()
}

/// The relation `x ~ y ⇔ y ∈ AxB`, one flag per condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceCheck {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub partitions: bool,
}

impl EquivalenceCheck {
    pub fn holds(&self) -> bool {
        self.reflexive && self.symmetric && self.transitive && self.partitions
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCosetReport {
    pub a: ElementSet,
    pub b: ElementSet,
    pub classes: Vec<CosetClass>,
    pub is_disjoint: bool,
    pub covers: bool,
    pub relation: EquivalenceCheck,
    pub is_s_equivalence: bool,
}

impl DoubleCosetReport {
    pub fn class_sets(&self) -> Vec<ElementSet> {
        self.classes.iter().map(|c| c.members.clone()).collect()
    }
}

pub fn double_coset_report(s: &FiniteSemigroup, a: &EmbeddedGroup<'_>, b: &EmbeddedGroup<'_>) -> DoubleCosetReport {
    let n = s.size();
    let per_x: Vec<ElementSet> = s.elements().map(|x| double_coset(s, a.members(), b.members(), x)).collect();
    // related[x][y] ⇔ y ∈ AxB
    let related: Vec<Vec<bool>> = per_x
        .iter()
        .map(|c| {
            let mut row = vec![false; n];
            for &y in c.iter() {
                row[y] = true;
            }
            row
        })
        .collect();
    let reflexive = (0..n).all(|x| related[x][x]);
    let symmetric = (0..n).all(|x| (0..n).all(|y| related[x][y] == related[y][x]));
    let transitive =
        (0..n).all(|x| (0..n).filter(|&y| related[x][y]).all(|y| (0..n).all(|z| !related[y][z] || related[x][z])));
    let classes = group_classes(s, |x| per_x[x].clone());
    let is_disjoint = pairwise_disjoint(&classes);
    let covers = covers(s, &classes);
    let relation = EquivalenceCheck { reflexive, symmetric, transitive, partitions: is_disjoint && covers };
    DoubleCosetReport {
        a: a.members().clone(),
        b: b.members().clone(),
        is_s_equivalence: relation.holds(),
        relation,
        is_disjoint,
        covers,
        classes,
    }
}

/// For each `x` separately: `xA ⊆ A` and `Ax ⊆ A`, or (with a zero)
/// `xA = Ax = {0}`.
pub fn is_s_normal(s: &FiniteSemigroup, a: &ElementSet) -> bool {
    let zero = s.zero().map(ElementSet::singleton);
    s.elements().all(|x| {
        let left = s_coset(s, a, x, Side::Left);
        let right = s_coset(s, a, x, Side::Right);
        (left.is_subset(a) && right.is_subset(a)) || zero.as_ref().is_some_and(|z| &left == z && &right == z)
    })
}

pub fn s_normal_subgroups<'a>(s: &'a FiniteSemigroup, opts: &SubgroupOptions) -> Result<Vec<EmbeddedGroup<'a>>> {
    Ok(all_subgroups(s, opts)?.into_iter().filter(|g| is_s_normal(s, g.members())).collect())
}

pub fn is_pseudo_simple(s: &FiniteSemigroup, opts: &SubgroupOptions) -> Result<bool> {
    Ok(s_normal_subgroups(s, opts)?.is_empty())
}

/// `S/A`: the distinct sets `Ax` with the induced product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quotient {
    pub classes: Vec<ElementSet>,
    /// `table[i][j]` is the class containing the element-wise product of
    /// classes `i` and `j`.
    pub table: Vec<Vec<usize>>,
}

impl Quotient {
    pub fn cardinality(&self) -> usize {
        self.classes.len()
    }

    /// Associativity of the induced product.
    pub fn is_semigroup(&self) -> bool {
        let n = self.classes.len();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.table[self.table[i][j]][k] == self.table[i][self.table[j][k]])))
    }
}

pub fn quotient(s: &FiniteSemigroup, a: &EmbeddedGroup<'_>) -> Result<Quotient> {
    if !is_s_normal(s, a.members()) {
        return Err(Error::Precondition(format!("{} is not a Smarandache normal subgroup", a.render())));
    }
    let classes: Vec<ElementSet> = group_classes(s, |x| s_coset(s, a.members(), x, Side::Right))
        .into_iter()
        .map(|c| c.members)
        .collect();
    let mut table = Vec::with_capacity(classes.len());
    for x in &classes {
        let mut row = Vec::with_capacity(classes.len());
        for y in &classes {
            let prod = s.set_product(x, y);
            // Classes are sorted by size, so the first hit is the smallest container.
            let k = classes.iter().position(|c| prod.is_subset(c)).ok_or_else(|| {
                Error::Precondition(format!(
                    "product {} of two classes lies in no class",
                    s.render_set(&prod)
                ))
            })?;
            row.push(k);
        }
        table.push(row);
    }
    Ok(Quotient { classes, table })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{make_full_transformation, make_zn_mul};
    use crate::subgroups::subgroup_check;

    fn set<const N: usize>(v: [usize; N]) -> ElementSet {
        ElementSet::from(v)
    }

    #[test]
    fn cosets_in_z12_and_z10() {
        let z12 = make_zn_mul(12).unwrap();
        let a = set([3, 9]);
        assert_eq!(s_coset(&z12, &a, 4, Side::Right), set([0]));
        assert_eq!(s_coset(&z12, &a, 5, Side::Right), a);
        let z10 = make_zn_mul(10).unwrap();
        assert_eq!(s_coset(&z10, &set([1, 9]), 3, Side::Left), set([3, 7]));
    }

    #[test]
    fn z10_partitions() {
        let z10 = make_zn_mul(10).unwrap();
        let a = subgroup_check(&z10, &set([1, 9])).unwrap();
        let r = coset_partition_report(&z10, &a, Side::Right);
        assert_eq!(r.class_sets(), vec![set([0]), set([5]), set([1, 9]), set([2, 8]), set([3, 7]), set([4, 6])]);
        assert!(r.is_disjoint && r.covers && !r.uniform);
        let b = subgroup_check(&z10, &set([2, 4, 6, 8])).unwrap();
        let r = coset_partition_report(&z10, &b, Side::Right);
        assert_eq!(r.class_sets(), vec![set([0]), set([2, 4, 6, 8])]);
        assert!(!r.covers);
    }

    #[test]
    fn double_cosets_in_z10() {
        let z10 = make_zn_mul(10).unwrap();
        let a = subgroup_check(&z10, &set([1, 9])).unwrap();
        let b = subgroup_check(&z10, &set([2, 4, 6, 8])).unwrap();
        assert_eq!(double_coset(&z10, a.members(), b.members(), 3), set([2, 4, 6, 8]));
        assert_eq!(double_coset(&z10, a.members(), b.members(), 5), set([0]));
        let r = double_coset_report(&z10, &a, &b);
        assert_eq!(r.class_sets(), vec![set([0]), set([2, 4, 6, 8])]);
        assert!(!r.covers && !r.is_s_equivalence);
        let r = double_coset_report(&z10, &a, &a);
        assert_eq!(r.class_sets(), vec![set([0]), set([5]), set([1, 9]), set([2, 8]), set([3, 7]), set([4, 6])]);
        assert!(r.is_s_equivalence);
    }

    #[test]
    fn double_coset_in_s3() {
        let t3 = make_full_transformation(3).unwrap();
        let a = subgroup_check(&t3, &t3.set_of_labels(&["[1,2,3]", "[1,3,2]"]).unwrap()).unwrap();
        let b = subgroup_check(&t3, &t3.set_of_labels(&["[1,2,3]", "[3,2,1]"]).unwrap()).unwrap();
        let x = t3.index_of("[1,1,1]").unwrap();
        assert_eq!(double_coset(&t3, a.members(), b.members(), x), t3.set_of_labels(&["[1,1,1]", "[3,3,3]"]).unwrap());
        let trivial = set([t3.identity().unwrap()]);
        assert_eq!(double_coset(&t3, &trivial, &trivial, t3.identity().unwrap()), trivial);
    }

    #[test]
    fn normal_subgroups_and_quotients() {
        let opts = SubgroupOptions::default();
        let z10 = make_zn_mul(10).unwrap();
        let normal = s_normal_subgroups(&z10, &opts).unwrap();
        assert_eq!(normal.iter().map(|g| g.members().clone()).collect::<Vec<_>>(), vec![set([2, 4, 6, 8])]);
        let q = quotient(&z10, &normal[0]).unwrap();
        assert_eq!(q.cardinality(), 2);
        assert!(q.is_semigroup());

        let z7 = make_zn_mul(7).unwrap();
        assert!(!is_s_normal(&z7, &set([1, 6])));
        let units = subgroup_check(&z7, &set([1, 2, 3, 4, 5, 6])).unwrap();
        assert!(is_s_normal(&z7, units.members()));
        let q = quotient(&z7, &units).unwrap();
        assert_eq!(q.classes, vec![set([0]), set([1, 2, 3, 4, 5, 6])]);
        let pair = subgroup_check(&z7, &set([1, 6])).unwrap();
        assert!(matches!(quotient(&z7, &pair), Err(Error::Precondition(_))));

        let t3 = make_full_transformation(3).unwrap();
        assert!(is_pseudo_simple(&t3, &opts).unwrap());
    }
}
