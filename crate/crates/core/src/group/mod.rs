//! Classical finite-group computations on [`EmbeddedGroup`]s.
//!
//! Everything here is a direct scan over the group's members; groups are small
//! (order ≤ 720 by default) so no permutation-group machinery is needed.

mod perm;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

pub use perm::{
    conjugate_by_replacement, conjugate_direct, conjugator_from_cycles, cycle_decomposition, find_conjugator,
    CycleDecomposition,
};

use crate::error::{Error, Result};
use crate::semigroup::ElementSet;
use crate::subgroups::EmbeddedGroup;
use crate::transformation::Transformation;

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

pub fn primes_up_to(n: usize) -> Vec<usize> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

fn require_member(g: &EmbeddedGroup<'_>, x: usize) -> Result<()> {
    if g.contains(x) {
        Ok(())
    } else {
        Err(Error::Membership(x))
    }
}

fn require_prime(p: usize) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{p} is not prime")))
    }
}

fn require_subgroup(g: &EmbeddedGroup<'_>, h: &EmbeddedGroup<'_>) -> Result<()> {
    if std::ptr::eq(g.parent(), h.parent()) && h.identity() == g.identity() && h.members().is_subset(g.members()) {
        Ok(())
    } else {
        Err(Error::Containment)
    }
}

pub fn element_order(g: &EmbeddedGroup<'_>, x: usize) -> Result<usize> {
    require_member(g, x)?;
    let mut acc = x;
    let mut m = 1;
    while acc != g.identity() {
        acc = g.mul(acc, x);
        m += 1;
    }
    Ok(m)
}

/// The subgroup generated by `gens`, by breadth-first right multiplication
/// from the identity.
pub(crate) fn generated<'a>(g: &EmbeddedGroup<'a>, gens: &[usize]) -> EmbeddedGroup<'a> {
    let s = g.parent();
    let mut seen = BTreeSet::from([g.identity()]);
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for &t in gens {
            let y = s.mul(x, t);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    g.restrict(seen.into_iter().collect())
}

pub fn cyclic_subgroup<'a>(g: &EmbeddedGroup<'a>, x: usize) -> Result<EmbeddedGroup<'a>> {
    require_member(g, x)?;
    Ok(generated(g, &[x]))
}

pub fn is_cyclic(g: &EmbeddedGroup<'_>) -> bool {
    g.iter().any(|&x| element_order(g, x).is_ok_and(|m| m == g.order()))
}

pub fn is_abelian(g: &EmbeddedGroup<'_>) -> bool {
    let m = g.members().as_slice();
    m.iter().enumerate().all(|(i, &a)| m[i + 1..].iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// Every subgroup of `g`: cyclic subgroups closed under pairwise joins.
/// Ordered by size, then members.
pub fn subgroup_lattice<'a>(g: &EmbeddedGroup<'a>) -> Vec<EmbeddedGroup<'a>> {
    // Each entry keeps a short generating list so joins stay cheap.
    let mut list: Vec<(EmbeddedGroup<'a>, Vec<usize>)> = Vec::new();
    let mut known: BTreeSet<ElementSet> = BTreeSet::new();
    for &x in g.iter() {
        let c = generated(g, &[x]);
        if known.insert(c.members().clone()) {
            list.push((c, vec![x]));
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            let (a, ga) = &list[j];
            let (b, gb) = &list[i];
            if a.members().is_subset(b.members()) || b.members().is_subset(a.members()) {
                continue;
            }
            let gens: Vec<usize> = ga.iter().chain(gb.iter()).copied().collect::<BTreeSet<_>>().into_iter().collect();
            let join = generated(g, &gens);
            if known.insert(join.members().clone()) {
                list.push((join, gens));
            }
        }
        i += 1;
    }
    let mut out: Vec<EmbeddedGroup<'a>> = list.into_iter().map(|(h, _)| h).collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    out
}

/// Conjugacy classes, centralizer orders and centre of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyReport {
    pub classes: Vec<ElementSet>,
    /// Order of `N(a) = {x : xa = ax}` for each class representative `a`
    /// (the smallest member of its class).
    pub normalizer_orders: BTreeMap<usize, usize>,
    pub center: ElementSet,
    pub group_order: usize,
}

impl ConjugacyReport {
    /// `|Z(G)| + Σ_{a ∉ Z(G)} |G| / |N(a)| = |G|`, summed over class representatives.
    pub fn class_equation_holds(&self) -> bool {
        let n = self.group_order;
        let mut total = self.center.len();
        for (&a, &norm) in &self.normalizer_orders {
            if self.center.contains(a) {
                continue;
            }
            if n % norm != 0 {
                return false;
            }
            total += n / norm;
        }
        total == n
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }

    pub fn class_of(&self, x: usize) -> Option<&ElementSet> {
        self.classes.iter().find(|c| c.contains(x))
    }
}

pub fn conjugate(g: &EmbeddedGroup<'_>, by: usize, x: usize) -> usize {
    let inv = g.inverse(by).expect("member has an inverse");
    g.mul(g.mul(by, x), inv)
}

pub fn conjugacy_analysis(g: &EmbeddedGroup<'_>) -> ConjugacyReport {
    let mut assigned = BTreeSet::new();
    let mut classes = Vec::new();
    let mut normalizer_orders = BTreeMap::new();
    for &a in g.iter() {
        if assigned.contains(&a) {
            continue;
        }
        let class: ElementSet = g.iter().map(|&t| conjugate(g, t, a)).collect();
        assigned.extend(class.iter().copied());
        classes.push(class);
        let norm = g.iter().filter(|&&x| g.mul(x, a) == g.mul(a, x)).count();
        normalizer_orders.insert(a, norm);
    }
    let center: ElementSet =
        g.iter().copied().filter(|&z| g.iter().all(|&x| g.mul(x, z) == g.mul(z, x))).collect();
    let report = ConjugacyReport { classes, normalizer_orders, center, group_order: g.order() };
    debug_assert!(report.class_equation_holds());
    report
}

pub fn lagrange_check(g: &EmbeddedGroup<'_>, h: &EmbeddedGroup<'_>) -> Result<bool> {
    require_subgroup(g, h)?;
    Ok(g.order() % h.order() == 0)
}

pub fn cauchy_witness(g: &EmbeddedGroup<'_>, p: usize) -> Result<Option<usize>> {
    require_prime(p)?;
    Ok(g.iter().copied().find(|&x| element_order(g, x).is_ok_and(|m| m == p)))
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: usize) -> usize {
    let mut q = 1;
    while n % (q * p) == 0 {
        q *= p;
    }
    q
}

pub fn sylow_subgroups<'a>(g: &EmbeddedGroup<'a>, p: usize) -> Result<Vec<EmbeddedGroup<'a>>> {
    require_prime(p)?;
    let target = p_part(g.order(), p);
    Ok(subgroup_lattice(g).into_iter().filter(|h| h.order() == target).collect())
}

fn conjugate_set(g: &EmbeddedGroup<'_>, by: usize, set: &ElementSet) -> ElementSet {
    set.iter().map(|&x| conjugate(g, by, x)).collect()
}

/// Sylow count `≡ 1 (mod p)` and all Sylow `p`-subgroups conjugate to the first.
pub fn sylow_count_check(g: &EmbeddedGroup<'_>, p: usize) -> Result<bool> {
    let sylows = sylow_subgroups(g, p)?;
    let Some(first) = sylows.first() else { return Ok(false) };
    let count_ok = sylows.len() % p == 1 % p;
    let conj_ok = sylows
        .iter()
        .all(|q| g.iter().any(|&t| &conjugate_set(g, t, first.members()) == q.members()));
    Ok(count_ok && conj_ok)
}

/// `|AxB| = |A||B| / |A ∩ xBx⁻¹|`.
pub fn double_coset_size_check(
    g: &EmbeddedGroup<'_>,
    a: &EmbeddedGroup<'_>,
    b: &EmbeddedGroup<'_>,
    x: usize,
) -> Result<bool> {
    require_subgroup(g, a)?;
    require_subgroup(g, b)?;
    require_member(g, x)?;
    let axb: ElementSet = a.iter().flat_map(|&s| b.iter().map(move |&t| g.mul(g.mul(s, x), t))).collect();
    let xbx = conjugate_set(g, x, b.members());
    let meet = a.members().intersection(&xbx).len();
    Ok(axb.len() * meet == a.order() * b.order())
}

/// Right regular representation `τ_g(x) = x·g`, with members renumbered
/// `1..=|G|` in ascending index order.
pub fn regular_representation(g: &EmbeddedGroup<'_>) -> BTreeMap<usize, Transformation> {
    let members = g.members().as_slice();
    let pos = |y: usize| members.binary_search(&y).expect("closed under product");
    g.iter()
        .map(|&t| {
            let images = members.iter().map(|&x| pos(g.mul(x, t))).collect();
            (t, Transformation::from_images(images).expect("positions are in range"))
        })
        .collect()
}

/// Injective, multiplicative (`τ_{gh} = τ_g·τ_h`) and bijective images.
pub fn representation_is_faithful(g: &EmbeddedGroup<'_>, rep: &BTreeMap<usize, Transformation>) -> bool {
    let distinct: BTreeSet<&Transformation> = rep.values().collect();
    distinct.len() == g.order()
        && rep.values().all(Transformation::is_bijective)
        && g.iter().all(|&a| g.iter().all(|&b| rep[&g.mul(a, b)] == rep[&a].then(&rep[&b])))
        && rep[&g.identity()] == Transformation::identity(g.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{make_cyclic_group, make_symmetric_group, make_zn_mul, FiniteSemigroup};
    use crate::subgroups::{maximal_subgroup_at, subgroup_check};

    fn whole(s: &FiniteSemigroup) -> EmbeddedGroup<'_> {
        EmbeddedGroup::whole(s).expect("is a group")
    }

    #[test]
    fn orders() {
        let z5 = make_zn_mul(5).unwrap();
        let u = maximal_subgroup_at(&z5, 1).unwrap();
        assert_eq!(element_order(&u, 2).unwrap(), 4);
        assert_eq!(element_order(&u, 1).unwrap(), 1);
        assert_eq!(element_order(&u, 0), Err(Error::Membership(0)));
        let c6 = make_cyclic_group(6).unwrap();
        assert_eq!(element_order(&whole(&c6), 3).unwrap(), 2);
    }

    #[test]
    fn cyclicity() {
        let z10 = make_zn_mul(10).unwrap();
        let u10 = maximal_subgroup_at(&z10, 1).unwrap();
        assert_eq!(cyclic_subgroup(&u10, 3).unwrap().members(), &ElementSet::from([1, 3, 7, 9]));
        assert!(is_cyclic(&u10));
        let z8 = make_zn_mul(8).unwrap();
        let u8 = maximal_subgroup_at(&z8, 1).unwrap();
        assert!(!is_cyclic(&u8));
        assert!(is_abelian(&u8));
        assert_eq!(cyclic_subgroup(&u8, 1).unwrap().members(), &ElementSet::from([1]));
    }

    #[test]
    fn conjugacy_in_symmetric_groups() {
        let s3 = make_symmetric_group(3).unwrap();
        let r = conjugacy_analysis(&whole(&s3));
        let mut sizes = r.class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(r.center.len(), 1);
        assert!(r.class_equation_holds());

        let s4 = make_symmetric_group(4).unwrap();
        let r = conjugacy_analysis(&whole(&s4));
        let mut sizes = r.class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(sizes.iter().sum::<usize>(), 24);

        let c5 = make_cyclic_group(5).unwrap();
        let r = conjugacy_analysis(&whole(&c5));
        assert!(r.classes.iter().all(|c| c.len() == 1));
        assert_eq!(r.center.len(), 5);
    }

    #[test]
    fn lagrange_and_cauchy() {
        let s3 = make_symmetric_group(3).unwrap();
        let g = whole(&s3);
        let k = subgroup_check(&s3, &s3.set_of_labels(&["[1,2,3]", "[2,3,1]", "[3,1,2]"]).unwrap()).unwrap();
        assert!(lagrange_check(&g, &k).unwrap());
        let triv = g.restrict(ElementSet::singleton(g.identity()));
        assert!(lagrange_check(&g, &triv).unwrap());
        assert_eq!(lagrange_check(&k, &g), Err(Error::Containment));

        let w = cauchy_witness(&g, 3).unwrap().unwrap();
        assert_eq!(element_order(&g, w).unwrap(), 3);
        assert_eq!(cauchy_witness(&g, 5).unwrap(), None);
        assert!(cauchy_witness(&g, 4).is_err());

        let z16 = make_zn_mul(16).unwrap();
        let u16 = maximal_subgroup_at(&z16, 1).unwrap();
        let h = subgroup_check(&z16, &ElementSet::from([1, 15])).unwrap();
        assert!(lagrange_check(&u16, &h).unwrap());
        let w = cauchy_witness(&u16, 2).unwrap().unwrap();
        assert_eq!(z16.mul(w, w), 1);
    }

    #[test]
    fn sylow_counts() {
        let s4 = make_symmetric_group(4).unwrap();
        let g = whole(&s4);
        let p2 = sylow_subgroups(&g, 2).unwrap();
        assert_eq!(p2.len(), 3);
        assert!(p2.iter().all(|h| h.order() == 8));
        assert_eq!(sylow_subgroups(&g, 3).unwrap().len(), 4);
        assert!(sylow_count_check(&g, 2).unwrap());
        assert!(sylow_count_check(&g, 3).unwrap());

        let z16 = make_zn_mul(16).unwrap();
        let u16 = maximal_subgroup_at(&z16, 1).unwrap();
        assert_eq!(sylow_subgroups(&u16, 2).unwrap().len(), 1);
    }

    #[test]
    fn lattice_sizes() {
        // Known subgroup counts: S3 has 6, S4 has 30, C12 has 6.
        let s3 = make_symmetric_group(3).unwrap();
        assert_eq!(subgroup_lattice(&whole(&s3)).len(), 6);
        let s4 = make_symmetric_group(4).unwrap();
        assert_eq!(subgroup_lattice(&whole(&s4)).len(), 30);
        let c12 = make_cyclic_group(12).unwrap();
        assert_eq!(subgroup_lattice(&whole(&c12)).len(), 6);
    }

    #[test]
    fn double_cosets() {
        let s3 = make_symmetric_group(3).unwrap();
        let g = whole(&s3);
        let a = subgroup_check(&s3, &s3.set_of_labels(&["[1,2,3]", "[1,3,2]"]).unwrap()).unwrap();
        let p4 = s3.index_of("[2,3,1]").unwrap();
        assert!(double_coset_size_check(&g, &a, &a, p4).unwrap());
        assert!(double_coset_size_check(&g, &a, &a, g.identity()).unwrap());

        let s4 = make_symmetric_group(4).unwrap();
        let g4 = whole(&s4);
        let t12 = s4.index_of("[2,1,3,4]").unwrap();
        let t34 = s4.index_of("[1,2,4,3]").unwrap();
        let a = cyclic_subgroup(&g4, t12).unwrap();
        let b = cyclic_subgroup(&g4, t34).unwrap();
        assert!(double_coset_size_check(&g4, &a, &b, g4.identity()).unwrap());
    }

    #[test]
    fn regular_representations() {
        let z12 = make_zn_mul(12).unwrap();
        let h = subgroup_check(&z12, &ElementSet::from([1, 11])).unwrap();
        let rep = regular_representation(&h);
        assert_eq!(rep[&1], Transformation::identity(2));
        assert_eq!(rep[&11].row(), vec![2, 1]);
        let u = maximal_subgroup_at(&z12, 1).unwrap();
        let rep = regular_representation(&u);
        assert!(representation_is_faithful(&u, &rep));
        assert!(rep.values().all(|t| t.then(t) == Transformation::identity(4)));
    }
}
