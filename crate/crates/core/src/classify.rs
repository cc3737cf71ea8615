//! The Smarandache taxonomy of a finite semigroup, with witnesses.

use serde::Serialize;

use crate::cosets::is_pseudo_simple;
use crate::error::Result;
use crate::group::{element_order, is_abelian, is_cyclic, is_prime, primes_up_to};
use crate::semigroup::{closure, ElementSet, FiniteSemigroup};
use crate::subgroups::{all_subgroups, largest_subgroups, maximal_subgroups, EmbeddedGroup, IdentityPolicy, SubgroupOptions};

/// A yes/no verdict with the subgroup that decides it: a counterexample for
/// universal properties that fail, an example for existential ones that hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<ElementSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LagrangeClass {
    Lagrange,
    WeaklyLagrange,
    NonLagrange,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LagrangeVerdict {
    pub class: LagrangeClass,
    /// A subgroup whose order divides `o(S)`.
    pub dividing: Option<ElementSet>,
    /// A subgroup whose order does not divide `o(S)`.
    pub non_dividing: Option<ElementSet>,
}

impl LagrangeVerdict {
    pub fn is_lagrange(&self) -> bool {
        self.class == LagrangeClass::Lagrange
    }

    pub fn is_weakly_lagrange(&self) -> bool {
        matches!(self.class, LagrangeClass::Lagrange | LagrangeClass::WeaklyLagrange)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SylowDetail {
    pub prime: usize,
    pub divides_order: bool,
    /// Subgroups of order `p^t` (`t ≥ 1`) when `p | o(S)`.
    pub s_p_sylow_subgroups: Vec<ElementSet>,
    /// Subgroups of order `p^t` when `p ∤ o(S)` and `p < o(S)`.
    pub non_p_sylow_subgroups: Vec<ElementSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CauchyElement {
    pub element: usize,
    pub order: usize,
    pub is_cauchy: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationDetails {
    pub s_commutative: Verdict,
    pub s_weakly_commutative: Verdict,
    pub s_cyclic: Verdict,
    pub s_weakly_cyclic: Verdict,
    pub lagrange: LagrangeVerdict,
    pub is_p_sylow_semigroup: bool,
    pub sylow: Vec<SylowDetail>,
    pub is_cauchy_semigroup: bool,
    pub cauchy_elements: Vec<CauchyElement>,
    pub is_s_simple: bool,
    pub hyper_subsemigroups: Vec<ElementSet>,
    pub is_pseudo_simple: bool,
    pub is_s_maximal: bool,
    pub maximal_subgroups: Vec<ElementSet>,
    pub largest_subgroups: Vec<ElementSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub order: usize,
    pub policy: IdentityPolicy,
    pub is_s_semigroup: bool,
    pub s_semigroup_witness: Option<ElementSet>,
    /// Absent when the semigroup is not an S-semigroup.
    pub details: Option<ClassificationDetails>,
}

/// A smallest group, ties going to the members that compare greatest from
/// the top element down (so `{1, n-1}` in `Z_n`).
fn smallest_witness(groups: &[EmbeddedGroup<'_>]) -> Option<ElementSet> {
    groups
        .iter()
        .map(|g| g.members())
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.iter().rev().cmp(a.iter().rev())))
        .cloned()
}

/// True with a smallest witness when some proper subset of size ≥ 2 is a group.
pub fn is_s_semigroup(s: &FiniteSemigroup, opts: &SubgroupOptions) -> Result<(bool, Option<ElementSet>)> {
    let w = smallest_witness(&all_subgroups(s, opts)?);
    Ok((w.is_some(), w))
}

fn every<'a>(groups: &[EmbeddedGroup<'a>], pred: impl Fn(&EmbeddedGroup<'a>) -> bool) -> Verdict {
    match groups.iter().find(|g| !pred(g)) {
        Some(g) => Verdict { holds: false, witness: Some(g.members().clone()) },
        None => Verdict { holds: true, witness: None },
    }
}

fn some<'a>(groups: &[EmbeddedGroup<'a>], pred: impl Fn(&EmbeddedGroup<'a>) -> bool) -> Verdict {
    match groups.iter().find(|g| pred(g)) {
        Some(g) => Verdict { holds: true, witness: Some(g.members().clone()) },
        None => Verdict { holds: false, witness: None },
    }
}

fn lagrange_of(order: usize, groups: &[EmbeddedGroup<'_>]) -> LagrangeVerdict {
    let dividing = groups.iter().find(|g| order % g.order() == 0).map(|g| g.members().clone());
    let non_dividing = groups.iter().find(|g| order % g.order() != 0).map(|g| g.members().clone());
    let class = match (&dividing, &non_dividing) {
        (Some(_), None) => LagrangeClass::Lagrange,
        (Some(_), Some(_)) => LagrangeClass::WeaklyLagrange,
        (None, _) => LagrangeClass::NonLagrange,
    };
    LagrangeVerdict { class, dividing, non_dividing }
}

pub fn lagrange_class(s: &FiniteSemigroup, opts: &SubgroupOptions) -> Result<LagrangeVerdict> {
    Ok(lagrange_of(s.size(), &all_subgroups(s, opts)?))
}

fn prime_power_exponent(n: usize, p: usize) -> Option<u32> {
    let mut m = n;
    let mut t = 0;
    while m > 1 && m % p == 0 {
        m /= p;
        t += 1;
    }
    (m == 1 && t >= 1).then_some(t)
}

fn sylow_of(order: usize, groups: &[EmbeddedGroup<'_>], primes: &[usize]) -> Vec<SylowDetail> {
    primes
        .iter()
        .map(|&p| {
            let divides_order = order % p == 0;
            let p_groups: Vec<ElementSet> = groups
                .iter()
                .filter(|g| prime_power_exponent(g.order(), p).is_some())
                .map(|g| g.members().clone())
                .collect();
            let (s_p, non_p) = if divides_order {
                (p_groups, Vec::new())
            } else if p < order {
                (Vec::new(), p_groups)
            } else {
                (Vec::new(), Vec::new())
            };
            SylowDetail { prime: p, divides_order, s_p_sylow_subgroups: s_p, non_p_sylow_subgroups: non_p }
        })
        .collect()
}

fn is_p_sylow_of(order: usize, details: &[SylowDetail]) -> bool {
    primes_up_to(order)
        .into_iter()
        .filter(|p| order % p == 0)
        .all(|p| details.iter().any(|d| d.prime == p && !d.s_p_sylow_subgroups.is_empty()))
}

/// Per-prime Sylow detail; `primes` defaults to every prime `≤ o(S)`.
pub fn sylow_analysis(s: &FiniteSemigroup, opts: &SubgroupOptions, primes: Option<&[usize]>) -> Result<Vec<SylowDetail>> {
    let groups = all_subgroups(s, opts)?;
    let all = primes_up_to(s.size());
    let primes: Vec<usize> = primes.map(|p| p.iter().copied().filter(|&q| is_prime(q)).collect()).unwrap_or(all);
    Ok(sylow_of(s.size(), &groups, &primes))
}

/// Every prime dividing `o(S)` has at least one S-p-Sylow subgroup.
pub fn is_p_sylow_semigroup(s: &FiniteSemigroup, opts: &SubgroupOptions) -> Result<bool> {
    Ok(is_p_sylow_of(s.size(), &sylow_analysis(s, opts, None)?))
}

fn cauchy_of(order: usize, groups: &[EmbeddedGroup<'_>]) -> Vec<CauchyElement> {
    // An element's order is the same in every group containing it, since all
    // such groups share the idempotent power of the element as identity.
    let mut out: Vec<CauchyElement> = Vec::new();
    for g in groups {
        for &x in g.iter() {
            if x == g.identity() || out.iter().any(|c| c.element == x) {
                continue;
            }
            let r = element_order(g, x).expect("member");
            out.push(CauchyElement { element: x, order: r, is_cauchy: order % r == 0 });
        }
    }
    out.sort_by_key(|c| c.element);
    out
}

pub fn cauchy_elements(s: &FiniteSemigroup, opts: &SubgroupOptions) -> Result<Vec<CauchyElement>> {
    Ok(cauchy_of(s.size(), &all_subgroups(s, opts)?))
}

pub fn is_cauchy_semigroup(s: &FiniteSemigroup, opts: &SubgroupOptions) -> Result<bool> {
    let elems = cauchy_elements(s, opts)?;
    Ok(!elems.is_empty() && elems.iter().all(|c| c.is_cauchy))
}

/// Proper closed subsets strictly containing a largest subgroup, searched over
/// `closure(L ∪ {x})` for `x ∉ L` and `closure(L ∪ {0})`.
pub fn hyper_subsemigroups(s: &FiniteSemigroup, opts: &SubgroupOptions) -> Result<Vec<ElementSet>> {
    let largest = largest_subgroups(s, opts)?;
    let mut found = std::collections::BTreeSet::new();
    for l in &largest {
        let base = l.members();
        // The zero, when present and outside L, is one of these x.
        for x in s.elements().filter(|&x| !base.contains(x)) {
            let c = closure(s, &base.with(x));
            if c.len() < s.size() {
                found.insert(c);
            }
        }
    }
    Ok(found.into_iter().collect())
}

pub fn is_s_simple(s: &FiniteSemigroup, opts: &SubgroupOptions) -> Result<bool> {
    Ok(hyper_subsemigroups(s, opts)?.is_empty())
}

/// The cyclic subsemigroup `{x, x², …}` when it is a group of order ≥ 2.
fn cyclic_group_of(s: &FiniteSemigroup, x: usize) -> Option<(ElementSet, usize)> {
    let mut powers = vec![x];
    let mut seen = vec![false; s.size()];
    seen[x] = true;
    loop {
        let next = s.mul(*powers.last().unwrap(), x);
        if seen[next] {
            if next != x || powers.len() < 2 {
                return None;
            }
            let e = powers.iter().copied().find(|&p| s.is_idempotent(p)).expect("finite group has identity");
            return Some((powers.into_iter().collect(), e));
        }
        seen[next] = true;
        powers.push(next);
    }
}

/// `subset` is proper, closed, and contains a group of order ≥ 2 other than
/// itself (a group that is not a proper subset does not count).
pub fn s_subsemigroup_check(s: &FiniteSemigroup, subset: &ElementSet, policy: IdentityPolicy) -> bool {
    if subset.is_empty() || subset.len() >= s.size() || !s.is_closed(subset) {
        return false;
    }
    // Any group of order ≥ 2 inside `subset` contains a non-trivial cyclic
    // group, and a non-trivial cyclic group unequal to `subset` is itself a
    // witness, so it suffices to scan cyclic subsemigroups.
    subset.iter().any(|&x| {
        cyclic_group_of(s, x).is_some_and(|(c, e)| {
            &c != subset && (policy == IdentityPolicy::AnyIdempotent || Some(e) == s.identity())
        })
    })
}

pub fn classify(s: &FiniteSemigroup, opts: &SubgroupOptions) -> Result<ClassificationReport> {
    let groups = all_subgroups(s, opts)?;
    let Some(witness) = smallest_witness(&groups) else {
        return Ok(ClassificationReport {
            order: s.size(),
            policy: opts.policy,
            is_s_semigroup: false,
            s_semigroup_witness: None,
            details: None,
        });
    };
    let order = s.size();
    let sylow = sylow_of(order, &groups, &primes_up_to(order));
    let cauchy = cauchy_of(order, &groups);
    let hyper = hyper_subsemigroups(s, opts)?;
    let maximal = maximal_subgroups(s, opts)?;
    let largest = largest_subgroups(s, opts)?;
    let details = ClassificationDetails {
        s_commutative: every(&groups, is_abelian),
        s_weakly_commutative: some(&groups, is_abelian),
        s_cyclic: every(&groups, is_cyclic),
        s_weakly_cyclic: some(&groups, is_cyclic),
        lagrange: lagrange_of(order, &groups),
        is_p_sylow_semigroup: is_p_sylow_of(order, &sylow),
        sylow,
        is_cauchy_semigroup: !cauchy.is_empty() && cauchy.iter().all(|c| c.is_cauchy),
        cauchy_elements: cauchy,
        is_s_simple: hyper.is_empty(),
        hyper_subsemigroups: hyper,
        is_pseudo_simple: is_pseudo_simple(s, opts)?,
        is_s_maximal: maximal.len() == 1,
        maximal_subgroups: maximal.iter().map(|g| g.members().clone()).collect(),
        largest_subgroups: largest.iter().map(|g| g.members().clone()).collect(),
    };
    Ok(ClassificationReport {
        order,
        policy: opts.policy,
        is_s_semigroup: true,
        s_semigroup_witness: Some(witness),
        details: Some(details),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{make_full_transformation, make_matrix_semigroup, make_zn_mul};

    fn opts() -> SubgroupOptions {
        SubgroupOptions::default()
    }

    #[test]
    fn s_semigroup_witnesses() {
        let z8 = make_zn_mul(8).unwrap();
        assert_eq!(is_s_semigroup(&z8, &opts()).unwrap(), (true, Some(ElementSet::from([1, 7]))));
        for n in 3..=20 {
            let z = make_zn_mul(n).unwrap();
            assert_eq!(is_s_semigroup(&z, &opts()).unwrap().1, Some(ElementSet::from([1, n - 1])), "Z_{n}");
        }
        let lz = FiniteSemigroup::from_table("LZ2", &[vec![0, 0], vec![1, 1]], None).unwrap();
        assert_eq!(is_s_semigroup(&lz, &opts()).unwrap(), (false, None));
        let r = classify(&lz, &opts()).unwrap();
        assert!(!r.is_s_semigroup && r.details.is_none());
    }

    #[test]
    fn classify_small_zn() {
        let z6 = make_zn_mul(6).unwrap();
        let d = classify(&z6, &opts()).unwrap().details.unwrap();
        assert!(d.s_cyclic.holds);
        let z8 = make_zn_mul(8).unwrap();
        let d = classify(&z8, &opts()).unwrap().details.unwrap();
        assert!(d.s_commutative.holds);
        assert!(!d.s_cyclic.holds);
        assert_eq!(d.s_cyclic.witness, Some(ElementSet::from([1, 3, 5, 7])));
        let z7 = make_zn_mul(7).unwrap();
        let d = classify(&z7, &opts()).unwrap().details.unwrap();
        assert_eq!(d.lagrange.class, LagrangeClass::NonLagrange);
        assert!(d.is_s_simple);
        assert!(d.is_s_maximal);
    }

    #[test]
    fn sylow_examples() {
        let z16 = make_zn_mul(16).unwrap();
        let d = sylow_analysis(&z16, &opts(), Some(&[2])).unwrap();
        let orders: std::collections::BTreeSet<usize> = d[0].s_p_sylow_subgroups.iter().map(|g| g.len()).collect();
        assert_eq!(orders.into_iter().collect::<Vec<_>>(), vec![2, 4, 8]);
        for want in [vec![1, 15], vec![1, 3, 9, 11], vec![1, 5, 9, 13], vec![1, 3, 5, 7, 9, 11, 13, 15]] {
            assert!(d[0].s_p_sylow_subgroups.contains(&ElementSet::from(want)));
        }
        let z12 = make_zn_mul(12).unwrap();
        let d = sylow_analysis(&z12, &opts(), Some(&[3])).unwrap();
        assert!(d[0].divides_order && d[0].s_p_sylow_subgroups.is_empty());
        assert!(!is_p_sylow_semigroup(&z12, &opts()).unwrap());
        let z23 = make_zn_mul(23).unwrap();
        let d = sylow_analysis(&z23, &opts(), Some(&[2])).unwrap();
        assert!(!d[0].divides_order);
        assert_eq!(d[0].non_p_sylow_subgroups, vec![ElementSet::from([1, 22])]);
    }

    #[test]
    fn cauchy_examples() {
        let t3 = make_full_transformation(3).unwrap();
        let p1 = t3.index_of("[1,3,2]").unwrap();
        let c = cauchy_elements(&t3, &opts()).unwrap();
        let e = c.iter().find(|c| c.element == p1).unwrap();
        assert_eq!((e.order, e.is_cauchy), (2, false));
        for p in [5, 7, 11, 13] {
            let z = make_zn_mul(p).unwrap();
            assert!(cauchy_elements(&z, &opts()).unwrap().iter().all(|c| !c.is_cauchy));
        }
        let m = make_matrix_semigroup(2, 2).unwrap();
        let u = m.index_of("[[1,1],[0,1]]").unwrap();
        let c = cauchy_elements(&m, &opts()).unwrap();
        let e = c.iter().find(|c| c.element == u).unwrap();
        assert_eq!((e.order, e.is_cauchy), (2, true));
    }

    #[test]
    fn hyper_and_simple() {
        for p in [5, 7, 11] {
            assert!(is_s_simple(&make_zn_mul(p).unwrap(), &opts()).unwrap());
        }
        let z16 = make_zn_mul(16).unwrap();
        let hyper = hyper_subsemigroups(&z16, &opts()).unwrap();
        assert!(hyper.contains(&ElementSet::from([0, 1, 3, 5, 7, 9, 11, 13, 15])));
        let t3 = make_full_transformation(3).unwrap();
        let target = t3
            .set_of_labels(&["[1,2,3]", "[1,3,2]", "[2,1,3]", "[2,3,1]", "[3,1,2]", "[3,2,1]", "[1,1,1]", "[2,2,2]", "[3,3,3]"])
            .unwrap();
        assert!(hyper_subsemigroups(&t3, &opts()).unwrap().contains(&target));
    }

    #[test]
    fn s_subsemigroups() {
        let p = IdentityPolicy::AnyIdempotent;
        let z10 = make_zn_mul(10).unwrap();
        assert!(s_subsemigroup_check(&z10, &ElementSet::from([0, 1, 9]), p));
        let z7 = make_zn_mul(7).unwrap();
        assert!(s_subsemigroup_check(&z7, &ElementSet::from([0, 1, 6]), p));
        assert!(!s_subsemigroup_check(&z7, &ElementSet::from([1, 6]), p));
        assert!(!s_subsemigroup_check(&z7, &ElementSet::from([0, 1]), p));
        // A cyclic group of composite order has a proper non-trivial subgroup.
        assert!(s_subsemigroup_check(&z7, &ElementSet::from([1, 2, 3, 4, 5, 6]), p));
        assert!(!s_subsemigroup_check(&z7, &z7.all_elements(), p));
    }
}
