//! Internal and strong internal direct products, Smarandache direct
//! products, S-semigroup homomorphisms and the Cayley embedding.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classify::s_subsemigroup_check;
use crate::error::{Error, Result};
use crate::group::{regular_representation, representation_is_faithful};
use crate::semigroup::{closure, direct_product, ElementSet, FiniteSemigroup, MAX_TRANSFORMATION_DEGREE};
use crate::subgroups::{all_subgroups, maximal_subgroup_at, maximal_subgroups, EmbeddedGroup, IdentityPolicy, SubgroupOptions};
use crate::transformation::{transformation_index, Transformation};

/// `A₁·A₂·…·Aₙ`, associated to the left.
pub fn product_of_sets(s: &FiniteSemigroup, factors: &[ElementSet]) -> Option<ElementSet> {
    let (first, rest) = factors.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, f| s.set_product(&acc, f)))
}

/// The product of the factors is the whole carrier.
pub fn internal_product_check(s: &FiniteSemigroup, factors: &[ElementSet]) -> bool {
    if factors.iter().any(|f| f.is_empty() || f.iter().any(|&x| x >= s.size())) {
        return false;
    }
    product_of_sets(s, factors).is_some_and(|p| p.len() == s.size())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductKind {
    Internal,
    StrongInternal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductDecomposition {
    pub factors: Vec<ElementSet>,
    pub kind: ProductKind,
    pub b_factor: Option<ElementSet>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongProductVerdict {
    pub holds: bool,
    /// `B` is a proper closed subset containing a group of order ≥ 2 other
    /// than itself.
    pub b_is_s_subsemigroup: bool,
    /// `B` was accepted only because the relaxed reading was requested.
    pub b_accepted_relaxed: bool,
    pub factors_maximal: bool,
    pub covers: bool,
}

/// `S = B·A₁·…·Aₙ` with every `Aᵢ` a maximal subgroup and `B` an
/// S-subsemigroup. With `relaxed`, any closed `B` is accepted in place of an
/// S-subsemigroup.
pub fn strong_internal_product_check(
    s: &FiniteSemigroup,
    b: &ElementSet,
    maximal_factors: &[ElementSet],
    policy: IdentityPolicy,
    relaxed: bool,
) -> Result<StrongProductVerdict> {
    let strict = s_subsemigroup_check(s, b, policy);
    let b_accepted_relaxed = !strict && relaxed && !b.is_empty() && s.is_closed(b);
    let maximal: Vec<ElementSet> = match maximal_subgroups(s, &SubgroupOptions::with_policy(policy)) {
        Ok(m) => m.into_iter().map(|g| g.members().clone()).collect(),
        Err(Error::NoIdentity) => Vec::new(),
        Err(e) => return Err(e),
    };
    let factors_maximal = !maximal_factors.is_empty() && maximal_factors.iter().all(|f| maximal.contains(f));
    let mut all = vec![b.clone()];
    all.extend(maximal_factors.iter().cloned());
    let covers = internal_product_check(s, &all);
    Ok(StrongProductVerdict {
        holds: (strict || b_accepted_relaxed) && factors_maximal && covers,
        b_is_s_subsemigroup: strict,
        b_accepted_relaxed,
        factors_maximal,
        covers,
    })
}

/// `B = (S ∖ A) ∪ {1}` with `A` the maximal subgroup at the identity; when
/// that `B` is not an S-subsemigroup, `closure(B ∪ K)` is tried for the
/// non-trivial subgroups `K` of `A`, smallest first.
pub fn find_strong_decomposition(s: &FiniteSemigroup, policy: IdentityPolicy) -> Result<Option<ProductDecomposition>> {
    let Some(one) = s.identity() else { return Ok(None) };
    let a = maximal_subgroup_at(s, one)?;
    let factors = vec![a.members().clone()];
    let base = s.all_elements().difference(a.members()).with(one);
    let mut candidates = vec![base.clone()];
    let inner = all_subgroups(s, &SubgroupOptions::with_policy(IdentityPolicy::AnyIdempotent))?;
    for k in inner.iter().filter(|k| k.identity() == one && k.members().is_subset(a.members())) {
        let c = closure(s, &base.union(k.members()));
        if !candidates.contains(&c) {
            candidates.push(c);
        }
    }
    for b in candidates {
        if b.len() >= s.size() {
            continue;
        }
        if strong_internal_product_check(s, &b, &factors, policy, false)?.holds {
            return Ok(Some(ProductDecomposition {
                factors,
                kind: ProductKind::StrongInternal,
                b_factor: Some(b),
                verified: true,
            }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DirectProductVerdict {
    pub holds: bool,
    pub product_order: usize,
    /// Maximal subgroups of the product.
    pub maximal_count: usize,
    /// Positions of factors without a unique maximal subgroup.
    pub non_unique_factors: Vec<usize>,
}

/// The external product has exactly one maximal subgroup, and it is the
/// product of the factors' unique maximal subgroups.
pub fn s_direct_product_check(factors: &[FiniteSemigroup], policy: IdentityPolicy) -> Result<DirectProductVerdict> {
    let (first, rest) =
        factors.split_first().ok_or_else(|| Error::Precondition("no factor semigroups".into()))?;
    let opts = SubgroupOptions::with_policy(policy);
    let mut product = first.clone();
    for f in rest {
        product = direct_product(&product, f)?;
    }
    let mut non_unique_factors = Vec::new();
    let mut expected: Option<ElementSet> = None;
    let mut width = 1usize;
    for (i, f) in factors.iter().enumerate() {
        let m = match maximal_subgroups(f, &opts) {
            Ok(m) => m,
            Err(Error::NoIdentity) => Vec::new(),
            Err(e) => return Err(e),
        };
        if m.len() != 1 {
            non_unique_factors.push(i);
            expected = None;
        } else if i == 0 || expected.is_some() {
            let g = m[0].members();
            expected = Some(match expected {
                None => g.clone(),
                Some(acc) => acc.iter().flat_map(|&p| g.iter().map(move |&q| p * f.size() + q)).collect(),
            });
        }
        width *= f.size();
    }
    debug_assert_eq!(width, product.size());
    let maximal = match maximal_subgroups(&product, &opts) {
        Ok(m) => m,
        Err(Error::NoIdentity) => Vec::new(),
        Err(e) => return Err(e),
    };
    let holds = non_unique_factors.is_empty()
        && maximal.len() == 1
        && expected.as_ref().is_some_and(|e| maximal[0].members() == e);
    Ok(DirectProductVerdict { holds, product_order: product.size(), maximal_count: maximal.len(), non_unique_factors })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomomorphismVerdict {
    pub homomorphism: bool,
    pub isomorphism: bool,
}

/// `φ(A) ⊆ A'` and `φ(xy) = φ(x)φ(y)` on `A`; the isomorphism variant also
/// asks that `φ` restrict to a bijection `A → A'`.
pub fn s_homomorphism_check(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    map: &[usize],
    a: &EmbeddedGroup<'_>,
    a2: &EmbeddedGroup<'_>,
) -> Result<HomomorphismVerdict> {
    if map.len() != s.size() {
        return Err(Error::Precondition(format!("map has {} entries, expected {}", map.len(), s.size())));
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= t.size()) {
        return Err(Error::Membership(bad));
    }
    let image: ElementSet = a.iter().map(|&x| map[x]).collect();
    let homomorphism = image.is_subset(a2.members())
        && a.iter().all(|&x| a.iter().all(|&y| map[s.mul(x, y)] == t.mul(map[x], map[y])));
    let isomorphism = homomorphism && image.len() == a.order() && image.len() == a2.order();
    Ok(HomomorphismVerdict { homomorphism, isomorphism })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CayleyEmbedding {
    /// Degree of the full transformation semigroup receiving `A`.
    pub degree: usize,
    pub map: BTreeMap<usize, Transformation>,
    /// Index of each image in `make_full_transformation(degree)`, when that
    /// semigroup is within the degree cap.
    pub indices: Option<BTreeMap<usize, usize>>,
    pub verified: bool,
}

/// `A` into `S(|A|)` by right translation.
pub fn cayley_s_embedding(a: &EmbeddedGroup<'_>) -> CayleyEmbedding {
    let map = regular_representation(a);
    let verified = representation_is_faithful(a, &map);
    let indices = (a.order() <= MAX_TRANSFORMATION_DEGREE)
        .then(|| map.iter().map(|(&x, t)| (x, transformation_index(t))).collect());
    CayleyEmbedding { degree: a.order(), map, indices, verified }
}
