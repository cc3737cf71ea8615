//! Smarandache inverse pairs and Smarandache conjugates inside a group.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::conjugacy_analysis;
use crate::subgroups::EmbeddedGroup;

/// Which orientation equations hold for the links `x → y` via `a` and
/// `y → x` via `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Orientation {
    pub xa_is_y: bool,
    pub ax_is_y: bool,
    pub yb_is_x: bool,
    pub by_is_x: bool,
}

/// `x·y = 1`, `a·b = 1`, `a, b ∉ {1, x, y}`, `xa = y` or `ax = y`, and
/// `yb = x` or `by = x`. `(a, b)` is the related pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SInversePair {
    pub x: usize,
    pub y: usize,
    pub a: usize,
    pub b: usize,
    pub orientation: Orientation,
}

impl SInversePair {
    /// The same realization read from the `y` side.
    pub fn swapped(&self) -> SInversePair {
        let o = self.orientation;
        SInversePair {
            x: self.y,
            y: self.x,
            a: self.b,
            b: self.a,
            orientation: Orientation { xa_is_y: o.yb_is_x, ax_is_y: o.by_is_x, yb_is_x: o.xa_is_y, by_is_x: o.ax_is_y },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SInverseClass {
    InverseGroup,
    InverseFree,
    Mixed,
}

fn orientation(g: &EmbeddedGroup<'_>, x: usize, y: usize, a: usize, b: usize) -> Orientation {
    Orientation {
        xa_is_y: g.mul(x, a) == y,
        ax_is_y: g.mul(a, x) == y,
        yb_is_x: g.mul(y, b) == x,
        by_is_x: g.mul(b, y) == x,
    }
}

fn realization(g: &EmbeddedGroup<'_>, x: usize, y: usize, a: usize, b: usize) -> Option<SInversePair> {
    let e = g.identity();
    if g.mul(x, y) != e || g.mul(a, b) != e || [a, b].iter().any(|&t| t == e || t == x || t == y) {
        return None;
    }
    let o = orientation(g, x, y, a, b);
    ((o.xa_is_y || o.ax_is_y) && (o.yb_is_x || o.by_is_x)).then_some(SInversePair { x, y, a, b, orientation: o })
}

/// Every realization with `x` as the first member.
fn realizations_of(g: &EmbeddedGroup<'_>, x: usize) -> Vec<SInversePair> {
    let Some(y) = g.inverse(x) else { return Vec::new() };
    let mut out = Vec::new();
    for &a in g.iter() {
        if let Some(b) = g.inverse(a) {
            out.extend(realization(g, x, y, a, b));
        }
    }
    out
}

/// All realizations, one record per unordered `{x, y}` and related pair,
/// stored with `x ≤ y`.
pub fn s_inverse_pairs(g: &EmbeddedGroup<'_>) -> Vec<SInversePair> {
    let mut out: Vec<SInversePair> =
        g.iter().filter(|&&x| g.inverse(x).is_some_and(|y| x <= y)).flat_map(|&x| realizations_of(g, x)).collect();
    out.sort_by_key(|p| (p.x, p.y, p.a, p.b));
    out
}

pub fn has_s_inverse(g: &EmbeddedGroup<'_>, x: usize) -> Result<bool> {
    if !g.contains(x) {
        return Err(Error::Membership(x));
    }
    if x == g.identity() {
        return Err(Error::Precondition("the identity is excluded from Smarandache inverses".into()));
    }
    Ok(!realizations_of(g, x).is_empty())
}

pub fn classify_s_inverse(g: &EmbeddedGroup<'_>) -> Result<SInverseClass> {
    if g.order() < 2 {
        return Err(Error::Precondition("the trivial group has no non-identity elements".into()));
    }
    let mut yes = 0;
    let mut no = 0;
    for &x in g.iter().filter(|&&x| x != g.identity()) {
        if has_s_inverse(g, x)? {
            yes += 1;
        } else {
            no += 1;
        }
    }
    Ok(match (yes, no) {
        (_, 0) => SInverseClass::InverseGroup,
        (0, _) => SInverseClass::InverseFree,
        _ => SInverseClass::Mixed,
    })
}

fn require_valid(g: &EmbeddedGroup<'_>, p: &SInversePair) -> Result<()> {
    if [p.x, p.y, p.a, p.b].iter().any(|&t| !g.contains(t)) || realization(g, p.x, p.y, p.a, p.b).is_none() {
        return Err(Error::Precondition(format!(
            "({}, {}) with related pair ({}, {}) is not a Smarandache inverse pair",
            p.x, p.y, p.a, p.b
        )));
    }
    Ok(())
}

fn same_pair(p: (usize, usize), q: (usize, usize)) -> bool {
    p == q || p == (q.1, q.0)
}

/// `(a, b)` is itself an S-inverse pair whose related pair is `{x, y}`.
pub fn is_self_inversed_pair(g: &EmbeddedGroup<'_>, pair: &SInversePair) -> Result<bool> {
    require_valid(g, pair)?;
    Ok(realizations_of(g, pair.a).iter().any(|r| r.y == pair.b && same_pair((r.a, r.b), (pair.x, pair.y))))
}

/// `(a, b)` is itself an S-inverse pair, with any related pair.
pub fn co_inverse_check(g: &EmbeddedGroup<'_>, pair: &SInversePair) -> Result<bool> {
    require_valid(g, pair)?;
    Ok(realizations_of(g, pair.a).iter().any(|r| r.y == pair.b))
}

/// `x = a·y·a⁻¹` with `a` conjugate to both `x` and `y`. `reflexive` marks
/// `y = x`, admitted only for `a ≠ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SConjugateWitness {
    pub x: usize,
    pub y: usize,
    pub a: usize,
    pub reflexive: bool,
}

/// Witnesses with `y ≠ x` first, then the reflexive ones.
pub fn s_conjugates(g: &EmbeddedGroup<'_>, x: usize) -> Result<Vec<SConjugateWitness>> {
    if !g.contains(x) {
        return Err(Error::Membership(x));
    }
    let report = conjugacy_analysis(g);
    let class = report.class_of(x).expect("every member has a class").clone();
    let mut proper = Vec::new();
    let mut reflexive = Vec::new();
    // a ~ x and a ~ y force a, y into the class of x.
    for &a in class.iter() {
        let a_inv = g.inverse(a).expect("member");
        for &y in class.iter() {
            if g.mul(g.mul(a, y), a_inv) != x {
                continue;
            }
            if y != x {
                proper.push(SConjugateWitness { x, y, a, reflexive: false });
            } else if a != g.identity() {
                reflexive.push(SConjugateWitness { x, y, a, reflexive: true });
            }
        }
    }
    proper.sort_by_key(|w| (w.y, w.a));
    reflexive.sort_by_key(|w| w.a);
    proper.extend(reflexive);
    Ok(proper)
}

/// Some witness with `y ≠ x`.
pub fn has_s_conjugate(g: &EmbeddedGroup<'_>, x: usize) -> Result<bool> {
    Ok(s_conjugates(g, x)?.iter().any(|w| !w.reflexive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conjugate, element_order};
    use crate::semigroup::{make_cyclic_group, make_symmetric_group, make_zn_mul, ElementSet};
    use crate::subgroups::subgroup_check;

    #[test]
    fn z5_units() {
        let z5 = make_zn_mul(5).unwrap();
        let g = subgroup_check(&z5, &ElementSet::from([1, 2, 3, 4])).unwrap();
        let pairs = s_inverse_pairs(&g);
        assert_eq!(pairs.iter().map(|p| (p.x, p.y, p.a, p.b)).collect::<Vec<_>>(), vec![(2, 3, 4, 4)]);
        assert!(!co_inverse_check(&g, &pairs[0]).unwrap());
        assert!(!has_s_inverse(&g, 4).unwrap());
        assert!(has_s_inverse(&g, 1).is_err());
    }

    #[test]
    fn cyclic_groups() {
        let c6 = make_cyclic_group(6).unwrap();
        let g = EmbeddedGroup::whole(&c6).unwrap();
        let pairs = s_inverse_pairs(&g);
        assert!(pairs.iter().all(|p| p.x != 3 && p.y != 3));
        let p = pairs.iter().find(|p| (p.x, p.y) == (1, 5)).unwrap();
        assert!(same_pair((p.a, p.b), (2, 4)));
        assert!(!is_self_inversed_pair(&g, p).unwrap());
        assert_eq!(classify_s_inverse(&g).unwrap(), SInverseClass::Mixed);

        for n in [5, 7, 11, 13] {
            let c = make_cyclic_group(n).unwrap();
            assert_eq!(classify_s_inverse(&EmbeddedGroup::whole(&c).unwrap()).unwrap(), SInverseClass::InverseGroup);
        }

        let c25 = make_cyclic_group(25).unwrap();
        let g = EmbeddedGroup::whole(&c25).unwrap();
        let p = s_inverse_pairs(&g).into_iter().find(|p| (p.x, p.y) == (5, 20)).unwrap();
        assert!(same_pair((p.a, p.b), (10, 15)));
        assert!(is_self_inversed_pair(&g, &p).unwrap());
    }

    #[test]
    fn orders_and_symmetry() {
        for n in 2..=12 {
            let c = make_cyclic_group(n).unwrap();
            let g = EmbeddedGroup::whole(&c).unwrap();
            for x in 1..n {
                let r = element_order(&g, x).unwrap();
                assert_eq!(has_s_inverse(&g, x).unwrap(), r >= 4, "C_{n}, g^{x}");
            }
            for p in s_inverse_pairs(&g) {
                let q = p.swapped();
                assert!(realization(&g, q.x, q.y, q.a, q.b).is_some());
            }
        }
    }

    #[test]
    fn symmetric_groups() {
        let s3 = make_symmetric_group(3).unwrap();
        let g = EmbeddedGroup::whole(&s3).unwrap();
        assert_eq!(classify_s_inverse(&g).unwrap(), SInverseClass::InverseFree);
        let s4 = make_symmetric_group(4).unwrap();
        let g4 = EmbeddedGroup::whole(&s4).unwrap();
        assert_eq!(classify_s_inverse(&g4).unwrap(), SInverseClass::Mixed);
        let four = s4.index_of("[2,3,4,1]").unwrap();
        assert!(has_s_inverse(&g4, four).unwrap());
        assert_eq!(g4.inverse(four), Some(s4.pow(four, 3)));

        let idx = |l: &str| s3.index_of(l).unwrap();
        let (p1, p2, p3, p4, p5) = (idx("[1,3,2]"), idx("[3,2,1]"), idx("[2,1,3]"), idx("[2,3,1]"), idx("[3,1,2]"));
        let w = s_conjugates(&g, p1).unwrap();
        assert!(w.contains(&SConjugateWitness { x: p1, y: p3, a: p2, reflexive: false }));
        assert!(w.iter().all(|w| conjugate(&g, w.a, w.y) == p1));
        assert!(!has_s_conjugate(&g, p4).unwrap());
        let w = s_conjugates(&g, p4).unwrap();
        assert_eq!(
            w,
            vec![
                SConjugateWitness { x: p4, y: p4, a: p4.min(p5), reflexive: true },
                SConjugateWitness { x: p4, y: p4, a: p4.max(p5), reflexive: true },
            ]
        );
    }

    #[test]
    fn abelian_groups_have_no_proper_conjugates() {
        let c8 = make_cyclic_group(8).unwrap();
        let g = EmbeddedGroup::whole(&c8).unwrap();
        assert!((0..8).all(|x| !has_s_conjugate(&g, x).unwrap()));
    }
}
