//! Finite semigroups stored as multiplication tables.
//!
//! Elements are indices `0..size`. Every constructor fixes a canonical element
//! order so that all derived output is deterministic.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::transformation::{all_transformations, transformation_index, Transformation};

/// Default cap on the number of elements of a constructed semigroup.
pub const DEFAULT_SIZE_CAP: usize = 16384;
/// Largest degree accepted by [`make_full_transformation`].
pub const MAX_TRANSFORMATION_DEGREE: usize = 5;
/// Environment variable overriding [`DEFAULT_SIZE_CAP`].
pub const SIZE_CAP_ENV: &str = "SSG_MAX_ORDER";

/// The size cap in effect: `SSG_MAX_ORDER` when set to a positive integer,
/// otherwise [`DEFAULT_SIZE_CAP`].
pub fn size_cap() -> usize {
    std::env::var(SIZE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_SIZE_CAP)
}

/// A closed, associative multiplication table over indexed elements.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    name: String,
    size: usize,
    table: Vec<u32>,
    labels: Vec<String>,
    identity: Option<usize>,
    zero: Option<usize>,
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("name", &self.name)
            .field("size", &self.size)
            .field("identity", &self.identity)
            .field("zero", &self.zero)
            .finish_non_exhaustive()
    }
}

impl FiniteSemigroup {
    /// Builds from a table that is known to be closed and associative.
    fn trusted(name: String, size: usize, table: Vec<u32>, labels: Vec<String>) -> Self {
        debug_assert_eq!(table.len(), size * size);
        let mut s = FiniteSemigroup { name, size, table, labels, identity: None, zero: None };
        s.identity = s.scan_identity();
        s.zero = s.scan_zero();
        s
    }

    /// Validates a square table: closure, associativity (exhaustive) and
    /// label uniqueness. Identity and zero are found by scanning.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<u64>], labels: Option<Vec<String>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::Precondition("empty table".into()));
        }
        let mut table = Vec::with_capacity(size * size);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::NotSquare { row: r, len: row.len(), expected: size });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= size as u64 {
                    return Err(Error::Closure { row: r, col: c, value: v, size });
                }
                table.push(v as u32);
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != size {
                    return Err(Error::Labels(format!("{} labels for {size} elements", l.len())));
                }
                let distinct: BTreeSet<&String> = l.iter().collect();
                if distinct.len() != size {
                    return Err(Error::Labels("labels are not pairwise distinct".into()));
                }
                l
            }
            None => (0..size).map(|i| i.to_string()).collect(),
        };
        let s = Self::trusted(name.into(), size, table, labels);
        s.check_associativity()?;
        Ok(s)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[a * self.size..(a + 1) * self.size].iter().map(|&v| v as usize)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size).map(|a| self.row(a).collect()).collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (a + 1..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// `x^k` for `k ≥ 1`.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1, "semigroup powers start at 1");
        let mut acc = x;
        for _ in 1..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Exhaustive O(size³) associativity scan; reports the first violating triple.
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.size;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Err(Error::Associativity(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn scan_identity(&self) -> Option<usize> {
        (0..self.size).find(|&e| (0..self.size).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    fn scan_zero(&self) -> Option<usize> {
        (0..self.size).find(|&z| (0..self.size).all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    /// Element-wise product `{a·b : a ∈ lhs, b ∈ rhs}`.
    pub fn set_product(&self, lhs: &ElementSet, rhs: &ElementSet) -> ElementSet {
        let mut hit = vec![false; self.size];
        for &a in lhs.iter() {
            for &b in rhs.iter() {
                hit[self.mul(a, b)] = true;
            }
        }
        ElementSet::from_mask(&hit)
    }

    pub fn is_closed(&self, set: &ElementSet) -> bool {
        let mut member = vec![false; self.size];
        for &x in set.iter() {
            member[x] = true;
        }
        set.iter().all(|&a| set.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn all_elements(&self) -> ElementSet {
        ElementSet((0..self.size).collect())
    }

    /// Resolves labels to an [`ElementSet`].
    pub fn set_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        let idx = labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::Precondition(format!("no element labelled {:?}", l.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ElementSet::from_iter(idx))
    }

    pub fn render_set(&self, set: &ElementSet) -> String {
        let parts: Vec<&str> = set.iter().map(|&i| self.label(i)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// A sorted set of distinct element indices of some semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementSet(Vec<usize>);

impl ElementSet {
    pub fn from_mask(mask: &[bool]) -> Self {
        ElementSet(mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect())
    }

    pub fn singleton(x: usize) -> Self {
        ElementSet(vec![x])
    }

    /// Checks that every member is below `size`.
    pub fn within(self, size: usize) -> Result<Self> {
        match self.0.iter().find(|&&x| x >= size) {
            Some(&x) => Err(Error::Precondition(format!("element {x} outside 0..{size}"))),
            None => Ok(self),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.0.iter().all(|&x| !other.contains(x))
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.0.iter().chain(other.0.iter()).copied().collect()
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.iter().copied().filter(|&x| other.contains(x)).collect())
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.iter().copied().filter(|&x| !other.contains(x)).collect())
    }

    pub fn with(&self, x: usize) -> ElementSet {
        self.0.iter().copied().chain(std::iter::once(x)).collect()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ElementSet(v)
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl From<Vec<usize>> for ElementSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for ElementSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

fn check_cap(what: &str, size: u128, cap: usize) -> Result<usize> {
    if size > cap as u128 {
        Err(Error::SizeLimit { what: what.to_string(), size, cap })
    } else {
        Ok(size as usize)
    }
}

/// `Z_n` under multiplication mod `n`.
pub fn make_zn_mul(n: usize) -> Result<FiniteSemigroup> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    check_cap(&format!("Z_{n}"), n as u128, size_cap())?;
    let table = (0..n).flat_map(|i| (0..n).map(move |j| ((i * j) % n) as u32)).collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    Ok(FiniteSemigroup::trusted(format!("Z_{n}"), n, table, labels))
}

/// The full transformation semigroup `S(n)`: all self-maps of `{1..n}`,
/// lexicographic by image row, with `f·g` = apply `f` then `g`.
pub fn make_full_transformation(n: usize) -> Result<FiniteSemigroup> {
    if n == 0 || n > MAX_TRANSFORMATION_DEGREE {
        return Err(Error::SizeLimit {
            what: format!("S({n})"),
            size: (n as u128).pow(n as u32),
            cap: MAX_TRANSFORMATION_DEGREE.pow(MAX_TRANSFORMATION_DEGREE as u32),
        });
    }
    let elems: Vec<Transformation> = all_transformations(n).collect();
    let size = elems.len();
    let mut table = Vec::with_capacity(size * size);
    for f in &elems {
        for g in &elems {
            table.push(transformation_index(&f.then(g)) as u32);
        }
    }
    let labels = elems.iter().map(|t| t.to_string()).collect();
    Ok(FiniteSemigroup::trusted(format!("S({n})"), size, table, labels))
}

/// Decodes an element of [`make_full_transformation`]`(n)` back to its map.
pub fn transformation_of(degree: usize, index: usize) -> Transformation {
    let mut images = vec![0; degree];
    let mut code = index;
    for slot in images.iter_mut().rev() {
        *slot = code % degree;
        code /= degree;
    }
    Transformation::from_images(images).expect("decoded images are in range")
}

/// The symmetric group `S_n` as its own Cayley table, permutations in
/// lexicographic order of image rows, same composition convention as `S(n)`.
pub fn make_symmetric_group(n: usize) -> Result<FiniteSemigroup> {
    if n == 0 || n > 6 {
        return Err(Error::SizeLimit { what: format!("S_{n}"), size: (1..=n as u128).product(), cap: 720 });
    }
    let perms: Vec<Transformation> = all_transformations(n).filter(|t| t.is_bijective()).collect();
    let size = perms.len();
    let index_of = |t: &Transformation| perms.binary_search(t).expect("permutations are closed");
    let mut table = Vec::with_capacity(size * size);
    for f in &perms {
        for g in &perms {
            table.push(index_of(&f.then(g)) as u32);
        }
    }
    let labels = perms.iter().map(|t| t.to_string()).collect();
    Ok(FiniteSemigroup::trusted(format!("S_{n}"), size, table, labels))
}

/// The cyclic group `⟨g | g^n = 1⟩`; element `k` is `g^k`.
pub fn make_cyclic_group(n: usize) -> Result<FiniteSemigroup> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    check_cap(&format!("C_{n}"), n as u128, size_cap())?;
    let table = (0..n).flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32)).collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    Ok(FiniteSemigroup::trusted(format!("C_{n}"), n, table, labels))
}

/// All `k×k` matrices over `Z_m`, row-major by entry residues, under
/// matrix multiplication mod `m`.
pub fn make_matrix_semigroup(k: usize, m: usize) -> Result<FiniteSemigroup> {
    make_matrix_semigroup_capped(k, m, size_cap())
}

pub fn make_matrix_semigroup_capped(k: usize, m: usize, cap: usize) -> Result<FiniteSemigroup> {
    if m < 2 {
        return Err(Error::InvalidOrder(m));
    }
    if k == 0 {
        return Err(Error::Precondition("matrix dimension must be at least 1".into()));
    }
    let entries = (k * k) as u32;
    let size = (m as u128).checked_pow(entries).unwrap_or(u128::MAX);
    let size = check_cap(&format!("M_{k}(Z_{m})"), size, cap)?;
    let decode = |mut code: usize| -> Vec<usize> {
        let mut e = vec![0; k * k];
        for slot in e.iter_mut().rev() {
            *slot = code % m;
            code /= m;
        }
        e
    };
    let encode = |e: &[usize]| e.iter().fold(0usize, |acc, &v| acc * m + v);
    let mats: Vec<Vec<usize>> = (0..size).map(decode).collect();
    let mut table = Vec::with_capacity(size * size);
    let mut prod = vec![0; k * k];
    for a in &mats {
        for b in &mats {
            for i in 0..k {
                for j in 0..k {
                    prod[i * k + j] = (0..k).map(|t| a[i * k + t] * b[t * k + j]).sum::<usize>() % m;
                }
            }
            table.push(encode(&prod) as u32);
        }
    }
    let labels = mats.iter().map(|e| render_matrix(k, e)).collect();
    Ok(FiniteSemigroup::trusted(format!("M_{k}(Z_{m})"), size, table, labels))
}

fn render_matrix(k: usize, entries: &[usize]) -> String {
    let rows: Vec<String> = entries
        .chunks(k)
        .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

/// External direct product with componentwise multiplication; pair `(a, b)`
/// has index `a * |S2| + b`.
pub fn direct_product(s1: &FiniteSemigroup, s2: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    direct_product_capped(s1, s2, size_cap())
}

pub fn direct_product_capped(s1: &FiniteSemigroup, s2: &FiniteSemigroup, cap: usize) -> Result<FiniteSemigroup> {
    let name = format!("{} x {}", s1.name(), s2.name());
    let size = check_cap(&name, s1.size() as u128 * s2.size() as u128, cap)?;
    let n2 = s2.size();
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        let (a1, a2) = (x / n2, x % n2);
        for y in 0..size {
            let (b1, b2) = (y / n2, y % n2);
            table.push((s1.mul(a1, b1) * n2 + s2.mul(a2, b2)) as u32);
        }
    }
    let labels = (0..size).map(|x| format!("({},{})", s1.label(x / n2), s2.label(x % n2))).collect();
    Ok(FiniteSemigroup::trusted(name, size, table, labels))
}

/// Smallest product-closed superset of `seed`, by breadth-first expansion.
pub fn closure(s: &FiniteSemigroup, seed: &ElementSet) -> ElementSet {
    let mut member = vec![false; s.size()];
    let mut found: Vec<usize> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &x in seed.iter() {
        if !std::mem::replace(&mut member[x], true) {
            found.push(x);
            queue.push_back(x);
        }
    }
    // Each newly found element is multiplied against everything found so far,
    // on both sides.
    while let Some(x) = queue.pop_front() {
        let mut i = 0;
        while i < found.len() {
            let y = found[i];
            for p in [s.mul(x, y), s.mul(y, x)] {
                if !std::mem::replace(&mut member[p], true) {
                    found.push(p);
                    queue.push_back(p);
                }
            }
            i += 1;
        }
    }
    ElementSet::from_mask(&member)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zn_basics() {
        let z12 = make_zn_mul(12).unwrap();
        assert_eq!(z12.size(), 12);
        assert_eq!(z12.identity(), Some(1));
        assert_eq!(z12.zero(), Some(0));
        assert_eq!(make_zn_mul(2).unwrap().rows(), vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(make_zn_mul(1).unwrap_err(), Error::InvalidOrder(1));
        let z8 = make_zn_mul(8).unwrap();
        assert_eq!(z8.mul(7, 7), 1);
        assert!(z8.is_closed(&ElementSet::from([1, 7])));
    }

    #[test]
    fn transformation_sizes() {
        assert_eq!(make_full_transformation(3).unwrap().size(), 27);
        let s2 = make_full_transformation(2).unwrap();
        assert_eq!(s2.size(), 4);
        assert_eq!(s2.labels(), &["[1,1]", "[1,2]", "[2,1]", "[2,2]"]);
        assert_eq!(s2.identity(), Some(1));
        assert_eq!(s2.zero(), None);
        let s1 = make_full_transformation(1).unwrap();
        assert_eq!(s1.size(), 1);
        assert_eq!(s1.identity(), Some(0));
        assert!(matches!(make_full_transformation(6), Err(Error::SizeLimit { .. })));
        assert!(matches!(make_full_transformation(0), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn matrix_sizes() {
        let m22 = make_matrix_semigroup(2, 2).unwrap();
        assert_eq!(m22.size(), 16);
        assert_eq!(m22.label(m22.identity().unwrap()), "[[1,0],[0,1]]");
        assert_eq!(m22.label(m22.zero().unwrap()), "[[0,0],[0,0]]");
        assert_eq!(make_matrix_semigroup(2, 3).unwrap().size(), 81);
        let m1 = make_matrix_semigroup(1, 9).unwrap();
        assert_eq!(m1.rows(), make_zn_mul(9).unwrap().rows());
        assert!(matches!(make_matrix_semigroup_capped(2, 3, 80), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn products() {
        let z7 = make_zn_mul(7).unwrap();
        let z9 = make_zn_mul(9).unwrap();
        let p = direct_product(&z7, &z9).unwrap();
        assert_eq!(p.size(), 63);
        assert_eq!(p.label(p.identity().unwrap()), "(1,1)");
        let z2 = make_zn_mul(2).unwrap();
        assert_eq!(direct_product(&z2, &z2).unwrap().size(), 4);
        let t3 = make_full_transformation(3).unwrap();
        let z6 = make_zn_mul(6).unwrap();
        let big = direct_product(&t3, &z6).unwrap();
        assert_eq!(big.size(), 162);
        assert_eq!(big.zero(), None);
        assert!(big.identity().is_some());
        assert!(matches!(direct_product_capped(&t3, &z6, 100), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn from_table_validation() {
        let z12 = make_zn_mul(12).unwrap();
        let units = [1usize, 5, 7, 11];
        let rows: Vec<Vec<u64>> = units
            .iter()
            .map(|&a| units.iter().map(|&b| units.iter().position(|&u| u == z12.mul(a, b)).unwrap() as u64).collect())
            .collect();
        let g = FiniteSemigroup::from_table("U12", &rows, Some(units.iter().map(|u| u.to_string()).collect())).unwrap();
        assert_eq!(g.identity(), Some(0));

        // [[0,1],[1,0]] is the cyclic group of order 2, so it is accepted.
        let c2 = FiniteSemigroup::from_table("c2", &[vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(c2.identity(), Some(0));
        // (0·0)·1 = 1·1 = 0 but 0·(0·1) = 0·0 = 1.
        let bad = FiniteSemigroup::from_table("bad", &[vec![1, 0], vec![0, 0]], None);
        assert_eq!(bad.unwrap_err(), Error::Associativity(0, 0, 1));

        let triv = FiniteSemigroup::from_table("triv", &[vec![0]], None).unwrap();
        assert_eq!(triv.identity(), Some(0));
        assert_eq!(triv.zero(), Some(0));

        assert!(matches!(
            FiniteSemigroup::from_table("x", &[vec![0, 2], vec![0, 0]], None),
            Err(Error::Closure { row: 0, col: 1, value: 2, .. })
        ));
        assert!(matches!(
            FiniteSemigroup::from_table("x", &[vec![0, 0], vec![0]], None),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(
            FiniteSemigroup::from_table("x", &[vec![0, 0], vec![0, 0]], Some(vec!["a".into(), "a".into()])),
            Err(Error::Labels(_))
        ));
    }

    #[test]
    fn closure_examples() {
        let z12 = make_zn_mul(12).unwrap();
        assert_eq!(closure(&z12, &ElementSet::from([5])), ElementSet::from([1, 5]));
        let z10 = make_zn_mul(10).unwrap();
        assert_eq!(closure(&z10, &ElementSet::from([2])), ElementSet::from([2, 4, 6, 8]));
        assert_eq!(closure(&z10, &z10.all_elements()), z10.all_elements());
    }
}
