use std::fmt;

use crate::error::{Error, Result};

/// A self-map of the points `1..=n`.
///
/// Stored 0-based: `images[i]` is the image of point `i + 1`, minus one.
/// Rendering and the 1-based constructors use the usual 1-based points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<usize>,
}

/// Serialized as its 1-based image row.
impl serde::Serialize for Transformation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.images.iter().map(|&v| v + 1))
    }
}

impl Transformation {
    pub fn identity(degree: usize) -> Self {
        Transformation { images: (0..degree).collect() }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if let Some(&bad) = images.iter().find(|&&v| v >= n) {
            return Err(Error::Precondition(format!("image {} out of range for degree {n}", bad + 1)));
        }
        Ok(Transformation { images })
    }

    /// From 1-based images, as written in two-line notation.
    pub fn from_row(row: &[usize]) -> Result<Self> {
        let n = row.len();
        let mut images = Vec::with_capacity(n);
        for &v in row {
            if v == 0 || v > n {
                return Err(Error::Precondition(format!("image {v} out of range 1..={n}")));
            }
            images.push(v - 1);
        }
        Ok(Transformation { images })
    }

    /// Builds a permutation from 1-based cycles, e.g. `[[1, 2, 3], [4, 7]]`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::Precondition(format!("point {p} out of range 1..={degree}")));
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::Precondition(format!("point {p} appears twice in cycle notation")));
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Ok(Transformation { images })
    }

    /// Parses cycle notation such as `(1,2,3)(4,7)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Precondition(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Precondition(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|e| Error::Precondition(format!("{s:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of 0-based point `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based image row.
    pub fn row(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    /// `self` first, then `other`: the product `self · other` under the
    /// right-action convention used throughout the crate.
    pub fn then(&self, other: &Transformation) -> Transformation {
        debug_assert_eq!(self.degree(), other.degree());
        Transformation { images: self.images.iter().map(|&p| other.images[p]).collect() }
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.degree()];
        self.images.iter().all(|&v| !std::mem::replace(&mut hit[v], true))
    }

    pub fn inverse(&self) -> Option<Transformation> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.degree()];
        for (p, &v) in self.images.iter().enumerate() {
            inv[v] = p;
        }
        Some(Transformation { images: inv })
    }

    pub fn rank(&self) -> usize {
        let mut hit = vec![false; self.degree()];
        self.images.iter().filter(|&&v| !std::mem::replace(&mut hit[v], true)).count()
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

/// All transformations of degree `n` in lexicographic order of image rows.
pub fn all_transformations(n: usize) -> impl Iterator<Item = Transformation> {
    let total = (n as u32).checked_pow(n as u32).unwrap_or(0) as usize;
    let total = if n == 0 { 0 } else { total };
    (0..total).map(move |mut code| {
        let mut images = vec![0; n];
        for slot in images.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        Transformation { images }
    })
}

/// Index of `t` in the order produced by [`all_transformations`].
pub fn transformation_index(t: &Transformation) -> usize {
    let n = t.degree();
    t.images.iter().fold(0, |acc, &v| acc * n + v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_applies_left_factor_first() {
        // p1 = [1,3,2], p2 = [3,2,1]; p1·p2 = p5 = [3,1,2] in the S3 table.
        let p1 = Transformation::from_row(&[1, 3, 2]).unwrap();
        let p2 = Transformation::from_row(&[3, 2, 1]).unwrap();
        assert_eq!(p1.then(&p2).row(), vec![3, 1, 2]);
    }

    #[test]
    fn cycles_round_trip_through_parser() {
        let t = Transformation::parse_cycles(7, "(1,2,3)(4,7)").unwrap();
        assert_eq!(t.row(), vec![2, 3, 1, 7, 5, 6, 4]);
        assert_eq!(Transformation::parse_cycles(3, "()").unwrap(), Transformation::identity(3));
        assert!(Transformation::parse_cycles(3, "(1,2)(2,3)").is_err());
        assert!(Transformation::parse_cycles(3, "(1,4)").is_err());
    }

    #[test]
    fn enumeration_is_lexicographic_and_indexed() {
        let all: Vec<_> = all_transformations(3).collect();
        assert_eq!(all.len(), 27);
        assert_eq!(all[0].row(), vec![1, 1, 1]);
        assert_eq!(all[26].row(), vec![3, 3, 3]);
        for (i, t) in all.iter().enumerate() {
            assert_eq!(transformation_index(t), i);
        }
        assert!(all.windows(2).all(|w| w[0].row() < w[1].row()));
    }

    #[test]
    fn inverse_and_rank() {
        let t = Transformation::from_row(&[2, 3, 1]).unwrap();
        assert_eq!(t.then(&t.inverse().unwrap()), Transformation::identity(3));
        let c = Transformation::from_row(&[1, 1, 3]).unwrap();
        assert!(c.inverse().is_none());
        assert_eq!(c.rank(), 2);
    }
}
