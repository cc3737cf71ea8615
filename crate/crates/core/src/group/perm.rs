use serde::Serialize;

use crate::error::{Error, Result};
use crate::transformation::Transformation;

/// Disjoint cycles (1-based points, each rotated to start at its minimum and
/// sorted by that minimum) plus the fixed points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
    pub fixed_points: Vec<usize>,
}

impl CycleDecomposition {
    /// Sorted cycle lengths, fixed points counted as 1s.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles.iter().map(Vec::len).chain(self.fixed_points.iter().map(|_| 1)).collect();
        t.sort_unstable();
        t
    }
}

impl std::fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for c in &self.cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

fn require_bijective(t: &Transformation) -> Result<()> {
    if t.is_bijective() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{t} is not a permutation")))
    }
}

pub fn cycle_decomposition(t: &Transformation) -> Result<CycleDecomposition> {
    require_bijective(t)?;
    let n = t.degree();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    let mut fixed_points = Vec::new();
    // Scanning points in increasing order starts every cycle at its minimum.
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            cycle.push(p + 1);
            p = t.apply(p);
        }
        if cycle.len() == 1 {
            fixed_points.push(start + 1);
        } else {
            cycles.push(cycle);
        }
    }
    Ok(CycleDecomposition { cycles, fixed_points })
}

/// Rewrites the cycle form of `x` with every point `p` replaced by `θ(p)`.
pub fn conjugate_by_replacement(x: &Transformation, theta: &Transformation) -> Result<Transformation> {
    if x.degree() != theta.degree() {
        return Err(Error::Precondition("permutations of different degree".into()));
    }
    require_bijective(theta)?;
    let d = cycle_decomposition(x)?;
    let renamed: Vec<Vec<usize>> =
        d.cycles.iter().map(|c| c.iter().map(|&p| theta.apply(p - 1) + 1).collect()).collect();
    Transformation::from_cycles(x.degree(), &renamed)
}

/// `θ⁻¹·x·θ` as a product of maps (left factor applied first).
pub fn conjugate_direct(x: &Transformation, theta: &Transformation) -> Result<Transformation> {
    require_bijective(x)?;
    let inv = theta.inverse().ok_or_else(|| Error::Precondition(format!("{theta} is not a permutation")))?;
    Ok(inv.then(x).then(theta))
}

/// `θ` with `θ⁻¹xθ = y`, aligning the cycles of `x` and `y` as written: the
/// i-th cycle of `x` maps pointwise onto the i-th cycle of `y`. Points not
/// mentioned are paired in increasing order.
pub fn conjugator_from_cycles(degree: usize, x_cycles: &[Vec<usize>], y_cycles: &[Vec<usize>]) -> Result<Transformation> {
    if x_cycles.len() != y_cycles.len() || x_cycles.iter().zip(y_cycles).any(|(a, b)| a.len() != b.len()) {
        return Err(Error::Precondition("cycle shapes differ".into()));
    }
    let mut images = vec![usize::MAX; degree];
    let mut used = vec![false; degree];
    for (a, b) in x_cycles.iter().zip(y_cycles) {
        for (&p, &q) in a.iter().zip(b) {
            if p == 0 || p > degree || q == 0 || q > degree {
                return Err(Error::Precondition(format!("point out of range 1..={degree}")));
            }
            if images[p - 1] != usize::MAX || std::mem::replace(&mut used[q - 1], true) {
                return Err(Error::Precondition("a point appears twice".into()));
            }
            images[p - 1] = q - 1;
        }
    }
    let mut free = (0..degree).filter(|&q| !used[q]);
    for slot in images.iter_mut().filter(|v| **v == usize::MAX) {
        *slot = free.next().expect("as many free targets as free sources");
    }
    Transformation::from_images(images)
}

/// Some `θ` with `θ⁻¹xθ = y`, or `None` when the cycle types differ.
pub fn find_conjugator(x: &Transformation, y: &Transformation) -> Option<Transformation> {
    if x.degree() != y.degree() {
        return None;
    }
    let dx = cycle_decomposition(x).ok()?;
    let dy = cycle_decomposition(y).ok()?;
    if dx.cycle_type() != dy.cycle_type() {
        return None;
    }
    let by_length = |d: &CycleDecomposition| {
        let mut all: Vec<Vec<usize>> = d.cycles.clone();
        all.extend(d.fixed_points.iter().map(|&p| vec![p]));
        all.sort_by_key(Vec::len);
        all
    };
    conjugator_from_cycles(x.degree(), &by_length(&dx), &by_length(&dy)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, s: &str) -> Transformation {
        Transformation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn decompositions() {
        let d = cycle_decomposition(&perm(7, "(1,2,3)(4,7)")).unwrap();
        assert_eq!(d.cycles, vec![vec![1, 2, 3], vec![4, 7]]);
        assert_eq!(d.fixed_points, vec![5, 6]);
        assert_eq!(d.cycle_type(), vec![1, 1, 2, 3]);
        let id = cycle_decomposition(&Transformation::identity(4)).unwrap();
        assert!(id.cycles.is_empty());
        assert_eq!(id.fixed_points, vec![1, 2, 3, 4]);
        let four = Transformation::from_row(&[2, 3, 4, 1]).unwrap();
        assert_eq!(cycle_decomposition(&four).unwrap().cycles, vec![vec![1, 2, 3, 4]]);
        assert!(cycle_decomposition(&Transformation::from_row(&[1, 1]).unwrap()).is_err());
        // Rotation to the minimum.
        assert_eq!(cycle_decomposition(&perm(7, "(5,6,4)(7,3,1)")).unwrap().to_string(), "(1,7,3)(4,5,6)");
    }

    #[test]
    fn replacement_examples() {
        let theta = perm(7, "(1,2,3)(4,7)");
        let x = perm(7, "(5,6,7)(3,4,2)");
        let y = conjugate_by_replacement(&x, &theta).unwrap();
        assert_eq!(y, perm(7, "(5,6,4)(1,7,3)"));
        assert_eq!(conjugate_direct(&x, &theta).unwrap(), y);

        assert_eq!(conjugate_by_replacement(&x, &Transformation::identity(7)).unwrap(), x);

        let x = perm(8, "(1,2)(3,4,5)(6,7,8)");
        let theta = Transformation::from_row(&[7, 5, 1, 3, 6, 2, 4, 8]).unwrap();
        assert_eq!(conjugate_by_replacement(&x, &theta).unwrap(), perm(8, "(7,5)(1,3,6)(2,4,8)"));
    }

    #[test]
    fn conjugators() {
        let theta = conjugator_from_cycles(
            8,
            &[vec![1, 2], vec![3, 4, 5], vec![6, 7, 8]],
            &[vec![7, 5], vec![1, 3, 6], vec![2, 4, 8]],
        )
        .unwrap();
        assert_eq!(theta.row(), vec![7, 5, 1, 3, 6, 2, 4, 8]);

        let x = perm(8, "(1,2)(3,4,5)(6,7,8)");
        let y = perm(8, "(7,5)(1,3,6)(2,4,8)");
        let found = find_conjugator(&x, &y).unwrap();
        assert_eq!(conjugate_by_replacement(&x, &found).unwrap(), y);
        assert_eq!(conjugate_by_replacement(&x, &find_conjugator(&x, &x).unwrap()).unwrap(), x);
        assert!(find_conjugator(&perm(3, "(1,2)"), &perm(3, "(1,2,3)")).is_none());
    }
}
