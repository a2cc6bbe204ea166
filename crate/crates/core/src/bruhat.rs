//! Bruhat order on permutations, and its comparison with the orbit closure
//! order on involutions.

use std::fmt;

use crate::error::{input, Error, Result};
use crate::involution::{enumerate_involutions, melnikov_leq, Involution};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// One-line notation, 1-based images.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(input(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[img - 1] = true;
        }
        Ok(Permutation(images.iter().map(|&x| x - 1).collect()))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    /// `c(i, j) = #{a <= i : u(a) <= j}`, the rank of the northwest `i × j`
    /// corner of the permutation matrix.
    fn northwest_counts(&self) -> Vec<u32> {
        let n = self.n();
        let mut c = vec![0u32; (n + 1) * (n + 1)];
        for i in 1..=n {
            for j in 1..=n {
                let here = u32::from(self.0[i - 1] + 1 == j);
                c[i * (n + 1) + j] =
                    c[(i - 1) * (n + 1) + j] + c[i * (n + 1) + j - 1] - c[(i - 1) * (n + 1) + j - 1]
                        + here;
            }
        }
        c
    }
}

impl From<&Involution> for Permutation {
    fn from(w: &Involution) -> Self {
        Permutation(w.map0().to_vec())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.one_line())
    }
}

/// Bruhat order: `u <= v` iff every northwest corner of `u`'s permutation
/// matrix holds at least as many ones as the same corner of `v`'s.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    let (cu, cv) = (u.northwest_counts(), v.northwest_counts());
    Ok(cu.iter().zip(&cv).all(|(a, b)| a >= b))
}

/// Result of comparing the Bruhat order restricted to `I_n` with the orbit
/// closure order on `I_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderComparison {
    pub n: usize,
    /// Pairs `(v, w)` with `v <= w` in Bruhat order but not in the closure order.
    pub bruhat_only: Vec<(Involution, Involution)>,
    /// Pairs `(v, w)` with `v <= w` in the closure order but not in Bruhat order.
    pub melnikov_only: Vec<(Involution, Involution)>,
}

impl OrderComparison {
    pub fn coincide(&self) -> bool {
        self.bruhat_only.is_empty() && self.melnikov_only.is_empty()
    }
}

pub fn compare_orders(n: usize) -> Result<OrderComparison> {
    let all = enumerate_involutions(n)?;
    let perms: Vec<Permutation> = all.iter().map(Permutation::from).collect();
    let mut bruhat_only = Vec::new();
    let mut melnikov_only = Vec::new();
    for (a, v) in all.iter().enumerate() {
        for (b, w) in all.iter().enumerate() {
            let br = bruhat_leq(&perms[a], &perms[b])?;
            let me = melnikov_leq(v, w)?;
            match (br, me) {
                (true, false) => bruhat_only.push((v.clone(), w.clone())),
                (false, true) => melnikov_only.push((v.clone(), w.clone())),
                _ => {}
            }
        }
    }
    Ok(OrderComparison {
        n,
        bruhat_only,
        melnikov_only,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn inversions(p: &[usize]) -> usize {
        (0..p.len())
            .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count()
    }

    /// Bruhat order as the transitive closure of `u -> u·t` for transpositions
    /// `t` that increase the inversion count.
    fn bruhat_by_reflections(n: usize) -> HashSet<(Vec<usize>, Vec<usize>)> {
        let perms = all_perms(n);
        let mut rel: HashSet<(Vec<usize>, Vec<usize>)> = HashSet::new();
        for p in &perms {
            rel.insert((p.clone(), p.clone()));
            for i in 0..n {
                for j in i + 1..n {
                    let mut q = p.clone();
                    q.swap(i, j);
                    if inversions(&q) > inversions(p) {
                        rel.insert((p.clone(), q));
                    }
                }
            }
        }
        loop {
            let mut added = Vec::new();
            for (a, b) in &rel {
                for (c, d) in &rel {
                    if b == c && !rel.contains(&(a.clone(), d.clone())) {
                        added.push((a.clone(), d.clone()));
                    }
                }
            }
            if added.is_empty() {
                return rel;
            }
            rel.extend(added);
        }
    }

    #[test]
    fn corner_criterion_matches_reflection_closure() {
        for n in 1..=4 {
            let oracle = bruhat_by_reflections(n);
            let perms = all_perms(n);
            for u in &perms {
                for v in &perms {
                    let pu = Permutation(u.clone());
                    let pv = Permutation(v.clone());
                    assert_eq!(
                        bruhat_leq(&pu, &pv).unwrap(),
                        oracle.contains(&(u.clone(), v.clone())),
                        "{u:?} {v:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn small_cases() {
        let id = Permutation::identity(2);
        let s = Permutation::from_one_line(&[2, 1]).unwrap();
        assert!(bruhat_leq(&id, &s).unwrap());
        assert!(!bruhat_leq(&s, &id).unwrap());
        assert!(bruhat_leq(&id, &Permutation::identity(3)).is_err());
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
    }

    #[test]
    fn orders_coincide_for_two_and_differ_for_three() {
        assert!(compare_orders(1).unwrap().coincide());
        assert!(compare_orders(2).unwrap().coincide());
        let c = compare_orders(3).unwrap();
        assert!(!c.coincide());
    }
}
