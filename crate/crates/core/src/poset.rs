//! Finite posets with a materialized order table and their Hasse diagrams.

use crate::error::{Error, Result};

/// A finite partially ordered set.
///
/// The order is stored as a dense `len × len` table; `covers` is its
/// transitive reduction, as `(lower, upper)` index pairs sorted
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset<T> {
    elements: Vec<T>,
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
}

impl<T> Poset<T> {
    /// Builds the poset whose order is `leq`, checking reflexivity,
    /// antisymmetry and transitivity. The error names the offending
    /// elements by index.
    pub fn build(elements: Vec<T>, mut leq: impl FnMut(&T, &T) -> bool) -> Result<Self> {
        let len = elements.len();
        let mut table = vec![false; len * len];
        for a in 0..len {
            for b in 0..len {
                table[a * len + b] = leq(&elements[a], &elements[b]);
            }
        }
        Poset::from_table(elements, table)
    }

    /// Builds the poset whose order is the reflexive-transitive closure of
    /// the given cover pairs. Fails if the closure is not antisymmetric.
    pub fn from_covers(elements: Vec<T>, covers: &[(usize, usize)]) -> Result<Self> {
        let len = elements.len();
        let mut table = vec![false; len * len];
        for a in 0..len {
            table[a * len + a] = true;
        }
        for &(a, b) in covers {
            if a >= len || b >= len {
                return Err(Error::Input(format!(
                    "cover ({a},{b}) refers to a missing element"
                )));
            }
            table[a * len + b] = true;
        }
        for k in 0..len {
            for a in 0..len {
                if table[a * len + k] {
                    for b in 0..len {
                        if table[k * len + b] {
                            table[a * len + b] = true;
                        }
                    }
                }
            }
        }
        Poset::from_table(elements, table)
    }

    fn from_table(elements: Vec<T>, table: Vec<bool>) -> Result<Self> {
        let len = elements.len();
        let at = |a: usize, b: usize| table[a * len + b];
        for a in 0..len {
            if !at(a, a) {
                return Err(Error::Axiom(format!("reflexivity fails at element {a}")));
            }
        }
        for a in 0..len {
            for b in a + 1..len {
                if at(a, b) && at(b, a) {
                    return Err(Error::Axiom(format!(
                        "antisymmetry fails: elements {a} and {b} are mutually below each other"
                    )));
                }
            }
        }
        for a in 0..len {
            for b in 0..len {
                if !at(a, b) {
                    continue;
                }
                for c in 0..len {
                    if at(b, c) && !at(a, c) {
                        return Err(Error::Axiom(format!(
                            "transitivity fails: {a} <= {b} <= {c} but not {a} <= {c}"
                        )));
                    }
                }
            }
        }
        let mut covers = Vec::new();
        for a in 0..len {
            for b in 0..len {
                if a != b
                    && at(a, b)
                    && !(0..len).any(|c| c != a && c != b && at(a, c) && at(c, b))
                {
                    covers.push((a, b));
                }
            }
        }
        Ok(Poset {
            elements,
            leq: table,
            covers,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &T {
        &self.elements[idx]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Cover pairs `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.covers.binary_search(&(a, b)).is_ok()
    }

    /// Indices strictly between `a` and `b`.
    pub fn open_interval(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&c| self.lt(a, c) && self.lt(c, b))
            .collect()
    }

    pub fn position(&self, x: &T) -> Option<usize>
    where
        T: PartialEq,
    {
        self.elements.iter().position(|e| e == x)
    }

    /// Elements with nothing above them.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| !(0..self.len()).any(|b| self.lt(a, b)))
            .collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| !(0..self.len()).any(|b| self.lt(b, a)))
            .collect()
    }

    /// Maps each element, keeping the order.
    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Poset<U> {
        Poset {
            elements: self.elements.iter().map(f).collect(),
            leq: self.leq.clone(),
            covers: self.covers.clone(),
        }
    }

    /// True when the two posets have the same order table, elements aside.
    pub fn same_order<U>(&self, other: &Poset<U>) -> bool {
        self.leq == other.leq
    }
}

/// Transitive reduction: the cover pairs of `poset`.
pub fn hasse<T>(poset: &Poset<T>) -> Vec<(usize, usize)> {
    poset.covers().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn chain_and_singleton() {
        let chain = Poset::build(vec![1, 2, 3], |a, b| a <= b).unwrap();
        assert_eq!(hasse(&chain), vec![(0, 1), (1, 2)]);
        let single = Poset::build(vec!["x"], |_, _| true).unwrap();
        assert_eq!(single.len(), 1);
        assert!(single.covers().is_empty());
    }

    #[test]
    fn rejects_bad_relations() {
        let err = Poset::build(vec![1, 2], |_, _| true).unwrap_err();
        assert!(matches!(err, Error::Axiom(ref m) if m.contains("antisymmetry")));
        // 0 <= 1 <= 2 without 0 <= 2
        let err = Poset::build(vec![0, 1, 2], |a, b| a == b || b - a == 1).unwrap_err();
        assert!(matches!(err, Error::Axiom(ref m) if m.contains("transitivity")));
        let err = Poset::build(vec![0], |_, _| false).unwrap_err();
        assert!(matches!(err, Error::Axiom(ref m) if m.contains("reflexivity")));
        let err = Poset::from_covers(vec![0, 1], &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::Axiom(_)));
    }

    #[test]
    fn divisibility_lattice() {
        let p = Poset::build((1..=12u32).collect(), |a, b| b % a == 0).unwrap();
        let six = p.position(&6).unwrap();
        let one = p.position(&1).unwrap();
        assert!(!p.is_cover(one, six));
        assert_eq!(p.open_interval(one, six).len(), 2);
        assert_eq!(p.minimal(), vec![one]);
    }

    proptest! {
        /// Subset inclusion on random families: closing the Hasse diagram
        /// gives back the full order.
        #[test]
        fn reduction_closure_round_trip(sets in prop::collection::hash_set(0u16..256, 1..60)) {
            let elems: Vec<u16> = sets.into_iter().collect();
            let p = Poset::build(elems.clone(), |a, b| a & b == *a).unwrap();
            let q = Poset::from_covers(elems, p.covers()).unwrap();
            prop_assert!(p.same_order(&q));
            prop_assert_eq!(p.covers(), q.covers());
        }
    }
}
