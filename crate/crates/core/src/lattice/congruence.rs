//! Equivalence relations on lattice elements and congruences generated by
//! pairs, computed by closing under translations.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::FiniteLattice;
use crate::error::{Error, Result};

/// An equivalence relation on `0..len`, stored as a canonical block index
/// per element: blocks are numbered in order of their least element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Equivalence {
    block: Vec<usize>,
}

impl Equivalence {
    /// The equality relation.
    pub fn identity(n: usize) -> Self {
        Equivalence { block: (0..n).collect() }
    }

    /// Everything in one block.
    pub fn total(n: usize) -> Self {
        Equivalence { block: alloc::vec![0; n] }
    }

    /// Builds the relation `a ~ b ⟺ key(a) == key(b)`.
    pub fn from_key<K: Ord>(n: usize, key: impl FnMut(usize) -> K) -> Self {
        let keys: Vec<K> = (0..n).map(key).collect();
        let mut block = alloc::vec![usize::MAX; n];
        let mut next = 0;
        for i in 0..n {
            if block[i] != usize::MAX {
                continue;
            }
            for j in i..n {
                if block[j] == usize::MAX && keys[j] == keys[i] {
                    block[j] = next;
                }
            }
            next += 1;
        }
        Equivalence { block }
    }

    fn from_roots(roots: &mut [usize]) -> Self {
        let n = roots.len();
        Self::from_key(n, |i| find(roots, i))
    }

    pub fn len(&self) -> usize {
        self.block.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block.is_empty()
    }

    pub fn block_of(&self, e: usize) -> usize {
        self.block[e]
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.block[a] == self.block[b]
    }

    pub fn num_blocks(&self) -> usize {
        self.block.iter().max().map_or(0, |m| m + 1)
    }

    /// The blocks, each sorted, in canonical order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = alloc::vec![Vec::new(); self.num_blocks()];
        for (e, &b) in self.block.iter().enumerate() {
            out[b].push(e);
        }
        out
    }

    /// `self ⊆ other` as sets of pairs.
    pub fn refines(&self, other: &Self) -> bool {
        let mut image = alloc::vec![usize::MAX; self.num_blocks()];
        for (e, &b) in self.block.iter().enumerate() {
            if image[b] == usize::MAX {
                image[b] = other.block[e];
            } else if image[b] != other.block[e] {
                return false;
            }
        }
        true
    }

    /// The least equivalence containing both.
    pub fn join(&self, other: &Self) -> Self {
        let mut roots: Vec<usize> = (0..self.len()).collect();
        let mut first = alloc::vec![usize::MAX; self.num_blocks()];
        let mut first_o = alloc::vec![usize::MAX; other.num_blocks()];
        for e in 0..self.len() {
            for (tab, b) in [(&mut first, self.block[e]), (&mut first_o, other.block[e])] {
                if tab[b] == usize::MAX {
                    tab[b] = e;
                } else {
                    union(&mut roots, tab[b], e);
                }
            }
        }
        Self::from_roots(&mut roots)
    }
}

fn find(roots: &mut [usize], mut e: usize) -> usize {
    while roots[e] != e {
        roots[e] = roots[roots[e]];
        e = roots[e];
    }
    e
}

fn union(roots: &mut [usize], a: usize, b: usize) -> bool {
    let (ra, rb) = (find(roots, a), find(roots, b));
    if ra == rb {
        return false;
    }
    let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
    roots[hi] = lo;
    true
}

impl FiniteLattice {
    /// The least congruence identifying `u` and `w`.
    pub fn principal_congruence(&self, u: usize, w: usize) -> Equivalence {
        self.congruence_generated_by(&[(u, w)])
    }

    /// The least congruence containing all the given pairs.
    pub fn congruence_generated_by(&self, pairs: &[(usize, usize)]) -> Equivalence {
        let n = self.len();
        let mut roots: Vec<usize> = (0..n).collect();
        for &(a, b) in pairs {
            union(&mut roots, a, b);
        }
        // It suffices to make each element compatible with its root: if
        // a ~ r and b ~ r translate alike, so do a and b.
        loop {
            let mut changed = false;
            for a in 0..n {
                let r = find(&mut roots, a);
                if r == a {
                    continue;
                }
                for t in 0..n {
                    changed |= union(&mut roots, self.join(a, t), self.join(r, t));
                    changed |= union(&mut roots, self.meet(a, t), self.meet(r, t));
                }
            }
            if !changed {
                break;
            }
        }
        Equivalence::from_roots(&mut roots)
    }

    /// Whether the equivalence is compatible with join and meet.
    pub fn is_congruence(&self, eq: &Equivalence) -> bool {
        let n = self.len();
        if eq.len() != n {
            return false;
        }
        let blocks = eq.blocks();
        blocks.iter().all(|blk| {
            let r = blk[0];
            blk[1..].iter().all(|&a| {
                (0..n).all(|t| eq.same(self.join(a, t), self.join(r, t)) && eq.same(self.meet(a, t), self.meet(r, t)))
            })
        })
    }

    /// All congruences, sorted, computed as joins of the principal
    /// congruences generated by covering pairs.
    pub fn all_congruences(&self) -> Vec<Equivalence> {
        let atoms: Vec<Equivalence> = {
            let set: BTreeSet<Equivalence> =
                self.covers().iter().map(|&(a, b)| self.principal_congruence(a, b)).collect();
            set.into_iter().collect()
        };
        let mut seen: BTreeSet<Equivalence> = BTreeSet::new();
        let mut stack = alloc::vec![Equivalence::identity(self.len())];
        seen.insert(stack[0].clone());
        while let Some(c) = stack.pop() {
            for a in &atoms {
                let j = c.join(a);
                if !seen.contains(&j) {
                    seen.insert(j.clone());
                    stack.push(j);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The quotient lattice by a congruence. Blocks become elements in
    /// canonical order, labelled by the label of their least element.
    pub fn quotient(&self, eq: &Equivalence) -> Result<FiniteLattice> {
        if !self.is_congruence(eq) {
            return Err(Error::NotALattice(String::from("equivalence is not a congruence")));
        }
        let blocks = eq.blocks();
        let bottoms: Vec<usize> =
            blocks.iter().map(|b| b.iter().copied().fold(b[0], |acc, e| self.meet(acc, e))).collect();
        let labels = bottoms.iter().map(|&e| String::from(self.label(e))).collect();
        FiniteLattice::from_leq(labels, |i, j| eq.block_of(self.join(bottoms[i], bottoms[j])) == j)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures;
    use super::*;

    #[test]
    fn n5_pentagon_transfer() {
        let l = fixtures::n5();
        let [zero, b, a, c, one] = ["0", "b", "a", "c", "1"].map(|s| l.index_of(s).unwrap());
        let th = l.principal_congruence(b, zero);
        assert!(th.same(a, b));
        assert!(th.same(one, c));
        assert!(l.is_congruence(&th));
        assert_eq!(l.principal_congruence(a, a), Equivalence::identity(5));
    }

    #[test]
    fn congruence_counts() {
        assert_eq!(fixtures::n5().all_congruences().len(), 5);
        assert_eq!(fixtures::m3().all_congruences().len(), 2);
        assert_eq!(fixtures::boolean(2).all_congruences().len(), 4);
        assert_eq!(fixtures::benzene().all_congruences().len(), 7);
        assert_eq!(fixtures::chain(4).all_congruences().len(), 8);
    }

    #[test]
    fn quotient_of_chain() {
        let l = fixtures::chain(4);
        let th = l.principal_congruence(0, 1);
        let q = l.quotient(&th).unwrap();
        assert_eq!(q.len(), 3);
        assert!(l.quotient(&Equivalence::from_key(4, |i| i == 1)).is_err());
    }

    #[test]
    fn equivalence_join_and_refinement() {
        let a = Equivalence::from_key(4, |i| i / 2);
        let b = Equivalence::from_key(4, |i| i.div_ceil(2));
        let j = a.join(&b);
        assert_eq!(j.num_blocks(), 1);
        assert!(a.refines(&j));
        assert!(!a.refines(&b));
        assert!(Equivalence::identity(4).refines(&a));
    }
}
