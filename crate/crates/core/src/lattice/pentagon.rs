//! Pentagons `N(a/b, c)`, prime quotients and their transfer to join
//! irreducibles.

use alloc::vec::Vec;

use super::FiniteLattice;
use crate::error::{Error, Result};

/// A pentagon `N(a/b, c)`: `b ≤ a`, `a ∨ c = b ∨ c`, `a ∧ c = b ∧ c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pentagon {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub one: usize,
    pub zero: usize,
}

impl Pentagon {
    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }
}

impl FiniteLattice {
    /// `N(a/b, c)` if the three elements form a (possibly degenerate) pentagon.
    pub fn pentagon(&self, a: usize, b: usize, c: usize) -> Option<Pentagon> {
        let (one, zero) = (self.join(a, c), self.meet(a, c));
        (self.leq(b, a) && self.join(b, c) == one && self.meet(b, c) == zero).then_some(Pentagon { a, b, c, one, zero })
    }

    /// All non-degenerate pentagons, ordered by `(a, b, c)`.
    pub fn pentagons(&self) -> Vec<Pentagon> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if !self.lt(b, a) {
                    continue;
                }
                out.extend((0..n).filter_map(|c| self.pentagon(a, b, c)));
            }
        }
        out
    }

    /// Covering pairs `(lower, upper)` inside the interval `[lo, hi]`, in
    /// lexicographic order.
    pub fn prime_quotients_within(&self, lo: usize, hi: usize) -> Vec<(usize, usize)> {
        self.covers().iter().copied().filter(|&(w, u)| self.leq(lo, w) && self.leq(u, hi)).collect()
    }

    /// The lexicographically least prime quotient `u/w` with
    /// `lo ≤ w ≺ u ≤ hi` whose principal congruence contains `(p, q)`.
    pub fn quotient_collapsing(&self, lo: usize, hi: usize, p: usize, q: usize) -> Option<(usize, usize)> {
        self.prime_quotients_within(lo, hi)
            .into_iter()
            .find(|&(w, u)| self.principal_congruence(u, w).same(p, q))
            .map(|(w, u)| (u, w))
    }

    /// For a non-degenerate pentagon and a prime quotient `a'/b'` of its
    /// central quotient, a prime quotient `u/w` inside `b/0_N` with
    /// `(a', b') ∈ θ(u, w)`, returned as `(u, w)`.
    pub fn pentagon_descend(&self, n: &Pentagon, a1: usize, b1: usize) -> Result<(usize, usize)> {
        if n.is_degenerate() || self.pentagon(n.a, n.b, n.c) != Some(*n) {
            return Err(Error::Degenerate(alloc::format!("N({}/{}, {})", self.label(n.a), self.label(n.b), self.label(n.c))));
        }
        if !self.is_cover(b1, a1) || !self.leq(n.b, b1) || !self.leq(a1, n.a) {
            return Err(Error::NotPrimeQuotient {
                upper: alloc::string::String::from(self.label(a1)),
                lower: alloc::string::String::from(self.label(b1)),
            });
        }
        self.quotient_collapsing(n.zero, n.b, a1, b1).ok_or_else(|| {
            Error::Inconsistency(alloc::format!(
                "no prime quotient below {} collapses {}/{}",
                self.label(n.b),
                self.label(a1),
                self.label(b1)
            ))
        })
    }

    /// For a prime quotient `x/y`, the least-indexed minimal `j` with
    /// `j ∨ y = x`; it is join irreducible and `j/j_* ∼ x/y`.
    pub fn quotient_to_ji(&self, x: usize, y: usize) -> Result<usize> {
        if !self.is_cover(y, x) {
            return Err(Error::NotPrimeQuotient {
                upper: alloc::string::String::from(self.label(x)),
                lower: alloc::string::String::from(self.label(y)),
            });
        }
        let cands: Vec<usize> = (0..self.len()).filter(|&z| self.join(z, y) == x).collect();
        let j = cands
            .iter()
            .copied()
            .find(|&z| !cands.iter().any(|&w| self.lt(w, z)))
            .expect("x itself is a candidate");
        debug_assert_eq!(self.lower_star(j), Some(self.meet(j, y)));
        Ok(j)
    }
}
