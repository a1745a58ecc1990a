//! Explicit finite lattices: an element list with its Hasse diagram, the
//! order, and the join and meet tables.
//!
//! Everything here is a literal evaluation of lattice-theoretic definitions
//! and serves as the brute-force oracle for the structured computations on
//! `L(v)`.

mod congruence;
pub mod fixtures;
mod graph;
mod pentagon;
mod relations;
mod sd;

use alloc::string::String;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::ops::Lattice;

pub use congruence::Equivalence;
pub use graph::longest_simple_path;
pub use pentagon::Pentagon;
pub use sd::{sd_eval, DPathWitness, SdTrace};

/// A validated finite lattice over the elements `0..len()`.
#[derive(Clone, Debug)]
pub struct FiniteLattice {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    /// `pos[e]` is the position of `e` in a fixed linear extension.
    pos: Vec<usize>,
    /// `up[e]` holds the positions of all elements `≥ e`.
    up: Vec<FixedBitSet>,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds a lattice from its covering pairs `(lower, upper)` over the
    /// elements `0..labels.len()`.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::NotALattice(String::from("no elements")));
        }
        if n > u32::MAX as usize {
            return Err(Error::Cap { what: "lattice size", limit: u32::MAX as usize, found: n });
        }
        let mut covers: Vec<(usize, usize)> = covers.to_vec();
        covers.sort_unstable();
        covers.dedup();
        let mut lower = alloc::vec![Vec::new(); n];
        let mut upper = alloc::vec![Vec::new(); n];
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(Error::Index { what: "element", value: a.max(b), bound: n });
            }
            if a == b {
                return Err(Error::NotALattice(alloc::format!("{} covers itself", labels[a])));
            }
            upper[a].push(b);
            lower[b].push(a);
        }

        // Kahn's algorithm, smallest index first for a deterministic extension.
        let mut indeg: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut ready: alloc::collections::BinaryHeap<core::cmp::Reverse<usize>> =
            (0..n).filter(|&i| indeg[i] == 0).map(core::cmp::Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(core::cmp::Reverse(e)) = ready.pop() {
            order.push(e);
            for &u in &upper[e] {
                indeg[u] -= 1;
                if indeg[u] == 0 {
                    ready.push(core::cmp::Reverse(u));
                }
            }
        }
        if order.len() != n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap_or(0);
            return Err(Error::NotALattice(alloc::format!("cover relation has a cycle through {}", labels[stuck])));
        }
        let minimal: Vec<usize> = (0..n).filter(|&i| lower[i].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| upper[i].is_empty()).collect();
        if minimal.len() != 1 {
            return Err(Error::NotALattice(alloc::format!(
                "{} minimal elements ({} and {})",
                minimal.len(),
                labels[minimal[0]],
                labels[minimal[1]]
            )));
        }
        if maximal.len() != 1 {
            return Err(Error::NotALattice(alloc::format!(
                "{} maximal elements ({} and {})",
                maximal.len(),
                labels[maximal[0]],
                labels[maximal[1]]
            )));
        }

        let mut pos = alloc::vec![0; n];
        for (p, &e) in order.iter().enumerate() {
            pos[e] = p;
        }
        let mut up = alloc::vec![FixedBitSet::with_capacity(n); n];
        for &e in order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(pos[e]);
            for &u in &upper[e] {
                set.union_with(&up[u]);
            }
            up[e] = set;
        }
        let mut down = alloc::vec![FixedBitSet::with_capacity(n); n];
        for &e in order.iter() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(pos[e]);
            for &l in &lower[e] {
                set.union_with(&down[l]);
            }
            down[e] = set;
        }

        let mut join = alloc::vec![0u32; n * n];
        let mut meet = alloc::vec![0u32; n * n];
        let mut scratch = FixedBitSet::with_capacity(n);
        for i in 0..n {
            join[i * n + i] = i as u32;
            meet[i * n + i] = i as u32;
            for j in i + 1..n {
                scratch.clone_from(&up[i]);
                scratch.intersect_with(&up[j]);
                let lub = scratch
                    .ones()
                    .next()
                    .map(|p| order[p])
                    .filter(|&c| up[c] == scratch)
                    .ok_or_else(|| {
                        Error::NotALattice(alloc::format!("{} and {} have no least upper bound", labels[i], labels[j]))
                    })?;
                scratch.clone_from(&down[i]);
                scratch.intersect_with(&down[j]);
                let glb = scratch
                    .ones()
                    .next_back()
                    .map(|p| order[p])
                    .filter(|&c| down[c] == scratch)
                    .ok_or_else(|| {
                        Error::NotALattice(alloc::format!(
                            "{} and {} have no greatest lower bound",
                            labels[i],
                            labels[j]
                        ))
                    })?;
                join[i * n + j] = lub as u32;
                join[j * n + i] = lub as u32;
                meet[i * n + j] = glb as u32;
                meet[j * n + i] = glb as u32;
            }
        }

        Ok(FiniteLattice {
            labels,
            covers,
            lower,
            upper,
            pos,
            up,
            join,
            meet,
            bottom: minimal[0],
            top: maximal[0],
        })
    }

    /// Builds a lattice from a partial order given as a predicate; fails if
    /// the predicate is not the reflexive-transitive closure of its covers.
    pub fn from_leq(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut matrix = alloc::vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                matrix[i * n + j] = leq(i, j);
            }
        }
        let lt = |i: usize, j: usize| i != j && matrix[i * n + j];
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                    covers.push((i, j));
                }
            }
        }
        let lat = Self::from_covers(labels, &covers)?;
        for i in 0..n {
            for j in 0..n {
                if lat.leq(i, j) != matrix[i * n + j] {
                    return Err(Error::NotALattice(alloc::format!(
                        "relation is not a partial order at ({}, {})",
                        lat.labels[i],
                        lat.labels[j]
                    )));
                }
            }
        }
        Ok(lat)
    }

    /// The order dual: covers reversed, join and meet exchanged.
    pub fn dual(&self) -> Self {
        let n = self.len();
        let order_rev: Vec<usize> = {
            let mut order = alloc::vec![0; n];
            for e in 0..n {
                order[self.pos[e]] = e;
            }
            order.reverse();
            order
        };
        let mut pos = alloc::vec![0; n];
        for (p, &e) in order_rev.iter().enumerate() {
            pos[e] = p;
        }
        let mut up = alloc::vec![FixedBitSet::with_capacity(n); n];
        for e in 0..n {
            for f in 0..n {
                if self.leq(f, e) {
                    up[e].insert(pos[f]);
                }
            }
        }
        let mut covers: Vec<(usize, usize)> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        covers.sort_unstable();
        FiniteLattice {
            labels: self.labels.clone(),
            covers,
            lower: self.upper.clone(),
            upper: self.lower.clone(),
            pos,
            up,
            join: self.meet.clone(),
            meet: self.join.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Covering pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, e: usize) -> &[usize] {
        &self.lower[e]
    }

    pub fn upper_covers(&self, e: usize) -> &[usize] {
        &self.upper[e]
    }

    pub fn is_cover(&self, lower: usize, upper: usize) -> bool {
        self.upper[lower].contains(&upper)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(self.pos[b])
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Elements of the closed interval `[lo, hi]`.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.leq(lo, e) && self.leq(e, hi)).collect()
    }
}

impl Lattice for FiniteLattice {
    type Elem = usize;

    fn join(&self, a: &usize, b: &usize) -> usize {
        FiniteLattice::join(self, *a, *b)
    }

    fn meet(&self, a: &usize, b: &usize) -> usize {
        FiniteLattice::meet(self, *a, *b)
    }

    fn leq(&self, a: &usize, b: &usize) -> bool {
        FiniteLattice::leq(self, *a, *b)
    }
}
