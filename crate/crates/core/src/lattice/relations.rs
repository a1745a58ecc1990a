//! Irreducibles, arrow relations, join dependency and the lattice-wide
//! properties derived from them, evaluated directly from the definitions.

use alloc::vec::Vec;

use super::{longest_simple_path, FiniteLattice};

impl FiniteLattice {
    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.lower_covers(e).len() == 1).collect()
    }

    /// Elements with exactly one upper cover.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.upper_covers(e).len() == 1).collect()
    }

    /// `j_*`, the unique lower cover of a join irreducible.
    pub fn lower_star(&self, j: usize) -> Option<usize> {
        match self.lower_covers(j) {
            [only] => Some(*only),
            _ => None,
        }
    }

    /// `m^*`, the unique upper cover of a meet irreducible.
    pub fn upper_star(&self, m: usize) -> Option<usize> {
        match self.upper_covers(m) {
            [only] => Some(*only),
            _ => None,
        }
    }

    /// `j ↗ m`: `j ≰ m` and `j ≤ m^*`.
    pub fn arrow_up(&self, j: usize, m: usize) -> bool {
        match self.upper_star(m) {
            Some(ms) => !self.leq(j, m) && self.leq(j, ms),
            None => false,
        }
    }

    /// `m ↘ j`: `j ≰ m` and `j_* ≤ m`.
    pub fn arrow_down(&self, m: usize, j: usize) -> bool {
        match self.lower_star(j) {
            Some(js) => !self.leq(j, m) && self.leq(js, m),
            None => false,
        }
    }

    /// The join dependency relation: `j D j'` iff `j ≠ j'` and
    /// `j ↗ m ↘ j'` for some meet irreducible `m`. Sorted pairs.
    pub fn d_relation(&self) -> Vec<(usize, usize)> {
        let ji = self.join_irreducibles();
        let mi = self.meet_irreducibles();
        let mut out = Vec::new();
        for &j in &ji {
            let ups: Vec<usize> = mi.iter().copied().filter(|&m| self.arrow_up(j, m)).collect();
            for &k in &ji {
                if k != j && ups.iter().any(|&m| self.arrow_down(m, k)) {
                    out.push((j, k));
                }
            }
        }
        out
    }

    /// The meet dependency relation: `m D^d m'` iff `m ≠ m'` and
    /// `m ↘ j ↗ m'` for some join irreducible `j`.
    pub fn dual_d_relation(&self) -> Vec<(usize, usize)> {
        let ji = self.join_irreducibles();
        let mi = self.meet_irreducibles();
        let mut out = Vec::new();
        for &m in &mi {
            let downs: Vec<usize> = ji.iter().copied().filter(|&j| self.arrow_down(m, j)).collect();
            for &m2 in &mi {
                if m2 != m && downs.iter().any(|&j| self.arrow_up(j, m2)) {
                    out.push((m, m2));
                }
            }
        }
        out
    }

    /// `κ(j)`: the unique `m` with `j ↗ m ↘ j`, if there is exactly one.
    pub fn kappa(&self, j: usize) -> Option<usize> {
        let mut found = self.meet_irreducibles().into_iter().filter(|&m| self.arrow_up(j, m) && self.arrow_down(m, j));
        let m = found.next()?;
        match found.next() {
            Some(_) => None,
            None => Some(m),
        }
    }

    /// `κ^d(m)`: the unique `j` with `m ↘ j ↗ m`, if there is exactly one.
    pub fn kappa_dual(&self, m: usize) -> Option<usize> {
        let mut found = self.join_irreducibles().into_iter().filter(|&j| self.arrow_up(j, m) && self.arrow_down(m, j));
        let j = found.next()?;
        match found.next() {
            Some(_) => None,
            None => Some(j),
        }
    }

    /// Every join irreducible has a unique `κ(j)` and every meet irreducible
    /// a unique `κ^d(m)`.
    pub fn is_semidistributive(&self) -> bool {
        self.join_irreducibles().into_iter().all(|j| self.kappa(j).is_some())
            && self.meet_irreducibles().into_iter().all(|m| self.kappa_dual(m).is_some())
    }

    /// `x ∧ y = x ∧ z ⟹ x ∧ (y ∨ z) = x ∧ y` over all triples.
    pub fn is_meet_semidistributive(&self) -> bool {
        self.first_meet_sd_violation().is_none()
    }

    pub(crate) fn first_meet_sd_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let xy = self.meet(x, y);
                for z in 0..n {
                    if self.meet(x, z) == xy && self.meet(x, self.join(y, z)) != xy {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// `x ∨ y = x ∨ z ⟹ x ∨ (y ∧ z) = x ∨ y` over all triples.
    pub fn is_join_semidistributive(&self) -> bool {
        self.dual().is_meet_semidistributive()
    }

    /// Semidistributive with an acyclic join dependency relation.
    pub fn is_bounded(&self) -> bool {
        self.is_semidistributive() && self.d_is_acyclic()
    }

    /// Whether `D` contains no cycle.
    pub fn d_is_acyclic(&self) -> bool {
        let n = self.len();
        let d = self.d_relation();
        let mut indeg = alloc::vec![0usize; n];
        let mut succ = alloc::vec![Vec::new(); n];
        for &(a, b) in &d {
            succ[a].push(b);
            indeg[b] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(e) = stack.pop() {
            seen += 1;
            for &b in &succ[e] {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    stack.push(b);
                }
            }
        }
        seen == n
    }

    /// Distributivity through the dependency relations: `D` and `D^d` empty.
    pub fn is_distributive(&self) -> bool {
        self.d_relation().is_empty() && self.dual_d_relation().is_empty()
    }

    /// The distributive law `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` on all triples.
    pub fn satisfies_distributive_law(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z)))
            })
        })
    }

    /// Longest simple path of the join dependency relation: its length and
    /// the path as element indices.
    pub fn longest_d_path(&self) -> (usize, Vec<usize>) {
        let ji = self.join_irreducibles();
        let local = |e: usize| ji.binary_search(&e).expect("join irreducible");
        let edges: Vec<(usize, usize)> = self.d_relation().into_iter().map(|(a, b)| (local(a), local(b))).collect();
        let (len, path) = longest_simple_path(ji.len(), &edges);
        let path = if ji.is_empty() { Vec::new() } else { path.into_iter().map(|i| ji[i]).collect() };
        (len, path)
    }
}
