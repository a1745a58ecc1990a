//! The `SD_n(∧)` equations: the alternating sequences `y_k`, `z_k`, `x_k`,
//! exhaustive checks, and the extraction of a join dependency path from a
//! failure.

use alloc::vec::Vec;

use super::FiniteLattice;
use crate::error::{Error, Result};
use crate::ops::Lattice;

/// The sequences attached to a triple, computed up to index `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdTrace<E> {
    pub x: E,
    pub y: E,
    pub z: E,
    pub n: usize,
    /// `y_0..=y_n`
    pub y_seq: Vec<E>,
    /// `z_0..=z_n`
    pub z_seq: Vec<E>,
    /// `x_1..=x_n`
    pub x_seq: Vec<E>,
    /// Least `m ≥ 1` with `y_{m-1} = y_m` and `z_{m-1} = z_m`.
    pub mu: usize,
    /// `x ∧ y_n`
    pub lhs: E,
    /// `x ∧ (y ∨ z)`
    pub rhs: E,
}

impl<E: Eq> SdTrace<E> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates the sequences for `(x, y, z)` and the equation `SD_n(∧)`.
/// The lattice must be finite for `mu` to exist.
pub fn sd_eval<L: Lattice>(l: &L, x: &L::Elem, y: &L::Elem, z: &L::Elem, n: usize) -> SdTrace<L::Elem> {
    let step = |yk: &L::Elem, zk: &L::Elem| (l.join(y, &l.meet(x, zk)), l.join(z, &l.meet(x, yk)));
    let mut y_seq = alloc::vec![y.clone()];
    let mut z_seq = alloc::vec![z.clone()];
    let mut mu = None;
    let mut k = 0;
    while k < n || mu.is_none() {
        let (ny, nz) = step(&y_seq[k], &z_seq[k]);
        if mu.is_none() && ny == y_seq[k] && nz == z_seq[k] {
            mu = Some(k + 1);
        }
        y_seq.push(ny);
        z_seq.push(nz);
        k += 1;
    }
    y_seq.truncate(n + 1);
    z_seq.truncate(n + 1);
    let x_seq = (1..=n).map(|k| l.join(&l.meet(x, &y_seq[k - 1]), &l.meet(x, &z_seq[k - 1]))).collect();
    SdTrace {
        lhs: l.meet(x, &y_seq[n]),
        rhs: l.meet(x, &l.join(y, z)),
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
        n,
        y_seq,
        z_seq,
        x_seq,
        mu: mu.expect("loop exits once mu is set"),
    }
}

/// A simple join dependency path extracted from an `SD_n(∧)` failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPathWitness {
    /// `j_n, …, j_0`, each related to the next by the reflexive-transitive
    /// closure of `D`.
    pub anchors: Vec<usize>,
    /// A simple `D`-path of length `n`, as join irreducibles.
    pub path: Vec<usize>,
    /// The prime quotients `(u_k, v_k)` for `k = n, …, 0`.
    pub quotients: Vec<(usize, usize)>,
    /// Whether `y` and `z` were exchanged to make `Y_n` non-degenerate.
    pub swapped: bool,
}

impl FiniteLattice {
    /// Whether `SD_n(∧)` fails at `(x, y, z)`.
    pub fn sd_fails_at(&self, x: usize, y: usize, z: usize, n: usize) -> bool {
        let rhs = self.meet(x, self.join(y, z));
        let (mut yk, mut zk) = (y, z);
        for _ in 0..n {
            let ny = self.join(y, self.meet(x, zk));
            let nz = self.join(z, self.meet(x, yk));
            if ny == yk && nz == zk {
                break;
            }
            (yk, zk) = (ny, nz);
        }
        self.meet(x, yk) != rhs
    }

    /// The first triple, in lexicographic order, at which `SD_n(∧)` fails.
    pub fn sd_failure(&self, n: usize) -> Option<(usize, usize, usize)> {
        let m = self.len();
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if self.sd_fails_at(x, y, z, n) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn sd_holds(&self, n: usize) -> bool {
        self.sd_failure(n).is_none()
    }

    /// `μ(x, y, z)`.
    pub fn sd_mu_at(&self, x: usize, y: usize, z: usize) -> usize {
        let (mut yk, mut zk) = (y, z);
        let mut k = 0;
        loop {
            k += 1;
            let ny = self.join(y, self.meet(x, zk));
            let nz = self.join(z, self.meet(x, yk));
            if ny == yk && nz == zk {
                return k;
            }
            (yk, zk) = (ny, nz);
        }
    }

    /// `max μ(x, y, z)` over all triples.
    pub fn sd_mu(&self) -> usize {
        let m = self.len();
        let mut best = 0;
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    best = best.max(self.sd_mu_at(x, y, z));
                }
            }
        }
        best
    }

    /// Follows the alternating pentagons `Y_k`, `Z_k` of an `SD_n(∧)`
    /// failure down to a chain of join irreducibles, then realizes it as a
    /// simple `D`-path of length `n`.
    pub fn dpath_from_sd_failure(&self, x: usize, y: usize, z: usize, n: usize) -> Result<DPathWitness> {
        if !self.sd_fails_at(x, y, z, n) {
            return Err(Error::NotSdFailure { n });
        }
        if !self.is_meet_semidistributive() {
            return Err(Error::NotMeetSemidistributive);
        }
        let t = sd_eval(self, &x, &y, &z, n);
        let degenerate_y = n == 0 || t.x_seq[n - 1] == self.meet(x, t.y_seq[n]);
        let (ys, zs, swapped) = if degenerate_y { (&t.z_seq, &t.y_seq, true) } else { (&t.y_seq, &t.z_seq, false) };
        // xs[k] = x_k for k ≥ 1.
        let xs = |k: usize| t.x_seq[k - 1];
        // The pentagon used at level k: Y for n - k even, Z otherwise.
        let side = |k: usize| if (n - k).is_multiple_of(2) { ys } else { zs };

        let mut quotients = Vec::with_capacity(n + 1);
        if n == 0 {
            // SD_0 fails: x ∧ y < x ∧ (y ∨ z); any prime quotient in between.
            let (w, u) = *self
                .prime_quotients_within(self.meet(x, y), t.rhs)
                .first()
                .ok_or_else(|| Error::Inconsistency(alloc::string::String::from("empty failure quotient")))?;
            quotients.push((u, w));
        } else {
            let top = self.meet(x, side(n)[n]);
            let (w, u) = *self
                .prime_quotients_within(xs(n), top)
                .first()
                .ok_or_else(|| Error::Inconsistency(alloc::string::String::from("Y_n has no prime quotient")))?;
            quotients.push((u, w));
            for k in (1..=n).rev() {
                let (uk, vk) = quotients[quotients.len() - 1];
                let zero = self.meet(x, side(k)[k - 1]);
                let (u1, v1) = self.quotient_collapsing(zero, xs(k), uk, vk).ok_or_else(|| {
                    Error::Inconsistency(alloc::format!("no descent below level {k}"))
                })?;
                if k == 1 {
                    quotients.push((u1, v1));
                } else {
                    let hi = self.meet(x, side(k - 1)[k - 1]);
                    let next = self
                        .quotient_collapsing(xs(k - 1), hi, u1, v1)
                        .ok_or_else(|| Error::Inconsistency(alloc::format!("no transfer to level {}", k - 1)))?;
                    quotients.push(next);
                }
            }
        }
        let anchors: Vec<usize> =
            quotients.iter().map(|&(u, v)| self.quotient_to_ji(u, v)).collect::<Result<_>>()?;
        let path = self.realize_d_path(&anchors, n)?;
        Ok(DPathWitness { anchors, path, quotients, swapped })
    }

    /// Connects consecutive anchors by shortest `D`-paths and extracts a
    /// simple path of `n` edges.
    fn realize_d_path(&self, anchors: &[usize], n: usize) -> Result<Vec<usize>> {
        let d = self.d_relation();
        let mut walk = alloc::vec![anchors[0]];
        for pair in anchors.windows(2) {
            let seg = shortest_path(self.len(), &d, pair[0], pair[1])
                .ok_or_else(|| Error::Inconsistency(alloc::string::String::from("anchors not D-connected")))?;
            walk.extend_from_slice(&seg[1..]);
        }
        let mut seen = alloc::collections::BTreeSet::new();
        if walk.iter().all(|e| seen.insert(*e)) && walk.len() > n {
            walk.truncate(n + 1);
            return Ok(walk);
        }
        let (len, path) = self.longest_d_path();
        if len >= n {
            return Ok(path[..=n].to_vec());
        }
        Err(Error::Inconsistency(alloc::format!("no simple D-path of length {n}")))
    }
}

fn shortest_path(nodes: usize, edges: &[(usize, usize)], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = alloc::vec![usize::MAX; nodes];
    let mut queue = alloc::collections::VecDeque::from([from]);
    prev[from] = from;
    while let Some(e) = queue.pop_front() {
        if e == to {
            let mut path = alloc::vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &(a, b) in edges {
            if a == e && prev[b] == usize::MAX {
                prev[b] = e;
                queue.push_back(b);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::fixtures;
    use super::*;

    #[test]
    fn n5_sd1_failure_and_path() {
        let l = fixtures::n5();
        let [zero, b, a, c, one] = ["0", "b", "a", "c", "1"].map(|s| l.index_of(s).unwrap());
        let t = sd_eval(&l, &a, &b, &c, 1);
        assert_eq!(t.y_seq[1], b);
        assert!(!t.holds());
        assert!(l.sd_fails_at(a, b, c, 1));
        assert!(l.sd_fails_at(one, zero, one, 0));
        let w = l.dpath_from_sd_failure(a, b, c, 1).unwrap();
        assert_eq!(w.path, alloc::vec![a, b]);
        assert!(l.dpath_from_sd_failure(a, b, c, 2).is_err());
    }

    #[test]
    fn sd_levels_of_fixtures() {
        assert!(fixtures::boolean(3).sd_holds(1));
        assert!(!fixtures::boolean(3).sd_holds(0));
        assert!(fixtures::n5().sd_holds(2));
        assert!(!fixtures::n5().sd_holds(1));
        assert!(!fixtures::m3().sd_holds(5));
        assert!(fixtures::benzene().sd_holds(2));
        assert!(!fixtures::benzene().sd_holds(1));
    }

    #[test]
    fn mu_bounds_sd() {
        for (_, l) in fixtures::named() {
            if l.is_meet_semidistributive() {
                assert!(l.sd_holds(l.sd_mu()));
            }
        }
    }
}
