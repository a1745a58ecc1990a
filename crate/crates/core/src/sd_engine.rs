//! Explicit `SD_{n-2}(∧)` failures in `Perm(n)`, their transport into
//! `L(v)`, and the per-vector check of both levels of the theorem.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::irreducibles::DGraph;
use crate::lattice::sd_eval;
use crate::multinomial::{to_finite_lattice, MultVector, Multinomial, PathWord};
use crate::perm::{InversionSet, Permutation};
use crate::Caps;

/// `y = {i\i+1 : i even}`, `z = {i\i+1 : i odd}`, `x = {1\i : i = 2..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessTriple {
    pub n: usize,
    pub x: InversionSet,
    pub y: InversionSet,
    pub z: InversionSet,
}

pub fn perm_witness(n: usize) -> Result<WitnessTriple> {
    if n < 2 {
        return Err(Error::Index { what: "witness dimension", value: n, bound: 2 });
    }
    let steps = |parity: usize| -> Vec<(usize, usize)> { (1..n).filter(|i| i % 2 == parity).map(|i| (i, i + 1)).collect() };
    let x: Vec<(usize, usize)> = (2..=n).map(|i| (1, i)).collect();
    Ok(WitnessTriple {
        n,
        x: InversionSet::from_pairs(n, &x)?,
        y: InversionSet::from_pairs(n, &steps(0))?,
        z: InversionSet::from_pairs(n, &steps(1))?,
    })
}

/// `w_k = {1\i : i = 2..k+1}`.
pub fn ladder_set(n: usize, k: usize) -> InversionSet {
    let pairs: Vec<(usize, usize)> = (2..=k + 1).map(|i| (1, i)).collect();
    InversionSet::from_pairs(n, &pairs).expect("k < n")
}

/// Checks in materialized `Perm(n)` that `x ∧ y_k = w_k` for even `k`,
/// `x ∧ z_k = w_k` for odd `k`, `0 ≤ k ≤ n-1`, and `x ∧ (y ∨ z) = x = w_{n-1}`.
pub fn wk_ladder_check(n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::Index { what: "ladder dimension", value: n, bound: 3 });
    }
    if n > 5 {
        return Err(Error::Cap { what: "ladder dimension", limit: 5, found: n });
    }
    let v = MultVector::ones(n);
    let m = to_finite_lattice(&v, &Caps::default())?;
    let idx = |s: &InversionSet| -> Result<usize> {
        let w = PathWord::iota_inv(&v, &s.to_permutation()?)?;
        Ok(m.index_of(&w).expect("every permutation is an element"))
    };
    let t = perm_witness(n)?;
    let (x, y, z) = (idx(&t.x)?, idx(&t.y)?, idx(&t.z)?);
    let l = &m.lattice;
    let tr = sd_eval(l, &x, &y, &z, n - 1);
    for k in 0..n {
        let seq = if k % 2 == 0 { &tr.y_seq } else { &tr.z_seq };
        if l.meet(x, seq[k]) != idx(&ladder_set(n, k))? {
            return Ok(false);
        }
    }
    Ok(tr.rhs == x && x == idx(&ladder_set(n, n - 1))?)
}

/// `ψ(σ) = w_{σ_1} … w_{σ_n}` with `w_j` the block of the `j`-th letter
/// that occurs in `v`.
pub fn psi(v: &MultVector, sigma: &Permutation) -> Result<PathWord> {
    let support = v.support();
    if support.len() != sigma.size() {
        return Err(Error::Mismatch {
            what: "dimension",
            left: support.len().to_string(),
            right: sigma.size().to_string(),
        });
    }
    let mut letters = Vec::with_capacity(v.k());
    for &j in sigma.images() {
        let letter = support[j];
        letters.extend(core::iter::repeat_n(letter as u16, v.entries()[letter]));
    }
    PathWord::new(v, letters)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Exhaustive scan of all triples of the materialized lattice.
    Exhaustive,
    /// Longest simple `D`-path of length `dim - 2` in a bounded lattice.
    DPathBound,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::DPathBound => "dpath-bound",
        })
    }
}

/// Outcome of checking both levels for one `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub v: MultVector,
    pub dim: usize,
    /// The level expected to fail, `dim - 2`.
    pub sd_fail_level: usize,
    /// The level expected to hold, `dim - 1`.
    pub sd_hold_level: usize,
    /// `(x, y, z)` in `L(v)`, in the ordering that fails.
    pub witness_words: [PathWord; 3],
    /// Whether `y` and `z` had to be exchanged.
    pub swapped: bool,
    pub method: Method,
    /// `SD_{dim-2}(∧)` fails on the witness.
    pub fails: bool,
    /// `SD_{dim-1}(∧)` holds, by the chosen method.
    pub holds: bool,
    /// Longest simple `D`-path, when computed.
    pub longest_d_path: Option<usize>,
}

impl TheoremReport {
    pub fn confirmed(&self) -> bool {
        self.fails && self.holds
    }
}

/// Checks that `L(v)` fails `SD_{dim-2}(∧)` on the transported witness and
/// satisfies `SD_{dim-1}(∧)`. Without an explicit method, dimensions up to
/// four within the size cap are scanned exhaustively and larger ones use
/// the `D`-path bound.
pub fn theorem_check(v: &MultVector, method: Option<Method>, caps: &Caps) -> Result<TheoremReport> {
    let dim = v.dimension();
    if dim < 2 {
        return Err(Error::Index { what: "dimension", value: dim, bound: 2 });
    }
    let vn = v.normalized();
    let t = perm_witness(dim)?;
    let img = |s: &InversionSet| -> Result<PathWord> { psi(&vn, &s.to_permutation()?) };
    let (x, y, z) = (img(&t.x)?, img(&t.y)?, img(&t.z)?);
    let lat = Multinomial { v: vn.clone() };
    let fail_level = dim - 2;
    let straight = sd_eval(&lat, &x, &y, &z, fail_level);
    let swapped_tr = sd_eval(&lat, &x, &z, &y, fail_level);
    let (fails, swapped) = if !straight.holds() {
        (true, false)
    } else {
        (!swapped_tr.holds(), true)
    };
    let witness_words = if swapped { [x, z, y] } else { [x, y, z] };

    let size = vn.lattice_size().unwrap_or(u128::MAX);
    let method = method.unwrap_or(if dim <= 4 && size <= caps.max_elements as u128 {
        Method::Exhaustive
    } else {
        Method::DPathBound
    });
    let (holds, longest_d_path) = match method {
        Method::Exhaustive => (to_finite_lattice(&vn, caps)?.lattice.sd_holds(dim - 1), None),
        Method::DPathBound => {
            let len = DGraph::new(&vn).longest_path().0;
            (len < dim - 1, Some(len))
        }
    };
    Ok(TheoremReport {
        v: v.clone(),
        dim,
        sd_fail_level: fail_level,
        sd_hold_level: dim - 1,
        witness_words,
        swapped,
        method,
        fails,
        holds,
        longest_d_path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_sets() {
        let t = perm_witness(3).unwrap();
        assert_eq!(t.y.to_string(), "2\\3");
        assert_eq!(t.z.to_string(), "1\\2");
        assert_eq!(t.x.to_string(), "1\\2;1\\3");
        let t = perm_witness(4).unwrap();
        assert_eq!(t.y.to_string(), "2\\3");
        assert_eq!(t.z.to_string(), "1\\2;3\\4");
        assert_eq!(t.x.to_string(), "1\\2;1\\3;1\\4");
        for n in 2..=6 {
            let t = perm_witness(n).unwrap();
            assert!(t.x.is_clopen() && t.y.is_clopen() && t.z.is_clopen());
        }
        assert!(perm_witness(1).is_err());
    }

    #[test]
    fn ladder() {
        for n in 3..=5 {
            assert!(wk_ladder_check(n).unwrap(), "n = {n}");
        }
        assert!(wk_ladder_check(6).is_err());
        assert!(ladder_set(4, 0).is_empty());
    }

    #[test]
    fn psi_examples() {
        let v: MultVector = "2,1,1".parse().unwrap();
        assert_eq!(psi(&v, &Permutation::identity(3)).unwrap().to_string(), "aabc");
        let s = Permutation::from_one_line(&[2, 1, 3]).unwrap();
        assert_eq!(psi(&v, &s).unwrap().to_string(), "baac");
        assert!(psi(&v, &Permutation::identity(2)).is_err());
        let v0: MultVector = "2,0,1".parse().unwrap();
        let s = Permutation::from_one_line(&[2, 1]).unwrap();
        assert_eq!(psi(&v0, &s).unwrap().to_string(), "caa");
    }

    #[test]
    fn theorem_small() {
        let caps = Caps::default();
        for s in ["1,1,1", "2,1,1", "3,3", "1,2", "2,0,1"] {
            let v: MultVector = s.parse().unwrap();
            let r = theorem_check(&v, None, &caps).unwrap();
            assert!(r.confirmed(), "{s}: {r:?}");
            assert_eq!(r.sd_fail_level + 1, r.sd_hold_level);
            let d = theorem_check(&v, Some(Method::DPathBound), &caps).unwrap();
            assert_eq!(d.holds, r.holds);
        }
        let r = theorem_check(&"3,3".parse().unwrap(), None, &caps).unwrap();
        assert_eq!((r.dim, r.sd_fail_level, r.sd_hold_level), (2, 0, 1));
        assert!(theorem_check(&"4".parse().unwrap(), None, &caps).is_err());
    }
}
