//! Small lattices used as test fixtures and CLI seeds.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::FiniteLattice;

fn build(labels: &[&str], covers: &[(usize, usize)]) -> FiniteLattice {
    let labels = labels.iter().map(|s| String::from(*s)).collect();
    FiniteLattice::from_covers(labels, covers).expect("fixture is a lattice")
}

/// The chain `0 < 1 < … < n-1`.
pub fn chain(n: usize) -> FiniteLattice {
    let labels = (0..n.max(1)).map(|i| i.to_string()).collect();
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    FiniteLattice::from_covers(labels, &covers).expect("chain is a lattice")
}

/// Subsets of a `k`-element set; element `i` is the subset with bitmask `i`.
pub fn boolean(k: usize) -> FiniteLattice {
    let n = 1usize << k;
    let labels = (0..n).map(|i| alloc::format!("{i:0width$b}", width = k.max(1))).collect();
    let mut covers = Vec::new();
    for i in 0..n {
        for b in 0..k {
            if i & (1 << b) == 0 {
                covers.push((i, i | (1 << b)));
            }
        }
    }
    FiniteLattice::from_covers(labels, &covers).expect("boolean lattice")
}

/// The diamond `M₃`: `0 < x, y, z < 1`.
pub fn m3() -> FiniteLattice {
    build(&["0", "x", "y", "z", "1"], &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
}

/// The pentagon `N₅`: `0 < b < a < 1` and `0 < c < 1`.
pub fn n5() -> FiniteLattice {
    build(&["0", "b", "a", "c", "1"], &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
}

/// The hexagon ("benzene"), isomorphic to `Perm(3)`.
pub fn benzene() -> FiniteLattice {
    build(
        &["0", "l1", "l2", "r1", "r2", "1"],
        &[(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)],
    )
}

/// A 14-element semidistributive lattice that is not bounded, read off a
/// drawing of the Jónsson-Nation example. Unverified: the drawing leaves
/// some covers ambiguous and this reading has two more `D`-edges
/// (`p1 D p3`, `p0 D a1`) than the dependency graph drawn next to it.
pub fn jn_unverified() -> FiniteLattice {
    let labels = ["0", "a0", "a1", "p2", "y", "p3", "q", "p1", "u", "p0", "v", "c1", "w", "1"];
    let at = |s: &str| labels.iter().position(|l| *l == s).unwrap();
    let pairs = [
        ("0", "a0"), ("0", "a1"), ("a0", "p2"), ("a0", "y"), ("a1", "y"), ("a1", "p3"), ("p2", "q"),
        ("p2", "p1"), ("p1", "u"), ("p1", "p0"), ("y", "u"), ("u", "v"), ("p3", "v"), ("q", "c1"),
        ("p0", "c1"), ("p0", "w"), ("v", "w"), ("c1", "1"), ("w", "1"),
    ];
    let covers: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (at(a), at(b))).collect();
    build(&labels, &covers)
}

/// Named fixtures shipped with the library.
pub fn named() -> Vec<(&'static str, FiniteLattice)> {
    alloc::vec![
        ("chain2", chain(2)),
        ("chain4", chain(4)),
        ("boolean2", boolean(2)),
        ("boolean3", boolean(3)),
        ("m3", m3()),
        ("n5", n5()),
        ("benzene", benzene()),
    ]
}
