//! Permutations of `{1..k}` under the weak order, represented through their
//! sets of inversions.
//!
//! An inversion `a\b` (with `a < b`) of a permutation `σ` is a pair of values
//! that occur out of order in the one-line word of `σ`. A set of pairs is
//! *closed* when `a\b, b\c ∈ X` forces `a\c ∈ X`, *open* when its complement
//! is closed, and *clopen* when both hold. Clopen sets are exactly the
//! inversion sets of permutations, ordered by inclusion they form the weak
//! order, and
//!
//! ```text
//! X ∨ Y = closure(X ∪ Y)        X ∧ Y = interior(X ∩ Y)
//! ```

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A permutation of `{1..k}` in one-line notation.
///
/// Images are stored zero-based; [`Permutation::one_line`] and the text
/// format are one-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from one-based images, e.g. `[2, 3, 1]`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let k = images.len();
        let mut seen = alloc::vec![false; k];
        let mut zero_based = Vec::with_capacity(k);
        for &img in images {
            if img == 0 || img > k || seen[img - 1] {
                return Err(Error::InvalidPermutation(join_usizes(images, ",")));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        if k == 0 {
            return Err(Error::InvalidPermutation(String::from("(empty)")));
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based_unchecked(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Permutation { images }
    }

    pub fn identity(k: usize) -> Self {
        Permutation { images: (0..k).collect() }
    }

    /// The longest element `k, k-1, ..., 1`.
    pub fn reverse(k: usize) -> Self {
        Permutation { images: (0..k).rev().collect() }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Zero-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Permutation { images: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.size() != other.size() {
            return Err(size_mismatch(self.size(), other.size()));
        }
        Ok(Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() })
    }

    /// Number of inversions, which is the rank in the weak order.
    pub fn length(&self) -> usize {
        let k = self.size();
        let mut count = 0;
        for i in 0..k {
            for j in i + 1..k {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Upper covers in the weak order: swap two adjacent positions holding
    /// an ascent.
    pub fn upper_covers(&self) -> Vec<Permutation> {
        (0..self.size().saturating_sub(1))
            .filter(|&i| self.images[i] < self.images[i + 1])
            .map(|i| {
                let mut images = self.images.clone();
                images.swap(i, i + 1);
                Permutation { images }
            })
            .collect()
    }

    /// All permutations of `{1..k}` in lexicographic order of one-line words.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }

    /// The disagreement set `D(σ) = { a\b : σ⁻¹(a) > σ⁻¹(b) }`.
    pub fn inversions(&self) -> InversionSet {
        let k = self.size();
        let pos = self.inverse();
        let mut set = InversionSet::empty(k);
        for a in 0..k {
            for b in a + 1..k {
                if pos.images[a] > pos.images[b] {
                    set.bits.insert(slot(k, a, b));
                }
            }
        }
        set
    }

    /// The agreement set `A(σ)`, complement of [`Permutation::inversions`].
    pub fn agreements(&self) -> InversionSet {
        self.inversions().complement()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_usizes(&self.one_line(), ","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse { what: "permutation", input: s.to_string() })?;
        Permutation::from_one_line(&images)
    }
}

/// Lexicographic successor in place; returns `false` at the last arrangement.
pub(crate) fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// A set of inversions `a\b` over `{1..k}`, stored as a bitset over the
/// `k(k-1)/2` pairs in lexicographic `(a, b)` order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionSet {
    k: usize,
    bits: FixedBitSet,
}

/// Slot of the zero-based pair `a < b`.
#[inline]
fn slot(k: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < k);
    a * (2 * k - a - 1) / 2 + (b - a - 1)
}

impl InversionSet {
    pub fn empty(k: usize) -> Self {
        InversionSet { k, bits: FixedBitSet::with_capacity(k * k.saturating_sub(1) / 2) }
    }

    /// Every pair: the inversion set of the longest permutation.
    pub fn full(k: usize) -> Self {
        let mut s = Self::empty(k);
        s.bits.insert_range(..);
        s
    }

    /// Builds a set from one-based pairs `(a, b)` with `a < b ≤ k`.
    pub fn from_pairs(k: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut s = Self::empty(k);
        for &(a, b) in pairs {
            s.insert(a, b)?;
        }
        Ok(s)
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    fn check_pair(&self, a: usize, b: usize) -> Result<()> {
        if a == 0 || a >= b || b > self.k {
            return Err(Error::Parse {
                what: "inversion",
                input: alloc::format!("{a}\\{b} (k = {})", self.k),
            });
        }
        Ok(())
    }

    /// Inserts the one-based pair `a\b`.
    pub fn insert(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_pair(a, b)?;
        self.bits.insert(slot(self.k, a - 1, b - 1));
        Ok(())
    }

    /// Membership of the one-based pair `a\b`; `false` for malformed pairs.
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.check_pair(a, b).is_ok() && self.contains0(a - 1, b - 1)
    }

    #[inline]
    fn contains0(&self, a: usize, b: usize) -> bool {
        self.bits.contains(slot(self.k, a, b))
    }

    /// One-based pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let k = self.k;
        let mut out = Vec::with_capacity(self.len());
        for a in 0..k {
            for b in a + 1..k {
                if self.contains0(a, b) {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        InversionSet { k: self.k, bits }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(size_mismatch(self.k, other.k));
        }
        Ok(())
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(InversionSet { k: self.k, bits })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(InversionSet { k: self.k, bits })
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.k == other.k && self.bits.is_subset(&other.bits)
    }

    /// One application of `T(X) = X ∪ { a\c : a\b, b\c ∈ X }`.
    pub fn transitivity_step(&self) -> Self {
        let k = self.k;
        let mut out = self.clone();
        for a in 0..k {
            for b in a + 1..k {
                if !self.contains0(a, b) {
                    continue;
                }
                for c in b + 1..k {
                    if self.contains0(b, c) {
                        out.bits.insert(slot(k, a, c));
                    }
                }
            }
        }
        out
    }

    /// Least closed superset, obtained by iterating
    /// [`InversionSet::transitivity_step`] to its fixpoint.
    pub fn closure(&self) -> Self {
        let mut cur = self.clone();
        loop {
            let next = cur.transitivity_step();
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Greatest open subset: `¬closure(¬X)`.
    pub fn interior(&self) -> Self {
        self.complement().closure().complement()
    }

    pub fn is_closed(&self) -> bool {
        let k = self.k;
        for a in 0..k {
            for b in a + 1..k {
                if !self.contains0(a, b) {
                    continue;
                }
                for c in b + 1..k {
                    if self.contains0(b, c) && !self.contains0(a, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `a < b < c` and `a\c ∈ X` imply `a\b ∈ X` or `b\c ∈ X`.
    pub fn is_open(&self) -> bool {
        let k = self.k;
        for a in 0..k {
            for c in a + 2..k {
                if !self.contains0(a, c) {
                    continue;
                }
                for b in a + 1..c {
                    if !self.contains0(a, b) && !self.contains0(b, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_clopen(&self) -> bool {
        self.is_closed() && self.is_open()
    }

    /// Recovers the permutation whose inversion set is `self`.
    ///
    /// Peels off the smallest adjacent inversion `i\i+1`, relabels the rest
    /// through the exchange `(i, i+1)`, and recurses; the result is the
    /// composite of the exchanges applied to the identity.
    pub fn to_permutation(&self) -> Result<Permutation> {
        if !self.is_clopen() {
            return Err(Error::NotClopen(self.to_string()));
        }
        let k = self.k;
        let mut exchanges = Vec::new();
        let mut cur = self.clone();
        while !cur.is_empty() {
            let i = (0..k - 1)
                .find(|&i| cur.contains0(i, i + 1))
                .ok_or_else(|| Error::Inconsistency(alloc::format!("open set {cur} has no adjacent inversion")))?;
            let swap = |x: usize| {
                if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                }
            };
            let mut next = InversionSet::empty(k);
            for (a, b) in cur.pairs() {
                let (a, b) = (a - 1, b - 1);
                if (a, b) == (i, i + 1) {
                    continue;
                }
                let (sa, sb) = (swap(a), swap(b));
                debug_assert!(sa < sb);
                next.bits.insert(slot(k, sa, sb));
            }
            exchanges.push(i);
            cur = next;
        }
        let mut images: Vec<usize> = (0..k).collect();
        for &i in exchanges.iter().rev() {
            for img in images.iter_mut() {
                if *img == i {
                    *img = i + 1;
                } else if *img == i + 1 {
                    *img = i;
                }
            }
        }
        Ok(Permutation::from_zero_based_unchecked(images))
    }

    fn check_clopen_pair(&self, other: &Self) -> Result<()> {
        self.check_same(other)?;
        for s in [self, other] {
            if !s.is_clopen() {
                return Err(Error::NotClopen(s.to_string()));
            }
        }
        Ok(())
    }

    /// Join in the weak order: `closure(X ∪ Y)`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_clopen_pair(other)?;
        Ok(self.union(other)?.closure())
    }

    /// Meet in the weak order: `interior(X ∩ Y)`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_clopen_pair(other)?;
        Ok(self.intersection(other)?.interior())
    }

    /// Parses `"1\2;1\3"` (or `"-"` for the empty set) over `{1..k}`.
    pub fn parse(k: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let mut set = InversionSet::empty(k);
        if s == "-" || s.is_empty() {
            return Ok(set);
        }
        for tok in s.split(';') {
            let bad = || Error::Parse { what: "inversion set", input: s.to_string() };
            let (a, b) = tok.split_once('\\').ok_or_else(bad)?;
            let a = a.trim().parse::<usize>().map_err(|_| bad())?;
            let b = b.trim().parse::<usize>().map_err(|_| bad())?;
            set.insert(a, b)?;
        }
        Ok(set)
    }
}

impl fmt::Display for InversionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = self.pairs();
        if pairs.is_empty() {
            return f.write_str("-");
        }
        for (i, (a, b)) in pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{a}\\{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for InversionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InversionSet(k={}, {})", self.k, self)
    }
}

fn size_mismatch(a: usize, b: usize) -> Error {
    Error::Mismatch { what: "size", left: a.to_string(), right: b.to_string() }
}

pub(crate) fn join_usizes(xs: &[usize], sep: &str) -> String {
    let mut s = String::new();
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            s.push_str(sep);
        }
        s.push_str(&x.to_string());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(k: usize, pairs: &[(usize, usize)]) -> InversionSet {
        InversionSet::from_pairs(k, pairs).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn inversions_examples() {
        assert!(Permutation::identity(3).inversions().is_empty());
        assert_eq!(perm("3,2,1").inversions(), InversionSet::full(3));
        assert_eq!(perm("2,3,1").inversions(), set(3, &[(1, 2), (1, 3)]));
        assert_eq!(perm("2,3,1").agreements(), set(3, &[(2, 3)]));
    }

    #[test]
    fn closure_examples() {
        assert!(InversionSet::empty(3).closure().is_empty());
        assert_eq!(set(3, &[(1, 2), (2, 3)]).closure(), InversionSet::full(3));
        assert_eq!(set(3, &[(1, 3)]).closure(), set(3, &[(1, 3)]));
    }

    #[test]
    fn interior_examples() {
        assert_eq!(InversionSet::full(3).interior(), InversionSet::full(3));
        assert!(InversionSet::empty(3).interior().is_empty());
        assert!(set(3, &[(1, 3)]).interior().is_empty());
    }

    #[test]
    fn clopen_predicates() {
        assert!(InversionSet::empty(3).is_clopen());
        let x = set(3, &[(1, 3)]);
        assert!(x.is_closed());
        assert!(!x.is_open());
        assert!(!x.is_clopen());
        for s in Permutation::all(4) {
            assert!(s.inversions().is_clopen(), "{s}");
        }
    }

    #[test]
    fn clopen_to_perm_examples() {
        assert_eq!(InversionSet::empty(3).to_permutation().unwrap(), Permutation::identity(3));
        assert_eq!(set(3, &[(1, 2)]).to_permutation().unwrap(), perm("2,1,3"));
        assert_eq!(InversionSet::full(3).to_permutation().unwrap(), perm("3,2,1"));
        assert!(matches!(set(3, &[(1, 3)]).to_permutation(), Err(Error::NotClopen(_))));
    }

    #[test]
    fn join_meet_examples() {
        let a = set(3, &[(1, 2)]);
        let b = set(3, &[(2, 3)]);
        assert_eq!(a.join(&b).unwrap(), InversionSet::full(3));
        assert!(a.meet(&b).unwrap().is_empty());
        assert_eq!(a.join(&InversionSet::empty(3)).unwrap(), a);
        assert!(a.join(&InversionSet::empty(4)).is_err());
        assert!(a.join(&set(3, &[(1, 3)])).is_err());
    }

    #[test]
    fn text_formats() {
        let x = set(3, &[(1, 3), (1, 2)]);
        assert_eq!(x.to_string(), "1\\2;1\\3");
        assert_eq!(InversionSet::empty(4).to_string(), "-");
        assert_eq!(InversionSet::parse(3, "1\\2;1\\3").unwrap(), x);
        assert_eq!(InversionSet::parse(3, "-").unwrap(), InversionSet::empty(3));
        assert!(InversionSet::parse(3, "2\\1").is_err());
        assert_eq!(perm("2,1,3").to_string(), "2,1,3");
        assert!("1,1,2".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn all_is_lexicographic() {
        let all = Permutation::all(3);
        let words: Vec<Vec<usize>> = all.iter().map(|p| p.one_line()).collect();
        assert_eq!(
            words,
            vec![vec![1, 2, 3], vec![1, 3, 2], vec![2, 1, 3], vec![2, 3, 1], vec![3, 1, 2], vec![3, 2, 1]]
        );
    }

    #[test]
    fn compose_and_inverse() {
        let s = perm("2,3,1");
        assert_eq!(s.compose(&s.inverse()).unwrap(), Permutation::identity(3));
        assert_eq!(s.length(), 2);
        assert_eq!(s.upper_covers(), vec![perm("3,2,1")]);
    }
}
