//! The multinomial lattice `L(v)`: words with `v_i` copies of the `i`-th
//! letter, ordered by the rewrite `… a_i a_j … → … a_j a_i …` for `i < j`.
//!
//! The order is decided letter-pair by letter-pair through the projections
//! `π_{l,m}`; joins and meets go through the embedding `ι` into the weak
//! order on `Perm(k)`, where they are computed with the clopen calculus.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::ops::Lattice;
use crate::perm::{join_usizes, next_permutation, Permutation};
use crate::Caps;

/// Letter multiplicities `v = (v_1, …, v_n)`; zero entries are allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MultVector {
    entries: Vec<usize>,
}

impl MultVector {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Parse { what: "multiplicity vector", input: String::new() });
        }
        Ok(MultVector { entries })
    }

    /// `1^n`, whose lattice is the permutohedron `Perm(n)`.
    pub fn ones(n: usize) -> Self {
        MultVector { entries: alloc::vec![1; n.max(1)] }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Alphabet size `n` (including letters with multiplicity zero).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Word length `k = Σ v_i`.
    pub fn k(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Number of letters that actually occur.
    pub fn dimension(&self) -> usize {
        self.entries.iter().filter(|&&x| x > 0).count()
    }

    /// Zero-based indices of the letters with positive multiplicity.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.entries[i] > 0).collect()
    }

    /// The vector with zero entries dropped; `L(v)` and `L(v')` are
    /// isomorphic by relabelling letters along [`MultVector::support`].
    pub fn normalized(&self) -> MultVector {
        let entries: Vec<usize> = self.entries.iter().copied().filter(|&x| x > 0).collect();
        if entries.is_empty() {
            return MultVector { entries: alloc::vec![0] };
        }
        MultVector { entries }
    }

    /// `|L(v)| = k! / Π v_i!`, or `None` on overflow.
    pub fn lattice_size(&self) -> Option<u128> {
        let mut num: u128 = 1;
        let mut placed: u128 = 0;
        for &vi in &self.entries {
            for j in 1..=vi as u128 {
                placed += 1;
                num = num.checked_mul(placed)? / j;
            }
        }
        Some(num)
    }
}

impl fmt::Display for MultVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_usizes(&self.entries, ","))
    }
}

impl FromStr for MultVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse { what: "multiplicity vector", input: s.to_string() })?;
        MultVector::new(entries)
    }
}

/// An element of `L(v)`: a word over `n` letters with prescribed counts.
///
/// Letters are stored zero-based. The parent vector is recovered from the
/// letter counts together with the alphabet size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PathWord {
    n: usize,
    letters: Vec<u16>,
}

impl PathWord {
    /// Builds a word from zero-based letters, checking the Parikh condition.
    pub fn new(v: &MultVector, letters: Vec<u16>) -> Result<Self> {
        let mut counts = alloc::vec![0usize; v.len()];
        for &l in &letters {
            let l = l as usize;
            if l >= v.len() {
                return Err(Error::Index { what: "letter", value: l + 1, bound: v.len() });
            }
            counts[l] += 1;
        }
        let w = PathWord { n: v.len(), letters };
        if counts != v.entries {
            return Err(Error::Parikh { word: w.to_string(), vector: v.to_string() });
        }
        Ok(w)
    }

    pub(crate) fn from_letters_unchecked(n: usize, letters: Vec<u16>) -> Self {
        PathWord { n, letters }
    }

    /// Parses the text format: lowercase letters when `n ≤ 26`, otherwise
    /// space-separated one-based letter indices.
    pub fn parse(v: &MultVector, s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "word", input: s.to_string() };
        let letters: Vec<u16> = if v.len() <= 26 {
            s.trim()
                .chars()
                .map(|c| {
                    if c.is_ascii_lowercase() {
                        Ok((c as u8 - b'a') as u16)
                    } else {
                        Err(bad())
                    }
                })
                .collect::<Result<_>>()?
        } else {
            s.split_whitespace()
                .map(|t| match t.parse::<u16>() {
                    Ok(x) if x >= 1 => Ok(x - 1),
                    _ => Err(bad()),
                })
                .collect::<Result<_>>()?
        };
        PathWord::new(v, letters)
    }

    /// Zero-based letters.
    pub fn letters(&self) -> &[u16] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> usize {
        self.n
    }

    pub fn parent(&self) -> MultVector {
        let mut entries = alloc::vec![0; self.n];
        for &l in &self.letters {
            entries[l as usize] += 1;
        }
        MultVector { entries }
    }

    fn check_same_parent(&self, other: &PathWord) -> Result<()> {
        if self.n != other.n || self.parent() != other.parent() {
            return Err(Error::Mismatch {
                what: "parent vector",
                left: self.parent().to_string(),
                right: other.parent().to_string(),
            });
        }
        Ok(())
    }

    /// `π_{l,m}`: erase every letter other than `l` and `m` (one-based) and
    /// relabel them `a`, `b`.
    pub fn project(&self, l: usize, m: usize) -> Result<PathWord> {
        if l == 0 || l >= m {
            return Err(Error::Index { what: "projection index l", value: l, bound: m });
        }
        if m > self.n {
            return Err(Error::Index { what: "projection index m", value: m, bound: self.n });
        }
        let (l0, m0) = ((l - 1) as u16, (m - 1) as u16);
        let letters = self
            .letters
            .iter()
            .filter_map(|&c| {
                if c == l0 {
                    Some(0)
                } else if c == m0 {
                    Some(1)
                } else {
                    None
                }
            })
            .collect();
        Ok(PathWord { n: 2, letters })
    }

    /// The order of `L(v)`, decided on every two-letter projection.
    pub fn leq(&self, other: &PathWord) -> Result<bool> {
        self.check_same_parent(other)?;
        for l in 0..self.n as u16 {
            for m in l + 1..self.n as u16 {
                if !pair_leq(&self.letters, &other.letters, l, m) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Upper covers: swap an adjacent `a_i a_j` with `i < j`, in order of
    /// position.
    pub fn upper_covers(&self) -> Vec<PathWord> {
        self.adjacent_swaps(|a, b| a < b)
    }

    /// Lower covers: swap an adjacent descent.
    pub fn lower_covers(&self) -> Vec<PathWord> {
        self.adjacent_swaps(|a, b| a > b)
    }

    fn adjacent_swaps(&self, pick: impl Fn(u16, u16) -> bool) -> Vec<PathWord> {
        (0..self.letters.len().saturating_sub(1))
            .filter(|&i| pick(self.letters[i], self.letters[i + 1]))
            .map(|i| {
                let mut letters = self.letters.clone();
                letters.swap(i, i + 1);
                PathWord { n: self.n, letters }
            })
            .collect()
    }

    /// Number of positions `i` with `w_i > w_{i+1}`.
    pub fn descents(&self) -> usize {
        self.letters.windows(2).filter(|p| p[0] > p[1]).count()
    }

    /// Number of positions `i` with `w_i < w_{i+1}`.
    pub fn ascents(&self) -> usize {
        self.letters.windows(2).filter(|p| p[0] < p[1]).count()
    }

    /// `ι(w)`: the unique `σ` with `w = μ* ∘ σ` that is increasing on every
    /// letter class of `w`, where `μ*` is the bottom word.
    pub fn iota(&self) -> Permutation {
        let counts = self.parent().entries;
        let mut next = Vec::with_capacity(self.n);
        let mut acc = 0;
        for c in counts {
            next.push(acc);
            acc += c;
        }
        let images = self
            .letters
            .iter()
            .map(|&l| {
                let slot = next[l as usize];
                next[l as usize] += 1;
                slot
            })
            .collect();
        Permutation::from_zero_based_unchecked(images)
    }

    /// Left inverse of [`PathWord::iota`]; rejects permutations outside the
    /// principal ideal that is the image of `L(v)`.
    pub fn iota_inv(v: &MultVector, sigma: &Permutation) -> Result<PathWord> {
        if sigma.size() != v.k() {
            return Err(Error::Mismatch {
                what: "word length",
                left: v.k().to_string(),
                right: sigma.size().to_string(),
            });
        }
        let bottom = bottom(v);
        let letters: Vec<u16> = sigma.images().iter().map(|&s| bottom.letters[s]).collect();
        let mut last = alloc::vec![None::<usize>; v.len()];
        for (i, &l) in letters.iter().enumerate() {
            let s = sigma.images()[i];
            if let Some(prev) = last[l as usize] {
                if prev > s {
                    return Err(Error::NotInIdeal(sigma.to_string()));
                }
            }
            last[l as usize] = Some(s);
        }
        Ok(PathWord { n: v.len(), letters })
    }

    /// Join in `L(v)` through `ι` and the clopen calculus of `Perm(k)`.
    pub fn join(&self, other: &PathWord) -> Result<PathWord> {
        self.check_same_parent(other)?;
        let x = self.iota().inversions().join(&other.iota().inversions())?;
        PathWord::iota_inv(&self.parent(), &x.to_permutation()?)
    }

    /// Meet in `L(v)` through `ι` and the clopen calculus of `Perm(k)`.
    pub fn meet(&self, other: &PathWord) -> Result<PathWord> {
        self.check_same_parent(other)?;
        let x = self.iota().inversions().meet(&other.iota().inversions())?;
        PathWord::iota_inv(&self.parent(), &x.to_permutation()?)
    }
}

/// Two-letter path order on the subwords over letters `l < m`: every prefix
/// of `w` holds at most as many `m`s as the matching prefix of `u`.
fn pair_leq(w: &[u16], u: &[u16], l: u16, m: u16) -> bool {
    let mut wi = w.iter().filter(|&&c| c == l || c == m);
    let mut ui = u.iter().filter(|&&c| c == l || c == m);
    let (mut wm, mut um) = (0usize, 0usize);
    loop {
        match (wi.next(), ui.next()) {
            (Some(&a), Some(&b)) => {
                wm += (a == m) as usize;
                um += (b == m) as usize;
                if wm > um {
                    return false;
                }
            }
            _ => return true,
        }
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 26 {
            for &l in &self.letters {
                write!(f, "{}", (b'a' + l as u8) as char)?;
            }
            Ok(())
        } else {
            for (i, &l) in self.letters.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", l + 1)?;
            }
            Ok(())
        }
    }
}

/// `a_1^{v_1} … a_n^{v_n}`.
pub fn bottom(v: &MultVector) -> PathWord {
    let mut letters = Vec::with_capacity(v.k());
    for (i, &c) in v.entries().iter().enumerate() {
        letters.extend(core::iter::repeat_n(i as u16, c));
    }
    PathWord { n: v.len(), letters }
}

/// `a_n^{v_n} … a_1^{v_1}`.
pub fn top(v: &MultVector) -> PathWord {
    let mut w = bottom(v);
    w.letters.reverse();
    w
}

/// Every word of `L(v)` once, in lexicographic order.
pub fn enumerate(v: &MultVector, caps: &Caps) -> Result<Vec<PathWord>> {
    if v.k() > caps.max_k {
        return Err(Error::Cap { what: "word length k", limit: caps.max_k, found: v.k() });
    }
    let mut cur = bottom(v).letters;
    let mut out = Vec::new();
    loop {
        out.push(PathWord { n: v.len(), letters: cur.clone() });
        if !next_permutation(&mut cur) {
            return Ok(out);
        }
    }
}

/// `L(v)` as a [`Lattice`] over [`PathWord`]s; operations panic on words
/// from another lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multinomial {
    pub v: MultVector,
}

impl Lattice for Multinomial {
    type Elem = PathWord;

    fn join(&self, a: &PathWord, b: &PathWord) -> PathWord {
        a.join(b).expect("words belong to the same L(v)")
    }

    fn meet(&self, a: &PathWord, b: &PathWord) -> PathWord {
        a.meet(b).expect("words belong to the same L(v)")
    }

    fn leq(&self, a: &PathWord, b: &PathWord) -> bool {
        a.leq(b).expect("words belong to the same L(v)")
    }
}

/// `L(v)` materialized as a [`FiniteLattice`] whose element `i` is
/// `words[i]`.
#[derive(Clone, Debug)]
pub struct Materialized {
    pub v: MultVector,
    pub lattice: FiniteLattice,
    pub words: Vec<PathWord>,
    index: BTreeMap<PathWord, usize>,
}

impl Materialized {
    pub fn index_of(&self, w: &PathWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Builds the element list and the Hasse diagram from the rewrite covers;
/// the order and the operation tables are then derived by the generic
/// finite-lattice construction, independently of [`PathWord::join`].
pub fn to_finite_lattice(v: &MultVector, caps: &Caps) -> Result<Materialized> {
    let size = v.lattice_size().unwrap_or(u128::MAX);
    if size > caps.max_elements as u128 {
        return Err(Error::Cap {
            what: "lattice size",
            limit: caps.max_elements,
            found: usize::try_from(size).unwrap_or(usize::MAX),
        });
    }
    let words = enumerate(v, caps)?;
    let index: BTreeMap<PathWord, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut covers = Vec::new();
    for (i, w) in words.iter().enumerate() {
        for u in w.upper_covers() {
            covers.push((i, index[&u]));
        }
    }
    let labels = words.iter().map(|w| w.to_string()).collect();
    let lattice = FiniteLattice::from_covers(labels, &covers)?;
    Ok(Materialized { v: v.clone(), lattice, words, index })
}
