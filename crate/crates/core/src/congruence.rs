//! Congruences of `L(v)` as sets of join irreducibles closed under `D`:
//! two words are congruent when they dominate the same members of the set.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::irreducibles::{d_rel, enumerate_ji, plan_width, IrrVector, Kind};
use crate::lattice::{Equivalence, FiniteLattice};
use crate::multinomial::{to_finite_lattice, Materialized, MultVector, PathWord};
use crate::Caps;

/// A set `S` of join irreducibles of `L(v)` closed under `D`: `j ∈ S` and
/// `j D k` imply `k ∈ S`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct JiSet {
    v: MultVector,
    members: BTreeSet<IrrVector>,
}

impl JiSet {
    pub fn new(v: &MultVector, members: impl IntoIterator<Item = IrrVector>) -> Result<Self> {
        let members: BTreeSet<IrrVector> = members.into_iter().collect();
        for m in &members {
            if m.parent() != v || m.kind() != Kind::Join || m.is_degenerate() {
                return Err(Error::Relation { what: "not a join irreducible of L(v)", detail: m.to_string() });
            }
        }
        let set = JiSet { v: v.clone(), members };
        if let Some((j, k)) = set.first_escape() {
            return Err(Error::NotDClosed(alloc::format!("{set} contains {j}, {j} D {k}, but lacks {k}")));
        }
        Ok(set)
    }

    /// Parses semicolon-separated vectors, e.g. `"0,3;1,2"`; `"-"` or an
    /// empty string is the empty set.
    pub fn parse(v: &MultVector, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Self::new(v, []);
        }
        let members = s.split(';').map(|t| IrrVector::parse(v, t, Kind::Join)).collect::<Result<Vec<_>>>()?;
        Self::new(v, members)
    }

    /// All join irreducibles.
    pub fn all(v: &MultVector) -> Self {
        JiSet { v: v.clone(), members: enumerate_ji(v).into_iter().collect() }
    }

    fn first_escape(&self) -> Option<(IrrVector, IrrVector)> {
        let all = enumerate_ji(&self.v);
        for j in &self.members {
            for k in &all {
                if !self.members.contains(k) && d_rel(j, k).unwrap_or(false) {
                    return Some((j.clone(), k.clone()));
                }
            }
        }
        None
    }

    pub fn parent(&self) -> &MultVector {
        &self.v
    }

    pub fn members(&self) -> &BTreeSet<IrrVector> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl core::fmt::Display for JiSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.members.is_empty() {
            return f.write_str("-");
        }
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            let x: Vec<alloc::string::String> = m.x().iter().map(|c| c.to_string()).collect();
            f.write_str(&x.join(","))?;
        }
        Ok(())
    }
}

/// Every `D`-closed set of join irreducibles, ordered by size and then
/// lexicographically.
///
/// Irreducibles are decided in order of increasing plan width, so every
/// `D`-successor of a candidate is already decided when it is reached.
pub fn d_closed_sets(v: &MultVector, caps: &Caps) -> Result<Vec<JiSet>> {
    let mut ji = enumerate_ji(v);
    if ji.len() > caps.max_ji {
        return Err(Error::Cap { what: "number of join irreducibles", limit: caps.max_ji, found: ji.len() });
    }
    ji.sort_by_key(|x| (plan_width(x).expect("non-degenerate"), x.clone()));
    let succ: Vec<Vec<usize>> = ji
        .iter()
        .map(|j| (0..ji.len()).filter(|&k| d_rel(j, &ji[k]).expect("same parent")).collect())
        .collect();
    let mut out = Vec::new();
    let mut chosen = alloc::vec![false; ji.len()];
    fn go(i: usize, succ: &[Vec<usize>], chosen: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if i == chosen.len() {
            out.push((0..chosen.len()).filter(|&k| chosen[k]).collect());
            return;
        }
        go(i + 1, succ, chosen, out);
        if succ[i].iter().all(|&k| k < i && chosen[k]) {
            chosen[i] = true;
            go(i + 1, succ, chosen, out);
            chosen[i] = false;
        }
    }
    go(0, &succ, &mut chosen, &mut out);
    let mut sets: Vec<JiSet> = out
        .into_iter()
        .map(|ix| JiSet { v: v.clone(), members: ix.into_iter().map(|k| ji[k].clone()).collect() })
        .collect();
    sets.sort_by(|a, b| (a.len(), &a.members).cmp(&(b.len(), &b.members)));
    Ok(sets)
}

/// A partition of `L(v)` into blocks of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub v: MultVector,
    /// Blocks in order of their lexicographically least word; each block
    /// is sorted.
    pub blocks: Vec<Vec<PathWord>>,
}

impl Partition {
    pub fn from_equivalence(m: &Materialized, eq: &Equivalence) -> Self {
        let blocks = eq.blocks().into_iter().map(|b| b.into_iter().map(|i| m.words[i].clone()).collect()).collect();
        Partition { v: m.v.clone(), blocks }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// `w ≡ u` iff `{z ∈ S | z ≤ w} = {z ∈ S | z ≤ u}`, on a materialized `L(v)`.
pub fn equivalence_from_s(m: &Materialized, s: &JiSet) -> Equivalence {
    let members: Vec<usize> = s
        .members
        .iter()
        .map(|j| m.index_of(&j.word()).expect("join irreducible is an element"))
        .collect();
    let l = &m.lattice;
    Equivalence::from_key(m.len(), |e| members.iter().map(|&j| l.leq(j, e)).collect::<Vec<bool>>())
}

fn checked_equivalence(m: &Materialized, s: &JiSet) -> Result<Equivalence> {
    let eq = equivalence_from_s(m, s);
    if !m.lattice.is_congruence(&eq) {
        return Err(Error::Inconsistency(alloc::format!("the relation induced by {s} is not a congruence")));
    }
    Ok(eq)
}

/// The congruence of `L(v)` determined by a `D`-closed set, verified to be
/// compatible with join and meet.
pub fn congruence_from_s(s: &JiSet, caps: &Caps) -> Result<Partition> {
    let m = to_finite_lattice(&s.v, caps)?;
    let eq = checked_equivalence(&m, s)?;
    Ok(Partition::from_equivalence(&m, &eq))
}

/// `L(v)/θ_S`, each block labelled by its least word.
pub fn quotient(s: &JiSet, caps: &Caps) -> Result<FiniteLattice> {
    let m = to_finite_lattice(&s.v, caps)?;
    let eq = checked_equivalence(&m, s)?;
    m.lattice.quotient(&eq)
}

/// Whether every block is connected under swaps of two adjacent distinct
/// letters.
pub fn check_parikh_connectivity(p: &Partition) -> bool {
    p.blocks.iter().all(|block| {
        let members: BTreeMap<&PathWord, usize> = block.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut seen = alloc::vec![false; block.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            let w = &block[i];
            for u in w.upper_covers().into_iter().chain(w.lower_covers()) {
                if let Some(&k) = members.get(&u) {
                    if !seen[k] {
                        seen[k] = true;
                        queue.push_back(k);
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    })
}
