//! Join and meet irreducibles of `L(v)` in vector form, their principal
//! plans, the arrow relations, `κ`, and the join dependency relation.
//!
//! A join irreducible is the word `⟨x⟩ = a_1^{x_1}…a_n^{x_n} a_1^{v_1-x_1}…a_n^{v_n-x_n}`
//! and a meet irreducible is `[y] = a_n^{y_n}…a_1^{y_1} a_n^{v_n-y_n}…a_1^{v_1-y_1}`.
//! Indices in the public API (plans, cover tags) are one-based; vectors
//! are stored as plain slices indexed from zero.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::lattice::longest_simple_path;
use crate::multinomial::{MultVector, PathWord};
use crate::perm::join_usizes;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Join,
    Meet,
}

/// `(a, b)` with `a < b`, one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrincipalPlan {
    pub a: usize,
    pub b: usize,
}

impl PrincipalPlan {
    pub fn contains(&self, other: &PrincipalPlan) -> bool {
        self.a <= other.a && other.b <= self.b
    }
}

impl fmt::Display for PrincipalPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// The vector `x` with `0 ≤ x ≤ v` encoding `⟨x⟩` or `[x]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrVector {
    v: MultVector,
    x: Vec<usize>,
    kind: Kind,
}

impl IrrVector {
    pub fn new(v: &MultVector, x: Vec<usize>, kind: Kind) -> Result<Self> {
        if x.len() != v.len() {
            return Err(Error::Mismatch { what: "vector length", left: join_usizes(&x, ","), right: v.to_string() });
        }
        if let Some(i) = (0..x.len()).find(|&i| x[i] > v.entries()[i]) {
            return Err(Error::Index { what: "vector entry", value: x[i], bound: v.entries()[i] });
        }
        Ok(IrrVector { v: v.clone(), x, kind })
    }

    pub fn join_irr(v: &MultVector, x: Vec<usize>) -> Result<Self> {
        Self::new(v, x, Kind::Join)
    }

    pub fn meet_irr(v: &MultVector, x: Vec<usize>) -> Result<Self> {
        Self::new(v, x, Kind::Meet)
    }

    /// Parses `"0,3"` as a vector over `v`.
    pub fn parse(v: &MultVector, s: &str, kind: Kind) -> Result<Self> {
        let x = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse { what: "vector", input: s.to_string() })?;
        Self::new(v, x, kind)
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn parent(&self) -> &MultVector {
        &self.v
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    fn vi(&self, i: usize) -> usize {
        self.v.entries()[i]
    }

    /// Zero-based plan, if the vector is non-degenerate.
    fn plan0(&self) -> Option<(usize, usize)> {
        let n = self.x.len();
        let (lo, hi) = match self.kind {
            Kind::Join => (
                (0..n).find(|&i| self.x[i] < self.vi(i)),
                (0..n).rev().find(|&i| self.x[i] > 0),
            ),
            Kind::Meet => (
                (0..n).find(|&i| self.x[i] > 0),
                (0..n).rev().find(|&i| self.x[i] < self.vi(i)),
            ),
        };
        match (lo, hi) {
            (Some(a), Some(b)) if a < b => Some((a, b)),
            _ => None,
        }
    }

    /// `⟨x⟩ = ⊥` or `[x] = ⊤`.
    pub fn is_degenerate(&self) -> bool {
        self.plan0().is_none()
    }

    /// The principal plan `(min∨ x, max∨ x)`, or `(min∧ x, max∧ x)` for meet
    /// irreducibles.
    pub fn plan(&self) -> Result<PrincipalPlan> {
        self.plan0().map(|(a, b)| PrincipalPlan { a: a + 1, b: b + 1 }).ok_or_else(|| Error::Degenerate(self.to_string()))
    }

    /// The word `⟨x⟩` or `[x]`.
    pub fn word(&self) -> PathWord {
        let n = self.x.len();
        let mut letters = Vec::with_capacity(self.v.k());
        let mut push = |i: usize, c: usize| letters.extend(core::iter::repeat_n(i as u16, c));
        match self.kind {
            Kind::Join => {
                (0..n).for_each(|i| push(i, self.x[i]));
                (0..n).for_each(|i| push(i, self.vi(i) - self.x[i]));
            }
            Kind::Meet => {
                (0..n).rev().for_each(|i| push(i, self.x[i]));
                (0..n).rev().for_each(|i| push(i, self.vi(i) - self.x[i]));
            }
        }
        PathWord::from_letters_unchecked(n, letters)
    }

    /// Recovers `x` from a word with exactly one descent.
    pub fn from_ji_word(w: &PathWord) -> Result<Self> {
        Self::from_word(w, Kind::Join)
    }

    /// Recovers `y` from a word with exactly one ascent.
    pub fn from_mi_word(w: &PathWord) -> Result<Self> {
        Self::from_word(w, Kind::Meet)
    }

    fn from_word(w: &PathWord, kind: Kind) -> Result<Self> {
        let l = w.letters();
        let breaks: Vec<usize> = (1..l.len())
            .filter(|&i| match kind {
                Kind::Join => l[i - 1] > l[i],
                Kind::Meet => l[i - 1] < l[i],
            })
            .collect();
        if breaks.len() != 1 {
            let kind = if kind == Kind::Join { "join" } else { "meet" };
            return Err(Error::NotIrreducible { kind, word: w.to_string() });
        }
        let mut x = alloc::vec![0; w.alphabet_size()];
        for &c in &l[..breaks[0]] {
            x[c as usize] += 1;
        }
        Self::new(&w.parent(), x, kind)
    }

    fn check_pair(&self, other: &Self, left: Kind, right: Kind) -> Result<()> {
        if self.v != other.v {
            return Err(Error::Mismatch { what: "parent vector", left: self.v.to_string(), right: other.v.to_string() });
        }
        if self.kind != left || other.kind != right {
            return Err(Error::Relation { what: "wrong irreducible kind", detail: alloc::format!("{self} / {other}") });
        }
        Ok(())
    }

    fn nondegenerate_plan(&self) -> Result<(usize, usize)> {
        self.plan0().ok_or_else(|| Error::Degenerate(self.to_string()))
    }
}

impl fmt::Display for IrrVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join_usizes(&self.x, ","))
    }
}

/// Whether `x` and `y` agree strictly between `lo` and `hi` (zero-based).
fn agree_inside(x: &[usize], y: &[usize], lo: usize, hi: usize) -> bool {
    (lo + 1..hi).all(|i| x[i] == y[i])
}

/// `⟨x⟩ ↗ [y]`: with `(c, d)` the plan of `[y]`, `y_c = x_c + 1`,
/// `y_d = x_d - 1` and `x = y` strictly inside.
pub fn arrow_up(x: &IrrVector, y: &IrrVector) -> Result<bool> {
    x.check_pair(y, Kind::Join, Kind::Meet)?;
    let Some((c, d)) = y.plan0() else { return Ok(false) };
    if x.is_degenerate() {
        return Ok(false);
    }
    Ok(y.x[c] == x.x[c] + 1 && y.x[d] + 1 == x.x[d] && agree_inside(&x.x, &y.x, c, d))
}

/// `[y] ↘ ⟨x⟩`: with `(a, b)` the plan of `⟨x⟩`, `x_a = y_a - 1`,
/// `x_b = y_b + 1` and `x = y` strictly inside.
pub fn arrow_down(y: &IrrVector, x: &IrrVector) -> Result<bool> {
    x.check_pair(y, Kind::Join, Kind::Meet)?;
    let Some((a, b)) = x.plan0() else { return Ok(false) };
    if y.is_degenerate() {
        return Ok(false);
    }
    Ok(x.x[a] + 1 == y.x[a] && x.x[b] == y.x[b] + 1 && agree_inside(&x.x, &y.x, a, b))
}

/// The meet irreducible with plan `(c, d)` (zero-based) agreeing with `x`
/// strictly inside, `y_c = x_c + 1`, `y_d = x_d - 1`, and extremal outside.
fn meet_with_plan(x: &IrrVector, c: usize, d: usize) -> IrrVector {
    let n = x.x.len();
    let y = (0..n)
        .map(|i| match i {
            _ if i < c => 0,
            _ if i == c => x.x[c] + 1,
            _ if i < d => x.x[i],
            _ if i == d => x.x[d] - 1,
            _ => x.vi(i),
        })
        .collect();
    IrrVector { v: x.v.clone(), x: y, kind: Kind::Meet }
}

/// `κ(⟨x⟩)`, the unique `[y]` with `⟨x⟩ ↗ [y] ↘ ⟨x⟩`.
pub fn kappa(x: &IrrVector) -> Result<IrrVector> {
    if x.kind != Kind::Join {
        return Err(Error::Relation { what: "kappa expects a join irreducible", detail: x.to_string() });
    }
    let (a, b) = x.nondegenerate_plan()?;
    Ok(meet_with_plan(x, a, b))
}

/// `κ^d([y])`, the unique `⟨x⟩` with `[y] ↘ ⟨x⟩ ↗ [y]`.
pub fn kappa_d(y: &IrrVector) -> Result<IrrVector> {
    if y.kind != Kind::Meet {
        return Err(Error::Relation { what: "kappa_d expects a meet irreducible", detail: y.to_string() });
    }
    let (c, d) = y.nondegenerate_plan()?;
    let n = y.x.len();
    let x = (0..n)
        .map(|i| match i {
            _ if i < c => y.vi(i),
            _ if i == c => y.x[c] - 1,
            _ if i < d => y.x[i],
            _ if i == d => y.x[d] + 1,
            _ => 0,
        })
        .collect();
    Ok(IrrVector { v: y.v.clone(), x, kind: Kind::Join })
}

/// `d_e = x_e - z_e` and `d_f = z_f - x_f` when `⟨x⟩ ⊴• ⟨z⟩`, along with
/// both zero-based plans.
fn dbullet_parts(x: &IrrVector, z: &IrrVector) -> Result<Option<((usize, usize), (usize, usize), usize, usize)>> {
    x.check_pair(z, Kind::Join, Kind::Join)?;
    let (a, b) = x.nondegenerate_plan()?;
    let (e, f) = z.nondegenerate_plan()?;
    if e < a || f > b || !agree_inside(&x.x, &z.x, e, f) {
        return Ok(None);
    }
    let de = x.x[e].wrapping_sub(z.x[e]);
    let df = z.x[f].wrapping_sub(x.x[f]);
    let ok = de <= 1 && df <= 1 && (e != a || de == 0) && (f != b || df == 0);
    Ok(ok.then_some(((a, b), (e, f), de, df)))
}

/// `⟨x⟩ ⊴• ⟨z⟩`.
pub fn dbullet(x: &IrrVector, z: &IrrVector) -> Result<bool> {
    Ok(dbullet_parts(x, z)?.is_some())
}

/// The join dependency relation `⟨x⟩ D ⟨z⟩`: `⊴•` between distinct vectors.
pub fn d_rel(x: &IrrVector, z: &IrrVector) -> Result<bool> {
    Ok(x != z && dbullet(x, z)?)
}

/// The reflexive-transitive closure of `D`, which coincides with `⊴•`.
pub fn unlhd(x: &IrrVector, z: &IrrVector) -> Result<bool> {
    dbullet(x, z)
}

/// A meet irreducible `[y]` with `⟨x⟩ ↗ [y] ↘ ⟨z⟩`, whose plan is `(e, f)`,
/// `(a, f)`, `(e, b)` or `(a, b)` according to `(d_e, d_f)`.
pub fn witness_m(x: &IrrVector, z: &IrrVector) -> Result<IrrVector> {
    let ((a, b), (e, f), de, df) = dbullet_parts(x, z)?.ok_or_else(|| Error::Relation {
        what: "not related by dbullet",
        detail: alloc::format!("{x} / {z}"),
    })?;
    let c = if de == 0 { e } else { a };
    let d = if df == 0 { f } else { b };
    let y = meet_with_plan(x, c, d);
    if !(arrow_up(x, &y)? && arrow_down(&y, z)?) {
        return Err(Error::Inconsistency(alloc::format!("witness {y} for {x} D {z} fails the arrow checks")));
    }
    Ok(y)
}

/// Classification of a `D`-edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoverTag {
    LA,
    LB,
    RA,
    RB,
    Other,
}

impl fmt::Display for CoverTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverTag::LA => "LA",
            CoverTag::LB => "LB",
            CoverTag::RA => "RA",
            CoverTag::RB => "RB",
            CoverTag::Other => "other",
        })
    }
}

fn require_d(x: &IrrVector, z: &IrrVector) -> Result<()> {
    if !d_rel(x, z)? {
        return Err(Error::Relation { what: "not a D-pair", detail: alloc::format!("{x} / {z}") });
    }
    Ok(())
}

/// `⟨x⟩ A ⟨z⟩`: `⟨x⟩ ↗ κ(⟨z⟩)`.
pub fn is_type_a(x: &IrrVector, z: &IrrVector) -> Result<bool> {
    arrow_up(x, &kappa(z)?)
}

/// `⟨x⟩ B ⟨z⟩`: `κ(⟨x⟩) ↘ ⟨z⟩`.
pub fn is_type_b(x: &IrrVector, z: &IrrVector) -> Result<bool> {
    arrow_down(&kappa(x)?, z)
}

/// Left (shared right endpoint) or right (shared left endpoint) move,
/// combined with type A or B; `Other` when no endpoint is shared.
pub fn cover_type(x: &IrrVector, z: &IrrVector) -> Result<CoverTag> {
    require_d(x, z)?;
    let (a, b) = x.nondegenerate_plan()?;
    let (e, f) = z.nondegenerate_plan()?;
    let (ta, tb) = (is_type_a(x, z)?, is_type_b(x, z)?);
    Ok(match (f == b && e > a, e == a && f < b, ta, tb) {
        (true, _, true, _) => CoverTag::LA,
        (true, _, _, true) => CoverTag::LB,
        (_, true, true, _) => CoverTag::RA,
        (_, true, _, true) => CoverTag::RB,
        _ => CoverTag::Other,
    })
}

/// The number of letters of positive multiplicity in `[lo, hi]`, minus one.
fn width(v: &MultVector, lo: usize, hi: usize) -> usize {
    (lo..=hi).filter(|&i| v.entries()[i] > 0).count() - 1
}

/// Plan width counted in letters that occur.
pub fn plan_width(x: &IrrVector) -> Result<usize> {
    let (a, b) = x.nondegenerate_plan()?;
    Ok(width(&x.v, a, b))
}

fn left_step(x: &IrrVector, a: usize, b: usize) -> Option<IrrVector> {
    let a1 = (a + 1..b).find(|&i| x.vi(i) > 0)?;
    let n = x.x.len();
    let y = (0..n)
        .map(|i| match i {
            _ if i < a1 => x.vi(i),
            _ if i == a1 && x.x[a1] == x.vi(a1) => x.x[a1] - 1,
            _ if i <= b => x.x[i],
            _ => 0,
        })
        .collect();
    Some(IrrVector { v: x.v.clone(), x: y, kind: Kind::Join })
}

fn right_step(x: &IrrVector, a: usize, b: usize) -> Option<IrrVector> {
    let b1 = (a + 1..b).rev().find(|&i| x.vi(i) > 0)?;
    let n = x.x.len();
    let y = (0..n)
        .map(|i| match i {
            _ if i < a => x.vi(i),
            _ if i < b1 => x.x[i],
            _ if i == b1 && x.x[b1] == 0 => 1,
            _ if i == b1 => x.x[b1],
            _ => 0,
        })
        .collect();
    Some(IrrVector { v: x.v.clone(), x: y, kind: Kind::Join })
}

fn check_factor(x: &IrrVector, y: IrrVector, z: &IrrVector) -> Result<IrrVector> {
    if d_rel(x, &y)? && d_rel(&y, z)? {
        Ok(y)
    } else {
        Err(Error::Inconsistency(alloc::format!("{y} does not factor {x} D {z}")))
    }
}

/// For a left move `⟨x⟩ D ⟨z⟩` (shared right endpoint) whose plan widths
/// differ by at least two, the `⟨y⟩` of plan `(a+1, b)` with
/// `⟨x⟩ D ⟨y⟩ D ⟨z⟩`. With zero multiplicities `a+1` is the next letter
/// that occurs.
pub fn left_move_factor(x: &IrrVector, z: &IrrVector) -> Result<IrrVector> {
    require_d(x, z)?;
    let (a, b) = x.nondegenerate_plan()?;
    let (e, f) = z.nondegenerate_plan()?;
    if f != b || width(&x.v, a, b) < width(&z.v, e, f) + 2 {
        return Err(Error::Relation { what: "not a factorable left move", detail: alloc::format!("{x} / {z}") });
    }
    check_factor(x, left_step(x, a, b).expect("width at least two"), z)
}

/// The mirror of [`left_move_factor`]: for a shared left endpoint, the
/// `⟨y⟩` of plan `(a, b-1)`.
pub fn right_move_factor(x: &IrrVector, z: &IrrVector) -> Result<IrrVector> {
    require_d(x, z)?;
    let (a, b) = x.nondegenerate_plan()?;
    let (e, f) = z.nondegenerate_plan()?;
    if e != a || width(&x.v, a, b) < width(&z.v, e, f) + 2 {
        return Err(Error::Relation { what: "not a factorable right move", detail: alloc::format!("{x} / {z}") });
    }
    check_factor(x, right_step(x, a, b).expect("width at least two"), z)
}

/// Any `D`-edge whose plan widths differ by at least two factors through an
/// intermediate join irreducible whose width is one less than `x`'s.
pub fn factor(x: &IrrVector, z: &IrrVector) -> Result<IrrVector> {
    require_d(x, z)?;
    let (a, b) = x.nondegenerate_plan()?;
    let (e, f) = z.nondegenerate_plan()?;
    if width(&x.v, a, b) < width(&z.v, e, f) + 2 {
        return Err(Error::Relation { what: "nothing to factor", detail: alloc::format!("{x} / {z}") });
    }
    [left_step(x, a, b), right_step(x, a, b)]
        .into_iter()
        .flatten()
        .find(|y| d_rel(x, y).unwrap_or(false) && d_rel(y, z).unwrap_or(false))
        .ok_or_else(|| Error::Inconsistency(alloc::format!("no factorization of {x} D {z}")))
}

/// Every vector `0 ≤ x ≤ v` in lexicographic order.
fn all_vectors(v: &MultVector) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0; v.len()];
    loop {
        out.push(cur.clone());
        let mut i = v.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < v.entries()[i] {
                cur[i] += 1;
                cur[i + 1..].iter_mut().for_each(|c| *c = 0);
                break;
            }
        }
    }
}

fn enumerate_kind(v: &MultVector, kind: Kind) -> Vec<IrrVector> {
    all_vectors(v)
        .into_iter()
        .map(|x| IrrVector { v: v.clone(), x, kind })
        .filter(|x| !x.is_degenerate())
        .collect()
}

/// Join irreducibles of `L(v)`, lexicographic in `x`.
pub fn enumerate_ji(v: &MultVector) -> Vec<IrrVector> {
    enumerate_kind(v, Kind::Join)
}

/// Meet irreducibles of `L(v)`, lexicographic in `y`.
pub fn enumerate_mi(v: &MultVector) -> Vec<IrrVector> {
    enumerate_kind(v, Kind::Meet)
}

/// `Π (v_i + 1) - (1 + Σ v_i)`.
pub fn count_ji(v: &MultVector) -> u128 {
    let prod: u128 = v.entries().iter().map(|&x| x as u128 + 1).product();
    prod - 1 - v.k() as u128
}

/// The join dependency graph on the join irreducibles of `L(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGraph {
    pub nodes: Vec<IrrVector>,
    /// `(source, target, tag)` as node indices, sorted.
    pub edges: Vec<(usize, usize, CoverTag)>,
}

impl DGraph {
    pub fn new(v: &MultVector) -> Self {
        let nodes = enumerate_ji(v);
        let mut edges = Vec::new();
        for (i, x) in nodes.iter().enumerate() {
            for (j, z) in nodes.iter().enumerate() {
                if d_rel(x, z).expect("same parent") {
                    edges.push((i, j, cover_type(x, z).expect("D-pair")));
                }
            }
        }
        DGraph { nodes, edges }
    }

    pub fn index_of(&self, x: &IrrVector) -> Option<usize> {
        self.nodes.binary_search(x).ok()
    }

    /// Length of a longest simple directed path and one such path.
    pub fn longest_path(&self) -> (usize, Vec<usize>) {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(a, b, _)| (a, b)).collect();
        longest_simple_path(self.nodes.len(), &edges)
    }
}

/// The `D`-chain `⟨(0,…,0,v_n)⟩ D ⟨(v_1,0,…,0,v_n)⟩ D ⟨(v_1,v_2,0,…,v_n)⟩ …`
/// through the letters that occur; it has `dim - 2` edges.
pub fn witness_chain(v: &MultVector) -> Vec<IrrVector> {
    let s = v.support();
    if s.len() < 2 {
        return Vec::new();
    }
    let last = s[s.len() - 1];
    (0..s.len() - 1)
        .map(|t| {
            let mut x = alloc::vec![0; v.len()];
            for &i in &s[..t] {
                x[i] = v.entries()[i];
            }
            x[last] = v.entries()[last];
            IrrVector { v: v.clone(), x, kind: Kind::Join }
        })
        .collect()
}

/// A join irreducible of `Perm(n)` as `(a, b, D_a)`: its plan and the
/// letters strictly inside the plan that sit in the first run.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PermTriple {
    pub a: usize,
    pub b: usize,
    pub inner: Vec<usize>,
}

pub fn perm_ji_triple(x: &IrrVector) -> Result<PermTriple> {
    if x.v.entries().iter().any(|&c| c != 1) {
        return Err(Error::Relation { what: "parent is not 1^n", detail: x.v.to_string() });
    }
    let p = x.plan()?;
    let inner = (p.a + 1..p.b).filter(|&i| x.x[i - 1] == 1).collect();
    Ok(PermTriple { a: p.a, b: p.b, inner })
}

impl PermTriple {
    /// `D` in triple form: `(c,d) ⊆ (a,b)`, `D_c = D_a ∩ (c,d)`, distinct.
    pub fn d_rel(&self, other: &PermTriple) -> bool {
        self != other
            && self.a <= other.a
            && other.b <= self.b
            && self.inner.iter().copied().filter(|&i| other.a < i && i < other.b).eq(other.inner.iter().copied())
    }
}
