//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure or on exceeding a runtime limit.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use mulat_core::congruence::{check_parikh_connectivity, congruence_from_s, d_closed_sets, quotient, JiSet};
use mulat_core::irreducibles::{d_rel, enumerate_ji, enumerate_mi, kappa, kappa_d, DGraph};
use mulat_core::lattice::{fixtures, sd_eval, FiniteLattice};
use mulat_core::multinomial::{enumerate, to_finite_lattice, Materialized, MultVector, PathWord};
use mulat_core::perm::{InversionSet, Permutation};
use mulat_core::sd_engine::{perm_witness, psi, theorem_check, Method};
use mulat_core::Caps;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn mv(s: &str) -> MultVector {
    s.parse().unwrap()
}

fn caps() -> Caps {
    Caps::default()
}

fn mat(v: &MultVector) -> Materialized {
    to_finite_lattice(v, &caps()).unwrap()
}

/// Index of the ψ-image of a clopen set in the materialized lattice.
fn witness_indices(m: &Materialized, n: usize) -> (usize, usize, usize) {
    let t = perm_witness(n).unwrap();
    let idx = |s: &InversionSet| m.index_of(&psi(&m.v, &s.to_permutation().unwrap()).unwrap()).unwrap();
    (idx(&t.x), idx(&t.y), idx(&t.z))
}

/// Exhaustive holding side plus the witness failing in one of the two
/// orderings.
fn exhaustive_theorem(s: &str) -> Outcome {
    let v = mv(s);
    let dim = v.dimension();
    let m = mat(&v);
    let l = &m.lattice;
    ensure!(l.sd_holds(dim - 1), "SD_{}(meet) fails in L({s})", dim - 1);
    let (x, y, z) = witness_indices(&m, dim);
    let straight = l.sd_fails_at(x, y, z, dim - 2);
    let swapped = l.sd_fails_at(x, z, y, dim - 2);
    ensure!(straight || swapped, "witness satisfies SD_{}(meet) in both orderings", dim - 2);
    let r = theorem_check(&v, Some(Method::Exhaustive), &caps()).map_err(|e| e.to_string())?;
    ensure!(r.confirmed() && r.sd_fail_level == dim - 2 && r.sd_hold_level == dim - 1, "report {r:?}");
    Ok(format!("L({s}): {} elements, {}^3 triples", l.len(), l.len()))
}

fn c1() -> Outcome {
    let a = exhaustive_theorem("1,1,1")?;
    let b = exhaustive_theorem("2,1,1")?;
    Ok(format!("{a}; {b}"))
}

fn c2() -> Outcome {
    let out = exhaustive_theorem("1,1,1,1")?;
    ensure!(out.contains("24 elements"), "unexpected size: {out}");
    Ok(out)
}

fn c3() -> Outcome {
    let v = mv("1,1,2,1,1");
    ensure!(v.lattice_size() == Some(360), "size {:?}", v.lattice_size());
    let len = DGraph::new(&v).longest_path().0;
    ensure!(len == 3, "longest D-path {len}");
    let r = theorem_check(&v, Some(Method::DPathBound), &caps()).map_err(|e| e.to_string())?;
    ensure!(r.longest_d_path == Some(3) && r.holds, "holding side {r:?}");
    ensure!(r.fails && r.sd_fail_level == 3, "SD_3(meet) does not fail on the witness: {r:?}");
    Ok(format!("longest D-path 3, witness fails SD_3 ({})", if r.swapped { "swapped" } else { "straight" }))
}

const D_SET: [&str; 6] = ["1,1,1", "1,1,1,1", "2,1,1", "1,2,1", "2,2,1,1", "1,1,2,1,1"];

fn c4() -> Outcome {
    let mut total = 0;
    for s in D_SET {
        let v = mv(s);
        let m = mat(&v);
        let ji = enumerate_ji(&v);
        let idx = |x: &mulat_core::irreducibles::IrrVector| m.index_of(&x.word()).unwrap();
        let mut explicit = BTreeSet::new();
        for x in &ji {
            for z in &ji {
                if d_rel(x, z).unwrap() {
                    explicit.insert((idx(x), idx(z)));
                }
            }
        }
        let brute: BTreeSet<(usize, usize)> = brute_d(&m.lattice).into_iter().collect();
        ensure!(explicit == brute, "L({s}): explicit {} pairs, brute force {}", explicit.len(), brute.len());
        total += brute.len();
    }
    Ok(format!("{total} D-pairs over 6 vectors"))
}

/// `j D k` iff `j ≠ k` and `j ↗ m ↘ k` for some meet irreducible `m`,
/// evaluated straight from the order.
fn brute_d(l: &FiniteLattice) -> Vec<(usize, usize)> {
    let n = l.len();
    let lower_covers = |e: usize| (0..n).filter(move |&u| l.is_cover(u, e));
    let upper_covers = |e: usize| (0..n).filter(move |&u| l.is_cover(e, u));
    let ji: Vec<usize> = (0..n).filter(|&e| lower_covers(e).count() == 1).collect();
    let mi: Vec<usize> = (0..n).filter(|&e| upper_covers(e).count() == 1).collect();
    let mut out = Vec::new();
    for &j in &ji {
        for &k in &ji {
            if j == k {
                continue;
            }
            let ks = lower_covers(k).next().unwrap();
            let hit = mi.iter().any(|&m| {
                let ms = upper_covers(m).next().unwrap();
                let up = !l.leq(j, m) && l.leq(j, ms);
                let down = !l.leq(k, m) && l.leq(ks, m);
                up && down
            });
            if hit {
                out.push((j, k));
            }
        }
    }
    out
}

fn c5() -> Outcome {
    let mut cases: Vec<(&str, Option<usize>)> = D_SET.iter().map(|s| (*s, None)).collect();
    cases.push(("3,3", Some(9)));
    cases.push(("1,1,1,1", Some(11)));
    for (s, expect) in cases {
        let v = mv(s);
        let e = v.entries();
        let formula = e.iter().map(|x| x + 1).product::<usize>() - (1 + e.iter().sum::<usize>());
        let n = enumerate_ji(&v).len();
        ensure!(n == formula, "L({s}): {n} join irreducibles, formula {formula}");
        if let Some(x) = expect {
            ensure!(n == x, "L({s}): {n} join irreducibles, expected {x}");
        }
        // Independently: words with exactly one descent.
        let scan = enumerate(&v, &caps()).unwrap().iter().filter(|w| w.descents() == 1).count();
        ensure!(scan == n, "L({s}): {scan} unique-descent words vs {n}");
    }
    Ok("formula and unique-descent scan agree on 8 vectors".into())
}

fn c6() -> Outcome {
    let o = Command::new(env!("CARGO_BIN_EXE_mulat"))
        .args(["kappa", "-v", "3,3", "aabbab"])
        .output()
        .map_err(|e| e.to_string())?;
    let out = String::from_utf8_lossy(&o.stdout);
    ensure!(o.status.success(), "exit {:?}: {}", o.status.code(), String::from_utf8_lossy(&o.stderr));
    ensure!(out == "baaabb\n", "printed {out:?}");
    Ok("kappa -v 3,3 aabbab -> baaabb".into())
}

/// All set partitions of `0..n` as block labels.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max {
            cur[i] = b;
            rec(i + 1, max.max(b + 1), cur, out);
        }
    }
    if n > 0 {
        rec(1, 1, &mut cur, &mut out);
    }
    out
}

/// Congruences by testing every partition for compatibility.
fn brute_congruence_count(l: &FiniteLattice) -> usize {
    let n = l.len();
    set_partitions(n)
        .into_iter()
        .filter(|p| {
            (0..n).all(|a| {
                (0..n).all(|b| {
                    p[a] != p[b]
                        || (0..n).all(|c| p[l.join(a, c)] == p[l.join(b, c)] && p[l.meet(a, c)] == p[l.meet(b, c)])
                })
            })
        })
        .count()
}

fn c7() -> Outcome {
    let mut notes = Vec::new();
    for (s, expect) in [("2,2", 16), ("1,1,1", 7)] {
        let v = mv(s);
        let l = mat(&v).lattice;
        let by_s = d_closed_sets(&v, &caps()).map_err(|e| e.to_string())?.len();
        let by_pairs = l.all_congruences().len();
        let by_partitions = brute_congruence_count(&l);
        ensure!(
            by_s == expect && by_pairs == expect && by_partitions == expect,
            "L({s}): D-closed {by_s}, generated {by_pairs}, partitions {by_partitions}, expected {expect}"
        );
        notes.push(format!("L({s}): {expect}"));
    }
    let v = mv("2,2");
    ensure!(DGraph::new(&v).edges.is_empty(), "D not empty on L(2,2)");
    Ok(notes.join(", "))
}

fn c8() -> Outcome {
    let v = mv("3,3");
    let s = JiSet::parse(&v, "0,3;1,2").map_err(|e| e.to_string())?;
    let p = congruence_from_s(&s, &caps()).map_err(|e| e.to_string())?;
    ensure!(p.len() == 3, "{} classes", p.len());
    // Connected through covers of L(3,3) inside each class.
    for b in &p.blocks {
        let inside: BTreeSet<&PathWord> = b.iter().collect();
        let mut seen = BTreeSet::from([&b[0]]);
        let mut stack = vec![b[0].clone()];
        while let Some(w) = stack.pop() {
            for u in w.upper_covers().into_iter().chain(w.lower_covers()) {
                if let Some(&k) = inside.get(&u) {
                    if seen.insert(k) {
                        stack.push(u);
                    }
                }
            }
        }
        ensure!(seen.len() == b.len(), "class of {} is not cover-connected", b[0]);
    }
    ensure!(check_parikh_connectivity(&p), "swap connectivity disagrees");
    let q = quotient(&s, &caps()).map_err(|e| e.to_string())?;
    let chain = q.len() == 3 && (0..3).all(|a| (0..3).all(|b| q.leq(a, b) || q.leq(b, a)));
    ensure!(chain, "quotient has {} elements and is not a chain", q.len());
    Ok("3 cover-connected classes, quotient is a 3-chain".into())
}

fn c9() -> Outcome {
    let l = fixtures::n5();
    let [a, b, c] = ["a", "b", "c"].map(|s| l.index_of(s).unwrap());
    let w = l.dpath_from_sd_failure(a, b, c, 1).map_err(|e| e.to_string())?;
    check_path(&l, &w.path, 1).map_err(|e| format!("N5: {e}"))?;
    let m = mat(&MultVector::ones(4));
    let (x, y, z) = witness_indices(&m, 4);
    let (x, y, z) = if m.lattice.sd_fails_at(x, y, z, 2) { (x, y, z) } else { (x, z, y) };
    let w4 = m.lattice.dpath_from_sd_failure(x, y, z, 2).map_err(|e| e.to_string())?;
    check_path(&m.lattice, &w4.path, 2).map_err(|e| format!("Perm(4): {e}"))?;
    let show = |l: &FiniteLattice, p: &[usize]| p.iter().map(|&e| l.label(e).to_string()).collect::<Vec<_>>().join(" -> ");
    Ok(format!("N5: {}; Perm(4): {}", show(&l, &w.path), show(&m.lattice, &w4.path)))
}

fn check_path(l: &FiniteLattice, path: &[usize], n: usize) -> Result<(), String> {
    ensure!(path.len() == n + 1, "path has {} nodes", path.len());
    let d = brute_d(l);
    for e in path.windows(2) {
        ensure!(d.contains(&(e[0], e[1])), "{} D {} fails", l.label(e[0]), l.label(e[1]));
    }
    let distinct: BTreeSet<usize> = path.iter().copied().collect();
    ensure!(distinct.len() == path.len(), "path is not simple");
    Ok(())
}

fn fixture_set() -> Vec<(String, FiniteLattice)> {
    let mut out: Vec<(String, FiniteLattice)> = fixtures::named().into_iter().map(|(n, l)| (n.to_string(), l)).collect();
    for s in ["2,1", "1,1,1", "3,3", "2,1,1", "1,1,1,1"] {
        out.push((format!("L({s})"), mat(&mv(s)).lattice));
    }
    out
}

fn c10() -> Outcome {
    let fx = fixture_set();
    // SD monotonicity.
    for (name, l) in &fx {
        let levels: Vec<bool> = (0..=5).map(|n| l.sd_holds(n)).collect();
        for n in 0..5 {
            ensure!(!levels[n] || levels[n + 1], "{name}: SD_{n} holds, SD_{} fails", n + 1);
        }
    }
    // Sequence laws.
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for (name, l) in &fx {
        for _ in 0..1000 {
            let (x, y, z) = (rng.gen_range(0..l.len()), rng.gen_range(0..l.len()), rng.gen_range(0..l.len()));
            let t = sd_eval(l, &x, &y, &z, 5);
            ensure!(t.y_seq[0] == y && t.z_seq[0] == z, "{name}: initial terms");
            for k in 0..5 {
                ensure!(t.y_seq[k + 1] == l.join(y, l.meet(x, t.z_seq[k])), "{name}: y recursion");
                ensure!(t.z_seq[k + 1] == l.join(z, l.meet(x, t.y_seq[k])), "{name}: z recursion");
                ensure!(l.leq(t.y_seq[k], t.y_seq[k + 1]) && l.leq(t.z_seq[k], t.z_seq[k + 1]), "{name}: monotone");
            }
            let yz = l.join(y, z);
            for a in &t.y_seq {
                for b in &t.z_seq {
                    ensure!(l.join(*a, *b) == yz, "{name}: y_k ∨ z_m = y ∨ z");
                }
            }
        }
    }
    // Clopen join and meet against brute-force bounds.
    for k in 1..=4 {
        let sets: Vec<InversionSet> = Permutation::all(k).iter().map(Permutation::inversions).collect();
        for a in &sets {
            for b in &sets {
                let ubs: Vec<&InversionSet> = sets.iter().filter(|s| a.is_subset(s) && b.is_subset(s)).collect();
                let lbs: Vec<&InversionSet> = sets.iter().filter(|s| s.is_subset(a) && s.is_subset(b)).collect();
                let lub = ubs.iter().find(|u| ubs.iter().all(|w| u.is_subset(w))).ok_or("no lub")?;
                let glb = lbs.iter().find(|u| lbs.iter().all(|w| w.is_subset(u))).ok_or("no glb")?;
                ensure!(&&a.join(b).unwrap() == lub && &&a.meet(b).unwrap() == glb, "k={k}: clopen calculus");
            }
        }
    }
    // ι is an order embedding on every composition of k ≤ 5.
    let mut vectors = 0;
    for k in 1..=5usize {
        for mask in 0u32..(1 << (k - 1)) {
            let mut parts = vec![1usize];
            for i in 0..k - 1 {
                if mask >> i & 1 == 1 {
                    parts.push(1);
                } else {
                    *parts.last_mut().unwrap() += 1;
                }
            }
            let v = MultVector::new(parts).unwrap();
            let ws = enumerate(&v, &caps()).unwrap();
            let imgs: Vec<InversionSet> = ws.iter().map(|w| w.iota().inversions()).collect();
            for (i, w) in ws.iter().enumerate() {
                ensure!(PathWord::iota_inv(&v, &w.iota()).as_ref() == Ok(w), "{v}: iota inverse at {w}");
                for (j, u) in ws.iter().enumerate() {
                    ensure!(w.leq(u).unwrap() == imgs[i].is_subset(&imgs[j]), "{v}: order at {w}, {u}");
                }
            }
            vectors += 1;
        }
    }
    // κ and κ^d are mutually inverse.
    for s in D_SET {
        let v = mv(s);
        for j in enumerate_ji(&v) {
            ensure!(kappa_d(&kappa(&j).unwrap()).unwrap() == j, "L({s}): kappa_d(kappa({j}))");
        }
        for m in enumerate_mi(&v) {
            ensure!(kappa(&kappa_d(&m).unwrap()).unwrap() == m, "L({s}): kappa(kappa_d({m}))");
        }
    }
    Ok(format!("{} fixtures, 1000 triples each, iota on {vectors} vectors", fx.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("theorem in dimension 3, exhaustive", Duration::from_secs(1), c1),
        ("theorem in dimension 4, exhaustive", Duration::from_secs(5), c2),
        ("theorem in dimension 5, D-path bound", Duration::from_secs(30), c3),
        ("explicit D equals brute-force D", Duration::from_secs(60), c4),
        ("join irreducible counting formula", Duration::from_secs(60), c5),
        ("kappa example through the CLI", Duration::from_secs(60), c6),
        ("congruence counts", Duration::from_secs(60), c7),
        ("three classes of L(3,3)", Duration::from_secs(60), c8),
        ("D-path extraction from SD failures", Duration::from_secs(60), c9),
        ("property suites", Duration::from_secs(120), c10),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let res = match res {
            Ok(s) if took > limit => Err(format!("{s}; took {took:.2?}, limit {limit:?}")),
            r => r,
        };
        match res {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{took:.2?}]", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e} [{took:.2?}]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
