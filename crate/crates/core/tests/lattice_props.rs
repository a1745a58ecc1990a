use mulat_core::lattice::{fixtures, sd_eval, FiniteLattice};
use mulat_core::multinomial::{to_finite_lattice, MultVector, PathWord};
use mulat_core::perm::Permutation;
use mulat_core::sd_engine::{perm_witness, psi, theorem_check, Method};
use mulat_core::Caps;
use proptest::prelude::*;

fn materialized(s: &str) -> FiniteLattice {
    to_finite_lattice(&s.parse().unwrap(), &Caps::default()).unwrap().lattice
}

fn all_fixtures() -> Vec<(String, FiniteLattice)> {
    let mut out: Vec<(String, FiniteLattice)> = fixtures::named().into_iter().map(|(n, l)| (n.to_string(), l)).collect();
    for s in ["2,1", "1,1,1", "2,2", "2,1,1", "1,1,1,1"] {
        out.push((format!("L({s})"), materialized(s)));
    }
    let d = out.iter().find(|(n, _)| n == "L(2,1,1)").unwrap().1.dual();
    out.push(("L(2,1,1)^d".into(), d));
    out
}

#[test]
fn sd_levels_are_monotone() {
    for (name, l) in all_fixtures() {
        if l.len() > 30 {
            continue;
        }
        let levels: Vec<bool> = (0..=5).map(|n| l.sd_holds(n)).collect();
        for n in 0..5 {
            assert!(!levels[n] || levels[n + 1], "{name}: SD_{n} holds but SD_{} fails", n + 1);
        }
    }
}

fn triple_strategy() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (0usize..13).prop_flat_map(|f| (Just(f), 0usize..1000, 0usize..1000, 0usize..1000))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn sequence_laws((f, x, y, z) in triple_strategy()) {
        thread_local!(static FIX: Vec<(String, FiniteLattice)> = all_fixtures());
        FIX.with(|fx| {
            let l = &fx[f % fx.len()].1;
            let (x, y, z) = (x % l.len(), y % l.len(), z % l.len());
            let n = 4;
            let t = sd_eval(l, &x, &y, &z, n);
            assert!(t.mu >= 1);
            for k in 0..n {
                assert!(l.leq(t.y_seq[k], t.y_seq[k + 1]) && l.leq(t.z_seq[k], t.z_seq[k + 1]));
            }
            for k in 1..=n {
                let xk = t.x_seq[k - 1];
                let upper = l.meet(x, l.meet(t.y_seq[k], t.z_seq[k]));
                assert!(l.leq(l.meet(x, t.y_seq[k - 1]), xk) && l.leq(xk, upper));
                assert_eq!(l.join(y, xk), t.y_seq[k]);
                assert_eq!(l.join(z, xk), t.z_seq[k]);
            }
            assert!(l.leq(t.lhs, t.rhs));
            assert_eq!(t.holds(), !l.sd_fails_at(x, y, z, n));
        });
    }
}

#[test]
fn meet_sd_iff_sd_at_stabilization() {
    for (name, l) in all_fixtures() {
        if l.len() > 30 {
            continue;
        }
        let mu = l.sd_mu();
        assert_eq!(l.is_meet_semidistributive(), l.sd_holds(mu), "{name}");
    }
}

#[test]
fn distributivity_two_ways() {
    let fx = all_fixtures();
    assert!(fx.len() >= 10);
    for (name, l) in &fx {
        assert_eq!(l.is_distributive(), l.satisfies_distributive_law(), "{name}");
        // A non-degenerate pentagon always yields a D-edge.
        if !l.pentagons().is_empty() {
            assert!(!l.d_relation().is_empty(), "{name}");
        }
        if l.is_distributive() {
            assert!(l.pentagons().is_empty() && l.d_relation().is_empty(), "{name}");
        }
    }
}

#[test]
fn d_path_bounds_sd_in_bounded_lattices() {
    for (name, l) in all_fixtures() {
        if !l.is_bounded() || l.len() > 30 {
            continue;
        }
        let (len, _) = l.longest_d_path();
        assert!(l.sd_holds(len + 1), "{name}: longest D-path {len}");
        if let Some((x, y, z)) = l.sd_failure(len) {
            let w = l.dpath_from_sd_failure(x, y, z, len).unwrap();
            assert_eq!(w.path.len(), len + 1, "{name}");
        }
    }
}

#[test]
fn dpath_extraction_in_perm4() {
    let v = MultVector::ones(4);
    let m = to_finite_lattice(&v, &Caps::default()).unwrap();
    let l = &m.lattice;
    let t = perm_witness(4).unwrap();
    let idx = |s: &mulat_core::perm::InversionSet| m.index_of(&PathWord::iota_inv(&v, &s.to_permutation().unwrap()).unwrap()).unwrap();
    let (x, y, z) = (idx(&t.x), idx(&t.y), idx(&t.z));
    assert!(l.sd_fails_at(x, y, z, 2));
    let w = l.dpath_from_sd_failure(x, y, z, 2).unwrap();
    assert_eq!(w.anchors.len(), 3);
    assert_eq!(w.quotients.len(), 3);
    assert_eq!(w.path.len(), 3);
    let d = l.d_relation();
    for e in w.path.windows(2) {
        assert!(d.contains(&(e[0], e[1])));
    }
    let mut seen = w.path.clone();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), 3);
    for &(u, v) in &w.quotients {
        assert!(l.is_cover(v, u));
    }
    assert!(l.dpath_from_sd_failure(x, y, z, 3).is_err());
}

#[test]
fn quotients_transfer_to_join_irreducibles() {
    for l in [materialized("1,1,1"), materialized("2,1,1"), fixtures::n5()] {
        for &(lo, hi) in l.covers() {
            let j = l.quotient_to_ji(hi, lo).unwrap();
            let js = l.lower_star(j).unwrap();
            assert_eq!(l.join(j, lo), hi);
            assert_eq!(l.meet(j, lo), js);
            assert!(l.principal_congruence(hi, lo).same(j, js));
            assert!(l.principal_congruence(j, js).same(hi, lo));
        }
        assert!(l.quotient_to_ji(l.bottom(), l.top()).is_err());
    }
}

#[test]
fn pentagon_descent_lands_below_b() {
    for l in [fixtures::n5(), materialized("1,1,1"), materialized("2,1,1")] {
        for p in l.pentagons() {
            for (b1, a1) in l.prime_quotients_within(p.b, p.a) {
                let (u, w) = l.pentagon_descend(&p, a1, b1).unwrap();
                assert!(l.is_cover(w, u) && l.leq(p.zero, w) && l.leq(u, p.b));
                assert!(l.principal_congruence(u, w).same(a1, b1));
            }
        }
    }
}

fn perm_join(a: &Permutation, b: &Permutation) -> Permutation {
    a.inversions().join(&b.inversions()).unwrap().to_permutation().unwrap()
}

fn perm_meet(a: &Permutation, b: &Permutation) -> Permutation {
    a.inversions().meet(&b.inversions()).unwrap().to_permutation().unwrap()
}

#[test]
fn psi_is_a_lattice_embedding() {
    for s in ["2,1,1", "1,3,2", "2,0,1,1"] {
        let v: MultVector = s.parse().unwrap();
        let perms = Permutation::all(3);
        let imgs: Vec<PathWord> = perms.iter().map(|p| psi(&v, p).unwrap()).collect();
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                assert_eq!(i == j, imgs[i] == imgs[j]);
                assert_eq!(psi(&v, &perm_join(a, b)).unwrap(), imgs[i].join(&imgs[j]).unwrap(), "{s}");
                assert_eq!(psi(&v, &perm_meet(a, b)).unwrap(), imgs[i].meet(&imgs[j]).unwrap(), "{s}");
            }
        }
    }
}

#[test]
fn theorem_methods_agree() {
    let caps = Caps::default();
    for s in ["1,1", "2,1", "1,1,1", "2,2,1", "1,2,1", "1,1,1,1", "2,1,1,1", "3,2,2"] {
        let v: MultVector = s.parse().unwrap();
        let e = theorem_check(&v, Some(Method::Exhaustive), &caps).unwrap();
        let d = theorem_check(&v, Some(Method::DPathBound), &caps).unwrap();
        assert!(e.confirmed() && d.confirmed(), "{s}");
        assert_eq!(d.longest_d_path, Some(v.dimension() - 2));
        assert_eq!(e.witness_words, d.witness_words);
    }
}
