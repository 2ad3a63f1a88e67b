//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (visible with `--nocapture`). The sweep covers every
//! signature with up to four entries bounded by two, plus length-five spot
//! checks; all assertions are exact.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::time::Instant;

use slattice_core::lattice::{FiniteLattice, DEFAULT_ELEMENT_LIMIT};
use slattice_core::weak_order;
use slattice_core::{
    enumerate_trees, expected_tree_count, nu, props, tamari, MultiInversionSet, SDecreasingTree,
    TreeInversionSet, WeakComposition,
};

fn sig(v: &[u32]) -> WeakComposition {
    WeakComposition::new(v.to_vec()).unwrap()
}

/// Every signature with `n <= 4` and entries `<= 2`.
fn sweep() -> Vec<WeakComposition> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        let mut stack = vec![Vec::<u32>::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == n {
                out.push(sig(&prefix));
                continue;
            }
            for e in 0..=2u32 {
                let mut next = prefix.clone();
                next.push(e);
                stack.push(next);
            }
        }
    }
    out
}

fn spot_checks() -> Vec<WeakComposition> {
    vec![sig(&[1, 1, 1, 1, 1]), sig(&[0, 2, 0, 1, 2]), sig(&[2, 0, 1, 0, 1])]
}

fn criterion(n: u32, desc: &str, body: impl FnOnce() + UnwindSafe) {
    let outcome = catch_unwind(body);
    match &outcome {
        Ok(()) => println!("criterion {n}: PASS - {desc}"),
        Err(_) => println!("criterion {n}: FAIL - {desc}"),
    }
    if let Err(e) = outcome {
        resume_unwind(e);
    }
}

#[test]
fn criterion_1_join_closure_example() {
    criterion(1, "join of the s=(0,2,2) closure example computes exactly", || {
        let s = sig(&[0, 2, 2]);
        let mut t = MultiInversionSet::empty(3);
        t.set(3, 2, 2);
        let mut r = MultiInversionSet::empty(3);
        r.set(2, 1, 1);
        let t = slattice_core::construct_tree(&TreeInversionSet::new(t, s.clone()).unwrap());
        let r = slattice_core::construct_tree(&TreeInversionSet::new(r, s.clone()).unwrap());

        let start = Instant::now();
        let union = t.inversions().union(r.inversions()).unwrap();
        let join = weak_order::join(&t, &r).unwrap();
        let elapsed = start.elapsed();

        let mut expected_union = MultiInversionSet::empty(3);
        expected_union.set(3, 2, 2);
        expected_union.set(2, 1, 1);
        assert_eq!(union, expected_union, "union is the pointwise maximum");

        let mut expected_join = expected_union.clone();
        expected_join.set(3, 1, 2);
        assert_eq!(join.inversions(), &expected_join, "closure adds (3,1):2");
        assert!(elapsed.as_micros() < 1000, "ran in {elapsed:?}, budget 1 ms");
    });
}

#[test]
fn criterion_2_transitive_closure_example() {
    criterion(2, "transitive closure of a fixed four-element multiset is exact", || {
        let mut i = MultiInversionSet::empty(4);
        i.set(4, 3, 3);
        i.set(4, 2, 2);
        i.set(3, 2, 1);
        i.set(2, 1, 2);
        let mut expected = MultiInversionSet::empty(4);
        for (y, x, c) in [(4, 3, 3), (4, 2, 3), (4, 1, 3), (3, 2, 1), (3, 1, 1), (2, 1, 2)] {
            expected.set(y, x, c);
        }
        assert_eq!(i.transitive_closure(), expected);
    });
}

#[test]
fn criterion_3_counterexample_signature() {
    criterion(3, "s=(0,0,1): square weak order, 3-chain Tamari, quotient refused", || {
        let s = sig(&[0, 0, 1]);
        let h = weak_order::hasse(&s);
        assert_eq!(h.elements.len(), 4);
        assert_eq!(h.edges.len(), 4);
        // a square: two atoms, two coatoms, min and max
        let lat = FiniteLattice::s_weak(&s, DEFAULT_ELEMENT_LIMIT).unwrap();
        assert_eq!(lat.up_covers(0).len(), 2);
        assert_eq!(lat.down_covers(3).len(), 2);

        let tam = tamari::tamari_hasse(&s);
        assert_eq!(tam.elements.len(), 3);
        assert_eq!(tam.edges.len(), 2, "a chain of 3 elements");

        let refusal = tamari::tamari_classes(&s, DEFAULT_ELEMENT_LIMIT);
        assert!(matches!(refusal, Err(slattice_core::Error::QuotientUnsupported)));
        let message = refusal.unwrap_err().to_string();
        assert!(message.contains("not a quotient"), "message explains: {message}");
    });
}

#[test]
fn criterion_4_cover_relations_match_brute_force() {
    criterion(4, "rotation covers equal brute-force covers, weak and Tamari", || {
        let start = Instant::now();
        let mut signatures = sweep();
        signatures.extend(spot_checks());
        for s in &signatures {
            check_covers(&enumerate_trees(s), |t| {
                weak_order::covers(t).into_iter().map(|(r, _)| r).collect()
            });
            check_covers(&tamari::enumerate_tamari(s), |t| {
                tamari::tamari_covers(t)
                    .unwrap()
                    .into_iter()
                    .map(|(r, _)| r)
                    .collect()
            });
        }
        let elapsed = start.elapsed();
        assert!(elapsed.as_secs() < 60, "ran in {elapsed:?}, budget 60 s");
    });
}

/// Rotation images must equal the minimal strict upper bounds within the
/// given element set.
fn check_covers(
    elements: &[SDecreasingTree],
    rotations: impl Fn(&SDecreasingTree) -> Vec<SDecreasingTree>,
) {
    let n = elements.len();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = weak_order::leq(&elements[i], &elements[j]).unwrap();
        }
    }
    for i in 0..n {
        let ups: Vec<usize> = (0..n).filter(|&j| j != i && leq[i * n + j]).collect();
        let mut brute: Vec<usize> = ups
            .iter()
            .copied()
            .filter(|&j| !ups.iter().any(|&k| k != j && leq[k * n + j]))
            .collect();
        let mut images: Vec<usize> = rotations(&elements[i])
            .into_iter()
            .map(|r| elements.iter().position(|e| *e == r).expect("image enumerated"))
            .collect();
        brute.sort_unstable();
        images.sort_unstable();
        assert_eq!(images, brute, "covers of element {i}");
    }
}

#[test]
fn criterion_5_lattice_properties_sweep() {
    criterion(5, "lattice, semidistributive, polygonal and labeling sweep", || {
        for s in sweep() {
            let lat = FiniteLattice::s_weak(&s, DEFAULT_ELEMENT_LIMIT).unwrap();
            assert_eq!(props::verify_lattice_in(&lat), Ok(()), "{:?}", s.entries());
            assert_eq!(
                props::verify_semidistributive_in(&lat),
                Ok(()),
                "{:?}",
                s.entries()
            );
            let reports = props::classify_polygons_in(&lat).unwrap_or_else(|e| {
                panic!("polygonality failed on {:?}: {:?}", s.entries(), e)
            });
            for p in &reports {
                if p.shape == props::PolygonShape::Hexagon {
                    let b = p.chains[0].labels[0].c;
                    assert_eq!(s.get(b), 1, "hexagon shared label b has s(b)=1");
                }
            }
            assert!(props::verify_hh_in(&lat).is_ok(), "{:?}", s.entries());
        }
    });
}

#[test]
fn criterion_6_sublattice_closure() {
    criterion(6, "s-Tamari trees closed under join and meet on the sweep", || {
        for s in sweep() {
            assert_eq!(
                tamari::verify_sublattice(&s, DEFAULT_ELEMENT_LIMIT).unwrap(),
                Ok(()),
                "{:?}",
                s.entries()
            );
        }
    });
}

#[test]
fn criterion_7_quotient_lattice() {
    criterion(7, "quotient structure on zero-free sweep signatures", || {
        for s in sweep().into_iter().filter(|s| s.is_composition()) {
            let report = tamari::verify_quotient(&s, DEFAULT_ELEMENT_LIMIT).unwrap();
            assert_eq!(report.verdict, Ok(()), "{:?}", s.entries());
            assert_eq!(
                report.class_count,
                tamari::enumerate_tamari(&s).len(),
                "one class per s-Tamari tree"
            );
        }
    });
}

#[test]
fn criterion_8_nu_isomorphism() {
    criterion(8, "path and nu-tree isomorphisms on the whole sweep", || {
        for s in sweep() {
            assert_eq!(
                nu::verify_nu_isomorphism(&s, DEFAULT_ELEMENT_LIMIT).unwrap(),
                Ok(()),
                "{:?}",
                s.entries()
            );
        }
        // endpoint images for s = (0,2,2)
        let s = sig(&[0, 2, 2]);
        let bottom = nu::tree_to_path(&SDecreasingTree::minimum(&s)).unwrap();
        assert_eq!(bottom.steps().to_string(), "NEENEEN");
        let top = nu::tree_to_path(&SDecreasingTree::maximum(&s)).unwrap();
        assert_eq!(top.steps().to_string(), "NNNEEEE");
    });
}

#[test]
fn criterion_9_counting() {
    criterion(9, "product-formula counts and Fuss-Catalan cross-checks", || {
        for s in sweep().into_iter().chain(spot_checks()) {
            assert_eq!(
                enumerate_trees(&s).len() as u128,
                expected_tree_count(&s),
                "{:?}",
                s.entries()
            );
        }
        // s-Tamari counts for constant signatures match Fuss-Catalan
        let binomial = |n: u128, k: u128| -> u128 {
            let k = k.min(n - k);
            (1..=k).fold(1u128, |acc, i| acc * (n - k + i) / i)
        };
        for m in 1..=3u32 {
            for n in 1..=4usize {
                let s = sig(&vec![m; n]);
                let count = tamari::enumerate_tamari(&s).len() as u128;
                let (m_, n_) = (m as u128, n as u128);
                let fuss = binomial((m_ + 1) * n_, n_) / (m_ * n_ + 1);
                assert_eq!(count, fuss, "m={m} n={n}");
            }
        }
        assert_eq!(tamari::enumerate_tamari(&sig(&[2, 2, 2])).len(), 12);
    });
}
