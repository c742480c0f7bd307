use zeroblock_core::corpus::{all_connected_graphs, all_prufer_trees, random_connected_graph, random_graph};
use zeroblock_core::count::{Finite, Infinite};
use zeroblock_core::exact::{self, find_twins, max_stalled, min_fort, second_min_fort};
use zeroblock_core::forcing::{classify, closure, is_fort, is_v_fort, trace_is_valid, SetClass};
use zeroblock_core::formulas::{b_closed_form, b_join, b_prime, solve_auto, ClosedFamily, JoinInputs};
use zeroblock_core::graph::{generate, join, random_tree, union, Family};
use zeroblock_core::rng::SplitMix64;
use zeroblock_core::tree_dp::{dp_merge, root_and_order, zbs_tree, DpState};
use zeroblock_core::{ExtendedCount, Graph, VertexSet};

fn random_subset(n: usize, rng: &mut SplitMix64) -> VertexSet {
    let mut s = VertexSet::empty(n);
    for v in 0..n {
        if rng.chance(0.4) {
            s.insert(v);
        }
    }
    s
}

/// Applies forces in a random order until nothing changes.
fn shuffled_closure(g: &Graph, black: &VertexSet, rng: &mut SplitMix64) -> VertexSet {
    let mut cur = black.clone();
    loop {
        let mut forces: Vec<_> = cur
            .iter()
            .filter_map(|b| {
                let whites: Vec<_> = g.neighbors(b).iter().filter(|&&w| !cur.contains(w)).collect();
                (whites.len() == 1).then(|| *whites[0])
            })
            .collect();
        if forces.is_empty() {
            return cur;
        }
        rng.shuffle(&mut forces);
        cur.insert(forces[0]);
    }
}

#[test]
fn closure_is_order_independent() {
    let mut rng = SplitMix64::new(31);
    for _ in 0..60 {
        let n = 2 + rng.below(14) as usize;
        let g = random_graph(n, 0.3, &mut rng);
        let black = random_subset(n, &mut rng);
        let (fin, trace) = closure(&g, &black);
        assert!(trace_is_valid(&g, &black, &trace));
        for _ in 0..5 {
            assert_eq!(shuffled_closure(&g, &black, &mut rng), fin);
        }
    }
}

#[test]
fn white_part_of_stalled_set_is_fort() {
    let mut rng = SplitMix64::new(8);
    for _ in 0..200 {
        let n = 1 + rng.below(10) as usize;
        let g = random_graph(n, 0.35, &mut rng);
        let black = random_subset(n, &mut rng);
        let white = black.complement();
        let stalled = classify(&g, &black) == SetClass::FailedStalled;
        assert_eq!(stalled, is_fort(&g, &white), "{g:?} black={black:?}");
    }
}

#[test]
fn failed_forcing_plus_blocking_is_order() {
    let mut rng = SplitMix64::new(77);
    for _ in 0..80 {
        let n = 1 + rng.below(10) as usize;
        let g = random_graph(n, 0.3, &mut rng);
        let f = max_stalled(&g).unwrap().value();
        let b = min_fort(&g, None).unwrap().value();
        assert_eq!(f + b, n as u64, "{g:?}");
    }
}

#[test]
fn twins_iff_two_on_connected_graphs() {
    for n in 2..=6 {
        for g in all_connected_graphs(n) {
            let b = min_fort(&g, Some(2)).unwrap().size;
            assert_eq!(b == Finite(2), find_twins(&g).is_some(), "{g:?}");
        }
    }
}

#[test]
fn canonical_witness_is_least_fort() {
    let mut rng = SplitMix64::new(4);
    for _ in 0..40 {
        let n = 1 + rng.below(9) as usize;
        let g = random_graph(n, 0.4, &mut rng);
        let r = min_fort(&g, None).unwrap();
        let k = r.value() as usize;
        let all = exact::forts_of_size(&g, k).unwrap();
        assert_eq!(r.witness.as_ref(), all.first());
        assert_eq!(all, exact::enumerate_min_forts(&g).unwrap());
    }
}

#[test]
fn closed_forms_match_exhaustive_search() {
    for n in 1..=14u64 {
        let g = generate(Family::Path(n as usize)).unwrap();
        assert_eq!(
            min_fort(&g, None).unwrap().size,
            b_closed_form(ClosedFamily::Path(n)).unwrap()
        );
    }
    for n in 3..=14u64 {
        let c = generate(Family::Cycle(n as usize)).unwrap();
        assert_eq!(
            min_fort(&c, None).unwrap().size,
            b_closed_form(ClosedFamily::Cycle(n)).unwrap()
        );
        let w = generate(Family::Wheel(n as usize)).unwrap();
        assert_eq!(
            min_fort(&w, None).unwrap().size,
            b_closed_form(ClosedFamily::Wheel(n)).unwrap(),
            "W{n}"
        );
    }
    for m in 1..=3u64 {
        for n in 1..=9u64 {
            let f = generate(Family::Fan {
                m: m as usize,
                n: n as usize,
            })
            .unwrap();
            assert_eq!(
                min_fort(&f, None).unwrap().size,
                b_closed_form(ClosedFamily::Fan { m, n }).unwrap()
            );
            if n >= 3 {
                let c = generate(Family::Cone {
                    m: m as usize,
                    n: n as usize,
                })
                .unwrap();
                assert_eq!(
                    min_fort(&c, None).unwrap().size,
                    b_closed_form(ClosedFamily::Cone { m, n }).unwrap()
                );
            }
        }
    }
}

#[test]
fn join_rule_matches_exhaustive_search() {
    let mut rng = SplitMix64::new(1001);
    for _ in 0..80 {
        let a = 1 + rng.below(6) as usize;
        let b = 1 + rng.below(6) as usize;
        let g = random_graph(a, 0.4, &mut rng);
        let h = random_graph(b, 0.4, &mut rng);
        let inputs = JoinInputs::from_graphs(&g, &h).unwrap();
        let expected = min_fort(&join(&g, &h), None).unwrap().size;
        assert_eq!(b_join(&inputs).unwrap(), expected, "{g:?} + {h:?}");
    }
}

#[test]
fn second_number_rules() {
    let mut rng = SplitMix64::new(55);
    for _ in 0..150 {
        let n = 1 + rng.below(9) as usize;
        let g = random_graph(n, 0.25, &mut rng);
        assert_eq!(b_prime(&g).unwrap(), second_min_fort(&g).unwrap().size, "{g:?}");
    }
    assert_eq!(b_prime(&Graph::empty(1)).unwrap(), Infinite);
}

#[test]
fn union_takes_minimum() {
    let mut rng = SplitMix64::new(12);
    for _ in 0..40 {
        let g = random_connected_graph(1 + rng.below(6) as usize, 0.3, &mut rng);
        let h = random_connected_graph(1 + rng.below(6) as usize, 0.3, &mut rng);
        let u = min_fort(&union(&g, &h), None).unwrap().size;
        let parts = min_fort(&g, None).unwrap().size.min(min_fort(&h, None).unwrap().size);
        assert_eq!(u, parts);
    }
}

#[test]
fn auto_solver_agrees_and_witnesses_verify() {
    let mut rng = SplitMix64::new(3);
    for i in 0..200 {
        let n = 1 + rng.below(11) as usize;
        let g = if i % 3 == 0 {
            random_tree(n, rng.next_u64())
        } else {
            random_graph(n, 0.2 + 0.1 * (i % 5) as f64, &mut rng)
        };
        let report = solve_auto(&g).unwrap();
        assert_eq!(
            report.value,
            min_fort(&g, None).unwrap().size,
            "{g:?} via {:?}",
            report.method
        );
        if let Some(w) = report.witness {
            assert!(is_fort(&g, &w));
            assert_eq!(Finite(w.len() as u64), report.value);
        }
    }
}

#[test]
fn tree_program_matches_every_small_tree() {
    for n in 1..=7 {
        for t in all_prufer_trees(n) {
            let want = min_fort(&t, None).unwrap().size;
            for root in 0..n {
                let sol = zbs_tree(&t, Some(root)).unwrap();
                assert_eq!(sol.value, want, "{t:?} rooted at {root}");
                assert!(is_fort(&t, &sol.witness));
            }
        }
    }
}

fn brute_state(g: &Graph, v: usize) -> DpState {
    let n = g.n();
    let mut best = [Infinite; 3];
    for mask in 1u64..1 << n {
        let w = VertexSet::from_mask(n, mask);
        let size = Finite(w.len() as u64);
        if is_fort(g, &w) {
            let slot = if w.contains(v) { 2 } else { 0 };
            best[slot] = best[slot].min(size);
        }
        if is_v_fort(g, &w, v) {
            best[1] = best[1].min(size);
        }
    }
    DpState {
        b1: best[0],
        b11: best[1],
        b0: best[2],
    }
}

#[test]
fn intermediate_states_are_exact() {
    for seed in 0..40u64 {
        let n = 2 + (seed as usize % 11);
        let t = random_tree(n, seed);
        let order = root_and_order(&t, Some(seed as usize % n)).unwrap();
        let mut state = vec![DpState::SINGLE; n];
        let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        for &v in &order.order[..n - 1] {
            let p = order.parent[v].unwrap();
            state[p] = dp_merge(state[p], state[v]);
            let child = std::mem::take(&mut members[v]);
            members[p].extend(child);
            members[p].sort_unstable();
            let sub = t.induced_subgraph(&members[p]);
            let local = members[p].binary_search(&p).unwrap();
            assert_eq!(state[p], brute_state(&sub, local), "seed {seed}, vertex {p}");
        }
    }
}

#[test]
fn extended_count_arithmetic() {
    assert_eq!(Finite(2) + Infinite, Infinite);
    assert_eq!(Finite(u64::MAX) + Finite(1), Infinite);
    assert!(Finite(u64::MAX) < Infinite);
    assert_eq!(ExtendedCount::min_of([Infinite, Finite(3), Finite(2)]), Finite(2));
}

#[test]
fn gadget_value_agrees_with_forcing_oracle() {
    use zeroblock_core::reduction::{build_reduction, Variant};
    let p3 = generate(Family::Path(3)).unwrap();
    for variant in [Variant::Bipartite, Variant::Chordal] {
        let gp = build_reduction(&p3, variant).unwrap().gprime;
        let f = max_stalled(&gp).unwrap().value();
        assert_eq!(gp.n() as u64 - f, 2, "{variant:?}");
        assert_eq!(min_fort(&gp, None).unwrap().size, Finite(2));
    }
}
