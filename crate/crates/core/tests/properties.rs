mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{naive_edges, random_disjoint_layout, random_graph, random_layout, realizes_by_label};
use trvg::families::extend_cover;
use trvg::graph::{complete_multipartite, isomorphic};
use trvg::interval::{clique_order, is_interval, recognize_interval, IntervalModel};
use trvg::io::{parse_graph, parse_layout, serialize_graph, serialize_layout};
use trvg::oracle::is_interval_oracle;
use trvg::{
    decide_itrvg, decide_trvg, extract, verify, Budget, Coord, Graph, Mapping, Mode, PartList, Screens, Verdict,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn extract_matches_coordinates(seed: u64, n in 0usize..12, overlap: bool) {
        let mut r = rng(seed);
        let l = if overlap { random_layout(&mut r, n, 10) } else { random_disjoint_layout(&mut r, n, 2 * n as i64 + 2) };
        let g = extract(&l).unwrap();
        prop_assert_eq!(edges(&g), naive_edges(&l));
    }

    #[test]
    fn extract_is_invariant_under_rigid_changes(seed: u64, n in 1usize..10, dx in -50i64..50, dy in -50i64..50, den in 1i64..7) {
        let l = random_disjoint_layout(&mut rng(seed), n, 2 * n as i64 + 2);
        let g = extract(&l).unwrap();
        let (dx, dy) = (Coord::new(dx, den), Coord::new(dy, den));
        let moved = trvg::Layout::new(l.rects().iter().map(|r| r.translate(&dx, &dy)).collect(), l.mode()).unwrap();
        prop_assert!(extract(&moved).unwrap().same_edges(&g));
        prop_assert!(extract(&l.swap_axes()).unwrap().same_edges(&g));
        let norm = l.normalize();
        prop_assert!(extract(&norm).unwrap().same_edges(&g));
        prop_assert!(norm.rects().iter().all(|r| r.x_lo().is_integer() && r.y_hi().is_integer()));
        prop_assert_eq!(norm.normalize(), norm);
    }

    #[test]
    fn deletion_gives_induced_subgraph(seed: u64, n in 1usize..10, pick in 0usize..10) {
        let l = random_layout(&mut rng(seed), n, 8);
        let g = extract(&l).unwrap();
        let v = pick % l.len();
        let rest = l.without(l.rects()[v].id()).unwrap();
        let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
        prop_assert!(extract(&rest).unwrap().same_edges(&g.induced(&keep).unwrap()));
    }

    #[test]
    fn layout_documents_round_trip(seed: u64, n in 0usize..10, overlap: bool, den in 1i64..9) {
        let mut r = rng(seed);
        let l = if overlap { random_layout(&mut r, n, 9) } else { random_disjoint_layout(&mut r, n, 12) };
        let scale = Coord::new(1, den);
        let scaled = trvg::Layout::new(
            l.rects()
                .iter()
                .map(|r| trvg::Rect::new(r.id(), r.x_lo().mul(&scale), r.x_hi().mul(&scale), r.y_lo().mul(&scale), r.y_hi().mul(&scale)).unwrap())
                .collect(),
            l.mode(),
        )
        .unwrap();
        let text = serialize_layout(&scaled);
        let back = parse_layout(&text).unwrap();
        prop_assert_eq!(&back, &scaled);
        prop_assert_eq!(serialize_layout(&back), text);
    }

    #[test]
    fn graph_documents_round_trip(seed: u64, n in 0usize..12, p in 0.0f64..1.0) {
        let g = random_graph(&mut rng(seed), n, p);
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert!(back.same_edges(&g));
        prop_assert_eq!(serialize_graph(&back), text);
    }

    #[test]
    fn interval_models_are_recognized(ends in proptest::collection::vec((0i64..12, 1i64..5), 0..12)) {
        let model = IntervalModel::new(ends.iter().map(|&(lo, len)| (Coord::int(lo), Coord::int(lo + len))).collect()).unwrap();
        let g = model.intersection_graph();
        prop_assert!(is_interval(&g).unwrap());
        let rebuilt = recognize_interval(&g).unwrap().unwrap();
        prop_assert!(rebuilt.intersection_graph().same_edges(&g));
        let order = clique_order(&g).unwrap().unwrap();
        for v in 0..g.n() {
            let pos: Vec<usize> = order.cliques().iter().enumerate().filter(|(_, c)| c.contains(&v)).map(|(i, _)| i).collect();
            prop_assert!(pos.windows(2).all(|w| w[1] == w[0] + 1));
        }
    }

    #[test]
    fn recognizer_matches_clique_oracle(seed: u64, n in 0usize..9, p in 0.0f64..1.0) {
        let g = random_graph(&mut rng(seed), n, p);
        if let Ok(slow) = is_interval_oracle(&g) {
            prop_assert_eq!(is_interval(&g).unwrap(), slow);
        } else {
            // More maximal cliques than vertices.
            prop_assert!(!is_interval(&g).unwrap());
        }
    }

    #[test]
    fn isomorphism_finds_relabelings(seed: u64, n in 0usize..10, p in 0.0f64..1.0, shift in 0usize..10) {
        let g = random_graph(&mut rng(seed), n, p);
        let perm: Vec<usize> = (0..n).map(|v| (v + shift) % n.max(1)).collect();
        let h = g.permute(&perm);
        let f = isomorphic(&g, &h).unwrap().unwrap();
        for (u, v) in g.edges() {
            prop_assert!(h.has_edge(f[u], f[v]));
        }
    }

    #[test]
    fn cover_extension_sees_everything(seed: u64, n in 1usize..9, two: bool) {
        let l = random_disjoint_layout(&mut rng(seed), n, 10);
        let g = extract(&l).unwrap();
        let count = if two { 2 } else { 1 };
        let ext = extend_cover(&l, count).unwrap();
        let h = extract(&ext).unwrap();
        let m = l.len();
        prop_assert!(h.induced(&(0..m).collect::<Vec<_>>()).unwrap().same_edges(&g));
        for new in m..m + count {
            prop_assert!((0..m).all(|u| h.has_edge(u, new)));
        }
        prop_assert_eq!(h.has_edge(m, m + 1), false);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn realizable_graphs_are_accepted(seed: u64, n in 1usize..13) {
        let l = random_disjoint_layout(&mut rng(seed), n, 2 * n as i64 + 2);
        let g = extract(&l).unwrap();
        let d = decide_trvg(&g, Budget::new(50_000_000, 60.0), Screens::NONE).unwrap();
        let cert = d.verdict.certificate().cloned();
        prop_assert!(cert.is_some(), "{:?} for {}", d.verdict, serialize_layout(&l));
        prop_assert!(realizes_by_label(&cert.unwrap(), &g));
    }

    #[test]
    fn realizable_intersecting_graphs_are_accepted(seed: u64, n in 1usize..11) {
        let l = random_layout(&mut rng(seed), n, 8);
        let g = extract(&l).unwrap();
        let d = decide_itrvg(&g, Budget::new(50_000_000, 60.0)).unwrap();
        let Verdict::Yes(cert) = &d.verdict else {
            return Err(TestCaseError::fail(format!("{:?} for {}", d.verdict, serialize_layout(&l))));
        };
        prop_assert_eq!(cert.mode(), Mode::Intersecting);
        prop_assert!(realizes_by_label(cert, &g));
    }

    #[test]
    fn disjoint_yes_implies_intersecting_yes(seed: u64, n in 1usize..8, p in 0.2f64..0.9) {
        let g = random_graph(&mut rng(seed), n, p);
        let t = decide_trvg(&g, Budget::default(), Screens::NONE).unwrap();
        let i = decide_itrvg(&g, Budget::default()).unwrap();
        prop_assert!(!t.verdict.is_yes() || i.verdict.is_yes());
        if let Some(cert) = i.verdict.certificate() {
            prop_assert!(realizes_by_label(cert, &g));
        }
    }

    #[test]
    fn screens_never_change_the_answer(seed: u64, n in 1usize..10, p in 0.3f64..1.0) {
        let g = random_graph(&mut rng(seed), n, p);
        let plain = decide_trvg(&g, Budget::default(), Screens::NONE).unwrap();
        let screened = decide_trvg(&g, Budget::default(), Screens::ALL).unwrap();
        prop_assert_eq!(plain.verdict.is_yes(), screened.verdict.is_yes());
    }

    #[test]
    fn search_mapping_recovers_relabeled_certificates(seed: u64, n in 2usize..9, shift in 1usize..9) {
        let l = random_disjoint_layout(&mut rng(seed), n, 2 * n as i64 + 2);
        let g = extract(&l).unwrap();
        let perm: Vec<usize> = (0..g.n()).map(|v| (v + shift) % g.n()).collect();
        let h = g.permute(&perm);
        let unlabeled = Graph::new(h.n(), h.edges()).unwrap();
        let rep = verify(&l, &unlabeled, &Mapping::Search).unwrap();
        prop_assert!(rep.ok);
    }
}

#[test]
fn interval_census_matches_known_counts() {
    // Unlabeled interval graphs on n vertices.
    let known = [1, 1, 2, 4, 10, 27, 92, 369];
    for (n, &count) in known.iter().enumerate() {
        let got = trvg::graph::all_graphs(n).iter().filter(|g| is_interval(g).unwrap()).count();
        assert_eq!(got, count, "n = {n}");
    }
}

#[test]
fn multipartite_parts_are_recoverable() {
    for k in 1..=5 {
        for parts in PartList::enumerate(k, 9) {
            let g = complete_multipartite(&parts);
            let co = g.complement();
            let mut seen = vec![false; g.n()];
            let mut sizes = Vec::new();
            for s in 0..g.n() {
                if seen[s] {
                    continue;
                }
                let mut stack = vec![s];
                seen[s] = true;
                let mut size = 0;
                while let Some(v) = stack.pop() {
                    size += 1;
                    for u in co.neighbors(v) {
                        if !std::mem::replace(&mut seen[u], true) {
                            stack.push(u);
                        }
                    }
                }
                sizes.push(size);
            }
            sizes.sort();
            assert_eq!(sizes, parts.sizes());
        }
    }
}

#[test]
fn dn2_status_is_consistent_with_search() {
    use trvg::families::{classify_dn2, Dn2Status};
    use trvg::graph::{d2, find_induced_k333, K333Search};
    for n in 5..=30 {
        let g = d2(n).unwrap();
        match classify_dn2(n).unwrap() {
            Dn2Status::KnownNo => assert!(matches!(find_induced_k333(&g, None).unwrap(), K333Search::Found(_))),
            Dn2Status::KnownYes => {
                let d = decide_trvg(&g, Budget::default(), Screens::NONE).unwrap();
                assert!(realizes_by_label(d.verdict.certificate().unwrap(), &g));
            }
            Dn2Status::Open => {}
        }
    }
}
