use proptest::prelude::*;

use epg::b2m::build_b2m;
use epg::cactus::classify_cactus;
use epg::embedding::{check_separation, nice_labeling, test_outerplanar};
use epg::graph::{gen_random, Graph, RandomFamily};
use epg::grid::{compact, verify, EpgRepresentation};
use epg::maxouter::classify;
use epg::oracle::is_interval;

fn outerplanar() -> impl Strategy<Value = Graph> {
    (3usize..40, any::<u64>()).prop_map(|(n, s)| gen_random(RandomFamily::ConnectedOuterplanar, n, s).unwrap())
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |es| Graph::from_edges(n, es).unwrap())
    })
}

/// Seeded permutation of `1..=n` in `relabel` form.
fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut p: Vec<usize> = (1..=n).collect();
    p.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    std::iter::once(0).chain(p).collect()
}

/// Outerplanar iff the vertices fit on a circle with no two edges crossing.
fn outerplanar_brute(g: &Graph) -> bool {
    fn place(g: &Graph, order: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if order.len() == g.n() {
            let pos: Vec<usize> = {
                let mut p = vec![0; g.n() + 1];
                for (i, &v) in order.iter().enumerate() {
                    p[v] = i;
                }
                p
            };
            let edges: Vec<(usize, usize)> =
                g.edges().map(|(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b]))).collect();
            return edges.iter().all(|&(a, b)| edges.iter().all(|&(c, d)| !(a < c && c < b && b < d)));
        }
        for v in 2..=g.n() {
            if !used[v] {
                used[v] = true;
                order.push(v);
                if place(g, order, used) {
                    return true;
                }
                order.pop();
                used[v] = false;
            }
        }
        false
    }
    if g.n() == 0 {
        return true;
    }
    let mut used = vec![false; g.n() + 1];
    used[1] = true;
    place(g, &mut vec![1], &mut used)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn outerplanarity_matches_circle_drawings(g in small_graph()) {
        prop_assert_eq!(test_outerplanar(&g).is_ok(), outerplanar_brute(&g));
    }

    #[test]
    fn nice_labelings_separate(g in outerplanar()) {
        let emb = test_outerplanar(&g).unwrap();
        let lab = nice_labeling(&g, &emb).unwrap();
        prop_assert!(check_separation(&g, &lab.order).unwrap().is_ok());
    }

    #[test]
    fn b2m_survives_isometries(g in outerplanar(), dx in -50i64..50, dy in -50i64..50) {
        let rep = build_b2m(&g).unwrap();
        prop_assert!(verify(&g, &rep, Some(2), true).pass);
        prop_assert!(verify(&g, &rep.translated(dx, dy), Some(2), true).pass);
        prop_assert!(verify(&g, &compact(&rep), Some(2), true).pass);
        // Rotations and reflections keep bends; the two that fix the
        // diagonal direction also keep monotonicity.
        prop_assert!(verify(&g, &rep.mapped(|(x, y)| (y, x)), Some(2), true).pass);
        prop_assert!(verify(&g, &rep.mapped(|(x, y)| (-x, -y)), Some(2), true).pass);
        prop_assert!(verify(&g, &rep.mapped(|(x, y)| (-y, x)), Some(2), false).pass);
        prop_assert!(verify(&g, &rep.mapped(|(x, y)| (-x, y)), Some(2), false).pass);
    }

    // Empirical constant for this allocator: the worst ratio seen over a few
    // thousand random graphs was just under 3.
    #[test]
    fn b2m_extent_is_linear(g in outerplanar()) {
        let (w, h) = compact(&build_b2m(&g).unwrap()).extent();
        prop_assert!(w.max(h) <= 3 * g.n() as i64);
    }

    #[test]
    fn json_round_trip(g in outerplanar()) {
        let rep = build_b2m(&g).unwrap().normalized();
        let back = EpgRepresentation::from_json(&rep.to_json()).unwrap();
        prop_assert_eq!(back, rep);
    }

    #[test]
    fn compaction_is_idempotent(g in outerplanar()) {
        let c = compact(&build_b2m(&g).unwrap());
        prop_assert_eq!(compact(&c), c.clone());
        prop_assert_eq!(c.intersection_pairs(), build_b2m(&g).unwrap().intersection_pairs());
    }

    #[test]
    fn maxouter_classification_is_label_free((n, seed) in (3usize..30, any::<u64>()), perm_seed in any::<u64>()) {
        let g = gen_random(RandomFamily::MaximalOuterplanar, n, seed).unwrap();
        let c = classify(&g).unwrap();
        prop_assert!(verify(&g, &c.representation, Some(c.b as usize), c.b == 0).pass);
        let d = classify(&g.relabel(&shuffled(n, perm_seed))).unwrap();
        prop_assert_eq!((c.b, c.bm), (d.b, d.bm));
    }

    #[test]
    fn cactus_classification_is_label_free((n, seed) in (1usize..60, any::<u64>()), perm_seed in any::<u64>()) {
        let g = gen_random(RandomFamily::Cactus, n, seed).unwrap();
        let c = classify_cactus(&g).unwrap();
        prop_assert!(verify(&g, &c.representation, Some(c.b as usize), true).pass);
        if let Some(w) = &c.obstruction {
            prop_assert!(w.verify(&g));
        }
        let d = classify_cactus(&g.relabel(&shuffled(n, perm_seed))).unwrap();
        prop_assert_eq!((c.b, c.bm), (d.b, d.bm));
    }

    #[test]
    fn interval_test_is_label_free(g in small_graph(), perm_seed in any::<u64>()) {
        prop_assert_eq!(is_interval(&g).unwrap(), is_interval(&g.relabel(&shuffled(g.n(), perm_seed))).unwrap());
    }
}
