use std::collections::HashSet;

use ladder_core::decision::{is_planar_naive, planarity_report_naive};
use ladder_core::embedding::{graph_edges, Anchors};
use ladder_core::format::{parse_instance, serialize_instance};
use ladder_core::ladder::Relabeling;
use ladder_core::oracle::{
    euler_characteristic, oracle_is_outerplanar, oracle_is_outerplanar_apex, oracle_is_planar, to_simple_graph,
    Rotation, SimpleGraph, DEFAULT_BUDGET,
};
use ladder_core::witness::Pattern;
use ladder_core::*;
use proptest::prelude::*;

fn ladder(max_m: usize, max_n: usize, max_k: usize) -> impl Strategy<Value = GeneralizedLadder> {
    (1..=max_m, 1..=max_n).prop_flat_map(move |(m, n)| {
        proptest::collection::btree_set((1..=m, 1..=n), 0..=max_k.min(m * n))
            .prop_map(move |edges| GeneralizedLadder::new(m, n, edges).unwrap())
    })
}

fn symmetry() -> impl Strategy<Value = Symmetry> {
    prop_oneof![
        Just(Symmetry::ReverseFirst),
        Just(Symmetry::ReverseSecond),
        Just(Symmetry::Swap)
    ]
}

fn class_of(f: QuadrantFlags) -> Option<EdgeClass> {
    [
        (f.up_down, EdgeClass::X),
        (f.up_up, EdgeClass::Y),
        (f.down_up, EdgeClass::Z),
        (f.down_down, EdgeClass::W),
    ]
    .into_iter()
    .find(|(occupied, _)| !occupied)
    .map(|(_, c)| c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_and_round_trips(g in ladder(12, 12, 40)) {
        prop_assert!(g.cross().windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(parse_instance(&serialize_instance(&g)).unwrap(), g);
    }

    #[test]
    fn indexed_flags_match_naive(g in ladder(15, 15, 60)) {
        let idx = QuadrantIndex::build(&g);
        for (i, &e) in g.cross().iter().enumerate() {
            let naive = quadrant_flags_naive(&g, e).unwrap();
            prop_assert_eq!(quadrant_flags(&g, &idx, e).unwrap(), naive);
            prop_assert_eq!(idx.flags_at(i, e), naive);
        }
        prop_assert_eq!(is_planar(&g), is_planar_naive(&g));
        prop_assert_eq!(planarity_report(&g), planarity_report_naive(&g));
    }

    #[test]
    fn symmetry_is_an_involution_and_conjugates_flags(g in ladder(10, 10, 30), w in symmetry()) {
        let img = g.apply_symmetry(w);
        prop_assert_eq!(img.apply_symmetry(w), g.clone());
        if w == Symmetry::Swap {
            prop_assert_eq!((img.m(), img.n()), (g.n(), g.m()));
        }
        for &e in g.cross() {
            let image_edge = w.map_edge(e, g.m(), g.n());
            prop_assert!(img.contains_edge(image_edge));
            let before = quadrant_flags_naive(&g, e).unwrap();
            let after = quadrant_flags_naive(&img, image_edge).unwrap();
            prop_assert_eq!(before.conjugate(w), after);
        }
    }

    #[test]
    fn decisions_are_symmetry_invariant(g in ladder(10, 10, 30), w in symmetry()) {
        let img = g.apply_symmetry(w);
        prop_assert_eq!(is_planar(&g).verdict, is_planar(&img).verdict);
        prop_assert_eq!(is_outerplanar(&g).verdict, is_outerplanar(&img).verdict);
    }

    #[test]
    fn functigraphs_have_one_edge_per_row(f in (1usize..20).prop_flat_map(|n| proptest::collection::vec(1..=n, n))) {
        let g = GeneralizedLadder::from_functigraph(&f).unwrap();
        prop_assert_eq!(g.num_cross(), f.len());
        let ls: HashSet<usize> = g.cross().iter().map(|e| e.l).collect();
        prop_assert_eq!(ls.len(), f.len());
    }

    #[test]
    fn outerplanar_implies_planar(g in ladder(10, 10, 30)) {
        let outer = is_outerplanar(&g);
        prop_assert_eq!(outer.verdict, outer.outerplanar_condition.is_some());
        if outer.verdict {
            prop_assert!(is_planar(&g).verdict);
        }
    }

    #[test]
    fn deleting_an_edge_keeps_planarity(g in ladder(10, 10, 30), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.num_cross() > 0 && is_planar(&g).verdict);
        let drop = pick.get(g.cross());
        let smaller = GeneralizedLadder::new(g.m(), g.n(), g.cross().iter().copied().filter(|e| e != drop)).unwrap();
        prop_assert!(is_planar(&smaller).verdict);
        prop_assert!(!is_outerplanar(&g).verdict || is_outerplanar(&smaller).verdict);
    }

    #[test]
    fn negative_reports_are_rechecked_naively(g in ladder(8, 8, 25)) {
        let planar = is_planar(&g);
        if let Some(e) = planar.witness_edge() {
            prop_assert!(quadrant_flags_naive(&g, e).unwrap().all());
            prop_assert!(g.cross().iter().take_while(|&&f| f < e).all(|&f| !quadrant_flags_naive(&g, f).unwrap().all()));
        }
        if let Some(decision::Witness::Outerplanarity { clause_i, clause_ii }) = is_outerplanar(&g).witness {
            let fi = quadrant_flags_naive(&g, clause_i.edge).unwrap();
            let fii = quadrant_flags_naive(&g, clause_ii.edge).unwrap();
            prop_assert!(fi.up_up || fi.down_down);
            prop_assert!(fii.up_down || fii.down_up);
        }
    }

    #[test]
    fn witnesses_verify(g in ladder(9, 9, 30)) {
        if !is_planar(&g).verdict {
            let cert = extract_k33_witness(&g).unwrap();
            prop_assert_eq!(cert.pattern, Pattern::K33);
            prop_assert!(verify_certificate(&g, &cert));
        } else {
            prop_assert!(extract_k33_witness(&g).is_err());
        }
        if !is_outerplanar(&g).verdict {
            let cert = extract_outerplanar_witness(&g).unwrap();
            prop_assert!(matches!(cert.pattern, Pattern::K32 | Pattern::K4));
            prop_assert!(verify_certificate(&g, &cert));
        } else {
            prop_assert!(extract_outerplanar_witness(&g).is_err());
        }
    }

    #[test]
    fn pulled_back_witnesses_verify(g in ladder(8, 8, 25), steps in proptest::collection::vec(symmetry(), 0..4)) {
        let (img, rel) = Relabeling::apply(&g, &steps);
        if !is_planar(&img).verdict {
            let cert = extract_k33_witness(&img).unwrap().pull_back(&rel);
            prop_assert!(verify_certificate(&g, &cert));
        }
        if !is_outerplanar(&img).verdict {
            let cert = extract_outerplanar_witness(&img).unwrap().pull_back(&rel);
            prop_assert!(verify_certificate(&g, &cert));
        }
    }

    #[test]
    fn planar_embeddings_verify(g in ladder(14, 14, 40)) {
        match planar_embedding(&g) {
            Ok(emb) => prop_assert!(verify_embedding(&g, &emb).unwrap()),
            Err(Error::NotPlanar(_)) => prop_assert!(!is_planar(&g).verdict),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn outerplanar_embeddings_verify(g in ladder(14, 14, 30)) {
        match outerplanar_embedding(&g) {
            Ok(emb) => {
                prop_assert!(verify_embedding(&g, &emb).unwrap());
                prop_assert!(emb.vertices.values().all(|p| p.x == 0 || p.x == 1));
            }
            Err(Error::NotOuterplanar) => prop_assert!(!is_outerplanar(&g).verdict),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn class_anchors(g in ladder(12, 12, 40)) {
        prop_assume!(is_planar(&g).verdict);
        let classes = classify_edges(&g).unwrap();
        let anchors = Anchors::new(g.m(), g.n()).unwrap();
        for &(e, c) in &classes {
            prop_assert_eq!(Some(c), class_of(quadrant_flags_naive(&g, e).unwrap()));
        }
        let emb = planar_embedding(&g).unwrap();
        for class in [EdgeClass::X, EdgeClass::Y, EdgeClass::Z] {
            let members: Vec<CrossEdge> = classes.iter().filter(|x| x.1 == class).map(|x| x.0).collect();
            let mut interior = HashSet::new();
            for e in &members {
                let line = emb.polyline(embedding::GraphEdge::Cross(*e)).unwrap();
                prop_assert_eq!(line.len(), 4);
                prop_assert!(interior.insert(line[1]));
                prop_assert!(interior.insert(line[2]));
            }
            if class == EdgeClass::X {
                for &e in &members {
                    for &f in &members {
                        let above1 = anchors.x1(e).y > anchors.x1(f).y;
                        let above2 = anchors.x2(e).y > anchors.x2(f).y;
                        prop_assert_eq!(above1, above2);
                        prop_assert_eq!(above1, e != f && e.l >= f.l && e.r >= f.r);
                    }
                }
            }
        }
        for &(e, c) in &classes {
            if c == EdgeClass::W {
                prop_assert_eq!(emb.polyline(embedding::GraphEdge::Cross(e)).unwrap().len(), 2);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn oracle_agrees_with_characterization(g in ladder(5, 5, 8)) {
        let h = to_simple_graph(&g);
        prop_assert_eq!(oracle_is_planar(&h, DEFAULT_BUDGET).unwrap(), is_planar(&g).verdict);
        prop_assert_eq!(oracle_is_outerplanar(&h, DEFAULT_BUDGET).unwrap(), is_outerplanar(&g).verdict);
    }

    #[test]
    fn certificates_imply_oracle_verdicts(g in ladder(5, 5, 8)) {
        let h = to_simple_graph(&g);
        if let Ok(cert) = extract_k33_witness(&g) {
            prop_assert!(verify_certificate(&g, &cert));
            prop_assert!(!oracle_is_planar(&h, DEFAULT_BUDGET).unwrap());
        }
        if let Ok(cert) = extract_outerplanar_witness(&g) {
            prop_assert!(verify_certificate(&g, &cert));
            prop_assert!(!oracle_is_outerplanar(&h, DEFAULT_BUDGET).unwrap());
        }
    }

    #[test]
    fn apex_and_face_criteria_agree(g in ladder(4, 3, 4)) {
        let h = to_simple_graph(&g);
        let Ok(apex) = oracle_is_outerplanar_apex(&h, 200_000) else {
            return Ok(());
        };
        let face = oracle_is_outerplanar(&h, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(face, apex);
        if face {
            prop_assert!(oracle_is_planar(&h, DEFAULT_BUDGET).unwrap());
        }
    }

    #[test]
    fn euler_bound_holds_for_any_rotation(
        (v, edges) in (2usize..8).prop_flat_map(|v| (Just(v), proptest::collection::vec((0..v, 0..v), 0..14))),
        seed in any::<u64>(),
    ) {
        let h = SimpleGraph::new(v, edges);
        let mut rng = random::SplitMix64::new(seed);
        let rotation: Rotation = (0..v)
            .map(|x| {
                let mut ns = h.neighbors(x).to_vec();
                for i in (1..ns.len()).rev() {
                    ns.swap(i, rng.below(i as u64 + 1) as usize);
                }
                ns
            })
            .collect();
        let comps = h.components().len() as i64;
        let chi = euler_characteristic(&h, &rotation);
        prop_assert!(chi <= 1 + comps);
        prop_assert_eq!((1 + comps - chi) % 2, 0);
        if chi == 1 + comps {
            prop_assert!(oracle_is_planar(&h, DEFAULT_BUDGET).unwrap());
        }
    }
}

#[test]
fn every_graph_edge_is_embedded() {
    let g = fixtures::fig1();
    let emb = planar_embedding(&g).unwrap();
    let expected: HashSet<_> = graph_edges(&g).into_iter().collect();
    let got: HashSet<_> = emb.edges.iter().map(|e| e.edge).collect();
    assert_eq!(expected, got);
}
