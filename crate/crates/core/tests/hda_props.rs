mod support;

use std::collections::BTreeSet;

use hda_core::fixtures;
use hda_core::format::{parse_hda, to_json, HdaDoc};
use hda_core::hda::{
    accepted_labels, enumerate_accepting_paths, ev_label, language, replicate, validate_hda_map, Hda, HdaError, Path,
};
use hda_core::ipomset::{validate, RawIpomset};
use hda_core::{Ipomset, PrecubicalMap, Symbol};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn cell(h: &Hda, id: &str) -> usize {
    h.carrier().find(id).unwrap()
}

#[test]
fn ev_labels_of_grid_paths() {
    let g = fixtures::concurrent_grid();
    let x = g.carrier();
    let a_par_b = validate(&RawIpomset::new(["a", "b"]).order(0, 1)).unwrap();
    let a_then_b = validate(&RawIpomset::new(["a", "b"]).precede(0, 1)).unwrap();

    let diagonal = Path::at(cell(&g, "A"))
        .up(vec![0, 1], cell(&g, "ABCD"))
        .down(vec![0, 1], cell(&g, "C"));
    assert_eq!(ev_label(x, &diagonal).unwrap(), a_par_b);

    // b starts, a starts, b ends, a ends.
    let staggered = Path::at(cell(&g, "A"))
        .up(vec![0], cell(&g, "AD"))
        .up(vec![0], cell(&g, "ABCD"))
        .down(vec![1], cell(&g, "DC"))
        .down(vec![0], cell(&g, "C"));
    assert_eq!(ev_label(x, &staggered).unwrap(), a_par_b);
    assert_eq!(staggered.event_count(x), 2);

    let around = Path::at(cell(&g, "A"))
        .up(vec![0], cell(&g, "AB"))
        .down(vec![0], cell(&g, "B"))
        .up(vec![0], cell(&g, "BC"))
        .down(vec![0], cell(&g, "C"));
    assert_eq!(ev_label(x, &around).unwrap(), a_then_b);

    let halfway = Path::at(cell(&g, "A")).up(vec![0], cell(&g, "AB"));
    let a_open = Ipomset::discrete(&[Symbol::from("a")], 0, 1);
    assert_eq!(ev_label(x, &halfway).unwrap(), a_open);

    let joined = halfway.concat(&Path::at(cell(&g, "AB")).down(vec![0], cell(&g, "B"))).unwrap();
    assert_eq!(ev_label(x, &joined).unwrap(), Ipomset::singleton("a"));
    assert!(halfway.concat(&Path::at(cell(&g, "C"))).is_none());
}

#[test]
fn invalid_paths_are_rejected() {
    let g = fixtures::concurrent_grid();
    let wrong_face = Path::at(cell(&g, "B")).up(vec![0], cell(&g, "AB"));
    assert!(matches!(
        ev_label(g.carrier(), &wrong_face),
        Err(HdaError::InvalidPath { step: 1, .. })
    ));
    let out_of_range = Path::at(cell(&g, "AB")).down(vec![3], cell(&g, "B"));
    assert!(out_of_range.validate(g.carrier()).is_err());
}

#[test]
fn breadth_first_labels_match_path_enumeration() {
    let mut rng = StdRng::seed_from_u64(41);
    for _ in 0..60 {
        let h = support::random_hda(&mut rng, 4, &["a", "b"]);
        for k in 0..=3 {
            let by_paths: BTreeSet<Ipomset> = enumerate_accepting_paths(&h, k)
                .iter()
                .map(|p| ev_label(h.carrier(), p).unwrap())
                .collect();
            assert_eq!(accepted_labels(&h, k), by_paths);
        }
    }
}

#[test]
fn enumerated_paths_are_accepting_and_bounded() {
    let g = fixtures::concurrent_grid();
    let paths = enumerate_accepting_paths(&g, 4);
    assert!(!paths.is_empty());
    for p in &paths {
        p.validate(g.carrier()).unwrap();
        assert!(g.is_start(p.first()) && g.is_accept(p.last()));
        assert!(p.event_count(g.carrier()) <= 4);
        assert_eq!(ev_label(g.carrier(), p).unwrap().len(), p.event_count(g.carrier()));
    }
}

#[test]
fn maps_preserve_languages() {
    let mut rng = StdRng::seed_from_u64(42);
    for _ in 0..40 {
        let x = support::random_hda(&mut rng, 4, &["a", "b"]);
        let y = support::random_hda(&mut rng, 4, &["a", "b"]);
        let (sum, inj) = Hda::coproduct(&[&x, &y]);
        for (part, f) in [(&x, &inj[0]), (&y, &inj[1])] {
            validate_hda_map(f, part, &sum).unwrap();
            assert!(language(part, 3).is_subset(&language(&sum, 3)));
        }
    }
    let span = fixtures::pushout_counterexample();
    let (p, cocone) = Hda::pushout(&span).unwrap();
    for (obj, f) in [(&span.apex, &cocone[0]), (&span.left, &cocone[1]), (&span.right, &cocone[2])] {
        validate_hda_map(f, obj, &p).unwrap();
        assert!(language(obj, 2).is_subset(&language(&p, 2)));
    }
}

#[test]
fn map_validation_failures() {
    let e = fixtures::single_edge("a");
    validate_hda_map(&PrecubicalMap::identity(e.carrier()), &e, &e).unwrap();
    let unmarked = e.unmarked();
    let err = validate_hda_map(&PrecubicalMap::identity(e.carrier()), &e, &unmarked).unwrap_err();
    assert!(err.to_string().contains("start cell s"), "{err}");
    let collapse = PrecubicalMap::new(vec![0, 0, 0]);
    assert!(matches!(
        validate_hda_map(&collapse, &unmarked, &unmarked),
        Err(HdaError::InvalidMap(_))
    ));
}

#[test]
fn replicated_cells_branch_into_free_coordinates() {
    let a = fixtures::single_edge("a");
    for n in 0..=4 {
        let r = replicate(&a, n);
        r.validate().unwrap();
        for (k, c) in r.carrier().cells().iter().enumerate() {
            let island: usize = c.id().split(':').next().unwrap().parse().unwrap();
            assert_eq!(r.branching_degree(k).unwrap(), island - c.dimension(), "{}", c.id());
        }
        assert_eq!(r.start_cell_count(), n + 1);
        assert_eq!(r.carrier().len(), (0..=n).map(|m| 3usize.pow(m as u32)).sum::<usize>());
    }
    assert!(a.branching_degree(99).is_err());
}

#[test]
fn dot_output() {
    let g = fixtures::concurrent_grid();
    let dot = g.to_dot();
    assert!(dot.starts_with("digraph hda {"));
    assert!(dot.trim_end().ends_with('}'));
    assert_eq!(dot.matches("shape=doublecircle").count(), 2);
    assert_eq!(dot.matches("label=\"a\"").count(), 3);
    assert_eq!(dot.matches("shape=box").count(), 2);
    assert!(dot.contains("\"ABCD\""));
    assert_eq!(dot, g.to_dot());

    let cube = fixtures::single_edge("a").tensor(&fixtures::single_edge("b")).tensor(&fixtures::single_edge("c"));
    assert_eq!(cube.to_dot().matches("// cell").count(), 1);
}

#[test]
fn document_round_trip() {
    let mut rng = StdRng::seed_from_u64(43);
    for _ in 0..50 {
        let h = support::random_hda(&mut rng, 4, &["a", "b"]);
        let h = h.tensor(&support::random_hda(&mut rng, 2, &["c"]));
        let text = to_json(&HdaDoc::from(&h));
        let back = parse_hda(&text).unwrap();
        assert_eq!(back, h);
        assert_eq!(to_json(&HdaDoc::from(&back)), text);
    }
}

#[test]
fn empty_and_unit_automata() {
    assert!(language(&fixtures::empty_language(), 4).is_empty());
    let unit = language(&Hda::unit(), 4);
    assert_eq!(unit.generators(), &[Ipomset::empty()]);
    let e = fixtures::single_edge("a");
    assert!(language(&e.tensor(&Hda::unit()), 3).is_equal(&language(&e, 3)));
}

#[test]
fn branching_degree_counts_cofaces_one_dimension_up() {
    let e = fixtures::single_edge("a");
    assert_eq!(e.branching_degree(cell(&e, "s")).unwrap(), 1);
    assert_eq!(e.branching_degree(cell(&e, "e")).unwrap(), 0);
    let g = fixtures::concurrent_grid();
    assert_eq!(g.branching_degree(cell(&g, "C")).unwrap(), 4);
    assert_eq!(g.branching_degree(cell(&g, "DC")).unwrap(), 2);
    assert_eq!(g.branching_degree(cell(&g, "AB")).unwrap(), 1);
    assert_eq!(g.branching_degree(cell(&g, "H")).unwrap(), 2);
}
