mod support;

use hda_core::format::{parse_ipomset, to_json, IpomsetDoc};
use hda_core::ipomset::{canonicalize, validate, IpomsetError, RawIpomset};
use hda_core::{Ipomset, Symbol};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn serial(p: &Ipomset, q: &Ipomset) -> Ipomset {
    let n = p.len();
    let mut raw = RawIpomset::new(p.labels().iter().chain(q.labels()).map(|l| l.to_string()));
    for x in 0..n {
        for y in 0..q.len() {
            raw = raw.precede(x, n + y);
        }
    }
    for (x, y) in p.precedence_pairs() {
        raw = raw.precede(x, y);
    }
    for (x, y) in q.precedence_pairs() {
        raw = raw.precede(n + x, n + y);
    }
    for (x, y) in p.event_order_pairs() {
        raw = raw.order(x, y);
    }
    for (x, y) in q.event_order_pairs() {
        raw = raw.order(n + x, n + y);
    }
    for s in p.sources() {
        raw = raw.source(s);
    }
    for t in q.targets() {
        raw = raw.target(n + t);
    }
    validate(&raw).unwrap()
}

fn without_interfaces(p: &Ipomset) -> Ipomset {
    let mut raw = p.to_raw();
    raw.sources.clear();
    raw.targets.clear();
    validate(&raw).unwrap()
}

#[test]
fn canonical_form_ignores_numbering() {
    let all = support::universe(3, &["a", "b"]);
    let perms = support::permutations(3);
    for p in &all {
        for perm in perms.iter().filter(|f| f.len() == p.len()) {
            assert_eq!(&support::renumbered(p, perm), p);
        }
    }
}

#[test]
fn canonicalize_returns_a_valid_renumbering() {
    let raw = RawIpomset::new(["b", "a", "c"]).precede(2, 0).order(1, 0).order(1, 2);
    let (p, renumbering) = canonicalize(&raw).unwrap();
    for (x, y) in raw.precedence.iter().copied() {
        assert!(p.precedes(renumbering[x], renumbering[y]));
    }
    for (old, &new) in renumbering.iter().enumerate() {
        assert_eq!(p.label(new).as_str(), raw.labels[old]);
    }
}

#[test]
fn interval_recognition_matches_brute_force() {
    for p in support::universe(4, &["a", "b"]) {
        match p.interval_representation() {
            Ok(rep) => {
                assert!(!support::has_two_plus_two(&p), "{p}");
                assert!(rep.represents(&p));
            }
            Err(w) => {
                assert!(support::has_two_plus_two(&p), "{p}");
                assert!(w.holds_in(&p));
            }
        }
    }
}

#[test]
fn validation_errors() {
    let cyc = RawIpomset::new(["a", "b"]).precede(0, 1).precede(1, 0);
    assert!(matches!(validate(&cyc), Err(IpomsetError::CycleInPrecedence(_))));
    let src = RawIpomset::new(["a", "b"]).precede(0, 1).source(1);
    assert_eq!(validate(&src), Err(IpomsetError::SourceNotMinimal(1)));
    let tgt = RawIpomset::new(["a", "b"]).precede(0, 1).target(0);
    assert_eq!(validate(&tgt), Err(IpomsetError::TargetNotMaximal(0)));
    let open = RawIpomset::new(["a", "b"]);
    assert!(matches!(validate(&open), Err(IpomsetError::EventOrderIncomplete(..))));
    let lab = RawIpomset::new(["a", ""]).precede(0, 1);
    assert_eq!(validate(&lab), Err(IpomsetError::LabelMissing(1)));
    let range = RawIpomset::new(["a"]).precede(0, 3);
    assert!(matches!(validate(&range), Err(IpomsetError::UnknownEvent { index: 3, len: 1 })));
    let too_many = RawIpomset::new(vec!["a"; 65]);
    assert_eq!(validate(&too_many), Err(IpomsetError::TooManyEvents(65)));
    let order_cycle = RawIpomset::new(["a", "b", "c"]).order(0, 1).order(1, 2).order(2, 0);
    assert!(matches!(validate(&order_cycle), Err(IpomsetError::EventOrderCycle(_))));
}

#[test]
fn gluing_without_interfaces_is_serial() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let p = without_interfaces(&support::random_interval_ipomset(&mut rng, 3, &["a", "b"]));
        let q = without_interfaces(&support::random_interval_ipomset(&mut rng, 3, &["a", "b"]));
        let g = p.glue(&q).unwrap();
        assert_eq!(g, serial(&p, &q));
        assert!(g.subsumed_by(&p.parallel(&q)).is_some());
        assert!(g.is_interval());
    }
}

#[test]
fn gluing_is_associative_with_identities() {
    let mut rng = StdRng::seed_from_u64(12);
    let mut glued = 0;
    for _ in 0..2000 {
        let p = support::random_interval_ipomset(&mut rng, 3, &["a", "b"]);
        let q = support::random_interval_ipomset(&mut rng, 3, &["a", "b"]);
        let r = support::random_interval_ipomset(&mut rng, 3, &["a", "b"]);
        let left_id = Ipomset::discrete(&p.source_word(), full(p.sources().count()), full(p.sources().count()));
        let right_id = Ipomset::discrete(&p.target_word(), full(p.targets().count()), full(p.targets().count()));
        assert_eq!(left_id.glue(&p).unwrap(), p);
        assert_eq!(p.glue(&right_id).unwrap(), p);
        if let (Ok(pq), Ok(qr)) = (p.glue(&q), q.glue(&r)) {
            assert_eq!(pq.glue(&r).unwrap(), p.glue(&qr).unwrap());
            glued += 1;
        }
    }
    assert!(glued > 50, "only {glued} composable triples");
}

fn full(n: usize) -> u64 {
    (1u64 << n) - 1
}

#[test]
fn parallel_composition_is_a_monoid() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..300 {
        let p = support::random_interval_ipomset(&mut rng, 3, &["a", "b"]);
        let q = support::random_interval_ipomset(&mut rng, 3, &["a", "b"]);
        let r = support::random_interval_ipomset(&mut rng, 2, &["a", "b"]);
        assert_eq!(p.parallel(&q).parallel(&r), p.parallel(&q.parallel(&r)));
        assert_eq!(Ipomset::empty().parallel(&p), p);
        let pq = p.parallel(&q);
        assert_eq!(pq.len(), p.len() + q.len());
        let discrete = |x: &Ipomset| x.precedence_pairs().next().is_none();
        assert_eq!(pq.is_interval(), discrete(&p) || discrete(&q));
        assert_eq!(pq.sources().count(), p.sources().count() + q.sources().count());
    }
}

#[test]
fn gluing_interface_mismatch() {
    let a: Vec<Symbol> = vec!["a".into()];
    let ab: Vec<Symbol> = vec!["a".into(), "b".into()];
    let p = Ipomset::discrete(&ab, 0, 0b11);
    let q = Ipomset::discrete(&a, 1, 0);
    assert!(!p.matches_sequentially(&q));
    assert!(matches!(p.glue(&q), Err(IpomsetError::SequentialMismatch { .. })));
}

#[test]
fn down_set_matches_extension_oracle() {
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..150 {
        let p = support::random_interval_ipomset(&mut rng, 4, &["a", "b"]);
        assert_eq!(p.interval_down_set(), support::all_extensions(&p), "{p}");
    }
}

#[test]
fn subsumption_witnesses_check_out() {
    let mut rng = StdRng::seed_from_u64(15);
    let perms: Vec<Vec<Vec<usize>>> = (0..=4).map(support::permutations).collect();
    for _ in 0..400 {
        let p = support::random_interval_ipomset(&mut rng, 4, &["a", "b"]);
        let below: Vec<_> = p.down_set().into_iter().collect();
        let q = &below[rng.gen_range(0..below.len())];
        let f = q.subsumed_by(&p).expect("down-set members are below");
        assert!(q.is_subsumption_witness(&p, &f));
        let back = p.subsumed_by(q).is_some();
        assert_eq!(back, support::subsumes_by_definition(&p, q, &perms[p.len()]));
        assert_eq!(back, &p == q);
    }
}

fn arb_interval() -> impl Strategy<Value = Ipomset> {
    any::<u64>().prop_map(|seed| {
        support::random_interval_ipomset(&mut StdRng::seed_from_u64(seed), 5, &["a", "b", "c"])
    })
}

proptest! {
    #[test]
    fn document_round_trip(p in arb_interval()) {
        let text = to_json(&IpomsetDoc::from(&p));
        let back = parse_ipomset(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(to_json(&IpomsetDoc::from(&back)), text);
    }

    #[test]
    fn renumbering_preserves_canonical_form(p in arb_interval(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..p.len()).collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        prop_assert_eq!(support::renumbered(&p, &perm), p);
    }

    #[test]
    fn interval_order_of_random_intervals(p in arb_interval()) {
        let rep = p.interval_representation().unwrap();
        prop_assert!(rep.represents(&p));
    }
}
