mod common;

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{a_n, bump, full_twist, perturb};
use surfinv_core::braid::{BraidLetter, BraidWord};
use surfinv_core::chart::{build_movie, cocycle_invariant, find_path, validate_movie, MovieLimits, TorusChartMovie};
use surfinv_core::quandle::{theta_x, theta_z, trivial_quandle, LaurentPoly};

#[test]
fn invariant_does_not_depend_on_the_movie() {
    let q = trivial_quandle(3).unwrap();
    let theta = theta_z(3).unwrap();
    let (a, b) = (a_n(0), full_twist());
    let base = build_movie(&a, &b, &MovieLimits::default()).unwrap();
    let phi = cocycle_invariant(&base, &q, &theta).unwrap();
    assert_eq!(phi, LaurentPoly::from_terms([(-2, 4), (0, 21), (4, 2)]));

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut seen = BTreeSet::new();
    let mut with_new_vertices = 0;
    let mut attempts = 0;
    while seen.len() < 60 {
        attempts += 1;
        assert!(attempts < 1000, "too few perturbations succeeded");
        let events = if attempts % 4 == 0 { Some(bump(&base, &mut rng)) } else { perturb(&base, &mut rng) };
        let Some(events) = events else { continue };
        let m = TorusChartMovie::new(a.clone(), b.clone(), events.clone()).unwrap();
        validate_movie(&m).unwrap();
        assert_eq!(cocycle_invariant(&m, &q, &theta).unwrap(), phi, "events {events:?}");
        if m.r3_count() != base.r3_count() {
            with_new_vertices += 1;
        }
        seen.insert(events);
    }
    assert!(with_new_vertices > 0);
}

#[test]
fn global_search_agrees_with_tiles() {
    let q = trivial_quandle(3).unwrap();
    let theta = theta_z(3).unwrap();
    for n in [-1, 0, 1] {
        let (a, b) = (a_n(n), full_twist());
        let tiled = build_movie(&a, &b, &MovieLimits::default()).unwrap();
        let mut from = b.letters().to_vec();
        from.extend_from_slice(a.letters());
        let mut to = a.letters().to_vec();
        to.extend_from_slice(b.letters());
        let events = find_path(&from, &to, 3, &MovieLimits::default()).unwrap();
        let global = TorusChartMovie::new(a, b, events).unwrap();
        validate_movie(&global).unwrap();
        assert_eq!(
            cocycle_invariant(&global, &q, &theta).unwrap(),
            cocycle_invariant(&tiled, &q, &theta).unwrap()
        );
    }
}

/// Conjugating by the half twist renames strand `j` to `m + 1 - j`.
fn flipped(w: &BraidWord) -> BraidWord {
    let m = w.degree();
    let letters = w.letters().iter().map(|l| BraidLetter::new(m - l.index(), l.is_positive())).collect();
    BraidWord::new(m, letters).unwrap()
}

#[test]
fn strand_relabeling_keeps_the_invariant() {
    let q = trivial_quandle(3).unwrap();
    for theta in [theta_z(3).unwrap(), theta_x(3).unwrap()] {
        for n in -2..=2 {
            let (a, b) = (a_n(n), full_twist());
            let m = build_movie(&a, &b, &MovieLimits::default()).unwrap();
            let f = build_movie(&flipped(&a), &flipped(&b), &MovieLimits::default()).unwrap();
            assert_eq!(cocycle_invariant(&m, &q, &theta).unwrap(), cocycle_invariant(&f, &q, &theta).unwrap());
        }
    }
}

#[test]
fn zero_cocycle_counts_colorings() {
    let q = trivial_quandle(3).unwrap();
    let zero = surfinv_core::Cocycle3::zero(q.clone());
    for n in -2..=2 {
        let m = build_movie(&a_n(n), &full_twist(), &MovieLimits::default()).unwrap();
        assert_eq!(cocycle_invariant(&m, &q, &zero).unwrap(), LaurentPoly::constant(27));
        assert_eq!(cocycle_invariant(&m, &q, &theta_z(3).unwrap()).unwrap().eval_at_one(), 27);
    }
}
