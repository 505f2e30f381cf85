mod common;

use systolic::complex::simplex;
use systolic::generate::tri_grid;
use systolic::helly::{fill_disc, helly_point, DiscOutcome, HellyInput, HellyOutcome, Stage};
use systolic::{verify, Complex, Error, HypothesisFailure, Vertex};

use common::hex_config;

fn vs(ids: &[u32]) -> Vec<Vertex> {
    ids.iter().copied().map(Vertex).collect()
}

#[test]
fn coned_hexagon_gives_a_verified_nontrivial_certificate() {
    let input = hex_config(true);
    let HellyOutcome::Certificate(c) = helly_point(&input).unwrap() else { panic!("no certificate") };
    assert!(!c.is_trivial());
    verify::certificate(&input.x, &input.a, &c.simplex).unwrap();
    let w = c.witness.as_ref().unwrap();
    verify::witness(&input.x, &input.a, &c.simplex, w).unwrap();
    assert_eq!(w.sphere.euler_characteristic(), 2);
    for i in 0..4 {
        assert!(c.membership[i][i]);
    }
}

#[test]
fn helly_point_is_deterministic() {
    let input = hex_config(true);
    assert_eq!(helly_point(&input).unwrap(), helly_point(&input).unwrap());
}

#[test]
fn tampered_witness_is_rejected() {
    let input = hex_config(true);
    let HellyOutcome::Certificate(c) = helly_point(&input).unwrap() else { panic!("no certificate") };
    let mut w = c.witness.clone().unwrap();
    let [u, v] = [w.rainbow.vertices()[0], w.rainbow.vertices()[1]];
    w.coloring.set(u, w.coloring.get(v).unwrap());
    assert!(verify::witness(&input.x, &input.a, &c.simplex, &w).is_err());

    let mut moved = c.simplex;
    moved[0] = input.x.vertices().find(|&v| !input.a[0].has_vertex(v)).unwrap();
    assert!(verify::certificate(&input.x, &input.a, &moved).is_err());
}

#[test]
fn annulus_on_the_plain_grid_is_obstructed() {
    let HellyOutcome::Unknown(s) = helly_point(&hex_config(false)).unwrap() else { panic!("unexpected certificate") };
    assert_eq!(s.stage, Stage::Disc(3));
}

#[test]
fn disconnected_pair_is_reported_with_components() {
    let x = tri_grid(3, 1).unwrap();
    let sub = |ids: &[u32]| x.full_subcomplex(&vs(ids).into_iter().collect()).unwrap();
    // A0 ∩ A1 = {0, 3}, two separate vertices on the bottom row
    let a = [sub(&[0, 1, 2, 3]), sub(&[0, 3, 4, 5, 6, 7]), x.clone(), x.clone()];
    let err = helly_point(&HellyInput::new(x.clone(), a)).unwrap_err();
    match err {
        Error::Hypothesis(HypothesisFailure::DisconnectedPair { i: 0, j: 1, components }) => {
            assert_eq!(components, vec![vs(&[0]), vs(&[3])]);
        }
        other => panic!("{other}"),
    }
}

#[test]
fn set_outside_x_is_rejected() {
    let x = tri_grid(2, 2).unwrap();
    let stray = Complex::from_simplices([simplex(&[0, 100])]);
    let err = helly_point(&HellyInput::new(x.clone(), [stray, x.clone(), x.clone(), x])).unwrap_err();
    assert!(matches!(err, Error::Hypothesis(HypothesisFailure::NotSubcomplex { index: 0, .. })));
}

#[test]
fn disc_examples() {
    let x = tri_grid(2, 2).unwrap();
    let DiscOutcome::Filled(d) = fill_disc(&x, &vs(&[0, 1, 3]), 10).unwrap() else { panic!() };
    assert_eq!(d.area(), 1);

    let DiscOutcome::Filled(d) = fill_disc(&x, &vs(&[0, 1, 0]), 10).unwrap() else { panic!() };
    assert_eq!(d.area(), 0);

    // hexagon around the centre vertex 4
    let DiscOutcome::Filled(d) = fill_disc(&x, &vs(&[1, 2, 5, 7, 6, 3]), 10).unwrap() else { panic!() };
    assert!(d.area() <= 6);

    assert!(fill_disc(&x, &vs(&[0, 2]), 10).is_err());
}
