//! Hand-computed values through the public API.

use azi::enumerate::canonical_form;
use azi::families::{construct_b_prime, construct_lemma1, construct_psi, construct_u_prime, phi1_member, CycleClass, Lemma1Shape};
use azi::indices::{
    abc, azi, bicyclic_bounds, f_bicyclic, huang_upper_bound, ng_bounds, pendant_lower_bound_for, unicyclic_bounds,
    wang_lower_bound, wang_pendant_lower_bound, NgInputs,
};
use azi::{Error, Graph, Rational};

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}

fn g(n: usize, e: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, e).unwrap()
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
}

fn path(n: usize) -> Graph {
    Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
}

fn complete(n: usize) -> Graph {
    Graph::from_edges(n, &(0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect::<Vec<_>>()).unwrap()
}

fn paw() -> Graph {
    g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)])
}

#[test]
fn construction_and_structure() {
    assert_eq!(Graph::from_edges(4, &[(0, 1), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
    assert!(cycle(5).is_connected());
    assert!(!g(4, &[(0, 1), (2, 3)]).is_connected());
    assert!(!path(3).complement().is_connected());
    let p = paw().degree_profile();
    assert_eq!((p.pendants, p.x(2, 3), p.x(2, 2), p.x(1, 3)), (1, 2, 1, 1));
    let c6 = cycle(6).degree_profile();
    assert_eq!((c6.n_i(2), c6.x(2, 2), c6.pendants, c6.min_non_pendant_degree), (6, 6, 0, Some(2)));
    assert_eq!(complete(4).n3_prime(), 4);
    assert_eq!(g(4, &[(0, 1), (0, 2), (0, 3)]).n3_prime(), 0);
    assert_eq!(paw().n3_prime(), 0);
    assert_eq!(cycle(7).cyclomatic(), Ok(1));
    assert_eq!(construct_lemma1(Lemma1Shape::Theta { a: 2, b: 2, c: 1 }).unwrap().cyclomatic(), Ok(2));
    assert_eq!(path(9).cyclomatic(), Ok(0));
    assert!(complete(5).is_chemical() && !complete(6).is_chemical());
    assert!(!g(4, &[(0, 1), (2, 3)]).is_chemical());
    assert!(path(4).isomorphic(&path(4).complement()));
    assert!(!cycle(4).isomorphic(&g(4, &[(0, 1), (1, 2), (0, 2)])));
    assert_ne!(canonical_form(&cycle(4)).unwrap(), canonical_form(&path(4)).unwrap());
}

#[test]
fn index_values() {
    for n in 3..10 {
        assert_eq!(azi(&cycle(n)).unwrap(), Rational::integer(8 * n as i64));
    }
    assert_eq!(azi(&path(4)).unwrap(), Rational::integer(24));
    assert_eq!(azi(&construct_b_prime(0).unwrap()).unwrap(), r(7904, 27));
    assert_eq!(azi(&complete(4)).unwrap(), r(2187, 32));
    assert_eq!(abc(&path(2)).unwrap(), 0.0);
    assert!((abc(&cycle(6)).unwrap() - 4.242640687).abs() < 1e-9);
    assert!((abc(&path(4)).unwrap() - 2.121320344).abs() < 1e-9);
}

#[test]
fn bicyclic_functional() {
    assert_eq!(f_bicyclic(&construct_b_prime(0).unwrap()).unwrap(), r(-2072, 27));
    let shared = construct_lemma1(Lemma1Shape::TwoCyclesSharedVertex { a: 3, b: 4 }).unwrap();
    assert!(f_bicyclic(&shared).unwrap().is_zero());
    let theta = construct_lemma1(Lemma1Shape::Theta { a: 3, b: 2, c: 1 }).unwrap();
    assert_eq!(f_bicyclic(&theta).unwrap(), r(-217, 64));
    assert!(matches!(f_bicyclic(&cycle(5)), Err(Error::WrongCyclomatic { .. })));
}

#[test]
fn bound_values() {
    for n in 4..30 {
        let k = n as i64;
        assert_eq!(wang_lower_bound(n, n + 1, 4).unwrap(), r(4 * (35 * k + 111), 27));
        assert_eq!(wang_lower_bound(n, n, 4).unwrap(), r(140 * k, 27));
        assert_eq!(wang_lower_bound(n, n + 1, 3).unwrap(), r(155 * k + 377, 24));
    }
    assert!(wang_lower_bound(5, 4, 1).is_err());
    assert_eq!(huang_upper_bound(5, 2).unwrap(), Rational::integer(40));
    assert_eq!(huang_upper_bound(6, 3).unwrap(), r(2187, 32));
    assert_eq!(huang_upper_bound(3, 2).unwrap(), Rational::integer(24));
    assert!(huang_upper_bound(3, 1).is_err());

    assert!(wang_pendant_lower_bound(4, 4, 4, None).is_err());
    assert_eq!(wang_pendant_lower_bound(5, 0, 2, Some(2)).unwrap(), Rational::integer(40));
    assert_eq!(wang_pendant_lower_bound(4, 1, 3, Some(2)).unwrap(), r(219, 8));
    assert!(phi1_member(&paw()));
    let star = pendant_lower_bound_for(&g(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])).unwrap();
    assert!(star.all_pendant);

    let p4 = NgInputs { n: 4, alpha: 2, beta: 2, p: 2, p_bar: 2 };
    assert_eq!(ng_bounds(&p4).unwrap(), (Rational::integer(48), Rational::integer(48)));
    let c5 = NgInputs { n: 5, alpha: 2, beta: 2, p: 0, p_bar: 0 };
    assert_eq!(ng_bounds(&c5).unwrap(), (Rational::integer(80), Rational::integer(80)));
    let p5 = NgInputs::of(&path(5)).unwrap();
    assert_eq!(p5, NgInputs { n: 5, alpha: 2, beta: 3, p: 2, p_bar: 0 });
    assert_eq!(ng_bounds(&p5).unwrap(), (r(2047, 32), r(3645, 32)));
    assert!(ng_bounds(&NgInputs { n: 3, alpha: 2, beta: 2, p: 0, p_bar: 0 }).is_err());

    assert_eq!(bicyclic_bounds(7).0, r(1424, 27));
    assert_eq!(bicyclic_bounds(26).1, r(7904, 27));
    assert_eq!(bicyclic_bounds(5), (r(1144, 27), r(1376, 27) + r(416, 15)));
    assert_eq!(unicyclic_bounds(8), (r(1120, 27), r(11008, 135)));
    assert_eq!(unicyclic_bounds(15).1, azi(&construct_u_prime(0).unwrap()).unwrap());
    let (lo, hi) = unicyclic_bounds(3);
    assert_eq!((lo.clone(), hi.clone()), (r(140, 9), r(1376, 45)));
    assert!(lo < Rational::integer(24) && Rational::integer(24) < hi);
}

#[test]
fn psi_profile() {
    let p = construct_psi(7, CycleClass::Bicyclic).unwrap().degree_profile();
    assert_eq!((p.n_i(4), p.n_i(2), p.n_i(1), p.x(2, 4), p.x(1, 4)), (2, 3, 2, 6, 2));
}
