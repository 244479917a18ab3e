//! Cross-module invariants of the walk operator and the connection sets.

use ndarray::Array2;
use proptest::prelude::*;
use skewmix::chartable::CharacterTable;
use skewmix::gf2n::FieldCtx;
use skewmix::group::{Policy, SuzukiGroup};
use skewmix::walk::{
    evolve_dense, skew_matrix, verify_um_exact, verify_um_spectral, OrientedCayley, SkewMatrix,
    Tau,
};
use std::f64::consts::PI;

fn group(n: u32) -> SuzukiGroup {
    let e = if n == 1 { 0 } else { 1 };
    SuzukiGroup::new(FieldCtx::new(n, e, None).unwrap())
}

fn lex_skew(g: &SuzukiGroup) -> SkewMatrix {
    let conn = g.build_connection_set(Policy::Lex).unwrap();
    skew_matrix(&OrientedCayley::from_suzuki(g, &conn).unwrap())
}

fn max_abs_diff(a: &Array2<f64>, b: &Array2<f64>) -> f64 {
    (a - b).iter().map(|x| x.abs()).fold(0.0f64, f64::max)
}

#[test]
fn walk_operator_is_orthogonal_at_any_time() {
    let g = group(3);
    let s = lex_skew(&g);
    for tau in [0.0, 0.3, PI / 16.0, 1.0, 2.71] {
        let u = evolve_dense(&s, tau).unwrap();
        let id = u.dot(&u.t());
        let diff = max_abs_diff(&id, &Array2::eye(64));
        assert!(diff < 1e-10, "tau={tau}: {diff}");
    }
}

#[test]
fn evolution_is_additive_in_time() {
    let g = group(3);
    let s = lex_skew(&g);
    for (a, b) in [(0.1, 0.2), (PI / 32.0, PI / 32.0), (0.7, -0.3)] {
        let lhs = evolve_dense(&s, a + b).unwrap();
        let rhs = evolve_dense(&s, a).unwrap().dot(&evolve_dense(&s, b).unwrap());
        assert!(max_abs_diff(&lhs, &rhs) < 1e-9, "a={a} b={b}");
    }
}

#[test]
fn time_reversal_is_transpose() {
    let g = group(3);
    let s = lex_skew(&g);
    let fwd = evolve_dense(&s, 0.4).unwrap();
    let back = evolve_dense(&s, -0.4).unwrap();
    assert!(max_abs_diff(&back, &fwd.t().to_owned()) < 1e-11);
}

#[test]
fn generator_commutes_with_the_evolution() {
    let g = group(3);
    let s = lex_skew(&g);
    let u = evolve_dense(&s, 0.25).unwrap();
    let sd = s.to_dense();
    assert!(max_abs_diff(&sd.dot(&u), &u.dot(&sd)) < 1e-11);
}

#[test]
fn spectral_route_reaches_beyond_the_dense_limit() {
    let g = group(7);
    let conn = g.build_connection_set(Policy::Lex).unwrap();
    let table = CharacterTable::new(&g, Some(&conn));
    let (report, op) = verify_um_spectral(&table, &conn, Tau::mixing_time(7));
    assert!(report.is_uniform);
    assert_eq!(op.dim(), 1 << 14);
    // Spot entries still answer in O(1) at this size.
    let z = op.entry(12345, 6789);
    assert!((z.norm() - 1.0 / 128.0).abs() < 1e-9);
}

#[test]
fn exact_and_numeric_verdicts_agree_on_a_time_grid() {
    let g = group(3);
    let conn = g.build_connection_set(Policy::Lex).unwrap();
    let table = CharacterTable::new(&g, Some(&conn));
    let graph = OrientedCayley::from_suzuki(&g, &conn).unwrap();
    // pow2 = 4 is the mixing time; 3 is its double; 2 doubles again.
    for pow2 in [2u32, 3, 4] {
        let exact = verify_um_exact(&table, &conn, 1, pow2).unwrap();
        let (numeric, _) = skewmix::walk::verify_um_dense(&graph, Tau::dyadic(1, pow2)).unwrap();
        assert_eq!(exact.is_uniform, numeric.is_uniform, "pow2={pow2}");
        assert_eq!(exact.is_uniform, pow2 == 4);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn seeded_connection_sets_are_always_valid(seed: u64) {
        let g = group(3);
        let conn = g.build_connection_set(Policy::Seeded(seed)).unwrap();
        prop_assert!(g.validate_connection_set(&conn).is_ok());
    }

    #[test]
    fn connection_sets_are_conjugation_closed(seed: u64, pick: usize, conj: u64) {
        let g = group(5);
        let conn = g.build_connection_set(Policy::Seeded(seed)).unwrap();
        let members = conn.elements(&g);
        let c = members[pick % members.len()];
        let t = g.element_at(conj % g.order());
        prop_assert!(conn.contains(&g, g.g_conj(c, t)));
    }

    #[test]
    fn dyadic_times_round_trip_through_description(num in 1i64..64, pow2 in 0u32..12) {
        let tau = Tau::dyadic(num, pow2);
        let desc = tau.describe();
        prop_assert!(desc.symbolic.is_some());
        prop_assert!((desc.decimal - num as f64 * PI / f64::powi(2.0, pow2 as i32)).abs() < 1e-12);
    }
}
