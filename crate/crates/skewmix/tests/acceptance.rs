//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with --nocapture). Tolerances and time budgets
//! are part of the criteria, not implementation details.

use skewmix::chartable::CharacterTable;
use skewmix::gf2n::FieldCtx;
use skewmix::group::{Policy, SuzukiGroup};
use skewmix::walk::{
    cartesian_product, dense_spectrum_of_i_s, eigenvalues, evolve_dense, evolve_spectral,
    extract_hadamard, hadamard_matches_class_sums, skew_matrix, verify_um_dense, verify_um_exact,
    OrientedCayley, Tau,
};
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

fn group(n: u32) -> SuzukiGroup {
    let e = if n == 1 { 0 } else { 1 };
    SuzukiGroup::new(FieldCtx::new(n, e, None).unwrap())
}

fn report(id: u32, ok: bool, desc: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {id:02}: {verdict} - {desc}");
    assert!(ok, "criterion {id:02} failed: {desc}");
}

#[test]
fn criterion_01_exact_uniform_mixing() {
    let mut ok = true;
    for n in [1u32, 3, 5, 7, 9] {
        let start = Instant::now();
        let g = group(n);
        let conn = g.build_connection_set(Policy::Lex).unwrap();
        let table = CharacterTable::new(&g, Some(&conn));
        let r = verify_um_exact(&table, &conn, 1, n + 1).unwrap();
        let elapsed = start.elapsed().as_secs_f64();
        ok &= r.is_uniform && elapsed < 10.0;
    }
    report(1, ok, "exact route: uniform at pi/2^(n+1) for n in {1,3,5,7,9}, each under 10 s");
}

#[test]
fn criterion_02_numeric_uniform_mixing() {
    let mut ok = true;
    for (n, tol, budget) in [(1u32, 1e-10, 10.0), (3, 1e-10, 5.0), (5, 1e-9, 60.0)] {
        let start = Instant::now();
        let g = group(n);
        let conn = g.build_connection_set(Policy::Lex).unwrap();
        let table = CharacterTable::new(&g, Some(&conn));
        let graph = OrientedCayley::from_suzuki(&g, &conn).unwrap();
        let tau = Tau::mixing_time(n);
        let target = f64::powi(2.0, -(n as i32));

        let dense_u = evolve_dense(&skew_matrix(&graph), tau.value).unwrap();
        let flat_dev = dense_u
            .iter()
            .map(|e| (e.abs() - target).abs())
            .fold(0.0f64, f64::max);

        let spectral_u = evolve_spectral(&table, &conn, tau.value).to_matrix().unwrap();
        let route_diff = (&dense_u - &spectral_u)
            .iter()
            .map(|x| x.abs())
            .fold(0.0f64, f64::max);

        let elapsed = start.elapsed().as_secs_f64();
        ok &= flat_dev <= tol && route_diff <= 1e-9 && elapsed < budget;
    }
    report(2, ok, "dense e^(tau S) flat to tolerance and agrees with spectral route for n in {1,3,5}");
}

#[test]
fn criterion_03_hadamard_extraction() {
    let mut ok = true;
    for n in [1u32, 3, 5] {
        let g = group(n);
        let conn = g.build_connection_set(Policy::Lex).unwrap();
        let graph = OrientedCayley::from_suzuki(&g, &conn).unwrap();
        let u = evolve_dense(&skew_matrix(&graph), Tau::mixing_time(n).value).unwrap();
        match extract_hadamard(&u) {
            Ok(h) => {
                ok &= h.verify() && hadamard_matches_class_sums(&h, &g, &conn);
            }
            Err(_) => ok = false,
        }
    }
    report(3, ok, "sqrt(|G|)U rounds to H with HH^T = |G|I and matches signed class sums for n in {1,3,5}");
}

#[test]
fn criterion_04_structure_counts() {
    let mut ok = true;
    for n in [3u32, 5] {
        let g = group(n);
        let q = 1u64 << n;
        let singles = g.classes().iter().filter(|c| c.size == 1).count() as u64;
        let half = g
            .classes()
            .iter()
            .filter(|c| c.size == q / 2 && !c.is_central)
            .count() as u64;
        ok &= singles == q && half == 2 * (q - 1);
        ok &= g.classes().len() as u64 == q + 2 * (q - 1);

        let conn = g.build_connection_set(Policy::Lex).unwrap();
        ok &= conn.size == (q / 2) * (q - 1);

        // Brute-force conjugation orbits must equal the structural classes.
        let elements: Vec<_> = g.elements().collect();
        let mut seen = BTreeSet::new();
        let mut orbit_count = 0u64;
        for &x in &elements {
            if seen.contains(&x) {
                continue;
            }
            let orbit: BTreeSet<_> = elements.iter().map(|&t| g.g_conj(x, t)).collect();
            let id = g.class_id_of(x);
            let structural: BTreeSet<_> = g.class_elements(id).into_iter().collect();
            ok &= orbit == structural;
            seen.extend(orbit);
            orbit_count += 1;
        }
        ok &= orbit_count == q + 2 * (q - 1);
    }
    report(4, ok, "class sizes, |C| = 2^(n-1)(2^n-1), and brute-force orbit agreement for n in {3,5}");
}

#[test]
fn criterion_05_no_order_four_element_meets_its_inverse() {
    let mut ok = true;
    for n in [3u32, 5] {
        let g = group(n);
        let elements: Vec<_> = g.elements().collect();
        for &x in &elements {
            if x.is_central() {
                continue;
            }
            let inv = g.g_inv(x);
            ok &= elements.iter().all(|&t| g.g_conj(x, t) != inv);
        }
    }
    report(5, ok, "exhaustively, no order-4 element is conjugate to its inverse for n in {3,5}");
}

#[test]
fn criterion_06_character_table_integrity() {
    let mut ok = true;
    for n in [1u32, 3, 5, 7] {
        let g = group(n);
        let table = CharacterTable::new(&g, None);
        let orth = table.verify_orthogonality().unwrap();
        ok &= orth.all_ok();
        let degsum: u64 = table.characters().iter().map(|c| c.degree * c.degree).sum();
        ok &= degsum == 1u64 << (2 * n);
    }
    report(6, ok, "exact row/column orthogonality and sum of squared degrees = 2^(2n) for n in {1,3,5,7}");
}

#[test]
fn criterion_07_eigenvalue_structure() {
    let mut ok = true;
    for n in [3u32, 5] {
        let g = group(n);
        let conn = g.build_connection_set(Policy::Lex).unwrap();
        let table = CharacterTable::new(&g, Some(&conn));
        let spectrum = eigenvalues(&table, &conn);
        let q = 1i64 << n;
        let half = (q as u64 / 2) * (q as u64 - 1);
        let expect = BTreeMap::from([(0i64, q as u64), (q, half), (-q, half)]);
        ok &= spectrum.tally() == expect;
    }

    // Numeric cross-check at n=3: the Hermitian iS via its real symmetric
    // embedding, spectrum doubled.
    let g = group(3);
    let conn = g.build_connection_set(Policy::Lex).unwrap();
    let graph = OrientedCayley::from_suzuki(&g, &conn).unwrap();
    let eig = dense_spectrum_of_i_s(&skew_matrix(&graph)).unwrap();
    let mut expected = Vec::new();
    expected.extend(std::iter::repeat_n(-8.0, 56));
    expected.extend(std::iter::repeat_n(0.0, 16));
    expected.extend(std::iter::repeat_n(8.0, 56));
    ok &= eig.len() == expected.len();
    ok &= eig
        .iter()
        .zip(&expected)
        .all(|(got, want)| (got - want).abs() < 1e-8);

    report(7, ok, "spectrum {0, +2^n i, -2^n i} with multiplicities 2^n and 2^(n-1)(2^n-1), dense cross-check at n=3");
}

#[test]
fn criterion_08_negative_control_at_double_time() {
    let g = group(3);
    let conn = g.build_connection_set(Policy::Lex).unwrap();
    let table = CharacterTable::new(&g, Some(&conn));
    let r = verify_um_exact(&table, &conn, 1, 3).unwrap();
    report(8, !r.is_uniform, "exact route reports non-uniform at pi/2^n for n=3");
}

#[test]
fn criterion_09_cartesian_product_closure() {
    let g = group(1);
    let conn = g.build_connection_set(Policy::Lex).unwrap();
    let c4 = OrientedCayley::from_suzuki(&g, &conn).unwrap();
    let prod = cartesian_product(&c4, &c4);
    let (r, u) = verify_um_dense(&prod, Tau::dyadic(1, 2)).unwrap();
    let dev = u
        .iter()
        .map(|e| (e.abs() - 0.25).abs())
        .fold(0.0f64, f64::max);
    report(
        9,
        prod.dim() == 16 && r.is_uniform && dev <= 1e-10,
        "product of two 4-cycles is flat at pi/4 with |entries| = 1/4 within 1e-10",
    );
}

#[test]
fn criterion_10_difference_multiset() {
    let mut ok = true;
    for n in [3u32, 5] {
        let g = group(n);
        let conn = g.build_connection_set(Policy::Lex).unwrap();
        let csize = conn.size;
        let expect = csize * (csize - 1) / (g.order() - 1);
        ok &= g.difference_multiset_check(&conn).unwrap() == Some(expect);
    }
    report(10, ok, "connection-set differences cover G\\{1} uniformly with multiplicity |C|(|C|-1)/(|G|-1) for n in {3,5}");
}

#[test]
fn criterion_11_determinism_and_seeded_variants() {
    let mut ok = true;

    // Independent constructions with the same config serialize identically.
    let export = |seed: u64| -> (String, String, String) {
        let g = group(3);
        let conn = g.build_connection_set(Policy::Seeded(seed)).unwrap();
        let table = CharacterTable::new(&g, Some(&conn));
        let classes = serde_json::to_string(&g.classes().to_vec()).unwrap();
        let chars = serde_json::to_string(&table.export().unwrap()).unwrap();
        let spectrum_json = serde_json::to_string(&eigenvalues(&table, &conn)).unwrap();
        (classes, chars, spectrum_json)
    };
    ok &= export(17) == export(17);

    // Different seeds give valid connection sets that still mix uniformly.
    let mut distinct = BTreeSet::new();
    for seed in [1u64, 2, 3, 4] {
        let g = group(3);
        let conn = g.build_connection_set(Policy::Seeded(seed)).unwrap();
        ok &= g.validate_connection_set(&conn).is_ok();
        distinct.insert(conn.class_ids.clone());
        let table = CharacterTable::new(&g, Some(&conn));
        ok &= verify_um_exact(&table, &conn, 1, 4).unwrap().is_uniform;
    }
    ok &= distinct.len() > 1;

    report(11, ok, "byte-identical exports for identical config; seeded variants all mix uniformly");
}
