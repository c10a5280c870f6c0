//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. All checks are exact (tolerance zero) unless the
//! criterion itself states otherwise.

use std::collections::BTreeMap;
use std::time::Duration;

use num_traits::Zero;

use polysym::charring::{hironaka_check, secondary_hilbert};
use polysym::comb::compositions;
use polysym::free_algebra::{
    gl_derivation, gl_orbit_span, is_highest_weight, phi_eval, FPoly, DEFAULT_SPAN_BOUND,
};
use polysym::ideal_lab::{
    self, kernel_component_basis, reduce_mod_p, tables, ComponentMatrix, Lowerbound,
};
use polysym::invariant_ring::{
    dim_invariant_component, orbit_basis, polarized_power_sum, InvariantPoly,
};
use polysym::polycore::{TSpace, Word, XPoly, XSpace};
use polysym::rational::{rat_int, Rational};
use polysym::relations::{gram_relation, j32, j32_from_psi, j42, j42_from_psi};
use polysym::schur::{
    dim_f_component, f_slice_decomposition, kernel_decomposition, r_slice_decomposition,
    SchurMultiset,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pass_line(criterion: u32, name: &str, detail: &str) {
    println!("criterion {criterion} ({name}): PASS — {detail}");
}

#[test]
fn criterion_01_psi_vanishing() {
    let scan = ideal_lab::verify_psi_exhaustive(3, 4, polysym::relation_degree_bound(3)).unwrap();
    assert_eq!(scan.failures, Vec::<String>::new());
    assert_eq!(scan.tuples_checked, 16600);
    pass_line(
        1,
        "psi vanishing",
        &format!(
            "phi(Psi) = 0 for all {} word multisets",
            scan.tuples_checked
        ),
    );
}

#[test]
fn criterion_02_gram_relation() {
    for n in 2..=4usize {
        let record = gram_relation(n, n).unwrap();
        assert!(
            phi_eval(&record.element).unwrap().is_zero(),
            "phi(J) != 0 for n = {n}"
        );
        let (hwv, weight) = is_highest_weight(&record.element).unwrap();
        assert!(hwv, "J is not a highest weight vector for n = {n}");
        assert_eq!(weight, Some(vec![2u32; n]));
    }
    pass_line(
        2,
        "gram relation",
        "phi(J) = 0 and highest weight (2,...,2) for n = 2, 3, 4",
    );
}

#[test]
fn criterion_03_explicit_relations() {
    for m in 2..=4usize {
        let a32 = j32_from_psi(m).unwrap();
        let b32 = j32(m).unwrap().element;
        assert_eq!(a32, b32, "the two (3,2) forms differ at m = {m}");
        assert!(phi_eval(&b32).unwrap().is_zero());
        let (hwv, w) = is_highest_weight(&b32).unwrap();
        assert!(hwv);
        let mut expect = vec![0u32; m];
        expect[0] = 3;
        expect[1] = 2;
        assert_eq!(w, Some(expect));

        let a42 = j42_from_psi(m).unwrap();
        let b42 = j42(m).unwrap().element;
        assert_eq!(a42, b42, "the two (4,2) forms differ at m = {m}");
        assert!(phi_eval(&b42).unwrap().is_zero());
        let (hwv, w) = is_highest_weight(&b42).unwrap();
        assert!(hwv);
        let mut expect = vec![0u32; m];
        expect[0] = 4;
        expect[1] = 2;
        assert_eq!(w, Some(expect));
    }
    pass_line(
        3,
        "explicit relations",
        "form equality, vanishing and weights (3,2), (4,2) for m = 2, 3, 4",
    );
}

#[test]
fn criterion_04_kernel_vanishing_and_dimensions() {
    let expected_dim5: BTreeMap<usize, u64> = BTreeMap::from([(2, 2u64), (3, 15), (4, 60)]);
    for m in 2..=4usize {
        for d in 1..=4u32 {
            let mut total = 0usize;
            for alpha in compositions(d, m) {
                total += kernel_component_basis(3, m, &alpha).unwrap().len();
            }
            assert_eq!(total, 0, "kernel not zero at degree {d}, m = {m}");
        }
        let mut total = 0u64;
        for alpha in compositions(5, m) {
            total += kernel_component_basis(3, m, &alpha).unwrap().len() as u64;
        }
        assert_eq!(
            total, expected_dim5[&m],
            "degree-5 kernel dimension, m = {m}"
        );
    }
    pass_line(
        4,
        "kernel dimensions",
        "K vanishes through degree 4; degree-5 dimensions 2, 15, 60 for m = 2, 3, 4",
    );
}

#[test]
fn criterion_05_degree_six_decomposition() {
    let k6_expected =
        SchurMultiset::from_pairs(&[(&[4, 2], 2), (&[3, 3], 1), (&[3, 2, 1], 1), (&[2, 2, 2], 1)]);
    for m in 3..=4usize {
        assert_eq!(
            kernel_decomposition(3, m, 6).unwrap(),
            k6_expected,
            "m = {m}"
        );
    }
    let f5 = SchurMultiset::from_pairs(&[(&[5], 5), (&[4, 1], 4), (&[3, 2], 4), (&[2, 2, 1], 1)]);
    let r5 = SchurMultiset::from_pairs(&[(&[5], 5), (&[4, 1], 4), (&[3, 2], 3), (&[2, 2, 1], 1)]);
    let f6 = SchurMultiset::from_pairs(&[
        (&[6], 7),
        (&[5, 1], 5),
        (&[4, 2], 8),
        (&[4, 1, 1], 1),
        (&[3, 3], 2),
        (&[3, 2, 1], 2),
        (&[2, 2, 2], 2),
    ]);
    let r6 = SchurMultiset::from_pairs(&[
        (&[6], 7),
        (&[5, 1], 5),
        (&[4, 2], 6),
        (&[4, 1, 1], 1),
        (&[3, 3], 1),
        (&[3, 2, 1], 1),
        (&[2, 2, 2], 1),
    ]);
    for m in 3..=4usize {
        assert_eq!(
            f_slice_decomposition(3, m, 5).unwrap(),
            f5,
            "F degree 5, m = {m}"
        );
        assert_eq!(
            r_slice_decomposition(3, m, 5).unwrap(),
            r5,
            "R degree 5, m = {m}"
        );
        assert_eq!(
            f_slice_decomposition(3, m, 6).unwrap(),
            f6,
            "F degree 6, m = {m}"
        );
        assert_eq!(
            r_slice_decomposition(3, m, 6).unwrap(),
            r6,
            "R degree 6, m = {m}"
        );
    }
    pass_line(
        5,
        "degree-6 decomposition",
        "kernel, presentation and invariant slices decompose as published for m = 3, 4",
    );
}

#[test]
fn criterion_06_hilbert_series() {
    let s = secondary_hilbert(2, 6);
    let expected: &[(&[u32], i64)] = &[
        (&[0, 0], 1),
        (&[1, 1], 1),
        (&[2, 1], 1),
        (&[1, 2], 1),
        (&[2, 2], 1),
        (&[3, 3], 1),
    ];
    assert_eq!(s.terms().count(), expected.len());
    for (w, c) in expected {
        assert_eq!(s.coeff(w), *c, "coefficient at {w:?}");
    }
    for m in 2..=3usize {
        assert!(hironaka_check(m, 10), "series identity fails for m = {m}");
    }
    pass_line(
        6,
        "hilbert series",
        "six-term secondary series at m = 2; series identity through degree 10 for m = 2, 3",
    );
}

#[test]
fn criterion_07_tables() {
    let t2 = tables::verify_congruence_table(2).unwrap();
    assert!(t2.pass, "table 2: {:#?}", t2.rows);
    assert_eq!(t2.rows.len(), 11);

    // published translate-count columns
    let s3_col: Vec<u64> = tables::TABLE_2
        .iter()
        .map(|r| r.s3_translates.unwrap())
        .collect();
    assert_eq!(s3_col, vec![6, 3, 3, 3, 6, 3, 3, 6, 6, 1, 3]);
    let s4_col: Vec<u64> = tables::TABLE_4.iter().map(|r| r.s4_translates).collect();
    assert_eq!(s4_col, vec![12, 12, 6, 12, 12]);

    let t4 = tables::verify_congruence_table(4).unwrap();
    assert!(t4.pass, "table 4: {:#?}", t4.rows);
    assert_eq!(t4.rows.len(), 5);

    let t1 = tables::verify_monomial_table(1).unwrap();
    assert!(t1.pass, "table 1: {:#?}", t1.rows);
    let t6 = tables::verify_monomial_table(6).unwrap();
    assert!(t6.pass, "table 6: {:#?}", t6.rows);
    pass_line(
        7,
        "tables",
        &format!(
            "tables 2 (11 rows), 4 (5 rows), 1 ({} claims), 6 ({} claims) all certified; translate counts match",
            t1.rows.len(),
            t6.rows.len()
        ),
    );
}

#[test]
fn criterion_08_orbit_spans() {
    let expected: &[(&str, BTreeMap<usize, usize>)] = &[
        ("j32", BTreeMap::from([(2usize, 2usize), (3, 15), (4, 60)])),
        ("j42", BTreeMap::from([(2, 3), (3, 27), (4, 126)])),
        ("gram", BTreeMap::from([(3, 1), (4, 10)])),
    ];
    for (name, dims) in expected {
        for (&m, &dim) in dims {
            let seed = match *name {
                "j32" => j32(m).unwrap().element,
                "j42" => j42(m).unwrap().element,
                _ => gram_relation(3, m).unwrap().element.with_cap(3).unwrap(),
            };
            let span = gl_orbit_span(&seed, DEFAULT_SPAN_BOUND).unwrap();
            assert_eq!(span.len(), dim, "{name} span at m = {m}");
            for member in &span {
                assert!(
                    phi_eval(member).unwrap().is_zero(),
                    "{name} span member not killed at m = {m}"
                );
            }
        }
    }
    pass_line(
        8,
        "orbit spans",
        "dimensions (2,3,-), (15,27,1), (60,126,10) for m = 2, 3, 4; every member killed",
    );
}

#[test]
fn criterion_09_generation_and_minimality() {
    let expected_sizes: BTreeMap<usize, usize> = BTreeMap::from([(2, 5), (3, 43), (4, 196)]);
    for m in 2..=4usize {
        let gens = ideal_lab::standard_generator_set(m).unwrap();
        assert_eq!(gens.len(), expected_sizes[&m], "generator count at m = {m}");
        let rep = ideal_lab::check_generation(&gens, polysym::relation_degree_bound(3)).unwrap();
        assert!(
            rep.pass(),
            "generation failures at m = {m}: {:?}",
            rep.failures
        );
        let min = ideal_lab::check_minimality(&gens).unwrap();
        assert!(
            min.minimal,
            "minimality failures at m = {m}: {:?}",
            min.failures
        );
        assert_eq!(min.beta, 6, "beta(3,{m})");
        if m == 2 {
            assert_eq!(min.degree_counts, BTreeMap::from([(5u32, 2usize), (6, 3)]));
        }
    }
    pass_line(
        9,
        "generation and minimality",
        "5-, 43- and 196-element sets generate through degree 8 and are minimal; beta(3,m) = 6",
    );
}

#[test]
fn criterion_10_lower_bound_instances() {
    assert_eq!(
        ideal_lab::lowerbound_check(2, None).unwrap(),
        Lowerbound::Holds
    );
    assert_eq!(
        ideal_lab::lowerbound_check(3, None).unwrap(),
        Lowerbound::Holds
    );
    // stretch instance: never reported as a pass unless it truly finished
    let outcome = ideal_lab::lowerbound_check(4, Some(Duration::from_secs(900))).unwrap();
    match &outcome {
        Lowerbound::Holds => pass_line(
            10,
            "lower bound",
            "holds for n = 2, 3; stretch instance n = 4 completed and holds",
        ),
        Lowerbound::Unsupported(msg) => pass_line(
            10,
            "lower bound",
            &format!("holds for n = 2, 3; n = 4 unsupported within resources ({msg})"),
        ),
        Lowerbound::Fails => panic!("the n = 4 relation was found inside the ideal"),
    }
}

// ---------------------------------------------------------------------------
// criterion 11: randomized exact property suites, 1000 trials each
// ---------------------------------------------------------------------------

const TRIALS: usize = 1000;

fn random_xpoly(rng: &mut ChaCha8Rng, space: XSpace, max_terms: usize, max_exp: u32) -> XPoly {
    let mut p = XPoly::zero(space);
    let terms = rng.gen_range(0..=max_terms);
    for _ in 0..terms {
        let pairs: Vec<(u32, u32)> = (0..space.var_count() as u32)
            .filter_map(|v| {
                if rng.gen_bool(0.4) {
                    Some((v, rng.gen_range(1..=max_exp)))
                } else {
                    None
                }
            })
            .collect();
        let c = rat_int(rng.gen_range(-6i64..=6));
        p.add_term(polysym::polycore::XMono::from_pairs(pairs), c);
    }
    p
}

fn random_fpoly(rng: &mut ChaCha8Rng, n: usize, m: usize, cap: u32, max_terms: usize) -> FPoly {
    let space = TSpace::new(m, cap);
    let mut body = polysym::polycore::TPoly::zero(space);
    let words: Vec<Word> = polysym::comb::words_up_to(m, cap);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let k = rng.gen_range(1..=3usize);
        let mut pairs = Vec::new();
        for _ in 0..k {
            let w = words[rng.gen_range(0..words.len())].clone();
            pairs.push((w, rng.gen_range(1..=2u32)));
        }
        let mono = polysym::polycore::TMono::from_pairs(pairs).unwrap();
        body.add_term(mono, rat_int(rng.gen_range(-5i64..=5)));
    }
    FPoly::from_body(n, body)
}

#[test]
fn criterion_11a_ring_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..TRIALS {
        let n = rng.gen_range(1..=3usize);
        let m = rng.gen_range(1..=3usize);
        let space = XSpace::new(n, m);
        let a = random_xpoly(&mut rng, space, 3, 2);
        let b = random_xpoly(&mut rng, space, 3, 2);
        let c = random_xpoly(&mut rng, space, 3, 2);
        let ab_c = (&(&a * &b) * &c).clone();
        let a_bc = (&a * &(&b * &c)).clone();
        assert_eq!(ab_c, a_bc, "associativity");
        assert_eq!(&a * &b, &b * &a, "commutativity");
        let dist_l = &a * &(&b + &c);
        let dist_r = &(&a * &b) + &(&a * &c);
        assert_eq!(dist_l, dist_r, "distributivity");
        // multidegree additivity on multihomogeneous inputs
        if let (Some(da), Some(db)) = (a.multidegree(), b.multidegree()) {
            if !a.is_zero() && !b.is_zero() {
                let expected: Vec<u32> = da.iter().zip(&db).map(|(x, y)| x + y).collect();
                assert_eq!((&a * &b).multidegree(), Some(expected));
            }
        }
    }
    pass_line(
        11,
        "ring axioms",
        &format!("{TRIALS} randomized exact trials"),
    );
}

#[test]
fn criterion_11b_derivation_leibniz() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..TRIALS {
        let m = rng.gen_range(2..=3usize);
        let f = random_fpoly(&mut rng, 3, m, 3, 3);
        let g = random_fpoly(&mut rng, 3, m, 3, 3);
        let i = rng.gen_range(0..m);
        let j = (i + rng.gen_range(1..m)) % m;
        let fg = f.mul(&g).unwrap();
        let lhs = gl_derivation(i, j, &fg).unwrap();
        let rhs = gl_derivation(i, j, &f)
            .unwrap()
            .mul(&g)
            .unwrap()
            .add(&f.mul(&gl_derivation(i, j, &g).unwrap()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
    pass_line(
        11,
        "derivation leibniz",
        &format!("{TRIALS} randomized exact trials"),
    );
}

#[test]
fn criterion_11c_phi_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..TRIALS {
        let n = rng.gen_range(2..=3usize);
        let m = rng.gen_range(1..=3usize);
        let f = random_fpoly(&mut rng, n, m, 3, 2);
        let g = random_fpoly(&mut rng, n, m, 3, 2);
        let lhs = phi_eval(&f.mul(&g).unwrap()).unwrap();
        let rhs = phi_eval(&f).unwrap().mul(&phi_eval(&g).unwrap()).unwrap();
        assert_eq!(lhs.body(), rhs.body());
    }
    pass_line(
        11,
        "phi homomorphism",
        &format!("{TRIALS} randomized exact trials"),
    );
}

#[test]
fn criterion_11d_rank_nullity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for _ in 0..TRIALS {
        let m = rng.gen_range(1..=3usize);
        let d = rng.gen_range(0..=4u32);
        let weights = compositions(d, m);
        let alpha = weights[rng.gen_range(0..weights.len())].clone();
        let cm = ComponentMatrix::build(3, m, &alpha).unwrap();
        let rank = cm.rank() as u64;
        let nullity = cm.matrix.nullspace().len() as u64;
        assert_eq!(
            rank,
            dim_invariant_component(3, m, &alpha),
            "rank at {alpha:?}"
        );
        assert_eq!(
            rank + nullity,
            dim_f_component(3, m, &alpha),
            "rank-nullity at {alpha:?}"
        );
    }
    pass_line(
        11,
        "rank-nullity",
        &format!("{TRIALS} randomized exact trials"),
    );
}

#[test]
fn criterion_11e_certificate_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..TRIALS {
        let m = rng.gen_range(1..=3usize);
        let d = rng.gen_range(1..=4u32);
        let weights = compositions(d, m);
        let alpha = weights[rng.gen_range(0..weights.len())].clone();
        // random element of the parameter-ideal slice
        let space = XSpace::new(3, m);
        let mut p = XPoly::zero(space);
        for j in 0..m {
            for k in 1..=3u32 {
                if alpha[j] < k || rng.gen_bool(0.5) {
                    continue;
                }
                let mut beta = alpha.clone();
                beta[j] -= k;
                let basis = orbit_basis(3, m, &beta).unwrap();
                if basis.is_empty() {
                    continue;
                }
                let b = &basis.elements()[rng.gen_range(0..basis.len())];
                let param = polarized_power_sum(3, &Word::power(m, j, k)).unwrap();
                let c = rat_int(rng.gen_range(-4i64..=4));
                p = &p + &(param.body() * b.body()).scale(&c);
            }
        }
        let inv = InvariantPoly::new(p).unwrap();
        let (member, cert) = reduce_mod_p(&inv).unwrap();
        assert!(
            member,
            "constructed ideal member not recognized at {alpha:?}"
        );
        let cert = cert.unwrap();
        assert!(
            cert.verify(3, m, &inv).unwrap(),
            "certificate failed to re-multiply at {alpha:?}"
        );
    }
    pass_line(
        11,
        "certificate soundness",
        &format!("{TRIALS} randomized exact trials"),
    );
}

// ---------------------------------------------------------------------------
// supporting exactness checks used across criteria
// ---------------------------------------------------------------------------

#[test]
fn zero_is_exactly_zero_never_approximate() {
    // a spot check that vanishing means identically zero coefficients
    let record = gram_relation(3, 3).unwrap();
    let image = phi_eval(&record.element).unwrap();
    assert_eq!(image.body().term_count(), 0);
    let one = rat_int(1);
    assert_eq!(&one - &one, Rational::zero());
}
