//! Cross-validation of the graded machinery on the full working range:
//! independent dimension counts, the pure-power vanishing lemma, the
//! equivariance of the evaluation map, and the agreement between
//! nullspace ranks and the module-theoretic weight tables.

use std::collections::BTreeMap;

use rayon::prelude::*;

use polysym::comb::compositions;
use polysym::free_algebra::{gl_derivation, gl_derivation_x, phi_eval};
use polysym::ideal_lab::{kernel_component_basis, reduce_mod_p};
use polysym::invariant_ring::{
    dim_invariant_component, orbit_representatives, polarized_power_sum,
};
use polysym::linalg::PolySpan;
use polysym::polycore::{TMono, Word};
use polysym::relations::{gram_relation, j32};
use polysym::schur::{
    height_filter_check, kernel_decomposition, kostka, schur_decompose, Partition, SchurMultiset,
    WeightTable,
};

/// Orbit enumeration and the averaged fixed-point count agree on every
/// weight through total degree 8 for up to four columns.
#[test]
fn counting_methods_agree_through_degree_eight() {
    for m in 1..=4usize {
        let weights: Vec<Vec<u32>> = (0..=8u32).flat_map(|d| compositions(d, m)).collect();
        weights.par_iter().for_each(|alpha| {
            let direct = orbit_representatives(3, alpha).len() as u64;
            let averaged = dim_invariant_component(3, m, alpha);
            assert_eq!(direct, averaged, "m = {m}, alpha = {alpha:?}");
        });
    }
}

/// Every power sum of a word with an exponent at least 3 and total
/// degree at least 4 is congruent to zero modulo the parameter ideal
/// (checked for all such words with |w| <= 8 over up to 4 symbols).
#[test]
fn high_exponent_power_sums_vanish_mod_parameters() {
    for m in 1..=4usize {
        let words: Vec<Vec<u32>> = (4..=8u32)
            .flat_map(|d| compositions(d, m))
            .filter(|w| w.iter().any(|&e| e >= 3))
            .collect();
        words.par_iter().for_each(|exps| {
            let p = polarized_power_sum(3, &Word::new(exps.clone())).unwrap();
            let (member, cert) = reduce_mod_p(&p).unwrap();
            assert!(member, "[{exps:?}] not congruent to zero");
            assert!(
                cert.unwrap().verify(3, m, &p).unwrap(),
                "certificate at {exps:?}"
            );
        });
    }
}

/// The evaluation map intertwines the derivation actions on both sides.
#[test]
fn evaluation_intertwines_the_gl_action() {
    let m = 3;
    let elements = [
        j32(m).unwrap().element,
        gram_relation(3, m).unwrap().element.with_cap(3).unwrap(),
    ];
    for f in &elements {
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                let lhs = phi_eval(&gl_derivation(i, j, f).unwrap()).unwrap();
                let rhs = gl_derivation_x(i, j, phi_eval(f).unwrap().body());
                assert_eq!(lhs.body(), &rhs, "operators ({i},{j})");
            }
        }
    }
}

/// Per-weight nullspace dimensions reproduce the weight multiplicities
/// of the decomposed kernel slices (degrees 5 and 6, m = 2 and 3).
#[test]
fn nullity_matches_weight_multiplicities() {
    for m in 2..=3usize {
        for d in [5u32, 6] {
            let dec = kernel_decomposition(3, m, d).unwrap();
            for alpha in compositions(d, m) {
                let nullity = kernel_component_basis(3, m, &alpha).unwrap().len() as u64;
                let sorted = Partition::from_weight(&alpha);
                let mut expected = 0u64;
                for (lam, mult) in &dec.0 {
                    if lam.size() == d {
                        expected += mult * kostka(lam, &sorted.0).unwrap();
                    }
                }
                assert_eq!(nullity, expected, "m = {m}, alpha = {alpha:?}");
            }
        }
    }
}

/// Heights in the degree-d slice of the presentation algebra stay below
/// (d+1)/2 through the generation bound; this is what confines every
/// minimal kernel generator to at most four columns.
#[test]
fn height_filter_through_degree_eight() {
    for d in 1..=8u32 {
        assert!(height_filter_check(3, 4, d).unwrap(), "degree {d}");
    }
}

/// Rank plus nullity of the evaluation matrix equals the source
/// dimension, and the rank equals the independently averaged target
/// dimension, on every weight through total degree 8 for up to four
/// columns. The nullity check runs inside `kernel_component_basis`.
#[test]
fn rank_nullity_full_range() {
    for m in 1..=4usize {
        let weights: Vec<Vec<u32>> = (0..=8u32).flat_map(|d| compositions(d, m)).collect();
        weights.par_iter().for_each(|alpha| {
            // errors out when nullity != dim F - dim R
            let basis = kernel_component_basis(3, m, alpha).unwrap();
            for k in basis.iter().take(1) {
                assert!(phi_eval(k).unwrap().is_zero(), "alpha {alpha:?}");
            }
        });
    }
}

/// The module of minimal generators, computed without any chosen
/// generator set: per weight of degree 6, the dimension of the kernel
/// modulo degree-one multiples of the degree-5 kernel; the resulting
/// weight table must decompose as one copy of V(4,2) plus one copy of
/// V(2,2,2), while degree 5 is a single V(3,2). Together these pin the
/// generator multiplicities of the whole ideal of relations.
#[test]
fn minimal_generator_module_structure() {
    for m in 3..=4usize {
        // degree 5: the kernel itself
        assert_eq!(
            kernel_decomposition(3, m, 5).unwrap(),
            SchurMultiset::from_pairs(&[(&[3, 2], 1)]),
            "degree-5 quotient at m = {m}"
        );

        let deg5: BTreeMap<Vec<u32>, Vec<polysym::free_algebra::FPoly>> = compositions(5, m)
            .into_par_iter()
            .map(|alpha| {
                let basis = kernel_component_basis(3, m, &alpha).unwrap();
                (alpha, basis)
            })
            .collect();
        let table: WeightTable = compositions(6, m)
            .into_par_iter()
            .map(|alpha| {
                let dim_k = kernel_component_basis(3, m, &alpha).unwrap().len() as u64;
                let mut span: PolySpan<TMono> = PolySpan::new();
                for j in 0..m {
                    if alpha[j] == 0 {
                        continue;
                    }
                    let mut beta = alpha.clone();
                    beta[j] -= 1;
                    let unit = TMono::var(Word::unit(m, j)).unwrap();
                    for k in &deg5[&beta] {
                        span.insert(&k.body().mul_monomial(&unit));
                    }
                }
                let quotient = dim_k - span.dim() as u64;
                (alpha, quotient)
            })
            .collect();
        let dec = schur_decompose(&table, m).unwrap();
        assert_eq!(
            dec,
            SchurMultiset::from_pairs(&[(&[4, 2], 1), (&[2, 2, 2], 1)]),
            "degree-6 quotient at m = {m}"
        );
    }
}

/// Kernel elements of one weight stay in the kernel under every
/// derivation (spot check at weight (3,2), m = 3).
#[test]
fn derivations_preserve_the_kernel() {
    let basis = kernel_component_basis(3, 3, &[3, 2, 0]).unwrap();
    assert_eq!(basis.len(), 1);
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let image = gl_derivation(i, j, &basis[0]).unwrap();
            if !image.is_zero() {
                assert!(phi_eval(&image).unwrap().is_zero());
            }
        }
    }
}
