//! Construction of secondary generators for the Hironaka decomposition
//! at n = 3: a greedy degree-by-degree selection of monomials in the
//! non-parameter generators whose residues modulo the parameter ideal
//! are linearly independent, until the per-multidegree counts match the
//! secondary Hilbert series.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::charring::secondary_hilbert;
use crate::comb::words_up_to;
use crate::error::{Error, Result};
use crate::invariant_ring::{polarized_power_sum, InvariantPoly};
use crate::linalg::VecSpan;
use crate::polycore::{Monomial, TMono, Weight, Word};
use crate::rational::rat_int;
use num_traits::Zero;

/// One chosen secondary generator: a product of non-parameter power sums.
#[derive(Clone, Debug)]
pub struct SecondaryGenerator {
    pub multidegree: Weight,
    /// The product as a t-monomial over the bracket words.
    pub monomial: TMono,
    pub text: String,
}

/// Result of the secondary-generator construction.
#[derive(Clone, Debug)]
pub struct SecondaryReport {
    pub m: usize,
    pub max_degree: u32,
    pub chosen: Vec<SecondaryGenerator>,
    /// Per-multidegree counts (only nonzero entries).
    pub counts: BTreeMap<Weight, u64>,
    /// Multidegrees where the greedy selection could not reach the
    /// series coefficient; nonempty means failure.
    pub deficits: Vec<(Weight, u64, u64)>,
}

impl SecondaryReport {
    pub fn pass(&self) -> bool {
        self.deficits.is_empty()
    }

    pub fn count_by_degree(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.counts {
            *out.entry(w.iter().sum::<u32>()).or_insert(0) += c;
        }
        out
    }
}

/// Words indexing the non-parameter generators: degree 2..=3, not a pure
/// power of one symbol.
pub fn non_parameter_words(m: usize) -> Vec<Word> {
    words_up_to(m, 3)
        .into_iter()
        .filter(|w| w.degree() >= 2 && !w.is_pure_power())
        .collect()
}

/// Monomials in the non-parameter generators of multidegree `alpha`,
/// as t-monomials over the bracket words, in decreasing order.
pub fn candidate_products(m: usize, alpha: &[u32]) -> Vec<TMono> {
    let words: Vec<Word> = non_parameter_words(m)
        .into_iter()
        .filter(|w| w.0.iter().zip(alpha).all(|(a, b)| a <= b))
        .collect();
    let mut out = Vec::new();
    let mut picked: Vec<(Word, u32)> = Vec::new();
    fn rec(
        idx: usize,
        residual: Vec<u32>,
        words: &[Word],
        picked: &mut Vec<(Word, u32)>,
        out: &mut Vec<TMono>,
    ) {
        if residual.iter().all(|&r| r == 0) {
            out.push(TMono::from_pairs(picked.clone()).expect("nonzero words"));
            return;
        }
        if idx == words.len() {
            return;
        }
        let w = &words[idx];
        let mut max_e = u32::MAX;
        for (j, &wj) in w.0.iter().enumerate() {
            if let Some(q) = residual[j].checked_div(wj) {
                max_e = max_e.min(q);
            }
        }
        for e in (0..=max_e).rev() {
            if e > 0 {
                picked.push((w.clone(), e));
            }
            let rem: Vec<u32> = residual
                .iter()
                .zip(&w.0)
                .map(|(&r, &wj)| r - wj * e)
                .collect();
            rec(idx + 1, rem, words, picked, out);
            if e > 0 {
                picked.pop();
            }
        }
    }
    rec(0, alpha.to_vec(), &words, &mut picked, &mut out);
    out.sort();
    out.reverse();
    out
}

/// Evaluate a bracket product to an invariant polynomial.
pub fn evaluate_product(n: usize, mono: &TMono) -> Result<InvariantPoly> {
    let m = mono
        .factors()
        .first()
        .map(|(w, _)| w.symbols())
        .unwrap_or(1);
    let space = crate::polycore::XSpace::new(n, m);
    let mut acc = crate::polycore::XPoly::constant(space, rat_int(1));
    for (w, e) in mono.factors() {
        let base = polarized_power_sum(n, w)?.into_body();
        for _ in 0..*e {
            acc = acc.checked_mul(&base)?;
        }
    }
    Ok(InvariantPoly::new_unchecked(acc))
}

/// Render a bracket product in table notation, e.g. `[x^2y][xz]`.
pub fn product_text(mono: &TMono) -> String {
    if mono.is_one() {
        return "1".to_string();
    }
    mono.factors()
        .iter()
        .map(|(w, e)| {
            let b = format!("[{}]", crate::polycore::word_text(w));
            if *e == 1 {
                b
            } else {
                format!("{b}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("")
}

pub const SECONDARY_MAX_M: usize = 4;
pub const SECONDARY_MAX_DEGREE: u32 = 8;

/// Build secondary generators for n = 3 up to `max_degree`: per
/// multidegree, greedily keep the products whose images modulo the
/// parameter ideal extend the span, until the count matches the
/// secondary Hilbert series. A deficit anywhere means the series is
/// contradicted and is reported as a failure.
pub fn build_secondary_generators(m: usize, max_degree: u32) -> Result<SecondaryReport> {
    if m > SECONDARY_MAX_M {
        return Err(Error::Domain(format!(
            "secondary construction is capped at m = {SECONDARY_MAX_M}"
        )));
    }
    if max_degree > SECONDARY_MAX_DEGREE {
        return Err(Error::Domain(format!(
            "secondary construction is capped at degree {SECONDARY_MAX_DEGREE}"
        )));
    }
    let n = 3usize;
    let series = secondary_hilbert(m, max_degree);
    let weights = super::weights_of_degrees(m, 0..=max_degree);

    let per_weight: Vec<(Weight, Vec<SecondaryGenerator>, u64, u64)> = weights
        .par_iter()
        .map(|alpha| {
            let target = series.coeff(alpha) as u64;
            if alpha.iter().all(|&a| a == 0) {
                // the empty product spans degree zero
                let gens = vec![SecondaryGenerator {
                    multidegree: alpha.clone(),
                    monomial: TMono::one(),
                    text: "1".to_string(),
                }];
                return Ok((alpha.clone(), gens, 1, target));
            }
            if target == 0 {
                return Ok((alpha.clone(), Vec::new(), 0, 0));
            }
            let reducer = super::PReducer::new(n, m, alpha)?;
            let mut span = VecSpan::new(reducer.reps().len());
            let mut chosen = Vec::new();
            for cand in candidate_products(m, alpha) {
                let image = evaluate_product(n, &cand)?;
                let residue = reducer.residue(&image)?;
                if residue.iter().all(|c| c.is_zero()) {
                    continue;
                }
                if span.insert(&residue) {
                    chosen.push(SecondaryGenerator {
                        multidegree: alpha.clone(),
                        text: product_text(&cand),
                        monomial: cand,
                    });
                    if chosen.len() as u64 == target {
                        break;
                    }
                }
            }
            let achieved = chosen.len() as u64;
            Ok((alpha.clone(), chosen, achieved, target))
        })
        .collect::<Result<_>>()?;

    let mut chosen = Vec::new();
    let mut counts = BTreeMap::new();
    let mut deficits = Vec::new();
    for (alpha, gens, achieved, target) in per_weight {
        if achieved != target {
            deficits.push((alpha.clone(), achieved, target));
        }
        if achieved > 0 {
            counts.insert(alpha, achieved);
        }
        chosen.extend(gens);
    }
    deficits.sort();
    Ok(SecondaryReport {
        m,
        max_degree,
        chosen,
        counts,
        deficits,
    })
}
