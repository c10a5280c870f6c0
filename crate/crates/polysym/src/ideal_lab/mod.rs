//! Per-multidegree exact linear algebra on the presentation of the
//! invariant ring: kernel component bases of the evaluation map,
//! congruence testing modulo the parameter ideal with certificates,
//! verification of the published relation/monomial tables, secondary
//! generator construction, and generation/minimality certification of
//! the kernel's generator sets.
//!
//! Every question is solved inside a single weight component, where it
//! is finite-dimensional linear algebra over the rationals; no Groebner
//! bases are involved. Component jobs are independent and run on a
//! parallel work pool; results are merged deterministically by weight.

mod generation;
mod secondary;
pub mod tables;

pub use generation::{
    check_generation, check_minimality, lowerbound_check, standard_generator_set, GenerationReport,
    GeneratorMember, GeneratorSet, Lowerbound, MinimalityReport,
};
pub use secondary::{build_secondary_generators, SecondaryReport};

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::comb::{compositions, t_monomials_of_weight, words_up_to};
use crate::error::{Error, Result};
use crate::free_algebra::{phi_eval, FPoly};
use crate::invariant_ring::{
    dim_invariant_component, orbit_representatives, polarized_power_sum, InvariantPoly,
};
use crate::linalg::QMatrix;
use crate::polycore::{Monomial, TMono, TPoly, TSpace, Weight, Word, XMono, XPoly, XSpace};
use crate::rational::Rational;
use crate::relations::psi;
use crate::schur::dim_f_component;

/// The evaluation map restricted to one weight component, as an exact
/// matrix: rows are orbit representatives of the target component,
/// columns are the t-monomials of the source component, both in
/// decreasing monomial order.
pub struct ComponentMatrix {
    pub n: usize,
    pub m: usize,
    pub cap: u32,
    pub alpha: Weight,
    pub f_monos: Vec<TMono>,
    pub reps: Vec<XMono>,
    pub matrix: QMatrix,
}

impl ComponentMatrix {
    pub fn build(n: usize, m: usize, alpha: &[u32]) -> Result<ComponentMatrix> {
        Self::build_with_cap(n, m, n as u32, alpha)
    }

    /// Build with an explicit degree cap on the index words.
    pub fn build_with_cap(n: usize, m: usize, cap: u32, alpha: &[u32]) -> Result<ComponentMatrix> {
        if alpha.len() != m {
            return Err(Error::Domain(format!(
                "weight length {} != m = {m}",
                alpha.len()
            )));
        }
        let f_monos = t_monomials_of_weight(m, cap, alpha);
        let reps = orbit_representatives(n, alpha);
        let rep_index: BTreeMap<&XMono, usize> =
            reps.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let space = XSpace::new(n, m);
        let mut word_cache: BTreeMap<Word, XPoly> = BTreeMap::new();
        let mut matrix = QMatrix::zero(reps.len(), f_monos.len());
        for (col, mono) in f_monos.iter().enumerate() {
            let mut prod = XPoly::constant(space, crate::rational::rat_int(1));
            for (w, e) in mono.factors() {
                let base = word_cache
                    .entry(w.clone())
                    .or_insert_with(|| polarized_power_sum(n, w).expect("nonzero word").into_body())
                    .clone();
                for _ in 0..*e {
                    prod = &prod * &base;
                }
            }
            for (xm, c) in prod.terms() {
                if let Some(&row) = rep_index.get(xm) {
                    matrix.set(row, col, c.clone());
                }
            }
        }
        Ok(ComponentMatrix {
            n,
            m,
            cap,
            alpha: alpha.to_vec(),
            f_monos,
            reps,
            matrix,
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Exact nullspace as elements of the presentation algebra.
    pub fn kernel_basis(&self) -> Vec<FPoly> {
        let space = TSpace::new(self.m, self.cap);
        self.matrix
            .nullspace()
            .into_iter()
            .map(|v| {
                let mut body = TPoly::zero(space);
                for (mono, c) in self.f_monos.iter().zip(v) {
                    if !c.is_zero() {
                        body.add_term(mono.clone(), c);
                    }
                }
                FPoly::from_body(self.n, body)
            })
            .collect()
    }
}

/// Basis of the kernel of the evaluation map restricted to the
/// weight-`alpha` slice (index words of degree at most n). The dimension
/// equals `dim F^alpha - dim R^alpha`.
pub fn kernel_component_basis(n: usize, m: usize, alpha: &[u32]) -> Result<Vec<FPoly>> {
    let cm = ComponentMatrix::build(n, m, alpha)?;
    let basis = cm.kernel_basis();
    let expected = dim_f_component(n, m, alpha)
        .checked_sub(dim_invariant_component(n, m, alpha))
        .ok_or_else(|| Error::Inconsistent(format!("dim R > dim F at {alpha:?}")))?;
    if basis.len() as u64 != expected {
        return Err(Error::Inconsistent(format!(
            "kernel dimension {} at weight {alpha:?} disagrees with the count {expected}",
            basis.len()
        )));
    }
    Ok(basis)
}

/// The parameter set for n = 3: the power sums of the pure powers
/// `x_j^k`, `k = 1..=3`, for every symbol.
pub fn parameter_words(m: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for j in 0..m {
        for k in 1..=3u32 {
            out.push(Word::power(m, j, k));
        }
    }
    out
}

/// Membership certificate: `p = sum coeff * [x_j^k] * b` with each `b`
/// an orbit sum of the complementary multidegree, identified by its
/// representative monomial.
#[derive(Clone, Debug)]
pub struct PCertificate {
    pub terms: Vec<CertTerm>,
}

#[derive(Clone, Debug)]
pub struct CertTerm {
    pub parameter: Word,
    pub orbit_rep: XMono,
    pub coeff: Rational,
}

impl PCertificate {
    pub fn to_json(&self, m: usize) -> serde_json::Value {
        let space = XSpace::new(3, m);
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|t| {
                    serde_json::json!({
                        "parameter": format!("[{}]", crate::polycore::word_text(&t.parameter)),
                        "orbit_rep": t.orbit_rep.render(&space),
                        "coeff": t.coeff.to_string(),
                    })
                })
                .collect(),
        )
    }

    /// Recompute every product from scratch and compare with `p`.
    pub fn verify(&self, n: usize, m: usize, p: &InvariantPoly) -> Result<bool> {
        let space = XSpace::new(n, m);
        let perms = crate::comb::permutations(n);
        let mut acc = XPoly::zero(space);
        for term in &self.terms {
            let param = polarized_power_sum(n, &term.parameter)?;
            let mut orbit: Vec<XMono> = perms
                .iter()
                .map(|g| term.orbit_rep.permute_rows(&space, g))
                .collect();
            orbit.sort();
            orbit.dedup();
            let mut b = XPoly::zero(space);
            for mono in orbit {
                b.add_term(mono, crate::rational::rat_int(1));
            }
            acc = &acc + &(&param.into_body() * &b).scale(&term.coeff);
        }
        Ok(&acc == p.body())
    }
}

/// Reduction context for one weight component: the exact span of the
/// parameter-ideal slice in orbit-basis coordinates, with generator
/// tracking for certificates. Invariants of a fixed multidegree are
/// determined by their coefficients on orbit representatives, so all
/// elimination happens on vectors of that length.
pub struct PReducer {
    pub n: usize,
    pub m: usize,
    pub alpha: Weight,
    reps: Vec<XMono>,
    span: crate::linalg::VecSpan,
    gen_info: Vec<(Word, XMono)>,
    pub ideal_dim: usize,
}

impl PReducer {
    pub fn new(n: usize, m: usize, alpha: &[u32]) -> Result<PReducer> {
        if n != 3 {
            return Err(Error::Domain(
                "the parameter ideal machinery is specific to n = 3".into(),
            ));
        }
        if alpha.len() != m {
            return Err(Error::Domain(format!(
                "weight length {} != m = {m}",
                alpha.len()
            )));
        }
        let reps = orbit_representatives(n, alpha);
        let rep_index: BTreeMap<&XMono, usize> =
            reps.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let mut span = crate::linalg::VecSpan::with_tracking(reps.len());
        let mut gen_info = Vec::new();
        for j in 0..m {
            for k in 1..=3u32 {
                if alpha[j] < k {
                    continue;
                }
                let mut beta = alpha.to_vec();
                beta[j] -= k;
                let w = Word::power(m, j, k);
                let param = polarized_power_sum(n, &w)?.into_body();
                let basis = crate::invariant_ring::orbit_basis(n, m, &beta)?;
                for (rep, b) in basis.reps().iter().zip(basis.elements()) {
                    let product = &param * b.body();
                    let mut coords = vec![Rational::zero(); reps.len()];
                    for (xm, c) in product.terms() {
                        if let Some(&i) = rep_index.get(xm) {
                            coords[i] = c.clone();
                        }
                    }
                    span.insert(&coords);
                    gen_info.push((w.clone(), rep.clone()));
                }
            }
        }
        let ideal_dim = span.dim();
        Ok(PReducer {
            n,
            m,
            alpha: alpha.to_vec(),
            reps,
            span,
            gen_info,
            ideal_dim,
        })
    }

    pub fn reps(&self) -> &[XMono] {
        &self.reps
    }

    /// Orbit-basis coordinates of a multihomogeneous invariant of the
    /// reducer's weight.
    pub fn coordinates(&self, p: &InvariantPoly) -> Result<Vec<Rational>> {
        self.check_input(p)?;
        Ok(self.reps.iter().map(|r| p.body().coeff(r)).collect())
    }

    /// Canonical residue of `p` modulo the parameter-ideal slice, in
    /// orbit-basis coordinates.
    pub fn residue(&self, p: &InvariantPoly) -> Result<Vec<Rational>> {
        let coords = self.coordinates(p)?;
        Ok(self.span.reduce(&coords).0)
    }

    /// Membership verdict; a certificate is returned for members.
    pub fn membership(&self, p: &InvariantPoly) -> Result<(bool, Option<PCertificate>)> {
        let coords = self.coordinates(p)?;
        match self.span.express(&coords) {
            None => Ok((false, None)),
            Some(expr) => {
                let terms = expr
                    .into_iter()
                    .map(|(g, coeff)| {
                        let (parameter, orbit_rep) = self.gen_info[g].clone();
                        CertTerm {
                            parameter,
                            orbit_rep,
                            coeff,
                        }
                    })
                    .collect();
                Ok((true, Some(PCertificate { terms })))
            }
        }
    }

    fn check_input(&self, p: &InvariantPoly) -> Result<()> {
        if p.is_zero() {
            return Ok(());
        }
        match p.multidegree() {
            Some(a) if a == self.alpha => Ok(()),
            other => Err(Error::Domain(format!(
                "input multidegree {other:?} does not match reducer weight {:?}",
                self.alpha
            ))),
        }
    }
}

/// One-shot congruence test: decides `p` in the parameter ideal and
/// returns the certificate on membership.
pub fn reduce_mod_p(p: &InvariantPoly) -> Result<(bool, Option<PCertificate>)> {
    let space = p.space();
    if p.is_zero() {
        return Ok((true, Some(PCertificate { terms: vec![] })));
    }
    let alpha = p
        .multidegree()
        .ok_or_else(|| Error::Domain("congruence testing needs a multihomogeneous input".into()))?;
    let reducer = PReducer::new(space.rows, space.cols, &alpha)?;
    reducer.membership(p)
}

/// Every multiset of `count` words over `m` symbols with total degree in
/// `min_total..=max_total`, words listed in non-increasing word order.
pub fn word_multisets(m: usize, count: usize, max_total: u32) -> Vec<Vec<Word>> {
    let words = words_up_to(m, max_total);
    let mut out = Vec::new();
    let mut cur: Vec<Word> = Vec::with_capacity(count);
    fn rec(
        words: &[Word],
        start: usize,
        left: usize,
        budget: u32,
        cur: &mut Vec<Word>,
        out: &mut Vec<Vec<Word>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..words.len() {
            let d = words[i].degree();
            // remaining slots each need degree >= 1
            if d + (left as u32 - 1) > budget {
                continue;
            }
            cur.push(words[i].clone());
            rec(words, i, left - 1, budget - d, cur, out);
            cur.pop();
        }
    }
    rec(
        &words,
        0,
        count,
        max_total.saturating_sub(0),
        &mut cur,
        &mut out,
    );
    out.retain(|ws| ws.iter().map(|w| w.degree()).sum::<u32>() <= max_total);
    out
}

/// Result of the exhaustive fundamental-relation sweep.
#[derive(Clone, Debug)]
pub struct PsiScan {
    pub tuples_checked: usize,
    pub failures: Vec<String>,
}

/// Check `phi(Psi(w_1..w_{n+1})) = 0` for every multiset of n+1 words
/// over `m` symbols with total degree at most `max_total`.
pub fn verify_psi_exhaustive(n: usize, m: usize, max_total: u32) -> Result<PsiScan> {
    let tuples = word_multisets(m, n + 1, max_total);
    let failures: Vec<String> = tuples
        .par_iter()
        .filter_map(|ws| {
            let p = match psi(n, ws) {
                Ok(p) => p,
                Err(e) => return Some(format!("{ws:?}: {e}")),
            };
            match phi_eval(&p) {
                Ok(img) if img.is_zero() => None,
                Ok(_) => Some(format!(
                    "phi(Psi({})) != 0",
                    ws.iter()
                        .map(crate::polycore::word_text)
                        .collect::<Vec<_>>()
                        .join(", ")
                )),
                Err(e) => Some(format!("{ws:?}: {e}")),
            }
        })
        .collect();
    Ok(PsiScan {
        tuples_checked: tuples.len(),
        failures,
    })
}

/// Rank/nullity cross-check for one weight: the rank of the component
/// matrix must equal the averaged dimension count of the invariant
/// component, and the nullity must equal `dim F - dim R`.
pub fn rank_nullity_check(n: usize, m: usize, alpha: &[u32]) -> Result<bool> {
    let cm = ComponentMatrix::build(n, m, alpha)?;
    let rank = cm.rank() as u64;
    let nullity = cm.matrix.nullspace().len() as u64;
    let nf = dim_f_component(n, m, alpha);
    let nr = dim_invariant_component(n, m, alpha);
    Ok(rank == nr && rank + nullity == nf)
}

/// All weights of the given total degrees, in deterministic order.
pub fn weights_of_degrees(m: usize, degrees: impl IntoIterator<Item = u32>) -> Vec<Weight> {
    let mut out = Vec::new();
    for d in degrees {
        out.extend(compositions(d, m));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PolySpan;
    use crate::rational::{rat, rat_int};

    #[test]
    fn kernel_dimensions_at_named_weights() {
        // weight (3,2): one-dimensional, spanned by the (3,2) element
        let basis = kernel_component_basis(3, 2, &[3, 2]).unwrap();
        assert_eq!(basis.len(), 1);
        let j32 = crate::relations::j32_explicit(2).unwrap();
        // proportionality: reduce one against the other
        let mut span = PolySpan::new();
        span.insert(basis[0].body());
        assert!(span.contains(j32.body()));

        // weight (2,2): kernel vanishes below degree 5
        assert!(kernel_component_basis(3, 2, &[2, 2]).unwrap().is_empty());

        // weight (4,2): two-dimensional
        assert_eq!(kernel_component_basis(3, 2, &[4, 2]).unwrap().len(), 2);
    }

    #[test]
    fn kernel_members_vanish_under_phi() {
        for alpha in [[3u32, 2], [4, 2], [3, 3]] {
            for k in kernel_component_basis(3, 2, &alpha).unwrap() {
                assert!(phi_eval(&k).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn rank_nullity_small_sweep() {
        for m in 1..=2usize {
            for d in 0..=5u32 {
                for alpha in compositions(d, m) {
                    assert!(rank_nullity_check(3, m, &alpha).unwrap(), "alpha {alpha:?}");
                }
            }
        }
    }

    #[test]
    fn congruence_x2y2() {
        // [x^2 y^2] - 1/3 [xy]^2 lies in the parameter ideal
        let x2y2 = polarized_power_sum(3, &Word::new(vec![2, 2])).unwrap();
        let xy = polarized_power_sum(3, &Word::new(vec![1, 1])).unwrap();
        let xy2 = xy.mul(&xy).unwrap();
        let p = x2y2.add(&xy2.scale(&rat(-1, 3))).unwrap();
        let (member, cert) = reduce_mod_p(&p).unwrap();
        assert!(member);
        assert!(cert.unwrap().verify(3, 2, &p).unwrap());
    }

    #[test]
    fn congruence_x2y_xy() {
        // [x^2 y][xy] is congruent to zero
        let a = polarized_power_sum(3, &Word::new(vec![2, 1])).unwrap();
        let b = polarized_power_sum(3, &Word::new(vec![1, 1])).unwrap();
        let p = a.mul(&b).unwrap();
        let (member, cert) = reduce_mod_p(&p).unwrap();
        assert!(member);
        assert!(cert.unwrap().verify(3, 2, &p).unwrap());
    }

    #[test]
    fn xy_is_not_in_the_parameter_ideal() {
        let xy = polarized_power_sum(3, &Word::new(vec![1, 1])).unwrap();
        let (member, cert) = reduce_mod_p(&xy).unwrap();
        assert!(!member);
        assert!(cert.is_none());
    }

    #[test]
    fn four_variable_congruence() {
        // 6[xyzw] = [xy][zw] + [xz][yw] + [xw][yz] modulo the ideal
        let m = 4;
        let ps = |e: &[u32]| polarized_power_sum(3, &Word::new(e.to_vec())).unwrap();
        let xyzw = ps(&[1, 1, 1, 1]);
        let prod = |a: &[u32], b: &[u32]| ps(a).mul(&ps(b)).unwrap();
        let rhs = prod(&[1, 1, 0, 0], &[0, 0, 1, 1])
            .add(&prod(&[1, 0, 1, 0], &[0, 1, 0, 1]))
            .unwrap()
            .add(&prod(&[1, 0, 0, 1], &[0, 1, 1, 0]))
            .unwrap();
        let p = xyzw
            .scale(&rat_int(6))
            .add(&rhs.scale(&rat_int(-1)))
            .unwrap();
        let (member, cert) = reduce_mod_p(&p).unwrap();
        assert!(member);
        assert!(cert.unwrap().verify(3, m, &p).unwrap());
    }

    #[test]
    fn psi_scan_tiny() {
        let scan = verify_psi_exhaustive(2, 2, 4).unwrap();
        assert!(scan.failures.is_empty());
        assert!(scan.tuples_checked > 0);
    }

    #[test]
    fn word_multiset_counts() {
        // multisets of 4 words of total degree <= 4 over 1 symbol:
        // only (x,x,x,x)
        assert_eq!(word_multisets(1, 4, 4).len(), 1);
        // over 2 symbols, degree-1 words only: multisets of size 4 from {x,y}: 5
        assert_eq!(word_multisets(2, 4, 4).len(), 5);
        // over 1 symbol a multiset is its degree partition: partitions of
        // 4..=8 into exactly 4 positive parts: 1+1+2+3+5
        assert_eq!(word_multisets(1, 4, 8).len(), 12);
        // closed form over 4 symbols, total degree <= 8
        assert_eq!(word_multisets(4, 4, 8).len(), 16600);
    }
}
