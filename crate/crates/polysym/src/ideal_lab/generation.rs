//! Generation and minimality certification for the kernel of the
//! evaluation map at n = 3, and the degree-2n lower-bound instance
//! check for small n.
//!
//! The generator sets are produced from the three highest weight vectors
//! by exact orbit-span closure, not transcribed from tables; the
//! per-weight spans of their multiples are then compared against the
//! kernel component dimensions through the generation degree bound.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::comb::{compositions, t_monomials_of_weight};
use crate::error::{Error, Result};
use crate::free_algebra::{gl_orbit_span, phi_eval, FPoly, DEFAULT_SPAN_BOUND};
use crate::ideal_lab::kernel_component_basis;
use crate::invariant_ring::dim_invariant_component;
use crate::linalg::PolySpan;
use crate::polycore::{TMono, Weight};
use crate::relations::{gram_relation, j32, j42};
use crate::schur::dim_f_component;

/// A kernel generator with its provenance.
#[derive(Clone, Debug)]
pub struct GeneratorMember {
    pub name: String,
    pub weight: Weight,
    pub degree: u32,
    pub element: FPoly,
}

/// A candidate generating set of the kernel, all members checked to be
/// killed by the evaluation map before any generation claim is made.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub n: usize,
    pub m: usize,
    pub members: Vec<GeneratorMember>,
    /// Which highest weight vectors seeded which members.
    pub provenance: Vec<String>,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn degree_counts(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for g in &self.members {
            *out.entry(g.degree).or_insert(0) += 1;
        }
        out
    }

    pub fn max_degree(&self) -> u32 {
        self.members.iter().map(|g| g.degree).max().unwrap_or(0)
    }
}

/// The standard generator set for n = 3: bases of the orbit spans seeded
/// by the weight-(3,2) and weight-(4,2) elements, and for m >= 3 the
/// bordered Gram determinant of weight (2,2,2).
pub fn standard_generator_set(m: usize) -> Result<GeneratorSet> {
    if m < 2 {
        return Err(Error::Domain("generator sets need m >= 2".into()));
    }
    let mut members = Vec::new();
    let mut provenance = Vec::new();
    let seeds: Vec<(String, FPoly)> = {
        let mut v = vec![
            ("J(3,2)".to_string(), j32(m)?.element),
            ("J(4,2)".to_string(), j42(m)?.element),
        ];
        if m >= 3 {
            let gram = gram_relation(3, m)?;
            v.push((gram.name, gram.element.with_cap(3)?));
        }
        v
    };
    for (seed_name, seed) in seeds {
        let span = gl_orbit_span(&seed, DEFAULT_SPAN_BOUND)?;
        provenance.push(format!(
            "{seed_name}: orbit span of dimension {}",
            span.len()
        ));
        for (k, el) in span.into_iter().enumerate() {
            let weight = el
                .multidegree()
                .ok_or_else(|| Error::Inconsistent("span member not multihomogeneous".into()))?;
            let degree = weight.iter().sum();
            members.push(GeneratorMember {
                name: format!("{seed_name}#{k}"),
                weight,
                degree,
                element: el,
            });
        }
    }
    Ok(GeneratorSet {
        n: 3,
        m,
        members,
        provenance,
    })
}

/// Outcome of the generation check: for every degree through the bound,
/// whether the per-weight spans of generator multiples fill the kernel.
#[derive(Clone, Debug)]
pub struct GenerationReport {
    pub m: usize,
    pub max_degree: u32,
    pub generators: usize,
    pub per_degree: BTreeMap<u32, bool>,
    pub failures: Vec<(Weight, u64, u64)>, // weight, achieved, required
}

impl GenerationReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.per_degree.values().all(|&b| b)
    }
}

pub const GENERATION_MAX_M: usize = 4;

/// Check that the ideal generated by `gens` contains every kernel
/// component through `max_degree` (default: the degree bound 8 for
/// n = 3). Every generator is first verified to be in the kernel.
pub fn check_generation(gens: &GeneratorSet, max_degree: u32) -> Result<GenerationReport> {
    let m = gens.m;
    if gens.n != 3 {
        return Err(Error::Domain("generation checks are for n = 3".into()));
    }
    if m > GENERATION_MAX_M {
        return Err(Error::Domain(format!(
            "generation checks are capped at m = {GENERATION_MAX_M}"
        )));
    }
    // precondition: every member is killed by the evaluation map
    let bad: Vec<&GeneratorMember> = gens
        .members
        .par_iter()
        .filter(|g| !phi_eval(&g.element).map(|p| p.is_zero()).unwrap_or(false))
        .collect();
    if let Some(g) = bad.first() {
        return Err(Error::Domain(format!(
            "generator {} is not in the kernel",
            g.name
        )));
    }

    let weights = super::weights_of_degrees(m, 5..=max_degree);
    let results: Vec<(Weight, u64, u64)> = weights
        .par_iter()
        .map(|alpha| {
            let required =
                dim_f_component(3, m, alpha).saturating_sub(dim_invariant_component(3, m, alpha));
            if required == 0 {
                return (alpha.clone(), 0, 0);
            }
            let mut span: PolySpan<TMono> = PolySpan::new();
            'outer: for g in &gens.members {
                if g.weight.iter().zip(alpha).any(|(gw, aw)| gw > aw) {
                    continue;
                }
                let gamma: Weight = alpha.iter().zip(&g.weight).map(|(a, b)| a - b).collect();
                for u in t_monomials_of_weight(m, 3, &gamma) {
                    let product = g.element.body().mul_monomial(&u);
                    span.insert(&product);
                    if span.dim() as u64 == required {
                        break 'outer;
                    }
                }
            }
            (alpha.clone(), span.dim() as u64, required)
        })
        .collect();

    let mut per_degree: BTreeMap<u32, bool> = (5..=max_degree).map(|d| (d, true)).collect();
    let mut failures = Vec::new();
    for (alpha, achieved, required) in results {
        if achieved > required {
            return Err(Error::Inconsistent(format!(
                "span dimension {achieved} exceeds the kernel dimension {required} at {alpha:?}"
            )));
        }
        if achieved < required {
            let d: u32 = alpha.iter().sum();
            per_degree.insert(d, false);
            failures.push((alpha, achieved, required));
        }
    }
    failures.sort();
    Ok(GenerationReport {
        m,
        max_degree,
        generators: gens.len(),
        per_degree,
        failures,
    })
}

/// Outcome of the minimality check.
#[derive(Clone, Debug)]
pub struct MinimalityReport {
    pub m: usize,
    pub minimal: bool,
    /// Largest degree in the generator set.
    pub beta: u32,
    pub degree_counts: BTreeMap<u32, usize>,
    pub failures: Vec<String>,
}

/// Certify minimality of a generating set for n = 3: in each weight of
/// degree 5 the members must be independent and exactly fill the kernel
/// component; in each weight of degree 6 they must be independent modulo
/// the span of degree-one multiples of the degree-5 kernel and fill the
/// quotient. Reports the largest generator degree.
pub fn check_minimality(gens: &GeneratorSet) -> Result<MinimalityReport> {
    let m = gens.m;
    if gens.n != 3 {
        return Err(Error::Domain("minimality checks are for n = 3".into()));
    }
    if m > GENERATION_MAX_M {
        return Err(Error::Domain(format!(
            "minimality checks are capped at m = {GENERATION_MAX_M}"
        )));
    }
    if gens.members.iter().any(|g| g.degree != 5 && g.degree != 6) {
        return Err(Error::Domain(
            "minimality check expects generators of degree 5 and 6 only".into(),
        ));
    }
    let mut failures: Vec<String> = Vec::new();

    // degree-5 kernel bases per weight, reused by the degree-6 stage
    let deg5_weights = compositions(5, m);
    let deg5_bases: BTreeMap<Weight, Vec<FPoly>> = deg5_weights
        .par_iter()
        .map(|alpha| {
            let basis = kernel_component_basis(3, m, alpha)?;
            Ok((alpha.clone(), basis))
        })
        .collect::<Result<_>>()?;

    // members grouped by weight
    let mut by_weight: BTreeMap<Weight, Vec<&GeneratorMember>> = BTreeMap::new();
    for g in &gens.members {
        by_weight.entry(g.weight.clone()).or_default().push(g);
    }

    for alpha in &deg5_weights {
        let dim_k = deg5_bases[alpha].len() as u64;
        let members = by_weight.get(alpha).map(|v| v.as_slice()).unwrap_or(&[]);
        let mut span: PolySpan<TMono> = PolySpan::new();
        for g in members {
            if !span.insert(g.element.body()) {
                failures.push(format!(
                    "dependent degree-5 generator {} at {alpha:?}",
                    g.name
                ));
            }
        }
        if members.len() as u64 != dim_k {
            failures.push(format!(
                "degree-5 count at {alpha:?}: {} generators vs kernel dimension {dim_k}",
                members.len()
            ));
        }
    }

    let deg6_checks: Vec<Vec<String>> = compositions(6, m)
        .par_iter()
        .map(|alpha| {
            let mut local = Vec::new();
            let dim_k =
                dim_f_component(3, m, alpha).saturating_sub(dim_invariant_component(3, m, alpha));
            // span of t(x_j) * (degree-5 kernel)
            let mut span: PolySpan<TMono> = PolySpan::new();
            for j in 0..m {
                if alpha[j] == 0 {
                    continue;
                }
                let mut beta = alpha.clone();
                beta[j] -= 1;
                let unit = TMono::var(crate::polycore::Word::unit(m, j)).expect("unit word");
                for k in &deg5_bases[&beta] {
                    span.insert(&k.body().mul_monomial(&unit));
                }
            }
            let ideal_dim = span.dim() as u64;
            let members = by_weight.get(alpha).map(|v| v.as_slice()).unwrap_or(&[]);
            for g in members {
                if !span.insert(g.element.body()) {
                    local.push(format!(
                        "degree-6 generator {} lies in the ideal slice at {alpha:?}",
                        g.name
                    ));
                }
            }
            let expected = dim_k.saturating_sub(ideal_dim);
            if members.len() as u64 != expected {
                local.push(format!(
                    "degree-6 count at {alpha:?}: {} generators vs required {expected}",
                    members.len()
                ));
            }
            local
        })
        .collect();
    for mut v in deg6_checks {
        failures.append(&mut v);
    }
    failures.sort();

    Ok(MinimalityReport {
        m,
        minimal: failures.is_empty(),
        beta: gens.max_degree(),
        degree_counts: gens.degree_counts(),
        failures,
    })
}

/// Outcome of the degree-2n lower-bound instance check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lowerbound {
    /// The determinant relation lies outside the ideal slice: the bound holds.
    Holds,
    /// The relation was found inside the ideal slice (would falsify the bound).
    Fails,
    /// The computation did not finish within the configured resources.
    Unsupported(String),
}

/// Check that the bordered Gram determinant for `n` rows (with m = n) is
/// not contained in the span of products of positive-degree monomials
/// with lower-degree kernel components. Supported for n in 2..=4; an
/// optional wall-clock budget turns long runs into `Unsupported`.
pub fn lowerbound_check(n: usize, budget: Option<Duration>) -> Result<Lowerbound> {
    if !(2..=4).contains(&n) {
        return Ok(Lowerbound::Unsupported(format!(
            "lower-bound instances are implemented for n in 2..=4, got {n}"
        )));
    }
    let start = Instant::now();
    let deadline = budget.map(|b| start + b);
    let m = n;
    let omega: Weight = vec![2; n];
    let record = gram_relation(n, m)?;

    // all nonzero weights gamma strictly below omega; beta = omega - gamma
    let mut splits: Vec<(Weight, Weight)> = Vec::new();
    let mut gammas: Vec<Weight> = Vec::new();
    for d in 1..(2 * n as u32) {
        for gamma in compositions(d, m) {
            if gamma.iter().zip(&omega).all(|(g, o)| g <= o) {
                gammas.push(gamma);
            }
        }
    }
    for gamma in gammas {
        let beta: Weight = omega.iter().zip(&gamma).map(|(o, g)| o - g).collect();
        splits.push((gamma, beta));
    }
    splits.sort();

    let over_deadline = || deadline.map(|d| Instant::now() > d).unwrap_or(false);

    // kernel bases for the distinct betas, in parallel
    let betas: Vec<Weight> = {
        let mut b: Vec<Weight> = splits.iter().map(|(_, b)| b.clone()).collect();
        b.sort();
        b.dedup();
        b
    };
    let base_results: Vec<(Weight, Result<Vec<FPoly>>)> = betas
        .par_iter()
        .map(|beta| {
            if over_deadline() {
                return (
                    beta.clone(),
                    Err(Error::Resource("budget exhausted".into())),
                );
            }
            (beta.clone(), kernel_component_basis(n, m, beta))
        })
        .collect();
    let mut kernel_bases: BTreeMap<Weight, Vec<FPoly>> = BTreeMap::new();
    for (beta, res) in base_results {
        match res {
            Ok(b) => {
                kernel_bases.insert(beta, b);
            }
            Err(Error::Resource(msg)) => {
                return Ok(Lowerbound::Unsupported(format!(
                    "kernel component at {beta:?} not finished: {msg}"
                )))
            }
            Err(e) => return Err(e),
        }
    }

    let mut span: PolySpan<TMono> = PolySpan::new();
    for (gamma, beta) in &splits {
        let basis = &kernel_bases[beta];
        if basis.is_empty() {
            continue;
        }
        for u in t_monomials_of_weight(m, n as u32, gamma) {
            if over_deadline() {
                return Ok(Lowerbound::Unsupported(
                    "span assembly exceeded the time budget".into(),
                ));
            }
            for k in basis {
                span.insert(&k.body().mul_monomial(&u));
            }
        }
    }
    let j_element = record.element.with_cap(n as u32)?;
    if span.contains(j_element.body()) {
        return Ok(Lowerbound::Fails);
    }
    Ok(Lowerbound::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts_by_m() {
        let g2 = standard_generator_set(2).unwrap();
        assert_eq!(g2.len(), 5);
        assert_eq!(g2.degree_counts(), BTreeMap::from([(5u32, 2usize), (6, 3)]));
        let g3 = standard_generator_set(3).unwrap();
        assert_eq!(g3.len(), 43);
    }

    #[test]
    fn generation_and_minimality_m2() {
        let g = standard_generator_set(2).unwrap();
        let rep = check_generation(&g, 8).unwrap();
        assert!(rep.pass(), "failures: {:?}", rep.failures);
        let min = check_minimality(&g).unwrap();
        assert!(min.minimal, "failures: {:?}", min.failures);
        assert_eq!(min.beta, 6);
    }

    #[test]
    fn dropping_a_generator_breaks_generation_m2() {
        let mut g = standard_generator_set(2).unwrap();
        g.members.pop();
        let rep = check_generation(&g, 8).unwrap();
        assert!(!rep.pass());
    }

    #[test]
    fn lowerbound_small_instances() {
        assert_eq!(lowerbound_check(2, None).unwrap(), Lowerbound::Holds);
        assert_eq!(lowerbound_check(3, None).unwrap(), Lowerbound::Holds);
        assert!(matches!(
            lowerbound_check(5, None).unwrap(),
            Lowerbound::Unsupported(_)
        ));
    }
}
