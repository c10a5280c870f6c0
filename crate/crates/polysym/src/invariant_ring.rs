//! The ring of multisymmetric polynomials: the S_n-invariants of the
//! coordinate ring of n x m matrices under row permutation.
//!
//! Provides the polarized power sums `[w]`, orbit-sum bases of the
//! multidegree components, exact dimension counts by averaging fixed
//! monomials over S_n, and coordinate extraction against orbit bases.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::comb::{cycle_type, permutations, x_monomials_of_weight};
use crate::error::{Error, Result};
use crate::polycore::{Weight, Word, XMono, XPoly, XSpace};
use crate::rational::{rat_int, Rational};

pub const MAX_ROWS: usize = 6;

/// An S_n-invariant polynomial in x-space. Constructors check invariance
/// under generators of S_n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantPoly {
    body: XPoly,
}

impl InvariantPoly {
    /// Wrap a polynomial after verifying S_n-invariance.
    pub fn new(body: XPoly) -> Result<Self> {
        if !is_row_invariant(&body) {
            return Err(Error::Domain("polynomial is not S_n-invariant".into()));
        }
        Ok(InvariantPoly { body })
    }

    /// Wrap without checking; for values produced by operations that
    /// preserve invariance.
    pub(crate) fn new_unchecked(body: XPoly) -> Self {
        InvariantPoly { body }
    }

    pub fn body(&self) -> &XPoly {
        &self.body
    }

    pub fn into_body(self) -> XPoly {
        self.body
    }

    pub fn space(&self) -> XSpace {
        self.body.space()
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn multidegree(&self) -> Option<Weight> {
        self.body.multidegree()
    }

    pub fn mul(&self, other: &InvariantPoly) -> Result<InvariantPoly> {
        Ok(InvariantPoly {
            body: self.body.checked_mul(&other.body)?,
        })
    }

    pub fn add(&self, other: &InvariantPoly) -> Result<InvariantPoly> {
        Ok(InvariantPoly {
            body: self.body.checked_add(&other.body)?,
        })
    }

    pub fn scale(&self, c: &Rational) -> InvariantPoly {
        InvariantPoly {
            body: self.body.scale(c),
        }
    }
}

/// Invariance under the transposition (0 1) and the n-cycle, which
/// generate S_n.
pub fn is_row_invariant(p: &XPoly) -> bool {
    let n = p.space().rows;
    if n <= 1 {
        return true;
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    if &p.permute_rows(&swap) != p {
        return false;
    }
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    &p.permute_rows(&cycle) == p
}

/// The polarized power sum `[w] = sum_i prod_j x[i][j]^{w_j}` over `n` rows.
pub fn polarized_power_sum(n: usize, w: &Word) -> Result<InvariantPoly> {
    if w.is_zero() {
        return Err(Error::Domain(
            "power sum of the empty word is forbidden".into(),
        ));
    }
    if n == 0 || n > MAX_ROWS {
        return Err(Error::Domain(format!(
            "row count {n} out of range 1..={MAX_ROWS}"
        )));
    }
    let m = w.symbols();
    let space = XSpace::new(n, m);
    let mut body = XPoly::zero(space);
    for i in 0..n {
        let pairs: Vec<(u32, u32)> =
            w.0.iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(j, &e)| (space.flat(i, j) as u32, e))
                .collect();
        body.add_term(XMono::from_pairs(pairs), rat_int(1));
    }
    Ok(InvariantPoly::new_unchecked(body))
}

/// Basis of the multidegree-`alpha` component of the invariant ring:
/// one orbit sum per S_n-orbit of x-monomials of column-degree `alpha`,
/// ordered by decreasing orbit representative (the lexicographically
/// largest monomial of each orbit).
#[derive(Clone, Debug)]
pub struct OrbitBasis {
    pub n: usize,
    pub m: usize,
    pub alpha: Weight,
    reps: Vec<XMono>,
    rep_index: BTreeMap<XMono, usize>,
    elements: Vec<InvariantPoly>,
}

impl OrbitBasis {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[XMono] {
        &self.reps
    }

    pub fn elements(&self) -> &[InvariantPoly] {
        &self.elements
    }

    pub fn rep_position(&self, rep: &XMono) -> Option<usize> {
        self.rep_index.get(rep).copied()
    }
}

/// Enumerate the orbit representatives of x-monomials of column-degree
/// `alpha` (largest monomial in each orbit), sorted decreasing.
pub fn orbit_representatives(n: usize, alpha: &[u32]) -> Vec<XMono> {
    let cols = alpha.len();
    let perms = permutations(n);
    let mut reps: Vec<XMono> = Vec::new();
    let space = XSpace::new(n, cols);
    'outer: for dense in x_monomials_of_weight(n, alpha) {
        let mono = XMono::from_dense(&dense);
        // keep only monomials that are maximal in their orbit
        for p in &perms {
            if mono.permute_rows(&space, p) > mono {
                continue 'outer;
            }
        }
        reps.push(mono);
    }
    reps.sort();
    reps.reverse();
    reps
}

pub fn orbit_basis(n: usize, m: usize, alpha: &[u32]) -> Result<OrbitBasis> {
    if alpha.len() != m {
        return Err(Error::Domain(format!(
            "multidegree length {} != m = {m}",
            alpha.len()
        )));
    }
    if n == 0 || n > MAX_ROWS {
        return Err(Error::Domain(format!(
            "row count {n} out of range 1..={MAX_ROWS}"
        )));
    }
    let space = XSpace::new(n, m);
    let perms = permutations(n);
    let reps = orbit_representatives(n, alpha);
    let mut elements = Vec::with_capacity(reps.len());
    for rep in &reps {
        let mut orbit: Vec<XMono> = perms.iter().map(|p| rep.permute_rows(&space, p)).collect();
        orbit.sort();
        orbit.dedup();
        let mut body = XPoly::zero(space);
        for mono in orbit {
            body.add_term(mono, rat_int(1));
        }
        elements.push(InvariantPoly::new_unchecked(body));
    }
    let rep_index = reps
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, r)| (r, i))
        .collect();
    Ok(OrbitBasis {
        n,
        m,
        alpha: alpha.to_vec(),
        reps,
        rep_index,
        elements,
    })
}

/// Number of x-monomials of column-degree `alpha` fixed by a permutation
/// of the given cycle type: each cycle carries one exponent row, scaled
/// by the cycle length.
fn fixed_monomials(cycles: &[u32], alpha: &[u32]) -> u64 {
    fn rec(
        idx: usize,
        cycles: &[u32],
        residual: &mut Vec<u32>,
        memo: &mut BTreeMap<(usize, Vec<u32>), u64>,
    ) -> u64 {
        if idx == cycles.len() {
            return if residual.iter().all(|&r| r == 0) {
                1
            } else {
                0
            };
        }
        let key = (idx, residual.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let len = cycles[idx];
        // choose the exponent row e for this cycle: len * e <= residual
        let bounds: Vec<u32> = residual.iter().map(|&r| r / len).collect();
        let mut total = 0u64;
        let mut e = vec![0u32; residual.len()];
        loop {
            let mut rem = residual.clone();
            for (j, &ej) in e.iter().enumerate() {
                rem[j] -= len * ej;
            }
            let save = std::mem::replace(residual, rem);
            total += rec(idx + 1, cycles, residual, memo);
            *residual = save;
            // odometer over e bounded by bounds
            let mut j = 0;
            loop {
                if j == e.len() {
                    memo.insert(key, total);
                    return total;
                }
                if e[j] < bounds[j] {
                    e[j] += 1;
                    break;
                }
                e[j] = 0;
                j += 1;
            }
        }
    }
    let mut residual = alpha.to_vec();
    let mut memo = BTreeMap::new();
    rec(0, cycles, &mut residual, &mut memo)
}

/// Dimension of the multidegree-`alpha` component of the invariant ring,
/// by averaging fixed-monomial counts over S_n. An independent count of
/// the orbit enumeration behind [`orbit_basis`].
pub fn dim_invariant_component(n: usize, _m: usize, alpha: &[u32]) -> u64 {
    let mut by_type: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for p in permutations(n) {
        *by_type.entry(cycle_type(&p)).or_insert(0) += 1;
    }
    let mut total: u64 = 0;
    for (cycles, count) in &by_type {
        total += count * fixed_monomials(cycles, alpha);
    }
    let order: u64 = (1..=n as u64).product();
    debug_assert_eq!(total % order, 0);
    total / order
}

/// Exact coordinates of `p` against an orbit basis of its multidegree.
/// Each orbit sum is determined by its representative monomial, so the
/// coordinate is the coefficient of the representative; the result is
/// verified by reconstruction.
pub fn coordinates(p: &InvariantPoly, basis: &OrbitBasis) -> Result<Vec<Rational>> {
    let space = p.space();
    if space.rows != basis.n || space.cols != basis.m {
        return Err(Error::SpaceMismatch(format!(
            "polynomial in {}x{} space vs basis for {}x{}",
            space.rows, space.cols, basis.n, basis.m
        )));
    }
    if !p.is_zero() {
        match p.multidegree() {
            Some(a) if a == basis.alpha => {}
            other => {
                return Err(Error::Domain(format!(
                    "multidegree {:?} does not match basis multidegree {:?}",
                    other, basis.alpha
                )))
            }
        }
    }
    let coords: Vec<Rational> = basis.reps.iter().map(|r| p.body().coeff(r)).collect();
    // reconstruction must reproduce p exactly
    let mut acc = XPoly::zero(space);
    for (c, b) in coords.iter().zip(basis.elements()) {
        if !c.is_zero() {
            acc = &acc + &b.body().scale(c);
        }
    }
    if &acc != p.body() {
        return Err(Error::Inconsistent(
            "orbit-basis reconstruction mismatch: input not in the invariant span".into(),
        ));
    }
    Ok(coords)
}

/// Coordinates without the reconstruction pass, for inner loops whose
/// inputs are invariants by construction.
pub fn coordinates_unchecked(p: &XPoly, basis: &OrbitBasis) -> Vec<Rational> {
    basis.reps.iter().map(|r| p.coeff(r)).collect()
}
