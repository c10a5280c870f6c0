//! The presentation algebra on the abstract variables `t(w)`, the
//! evaluation map onto the invariant ring (`t(w) -> [w]`), and the
//! infinitesimal gl_m action by derivations.
//!
//! The derivation `e_{ij}` sends `t(w)` to `t(x_i * dw/dx_j)` and extends
//! by the Leibniz rule. Highest-weight testing only needs annihilation by
//! the raising operators `e_{i,i+1}`, and closures under all `e_{ij}`
//! realize the module generated by an element, so no group elements are
//! ever sampled: everything stays exact and finite.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::invariant_ring::{polarized_power_sum, InvariantPoly};
use crate::linalg::PolySpan;
use crate::polycore::{TMono, TPoly, TSpace, Weight, Word, XPoly};
use crate::rational::{rat_int, Rational};

/// Element of the presentation algebra for `n` rows: a polynomial in the
/// `t(w)` with `deg w <= cap`, over `m` symbols.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FPoly {
    n: usize,
    body: TPoly,
}

impl FPoly {
    pub fn zero(n: usize, m: usize, cap: u32) -> Self {
        FPoly {
            n,
            body: TPoly::zero(TSpace::new(m, cap)),
        }
    }

    /// The generator `t(w)`.
    pub fn t(n: usize, m: usize, cap: u32, w: Word) -> Result<Self> {
        if w.degree() > cap {
            return Err(Error::Domain(format!(
                "word of degree {} exceeds cap {cap}",
                w.degree()
            )));
        }
        Ok(FPoly {
            n,
            body: TPoly::t_var(TSpace::new(m, cap), w)?,
        })
    }

    pub fn constant(n: usize, m: usize, cap: u32, c: Rational) -> Self {
        FPoly {
            n,
            body: TPoly::constant(TSpace::new(m, cap), c),
        }
    }

    pub fn from_body(n: usize, body: TPoly) -> Self {
        FPoly { n, body }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.body.space().syms
    }

    pub fn cap(&self) -> u32 {
        self.body.space().cap
    }

    pub fn body(&self) -> &TPoly {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn degree(&self) -> u32 {
        self.body.degree()
    }

    pub fn multidegree(&self) -> Option<Weight> {
        self.body.multidegree()
    }

    fn check(&self, other: &FPoly) -> Result<()> {
        if self.n != other.n || self.body.space() != other.body.space() {
            return Err(Error::SpaceMismatch(format!(
                "F(n={}, {:?}) vs F(n={}, {:?})",
                self.n,
                self.body.space(),
                other.n,
                other.body.space()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &FPoly) -> Result<FPoly> {
        self.check(other)?;
        Ok(FPoly {
            n: self.n,
            body: self.body.checked_add(&other.body)?,
        })
    }

    pub fn sub(&self, other: &FPoly) -> Result<FPoly> {
        self.check(other)?;
        Ok(FPoly {
            n: self.n,
            body: self.body.checked_sub(&other.body)?,
        })
    }

    pub fn mul(&self, other: &FPoly) -> Result<FPoly> {
        self.check(other)?;
        Ok(FPoly {
            n: self.n,
            body: self.body.checked_mul(&other.body)?,
        })
    }

    pub fn scale(&self, c: &Rational) -> FPoly {
        FPoly {
            n: self.n,
            body: self.body.scale(c),
        }
    }

    /// Re-tag with a different degree cap; errors if some index word exceeds it.
    pub fn with_cap(&self, cap: u32) -> Result<FPoly> {
        Ok(FPoly {
            n: self.n,
            body: self.body.with_cap(cap)?,
        })
    }

    /// Reinterpret over a larger symbol set.
    pub fn extend_symbols(&self, m: usize) -> FPoly {
        FPoly {
            n: self.n,
            body: self.body.extend_symbols(m),
        }
    }

    pub fn render(&self) -> String {
        self.body.render()
    }
}

/// The evaluation homomorphism: replace each `t(w)` by the polarized
/// power sum `[w]` over `f.n()` rows and expand exactly.
pub fn phi_eval(f: &FPoly) -> Result<InvariantPoly> {
    let n = f.n();
    let m = f.m();
    let space = crate::polycore::XSpace::new(n, m);
    let mut cache: BTreeMap<Word, XPoly> = BTreeMap::new();
    let mut acc = XPoly::zero(space);
    for (mono, c) in f.body().terms() {
        let mut prod = XPoly::constant(space, rat_int(1));
        for (w, e) in mono.factors() {
            let base = cache
                .entry(w.clone())
                .or_insert_with(|| polarized_power_sum(n, w).expect("nonzero word").into_body())
                .clone();
            for _ in 0..*e {
                prod = &prod * &base;
            }
        }
        acc = &acc + &prod.scale(c);
    }
    Ok(InvariantPoly::new_unchecked(acc))
}

/// The derivation `e_{ij}` on the t-algebra (0-based symbol indices,
/// `i != j`): `t(w) -> (w_j) * t(w + eps_i - eps_j)`, Leibniz on products.
pub fn gl_derivation(i: usize, j: usize, f: &FPoly) -> Result<FPoly> {
    let m = f.m();
    if i >= m || j >= m || i == j {
        return Err(Error::Domain(format!(
            "derivation indices ({i},{j}) out of range for m = {m}"
        )));
    }
    let space = f.body().space();
    let mut out = TPoly::zero(space);
    for (mono, c) in f.body().terms() {
        let factors = mono.factors();
        for (k, (w, e)) in factors.iter().enumerate() {
            let wj = w.0[j];
            if wj == 0 {
                continue;
            }
            let mut shifted = w.clone();
            shifted.0[i] += 1;
            shifted.0[j] -= 1;
            let mut pairs: Vec<(Word, u32)> = Vec::with_capacity(factors.len() + 1);
            for (l, (w2, e2)) in factors.iter().enumerate() {
                let e2 = if l == k { *e2 - 1 } else { *e2 };
                if e2 > 0 {
                    pairs.push((w2.clone(), e2));
                }
            }
            pairs.push((shifted, 1));
            let new_mono = TMono::from_pairs(pairs)?;
            out.add_term(new_mono, c * &rat_int((*e as i64) * (wj as i64)));
        }
    }
    Ok(FPoly {
        n: f.n(),
        body: out,
    })
}

/// The matching derivation on x-space, `sum_k x[k][i] d/dx[k][j]`; used to
/// check that the evaluation map intertwines the gl_m actions.
pub fn gl_derivation_x(i: usize, j: usize, p: &XPoly) -> XPoly {
    let space = p.space();
    let mut out = XPoly::zero(space);
    for (mono, c) in p.terms() {
        for &(v, e) in mono.factors() {
            let row = v as usize / space.cols;
            let col = v as usize % space.cols;
            if col != j || e == 0 {
                continue;
            }
            let mut pairs: Vec<(u32, u32)> = mono
                .factors()
                .iter()
                .cloned()
                .filter(|&(v2, _)| v2 != v)
                .collect();
            if e > 1 {
                pairs.push((v, e - 1));
            }
            let target = space.flat(row, i) as u32;
            match pairs.iter_mut().find(|(v2, _)| *v2 == target) {
                Some(entry) => entry.1 += 1,
                None => pairs.push((target, 1)),
            }
            out.add_term(
                crate::polycore::XMono::from_pairs(pairs),
                c * &rat_int(e as i64),
            );
        }
    }
    out
}

/// Highest-weight test: `f` must be nonzero; it is a highest weight
/// vector iff it is multihomogeneous and every raising operator
/// `e_{i,i+1}` kills it. Returns the weight when `f` is multihomogeneous.
pub fn is_highest_weight(f: &FPoly) -> Result<(bool, Option<Weight>)> {
    if f.is_zero() {
        return Err(Error::Domain(
            "highest-weight test of the zero element".into(),
        ));
    }
    let Some(weight) = f.multidegree() else {
        return Ok((false, None));
    };
    let m = f.m();
    for i in 0..m.saturating_sub(1) {
        if !gl_derivation(i, i + 1, f)?.is_zero() {
            return Ok((false, Some(weight)));
        }
    }
    Ok((true, Some(weight)))
}

pub const DEFAULT_SPAN_BOUND: usize = 4096;

/// Exact linear closure of `f` under all derivations `e_{ij}` (raising
/// and lowering): a basis of the smallest subspace containing `f` and
/// stable under the gl_m action. For a highest weight vector of weight
/// `lambda` the dimension is the Weyl dimension of `lambda`.
///
/// Breadth-first over basis vectors, operators `(i,j)` in lexicographic
/// order, with incremental exact reduction; errors if the closure would
/// exceed `max_dim`.
pub fn gl_orbit_span(f: &FPoly, max_dim: usize) -> Result<Vec<FPoly>> {
    if f.is_zero() {
        return Ok(vec![]);
    }
    if f.multidegree().is_none() {
        return Err(Error::Domain(
            "orbit span of an inhomogeneous element".into(),
        ));
    }
    let m = f.m();
    let ops: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut span: PolySpan<TMono> = PolySpan::new();
    span.insert(f.body());
    let mut queue: Vec<TPoly> = vec![span.basis()[0].clone()];
    let mut head = 0;
    while head < queue.len() {
        let cur = FPoly::from_body(f.n(), queue[head].clone());
        head += 1;
        for &(i, j) in &ops {
            let image = gl_derivation(i, j, &cur)?;
            if image.is_zero() {
                continue;
            }
            let before = span.dim();
            if span.insert(image.body()) {
                if span.dim() > max_dim {
                    return Err(Error::Resource(format!(
                        "orbit span exceeded the dimension bound {max_dim}"
                    )));
                }
                debug_assert_eq!(span.dim(), before + 1);
                queue.push(span.basis()[before].clone());
            }
        }
    }
    Ok(span
        .basis()
        .iter()
        .map(|b| FPoly::from_body(f.n(), b.clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, m: usize, cap: u32, exps: Vec<u32>) -> FPoly {
        FPoly::t(n, m, cap, Word::new(exps)).unwrap()
    }

    #[test]
    fn phi_of_single_variable() {
        // phi(t(x)) for n=3 is x11 + x21 + x31
        let f = t(3, 1, 3, vec![1]);
        let p = phi_eval(&f).unwrap();
        assert_eq!(p.body().term_count(), 3);
    }

    #[test]
    fn phi_of_product_expands() {
        // phi(t(x) t(y)) = [x][y] has 9 terms for n=3
        let f = t(3, 2, 3, vec![1, 0]).mul(&t(3, 2, 3, vec![0, 1])).unwrap();
        let p = phi_eval(&f).unwrap();
        assert_eq!(p.body().term_count(), 9);
        assert_eq!(p.multidegree(), Some(vec![1, 1]));
    }

    #[test]
    fn derivation_on_variables() {
        // e_{12} t(y) = t(x) for m=2
        let f = t(3, 2, 3, vec![0, 1]);
        let d = gl_derivation(0, 1, &f).unwrap();
        assert_eq!(d, t(3, 2, 3, vec![1, 0]));

        // e_{12} t(xy^2) = 2 t(x^2 y)
        let f = t(3, 2, 3, vec![1, 2]);
        let d = gl_derivation(0, 1, &f).unwrap();
        assert_eq!(d, t(3, 2, 3, vec![2, 1]).scale(&rat_int(2)));
    }

    #[test]
    fn leibniz_rule_on_a_product() {
        let f = t(3, 2, 3, vec![1, 1]);
        let g = t(3, 2, 3, vec![0, 2]);
        let fg = f.mul(&g).unwrap();
        let lhs = gl_derivation(0, 1, &fg).unwrap();
        let rhs = gl_derivation(0, 1, &f)
            .unwrap()
            .mul(&g)
            .unwrap()
            .add(&f.mul(&gl_derivation(0, 1, &g).unwrap()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn weight_bookkeeping() {
        let f = t(3, 3, 3, vec![1, 1, 1]);
        let d = gl_derivation(0, 2, &f).unwrap();
        // weight moves by +eps_1 - eps_3
        assert_eq!(d.multidegree(), Some(vec![2, 1, 0]));
    }

    #[test]
    fn highest_weight_basics() {
        // t(x)^k is a highest weight vector of weight (k, 0)
        let f = t(3, 2, 3, vec![1, 0]);
        let f3 = f.mul(&f).unwrap().mul(&f).unwrap();
        assert_eq!(is_highest_weight(&f3).unwrap(), (true, Some(vec![3, 0])));

        // t(y) is not: e_{12} t(y) = t(x)
        let g = t(3, 2, 3, vec![0, 1]);
        assert_eq!(is_highest_weight(&g).unwrap(), (false, Some(vec![0, 1])));

        let z = FPoly::zero(3, 2, 3);
        assert!(is_highest_weight(&z).is_err());
    }

    #[test]
    fn orbit_span_of_natural_module() {
        // span from t(x) is all of t(x_1)..t(x_m)
        for m in 1..=4usize {
            let f = t(3, m, 3, {
                let mut e = vec![0; m];
                e[0] = 1;
                e
            });
            let span = gl_orbit_span(&f, 64).unwrap();
            assert_eq!(span.len(), m);
        }
    }

    #[test]
    fn phi_intertwines_derivations() {
        let f = t(3, 2, 3, vec![2, 1]).mul(&t(3, 2, 3, vec![0, 1])).unwrap();
        for (i, j) in [(0usize, 1usize), (1, 0)] {
            let lhs = phi_eval(&gl_derivation(i, j, &f).unwrap()).unwrap();
            let rhs = gl_derivation_x(i, j, phi_eval(&f).unwrap().body());
            assert_eq!(lhs.body(), &rhs);
        }
    }

    #[test]
    fn span_bound_is_enforced() {
        let f = t(3, 3, 3, vec![1, 1, 0]);
        assert!(matches!(gl_orbit_span(&f, 1), Err(Error::Resource(_))));
    }
}
