//! The character ring of S_3 and the multigraded Hilbert series
//! machinery: secondary-generator series, the dimension series of the
//! invariant ring, and the consistency identity between them.
//!
//! The character ring is the free Z-module on the trivial, two-
//! dimensional and sign characters with the multiplication
//! `chi1^2 = chi0 + chi1 + chi2`, `chi2^2 = chi0`, `chi1 chi2 = chi1`.
//! Series are dense maps over weight vectors truncated by total degree;
//! division by `(1 - t^k)` factors is multiplication by truncated
//! geometric series, so everything stays exact over the integers.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::invariant_ring::dim_invariant_component;
use crate::polycore::Weight;

/// Coefficients usable inside a character-ring element.
pub trait CharCoeff: Clone + PartialEq {
    fn compatible(&self, other: &Self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl CharCoeff for i64 {
    fn compatible(&self, _: &Self) -> bool {
        true
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Multivariate power series over Z, truncated by total degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    pub syms: usize,
    pub trunc: u32,
    coeffs: BTreeMap<Weight, i64>,
}

impl TruncatedSeries {
    pub fn zero(syms: usize, trunc: u32) -> Self {
        TruncatedSeries {
            syms,
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(syms: usize, trunc: u32) -> Self {
        let mut s = Self::zero(syms, trunc);
        s.set(vec![0; syms], 1);
        s
    }

    /// The monomial `t_j^k` (0-based j).
    pub fn monomial(syms: usize, trunc: u32, j: usize, k: u32) -> Self {
        let mut s = Self::zero(syms, trunc);
        let mut w = vec![0u32; syms];
        w[j] = k;
        s.set(w, 1);
        s
    }

    pub fn set(&mut self, w: Weight, c: i64) {
        assert_eq!(w.len(), self.syms);
        if w.iter().sum::<u32>() > self.trunc {
            return;
        }
        if c == 0 {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, c);
        }
    }

    pub fn coeff(&self, w: &[u32]) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.compatible(other));
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            let v = out.coeff(w) + c;
            out.set(w.clone(), v);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.compatible(other));
        let mut out = Self::zero(self.syms, self.trunc);
        for (wa, ca) in &self.coeffs {
            for (wb, cb) in &other.coeffs {
                let w: Weight = wa.iter().zip(wb).map(|(a, b)| a + b).collect();
                if w.iter().sum::<u32>() > self.trunc {
                    continue;
                }
                let v = out.coeff(&w) + ca * cb;
                out.set(w, v);
            }
        }
        out
    }

    /// Multiply by the truncated expansion of `1 / (1 - t_j^k)`.
    pub fn mul_geometric(&self, j: usize, k: u32) -> Self {
        let mut geom = Self::zero(self.syms, self.trunc);
        let mut e = 0u32;
        while e * k <= self.trunc {
            let mut w = vec![0u32; self.syms];
            w[j] = e * k;
            geom.set(w, 1);
            e += 1;
        }
        self.mul(&geom)
    }

    /// Sparse text form, one `coeff*t1^a1...` per term.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|(w, c)| {
                let mono: String = w
                    .iter()
                    .enumerate()
                    .filter(|&(_, &e)| e > 0)
                    .map(|(j, &e)| {
                        if e == 1 {
                            format!("t{}", j + 1)
                        } else {
                            format!("t{}^{e}", j + 1)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*");
                if mono.is_empty() {
                    format!("{c}")
                } else if *c == 1 {
                    mono
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|(w, c)| serde_json::json!({"weight": w, "coeff": c}))
                .collect(),
        )
    }
}

impl CharCoeff for TruncatedSeries {
    fn compatible(&self, other: &Self) -> bool {
        self.syms == other.syms && self.trunc == other.trunc
    }
    fn add(&self, other: &Self) -> Self {
        TruncatedSeries::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        TruncatedSeries::mul(self, other)
    }
}

/// Element of the character ring of S_3 with coefficients in `T`:
/// `c0*chi0 + c1*chi1 + c2*chi2`.
#[derive(Clone, PartialEq, Debug)]
pub struct CharElem<T: CharCoeff> {
    pub c0: T,
    pub c1: T,
    pub c2: T,
}

impl<T: CharCoeff> CharElem<T> {
    pub fn new(c0: T, c1: T, c2: T) -> Self {
        CharElem { c0, c1, c2 }
    }
}

/// Product in the character ring, bilinear over the multiplication table.
pub fn char_mul<T: CharCoeff>(a: &CharElem<T>, b: &CharElem<T>) -> Result<CharElem<T>> {
    if !a.c0.compatible(&b.c0) {
        return Err(Error::Domain(
            "character coefficients have mismatched truncation".into(),
        ));
    }
    let s = |x: &T, y: &T| x.mul(y);
    // chi0 collects: a0 b0 + a1 b1 + a2 b2
    let c0 = s(&a.c0, &b.c0).add(&s(&a.c1, &b.c1)).add(&s(&a.c2, &b.c2));
    // chi1 collects: a0 b1 + a1 b0 + a1 b1 + a1 b2 + a2 b1
    let c1 = s(&a.c0, &b.c1)
        .add(&s(&a.c1, &b.c0))
        .add(&s(&a.c1, &b.c1))
        .add(&s(&a.c1, &b.c2))
        .add(&s(&a.c2, &b.c1));
    // chi2 collects: a0 b2 + a2 b0 + a1 b1
    let c2 = s(&a.c0, &b.c2).add(&s(&a.c2, &b.c0)).add(&s(&a.c1, &b.c1));
    Ok(CharElem { c0, c1, c2 })
}

/// Hilbert series of the secondary generators: the chi0 coefficient of
/// `prod_j (chi0 + (t_j + t_j^2) chi1 + t_j^3 chi2)`, truncated at total
/// degree `trunc`.
pub fn secondary_hilbert(m: usize, trunc: u32) -> TruncatedSeries {
    let one = TruncatedSeries::one(m, trunc);
    let zero = TruncatedSeries::zero(m, trunc);
    let mut acc = CharElem::new(one.clone(), zero.clone(), zero.clone());
    for j in 0..m {
        let tj = TruncatedSeries::monomial(m, trunc, j, 1);
        let tj2 = TruncatedSeries::monomial(m, trunc, j, 2);
        let tj3 = TruncatedSeries::monomial(m, trunc, j, 3);
        let factor = CharElem::new(one.clone(), tj.add(&tj2), tj3);
        acc = char_mul(&acc, &factor).expect("same truncation");
    }
    acc.c0
}

/// Dimension series of the invariant ring: the coefficient at `alpha` is
/// the dimension of the multidegree-`alpha` component, computed by
/// averaging fixed monomials over S_n (independently of the Hironaka
/// factorization).
pub fn molien_hilbert_r(n: usize, m: usize, trunc: u32) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(m, trunc);
    for d in 0..=trunc {
        for alpha in crate::comb::compositions(d, m) {
            let dim = dim_invariant_component(n, m, &alpha) as i64;
            if dim != 0 {
                s.set(alpha, dim);
            }
        }
    }
    s
}

/// The consistency identity for n = 3: the dimension series equals the
/// secondary series divided by `prod_j (1-t_j)(1-t_j^2)(1-t_j^3)`,
/// through total degree `trunc`.
pub fn hironaka_check(m: usize, trunc: u32) -> bool {
    let lhs = molien_hilbert_r(3, m, trunc);
    let mut rhs = secondary_hilbert(m, trunc);
    for j in 0..m {
        for k in 1..=3u32 {
            rhs = rhs.mul_geometric(j, k);
        }
    }
    lhs == rhs
}

/// The graded character of S_3 acting on polynomials in one column of
/// three variables, computed by direct character averaging per degree;
/// validates the closed form
/// `(chi0 + (t + t^2) chi1 + t^3 chi2) / ((1-t)(1-t^2)(1-t^3))`.
pub fn column_character_series(trunc: u32) -> CharElem<TruncatedSeries> {
    // class data for S_3: sizes and character values on
    // (identity, transpositions, 3-cycles)
    let class_sizes = [1i64, 3, 2];
    let chi_values = [[1i64, 1, 1], [2, 0, -1], [1, -1, 1]];
    // monomials of degree k fixed by a class representative
    let fixed = |class: usize, k: u32| -> i64 {
        match class {
            0 => ((k + 1) * (k + 2) / 2) as i64,
            1 => (k / 2 + 1) as i64,
            _ => i64::from(k.is_multiple_of(3)),
        }
    };
    let mut comps = [
        TruncatedSeries::zero(1, trunc),
        TruncatedSeries::zero(1, trunc),
        TruncatedSeries::zero(1, trunc),
    ];
    for k in 0..=trunc {
        for (i, comp) in comps.iter_mut().enumerate() {
            let mut acc = 0i64;
            for class in 0..3 {
                acc += class_sizes[class] * chi_values[i][class] * fixed(class, k);
            }
            debug_assert_eq!(acc % 6, 0);
            comp.set(vec![k], acc / 6);
        }
    }
    let [c0, c1, c2] = comps;
    CharElem::new(c0, c1, c2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(i: usize) -> CharElem<i64> {
        match i {
            0 => CharElem::new(1, 0, 0),
            1 => CharElem::new(0, 1, 0),
            _ => CharElem::new(0, 0, 1),
        }
    }

    #[test]
    fn multiplication_table() {
        let prod = char_mul(&chi(1), &chi(1)).unwrap();
        assert_eq!(prod, CharElem::new(1, 1, 1)); // chi0 + chi1 + chi2
        let prod = char_mul(&chi(2), &chi(2)).unwrap();
        assert_eq!(prod, chi(0));
        let prod = char_mul(&chi(1), &chi(2)).unwrap();
        assert_eq!(prod, chi(1));
        let a = CharElem::new(2, -1, 3);
        assert_eq!(char_mul(&chi(0), &a).unwrap(), a);
    }

    #[test]
    fn table_is_associative_and_commutative() {
        let elems = [chi(0), chi(1), chi(2)];
        for a in &elems {
            for b in &elems {
                assert_eq!(char_mul(a, b).unwrap(), char_mul(b, a).unwrap());
                for c in &elems {
                    let left = char_mul(&char_mul(a, b).unwrap(), c).unwrap();
                    let right = char_mul(a, &char_mul(b, c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn secondary_series_m2() {
        // 1 + tu + t^2 u + t u^2 + t^2 u^2 + t^3 u^3
        let s = secondary_hilbert(2, 6);
        let expected: &[(&[u32], i64)] = &[
            (&[0, 0], 1),
            (&[1, 1], 1),
            (&[2, 1], 1),
            (&[1, 2], 1),
            (&[2, 2], 1),
            (&[3, 3], 1),
        ];
        let mut count = 0;
        for (w, c) in s.terms() {
            let hit = expected.iter().find(|(ew, _)| ew == &w.as_slice());
            assert!(hit.is_some(), "unexpected term {w:?}");
            assert_eq!(*c, hit.unwrap().1);
            count += 1;
        }
        assert_eq!(count, expected.len());
    }

    #[test]
    fn secondary_series_m1_is_one() {
        let s = secondary_hilbert(1, 8);
        assert_eq!(s, TruncatedSeries::one(1, 8));
    }

    #[test]
    fn secondary_counts_match_small_tables() {
        // m=3, multidegree (3,2,1): exactly one secondary generator
        let s = secondary_hilbert(3, 8);
        assert_eq!(s.coeff(&[3, 2, 1]), 1);
        // m=4, multidegree (1,1,1,1): three
        let s4 = secondary_hilbert(4, 6);
        assert_eq!(s4.coeff(&[1, 1, 1, 1]), 3);
    }

    #[test]
    fn molien_coefficients() {
        let s = molien_hilbert_r(3, 2, 4);
        assert_eq!(s.coeff(&[1, 1]), 2);
        assert_eq!(s.coeff(&[0, 0]), 1);
    }

    #[test]
    fn hironaka_identity_small() {
        assert!(hironaka_check(1, 8));
        assert!(hironaka_check(2, 8));
    }

    #[test]
    fn column_character_matches_closed_form() {
        let trunc = 10u32;
        let lhs = column_character_series(trunc);
        // (chi0 + (t + t^2) chi1 + t^3 chi2) * prod_k geom(t^k)
        let t1 = TruncatedSeries::monomial(1, trunc, 0, 1);
        let t2 = TruncatedSeries::monomial(1, trunc, 0, 2);
        let t3 = TruncatedSeries::monomial(1, trunc, 0, 3);
        let mut parts = [TruncatedSeries::one(1, trunc), t1.add(&t2), t3];
        for p in &mut parts {
            for k in 1..=3 {
                *p = p.mul_geometric(0, k);
            }
        }
        let [c0, c1, c2] = parts;
        let rhs = CharElem::new(c0, c1, c2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncation_mismatch_is_an_error() {
        let a = CharElem::new(
            TruncatedSeries::one(1, 4),
            TruncatedSeries::zero(1, 4),
            TruncatedSeries::zero(1, 4),
        );
        let b = CharElem::new(
            TruncatedSeries::one(1, 5),
            TruncatedSeries::zero(1, 5),
            TruncatedSeries::zero(1, 5),
        );
        assert!(char_mul(&a, &b).is_err());
    }

    #[test]
    fn series_render_is_sparse_text() {
        let mut s = TruncatedSeries::zero(2, 4);
        s.set(vec![0, 0], 1);
        s.set(vec![2, 1], 3);
        assert_eq!(s.render(), "1 + 3*t1^2*t2");
    }
}
