//! Constructors for the named kernel elements: the fundamental relations
//! built from set partitions, the bordered-determinant relation of
//! degree 2n and weight (2,...,2), and the two explicit elements of
//! weight (3,2) and (4,2), each available both as the stated combination
//! of fundamental relations and as a literal expansion.

use serde::Serialize;

use crate::comb::set_partitions;
use crate::error::{Error, Result};
use crate::free_algebra::FPoly;
use crate::polycore::{Monomial, TMono, TPoly, TSpace, Weight, Word};
use crate::rational::{rat, rat_int};

/// A set partition of `{1..k}` (0-based internally): pairwise disjoint
/// nonempty blocks covering the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    pub blocks: Vec<Vec<usize>>,
}

/// All distributions of `{1..k}`, each exactly once (Bell-number many),
/// in restricted-growth-string order.
pub fn distributions(k: usize) -> Result<Vec<Distribution>> {
    if k == 0 {
        return Err(Error::Domain("distributions of the empty set".into()));
    }
    Ok(set_partitions(k)
        .into_iter()
        .map(|blocks| Distribution { blocks })
        .collect())
}

/// A named relation: an element of the presentation algebra together
/// with its claimed weight. Elements marked as kernel members vanish
/// under the evaluation map (verified by tests and the CLI, not here).
#[derive(Clone, Debug)]
pub struct RelationRecord {
    pub name: String,
    pub element: FPoly,
    pub weight: Option<Weight>,
}

#[derive(Serialize)]
struct TermJson {
    coeff: String,
    monomial: String,
}

#[derive(Serialize)]
struct RelationJson {
    name: String,
    weight: Option<Weight>,
    terms: Vec<TermJson>,
}

pub const RELATION_SCHEMA: &str = "polysym-relations/1";

impl RelationRecord {
    pub fn to_json(&self) -> serde_json::Value {
        let space = self.element.body().space();
        let terms = self
            .element
            .body()
            .terms_desc()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                monomial: m.render(&space),
            })
            .collect();
        serde_json::to_value(RelationJson {
            name: self.name.clone(),
            weight: self.weight.clone(),
            terms,
        })
        .expect("serializable")
    }
}

/// Versioned JSON catalog of relation records.
pub fn catalog_json(records: &[RelationRecord]) -> serde_json::Value {
    serde_json::json!({
        "schema": RELATION_SCHEMA,
        "relations": records.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    })
}

/// The fundamental relation on `n + 1` words: the sum over set
/// partitions `pi` of `{1..n+1}` of `prod_{blocks} (-1)(|block|-1)! *
/// t(prod of the block's words)`. Lies in the kernel of the evaluation
/// map for `n` rows.
pub fn psi(n: usize, words: &[Word]) -> Result<FPoly> {
    if words.len() != n + 1 {
        return Err(Error::Domain(format!(
            "psi for n = {n} takes {} words, got {}",
            n + 1,
            words.len()
        )));
    }
    if words.iter().any(|w| w.is_zero()) {
        return Err(Error::Domain("psi words must be nonzero".into()));
    }
    let m = words[0].symbols();
    if words.iter().any(|w| w.symbols() != m) {
        return Err(Error::SpaceMismatch(
            "psi words over different symbol sets".into(),
        ));
    }
    let total: u32 = words.iter().map(|w| w.degree()).sum();
    let space = TSpace::new(m, total);
    let mut body = TPoly::zero(space);
    for dist in set_partitions(n + 1) {
        let mut coeff = rat_int(1);
        let mut pairs: Vec<(Word, u32)> = Vec::with_capacity(dist.len());
        for block in &dist {
            let mut prod = words[block[0]].clone();
            for &s in &block[1..] {
                prod = prod.mul(&words[s]);
            }
            let fact: i64 = (1..block.len() as i64).product::<i64>().max(1);
            coeff *= rat_int(-fact);
            pairs.push((prod, 1));
        }
        body.add_term(TMono::from_pairs(pairs)?, coeff);
    }
    Ok(FPoly::from_body(n, body))
}

/// The bordered Gram determinant for `n` rows over `m >= n` symbols:
/// the determinant of the (n+1) x (n+1) matrix with entries `t(x_i x_j)`,
/// border `t(x_i)`, and corner `n`, expanded exactly. Weight (2,...,2).
pub fn gram_relation(n: usize, m: usize) -> Result<RelationRecord> {
    if n < 1 {
        return Err(Error::Domain("gram relation needs n >= 1".into()));
    }
    if m < n {
        return Err(Error::Domain(format!(
            "gram relation for n = {n} needs m >= n, got m = {m}"
        )));
    }
    let space = TSpace::new(m, 2);
    let mut body = TPoly::zero(space);
    let size = n + 1;
    for (perm, sign) in signed_permutations(size) {
        let mut const_factor = rat_int(sign);
        let mut pairs: Vec<(Word, u32)> = Vec::new();
        for (i, &j) in perm.iter().enumerate() {
            if i == n && j == n {
                const_factor *= rat_int(n as i64);
            } else if i == n {
                pairs.push((Word::unit(m, j), 1));
            } else if j == n {
                pairs.push((Word::unit(m, i), 1));
            } else {
                let mut e = vec![0u32; m];
                e[i] += 1;
                e[j] += 1;
                pairs.push((Word::new(e), 1));
            }
        }
        body.add_term(TMono::from_pairs(pairs)?, const_factor);
    }
    let name = format!("J(2^{n})");
    Ok(RelationRecord {
        name,
        element: FPoly::from_body(n, body),
        weight: Some({
            let mut w = vec![0u32; m];
            for e in w.iter_mut().take(n) {
                *e = 2;
            }
            w
        }),
    })
}

fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    crate::comb::permutations(k)
        .into_iter()
        .map(|p| {
            let mut sign = 1i64;
            for a in 0..k {
                for b in a + 1..k {
                    if p[a] > p[b] {
                        sign = -sign;
                    }
                }
            }
            (p, sign)
        })
        .collect()
}

/// Term of an explicit expansion: coefficient and `((ex, ey), power)`
/// factors over the first two symbols.
type ExplicitTerm = (i64, &'static [((u32, u32), u32)]);

fn w2(m: usize, ex: u32, ey: u32) -> Word {
    let mut e = vec![0u32; m];
    e[0] = ex;
    e[1] = ey;
    Word::new(e)
}

/// The weight-(3,2) kernel element as the stated combination of
/// fundamental relations; all index words of degree > 3 cancel.
pub fn j32_from_psi(m: usize) -> Result<FPoly> {
    if m < 2 {
        return Err(Error::Domain("weight (3,2) needs m >= 2".into()));
    }
    let x = w2(m, 1, 0);
    let y = w2(m, 0, 1);
    let xy = w2(m, 1, 1);
    let y2 = w2(m, 0, 2);
    let cap = 6u32;
    let up = |p: FPoly| p.with_cap(cap).expect("raising cap");
    let t = |w: &Word| FPoly::t(3, m, cap, w.clone()).expect("cap 6 admits the word");

    let a = up(psi(3, &[xy.clone(), x.clone(), x.clone(), y.clone()])?);
    let b = up(psi(3, &[x.clone(), x.clone(), x.clone(), y2.clone()])?);
    let c = up(psi(3, &[x.clone(), x.clone(), x.clone(), y.clone()])?).mul(&t(&y))?;
    let d = up(psi(3, &[x.clone(), x.clone(), y.clone(), y.clone()])?).mul(&t(&x))?;
    let sum = a
        .scale(&rat_int(3))
        .sub(&b.scale(&rat_int(3)))?
        .add(&c)?
        .sub(&d)?
        .scale(&rat(1, 2));
    sum.with_cap(3)
}

/// The weight-(3,2) element as its literal 11-term expansion.
pub fn j32_explicit(m: usize) -> Result<FPoly> {
    if m < 2 {
        return Err(Error::Domain("weight (3,2) needs m >= 2".into()));
    }
    // (coeff, [(word, exp)...]) with words as (ex, ey)
    let terms: [ExplicitTerm; 11] = [
        (6, &[((2, 1), 1), ((1, 1), 1)]),
        (-3, &[((1, 2), 1), ((2, 0), 1)]),
        (-2, &[((2, 1), 1), ((1, 0), 1), ((0, 1), 1)]),
        (1, &[((1, 2), 1), ((1, 0), 2)]),
        (-4, &[((1, 1), 2), ((1, 0), 1)]),
        (2, &[((1, 1), 1), ((1, 0), 2), ((0, 1), 1)]),
        (-3, &[((3, 0), 1), ((0, 2), 1)]),
        (4, &[((2, 0), 1), ((1, 0), 1), ((0, 2), 1)]),
        (-1, &[((1, 0), 3), ((0, 2), 1)]),
        (1, &[((3, 0), 1), ((0, 1), 2)]),
        (-1, &[((2, 0), 1), ((1, 0), 1), ((0, 1), 2)]),
    ];
    explicit_element(m, &terms)
}

/// The weight-(4,2) kernel element as the stated combination of
/// fundamental relations.
pub fn j42_from_psi(m: usize) -> Result<FPoly> {
    if m < 2 {
        return Err(Error::Domain("weight (4,2) needs m >= 2".into()));
    }
    let x = w2(m, 1, 0);
    let x2 = w2(m, 2, 0);
    let y = w2(m, 0, 1);
    let xy = w2(m, 1, 1);
    let y2 = w2(m, 0, 2);
    let xy2 = w2(m, 1, 2);
    let cap = 7u32;
    let up = |p: FPoly| p.with_cap(cap).expect("raising cap");
    let t = |w: &Word| FPoly::t(3, m, cap, w.clone()).expect("cap 7 admits the word");

    let a = up(psi(3, &[xy.clone(), xy.clone(), x.clone(), x.clone()])?);
    let b = up(psi(3, &[x.clone(), x.clone(), x.clone(), xy2.clone()])?);
    let c = up(psi(3, &[x.clone(), x.clone(), x.clone(), y.clone()])?).mul(&t(&xy))?;
    let d = up(psi(3, &[x.clone(), x.clone(), y.clone(), y.clone()])?).mul(&t(&x2))?;
    let e = up(psi(3, &[x.clone(), x.clone(), x.clone(), y2.clone()])?).mul(&t(&x))?;
    let sum = a
        .scale(&rat_int(3))
        .sub(&b.scale(&rat_int(3)))?
        .add(&c.scale(&rat_int(2)))?
        .sub(&d)?
        .sub(&e)?;
    sum.with_cap(3)
}

/// The weight-(4,2) element as its literal 15-term expansion.
pub fn j42_explicit(m: usize) -> Result<FPoly> {
    if m < 2 {
        return Err(Error::Domain("weight (4,2) needs m >= 2".into()));
    }
    let terms: [ExplicitTerm; 15] = [
        (6, &[((2, 1), 2)]),
        (1, &[((1, 1), 2), ((2, 0), 1)]),
        (-3, &[((1, 1), 2), ((1, 0), 2)]),
        (-6, &[((3, 0), 1), ((1, 2), 1)]),
        (2, &[((2, 0), 1), ((1, 2), 1), ((1, 0), 1)]),
        (4, &[((3, 0), 1), ((1, 1), 1), ((0, 1), 1)]),
        (-2, &[((2, 0), 1), ((1, 1), 1), ((1, 0), 1), ((0, 1), 1)]),
        (2, &[((1, 1), 1), ((1, 0), 3), ((0, 1), 1)]),
        (-4, &[((2, 1), 1), ((2, 0), 1), ((0, 1), 1)]),
        (-1, &[((2, 0), 2), ((0, 2), 1)]),
        (1, &[((2, 0), 2), ((0, 1), 2)]),
        (4, &[((2, 0), 1), ((1, 0), 2), ((0, 2), 1)]),
        (-1, &[((2, 0), 1), ((1, 0), 2), ((0, 1), 2)]),
        (-1, &[((1, 0), 4), ((0, 2), 1)]),
        (-2, &[((3, 0), 1), ((1, 0), 1), ((0, 2), 1)]),
    ];
    explicit_element(m, &terms)
}

fn explicit_element(m: usize, terms: &[ExplicitTerm]) -> Result<FPoly> {
    let space = TSpace::new(m, 3);
    let mut body = TPoly::zero(space);
    for &(c, factors) in terms {
        let pairs: Vec<(Word, u32)> = factors
            .iter()
            .map(|&((ex, ey), e)| (w2(m, ex, ey), e))
            .collect();
        body.add_term(TMono::from_pairs(pairs)?, rat_int(c));
    }
    Ok(FPoly::from_body(3, body))
}

/// The weight-(3,2) relation record (literal expansion form).
pub fn j32(m: usize) -> Result<RelationRecord> {
    let mut weight = vec![0u32; m];
    weight[0] = 3;
    weight[1] = 2;
    Ok(RelationRecord {
        name: "J(3,2)".into(),
        element: j32_explicit(m)?,
        weight: Some(weight),
    })
}

/// The weight-(4,2) relation record (literal expansion form).
pub fn j42(m: usize) -> Result<RelationRecord> {
    let mut weight = vec![0u32; m];
    weight[0] = 4;
    weight[1] = 2;
    Ok(RelationRecord {
        name: "J(4,2)".into(),
        element: j42_explicit(m)?,
        weight: Some(weight),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::{gl_derivation, is_highest_weight, phi_eval};

    fn word(m: usize, e: &[u32]) -> Word {
        let mut v = e.to_vec();
        v.resize(m, 0);
        Word::new(v)
    }

    #[test]
    fn distribution_counts_are_bell_numbers() {
        assert_eq!(distributions(1).unwrap().len(), 1);
        assert_eq!(distributions(4).unwrap().len(), 15);
        assert_eq!(distributions(5).unwrap().len(), 52);
    }

    #[test]
    fn psi_coefficient_pattern_by_block_class() {
        // four distinct degree-1 words over m = 4
        let m = 4;
        let ws: Vec<Word> = (0..4).map(|j| Word::unit(m, j)).collect();
        let p = psi(3, &ws).unwrap();
        assert_eq!(p.body().term_count(), 15);
        let coeff_of = |pairs: Vec<(Word, u32)>| p.body().coeff(&TMono::from_pairs(pairs).unwrap());
        // one block of size 4
        assert_eq!(coeff_of(vec![(word(m, &[1, 1, 1, 1]), 1)]), rat_int(-6));
        // 3 + 1
        assert_eq!(
            coeff_of(vec![(word(m, &[1, 1, 1, 0]), 1), (Word::unit(m, 3), 1)]),
            rat_int(2)
        );
        // 2 + 2
        assert_eq!(
            coeff_of(vec![
                (word(m, &[1, 1, 0, 0]), 1),
                (word(m, &[0, 0, 1, 1]), 1)
            ]),
            rat_int(1)
        );
        // 2 + 1 + 1
        assert_eq!(
            coeff_of(vec![
                (word(m, &[1, 1, 0, 0]), 1),
                (Word::unit(m, 2), 1),
                (Word::unit(m, 3), 1)
            ]),
            rat_int(-1)
        );
        // 1 + 1 + 1 + 1
        assert_eq!(
            coeff_of((0..4).map(|j| (Word::unit(m, j), 1)).collect()),
            rat_int(1)
        );
    }

    #[test]
    fn phi_kills_psi() {
        // phi(Psi(x,x,y,y)) = 0 for n = 3, m = 2
        let m = 2;
        let x = Word::unit(m, 0);
        let y = Word::unit(m, 1);
        let p = psi(3, &[x.clone(), x.clone(), y.clone(), y.clone()]).unwrap();
        assert!(phi_eval(&p).unwrap().is_zero());

        // and for a few n = 2, 4 instances
        let p2 = psi(2, &[x.clone(), x.clone(), y.clone()]).unwrap();
        assert!(phi_eval(&p2).unwrap().is_zero());
        let xy = word(2, &[1, 1]);
        let p4 = psi(4, &[x.clone(), xy.clone(), y.clone(), y.clone(), x.clone()]).unwrap();
        assert!(phi_eval(&p4).unwrap().is_zero());
    }

    #[test]
    fn gram_n1_is_newton_defect() {
        // det [[t(x^2), t(x)], [t(x), 1]] = t(x^2) - t(x)^2
        let r = gram_relation(1, 1).unwrap();
        let t_x2 = FPoly::t(1, 1, 2, Word::new(vec![2])).unwrap();
        let t_x = FPoly::t(1, 1, 2, Word::new(vec![1])).unwrap();
        let expected = t_x2.sub(&t_x.mul(&t_x).unwrap()).unwrap();
        assert_eq!(r.element, expected);
        assert!(phi_eval(&r.element).unwrap().is_zero());
    }

    #[test]
    fn gram_kernel_and_highest_weight() {
        for n in 2..=4usize {
            let r = gram_relation(n, n).unwrap();
            assert!(
                phi_eval(&r.element).unwrap().is_zero(),
                "phi(J) != 0 for n = {n}"
            );
            let (hwv, w) = is_highest_weight(&r.element).unwrap();
            assert!(hwv);
            assert_eq!(w, r.weight);
            // killed by every raising operator
            for i in 0..n - 1 {
                assert!(gl_derivation(i, i + 1, &r.element).unwrap().is_zero());
            }
        }
        assert!(gram_relation(3, 2).is_err());
    }

    #[test]
    fn derivation_of_determinant_expands_by_rows() {
        // e_{ij} det(M) equals the sum over rows of the determinant with
        // that row replaced by its entrywise image (multilinearity)
        for n in 2..=3usize {
            let m = n;
            let record = gram_relation(n, m).unwrap();
            let size = n + 1;
            let cap = 2u32;
            let entry = |r: usize, c: usize| -> FPoly {
                if r == n && c == n {
                    FPoly::constant(n, m, cap, rat_int(n as i64))
                } else if r == n {
                    FPoly::t(n, m, cap, Word::unit(m, c)).unwrap()
                } else if c == n {
                    FPoly::t(n, m, cap, Word::unit(m, r)).unwrap()
                } else {
                    let mut e = vec![0u32; m];
                    e[r] += 1;
                    e[c] += 1;
                    FPoly::t(n, m, cap, Word::new(e)).unwrap()
                }
            };
            let det_with_row = |row: usize, i: usize, j: usize| -> FPoly {
                let mut acc = FPoly::zero(n, m, cap);
                for perm in crate::comb::permutations(size) {
                    let mut sign = 1i64;
                    for a in 0..size {
                        for b in a + 1..size {
                            if perm[a] > perm[b] {
                                sign = -sign;
                            }
                        }
                    }
                    let mut prod = FPoly::constant(n, m, cap, rat_int(sign));
                    for (r, &c) in perm.iter().enumerate() {
                        let e = if r == row {
                            gl_derivation(i, j, &entry(r, c)).unwrap()
                        } else {
                            entry(r, c)
                        };
                        prod = prod.mul(&e).unwrap();
                    }
                    acc = acc.add(&prod).unwrap();
                }
                acc
            };
            for (i, j) in [(0usize, 1usize), (1, 0)] {
                let lhs = gl_derivation(i, j, &record.element).unwrap();
                let mut rhs = FPoly::zero(n, m, cap);
                for row in 0..size {
                    rhs = rhs.add(&det_with_row(row, i, j)).unwrap();
                }
                assert_eq!(lhs, rhs, "n = {n}, operator ({i},{j})");
            }
        }
    }

    #[test]
    fn gram_triangle_coefficient_golden() {
        // raw determinant expansion for n = 3: the triangle monomial
        // t(xy) t(xz) t(yz) carries coefficient 6 (both 3-cycles of the
        // top-left block contribute +3 through the corner entry)
        let r = gram_relation(3, 3).unwrap();
        let pair = |a: usize, b: usize| {
            let mut e = vec![0u32; 3];
            e[a] += 1;
            e[b] += 1;
            Word::new(e)
        };
        let mono =
            TMono::from_pairs(vec![(pair(0, 1), 1), (pair(0, 2), 1), (pair(1, 2), 1)]).unwrap();
        assert_eq!(r.element.body().coeff(&mono), rat_int(6));
    }

    #[test]
    fn j42_leading_square_term() {
        // 6 t(x^2 y)^2 is present, so the element survives modulo
        // degree-one multiples of the degree-5 kernel
        let r = j42(2).unwrap();
        let mono = TMono::from_pairs(vec![(Word::new(vec![2, 1]), 2)]).unwrap();
        assert_eq!(r.element.body().coeff(&mono), rat_int(6));
    }

    #[test]
    fn j32_forms_agree_and_vanish() {
        for m in 2..=3usize {
            let a = j32_from_psi(m).unwrap();
            let b = j32_explicit(m).unwrap();
            assert_eq!(a, b, "forms differ at m = {m}");
            assert!(phi_eval(&b).unwrap().is_zero());
            let (hwv, w) = is_highest_weight(&b).unwrap();
            assert!(hwv);
            let mut expect = vec![0u32; m];
            expect[0] = 3;
            expect[1] = 2;
            assert_eq!(w, Some(expect));
        }
    }

    #[test]
    fn j42_forms_agree_and_vanish() {
        for m in 2..=3usize {
            let a = j42_from_psi(m).unwrap();
            let b = j42_explicit(m).unwrap();
            assert_eq!(a, b, "forms differ at m = {m}");
            assert!(phi_eval(&b).unwrap().is_zero());
            let (hwv, w) = is_highest_weight(&b).unwrap();
            assert!(hwv);
            let mut expect = vec![0u32; m];
            expect[0] = 4;
            expect[1] = 2;
            assert_eq!(w, Some(expect));
        }
    }

    #[test]
    fn catalog_serializes_deterministically() {
        let records = vec![j32(2).unwrap(), j42(2).unwrap()];
        let v = catalog_json(&records);
        assert_eq!(v["schema"], RELATION_SCHEMA);
        let s1 = serde_json::to_string(&v).unwrap();
        let s2 = serde_json::to_string(&catalog_json(&records)).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(v["relations"][0]["weight"], serde_json::json!([3, 2]));
    }
}
