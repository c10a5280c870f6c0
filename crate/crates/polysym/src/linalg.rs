//! Exact linear algebra over the rationals.
//!
//! Batch elimination uses fraction-free (Bareiss) Gaussian elimination on
//! integer rows (rows are scaled by their denominator lcm first, which
//! changes neither row space nor nullspace). Pivoting is deterministic:
//! columns are processed left to right — callers order columns by the
//! monomial order — and the first row with a nonzero entry is chosen.
//!
//! Incremental rank growth (orbit closures, generation spans) is handled
//! by [`PolySpan`], which keeps a monic, inter-reduced basis of sparse
//! polynomials keyed by leading monomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::polycore::{Monomial, SparsePoly};
use crate::rational::{denominator_lcm, Rational};

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        QMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let r = self.row(i);
                let l = denominator_lcm(r);
                r.iter().map(|v| v.numer() * (&l / v.denom())).collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_integer_rows();
        fraction_free_echelon(&mut rows, self.cols).len()
    }

    /// Basis of `{ x : A x = 0 }`, one vector per free column, in column
    /// order. Exact, deterministic.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut rows = self.to_integer_rows();
        let pivots = fraction_free_echelon(&mut rows, self.cols);
        nullspace_from_echelon(&rows, self.cols, &pivots)
    }
}

/// In-place fraction-free row echelon form. Returns the pivot columns;
/// `rows[k]` holds the k-th pivot row afterwards. Entries stay integral:
/// each update divides exactly by the previous pivot (Bareiss).
#[allow(clippy::needless_range_loop)]
pub fn fraction_free_echelon(rows: &mut Vec<Vec<BigInt>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev_pivot = BigInt::from(1);
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() && pivot.is_zero() {
                continue;
            }
            let head = rows[r][col].clone();
            for c in col..cols {
                let v = &pivot * &rows[r][c] - &head * &rows[rank][c];
                debug_assert!((&v % &prev_pivot).is_zero());
                rows[r][c] = v / &prev_pivot;
            }
        }
        prev_pivot = pivot;
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

fn nullspace_from_echelon(
    rows: &[Vec<BigInt>],
    cols: usize,
    pivots: &[usize],
) -> Vec<Vec<Rational>> {
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut x = vec![Rational::zero(); cols];
        x[fc] = Rational::from_integer(1.into());
        // back-substitute pivot variables from the bottom up
        for (k, &pc) in pivots.iter().enumerate().rev() {
            let mut s = Rational::zero();
            for c in pc + 1..cols {
                if !rows[k][c].is_zero() && !x[c].is_zero() {
                    s += Rational::from_integer(rows[k][c].clone()) * &x[c];
                }
            }
            if s.is_zero() {
                x[pc] = Rational::zero();
            } else {
                x[pc] = -s / Rational::from_integer(rows[k][pc].clone());
            }
        }
        basis.push(x);
    }
    basis
}

/// Solve `x . A = target` for `x` (a combination of the rows of `A`),
/// or return `None` when the target is outside the row space.
#[allow(clippy::needless_range_loop)]
pub fn solve_in_rowspace(rows: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let n = rows.len();
    let cols = target.len();
    // Transposed augmented system: columns of A^T are the rows of A.
    // Gauss-Jordan over Q, first-nonzero pivoting, left-to-right.
    let mut aug: Vec<Vec<Rational>> = (0..cols)
        .map(|c| {
            let mut row: Vec<Rational> = rows.iter().map(|r| r[c].clone()).collect();
            row.push(target[c].clone());
            row
        })
        .collect();
    let width = n + 1;
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0usize;
    for col in 0..n {
        let Some(pr) = (rank..aug.len()).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(rank, pr);
        let inv = aug[rank][col].clone();
        for c in col..width {
            let v = &aug[rank][c] / &inv;
            aug[rank][c] = v;
        }
        for r in 0..aug.len() {
            if r != rank && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..width {
                    let v = &aug[r][c] - &(&f * &aug[rank][c]);
                    aug[r][c] = v;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    // Inconsistent iff some zero row has nonzero rhs.
    for r in rank..aug.len() {
        if !aug[r][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); n];
    for &(r, c) in &pivots {
        x[c] = aug[r][n].clone();
    }
    Some(x)
}

/// Incrementally maintained linear span of sparse polynomials.
///
/// The basis is kept monic and inter-reduced with pairwise distinct
/// leading monomials, so membership reduction is a linear pass over the
/// basis. Optionally tracks, for every basis row, its expression as a
/// combination of the inserted generators (used for certificates).
pub struct PolySpan<M: Monomial> {
    by_leading: BTreeMap<M, usize>,
    basis: Vec<SparsePoly<M>>,
    expr: Option<Vec<Vec<(usize, Rational)>>>,
    inserted: usize,
}

impl<M: Monomial> PolySpan<M> {
    pub fn new() -> Self {
        PolySpan {
            by_leading: BTreeMap::new(),
            basis: Vec::new(),
            expr: None,
            inserted: 0,
        }
    }

    /// A span that remembers how each basis row combines the inserted
    /// generators.
    pub fn with_tracking() -> Self {
        let mut s = Self::new();
        s.expr = Some(Vec::new());
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparsePoly<M>] {
        &self.basis
    }

    /// Reduce `p` modulo the span. Returns the residue, and when tracking
    /// is on, the combination of inserted generators that was subtracted.
    pub fn reduce(&self, p: &SparsePoly<M>) -> (SparsePoly<M>, Vec<(usize, Rational)>) {
        let mut r = p.clone();
        let mut used: BTreeMap<usize, Rational> = BTreeMap::new();
        loop {
            let hit = r
                .terms_desc()
                .find_map(|(m, c)| self.by_leading.get(m).map(|&i| (i, c.clone())));
            let Some((i, c)) = hit else { break };
            r = &r - &self.basis[i].scale(&c);
            if let Some(expr) = &self.expr {
                for (g, f) in &expr[i] {
                    let v = used.entry(*g).or_insert_with(Rational::zero);
                    *v += &c * f;
                }
            }
        }
        used.retain(|_, v| !v.is_zero());
        (r, used.into_iter().collect())
    }

    /// Insert a polynomial; returns `true` when it enlarged the span.
    pub fn insert(&mut self, p: &SparsePoly<M>) -> bool {
        let gen_index = self.inserted;
        self.inserted += 1;
        let (mut r, used) = self.reduce(p);
        if r.is_zero() {
            return false;
        }
        let lead = r.leading().expect("nonzero").1.clone();
        r = r.monic();
        let mut comb: Vec<(usize, Rational)> = Vec::new();
        if self.expr.is_some() {
            // r = (p - sum used_g . g) / lead
            comb.push((gen_index, Rational::from_integer(1.into()) / &lead));
            for (g, c) in used {
                comb.push((g, -c / &lead));
            }
            comb.sort_by_key(|&(g, _)| g);
        }
        // inter-reduce existing rows against the new one
        let lm = r.leading().unwrap().0.clone();
        for i in 0..self.basis.len() {
            let c = self.basis[i].coeff(&lm);
            if !c.is_zero() {
                self.basis[i] = &self.basis[i] - &r.scale(&c);
                if let Some(expr) = &mut self.expr {
                    let mut e: BTreeMap<usize, Rational> = expr[i].iter().cloned().collect();
                    for (g, f) in &comb {
                        let v = e.entry(*g).or_insert_with(Rational::zero);
                        *v -= &c * f;
                    }
                    e.retain(|_, v| !v.is_zero());
                    expr[i] = e.into_iter().collect();
                }
            }
        }
        self.by_leading.insert(lm, self.basis.len());
        self.basis.push(r);
        if let Some(expr) = &mut self.expr {
            expr.push(comb);
        }
        true
    }

    /// True when `p` already lies in the span.
    pub fn contains(&self, p: &SparsePoly<M>) -> bool {
        self.reduce(p).0.is_zero()
    }

    /// Expression of `p` in terms of the inserted generators, if `p` is in
    /// the span and tracking is on.
    pub fn express(&self, p: &SparsePoly<M>) -> Option<Vec<(usize, Rational)>> {
        assert!(self.expr.is_some(), "span built without tracking");
        let (r, used) = self.reduce(p);
        if r.is_zero() {
            Some(used)
        } else {
            None
        }
    }
}

impl<M: Monomial> Default for PolySpan<M> {
    fn default() -> Self {
        Self::new()
    }
}

/// Incrementally maintained span of dense coordinate vectors, kept in
/// reduced echelon form with monic pivots. Columns are expected in
/// decreasing monomial order, so the deterministic pivot rule (first
/// nonzero column, first arriving row) is pivoting by monomial order.
/// Optional generator tracking mirrors [`PolySpan`].
pub struct VecSpan {
    cols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    expr: Option<Vec<Vec<(usize, Rational)>>>,
    inserted: usize,
}

impl VecSpan {
    pub fn new(cols: usize) -> Self {
        VecSpan {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            expr: None,
            inserted: 0,
        }
    }

    pub fn with_tracking(cols: usize) -> Self {
        let mut s = Self::new(cols);
        s.expr = Some(Vec::new());
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Residue of `v` modulo the span plus, when tracking, the
    /// combination of inserted generators that was subtracted.
    pub fn reduce(&self, v: &[Rational]) -> (Vec<Rational>, Vec<(usize, Rational)>) {
        assert_eq!(v.len(), self.cols);
        let mut r = v.to_vec();
        let mut used: BTreeMap<usize, Rational> = BTreeMap::new();
        for (idx, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
            if let Some(expr) = &self.expr {
                for (g, f) in &expr[idx] {
                    let e = used.entry(*g).or_insert_with(Rational::zero);
                    *e += &c * f;
                }
            }
        }
        used.retain(|_, c| !c.is_zero());
        (r, used.into_iter().collect())
    }

    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let gen_index = self.inserted;
        self.inserted += 1;
        let (mut r, used) = self.reduce(v);
        let Some(p) = r.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let lead = r[p].clone();
        for c in r.iter_mut() {
            if !c.is_zero() {
                *c /= &lead;
            }
        }
        let mut comb: Vec<(usize, Rational)> = Vec::new();
        if self.expr.is_some() {
            comb.push((gen_index, Rational::from_integer(1.into()) / &lead));
            for (g, c) in used {
                comb.push((g, -c / &lead));
            }
            comb.sort_by_key(|&(g, _)| g);
        }
        // inter-reduce older rows against the new pivot
        for i in 0..self.rows.len() {
            let c = self.rows[i][p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in self.rows[i].iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
            if let Some(expr) = &mut self.expr {
                let mut e: BTreeMap<usize, Rational> = expr[i].iter().cloned().collect();
                for (g, f) in &comb {
                    let v = e.entry(*g).or_insert_with(Rational::zero);
                    *v -= &c * f;
                }
                e.retain(|_, v| !v.is_zero());
                expr[i] = e.into_iter().collect();
            }
        }
        // keep rows sorted by pivot column
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        if let Some(expr) = &mut self.expr {
            expr.insert(at, comb);
        }
        true
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).0.iter().all(|c| c.is_zero())
    }

    pub fn express(&self, v: &[Rational]) -> Option<Vec<(usize, Rational)>> {
        assert!(self.expr.is_some(), "span built without tracking");
        let (r, used) = self.reduce(v);
        if r.iter().all(|c| c.is_zero()) {
            Some(used)
        } else {
            None
        }
    }
}
