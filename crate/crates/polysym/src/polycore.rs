//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Two variable spaces are supported:
//!
//! * **x-space**: the coordinate ring of `n x m` matrices, variables
//!   `x[i][j]` (row `i = 1..n`, column `j = 1..m`).
//! * **t-space**: polynomial algebra on abstract variables `t(w)`, one for
//!   each monomial `w` of degree `1..=cap` in `m` commuting symbols.
//!
//! Monomial order is graded lexicographic: on x-space with
//! `x[1][1] > x[1][2] > ... > x[1][m] > x[2][1] > ...`; on t-space the
//! t-variables are ordered by the graded-lex order of their index words
//! (larger word = larger variable) and t-monomials are graded by total
//! weight, then compared lexicographically over that variable order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Column-degree / weight vector: one entry per symbol.
pub type Weight = Vec<u32>;

pub fn weight_total(w: &[u32]) -> u32 {
    w.iter().sum()
}

// ---------------------------------------------------------------------------
// Words: monomials in the m symbols x_1..x_m, the indices of t-variables.
// ---------------------------------------------------------------------------

/// A monomial in the `m` symbols, stored as its exponent vector.
/// Words index t-variables and encode multidegrees of power sums.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(exps: Vec<u32>) -> Self {
        Word(exps)
    }

    /// The `j`-th unit word `x_j` (0-based), over `m` symbols.
    pub fn unit(m: usize, j: usize) -> Self {
        let mut e = vec![0; m];
        e[j] = 1;
        Word(e)
    }

    /// `x_j^k` over `m` symbols.
    pub fn power(m: usize, j: usize, k: u32) -> Self {
        let mut e = vec![0; m];
        e[j] = k;
        Word(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn symbols(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of two words over the same symbol set.
    pub fn mul(&self, other: &Word) -> Word {
        debug_assert_eq!(self.0.len(), other.0.len());
        Word(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// True if the word is a pure power of a single symbol.
    pub fn is_pure_power(&self) -> bool {
        self.0.iter().filter(|&&e| e > 0).count() == 1
    }

    /// Reinterpret over a larger symbol set, padding with zeros.
    pub fn extend_symbols(&self, m: usize) -> Word {
        assert!(m >= self.0.len());
        let mut e = self.0.clone();
        e.resize(m, 0);
        Word(e)
    }
}

// Graded lex: higher total degree first, then larger exponent on x_1, etc.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

const SYMBOL_ALIASES: [&str; 4] = ["x", "y", "z", "w"];

/// Render a word in the symbols x_1..x_m, using the aliases x, y, z, w
/// when m <= 4 (the notation of the tables for small m).
pub fn word_text(w: &Word) -> String {
    if w.is_zero() {
        return "1".to_string();
    }
    let m = w.symbols();
    let mut s = String::new();
    for (j, &e) in w.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if m <= 4 {
            s.push_str(SYMBOL_ALIASES[j]);
        } else {
            s.push_str(&format!("x{}", j + 1));
        }
        if e > 1 {
            s.push_str(&format!("^{e}"));
        }
    }
    s
}

/// Parse a word like `x^2y`, `x2y`, `xy`, or `x1^2x2` over `m` symbols.
/// Accepts the x,y,z,w aliases only when `m <= 4`.
pub fn parse_word(s: &str, m: usize) -> Result<Word> {
    let mut exps = vec![0u32; m];
    let bytes: Vec<char> = s.trim().chars().filter(|c| *c != '*').collect();
    let mut i = 0;
    if bytes.is_empty() {
        return Err(Error::Domain(format!("empty word {s:?}")));
    }
    while i < bytes.len() {
        let c = bytes[i];
        let j = if c == 'x' && i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() && m > 4 {
            // xN form
            i += 1;
            let mut idx = 0usize;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                idx = idx * 10 + bytes[i].to_digit(10).unwrap() as usize;
                i += 1;
            }
            if idx == 0 || idx > m {
                return Err(Error::Domain(format!(
                    "symbol x{idx} out of range in {s:?}"
                )));
            }
            i -= 1; // compensate the i += 1 below
            idx - 1
        } else {
            match SYMBOL_ALIASES.iter().position(|&a| a == c.to_string()) {
                Some(j) if j < m => j,
                _ => return Err(Error::Domain(format!("unknown symbol {c:?} in word {s:?}"))),
            }
        };
        i += 1;
        let mut e = 1u32;
        if i < bytes.len() && (bytes[i] == '^' || bytes[i].is_ascii_digit()) {
            if bytes[i] == '^' {
                i += 1;
            }
            let mut v = 0u32;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                v = v * 10 + bytes[i].to_digit(10).unwrap();
                i += 1;
            }
            if i == start {
                return Err(Error::Domain(format!("missing exponent in word {s:?}")));
            }
            e = v;
        }
        exps[j] += e;
    }
    let w = Word(exps);
    if w.is_zero() {
        return Err(Error::Domain(format!("word {s:?} has degree 0")));
    }
    Ok(w)
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", word_text(self))
    }
}

// ---------------------------------------------------------------------------
// Monomial trait and the two concrete monomial types.
// ---------------------------------------------------------------------------

/// A monomial in some variable space. `Ord` must be a graded
/// lexicographic order so leading terms are well defined.
pub trait Monomial: Clone + Ord + Hash + fmt::Debug {
    type Space: Copy + Eq + fmt::Debug;

    fn one() -> Self;
    fn is_one(&self) -> bool;
    /// Degree with respect to the grading used by the order.
    fn degree(&self) -> u32;
    fn mul(&self, other: &Self) -> Self;
    /// Whether the monomial is admissible in the given space.
    fn fits(&self, space: &Self::Space) -> bool;
    /// Multidegree (column-degree vector resp. weight).
    fn weight(&self, space: &Self::Space) -> Weight;
    fn render(&self, space: &Self::Space) -> String;
}

/// The x-variable space: coordinate ring of `rows x cols` matrices.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct XSpace {
    pub rows: usize,
    pub cols: usize,
}

impl XSpace {
    pub fn new(rows: usize, cols: usize) -> Self {
        XSpace { rows, cols }
    }

    pub fn var_count(&self) -> usize {
        self.rows * self.cols
    }

    /// Flat index of `x[i][j]` (0-based row and column).
    pub fn flat(&self, i: usize, j: usize) -> usize {
        i * self.cols + j
    }
}

/// x-space monomial: sorted sparse list of `(flat index, exponent)`.
/// Flat index order is the variable priority order `x[1][1] > x[1][2] > ...`
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct XMono {
    factors: Vec<(u32, u32)>,
}

impl XMono {
    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_unstable_by_key(|&(v, _)| v);
        for w in pairs.windows(2) {
            assert!(w[0].0 < w[1].0, "duplicate variable in monomial");
        }
        XMono { factors: pairs }
    }

    pub fn var(flat: usize) -> Self {
        XMono {
            factors: vec![(flat as u32, 1)],
        }
    }

    /// From a dense exponent row of length rows*cols.
    pub fn from_dense(exps: &[u32]) -> Self {
        XMono {
            factors: exps
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(v, &e)| (v as u32, e))
                .collect(),
        }
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn exponent(&self, flat: usize) -> u32 {
        self.factors
            .iter()
            .find(|&&(v, _)| v as usize == flat)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    /// Apply a row permutation: variable `x[i][j] -> x[perm[i]][j]`.
    pub fn permute_rows(&self, space: &XSpace, perm: &[usize]) -> XMono {
        let pairs = self
            .factors
            .iter()
            .map(|&(v, e)| {
                let i = v as usize / space.cols;
                let j = v as usize % space.cols;
                (space.flat(perm[i], j) as u32, e)
            })
            .collect();
        XMono::from_pairs(pairs)
    }

    /// Apply a column permutation: variable `x[i][j] -> x[i][perm[j]]`.
    pub fn permute_cols(&self, space: &XSpace, perm: &[usize]) -> XMono {
        let pairs = self
            .factors
            .iter()
            .map(|&(v, e)| {
                let i = v as usize / space.cols;
                let j = v as usize % space.cols;
                (space.flat(i, perm[j]) as u32, e)
            })
            .collect();
        XMono::from_pairs(pairs)
    }
}

impl Monomial for XMono {
    type Space = XSpace;

    fn one() -> Self {
        XMono { factors: vec![] }
    }

    fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (
            self.factors.iter().peekable(),
            other.factors.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    out.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    out.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        XMono { factors: out }
    }

    fn fits(&self, space: &Self::Space) -> bool {
        self.factors
            .iter()
            .all(|&(v, _)| (v as usize) < space.var_count())
    }

    fn weight(&self, space: &Self::Space) -> Weight {
        let mut w = vec![0u32; space.cols];
        for &(v, e) in &self.factors {
            w[v as usize % space.cols] += e;
        }
        w
    }

    fn render(&self, space: &Self::Space) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|&(v, e)| {
                let i = v as usize / space.cols + 1;
                let j = v as usize % space.cols + 1;
                if e == 1 {
                    format!("x[{i}][{j}]")
                } else {
                    format!("x[{i}][{j}]^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

// Graded lex, priority x[1][1] > x[1][2] > ... : lower flat index first.
impl Ord for XMono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.factors.iter(), other.factors.iter());
        loop {
            match (a.next(), b.next()) {
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // the one holding the higher-priority (smaller index)
                        // variable is larger
                        return vb.cmp(&va);
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for XMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The t-variable space: `m` symbols, index words of degree `1..=cap`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct TSpace {
    pub syms: usize,
    pub cap: u32,
}

impl TSpace {
    pub fn new(syms: usize, cap: u32) -> Self {
        TSpace { syms, cap }
    }
}

/// t-space monomial: factors `(word, exponent)` sorted by descending word.
/// Graded by total weight `sum(e * deg w)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TMono {
    factors: Vec<(Word, u32)>,
}

impl TMono {
    /// Single variable `t(w)`. The word must have degree >= 1: `t(1)` is
    /// not a variable of the algebra.
    pub fn var(w: Word) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::Domain(
                "t(1) is forbidden: words must have degree >= 1".into(),
            ));
        }
        Ok(TMono {
            factors: vec![(w, 1)],
        })
    }

    pub fn from_pairs(mut pairs: Vec<(Word, u32)>) -> Result<Self> {
        pairs.retain(|(_, e)| *e > 0);
        if pairs.iter().any(|(w, _)| w.is_zero()) {
            return Err(Error::Domain(
                "t(1) is forbidden: words must have degree >= 1".into(),
            ));
        }
        pairs.sort_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(Word, u32)> = Vec::with_capacity(pairs.len());
        for (w, e) in pairs {
            if let Some(last) = merged.last_mut() {
                if last.0 == w {
                    last.1 += e;
                    continue;
                }
            }
            merged.push((w, e));
        }
        Ok(TMono { factors: merged })
    }

    pub fn factors(&self) -> &[(Word, u32)] {
        &self.factors
    }

    /// Number of t-variable factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    /// Largest index-word degree among the factors (0 for the empty monomial).
    pub fn max_word_degree(&self) -> u32 {
        self.factors
            .iter()
            .map(|(w, _)| w.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn extend_symbols(&self, m: usize) -> TMono {
        TMono {
            factors: self
                .factors
                .iter()
                .map(|(w, e)| (w.extend_symbols(m), *e))
                .collect(),
        }
    }
}

impl Monomial for TMono {
    type Space = TSpace;

    fn one() -> Self {
        TMono { factors: vec![] }
    }

    fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    fn degree(&self) -> u32 {
        self.factors.iter().map(|(w, e)| w.degree() * e).sum()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out: Vec<(Word, u32)> =
            Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (
            self.factors.iter().peekable(),
            other.factors.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some(&(wa, ea)), Some(&(wb, eb))) => match wb.cmp(wa) {
                    Ordering::Less => {
                        out.push((wa.clone(), *ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((wb.clone(), *eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((wa.clone(), ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&p), None) => {
                    out.push(p.clone());
                    a.next();
                }
                (None, Some(&p)) => {
                    out.push(p.clone());
                    b.next();
                }
                (None, None) => break,
            }
        }
        TMono { factors: out }
    }

    fn fits(&self, space: &Self::Space) -> bool {
        self.factors
            .iter()
            .all(|(w, _)| w.symbols() == space.syms && w.degree() >= 1 && w.degree() <= space.cap)
    }

    fn weight(&self, space: &Self::Space) -> Weight {
        let mut acc = vec![0u32; space.syms];
        for (w, e) in &self.factors {
            for (j, &wj) in w.0.iter().enumerate() {
                acc[j] += wj * e;
            }
        }
        acc
    }

    fn render(&self, _space: &Self::Space) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|(w, e)| {
                if *e == 1 {
                    format!("t({})", word_text(w))
                } else {
                    format!("t({})^{e}", word_text(w))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for TMono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.factors.iter(), other.factors.iter());
        loop {
            match (a.next(), b.next()) {
                (Some((wa, ea)), Some((wb, eb))) => {
                    if wa != wb {
                        return wa.cmp(wb);
                    }
                    if ea != eb {
                        return ea.cmp(eb);
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for TMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// ---------------------------------------------------------------------------
// Sparse polynomials.
// ---------------------------------------------------------------------------

/// Sparse polynomial: monomial -> nonzero rational coefficient.
/// Immutable in use; every operation returns a fresh value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePoly<M: Monomial> {
    space: M::Space,
    terms: BTreeMap<M, Rational>,
}

pub type XPoly = SparsePoly<XMono>;
pub type TPoly = SparsePoly<TMono>;

impl<M: Monomial> SparsePoly<M> {
    pub fn zero(space: M::Space) -> Self {
        SparsePoly {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(space: M::Space, c: Rational) -> Self {
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(M::one(), c);
        }
        p
    }

    /// Single term `c * m`. The monomial must fit the space.
    pub fn term(space: M::Space, m: M, c: Rational) -> Result<Self> {
        if !m.fits(&space) {
            return Err(Error::SpaceMismatch(format!(
                "monomial {m:?} does not fit space {space:?}"
            )));
        }
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        Ok(p)
    }

    pub fn space(&self) -> M::Space {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &Rational)> {
        self.terms.iter()
    }

    /// Terms in descending monomial order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&M, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &M) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&M, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: M, c: Rational) {
        debug_assert!(m.fits(&self.space));
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch(format!(
                "{:?} vs {:?}",
                self.space, other.space
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Exact product. Errors if the variable spaces differ.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = Self::zero(self.space);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.space);
        }
        SparsePoly {
            space: self.space,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), -v.clone()))
                .collect(),
        }
    }

    /// Multiply by a single monomial (with coefficient 1).
    pub fn mul_monomial(&self, m: &M) -> Self {
        SparsePoly {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Divide by the leading coefficient, making the polynomial monic.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.clone();
                self.terms
                    .iter()
                    .fold(Self::zero(self.space), |mut acc, (m, v)| {
                        acc.terms.insert(m.clone(), v / &inv);
                        acc
                    })
            }
        }
    }

    /// Multidegree if every term has the same weight; `None` otherwise.
    /// The zero polynomial is multihomogeneous of every multidegree; by
    /// convention it reports the zero weight.
    pub fn multidegree(&self) -> Option<Weight> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some(self.zero_weight()),
            Some(m) => m.weight(&self.space),
        };
        for m in it {
            if m.weight(&self.space) != first {
                return None;
            }
        }
        Some(first)
    }

    fn zero_weight(&self) -> Weight {
        // length of the weight vector is space-dependent
        M::one().weight(&self.space)
    }

    /// Total degree of the highest term, or 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .next_back()
            .map(|m| m.degree())
            .unwrap_or(0)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms_desc().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coeff_one = abs == Rational::from_integer(1.into());
            if m.is_one() {
                s.push_str(&format!("{abs}"));
            } else if coeff_one {
                s.push_str(&m.render(&self.space));
            } else {
                s.push_str(&format!("{abs}*{}", m.render(&self.space)));
            }
        }
        s
    }
}

impl XPoly {
    /// The variable `x[i][j]` as a polynomial (0-based indices).
    pub fn x_var(space: XSpace, i: usize, j: usize) -> Self {
        SparsePoly::term(
            space,
            XMono::var(space.flat(i, j)),
            Rational::from_integer(1.into()),
        )
        .expect("variable fits")
    }

    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.space);
        for (m, c) in &self.terms {
            out.add_term(m.permute_rows(&self.space, perm), c.clone());
        }
        out
    }

    pub fn permute_cols(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.space);
        for (m, c) in &self.terms {
            out.add_term(m.permute_cols(&self.space, perm), c.clone());
        }
        out
    }
}

impl TPoly {
    /// The variable `t(w)` as a polynomial.
    pub fn t_var(space: TSpace, w: Word) -> Result<Self> {
        SparsePoly::term(space, TMono::var(w)?, Rational::from_integer(1.into()))
    }

    /// Re-tag with a different degree cap (raising or lowering). Errors
    /// if some index word exceeds the new cap.
    pub fn with_cap(&self, cap: u32) -> Result<Self> {
        let space = TSpace::new(self.space.syms, cap);
        for m in self.terms.keys() {
            if !m.fits(&space) {
                return Err(Error::Domain(format!(
                    "term {} has an index word of degree > {cap}",
                    m.render(&space)
                )));
            }
        }
        Ok(SparsePoly {
            space,
            terms: self.terms.clone(),
        })
    }

    /// Reinterpret over a larger symbol set (padding words with zeros).
    pub fn extend_symbols(&self, m: usize) -> Self {
        assert!(m >= self.space.syms);
        let space = TSpace::new(m, self.space.cap);
        SparsePoly {
            space,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.extend_symbols(m), c.clone()))
                .collect(),
        }
    }
}

impl<M: Monomial> fmt::Display for SparsePoly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// Operator sugar; panics on space mismatch (checked variants return errors).
impl<M: Monomial> std::ops::Add for &SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn add(self, rhs: Self) -> SparsePoly<M> {
        self.checked_add(rhs).expect("space mismatch in +")
    }
}

impl<M: Monomial> std::ops::Sub for &SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn sub(self, rhs: Self) -> SparsePoly<M> {
        self.checked_sub(rhs).expect("space mismatch in -")
    }
}

impl<M: Monomial> std::ops::Mul for &SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn mul(self, rhs: Self) -> SparsePoly<M> {
        self.checked_mul(rhs).expect("space mismatch in *")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn x(space: XSpace, i: usize, j: usize) -> XPoly {
        XPoly::x_var(space, i, j)
    }

    #[test]
    fn monomial_product_and_identity() {
        let s = XSpace::new(3, 1);
        let x11 = x(s, 0, 0);
        let sq = &x11 * &x11;
        assert_eq!(sq.term_count(), 1);
        let (m, c) = sq.leading().unwrap();
        assert_eq!(m.degree(), 2);
        assert_eq!(c, &rat_int(1));

        let one = XPoly::constant(s, rat_int(1));
        let p = &sq + &x(s, 1, 0);
        assert_eq!(&p * &one, p);
    }

    #[test]
    fn power_sum_square_has_six_terms() {
        // (x11 + x21 + x31)^2 for n = 3, m = 1: 3 squares + 3 cross terms
        let s = XSpace::new(3, 1);
        let p = &(&x(s, 0, 0) + &x(s, 1, 0)) + &x(s, 2, 0);
        let sq = &p * &p;
        assert_eq!(sq.term_count(), 6);
    }

    #[test]
    fn space_mismatch_is_an_error() {
        let a = XPoly::x_var(XSpace::new(3, 2), 0, 0);
        let b = XPoly::x_var(XSpace::new(3, 1), 0, 0);
        assert!(matches!(a.checked_mul(&b), Err(Error::SpaceMismatch(_))));
    }

    #[test]
    fn multidegree_examples() {
        let s = XSpace::new(3, 2);
        let p = &x(s, 0, 0) * &x(s, 0, 1); // x11 * x12
        assert_eq!(p.multidegree(), Some(vec![1, 1]));
        let q = &x(s, 0, 0) + &x(s, 0, 1); // x11 + x12
        assert_eq!(q.multidegree(), None);
    }

    #[test]
    fn t_multidegree_and_cap() {
        // t(x^2y) * t(xy) has weight (3, 2)
        let sp = TSpace::new(2, 3);
        let a = TPoly::t_var(sp, Word::new(vec![2, 1])).unwrap();
        let b = TPoly::t_var(sp, Word::new(vec![1, 1])).unwrap();
        let p = &a * &b;
        assert_eq!(p.multidegree(), Some(vec![3, 2]));
        assert_eq!(p.degree(), 5);
        assert!(p.with_cap(2).is_err());
        assert!(p.with_cap(3).is_ok());
    }

    #[test]
    fn t_one_is_forbidden() {
        assert!(TMono::var(Word::new(vec![0, 0])).is_err());
    }

    #[test]
    fn graded_lex_order_x() {
        let s = XSpace::new(2, 2);
        // degree dominates
        let lo = XMono::var(s.flat(0, 0)); // x11
        let hi = XMono::var(s.flat(1, 1)).mul(&XMono::var(s.flat(1, 1))); // x22^2
        assert!(hi > lo);
        // same degree: x11*x22 > x12*x21 (x11 beats x12)
        let a = XMono::var(s.flat(0, 0)).mul(&XMono::var(s.flat(1, 1)));
        let b = XMono::var(s.flat(0, 1)).mul(&XMono::var(s.flat(1, 0)));
        assert!(a > b);
    }

    #[test]
    fn word_parsing_and_text() {
        let w = parse_word("x^2y", 2).unwrap();
        assert_eq!(w, Word::new(vec![2, 1]));
        assert_eq!(word_text(&w), "x^2y");
        let w2 = parse_word("x2y", 2).unwrap();
        assert_eq!(w2, Word::new(vec![2, 1]));
        let w3 = parse_word("zw", 4).unwrap();
        assert_eq!(w3, Word::new(vec![0, 0, 1, 1]));
        assert!(parse_word("z", 2).is_err());
        let w5 = parse_word("x1^2x5", 5).unwrap();
        assert_eq!(w5, Word::new(vec![2, 0, 0, 0, 1]));
    }

    #[test]
    fn render_is_deterministic_and_signed() {
        let s = XSpace::new(2, 2);
        let p = &x(s, 0, 0).scale(&rat(-1, 3)) + &(&x(s, 0, 1) * &x(s, 1, 0));
        assert_eq!(p.render(), "x[1][2]*x[2][1] - 1/3*x[1][1]");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = XPoly> {
            let space = XSpace::new(2, 2);
            proptest::collection::vec((proptest::collection::vec(0u32..3, 4), -5i64..=5), 0..5)
                .prop_map(move |terms| {
                    let mut p = XPoly::zero(space);
                    for (exps, c) in terms {
                        p.add_term(XMono::from_dense(&exps), rat_int(c));
                    }
                    p
                })
        }

        proptest! {
            #[test]
            fn ring_axioms_hold_exactly(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            }

            #[test]
            fn multidegree_is_additive(a in arb_poly(), b in arb_poly()) {
                if let (Some(da), Some(db)) = (a.multidegree(), b.multidegree()) {
                    if !a.is_zero() && !b.is_zero() {
                        let expected: Vec<u32> = da.iter().zip(&db).map(|(x, y)| x + y).collect();
                        prop_assert_eq!((&a * &b).multidegree(), Some(expected));
                    }
                }
            }
        }
    }
}
