//! Partition combinatorics and GL_m module bookkeeping: the Weyl
//! dimension formula, Kostka numbers by tableau enumeration, and the
//! decomposition of exact weight-dimension tables into irreducible
//! multiplicities.
//!
//! Decompositions are obtained by leading-weight subtraction against
//! Kostka numbers, never from plethysm tables: the full weight table of
//! a graded slice is computed exactly, folded to dominant weights, and
//! peeled off in decreasing lexicographic order.

use std::collections::BTreeMap;

use num_traits::One;

use crate::comb::{compositions, count_t_monomials_of_weight};
use crate::error::{Error, Result};
use crate::invariant_ring::dim_invariant_component;
use crate::polycore::Weight;
use crate::rational::Rational;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition(parts))
    }

    /// Sort a weight vector into a partition, dropping zeros.
    pub fn from_weight(w: &[u32]) -> Self {
        let mut parts: Vec<u32> = w.iter().copied().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn height(&self) -> usize {
        self.0.len()
    }

    /// The part at `i`, zero-padded.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn render(&self) -> String {
        format!(
            "({})",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Finitely supported multiset of partitions with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurMultiset(pub BTreeMap<Partition, u64>);

impl SchurMultiset {
    pub fn from_pairs(pairs: &[(&[u32], u64)]) -> Self {
        SchurMultiset(
            pairs
                .iter()
                .map(|&(p, m)| (Partition::new(p.to_vec()).expect("valid partition"), m))
                .collect(),
        )
    }

    pub fn total_dimension(&self, m: usize) -> Result<u64> {
        let mut acc = 0u64;
        for (p, mult) in &self.0 {
            acc += mult * weyl_dim(p, m)?;
        }
        Ok(acc)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Restrict to partitions of height at most `h`.
    pub fn height_filtered(&self, h: usize) -> SchurMultiset {
        SchurMultiset(
            self.0
                .iter()
                .filter(|(p, _)| p.height() <= h)
                .map(|(p, m)| (p.clone(), *m))
                .collect(),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.0
                .iter()
                .rev()
                .map(|(p, m)| serde_json::json!({"partition": p.0, "mult": m}))
                .collect(),
        )
    }

    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        self.0
            .iter()
            .rev()
            .map(|(p, m)| {
                if *m == 1 {
                    format!("V{}", p.render())
                } else {
                    format!("{m}*V{}", p.render())
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Weyl dimension of the irreducible GL_m module with highest weight
/// `lambda`: the product over pairs `i < j` of
/// `(lambda_i - lambda_j + j - i) / (j - i)`, evaluated exactly over the
/// rationals and verified integral. More parts than `m` is an error, not
/// a silent zero.
pub fn weyl_dim(lambda: &Partition, m: usize) -> Result<u64> {
    if lambda.height() > m {
        return Err(Error::Domain(format!(
            "partition {} has more than m = {m} parts",
            lambda.render()
        )));
    }
    let mut acc = Rational::one();
    for i in 0..m {
        for j in i + 1..m {
            let num = lambda.part(i) as i64 - lambda.part(j) as i64 + (j as i64 - i as i64);
            let den = j as i64 - i as i64;
            acc *= crate::rational::rat(num, den);
        }
    }
    if !acc.is_integer() {
        return Err(Error::Inconsistent(format!(
            "weyl dimension of {} is not integral",
            lambda.render()
        )));
    }
    u64::try_from(acc.to_integer()).map_err(|_| {
        Error::Inconsistent(format!("weyl dimension of {} is negative", lambda.render()))
    })
}

/// Kostka number: the number of semistandard tableaux of shape `lambda`
/// and content `mu` (weakly increasing rows, strictly increasing
/// columns), by exhaustive enumeration. Requires `|lambda| == |mu|`.
pub fn kostka(lambda: &Partition, mu: &[u32]) -> Result<u64> {
    let size: u32 = mu.iter().sum();
    if lambda.size() != size {
        return Err(Error::Domain(format!(
            "kostka size mismatch: |lambda| = {}, |mu| = {size}",
            lambda.size()
        )));
    }
    if lambda.0.is_empty() {
        return Ok(1);
    }

    struct State<'a> {
        shape: &'a [u32],
        remaining: Vec<u32>,
        rows: Vec<Vec<u32>>,
    }
    // Fill cells row-major; entry bounds come from the left neighbor (>=)
    // and the cell above (>). Values are 0-based symbols.
    fn rec(st: &mut State, r: usize, c: usize) -> u64 {
        if r == st.shape.len() {
            return 1;
        }
        let (nr, nc) = if c + 1 < st.shape[r] as usize {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let mut lo = 0u32;
        if c > 0 {
            lo = lo.max(st.rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(st.rows[r - 1][c] + 1);
        }
        let mut total = 0;
        for v in lo..st.remaining.len() as u32 {
            if st.remaining[v as usize] == 0 {
                continue;
            }
            st.remaining[v as usize] -= 1;
            st.rows[r].push(v);
            total += rec(st, nr, nc);
            st.rows[r].pop();
            st.remaining[v as usize] += 1;
        }
        total
    }
    let mut st = State {
        shape: &lambda.0,
        remaining: mu.to_vec(),
        rows: vec![Vec::new(); lambda.0.len()],
    };
    Ok(rec(&mut st, 0, 0))
}

/// Dimension of the weight-`alpha` slice of the presentation algebra for
/// `n` rows over `m` symbols: the number of monomials in the `t(w)` with
/// `deg w <= n` of weight `alpha`.
pub fn dim_f_component(n: usize, m: usize, alpha: &[u32]) -> u64 {
    count_t_monomials_of_weight(m, n as u32, alpha) as u64
}

/// Exact weight-space dimension table (all weights of one total degree).
pub type WeightTable = BTreeMap<Weight, u64>;

/// Decompose a full weight table into irreducible multiplicities by
/// leading-weight subtraction with Kostka numbers. The table must hold
/// ALL weights of each total degree it touches; it is folded to dominant
/// weights (verifying S_m symmetry) and peeled in decreasing
/// lexicographic order. A negative residual means the table is not the
/// character of a polynomial module and signals an upstream bug.
pub fn schur_decompose(dims: &WeightTable, m: usize) -> Result<SchurMultiset> {
    let mut dominant: BTreeMap<Partition, u64> = BTreeMap::new();
    for (w, &d) in dims {
        if w.len() != m {
            return Err(Error::Domain(format!("weight {w:?} has length != m = {m}")));
        }
        let p = Partition::from_weight(w);
        match dominant.get(&p) {
            None => {
                dominant.insert(p, d);
            }
            Some(&prev) if prev == d => {}
            Some(&prev) => {
                return Err(Error::Inconsistent(format!(
                    "weight table is not symmetric at {w:?}: {d} vs {prev}"
                )));
            }
        }
    }
    // peel dominant weights from the lexicographically largest down,
    // degree by degree
    let mut order: Vec<Partition> = dominant.keys().cloned().collect();
    order.sort_by(|a, b| {
        a.size()
            .cmp(&b.size())
            .then_with(|| {
                let len = a.height().max(b.height());
                (0..len)
                    .map(|i| a.part(i).cmp(&b.part(i)))
                    .find(|o| *o != std::cmp::Ordering::Equal)
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .reverse()
    });
    let mut out = SchurMultiset::default();
    for lam in order {
        let mut residual = dominant[&lam] as i64;
        for (mu, mult) in &out.0 {
            if mu.size() == lam.size() {
                residual -= (*mult * kostka(mu, &lam.0)?) as i64;
            }
        }
        if residual < 0 {
            return Err(Error::NotPolynomialCharacter(format!(
                "residual multiplicity {residual} at {}",
                lam.render()
            )));
        }
        if residual > 0 {
            out.0.insert(lam, residual as u64);
        }
    }
    // full verification pass: the decomposition reproduces every entry
    for (w, &d) in dims {
        let p = Partition::from_weight(w);
        let mut acc = 0u64;
        for (lam, mult) in &out.0 {
            if lam.size() == p.size() {
                acc += mult * kostka(lam, &p.0)?;
            }
        }
        if acc != d {
            return Err(Error::Inconsistent(format!(
                "decomposition does not reproduce weight {w:?}: {acc} vs {d}"
            )));
        }
    }
    Ok(out)
}

/// Weight table of the degree-`degree` slice of the presentation algebra.
pub fn f_slice_table(n: usize, m: usize, degree: u32) -> WeightTable {
    compositions(degree, m)
        .into_iter()
        .map(|alpha| {
            let d = dim_f_component(n, m, &alpha);
            (alpha, d)
        })
        .collect()
}

/// Weight table of the degree-`degree` slice of the invariant ring.
pub fn r_slice_table(n: usize, m: usize, degree: u32) -> WeightTable {
    compositions(degree, m)
        .into_iter()
        .map(|alpha| {
            let d = dim_invariant_component(n, m, &alpha);
            (alpha, d)
        })
        .collect()
}

/// Weight table of the degree-`degree` slice of the kernel of the
/// evaluation map: `dim F^alpha - dim R^alpha` per weight. Rests on
/// surjectivity of the evaluation map; cross-checked elsewhere against
/// nullspace ranks.
pub fn kernel_slice_table(n: usize, m: usize, degree: u32) -> Result<WeightTable> {
    let mut out = WeightTable::new();
    for alpha in compositions(degree, m) {
        let f = dim_f_component(n, m, &alpha);
        let r = dim_invariant_component(n, m, &alpha);
        if r > f {
            return Err(Error::Inconsistent(format!(
                "dim R > dim F at weight {alpha:?}"
            )));
        }
        out.insert(alpha, f - r);
    }
    Ok(out)
}

pub const MAX_DECOMPOSE_DEGREE: u32 = 8;

fn check_decompose_range(n: usize, degree: u32) -> Result<()> {
    if n != 3 {
        return Err(Error::Domain(format!(
            "kernel decompositions are supported for n = 3 only, got n = {n}"
        )));
    }
    if degree > MAX_DECOMPOSE_DEGREE {
        return Err(Error::Domain(format!(
            "degree {degree} exceeds the supported bound {MAX_DECOMPOSE_DEGREE}"
        )));
    }
    Ok(())
}

/// GL_m decomposition of the degree-`degree` slice of the kernel for
/// n = 3. Degrees at most 4 give the empty multiset.
pub fn kernel_decomposition(n: usize, m: usize, degree: u32) -> Result<SchurMultiset> {
    check_decompose_range(n, degree)?;
    schur_decompose(&kernel_slice_table(n, m, degree)?, m)
}

/// GL_m decomposition of the degree-`degree` slice of the presentation
/// algebra for n = 3.
pub fn f_slice_decomposition(n: usize, m: usize, degree: u32) -> Result<SchurMultiset> {
    check_decompose_range(n, degree)?;
    schur_decompose(&f_slice_table(n, m, degree), m)
}

/// GL_m decomposition of the degree-`degree` slice of the invariant ring
/// for n = 3.
pub fn r_slice_decomposition(n: usize, m: usize, degree: u32) -> Result<SchurMultiset> {
    check_decompose_range(n, degree)?;
    schur_decompose(&r_slice_table(n, m, degree), m)
}

/// True iff every partition in the decomposition of the degree-`degree`
/// slice of the presentation algebra has height at most (degree + 1)/2.
pub fn height_filter_check(n: usize, m: usize, degree: u32) -> Result<bool> {
    let dec = f_slice_decomposition(n, m, degree)?;
    let bound = degree.div_ceil(2);
    Ok(dec.0.keys().all(|p| p.height() as u32 <= bound))
}
