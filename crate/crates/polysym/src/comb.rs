//! Small enumeration helpers shared across the algebra layers:
//! compositions, permutations, set partitions, and the word / monomial
//! enumerations used to build graded components.

use crate::polycore::{TMono, Word};

/// All vectors of `parts` nonnegative integers summing to `total`,
/// in lexicographically decreasing order of the vector.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    fn rec(total: u32, idx: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx + 1 == cur.len() {
            cur[idx] = total;
            out.push(cur.clone());
            return;
        }
        for v in (0..=total).rev() {
            cur[idx] = v;
            rec(total - v, idx + 1, cur, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(total, 0, &mut cur, &mut out);
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            heap(k + 1, items, out);
            items.swap(k, i);
        }
    }
    heap(0, &mut items, &mut out);
    out.sort();
    out
}

/// Cycle lengths of a permutation given in one-line notation.
pub fn cycle_type(perm: &[usize]) -> Vec<u32> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut lens = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0u32;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

/// All set partitions of `{0..k-1}`, each a list of blocks sorted by
/// minimum element, enumerated by restricted growth strings in
/// lexicographic order. The count is the Bell number `B_k`.
pub fn set_partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    assert!(k >= 1);
    let mut out = Vec::new();
    let mut rgs = vec![0usize; k];
    loop {
        let blocks_n = rgs.iter().copied().max().unwrap() + 1;
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); blocks_n];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        out.push(blocks);
        // next restricted growth string
        let mut i = k;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            let prefix_max = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for v in rgs.iter_mut().skip(i + 1) {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// Words of degree exactly `d` in `m` symbols, in decreasing word order.
pub fn words_of_degree(m: usize, d: u32) -> Vec<Word> {
    compositions(d, m).into_iter().map(Word::new).collect()
}

/// Words of degree `1..=cap` in `m` symbols, in decreasing word order.
pub fn words_up_to(m: usize, cap: u32) -> Vec<Word> {
    let mut out = Vec::new();
    for d in (1..=cap).rev() {
        out.extend(words_of_degree(m, d));
    }
    out
}

/// All x-monomials of column-degree `alpha` over `rows` rows, as dense
/// exponent vectors (row-major, length `rows * alpha.len()`).
pub fn x_monomials_of_weight(rows: usize, alpha: &[u32]) -> Vec<Vec<u32>> {
    let cols = alpha.len();
    let per_col: Vec<Vec<Vec<u32>>> = alpha.iter().map(|&a| compositions(a, rows)).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; rows * cols];
    fn rec(
        j: usize,
        cols: usize,
        rows: usize,
        per_col: &[Vec<Vec<u32>>],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if j == cols {
            out.push(cur.clone());
            return;
        }
        for col in &per_col[j] {
            for i in 0..rows {
                cur[i * cols + j] = col[i];
            }
            rec(j + 1, cols, rows, per_col, cur, out);
        }
    }
    rec(0, cols, rows, &per_col, &mut cur, &mut out);
    out
}

/// All t-monomials of weight exactly `alpha` whose index words have degree
/// `<= cap`, in decreasing monomial order.
pub fn t_monomials_of_weight(m: usize, cap: u32, alpha: &[u32]) -> Vec<TMono> {
    let words: Vec<Word> = words_up_to(m, cap)
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
            out.push(TMono::from_pairs(picked.clone()).expect("words nonzero"));
            return;
        }
        if idx == words.len() {
            return;
        }
        let w = &words[idx];
        // maximum multiplicity of w that fits in the residual
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

/// Count of `t_monomials_of_weight` without materializing the list.
pub fn count_t_monomials_of_weight(m: usize, cap: u32, alpha: &[u32]) -> usize {
    let words: Vec<Word> = words_up_to(m, cap)
        .into_iter()
        .filter(|w| w.0.iter().zip(alpha).all(|(a, b)| a <= b))
        .collect();
    fn rec(idx: usize, residual: &[u32], words: &[Word]) -> usize {
        if residual.iter().all(|&r| r == 0) {
            return 1;
        }
        if idx == words.len() {
            return 0;
        }
        let w = &words[idx];
        let mut max_e = u32::MAX;
        for (j, &wj) in w.0.iter().enumerate() {
            if let Some(q) = residual[j].checked_div(wj) {
                max_e = max_e.min(q);
            }
        }
        let mut total = 0;
        for e in 0..=max_e {
            let rem: Vec<u32> = residual
                .iter()
                .zip(&w.0)
                .map(|(&r, &wj)| r - wj * e)
                .collect();
            total += rec(idx + 1, &rem, words);
        }
        total
    }
    rec(0, alpha, &words)
}
