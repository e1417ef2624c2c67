//! Lexicographic `k`-subset enumeration.
//!
//! Every exhaustive search in the crate walks subsets cardinality-major and
//! lexicographically within a cardinality, so tie-breaking is the same
//! everywhere. Parallel scans split the space by the smallest element and
//! reduce with the same order, which keeps results independent of
//! scheduling.

use std::ops::ControlFlow;

use rayon::prelude::*;

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of subsets of size at most `k` of an `n`-set, saturating.
pub fn subsets_up_to(n: u64, k: u64) -> u64 {
    (0..=k.min(n)).fold(0u64, |acc, j| acc.saturating_add(binomial(n, j)))
}

/// Advances `combo` (ascending, values `< n`) to its lexicographic successor.
/// Returns `false` after the last combination.
pub fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// breaks.
pub fn for_each_combination<B>(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    if k > n {
        return None;
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        if let ControlFlow::Break(b) = f(&combo) {
            return Some(b);
        }
        if !next_combination(&mut combo, n) {
            return None;
        }
    }
}

/// Calls `f` on every `k`-subset whose smallest element is `first`.
fn for_each_with_first<B>(
    n: usize,
    k: usize,
    first: usize,
    mut f: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    debug_assert!(k >= 1 && first + k <= n);
    let rest_n = n - first - 1;
    let mut combo = vec![0usize; k];
    combo[0] = first;
    for_each_combination(rest_n, k - 1, |rest| {
        for (slot, &r) in combo[1..].iter_mut().zip(rest) {
            *slot = first + 1 + r;
        }
        f(&combo)
    })
}

/// Lexicographically first `k`-subset satisfying `pred`, searched in
/// parallel. `init` builds per-worker scratch state.
pub fn par_find_first<S, I, P>(n: usize, k: usize, init: I, pred: P) -> Option<Vec<usize>>
where
    I: Fn() -> S + Sync + Send,
    P: Fn(&mut S, &[usize]) -> bool + Sync + Send,
{
    if k > n {
        return None;
    }
    if k == 0 {
        let mut s = init();
        return pred(&mut s, &[]).then(Vec::new);
    }
    (0..=n - k).into_par_iter().find_map_first(|first| {
        let mut s = init();
        for_each_with_first(n, k, first, |c| {
            if pred(&mut s, c) {
                ControlFlow::Break(c.to_vec())
            } else {
                ControlFlow::Continue(())
            }
        })
    })
}

/// Best `k`-subset under `score`, scanning in parallel. `better(a, b)`
/// returns true when score `a` strictly beats `b`; among equal scores the
/// lexicographically smallest subset wins. `score` may return `None` to
/// signal a pruned candidate that cannot beat the caller's bound.
pub fn par_best<S, I, F, B, V>(n: usize, k: usize, init: I, score: F, better: B) -> Option<(V, Vec<usize>)>
where
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &[usize], Option<&V>) -> Option<V> + Sync + Send,
    B: Fn(&V, &V) -> bool + Sync + Send,
    V: Send + Clone,
{
    if k > n {
        return None;
    }
    if k == 0 {
        let mut s = init();
        return score(&mut s, &[], None).map(|v| (v, Vec::new()));
    }
    let pick = |a: Option<(V, Vec<usize>)>, b: Option<(V, Vec<usize>)>| match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => {
            if better(&b.0, &a.0) || (!better(&a.0, &b.0) && b.1 < a.1) {
                Some(b)
            } else {
                Some(a)
            }
        }
    };
    (0..=n - k)
        .into_par_iter()
        .map(|first| {
            let mut s = init();
            let mut best: Option<(V, Vec<usize>)> = None;
            for_each_with_first(n, k, first, |c| {
                if let Some(v) = score(&mut s, c, best.as_ref().map(|b| &b.0)) {
                    if best.as_ref().is_none_or(|b| better(&v, &b.0)) {
                        best = Some((v, c.to_vec()));
                    }
                }
                ControlFlow::<()>::Continue(())
            });
            best
        })
        .reduce(|| None, pick)
}

/// Zero-based lexicographic rank of an ascending `k`-subset of `0..n`.
pub fn lex_rank(n: usize, combo: &[usize]) -> u64 {
    let k = combo.len();
    let mut rank = 0u64;
    let mut prev = 0usize;
    for (i, &c) in combo.iter().enumerate() {
        for v in prev..c {
            rank += binomial((n - 1 - v) as u64, (k - 1 - i) as u64);
        }
        prev = c + 1;
    }
    rank
}
