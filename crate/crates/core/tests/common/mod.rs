//! Independent oracles. Nothing here calls into the crate's maps; they work
//! on plain strings and integer vectors so they can check the crate.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Profile straight from letter positions: `(p_0..=p_k, q_0..=q_k)` with `q_0`
/// possibly -1.
pub fn profile_from_positions(word: &str) -> (Vec<i64>, Vec<i64>) {
    let letters: Vec<char> = word.chars().collect();
    let us: Vec<usize> = (0..letters.len()).filter(|&i| letters[i] == 'U').collect();
    let rs: Vec<usize> = (0..letters.len()).filter(|&i| letters[i] == 'R').collect();
    let count = |lo: usize, hi: usize, pred: &dyn Fn(char) -> bool| {
        (lo..hi).filter(|&i| pred(letters[i])).count() as i64
    };
    let non_u = |c: char| c != 'U';
    let is_d = |c: char| c == 'D';
    let len = letters.len();
    let k = us.len();

    let mut p = vec![count(0, us[0], &non_u)];
    for i in 0..k - 1 {
        p.push(count(us[i] + 1, us[i + 1], &non_u));
    }
    p.push(count(us[k - 1] + 1, len, &non_u));

    let mut q = vec![count(0, rs[0], &is_d) - 1];
    for i in 0..k - 1 {
        q.push(count(rs[i] + 1, rs[i + 1], &is_d));
    }
    q.push(count(rs[k - 1] + 1, len, &is_d));
    (p, q)
}

/// `P(a_m, b_m)` for `m = 1..=k` with the explicit sums for star words.
/// `p` is indexed `0..=k` (p[0] unused), `q` is indexed `0..=k`.
pub fn star_paths(p: &[i64], q: &[i64], n: i64) -> Vec<(i64, i64)> {
    let k = p.len() - 1;
    (1..=k)
        .map(|m| {
            let sp: i64 = (1..m).map(|i| p[i]).sum();
            let sq: i64 = (0..m).map(|i| q[i]).sum();
            let a = m as i64 + sp + sq;
            let b = m as i64 + sp + p[m] + sq;
            (a.rem_euclid(2 * n), b.rem_euclid(2 * n))
        })
        .collect()
}

/// Zero-word paths for `m = 1..k-1` followed by `P(-p_k, p_0)`.
/// `p` and `q` are indexed `0..=k` (q[0] unused).
pub fn zero_paths(p: &[i64], q: &[i64], n: i64) -> Vec<(i64, i64)> {
    let k = p.len() - 1;
    let mut out: Vec<(i64, i64)> = (1..k)
        .map(|m| {
            let sp: i64 = (0..m).map(|i| p[i]).sum();
            let sq: i64 = (1..=m).map(|i| q[i]).sum();
            let c = m as i64 + sp + sq;
            let d = c + p[m];
            (c.rem_euclid(2 * n), d.rem_euclid(2 * n))
        })
        .collect();
    out.push(((-p[k]).rem_euclid(2 * n), p[0].rem_euclid(2 * n)));
    out
}

/// Oracle for the whole forward map: sorted list of `(start, end)` pairs.
pub fn oracle_image(word: &str, n: usize) -> Vec<(i64, i64)> {
    let (p, q) = profile_from_positions(word);
    let star = word.chars().find(|&c| c != 'U') == Some('D');
    let mut paths = if star {
        star_paths(&p, &q, n as i64)
    } else {
        zero_paths(&p, &q, n as i64)
    };
    paths.sort();
    paths
}

/// Vertex set and edge ids of `P(i, j)` on the cycle of length `len`.
pub fn path_cells(i: i64, j: i64, len: i64) -> (BTreeSet<i64>, BTreeSet<i64>) {
    let steps = (j - i).rem_euclid(len);
    let vs = (0..=steps).map(|s| (i + s).rem_euclid(len)).collect();
    let es = (0..steps).map(|s| (i + s).rem_euclid(len)).collect();
    (vs, es)
}

fn factorial(m: u128) -> u128 {
    (1..=m).product()
}

/// Number of R/U/D arrangements with first letter not D, via factorials.
pub fn factorial_word_count(n: u128, k: u128) -> u128 {
    let all = factorial(n + k) / (factorial(k) * factorial(k) * factorial(n - k));
    let leading_d = if k < n {
        factorial(n + k - 1) / (factorial(k) * factorial(k) * factorial(n - k - 1))
    } else {
        0
    };
    all - leading_d
}

/// All valid words by filtering every string over {D,R,U} of length n+k.
pub fn brute_force_words(n: usize, k: usize) -> Vec<String> {
    let len = n + k;
    let mut out = Vec::new();
    for code in 0..3usize.pow(len as u32) {
        let mut c = code;
        let s: String = (0..len)
            .map(|_| {
                let ch = ['D', 'R', 'U'][c % 3];
                c /= 3;
                ch
            })
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .collect();
        let cnt = |ch| s.chars().filter(|&x| x == ch).count();
        if cnt('R') == k && cnt('U') == k && cnt('D') == n - k && !s.starts_with('D') {
            out.push(s);
        }
    }
    out
}
