use itertools::Itertools;

use crate::params::CycleParams;
use crate::subgraph::{group_edges, Arc, CycleSubgraph};
use crate::word::{Letter, Word};

/// Lexicographic (`D < R < U`) stream of all valid words for one `(n, k)`.
#[derive(Debug, Clone)]
pub struct Words {
    params: CycleParams,
    next: Option<Vec<Letter>>,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Word::new_unchecked(self.params, current))
    }
}

/// Advances `a` to its lexicographic successor; false if `a` was the last.
fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[i - 1] < a[j]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub fn enumerate_words(params: CycleParams) -> Words {
    // Words starting with D sort first; begin at the smallest R-led word.
    let mut first = vec![Letter::R];
    first.extend(std::iter::repeat_n(Letter::D, params.d_count()));
    first.extend(std::iter::repeat_n(Letter::R, params.k() - 1));
    first.extend(std::iter::repeat_n(Letter::U, params.k()));
    Words {
        params,
        next: Some(first),
    }
}

/// Every subgraph with `n` edges and `k` components, built directly from edge
/// subsets with no reference to words. Sorted canonically.
pub fn enumerate_subgraphs(params: CycleParams) -> Vec<CycleSubgraph> {
    let len = params.cycle_len();
    let mut out = Vec::new();
    for edges in (0..len).combinations(params.n()) {
        let mut chosen = vec![false; len];
        for &e in &edges {
            chosen[e] = true;
        }
        let Ok(runs) = group_edges(&chosen) else {
            continue;
        };
        if runs.len() > params.k() {
            continue;
        }
        let free: Vec<usize> = (0..len)
            .filter(|&v| !chosen[v] && !chosen[(v + len - 1) % len])
            .collect();
        for lone in free.into_iter().combinations(params.k() - runs.len()) {
            let mut arcs = runs.clone();
            arcs.extend(lone.into_iter().map(|v| Arc::new(v, 0)));
            arcs.sort_unstable();
            out.push(CycleSubgraph::new_unchecked(params, arcs));
        }
    }
    out.sort_unstable();
    out
}
