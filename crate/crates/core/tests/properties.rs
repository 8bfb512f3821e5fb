use cyclewords::*;
use proptest::prelude::*;
use proptest::sample::subsequence;

/// Random valid word: shuffle the multiset, then swap a non-D letter to the front.
fn word_strategy() -> impl Strategy<Value = Word> {
    (1usize..=12)
        .prop_flat_map(|n| (Just(n), 1..=n))
        .prop_flat_map(|(n, k)| {
            let mut letters = vec![Letter::R; k];
            letters.extend(vec![Letter::U; k]);
            letters.extend(vec![Letter::D; n - k]);
            (
                Just(CycleParams::new(n, k).unwrap()),
                Just(letters).prop_shuffle(),
            )
        })
        .prop_map(|(params, mut letters)| {
            let i = letters.iter().position(|&l| l != Letter::D).unwrap();
            letters.swap(0, i);
            Word::new(params, letters).unwrap()
        })
}

/// Splits `total` into `parts` nonnegative pieces given `parts - 1` sorted
/// bar positions in `0..total + parts - 1`.
fn weak_composition(total: usize, bars: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(bars.len() + 1);
    let mut prev = 0;
    for (i, &b) in bars.iter().enumerate() {
        out.push(b - prev - if i == 0 { 0 } else { 1 });
        prev = b;
    }
    let last_end = total + bars.len();
    out.push(last_end - prev - if bars.is_empty() { 0 } else { 1 });
    out
}

/// Random subgraph built generically: k arc lengths summing to n, k gaps of
/// at least one absent edge summing to n, rotated by a random offset.
fn subgraph_strategy() -> impl Strategy<Value = CycleSubgraph> {
    (1usize..=12)
        .prop_flat_map(|n| (Just(n), 1..=n))
        .prop_flat_map(|(n, k)| {
            (
                Just(n),
                Just(k),
                subsequence((0..n + k - 1).collect::<Vec<_>>(), k - 1),
                subsequence((0..n - 1).collect::<Vec<_>>(), k - 1),
                0..2 * n,
            )
        })
        .prop_map(|(n, k, len_bars, gap_bars, rot)| {
            let lengths = weak_composition(n, &len_bars);
            // gaps - 1 is a weak composition of n - k
            let gaps: Vec<usize> = weak_composition(n - k, &gap_bars)
                .iter()
                .map(|g| g + 1)
                .collect();
            let mut pos = rot;
            let mut arcs = Vec::new();
            for (l, g) in lengths.iter().zip(&gaps) {
                arcs.push(Arc::new(pos % (2 * n), *l));
                pos += l + g;
            }
            CycleSubgraph::from_arcs(CycleParams::new(n, k).unwrap(), arcs).unwrap()
        })
}

proptest! {
    #[test]
    fn word_roundtrip(w in word_strategy()) {
        let prof = word_to_profile(&w);
        prop_assert_eq!(&profile_to_word(&prof), &w);
        let g = word_to_subgraph(&w);
        prop_assert_eq!(classify_subgraph(&g), classify_word(&w));
        prop_assert_eq!(subgraph_to_word(&g), w);
    }

    #[test]
    fn subgraph_roundtrip(g in subgraph_strategy()) {
        let w = subgraph_to_word(&g);
        prop_assert_eq!(classify_word(&w), classify_subgraph(&g));
        prop_assert_eq!(word_to_subgraph(&w), g.clone());
        let prof = subgraph_to_profile(&g);
        prop_assert_eq!(word_to_profile(&w), prof);
    }

    #[test]
    fn normalize_inverts_to_edges(g in subgraph_strategy()) {
        let (edges, isolated) = g.to_edges();
        prop_assert_eq!(normalize_edges(&edges, &isolated, g.params()).unwrap(), g);
    }

    #[test]
    fn expand_arc_shape(n in 1usize..=12, start in 0usize..24, len in 0usize..=12) {
        let params = CycleParams::new(n, 1).unwrap();
        let (start, len) = (start % (2 * n), len.min(n));
        let (vs, es) = expand_arc(Arc::new(start, len), params);
        prop_assert_eq!(vs.len(), len + 1);
        prop_assert_eq!(es.len(), len);
        prop_assert!(vs.iter().all(|&v| v < 2 * n));
        prop_assert!(es.iter().all(|&(a, b)| b == (a + 1) % (2 * n)));
    }
}

#[test]
fn profile_roundtrip_exhaustive() {
    for p in CycleParams::grid(7) {
        for w in enumerate_words(p) {
            let prof = word_to_profile(&w);
            assert_eq!(profile_to_word(&prof), w);
            let sum_q: usize = prof.q().iter().sum();
            assert_eq!(prof.p().iter().sum::<usize>(), p.n());
            match prof.class() {
                Class::Star => assert_eq!(sum_q + 1, p.n() - p.k()),
                Class::Zero => assert_eq!(sum_q, p.n() - p.k()),
            }
        }
    }
}

#[test]
fn no_ds_means_zero_class() {
    for n in 1..=7 {
        let p = CycleParams::new(n, n).unwrap();
        assert!(enumerate_words(p).all(|w| classify_word(&w) == Class::Zero));
    }
}

#[test]
fn enumerated_subgraphs_are_distinct() {
    for p in CycleParams::grid(6) {
        let gs = enumerate_subgraphs(p);
        assert!(gs.windows(2).all(|w| w[0] < w[1]), "{p}");
    }
}
