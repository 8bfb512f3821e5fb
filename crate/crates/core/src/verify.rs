use std::collections::{BTreeMap, BTreeSet};

use crate::bijection::{subgraph_to_word, word_to_subgraph};
use crate::enumerate::{enumerate_subgraphs, enumerate_words};
use crate::params::CycleParams;
use crate::subgraph::{classify_subgraph, CycleSubgraph};
use crate::word::{classify_word, Word};

/// Outcome of an exhaustive bijectivity check for one `(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub params: CycleParams,
    pub words_enumerated: usize,
    pub subgraphs_enumerated: usize,
    pub forward_injective: bool,
    pub image_equals_g: bool,
    pub roundtrip_words_ok: bool,
    pub roundtrip_subgraphs_ok: bool,
    pub class_preserving: bool,
    /// First counterexample for each failed check.
    pub counterexamples: Vec<String>,
}

impl VerificationReport {
    pub fn success(&self) -> bool {
        self.forward_injective
            && self.image_equals_g
            && self.roundtrip_words_ok
            && self.roundtrip_subgraphs_ok
            && self.class_preserving
            && self.counterexamples.is_empty()
    }
}

/// Structural check on an image, independent of the constructor that built it.
fn well_formed(g: &CycleSubgraph) -> bool {
    let params = g.params();
    let arcs = g.arcs();
    let mut seen = vec![false; params.cycle_len()];
    let disjoint = arcs
        .iter()
        .flat_map(|a| a.vertices(params))
        .all(|v| v < seen.len() && !std::mem::replace(&mut seen[v], true));
    disjoint
        && arcs.len() == params.k()
        && arcs.iter().map(|a| a.edge_count()).sum::<usize>() == params.n()
        && arcs.windows(2).all(|w| w[0].start() < w[1].start())
}

/// Maps every word forward and every subgraph back, checking that the maps
/// are mutually inverse bijections that preserve the star/zero class.
pub fn verify_bijection(params: CycleParams) -> VerificationReport {
    let words: Vec<Word> = enumerate_words(params).collect();
    let graphs = enumerate_subgraphs(params);

    let mut first_failure: BTreeMap<&'static str, String> = BTreeMap::new();
    let mut fail = |check: &'static str, detail: String| {
        first_failure.entry(check).or_insert(detail);
    };

    let mut preimage: BTreeMap<CycleSubgraph, Word> = BTreeMap::new();
    let mut forward_injective = true;
    let mut roundtrip_words_ok = true;
    let mut class_preserving = true;
    for w in &words {
        let g = word_to_subgraph(w);
        if !well_formed(&g) {
            forward_injective = false;
            fail("image", format!("{w} -> malformed {g}"));
        }
        if classify_subgraph(&g) != classify_word(w) {
            class_preserving = false;
            fail(
                "class",
                format!(
                    "{w} ({}) -> {g} ({})",
                    classify_word(w),
                    classify_subgraph(&g)
                ),
            );
        }
        let back = subgraph_to_word(&g);
        if back != *w {
            roundtrip_words_ok = false;
            fail("roundtrip-word", format!("{w} -> {g} -> {back}"));
        }
        if let Some(prev) = preimage.insert(g.clone(), w.clone()) {
            forward_injective = false;
            fail("injective", format!("{prev} and {w} both map to {g}"));
        }
    }

    let image: BTreeSet<&CycleSubgraph> = preimage.keys().collect();
    let expected: BTreeSet<&CycleSubgraph> = graphs.iter().collect();
    let image_equals_g = image == expected && expected.len() == graphs.len();
    if !image_equals_g {
        let detail = match expected.difference(&image).next() {
            Some(g) => format!("{g} is not hit by any word"),
            None => match image.difference(&expected).next() {
                Some(g) => format!("{g} is an image outside the enumerated subgraphs"),
                None => "enumerated subgraphs contain duplicates".to_string(),
            },
        };
        fail("image-set", detail);
    }

    let mut roundtrip_subgraphs_ok = true;
    for g in &graphs {
        let w = subgraph_to_word(g);
        let again = word_to_subgraph(&w);
        if again != *g {
            roundtrip_subgraphs_ok = false;
            fail("roundtrip-subgraph", format!("{g} -> {w} -> {again}"));
        }
    }

    VerificationReport {
        params,
        words_enumerated: words.len(),
        subgraphs_enumerated: graphs.len(),
        forward_injective,
        image_equals_g,
        roundtrip_words_ok,
        roundtrip_subgraphs_ok,
        class_preserving,
        counterexamples: first_failure
            .into_iter()
            .map(|(check, detail)| format!("{check}: {detail}"))
            .collect(),
    }
}
