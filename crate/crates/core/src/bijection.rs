//! The two placement maps (profile to subgraph) and their inverses.
//!
//! Star profiles lay arcs out from vertex 1 onward: a leading gap of
//! `q_0 + 1` absent edges, then arc `m` with `p_m` edges followed by a gap of
//! `q_m + 1` absent edges. The last gap closes the cycle just before vertex 0.
//!
//! Zero profiles put one arc through vertex 0, reaching `p_k` edges back and
//! `p_0` edges forward. The remaining arcs `1..k` follow it in increasing
//! direction, arc `m` preceded by a gap of `q_m + 1` absent edges.

use crate::error::{Error, Result};
use crate::profile::{profile_to_word, word_to_profile, PqProfile};
use crate::subgraph::{classify_subgraph, Arc, CycleSubgraph};
use crate::word::Word;
use crate::Class;

fn canonical(prof: &PqProfile, mut arcs: Vec<Arc>) -> CycleSubgraph {
    arcs.sort_unstable();
    CycleSubgraph::new_unchecked(prof.params(), arcs)
}

fn expect_class(prof: &PqProfile, class: Class) -> Result<()> {
    if prof.class() == class {
        Ok(())
    } else {
        Err(Error::BadProfile(format!(
            "expected a {class} profile, got a {} profile",
            prof.class()
        )))
    }
}

pub fn star_profile_to_subgraph(prof: &PqProfile) -> Result<CycleSubgraph> {
    expect_class(prof, Class::Star)?;
    let (p, q) = (prof.p(), prof.q());
    let mut start = 1 + q[0];
    let mut arcs = Vec::with_capacity(p.len());
    for (m, &pm) in p.iter().enumerate() {
        arcs.push(Arc::new(start, pm));
        start += pm + q[m + 1] + 1;
    }
    Ok(canonical(prof, arcs))
}

pub fn zero_profile_to_subgraph(prof: &PqProfile) -> Result<CycleSubgraph> {
    expect_class(prof, Class::Zero)?;
    let params = prof.params();
    let (p, q) = (prof.p(), prof.q());
    let k = params.k();
    let mut arcs = Vec::with_capacity(k);
    let mut end = p[0];
    for m in 1..k {
        let start = end + q[m - 1] + 1;
        arcs.push(Arc::new(start, p[m]));
        end = start + p[m];
    }
    let back = p[k];
    arcs.push(Arc::new(
        params.wrap(params.cycle_len() - back),
        back + p[0],
    ));
    Ok(canonical(prof, arcs))
}

/// Reads the profile back off a subgraph; inverse of the two placement maps.
pub fn subgraph_to_profile(g: &CycleSubgraph) -> PqProfile {
    let params = g.params();
    let len = params.cycle_len();
    let class = classify_subgraph(g);
    match class {
        Class::Star => {
            // No arc touches 0, so none wraps and start order is cycle order.
            let mut p = Vec::with_capacity(params.k());
            let mut q = Vec::with_capacity(params.k() + 1);
            let mut prev_end = 0;
            for a in g.arcs() {
                q.push(a.start() - prev_end - 1);
                p.push(a.edge_count());
                prev_end = a.start() + a.edge_count();
            }
            q.push(len - prev_end - 1);
            PqProfile::new_unchecked(class, params, p, q)
        }
        Class::Zero => {
            let anchor = g
                .arcs()
                .iter()
                .copied()
                .find(|a| a.contains(0, params))
                .expect("zero-class subgraph has an arc through vertex 0");
            let forward = anchor.end(params);
            let back = (len - anchor.start()) % len;
            let mut p = Vec::with_capacity(params.k() + 1);
            let mut q = Vec::with_capacity(params.k());
            p.push(forward);
            let mut prev_end = forward;
            for a in g.arcs().iter().filter(|&&a| a != anchor) {
                q.push(a.start() - prev_end - 1);
                p.push(a.edge_count());
                prev_end = a.start() + a.edge_count();
            }
            q.push(len - back - prev_end - 1);
            p.push(back);
            PqProfile::new_unchecked(class, params, p, q)
        }
    }
}

pub fn word_to_subgraph(w: &Word) -> CycleSubgraph {
    let prof = word_to_profile(w);
    match prof.class() {
        Class::Star => star_profile_to_subgraph(&prof),
        Class::Zero => zero_profile_to_subgraph(&prof),
    }
    .expect("profile class matches the branch taken")
}

pub fn subgraph_to_word(g: &CycleSubgraph) -> Word {
    profile_to_word(&subgraph_to_profile(g))
}
