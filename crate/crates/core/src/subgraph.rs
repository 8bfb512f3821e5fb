use std::fmt;

use crate::error::{Error, Result};
use crate::params::CycleParams;
use crate::Class;

/// One connected component of a subgraph: the path `P(start, start + edge_count)`
/// walked in increasing direction around the cycle. `edge_count == 0` is an
/// isolated vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    start: usize,
    edge_count: usize,
}

impl Arc {
    pub fn new(start: usize, edge_count: usize) -> Self {
        Arc { start, edge_count }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_isolated(&self) -> bool {
        self.edge_count == 0
    }

    /// Terminal vertex, reduced mod `2n`.
    pub fn end(&self, params: CycleParams) -> usize {
        params.wrap(self.start + self.edge_count)
    }

    pub fn vertices(&self, params: CycleParams) -> impl Iterator<Item = usize> {
        let (start, len) = (self.start, params.cycle_len());
        (0..=self.edge_count).map(move |i| (start + i) % len)
    }

    /// Edge ids on this arc; edge id `i` is `{i, i + 1 mod 2n}`.
    pub fn edge_ids(&self, params: CycleParams) -> impl Iterator<Item = usize> {
        let (start, len) = (self.start, params.cycle_len());
        (0..self.edge_count).map(move |i| (start + i) % len)
    }

    pub fn contains(&self, v: usize, params: CycleParams) -> bool {
        let offset = (v + params.cycle_len() - self.start) % params.cycle_len();
        offset <= self.edge_count
    }
}

/// Explicit vertex sequence and edge list of an arc.
pub fn expand_arc(a: Arc, params: CycleParams) -> (Vec<usize>, Vec<(usize, usize)>) {
    let vertices: Vec<usize> = a.vertices(params).collect();
    let edges = vertices.windows(2).map(|e| (e[0], e[1])).collect();
    (vertices, edges)
}

/// A subgraph of the cycle with `n` edges and `k` components, stored as its
/// arcs sorted by start vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleSubgraph {
    params: CycleParams,
    arcs: Vec<Arc>,
}

impl CycleSubgraph {
    pub fn from_arcs(params: CycleParams, mut arcs: Vec<Arc>) -> Result<Self> {
        let len = params.cycle_len();
        for a in &arcs {
            if a.start >= len {
                return Err(Error::VertexOutOfRange {
                    vertex: a.start,
                    len,
                });
            }
            if a.edge_count > params.n() {
                return Err(Error::ArcTooLong {
                    start: a.start,
                    edge_count: a.edge_count,
                    max: params.n(),
                });
            }
        }
        let edges: usize = arcs.iter().map(|a| a.edge_count).sum();
        if edges != params.n() {
            return Err(Error::WrongEdgeCount {
                expected: params.n(),
                found: edges,
            });
        }
        if arcs.len() != params.k() {
            return Err(Error::WrongComponentCount {
                expected: params.k(),
                found: arcs.len(),
            });
        }
        let mut owner: Vec<Option<usize>> = vec![None; len];
        for a in &arcs {
            for v in a.vertices(params) {
                if let Some(other) = owner[v].replace(a.start) {
                    return Err(Error::ArcsIntersect {
                        first: other,
                        second: a.start,
                    });
                }
            }
        }
        arcs.sort_unstable();
        Ok(CycleSubgraph { params, arcs })
    }

    /// `arcs` must already be a valid, canonically sorted arc set.
    pub(crate) fn new_unchecked(params: CycleParams, arcs: Vec<Arc>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(CycleSubgraph::from_arcs(params, arcs.clone()).is_ok());
        CycleSubgraph { params, arcs }
    }

    pub fn params(&self) -> CycleParams {
        self.params
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Sorted edge ids and sorted isolated vertices.
    pub fn to_edges(&self) -> (Vec<usize>, Vec<usize>) {
        let mut edges: Vec<usize> = self
            .arcs
            .iter()
            .flat_map(|a| a.edge_ids(self.params))
            .collect();
        edges.sort_unstable();
        let isolated = self
            .arcs
            .iter()
            .filter(|a| a.is_isolated())
            .map(|a| a.start)
            .collect();
        (edges, isolated)
    }
}

impl fmt::Display for CycleSubgraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.arcs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "P({},{})", a.start, a.end(self.params))?;
        }
        f.write_str("}")
    }
}

/// Star iff vertex 0 lies on no arc.
pub fn classify_subgraph(g: &CycleSubgraph) -> Class {
    if g.arcs.iter().any(|a| a.contains(0, g.params)) {
        Class::Zero
    } else {
        Class::Star
    }
}

/// Maximal runs of chosen edges as arcs, in increasing order of start.
pub(crate) fn group_edges(chosen: &[bool]) -> Result<Vec<Arc>> {
    let len = chosen.len();
    if chosen.iter().all(|&c| c) {
        return Err(Error::FullCycle);
    }
    let mut arcs = Vec::new();
    for i in 0..len {
        if chosen[i] && !chosen[(i + len - 1) % len] {
            let run = (0..len).take_while(|&j| chosen[(i + j) % len]).count();
            arcs.push(Arc::new(i, run));
        }
    }
    Ok(arcs)
}

/// Builds a subgraph from edge ids (`i` meaning `{i, i + 1 mod 2n}`) and
/// isolated vertices. Duplicate ids are merged.
pub fn normalize_edges(
    edge_ids: &[usize],
    isolated: &[usize],
    params: CycleParams,
) -> Result<CycleSubgraph> {
    let len = params.cycle_len();
    let mut chosen = vec![false; len];
    for &e in edge_ids {
        if e >= len {
            return Err(Error::EdgeOutOfRange { edge: e, len });
        }
        chosen[e] = true;
    }
    let mut lone = vec![false; len];
    for &v in isolated {
        if v >= len {
            return Err(Error::VertexOutOfRange { vertex: v, len });
        }
        lone[v] = true;
    }

    let mut arcs = group_edges(&chosen)?;
    for v in (0..len).filter(|&v| lone[v]) {
        if chosen[v] || chosen[(v + len - 1) % len] {
            return Err(Error::Overlap { vertex: v });
        }
        arcs.push(Arc::new(v, 0));
    }

    let edges = chosen.iter().filter(|&&c| c).count();
    if edges != params.n() {
        return Err(Error::WrongEdgeCount {
            expected: params.n(),
            found: edges,
        });
    }
    if arcs.len() != params.k() {
        return Err(Error::WrongComponentCount {
            expected: params.k(),
            found: arcs.len(),
        });
    }
    arcs.sort_unstable();
    Ok(CycleSubgraph::new_unchecked(params, arcs))
}
