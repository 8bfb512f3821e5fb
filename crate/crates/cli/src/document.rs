use std::collections::BTreeSet;

use cyclewords::{normalize_edges, CycleParams, CycleSubgraph, Error};
use serde::{Deserialize, Serialize};

/// On-disk subgraph: edge id `i` is the edge `{i, i + 1 mod 2n}`; isolated
/// vertices are listed separately. Serialized with sorted arrays and keys in
/// the order `n`, `edges`, `isolated`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgraphDocument {
    pub n: usize,
    pub edges: Vec<usize>,
    pub isolated: Vec<usize>,
}

#[derive(Debug)]
pub enum DocumentError {
    /// The document itself is unusable: bad JSON, out-of-range or repeated
    /// ids, or an isolated vertex touching an edge.
    Malformed(String),
    /// Well-formed, but not a subgraph with the requested edge and component counts.
    Mismatch(String),
}

impl SubgraphDocument {
    pub fn from_subgraph(g: &CycleSubgraph) -> Self {
        let (edges, isolated) = g.to_edges();
        SubgraphDocument {
            n: g.params().n(),
            edges,
            isolated,
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: SubgraphDocument =
            serde_json::from_str(text).map_err(|e| DocumentError::Malformed(e.to_string()))?;
        if doc.n == 0 {
            return Err(DocumentError::Malformed("n must be positive".into()));
        }
        let len = 2 * doc.n;
        for (what, ids) in [("edge id", &doc.edges), ("isolated vertex", &doc.isolated)] {
            let mut seen = BTreeSet::new();
            for &id in ids {
                if id >= len {
                    return Err(DocumentError::Malformed(format!(
                        "{what} {id} is outside 0..{len}"
                    )));
                }
                if !seen.insert(id) {
                    return Err(DocumentError::Malformed(format!("{what} {id} is repeated")));
                }
            }
        }
        Ok(doc)
    }

    pub fn to_subgraph(&self, k: usize) -> Result<CycleSubgraph, DocumentError> {
        let params =
            CycleParams::new(self.n, k).map_err(|e| DocumentError::Malformed(e.to_string()))?;
        normalize_edges(&self.edges, &self.isolated, params).map_err(|e| match e {
            Error::WrongEdgeCount { .. } | Error::WrongComponentCount { .. } | Error::FullCycle => {
                DocumentError::Mismatch(e.to_string())
            }
            other => DocumentError::Malformed(other.to_string()),
        })
    }

    pub fn to_json(&self) -> String {
        let mut doc = self.clone();
        doc.edges.sort_unstable();
        doc.isolated.sort_unstable();
        serde_json::to_string(&doc).expect("plain integers always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_json() {
        let doc = SubgraphDocument {
            n: 2,
            edges: vec![3, 2],
            isolated: vec![1],
        };
        assert_eq!(doc.to_json(), r#"{"n":2,"edges":[2,3],"isolated":[1]}"#);
    }

    #[test]
    fn rejects_bad_documents() {
        for text in [
            "not json",
            r#"{"n":2,"edges":[1,2]}"#,
            r#"{"n":2,"edges":[1,2],"isolated":[],"extra":1}"#,
            r#"{"n":0,"edges":[],"isolated":[]}"#,
            r#"{"n":2,"edges":[1,4],"isolated":[]}"#,
            r#"{"n":2,"edges":[1,1],"isolated":[]}"#,
            r#"{"n":2,"edges":[-1,1],"isolated":[]}"#,
        ] {
            assert!(
                matches!(
                    SubgraphDocument::parse(text),
                    Err(DocumentError::Malformed(_))
                ),
                "{text}"
            );
        }
    }

    #[test]
    fn count_errors_are_mismatches() {
        let doc = SubgraphDocument::parse(r#"{"n":2,"edges":[1,2],"isolated":[]}"#).unwrap();
        assert!(matches!(
            doc.to_subgraph(2),
            Err(DocumentError::Mismatch(_))
        ));
        let doc = SubgraphDocument::parse(r#"{"n":2,"edges":[1],"isolated":[]}"#).unwrap();
        assert!(matches!(
            doc.to_subgraph(1),
            Err(DocumentError::Mismatch(_))
        ));
        let doc = SubgraphDocument::parse(r#"{"n":2,"edges":[1,2],"isolated":[1]}"#).unwrap();
        assert!(matches!(
            doc.to_subgraph(2),
            Err(DocumentError::Malformed(_))
        ));
    }
}
