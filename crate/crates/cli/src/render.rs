use std::fmt::Write;

use cyclewords::CycleSubgraph;

/// `arc s..e (l edges)` per arc with edges, `isolated v` per isolated vertex,
/// in canonical arc order.
pub fn ascii(g: &CycleSubgraph) -> String {
    let mut out = String::new();
    for a in g.arcs() {
        if a.is_isolated() {
            writeln!(out, "isolated {}", a.start()).unwrap();
        } else {
            writeln!(
                out,
                "arc {}..{} ({} edges)",
                a.start(),
                a.end(g.params()),
                a.edge_count()
            )
            .unwrap();
        }
    }
    out
}

/// The whole cycle as an undirected DOT graph: chosen edges solid, the rest
/// dotted.
pub fn dot(g: &CycleSubgraph) -> String {
    let params = g.params();
    let len = params.cycle_len();
    let (edges, _) = g.to_edges();
    let mut chosen = vec![false; len];
    for e in edges {
        chosen[e] = true;
    }
    let mut out = String::new();
    writeln!(out, "graph cycle_{}_{} {{", params.n(), params.k()).unwrap();
    for v in 0..len {
        writeln!(out, "  v{v} [label=\"{v}\"];").unwrap();
    }
    for (i, &on) in chosen.iter().enumerate() {
        let style = if on { "solid" } else { "dotted" };
        writeln!(out, "  v{} -- v{} [style={style}];", i, (i + 1) % len).unwrap();
    }
    out.push_str("}\n");
    out
}
