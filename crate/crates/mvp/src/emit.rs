//! Renderers for crystal graphs: a JSON document and a DOT digraph. Both
//! use 1-based letters on edges and coroot coordinates for weights.

use serde::Serialize;

use mv_polytopes::crystal::CrystalGraph;

#[derive(Serialize)]
struct GraphFile<'a> {
    #[serde(rename = "type")]
    type_name: &'a str,
    word: Vec<usize>,
    kind: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    depth: Option<usize>,
    root: usize,
    nodes: Vec<GraphNode>,
    edges: Vec<GraphEdge>,
}

#[derive(Serialize)]
struct GraphNode {
    id: usize,
    weight: Vec<i64>,
    lusztig: Vec<i64>,
    depth: usize,
}

#[derive(Serialize)]
struct GraphEdge {
    from: usize,
    j: usize,
    to: usize,
}

/// Exactly one of `lambda` (highest-weight crystal) and `depth` (ball in
/// the stable crystal) is set, matching how the graph was built.
pub fn graph_json(
    type_name: &str,
    lambda: Option<Vec<i64>>,
    depth: Option<usize>,
    graph: &CrystalGraph,
) -> String {
    let kind = if lambda.is_some() { "highest-weight" } else { "stable-depth" };
    let doc = GraphFile {
        type_name,
        word: graph.word.iter().map(|&j| j + 1).collect(),
        kind,
        lambda,
        depth,
        root: graph.root,
        nodes: graph
            .nodes
            .iter()
            .enumerate()
            .map(|(id, n)| GraphNode {
                id,
                weight: n.weight.clone(),
                lusztig: n.lusztig.clone(),
                depth: n.depth,
            })
            .collect(),
        edges: graph
            .edges
            .iter()
            .map(|&(from, j, to)| GraphEdge { from, j: j + 1, to })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
    out.push('\n');
    out
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn graph_dot(graph: &CrystalGraph) -> String {
    let mut out = String::from("digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n");
    for (id, node) in graph.nodes.iter().enumerate() {
        out.push_str(&format!(
            "  n{} [label=\"{}\\nwt {}\"];\n",
            id,
            tuple(&node.lusztig),
            tuple(&node.weight)
        ));
    }
    for &(from, j, to) in &graph.edges {
        out.push_str(&format!("  n{from} -> n{to} [label=\"{}\"];\n", j + 1));
    }
    out.push_str("}\n");
    out
}
