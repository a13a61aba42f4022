use super::graph::{Color, PlabicGraph};

/// Graphviz text: boundary vertices `b1 … bn`, interior vertices `v<id>`, then the face labels
/// as comments when the graph is reduced. Output depends only on the graph.
pub fn export_dot(g: &PlabicGraph) -> String {
    let mut out = String::from("graph plabic {\n");
    out.push_str(&format!("  // n = {}\n", g.n()));
    for b in 0..g.n() {
        out.push_str(&format!("  b{} [shape=box, label=\"{}\"];\n", b + 1, b + 1));
    }
    let name = |v: usize| if v < g.n() { format!("b{}", v + 1) } else { format!("v{v}") };
    for v in g.interior_vertices() {
        let fill = match g.color(v) {
            Some(Color::Black) => "black",
            _ => "white",
        };
        out.push_str(&format!("  v{v} [shape=circle, style=filled, fillcolor={fill}, label=\"\"];\n"));
    }
    for e in g.edges() {
        out.push_str(&format!("  {} -- {};\n", name(g.org(2 * e)), name(g.head(2 * e))));
    }
    if let Ok(labels) = g.face_labels() {
        let mut faces: Vec<(String, Vec<String>)> = labels
            .labels
            .iter()
            .zip(&labels.darts)
            .map(|(s, ds)| {
                let mut vs: Vec<usize> = ds.iter().map(|&h| g.org(h)).collect();
                vs.sort_unstable();
                vs.dedup();
                (s.to_string(), vs.into_iter().map(name).collect())
            })
            .collect();
        faces.sort();
        for (s, vs) in faces {
            out.push_str(&format!("  // face {s}: {}\n", vs.join(" ")));
        }
    }
    out.push_str("}\n");
    out
}
