//! Versioned JSON and TSV renderings of trees and path answers.
//!
//! JSON documents carry a `schema` field; TSV output starts with a
//! `# schema` header line followed by the column names.

use std::io::Write;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{TemporalEdge, TemporalGraph, VertexId};
use crate::paths::{PathAnswer, PathValue};
use crate::time::Time;
use crate::traversal::{EdgeLabel, TraversalKind, TraversalTree};

pub const TREE_SCHEMA: &str = "tempotrav.tree/1";
pub const PATHS_SCHEMA: &str = "tempotrav.paths/1";

pub fn label_name(label: EdgeLabel) -> &'static str {
    match label {
        EdgeLabel::Tree => "tree",
        EdgeLabel::Forward => "forward",
        EdgeLabel::Backward => "backward",
        EdgeLabel::Cross => "cross",
        EdgeLabel::NonTree => "non-tree",
        EdgeLabel::NonTraversed => "non-traversed",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeJson<T> {
    pub src: String,
    pub dst: String,
    pub t: T,
}

impl<T: Time> EdgeJson<T> {
    fn new(g: &TemporalGraph<T>, e: TemporalEdge<T>) -> Self {
        EdgeJson { src: g.label(e.src), dst: g.label(e.dst), t: e.t }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OccurrenceJson<T> {
    pub occ: u32,
    pub vertex: String,
    pub parent: Option<u32>,
    pub sigma: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dist: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entry: Option<EdgeJson<T>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifiedEdgeJson<T> {
    pub src: String,
    pub dst: String,
    pub t: T,
    pub label: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeDocument<T> {
    pub schema: &'static str,
    pub kind: TraversalKind,
    pub source: String,
    pub t_s: T,
    /// Stand-in for an unvisited vertex's infinite visit time.
    pub sentinel: T,
    pub reachable: Vec<String>,
    pub traversed: usize,
    pub occurrences: Vec<OccurrenceJson<T>>,
    pub classification: Vec<ClassifiedEdgeJson<T>>,
}

pub fn tree_document<T: Time>(g: &TemporalGraph<T>, tree: &TraversalTree<T>) -> TreeDocument<T> {
    let bfs = tree.kind() == TraversalKind::Bfs;
    let occurrences = tree
        .occurrences()
        .iter()
        .enumerate()
        .map(|(i, o)| OccurrenceJson {
            occ: i as u32,
            vertex: g.label(o.vertex()),
            parent: o.parent(),
            sigma: o.sigma(),
            dist: bfs.then_some(o.dist()),
            entry: tree.entry_edge(i as u32).map(|e| EdgeJson::new(g, e)),
        })
        .collect();
    let labels = tree.labels(g);
    let classification = g
        .edges()
        .zip(labels)
        .map(|(e, l)| ClassifiedEdgeJson {
            src: g.label(e.src),
            dst: g.label(e.dst),
            t: e.t,
            label: label_name(l),
        })
        .collect();
    TreeDocument {
        schema: TREE_SCHEMA,
        kind: tree.kind(),
        source: g.label(tree.source()),
        t_s: tree.start_time(),
        sentinel: T::sentinel(),
        reachable: tree.reachable_set().into_iter().map(|v| g.label(v)).collect(),
        traversed: tree.log().len(),
        occurrences,
        classification,
    }
}

/// Occurrence table followed by the edge classification table.
pub fn write_tree_tsv<T: Time, W: Write>(g: &TemporalGraph<T>, tree: &TraversalTree<T>, mut out: W) -> Result<()> {
    writeln!(out, "# {TREE_SCHEMA} kind={} source={} t_s={}", tree.kind().name(), g.label(tree.source()), tree.start_time())?;
    writeln!(out, "occ\tvertex\tparent\tsigma\tdist\tentry_src\tentry_dst\tentry_t")?;
    for (i, o) in tree.occurrences().iter().enumerate() {
        let parent = o.parent().map_or(String::from("-"), |p| p.to_string());
        let entry = tree
            .entry_edge(i as u32)
            .map_or(String::from("-\t-\t-"), |e| format!("{}\t{}\t{}", g.label(e.src), g.label(e.dst), e.t));
        writeln!(out, "{i}\t{}\t{parent}\t{}\t{}\t{entry}", g.label(o.vertex()), o.sigma(), o.dist())?;
    }
    writeln!(out, "src\tdst\tt\tlabel")?;
    for (e, l) in g.edges().zip(tree.labels(g)) {
        writeln!(out, "{}\t{}\t{}\t{}", g.label(e.src), g.label(e.dst), e.t, label_name(l))?;
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct PathRecord<T> {
    pub vertex_label: String,
    #[serde(flatten)]
    pub value: PathValue<T>,
    pub path: Vec<EdgeJson<T>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PathsDocument<T> {
    pub schema: &'static str,
    pub objective: &'static str,
    pub source: String,
    pub t_s: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_x: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_y: Option<T>,
    pub records: Vec<PathRecord<T>>,
}

/// Answers per vertex id; unreachable vertices are `None` and get omitted.
pub struct PathsInput<'a, T> {
    pub objective: &'static str,
    pub source: VertexId,
    pub t_s: T,
    pub window: Option<(T, T)>,
    pub answers: &'a [Option<(PathValue<T>, PathAnswer<T>)>],
}

pub fn paths_document<T: Time>(g: &TemporalGraph<T>, input: PathsInput<'_, T>) -> PathsDocument<T> {
    let records = input
        .answers
        .iter()
        .enumerate()
        .filter_map(|(v, a)| {
            a.as_ref().map(|(value, path)| PathRecord {
                vertex_label: g.label(VertexId(v as u32)),
                value: *value,
                path: path.edges().iter().map(|&e| EdgeJson::new(g, e)).collect(),
            })
        })
        .collect();
    PathsDocument {
        schema: PATHS_SCHEMA,
        objective: input.objective,
        source: g.label(input.source),
        t_s: input.t_s,
        t_x: input.window.map(|w| w.0),
        t_y: input.window.map(|w| w.1),
        records,
    }
}

pub fn write_paths_tsv<T: Time, W: Write>(doc: &PathsDocument<T>, mut out: W) -> Result<()> {
    writeln!(out, "# {PATHS_SCHEMA} objective={} source={} t_s={}", doc.objective, doc.source, doc.t_s)?;
    writeln!(out, "vertex_label\t{}\tpath", doc.objective_column())?;
    for r in &doc.records {
        let value = match r.value {
            PathValue::Arrival(t) | PathValue::Duration(t) => t.to_string(),
            PathValue::Hops(h) => h.to_string(),
        };
        let path: Vec<String> = r.path.iter().map(|e| format!("{}>{}@{}", e.src, e.dst, e.t)).collect();
        writeln!(out, "{}\t{value}\t{}", r.vertex_label, path.join(","))?;
    }
    Ok(())
}

impl<T> PathsDocument<T> {
    fn objective_column(&self) -> &'static str {
        match self.objective {
            "fastest" => "duration",
            "shortest" => "hops",
            _ => "arrival",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::traversal::dfs_v1;

    #[test]
    fn tree_json_shape() {
        let g = fixtures::g1();
        let tree = dfs_v1(&g, VertexId(0), 2).unwrap();
        let v = serde_json::to_value(tree_document(&g, &tree)).unwrap();
        assert_eq!(v["schema"], TREE_SCHEMA);
        assert_eq!(v["kind"], "dfs-v1");
        assert_eq!(v["occurrences"][0]["parent"], serde_json::Value::Null);
        assert!(v["occurrences"][0].get("entry").is_none());
        assert!(v["occurrences"][1].get("dist").is_none());
        assert_eq!(v["classification"].as_array().unwrap().len(), 12);
    }

    #[test]
    fn path_record_flattens_value() {
        let g = fixtures::g5();
        let answers = vec![
            None,
            Some((PathValue::Hops(1), PathAnswer::new(vec![TemporalEdge::new(0, 1, 2)]))),
        ];
        let doc = paths_document(
            &g,
            PathsInput { objective: "shortest", source: VertexId(0), t_s: 0, window: None, answers: &answers },
        );
        let v = serde_json::to_value(&doc).unwrap();
        assert_eq!(v["records"][0]["hops"], 1);
        assert_eq!(v["records"][0]["vertex_label"], "b");
        assert_eq!(v["records"][0]["path"][0]["src"], "a");
        let mut tsv = Vec::new();
        write_paths_tsv(&doc, &mut tsv).unwrap();
        let text = String::from_utf8(tsv).unwrap();
        assert!(text.starts_with("# tempotrav.paths/1"));
        assert!(text.contains("b\t1\ta>b@2"));
    }
}
