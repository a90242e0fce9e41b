//! Plain-text edge lists: one `SRC DST T` triple per line.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BuildReport, Labels, TemporalGraph};
use crate::time::Time;

#[derive(Clone, Copy, Debug)]
pub struct LoadOptions {
    pub directed: bool,
    pub dedupe: bool,
    /// Koblenz `out.*` layout: `SRC DST [WEIGHT] T`, `%` comments.
    pub koblenz: bool,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            directed: true,
            dedupe: false,
            koblenz: false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LoadReport {
    pub lines: usize,
    pub duplicates_dropped: usize,
    pub self_loops_dropped: usize,
}

pub fn load_edge_list<T: Time, R: BufRead>(
    reader: R,
    options: LoadOptions,
) -> Result<(TemporalGraph<T>, LoadReport)> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, u32> = HashMap::new();
    let mut intern = |s: &str| -> u32 {
        if let Some(&i) = index.get(s) {
            return i;
        }
        let i = names.len() as u32;
        names.push(s.to_string());
        index.insert(s.to_string(), i);
        i
    };

    let mut edges = Vec::new();
    let mut lines = 0;
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') || (options.koblenz && body.starts_with('%')) {
            continue;
        }
        lines += 1;
        let cols: Vec<&str> = body.split_whitespace().collect();
        let ok = if options.koblenz {
            (3..=4).contains(&cols.len())
        } else {
            cols.len() == 3
        };
        if !ok {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected `SRC DST T`, found {} columns", cols.len()),
            });
        }
        let t = parse_time::<T>(cols[cols.len() - 1], lineno)?;
        let u = intern(cols[0]);
        let v = intern(cols[1]);
        edges.push((u, v, t));
        if !options.directed {
            edges.push((v, u, t));
        }
    }

    let n = names.len();
    let (graph, BuildReport { duplicates_dropped, self_loops_dropped }) =
        TemporalGraph::from_edges(n, edges, Labels::from_names(names), options.dedupe)?;
    Ok((
        graph,
        LoadReport {
            lines,
            duplicates_dropped,
            self_loops_dropped,
        },
    ))
}

fn parse_time<T: Time>(token: &str, line: usize) -> Result<T> {
    let wide: i128 = token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("`{token}` is not an integer timestamp"),
    })?;
    match T::from(wide) {
        Some(t) if !t.is_sentinel() => Ok(t),
        _ => Err(Error::Range {
            line,
            value: token.to_string(),
        }),
    }
}

/// Writes every edge as `SRC DST T` using the graph's labels.
pub fn write_edge_list<T: Time, W: Write>(g: &TemporalGraph<T>, mut out: W) -> Result<()> {
    for e in g.edges() {
        writeln!(out, "{} {} {}", g.label(e.src), g.label(e.dst), e.t)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn load(text: &str, options: LoadOptions) -> Result<(TemporalGraph<i64>, LoadReport)> {
        load_edge_list(text.as_bytes(), options)
    }

    #[test]
    fn message_example() {
        let (g, _) = load("a b 1\na b 6\nb a 8", LoadOptions::default()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 3));
        let a = g.resolve("a").unwrap();
        let out: Vec<_> = g.out_edges(a).map(|(v, t)| (g.label(v), t)).collect();
        assert_eq!(out, vec![("b".to_string(), 1), ("b".to_string(), 6)]);
    }

    #[test]
    fn empty_stream() {
        let (g, _) = load("", LoadOptions::default()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (0, 0));
    }

    #[test]
    fn comments_blanks_and_self_loops() {
        let text = "# header\n\nx y 3\nx x 4\n  # indented comment\n";
        let (g, r) = load(text, LoadOptions::default()).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(r.self_loops_dropped, 1);
        // the self-loop still introduces no new vertex beyond x
        assert_eq!(g.vertex_count(), 2);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        match load("a b 1\na b\n", LoadOptions::default()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match load("a b 1.5\n", LoadOptions::default()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn overflow_is_range_error() {
        let r: Result<(TemporalGraph<i32>, _)> =
            load_edge_list("a b 3000000000\n".as_bytes(), LoadOptions::default());
        assert!(matches!(r, Err(Error::Range { line: 1, .. })));
        let r = load("a b 99999999999999999999\n", LoadOptions::default());
        assert!(matches!(r, Err(Error::Range { .. })));
    }

    #[test]
    fn duplicates() {
        let text = "a b 1\na b 1\n";
        assert!(matches!(load(text, LoadOptions::default()), Err(Error::Duplicate { .. })));
        let opts = LoadOptions { dedupe: true, ..Default::default() };
        let (g, r) = load(text, opts).unwrap();
        assert_eq!((g.edge_count(), r.duplicates_dropped), (1, 1));
    }

    #[test]
    fn undirected_doubles_edges() {
        let opts = LoadOptions { directed: false, ..Default::default() };
        let (g, _) = load("a b 1\n", opts).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.out_degree(VertexId(1)), 1);
    }

    #[test]
    fn koblenz_layout() {
        let opts = LoadOptions { koblenz: true, ..Default::default() };
        let (g, _) = load("% sym unweighted\n1 2 1 100\n2 3 200\n", opts).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.snapshots(), vec![100, 200]);
        assert!(load("1 2 1 100\n", LoadOptions::default()).is_err());
    }
}
