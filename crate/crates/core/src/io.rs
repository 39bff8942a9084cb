//! Text and JSON formats for graphs and cluster-editing instances.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kernel::EditInstance;
use serde_json::{json, Value};

fn content(line: &str) -> &str {
    line.split('#').next().unwrap().trim()
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse { line: lineno, msg: format!("expected an integer, got {t:?}") }))
        .collect()
}

/// Parses `n m` then `m` lines `u v` (0-based). `#` starts a comment.
///
/// ```
/// use modtree::parse_edge_list;
/// let g = parse_edge_list("# triangle\n3 3\n0 1\n1 2\n0 2\n").unwrap();
/// assert_eq!((g.n(), g.m()), (3, 3));
/// ```
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edges(text, false).map(|(g, _)| g)
}

fn parse_edges(text: &str, trailer: bool) -> Result<(Graph, Option<usize>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut k = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        last = lineno;
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: lineno, msg };
        if let Some(rest) = line.strip_prefix('k').filter(|_| trailer) {
            if k.is_some() {
                return Err(err("second k line".into()));
            }
            let v = numbers(rest, lineno)?;
            if v.len() != 1 {
                return Err(err("expected `k <int>`".into()));
            }
            k = Some(v[0]);
            continue;
        }
        if k.is_some() {
            return Err(err("`k` must be the last line".into()));
        }
        let v = numbers(line, lineno)?;
        if v.len() != 2 {
            return Err(err(format!("expected two integers, got {}", v.len())));
        }
        let Some((n, _)) = header else {
            header = Some((v[0], v[1]));
            continue;
        };
        let (u, w) = (v[0], v[1]);
        if u >= n || w >= n {
            return Err(err(format!("vertex {} out of range for n = {n}", u.max(w))));
        }
        if u == w {
            return Err(err(format!("self-loop at {u}")));
        }
        edges.push((u, w));
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse { line: last.max(1), msg: "missing `n m` header".into() });
    };
    if edges.len() != m {
        return Err(Error::Parse { line: last.max(1), msg: format!("header says {m} edges, found {}", edges.len()) });
    }
    if trailer && k.is_none() {
        return Err(Error::Parse { line: last.max(1), msg: "missing `k <int>` line".into() });
    }
    Ok((Graph::from_edge_list(n, &edges)?, k))
}

/// `n m` header and one sorted edge per line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// `{"n":..,"edges":[[u,v],..]}` with edges sorted.
pub fn graph_to_json(g: &Graph) -> Value {
    json!({"n": g.n(), "edges": g.edges().map(|(u, v)| json!([u, v])).collect::<Vec<_>>()})
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    let bad = |msg: &str| Error::Parse { line: 1, msg: msg.into() };
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing integer `n`"))? as usize;
    let list = v.get("edges").and_then(Value::as_array).ok_or_else(|| bad("missing array `edges`"))?;
    let mut edges = Vec::with_capacity(list.len());
    for e in list {
        let pair = e.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("edge is not a pair"))?;
        let u = pair[0].as_u64().ok_or_else(|| bad("edge endpoint is not an integer"))? as usize;
        let w = pair[1].as_u64().ok_or_else(|| bad("edge endpoint is not an integer"))? as usize;
        edges.push((u, w));
    }
    Graph::from_edge_list(n, &edges)
}

/// Edge list followed by a `k <int>` line.
pub fn parse_instance(text: &str) -> Result<EditInstance> {
    let (graph, k) = parse_edges(text, true)?;
    Ok(EditInstance { graph, k: k.unwrap() })
}

pub fn write_instance(inst: &EditInstance) -> String {
    format!("{}k {}\n", write_edge_list(&inst.graph), inst.k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_errors_carry_lines() {
        let cases = [
            ("", 1),
            ("2 1\n0 x\n", 2),
            ("2 1\n0 2\n", 2),
            ("2 1\n1 1\n", 2),
            ("3 2\n0 1\n", 2),
            ("3 1\n0 1 2\n", 2),
        ];
        for (text, line) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# hi\n\n4 2 # header\n0 1\n\n2 3 # last\n").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert_eq!(write_edge_list(&g), "4 2\n0 1\n2 3\n");
    }

    #[test]
    fn json_layout() {
        let g = Graph::from_edge_list(3, &[(2, 1), (0, 1)]).unwrap();
        assert_eq!(graph_to_json(&g).to_string(), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(graph_from_json(r#"{"n":3,"edges":[[1,2],[0,1]]}"#).unwrap(), g);
        assert!(graph_from_json(r#"{"n":3,"edges":[[1]]}"#).is_err());
        assert!(graph_from_json("[").is_err());
    }

    #[test]
    fn instances() {
        let inst = parse_instance("3 2\n0 1\n1 2\nk 1\n").unwrap();
        assert_eq!(inst.k, 1);
        assert_eq!(write_instance(&inst), "3 2\n0 1\n1 2\nk 1\n");
        assert!(matches!(parse_instance("3 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_instance("3 0\nk 1\n0 1\n"), Err(Error::Parse { line: 3, .. })));
    }
}
