use super::{Label, MdTree, TreeBuilder};
use crate::error::{Error, Result};
use serde_json::{json, Value};
use std::fmt::Write;

impl MdTree {
    /// Nested `{"label", "vertex"?, "children"}` objects in canonical child order.
    pub fn to_json(&self) -> Value {
        // Iterative post-order so deep cotrees do not exhaust the stack.
        let k = self.len();
        let mut built: Vec<Option<Value>> = vec![None; k];
        for i in (0..k).rev() {
            let v = match self.label(i) {
                Label::Leaf(x) => json!({"label": "leaf", "vertex": x}),
                l => {
                    let ch: Vec<Value> =
                        self.children(i).iter().map(|&c| built[c].take().unwrap()).collect();
                    json!({"label": l.name(), "children": ch})
                }
            };
            built[i] = Some(v);
        }
        built[0].take().unwrap()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).unwrap()
    }

    /// Parses the JSON layout written by [`to_json`](Self::to_json).
    pub fn from_json(text: &str) -> Result<MdTree> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
        let mut b = TreeBuilder::new();
        let mut n = 0;
        let root = parse_node(&v, &mut b, &mut n)?;
        if (0..b.len()).any(|i| !b.label(i).is_leaf() && b.children(i).len() < 2) {
            return Err(Error::InvalidTree("internal node with fewer than two children".into()));
        }
        b.finish(n, root)
    }

    /// Graphviz rendering; node `i` is drawn as `ni`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph md {\n");
        for i in 0..self.len() {
            match self.label(i) {
                Label::Leaf(v) => writeln!(s, "  n{i} [label=\"{v}\", shape=circle];").unwrap(),
                l => writeln!(s, "  n{i} [label=\"{}\", shape=box];", l.name()).unwrap(),
            }
        }
        for i in 0..self.len() {
            for &c in self.children(i) {
                writeln!(s, "  n{i} -- n{c};").unwrap();
            }
        }
        s.push_str("}\n");
        s
    }

    /// One node per line, indented by depth: `series`, `prime`, `leaf 3`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for i in 0..self.len() {
            let pad = "  ".repeat(self.depth(i));
            match self.label(i) {
                Label::Leaf(v) => writeln!(s, "{pad}leaf {v}").unwrap(),
                l => writeln!(s, "{pad}{} {:?}", l.name(), self.vertices(i)).unwrap(),
            }
        }
        s
    }
}

fn parse_node(v: &Value, b: &mut TreeBuilder, n: &mut usize) -> Result<usize> {
    let bad = |m: &str| Error::InvalidTree(m.to_string());
    let label = v.get("label").and_then(Value::as_str).ok_or_else(|| bad("missing label"))?;
    let children = match v.get("children") {
        None => Vec::new(),
        Some(c) => c.as_array().ok_or_else(|| bad("children must be an array"))?.clone(),
    };
    let l = match label {
        "leaf" => {
            let x = v.get("vertex").and_then(Value::as_u64).ok_or_else(|| bad("leaf without vertex"))?;
            if !children.is_empty() {
                return Err(bad("leaf with children"));
            }
            *n = (*n).max(x as usize + 1);
            return Ok(b.leaf(x as usize));
        }
        "series" => Label::Series,
        "parallel" => Label::Parallel,
        "prime" => Label::Prime,
        other => return Err(bad(&format!("unknown label {other}"))),
    };
    let mut ids = Vec::with_capacity(children.len());
    for c in &children {
        ids.push(parse_node(c, b, n)?);
    }
    Ok(b.node(l, ids))
}
