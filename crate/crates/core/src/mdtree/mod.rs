//! The modular decomposition tree and the routines that build and check it.

mod brute;
mod export;
mod family;
mod skeleton;
mod verify;

pub use brute::{modules_bruteforce, strong_modules_bruteforce, BRUTE_FORCE_LIMIT};
pub use family::{build_strong_tree, classify_nodes, strong_members, NodeKind, SetFamily, StrongTree};
pub(crate) use family::laminar_tree;
#[cfg(test)]
pub(crate) use family::overlap;
pub use skeleton::{forcing_graph, md_tree_skeleton, quotient, spine, ForcingGraph, Spine, SpineNode};
pub use verify::{verify_md_tree, verify_md_tree_with, VerifyOptions, Violation};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Node label. Leaves carry their vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Leaf(usize),
    Series,
    Parallel,
    Prime,
}

impl Label {
    pub fn name(self) -> &'static str {
        match self {
            Label::Leaf(_) => "leaf",
            Label::Series => "series",
            Label::Parallel => "parallel",
            Label::Prime => "prime",
        }
    }

    pub fn is_leaf(self) -> bool {
        matches!(self, Label::Leaf(_))
    }

    /// Series and parallel swap; everything else is fixed.
    pub fn flipped(self) -> Label {
        match self {
            Label::Series => Label::Parallel,
            Label::Parallel => Label::Series,
            l => l,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub label: Label,
    pub children: Vec<usize>,
    pub parent: Option<usize>,
}

/// A rooted tree whose leaves are the vertices `0..n`.
///
/// Trees are kept in canonical form: children sorted by their smallest vertex and
/// nodes numbered in preorder, so `==` compares trees up to child order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdTree {
    nodes: Vec<Node>,
    leaf: Vec<usize>,
    order: Vec<usize>,
    span: Vec<(usize, usize)>,
    depth: Vec<usize>,
}

/// Raw node list used to assemble trees before canonicalization.
#[derive(Clone, Debug, Default)]
pub struct TreeBuilder {
    labels: Vec<Label>,
    children: Vec<Vec<usize>>,
}

impl TreeBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn leaf(&mut self, v: usize) -> usize {
        self.labels.push(Label::Leaf(v));
        self.children.push(Vec::new());
        self.labels.len() - 1
    }

    pub fn node(&mut self, label: Label, children: Vec<usize>) -> usize {
        self.labels.push(label);
        self.children.push(children);
        self.labels.len() - 1
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> Label {
        self.labels[i]
    }

    pub fn set_label(&mut self, i: usize, l: Label) {
        self.labels[i] = l;
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub fn children_mut(&mut self, i: usize) -> &mut Vec<usize> {
        &mut self.children[i]
    }

    /// Canonical tree over vertices `0..n` rooted at `root`.
    ///
    /// Unary internal nodes are spliced out. Nodes unreachable from `root` are ignored.
    pub fn finish(self, n: usize, root: usize) -> Result<MdTree> {
        MdTree::assemble(n, &self.labels, &self.children, root, false)
    }

    /// Like [`finish`](Self::finish) but also merges series-in-series and
    /// parallel-in-parallel chains.
    pub fn finish_reduced(self, n: usize, root: usize) -> Result<MdTree> {
        MdTree::assemble(n, &self.labels, &self.children, root, true)
    }
}

impl MdTree {
    /// The single-leaf tree of the one-vertex graph.
    pub fn single() -> MdTree {
        let mut b = TreeBuilder::new();
        let r = b.leaf(0);
        b.finish(1, r).unwrap()
    }

    fn assemble(
        n: usize,
        labels: &[Label],
        children: &[Vec<usize>],
        root: usize,
        reduce: bool,
    ) -> Result<MdTree> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if root >= labels.len() {
            return Err(Error::InvalidTree("root out of range".into()));
        }
        // Flatten: resolve each node's effective children after splicing and merging.
        let mut eff: Vec<Option<Vec<usize>>> = vec![None; labels.len()];
        let mut minv = vec![usize::MAX; labels.len()];
        let mut visited = vec![false; labels.len()];
        let mut stack = vec![(root, false)];
        while let Some((u, done)) = stack.pop() {
            if done {
                if let Label::Leaf(v) = labels[u] {
                    if v >= n {
                        return Err(Error::VertexOutOfRange { vertex: v, n });
                    }
                    minv[u] = v;
                    continue;
                }
                let mut out = Vec::new();
                for &c in &children[u] {
                    let c = skip_unary(c, &eff);
                    let absorb = reduce
                        && matches!(labels[c], Label::Series | Label::Parallel)
                        && labels[c] == labels[u];
                    if absorb {
                        out.extend(eff[c].as_ref().unwrap().iter().copied());
                    } else {
                        out.push(c);
                    }
                }
                if out.is_empty() {
                    return Err(Error::InvalidTree(format!("internal node {u} has no children")));
                }
                out.sort_by_key(|&c| minv[c]);
                minv[u] = minv[out[0]];
                eff[u] = Some(out);
                continue;
            }
            if visited[u] {
                return Err(Error::InvalidTree(format!("node {u} reached twice")));
            }
            visited[u] = true;
            stack.push((u, true));
            if !labels[u].is_leaf() {
                for &c in &children[u] {
                    if c >= labels.len() {
                        return Err(Error::InvalidTree(format!("child {c} out of range")));
                    }
                    stack.push((c, false));
                }
            } else if !children[u].is_empty() {
                return Err(Error::InvalidTree(format!("leaf node {u} has children")));
            }
        }
        let root = skip_unary(root, &eff);

        let mut t = MdTree {
            nodes: Vec::new(),
            leaf: vec![usize::MAX; n],
            order: Vec::with_capacity(n),
            span: Vec::new(),
            depth: Vec::new(),
        };
        // Preorder renumbering.
        let mut stack = vec![(root, None::<usize>)];
        while let Some((u, parent)) = stack.pop() {
            let id = t.nodes.len();
            t.nodes.push(Node { label: labels[u], children: Vec::new(), parent });
            t.depth.push(parent.map_or(0, |p| t.depth[p] + 1));
            if let Some(p) = parent {
                t.nodes[p].children.push(id);
            }
            match labels[u] {
                Label::Leaf(v) => {
                    if t.leaf[v] != usize::MAX {
                        return Err(Error::InvalidTree(format!("vertex {v} appears twice")));
                    }
                    t.leaf[v] = id;
                }
                _ => {
                    for &c in eff[u].as_ref().unwrap().iter().rev() {
                        stack.push((skip_unary(c, &eff), Some(id)));
                    }
                }
            }
        }
        if let Some(v) = t.leaf.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidTree(format!("vertex {v} has no leaf")));
        }
        t.compute_spans();
        Ok(t)
    }

    fn compute_spans(&mut self) {
        // Preorder numbering makes leaves appear in DFS order by id.
        let k = self.nodes.len();
        self.order.clear();
        let mut first = vec![usize::MAX; k];
        for i in 0..k {
            if let Label::Leaf(v) = self.nodes[i].label {
                first[i] = self.order.len();
                self.order.push(v);
            }
        }
        let mut span = vec![(0, 0); k];
        for i in (0..k).rev() {
            span[i] = match self.nodes[i].label {
                Label::Leaf(_) => (first[i], first[i] + 1),
                _ => {
                    let c = &self.nodes[i].children;
                    (span[c[0]].0, span[*c.last().unwrap()].1)
                }
            };
        }
        self.span = span;
    }

    pub fn n(&self) -> usize {
        self.leaf.len()
    }

    pub fn root(&self) -> usize {
        0
    }

    /// Number of nodes, leaves included.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> &Node {
        &self.nodes[i]
    }

    pub fn label(&self, i: usize) -> Label {
        self.nodes[i].label
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.nodes[i].children
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.nodes[i].parent
    }

    pub fn depth(&self, i: usize) -> usize {
        self.depth[i]
    }

    pub fn leaf_of(&self, v: usize) -> usize {
        self.leaf[v]
    }

    /// Vertices in the left-to-right leaf order of the canonical layout.
    pub fn leaf_order(&self) -> &[usize] {
        &self.order
    }

    /// The slice of [`leaf_order`](Self::leaf_order) covered by node `i`.
    pub fn span(&self, i: usize) -> (usize, usize) {
        self.span[i]
    }

    pub fn size(&self, i: usize) -> usize {
        self.span[i].1 - self.span[i].0
    }

    /// Some vertex of node `i` (the smallest one).
    pub fn representative(&self, i: usize) -> usize {
        self.order[self.span[i].0]
    }

    /// Sorted vertex set of node `i`.
    pub fn vertices(&self, i: usize) -> Vec<usize> {
        let (a, b) = self.span[i];
        let mut v = self.order[a..b].to_vec();
        v.sort_unstable();
        v
    }

    /// Sorted list of the vertex sets of all nodes.
    pub fn node_sets(&self) -> Vec<Vec<usize>> {
        let mut s: Vec<Vec<usize>> = (0..self.len()).map(|i| self.vertices(i)).collect();
        s.sort();
        s
    }

    pub fn internal_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| !self.nodes[i].label.is_leaf())
    }

    /// No series child under series and no parallel child under parallel.
    pub fn is_reduced(&self) -> bool {
        self.reduction_violation().is_none()
    }

    pub(crate) fn reduction_violation(&self) -> Option<usize> {
        (0..self.len()).find(|&i| {
            let l = self.nodes[i].label;
            matches!(l, Label::Series | Label::Parallel)
                && self.nodes[i].children.iter().any(|&c| self.nodes[c].label == l)
        })
    }

    /// The same tree with series and parallel swapped, i.e. the tree of the complement.
    pub fn flipped(&self) -> MdTree {
        let mut t = self.clone();
        for node in &mut t.nodes {
            node.label = node.label.flipped();
        }
        t
    }

    /// Replaces the label of one internal node. Used to build negative controls.
    pub fn with_label(&self, i: usize, l: Label) -> MdTree {
        let mut t = self.clone();
        t.nodes[i].label = l;
        t
    }

    /// Rebuilds the tree through a builder, e.g. after relabeling.
    pub fn to_builder(&self) -> (TreeBuilder, usize) {
        let mut b = TreeBuilder::new();
        for node in &self.nodes {
            b.labels.push(node.label);
            b.children.push(node.children.clone());
        }
        (b, 0)
    }

    pub fn lca(&self, mut a: usize, mut b: usize) -> usize {
        while self.depth[a] > self.depth[b] {
            a = self.nodes[a].parent.unwrap();
        }
        while self.depth[b] > self.depth[a] {
            b = self.nodes[b].parent.unwrap();
        }
        while a != b {
            a = self.nodes[a].parent.unwrap();
            b = self.nodes[b].parent.unwrap();
        }
        a
    }

    /// The ancestor of `a` that is a child of `anc`. `a` must lie strictly below `anc`.
    pub fn child_toward(&self, anc: usize, mut a: usize) -> usize {
        while self.nodes[a].parent != Some(anc) {
            a = self.nodes[a].parent.unwrap();
        }
        a
    }

    /// The node `m(x, y)`: least strong module containing both vertices.
    pub fn smallest_strong_module_containing(&self, x: usize, y: usize) -> usize {
        self.lca(self.leaf[x], self.leaf[y])
    }

    /// The node `M(x, ȳ)`: largest strong module containing `x` but not `y`.
    pub fn maximal_module_avoiding(&self, x: usize, y: usize) -> usize {
        let m = self.smallest_strong_module_containing(x, y);
        self.child_toward(m, self.leaf[x])
    }

    /// Adjacency as encoded by series and parallel nodes. Prime nodes need
    /// representative graphs, see [`Representatives`].
    pub fn degenerate_adjacent(&self, x: usize, y: usize) -> Option<bool> {
        match self.label(self.smallest_strong_module_containing(x, y)) {
            Label::Series => Some(true),
            Label::Parallel => Some(false),
            _ => None,
        }
    }

    /// Attaches a representative graph to every prime node.
    pub fn representatives(&self, g: &Graph) -> Representatives<'_> {
        let graphs = (0..self.len())
            .map(|i| {
                (self.label(i) == Label::Prime).then(|| {
                    let reps: Vec<usize> =
                        self.children(i).iter().map(|&c| self.representative(c)).collect();
                    let k = reps.len();
                    let mut adj = vec![Vec::new(); k];
                    for a in 0..k {
                        for b in a + 1..k {
                            if g.has_edge(reps[a], reps[b]) {
                                adj[a].push(b);
                                adj[b].push(a);
                            }
                        }
                    }
                    Graph::from_adjacency_unchecked(adj)
                })
            })
            .collect();
        Representatives { tree: self, graphs }
    }
}

fn skip_unary(mut c: usize, eff: &[Option<Vec<usize>>]) -> usize {
    while let Some(ch) = &eff[c] {
        if ch.len() == 1 {
            c = ch[0];
        } else {
            break;
        }
    }
    c
}

/// An [`MdTree`] with a quotient graph stored at each prime node.
pub struct Representatives<'t> {
    tree: &'t MdTree,
    graphs: Vec<Option<Graph>>,
}

impl Representatives<'_> {
    pub fn graph(&self, node: usize) -> Option<&Graph> {
        self.graphs[node].as_ref()
    }

    /// Adjacency of `x` and `y` read off the tree alone.
    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        adjacency_via_tree(self, x, y)
    }
}

/// Decides adjacency of two distinct vertices from the tree and its
/// representative graphs.
pub fn adjacency_via_tree(r: &Representatives<'_>, x: usize, y: usize) -> bool {
    let t = r.tree;
    let m = t.smallest_strong_module_containing(x, y);
    match t.label(m) {
        Label::Series => true,
        Label::Parallel => false,
        Label::Prime => {
            let cx = t.child_toward(m, t.leaf_of(x));
            let cy = t.child_toward(m, t.leaf_of(y));
            let ch = t.children(m);
            let ix = ch.iter().position(|&c| c == cx).unwrap();
            let iy = ch.iter().position(|&c| c == cy).unwrap();
            r.graphs[m].as_ref().unwrap().has_edge(ix, iy)
        }
        Label::Leaf(_) => false,
    }
}
