//! Independent certification of a claimed modular decomposition tree.

use super::brute::{strong_modules_bruteforce, BRUTE_FORCE_LIMIT};
use super::skeleton::forcing_strongly_connected;
use super::{Label, MdTree};
use crate::graph::{Graph, ModuleTester};
use crate::modpart::v_modular_partition;
use std::fmt;

/// The first check a tree failed, and the node where it failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub node: usize,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "node {}: {}", self.node, self.reason)
    }
}

impl std::error::Error for Violation {}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Prime quotients up to this size are also checked by enumeration.
    pub brute_force_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { brute_force_limit: BRUTE_FORCE_LIMIT }
    }
}

/// Checks that `t` is the modular decomposition tree of `g`.
///
/// ```
/// use modtree::{md_tree, verify_md_tree, Graph, Label};
/// let g = Graph::path(4);
/// let t = md_tree(&g);
/// assert!(verify_md_tree(&g, &t).is_ok());
/// assert!(verify_md_tree(&g, &t.with_label(0, Label::Series)).is_err());
/// ```
pub fn verify_md_tree(g: &Graph, t: &MdTree) -> Result<(), Violation> {
    verify_md_tree_with(g, t, VerifyOptions::default())
}

pub fn verify_md_tree_with(g: &Graph, t: &MdTree, opts: VerifyOptions) -> Result<(), Violation> {
    let fail = |node: usize, reason: String| Err(Violation { node, reason });
    if t.n() != g.n() {
        return fail(0, format!("tree has {} leaves, graph has {} vertices", t.n(), g.n()));
    }
    if let Some(i) = t.reduction_violation() {
        return fail(i, format!("{} node has a {} child", t.label(i).name(), t.label(i).name()));
    }
    let mut pos = vec![0; g.n()];
    for (i, &v) in t.leaf_order().iter().enumerate() {
        pos[v] = i;
    }
    let mut tester = ModuleTester::new(g);
    let mut child_at = vec![usize::MAX; g.n()];
    for i in t.internal_nodes() {
        let ch = t.children(i);
        if ch.len() < 2 {
            return fail(i, "internal node with fewer than two children".into());
        }
        let (lo, hi) = t.span(i);
        let members = &t.leaf_order()[lo..hi];
        if i != t.root() {
            if let Some(s) = tester.splitter(members) {
                return fail(i, format!("not a module, split by vertex {s}"));
            }
        }
        for (k, &c) in ch.iter().enumerate() {
            let (a, b) = t.span(c);
            for &v in &t.leaf_order()[a..b] {
                child_at[v] = k;
            }
        }
        // Quotient on child representatives.
        let k = ch.len();
        let mut adj = vec![Vec::new(); k];
        for (a, &c) in ch.iter().enumerate() {
            let r = t.representative(c);
            for &u in g.neighbors(r) {
                if (lo..hi).contains(&pos[u]) && child_at[u] != a {
                    adj[a].push(child_at[u]);
                }
            }
        }
        let q = Graph::from_adjacency_unchecked(adj);
        match t.label(i) {
            Label::Series => {
                if let Some(a) = (0..k).find(|&a| q.degree(a) != k - 1) {
                    return fail(i, format!("series quotient is not complete at child {a}"));
                }
            }
            Label::Parallel => {
                if let Some(a) = (0..k).find(|&a| q.degree(a) != 0) {
                    return fail(i, format!("parallel quotient has an edge at child {a}"));
                }
            }
            Label::Prime => {
                if let Err(why) = certify_prime(&q, opts) {
                    return fail(i, why);
                }
            }
            Label::Leaf(_) => unreachable!(),
        }
    }
    Ok(())
}

fn certify_prime(q: &Graph, opts: VerifyOptions) -> Result<(), String> {
    let k = q.n();
    if k < 4 {
        return Err(format!("prime quotient has only {k} vertices"));
    }
    let parts = v_modular_partition(q, 0).map_err(|e| e.to_string())?;
    if let Some(p) = parts.iter().find(|p| p.len() > 1) {
        return Err(format!("quotient has the module {:?} avoiding child 0", p.as_slice()));
    }
    if !forcing_strongly_connected(q, 0) {
        return Err("quotient has a nontrivial module through child 0".into());
    }
    if k <= opts.brute_force_limit {
        let strong = strong_modules_bruteforce(q).map_err(|e| e.to_string())?;
        if strong.len() != k + 1 {
            return Err("enumeration finds a nontrivial strong module in the quotient".into());
        }
        let deg_ok = (0..k).all(|a| q.degree(a) > 0 && q.degree(a) < k - 1);
        if !deg_ok {
            return Err("enumeration finds a degenerate quotient".into());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_gnp;
    use crate::mdtree::{md_tree_skeleton, TreeBuilder};

    #[test]
    fn skeleton_outputs_pass() {
        for seed in 0..60 {
            let n = 1 + seed as usize % 64;
            let g = random_gnp(n, 0.1 + (seed % 4) as f64 * 0.2, seed).unwrap();
            let t = md_tree_skeleton(&g);
            verify_md_tree(&g, &t).unwrap();
        }
    }

    #[test]
    fn corrupted_labels_fail_at_the_node() {
        let (g, t) = crate::generate::random_cotree_graph(12, 5).unwrap();
        let i = t.internal_nodes().find(|&i| t.label(i) == Label::Series).unwrap();
        let bad = t.with_label(i, Label::Prime);
        assert_eq!(verify_md_tree(&g, &bad).unwrap_err().node, i);
        let bad = t.with_label(i, Label::Parallel);
        assert_eq!(verify_md_tree(&g, &bad).unwrap_err().node, i);
    }

    #[test]
    fn single_vertex_and_missing_module() {
        let g = Graph::empty(1);
        verify_md_tree(&g, &MdTree::single()).unwrap();
        // P4 with a false module {1, 2}.
        let mut b = TreeBuilder::new();
        let l: Vec<usize> = (0..4).map(|v| b.leaf(v)).collect();
        let m = b.node(Label::Series, vec![l[1], l[2]]);
        let r = b.node(Label::Prime, vec![l[0], m, l[3]]);
        let t = b.finish(4, r).unwrap();
        let err = verify_md_tree(&Graph::path(4), &t).unwrap_err();
        assert!(err.reason.contains("not a module") || err.reason.contains("prime"));
    }
}
