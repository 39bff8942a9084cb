//! Cluster editing: reduction rules built on clique modules and a branching solver.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{OrderedPartition, Placement};
use std::fmt;

/// A graph and an edit budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EditInstance {
    pub graph: Graph,
    pub k: usize,
}

/// One pair edit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PairEdit {
    Insert(usize, usize),
    Delete(usize, usize),
}

impl fmt::Display for PairEdit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairEdit::Insert(u, v) => write!(f, "+{u} {v}"),
            PairEdit::Delete(u, v) => write!(f, "-{u} {v}"),
        }
    }
}

/// Edits sorted by pair, each pair at most once.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EditSet(pub Vec<PairEdit>);

impl EditSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The edited graph. Inserting an edge or deleting a non-edge is an error.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        let mut adj = matrix(g);
        for e in &self.0 {
            let (u, v, want, msg) = match *e {
                PairEdit::Insert(u, v) => (u, v, false, "insert of an existing edge"),
                PairEdit::Delete(u, v) => (u, v, true, "delete of a missing edge"),
            };
            if u >= g.n() || v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n: g.n() });
            }
            if u == v || adj[u][v] != want {
                return Err(Error::EdgeState(u, v, msg));
            }
            adj[u][v] = !want;
            adj[v][u] = !want;
        }
        Ok(from_matrix(&adj))
    }

    /// `+u v` or `-u v` per line.
    pub fn to_text(&self) -> String {
        self.0.iter().map(|e| format!("{e}\n")).collect()
    }
}

/// No induced path on three vertices: every component is a clique.
///
/// ```
/// use modtree::{is_cluster_graph, Graph};
/// assert!(is_cluster_graph(&Graph::complete(3)));
/// assert!(!is_cluster_graph(&Graph::path(3)));
/// ```
pub fn is_cluster_graph(g: &Graph) -> bool {
    g.connected_components().iter().all(|c| c.as_slice().iter().all(|&v| g.degree(v) + 1 == c.len()))
}

/// Classes of vertices with equal closed neighbourhoods, by smallest member.
///
/// These are the maximal modules that induce cliques.
pub fn clique_modules(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut p = OrderedPartition::new(n);
    let mut closed = Vec::new();
    for v in 0..n {
        closed.clear();
        closed.push(v);
        closed.extend_from_slice(g.neighbors(v));
        p.refine(&closed, Placement::Left).expect("closed neighbourhoods are valid pivot sets");
    }
    let mut classes: Vec<Vec<usize>> = p
        .parts()
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    classes.sort_unstable();
    classes
}

/// One rule firing, in original vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleStep {
    /// A connected component inducing a clique was removed.
    CliqueComponent(Vec<usize>),
    /// A clique module larger than `k + 1` lost `removed`.
    ShrinkModule { module: Vec<usize>, removed: Vec<usize> },
}

impl fmt::Display for RuleStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        match self {
            RuleStep::CliqueComponent(c) => write!(f, "rule1 remove {}", list(c)),
            RuleStep::ShrinkModule { module, removed } => {
                write!(f, "rule2 module {} remove {}", list(module), list(removed))
            }
        }
    }
}

/// Reduced instance with the map back to original ids and the rule log.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub instance: EditInstance,
    /// Vertex `i` of the reduced graph is `kept[i]` in the input.
    pub kept: Vec<usize>,
    pub log: Vec<RuleStep>,
}

/// Applies both reduction rules until neither fires. `k` is left unchanged.
///
/// ```
/// use modtree::{kernelize, EditInstance, Graph};
/// let k = kernelize(&EditInstance { graph: Graph::complete(5), k: 1 });
/// assert_eq!(k.instance.graph.n(), 0);
/// ```
pub fn kernelize(inst: &EditInstance) -> Kernel {
    let k = inst.k;
    let mut g = inst.graph.clone();
    let mut kept: Vec<usize> = (0..g.n()).collect();
    let mut log = Vec::new();
    loop {
        let mut drop = vec![false; g.n()];
        let mut fired = false;
        for c in g.connected_components() {
            let c = c.as_slice();
            if c.iter().all(|&v| g.degree(v) + 1 == c.len()) {
                log.push(RuleStep::CliqueComponent(c.iter().map(|&v| kept[v]).collect()));
                for &v in c {
                    drop[v] = true;
                }
                fired = true;
            }
        }
        if !fired {
            for c in clique_modules(&g) {
                if c.len() > k + 1 {
                    let module: Vec<usize> = c.iter().map(|&v| kept[v]).collect();
                    let removed = module[k + 1..].to_vec();
                    for &v in &c[k + 1..] {
                        drop[v] = true;
                    }
                    log.push(RuleStep::ShrinkModule { module, removed });
                    fired = true;
                }
            }
        }
        if !fired {
            break;
        }
        let rest: Vec<usize> = (0..g.n()).filter(|&v| !drop[v]).collect();
        if rest.is_empty() {
            g = Graph::empty(0);
            kept.clear();
            break;
        }
        let (h, remap) = g.induced_subgraph(&rest).expect("kept vertices are valid");
        kept = remap.iter().map(|&v| kept[v]).collect();
        g = h;
    }
    Kernel { instance: EditInstance { graph: g, k }, kept, log }
}

/// Search-tree node limit used by [`solve_branching`].
pub const DEFAULT_GUARD: u64 = 20_000_000;

/// Vertex limit of the solver's adjacency matrix.
pub const SOLVER_VERTEX_LIMIT: usize = 2048;

/// An edit set of size at most `k` turning the graph into a cluster graph, if any.
///
/// ```
/// use modtree::{solve_branching, EditInstance, Graph};
/// let p3 = Graph::path(3);
/// assert_eq!(solve_branching(&EditInstance { graph: p3.clone(), k: 1 }).unwrap().unwrap().len(), 1);
/// assert!(solve_branching(&EditInstance { graph: p3, k: 0 }).unwrap().is_none());
/// ```
pub fn solve_branching(inst: &EditInstance) -> Result<Option<EditSet>> {
    solve_branching_with(inst, DEFAULT_GUARD).map(|(s, _)| s)
}

/// Like [`solve_branching`] with an explicit node limit; also returns the node count.
pub fn solve_branching_with(inst: &EditInstance, guard: u64) -> Result<(Option<EditSet>, u64)> {
    let n = inst.graph.n();
    if n > SOLVER_VERTEX_LIMIT {
        return Err(Error::TooLarge { what: "solver instance", size: n, limit: SOLVER_VERTEX_LIMIT });
    }
    let start = matrix(&inst.graph);
    let mut adj = start.clone();
    let mut nodes = 0;
    if !branch(&mut adj, inst.k, &mut nodes, guard)? {
        return Ok((None, nodes));
    }
    let mut edits = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match (start[u][v], adj[u][v]) {
                (false, true) => edits.push(PairEdit::Insert(u, v)),
                (true, false) => edits.push(PairEdit::Delete(u, v)),
                _ => {}
            }
        }
    }
    Ok((Some(EditSet(edits)), nodes))
}

fn branch(adj: &mut [Vec<bool>], k: usize, nodes: &mut u64, guard: u64) -> Result<bool> {
    *nodes += 1;
    if *nodes > guard {
        return Err(Error::GuardExceeded(guard));
    }
    let Some((a, b, c)) = smallest_p3(adj) else {
        return Ok(true);
    };
    if k == 0 {
        return Ok(false);
    }
    for (u, v) in [(a, b), (b, c), (a, c)] {
        adj[u][v] = !adj[u][v];
        adj[v][u] = !adj[v][u];
        let found = branch(adj, k - 1, nodes, guard)?;
        if found {
            return Ok(true);
        }
        adj[u][v] = !adj[u][v];
        adj[v][u] = !adj[v][u];
    }
    Ok(false)
}

/// Lexicographically smallest `(a, b, c)` with edges `ab`, `bc`, no edge `ac`, `a < c`.
fn smallest_p3(adj: &[Vec<bool>]) -> Option<(usize, usize, usize)> {
    let n = adj.len();
    for a in 0..n {
        for b in (0..n).filter(|&b| adj[a][b]) {
            if let Some(c) = (a + 1..n).find(|&c| c != b && adj[b][c] && !adj[a][c]) {
                return Some((a, b, c));
            }
        }
    }
    None
}

fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

fn from_matrix(m: &[Vec<bool>]) -> Graph {
    let n = m.len();
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| m[u][v]).collect();
    Graph::from_edge_list(n, &edges).expect("matrix edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_cluster_graph, random_gnp, rng};
    use crate::graph::{is_module, substitute};
    use rand::Rng;

    /// Cheapest cluster editing by trying every set partition.
    fn editing_distance(g: &Graph) -> usize {
        let n = g.n();
        let adj = matrix(g);
        let mut label = vec![0usize; n];
        let mut best = usize::MAX;
        fn rec(i: usize, used: usize, label: &mut [usize], adj: &[Vec<bool>], best: &mut usize) {
            let n = label.len();
            if i == n {
                let mut cost = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        cost += ((label[u] == label[v]) != adj[u][v]) as usize;
                    }
                }
                *best = (*best).min(cost);
                return;
            }
            for l in 0..=used {
                label[i] = l;
                rec(i + 1, used.max(l + 1), label, adj, best);
            }
        }
        if n == 0 {
            return 0;
        }
        rec(0, 0, &mut label, &adj, &mut best);
        best
    }

    #[test]
    fn cluster_graph_checks() {
        let k3k1 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_cluster_graph(&k3k1));
        assert!(!is_cluster_graph(&Graph::path(3)));
        for seed in 0..20 {
            assert!(is_cluster_graph(&random_cluster_graph(30, seed).unwrap()));
        }
    }

    #[test]
    fn clique_module_classes() {
        assert_eq!(clique_modules(&Graph::complete(5)), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(clique_modules(&Graph::path(4)).len(), 4);
        for seed in 0..40 {
            let g = random_gnp(12, 0.4, seed).unwrap();
            let (h, image) = substitute(&g, seed as usize % 12, &Graph::complete(5)).unwrap();
            let classes = clique_modules(&h);
            assert!(classes.iter().any(|c| image.as_slice().iter().all(|v| c.contains(v))));
            for c in &classes {
                assert!(is_module(&h, c));
                assert!(c.iter().all(|&u| c.iter().all(|&v| u == v || h.has_edge(u, v))));
            }
            for a in 0..classes.len() {
                for b in a + 1..classes.len() {
                    let mut u = classes[a].clone();
                    u.extend_from_slice(&classes[b]);
                    let clique = u.iter().all(|&x| u.iter().all(|&y| x == y || h.has_edge(x, y)));
                    assert!(!(clique && is_module(&h, &u)));
                }
            }
        }
    }

    #[test]
    fn cluster_graph_reduces_to_nothing() {
        let g = random_cluster_graph(25, 3).unwrap();
        let ker = kernelize(&EditInstance { graph: g, k: 2 });
        assert_eq!(ker.instance.graph.n(), 0);
        assert!(ker.log.iter().all(|s| matches!(s, RuleStep::CliqueComponent(_))));
    }

    #[test]
    fn big_clique_module_shrinks() {
        // K7 on 0..6, all joined to 7; 7 also touches 8.
        let k = 2;
        let mut edges = vec![(7, 8)];
        for u in 0..7 {
            edges.push((u, 7));
            for v in u + 1..7 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edge_list(9, &edges).unwrap();
        let ker = kernelize(&EditInstance { graph: g.clone(), k });
        assert_eq!(
            ker.log[0],
            RuleStep::ShrinkModule { module: (0..7).collect(), removed: vec![3, 4, 5, 6] }
        );
        assert_eq!(ker.kept, vec![0, 1, 2, 7, 8]);
        let before = solve_branching(&EditInstance { graph: g, k }).unwrap().is_some();
        let after = solve_branching(&ker.instance).unwrap().is_some();
        assert_eq!(before, after);
    }

    #[test]
    fn reduction_is_safe_and_small() {
        let mut r = rng(99);
        for seed in 0..200 {
            let n = 4 + seed as usize % 15;
            let k = seed as usize % 7;
            let g = if seed % 2 == 0 {
                random_gnp(n, r.gen_range(0.1..0.6), seed).unwrap()
            } else {
                let mut adj = matrix(&random_cluster_graph(n, seed).unwrap());
                for _ in 0..r.gen_range(0..=k + 1) {
                    let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
                    if u != v {
                        adj[u][v] = !adj[u][v];
                        adj[v][u] = adj[u][v];
                    }
                }
                from_matrix(&adj)
            };
            let inst = EditInstance { graph: g, k };
            let ker = kernelize(&inst);
            let before = solve_branching(&inst).unwrap().is_some();
            let after = solve_branching(&ker.instance).unwrap().is_some();
            assert_eq!(before, after, "seed {seed}");
            if before {
                assert!(ker.instance.graph.n() <= 2 * k * k + 4 * k, "seed {seed}");
            }
        }
    }

    #[test]
    fn solver_agrees_with_partition_search() {
        for seed in 0..150 {
            let n = 2 + seed as usize % 9;
            let g = random_gnp(n, 0.5, seed).unwrap();
            let d = editing_distance(&g);
            for k in 0..=5 {
                let sol = solve_branching(&EditInstance { graph: g.clone(), k }).unwrap();
                assert_eq!(sol.is_some(), d <= k, "seed {seed} k {k}");
                if let Some(s) = sol {
                    assert!(s.len() <= k);
                    assert!(is_cluster_graph(&s.apply(&g).unwrap()));
                }
            }
        }
    }

    #[test]
    fn guard_trips() {
        let g = random_gnp(12, 0.5, 1).unwrap();
        let r = solve_branching_with(&EditInstance { graph: g, k: 8 }, 10);
        assert_eq!(r.unwrap_err(), Error::GuardExceeded(10));
    }

    #[test]
    fn edit_set_text_and_checks() {
        let s = EditSet(vec![PairEdit::Delete(0, 1), PairEdit::Insert(0, 2)]);
        assert_eq!(s.to_text(), "-0 1\n+0 2\n");
        assert!(s.apply(&Graph::path(3)).is_ok());
        assert!(EditSet(vec![PairEdit::Delete(0, 2)]).apply(&Graph::path(3)).is_err());
        assert!(EditSet(vec![PairEdit::Insert(1, 2)]).apply(&Graph::path(3)).is_err());
    }
}
