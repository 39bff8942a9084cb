//! Quotients, forcing graphs, spines, and the recursive skeleton construction.

use super::{Label, MdTree, TreeBuilder};
use crate::error::{Error, Result};
use crate::graph::{Graph, ModuleTester, VertexSet};
use crate::modpart::v_modular_partition;

/// `G/P` for a partition `P` into modules. Vertex `i` stands for `parts[i]`.
pub fn quotient(g: &Graph, parts: &[VertexSet]) -> Result<Graph> {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    for (i, p) in parts.iter().enumerate() {
        if p.is_empty() {
            return Err(Error::NotAPartition("empty part".into()));
        }
        for &x in p.iter() {
            g.check_vertex(x)?;
            if part_of[x] != usize::MAX {
                return Err(Error::NotAPartition(format!("vertex {x} in two parts")));
            }
            part_of[x] = i;
        }
    }
    if let Some(x) = part_of.iter().position(|&p| p == usize::MAX) {
        return Err(Error::NotAPartition(format!("vertex {x} not covered")));
    }
    let mut tester = ModuleTester::new(g);
    for (i, p) in parts.iter().enumerate() {
        if p.len() > 1 && !tester.is_module(p) {
            return Err(Error::NotAModule(i));
        }
    }
    let q = quotient_by_reps(g, parts.iter().map(|p| p[0]), &part_of, parts.len());
    debug_assert!(
        parts.iter().all(|p| p.len() < 2)
            || quotient_by_reps(g, parts.iter().map(|p| *p.last().unwrap()), &part_of, parts.len()) == q
    );
    Ok(q)
}

fn quotient_by_reps(g: &Graph, reps: impl Iterator<Item = usize>, part_of: &[usize], k: usize) -> Graph {
    let mut adj = vec![Vec::new(); k];
    for (i, r) in reps.enumerate() {
        for &u in g.neighbors(r) {
            let j = part_of[u];
            if j != i {
                adj[i].push(j);
            }
        }
    }
    Graph::from_adjacency_unchecked(adj)
}

/// Arcs `x -> y` where `y` splits `{x, v}`, over the vertices other than `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingGraph {
    pub v: usize,
    /// `arcs[x]`, sorted; empty for `v` itself.
    pub arcs: Vec<Vec<usize>>,
}

pub fn forcing_graph(q: &Graph, v: usize) -> ForcingGraph {
    let nv = q.neighbors(v);
    let arcs = (0..q.n())
        .map(|x| {
            if x == v {
                return Vec::new();
            }
            let nx = q.neighbors(x);
            let (mut i, mut j) = (0, 0);
            let mut out = Vec::new();
            while i < nx.len() || j < nv.len() {
                let a = nx.get(i).copied().unwrap_or(usize::MAX);
                let b = nv.get(j).copied().unwrap_or(usize::MAX);
                let y = match a.cmp(&b) {
                    std::cmp::Ordering::Less => {
                        i += 1;
                        a
                    }
                    std::cmp::Ordering::Greater => {
                        j += 1;
                        b
                    }
                    std::cmp::Ordering::Equal => {
                        i += 1;
                        j += 1;
                        continue;
                    }
                };
                if y != x && y != v {
                    out.push(y);
                }
            }
            out
        })
        .collect();
    ForcingGraph { v, arcs }
}

/// Strongly connected components, sinks first. Iterative lowlink search.
pub(crate) fn tarjan(adj: &[Vec<usize>], skip: Option<usize>) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut counter = 0;
    let mut call: Vec<(usize, usize)> = Vec::new();
    for s in 0..n {
        if index[s] != usize::MAX || Some(s) == skip {
            continue;
        }
        call.push((s, 0));
        index[s] = counter;
        low[s] = counter;
        counter += 1;
        stack.push(s);
        on_stack[s] = true;
        while let Some(&mut (u, ref mut i)) = call.last_mut() {
            if *i < adj[u].len() {
                let w = adj[u][*i];
                *i += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[u] = low[u].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(p, _)) = call.last() {
                low[p] = low[p].min(low[u]);
            }
            if low[u] == index[u] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp.push(w);
                    if w == u {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }
    comps
}

/// Whether the forcing graph of `q` at `v` is strongly connected, in `O(n + m)`
/// without listing its arcs.
pub(crate) fn forcing_strongly_connected(q: &Graph, v: usize) -> bool {
    let n = q.n();
    if n <= 2 {
        return true;
    }
    let start = if v == 0 { 1 } else { 0 };
    let mut in_nv = vec![false; n];
    for &u in q.neighbors(v) {
        in_nv[u] = true;
    }
    // Successors of x: non-neighbors inside N(v), neighbors outside it.
    // Predecessors of y: non-neighbors if y is in N(v), neighbors otherwise.
    for forward in [true, false] {
        let mut pooled = vec![false; n];
        let mut pools: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for u in (0..n).filter(|&u| u != v && u != start) {
            pooled[u] = true;
            pools[!in_nv[u] as usize].push(u);
        }
        let mut mark = vec![usize::MAX; n];
        let mut queue = vec![start];
        let mut reached = 1;
        while let Some(x) = queue.pop() {
            for &u in q.neighbors(x) {
                mark[u] = x;
            }
            for (k, pool) in pools.iter_mut().enumerate() {
                let take_adjacent = if forward { k == 1 } else { !in_nv[x] };
                if take_adjacent {
                    for &y in q.neighbors(x) {
                        if pooled[y] && in_nv[y] == (k == 0) {
                            pooled[y] = false;
                            queue.push(y);
                            reached += 1;
                        }
                    }
                } else {
                    pool.retain(|&y| {
                        if !pooled[y] {
                            false
                        } else if mark[y] == x {
                            true
                        } else {
                            pooled[y] = false;
                            queue.push(y);
                            reached += 1;
                            false
                        }
                    });
                }
            }
        }
        if reached != n - 1 {
            return false;
        }
    }
    true
}

/// One ancestor of the chosen vertex, outermost first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineNode {
    pub label: Label,
    /// Parts of `M(G, v)` that become children at this level.
    pub parts: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spine {
    pub v: usize,
    pub partition: Vec<VertexSet>,
    pub nodes: Vec<SpineNode>,
}

/// The chain of strong modules containing `v`, from the forcing graph's blocks.
///
/// Panics if the condensation is not a chain, which would contradict the theory.
pub fn spine(g: &Graph, v: usize) -> Result<Spine> {
    let partition = v_modular_partition(g, v)?;
    if g.n() == 1 {
        return Ok(Spine { v, partition, nodes: Vec::new() });
    }
    let q = quotient(g, &partition)?;
    let vq = partition.iter().position(|p| p[0] == v && p.len() == 1).unwrap();
    let f = forcing_graph(&q, vq);
    let blocks = tarjan(&f.arcs, Some(vq));
    let mut block_of = vec![usize::MAX; q.n()];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            block_of[x] = i;
        }
    }
    for i in 1..blocks.len() {
        let linked = blocks[i].iter().any(|&x| f.arcs[x].iter().any(|&y| block_of[y] == i - 1));
        assert!(linked, "forcing graph condensation is not a chain");
    }
    let nodes = blocks
        .iter()
        .rev()
        .map(|b| {
            let adjacent = b.iter().filter(|&&x| q.has_edge(x, vq)).count();
            let label = if adjacent == b.len() {
                Label::Series
            } else if adjacent == 0 {
                Label::Parallel
            } else {
                Label::Prime
            };
            SpineNode { label, parts: b.iter().map(|&x| partition[x].clone()).collect() }
        })
        .collect();
    Ok(Spine { v, partition, nodes })
}

/// Modular decomposition tree by the recursive spine construction.
///
/// ```
/// use modtree::{md_tree_skeleton, Graph, Label};
/// let t = md_tree_skeleton(&Graph::path(4));
/// assert_eq!(t.label(t.root()), Label::Prime);
/// assert_eq!(t.children(t.root()).len(), 4);
/// ```
pub fn md_tree_skeleton(g: &Graph) -> MdTree {
    assert!(g.n() > 0, "graph must have a vertex");
    let mut b = TreeBuilder::new();
    let root = b.node(Label::Prime, Vec::new());
    let mut work: Vec<(Vec<usize>, usize)> = vec![((0..g.n()).collect(), root)];
    while let Some((x, slot)) = work.pop() {
        if x.len() == 1 {
            b.set_label(slot, Label::Leaf(x[0]));
            continue;
        }
        let (h, remap) = g.induced_subgraph(&x).expect("nonempty");
        let sp = spine(&h, 0).expect("vertex 0 exists");
        let mut cur = slot;
        for (i, node) in sp.nodes.iter().enumerate() {
            b.set_label(cur, node.label);
            let next = if i + 1 == sp.nodes.len() { b.leaf(remap[0]) } else { b.node(Label::Prime, Vec::new()) };
            let mut kids = vec![next];
            for part in &node.parts {
                let p = b.node(Label::Prime, Vec::new());
                kids.push(p);
                work.push((part.iter().map(|&u| remap[u]).collect(), p));
            }
            *b.children_mut(cur) = kids;
            cur = next;
        }
    }
    b.finish_reduced(g.n(), root).expect("skeleton builds a valid tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_cotree_graph, random_gnp};
    use crate::graph::substitute;
    use crate::mdtree::{modules_bruteforce, strong_modules_bruteforce};

    #[test]
    fn quotient_examples() {
        let k4 = Graph::complete(4);
        let q = quotient(&k4, &[vec![0, 1].into(), vec![2, 3].into()]).unwrap();
        assert_eq!(q, Graph::complete(2));
        let g = random_gnp(7, 0.5, 2).unwrap();
        let singles: Vec<VertexSet> = (0..7).map(VertexSet::singleton).collect();
        assert_eq!(quotient(&g, &singles).unwrap(), g);
        assert_eq!(
            quotient(&Graph::path(4), &[vec![0].into(), vec![1, 2].into(), vec![3].into()]),
            Err(Error::NotAModule(1))
        );
    }

    #[test]
    fn quotient_undoes_substitution() {
        for seed in 0..10 {
            let g = random_gnp(6, 0.5, seed).unwrap();
            let (h, img) = substitute(&g, 2, &random_gnp(3, 0.5, seed + 1).unwrap()).unwrap();
            let mut parts: Vec<VertexSet> = (0..6).filter(|&v| v != 2).map(VertexSet::singleton).collect();
            parts.insert(2, img);
            assert_eq!(quotient(&h, &parts).unwrap(), g);
        }
    }

    #[test]
    fn forcing_examples() {
        let f = forcing_graph(&Graph::complete(3), 0);
        assert!(f.arcs.iter().all(Vec::is_empty));
        // v=0, b=1, c=2, d=3 on the path v-b-c-d.
        let f = forcing_graph(&Graph::path(4), 0);
        let oracle: Vec<Vec<usize>> = (0..4)
            .map(|x| {
                (0..4)
                    .filter(|&y| x != 0 && y != x && y != 0)
                    .filter(|&y| Graph::path(4).has_edge(x, y) != Graph::path(4).has_edge(0, y))
                    .collect()
            })
            .collect();
        assert_eq!(f.arcs, oracle);
        assert!(f.arcs[1].contains(&2));
        assert!(!f.arcs[2].contains(&1));
    }

    fn reach(arcs: &[Vec<usize>], x: usize) -> Vec<usize> {
        let mut seen = vec![false; arcs.len()];
        let mut st = vec![x];
        seen[x] = true;
        while let Some(u) = st.pop() {
            for &w in &arcs[u] {
                if !seen[w] {
                    seen[w] = true;
                    st.push(w);
                }
            }
        }
        (0..arcs.len()).filter(|&i| seen[i]).collect()
    }

    #[test]
    fn reachability_is_smallest_module() {
        for seed in 0..40 {
            let n = 3 + seed as usize % 8;
            let g = random_gnp(n, 0.5, seed).unwrap();
            let mods = modules_bruteforce(&g).unwrap();
            let f = forcing_graph(&g, 0);
            for x in 1..n {
                let mut r = reach(&f.arcs, x);
                r.push(0);
                r.sort_unstable();
                let smallest = mods
                    .members()
                    .iter()
                    .filter(|m| m.contains(&0) && m.contains(&x))
                    .min_by_key(|m| m.len())
                    .unwrap();
                assert_eq!(&r, smallest);
            }
        }
    }

    #[test]
    fn spine_examples() {
        let s = spine(&Graph::path(4), 1).unwrap();
        assert_eq!(s.nodes.len(), 1);
        assert_eq!(s.nodes[0].label, Label::Prime);
        assert_eq!(s.nodes[0].parts.len(), 3);
        let s = spine(&Graph::complete(5), 0).unwrap();
        assert_eq!(s.nodes.len(), 1);
        assert_eq!(s.nodes[0].label, Label::Series);
        // K2 substituted into K2 twice: nested series modules around the inner vertex.
        let (g1, _) = substitute(&Graph::complete(2), 0, &Graph::complete(2)).unwrap();
        let (g2, _) = substitute(&g1, 0, &Graph::complete(2)).unwrap();
        let s = spine(&g2, 0).unwrap();
        assert!(s.nodes.iter().all(|n| n.label == Label::Series));
    }

    #[test]
    fn quotient_modules_contain_v() {
        for seed in 0..40 {
            let n = 2 + seed as usize % 9;
            let g = random_gnp(n, 0.4, seed).unwrap();
            let v = seed as usize % n;
            let s = spine(&g, v).unwrap();
            let q = quotient(&g, &s.partition).unwrap();
            let vq = s.partition.iter().position(|p| p.as_slice() == [v]).unwrap();
            for m in modules_bruteforce(&q).unwrap().members() {
                assert!(m.len() == 1 || m.contains(&vq), "module {m:?} avoids v");
            }
        }
    }

    #[test]
    fn implicit_connectivity_agrees() {
        for seed in 0..60 {
            let n = 2 + seed as usize % 12;
            let g = random_gnp(n, 0.5, seed).unwrap();
            for v in 0..n.min(3) {
                let f = forcing_graph(&g, v);
                let comps = tarjan(&f.arcs, Some(v));
                assert_eq!(forcing_strongly_connected(&g, v), comps.len() <= 1, "seed {seed} v {v}");
            }
        }
    }

    #[test]
    fn skeleton_matches_oracle() {
        for seed in 0..150 {
            let n = 1 + seed as usize % 11;
            let g = random_gnp(n, 0.2 + (seed % 5) as f64 * 0.15, seed).unwrap();
            let t = md_tree_skeleton(&g);
            assert_eq!(t.node_sets(), strong_modules_bruteforce(&g).unwrap().members());
            assert!(t.is_reduced());
        }
    }

    #[test]
    fn skeleton_on_cotrees() {
        for seed in 0..10 {
            let (g, t) = random_cotree_graph(24, seed).unwrap();
            assert_eq!(md_tree_skeleton(&g), t);
        }
    }
}
