//! Simple undirected graphs on dense vertex ids, plus the set operations the
//! decomposition algorithms lean on.

use crate::error::{Error, Result};
use std::ops::Deref;

/// A sorted, duplicate-free list of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from arbitrary ids, sorting and dropping repeats.
    pub fn from_unsorted(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Wraps a vector already known to be strictly increasing.
    pub fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl Deref for VertexSet {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet::from_unsorted(it.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::from_unsorted(v)
    }
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Graph { adj, m: n * n.saturating_sub(1) / 2 }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("path edges are valid")
    }

    /// Builds a graph from an edge list, merging repeated edges.
    ///
    /// ```
    /// use modtree::Graph;
    /// let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
    /// assert_eq!(g.m(), 2);
    /// assert!(Graph::from_edge_list(2, &[(1, 1)]).is_err());
    /// ```
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency_unchecked(adj))
    }

    /// Sorts and dedups raw adjacency lists. Symmetry is the caller's job.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<usize>>) -> Self {
        let mut deg = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            deg += list.len();
        }
        Graph { adj, m: deg / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Materializes the complement. Quadratic; meant for tests and tiny inputs.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v && !self.has_edge(u, v)).collect())
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// `G[X]`. Vertex `k` of the result is `remap[k]`, the k-th smallest member of `X`.
    pub fn induced_subgraph(&self, x: &[usize]) -> Result<(Graph, Vec<usize>)> {
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        let n = self.n();
        let mut remap: Vec<usize> = x.to_vec();
        remap.sort_unstable();
        remap.dedup();
        let mut local = vec![usize::MAX; n];
        for (i, &v) in remap.iter().enumerate() {
            self.check_vertex(v)?;
            local[v] = i;
        }
        let adj = remap
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (local[u] != usize::MAX).then_some(local[u]))
                    .collect()
            })
            .collect();
        Ok((Graph::from_adjacency_unchecked(adj), remap))
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet::from_unsorted(comp));
        }
        out
    }

    /// Connected components of the complement, found without building it.
    pub fn co_connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut unvisited: Vec<usize> = (0..n).rev().collect();
        let mut stamp = vec![usize::MAX; n];
        let mut out = Vec::new();
        let mut queue = Vec::new();
        while let Some(s) = unvisited.pop() {
            queue.push(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    stamp[w] = u;
                }
                let mut keep = Vec::with_capacity(unvisited.len());
                for &w in &unvisited {
                    if stamp[w] == u {
                        keep.push(w);
                    } else {
                        queue.push(w);
                    }
                }
                unvisited = keep;
            }
            out.push(VertexSet::from_unsorted(comp));
        }
        out.sort();
        out
    }
}

/// Disjoint union; the vertices of `gs[i]` follow those of `gs[i-1]`.
pub fn parallel_compose(gs: &[Graph]) -> Graph {
    compose(gs, false)
}

/// Disjoint union plus every edge between distinct operands.
pub fn series_compose(gs: &[Graph]) -> Graph {
    compose(gs, true)
}

fn compose(gs: &[Graph], join: bool) -> Graph {
    let total: usize = gs.iter().map(Graph::n).sum();
    let mut adj = Vec::with_capacity(total);
    let mut off = 0;
    for g in gs {
        let (lo, hi) = (off, off + g.n());
        for v in 0..g.n() {
            let mut l: Vec<usize> = g.neighbors(v).iter().map(|&u| u + off).collect();
            if join {
                l.extend((0..lo).chain(hi..total));
            }
            adj.push(l);
        }
        off = hi;
    }
    Graph::from_adjacency_unchecked(adj)
}

/// Replaces vertex `x` of `g` by the graph `h`.
///
/// Vertex 0 of `h` takes the id `x`; vertex `i > 0` of `h` becomes `g.n() + i - 1`.
/// Returns the new graph and the image of `V(h)`, which is a module of it.
pub fn substitute(g: &Graph, x: usize, h: &Graph) -> Result<(Graph, VertexSet)> {
    g.check_vertex(x)?;
    if h.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.n();
    let img = |i: usize| if i == 0 { x } else { n + i - 1 };
    let image: Vec<usize> = (0..h.n()).map(img).collect();
    let mut adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    adj.resize(n + h.n() - 1, Vec::new());
    adj[x].clear();
    for &y in g.neighbors(x) {
        adj[y].extend(image.iter().skip(1).copied());
        for &z in &image {
            adj[z].push(y);
        }
    }
    for (u, v) in h.edges() {
        adj[img(u)].push(img(v));
        adj[img(v)].push(img(u));
    }
    Ok((Graph::from_adjacency_unchecked(adj), VertexSet::from_unsorted(image)))
}

/// Reusable scratch for repeated module tests on one graph.
pub struct ModuleTester<'g> {
    g: &'g Graph,
    count: Vec<u32>,
    inside: Vec<bool>,
    touched: Vec<usize>,
}

impl<'g> ModuleTester<'g> {
    pub fn new(g: &'g Graph) -> Self {
        ModuleTester { g, count: vec![0; g.n()], inside: vec![false; g.n()], touched: Vec::new() }
    }

    /// Returns some splitter of `m`, if any.
    pub fn splitter(&mut self, m: &[usize]) -> Option<usize> {
        for &v in m {
            self.inside[v] = true;
        }
        for &v in m {
            for &u in self.g.neighbors(v) {
                if self.count[u] == 0 {
                    self.touched.push(u);
                }
                self.count[u] += 1;
            }
        }
        let size = m.len() as u32;
        let mut found = None;
        for &u in &self.touched {
            if !self.inside[u] && self.count[u] != size && found.is_none() {
                found = Some(u);
            }
            self.count[u] = 0;
        }
        self.touched.clear();
        for &v in m {
            self.inside[v] = false;
        }
        found
    }

    pub fn is_module(&mut self, m: &[usize]) -> bool {
        self.splitter(m).is_none()
    }
}

/// True iff no vertex outside `m` sees part but not all of it.
///
/// ```
/// use modtree::{is_module, Graph};
/// let p4 = Graph::path(4);
/// assert!(!is_module(&p4, &[1, 2]));
/// assert!(is_module(&p4, &[0, 1, 2, 3]));
/// ```
pub fn is_module(g: &Graph, m: &[usize]) -> bool {
    ModuleTester::new(g).is_module(m)
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::generate::random_gnp;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn component_unions_are_modules(n in 1usize..12, p in 0.0f64..0.5, seed: u64, mask: u32) {
            let g = random_gnp(n, p, seed).unwrap();
            let comps = g.connected_components();
            let mut m: Vec<usize> = comps.iter().enumerate()
                .filter(|(i, _)| mask >> (i % 32) & 1 == 1)
                .flat_map(|(_, c)| c.iter().copied()).collect();
            m.sort_unstable();
            prop_assume!(!m.is_empty());
            prop_assert!(is_module(&g, &m));
        }

        #[test]
        fn complement_duality(n in 1usize..10, seed: u64, mask: u16) {
            let g = random_gnp(n, 0.5, seed).unwrap();
            let m: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            prop_assume!(!m.is_empty());
            prop_assert_eq!(is_module(&g, &m), is_module(&g.complement(), &m));
        }

        #[test]
        fn substitute_image_is_module(n in 1usize..8, k in 1usize..5, seed: u64) {
            let g = random_gnp(n, 0.5, seed).unwrap();
            let h = random_gnp(k, 0.5, seed ^ 7).unwrap();
            let x = (seed as usize) % n;
            let (s, img) = substitute(&g, x, &h).unwrap();
            prop_assert!(is_module(&s, &img));
            for u in 0..n {
                for v in 0..n {
                    if u != v && u != x && v != x {
                        prop_assert_eq!(s.has_edge(u, v), g.has_edge(u, v));
                    }
                }
                if u != x {
                    prop_assert_eq!(s.has_edge(u, x), g.has_edge(u, x));
                }
            }
        }

        #[test]
        fn edge_list_round_trip(n in 1usize..12, seed: u64) {
            let g = random_gnp(n, 0.4, seed).unwrap();
            let edges: Vec<_> = g.edges().collect();
            prop_assert_eq!(Graph::from_edge_list(n, &edges).unwrap(), g);
        }
    }
}
