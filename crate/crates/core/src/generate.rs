//! Seeded graph generators for tests, benchmarks and the `gen` command.

use crate::error::{Error, Result};
use crate::graph::{substitute, Graph, VertexSet};
use crate::mdtree::{Label, MdTree, TreeBuilder};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph: each pair is an edge with probability `p`.
///
/// Runs in `O(n + m)` by skipping geometrically over absent pairs.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    if p >= 1.0 {
        return Ok(Graph::complete(n));
    }
    if p > 0.0 {
        let lq = (1.0 - p).ln();
        let (mut v, mut w): (usize, i64) = (1, -1);
        while v < n {
            let u: f64 = r.gen();
            w += 1 + ((1.0 - u).ln() / lq).floor() as i64;
            while w >= v as i64 && v < n {
                w -= v as i64;
                v += 1;
            }
            if v < n {
                edges.push((w as usize, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Random cograph together with the cotree that generated it.
pub fn random_cotree_graph(n: usize, seed: u64) -> Result<(Graph, MdTree)> {
    random_cotree_graph_capped(n, seed, usize::MAX)
}

/// Like [`random_cotree_graph`] but switches to parallel merges once the next
/// series merge would push the edge count past `max_edges`.
pub fn random_cotree_graph_capped(n: usize, seed: u64, max_edges: usize) -> Result<(Graph, MdTree)> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut r = rng(seed);
    let mut b = TreeBuilder::new();
    let mut pool: Vec<(usize, Vec<usize>)> = (0..n).map(|v| (b.leaf(v), vec![v])).collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    while pool.len() > 1 {
        let k = r.gen_range(2..=4).min(pool.len());
        let mut picked = Vec::with_capacity(k);
        for _ in 0..k {
            let i = r.gen_range(0..pool.len());
            picked.push(pool.swap_remove(i));
        }
        let mut label = if r.gen_bool(0.5) { Label::Series } else { Label::Parallel };
        if label == Label::Series {
            let total: usize = picked.iter().map(|p| p.1.len()).sum();
            let inside: usize = picked.iter().map(|p| p.1.len() * p.1.len()).sum();
            if edges.len().saturating_add((total * total - inside) / 2) > max_edges {
                label = Label::Parallel;
            }
        }
        if label == Label::Series {
            for i in 0..k {
                for j in i + 1..k {
                    for &a in &picked[i].1 {
                        for &c in &picked[j].1 {
                            edges.push((a, c));
                        }
                    }
                }
            }
        }
        let node = b.node(label, picked.iter().map(|p| p.0).collect());
        let verts = picked.into_iter().flat_map(|p| p.1).collect();
        pool.push((node, verts));
    }
    let root = pool[0].0;
    let g = Graph::from_edge_list(n, &edges)?;
    Ok((g, b.finish_reduced(n, root)?))
}

/// Substitutes a random graph on `size` vertices for a random vertex of `g`.
///
/// Returns the new graph and the planted vertex set, which is a module of it.
pub fn plant_module(g: &Graph, size: usize, seed: u64) -> Result<(Graph, VertexSet)> {
    if size == 0 || g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut r = rng(seed);
    let x = r.gen_range(0..g.n());
    let h = random_gnp(size, 0.5, r.gen())?;
    substitute(g, x, &h)
}

/// Disjoint union of cliques with random sizes.
pub fn random_cluster_graph(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    let mut start = 0;
    while start < n {
        let len = r.gen_range(1..=4).min(n - start);
        for a in start..start + len {
            for c in a + 1..start + len {
                edges.push((a, c));
            }
        }
        start += len;
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_module;

    #[test]
    fn gnp_extremes_and_determinism() {
        assert_eq!(random_gnp(6, 0.0, 9).unwrap().m(), 0);
        assert_eq!(random_gnp(6, 1.0, 9).unwrap().m(), 15);
        assert_eq!(random_gnp(50, 0.3, 4).unwrap(), random_gnp(50, 0.3, 4).unwrap());
        assert!(random_gnp(0, 0.5, 1).is_err());
        let g = random_gnp(400, 0.1, 2).unwrap();
        let expect = 0.1 * (400.0 * 399.0 / 2.0);
        assert!((g.m() as f64 - expect).abs() < 0.1 * expect);
    }

    #[test]
    fn cotree_matches_graph() {
        for seed in 0..10 {
            let (g, t) = random_cotree_graph(20, seed).unwrap();
            assert!(t.is_reduced());
            for x in 0..20 {
                for y in 0..20 {
                    if x != y {
                        assert_eq!(t.degenerate_adjacent(x, y), Some(g.has_edge(x, y)));
                    }
                }
            }
        }
        let (g, _) = random_cotree_graph_capped(2000, 1, 5000).unwrap();
        assert!(g.m() <= 5000);
    }

    #[test]
    fn planted_set_is_module() {
        let g = random_gnp(10, 0.5, 3).unwrap();
        let (h, m) = plant_module(&g, 4, 3).unwrap();
        assert_eq!(h.n(), 13);
        assert_eq!(m.len(), 4);
        assert!(is_module(&h, &m));
    }
}
