//! Common intervals of two permutations and their strong interval tree.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mdtree::{laminar_tree, strong_modules_bruteforce, NodeKind, SetFamily, StrongTree};
use std::collections::HashSet;

const NIL: usize = usize::MAX;

/// A permutation of `0..n`, stored as ranks and their inverse.
///
/// `rank(x)` is the position of element `x`; `at(p)` is the element at position `p`.
/// Signs are carried along but ignored by every operation here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    rank: Vec<usize>,
    order: Vec<usize>,
    negative: Vec<bool>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self::from_order((0..n).collect()).unwrap()
    }

    pub fn reverse(n: usize) -> Self {
        Self::from_order((0..n).rev().collect()).unwrap()
    }

    /// From the rank of each element.
    pub fn from_ranks(rank: Vec<usize>) -> Result<Self> {
        let order = invert(&rank)?;
        let negative = vec![false; rank.len()];
        Ok(Permutation { rank, order, negative })
    }

    /// From the sequence of elements in rank order.
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let rank = invert(&order)?;
        let negative = vec![false; rank.len()];
        Ok(Permutation { rank, order, negative })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn at(&self, p: usize) -> usize {
        self.order[p]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn is_negative(&self, x: usize) -> bool {
        self.negative[x]
    }

    /// Space-separated 1-based ranks, element by element.
    pub fn to_line(&self) -> String {
        let mut s = String::new();
        for x in 0..self.len() {
            if x > 0 {
                s.push(' ');
            }
            if self.negative[x] {
                s.push('-');
            }
            s.push_str(&(self.rank[x] + 1).to_string());
        }
        s
    }
}

fn invert(a: &[usize]) -> Result<Vec<usize>> {
    let mut inv = vec![NIL; a.len()];
    for (i, &v) in a.iter().enumerate() {
        if v >= a.len() {
            return Err(Error::NotAPermutation(format!("value {v} out of range")));
        }
        if inv[v] != NIL {
            return Err(Error::NotAPermutation(format!("value {v} repeated")));
        }
        inv[v] = i;
    }
    Ok(inv)
}

/// One permutation per line: 1-based ranks `σ(1) σ(2) ... σ(n)`, optionally signed.
pub fn parse_permutations(text: &str) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        let mut ranks = Vec::new();
        let mut negative = Vec::new();
        for tok in line.split_whitespace() {
            let (neg, digits) = match tok.strip_prefix('-') {
                Some(d) => (true, d),
                None => (false, tok.strip_prefix('+').unwrap_or(tok)),
            };
            let v: usize = digits.parse().map_err(|_| err(format!("bad value {tok:?}")))?;
            if v == 0 {
                return Err(err("values are 1-based".into()));
            }
            ranks.push(v - 1);
            negative.push(neg);
        }
        let mut p = Permutation::from_ranks(ranks).map_err(|e| err(e.to_string()))?;
        p.negative = negative;
        out.push(p);
    }
    Ok(out)
}

/// Common intervals of `σ` and `τ`, as rank intervals `[i, j]` of `σ` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonIntervals {
    n: usize,
    pairs: Vec<(usize, usize)>,
    work: u64,
}

impl CommonIntervals {
    /// Sorted pairs, the full range included when `n >= 2`; singletons are left out.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Steps taken by the sweep.
    pub fn work(&self) -> u64 {
        self.work
    }

    /// Sorted pairs including every singleton and the full range.
    pub fn with_trivial(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.pairs.iter().copied().filter(|&(i, j)| j - i + 1 < self.n).collect();
        v.extend((0..self.n).map(|i| (i, i)));
        if self.n > 0 {
            v.push((0, self.n - 1));
        }
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `i j` per line, 1-based.
    pub fn to_text(&self) -> String {
        self.pairs.iter().map(|&(i, j)| format!("{} {}\n", i + 1, j + 1)).collect()
    }
}

/// Every common interval of `σ` and `τ` with at least two elements.
///
/// ```
/// use modtree::{common_intervals, Permutation};
/// let s = Permutation::identity(4);
/// let t = Permutation::from_order(vec![1, 0, 3, 2]).unwrap();
/// let c = common_intervals(&s, &t).unwrap();
/// assert_eq!(c.pairs(), &[(0, 1), (0, 3), (2, 3)]);
/// ```
pub fn common_intervals(sigma: &Permutation, tau: &Permutation) -> Result<CommonIntervals> {
    if sigma.len() != tau.len() {
        return Err(Error::GroundSetMismatch);
    }
    let pi: Vec<usize> = sigma.order.iter().map(|&x| tau.rank[x]).collect();
    let (pairs, work) = sweep(&pi);
    Ok(CommonIntervals { n: pi.len(), pairs, work })
}

fn find(parent: &mut [usize], mut x: usize, work: &mut u64) -> usize {
    while parent[x] != x {
        *work += 1;
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Right-to-left sweep over `pi` keeping the candidate right ends whose excess
/// `(max - min) - (r - i)` is nondecreasing from left to right.
fn sweep(pi: &[usize]) -> (Vec<(usize, usize)>, u64) {
    let n = pi.len();
    let mut work = 0u64;
    // Staircases: segments of equal running max (min), by start position.
    let (mut smax, mut smin): (Vec<usize>, Vec<usize>) = (Vec::new(), Vec::new());
    let (mut umax, mut umin): (Vec<usize>, Vec<usize>) = ((0..n).collect(), (0..n).collect());
    let (mut vmax, mut vmin) = (vec![0; n], vec![0; n]);
    let mut alive: Vec<usize> = (0..=n).collect();
    let (mut prev, mut next) = (vec![NIL; n], vec![NIL; n]);
    let mut head = NIL;
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut found: Vec<(usize, usize)> = Vec::new();
    let mut bounds = Vec::new();
    for i in (0..n).rev() {
        work += 1;
        bounds.clear();
        for (stack, uf, val, bigger) in
            [(&mut smax, &mut umax, &mut vmax, true), (&mut smin, &mut umin, &mut vmin, false)]
        {
            let mut popped = false;
            while let Some(&s) = stack.last() {
                let beaten = if bigger { val[s] < pi[i] } else { val[s] > pi[i] };
                if !beaten {
                    break;
                }
                work += 1;
                stack.pop();
                uf[s] = i;
                if s != i + 1 {
                    bounds.push(s);
                }
                popped = true;
            }
            if popped {
                if let Some(&s) = stack.last() {
                    bounds.push(s);
                }
            }
            val[i] = pi[i];
            stack.push(i);
        }
        let mut excess = |r: usize, work: &mut u64| {
            let hi = vmax[find(&mut umax, r, work)];
            let lo = vmin[find(&mut umin, r, work)];
            hi - lo - (r - i)
        };
        for &b in &bounds {
            work += 1;
            let r2 = find(&mut alive, b, &mut work);
            if r2 == n {
                continue;
            }
            let f2 = excess(r2, &mut work);
            while prev[r2] != NIL {
                let r1 = prev[r2];
                work += 1;
                if excess(r1, &mut work) <= f2 {
                    break;
                }
                let p = prev[r1];
                prev[r2] = p;
                if p == NIL {
                    head = r2;
                } else {
                    next[p] = r2;
                }
                alive[r1] = r1 + 1;
            }
        }
        let start = found.len();
        let mut r = head;
        while r != NIL && excess(r, &mut work) == 0 {
            work += 1;
            found.push((i, r));
            r = next[r];
        }
        blocks.push((start, found.len()));
        next[i] = head;
        if head != NIL {
            prev[head] = i;
        }
        head = i;
    }
    let mut pairs = Vec::with_capacity(found.len());
    for &(a, b) in blocks.iter().rev() {
        pairs.extend_from_slice(&found[a..b]);
    }
    (pairs, work)
}

/// Intervals of the list overlapped by no other, in `O(K log n)`.
fn strong_pairs(n: usize, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let left = overlapped_from_left(n, pairs);
    let mirrored: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (n - 1 - j, n - 1 - i)).collect();
    let right = overlapped_from_left(n, &mirrored);
    pairs.iter().enumerate().filter(|&(k, _)| !left[k] && !right[k]).map(|(_, &p)| p).collect()
}

/// For each `(i, j)`: some `(a, b)` has `a < i <= b < j`.
fn overlapped_from_left(n: usize, pairs: &[(usize, usize)]) -> Vec<bool> {
    let mut idx: Vec<usize> = (0..pairs.len()).collect();
    idx.sort_unstable_by_key(|&k| pairs[k].0);
    let mut fen = vec![0u32; n + 1];
    let add = |fen: &mut Vec<u32>, mut x: usize| {
        x += 1;
        while x <= n {
            fen[x] += 1;
            x += x & x.wrapping_neg();
        }
    };
    let sum = |fen: &Vec<u32>, mut x: usize| {
        let mut s = 0;
        while x > 0 {
            s += fen[x];
            x -= x & x.wrapping_neg();
        }
        s
    };
    let mut out = vec![false; pairs.len()];
    let mut g = 0;
    while g < idx.len() {
        let a = pairs[idx[g]].0;
        let mut h = g;
        while h < idx.len() && pairs[idx[h]].0 == a {
            let (i, j) = pairs[idx[h]];
            out[idx[h]] = sum(&fen, j) > sum(&fen, i);
            h += 1;
        }
        for &k in &idx[g..h] {
            add(&mut fen, pairs[k].1);
        }
        g = h;
    }
    out
}

/// Inclusion tree of the strong common intervals.
#[derive(Clone, Debug)]
pub struct StrongIntervalTree {
    tree: StrongTree,
    span: Vec<(usize, usize)>,
    kind: Vec<NodeKind>,
}

impl StrongIntervalTree {
    pub fn root(&self) -> usize {
        self.tree.root()
    }

    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tree.is_empty()
    }

    /// Elements of node `i`, sorted.
    pub fn set(&self, i: usize) -> &[usize] {
        &self.tree.sets[i]
    }

    /// Children sorted by their rank in `σ`.
    pub fn children(&self, i: usize) -> &[usize] {
        &self.tree.children[i]
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.tree.parent[i]
    }

    /// Rank interval of node `i` in `σ`, inclusive.
    pub fn span(&self, i: usize) -> (usize, usize) {
        self.span[i]
    }

    pub fn kind(&self, i: usize) -> NodeKind {
        self.kind[i]
    }

    pub fn strong_tree(&self) -> &StrongTree {
        &self.tree
    }

    /// Node sets as a family.
    pub fn family(&self) -> SetFamily {
        SetFamily::new(self.tree.sets[0].len(), self.tree.sets.iter().cloned()).expect("node sets are valid")
    }

    /// Indented outline: one node per line with its kind and 1-based rank span.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut stack = vec![(self.root(), 0)];
        while let Some((i, d)) = stack.pop() {
            let (a, b) = self.span[i];
            let kind = match self.kind[i] {
                NodeKind::Leaf => "leaf",
                NodeKind::Degenerate => "linear",
                NodeKind::Prime => "prime",
            };
            out.push_str(&format!("{}{kind} {} {}\n", "  ".repeat(d), a + 1, b + 1));
            for &c in self.children(i).iter().rev() {
                stack.push((c, d + 1));
            }
        }
        out
    }
}

/// Strong interval tree of `σ` and `τ`; a node is degenerate when two adjacent
/// children already form a common interval.
pub fn strong_interval_tree(sigma: &Permutation, tau: &Permutation) -> Result<StrongIntervalTree> {
    let n = sigma.len();
    if n == 0 {
        return Err(Error::EmptySet);
    }
    let common = common_intervals(sigma, tau)?;
    let index: HashSet<(usize, usize)> = common.pairs.iter().copied().collect();
    let mut spans = strong_pairs(n, &common.pairs);
    spans.retain(|&(i, j)| j - i + 1 < n);
    spans.push((0, n - 1));
    spans.extend((0..n).map(|i| (i, i)));
    spans.sort_unstable();
    spans.dedup();
    let sets: Vec<Vec<usize>> = spans
        .iter()
        .map(|&(i, j)| {
            let mut s = sigma.order[i..=j].to_vec();
            s.sort_unstable();
            s
        })
        .collect();
    let tree = laminar_tree(n, sets)?;
    let span: Vec<(usize, usize)> = tree
        .sets
        .iter()
        .map(|s| {
            let lo = s.iter().map(|&x| sigma.rank[x]).min().unwrap();
            (lo, lo + s.len() - 1)
        })
        .collect();
    let mut tree = tree;
    for ch in &mut tree.children {
        ch.sort_by_key(|&c| span[c].0);
    }
    let kind = (0..tree.len())
        .map(|i| {
            let ch = &tree.children[i];
            match ch.len() {
                0 => NodeKind::Leaf,
                2 => NodeKind::Degenerate,
                _ if index.contains(&(span[ch[0]].0, span[ch[1]].1)) => NodeKind::Degenerate,
                _ => NodeKind::Prime,
            }
        })
        .collect();
    Ok(StrongIntervalTree { tree, span, kind })
}

/// Vertices `i < j` are adjacent iff `σ(j) < σ(i)`.
///
/// ```
/// use modtree::{realizer_to_permutation_graph, Permutation};
/// let g = realizer_to_permutation_graph(&Permutation::from_ranks(vec![1, 0, 3, 2]).unwrap());
/// assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
/// ```
pub fn realizer_to_permutation_graph(sigma: &Permutation) -> Graph {
    let n = sigma.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if sigma.rank[j] < sigma.rank[i] {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("inversions are simple edges")
}

/// Compares the strong modules of the permutation graph of `σ` with the strong
/// common intervals of the identity and `σ`. Needs `n <= 14`.
pub fn strong_modules_equal_strong_common_intervals(sigma: &Permutation) -> Result<bool> {
    const LIMIT: usize = 14;
    if sigma.len() > LIMIT {
        return Err(Error::TooLarge { what: "permutation", size: sigma.len(), limit: LIMIT });
    }
    let g = realizer_to_permutation_graph(sigma);
    let modules = strong_modules_bruteforce(&g)?;
    let tree = strong_interval_tree(&Permutation::identity(sigma.len()), sigma)?;
    Ok(modules == tree.family())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::rng;
    use crate::mdtree::{build_strong_tree, classify_nodes, Label};
    use crate::md_tree;
    use rand::seq::SliceRandom;

    fn random_perm(n: usize, seed: u64) -> Permutation {
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(&mut rng(seed));
        Permutation::from_order(v).unwrap()
    }

    fn brute(s: &Permutation, t: &Permutation) -> Vec<(usize, usize)> {
        let n = s.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let r: Vec<usize> = (i..=j).map(|p| t.rank(s.at(p))).collect();
                if r.iter().max().unwrap() - r.iter().min().unwrap() == j - i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn splitters(s: &Permutation, t: &Permutation, i: usize, j: usize) -> usize {
        let r: Vec<usize> = (i..=j).map(|p| t.rank(s.at(p))).collect();
        let (lo, hi) = (*r.iter().min().unwrap(), *r.iter().max().unwrap());
        (lo..=hi).filter(|v| !r.contains(v)).count()
    }

    #[test]
    fn identical_and_reversed() {
        for n in 1..9 {
            let all = n * (n - 1) / 2;
            let id = Permutation::identity(n);
            assert_eq!(common_intervals(&id, &id).unwrap().len(), all);
            assert_eq!(common_intervals(&id, &Permutation::reverse(n)).unwrap().len(), all);
        }
    }

    #[test]
    fn matches_enumeration() {
        for seed in 0..500 {
            let n = 1 + seed as usize % 12;
            let (s, t) = (random_perm(n, seed), random_perm(n, seed + 10_000));
            let c = common_intervals(&s, &t).unwrap();
            assert_eq!(c.pairs(), brute(&s, &t).as_slice(), "seed {seed}");
            for &(i, j) in c.pairs() {
                assert_eq!(splitters(&s, &t, i, j), 0);
            }
        }
    }

    #[test]
    fn mismatched_ground_sets() {
        let r = common_intervals(&Permutation::identity(3), &Permutation::identity(4));
        assert_eq!(r, Err(Error::GroundSetMismatch));
    }

    #[test]
    fn sweep_is_output_sensitive() {
        let mut ratios = Vec::new();
        for k in 8..=14 {
            let n = 1usize << k;
            let c = common_intervals(&Permutation::identity(n), &random_perm(n, k as u64)).unwrap();
            let r = c.work() as f64 / (n + c.len()) as f64;
            assert!(r <= 24.0, "n {n}: {} steps for K {}", c.work(), c.len());
            ratios.push(r);
        }
        assert!(ratios.last().unwrap() / ratios[0] <= 1.25, "{ratios:?}");
        for k in 8..=11 {
            let n = 1usize << k;
            let id = Permutation::identity(n);
            let c = common_intervals(&id, &id).unwrap();
            assert_eq!(c.len(), n * (n - 1) / 2);
            assert!(c.work() as f64 <= 24.0 * (n + c.len()) as f64);
        }
    }

    #[test]
    fn weak_partitivity() {
        for seed in 0..200 {
            let n = 2 + seed as usize % 11;
            let (s, t) = (random_perm(n, seed), random_perm(n, seed + 777));
            let all: HashSet<(usize, usize)> = common_intervals(&s, &t).unwrap().with_trivial().into_iter().collect();
            for &(a, b) in &all {
                for &(c, d) in &all {
                    if a < c && c <= b && b < d {
                        for iv in [(c, b), (a, d), (a, c - 1), (b + 1, d)] {
                            assert!(all.contains(&iv), "seed {seed}: {iv:?}");
                        }
                    }
                }
            }
        }
    }

    fn family(s: &Permutation, t: &Permutation) -> SetFamily {
        let c = common_intervals(s, t).unwrap();
        let sets = c.with_trivial().into_iter().map(|(i, j)| s.order()[i..=j].to_vec());
        SetFamily::new(s.len(), sets).unwrap()
    }

    #[test]
    fn strong_tree_matches_generic_builder() {
        for seed in 0..300 {
            let n = 1 + seed as usize % 10;
            let (s, t) = (random_perm(n, seed), random_perm(n, seed + 31));
            let f = family(&s, &t);
            let generic = build_strong_tree(&f).unwrap();
            let kinds = classify_nodes(&generic, &f, false).unwrap();
            let ours = strong_interval_tree(&s, &t).unwrap();
            assert_eq!(ours.len(), generic.len(), "seed {seed}");
            for i in 0..generic.len() {
                let j = (0..ours.len()).find(|&j| ours.set(j) == generic.sets[i].as_slice()).unwrap();
                assert_eq!(ours.kind(j), kinds[i], "seed {seed} node {:?}", generic.sets[i]);
            }
        }
    }

    #[test]
    fn identity_tree_is_one_linear_node() {
        for n in 2..9 {
            let id = Permutation::identity(n);
            let t = strong_interval_tree(&id, &id).unwrap();
            assert_eq!(t.len(), n + 1);
            assert_eq!(t.children(t.root()).len(), n);
            assert_eq!(t.kind(t.root()), NodeKind::Degenerate);
        }
    }

    #[test]
    fn overlapping_pair_is_not_strong() {
        // Blocks {0,1}, {2,3,4}, {5,6}, {7,8,9,10} in the prime pattern 2 4 1 3;
        // the last block keeps its order, so 1-based {8,9} and {9,10,11} overlap.
        let t = Permutation::from_order(vec![2, 3, 4, 7, 8, 9, 10, 0, 1, 5, 6]).unwrap();
        let s = Permutation::identity(11);
        let c = common_intervals(&s, &t).unwrap();
        assert!(c.pairs().contains(&(7, 8)) && c.pairs().contains(&(8, 10)));
        let tree = strong_interval_tree(&s, &t).unwrap();
        let strong: Vec<&[usize]> = (0..tree.len()).map(|i| tree.set(i)).collect();
        assert!(!strong.contains(&[7, 8].as_slice()));
        assert!(!strong.contains(&[8, 9, 10].as_slice()));
        assert!(strong.contains(&[7, 8, 9, 10].as_slice()));
        // Rule: no two strong nodes overlap, on random instances too.
        for seed in 0..100 {
            let (s, t) = (random_perm(12, seed), random_perm(12, seed + 5));
            let tree = strong_interval_tree(&s, &t).unwrap();
            for a in 0..tree.len() {
                for b in 0..tree.len() {
                    assert!(!crate::mdtree::overlap(tree.set(a), tree.set(b)));
                }
            }
        }
    }

    #[test]
    fn realizer_graphs() {
        assert_eq!(realizer_to_permutation_graph(&Permutation::identity(5)).m(), 0);
        assert_eq!(realizer_to_permutation_graph(&Permutation::reverse(5)).m(), 10);
    }

    #[test]
    fn strong_modules_are_strong_intervals() {
        assert!(strong_modules_equal_strong_common_intervals(&Permutation::identity(6)).unwrap());
        for seed in 0..500 {
            let n = 1 + seed as usize % 12;
            let s = random_perm(n, seed);
            assert!(strong_modules_equal_strong_common_intervals(&s).unwrap(), "seed {seed}");
        }
        assert!(strong_modules_equal_strong_common_intervals(&Permutation::identity(15)).is_err());
    }

    #[test]
    fn interval_tree_is_the_decomposition_tree() {
        for seed in 0..200 {
            let n = 1 + seed as usize % 16;
            let s = random_perm(n, seed);
            let t = strong_interval_tree(&Permutation::identity(n), &s).unwrap();
            let md = md_tree(&realizer_to_permutation_graph(&s));
            assert_eq!(t.len(), md.len(), "seed {seed}");
            for i in 0..md.len() {
                let j = (0..t.len()).find(|&j| t.set(j) == md.vertices(i).as_slice()).unwrap();
                let prime = md.label(i) == Label::Prime;
                assert_eq!(t.kind(j) == NodeKind::Prime, prime, "seed {seed}");
            }
        }
    }

    #[test]
    fn permutation_lines() {
        let p = parse_permutations("# pair\n2 1 -4 3\n\n1 2 3 4\n").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p[0].ranks(), &[1, 0, 3, 2]);
        assert!(p[0].is_negative(2));
        assert_eq!(p[0].to_line(), "2 1 -4 3");
        assert!(matches!(parse_permutations("1 1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_permutations("1\n0 1"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(Permutation::from_ranks(vec![0, 2]).unwrap_err(), Error::NotAPermutation("value 2 out of range".into()));
    }
}
