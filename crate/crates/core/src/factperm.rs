//! Factoring permutations, fractures, and the route from a factoring
//! permutation to the modular decomposition tree.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mdtree::{verify_md_tree, Label, MdTree, TreeBuilder};
use crate::modpart::Engine;
use crate::partition::{OrderedPartition, PartId, Placement};
use std::fmt;

/// A permutation of the vertices, stored both ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoringPermutation {
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl FactoringPermutation {
    /// Wraps `order` (rank to vertex). Fails unless it is a permutation of `0..order.len()`.
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::NotAPermutation(format!("{v} is out of range")));
            }
            if rank[v] != usize::MAX {
                return Err(Error::NotAPermutation(format!("{v} appears twice")));
            }
            rank[v] = i;
        }
        Ok(FactoringPermutation { order, rank })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn vertex(&self, i: usize) -> usize {
        self.order[i]
    }
}

/// A permutation in which every strong module of `g` is an interval.
///
/// Runs the ordered pivot loop around a center vertex, then recurses into
/// every part of size two or more.
///
/// ```
/// use modtree::{factoring_permutation, Graph};
/// let g = Graph::from_edge_list(5, &[(0, 3), (1, 3), (3, 4), (2, 4)]).unwrap();
/// let p = factoring_permutation(&g);
/// // {0, 1} is a module, so its vertices are adjacent in the order.
/// assert_eq!(p.rank(0).abs_diff(p.rank(1)), 1);
/// ```
pub fn factoring_permutation(g: &Graph) -> FactoringPermutation {
    run(g, false).0
}

type Trace = Vec<(usize, Vec<usize>, Vec<Vec<Vec<usize>>>)>;

/// Returns the permutation and, if asked, one entry per level: the center,
/// the vertex set of the subproblem, and the partition after each refine.
fn run(g: &Graph, traced: bool) -> (FactoringPermutation, Trace) {
    let n = g.n();
    let mut trace = Vec::new();
    if n == 0 {
        return (FactoringPermutation { order: Vec::new(), rank: Vec::new() }, trace);
    }
    let mut p = OrderedPartition::new(n);
    let mut e = Engine::new(g, true);
    let mut last = vec![usize::MAX; n];
    let mut work: Vec<(PartId, usize)> = vec![(p.part_of(0), 0)];
    let mut region = 0u32;
    let mut nb = Vec::new();
    while let Some((x, v)) = work.pop() {
        region += 1;
        let members = if traced { p.elements_of(x) } else { Vec::new() };
        nb.clear();
        nb.extend(g.neighbors(v).iter().copied().filter(|&u| p.part_of(u) == x));
        let mut init = Vec::with_capacity(3);
        let sp = p.refine(&nb, Placement::Right).expect("in range");
        let right = sp.first().map(|s| s.new);
        let sp = p.refine(&[v], Placement::Right).expect("in range");
        let center = p.part_of(v);
        if let Some(s) = sp.first() {
            init.push(s.old);
        }
        init.push(center);
        init.extend(right);
        e.grow(p.part_count());
        e.center = center;
        for &q in &init {
            e.region[q] = region;
        }
        if traced {
            e.trace = Some(vec![p.parts()]);
        }
        e.pivots.clear();
        e.created.clear();
        e.run(&mut p, &init, region);
        if let Some(t) = e.trace.take() {
            trace.push((v, members, t));
        }
        for &x in &e.pivots {
            last[p.part_of(x)] = x;
        }
        let level: Vec<PartId> = init.iter().chain(&e.created).copied().collect();
        for q in level {
            if p.size(q) > 1 {
                let c = if last[q] != usize::MAX && p.part_of(last[q]) == q { last[q] } else { p.first(q) };
                work.push((q, c));
            }
            last[q] = usize::MAX;
        }
    }
    let order = p.sequence();
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    (FactoringPermutation { order, rank }, trace)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FractureKind {
    Left,
    Right,
}

/// A fracture anchored at the consecutive pair at ranks `i` and `i + 1`.
///
/// `lo..=hi` is the fracture interval in ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fracture {
    pub kind: FractureKind,
    pub i: usize,
    pub lo: usize,
    pub hi: usize,
}

impl fmt::Display for Fracture {
    /// `kind i j lo hi`, one fracture per line in the debug dump.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            FractureKind::Left => "left",
            FractureKind::Right => "right",
        };
        write!(f, "{kind} {} {} {} {}", self.i, self.i + 1, self.lo, self.hi)
    }
}

/// Leftmost splitter rank below `i` and rightmost above `i + 1`, per gap `i`.
fn gap_splitters(g: &Graph, s: &FactoringPermutation) -> Vec<(Option<usize>, Option<usize>)> {
    let n = g.n();
    // Neighbor ranks, sorted by bucketing on the rank of the source.
    let mut radj: Vec<Vec<usize>> = (0..n).map(|v| Vec::with_capacity(g.degree(v))).collect();
    for (i, &u) in s.order.iter().enumerate() {
        for &w in g.neighbors(u) {
            radj[w].push(i);
        }
    }
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n.saturating_sub(1) {
        let a = &radj[s.order[i]];
        let b = &radj[s.order[i + 1]];
        let first = first_difference(a.iter(), b.iter(), usize::min);
        let lo = first.filter(|&z| z < i);
        let hi = first
            .and_then(|_| first_difference(a.iter().rev(), b.iter().rev(), usize::max))
            .filter(|&z| z > i + 1);
        out.push((lo, hi));
    }
    out
}

fn first_difference<'a>(
    mut a: impl Iterator<Item = &'a usize>,
    mut b: impl Iterator<Item = &'a usize>,
    pick: fn(usize, usize) -> usize,
) -> Option<usize> {
    loop {
        match (a.next(), b.next()) {
            (Some(&x), Some(&y)) if x != y => return Some(pick(x, y)),
            (Some(_), Some(_)) => {}
            (Some(&x), None) | (None, Some(&x)) => return Some(x),
            (None, None) => return None,
        }
    }
}

/// Left and right fractures of every consecutive pair of `s`.
///
/// `s` need not be factoring.
pub fn fractures(g: &Graph, s: &FactoringPermutation) -> Vec<Fracture> {
    assert_eq!(g.n(), s.len(), "permutation and graph sizes differ");
    let mut out = Vec::new();
    for (i, (lo, hi)) in gap_splitters(g, s).into_iter().enumerate() {
        if let Some(z) = lo {
            out.push(Fracture { kind: FractureKind::Left, i, lo: z, hi: i });
        }
        if let Some(z) = hi {
            out.push(Fracture { kind: FractureKind::Right, i, lo: i + 1, hi: z });
        }
    }
    out
}

/// Ordered tree over rank positions. Ids `0..n` are the leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractureTree {
    n: usize,
    children: Vec<Vec<usize>>,
    span: Vec<(usize, usize)>,
    root: usize,
}

impl FractureTree {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    /// First and last rank under node `i`.
    pub fn span(&self, i: usize) -> (usize, usize) {
        self.span[i]
    }

    pub fn internal_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.n..self.children.len()
    }
}

/// Forgets the pairing of the fracture intervals and reads the tree off the
/// resulting parenthesis counts. Unary nodes are spliced out.
///
/// ```
/// use modtree::{fracture_tree, Fracture, FractureKind};
/// let f = Fracture { kind: FractureKind::Left, i: 2, lo: 1, hi: 2 };
/// let t = fracture_tree(4, &[f]);
/// assert_eq!(t.children(t.root()).len(), 3);
/// ```
pub fn fracture_tree(n: usize, fractures: &[Fracture]) -> FractureTree {
    assert!(n > 0, "fracture tree needs a rank");
    let mut op = vec![0u32; n];
    let mut cl = vec![0u32; n];
    op[0] += 1;
    cl[n - 1] += 1;
    for f in fractures {
        assert!(f.lo <= f.hi && f.hi < n, "fracture {f} out of range");
        op[f.lo] += 1;
        cl[f.hi] += 1;
    }
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut span: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
    let mut items: Vec<usize> = Vec::new();
    let mut marks: Vec<usize> = Vec::new();
    for j in 0..n {
        marks.extend(std::iter::repeat(items.len()).take(op[j] as usize));
        items.push(j);
        for _ in 0..cl[j] {
            let m = marks.pop().expect("parenthesis counts are balanced");
            if items.len() - m == 1 {
                continue;
            }
            let kids = items.split_off(m);
            span.push((span[kids[0]].0, span[*kids.last().unwrap()].1));
            children.push(kids);
            items.push(children.len() - 1);
        }
    }
    assert!(marks.is_empty() && items.len() == 1, "unbalanced fracture system");
    FractureTree { n, children, span, root: items[0] }
}

/// The modular decomposition tree read off a factoring permutation.
///
/// The result is checked with [`verify_md_tree`]; a permutation that is not
/// factoring gives [`Error::NotFactoring`] rather than a wrong tree.
///
/// ```
/// use modtree::{factoring_permutation, md_tree_from_factperm, Graph, Label};
/// let g = Graph::complete(4);
/// let t = md_tree_from_factperm(&g, &factoring_permutation(&g)).unwrap();
/// assert_eq!(t.label(t.root()), Label::Series);
/// ```
pub fn md_tree_from_factperm(g: &Graph, s: &FactoringPermutation) -> Result<MdTree> {
    let n = g.n();
    if n != s.len() {
        return Err(Error::NotAPermutation(format!("length {} for {} vertices", s.len(), n)));
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n == 1 {
        return Ok(MdTree::single());
    }
    let mut op = vec![0u32; n];
    let mut cl = vec![0u32; n];
    op[0] = 1;
    cl[n - 1] = 1;
    let mut lc: Vec<usize> = (0..n - 1).collect();
    let mut uc: Vec<usize> = (1..n).collect();
    for (i, (lo, hi)) in gap_splitters(g, s).into_iter().enumerate() {
        if let Some(z) = lo {
            op[z] += 1;
            cl[i] += 1;
            lc[i] = z;
        }
        if let Some(z) = hi {
            op[i + 1] += 1;
            cl[z] += 1;
            uc[i] = z;
        }
    }
    drop_non_modules(&mut op, &mut cl, &lc, &uc);
    group_twin_runs(&mut op, &mut cl, &lc, &uc);
    let t = build_tree(g, s, &op, &cl)?;
    verify_md_tree(g, &t).map_err(|v| Error::NotFactoring(v.to_string()))?;
    Ok(t)
}

/// Removes the parentheses of every node whose interval has a splitter outside it.
fn drop_non_modules(op: &mut [u32], cl: &mut [u32], lc: &[usize], uc: &[usize]) {
    // (first rank, last rank, leftmost cutter, rightmost cutter)
    let mut items: Vec<(usize, usize, usize, usize)> = Vec::new();
    let mut marks: Vec<usize> = Vec::new();
    for j in 0..op.len() {
        marks.extend(std::iter::repeat(items.len()).take(op[j] as usize));
        items.push((j, j, j, j));
        for _ in 0..cl[j] {
            let m = marks.pop().expect("balanced");
            let kids = items.split_off(m);
            let (a, b) = (kids[0].0, kids[kids.len() - 1].1);
            let mut lo = a;
            let mut hi = b;
            for (t, k) in kids.iter().enumerate() {
                lo = lo.min(k.2);
                hi = hi.max(k.3);
                if t + 1 < kids.len() {
                    lo = lo.min(lc[k.1]);
                    hi = hi.max(uc[k.1]);
                }
            }
            if !(a < b && a <= lo && hi <= b) {
                op[a] -= 1;
                cl[b] -= 1;
            }
            items.push((a, b, lo, hi));
        }
    }
}

/// Wraps runs of consecutive siblings that form a module into a node of their own.
fn group_twin_runs(op: &mut [u32], cl: &mut [u32], lc: &[usize], uc: &[usize]) {
    let n = op.len();
    // (start of the current child, start of the current run)
    let mut s: Vec<(usize, usize)> = Vec::with_capacity(n);
    let mut l = 0;
    for k in 0..n {
        s.push((k, l));
        l = k;
        s.extend(std::iter::repeat((k, k)).take(op[k] as usize));
        for c in (0..=cl[k]).rev() {
            let (j, i) = s.pop().expect("balanced");
            l = i;
            if i >= j {
                continue;
            }
            let (a, b) = (lc[j - 1], uc[j - 1]);
            if i <= a && a < b && b <= k {
                if c > 0 {
                    op[i] += 1;
                    cl[k] += 1;
                    l = k + 1;
                }
            } else {
                if i < j - 1 {
                    op[i] += 1;
                    cl[j - 1] += 1;
                }
                l = j;
            }
        }
    }
}

fn build_tree(g: &Graph, s: &FactoringPermutation, op: &[u32], cl: &[u32]) -> Result<MdTree> {
    let n = g.n();
    let mut b = TreeBuilder::new();
    let mut marked = vec![0u32; n];
    let mut gen = 0u32;
    // (representative vertex, builder node)
    let mut items: Vec<(usize, usize)> = Vec::new();
    let mut marks: Vec<usize> = Vec::new();
    for j in 0..n {
        marks.extend(std::iter::repeat(items.len()).take(op[j] as usize));
        let v = s.order[j];
        items.push((v, b.leaf(v)));
        for _ in 0..cl[j] {
            let m = marks.pop().expect("balanced");
            if items.len() - m == 1 {
                continue;
            }
            let kids = items.split_off(m);
            gen += 1;
            for &(x, _) in &kids {
                marked[x] = gen;
            }
            let y = kids.iter().map(|k| k.0).min_by_key(|&x| g.degree(x)).unwrap();
            let d = g.neighbors(y).iter().filter(|&&w| marked[w] == gen).count();
            let label = if d == 0 {
                Label::Parallel
            } else if d == kids.len() - 1 {
                Label::Series
            } else {
                Label::Prime
            };
            let node = b.node(label, kids.iter().map(|k| k.1).collect());
            items.push((y, node));
        }
    }
    if items.len() != 1 || !marks.is_empty() {
        return Err(Error::NotFactoring("parenthesis system does not close".into()));
    }
    b.finish_reduced(n, items[0].1)
}
