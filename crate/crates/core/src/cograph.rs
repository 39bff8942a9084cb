//! Cotrees under vertex insertion and edge insertion or deletion.
//!
//! A [`Cotree`] stores series and parallel nodes only, alternating along every
//! root-to-leaf path. Two vertices are adjacent iff their lowest common ancestor
//! is a series node. Updates that would leave the class of cographs are refused
//! with an induced path on four vertices as a witness.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mdtree::{Label, MdTree, TreeBuilder};
use std::fmt;

const NIL: usize = usize::MAX;

/// Four vertices `a b c d` inducing the path a-b-c-d.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct P4(pub [usize; 4]);

impl fmt::Display for P4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a} {b} {c} {d}")
    }
}

impl P4 {
    /// True if the four vertices induce exactly the path edges in `adj`.
    pub fn holds(&self, adj: impl Fn(usize, usize) -> bool) -> bool {
        let [a, b, c, d] = self.0;
        adj(a, b) && adj(b, c) && adj(c, d) && !adj(a, c) && !adj(a, d) && !adj(b, d)
    }
}

/// Result of an update that may be refused.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Update {
    Done,
    /// The tree is unchanged; the modified graph contains this induced P4.
    Rejected(P4),
}

#[derive(Clone, Debug)]
pub struct Cotree {
    label: Vec<Label>,
    parent: Vec<usize>,
    children: Vec<Vec<usize>>,
    slot: Vec<usize>,
    leaf: Vec<usize>,
    root: usize,
    free: Vec<usize>,
    count: usize,
    marks: Vec<u32>,
    via: Vec<usize>,
    touched: Vec<usize>,
    work: u64,
}

impl Default for Cotree {
    fn default() -> Self {
        Self::new()
    }
}

impl Cotree {
    pub fn new() -> Self {
        Cotree {
            label: Vec::new(),
            parent: Vec::new(),
            children: Vec::new(),
            slot: Vec::new(),
            leaf: Vec::new(),
            root: NIL,
            free: Vec::new(),
            count: 0,
            marks: Vec::new(),
            via: Vec::new(),
            touched: Vec::new(),
            work: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.count
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.leaf.get(v).is_some_and(|&l| l != NIL)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.leaf.len()).filter(|&v| self.leaf[v] != NIL)
    }

    /// Tree nodes touched by updates so far.
    pub fn work(&self) -> u64 {
        self.work
    }

    pub fn reset_work(&mut self) {
        self.work = 0;
    }

    /// Internal nodes currently in the tree.
    pub fn internal_count(&self) -> usize {
        self.label.len() - self.free.len() - self.count
    }

    fn new_node(&mut self, l: Label) -> usize {
        self.work += 1;
        if let Some(i) = self.free.pop() {
            self.label[i] = l;
            self.parent[i] = NIL;
            self.children[i].clear();
            self.marks[i] = 0;
            self.via[i] = NIL;
            return i;
        }
        self.label.push(l);
        self.parent.push(NIL);
        self.children.push(Vec::new());
        self.slot.push(NIL);
        self.marks.push(0);
        self.via.push(NIL);
        self.label.len() - 1
    }

    fn new_leaf(&mut self, v: usize) -> usize {
        let l = self.new_node(Label::Leaf(v));
        if self.leaf.len() <= v {
            self.leaf.resize(v + 1, NIL);
        }
        self.leaf[v] = l;
        self.count += 1;
        l
    }

    fn release(&mut self, i: usize) {
        debug_assert!(self.children[i].is_empty());
        self.parent[i] = NIL;
        self.free.push(i);
    }

    fn add_child(&mut self, p: usize, c: usize) {
        self.work += 1;
        self.slot[c] = self.children[p].len();
        self.children[p].push(c);
        self.parent[c] = p;
    }

    fn detach(&mut self, c: usize) {
        self.work += 1;
        let p = self.parent[c];
        let i = self.slot[c];
        self.children[p].swap_remove(i);
        if let Some(&moved) = self.children[p].get(i) {
            self.slot[moved] = i;
        }
        self.parent[c] = NIL;
    }

    /// Puts `new` where `old` hangs, leaving `old` detached.
    fn replace(&mut self, old: usize, new: usize) {
        self.work += 1;
        let p = self.parent[old];
        if p == NIL {
            self.root = new;
        } else {
            let i = self.slot[old];
            self.children[p][i] = new;
            self.slot[new] = i;
            self.parent[new] = p;
            self.parent[old] = NIL;
        }
    }

    fn deg(&self, i: usize) -> usize {
        self.children[i].len()
    }

    fn is_leaf(&self, i: usize) -> bool {
        self.label[i].is_leaf()
    }

    fn vertex_of(&self, i: usize) -> usize {
        match self.label[i] {
            Label::Leaf(v) => v,
            _ => unreachable!("not a leaf"),
        }
    }

    /// Series in the view where labels are swapped when `flip` is set.
    fn series(&self, i: usize, flip: bool) -> bool {
        match self.label[i] {
            Label::Series => !flip,
            Label::Parallel => flip,
            _ => false,
        }
    }

    fn parallel(&self, i: usize, flip: bool) -> bool {
        !self.is_leaf(i) && !self.series(i, flip)
    }

    fn role(series: bool, flip: bool) -> Label {
        if series != flip {
            Label::Series
        } else {
            Label::Parallel
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.count })
        }
    }

    fn any_leaf(&self, mut i: usize) -> usize {
        while !self.is_leaf(i) {
            i = self.children[i][0];
        }
        self.vertex_of(i)
    }

    fn child_toward(&self, anc: usize, mut i: usize) -> usize {
        while self.parent[i] != anc {
            i = self.parent[i];
        }
        i
    }

    fn lca(&self, a: usize, b: usize) -> usize {
        let depth = |mut i: usize| {
            let mut d = 0;
            while self.parent[i] != NIL {
                i = self.parent[i];
                d += 1;
            }
            d
        };
        let (mut a, mut b) = (a, b);
        let (mut da, mut db) = (depth(a), depth(b));
        while da > db {
            a = self.parent[a];
            da -= 1;
        }
        while db > da {
            b = self.parent[b];
            db -= 1;
        }
        while a != b {
            a = self.parent[a];
            b = self.parent[b];
        }
        a
    }

    /// Adjacency of two vertices, read from their lowest common ancestor.
    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        x != y && self.label[self.lca(self.leaf[x], self.leaf[y])] == Label::Series
    }

    /// Adds vertex `x` adjacent to exactly the vertices of `s`.
    ///
    /// ```
    /// use modtree::{Cotree, Update};
    /// let mut t = Cotree::new();
    /// t.insert_vertex(0, &[]).unwrap();
    /// t.insert_vertex(1, &[0]).unwrap();
    /// t.insert_vertex(2, &[1]).unwrap();
    /// // 0-1-2-3 would be an induced path.
    /// assert!(matches!(t.insert_vertex(3, &[2]).unwrap(), Update::Rejected(_)));
    /// ```
    pub fn insert_vertex(&mut self, x: usize, s: &[usize]) -> Result<Update> {
        if self.has_vertex(x) {
            return Err(Error::DuplicateVertex(x));
        }
        for &v in s {
            self.check_vertex(v)?;
        }
        if self.root == NIL {
            self.root = self.new_leaf(x);
            return Ok(Update::Done);
        }
        let mut k = 0;
        for &v in s {
            let l = self.leaf[v];
            if self.marks[l] != 0 {
                continue;
            }
            k += 1;
            self.marks[l] = 1;
            self.touched.push(l);
            self.work += 1;
            let mut c = l;
            loop {
                let p = self.parent[c];
                if p == NIL {
                    break;
                }
                if self.marks[p] == 0 {
                    self.touched.push(p);
                }
                self.marks[p] += 1;
                self.work += 1;
                if self.marks[p] as usize == self.deg(p) {
                    c = p;
                } else {
                    break;
                }
            }
        }
        if k == 0 || self.full(self.root) {
            let all = k > 0;
            self.clear_marks();
            let xl = self.new_leaf(x);
            let r = self.root;
            if self.series(r, false) == all && !self.is_leaf(r) {
                self.add_child(r, xl);
            } else {
                let top = self.new_node(Self::role(all, false));
                self.replace(r, top);
                self.add_child(top, r);
                self.add_child(top, xl);
            }
            return Ok(Update::Done);
        }
        let p = match self.insertion_node() {
            Some(p) => p,
            None => {
                let in_s = self.s_mask(s);
                self.clear_marks();
                return Ok(Update::Rejected(self.vertex_certificate(x, &in_s)));
            }
        };
        let full_kids: Vec<usize> =
            self.touched.iter().copied().filter(|&c| self.parent[c] == p && self.full(c)).collect();
        self.clear_marks();
        let xl = self.new_leaf(x);
        if self.series(p, false) {
            if self.deg(p) - full_kids.len() == 1 {
                let b = *self.children[p].iter().find(|c| !full_kids.contains(c)).unwrap();
                self.detach(b);
                let q = if self.parallel(b, false) {
                    b
                } else {
                    let q = self.new_node(Label::Parallel);
                    self.add_child(q, b);
                    q
                };
                self.add_child(q, xl);
                self.add_child(p, q);
            } else {
                let r = self.new_node(Label::Series);
                self.replace(p, r);
                for &a in &full_kids {
                    self.detach(a);
                    self.add_child(r, a);
                }
                let q = self.new_node(Label::Parallel);
                self.add_child(q, p);
                self.add_child(q, xl);
                self.add_child(r, q);
            }
        } else if full_kids.len() == 1 {
            let a = full_kids[0];
            if self.series(a, false) {
                self.add_child(a, xl);
            } else {
                self.detach(a);
                let q = self.new_node(Label::Series);
                self.add_child(q, a);
                self.add_child(q, xl);
                self.add_child(p, q);
            }
        } else {
            let q = self.new_node(Label::Series);
            let t = self.new_node(Label::Parallel);
            for &a in &full_kids {
                self.detach(a);
                self.add_child(t, a);
            }
            self.add_child(q, t);
            self.add_child(q, xl);
            self.add_child(p, q);
        }
        Ok(Update::Done)
    }

    fn full(&self, i: usize) -> bool {
        if self.is_leaf(i) {
            self.marks[i] > 0
        } else {
            self.marks[i] as usize == self.deg(i)
        }
    }

    fn s_mask(&self, s: &[usize]) -> Vec<bool> {
        let mut m = vec![false; self.leaf.len()];
        for &v in s {
            m[v] = true;
        }
        m
    }

    fn clear_marks(&mut self) {
        for &i in &self.touched {
            self.marks[i] = 0;
            self.via[i] = NIL;
        }
        self.touched.clear();
    }

    /// The deepest mixed node, if the mixed nodes form a path from the root
    /// that satisfies the adjacency conditions.
    fn insertion_node(&mut self) -> Option<usize> {
        let partial: Vec<usize> = self
            .touched
            .iter()
            .copied()
            .filter(|&i| !self.is_leaf(i) && (self.marks[i] as usize) < self.deg(i))
            .collect();
        let mut ok = true;
        'climb: for &a in &partial {
            let mut c = a;
            let mut q = self.parent[a];
            while q != NIL {
                self.work += 1;
                if self.via[q] != NIL {
                    if self.via[q] != c {
                        ok = false;
                        break 'climb;
                    }
                    break;
                }
                if self.marks[q] == 0 {
                    self.touched.push(q);
                }
                self.via[q] = c;
                let m = self.marks[q] as usize;
                let fine = if self.series(q, false) { m + 1 == self.deg(q) } else { m == 0 };
                if !fine {
                    ok = false;
                    break 'climb;
                }
                c = q;
                q = self.parent[q];
            }
        }
        if !ok {
            return None;
        }
        let mut bottom = partial.iter().filter(|&&a| self.via[a] == NIL);
        let p = bottom.next().copied();
        if bottom.next().is_some() {
            return None;
        }
        p
    }

    /// Witness vertices below every node: one in `s` and one outside it.
    fn witnesses(&self, in_s: &[bool]) -> (Vec<usize>, Vec<usize>) {
        let k = self.label.len();
        let (mut ws, mut wn) = (vec![NIL; k], vec![NIL; k]);
        let mut order = vec![self.root];
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            order.extend(self.children[q].iter().copied());
            i += 1;
        }
        for &q in order.iter().rev() {
            if self.is_leaf(q) {
                let v = self.vertex_of(q);
                if in_s.get(v).copied().unwrap_or(false) {
                    ws[q] = v;
                } else {
                    wn[q] = v;
                }
            } else {
                for &c in &self.children[q] {
                    if ws[q] == NIL {
                        ws[q] = ws[c];
                    }
                    if wn[q] == NIL {
                        wn[q] = wn[c];
                    }
                }
            }
        }
        (ws, wn)
    }

    /// A P4 through `x` in the graph with `x` joined to `in_s`, found by walking
    /// the mixed nodes down from the root.
    fn vertex_certificate(&self, x: usize, in_s: &[bool]) -> P4 {
        let (ws, wn) = self.witnesses(in_s);
        let mixed = |c: usize| ws[c] != NIL && wn[c] != NIL;
        // (in s, not in s) from two different children of a mixed node
        let split = |c: usize| -> (usize, usize) {
            let ch = &self.children[c];
            let i1 = ch.iter().position(|&d| ws[d] != NIL).unwrap();
            let j1 = ch.iter().position(|&d| wn[d] != NIL).unwrap();
            if i1 != j1 {
                return (ws[ch[i1]], wn[ch[j1]]);
            }
            if let Some(i2) = (0..ch.len()).find(|&i| i != j1 && ws[ch[i]] != NIL) {
                return (ws[ch[i2]], wn[ch[j1]]);
            }
            let j2 = (0..ch.len()).find(|&j| j != i1 && wn[ch[j]] != NIL).unwrap();
            (ws[ch[i1]], wn[ch[j2]])
        };
        let mut q = self.root;
        loop {
            let ch = &self.children[q];
            let m: Vec<usize> = ch.iter().copied().filter(|&c| mixed(c)).collect();
            let ser = self.series(q, false);
            if m.len() >= 2 {
                let (u1, w1) = split(m[0]);
                return if ser { P4([x, u1, wn[m[1]], w1]) } else { P4([w1, u1, x, ws[m[1]]]) };
            }
            let c = *m.first().expect("a mixed node with no mixed child accepts the insertion");
            if ser {
                if let Some(&e) = ch.iter().find(|&&e| ws[e] == NIL) {
                    let (u, w) = split(c);
                    return P4([x, u, wn[e], w]);
                }
            } else if let Some(&a) = ch.iter().find(|&&a| wn[a] == NIL) {
                let (u, w) = split(c);
                return P4([w, u, x, ws[a]]);
            }
            q = c;
        }
    }

    /// Adds the edge `xy`.
    pub fn insert_edge(&mut self, x: usize, y: usize) -> Result<Update> {
        self.edge_update(x, y, false)
    }

    /// Removes the edge `xy`, as an insertion in the complement.
    pub fn delete_edge(&mut self, x: usize, y: usize) -> Result<Update> {
        self.edge_update(x, y, true)
    }

    fn edge_update(&mut self, x: usize, y: usize, flip: bool) -> Result<Update> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::EdgeState(x, y, "endpoints coincide"));
        }
        let (lx, ly) = (self.leaf[x], self.leaf[y]);
        for (a, b) in [(lx, ly), (ly, lx)] {
            if let Some(side) = self.fits(a, b, flip) {
                self.attach_edge(a, b, side, flip);
                return Ok(Update::Done);
            }
        }
        let m = self.lca(lx, ly);
        if self.series(m, flip) {
            let msg = if flip { "edge is absent" } else { "edge is present" };
            return Err(Error::EdgeState(x, y, msg));
        }
        let [a, b, c, d] = self.edge_certificate(lx, ly, m, flip);
        // A P4 of the complement is the P4 b-d-a-c of the graph itself.
        Ok(Update::Rejected(P4(if flip { [b, d, a, c] } else { [a, b, c, d] })))
    }

    /// If `a` hangs directly below a view-parallel node that holds `b` either as
    /// a child or as a child of a view-series child, returns that subtree of `b`'s side.
    fn fits(&self, a: usize, b: usize, flip: bool) -> Option<usize> {
        let m = self.parent[a];
        if m == NIL || !self.parallel(m, flip) {
            return None;
        }
        let pb = self.parent[b];
        if pb == m {
            return Some(b);
        }
        (pb != NIL && self.series(pb, flip) && self.parent[pb] == m).then_some(pb)
    }

    fn attach_edge(&mut self, a: usize, b: usize, side: usize, flip: bool) {
        let m = self.parent[a];
        self.detach(a);
        let n = self.new_node(Self::role(true, flip));
        if side == b {
            self.detach(b);
            self.add_child(n, b);
            self.add_child(n, a);
        } else {
            self.detach(side);
            self.detach(b);
            let c = if self.deg(side) == 1 {
                let w = self.children[side][0];
                self.detach(w);
                self.release(side);
                if self.parallel(w, flip) {
                    self.add_child(w, a);
                    w
                } else {
                    let c = self.new_node(Self::role(false, flip));
                    self.add_child(c, w);
                    self.add_child(c, a);
                    c
                }
            } else {
                let c = self.new_node(Self::role(false, flip));
                self.add_child(c, side);
                self.add_child(c, a);
                c
            };
            self.add_child(n, b);
            self.add_child(n, c);
        }
        if self.deg(m) > 0 {
            self.add_child(m, n);
            return;
        }
        self.replace(m, n);
        self.release(m);
        let up = self.parent[n];
        if up != NIL && self.series(up, flip) {
            self.detach(n);
            while let Some(&c) = self.children[n].last() {
                self.detach(c);
                self.add_child(up, c);
            }
            self.release(n);
        }
    }

    /// A vertex below `node` outside the child subtree `avoid`.
    fn leaf_beside(&self, node: usize, avoid: usize) -> usize {
        let c = *self.children[node].iter().find(|&&c| c != avoid).unwrap();
        self.any_leaf(c)
    }

    /// P4 of the view graph plus `xy`, when the view-parallel lca `m` admits no update.
    fn edge_certificate(&self, lx: usize, ly: usize, m: usize, flip: bool) -> [usize; 4] {
        let (x, y) = (self.vertex_of(lx), self.vertex_of(ly));
        let cx = self.child_toward(m, lx);
        let cy = self.child_toward(m, ly);
        let near = |c: usize, l: usize| self.leaf_beside(c, self.child_toward(c, l));
        if cx != lx && cy != ly {
            return [near(cx, lx), x, y, near(cy, ly)];
        }
        // One endpoint hangs below m; the other sits too deep in its side.
        let (a, lb, cb) = if cx == lx { (x, ly, cy) } else { (y, lx, cx) };
        let b = self.vertex_of(lb);
        debug_assert!(self.series(cb, flip));
        let deep = self.child_toward(cb, lb);
        let z = near(deep, lb);
        let u = self.leaf_beside(cb, deep);
        [a, b, u, z]
    }

    /// Copy with series and parallel swapped: the cotree of the complement.
    pub fn flipped(&self) -> Cotree {
        let mut t = self.clone();
        for l in t.label.iter_mut() {
            *l = l.flipped();
        }
        t
    }

    /// Builds a cotree from a decomposition tree without prime nodes.
    pub fn from_md_tree(md: &MdTree) -> Result<Cotree> {
        let mut t = Cotree::new();
        let mut map = vec![NIL; md.len()];
        for i in 0..md.len() {
            let l = md.label(i);
            map[i] = match l {
                Label::Prime => return Err(Error::InvalidTree("prime node in a cotree".into())),
                Label::Leaf(v) => t.new_leaf(v),
                _ => t.new_node(l),
            };
            if let Some(p) = md.parent(i) {
                t.add_child(map[p], map[i]);
            }
        }
        t.root = map[md.root()];
        t.work = 0;
        Ok(t)
    }

    /// The same tree as an [`MdTree`]. Vertices must be exactly `0..n`.
    pub fn to_md_tree(&self) -> Result<MdTree> {
        let n = self.count;
        if n == 0 || self.leaf.len() != n || self.leaf.iter().any(|&l| l == NIL) {
            return Err(Error::InvalidTree("cotree vertices are not 0..n".into()));
        }
        let mut b = TreeBuilder::new();
        let mut id = vec![NIL; self.label.len()];
        let mut order = vec![self.root];
        let mut i = 0;
        while i < order.len() {
            order.extend(self.children[order[i]].iter().copied());
            i += 1;
        }
        for &q in order.iter().rev() {
            id[q] = match self.label[q] {
                Label::Leaf(v) => b.leaf(v),
                l => b.node(l, self.children[q].iter().map(|&c| id[c]).collect()),
            };
        }
        b.finish(n, id[self.root])
    }

    /// The graph the tree represents. Vertices must be exactly `0..n`.
    pub fn to_graph(&self) -> Result<Graph> {
        let t = self.to_md_tree()?;
        let n = t.n();
        let mut edges = Vec::new();
        for i in t.internal_nodes() {
            if t.label(i) != Label::Series {
                continue;
            }
            let ch = t.children(i);
            for a in 0..ch.len() {
                for c in a + 1..ch.len() {
                    for &u in &t.vertices(ch[a]) {
                        for &w in &t.vertices(ch[c]) {
                            edges.push((u, w));
                        }
                    }
                }
            }
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Full structural check: links, arity, alternation, leaf map.
    pub fn check(&self) -> std::result::Result<(), String> {
        if self.root == NIL {
            return if self.count == 0 { Ok(()) } else { Err("vertices but no root".into()) };
        }
        if self.parent[self.root] != NIL {
            return Err("root has a parent".into());
        }
        let mut stack = vec![self.root];
        let mut leaves = 0;
        while let Some(q) = stack.pop() {
            match self.label[q] {
                Label::Leaf(v) => {
                    if self.leaf.get(v) != Some(&q) {
                        return Err(format!("leaf map broken at vertex {v}"));
                    }
                    leaves += 1;
                }
                Label::Prime => return Err(format!("prime node {q}")),
                l => {
                    if self.deg(q) < 2 {
                        return Err(format!("node {q} has {} children", self.deg(q)));
                    }
                    for (i, &c) in self.children[q].iter().enumerate() {
                        if self.parent[c] != q || self.slot[c] != i {
                            return Err(format!("bad link {q} -> {c}"));
                        }
                        if self.label[c] == l {
                            return Err(format!("node {c} repeats its parent's label"));
                        }
                        stack.push(c);
                    }
                }
            }
        }
        if leaves != self.count {
            return Err(format!("{leaves} leaves reachable, {} vertices", self.count));
        }
        Ok(())
    }

    /// Applies one line of an edit script.
    pub fn apply(&mut self, e: &Edit) -> Result<Update> {
        match e {
            Edit::AddVertex(x, s) => self.insert_vertex(*x, s),
            Edit::AddEdge(x, y) => self.insert_edge(*x, *y),
            Edit::RemoveEdge(x, y) => self.delete_edge(*x, *y),
        }
    }
}

/// `cotree_adjacent(t, x, y)`: adjacency through the lowest common ancestor.
pub fn cotree_adjacent(t: &Cotree, x: usize, y: usize) -> bool {
    t.adjacent(x, y)
}

/// Inserts the vertices of `g` in id order; fails with a P4 of `g`.
///
/// ```
/// use modtree::{recognize_cograph, Graph};
/// assert!(recognize_cograph(&Graph::complete(4)).is_ok());
/// let p4 = recognize_cograph(&Graph::path(4)).unwrap_err();
/// assert!(p4.0 == [0, 1, 2, 3] || p4.0 == [3, 2, 1, 0]);
/// ```
pub fn recognize_cograph(g: &Graph) -> std::result::Result<Cotree, P4> {
    let mut t = Cotree::new();
    let mut s = Vec::new();
    for v in 0..g.n() {
        s.clear();
        s.extend(g.neighbors(v).iter().copied().filter(|&u| u < v));
        match t.insert_vertex(v, &s).expect("vertices arrive in order") {
            Update::Done => {}
            Update::Rejected(p) => return Err(p),
        }
    }
    Ok(t)
}

/// One update of an edit script.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Edit {
    AddVertex(usize, Vec<usize>),
    AddEdge(usize, usize),
    RemoveEdge(usize, usize),
}

impl fmt::Display for Edit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edit::AddVertex(x, s) => {
                write!(f, "+v {x}")?;
                for v in s {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            Edit::AddEdge(x, y) => write!(f, "+e {x} {y}"),
            Edit::RemoveEdge(x, y) => write!(f, "-e {x} {y}"),
        }
    }
}

/// Parses `+v id n1 n2 ...`, `+e u v` and `-e u v` lines. `#` starts a comment.
pub fn parse_edit_script(text: &str) -> Result<Vec<Edit>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        let mut it = line.split_whitespace();
        let op = it.next().unwrap();
        let nums: Vec<usize> = it
            .map(|t| t.parse().map_err(|_| err(format!("bad vertex id {t:?}"))))
            .collect::<Result<_>>()?;
        let edit = match (op, nums.as_slice()) {
            ("+v", [x, rest @ ..]) => Edit::AddVertex(*x, rest.to_vec()),
            ("+e", [x, y]) => Edit::AddEdge(*x, *y),
            ("-e", [x, y]) => Edit::RemoveEdge(*x, *y),
            _ => return Err(err(format!("cannot read {line:?}"))),
        };
        out.push(edit);
    }
    Ok(out)
}
