//! Ordered partitions over `0..n` with linear-in-|S| refinement.
//!
//! Elements live in one array-backed doubly linked list; every part is a run of it.
//! Parts form their own linked list so their left-to-right order is explicit.

use crate::error::{Error, Result};

pub type PartId = usize;

const NIL: usize = usize::MAX;

/// Which side of a split part receives the elements of the pivot set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// How refine orders the two halves of a split part.
pub enum Placement<'a> {
    /// Pivot-set half to the left.
    Left,
    /// Pivot-set half to the right.
    Right,
    /// Asked once per split part, before any element moves. Offsets seen by the
    /// callback are those from before the call.
    By(&'a mut dyn FnMut(&OrderedPartition, PartId) -> Side),
}

/// One split performed by [`OrderedPartition::refine`].
///
/// `old` keeps the elements outside the pivot set, `new` receives those inside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Split {
    pub old: PartId,
    pub new: PartId,
    pub left: PartId,
    pub right: PartId,
}

#[derive(Clone, Debug)]
pub struct OrderedPartition {
    next: Vec<usize>,
    prev: Vec<usize>,
    part_of: Vec<PartId>,
    first: Vec<usize>,
    last: Vec<usize>,
    size: Vec<usize>,
    offset: Vec<usize>,
    next_part: Vec<PartId>,
    prev_part: Vec<PartId>,
    head_part: PartId,
    hits: Vec<usize>,
    split_to: Vec<PartId>,
    touched: Vec<PartId>,
    work: u64,
}

impl OrderedPartition {
    /// One part holding `0..n` in increasing order.
    pub fn new(n: usize) -> Self {
        Self::from_parts(n, &[(0..n).collect::<Vec<_>>()]).unwrap()
    }

    /// Parts in the given order; together they must cover `0..n` exactly once.
    pub fn from_parts(n: usize, parts: &[Vec<usize>]) -> Result<Self> {
        let mut p = OrderedPartition {
            next: vec![NIL; n],
            prev: vec![NIL; n],
            part_of: vec![NIL; n],
            first: Vec::new(),
            last: Vec::new(),
            size: Vec::new(),
            offset: Vec::new(),
            next_part: Vec::new(),
            prev_part: Vec::new(),
            head_part: NIL,
            hits: Vec::new(),
            split_to: Vec::new(),
            touched: Vec::new(),
            work: 0,
        };
        let mut prev_elem = NIL;
        for part in parts {
            if part.is_empty() {
                return Err(Error::NotAPartition("empty part".into()));
            }
            let id = p.push_part();
            if id > 0 {
                p.next_part[id - 1] = id;
                p.prev_part[id] = id - 1;
            } else {
                p.head_part = 0;
            }
            p.first[id] = part[0];
            p.last[id] = *part.last().unwrap();
            p.size[id] = part.len();
            p.offset[id] = if id > 0 { p.offset[id - 1] + p.size[id - 1] } else { 0 };
            for &x in part {
                if x >= n {
                    return Err(Error::NotAPartition(format!("element {x} out of range")));
                }
                if p.part_of[x] != NIL {
                    return Err(Error::NotAPartition(format!("element {x} repeated")));
                }
                p.part_of[x] = id;
                p.prev[x] = prev_elem;
                if prev_elem != NIL {
                    p.next[prev_elem] = x;
                }
                prev_elem = x;
            }
        }
        if let Some(x) = p.part_of.iter().position(|&q| q == NIL) {
            return Err(Error::NotAPartition(format!("element {x} missing")));
        }
        Ok(p)
    }

    fn push_part(&mut self) -> PartId {
        self.first.push(NIL);
        self.last.push(NIL);
        self.size.push(0);
        self.offset.push(0);
        self.next_part.push(NIL);
        self.prev_part.push(NIL);
        self.hits.push(0);
        self.split_to.push(NIL);
        self.first.len() - 1
    }

    pub fn ground_size(&self) -> usize {
        self.part_of.len()
    }

    /// Number of part handles ever created; handles are `0..part_count()`.
    pub fn part_count(&self) -> usize {
        self.first.len()
    }

    pub fn part_of(&self, x: usize) -> PartId {
        self.part_of[x]
    }

    pub fn size(&self, p: PartId) -> usize {
        self.size[p]
    }

    pub fn first(&self, p: PartId) -> usize {
        self.first[p]
    }

    pub fn last(&self, p: PartId) -> usize {
        self.last[p]
    }

    /// Number of elements in the parts to the left of `p`.
    pub fn offset(&self, p: PartId) -> usize {
        self.offset[p]
    }

    pub fn next_part(&self, p: PartId) -> Option<PartId> {
        (self.next_part[p] != NIL).then_some(self.next_part[p])
    }

    pub fn prev_part(&self, p: PartId) -> Option<PartId> {
        (self.prev_part[p] != NIL).then_some(self.prev_part[p])
    }

    pub fn next_elem(&self, x: usize) -> Option<usize> {
        (self.next[x] != NIL).then_some(self.next[x])
    }

    pub fn prev_elem(&self, x: usize) -> Option<usize> {
        (self.prev[x] != NIL).then_some(self.prev[x])
    }

    /// Elements touched by all refine calls so far.
    pub fn work(&self) -> u64 {
        self.work
    }

    pub fn reset_work(&mut self) {
        self.work = 0;
    }

    pub fn elements_of(&self, p: PartId) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size[p]);
        let mut x = self.first[p];
        for _ in 0..self.size[p] {
            out.push(x);
            x = self.next[x];
        }
        out
    }

    /// Part handles from left to right.
    pub fn part_ids(&self) -> Vec<PartId> {
        let mut out = Vec::new();
        let mut p = self.head_part;
        while p != NIL {
            out.push(p);
            p = self.next_part[p];
        }
        out
    }

    pub fn parts(&self) -> Vec<Vec<usize>> {
        self.part_ids().into_iter().map(|p| self.elements_of(p)).collect()
    }

    /// All elements in sequence order.
    pub fn sequence(&self) -> Vec<usize> {
        self.parts().concat()
    }

    fn unlink(&mut self, x: usize) {
        let (a, b) = (self.prev[x], self.next[x]);
        if a != NIL {
            self.next[a] = b;
        }
        if b != NIL {
            self.prev[b] = a;
        }
    }

    fn insert_before(&mut self, x: usize, at: usize) {
        let a = self.prev[at];
        self.prev[x] = a;
        self.next[x] = at;
        self.prev[at] = x;
        if a != NIL {
            self.next[a] = x;
        }
    }

    fn insert_after(&mut self, x: usize, at: usize) {
        let b = self.next[at];
        self.next[x] = b;
        self.prev[x] = at;
        self.next[at] = x;
        if b != NIL {
            self.prev[b] = x;
        }
    }

    /// Splits every part that `s` cuts, without touching the others.
    ///
    /// `s` must not repeat elements. The half inside `s` gets a fresh handle and
    /// receives its elements in the order they appear in `s`; the other half keeps
    /// the old handle and its relative order.
    ///
    /// ```
    /// use modtree::{OrderedPartition, Placement};
    /// let mut p = OrderedPartition::new(4);
    /// let splits = p.refine(&[1, 3], Placement::Left).unwrap();
    /// assert_eq!(splits.len(), 1);
    /// assert_eq!(p.parts(), vec![vec![1, 3], vec![0, 2]]);
    /// assert!(p.refine(&[1, 3], Placement::Left).unwrap().is_empty());
    /// ```
    pub fn refine(&mut self, s: &[usize], mut placement: Placement<'_>) -> Result<Vec<Split>> {
        let n = self.ground_size();
        if let Some(&x) = s.iter().find(|&&x| x >= n) {
            return Err(Error::StaleElement(x));
        }
        for &x in s {
            let p = self.part_of[x];
            if self.hits[p] == 0 {
                self.touched.push(p);
            }
            self.hits[p] += 1;
        }
        self.work += s.len() as u64;
        let mut splits = Vec::new();
        let touched = std::mem::take(&mut self.touched);
        for &p in &touched {
            debug_assert!(self.hits[p] <= self.size[p], "repeated element in pivot set");
            if self.hits[p] == self.size[p] {
                continue;
            }
            let side = match &mut placement {
                Placement::Left => Side::Left,
                Placement::Right => Side::Right,
                Placement::By(f) => f(&*self, p),
            };
            let q = self.push_part();
            self.split_to[p] = q;
            if side == Side::Left {
                let a = self.prev_part[p];
                self.prev_part[q] = a;
                self.next_part[q] = p;
                self.prev_part[p] = q;
                if a != NIL {
                    self.next_part[a] = q;
                } else {
                    self.head_part = q;
                }
                splits.push(Split { old: p, new: q, left: q, right: p });
            } else {
                let b = self.next_part[p];
                self.next_part[q] = b;
                self.prev_part[q] = p;
                self.next_part[p] = q;
                if b != NIL {
                    self.prev_part[b] = q;
                }
                splits.push(Split { old: p, new: q, left: p, right: q });
            }
        }
        for &x in s {
            let p = self.part_of[x];
            let q = self.split_to[p];
            if q == NIL {
                continue;
            }
            self.work += 1;
            let left = self.next_part[q] == p;
            if left {
                if x == self.first[p] {
                    self.first[p] = self.next[x];
                } else {
                    if x == self.last[p] {
                        self.last[p] = self.prev[x];
                    }
                    self.unlink(x);
                    let at = self.first[p];
                    self.insert_before(x, at);
                }
                if self.size[q] == 0 {
                    self.first[q] = x;
                }
                self.last[q] = x;
            } else {
                if self.size[q] == 0 {
                    if x == self.last[p] {
                        self.last[p] = self.prev[x];
                    } else {
                        if x == self.first[p] {
                            self.first[p] = self.next[x];
                        }
                        self.unlink(x);
                        let at = self.last[p];
                        self.insert_after(x, at);
                    }
                    self.first[q] = x;
                } else {
                    if x == self.first[p] {
                        self.first[p] = self.next[x];
                    }
                    if x == self.last[p] {
                        self.last[p] = self.prev[x];
                    }
                    self.unlink(x);
                    let at = self.last[q];
                    self.insert_after(x, at);
                }
                self.last[q] = x;
            }
            self.size[p] -= 1;
            self.size[q] += 1;
            self.part_of[x] = q;
        }
        for &p in &touched {
            let q = self.split_to[p];
            if q != NIL {
                if self.next_part[q] == p {
                    self.offset[q] = self.offset[p];
                    self.offset[p] += self.size[q];
                } else {
                    self.offset[q] = self.offset[p] + self.size[p];
                }
            }
            self.hits[p] = 0;
            self.split_to[p] = NIL;
        }
        self.touched = touched;
        self.touched.clear();
        Ok(splits)
    }

    /// Full structural check, for tests.
    pub fn check(&self) -> std::result::Result<(), String> {
        let mut seen = vec![false; self.ground_size()];
        let mut prev_elem = NIL;
        let mut p = self.head_part;
        let mut prev_p = NIL;
        let mut total = 0;
        while p != NIL {
            if self.prev_part[p] != prev_p {
                return Err(format!("part {p} has a bad back link"));
            }
            let mut x = self.first[p];
            if self.prev[x] != prev_elem {
                return Err(format!("part {p} is not contiguous"));
            }
            if self.offset[p] != total {
                return Err(format!("part {p} has offset {} instead of {total}", self.offset[p]));
            }
            for i in 0..self.size[p] {
                if seen[x] || self.part_of[x] != p {
                    return Err(format!("element {x} misfiled"));
                }
                seen[x] = true;
                if i + 1 == self.size[p] && x != self.last[p] {
                    return Err(format!("part {p} last pointer is wrong"));
                }
                prev_elem = x;
                x = self.next[x];
            }
            total += self.size[p];
            prev_p = p;
            p = self.next_part[p];
        }
        if total != self.ground_size() || self.next[prev_elem] != NIL {
            return Err("sizes do not add up".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn single_split_and_placement() {
        let mut p = OrderedPartition::new(4);
        let sp = p.refine(&[1, 3], Placement::Right).unwrap();
        assert_eq!(sp, vec![Split { old: 0, new: 1, left: 0, right: 1 }]);
        assert_eq!(p.parts(), vec![vec![0, 2], vec![1, 3]]);
        p.check().unwrap();
    }

    #[test]
    fn stable_set_is_a_no_op() {
        let mut p = OrderedPartition::from_parts(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert!(p.refine(&[0, 1, 2], Placement::Left).unwrap().is_empty());
        assert_eq!(p.parts(), vec![vec![0, 1, 2], vec![3, 4]]);
    }

    #[test]
    fn callback_placement() {
        let mut p = OrderedPartition::from_parts(6, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let mut cb = |p: &OrderedPartition, q: PartId| if p.offset(q) == 0 { Side::Left } else { Side::Right };
        p.refine(&[2, 3], Placement::By(&mut cb)).unwrap();
        assert_eq!(p.offset(3), 5);
        assert_eq!(p.parts(), vec![vec![2], vec![0, 1], vec![4, 5], vec![3]]);
        p.check().unwrap();
    }

    #[test]
    fn errors() {
        let mut p = OrderedPartition::new(3);
        assert_eq!(p.refine(&[5], Placement::Left), Err(Error::StaleElement(5)));
        assert!(OrderedPartition::from_parts(3, &[vec![0, 1]]).is_err());
        assert!(OrderedPartition::from_parts(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    fn arb_case() -> impl Strategy<Value = (Vec<usize>, Vec<bool>, bool)> {
        (1usize..13).prop_flat_map(|n| {
            (
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                prop::collection::vec(any::<bool>(), n),
                any::<bool>(),
            )
        })
    }

    fn build(perm: &[usize], mask: u32) -> OrderedPartition {
        let mut parts = vec![Vec::new()];
        for (i, &x) in perm.iter().enumerate() {
            if i > 0 && mask >> i & 1 == 1 {
                parts.push(Vec::new());
            }
            parts.last_mut().unwrap().push(x);
        }
        OrderedPartition::from_parts(perm.len(), &parts).unwrap()
    }

    proptest! {
        #[test]
        fn refine_matches_set_algebra((perm, inside, left) in arb_case(), mask: u32) {
            let mut p = build(&perm, mask);
            let before: Vec<Vec<usize>> = p.parts();
            let s: Vec<usize> = (0..perm.len()).filter(|&x| inside[x]).collect();
            let splits = p.refine(&s, if left { Placement::Left } else { Placement::Right }).unwrap();
            p.check().unwrap();
            let mut want = BTreeSet::new();
            for part in &before {
                let a: BTreeSet<usize> = part.iter().copied().filter(|&x| inside[x]).collect();
                let b: BTreeSet<usize> = part.iter().copied().filter(|&x| !inside[x]).collect();
                if !a.is_empty() { want.insert(a.clone()); }
                if !b.is_empty() { want.insert(b.clone()); }
            }
            let got: BTreeSet<BTreeSet<usize>> = p.parts().into_iter().map(|q| q.into_iter().collect()).collect();
            prop_assert_eq!(got, want);
            prop_assert!(p.work() <= 2 * s.len() as u64);
            // Idempotence and order preservation outside the pivot set.
            prop_assert!(p.refine(&s, Placement::Left).unwrap().is_empty());
            let seq = p.sequence();
            for part in &before {
                let rest: Vec<usize> = part.iter().copied().filter(|&x| !inside[x]).collect();
                let got: Vec<usize> = seq.iter().copied().filter(|x| rest.contains(x)).collect();
                prop_assert_eq!(got, rest);
            }
            for sp in splits {
                prop_assert!(sp.left != sp.right);
                prop_assert!(p.next_part(sp.left) == Some(sp.right));
            }
        }

        #[test]
        fn complement_gives_same_family((perm, inside, _) in arb_case(), mask: u32) {
            let mut a = build(&perm, mask);
            let mut b = build(&perm, mask);
            let s: Vec<usize> = (0..perm.len()).filter(|&x| inside[x]).collect();
            let t: Vec<usize> = (0..perm.len()).filter(|&x| !inside[x]).collect();
            a.refine(&s, Placement::Left).unwrap();
            b.refine(&t, Placement::Left).unwrap();
            let fa: BTreeSet<Vec<usize>> = a.parts().into_iter().map(|mut q| { q.sort(); q }).collect();
            let fb: BTreeSet<Vec<usize>> = b.parts().into_iter().map(|mut q| { q.sort(); q }).collect();
            prop_assert_eq!(fa, fb);
        }
    }
}
