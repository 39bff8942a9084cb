//! Coarsest modular partitions by partition refinement under Hopcroft's rule.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::{OrderedPartition, PartId, Placement, Side};
use std::collections::VecDeque;

const NIL: usize = usize::MAX;

/// Counters collected during a refinement run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RefineStats {
    /// Adjacency entries read, summed over every pivot.
    pub scans: u64,
    pub pivots: u64,
    pub splits: u64,
}

/// The pivot loop shared by the coarsest-partition routine and the
/// factoring-permutation builder.
pub(crate) struct Engine<'g> {
    g: &'g Graph,
    in_l: Vec<bool>,
    kslot: Vec<usize>,
    slot_part: Vec<PartId>,
    l: Vec<PartId>,
    k: VecDeque<usize>,
    /// Part holding the center vertex in ordered mode.
    pub(crate) center: PartId,
    pub(crate) region: Vec<u32>,
    /// Pivot vertices in the order they were used. Cleared by the caller.
    pub(crate) pivots: Vec<usize>,
    /// Parts created by splits. Cleared by the caller.
    pub(crate) created: Vec<PartId>,
    /// Snapshot of the partition after every refine, when enabled.
    pub(crate) trace: Option<Vec<Vec<Vec<usize>>>>,
    buf: Vec<usize>,
    ordered: bool,
    pub(crate) stats: RefineStats,
}

impl<'g> Engine<'g> {
    pub(crate) fn new(g: &'g Graph, ordered: bool) -> Self {
        Engine {
            g,
            in_l: Vec::new(),
            kslot: Vec::new(),
            slot_part: Vec::new(),
            l: Vec::new(),
            k: VecDeque::new(),
            center: NIL,
            region: Vec::new(),
            pivots: Vec::new(),
            created: Vec::new(),
            trace: None,
            buf: Vec::new(),
            ordered,
            stats: RefineStats::default(),
        }
    }

    pub(crate) fn grow(&mut self, parts: usize) {
        if self.in_l.len() < parts {
            self.in_l.resize(parts, false);
            self.kslot.resize(parts, NIL);
            self.region.resize(parts, 0);
        }
    }

    /// Refines the parts `init` (listed left to right, all tagged with region
    /// `region`) until each is a module of the graph they cover.
    pub(crate) fn run(&mut self, p: &mut OrderedPartition, init: &[PartId], region: u32) {
        self.grow(p.part_count());
        let z = init
            .iter()
            .copied()
            .fold(init[0], |best, q| if p.size(q) > p.size(best) { q } else { best });
        for &q in init {
            if q == z {
                self.push_k(q);
            } else {
                self.in_l[q] = true;
                self.l.push(q);
            }
        }
        let mut pivots = Vec::new();
        loop {
            let src = if let Some(x) = self.l.pop() {
                self.in_l[x] = false;
                pivots.clear();
                pivots.extend(p.elements_of(x));
                x
            } else if let Some(slot) = self.k.pop_front() {
                let x = self.slot_part[slot];
                self.kslot[x] = NIL;
                #[cfg(debug_assertions)]
                if self.g.n() <= 256 {
                    let part = p.elements_of(x);
                    debug_assert!(crate::graph::is_module(self.g, &part), "first part of K is not a module");
                }
                pivots.clear();
                pivots.push(p.first(x));
                x
            } else {
                break;
            };
            for &x in &pivots {
                self.pivot(p, x, src, region);
            }
        }
    }

    fn push_k(&mut self, q: PartId) {
        let slot = self.slot_part.len();
        self.slot_part.push(q);
        self.kslot[q] = slot;
        self.k.push_back(slot);
    }

    fn pivot(&mut self, p: &mut OrderedPartition, x: usize, src: PartId, region: u32) {
        let g = self.g;
        self.stats.pivots += 1;
        self.stats.scans += g.degree(x) as u64;
        self.pivots.push(x);
        self.buf.clear();
        for &y in g.neighbors(x) {
            let q = p.part_of(y);
            if q != src && self.region[q] == region {
                self.buf.push(y);
            }
        }
        if self.buf.is_empty() {
            return;
        }
        let splits = if self.ordered {
            // Parts strictly between the pivot and the center take the neighbors
            // first; every other part takes them last.
            let (a, c) = (src, self.center);
            let mut rule = |p: &OrderedPartition, y: PartId| {
                let (lo, hi) = (p.offset(a).min(p.offset(c)), p.offset(a).max(p.offset(c)));
                if lo < p.offset(y) && p.offset(y) < hi {
                    Side::Left
                } else {
                    Side::Right
                }
            };
            p.refine(&self.buf, Placement::By(&mut rule))
        } else {
            p.refine(&self.buf, Placement::Right)
        }
        .expect("pivot neighbors are in range");
        if let Some(t) = self.trace.as_mut() {
            t.push(p.parts());
        }
        self.grow(p.part_count());
        for sp in splits {
            self.stats.splits += 1;
            self.created.push(sp.new);
            self.region[sp.new] = self.region[sp.old];
            let (ymin, ymax) =
                if p.size(sp.left) <= p.size(sp.right) { (sp.left, sp.right) } else { (sp.right, sp.left) };
            if self.in_l[sp.old] {
                self.in_l[sp.new] = true;
                self.l.push(sp.new);
                continue;
            }
            self.in_l[ymin] = true;
            self.l.push(ymin);
            let slot = self.kslot[sp.old];
            if slot != NIL {
                if ymax != sp.old {
                    self.kslot[sp.old] = NIL;
                    self.slot_part[slot] = ymax;
                    self.kslot[ymax] = slot;
                }
            } else {
                self.push_k(ymax);
            }
        }
    }
}

fn check_partition(n: usize, parts: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; n];
    for part in parts {
        if part.is_empty() {
            return Err(Error::NotAPartition("empty part".into()));
        }
        for &x in part {
            if x >= n {
                return Err(Error::NotAPartition(format!("vertex {x} out of range")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPartition(format!("vertex {x} in two parts")));
            }
        }
    }
    match seen.iter().position(|&s| !s) {
        Some(x) => Err(Error::NotAPartition(format!("vertex {x} not covered"))),
        None => Ok(()),
    }
}

/// The coarsest partition into modules that refines `p0`.
///
/// Parts come back in the left-to-right order of the refined sequence.
///
/// ```
/// use modtree::{coarsest_modular_partition, Graph};
/// let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
/// let mut q = coarsest_modular_partition(&g, &[vec![0], vec![1, 2, 3, 4]]).unwrap();
/// q.sort();
/// assert_eq!(q, vec![vec![0].into(), vec![1, 2].into(), vec![3, 4].into()]);
/// ```
pub fn coarsest_modular_partition(g: &Graph, p0: &[Vec<usize>]) -> Result<Vec<VertexSet>> {
    Ok(coarsest_modular_partition_stats(g, p0)?.0)
}

/// As [`coarsest_modular_partition`], also returning the work counters.
pub fn coarsest_modular_partition_stats(
    g: &Graph,
    p0: &[Vec<usize>],
) -> Result<(Vec<VertexSet>, RefineStats)> {
    check_partition(g.n(), p0)?;
    if g.n() == 0 {
        return Ok((Vec::new(), RefineStats::default()));
    }
    let mut p = OrderedPartition::from_parts(g.n(), p0)?;
    let mut e = Engine::new(g, false);
    let init = p.part_ids();
    e.run(&mut p, &init, 0);
    let parts = p.parts().into_iter().map(VertexSet::from_unsorted).collect();
    Ok((parts, e.stats))
}

/// `M(G, v)`: `{v}` together with the maximal modules not containing `v`.
pub fn v_modular_partition(g: &Graph, v: usize) -> Result<Vec<VertexSet>> {
    g.check_vertex(v)?;
    let nb = g.neighbors(v);
    let non: Vec<usize> = (0..g.n()).filter(|&u| u != v && nb.binary_search(&u).is_err()).collect();
    let p0: Vec<Vec<usize>> =
        [non, vec![v], nb.to_vec()].into_iter().filter(|s| !s.is_empty()).collect();
    coarsest_modular_partition(g, &p0)
}

/// Reference implementation: split any part having an outside splitter until none is left.
#[cfg(test)]
pub(crate) fn coarsest_oracle(g: &Graph, p0: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut parts: Vec<Vec<usize>> = p0.to_vec();
    loop {
        let mut changed = false;
        'outer: for i in 0..parts.len() {
            for y in 0..g.n() {
                if parts[i].contains(&y) {
                    continue;
                }
                let (a, b): (Vec<usize>, Vec<usize>) = parts[i].iter().partition(|&&x| g.has_edge(x, y));
                if !a.is_empty() && !b.is_empty() {
                    parts[i] = a;
                    parts.push(b);
                    changed = true;
                    break 'outer;
                }
            }
        }
        if !changed {
            break;
        }
    }
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.sort();
    parts
}
