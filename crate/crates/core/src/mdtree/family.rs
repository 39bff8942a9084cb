use crate::error::{Error, Result};
use std::collections::HashSet;

/// An explicit family of nonempty subsets of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    sets: Vec<Vec<usize>>,
    index: HashSet<Vec<usize>>,
}

impl SetFamily {
    /// Sorts every member, drops duplicates and rejects empty sets or ids `>= n`.
    pub fn new(n: usize, sets: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut out = Vec::new();
        for mut s in sets {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                return Err(Error::EmptySet);
            }
            if let Some(&v) = s.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            out.push(s);
        }
        out.sort();
        out.dedup();
        let index = out.iter().cloned().collect();
        Ok(SetFamily { n, sets: out, index })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.index.contains(s)
    }

    fn has_trivials(&self) -> Result<()> {
        let full: Vec<usize> = (0..self.n).collect();
        if !self.contains(&full) {
            return Err(Error::NotPartitive("ground set missing".into()));
        }
        if let Some(v) = (0..self.n).find(|&v| !self.contains(&[v])) {
            return Err(Error::NotPartitive(format!("singleton {{{v}}} missing")));
        }
        Ok(())
    }
}

/// `a` and `b` intersect and neither contains the other. Both sorted.
pub(crate) fn overlap(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    let (mut common, mut only_a, mut only_b) = (false, false, false);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                only_a = true;
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                only_b = true;
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                common = true;
                i += 1;
                j += 1;
            }
        }
    }
    only_a |= i < a.len();
    only_b |= j < b.len();
    common && only_a && only_b
}

/// Members overlapping no other member.
pub fn strong_members(f: &SetFamily) -> SetFamily {
    let sets = f.members();
    let keep = sets
        .iter()
        .filter(|a| !sets.iter().any(|b| overlap(a, b)))
        .cloned();
    SetFamily::new(f.n, keep).unwrap()
}

/// Inclusion tree of a laminar family that holds the ground set and all singletons.
#[derive(Clone, Debug)]
pub struct StrongTree {
    pub sets: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
}

impl StrongTree {
    pub fn root(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Builds the inclusion tree of the strong members of `f`.
///
/// Node 0 is the ground set; children are sorted by smallest element.
pub fn build_strong_tree(f: &SetFamily) -> Result<StrongTree> {
    f.has_trivials()?;
    let strong = strong_members(f);
    laminar_tree(f.n, strong.members().to_vec())
}

pub(crate) fn laminar_tree(n: usize, mut sets: Vec<Vec<usize>>) -> Result<StrongTree> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    if sets.first().map(Vec::len) != Some(n) {
        return Err(Error::NotPartitive("ground set missing".into()));
    }
    let mut owner = vec![0usize; n];
    let mut parent = vec![None; sets.len()];
    let mut children = vec![Vec::new(); sets.len()];
    for i in 1..sets.len() {
        let p = owner[sets[i][0]];
        if sets[i].iter().any(|&x| owner[x] != p) {
            return Err(Error::NotPartitive("family is not laminar".into()));
        }
        parent[i] = Some(p);
        children[p].push(i);
        for &x in &sets[i] {
            owner[x] = i;
        }
    }
    for ch in &mut children {
        ch.sort_by_key(|&c| sets[c][0]);
    }
    Ok(StrongTree { sets, parent, children })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Degenerate,
    Prime,
}

fn union_of(tree: &StrongTree, picks: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut u: Vec<usize> = picks.flat_map(|c| tree.sets[c].iter().copied()).collect();
    u.sort_unstable();
    u
}

/// Labels each node of `tree` as degenerate or prime with respect to `f`.
///
/// For a partitive `f` only unions of two and of `k - 1` children are examined and
/// they must agree. Otherwise every strict subset is tried when `k <= 20`, and only
/// pairs above that.
pub fn classify_nodes(tree: &StrongTree, f: &SetFamily, partitive: bool) -> Result<Vec<NodeKind>> {
    let mut out = Vec::with_capacity(tree.len());
    for i in 0..tree.len() {
        let ch = &tree.children[i];
        let k = ch.len();
        let kind = if k == 0 {
            NodeKind::Leaf
        } else if k == 2 {
            NodeKind::Degenerate
        } else if partitive {
            let mut hits = 0usize;
            let mut total = 0usize;
            for a in 0..k {
                for b in a + 1..k {
                    total += 1;
                    hits += f.contains(&union_of(tree, [ch[a], ch[b]].into_iter())) as usize;
                }
                total += 1;
                let rest = (0..k).filter(|&j| j != a).map(|j| ch[j]);
                hits += f.contains(&union_of(tree, rest)) as usize;
            }
            if hits == total {
                NodeKind::Degenerate
            } else if hits == 0 {
                NodeKind::Prime
            } else {
                return Err(Error::NotPartitive(format!("node {i} is neither degenerate nor prime")));
            }
        } else if k <= 20 {
            let full = (1u32 << k) - 1;
            let any = (1..full).filter(|m| m.count_ones() >= 2).any(|m| {
                f.contains(&union_of(tree, (0..k).filter(|&j| m >> j & 1 == 1).map(|j| ch[j])))
            });
            if any {
                NodeKind::Degenerate
            } else {
                NodeKind::Prime
            }
        } else {
            let any = (0..k).any(|a| {
                (a + 1..k).any(|b| f.contains(&union_of(tree, [ch[a], ch[b]].into_iter())))
            });
            if any {
                NodeKind::Degenerate
            } else {
                NodeKind::Prime
            }
        };
        out.push(kind);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The eight-element family with two degenerate blocks, shifted to 0-based ids.
    fn fig1() -> SetFamily {
        let raw: Vec<Vec<usize>> = vec![
            (1..=8).collect(),
            vec![1, 2, 3],
            vec![6, 7, 8],
            vec![1, 2],
            vec![2, 3],
            vec![1, 3],
            vec![6, 7],
            vec![7, 8],
            vec![6, 8],
        ];
        let singles = (1..=8).map(|v| vec![v]);
        SetFamily::new(8, raw.into_iter().chain(singles).map(|s| s.iter().map(|v| v - 1).collect()))
            .unwrap()
    }

    #[test]
    fn fig1_strong_members() {
        let s = strong_members(&fig1());
        let mut want: Vec<Vec<usize>> = vec![(0..8).collect(), vec![0, 1, 2], vec![5, 6, 7]];
        want.extend((0..8).map(|v| vec![v]));
        want.sort();
        assert_eq!(s.members(), &want[..]);
    }

    fn subset_union_oracle(tree: &StrongTree, f: &SetFamily, i: usize) -> (usize, usize) {
        let ch = &tree.children[i];
        let k = ch.len();
        let (mut yes, mut total) = (0, 0);
        for m in (1u32..(1 << k) - 1).filter(|m| m.count_ones() >= 2) {
            total += 1;
            let u = union_of(tree, (0..k).filter(|&j| m >> j & 1 == 1).map(|j| ch[j]));
            yes += f.contains(&u) as usize;
        }
        (yes, total)
    }

    #[test]
    fn fig1_classification() {
        let f = fig1();
        let t = build_strong_tree(&f).unwrap();
        for partitive in [false, true] {
            let kinds = classify_nodes(&t, &f, partitive).unwrap();
            for i in 0..t.len() {
                if t.children[i].is_empty() {
                    continue;
                }
                let (yes, total) = subset_union_oracle(&t, &f, i);
                let want = if yes == total {
                    NodeKind::Degenerate
                } else {
                    assert_eq!(yes, 0);
                    NodeKind::Prime
                };
                assert_eq!(kinds[i], want, "node {:?}", t.sets[i]);
            }
        }
        let kinds = classify_nodes(&t, &f, false).unwrap();
        let by_set = |s: &[usize]| kinds[t.sets.iter().position(|x| x == s).unwrap()];
        assert_eq!(by_set(&[0, 1, 2]), NodeKind::Degenerate);
        assert_eq!(by_set(&[5, 6, 7]), NodeKind::Degenerate);
        assert_eq!(kinds[0], NodeKind::Prime);
        assert_eq!(t.children[0].len(), 4);
    }

    #[test]
    fn power_set_is_one_degenerate_node() {
        let f = SetFamily::new(3, (1u32..8).map(|m| (0..3).filter(|&j| m >> j & 1 == 1).collect()))
            .unwrap();
        let t = build_strong_tree(&f).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.children[0], vec![1, 2, 3]);
        assert_eq!(classify_nodes(&t, &f, true).unwrap()[0], NodeKind::Degenerate);
    }

    #[test]
    fn missing_trivials_rejected() {
        let f = SetFamily::new(3, vec![vec![0, 1, 2], vec![0], vec![1]]).unwrap();
        assert!(matches!(build_strong_tree(&f), Err(Error::NotPartitive(_))));
        let f = SetFamily::new(2, vec![vec![0], vec![1]]).unwrap();
        assert!(build_strong_tree(&f).is_err());
    }

    #[test]
    fn overlap_cases() {
        assert!(overlap(&[1, 2], &[2, 3]));
        assert!(!overlap(&[1, 2], &[1, 2, 3]));
        assert!(!overlap(&[1], &[2]));
        assert!(!overlap(&[1, 2], &[1, 2]));
    }
}
