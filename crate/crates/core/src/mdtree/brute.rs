//! Exhaustive module enumeration, used as the ground truth on small graphs.

use super::family::SetFamily;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the enumerators accept.
pub const BRUTE_FORCE_LIMIT: usize = 18;

fn masks(g: &Graph) -> Result<Vec<u32>> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { what: "n", size: n, limit: BRUTE_FORCE_LIMIT });
    }
    Ok((0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect())
}

fn mask_is_module(nbr: &[u32], m: u32) -> bool {
    (0..nbr.len()).all(|v| m >> v & 1 == 1 || nbr[v] & m == 0 || nbr[v] & m == m)
}

fn to_set(m: u32) -> Vec<usize> {
    (0..32).filter(|&v| m >> v & 1 == 1).collect()
}

/// Smallest module containing `seed`, by repeatedly absorbing splitters.
fn splitter_closure(nbr: &[u32], mut m: u32) -> u32 {
    loop {
        let add = (0..nbr.len())
            .filter(|&v| m >> v & 1 == 0 && nbr[v] & m != 0 && nbr[v] & m != m)
            .fold(0u32, |a, v| a | 1 << v);
        if add == 0 {
            return m;
        }
        m |= add;
    }
}

fn all_module_masks(nbr: &[u32]) -> Vec<u32> {
    let n = nbr.len();
    (1u32..1u32 << n)
        .filter(|&m| mask_is_module(nbr, m))
        .collect()
}

/// Every module of `g`, trivial ones included. Requires `n <= 18`.
pub fn modules_bruteforce(g: &Graph) -> Result<SetFamily> {
    let nbr = masks(g)?;
    SetFamily::new(g.n(), all_module_masks(&nbr).into_iter().map(to_set))
}

/// Modules of `g` overlapping no other module. Requires `n <= 18`.
///
/// A module `M` is overlapped by some module iff, for some `x ∈ M` and `y ∉ M`,
/// the splitter closure of `{x, y}` misses part of `M`.
pub fn strong_modules_bruteforce(g: &Graph) -> Result<SetFamily> {
    let nbr = masks(g)?;
    let n = g.n();
    let mut closure = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            if x != y {
                closure[x * n + y] = splitter_closure(&nbr, 1 << x | 1 << y);
            }
        }
    }
    let strong = all_module_masks(&nbr).into_iter().filter(|&m| {
        (0..n).filter(|&x| m >> x & 1 == 1).all(|x| {
            (0..n).filter(|&y| m >> y & 1 == 0).all(|y| closure[x * n + y] & m == m)
        })
    });
    SetFamily::new(n, strong.map(to_set))
}

#[cfg(test)]
mod tests {
    use super::super::family::{overlap, strong_members};
    use super::*;
    use crate::generate::random_gnp;

    #[test]
    fn p4_and_k3() {
        let f = modules_bruteforce(&Graph::path(4)).unwrap();
        assert_eq!(f.len(), 5);
        let k3 = Graph::complete(3);
        assert_eq!(modules_bruteforce(&k3).unwrap().len(), 7);
        assert_eq!(strong_modules_bruteforce(&k3).unwrap().len(), 4);
    }

    #[test]
    fn bull_is_prime() {
        let bull = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]).unwrap();
        assert_eq!(strong_modules_bruteforce(&bull).unwrap().len(), 6);
        assert_eq!(modules_bruteforce(&bull).unwrap().len(), 6);
    }

    #[test]
    fn strong_shortcut_matches_overlap_scan() {
        for seed in 0..40 {
            let g = random_gnp(2 + seed as usize % 7, 0.4, seed).unwrap();
            let all = modules_bruteforce(&g).unwrap();
            assert_eq!(strong_members(&all), strong_modules_bruteforce(&g).unwrap());
        }
    }

    #[test]
    fn partitive_closure() {
        for seed in 0..30 {
            let g = random_gnp(8, 0.5, seed).unwrap();
            let f = modules_bruteforce(&g).unwrap();
            for a in f.members() {
                for b in f.members() {
                    if !overlap(a, b) {
                        continue;
                    }
                    let ia = |x: &usize| a.binary_search(x).is_ok();
                    let ib = |x: &usize| b.binary_search(x).is_ok();
                    let all: Vec<usize> = (0..8).collect();
                    let pick = |p: &dyn Fn(&usize) -> bool| -> Vec<usize> {
                        all.iter().copied().filter(|x| p(x)).collect()
                    };
                    assert!(f.contains(&pick(&|x| ia(x) && ib(x))));
                    assert!(f.contains(&pick(&|x| ia(x) || ib(x))));
                    assert!(f.contains(&pick(&|x| ia(x) && !ib(x))));
                    assert!(f.contains(&pick(&|x| ib(x) && !ia(x))));
                    assert!(f.contains(&pick(&|x| ia(x) != ib(x))));
                }
            }
        }
    }

    #[test]
    fn guard() {
        assert!(modules_bruteforce(&Graph::empty(19)).is_err());
    }
}
