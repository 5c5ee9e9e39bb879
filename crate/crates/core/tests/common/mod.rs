//! Test-only generators and brute-force checkers. Nothing here calls into the
//! search code it is used to check.

#![allow(dead_code)]

use icp_core::colouring::Colouring;
use icp_core::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub const CONNECTED_LE8: &str = include_str!("../data/connected_le8.g6");

pub fn connected_le8() -> Vec<Graph> {
    CONNECTED_LE8.lines().map(|l| Graph::parse_graph6(l).unwrap()).collect()
}

/// G(n, p) plus one edge between consecutive components, so the result is connected.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, w));
            }
        }
    }
    let g = Graph::from_edges(n, edges.clone()).unwrap();
    let comps = g.connected_components();
    for pair in comps.windows(2) {
        let u = *pair[0].choose(rng).unwrap();
        let w = *pair[1].choose(rng).unwrap();
        edges.push((u.min(w), u.max(w)));
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random proper colouring: vertices in random order each take a random
/// colour not used by an already coloured neighbour, from a palette of
/// `max_degree + 1 + extra` colours, then colours are scattered over a
/// sparse range so they are not contiguous.
pub fn random_proper_colouring<R: Rng>(rng: &mut R, g: &Graph) -> Colouring {
    let n = g.n();
    let palette = g.max_degree() as u32 + 1 + rng.gen_range(0..3);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut colour = vec![0u32; n];
    for v in order {
        let taken: Vec<u32> = (0..n).filter(|&u| g.has_edge(u, v)).map(|u| colour[u]).collect();
        let free: Vec<u32> = (1..=palette).filter(|c| !taken.contains(c)).collect();
        colour[v] = *free.choose(rng).unwrap();
    }
    let mut relabel: Vec<u32> = (1..=palette).map(|c| c * 3 + rng.gen_range(0..3)).collect();
    relabel.sort_unstable();
    Colouring::new(colour.into_iter().map(|c| relabel[c as usize - 1]).collect()).unwrap()
}

/// Length of a shortest cycle by listing every simple cycle: each cycle is
/// walked from its smallest vertex through larger vertices only.
pub fn brute_force_girth(g: &Graph) -> Option<usize> {
    fn walk(g: &Graph, start: usize, path: &mut Vec<usize>, best: &mut Option<usize>) {
        let last = *path.last().unwrap();
        for w in 0..g.n() {
            if !g.has_edge(last, w) {
                continue;
            }
            if w == start && path.len() >= 3 {
                *best = Some(best.map_or(path.len(), |b| b.min(path.len())));
            } else if w > start && !path.contains(&w) {
                path.push(w);
                walk(g, start, path, best);
                path.pop();
            }
        }
    }
    let mut best = None;
    for s in 0..g.n() {
        walk(g, s, &mut vec![s], &mut best);
    }
    best
}

pub fn brute_force_triangle_free(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every set partition of `0..n` as a restricted growth string, no pruning.
pub fn all_set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == rgs.len() {
            out.push(rgs.clone());
            return;
        }
        for c in 0..=max + 1 {
            rgs[i] = c;
            rec(i + 1, max.max(c), rgs, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    rec(1, 0, &mut rgs, &mut out);
    out
}

/// Restricted growth strings of proper partitions, by filtering all set partitions.
pub fn brute_force_proper_partitions(g: &Graph) -> Vec<Vec<usize>> {
    all_set_partitions(g.n())
        .into_iter()
        .filter(|rgs| {
            (0..g.n()).all(|u| (u + 1..g.n()).all(|w| !(g.has_edge(u, w) && rgs[u] == rgs[w])))
        })
        .collect()
}

/// Number of proper partitions without materialising them.
pub fn brute_force_count_proper_partitions(g: &Graph) -> u64 {
    fn rec(g: &Graph, i: usize, max: usize, rgs: &mut Vec<usize>) -> u64 {
        if i == g.n() {
            // filter the complete string literally
            let ok = (0..g.n()).all(|u| (u + 1..g.n()).all(|w| !(g.has_edge(u, w) && rgs[u] == rgs[w])));
            return ok as u64;
        }
        let mut total = 0;
        for c in 0..=max + 1 {
            rgs[i] = c;
            total += rec(g, i + 1, max.max(c), rgs);
        }
        total
    }
    let mut rgs = vec![0usize; g.n()];
    rec(g, 1, 0, &mut rgs)
}

/// k-colourability by plain backtracking in index order, colours bounded by
/// one above the largest in use.
pub fn brute_force_colourable(g: &Graph, k: usize) -> bool {
    fn rec(g: &Graph, k: usize, v: usize, max: usize, colour: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k.min(max + 2) {
            if (0..v).any(|u| g.has_edge(u, v) && colour[u] == c) {
                continue;
            }
            colour[v] = c;
            if rec(g, k, v + 1, max.max(c), colour) {
                return true;
            }
        }
        false
    }
    if g.n() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut colour = vec![0; g.n()];
    rec(g, k, 1, 0, &mut colour)
}

pub fn brute_force_chromatic(g: &Graph) -> usize {
    (1..=g.n()).find(|&k| brute_force_colourable(g, k)).unwrap()
}

/// Is `perm` an isomorphism from `a` onto `b`?
pub fn is_isomorphism(a: &Graph, b: &Graph, perm: &[usize]) -> bool {
    (0..a.n()).all(|u| (0..a.n()).all(|w| a.has_edge(u, w) == b.has_edge(perm[u], perm[w])))
}

/// Brute-force isomorphism test over all permutations (small graphs only).
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    fn rec(a: &Graph, b: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if perm.len() == a.n() {
            return is_isomorphism(a, b, perm);
        }
        for x in 0..a.n() {
            if !used[x] {
                used[x] = true;
                perm.push(x);
                if rec(a, b, perm, used) {
                    return true;
                }
                perm.pop();
                used[x] = false;
            }
        }
        false
    }
    rec(a, b, &mut Vec::new(), &mut vec![false; a.n()])
}
