//! Colourful paths: the constructive colourful path on `χ(G)` vertices,
//! exhaustive induced colourful path search and a brute-force oracle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colouring::{chromatic_number, write_joined, Colouring};
use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, VertexId};
use crate::greedy::{decreasing_path, refined_greedy, Labelling, OrderPolicy};

/// Vertex cap for [`brute_force_induced_colourful_path`].
pub const ORACLE_MAX_VERTICES: usize = 12;

/// A nonempty sequence of distinct vertices, consecutive ones adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    vertices: Vec<VertexId>,
}

impl Path {
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Self> {
        check_path(g, &vertices)?;
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn colours(&self, beta: &Colouring) -> Vec<u32> {
        self.vertices.iter().map(|&v| beta.colour(v)).collect()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.vertices)
    }
}

fn check_path(g: &Graph, vertices: &[VertexId]) -> Result<()> {
    if vertices.is_empty() {
        return Err(Error::NotAPath("empty vertex sequence".into()));
    }
    for &v in vertices {
        if v >= g.n() {
            return Err(Error::NotAPath(format!("vertex {v} not in a graph on {} vertices", g.n())));
        }
    }
    for (i, &v) in vertices.iter().enumerate() {
        if vertices[..i].contains(&v) {
            return Err(Error::NotAPath(format!("vertex {v} repeated")));
        }
    }
    if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::NotAPath(format!("{} and {} are not adjacent", w[0], w[1])));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathClass {
    /// No two vertices share a colour.
    pub colourful: bool,
    /// No edge joins two non-consecutive vertices.
    pub induced: bool,
}

pub fn classify_path(g: &Graph, beta: &Colouring, vertices: &[VertexId]) -> Result<PathClass> {
    check_path(g, vertices)?;
    if beta.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), found: beta.len() });
    }
    let k = vertices.len();
    let mut colourful = true;
    let mut induced = true;
    for i in 0..k {
        for j in i + 1..k {
            if beta.colour(vertices[i]) == beta.colour(vertices[j]) {
                colourful = false;
            }
            if j > i + 1 && g.has_edge(vertices[i], vertices[j]) {
                induced = false;
            }
        }
    }
    Ok(PathClass { colourful, induced })
}

/// A colourful path on exactly `chromatic` vertices, with strictly decreasing
/// colours, and the labelling it was extracted from.
#[derive(Clone, Debug)]
pub struct ColourfulPath {
    pub path: Path,
    pub chromatic: usize,
    pub labelling: Labelling,
}

/// Runs the refined greedy relabelling, takes the lowest-index vertex with
/// label `χ(G)` and follows witnesses for labels `χ(G)-1, …, 1`.
pub fn colourful_path(g: &Graph, beta: &Colouring, policy: OrderPolicy, chromatic_budget: u64) -> Result<ColourfulPath> {
    beta.ensure_proper(g)?;
    let chromatic = chromatic_number(g, chromatic_budget)?.k;
    colourful_path_with_chromatic(g, beta, policy, chromatic)
}

/// As [`colourful_path`], with `χ(G)` supplied by the caller.
pub fn colourful_path_with_chromatic(
    g: &Graph,
    beta: &Colouring,
    policy: OrderPolicy,
    chromatic: usize,
) -> Result<ColourfulPath> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let labelling = refined_greedy(g, beta, policy)?;
    let top = chromatic as u32;
    let head = labelling.first_with_label(top).ok_or_else(|| {
        Error::PreconditionViolated(format!(
            "no vertex has label {top}; the supplied chromatic number exceeds {}",
            labelling.max_label()
        ))
    })?;
    let below: Vec<u32> = (1..top).collect();
    let dp = decreasing_path(g, beta, &labelling, head, &below)?;
    let path = Path { vertices: dp.into_vertices() };
    Ok(ColourfulPath { path, chromatic, labelling })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Only accept paths whose first vertex is smaller than their last.
    pub symmetry_pruning: bool,
}

/// Depth-first search over induced colourful prefixes. Each proper colouring
/// is compacted to colour ranks so the used-colour set is a bitset.
struct InducedSearch<'a> {
    g: &'a Graph,
    rank: Vec<usize>,
    target: usize,
    options: SearchOptions,
    words: usize,
    path: Vec<VertexId>,
    used: Vec<u64>,
    // blocked[d]: union of the neighbourhoods of path[0..d]
    blocked: Vec<u64>,
}

impl<'a> InducedSearch<'a> {
    fn new(g: &'a Graph, beta: &Colouring, target: usize, options: SearchOptions) -> Self {
        let distinct = beta.distinct_colours();
        let rank = beta.as_slice().iter().map(|c| distinct.binary_search(c).expect("present")).collect();
        let words = g.words();
        InducedSearch {
            g,
            rank,
            target,
            options,
            words,
            path: Vec::with_capacity(target),
            used: vec![0; words],
            blocked: vec![0; words * (target + 1)],
        }
    }

    fn colour_used(&self, v: VertexId) -> bool {
        let r = self.rank[v];
        self.used[r / 64] >> (r % 64) & 1 == 1
    }

    fn toggle_colour(&mut self, v: VertexId) {
        let r = self.rank[v];
        self.used[r / 64] ^= 1 << (r % 64);
    }

    fn accept(&self) -> bool {
        !self.options.symmetry_pruning || self.path.len() == 1 || self.path[0] < self.path[self.path.len() - 1]
    }

    /// Calls `visit` on each complete path; stops when it returns false.
    /// Returns false if stopped early.
    fn run(&mut self, visit: &mut dyn FnMut(&[VertexId]) -> bool) -> bool {
        for start in 0..self.g.n() {
            self.push(start);
            let keep_going = self.extend(visit);
            self.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn push(&mut self, v: VertexId) {
        let d = self.path.len();
        let w = self.words;
        // blocked[d + 1] = blocked[d] | N(path[d - 1]): the new last vertex's
        // predecessor becomes an "earlier" vertex
        let (lo, hi) = self.blocked.split_at_mut((d + 1) * w);
        let prev = &lo[d * w..];
        let next = &mut hi[..w];
        next.copy_from_slice(prev);
        if let Some(&last) = self.path.last() {
            for (x, r) in next.iter_mut().zip(self.g.row(last)) {
                *x |= r;
            }
        }
        self.path.push(v);
        self.toggle_colour(v);
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("nonempty");
        self.toggle_colour(v);
    }

    fn extend(&mut self, visit: &mut dyn FnMut(&[VertexId]) -> bool) -> bool {
        if self.path.len() == self.target {
            return !self.accept() || visit(&self.path);
        }
        let d = self.path.len();
        let w = self.words;
        let last = self.path[d - 1];
        // candidates: neighbours of last that see none of path[0..d-1]
        let candidates: Vec<u64> = self
            .g
            .row(last)
            .iter()
            .zip(&self.blocked[d * w..(d + 1) * w])
            .map(|(r, b)| r & !b)
            .collect();
        for next in BitIter::new(&candidates) {
            if self.colour_used(next) {
                continue;
            }
            self.push(next);
            let keep_going = self.extend(visit);
            self.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
}

fn search_precheck(g: &Graph, beta: &Colouring, target: usize) -> Result<bool> {
    if target == 0 {
        return Err(Error::PreconditionViolated("target must be at least 1".into()));
    }
    beta.ensure_proper(g)?;
    Ok(target <= g.n() && target <= beta.distinct_colours().len())
}

/// First induced colourful path on exactly `target` vertices, in DFS order
/// (start vertex ascending, neighbours ascending), or `None` if there is none.
pub fn find_induced_colourful_path(g: &Graph, beta: &Colouring, target: usize) -> Result<Option<Path>> {
    find_induced_colourful_path_with(g, beta, target, SearchOptions::default())
}

pub fn find_induced_colourful_path_with(
    g: &Graph,
    beta: &Colouring,
    target: usize,
    options: SearchOptions,
) -> Result<Option<Path>> {
    if !search_precheck(g, beta, target)? {
        return Ok(None);
    }
    let mut found = None;
    InducedSearch::new(g, beta, target, options).run(&mut |p| {
        found = Some(Path { vertices: p.to_vec() });
        false
    });
    Ok(found)
}

/// Every induced colourful path on `target` vertices, up to `cap` of them.
/// Without symmetry pruning each path appears once per direction.
pub fn enumerate_induced_colourful_paths(
    g: &Graph,
    beta: &Colouring,
    target: usize,
    options: SearchOptions,
    cap: usize,
) -> Result<Vec<Path>> {
    if !search_precheck(g, beta, target)? {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    InducedSearch::new(g, beta, target, options).run(&mut |p| {
        out.push(Path { vertices: p.to_vec() });
        out.len() < cap
    });
    Ok(out)
}

/// Every colourful path (induced or not) on `target` vertices, up to `cap`,
/// each appearing once per direction.
pub fn enumerate_colourful_paths(g: &Graph, beta: &Colouring, target: usize, cap: usize) -> Result<Vec<Path>> {
    if !search_precheck(g, beta, target)? {
        return Ok(Vec::new());
    }
    fn go(g: &Graph, beta: &Colouring, target: usize, cap: usize, path: &mut Vec<VertexId>, out: &mut Vec<Path>) {
        if out.len() >= cap {
            return;
        }
        if path.len() == target {
            out.push(Path { vertices: path.clone() });
            return;
        }
        let last = *path.last().expect("nonempty");
        for w in g.neighbours(last) {
            if path.iter().any(|&u| beta.colour(u) == beta.colour(w)) {
                continue;
            }
            path.push(w);
            go(g, beta, target, cap, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(target);
    for v in 0..g.n() {
        path.push(v);
        go(g, beta, target, cap, &mut path, &mut out);
        path.pop();
    }
    Ok(out)
}

/// For `p` colourful on exactly `girth(g)` vertices: whether its endpoints
/// are adjacent, closing a colourful cycle of length `girth(g)`.
pub fn closes_colourful_cycle(g: &Graph, beta: &Colouring, vertices: &[VertexId]) -> Result<bool> {
    let class = classify_path(g, beta, vertices)?;
    if !class.colourful {
        return Err(Error::PreconditionViolated("path is not colourful".into()));
    }
    match g.girth() {
        Some(girth) if girth == vertices.len() => {}
        girth => {
            return Err(Error::PreconditionViolated(format!(
                "path has {} vertices but the girth is {girth:?}",
                vertices.len()
            )))
        }
    }
    Ok(g.has_edge(vertices[0], vertices[vertices.len() - 1]))
}

/// Independent oracle: walks every sequence of `target` distinct vertices in
/// lexicographic order and tests the path, chord and colour conditions on
/// each one literally.
pub fn brute_force_induced_colourful_path(g: &Graph, beta: &Colouring, target: usize) -> Result<Option<Path>> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::GraphTooLargeForOracle { n, cap: ORACLE_MAX_VERTICES });
    }
    if target == 0 {
        return Err(Error::PreconditionViolated("target must be at least 1".into()));
    }
    if beta.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: beta.len() });
    }
    if target > n {
        return Ok(None);
    }
    let qualifies = |seq: &[VertexId]| {
        let k = seq.len();
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let adjacent = g.has_edge(seq[i], seq[j]);
                let consecutive = j == i + 1;
                adjacent == consecutive && beta.colour(seq[i]) != beta.colour(seq[j])
            })
        })
    };
    // odometer over injective sequences
    let mut seq: Vec<VertexId> = (0..target).collect();
    loop {
        if qualifies(&seq) {
            return Ok(Some(Path { vertices: seq }));
        }
        if !next_injective(&mut seq, n) {
            return Ok(None);
        }
    }
}

/// Advances `seq` to the next sequence of distinct values below `n` in
/// lexicographic order.
fn next_injective(seq: &mut [usize], n: usize) -> bool {
    let k = seq.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        let mut candidate = seq[i] + 1;
        while candidate < n && seq[..i].contains(&candidate) {
            candidate += 1;
        }
        if candidate < n {
            seq[i] = candidate;
            // refill the suffix with the smallest unused values
            let mut fill = 0;
            for j in i + 1..k {
                while seq[..j].contains(&fill) {
                    fill += 1;
                }
                seq[j] = fill;
            }
            return true;
        }
    }
    false
}
