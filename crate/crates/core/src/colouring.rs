//! Proper colourings, exact chromatic number and proper colour partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Default cap on the number of partitions a single enumeration may emit.
pub const DEFAULT_PARTITION_LIMIT: u64 = 10_000_000;

/// Default node budget for the exact chromatic number search.
pub const DEFAULT_CHROMATIC_BUDGET: u64 = 50_000_000;

/// One positive colour per vertex. Colours need not be contiguous and the
/// colouring is not assumed to be proper.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Colouring(Vec<u32>);

impl Colouring {
    pub fn new(colours: Vec<u32>) -> Result<Self> {
        if let Some(pos) = colours.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColourToken { token: format!("0 (vertex {pos})") });
        }
        Ok(Colouring(colours))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn colour(&self, v: VertexId) -> u32 {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Distinct colour values in ascending order.
    pub fn distinct_colours(&self) -> Vec<u32> {
        let mut cs = self.0.clone();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::LengthMismatch { expected: g.n(), found: self.len() });
        }
        Ok(())
    }

    /// First monochromatic edge in edge order, if any.
    pub fn first_violation(&self, g: &Graph) -> Result<Option<(VertexId, VertexId)>> {
        self.check_len(g)?;
        Ok(g.edges().find(|&(u, w)| self.0[u] == self.0[w]))
    }

    pub fn is_proper(&self, g: &Graph) -> Result<bool> {
        Ok(self.first_violation(g)?.is_none())
    }

    /// Like [`Colouring::is_proper`] but reports the violating edge as an error.
    pub fn ensure_proper(&self, g: &Graph) -> Result<()> {
        match self.first_violation(g)? {
            Some((u, w)) => Err(Error::ImproperColouring(u, w)),
            None => Ok(()),
        }
    }
}

impl FromStr for Colouring {
    type Err = Error;

    /// Whitespace-separated positive integers, position `i` being the colour of vertex `i`.
    fn from_str(s: &str) -> Result<Self> {
        let colours = s
            .split_whitespace()
            .map(|tok| match tok.parse::<u32>() {
                Ok(c) if c > 0 => Ok(c),
                _ => Err(Error::InvalidColourToken { token: tok.to_string() }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Colouring(colours))
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

pub(crate) fn write_joined<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// A partition of the vertices into independent classes, in restricted-growth
/// canonical order: class `i` holds the smallest vertex outside classes `0..i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColourPartition {
    classes: Vec<Vec<VertexId>>,
}

impl ColourPartition {
    /// Canonical partition induced by a colouring's colour classes.
    pub fn from_colouring(c: &Colouring) -> Self {
        let mut index_of: Vec<(u32, usize)> = Vec::new();
        let mut classes: Vec<Vec<VertexId>> = Vec::new();
        for (v, &col) in c.as_slice().iter().enumerate() {
            match index_of.iter().find(|(k, _)| *k == col) {
                Some(&(_, i)) => classes[i].push(v),
                None => {
                    index_of.push((col, classes.len()));
                    classes.push(vec![v]);
                }
            }
        }
        ColourPartition { classes }
    }

    /// Builds a partition from explicit classes, checking cover, disjointness,
    /// independence and canonical order.
    pub fn from_classes(g: &Graph, classes: Vec<Vec<VertexId>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; g.n()];
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::PreconditionViolated(format!("class {i} is empty")));
            }
            for &v in class {
                g.check_vertex(v)?;
                if owner[v] != usize::MAX {
                    return Err(Error::PreconditionViolated(format!("vertex {v} in two classes")));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::PreconditionViolated(format!("vertex {v} not covered")));
        }
        let p = ColourPartition::from_colouring(&Colouring(owner.iter().map(|&o| o as u32 + 1).collect()));
        if p.classes.iter().zip(&classes).any(|(a, b)| {
            let mut b = b.clone();
            b.sort_unstable();
            *a != b
        }) {
            return Err(Error::PreconditionViolated("classes are not in canonical order".into()));
        }
        p.to_colouring().ensure_proper(g)?;
        Ok(p)
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Colouring with colour `i + 1` on class `i`.
    pub fn to_colouring(&self) -> Colouring {
        let n = self.classes.iter().map(Vec::len).sum();
        let mut colours = vec![0; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                colours[v] = i as u32 + 1;
            }
        }
        Colouring(colours)
    }
}

/// Exact chromatic number together with an optimal proper colouring.
#[derive(Clone, Debug)]
pub struct Chromatic {
    pub k: usize,
    pub witness: Colouring,
}

/// Number of colours used by DSATUR greedy, with the colouring it produced.
pub fn greedy_upper_bound(g: &Graph) -> (usize, Colouring) {
    let n = g.n();
    let mut colour = vec![0u32; n];
    // neighbour_colours[v] is a sorted, deduplicated list of colours on coloured neighbours
    let mut neighbour_colours: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v] == 0)
            .max_by(|&a, &b| {
                neighbour_colours[a]
                    .len()
                    .cmp(&neighbour_colours[b].len())
                    .then(g.degree(a).cmp(&g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncoloured vertex remains");
        let c = mex(&neighbour_colours[v]);
        colour[v] = c;
        used = used.max(c as usize);
        for w in g.neighbours(v) {
            if let Err(pos) = neighbour_colours[w].binary_search(&c) {
                neighbour_colours[w].insert(pos, c);
            }
        }
    }
    (used, Colouring(colour))
}

/// Smallest positive integer missing from a sorted, deduplicated list.
fn mex(sorted: &[u32]) -> u32 {
    let mut m = 1;
    for &c in sorted {
        if c == m {
            m += 1;
        } else if c > m {
            break;
        }
    }
    m
}

/// Exact chromatic number. Lower bound 1, 2 with any edge, 3 when not
/// bipartite; each `k` below the DSATUR bound is decided by backtracking.
pub fn chromatic_number(g: &Graph, node_budget: u64) -> Result<Chromatic> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (ub, greedy) = greedy_upper_bound(g);
    let lb = if g.edge_count() == 0 {
        1
    } else if g.two_colouring().is_some() {
        2
    } else {
        3
    };
    if lb >= ub {
        return Ok(Chromatic { k: ub, witness: greedy });
    }
    if lb == 2 {
        let side = g.two_colouring().expect("bipartite");
        let witness = Colouring(side.into_iter().map(|s| s as u32 + 1).collect());
        return Ok(Chromatic { k: 2, witness });
    }
    let mut search = KColouring::new(g, node_budget);
    for k in lb..ub {
        if let Some(colours) = search.run(k)? {
            return Ok(Chromatic { k, witness: Colouring(colours) });
        }
    }
    Ok(Chromatic { k: ub, witness: greedy })
}

/// Backtracking k-colourability test with DSATUR branching: always extend the
/// uncoloured vertex with the most distinct neighbour colours, ties broken by
/// larger degree then smaller index; colours tried ascending, new colours only
/// one above the largest in use.
struct KColouring<'g> {
    g: &'g Graph,
    budget: u64,
    nodes: u64,
    degree: Vec<usize>,
    colour: Vec<u32>,
    // counts[v * k + c]: neighbours of v with colour c + 1
    counts: Vec<u32>,
    saturation: Vec<u32>,
    k: usize,
}

impl<'g> KColouring<'g> {
    fn new(g: &'g Graph, budget: u64) -> Self {
        KColouring {
            g,
            budget,
            nodes: 0,
            degree: (0..g.n()).map(|v| g.degree(v)).collect(),
            colour: Vec::new(),
            counts: Vec::new(),
            saturation: Vec::new(),
            k: 0,
        }
    }

    fn run(&mut self, k: usize) -> Result<Option<Vec<u32>>> {
        let n = self.g.n();
        self.k = k;
        self.colour = vec![0; n];
        self.counts = vec![0; n * k];
        self.saturation = vec![0; n];
        if self.extend(0, 0)? {
            Ok(Some(self.colour.clone()))
        } else {
            Ok(None)
        }
    }

    fn assign(&mut self, v: VertexId, c: u32) {
        self.colour[v] = c;
        let k = self.k;
        for w in self.g.neighbours(v) {
            let slot = &mut self.counts[w * k + c as usize - 1];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: VertexId) {
        let c = self.colour[v];
        self.colour[v] = 0;
        let k = self.k;
        for w in self.g.neighbours(v) {
            let slot = &mut self.counts[w * k + c as usize - 1];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn extend(&mut self, coloured: usize, max_used: u32) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded { budget: self.budget });
        }
        let n = self.g.n();
        if coloured == n {
            return Ok(true);
        }
        let mut best = usize::MAX;
        for v in 0..n {
            if self.colour[v] != 0 {
                continue;
            }
            if best == usize::MAX
                || (self.saturation[v], self.degree[v]) > (self.saturation[best], self.degree[best])
            {
                best = v;
            }
        }
        let v = best;
        if self.saturation[v] as usize >= self.k {
            return Ok(false);
        }
        let top = (max_used + 1).min(self.k as u32);
        for c in 1..=top {
            if self.counts[v * self.k + c as usize - 1] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.extend(coloured + 1, max_used.max(c))? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// Enumerates every partition of the vertices into independent classes
/// exactly once, in canonical form. Yields an error after `limit` partitions
/// if more exist.
pub fn enumerate_proper_partitions(g: &Graph, limit: u64) -> Result<PartitionIter<'_>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(PartitionIter {
        g,
        limit,
        emitted: 0,
        class_of: vec![0; g.n()],
        opened: vec![false; g.n()],
        masks: Vec::new(),
        depth: 0,
        next_option: 0,
        done: false,
    })
}

/// Counts proper partitions, failing if there are more than `limit`.
pub fn count_proper_partitions(g: &Graph, limit: u64) -> Result<u64> {
    let mut count = 0;
    for p in enumerate_proper_partitions(g, limit)? {
        p?;
        count += 1;
    }
    Ok(count)
}

/// Iterative backtracking over vertices `0..n`: each vertex tries the existing
/// classes it is independent of, in order, then a fresh class.
pub struct PartitionIter<'g> {
    g: &'g Graph,
    limit: u64,
    emitted: u64,
    class_of: Vec<usize>,
    opened: Vec<bool>,
    masks: Vec<Vec<u64>>,
    depth: usize,
    next_option: usize,
    done: bool,
}

impl PartitionIter<'_> {
    fn compatible(&self, v: VertexId, class: usize) -> bool {
        self.masks[class].iter().zip(self.g.row(v)).all(|(m, r)| m & r == 0)
    }

    fn place(&mut self, v: VertexId, class: usize) {
        if class == self.masks.len() {
            self.masks.push(vec![0; self.g.words()]);
            self.opened[v] = true;
        } else {
            self.opened[v] = false;
        }
        self.masks[class][v / 64] |= 1 << (v % 64);
        self.class_of[v] = class;
    }

    fn unplace(&mut self, v: VertexId) -> usize {
        let class = self.class_of[v];
        if self.opened[v] {
            self.masks.pop();
        } else {
            self.masks[class][v / 64] &= !(1 << (v % 64));
        }
        class
    }

    fn snapshot(&self) -> ColourPartition {
        let mut classes = vec![Vec::new(); self.masks.len()];
        for (v, &c) in self.class_of.iter().enumerate() {
            classes[c].push(v);
        }
        ColourPartition { classes }
    }

    /// Undo the deepest placement and resume from its next option.
    /// Returns false once the search tree is exhausted.
    fn backtrack(&mut self) -> bool {
        if self.depth == 0 {
            return false;
        }
        self.depth -= 1;
        let class = self.unplace(self.depth);
        self.next_option = class + 1;
        true
    }
}

impl Iterator for PartitionIter<'_> {
    type Item = Result<ColourPartition>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let n = self.g.n();
        if self.depth == n && !self.backtrack() {
            self.done = true;
            return None;
        }
        loop {
            let v = self.depth;
            let open = self.masks.len();
            let choice = (self.next_option..=open).find(|&c| c == open || self.compatible(v, c));
            match choice {
                Some(c) => {
                    self.place(v, c);
                    self.depth += 1;
                    self.next_option = 0;
                    if self.depth == n {
                        if self.emitted == self.limit {
                            self.done = true;
                            return Some(Err(Error::EnumerationLimitExceeded { limit: self.limit }));
                        }
                        self.emitted += 1;
                        return Some(Ok(self.snapshot()));
                    }
                }
                None => {
                    if !self.backtrack() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}
