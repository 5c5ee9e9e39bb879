//! Simple undirected graphs stored as symmetric bit rows.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count accepted anywhere in the crate.
pub const MAX_VERTICES: usize = 512;

/// Index of a vertex, `0..n`.
pub type VertexId = usize;

const GRAPH6_HEADER: &str = ">>graph6<<";

/// An immutable simple graph. Row `v` holds the neighbourhood of `v` as a
/// bitset of `words` 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge { n, cap: MAX_VERTICES });
        }
        let words = words_for(n);
        Ok(Graph { n, words, rows: vec![0; n * words] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, w) in edges {
            if u == w || u >= n || w >= n {
                return Err(Error::InvalidEdge(u, w));
            }
            g.set_edge(u, w);
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: VertexId, w: VertexId) {
        self.rows[u * self.words + w / 64] |= 1 << (w % 64);
        self.rows[w * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words in one adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: VertexId) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, w: VertexId) -> bool {
        self.rows[u * self.words + w / 64] >> (w % 64) & 1 == 1
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        BitIter::new(self.row(v))
    }

    /// Edges `(u, w)` with `u < w`, ordered by `u` then `w`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbours(u).filter(move |&w| w > u).map(move |w| (u, w)))
    }

    /// Returns an error when `v` is not a vertex of this graph.
    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Result<Graph> {
        let mut h = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            self.check_vertex(u)?;
            for (j, &w) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, w) {
                    h.set_edge(i, j);
                }
            }
        }
        Ok(h)
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n;
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        for root in 0..n {
            dist.fill(usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                // any cycle found from here on is at least 2*dist[u]+1 long
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.neighbours(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        (best != usize::MAX).then_some(best)
    }

    pub fn is_triangle_free(&self) -> bool {
        for (u, w) in self.edges() {
            if self.row(u).iter().zip(self.row(w)).any(|(a, b)| a & b != 0) {
                return false;
            }
        }
        true
    }

    /// Vertex sets of the connected components, each sorted, ordered by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut blocks = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut block = Vec::new();
            while let Some(u) = stack.pop() {
                block.push(u);
                for w in self.neighbours(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Proper 2-colouring (colours 0 and 1) if one exists.
    pub fn two_colouring(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        let mut stack = Vec::new();
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for w in self.neighbours(u) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// The Mycielskian: originals `0..n`, the shadow of `i` at `n + i`, the apex at `2n`.
    pub fn mycielskian(&self) -> Result<Graph> {
        let n = self.n;
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut m = Graph::empty(2 * n + 1)?;
        for (u, w) in self.edges() {
            m.set_edge(u, w);
            m.set_edge(n + u, w);
            m.set_edge(u, n + w);
        }
        for i in 0..n {
            m.set_edge(n + i, 2 * n);
        }
        Ok(m)
    }

    pub fn parse_graph6(text: &str) -> Result<Graph> {
        let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
        let text = text.strip_suffix('\n').unwrap_or(text);
        let text = text.strip_suffix('\r').unwrap_or(text);
        let bytes = text.as_bytes();
        if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
            return Err(Error::MalformedGraph6(format!(
                "byte {:#04x} at offset {pos} is outside 63..=126",
                bytes[pos]
            )));
        }
        let (n, body) = match bytes {
            [] => return Err(Error::MalformedGraph6("empty record".into())),
            [126, 126, rest @ ..] => {
                if rest.len() < 6 {
                    return Err(Error::MalformedGraph6("truncated 8-byte size field".into()));
                }
                (sextets_to_int(&rest[..6]), &rest[6..])
            }
            [126, rest @ ..] => {
                if rest.len() < 3 {
                    return Err(Error::MalformedGraph6("truncated 4-byte size field".into()));
                }
                (sextets_to_int(&rest[..3]), &rest[3..])
            }
            [b, rest @ ..] => ((b - 63) as u64, rest),
        };
        if n > MAX_VERTICES as u64 {
            return Err(Error::GraphTooLarge { n: n as usize, cap: MAX_VERTICES });
        }
        let n = n as usize;
        let bits = n * n.saturating_sub(1) / 2;
        let expected = bits.div_ceil(6);
        if body.len() != expected {
            return Err(Error::MalformedGraph6(format!(
                "body has {} bytes, expected {expected} for {n} vertices",
                body.len()
            )));
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for w in 1..n {
            for u in 0..w {
                let sextet = body[k / 6] - 63;
                if sextet >> (5 - k % 6) & 1 == 1 {
                    g.set_edge(u, w);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12 + 1);
        if n <= 62 {
            out.push(63 + n as u8);
        } else {
            // MAX_VERTICES keeps us inside the 18-bit form
            out.push(126);
            out.extend((0..3).rev().map(|i| 63 + ((n >> (6 * i)) & 63) as u8));
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for w in 1..n {
            for u in 0..w {
                acc = acc << 1 | self.has_edge(u, w) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(63 + acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(63 + (acc << (6 - filled)));
        }
        String::from_utf8(out).expect("graph6 output is ASCII")
    }
}

fn sextets_to_int(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0u64, |acc, b| acc << 6 | (b - 63) as u64)
}

/// Iterates the set bits of a word slice in ascending order.
pub struct BitIter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub fn new(words: &'a [u64]) -> Self {
        BitIter { words, index: 0, current: words.first().copied().unwrap_or(0) }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}
