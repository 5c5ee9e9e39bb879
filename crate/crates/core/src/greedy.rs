//! The refined greedy relabelling of a properly coloured graph, and the
//! decreasing paths it guarantees.
//!
//! Given a proper colouring `beta`, vertices are visited class by class in
//! ascending colour order and each receives the least positive label missing
//! from its already-labelled neighbours. Every already-labelled neighbour of
//! `v` has a smaller colour than `v` (same-colour vertices are independent),
//! so a vertex with label `l` has, for each `i < l`, a neighbour labelled `i`
//! with a smaller colour. Chaining those witnesses gives a path along which
//! both the label and the colour strictly decrease.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::colouring::{write_joined, Colouring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Order in which the vertices of one colour class are labelled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderPolicy {
    #[default]
    AscendingIndex,
    SeededShuffle(u64),
}

/// Output of [`refined_greedy`]: one positive label per vertex and the vertex
/// order in which labels were assigned.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labelling {
    labels: Vec<u32>,
    order: Vec<VertexId>,
}

impl Labelling {
    #[inline]
    pub fn label(&self, v: VertexId) -> u32 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Processing sequence actually used.
    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn max_label(&self) -> u32 {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    pub fn as_colouring(&self) -> Colouring {
        Colouring::new(self.labels.clone()).expect("labels are positive")
    }

    /// Lowest-index vertex carrying `label`.
    pub fn first_with_label(&self, label: u32) -> Option<VertexId> {
        self.labels.iter().position(|&l| l == label)
    }

    /// A neighbour of `v` labelled `label` whose colour is below `v`'s:
    /// smallest colour first, then smallest index.
    pub fn witness(&self, g: &Graph, beta: &Colouring, v: VertexId, label: u32) -> Option<VertexId> {
        g.neighbours(v)
            .filter(|&u| self.labels[u] == label && beta.colour(u) < beta.colour(v))
            .min_by_key(|&u| (beta.colour(u), u))
    }
}

impl fmt::Display for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.labels)
    }
}

pub fn refined_greedy(g: &Graph, beta: &Colouring, policy: OrderPolicy) -> Result<Labelling> {
    beta.ensure_proper(g)?;
    let n = g.n();
    let mut rng = match policy {
        OrderPolicy::AscendingIndex => None,
        OrderPolicy::SeededShuffle(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut labels = vec![0u32; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = Vec::new();
    for colour in beta.distinct_colours() {
        let mut class: Vec<VertexId> = (0..n).filter(|&v| beta.colour(v) == colour).collect();
        if let Some(rng) = rng.as_mut() {
            class.shuffle(rng);
        }
        for v in class {
            seen.clear();
            seen.extend(g.neighbours(v).map(|u| labels[u]).filter(|&l| l > 0));
            seen.sort_unstable();
            seen.dedup();
            let mut label = 1;
            for &l in &seen {
                if l != label {
                    break;
                }
                label += 1;
            }
            labels[v] = label;
            order.push(v);
        }
    }
    Ok(Labelling { labels, order })
}

/// A path along which both the label and the colour strictly decrease.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecreasingPath {
    vertices: Vec<VertexId>,
}

impl DecreasingPath {
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn head(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.vertices
    }
}

/// Starting at `v`, follows label witnesses for the labels in `labels`
/// (largest first). The non-head vertices carry exactly those labels.
///
/// `alpha` must be the refined greedy labelling of `(g, beta)`; a missing
/// witness means it is not, and is reported as [`Error::WitnessMissing`].
pub fn decreasing_path(
    g: &Graph,
    beta: &Colouring,
    alpha: &Labelling,
    v: VertexId,
    labels: &[u32],
) -> Result<DecreasingPath> {
    g.check_vertex(v)?;
    let head_label = alpha.label(v);
    let mut wanted = labels.to_vec();
    wanted.sort_unstable_by(|a, b| b.cmp(a));
    wanted.dedup();
    if let Some(&label) = wanted.iter().find(|&&l| l == 0 || l >= head_label) {
        return Err(Error::InvalidLabelSubset { label, head_label });
    }
    let mut vertices = Vec::with_capacity(wanted.len() + 1);
    vertices.push(v);
    let mut current = v;
    for label in wanted {
        current = alpha
            .witness(g, beta, current, label)
            .ok_or(Error::WitnessMissing { vertex: current, label })?;
        vertices.push(current);
    }
    Ok(DecreasingPath { vertices })
}

/// True iff `p` is a nonempty path in `g` with labels and colours strictly decreasing.
pub fn is_decreasing_path(g: &Graph, beta: &Colouring, alpha: &Labelling, p: &[VertexId]) -> bool {
    if p.is_empty() || p.iter().any(|&v| v >= g.n()) {
        return false;
    }
    p.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        g.has_edge(a, b) && alpha.label(b) < alpha.label(a) && beta.colour(b) < beta.colour(a)
    })
}

/// True iff `p` has pairwise-distinct colours, its first two vertices are
/// adjacent, and `p` without its first vertex is a decreasing path.
pub fn is_almost_decreasing_path(g: &Graph, beta: &Colouring, alpha: &Labelling, p: &[VertexId]) -> bool {
    if p.is_empty() || p.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut colours: Vec<u32> = p.iter().map(|&v| beta.colour(v)).collect();
    colours.sort_unstable();
    if colours.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    match p {
        [_] => true,
        [first, rest @ ..] => g.has_edge(*first, rest[0]) && is_decreasing_path(g, beta, alpha, rest),
        [] => unreachable!(),
    }
}

/// Vertices reachable from `v` by a decreasing path, `v` included, ascending.
/// Meant for a vertex of largest label, but defined for any `v`.
pub fn forced_vertices(g: &Graph, beta: &Colouring, alpha: &Labelling, v: VertexId) -> Result<Vec<VertexId>> {
    g.check_vertex(v)?;
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        for w in g.neighbours(u) {
            if !seen[w] && alpha.label(w) < alpha.label(u) && beta.colour(w) < beta.colour(u) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    Ok((0..g.n()).filter(|&u| seen[u]).collect())
}
