use std::fmt;

use crate::error::ModelError;
use crate::model::Distribution;

/// Color id. Ids are 1-based on every public surface.
pub type Color = u16;

/// Number of edges of `K_n`.
#[inline]
pub const fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Triangular index of the edge `{u, v}`; stars `S(v)` occupy contiguous runs.
#[inline]
pub(crate) fn edge_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    debug_assert!(a != b);
    b * (b - 1) / 2 + a
}

/// A complete edge coloring of `K_n` with color ids `1..=k`, every id used.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    n: usize,
    k: usize,
    edges: Vec<Color>,
    counts: Vec<usize>,
}

impl Coloring {
    /// Builds a coloring from a triangular edge buffer (see [`Coloring::from_fn`] for
    /// the index layout). Fails on uncolored edges or on unused color ids.
    pub(crate) fn from_buffer(n: usize, edges: Vec<Color>) -> Result<Self, ModelError> {
        if edges.len() != choose2(n) {
            return Err(ModelError::EdgeCount {
                expected: choose2(n),
                got: edges.len(),
            });
        }
        let k = edges.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0usize; k];
        for (idx, &c) in edges.iter().enumerate() {
            if c == 0 {
                let (u, v) = edge_of_index(idx);
                return Err(ModelError::MissingEdge(u, v));
            }
            counts[c as usize - 1] += 1;
        }
        if let Some(pos) = counts.iter().position(|&x| x == 0) {
            return Err(ModelError::PhantomColor(pos as Color + 1));
        }
        Ok(Self { n, k, edges, counts })
    }

    /// Like [`Coloring::from_buffer`] but renumbers the ids in use to `1..=k`,
    /// preserving their relative order.
    pub(crate) fn compacted(n: usize, mut edges: Vec<Color>) -> Result<Self, ModelError> {
        let max = edges.iter().copied().max().unwrap_or(0) as usize;
        let mut used = vec![false; max + 1];
        for &c in &edges {
            used[c as usize] = true;
        }
        let mut remap = vec![0 as Color; max + 1];
        let mut next = 0;
        for c in 1..=max {
            if used[c] {
                next += 1;
                remap[c] = next;
            }
        }
        for c in edges.iter_mut() {
            *c = remap[*c as usize];
        }
        Self::from_buffer(n, edges)
    }

    /// Builds a coloring by evaluating `f(u, v)` for every `u < v`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Color) -> Result<Self, ModelError> {
        let mut edges = Vec::with_capacity(choose2(n));
        for v in 1..n {
            for u in 0..v {
                edges.push(f(u, v));
            }
        }
        Self::from_buffer(n, edges)
    }

    /// Builds a coloring from `(u, v, color)` triples; every edge must appear once.
    pub fn from_edges(
        n: usize,
        triples: impl IntoIterator<Item = (usize, usize, Color)>,
    ) -> Result<Self, ModelError> {
        let mut edges = vec![0 as Color; choose2(n)];
        for (u, v, c) in triples {
            if u == v || u >= n || v >= n {
                return Err(ModelError::BadEdge(u, v));
            }
            if c == 0 {
                return Err(ModelError::ColorOutOfRange(c));
            }
            let slot = &mut edges[edge_index(u, v)];
            if *slot != 0 {
                return Err(ModelError::DuplicateEdge(u.min(v), u.max(v)));
            }
            *slot = c;
        }
        Self::from_buffer(n, edges)
    }

    /// Monochromatic `K_n` in color 1.
    pub fn monochromatic(n: usize) -> Self {
        Self::from_buffer(n, vec![1; choose2(n)]).expect("valid monochromatic coloring")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Color of edge `{u, v}`.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        self.edges[edge_index(u, v)]
    }

    /// Per-color edge counts, indexed by `color - 1`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count_of(&self, c: Color) -> usize {
        self.counts[c as usize - 1]
    }

    /// Canonical class-size distribution.
    pub fn distribution(&self) -> Distribution {
        Distribution::canonicalize(self.counts.clone(), self.n)
            .expect("counts of a valid coloring form a distribution")
    }

    /// Edges in lexicographic `(u, v)` order, `u < v`.
    pub fn edges_lex(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| ((u + 1)..n).map(move |v| (u, v, self.color(u, v))))
    }

    pub(crate) fn buffer(&self) -> &[Color] {
        &self.edges
    }

    /// Applies a color renaming. `map[c - 1]` is the new id of color `c`; the
    /// result is compacted.
    pub fn recolor(&self, map: &[Color]) -> Result<Self, ModelError> {
        if map.len() != self.k {
            return Err(ModelError::BadColorMap {
                expected: self.k,
                got: map.len(),
            });
        }
        let edges = self.edges.iter().map(|&c| map[c as usize - 1]).collect();
        Self::compacted(self.n, edges)
    }

    /// True if every vertex `i >= 1` sends all of its edges to lower vertices in a
    /// single color, i.e. the coloring is a union of stars `S(i)`.
    pub fn is_special(&self) -> bool {
        (1..self.n).all(|v| {
            let run = &self.edges[edge_index(0, v)..edge_index(0, v) + v];
            run.iter().all(|&c| c == run[0])
        })
    }
}

pub(crate) fn edge_of_index(idx: usize) -> (usize, usize) {
    // largest b with b(b-1)/2 <= idx
    let mut b = (((8 * idx + 1) as f64).sqrt() as usize).div_ceil(2);
    while b * (b - 1) / 2 > idx {
        b -= 1;
    }
    while (b + 1) * b / 2 <= idx {
        b += 1;
    }
    (idx - b * (b - 1) / 2, b)
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring(n={}, k={}, counts={:?})", self.n, self.k, self.counts)
    }
}

/// Mutable triangular buffer used by the constructors; 0 marks an uncolored edge.
#[derive(Clone, Debug)]
pub(crate) struct EdgeBuffer {
    pub(crate) n: usize,
    pub(crate) edges: Vec<Color>,
}

impl EdgeBuffer {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            n,
            edges: vec![0; choose2(n)],
        }
    }

    #[inline]
    pub(crate) fn set(&mut self, u: usize, v: usize, c: Color) {
        self.edges[edge_index(u, v)] = c;
    }

    /// Colors the star `S(center)`: every edge from `center` to a lower vertex.
    pub(crate) fn set_star(&mut self, center: usize, c: Color) {
        let start = edge_index(0, center.max(1));
        if center >= 1 {
            self.edges[start..start + center].fill(c);
        }
    }

    /// Copies `sub` onto the vertices `labels[0..sub.n]`, mapping color `c` to `map[c-1]`.
    pub(crate) fn embed(&mut self, sub: &Coloring, labels: &[usize], map: &[Color]) {
        debug_assert_eq!(labels.len(), sub.n());
        for v in 1..sub.n() {
            for u in 0..v {
                let c = sub.color(u, v);
                self.set(labels[u], labels[v], map[c as usize - 1]);
            }
        }
    }

    pub(crate) fn finish(self) -> Result<Coloring, ModelError> {
        Coloring::from_buffer(self.n, self.edges)
    }

    pub(crate) fn finish_compacted(self) -> Result<Coloring, ModelError> {
        Coloring::compacted(self.n, self.edges)
    }
}
