//! Finite simple graphs with sorted adjacency lists, the join and H-join
//! constructions, and a structural checker for H-join decompositions.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..vertex_count`.
///
/// Neighbor lists are sorted and duplicate free. Two graphs compare equal
/// with `==` only if their labels agree as well; use
/// [`SimpleGraph::same_edges`] for a purely structural comparison.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self {
            adjacency,
            labels: None,
        })
    }

    /// Wraps adjacency lists that are already sorted, symmetric and loop free.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        debug_assert!(adjacency.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && !list.contains(&u)
                && list.iter().all(|&v| adjacency[v].binary_search(&u).is_ok())
        }));
        Self {
            adjacency,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::ShapeMismatch(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// Sorted neighbors of `v`.
    ///
    /// # Panics
    ///
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Minimum degree; 0 for the graph without vertices.
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Same vertex count and same edge set, ignoring labels.
    pub fn same_edges(&self, other: &SimpleGraph) -> bool {
        self.adjacency == other.adjacency
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().all(|list| list.len() + 1 == n)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        let mut components = 0;
        for root in 0..n {
            if seen[root] {
                continue;
            }
            components += 1;
            seen[root] = true;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        components
    }

    fn membership(&self, vertices: &[usize]) -> Result<Vec<bool>> {
        let mut keep = vec![false; self.vertex_count()];
        for &v in vertices {
            self.check_vertex(v)?;
            keep[v] = true;
        }
        Ok(keep)
    }

    /// Keeps only the vertices flagged in `keep`, preserving their order.
    fn restrict(&self, keep: &[bool]) -> SimpleGraph {
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                new_index[v] = next;
                next += 1;
            }
        }
        let adjacency = (0..self.vertex_count())
            .filter(|&v| keep[v])
            .map(|v| {
                self.adjacency[v]
                    .iter()
                    .filter(|&&w| keep[w])
                    .map(|&w| new_index[w])
                    .collect()
            })
            .collect();
        let labels = self.labels.as_ref().map(|labels| {
            labels
                .iter()
                .zip(keep)
                .filter(|(_, &k)| k)
                .map(|(l, _)| l.clone())
                .collect()
        });
        SimpleGraph { adjacency, labels }
    }

    /// `Γ[U]`. Vertex order is inherited from `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<SimpleGraph> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument(
                "induced subgraph needs a nonempty vertex set".into(),
            ));
        }
        Ok(self.restrict(&self.membership(vertices)?))
    }

    /// `Γ - S`.
    pub fn delete_vertices(&self, vertices: &[usize]) -> Result<SimpleGraph> {
        let drop = self.membership(vertices)?;
        let keep: Vec<bool> = drop.iter().map(|d| !d).collect();
        Ok(self.restrict(&keep))
    }

    /// Whether the given vertices are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Whether no two of the given vertices are adjacent.
    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

/// `K_m`.
pub fn complete(m: usize) -> SimpleGraph {
    SimpleGraph::from_sorted_adjacency(
        (0..m)
            .map(|u| (0..m).filter(|&v| v != u).collect())
            .collect(),
    )
}

/// `E_m`, the edgeless graph.
pub fn empty_graph(m: usize) -> SimpleGraph {
    SimpleGraph::from_sorted_adjacency(vec![Vec::new(); m])
}

/// `P_m`.
pub fn path(m: usize) -> SimpleGraph {
    SimpleGraph::from_edges(m, (1..m).map(|v| (v - 1, v))).expect("valid path")
}

/// `C_m` for `m >= 3`; smaller `m` gives the path.
pub fn cycle(m: usize) -> SimpleGraph {
    let closing = (m >= 3).then(|| (m - 1, 0));
    SimpleGraph::from_edges(m, (1..m).map(|v| (v - 1, v)).chain(closing)).expect("valid cycle")
}

/// `A ∨ B`: vertices of `a` first, then those of `b`, plus every cross edge.
///
/// Labels survive only when both operands carry them.
pub fn join(a: &SimpleGraph, b: &SimpleGraph) -> SimpleGraph {
    let (na, nb) = (a.vertex_count(), b.vertex_count());
    let mut adjacency = Vec::with_capacity(na + nb);
    for list in &a.adjacency {
        let mut row = list.clone();
        row.extend(na..na + nb);
        adjacency.push(row);
    }
    for list in &b.adjacency {
        let mut row: Vec<usize> = (0..na).collect();
        row.extend(list.iter().map(|&v| v + na));
        adjacency.push(row);
    }
    let labels = match (&a.labels, &b.labels) {
        (Some(la), Some(lb)) => Some(la.iter().chain(lb).cloned().collect()),
        _ => None,
    };
    SimpleGraph { adjacency, labels }
}

/// A family of disjoint nonempty vertex sets covering the whole graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    parts: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(vertex_count: usize, mut parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![false; vertex_count];
        for (i, part) in parts.iter_mut().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidArgument(format!("part {i} is empty")));
            }
            part.sort_unstable();
            for &v in part.iter() {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
                if owner[v] {
                    return Err(Error::InvalidArgument(format!(
                        "vertex {v} appears in more than one part"
                    )));
                }
                owner[v] = true;
            }
        }
        if let Some(v) = owner.iter().position(|&o| !o) {
            return Err(Error::InvalidArgument(format!("vertex {v} is not covered")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    /// Part index of each vertex.
    pub fn owners(&self) -> Vec<usize> {
        let n = self.parts.iter().map(Vec::len).sum();
        let mut owner = vec![0; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                owner[v] = i;
            }
        }
        owner
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum PartKind {
    Complete,
    Empty,
}

impl PartKind {
    pub fn symbol(self) -> char {
        match self {
            PartKind::Complete => 'K',
            PartKind::Empty => 'E',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Part {
    pub kind: PartKind,
    pub size: usize,
}

impl Part {
    pub fn complete(size: usize) -> Self {
        Self {
            kind: PartKind::Complete,
            size,
        }
    }

    pub fn empty(size: usize) -> Self {
        Self {
            kind: PartKind::Empty,
            size,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind.symbol(), self.size)
    }
}

/// `H[Γ_1, …, Γ_k]` where every `Γ_i` is complete or edgeless.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HJoinSpec {
    pattern: SimpleGraph,
    parts: Vec<Part>,
}

impl HJoinSpec {
    pub fn new(pattern: SimpleGraph, parts: Vec<Part>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument(
                "an H-join needs at least one part".into(),
            ));
        }
        if pattern.vertex_count() != parts.len() {
            return Err(Error::ShapeMismatch(format!(
                "pattern has {} vertices but {} parts were given",
                pattern.vertex_count(),
                parts.len()
            )));
        }
        if parts.iter().any(|p| p.size == 0) {
            return Err(Error::InvalidArgument("part sizes must be positive".into()));
        }
        Ok(Self { pattern, parts })
    }

    /// Pattern given by 1-based edges, as pattern graphs are usually drawn.
    pub fn from_pattern_edges(edges: &[(usize, usize)], parts: Vec<Part>) -> Result<Self> {
        if edges.iter().any(|&(i, j)| i == 0 || j == 0) {
            return Err(Error::InvalidArgument("pattern edges are 1-based".into()));
        }
        let pattern =
            SimpleGraph::from_edges(parts.len(), edges.iter().map(|&(i, j)| (i - 1, j - 1)))?;
        Self::new(pattern, parts)
    }

    pub fn pattern(&self) -> &SimpleGraph {
        &self.pattern
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn total_size(&self) -> usize {
        self.parts.iter().map(|p| p.size).sum()
    }

    /// Edge count predicted by the definition.
    pub fn expected_edge_count(&self) -> usize {
        let internal: usize = self
            .parts
            .iter()
            .filter(|p| p.kind == PartKind::Complete)
            .map(|p| p.size * (p.size - 1) / 2)
            .sum();
        let cross: usize = self
            .pattern
            .edges()
            .map(|(i, j)| self.parts[i].size * self.parts[j].size)
            .sum();
        internal + cross
    }

    /// Whether vertices in parts `i` and `j` must be adjacent.
    fn linked(&self, i: usize, j: usize) -> bool {
        if i == j {
            self.parts[i].kind == PartKind::Complete
        } else {
            self.pattern.has_edge(i, j)
        }
    }
}

impl fmt::Display for HJoinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H[")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "] with E(H) = {{")?;
        for (i, (u, v)) in self.pattern.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{}", u + 1, v + 1)?;
        }
        write!(f, "}}")
    }
}

/// Materializes the H-join with vertices grouped by part, in part order.
pub fn h_join(spec: &HJoinSpec) -> SimpleGraph {
    let mut offsets = Vec::with_capacity(spec.parts.len() + 1);
    offsets.push(0);
    for p in &spec.parts {
        offsets.push(offsets.last().unwrap() + p.size);
    }
    let n = *offsets.last().unwrap();
    let mut adjacency = Vec::with_capacity(n);
    for i in 0..spec.parts.len() {
        for u in offsets[i]..offsets[i + 1] {
            let mut row = Vec::new();
            for j in 0..spec.parts.len() {
                if spec.linked(i, j) {
                    row.extend((offsets[j]..offsets[j + 1]).filter(|&v| v != u));
                }
            }
            adjacency.push(row);
        }
    }
    SimpleGraph::from_sorted_adjacency(adjacency)
}

/// Which clause of the H-join definition a vertex pair violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureClause {
    /// Two vertices of a `K` part are not adjacent.
    PartNotComplete { part: usize },
    /// Two vertices of an `E` part are adjacent.
    PartNotEmpty { part: usize },
    /// Parts `i`, `j` are adjacent in the pattern but a cross edge is missing.
    MissingCrossEdge { i: usize, j: usize },
    /// Parts `i`, `j` are not adjacent in the pattern but a cross edge exists.
    UnexpectedCrossEdge { i: usize, j: usize },
}

impl fmt::Display for StructureClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // parts are reported 1-based, matching the pattern drawings
        match *self {
            StructureClause::PartNotComplete { part } => {
                write!(f, "part {} is not complete", part + 1)
            }
            StructureClause::PartNotEmpty { part } => {
                write!(f, "part {} is not edgeless", part + 1)
            }
            StructureClause::MissingCrossEdge { i, j } => {
                write!(
                    f,
                    "missing cross edge between parts {} and {}",
                    i + 1,
                    j + 1
                )
            }
            StructureClause::UnexpectedCrossEdge { i, j } => {
                write!(
                    f,
                    "unexpected cross edge between parts {} and {}",
                    i + 1,
                    j + 1
                )
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureWitness {
    pub u: usize,
    pub v: usize,
    pub clause: StructureClause,
}

impl fmt::Display for StructureWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices {} and {}: {}", self.u, self.v, self.clause)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureVerdict {
    Holds,
    Fails(StructureWitness),
}

impl StructureVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, StructureVerdict::Holds)
    }
}

/// Checks that `graph` is literally `spec` once its vertices are grouped by
/// `partition` (part `i` of the partition playing `Γ_i`).
///
/// The first offending pair in lexicographic order is returned as witness.
pub fn verify_hjoin_structure(
    graph: &SimpleGraph,
    partition: &VertexPartition,
    spec: &HJoinSpec,
) -> Result<StructureVerdict> {
    let sizes = partition.sizes();
    let expected: Vec<usize> = spec.parts.iter().map(|p| p.size).collect();
    if sizes != expected {
        return Err(Error::ShapeMismatch(format!(
            "partition part sizes {sizes:?} do not match spec sizes {expected:?}"
        )));
    }
    if spec.total_size() != graph.vertex_count() {
        return Err(Error::ShapeMismatch(format!(
            "spec covers {} vertices, graph has {}",
            spec.total_size(),
            graph.vertex_count()
        )));
    }
    let owner = partition.owners();
    let n = graph.vertex_count();
    let mut row = vec![false; n];
    for u in 0..n {
        for &v in graph.neighbors(u) {
            row[v] = true;
        }
        for v in u + 1..n {
            let (i, j) = (owner[u], owner[v]);
            let want = spec.linked(i, j);
            if want != row[v] {
                let clause = match (i == j, want) {
                    (true, true) => StructureClause::PartNotComplete { part: i },
                    (true, false) => StructureClause::PartNotEmpty { part: i },
                    (false, true) => StructureClause::MissingCrossEdge {
                        i: i.min(j),
                        j: i.max(j),
                    },
                    (false, false) => StructureClause::UnexpectedCrossEdge {
                        i: i.min(j),
                        j: i.max(j),
                    },
                };
                return Ok(StructureVerdict::Fails(StructureWitness { u, v, clause }));
            }
        }
        for &v in graph.neighbors(u) {
            row[v] = false;
        }
    }
    Ok(StructureVerdict::Holds)
}
