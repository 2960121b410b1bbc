//! Construction of the prime coprime graph `Θ(G)` and its DOT / JSON exports.
//!
//! Vertex `i` of `Θ(G)` is `G.elements()[i]`; distinct `u`, `v` are adjacent
//! iff `gcd(|u|, |v|)` is 1 or a prime.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::groups::{is_unit_or_prime, Family, GroupSpec};
use crate::numtheory::gcd;

/// Largest group order [`build_theta`] accepts without an explicit override.
pub const DEFAULT_VERTEX_CAP: u64 = 20_000;

/// The adjacency rule on element orders.
pub fn orders_adjacent(a: u64, b: u64) -> bool {
    is_unit_or_prime(gcd(a, b))
}

pub fn build_theta(group: &GroupSpec) -> Result<SimpleGraph> {
    build_theta_with_cap(group, DEFAULT_VERTEX_CAP)
}

pub fn build_theta_with_cap(group: &GroupSpec, vertex_cap: u64) -> Result<SimpleGraph> {
    if group.order() > vertex_cap {
        return Err(Error::Capacity {
            order: group.order(),
            budget: vertex_cap,
        });
    }
    let orders = group.element_orders();

    // adjacency depends only on the order, so decide it once per class pair
    let mut classes: Vec<u64> = orders.clone();
    classes.sort_unstable();
    classes.dedup();
    let class_of: Vec<usize> = orders
        .iter()
        .map(|d| classes.binary_search(d).expect("order present"))
        .collect();
    let linked: Vec<Vec<bool>> = classes
        .iter()
        .map(|&a| classes.iter().map(|&b| orders_adjacent(a, b)).collect())
        .collect();

    let n = orders.len();
    let adjacency = (0..n)
        .map(|u| {
            let row = &linked[class_of[u]];
            (0..n).filter(|&v| v != u && row[class_of[v]]).collect()
        })
        .collect();
    SimpleGraph::from_sorted_adjacency(adjacency)
        .with_labels(group.elements().iter().map(ToString::to_string).collect())
}

/// DOT rendering: vertices in canonical order, then edges `(u, v)`, `u < v`,
/// in lexicographic index order. Unlabelled graphs use vertex indices.
pub fn to_dot(graph: &SimpleGraph) -> String {
    let name = |v: usize| match graph.labels() {
        Some(labels) => labels[v].clone(),
        None => v.to_string(),
    };
    let mut out = String::from("graph theta {\n");
    for v in 0..graph.vertex_count() {
        let _ = writeln!(out, "  \"{}\";", name(v));
    }
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", name(u), name(v));
    }
    out.push_str("}\n");
    out
}

/// JSON document describing `Θ(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaExport {
    pub family: Family,
    pub parameter: u64,
    pub vertex_labels: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl ThetaExport {
    pub fn new(group: &GroupSpec, graph: &SimpleGraph) -> Self {
        let vertex_labels = match graph.labels() {
            Some(labels) => labels.to_vec(),
            None => group.elements().iter().map(ToString::to_string).collect(),
        };
        Self {
            family: group.family(),
            parameter: group.parameter(),
            vertex_labels,
            edges: graph.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("export is always serializable")
    }

    /// Rebuilds the graph (with labels) from the export.
    pub fn to_graph(&self) -> Result<SimpleGraph> {
        SimpleGraph::from_edges(
            self.vertex_labels.len(),
            self.edges.iter().map(|e| (e[0], e[1])),
        )?
        .with_labels(self.vertex_labels.clone())
    }
}
