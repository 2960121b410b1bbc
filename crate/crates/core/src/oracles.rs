//! Brute-force and certificate-based checks, independent of the closed
//! forms they are used to verify.
//!
//! Every search here is deterministic: candidate orders depend only on the
//! canonical vertex order of the input graph.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexPartition};
use crate::groups::GroupSpec;
use crate::theta::build_theta_with_cap;

/// Default node budget for [`max_clique`].
pub const DEFAULT_CLIQUE_BUDGET: u64 = 100_000_000;
/// Default step budget for [`hamiltonian_search`].
pub const DEFAULT_HAM_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    /// Lexicographically least maximum clique, ascending.
    pub witness: Vec<usize>,
}

pub fn max_clique(graph: &SimpleGraph) -> Result<CliqueResult> {
    max_clique_with_budget(graph, DEFAULT_CLIQUE_BUDGET)
}

/// Exact maximum clique by branch and bound with a greedy-coloring bound.
///
/// Exceeding `budget` node expansions is an error, never an approximation.
pub fn max_clique_with_budget(graph: &SimpleGraph, budget: u64) -> Result<CliqueResult> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "clique search needs a vertex".into(),
        ));
    }
    let mut search = CliqueSearch::new(graph, budget);
    let all = search.full_set();

    let mut best = Vec::new();
    search.expand_max(&mut Vec::new(), all.clone(), &mut best)?;
    let omega = best.len();

    // walk to the lexicographically least clique of size omega
    let mut witness = Vec::with_capacity(omega);
    let mut candidates = all;
    while witness.len() < omega {
        let need = omega - witness.len() - 1;
        let mut picked = None;
        for v in bits(&candidates) {
            let mut next = and(&candidates, &search.adj[v]);
            clear_up_to(&mut next, v);
            if search.exists_clique(next.clone(), need)? {
                picked = Some((v, next));
                break;
            }
        }
        let (v, next) = picked.ok_or_else(|| {
            Error::Invariant("maximum clique vanished during witness extraction".into())
        })?;
        witness.push(v);
        candidates = next;
    }
    if !graph.is_clique(&witness) {
        return Err(Error::Invariant("clique witness is not a clique".into()));
    }
    Ok(CliqueResult {
        size: witness.len(),
        witness,
    })
}

type Bits = Vec<u64>;

fn bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            (word != 0).then(|| {
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                w * 64 + b
            })
        })
    })
}

fn first_bit(set: &[u64]) -> Option<usize> {
    bits(set).next()
}

fn and(a: &[u64], b: &[u64]) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn is_zero(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

fn remove(set: &mut [u64], v: usize) {
    set[v / 64] &= !(1u64 << (v % 64));
}

/// Clears bits `0..=v`.
fn clear_up_to(set: &mut [u64], v: usize) {
    let word = v / 64;
    for w in &mut set[..word] {
        *w = 0;
    }
    let bit = v % 64;
    set[word] &= if bit == 63 { 0 } else { !0u64 << (bit + 1) };
}

struct CliqueSearch {
    adj: Vec<Bits>,
    words: usize,
    n: usize,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch {
    fn new(graph: &SimpleGraph, budget: u64) -> Self {
        let n = graph.vertex_count();
        let words = n.div_ceil(64);
        let adj = (0..n)
            .map(|u| {
                let mut row = vec![0u64; words];
                for &v in graph.neighbors(u) {
                    row[v / 64] |= 1 << (v % 64);
                }
                row
            })
            .collect();
        Self {
            adj,
            words,
            n,
            nodes: 0,
            budget,
        }
    }

    fn full_set(&self) -> Bits {
        let mut set = vec![!0u64; self.words];
        if !self.n.is_multiple_of(64) {
            set[self.words - 1] = (1u64 << (self.n % 64)) - 1;
        }
        set
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::BudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }

    /// Greedy sequential coloring; vertices come back in ascending color
    /// order together with their color number (an upper bound on the
    /// clique size among that vertex and all earlier ones).
    fn color_order(&self, set: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = set.to_vec();
        let mut order = Vec::with_capacity(count(set));
        let mut colors = Vec::with_capacity(order.capacity());
        let mut color = 0;
        while !is_zero(&uncolored) {
            color += 1;
            let mut open = uncolored.clone();
            while let Some(v) = first_bit(&open) {
                remove(&mut uncolored, v);
                remove(&mut open, v);
                for (o, a) in open.iter_mut().zip(&self.adj[v]) {
                    *o &= !a;
                }
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }

    fn expand_max(
        &mut self,
        current: &mut Vec<usize>,
        mut set: Bits,
        best: &mut Vec<usize>,
    ) -> Result<()> {
        let (order, colors) = self.color_order(&set);
        for idx in (0..order.len()).rev() {
            if current.len() + colors[idx] <= best.len() {
                return Ok(());
            }
            self.tick()?;
            let v = order[idx];
            current.push(v);
            let next = and(&set, &self.adj[v]);
            if is_zero(&next) {
                if current.len() > best.len() {
                    *best = current.clone();
                }
            } else {
                self.expand_max(current, next, best)?;
            }
            current.pop();
            remove(&mut set, v);
        }
        Ok(())
    }

    /// Whether `set` contains a clique on `need` vertices.
    fn exists_clique(&mut self, mut set: Bits, need: usize) -> Result<bool> {
        if need == 0 {
            return Ok(true);
        }
        if count(&set) < need {
            return Ok(false);
        }
        let (order, colors) = self.color_order(&set);
        for idx in (0..order.len()).rev() {
            if colors[idx] < need {
                return Ok(false);
            }
            self.tick()?;
            let v = order[idx];
            let next = and(&set, &self.adj[v]);
            if self.exists_clique(next, need - 1)? {
                return Ok(true);
            }
            remove(&mut set, v);
        }
        Ok(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonVerdict {
    Hamiltonian,
    NonHamiltonian,
    Inconclusive,
}

impl fmt::Display for HamiltonVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HamiltonVerdict::Hamiltonian => "hamiltonian",
            HamiltonVerdict::NonHamiltonian => "non-hamiltonian",
            HamiltonVerdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Vertex sequence of a Hamiltonian cycle (closing edge implied).
    Cycle(Vec<usize>),
    /// `S` with more components in `Γ - S` than `|S|`.
    Cut { set: Vec<usize>, components: usize },
    /// `δ(Γ) >= |V|/2` with `|V| >= 3`.
    Dirac {
        min_degree: usize,
        vertex_count: usize,
    },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Cycle(order) => {
                write!(f, "cycle:")?;
                for (i, v) in order.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            Certificate::Cut { set, components } => {
                write!(f, "cut:|S|={},c={}", set.len(), components)
            }
            Certificate::Dirac {
                min_degree,
                vertex_count,
            } => write!(f, "dirac:delta={min_degree},n={vertex_count}"),
        }
    }
}

impl Certificate {
    /// Re-checks the certificate against `graph`.
    pub fn validate(&self, graph: &SimpleGraph) -> bool {
        let n = graph.vertex_count();
        match self {
            Certificate::Cycle(order) => {
                let mut seen = vec![false; n];
                order.len() == n
                    && n >= 3
                    && order
                        .iter()
                        .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
                    && (0..n).all(|i| graph.has_edge(order[i], order[(i + 1) % n]))
            }
            Certificate::Cut { set, components } => {
                cut_witness_check(graph, set).unwrap_or(false)
                    && graph
                        .delete_vertices(set)
                        .is_ok_and(|rest| rest.component_count() == *components)
            }
            Certificate::Dirac {
                min_degree,
                vertex_count,
            } => {
                *vertex_count == n
                    && *min_degree == graph.min_degree()
                    && dirac_check(graph).unwrap_or(false)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonicityEvidence {
    pub verdict: HamiltonVerdict,
    pub certificate: Option<Certificate>,
    /// Backtracking steps spent.
    pub steps: u64,
}

impl HamiltonicityEvidence {
    /// Whether the evidence is internally consistent for `graph`.
    pub fn validate(&self, graph: &SimpleGraph) -> bool {
        match (&self.verdict, &self.certificate) {
            (
                HamiltonVerdict::Hamiltonian,
                Some(c @ (Certificate::Cycle(_) | Certificate::Dirac { .. })),
            ) => c.validate(graph),
            (HamiltonVerdict::NonHamiltonian, Some(c @ Certificate::Cut { .. })) => {
                c.validate(graph)
            }
            (HamiltonVerdict::NonHamiltonian, None) | (HamiltonVerdict::Inconclusive, None) => true,
            _ => false,
        }
    }
}

/// Decides Hamiltonicity with an explicit certificate where possible.
///
/// Graphs below 3 vertices, with a vertex of degree < 2, or disconnected
/// are rejected outright. Next, cut sets built from the dominating vertices
/// and from high-degree prefixes are tried; a hit is a non-Hamiltonicity
/// certificate. Otherwise a backtracking search runs from a minimum-degree
/// vertex, extending toward neighbors with the fewest unvisited neighbors.
/// `NonHamiltonian` without certificate means the search space was
/// exhausted; running out of `budget` steps gives `Inconclusive`.
pub fn hamiltonian_search(graph: &SimpleGraph, budget: u64) -> HamiltonicityEvidence {
    let n = graph.vertex_count();
    let refuted = |certificate| HamiltonicityEvidence {
        verdict: HamiltonVerdict::NonHamiltonian,
        certificate,
        steps: 0,
    };
    if n < 3 || graph.min_degree() < 2 || graph.component_count() > 1 {
        return refuted(None);
    }
    if let Some(cut) = find_cut_witness(graph) {
        return refuted(Some(cut));
    }
    let mut search = PathSearch::new(graph, budget);
    let outcome = search.run();
    let steps = search.steps;
    match outcome {
        Outcome::Found => HamiltonicityEvidence {
            verdict: HamiltonVerdict::Hamiltonian,
            certificate: Some(Certificate::Cycle(search.path)),
            steps,
        },
        Outcome::Exhausted => HamiltonicityEvidence {
            verdict: HamiltonVerdict::NonHamiltonian,
            certificate: None,
            steps,
        },
        Outcome::OutOfBudget => HamiltonicityEvidence {
            verdict: HamiltonVerdict::Inconclusive,
            certificate: None,
            steps,
        },
    }
}

fn find_cut_witness(graph: &SimpleGraph) -> Option<Certificate> {
    let n = graph.vertex_count();
    let check = |set: &[usize]| -> Option<Certificate> {
        if set.is_empty() || set.len() >= n {
            return None;
        }
        let components = graph.delete_vertices(set).ok()?.component_count();
        (components > set.len()).then(|| Certificate::Cut {
            set: set.to_vec(),
            components,
        })
    };
    if let Some(cut) = check(&dominating_vertices(graph)) {
        return Some(cut);
    }
    let degrees = graph.degrees();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
    (1..n).find_map(|t| {
        let mut prefix = by_degree[..t].to_vec();
        prefix.sort_unstable();
        check(&prefix)
    })
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

struct PathSearch<'g> {
    graph: &'g SimpleGraph,
    budget: u64,
    steps: u64,
    start: usize,
    path: Vec<usize>,
    visited: Vec<bool>,
    /// Number of unvisited neighbors of each vertex.
    free_degree: Vec<usize>,
}

impl<'g> PathSearch<'g> {
    fn new(graph: &'g SimpleGraph, budget: u64) -> Self {
        let degrees = graph.degrees();
        let start = (0..graph.vertex_count())
            .min_by_key(|&v| (degrees[v], v))
            .expect("nonempty graph");
        Self {
            graph,
            budget,
            steps: 0,
            start,
            path: Vec::new(),
            visited: vec![false; graph.vertex_count()],
            free_degree: degrees,
        }
    }

    fn visit(&mut self, v: usize) {
        self.visited[v] = true;
        self.path.push(v);
        for &w in self.graph.neighbors(v) {
            self.free_degree[w] -= 1;
        }
    }

    fn unvisit(&mut self, v: usize) {
        self.visited[v] = false;
        self.path.pop();
        for &w in self.graph.neighbors(v) {
            self.free_degree[w] += 1;
        }
    }

    fn run(&mut self) -> Outcome {
        self.visit(self.start);
        self.extend()
    }

    /// Every unvisited vertex still needs two usable cycle neighbors, and
    /// the path's ends need somewhere to go.
    fn feasible(&self, previous: usize, last: usize) -> bool {
        let n = self.graph.vertex_count();
        if self.path.len() == n {
            return true;
        }
        if self.free_degree[last] == 0 || self.free_degree[self.start] == 0 {
            return false;
        }
        if previous == self.start {
            return true;
        }
        self.graph.neighbors(previous).iter().all(|&w| {
            self.visited[w]
                || self.free_degree[w]
                    + usize::from(self.graph.has_edge(w, last))
                    + usize::from(self.graph.has_edge(w, self.start))
                    >= 2
        })
    }

    fn extend(&mut self) -> Outcome {
        let last = *self.path.last().expect("path starts at the seed");
        if self.path.len() == self.graph.vertex_count() {
            return if self.graph.has_edge(last, self.start) {
                Outcome::Found
            } else {
                Outcome::Exhausted
            };
        }
        self.steps += 1;
        if self.steps > self.budget {
            return Outcome::OutOfBudget;
        }
        let mut candidates: Vec<usize> = self
            .graph
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&v| !self.visited[v])
            .collect();
        candidates.sort_by_key(|&v| (self.free_degree[v], v));
        for v in candidates {
            self.visit(v);
            if self.feasible(last, v) {
                match self.extend() {
                    Outcome::Exhausted => {}
                    done => return done,
                }
            }
            self.unvisit(v);
        }
        Outcome::Exhausted
    }
}

/// Whether `Γ - S` has more than `|S|` components, which rules out a
/// Hamiltonian cycle.
pub fn cut_witness_check(graph: &SimpleGraph, set: &[usize]) -> Result<bool> {
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() || set.len() >= graph.vertex_count() {
        return Err(Error::InvalidArgument(
            "cut set must be a nonempty proper subset of the vertices".into(),
        ));
    }
    Ok(graph.delete_vertices(&set)?.component_count() > set.len())
}

/// Dirac's sufficient condition `δ(Γ) >= |V|/2`.
pub fn dirac_check(graph: &SimpleGraph) -> Result<bool> {
    let n = graph.vertex_count();
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "Dirac's condition needs at least 3 vertices, got {n}"
        )));
    }
    Ok(2 * graph.min_degree() >= n)
}

/// Vertices adjacent to every other vertex.
pub fn dominating_vertices(graph: &SimpleGraph) -> Vec<usize> {
    let n = graph.vertex_count();
    (0..n)
        .filter(|&v| graph.neighbors(v).len() + 1 == n)
        .collect()
}

/// Checks a claimed `(k, ℓ)`-partition; the first `l` parts are the cliques.
pub fn kl_partition_check(
    graph: &SimpleGraph,
    partition: &VertexPartition,
    k: usize,
    l: usize,
) -> Result<bool> {
    if k + l != partition.len() {
        return Err(Error::ShapeMismatch(format!(
            "({k}, {l})-partition needs {} parts, got {}",
            k + l,
            partition.len()
        )));
    }
    let covered: usize = partition.sizes().iter().sum();
    if covered != graph.vertex_count() {
        return Err(Error::ShapeMismatch(format!(
            "partition covers {covered} vertices, graph has {}",
            graph.vertex_count()
        )));
    }
    let (cliques, independents) = partition.parts().split_at(l);
    Ok(cliques.iter().all(|p| graph.is_clique(p))
        && independents.iter().all(|p| graph.is_independent(p)))
}

/// `G` is EPO exactly when `Θ(G)` is complete; `false` signals a bug.
pub fn is_epo_equiv_complete(group: &GroupSpec) -> Result<bool> {
    is_epo_equiv_complete_with_cap(group, crate::theta::DEFAULT_VERTEX_CAP)
}

pub fn is_epo_equiv_complete_with_cap(group: &GroupSpec, vertex_cap: u64) -> Result<bool> {
    let graph = build_theta_with_cap(group, vertex_cap)?;
    Ok(group.is_epo() == graph.is_complete())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty_graph, join};
    use crate::theta::build_theta;
    use proptest::prelude::*;

    /// Exhaustive clique number over all vertex subsets.
    fn subset_clique_number(g: &SimpleGraph) -> usize {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter(|mask| {
                let vs: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                g.is_clique(&vs)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Hamiltonicity by trying every permutation that starts at vertex 0.
    fn permutation_hamiltonian(g: &SimpleGraph) -> bool {
        fn go(g: &SimpleGraph, path: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let n = g.vertex_count();
            if path.len() == n {
                return g.has_edge(path[n - 1], path[0]);
            }
            for v in 0..n {
                if !used[v] && g.has_edge(*path.last().unwrap(), v) {
                    used[v] = true;
                    path.push(v);
                    if go(g, path, used) {
                        return true;
                    }
                    path.pop();
                    used[v] = false;
                }
            }
            false
        }
        let n = g.vertex_count();
        if n < 3 {
            return false;
        }
        let mut used = vec![false; n];
        used[0] = true;
        go(g, &mut vec![0], &mut used)
    }

    fn theta(family: crate::Family, n: u64) -> SimpleGraph {
        build_theta(&GroupSpec::new(family, n).unwrap()).unwrap()
    }

    #[test]
    fn clique_examples() {
        assert_eq!(max_clique(&complete(6)).unwrap().size, 6);
        assert_eq!(max_clique(&empty_graph(3)).unwrap().witness, vec![0]);
        let z12 = max_clique(&theta(crate::Family::Cyclic, 12)).unwrap();
        assert_eq!(z12.size, 6);
        assert_eq!(
            max_clique(&theta(crate::Family::Dicyclic, 3)).unwrap().size,
            6
        );
        assert!(max_clique(&empty_graph(0)).is_err());
    }

    #[test]
    fn clique_budget_is_loud() {
        let g = theta(crate::Family::Cyclic, 30);
        assert_eq!(max_clique_with_budget(&g, 3), Err(Error::BudgetExceeded(3)));
    }

    #[test]
    fn lexicographically_least_witness() {
        // triangles {1,2,3} and {0,4,5}
        let g =
            SimpleGraph::from_edges(6, [(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(max_clique(&g).unwrap().witness, vec![0, 4, 5]);
    }

    #[test]
    fn hamiltonian_examples() {
        for m in 3..9 {
            let ev = hamiltonian_search(&cycle(m), 1000);
            assert_eq!(ev.verdict, HamiltonVerdict::Hamiltonian);
            assert!(ev.validate(&cycle(m)));
        }
        let z4 = theta(crate::Family::Cyclic, 4);
        assert_eq!(
            hamiltonian_search(&z4, 1000).verdict,
            HamiltonVerdict::Hamiltonian
        );
        let q2 = theta(crate::Family::Dicyclic, 2);
        let ev = hamiltonian_search(&q2, 1000);
        assert_eq!(ev.verdict, HamiltonVerdict::NonHamiltonian);
        assert!(matches!(
            ev.certificate,
            Some(Certificate::Cut { components: 6, .. })
        ));
        assert!(ev.validate(&q2));
        assert_eq!(
            hamiltonian_search(&complete(2), 10).verdict,
            HamiltonVerdict::NonHamiltonian
        );
    }

    #[test]
    fn petersen_is_exhausted_without_cut() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let petersen = SimpleGraph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let ev = hamiltonian_search(&petersen, 1_000_000);
        assert_eq!(ev.verdict, HamiltonVerdict::NonHamiltonian);
        assert_eq!(ev.certificate, None);
        assert!(!permutation_hamiltonian(&petersen));
        let ev = hamiltonian_search(&petersen, 2);
        assert_eq!(ev.verdict, HamiltonVerdict::Inconclusive);
    }

    #[test]
    fn cut_examples() {
        let z9 = theta(crate::Family::Cyclic, 9);
        let s = GroupSpec::cyclic(9).unwrap().s_indices();
        assert_eq!(s.len(), 3);
        assert_eq!(cut_witness_check(&z9, &s), Ok(true));
        let q6 = theta(crate::Family::Dicyclic, 6);
        let s = GroupSpec::dicyclic(6).unwrap().s_indices();
        assert_eq!(s.len(), 4);
        assert_eq!(q6.delete_vertices(&s).unwrap().component_count(), 5);
        assert_eq!(cut_witness_check(&q6, &s), Ok(true));
        assert_eq!(cut_witness_check(&complete(5), &[2]), Ok(false));
        assert!(cut_witness_check(&complete(5), &[]).is_err());
        assert!(cut_witness_check(&complete(3), &[0, 1, 2]).is_err());
    }

    #[test]
    fn dirac_examples() {
        assert_eq!(dirac_check(&theta(crate::Family::Cyclic, 4)), Ok(true));
        for n in 3..20 {
            assert_eq!(dirac_check(&theta(crate::Family::Dihedral, n)), Ok(true));
        }
        assert_eq!(dirac_check(&empty_graph(3)), Ok(false));
        assert!(dirac_check(&complete(2)).is_err());
    }

    #[test]
    fn dominating_examples() {
        assert_eq!(dominating_vertices(&complete(4)), vec![0, 1, 2, 3]);
        assert!(dominating_vertices(&empty_graph(3)).is_empty());
        let g = GroupSpec::dihedral(6).unwrap();
        assert_eq!(
            dominating_vertices(&build_theta(&g).unwrap()),
            g.s_indices()
        );
    }

    #[test]
    fn kl_examples() {
        let z27 = GroupSpec::cyclic(27).unwrap();
        let g = build_theta(&z27).unwrap();
        let s = z27.s_indices();
        let t: Vec<usize> = (0..27).filter(|v| !s.contains(v)).collect();
        let parts = VertexPartition::new(27, vec![s, t]).unwrap();
        assert_eq!(kl_partition_check(&g, &parts, 1, 1), Ok(true));
        assert!(kl_partition_check(&g, &parts, 2, 1).is_err());
        // T as the clique and S as the independent set is wrong
        let swapped =
            VertexPartition::new(27, vec![parts.parts()[1].clone(), parts.parts()[0].clone()])
                .unwrap();
        assert_eq!(kl_partition_check(&g, &swapped, 1, 1), Ok(false));
    }

    #[test]
    fn epo_equivalence_examples() {
        assert_eq!(
            is_epo_equiv_complete(&GroupSpec::dihedral(7).unwrap()),
            Ok(true)
        );
        assert_eq!(
            is_epo_equiv_complete(&GroupSpec::cyclic(6).unwrap()),
            Ok(true)
        );
        assert_eq!(
            is_epo_equiv_complete(&GroupSpec::dicyclic(2).unwrap()),
            Ok(true)
        );
        assert!(!build_theta(&GroupSpec::dicyclic(2).unwrap())
            .unwrap()
            .is_complete());
        assert!(matches!(
            is_epo_equiv_complete_with_cap(&GroupSpec::cyclic(50).unwrap(), 10),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn q2_is_k2_join_e6() {
        let q2 = theta(crate::Family::Dicyclic, 2);
        let s = GroupSpec::dicyclic(2).unwrap().s_indices();
        assert_eq!(s, vec![0, 2]);
        assert_eq!(
            q2.edge_count(),
            join(&complete(2), &empty_graph(6)).edge_count()
        );
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            edges.push((u, v));
                        }
                    }
                }
                SimpleGraph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn clique_matches_subset_enumeration(g in arb_graph(12)) {
            let r = max_clique(&g).unwrap();
            prop_assert_eq!(r.size, subset_clique_number(&g));
            prop_assert!(g.is_clique(&r.witness));
        }

        #[test]
        fn hamiltonian_search_matches_permutations(g in arb_graph(8)) {
            let ev = hamiltonian_search(&g, 1_000_000);
            prop_assert!(ev.validate(&g));
            let truth = permutation_hamiltonian(&g);
            match ev.verdict {
                HamiltonVerdict::Hamiltonian => prop_assert!(truth),
                HamiltonVerdict::NonHamiltonian => prop_assert!(!truth),
                HamiltonVerdict::Inconclusive => prop_assert!(false, "budget should suffice"),
            }
            if g.vertex_count() >= 3 && dirac_check(&g).unwrap() {
                prop_assert_eq!(ev.verdict, HamiltonVerdict::Hamiltonian);
            }
        }
    }
}
