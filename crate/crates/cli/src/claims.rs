//! Formula-versus-oracle checks, one [`Claim`] per family of statements.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use pcg_core::closedforms::{
    clique_number, decomposition_catalog, is_hamiltonian, vertex_degree, Pattern,
};
use pcg_core::graph::{complete, empty_graph, join, verify_hjoin_structure, StructureVerdict};
use pcg_core::numtheory::{divisors, euler_phi, factorize, phi_sum_expansion};
use pcg_core::oracles::{
    cut_witness_check, dirac_check, dominating_vertices, hamiltonian_search, kl_partition_check,
    max_clique_with_budget, Certificate, HamiltonVerdict, DEFAULT_CLIQUE_BUDGET,
    DEFAULT_HAM_BUDGET,
};
use pcg_core::{
    build_theta_with_cap, Error, Family, GroupSpec, Result, SimpleGraph, DEFAULT_VERTEX_CAP,
};
use rayon::prelude::*;

use crate::range::ParamRange;
use crate::report::{Record, Value, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub clique: u64,
    pub ham: u64,
    pub vertex_cap: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            clique: DEFAULT_CLIQUE_BUDGET,
            ham: DEFAULT_HAM_BUDGET,
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    PhiSum,
    DominatingSet,
    EpoComplete,
    Clique(Family),
    Degree(Family),
    Ham(Family),
    CutWitness,
    DecompAll,
    Decomp(Family, Pattern),
    DihedralJoin,
    DicyclicJoin,
}

impl Claim {
    /// Every claim id accepted by [`FromStr`], for help text.
    pub fn ids() -> Vec<String> {
        let mut ids: Vec<String> = ["phi-sum", "dominating-set", "epo-complete"]
            .map(String::from)
            .into();
        for prefix in ["clique", "degree", "ham"] {
            ids.extend(Family::ALL.iter().map(|f| format!("{prefix}-{}", f.name())));
        }
        ids.extend(["cut-witness", "decomp-all"].map(String::from));
        for family in Family::ALL {
            ids.extend(
                Pattern::for_family(family)
                    .iter()
                    .map(|p| format!("decomp-{}-{}", family.symbol(), p.slug())),
            );
        }
        ids.extend(["dihedral-join", "dicyclic-join"].map(String::from));
        ids
    }

    /// Families the claim sweeps over.
    pub fn families(self) -> Vec<Family> {
        match self {
            Claim::PhiSum => vec![Family::Cyclic],
            Claim::DominatingSet | Claim::EpoComplete | Claim::DecompAll => Family::ALL.to_vec(),
            Claim::CutWitness => vec![Family::Cyclic, Family::Dicyclic],
            Claim::Clique(f) | Claim::Degree(f) | Claim::Ham(f) | Claim::Decomp(f, _) => vec![f],
            Claim::DihedralJoin => vec![Family::Dihedral],
            Claim::DicyclicJoin => vec![Family::Dicyclic],
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::PhiSum => f.write_str("phi-sum"),
            Claim::DominatingSet => f.write_str("dominating-set"),
            Claim::EpoComplete => f.write_str("epo-complete"),
            Claim::Clique(family) => write!(f, "clique-{}", family.name()),
            Claim::Degree(family) => write!(f, "degree-{}", family.name()),
            Claim::Ham(family) => write!(f, "ham-{}", family.name()),
            Claim::CutWitness => f.write_str("cut-witness"),
            Claim::DecompAll => f.write_str("decomp-all"),
            Claim::Decomp(family, pattern) => {
                write!(f, "decomp-{}-{}", family.symbol(), pattern.slug())
            }
            Claim::DihedralJoin => f.write_str("dihedral-join"),
            Claim::DicyclicJoin => f.write_str("dicyclic-join"),
        }
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::InvalidArgument(format!("unknown claim {s:?}"));
        let simple = match s {
            "phi-sum" => Some(Claim::PhiSum),
            "dominating-set" => Some(Claim::DominatingSet),
            "epo-complete" => Some(Claim::EpoComplete),
            "cut-witness" => Some(Claim::CutWitness),
            "decomp-all" => Some(Claim::DecompAll),
            "dihedral-join" => Some(Claim::DihedralJoin),
            "dicyclic-join" => Some(Claim::DicyclicJoin),
            _ => None,
        };
        if let Some(claim) = simple {
            return Ok(claim);
        }
        if let Some(rest) = s.strip_prefix("decomp-") {
            let (symbol, slug) = rest.split_once('-').ok_or_else(unknown)?;
            let family = Family::ALL
                .into_iter()
                .find(|f| f.symbol().to_string() == symbol)
                .ok_or_else(unknown)?;
            let pattern = Pattern::for_family(family)
                .iter()
                .copied()
                .find(|p| p.slug() == slug)
                .ok_or_else(unknown)?;
            return Ok(Claim::Decomp(family, pattern));
        }
        let (prefix, family) = s.split_once('-').ok_or_else(unknown)?;
        let family: Family = family.parse().map_err(|_| unknown())?;
        match prefix {
            "clique" => Ok(Claim::Clique(family)),
            "degree" => Ok(Claim::Degree(family)),
            "ham" => Ok(Claim::Ham(family)),
            _ => Err(unknown()),
        }
    }
}

/// Runs `claim` over every instance selected by `range` and `family`.
///
/// Instances run in parallel on the current rayon pool; records come back
/// ordered by family, then `n`, then the order each instance emits them.
/// `ms` stays 0 unless `timings` is set, so reports are byte-stable.
pub fn run_claim(
    claim: Claim,
    range: &ParamRange,
    family: Option<Family>,
    budgets: &Budgets,
    timings: bool,
) -> Result<Vec<Record>> {
    let families: Vec<Family> = claim
        .families()
        .into_iter()
        .filter(|f| family.is_none_or(|want| want == *f))
        .collect();
    if families.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "claim {claim} does not cover the {} family",
            family.map_or("requested", Family::name)
        )));
    }
    let instances: Vec<(Family, u64)> = families
        .iter()
        .flat_map(|&f| range.parameters(f).into_iter().map(move |n| (f, n)))
        .collect();
    let per_instance = instances
        .par_iter()
        .map(|&(f, n)| {
            let start = Instant::now();
            let mut records = check_instance(claim, &GroupSpec::new(f, n)?, budgets)?;
            if timings {
                let ms = start.elapsed().as_millis() as u64;
                records.iter_mut().for_each(|r| r.ms = ms);
            }
            Ok(records)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_instance.into_iter().flatten().collect())
}

fn record(claim: impl ToString, group: &GroupSpec, formula: Value, oracle: Value) -> Record {
    let verdict = if formula == oracle {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Record {
        claim: claim.to_string(),
        family: group.family().name().to_string(),
        n: group.parameter(),
        param: None,
        formula,
        oracle,
        verdict,
        certificate: None,
        ms: 0,
    }
}

fn labels(graph: &SimpleGraph, vertices: &[usize]) -> String {
    let names = graph.labels().expect("theta graphs are labelled");
    let list: Vec<&str> = vertices.iter().map(|&v| names[v].as_str()).collect();
    format!("{{{}}}", list.join(","))
}

fn check_instance(claim: Claim, group: &GroupSpec, budgets: &Budgets) -> Result<Vec<Record>> {
    let n = group.parameter();
    let theta = || build_theta_with_cap(group, budgets.vertex_cap);
    Ok(match claim {
        Claim::PhiSum => {
            if n < 2 {
                return Ok(Vec::new());
            }
            vec![phi_sum(claim, group)?]
        }
        Claim::DominatingSet => {
            let graph = theta()?;
            let predicted = group.s_indices();
            let found = dominating_vertices(&graph);
            let oracle = if found == predicted {
                Value::Int(found.len() as u64)
            } else {
                Value::Text(format!("dominating {}", labels(&graph, &found)))
            };
            let mut r = record(claim, group, Value::Int(predicted.len() as u64), oracle);
            r.certificate = Some(labels(&graph, &predicted));
            vec![r]
        }
        Claim::EpoComplete => {
            let graph = theta()?;
            vec![record(
                claim,
                group,
                group.is_epo().into(),
                graph.is_complete().into(),
            )]
        }
        Claim::Clique(_) => {
            let graph = theta()?;
            let formula = Value::Int(clique_number(group)?);
            match max_clique_with_budget(&graph, budgets.clique) {
                Ok(found) => {
                    let mut r = record(claim, group, formula, Value::Int(found.size as u64));
                    r.certificate = Some(labels(&graph, &found.witness));
                    vec![r]
                }
                Err(Error::BudgetExceeded(b)) => {
                    let mut r =
                        record(claim, group, formula, Value::Text("budget exceeded".into()));
                    r.verdict = Verdict::Inconclusive;
                    r.certificate = Some(format!("node budget {b}"));
                    vec![r]
                }
                Err(e) => return Err(e),
            }
        }
        Claim::Degree(_) => degree_records(claim, group, &theta()?)?,
        Claim::Ham(_) => vec![ham_record(claim, group, &theta()?, budgets)?],
        Claim::CutWitness => {
            let s = group.s_indices();
            if is_hamiltonian(group) || s.len() as u64 >= group.order() {
                return Ok(Vec::new());
            }
            let graph = theta()?;
            let rest = graph.delete_vertices(&s)?.component_count();
            let mut r = record(
                claim,
                group,
                true.into(),
                cut_witness_check(&graph, &s)?.into(),
            );
            r.certificate = Some(format!("|S|={} c={rest}", s.len()));
            vec![r]
        }
        Claim::DecompAll | Claim::Decomp(..) => {
            let catalog = decomposition_catalog(group.family(), n)?;
            let Some(entry) = catalog.entry() else {
                return Ok(Vec::new());
            };
            if let Claim::Decomp(_, pattern) = claim {
                if entry.pattern() != pattern {
                    return Ok(Vec::new());
                }
            }
            let graph = theta()?;
            let partition = entry.order_class_partition()?;
            let (k, l) = entry.kl();
            let oracle = match verify_hjoin_structure(&graph, &partition, entry.spec()) {
                Err(Error::ShapeMismatch(msg)) => Value::Text(msg),
                Err(e) => return Err(e),
                Ok(StructureVerdict::Fails(w)) => Value::Text(w.to_string()),
                Ok(StructureVerdict::Holds) => {
                    if kl_partition_check(&graph, &partition, k, l)? {
                        Value::Int(graph.vertex_count() as u64)
                    } else {
                        Value::Text(format!("({k}, {l}) partition fails"))
                    }
                }
            };
            let formula = Value::Int(entry.spec().total_size() as u64);
            let mut r = record(entry.claim_id(), group, formula, oracle);
            r.param = Some(entry.pattern().notation().to_string());
            r.certificate = Some(format!("{} ({k},{l})", entry.spec()));
            vec![r]
        }
        Claim::DihedralJoin => {
            let cyclic = build_theta_with_cap(&GroupSpec::cyclic(n)?, budgets.vertex_cap)?;
            let joined = join(&cyclic, &complete(n as usize));
            vec![record(
                claim,
                group,
                true.into(),
                theta()?.same_edges(&joined).into(),
            )]
        }
        Claim::DicyclicJoin => {
            if n.is_multiple_of(2) {
                return Ok(Vec::new());
            }
            let cyclic = build_theta_with_cap(&GroupSpec::cyclic(2 * n)?, budgets.vertex_cap)?;
            let joined = join(&cyclic, &empty_graph(2 * n as usize));
            vec![record(
                claim,
                group,
                true.into(),
                theta()?.same_edges(&joined).into(),
            )]
        }
    })
}

fn phi_sum(claim: Claim, group: &GroupSpec) -> Result<Record> {
    let n = group.parameter();
    let expansion = phi_sum_expansion(&factorize(n))?;
    let divisor_sum: u64 = divisors(n).into_iter().map(euler_phi).sum();
    let oracle = if divisor_sum == n {
        Value::Int(divisor_sum)
    } else {
        Value::Text(format!("divisor sum {divisor_sum} differs from n"))
    };
    Ok(record(claim, group, Value::Int(expansion), oracle))
}

/// One record per class of elements sharing order and coset; the
/// representative is the class's first element, but every member is
/// compared against the graph.
fn degree_records(claim: Claim, group: &GroupSpec, graph: &SimpleGraph) -> Result<Vec<Record>> {
    let elements = group.elements();
    let orders = group.element_orders();
    let mut classes: BTreeMap<(bool, u64), Vec<usize>> = BTreeMap::new();
    let mut first_seen = Vec::new();
    for (v, &x) in elements.iter().enumerate() {
        let key = (!group.in_rotation_subgroup(x), orders[v]);
        let class = classes.entry(key).or_default();
        if class.is_empty() {
            first_seen.push(key);
        }
        class.push(v);
    }
    let mut records = Vec::with_capacity(first_seen.len());
    for key in first_seen {
        let members = &classes[&key];
        let rep = members[0];
        let formula = vertex_degree(group, elements[rep])?;
        let mut oracle = Value::Int(graph.degree(rep)? as u64);
        for &v in members {
            let (want, got) = (vertex_degree(group, elements[v])?, graph.degree(v)? as u64);
            if want != got {
                oracle = Value::Text(format!("{}: formula {want}, graph {got}", elements[v]));
                break;
            }
        }
        let mut r = record(claim, group, Value::Int(formula), oracle);
        r.param = Some(elements[rep].to_string());
        r.certificate = Some(format!("order {} class of {}", key.1, members.len()));
        records.push(r);
    }
    Ok(records)
}

fn dirac_certificate(graph: &SimpleGraph) -> String {
    format!(
        "dirac: min degree {} >= {}/2",
        graph.min_degree(),
        graph.vertex_count()
    )
}

fn ham_record(
    claim: Claim,
    group: &GroupSpec,
    graph: &SimpleGraph,
    budgets: &Budgets,
) -> Result<Record> {
    let formula = Value::Bool(is_hamiltonian(group));
    if group.family() == Family::Dihedral {
        let holds = dirac_check(graph)?;
        let mut r = record(claim, group, formula, holds.into());
        r.certificate = holds.then(|| dirac_certificate(graph));
        return Ok(r);
    }
    let evidence = hamiltonian_search(graph, budgets.ham);
    if !evidence.validate(graph) {
        let mut r = record(
            claim,
            group,
            formula,
            Value::Text("invalid certificate".into()),
        );
        r.verdict = Verdict::Fail;
        return Ok(r);
    }
    let (oracle, certificate) = match (&evidence.verdict, &evidence.certificate) {
        (HamiltonVerdict::Hamiltonian, Some(Certificate::Cycle(order))) => {
            (Value::Bool(true), format!("cycle {}", labels(graph, order)))
        }
        (HamiltonVerdict::Hamiltonian, _) => (Value::Bool(true), dirac_certificate(graph)),
        (HamiltonVerdict::NonHamiltonian, Some(Certificate::Cut { set, components })) => (
            Value::Bool(false),
            format!("cut {} leaves {components} components", labels(graph, set)),
        ),
        (HamiltonVerdict::NonHamiltonian, _) => {
            let why = if graph.vertex_count() < 3 {
                "fewer than 3 vertices".to_string()
            } else {
                format!("search exhausted after {} steps", evidence.steps)
            };
            (Value::Bool(false), why)
        }
        (HamiltonVerdict::Inconclusive, _) => {
            if dirac_check(graph)? {
                (Value::Bool(true), dirac_certificate(graph))
            } else {
                let mut r = record(claim, group, formula, Value::Text("inconclusive".into()));
                r.verdict = Verdict::Inconclusive;
                r.certificate = Some(format!("step budget {}", budgets.ham));
                return Ok(r);
            }
        }
    };
    let mut r = record(claim, group, formula, oracle);
    r.certificate = Some(certificate);
    Ok(r)
}
