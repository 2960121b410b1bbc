//! Closed-form answers for `Θ(G)`: clique numbers, vertex degrees,
//! Hamiltonicity, and the catalog of H-join decompositions.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{HJoinSpec, Part, VertexPartition};
use crate::groups::{is_unit_or_prime, Family, GroupElement, GroupSpec};
use crate::numtheory::{factorize, is_prime, Factorization};

/// `ω(Θ(Z_n)) = 1 + Σ(p_i - 1) + #{i : p_i² | n} + k(k-1)/2`.
pub fn clique_cyclic(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "cyclic clique formula needs n >= 2, got {n}"
        )));
    }
    let f = factorize(n);
    let k = f.len() as u64;
    let prime_part: u64 = f.primes().iter().map(|p| p - 1).sum();
    let squares = f.exponents().iter().filter(|&&e| e >= 2).count() as u64;
    Ok(1 + prime_part + squares + k * (k - 1) / 2)
}

/// `ω(Θ(D_n)) = n + ω(Θ(Z_n))`.
pub fn clique_dihedral(n: u64) -> Result<u64> {
    GroupSpec::dihedral(n)?;
    Ok(n + clique_cyclic(n)?)
}

/// `ω(Θ(Z_2n))` for even `n`, one more for odd `n`.
pub fn clique_dicyclic(n: u64) -> Result<u64> {
    GroupSpec::dicyclic(n)?;
    let inner = clique_cyclic(2 * n)?;
    Ok(if n.is_multiple_of(2) {
        inner
    } else {
        inner + 1
    })
}

pub fn clique_number(group: &GroupSpec) -> Result<u64> {
    let n = group.parameter();
    match group.family() {
        Family::Cyclic if n == 1 => Ok(1),
        Family::Cyclic => clique_cyclic(n),
        Family::Dihedral => clique_dihedral(n),
        Family::Dicyclic => clique_dicyclic(n),
    }
}

/// Exponent data of an element order `|x| = Π p_i^β_i` inside `Z_n` with
/// `n = Π p_i^α_i`.
///
/// `γ_i` is 1 when `β_i >= 2` and `α_i` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentProfile {
    factorization: Factorization,
    order: u64,
    beta: Vec<u32>,
    gamma: Vec<u32>,
}

impl ExponentProfile {
    pub fn new(n: u64, order: u64) -> Result<Self> {
        if n == 0 || order == 0 || !n.is_multiple_of(order) {
            return Err(Error::InvalidArgument(format!(
                "{order} is not the order of an element of Z_{n}"
            )));
        }
        let factorization = factorize(n);
        let beta: Vec<u32> = factorization
            .primes()
            .iter()
            .map(|&p| {
                let mut e = 0;
                let mut rest = order;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    e += 1;
                }
                e
            })
            .collect();
        let gamma = beta
            .iter()
            .zip(factorization.exponents())
            .map(|(&b, &a)| if b >= 2 { 1 } else { a })
            .collect();
        Ok(Self {
            factorization,
            order,
            beta,
            gamma,
        })
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn gamma(&self) -> &[u32] {
        &self.gamma
    }

    /// Choices `a ∈ {0,1}^k` with at most one `a_j = 1` among the primes
    /// dividing the order.
    pub fn admissible_choices(&self) -> impl Iterator<Item = u64> + '_ {
        let k = self.beta.len();
        let support: u64 = self
            .beta
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= 1)
            .map(|(i, _)| 1u64 << i)
            .sum();
        (0u64..1 << k).filter(move |mask| (mask & support).count_ones() <= 1)
    }

    /// `Σ_Δ Π (p_i^γ_i - 1)^a_i` over the admissible choices.
    pub fn degree_sum(&self) -> Result<u64> {
        let terms: Vec<u64> = self
            .factorization
            .primes()
            .iter()
            .zip(&self.gamma)
            .map(|(&p, &g)| {
                p.checked_pow(g)
                    .map(|v| v - 1)
                    .ok_or(Error::Overflow("degree term"))
            })
            .collect::<Result<_>>()?;
        let mut total = 0u64;
        for mask in self.admissible_choices() {
            let mut product = 1u64;
            for (i, &t) in terms.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    product = product
                        .checked_mul(t)
                        .ok_or(Error::Overflow("degree term"))?;
                }
            }
            total = total
                .checked_add(product)
                .ok_or(Error::Overflow("degree sum"))?;
        }
        Ok(total)
    }
}

fn composite_cyclic_degree(n: u64, order: u64) -> Result<u64> {
    if is_unit_or_prime(order) {
        return Err(Error::InvalidArgument(format!(
            "order {order} is not composite; such vertices are dominating"
        )));
    }
    ExponentProfile::new(n, order)?.degree_sum()
}

/// Degree in `Θ(Z_n)` of an element of composite order.
pub fn degree_cyclic(n: u64, x: GroupElement) -> Result<u64> {
    let group = GroupSpec::cyclic(n)?;
    composite_cyclic_degree(n, group.element_order(x)?)
}

/// Degree in `Θ(D_n)`; elements of order 1 or prime get `2n - 1`.
pub fn degree_dihedral(n: u64, x: GroupElement) -> Result<u64> {
    let group = GroupSpec::dihedral(n)?;
    let order = group.element_order(x)?;
    if is_unit_or_prime(order) {
        return Ok(group.order() - 1);
    }
    if !group.in_rotation_subgroup(x) {
        return Err(Error::Invariant(format!(
            "{x} has composite order {order} but is not a rotation"
        )));
    }
    Ok(n + composite_cyclic_degree(n, order)?)
}

/// Degree in `Θ(Q_n)`; elements of order 1 or prime get `4n - 1`.
///
/// Elements `a^i b` outside `<a>` all have order 4 and are pairwise
/// non-adjacent. For odd `n` they are joined to all of `<a>`, giving `2n`;
/// for even `n` they see exactly what an order-4 element of `<a>` sees.
pub fn degree_dicyclic(n: u64, x: GroupElement) -> Result<u64> {
    let group = GroupSpec::dicyclic(n)?;
    let order = group.element_order(x)?;
    if is_unit_or_prime(order) {
        return Ok(group.order() - 1);
    }
    if group.in_rotation_subgroup(x) {
        let inner = composite_cyclic_degree(2 * n, order)?;
        return Ok(if order % 4 == 0 { inner } else { 2 * n + inner });
    }
    if order != 4 {
        return Err(Error::Invariant(format!(
            "{x} lies outside <a> but has order {order}"
        )));
    }
    if n % 2 == 1 {
        Ok(2 * n)
    } else {
        composite_cyclic_degree(2 * n, 4)
    }
}

/// Degree of any vertex of `Θ(G)`, routing orders 1 and prime to `|G| - 1`.
pub fn vertex_degree(group: &GroupSpec, x: GroupElement) -> Result<u64> {
    let n = group.parameter();
    match group.family() {
        Family::Cyclic => {
            let order = group.element_order(x)?;
            if is_unit_or_prime(order) {
                Ok(group.order() - 1)
            } else {
                degree_cyclic(n, x)
            }
        }
        Family::Dihedral => degree_dihedral(n, x),
        Family::Dicyclic => degree_dicyclic(n, x),
    }
}

/// `Θ(Z_n)` is Hamiltonian iff `n ∈ {4, p, 2p}` with `p` an odd prime.
pub fn is_hamiltonian_cyclic(n: u64) -> bool {
    let odd_prime = |m: u64| m % 2 == 1 && is_prime(m);
    n == 4 || odd_prime(n) || (n.is_multiple_of(2) && odd_prime(n / 2))
}

/// `Θ(D_n)` is Hamiltonian for every `n >= 3`.
pub fn is_hamiltonian_dihedral(n: u64) -> bool {
    n >= 3
}

/// `Θ(Q_n)` is Hamiltonian iff `n` is odd.
pub fn is_hamiltonian_dicyclic(n: u64) -> bool {
    n >= 2 && n % 2 == 1
}

pub fn is_hamiltonian(group: &GroupSpec) -> bool {
    let n = group.parameter();
    match group.family() {
        Family::Cyclic => is_hamiltonian_cyclic(n),
        Family::Dihedral => is_hamiltonian_dihedral(n),
        Family::Dicyclic => is_hamiltonian_dicyclic(n),
    }
}

/// Shape of the parameter `n` that selects a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    /// `p`
    Prime,
    /// `pq`
    TwoPrimes,
    /// `p^m`, `m >= 2`
    PrimePower,
    /// `p q^m`, `m >= 2`
    PrimeTimesPrimePower,
    /// `p^l q^m`, `l, m >= 2`
    TwoPrimePowers,
    /// `pqr`
    ThreePrimes,
    /// `2p`, `p` odd
    TwicePrime,
    /// `2^m`
    PowerOfTwo,
}

impl Pattern {
    pub fn notation(self) -> &'static str {
        match self {
            Pattern::Prime => "p",
            Pattern::TwoPrimes => "pq",
            Pattern::PrimePower => "p^m",
            Pattern::PrimeTimesPrimePower => "pq^m",
            Pattern::TwoPrimePowers => "p^lq^m",
            Pattern::ThreePrimes => "pqr",
            Pattern::TwicePrime => "2p",
            Pattern::PowerOfTwo => "2^m",
        }
    }

    /// Identifier-safe form, used in claim names such as `decomp-Q-pq`.
    pub fn slug(self) -> &'static str {
        match self {
            Pattern::Prime => "p",
            Pattern::TwoPrimes => "pq",
            Pattern::PrimePower => "pm",
            Pattern::PrimeTimesPrimePower => "pqm",
            Pattern::TwoPrimePowers => "plqm",
            Pattern::ThreePrimes => "pqr",
            Pattern::TwicePrime => "2p",
            Pattern::PowerOfTwo => "2m",
        }
    }

    /// Patterns covered for a family, in matching order.
    pub fn for_family(family: Family) -> &'static [Pattern] {
        match family {
            Family::Cyclic | Family::Dihedral => &[
                Pattern::Prime,
                Pattern::TwoPrimes,
                Pattern::PrimePower,
                Pattern::PrimeTimesPrimePower,
                Pattern::TwoPrimePowers,
                Pattern::ThreePrimes,
            ],
            Family::Dicyclic => &[
                Pattern::PowerOfTwo,
                Pattern::Prime,
                Pattern::TwicePrime,
                Pattern::TwoPrimes,
                Pattern::PrimePower,
            ],
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.notation())
    }
}

// Pattern graphs as 1-based edge lists.
const P2: &[(usize, usize)] = &[(1, 2)];
const C3: &[(usize, usize)] = &[(1, 2), (1, 3), (2, 3)];
const PQM: &[(usize, usize)] = &[(1, 2), (1, 3), (2, 3), (1, 4)];
const PLQM: &[(usize, usize)] = &[
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (1, 7),
    (2, 3),
    (2, 4),
    (2, 6),
    (3, 4),
    (3, 5),
];
const PQR: &[(usize, usize)] = &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4)];
const DIC_2P: &[(usize, usize)] = &[(1, 2), (1, 3), (1, 4), (2, 4)];
const DIC_PQ: &[(usize, usize)] = &[
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 4),
    (2, 6),
    (3, 4),
    (3, 6),
    (4, 6),
    (5, 6),
];
const DIC_PM: &[(usize, usize)] = &[
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 5),
    (3, 5),
    (4, 5),
];

/// One proved decomposition `Θ(G) ≅ H[K_s, E_t, …]`.
///
/// Part 1 is always the clique on `S(G)`; every later part is the set of
/// elements whose order lies in the matching entry of [`Self::part_orders`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionEntry {
    group: GroupSpec,
    pattern: Pattern,
    primes: Vec<u64>,
    exponents: Vec<u32>,
    spec: HJoinSpec,
    k: usize,
    l: usize,
    part_orders: Vec<Vec<u64>>,
}

impl DecompositionEntry {
    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn family(&self) -> Family {
        self.group.family()
    }

    pub fn pattern(&self) -> Pattern {
        self.pattern
    }

    /// Matched primes in role order (`p`, `q`, `r`).
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Exponents matching [`Self::primes`].
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn spec(&self) -> &HJoinSpec {
        &self.spec
    }

    /// Claimed `(k, ℓ)`: `k` independent sets and `ℓ` cliques.
    pub fn kl(&self) -> (usize, usize) {
        (self.k, self.l)
    }

    /// Element orders making up parts 2, 3, … of the decomposition.
    pub fn part_orders(&self) -> &[Vec<u64>] {
        &self.part_orders
    }

    /// Claim identifier such as `decomp-Z-pqm`.
    pub fn claim_id(&self) -> String {
        format!("decomp-{}-{}", self.family().symbol(), self.pattern.slug())
    }

    /// Groups the elements of `G` by order class, in canonical vertex order.
    pub fn order_class_partition(&self) -> Result<VertexPartition> {
        let mut parts = vec![Vec::new(); self.part_orders.len() + 1];
        for (v, d) in self.group.element_orders().into_iter().enumerate() {
            let slot = if is_unit_or_prime(d) {
                0
            } else {
                1 + self
                    .part_orders
                    .iter()
                    .position(|orders| orders.contains(&d))
                    .ok_or_else(|| {
                        Error::ShapeMismatch(format!(
                            "no part of {} holds elements of order {d}",
                            self.group
                        ))
                    })?
            };
            parts[slot].push(v);
        }
        VertexPartition::new(self.group.order() as usize, parts)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Catalog {
    Covered(Box<DecompositionEntry>),
    NotCovered,
}

impl Catalog {
    pub fn entry(&self) -> Option<&DecompositionEntry> {
        match self {
            Catalog::Covered(e) => Some(e),
            Catalog::NotCovered => None,
        }
    }
}

fn powers(p: u64, from: u32, to: u32) -> Vec<u64> {
    (from..=to).map(|j| p.pow(j)).collect()
}

/// Looks up the decomposition of `Θ(G)` for `G` given by `family` and `n`.
pub fn decomposition_catalog(family: Family, n: u64) -> Result<Catalog> {
    let group = GroupSpec::new(family, n)?;
    let f = factorize(n);
    let matched = match family {
        Family::Cyclic | Family::Dihedral => match_cyclic_shape(&f),
        Family::Dicyclic => match_dicyclic_shape(&f),
    };
    let Some((pattern, primes, exponents)) = matched else {
        return Ok(Catalog::NotCovered);
    };
    let (edges, parts, part_orders, k): Layout = match family {
        Family::Cyclic | Family::Dihedral => {
            // the dihedral clique also absorbs the n reflections
            let extra = if family == Family::Dihedral { n } else { 0 };
            cyclic_layout(pattern, &primes, &exponents, extra)
        }
        Family::Dicyclic => dicyclic_layout(pattern, &primes, &exponents, n),
    };
    let parts: Vec<Part> = parts
        .into_iter()
        .enumerate()
        .map(|(i, size)| {
            let size = size as usize;
            if i == 0 {
                Part::complete(size)
            } else {
                Part::empty(size)
            }
        })
        .collect();
    let spec = HJoinSpec::from_pattern_edges(edges, parts)?;
    Ok(Catalog::Covered(Box::new(DecompositionEntry {
        group,
        pattern,
        primes,
        exponents,
        spec,
        k,
        l: 1,
        part_orders,
    })))
}

type Shape = (Pattern, Vec<u64>, Vec<u32>);

fn match_cyclic_shape(f: &Factorization) -> Option<Shape> {
    let ps = f.primes();
    let es = f.exponents();
    match (ps, es) {
        ([p], [1]) => Some((Pattern::Prime, vec![*p], vec![1])),
        ([p, q], [1, 1]) => Some((Pattern::TwoPrimes, vec![*p, *q], vec![1, 1])),
        ([p], [m]) => Some((Pattern::PrimePower, vec![*p], vec![*m])),
        // the prime with exponent 1 plays p
        ([p, q], [1, m]) => Some((Pattern::PrimeTimesPrimePower, vec![*p, *q], vec![1, *m])),
        ([q, p], [m, 1]) => Some((Pattern::PrimeTimesPrimePower, vec![*p, *q], vec![1, *m])),
        ([p, q], [l, m]) => Some((Pattern::TwoPrimePowers, vec![*p, *q], vec![*l, *m])),
        ([p, q, r], [1, 1, 1]) => Some((Pattern::ThreePrimes, vec![*p, *q, *r], vec![1, 1, 1])),
        _ => None,
    }
}

fn match_dicyclic_shape(f: &Factorization) -> Option<Shape> {
    match (f.primes(), f.exponents()) {
        ([2], [m]) => Some((Pattern::PowerOfTwo, vec![2], vec![*m])),
        ([p], [1]) => Some((Pattern::Prime, vec![*p], vec![1])),
        ([2, p], [1, 1]) => Some((Pattern::TwicePrime, vec![*p], vec![1])),
        ([2, ..], _) => None,
        ([p, q], [1, 1]) => Some((Pattern::TwoPrimes, vec![*p, *q], vec![1, 1])),
        ([p], [m]) => Some((Pattern::PrimePower, vec![*p], vec![*m])),
        _ => None,
    }
}

type Layout = (&'static [(usize, usize)], Vec<u64>, Vec<Vec<u64>>, usize);

fn cyclic_layout(pattern: Pattern, primes: &[u64], exponents: &[u32], extra: u64) -> Layout {
    match (pattern, primes, exponents) {
        (Pattern::Prime, &[p], _) => (&[], vec![extra + p], vec![], 0),
        (Pattern::TwoPrimes, &[p, q], _) => (
            P2,
            vec![extra + p + q - 1, (p - 1) * (q - 1)],
            vec![vec![p * q]],
            1,
        ),
        (Pattern::PrimePower, &[p], &[m]) => {
            let pm = p.pow(m);
            (P2, vec![extra + p, pm - p], vec![powers(p, 2, m)], 1)
        }
        (Pattern::PrimeTimesPrimePower, &[p, q], &[_, m]) => {
            let qm = q.pow(m);
            let q_pow = powers(q, 2, m);
            (
                PQM,
                vec![
                    extra + p + q - 1,
                    qm - q,
                    (p - 1) * (q - 1),
                    (p - 1) * (qm - q),
                ],
                vec![
                    q_pow.clone(),
                    vec![p * q],
                    q_pow.iter().map(|d| p * d).collect(),
                ],
                3,
            )
        }
        (Pattern::TwoPrimePowers, &[p, q], &[l, m]) => {
            let (pl, qm) = (p.pow(l), q.pow(m));
            let p_pow = powers(p, 2, l);
            let q_pow = powers(q, 2, m);
            let mixed = p_pow
                .iter()
                .flat_map(|a| q_pow.iter().map(move |b| a * b))
                .collect();
            (
                PLQM,
                vec![
                    extra + p + q - 1,
                    pl - p,
                    qm - q,
                    (p - 1) * (q - 1),
                    (pl - p) * (q - 1),
                    (qm - q) * (p - 1),
                    (pl - p) * (qm - q),
                ],
                vec![
                    p_pow.clone(),
                    q_pow.clone(),
                    vec![p * q],
                    p_pow.iter().map(|d| d * q).collect(),
                    q_pow.iter().map(|d| d * p).collect(),
                    mixed,
                ],
                6,
            )
        }
        (Pattern::ThreePrimes, &[p, q, r], _) => (
            PQR,
            vec![
                extra + p + q + r - 2,
                (p - 1) * (q - 1),
                (q - 1) * (r - 1),
                (p - 1) * (r - 1),
                (p - 1) * (q - 1) * (r - 1),
            ],
            vec![vec![p * q], vec![q * r], vec![p * r], vec![p * q * r]],
            4,
        ),
        _ => unreachable!("shape matcher only yields cyclic patterns here"),
    }
}

fn dicyclic_layout(pattern: Pattern, primes: &[u64], exponents: &[u32], n: u64) -> Layout {
    match (pattern, primes, exponents) {
        (Pattern::PowerOfTwo, _, &[m]) => (P2, vec![2, 4 * n - 2], vec![powers(2, 2, m + 1)], 1),
        (Pattern::Prime, &[p], _) => (C3, vec![p + 1, p - 1, 2 * p], vec![vec![2 * p], vec![4]], 2),
        (Pattern::TwicePrime, &[p], _) => (
            DIC_2P,
            vec![p + 1, p - 1, 2 * p - 2, 4 * p + 2],
            vec![vec![2 * p], vec![4 * p], vec![4]],
            3,
        ),
        (Pattern::TwoPrimes, &[p, q], _) => (
            DIC_PQ,
            vec![
                p + q,
                p - 1,
                q - 1,
                (p - 1) * (q - 1),
                (p - 1) * (q - 1),
                2 * p * q,
            ],
            vec![
                vec![2 * p],
                vec![2 * q],
                vec![p * q],
                vec![2 * p * q],
                vec![4],
            ],
            5,
        ),
        (Pattern::PrimePower, &[p], &[m]) => {
            let pm = p.pow(m);
            let p_pow = powers(p, 2, m);
            (
                DIC_PM,
                vec![p + 1, p - 1, pm - p, pm - p, 2 * pm],
                vec![
                    vec![2 * p],
                    p_pow.clone(),
                    p_pow.iter().map(|d| 2 * d).collect(),
                    vec![4],
                ],
                4,
            )
        }
        _ => unreachable!("shape matcher only yields dicyclic patterns here"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{verify_hjoin_structure, StructureVerdict};
    use crate::theta::build_theta;

    fn scan_degree(group: &GroupSpec, x: GroupElement) -> u64 {
        let g = build_theta(group).unwrap();
        g.degree(group.index_of(x).unwrap()).unwrap() as u64
    }

    #[test]
    fn clique_examples() {
        for p in [2u64, 3, 5, 7, 31] {
            assert_eq!(clique_cyclic(p), Ok(p));
        }
        assert_eq!(clique_cyclic(12), Ok(6));
        assert_eq!(clique_cyclic(30), Ok(11));
        assert!(clique_cyclic(1).is_err());
        assert_eq!(clique_dihedral(5), Ok(10));
        assert_eq!(clique_dihedral(6), Ok(11));
        assert_eq!(clique_dihedral(12), Ok(18));
        assert!(clique_dihedral(2).is_err());
        assert_eq!(clique_dicyclic(3), Ok(6));
        assert_eq!(clique_dicyclic(2), Ok(3));
        assert_eq!(clique_dicyclic(4), clique_cyclic(8));
        assert_eq!(clique_dicyclic(4), Ok(3));
        assert!(clique_dicyclic(1).is_err());
    }

    #[test]
    fn exponent_profile() {
        let prof = ExponentProfile::new(72, 12).unwrap();
        assert_eq!(prof.beta(), &[2, 1]);
        assert_eq!(prof.gamma(), &[1, 2]);
        assert!(ExponentProfile::new(12, 5).is_err());
        // both primes divide the order: only three admissible choices
        assert_eq!(prof.admissible_choices().count(), 3);
        let prof = ExponentProfile::new(12, 4).unwrap();
        assert_eq!(prof.admissible_choices().count(), 4);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree_cyclic(12, GroupElement::Residue(1)), Ok(4));
        assert_eq!(degree_cyclic(4, GroupElement::Residue(1)), Ok(2));
        // residue 6 of Z_36 has order 6
        assert_eq!(degree_cyclic(36, GroupElement::Residue(6)), Ok(12));
        assert!(degree_cyclic(12, GroupElement::Residue(4)).is_err());
        assert!(degree_cyclic(12, GroupElement::Residue(0)).is_err());

        assert_eq!(degree_dihedral(12, GroupElement::Rotation(1)), Ok(16));
        assert_eq!(degree_dihedral(12, GroupElement::Reflection(1)), Ok(23));
        // a^1 in Q_6 has order 12
        assert_eq!(degree_dicyclic(6, GroupElement::APower(1)), Ok(4));
        // a^1 in Q_3 has order 6
        assert_eq!(degree_dicyclic(3, GroupElement::APower(1)), Ok(10));
        assert_eq!(degree_dicyclic(3, GroupElement::APowerB(2)), Ok(6));
        assert_eq!(degree_dicyclic(2, GroupElement::APowerB(0)), Ok(2));

        let cases = [
            (GroupSpec::cyclic(12).unwrap(), GroupElement::Residue(1)),
            (GroupSpec::cyclic(36).unwrap(), GroupElement::Residue(6)),
            (GroupSpec::dihedral(12).unwrap(), GroupElement::Rotation(1)),
            (GroupSpec::dicyclic(6).unwrap(), GroupElement::APower(1)),
            (GroupSpec::dicyclic(3).unwrap(), GroupElement::APower(1)),
            (GroupSpec::dicyclic(4).unwrap(), GroupElement::APowerB(5)),
            (GroupSpec::dicyclic(5).unwrap(), GroupElement::APowerB(5)),
        ];
        for (group, x) in cases {
            assert_eq!(
                vertex_degree(&group, x).unwrap(),
                scan_degree(&group, x),
                "{group} {x}"
            );
        }
    }

    #[test]
    fn hamiltonian_characterizations() {
        for (n, want) in [
            (1, false),
            (2, false),
            (3, true),
            (4, true),
            (6, true),
            (8, false),
            (9, false),
            (10, true),
            (12, false),
            (14, true),
            (15, false),
        ] {
            assert_eq!(is_hamiltonian_cyclic(n), want, "n = {n}");
        }
        assert!((3..50).all(is_hamiltonian_dihedral));
        assert!(is_hamiltonian_dicyclic(3));
        assert!(!is_hamiltonian_dicyclic(2));
        assert!(!is_hamiltonian_dicyclic(6));
    }

    fn entry(family: Family, n: u64) -> DecompositionEntry {
        match decomposition_catalog(family, n).unwrap() {
            Catalog::Covered(e) => *e,
            Catalog::NotCovered => panic!("{family} {n} should be covered"),
        }
    }

    fn sizes(e: &DecompositionEntry) -> Vec<usize> {
        e.spec().parts().iter().map(|p| p.size).collect()
    }

    #[test]
    fn catalog_examples() {
        let z12 = entry(Family::Cyclic, 12);
        assert_eq!(z12.pattern(), Pattern::PrimeTimesPrimePower);
        assert_eq!(z12.primes(), &[3, 2]);
        assert_eq!(z12.exponents(), &[1, 2]);
        assert_eq!(sizes(&z12), vec![4, 2, 2, 4]);
        assert_eq!(z12.kl(), (3, 1));
        assert_eq!(z12.claim_id(), "decomp-Z-pqm");

        let q4 = entry(Family::Dicyclic, 4);
        assert_eq!(q4.pattern(), Pattern::PowerOfTwo);
        assert_eq!(sizes(&q4), vec![2, 14]);
        assert_eq!(q4.kl(), (1, 1));

        let z7 = entry(Family::Cyclic, 7);
        assert_eq!(sizes(&z7), vec![7]);
        assert_eq!(z7.kl(), (0, 1));

        let z30 = entry(Family::Cyclic, 30);
        assert_eq!(z30.pattern(), Pattern::ThreePrimes);
        assert_eq!(sizes(&z30), vec![8, 2, 8, 4, 8]);

        assert_eq!(sizes(&entry(Family::Dicyclic, 6)), vec![4, 2, 4, 14]);
        assert_eq!(sizes(&entry(Family::Dicyclic, 3)), vec![4, 2, 6]);
        assert_eq!(sizes(&entry(Family::Dihedral, 5)), vec![10]);
        assert_eq!(sizes(&entry(Family::Dihedral, 9)), vec![12, 6]);
    }

    #[test]
    fn catalog_gaps() {
        for (family, n) in [
            (Family::Cyclic, 1),
            (Family::Cyclic, 60),
            (Family::Cyclic, 210),
            (Family::Dihedral, 60),
            (Family::Dicyclic, 12),
            (Family::Dicyclic, 30),
            (Family::Dicyclic, 45),
        ] {
            assert_eq!(
                decomposition_catalog(family, n),
                Ok(Catalog::NotCovered),
                "{family} {n}"
            );
        }
        assert!(decomposition_catalog(Family::Dihedral, 2).is_err());
    }

    #[test]
    fn catalog_structure_small() {
        for family in Family::ALL {
            for n in family.min_parameter()..=40 {
                let Catalog::Covered(e) = decomposition_catalog(family, n).unwrap() else {
                    continue;
                };
                let group = e.group();
                assert_eq!(e.spec().total_size() as u64, group.order());
                let g = build_theta(group).unwrap();
                let partition = e.order_class_partition().unwrap();
                assert_eq!(
                    verify_hjoin_structure(&g, &partition, e.spec()).unwrap(),
                    StructureVerdict::Holds,
                    "{group}"
                );
            }
        }
    }
}
