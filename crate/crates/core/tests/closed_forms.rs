mod common;

use common::{is_prime, reference_degrees};
use pcg_core::closedforms::{
    clique_cyclic, clique_dicyclic, clique_dihedral, clique_number, degree_cyclic, is_hamiltonian,
    is_hamiltonian_cyclic, vertex_degree,
};
use pcg_core::graph::{complete, empty_graph, join};
use pcg_core::oracles::{
    cut_witness_check, dirac_check, hamiltonian_search, max_clique, Certificate, HamiltonVerdict,
};
use pcg_core::{build_theta, Family, GroupElement, GroupSpec, SimpleGraph};
use proptest::prelude::*;

fn theta(family: Family, n: u64) -> SimpleGraph {
    build_theta(&GroupSpec::new(family, n).unwrap()).unwrap()
}

fn check_degrees(family: Family, n: u64) {
    let g = GroupSpec::new(family, n).unwrap();
    let expected = reference_degrees(family, n);
    for (v, x) in g.elements().into_iter().enumerate() {
        assert_eq!(vertex_degree(&g, x).unwrap(), expected[v], "{g} {x}");
    }
}

#[test]
fn degrees_match_reference_counts() {
    for n in 1..=150 {
        check_degrees(Family::Cyclic, n);
    }
    for n in 3..=80 {
        check_degrees(Family::Dihedral, n);
    }
    for n in 2..=60 {
        check_degrees(Family::Dicyclic, n);
    }
}

#[test]
fn degree_spot_values() {
    // generator of Z_12: adjacent to the orders 1, 2, 3 (four elements)
    assert_eq!(degree_cyclic(12, GroupElement::Residue(1)), Ok(4));
    // order-4 elements outside <a> in Q_3 see all of <a> only
    let q3 = GroupSpec::dicyclic(3).unwrap();
    assert_eq!(vertex_degree(&q3, GroupElement::APowerB(1)), Ok(6));
    // in Q_4 they behave like the order-4 powers of a
    let q4 = GroupSpec::dicyclic(4).unwrap();
    assert_eq!(
        vertex_degree(&q4, GroupElement::APowerB(5)),
        vertex_degree(&q4, GroupElement::APower(2))
    );
}

#[test]
fn clique_formulas_match_search() {
    for n in 2..=60 {
        assert_eq!(
            clique_cyclic(n).unwrap(),
            max_clique(&theta(Family::Cyclic, n)).unwrap().size as u64,
            "Z_{n}"
        );
    }
    for n in 3..=30 {
        assert_eq!(
            clique_dihedral(n).unwrap(),
            max_clique(&theta(Family::Dihedral, n)).unwrap().size as u64,
            "D_{n}"
        );
    }
    for n in 2..=30 {
        assert_eq!(
            clique_dicyclic(n).unwrap(),
            max_clique(&theta(Family::Dicyclic, n)).unwrap().size as u64,
            "Q_{n}"
        );
    }
}

#[test]
fn clique_spot_values() {
    assert_eq!(clique_cyclic(30), Ok(11));
    assert_eq!(clique_cyclic(12), Ok(6));
    assert_eq!(clique_dicyclic(3), Ok(6));
    assert_eq!(clique_number(&GroupSpec::dihedral(7).unwrap()), Ok(14));
}

/// Tries every cyclic ordering; only for tiny graphs.
fn brute_hamiltonian(g: &SimpleGraph) -> bool {
    fn go(g: &SimpleGraph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = g.vertex_count();
        if path.len() == n {
            return g.has_edge(path[n - 1], path[0]);
        }
        let last = *path.last().unwrap();
        for v in 1..n {
            if !used[v] && g.has_edge(last, v) {
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
    let mut used = vec![false; n];
    used[0] = true;
    n >= 3 && go(g, &mut vec![0], &mut used)
}

#[test]
fn hamiltonicity_on_tiny_graphs() {
    for n in 1..=11 {
        assert_eq!(
            brute_hamiltonian(&theta(Family::Cyclic, n)),
            is_hamiltonian_cyclic(n),
            "Z_{n}"
        );
    }
    for n in 3..=5 {
        assert!(brute_hamiltonian(&theta(Family::Dihedral, n)), "D_{n}");
    }
    assert!(!brute_hamiltonian(&theta(Family::Dicyclic, 2)));
    assert!(brute_hamiltonian(&theta(Family::Dicyclic, 3)));
}

#[test]
fn hamiltonian_search_agrees_with_characterization() {
    let cases = (3..=60)
        .map(|n| (Family::Cyclic, n))
        .chain((2..=30).map(|n| (Family::Dicyclic, n)));
    for (family, n) in cases {
        let group = GroupSpec::new(family, n).unwrap();
        let graph = build_theta(&group).unwrap();
        let evidence = hamiltonian_search(&graph, 10_000_000);
        assert!(evidence.validate(&graph), "{group}");
        let want = is_hamiltonian(&group);
        match (&evidence.verdict, &evidence.certificate) {
            (HamiltonVerdict::Hamiltonian, Some(Certificate::Cycle(_))) => assert!(want, "{group}"),
            (HamiltonVerdict::NonHamiltonian, Some(Certificate::Cut { .. })) => {
                assert!(!want, "{group}")
            }
            other => panic!("{group}: unexpected evidence {other:?}"),
        }
    }
}

#[test]
fn cut_witnesses_for_predicted_failures() {
    for n in 3..=200 {
        if is_hamiltonian_cyclic(n) {
            continue;
        }
        let g = GroupSpec::cyclic(n).unwrap();
        assert!(
            cut_witness_check(&build_theta(&g).unwrap(), &g.s_indices()).unwrap(),
            "Z_{n}"
        );
    }
    for n in (2..=100).step_by(2) {
        let g = GroupSpec::dicyclic(n).unwrap();
        assert!(
            cut_witness_check(&build_theta(&g).unwrap(), &g.s_indices()).unwrap(),
            "Q_{n}"
        );
    }
}

#[test]
fn cut_component_counts() {
    let z9 = GroupSpec::cyclic(9).unwrap();
    let rest = build_theta(&z9)
        .unwrap()
        .delete_vertices(&z9.s_indices())
        .unwrap();
    assert_eq!(rest.component_count(), 6);
    let q6 = GroupSpec::dicyclic(6).unwrap();
    let rest = build_theta(&q6)
        .unwrap()
        .delete_vertices(&q6.s_indices())
        .unwrap();
    assert_eq!(rest.component_count(), 5);
}

#[test]
fn dihedral_graphs_meet_dirac() {
    for n in 3..=200 {
        let graph = theta(Family::Dihedral, n);
        assert!(dirac_check(&graph).unwrap(), "D_{n}");
        assert!(graph.min_degree() as u64 > n, "D_{n}");
    }
}

#[test]
fn join_lemmas() {
    for n in 3..=100u64 {
        let joined = join(&theta(Family::Cyclic, n), &complete(n as usize));
        assert!(theta(Family::Dihedral, n).same_edges(&joined), "D_{n}");
    }
    for n in (3..=99u64).step_by(2) {
        let joined = join(&theta(Family::Cyclic, 2 * n), &empty_graph(2 * n as usize));
        assert!(theta(Family::Dicyclic, n).same_edges(&joined), "Q_{n}");
    }
    // the dicyclic lemma needs n odd
    let joined = join(&theta(Family::Cyclic, 8), &empty_graph(8));
    assert!(!theta(Family::Dicyclic, 4).same_edges(&joined));
}

proptest! {
    #[test]
    fn cyclic_degree_formula(n in 2u64..2000, i in 0u64..2000) {
        let g = GroupSpec::cyclic(n).unwrap();
        let x = GroupElement::Residue(i % n);
        let order = g.element_order(x).unwrap();
        let orders = g.element_orders();
        let scan = orders
            .iter()
            .enumerate()
            .filter(|&(v, &d)| v as u64 != i % n && common::adjacent(order, d))
            .count() as u64;
        prop_assert_eq!(vertex_degree(&g, x).unwrap(), scan);
    }

    #[test]
    fn prime_cyclic_groups_are_complete(
        p in proptest::sample::select((2u64..400).filter(|&p| is_prime(p)).collect::<Vec<_>>())
    ) {
        prop_assert!(theta(Family::Cyclic, p).is_complete());
        prop_assert_eq!(clique_cyclic(p).unwrap(), p);
    }

    #[test]
    fn dihedral_clique_is_shifted_cyclic(n in 3u64..5000) {
        prop_assert_eq!(clique_dihedral(n).unwrap(), n + clique_cyclic(n).unwrap());
    }
}
