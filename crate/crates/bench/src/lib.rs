//! Shared inputs for the criterion benches.

use pcg_core::{Family, GroupSpec};

/// Representative groups: a dense EPO case, split graphs, and many-part
/// decompositions.
pub fn sample_groups() -> Vec<GroupSpec> {
    [
        (Family::Cyclic, 60),
        (Family::Cyclic, 100),
        (Family::Dihedral, 50),
        (Family::Dicyclic, 25),
        (Family::Dicyclic, 50),
    ]
    .into_iter()
    .map(|(family, n)| GroupSpec::new(family, n).expect("valid sample group"))
    .collect()
}
