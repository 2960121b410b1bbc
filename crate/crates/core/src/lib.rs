//! Prime coprime graphs `Θ(G)` of cyclic, dihedral and dicyclic groups.
//!
//! The crate is split into:
//!
//! * [`numtheory`]: gcd, primality, factorization, totient, divisors;
//! * [`groups`]: the three group families with element orders;
//! * [`graph`]: simple graphs, joins, H-joins and a structural verifier;
//! * [`theta`]: construction of `Θ(G)` plus DOT / JSON export;
//! * [`closedforms`]: clique numbers, degrees, Hamiltonicity and the
//!   H-join decomposition catalog;
//! * [`oracles`]: exhaustive and certificate-based checks used to verify
//!   the closed forms.

pub mod closedforms;
pub mod error;
pub mod graph;
pub mod groups;
pub mod numtheory;
pub mod oracles;
pub mod theta;

pub use error::{Error, Result};
pub use graph::{HJoinSpec, Part, PartKind, SimpleGraph, VertexPartition};
pub use groups::{Family, GroupElement, GroupSpec};
pub use numtheory::Factorization;
pub use theta::{build_theta, build_theta_with_cap, DEFAULT_VERTEX_CAP};
