//! Cyclic, dihedral and dicyclic groups modelled as labelled element sets.
//!
//! Only element orders are needed to build a prime coprime graph, so each
//! element is a label whose order comes from a closed formula. No
//! multiplication table is ever built.
//!
//! | family   | order | elements                                   |
//! |----------|-------|--------------------------------------------|
//! | cyclic   | n     | residues `g0 .. g(n-1)`                    |
//! | dihedral | 2n    | rotations `r0 ..`, then reflections `s0 ..`|
//! | dicyclic | 4n    | powers `a0 .. a(2n-1)`, then `a0b .. `     |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{gcd, is_prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cyclic,
    Dihedral,
    Dicyclic,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Cyclic, Family::Dihedral, Family::Dicyclic];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::Dicyclic => "dicyclic",
        }
    }

    /// Smallest admissible parameter.
    pub fn min_parameter(self) -> u64 {
        match self {
            Family::Cyclic => 1,
            Family::Dihedral => 3,
            Family::Dicyclic => 2,
        }
    }

    /// Group order as a multiple of the parameter.
    pub fn order_multiplier(self) -> u64 {
        match self {
            Family::Cyclic => 1,
            Family::Dihedral => 2,
            Family::Dicyclic => 4,
        }
    }

    /// One-letter symbol used in claim identifiers (`Z`, `D`, `Q`).
    pub fn symbol(self) -> char {
        match self {
            Family::Cyclic => 'Z',
            Family::Dihedral => 'D',
            Family::Dicyclic => 'Q',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cyclic" | "z" => Ok(Family::Cyclic),
            "dihedral" | "d" => Ok(Family::Dihedral),
            "dicyclic" | "q" => Ok(Family::Dicyclic),
            _ => Err(Error::InvalidArgument(format!(
                "unknown group family {s:?}"
            ))),
        }
    }
}

/// A member of one of the three families, identified by its parameter `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    family: Family,
    n: u64,
}

impl GroupSpec {
    pub fn new(family: Family, n: u64) -> Result<Self> {
        if n < family.min_parameter() {
            return Err(Error::InvalidGroup {
                family: family.name(),
                min: family.min_parameter(),
                n,
            });
        }
        n.checked_mul(family.order_multiplier())
            .ok_or(Error::Overflow("group order"))?;
        Ok(Self { family, n })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(Family::Cyclic, n)
    }

    pub fn dihedral(n: u64) -> Result<Self> {
        Self::new(Family::Dihedral, n)
    }

    pub fn dicyclic(n: u64) -> Result<Self> {
        Self::new(Family::Dicyclic, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn parameter(&self) -> u64 {
        self.n
    }

    /// `|G|`: n, 2n or 4n.
    pub fn order(&self) -> u64 {
        self.n * self.family.order_multiplier()
    }

    /// Order of the cyclic subgroup `<a>` (the whole group when cyclic).
    pub fn rotation_order(&self) -> u64 {
        match self.family {
            Family::Cyclic | Family::Dihedral => self.n,
            Family::Dicyclic => 2 * self.n,
        }
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        let m = self.rotation_order();
        match (self.family, g) {
            (Family::Cyclic, GroupElement::Residue(i)) => i < m,
            (Family::Dihedral, GroupElement::Rotation(i) | GroupElement::Reflection(i)) => i < m,
            (Family::Dicyclic, GroupElement::APower(i) | GroupElement::APowerB(i)) => i < m,
            _ => false,
        }
    }

    fn check(&self, g: GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: g.to_string(),
                group: self.to_string(),
            })
        }
    }

    /// Every element once, in canonical order.
    pub fn elements(&self) -> Vec<GroupElement> {
        let m = self.rotation_order();
        match self.family {
            Family::Cyclic => (0..m).map(GroupElement::Residue).collect(),
            Family::Dihedral => (0..m)
                .map(GroupElement::Rotation)
                .chain((0..m).map(GroupElement::Reflection))
                .collect(),
            Family::Dicyclic => (0..m)
                .map(GroupElement::APower)
                .chain((0..m).map(GroupElement::APowerB))
                .collect(),
        }
    }

    /// Position of `g` in [`GroupSpec::elements`].
    pub fn index_of(&self, g: GroupElement) -> Option<usize> {
        if !self.contains(g) {
            return None;
        }
        let m = self.rotation_order() as usize;
        Some(match g {
            GroupElement::Residue(i) | GroupElement::Rotation(i) | GroupElement::APower(i) => {
                i as usize
            }
            GroupElement::Reflection(i) | GroupElement::APowerB(i) => m + i as usize,
        })
    }

    pub fn element_order(&self, g: GroupElement) -> Result<u64> {
        self.check(g)?;
        let m = self.rotation_order();
        Ok(match g {
            GroupElement::Residue(i) | GroupElement::Rotation(i) | GroupElement::APower(i) => {
                m / gcd(m, i)
            }
            GroupElement::Reflection(_) => 2,
            GroupElement::APowerB(_) => 4,
        })
    }

    /// Orders of all elements, indexed like [`GroupSpec::elements`].
    pub fn element_orders(&self) -> Vec<u64> {
        self.elements()
            .into_iter()
            .map(|g| self.element_order(g).expect("canonical element"))
            .collect()
    }

    /// Whether `g` lies in the cyclic subgroup `<a>`.
    pub fn in_rotation_subgroup(&self, g: GroupElement) -> bool {
        self.contains(g)
            && matches!(
                g,
                GroupElement::Residue(_) | GroupElement::Rotation(_) | GroupElement::APower(_)
            )
    }

    /// The residue of `Z_m` (`m = |<a>|`) matching an element of `<a>`.
    pub fn rotation_residue(&self, g: GroupElement) -> Option<u64> {
        if !self.in_rotation_subgroup(g) {
            return None;
        }
        match g {
            GroupElement::Residue(i) | GroupElement::Rotation(i) | GroupElement::APower(i) => {
                Some(i)
            }
            _ => None,
        }
    }

    pub fn order_class_counts(&self) -> BTreeMap<u64, u64> {
        let mut counts = BTreeMap::new();
        for d in self.element_orders() {
            *counts.entry(d).or_insert(0) += 1;
        }
        counts
    }

    /// Elements whose order is 1 or a prime.
    pub fn s_set(&self) -> Vec<GroupElement> {
        self.elements()
            .into_iter()
            .filter(|&g| is_unit_or_prime(self.element_order(g).expect("canonical element")))
            .collect()
    }

    /// Complement of [`GroupSpec::s_set`].
    pub fn t_set(&self) -> Vec<GroupElement> {
        self.elements()
            .into_iter()
            .filter(|&g| !is_unit_or_prime(self.element_order(g).expect("canonical element")))
            .collect()
    }

    /// Canonical indices of the elements of `S(G)`.
    pub fn s_indices(&self) -> Vec<usize> {
        self.element_orders()
            .into_iter()
            .enumerate()
            .filter(|&(_, d)| is_unit_or_prime(d))
            .map(|(i, _)| i)
            .collect()
    }

    /// Every nonidentity element has prime order.
    pub fn is_epo(&self) -> bool {
        self.element_orders().into_iter().all(is_unit_or_prime)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.symbol(), self.n)
    }
}

pub fn is_unit_or_prime(d: u64) -> bool {
    d == 1 || is_prime(d)
}

/// Element label. Which variants are meaningful depends on the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    /// `i` in `Z_n`.
    Residue(u64),
    /// `a^i` in `D_n`.
    Rotation(u64),
    /// `a^i b` in `D_n`.
    Reflection(u64),
    /// `a^i` in `Q_n`.
    APower(u64),
    /// `a^i b` in `Q_n`.
    APowerB(u64),
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupElement::Residue(i) => write!(f, "g{i}"),
            GroupElement::Rotation(i) => write!(f, "r{i}"),
            GroupElement::Reflection(i) => write!(f, "s{i}"),
            GroupElement::APower(i) => write!(f, "a{i}"),
            GroupElement::APowerB(i) => write!(f, "a{i}b"),
        }
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("malformed element label {s:?}"));
        let parse = |digits: &str| -> Result<u64> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            digits.parse().map_err(|_| bad())
        };
        let (head, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        match head {
            "g" => parse(rest).map(GroupElement::Residue),
            "r" => parse(rest).map(GroupElement::Rotation),
            "s" => parse(rest).map(GroupElement::Reflection),
            "a" => match rest.strip_suffix('b') {
                Some(digits) => parse(digits).map(GroupElement::APowerB),
                None => parse(rest).map(GroupElement::APower),
            },
            _ => Err(bad()),
        }
    }
}
