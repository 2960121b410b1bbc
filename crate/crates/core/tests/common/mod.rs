//! Independent reference model: element orders from explicit multiplication
//! and adjacency from the gcd rule, sharing no code with the library.

#![allow(dead_code)]

use pcg_core::Family;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn prime(d: u64) -> bool {
    d >= 2
        && (2..d)
            .take_while(|k| k * k <= d)
            .all(|k| !d.is_multiple_of(k))
}

/// Element `a^i b^j` as `(i, j)`.
type Word = (u64, u64);

struct Table {
    family: Family,
    n: u64,
}

impl Table {
    fn modulus(&self) -> u64 {
        match self.family {
            Family::Dicyclic => 2 * self.n,
            _ => self.n,
        }
    }

    fn words(&self) -> Vec<Word> {
        let m = self.modulus();
        let top = if self.family == Family::Cyclic { 1 } else { 2 };
        (0..top).flat_map(|j| (0..m).map(move |i| (i, j))).collect()
    }

    /// `b a^k = a^{-k} b`, with `b^2 = 1` (dihedral) or `b^2 = a^n` (dicyclic).
    fn mul(&self, (i, j): Word, (k, l): Word) -> Word {
        let m = self.modulus();
        if j == 0 {
            return ((i + k) % m, l);
        }
        let base = (i + m - k) % m;
        if l == 0 {
            (base, 1)
        } else if self.family == Family::Dicyclic {
            ((base + self.n) % m, 0)
        } else {
            (base, 0)
        }
    }

    fn order(&self, x: Word) -> u64 {
        let mut y = x;
        let mut k = 1;
        while y != (0, 0) {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }
}

/// Element orders in the canonical vertex order.
pub fn reference_orders(family: Family, n: u64) -> Vec<u64> {
    let t = Table { family, n };
    t.words().into_iter().map(|w| t.order(w)).collect()
}

pub fn adjacent(a: u64, b: u64) -> bool {
    let g = gcd(a, b);
    g == 1 || prime(g)
}

pub fn unit_or_prime(d: u64) -> bool {
    d == 1 || prime(d)
}

/// Sorted edge list `u < v` of the reference graph.
pub fn reference_edges(family: Family, n: u64) -> Vec<(usize, usize)> {
    let orders = reference_orders(family, n);
    let mut edges = Vec::new();
    for u in 0..orders.len() {
        for v in u + 1..orders.len() {
            if adjacent(orders[u], orders[v]) {
                edges.push((u, v));
            }
        }
    }
    edges
}

pub fn reference_degrees(family: Family, n: u64) -> Vec<u64> {
    let orders = reference_orders(family, n);
    (0..orders.len())
        .map(|u| {
            (0..orders.len())
                .filter(|&v| v != u && adjacent(orders[u], orders[v]))
                .count() as u64
        })
        .collect()
}

pub fn is_prime(n: u64) -> bool {
    prime(n)
}
