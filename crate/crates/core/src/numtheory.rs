//! Integer arithmetic on `u64`: gcd, primality, factorization, Euler's
//! totient and divisor enumeration.
//!
//! Everything here is a pure function. Products that could leave the `u64`
//! range use checked multiplication and surface [`Error::Overflow`].

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Deterministic trial division. `0` and `1` are not prime.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// `base^exp` with overflow reported as an error.
pub fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow("prime power"))
}

/// Canonical prime factorization `value = prod primes[i]^exponents[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    value: u64,
    primes: Vec<u64>,
    exponents: Vec<u32>,
}

impl Factorization {
    /// Builds a factorization from explicit parts, checking every invariant.
    pub fn from_parts(primes: Vec<u64>, exponents: Vec<u32>) -> Result<Self> {
        if primes.len() != exponents.len() {
            return Err(Error::InvalidArgument(format!(
                "{} primes but {} exponents",
                primes.len(),
                exponents.len()
            )));
        }
        if primes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "primes must be strictly increasing".into(),
            ));
        }
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if exponents.contains(&0) {
            return Err(Error::InvalidArgument("exponents must be >= 1".into()));
        }
        let mut value = 1u64;
        for (&p, &e) in primes.iter().zip(&exponents) {
            value = value
                .checked_mul(checked_pow(p, e)?)
                .ok_or(Error::Overflow("factorization value"))?;
        }
        Ok(Self {
            value,
            primes,
            exponents,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of distinct prime factors.
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.primes
            .iter()
            .copied()
            .zip(self.exponents.iter().copied())
    }

    /// Exponent of `p` in the factorization (0 if `p` does not divide).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.primes
            .binary_search(&p)
            .map(|i| self.exponents[i])
            .unwrap_or(0)
    }

    /// Number of positive divisors, `prod (e_i + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e) + 1).product()
    }
}

/// Factorizes `n` by trial division up to `sqrt(n)`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut primes = Vec::new();
    let mut exponents = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= rest) {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            primes.push(d);
            exponents.push(e);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        primes.push(rest);
        exponents.push(1);
    }
    Factorization {
        value: n,
        primes,
        exponents,
    }
}

/// Euler's totient via the product formula over the canonical factorization.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        // p^e - p^(e-1) never overflows since p^e <= n
        .map(|(p, e)| p.pow(e) - p.pow(e - 1))
        .product()
}

/// All positive divisors of `n`, ascending.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    divisors_of(&factorize(n))
}

/// Divisors generated by enumerating exponent vectors, then sorted.
pub fn divisors_of(f: &Factorization) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in f.iter() {
        let current = out.len();
        let mut power = 1u64;
        for _ in 0..e {
            power *= p;
            for i in 0..current {
                out.push(out[i] * power);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Evaluates `sum over a in {0,1}^k of prod (p_i^alpha_i - 1)^a_i`.
///
/// This equals `sum_{d | n} phi(d)`, which in turn equals `n`.
pub fn phi_sum_expansion(f: &Factorization) -> Result<u64> {
    if f.value() == 1 {
        return Err(Error::InvalidArgument(
            "phi-sum expansion requires n > 1".into(),
        ));
    }
    let terms = f
        .iter()
        .map(|(p, e)| checked_pow(p, e).map(|q| q - 1))
        .collect::<Result<Vec<_>>>()?;
    subset_product_sum(&terms)
}

/// Sums `prod_{i in A} terms[i]` over every subset `A` (empty product = 1).
pub(crate) fn subset_product_sum(terms: &[u64]) -> Result<u64> {
    let mut total = 0u64;
    for mask in 0u64..(1u64 << terms.len()) {
        let mut product = 1u64;
        for (i, &t) in terms.iter().enumerate() {
            if mask >> i & 1 == 1 {
                product = product
                    .checked_mul(t)
                    .ok_or(Error::Overflow("phi-sum term"))?;
            }
        }
        total = total
            .checked_add(product)
            .ok_or(Error::Overflow("phi-sum total"))?;
    }
    Ok(total)
}
