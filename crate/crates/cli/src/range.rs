use std::fmt;
use std::str::FromStr;

use pcg_core::{Error, Family, Result};

const BY_GROUP_ORDER: &str = "-by-group-order";

/// Inclusive sweep range `A..B`, optionally over group order instead of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamRange {
    pub lo: u64,
    pub hi: u64,
    pub by_group_order: bool,
}

impl ParamRange {
    pub fn new(lo: u64, hi: u64) -> Self {
        Self {
            lo,
            hi,
            by_group_order: false,
        }
    }

    /// Parameters `n` of `family` selected by the range, ascending.
    ///
    /// Values below the family's minimum are skipped.
    pub fn parameters(&self, family: Family) -> Vec<u64> {
        let min = family.min_parameter();
        if self.by_group_order {
            let m = family.order_multiplier();
            let lo = self.lo.div_ceil(m).max(min);
            let hi = self.hi / m;
            (lo..=hi).collect()
        } else {
            (self.lo.max(min)..=self.hi).collect()
        }
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("malformed range {s:?}, expected A..B"));
        let (body, by_group_order) = match s.strip_suffix(BY_GROUP_ORDER) {
            Some(body) => (body, true),
            None => (s, false),
        };
        let (lo, hi) = body.split_once("..").ok_or_else(bad)?;
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
        if lo == 0 || lo > hi {
            return Err(Error::InvalidArgument(format!(
                "range {s:?} must satisfy 1 <= A <= B"
            )));
        }
        Ok(Self {
            lo,
            hi,
            by_group_order,
        })
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)?;
        if self.by_group_order {
            f.write_str(BY_GROUP_ORDER)?;
        }
        Ok(())
    }
}
