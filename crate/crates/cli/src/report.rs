use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Int(u64),
    Bool(bool),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Bool(v) => write!(f, "{v}"),
            Value::Text(v) => f.write_str(v),
        }
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

/// One line of the JSON-lines report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub claim: String,
    pub family: String,
    pub n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<String>,
    pub formula: Value,
    pub oracle: Value,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    pub ms: u64,
}

impl Record {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records are always serializable")
    }
}

pub fn write_jsonl<W: Write>(mut out: W, records: &[Record]) -> io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_json_line())?;
    }
    out.flush()
}

/// Per-claim verdict tallies.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub counts: BTreeMap<String, [usize; 3]>,
}

impl Summary {
    pub fn of(records: &[Record]) -> Self {
        let mut counts: BTreeMap<String, [usize; 3]> = BTreeMap::new();
        for r in records {
            let slot = match r.verdict {
                Verdict::Pass => 0,
                Verdict::Fail => 1,
                Verdict::Inconclusive => 2,
            };
            counts.entry(r.claim.clone()).or_default()[slot] += 1;
        }
        Self { counts }
    }

    pub fn failures(&self) -> usize {
        self.counts.values().map(|c| c[1]).sum()
    }

    pub fn inconclusive(&self) -> usize {
        self.counts.values().map(|c| c[2]).sum()
    }

    /// Exit code under the `pcg` contract: failure beats inconclusive.
    pub fn exit_code(&self) -> u8 {
        if self.failures() > 0 {
            crate::exit::FAIL
        } else if self.inconclusive() > 0 {
            crate::exit::INCONCLUSIVE
        } else {
            crate::exit::PASS
        }
    }
}

/// Text table of records, one row each.
pub fn write_table<W: Write>(mut out: W, records: &[Record]) -> io::Result<()> {
    writeln!(
        out,
        "{:<20} {:<9} {:>6} {:<10} {:>10} {:>14} verdict",
        "claim", "family", "n", "param", "formula", "oracle"
    )?;
    for r in records {
        let oracle = r.oracle.to_string();
        let oracle = if oracle.len() > 14 {
            format!("{}...", &oracle[..11])
        } else {
            oracle
        };
        writeln!(
            out,
            "{:<20} {:<9} {:>6} {:<10} {:>10} {:>14} {}",
            r.claim,
            r.family,
            r.n,
            r.param.as_deref().unwrap_or("-"),
            r.formula.to_string(),
            oracle,
            r.verdict
        )?;
    }
    Ok(())
}

pub fn write_summary<W: Write>(mut out: W, summary: &Summary) -> io::Result<()> {
    writeln!(
        out,
        "{:<20} {:>8} {:>8} {:>13}",
        "claim", "pass", "fail", "inconclusive"
    )?;
    for (claim, [pass, fail, inconclusive]) in &summary.counts {
        writeln!(out, "{claim:<20} {pass:>8} {fail:>8} {inconclusive:>13}")?;
    }
    Ok(())
}
