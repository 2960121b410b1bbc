//! Library side of the `pcg` binary: sweep ranges, claim dispatch and
//! verification reports.

pub mod claims;
pub mod range;
pub mod report;

use pcg_core::Error;

pub use claims::{run_claim, Budgets, Claim};
pub use range::ParamRange;
pub use report::{Record, Summary, Value, Verdict};

/// Process exit codes.
pub mod exit {
    pub const PASS: u8 = 0;
    pub const FAIL: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const CAPACITY: u8 = 3;
    pub const INCONCLUSIVE: u8 = 4;
}

/// Maps a core error onto the exit-code contract.
pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidArgument(_)
        | Error::InvalidGroup { .. }
        | Error::ElementOutOfRange { .. }
        | Error::VertexOutOfRange { .. }
        | Error::Overflow(_) => exit::USAGE,
        Error::Capacity { .. } => exit::CAPACITY,
        Error::BudgetExceeded(_) => exit::INCONCLUSIVE,
        Error::ShapeMismatch(_) | Error::Invariant(_) => exit::FAIL,
    }
}
