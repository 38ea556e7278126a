//! Exit codes. Verdict-bearing commands map their answer onto 0/1/2 so scripts can
//! branch without reading the JSON; failures use the sysexits values.

use cubiq_core::{Error, Status};

pub const POSITIVE: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const UNDECIDED: u8 = 2;
pub const USAGE: u8 = 64;
pub const DATA: u8 = 65;
pub const IO: u8 = 74;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure { code: USAGE, message: msg.into() }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        Failure { code: DATA, message: msg.into() }
    }
}

pub fn for_status(status: Status) -> u8 {
    match status {
        Status::Cubiquitous => POSITIVE,
        Status::NotCubiquitous | Status::Obstructed => NEGATIVE,
        Status::Inconclusive => UNDECIDED,
    }
}

pub fn for_error(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } | Error::Overflow => UNDECIDED,
        _ => DATA,
    }
}
