//! Parsers, region scanner and verification harness behind the
//! `nilherm` binary.

pub mod parse;
pub mod scan;
pub mod verify;

pub use parse::{
    emit_equations, emit_form, emit_metric, parse_equations, parse_metric, ParseError,
};
pub use scan::{scan_region, Axis};
pub use verify::{verify, ClaimResult, VerificationReport, CLAIM_IDS};
