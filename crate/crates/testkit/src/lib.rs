//! Independent oracles and random generators shared by the test suites.
//!
//! The oracles only read simplex vertex lists; they never call the link or
//! pushforward operators they are used to check.

pub mod enumerate;
pub mod oracle;
pub mod random;
