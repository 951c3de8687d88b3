//! Library side of the `hypercenter` command: instance files, reports and
//! operation dispatch.

pub mod instance;
pub mod report;
pub mod run;
