pub mod ast;
pub mod eval;
pub mod parser;
pub mod commands;
pub mod report;

pub use commands::{execute, run, Cli, Command, Outcome, Source};
pub use report::{Report, Status, Table, SCHEMA};
