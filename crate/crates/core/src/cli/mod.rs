//! Command-line front end, as a library so it can be tested in-process.

pub mod bfile;
pub mod catalog;
pub mod commands;
pub mod config;

pub use catalog::{Catalog, CatalogEntry, Domain, EvalError, Evaluation, Output};
pub use commands::{cmd_errata, cmd_eval, cmd_identify, cmd_list, cmd_seq, exit_status, SeqFormat};
pub use config::{Config, Overrides};
