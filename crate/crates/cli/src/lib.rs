//! JSON game documents and the `dowen` command line.

pub mod commands;
pub mod document;
