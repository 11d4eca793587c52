//! JSON documents, reports and the command implementations behind the `ybx`
//! binary.

pub mod commands;
pub mod corpus;
pub mod document;
pub mod error;
pub mod json;
pub mod render;
