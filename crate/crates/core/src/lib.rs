#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod error;
pub mod field;
pub mod map;
pub mod matrix;
pub mod pipeline;
pub mod report;
pub mod setfn;
pub mod crossed;
pub mod group;
pub mod shelf;
pub mod structure;
pub mod braided;
pub mod leibniz;
pub mod hopf;
pub mod gyd;
pub mod category;
