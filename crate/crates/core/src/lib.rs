pub mod classify;
pub mod cli;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod framework;
pub mod generic;
pub mod graph;
pub mod render;

pub use error::{Error, Result};
pub use graph::Graph;
