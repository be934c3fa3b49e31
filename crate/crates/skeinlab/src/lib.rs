//! Std-side companion to `skeinlab-core`: text formats, shared caches, a
//! parallel runner for the invariant checks and the `skeinlab` command line.

pub mod cache;
pub mod cli;
pub mod formats;
pub mod runner;

pub use skeinlab_core as core;
