//! Report types and renderers shared between the `cycleform` binary and
//! its integration tests.

pub mod render;
pub mod report;
