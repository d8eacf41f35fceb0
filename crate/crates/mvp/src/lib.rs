//! File formats and renderers behind the `mvp` binary: JSON serialization
//! of chamber-weight data and crystal graphs, plus DOT output.

pub mod emit;
pub mod format;
