//! File formats and report envelopes.

pub mod format;
pub mod report;

pub use format::{is_semidirect, AlgebraFile, BracketSpec, Loaded, SemidirectFile};
pub use report::{digest, ReportEnvelope, TOOL_VERSION};
