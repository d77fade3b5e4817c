//! Library side of the `roegen` binary: scenario documents, the
//! state-variable dictionary, output plumbing and the subcommand
//! handlers. Kept as a library so integration tests can drive the same
//! code paths the binary uses.

pub mod commands;
pub mod dictionary;
pub mod error;
pub mod groupcheck;
pub mod log;
pub mod output;
pub mod scenario;
