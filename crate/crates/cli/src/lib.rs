//! Command-line front end for the finite Rickart/Baer property engine:
//! serialization formats, the builtin corpus, the theorem registry and
//! the suite runner. The binary in `main.rs` is a thin wrapper over
//! [`runner`].

pub mod builtins;
pub mod formats;
pub mod registry;
pub mod report;
pub mod runner;
