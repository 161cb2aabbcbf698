//! Exact symbolic kernel for the quantum group `GL_{p,q}(2)`, its dual algebra
//! `U_{p,q}(gl(2))`, and the universal T-matrix exponential map between them.

pub mod error;
pub mod expmap;
pub mod golden;
pub mod matrix;
pub mod ncrewrite;
pub mod qalg_u;
pub mod qgroup_a;
pub mod qscalar;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
