//! Ideal-based cozero-divisor graphs of finite commutative rings
//! `Z_{n1} x ... x Z_{nk}`, exact graph invariants, and a harness that checks
//! structural claims about these graphs over every ring and ideal in a bounded
//! universe.

pub mod arith;
pub mod cli;
pub mod error;
pub mod figures;
pub mod graph;
pub mod harness;
pub mod ideal;
pub mod invariants;
pub mod par;
pub mod quotient;
pub mod ring;

pub use error::{Error, Result};
pub use graph::{Family, Label, LabeledGraph};
pub use ideal::{Ideal, IdealContext, IdealFamily, IdealFilter};
pub use par::Parallelism;
pub use quotient::QuotientRing;
pub use ring::{Ring, RingElement};
