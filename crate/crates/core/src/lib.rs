//! Exact coadjoint geometry for two-step nilpotent Lie algebras.
//!
//! Everything here is computed over arbitrary-precision rationals: Lie
//! brackets, the coadjoint action, skew forms and orbit dimensions, jump
//! indices, invariant polynomials and their derivations, and the cortex
//! variety of the family `g_d` together with constructive witness
//! schedules. The only floating-point path is
//! [`cortex::approximate_cortex`], and its output is never mixed with the
//! exact reports.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so everything can be shared across threads freely.

pub mod coadjoint;
pub mod cortex;
pub mod error;
pub mod exactmath;
pub mod gd;
pub mod liealg;
pub mod sampling;

pub use coadjoint::{Covector, JumpIndexSet, SkewForm};
pub use error::{Error, Result};
pub use exactmath::{frac, parse_rat, rat, Rat, RatMatrix, SparsePoly};
pub use gd::{CortexPolyQd, GdDescriptor, InvariantGenerators};
pub use liealg::{LieAlgebra, Subspace, ValidationReport};
