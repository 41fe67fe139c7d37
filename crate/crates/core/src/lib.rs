//! Exact combinatorics around Kreweras complementation.
//!
//! The crate works with three equinumerous families of Catalan objects and
//! the maps between them:
//!
//! * [`NoncrossingPartition`]: the lattice NC(n) and the Kreweras complement
//!   [`kreweras`];
//! * [`PlaneTree`]: plane trees labelled by boundary indices `1..=2n`, the
//!   rerooting map [`phi`] and the bijections [`rho`] / [`rho_bar`] onto NC(n);
//! * chord diagrams ([`Matching`]) and meanders ([`is_meander`]).
//!
//! On top of those sit the closed-form counts of planar trees
//! ([`count`]), the orbit decomposition of NC(n) under the complement
//! ([`orbit`]), exact q-analogues and the cyclic sieving check for the
//! q-Catalan numbers ([`poly`], [`sieve`]), and a harness that runs every
//! invariant exhaustively over a range of `n` ([`verify`]).
//!
//! All arithmetic is exact. Nothing here uses floating point.

pub mod arith;
mod bignum;
pub mod count;
mod error;
pub mod orbit;
pub mod partition;
pub mod poly;
pub mod sieve;
pub mod tree;
pub mod verify;

pub use crate::count::CountReport;
pub use crate::error::{Error, Result};
pub use crate::orbit::OrbitTable;

pub use crate::partition::{
    enumerate_nc, enumerate_nc_capped, is_complement, is_noncrossing, kreweras, nc_join, nc_meet,
    rotate_nc, NoncrossingPartition,
};

pub use crate::poly::IntPolynomial;
pub use crate::sieve::CspReport;
pub use crate::tree::{
    enumerate_trees, enumerate_trees_capped, is_meander, phi, phi_inverse, rho, rho_bar,
    rho_inverse, star_bt, star_tp, Matching, Parity, PlaneTree,
};

/// Largest `n` accepted by exhaustive operations unless the caller raises the cap.
///
/// C_12 = 208012, which every exhaustive pass here handles in well under a second.
pub const DEFAULT_MAX_N: usize = 12;

/// Upper bound on `n` for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cap(pub usize);

impl Cap {
    /// No limit at all. The caller takes responsibility for the running time.
    pub const UNLIMITED: Cap = Cap(usize::MAX);

    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(Error::ResourceLimit { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Cap {
    fn default() -> Self {
        Cap(DEFAULT_MAX_N)
    }
}
