//! Exact computer algebra for K-theoretic Q-functions.
//!
//! Symmetric functions are held in truncated power-sum coordinates
//! ([`psym::PSeries`]) over the field ℚ(β) ([`coeff::BetaScalar`]). On top of
//! that sit the β-deformed power sums and q-functions ([`kqfam`]), basis
//! expansions and the even-to-odd reduction of `gp` functions ([`expand`]),
//! the bilinear pairing with its Cauchy kernel ([`pairing`]) and
//! finite-variable specializations used for cancellation and integrality
//! checks ([`finvar`]).

pub mod coeff;
pub mod error;
pub mod expand;
pub mod finvar;
pub mod kqfam;
pub mod pairing;
pub mod partitions;
pub mod psym;
pub mod verify;

pub use coeff::{BetaPoly, BetaScalar, LaurentBetaPoly};
pub use error::{Error, Result};
pub use partitions::{Partition, PartitionClass};
pub use psym::{PSeries, ZSeries};
