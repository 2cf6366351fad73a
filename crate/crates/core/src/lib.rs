//! Exact enumeration of knot mosaics.
//!
//! A knot `(m, n)`-mosaic is an `m x n` array of the eleven mosaic tiles in
//! which neighbouring tiles agree on their shared edges and no strand reaches
//! the outer boundary. This crate counts them three ways:
//!
//! * [`count_transfer`]: powers of the `2^(m-2)`-dimensional transfer
//!   matrices `X_k + O_k`,
//! * [`count_frontier`]: a dynamic program over the connection points
//!   pending along the scan frontier,
//! * [`count_backtrack`]: depth-first placement of tiles, for small grids,
//!
//! and provides the lower and upper bound constructions for `D_n` together
//! with the growth estimate `D_n^(1/n^2)`.
//!
//! ```
//! use mosaic_core::{count_transfer, count_frontier};
//!
//! assert_eq!(count_transfer(4, 4).unwrap(), 2594u32.into());
//! assert_eq!(count_frontier(4, 4).unwrap(), 2594u32.into());
//! ```

pub mod bounds;
pub mod count;
pub mod decimal;
pub mod error;
pub mod growth;
pub mod matrix;
pub mod mosaic;
pub mod oracle;
pub mod tile;
pub mod transfer;
pub mod verify;

pub use bounds::{
    delta_bounds, hllo_bounds, lower_bound_count, upper_bound_count, DeltaBounds, Rational,
};
pub use count::{closed_form, count, count_with, Method};
pub use decimal::{root_estimate, FixedDecimal};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use growth::{growth_table, GrowthReport};
pub use matrix::{mat_mul, mat_pow, BigMatrix, PowerStrategy};
pub use mosaic::Mosaic;
pub use oracle::{count_backtrack, count_frontier, enumerate, FrontierState};
pub use tile::{tile_weight, ConnectionProfile, OverStrand, Tile, TileKind, TileSet};
pub use transfer::{build_xo, count_transfer, TransferConfig};
pub use verify::{verify, VerifyConfig, VerifyReport};

pub use num_bigint::BigUint;
