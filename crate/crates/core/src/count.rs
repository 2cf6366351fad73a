//! Choosing a counting method for `D_{m,n}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::oracle::{count_backtrack, count_frontier, FRONTIER_MAX_COLS};
use crate::transfer::{count_transfer_with, TransferConfig};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Closed form for a side of length at most 2, frontier otherwise.
    #[default]
    Auto,
    Transfer,
    Frontier,
    Backtrack,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "transfer" => Ok(Method::Transfer),
            "frontier" => Ok(Method::Frontier),
            "backtrack" => Ok(Method::Backtrack),
            other => Err(Error::Domain(format!("unknown method {other:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::Transfer => "transfer",
            Method::Frontier => "frontier",
            Method::Backtrack => "backtrack",
        })
    }
}

/// `D_{1,n} = 1` and `D_{2,n} = 2^(n-1)`, for either orientation.
pub fn closed_form(m: usize, n: usize) -> Option<BigUint> {
    let (short, long) = (m.min(n), m.max(n));
    match short {
        1 => Some(BigUint::one()),
        2 => Some(BigUint::one() << (long - 1)),
        _ => None,
    }
}

/// Largest long side for which [`Method::Auto`] re-derives a closed form
/// with the frontier program.
pub const CLOSED_FORM_CHECK_MAX: usize = 20;

/// Number of knot `(m, n)`-mosaics by the chosen method.
///
/// Counts are symmetric under transposition, so the frontier program always
/// runs with the shorter side as its column count and the transfer matrices
/// with the shorter side as their row count.
pub fn count(m: usize, n: usize, method: Method) -> Result<BigUint> {
    count_with(m, n, method, &TransferConfig::default())
}

/// [`count`] with explicit settings for the transfer route.
pub fn count_with(m: usize, n: usize, method: Method, config: &TransferConfig) -> Result<BigUint> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyDimension { rows: m, cols: n });
    }
    let (short, long) = (m.min(n), m.max(n));
    match method {
        Method::Backtrack => count_backtrack(m, n),
        Method::Frontier => count_frontier(long, short),
        Method::Transfer => count_transfer_with(short, long, config),
        Method::Auto => {
            if let Some(d) = closed_form(short, long) {
                if long <= CLOSED_FORM_CHECK_MAX {
                    let general = count_frontier(long, short)?;
                    if general != d {
                        return Err(Error::CrossCheck(format!(
                            "closed form gives {d} for {m}x{n} but the frontier count is {general}"
                        )));
                    }
                }
                Ok(d)
            } else if short <= FRONTIER_MAX_COLS {
                count_frontier(long, short)
            } else {
                count_transfer_with(short, long, config)
            }
        }
    }
}
