//! Transfer-matrix counting of knot mosaics.
//!
//! For `m >= 3` rows the state matrices `X_k`, `O_k` (of dimension `2^k`)
//! are built by the block recursion
//!
//! ```text
//! X_1 = [1 1]   O_1 = [1 1]   X_{k+1} = [X_k O_k]   O_{k+1} = [O_k   X_k]
//!       [1 1]         [1 4]             [O_k X_k]             [X_k 4 O_k]
//! ```
//!
//! and the number of knot `(m, n)`-mosaics is `2 * sum((X_{m-2} + O_{m-2})^(n-2))`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::matrix::{mat_pow, BigMatrix, PowerStrategy};

/// Default largest `k` for [`build_xo`] (matrices of dimension `2^16`).
pub const DEFAULT_MAX_K: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransferConfig {
    pub max_k: u32,
    pub strategy: PowerStrategy,
}

impl Default for TransferConfig {
    fn default() -> Self {
        TransferConfig {
            max_k: DEFAULT_MAX_K,
            strategy: PowerStrategy::Iterated,
        }
    }
}

/// Builds `(X_k, O_k)`, refusing `k` above `max_k`.
pub fn build_xo(k: u32, max_k: u32) -> Result<(BigMatrix, BigMatrix)> {
    if k == 0 {
        return Err(Error::Domain("X_k and O_k are defined for k >= 1".into()));
    }
    if k > max_k {
        return Err(Error::SizeLimit(format!(
            "k = {k} exceeds the cap of {max_k} (matrices of dimension 2^{k})"
        )));
    }
    let mut x = BigMatrix::from_rows([[1, 1], [1, 1]]);
    let mut o = BigMatrix::from_rows([[1, 1], [1, 4]]);
    for _ in 1..k {
        let next_x = BigMatrix::from_blocks(&x, &o, &o, &x)?;
        let next_o = BigMatrix::from_blocks(&o, &x, &x, &o.scaled(4))?;
        x = next_x;
        o = next_o;
    }
    Ok((x, o))
}

/// The base matrix `X_k + O_k` for `m = k + 2` rows.
pub fn transfer_matrix(m: usize, config: &TransferConfig) -> Result<BigMatrix> {
    if m < 3 {
        return Err(Error::Domain(format!(
            "transfer counting needs m >= 3, got {m}; use the closed forms for m <= 2"
        )));
    }
    let (x, o) = build_xo((m - 2) as u32, config.max_k)?;
    x.add(&o)
}

/// Number of knot `(m, n)`-mosaics for `m >= 3`, `n >= 2`.
pub fn count_transfer(m: usize, n: usize) -> Result<BigUint> {
    count_transfer_with(m, n, &TransferConfig::default())
}

pub fn count_transfer_with(m: usize, n: usize, config: &TransferConfig) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "transfer counting needs n >= 2, got {n}"
        )));
    }
    let base = transfer_matrix(m, config)?;
    let power = mat_pow(&base, (n - 2) as u64, config.strategy);
    Ok(power.entry_sum() * 2u32)
}

/// `D_{m,n}` for `n = 2..=max_n`, sharing the successive powers of the base
/// matrix.
pub fn count_transfer_series(
    m: usize,
    max_n: usize,
    config: &TransferConfig,
) -> Result<Vec<BigUint>> {
    let base = transfer_matrix(m, config)?;
    let mut power = BigMatrix::identity(base.dim());
    let mut out = Vec::new();
    for n in 2..=max_n {
        if n > 2 {
            power = power.mul(&base)?;
        }
        out.push(power.entry_sum() * 2u32);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn first_matrices() {
        let (x1, o1) = build_xo(1, DEFAULT_MAX_K).unwrap();
        assert_eq!(x1, BigMatrix::from_rows([[1, 1], [1, 1]]));
        assert_eq!(o1, BigMatrix::from_rows([[1, 1], [1, 4]]));

        let (x2, o2) = build_xo(2, DEFAULT_MAX_K).unwrap();
        assert_eq!(
            x2,
            BigMatrix::from_rows([[1, 1, 1, 1], [1, 1, 1, 4], [1, 1, 1, 1], [1, 4, 1, 1]])
        );
        assert_eq!(
            o2,
            BigMatrix::from_rows([[1, 1, 1, 1], [1, 4, 1, 1], [1, 1, 4, 4], [1, 1, 4, 16]])
        );
    }

    #[test]
    fn entries_are_powers_of_four() {
        for k in 1..=5u32 {
            let (x, o) = build_xo(k, DEFAULT_MAX_K).unwrap();
            assert_eq!(x.dim(), 1 << k);
            assert_eq!(o.max_entry(), BigUint::from(4u32).pow(k));
            for e in x.entries().iter().chain(o.entries()) {
                let mut v = e.clone();
                while v > BigUint::one() {
                    assert_eq!(&v % 4u32, BigUint::default());
                    v /= 4u32;
                }
                assert_eq!(v, BigUint::one());
            }
        }
    }

    #[test]
    fn domain_and_cap() {
        assert!(matches!(build_xo(0, 16), Err(Error::Domain(_))));
        assert!(matches!(build_xo(5, 4), Err(Error::SizeLimit(_))));
        assert!(matches!(count_transfer(2, 5), Err(Error::Domain(_))));
        assert!(matches!(count_transfer(5, 1), Err(Error::Domain(_))));
        let tight = TransferConfig {
            max_k: 2,
            ..Default::default()
        };
        assert!(matches!(
            count_transfer_with(5, 5, &tight),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_transfer(3, 3).unwrap(), BigUint::from(22u32));
        assert_eq!(count_transfer(4, 4).unwrap(), BigUint::from(2594u32));
        let series = count_transfer_series(4, 6, &TransferConfig::default()).unwrap();
        for (i, d) in series.iter().enumerate() {
            assert_eq!(d, &count_transfer(4, i + 2).unwrap());
        }
    }

    #[test]
    fn binary_strategy_agrees() {
        let binary = TransferConfig {
            strategy: PowerStrategy::Binary,
            ..Default::default()
        };
        for n in 2..8 {
            assert_eq!(
                count_transfer(5, n).unwrap(),
                count_transfer_with(5, n, &binary).unwrap()
            );
        }
    }
}
