//! Per-`n` growth records: `D_n`, `D_n^(1/n^2)` and the bounds around `D_n`.

use num_bigint::BigUint;

use crate::bounds::{hllo_bounds, lower_bound_count, upper_bound_count, Rational};
use crate::count::{count, Method};
use crate::decimal::{root_estimate, FixedDecimal};
use crate::error::{Error, Result};

/// Default largest `n` accepted by [`growth_table`].
pub const GROWTH_MAX_N: u32 = 11;

/// Fractional digits reported for `d_n`.
pub const GROWTH_DIGITS: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthReport {
    pub n: u32,
    pub count: BigUint,
    /// `count^(1/n^2)` rounded to [`GROWTH_DIGITS`] decimals.
    pub growth: FixedDecimal,
    /// Lower and upper bound counts, present for `n >= 3`.
    pub bounds: Option<(BigUint, BigUint)>,
    /// The earlier rational bounds, present for `n >= 3`.
    pub hllo: Option<(Rational, Rational)>,
}

impl GrowthReport {
    pub fn for_n(n: u32) -> Result<Self> {
        let count = count(n as usize, n as usize, Method::Auto)?;
        let growth = root_estimate(&count, n, GROWTH_DIGITS);
        let (bounds, hllo) = if n >= 3 {
            (
                Some((lower_bound_count(n)?, upper_bound_count(n)?)),
                Some(hllo_bounds(n)?),
            )
        } else {
            (None, None)
        };
        Ok(GrowthReport {
            n,
            count,
            growth,
            bounds,
            hllo,
        })
    }
}

pub fn growth_table(max_n: u32) -> Result<Vec<GrowthReport>> {
    growth_table_with_cap(max_n, GROWTH_MAX_N)
}

pub fn growth_table_with_cap(max_n: u32, cap: u32) -> Result<Vec<GrowthReport>> {
    if max_n == 0 {
        return Err(Error::Domain("max_n must be at least 1".into()));
    }
    if max_n > cap {
        return Err(Error::SizeLimit(format!(
            "max_n = {max_n} exceeds the cap of {cap}"
        )));
    }
    (1..=max_n).map(GrowthReport::for_n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_six_and_eight() {
        let table = growth_table(8).unwrap();
        assert_eq!(table.len(), 8);
        assert_eq!(table[5].count, "101393411126".parse::<BigUint>().unwrap());
        assert_eq!(table[5].growth.round_to(3).to_string(), "2.022");
        assert_eq!(
            table[7].count,
            "234855052870954505606714".parse::<BigUint>().unwrap()
        );
        assert_eq!(table[7].growth.round_to(3).to_string(), "2.318");
        assert!(table[0].bounds.is_none() && table[1].hllo.is_none());
        assert!(table[2].bounds.is_some());
        for w in table.windows(2) {
            assert!(w[0].growth < w[1].growth);
        }
    }

    #[test]
    fn caps() {
        assert!(matches!(growth_table(0), Err(Error::Domain(_))));
        assert!(matches!(growth_table(12), Err(Error::SizeLimit(_))));
        assert_eq!(growth_table_with_cap(2, 2).unwrap().len(), 2);
    }
}
