//! Fixed-point decimal output and correctly rounded integer roots.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// A nonnegative decimal `scaled / 10^scale`, printed with exactly `scale`
/// fractional digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedDecimal {
    scaled: BigUint,
    scale: u32,
}

impl FixedDecimal {
    pub fn new(scaled: BigUint, scale: u32) -> Self {
        FixedDecimal { scaled, scale }
    }

    pub fn scaled(&self) -> &BigUint {
        &self.scaled
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Rounds half-to-even to `digits` fractional digits. Only reduces
    /// precision; asking for more digits returns the value unchanged.
    pub fn round_to(&self, digits: u32) -> FixedDecimal {
        if digits >= self.scale {
            return self.clone();
        }
        let divisor = pow10(self.scale - digits);
        let (q, r) = self.scaled.div_rem(&divisor);
        let twice = r * 2u32;
        let up = twice > divisor || (twice == divisor && q.is_odd());
        FixedDecimal::new(if up { q + 1u32 } else { q }, digits)
    }

    /// Lossy conversion, for comparisons in tests and diagnostics.
    pub fn to_f64(&self) -> f64 {
        self.scaled.to_f64().unwrap_or(f64::INFINITY) / 10f64.powi(self.scale as i32)
    }
}

impl fmt::Display for FixedDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale == 0 {
            return write!(f, "{}", self.scaled);
        }
        let (int, frac) = self.scaled.div_rem(&pow10(self.scale));
        write!(
            f,
            "{int}.{:0>width$}",
            frac.to_string(),
            width = self.scale as usize
        )
    }
}

pub(crate) fn pow10(e: u32) -> BigUint {
    BigUint::from(10u32).pow(e)
}

/// `log2(x)` from the bit length and the leading 53 bits of `x`.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(53);
    let top = (x >> shift).to_f64().expect("53-bit value fits in f64");
    shift as f64 + top.log2()
}

/// `value^(1/k)` rounded half-to-even to `digits` fractional digits.
///
/// A logarithm estimate seeds the result, which is then settled by exact
/// integer comparisons, so the rounding is always correct.
pub fn nth_root_decimal(value: &BigUint, k: u32, digits: u32) -> FixedDecimal {
    assert!(k >= 1, "root index must be positive");
    assert!(!value.is_zero(), "root of zero is not supported");
    let target = value * pow10(digits).pow(k);

    let estimate = (log2_big(value) / k as f64).exp2() * 10f64.powi(digits as i32);
    let mut floor = if estimate.is_finite() && estimate < 2f64.powi(60) {
        BigUint::from(estimate.max(0.0) as u64)
    } else {
        target.nth_root(k)
    };
    // Settle floor(target^(1/k)) exactly; fall back to the integer root if
    // the estimate is further off than expected.
    let mut steps = 0;
    loop {
        if floor.pow(k) > target {
            floor -= 1u32;
        } else if (&floor + 1u32).pow(k) <= target {
            floor += 1u32;
        } else {
            break;
        }
        steps += 1;
        if steps > 4 {
            floor = target.nth_root(k);
            break;
        }
    }

    // Round: compare (2*floor + 1)^k against target * 2^k.
    let mid = (&floor * 2u32 + 1u32).pow(k);
    let scaled_target = &target << k as usize;
    let up = mid < scaled_target || (mid == scaled_target && floor.is_odd());
    FixedDecimal::new(if up { floor + BigUint::one() } else { floor }, digits)
}

/// `count^(1/n^2)` rounded to `digits` fractional digits.
pub fn root_estimate(count: &BigUint, n: u32, digits: u32) -> FixedDecimal {
    nth_root_decimal(count, n * n, digits)
}
