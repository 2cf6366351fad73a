//! Lower and upper bounds on `D_n` and on the growth constant.
//!
//! The lower family keeps only the `(2,2)`-quadrant `4 O_k` of the state
//! recursion, which leaves a single nonzero entry `4^k`. The upper family
//! also scales the lower-right quadrant of `Xbar_{k+1}` by 4; its sums
//! `N_k = Xbar_k + Obar_k` satisfy
//! `N_{k+1} = [[N_k, N_k], [N_k, 4 N_k]]`, so
//! `sum(N_{k+1}^s) = sum(M^s) * sum(N_k^s)` with `M = [[1, 1], [1, 4]]`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::decimal::{pow10, FixedDecimal};
use crate::error::{Error, Result};
use crate::matrix::BigMatrix;

/// Exact rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Largest `n` for which the bound matrices are also built explicitly and
/// compared against the closed forms.
pub const DIRECT_CHECK_MAX_N: u32 = 8;

fn check_n(n: u32) -> Result<()> {
    if n < 3 {
        Err(Error::Domain(format!(
            "bounds are defined for n >= 3, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// `M = [[1, 1], [1, 4]]`.
pub fn base_matrix() -> BigMatrix {
    BigMatrix::from_rows([[1, 1], [1, 4]])
}

/// The lower-bound pair of dimension `2^k`: `Xlow_k` is zero and `Olow_k`
/// has the single entry `4^k` in its last diagonal position.
pub fn lower_matrices(k: u32) -> Result<(BigMatrix, BigMatrix)> {
    if k == 0 {
        return Err(Error::Domain("lower matrices start at k = 1".into()));
    }
    let mut x = BigMatrix::zeros(2);
    let mut o = BigMatrix::from_rows([[0, 0], [0, 4]]);
    for _ in 1..k {
        let zero = BigMatrix::zeros(x.dim());
        let next_x = BigMatrix::from_blocks(&zero, &zero, &zero, &zero)?;
        let next_o = BigMatrix::from_blocks(&zero, &zero, &zero, &o.scaled(4))?;
        x = next_x;
        o = next_o;
    }
    Ok((x, o))
}

/// The upper-bound pair of dimension `2^k`, starting from `[1]`, `[1]` at
/// `k = 0`.
pub fn upper_matrices(k: u32) -> Result<(BigMatrix, BigMatrix)> {
    let mut x = BigMatrix::from_rows([[1]]);
    let mut o = BigMatrix::from_rows([[1]]);
    for _ in 0..k {
        let next_x = BigMatrix::from_blocks(&x, &o, &o, &x.scaled(4))?;
        let next_o = BigMatrix::from_blocks(&o, &x, &x, &o.scaled(4))?;
        x = next_x;
        o = next_o;
    }
    Ok((x, o))
}

/// `N_k = Xbar_k + Obar_k`.
pub fn upper_sum_matrix(k: u32) -> Result<BigMatrix> {
    let (x, o) = upper_matrices(k)?;
    x.add(&o)
}

fn doubled_power_sum(x: &BigMatrix, o: &BigMatrix, exp: u64) -> Result<BigUint> {
    Ok(x.add(o)?.pow(exp).entry_sum() * 2u32)
}

/// `2 * 4^((n-2)^2)`.
pub fn lower_bound_closed(n: u32) -> Result<BigUint> {
    check_n(n)?;
    let e = (n - 2) * (n - 2);
    Ok(BigUint::from(4u32).pow(e) * 2u32)
}

/// `2 * sum((Xlow + Olow)^(n-2))` from the explicit matrices.
pub fn lower_bound_direct(n: u32) -> Result<BigUint> {
    check_n(n)?;
    let (x, o) = lower_matrices(n - 2)?;
    doubled_power_sum(&x, &o, (n - 2) as u64)
}

/// Lower bound on `D_n`, cross-checked against the explicit matrices for
/// `n <= 8`.
pub fn lower_bound_count(n: u32) -> Result<BigUint> {
    let closed = lower_bound_closed(n)?;
    if n <= DIRECT_CHECK_MAX_N {
        let direct = lower_bound_direct(n)?;
        if direct != closed {
            return Err(Error::CrossCheck(format!(
                "lower bound for n = {n}: closed form {closed} != matrix value {direct}"
            )));
        }
    }
    Ok(closed)
}

/// `2^(n-1) * sum(M^(n-2))^(n-2)`.
pub fn upper_bound_closed(n: u32) -> Result<BigUint> {
    check_n(n)?;
    let s = n - 2;
    let norm = base_matrix().pow(s as u64).entry_sum();
    Ok(Pow::pow(norm, s) << (n - 1) as usize)
}

/// `2 * sum((Xbar + Obar)^(n-2))` from the explicit matrices.
pub fn upper_bound_direct(n: u32) -> Result<BigUint> {
    check_n(n)?;
    let (x, o) = upper_matrices(n - 2)?;
    doubled_power_sum(&x, &o, (n - 2) as u64)
}

/// Upper bound on `D_n`, cross-checked against the explicit matrices for
/// `n <= 8`.
pub fn upper_bound_count(n: u32) -> Result<BigUint> {
    let closed = upper_bound_closed(n)?;
    if n <= DIRECT_CHECK_MAX_N {
        let direct = upper_bound_direct(n)?;
        if direct != closed {
            return Err(Error::CrossCheck(format!(
                "upper bound for n = {n}: closed form {closed} != matrix value {direct}"
            )));
        }
    }
    Ok(closed)
}

/// Both sides of `sum(N_{k+1}^s) = sum(M^s) * sum(N_k^s)`.
pub fn block_identity_sides(k: u32, s: u64) -> Result<(BigUint, BigUint)> {
    let lhs = upper_sum_matrix(k + 1)?.pow(s).entry_sum();
    let rhs = base_matrix().pow(s).entry_sum() * upper_sum_matrix(k)?.pow(s).entry_sum();
    Ok((lhs, rhs))
}

/// Earlier bounds on `D_n`:
/// `(2/275) (9 * 6^(n-2) + 1)^2 * b^((n-3)^2)` with `b = 2` and `b = 22/5`.
pub fn hllo_bounds(n: u32) -> Result<(Rational, Rational)> {
    check_n(n)?;
    let int = |x: BigUint| BigInt::from(x);
    let core = BigUint::from(6u32).pow(n - 2) * 9u32 + 1u32;
    let coefficient = Rational::new(BigInt::from(2), BigInt::from(275))
        * Rational::from_integer(int(&core * &core));
    let e = (n - 3) * (n - 3);
    let lo = &coefficient * Rational::from_integer(int(BigUint::from(2u32).pow(e)));
    let hi = coefficient
        * Rational::new(
            int(BigUint::from(22u32).pow(e)),
            int(BigUint::from(5u32).pow(e)),
        );
    Ok((lo, hi))
}

/// Prints an integer as itself and anything else as `numer/denom`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub const DELTA_MAX_PRECISION: u32 = 50;

/// Bounds on the growth constant: exactly 4 below and `(5 + sqrt 13) / 2`
/// above, the larger eigenvalue of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaBounds {
    pub lower: u32,
    pub upper: FixedDecimal,
    /// The smaller eigenvalue `(5 - sqrt 13) / 2` at the same precision.
    pub conjugate: FixedDecimal,
}

impl fmt::Display for DeltaBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= delta <= {}", self.lower, self.upper)
    }
}

/// The eigenvalues of `M` are the roots of `x^2 - 5x + 3`. Both are rounded
/// to `precision` decimals using the integer square root of `13 * 100^p`.
pub fn delta_bounds(precision: u32) -> Result<DeltaBounds> {
    if !(1..=DELTA_MAX_PRECISION).contains(&precision) {
        return Err(Error::Domain(format!(
            "precision must be in 1..={DELTA_MAX_PRECISION}, got {precision}"
        )));
    }
    let scale = pow10(precision);
    let radicand = &scale * &scale * 13u32;
    let s = radicand.sqrt();
    // sqrt(13 * 100^p) is irrational, so with a = 5 * 10^p + 1 the nearest
    // integers to (5 +- sqrt 13) / 2 * 10^p are floor((a + s) / 2) and
    // floor((a - s - 1) / 2).
    let a = &scale * 5u32 + 1u32;
    let upper = (&a + &s) >> 1;
    let conjugate = (a - s - 1u32) >> 1;
    Ok(DeltaBounds {
        lower: 4,
        upper: FixedDecimal::new(upper, precision),
        conjugate: FixedDecimal::new(conjugate, precision),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn lower_examples() {
        assert_eq!(lower_bound_count(3).unwrap(), big(8));
        assert_eq!(lower_bound_count(4).unwrap(), big(512));
        assert_eq!(lower_bound_direct(4).unwrap(), big(512));
        assert!(lower_bound_count(3).unwrap() <= big(22));
        assert!(lower_bound_count(2).is_err());
    }

    #[test]
    fn lower_matrix_shape() {
        let (x, o) = lower_matrices(3).unwrap();
        assert_eq!(x.dim(), 8);
        assert!(x.entry_sum().is_zero());
        assert_eq!(o.entry_sum(), big(64));
        assert_eq!(o.get(7, 7), &big(64));
    }

    #[test]
    fn upper_examples() {
        assert_eq!(upper_bound_count(3).unwrap(), big(28));
        assert_eq!(upper_bound_count(4).unwrap(), big(6728));
        assert_eq!(upper_bound_closed(4).unwrap(), big(8 * 29 * 29));
        assert!(upper_bound_count(1).is_err());
    }

    #[test]
    fn upper_matrices_from_zero_and_one_agree() {
        let (x1, o1) = upper_matrices(1).unwrap();
        assert_eq!(x1, base_matrix());
        assert_eq!(o1, base_matrix());
        let n2 = upper_sum_matrix(2).unwrap();
        let n1 = upper_sum_matrix(1).unwrap();
        assert_eq!(
            n2,
            BigMatrix::from_blocks(&n1, &n1, &n1, &n1.scaled(4)).unwrap()
        );
    }

    #[test]
    fn block_identity_small() {
        for k in 1..=3 {
            for s in 1..=3 {
                let (l, r) = block_identity_sides(k, s).unwrap();
                assert_eq!(l, r, "k = {k}, s = {s}");
            }
        }
    }

    #[test]
    fn hllo_examples() {
        let (lo, hi) = hllo_bounds(3).unwrap();
        assert_eq!(lo, Rational::from_integer(22.into()));
        assert_eq!(hi, Rational::from_integer(22.into()));

        let (lo, hi) = hllo_bounds(4).unwrap();
        assert_eq!(lo, Rational::new(16900.into(), 11.into()));
        assert_eq!(format_rational(&lo), "16900/11");
        assert_eq!(hi, Rational::from_integer(3380.into()));
        assert_eq!(format_rational(&hi), "3380");
        assert!(hllo_bounds(2).is_err());
    }

    #[test]
    fn delta_examples() {
        let d = delta_bounds(6).unwrap();
        assert_eq!(d.lower, 4);
        assert_eq!(d.upper.to_string(), "4.302776");
        assert_eq!(d.conjugate.to_string(), "0.697224");
        assert_eq!(d.to_string(), "4 <= delta <= 4.302776");
        assert_eq!(delta_bounds(3).unwrap().upper.to_string(), "4.303");
        assert_eq!(delta_bounds(1).unwrap().upper.to_string(), "4.3");
        assert!(delta_bounds(0).is_err());
        assert!(delta_bounds(51).is_err());
        assert_eq!(
            delta_bounds(50).unwrap().upper.to_string(),
            "4.30277563773199464655961063373524797312564828692262"
        );
    }

    #[test]
    fn bound_growth_rates_increase_below_their_limits() {
        use crate::decimal::root_estimate;
        let limit_upper = delta_bounds(6).unwrap().upper;
        let four = FixedDecimal::new(big(4_000_000), 6);
        let mut prev: Option<(FixedDecimal, FixedDecimal)> = None;
        for n in 3..=9 {
            let lo = root_estimate(&lower_bound_count(n).unwrap(), n, 6);
            let hi = root_estimate(&upper_bound_count(n).unwrap(), n, 6);
            assert!(lo < hi && hi < limit_upper && lo < four, "n = {n}");
            if let Some((plo, phi)) = prev {
                assert!(plo < lo && phi < hi, "n = {n}");
            }
            prev = Some((lo, hi));
        }
    }
}
