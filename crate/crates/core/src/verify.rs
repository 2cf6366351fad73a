//! Cross-checks between the counting routes and the properties the counts
//! must satisfy.

use std::fmt;

use num_bigint::BigInt;
use num_bigint::BigUint;
use num_rational::BigRational;

use crate::bounds::{hllo_bounds, lower_bound_count, upper_bound_count};
use crate::count::closed_form;
use crate::error::{Error, Result};
use crate::oracle::{
    count_backtrack_with, count_frontier_with, BACKTRACK_MAX_AREA, FRONTIER_MAX_COLS,
};
use crate::tile::TileSet;
use crate::transfer::{count_transfer_series, TransferConfig};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_m: usize,
    pub max_n: usize,
    /// Largest `m * n` checked against the backtracking counter.
    pub exhaustive_area: usize,
    /// Tiles available to the brute-force counters. The transfer matrices
    /// always describe the canonical tiles.
    pub tiles: TileSet,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_m: 7,
            max_n: 10,
            exhaustive_area: 16,
            tiles: TileSet::canonical(),
        }
    }
}

/// Largest `max_m` accepted by [`verify`].
pub const VERIFY_MAX_M: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    /// The first failing case, if any.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(why) => write!(f, "FAIL {} ({} cases): {}", self.name, self.cases, why),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn finish(self, report: &mut VerifyReport) {
        if self.cases > 0 {
            report.checks.push(Check {
                name: self.name,
                cases: self.cases,
                failure: self.failure,
            });
        }
    }
}

pub fn verify(config: &VerifyConfig) -> Result<VerifyReport> {
    let VerifyConfig {
        max_m,
        max_n,
        exhaustive_area,
        ref tiles,
    } = *config;
    if max_m == 0 || max_n == 0 {
        return Err(Error::Domain("verification limits must be positive".into()));
    }
    if max_m > VERIFY_MAX_M {
        return Err(Error::SizeLimit(format!(
            "max_m = {max_m} exceeds {VERIFY_MAX_M}"
        )));
    }
    if max_n > FRONTIER_MAX_COLS {
        return Err(Error::SizeLimit(format!(
            "max_n = {max_n} exceeds {FRONTIER_MAX_COLS}"
        )));
    }
    if exhaustive_area > BACKTRACK_MAX_AREA {
        return Err(Error::SizeLimit(format!(
            "exhaustive_area = {exhaustive_area} exceeds {BACKTRACK_MAX_AREA}"
        )));
    }

    // table[m - 1][n - 1] = frontier count with the configured tiles.
    let mut table = Vec::with_capacity(max_m);
    for m in 1..=max_m {
        let row = (1..=max_n)
            .map(|n| count_frontier_with(tiles, m, n))
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    let at = |m: usize, n: usize| -> &BigUint { &table[m - 1][n - 1] };
    let cells = || (1..=max_m).flat_map(|m| (1..=max_n).map(move |n| (m, n)));

    let mut report = VerifyReport::default();

    let mut t = Tally::new("closed forms D(1,n) = 1, D(2,n) = 2^(n-1)");
    for (m, n) in cells().filter(|&(m, _)| m <= 2) {
        let expected = closed_form(m, n).expect("m <= 2");
        t.record(*at(m, n) == expected, || {
            format!(
                "m={m} n={n}: frontier {} != closed form {expected}",
                at(m, n)
            )
        });
    }
    t.finish(&mut report);

    let mut t = Tally::new("backtrack = frontier");
    for (m, n) in cells().filter(|&(m, n)| m * n <= exhaustive_area) {
        let bt = count_backtrack_with(tiles, m, n)?;
        t.record(bt == *at(m, n), || {
            format!("m={m} n={n}: backtrack {bt} != frontier {}", at(m, n))
        });
    }
    t.finish(&mut report);

    let mut t = Tally::new("transfer = frontier");
    if max_n >= 2 {
        for m in 3..=max_m {
            let series = count_transfer_series(m, max_n, &TransferConfig::default())?;
            for (i, tr) in series.iter().enumerate() {
                let n = i + 2;
                t.record(tr == at(m, n), || {
                    format!("m={m} n={n}: transfer {tr} != frontier {}", at(m, n))
                });
            }
        }
    }
    t.finish(&mut report);

    let mut t = Tally::new("symmetry D(m,n) = D(n,m)");
    for (m, n) in cells().filter(|&(m, n)| m < n && n <= max_m && m <= max_n) {
        t.record(at(m, n) == at(n, m), || {
            format!("m={m} n={n}: {} != {}", at(m, n), at(n, m))
        });
    }
    t.finish(&mut report);

    let mut t = Tally::new("supermultiplicativity");
    for m in 1..=max_m {
        for n1 in 1..max_n {
            for n2 in 1..=max_n - n1 {
                let product = at(m, n1) * at(m, n2);
                t.record(*at(m, n1 + n2) >= product, || {
                    format!(
                        "D({m},{}) = {} < D({m},{n1}) * D({m},{n2}) = {product}",
                        n1 + n2,
                        at(m, n1 + n2)
                    )
                });
            }
        }
    }
    for n in 1..=max_n {
        for m1 in 1..max_m {
            for m2 in 1..=max_m - m1 {
                let product = at(m1, n) * at(m2, n);
                t.record(*at(m1 + m2, n) >= product, || {
                    format!(
                        "D({},{n}) = {} < D({m1},{n}) * D({m2},{n}) = {product}",
                        m1 + m2,
                        at(m1 + m2, n)
                    )
                });
            }
        }
    }
    t.finish(&mut report);

    let mut t = Tally::new("evenness for m, n >= 2");
    for (m, n) in cells().filter(|&(m, n)| m >= 2 && n >= 2) {
        t.record(at(m, n) % 2u32 == BigUint::default(), || {
            format!("m={m} n={n}: {} is odd", at(m, n))
        });
    }
    t.finish(&mut report);

    let mut t = Tally::new("bound sandwiches");
    for n in 3..=max_m.min(max_n) {
        let d = at(n, n);
        let lower = lower_bound_count(n as u32)?;
        let upper = upper_bound_count(n as u32)?;
        t.record(lower <= *d && *d <= upper, || {
            format!("n={n}: {d} not in [{lower}, {upper}]")
        });
        let (lo, hi) = hllo_bounds(n as u32)?;
        let exact = BigRational::from_integer(BigInt::from(d.clone()));
        t.record(lo <= exact && exact <= hi, || {
            format!("n={n}: {d} not in [{lo}, {hi}]")
        });
    }
    t.finish(&mut report);

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tile::Tile;

    #[test]
    fn defaults_pass() {
        let report = verify(&VerifyConfig::default()).unwrap();
        for c in &report.checks {
            assert!(c.passed(), "{c}");
        }
        assert_eq!(report.checks.len(), 7);
    }

    #[test]
    fn two_by_two_limits_only_closed_forms() {
        let config = VerifyConfig {
            max_m: 2,
            max_n: 2,
            ..Default::default()
        };
        let report = verify(&config).unwrap();
        assert!(report.all_passed());
        let names: Vec<_> = report.checks.iter().map(|c| c.name).collect();
        assert!(!names.contains(&"transfer = frontier"));
        assert!(!names.contains(&"bound sandwiches"));
    }

    #[test]
    fn damaged_tile_table_fails() {
        let config = VerifyConfig {
            max_m: 4,
            max_n: 4,
            tiles: TileSet::without(Tile::CROSSING_HORIZONTAL_OVER),
            ..Default::default()
        };
        let report = verify(&config).unwrap();
        assert!(!report.all_passed());
        let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed()).collect();
        assert!(
            failed.iter().any(|c| c.name == "transfer = frontier"),
            "{failed:?}"
        );
        assert!(failed[0].to_string().starts_with("FAIL"));
    }

    #[test]
    fn limits_are_validated() {
        let bad = |f: fn(&mut VerifyConfig)| {
            let mut c = VerifyConfig::default();
            f(&mut c);
            verify(&c).is_err()
        };
        assert!(bad(|c| c.max_m = 0));
        assert!(bad(|c| c.max_m = 13));
        assert!(bad(|c| c.max_n = 25));
        assert!(bad(|c| c.exhaustive_area = 21));
    }
}
