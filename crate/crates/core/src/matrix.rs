//! Dense square matrices of arbitrary-precision nonnegative integers.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BigMatrix {
    dim: usize,
    entries: Vec<BigUint>,
}

impl BigMatrix {
    pub fn zeros(dim: usize) -> Self {
        BigMatrix {
            dim,
            entries: vec![BigUint::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigUint::one();
        }
        m
    }

    /// Builds a matrix from row-major entries; `entries.len()` must be a
    /// perfect square.
    pub fn from_entries(entries: Vec<BigUint>) -> Result<Self> {
        let dim = (entries.len() as f64).sqrt().round() as usize;
        if dim * dim != entries.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} entries do not form a square matrix",
                entries.len()
            )));
        }
        Ok(BigMatrix { dim, entries })
    }

    pub fn from_rows<const D: usize>(rows: [[u64; D]; D]) -> Self {
        BigMatrix {
            dim: D,
            entries: rows.iter().flatten().map(|&x| BigUint::from(x)).collect(),
        }
    }

    /// Assembles `[[a, b], [c, d]]` from four blocks of equal dimension.
    pub fn from_blocks(a: &BigMatrix, b: &BigMatrix, c: &BigMatrix, d: &BigMatrix) -> Result<Self> {
        let k = a.dim;
        if [b.dim, c.dim, d.dim].iter().any(|&x| x != k) {
            return Err(Error::DimensionMismatch(format!(
                "blocks have dimensions {}, {}, {}, {}",
                a.dim, b.dim, c.dim, d.dim
            )));
        }
        let dim = 2 * k;
        let mut entries = Vec::with_capacity(dim * dim);
        for (left, right) in [(a, b), (c, d)] {
            for r in 0..k {
                entries.extend_from_slice(left.row(r));
                entries.extend_from_slice(right.row(r));
            }
        }
        Ok(BigMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &BigUint {
        &self.entries[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[BigUint] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    /// Sum of all entries.
    pub fn entry_sum(&self) -> BigUint {
        self.entries.iter().sum()
    }

    pub fn scaled(&self, factor: u32) -> BigMatrix {
        BigMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn add(&self, other: &BigMatrix) -> Result<BigMatrix> {
        self.check_conformable(other)?;
        Ok(BigMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &BigMatrix) -> Result<BigMatrix> {
        mat_mul(self, other)
    }

    pub fn pow(&self, exp: u64) -> BigMatrix {
        mat_pow(self, exp, PowerStrategy::Iterated)
    }

    pub fn max_entry(&self) -> BigUint {
        self.entries.iter().max().cloned().unwrap_or_default()
    }

    fn check_conformable(&self, other: &BigMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.dim, self.dim, other.dim, other.dim
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for BigMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.dim).map(|r| {
                self.row(r)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
            }))
            .finish()
    }
}

/// How [`mat_pow`] evaluates a power.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PowerStrategy {
    /// Repeated multiplication by the base; keeps two matrices alive.
    #[default]
    Iterated,
    /// Square-and-multiply.
    Binary,
}

// Rows handed to one rayon task.
const ROW_BLOCK: usize = 4;

/// Exact product `a * b`.
pub fn mat_mul(a: &BigMatrix, b: &BigMatrix) -> Result<BigMatrix> {
    a.check_conformable(b)?;
    let dim = a.dim;
    let mut out = BigMatrix::zeros(dim);
    if dim == 0 {
        return Ok(out);
    }
    // Transfer matrices have small entries; multiplying by a machine word
    // avoids a big-by-big product per term.
    let small: Option<Vec<u64>> = b.entries.iter().map(|x| x.to_u64()).collect();
    out.entries
        .par_chunks_mut(dim * ROW_BLOCK)
        .enumerate()
        .for_each(|(block, rows)| {
            for (offset, acc) in rows.chunks_mut(dim).enumerate() {
                let i = block * ROW_BLOCK + offset;
                for (k, aik) in a.row(i).iter().enumerate() {
                    if aik.is_zero() {
                        continue;
                    }
                    match &small {
                        Some(words) => {
                            for (acc, &w) in acc.iter_mut().zip(&words[k * dim..(k + 1) * dim]) {
                                if w != 0 {
                                    *acc += aik * w;
                                }
                            }
                        }
                        None => {
                            for (acc, bkj) in acc.iter_mut().zip(b.row(k)) {
                                if !bkj.is_zero() {
                                    *acc += aik * bkj;
                                }
                            }
                        }
                    }
                }
            }
        });
    Ok(out)
}

/// Exact power `a^exp`; the zeroth power is the identity.
pub fn mat_pow(a: &BigMatrix, exp: u64, strategy: PowerStrategy) -> BigMatrix {
    let mul = |x: &BigMatrix, y: &BigMatrix| mat_mul(x, y).expect("square matrices of equal size");
    match strategy {
        PowerStrategy::Iterated => {
            let mut acc = BigMatrix::identity(a.dim);
            for i in 0..exp {
                acc = if i == 0 { a.clone() } else { mul(&acc, a) };
            }
            acc
        }
        PowerStrategy::Binary => {
            let mut result: Option<BigMatrix> = None;
            let mut base = a.clone();
            let mut e = exp;
            while e > 0 {
                if e & 1 == 1 {
                    result = Some(match result {
                        None => base.clone(),
                        Some(r) => mul(&r, &base),
                    });
                }
                e >>= 1;
                if e > 0 {
                    base = mul(&base, &base);
                }
            }
            result.unwrap_or_else(|| BigMatrix::identity(a.dim))
        }
    }
}
