//! Brute-force counters for knot mosaics.
//!
//! Two independent routes are provided: a depth-first search that places
//! actual tiles cell by cell, and a frontier dynamic program over the
//! pending connection points along the boundary between placed and
//! unplaced cells. Neither uses the transfer matrices.

use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mosaic::Mosaic;
use crate::tile::{ConnectionProfile, Tile, TileSet};

/// Largest area accepted by [`count_backtrack`].
pub const BACKTRACK_MAX_AREA: usize = 20;
/// Largest area accepted by [`enumerate`].
pub const ENUMERATE_MAX_AREA: usize = 16;
/// Largest column count accepted by [`count_frontier`].
pub const FRONTIER_MAX_COLS: usize = 24;

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        Err(Error::EmptyDimension { rows: m, cols: n })
    } else {
        Ok(())
    }
}

/// Pending constraints after a prefix of cells has been placed in row-major
/// order.
///
/// Bit `j` of `vertical` is set when the most recently placed tile in column
/// `j` has a connection point on its south edge. The carry (a connection
/// point on the east edge of the last placed tile) is not stored: every tile
/// has an even number of connection points and the outer boundary has none,
/// so the number of connection points crossing the frontier is even and the
/// carry always equals the parity of `vertical`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrontierState {
    pub vertical: u32,
}

impl FrontierState {
    pub fn carry(self) -> bool {
        self.vertical.count_ones() % 2 == 1
    }
}

/// Counts knot `(m, n)`-mosaics by depth-first placement of tiles.
pub fn count_backtrack(m: usize, n: usize) -> Result<BigUint> {
    count_backtrack_with(&TileSet::canonical(), m, n)
}

pub fn count_backtrack_with(tiles: &TileSet, m: usize, n: usize) -> Result<BigUint> {
    check_dims(m, n)?;
    if m * n > BACKTRACK_MAX_AREA {
        return Err(Error::SizeLimit(format!(
            "backtracking is limited to m*n <= {BACKTRACK_MAX_AREA}, got {m}x{n}"
        )));
    }
    let mut count = 0u64;
    let _ = Search::new(tiles, m, n).run(&mut |_| {
        count += 1;
        ControlFlow::<()>::Continue(())
    });
    Ok(BigUint::from(count))
}

/// Lists every knot `(m, n)`-mosaic once, in lexicographic order of the
/// row-major tile indices, stopping after `limit` mosaics if given.
pub fn enumerate(m: usize, n: usize, limit: Option<usize>) -> Result<Vec<Mosaic>> {
    check_dims(m, n)?;
    if m * n > ENUMERATE_MAX_AREA {
        return Err(Error::SizeLimit(format!(
            "enumeration is limited to m*n <= {ENUMERATE_MAX_AREA}, got {m}x{n}"
        )));
    }
    let mut out = Vec::new();
    if limit == Some(0) {
        return Ok(out);
    }
    let tiles = TileSet::canonical();
    let _ = Search::new(&tiles, m, n).run(&mut |cells| {
        out.push(Mosaic::new(m, n, cells.to_vec()).expect("search yields full grids"));
        if limit.is_some_and(|l| out.len() >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(out)
}

struct Search {
    rows: usize,
    cols: usize,
    // Candidate tiles indexed by the required (north, west) flags.
    candidates: [Vec<Tile>; 4],
    grid: Vec<Tile>,
}

impl Search {
    fn new(tiles: &TileSet, rows: usize, cols: usize) -> Self {
        let mut candidates: [Vec<Tile>; 4] = Default::default();
        for &t in tiles.tiles() {
            let p = t.profile();
            candidates[(p.north() as usize) << 1 | p.west() as usize].push(t);
        }
        Search {
            rows,
            cols,
            candidates,
            grid: Vec::with_capacity(rows * cols),
        }
    }

    fn run<B>(&mut self, visit: &mut impl FnMut(&[Tile]) -> ControlFlow<B>) -> ControlFlow<B> {
        let k = self.grid.len();
        if k == self.rows * self.cols {
            return visit(&self.grid);
        }
        let (r, c) = (k / self.cols, k % self.cols);
        let north = r > 0 && self.grid[k - self.cols].profile().south();
        let west = c > 0 && self.grid[k - 1].profile().east();
        let last_row = r + 1 == self.rows;
        let last_col = c + 1 == self.cols;
        for i in 0..self.candidates[(north as usize) << 1 | west as usize].len() {
            let t = self.candidates[(north as usize) << 1 | west as usize][i];
            let p = t.profile();
            if (last_row && p.south()) || (last_col && p.east()) {
                continue;
            }
            self.grid.push(t);
            let flow = self.run(visit);
            self.grid.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Counts knot `(m, n)`-mosaics with the frontier dynamic program.
pub fn count_frontier(m: usize, n: usize) -> Result<BigUint> {
    count_frontier_with(&TileSet::canonical(), m, n)
}

pub fn count_frontier_with(tiles: &TileSet, m: usize, n: usize) -> Result<BigUint> {
    check_dims(m, n)?;
    if n > FRONTIER_MAX_COLS {
        return Err(Error::SizeLimit(format!(
            "frontier counting is limited to n <= {FRONTIER_MAX_COLS} columns, got {n}"
        )));
    }
    // Each cell multiplies the total weight of the frontier vector by at
    // most 5, so 5^(m*n) bounds every entry and picks the narrowest type.
    let bits = (m * n) as f64 * 5f64.log2();
    Ok(if bits < 63.0 {
        frontier_dp::<u64>(tiles, m, n).into()
    } else if bits < 127.0 {
        frontier_dp::<u128>(tiles, m, n).into()
    } else {
        frontier_dp::<BigUint>(tiles, m, n)
    })
}

trait Counter: Clone + Zero + One + Send + Sync {
    fn combine(a: &Self, wa: u32, b: &Self, wb: u32) -> Self;
}

macro_rules! primitive_counter {
    ($t:ty) => {
        impl Counter for $t {
            #[inline]
            fn combine(a: &Self, wa: u32, b: &Self, wb: u32) -> Self {
                a * wa as $t + b * wb as $t
            }
        }
    };
}

primitive_counter!(u64);
primitive_counter!(u128);

impl Counter for BigUint {
    fn combine(a: &Self, wa: u32, b: &Self, wb: u32) -> Self {
        let mut out = BigUint::zero();
        if wa != 0 && !a.is_zero() {
            out += a * wa;
        }
        if wb != 0 && !b.is_zero() {
            out += b * wb;
        }
        out
    }
}

const PARALLEL_THRESHOLD: usize = 1 << 12;

fn frontier_dp<C: Counter>(tiles: &TileSet, m: usize, n: usize) -> C {
    let states = 1usize << n;
    let mut dp = vec![C::zero(); states];
    dp[0] = C::one();
    for r in 0..m {
        for c in 0..n {
            // weights[q][north][south]: tile count for a cell whose other
            // frontier bits have parity q. West equals q ^ north and east
            // equals q ^ south.
            let mut weights = [[[0u32; 2]; 2]; 2];
            for (q, wq) in weights.iter_mut().enumerate() {
                for (north, wn) in wq.iter_mut().enumerate() {
                    for (south, w) in wn.iter_mut().enumerate() {
                        let west = q ^ north;
                        let east = q ^ south;
                        let blocked = (r == 0 && north == 1)
                            || (r + 1 == m && south == 1)
                            || (c == 0 && west == 1)
                            || (c + 1 == n && east == 1);
                        if !blocked {
                            *w = tiles.weight(ConnectionProfile::from_flags(
                                north == 1,
                                east == 1,
                                south == 1,
                                west == 1,
                            ));
                        }
                    }
                }
            }
            step(&mut dp, c, &weights);
        }
    }
    dp.swap_remove(0)
}

fn step<C: Counter>(dp: &mut [C], bit: usize, weights: &[[[u32; 2]; 2]; 2]) {
    let half = 1usize << bit;
    let update = |base: usize, lo: &mut [C], hi: &mut [C]| {
        for (i, (a, b)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
            let q = ((base | i).count_ones() & 1) as usize;
            let w = &weights[q];
            let new_lo = C::combine(a, w[0][0], b, w[1][0]);
            let new_hi = C::combine(a, w[0][1], b, w[1][1]);
            *a = new_lo;
            *b = new_hi;
        }
    };
    let chunk = half * 2;
    if dp.len() < PARALLEL_THRESHOLD {
        for (k, block) in dp.chunks_mut(chunk).enumerate() {
            let (lo, hi) = block.split_at_mut(half);
            update(k * chunk, lo, hi);
        }
    } else if half < PARALLEL_THRESHOLD {
        dp.par_chunks_mut(chunk).enumerate().for_each(|(k, block)| {
            let (lo, hi) = block.split_at_mut(half);
            update(k * chunk, lo, hi);
        });
    } else {
        // Few wide blocks: split each block's halves into aligned pieces.
        let piece = PARALLEL_THRESHOLD;
        for (k, block) in dp.chunks_mut(chunk).enumerate() {
            let (lo, hi) = block.split_at_mut(half);
            lo.par_chunks_mut(piece)
                .zip(hi.par_chunks_mut(piece))
                .enumerate()
                .for_each(|(p, (lo, hi))| update(k * chunk + p * piece, lo, hi));
        }
    }
}
