//! The eleven mosaic tiles and their connection profiles.
//!
//! A tile edge carries a *connection point* when a strand drawn on the tile
//! ends at the midpoint of that edge. The set of edges carrying connection
//! points is the tile's [`ConnectionProfile`], packed into four bits as
//! `N E S W` (north is bit 3, west is bit 0).
//!
//! Tiles are indexed as follows:
//!
//! | index | kind       | connection points | glyph |
//! |-------|------------|-------------------|-------|
//! | 0     | blank      | none              | `·`   |
//! | 1     | arc        | S, W              | `┐`   |
//! | 2     | arc        | S, E              | `┌`   |
//! | 3     | arc        | N, E              | `└`   |
//! | 4     | arc        | N, W              | `┘`   |
//! | 5     | line       | W, E              | `─`   |
//! | 6     | line       | N, S              | `│`   |
//! | 7     | double arc | S–W and N–E       | `)`   |
//! | 8     | double arc | N–W and S–E       | `(`   |
//! | 9     | crossing   | vertical over     | `╫`   |
//! | 10    | crossing   | horizontal over   | `╪`   |

use std::fmt;

/// Presence of connection points on the four edges of a tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ConnectionProfile(u8);

impl ConnectionProfile {
    pub const NORTH: u8 = 0b1000;
    pub const EAST: u8 = 0b0100;
    pub const SOUTH: u8 = 0b0010;
    pub const WEST: u8 = 0b0001;

    pub const EMPTY: ConnectionProfile = ConnectionProfile(0);
    pub const FULL: ConnectionProfile = ConnectionProfile(0b1111);

    /// Builds a profile from the low four bits of `bits`.
    pub const fn from_bits(bits: u8) -> Self {
        ConnectionProfile(bits & 0b1111)
    }

    pub const fn from_flags(north: bool, east: bool, south: bool, west: bool) -> Self {
        ConnectionProfile(
            (north as u8) << 3 | (east as u8) << 2 | (south as u8) << 1 | (west as u8),
        )
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn north(self) -> bool {
        self.0 & Self::NORTH != 0
    }

    pub const fn east(self) -> bool {
        self.0 & Self::EAST != 0
    }

    pub const fn south(self) -> bool {
        self.0 & Self::SOUTH != 0
    }

    pub const fn west(self) -> bool {
        self.0 & Self::WEST != 0
    }

    /// Number of connection points.
    pub const fn count(self) -> u32 {
        self.0.count_ones()
    }

    /// Reflection across the main diagonal: north and west swap, east and
    /// south swap.
    pub const fn transposed(self) -> Self {
        Self::from_flags(self.west(), self.south(), self.east(), self.north())
    }

    /// All sixteen profiles in bit order.
    pub fn all() -> impl Iterator<Item = ConnectionProfile> {
        (0u8..16).map(ConnectionProfile)
    }
}

impl fmt::Display for ConnectionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{N:{},E:{},S:{},W:{}}}",
            self.north() as u8,
            self.east() as u8,
            self.south() as u8,
            self.west() as u8
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TileKind {
    Blank,
    Arc,
    Line,
    DoubleArc,
    Crossing,
}

/// Which strand passes over at a crossing tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OverStrand {
    None,
    Vertical,
    Horizontal,
}

/// One of the eleven mosaic tiles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile(u8);

const N: u8 = ConnectionProfile::NORTH;
const E: u8 = ConnectionProfile::EAST;
const S: u8 = ConnectionProfile::SOUTH;
const W: u8 = ConnectionProfile::WEST;

const PROFILES: [u8; 11] = [
    0,
    S | W,
    S | E,
    N | E,
    N | W,
    W | E,
    N | S,
    N | E | S | W,
    N | E | S | W,
    N | E | S | W,
    N | E | S | W,
];

const GLYPHS: [char; 11] = ['·', '┐', '┌', '└', '┘', '─', '│', ')', '(', '╫', '╪'];

// Reflection across the main diagonal.
const TRANSPOSED: [u8; 11] = [0, 3, 2, 1, 4, 6, 5, 7, 8, 10, 9];

impl Tile {
    pub const COUNT: usize = 11;

    pub const BLANK: Tile = Tile(0);
    pub const ARC_SW: Tile = Tile(1);
    pub const ARC_SE: Tile = Tile(2);
    pub const ARC_NE: Tile = Tile(3);
    pub const ARC_NW: Tile = Tile(4);
    pub const LINE_WE: Tile = Tile(5);
    pub const LINE_NS: Tile = Tile(6);
    pub const DOUBLE_ARC_SW_NE: Tile = Tile(7);
    pub const DOUBLE_ARC_NW_SE: Tile = Tile(8);
    pub const CROSSING_VERTICAL_OVER: Tile = Tile(9);
    pub const CROSSING_HORIZONTAL_OVER: Tile = Tile(10);

    pub const ALL: [Tile; 11] = [
        Tile(0),
        Tile(1),
        Tile(2),
        Tile(3),
        Tile(4),
        Tile(5),
        Tile(6),
        Tile(7),
        Tile(8),
        Tile(9),
        Tile(10),
    ];

    /// Returns the tile with the given index, if it is in `0..=10`.
    pub const fn new(index: u8) -> Option<Tile> {
        if (index as usize) < Self::COUNT {
            Some(Tile(index))
        } else {
            None
        }
    }

    pub const fn index(self) -> u8 {
        self.0
    }

    pub const fn profile(self) -> ConnectionProfile {
        ConnectionProfile(PROFILES[self.0 as usize])
    }

    pub const fn kind(self) -> TileKind {
        match self.0 {
            0 => TileKind::Blank,
            1..=4 => TileKind::Arc,
            5 | 6 => TileKind::Line,
            7 | 8 => TileKind::DoubleArc,
            _ => TileKind::Crossing,
        }
    }

    pub const fn over_strand(self) -> OverStrand {
        match self.0 {
            9 => OverStrand::Vertical,
            10 => OverStrand::Horizontal,
            _ => OverStrand::None,
        }
    }

    /// The tile obtained by reflecting this one across the main diagonal.
    pub const fn transposed(self) -> Tile {
        Tile(TRANSPOSED[self.0 as usize])
    }

    pub const fn glyph(self) -> char {
        GLYPHS[self.0 as usize]
    }

    pub fn from_glyph(c: char) -> Option<Tile> {
        GLYPHS.iter().position(|&g| g == c).map(|i| Tile(i as u8))
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Number of canonical tiles having connection profile `p`.
///
/// This is 1 for the empty profile, 1 for each profile with exactly two
/// connection points, 4 for the full profile and 0 for odd profiles.
pub fn tile_weight(p: ConnectionProfile) -> u32 {
    match p.count() {
        0 | 2 => 1,
        4 => 4,
        _ => 0,
    }
}

/// A table of tiles available to the brute-force counters.
///
/// The canonical table holds all eleven tiles. Other tables exist so that
/// verification can be exercised against a deliberately damaged census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileSet {
    tiles: Vec<Tile>,
    weights: [u32; 16],
}

impl TileSet {
    pub fn canonical() -> Self {
        Self::from_tiles(Tile::ALL.to_vec())
    }

    pub fn from_tiles(mut tiles: Vec<Tile>) -> Self {
        tiles.sort();
        tiles.dedup();
        let mut weights = [0u32; 16];
        for t in &tiles {
            weights[t.profile().bits() as usize] += 1;
        }
        TileSet { tiles, weights }
    }

    /// The canonical table with `tile` removed.
    pub fn without(tile: Tile) -> Self {
        Self::from_tiles(Tile::ALL.iter().copied().filter(|&t| t != tile).collect())
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    /// Number of tiles in this table having profile `p`.
    pub fn weight(&self, p: ConnectionProfile) -> u32 {
        self.weights[p.bits() as usize]
    }

    pub fn is_canonical(&self) -> bool {
        self.tiles == Tile::ALL
    }
}

impl Default for TileSet {
    fn default() -> Self {
        Self::canonical()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles_of_named_tiles() {
        assert_eq!(
            Tile::BLANK.profile(),
            ConnectionProfile::from_flags(false, false, false, false)
        );
        assert_eq!(
            Tile::ARC_SW.profile(),
            ConnectionProfile::from_flags(false, false, true, true)
        );
        assert_eq!(
            Tile::CROSSING_VERTICAL_OVER.profile(),
            ConnectionProfile::FULL
        );
    }

    #[test]
    fn weight_examples() {
        assert_eq!(tile_weight(ConnectionProfile::EMPTY), 1);
        assert_eq!(tile_weight(ConnectionProfile::FULL), 4);
        assert_eq!(
            tile_weight(ConnectionProfile::from_flags(true, false, false, false)),
            0
        );
    }

    #[test]
    fn census() {
        let total: u32 = ConnectionProfile::all().map(tile_weight).sum();
        assert_eq!(total, 11);

        let mut classes = [0u32; 5];
        for t in Tile::ALL {
            let c = t.profile().count();
            assert!(c % 2 == 0, "tile {t} has {c} connection points");
            classes[c as usize] += 1;
        }
        assert_eq!(classes, [1, 0, 6, 0, 4]);

        let set = TileSet::canonical();
        for p in ConnectionProfile::all() {
            assert_eq!(set.weight(p), tile_weight(p), "profile {p}");
        }
    }

    #[test]
    fn kinds_and_over_strands() {
        let kinds: Vec<_> = Tile::ALL.iter().map(|t| t.kind()).collect();
        assert_eq!(kinds.iter().filter(|&&k| k == TileKind::Arc).count(), 4);
        assert_eq!(kinds.iter().filter(|&&k| k == TileKind::Line).count(), 2);
        assert_eq!(
            kinds.iter().filter(|&&k| k == TileKind::DoubleArc).count(),
            2
        );
        assert_eq!(
            kinds.iter().filter(|&&k| k == TileKind::Crossing).count(),
            2
        );
        assert_eq!(
            Tile::CROSSING_VERTICAL_OVER.over_strand(),
            OverStrand::Vertical
        );
        assert_eq!(
            Tile::CROSSING_HORIZONTAL_OVER.over_strand(),
            OverStrand::Horizontal
        );
        assert_eq!(Tile::LINE_NS.over_strand(), OverStrand::None);
    }

    #[test]
    fn transpose_reflects_profiles() {
        for t in Tile::ALL {
            assert_eq!(t.transposed().transposed(), t);
            assert_eq!(t.transposed().profile(), t.profile().transposed());
            assert_eq!(t.transposed().kind(), t.kind());
        }
        assert_eq!(Tile::LINE_WE.transposed(), Tile::LINE_NS);
        assert_eq!(
            Tile::CROSSING_VERTICAL_OVER.transposed(),
            Tile::CROSSING_HORIZONTAL_OVER
        );
    }

    #[test]
    fn glyphs_are_distinct() {
        for t in Tile::ALL {
            assert_eq!(Tile::from_glyph(t.glyph()), Some(t));
        }
    }

    #[test]
    fn damaged_table() {
        let set = TileSet::without(Tile::CROSSING_HORIZONTAL_OVER);
        assert_eq!(set.tiles().len(), 10);
        assert_eq!(set.weight(ConnectionProfile::FULL), 3);
        assert!(!set.is_canonical());
        assert!(TileSet::canonical().is_canonical());
    }
}
